//! Shared helpers: seeded diagram populations and an unsigned ℤ/2 Khovanov
//! homology written independently of the library's cube.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use vkh::catalog::Catalog;
use vkh::diagram::{Role, Sign, VirtualLinkDiagram};
use vkh::random::random_diagram;

pub fn catalog() -> Vec<VirtualLinkDiagram> {
    Catalog::bundled().diagrams()
}

/// `count` diagrams with 0..=max_n crossings and 1..=3 components.
pub fn random_population(seed: u64, count: usize, max_n: usize) -> Vec<VirtualLinkDiagram> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(0..=max_n);
            let c = rng.gen_range(1..=3);
            random_diagram(&mut rng, n, c)
        })
        .collect()
}

struct Dsu(Vec<usize>);

impl Dsu {
    fn find(&mut self, x: usize) -> usize {
        if self.0[x] != x {
            let r = self.find(self.0[x]);
            self.0[x] = r;
        }
        self.0[x]
    }

    fn join(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        self.0[a] = b;
    }
}

/// Edges of the diagram: edge `e` runs from a pass to the next pass of its
/// component. For each crossing: (over in, over out, under in, under out).
struct Ends {
    edges: usize,
    crossings: Vec<(u32, Sign, [usize; 4])>,
}

fn ends(d: &VirtualLinkDiagram) -> Ends {
    let mut edges = 0;
    let mut map: BTreeMap<u32, (Sign, [usize; 4])> = BTreeMap::new();
    for comp in d.components() {
        let base = edges;
        let n = comp.len();
        if n == 0 {
            edges += 1;
            continue;
        }
        for (k, p) in comp.iter().enumerate() {
            let incoming = base + (k + n - 1) % n;
            let outgoing = base + k;
            let e = map.entry(p.crossing).or_insert((p.sign, [0; 4]));
            let off = if p.role == Role::Over { 0 } else { 2 };
            e.1[off] = incoming;
            e.1[off + 1] = outgoing;
        }
        edges += n;
    }
    Ends { edges, crossings: map.into_iter().map(|(id, (s, e))| (id, s, e)).collect() }
}

/// Cycles of a state as sorted edge sets. Bit k of `mask` picks B at the
/// k-th crossing. A positive crossing's A smoothing joins each incoming end
/// to the other strand's outgoing end.
fn cycles(e: &Ends, mask: u64) -> Vec<BTreeSet<usize>> {
    let mut dsu = Dsu((0..e.edges).collect());
    for (k, &(_, sign, [oi, oo, ui, uo])) in e.crossings.iter().enumerate() {
        let b = mask >> k & 1 == 1;
        let oriented = (sign == Sign::Pos) != b;
        if oriented {
            dsu.join(oi, uo);
            dsu.join(ui, oo);
        } else {
            dsu.join(oi, ui);
            dsu.join(oo, uo);
        }
    }
    let mut groups: BTreeMap<usize, BTreeSet<usize>> = BTreeMap::new();
    for x in 0..e.edges {
        let r = dsu.find(x);
        groups.entry(r).or_default().insert(x);
    }
    let mut out: Vec<_> = groups.into_values().collect();
    out.sort();
    out
}

fn rank_gf2(mut rows: Vec<Vec<u64>>) -> usize {
    let mut rank = 0;
    let words = rows.first().map_or(0, |r| r.len());
    for col in 0..words * 64 {
        let (w, b) = (col / 64, col % 64);
        let Some(p) = (rank..rows.len()).find(|&r| rows[r][w] >> b & 1 == 1) else { continue };
        rows.swap(rank, p);
        let pivot = rows[rank].clone();
        for r in 0..rows.len() {
            if r != rank && rows[r][w] >> b & 1 == 1 {
                for (x, y) in rows[r].iter_mut().zip(&pivot) {
                    *x ^= y;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// ℤ/2 Khovanov homology ranks keyed by shifted (i, j).
pub fn z2_oracle(d: &VirtualLinkDiagram) -> BTreeMap<(i32, i32), usize> {
    let e = ends(d);
    let n = e.crossings.len();
    let n_minus = e.crossings.iter().filter(|c| c.1 == Sign::Neg).count() as i32;
    let n_plus = n as i32 - n_minus;
    let states: Vec<Vec<BTreeSet<usize>>> = (0..1u64 << n).map(|m| cycles(&e, m)).collect();
    // generators: (mask, set of X-labelled cycle indices as a bitmask)
    let mut index: BTreeMap<(u64, u64), usize> = BTreeMap::new();
    let mut by_degree: Vec<Vec<(u64, u64)>> = vec![vec![]; n + 1];
    for (m, cs) in states.iter().enumerate() {
        let i = (m as u64).count_ones() as usize;
        for x in 0..1u64 << cs.len() {
            index.insert((m as u64, x), by_degree[i].len());
            by_degree[i].push((m as u64, x));
        }
    }
    let q_of = |m: u64, x: u64| {
        let k = states[m as usize].len() as i32;
        let xs = x.count_ones() as i32;
        m.count_ones() as i32 + k - 2 * xs + n_plus - 2 * n_minus
    };
    // image of each generator, as target indices
    let image = |m: u64, x: u64| -> Vec<usize> {
        let src = &states[m as usize];
        let mut out: BTreeMap<usize, u32> = BTreeMap::new();
        for k in 0..n {
            if m >> k & 1 == 1 {
                continue;
            }
            let t = m | 1 << k;
            let dst = &states[t as usize];
            let site: BTreeSet<usize> = e.crossings[k].2.iter().copied().collect();
            let touched = |c: &BTreeSet<usize>| !c.is_disjoint(&site);
            let ts: Vec<usize> = (0..src.len()).filter(|&c| touched(&src[c])).collect();
            let tt: Vec<usize> = (0..dst.len()).filter(|&c| touched(&dst[c])).collect();
            let mut base = 0u64;
            for (c, cyc) in dst.iter().enumerate() {
                if !touched(cyc) {
                    let s = src.iter().position(|x| x == cyc).unwrap();
                    if x >> s & 1 == 1 {
                        base |= 1 << c;
                    }
                }
            }
            let mut targets = vec![];
            match (ts.len(), tt.len()) {
                (2, 1) => {
                    let xs = ts.iter().filter(|&&c| x >> c & 1 == 1).count();
                    match xs {
                        0 => targets.push(base),
                        1 => targets.push(base | 1 << tt[0]),
                        _ => {}
                    }
                }
                (1, 2) => {
                    let (a, b) = (1u64 << tt[0], 1u64 << tt[1]);
                    if x >> ts[0] & 1 == 1 {
                        targets.push(base | a | b);
                    } else {
                        targets.push(base | a);
                        targets.push(base | b);
                    }
                }
                _ => {}
            }
            for tx in targets {
                *out.entry(index[&(t, tx)]).or_insert(0) ^= 1;
            }
        }
        out.into_iter().filter(|e| e.1 == 1).map(|e| e.0).collect()
    };
    let mut ranks: BTreeMap<(usize, i32), usize> = BTreeMap::new();
    let mut dims: BTreeMap<(usize, i32), usize> = BTreeMap::new();
    for i in 0..=n {
        let mut rows_by_q: BTreeMap<i32, Vec<Vec<usize>>> = BTreeMap::new();
        for &(m, x) in &by_degree[i] {
            let q = q_of(m, x);
            *dims.entry((i, q)).or_insert(0) += 1;
            if i < n {
                rows_by_q.entry(q).or_default().push(image(m, x));
            }
        }
        let words = if i < n { by_degree[i + 1].len().div_ceil(64) } else { 0 };
        for (q, rows) in rows_by_q {
            let bits = rows
                .into_iter()
                .map(|r| {
                    let mut v = vec![0u64; words.max(1)];
                    for c in r {
                        v[c / 64] |= 1 << (c % 64);
                    }
                    v
                })
                .collect();
            ranks.insert((i, q), rank_gf2(bits));
        }
    }
    let mut out = BTreeMap::new();
    for (&(i, q), &dim) in &dims {
        let r_out = ranks.get(&(i, q)).copied().unwrap_or(0);
        let r_in = if i > 0 { ranks.get(&(i - 1, q)).copied().unwrap_or(0) } else { 0 };
        let h = dim - r_out - r_in;
        if h > 0 {
            out.insert((i as i32 - n_minus, q), h);
        }
    }
    out
}

pub fn free_ranks(h: &vkh::homology::GradedHomology) -> BTreeMap<(i32, i32), usize> {
    h.groups.iter().filter(|g| g.1.free > 0).map(|(&k, g)| (k, g.free)).collect()
}
