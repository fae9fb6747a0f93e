//! The signed Khovanov cube of a virtual link diagram.
//!
//! Every edge map is
//! `transition · post_bar ∘ P_post ∘ (m | Δ | η) ∘ P_pre ∘ pre_bar`.
//! Bars come from cut-locus parities between the smoothing site and each
//! cycle's star. `P_pre`/`P_post` compare the local order at the site with
//! the global order of the state; global orders are propagated from the
//! all-A state along a spanning tree. On a non-tree edge the order obtained
//! by propagating across that edge is compared with the target's tree order,
//! and the sign of that permutation is the `transition` factor.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::diagram::{End, Skeleton, Slot, VirtualLinkDiagram};
use crate::error::{Error, Result};
use crate::frobenius::{AlgebraElement, FrobeniusSpec, Tensor2};
use crate::linalg::SparseMatrix;
use crate::orientation::{ArcPoint, OrientationLayer, Parity, StarMarking, StarRule};
use crate::smoothing::{Resolution, SmoothingState};
use crate::DEFAULT_MAX_CROSSINGS;

/// (−1)^{a+b+1} if a < b, (−1)^{a+b} if a > b, for 1-based ranks `a` (local
/// cycle 1) and `b` (local cycle 2).
pub fn p_two(a: usize, b: usize) -> Result<i64> {
    if a == b {
        return Err(Error::EqualLabels(a));
    }
    let e = if a < b { a + b + 1 } else { a + b };
    Ok(if e % 2 == 0 { 1 } else { -1 })
}

/// (−1)^{a+1}.
pub fn p_one(a: usize) -> i64 {
    if a % 2 == 1 {
        1
    } else {
        -1
    }
}

/// Rank of the merged cycle when ranks `a` (local 1) and `b` (local 2) merge.
pub fn merged_rank(a: usize, b: usize) -> usize {
    if a < b {
        a
    } else {
        a - 1
    }
}

/// New rank of an uninvolved cycle after a merge that removed rank `b`.
pub fn after_merge(r: usize, b: usize) -> usize {
    if r > b {
        r - 1
    } else {
        r
    }
}

/// New rank of an uninvolved cycle after rank `a` split in two.
pub fn after_split(r: usize, a: usize) -> usize {
    if r > a {
        r + 1
    } else {
        r
    }
}

/// Sign of the permutation carrying ranking `from` to ranking `to`; both
/// give the rank of each item.
pub fn transition_sign(from: &[usize], to: &[usize]) -> i64 {
    assert_eq!(from.len(), to.len());
    let mut by_from: Vec<usize> = (0..from.len()).collect();
    by_from.sort_by_key(|&k| from[k]);
    let seq: Vec<usize> = by_from.iter().map(|&k| to[k]).collect();
    let mut inversions = 0;
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            if seq[i] > seq[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Named loops with global ranks, for working faces by hand under the same
/// propagation and sign rules the cube uses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LoopOrder {
    ranks: BTreeMap<String, usize>,
}

impl LoopOrder {
    pub fn new<'a>(loops: impl IntoIterator<Item = (&'a str, usize)>) -> Self {
        LoopOrder { ranks: loops.into_iter().map(|(n, r)| (n.to_string(), r)).collect() }
    }

    pub fn rank(&self, name: &str) -> usize {
        self.ranks[name]
    }

    /// Merges `local1` and `local2` into `merged`. Returns `(pre, post)`.
    pub fn merge(&mut self, local1: &str, local2: &str, merged: &str) -> Result<(i64, i64)> {
        let (a, b) = (self.rank(local1), self.rank(local2));
        let pre = p_two(a, b)?;
        self.ranks.remove(local1);
        self.ranks.remove(local2);
        for r in self.ranks.values_mut() {
            *r = after_merge(*r, b);
        }
        let w = merged_rank(a, b);
        self.ranks.insert(merged.to_string(), w);
        Ok((pre, p_one(w)))
    }

    /// Splits `from` into `local1` and `local2`. Returns `(pre, post)`.
    pub fn split(&mut self, from: &str, local1: &str, local2: &str) -> (i64, i64) {
        let a = self.ranks.remove(from).expect("loop exists");
        for r in self.ranks.values_mut() {
            *r = after_split(*r, a);
        }
        self.ranks.insert(local1.to_string(), a);
        self.ranks.insert(local2.to_string(), a + 1);
        (p_one(a), p_two(a, a + 1).unwrap())
    }

    /// Sign of the permutation taking this order to `other` on the same loops.
    pub fn transition_to(&self, other: &LoopOrder) -> i64 {
        assert!(self.ranks.keys().eq(other.ranks.keys()), "orders must name the same loops");
        let from: Vec<usize> = self.ranks.values().copied().collect();
        let to: Vec<usize> = other.ranks.values().copied().collect();
        transition_sign(&from, &to)
    }
}

/// How each state picks its spanning-tree parent.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub enum TreeRule {
    /// Clear the lowest B bit.
    #[default]
    LowestBit,
    /// Clear the highest B bit.
    HighestBit,
    /// Clear a random B bit.
    Seeded(u64),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Corrections {
    pub bars: bool,
    pub orders: bool,
}

impl Default for Corrections {
    fn default() -> Self {
        Corrections { bars: true, orders: true }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubeOptions {
    pub star_rule: StarRule,
    pub tree_rule: TreeRule,
    /// Ranks (1-based) of the all-A cycles; identity when `None`.
    pub root_order: Option<Vec<usize>>,
    pub corrections: Corrections,
    pub max_crossings: usize,
    /// Negates one edge `(source mask, site index)`; a negative control.
    pub flip_edge: Option<(u64, usize)>,
}

impl Default for CubeOptions {
    fn default() -> Self {
        CubeOptions {
            star_rule: StarRule::default(),
            tree_rule: TreeRule::default(),
            root_order: None,
            corrections: Corrections::default(),
            max_crossings: DEFAULT_MAX_CROSSINGS,
            flip_edge: None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum EdgeKind {
    Merge,
    Split,
    Single,
}

impl EdgeKind {
    fn letter(self) -> char {
        match self {
            EdgeKind::Merge => 'm',
            EdgeKind::Split => 'd',
            EdgeKind::Single => 'e',
        }
    }
}

/// One edge of the cube, independent of labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeMap {
    pub source: u64,
    pub target: u64,
    pub site: u32,
    pub site_index: usize,
    pub kind: EdgeKind,
    pub pre_sign: i64,
    pub post_sign: i64,
    pub transition: i64,
    /// Bar parities of the inputs, then the outputs.
    pub bars: Vec<Parity>,
    inputs: Vec<usize>,
    outputs: Vec<usize>,
    /// `(target cycle, source cycle)` for cycles away from the site.
    carried: Vec<(usize, usize)>,
    /// Ranks of the target's cycles obtained by propagating across this edge.
    pub propagated: Vec<usize>,
    flip: bool,
}

impl EdgeMap {
    pub fn sign(&self) -> i64 {
        let s = self.pre_sign * self.post_sign * self.transition;
        if self.flip {
            -s
        } else {
            s
        }
    }

    /// Image of the basis vector `labels` (bit `k−1−c` set when cycle `c`
    /// carries X) as `(target labels, coefficient)` pairs.
    pub fn apply(
        &self,
        spec: &FrobeniusSpec<i64>,
        labels: u64,
        source_cycles: usize,
        target_cycles: usize,
    ) -> Vec<(u64, i64)> {
        let get = |c: usize| labels >> (source_cycles - 1 - c) & 1 == 1;
        let elem = |x: bool, bar: Parity| {
            let e = if x { spec.x() } else { spec.one() };
            if bar.is_odd() {
                AlgebraElement::new(e.one, -e.x)
            } else {
                e
            }
        };
        let set = |acc: u64, c: usize, x: bool| {
            if x {
                acc | 1 << (target_cycles - 1 - c)
            } else {
                acc
            }
        };
        let mut base = 0u64;
        for &(tc, sc) in &self.carried {
            base = set(base, tc, get(sc));
        }
        let sign = self.sign();
        let mut out = vec![];
        match self.kind {
            EdgeKind::Single => {}
            EdgeKind::Merge => {
                let a = elem(get(self.inputs[0]), self.bars[0]);
                let b = elem(get(self.inputs[1]), self.bars[1]);
                let mut p = spec.mul(&a, &b);
                if self.bars[2].is_odd() {
                    p.x = -p.x;
                }
                let w = self.outputs[0];
                for (x, c) in [(false, p.one), (true, p.x)] {
                    if c != 0 {
                        out.push((set(base, w, x), c * sign));
                    }
                }
            }
            EdgeKind::Split => {
                let a = elem(get(self.inputs[0]), self.bars[0]);
                let t: Tensor2<i64> = spec.comul(&a);
                let (u, v) = (self.outputs[0], self.outputs[1]);
                for (k, c) in t.c.iter().enumerate() {
                    let (xu, xv) = (k >= 2, k % 2 == 1);
                    let mut c = *c;
                    if self.bars[1].is_odd() && xu {
                        c = -c;
                    }
                    if self.bars[2].is_odd() && xv {
                        c = -c;
                    }
                    if c != 0 {
                        out.push((set(set(base, u, xu), v, xv), c * sign));
                    }
                }
            }
        }
        out
    }

    /// `s_mask -> t_mask site=k kind=m|d|e pre=±1 post=±1 bars=[...] tr=±1`
    pub fn dump_line(&self) -> String {
        let bars: Vec<&str> = self.bars.iter().map(|p| if p.is_odd() { "1" } else { "0" }).collect();
        format!(
            "{} -> {} site={} kind={} pre={:+} post={:+} bars=[{}] tr={:+}",
            self.source,
            self.target,
            self.site,
            self.kind.letter(),
            self.pre_sign,
            self.post_sign,
            bars.join(","),
            self.transition
        )
    }
}

/// States, cycles, stars and propagated global orders of a diagram.
pub struct CubeSkeleton {
    pub sk: Skeleton,
    pub layer: OrientationLayer,
    pub states: Vec<Resolution>,
    pub stars: Vec<StarMarking>,
    /// 1-based rank of each cycle, per state.
    pub ranks: Vec<Vec<usize>>,
    opts: CubeOptions,
}

impl CubeSkeleton {
    pub fn new(d: &VirtualLinkDiagram, opts: &CubeOptions) -> Result<Self> {
        let c = d.crossing_count();
        if c > opts.max_crossings || c > 30 {
            return Err(Error::CrossingCap { crossings: c, cap: opts.max_crossings.min(30) });
        }
        let sk = Skeleton::new(d);
        let layer = OrientationLayer::new(&sk);
        let n = sk.crossing_count();
        let states: Vec<Resolution> = (0..1u64 << n)
            .map(|m| Resolution::new(&sk, SmoothingState::new(m, n).unwrap()))
            .collect();
        let stars = states.iter().map(|r| layer.stars(&sk, r, opts.star_rule)).collect();
        let k0 = states[0].cycle_count();
        let root = match &opts.root_order {
            Some(r) => {
                let mut sorted = r.clone();
                sorted.sort_unstable();
                if sorted != (1..=k0).collect::<Vec<_>>() {
                    return Err(Error::Validation(format!(
                        "root order must be a permutation of 1..={k0}"
                    )));
                }
                r.clone()
            }
            None => (1..=k0).collect(),
        };
        let mut cube = CubeSkeleton { sk, layer, states, stars, ranks: vec![vec![]; 1 << n], opts: opts.clone() };
        cube.ranks[0] = root;
        let mut rng = match opts.tree_rule {
            TreeRule::Seeded(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
            _ => None,
        };
        for s in 1..1u64 << n {
            let bit = match opts.tree_rule {
                TreeRule::LowestBit => s.trailing_zeros() as usize,
                TreeRule::HighestBit => 63 - s.leading_zeros() as usize,
                TreeRule::Seeded(_) => {
                    let bits: Vec<usize> = (0..n).filter(|&b| s >> b & 1 == 1).collect();
                    bits[rng.as_mut().unwrap().gen_range(0..bits.len())]
                }
            };
            let parent = s ^ (1 << bit);
            let e = cube.edge_raw(parent, bit);
            cube.ranks[s as usize] = e.propagated;
        }
        Ok(cube)
    }

    pub fn crossing_count(&self) -> usize {
        self.sk.crossing_count()
    }

    fn site_slots(&self, k: usize) -> (Slot, Slot) {
        let role = crate::orientation::Pattern::for_sign(self.sk.signs[k]).in_role();
        (Slot { crossing: k, role, end: End::In }, Slot { crossing: k, role, end: End::Out })
    }

    /// Edge data except the transition sign.
    fn edge_raw(&self, s: u64, k: usize) -> EdgeMap {
        let t = s | 1 << k;
        let (src, dst) = (&self.states[s as usize], &self.states[t as usize]);
        let (l1, l2) = self.site_slots(k);
        let sk = &self.sk;
        let (p1, p2) = (ArcPoint::at_slot(sk, l1), ArcPoint::at_slot(sk, l2));
        let site_arcs: Vec<usize> = [End::In, End::Out]
            .iter()
            .flat_map(|&end| {
                [l1.role, l1.role.flip()].map(|role| sk.arc_of(Slot { crossing: k, role, end }))
            })
            .collect();
        let touched = |r: &Resolution, c: usize| site_arcs.iter().any(|&a| r.arc_cycle[a] == c);
        let carried: Vec<(usize, usize)> = (0..dst.cycle_count())
            .filter(|&c| !touched(dst, c))
            .map(|c| (c, src.arc_cycle[dst.cycles[c].min_arc()]))
            .collect();
        let src_ranks = &self.ranks[s as usize];
        let bar = |res: &Resolution, stars: &StarMarking, p: ArcPoint| {
            if self.opts.corrections.bars {
                self.layer.bar_parity(sk, res, stars, p)
            } else {
                Parity::Even
            }
        };
        let (ss, ts) = (&self.stars[s as usize], &self.stars[t as usize]);
        let mut propagated = vec![0; dst.cycle_count()];
        let (kind, inputs, outputs, pre, post, bars);
        match dst.cycle_count() as i64 - src.cycle_count() as i64 {
            -1 => {
                let (u, v) = (src.cycle_of_slot(sk, l1), src.cycle_of_slot(sk, l2));
                let w = dst.cycle_of_slot(sk, l1);
                let (a, b) = (src_ranks[u], src_ranks[v]);
                for &(tc, sc) in &carried {
                    propagated[tc] = after_merge(src_ranks[sc], b);
                }
                propagated[w] = merged_rank(a, b);
                kind = EdgeKind::Merge;
                pre = p_two(a, b).expect("distinct cycles have distinct ranks");
                post = p_one(propagated[w]);
                bars = vec![bar(src, ss, p1), bar(src, ss, p2), bar(dst, ts, p1)];
                inputs = vec![u, v];
                outputs = vec![w];
            }
            1 => {
                let u = src.cycle_of_slot(sk, l1);
                let (u1, v1) = (dst.cycle_of_slot(sk, l1), dst.cycle_of_slot(sk, l2));
                let a = src_ranks[u];
                for &(tc, sc) in &carried {
                    propagated[tc] = after_split(src_ranks[sc], a);
                }
                propagated[u1] = a;
                propagated[v1] = a + 1;
                kind = EdgeKind::Split;
                pre = p_one(a);
                post = p_two(a, a + 1).unwrap();
                bars = vec![bar(src, ss, p1), bar(dst, ts, p1), bar(dst, ts, p2)];
                inputs = vec![u];
                outputs = vec![u1, v1];
            }
            _ => {
                let u = src.cycle_of_slot(sk, l1);
                let w = dst.cycle_of_slot(sk, l1);
                for &(tc, sc) in &carried {
                    propagated[tc] = src_ranks[sc];
                }
                propagated[w] = src_ranks[u];
                kind = EdgeKind::Single;
                pre = 1;
                post = 1;
                bars = vec![];
                inputs = vec![u];
                outputs = vec![w];
            }
        }
        let orders = self.opts.corrections.orders;
        EdgeMap {
            source: s,
            target: t,
            site: sk.ids[k],
            site_index: k,
            kind,
            pre_sign: if orders { pre } else { 1 },
            post_sign: if orders { post } else { 1 },
            transition: 1,
            bars,
            inputs,
            outputs,
            carried,
            propagated,
            flip: self.opts.flip_edge == Some((s, k)),
        }
    }

    /// The edge from `s` resmoothing crossing index `k` (an A bit of `s`).
    pub fn edge(&self, s: u64, k: usize) -> EdgeMap {
        let mut e = self.edge_raw(s, k);
        if self.opts.corrections.orders {
            e.transition = transition_sign(&e.propagated, &self.ranks[e.target as usize]);
        }
        e
    }

    /// Every edge, by source mask then site.
    pub fn edges(&self) -> Vec<EdgeMap> {
        let n = self.crossing_count();
        (0..1u64 << n)
            .flat_map(|s| (0..n).filter(move |k| s >> k & 1 == 0).map(move |k| (s, k)))
            .map(|(s, k)| self.edge(s, k))
            .collect()
    }
}

/// Pushes a labelled state along edges resmoothing `sites` in turn.
pub fn compose_path(
    cube: &CubeSkeleton,
    spec: &FrobeniusSpec<i64>,
    state: u64,
    labels: u64,
    sites: &[usize],
) -> (u64, Vec<(u64, i64)>) {
    let mut s = state;
    let mut v: BTreeMap<u64, i64> = [(labels, 1)].into_iter().collect();
    for &k in sites {
        let e = cube.edge(s, k);
        let (ks, kt) = (cube.states[s as usize].cycle_count(), cube.states[e.target as usize].cycle_count());
        let mut next = BTreeMap::new();
        for (&l, &c) in &v {
            for (tl, x) in e.apply(spec, l, ks, kt) {
                *next.entry(tl).or_insert(0) += c * x;
            }
        }
        next.retain(|_, c| *c != 0);
        v = next;
        s = e.target;
    }
    (s, v.into_iter().collect())
}

/// A basis vector: a state with one label per cycle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Generator {
    pub state: u64,
    /// Bit `k−1−c` set when cycle `c` is labelled X.
    pub labels: u64,
    /// Unshifted homological degree (number of B smoothings).
    pub i: usize,
    /// Quantum grade j + n₊ − 2n₋.
    pub q: i32,
}

/// Chain groups and integer differentials of the cube.
pub struct SignedCubeComplex {
    pub cube: CubeSkeleton,
    pub spec: FrobeniusSpec<i64>,
    pub n_plus: usize,
    pub n_minus: usize,
    /// Basis of each unshifted degree, ordered by state mask then labels.
    pub basis: Vec<Vec<Generator>>,
    /// `differentials[i]` maps degree `i` to `i + 1` (rows index the target).
    pub differentials: Vec<SparseMatrix>,
    offsets: Vec<usize>,
}

impl SignedCubeComplex {
    pub fn build(d: &VirtualLinkDiagram, spec: &FrobeniusSpec<i64>, opts: &CubeOptions) -> Result<Self> {
        if spec.h != 0 {
            return Err(Error::NonZeroH);
        }
        let cube = CubeSkeleton::new(d, opts)?;
        let n = cube.crossing_count();
        let shift = d.n_plus() as i32 - 2 * d.n_minus() as i32;
        let mut basis = vec![vec![]; n + 1];
        let mut offsets = vec![0; 1 << n];
        for s in 0..1u64 << n {
            let i = s.count_ones() as usize;
            let k = cube.states[s as usize].cycle_count();
            offsets[s as usize] = basis[i].len();
            for labels in 0..1u64 << k {
                let xs = labels.count_ones() as i32;
                let q = i as i32 + (k as i32 - 2 * xs) + shift;
                basis[i].push(Generator { state: s, labels, i, q });
            }
        }
        let mut differentials: Vec<SparseMatrix> =
            (0..n).map(|i| SparseMatrix::zeros(basis[i + 1].len(), basis[i].len())).collect();
        for e in cube.edges() {
            let (s, t) = (e.source as usize, e.target as usize);
            let (ks, kt) = (cube.states[s].cycle_count(), cube.states[t].cycle_count());
            let i = e.source.count_ones() as usize;
            for labels in 0..1u64 << ks {
                for (tl, c) in e.apply(spec, labels, ks, kt) {
                    differentials[i].add(offsets[t] + tl as usize, offsets[s] + labels as usize, c);
                }
            }
        }
        Ok(SignedCubeComplex {
            cube,
            spec: spec.clone(),
            n_plus: d.n_plus(),
            n_minus: d.n_minus(),
            basis,
            differentials,
            offsets,
        })
    }

    pub fn crossing_count(&self) -> usize {
        self.cube.crossing_count()
    }

    /// Position of `(state, labels)` within its degree's basis.
    pub fn index_of(&self, state: u64, labels: u64) -> usize {
        self.offsets[state as usize] + labels as usize
    }

    /// Applies ∂ to a vector of degree `i`, given as `(index, coefficient)`.
    pub fn apply_differential(&self, i: usize, v: &[(usize, i64)]) -> Vec<(usize, i64)> {
        let Some(m) = self.differentials.get(i) else { return vec![] };
        let mut out = std::collections::BTreeMap::new();
        for (r, row) in m.data.iter().enumerate() {
            let mut acc = 0i64;
            for &(c, x) in row {
                if let Ok(k) = v.binary_search_by_key(&c, |e| e.0) {
                    acc += x * v[k].1;
                }
            }
            if acc != 0 {
                out.insert(r, acc);
            }
        }
        out.into_iter().collect()
    }

    /// Checks ∂∘∂ = 0 and lists the offending faces.
    pub fn check_d2(&self) -> D2Report {
        let mut failures = std::collections::BTreeSet::new();
        let mut overflow = false;
        for i in 0..self.differentials.len().saturating_sub(1) {
            let Some(prod) = self.differentials[i + 1].checked_mul(&self.differentials[i]) else {
                overflow = true;
                continue;
            };
            for (r, row) in prod.data.iter().enumerate() {
                for &(c, _) in row {
                    let (a, b) = (self.basis[i][c].state, self.basis[i + 2][r].state);
                    let diff = a ^ b;
                    let sites: Vec<u32> = (0..64)
                        .filter(|k| diff >> k & 1 == 1)
                        .map(|k| self.cube.sk.ids[k])
                        .collect();
                    failures.insert(Face { state: a, sites: (sites[0], sites[1]) });
                }
            }
        }
        D2Report { ok: failures.is_empty() && !overflow, faces: failures.into_iter().collect() }
    }

    /// One line per edge, η edges included.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for e in self.cube.edges() {
            writeln!(out, "{}", e.dump_line()).unwrap();
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Face {
    pub state: u64,
    pub sites: (u32, u32),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct D2Report {
    pub ok: bool,
    pub faces: Vec<Face>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(code: &str) -> VirtualLinkDiagram {
        code.parse().unwrap()
    }

    #[test]
    fn order_signs() {
        assert_eq!(p_two(1, 2).unwrap(), 1);
        assert_eq!(p_two(2, 1).unwrap(), -1);
        assert_eq!(p_one(1), 1);
        assert_eq!(p_two(3, 3), Err(Error::EqualLabels(3)));
        // The formulas are move-to-front permutation signs.
        for k in 2..7 {
            for a in 1..=k {
                for b in (1..=k).filter(|&b| b != a) {
                    let global: Vec<usize> = (1..=k).collect();
                    let mut local = vec![0; k];
                    local[a - 1] = 1;
                    local[b - 1] = 2;
                    let mut next = 3;
                    for r in 1..=k {
                        if r != a && r != b {
                            local[r - 1] = next;
                            next += 1;
                        }
                    }
                    assert_eq!(transition_sign(&global, &local), p_two(a, b).unwrap());
                }
            }
        }
    }

    #[test]
    fn propagation_rules() {
        assert_eq!(merged_rank(1, 2), 1);
        assert_eq!(merged_rank(3, 1), 2);
        assert_eq!(after_merge(3, 2), 2);
        assert_eq!(after_split(2, 1), 3);
        assert_eq!(after_split(1, 1), 1);
    }

    #[test]
    fn loop_order_rules() {
        let mut o = LoopOrder::new([("x", 1), ("y", 2), ("z", 3)]);
        assert_eq!(o.merge("z", "x", "w").unwrap(), (1, -1));
        assert_eq!((o.rank("y"), o.rank("w")), (1, 2));
        assert_eq!(o.split("y", "p", "q"), (1, 1));
        assert_eq!((o.rank("p"), o.rank("q"), o.rank("w")), (1, 2, 3));
        let swapped = LoopOrder::new([("p", 2), ("q", 1), ("w", 3)]);
        assert_eq!(o.transition_to(&swapped), -1);
        assert!(o.merge("p", "p", "r").is_err());
    }

    #[test]
    fn root_state_keeps_root_order() {
        let t = d("O1+U2+O3+U1+O2+U3+");
        let opts = CubeOptions { root_order: Some(vec![2, 1]), ..Default::default() };
        let cube = CubeSkeleton::new(&t, &opts).unwrap();
        assert_eq!(cube.ranks[0], vec![2, 1]);
        let bad = CubeOptions { root_order: Some(vec![1, 1]), ..Default::default() };
        assert!(CubeSkeleton::new(&t, &bad).is_err());
    }

    #[test]
    fn ranks_are_permutations() {
        let dg = d("O1+U2-O3-U1+O4+U3-O2-U4+");
        for rule in [TreeRule::LowestBit, TreeRule::HighestBit, TreeRule::Seeded(9)] {
            let cube = CubeSkeleton::new(&dg, &CubeOptions { tree_rule: rule, ..Default::default() }).unwrap();
            for r in &cube.ranks {
                let mut s = r.clone();
                s.sort_unstable();
                assert_eq!(s, (1..=r.len()).collect::<Vec<_>>());
            }
        }
    }

    #[test]
    fn tree_edges_have_no_transition() {
        let dg = d("O1+U2+U1+O2+");
        let cube = CubeSkeleton::new(&dg, &CubeOptions::default()).unwrap();
        for s in 1..4u64 {
            let k = s.trailing_zeros() as usize;
            assert_eq!(cube.edge(s ^ 1 << k, k).transition, 1);
        }
    }

    #[test]
    fn kinds_match_cycle_counts() {
        let dg = d("O1+U2+U1+O2+");
        let cube = CubeSkeleton::new(&dg, &CubeOptions::default()).unwrap();
        for e in cube.edges() {
            let delta = cube.states[e.target as usize].cycle_count() as i64
                - cube.states[e.source as usize].cycle_count() as i64;
            let want = match delta {
                -1 => EdgeKind::Merge,
                1 => EdgeKind::Split,
                _ => EdgeKind::Single,
            };
            assert_eq!(e.kind, want);
        }
    }

    #[test]
    fn d_squared_vanishes() {
        let spec = FrobeniusSpec::khovanov();
        for code in ["O1+U2+O3+U1+O2+U3+", "O1+U2+U1+O2+", "O1+U2-O3-U1+O4+U3-O2-U4+", "O1+U2+|U1+O2+", "", "|"] {
            let c = SignedCubeComplex::build(&d(code), &spec, &CubeOptions::default()).unwrap();
            assert!(c.check_d2().ok, "{code}");
        }
    }

    #[test]
    fn flipped_edge_breaks_d_squared() {
        let opts = CubeOptions { flip_edge: Some((0, 0)), ..Default::default() };
        let c = SignedCubeComplex::build(&d("O1+U2+O3+U1+O2+U3+"), &FrobeniusSpec::khovanov(), &opts).unwrap();
        let report = c.check_d2();
        assert!(!report.ok);
        assert!(report.faces.iter().all(|f| f.state == 0));
    }

    #[test]
    fn rejects_nonzero_h() {
        let spec = FrobeniusSpec { h: 1, t: 0 };
        assert!(matches!(
            SignedCubeComplex::build(&d(""), &spec, &CubeOptions::default()),
            Err(Error::NonZeroH)
        ));
    }

    #[test]
    fn dump_format() {
        let c = SignedCubeComplex::build(&d("O1+U1+"), &FrobeniusSpec::khovanov(), &CubeOptions::default()).unwrap();
        assert_eq!(c.dump(), "0 -> 1 site=1 kind=m pre=-1 post=+1 bars=[0,0,0] tr=+1\n");
    }

    #[test]
    fn gradings() {
        let t = d("O1+U2+O3+U1+O2+U3+");
        let c = SignedCubeComplex::build(&t, &FrobeniusSpec::khovanov(), &CubeOptions::default()).unwrap();
        for i in 0..c.differentials.len() {
            for (r, row) in c.differentials[i].data.iter().enumerate() {
                for &(col, _) in row {
                    assert_eq!(c.basis[i + 1][r].q, c.basis[i][col].q);
                }
            }
        }
        let lee = SignedCubeComplex::build(&t, &FrobeniusSpec::lee(), &CubeOptions::default()).unwrap();
        assert!(lee.check_d2().ok);
        for i in 0..lee.differentials.len() {
            for (r, row) in lee.differentials[i].data.iter().enumerate() {
                for &(col, _) in row {
                    let dq = lee.basis[i + 1][r].q - lee.basis[i][col].q;
                    assert!(dq == 0 || dq == 4);
                }
            }
        }
    }
}
