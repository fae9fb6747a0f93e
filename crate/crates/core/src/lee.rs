//! Lee homology (X² = 1): canonical generators, the quantum filtration on
//! homology, the Rasmussen invariant and genus formulas.

use std::collections::BTreeMap;

use num_rational::Rational64;
use serde::Serialize;

use crate::cube::{CubeOptions, SignedCubeComplex};
use crate::diagram::{End, Sign, Skeleton, Slot, VirtualLinkDiagram};
use crate::error::{Error, Result};
use crate::frobenius::{green, red, FrobeniusSpec};
use crate::linalg::{Echelon, SparseMatrix};
use crate::orientation::{ArcPoint, Half, OrientationLayer, Pattern, StarRule};
use crate::smoothing::{Resolution, SmoothingState};

/// Checks the identities satisfied by r and g, by name.
pub fn red_green_properties() -> Vec<(&'static str, bool)> {
    let l = FrobeniusSpec::<Rational64>::lee();
    let (r, g) = (red(), green());
    let zero = crate::frobenius::AlgebraElement::zero();
    let half = Rational64::new(1, 2);
    let two_rr = crate::frobenius::Tensor2::pure(&r, &r).scale(&Rational64::from(2));
    let minus_two_gg = crate::frobenius::Tensor2::pure(&g, &g).scale(&Rational64::from(-2));
    vec![
        ("projections", l.mul(&r, &r) == r && l.mul(&g, &g) == g),
        ("complementary", r.clone() + g.clone() == l.one()),
        ("disjoint", l.mul(&r, &g) == zero),
        ("eigenprojections", l.mul(&l.x(), &r) == r && l.mul(&l.x(), &g) == g.scale(&Rational64::from(-1))),
        ("conjugates", l.bar(&r).ok() == Some(g.clone()) && l.bar(&g).ok() == Some(r.clone())),
        ("comultiplication", l.comul(&r) == two_rr && l.comul(&g) == minus_two_gg),
        ("halves", r.one == half && g.one == half),
    ]
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Colour {
    Red,
    Green,
}

impl Colour {
    fn from_bit(b: bool) -> Self {
        if b {
            Colour::Green
        } else {
            Colour::Red
        }
    }

    pub fn flip(self) -> Self {
        match self {
            Colour::Red => Colour::Green,
            Colour::Green => Colour::Red,
        }
    }
}

/// An alternately coloured oriented resolution.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CanonicalGenerator {
    /// Components reversed relative to the code.
    pub reversed: Vec<bool>,
    pub state: u64,
    /// Colour at the tail of each semi-arc.
    pub arc_colours: Vec<Colour>,
    /// Colour at each cycle's star.
    pub cycle_colours: Vec<Colour>,
}

fn oriented_state(sk: &Skeleton, reversed: &[bool]) -> u64 {
    let mut mask = 0;
    for (k, &sign) in sk.signs.iter().enumerate() {
        let (a, b) = sk.strand_components[k];
        let flipped = reversed[a] != reversed[b];
        if (sign == Sign::Neg) != flipped {
            mask |= 1 << k;
        }
    }
    mask
}

/// One generator per orientation of the components: cycles coloured so
/// that the two strands at every site differ, with colours flipping across
/// cut loci. Each connected block of cycles is anchored by the direction in
/// which the orientation runs through its smallest arc.
pub fn canonical_generators(d: &VirtualLinkDiagram) -> Result<Vec<CanonicalGenerator>> {
    let sk = Skeleton::new(d);
    crate::smoothing::check_cap(d, crate::DEFAULT_MAX_CROSSINGS)?;
    let layer = OrientationLayer::new(&sk);
    let n = sk.crossing_count();
    let c = d.component_count();
    let mut out = vec![];
    for o in 0..1u64 << c {
        let reversed: Vec<bool> = (0..c).map(|k| o >> k & 1 == 1).collect();
        let mask = oriented_state(&sk, &reversed);
        let res = Resolution::new(&sk, SmoothingState::new(mask, n)?);
        let stars = layer.stars(&sk, &res, StarRule::default());
        let odd = |p: ArcPoint| layer.bar_parity(&sk, &res, &stars, p).is_odd();
        // colour(cycle) ^ colour(other) == rel along each constraint
        let k = res.cycle_count();
        let mut adj: Vec<Vec<(usize, bool)>> = vec![vec![]; k];
        for x in 0..n {
            let role = Pattern::for_sign(sk.signs[x]).in_role();
            let s1 = Slot { crossing: x, role, end: End::In };
            let s2 = Slot { crossing: x, role, end: End::Out };
            let (p1, p2) = (ArcPoint::at_slot(&sk, s1), ArcPoint::at_slot(&sk, s2));
            let (c1, c2) = (res.arc_cycle[p1.arc], res.arc_cycle[p2.arc]);
            let rel = !(odd(p1) ^ odd(p2));
            if c1 == c2 {
                if !rel {
                    continue;
                }
                return Err(Error::Colouring("a site forces equal colours on one cycle"));
            }
            adj[c1].push((c2, rel));
            adj[c2].push((c1, rel));
        }
        let mut colour: Vec<Option<bool>> = vec![None; k];
        // cycles in order of their smallest arc
        let mut order: Vec<usize> = (0..k).collect();
        order.sort_by_key(|&c| res.cycles[c].min_arc());
        for &root in &order {
            if colour[root].is_some() {
                continue;
            }
            let arc = res.cycles[root].min_arc();
            let runs_forward = !reversed[sk.arcs[arc].component];
            let travels_with_cycle = runs_forward == res.arc_forward[arc];
            // red at the tail of the anchor arc when the orientation agrees
            let local = !travels_with_cycle;
            let at_star = local ^ odd(ArcPoint { arc, half: Half::Tail });
            colour[root] = Some(at_star);
            let mut stack = vec![root];
            while let Some(u) = stack.pop() {
                let cu = colour[u].unwrap();
                for &(v, rel) in &adj[u] {
                    let want = cu ^ rel;
                    match colour[v] {
                        None => {
                            colour[v] = Some(want);
                            stack.push(v);
                        }
                        Some(cv) if cv != want => {
                            return Err(Error::Colouring("inconsistent colouring constraints"))
                        }
                        _ => {}
                    }
                }
            }
        }
        let cycle_bits: Vec<bool> = colour.into_iter().map(|c| c.unwrap()).collect();
        let arc_colours = (0..sk.arcs.len())
            .map(|a| {
                let p = ArcPoint { arc: a, half: Half::Tail };
                Colour::from_bit(cycle_bits[res.arc_cycle[a]] ^ odd(p))
            })
            .collect();
        out.push(CanonicalGenerator {
            reversed,
            state: mask,
            arc_colours,
            cycle_colours: cycle_bits.into_iter().map(Colour::from_bit).collect(),
        });
    }
    let mut seen = std::collections::HashSet::new();
    for g in &out {
        if !seen.insert((g.state, g.cycle_colours.clone())) {
            return Err(Error::Colouring("two orientations share a colouring"));
        }
    }
    Ok(out)
}

/// The generator as an integer vector `⊗(1 ± X)` in its state's degree.
pub fn generator_vector(complex: &SignedCubeComplex, g: &CanonicalGenerator) -> Vec<(usize, i64)> {
    let k = g.cycle_colours.len();
    let mut v = vec![];
    for labels in 0..1u64 << k {
        let mut c = 1;
        for (cycle, col) in g.cycle_colours.iter().enumerate() {
            if labels >> (k - 1 - cycle) & 1 == 1 && *col == Colour::Green {
                c = -c;
            }
        }
        v.push((complex.index_of(g.state, labels), c));
    }
    v.sort_unstable();
    v
}

/// True when the Lee differential annihilates the generator.
pub fn verify_generator_cycle(complex: &SignedCubeComplex, g: &CanonicalGenerator) -> bool {
    let i = g.state.count_ones() as usize;
    complex.apply_differential(i, &generator_vector(complex, g)).is_empty()
}

pub fn lee_complex(d: &VirtualLinkDiagram) -> Result<SignedCubeComplex> {
    SignedCubeComplex::build(d, &FrobeniusSpec::lee(), &CubeOptions::default())
}

/// Filtration levels of Lee homology over ℚ, per shifted homological degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FilteredHomology {
    /// `(degree, level) -> multiplicity`
    pub levels: BTreeMap<(i32, i32), usize>,
}

impl FilteredHomology {
    pub fn dimension(&self) -> usize {
        self.levels.values().sum()
    }

    pub fn min_level(&self) -> Option<i32> {
        self.levels.keys().map(|k| k.1).min()
    }

    pub fn max_level(&self) -> Option<i32> {
        self.levels.keys().map(|k| k.1).max()
    }
}

fn columns(m: &SparseMatrix) -> Vec<Vec<(usize, i64)>> {
    let mut cols = vec![vec![]; m.cols];
    for (r, row) in m.data.iter().enumerate() {
        for &(c, v) in row {
            cols[c].push((r, v));
        }
    }
    cols
}

/// A class has level k when it has a representative whose coordinates all
/// sit in quantum grade ≥ k, and none in grade ≥ k + 1.
pub fn filtered_homology_of(complex: &SignedCubeComplex) -> FilteredHomology {
    let n = complex.crossing_count();
    let mut levels = BTreeMap::new();
    for i in 0..=n {
        let basis = &complex.basis[i];
        // positions in ascending q
        let mut by_q: Vec<usize> = (0..basis.len()).collect();
        by_q.sort_by_key(|&k| (basis[k].q, k));
        let mut pos = vec![0u32; basis.len()];
        for (p, &k) in by_q.iter().enumerate() {
            pos[k] = p as u32;
        }
        let mut grades: Vec<i32> = basis.iter().map(|g| g.q).collect();
        grades.sort_unstable();
        grades.dedup();

        // boundaries: count leads at or above each grade
        let mut boundary_leads = vec![];
        if i > 0 {
            let mut e = Echelon::new();
            for col in columns(&complex.differentials[i - 1]) {
                let mut v: Vec<(u32, i64)> = col.iter().map(|&(r, x)| (pos[r], x)).collect();
                v.sort_unstable();
                if let Some(lead) = e.insert(v) {
                    boundary_leads.push(basis[by_q[lead as usize]].q);
                }
            }
        }
        // cycles: dim F_k minus rank of d on F_k
        let mut rank_from: BTreeMap<i32, usize> = BTreeMap::new();
        let image = if i < n { Some(columns(&complex.differentials[i])) } else { None };
        let mut e = Echelon::new();
        for &k in by_q.iter().rev() {
            if let Some(cols) = &image {
                let v: Vec<(u32, i64)> = cols[k].iter().map(|&(r, x)| (r as u32, x)).collect();
                e.insert(v);
            }
            rank_from.insert(basis[k].q, e.rank());
        }
        let mut above = 0;
        let mut dims = vec![];
        for &q in grades.iter().rev() {
            let f = basis.iter().filter(|g| g.q >= q).count();
            let z = f - rank_from[&q];
            let b = boundary_leads.iter().filter(|&&l| l >= q).count();
            let s = z - b;
            dims.push((q, s - above));
            above = s;
        }
        for (q, m) in dims {
            if m > 0 {
                levels.insert((i as i32 - complex.n_minus as i32, q), m);
            }
        }
    }
    FilteredHomology { levels }
}

pub fn lee_filtered_homology(d: &VirtualLinkDiagram) -> Result<FilteredHomology> {
    Ok(filtered_homology_of(&lee_complex(d)?))
}

/// Lowest and highest filtration levels of Lee homology.
pub fn s_min_max(d: &VirtualLinkDiagram) -> Result<(i32, i32)> {
    let h = lee_filtered_homology(d)?;
    Ok((h.min_level().unwrap_or(0), h.max_level().unwrap_or(0)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RasmussenResult {
    pub s_min: i32,
    pub s_max: i32,
    pub s_bar: i32,
    pub genus_lower: Rational64,
    pub genus_upper: Rational64,
    pub generators: usize,
}

fn rational_json(r: Rational64) -> serde_json::Value {
    if r.is_integer() {
        serde_json::json!(r.to_integer())
    } else {
        serde_json::json!(*r.numer() as f64 / *r.denom() as f64)
    }
}

impl RasmussenResult {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "s_min": self.s_min,
            "s_max": self.s_max,
            "s_bar": self.s_bar,
            "genus_lower": rational_json(self.genus_lower),
            "genus_upper": rational_json(self.genus_upper),
            "generators": self.generators,
        })
    }
}

fn require_knot(d: &VirtualLinkDiagram) -> Result<()> {
    if d.is_knot() {
        Ok(())
    } else {
        Err(Error::NotAKnot(d.component_count()))
    }
}

pub fn rasmussen(d: &VirtualLinkDiagram) -> Result<RasmussenResult> {
    require_knot(d)?;
    let complex = lee_complex(d)?;
    let h = filtered_homology_of(&complex);
    let (s_min, s_max) = (h.min_level().unwrap_or(0), h.max_level().unwrap_or(0));
    if h.dimension() != 2 {
        return Err(Error::Internal(format!("Lee homology of a knot has dimension {}", h.dimension())));
    }
    let s_bar = (s_min + s_max) / 2;
    Ok(RasmussenResult {
        s_min,
        s_max,
        s_bar,
        genus_lower: Rational64::new(s_bar.abs() as i64, 2),
        genus_upper: seifert_genus(d)?,
        generators: canonical_generators(d)?.len(),
    })
}

/// Number of cycles in the oriented resolution.
pub fn seifert_circles(d: &VirtualLinkDiagram) -> usize {
    let sk = Skeleton::new(d);
    let mask = oriented_state(&sk, &vec![false; d.component_count()]);
    Resolution::new(&sk, SmoothingState::new(mask, sk.crossing_count()).unwrap()).cycle_count()
}

/// Genus (−r + n + 1)/2 of the surface built on the oriented resolution.
pub fn seifert_genus(d: &VirtualLinkDiagram) -> Result<Rational64> {
    require_knot(d)?;
    let r = seifert_circles(d) as i64;
    Ok(Rational64::new(-r + d.crossing_count() as i64 + 1, 2))
}

/// s_min of a positive diagram read off the all-A state: −r + n.
pub fn positive_s_min(d: &VirtualLinkDiagram) -> Result<i32> {
    if !d.is_positive() {
        return Err(Error::NotPositive);
    }
    Ok(d.crossing_count() as i32 - seifert_circles(d) as i32)
}

/// Slice genus of a positive knot.
pub fn positive_slice_genus(d: &VirtualLinkDiagram) -> Result<Rational64> {
    if !d.is_positive() {
        return Err(Error::NotPositive);
    }
    seifert_genus(d)
}
