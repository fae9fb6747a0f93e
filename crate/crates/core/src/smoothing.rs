//! States, cycle tracing and the bracket state sums.
//!
//! The A-smoothing of a positive crossing is the oriented (Seifert)
//! reconnection; for a negative crossing the B-smoothing is. State masks use
//! bit `k` for the `k`-th crossing in ascending id order, with 1 meaning B.

use std::collections::BTreeMap;

use crate::diagram::{End, Sign, Skeleton, Slot, VirtualLinkDiagram};
use crate::error::{Error, Result};
use crate::poly::{LaurentPolynomial, Var};
use crate::DEFAULT_MAX_CROSSINGS;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Choice {
    A,
    B,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SmoothingState {
    mask: u64,
    crossings: usize,
}

impl SmoothingState {
    pub fn new(mask: u64, crossings: usize) -> Result<Self> {
        if crossings > 63 || (crossings < 64 && mask >> crossings != 0) {
            return Err(Error::StateMismatch(format!(
                "mask {mask:#b} does not fit {crossings} crossings"
            )));
        }
        Ok(SmoothingState { mask, crossings })
    }

    pub fn all_a(crossings: usize) -> Self {
        SmoothingState { mask: 0, crossings }
    }

    pub fn mask(self) -> u64 {
        self.mask
    }

    pub fn crossings(self) -> usize {
        self.crossings
    }

    pub fn choice(self, k: usize) -> Choice {
        if self.mask >> k & 1 == 1 {
            Choice::B
        } else {
            Choice::A
        }
    }

    /// Number of B-smoothings.
    pub fn i(self) -> usize {
        self.mask.count_ones() as usize
    }
}

/// True when the smoothing chosen at crossing `k` follows the orientation.
pub fn is_oriented(sign: Sign, choice: Choice) -> bool {
    matches!((sign, choice), (Sign::Pos, Choice::A) | (Sign::Neg, Choice::B))
}

/// The slot joined to `slot` by the smoothing at its crossing.
pub fn partner(slot: Slot, oriented: bool) -> Slot {
    let end = if oriented {
        match slot.end {
            End::In => End::Out,
            End::Out => End::In,
        }
    } else {
        slot.end
    };
    Slot { crossing: slot.crossing, role: slot.role.flip(), end }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cycle {
    pub cycle_id: usize,
    /// Semi-arcs in traversal order; `true` when traversed along the
    /// diagram's orientation. The first segment holds the minimal arc.
    pub segments: Vec<(usize, bool)>,
}

impl Cycle {
    pub fn min_arc(&self) -> usize {
        self.segments[0].0
    }
}

/// Cycles of one state together with per-arc lookup tables.
#[derive(Clone, Debug)]
pub struct Resolution {
    pub state: SmoothingState,
    pub cycles: Vec<Cycle>,
    pub arc_cycle: Vec<usize>,
    pub arc_forward: Vec<bool>,
}

impl Resolution {
    pub fn new(sk: &Skeleton, state: SmoothingState) -> Self {
        let n_arcs = sk.arcs.len();
        let mut arc_cycle = vec![usize::MAX; n_arcs];
        let mut arc_forward = vec![true; n_arcs];
        let mut cycles = vec![];
        let oriented: Vec<bool> =
            (0..sk.crossing_count()).map(|k| is_oriented(sk.signs[k], state.choice(k))).collect();
        for start in 0..n_arcs {
            if arc_cycle[start] != usize::MAX {
                continue;
            }
            let id = cycles.len();
            let mut segments = vec![];
            let (mut e, mut fwd) = (start, true);
            loop {
                arc_cycle[e] = id;
                arc_forward[e] = fwd;
                segments.push((e, fwd));
                let ends = sk.arcs[e];
                let Some(end) = (if fwd { ends.head } else { ends.tail }) else { break };
                let next = partner(end, oriented[end.crossing]);
                e = sk.arc_of(next);
                fwd = next.end == End::Out;
                if e == start {
                    debug_assert!(fwd);
                    break;
                }
            }
            cycles.push(Cycle { cycle_id: id, segments });
        }
        Resolution { state, cycles, arc_cycle, arc_forward }
    }

    pub fn cycle_count(&self) -> usize {
        self.cycles.len()
    }

    pub fn cycle_of_slot(&self, sk: &Skeleton, slot: Slot) -> usize {
        self.arc_cycle[sk.arc_of(slot)]
    }
}

pub fn check_cap(d: &VirtualLinkDiagram, cap: usize) -> Result<()> {
    let c = d.crossing_count();
    if c > cap || c > 63 {
        return Err(Error::CrossingCap { crossings: c, cap: cap.min(63) });
    }
    Ok(())
}

/// Traces the cycles of `state`. Cycle ids follow the minimal semi-arc.
pub fn resolve(d: &VirtualLinkDiagram, state: SmoothingState) -> Result<Vec<Cycle>> {
    if state.crossings() != d.crossing_count() {
        return Err(Error::StateMismatch(format!(
            "state has {} crossings, diagram has {}",
            state.crossings(),
            d.crossing_count()
        )));
    }
    Ok(Resolution::new(&Skeleton::new(d), state).cycles)
}

/// Histogram of states by (B-count, cycle count): enough for every bracket.
#[derive(Clone, Debug)]
pub struct StateSum {
    crossings: usize,
    n_plus: usize,
    n_minus: usize,
    writhe: i32,
    counts: BTreeMap<(usize, usize), i64>,
}

impl StateSum {
    pub fn compute(d: &VirtualLinkDiagram, cap: usize) -> Result<Self> {
        check_cap(d, cap)?;
        let sk = Skeleton::new(d);
        let n = sk.crossing_count();
        let mut counts = BTreeMap::new();
        for mask in 0..1u64 << n {
            let r = Resolution::new(&sk, SmoothingState { mask, crossings: n });
            *counts.entry((mask.count_ones() as usize, r.cycle_count())).or_insert(0) += 1;
        }
        Ok(StateSum {
            crossings: n,
            n_plus: d.n_plus(),
            n_minus: d.n_minus(),
            writhe: d.writhe(),
            counts,
        })
    }

    fn delta_a() -> LaurentPolynomial {
        LaurentPolynomial::from_terms(Var::A, [(2, -1), (-2, -1)])
    }

    /// ⟨K⟩ in `A`, with ⟨unknot⟩ = −A² − A⁻².
    pub fn bracket_a(&self) -> LaurentPolynomial {
        let delta = Self::delta_a();
        let mut out = LaurentPolynomial::zero(Var::A);
        for (&(i, k), &count) in &self.counts {
            let a_exp = self.crossings as i32 - 2 * i as i32;
            let term = delta.pow(k as u32).shift(a_exp).scale(count);
            out = &out + &term;
        }
        out
    }

    /// ⟨K⟩ in `q`: Σ (−1)^i q^i (q + q⁻¹)^{cycles}.
    pub fn bracket_q(&self) -> LaurentPolynomial {
        let circle = LaurentPolynomial::from_terms(Var::Q, [(1, 1), (-1, 1)]);
        let mut out = LaurentPolynomial::zero(Var::Q);
        for (&(i, k), &count) in &self.counts {
            let sign = if i % 2 == 0 { count } else { -count };
            out = &out + &circle.pow(k as u32).shift(i as i32).scale(sign);
        }
        out
    }

    /// J(q) = (−1)^{n₋} q^{n₊ − 2n₋} ⟨K⟩_q.
    pub fn jones(&self) -> LaurentPolynomial {
        let sign = if self.n_minus % 2 == 0 { 1 } else { -1 };
        self.bracket_q().shift(self.n_plus as i32 - 2 * self.n_minus as i32).scale(sign)
    }

    /// f(A) = (−A³)^{−wr} ⟨K⟩ / δ.
    pub fn f_poly(&self) -> LaurentPolynomial {
        let sign = if self.writhe % 2 == 0 { 1 } else { -1 };
        let scaled = self.bracket_a().shift(-3 * self.writhe).scale(sign);
        scaled
            .div_exact(&Self::delta_a())
            .expect("bracket not divisible by the loop value: state-sum bug")
    }
}

/// Converts ⟨K⟩ in `A` to the `q` normalization: A^{−c}⟨K⟩ with A² ↦ −q⁻¹.
pub fn bracket_a_to_q(bracket: &LaurentPolynomial, crossings: usize) -> Option<LaurentPolynomial> {
    let rescaled = bracket.shift(-(crossings as i32)).compress(2)?;
    Some(rescaled.substitute(Var::Q, -1, -1))
}

pub fn bracket_a(d: &VirtualLinkDiagram) -> Result<LaurentPolynomial> {
    Ok(StateSum::compute(d, DEFAULT_MAX_CROSSINGS)?.bracket_a())
}

pub fn bracket_q(d: &VirtualLinkDiagram) -> Result<LaurentPolynomial> {
    Ok(StateSum::compute(d, DEFAULT_MAX_CROSSINGS)?.bracket_q())
}

pub fn jones(d: &VirtualLinkDiagram) -> Result<LaurentPolynomial> {
    Ok(StateSum::compute(d, DEFAULT_MAX_CROSSINGS)?.jones())
}

pub fn f_poly(d: &VirtualLinkDiagram) -> Result<LaurentPolynomial> {
    Ok(StateSum::compute(d, DEFAULT_MAX_CROSSINGS)?.f_poly())
}

/// V(t) = f(t^{−1/4}), in quarter powers of `t`.
pub fn v_poly(d: &VirtualLinkDiagram) -> Result<LaurentPolynomial> {
    if !d.is_knot() {
        return Err(Error::NotAKnot(d.component_count()));
    }
    Ok(f_poly(d)?.substitute(Var::TQuarter, -1, 1))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    One,
    X,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EnhancedState {
    pub state: SmoothingState,
    /// One label per cycle, indexed by cycle id.
    pub labels: Vec<Label>,
}

impl EnhancedState {
    /// λ = #1 − #X.
    pub fn lambda(&self) -> i32 {
        self.labels.iter().map(|l| if *l == Label::One { 1 } else { -1 }).sum()
    }

    pub fn j(&self) -> i32 {
        self.state.i() as i32 + self.lambda()
    }

    /// j + n₊ − 2n₋.
    pub fn q_grade(&self, d: &VirtualLinkDiagram) -> i32 {
        self.j() + d.n_plus() as i32 - 2 * d.n_minus() as i32
    }
}

/// Every enhanced state of `d`, ordered by state mask then labels.
pub fn enhanced_states(d: &VirtualLinkDiagram) -> Result<Vec<EnhancedState>> {
    check_cap(d, DEFAULT_MAX_CROSSINGS)?;
    let sk = Skeleton::new(d);
    let n = sk.crossing_count();
    let mut out = vec![];
    for mask in 0..1u64 << n {
        let state = SmoothingState { mask, crossings: n };
        let k = Resolution::new(&sk, state).cycle_count();
        for bits in 0..1u64 << k {
            let labels =
                (0..k).map(|c| if bits >> (k - 1 - c) & 1 == 1 { Label::X } else { Label::One }).collect();
            out.push(EnhancedState { state, labels });
        }
    }
    Ok(out)
}
