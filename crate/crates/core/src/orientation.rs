//! Source-sink orientations, cut loci, star markings and bar parities.
//!
//! At each crossing one strand has both half-edges pointing in and the other
//! both pointing out. The in-in strand is the over strand at a positive
//! crossing and the under strand at a negative one. A semi-arc whose two ends
//! disagree about its direction carries a cut locus at its midpoint.

use std::fmt::Write as _;

use serde::Serialize;

use crate::diagram::{End, Role, Sign, Skeleton, Slot, VirtualLinkDiagram};
use crate::error::{Error, Result};
use crate::smoothing::Resolution;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Pattern {
    OverStrandIn,
    UnderStrandIn,
}

impl Pattern {
    pub fn for_sign(sign: Sign) -> Self {
        match sign {
            Sign::Pos => Pattern::OverStrandIn,
            Sign::Neg => Pattern::UnderStrandIn,
        }
    }

    pub fn in_role(self) -> Role {
        match self {
            Pattern::OverStrandIn => Role::Over,
            Pattern::UnderStrandIn => Role::Under,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum EndDirection {
    WithTravel,
    AgainstTravel,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SourceSinkAssignment {
    /// Pattern per crossing, in ascending crossing-id order.
    pub pattern: Vec<(u32, Pattern)>,
    /// Direction induced on each semi-arc at its (tail, head); `None` for a
    /// crossingless component.
    pub ends: Vec<Option<(EndDirection, EndDirection)>>,
}

/// Whether the source-sink arrow at `slot` points along the strand's travel.
pub fn with_travel(slot: Slot, pattern: Pattern) -> bool {
    let inward = slot.role == pattern.in_role();
    match slot.end {
        End::In => inward,
        End::Out => !inward,
    }
}

fn direction(b: bool) -> EndDirection {
    if b {
        EndDirection::WithTravel
    } else {
        EndDirection::AgainstTravel
    }
}

pub fn canonical_source_sink(d: &VirtualLinkDiagram) -> SourceSinkAssignment {
    assignment(&Skeleton::new(d))
}

fn assignment(sk: &Skeleton) -> SourceSinkAssignment {
    let pats: Vec<Pattern> = sk.signs.iter().map(|&s| Pattern::for_sign(s)).collect();
    let ends = sk
        .arcs
        .iter()
        .map(|a| match (a.tail, a.head) {
            (Some(t), Some(h)) => Some((
                direction(with_travel(t, pats[t.crossing])),
                direction(with_travel(h, pats[h.crossing])),
            )),
            _ => None,
        })
        .collect();
    SourceSinkAssignment { pattern: sk.ids.iter().copied().zip(pats).collect(), ends }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CutLocusSet {
    arcs: Vec<bool>,
}

impl CutLocusSet {
    pub fn contains(&self, arc: usize) -> bool {
        self.arcs.get(arc).copied().unwrap_or(false)
    }

    pub fn count(&self) -> usize {
        self.arcs.iter().filter(|b| **b).count()
    }

    pub fn arc_ids(&self) -> Vec<usize> {
        (0..self.arcs.len()).filter(|&e| self.arcs[e]).collect()
    }

    pub fn len_arcs(&self) -> usize {
        self.arcs.len()
    }

    /// Cut loci met by each cycle of `res`, in traversal order.
    pub fn per_cycle(&self, res: &Resolution) -> Vec<Vec<usize>> {
        res.cycles
            .iter()
            .map(|c| c.segments.iter().map(|s| s.0).filter(|&e| self.contains(e)).collect())
            .collect()
    }
}

pub fn cut_loci(d: &VirtualLinkDiagram) -> CutLocusSet {
    cut_loci_of(&Skeleton::new(d))
}

pub fn cut_loci_of(sk: &Skeleton) -> CutLocusSet {
    let a = assignment(sk);
    CutLocusSet { arcs: a.ends.iter().map(|e| matches!(e, Some((t, h)) if t != h)).collect() }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Half {
    Tail,
    Head,
}

/// A point on a semi-arc, on one side of its midpoint.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ArcPoint {
    pub arc: usize,
    pub half: Half,
}

impl ArcPoint {
    /// The half of its semi-arc that touches `slot`.
    pub fn at_slot(sk: &Skeleton, slot: Slot) -> Self {
        let half = match slot.end {
            End::In => Half::Head,
            End::Out => Half::Tail,
        };
        ArcPoint { arc: sk.arc_of(slot), half }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub enum StarRule {
    /// Tail half of the cycle's minimal semi-arc.
    #[default]
    MinArcTail,
    /// Head half of the cycle's maximal semi-arc.
    MaxArcHead,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    fn of(b: bool) -> Self {
        if b {
            Parity::Odd
        } else {
            Parity::Even
        }
    }
}

/// Cut loci and patterns of one diagram, reused across every state.
#[derive(Clone, Debug)]
pub struct OrientationLayer {
    patterns: Vec<Pattern>,
    cuts: CutLocusSet,
}

impl OrientationLayer {
    pub fn new(sk: &Skeleton) -> Self {
        OrientationLayer {
            patterns: sk.signs.iter().map(|&s| Pattern::for_sign(s)).collect(),
            cuts: cut_loci_of(sk),
        }
    }

    pub fn cuts(&self) -> &CutLocusSet {
        &self.cuts
    }

    /// True when the local orientation at `p` agrees with the cycle's
    /// direction of traversal. It flips exactly across cut loci.
    fn flag(&self, sk: &Skeleton, res: &Resolution, p: ArcPoint) -> bool {
        let ends = sk.arcs[p.arc];
        let slot = match p.half {
            Half::Tail => ends.tail,
            Half::Head => ends.head,
        };
        match slot {
            Some(s) => with_travel(s, self.patterns[s.crossing]) == res.arc_forward[p.arc],
            None => true,
        }
    }

    pub fn stars(&self, sk: &Skeleton, res: &Resolution, rule: StarRule) -> StarMarking {
        let points = res
            .cycles
            .iter()
            .map(|c| match rule {
                StarRule::MinArcTail => ArcPoint { arc: c.min_arc(), half: Half::Tail },
                StarRule::MaxArcHead => {
                    let arc = c.segments.iter().map(|s| s.0).max().expect("cycles are nonempty");
                    ArcPoint { arc, half: Half::Head }
                }
            })
            .collect::<Vec<_>>();
        let flags = points.iter().map(|&p| self.flag(sk, res, p)).collect();
        StarMarking { points, flags }
    }

    /// Parity of cut loci between `p` and the star of its cycle.
    pub fn bar_parity(&self, sk: &Skeleton, res: &Resolution, stars: &StarMarking, p: ArcPoint) -> Parity {
        let c = res.arc_cycle[p.arc];
        Parity::of(self.flag(sk, res, p) != stars.flags[c])
    }
}

/// Star positions, one per cycle of a state.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarMarking {
    pub points: Vec<ArcPoint>,
    flags: Vec<bool>,
}

/// Counts cut loci met when walking along cycle `cycle` from `from` to `to`,
/// forwards or backwards along the cycle's traversal.
pub fn cut_loci_between(
    res: &Resolution,
    cuts: &CutLocusSet,
    from: ArcPoint,
    to: ArcPoint,
    forward: bool,
) -> Result<usize> {
    let cycle = res.arc_cycle.get(from.arc).copied().ok_or_else(|| Error::InvalidPosition("arc".into()))?;
    if res.arc_cycle.get(to.arc) != Some(&cycle) {
        return Err(Error::InvalidPosition(format!("arc {} is not on cycle {cycle}", to.arc)));
    }
    let segs = &res.cycles[cycle].segments;
    // Half positions along the traversal: segment m occupies 2m and 2m+1.
    let pos = |p: ArcPoint| {
        let m = segs.iter().position(|s| s.0 == p.arc).unwrap();
        let first = if segs[m].1 { Half::Tail } else { Half::Head };
        2 * m + usize::from(p.half != first)
    };
    let (a, b) = (pos(from), pos(to));
    let (lo, hi) = if forward { (a, b) } else { (b, a) };
    let len = 2 * segs.len();
    let mut count = 0;
    let mut k = lo;
    while k != hi {
        if k % 2 == 0 && cuts.contains(segs[k / 2].0) {
            count += 1;
        }
        k = (k + 1) % len;
    }
    Ok(count)
}

/// Debug listing: cut arcs, then each cycle's star for every state.
pub fn dump(d: &VirtualLinkDiagram, rule: StarRule) -> String {
    let sk = Skeleton::new(d);
    let layer = OrientationLayer::new(&sk);
    let mut out = String::new();
    for e in layer.cuts.arc_ids() {
        writeln!(out, "arc {e}: CUT").unwrap();
    }
    let n = sk.crossing_count();
    for mask in 0..1u64 << n {
        let res = Resolution::new(&sk, crate::smoothing::SmoothingState::new(mask, n).unwrap());
        let stars = layer.stars(&sk, &res, rule);
        for (k, p) in stars.points.iter().enumerate() {
            writeln!(out, "state {mask} cycle {k} star@{}", p.arc).unwrap();
        }
    }
    out
}
