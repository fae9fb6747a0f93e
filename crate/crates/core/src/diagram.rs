//! Signed oriented Gauss codes.
//!
//! A diagram is a list of components, each a cyclic sequence of passes
//! `O<id><sign>` / `U<id><sign>`. Virtual crossings are not recorded: the
//! Gauss code alone determines the virtual link.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Role {
    Over,
    Under,
}

impl Role {
    pub fn flip(self) -> Self {
        match self {
            Role::Over => Role::Under,
            Role::Under => Role::Over,
        }
    }

    fn letter(self) -> char {
        match self {
            Role::Over => 'O',
            Role::Under => 'U',
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn flip(self) -> Self {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }

    pub fn value(self) -> i32 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }

    fn symbol(self) -> char {
        match self {
            Sign::Pos => '+',
            Sign::Neg => '-',
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Pass {
    pub crossing: u32,
    pub role: Role,
    pub sign: Sign,
}

impl Pass {
    pub fn new(crossing: u32, role: Role, sign: Sign) -> Self {
        Pass { crossing, role, sign }
    }
}

impl fmt::Display for Pass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}{}", self.role.letter(), self.crossing, self.sign.symbol())
    }
}

/// A semi-arc runs from one pass to the next along a component. A component
/// without crossings carries a single closed semi-arc whose endpoints are
/// both `(component, 0)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SemiArc {
    pub arc_id: usize,
    pub from: (usize, usize),
    pub to: (usize, usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VirtualLinkDiagram {
    components: Vec<Vec<Pass>>,
    name: Option<String>,
}

impl VirtualLinkDiagram {
    /// Validates and builds a diagram. Each crossing must appear exactly
    /// twice, once over and once under, with matching signs.
    pub fn new(components: Vec<Vec<Pass>>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::Validation("a diagram needs at least one component".into()));
        }
        let mut seen: BTreeMap<u32, Vec<Pass>> = BTreeMap::new();
        for p in components.iter().flatten() {
            if p.crossing == 0 {
                return Err(Error::Validation("crossing ids start at 1".into()));
            }
            seen.entry(p.crossing).or_default().push(*p);
        }
        for (id, passes) in &seen {
            if passes.len() != 2 {
                return Err(Error::Validation(format!(
                    "crossing {id} appears {} times",
                    passes.len()
                )));
            }
            if passes[0].role == passes[1].role {
                return Err(Error::Validation(format!(
                    "both passes of crossing {id} are {:?}",
                    passes[0].role
                )));
            }
            if passes[0].sign != passes[1].sign {
                return Err(Error::Validation(format!("crossing {id} has mismatched signs")));
            }
        }
        Ok(VirtualLinkDiagram { components, name: None })
    }

    pub fn unknot() -> Self {
        VirtualLinkDiagram { components: vec![vec![]], name: None }
    }

    pub fn unlink(n: usize) -> Self {
        VirtualLinkDiagram { components: vec![vec![]; n.max(1)], name: None }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut components = vec![];
        let mut current = vec![];
        let bytes = text.as_bytes();
        let mut pos = 0;
        let skip_ws = |pos: &mut usize| {
            while *pos < bytes.len() && (bytes[*pos] as char).is_whitespace() {
                *pos += 1;
            }
        };
        loop {
            skip_ws(&mut pos);
            if pos >= bytes.len() {
                components.push(std::mem::take(&mut current));
                break;
            }
            let role = match bytes[pos] {
                b'|' => {
                    components.push(std::mem::take(&mut current));
                    pos += 1;
                    continue;
                }
                b'O' | b'o' => Role::Over,
                b'U' | b'u' => Role::Under,
                other => {
                    return Err(Error::Syntax {
                        pos,
                        msg: format!("expected 'O', 'U' or '|', found {:?}", other as char),
                    })
                }
            };
            pos += 1;
            skip_ws(&mut pos);
            let start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            if start == pos {
                return Err(Error::Syntax { pos, msg: "expected a crossing number".into() });
            }
            let crossing: u32 = text[start..pos]
                .parse()
                .map_err(|_| Error::Syntax { pos: start, msg: "crossing number out of range".into() })?;
            skip_ws(&mut pos);
            let sign = match bytes.get(pos) {
                Some(b'+') => Sign::Pos,
                Some(b'-') => Sign::Neg,
                _ => return Err(Error::Syntax { pos, msg: "expected '+' or '-'".into() }),
            };
            pos += 1;
            current.push(Pass { crossing, role, sign });
        }
        Self::new(components)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn components(&self) -> &[Vec<Pass>] {
        &self.components
    }

    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    pub fn is_knot(&self) -> bool {
        self.components.len() == 1
    }

    /// Crossing ids in ascending order; this order indexes smoothing states.
    pub fn crossing_ids(&self) -> Vec<u32> {
        let ids: BTreeSet<u32> = self.passes().map(|p| p.crossing).collect();
        ids.into_iter().collect()
    }

    pub fn crossing_count(&self) -> usize {
        self.passes().count() / 2
    }

    pub fn sign_of(&self, crossing: u32) -> Option<Sign> {
        self.passes().find(|p| p.crossing == crossing).map(|p| p.sign)
    }

    pub fn n_plus(&self) -> usize {
        self.passes().filter(|p| p.role == Role::Over && p.sign == Sign::Pos).count()
    }

    pub fn n_minus(&self) -> usize {
        self.passes().filter(|p| p.role == Role::Over && p.sign == Sign::Neg).count()
    }

    pub fn writhe(&self) -> i32 {
        self.n_plus() as i32 - self.n_minus() as i32
    }

    pub fn is_positive(&self) -> bool {
        self.n_minus() == 0
    }

    fn passes(&self) -> impl Iterator<Item = &Pass> {
        self.components.iter().flatten()
    }

    fn map_passes(&self, f: impl Fn(&Pass) -> Pass) -> Self {
        VirtualLinkDiagram {
            components: self.components.iter().map(|c| c.iter().map(&f).collect()).collect(),
            name: self.name.clone(),
        }
    }

    fn check_subset(&self, set: &BTreeSet<u32>) -> Result<()> {
        let ids = self.crossing_ids();
        match set.iter().find(|c| ids.binary_search(c).is_err()) {
            Some(&c) => Err(Error::UnknownCrossing(c)),
            None => Ok(()),
        }
    }

    /// Negates every sign and exchanges over and under.
    pub fn mirror(&self) -> Self {
        self.map_passes(|p| Pass::new(p.crossing, p.role.flip(), p.sign.flip()))
    }

    /// Switches the crossings in `set`: roles exchanged and signs negated.
    pub fn switch_crossings(&self, set: &BTreeSet<u32>) -> Result<Self> {
        self.check_subset(set)?;
        Ok(self.map_passes(|p| {
            if set.contains(&p.crossing) {
                Pass::new(p.crossing, p.role.flip(), p.sign.flip())
            } else {
                *p
            }
        }))
    }

    /// Virtualizes the crossings in `set`: the sign is reversed, the arrow
    /// (over/under roles) kept.
    pub fn virtualize(&self, set: &BTreeSet<u32>) -> Result<Self> {
        self.check_subset(set)?;
        Ok(self.map_passes(|p| {
            if set.contains(&p.crossing) {
                Pass::new(p.crossing, p.role, p.sign.flip())
            } else {
                *p
            }
        }))
    }

    /// Reverses the orientation of component `index`. Crossings between the
    /// reversed component and another one change sign.
    pub fn reverse_component(&self, index: usize) -> Result<Self> {
        if index >= self.components.len() {
            return Err(Error::InvalidPosition(format!("no component {index}")));
        }
        let own: BTreeSet<u32> = self.components[index].iter().map(|p| p.crossing).collect();
        let mut mixed = BTreeSet::new();
        for (k, comp) in self.components.iter().enumerate() {
            if k != index {
                mixed.extend(comp.iter().map(|p| p.crossing).filter(|c| own.contains(c)));
            }
        }
        let mut components = self.components.clone();
        components[index].reverse();
        for p in components.iter_mut().flatten() {
            if mixed.contains(&p.crossing) {
                p.sign = p.sign.flip();
            }
        }
        Ok(VirtualLinkDiagram { components, name: self.name.clone() })
    }

    pub fn semi_arcs(&self) -> Vec<SemiArc> {
        let mut arcs = vec![];
        for (c, comp) in self.components.iter().enumerate() {
            let n = comp.len();
            if n == 0 {
                arcs.push(SemiArc { arc_id: arcs.len(), from: (c, 0), to: (c, 0) });
            }
            for k in 0..n {
                arcs.push(SemiArc { arc_id: arcs.len(), from: (c, k), to: (c, (k + 1) % n) });
            }
        }
        arcs
    }

    /// Component and insertion index that places a new pass on semi-arc `arc`.
    fn insertion_point(&self, arc: usize) -> Result<(usize, usize)> {
        let sa = self
            .semi_arcs()
            .get(arc)
            .copied()
            .ok_or_else(|| Error::InvalidPosition(format!("no semi-arc {arc}")))?;
        let (c, k) = sa.from;
        if self.components[c].is_empty() {
            Ok((c, 0))
        } else {
            Ok((c, k + 1))
        }
    }

    fn next_id(&self) -> u32 {
        self.passes().map(|p| p.crossing).max().unwrap_or(0) + 1
    }

    /// Inserts a kink on semi-arc `arc`: a new crossing whose two passes are
    /// consecutive, `first` then its opposite.
    pub fn apply_r1(&self, arc: usize, sign: Sign, first: Role) -> Result<Self> {
        let (c, at) = self.insertion_point(arc)?;
        let id = self.next_id();
        let mut components = self.components.clone();
        components[c].splice(at..at, [Pass::new(id, first, sign), Pass::new(id, first.flip(), sign)]);
        Ok(VirtualLinkDiagram { components, name: self.name.clone() })
    }

    /// Pushes semi-arc `over_arc` across semi-arc `under_arc`, creating two
    /// crossings of opposite sign. The over strand meets the first new crossing
    /// (sign `sign`) first; `reversed` makes the under strand meet them in the
    /// opposite order. When both arcs coincide the over pair comes first.
    pub fn apply_r2(&self, over_arc: usize, under_arc: usize, sign: Sign, reversed: bool) -> Result<Self> {
        let (co, ao) = self.insertion_point(over_arc)?;
        let (cu, au) = self.insertion_point(under_arc)?;
        let a = self.next_id();
        let b = a + 1;
        let overs = [Pass::new(a, Role::Over, sign), Pass::new(b, Role::Over, sign.flip())];
        let mut unders = [Pass::new(a, Role::Under, sign), Pass::new(b, Role::Under, sign.flip())];
        if reversed {
            unders.reverse();
        }
        let mut components = self.components.clone();
        if co == cu && ao == au {
            let mut both = overs.to_vec();
            both.extend(unders);
            components[co].splice(ao..ao, both);
        } else if co == cu && au > ao {
            components[co].splice(au..au, unders);
            components[co].splice(ao..ao, overs);
        } else {
            components[co].splice(ao..ao, overs);
            components[cu].splice(au..au, unders);
        }
        Ok(VirtualLinkDiagram { components, name: self.name.clone() })
    }

    /// The sequence of (crossing, component, position) with signs and roles
    /// dropped; only signs may differ between `d` and `virtualize(d, S)`.
    pub fn unsigned_sequence(&self) -> Vec<Vec<(u32, Role)>> {
        self.components
            .iter()
            .map(|c| c.iter().map(|p| (p.crossing, p.role)).collect())
            .collect()
    }
}

impl FromStr for VirtualLinkDiagram {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

impl fmt::Display for VirtualLinkDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, comp) in self.components.iter().enumerate() {
            if k > 0 {
                write!(f, "|")?;
            }
            for p in comp {
                write!(f, "{p}")?;
            }
        }
        Ok(())
    }
}

/// One end of a semi-arc at a crossing. `In` is where the strand arrives at
/// the crossing (head of the incoming semi-arc), `Out` where it leaves.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum End {
    In,
    Out,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Slot {
    pub crossing: usize,
    pub role: Role,
    pub end: End,
}

impl Slot {
    fn code(self) -> usize {
        self.crossing * 4
            + if self.role == Role::Over { 0 } else { 2 }
            + if self.end == End::In { 0 } else { 1 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ArcEnds {
    pub component: usize,
    /// `None` for the closed semi-arc of a crossingless component.
    pub tail: Option<Slot>,
    pub head: Option<Slot>,
}

/// Indexed view of a diagram used by the state-sum and cube code.
#[derive(Clone, Debug)]
pub struct Skeleton {
    pub ids: Vec<u32>,
    pub signs: Vec<Sign>,
    pub arcs: Vec<ArcEnds>,
    index: HashMap<u32, usize>,
    slot_arc: Vec<usize>,
    /// Component of the over and under pass at each crossing.
    pub strand_components: Vec<(usize, usize)>,
}

impl Skeleton {
    pub fn new(d: &VirtualLinkDiagram) -> Self {
        let ids = d.crossing_ids();
        let index: HashMap<u32, usize> = ids.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let mut signs = vec![Sign::Pos; ids.len()];
        let mut strand_components = vec![(0, 0); ids.len()];
        let mut arcs = vec![];
        let mut slot_arc = vec![usize::MAX; ids.len() * 4];
        for (ci, comp) in d.components().iter().enumerate() {
            let n = comp.len();
            if n == 0 {
                arcs.push(ArcEnds { component: ci, tail: None, head: None });
                continue;
            }
            for k in 0..n {
                let a = comp[k];
                let b = comp[(k + 1) % n];
                let ia = index[&a.crossing];
                signs[ia] = a.sign;
                match a.role {
                    Role::Over => strand_components[ia].0 = ci,
                    Role::Under => strand_components[ia].1 = ci,
                }
                let tail = Slot { crossing: ia, role: a.role, end: End::Out };
                let head = Slot { crossing: index[&b.crossing], role: b.role, end: End::In };
                slot_arc[tail.code()] = arcs.len();
                slot_arc[head.code()] = arcs.len();
                arcs.push(ArcEnds { component: ci, tail: Some(tail), head: Some(head) });
            }
        }
        Skeleton { ids, signs, arcs, index, slot_arc, strand_components }
    }

    pub fn crossing_count(&self) -> usize {
        self.ids.len()
    }

    pub fn index_of(&self, crossing: u32) -> Option<usize> {
        self.index.get(&crossing).copied()
    }

    pub fn arc_of(&self, slot: Slot) -> usize {
        self.slot_arc[slot.code()]
    }

    /// True when `slot` is the tail end of its semi-arc.
    pub fn is_tail(&self, slot: Slot) -> bool {
        slot.end == End::Out
    }
}
