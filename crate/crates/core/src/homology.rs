//! Khovanov homology of the signed cube, one quantum grading at a time.

use std::collections::BTreeMap;
use std::fmt;

use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;

use crate::cube::{CubeOptions, SignedCubeComplex, TreeRule};
use crate::diagram::VirtualLinkDiagram;
use crate::error::Result;
use crate::frobenius::FrobeniusSpec;
use crate::linalg::{prime_powers, rank_q, rank_z2, smith_normal_form, SparseMatrix};
use crate::orientation::StarRule;
use crate::poly::{LaurentPolynomial, Poly2};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Coeffs {
    Z,
    Q,
    Z2,
}

impl std::str::FromStr for Coeffs {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "z" => Ok(Coeffs::Z),
            "q" => Ok(Coeffs::Q),
            "z2" => Ok(Coeffs::Z2),
            _ => Err(format!("unknown coefficients {s:?} (expected z, q or z2)")),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Group {
    pub free: usize,
    /// Prime powers such as `"2^1"`, sorted.
    pub torsion: Vec<String>,
}

impl Group {
    fn is_zero(&self) -> bool {
        self.free == 0 && self.torsion.is_empty()
    }
}

/// Homology groups indexed by shifted `(i, j)`. Equality compares the
/// groups only.
#[derive(Clone, Debug)]
pub struct GradedHomology {
    pub coeffs: Coeffs,
    pub groups: BTreeMap<(i32, i32), Group>,
    /// `(−n₋, n₊ − 2n₋)`
    pub shifts: (i32, i32),
}

impl GradedHomology {
    pub fn group(&self, i: i32, j: i32) -> Group {
        self.groups.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn total_rank(&self) -> usize {
        self.groups.values().map(|g| g.free).sum()
    }

    pub fn has_torsion(&self) -> bool {
        self.groups.values().any(|g| !g.torsion.is_empty())
    }

    pub fn poincare(&self) -> Poly2 {
        let mut p = Poly2::default();
        for (&(i, j), g) in &self.groups {
            p.add_term(i, j, g.free as i64);
        }
        p
    }

    pub fn euler_q(&self) -> LaurentPolynomial {
        self.poincare().eval_t_minus_one()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("homology tables serialize")
    }
}

impl PartialEq for GradedHomology {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs && self.groups == other.groups
    }
}

impl Eq for GradedHomology {}

impl Serialize for GradedHomology {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(self.groups.len() + 1))?;
        for (&(i, j), g) in &self.groups {
            m.serialize_entry(&format!("({i},{j})"), g)?;
        }
        #[derive(Serialize)]
        struct Shifts {
            homological: i32,
            quantum: i32,
        }
        m.serialize_entry("shifts", &Shifts { homological: self.shifts.0, quantum: self.shifts.1 })?;
        m.end()
    }
}

impl fmt::Display for GradedHomology {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.groups.is_empty() {
            return writeln!(f, "0");
        }
        for (&(i, j), g) in &self.groups {
            write!(f, "({i},{j}): free {}", g.free)?;
            if !g.torsion.is_empty() {
                write!(f, ", torsion {}", g.torsion.join(" "))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

fn block(m: &SparseMatrix, rows: &[usize], cols: &[usize]) -> SparseMatrix {
    let col_pos: BTreeMap<usize, usize> = cols.iter().enumerate().map(|(k, &c)| (c, k)).collect();
    let mut out = SparseMatrix::zeros(rows.len(), cols.len());
    for (k, &r) in rows.iter().enumerate() {
        for &(c, v) in &m.data[r] {
            if let Some(&p) = col_pos.get(&c) {
                out.data[k].push((p, v));
            }
        }
    }
    out
}

/// Homology of a complex whose differentials preserve the quantum grade.
pub fn homology_of(complex: &SignedCubeComplex, coeffs: Coeffs) -> GradedHomology {
    let n = complex.crossing_count();
    let shifts = (-(complex.n_minus as i32), complex.n_plus as i32 - 2 * complex.n_minus as i32);
    let mut by_q: Vec<BTreeMap<i32, Vec<usize>>> = vec![BTreeMap::new(); n + 1];
    for (i, b) in complex.basis.iter().enumerate() {
        for (k, g) in b.iter().enumerate() {
            by_q[i].entry(g.q).or_default().push(k);
        }
    }
    // rank and torsion of d_i restricted to grade q
    let mut ranks: BTreeMap<(usize, i32), (usize, Vec<String>)> = BTreeMap::new();
    for i in 0..n {
        for (&q, cols) in &by_q[i] {
            let Some(rows) = by_q[i + 1].get(&q) else { continue };
            let m = block(&complex.differentials[i], rows, cols);
            let entry = match coeffs {
                Coeffs::Q => (rank_q(&m), vec![]),
                Coeffs::Z2 => (rank_z2(&m), vec![]),
                Coeffs::Z => {
                    let snf = smith_normal_form(&m);
                    let torsion = snf.torsion().iter().flat_map(prime_powers).collect();
                    (snf.rank(), torsion)
                }
            };
            ranks.insert((i, q), entry);
        }
    }
    let mut groups = BTreeMap::new();
    for i in 0..=n {
        for (&q, gens) in &by_q[i] {
            let out = ranks.get(&(i, q)).map_or(0, |r| r.0);
            let (inc, mut torsion) =
                if i > 0 { ranks.get(&(i - 1, q)).cloned().unwrap_or_default() } else { (0, vec![]) };
            torsion.sort();
            let g = Group { free: gens.len() - out - inc, torsion };
            if !g.is_zero() {
                groups.insert((i as i32 + shifts.0, q), g);
            }
        }
    }
    GradedHomology { coeffs, groups, shifts }
}

pub fn khovanov_homology(d: &VirtualLinkDiagram, coeffs: Coeffs) -> Result<GradedHomology> {
    khovanov_homology_with(d, coeffs, &CubeOptions::default())
}

pub fn khovanov_homology_with(d: &VirtualLinkDiagram, coeffs: Coeffs, opts: &CubeOptions) -> Result<GradedHomology> {
    let c = SignedCubeComplex::build(d, &FrobeniusSpec::khovanov(), opts)?;
    Ok(homology_of(&c, coeffs))
}

/// Compares the homology of `d` with the crossing switched against `d` with
/// the crossing virtualized; the two diagrams are Z-equivalent.
pub fn z_equivalence_check(d: &VirtualLinkDiagram, crossing: u32) -> Result<bool> {
    let set = [crossing].into_iter().collect();
    let switched = d.switch_crossings(&set)?;
    let virt = d.virtualize(&set)?;
    Ok(khovanov_homology(&switched, Coeffs::Z)? == khovanov_homology(&virt, Coeffs::Z)?)
}

/// Outcome of recomputing homology under alternative cube choices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IndependenceReport {
    pub root_order: bool,
    pub spanning_tree: bool,
    pub star_rule: bool,
}

impl IndependenceReport {
    pub fn all(&self) -> bool {
        self.root_order && self.spanning_tree && self.star_rule
    }
}

/// Reversed root order, highest-bit and seeded trees, and the other star
/// rule, each compared with the default table.
pub fn choice_independence(d: &VirtualLinkDiagram, coeffs: Coeffs, seed: u64) -> Result<IndependenceReport> {
    let base = khovanov_homology(d, coeffs)?;
    let with = |opts: CubeOptions| khovanov_homology_with(d, coeffs, &opts).map(|h| h == base);
    let k0 = crate::smoothing::resolve(d, crate::smoothing::SmoothingState::all_a(d.crossing_count()))?.len();
    let root = with(CubeOptions { root_order: Some((1..=k0).rev().collect()), ..Default::default() })?;
    let tree = with(CubeOptions { tree_rule: TreeRule::HighestBit, ..Default::default() })?
        && with(CubeOptions { tree_rule: TreeRule::Seeded(seed), ..Default::default() })?;
    let star = with(CubeOptions { star_rule: StarRule::MaxArcHead, ..Default::default() })?;
    Ok(IndependenceReport { root_order: root, spanning_tree: tree, star_rule: star })
}
