//! Exact linear algebra over ℤ, ℚ and ℤ/2 for sparse integer matrices.

use std::collections::{BTreeSet, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Row-major sparse integer matrix; each row sorted by column.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SparseMatrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Vec<(usize, i64)>>,
}

impl SparseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMatrix { rows, cols, data: vec![vec![]; rows] }
    }

    pub fn from_dense(m: &[Vec<i64>]) -> Self {
        let rows = m.len();
        let cols = m.first().map_or(0, |r| r.len());
        let data = m
            .iter()
            .map(|r| r.iter().enumerate().filter(|(_, v)| **v != 0).map(|(c, v)| (c, *v)).collect())
            .collect();
        SparseMatrix { rows, cols, data }
    }

    /// Adds `v` at `(r, c)`, keeping rows sorted and free of zeros.
    pub fn add(&mut self, r: usize, c: usize, v: i64) {
        let row = &mut self.data[r];
        match row.binary_search_by_key(&c, |e| e.0) {
            Ok(k) => {
                row[k].1 += v;
                if row[k].1 == 0 {
                    row.remove(k);
                }
            }
            Err(k) if v != 0 => row.insert(k, (c, v)),
            Err(_) => {}
        }
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        let row = &self.data[r];
        row.binary_search_by_key(&c, |e| e.0).map_or(0, |k| row[k].1)
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Vec::is_empty)
    }

    /// `self · other`, or `None` on overflow.
    pub fn checked_mul(&self, other: &SparseMatrix) -> Option<SparseMatrix> {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = SparseMatrix::zeros(self.rows, other.cols);
        for (r, row) in self.data.iter().enumerate() {
            let mut acc: HashMap<usize, i64> = HashMap::new();
            for &(k, a) in row {
                for &(c, b) in &other.data[k] {
                    let e = acc.entry(c).or_insert(0);
                    *e = e.checked_add(a.checked_mul(b)?)?;
                }
            }
            let mut entries: Vec<(usize, i64)> = acc.into_iter().filter(|e| e.1 != 0).collect();
            entries.sort_unstable();
            out.data[r] = entries;
        }
        Some(out)
    }

    pub fn to_dense_big(&self) -> Vec<Vec<BigInt>> {
        let mut m = vec![vec![BigInt::zero(); self.cols]; self.rows];
        for (r, row) in self.data.iter().enumerate() {
            for &(c, v) in row {
                m[r][c] = BigInt::from(v);
            }
        }
        m
    }
}

/// Invariant factors d₁ | d₂ | … | d_r of an integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub rows: usize,
    pub cols: usize,
    pub factors: Vec<BigInt>,
}

impl SmithDecomposition {
    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    /// Factors greater than one.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.factors.iter().filter(|f| !f.is_one()).cloned().collect()
    }
}

pub fn smith_normal_form(m: &SparseMatrix) -> SmithDecomposition {
    let (units, rest) = match eliminate_unit_pivots(m) {
        Some(r) => r,
        None => (0, m.to_dense_big()),
    };
    let mut factors = vec![BigInt::one(); units];
    factors.extend(dense_smith(rest));
    normalize_chain(&mut factors);
    SmithDecomposition { rows: m.rows, cols: m.cols, factors }
}

/// Pivots on ±1 entries until none remain. Returns the number of pivots and
/// the leftover block as a dense matrix, or `None` on i64 overflow.
fn eliminate_unit_pivots(m: &SparseMatrix) -> Option<(usize, Vec<Vec<BigInt>>)> {
    let mut rows: Vec<Vec<(usize, i64)>> = m.data.clone();
    let mut col_rows: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); m.cols];
    for (r, row) in rows.iter().enumerate() {
        for &(c, _) in row {
            col_rows[c].insert(r);
        }
    }
    let mut alive = vec![true; m.rows];
    let mut pivots = 0;
    loop {
        // Cheapest unit pivot: sparse row, sparse column.
        let mut best: Option<(usize, usize, usize)> = None;
        for (r, row) in rows.iter().enumerate() {
            if !alive[r] {
                continue;
            }
            for &(c, v) in row {
                if v.abs() == 1 {
                    let cost = (row.len() - 1) * (col_rows[c].len() - 1);
                    if best.map_or(true, |b| cost < b.2) {
                        best = Some((r, c, cost));
                    }
                }
            }
            if matches!(best, Some((_, _, 0))) {
                break;
            }
        }
        let Some((pr, pc, _)) = best else { break };
        let prow = std::mem::take(&mut rows[pr]);
        let u = prow.iter().find(|e| e.0 == pc).unwrap().1;
        let targets: Vec<usize> = col_rows[pc].iter().copied().filter(|&r| r != pr).collect();
        for r in targets {
            let a = rows[r].iter().find(|e| e.0 == pc).unwrap().1;
            let f = a.checked_mul(u)?;
            let old = std::mem::take(&mut rows[r]);
            let new = axpy(&old, &prow, f)?;
            for &(c, _) in &old {
                col_rows[c].remove(&r);
            }
            for &(c, _) in &new {
                col_rows[c].insert(r);
            }
            rows[r] = new;
        }
        for &(c, _) in &prow {
            col_rows[c].remove(&pr);
        }
        alive[pr] = false;
        pivots += 1;
    }
    let live_rows: Vec<usize> = (0..m.rows).filter(|&r| alive[r] && !rows[r].is_empty()).collect();
    let live_cols: Vec<usize> = (0..m.cols).filter(|&c| !col_rows[c].is_empty()).collect();
    let col_pos: HashMap<usize, usize> = live_cols.iter().enumerate().map(|(k, &c)| (c, k)).collect();
    let mut dense = vec![vec![BigInt::zero(); live_cols.len()]; live_rows.len()];
    for (k, &r) in live_rows.iter().enumerate() {
        for &(c, v) in &rows[r] {
            dense[k][col_pos[&c]] = BigInt::from(v);
        }
    }
    Some((pivots, dense))
}

/// `x − f·y` for sorted sparse rows.
fn axpy(x: &[(usize, i64)], y: &[(usize, i64)], f: i64) -> Option<Vec<(usize, i64)>> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let take_x = j >= y.len() || (i < x.len() && x[i].0 < y[j].0);
        let take_y = i >= x.len() || (j < y.len() && y[j].0 < x[i].0);
        let (c, v) = if take_x {
            i += 1;
            x[i - 1]
        } else if take_y {
            j += 1;
            (y[j - 1].0, y[j - 1].1.checked_mul(f)?.checked_neg()?)
        } else {
            i += 1;
            j += 1;
            (x[i - 1].0, x[i - 1].1.checked_sub(y[j - 1].1.checked_mul(f)?)?)
        };
        if v != 0 {
            out.push((c, v));
        }
    }
    Some(out)
}

/// Diagonalizes by row and column operations; returns the nonzero diagonal.
fn dense_smith(mut a: Vec<Vec<BigInt>>) -> Vec<BigInt> {
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut diag = vec![];
    for t in 0..rows.min(cols) {
        let Some((pr, pc)) = min_entry(&a, t, t..rows, t..cols) else { break };
        a.swap(t, pr);
        for row in a.iter_mut() {
            row.swap(t, pc);
        }
        loop {
            let p = a[t][t].clone();
            let mut clean = true;
            for i in t + 1..rows {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&p);
                for j in t..cols {
                    let s = &q * &a[t][j];
                    a[i][j] -= s;
                }
                clean &= a[i][t].is_zero();
            }
            for j in t + 1..cols {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&p);
                for i in t..rows {
                    let s = &q * &a[i][t];
                    a[i][j] -= s;
                }
                clean &= a[t][j].is_zero();
            }
            if clean {
                break;
            }
            // A smaller remainder sits in row t or column t; move it to the pivot.
            let (pr, pc) = min_entry(&a, t, t..rows, t..t + 1)
                .into_iter()
                .chain(min_entry(&a, t, t..t + 1, t..cols))
                .min_by_key(|&(r, c)| a[r][c].abs())
                .unwrap();
            a.swap(t, pr);
            for row in a.iter_mut() {
                row.swap(t, pc);
            }
        }
        diag.push(a[t][t].abs());
    }
    diag
}

fn min_entry(
    a: &[Vec<BigInt>],
    _t: usize,
    rows: std::ops::Range<usize>,
    cols: std::ops::Range<usize>,
) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for r in rows {
        for c in cols.clone() {
            if !a[r][c].is_zero() && best.map_or(true, |(br, bc)| a[r][c].abs() < a[br][bc].abs()) {
                best = Some((r, c));
            }
        }
    }
    best
}

/// Replaces a diagonal by the equivalent divisibility chain.
fn normalize_chain(d: &mut [BigInt]) {
    for i in 0..d.len() {
        for j in i + 1..d.len() {
            let g = d[i].gcd(&d[j]);
            let l = &d[i] / &g * &d[j];
            d[i] = g;
            d[j] = l;
        }
    }
}

/// Splits `n > 1` into prime powers, rendered as `"p^k"`.
pub fn prime_powers(n: &BigInt) -> Vec<String> {
    let Some(mut m) = n.abs().to_u64() else { return vec![n.to_string()] };
    let mut out = vec![];
    let mut p = 2u64;
    while p * p <= m {
        let mut k = 0;
        while m % p == 0 {
            m /= p;
            k += 1;
        }
        if k > 0 {
            out.push(format!("{p}^{k}"));
        }
        p += 1;
    }
    if m > 1 {
        out.push(format!("{m}^1"));
    }
    out
}

pub fn rank_z2(m: &SparseMatrix) -> usize {
    let words = m.cols.div_ceil(64);
    let mut pivots: HashMap<usize, Vec<u64>> = HashMap::new();
    let mut rank = 0;
    for row in &m.data {
        let mut v = vec![0u64; words];
        for &(c, x) in row {
            if x.rem_euclid(2) == 1 {
                v[c / 64] ^= 1 << (c % 64);
            }
        }
        loop {
            let Some(w) = v.iter().position(|&x| x != 0) else { break };
            let lead = w * 64 + v[w].trailing_zeros() as usize;
            match pivots.get(&lead) {
                Some(p) => v.iter_mut().zip(p).for_each(|(a, b)| *a ^= b),
                None => {
                    pivots.insert(lead, v);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

pub fn rank_q(m: &SparseMatrix) -> usize {
    let mut e = Echelon::new();
    for row in &m.data {
        e.insert(row.iter().map(|&(c, v)| (c as u32, v)).collect());
    }
    e.rank()
}

trait ExactInt: Clone + PartialEq + Zero + Integer + Signed {
    fn checked_mul_(&self, o: &Self) -> Option<Self>;
    fn checked_sub_(&self, o: &Self) -> Option<Self>;
}

impl ExactInt for i128 {
    fn checked_mul_(&self, o: &Self) -> Option<Self> {
        self.checked_mul(*o)
    }
    fn checked_sub_(&self, o: &Self) -> Option<Self> {
        self.checked_sub(*o)
    }
}

impl ExactInt for BigInt {
    fn checked_mul_(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn checked_sub_(&self, o: &Self) -> Option<Self> {
        Some(self - o)
    }
}

type Row<T> = Vec<(u32, T)>;

/// Reduces `v` against the stored rows until its lead is free. `None` on overflow.
fn reduce<T: ExactInt>(rows: &[Row<T>], pivots: &HashMap<u32, usize>, mut v: Row<T>) -> Option<Row<T>> {
    while let Some(&(lead, ref a)) = v.first() {
        let Some(&k) = pivots.get(&lead) else { break };
        let p = &rows[k][0].1;
        let g = a.gcd(p);
        let (fv, fp) = (p.div_floor(&g), a.div_floor(&g));
        // v ← fv·v − fp·row
        let row = &rows[k];
        let mut out: Row<T> = Vec::with_capacity(v.len() + row.len());
        let (mut i, mut j) = (0, 0);
        while i < v.len() || j < row.len() {
            let (c, x) = if j >= row.len() || (i < v.len() && v[i].0 < row[j].0) {
                i += 1;
                (v[i - 1].0, v[i - 1].1.checked_mul_(&fv)?)
            } else if i >= v.len() || row[j].0 < v[i].0 {
                j += 1;
                (row[j - 1].0, T::zero().checked_sub_(&row[j - 1].1.checked_mul_(&fp)?)?)
            } else {
                i += 1;
                j += 1;
                let l = v[i - 1].1.checked_mul_(&fv)?;
                (v[i - 1].0, l.checked_sub_(&row[j - 1].1.checked_mul_(&fp)?)?)
            };
            if !x.is_zero() {
                out.push((c, x));
            }
        }
        let content = out.iter().fold(T::zero(), |g, e| g.gcd(&e.1));
        if !content.is_zero() && content != T::one() {
            for e in out.iter_mut() {
                e.1 = e.1.div_floor(&content);
            }
        }
        v = out;
    }
    Some(v)
}

enum Store {
    Small(Vec<Row<i128>>),
    Big(Vec<Row<BigInt>>),
}

/// Incremental row echelon form over ℚ with integer rows. Columns are
/// positions in the caller's chosen order; a row's pivot is its smallest
/// position, and stored pivots are distinct.
pub struct Echelon {
    store: Store,
    pivots: HashMap<u32, usize>,
}

impl Default for Echelon {
    fn default() -> Self {
        Self::new()
    }
}

impl Echelon {
    pub fn new() -> Self {
        Echelon { store: Store::Small(vec![]), pivots: HashMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Stored pivot positions.
    pub fn pivots(&self) -> impl Iterator<Item = u32> + '_ {
        self.pivots.keys().copied()
    }

    /// Inserts a row (sorted by position). Returns its new pivot if it was
    /// independent of the rows already stored.
    pub fn insert(&mut self, v: Vec<(u32, i64)>) -> Option<u32> {
        if let Store::Small(rows) = &mut self.store {
            let small: Row<i128> = v.iter().map(|&(c, x)| (c, x as i128)).collect();
            match reduce(rows, &self.pivots, small) {
                Some(r) => {
                    let lead = r.first()?.0;
                    self.pivots.insert(lead, rows.len());
                    rows.push(r);
                    return Some(lead);
                }
                None => self.promote(),
            }
        }
        let Store::Big(rows) = &mut self.store else { unreachable!() };
        let big: Row<BigInt> = v.iter().map(|&(c, x)| (c, BigInt::from(x))).collect();
        let r = reduce(rows, &self.pivots, big).expect("bigint arithmetic cannot overflow");
        let lead = r.first()?.0;
        self.pivots.insert(lead, rows.len());
        rows.push(r);
        Some(lead)
    }

    fn promote(&mut self) {
        if let Store::Small(rows) = &self.store {
            let big = rows
                .iter()
                .map(|r| r.iter().map(|(c, x)| (*c, BigInt::from(*x))).collect())
                .collect();
            self.store = Store::Big(big);
        }
    }
}
