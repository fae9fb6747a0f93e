//! Exact Laurent polynomials with integer coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::ser::{SerializeMap, SerializeSeq};
use serde::{Serialize, Serializer};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Var {
    A,
    Q,
    /// `t^(1/4)`: exponents count quarter powers of `t`.
    TQuarter,
}

impl Var {
    pub fn name(self) -> &'static str {
        match self {
            Var::A => "A",
            Var::Q => "q",
            Var::TQuarter => "t^(1/4)",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentPolynomial {
    var: Var,
    terms: BTreeMap<i32, i64>,
}

impl LaurentPolynomial {
    pub fn zero(var: Var) -> Self {
        LaurentPolynomial { var, terms: BTreeMap::new() }
    }

    pub fn one(var: Var) -> Self {
        Self::monomial(var, 0, 1)
    }

    pub fn monomial(var: Var, exp: i32, coeff: i64) -> Self {
        let mut p = Self::zero(var);
        p.add_term(exp, coeff);
        p
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs.
    pub fn from_terms(var: Var, terms: impl IntoIterator<Item = (i32, i64)>) -> Self {
        let mut p = Self::zero(var);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i32) -> i64 {
        self.terms.get(&exp).copied().unwrap_or(0)
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, i64)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    pub fn add_term(&mut self, exp: i32, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let c = self.terms.entry(exp).or_insert(0);
        *c += coeff;
        if *c == 0 {
            self.terms.remove(&exp);
        }
    }

    pub fn scale(&self, k: i64) -> Self {
        Self::from_terms(self.var, self.terms().map(|(e, c)| (e, c * k)))
    }

    /// Multiplies by `var^shift`.
    pub fn shift(&self, shift: i32) -> Self {
        Self::from_terms(self.var, self.terms().map(|(e, c)| (e + shift, c)))
    }

    /// Substitutes `var ↦ sign · new_var^factor`, term by term.
    pub fn substitute(&self, new_var: Var, factor: i32, sign: i64) -> Self {
        Self::from_terms(
            new_var,
            self.terms().map(|(e, c)| (e * factor, if sign < 0 && e % 2 != 0 { -c } else { c })),
        )
    }

    /// Replaces every exponent `e` by `e / k`; `None` unless all divide.
    pub fn compress(&self, k: i32) -> Option<Self> {
        if self.terms.keys().any(|e| e % k != 0) {
            return None;
        }
        Some(Self::from_terms(self.var, self.terms().map(|(e, c)| (e / k, c))))
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(self.var);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Exact quotient; `None` if `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        assert_eq!(self.var, divisor.var, "variable mismatch");
        let lo = divisor.min_exp()?;
        let lead = divisor.coeff(lo);
        let mut rem = self.clone();
        let mut quot = Self::zero(self.var);
        let max_q = self.max_exp().unwrap_or(0) - divisor.max_exp()?;
        while let Some(e) = rem.min_exp() {
            let c = rem.coeff(e);
            if c % lead != 0 || e - lo > max_q {
                return None;
            }
            let t = Self::monomial(self.var, e - lo, c / lead);
            rem = &rem - &(&t * divisor);
            quot = &quot + &t;
        }
        Some(quot)
    }
}

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        assert_eq!(self.var, rhs.var, "variable mismatch");
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, c);
        }
        out
    }
}

impl Sub for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn sub(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        self + &(-rhs)
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn neg(self) -> LaurentPolynomial {
        self.scale(-1)
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        assert_eq!(self.var, rhs.var, "variable mismatch");
        let mut out = LaurentPolynomial::zero(self.var);
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

fn fmt_exp(var: Var, e: i32) -> String {
    match var {
        Var::TQuarter if e % 4 == 0 => format!("t^{}", e / 4),
        Var::TQuarter => format!("t^({e}/4)"),
        v => format!("{}^{e}", v.name()),
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> =
            self.terms().map(|(e, c)| format!("{c}*{}", fmt_exp(self.var, e))).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

struct Terms<'a>(&'a BTreeMap<i32, i64>);

impl Serialize for Terms<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.0.len()))?;
        for (e, c) in self.0 {
            seq.serialize_element(&[*e as i64, *c])?;
        }
        seq.end()
    }
}

impl Serialize for LaurentPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(2))?;
        map.serialize_entry("var", self.var.name())?;
        map.serialize_entry("terms", &Terms(&self.terms))?;
        map.end()
    }
}

/// Two-variable Laurent polynomial in `t` (homological) and `q` (quantum).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Poly2 {
    terms: BTreeMap<(i32, i32), i64>,
}

impl Poly2 {
    pub fn add_term(&mut self, i: i32, j: i32, c: i64) {
        if c == 0 {
            return;
        }
        let e = self.terms.entry((i, j)).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.remove(&(i, j));
        }
    }

    pub fn coeff(&self, i: i32, j: i32) -> i64 {
        self.terms.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = ((i32, i32), i64)> + '_ {
        self.terms.iter().map(|(&k, &c)| (k, c))
    }

    /// Evaluates `t = −1`, leaving a polynomial in `q`.
    pub fn eval_t_minus_one(&self) -> LaurentPolynomial {
        let mut p = LaurentPolynomial::zero(Var::Q);
        for ((i, j), c) in self.terms() {
            p.add_term(j, if i % 2 == 0 { c } else { -c });
        }
        p
    }
}

impl fmt::Display for Poly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> =
            self.terms().map(|((i, j), c)| format!("{c}*t^{i}*q^{j}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}
