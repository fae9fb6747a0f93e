//! The rank-two algebra R[X]/(X² − hX − t) with m, Δ, ε, ι, η and the bar map.
//!
//! Khovanov is h = t = 0, Lee is h = 0, t = 1. The formal-h system is only
//! used diagnostically: its bar map is undefined and the complex fails to
//! close up unless h = 0.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::Rational64;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Exact commutative coefficient ring.
pub trait Ring:
    Clone
    + PartialEq
    + fmt::Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn from_i64(n: i64) -> Self;
}

impl Ring for i64 {
    fn from_i64(n: i64) -> Self {
        n
    }
}

impl Ring for Rational64 {
    fn from_i64(n: i64) -> Self {
        Rational64::from_integer(n)
    }
}

/// The field with two elements.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Z2(pub bool);

impl Add for Z2 {
    type Output = Z2;
    fn add(self, o: Z2) -> Z2 {
        Z2(self.0 ^ o.0)
    }
}

impl Sub for Z2 {
    type Output = Z2;
    fn sub(self, o: Z2) -> Z2 {
        Z2(self.0 ^ o.0)
    }
}

impl Mul for Z2 {
    type Output = Z2;
    fn mul(self, o: Z2) -> Z2 {
        Z2(self.0 & o.0)
    }
}

impl Neg for Z2 {
    type Output = Z2;
    fn neg(self) -> Z2 {
        self
    }
}

impl Zero for Z2 {
    fn zero() -> Self {
        Z2(false)
    }
    fn is_zero(&self) -> bool {
        !self.0
    }
}

impl One for Z2 {
    fn one() -> Self {
        Z2(true)
    }
}

impl Ring for Z2 {
    fn from_i64(n: i64) -> Self {
        Z2(n.rem_euclid(2) == 1)
    }
}

/// Polynomials in ℤ[h, t], keyed by (deg h, deg t).
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct HtPoly(BTreeMap<(u32, u32), i64>);

impl HtPoly {
    pub fn h() -> Self {
        Self::monomial(1, 0, 1)
    }

    pub fn t() -> Self {
        Self::monomial(0, 1, 1)
    }

    pub fn monomial(h: u32, t: u32, c: i64) -> Self {
        let mut p = HtPoly::default();
        p.add_term((h, t), c);
        p
    }

    fn add_term(&mut self, k: (u32, u32), c: i64) {
        if c == 0 {
            return;
        }
        let e = self.0.entry(k).or_insert(0);
        *e += c;
        if *e == 0 {
            self.0.remove(&k);
        }
    }
}

impl Add for HtPoly {
    type Output = HtPoly;
    fn add(mut self, o: HtPoly) -> HtPoly {
        for (k, c) in o.0 {
            self.add_term(k, c);
        }
        self
    }
}

impl Sub for HtPoly {
    type Output = HtPoly;
    fn sub(self, o: HtPoly) -> HtPoly {
        self + (-o)
    }
}

impl Neg for HtPoly {
    type Output = HtPoly;
    fn neg(self) -> HtPoly {
        HtPoly(self.0.into_iter().map(|(k, c)| (k, -c)).collect())
    }
}

impl Mul for HtPoly {
    type Output = HtPoly;
    fn mul(self, o: HtPoly) -> HtPoly {
        let mut out = HtPoly::default();
        for (&(h1, t1), &c1) in &self.0 {
            for (&(h2, t2), &c2) in &o.0 {
                out.add_term((h1 + h2, t1 + t2), c1 * c2);
            }
        }
        out
    }
}

impl Zero for HtPoly {
    fn zero() -> Self {
        HtPoly::default()
    }
    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }
}

impl One for HtPoly {
    fn one() -> Self {
        Self::monomial(0, 0, 1)
    }
}

impl Ring for HtPoly {
    fn from_i64(n: i64) -> Self {
        Self::monomial(0, 0, n)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct FrobeniusSpec<R: Ring> {
    pub h: R,
    pub t: R,
}

impl<R: Ring> FrobeniusSpec<R> {
    pub fn khovanov() -> Self {
        FrobeniusSpec { h: R::zero(), t: R::zero() }
    }

    pub fn lee() -> Self {
        FrobeniusSpec { h: R::zero(), t: R::one() }
    }

    /// h = 0 with the given t.
    pub fn f3(t: R) -> Self {
        FrobeniusSpec { h: R::zero(), t }
    }

    pub fn one(&self) -> AlgebraElement<R> {
        AlgebraElement::new(R::one(), R::zero())
    }

    pub fn x(&self) -> AlgebraElement<R> {
        AlgebraElement::new(R::zero(), R::one())
    }

    pub fn mul(&self, a: &AlgebraElement<R>, b: &AlgebraElement<R>) -> AlgebraElement<R> {
        let xx = a.x.clone() * b.x.clone();
        AlgebraElement {
            one: a.one.clone() * b.one.clone() + xx.clone() * self.t.clone(),
            x: a.one.clone() * b.x.clone() + a.x.clone() * b.one.clone() + xx * self.h.clone(),
        }
    }

    /// m on V ⊗ V.
    pub fn mul_tensor(&self, t: &Tensor2<R>) -> AlgebraElement<R> {
        let mut out = AlgebraElement::zero();
        for (a, b, c) in t.terms() {
            out = out + self.mul(&a, &b).scale(&c);
        }
        out
    }

    pub fn comul(&self, a: &AlgebraElement<R>) -> Tensor2<R> {
        // Δ(1) = 1⊗X + X⊗1 − h 1⊗1, Δ(X) = X⊗X + t 1⊗1.
        let (p, q) = (a.one.clone(), a.x.clone());
        Tensor2 { c: [q.clone() * self.t.clone() - p.clone() * self.h.clone(), p.clone(), p, q] }
    }

    pub fn counit(&self, a: &AlgebraElement<R>) -> R {
        a.x.clone()
    }

    pub fn unit(&self, r: R) -> AlgebraElement<R> {
        AlgebraElement::new(r, R::zero())
    }

    /// The single-cycle map is zero.
    pub fn eta(&self, _a: &AlgebraElement<R>) -> AlgebraElement<R> {
        AlgebraElement::zero()
    }

    /// 1 ↦ 1, X ↦ −X. Only defined for h = 0.
    pub fn bar(&self, a: &AlgebraElement<R>) -> Result<AlgebraElement<R>> {
        if !self.h.is_zero() {
            return Err(Error::NonZeroH);
        }
        Ok(a.conjugate())
    }

    pub fn bar_tensor(&self, t: &Tensor2<R>) -> Result<Tensor2<R>> {
        if !self.h.is_zero() {
            return Err(Error::NonZeroH);
        }
        Ok(t.conjugate(true, true))
    }

    /// m ∘ (−1) ∘ (id ⊗ bar) ∘ Δ on 1 and on X, with X̄ = −X taken literally
    /// even when h ≠ 0. The result is (h, hX): the composite vanishes only at h = 0.
    pub fn mul_comul_diagnostic(&self) -> (AlgebraElement<R>, AlgebraElement<R>) {
        let run = |a: AlgebraElement<R>| {
            let t = self.comul(&a).conjugate(false, true).scale(&-R::one());
            self.mul_tensor(&t)
        };
        (run(self.one()), run(self.x()))
    }
}

impl FrobeniusSpec<HtPoly> {
    /// Formal h and t.
    pub fn f5() -> Self {
        FrobeniusSpec { h: HtPoly::h(), t: HtPoly::t() }
    }
}

/// `one · 1 + x · X`.
#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraElement<R: Ring> {
    pub one: R,
    pub x: R,
}

impl<R: Ring> AlgebraElement<R> {
    pub fn new(one: R, x: R) -> Self {
        AlgebraElement { one, x }
    }

    pub fn zero() -> Self {
        Self::new(R::zero(), R::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.one.is_zero() && self.x.is_zero()
    }

    pub fn scale(&self, c: &R) -> Self {
        Self::new(self.one.clone() * c.clone(), self.x.clone() * c.clone())
    }

    fn conjugate(&self) -> Self {
        Self::new(self.one.clone(), -self.x.clone())
    }
}

impl<R: Ring> Add for AlgebraElement<R> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.one + o.one, self.x + o.x)
    }
}

impl<R: Ring> Sub for AlgebraElement<R> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.one - o.one, self.x - o.x)
    }
}

/// Element of V ⊗ V with coefficients on 1⊗1, 1⊗X, X⊗1, X⊗X.
#[derive(Clone, Debug, PartialEq)]
pub struct Tensor2<R: Ring> {
    pub c: [R; 4],
}

impl<R: Ring> Tensor2<R> {
    pub fn zero() -> Self {
        Tensor2 { c: [R::zero(), R::zero(), R::zero(), R::zero()] }
    }

    pub fn pure(a: &AlgebraElement<R>, b: &AlgebraElement<R>) -> Self {
        Tensor2 {
            c: [
                a.one.clone() * b.one.clone(),
                a.one.clone() * b.x.clone(),
                a.x.clone() * b.one.clone(),
                a.x.clone() * b.x.clone(),
            ],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|c| c.is_zero())
    }

    fn basis(k: usize) -> (AlgebraElement<R>, AlgebraElement<R>) {
        let one = AlgebraElement::new(R::one(), R::zero());
        let x = AlgebraElement::new(R::zero(), R::one());
        match k {
            0 => (one.clone(), one),
            1 => (one, x),
            2 => (x, one),
            _ => (x.clone(), x),
        }
    }

    /// `(left, right, coefficient)` for each basis tensor.
    pub fn terms(&self) -> impl Iterator<Item = (AlgebraElement<R>, AlgebraElement<R>, R)> + '_ {
        (0..4).map(|k| {
            let (a, b) = Self::basis(k);
            (a, b, self.c[k].clone())
        })
    }

    pub fn scale(&self, s: &R) -> Self {
        Tensor2 { c: self.c.clone().map(|c| c * s.clone()) }
    }

    fn conjugate(&self, left: bool, right: bool) -> Self {
        let mut c = self.c.clone();
        for (k, v) in c.iter_mut().enumerate() {
            let flips = usize::from(left && k >= 2) + usize::from(right && k % 2 == 1);
            if flips % 2 == 1 {
                *v = -v.clone();
            }
        }
        Tensor2 { c }
    }
}

impl<R: Ring> Add for Tensor2<R> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        let mut c = self.c;
        for (a, b) in c.iter_mut().zip(o.c) {
            *a = a.clone() + b;
        }
        Tensor2 { c }
    }
}

/// r = (1 + X)/2 and g = (1 − X)/2 in the Lee algebra over ℚ.
pub fn red() -> AlgebraElement<Rational64> {
    AlgebraElement::new(Rational64::new(1, 2), Rational64::new(1, 2))
}

pub fn green() -> AlgebraElement<Rational64> {
    AlgebraElement::new(Rational64::new(1, 2), Rational64::new(-1, 2))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn basis<R: Ring>(s: &FrobeniusSpec<R>) -> [AlgebraElement<R>; 2] {
        [s.one(), s.x()]
    }

    #[test]
    fn products() {
        let k = FrobeniusSpec::<i64>::khovanov();
        assert!(k.mul(&k.x(), &k.x()).is_zero());
        let l = FrobeniusSpec::<i64>::lee();
        assert_eq!(l.mul(&l.x(), &l.x()), l.one());
        let a = AlgebraElement::new(3, -2);
        assert_eq!(k.mul(&k.one(), &a), a);
    }

    #[test]
    fn coproducts() {
        let k = FrobeniusSpec::<i64>::khovanov();
        assert_eq!(k.comul(&k.one()).c, [0, 1, 1, 0]);
        let l = FrobeniusSpec::<i64>::lee();
        assert_eq!(l.comul(&l.x()).c, [1, 0, 0, 1]);
        assert!(k.comul(&AlgebraElement::zero()).is_zero());
    }

    #[test]
    fn unit_counit_eta() {
        let k = FrobeniusSpec::<i64>::khovanov();
        assert_eq!(k.counit(&AlgebraElement::new(5, 7)), 7);
        assert_eq!(k.unit(4), AlgebraElement::new(4, 0));
        assert!(k.eta(&k.x()).is_zero());
        assert!(k.eta(&k.one()).is_zero());
    }

    #[test]
    fn counit_identities() {
        let specs = [FrobeniusSpec::<i64>::khovanov(), FrobeniusSpec::lee(), FrobeniusSpec::f3(5)];
        for s in &specs {
            for a in basis(s) {
                let mut left = AlgebraElement::zero();
                let mut right = AlgebraElement::zero();
                for (a1, a2, c) in s.comul(&a).terms() {
                    left = left + a2.scale(&(s.counit(&a1) * c));
                    right = right + a1.scale(&(s.counit(&a2) * c));
                }
                assert_eq!(left, a);
                assert_eq!(right, a);
            }
        }
    }

    #[test]
    fn frobenius_identity() {
        // (1⊗m)(Δ⊗1) = Δ∘m, written on a⊗b as Σ a₁ ⊗ a₂b = Δ(ab).
        let specs =
            [FrobeniusSpec::<HtPoly>::f5(), FrobeniusSpec::khovanov(), FrobeniusSpec::lee()];
        for s in &specs {
            for a in basis(s) {
                for b in basis(s) {
                    let mut lhs = Tensor2::zero();
                    for (a1, a2, c) in s.comul(&a).terms() {
                        lhs = lhs + Tensor2::pure(&a1, &s.mul(&a2, &b)).scale(&c);
                    }
                    assert_eq!(lhs, s.comul(&s.mul(&a, &b)));
                }
            }
        }
    }

    #[test]
    fn tube_cutting() {
        let s = FrobeniusSpec::<i64>::khovanov();
        for a in basis(&s) {
            for b in basis(&s) {
                let lhs = s.counit(&s.mul(&a, &b));
                let rhs = s.counit(&s.mul(&a, &s.x())) * s.counit(&b)
                    + s.counit(&a) * s.counit(&s.mul(&b, &s.x()));
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn bar_map() {
        let s = FrobeniusSpec::<i64>::f3(3);
        assert_eq!(s.bar(&s.x()).unwrap(), AlgebraElement::new(0, -1));
        let a = AlgebraElement::new(2, 9);
        assert_eq!(s.bar(&s.bar(&a).unwrap()).unwrap(), a);
        for a in basis(&s) {
            for b in basis(&s) {
                let lhs = s.bar(&s.mul(&a, &b)).unwrap();
                let rhs = s.mul(&s.bar(&a).unwrap(), &s.bar(&b).unwrap());
                assert_eq!(lhs, rhs);
            }
            let lhs = s.comul(&s.bar(&a).unwrap());
            let rhs = s.bar_tensor(&s.comul(&a)).unwrap().scale(&-1);
            assert_eq!(lhs, rhs);
        }
        assert_eq!(FrobeniusSpec::<HtPoly>::f5().bar(&AlgebraElement::zero()), Err(Error::NonZeroH));
    }

    #[test]
    fn h_obstruction() {
        let f5 = FrobeniusSpec::<HtPoly>::f5();
        let (a, b) = f5.mul_comul_diagnostic();
        assert_eq!(a, AlgebraElement::new(HtPoly::h(), HtPoly::zero()));
        assert_eq!(b, AlgebraElement::new(HtPoly::zero(), HtPoly::h()));
        let f3 = FrobeniusSpec { h: HtPoly::zero(), t: HtPoly::t() };
        let (a, b) = f3.mul_comul_diagnostic();
        assert!(a.is_zero() && b.is_zero());
        let (a, b) = FrobeniusSpec::<i64>::lee().mul_comul_diagnostic();
        assert!(a.is_zero() && b.is_zero());
    }

    #[test]
    fn red_green() {
        let s = FrobeniusSpec::<Rational64>::lee();
        let (r, g) = (red(), green());
        assert_eq!(s.mul(&r, &r), r);
        assert_eq!(s.mul(&g, &g), g);
        assert_eq!(r.clone() + g.clone(), s.one());
        assert!(s.mul(&r, &g).is_zero());
        assert_eq!(s.mul(&s.x(), &r), r);
        assert_eq!(s.mul(&s.x(), &g), g.scale(&Rational64::from_integer(-1)));
        assert_eq!(s.bar(&r).unwrap(), g);
        let two = Rational64::from_integer(2);
        assert_eq!(s.comul(&r), Tensor2::pure(&r, &r).scale(&two));
        assert_eq!(s.comul(&g), Tensor2::pure(&g, &g).scale(&-two));
    }
}
