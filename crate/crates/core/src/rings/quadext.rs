//! A quadratic extension of the Laurent ring: elements `a + b*c` where
//! `c^2 = m` for a fixed small integer `m`.
//!
//! The two-dimensional representations of dihedral Hecke algebras involve an
//! off-diagonal constant `c` with `c^2 = 4cos^2(j*pi/m) in {1, 2, 3}`. Only
//! `c^2` ever reaches a trace, so carrying the pair `(a, b)` with exact
//! Laurent components keeps the whole character computation rational — no
//! floating point anywhere.

use crate::rings::laurent::LaurentPoly;

/// `a + b*c` with `c^2 = m`, over integer Laurent polynomials in `v`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuadExt {
    a: LaurentPoly,
    b: LaurentPoly,
    m: i64,
}

impl QuadExt {
    pub fn new(a: LaurentPoly, b: LaurentPoly, m: i64) -> Self {
        QuadExt { a, b, m }
    }

    pub fn zero(m: i64) -> Self {
        QuadExt::new(LaurentPoly::zero(), LaurentPoly::zero(), m)
    }

    pub fn one(m: i64) -> Self {
        QuadExt::from_laurent(LaurentPoly::one(), m)
    }

    /// Embeds a plain Laurent polynomial (`b = 0`).
    pub fn from_laurent(a: LaurentPoly, m: i64) -> Self {
        QuadExt::new(a, LaurentPoly::zero(), m)
    }

    /// The generator `c` itself.
    pub fn radical(m: i64) -> Self {
        QuadExt::new(LaurentPoly::zero(), LaurentPoly::one(), m)
    }

    pub fn rational_part(&self) -> &LaurentPoly {
        &self.a
    }

    pub fn radical_part(&self) -> &LaurentPoly {
        &self.b
    }

    pub fn discriminant(&self) -> i64 {
        self.m
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// True when the radical part vanishes, i.e. the value lies in Z[v,v^-1].
    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    fn check_m(&self, other: &QuadExt) {
        assert_eq!(
            self.m, other.m,
            "QuadExt arithmetic requires matching discriminants"
        );
    }

    pub fn add(&self, other: &QuadExt) -> QuadExt {
        self.check_m(other);
        QuadExt::new(self.a.add(&other.a), self.b.add(&other.b), self.m)
    }

    pub fn sub(&self, other: &QuadExt) -> QuadExt {
        self.check_m(other);
        QuadExt::new(self.a.sub(&other.a), self.b.sub(&other.b), self.m)
    }

    pub fn neg(&self) -> QuadExt {
        QuadExt::new(self.a.neg(), self.b.neg(), self.m)
    }

    /// `(a1 + b1 c)(a2 + b2 c) = (a1 a2 + m b1 b2) + (a1 b2 + a2 b1) c`.
    pub fn mul(&self, other: &QuadExt) -> QuadExt {
        self.check_m(other);
        let m = LaurentPoly::constant(self.m.into());
        let a = self.a.mul(&other.a).add(&m.mul(&self.b.mul(&other.b)));
        let b = self.a.mul(&other.b).add(&self.b.mul(&other.a));
        QuadExt::new(a, b, self.m)
    }

    /// Conjugate `a - b*c`.
    pub fn conjugate(&self) -> QuadExt {
        QuadExt::new(self.a.clone(), self.b.neg(), self.m)
    }

    /// Norm `a^2 - m b^2`, a plain Laurent polynomial.
    pub fn norm(&self) -> LaurentPoly {
        self.mul(&self.conjugate()).a
    }
}

impl std::fmt::Display for QuadExt {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", self.a)
        } else if self.a.is_zero() {
            write!(f, "({})*c", self.b)
        } else {
            write!(f, "{} + ({})*c", self.a, self.b)
        }
    }
}
