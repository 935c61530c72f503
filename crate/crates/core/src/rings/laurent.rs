//! Sparse Laurent polynomials in `v` with arbitrary-precision integer
//! coefficients.
//!
//! This is the coefficient ring for all Hecke-algebra computations: the
//! parameter `q` embeds as `v^2`, and the key combinatorial quantity
//! `delta = v - v^-1` lives here. Canonical form: terms sorted by ascending
//! exponent, no explicit zero coefficients (checked by construction).

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rings::qpoly::QPoly;

/// A Laurent polynomial `sum c_e v^e` over the integers.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    /// `(exponent, coefficient)` pairs, ascending in exponent, no zeros.
    terms: Vec<(i64, BigInt)>,
}

impl LaurentPoly {
    /// The zero polynomial.
    pub fn zero() -> Self {
        LaurentPoly { terms: Vec::new() }
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        LaurentPoly::constant(BigInt::one())
    }

    /// A constant polynomial.
    pub fn constant(c: BigInt) -> Self {
        LaurentPoly::term(0, c)
    }

    /// A single term `c * v^e`.
    pub fn term(e: i64, c: BigInt) -> Self {
        if c.is_zero() {
            LaurentPoly::zero()
        } else {
            LaurentPoly { terms: vec![(e, c)] }
        }
    }

    /// The variable `v`.
    pub fn v() -> Self {
        LaurentPoly::term(1, BigInt::one())
    }

    /// The parameter `q = v^2`.
    pub fn q() -> Self {
        LaurentPoly::term(2, BigInt::one())
    }

    /// `delta = v - v^-1`.
    pub fn delta() -> Self {
        LaurentPoly {
            terms: vec![(-1, -BigInt::one()), (1, BigInt::one())],
        }
    }

    /// Builds from arbitrary `(exponent, coefficient)` pairs, combining
    /// duplicates and dropping zeros.
    pub fn from_terms(pairs: impl IntoIterator<Item = (i64, BigInt)>) -> Self {
        let mut acc = LaurentPoly::zero();
        for (e, c) in pairs {
            acc.add_term(e, &c);
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == 0 && self.terms[0].1.is_one()
    }

    /// Smallest exponent with nonzero coefficient, if any.
    pub fn min_exp(&self) -> Option<i64> {
        self.terms.first().map(|t| t.0)
    }

    /// Largest exponent with nonzero coefficient, if any.
    pub fn max_exp(&self) -> Option<i64> {
        self.terms.last().map(|t| t.0)
    }

    /// Coefficient of `v^e` (zero if absent).
    pub fn coeff(&self, e: i64) -> BigInt {
        match self.terms.binary_search_by_key(&e, |t| t.0) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => BigInt::zero(),
        }
    }

    /// Iterates `(exponent, coefficient)` pairs in ascending exponent order.
    pub fn iter(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    /// Adds `c * v^e` in place.
    pub fn add_term(&mut self, e: i64, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.binary_search_by_key(&e, |t| t.0) {
            Ok(i) => {
                self.terms[i].1 += c;
                if self.terms[i].1.is_zero() {
                    self.terms.remove(i);
                }
            }
            Err(i) => self.terms.insert(i, (e, c.clone())),
        }
    }

    /// Adds `other` in place (merge of two sorted term lists).
    pub fn add_assign(&mut self, other: &LaurentPoly) {
        if other.is_zero() {
            return;
        }
        if self.is_zero() {
            *self = other.clone();
            return;
        }
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = other.terms.iter().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (Some(&&(ea, _)), Some(&&(eb, _))) => {
                    if ea < eb {
                        out.push(a.next().unwrap().clone());
                    } else if eb < ea {
                        out.push(b.next().unwrap().clone());
                    } else {
                        let (e, ca) = a.next().unwrap();
                        let (_, cb) = b.next().unwrap();
                        let c = ca + cb;
                        if !c.is_zero() {
                            out.push((*e, c));
                        }
                    }
                }
                (Some(_), None) => out.push(a.next().unwrap().clone()),
                (None, Some(_)) => out.push(b.next().unwrap().clone()),
                (None, None) => break,
            }
        }
        self.terms = out;
    }

    pub fn add(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn neg(&self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }

    pub fn sub(&self, other: &LaurentPoly) -> LaurentPoly {
        self.add(&other.neg())
    }

    /// Adds `scale_term(other, e, c)` in place; the workhorse of the Hecke
    /// multiplication inner loop.
    pub fn add_scaled_term(&mut self, other: &LaurentPoly, e: i64, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        for (eo, co) in &other.terms {
            self.add_term(eo + e, &(co * c));
        }
    }

    /// Multiplies by the single term `c * v^e`.
    pub fn mul_term(&self, e: i64, c: &BigInt) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(eo, co)| (eo + e, co * c)).collect(),
        }
    }

    pub fn mul(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        if self.terms.len() <= other.terms.len() {
            for (e, c) in &self.terms {
                out.add_scaled_term(other, *e, c);
            }
        } else {
            for (e, c) in &other.terms {
                out.add_scaled_term(self, *e, c);
            }
        }
        out
    }

    pub fn pow(&self, n: usize) -> LaurentPoly {
        let mut out = LaurentPoly::one();
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    /// The bar involution `v |-> -v^-1`, i.e. `v^n |-> (-1)^n v^-n`.
    pub fn bar(&self) -> LaurentPoly {
        let mut terms: Vec<(i64, BigInt)> = self
            .terms
            .iter()
            .map(|(e, c)| (-e, if e.rem_euclid(2) == 1 { -c } else { c.clone() }))
            .collect();
        terms.reverse();
        LaurentPoly { terms }
    }

    /// Expands `self` in powers of `delta = v - v^-1`, returning ascending
    /// coefficients `c` with `self = sum c[n] * delta^n`, or `None` when no
    /// such integer expansion exists. Greedy elimination of the leading term:
    /// `delta^n` is monic of top degree `n`, so the top coefficient of the
    /// remainder determines each `c[n]` uniquely.
    pub fn expand_in_delta(&self) -> Option<Vec<BigInt>> {
        let mut rem = self.clone();
        let mut coeffs: Vec<BigInt> = Vec::new();
        let delta = LaurentPoly::delta();
        while let Some(n) = rem.max_exp() {
            if n < 0 {
                return None;
            }
            let c = rem.coeff(n);
            if coeffs.len() <= n as usize {
                coeffs.resize(n as usize + 1, BigInt::zero());
            }
            coeffs[n as usize] = c.clone();
            rem = rem.sub(&delta.pow(n as usize).mul_term(0, &c));
        }
        Some(coeffs)
    }

    /// Converts `v^shift * self` to a polynomial in `q = v^2`. Fails unless
    /// every shifted exponent is even and non-negative.
    pub fn to_qpoly(&self, shift: i64) -> Result<QPoly> {
        let mut coeffs: Vec<BigInt> = Vec::new();
        for (e, c) in &self.terms {
            let s = e + shift;
            if s < 0 || s % 2 != 0 {
                return Err(Error::NotAQPolynomial {
                    shift,
                    exponent: *e,
                });
            }
            let k = (s / 2) as usize;
            if coeffs.len() <= k {
                coeffs.resize(k + 1, BigInt::zero());
            }
            coeffs[k] = c.clone();
        }
        Ok(QPoly::from_coeffs(coeffs))
    }
}

impl std::fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit_coeff = mag.is_one();
            match (*e, unit_coeff) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "v")?,
                (1, false) => write!(f, "{mag}*v")?,
                (_, true) => write!(f, "v^{e}")?,
                (_, false) => write!(f, "{mag}*v^{e}")?,
            }
        }
        Ok(())
    }
}

impl std::fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl serde::Serialize for LaurentPoly {
    /// Dense schema: `{"var":"v","min_exp":m,"coeffs":["...", ...]}` with
    /// decimal-string coefficients ascending from `min_exp`.
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let min = self.min_exp().unwrap_or(0);
        let max = self.max_exp().unwrap_or(-1);
        let mut dense: Vec<String> = Vec::new();
        for e in min..=max {
            dense.push(self.coeff(e).to_string());
        }
        let mut st = s.serialize_struct("LaurentPoly", 3)?;
        st.serialize_field("var", "v")?;
        st.serialize_field("min_exp", &min)?;
        st.serialize_field("coeffs", &dense)?;
        st.end()
    }
}
