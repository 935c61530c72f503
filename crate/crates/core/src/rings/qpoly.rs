//! Dense polynomials in `q` with arbitrary-precision integer coefficients.
//!
//! Used for trace polynomials, R-polynomials in their `q`-form, Poincare
//! polynomials and characteristic polynomials. Canonical form: ascending
//! coefficient vector with no trailing zeros.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rings::laurent::LaurentPoly;

/// An integer polynomial `sum coeffs[i] * q^i`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QPoly {
    coeffs: Vec<BigInt>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        QPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        QPoly::from_coeffs(vec![c])
    }

    pub fn from_i64(c: i64) -> Self {
        QPoly::constant(BigInt::from(c))
    }

    /// The variable `q`.
    pub fn q() -> Self {
        QPoly::from_coeffs(vec![BigInt::zero(), BigInt::one()])
    }

    /// `c * q^e`.
    pub fn monomial(e: usize, c: BigInt) -> Self {
        let mut coeffs = vec![BigInt::zero(); e + 1];
        coeffs[e] = c;
        QPoly::from_coeffs(coeffs)
    }

    /// The q-integer `[d]_q = 1 + q + ... + q^(d-1)`.
    pub fn q_integer(d: usize) -> Self {
        QPoly::from_coeffs(vec![BigInt::one(); d])
    }

    /// Builds from an ascending coefficient vector, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Leading coefficient (zero for the zero polynomial).
    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_one()
    }

    /// Coefficient of `q^i`.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Ascending coefficients (no trailing zeros).
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn add(&self, other: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![BigInt::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] += c;
        }
        QPoly::from_coeffs(out)
    }

    pub fn neg(&self) -> QPoly {
        QPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn sub(&self, other: &QPoly) -> QPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &QPoly) -> QPoly {
        if self.is_zero() || other.is_zero() {
            return QPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        QPoly::from_coeffs(out)
    }

    pub fn mul_scalar(&self, c: &BigInt) -> QPoly {
        if c.is_zero() {
            return QPoly::zero();
        }
        QPoly {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    pub fn pow(&self, n: usize) -> QPoly {
        let mut out = QPoly::one();
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    /// Evaluates at an integer point.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Evaluates at a rational point.
    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from(c.clone());
        }
        acc
    }

    /// Exact division in Z[q]: returns the quotient when `self = quot * d`
    /// with integer coefficients, and an error otherwise. Implemented as
    /// long division over the rationals followed by integrality checks, so
    /// non-monic divisors (e.g. gcds) are handled correctly.
    pub fn div_exact(&self, d: &QPoly) -> Result<QPoly> {
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(QPoly::zero());
        }
        let dd = d.degree().unwrap();
        let nd = self.degree().unwrap();
        if nd < dd {
            return Err(Error::InexactDivision {
                context: format!("({self}) / ({d})"),
            });
        }
        let lead = BigRational::from(d.leading());
        let mut rem: Vec<BigRational> = self
            .coeffs
            .iter()
            .map(|c| BigRational::from(c.clone()))
            .collect();
        let mut quot = vec![BigRational::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = rem[k + dd].clone() / lead.clone();
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    let sub = c.clone() * BigRational::from(dc.clone());
                    rem[k + j] -= sub;
                }
            }
            quot[k] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::InexactDivision {
                context: format!("({self}) / ({d})"),
            });
        }
        let mut out = Vec::with_capacity(quot.len());
        for c in quot {
            if !c.is_integer() {
                return Err(Error::InexactDivision {
                    context: format!("({self}) / ({d})"),
                });
            }
            out.push(c.to_integer());
        }
        Ok(QPoly::from_coeffs(out))
    }

    /// True when `d` divides `self` exactly in Z[q].
    pub fn divisible_by(&self, d: &QPoly) -> bool {
        self.div_exact(d).is_ok()
    }

    /// Content: gcd of the coefficients (non-negative).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        g
    }

    /// Primitive part with positive leading coefficient; zero stays zero.
    pub fn primitive(&self) -> QPoly {
        if self.is_zero() {
            return QPoly::zero();
        }
        let mut c = self.content();
        if self.leading().is_negative() {
            c = -c;
        }
        QPoly {
            coeffs: self.coeffs.iter().map(|x| x / &c).collect(),
        }
    }

    /// Polynomial gcd in Z[q] via the primitive pseudo-remainder sequence.
    /// Result is normalized: primitive with positive leading coefficient,
    /// scaled by the gcd of the contents.
    pub fn gcd(&self, other: &QPoly) -> QPoly {
        if self.is_zero() {
            return other.primitive().mul_scalar(&other.content().abs());
        }
        if other.is_zero() {
            return self.primitive().mul_scalar(&self.content().abs());
        }
        let content_gcd = self.content().gcd(&other.content());
        let mut a = self.primitive();
        let mut b = other.primitive();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive();
            a = b;
            b = r;
        }
        a.primitive().mul_scalar(&content_gcd)
    }

    /// Pseudo-remainder: the remainder of `lc(d)^(deg a - deg d + 1) * a`
    /// divided by `d`, which stays in Z[q] by construction.
    fn pseudo_rem(&self, d: &QPoly) -> QPoly {
        let dd = d.degree().expect("pseudo_rem by zero");
        let mut rem = self.clone();
        let lead = d.leading();
        while let Some(nr) = rem.degree() {
            if nr < dd {
                break;
            }
            // rem <- lc(d)*rem - lc(rem)*q^(nr-dd)*d
            let lr = rem.leading();
            rem = rem
                .mul_scalar(&lead)
                .sub(&d.mul(&QPoly::monomial(nr - dd, lr)));
        }
        rem
    }

    /// Re-expresses in `v` via `q = v^2`.
    pub fn to_laurent(&self) -> LaurentPoly {
        LaurentPoly::from_terms(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (2 * i as i64, c.clone())),
        )
    }

    /// True when the coefficient list, padded to the stated degree, reads
    /// the same in both directions, i.e. `q^deg * f(1/q) = f(q)`.
    pub fn is_palindromic(&self, deg: usize) -> bool {
        let n = deg + 1;
        (0..n).all(|i| self.coeff(i) == self.coeff(deg - i))
    }
}

impl std::fmt::Display for QPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit = mag.is_one();
            match (e, unit) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{mag}*q")?,
                (_, true) => write!(f, "q^{e}")?,
                (_, false) => write!(f, "{mag}*q^{e}")?,
            }
        }
        Ok(())
    }
}

impl std::fmt::Debug for QPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "QPoly({self})")
    }
}

impl serde::Serialize for QPoly {
    /// Schema: `{"var":"q","coeffs":["c0","c1",...]}` with decimal strings.
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let dense: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        let mut st = s.serialize_struct("QPoly", 2)?;
        st.serialize_field("var", "q")?;
        st.serialize_field("coeffs", &dense)?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    fn poly(cs: &[i64]) -> QPoly {
        QPoly::from_coeffs(cs.iter().map(|&c| big(c)).collect())
    }

    #[test]
    fn canonical_and_basics() {
        assert_eq!(QPoly::from_coeffs(vec![big(0), big(0)]), QPoly::zero());
        assert_eq!(QPoly::q_integer(3), poly(&[1, 1, 1]));
        assert_eq!(QPoly::q_integer(1), QPoly::one());
        let f = poly(&[-1, 0, 1]); // q^2 - 1
        assert_eq!(f.degree(), Some(2));
        assert!(f.is_monic());
        assert_eq!(f.eval(&big(3)), big(8));
    }

    #[test]
    fn mul_and_pow() {
        // (q - 1)^2 = q^2 - 2q + 1
        let f = poly(&[-1, 1]);
        assert_eq!(f.pow(2), poly(&[1, -2, 1]));
        assert_eq!(f.mul(&QPoly::zero()), QPoly::zero());
    }

    #[test]
    fn exact_division() {
        // (q^2 - 1) / (q - 1) = q + 1
        let f = poly(&[-1, 0, 1]);
        let d = poly(&[-1, 1]);
        assert_eq!(f.div_exact(&d).unwrap(), poly(&[1, 1]));
        // (2q + 2) / 2 = q + 1
        assert_eq!(poly(&[2, 2]).div_exact(&poly(&[2])).unwrap(), poly(&[1, 1]));
        // q / (q - 1) leaves a remainder.
        assert!(poly(&[0, 1]).div_exact(&d).is_err());
        // (2q + 1) / 2 is not integral.
        assert!(poly(&[1, 2]).div_exact(&poly(&[2])).is_err());
        assert!(f.div_exact(&QPoly::zero()).is_err());
    }

    #[test]
    fn gcd_examples() {
        // gcd(q^2 - 1, q^2 - 2q + 1) = q - 1
        let a = poly(&[-1, 0, 1]);
        let b = poly(&[1, -2, 1]);
        assert_eq!(a.gcd(&b), poly(&[-1, 1]));
        // gcd includes content: gcd(2q + 2, 4) = 2.
        assert_eq!(poly(&[2, 2]).gcd(&poly(&[4])), poly(&[2]));
        // Sign normalization: positive leading coefficient.
        assert_eq!(poly(&[1, -1]).gcd(&poly(&[-1, 1])), poly(&[-1, 1]));
        assert_eq!(QPoly::zero().gcd(&poly(&[0, -2])), poly(&[0, 2]));
    }

    #[test]
    fn palindromes() {
        assert!(poly(&[1, 2, 1]).is_palindromic(2));
        assert!(!poly(&[1, 2, 1]).is_palindromic(3));
        assert!(poly(&[1]).is_palindromic(0));
        // Padding matters: q^2 + 1 is palindromic at degree 2.
        assert!(poly(&[1, 0, 1]).is_palindromic(2));
    }

    #[test]
    fn laurent_round_trip() {
        let f = poly(&[1, -2, 1]);
        assert_eq!(f.to_laurent().to_qpoly(0).unwrap(), f);
    }

    #[test]
    fn display_and_json() {
        assert_eq!(poly(&[1, -2, 1]).to_string(), "q^2 - 2*q + 1");
        assert_eq!(poly(&[0, 1]).to_string(), "q");
        assert_eq!(QPoly::zero().to_string(), "0");
        assert_eq!(
            serde_json::to_string(&poly(&[-1, 1])).unwrap(),
            r#"{"var":"q","coeffs":["-1","1"]}"#
        );
    }
}
