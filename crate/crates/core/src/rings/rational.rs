//! Rational functions in `q` in canonical reduced form.
//!
//! Identities between counting formulas are stated as equalities of rational
//! functions, so equality here must be decidable syntactically: numerator and
//! denominator are kept coprime (including integer content) with a positive
//! leading coefficient on the denominator. Two equal rational functions then
//! have identical representations.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rings::qpoly::QPoly;

/// A quotient `num/den` of integer polynomials in canonical reduced form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QRational {
    num: QPoly,
    den: QPoly,
}

impl QRational {
    /// Builds `num/den`, reducing to canonical form. Errors if `den = 0`.
    pub fn new(num: QPoly, den: QPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(QRational {
                num: QPoly::zero(),
                den: QPoly::one(),
            });
        }
        let g = num.gcd(&den);
        let mut num = num.div_exact(&g).expect("gcd divides numerator");
        let mut den = den.div_exact(&g).expect("gcd divides denominator");
        if den.leading() < BigInt::zero() {
            num = num.neg();
            den = den.neg();
        }
        Ok(QRational { num, den })
    }

    pub fn zero() -> Self {
        QRational {
            num: QPoly::zero(),
            den: QPoly::one(),
        }
    }

    pub fn one() -> Self {
        QRational {
            num: QPoly::one(),
            den: QPoly::one(),
        }
    }

    pub fn from_poly(p: QPoly) -> Self {
        QRational {
            num: p,
            den: QPoly::one(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        QRational::from_poly(QPoly::from_i64(n))
    }

    pub fn numerator(&self) -> &QPoly {
        &self.num
    }

    pub fn denominator(&self) -> &QPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// True when the canonical denominator is 1.
    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// The underlying polynomial, when there is one.
    pub fn as_polynomial(&self) -> Option<&QPoly> {
        self.is_polynomial().then_some(&self.num)
    }

    pub fn add(&self, other: &QRational) -> QRational {
        QRational::new(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
        .expect("nonzero denominators")
    }

    pub fn neg(&self) -> QRational {
        QRational {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, other: &QRational) -> QRational {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &QRational) -> QRational {
        QRational::new(self.num.mul(&other.num), self.den.mul(&other.den))
            .expect("nonzero denominators")
    }

    pub fn div(&self, other: &QRational) -> Result<QRational> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        QRational::new(self.num.mul(&other.den), self.den.mul(&other.num))
    }

    pub fn mul_scalar(&self, c: &BigInt) -> QRational {
        QRational::new(self.num.mul_scalar(c), self.den.clone()).expect("nonzero denominator")
    }

    /// Evaluates at a rational point; errors if the denominator vanishes.
    pub fn eval(&self, x: &BigRational) -> Result<BigRational> {
        let d = self.den.eval_rational(x);
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.num.eval_rational(x) / d)
    }
}

impl std::fmt::Display for QRational {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_polynomial() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl std::fmt::Debug for QRational {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "QRational({self})")
    }
}

impl serde::Serialize for QRational {
    /// Schema: `{"num": <QPoly>, "den": <QPoly>}`.
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("QRational", 2)?;
        st.serialize_field("num", &self.num)?;
        st.serialize_field("den", &self.den)?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(cs: &[i64]) -> QPoly {
        QPoly::from_coeffs(cs.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn reduction_to_canonical_form() {
        // (q^2 - 1)/(q - 1) reduces to the polynomial q + 1.
        let r = QRational::new(poly(&[-1, 0, 1]), poly(&[-1, 1])).unwrap();
        assert!(r.is_polynomial());
        assert_eq!(r.as_polynomial().unwrap(), &poly(&[1, 1]));
        // Content is removed too: (2q + 2)/4 = (q + 1)/2.
        let r = QRational::new(poly(&[2, 2]), poly(&[4])).unwrap();
        assert_eq!(r.numerator(), &poly(&[1, 1]));
        assert_eq!(r.denominator(), &poly(&[2]));
        // Denominator sign is normalized.
        let r = QRational::new(poly(&[1]), poly(&[1, -1])).unwrap();
        assert_eq!(r.denominator(), &poly(&[-1, 1]));
        assert_eq!(r.numerator(), &poly(&[-1]));
    }

    #[test]
    fn field_operations() {
        let a = QRational::new(poly(&[1]), poly(&[-1, 1])).unwrap(); // 1/(q-1)
        let b = QRational::new(poly(&[1]), poly(&[1, 1])).unwrap(); // 1/(q+1)
        // 1/(q-1) + 1/(q+1) = 2q/(q^2-1)
        let sum = a.add(&b);
        assert_eq!(sum.numerator(), &poly(&[0, 2]));
        assert_eq!(sum.denominator(), &poly(&[-1, 0, 1]));
        // a * (q-1) = 1
        let one = a.mul(&QRational::from_poly(poly(&[-1, 1])));
        assert_eq!(one, QRational::one());
        // Division and subtraction round-trip.
        assert_eq!(sum.sub(&b), a);
        assert_eq!(sum.div(&a).unwrap().mul(&a), sum);
        assert!(a.div(&QRational::zero()).is_err());
        assert!(!a.is_polynomial());
    }

    #[test]
    fn evaluation() {
        let r = QRational::new(poly(&[1]), poly(&[-1, 1])).unwrap(); // 1/(q-1)
        let at3 = r.eval(&BigRational::from(BigInt::from(3))).unwrap();
        assert_eq!(at3, BigRational::new(BigInt::from(1), BigInt::from(2)));
        assert!(r.eval(&BigRational::from(BigInt::from(1))).is_err());
    }

    #[test]
    fn equality_is_syntactic_after_canonicalization() {
        let a = QRational::new(poly(&[0, 2]), poly(&[-2, 0, 2])).unwrap();
        let b = QRational::new(poly(&[0, 1]), poly(&[-1, 0, 1])).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn json_schema() {
        let r = QRational::new(poly(&[1]), poly(&[-1, 1])).unwrap();
        assert_eq!(
            serde_json::to_string(&r).unwrap(),
            r#"{"num":{"var":"q","coeffs":["1"]},"den":{"var":"q","coeffs":["-1","1"]}}"#
        );
    }
}
