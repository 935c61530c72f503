//! Trace polynomials and R-polynomials.
//!
//! `tau(w, q)` is the trace of left multiplication by `T_w` on the Hecke
//! algebra: `tau(w, q) = sum_z [T_z](T_w T_z)`. Its rescaled form
//! `taut(w) = v^{-|w|} tau(w, q)` equals the diagonal structure-constant sum
//! `sum_z c_{w,z}^z`, a polynomial in `delta = v - v^-1` with non-negative
//! coefficients; both facts are verified on the fly.
//!
//! `R_{z,w}(q)` are the coefficients of the expansion
//! `(-q)^{|w|} T_{w^-1}^-1 = sum_z (-1)^{|z|} R_{z,w}(q) T_z`; the rescaled
//! `Rt_{z,w} = v^{-|w|+|z|} R_{z,w}` satisfies the recursion (`s` a left
//! descent of `y`)
//!
//! ```text
//! Rt_{z,y} = Rt_{sz,sy}                               if |sz| < |z|,
//! Rt_{z,y} = (v - v^-1) Rt_{sz,y} + Rt_{sz,sy}        if |sz| > |z|,
//! ```
//!
//! with `Rt_{z,1} = [z = 1]`, and is likewise bar-symmetric and
//! delta-positive.

use std::collections::HashMap;
use std::sync::Arc;

use num_bigint::{BigInt, Sign};
use serde::Serialize;

use crate::cartan::WeylGroup;
use crate::error::{Error, Result};
use crate::hecke::{HeckeBasis, HeckeElement};
use crate::rings::{LaurentPoly, QPoly};

/// Order cap for the brute-force trace oracle. The oracle exists to
/// cross-check the production algorithm, so it stays deliberately small.
pub const ORACLE_MAX_ORDER: usize = 1152;

/// `tau(w, q)` together with its rescaled and delta-expanded forms.
#[derive(Clone, Debug, Serialize)]
pub struct TracePoly {
    /// Canonical reduced word of `w`.
    pub w: Vec<usize>,
    /// `tau(w, q)` in `Z[q]`.
    pub tau_q: QPoly,
    /// `taut(w) = v^{-|w|} tau(w, v^2)`.
    pub tau_tilde: LaurentPoly,
    /// Coefficients of `taut(w)` as a polynomial in `delta = v - v^-1`.
    #[serde(serialize_with = "ser_bigints")]
    pub delta_coeffs: Vec<BigInt>,
}

/// `R_{z,w}(q)` together with its rescaled and delta-expanded forms.
#[derive(Clone, Debug, Serialize)]
pub struct RPoly {
    /// Canonical reduced word of `z`.
    pub z: Vec<usize>,
    /// Canonical reduced word of `w`.
    pub w: Vec<usize>,
    /// `R_{z,w}(q)` in `Z[q]`.
    pub r_q: QPoly,
    /// `Rt_{z,w} = v^{-|w|+|z|} R_{z,w}(v^2)`.
    pub r_tilde: LaurentPoly,
    /// Coefficients of `Rt_{z,w}` as a polynomial in `delta`.
    #[serde(serialize_with = "ser_bigints")]
    pub delta_coeffs: Vec<BigInt>,
}

fn ser_bigints<S: serde::Serializer>(
    coeffs: &[BigInt],
    serializer: S,
) -> std::result::Result<S::Ok, S::Error> {
    serializer.collect_seq(coeffs.iter().map(|c| c.to_string()))
}

/// Expands in delta and rejects negative coefficients: positivity is a
/// theorem, so failure signals an implementation bug, loudly.
fn positive_delta_expansion(
    value: &LaurentPoly,
    check: &str,
    witness: impl Fn() -> String,
) -> Result<Vec<BigInt>> {
    let coeffs = value.expand_in_delta().ok_or_else(|| Error::TheoremViolation {
        check: format!("{check}: expansion in (v - v^-1)"),
        witness: format!("{} is not in Z[delta]", witness()),
    })?;
    if coeffs.iter().any(|c| c.sign() == Sign::Minus) {
        return Err(Error::TheoremViolation {
            check: format!("{check}: delta-positivity"),
            witness: format!("{}: negative coefficient in {coeffs:?}", witness()),
        });
    }
    Ok(coeffs)
}

/// Computes `tau(w, q)` by summing the diagonal of left multiplication by
/// `Tt_w` in the rescaled basis, one column at a time.
pub fn tau(group: &Arc<WeylGroup>, w: u32) -> Result<TracePoly> {
    let word = group.reduced_word(w);
    let mut total = LaurentPoly::zero();
    for z in group.ids() {
        let mut h = HeckeElement::basis_element(group, HeckeBasis::Ttilde, z);
        for &s in word.iter().rev() {
            h = h.left_mul_gen(s - 1);
        }
        total = total.add(&h.coeff(z));
    }
    let delta_coeffs = positive_delta_expansion(&total, "tau", || {
        format!("taut({}) = {total}", crate::cartan::word_string(&word))
    })?;
    let tau_q = total.to_qpoly(word.len() as i64)?;
    assert!(
        tau_q.degree().is_none_or(|d| d <= word.len()),
        "deg tau exceeds |w|"
    );
    Ok(TracePoly {
        w: word,
        tau_q,
        tau_tilde: total,
        delta_coeffs,
    })
}

/// Literal implementation of the trace definition in the T basis — the
/// brute-force oracle the fast path is checked against.
pub fn tau_direct_oracle(group: &Arc<WeylGroup>, w: u32) -> Result<QPoly> {
    if group.order() > ORACLE_MAX_ORDER {
        return Err(Error::OracleBudgetExceeded {
            order: group.order(),
            budget: ORACLE_MAX_ORDER,
        });
    }
    let word = group.reduced_word(w);
    let mut total = LaurentPoly::zero();
    for z in group.ids() {
        let mut h = HeckeElement::basis_element(group, HeckeBasis::T, z);
        for &s in word.iter().rev() {
            h = h.left_mul_gen(s - 1);
        }
        total = total.add(&h.coeff(z));
    }
    total.to_qpoly(0)
}

/// Memoizing evaluator for `Rt_{z,w}` and `R_{z,w}(q)`.
pub struct RTable {
    group: Arc<WeylGroup>,
    memo: HashMap<(u32, u32), LaurentPoly>,
}

impl RTable {
    pub fn new(group: &Arc<WeylGroup>) -> Self {
        RTable {
            group: Arc::clone(group),
            memo: HashMap::new(),
        }
    }

    pub fn group(&self) -> &Arc<WeylGroup> {
        &self.group
    }

    /// `Rt_{z,y}` via the descent recursion.
    pub fn r_tilde(&mut self, z: u32, y: u32) -> LaurentPoly {
        if y == 0 {
            return if z == 0 {
                LaurentPoly::one()
            } else {
                LaurentPoly::zero()
            };
        }
        if let Some(hit) = self.memo.get(&(z, y)) {
            return hit.clone();
        }
        let s = self
            .group
            .smallest_left_descent(y)
            .expect("non-identity element has a descent");
        let sy = self.group.left_mul_gen(s, y);
        let sz = self.group.left_mul_gen(s, z);
        let value = if self.group.length(sz) < self.group.length(z) {
            self.r_tilde(sz, sy)
        } else {
            self.r_tilde(sz, y)
                .mul(&LaurentPoly::delta())
                .add(&self.r_tilde(sz, sy))
        };
        self.memo.insert((z, y), value.clone());
        value
    }

    /// Full `RPoly` record for `(z, w)`, with delta-positivity verified.
    pub fn r_poly(&mut self, z: u32, w: u32) -> Result<RPoly> {
        let r_tilde = self.r_tilde(z, w);
        let z_word = self.group.reduced_word(z);
        let w_word = self.group.reduced_word(w);
        let delta_coeffs = positive_delta_expansion(&r_tilde, "r-poly", || {
            format!(
                "Rt({}, {}) = {r_tilde}",
                crate::cartan::word_string(&z_word),
                crate::cartan::word_string(&w_word)
            )
        })?;
        let r_q = if r_tilde.is_zero() {
            QPoly::zero()
        } else {
            r_tilde.to_qpoly(w_word.len() as i64 - z_word.len() as i64)?
        };
        Ok(RPoly {
            z: z_word,
            w: w_word,
            r_q,
            r_tilde,
            delta_coeffs,
        })
    }
}

/// `(-q)^n` as a Laurent polynomial in v.
fn minus_q_pow(n: usize) -> LaurentPoly {
    let sign = if n % 2 == 0 { 1 } else { -1 };
    LaurentPoly::term(2 * n as i64, BigInt::from(sign))
}

/// Checks `(-q)^{|w|} T_{w^-1}^-1 = sum_z (-1)^{|z|} R_{z,w}(q) T_z`
/// coefficient by coefficient. Returns the verdict and, on failure, a
/// printable discrepancy.
pub fn verify_inversion_identity(
    group: &Arc<WeylGroup>,
    rtable: &mut RTable,
    w: u32,
) -> Result<(bool, String)> {
    let n = group.length(w);
    let lhs = HeckeElement::invert_basis_element(group, group.inverse_id(w)).scale(&minus_q_pow(n));
    let mut rhs = HeckeElement::zero(group, HeckeBasis::T);
    for z in group.ids() {
        let r_tilde = rtable.r_tilde(z, w);
        if r_tilde.is_zero() {
            continue;
        }
        let shift = n as i64 - group.length(z) as i64;
        let sign = if group.length(z) % 2 == 0 { 1 } else { -1 };
        let coeff = r_tilde.mul_term(shift, &BigInt::from(sign));
        rhs = rhs.add(&HeckeElement::basis_element(group, HeckeBasis::T, z).scale(&coeff))?;
    }
    if lhs == rhs {
        return Ok((true, String::new()));
    }
    let witness = group
        .ids()
        .find(|&z| lhs.coeff(z) != rhs.coeff(z))
        .map(|z| {
            format!(
                "first mismatch at z = {}: lhs {} vs rhs {}",
                crate::cartan::word_string(&group.reduced_word(z)),
                lhs.coeff(z),
                rhs.coeff(z)
            )
        })
        .unwrap_or_else(|| "coefficient supports differ".to_string());
    Ok((false, witness))
}

/// Bar symmetry `bar(p) = p`, the rescaled form of the inversion symmetry
/// of tau and R.
pub fn bar_symmetric(p: &LaurentPoly) -> bool {
    p.bar() == *p
}

/// Per-class record of the monic-degree property for elliptic classes and
/// the (informational) constancy of tau on minimal-length members.
#[derive(Clone, Debug, Serialize)]
pub struct EllipticMonicRecord {
    /// Canonical word of the class representative.
    pub class_rep: Vec<usize>,
    pub is_elliptic: bool,
    pub min_length: usize,
    /// Number of minimal-length members inspected.
    pub minimal_count: usize,
    /// For elliptic classes: every minimal-length member has monic tau of
    /// degree exactly its length. Vacuously true otherwise.
    pub monic_ok: bool,
    /// Whether tau agrees across all minimal-length members.
    pub tau_constant: bool,
    /// tau of the representative, or a description of the failure.
    pub witness: String,
}

/// Runs the monic-degree check over every conjugacy class of the group.
pub fn elliptic_monic_report(group: &Arc<WeylGroup>) -> Result<Vec<EllipticMonicRecord>> {
    let mut records = Vec::new();
    for class in group.conjugacy_classes() {
        let taus: Vec<TracePoly> = class
            .minimal
            .iter()
            .map(|&m| tau(group, m))
            .collect::<Result<_>>()?;
        let tau_constant = taus.windows(2).all(|p| p[0].tau_q == p[1].tau_q);
        let monic_ok = !class.is_elliptic
            || taus
                .iter()
                .all(|t| t.tau_q.degree() == Some(class.min_length) && t.tau_q.is_monic());
        let rep_index = class
            .minimal
            .iter()
            .position(|&m| m == class.representative)
            .expect("representative is minimal");
        let witness = if monic_ok && tau_constant {
            format!("tau = {}", taus[rep_index].tau_q)
        } else {
            format!(
                "tau values on minimal members: [{}]",
                taus.iter()
                    .map(|t| t.tau_q.to_string())
                    .collect::<Vec<_>>()
                    .join("; ")
            )
        };
        records.push(EllipticMonicRecord {
            class_rep: group.reduced_word(class.representative),
            is_elliptic: class.is_elliptic,
            min_length: class.min_length,
            minimal_count: class.minimal.len(),
            monic_ok,
            tau_constant,
            witness,
        });
    }
    Ok(records)
}
