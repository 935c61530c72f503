//! The Iwahori-Hecke algebra of a Weyl group.
//!
//! Elements are sparse linear combinations of basis vectors indexed by group
//! elements, with coefficients in `Z[v, v^-1]` (`q` means `v^2`). Two bases
//! are supported:
//!
//! * the standard basis `T_w`, with `T_s T_x = T_{sx}` when `|sx| > |x|` and
//!   `T_s T_x = q T_{sx} + (q - 1) T_x` when `|sx| < |x|`;
//! * the rescaled basis `Tt_w = v^{-|w|} T_w`, where the same rule reads
//!   `Tt_s Tt_x = Tt_{sx} + (v - v^-1) Tt_x` on descents.
//!
//! Generators are invertible (`T_s^-1 = q^-1 T_s + (q^-1 - 1) T_1`), so basis
//! elements are too; inversion stays inside `Z[v, v^-1]` coefficients.

mod expr;
mod structconst;

pub use expr::parse_hecke_expr;
pub use structconst::{StructConstCache, DEFAULT_CACHE_LIMIT};

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::ser::{SerializeSeq, SerializeStruct, Serializer};
use serde::Serialize;

use crate::cartan::WeylGroup;
use crate::error::{Error, Result};
use crate::rings::LaurentPoly;

/// Which basis an element's coefficients refer to.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum HeckeBasis {
    /// The standard basis `T_w`.
    T,
    /// The rescaled basis `Tt_w = v^{-|w|} T_w`.
    Ttilde,
}

impl HeckeBasis {
    /// Short tag used in serialized output and the expression language.
    pub fn tag(self) -> &'static str {
        match self {
            HeckeBasis::T => "T",
            HeckeBasis::Ttilde => "Tt",
        }
    }
}

/// A sparse Hecke algebra element over `Z[v, v^-1]`.
#[derive(Clone)]
pub struct HeckeElement {
    group: Arc<WeylGroup>,
    basis: HeckeBasis,
    terms: BTreeMap<u32, LaurentPoly>,
}

/// `q - 1` as a Laurent polynomial in v.
fn q_minus_one() -> LaurentPoly {
    LaurentPoly::q().sub(&LaurentPoly::one())
}

/// `q^-1` as a Laurent polynomial in v.
fn q_inverse() -> LaurentPoly {
    LaurentPoly::term(-2, 1.into())
}

/// `q^-1 - 1` as a Laurent polynomial in v.
fn q_inverse_minus_one() -> LaurentPoly {
    q_inverse().sub(&LaurentPoly::one())
}

impl HeckeElement {
    pub fn zero(group: &Arc<WeylGroup>, basis: HeckeBasis) -> Self {
        HeckeElement {
            group: Arc::clone(group),
            basis,
            terms: BTreeMap::new(),
        }
    }

    /// The multiplicative identity (basis vector of the identity element).
    pub fn one(group: &Arc<WeylGroup>, basis: HeckeBasis) -> Self {
        HeckeElement::basis_element(group, basis, 0)
    }

    /// The basis vector indexed by `id`.
    pub fn basis_element(group: &Arc<WeylGroup>, basis: HeckeBasis, id: u32) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(id, LaurentPoly::one());
        HeckeElement {
            group: Arc::clone(group),
            basis,
            terms,
        }
    }

    /// A scalar multiple of the identity basis vector.
    pub fn scalar(group: &Arc<WeylGroup>, basis: HeckeBasis, value: LaurentPoly) -> Self {
        HeckeElement::one(group, basis).scale(&value)
    }

    pub fn group(&self) -> &Arc<WeylGroup> {
        &self.group
    }

    pub fn basis(&self) -> HeckeBasis {
        self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of the basis vector `id` (zero if absent).
    pub fn coeff(&self, id: u32) -> LaurentPoly {
        self.terms.get(&id).cloned().unwrap_or_else(LaurentPoly::zero)
    }

    /// Iterates `(id, coefficient)` pairs in ascending id order.
    pub fn terms(&self) -> impl Iterator<Item = (u32, &LaurentPoly)> {
        self.terms.iter().map(|(&id, c)| (id, c))
    }

    fn merge_term(terms: &mut BTreeMap<u32, LaurentPoly>, id: u32, value: LaurentPoly) {
        if value.is_zero() {
            return;
        }
        match terms.entry(id) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(value);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().add(&value);
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    fn check_group(&self, other: &Self) -> Result<()> {
        if self.group.datum().id() != other.group.datum().id() {
            return Err(Error::MixedDatum);
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_group(other)?;
        let other = other.to_basis(self.basis);
        let mut terms = self.terms.clone();
        for (id, c) in other.terms {
            Self::merge_term(&mut terms, id, c);
        }
        Ok(HeckeElement {
            group: Arc::clone(&self.group),
            basis: self.basis,
            terms,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs(|c| c.neg())
    }

    pub fn scale(&self, factor: &LaurentPoly) -> Self {
        if factor.is_zero() {
            return HeckeElement::zero(&self.group, self.basis);
        }
        self.map_coeffs(|c| c.mul(factor))
    }

    fn map_coeffs(&self, f: impl Fn(&LaurentPoly) -> LaurentPoly) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(&id, c)| (id, f(c)))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        HeckeElement {
            group: Arc::clone(&self.group),
            basis: self.basis,
            terms,
        }
    }

    /// Re-expresses the element in another basis (`T_w = v^{|w|} Tt_w`).
    pub fn to_basis(&self, basis: HeckeBasis) -> Self {
        if basis == self.basis {
            return self.clone();
        }
        let terms = self
            .terms
            .iter()
            .map(|(&id, c)| {
                let len = self.group.length(id) as i64;
                let shift = match basis {
                    // T coefficients become Tt coefficients: c T_w = c v^{|w|} Tt_w.
                    HeckeBasis::Ttilde => len,
                    HeckeBasis::T => -len,
                };
                (id, c.mul_term(shift, &1.into()))
            })
            .collect();
        HeckeElement {
            group: Arc::clone(&self.group),
            basis,
            terms,
        }
    }

    /// Left-multiplies by the generator basis vector (`T_s ·` or `Tt_s ·`),
    /// `g` 0-based.
    pub fn left_mul_gen(&self, g: usize) -> Self {
        let group = &self.group;
        let mut terms = BTreeMap::new();
        for (&x, c) in &self.terms {
            let sx = group.left_mul_gen(g, x);
            if group.length(sx) > group.length(x) {
                Self::merge_term(&mut terms, sx, c.clone());
            } else {
                match self.basis {
                    HeckeBasis::T => {
                        Self::merge_term(&mut terms, sx, c.mul(&LaurentPoly::q()));
                        Self::merge_term(&mut terms, x, c.mul(&q_minus_one()));
                    }
                    HeckeBasis::Ttilde => {
                        Self::merge_term(&mut terms, sx, c.clone());
                        Self::merge_term(&mut terms, x, c.mul(&LaurentPoly::delta()));
                    }
                }
            }
        }
        HeckeElement {
            group: Arc::clone(group),
            basis: self.basis,
            terms,
        }
    }

    /// Left-multiplies by the inverse of a generator basis vector, `g` 0-based.
    pub fn left_mul_gen_inv(&self, g: usize) -> Self {
        let group = &self.group;
        let mut terms = BTreeMap::new();
        for (&x, c) in &self.terms {
            let sx = group.left_mul_gen(g, x);
            if group.length(sx) < group.length(x) {
                // Descent: T_s^-1 T_x = T_{sx} (and likewise for Tt).
                Self::merge_term(&mut terms, sx, c.clone());
            } else {
                match self.basis {
                    HeckeBasis::T => {
                        Self::merge_term(&mut terms, sx, c.mul(&q_inverse()));
                        Self::merge_term(&mut terms, x, c.mul(&q_inverse_minus_one()));
                    }
                    HeckeBasis::Ttilde => {
                        Self::merge_term(&mut terms, sx, c.clone());
                        Self::merge_term(&mut terms, x, c.mul(&LaurentPoly::delta()).neg());
                    }
                }
            }
        }
        HeckeElement {
            group: Arc::clone(group),
            basis: self.basis,
            terms,
        }
    }

    /// Left-multiplies by the basis vector of `w` by chaining generators
    /// along its reduced word.
    pub fn left_mul_by(&self, w: u32) -> Self {
        let word = self.group.reduced_word(w);
        let mut acc = self.clone();
        for &s in word.iter().rev() {
            acc = acc.left_mul_gen(s - 1);
        }
        acc
    }

    /// Algebra product. Operands must come from the same group; the right
    /// factor is converted to the left factor's basis first.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_group(other)?;
        let other = other.to_basis(self.basis);
        let mut acc = HeckeElement::zero(&self.group, self.basis);
        for (&x, c) in &self.terms {
            let product = other.left_mul_by(x).scale(c);
            for (id, value) in product.terms {
                Self::merge_term(&mut acc.terms, id, value);
            }
        }
        Ok(acc)
    }

    /// `self^k` by repeated multiplication.
    pub fn pow(&self, k: u32) -> Result<Self> {
        let mut acc = HeckeElement::one(&self.group, self.basis);
        for _ in 0..k {
            acc = self.multiply(&acc)?;
        }
        Ok(acc)
    }

    /// `T_w^-1` in the T basis: the product of generator inverses along a
    /// reversed reduced word of `w`.
    pub fn invert_basis_element(group: &Arc<WeylGroup>, w: u32) -> Self {
        let word = group.reduced_word(w);
        HeckeElement::invert_word(group, &word).expect("canonical word is valid")
    }

    /// Inverse of the product `T_{s_1} ... T_{s_k}` for an arbitrary word
    /// (1-based indices), reduced or not.
    pub fn invert_word(group: &Arc<WeylGroup>, word: &[usize]) -> Result<Self> {
        let rank = group.rank();
        let mut acc = HeckeElement::one(group, HeckeBasis::T);
        for &s in word {
            if s == 0 || s > rank {
                return Err(Error::GeneratorOutOfRange { index: s, rank });
            }
            acc = acc.left_mul_gen_inv(s - 1);
        }
        Ok(acc)
    }

    /// Term ids sorted by (length, canonical word) — the deterministic
    /// output order.
    fn sorted_ids(&self) -> Vec<u32> {
        let mut ids: Vec<u32> = self.terms.keys().copied().collect();
        ids.sort_by_cached_key(|&id| (self.group.length(id), self.group.reduced_word(id)));
        ids
    }
}

impl PartialEq for HeckeElement {
    fn eq(&self, other: &Self) -> bool {
        self.group.datum().id() == other.group.datum().id()
            && self.basis == other.basis
            && self.terms == other.terms
    }
}

impl Eq for HeckeElement {}

impl std::fmt::Display for HeckeElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let tag = self.basis.tag();
        let parts: Vec<String> = self
            .sorted_ids()
            .into_iter()
            .map(|id| {
                let word = crate::cartan::word_string(&self.group.reduced_word(id));
                let c = &self.terms[&id];
                if c.is_one() {
                    format!("{tag}[{word}]")
                } else {
                    format!("({c})*{tag}[{word}]")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl std::fmt::Debug for HeckeElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "HeckeElement({self})")
    }
}

impl Serialize for HeckeElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        struct Terms<'a>(&'a HeckeElement);
        impl Serialize for Terms<'_> {
            fn serialize<S: Serializer>(
                &self,
                serializer: S,
            ) -> std::result::Result<S::Ok, S::Error> {
                let mut seq = serializer.serialize_seq(Some(self.0.terms.len()))?;
                for id in self.0.sorted_ids() {
                    #[derive(Serialize)]
                    struct Term<'a> {
                        word: Vec<usize>,
                        coeff: &'a LaurentPoly,
                    }
                    seq.serialize_element(&Term {
                        word: self.0.group.reduced_word(id),
                        coeff: &self.0.terms[&id],
                    })?;
                }
                seq.end()
            }
        }
        let mut s = serializer.serialize_struct("HeckeElement", 2)?;
        s.serialize_field("basis", self.basis.tag())?;
        s.serialize_field("terms", &Terms(self))?;
        s.end()
    }
}
