//! Weyl group elements as signed permutations of the positive roots.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::cartan::CartanDatum;
use crate::error::{Error, Result};
use crate::rings::QPoly;

/// A Weyl group element.
///
/// `perm[k] = +-(j+1)` records `w(beta_k) = +-beta_j` on the positive roots
/// `beta_0, ..., beta_{nu-1}` of its datum (simple roots first). The length
/// is the number of sign flips, cached at construction. The matrix of the
/// element on the root lattice is recovered on demand from the images of the
/// simple roots, and the two descriptions are cross-checked in the tests.
#[derive(Clone)]
pub struct WeylElement {
    datum: Arc<CartanDatum>,
    perm: Box<[i32]>,
    length: u32,
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.datum.id() == other.datum.id() && self.perm == other.perm
    }
}

impl Eq for WeylElement {}

impl std::hash::Hash for WeylElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.datum.id().hash(state);
        self.perm.hash(state);
    }
}

/// Applies a signed permutation to a signed index.
fn apply(perm: &[i32], t: i32) -> i32 {
    let u = perm[t.unsigned_abs() as usize - 1];
    if t < 0 {
        -u
    } else {
        u
    }
}

/// Composition `(a . b)(x) = a(b(x))` of signed permutations.
fn compose(a: &[i32], b: &[i32]) -> Box<[i32]> {
    b.iter().map(|&t| apply(a, t)).collect()
}

fn length_of(perm: &[i32]) -> u32 {
    perm.iter().filter(|&&t| t < 0).count() as u32
}

impl WeylElement {
    pub(crate) fn from_perm(datum: Arc<CartanDatum>, perm: Box<[i32]>) -> Self {
        let length = length_of(&perm);
        WeylElement {
            datum,
            perm,
            length,
        }
    }

    /// The identity element.
    pub fn identity(datum: &Arc<CartanDatum>) -> Self {
        let perm: Box<[i32]> = (1..=datum.nu() as i32).collect();
        WeylElement::from_perm(datum.clone(), perm)
    }

    /// The simple reflection `s_i`, 1-based.
    pub fn generator(datum: &Arc<CartanDatum>, i: usize) -> Result<Self> {
        if i == 0 || i > datum.rank() {
            return Err(Error::GeneratorOutOfRange {
                index: i,
                rank: datum.rank(),
            });
        }
        Ok(WeylElement::from_perm(
            datum.clone(),
            datum.gen_perm(i - 1).into(),
        ))
    }

    /// Product of generators along a (not necessarily reduced) 1-based word.
    pub fn from_word(datum: &Arc<CartanDatum>, word: &[usize]) -> Result<Self> {
        let mut acc = WeylElement::identity(datum);
        for &i in word {
            let s = WeylElement::generator(datum, i)?;
            acc = acc.multiply(&s)?;
        }
        Ok(acc)
    }

    pub fn datum(&self) -> &Arc<CartanDatum> {
        &self.datum
    }

    pub(crate) fn perm(&self) -> &[i32] {
        &self.perm
    }

    /// Coxeter length: positive roots sent negative, equals reduced-word
    /// length.
    pub fn length(&self) -> usize {
        self.length as usize
    }

    pub fn is_identity(&self) -> bool {
        self.length == 0
    }

    /// Group product; both factors must come from the same parsed datum.
    pub fn multiply(&self, other: &WeylElement) -> Result<WeylElement> {
        if self.datum.id() != other.datum.id() {
            return Err(Error::MixedDatum);
        }
        Ok(WeylElement::from_perm(
            self.datum.clone(),
            compose(&self.perm, &other.perm),
        ))
    }

    pub fn inverse(&self) -> WeylElement {
        let mut inv = vec![0i32; self.perm.len()];
        for (k, &t) in self.perm.iter().enumerate() {
            let j = t.unsigned_abs() as usize - 1;
            let back = (k + 1) as i32;
            inv[j] = if t < 0 { -back } else { back };
        }
        WeylElement::from_perm(self.datum.clone(), inv.into_boxed_slice())
    }

    /// 1-based indices `i` with `|s_i w| < |w|`, equivalently
    /// `w^{-1}(alpha_i) < 0`: those `i` for which `-(i+1)` occurs in the
    /// permutation (some positive root maps onto `-alpha_i`).
    pub fn left_descents(&self) -> Vec<usize> {
        let rank = self.datum.rank();
        let mut seen = vec![false; rank];
        for &t in self.perm.iter() {
            if t < 0 {
                let j = (-t) as usize - 1;
                if j < rank {
                    seen[j] = true;
                }
            }
        }
        (0..rank).filter(|&j| seen[j]).map(|j| j + 1).collect()
    }

    pub fn smallest_left_descent(&self) -> Option<usize> {
        self.left_descents().into_iter().next()
    }

    /// The lexicographically smallest reduced word (1-based): repeatedly
    /// strip the smallest left descent.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut word = Vec::with_capacity(self.length());
        let mut cur = self.clone();
        while let Some(i) = cur.smallest_left_descent() {
            word.push(i);
            let s = WeylElement::generator(&self.datum, i).expect("descent index in range");
            cur = s.multiply(&cur).expect("same datum");
        }
        word
    }

    /// Matrix on the root lattice in simple-root coordinates, row-major:
    /// column `j` holds the coordinates of `w(alpha_j)`.
    pub fn matrix(&self) -> Vec<Vec<i64>> {
        let rank = self.datum.rank();
        let roots = self.datum.positive_roots();
        let mut m = vec![vec![0i64; rank]; rank];
        for j in 0..rank {
            let t = self.perm[j];
            let image = &roots[t.unsigned_abs() as usize - 1];
            let sign = if t < 0 { -1 } else { 1 };
            for (row, &c) in image.iter().enumerate() {
                m[row][j] = sign * c;
            }
        }
        m
    }

    /// Characteristic polynomial `det(q*I - M_w)` of the element on the
    /// root lattice, computed with the Faddeev-LeVerrier recurrence (all
    /// divisions exact over the integers).
    pub fn reflection_char_poly(&self) -> QPoly {
        let m = self.matrix();
        let n = self.datum.rank();
        let mat: Vec<Vec<BigInt>> = m
            .iter()
            .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
            .collect();

        let mul = |a: &Vec<Vec<BigInt>>, b: &Vec<Vec<BigInt>>| -> Vec<Vec<BigInt>> {
            let mut out = vec![vec![BigInt::zero(); n]; n];
            for i in 0..n {
                for k in 0..n {
                    if a[i][k].is_zero() {
                        continue;
                    }
                    for j in 0..n {
                        let t = &a[i][k] * &b[k][j];
                        out[i][j] += t;
                    }
                }
            }
            out
        };
        let trace = |a: &Vec<Vec<BigInt>>| -> BigInt { (0..n).map(|i| a[i][i].clone()).sum() };

        // p(q) = q^n + c[1] q^(n-1) + ... + c[n]
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[0] = BigInt::one();
        let mut mk = mat.clone();
        for k in 1..=n {
            let ck = -trace(&mk) / BigInt::from(k as u64);
            coeffs[k] = ck.clone();
            if k < n {
                let mut shifted = mk;
                for (i, row) in shifted.iter_mut().enumerate().take(n) {
                    row[i] += &ck;
                }
                mk = mul(&mat, &shifted);
            }
        }
        coeffs.reverse();
        QPoly::from_coeffs(coeffs)
    }

    /// True when `w` fixes no nonzero vector of the reflection
    /// representation, i.e. `det(I - M_w) != 0`.
    pub fn is_elliptic(&self) -> bool {
        !self.reflection_char_poly().eval(&BigInt::one()).is_zero()
    }
}

impl std::fmt::Display for WeylElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", crate::cartan::word_string(&self.reduced_word()))
    }
}

impl std::fmt::Debug for WeylElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "WeylElement({} in {})", self, self.datum.type_spec())
    }
}

impl serde::Serialize for WeylElement {
    /// Schema: `{"word":[i1,...]}` with the canonical reduced word.
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("WeylElement", 1)?;
        st.serialize_field("word", &self.reduced_word())?;
        st.end()
    }
}
