//! Full enumeration of a Weyl group with multiplication tables, Poincare
//! polynomial, fundamental degrees and conjugacy classes.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_traits::One;

use crate::cartan::{CartanDatum, WeylElement};
use crate::error::{Error, Result};
use crate::rings::QPoly;

/// A conjugacy class, recorded through element ids of its [`WeylGroup`].
#[derive(Debug, Clone)]
pub struct ConjugacyClass {
    /// All member ids, ascending.
    pub members: Vec<u32>,
    /// Minimal Coxeter length attained in the class.
    pub min_length: usize,
    /// Ids of the members of minimal length, ascending.
    pub minimal: Vec<u32>,
    /// The minimal-length member with the lexicographically smallest
    /// reduced word.
    pub representative: u32,
    /// Whether the class is elliptic: `det(I - M_y) != 0` on the root
    /// lattice (constant across the class).
    pub is_elliptic: bool,
}

/// An enumerated Weyl group.
///
/// Elements are indexed breadth-first from the identity, so ids are sorted
/// by length. Left/right multiplication by generators and inversion are
/// table lookups; everything downstream (Hecke arithmetic, traces,
/// R-polynomials) works with these ids.
pub struct WeylGroup {
    datum: Arc<CartanDatum>,
    elements: Vec<WeylElement>,
    index: HashMap<Box<[i32]>, u32>,
    lengths: Vec<u32>,
    right_gen: Vec<u32>,
    left_gen: Vec<u32>,
    inverse: Vec<u32>,
    poincare: QPoly,
    degrees: Vec<usize>,
    classes: OnceLock<Vec<ConjugacyClass>>,
    class_index: OnceLock<Vec<u32>>,
}

impl WeylGroup {
    /// Parses a type string and enumerates the group, subject to the order
    /// budget.
    pub fn new(spec: &str, max_order: u128) -> Result<Arc<WeylGroup>> {
        WeylGroup::build(CartanDatum::parse(spec, max_order)?)
    }

    /// Enumerates the group of an already parsed datum by breadth-first
    /// search over right multiplication by generators.
    pub fn build(datum: Arc<CartanDatum>) -> Result<Arc<WeylGroup>> {
        let rank = datum.rank();
        // Cap the up-front reservation: a user-raised budget should grow
        // memory as the search proceeds, not demand the worst case at once.
        let expected: usize = datum
            .order()
            .min(&num_bigint::BigUint::from(1u32 << 22))
            .try_into()
            .expect("capped order fits usize");

        let mut elements: Vec<WeylElement> = Vec::with_capacity(expected);
        let mut index: HashMap<Box<[i32]>, u32> = HashMap::with_capacity(expected * 2);
        let mut right_gen: Vec<u32> = Vec::with_capacity(expected * rank);

        let id_elt = WeylElement::identity(&datum);
        index.insert(id_elt.perm().into(), 0);
        elements.push(id_elt);

        let gens: Vec<WeylElement> = (1..=rank)
            .map(|i| WeylElement::generator(&datum, i).expect("valid index"))
            .collect();

        let mut cursor = 0usize;
        while cursor < elements.len() {
            for g in &gens {
                let product = elements[cursor].multiply(g).expect("same datum");
                let next_id = elements.len() as u32;
                let id = *index.entry(product.perm().into()).or_insert_with(|| {
                    elements.push(product);
                    next_id
                });
                right_gen.push(id);
            }
            cursor += 1;
        }
        assert_eq!(
            elements.len(),
            expected,
            "enumeration disagrees with the closed-form order"
        );

        let lengths: Vec<u32> = elements.iter().map(|w| w.length() as u32).collect();
        let mut left_gen = Vec::with_capacity(expected * rank);
        let mut inverse = Vec::with_capacity(expected);
        for w in &elements {
            for g in &gens {
                let product = g.multiply(w).expect("same datum");
                left_gen.push(index[product.perm()]);
            }
            inverse.push(index[w.inverse().perm()]);
        }

        let poincare = QPoly::from_coeffs({
            let nu = datum.nu();
            let mut coeffs = vec![BigInt::from(0); nu + 1];
            for &l in &lengths {
                coeffs[l as usize] += BigInt::one();
            }
            coeffs
        });
        let degrees = deflate_degrees(&poincare, rank, datum.nu())?;

        Ok(Arc::new(WeylGroup {
            datum,
            elements,
            index,
            lengths,
            right_gen,
            left_gen,
            inverse,
            poincare,
            degrees,
            classes: OnceLock::new(),
            class_index: OnceLock::new(),
        }))
    }

    pub fn datum(&self) -> &Arc<CartanDatum> {
        &self.datum
    }

    pub fn type_spec(&self) -> &str {
        self.datum.type_spec()
    }

    pub fn rank(&self) -> usize {
        self.datum.rank()
    }

    pub fn nu(&self) -> usize {
        self.datum.nu()
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// All element ids, `0..order`, ascending in length.
    pub fn ids(&self) -> impl Iterator<Item = u32> {
        0..self.order() as u32
    }

    pub fn element(&self, id: u32) -> &WeylElement {
        &self.elements[id as usize]
    }

    pub fn length(&self, id: u32) -> usize {
        self.lengths[id as usize] as usize
    }

    /// Id of an element built elsewhere from the same datum.
    pub fn id_of(&self, w: &WeylElement) -> Result<u32> {
        if w.datum().id() != self.datum.id() {
            return Err(Error::MixedDatum);
        }
        Ok(*self
            .index
            .get(w.perm())
            .expect("every element of the datum is enumerated"))
    }

    /// Id of the product of generators along a 1-based word.
    pub fn word_id(&self, word: &[usize]) -> Result<u32> {
        let mut id = 0u32;
        for &i in word {
            if i == 0 || i > self.rank() {
                return Err(Error::GeneratorOutOfRange {
                    index: i,
                    rank: self.rank(),
                });
            }
            id = self.right_mul_gen(id, i - 1);
        }
        Ok(id)
    }

    /// `s_g * w` for a 0-based generator index.
    pub fn left_mul_gen(&self, g: usize, id: u32) -> u32 {
        self.left_gen[id as usize * self.rank() + g]
    }

    /// `w * s_g` for a 0-based generator index.
    pub fn right_mul_gen(&self, id: u32, g: usize) -> u32 {
        self.right_gen[id as usize * self.rank() + g]
    }

    pub fn inverse_id(&self, id: u32) -> u32 {
        self.inverse[id as usize]
    }

    /// Smallest 0-based `g` with `|s_g w| < |w|`, `None` for the identity.
    pub fn smallest_left_descent(&self, id: u32) -> Option<usize> {
        let l = self.lengths[id as usize];
        (0..self.rank()).find(|&g| self.lengths[self.left_mul_gen(g, id) as usize] < l)
    }

    /// Canonical reduced word (1-based, lexicographically smallest).
    pub fn reduced_word(&self, id: u32) -> Vec<usize> {
        let mut word = Vec::with_capacity(self.length(id));
        let mut cur = id;
        while let Some(g) = self.smallest_left_descent(cur) {
            word.push(g + 1);
            cur = self.left_mul_gen(g, cur);
        }
        word
    }

    /// Poincare polynomial `W(q) = sum_w q^(|w|)`.
    pub fn poincare_polynomial(&self) -> &QPoly {
        &self.poincare
    }

    /// Fundamental degrees `d_1 <= ... <= d_rank`, recovered by deflating
    /// `W(q)` by q-integers.
    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    /// Conjugacy classes, sorted by (minimal length, representative word).
    /// Computed once on first use.
    pub fn conjugacy_classes(&self) -> &[ConjugacyClass] {
        self.classes.get_or_init(|| self.compute_classes())
    }

    /// The conjugacy class containing `id`.
    pub fn class_of(&self, id: u32) -> &ConjugacyClass {
        let index = self.class_index.get_or_init(|| {
            let mut lookup = vec![0u32; self.order()];
            for (c, class) in self.conjugacy_classes().iter().enumerate() {
                for &m in &class.members {
                    lookup[m as usize] = c as u32;
                }
            }
            lookup
        });
        &self.conjugacy_classes()[index[id as usize] as usize]
    }

    /// Whether `id` is elliptic and of minimal length in its class.
    pub fn is_elliptic_minimal(&self, id: u32) -> bool {
        let class = self.class_of(id);
        class.is_elliptic && self.length(id) == class.min_length
    }

    fn compute_classes(&self) -> Vec<ConjugacyClass> {
        let n = self.order();
        let rank = self.rank();
        let mut seen = vec![false; n];
        let mut classes: Vec<ConjugacyClass> = Vec::new();
        for seed in 0..n as u32 {
            if seen[seed as usize] {
                continue;
            }
            // Orbit of `seed` under w -> s w s for all simple s.
            let mut members = vec![seed];
            seen[seed as usize] = true;
            let mut frontier = vec![seed];
            while let Some(w) = frontier.pop() {
                for g in 0..rank {
                    let conj = self.left_mul_gen(g, self.right_mul_gen(w, g));
                    if !seen[conj as usize] {
                        seen[conj as usize] = true;
                        members.push(conj);
                        frontier.push(conj);
                    }
                }
            }
            members.sort_unstable();
            let min_length = members.iter().map(|&m| self.length(m)).min().unwrap();
            let minimal: Vec<u32> = members
                .iter()
                .copied()
                .filter(|&m| self.length(m) == min_length)
                .collect();
            let representative = minimal
                .iter()
                .copied()
                .min_by_key(|&m| self.reduced_word(m))
                .unwrap();
            let is_elliptic = self.element(representative).is_elliptic();
            classes.push(ConjugacyClass {
                members,
                min_length,
                minimal,
                representative,
                is_elliptic,
            });
        }
        classes.sort_by_key(|c| (c.min_length, self.reduced_word(c.representative)));
        classes
    }
}

impl std::fmt::Debug for WeylGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "WeylGroup({}, order {})",
            self.datum.type_spec(),
            self.order()
        )
    }
}

/// Recovers the fundamental degrees from `W(q)`: repeatedly divide out the
/// largest q-integer `[d]_q` that divides exactly, starting from
/// `d = nu + 1`. The greedy choice is forced: `[d]_q` divides the remaining
/// product of q-integers iff `d` still occurs among the remaining degrees.
fn deflate_degrees(poincare: &QPoly, rank: usize, nu: usize) -> Result<Vec<usize>> {
    let mut degrees = Vec::with_capacity(rank);
    let mut rest = poincare.clone();
    let mut d = nu + 1;
    while d >= 2 && !rest.is_one() {
        let qd = QPoly::q_integer(d);
        loop {
            match rest.div_exact(&qd) {
                Ok(quot) => {
                    degrees.push(d);
                    rest = quot;
                }
                Err(_) => break,
            }
            if rest.is_one() {
                break;
            }
        }
        d -= 1;
    }
    if !rest.is_one() || degrees.len() != rank {
        return Err(Error::TheoremViolation {
            check: "degree-deflation".to_string(),
            witness: format!("W(q) = {poincare} did not deflate to {rank} q-integers"),
        });
    }
    degrees.sort_unstable();
    Ok(degrees)
}
