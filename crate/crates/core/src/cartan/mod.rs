//! Cartan types, root systems and Weyl group elements.
//!
//! A type string like `"B2"` or `"A1xA1"` is parsed into a [`CartanDatum`]:
//! the Cartan matrix, the closed set of positive roots (simple roots first)
//! and the signed-permutation action of each simple reflection on them.
//! Elements are stored as signed permutations of the positive roots; the
//! length of an element is the number of positive roots it makes negative,
//! which coincides with reduced-word length.

mod element;
mod group;

pub use element::WeylElement;
pub use group::{ConjugacyClass, WeylGroup};

use std::collections::{HashMap, HashSet, VecDeque};
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use num_bigint::BigUint;

use crate::error::{Error, Result};

/// Default upper bound on the group order accepted for enumeration.
pub const DEFAULT_MAX_ORDER: u128 = 1_000_000;

static NEXT_DATUM_ID: AtomicU64 = AtomicU64::new(1);

/// An irreducible crystallographic factor, e.g. `B3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Factor {
    letter: char,
    rank: usize,
}

/// Parsed Cartan type: matrix, positive roots, and simple-reflection action.
#[derive(Debug)]
pub struct CartanDatum {
    id: u64,
    type_spec: String,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    /// Positive roots in simple-root coordinates; the first `rank` entries
    /// are the simple roots themselves, the rest sorted by (height, coords).
    positive_roots: Vec<Vec<i64>>,
    order: BigUint,
    /// Signed permutation of the positive roots induced by each simple
    /// reflection: entry `k` holds `+-(j+1)` with `s_i(beta_k) = +-beta_j`.
    gen_perms: Vec<Box<[i32]>>,
}

impl CartanDatum {
    /// Parses a type string (grammar `IRR ('x' IRR)*`, `IRR` = letter `A`-`G`
    /// plus rank) and builds the root system. Rejects non-crystallographic
    /// letters, invalid ranks, and any group whose order exceeds `max_order`.
    pub fn parse(spec: &str, max_order: u128) -> Result<Arc<CartanDatum>> {
        let factors = parse_factors(spec)?;
        let rank: usize = factors.iter().map(|f| f.rank).sum();

        let order: BigUint = factors.iter().map(factor_order).product();
        if order > BigUint::from(max_order) {
            return Err(Error::BudgetExceeded {
                order: order.to_string(),
                budget: max_order.to_string(),
            });
        }

        let cartan = block_diagonal(&factors);
        let positive_roots = close_positive_roots(&cartan);
        let root_index: HashMap<&[i64], usize> = positive_roots
            .iter()
            .enumerate()
            .map(|(i, r)| (r.as_slice(), i))
            .collect();

        let mut gen_perms = Vec::with_capacity(rank);
        for i in 0..rank {
            let mut perm = Vec::with_capacity(positive_roots.len());
            for root in &positive_roots {
                let mut image = reflect(&cartan, i, root);
                let negative = image.iter().any(|&c| c < 0);
                if negative {
                    for c in &mut image {
                        *c = -*c;
                    }
                }
                let j = *root_index
                    .get(image.as_slice())
                    .expect("simple reflection permutes the roots");
                let signed = (j + 1) as i32;
                perm.push(if negative { -signed } else { signed });
            }
            gen_perms.push(perm.into_boxed_slice());
        }

        Ok(Arc::new(CartanDatum {
            id: NEXT_DATUM_ID.fetch_add(1, Ordering::Relaxed),
            type_spec: spec.to_string(),
            rank,
            cartan,
            positive_roots,
            order,
            gen_perms,
        }))
    }

    /// Unique identity of this parsed datum; elements from different data
    /// never mix even when the type strings agree.
    pub fn id(&self) -> u64 {
        self.id
    }

    pub fn type_spec(&self) -> &str {
        &self.type_spec
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Number of positive roots; also the length of the longest element.
    pub fn nu(&self) -> usize {
        self.positive_roots.len()
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    /// Group order (closed form, available before any enumeration).
    pub fn order(&self) -> &BigUint {
        &self.order
    }

    pub(crate) fn gen_perm(&self, i: usize) -> &[i32] {
        &self.gen_perms[i]
    }

    /// Braid exponent `m_ij` read off the Cartan matrix product
    /// `a_ij * a_ji in {0,1,2,3}`, mapping to `m in {2,3,4,6}`.
    pub fn coxeter_m(&self, i: usize, j: usize) -> usize {
        match self.cartan[i][j] * self.cartan[j][i] {
            0 => 2,
            1 => 3,
            2 => 4,
            3 => 6,
            other => unreachable!("non-crystallographic bond {other}"),
        }
    }
}

/// Renders a 1-based word compactly: digits when every index fits one digit,
/// comma-separated otherwise, `"e"` for the empty word.
pub fn word_string(word: &[usize]) -> String {
    if word.is_empty() {
        "e".to_string()
    } else if word.iter().all(|&i| i <= 9) {
        word.iter().map(|i| i.to_string()).collect()
    } else {
        word.iter()
            .map(|i| i.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// Parses a CLI-style word: `""` or `"e"` for the identity, a digit string
/// (`"121"`) for ranks up to 9, or comma-separated indices (`"1,2,1"`).
pub fn parse_word(input: &str, rank: usize) -> Result<Vec<usize>> {
    let s = input.trim();
    if s.is_empty() || s == "e" {
        return Ok(Vec::new());
    }
    let indices: Vec<usize> = if s.contains(',') {
        s.split(',')
            .map(|part| {
                part.trim().parse::<usize>().map_err(|_| Error::WordParse {
                    input: input.to_string(),
                    reason: format!("{part:?} is not a generator index"),
                })
            })
            .collect::<Result<_>>()?
    } else {
        s.chars()
            .map(|ch| {
                ch.to_digit(10)
                    .map(|d| d as usize)
                    .ok_or_else(|| Error::WordParse {
                        input: input.to_string(),
                        reason: format!("unexpected character {ch:?}"),
                    })
            })
            .collect::<Result<_>>()?
    };
    for &i in &indices {
        if i == 0 || i > rank {
            return Err(Error::GeneratorOutOfRange { index: i, rank });
        }
    }
    Ok(indices)
}

fn parse_factors(spec: &str) -> Result<Vec<Factor>> {
    let err = |reason: &str| Error::TypeParse {
        input: spec.to_string(),
        reason: reason.to_string(),
    };
    if spec.is_empty() {
        return Err(err("empty type string"));
    }
    let mut factors = Vec::new();
    for part in spec.split('x') {
        let mut chars = part.chars();
        let letter = chars.next().ok_or_else(|| err("empty factor"))?;
        let digits = chars.as_str();
        if !('A'..='G').contains(&letter) {
            return Err(err(&format!(
                "unknown family {letter:?} (crystallographic families are A-G)"
            )));
        }
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(err(&format!("factor {part:?} needs a numeric rank")));
        }
        let rank: usize = digits
            .parse()
            .map_err(|_| err(&format!("rank in {part:?} is too large")))?;
        let valid = match letter {
            'A' => rank >= 1,
            'B' | 'C' => rank >= 2,
            'D' => rank >= 3,
            'E' => (6..=8).contains(&rank),
            'F' => rank == 4,
            'G' => rank == 2,
            _ => unreachable!(),
        };
        if !valid {
            return Err(Error::InvalidRank {
                letter,
                rank,
                reason: match letter {
                    'A' => "A requires rank >= 1".to_string(),
                    'B' => "B requires rank >= 2".to_string(),
                    'C' => "C requires rank >= 2".to_string(),
                    'D' => "D requires rank >= 3".to_string(),
                    'E' => "E requires rank in {6,7,8}".to_string(),
                    'F' => "F requires rank 4".to_string(),
                    'G' => "G requires rank 2".to_string(),
                    _ => unreachable!(),
                },
            });
        }
        factors.push(Factor { letter, rank });
    }
    Ok(factors)
}

/// Cartan matrix of one irreducible factor, convention
/// `a_ij = 2(alpha_i, alpha_j)/(alpha_i, alpha_i)`.
fn factor_cartan(f: &Factor) -> Vec<Vec<i64>> {
    let n = f.rank;
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let bond = |a: &mut Vec<Vec<i64>>, i: usize, j: usize, aij: i64, aji: i64| {
        a[i][j] = aij;
        a[j][i] = aji;
    };
    match f.letter {
        'A' => {
            for i in 0..n - 1 {
                bond(&mut a, i, i + 1, -1, -1);
            }
        }
        'B' => {
            // Chain with a short last root: a[n-2][n-1] = -1, a[n-1][n-2] = -2.
            for i in 0..n - 2 {
                bond(&mut a, i, i + 1, -1, -1);
            }
            bond(&mut a, n - 2, n - 1, -1, -2);
        }
        'C' => {
            // Transpose of B: long last root.
            for i in 0..n - 2 {
                bond(&mut a, i, i + 1, -1, -1);
            }
            bond(&mut a, n - 2, n - 1, -2, -1);
        }
        'D' => {
            for i in 0..n - 2 {
                bond(&mut a, i, i + 1, -1, -1);
            }
            bond(&mut a, n - 3, n - 1, -1, -1);
        }
        'E' => {
            // Chain 1-3-4-5-...-n with node 2 hanging off node 4.
            bond(&mut a, 0, 2, -1, -1);
            bond(&mut a, 1, 3, -1, -1);
            for i in 2..n - 1 {
                bond(&mut a, i, i + 1, -1, -1);
            }
        }
        'F' => {
            bond(&mut a, 0, 1, -1, -1);
            bond(&mut a, 1, 2, -1, -2);
            bond(&mut a, 2, 3, -1, -1);
        }
        'G' => {
            bond(&mut a, 0, 1, -3, -1);
        }
        _ => unreachable!(),
    }
    a
}

fn block_diagonal(factors: &[Factor]) -> Vec<Vec<i64>> {
    let rank: usize = factors.iter().map(|f| f.rank).sum();
    let mut a = vec![vec![0i64; rank]; rank];
    let mut offset = 0;
    for f in factors {
        let block = factor_cartan(f);
        for (i, row) in block.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                a[offset + i][offset + j] = v;
            }
        }
        offset += f.rank;
    }
    a
}

/// Closed-form group order of one irreducible factor.
fn factor_order(f: &Factor) -> BigUint {
    fn factorial(n: usize) -> BigUint {
        (1..=n as u64).map(BigUint::from).product()
    }
    match (f.letter, f.rank) {
        ('A', n) => factorial(n + 1),
        ('B', n) | ('C', n) => factorial(n) << n,
        ('D', n) => factorial(n) << (n - 1),
        ('E', 6) => BigUint::from(51_840u64),
        ('E', 7) => BigUint::from(2_903_040u64),
        ('E', 8) => BigUint::from(696_729_600u64),
        ('F', 4) => BigUint::from(1152u64),
        ('G', 2) => BigUint::from(12u64),
        _ => unreachable!(),
    }
}

/// Applies the simple reflection `s_i` to a vector in root coordinates:
/// only coordinate `i` changes, to `x_i - sum_j a_ij x_j`.
fn reflect(cartan: &[Vec<i64>], i: usize, x: &[i64]) -> Vec<i64> {
    let mut y = x.to_vec();
    let inner: i64 = cartan[i].iter().zip(x).map(|(a, b)| a * b).sum();
    y[i] -= inner;
    y
}

/// Generates all roots as the closure of `+-alpha_i` under the simple
/// reflections, then keeps the positive ones: simple roots first (in order),
/// the rest sorted by height and coordinates.
fn close_positive_roots(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let rank = cartan.len();
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
    for i in 0..rank {
        for sign in [1i64, -1] {
            let mut e = vec![0i64; rank];
            e[i] = sign;
            if seen.insert(e.clone()) {
                queue.push_back(e);
            }
        }
    }
    while let Some(x) = queue.pop_front() {
        for i in 0..rank {
            let y = reflect(cartan, i, &x);
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    let mut rest: Vec<Vec<i64>> = seen
        .into_iter()
        .filter(|r| r.iter().all(|&c| c >= 0) && r.iter().map(|&c| c.abs()).sum::<i64>() > 1)
        .collect();
    rest.sort_by_key(|r| (r.iter().sum::<i64>(), r.clone()));
    let mut roots: Vec<Vec<i64>> = (0..rank)
        .map(|i| {
            let mut e = vec![0i64; rank];
            e[i] = 1;
            e
        })
        .collect();
    roots.extend(rest);
    roots
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_valid_types() {
        let a2 = CartanDatum::parse("A2", DEFAULT_MAX_ORDER).unwrap();
        assert_eq!(a2.rank(), 2);
        assert_eq!(a2.cartan_matrix(), &[vec![2, -1], vec![-1, 2]]);
        assert_eq!(a2.nu(), 3);
        assert_eq!(a2.order(), &BigUint::from(6u32));

        let g2 = CartanDatum::parse("G2", DEFAULT_MAX_ORDER).unwrap();
        assert_eq!(g2.nu(), 6);
        assert_eq!(g2.order(), &BigUint::from(12u32));

        let prod = CartanDatum::parse("A1xA1", DEFAULT_MAX_ORDER).unwrap();
        assert_eq!(prod.rank(), 2);
        assert_eq!(prod.nu(), 2);
        assert_eq!(prod.order(), &BigUint::from(4u32));
        assert_eq!(prod.coxeter_m(0, 1), 2);
    }

    #[test]
    fn positive_root_counts() {
        for (spec, nu) in [
            ("A3", 6),
            ("A4", 10),
            ("B2", 4),
            ("B3", 9),
            ("B4", 16),
            ("C3", 9),
            ("D4", 12),
            ("F4", 24),
            ("G2", 6),
            ("E6", 36),
            ("A2xB2", 7),
        ] {
            let d = CartanDatum::parse(spec, u128::MAX).unwrap();
            assert_eq!(d.nu(), nu, "nu mismatch for {spec}");
        }
    }

    #[test]
    fn orders_match_closed_forms() {
        for (spec, order) in [
            ("A1", 2u64),
            ("A2", 6),
            ("A3", 24),
            ("A4", 120),
            ("B2", 8),
            ("B3", 48),
            ("B4", 384),
            ("C2", 8),
            ("D3", 24),
            ("D4", 192),
            ("F4", 1152),
            ("G2", 12),
            ("E6", 51_840),
        ] {
            let d = CartanDatum::parse(spec, u128::MAX).unwrap();
            assert_eq!(d.order(), &BigUint::from(order), "order mismatch for {spec}");
        }
    }

    #[test]
    fn invalid_types_are_rejected() {
        for bad in ["", "B0", "B1", "D2", "E5", "E9", "F3", "G3", "H3", "A", "Ax", "A2x", "a2", "A2 "] {
            assert!(
                CartanDatum::parse(bad, DEFAULT_MAX_ORDER).is_err(),
                "{bad:?} should not parse"
            );
        }
    }

    #[test]
    fn budget_is_enforced() {
        let err = CartanDatum::parse("E8", DEFAULT_MAX_ORDER).unwrap_err();
        match err {
            Error::BudgetExceeded { order, .. } => assert_eq!(order, "696729600"),
            other => panic!("expected budget error, got {other:?}"),
        }
        // Raising the budget admits the type (the datum only builds roots,
        // never the full group).
        assert!(CartanDatum::parse("E8", u128::MAX).is_ok());
    }

    #[test]
    fn coxeter_bonds() {
        let b2 = CartanDatum::parse("B2", DEFAULT_MAX_ORDER).unwrap();
        assert_eq!(b2.coxeter_m(0, 1), 4);
        let g2 = CartanDatum::parse("G2", DEFAULT_MAX_ORDER).unwrap();
        assert_eq!(g2.coxeter_m(0, 1), 6);
        let a2 = CartanDatum::parse("A2", DEFAULT_MAX_ORDER).unwrap();
        assert_eq!(a2.coxeter_m(0, 1), 3);
    }

    #[test]
    fn word_parsing() {
        assert_eq!(parse_word("", 2).unwrap(), Vec::<usize>::new());
        assert_eq!(parse_word("e", 2).unwrap(), Vec::<usize>::new());
        assert_eq!(parse_word("121", 2).unwrap(), vec![1, 2, 1]);
        assert_eq!(parse_word("1,2,1", 2).unwrap(), vec![1, 2, 1]);
        assert!(parse_word("13", 2).is_err());
        assert!(parse_word("0", 2).is_err());
        assert!(parse_word("1a", 2).is_err());
        assert_eq!(word_string(&[1, 2, 1]), "121");
        assert_eq!(word_string(&[]), "e");
        assert_eq!(word_string(&[10, 2]), "10,2");
    }
}
