//! A small expression language for Hecke algebra elements.
//!
//! Grammar (whitespace insensitive):
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ('^' nonneg-int)?
//! atom   := 'T' '[' word ']' | 'Tt' '[' word ']' | 'q' | 'v'
//!         | integer | '(' expr ')'
//! word   := 'e' | digit+
//! ```
//!
//! `q` denotes `v^2`; `T[e]` is the identity. Words need not be reduced —
//! they evaluate as products of generators, so `T[11]` exercises the
//! quadratic relation directly. Inverses are not part of the grammar.
//! Evaluation happens over `Z[v, v^-1]` and the result is returned in the
//! T basis.

use std::sync::Arc;

use num_bigint::BigInt;

use crate::cartan::WeylGroup;
use crate::error::{Error, Result};
use crate::hecke::{HeckeBasis, HeckeElement};
use crate::rings::LaurentPoly;

/// Parses and evaluates an expression in the Hecke algebra of `group`.
pub fn parse_hecke_expr(group: &Arc<WeylGroup>, text: &str) -> Result<HeckeElement> {
    let mut p = Parser {
        group,
        bytes: text.as_bytes(),
        pos: 0,
    };
    let value = p.expr()?;
    p.skip_ws();
    if p.pos < p.bytes.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(value)
}

struct Parser<'a> {
    group: &'a Arc<WeylGroup>,
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn error(&self, reason: &str) -> Error {
        Error::ExprParse {
            position: self.pos,
            reason: reason.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn expect(&mut self, byte: u8) -> Result<()> {
        if self.peek() == Some(byte) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&format!("expected '{}'", byte as char)))
        }
    }

    fn expr(&mut self) -> Result<HeckeElement> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?)?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<HeckeElement> {
        let mut acc = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            acc = acc.multiply(&self.factor()?)?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<HeckeElement> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let exponent = self.nonneg_int()?;
            let exponent: u32 = exponent
                .try_into()
                .map_err(|_| self.error("exponent too large"))?;
            return base.pow(exponent);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<HeckeElement> {
        match self.peek() {
            Some(b'T') => {
                self.pos += 1;
                let basis = if self.bytes.get(self.pos) == Some(&b't') {
                    self.pos += 1;
                    HeckeBasis::Ttilde
                } else {
                    HeckeBasis::T
                };
                self.expect(b'[')?;
                let word = self.word()?;
                self.expect(b']')?;
                // Evaluate the (possibly non-reduced) word as a product of
                // generator basis vectors, then land in the T basis.
                let mut acc = HeckeElement::one(self.group, basis);
                for &s in word.iter().rev() {
                    acc = acc.left_mul_gen(s - 1);
                }
                Ok(acc.to_basis(HeckeBasis::T))
            }
            Some(b'q') => {
                self.pos += 1;
                Ok(HeckeElement::scalar(
                    self.group,
                    HeckeBasis::T,
                    LaurentPoly::q(),
                ))
            }
            Some(b'v') => {
                self.pos += 1;
                Ok(HeckeElement::scalar(
                    self.group,
                    HeckeBasis::T,
                    LaurentPoly::v(),
                ))
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                self.expect(b')')?;
                Ok(inner)
            }
            Some(d) if d.is_ascii_digit() => {
                let n = self.nonneg_int()?;
                Ok(HeckeElement::scalar(
                    self.group,
                    HeckeBasis::T,
                    LaurentPoly::constant(BigInt::from(n)),
                ))
            }
            _ => Err(self.error("expected 'T[..]', 'Tt[..]', 'q', 'v', an integer, or '('")),
        }
    }

    fn nonneg_int(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self
            .bytes
            .get(self.pos)
            .is_some_and(|b| b.is_ascii_digit())
        {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected a non-negative integer"));
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .expect("digits are ASCII")
            .parse()
            .map_err(|_| self.error("integer too large"))
    }

    /// Bracket contents: 'e' for the identity or a generator word.
    fn word(&mut self) -> Result<Vec<usize>> {
        self.skip_ws();
        let start = self.pos;
        while self
            .bytes
            .get(self.pos)
            .is_some_and(|&b| b != b']' && !b.is_ascii_whitespace())
        {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected a word ('e' or generator digits)"));
        }
        let text = std::str::from_utf8(&self.bytes[start..self.pos])
            .expect("input is valid UTF-8 and we split at ASCII bytes");
        crate::cartan::parse_word(text, self.group.rank())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::DEFAULT_MAX_ORDER;

    fn group(spec: &str) -> Arc<WeylGroup> {
        WeylGroup::new(spec, DEFAULT_MAX_ORDER).unwrap()
    }

    #[test]
    fn quadratic_relation_via_non_reduced_word() {
        let g = group("A1");
        let via_word = parse_hecke_expr(&g, "T[11]").unwrap();
        let via_product = parse_hecke_expr(&g, "T[1]*T[1]").unwrap();
        let explicit = parse_hecke_expr(&g, "q*T[e] + (q-1)*T[1]").unwrap();
        assert_eq!(via_word, via_product);
        assert_eq!(via_product, explicit);
    }

    #[test]
    fn scalars_and_precedence() {
        let g = group("A1");
        assert_eq!(
            parse_hecke_expr(&g, "1 + 2*3").unwrap(),
            parse_hecke_expr(&g, "7").unwrap()
        );
        assert_eq!(
            parse_hecke_expr(&g, "(1+2)*3").unwrap(),
            parse_hecke_expr(&g, "9").unwrap()
        );
        assert_eq!(
            parse_hecke_expr(&g, "q^2 - 2*q + 1").unwrap(),
            parse_hecke_expr(&g, "(q-1)^2").unwrap()
        );
        assert_eq!(
            parse_hecke_expr(&g, "v^2").unwrap(),
            parse_hecke_expr(&g, "q").unwrap()
        );
        assert_eq!(
            parse_hecke_expr(&g, "2^3").unwrap(),
            parse_hecke_expr(&g, "8").unwrap()
        );
    }

    #[test]
    fn tilde_atoms_convert_to_t_basis() {
        let g = group("A1");
        let h = parse_hecke_expr(&g, "Tt[1]^2").unwrap();
        // Tt_s^2 = Tt_1 + (v-v^-1) Tt_s = T_1 + (1 - q^-1) T_s in the T basis.
        assert_eq!(h.basis(), HeckeBasis::T);
        assert_eq!(h.coeff(0), LaurentPoly::one());
        assert_eq!(
            h.coeff(1),
            LaurentPoly::one().sub(&LaurentPoly::term(-2, 1.into()))
        );
    }

    #[test]
    fn evident_combination() {
        let g = group("A2");
        let h = parse_hecke_expr(&g, "(q-1)*T[e] + T[12]").unwrap();
        assert_eq!(h.num_terms(), 2);
        assert_eq!(
            h.coeff(0),
            LaurentPoly::q().sub(&LaurentPoly::one())
        );
        assert_eq!(h.coeff(g.word_id(&[1, 2]).unwrap()), LaurentPoly::one());
    }

    #[test]
    fn generator_out_of_range() {
        let g = group("A2");
        let err = parse_hecke_expr(&g, "T[999]").unwrap_err();
        assert!(matches!(err, Error::GeneratorOutOfRange { index: 9, rank: 2 }));
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let g = group("A2");
        for (text, at) in [
            ("", 0),
            ("T[", 2),
            ("T[12", 4),
            ("1 +", 3),
            ("q^", 2),
            ("(q", 2),
            ("q)", 1),
            ("T(1)", 1),
        ] {
            match parse_hecke_expr(&g, text) {
                Err(Error::ExprParse { position, .. }) => {
                    assert_eq!(position, at, "position for {text:?}");
                }
                other => panic!("expected parse error for {text:?}, got {other:?}"),
            }
        }
    }

    #[test]
    fn identity_word_forms() {
        let g = group("A2");
        assert_eq!(
            parse_hecke_expr(&g, "T[e]").unwrap(),
            HeckeElement::one(&g, HeckeBasis::T)
        );
    }
}
