//! Recursive-descent parser for the polynomial text grammar
//!
//! ```text
//! poly := ['+'|'-'] term (('+'|'-') term)*
//! term := int | [int ['*']] 'x' ['^' uint]
//! ```
//!
//! Whitespace is allowed between any two tokens. Repeated exponents are
//! summed.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use super::ZxPoly;
use crate::error::{Error, Result};

/// Largest exponent accepted from text input.
pub const MAX_PARSED_DEGREE: usize = 1 << 20;

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            offset: self.pos,
            message: message.into(),
        })
    }

    fn digits(&mut self) -> &'a str {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos]).unwrap()
    }

    fn term(&mut self) -> Result<(BigInt, usize)> {
        let coeff = match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let n: BigInt = self.digits().parse().unwrap();
                match self.peek() {
                    Some(b'*') => {
                        self.pos += 1;
                        if self.peek() != Some(b'x') {
                            return self.error("expected 'x' after '*'");
                        }
                    }
                    Some(b'x') => {}
                    _ => return Ok((n, 0)),
                }
                n
            }
            Some(b'x') => BigInt::from(1),
            Some(c) => return self.error(format!("unexpected character '{}'", c as char)),
            None => return self.error("unexpected end of input"),
        };
        // at 'x'
        self.pos += 1;
        if self.peek() != Some(b'^') {
            return Ok((coeff, 1));
        }
        self.pos += 1;
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {}
            _ => return self.error("expected a nonnegative exponent after '^'"),
        }
        let at = self.pos;
        let e: usize = match self.digits().parse() {
            Ok(e) if e <= MAX_PARSED_DEGREE => e,
            _ => {
                self.pos = at;
                return self.error(format!("exponent exceeds {MAX_PARSED_DEGREE}"));
            }
        };
        Ok((coeff, e))
    }
}

pub fn parse_poly(text: &str) -> Result<ZxPoly> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let mut acc: BTreeMap<usize, BigInt> = BTreeMap::new();
    let mut negative = match p.peek() {
        Some(b'-') => {
            p.pos += 1;
            true
        }
        Some(b'+') => {
            p.pos += 1;
            false
        }
        _ => false,
    };
    loop {
        let (c, e) = p.term()?;
        *acc.entry(e).or_insert_with(BigInt::zero) += if negative { -c } else { c };
        negative = match p.peek() {
            None => break,
            Some(b'+') => false,
            Some(b'-') => true,
            Some(c) => return p.error(format!("expected '+' or '-', found '{}'", c as char)),
        };
        p.pos += 1;
    }
    let deg = acc.keys().next_back().copied().unwrap_or(0);
    let mut coeffs = vec![BigInt::zero(); deg + 1];
    for (e, c) in acc {
        coeffs[e] = c;
    }
    Ok(ZxPoly::new(coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let f = parse_poly("x^30 - 7").unwrap();
        assert_eq!(f.degree(), Some(30));
        assert_eq!(f.coeff(30), BigInt::from(1));
        assert_eq!(f.coeff(0), BigInt::from(-7));
        assert_eq!(parse_poly("x^2+x+1").unwrap(), ZxPoly::from_i64(&[1, 1, 1]));
        assert_eq!(parse_poly("x^4 + 2x^2 - x^2").unwrap(), ZxPoly::from_i64(&[0, 0, 1, 0, 1]));
        assert_eq!(parse_poly(" - 3 * x ^ 2 + 12").unwrap(), ZxPoly::from_i64(&[12, 0, -3]));
        assert_eq!(parse_poly("x - x").unwrap(), ZxPoly::zero());
        assert_eq!(parse_poly("0").unwrap(), ZxPoly::zero());
        assert_eq!(parse_poly("2x").unwrap(), ZxPoly::from_i64(&[0, 2]));
    }

    #[test]
    fn errors_carry_offsets() {
        let offset = |s: &str| match parse_poly(s) {
            Err(Error::Parse { offset, .. }) => offset,
            other => panic!("expected parse error for {s:?}, got {other:?}"),
        };
        assert_eq!(offset(""), 0);
        assert_eq!(offset("x^"), 2);
        assert_eq!(offset("x^2 +"), 5);
        assert_eq!(offset("x^2 y"), 4);
        assert_eq!(offset("3*"), 2);
        assert_eq!(offset("x + + 1"), 4);
        assert_eq!(offset("x^-2"), 2);
        assert_eq!(offset("x^99999999999"), 2);
    }
}
