//! Recursive-descent parser for the polynomial text grammar.
//!
//! ```text
//! expr    := ['+' | '-'] term (('+' | '-') term)*
//! term    := power (['*'] power)*      -- '*' may be omitted before a variable or '('
//! power   := primary ['^' digits]
//! primary := digits | 'q' | 'u' | 'v' | '(' expr ')'
//! ```
//!
//! `q` is the monomial `uv`. Positions in errors are byte offsets.

use num_bigint::BigInt;

use super::{BivarPoly, Monomial};
use crate::coeff::Coeff;
use crate::error::{Error, Result};

pub fn parse_poly<C: Coeff>(input: &str) -> Result<BivarPoly<C>> {
    let mut parser = Parser {
        src: input.as_bytes(),
        pos: 0,
    };
    parser.skip_ws();
    if parser.at_end() {
        return Err(parser.error("empty polynomial"));
    }
    let p = parser.expr()?;
    parser.skip_ws();
    if !parser.at_end() {
        return Err(parser.error(format!("unexpected character '{}'", parser.peek_char())));
    }
    Ok(p)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn peek_char(&self) -> char {
        self.peek().map_or('\0', char::from)
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(b' ' | b'\t' | b'\n' | b'\r')) {
            self.pos += 1;
        }
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            position: self.pos,
            message: message.into(),
        }
    }

    fn expr<C: Coeff>(&mut self) -> Result<BivarPoly<C>> {
        self.skip_ws();
        let negate = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            Some(b'+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        let first = self.term()?;
        let mut acc = if negate { -first } else { first };
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc += &self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc -= &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term<C: Coeff>(&mut self) -> Result<BivarPoly<C>> {
        let mut acc = self.power()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = &acc * &self.power()?;
                }
                Some(b'q' | b'u' | b'v' | b'(') => {
                    acc = &acc * &self.power()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power<C: Coeff>(&mut self) -> Result<BivarPoly<C>> {
        let base = self.primary()?;
        self.skip_ws();
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            let digits = self.digits();
            if digits.is_empty() {
                return Err(self.error("expected a nonnegative integer exponent"));
            }
            let exp: u32 = digits.parse().map_err(|_| Error::Parse {
                position: start,
                message: format!("exponent {digits} too large"),
            })?;
            return Ok(base.pow(exp));
        }
        Ok(base)
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn primary<C: Coeff>(&mut self) -> Result<BivarPoly<C>> {
        self.skip_ws();
        let start = self.pos;
        match self.peek() {
            Some(b'0'..=b'9') => {
                let digits = self.digits();
                let value: BigInt = digits.parse().expect("digit run parses");
                let c = C::from_big(&value).ok_or(Error::Parse {
                    position: start,
                    message: format!("literal {digits} overflows the coefficient type"),
                })?;
                Ok(BivarPoly::constant(c))
            }
            Some(b'q') => {
                self.pos += 1;
                Ok(BivarPoly::monomial(C::one(), Monomial::q(1)))
            }
            Some(b'u') => {
                self.pos += 1;
                Ok(BivarPoly::monomial(C::one(), Monomial::new(1, 0)))
            }
            Some(b'v') => {
                self.pos += 1;
                Ok(BivarPoly::monomial(C::one(), Monomial::new(0, 1)))
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                self.skip_ws();
                if self.peek() != Some(b')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            None => Err(self.error("unexpected end of input")),
            Some(_) => Err(self.error(format!("unexpected character '{}'", self.peek_char()))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type P = BivarPoly<BigInt>;

    fn parse(s: &str) -> Result<P> {
        parse_poly(s)
    }

    #[test]
    fn q_is_uv() {
        assert_eq!(parse("q^2").unwrap(), parse("u^2 v^2").unwrap());
        assert_eq!(parse("q").unwrap(), parse("u*v").unwrap());
    }

    #[test]
    fn implicit_products_and_parentheses() {
        assert_eq!(
            parse("(q^2-1)(q^2-q)").unwrap(),
            parse("q^4 - q^3 - q^2 + q").unwrap()
        );
        assert_eq!(parse("3q^2").unwrap(), parse("3*q^2").unwrap());
        assert_eq!(parse("-(q-1)^2").unwrap(), parse("-q^2+2q-1").unwrap());
        assert_eq!(parse("2^3").unwrap(), parse("8").unwrap());
        assert_eq!(parse("  + q ").unwrap(), parse("q").unwrap());
    }

    #[test]
    fn errors_carry_position() {
        assert_eq!(
            parse("q^3 - x"),
            Err(Error::Parse {
                position: 6,
                message: "unexpected character 'x'".into()
            })
        );
        assert!(matches!(
            parse("(q+1"),
            Err(Error::Parse { position: 4, .. })
        ));
        assert!(matches!(parse("q^"), Err(Error::Parse { position: 2, .. })));
        assert!(matches!(parse(""), Err(Error::Parse { position: 0, .. })));
        assert!(matches!(
            parse("q +"),
            Err(Error::Parse { position: 3, .. })
        ));
        assert!(matches!(
            parse("2 3"),
            Err(Error::Parse { position: 2, .. })
        ));
    }

    #[test]
    fn narrow_literal_overflow() {
        let r: Result<BivarPoly<i64>> = parse_poly("99999999999999999999");
        assert!(matches!(r, Err(Error::Parse { position: 0, .. })));
        let ok: BivarPoly<BigInt> = parse_poly("99999999999999999999").unwrap();
        assert_eq!(ok.to_string(), "99999999999999999999");
    }
}
