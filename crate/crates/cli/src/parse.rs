//! Polynomial expressions in `T`.
//!
//! ```text
//! expr   := ('+' | '-')? term (('+' | '-') term)*
//! term   := power ('*'? power)*      implicit product before 'T', '(' or '['
//! power  := atom ('^' uint)?
//! atom   := uint | 'T' | '(' expr ')' | '[' int (',' int)* ']'
//! ```
//!
//! A bracketed list gives coefficients in ascending order, so `[1, -2, 0, 1]`
//! is `T^3 - 2*T + 1`.

use num_bigint::BigInt;
use primediv::IntPolynomial;
use thiserror::Error;

/// Exponents above this are rejected rather than expanded.
pub const MAX_EXPONENT: u32 = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at byte {offset}: expected {}", expected.join(" or "))]
pub struct ParseError {
    pub offset: usize,
    pub expected: Vec<&'static str>,
}

pub fn parse_poly(text: &str) -> Result<IntPolynomial, ParseError> {
    let mut p = Parser {
        s: text.as_bytes(),
        pos: 0,
    };
    let poly = p.expr()?;
    if p.peek().is_some() {
        return Err(p.error(&["'+'", "'-'", "'*'", "end of input"]));
    }
    Ok(poly)
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn peek(&mut self) -> Option<u8> {
        while self.s.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn error(&self, expected: &[&'static str]) -> ParseError {
        ParseError {
            offset: self.pos,
            expected: expected.to_vec(),
        }
    }

    fn expr(&mut self) -> Result<IntPolynomial, ParseError> {
        let mut acc = if self.eat(b'-') {
            -self.term()?
        } else {
            self.eat(b'+');
            self.term()?
        };
        loop {
            if self.eat(b'+') {
                acc = acc + self.term()?;
            } else if self.eat(b'-') {
                acc = acc - self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<IntPolynomial, ParseError> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = acc * self.power()?;
                }
                Some(b'T' | b'(' | b'[') => acc = acc * self.power()?,
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<IntPolynomial, ParseError> {
        let base = self.atom()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        let at = self.pos;
        let e = self.digits()?;
        match e.to_string().parse::<u32>() {
            Ok(e) if e <= MAX_EXPONENT => Ok(base.pow(e)),
            _ => Err(ParseError {
                offset: at,
                expected: vec!["exponent at most 65536"],
            }),
        }
    }

    fn atom(&mut self) -> Result<IntPolynomial, ParseError> {
        match self.peek() {
            Some(b'0'..=b'9') => Ok(IntPolynomial::constant(self.digits()?)),
            Some(b'T') => {
                self.pos += 1;
                Ok(IntPolynomial::x())
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.error(&["')'"]));
                }
                Ok(inner)
            }
            Some(b'[') => {
                self.pos += 1;
                self.list()
            }
            _ => Err(self.error(&["integer", "'T'", "'('", "'['"])),
        }
    }

    fn list(&mut self) -> Result<IntPolynomial, ParseError> {
        let mut coeffs = Vec::new();
        if self.eat(b']') {
            return Ok(IntPolynomial::zero());
        }
        loop {
            let neg = self.eat(b'-');
            if !neg {
                self.eat(b'+');
            }
            let c = self.digits()?;
            coeffs.push(if neg { -c } else { c });
            if self.eat(b']') {
                return Ok(IntPolynomial::new(coeffs));
            }
            if !self.eat(b',') {
                return Err(self.error(&["','", "']'"]));
            }
        }
    }

    fn digits(&mut self) -> Result<BigInt, ParseError> {
        self.peek();
        let start = self.pos;
        while self.s.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error(&["integer"]));
        }
        let text = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
        Ok(text.parse().unwrap())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    #[test]
    fn examples() {
        assert_eq!(parse_poly("T^3 - 2*T + 1"), Ok(ip(&[1, -2, 0, 1])));
        assert_eq!(parse_poly("[1, -2, 0, 1]"), Ok(ip(&[1, -2, 0, 1])));
        assert_eq!(parse_poly("T - T"), Ok(IntPolynomial::zero()));
        assert_eq!(parse_poly("(T+1)*(T-2)"), Ok(ip(&[-2, -1, 1])));
        assert_eq!(parse_poly("(T+1)(T-2)"), Ok(ip(&[-2, -1, 1])));
        assert_eq!(parse_poly("-T^2 + 3T - 1"), Ok(ip(&[-1, 3, -1])));
        assert_eq!(parse_poly(" 2 ^ 3 T "), Ok(ip(&[0, 8])));
        assert_eq!(parse_poly("(T^2+T+1)^2"), Ok(ip(&[1, 2, 3, 2, 1])));
    }

    #[test]
    fn errors() {
        let e = parse_poly("T^").unwrap_err();
        assert_eq!((e.offset, e.expected), (2, vec!["integer"]));
        let e = parse_poly("T + x").unwrap_err();
        assert_eq!(e.offset, 4);
        let e = parse_poly("(T + 1").unwrap_err();
        assert_eq!((e.offset, e.expected), (6, vec!["')'"]));
        let e = parse_poly("[1, 2").unwrap_err();
        assert_eq!(e.expected, vec!["','", "']'"]);
        assert!(parse_poly("T^99999999999").is_err());
        assert!(parse_poly("").is_err());
        assert!(parse_poly("T 1").is_err());
    }
}
