//! Parser for polynomial expressions in a single variable, accepting both
//! the expanded output of `Display` and factored forms such as
//! `16x^3(3+8x+6x^2)`.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::poly::{Polynomial, Variable};
use crate::error::Error;

impl<V: Variable> FromStr for Polynomial<V> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut parser = Parser::<V> { chars, pos: 0, var: Default::default() };
        let poly = parser.expr()?;
        if parser.pos != parser.chars.len() {
            return Err(parser.error("trailing input"));
        }
        Ok(poly)
    }
}

struct Parser<V> {
    chars: Vec<char>,
    pos: usize,
    var: std::marker::PhantomData<V>,
}

impl<V: Variable> Parser<V> {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn error(&self, what: &str) -> Error {
        let text: String = self.chars.iter().collect();
        Error::Parse(format!("{what} at offset {} in {text:?}", self.pos))
    }

    fn expr(&mut self) -> Result<Polynomial<V>, Error> {
        let mut negate = false;
        match self.peek() {
            Some('+') => self.pos += 1,
            Some('-') => {
                negate = true;
                self.pos += 1;
            }
            _ => {}
        }
        let first = self.term()?;
        let mut acc = if negate { -&first } else { first };
        while let Some(op @ ('+' | '-')) = self.peek() {
            self.pos += 1;
            let t = self.term()?;
            acc = if op == '+' { &acc + &t } else { &acc - &t };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial<V>, Error> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    acc = &acc * &self.factor()?;
                }
                Some(c) if c == '(' || c == V::NAME || c.is_ascii_digit() => {
                    acc = &acc * &self.factor()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Polynomial<V>, Error> {
        let base = self.atom()?;
        if self.peek() == Some('^') {
            self.pos += 1;
            let e = self.digits()?;
            let e: u32 = e.parse().map_err(|_| self.error("bad exponent"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial<V>, Error> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c == V::NAME => {
                self.pos += 1;
                Ok(Polynomial::var())
            }
            Some(c) if c.is_ascii_digit() => {
                let numer: BigInt = self.digits()?.parse().map_err(|_| self.error("bad number"))?;
                let value = if self.peek() == Some('/') {
                    self.pos += 1;
                    let denom: BigInt = self.digits()?.parse().map_err(|_| self.error("bad denominator"))?;
                    if denom == BigInt::from(0) {
                        return Err(self.error("zero denominator"));
                    }
                    BigRational::new(numer, denom)
                } else {
                    BigRational::from_integer(numer)
                };
                Ok(Polynomial::constant(value))
            }
            _ => Err(self.error("expected a number, variable or '('")),
        }
    }

    fn digits(&mut self) -> Result<String, Error> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected digits"));
        }
        Ok(self.chars[start..self.pos].iter().collect())
    }
}

#[cfg(test)]
mod tests {
    use crate::algebra::{rational, NPolynomial, XPolynomial};

    #[test]
    fn factored_table_rows() {
        let p: XPolynomial = "16x^3(3+8x+6x^2)".parse().unwrap();
        assert_eq!(p, XPolynomial::from_ints(&[0, 0, 0, 48, 128, 96]));
        let q: XPolynomial = "x^2 (3 + 2 x)".parse().unwrap();
        assert_eq!(q, XPolynomial::from_ints(&[0, 0, 3, 2]));
        assert_eq!("1".parse::<XPolynomial>().unwrap(), XPolynomial::one());
    }

    #[test]
    fn rational_and_n_forms() {
        let p: NPolynomial = "(1/3)n(n+2)".parse().unwrap();
        assert_eq!(p.eval_int(3), rational(5, 1));
        let q: NPolynomial = "-1/3+(1/3)n^2".parse().unwrap();
        assert_eq!(q.eval_int(2), rational(1, 1));
    }

    #[test]
    fn rejects_garbage() {
        assert!("x^".parse::<XPolynomial>().is_err());
        assert!("(1+x".parse::<XPolynomial>().is_err());
        assert!("y".parse::<XPolynomial>().is_err());
        assert!("1/0".parse::<XPolynomial>().is_err());
    }
}
