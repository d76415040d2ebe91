//! Recursive-descent parser for polynomial expressions.
//!
//! ```text
//! expr    := ['+'|'-'] term (('+'|'-') term)*
//! term    := factor ('*' factor)*
//! factor  := primary ['^' positive-int]
//! primary := int ['/' positive-int] | variable | '(' expr ')'
//! ```
//!
//! Whitespace is insignificant and implicit multiplication is rejected.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::field::Field;
use super::poly::{MultiPoly, VarSet};
use super::AlgebraError;

/// Parses a homogeneous polynomial over `field` in the variables `vars`.
pub fn parse_poly(text: &str, vars: VarSet, field: Field) -> Result<MultiPoly, AlgebraError> {
    let poly = parse_expression(text, vars, field)?;
    if !poly.is_homogeneous() {
        return Err(AlgebraError::NotHomogeneous(text.trim().to_string()));
    }
    Ok(poly)
}

/// Parses without the homogeneity requirement.
pub fn parse_expression(text: &str, vars: VarSet, field: Field) -> Result<MultiPoly, AlgebraError> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        vars,
        field,
    };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(e)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    vars: VarSet,
    field: Field,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> AlgebraError {
        let found = match self.src.get(self.pos) {
            Some(&c) => format!("'{}'", c as char),
            None => "end of input".to_string(),
        };
        AlgebraError::Syntax {
            pos: self.pos + 1,
            msg: format!("{msg} (found {found})"),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<MultiPoly, AlgebraError> {
        let negate = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        let mut acc = self.term()?;
        if negate {
            acc = -acc;
        }
        loop {
            if self.eat(b'+') {
                acc = &acc + &self.term()?;
            } else if self.eat(b'-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly, AlgebraError> {
        let mut acc = self.factor()?;
        while self.eat(b'*') {
            acc = &acc * &self.factor()?;
        }
        // A primary directly after a factor means implicit multiplication.
        match self.peek() {
            Some(c) if c.is_ascii_alphanumeric() || c == b'(' => {
                Err(self.error("expected operator; implicit multiplication is not allowed"))
            }
            _ => Ok(acc),
        }
    }

    fn factor(&mut self) -> Result<MultiPoly, AlgebraError> {
        let base = self.primary()?;
        if self.eat(b'^') {
            self.skip_ws();
            let e = self.integer()?;
            if e.is_zero() {
                return Err(self.error("exponent must be a positive integer"));
            }
            let e: u32 = e
                .try_into()
                .map_err(|_| self.error("exponent too large"))?;
            if e > 64 {
                return Err(self.error("exponent too large"));
            }
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<MultiPoly, AlgebraError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.error("expected ')'"));
                }
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.integer()?;
                let mut value = BigRational::from_integer(num);
                if self.eat(b'/') {
                    self.skip_ws();
                    let den = self.integer()?;
                    if den.is_zero() {
                        return Err(self.error("zero denominator"));
                    }
                    value /= BigRational::from_integer(den);
                }
                let c = self.field.from_rational(&value)?;
                Ok(MultiPoly::constant(c, self.vars))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphanumeric() {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                let i = self.vars.index_of(name).ok_or_else(|| {
                    AlgebraError::UnknownVariable(format!("{name} at position {}", start + 1))
                })?;
                Ok(MultiPoly::var(i, self.vars, self.field))
            }
            _ => Err(self.error("expected a number, variable or '('")),
        }
    }

    fn integer(&mut self) -> Result<BigInt, AlgebraError> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
        Ok(digits.parse().expect("digits"))
    }
}
