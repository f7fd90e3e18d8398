//! Recursive-descent parser for coefficient text.
//!
//! ```text
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := factor (('*' | '/') factor)*
//! factor := base ('^' digits)?
//! base   := digits | identifier | '(' expr ')'
//! ```
//!
//! Whitespace between tokens is ignored.

use num_bigint::BigInt;

use super::{Rational, Result, Ring, ScalarError, ScalarValue};

/// Parses `text` into a canonical value over `ring`.
pub fn parse_scalar(text: &str, ring: &Ring) -> Result<ScalarValue> {
    let mut parser = Parser {
        src: text.as_bytes(),
        pos: 0,
        ring,
    };
    parser.skip_ws();
    if parser.at_end() {
        return Err(parser.error("empty expression"));
    }
    let value = parser.expr()?;
    parser.skip_ws();
    if !parser.at_end() {
        return Err(parser.error("unexpected trailing input"));
    }
    Ok(value)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    ring: &'a Ring,
}

impl Parser<'_> {
    fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn error(&self, message: &str) -> ScalarError {
        ScalarError::Syntax {
            position: self.pos,
            message: message.to_string(),
        }
    }

    fn eat(&mut self, c: u8) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<ScalarValue> {
        let negate = self.eat(b'-');
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        loop {
            if self.eat(b'+') {
                let rhs = self.term()?;
                acc = acc.checked_add(&rhs)?;
            } else if self.eat(b'-') {
                let rhs = self.term()?;
                acc = acc.checked_sub(&rhs)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<ScalarValue> {
        let mut acc = self.factor()?;
        loop {
            if self.eat(b'*') {
                let rhs = self.factor()?;
                acc = acc.checked_mul(&rhs)?;
            } else if self.eat(b'/') {
                let at = self.pos;
                let rhs = self.factor()?;
                if rhs.is_zero() {
                    return Err(ScalarError::Syntax {
                        position: at,
                        message: "division by zero".into(),
                    });
                }
                acc = acc.checked_div(&rhs)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<ScalarValue> {
        let base = self.base()?;
        if self.eat(b'^') {
            self.skip_ws();
            let digits = self.digits().ok_or_else(|| self.error("expected exponent"))?;
            let exp: u32 = digits
                .parse()
                .map_err(|_| self.error("exponent too large"))?;
            return Ok(base.pow(exp));
        }
        Ok(base)
    }

    fn base(&mut self) -> Result<ScalarValue> {
        self.skip_ws();
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.error("expected `)`"));
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let digits = self.digits().expect("digit present");
                let n: BigInt = digits.parse().expect("ascii digits");
                Ok(ScalarValue::from_rational(Rational::from_integer(n)))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self
                    .peek()
                    .is_some_and(|c| c.is_ascii_alphanumeric() || c == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                match self.ring.index_of(name) {
                    Some(i) => Ok(ScalarValue::var(self.ring, i)),
                    None => Err(ScalarError::UnknownVariable {
                        name: name.to_string(),
                        position: start,
                    }),
                }
            }
            Some(_) => Err(self.error("expected number, variable or `(`")),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn digits(&mut self) -> Option<String> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start)
            .then(|| String::from_utf8(self.src[start..self.pos].to_vec()).expect("ascii"))
    }
}
