//! ASCII text form of polynomials in `t`: `1+2t-3t^2`.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::IntPolynomial;
use crate::error::Error;

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if c.is_negative() {
                f.write_str("-")?;
            } else if !first {
                f.write_str("+")?;
            }
            first = false;
            let mag = c.abs();
            if k == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => f.write_str("t")?,
                _ => write!(f, "t^{k}")?,
            }
        }
        Ok(())
    }
}

struct Cursor<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    src: &'a str,
}

impl Cursor<'_> {
    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|(_, c)| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn column(&self) -> usize {
        self.pos + 1
    }

    fn error(&self, message: &str) -> Error {
        Error::PolySyntax { column: self.column(), message: message.to_string() }
    }

    fn digits(&mut self) -> Option<String> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        let lo = self.chars[start].0;
        let hi = self.chars.get(self.pos).map_or(self.src.len(), |&(i, _)| i);
        Some(self.src[lo..hi].to_string())
    }
}

impl FromStr for IntPolynomial {
    type Err = Error;

    fn from_str(src: &str) -> Result<Self, Error> {
        let mut cur = Cursor { chars: src.char_indices().collect(), pos: 0, src };
        let mut coeffs: Vec<BigInt> = Vec::new();
        let mut first = true;
        loop {
            cur.skip_ws();
            let mut negative = false;
            match cur.peek() {
                Some('+') => cur.pos += 1,
                Some('-') => {
                    negative = true;
                    cur.pos += 1;
                }
                None if first => return Err(cur.error("empty polynomial")),
                None => break,
                _ if first => {}
                Some(_) => return Err(cur.error("expected '+' or '-'")),
            }
            first = false;
            cur.skip_ws();
            let coeff = cur.digits().map(|d| d.parse::<BigInt>().expect("ascii digits"));
            cur.skip_ws();
            let mut exp = 0usize;
            let mut has_var = false;
            if cur.peek() == Some('*') {
                if coeff.is_none() {
                    return Err(cur.error("'*' without a coefficient"));
                }
                cur.pos += 1;
                cur.skip_ws();
                if cur.peek() != Some('t') {
                    return Err(cur.error("expected 't' after '*'"));
                }
            }
            if cur.peek() == Some('t') {
                cur.pos += 1;
                has_var = true;
                exp = 1;
                cur.skip_ws();
                if cur.peek() == Some('^') {
                    cur.pos += 1;
                    cur.skip_ws();
                    exp = cur
                        .digits()
                        .ok_or_else(|| cur.error("expected exponent"))?
                        .parse()
                        .map_err(|_| cur.error("exponent too large"))?;
                }
            }
            if coeff.is_none() && !has_var {
                return Err(cur.error("expected a term"));
            }
            let mut c = coeff.unwrap_or_else(BigInt::one);
            if negative {
                c = -c;
            }
            if coeffs.len() <= exp {
                coeffs.resize(exp + 1, BigInt::zero());
            }
            coeffs[exp] += c;
        }
        Ok(IntPolynomial::new(coeffs))
    }
}

impl IntPolynomial {
    /// Parses the ASCII text form, e.g. `"1+2t-3t^2"`.
    pub fn parse(src: &str) -> Result<Self, Error> {
        src.parse()
    }

    pub fn to_text(&self) -> String {
        self.to_string()
    }
}
