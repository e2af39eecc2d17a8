//! Text form `c*y1^a1*...*yd^ad + ...` with rational coefficients `p/q`.
//!
//! Terms are printed in ascending lexicographic order of their exponent
//! vectors, so printing is canonical and `parse(print(f)) == f`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{format_rational, ExponentVector, Rational, SparsePolynomial};
use crate::{Error, Result};

pub(super) fn format_polynomial(p: &SparsePolynomial) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (e, c)) in p.terms().enumerate() {
        let neg = c.is_negative();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let abs = c.abs();
        let mono = format_monomial(e);
        match (abs.is_one(), mono.is_empty()) {
            (_, true) => out.push_str(&format_rational(&abs)),
            (true, false) => out.push_str(&mono),
            (false, false) => {
                out.push_str(&format_rational(&abs));
                out.push('*');
                out.push_str(&mono);
            }
        }
    }
    out
}

fn format_monomial(e: &ExponentVector) -> String {
    let mut parts = Vec::new();
    for (v, &k) in e.as_slice().iter().enumerate() {
        match k {
            0 => {}
            1 => parts.push(format!("y{}", v + 1)),
            _ => parts.push(format!("y{}^{}", v + 1, k)),
        }
    }
    parts.join("*")
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
    nvars: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.pos, msg: msg.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn digits(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected digits");
        }
        let text = std::str::from_utf8(&self.s[start..self.pos]).expect("ascii digits");
        Ok(text.parse().expect("digit string"))
    }

    fn factor(&mut self, coef: &mut Rational, exps: &mut [u32]) -> Result<()> {
        match self.peek() {
            Some(b'0'..=b'9') => {
                let n = self.digits()?;
                let d = if self.peek() == Some(b'/') {
                    self.pos += 1;
                    let d = self.digits()?;
                    if d.is_zero() {
                        return self.err("zero denominator");
                    }
                    d
                } else {
                    BigInt::one()
                };
                *coef *= Rational::new(n, d);
                Ok(())
            }
            Some(b'y') => {
                self.pos += 1;
                let idx = self.digits()?;
                let idx: usize = match idx.try_into() {
                    Ok(i) if i >= 1 && i <= self.nvars => i,
                    _ => return self.err(format!("variable index out of range 1..={}", self.nvars)),
                };
                let k: u32 = if self.peek() == Some(b'^') {
                    self.pos += 1;
                    match self.digits()?.try_into() {
                        Ok(k) => k,
                        Err(_) => return self.err("exponent too large"),
                    }
                } else {
                    1
                };
                exps[idx - 1] += k;
                Ok(())
            }
            Some(c) => self.err(format!("unexpected character {:?}", c as char)),
            None => self.err("unexpected end of input"),
        }
    }

    fn term(&mut self) -> Result<(ExponentVector, Rational)> {
        let mut coef = Rational::one();
        let mut exps = vec![0u32; self.nvars];
        self.factor(&mut coef, &mut exps)?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            self.factor(&mut coef, &mut exps)?;
        }
        Ok((ExponentVector::new(exps), coef))
    }

    fn polynomial(&mut self) -> Result<SparsePolynomial> {
        let mut terms = Vec::new();
        let mut first = true;
        loop {
            let sign = match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    1
                }
                Some(b'-') => {
                    self.pos += 1;
                    -1
                }
                None if !first => break,
                _ if first => 1,
                Some(c) => return self.err(format!("expected '+' or '-', found {:?}", c as char)),
                None => unreachable!(),
            };
            first = false;
            let (e, c) = self.term()?;
            terms.push((e, if sign < 0 { -c } else { c }));
        }
        SparsePolynomial::from_terms(self.nvars, terms)
    }
}

impl SparsePolynomial {
    /// Parses the text form over `nvars` variables `y1..y{nvars}`.
    pub fn parse(s: &str, nvars: usize) -> Result<SparsePolynomial> {
        let mut p = Parser { s: s.as_bytes(), pos: 0, nvars };
        if p.peek().is_none() {
            return p.err("empty polynomial");
        }
        p.polynomial()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::ratio;

    #[test]
    fn prints_canonically() {
        let f = SparsePolynomial::parse("y1^2*y3 - 1/2 *y2 + 7 - 3", 3).unwrap();
        assert_eq!(f.to_string(), "4 - 1/2*y2 + y1^2*y3");
        assert_eq!(SparsePolynomial::zero(2).to_string(), "0");
        assert_eq!(SparsePolynomial::parse("-y2", 2).unwrap().to_string(), "-y2");
        assert_eq!(SparsePolynomial::parse("-2/4*y1*y1", 2).unwrap().to_string(), "-1/2*y1^2");
    }

    #[test]
    fn spec_form_with_spaces() {
        let f = SparsePolynomial::parse("3/2 * y1^2*y2 + 5 * y2", 2).unwrap();
        assert_eq!(f.coefficient(&ExponentVector::new(vec![2, 1])), ratio(3, 2));
        assert_eq!(f.len(), 2);
    }

    #[test]
    fn rejects_malformed() {
        for s in ["", "y0", "y4", "1/0", "y1 y2", "y1 +", "2*", "x1", "y1^"] {
            assert!(SparsePolynomial::parse(s, 3).is_err(), "{s}");
        }
    }

    #[test]
    fn zero_round_trips() {
        let z = SparsePolynomial::parse("0", 3).unwrap();
        assert!(z.is_zero());
        assert_eq!(SparsePolynomial::parse("y1 - y1", 3).unwrap(), z);
    }
}
