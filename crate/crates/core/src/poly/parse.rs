//! Recursive-descent parser for polynomial text. Explicit `*` is required
//! (no juxtaposition), `^` takes nonnegative integer exponents, `i` is the
//! imaginary unit, `/` divides by nonzero constants only.

use num_bigint::BigInt;

use super::{Monomial, MultiPoly};
use crate::arith::{GaussianRational, Rational};
use crate::{Error, Result};

/// Hard caps so that hostile input fails cleanly instead of exhausting
/// memory: max exponent and max number of stored terms per intermediate.
const MAX_EXPONENT: u32 = 4096;
const MAX_TERMS: usize = 200_000;

pub fn parse_poly(text: &str, vars: &[&str]) -> Result<MultiPoly> {
    let mut p = Parser {
        src: text,
        bytes: text.as_bytes(),
        pos: 0,
        vars: vars.iter().map(|s| s.to_string()).collect(),
    };
    p.skip_ws();
    let poly = p.expr()?;
    p.skip_ws();
    if p.pos != p.bytes.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(poly)
}

struct Parser<'a> {
    src: &'a str,
    bytes: &'a [u8],
    pos: usize,
    vars: Vec<String>,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse { pos: self.pos, msg: msg.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn vars_ref(&self) -> Vec<&str> {
        self.vars.iter().map(|s| s.as_str()).collect()
    }

    fn checked(&self, p: MultiPoly) -> Result<MultiPoly> {
        if p.num_terms() > MAX_TERMS {
            Err(Error::Unsupported("expression expands to too many terms".into()))
        } else {
            Ok(p)
        }
    }

    fn expr(&mut self) -> Result<MultiPoly> {
        self.skip_ws();
        let mut negate = false;
        if let Some(c) = self.peek() {
            if c == b'+' || c == b'-' {
                negate = c == b'-';
                self.pos += 1;
            }
        }
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = self.checked(acc.add(&t))?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = self.checked(acc.sub(&t))?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly> {
        let mut acc = self.factor()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    let f = self.factor()?;
                    acc = self.checked(acc.mul(&f))?;
                }
                Some(b'/') => {
                    self.pos += 1;
                    let divisor_pos = self.pos;
                    let f = self.factor()?;
                    if !f.is_constant() {
                        return Err(Error::Parse {
                            pos: divisor_pos,
                            msg: "division only by constants".into(),
                        });
                    }
                    let c = f.constant_value();
                    if c.is_zero() {
                        return Err(Error::Parse { pos: divisor_pos, msg: "division by zero".into() });
                    }
                    acc = acc.scale(&c.inv().unwrap());
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<MultiPoly> {
        let base = self.atom()?;
        self.skip_ws();
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let e = self.unsigned_int()?;
            if e > MAX_EXPONENT {
                return Err(self.err("exponent too large"));
            }
            let deg = base.total_degree().unwrap_or(0) as u64 * e as u64;
            if deg > MAX_EXPONENT as u64 {
                return Err(self.err("total degree too large"));
            }
            return self.checked(base.pow(e));
        }
        Ok(base)
    }

    fn unsigned_int(&mut self) -> Result<u32> {
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected integer"));
        }
        self.src[start..self.pos]
            .parse::<u32>()
            .map_err(|_| Error::Parse { pos: start, msg: "integer out of range".into() })
    }

    fn atom(&mut self) -> Result<MultiPoly> {
        self.skip_ws();
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                self.skip_ws();
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let n: BigInt = self.src[start..self.pos].parse().unwrap();
                Ok(MultiPoly::constant(
                    &self.vars_ref(),
                    GaussianRational::from_rational(Rational::from_integer(n)),
                ))
            }
            Some(c) if c == b'_' || c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.bytes.len()
                    && (self.bytes[self.pos] == b'_' || self.bytes[self.pos].is_ascii_alphanumeric())
                {
                    self.pos += 1;
                }
                let name = self.src[start..self.pos].to_string();
                if name == "i" {
                    return Ok(MultiPoly::constant(&self.vars_ref(), GaussianRational::i()));
                }
                match self.vars.iter().position(|v| *v == name) {
                    Some(idx) => Ok(MultiPoly::var(&self.vars_ref(), idx)),
                    None => Err(Error::Parse {
                        pos: start,
                        msg: format!("unknown variable '{name}'"),
                    }),
                }
            }
            Some(_) => Err(self.err("expected number, variable, 'i' or '('")),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

#[allow(dead_code)]
fn monomial_of(exps: Vec<u32>) -> Monomial {
    Monomial(exps)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_forms() {
        let p = parse_poly("s^4 - 2*s*t^3", &["s", "t"]).unwrap();
        assert_eq!(p.total_degree(), Some(4));
        assert_eq!(p.num_terms(), 2);

        let q = parse_poly("(x1^2+x2^2)^3 - 4*x1^2*x2^2*x3^2", &["x1", "x2", "x3"]).unwrap();
        assert_eq!(q.total_degree(), Some(6));
        assert_eq!(q.homogeneous_degree(), Some(6));

        let r = parse_poly("3*i*x0 + 1/2", &["x0"]).unwrap();
        assert_eq!(r.total_degree(), Some(1));
        let c = r.constant_value();
        assert_eq!(c, GaussianRational::from_pair((1, 2), (0, 1)));
    }

    #[test]
    fn error_positions() {
        match parse_poly("x0 + x9", &["x0", "x1"]) {
            Err(Error::Parse { pos, msg }) => {
                assert_eq!(pos, 5);
                assert!(msg.contains("x9"));
            }
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(parse_poly("x0 x1", &["x0", "x1"]).is_err(), "juxtaposition must be rejected");
        assert!(parse_poly("x0^-1", &["x0"]).is_err());
        assert!(parse_poly("1/0", &["x0"]).is_err());
        assert!(parse_poly("1/x0", &["x0"]).is_err());
        assert!(parse_poly("", &["x0"]).is_err());
        assert!(parse_poly("(x0", &["x0"]).is_err());
    }

    #[test]
    fn unary_minus_and_rational_literals() {
        let p = parse_poly("-x0^2 + 3/4", &["x0"]).unwrap();
        let q = parse_poly("3/4 - x0^2", &["x0"]).unwrap();
        assert_eq!(p, q);
        let r = parse_poly("-3/4*x0", &["x0"]).unwrap();
        assert_eq!(r.num_terms(), 1);
    }

    #[test]
    fn resource_caps() {
        assert!(parse_poly("x0^999999999", &["x0"]).is_err());
        assert!(parse_poly("(x0+1)^5000", &["x0"]).is_err());
    }
}
