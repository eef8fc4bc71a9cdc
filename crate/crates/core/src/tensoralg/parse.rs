//! A small text syntax for polynomials, handy for writing relations by hand.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor (['*'] factor)*
//! factor := atom ['^' nat] ['/' nat]
//! atom   := nat | 'i' | 'sqrt2' | 'jK' | 'J' | 't' | 'v' | 'uAB'
//!         | 'ch(' int ')' | 'sh(' int ')' | 'lambda' | '(' expr ')' | '[' expr ',' expr ']'
//! ```
//!
//! `ch(k)` and `sh(k)` stand for `cosh(kJv/2)` and `sinh(kJv/2)`, i.e. the
//! Laurent polynomials `(t^k ± t^-k)/2`. Products are noncommutative.

use alloc::string::String;
use core::fmt;

use super::ncpoly::NcPoly;
use super::word::Gen;
#[cfg(test)]
use super::word::Word;
use crate::scalars::{Coefficient, ExpScalar, ParamMonomial};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at {}: {}", self.position, self.message)
    }
}

impl core::error::Error for ParseError {}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    len: usize,
    j: ParamMonomial,
}

type R<T> = Result<T, ParseError>;

impl Parser<'_> {
    fn err<T>(&self, msg: &str) -> R<T> {
        Err(ParseError {
            position: self.pos,
            message: msg.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && (self.src[self.pos] as char).is_whitespace() {
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

    fn expect(&mut self, c: u8) -> R<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(&alloc::format!("expected '{}'", c as char))
        }
    }

    fn keyword(&mut self, kw: &str) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(kw.as_bytes()) {
            self.pos += kw.len();
            true
        } else {
            false
        }
    }

    fn nat(&mut self) -> R<i64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected a number");
        }
        core::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .or_else(|_| self.err("number too large"))
    }

    fn int(&mut self) -> R<i64> {
        if self.eat(b'-') {
            Ok(-self.nat()?)
        } else {
            self.nat()
        }
    }

    fn digit(&mut self) -> R<usize> {
        match self.src.get(self.pos) {
            Some(c) if c.is_ascii_digit() && *c != b'0' => {
                self.pos += 1;
                Ok((c - b'0') as usize)
            }
            _ => self.err("expected an index digit 1-9"),
        }
    }

    fn scalar(&self, s: ExpScalar) -> NcPoly {
        NcPoly::constant(s)
    }

    fn expr(&mut self) -> R<NcPoly> {
        let mut neg = false;
        if self.eat(b'-') {
            neg = true;
        } else {
            self.eat(b'+');
        }
        let mut acc = self.term()?;
        if neg {
            acc = -&acc;
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

    fn term(&mut self) -> R<NcPoly> {
        let mut acc = self.factor()?;
        loop {
            self.eat(b'*');
            match self.peek() {
                Some(c) if c.is_ascii_alphanumeric() || c == b'(' || c == b'[' => {
                    acc = &acc * &self.factor()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> R<NcPoly> {
        let base = self.atom()?;
        let mut out = base.clone();
        if self.eat(b'^') {
            let e = self.nat()?;
            out = NcPoly::one(self.len);
            for _ in 0..e {
                out = &out * &base;
            }
        }
        if self.eat(b'/') {
            let d = self.nat()?;
            if d == 0 {
                return self.err("division by zero");
            }
            out = out.scale_coeff(&Coefficient::from_ratio(1, d));
        }
        Ok(out)
    }

    fn atom(&mut self) -> R<NcPoly> {
        let len = self.len;
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(b')')?;
                Ok(e)
            }
            Some(b'[') => {
                self.pos += 1;
                let a = self.expr()?;
                self.expect(b',')?;
                let b = self.expr()?;
                self.expect(b']')?;
                Ok(NcPoly::commutator(&a, &b))
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.nat()?;
                Ok(self.scalar(ExpScalar::from_int(len, n)))
            }
            Some(_) => {
                if self.keyword("sqrt2") {
                    Ok(self.scalar(ExpScalar::constant(len, Coefficient::sqrt2())))
                } else if self.keyword("lambda") {
                    Ok(self.scalar(ExpScalar::lambda(len)))
                } else if self.keyword("ch(") || self.keyword("sh(") {
                    let cosh = self.src[self.pos - 3] == b'c';
                    let k = self.int()? as i32;
                    self.expect(b')')?;
                    let s = if cosh {
                        ExpScalar::cosh_t(len, k)
                    } else {
                        ExpScalar::sinh_t(len, k)
                    };
                    Ok(self.scalar(s))
                } else if self.keyword("i") {
                    Ok(self.scalar(ExpScalar::constant(len, Coefficient::i())))
                } else if self.keyword("J") {
                    Ok(self.scalar(ExpScalar::params(self.j)))
                } else if self.keyword("t") {
                    Ok(self.scalar(ExpScalar::t_pow(len, 1)))
                } else if self.keyword("v") {
                    Ok(self.scalar(ExpScalar::v_pow(len, 1)))
                } else if self.keyword("j") {
                    let k = self.digit()?;
                    if k > len {
                        return self.err("parameter index out of range");
                    }
                    Ok(self.scalar(ExpScalar::params(ParamMonomial::param(len, k))))
                } else if self.keyword("u") {
                    let a = self.digit()?;
                    let b = self.digit()?;
                    Ok(NcPoly::gen(Gen::new(a, b), len))
                } else {
                    self.err("unexpected symbol")
                }
            }
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parses `src` over `len` parameters, with `J` standing for `j`.
pub fn parse_poly(src: &str, len: usize, j: &ParamMonomial) -> Result<NcPoly, ParseError> {
    let mut p = Parser {
        src: src.as_bytes(),
        pos: 0,
        len,
        j: *j,
    };
    let e = p.expr()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(e)
}

/// Parses a relation `lhs = rhs` into `lhs - rhs`; a bare expression is
/// read as `expr = 0`.
pub fn parse_relation(src: &str, len: usize, j: &ParamMonomial) -> Result<NcPoly, ParseError> {
    match src.split_once('=') {
        Some((l, r)) => {
            let lhs = parse_poly(l, len, j)?;
            let rhs = parse_poly(r, len, j).map_err(|mut e| {
                e.position += l.len() + 1;
                e
            })?;
            Ok(&lhs - &rhs)
        }
        None => parse_poly(src, len, j),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word_of(gens: &[(usize, usize)]) -> Word {
        Word::from_gens(gens.iter().map(|&(a, b)| Gen::new(a, b)).collect())
    }

    fn j3() -> ParamMonomial {
        ParamMonomial::from_exps(&[1, 1])
    }

    #[test]
    fn commutator_and_products() {
        let p = parse_poly("[u12, u23]", 2, &j3()).unwrap();
        let mut q = NcPoly::zero();
        q.add_term(word_of(&[(1, 2), (2, 3)]), ExpScalar::one(2));
        q.add_term(word_of(&[(2, 3), (1, 2)]), ExpScalar::from_int(2, -1));
        assert_eq!(p, q);
    }

    #[test]
    fn hyperbolic_atoms() {
        let p = parse_poly("2 ch(1)", 2, &j3()).unwrap();
        let mut expect = ExpScalar::t_pow(2, 1);
        expect = &expect + &ExpScalar::t_pow(2, -1);
        assert_eq!(p, NcPoly::constant(expect));
    }

    #[test]
    fn relation_and_coefficients() {
        let p = parse_relation("J u13 = i j1^2 u11/2", 2, &j3()).unwrap();
        assert_eq!(p.num_terms(), 2);
        assert!(parse_poly("u1", 2, &j3()).is_err());
        assert!(parse_poly("j3", 2, &j3()).is_err());
    }
}
