use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use super::word::{Gen, Word};
use crate::scalars::{
    join_terms, render_term, Coefficient, EvalPoint, ExpScalar, IndexSet, ParamMonomial, ScalarError,
};

/// Element of the free associative algebra over the scalar ring.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct NcPoly {
    terms: BTreeMap<Word, ExpScalar>,
}

impl NcPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: ExpScalar) -> Self {
        Self::term(Word::empty(), c)
    }

    pub fn one(len: usize) -> Self {
        Self::constant(ExpScalar::one(len))
    }

    pub fn gen(g: Gen, len: usize) -> Self {
        Self::term(Word::single(g), ExpScalar::one(len))
    }

    pub fn term(w: Word, c: ExpScalar) -> Self {
        let mut p = Self::zero();
        p.add_term(w, c);
        p
    }

    pub fn add_term(&mut self, w: Word, c: ExpScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(old) => {
                let s = &*old + &c;
                if s.is_zero() {
                    self.terms.remove(&w);
                } else {
                    *old = s;
                }
            }
            None => {
                self.terms.insert(w, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &ExpScalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, w: &Word) -> ExpScalar {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn nparams(&self) -> Option<usize> {
        self.terms.values().find_map(|c| c.nparams())
    }

    pub fn degree(&self) -> usize {
        self.terms.keys().map(|w| w.len()).max().unwrap_or(0)
    }

    pub fn generators(&self) -> BTreeSet<Gen> {
        self.terms.keys().flat_map(|w| w.gens().iter().copied()).collect()
    }

    pub fn try_add(&self, o: &Self) -> Result<Self, ScalarError> {
        let mut r = self.clone();
        for (w, c) in &o.terms {
            let s = match r.terms.get(w) {
                Some(old) => old.try_add(c)?,
                None => c.clone(),
            };
            if s.is_zero() {
                r.terms.remove(w);
            } else {
                r.terms.insert(w.clone(), s);
            }
        }
        Ok(r)
    }

    /// Left multiplication by a scalar.
    pub fn scale(&self, c: &ExpScalar) -> Self {
        let mut r = Self::zero();
        for (w, x) in &self.terms {
            r.add_term(w.clone(), c * x);
        }
        r
    }

    pub fn scale_coeff(&self, c: &Coefficient) -> Self {
        self.map_coeffs(|x| x.scale(c))
    }

    pub fn map_coeffs(&self, f: impl Fn(&ExpScalar) -> ExpScalar) -> Self {
        let mut r = Self::zero();
        for (w, x) in &self.terms {
            r.add_term(w.clone(), f(x));
        }
        r
    }

    pub fn try_map_coeffs<E>(&self, f: impl Fn(&ExpScalar) -> Result<ExpScalar, E>) -> Result<Self, E> {
        let mut r = Self::zero();
        for (w, x) in &self.terms {
            r.add_term(w.clone(), f(x)?);
        }
        Ok(r)
    }

    /// Keeps the terms whose word satisfies `keep`.
    pub fn filter_words(&self, keep: impl Fn(&Word) -> bool) -> Self {
        let mut r = Self::zero();
        for (w, x) in &self.terms {
            if keep(w) {
                r.add_term(w.clone(), x.clone());
            }
        }
        r
    }

    /// Product whose scalar coefficients are truncated on `nil`.
    pub fn mul_truncated(&self, o: &Self, nil: IndexSet) -> Result<Self, ScalarError> {
        let mut r = Self::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &o.terms {
                r.add_term(w1.concat(w2), c1.mul_truncated(c2, nil)?);
            }
        }
        Ok(r)
    }

    /// `[a, b] = ab - ba`.
    pub fn commutator(a: &Self, b: &Self) -> Self {
        &(a * b) - &(b * a)
    }

    /// Replaces generators by polynomials, multiplying out with truncation on `nil`.
    pub fn substitute_generators(&self, map: &BTreeMap<Gen, NcPoly>, nil: IndexSet) -> Result<Self, ScalarError> {
        let mut r = Self::zero();
        for (w, c) in &self.terms {
            let mut acc = Self::constant(c.clone());
            for g in w.gens() {
                let factor = match map.get(g) {
                    Some(p) => p.clone(),
                    None => Self::term(Word::single(*g), ExpScalar::one(c.nparams().unwrap_or(0))),
                };
                acc = acc.mul_truncated(&factor, nil)?;
            }
            r = r.try_add(&acc)?;
        }
        Ok(r)
    }

    /// Numeric coefficient of every word at a point.
    pub fn evaluate(&self, p: &EvalPoint) -> Option<BTreeMap<Word, Coefficient>> {
        let mut out = BTreeMap::new();
        for (w, c) in &self.terms {
            let x = c.evaluate(p)?;
            if !x.is_zero() {
                out.insert(w.clone(), x);
            }
        }
        Some(out)
    }

    /// Human readable form with nilpotent parameters written as `ι`.
    pub fn render(&self, nil: IndexSet) -> String {
        if self.is_zero() {
            return String::from("0");
        }
        let mut parts = Vec::new();
        for (w, c) in &self.terms {
            for (m, x) in c.terms() {
                parts.push(attach(render_term(x, m, nil), &alloc::format!("{}", w), w.is_empty()));
            }
        }
        join_terms(parts)
    }

    /// True if `self = c · other` for some nonzero constant `c`.
    pub fn is_constant_multiple_of(&self, other: &Self) -> bool {
        if self.is_zero() || other.is_zero() || self.terms.len() != other.terms.len() {
            return self.is_zero() && other.is_zero();
        }
        let (w0, c0) = other.terms.iter().next().unwrap();
        let (m, x) = c0.terms().next().unwrap();
        let Some(sc) = self.terms.get(w0) else {
            return false;
        };
        let Some((_, y)) = sc.terms().find(|(m2, _)| *m2 == m) else {
            return false;
        };
        let ratio = y * &x.inv().unwrap();
        other.scale_coeff(&ratio) == *self
    }

    /// The largest parameter monomial dividing every coefficient, and the
    /// quotient. The zero polynomial has content `1`.
    pub fn param_content(&self) -> (ParamMonomial, Self) {
        let g = self
            .terms
            .values()
            .filter_map(|c| c.common_param_divisor(IndexSet::from_bits(u32::MAX)))
            .reduce(|a, b| a.gcd(&b));
        match g {
            None => (ParamMonomial::one(self.nparams().unwrap_or(0)), self.clone()),
            Some(g) => (g, self.try_map_coeffs(|c| c.divide_param(&g)).expect("content divides")),
        }
    }

    /// Equality up to a nonzero constant and a parameter monomial on each side.
    pub fn is_proportional_to(&self, other: &Self) -> bool {
        self.param_content().1.is_constant_multiple_of(&other.param_content().1)
    }
}

/// `coefficient word`, dropping a unit coefficient.
pub(crate) fn attach(coeff: String, word: &str, empty_word: bool) -> String {
    if empty_word {
        return coeff;
    }
    match coeff.as_str() {
        "1" => word.into(),
        "-1" => alloc::format!("-{word}"),
        _ => alloc::format!("{coeff} {word}"),
    }
}

impl fmt::Display for NcPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(IndexSet::EMPTY))
    }
}

impl fmt::Debug for NcPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add for &NcPoly {
    type Output = NcPoly;
    fn add(self, o: &NcPoly) -> NcPoly {
        self.try_add(o).expect("polynomial addition")
    }
}

impl Sub for &NcPoly {
    type Output = NcPoly;
    fn sub(self, o: &NcPoly) -> NcPoly {
        self.try_add(&-o).expect("polynomial subtraction")
    }
}

impl Neg for &NcPoly {
    type Output = NcPoly;
    fn neg(self) -> NcPoly {
        self.scale_coeff(&Coefficient::from_int(-1))
    }
}

impl Mul for &NcPoly {
    type Output = NcPoly;
    fn mul(self, o: &NcPoly) -> NcPoly {
        let mut r = NcPoly::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &o.terms {
                r.add_term(w1.concat(w2), c1 * c2);
            }
        }
        r
    }
}
