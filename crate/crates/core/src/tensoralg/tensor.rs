use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use super::ncpoly::NcPoly;
use super::word::Word;
use crate::scalars::{render_term, Coefficient, ExpScalar, IndexSet};

/// Element of a tensor power `A^{⊗k}` of the free algebra. Coproducts live in
/// rank 2; coassociativity checks need rank 3.
#[derive(Clone, PartialEq, Eq)]
pub struct TensorPoly {
    rank: usize,
    terms: BTreeMap<Vec<Word>, ExpScalar>,
}

impl TensorPoly {
    pub fn zero(rank: usize) -> Self {
        TensorPoly {
            rank,
            terms: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Word>, &ExpScalar)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, factors: Vec<Word>, c: ExpScalar) {
        assert_eq!(factors.len(), self.rank, "tensor rank mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&factors) {
            Some(old) => {
                let s = &*old + &c;
                if s.is_zero() {
                    self.terms.remove(&factors);
                } else {
                    *old = s;
                }
            }
            None => {
                self.terms.insert(factors, c);
            }
        }
    }

    /// `p_1 ⊗ p_2 ⊗ ... ⊗ p_k`.
    pub fn product_of(polys: &[&NcPoly]) -> Self {
        let mut acc: Vec<(Vec<Word>, ExpScalar)> = alloc::vec![(Vec::new(), ExpScalar::zero())];
        let mut first = true;
        for p in polys {
            let mut next = Vec::new();
            for (ws, c) in &acc {
                for (w, x) in p.terms() {
                    let mut ws2 = ws.clone();
                    ws2.push(w.clone());
                    let coeff = if first { x.clone() } else { c * x };
                    next.push((ws2, coeff));
                }
            }
            acc = next;
            first = false;
        }
        let mut r = TensorPoly::zero(polys.len());
        for (ws, c) in acc {
            r.add_term(ws, c);
        }
        r
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!(self.rank, o.rank, "tensor rank mismatch");
        let mut r = self.clone();
        for (f, c) in &o.terms {
            r.add_term(f.clone(), c.clone());
        }
        r
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale_coeff(&Coefficient::from_int(-1)))
    }

    pub fn scale(&self, c: &ExpScalar) -> Self {
        let mut r = TensorPoly::zero(self.rank);
        for (f, x) in &self.terms {
            r.add_term(f.clone(), c * x);
        }
        r
    }

    pub fn scale_coeff(&self, c: &Coefficient) -> Self {
        self.map_coeffs(|x| x.scale(c))
    }

    pub fn map_coeffs(&self, f: impl Fn(&ExpScalar) -> ExpScalar) -> Self {
        let mut r = TensorPoly::zero(self.rank);
        for (fs, x) in &self.terms {
            r.add_term(fs.clone(), f(x));
        }
        r
    }

    /// Componentwise product in the tensor algebra.
    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.rank, o.rank, "tensor rank mismatch");
        let mut r = TensorPoly::zero(self.rank);
        for (f1, c1) in &self.terms {
            for (f2, c2) in &o.terms {
                let f: Vec<Word> = f1.iter().zip(f2).map(|(a, b)| a.concat(b)).collect();
                r.add_term(f, c1 * c2);
            }
        }
        r
    }

    /// Replaces the factor at `pos` by the image of its word under `f`, which
    /// must return a tensor of fixed rank `k`; the result has rank `rank - 1 + k`.
    pub fn expand_factor(&self, pos: usize, k: usize, f: impl Fn(&Word) -> TensorPoly) -> Self {
        let mut r = TensorPoly::zero(self.rank - 1 + k);
        for (fs, c) in &self.terms {
            let img = f(&fs[pos]);
            assert_eq!(img.rank, k, "factor image has the wrong rank");
            for (gs, x) in &img.terms {
                let mut out = Vec::with_capacity(r.rank);
                out.extend_from_slice(&fs[..pos]);
                out.extend(gs.iter().cloned());
                out.extend_from_slice(&fs[pos + 1..]);
                r.add_term(out, c * x);
            }
        }
        r
    }

    /// Applies a polynomial map to every factor.
    pub fn map_factors(&self, f: impl Fn(&Word) -> NcPoly) -> Self {
        let mut r = TensorPoly::zero(self.rank);
        for (fs, c) in &self.terms {
            let imgs: Vec<NcPoly> = fs.iter().map(&f).collect();
            let refs: Vec<&NcPoly> = imgs.iter().collect();
            r = r.add(&TensorPoly::product_of(&refs).scale(c));
        }
        r
    }

    /// Rank-1 tensors are just polynomials.
    pub fn to_poly(&self) -> NcPoly {
        assert_eq!(self.rank, 1, "only rank-1 tensors convert to polynomials");
        let mut p = NcPoly::zero();
        for (fs, c) in &self.terms {
            p.add_term(fs[0].clone(), c.clone());
        }
        p
    }

    pub fn render(&self, nil: IndexSet) -> String {
        if self.is_zero() {
            return String::from("0");
        }
        let mut parts = Vec::new();
        for (fs, c) in &self.terms {
            let factors: Vec<String> = fs.iter().map(|w| alloc::format!("{}", w)).collect();
            for (m, x) in c.terms() {
                parts.push(super::ncpoly::attach(
                    render_term(x, m, nil),
                    &factors.join(" ⊗ "),
                    false,
                ));
            }
        }
        crate::scalars::join_terms(parts)
    }
}

impl fmt::Debug for TensorPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(IndexSet::EMPTY))
    }
}
