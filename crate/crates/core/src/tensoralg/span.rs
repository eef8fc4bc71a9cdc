use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use super::ncpoly::NcPoly;
use super::word::Word;
use crate::scalars::{Coefficient, EvalPoint, Q};

/// Reproducible random evaluation points with positive rational coordinates
/// for `t`, `v` and every parameter.
pub fn random_points(seed: u64, count: usize, nparams: usize) -> Vec<EvalPoint> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rational = move || {
        let num = (rng.next_u32() % 9_973) as i64 + 2;
        let den = (rng.next_u32() % 9_967) as i64 + 1;
        Coefficient::from_rational(Q::new(BigInt::from(num), BigInt::from(den)))
    };
    (0..count)
        .map(|_| EvalPoint {
            t: rational(),
            v: rational(),
            j: (0..nparams).map(|_| rational()).collect(),
        })
        .collect()
}

/// Row echelon form over Q(i, √2), built incrementally.
#[derive(Default)]
struct Echelon {
    rows: Vec<(usize, Vec<Coefficient>)>,
}

impl Echelon {
    fn reduce(&self, v: &mut [Coefficient]) {
        for (p, row) in &self.rows {
            if v[*p].is_zero() {
                continue;
            }
            let f = v[*p].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x = &*x - &(&f * r);
                }
            }
        }
    }

    /// Adds `v` to the row space; returns false if it was already there.
    fn insert(&mut self, mut v: Vec<Coefficient>) -> bool {
        self.reduce(&mut v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].inv().expect("nonzero pivot");
        for x in v.iter_mut() {
            *x = &*x * &inv;
        }
        self.rows.push((p, v));
        true
    }
}

fn column_index<'a>(polys: impl Iterator<Item = &'a NcPoly>) -> BTreeMap<Word, usize> {
    let mut cols = BTreeMap::new();
    for p in polys {
        for (w, _) in p.terms() {
            let n = cols.len();
            cols.entry(w.clone()).or_insert(n);
        }
    }
    cols
}

fn dense(p: &NcPoly, cols: &BTreeMap<Word, usize>, at: &EvalPoint) -> Option<Vec<Coefficient>> {
    let mut v = alloc::vec![Coefficient::zero(); cols.len()];
    for (w, x) in p.evaluate(at)? {
        v[cols[&w]] = x;
    }
    Some(v)
}

/// Dimension of the span of the polynomials evaluated at `at`.
pub fn rank_at(polys: &[NcPoly], at: &EvalPoint) -> usize {
    let cols = column_index(polys.iter());
    let mut ech = Echelon::default();
    for p in polys {
        if let Some(v) = dense(p, &cols, at) {
            ech.insert(v);
        }
    }
    ech.rows.len()
}

/// Tests whether `target` lies in the span of `spanning` over the scalar
/// ring, by exact elimination at each evaluation point. A point where some
/// scalar cannot be evaluated is skipped.
pub fn span_membership(target: &NcPoly, spanning: &[NcPoly], points: &[EvalPoint]) -> bool {
    let cols = column_index(spanning.iter().chain(core::iter::once(target)));
    points.iter().all(|at| {
        let mut ech = Echelon::default();
        for p in spanning {
            match dense(p, &cols, at) {
                Some(v) => {
                    ech.insert(v);
                }
                None => return true,
            }
        }
        match dense(target, &cols, at) {
            Some(mut v) => {
                ech.reduce(&mut v);
                v.iter().all(|x| x.is_zero())
            }
            None => true,
        }
    })
}
