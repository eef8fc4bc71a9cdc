use alloc::collections::BTreeMap;

use crate::group::{range_product, GroupSpec};
use crate::scalars::{ExpScalar, ParamMonomial};
use crate::tensoralg::{Gen, NcPoly, TensorPoly, Word};

/// Coefficient `(a, c)(c, b) / (a, b)` of `u_{ac} ⊗ u_{cb}` in `Δ(u_{ab})`.
///
/// It only depends on the labels, so the coproduct is the same for every `σ`.
pub fn coproduct_coefficient(n: usize, a: usize, b: usize, c: usize) -> ParamMonomial {
    range_product(n, a, c)
        .mul(&range_product(n, c, b))
        .checked_div(&range_product(n, a, b))
        .expect("range products always divide")
}

/// `Δ(u_{ab}) = Σ_c (a,c)(c,b)/(a,b) · u_{ac} ⊗ u_{cb}`.
pub fn coproduct(n: usize, g: Gen) -> TensorPoly {
    let (a, b) = (g.a as usize, g.b as usize);
    let mut t = TensorPoly::zero(2);
    for c in 1..=n {
        t.add_term(
            alloc::vec![Word::single(Gen::new(a, c)), Word::single(Gen::new(c, b))],
            ExpScalar::params(coproduct_coefficient(n, a, b, c)),
        );
    }
    t
}

/// `ε(u_{ab}) = δ_{ab}`.
pub fn counit(n: usize, g: Gen) -> ExpScalar {
    if g.is_diagonal() {
        ExpScalar::one(n - 1)
    } else {
        ExpScalar::zero()
    }
}

/// All `N²` generators `u_{ab}` in label order.
pub fn all_generators(n: usize) -> impl Iterator<Item = Gen> {
    (1..=n).flat_map(move |a| (1..=n).map(move |b| Gen::new(a, b)))
}

/// Extension of a generator map to words as an algebra homomorphism into
/// the tensor algebra.
pub fn tensor_of_word(w: &Word, rank: usize, len: usize, on_gen: &impl Fn(Gen) -> TensorPoly) -> TensorPoly {
    let one = NcPoly::one(len);
    let ones: alloc::vec::Vec<&NcPoly> = (0..rank).map(|_| &one).collect();
    let mut acc = TensorPoly::product_of(&ones);
    for g in w.gens() {
        acc = acc.mul(&on_gen(*g));
    }
    acc
}

/// `(Δ ⊗ id)Δ(g) - (id ⊗ Δ)Δ(g)` for a generator-level coproduct `delta`.
pub fn coassociativity_defect(g: Gen, len: usize, delta: &BTreeMap<Gen, TensorPoly>) -> TensorPoly {
    let on_gen = |h: Gen| delta[&h].clone();
    let d = &delta[&g];
    let left = d.expand_factor(0, 2, |w| tensor_of_word(w, 2, len, &on_gen));
    let right = d.expand_factor(1, 2, |w| tensor_of_word(w, 2, len, &on_gen));
    left.sub(&right)
}

/// `(ε ⊗ id)Δ(g) - g` and `(id ⊗ ε)Δ(g) - g`.
pub fn counit_defects(
    g: Gen,
    len: usize,
    delta: &BTreeMap<Gen, TensorPoly>,
    eps: &impl Fn(Gen) -> ExpScalar,
) -> (NcPoly, NcPoly) {
    let eps_word = |w: &Word| {
        let mut acc = TensorPoly::zero(0);
        let mut c = ExpScalar::one(len);
        for h in w.gens() {
            c = &c * &eps(*h);
        }
        acc.add_term(alloc::vec![], c);
        acc
    };
    let d = &delta[&g];
    let gp = NcPoly::gen(g, len);
    let left = d.expand_factor(0, 0, eps_word).to_poly();
    let right = d.expand_factor(1, 0, eps_word).to_poly();
    (&left - &gp, &right - &gp)
}

/// The coproduct of every generator of the formal group.
pub fn coproduct_table(spec: &GroupSpec) -> BTreeMap<Gen, TensorPoly> {
    all_generators(spec.n()).map(|g| (g, coproduct(spec.n(), g))).collect()
}
