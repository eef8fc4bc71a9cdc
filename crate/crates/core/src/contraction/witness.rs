use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::group::{bounded_ideal, single, ContractedGroup};
use crate::hopf::AntipodeFraction;
use crate::scalars::IndexSet;
use crate::tensoralg::{random_points, span_membership, Gen, NcPoly, TensorPoly};

/// A relabeling of generators; anything not listed is fixed.
pub type Relabeling = BTreeMap<Gen, Gen>;

fn image(phi: &Relabeling, g: Gen) -> Gen {
    phi.get(&g).copied().unwrap_or(g)
}

pub fn relabel_poly(phi: &Relabeling, p: &NcPoly, len: usize) -> NcPoly {
    let map: BTreeMap<Gen, NcPoly> = phi.iter().map(|(&a, &b)| (a, single(b, len))).collect();
    p.substitute_generators(&map, IndexSet::EMPTY)
        .expect("same parameter context")
}

pub fn relabel_tensor(phi: &Relabeling, t: &TensorPoly, len: usize) -> TensorPoly {
    t.map_factors(|w| relabel_poly(phi, &NcPoly::term(w.clone(), crate::scalars::ExpScalar::one(len)), len))
}

/// Two relation sets generate the same two-sided ideal, as far as products
/// with a single generator can see: each relation lies in the span of the
/// other set and its one-generator multiples. Spans are tested at seeded
/// random points.
pub fn same_relations(a: &[NcPoly], b: &[NcPoly], gens: &[Gen], len: usize, seed: u64, points: usize) -> bool {
    let pts = random_points(seed, points, len);
    let ia = bounded_ideal(a, gens, len);
    let ib = bounded_ideal(b, gens, len);
    a.iter().all(|r| span_membership(r, &ib, &pts)) && b.iter().all(|r| span_membership(r, &ia, &pts))
}

/// Outcome of transporting one contracted group onto another by a relabeling.
#[derive(Clone, PartialEq, Debug)]
pub struct RelabelingReport {
    pub commutators: bool,
    pub antipodes: bool,
    pub coproducts: bool,
    /// One line per generator on which a Hopf map fails to match.
    pub failures: Vec<String>,
}

impl RelabelingReport {
    /// The relabeling is a Hopf algebra isomorphism.
    pub fn is_isomorphism(&self) -> bool {
        self.commutators && self.antipodes && self.coproducts
    }
}

/// Tests whether `phi` carries the relations, antipode and coproduct of `a`
/// onto those of `b`, both taken after eliminations.
pub fn compare_by_relabeling(
    a: &ContractedGroup,
    b: &ContractedGroup,
    phi: &Relabeling,
    seed: u64,
    points: usize,
) -> RelabelingReport {
    let len = a.nparams();
    let mapped: Vec<NcPoly> = a
        .surviving_relations()
        .iter()
        .map(|r| relabel_poly(phi, r, len))
        .collect();
    let gens = b.surviving_generators();
    let commutators = same_relations(&mapped, &b.surviving_relations(), &gens, len, seed, points);

    let mut failures = Vec::new();
    let mut antipodes = true;
    let mut coproducts = true;
    for g in a.surviving_generators() {
        let h = image(phi, g);
        if let (Some(Ok(sa)), Some(Ok(sb))) = (a.reduced_antipode(g), b.reduced_antipode(h)) {
            let moved = AntipodeFraction {
                num: relabel_poly(phi, &sa.num, len),
                den: sa.den,
            };
            if !moved.same_as(&sb) {
                antipodes = false;
                failures.push(format!("S({g}) ↦ {} but S({h}) = {}", moved.num, sb.num));
            }
        } else {
            antipodes = false;
            failures.push(format!("S({g}) or S({h}) unavailable"));
        }
        match (a.reduced_coproduct(g), b.reduced_coproduct(h)) {
            (Some(da), Some(db)) => {
                let moved = relabel_tensor(phi, &da, len);
                if moved != db {
                    coproducts = false;
                    failures.push(format!(
                        "Δ({g}) ↦ {} but Δ({h}) = {}",
                        moved.render(IndexSet::EMPTY),
                        db.render(IndexSet::EMPTY)
                    ));
                }
            }
            _ => {
                coproducts = false;
                failures.push(format!("Δ({g}) or Δ({h}) unavailable"));
            }
        }
    }
    RelabelingReport {
        commutators,
        antipodes,
        coproducts,
        failures,
    }
}
