use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::group::{single, ContractedGroup};
use crate::tensoralg::{Gen, NcPoly, Word};

/// Position of `g` in the generating matrix, 1-based.
fn position(g: &ContractedGroup, x: Gen) -> (usize, usize) {
    (g.spec.position_of(x.a as usize), g.spec.position_of(x.b as usize))
}

fn is_lower(g: &ContractedGroup, x: Gen) -> bool {
    let (i, k) = position(g, x);
    i > k
}

fn single_gen(w: &Word) -> Option<Gen> {
    match w.gens() {
        [x] => Some(*x),
        _ => None,
    }
}

/// `c (x² - 1)` for a diagonal generator `x`: take the branch `x = 1`.
fn square_constraint(p: &NcPoly) -> Option<Gen> {
    if p.num_terms() != 2 {
        return None;
    }
    let mut sq = None;
    let mut konst = None;
    for (w, c) in p.terms() {
        match w.gens() {
            [a, b] if a == b && a.is_diagonal() => sq = Some((*a, c.as_constant()?)),
            [] => konst = Some(c.as_constant()?),
            _ => return None,
        }
    }
    let ((x, c), k) = (sq?, konst?);
    (&c + &k).is_zero().then_some(x)
}

/// `a x + b y` with constant `a, b`: eliminate the lower-triangular one, or
/// the later one when both are on or above the diagonal.
fn linear_pair(g: &ContractedGroup, p: &NcPoly) -> Option<(Gen, NcPoly)> {
    if p.num_terms() != 2 {
        return None;
    }
    let mut it = p.terms();
    let (w1, c1) = it.next()?;
    let (w2, c2) = it.next()?;
    let (x, a) = (single_gen(w1)?, c1.as_constant()?);
    let (y, b) = (single_gen(w2)?, c2.as_constant()?);
    let pick_x = match (is_lower(g, x), is_lower(g, y)) {
        (true, false) => true,
        (false, true) => false,
        _ => position(g, x) > position(g, y),
    };
    let ((gone, ca), (kept, cb)) = if pick_x { ((x, a), (y, b)) } else { ((y, b), (x, a)) };
    let ratio = -&(&cb * &ca.inv()?);
    Some((gone, single(kept, g.nparams()).scale_coeff(&ratio)))
}

/// A lower-triangular generator occurring once, linearly and with a
/// constant coefficient: solve for it.
fn solvable(g: &ContractedGroup, p: &NcPoly) -> Option<(Gen, NcPoly)> {
    for (w, c) in p.terms() {
        let Some(x) = single_gen(w) else { continue };
        let Some(a) = c.as_constant() else { continue };
        if !is_lower(g, x) {
            continue;
        }
        let elsewhere = p.terms().any(|(w2, _)| w2 != w && w2.contains(x));
        if elsewhere {
            continue;
        }
        let rest = &p.filter_words(|w2| w2 != w);
        let inv = a.inv()?;
        return Some((x, rest.scale_coeff(&-&inv)));
    }
    None
}

/// A 2×2 block `[[x, y], [z, w]]` on the diagonal positions `p < q` with
/// `x² + y² = 1`, `z² + w² = 1`, `xz + yw = 0`: take the rotation branch
/// `w = x`, `z = -y`.
fn rotation_block(g: &ContractedGroup, constraints: &[NcPoly]) -> Option<Vec<(Gen, NcPoly)>> {
    let len = g.nparams();
    let n = g.spec.n();
    let at = |i: usize, k: usize| crate::group::generator_at(&g.spec, i, k);
    let has = |src: &str| {
        let target = crate::tensoralg::parse_poly(src, len, &crate::scalars::ParamMonomial::one(len)).ok()?;
        constraints
            .iter()
            .any(|c| c.is_constant_multiple_of(&target))
            .then_some(())
    };
    for p in 1..=n {
        for q in p + 1..=n {
            let (x, y, z, w) = (at(p, p), at(p, q), at(q, p), at(q, q));
            if [x, y, z, w].iter().any(|v| g.eliminations.contains_key(v)) {
                continue;
            }
            let found = has(&alloc::format!("{x} {x} + {y} {y} - 1"))
                .and(has(&alloc::format!("{z} {z} + {w} {w} - 1")))
                .and(has(&alloc::format!("{x} {z} + {y} {w}")));
            if found.is_some() {
                return Some(alloc::vec![(w, single(x, len)), (z, -&single(y, len))]);
            }
        }
    }
    None
}

fn next_elimination(g: &ContractedGroup, constraints: &[NcPoly]) -> Option<Vec<(Gen, NcPoly)>> {
    let len = g.nparams();
    if let Some(x) = constraints.iter().find_map(square_constraint) {
        return Some(alloc::vec![(x, NcPoly::one(len))]);
    }
    if let Some(e) = rotation_block(g, constraints) {
        return Some(e);
    }
    if let Some(e) = constraints.iter().find_map(|p| linear_pair(g, p)) {
        return Some(alloc::vec![e]);
    }
    constraints.iter().find_map(|p| solvable(g, p)).map(|e| alloc::vec![e])
}

/// Solves the contracted orthogonality relations of an `N = 3` group for
/// as many generators as possible, in the order: diagonal squares, 2×2
/// orthogonal blocks (rotation branch), two-term linear relations, then linear occurrences of lower-triangular generators.
/// Each solution is substituted into the remaining constraints and into the
/// earlier solutions until nothing linear is left. Other `N` are returned unchanged.
pub fn eliminate_generators(mut g: ContractedGroup) -> ContractedGroup {
    if g.spec.n() != 3 {
        return g;
    }
    let nil = g.nil();
    let orth: Vec<NcPoly> = g.orth.iter().filter_map(|r| r.verdict.contracted().cloned()).collect();
    loop {
        let constraints: Vec<NcPoly> = orth.iter().map(|p| g.reduce(p)).filter(|p| !p.is_zero()).collect();
        let Some(found) = next_elimination(&g, &constraints) else {
            break;
        };
        for (x, value) in found {
            let step: BTreeMap<Gen, NcPoly> = BTreeMap::from([(x, value.clone())]);
            for v in g.eliminations.values_mut() {
                *v = v.substitute_generators(&step, nil).expect("same parameter context");
            }
            g.eliminations.insert(x, value);
        }
    }
    g
}

/// Reads an elimination as the relation `g - value`.
pub fn elimination_relation(g: Gen, value: &NcPoly, len: usize) -> NcPoly {
    &single(g, len) - value
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::contraction::contract_group;
    use crate::group::GroupSpec;
    use crate::scalars::{IndexSet, ParamMonomial};
    use crate::tensoralg::parse_poly;

    fn reduced(sigma: &[usize], nil: &[usize]) -> ContractedGroup {
        let spec = GroupSpec::contraction(3, sigma.to_vec(), IndexSet::from_indices(nil.iter().copied())).unwrap();
        eliminate_generators(contract_group(&spec))
    }

    fn poly(src: &str) -> NcPoly {
        parse_poly(src, 2, &ParamMonomial::one(2)).unwrap()
    }

    fn expect(g: &ContractedGroup, list: &[(&str, &str)]) {
        let mut want = BTreeMap::new();
        for (x, v) in list {
            let x = poly(x).generators().into_iter().next().unwrap();
            want.insert(x, poly(v));
        }
        assert_eq!(g.eliminations, want);
    }

    #[test]
    fn galilei_sigma0() {
        let g = reduced(&[1, 2, 3], &[1, 2]);
        expect(
            &g,
            &[
                ("u11", "1"),
                ("u22", "1"),
                ("u33", "1"),
                ("u21", "-u12"),
                ("u32", "-u23"),
                ("u31", "-u13 + u12 u23"),
            ],
        );
    }

    #[test]
    fn galilei_sigma213() {
        let g = reduced(&[2, 1, 3], &[1, 2]);
        expect(
            &g,
            &[
                ("u11", "1"),
                ("u22", "1"),
                ("u33", "1"),
                ("u12", "-u21"),
                ("u32", "-u23"),
                ("u31", "-u13 - u21 u23 + i v u21/2"),
            ],
        );
    }

    #[test]
    fn euclid_sigma0() {
        let g = reduced(&[1, 2, 3], &[1]);
        assert_eq!(g.eliminations[&Gen::new(1, 1)], poly("1"));
        assert_eq!(g.eliminations[&Gen::new(3, 3)], poly("u22"));
        assert_eq!(g.eliminations[&Gen::new(3, 2)], poly("-u23"));
        assert_eq!(g.eliminations.len(), 5);
    }

    #[test]
    fn raw_inadmissible_entries_are_implied_after_elimination() {
        for sigma in [[1, 2, 3], [2, 1, 3]] {
            let g = reduced(&sigma, &[1, 2]);
            assert!(g.inadmissible().count() > 0);
            assert_eq!(g.unexplained_inadmissible(7, 3).len(), 0, "{sigma:?}");
        }
    }

    #[test]
    fn other_sizes_are_untouched() {
        let spec = GroupSpec::contraction(4, alloc::vec![1, 2, 3, 4], IndexSet::from_indices([1])).unwrap();
        assert!(eliminate_generators(contract_group(&spec)).eliminations.is_empty());
    }
}
