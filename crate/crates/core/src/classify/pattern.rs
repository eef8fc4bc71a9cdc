use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::group::{fundamental_parameter, range_product, GroupSpec};
use crate::scalars::IndexSet;

/// Where the nilpotent parameters sit in a generating matrix: entry `(a, b)`
/// is the set of nilpotent indices in the multiplier at that position.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Pattern {
    n: usize,
    cells: Vec<IndexSet>,
}

impl Pattern {
    pub fn empty(n: usize) -> Self {
        Pattern {
            n,
            cells: alloc::vec![IndexSet::EMPTY; n * n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Entry at 1-based position `(a, b)`.
    pub fn get(&self, a: usize, b: usize) -> IndexSet {
        self.cells[(a - 1) * self.n + (b - 1)]
    }

    pub fn set(&mut self, a: usize, b: usize, x: IndexSet) {
        self.cells[(a - 1) * self.n + (b - 1)] = x;
    }

    fn bits(&self) -> Vec<u32> {
        self.cells.iter().map(|c| c.bits()).collect()
    }
}

/// Pattern of a contraction: `(σ_a, σ_b) ∩ S` at every position.
pub fn pattern_of(spec: &GroupSpec) -> Pattern {
    let n = spec.n();
    let nil = spec.nilpotent_set();
    let mut p = Pattern::empty(n);
    for a in 1..=n {
        for b in 1..=n {
            let m = range_product(n, spec.sigma_at(a), spec.sigma_at(b));
            p.set(a, b, m.support().intersection(nil));
        }
    }
    p
}

/// `J` restricted to the nilpotent parameters.
pub fn j_of(spec: &GroupSpec) -> IndexSet {
    fundamental_parameter(spec).support().intersection(spec.nilpotent_set())
}

/// Renaming `ι_k ↦ ι_{N-k}` of parameter indices, or the identity.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ParamRelabel {
    pub n: usize,
    pub reverse: bool,
}

impl ParamRelabel {
    pub fn apply(&self, s: IndexSet) -> IndexSet {
        if !self.reverse {
            return s;
        }
        IndexSet::from_indices(s.iter().map(|k| self.n - k))
    }
}

/// One element of the equivalence group: conjugate by a permutation of rows
/// and columns, then optionally reflect in the secondary diagonal, renaming
/// `ι_k ↦ ι_{N-k}` along with it.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Transform {
    /// 1-based; the new entry `(a, b)` is the old `(perm[a], perm[b])`.
    pub perm: Vec<usize>,
    pub reflect: bool,
    pub relabel: bool,
}

impl Transform {
    pub fn identity(n: usize) -> Self {
        Transform {
            perm: (1..=n).collect(),
            reflect: false,
            relabel: false,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum TransformError {
    /// Parameters may only be renamed together with a reflection.
    RelabelWithoutReflect,
    SizeMismatch {
        pattern: usize,
        perm: usize,
    },
}

impl fmt::Display for TransformError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TransformError::RelabelWithoutReflect => f.write_str("relabeling is only allowed together with reflection"),
            TransformError::SizeMismatch { pattern, perm } => {
                write!(
                    f,
                    "permutation of length {perm} applied to a {pattern}x{pattern} pattern"
                )
            }
        }
    }
}

/// Applies `t` to a pattern; the returned relabeling has to be applied to `J`
/// as well.
pub fn transform_pattern(p: &Pattern, t: &Transform) -> Result<(Pattern, ParamRelabel), TransformError> {
    if t.relabel && !t.reflect {
        return Err(TransformError::RelabelWithoutReflect);
    }
    transform_unchecked(p, t)
}

fn transform_unchecked(p: &Pattern, t: &Transform) -> Result<(Pattern, ParamRelabel), TransformError> {
    let n = p.n;
    if t.perm.len() != n {
        return Err(TransformError::SizeMismatch {
            pattern: n,
            perm: t.perm.len(),
        });
    }
    let relabel = ParamRelabel { n, reverse: t.relabel };
    let mut out = Pattern::empty(n);
    for a in 1..=n {
        for b in 1..=n {
            let (x, y) = if t.reflect { (n + 1 - b, n + 1 - a) } else { (a, b) };
            let v = p.get(t.perm[x - 1], t.perm[y - 1]);
            out.set(a, b, relabel.apply(v));
        }
    }
    Ok((out, relabel))
}

/// Class invariant of a `(pattern, J)` pair.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CanonicalKey {
    pub pattern: Pattern,
    pub j: Option<IndexSet>,
}

impl fmt::Display for CanonicalKey {
    /// Rows separated by `/`, each cell the digits of its indices or `-`,
    /// then `;J=` and the digits of `J` (`1` when empty). Without `J` the
    /// suffix is left out.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.pattern.n;
        let mut rows = Vec::new();
        for a in 1..=n {
            let cells: Vec<String> = (1..=n).map(|b| digits(self.pattern.get(a, b), "-")).collect();
            rows.push(cells.join(","));
        }
        f.write_str(&rows.join("/"))?;
        if let Some(j) = self.j {
            write!(f, ";J={}", digits(j, "1"))?;
        }
        Ok(())
    }
}

fn digits(s: IndexSet, empty: &str) -> String {
    if s.is_empty() {
        return empty.into();
    }
    s.iter()
        .map(|k| char::from_digit(k as u32, 10).unwrap_or('?'))
        .collect()
}

/// Which transforms count as equivalences.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct KeyOptions {
    /// Leave `J` out of the key (the classical shadow).
    pub ignore_j: bool,
    /// Allow renaming `ι_k ↦ ι_{N-k}` without reflecting.
    pub bare_relabel: bool,
}

/// All transforms allowed by `opts` for size `n`.
pub fn transforms(n: usize, opts: KeyOptions) -> Vec<Transform> {
    let mut out = Vec::new();
    for perm in crate::group::all_permutations(n) {
        for (reflect, relabel) in [(false, false), (true, false), (true, true), (false, true)] {
            if relabel && !reflect && !opts.bare_relabel {
                continue;
            }
            out.push(Transform {
                perm: perm.clone(),
                reflect,
                relabel,
            });
        }
    }
    out
}

/// Lexicographic minimum of `(pattern, J)` over the equivalence group.
pub fn canonical_key(p: &Pattern, j: IndexSet) -> CanonicalKey {
    canonical_key_with(p, j, KeyOptions::default())
}

pub fn canonical_key_with(p: &Pattern, j: IndexSet, opts: KeyOptions) -> CanonicalKey {
    transforms(p.n, opts)
        .iter()
        .map(|t| {
            let (q, r) = transform_unchecked(p, t).expect("sizes agree");
            let jj = (!opts.ignore_j).then(|| r.apply(j));
            (q.bits(), jj.map(|x| x.bits()), q, jj)
        })
        .min_by(|a, b| (&a.0, a.1).cmp(&(&b.0, b.1)))
        .map(|(_, _, pattern, j)| CanonicalKey { pattern, j })
        .expect("at least the identity")
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn spec(sigma: &[usize], nil: &[usize]) -> GroupSpec {
        GroupSpec::contraction(sigma.len(), sigma.to_vec(), IndexSet::from_indices(nil.iter().copied())).unwrap()
    }

    fn set(xs: &[usize]) -> IndexSet {
        IndexSet::from_indices(xs.iter().copied())
    }

    #[test]
    fn euclid_pattern_has_first_row_contracted() {
        let p = pattern_of(&spec(&[1, 2, 3], &[1]));
        assert_eq!(p.get(1, 2), set(&[1]));
        assert_eq!(p.get(1, 3), set(&[1]));
        assert_eq!(p.get(2, 3), IndexSet::EMPTY);
        assert_eq!(p.get(3, 1), set(&[1]));
    }

    #[test]
    fn galilei_sigma213_pattern() {
        let p = pattern_of(&spec(&[2, 1, 3], &[1, 2]));
        assert_eq!(p.get(1, 2), set(&[1]));
        assert_eq!(p.get(1, 3), set(&[2]));
        assert_eq!(p.get(2, 3), set(&[1, 2]));
        assert_eq!(j_of(&spec(&[2, 1, 3], &[1, 2])), set(&[2]));
    }

    #[test]
    fn relabel_needs_reflection() {
        let p = Pattern::empty(3);
        let t = Transform {
            relabel: true,
            ..Transform::identity(3)
        };
        assert_eq!(transform_pattern(&p, &t), Err(TransformError::RelabelWithoutReflect));
    }

    #[test]
    fn reflection_with_relabel_swaps_euclid_and_newton() {
        let e = pattern_of(&spec(&[1, 2, 3], &[1]));
        let nw = pattern_of(&spec(&[1, 2, 3], &[2]));
        let t = Transform {
            reflect: true,
            relabel: true,
            ..Transform::identity(3)
        };
        assert_eq!(transform_pattern(&e, &t).unwrap().0, nw);
    }

    #[test]
    fn j_separates_galilei_groups() {
        let a = spec(&[1, 2, 3], &[1, 2]);
        let b = spec(&[2, 1, 3], &[1, 2]);
        let ka = canonical_key(&pattern_of(&a), j_of(&a));
        let kb = canonical_key(&pattern_of(&b), j_of(&b));
        assert_eq!(ka.pattern, kb.pattern);
        assert_ne!(ka, kb);
    }

    #[test]
    fn key_display() {
        let s = spec(&[1, 2, 3], &[1]);
        let k = canonical_key(&pattern_of(&s), j_of(&s));
        assert!(k.to_string().contains(";J="));
        let shadow = canonical_key_with(
            &pattern_of(&s),
            j_of(&s),
            KeyOptions {
                ignore_j: true,
                bare_relabel: false,
            },
        );
        assert!(!shadow.to_string().contains("J="));
    }

    fn contraction() -> impl proptest::strategy::Strategy<Value = (GroupSpec, Transform)> {
        use proptest::prelude::*;
        (3usize..=5).prop_flat_map(|n| {
            let perm = Just((1..=n).collect::<Vec<usize>>()).prop_shuffle();
            let shuffle = Just((1..=n).collect::<Vec<usize>>()).prop_shuffle();
            (perm, 1u32..(1 << (n - 1)), shuffle, any::<bool>(), any::<bool>()).prop_map(
                move |(sigma, bits, p, reflect, relabel)| {
                    let nil = IndexSet::from_bits(bits << 1);
                    let spec = GroupSpec::contraction(n, sigma, nil).unwrap();
                    let t = Transform {
                        perm: p,
                        reflect,
                        relabel: reflect && relabel,
                    };
                    (spec, t)
                },
            )
        })
    }

    proptest::proptest! {
        #[test]
        fn key_is_invariant_under_the_group((spec, t) in contraction()) {
            let p = pattern_of(&spec);
            let j = j_of(&spec);
            let (q, relabel) = transform_pattern(&p, &t).unwrap();
            assert_eq!(canonical_key(&p, j), canonical_key(&q, relabel.apply(j)));
        }

        #[test]
        fn relabel_is_an_involution(bits in 0u32..16) {
            let r = ParamRelabel { n: 5, reverse: true };
            let s = IndexSet::from_bits(bits << 1);
            assert_eq!(r.apply(r.apply(s)), s);
        }
    }
}
