use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use super::pattern::{canonical_key_with, j_of, pattern_of, transforms, CanonicalKey, KeyOptions, Pattern};
use super::render::iota;
use crate::group::{all_permutations, c_tilde, nonempty_subsets, r_tilde, GroupSpec};
use crate::scalars::{CkValue, ExpScalar, IndexSet, ScalarMonomial};
use crate::tensoralg::{permutation_matrix, Matrix};

/// Whether the matrix conditions of the isomorphism theorem were checked for
/// a member against its class representative.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Condition5 {
    /// Some row/column permutation realizing the equivalence preserves `R̃`
    /// and `C̃` (with `w = ±v`).
    Verified,
    /// No realizing permutation preserves them.
    Failed,
    /// Not attempted: `N ≠ 3`, or only a reflection realizes the equivalence.
    Unchecked,
}

impl Condition5 {
    pub fn name(self) -> &'static str {
        match self {
            Condition5::Verified => "verified",
            Condition5::Failed => "failed",
            Condition5::Unchecked => "unchecked",
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Member {
    pub sigma: Vec<usize>,
    pub nil: IndexSet,
    pub j: IndexSet,
    pub condition5: Condition5,
}

/// Contractions with equivalent nilpotent distributions and equal `J`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ContractionClass {
    pub key: CanonicalKey,
    /// Pattern and `J` of the representative, the labeled member if any.
    pub pattern: Pattern,
    pub j: IndexSet,
    pub representative: usize,
    pub members: Vec<Member>,
    pub label: String,
    pub named: bool,
}

impl ContractionClass {
    pub fn nil_size(&self) -> usize {
        self.members[0].nil.len()
    }
}

/// Named contractions, as `(N, name, σ, S)`.
pub const LABELS: &[(usize, &str, &[usize], &[usize])] = &[
    (3, "E_v^0(2)", &[1, 2, 3], &[1]),
    (3, "E_z(2)", &[2, 1, 3], &[1]),
    (3, "G_v^0(2)", &[1, 2, 3], &[1, 2]),
    (3, "G_v(2)", &[2, 1, 3], &[1, 2]),
    (4, "E_v(3)", &[1, 2, 3, 4], &[1]),
    (4, "N_v(3)", &[1, 2, 3, 4], &[2]),
    (4, "N_z(3)", &[1, 3, 4, 2], &[2]),
    (4, "G_v(3)", &[1, 2, 3, 4], &[1, 2]),
    (4, "G_w(3)", &[1, 3, 4, 2], &[1, 2]),
    (4, "SO_v(4;ι1,ι3;σ0)", &[1, 2, 3, 4], &[1, 3]),
    (4, "F_v(4)", &[1, 2, 3, 4], &[1, 2, 3]),
    (4, "F_w(4)", &[1, 3, 4, 2], &[1, 2, 3]),
    (5, "E_v(4)", &[1, 2, 3, 4, 5], &[1]),
    (5, "E_z(4)", &[2, 4, 1, 5, 3], &[1]),
    (5, "N_v(4)", &[1, 2, 3, 4, 5], &[2]),
    (5, "N_z(4)", &[1, 3, 5, 4, 2], &[2]),
    (5, "G_v(4)", &[1, 2, 3, 4, 5], &[1, 2]),
    (5, "G_z(4)", &[1, 3, 5, 4, 2], &[1, 2]),
    (5, "F_v(5)", &[1, 2, 3, 4, 5], &[1, 2, 3, 4]),
    (5, "F_v1(5)", &[1, 2, 5, 3, 4], &[1, 2, 3, 4]),
    (5, "F_v2(5)", &[1, 4, 2, 5, 3], &[1, 2, 3, 4]),
    (5, "F_v3(5)", &[1, 3, 5, 4, 2], &[1, 2, 3, 4]),
    (5, "F_v4(5)", &[1, 4, 3, 5, 2], &[1, 2, 3, 4]),
];

/// Name of the class a contraction belongs to, when it is one of the named
/// ones. Only contractions whose other parameters are `1` qualify.
pub fn label_of(spec: &GroupSpec) -> Option<&'static str> {
    let nil = spec.nilpotent_set();
    let plain = spec
        .assignment()
        .values()
        .iter()
        .all(|v| matches!(v, CkValue::Nil | CkValue::Unit));
    if nil.is_empty() || !plain {
        return None;
    }
    let n = spec.n();
    let opts = KeyOptions::default();
    let key = canonical_key_with(&pattern_of(spec), j_of(spec), opts);
    LABELS.iter().filter(|(m, ..)| *m == n).find_map(|(_, name, sigma, s)| {
        let other = GroupSpec::contraction(n, sigma.to_vec(), IndexSet::from_indices(s.iter().copied())).ok()?;
        (canonical_key_with(&pattern_of(&other), j_of(&other), opts) == key).then_some(*name)
    })
}

/// Options for [`enumerate_catalog_with`].
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct CatalogOptions {
    pub key: KeyOptions,
    /// Only nilpotent sets inside this one, when given.
    pub within: Option<IndexSet>,
}

/// Every contraction of `SO_v(N)` over all `σ` and nonempty nilpotent sets,
/// bucketed by canonical key and sorted by `(|S|, key)`.
pub fn enumerate_catalog(n: usize) -> Vec<ContractionClass> {
    enumerate_catalog_with(n, CatalogOptions::default())
}

/// A contraction with its pattern and `J`, waiting to be grouped.
type Bucketed = (GroupSpec, Pattern, IndexSet);

pub fn enumerate_catalog_with(n: usize, opts: CatalogOptions) -> Vec<ContractionClass> {
    let mut buckets: BTreeMap<(usize, CanonicalKey), Vec<Bucketed>> = BTreeMap::new();
    for nil in nonempty_subsets(n - 1) {
        if opts.within.is_some_and(|w| nil.intersection(w) != nil) {
            continue;
        }
        for sigma in all_permutations(n) {
            let spec = GroupSpec::contraction(n, sigma, nil).expect("valid permutation");
            let p = pattern_of(&spec);
            let j = j_of(&spec);
            let key = canonical_key_with(&p, j, opts.key);
            buckets.entry((nil.len(), key)).or_default().push((spec, p, j));
        }
    }

    let labels: Vec<(&str, CanonicalKey)> = LABELS
        .iter()
        .filter(|(m, ..)| *m == n)
        .map(|(_, name, sigma, s)| {
            let spec = GroupSpec::contraction(n, sigma.to_vec(), IndexSet::from_indices(s.iter().copied()))
                .expect("label table");
            (*name, canonical_key_with(&pattern_of(&spec), j_of(&spec), opts.key))
        })
        .collect();

    let mut out = Vec::new();
    for ((_, key), mut specs) in buckets {
        specs.sort_by(|a, b| (a.0.nilpotent_set(), a.0.sigma()).cmp(&(b.0.nilpotent_set(), b.0.sigma())));
        let named = labels.iter().find(|(_, k)| *k == key).map(|(name, _)| *name);
        let representative = named
            .and_then(|name| {
                let (_, _, sigma, s) = LABELS.iter().find(|(m, l, ..)| *m == n && *l == name)?;
                let s = IndexSet::from_indices(s.iter().copied());
                specs
                    .iter()
                    .position(|x| x.0.sigma() == *sigma && x.0.nilpotent_set() == s)
            })
            .unwrap_or(0);
        let (rep_spec, rep_pattern, rep_j) = specs[representative].clone();
        let members = specs
            .iter()
            .map(|(spec, p, j)| Member {
                sigma: spec.sigma().to_vec(),
                nil: spec.nilpotent_set(),
                j: *j,
                condition5: condition5(&rep_pattern, rep_j, p, *j),
            })
            .collect();
        let label = match named {
            Some(name) => name.into(),
            None => systematic_name(&rep_spec, rep_j),
        };
        out.push(ContractionClass {
            key,
            pattern: rep_pattern,
            j: rep_j,
            representative,
            members,
            label,
            named: named.is_some(),
        });
    }
    out
}

fn systematic_name(spec: &GroupSpec, j: IndexSet) -> String {
    let nil: Vec<String> = spec.nilpotent_set().iter().map(|k| alloc::format!("ι{k}")).collect();
    let sigma: Vec<String> = spec.sigma().iter().map(|x| alloc::format!("{x}")).collect();
    alloc::format!(
        "SO({};{};({}))[J={}]",
        spec.n(),
        nil.join(","),
        sigma.join(","),
        iota(j)
    )
}

/// `t ↦ t⁻¹`, i.e. `v ↦ -v`.
fn invert_t(x: &ExpScalar) -> ExpScalar {
    let mut r = ExpScalar::zero();
    for (m, c) in x.terms() {
        r.add_term(ScalarMonomial { t: -m.t, ..*m }, c.clone());
    }
    r
}

/// `V X Vᵗ` for a permutation matrix `V`; its inverse is its transpose.
fn conjugate(v: &Matrix<ExpScalar>, x: &Matrix<ExpScalar>) -> Matrix<ExpScalar> {
    v.mul(x).mul(&v.transpose())
}

/// Checks `(V⊗V) R̃_w (V⊗V)⁻¹ = R̃_v` and `V C̃_w Vᵗ = C̃_v` for `w = ±v` and
/// every permutation `V` taking the member's pattern to the representative's
/// without reflection. Only done for `N = 3`.
fn condition5(rep: &Pattern, rep_j: IndexSet, p: &Pattern, j: IndexSet) -> Condition5 {
    let n = rep.n();
    if n != 3 {
        return Condition5::Unchecked;
    }
    let realizing: Vec<Vec<usize>> = transforms(n, KeyOptions::default())
        .into_iter()
        .filter(|t| !t.reflect)
        .filter(|t| {
            let (q, _) = super::pattern::transform_pattern(p, t).expect("sizes agree");
            q == *rep && j == rep_j
        })
        .map(|t| t.perm)
        .collect();
    if realizing.is_empty() {
        return Condition5::Unchecked;
    }
    let r = r_tilde(n);
    let c = c_tilde(n);
    let len = n - 1;
    let one = ExpScalar::one(len);
    let holds = |perm: &[usize], flip: bool| {
        let v = permutation_matrix(perm, one.clone());
        let vv = v.kron(&v);
        let (rw, cw) = if flip {
            (r.map(invert_t), c.map(invert_t))
        } else {
            (r.clone(), c.clone())
        };
        conjugate(&vv, &rw) == r && conjugate(&v, &cw) == c
    };
    if realizing.iter().any(|perm| holds(perm, false) || holds(perm, true)) {
        Condition5::Verified
    } else {
        Condition5::Failed
    }
}

/// Number of classes when `J` is ignored.
pub fn classical_shadow(n: usize) -> Vec<ContractionClass> {
    enumerate_catalog_with(
        n,
        CatalogOptions {
            key: KeyOptions {
                ignore_j: true,
                bare_relabel: false,
            },
            within: None,
        },
    )
}

/// Plain-text table: one block per class with label, `J`, the pattern in
/// legend symbols and the members.
pub fn render_catalog(classes: &[ContractionClass]) -> String {
    let mut out = String::new();
    for (i, c) in classes.iter().enumerate() {
        out.push_str(&alloc::format!(
            "{:>2}. {}  J = {}  |S| = {}\n",
            i + 1,
            c.label,
            iota(c.j),
            c.nil_size()
        ));
        for row in super::render::pattern_rows(&c.pattern) {
            out.push_str("      ");
            out.push_str(&row);
            out.push('\n');
        }
        let members: Vec<String> = c
            .members
            .iter()
            .map(|m| {
                let s: Vec<String> = m.sigma.iter().map(|x| alloc::format!("{x}")).collect();
                let nil: Vec<String> = m.nil.iter().map(|k| alloc::format!("{k}")).collect();
                alloc::format!("({})/{{{}}}", s.join(""), nil.join(","))
            })
            .collect();
        out.push_str(&alloc::format!("      members: {}\n", members.join(" ")));
    }
    out.push_str("legend: · none  ∘ ι1  • ι2  × ι1ι2  ⊗ ι1ι2ι3  ⋄ ι2ι3  ★ ι1ι3  △ ι3\n");
    out
}
