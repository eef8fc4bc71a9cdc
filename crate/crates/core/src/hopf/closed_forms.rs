//! The reference closed forms of both orthogonality families for odd `N`,
//! kept as a cross-check against the matrices of [`super::relations`].

use alloc::string::String;
use alloc::vec::Vec;

use super::relations::{orthogonality_matrix_1, orthogonality_matrix_2};
use crate::group::{generating_matrix, twice_rho, GroupSpec};
use crate::scalars::{Coefficient, ExpScalar};
use crate::tensoralg::{Matrix, NcPoly};

#[derive(Clone, Copy)]
enum F {
    One,
    Ch(usize),
    Sh(usize),
}

/// `phase · f · U[a] U[b]`, positions 1-based.
struct T {
    phase: i64,
    f: F,
    a: (usize, usize),
    b: (usize, usize),
}

const fn t(phase: i64, f: F, a: (usize, usize), b: (usize, usize)) -> T {
    T { phase, f, a, b }
}

/// One reference equation instance: `Σ terms = rhs` sitting at `(row, col)`;
/// `rhs = None` stands for zero.
struct Reference {
    label: &'static str,
    row: usize,
    col: usize,
    terms: Vec<T>,
    rhs: Option<(i64, F)>,
}

/// A reference equation that disagrees with the generated relation.
#[derive(Clone, PartialEq, Debug)]
pub struct ClosedFormMismatch {
    pub label: &'static str,
    pub row: usize,
    pub col: usize,
    /// Generated entry minus reference `lhs - rhs`.
    pub difference: String,
}

/// Result of comparing every reference orthogonality equation.
#[derive(Clone, PartialEq, Debug, Default)]
pub struct ClosedFormReport {
    pub checked: usize,
    pub mismatches: Vec<ClosedFormMismatch>,
}

impl ClosedFormReport {
    pub fn mismatched_labels(&self) -> Vec<&'static str> {
        let mut v: Vec<_> = self.mismatches.iter().map(|m| m.label).collect();
        v.dedup();
        v
    }

    pub fn passes_except(&self, allowed: &[&str]) -> bool {
        self.mismatches.iter().all(|m| allowed.contains(&m.label))
    }
}

// phases as powers of i
const P1: i64 = 0;
const PI: i64 = 1;
const MI: i64 = 3;

/// Body shared by the `(a, b)` equations of the first family:
/// `Σ_s {U[a,s]U[b,s] ch s + U[a,Ls]U[b,Ls] ch Ms + i[...]}` with the
/// bracket given by `bracket`.
fn first_family_sum(n: usize, a: usize, b: usize, bracket: impl Fn(usize) -> [T; 2]) -> Vec<T> {
    let (l, m) = (|s: usize| n + 1 + s, |s: usize| n + 1 - s);
    let mid = n + 1;
    let mut v = alloc::vec![t(P1, F::One, (a, mid), (b, mid))];
    for s in 1..=n {
        v.push(t(P1, F::Ch(s), (a, s), (b, s)));
        v.push(t(P1, F::Ch(m(s)), (a, l(s)), (b, l(s))));
        v.extend(bracket(s));
    }
    v
}

fn reference_first(n: usize) -> Vec<Reference> {
    let nn = 2 * n + 1;
    let l = |s: usize| n + 1 + s;
    let m = |s: usize| n + 1 - s;
    let pr = |s: usize| nn + 1 - s;
    let mid = n + 1;
    let mut out = Vec::new();
    // first a-d: the bracket is i[U[a,Ms]U[b,Ls] sh Ms - U[a,s']U[b,s] sh s]
    let quad = |a: usize, b: usize| {
        first_family_sum(n, a, b, move |s| {
            [
                t(PI, F::Sh(m(s)), (a, m(s)), (b, l(s))),
                t(MI, F::Sh(s), (a, pr(s)), (b, s)),
            ]
        })
    };
    for k in 1..=n {
        for p in 1..=n {
            let d = |f: F| if k == p { Some((P1, f)) } else { None };
            out.push(Reference {
                label: "first a",
                row: k,
                col: p,
                terms: quad(k, p),
                rhs: d(F::Ch(k)),
            });
            out.push(Reference {
                label: "first b",
                row: l(k),
                col: l(p),
                terms: quad(l(k), l(p)),
                rhs: d(F::Ch(m(k))),
            });
            let e = |ph: i64, f: F| if m(k) == p { Some((ph, f)) } else { None };
            out.push(Reference {
                label: "first c",
                row: k,
                col: l(p),
                terms: quad(k, l(p)),
                rhs: e(PI, F::Sh(k)),
            });
            out.push(Reference {
                label: "first d",
                row: l(k),
                col: p,
                terms: quad(l(k), p),
                rhs: e(MI, F::Sh(p)),
            });
        }
    }
    // first e
    let mut terms = alloc::vec![t(P1, F::One, (mid, mid), (mid, mid))];
    for k in 1..=n {
        terms.push(t(P1, F::Ch(k), (mid, k), (mid, k)));
        terms.push(t(P1, F::Ch(m(k)), (mid, l(k)), (mid, l(k))));
        terms.push(t(PI, F::Sh(k), (mid, k), (mid, pr(k))));
        terms.push(t(MI, F::Sh(m(k)), (mid, l(k)), (mid, m(k))));
    }
    out.push(Reference {
        label: "first e",
        row: mid,
        col: mid,
        terms,
        rhs: Some((P1, F::One)),
    });
    for k in 1..=n {
        // first f row k, column n+1
        let mut terms = alloc::vec![t(P1, F::One, (k, mid), (mid, mid))];
        for s in 1..=n {
            terms.push(t(P1, F::Ch(s), (k, s), (mid, s)));
            terms.push(t(P1, F::Ch(m(s)), (k, l(s)), (mid, l(s))));
            terms.push(t(PI, F::Sh(s), (k, s), (mid, pr(s))));
            terms.push(t(MI, F::Sh(m(s)), (k, l(s)), (mid, m(s))));
        }
        out.push(Reference {
            label: "first f",
            row: k,
            col: mid,
            terms,
            rhs: None,
        });
        // first g row n+1, column k
        let mut terms = alloc::vec![t(P1, F::One, (mid, mid), (k, mid))];
        for s in 1..=n {
            terms.push(t(P1, F::Ch(s), (mid, s), (k, s)));
            terms.push(t(P1, F::Ch(m(s)), (mid, l(s)), (k, l(s))));
            terms.push(t(MI, F::Sh(s), (mid, pr(s)), (k, s)));
            terms.push(t(PI, F::Sh(m(s)), (mid, m(s)), (k, l(s))));
        }
        out.push(Reference {
            label: "first g",
            row: mid,
            col: k,
            terms,
            rhs: None,
        });
        // first h row n+1, column n+1+k
        let lk = l(k);
        let mut terms = alloc::vec![t(P1, F::One, (mid, mid), (lk, mid))];
        for s in 1..=n {
            terms.push(t(P1, F::Ch(s), (mid, s), (lk, s)));
            terms.push(t(P1, F::Ch(m(s)), (mid, l(s)), (lk, l(s))));
            terms.push(t(MI, F::Sh(s), (mid, pr(s)), (lk, s)));
            terms.push(t(PI, F::Sh(m(s)), (mid, m(s)), (lk, l(s))));
        }
        out.push(Reference {
            label: "first h",
            row: mid,
            col: lk,
            terms,
            rhs: None,
        });
        // first i row n+1+k, column n+1
        let mut terms = alloc::vec![t(P1, F::One, (lk, mid), (mid, mid))];
        for s in 1..=n {
            terms.push(t(P1, F::Ch(s), (lk, s), (mid, s)));
            terms.push(t(P1, F::Ch(m(s)), (lk, l(s)), (mid, l(s))));
            terms.push(t(PI, F::Sh(s), (lk, s), (mid, pr(s))));
            terms.push(t(MI, F::Sh(m(s)), (lk, l(s)), (mid, m(s))));
        }
        out.push(Reference {
            label: "first i",
            row: lk,
            col: mid,
            terms,
            rhs: None,
        });
    }
    out
}

fn reference_second(n: usize, fix_second_g: bool) -> Vec<Reference> {
    let nn = 2 * n + 1;
    let l = |s: usize| n + 1 + s;
    let m = |s: usize| n + 1 - s;
    let pr = |s: usize| nn + 1 - s;
    let mid = n + 1;
    let mut out = Vec::new();
    // second a-d: Σ_s {U[s,a]U[s,b] ch s + U[Ls,a]U[Ls,b] ch Ms
    //              + i[U[s',a]U[s,b] sh s - U[Ms,a]U[Ls,b] sh Ms]}
    let quad = |a: usize, b: usize| {
        let mut v = alloc::vec![t(P1, F::One, (mid, a), (mid, b))];
        for s in 1..=n {
            v.push(t(P1, F::Ch(s), (s, a), (s, b)));
            v.push(t(P1, F::Ch(m(s)), (l(s), a), (l(s), b)));
            v.push(t(PI, F::Sh(s), (pr(s), a), (s, b)));
            v.push(t(MI, F::Sh(m(s)), (m(s), a), (l(s), b)));
        }
        v
    };
    for k in 1..=n {
        for p in 1..=n {
            let d = |f: F| if k == p { Some((P1, f)) } else { None };
            let e = |ph: i64, f: F| if m(k) == p { Some((ph, f)) } else { None };
            out.push(Reference {
                label: "second a",
                row: k,
                col: p,
                terms: quad(k, p),
                rhs: d(F::Ch(k)),
            });
            out.push(Reference {
                label: "second b",
                row: l(k),
                col: l(p),
                terms: quad(l(k), l(p)),
                rhs: d(F::Ch(m(k))),
            });
            out.push(Reference {
                label: "second c",
                row: k,
                col: l(p),
                terms: quad(k, l(p)),
                rhs: e(MI, F::Sh(k)),
            });
            out.push(Reference {
                label: "second d",
                row: l(k),
                col: p,
                terms: quad(l(k), p),
                rhs: e(PI, F::Sh(p)),
            });
        }
    }
    // second e
    let mut terms = alloc::vec![t(P1, F::One, (mid, mid), (mid, mid))];
    for k in 1..=n {
        terms.push(t(P1, F::Ch(k), (k, mid), (k, mid)));
        terms.push(t(P1, F::Ch(m(k)), (l(k), mid), (l(k), mid)));
        terms.push(t(PI, F::Sh(m(k)), (l(k), mid), (m(k), mid)));
        terms.push(t(MI, F::Sh(k), (k, mid), (pr(k), mid)));
    }
    out.push(Reference {
        label: "second e",
        row: mid,
        col: mid,
        terms,
        rhs: Some((P1, F::One)),
    });
    for k in 1..=n {
        let lk = l(k);
        // second f row k, column n+1
        let mut terms = alloc::vec![t(P1, F::One, (mid, k), (mid, mid))];
        for p in 1..=n {
            terms.push(t(P1, F::Ch(p), (p, k), (p, mid)));
            terms.push(t(P1, F::Ch(m(p)), (l(p), k), (l(p), mid)));
            terms.push(t(MI, F::Sh(p), (p, k), (pr(p), mid)));
            terms.push(t(PI, F::Sh(m(p)), (l(p), k), (m(p), mid)));
        }
        out.push(Reference {
            label: "second f",
            row: k,
            col: mid,
            terms,
            rhs: None,
        });
        // second g row n+1, column k, transcribed as given
        let mut terms = alloc::vec![t(P1, F::One, (mid, mid), (mid, k))];
        for p in 1..=n {
            terms.push(t(P1, F::Ch(p), (p, mid), (p, k)));
            terms.push(t(P1, F::Ch(m(p)), (l(p), mid), (l(p), k)));
            terms.push(t(PI, F::Sh(p), (pr(p), mid), (p, k)));
            let first = if fix_second_g { m(p) } else { l(p) };
            terms.push(t(MI, F::Sh(m(p)), (first, mid), (l(p), k)));
        }
        out.push(Reference {
            label: "second g",
            row: mid,
            col: k,
            terms,
            rhs: None,
        });
        // second h row n+1, column n+1+k
        let mut terms = alloc::vec![t(P1, F::One, (mid, mid), (mid, lk))];
        for p in 1..=n {
            terms.push(t(P1, F::Ch(p), (p, mid), (p, lk)));
            terms.push(t(P1, F::Ch(m(p)), (l(p), mid), (l(p), lk)));
            terms.push(t(PI, F::Sh(p), (pr(p), mid), (p, lk)));
            terms.push(t(MI, F::Sh(m(p)), (m(p), mid), (l(p), lk)));
        }
        out.push(Reference {
            label: "second h",
            row: mid,
            col: lk,
            terms,
            rhs: None,
        });
        // second i row n+1+k, column n+1
        let mut terms = alloc::vec![t(P1, F::One, (mid, lk), (mid, mid))];
        for p in 1..=n {
            terms.push(t(P1, F::Ch(p), (p, lk), (p, mid)));
            terms.push(t(P1, F::Ch(m(p)), (l(p), lk), (l(p), mid)));
            terms.push(t(MI, F::Sh(p), (p, lk), (pr(p), mid)));
            terms.push(t(PI, F::Sh(m(p)), (l(p), lk), (m(p), mid)));
        }
        out.push(Reference {
            label: "second i",
            row: lk,
            col: mid,
            terms,
            rhs: None,
        });
    }
    out
}

fn scalar(len: usize, tr: &[i32], phase: i64, f: F) -> ExpScalar {
    let base = match f {
        F::One => ExpScalar::one(len),
        F::Ch(x) => ExpScalar::cosh_t(len, tr[x - 1]),
        F::Sh(x) => ExpScalar::sinh_t(len, tr[x - 1]),
    };
    base.scale(&Coefficient::i_pow(phase))
}

fn reference_poly(u: &Matrix<NcPoly>, len: usize, tr: &[i32], e: &Reference) -> NcPoly {
    let mut acc = NcPoly::zero();
    for x in &e.terms {
        let prod = u.get(x.a.0 - 1, x.a.1 - 1) * u.get(x.b.0 - 1, x.b.1 - 1);
        acc = &acc + &prod.scale(&scalar(len, tr, x.phase, x.f));
    }
    if let Some((phase, f)) = e.rhs {
        acc = &acc - &NcPoly::constant(scalar(len, tr, phase, f));
    }
    acc
}

fn compare(spec: &GroupSpec, generated: &Matrix<NcPoly>, reference: Vec<Reference>) -> ClosedFormReport {
    let len = spec.n() - 1;
    let tr = twice_rho(spec.n());
    let u = generating_matrix(spec);
    let mut report = ClosedFormReport::default();
    for e in reference {
        report.checked += 1;
        let diff = generated.get(e.row - 1, e.col - 1) - &reference_poly(&u, len, &tr, &e);
        if !diff.is_zero() {
            report.mismatches.push(ClosedFormMismatch {
                label: e.label,
                row: e.row,
                col: e.col,
                difference: diff.render(Default::default()),
            });
        }
    }
    report
}

/// Compares the reference closed forms of `U C̃ Uᵗ = C̃` (labels `first a`–`first i`)
/// and `Uᵗ C̃⁻¹ U = C̃⁻¹` (labels `second a`–`second i`) with the generated entries.
/// Only odd `N` has reference forms; even `N` returns an empty report.
pub fn check_orthogonality_closed_forms(spec: &GroupSpec) -> ClosedFormReport {
    let n = spec.n();
    if n.is_multiple_of(2) {
        return ClosedFormReport::default();
    }
    let h = n / 2;
    let mut r = compare(spec, &orthogonality_matrix_1(spec), reference_first(h));
    let r2 = compare(spec, &orthogonality_matrix_2(spec), reference_second(h, false));
    r.checked += r2.checked;
    r.mismatches.extend(r2.mismatches);
    r
}
