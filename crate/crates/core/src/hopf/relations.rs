use alloc::vec::Vec;
use core::fmt;

use crate::group::{as_poly_matrix, c_tilde, c_tilde_inverse, generating_matrix, r_tilde, GroupSpec};
use crate::tensoralg::{Matrix, NcPoly};

/// Which family a relation comes from.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum RelationTag {
    /// Entry of `R̃U₁U₂ - U₂U₁R̃`.
    Ruu,
    /// Entry of `U C̃ Uᵗ - C̃`.
    Orth1,
    /// Entry of `Uᵗ C̃⁻¹ U - C̃⁻¹`.
    Orth2,
}

impl RelationTag {
    pub fn name(self) -> &'static str {
        match self {
            RelationTag::Ruu => "RUU",
            RelationTag::Orth1 => "ORTH1",
            RelationTag::Orth2 => "ORTH2",
        }
    }
}

/// One defining relation `poly = 0`, tagged with its family and its 1-based
/// position in the matrix it was read from.
#[derive(Clone, PartialEq, Debug)]
pub struct Relation {
    pub tag: RelationTag,
    pub row: usize,
    pub col: usize,
    pub poly: NcPoly,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({},{}): {}", self.tag.name(), self.row, self.col, self.poly)
    }
}

fn read_entries(tag: RelationTag, m: &Matrix<NcPoly>) -> Vec<Relation> {
    m.entries()
        .map(|(r, c, p)| Relation {
            tag,
            row: r + 1,
            col: c + 1,
            poly: p.clone(),
        })
        .collect()
}

/// The matrix `R̃U₁U₂ - U₂U₁R̃` with `U₁ = U ⊗ I`, `U₂ = I ⊗ U`.
pub fn ruu_matrix(spec: &GroupSpec) -> Matrix<NcPoly> {
    let n = spec.n();
    let u = generating_matrix(spec);
    let r = as_poly_matrix(&r_tilde(n));
    // (U₁U₂)_{(ab),(cd)} = U_ac U_bd and (U₂U₁)_{(ab),(cd)} = U_bd U_ac
    let u12 = Matrix::from_fn(n * n, n * n, |row, col| {
        let (a, b) = (row / n, row % n);
        let (c, d) = (col / n, col % n);
        u.get(a, c) * u.get(b, d)
    });
    let u21 = Matrix::from_fn(n * n, n * n, |row, col| {
        let (a, b) = (row / n, row % n);
        let (c, d) = (col / n, col % n);
        u.get(b, d) * u.get(a, c)
    });
    r.mul(&u12).sub(&u21.mul(&r))
}

/// All `N⁴` commutation relations, zero entries included.
pub fn ruu_relations(spec: &GroupSpec) -> Vec<Relation> {
    read_entries(RelationTag::Ruu, &ruu_matrix(spec))
}

/// `U C̃ Uᵗ - C̃`.
pub fn orthogonality_matrix_1(spec: &GroupSpec) -> Matrix<NcPoly> {
    let u = generating_matrix(spec);
    let c = as_poly_matrix(&c_tilde(spec.n()));
    u.mul(&c).mul(&u.transpose()).sub(&c)
}

/// `Uᵗ C̃⁻¹ U - C̃⁻¹`.
pub fn orthogonality_matrix_2(spec: &GroupSpec) -> Matrix<NcPoly> {
    let u = generating_matrix(spec);
    let ci = as_poly_matrix(&c_tilde_inverse(spec.n()));
    u.transpose().mul(&ci).mul(&u).sub(&ci)
}

/// Both `(v, j)`-orthogonality families, `N²` relations each.
pub fn orthogonality_relations(spec: &GroupSpec) -> (Vec<Relation>, Vec<Relation>) {
    (
        read_entries(RelationTag::Orth1, &orthogonality_matrix_1(spec)),
        read_entries(RelationTag::Orth2, &orthogonality_matrix_2(spec)),
    )
}

/// Every defining relation in the order RUU, first and second orthogonality.
pub fn all_relations(spec: &GroupSpec) -> Vec<Relation> {
    let mut out = ruu_relations(spec);
    let (o1, o2) = orthogonality_relations(spec);
    out.extend(o1);
    out.extend(o2);
    out
}
