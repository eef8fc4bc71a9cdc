use alloc::vec::Vec;

use num_bigint::BigInt;

use super::spec::GroupSpec;
use crate::scalars::{Coefficient, ExpScalar, ParamMonomial, Q};
use crate::tensoralg::{Gen, Matrix, NcPoly};

/// Primed index `k' = N + 1 - k`.
pub fn prime(n: usize, k: usize) -> usize {
    n + 1 - k
}

/// `2ρ`, an integer vector: `ρ = (n-½, …, ½, 0, -½, …)` for odd `N` and
/// `(n-1, …, 1, 0, 0, -1, …)` for even `N`.
pub fn twice_rho(n: usize) -> Vec<i32> {
    let h = (n / 2) as i32;
    if n % 2 == 1 {
        (0..n as i32)
            .map(|k| match k.cmp(&h) {
                core::cmp::Ordering::Less => 2 * h - 1 - 2 * k,
                core::cmp::Ordering::Equal => 0,
                core::cmp::Ordering::Greater => 1 - 2 * (k - h),
            })
            .collect()
    } else {
        (0..n as i32)
            .map(|k| if k < h { 2 * (h - 1 - k) } else { -2 * (k - h) })
            .collect()
    }
}

/// The vector `ρ` itself, as exact rationals.
pub fn rho(n: usize) -> Vec<Q> {
    twice_rho(n)
        .into_iter()
        .map(|x| Q::new(BigInt::from(x), BigInt::from(2)))
        .collect()
}

/// `(k, p) = j_{min} ⋯ j_{max-1}` over `N - 1` parameters.
pub fn range_product(n: usize, k: usize, p: usize) -> ParamMonomial {
    let mut m = ParamMonomial::one(n - 1);
    for l in k.min(p)..k.max(p) {
        m.set(l, 1);
    }
    m
}

/// Squarefree union of two monomials.
pub fn union(a: &ParamMonomial, b: &ParamMonomial) -> ParamMonomial {
    ParamMonomial::from_set(a.len(), a.support().union(b.support()))
}

/// Fundamental parameter `J = ∪_{k ≤ n} (σ_k, σ_{k'})`.
pub fn fundamental_parameter(spec: &GroupSpec) -> ParamMonomial {
    let n = spec.n();
    (1..=n / 2).fold(ParamMonomial::one(n - 1), |acc, k| {
        union(&acc, &range_product(n, spec.sigma_at(k), spec.sigma_at(prime(n, k))))
    })
}

/// Multiplier `(σ_i, σ_k)` in front of the generator at position `(i, k)`.
pub fn multiplier(spec: &GroupSpec, i: usize, k: usize) -> ParamMonomial {
    range_product(spec.n(), spec.sigma_at(i), spec.sigma_at(k))
}

/// Generator sitting at 1-based position `(i, k)` of `U(j; σ)`.
pub fn generator_at(spec: &GroupSpec, i: usize, k: usize) -> Gen {
    Gen::new(spec.sigma_at(i), spec.sigma_at(k))
}

/// Entry `(i, k)` of the generating matrix as a polynomial.
pub fn u_entry(spec: &GroupSpec, i: usize, k: usize) -> NcPoly {
    NcPoly::term(
        crate::tensoralg::Word::single(generator_at(spec, i, k)),
        ExpScalar::params(multiplier(spec, i, k)),
    )
}

/// `U(j; σ)` with entries `(σ_i, σ_k) u_{σ_i σ_k}`.
pub fn generating_matrix(spec: &GroupSpec) -> Matrix<NcPoly> {
    Matrix::from_fn(spec.n(), spec.n(), |r, c| u_entry(spec, r + 1, c + 1))
}

fn antidiag_block(m: usize, len: usize, c: Coefficient) -> Matrix<ExpScalar> {
    Matrix::from_fn(m, m, |r, col| {
        if r + col + 1 == m {
            ExpScalar::constant(len, c.clone())
        } else {
            ExpScalar::zero()
        }
    })
}

/// Assembles `(1/√2)·[[A·I, B·C̃₀], [C·C̃₀, E·I]]` with the middle entry `√2`
/// for odd `N`.
fn d_like(n: usize, a: Coefficient, b: Coefficient, c: Coefficient, e: Coefficient) -> Matrix<ExpScalar> {
    let len = n - 1;
    let h = n / 2;
    let s = Coefficient::inv_sqrt2();
    let mut m = Matrix::zeros(n, n);
    let off = n - h; // first row/column of the lower block
    for k in 0..h {
        m.set(k, k, ExpScalar::constant(len, &a * &s));
        m.set(k, off + h - 1 - k, ExpScalar::constant(len, &b * &s));
        m.set(off + k, h - 1 - k, ExpScalar::constant(len, &c * &s));
        m.set(off + k, off + k, ExpScalar::constant(len, &e * &s));
    }
    if n % 2 == 1 {
        m.set(h, h, ExpScalar::one(len));
    }
    m
}

/// `D⁻¹ = (1/√2)[[I, 0, C̃₀], [0, √2, 0], [iC̃₀, 0, -iI]]`, the middle row and
/// column dropped for even `N`.
pub fn d_inverse(n: usize) -> Matrix<ExpScalar> {
    d_like(
        n,
        Coefficient::one(),
        Coefficient::one(),
        Coefficient::i(),
        -Coefficient::i(),
    )
}

/// `D = (1/√2)[[I, 0, -iC̃₀], [0, √2, 0], [C̃₀, 0, iI]]`.
pub fn d_matrix(n: usize) -> Matrix<ExpScalar> {
    d_like(
        n,
        Coefficient::one(),
        -Coefficient::i(),
        Coefficient::one(),
        Coefficient::i(),
    )
}

/// `C₀`, the antidiagonal unit matrix.
pub fn c0_matrix(n: usize) -> Matrix<ExpScalar> {
    antidiag_block(n, n - 1, Coefficient::one())
}

/// `C_{ik} = q^{ρ_{i'}} δ_{i'k}`.
pub fn c_matrix(n: usize) -> Matrix<ExpScalar> {
    let tr = twice_rho(n);
    Matrix::from_fn(n, n, |r, c| {
        if r + c + 1 == n {
            ExpScalar::t_pow(n - 1, tr[c])
        } else {
            ExpScalar::zero()
        }
    })
}

/// `(C⁻¹)_{ik} = q^{-ρ_i} δ_{i'k}`.
pub fn c_inverse(n: usize) -> Matrix<ExpScalar> {
    let tr = twice_rho(n);
    Matrix::from_fn(n, n, |r, c| {
        if r + c + 1 == n {
            ExpScalar::t_pow(n - 1, -tr[r])
        } else {
            ExpScalar::zero()
        }
    })
}

/// `C̃ = D⁻¹ C (Dᵗ)⁻¹`.
pub fn c_tilde(n: usize) -> Matrix<ExpScalar> {
    let di = d_inverse(n);
    di.mul(&c_matrix(n)).mul(&di.transpose())
}

/// `C̃⁻¹ = Dᵗ C⁻¹ D`.
pub fn c_tilde_inverse(n: usize) -> Matrix<ExpScalar> {
    let d = d_matrix(n);
    d.transpose().mul(&c_inverse(n)).mul(&d)
}

/// The parameter specialization of a spec as a map on scalars: unit and
/// imaginary values are substituted, `t` is linearised when `J` turns
/// nilpotent, and nilpotent squares are dropped. It is a ring homomorphism
/// onto the truncated algebra.
pub fn specialize(spec: &GroupSpec, x: &ExpScalar) -> ExpScalar {
    if spec
        .assignment()
        .values()
        .iter()
        .all(|v| *v == crate::scalars::CkValue::Formal)
    {
        return x.clone();
    }
    x.substitute_params(spec.assignment(), &fundamental_parameter(spec))
}

/// [`specialize`] applied to every coefficient of a polynomial matrix.
pub fn specialize_matrix(spec: &GroupSpec, m: &Matrix<NcPoly>) -> Matrix<NcPoly> {
    m.map(|p| p.map_coeffs(|c| specialize(spec, c)))
}

/// Lifts a scalar matrix into the polynomial algebra.
pub fn as_poly_matrix(m: &Matrix<ExpScalar>) -> Matrix<NcPoly> {
    m.map(|x| NcPoly::constant(x.clone()))
}
