use super::structure::{prime, twice_rho};
use crate::scalars::{Coefficient, ExpScalar};
use crate::tensoralg::Matrix;

/// `(phase, e, e)`: a power of `i` and the two matrix units of `e ⊗ e`.
type PhasedPair = (i64, (usize, usize), (usize, usize));

/// 1-based `(i, j, k)` index into `V ⊗ V ⊗ V`.
pub type Triple = (usize, usize, usize);

/// Accumulates `coeff · e_{ab} ⊗ e_{cd}` into an `N² × N²` matrix.
struct UnitSum {
    n: usize,
    m: Matrix<ExpScalar>,
}

impl UnitSum {
    fn add(&mut self, coeff: &ExpScalar, (a, b): (usize, usize), (c, d): (usize, usize)) {
        let n = self.n;
        self.m.accumulate((a - 1) * n + (c - 1), (b - 1) * n + (d - 1), coeff);
    }

    /// Adds `coeff · Σ phase · e ⊗ e` for a list of `(phase, e, e)` triples,
    /// the phase being a power of `i`.
    fn add_all(&mut self, coeff: &ExpScalar, list: &[PhasedPair]) {
        for &(phase, e1, e2) in list {
            self.add(&coeff.scale(&Coefficient::i_pow(phase)), e1, e2);
        }
    }
}

// Phases as powers of i: 1 → 0, i → 1, -1 → 2, -i → 3.
const P1: i64 = 0;
const PI: i64 = 1;
const M1: i64 = 2;
const MI: i64 = 3;

/// The R-matrix `R̃` in the Cartesian basis, an `N² × N²` matrix over
/// Laurent polynomials in `t` with `q = t²`.
///
/// Built term by term from the explicit sum of matrix units. For even `N`
/// there is no middle index and the families involving it are absent.
pub fn r_tilde(n: usize) -> Matrix<ExpScalar> {
    assert!(n >= 3, "R-matrix needs N ≥ 3");
    let len = n - 1;
    let tr = twice_rho(n);
    let h = n / 2;
    let odd = n % 2 == 1;
    let mid = h + 1;
    let pr = |k| prime(n, k);
    let one = Coefficient::one();
    let lam = ExpScalar::lambda(len);
    let half = Coefficient::from_ratio(1, 2);
    let quarter = Coefficient::from_ratio(1, 4);
    let lam2 = lam.scale(&half);
    let lam4 = lam.scale(&quarter);
    // ½ (q - 1)(1 - q⁻¹) = ½ (t² - 2 + t⁻²)
    let diag = (&(&ExpScalar::t_pow(len, 2) + &ExpScalar::t_pow(len, -2)) - &ExpScalar::from_int(len, 2)).scale(&half);

    let mut s = UnitSum {
        n,
        m: Matrix::identity(n * n, ExpScalar::constant(len, one)),
    };

    for k in (1..=n).filter(|&k| k != pr(k)) {
        let kp = pr(k);
        s.add_all(&diag, &[(P1, (k, k), (k, k)), (P1, (k, k), (kp, kp))]);
        s.add_all(&lam2, &[(P1, (kp, k), (k, kp)), (M1, (kp, k), (kp, k))]);
    }

    if odd {
        let m = mid;
        for k in 1..=h {
            let kp = pr(k);
            s.add_all(
                &lam2,
                &[
                    (P1, (kp, m), (m, kp)),
                    (MI, (kp, m), (m, k)),
                    (PI, (k, m), (m, kp)),
                    (P1, (k, m), (m, k)),
                    (P1, (m, k), (k, m)),
                    (PI, (m, k), (kp, m)),
                    (MI, (m, kp), (k, m)),
                    (P1, (m, kp), (kp, m)),
                ],
            );
            let c = lam2.shift(&shift_t(len, -tr[k - 1])).scale(&Coefficient::from_int(-1));
            s.add_all(
                &c,
                &[
                    (MI, (kp, m), (k, m)),
                    (P1, (kp, m), (kp, m)),
                    (P1, (k, m), (k, m)),
                    (PI, (k, m), (kp, m)),
                    (PI, (m, k), (m, kp)),
                    (P1, (m, k), (m, k)),
                    (P1, (m, kp), (m, kp)),
                    (MI, (m, kp), (m, k)),
                ],
            );
        }
    }

    for k in 1..=n {
        for p in 1..k {
            if odd && (k == mid || p == mid) {
                continue;
            }
            let (kp, pp) = (pr(k), pr(p));
            s.add_all(
                &lam4,
                &[
                    (P1, (k, p), (p, k)),
                    (P1, (k, p), (pp, kp)),
                    (PI, (k, p), (pp, k)),
                    (MI, (k, p), (p, kp)),
                    (P1, (kp, pp), (p, k)),
                    (P1, (kp, pp), (pp, kp)),
                    (PI, (kp, pp), (pp, k)),
                    (MI, (kp, pp), (p, kp)),
                    (PI, (kp, p), (p, k)),
                    (PI, (kp, p), (pp, kp)),
                    (M1, (kp, p), (pp, k)),
                    (P1, (kp, p), (p, kp)),
                    (MI, (k, pp), (p, k)),
                    (MI, (k, pp), (pp, kp)),
                    (P1, (k, pp), (pp, k)),
                    (M1, (k, pp), (p, kp)),
                ],
            );
            let c = lam4
                .shift(&shift_t(len, tr[k - 1] - tr[p - 1]))
                .scale(&Coefficient::from_int(-1));
            s.add_all(
                &c,
                &[
                    (P1, (k, p), (kp, pp)),
                    (P1, (k, p), (k, p)),
                    (PI, (k, p), (k, pp)),
                    (MI, (k, p), (kp, p)),
                    (P1, (kp, pp), (kp, pp)),
                    (P1, (kp, pp), (k, p)),
                    (PI, (kp, pp), (k, pp)),
                    (MI, (kp, pp), (kp, p)),
                    (PI, (kp, p), (kp, pp)),
                    (PI, (kp, p), (k, p)),
                    (M1, (kp, p), (k, pp)),
                    (P1, (kp, p), (kp, p)),
                    (MI, (k, pp), (kp, pp)),
                    (MI, (k, pp), (k, p)),
                    (P1, (k, pp), (k, pp)),
                    (M1, (k, pp), (kp, p)),
                ],
            );
        }
    }
    s.m
}

fn shift_t(len: usize, m: i32) -> crate::scalars::ScalarMonomial {
    let mut mono = crate::scalars::ScalarMonomial::one(len);
    mono.t = m;
    mono
}

/// Flip `P(a ⊗ b) = b ⊗ a` on `C^N ⊗ C^N`.
pub fn flip(n: usize, len: usize) -> Matrix<ExpScalar> {
    Matrix::from_fn(n * n, n * n, |r, c| {
        let (a, b) = (r / n, r % n);
        if c == b * n + a {
            ExpScalar::one(len)
        } else {
            ExpScalar::zero()
        }
    })
}

/// Evaluates `R̃` at a numeric `t` and returns the first index pair
/// `((a,b,c), (d,e,f))` (1-based) where `R₁₂R₁₃R₂₃ ≠ R₂₃R₁₃R₁₂`, or `None`.
pub fn yang_baxter_defect(r: &Matrix<ExpScalar>, n: usize, t: &Coefficient) -> Option<(Triple, Triple)> {
    let len = n - 1;
    let at = crate::scalars::EvalPoint {
        t: t.clone(),
        v: Coefficient::one(),
        j: alloc::vec![Coefficient::one(); len],
    };
    let num = r.map(|x| x.evaluate(&at).expect("t is nonzero"));
    let id = Matrix::identity(n, Coefficient::one());
    let p = flip(n, len).map(|x| x.as_constant().unwrap());
    let r12 = num.kron(&id);
    let r23 = id.kron(&num);
    let p23 = id.kron(&p);
    let r13 = p23.mul(&r12).mul(&p23);
    let lhs = r12.mul(&r13).mul(&r23);
    let rhs = r23.mul(&r13).mul(&r12);
    let (row, col) = lhs.sub(&rhs).first_nonzero()?;
    let split = |x: usize| (x / (n * n) + 1, (x / n) % n + 1, x % n + 1);
    Some((split(row), split(col)))
}
