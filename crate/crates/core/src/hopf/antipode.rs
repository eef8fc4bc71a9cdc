use alloc::vec::Vec;

use crate::group::{
    as_poly_matrix, c_tilde, c_tilde_inverse, generating_matrix, generator_at, multiplier, prime, twice_rho, GroupSpec,
};
use crate::scalars::{Coefficient, ExpScalar, ParamMonomial};
use crate::tensoralg::{Gen, Matrix, NcPoly, Word};

/// `S(U) = C̃ Uᵗ C̃⁻¹`. Entry `(i, k)` equals `(σ_i, σ_k) S(u_{σ_i σ_k})`.
pub fn antipode_matrix(spec: &GroupSpec) -> Matrix<NcPoly> {
    let n = spec.n();
    let u = generating_matrix(spec);
    as_poly_matrix(&c_tilde(n))
        .mul(&u.transpose())
        .mul(&as_poly_matrix(&c_tilde_inverse(n)))
}

/// A generator-level antipode `S(u) = num / den`: the matrix entry divided
/// by the multiplier of `u`, with common parameter factors cancelled.
#[derive(Clone, PartialEq, Debug)]
pub struct AntipodeFraction {
    pub num: NcPoly,
    pub den: ParamMonomial,
}

impl AntipodeFraction {
    /// Builds `num / den` and cancels the largest common monomial.
    pub fn reduced(num: NcPoly, den: ParamMonomial) -> Self {
        let mut g = den;
        for (_, c) in num.terms() {
            for (m, _) in c.terms() {
                g = g.gcd(&m.beta);
            }
        }
        let num = num
            .try_map_coeffs(|c| c.divide_param(&g))
            .expect("gcd divides every term");
        AntipodeFraction {
            num,
            den: den.checked_div(&g).unwrap(),
        }
    }

    /// Equality of fractions by cross multiplication.
    pub fn same_as(&self, o: &Self) -> bool {
        let a = self.num.scale(&ExpScalar::params(o.den));
        let b = o.num.scale(&ExpScalar::params(self.den));
        a == b
    }
}

/// `S(g)` for a single generator, read off the antipode matrix.
pub fn antipode_of(spec: &GroupSpec, s_matrix: &Matrix<NcPoly>, g: Gen) -> AntipodeFraction {
    let i = spec.position_of(g.a as usize);
    let k = spec.position_of(g.b as usize);
    AntipodeFraction::reduced(s_matrix.get(i - 1, k - 1).clone(), multiplier(spec, i, k))
}

/// Index bookkeeping for the closed-form antipode: upper indices `k ≤ n`,
/// lower indices written `n+1+k` for odd `N` (`n+k` for even `N`, the
/// replacement of `n+1` by `n`), their mirror `n+1-k`, and the middle `n+1`.
struct Idx {
    n: usize,
    h: usize,
    tr: Vec<i32>,
}

impl Idx {
    fn low(&self, k: usize) -> usize {
        if self.n % 2 == 1 {
            self.h + 1 + k
        } else {
            self.h + k
        }
    }
    fn mirror(&self, k: usize) -> usize {
        self.h + 1 - k
    }
    fn pr(&self, k: usize) -> usize {
        prime(self.n, k)
    }
    fn ch(&self, k: usize) -> ExpScalar {
        ExpScalar::cosh_t(self.n - 1, self.tr[k - 1])
    }
    fn sh(&self, k: usize) -> ExpScalar {
        ExpScalar::sinh_t(self.n - 1, self.tr[k - 1])
    }
}

/// One summand `coef · (σ_a, σ_b)/(σ_c, σ_d) · u_{σ_x σ_y}` of a closed-form
/// antipode; `ratio = None` means no ratio factor.
struct Summand {
    coef: ExpScalar,
    at: (usize, usize),
    ratio: Option<((usize, usize), (usize, usize))>,
}

fn sm(coef: ExpScalar, at: (usize, usize), ratio: Option<((usize, usize), (usize, usize))>) -> Summand {
    Summand { coef, at, ratio }
}

/// The closed-form antipode, transcribed family by family for upper, middle
/// and lower indices, returned as the matrix `S(U)` (each generator-level
/// formula multiplied back by its multiplier) so it can be compared entry by
/// entry with [`antipode_matrix`].
pub fn antipode_closed_form(spec: &GroupSpec) -> Matrix<NcPoly> {
    let n = spec.n();
    let len = n - 1;
    let x = Idx {
        n,
        h: n / 2,
        tr: twice_rho(n),
    };
    let h = x.h;
    let odd = n % 2 == 1;
    let m = h + 1;
    let i = Coefficient::i();
    let mi = -Coefficient::i();
    let neg = Coefficient::from_int(-1);
    let mut out = Matrix::zeros(n, n);
    let mut put = |pos: (usize, usize), list: Vec<Summand>| {
        let mult = multiplier(spec, pos.0, pos.1);
        let mut p = NcPoly::zero();
        for s in list {
            let mut factor = mult;
            if let Some(((a, b), (c, d))) = s.ratio {
                factor = factor
                    .mul(&multiplier(spec, a, b))
                    .checked_div(&multiplier(spec, c, d))
                    .expect("closed-form ratio must clear against the multiplier");
            }
            let coef = &s.coef * &ExpScalar::params(factor);
            p.add_term(Word::single(generator_at(spec, s.at.0, s.at.1)), coef);
        }
        out.set(pos.0 - 1, pos.1 - 1, p);
    };

    if odd {
        for k in 1..=h {
            let kp = x.pr(k);
            let (lk, mk) = (x.low(k), x.mirror(k));
            put(
                (k, m),
                alloc::vec![
                    sm(x.ch(k), (m, k), None),
                    sm(x.sh(k).scale(&i), (m, kp), Some(((kp, m), (k, m)))),
                ],
            );
            put(
                (m, k),
                alloc::vec![
                    sm(x.ch(k), (k, m), None),
                    sm(x.sh(k).scale(&i), (kp, m), Some(((kp, m), (k, m)))),
                ],
            );
            put(
                (lk, m),
                alloc::vec![
                    sm(x.ch(mk), (m, lk), None),
                    sm(x.sh(mk).scale(&mi), (m, mk), Some(((mk, m), (lk, m)))),
                ],
            );
            put(
                (m, lk),
                alloc::vec![
                    sm(x.ch(mk), (lk, m), None),
                    sm(x.sh(mk).scale(&mi), (mk, m), Some(((mk, m), (lk, m)))),
                ],
            );
        }
        put((m, m), alloc::vec![sm(ExpScalar::one(len), (m, m), None)]);
    }

    for k in 1..=h {
        for p in 1..=h {
            let (kp, pp) = (x.pr(k), x.pr(p));
            let (lk, mk, lp, mp) = (x.low(k), x.mirror(k), x.low(p), x.mirror(p));
            put(
                (k, p),
                alloc::vec![
                    sm(&x.ch(k) * &x.ch(p), (p, k), None),
                    sm((&x.sh(k) * &x.sh(p)).scale(&neg), (pp, kp), Some(((kp, pp), (k, p)))),
                    sm((&x.sh(k) * &x.ch(p)).scale(&i), (p, kp), Some(((kp, p), (k, p)))),
                    sm((&x.ch(k) * &x.sh(p)).scale(&i), (pp, k), Some(((k, pp), (k, p)))),
                ],
            );
            put(
                (k, lp),
                alloc::vec![
                    sm(&x.ch(k) * &x.ch(mp), (lp, k), None),
                    sm(&x.sh(k) * &x.sh(mp), (mp, kp), Some(((kp, mp), (k, lp)))),
                    sm((&x.sh(k) * &x.ch(mp)).scale(&i), (lp, kp), Some(((kp, lp), (k, lp)))),
                    sm((&x.ch(k) * &x.sh(mp)).scale(&mi), (mp, k), Some(((k, mp), (k, lp)))),
                ],
            );
            put(
                (lk, p),
                alloc::vec![
                    sm(&x.ch(mk) * &x.ch(p), (p, lk), None),
                    sm(&x.sh(mk) * &x.sh(p), (pp, mk), Some(((mk, pp), (lk, p)))),
                    sm((&x.ch(mk) * &x.sh(p)).scale(&i), (pp, lk), Some(((lk, pp), (lk, p)))),
                    sm((&x.sh(mk) * &x.ch(p)).scale(&mi), (p, mk), Some(((mk, p), (lk, p)))),
                ],
            );
            put(
                (lk, lp),
                alloc::vec![
                    sm(&x.ch(mk) * &x.ch(mp), (lp, lk), None),
                    sm(
                        (&x.sh(mk) * &x.sh(mp)).scale(&neg),
                        (mp, mk),
                        Some(((mk, mp), (lk, lp)))
                    ),
                    sm((&x.ch(mk) * &x.sh(mp)).scale(&mi), (mp, lk), Some(((lk, mp), (lk, lp)))),
                    sm((&x.sh(mk) * &x.ch(mp)).scale(&mi), (lp, mk), Some(((mk, lp), (lk, lp)))),
                ],
            );
        }
    }
    out
}
