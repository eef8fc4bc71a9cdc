use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;

use super::assignment::{CkAssignment, CkValue};
use super::coeff::{Coefficient, Q};
use super::monomial::{IndexSet, ParamMonomial, ScalarMonomial};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ScalarError {
    /// Operands built over different numbers of parameters.
    ContextMismatch { left: usize, right: usize },
    /// Some term is not divisible by the requested monomial.
    NonDivisible,
}

impl fmt::Display for ScalarError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScalarError::ContextMismatch { left, right } => {
                write!(f, "parameter context mismatch: {left} vs {right} parameters")
            }
            ScalarError::NonDivisible => f.write_str("scalar is not divisible by the monomial"),
        }
    }
}

impl core::error::Error for ScalarError {}

/// Numeric values for `t`, `v` and every parameter `j_k`, used for exact
/// evaluation of scalars at a point.
#[derive(Clone, Debug, PartialEq)]
pub struct EvalPoint {
    pub t: Coefficient,
    pub v: Coefficient,
    pub j: Vec<Coefficient>,
}

/// Finite sum of `c · t^m v^p j^β` with coefficients in Q(i, √2).
///
/// Here `t = e^{Jv/2}` and `q = t²`, so every hyperbolic function of `Jv`
/// appearing in the theory is a Laurent polynomial in `t`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct ExpScalar {
    terms: BTreeMap<ScalarMonomial, Coefficient>,
}

impl ExpScalar {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(mono: ScalarMonomial, c: Coefficient) -> Self {
        let mut s = Self::zero();
        s.add_term(mono, c);
        s
    }

    pub fn constant(len: usize, c: Coefficient) -> Self {
        Self::monomial(ScalarMonomial::one(len), c)
    }

    pub fn one(len: usize) -> Self {
        Self::constant(len, Coefficient::one())
    }

    pub fn from_int(len: usize, n: i64) -> Self {
        Self::constant(len, Coefficient::from_int(n))
    }

    pub fn t_pow(len: usize, m: i32) -> Self {
        let mut mono = ScalarMonomial::one(len);
        mono.t = m;
        Self::monomial(mono, Coefficient::one())
    }

    pub fn v_pow(len: usize, p: u32) -> Self {
        let mut mono = ScalarMonomial::one(len);
        mono.v = p;
        Self::monomial(mono, Coefficient::one())
    }

    pub fn params(beta: ParamMonomial) -> Self {
        let mut mono = ScalarMonomial::one(beta.len());
        mono.beta = beta;
        Self::monomial(mono, Coefficient::one())
    }

    /// `cosh(kJv/2) = (t^k + t^{-k})/2`.
    pub fn cosh_t(len: usize, k: i32) -> Self {
        let half = Coefficient::from_ratio(1, 2);
        (&Self::t_pow(len, k) + &Self::t_pow(len, -k)).scale(&half)
    }

    /// `sinh(kJv/2) = (t^k - t^{-k})/2`.
    pub fn sinh_t(len: usize, k: i32) -> Self {
        let half = Coefficient::from_ratio(1, 2);
        (&Self::t_pow(len, k) - &Self::t_pow(len, -k)).scale(&half)
    }

    /// `λ = q - q^{-1} = t² - t^{-2}`.
    pub fn lambda(len: usize) -> Self {
        &Self::t_pow(len, 2) - &Self::t_pow(len, -2)
    }

    pub fn add_term(&mut self, mono: ScalarMonomial, c: Coefficient) {
        if c.is_zero() {
            return;
        }
        if let Some((first, _)) = self.terms.iter().next() {
            assert_eq!(
                first.beta.len(),
                mono.beta.len(),
                "scalar terms from different parameter contexts"
            );
        }
        match self.terms.get_mut(&mono) {
            Some(old) => {
                let s = &*old + &c;
                if s.is_zero() {
                    self.terms.remove(&mono);
                } else {
                    *old = s;
                }
            }
            None => {
                self.terms.insert(mono, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ScalarMonomial, &Coefficient)> {
        self.terms.iter()
    }

    /// Number of parameters, or `None` for the zero scalar which fits any context.
    pub fn nparams(&self) -> Option<usize> {
        self.terms.keys().next().map(|m| m.beta.len())
    }

    /// The coefficient when `self` is a constant (no `t`, `v` or `j`).
    pub fn as_constant(&self) -> Option<Coefficient> {
        match self.terms.len() {
            0 => Some(Coefficient::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    /// The single term when `self` is a nonzero monomial.
    pub fn as_monomial(&self) -> Option<(ScalarMonomial, Coefficient)> {
        if self.terms.len() == 1 {
            let (m, c) = self.terms.iter().next().unwrap();
            Some((*m, c.clone()))
        } else {
            None
        }
    }

    fn check_ctx(&self, o: &Self) -> Result<(), ScalarError> {
        match (self.nparams(), o.nparams()) {
            (Some(l), Some(r)) if l != r => Err(ScalarError::ContextMismatch { left: l, right: r }),
            _ => Ok(()),
        }
    }

    pub fn try_add(&self, o: &Self) -> Result<Self, ScalarError> {
        self.check_ctx(o)?;
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.add_term(*m, c.clone());
        }
        Ok(r)
    }

    pub fn try_mul(&self, o: &Self) -> Result<Self, ScalarError> {
        self.check_ctx(o)?;
        let mut r = Self::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                r.add_term(m1.mul(m2), c1 * c2);
            }
        }
        Ok(r)
    }

    /// Product followed by truncation of every term with a nilpotent exponent ≥ 2.
    pub fn mul_truncated(&self, o: &Self, nil: IndexSet) -> Result<Self, ScalarError> {
        self.check_ctx(o)?;
        let mut r = Self::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                let m = m1.mul(m2);
                if m.beta.max_exp_on(nil) < 2 {
                    r.add_term(m, c1 * c2);
                }
            }
        }
        Ok(r)
    }

    pub fn scale(&self, c: &Coefficient) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        ExpScalar {
            terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect(),
        }
    }

    /// Multiplies by `t^m v^p j^β`.
    pub fn shift(&self, by: &ScalarMonomial) -> Self {
        ExpScalar {
            terms: self.terms.iter().map(|(m, x)| (m.mul(by), x.clone())).collect(),
        }
    }

    /// Drops every term with exponent ≥ 2 on some index of `nil`.
    pub fn truncate(&self, nil: IndexSet) -> Self {
        self.filter(|m| m.beta.max_exp_on(nil) < 2)
    }

    /// Keeps the terms free of every index in `nil`.
    pub fn principal_part(&self, nil: IndexSet) -> Self {
        self.filter(|m| m.beta.max_exp_on(nil) == 0)
    }

    pub fn filter(&self, keep: impl Fn(&ScalarMonomial) -> bool) -> Self {
        ExpScalar {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| keep(m))
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    /// Greatest monomial dividing every term, restricted to the indices of `on`.
    /// `None` for the zero scalar.
    pub fn common_param_divisor(&self, on: IndexSet) -> Option<ParamMonomial> {
        self.terms.keys().map(|m| m.beta.restrict(on)).reduce(|a, b| a.gcd(&b))
    }

    pub fn divide_param(&self, d: &ParamMonomial) -> Result<Self, ScalarError> {
        let mut r = Self::zero();
        for (m, c) in &self.terms {
            let beta = m.beta.checked_div(d).ok_or(ScalarError::NonDivisible)?;
            r.add_term(ScalarMonomial { beta, ..*m }, c.clone());
        }
        Ok(r)
    }

    /// Replaces unit parameters by 1 and imaginary ones by `i`; nilpotent and
    /// formal parameters keep their exponents. Nothing is truncated here.
    pub fn substitute_values(&self, assignment: &CkAssignment) -> Self {
        let mut r = Self::zero();
        for (m, c) in &self.terms {
            let (mono, factor) = substitute_monomial(m, assignment);
            r.add_term(mono, c * &factor);
        }
        r
    }

    /// Full parameter substitution for a contraction with fundamental
    /// parameter `j`: unit and imaginary values are substituted; when the
    /// substituted `j` carries a nilpotent factor, `t` is linearised as
    /// `t^m ↦ 1 + (m/2) J v`; finally terms with a nilpotent exponent ≥ 2 go.
    pub fn substitute_params(&self, assignment: &CkAssignment, j: &ParamMonomial) -> Self {
        let nil = assignment.nilpotent_set();
        let base = self.substitute_values(assignment);
        let (jc, jb) = substitute_param_monomial(j, assignment);
        if jb.restrict(nil).is_one() {
            return base.truncate(nil);
        }
        let mut r = Self::zero();
        for (m, c) in &base.terms {
            r.add_term(ScalarMonomial { t: 0, ..*m }, c.clone());
            if m.t != 0 {
                let lin = ScalarMonomial {
                    t: 0,
                    v: m.v + 1,
                    beta: m.beta.mul(&jb),
                };
                let factor = &Coefficient::from_ratio(m.t as i64, 2) * &jc;
                r.add_term(lin, c * &factor);
            }
        }
        r.truncate(nil)
    }

    /// Expansion of `t = e^{Jv/2}` keeping, for each `(v, β)` group, the lowest
    /// non-vanishing order in `Jv` and the one after it.
    ///
    /// `J` is given already substituted as `jc · j^{jb}`. Higher orders carry at
    /// least two more powers of every nilpotent factor of `J` than the leading
    /// one, so they vanish after any division that the leading order survives.
    pub fn expand_leading(&self, jc: &Coefficient, jb: &ParamMonomial) -> Self {
        let mut groups: BTreeMap<(u32, ParamMonomial), Vec<(i32, &Coefficient)>> = BTreeMap::new();
        for (m, c) in &self.terms {
            groups.entry((m.v, m.beta)).or_default().push((m.t, c));
        }
        let mut r = Self::zero();
        for ((v, beta), poly) in groups {
            let mut found = 0;
            // A nonzero Laurent polynomial with k terms has a nonzero moment of order < k.
            for k in 0..=poly.len() as u32 + 1 {
                let ak = taylor_coefficient(&poly, k);
                if ak.is_zero() {
                    if found > 0 {
                        found += 1;
                    }
                } else {
                    let mono = ScalarMonomial {
                        t: 0,
                        v: v + k,
                        beta: beta.mul(&jb.pow(k as u16)),
                    };
                    r.add_term(mono, &ak * &jc.pow(k));
                    found += 1;
                }
                if found == 2 {
                    break;
                }
            }
        }
        r
    }

    /// Sets `t = 1` (the limit `v → 0`).
    pub fn at_t_one(&self) -> Self {
        let mut r = Self::zero();
        for (m, c) in &self.terms {
            r.add_term(ScalarMonomial { t: 0, ..*m }, c.clone());
        }
        r
    }

    /// Exact value at a point; `None` if `t = 0` is hit with a negative power.
    pub fn evaluate(&self, p: &EvalPoint) -> Option<Coefficient> {
        let mut acc = Coefficient::zero();
        for (m, c) in &self.terms {
            let mut x = c * &p.t.powi(m.t)?;
            x = &x * &p.v.pow(m.v);
            for (k, &e) in m.beta.exps().iter().enumerate() {
                if e > 0 {
                    x = &x * &p.j[k].pow(e as u32);
                }
            }
            acc = &acc + &x;
        }
        Some(acc)
    }

    /// Largest exponent of any index of `nil` over all terms.
    pub fn max_exp_on(&self, nil: IndexSet) -> u16 {
        self.terms.keys().map(|m| m.beta.max_exp_on(nil)).max().unwrap_or(0)
    }

    /// Applies `f` to every parameter monomial, merging the results.
    pub fn map_params(&self, f: impl Fn(&ParamMonomial) -> ParamMonomial) -> Self {
        let mut r = Self::zero();
        for (m, c) in &self.terms {
            r.add_term(ScalarMonomial { beta: f(&m.beta), ..*m }, c.clone());
        }
        r
    }

    /// Rendering with nilpotent parameters written as `ι`.
    pub fn render(&self, nil: IndexSet) -> String {
        if self.is_zero() {
            return String::from("0");
        }
        join_terms(self.terms.iter().map(|(m, c)| render_term(c, m, nil)))
    }
}

/// `Σ_m c_m (m/2)^k / k!`, the coefficient of `(Jv)^k` in `Σ c_m t^m`.
fn taylor_coefficient(poly: &[(i32, &Coefficient)], k: u32) -> Coefficient {
    let mut fact = BigInt::from(1);
    for i in 2..=k {
        fact *= BigInt::from(i);
    }
    let mut acc = Coefficient::zero();
    for (m, c) in poly {
        let base = Q::new(BigInt::from(*m), BigInt::from(2));
        let mut p = Q::from_integer(BigInt::from(1));
        for _ in 0..k {
            p *= &base;
        }
        acc = &acc + &c.scale(&p);
    }
    acc.scale(&Q::new(BigInt::from(1), fact))
}

fn substitute_monomial(m: &ScalarMonomial, a: &CkAssignment) -> (ScalarMonomial, Coefficient) {
    let (factor, beta) = substitute_param_monomial(&m.beta, a);
    (ScalarMonomial { beta, ..*m }, factor)
}

/// Substitutes unit and imaginary values into a parameter monomial, returning
/// the resulting power of `i` and the remaining monomial.
pub fn substitute_param_monomial(beta: &ParamMonomial, a: &CkAssignment) -> (Coefficient, ParamMonomial) {
    assert_eq!(beta.len(), a.len(), "assignment length differs from parameter context");
    let mut rest = *beta;
    let mut ipow = 0i64;
    for k in 1..=beta.len() {
        match a.get(k) {
            CkValue::Unit => rest.set(k, 0),
            CkValue::Imag => {
                ipow += beta.exp(k) as i64;
                rest.set(k, 0);
            }
            CkValue::Nil | CkValue::Formal => {}
        }
    }
    (Coefficient::i_pow(ipow), rest)
}

pub(crate) fn render_term(c: &Coefficient, m: &ScalarMonomial, nil: IndexSet) -> String {
    let mut mono = Vec::new();
    let pow = |s: &str, e: i64| {
        if e == 1 {
            String::from(s)
        } else {
            alloc::format!("{s}^{e}")
        }
    };
    if m.t != 0 {
        mono.push(pow("t", m.t as i64));
    }
    if m.v != 0 {
        mono.push(pow("v", m.v as i64));
    }
    for k in 1..=m.beta.len() {
        let e = m.beta.exp(k);
        if e > 0 {
            let sym = if nil.contains(k) { "ι" } else { "j" };
            mono.push(pow(&alloc::format!("{sym}{k}"), e as i64));
        }
    }
    let coeff = c.compact();
    if mono.is_empty() {
        return coeff;
    }
    let body = mono.join(" ");
    match coeff.as_str() {
        "1" => body,
        "-1" => alloc::format!("-{body}"),
        _ => alloc::format!("{coeff} {body}"),
    }
}

/// Joins rendered terms, turning a leading minus into a subtraction.
pub(crate) fn join_terms(parts: impl IntoIterator<Item = String>) -> String {
    let mut out = String::new();
    for (i, p) in parts.into_iter().enumerate() {
        if i == 0 {
            out.push_str(&p);
        } else if let Some(rest) = p.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(rest);
        } else {
            out.push_str(" + ");
            out.push_str(&p);
        }
    }
    out
}

impl fmt::Display for ExpScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(IndexSet::EMPTY))
    }
}

impl fmt::Debug for ExpScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add for &ExpScalar {
    type Output = ExpScalar;
    fn add(self, o: &ExpScalar) -> ExpScalar {
        self.try_add(o).expect("scalar addition")
    }
}

impl Sub for &ExpScalar {
    type Output = ExpScalar;
    fn sub(self, o: &ExpScalar) -> ExpScalar {
        self.try_add(&-o).expect("scalar subtraction")
    }
}

impl Mul for &ExpScalar {
    type Output = ExpScalar;
    fn mul(self, o: &ExpScalar) -> ExpScalar {
        self.try_mul(o).expect("scalar multiplication")
    }
}

impl Neg for &ExpScalar {
    type Output = ExpScalar;
    fn neg(self) -> ExpScalar {
        self.scale(&Coefficient::from_int(-1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn j(len: usize, k: usize) -> ExpScalar {
        ExpScalar::params(ParamMonomial::param(len, k))
    }

    #[test]
    fn hyperbolic_identities() {
        let c = ExpScalar::cosh_t(2, 1);
        let s = ExpScalar::sinh_t(2, 1);
        // cosh² - sinh² = 1 and 2 sinh cosh = sinh(2x)
        assert_eq!(&(&c * &c) - &(&s * &s), ExpScalar::one(2));
        assert_eq!((&s * &c).scale(&Coefficient::from_int(2)), ExpScalar::sinh_t(2, 2));
    }

    #[test]
    fn context_mismatch_is_reported() {
        let a = ExpScalar::one(2);
        let b = ExpScalar::one(3);
        assert_eq!(a.try_add(&b), Err(ScalarError::ContextMismatch { left: 2, right: 3 }));
        assert!(ExpScalar::zero().try_add(&b).is_ok());
    }

    #[test]
    fn truncated_product_kills_squares() {
        let nil = IndexSet::from_indices([1]);
        let x = &ExpScalar::one(2) + &j(2, 1);
        let sq = x.mul_truncated(&x, nil).unwrap();
        assert_eq!(sq, &ExpScalar::one(2) + &j(2, 1).scale(&Coefficient::from_int(2)));
    }

    #[test]
    fn divide_and_gcd() {
        let x = &(&j(2, 1) * &j(2, 2)) + &(&j(2, 1) * &j(2, 1));
        let on = IndexSet::from_indices([1, 2]);
        let d = x.common_param_divisor(on).unwrap();
        assert_eq!(d, ParamMonomial::param(2, 1));
        assert_eq!(x.divide_param(&d).unwrap(), &j(2, 2) + &j(2, 1));
        assert_eq!(
            x.divide_param(&ParamMonomial::param(2, 2)),
            Err(ScalarError::NonDivisible)
        );
    }

    #[test]
    fn substitution_linearises_sinh() {
        // sinh(Jv/2)/... with J = j1 j2, j1 nilpotent, j2 unit: sinh -> ι1 v / 2.
        let a = CkAssignment::new(alloc::vec![CkValue::Nil, CkValue::Unit]);
        let jm = ParamMonomial::from_exps(&[1, 1]);
        let s = ExpScalar::sinh_t(2, 1).substitute_params(&a, &jm);
        let expect = ExpScalar::monomial(
            ScalarMonomial {
                t: 0,
                v: 1,
                beta: ParamMonomial::param(2, 1),
            },
            Coefficient::from_ratio(1, 2),
        );
        assert_eq!(s, expect);
        assert_eq!(ExpScalar::cosh_t(2, 1).substitute_params(&a, &jm), ExpScalar::one(2));
    }

    #[test]
    fn imaginary_values_pick_up_powers_of_i() {
        let a = CkAssignment::new(alloc::vec![CkValue::Imag, CkValue::Formal]);
        let x = ExpScalar::params(ParamMonomial::from_exps(&[3, 1]));
        let y = x.substitute_values(&a);
        assert_eq!(
            y,
            ExpScalar::params(ParamMonomial::param(2, 2)).scale(&-Coefficient::i())
        );
    }

    #[test]
    fn leading_expansion_of_cosh_minus_one_is_quadratic() {
        // cosh(Jv) - 1 = (Jv)^2/2 + (Jv)^4/24 + ...
        let x = &ExpScalar::cosh_t(1, 2) - &ExpScalar::one(1);
        let jb = ParamMonomial::param(1, 1);
        let e = x.expand_leading(&Coefficient::one(), &jb);
        let expect = ExpScalar::monomial(
            ScalarMonomial {
                t: 0,
                v: 2,
                beta: ParamMonomial::from_exps(&[2]),
            },
            Coefficient::from_ratio(1, 2),
        );
        // order 3 vanishes, so nothing beyond the leading term is kept
        assert_eq!(e, expect);
    }
}
