use crate::group::{fundamental_parameter, GroupSpec};
use crate::hopf::AntipodeFraction;
use crate::scalars::{substitute_param_monomial, Coefficient, ExpScalar, IndexSet, ParamMonomial};
use crate::tensoralg::{NcPoly, TensorPoly};

/// What contraction does to one relation.
#[derive(Clone, PartialEq, Debug)]
pub enum Verdict {
    /// The principal part, free of nilpotent parameters.
    Admissible(NcPoly),
    /// The relation vanishes identically once parameters are substituted.
    Trivial,
    /// No term is free of nilpotent parameters even after dividing out their
    /// common factor; the surviving terms are kept as a witness.
    Inadmissible(NcPoly),
}

impl Verdict {
    pub fn is_inadmissible(&self) -> bool {
        matches!(self, Verdict::Inadmissible(_))
    }

    pub fn contracted(&self) -> Option<&NcPoly> {
        match self {
            Verdict::Admissible(p) => Some(p),
            _ => None,
        }
    }
}

/// The substitutions of one contraction: parameter values, the fundamental
/// parameter `J` and whether `t = e^{Jv/2}` has to be expanded.
#[derive(Clone, Debug)]
pub struct Contraction {
    spec: GroupSpec,
    j: ParamMonomial,
    jc: Coefficient,
    jb: ParamMonomial,
    nil: IndexSet,
}

impl Contraction {
    /// The contraction of `spec` with `J` given by the union rule.
    pub fn new(spec: &GroupSpec) -> Self {
        Self::with_j(spec, fundamental_parameter(spec))
    }

    /// The same contraction with an arbitrary `J`, e.g. `J = 1` as a control.
    pub fn with_j(spec: &GroupSpec, j: ParamMonomial) -> Self {
        let (jc, jb) = substitute_param_monomial(&j, spec.assignment());
        Contraction {
            spec: spec.clone(),
            j,
            jc,
            jb,
            nil: spec.nilpotent_set(),
        }
    }

    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    /// `J` before substitution.
    pub fn j(&self) -> ParamMonomial {
        self.j
    }

    /// `J` after substitution, as `(constant, monomial)`.
    pub fn j_substituted(&self) -> (Coefficient, ParamMonomial) {
        (self.jc.clone(), self.jb)
    }

    pub fn nil(&self) -> IndexSet {
        self.nil
    }

    /// `J` carries a nilpotent factor, so the deformation is expanded.
    pub fn expands(&self) -> bool {
        !self.jb.restrict(self.nil).is_one()
    }

    /// Parameter substitution plus leading-order expansion of `t` when `J`
    /// turns nilpotent. Nothing is truncated.
    pub fn substitute(&self, x: &ExpScalar) -> ExpScalar {
        let s = x.substitute_values(self.spec.assignment());
        if self.expands() {
            s.expand_leading(&self.jc, &self.jb)
        } else {
            s
        }
    }

    fn substitute_poly(&self, p: &NcPoly) -> NcPoly {
        p.map_coeffs(|c| self.substitute(c))
    }

    /// Common nilpotent factor of every coefficient of `p`.
    fn nil_content(&self, p: &NcPoly) -> ParamMonomial {
        p.terms()
            .filter_map(|(_, c)| c.common_param_divisor(self.nil))
            .reduce(|a, b| a.gcd(&b))
            .unwrap_or_else(|| ParamMonomial::one(self.spec.nparams()))
    }

    /// Substitute, divide by the common nilpotent factor, drop nilpotent
    /// squares and keep the principal part.
    pub fn contract_relation(&self, r: &NcPoly) -> Verdict {
        let s = self.substitute_poly(r);
        if s.is_zero() {
            return Verdict::Trivial;
        }
        let d = self.nil_content(&s);
        let divided = s
            .try_map_coeffs(|c| c.divide_param(&d))
            .expect("content divides every coefficient");
        let truncated = divided.map_coeffs(|c| c.truncate(self.nil));
        let principal = truncated.map_coeffs(|c| c.principal_part(self.nil));
        if principal.is_zero() {
            Verdict::Inadmissible(truncated)
        } else {
            Verdict::Admissible(principal)
        }
    }

    /// Contracted coefficient of a Hopf map: substitute and keep the principal part.
    pub fn contract_coefficient(&self, x: &ExpScalar) -> ExpScalar {
        self.substitute(x).principal_part(self.nil)
    }

    pub fn contract_tensor(&self, t: &TensorPoly) -> TensorPoly {
        t.map_coeffs(|c| self.contract_coefficient(c))
    }

    /// Contracted antipode `S(u) = entry / multiplier`. The nilpotent part of
    /// the multiplier has to divide the substituted entry; otherwise the
    /// coefficient is ill-defined and the offending entry is returned.
    pub fn contract_antipode(&self, entry: &NcPoly, multiplier: &ParamMonomial) -> Result<AntipodeFraction, NcPoly> {
        let (mc, mb) = substitute_param_monomial(multiplier, self.spec.assignment());
        let dn = mb.restrict(self.nil);
        let df = mb.checked_div(&dn).expect("restriction divides");
        let s = self.substitute_poly(entry);
        let divided = s.try_map_coeffs(|c| c.divide_param(&dn)).map_err(|_| s.clone())?;
        let inv = mc.inv().expect("multiplier constant is a power of i");
        let num = divided.map_coeffs(|c| c.principal_part(self.nil).scale(&inv));
        Ok(AntipodeFraction::reduced(num, df))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tensoralg::parse_relation;

    fn ctx(sigma: &[usize], nil: &[usize]) -> Contraction {
        let spec = GroupSpec::contraction(3, sigma.to_vec(), IndexSet::from_indices(nil.iter().copied())).unwrap();
        Contraction::new(&spec)
    }

    fn rel(src: &str) -> NcPoly {
        parse_relation(src, 2, &ParamMonomial::from_exps(&[1, 1])).unwrap()
    }

    #[test]
    fn admissible_with_mixed_orders() {
        // (a + ι1 b + ι2 c) - (a1 + ι1 d) keeps a - a1
        let c = ctx(&[1, 2, 3], &[1, 2]);
        let v = c.contract_relation(&rel("u11 + j1 u12 + j2 u23 - u22 - j1 u13"));
        assert_eq!(v, Verdict::Admissible(rel("u11 - u22")));
    }

    #[test]
    fn inadmissible_without_free_terms() {
        let c = ctx(&[1, 2, 3], &[1, 2]);
        let v = c.contract_relation(&rel("j1 u12 + j2 u23 - j1 j2 u13"));
        assert!(v.is_inadmissible());
    }

    #[test]
    fn zero_is_trivial() {
        let c = ctx(&[1, 2, 3], &[1]);
        assert_eq!(c.contract_relation(&NcPoly::zero()), Verdict::Trivial);
        assert_eq!(c.contract_relation(&rel("j2 u12 - j2 u12")), Verdict::Trivial);
    }

    #[test]
    fn galilei_commutator_before_elimination() {
        let c = ctx(&[1, 2, 3], &[1, 2]);
        let v = c.contract_relation(&rel("J [u12, u23] - i sh(2) u22 (u11 - u33)"));
        let expect = rel("[u12, u23] - i v u22 (u11 - u33)");
        assert_eq!(v, Verdict::Admissible(expect));
    }

    #[test]
    fn unit_parameters_are_substituted() {
        let c = ctx(&[1, 2, 3], &[1]);
        assert!(!c.expands() || c.j_substituted().1.exp(1) == 1);
        let v = c.contract_relation(&rel("j2^2 u23 + j1 u12"));
        assert_eq!(v, Verdict::Admissible(rel("u23")));
    }
}
