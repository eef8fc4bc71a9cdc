//! Scalar ring of the theory: finite sums of `t^m v^p j^β` over Q(i, √2).

mod assignment;
mod coeff;
mod exp_scalar;
mod monomial;

pub use assignment::{CkAssignment, CkValue};
pub use coeff::{Coefficient, Q};
pub use exp_scalar::{substitute_param_monomial, EvalPoint, ExpScalar, ScalarError};
pub use monomial::{IndexSet, ParamMonomial, ScalarMonomial, MAX_PARAMS};

pub(crate) use exp_scalar::{join_terms, render_term};
