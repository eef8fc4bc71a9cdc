//! Everything indexed by a group specification: `ρ`, range products, the
//! fundamental parameter `J`, the generating matrix and the structure matrices
//! `D`, `C`, `C̃` and `R̃`.

mod rmatrix;
mod spec;
mod structure;

pub use rmatrix::{flip, r_tilde, yang_baxter_defect, Triple};
pub use spec::{all_permutations, is_permutation, nonempty_subsets, GroupSpec, SpecError, MAX_N};
pub use structure::{
    as_poly_matrix, c0_matrix, c_inverse, c_matrix, c_tilde, c_tilde_inverse, d_inverse, d_matrix,
    fundamental_parameter, generating_matrix, generator_at, multiplier, prime, range_product, rho, specialize,
    specialize_matrix, twice_rho, u_entry, union,
};
