//! Free noncommutative algebra, its tensor powers and dense matrices over them.

mod matrix;
mod ncpoly;
mod parse;
mod span;
mod tensor;
mod word;

pub use matrix::{permutation_matrix, Matrix, Ring};
pub use ncpoly::NcPoly;
pub use parse::{parse_poly, parse_relation, ParseError};
pub use span::{random_points, rank_at, span_membership};
pub use tensor::TensorPoly;
pub use word::{Gen, Word};
