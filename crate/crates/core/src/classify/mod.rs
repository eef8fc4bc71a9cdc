//! Classification of contractions by the distribution of nilpotent
//! parameters in the generating matrix and by `J`.

mod catalog;
mod pattern;
mod render;

pub use catalog::*;
pub use pattern::*;
pub use render::*;
