//! Hopf structure of `SO_v(N; j; σ)`: defining relations, coproduct, counit
//! and antipode, plus the checks tying them together.

mod antipode;
mod closed_forms;
mod coproduct;
mod relations;
mod verify;

pub use antipode::*;
pub use closed_forms::*;
pub use coproduct::*;
pub use relations::*;
pub use verify::*;
