//! Exact symbolic algebra for the quantum orthogonal Cayley-Klein groups
//! `SO_v(N; j; σ)`: their R-matrix presentation, Hopf structure, contractions
//! and classification.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod classify;
pub mod contraction;
pub mod group;
pub mod hopf;
pub mod scalars;
pub mod tensoralg;
