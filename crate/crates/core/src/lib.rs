//! Exact decision procedures for the weak and strong Lefschetz properties of
//! artinian monomial complete intersections `K[x_0..x_n]/(x_0^{d_0}, ..., x_n^{d_n})`
//! over fields of arbitrary characteristic.
//!
//! Four independent routes are provided and cross-checked against each other:
//!
//! - [`oracle`]: explicit multiplication matrices and exact rank, plus the
//!   minimal degree of non-Koszul syzygies;
//! - [`detformula`]: the closed-form determinant of the peak multiplication
//!   matrix as a prime factorization;
//! - [`syzgap`]: the syzygy-gap positivity criterion for three generators;
//! - [`classify`]: closed-form classification results arranged as a cascade,
//!   falling back to the oracle.
//!
//! The crate is `no_std` and only needs `alloc`. IO, the command-line surface
//! and parallel sweeps live in the `lefschetz-cli` crate.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod classify;
pub mod combinat;
pub mod detformula;
pub mod domain;
mod error;
pub mod linalg;
pub mod oracle;
pub mod poly;
pub mod syzgap;
pub mod verdict;

pub use domain::{Characteristic, DegreeTuple, HilbertFunction};
pub use error::Error;
pub use verdict::{Method, Status, TheoremId, Verdict, Witness};

pub type Result<T, E = Error> = core::result::Result<T, E>;
