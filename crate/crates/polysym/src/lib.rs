//! Exact computer algebra for multisymmetric polynomials.
//!
//! The library constructs the ring of S_n-invariants of n x m matrix
//! variables, its presentation by polarized power sums `[w]` for words
//! `w` of degree at most n, and the ideal of relations among those
//! generators, and verifies the structure of that ideal for n = 3 by
//! exact per-multidegree linear algebra over the rationals: kernel
//! component bases, highest-weight tests, orbit spans under the gl_m
//! action, Hironaka/Hilbert-series consistency, congruence tables, and
//! generation/minimality certificates.
//!
//! Everything is exact; no floating point is used anywhere.

pub mod charring;
pub mod comb;
pub mod error;
pub mod free_algebra;
pub mod ideal_lab;
pub mod invariant_ring;
pub mod linalg;
pub mod polycore;
pub mod rational;
pub mod relations;
pub mod report;
pub mod schur;

pub use error::{Error, Result};
pub use rational::Rational;

/// Degree bound through which the ideal of relations is generated for a
/// given n; all generation checks run through this degree.
pub const fn relation_degree_bound(n: usize) -> u32 {
    (n * n - n + 2) as u32
}
