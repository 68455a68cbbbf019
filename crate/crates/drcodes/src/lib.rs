//! Distance-regular graphs, completely regular codes, and their algebraic
//! classification.
//!
//! The crate is organized in two layers:
//!
//! * **Parameter level**: [`spectral`] works from an intersection array alone
//!   (eigenvalues, standard eigenvectors, multiplicities, Krein parameters,
//!   Q-polynomial orderings), [`leonard`] from a quotient matrix and code
//!   spectrum (Q-polynomial and Leonard code tests, harmonic and arithmetic
//!   classification, feasibility filters, parameter reconstruction).
//! * **Vertex level**: [`graph`] generates explicit graphs and verifies
//!   distance regularity, [`code`] analyzes codes inside them (distance
//!   partitions, complete regularity, quotient matrices, code spectra), and
//!   [`coset`] handles additive codes and their coset graphs.
//!
//! [`classify`] ties both layers together into a single report.
//!
//! Combinatorial quantities are exact rationals throughout; only irrational
//! eigenvalues fall back to floating point. See [`scalar::Scalar`].
//!
//! With the default `parallel` feature the vertex-level sweeps (distance
//! regularity, equitability, outer distributions) run on a rayon pool;
//! sequential variants are always available under `*_seq` names.

pub mod classify;
pub mod code;
pub mod coset;
pub mod error;
pub mod graph;
pub mod leonard;
pub mod linalg;
pub mod poly;
pub mod scalar;
pub mod spectral;

pub use error::{Error, Result};
pub use scalar::Scalar;

/// Numeric tolerances used by the approximate track. Exact values never
/// consult these.
#[derive(Clone, Copy, Debug)]
pub struct Tolerances {
    /// Matching a scalar against a known eigenvalue.
    pub eigen: f64,
    /// Residual checks, scaled by the vertex count.
    pub residual_rel: f64,
    /// Krein zero threshold, scaled by the largest `|q_ij^l|`.
    pub krein_zero_rel: f64,
    /// Bracket width for Sturm bisection of irrational roots.
    pub bisect_width: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            eigen: 1e-9,
            residual_rel: 1e-8,
            krein_zero_rel: 1e-8,
            bisect_width: 1e-13,
        }
    }
}
