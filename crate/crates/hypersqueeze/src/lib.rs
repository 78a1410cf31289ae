//! Numerical toolkit for Sp(2;R) and Sp(4;R) squeezing built on the
//! non-compact Hopf maps.
//!
//! The crate is layered bottom-up:
//!
//! - [`matcore`]: dense complex matrices, matrix exponential, Kronecker
//!   products, Frobenius distances.
//! - [`splitq`]: split-quaternion algebra and split-signature 't Hooft
//!   symbols.
//! - [`sp2r`]: SU(1,1) ~ Sp(2;R) generators, squeeze matrices, the first
//!   non-compact Hopf map onto the Bloch two-hyperboloid, Gauss
//!   decomposition parameters.
//! - [`so23`]: SO(2,3) ~ Sp(4;R) gamma matrices and generators, both
//!   squeeze matrix types, Gauss/Euler decompositions, the second
//!   non-compact Hopf map onto the Bloch four-hyperboloid, chiral Hopf
//!   map, real-form transform and symplectic structure checks.
//! - [`fock`]: truncated multimode bosonic Fock engine realizing the
//!   su(1,1) and sp(4;R) algebras as Hermitian operators, squeezed and
//!   squeezed-coherent states, concurrence, quadrature moments and
//!   uncertainty relations.
//! - [`suites`]: named identity suites with residual reports, shared by
//!   the test harness and the CLI.

pub mod error;
pub mod fock;
pub mod matcore;
pub mod so23;
pub mod sp2r;
pub mod splitq;
pub mod suites;

pub use error::{Error, Result};

/// Fixed default seed for every randomized property suite; override through
/// the CLI or the HYPERSQUEEZE_SEED environment variable.
pub const DEFAULT_SEED: u64 = 0x48_4F_50_46; // "HOPF"

/// Gauge choice of the fibre factor in a coset squeeze matrix. Both kinds
/// project to the same hyperboloid point but are generally distinct
/// unitaries on Fock space.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SqueezeKind {
    Dirac,
    Schwinger,
}

impl std::fmt::Display for SqueezeKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SqueezeKind::Dirac => write!(f, "dirac"),
            SqueezeKind::Schwinger => write!(f, "schwinger"),
        }
    }
}

/// Reduce an angle to [0, period).
pub fn reduce_angle(a: f64, period: f64) -> f64 {
    let r = a % period;
    if r < 0.0 {
        r + period
    } else {
        r
    }
}
