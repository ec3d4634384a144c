//! Replica superoperators of the Brownian Gaussian Unitary Ensemble.
//!
//! The ensemble-averaged `n`-replica channel `𝓤ₙ(t) = 𝔼(U^{⊗n} ⊗ U^{*⊗n})`
//! is expanded over Kronecker-delta wiring diagrams ("graphs"). Graphs are
//! grouped into categories that the generator `𝓛ₙ` maps into combinations of
//! each other. This gives a compact matrix `M` whose exponential yields the
//! pattern coefficients `f_a(t)`. A dense brute-force oracle validates every
//! stage.
//!
//! Module map:
//! - [`perm`]: symmetric-group arithmetic and conjugacy classes;
//! - [`graph`]: diagrams, gauge quotient, enumeration, dense materialization;
//! - [`category`]: symmetry-orbit categories and closure discovery;
//! - [`liouvillian`]: the action of `𝓛ₙ` and the compact matrix `M`;
//! - [`evolution`]: eigen-solution of `M_J` and assembly of `𝓤ₙ(t)`;
//! - [`observable`]: loop-walk contraction with operator insertions;
//! - [`oracle`]: dense generators (GUE/GOE/GSE), `expm`, symmetry checks.

pub mod category;
pub mod coeff;
pub mod error;
pub mod evolution;
pub mod graph;
pub mod linalg;
pub mod liouvillian;
pub mod observable;
pub mod oracle;
pub mod par;
pub mod perm;

pub use category::{Basis, Category, Classifier, Label};
pub use coeff::Coeff;
pub use error::{Error, Result};
pub use evolution::{EvolutionSolution, SpectrumE};
pub use graph::{CanonicalGraph, Graph};
pub use liouvillian::{GeneratorMatrix, GraphCombo};
pub use observable::OperatorSet;
pub use oracle::{DenseGenerator, Ensemble};
pub use perm::{CycleType, Perm, Side};

/// Default cap on the dimension `D^{2n}` of dense matrices.
pub const DEFAULT_DENSE_BUDGET: usize = 4096;
