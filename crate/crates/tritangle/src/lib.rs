//! Three-qubit entanglement toolkit.
//!
//! `tritangle` builds the common families of three-qubit pure entangled
//! states, measures their genuine tripartite entanglement (the 3-tangle,
//! computed through two independent routes), classifies them into the two
//! inequivalent SLOCC classes (GHZ-class vs W-class), and simulates the
//! controlled dense coding protocol exactly: a controller measures one
//! qubit, the other two parties apply a known Pauli correction and run the
//! standard dense coding channel with Bell-measurement decoding.
//!
//! Module map:
//!
//! * [`qmath`] — dense complex linear algebra at dimensions 2/4/8:
//!   Kronecker products, partial traces, a cyclic-Jacobi Hermitian
//!   eigensolver, PSD matrix square roots.
//! * [`states`] — constructors for every supported state family plus a
//!   JSON ingestion path for raw amplitudes.
//! * [`entanglement`] — concurrences, one-vs-rest entanglement, the
//!   3-tangle (hyperdeterminant and CKW-residual routes) and the
//!   rank-based SLOCC classifier.
//! * [`cdc`] — controller measurement, Pauli corrections, Bell
//!   measurement, exact dense-coding channel capacity, basis optimization
//!   and the GHZ-class usefulness check.
//! * [`cli`] — the `tritangle` command-line front end.
//!
//! All computations are deterministic, pure functions of their inputs;
//! nothing here holds shared mutable state.

pub mod tolerances;

mod error;

pub mod cdc;
pub mod cli;
pub mod entanglement;
pub mod qmath;
pub mod states;

pub use error::{Error, Result};
