//! Central home for every numeric tolerance and threshold in the crate.
//!
//! All thresholds used by validation, clamping and convergence logic live
//! here so that no module carries ad-hoc magic numbers.

/// Unit-norm requirement on pure-state amplitude vectors.
pub const NORM_TOL: f64 = 1e-12;

/// Norm floor below which a raw amplitude list is rejected as the zero
/// vector rather than renormalized.
pub const NORM_FLOOR: f64 = 1e-12;

/// A raw amplitude list whose norm deviates from 1 by more than this is
/// renormalized with a warning flag.
pub const RENORM_WARN_TOL: f64 = 1e-6;

/// Entrywise Hermiticity requirement on density matrices.
pub const HERMITICITY_TOL: f64 = 1e-12;

/// Looser Hermiticity gate used on eigensolver inputs, which may carry
/// accumulated rounding from products of validated factors.
pub const HERMITICITY_OP_TOL: f64 = 1e-10;

/// Unit-trace requirement on density matrices.
pub const TRACE_TOL: f64 = 1e-10;

/// Density-matrix eigenvalues may undershoot zero by at most this much.
pub const DENSITY_EIG_FLOOR: f64 = -1e-10;

/// Spectra passed to the PSD square root may carry negative rounding noise
/// down to this value; anything below is a materially negative eigenvalue
/// and rejected.
pub const MATERIAL_NEG_EIG: f64 = -1e-8;

/// Eigenvalues smaller than this fraction of the largest one are treated
/// as exact zeros before taking square roots. Rank-deficient inputs carry
/// O(1e-16) noise on their null space; an unguarded square root would
/// inflate that to O(1e-8) and poison downstream concurrence sums.
pub const NULL_SPECTRUM_REL: f64 = 1e-13;

/// Convergence threshold on the off-diagonal Frobenius norm for the
/// cyclic Jacobi eigensolver.
pub const JACOBI_OFF_TOL: f64 = 1e-13;

/// Sweep cap for the Jacobi eigensolver. Quadratic convergence makes
/// dimension-8 Hermitian problems finish in well under ten sweeps.
pub const JACOBI_MAX_SWEEPS: usize = 64;

/// Default relative eigenvalue cutoff when counting the rank of a reduced
/// density matrix.
pub const DEFAULT_RANK_TOL: f64 = 1e-9;

/// 3-tangle threshold separating the W-class (vanishing tangle) from the
/// GHZ-class (nonvanishing tangle). Exact vanishing is unattainable in
/// floating point; profiles always carry the raw tangle so callers can
/// re-threshold.
pub const DEFAULT_TANGLE_TOL: f64 = 1e-8;

/// Measures that live in [0, 1] may overshoot either bound by at most this
/// much before clamping; larger excursions raise a numeric-consistency
/// error instead of being silently clamped.
pub const CLAMP_TOL: f64 = 1e-9;

/// Largest tolerated disagreement between the hyperdeterminant tangle and
/// the concurrence-based residual before a profile is rejected outright.
pub const ROUTE_MISMATCH_TOL: f64 = 1e-6;

/// Measurement branches below this probability are unreachable: their
/// post states are not defined and they are excluded from capacity
/// aggregation.
pub const PROB_FLOOR: f64 = 1e-12;

/// A branch counts as perfect dense coding when its channel carries at
/// least `2 - PERFECT_CAPACITY_TOL` bits.
pub const PERFECT_CAPACITY_TOL: f64 = 1e-9;

/// Default (theta, phi) grid resolution for the controller-basis
/// optimizer.
pub const DEFAULT_OPTIMIZER_GRID: usize = 64;

/// Smallest accepted optimizer grid.
pub const MIN_OPTIMIZER_GRID: usize = 8;
