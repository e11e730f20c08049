//! Exact simulation of the controlled dense coding protocol.
//!
//! One party (the controller) measures its qubit in a chosen basis. The
//! remaining two parties — sender and receiver, in ascending qubit order —
//! are left with a two-qubit pure state per measurement branch. After an
//! agreed Pauli correction on the receiver qubit, the sender encodes a
//! uniform two-bit message with {I, X, Z, ZX}, ships its qubit, and the
//! receiver decodes with a Bell measurement. Everything is computed
//! exactly from amplitudes; no sampling is involved.

use num_complex::Complex64 as C64;
use serde::{Deserialize, Serialize};

use crate::entanglement::{self, EntanglementProfile};
use crate::qmath::{self, SquareMatrix};
use crate::states::{BellState, PauliAxis, PureState2, PureState3, Qubit};
use crate::tolerances::{
    DEFAULT_OPTIMIZER_GRID, MIN_OPTIMIZER_GRID, PERFECT_CAPACITY_TOL, PROB_FLOOR,
};
use crate::{Error, Result};

use std::f64::consts::{FRAC_PI_2, PI};
use std::str::FromStr;

fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

/// Measurement basis on the controller qubit:
///
/// |v0> = cos(theta)|0> + e^{i phi} sin(theta)|1>
/// |v1> = e^{-i phi} sin(theta)|0> - cos(theta)|1>
///
/// theta = 0 is the computational basis.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ControllerBasis {
    theta: f64,
    phi: f64,
}

impl ControllerBasis {
    pub fn new(theta: f64, phi: f64) -> Result<Self> {
        if !theta.is_finite() || !(0.0..=FRAC_PI_2).contains(&theta) {
            return Err(Error::Parameter(format!("theta must lie in [0, pi/2], got {theta}")));
        }
        if !phi.is_finite() || !(0.0..2.0 * PI).contains(&phi) {
            return Err(Error::Parameter(format!("phi must lie in [0, 2 pi), got {phi}")));
        }
        Ok(Self { theta, phi })
    }

    /// The computational basis, theta = phi = 0.
    pub fn computational() -> Self {
        Self { theta: 0.0, phi: 0.0 }
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }

    fn vectors(&self) -> [[C64; 2]; 2] {
        let (ct, st) = (self.theta.cos(), self.theta.sin());
        let phase = C64::from_polar(1.0, self.phi);
        [
            [c(ct, 0.0), phase * st],
            [phase.conj() * st, c(-ct, 0.0)],
        ]
    }
}

/// One branch of a controller measurement. Branches below `PROB_FLOOR`
/// are unreachable and carry no post state.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MeasurementBranch {
    pub outcome: u8,
    pub probability: f64,
    pub post_state: Option<PureState2>,
}

/// Pauli label applied to the receiver qubit on a given outcome. `Y` is
/// the real antisymmetric variant, matching the convention the Bell-pair
/// families are built with.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PauliLabel {
    I,
    X,
    Y,
    Z,
}

impl PauliLabel {
    fn matrix(self) -> SquareMatrix {
        match self {
            PauliLabel::I => qmath::identity2(),
            PauliLabel::X => qmath::pauli_x(),
            PauliLabel::Y => qmath::pauli_y_real(),
            PauliLabel::Z => qmath::pauli_z(),
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            PauliLabel::I => "i",
            PauliLabel::X => "x",
            PauliLabel::Y => "y",
            PauliLabel::Z => "z",
        }
    }
}

impl FromStr for PauliLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "i" => Ok(PauliLabel::I),
            "x" => Ok(PauliLabel::X),
            "y" => Ok(PauliLabel::Y),
            "z" => Ok(PauliLabel::Z),
            other => Err(Error::Parameter(format!("unknown Pauli label '{other}'"))),
        }
    }
}

/// Map from measurement outcome to the Pauli correction on the receiver
/// qubit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorrectionRule {
    pub on_outcome: [PauliLabel; 2],
}

impl CorrectionRule {
    pub fn identity() -> Self {
        Self { on_outcome: [PauliLabel::I, PauliLabel::I] }
    }

    pub fn new(on_zero: PauliLabel, on_one: PauliLabel) -> Self {
        Self { on_outcome: [on_zero, on_one] }
    }

    /// The rule matched to a Bell-pair family built around `axis`:
    /// outcome 0 needs nothing, outcome 1 undoes the axis operator.
    pub fn for_axis(axis: PauliAxis) -> Self {
        let label = match axis {
            PauliAxis::X => PauliLabel::X,
            PauliAxis::Y => PauliLabel::Y,
            PauliAxis::Z => PauliLabel::Z,
        };
        Self::new(PauliLabel::I, label)
    }
}

impl Default for CorrectionRule {
    fn default() -> Self {
        Self::identity()
    }
}

/// Fixes the global phase of a branch state: the first amplitude of
/// non-negligible magnitude is rotated to the positive real axis.
/// Measurement branches are defined up to global phase, and a fixed
/// convention keeps reports and tests deterministic.
fn canonical_phase(mut amps: [C64; 4]) -> [C64; 4] {
    if let Some(lead) = amps.iter().find(|a| a.norm() > 1e-9) {
        let phase = lead / lead.norm();
        let rot = phase.conj();
        for a in amps.iter_mut() {
            *a *= rot;
        }
    }
    amps
}

/// Projects the controller qubit onto the basis vectors and returns the
/// two Born branches. The non-controller qubits keep their ascending
/// order in the post states.
pub fn controller_measure(
    state: &PureState3,
    controller: Qubit,
    basis: &ControllerBasis,
) -> Vec<MeasurementBranch> {
    let vs = basis.vectors();
    let ctrl_pos = controller.index();
    let (q1, q2) = controller.others();
    let (p1, p2) = (q1.index(), q2.index());

    let mut branches = Vec::with_capacity(2);
    for (outcome, v) in vs.iter().enumerate() {
        let mut amps = [c(0.0, 0.0); 4];
        for idx in 0..8 {
            let bit = |pos: usize| (idx >> (2 - pos)) & 1;
            let slot = 2 * bit(p1) + bit(p2);
            amps[slot] += v[bit(ctrl_pos)].conj() * state.amp(idx);
        }
        let prob: f64 = amps.iter().map(|a| a.norm_sqr()).sum();
        let post_state = if prob >= PROB_FLOOR {
            let root = prob.sqrt();
            for a in amps.iter_mut() {
                *a /= root;
            }
            Some(PureState2::new(canonical_phase(amps)).expect("normalized by construction"))
        } else {
            None
        };
        branches.push(MeasurementBranch { outcome: outcome as u8, probability: prob, post_state });
    }
    branches
}

/// Applies the rule's Pauli to the receiver (second) qubit of the branch
/// post state. Unreachable branches pass through unchanged; the returned
/// flag is set when that happens.
pub fn apply_correction(branch: &MeasurementBranch, rule: &CorrectionRule) -> (MeasurementBranch, bool) {
    let label = rule.on_outcome[branch.outcome as usize];
    match &branch.post_state {
        None => (branch.clone(), true),
        Some(post) => {
            let corrected = if label == PauliLabel::I {
                post.clone()
            } else {
                let moved = qmath::apply_single_qubit(&label.matrix(), post.amps(), 1, 2)
                    .expect("2x2 operator on a two-qubit state");
                let mut amps = [c(0.0, 0.0); 4];
                amps.copy_from_slice(&moved);
                PureState2::new(canonical_phase(amps)).expect("unitary preserves the norm")
            };
            (
                MeasurementBranch {
                    outcome: branch.outcome,
                    probability: branch.probability,
                    post_state: Some(corrected),
                },
                false,
            )
        }
    }
}

/// Squared overlaps with the four Bell states, in (phi+, phi-, psi+, psi-)
/// order. Sums to 1 for any normalized input.
pub fn bell_probabilities(state: &PureState2) -> [f64; 4] {
    let mut out = [0.0; 4];
    for (slot, bell) in BellState::ALL.into_iter().enumerate() {
        out[slot] = qmath::inner(&bell.amplitudes(), state.amps()).norm_sqr().min(1.0);
    }
    out
}

/// The Bell state of largest overlap and that overlap.
pub fn best_bell(state: &PureState2) -> (BellState, f64) {
    let probs = bell_probabilities(state);
    let mut best = 0;
    for i in 1..4 {
        if probs[i] > probs[best] {
            best = i;
        }
    }
    (BellState::ALL[best], probs[best])
}

/// Exact dense-coding capacity of a shared two-qubit state, in bits.
///
/// The sender (first qubit) encodes a uniform two-bit message with
/// {I, X, Z, ZX}; the receiver decodes with a Bell measurement. The
/// result is the Shannon mutual information I(M; Y) of the resulting
/// 4x4 conditional probability table.
pub fn dense_coding_capacity(shared: &PureState2) -> f64 {
    let encodings = [
        qmath::identity2(),
        qmath::pauli_x(),
        qmath::pauli_z(),
        qmath::pauli_z().mul(&qmath::pauli_x()).expect("2x2 product"),
    ];
    let mut table = [[0.0f64; 4]; 4];
    for (m, enc) in encodings.iter().enumerate() {
        let moved = qmath::apply_single_qubit(enc, shared.amps(), 0, 2)
            .expect("2x2 operator on a two-qubit state");
        let mut amps = [c(0.0, 0.0); 4];
        amps.copy_from_slice(&moved);
        let encoded = PureState2::new(amps).expect("unitary preserves the norm");
        table[m] = bell_probabilities(&encoded);
    }
    mutual_information_uniform(&table)
}

/// I(M; Y) in bits for a channel table p(y|m) under a uniform prior on m.
fn mutual_information_uniform(table: &[[f64; 4]; 4]) -> f64 {
    let mut marginal = [0.0f64; 4];
    for row in table {
        for (y, p) in row.iter().enumerate() {
            marginal[y] += p / 4.0;
        }
    }
    let mut info = 0.0;
    for row in table {
        for (y, &p) in row.iter().enumerate() {
            if p > 0.0 && marginal[y] > 0.0 {
                info += 0.25 * p * (p / marginal[y]).log2();
            }
        }
    }
    info.clamp(0.0, 2.0)
}

/// Per-branch outcome of a full protocol run.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CdcBranch {
    pub outcome: u8,
    pub probability: f64,
    /// Post state after correction; absent for unreachable branches.
    pub post_state: Option<PureState2>,
    pub best_bell: Option<BellState>,
    pub best_bell_fidelity: Option<f64>,
    pub capacity_bits: Option<f64>,
}

/// Summary of the controller-basis optimization, when one was run.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct BasisOptimization {
    pub grid: usize,
    pub min_branch_concurrence: f64,
}

/// Full report of one controlled-dense-coding run.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CdcReport {
    pub controller: Qubit,
    pub basis: ControllerBasis,
    pub branches: Vec<CdcBranch>,
    /// Probability-weighted mean capacity over reachable branches.
    pub average_capacity_bits: f64,
    /// Minimum capacity over reachable branches.
    pub min_capacity_bits: f64,
    /// True when every reachable branch carries 2 bits (within
    /// `PERFECT_CAPACITY_TOL`).
    pub perfect_cdc: bool,
    pub basis_optimization: Option<BasisOptimization>,
}

/// Runs the protocol: controller measurement, corrections, Bell
/// fidelities and exact capacities per branch, and the aggregate verdict.
pub fn run_cdc(
    state: &PureState3,
    controller: Qubit,
    basis: &ControllerBasis,
    rule: &CorrectionRule,
) -> CdcReport {
    let mut branches = Vec::with_capacity(2);
    let mut average = 0.0;
    let mut minimum = f64::INFINITY;
    let mut perfect = true;

    for branch in controller_measure(state, controller, basis) {
        let (corrected, _skipped) = apply_correction(&branch, rule);
        match corrected.post_state {
            Some(post) => {
                let (bell, fidelity) = best_bell(&post);
                let capacity = dense_coding_capacity(&post);
                average += corrected.probability * capacity;
                minimum = minimum.min(capacity);
                perfect &= capacity >= 2.0 - PERFECT_CAPACITY_TOL;
                branches.push(CdcBranch {
                    outcome: corrected.outcome,
                    probability: corrected.probability,
                    post_state: Some(post),
                    best_bell: Some(bell),
                    best_bell_fidelity: Some(fidelity),
                    capacity_bits: Some(capacity),
                });
            }
            None => branches.push(CdcBranch {
                outcome: corrected.outcome,
                probability: corrected.probability,
                post_state: None,
                best_bell: None,
                best_bell_fidelity: None,
                capacity_bits: None,
            }),
        }
    }
    if !minimum.is_finite() {
        minimum = 0.0;
        perfect = false;
    }
    CdcReport {
        controller,
        basis: *basis,
        branches,
        average_capacity_bits: average,
        min_capacity_bits: minimum,
        perfect_cdc: perfect,
        basis_optimization: None,
    }
}

/// Smallest branch concurrence over reachable branches for one basis.
fn min_branch_concurrence(state: &PureState3, controller: Qubit, basis: &ControllerBasis) -> f64 {
    let mut worst = f64::INFINITY;
    for branch in controller_measure(state, controller, basis) {
        if let Some(post) = branch.post_state {
            worst = worst.min(entanglement::concurrence_pure2(&post));
        }
    }
    if worst.is_finite() {
        worst
    } else {
        0.0
    }
}

/// Exhaustive (theta, phi) grid search for the basis maximizing the
/// minimum branch concurrence.
///
/// The grid samples theta at i * (pi/2) / grid and phi at j * 2 pi / grid
/// for i, j in 0..grid, so doubling `grid` refines to a superset of the
/// previous points and the best score never decreases under refinement.
/// Ties keep the smallest theta, then the smallest phi; scores within
/// 1e-12 of the incumbent count as ties so rounding noise cannot defeat
/// the tie break.
pub fn optimize_controller_basis(
    state: &PureState3,
    controller: Qubit,
    grid: usize,
) -> Result<(ControllerBasis, f64)> {
    if grid < MIN_OPTIMIZER_GRID {
        return Err(Error::Parameter(format!(
            "optimizer grid must be at least {MIN_OPTIMIZER_GRID}, got {grid}"
        )));
    }
    let mut best_basis = ControllerBasis::computational();
    let mut best_score = f64::NEG_INFINITY;
    for i in 0..grid {
        let theta = FRAC_PI_2 * i as f64 / grid as f64;
        for j in 0..grid {
            let phi = 2.0 * PI * j as f64 / grid as f64;
            let basis = ControllerBasis { theta, phi };
            let score = min_branch_concurrence(state, controller, &basis);
            if score > best_score + 1e-12 {
                best_score = score;
                best_basis = basis;
            }
        }
    }
    Ok((best_basis, best_score))
}

/// Everything backing a usefulness verdict: the entanglement profile and
/// the best protocol run found by the basis optimizer.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CdcEvidence {
    pub profile: EntanglementProfile,
    pub report: CdcReport,
}

/// The operational criterion: a state is useful for controlled dense
/// coding exactly when it classifies as GHZ-class. The evidence bundles
/// the profile with a protocol run at the optimizer's best basis
/// (controller a, default grid), so the classification verdict and the
/// simulated channel can be compared downstream.
///
/// Corrections permute Bell outcomes without changing capacities, so the
/// evidence run uses the identity rule.
pub fn cdc_usable(state: &PureState3) -> Result<(bool, CdcEvidence)> {
    let profile = entanglement::profile(state)?;
    let verdict = profile.slocc_class == crate::entanglement::SloccClass::GhzClass;
    let (basis, score) =
        optimize_controller_basis(state, Qubit::A, DEFAULT_OPTIMIZER_GRID)?;
    let mut report = run_cdc(state, Qubit::A, &basis, &CorrectionRule::identity());
    report.basis_optimization =
        Some(BasisOptimization { grid: DEFAULT_OPTIMIZER_GRID, min_branch_concurrence: score });
    Ok((verdict, CdcEvidence { profile, report }))
}
