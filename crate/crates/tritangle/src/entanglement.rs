//! Entanglement measures and the SLOCC classifier.
//!
//! The 3-tangle is computed through two independent routes that must
//! agree: the degree-4 amplitude polynomial (the hyperdeterminant route),
//! and the residual of one-vs-rest entanglement minus the two pairwise
//! squared concurrences (the monogamy-residual route, which goes through
//! reduced density matrices and the Wootters spin-flip). The polynomial
//! route is primary; the residual route is the cross-check, since
//! mixed-state concurrence is the numerically noisier path.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64 as C64;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::qmath::{self, DensityMatrix, SquareMatrix};
use crate::states::{PureState2, PureState3, Qubit};
use crate::tolerances::{
    CLAMP_TOL, DEFAULT_RANK_TOL, DEFAULT_TANGLE_TOL, NULL_SPECTRUM_REL, ROUTE_MISMATCH_TOL,
};
use crate::{Error, Result};

/// The SLOCC class of a three-qubit pure state.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SloccClass {
    /// Fully product, a-b-c.
    Product,
    /// Exactly one qubit factors out; the payload names it.
    Biseparable(Qubit),
    /// All single-qubit ranks are 2 and the tangle vanishes.
    WClass,
    /// All single-qubit ranks are 2 and the tangle is nonvanishing.
    GhzClass,
}

impl fmt::Display for SloccClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SloccClass::Product => f.write_str("Product"),
            SloccClass::Biseparable(Qubit::A) => f.write_str("Biseparable(a|bc)"),
            SloccClass::Biseparable(Qubit::B) => f.write_str("Biseparable(b|ca)"),
            SloccClass::Biseparable(Qubit::C) => f.write_str("Biseparable(c|ab)"),
            SloccClass::WClass => f.write_str("WClass"),
            SloccClass::GhzClass => f.write_str("GhzClass"),
        }
    }
}

impl FromStr for SloccClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "Product" => Ok(SloccClass::Product),
            "Biseparable(a|bc)" => Ok(SloccClass::Biseparable(Qubit::A)),
            "Biseparable(b|ca)" => Ok(SloccClass::Biseparable(Qubit::B)),
            "Biseparable(c|ab)" => Ok(SloccClass::Biseparable(Qubit::C)),
            "WClass" => Ok(SloccClass::WClass),
            "GhzClass" => Ok(SloccClass::GhzClass),
            other => Err(Error::Spec(format!("unknown SLOCC class '{other}'"))),
        }
    }
}

impl Serialize for SloccClass {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for SloccClass {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(D::Error::custom)
    }
}

/// The aggregate entanglement record of a state: single-qubit ranks,
/// one-vs-rest entanglement of qubit a, the two pairwise squared
/// concurrences, the 3-tangle from both routes, and the SLOCC class.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct EntanglementProfile {
    pub rank_a: usize,
    pub rank_b: usize,
    pub rank_c: usize,
    /// 4 det(rho_a) = squared concurrence of the a|(bc) split.
    pub c2_a_bc: f64,
    /// Squared pairwise concurrence of the a-b reduction.
    pub c2_ab: f64,
    /// Squared pairwise concurrence of the a-c reduction.
    pub c2_ac: f64,
    /// 3-tangle by the amplitude-polynomial route.
    pub tau: f64,
    /// 3-tangle by the monogamy-residual route, kept for cross-checking.
    pub tau_ckw: f64,
    pub slocc_class: SloccClass,
}

impl EntanglementProfile {
    /// Re-validates a (possibly deserialized) profile against the type
    /// invariants.
    pub fn validate(&self) -> Result<()> {
        for (name, r) in [("rank_a", self.rank_a), ("rank_b", self.rank_b), ("rank_c", self.rank_c)]
        {
            if r != 1 && r != 2 {
                return Err(Error::Contract(format!("{name} = {r}, expected 1 or 2")));
            }
        }
        for (name, v) in [
            ("c2_a_bc", self.c2_a_bc),
            ("c2_ab", self.c2_ab),
            ("c2_ac", self.c2_ac),
            ("tau", self.tau),
            ("tau_ckw", self.tau_ckw),
        ] {
            if !v.is_finite() || !(0.0..=1.0).contains(&v) {
                return Err(Error::Contract(format!("{name} = {v} outside [0, 1]")));
            }
        }
        let residual = clamp_unit(self.c2_a_bc - self.c2_ab - self.c2_ac, "residual")?;
        if (self.tau - residual).abs() > DEFAULT_TANGLE_TOL {
            return Err(Error::NumericConsistency(format!(
                "tau {} disagrees with the concurrence residual {residual}",
                self.tau
            )));
        }
        Ok(())
    }
}

/// Clamps a measure to [0, 1], tolerating overshoot up to `CLAMP_TOL` on
/// either side; larger excursions are numeric failures, not clamp fodder.
fn clamp_unit(v: f64, what: &str) -> Result<f64> {
    if !v.is_finite() {
        return Err(Error::NumericConsistency(format!("{what} is not finite")));
    }
    if !(-CLAMP_TOL..=1.0 + CLAMP_TOL).contains(&v) {
        return Err(Error::NumericConsistency(format!("{what} = {v} strays outside [0, 1]")));
    }
    Ok(v.clamp(0.0, 1.0))
}

/// Concurrence of a two-qubit pure state: 2 |a00 a11 - a01 a10|.
/// Normalization is enforced by the `PureState2` type.
pub fn concurrence_pure2(state: &PureState2) -> f64 {
    let a = state.amps();
    let det = a[0] * a[3] - a[1] * a[2];
    (2.0 * det.norm()).min(1.0)
}

/// Wootters concurrence of a two-qubit density matrix:
/// max(0, l1 - l2 - l3 - l4) over the descending square roots of the
/// eigenvalues of rho * rho~, with rho~ = (Y ⊗ Y) rho* (Y ⊗ Y) in the
/// standard (imaginary) Y convention. Computed through the Hermitian form
/// sqrt(rho) rho~ sqrt(rho).
pub fn concurrence_mixed2(rho: &DensityMatrix) -> Result<f64> {
    if rho.dim() != 4 {
        return Err(Error::InvalidDimension(format!(
            "mixed concurrence needs a two-qubit density matrix, got dimension {}",
            rho.dim()
        )));
    }
    let yy = qmath::kron(&qmath::pauli_y(), &qmath::pauli_y())?;
    let flipped = yy.mul(&rho.matrix().conj())?.mul(&yy)?;
    let root = qmath::sqrt_psd(rho.matrix())?;
    let hermitian_form = root.mul(&flipped)?.mul(&root)?;
    // The product accumulates rounding; symmetrize before eigensolving.
    let sym = hermitian_form.add(&hermitian_form.adjoint())?.scale(C64::new(0.5, 0.0));
    let (vals, _) = qmath::eig_hermitian(&sym)?;
    let largest = vals.first().copied().unwrap_or(0.0).max(0.0);
    let lambdas: Vec<f64> = vals
        .iter()
        .map(|&v| if v <= largest * NULL_SPECTRUM_REL { 0.0 } else { v.sqrt() })
        .collect();
    let c = lambdas[0] - lambdas[1] - lambdas[2] - lambdas[3];
    clamp_unit(c.max(0.0), "mixed concurrence")
}

/// One-vs-rest entanglement of the pivot qubit: 4 det(rho_pivot),
/// clamped to [0, 1].
pub fn c2_one_vs_rest(state: &PureState3, pivot: Qubit) -> Result<f64> {
    let rho = state.reduced_single(pivot)?;
    clamp_unit(4.0 * rho.det2()?, "one-vs-rest entanglement")
}

/// 3-tangle by the amplitude-polynomial route: 4 |d1 - 2 d2 + 4 d3| over
/// the eight amplitudes.
pub fn tangle_hyperdet(state: &PureState3) -> f64 {
    let a = |i: usize| state.amp(i);
    // Diagonal pairs: products of an amplitude and its bitwise complement.
    let p1 = a(0b000) * a(0b111);
    let p2 = a(0b001) * a(0b110);
    let p3 = a(0b010) * a(0b101);
    let p4 = a(0b100) * a(0b011);

    let d1 = p1 * p1 + p2 * p2 + p3 * p3 + p4 * p4;
    let d2 = p1 * p2 + p1 * p3 + p1 * p4 + p2 * p3 + p2 * p4 + p3 * p4;
    let d3 = a(0b000) * a(0b110) * a(0b101) * a(0b011)
        + a(0b111) * a(0b001) * a(0b010) * a(0b100);

    let tau = 4.0 * (d1 - d2 * 2.0 + d3 * 4.0).norm();
    tau.clamp(0.0, 1.0)
}

fn ckw_components(state: &PureState3, pivot: Qubit) -> Result<(f64, f64, f64)> {
    let c2_pivot = c2_one_vs_rest(state, pivot)?;
    let (o1, o2) = pivot.others();
    let c_1 = concurrence_mixed2(&state.reduced_pair(pivot, o1)?)?;
    let c_2 = concurrence_mixed2(&state.reduced_pair(pivot, o2)?)?;
    Ok((c2_pivot, c_1 * c_1, c_2 * c_2))
}

/// 3-tangle by the monogamy-residual route:
/// C^2_pivot(rest) - C^2_pivot,other1 - C^2_pivot,other2.
pub fn tangle_ckw(state: &PureState3, pivot: Qubit) -> Result<f64> {
    let (one_rest, pair1, pair2) = ckw_components(state, pivot)?;
    clamp_unit(one_rest - pair1 - pair2, "tangle residual")
}

/// Ranks of the three single-qubit reductions.
pub fn rank_profile(state: &PureState3, tol: f64) -> Result<(usize, usize, usize)> {
    let rank = |q: Qubit| -> Result<usize> {
        qmath::rank_with_tol(&state.reduced_single(q)?, tol)
    };
    Ok((rank(Qubit::A)?, rank(Qubit::B)?, rank(Qubit::C)?))
}

fn classify_from_ranks(
    ranks: (usize, usize, usize),
    tangle: f64,
    tangle_tol: f64,
) -> Result<SloccClass> {
    let flags = [ranks.0 == 1, ranks.1 == 1, ranks.2 == 1];
    match flags.iter().filter(|&&f| f).count() {
        3 => Ok(SloccClass::Product),
        1 => {
            let q = Qubit::ALL[flags.iter().position(|&f| f).expect("one flag set")];
            Ok(SloccClass::Biseparable(q))
        }
        0 => {
            if tangle > tangle_tol {
                Ok(SloccClass::GhzClass)
            } else {
                Ok(SloccClass::WClass)
            }
        }
        _ => Err(Error::Internal(format!(
            "rank profile {ranks:?} cannot occur for a pure state"
        ))),
    }
}

/// Classifies a state with explicit tolerances: all ranks 1 is Product,
/// exactly one rank 1 is Biseparable with that qubit split off, all ranks
/// 2 splits on the tangle threshold into GhzClass / WClass.
pub fn classify_with(state: &PureState3, rank_tol: f64, tangle_tol: f64) -> Result<SloccClass> {
    let ranks = rank_profile(state, rank_tol)?;
    classify_from_ranks(ranks, tangle_hyperdet(state), tangle_tol)
}

/// `classify_with` at the default tolerances.
pub fn classify(state: &PureState3) -> Result<SloccClass> {
    classify_with(state, DEFAULT_RANK_TOL, DEFAULT_TANGLE_TOL)
}

/// Computes the full entanglement profile. The polynomial tangle is the
/// reported `tau`; the residual route is recomputed and the two must agree
/// within `ROUTE_MISMATCH_TOL`.
pub fn profile(state: &PureState3) -> Result<EntanglementProfile> {
    let (rank_a, rank_b, rank_c) = rank_profile(state, DEFAULT_RANK_TOL)?;
    let (c2_a_bc, c2_ab, c2_ac) = ckw_components(state, Qubit::A)?;
    let tau = tangle_hyperdet(state);
    let tau_ckw = clamp_unit(c2_a_bc - c2_ab - c2_ac, "tangle residual")?;
    if (tau - tau_ckw).abs() > ROUTE_MISMATCH_TOL {
        return Err(Error::NumericConsistency(format!(
            "tangle routes disagree: polynomial {tau} vs residual {tau_ckw}"
        )));
    }
    let slocc_class = classify_from_ranks((rank_a, rank_b, rank_c), tau, DEFAULT_TANGLE_TOL)?;
    Ok(EntanglementProfile {
        rank_a,
        rank_b,
        rank_c,
        c2_a_bc,
        c2_ab,
        c2_ac,
        tau,
        tau_ckw,
        slocc_class,
    })
}

/// Local-unitary application helper used by invariance checks: applies
/// one 2x2 unitary per qubit.
pub fn apply_local_unitaries(
    state: &PureState3,
    ua: &SquareMatrix,
    ub: &SquareMatrix,
    uc: &SquareMatrix,
) -> Result<PureState3> {
    state
        .apply_one_qubit(ua, Qubit::A)?
        .apply_one_qubit(ub, Qubit::B)?
        .apply_one_qubit(uc, Qubit::C)
}
