//! Constructors and registry for the supported three-qubit state
//! families, plus a raw-amplitude ingestion path with validation.
//!
//! Amplitude indexing follows |abc>: index = 4*bit_a + 2*bit_b + bit_c,
//! with qubit `a` the most significant bit. Two-qubit states use the same
//! convention on their pair, index = 2*bit_first + bit_second.

use std::collections::BTreeMap;
use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64 as C64;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::qmath::{self, SquareMatrix};
use crate::tolerances::{NORM_FLOOR, NORM_TOL, RENORM_WARN_TOL};
use crate::{Error, Result};

const INV_SQRT2: f64 = std::f64::consts::FRAC_1_SQRT_2;

fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

/// One of the three qubits, in the fixed |abc> ordering.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Qubit {
    A,
    B,
    C,
}

impl Qubit {
    pub const ALL: [Qubit; 3] = [Qubit::A, Qubit::B, Qubit::C];

    /// Position in the tensor order (a = 0 is most significant).
    pub fn index(self) -> usize {
        match self {
            Qubit::A => 0,
            Qubit::B => 1,
            Qubit::C => 2,
        }
    }

    /// The remaining two qubits, in ascending order.
    pub fn others(self) -> (Qubit, Qubit) {
        match self {
            Qubit::A => (Qubit::B, Qubit::C),
            Qubit::B => (Qubit::A, Qubit::C),
            Qubit::C => (Qubit::A, Qubit::B),
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Qubit::A => "a",
            Qubit::B => "b",
            Qubit::C => "c",
        }
    }
}

impl FromStr for Qubit {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "a" => Ok(Qubit::A),
            "b" => Ok(Qubit::B),
            "c" => Ok(Qubit::C),
            other => Err(Error::Parameter(format!("unknown qubit label '{other}'"))),
        }
    }
}

impl fmt::Display for Qubit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Sign selecting the + or - member of a Bell pair family.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

/// The axis label k in the single-qubit operator applied to qubit c.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PauliAxis {
    X,
    Y,
    Z,
}

impl PauliAxis {
    pub const ALL: [PauliAxis; 3] = [PauliAxis::X, PauliAxis::Y, PauliAxis::Z];

    /// The correction-convention matrix for this axis: X and Z are the
    /// usual Pauli matrices, Y is the real antisymmetric variant so that
    /// all Bell-pair mappings stay sign-exact.
    pub fn correction_matrix(self) -> SquareMatrix {
        match self {
            PauliAxis::X => qmath::pauli_x(),
            PauliAxis::Y => qmath::pauli_y_real(),
            PauliAxis::Z => qmath::pauli_z(),
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            PauliAxis::X => "x",
            PauliAxis::Y => "y",
            PauliAxis::Z => "z",
        }
    }
}

impl FromStr for PauliAxis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "x" => Ok(PauliAxis::X),
            "y" => Ok(PauliAxis::Y),
            "z" => Ok(PauliAxis::Z),
            other => Err(Error::Parameter(format!("unknown axis '{other}', expected x, y or z"))),
        }
    }
}

/// The four maximally entangled two-qubit Bell states.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum BellState {
    #[serde(rename = "phi+")]
    PhiPlus,
    #[serde(rename = "phi-")]
    PhiMinus,
    #[serde(rename = "psi+")]
    PsiPlus,
    #[serde(rename = "psi-")]
    PsiMinus,
}

impl BellState {
    pub const ALL: [BellState; 4] =
        [BellState::PhiPlus, BellState::PhiMinus, BellState::PsiPlus, BellState::PsiMinus];

    /// Amplitudes over |00>, |01>, |10>, |11>.
    pub fn amplitudes(self) -> [C64; 4] {
        let r = INV_SQRT2;
        match self {
            BellState::PhiPlus => [c(r, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(r, 0.0)],
            BellState::PhiMinus => [c(r, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(-r, 0.0)],
            BellState::PsiPlus => [c(0.0, 0.0), c(r, 0.0), c(r, 0.0), c(0.0, 0.0)],
            BellState::PsiMinus => [c(0.0, 0.0), c(r, 0.0), c(-r, 0.0), c(0.0, 0.0)],
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            BellState::PhiPlus => "phi+",
            BellState::PhiMinus => "phi-",
            BellState::PsiPlus => "psi+",
            BellState::PsiMinus => "psi-",
        }
    }
}

impl fmt::Display for BellState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

fn check_finite(amps: &[C64]) -> Result<()> {
    if amps.iter().any(|a| !a.re.is_finite() || !a.im.is_finite()) {
        return Err(Error::Parameter("non-finite amplitude".into()));
    }
    Ok(())
}

/// A normalized two-qubit pure state.
#[derive(Clone, Debug, PartialEq)]
pub struct PureState2 {
    amps: [C64; 4],
}

impl PureState2 {
    pub fn new(amps: [C64; 4]) -> Result<Self> {
        check_finite(&amps)?;
        let norm_sqr: f64 = amps.iter().map(|a| a.norm_sqr()).sum();
        if (norm_sqr.sqrt() - 1.0).abs() > NORM_TOL {
            return Err(Error::Contract(format!(
                "two-qubit state has norm {}, expected 1",
                norm_sqr.sqrt()
            )));
        }
        Ok(Self { amps })
    }

    pub fn from_bell(bell: BellState) -> Self {
        Self { amps: bell.amplitudes() }
    }

    pub fn amps(&self) -> &[C64; 4] {
        &self.amps
    }

    pub fn amp(&self, index: usize) -> C64 {
        self.amps[index]
    }

    /// Squared overlap |<other|self>|^2.
    pub fn fidelity(&self, other: &PureState2) -> f64 {
        qmath::inner(&other.amps, &self.amps).norm_sqr()
    }
}

impl Serialize for PureState2 {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let pairs: Vec<[f64; 2]> = self.amps.iter().map(|a| [a.re, a.im]).collect();
        pairs.serialize(s)
    }
}

impl<'de> Deserialize<'de> for PureState2 {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let pairs = <Vec<[f64; 2]>>::deserialize(d)?;
        if pairs.len() != 4 {
            return Err(D::Error::custom(format!("expected 4 amplitudes, got {}", pairs.len())));
        }
        let mut amps = [c(0.0, 0.0); 4];
        for (a, p) in amps.iter_mut().zip(pairs) {
            *a = c(p[0], p[1]);
        }
        PureState2::new(amps).map_err(D::Error::custom)
    }
}

/// A normalized three-qubit pure state, the universal input of the crate.
#[derive(Clone, Debug, PartialEq)]
pub struct PureState3 {
    amps: [C64; 8],
}

impl PureState3 {
    /// Wraps amplitudes that are already normalized to within `NORM_TOL`.
    pub fn new(amps: [C64; 8]) -> Result<Self> {
        check_finite(&amps)?;
        let norm_sqr: f64 = amps.iter().map(|a| a.norm_sqr()).sum();
        if (norm_sqr.sqrt() - 1.0).abs() > NORM_TOL {
            return Err(Error::Contract(format!(
                "three-qubit state has norm {}, expected 1",
                norm_sqr.sqrt()
            )));
        }
        Ok(Self { amps })
    }

    /// Normalizes a raw amplitude list. Returns the state and a flag that
    /// is set when the input norm deviated from 1 by more than
    /// `RENORM_WARN_TOL`. Lists with norm below `NORM_FLOOR` are rejected.
    pub fn from_unnormalized(amps: [C64; 8]) -> Result<(Self, bool)> {
        check_finite(&amps)?;
        let norm_sqr: f64 = amps.iter().map(|a| a.norm_sqr()).sum();
        if !norm_sqr.is_finite() {
            return Err(Error::NumericConsistency(
                "amplitude norm overflowed floating point".into(),
            ));
        }
        let norm = norm_sqr.sqrt();
        if norm < NORM_FLOOR {
            return Err(Error::Parameter(format!(
                "amplitude list has norm {norm:.3e}, below the {NORM_FLOOR:.0e} floor"
            )));
        }
        let mut out = amps;
        for a in out.iter_mut() {
            *a /= norm;
        }
        Ok((Self { amps: out }, (norm - 1.0).abs() > RENORM_WARN_TOL))
    }

    pub fn amps(&self) -> &[C64; 8] {
        &self.amps
    }

    pub fn amp(&self, index: usize) -> C64 {
        self.amps[index]
    }

    /// Amplitude of |abc> for the given bits.
    pub fn amp_bits(&self, a: u8, b: u8, cbit: u8) -> C64 {
        self.amps[(a as usize) * 4 + (b as usize) * 2 + cbit as usize]
    }

    /// |psi><psi| as an 8x8 matrix.
    pub fn projector(&self) -> SquareMatrix {
        qmath::outer_projector(&self.amps).expect("dimension 8 supported")
    }

    /// Reduced density matrix over the given qubits.
    pub fn reduced(&self, keep: &[Qubit]) -> Result<qmath::DensityMatrix> {
        let idx: Vec<usize> = keep.iter().map(|q| q.index()).collect();
        qmath::partial_trace(&self.projector(), &[2, 2, 2], &idx)
    }

    /// Single-qubit reduction.
    pub fn reduced_single(&self, q: Qubit) -> Result<qmath::DensityMatrix> {
        self.reduced(&[q])
    }

    /// Two-qubit reduction over the pair, kept in ascending qubit order.
    pub fn reduced_pair(&self, x: Qubit, y: Qubit) -> Result<qmath::DensityMatrix> {
        if x == y {
            return Err(Error::InvalidDimension("pair reduction needs two distinct qubits".into()));
        }
        let (lo, hi) =
            if x.index() < y.index() { (x, y) } else { (y, x) };
        self.reduced(&[lo, hi])
    }

    /// Applies a 2x2 operator to one qubit.
    pub fn apply_one_qubit(&self, m: &SquareMatrix, q: Qubit) -> Result<PureState3> {
        let out = qmath::apply_single_qubit(m, &self.amps, q.index(), 3)?;
        let mut amps = [c(0.0, 0.0); 8];
        amps.copy_from_slice(&out);
        PureState3::new(amps)
    }
}

impl Serialize for PureState3 {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let pairs: Vec<[f64; 2]> = self.amps.iter().map(|a| [a.re, a.im]).collect();
        pairs.serialize(s)
    }
}

impl<'de> Deserialize<'de> for PureState3 {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let pairs = <Vec<[f64; 2]>>::deserialize(d)?;
        if pairs.len() != 8 {
            return Err(D::Error::custom(format!("expected 8 amplitudes, got {}", pairs.len())));
        }
        let mut amps = [c(0.0, 0.0); 8];
        for (a, p) in amps.iter_mut().zip(pairs) {
            *a = c(p[0], p[1]);
        }
        PureState3::new(amps).map_err(D::Error::custom)
    }
}

fn normalized(mut amps: [C64; 8]) -> Result<PureState3> {
    let norm: f64 = amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
    if norm < NORM_FLOOR {
        return Err(Error::Internal("constructor produced a zero state".into()));
    }
    for a in amps.iter_mut() {
        *a /= norm;
    }
    PureState3::new(amps)
}

/// The standard GHZ state, (|000> + |111>)/sqrt(2).
pub fn ghz() -> PureState3 {
    let mut amps = [c(0.0, 0.0); 8];
    amps[0] = c(INV_SQRT2, 0.0);
    amps[7] = c(INV_SQRT2, 0.0);
    PureState3::new(amps).expect("static state")
}

/// The standard W state, (|001> + |010> + |100>)/sqrt(3).
pub fn w() -> PureState3 {
    let r = 1.0 / 3.0f64.sqrt();
    let mut amps = [c(0.0, 0.0); 8];
    amps[1] = c(r, 0.0);
    amps[2] = c(r, 0.0);
    amps[4] = c(r, 0.0);
    PureState3::new(amps).expect("static state")
}

/// Superposition of a Bell pair and its single-qubit image on qubit c,
/// controlled by qubit a:
///
/// sin(eps) |0>_a (seed)_bc + cos(eps) |1>_a (op_c seed)_bc
///
/// where `op` is the correction-convention matrix for `axis`. The chi
/// families seed with phi+/phi-, the xi families with psi+/psi-.
pub fn controlled_bell_pair(seed: BellState, axis: PauliAxis, epsilon: f64) -> Result<PureState3> {
    if !epsilon.is_finite() || !(0.0..=FRAC_PI_2).contains(&epsilon) {
        return Err(Error::Parameter(format!(
            "epsilon must lie in [0, pi/2], got {epsilon}"
        )));
    }
    let (alpha, beta) = (epsilon.sin(), epsilon.cos());
    let bell = seed.amplitudes();
    let flipped = qmath::apply_single_qubit(&axis.correction_matrix(), &bell, 1, 2)?;
    let mut amps = [c(0.0, 0.0); 8];
    for bc in 0..4 {
        amps[bc] = bell[bc] * alpha;
        amps[4 + bc] = flipped[bc] * beta;
    }
    normalized(amps)
}

/// chi family: Bell-pair superposition seeded with phi+ (plus sign) or
/// phi- (minus sign).
pub fn chi(sign: Sign, axis: PauliAxis, epsilon: f64) -> Result<PureState3> {
    let seed = match sign {
        Sign::Plus => BellState::PhiPlus,
        Sign::Minus => BellState::PhiMinus,
    };
    controlled_bell_pair(seed, axis, epsilon)
}

/// xi family: Bell-pair superposition seeded with psi+ or psi-.
pub fn xi(sign: Sign, axis: PauliAxis, epsilon: f64) -> Result<PureState3> {
    let seed = match sign {
        Sign::Plus => BellState::PsiPlus,
        Sign::Minus => BellState::PsiMinus,
    };
    controlled_bell_pair(seed, axis, epsilon)
}

/// General GHZ-class state
///
/// sqrt(K) (cos(delta) |000> + sin(delta) e^{i phi} |u>_a |v>_b |w>_c)
///
/// with |u> = cos(alpha)|0> + sin(alpha)|1> and similarly for beta, gamma,
/// and K the normalization factor
/// 1 / (1 + 2 cos(delta) sin(delta) cos(alpha) cos(beta) cos(gamma) cos(phi)).
///
/// Ranges: delta in (0, pi/4], alpha/beta/gamma in (0, pi/2], phi in
/// [0, 2 pi). Boundary values on the closed ends are accepted, open ends
/// rejected.
pub fn ghz_class(delta: f64, alpha: f64, beta: f64, gamma: f64, phi: f64) -> Result<PureState3> {
    for (name, v) in [("delta", delta), ("alpha", alpha), ("beta", beta), ("gamma", gamma), ("phi", phi)] {
        if !v.is_finite() {
            return Err(Error::Parameter(format!("{name} must be finite")));
        }
    }
    if !(delta > 0.0 && delta <= FRAC_PI_4) {
        return Err(Error::Parameter(format!("delta must lie in (0, pi/4], got {delta}")));
    }
    for (name, v) in [("alpha", alpha), ("beta", beta), ("gamma", gamma)] {
        if !(v > 0.0 && v <= FRAC_PI_2) {
            return Err(Error::Parameter(format!("{name} must lie in (0, pi/2], got {v}")));
        }
    }
    if !(0.0..2.0 * PI).contains(&phi) {
        return Err(Error::Parameter(format!("phi must lie in [0, 2 pi), got {phi}")));
    }

    let k_inv = 1.0
        + 2.0 * delta.cos() * delta.sin() * alpha.cos() * beta.cos() * gamma.cos() * phi.cos();
    let root_k = (1.0 / k_inv).sqrt();
    let phase = C64::from_polar(1.0, phi);
    let ka = [alpha.cos(), alpha.sin()];
    let kb = [beta.cos(), beta.sin()];
    let kc = [gamma.cos(), gamma.sin()];

    let mut amps = [c(0.0, 0.0); 8];
    for a in 0..2 {
        for b in 0..2 {
            for cc in 0..2 {
                let mut amp = phase * (delta.sin() * ka[a] * kb[b] * kc[cc]);
                if a == 0 && b == 0 && cc == 0 {
                    amp += delta.cos();
                }
                amps[a * 4 + b * 2 + cc] = amp * root_k;
            }
        }
    }
    normalized(amps)
}

/// W-class state sqrt(a)|001> + sqrt(b)|010> + sqrt(c)|100> + sqrt(d)|000>
/// with d = 1 - (a + b + c) >= 0 and a, b, c > 0. A d that undershoots
/// zero by no more than 1e-12 (rounding on an intended-exact sum) clamps
/// to zero.
pub fn w_class(a: f64, b: f64, cc: f64) -> Result<PureState3> {
    for (name, v) in [("a", a), ("b", b), ("c", cc)] {
        if !v.is_finite() || v <= 0.0 {
            return Err(Error::Parameter(format!("{name} must be a positive probability, got {v}")));
        }
    }
    let d = 1.0 - (a + b + cc);
    if d < -1e-12 {
        return Err(Error::Parameter(format!(
            "a + b + c = {} exceeds 1 (d = {d:.3e})",
            a + b + cc
        )));
    }
    let d = d.max(0.0);
    let mut amps = [c(0.0, 0.0); 8];
    amps[1] = c(a.sqrt(), 0.0);
    amps[2] = c(b.sqrt(), 0.0);
    amps[4] = c(cc.sqrt(), 0.0);
    amps[0] = c(d.sqrt(), 0.0);
    normalized(amps)
}

/// Maximal-slice state (|000> + cos(alpha)|110> + sin(alpha)|111>)/sqrt(2)
/// for alpha in [0, pi].
pub fn maximal_slice(alpha: f64) -> Result<PureState3> {
    if !alpha.is_finite() || !(0.0..=PI).contains(&alpha) {
        return Err(Error::Parameter(format!("alpha must lie in [0, pi], got {alpha}")));
    }
    let mut amps = [c(0.0, 0.0); 8];
    amps[0] = c(INV_SQRT2, 0.0);
    amps[6] = c(alpha.cos() * INV_SQRT2, 0.0);
    amps[7] = c(alpha.sin() * INV_SQRT2, 0.0);
    normalized(amps)
}

/// Symmetric state p|000> + q|111> + r|001> + s|110> with real ordered
/// coefficients p >= q >= r >= s >= 0 and unit norm within 1e-10.
pub fn symmetric(p: f64, q: f64, r: f64, s: f64) -> Result<PureState3> {
    for (name, v) in [("p", p), ("q", q), ("r", r), ("s", s)] {
        if !v.is_finite() {
            return Err(Error::Parameter(format!("{name} must be finite")));
        }
    }
    if !(p >= q && q >= r && r >= s && s >= 0.0) {
        return Err(Error::Parameter(format!(
            "coefficients must satisfy p >= q >= r >= s >= 0, got ({p}, {q}, {r}, {s})"
        )));
    }
    let norm_sqr = p * p + q * q + r * r + s * s;
    if (norm_sqr - 1.0).abs() > 1e-10 {
        return Err(Error::Parameter(format!(
            "p^2 + q^2 + r^2 + s^2 = {norm_sqr} must equal 1"
        )));
    }
    let mut amps = [c(0.0, 0.0); 8];
    amps[0] = c(p, 0.0);
    amps[7] = c(q, 0.0);
    amps[1] = c(r, 0.0);
    amps[6] = c(s, 0.0);
    normalized(amps)
}

/// Weighted GHZ form L (|000> + l |111>) with L = 1/sqrt(1 + l^2), l > 0.
pub fn type_one(l: f64) -> Result<PureState3> {
    if !l.is_finite() || l <= 0.0 {
        return Err(Error::Parameter(format!("l must be positive, got {l}")));
    }
    let norm = (1.0 + l * l).sqrt();
    let mut amps = [c(0.0, 0.0); 8];
    amps[0] = c(1.0 / norm, 0.0);
    amps[7] = c(l / norm, 0.0);
    normalized(amps)
}

/// Unitarily transformed GHZ form
///
/// (|u>_ab |0>_c + e^{i eps} |00>_ab |1>_c)/sqrt(2)
///
/// with |u> = (|10> + sqrt(n) e^{i alpha} |01>)/sqrt(n + 1) and n > 0.
pub fn type_two(n: f64, alpha: f64, epsilon: f64) -> Result<PureState3> {
    if !n.is_finite() || n <= 0.0 {
        return Err(Error::Parameter(format!("n must be positive, got {n}")));
    }
    if !alpha.is_finite() || !epsilon.is_finite() {
        return Err(Error::Parameter("alpha and epsilon must be finite".into()));
    }
    let root = (n + 1.0).sqrt();
    let mut amps = [c(0.0, 0.0); 8];
    // |u>_ab |0>_c
    amps[4] = c(INV_SQRT2 / root, 0.0); // |100>
    amps[2] = C64::from_polar(n.sqrt() / root * INV_SQRT2, alpha); // |010>
    // e^{i eps} |001>
    amps[1] = C64::from_polar(INV_SQRT2, epsilon);
    normalized(amps)
}

/// The two-qubit unitary that carries GHZ onto the `type_two` state:
///
/// |00> -> |u>, |01> -> |11>, |10> -> |u_perp>, |11> -> e^{i eps} |00>
///
/// with |u_perp> = (sqrt(n) e^{-i alpha} |10> - |01>)/sqrt(n + 1).
pub fn u_ab(n: f64, alpha: f64, epsilon: f64) -> Result<SquareMatrix> {
    if !n.is_finite() || n <= 0.0 {
        return Err(Error::Parameter(format!("n must be positive, got {n}")));
    }
    if !alpha.is_finite() || !epsilon.is_finite() {
        return Err(Error::Parameter("alpha and epsilon must be finite".into()));
    }
    let root = (n + 1.0).sqrt();
    let mut m = SquareMatrix::zeros(4)?;
    // Column 0: |u>
    m.set(1, 0, C64::from_polar(n.sqrt() / root, alpha));
    m.set(2, 0, c(1.0 / root, 0.0));
    // Column 1: |11>
    m.set(3, 1, c(1.0, 0.0));
    // Column 2: |u_perp>
    m.set(2, 2, C64::from_polar(n.sqrt() / root, -alpha));
    m.set(1, 2, c(-1.0 / root, 0.0));
    // Column 3: e^{i eps} |00>
    m.set(0, 3, C64::from_polar(1.0, epsilon));
    Ok(m)
}

/// A parameter in a family spec: a number, or a text token (the axis k).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ParamValue {
    Number(f64),
    Text(String),
}

/// The kind of value a family parameter takes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParamKind {
    Number,
    Axis,
}

/// Static description of one family parameter.
#[derive(Clone, Copy, Debug)]
pub struct ParamInfo {
    pub name: &'static str,
    pub kind: ParamKind,
    pub doc: &'static str,
}

macro_rules! params {
    ($(($name:literal, $kind:ident, $doc:literal)),* $(,)?) => {
        &[$(ParamInfo { name: $name, kind: ParamKind::$kind, doc: $doc }),*]
    };
}

const BELL_PAIR_PARAMS: &[ParamInfo] = params![
    ("epsilon", Number, "mixing angle in [0, pi/2]"),
    ("k", Axis, "axis of the qubit-c operator, one of x, y, z"),
];

/// Registry of the constructible state families.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    ChiPlus,
    ChiMinus,
    XiPlus,
    XiMinus,
    Ghz,
    W,
    GhzClass,
    WClass,
    Ms,
    Symmetric,
    Type1,
    Type2,
}

impl Family {
    pub const ALL: [Family; 12] = [
        Family::ChiPlus,
        Family::ChiMinus,
        Family::XiPlus,
        Family::XiMinus,
        Family::Ghz,
        Family::W,
        Family::GhzClass,
        Family::WClass,
        Family::Ms,
        Family::Symmetric,
        Family::Type1,
        Family::Type2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::ChiPlus => "chi_plus",
            Family::ChiMinus => "chi_minus",
            Family::XiPlus => "xi_plus",
            Family::XiMinus => "xi_minus",
            Family::Ghz => "ghz",
            Family::W => "w",
            Family::GhzClass => "ghz_class",
            Family::WClass => "w_class",
            Family::Ms => "ms",
            Family::Symmetric => "symmetric",
            Family::Type1 => "type1",
            Family::Type2 => "type2",
        }
    }

    pub fn from_name(name: &str) -> Result<Family> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == name)
            .ok_or_else(|| {
                let known: Vec<&str> = Family::ALL.iter().map(|f| f.name()).collect();
                Error::Spec(format!("unknown family '{name}', known: {}", known.join(", ")))
            })
    }

    pub fn describe(self) -> &'static str {
        match self {
            Family::ChiPlus => "Bell-pair superposition seeded with phi+",
            Family::ChiMinus => "Bell-pair superposition seeded with phi-",
            Family::XiPlus => "Bell-pair superposition seeded with psi+",
            Family::XiMinus => "Bell-pair superposition seeded with psi-",
            Family::Ghz => "standard GHZ state",
            Family::W => "standard W state",
            Family::GhzClass => "general GHZ-class state with three product kets",
            Family::WClass => "general W-class state over {|000>, |001>, |010>, |100>}",
            Family::Ms => "maximal-slice state",
            Family::Symmetric => "symmetric state over {|000>, |111>, |001>, |110>}",
            Family::Type1 => "weighted GHZ form L(|000> + l|111>)",
            Family::Type2 => "unitarily transformed GHZ form",
        }
    }

    pub fn params(self) -> &'static [ParamInfo] {
        match self {
            Family::ChiPlus | Family::ChiMinus | Family::XiPlus | Family::XiMinus => {
                BELL_PAIR_PARAMS
            }
            Family::Ghz | Family::W => params![],
            Family::GhzClass => params![
                ("delta", Number, "weight angle in (0, pi/4]"),
                ("alpha", Number, "qubit-a ket angle in (0, pi/2]"),
                ("beta", Number, "qubit-b ket angle in (0, pi/2]"),
                ("gamma", Number, "qubit-c ket angle in (0, pi/2]"),
                ("phi", Number, "relative phase in [0, 2 pi)"),
            ],
            Family::WClass => params![
                ("a", Number, "|001> weight, positive"),
                ("b", Number, "|010> weight, positive"),
                ("c", Number, "|100> weight, positive; a + b + c <= 1"),
            ],
            Family::Ms => params![("alpha", Number, "slice angle in [0, pi]")],
            Family::Symmetric => params![
                ("p", Number, "|000> amplitude"),
                ("q", Number, "|111> amplitude"),
                ("r", Number, "|001> amplitude"),
                ("s", Number, "|110> amplitude; p >= q >= r >= s >= 0, unit norm"),
            ],
            Family::Type1 => params![("l", Number, "|111> weight, positive")],
            Family::Type2 => params![
                ("n", Number, "weight ratio, positive"),
                ("alpha", Number, "relative phase inside the ab pair"),
                ("epsilon", Number, "phase of the |001> branch"),
            ],
        }
    }

    /// Builds the family state from a parameter map. Every documented
    /// parameter must be present and no others.
    pub fn build(self, params: &BTreeMap<String, ParamValue>) -> Result<PureState3> {
        let infos = self.params();
        for key in params.keys() {
            if !infos.iter().any(|i| i.name == key) {
                return Err(Error::Spec(format!(
                    "family '{}' does not take parameter '{key}'",
                    self.name()
                )));
            }
        }
        let num = |name: &str| -> Result<f64> {
            match params.get(name) {
                Some(ParamValue::Number(v)) => Ok(*v),
                Some(ParamValue::Text(t)) => Err(Error::Spec(format!(
                    "parameter '{name}' of '{}' must be a number, got '{t}'",
                    self.name()
                ))),
                None => Err(Error::Spec(format!(
                    "family '{}' requires parameter '{name}'",
                    self.name()
                ))),
            }
        };
        let axis = |name: &str| -> Result<PauliAxis> {
            match params.get(name) {
                Some(ParamValue::Text(t)) => t.parse().map_err(|_| {
                    Error::Spec(format!("parameter '{name}' must be one of x, y, z, got '{t}'"))
                }),
                Some(ParamValue::Number(v)) => Err(Error::Spec(format!(
                    "parameter '{name}' of '{}' must be x, y or z, got {v}",
                    self.name()
                ))),
                None => Err(Error::Spec(format!(
                    "family '{}' requires parameter '{name}'",
                    self.name()
                ))),
            }
        };
        match self {
            Family::ChiPlus => chi(Sign::Plus, axis("k")?, num("epsilon")?),
            Family::ChiMinus => chi(Sign::Minus, axis("k")?, num("epsilon")?),
            Family::XiPlus => xi(Sign::Plus, axis("k")?, num("epsilon")?),
            Family::XiMinus => xi(Sign::Minus, axis("k")?, num("epsilon")?),
            Family::Ghz => Ok(ghz()),
            Family::W => Ok(w()),
            Family::GhzClass => ghz_class(
                num("delta")?,
                num("alpha")?,
                num("beta")?,
                num("gamma")?,
                num("phi")?,
            ),
            Family::WClass => w_class(num("a")?, num("b")?, num("c")?),
            Family::Ms => maximal_slice(num("alpha")?),
            Family::Symmetric => symmetric(num("p")?, num("q")?, num("r")?, num("s")?),
            Family::Type1 => type_one(num("l")?),
            Family::Type2 => type_two(num("n")?, num("alpha")?, num("epsilon")?),
        }
    }
}

/// A state specification: either a named family with parameters, or an
/// explicit amplitude list in |abc> index order.
#[derive(Clone, Debug, PartialEq)]
pub enum StateSpec {
    Family { family: Family, params: BTreeMap<String, ParamValue> },
    Amplitudes(Vec<C64>),
}

/// Result of building a `StateSpec`: the normalized state, plus a flag
/// that is set when explicit amplitudes needed renormalization beyond
/// `RENORM_WARN_TOL`.
#[derive(Clone, Debug)]
pub struct ParsedState {
    pub state: PureState3,
    pub renormalized: bool,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SpecDoc {
    family: Option<String>,
    params: Option<BTreeMap<String, ParamValue>>,
    amplitudes: Option<Vec<[f64; 2]>>,
}

impl StateSpec {
    /// Parses the JSON document form:
    /// `{"family": name, "params": {...}}` or `{"amplitudes": [[re, im] x 8]}`.
    pub fn from_json(doc: &str) -> Result<StateSpec> {
        let doc: SpecDoc = serde_json::from_str(doc)
            .map_err(|e| Error::Spec(format!("malformed state spec: {e}")))?;
        match (doc.family, doc.amplitudes) {
            (Some(_), Some(_)) => Err(Error::Spec(
                "state spec must give either a family or amplitudes, not both".into(),
            )),
            (None, None) => Err(Error::Spec(
                "state spec must give a family or an amplitudes list".into(),
            )),
            (Some(name), None) => Ok(StateSpec::Family {
                family: Family::from_name(&name)?,
                params: doc.params.unwrap_or_default(),
            }),
            (None, Some(pairs)) => {
                if doc.params.is_some() {
                    return Err(Error::Spec("amplitude specs take no params".into()));
                }
                if pairs.len() != 8 {
                    return Err(Error::Spec(format!(
                        "amplitude list must have 8 entries, got {}",
                        pairs.len()
                    )));
                }
                Ok(StateSpec::Amplitudes(pairs.iter().map(|p| c(p[0], p[1])).collect()))
            }
        }
    }

    /// Builds the state described by this spec.
    pub fn build(&self) -> Result<ParsedState> {
        match self {
            StateSpec::Family { family, params } => Ok(ParsedState {
                state: family.build(params)?,
                renormalized: false,
            }),
            StateSpec::Amplitudes(list) => {
                let mut amps = [c(0.0, 0.0); 8];
                amps.copy_from_slice(list);
                check_finite(&amps).map_err(|_| Error::Spec("non-finite amplitude".into()))?;
                let (state, renormalized) = PureState3::from_unnormalized(amps)?;
                Ok(ParsedState { state, renormalized })
            }
        }
    }
}

/// Convenience wrapper: parse a JSON state spec and build the state.
pub fn parse_state_spec(doc: &str) -> Result<ParsedState> {
    StateSpec::from_json(doc)?.build()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_amp(state: &PureState3, idx: usize, re: f64, im: f64) {
        let a = state.amp(idx);
        assert!(
            (a.re - re).abs() < 1e-12 && (a.im - im).abs() < 1e-12,
            "amp[{idx}] = {a}, expected {re} + {im}i"
        );
    }

    #[test]
    fn chi_x_equal_weights() {
        // sin(eps) = cos(eps) = 1/sqrt(2) gives (|000>+|011>+|110>+|101>)/2.
        let s = chi(Sign::Plus, PauliAxis::X, FRAC_PI_4).unwrap();
        assert_amp(&s, 0b000, 0.5, 0.0);
        assert_amp(&s, 0b011, 0.5, 0.0);
        assert_amp(&s, 0b110, 0.5, 0.0);
        assert_amp(&s, 0b101, 0.5, 0.0);
        assert_amp(&s, 0b001, 0.0, 0.0);
    }

    #[test]
    fn chi_z_beta_zero_branch() {
        let s = chi(Sign::Plus, PauliAxis::Z, FRAC_PI_2).unwrap();
        assert_amp(&s, 0b000, INV_SQRT2, 0.0);
        assert_amp(&s, 0b011, INV_SQRT2, 0.0);
    }

    #[test]
    fn chi_y_cos_branch() {
        // eps = 0 leaves (|101> - |110>)/sqrt(2).
        let s = chi(Sign::Plus, PauliAxis::Y, 0.0).unwrap();
        assert_amp(&s, 0b101, INV_SQRT2, 0.0);
        assert_amp(&s, 0b110, -INV_SQRT2, 0.0);
    }

    #[test]
    fn xi_families() {
        let s = xi(Sign::Plus, PauliAxis::Z, FRAC_PI_2).unwrap();
        assert_amp(&s, 0b001, INV_SQRT2, 0.0);
        assert_amp(&s, 0b010, INV_SQRT2, 0.0);

        // |1> ⊗ X_c psi- = (|100> - |111>)/sqrt(2).
        let s = xi(Sign::Minus, PauliAxis::X, 0.0).unwrap();
        assert_amp(&s, 0b100, INV_SQRT2, 0.0);
        assert_amp(&s, 0b111, -INV_SQRT2, 0.0);

        // Equal superposition of |001>, |010>, |100>, |111> with +1/2 each.
        let s = xi(Sign::Plus, PauliAxis::X, FRAC_PI_4).unwrap();
        for idx in [0b001, 0b010, 0b100, 0b111] {
            assert_amp(&s, idx, 0.5, 0.0);
        }
    }

    #[test]
    fn chi_epsilon_range() {
        assert!(matches!(chi(Sign::Plus, PauliAxis::X, -0.1), Err(Error::Parameter(_))));
        assert!(matches!(chi(Sign::Plus, PauliAxis::X, FRAC_PI_2 + 0.1), Err(Error::Parameter(_))));
    }

    #[test]
    fn bell_branch_structure() {
        // Projecting qubit a onto |0> recovers the seed Bell pair, onto
        // |1> its axis image, for every family and axis.
        for (sign, seed) in [
            (Sign::Plus, BellState::PhiPlus),
            (Sign::Minus, BellState::PhiMinus),
        ] {
            for axis in PauliAxis::ALL {
                let s = chi(sign, axis, 0.3).unwrap();
                let bell = seed.amplitudes();
                let flipped =
                    qmath::apply_single_qubit(&axis.correction_matrix(), &bell, 1, 2).unwrap();
                for bc in 0..4 {
                    let a0 = s.amp(bc);
                    let a1 = s.amp(4 + bc);
                    assert!((a0 - bell[bc] * 0.3f64.sin()).norm() < 1e-12);
                    assert!((a1 - flipped[bc] * 0.3f64.cos()).norm() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn ghz_class_reduces_to_ghz() {
        let s = ghz_class(FRAC_PI_4, FRAC_PI_2, FRAC_PI_2, FRAC_PI_2, 0.0).unwrap();
        assert_amp(&s, 0, INV_SQRT2, 0.0);
        assert_amp(&s, 7, INV_SQRT2, 0.0);
    }

    #[test]
    fn ghz_class_amp000() {
        let s = ghz_class(FRAC_PI_4, PI / 3.0, FRAC_PI_2, FRAC_PI_2, 0.0).unwrap();
        assert!((s.amp(0).re - INV_SQRT2).abs() < 1e-12);
    }

    #[test]
    fn ghz_class_boundaries() {
        assert!(ghz_class(FRAC_PI_4, FRAC_PI_2, FRAC_PI_2, FRAC_PI_2, 0.0).is_ok());
        assert!(matches!(
            ghz_class(0.0, FRAC_PI_2, FRAC_PI_2, FRAC_PI_2, 0.0),
            Err(Error::Parameter(_))
        ));
        assert!(matches!(
            ghz_class(FRAC_PI_4, 0.0, FRAC_PI_2, FRAC_PI_2, 0.0),
            Err(Error::Parameter(_))
        ));
        assert!(matches!(
            ghz_class(FRAC_PI_4, FRAC_PI_2, FRAC_PI_2, FRAC_PI_2, 2.0 * PI),
            Err(Error::Parameter(_))
        ));
        // Random valid parameters always produce unit norm.
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..100 {
            let s = ghz_class(
                rng.gen_range(1e-3..FRAC_PI_4),
                rng.gen_range(1e-3..FRAC_PI_2),
                rng.gen_range(1e-3..FRAC_PI_2),
                rng.gen_range(1e-3..FRAC_PI_2),
                rng.gen_range(0.0..2.0 * PI - 1e-9),
            )
            .unwrap();
            let norm: f64 = s.amps().iter().map(|a| a.norm_sqr()).sum();
            assert!((norm - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn w_class_cases() {
        let third = 1.0 / 3.0;
        let s = w_class(third, third, third).unwrap();
        let expect = 1.0 / 3.0f64.sqrt();
        assert!((s.amp(1).re - expect).abs() < 1e-9);
        assert!((s.amp(2).re - expect).abs() < 1e-9);
        assert!((s.amp(4).re - expect).abs() < 1e-9);

        let s = w_class(0.25, 0.25, 0.25).unwrap();
        assert!((s.amp(0).re - 0.5).abs() < 1e-12);

        let norm: f64 = w_class(0.5, 0.25, 0.25).unwrap().amps().iter().map(|a| a.norm_sqr()).sum();
        assert!((norm - 1.0).abs() < 1e-12);

        assert!(matches!(w_class(0.5, 0.5, 0.5), Err(Error::Parameter(_))));
        assert!(matches!(w_class(0.0, 0.5, 0.4), Err(Error::Parameter(_))));
    }

    #[test]
    fn maximal_slice_cases() {
        let s = maximal_slice(FRAC_PI_2).unwrap();
        assert_amp(&s, 0, INV_SQRT2, 0.0);
        assert_amp(&s, 7, INV_SQRT2, 0.0);

        let s = maximal_slice(0.0).unwrap();
        assert_amp(&s, 0, INV_SQRT2, 0.0);
        assert_amp(&s, 6, INV_SQRT2, 0.0);

        let s = maximal_slice(FRAC_PI_4).unwrap();
        assert_amp(&s, 0, INV_SQRT2, 0.0);
        assert_amp(&s, 6, 0.5, 0.0);
        assert_amp(&s, 7, 0.5, 0.0);

        assert!(matches!(maximal_slice(-0.1), Err(Error::Parameter(_))));
        assert!(matches!(maximal_slice(PI + 0.1), Err(Error::Parameter(_))));
    }

    #[test]
    fn symmetric_cases() {
        let s = symmetric(INV_SQRT2, INV_SQRT2, 0.0, 0.0).unwrap();
        assert_amp(&s, 0, INV_SQRT2, 0.0);
        assert_amp(&s, 7, INV_SQRT2, 0.0);

        // Ordering violation.
        assert!(matches!(symmetric(0.5, 0.3, 0.4, 0.1), Err(Error::Parameter(_))));
        // Norm violation.
        assert!(matches!(symmetric(0.9, 0.5, 0.3, 0.1), Err(Error::Parameter(_))));
    }

    #[test]
    fn type_one_cases() {
        let s = type_one(1.0).unwrap();
        assert_amp(&s, 0, INV_SQRT2, 0.0);
        assert_amp(&s, 7, INV_SQRT2, 0.0);

        let s = type_one(2.0).unwrap();
        assert!((s.amp(0).re - 1.0 / 5.0f64.sqrt()).abs() < 1e-12);
        assert!((s.amp(7).re - 2.0 / 5.0f64.sqrt()).abs() < 1e-12);

        // l = 0.5 equals l = 2 after flipping every qubit.
        let small = type_one(0.5).unwrap();
        let big = type_one(2.0).unwrap();
        for idx in 0..8 {
            assert!((small.amp(idx) - big.amp(7 - idx)).norm() < 1e-12);
        }

        assert!(matches!(type_one(0.0), Err(Error::Parameter(_))));
        assert!(matches!(type_one(-1.0), Err(Error::Parameter(_))));
    }

    #[test]
    fn type_two_expansion() {
        let s = type_two(1.0, 0.0, 0.0).unwrap();
        assert_amp(&s, 0b100, 0.25f64.sqrt() * INV_SQRT2 * 2.0f64.sqrt(), 0.0);
        // (|100> + |010> + sqrt(2)|001>)/2
        assert!((s.amp(0b100).re - 0.5).abs() < 1e-12);
        assert!((s.amp(0b010).re - 0.5).abs() < 1e-12);
        assert!((s.amp(0b001).re - INV_SQRT2).abs() < 1e-12);
        assert!(matches!(type_two(0.0, 0.0, 0.0), Err(Error::Parameter(_))));
    }

    #[test]
    fn u_ab_is_unitary_and_converts_ghz() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
        for _ in 0..100 {
            let n = rng.gen_range(0.05..20.0);
            let alpha = rng.gen_range(-PI..PI);
            let eps = rng.gen_range(-PI..PI);
            let u = u_ab(n, alpha, eps).unwrap();
            let id = u.mul(&u.adjoint()).unwrap();
            assert!(id.max_abs_diff(&SquareMatrix::identity(4).unwrap()) < 1e-12);

            // (U ⊗ I) GHZ equals the direct construction, globally.
            let big = qmath::kron(&u, &qmath::identity2()).unwrap();
            let moved = big.apply(ghz().amps()).unwrap();
            let direct = type_two(n, alpha, eps).unwrap();
            for (m, d) in moved.iter().zip(direct.amps()) {
                assert!((m - d).norm() < 1e-12, "global equality violated");
            }
        }
    }

    #[test]
    fn u_ab_columns_orthogonal() {
        let u = u_ab(1.0, 0.0, 0.0).unwrap();
        let mut col0 = Vec::new();
        let mut col2 = Vec::new();
        for i in 0..4 {
            col0.push(u.get(i, 0));
            col2.push(u.get(i, 2));
        }
        assert!(qmath::inner(&col0, &col2).norm() < 1e-14);
    }

    #[test]
    fn constructors_have_unit_norm() {
        let states = [
            chi(Sign::Plus, PauliAxis::Y, 0.7).unwrap(),
            xi(Sign::Minus, PauliAxis::Z, 1.1).unwrap(),
            ghz_class(0.3, 0.4, 0.5, 0.6, 1.0).unwrap(),
            w_class(0.2, 0.3, 0.4).unwrap(),
            maximal_slice(2.0).unwrap(),
            symmetric(0.8, 0.5, 0.3, (1.0f64 - 0.98).sqrt()).unwrap(),
            type_one(3.7).unwrap(),
            type_two(2.5, 0.3, 1.9).unwrap(),
            ghz(),
            w(),
        ];
        for s in states {
            let norm: f64 = s.amps().iter().map(|a| a.norm_sqr()).sum();
            assert!((norm.sqrt() - 1.0).abs() < NORM_TOL);
        }
    }

    #[test]
    fn spec_family_dispatch() {
        let parsed = parse_state_spec(r#"{"family":"ms","params":{"alpha":1.5707963267948966}}"#)
            .unwrap();
        let direct = maximal_slice(FRAC_PI_2).unwrap();
        for i in 0..8 {
            assert!((parsed.state.amp(i) - direct.amp(i)).norm() < 1e-12);
        }
        assert!(!parsed.renormalized);
    }

    #[test]
    fn spec_explicit_amplitudes() {
        let r = INV_SQRT2;
        let doc = format!(
            r#"{{"amplitudes":[[{r},0],[0,0],[0,0],[0,0],[0,0],[0,0],[0,0],[{r},0]]}}"#
        );
        let parsed = parse_state_spec(&doc).unwrap();
        assert!((parsed.state.amp(0).re - r).abs() < 1e-12);
        assert!((parsed.state.amp(7).re - r).abs() < 1e-12);
        assert!(!parsed.renormalized);

        // Unnormalized input renormalizes with the warning flag set.
        let doc = r#"{"amplitudes":[[1,0],[0,0],[0,0],[0,0],[0,0],[0,0],[0,0],[1,0]]}"#;
        let parsed = parse_state_spec(doc).unwrap();
        assert!(parsed.renormalized);
        assert!((parsed.state.amp(0).re - INV_SQRT2).abs() < 1e-12);
    }

    #[test]
    fn spec_error_paths() {
        assert!(matches!(parse_state_spec("not json"), Err(Error::Spec(_))));
        assert!(matches!(parse_state_spec(r#"{"family":"nope"}"#), Err(Error::Spec(_))));
        assert!(matches!(
            parse_state_spec(r#"{"family":"ms"}"#),
            Err(Error::Spec(_))
        ));
        assert!(matches!(
            parse_state_spec(r#"{"family":"ms","params":{"alpha":9.0}}"#),
            Err(Error::Parameter(_))
        ));
        assert!(matches!(
            parse_state_spec(r#"{"family":"ms","params":{"alpha":1.0,"junk":2.0}}"#),
            Err(Error::Spec(_))
        ));
        assert!(matches!(
            parse_state_spec(r#"{"amplitudes":[[0,0],[0,0],[0,0],[0,0],[0,0],[0,0],[0,0],[0,0]]}"#),
            Err(Error::Parameter(_))
        ));
        assert!(matches!(
            parse_state_spec(r#"{"amplitudes":[[1,0]]}"#),
            Err(Error::Spec(_))
        ));
        // Finite inputs whose squared norm overflows are a numeric failure.
        let doc = r#"{"amplitudes":[[1e308,0],[1e308,0],[0,0],[0,0],[0,0],[0,0],[0,0],[0,0]]}"#;
        assert!(matches!(parse_state_spec(doc), Err(Error::NumericConsistency(_))));
    }

    #[test]
    fn qubit_helpers() {
        assert_eq!(Qubit::A.others(), (Qubit::B, Qubit::C));
        assert_eq!(Qubit::B.others(), (Qubit::A, Qubit::C));
        assert_eq!(Qubit::C.others(), (Qubit::A, Qubit::B));
        assert_eq!("b".parse::<Qubit>().unwrap(), Qubit::B);
        assert!("d".parse::<Qubit>().is_err());
    }
}
