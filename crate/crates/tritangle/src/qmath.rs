//! Dense complex linear algebra over dimensions 2, 4 and 8.
//!
//! Everything is sized for at most three qubits: Kronecker products,
//! partial traces, a cyclic-Jacobi Hermitian eigensolver, PSD matrix
//! square roots and rank estimation. All operations are pure functions
//! and safe to call concurrently.

use num_complex::Complex64 as C64;

use crate::tolerances::{
    DENSITY_EIG_FLOOR, HERMITICITY_OP_TOL, HERMITICITY_TOL, JACOBI_MAX_SWEEPS, JACOBI_OFF_TOL,
    MATERIAL_NEG_EIG, NULL_SPECTRUM_REL, TRACE_TOL,
};
use crate::{Error, Result};

/// Dimensions the dense kernels accept.
pub const SUPPORTED_DIMS: [usize; 3] = [2, 4, 8];

fn check_dim(dim: usize) -> Result<()> {
    if SUPPORTED_DIMS.contains(&dim) {
        Ok(())
    } else {
        Err(Error::InvalidDimension(format!(
            "dimension {dim} not in {SUPPORTED_DIMS:?}"
        )))
    }
}

/// A square complex matrix with row-major storage, dimension 2, 4 or 8.
#[derive(Clone, Debug, PartialEq)]
pub struct SquareMatrix {
    dim: usize,
    data: Vec<C64>,
}

impl SquareMatrix {
    pub fn zeros(dim: usize) -> Result<Self> {
        check_dim(dim)?;
        Ok(Self { dim, data: vec![C64::new(0.0, 0.0); dim * dim] })
    }

    pub fn identity(dim: usize) -> Result<Self> {
        let mut m = Self::zeros(dim)?;
        for i in 0..dim {
            m.set(i, i, C64::new(1.0, 0.0));
        }
        Ok(m)
    }

    /// Builds a matrix from rows. Rejects ragged input and non-finite
    /// entries.
    pub fn from_rows(rows: &[Vec<C64>]) -> Result<Self> {
        let dim = rows.len();
        check_dim(dim)?;
        let mut m = Self::zeros(dim)?;
        for (i, row) in rows.iter().enumerate() {
            if row.len() != dim {
                return Err(Error::InvalidDimension(format!(
                    "row {i} has {} entries, expected {dim}",
                    row.len()
                )));
            }
            for (j, &v) in row.iter().enumerate() {
                if !v.re.is_finite() || !v.im.is_finite() {
                    return Err(Error::Contract(format!("non-finite entry at ({i}, {j})")));
                }
                m.set(i, j, v);
            }
        }
        Ok(m)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> C64 {
        self.data[i * self.dim + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: C64) {
        self.data[i * self.dim + j] = v;
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.dim != other.dim {
            return Err(Error::InvalidDimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.dim, self.dim, other.dim, other.dim
            )));
        }
        let n = self.dim;
        let mut out = Self::zeros(n)?;
        for i in 0..n {
            for k in 0..n {
                let aik = self.get(i, k);
                if aik.norm_sqr() == 0.0 {
                    continue;
                }
                for j in 0..n {
                    let v = out.get(i, j) + aik * other.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.dim != other.dim {
            return Err(Error::InvalidDimension("mismatched dimensions in add".into()));
        }
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(other.data.iter()) {
            *a += b;
        }
        Ok(out)
    }

    pub fn scale(&self, s: C64) -> Self {
        let mut out = self.clone();
        for a in out.data.iter_mut() {
            *a *= s;
        }
        out
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let n = self.dim;
        let mut out = self.clone();
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, self.get(j, i).conj());
            }
        }
        out
    }

    /// Entrywise complex conjugate (no transpose).
    pub fn conj(&self) -> Self {
        let mut out = self.clone();
        for a in out.data.iter_mut() {
            *a = a.conj();
        }
        out
    }

    pub fn trace(&self) -> C64 {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    /// Largest entrywise deviation from Hermiticity, max |m - m†|.
    pub fn hermiticity_defect(&self) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..self.dim {
            for j in i..self.dim {
                let d = (self.get(i, j) - self.get(j, i).conj()).norm();
                worst = worst.max(d);
            }
        }
        worst
    }

    /// Largest entrywise |self - other|.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.data
            .iter()
            .zip(other.data.iter())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Applies the matrix to a state vector of matching length.
    pub fn apply(&self, amps: &[C64]) -> Result<Vec<C64>> {
        if amps.len() != self.dim {
            return Err(Error::InvalidDimension(format!(
                "vector of length {} under a {}x{} matrix",
                amps.len(),
                self.dim,
                self.dim
            )));
        }
        let mut out = vec![C64::new(0.0, 0.0); self.dim];
        for (i, slot) in out.iter_mut().enumerate() {
            *slot = amps
                .iter()
                .enumerate()
                .map(|(j, amp)| self.get(i, j) * amp)
                .sum();
        }
        Ok(out)
    }
}

/// A validated density operator: Hermitian, unit trace, PSD spectrum,
/// dimension 2 or 4.
#[derive(Clone, Debug)]
pub struct DensityMatrix {
    mat: SquareMatrix,
}

impl DensityMatrix {
    pub fn new(mat: SquareMatrix) -> Result<Self> {
        if mat.dim() != 2 && mat.dim() != 4 {
            return Err(Error::InvalidDimension(format!(
                "density matrices have dimension 2 or 4, got {}",
                mat.dim()
            )));
        }
        let defect = mat.hermiticity_defect();
        if defect > HERMITICITY_TOL {
            return Err(Error::Contract(format!(
                "density matrix not Hermitian (defect {defect:.3e})"
            )));
        }
        let tr = mat.trace();
        if (tr.re - 1.0).abs() > TRACE_TOL || tr.im.abs() > TRACE_TOL {
            return Err(Error::Contract(format!("density matrix trace {tr} != 1")));
        }
        let (vals, _) = eig_hermitian(&mat)?;
        if let Some(&min) = vals.last() {
            if min < DENSITY_EIG_FLOOR {
                return Err(Error::Contract(format!(
                    "density matrix has negative eigenvalue {min:.3e}"
                )));
            }
        }
        Ok(Self { mat })
    }

    pub fn matrix(&self) -> &SquareMatrix {
        &self.mat
    }

    pub fn dim(&self) -> usize {
        self.mat.dim()
    }

    pub fn eigenvalues(&self) -> Result<Vec<f64>> {
        Ok(eig_hermitian(&self.mat)?.0)
    }

    /// Determinant of a dimension-2 density matrix; real by Hermiticity.
    pub fn det2(&self) -> Result<f64> {
        if self.dim() != 2 {
            return Err(Error::InvalidDimension("det2 needs dimension 2".into()));
        }
        Ok(self.mat.get(0, 0).re * self.mat.get(1, 1).re - self.mat.get(0, 1).norm_sqr())
    }
}

/// 2x2 identity.
pub fn identity2() -> SquareMatrix {
    SquareMatrix::identity(2).expect("dim 2 supported")
}

/// Pauli X, [[0, 1], [1, 0]].
pub fn pauli_x() -> SquareMatrix {
    let z = C64::new(0.0, 0.0);
    let one = C64::new(1.0, 0.0);
    SquareMatrix::from_rows(&[vec![z, one], vec![one, z]]).expect("static 2x2")
}

/// Standard Pauli Y, [[0, -i], [i, 0]]. This is the convention the
/// Wootters spin flip requires.
pub fn pauli_y() -> SquareMatrix {
    let z = C64::new(0.0, 0.0);
    SquareMatrix::from_rows(&[vec![z, C64::new(0.0, -1.0)], vec![C64::new(0.0, 1.0), z]])
        .expect("static 2x2")
}

/// Real antisymmetric Y variant, [[0, -1], [1, 0]] = -i * Y. The Bell-pair
/// correction maps are written with this matrix so that every Bell-state
/// bookkeeping identity holds with real signs.
pub fn pauli_y_real() -> SquareMatrix {
    let z = C64::new(0.0, 0.0);
    let one = C64::new(1.0, 0.0);
    SquareMatrix::from_rows(&[vec![z, -one], vec![one, z]]).expect("static 2x2")
}

/// Pauli Z, [[1, 0], [0, -1]].
pub fn pauli_z() -> SquareMatrix {
    let z = C64::new(0.0, 0.0);
    let one = C64::new(1.0, 0.0);
    SquareMatrix::from_rows(&[vec![one, z], vec![z, -one]]).expect("static 2x2")
}

/// Kronecker product. The result dimension `dim(a) * dim(b)` must stay
/// within the supported set.
pub fn kron(a: &SquareMatrix, b: &SquareMatrix) -> Result<SquareMatrix> {
    let (da, db) = (a.dim(), b.dim());
    let dim = da * db;
    if dim > 8 {
        return Err(Error::InvalidDimension(format!(
            "kron of {da}x{da} and {db}x{db} exceeds dimension 8"
        )));
    }
    let mut out = SquareMatrix::zeros(dim)?;
    for i in 0..da {
        for j in 0..da {
            let aij = a.get(i, j);
            for k in 0..db {
                for l in 0..db {
                    out.set(i * db + k, j * db + l, aij * b.get(k, l));
                }
            }
        }
    }
    Ok(out)
}

/// Inner product `<a|b>` of two amplitude vectors.
pub fn inner(a: &[C64], b: &[C64]) -> C64 {
    a.iter().zip(b.iter()).map(|(x, y)| x.conj() * y).sum()
}

/// Projector |amps><amps| as a dense matrix.
pub fn outer_projector(amps: &[C64]) -> Result<SquareMatrix> {
    let dim = amps.len();
    let mut out = SquareMatrix::zeros(dim)?;
    for i in 0..dim {
        for j in 0..dim {
            out.set(i, j, amps[i] * amps[j].conj());
        }
    }
    Ok(out)
}

/// Applies a 2x2 matrix to one qubit of an `n_qubits`-qubit amplitude
/// vector. Qubit 0 is the most significant bit of the amplitude index.
pub fn apply_single_qubit(
    m: &SquareMatrix,
    amps: &[C64],
    qubit: usize,
    n_qubits: usize,
) -> Result<Vec<C64>> {
    if m.dim() != 2 {
        return Err(Error::InvalidDimension("single-qubit operator must be 2x2".into()));
    }
    if qubit >= n_qubits || amps.len() != 1 << n_qubits {
        return Err(Error::InvalidDimension(format!(
            "qubit {qubit} of {n_qubits} on a vector of length {}",
            amps.len()
        )));
    }
    let stride = 1usize << (n_qubits - 1 - qubit);
    let mut out = amps.to_vec();
    for i in 0..amps.len() {
        if i & stride == 0 {
            let a0 = amps[i];
            let a1 = amps[i | stride];
            out[i] = m.get(0, 0) * a0 + m.get(0, 1) * a1;
            out[i | stride] = m.get(1, 0) * a0 + m.get(1, 1) * a1;
        }
    }
    Ok(out)
}

fn off_diagonal_norm(a: &SquareMatrix) -> f64 {
    let n = a.dim();
    let mut acc = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                acc += a.get(i, j).norm_sqr();
            }
        }
    }
    acc.sqrt()
}

/// Hermitian eigendecomposition by cyclic Jacobi rotations.
///
/// Returns eigenvalues sorted in descending order and the matching
/// orthonormal eigenvectors as columns, so that `m = V diag(vals) V†`.
/// Inputs must be Hermitian within `HERMITICITY_OP_TOL`.
pub fn eig_hermitian(m: &SquareMatrix) -> Result<(Vec<f64>, SquareMatrix)> {
    let defect = m.hermiticity_defect();
    if defect > HERMITICITY_OP_TOL {
        return Err(Error::Contract(format!(
            "eigensolver input not Hermitian (defect {defect:.3e})"
        )));
    }
    let n = m.dim();
    let mut a = m.clone();
    let mut v = SquareMatrix::identity(n)?;

    let mut converged = false;
    for _ in 0..JACOBI_MAX_SWEEPS {
        if off_diagonal_norm(&a) < JACOBI_OFF_TOL {
            converged = true;
            break;
        }
        for p in 0..n - 1 {
            for q in p + 1..n {
                let apq = a.get(p, q);
                let r = apq.norm();
                if r < 1e-300 {
                    continue;
                }
                let phase = apq / r;
                let app = a.get(p, p).re;
                let aqq = a.get(q, q).re;
                let tau = (aqq - app) / (2.0 * r);
                let t = if tau >= 0.0 {
                    1.0 / (tau + (1.0 + tau * tau).sqrt())
                } else {
                    1.0 / (tau - (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;

                // Unitary block U = diag(1, phase*) . [[c, s], [-s, c]],
                // chosen so that (U† A U)[p][q] = 0.
                let u_pp = C64::new(c, 0.0);
                let u_pq = C64::new(s, 0.0);
                let u_qp = -phase.conj() * s;
                let u_qq = phase.conj() * c;

                // A <- A U (columns p, q)
                for k in 0..n {
                    let akp = a.get(k, p);
                    let akq = a.get(k, q);
                    a.set(k, p, akp * u_pp + akq * u_qp);
                    a.set(k, q, akp * u_pq + akq * u_qq);
                }
                // A <- U† A (rows p, q)
                for k in 0..n {
                    let apk = a.get(p, k);
                    let aqk = a.get(q, k);
                    a.set(p, k, u_pp.conj() * apk + u_qp.conj() * aqk);
                    a.set(q, k, u_pq.conj() * apk + u_qq.conj() * aqk);
                }
                // V <- V U
                for k in 0..n {
                    let vkp = v.get(k, p);
                    let vkq = v.get(k, q);
                    v.set(k, p, vkp * u_pp + vkq * u_qp);
                    v.set(k, q, vkp * u_pq + vkq * u_qq);
                }
            }
        }
    }
    if !converged && off_diagonal_norm(&a) >= JACOBI_OFF_TOL {
        return Err(Error::NumericConsistency(
            "Jacobi eigensolver failed to converge".into(),
        ));
    }

    let mut order: Vec<usize> = (0..n).collect();
    let diag: Vec<f64> = (0..n).map(|i| a.get(i, i).re).collect();
    order.sort_by(|&i, &j| diag[j].total_cmp(&diag[i]));

    let vals: Vec<f64> = order.iter().map(|&i| diag[i]).collect();
    let mut vecs = SquareMatrix::zeros(n)?;
    for (col, &src) in order.iter().enumerate() {
        for row in 0..n {
            vecs.set(row, col, v.get(row, src));
        }
    }
    Ok((vals, vecs))
}

/// Principal square root of a Hermitian PSD matrix.
///
/// Eigenvalues in `[MATERIAL_NEG_EIG, 0)` are rounding noise and clamp to
/// zero, as do eigenvalues below `NULL_SPECTRUM_REL` of the largest one;
/// anything more negative is rejected.
pub fn sqrt_psd(m: &SquareMatrix) -> Result<SquareMatrix> {
    let (vals, vecs) = eig_hermitian(m)?;
    let largest = vals.first().copied().unwrap_or(0.0).max(0.0);
    if let Some(&min) = vals.last() {
        if min < MATERIAL_NEG_EIG {
            return Err(Error::Contract(format!(
                "matrix has materially negative eigenvalue {min:.3e}"
            )));
        }
    }
    let roots: Vec<f64> = vals
        .iter()
        .map(|&v| if v <= largest * NULL_SPECTRUM_REL { 0.0 } else { v.sqrt() })
        .collect();
    reassemble(&vecs, &roots)
}

/// V diag(vals) V† for eigenvector columns V.
fn reassemble(vecs: &SquareMatrix, vals: &[f64]) -> Result<SquareMatrix> {
    let n = vecs.dim();
    let mut out = SquareMatrix::zeros(n)?;
    for i in 0..n {
        for j in 0..n {
            let mut acc = C64::new(0.0, 0.0);
            for (k, &val) in vals.iter().enumerate() {
                acc += vecs.get(i, k) * val * vecs.get(j, k).conj();
            }
            out.set(i, j, acc);
        }
    }
    Ok(out)
}

/// Rank of a density matrix: the number of eigenvalues above
/// `tol * largest`.
pub fn rank_with_tol(rho: &DensityMatrix, tol: f64) -> Result<usize> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::Parameter(format!("rank tolerance must be positive, got {tol}")));
    }
    let vals = rho.eigenvalues()?;
    let largest = vals.first().copied().unwrap_or(0.0);
    if largest <= 0.0 {
        return Ok(0);
    }
    Ok(vals.iter().filter(|&&v| v > tol * largest).count())
}

/// Partial trace of a multi-qubit density operator or state projector.
///
/// `dims` lists the subsystem dimensions in tensor order (most significant
/// first) and must multiply to `rho.dim()`. `keep` selects the subsystems
/// to retain; it must be a nonempty proper subset. The reduced operator is
/// returned as a validated density matrix.
pub fn partial_trace(
    rho: &SquareMatrix,
    dims: &[usize],
    keep: &[usize],
) -> Result<DensityMatrix> {
    let total: usize = dims.iter().product();
    if total != rho.dim() || dims.iter().any(|&d| d < 2) {
        return Err(Error::InvalidDimension(format!(
            "subsystem dims {dims:?} do not describe a {}x{} operator",
            rho.dim(),
            rho.dim()
        )));
    }
    let mut keep: Vec<usize> = keep.to_vec();
    keep.sort_unstable();
    keep.dedup();
    if keep.is_empty() || keep.len() >= dims.len() || keep.iter().any(|&k| k >= dims.len()) {
        return Err(Error::InvalidDimension(format!(
            "keep set {keep:?} must be a nonempty proper subset of 0..{}",
            dims.len()
        )));
    }
    if rho.hermiticity_defect() > HERMITICITY_OP_TOL {
        return Err(Error::Contract("partial trace input not Hermitian".into()));
    }
    let tr = rho.trace();
    if (tr.re - 1.0).abs() > 1e-8 || tr.im.abs() > 1e-8 {
        return Err(Error::Contract(format!("partial trace input has trace {tr} != 1")));
    }

    let traced: Vec<usize> = (0..dims.len()).filter(|i| !keep.contains(i)).collect();
    let keep_dim: usize = keep.iter().map(|&i| dims[i]).product();
    let traced_dim: usize = traced.iter().map(|&i| dims[i]).product();

    // Stride of each subsystem in the flat index.
    let mut strides = vec![1usize; dims.len()];
    for i in (0..dims.len() - 1).rev() {
        strides[i] = strides[i + 1] * dims[i + 1];
    }
    let flat = |subset: &[usize], combo: usize| -> usize {
        let mut rem = combo;
        let mut idx = 0;
        for &s in subset.iter().rev() {
            idx += (rem % dims[s]) * strides[s];
            rem /= dims[s];
        }
        idx
    };

    let mut out = SquareMatrix::zeros(keep_dim)?;
    for ki in 0..keep_dim {
        let base_i = flat(&keep, ki);
        for kj in 0..keep_dim {
            let base_j = flat(&keep, kj);
            let mut acc = C64::new(0.0, 0.0);
            for t in 0..traced_dim {
                let off = flat(&traced, t);
                acc += rho.get(base_i + off, base_j + off);
            }
            out.set(ki, kj, acc);
        }
    }
    DensityMatrix::new(out)
}
