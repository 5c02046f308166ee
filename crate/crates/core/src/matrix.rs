//! Dense complex linear algebra: general square matrices, Hermitian matrices,
//! pure states, density matrices and Hermitian eigendecompositions.
//!
//! All values are immutable after construction; every operation is a pure
//! function, so everything here is safe to share across threads.

use num_complex::Complex64;

use crate::eigen;
use crate::error::{Error, Result};

/// Hermiticity residual accepted at construction time.
pub const HERMITICITY_TOL: f64 = 1e-12;
/// Default tolerance for positive-semidefinite verdicts.
pub const DEFAULT_PSD_TOL: f64 = 1e-10;
/// Default tolerance for diagonality checks.
pub const DEFAULT_DIAG_TOL: f64 = 1e-12;

const STATE_NORM_TOL: f64 = 1e-10;
const DENSITY_TRACE_TOL: f64 = 1e-10;
const DENSITY_PSD_TOL: f64 = 1e-10;
const IMAG_RESIDUAL_LIMIT: f64 = 1e-9;

pub(crate) const C_ZERO: Complex64 = Complex64::new(0.0, 0.0);
pub(crate) const C_ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Dense complex square matrix, row-major storage.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    dim: usize,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    /// Zero matrix. Panics if `dim == 0`.
    pub fn zeros(dim: usize) -> Self {
        assert!(dim >= 1, "matrix dimension must be at least 1");
        Self {
            dim,
            data: vec![C_ZERO; dim * dim],
        }
    }

    /// Identity matrix. Panics if `dim == 0`.
    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.set(i, i, C_ONE);
        }
        m
    }

    /// Builds a matrix from rows; the grid must be square and nonempty.
    pub fn from_rows(rows: &[Vec<Complex64>]) -> Result<Self> {
        let dim = rows.len();
        if dim == 0 {
            return Err(Error::InvalidDimension(0));
        }
        let mut data = Vec::with_capacity(dim * dim);
        for row in rows {
            if row.len() != dim {
                return Err(Error::Malformed {
                    reason: format!("row of length {} in a {}-dimensional matrix", row.len(), dim),
                });
            }
            data.extend_from_slice(row);
        }
        Ok(Self { dim, data })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.data[i * self.dim + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: Complex64) {
        self.data[i * self.dim + j] = value;
    }

    pub(crate) fn data(&self) -> &[Complex64] {
        &self.data
    }

    pub(crate) fn from_data(dim: usize, data: Vec<Complex64>) -> Self {
        debug_assert_eq!(data.len(), dim * dim);
        Self { dim, data }
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|z| z.re.is_finite() && z.im.is_finite())
    }

    /// Dense product `self * other`.
    pub fn matmul(&self, other: &Self) -> Result<Self> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = C_ZERO;
                for k in 0..n {
                    acc += self.data[i * n + k] * other.data[k * n + j];
                }
                out.data[i * n + j] = acc;
            }
        }
        Ok(out)
    }

    /// Matrix-vector product.
    pub fn mul_vec(&self, v: &[Complex64]) -> Result<Vec<Complex64>> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: v.len(),
            });
        }
        let n = self.dim;
        let mut out = vec![C_ZERO; n];
        for i in 0..n {
            let mut acc = C_ZERO;
            for j in 0..n {
                acc += self.data[i * n + j] * v[j];
            }
            out[i] = acc;
        }
        Ok(out)
    }

    /// Kronecker product with row-major index convention
    /// `(i*dimN + k, j*dimN + l) -> M[i][j] * N[k][l]`.
    pub fn kron(&self, other: &Self) -> Self {
        let (dm, dn) = (self.dim, other.dim);
        let dim = dm * dn;
        let mut out = Self::zeros(dim);
        for i in 0..dm {
            for j in 0..dm {
                let mij = self.data[i * dm + j];
                for k in 0..dn {
                    for l in 0..dn {
                        out.data[(i * dn + k) * dim + (j * dn + l)] = mij * other.data[k * dn + l];
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(x, y)| x + y)
            .collect();
        Ok(Self { dim: self.dim, data })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(x, y)| x - y)
            .collect();
        Ok(Self { dim: self.dim, data })
    }

    pub fn scale(&self, factor: f64) -> Self {
        Self {
            dim: self.dim,
            data: self.data.iter().map(|z| z * factor).collect(),
        }
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> Self {
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                out.data[j * n + i] = self.data[i * n + j].conj();
            }
        }
        out
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.dim).map(|i| self.data[i * self.dim + i]).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Largest entry magnitude.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Largest magnitude of `M[i][j] - conj(M[j][i])`.
    pub fn hermiticity_residual(&self) -> f64 {
        let n = self.dim;
        let mut worst = 0.0f64;
        for i in 0..n {
            for j in i..n {
                let r = (self.data[i * n + j] - self.data[j * n + i].conj()).norm();
                worst = worst.max(r);
            }
        }
        worst
    }

    /// True iff every off-diagonal magnitude is at most `tol`.
    pub fn is_diagonal(&self, tol: f64) -> bool {
        let n = self.dim;
        for i in 0..n {
            for j in 0..n {
                if i != j && self.data[i * n + j].norm() > tol {
                    return false;
                }
            }
        }
        true
    }
}

/// Complex square matrix that is exactly Hermitian in its stored form.
///
/// Construction accepts input whose Hermiticity residual is at most `1e-12`
/// and then symmetrizes it via `(M + M†)/2`, so `get(i, j)` always equals
/// the conjugate of `get(j, i)` bit for bit.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianMatrix {
    inner: ComplexMatrix,
}

impl HermitianMatrix {
    pub fn new(m: ComplexMatrix) -> Result<Self> {
        if !m.is_finite() {
            return Err(Error::NonFinite);
        }
        let residual = m.hermiticity_residual();
        if residual > HERMITICITY_TOL {
            return Err(Error::NotHermitian { residual });
        }
        let n = m.dim();
        let mut sym = ComplexMatrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                let v = (m.get(i, j) + m.get(j, i).conj()) * 0.5;
                sym.set(i, j, v);
            }
        }
        Ok(Self { inner: sym })
    }

    pub fn from_rows(rows: &[Vec<Complex64>]) -> Result<Self> {
        Self::new(ComplexMatrix::from_rows(rows)?)
    }

    /// Convenience constructor for real symmetric data.
    pub fn from_real_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let complex_rows: Vec<Vec<Complex64>> = rows
            .iter()
            .map(|row| row.iter().map(|&x| Complex64::new(x, 0.0)).collect())
            .collect();
        Self::from_rows(&complex_rows)
    }

    pub fn identity(dim: usize) -> Self {
        Self {
            inner: ComplexMatrix::identity(dim),
        }
    }

    pub fn zeros(dim: usize) -> Self {
        Self {
            inner: ComplexMatrix::zeros(dim),
        }
    }

    pub fn dim(&self) -> usize {
        self.inner.dim()
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.inner.get(i, j)
    }

    pub fn as_matrix(&self) -> &ComplexMatrix {
        &self.inner
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.inner
    }

    /// General product; the result of two Hermitian factors need not be
    /// Hermitian, so this returns a plain matrix.
    pub fn matmul(&self, other: &Self) -> Result<ComplexMatrix> {
        self.inner.matmul(&other.inner)
    }

    /// `H * H`, re-validated Hermitian.
    pub fn square(&self) -> Self {
        let prod = self
            .inner
            .matmul(&self.inner)
            .expect("square of a matrix with itself");
        Self::new(prod).expect("square of a Hermitian matrix is Hermitian")
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let sum = self.inner.add(&other.inner)?;
        Ok(Self::new(sum).expect("sum of Hermitian matrices is Hermitian"))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        let diff = self.inner.sub(&other.inner)?;
        Ok(Self::new(diff).expect("difference of Hermitian matrices is Hermitian"))
    }

    /// Scaling by a real factor preserves Hermiticity.
    pub fn scale(&self, factor: f64) -> Self {
        Self::new(self.inner.scale(factor)).expect("real scaling preserves Hermiticity")
    }

    pub fn kron(&self, other: &Self) -> Self {
        Self::new(self.inner.kron(&other.inner))
            .expect("Kronecker product of Hermitian matrices is Hermitian")
    }

    /// Real trace (the stored diagonal has exactly zero imaginary part).
    pub fn trace(&self) -> f64 {
        self.inner.trace().re
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.inner.frobenius_norm()
    }

    pub fn is_diagonal(&self, tol: f64) -> bool {
        self.inner.is_diagonal(tol)
    }

    /// Squared Frobenius norm of the off-diagonal part.
    pub fn offdiagonal_norm_sqr(&self) -> f64 {
        let n = self.dim();
        let mut acc = 0.0;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    acc += self.get(i, j).norm_sqr();
                }
            }
        }
        acc
    }

    /// Full eigendecomposition via cyclic two-sided rotations.
    /// Eigenvalues come out ascending with eigenvector columns matched.
    pub fn eig(&self) -> Result<Spectrum> {
        let (eigenvalues, eigenvectors) = eigen::eig_hermitian(&self.inner)?;
        Ok(Spectrum {
            eigenvalues,
            eigenvectors,
        })
    }

    /// True iff the smallest eigenvalue is at least `-tol`.
    pub fn is_psd(&self, tol: f64) -> Result<bool> {
        Ok(self.eig()?.min_eigenvalue() >= -tol)
    }

    /// `<s|M|s>`; errors when the imaginary residual exceeds `1e-9`.
    pub fn expectation(&self, state: &PureState) -> Result<f64> {
        if state.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                left: self.dim(),
                right: state.dim(),
            });
        }
        let mv = self.inner.mul_vec(state.amplitudes())?;
        let value: Complex64 = state
            .amplitudes()
            .iter()
            .zip(&mv)
            .map(|(s, m)| s.conj() * m)
            .sum();
        check_real(value)
    }

    /// `Tr(M rho)`; errors when the imaginary residual exceeds `1e-9`.
    pub fn expectation_mixed(&self, rho: &DensityMatrix) -> Result<f64> {
        if rho.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                left: self.dim(),
                right: rho.dim(),
            });
        }
        let n = self.dim();
        let r = rho.matrix();
        let mut acc = C_ZERO;
        for i in 0..n {
            for j in 0..n {
                acc += self.get(i, j) * r.get(j, i);
            }
        }
        check_real(acc)
    }
}

fn check_real(value: Complex64) -> Result<f64> {
    if value.im.abs() > IMAG_RESIDUAL_LIMIT {
        return Err(Error::ImaginaryResidual {
            residual: value.im.abs(),
        });
    }
    Ok(value.re)
}

/// Eigendecomposition of a Hermitian matrix: ascending real eigenvalues and
/// an orthonormal eigenvector per column, column `k` pairing with value `k`.
#[derive(Debug, Clone)]
pub struct Spectrum {
    eigenvalues: Vec<f64>,
    eigenvectors: ComplexMatrix,
}

impl Spectrum {
    pub fn dim(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    pub fn eigenvectors(&self) -> &ComplexMatrix {
        &self.eigenvectors
    }

    pub fn min_eigenvalue(&self) -> f64 {
        self.eigenvalues[0]
    }

    pub fn max_eigenvalue(&self) -> f64 {
        self.eigenvalues[self.eigenvalues.len() - 1]
    }

    /// Column `k` as an amplitude vector.
    pub fn eigenvector(&self, k: usize) -> Vec<Complex64> {
        (0..self.dim()).map(|i| self.eigenvectors.get(i, k)).collect()
    }

    /// The eigenvector of the smallest eigenvalue as a normalized state.
    pub fn ground_state(&self) -> Result<PureState> {
        PureState::new(self.eigenvector(0))
    }
}

/// Normalized complex amplitude vector.
#[derive(Debug, Clone, PartialEq)]
pub struct PureState {
    amplitudes: Vec<Complex64>,
}

impl PureState {
    pub fn new(amplitudes: Vec<Complex64>) -> Result<Self> {
        if amplitudes.is_empty() {
            return Err(Error::InvalidDimension(0));
        }
        if !amplitudes.iter().all(|z| z.re.is_finite() && z.im.is_finite()) {
            return Err(Error::NonFinite);
        }
        let norm = amplitudes.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        let deviation = (norm - 1.0).abs();
        if deviation > STATE_NORM_TOL {
            return Err(Error::NotNormalized { deviation });
        }
        Ok(Self { amplitudes })
    }

    /// Computational basis state `|index>`.
    pub fn basis_state(dim: usize, index: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidDimension(0));
        }
        if index >= dim {
            return Err(Error::DimensionMismatch {
                left: dim,
                right: index,
            });
        }
        let mut amplitudes = vec![C_ZERO; dim];
        amplitudes[index] = C_ONE;
        Ok(Self { amplitudes })
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    /// Tensor product `|self> (x) |other>`.
    pub fn tensor(&self, other: &Self) -> Self {
        let mut amplitudes = Vec::with_capacity(self.dim() * other.dim());
        for a in &self.amplitudes {
            for b in &other.amplitudes {
                amplitudes.push(a * b);
            }
        }
        Self { amplitudes }
    }

    pub fn inner(&self, other: &Self) -> Result<Complex64> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                left: self.dim(),
                right: other.dim(),
            });
        }
        Ok(self
            .amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| a.conj() * b)
            .sum())
    }
}

/// Unit-trace positive-semidefinite Hermitian matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    matrix: HermitianMatrix,
}

impl DensityMatrix {
    /// Validates unit trace (within `1e-10`) and positivity
    /// (smallest eigenvalue at least `-1e-10`).
    pub fn new(matrix: HermitianMatrix) -> Result<Self> {
        let trace = matrix.trace();
        if (trace - 1.0).abs() > DENSITY_TRACE_TOL {
            return Err(Error::InvalidDensity {
                reason: format!("trace {trace} deviates from 1 by more than 1e-10"),
            });
        }
        let min_eig = matrix.eig()?.min_eigenvalue();
        if min_eig < -DENSITY_PSD_TOL {
            return Err(Error::InvalidDensity {
                reason: format!("smallest eigenvalue {min_eig:.3e} is below -1e-10"),
            });
        }
        Ok(Self { matrix })
    }

    /// Projector `|s><s|`.
    pub fn from_pure(state: &PureState) -> Self {
        let n = state.dim();
        let mut m = ComplexMatrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                m.set(i, j, state.amplitudes()[i] * state.amplitudes()[j].conj());
            }
        }
        let h = HermitianMatrix::new(m).expect("projector is Hermitian");
        Self::new(h).expect("projector onto a normalized state is a valid density matrix")
    }

    pub fn maximally_mixed(dim: usize) -> Self {
        let m = HermitianMatrix::identity(dim).scale(1.0 / dim as f64);
        Self::new(m).expect("I/dim is a valid density matrix")
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    pub fn matrix(&self) -> &HermitianMatrix {
        &self.matrix
    }

    pub fn trace(&self) -> f64 {
        self.matrix.trace()
    }

    /// `Tr(rho^2)`, computed as the squared Frobenius norm.
    pub fn purity(&self) -> f64 {
        let f = self.matrix.frobenius_norm();
        f * f
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pauli::sigma;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn assert_close(a: f64, b: f64, tol: f64) {
        assert!((a - b).abs() <= tol, "{a} vs {b} (tol {tol})");
    }

    #[test]
    fn identity_matmul_is_identity() {
        let i2 = HermitianMatrix::identity(2);
        let prod = i2.matmul(&i2).unwrap();
        assert_eq!(prod, ComplexMatrix::identity(2));
    }

    #[test]
    fn pauli_x_squares_to_identity() {
        let sx = sigma(1);
        let prod = sx.matmul(&sx).unwrap();
        assert_eq!(prod, ComplexMatrix::identity(2));
    }

    #[test]
    fn canonical_b_square_matches_direct_arithmetic() {
        // direct 2x2 arithmetic oracle for [[3/2,-9/20],[-9/20,3/2]]^2
        let b = 1.5;
        let d = -9.0 / 20.0;
        let expect_diag = b * b + d * d; // 981/400
        let expect_off = 2.0 * b * d; // -27/20
        let m = HermitianMatrix::from_real_rows(&[vec![b, d], vec![d, b]]).unwrap();
        let sq = m.square();
        assert_close(sq.get(0, 0).re, expect_diag, 1e-15);
        assert_close(sq.get(1, 1).re, expect_diag, 1e-15);
        assert_close(sq.get(0, 1).re, expect_off, 1e-15);
        assert_close(expect_diag, 981.0 / 400.0, 1e-15);
        assert_close(expect_off, -27.0 / 20.0, 1e-15);
    }

    #[test]
    fn matmul_rejects_dimension_mismatch() {
        let a = ComplexMatrix::identity(2);
        let b = ComplexMatrix::identity(3);
        assert!(matches!(
            a.matmul(&b),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn kron_of_identities() {
        let i2 = ComplexMatrix::identity(2);
        assert_eq!(i2.kron(&i2), ComplexMatrix::identity(4));
    }

    #[test]
    fn kron_sigma3_with_identity() {
        let sz = sigma(3);
        let id = sigma(0);
        let zk = sz.kron(&id);
        for (i, want) in [1.0, 1.0, -1.0, -1.0].iter().enumerate() {
            assert_eq!(zk.get(i, i).re, *want);
        }
        let zz = sz.kron(&sz);
        for (i, want) in [1.0, -1.0, -1.0, 1.0].iter().enumerate() {
            assert_eq!(zz.get(i, i).re, *want);
        }
    }

    #[test]
    fn hermitian_construction_symmetrizes() {
        let m = ComplexMatrix::from_rows(&[
            vec![c(1.0, 0.0), c(0.5, 0.25)],
            vec![c(0.5, -0.25), c(2.0, 0.0)],
        ])
        .unwrap();
        let h = HermitianMatrix::new(m).unwrap();
        assert_eq!(h.get(0, 1), h.get(1, 0).conj());
    }

    #[test]
    fn hermitian_construction_rejects_residual() {
        let m = ComplexMatrix::from_rows(&[
            vec![c(1.0, 0.0), c(0.5, 0.0)],
            vec![c(0.4, 0.0), c(2.0, 0.0)],
        ])
        .unwrap();
        match HermitianMatrix::new(m) {
            Err(Error::NotHermitian { residual }) => assert_close(residual, 0.1, 1e-12),
            other => panic!("expected NotHermitian, got {other:?}"),
        }
    }

    #[test]
    fn hermitian_construction_rejects_nan() {
        let m = ComplexMatrix::from_rows(&[
            vec![c(f64::NAN, 0.0), c(0.0, 0.0)],
            vec![c(0.0, 0.0), c(1.0, 0.0)],
        ])
        .unwrap();
        assert!(matches!(HermitianMatrix::new(m), Err(Error::NonFinite)));
    }

    #[test]
    fn eig_sorts_diagonal_exactly() {
        let h = HermitianMatrix::from_real_rows(&[
            vec![3.0, 0.0, 0.0],
            vec![0.0, 1.0, 0.0],
            vec![0.0, 0.0, 2.0],
        ])
        .unwrap();
        let spec = h.eig().unwrap();
        assert_eq!(spec.eigenvalues(), &[1.0, 2.0, 3.0]);
        // eigenvector of value 1.0 is e_1
        assert_eq!(spec.eigenvector(0)[1], C_ONE);
    }

    #[test]
    fn eig_of_pauli_x() {
        let spec = sigma(1).eig().unwrap();
        assert_close(spec.eigenvalues()[0], -1.0, 1e-14);
        assert_close(spec.eigenvalues()[1], 1.0, 1e-14);
    }

    #[test]
    fn is_psd_basics() {
        assert!(HermitianMatrix::identity(2).is_psd(DEFAULT_PSD_TOL).unwrap());
        let m = HermitianMatrix::from_real_rows(&[vec![1.0, 0.0], vec![0.0, -0.5]]).unwrap();
        assert!(!m.is_psd(DEFAULT_PSD_TOL).unwrap());
    }

    #[test]
    fn canonical_difference_is_psd() {
        // B - A for the sqrt(759) pair: det = 27/3200 > 0 with positive diagonal.
        let s = 759f64.sqrt() / 160.0;
        let a = HermitianMatrix::from_real_rows(&[
            vec![1.0 + s, -25.0 / 32.0],
            vec![-25.0 / 32.0, 1.0 - s],
        ])
        .unwrap();
        let b = HermitianMatrix::from_real_rows(&[
            vec![5.0 / 4.0, -5.0 / 8.0],
            vec![-5.0 / 8.0, 5.0 / 4.0],
        ])
        .unwrap();
        let diff = b.sub(&a).unwrap();
        // independent 2x2 oracle: trace/determinant test
        let (p, q, r) = (diff.get(0, 0).re, diff.get(0, 1).re, diff.get(1, 1).re);
        let det = p * r - q * q;
        assert!(det > 0.0 && p > 0.0);
        assert_close(det, 27.0 / 3200.0, 1e-13);
        assert!(diff.is_psd(DEFAULT_PSD_TOL).unwrap());
    }

    #[test]
    fn diagonality_checks() {
        assert!(HermitianMatrix::identity(4).is_diagonal(DEFAULT_DIAG_TOL));
        assert!(!sigma(1).is_diagonal(DEFAULT_DIAG_TOL));
    }

    #[test]
    fn expectation_on_identity_is_one() {
        let s = PureState::new(vec![c(0.6, 0.0), c(0.0, 0.8)]).unwrap();
        let val = HermitianMatrix::identity(2).expectation(&s).unwrap();
        assert_close(val, 1.0, 1e-14);
    }

    #[test]
    fn expectation_dimension_mismatch() {
        let s = PureState::basis_state(2, 0).unwrap();
        assert!(matches!(
            HermitianMatrix::identity(4).expectation(&s),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn mixed_expectation_of_identity_is_one() {
        let rho = DensityMatrix::maximally_mixed(4);
        let val = HermitianMatrix::identity(4).expectation_mixed(&rho).unwrap();
        assert_close(val, 1.0, 1e-14);
    }

    #[test]
    fn state_norm_validation() {
        assert!(matches!(
            PureState::new(vec![c(1.0, 0.0), c(0.5, 0.0)]),
            Err(Error::NotNormalized { .. })
        ));
    }

    #[test]
    fn density_validation_rejects_negative_eigenvalue() {
        let m = HermitianMatrix::from_real_rows(&[vec![1.5, 0.0], vec![0.0, -0.5]]).unwrap();
        assert!(matches!(
            DensityMatrix::new(m),
            Err(Error::InvalidDensity { .. })
        ));
    }

    #[test]
    fn density_from_pure_matches_expectation() {
        let s = PureState::new(vec![c(0.6, 0.0), c(0.8, 0.0)]).unwrap();
        let rho = DensityMatrix::from_pure(&s);
        let m = HermitianMatrix::from_real_rows(&[vec![2.0, 0.5], vec![0.5, -1.0]]).unwrap();
        let pure = m.expectation(&s).unwrap();
        let mixed = m.expectation_mixed(&rho).unwrap();
        assert_close(pure, mixed, 1e-12);
    }

    #[test]
    fn purity_of_maximally_mixed() {
        assert_close(DensityMatrix::maximally_mixed(4).purity(), 0.25, 1e-14);
    }
}
