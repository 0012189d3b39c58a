//! Dense complex Hermitian linear algebra at small dimension.
//!
//! Everything a state-space computation needs and nothing more: a
//! row-major complex matrix, the domain newtypes built on top of it
//! ([`Observable`], [`DensityMatrix`], [`TangentVector`]), a cyclic
//! Jacobi eigensolver for Hermitian matrices, real matrix powers,
//! commutators, centering, and seeded random sampling of states and
//! observables.
//!
//! All values are immutable after construction and every operation is a
//! pure function, so they can be shared freely across threads.

use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use std::fmt;
use std::ops::{Add, Index, Mul, Sub};

use crate::error::{Error, Result};
use crate::tol;

/// Square complex matrix with row-major storage.
#[derive(Clone, PartialEq)]
pub struct ComplexMatrix {
    dim: usize,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            data: vec![Complex64::ZERO; dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.set(i, i, Complex64::ONE);
        }
        m
    }

    /// Build from a generator over (row, col).
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            for j in 0..dim {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    /// Diagonal matrix with real entries.
    pub fn from_real_diagonal(diag: &[f64]) -> Self {
        Self::from_fn(diag.len(), |i, j| {
            if i == j {
                Complex64::new(diag[i], 0.0)
            } else {
                Complex64::ZERO
            }
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.data[row * self.dim + col]
    }

    #[inline]
    pub fn set(&mut self, row: usize, col: usize, value: Complex64) {
        self.data[row * self.dim + col] = value;
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self.get(j, i).conj())
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        Self {
            dim: self.dim,
            data: self.data.iter().map(|z| z * factor).collect(),
        }
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|z| z.re.is_finite() && z.im.is_finite())
    }

    /// Max |M[i,j] - conj(M[j,i])| over all entries.
    pub fn hermitian_deviation(&self) -> f64 {
        let mut dev: f64 = 0.0;
        for i in 0..self.dim {
            for j in i..self.dim {
                dev = dev.max((self.get(i, j) - self.get(j, i).conj()).norm());
            }
        }
        dev
    }

    /// (M + M*)/2, exactly Hermitian by construction.
    pub fn symmetrized(&self) -> Self {
        let n = self.dim;
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.set(i, i, Complex64::new(self.get(i, i).re, 0.0));
            for j in (i + 1)..n {
                let v = (self.get(i, j) + self.get(j, i).conj()) * 0.5;
                m.set(i, j, v);
                m.set(j, i, v.conj());
            }
        }
        m
    }

    fn check_same_dim(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        Ok(())
    }

    fn matmul(&self, other: &Self) -> Self {
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let aik = self.get(i, k);
                if aik == Complex64::ZERO {
                    continue;
                }
                for j in 0..n {
                    let v = out.get(i, j) + aik * other.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex64;
    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.data[i * self.dim + j]
    }
}

impl Add for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn add(self, other: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, other.dim, "dimension mismatch in addition");
        ComplexMatrix {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn sub(self, other: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, other.dim, "dimension mismatch in subtraction");
        ComplexMatrix {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn mul(self, other: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, other.dim, "dimension mismatch in multiplication");
        self.matmul(other)
    }
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComplexMatrix {}x{} [", self.dim, self.dim)?;
        for i in 0..self.dim {
            write!(f, "  ")?;
            for j in 0..self.dim {
                let z = self.get(i, j);
                write!(f, "{:+.4}{:+.4}i  ", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

/// Self-adjoint matrix. Construction checks Hermiticity within
/// [`tol::HERMITIAN`] and then symmetrizes, so the stored matrix is
/// exactly Hermitian.
#[derive(Clone, Debug, PartialEq)]
pub struct Observable {
    matrix: ComplexMatrix,
}

impl Observable {
    pub fn new(matrix: ComplexMatrix) -> Result<Self> {
        if !matrix.is_finite() {
            return Err(Error::NonFiniteEntries);
        }
        let dev = matrix.hermitian_deviation();
        if dev > tol::HERMITIAN {
            return Err(Error::NotHermitian {
                deviation: dev,
                tolerance: tol::HERMITIAN,
            });
        }
        Ok(Self {
            matrix: matrix.symmetrized(),
        })
    }

    pub fn identity(dim: usize) -> Self {
        Self {
            matrix: ComplexMatrix::identity(dim),
        }
    }

    pub fn from_real_diagonal(diag: &[f64]) -> Self {
        Self {
            matrix: ComplexMatrix::from_real_diagonal(diag),
        }
    }

    pub fn pauli_x() -> Self {
        Self::new(ComplexMatrix::from_fn(2, |i, j| {
            if i != j {
                Complex64::ONE
            } else {
                Complex64::ZERO
            }
        }))
        .expect("pauli_x is Hermitian")
    }

    pub fn pauli_y() -> Self {
        Self::new(ComplexMatrix::from_fn(2, |i, j| match (i, j) {
            (0, 1) => Complex64::new(0.0, -1.0),
            (1, 0) => Complex64::new(0.0, 1.0),
            _ => Complex64::ZERO,
        }))
        .expect("pauli_y is Hermitian")
    }

    pub fn pauli_z() -> Self {
        Self::from_real_diagonal(&[1.0, -1.0])
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }
}

/// Traceless self-adjoint matrix: a tangent direction at a state.
#[derive(Clone, Debug, PartialEq)]
pub struct TangentVector {
    matrix: ComplexMatrix,
}

impl TangentVector {
    pub fn new(matrix: ComplexMatrix) -> Result<Self> {
        if !matrix.is_finite() {
            return Err(Error::NonFiniteEntries);
        }
        let dev = matrix.hermitian_deviation();
        if dev > tol::HERMITIAN {
            return Err(Error::NotHermitian {
                deviation: dev,
                tolerance: tol::HERMITIAN,
            });
        }
        let tr = matrix.trace().norm();
        if tr > tol::TRACELESS {
            return Err(Error::NotTraceless {
                trace: tr,
                tolerance: tol::TRACELESS,
            });
        }
        Ok(Self {
            matrix: matrix.symmetrized(),
        })
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    pub fn is_zero(&self, threshold: f64) -> bool {
        self.matrix.frobenius_norm() <= threshold
    }
}

/// Eigenvalues (sorted descending) and a unitary whose columns are the
/// corresponding eigenvectors, so that the input equals
/// U diag(lambda) U*.
#[derive(Clone, Debug)]
pub struct SpectralDecomposition {
    eigenvalues: Vec<f64>,
    eigenvectors: ComplexMatrix,
}

impl SpectralDecomposition {
    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    pub fn eigenvectors(&self) -> &ComplexMatrix {
        &self.eigenvectors
    }

    pub fn dim(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn min_eigenvalue(&self) -> f64 {
        self.eigenvalues.iter().copied().fold(f64::INFINITY, f64::min)
    }

    /// U diag(lambda) U*.
    pub fn reconstruct(&self) -> ComplexMatrix {
        self.apply(|lam| lam)
    }

    /// U diag(f(lambda)) U*.
    pub fn apply(&self, f: impl Fn(f64) -> f64) -> ComplexMatrix {
        let n = self.dim();
        let u = &self.eigenvectors;
        ComplexMatrix::from_fn(n, |i, j| {
            (0..n)
                .map(|k| u.get(i, k) * f(self.eigenvalues[k]) * u.get(j, k).conj())
                .sum()
        })
    }

    /// Conjugate a matrix into the eigenbasis: U* M U.
    pub fn to_eigenbasis(&self, m: &ComplexMatrix) -> ComplexMatrix {
        let n = self.dim();
        let u = &self.eigenvectors;
        // tmp = M U
        let tmp = m * u;
        ComplexMatrix::from_fn(n, |i, j| {
            (0..n).map(|k| u.get(k, i).conj() * tmp.get(k, j)).sum()
        })
    }
}

fn offdiagonal_norm(m: &ComplexMatrix) -> f64 {
    let n = m.dim();
    let mut sum = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                sum += m.get(i, j).norm_sqr();
            }
        }
    }
    sum.sqrt()
}

/// Diagonalize a Hermitian matrix by cyclic Jacobi rotations.
///
/// Converges when the off-diagonal Frobenius norm drops below
/// [`tol::JACOBI_OFFDIAG_REL`] times the Frobenius norm of the input,
/// within a budget of [`tol::JACOBI_MAX_SWEEPS`] sweeps. Deterministic
/// for a fixed input. Eigenvalues are returned descending, ties kept in
/// the order the diagonalization produced them.
pub fn spectral_decompose(matrix: &ComplexMatrix) -> Result<SpectralDecomposition> {
    if !matrix.is_finite() {
        return Err(Error::NonFiniteEntries);
    }
    let dev = matrix.hermitian_deviation();
    if dev > tol::HERMITIAN {
        return Err(Error::NotHermitian {
            deviation: dev,
            tolerance: tol::HERMITIAN,
        });
    }

    let n = matrix.dim();
    let mut m = matrix.symmetrized();
    let mut u = ComplexMatrix::identity(n);
    let threshold = tol::JACOBI_OFFDIAG_REL * m.frobenius_norm();

    let mut converged = offdiagonal_norm(&m) <= threshold;
    let mut sweeps = 0;
    while !converged && sweeps < tol::JACOBI_MAX_SWEEPS {
        for p in 0..n {
            for q in (p + 1)..n {
                let z = m.get(p, q);
                let az = z.norm();
                if az == 0.0 {
                    continue;
                }
                let phase = z / az;
                let tau = (m.get(q, q).re - m.get(p, p).re) / (2.0 * az);
                let t = tau.signum() / (tau.abs() + tau.hypot(1.0));
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;

                // rows/columns outside the rotated pair
                for k in 0..n {
                    if k == p || k == q {
                        continue;
                    }
                    let mkp = m.get(k, p);
                    let mkq = m.get(k, q);
                    let new_kp = c * mkp - s * phase.conj() * mkq;
                    let new_kq = s * phase * mkp + c * mkq;
                    m.set(k, p, new_kp);
                    m.set(p, k, new_kp.conj());
                    m.set(k, q, new_kq);
                    m.set(q, k, new_kq.conj());
                }
                let mpp = m.get(p, p).re;
                let mqq = m.get(q, q).re;
                m.set(
                    p,
                    p,
                    Complex64::new(c * c * mpp - 2.0 * s * c * az + s * s * mqq, 0.0),
                );
                m.set(
                    q,
                    q,
                    Complex64::new(s * s * mpp + 2.0 * s * c * az + c * c * mqq, 0.0),
                );
                m.set(p, q, Complex64::ZERO);
                m.set(q, p, Complex64::ZERO);

                for k in 0..n {
                    let ukp = u.get(k, p);
                    let ukq = u.get(k, q);
                    u.set(k, p, c * ukp - s * phase.conj() * ukq);
                    u.set(k, q, s * phase * ukp + c * ukq);
                }
            }
        }
        sweeps += 1;
        converged = offdiagonal_norm(&m) <= threshold;
    }

    if !converged {
        return Err(Error::NoConvergence {
            sweeps,
            residual: offdiagonal_norm(&m),
            threshold,
        });
    }

    // stable descending sort, applied to the eigenvector columns as well
    let mut order: Vec<usize> = (0..n).collect();
    let diag: Vec<f64> = (0..n).map(|i| m.get(i, i).re).collect();
    order.sort_by(|&a, &b| diag[b].partial_cmp(&diag[a]).expect("finite eigenvalues"));

    let eigenvalues: Vec<f64> = order.iter().map(|&k| diag[k]).collect();
    let eigenvectors = ComplexMatrix::from_fn(n, |i, j| u.get(i, order[j]));

    Ok(SpectralDecomposition {
        eigenvalues,
        eigenvectors,
    })
}

/// Strictly positive, unit-trace Hermitian matrix. The spectral
/// decomposition is computed once at construction (it is needed to
/// verify positivity) and reused by every downstream functional.
#[derive(Clone, Debug)]
pub struct DensityMatrix {
    matrix: ComplexMatrix,
    eigen_floor: f64,
    spectral: SpectralDecomposition,
}

impl DensityMatrix {
    /// Construct with the default eigenvalue floor [`tol::DEFAULT_EIGEN_FLOOR`].
    pub fn new(matrix: ComplexMatrix) -> Result<Self> {
        Self::with_floor(matrix, tol::DEFAULT_EIGEN_FLOOR)
    }

    pub fn with_floor(matrix: ComplexMatrix, eigen_floor: f64) -> Result<Self> {
        if !(eigen_floor > 0.0 && eigen_floor.is_finite()) {
            return Err(Error::invalid(
                "eigen_floor",
                format!("must be a positive finite number, got {eigen_floor}"),
            ));
        }
        if !matrix.is_finite() {
            return Err(Error::NonFiniteEntries);
        }
        let dev = matrix.hermitian_deviation();
        if dev > tol::HERMITIAN {
            return Err(Error::NotHermitian {
                deviation: dev,
                tolerance: tol::HERMITIAN,
            });
        }
        let matrix = matrix.symmetrized();
        let trace = matrix.trace().re;
        if (trace - 1.0).abs() > tol::UNIT_TRACE {
            return Err(Error::TraceNotOne {
                trace,
                tolerance: tol::UNIT_TRACE,
            });
        }
        let spectral = spectral_decompose(&matrix)?;
        let min = spectral.min_eigenvalue();
        if min < eigen_floor {
            return Err(Error::EigenvalueBelowFloor {
                eigenvalue: min,
                floor: eigen_floor,
            });
        }
        Ok(Self {
            matrix,
            eigen_floor,
            spectral,
        })
    }

    /// Diagonal state from a probability vector.
    pub fn from_diagonal(probs: &[f64], eigen_floor: f64) -> Result<Self> {
        Self::with_floor(ComplexMatrix::from_real_diagonal(probs), eigen_floor)
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    pub fn eigen_floor(&self) -> f64 {
        self.eigen_floor
    }

    pub fn spectral(&self) -> &SpectralDecomposition {
        &self.spectral
    }
}

/// Hermitian coefficient matrix a[i,j] of a centered observable in the
/// eigenbasis of a state.
#[derive(Clone, Debug)]
pub struct EigenbasisCoefficients {
    matrix: ComplexMatrix,
}

impl EigenbasisCoefficients {
    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.matrix.get(i, j)
    }

    /// Sum of |a[i,j]|^2, equal to Tr(X0^2) for the source observable.
    pub fn norm_sqr(&self) -> f64 {
        let n = self.dim();
        (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .map(|(i, j)| self.get(i, j).norm_sqr())
            .sum()
    }
}

/// rho^p through the stored spectral decomposition: U diag(lambda^p) U*.
///
/// Negative powers require every eigenvalue to clear the state's floor,
/// which construction already guarantees; the check stays as a guard.
pub fn matrix_power(rho: &DensityMatrix, p: f64) -> Result<Observable> {
    if !p.is_finite() {
        return Err(Error::invalid("p", format!("power must be finite, got {p}")));
    }
    if p < 0.0 {
        let min = rho.spectral().min_eigenvalue();
        if min < rho.eigen_floor() {
            return Err(Error::EigenvalueBelowFloor {
                eigenvalue: min,
                floor: rho.eigen_floor(),
            });
        }
    }
    Observable::new(rho.spectral().apply(|lam| lam.powf(p)))
}

/// XY - YX.
pub fn commutator(x: &ComplexMatrix, y: &ComplexMatrix) -> Result<ComplexMatrix> {
    x.check_same_dim(y)?;
    Ok(&(x * y) - &(y * x))
}

/// XY + YX.
pub fn anticommutator(x: &ComplexMatrix, y: &ComplexMatrix) -> Result<ComplexMatrix> {
    x.check_same_dim(y)?;
    Ok(&(x * y) + &(y * x))
}

/// X - Tr(rho X) I, so that Tr(rho * result) = 0.
pub fn center(x: &Observable, rho: &DensityMatrix) -> Result<Observable> {
    x.matrix().check_same_dim(rho.matrix())?;
    let mean = (rho.matrix() * x.matrix()).trace().re;
    let shifted = x.matrix() - &ComplexMatrix::identity(x.dim()).scale(mean.into());
    Observable::new(shifted)
}

/// Tangent direction generated by an observable: i[rho, A]. Traceless
/// and self-adjoint by construction.
pub fn tangent_of(a: &Observable, rho: &DensityMatrix) -> Result<TangentVector> {
    a.matrix().check_same_dim(rho.matrix())?;
    let comm = commutator(rho.matrix(), a.matrix())?;
    TangentVector::new(comm.scale(Complex64::new(0.0, 1.0)))
}

/// Coefficients a[i,j] of the centered observable in the eigenbasis of
/// rho: U* X0 U. Hermitian because X0 is.
pub fn eigenbasis_coefficients(
    x: &Observable,
    rho: &DensityMatrix,
) -> Result<EigenbasisCoefficients> {
    let centered = center(x, rho)?;
    Ok(EigenbasisCoefficients {
        matrix: rho.spectral().to_eigenbasis(centered.matrix()),
    })
}

fn complex_normal(rng: &mut ChaCha8Rng) -> Complex64 {
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    Complex64::new(re, im) * std::f64::consts::FRAC_1_SQRT_2
}

fn gaussian_matrix(dim: usize, rng: &mut ChaCha8Rng) -> ComplexMatrix {
    ComplexMatrix::from_fn(dim, |_, _| complex_normal(rng))
}

/// Hilbert-Schmidt-style random state: rho = G G* / Tr(G G*) for a
/// matrix G of i.i.d. standard complex normal entries, then mixed with
/// the maximally mixed state by the smallest delta that lifts the
/// minimum eigenvalue to the floor. Deterministic per seed.
pub fn sample_density(dim: usize, seed: u64, floor: f64) -> Result<DensityMatrix> {
    if dim < 2 {
        return Err(Error::invalid("dim", format!("must be >= 2, got {dim}")));
    }
    if !(floor > 0.0 && floor < 1.0 / dim as f64) {
        return Err(Error::invalid(
            "floor",
            format!("must lie in (0, 1/dim) = (0, {}), got {floor}", 1.0 / dim as f64),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let g = gaussian_matrix(dim, &mut rng);
    let gram = &g * &g.adjoint();
    let raw = gram.scale(Complex64::new(1.0 / gram.trace().re, 0.0));

    let spectral = spectral_decompose(&raw.symmetrized())?;
    let min = spectral.min_eigenvalue();
    if min >= floor {
        return DensityMatrix::with_floor(raw, floor);
    }
    // smallest delta with (1-delta) min + delta/dim >= floor, plus a hair
    // of headroom so the re-decomposition inside the constructor cannot
    // land an ulp below the floor
    let target = floor * (1.0 + 1e-9) + 1e-15;
    let delta = (target - min) / (1.0 / dim as f64 - min);
    let mixed = &raw.scale(Complex64::new(1.0 - delta, 0.0))
        + &ComplexMatrix::identity(dim).scale(Complex64::new(delta / dim as f64, 0.0));
    DensityMatrix::with_floor(mixed, floor)
}

/// Hermitian part of a complex normal matrix. Deterministic per seed.
pub fn sample_observable(dim: usize, seed: u64) -> Result<Observable> {
    if dim < 2 {
        return Err(Error::invalid("dim", format!("must be >= 2, got {dim}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let g = gaussian_matrix(dim, &mut rng);
    Observable::new(g.symmetrized())
}
