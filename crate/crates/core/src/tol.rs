//! Numerical tolerances used across the crate.
//!
//! Construction checks (Hermiticity, unit trace, tracelessness) sit at
//! 1e-12: loose enough to absorb representation noise in inputs that were
//! produced by floating-point arithmetic, tight enough that a genuinely
//! wrong matrix cannot slip through. Cross-route agreement checks sit at
//! 1e-9, which covers roundoff accumulated by the O(n^4) sums at the
//! dimensions this crate targets.

/// Max |M[i,j] - conj(M[j,i])| accepted before symmetrization.
pub const HERMITIAN: f64 = 1e-12;

/// Max |Tr(rho) - 1| accepted for a density matrix.
pub const UNIT_TRACE: f64 = 1e-12;

/// Max |Tr(X)| accepted for a tangent vector.
pub const TRACELESS: f64 = 1e-12;

/// Default minimum admitted eigenvalue of a density matrix. Negative
/// powers rho^beta amplify small eigenvalues as lambda^-1, so states
/// below this floor are rejected at construction.
pub const DEFAULT_EIGEN_FLOOR: f64 = 1e-8;

/// Max entrywise error of U diag(lambda) U* against the decomposed input.
pub const RECONSTRUCTION: f64 = 1e-10;

/// Jacobi convergence: off-diagonal Frobenius norm relative to the
/// Frobenius norm of the input.
pub const JACOBI_OFFDIAG_REL: f64 = 1e-13;

/// Jacobi iteration budget in full sweeps.
pub const JACOBI_MAX_SWEEPS: usize = 100;

/// Eigenvalue pairs closer than this (relative to max(x, y)) are treated
/// as degenerate and the kernel limit c(x, x) = 1/x is used.
pub const KERNEL_COLLAPSE_REL: f64 = 1e-8;

/// Max imaginary residue tolerated on provably real quantities before it
/// is discarded.
pub const IM_RESIDUE: f64 = 1e-10;

/// Default absolute tolerance on a gap before an inequality is declared
/// violated; sized for double-precision roundoff across the O(n^4) sums.
pub const DEFAULT_GAP: f64 = 1e-9;

/// Agreement required between two algebraic routes to the same quantity
/// (trace formulas vs eigenbasis sums, statistics vs metric geometry),
/// scaled by the magnitude of the value when it exceeds 1.
pub const CROSS_ROUTE: f64 = 1e-9;

/// Width at which bisection of a sign change stops.
pub const BISECTION_INTERVAL: f64 = 1e-10;
