//! Quantum Fisher information metrics and uncertainty-gap verification
//! on strictly positive density matrices.
//!
//! The crate evaluates two families of uncertainty functionals on a
//! state rho and a pair of observables A, B:
//!
//! * the Schrodinger gap `S = Var(A) Var(B) - (Re Cov(A,B))^2`, and
//! * the skew-information gap
//!   `T_beta = I_beta(A) I_beta(B) - (Re Corr_beta(A,B))^2`
//!   built from the Wigner-Yanase-Dyson information,
//!
//! together with the monotone-metric geometry that ties them together:
//! every symmetric normalized operator monotone function f induces a
//! metric on states, and `G(f) = f(0)^2/4 * Area_f(i[A,rho], i[B,rho])^2`
//! is a lower bound for S when f = f_beta with beta in (0, 1/2]. For
//! beta in [-1, 0) that bound fails, and [`lab`] reproduces the
//! three-level counterexample family that refutes it, closed form and
//! matrix route cross-checked against each other.
//!
//! | module | contents |
//! |--------|----------|
//! | [`linalg`] | complex matrices, Jacobi eigensolver, domain types, sampling |
//! | [`stats`] | covariance, variance, Corr_beta, I_beta, S and T gaps |
//! | [`metrics`] | the monotone-function catalog, kernels, metric, area, G(f) |
//! | [`lab`] | quadruple sums, counterexample search, exploration harnesses |
//! | [`io`] | matrix file format and byte-stable JSON emission |
//!
//! Everything is pure and immutable after construction; all entry
//! points are safe to call concurrently.

pub mod error;
pub mod io;
pub mod lab;
pub mod linalg;
pub mod metrics;
pub mod stats;
pub mod tol;

pub use error::{Error, Result};
pub use lab::{
    ce_closed_form_gap, ce_family, check, explore, find_violation, g_monotonicity_probe,
    remark_family, xi_eta, CounterexampleRecord, ExplorationSummary, GMonotonicityReport,
    InequalityReport, TrialSource,
};
pub use linalg::{
    anticommutator, center, commutator, eigenbasis_coefficients, matrix_power, sample_density,
    sample_observable, spectral_decompose, tangent_of, ComplexMatrix, DensityMatrix,
    EigenbasisCoefficients, Observable, SpectralDecomposition, TangentVector,
};
pub use metrics::{area, metric, upf_bound, MetricReport, MonotoneFunctionSpec};
pub use stats::{
    corr_beta, covariance, statistics_report, variance, wyd_information, BetaParameter,
    StatisticsReport,
};
