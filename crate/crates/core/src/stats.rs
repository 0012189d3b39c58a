//! Covariance, variance, the skew-information correlation Corr_beta,
//! the Wigner-Yanase-Dyson information I_beta, and the two uncertainty
//! gaps built from them:
//!
//! * `s_gap = Var(A) Var(B) - (Re Cov(A,B))^2` (the Schrodinger gap),
//! * `t_gap = I_beta(A) I_beta(B) - (Re Corr_beta(A,B))^2`.
//!
//! Every functional is evaluated through the eigenbasis of rho: one
//! spectral decomposition (stored in the state) and O(n^2) sums over the
//! coefficient matrices of the centered observables. In debug builds the
//! same quantities are recomputed from the defining trace formulas and
//! the two routes are required to agree, which turns the proof formulas
//! into a built-in oracle.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{eigenbasis_coefficients, DensityMatrix, EigenbasisCoefficients, Observable};
use crate::tol;

/// Exponent of the skew-information functionals. Valid range is
/// [-1, 1) excluding 0; the interval (0, 1/2] where the uncertainty
/// inequality is a theorem is flagged, not enforced, because the
/// refutation machinery must evaluate beta in [-1, 0) too.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BetaParameter(f64);

impl BetaParameter {
    pub fn new(beta: f64) -> Result<Self> {
        if !beta.is_finite() || !(-1.0..1.0).contains(&beta) || beta == 0.0 {
            return Err(Error::invalid(
                "beta",
                format!("must lie in [-1, 1) and differ from 0, got {beta}"),
            ));
        }
        Ok(Self(beta))
    }

    pub fn value(self) -> f64 {
        self.0
    }

    /// True on (0, 1/2], where the skew-information bound is proved.
    pub fn in_theorem_range(self) -> bool {
        self.0 > 0.0 && self.0 <= 0.5
    }

    /// True on [-1, 0), the range covered only by the counterexample.
    pub fn is_extended(self) -> bool {
        self.0 < 0.0
    }
}

/// All scalar statistics of one (rho, A, B, beta) instance.
#[derive(Clone, Debug, Serialize)]
pub struct StatisticsReport {
    pub beta: f64,
    pub beta_in_theorem_range: bool,
    pub var_a: f64,
    pub var_b: f64,
    pub cov_re: f64,
    pub cov_im: f64,
    pub s_gap: f64,
    pub i_a: f64,
    pub i_b: f64,
    pub re_corr: f64,
    pub t_gap: f64,
}

/// Workspace shared by all functionals of one (rho, A, B) instance:
/// the eigenvalues of rho and the coefficient matrices of the centered
/// observables in its eigenbasis.
struct EigenSums<'a> {
    lambdas: &'a [f64],
    a: EigenbasisCoefficients,
    b: EigenbasisCoefficients,
}

impl<'a> EigenSums<'a> {
    fn build(rho: &'a DensityMatrix, a: &Observable, b: &Observable) -> Result<Self> {
        check_dims(rho, a)?;
        check_dims(rho, b)?;
        Ok(Self {
            lambdas: rho.spectral().eigenvalues(),
            a: eigenbasis_coefficients(a, rho)?,
            b: eigenbasis_coefficients(b, rho)?,
        })
    }

    fn dim(&self) -> usize {
        self.lambdas.len()
    }

    /// Var = (1/2) sum (lambda_i + lambda_j) |a_ij|^2.
    fn variance_of(&self, coeffs: &EigenbasisCoefficients) -> f64 {
        let n = self.dim();
        let mut sum = 0.0;
        for i in 0..n {
            for j in 0..n {
                sum += 0.5 * (self.lambdas[i] + self.lambdas[j]) * coeffs.get(i, j).norm_sqr();
            }
        }
        sum
    }

    /// sum lambda_i^beta lambda_j^(1-beta) |a_ij|^2.
    fn power_weighted_of(&self, coeffs: &EigenbasisCoefficients, beta: f64) -> f64 {
        let lb: Vec<f64> = self.lambdas.iter().map(|l| l.powf(beta)).collect();
        let l1b: Vec<f64> = self.lambdas.iter().map(|l| l.powf(1.0 - beta)).collect();
        let mut sum = 0.0;
        for (i, li) in lb.iter().enumerate() {
            for (j, lj) in l1b.iter().enumerate() {
                sum += li * lj * coeffs.get(i, j).norm_sqr();
            }
        }
        sum
    }

    /// Cov = sum lambda_i a_ij b_ji (complex).
    fn covariance(&self) -> Complex64 {
        let n = self.dim();
        let mut sum = Complex64::ZERO;
        for i in 0..n {
            for j in 0..n {
                sum += self.lambdas[i] * self.a.get(i, j) * self.b.get(j, i);
            }
        }
        sum
    }

    /// sum lambda_i^beta lambda_j^(1-beta) a_ij b_ji (complex).
    fn power_weighted_cross(&self, beta: f64) -> Complex64 {
        let lb: Vec<f64> = self.lambdas.iter().map(|l| l.powf(beta)).collect();
        let l1b: Vec<f64> = self.lambdas.iter().map(|l| l.powf(1.0 - beta)).collect();
        let mut sum = Complex64::ZERO;
        for (i, li) in lb.iter().enumerate() {
            for (j, lj) in l1b.iter().enumerate() {
                sum += li * lj * self.a.get(i, j) * self.b.get(j, i);
            }
        }
        sum
    }

    /// Re Cov through the symmetrized proof formula
    /// (1/2) sum (lambda_i + lambda_j) Re(a_ij b_ji).
    fn re_covariance(&self) -> f64 {
        let n = self.dim();
        let mut sum = 0.0;
        for i in 0..n {
            for j in 0..n {
                sum += 0.5
                    * (self.lambdas[i] + self.lambdas[j])
                    * (self.a.get(i, j) * self.b.get(j, i)).re;
            }
        }
        sum
    }

    fn re_power_weighted_cross(&self, beta: f64) -> f64 {
        let lb: Vec<f64> = self.lambdas.iter().map(|l| l.powf(beta)).collect();
        let l1b: Vec<f64> = self.lambdas.iter().map(|l| l.powf(1.0 - beta)).collect();
        let mut sum = 0.0;
        for (i, li) in lb.iter().enumerate() {
            for (j, lj) in l1b.iter().enumerate() {
                sum += li * lj * (self.a.get(i, j) * self.b.get(j, i)).re;
            }
        }
        sum
    }
}

fn check_dims(rho: &DensityMatrix, obs: &Observable) -> Result<()> {
    if rho.dim() != obs.dim() {
        return Err(Error::DimensionMismatch {
            left: rho.dim(),
            right: obs.dim(),
        });
    }
    Ok(())
}

fn cross_route_tolerance(value: f64) -> f64 {
    tol::CROSS_ROUTE * value.abs().max(1.0)
}

/// Cov(A, B) = Tr(rho A B) - Tr(rho A) Tr(rho B).
pub fn covariance(rho: &DensityMatrix, a: &Observable, b: &Observable) -> Result<Complex64> {
    let sums = EigenSums::build(rho, a, b)?;
    let cov = sums.covariance();
    #[cfg(debug_assertions)]
    {
        let direct = covariance_trace(rho, a, b);
        debug_assert!(
            (cov - direct).norm() <= cross_route_tolerance(direct.norm()),
            "covariance routes diverge: eigen {cov}, trace {direct}"
        );
    }
    Ok(cov)
}

/// Var(A) = Cov(A, A), real and nonnegative.
pub fn variance(rho: &DensityMatrix, a: &Observable) -> Result<f64> {
    let sums = EigenSums::build(rho, a, a)?;
    Ok(sums.variance_of(&sums.a))
}

/// Corr_beta(A, B) = Tr(rho A B) - Tr(rho^beta A rho^(1-beta) B).
pub fn corr_beta(
    rho: &DensityMatrix,
    a: &Observable,
    b: &Observable,
    beta: BetaParameter,
) -> Result<Complex64> {
    let sums = EigenSums::build(rho, a, b)?;
    let corr = sums.covariance() - sums.power_weighted_cross(beta.value());
    #[cfg(debug_assertions)]
    {
        let direct = corr_beta_trace(rho, a, b, beta.value())?;
        debug_assert!(
            (corr - direct).norm() <= cross_route_tolerance(direct.norm()),
            "corr routes diverge: eigen {corr}, trace {direct}"
        );
    }
    Ok(corr)
}

/// I_beta(A) = Corr_beta(A, A) = -(1/2) Tr([rho^beta, A] [rho^(1-beta), A]).
///
/// Nonnegative and bounded by Var(A) on beta in (0, 1); evaluation on
/// [-1, 0) is allowed with no sign guarantee.
pub fn wyd_information(rho: &DensityMatrix, a: &Observable, beta: BetaParameter) -> Result<f64> {
    let sums = EigenSums::build(rho, a, a)?;
    let info = sums.variance_of(&sums.a) - sums.power_weighted_of(&sums.a, beta.value());
    #[cfg(debug_assertions)]
    {
        let direct = wyd_information_trace(rho, a, beta.value())?;
        debug_assert!(
            (info - direct).abs() <= cross_route_tolerance(direct),
            "skew information routes diverge: eigen {info}, trace {direct}"
        );
    }
    Ok(info)
}

/// Full statistics of one instance, computed from a single spectral
/// decomposition of rho.
pub fn statistics_report(
    rho: &DensityMatrix,
    a: &Observable,
    b: &Observable,
    beta: BetaParameter,
) -> Result<StatisticsReport> {
    let sums = EigenSums::build(rho, a, b)?;
    let bv = beta.value();

    let var_a = sums.variance_of(&sums.a);
    let var_b = sums.variance_of(&sums.b);
    let cov = sums.covariance();
    let re_cov = sums.re_covariance();
    let i_a = var_a - sums.power_weighted_of(&sums.a, bv);
    let i_b = var_b - sums.power_weighted_of(&sums.b, bv);
    let re_corr = re_cov - sums.re_power_weighted_cross(bv);

    debug_assert!(
        (re_cov - cov.re).abs() <= tol::IM_RESIDUE,
        "symmetrized Re Cov disagrees with Re of Cov"
    );

    let report = StatisticsReport {
        beta: bv,
        beta_in_theorem_range: beta.in_theorem_range(),
        var_a,
        var_b,
        cov_re: cov.re,
        cov_im: cov.im,
        s_gap: var_a * var_b - re_cov * re_cov,
        i_a,
        i_b,
        re_corr,
        t_gap: i_a * i_b - re_corr * re_corr,
    };

    #[cfg(debug_assertions)]
    {
        let s_direct = {
            let va = variance_trace(rho, a);
            let vb = variance_trace(rho, b);
            let c = covariance_trace(rho, a, b);
            va * vb - c.re * c.re
        };
        debug_assert!(
            (report.s_gap - s_direct).abs() <= cross_route_tolerance(s_direct),
            "s_gap routes diverge: eigen {}, trace {s_direct}",
            report.s_gap
        );
    }

    Ok(report)
}

// --- trace-formula route -------------------------------------------------
//
// Direct evaluations of the defining formulas on matrices. Used by the
// debug cross-checks above and by the unit tests as the independent
// second route; downstream code always goes through the eigenbasis sums.

fn expectation(rho: &DensityMatrix, x: &Observable) -> f64 {
    (rho.matrix() * x.matrix()).trace().re
}

fn covariance_trace(rho: &DensityMatrix, a: &Observable, b: &Observable) -> Complex64 {
    let mean_product = (&(rho.matrix() * a.matrix()) * b.matrix()).trace();
    mean_product - expectation(rho, a) * expectation(rho, b)
}

fn variance_trace(rho: &DensityMatrix, a: &Observable) -> f64 {
    let v = covariance_trace(rho, a, a);
    debug_assert!(v.im.abs() <= tol::IM_RESIDUE, "variance has imaginary residue");
    v.re
}

fn corr_beta_trace(
    rho: &DensityMatrix,
    a: &Observable,
    b: &Observable,
    beta: f64,
) -> Result<Complex64> {
    let rb = crate::linalg::matrix_power(rho, beta)?;
    let r1b = crate::linalg::matrix_power(rho, 1.0 - beta)?;
    let plain = (&(rho.matrix() * a.matrix()) * b.matrix()).trace();
    let twisted = (&(&(rb.matrix() * a.matrix()) * r1b.matrix()) * b.matrix()).trace();
    Ok(plain - twisted)
}

fn wyd_information_trace(rho: &DensityMatrix, a: &Observable, beta: f64) -> Result<f64> {
    let rb = crate::linalg::matrix_power(rho, beta)?;
    let r1b = crate::linalg::matrix_power(rho, 1.0 - beta)?;
    let cb = crate::linalg::commutator(rb.matrix(), a.matrix())?;
    let c1b = crate::linalg::commutator(r1b.matrix(), a.matrix())?;
    let value = (&cb * &c1b).trace().scale(-0.5);
    debug_assert!(
        value.im.abs() <= tol::IM_RESIDUE,
        "skew information has imaginary residue"
    );
    Ok(value.re)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{commutator, sample_density, sample_observable, ComplexMatrix};

    fn beta(b: f64) -> BetaParameter {
        BetaParameter::new(b).unwrap()
    }

    #[test]
    fn beta_parameter_domain() {
        assert!(BetaParameter::new(0.0).is_err());
        assert!(BetaParameter::new(1.0).is_err());
        assert!(BetaParameter::new(-1.5).is_err());
        assert!(BetaParameter::new(f64::NAN).is_err());
        assert!(BetaParameter::new(-1.0).unwrap().is_extended());
        assert!(beta(0.5).in_theorem_range());
        assert!(!beta(0.7).in_theorem_range());
    }

    #[test]
    fn variance_of_identity_is_zero() {
        let rho = sample_density(3, 1, 1e-8).unwrap();
        assert!(variance(&rho, &Observable::identity(3)).unwrap().abs() <= 1e-14);
    }

    #[test]
    fn variance_pauli_x_in_maximally_mixed() {
        let rho = DensityMatrix::from_diagonal(&[0.5, 0.5], 1e-8).unwrap();
        let v = variance(&rho, &Observable::pauli_x()).unwrap();
        assert!((v - 1.0).abs() <= 1e-12);
    }

    #[test]
    fn covariance_of_remark_projectors() {
        for t in [0.1, 0.3, 0.5, 0.9] {
            let rho = DensityMatrix::from_diagonal(&[t, 1.0 - t], 1e-8).unwrap();
            let a = Observable::from_real_diagonal(&[1.0, 0.0]);
            let b = Observable::from_real_diagonal(&[0.0, 1.0]);
            let c = covariance(&rho, &a, &b).unwrap();
            assert!((c.re + t * (1.0 - t)).abs() <= 1e-12);
            assert!(c.im.abs() <= 1e-14);
        }
    }

    #[test]
    fn covariance_is_conjugate_symmetric() {
        let rho = sample_density(4, 21, 1e-8).unwrap();
        let a = sample_observable(4, 22).unwrap();
        let b = sample_observable(4, 23).unwrap();
        let ab = covariance(&rho, &a, &b).unwrap();
        let ba = covariance(&rho, &b, &a).unwrap();
        assert!((ab - ba.conj()).norm() <= 1e-12);
    }

    #[test]
    fn corr_vanishes_when_everything_commutes() {
        let rho = DensityMatrix::from_diagonal(&[0.2, 0.3, 0.5], 1e-8).unwrap();
        let a = Observable::from_real_diagonal(&[1.0, 2.0, 3.0]);
        let b = Observable::from_real_diagonal(&[-1.0, 0.0, 2.0]);
        for bv in [-1.0, -0.5, 0.25, 0.5] {
            let c = corr_beta(&rho, &a, &b, beta(bv)).unwrap();
            assert!(c.norm() <= 1e-13);
        }
    }

    #[test]
    fn corr_of_self_equals_information() {
        let rho = sample_density(3, 31, 1e-8).unwrap();
        let a = sample_observable(3, 32).unwrap();
        for bv in [0.25, 0.5, -0.5] {
            let c = corr_beta(&rho, &a, &a, beta(bv)).unwrap();
            let i = wyd_information(&rho, &a, beta(bv)).unwrap();
            assert!(c.im.abs() <= 1e-12);
            assert!((c.re - i).abs() <= 1e-12);
        }
        // nonnegative in the proved range
        let i = wyd_information(&rho, &a, beta(0.3)).unwrap();
        let v = variance(&rho, &a).unwrap();
        assert!(i >= 0.0 && i <= v + 1e-12);
    }

    #[test]
    fn corr_purely_imaginary_for_pauli_pair() {
        for p in [0.3, 0.7] {
            let rho = DensityMatrix::from_diagonal(&[p, 1.0 - p], 1e-8).unwrap();
            for bv in [0.25, 0.5, -0.5] {
                let c = corr_beta(&rho, &Observable::pauli_x(), &Observable::pauli_y(), beta(bv))
                    .unwrap();
                assert!(c.re.abs() <= 1e-13, "Re Corr = {} at p={p}, beta={bv}", c.re);
            }
        }
    }

    #[test]
    fn skew_information_vanishes_for_commuting_observable() {
        let rho = DensityMatrix::from_diagonal(&[0.6, 0.4], 1e-8).unwrap();
        let a = Observable::from_real_diagonal(&[3.0, -1.0]);
        assert!(wyd_information(&rho, &a, beta(0.5)).unwrap().abs() <= 1e-14);
    }

    #[test]
    fn skew_information_frozen_values() {
        let rho = DensityMatrix::from_diagonal(&[0.1, 0.8, 0.1], 1e-8).unwrap();
        let mut m = ComplexMatrix::zeros(3);
        m.set(0, 1, Complex64::ONE);
        m.set(1, 0, Complex64::ONE);
        let a = Observable::new(m).unwrap();

        // (l1 + l2) - 2 sqrt(l1 l2) with l1 = 0.1, l2 = 0.8
        let i_half = wyd_information(&rho, &a, beta(0.5)).unwrap();
        let expected_half = 0.9 - 2.0 * 0.08_f64.sqrt();
        assert!((i_half - expected_half).abs() <= 1e-12);

        // (l1 + l2) - (l1^(1/4) l2^(3/4) + l2^(1/4) l1^(3/4))
        let i_quarter = wyd_information(&rho, &a, beta(0.25)).unwrap();
        let expected_quarter = 0.9
            - (0.1_f64.powf(0.25) * 0.8_f64.powf(0.75) + 0.8_f64.powf(0.25) * 0.1_f64.powf(0.75));
        assert!((i_quarter - expected_quarter).abs() <= 1e-12);

        // the trace-formula route agrees with the eigenbasis route
        let direct = wyd_information_trace(&rho, &a, 0.25).unwrap();
        assert!((i_quarter - direct).abs() <= 1e-10);
    }

    #[test]
    fn lemma_identities_hold() {
        for seed in 0..8u64 {
            let dim = 2 + (seed % 4) as usize;
            let rho = sample_density(dim, 500 + seed, 1e-8).unwrap();
            let a = sample_observable(dim, 600 + seed).unwrap();
            let b = sample_observable(dim, 700 + seed).unwrap();
            for bv in [-1.0, -0.5, 0.25, 0.5, 0.8] {
                let corr = corr_beta(&rho, &a, &b, beta(bv)).unwrap();

                // 2 Re Corr = -Tr([rho^beta, A] [rho^(1-beta), B])
                let rb = crate::linalg::matrix_power(&rho, bv).unwrap();
                let r1b = crate::linalg::matrix_power(&rho, 1.0 - bv).unwrap();
                let cb = commutator(rb.matrix(), a.matrix()).unwrap();
                let c1b = commutator(r1b.matrix(), b.matrix()).unwrap();
                let rhs = -(&cb * &c1b).trace();
                assert!(rhs.im.abs() <= 1e-10);
                assert!(
                    (2.0 * corr.re - rhs.re).abs() <= 1e-9,
                    "identity 1 fails at dim {dim}, beta {bv}"
                );

                // Corr = Cov - Tr(rho^beta A0 rho^(1-beta) B0)
                let a0 = crate::linalg::center(&a, &rho).unwrap();
                let b0 = crate::linalg::center(&b, &rho).unwrap();
                let twisted =
                    (&(&(rb.matrix() * a0.matrix()) * r1b.matrix()) * b0.matrix()).trace();
                let cov = covariance(&rho, &a, &b).unwrap();
                assert!(
                    (corr - (cov - twisted)).norm() <= 1e-9,
                    "identity 2 fails at dim {dim}, beta {bv}"
                );
            }
        }
    }

    #[test]
    fn report_gap_identities() {
        let rho = sample_density(4, 81, 1e-8).unwrap();
        let a = sample_observable(4, 82).unwrap();
        let b = sample_observable(4, 83).unwrap();
        let r = statistics_report(&rho, &a, &b, beta(0.3)).unwrap();
        assert!((r.s_gap - (r.var_a * r.var_b - r.cov_re * r.cov_re)).abs() <= 1e-12);
        assert!((r.t_gap - (r.i_a * r.i_b - r.re_corr * r.re_corr)).abs() <= 1e-12);
        assert!(r.s_gap >= r.t_gap - 1e-9, "theorem range violated");
    }

    #[test]
    fn proportional_observables_reach_equality() {
        let rho = sample_density(3, 91, 1e-8).unwrap();
        let a = sample_observable(3, 92).unwrap();
        // B = 2A + 3I
        let bm = &a.matrix().scale(Complex64::new(2.0, 0.0))
            + &ComplexMatrix::identity(3).scale(Complex64::new(3.0, 0.0));
        let b = Observable::new(bm).unwrap();
        for bv in [0.1, 0.25, 0.5] {
            let r = statistics_report(&rho, &a, &b, beta(bv)).unwrap();
            assert!(
                (r.s_gap - r.t_gap).abs() <= 1e-9,
                "equality case broken at beta {bv}: S={} T={}",
                r.s_gap,
                r.t_gap
            );
        }
    }

    #[test]
    fn remark_family_has_zero_gaps() {
        let rho = DensityMatrix::from_diagonal(&[0.3, 0.7], 1e-8).unwrap();
        let a = Observable::from_real_diagonal(&[1.0, 0.0]);
        let b = Observable::from_real_diagonal(&[0.0, 1.0]);
        for bv in [-1.0, -0.5, 0.25, 0.5] {
            let r = statistics_report(&rho, &a, &b, beta(bv)).unwrap();
            assert!(r.s_gap.abs() <= 1e-12);
            assert!(r.t_gap.abs() <= 1e-12);
        }
    }

    #[test]
    fn functionals_are_centering_invariant() {
        let rho = sample_density(3, 101, 1e-8).unwrap();
        let a = sample_observable(3, 102).unwrap();
        let b = sample_observable(3, 103).unwrap();
        let shift_a = &a.matrix().clone() + &ComplexMatrix::identity(3).scale(Complex64::new(2.5, 0.0));
        let shift_b = &b.matrix().clone() + &ComplexMatrix::identity(3).scale(Complex64::new(-1.25, 0.0));
        let sa = Observable::new(shift_a).unwrap();
        let sb = Observable::new(shift_b).unwrap();
        let r1 = statistics_report(&rho, &a, &b, beta(0.3)).unwrap();
        let r2 = statistics_report(&rho, &sa, &sb, beta(0.3)).unwrap();
        for (x, y) in [
            (r1.var_a, r2.var_a),
            (r1.var_b, r2.var_b),
            (r1.s_gap, r2.s_gap),
            (r1.i_a, r2.i_a),
            (r1.i_b, r2.i_b),
            (r1.re_corr, r2.re_corr),
            (r1.t_gap, r2.t_gap),
        ] {
            assert!((x - y).abs() <= 1e-10, "shift changed a functional: {x} vs {y}");
        }
    }

    #[test]
    fn schroedinger_and_heisenberg_bounds() {
        for seed in 0..25u64 {
            let dim = 2 + (seed % 5) as usize;
            let rho = sample_density(dim, 900 + seed, 1e-8).unwrap();
            let a = sample_observable(dim, 1900 + seed).unwrap();
            let b = sample_observable(dim, 2900 + seed).unwrap();
            let comm = commutator(a.matrix(), b.matrix()).unwrap();
            let bound = 0.25 * (rho.matrix() * &comm).trace().norm_sqr();
            let r = statistics_report(&rho, &a, &b, beta(0.5)).unwrap();
            assert!(r.s_gap >= bound - 1e-9, "Schrodinger bound violated");
            assert!(r.var_a * r.var_b >= bound - 1e-9, "Heisenberg bound violated");
        }
    }

    #[test]
    fn beta_symmetry_of_t_gap() {
        let rho = sample_density(4, 111, 1e-8).unwrap();
        let a = sample_observable(4, 112).unwrap();
        let b = sample_observable(4, 113).unwrap();
        for bv in [0.1, 0.25, 0.4, 0.49] {
            let r1 = statistics_report(&rho, &a, &b, beta(bv)).unwrap();
            let r2 = statistics_report(&rho, &a, &b, beta(1.0 - bv)).unwrap();
            assert!(
                (r1.t_gap - r2.t_gap).abs() <= 1e-10,
                "t_gap not beta-symmetric at {bv}"
            );
        }
    }

    #[test]
    fn skew_gap_monotone_in_beta() {
        for seed in 0..10u64 {
            let dim = 2 + (seed % 4) as usize;
            let rho = sample_density(dim, 1200 + seed, 1e-8).unwrap();
            let a = sample_observable(dim, 1300 + seed).unwrap();
            let b = sample_observable(dim, 1400 + seed).unwrap();
            let mut prev = f64::NEG_INFINITY;
            for k in 1..=10 {
                let bv = 0.05 * k as f64;
                let t = statistics_report(&rho, &a, &b, beta(bv)).unwrap().t_gap;
                assert!(
                    t >= prev - 1e-9,
                    "t_gap decreased from {prev} to {t} at beta {bv} (seed {seed})"
                );
                prev = t;
            }
        }
    }
}
