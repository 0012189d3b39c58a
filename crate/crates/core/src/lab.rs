//! Verification and refutation engine for the uncertainty-gap
//! inequality chain.
//!
//! The verified side: for beta in (0, 1/2] the skew-information gap
//! never exceeds the Schrodinger gap, and equals the geometric bound
//! G(f_beta). The refuted side: for beta in [-1, 0) a one-parameter
//! family of 3x3 instances makes the skew-information gap arbitrarily
//! large, so the extension of the inequality fails. This module carries
//! the eigenbasis quadruple sums of the proof, the counterexample
//! family with its closed-form gap, a violation search over that
//! family, and report-only exploration harnesses for the open
//! questions (which this code never asserts).

use serde::Serialize;

use crate::error::{Error, Result};
use crate::io::MatrixFile;
use crate::linalg::{
    eigenbasis_coefficients, sample_density, sample_observable, ComplexMatrix, DensityMatrix,
    Observable,
};
use crate::metrics::{upf_bound, MetricReport, MonotoneFunctionSpec};
use crate::stats::{statistics_report, BetaParameter};
use crate::tol;

/// Verdict for one (rho, A, B, metric) instance.
///
/// For WYD metrics the candidate bound is the skew-information gap
/// `T_beta` and the quadruple-sum components xi/eta are reported; for
/// the other catalog entries the candidate is the geometric bound
/// `G(f)` and those fields are absent.
#[derive(Clone, Debug, Serialize)]
pub struct InequalityReport {
    pub metric_spec: MonotoneFunctionSpec,
    pub s_gap: f64,
    pub t_gap: Option<f64>,
    pub xi: Option<f64>,
    pub eta: Option<f64>,
    /// G(f) = f(0)^2/4 * area^2, zero whenever f(0) = 0.
    pub bound: f64,
    /// s_gap minus the candidate bound (T for WYD, G otherwise).
    pub gap: f64,
    pub holds: bool,
    pub tolerance: f64,
    /// Present for WYD metrics: whether beta lies in the proved range
    /// (0, 1/2]. Outside it the verdict reports on an extension that
    /// the counterexample family refutes.
    pub beta_in_theorem_range: Option<bool>,
    pub metric: MetricReport,
}

/// Outcome of a violation search over the counterexample family.
#[derive(Clone, Debug, Serialize)]
pub struct CounterexampleRecord {
    pub beta: f64,
    /// First violating parameter met while scanning down from t_max.
    pub t: f64,
    /// Largest violating parameter, refined by bisection when a sign
    /// change is bracketed on the grid.
    pub t0: f64,
    pub gap_at_t0: f64,
    pub closed_form_gap: f64,
    /// xi - eta recomputed from the matrices at t0.
    pub matrix_gap: f64,
}

/// The instance at which an exploration attained its minimum gap.
#[derive(Clone, Debug, Serialize)]
pub struct ArgminInstance {
    pub trial: usize,
    pub dim: usize,
    pub rho: MatrixFile,
    pub obs_a: MatrixFile,
    pub obs_b: MatrixFile,
}

/// Summary of a randomized exploration. Report-only: exploration never
/// asserts the open questions, it just records what it saw.
#[derive(Clone, Debug, Serialize)]
pub struct ExplorationSummary {
    pub metric_spec: MonotoneFunctionSpec,
    pub trials: usize,
    pub dims: Vec<usize>,
    pub seed: u64,
    pub eigen_floor: f64,
    pub tolerance: f64,
    pub min_gap: f64,
    pub violations_found: usize,
    pub argmin: ArgminInstance,
}

/// Where exploration trials come from.
#[derive(Clone, Debug)]
pub enum TrialSource {
    /// Seeded Hilbert-Schmidt states and Gaussian observables, cycling
    /// through the listed dimensions.
    Random { dims: Vec<usize> },
    /// The counterexample family, cycling through the listed parameters.
    CeGrid { t_values: Vec<f64> },
}

/// Pointwise order of two catalog functions on the standard grid.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PointwiseOrder {
    LessOrEqual,
    GreaterOrEqual,
    Equal,
    Incomparable,
}

/// Outcome of a G-monotonicity probe between two catalog entries.
#[derive(Clone, Debug, Serialize)]
pub struct GMonotonicityReport {
    pub spec_a: MonotoneFunctionSpec,
    pub spec_b: MonotoneFunctionSpec,
    pub pointwise: PointwiseOrder,
    pub trials: usize,
    pub dims: Vec<usize>,
    pub seed: u64,
    /// min over trials of G(spec_b) - G(spec_a).
    pub min_difference: f64,
    /// True when both entries are WYD with 0 < beta_a <= beta_b <= 1/2,
    /// the range where the transfer is a theorem.
    pub proved_range: bool,
    /// Set only in the proved range: whether the sampled minimum
    /// difference cleared -1e-9. Outside that range the difference is
    /// reported without a verdict.
    pub asserted_nonnegative: Option<bool>,
}

/// Weight of the quadruple sums:
/// `(li + lj) lk^b ll^(1-b) + (lk + ll) li^b lj^(1-b) - 2 li^b lj^(1-b) lk^b ll^(1-b)`.
///
/// Nonnegative for positive eigenvalues when beta lies in (0, 1).
pub fn quadruple_weight(li: f64, lj: f64, lk: f64, ll: f64, beta: f64) -> f64 {
    let mij = li.powf(beta) * lj.powf(1.0 - beta);
    let mkl = lk.powf(beta) * ll.powf(1.0 - beta);
    (li + lj) * mkl + (lk + ll) * mij - 2.0 * mij * mkl
}

/// The explicit O(n^4) eigenbasis sums of the proof. xi - eta equals
/// s_gap - t_gap of the statistics route.
pub fn xi_eta(
    rho: &DensityMatrix,
    a: &Observable,
    b: &Observable,
    beta: BetaParameter,
) -> Result<(f64, f64)> {
    let lambdas = rho.spectral().eigenvalues();
    let av = eigenbasis_coefficients(a, rho)?;
    let bv = eigenbasis_coefficients(b, rho)?;
    let n = lambdas.len();
    let bval = beta.value();
    let lb: Vec<f64> = lambdas.iter().map(|l| l.powf(bval)).collect();
    let l1b: Vec<f64> = lambdas.iter().map(|l| l.powf(1.0 - bval)).collect();

    let mut xi = 0.0;
    let mut eta = 0.0;
    for i in 0..n {
        for j in 0..n {
            let aij = av.get(i, j);
            let aji = av.get(j, i);
            let r_ab = (aij * bv.get(j, i)).re;
            for k in 0..n {
                for l in 0..n {
                    let w = (lambdas[i] + lambdas[j]) * lb[k] * l1b[l]
                        + (lambdas[k] + lambdas[l]) * lb[i] * l1b[j]
                        - 2.0 * lb[i] * l1b[j] * lb[k] * l1b[l];
                    let bkl = bv.get(k, l);
                    let blk = bv.get(l, k);
                    xi += 0.5 * w * (aij * aji * bkl * blk).re;
                    eta += 0.5 * w * r_ab * (av.get(k, l) * blk).re;
                }
            }
        }
    }
    Ok((xi, eta))
}

const CE_DIM: usize = 3;

/// The counterexample family: rho = diag(t, 1-2t, t) with A coupling
/// the first two levels and B the last two.
pub fn ce_family(t: f64) -> Result<(DensityMatrix, Observable, Observable)> {
    let floor = tol::DEFAULT_EIGEN_FLOOR;
    if !t.is_finite() || t <= floor || t >= 0.5 - floor {
        return Err(Error::invalid(
            "t",
            format!("family parameter must lie in ({floor:e}, {}), got {t}", 0.5 - floor),
        ));
    }
    let rho = DensityMatrix::from_diagonal(&[t, 1.0 - 2.0 * t, t], floor)?;
    let coupling = |p: usize, q: usize| {
        Observable::new(ComplexMatrix::from_fn(CE_DIM, |i, j| {
            if (i, j) == (p, q) || (i, j) == (q, p) {
                num_complex::Complex64::ONE
            } else {
                num_complex::Complex64::ZERO
            }
        }))
        .expect("coupling matrices are Hermitian")
    };
    Ok((rho, coupling(0, 1), coupling(1, 2)))
}

/// Closed-form gap xi - eta of the counterexample family:
/// {2(1-t) - t^b (1-2t)^(1-b) - (1-2t)^b t^(1-b)}
///   * {t^b (1-2t)^(1-b) + (1-2t)^b t^(1-b)}.
pub fn ce_closed_form_gap(t: f64, beta: f64) -> Result<f64> {
    if !t.is_finite() || t <= 0.0 || t >= 0.5 {
        return Err(Error::invalid(
            "t",
            format!("family parameter must lie in (0, 1/2), got {t}"),
        ));
    }
    BetaParameter::new(beta)?;
    let s = 1.0 - 2.0 * t;
    let u = t.powf(beta) * s.powf(1.0 - beta);
    let v = s.powf(beta) * t.powf(1.0 - beta);
    Ok((2.0 * (1.0 - t) - u - v) * (u + v))
}

fn cross_route_tolerance(value: f64) -> f64 {
    tol::CROSS_ROUTE * value.abs().max(1.0)
}

/// Search the counterexample family for a violating parameter.
///
/// Scans the closed-form gap on a log-spaced grid descending from
/// `t_max` to `t_min`. The first grid point with a negative gap is
/// recorded; when a sign change is bracketed the boundary is refined by
/// bisection to [`tol::BISECTION_INTERVAL`] and the largest violating
/// parameter becomes `t0` (violations cluster at t -> 0+, so the
/// largest one sits farthest from the eigenvalue floor and is the most
/// robust numerically). The record cross-checks the closed form against
/// the quadruple sums on the actual matrices at `t0`.
pub fn find_violation(
    beta: f64,
    t_min: f64,
    t_max: f64,
    steps: usize,
) -> Result<CounterexampleRecord> {
    if !(-1.0..0.0).contains(&beta) {
        return Err(Error::invalid(
            "beta",
            format!("violation search applies to beta in [-1, 0), got {beta}"),
        ));
    }
    if !(t_min > 0.0 && t_min < t_max && t_max < 0.5) {
        return Err(Error::invalid(
            "t range",
            format!("need 0 < t_min < t_max < 1/2, got [{t_min}, {t_max}]"),
        ));
    }
    if steps < 2 {
        return Err(Error::invalid("steps", format!("need at least 2, got {steps}")));
    }

    let (ln_min, ln_max) = (t_min.ln(), t_max.ln());
    let grid_point = |k: usize| {
        if k == steps - 1 {
            t_min
        } else {
            (ln_max + k as f64 * (ln_min - ln_max) / (steps - 1) as f64).exp()
        }
    };

    let mut above: Option<f64> = None; // previous (larger) grid t with gap >= 0
    let mut found: Option<f64> = None;
    for k in 0..steps {
        let t = grid_point(k);
        let gap = ce_closed_form_gap(t, beta)?;
        if gap < 0.0 {
            found = Some(t);
            break;
        }
        above = Some(t);
    }
    let t_first = found.ok_or_else(|| {
        Error::NoViolationFound(format!(
            "no negative gap for beta = {beta} on [{t_min}, {t_max}] with {steps} log steps; \
             widen the scan towards t_min -> 0"
        ))
    })?;

    let t0 = match above {
        None => t_first, // already violating at t_max; the change of sign lies above the grid
        Some(hi) => {
            let mut lo = t_first;
            let mut hi = hi;
            while hi - lo > tol::BISECTION_INTERVAL {
                let mid = 0.5 * (lo + hi);
                if ce_closed_form_gap(mid, beta)? < 0.0 {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            lo
        }
    };

    let closed_form_gap = ce_closed_form_gap(t0, beta)?;
    let (rho, a, b) = ce_family(t0)?;
    let (xi, eta) = xi_eta(&rho, &a, &b, BetaParameter::new(beta)?)?;
    let matrix_gap = xi - eta;
    if (closed_form_gap - matrix_gap).abs() > cross_route_tolerance(closed_form_gap) {
        return Err(Error::ConsistencyCheck(format!(
            "closed-form gap {closed_form_gap} and matrix gap {matrix_gap} diverge at t0 = {t0}"
        )));
    }

    Ok(CounterexampleRecord {
        beta,
        t: t_first,
        t0,
        gap_at_t0: closed_form_gap,
        closed_form_gap,
        matrix_gap,
    })
}

/// Two commuting projectors on a 2x2 state: every gap vanishes
/// identically, so the strict form of the reversed inequality fails.
pub fn remark_family(t: f64) -> Result<(DensityMatrix, Observable, Observable)> {
    let floor = tol::DEFAULT_EIGEN_FLOOR;
    if !t.is_finite() || t <= floor || t >= 1.0 - floor {
        return Err(Error::invalid(
            "t",
            format!("parameter must lie in ({floor:e}, {}), got {t}", 1.0 - floor),
        ));
    }
    let rho = DensityMatrix::from_diagonal(&[t, 1.0 - t], floor)?;
    Ok((
        rho,
        Observable::from_real_diagonal(&[1.0, 0.0]),
        Observable::from_real_diagonal(&[0.0, 1.0]),
    ))
}

/// Evaluate one instance against the candidate bound of `spec` and
/// cross-validate every route to the same number.
///
/// For WYD entries the statistics route (t_gap), the quadruple-sum
/// route (xi - eta) and the geometric route ((beta(1-beta))^2/4 area^2)
/// must all agree before a verdict is produced.
pub fn check(
    rho: &DensityMatrix,
    a: &Observable,
    b: &Observable,
    spec: MonotoneFunctionSpec,
    tolerance: f64,
) -> Result<InequalityReport> {
    if !tolerance.is_finite() || tolerance <= 0.0 {
        return Err(Error::invalid(
            "tolerance",
            format!("must be positive, got {tolerance}"),
        ));
    }
    let metric = upf_bound(spec, rho, a, b)?;

    match spec.beta() {
        Some(bval) => {
            let beta = BetaParameter::new(bval)?;
            let stats = statistics_report(rho, a, b, beta)?;
            let (xi, eta) = xi_eta(rho, a, b, beta)?;

            let via_sums = xi - eta;
            let via_stats = stats.s_gap - stats.t_gap;
            if (via_sums - via_stats).abs() > cross_route_tolerance(via_stats) {
                return Err(Error::ConsistencyCheck(format!(
                    "quadruple sums give gap {via_sums}, statistics give {via_stats}"
                )));
            }

            let prefactor = bval * (1.0 - bval);
            let t_geometric = prefactor * prefactor / 4.0 * metric.area * metric.area;
            if (stats.t_gap - t_geometric).abs() > cross_route_tolerance(stats.t_gap) {
                return Err(Error::ConsistencyCheck(format!(
                    "skew-information gap {} disagrees with its geometric form {}",
                    stats.t_gap, t_geometric
                )));
            }

            let gap = stats.s_gap - stats.t_gap;
            Ok(InequalityReport {
                metric_spec: spec,
                s_gap: stats.s_gap,
                t_gap: Some(stats.t_gap),
                xi: Some(xi),
                eta: Some(eta),
                bound: metric.bound,
                gap,
                holds: gap >= -tolerance,
                tolerance,
                beta_in_theorem_range: Some(beta.in_theorem_range()),
                metric,
            })
        }
        None => {
            let s_gap = schroedinger_gap(rho, a, b)?;
            let gap = s_gap - metric.bound;
            Ok(InequalityReport {
                metric_spec: spec,
                s_gap,
                t_gap: None,
                xi: None,
                eta: None,
                bound: metric.bound,
                gap,
                holds: gap >= -tolerance,
                tolerance,
                beta_in_theorem_range: None,
                metric,
            })
        }
    }
}

fn schroedinger_gap(rho: &DensityMatrix, a: &Observable, b: &Observable) -> Result<f64> {
    // any valid beta gives the same s_gap; 1/2 keeps the workspace cheap
    let beta = BetaParameter::new(0.5).expect("1/2 is a valid exponent");
    Ok(statistics_report(rho, a, b, beta)?.s_gap)
}

/// splitmix64 finalizer, used to derive independent per-trial seeds
/// from (base seed, counter).
fn derive_seed(base: u64, counter: u64) -> u64 {
    let mut z = base
        .wrapping_add(0x9E3779B97F4A7C15)
        .wrapping_add(counter.wrapping_mul(0xD1B54A32D192ED03));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
    z ^ (z >> 31)
}

fn candidate_gap(
    spec: MonotoneFunctionSpec,
    rho: &DensityMatrix,
    a: &Observable,
    b: &Observable,
) -> Result<f64> {
    match spec.beta() {
        Some(bval) => {
            let stats = statistics_report(rho, a, b, BetaParameter::new(bval)?)?;
            Ok(stats.s_gap - stats.t_gap)
        }
        None => Ok(schroedinger_gap(rho, a, b)? - upf_bound(spec, rho, a, b)?.bound),
    }
}

/// Sample instances and record the minimum gap against the candidate
/// bound of `spec`, plus the instance attaining it. Deterministic per
/// seed: trial seeds are derived by counter and the reduction is an
/// ordered fold, so the result is identical to sequential evaluation.
///
/// This is a report-only harness for the open questions; it never turns
/// a sampled sign into an assertion.
pub fn explore(
    spec: MonotoneFunctionSpec,
    source: &TrialSource,
    trials: usize,
    seed: u64,
    eigen_floor: f64,
    tolerance: f64,
) -> Result<ExplorationSummary> {
    if trials == 0 {
        return Err(Error::invalid("trials", "must be at least 1".to_string()));
    }
    if let TrialSource::Random { dims } = source {
        if dims.is_empty() || dims.iter().any(|&d| d < 2) {
            return Err(Error::invalid(
                "dims",
                format!("need a nonempty list of dimensions >= 2, got {dims:?}"),
            ));
        }
    }

    let mut min_gap = f64::INFINITY;
    let mut violations = 0usize;
    let mut argmin: Option<ArgminInstance> = None;

    for trial in 0..trials {
        let (rho, a, b) = match source {
            TrialSource::Random { dims } => {
                let dim = dims[trial % dims.len()];
                let rho = sample_density(dim, derive_seed(seed, 3 * trial as u64), eigen_floor)?;
                let a = sample_observable(dim, derive_seed(seed, 3 * trial as u64 + 1))?;
                let b = sample_observable(dim, derive_seed(seed, 3 * trial as u64 + 2))?;
                (rho, a, b)
            }
            TrialSource::CeGrid { t_values } => {
                if t_values.is_empty() {
                    return Err(Error::invalid("t_values", "must be nonempty".to_string()));
                }
                ce_family(t_values[trial % t_values.len()])?
            }
        };
        let gap = candidate_gap(spec, &rho, &a, &b)?;
        if gap < -tolerance {
            violations += 1;
        }
        if gap < min_gap {
            min_gap = gap;
            argmin = Some(ArgminInstance {
                trial,
                dim: rho.dim(),
                rho: MatrixFile::from_matrix(rho.matrix()),
                obs_a: MatrixFile::from_matrix(a.matrix()),
                obs_b: MatrixFile::from_matrix(b.matrix()),
            });
        }
    }

    let argmin = argmin.expect("at least one trial ran");
    let floor_used = match source {
        TrialSource::Random { .. } => eigen_floor,
        TrialSource::CeGrid { .. } => tol::DEFAULT_EIGEN_FLOOR,
    };
    let recomputed = candidate_gap(
        spec,
        &DensityMatrix::with_floor(argmin.rho.to_matrix()?, floor_used)?,
        &Observable::new(argmin.obs_a.to_matrix()?)?,
        &Observable::new(argmin.obs_b.to_matrix()?)?,
    )?;
    if (recomputed - min_gap).abs() > 1e-10 {
        return Err(Error::ConsistencyCheck(format!(
            "argmin does not reproduce its gap: stored {min_gap}, recomputed {recomputed}"
        )));
    }

    Ok(ExplorationSummary {
        metric_spec: spec,
        trials,
        dims: match source {
            TrialSource::Random { dims } => dims.clone(),
            TrialSource::CeGrid { .. } => vec![CE_DIM],
        },
        seed,
        eigen_floor: floor_used,
        tolerance,
        min_gap,
        violations_found: violations,
        argmin,
    })
}

/// Compare G(spec_a) against G(spec_b) on sampled instances, after
/// classifying the pointwise order of the two functions on the standard
/// log grid. A nonnegativity verdict is attached only in the range
/// where the transfer is proved (both WYD, 0 < beta_a <= beta_b <= 1/2);
/// everywhere else the minimum difference is reported without judgment.
pub fn g_monotonicity_probe(
    spec_a: MonotoneFunctionSpec,
    spec_b: MonotoneFunctionSpec,
    dims: &[usize],
    trials: usize,
    seed: u64,
) -> Result<GMonotonicityReport> {
    if trials == 0 {
        return Err(Error::invalid("trials", "must be at least 1".to_string()));
    }
    if dims.is_empty() || dims.iter().any(|&d| d < 2) {
        return Err(Error::invalid(
            "dims",
            format!("need a nonempty list of dimensions >= 2, got {dims:?}"),
        ));
    }

    let mut a_le_b = true;
    let mut b_le_a = true;
    for k in 0..=120 {
        let x = 10f64.powf(-6.0 + 0.1 * k as f64);
        let fa = spec_a.evaluate(x)?;
        let fb = spec_b.evaluate(x)?;
        let slack = 1e-10 * fa.abs().max(fb.abs()).max(1.0);
        if fa > fb + slack {
            a_le_b = false;
        }
        if fb > fa + slack {
            b_le_a = false;
        }
    }
    let pointwise = match (a_le_b, b_le_a) {
        (true, true) => PointwiseOrder::Equal,
        (true, false) => PointwiseOrder::LessOrEqual,
        (false, true) => PointwiseOrder::GreaterOrEqual,
        (false, false) => PointwiseOrder::Incomparable,
    };

    let mut min_difference = f64::INFINITY;
    for trial in 0..trials {
        let dim = dims[trial % dims.len()];
        let rho = sample_density(
            dim,
            derive_seed(seed, 3 * trial as u64),
            tol::DEFAULT_EIGEN_FLOOR,
        )?;
        let a = sample_observable(dim, derive_seed(seed, 3 * trial as u64 + 1))?;
        let b = sample_observable(dim, derive_seed(seed, 3 * trial as u64 + 2))?;
        let ga = upf_bound(spec_a, &rho, &a, &b)?.bound;
        let gb = upf_bound(spec_b, &rho, &a, &b)?.bound;
        min_difference = min_difference.min(gb - ga);
    }

    let proved_range = match (spec_a.beta(), spec_b.beta()) {
        (Some(ba), Some(bb)) => 0.0 < ba && ba <= bb && bb <= 0.5,
        _ => false,
    };

    Ok(GMonotonicityReport {
        spec_a,
        spec_b,
        pointwise,
        trials,
        dims: dims.to_vec(),
        seed,
        min_difference,
        proved_range,
        asserted_nonnegative: proved_range.then_some(min_difference >= -tol::DEFAULT_GAP),
    })
}
