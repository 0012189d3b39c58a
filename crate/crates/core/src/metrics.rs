//! The monotone-metric catalog and the geometry built on it.
//!
//! A symmetric, normalized operator monotone function f induces a
//! quantum Fisher information metric through the kernel
//! `c_f(x, y) = 1 / (y f(x/y))` evaluated on eigenvalue pairs of the
//! state. This module carries the closed catalog of such functions
//! (the WYD family f_beta, the BKM limit f_0, and the h_gamma family),
//! kernel and metric evaluation, the parallelogram area of two tangent
//! directions, and the geometric uncertainty bound
//! `G(f) = f(0)^2/4 * Area_f(i[A,rho], i[B,rho])^2`.
//!
//! The catalog is closed on purpose: operator monotonicity of an
//! arbitrary user-supplied function cannot be validated numerically.

use num_complex::Complex64;
use serde::{Serialize, Serializer};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::linalg::{tangent_of, DensityMatrix, Observable, TangentVector};
use crate::tol;

#[derive(Clone, Copy, Debug, PartialEq)]
enum Kind {
    /// f_beta(x) = beta(1-beta)(x-1)^2 / ((x^beta - 1)(x^(1-beta) - 1)),
    /// beta in [-1, 1/2] \ {0}.
    Wyd { beta: f64 },
    /// f_0(x) = (x - 1)/log x, the beta -> 0 limit.
    Bkm,
    /// h_gamma(x) = ((1 + x^gamma)/2)^(1/gamma), gamma in [1/2, 1].
    HGamma { gamma: f64 },
}

/// One entry of the monotone-function catalog.
///
/// Aliases: `rld` = WYD(-1), `wy` = WYD(1/2) = HGamma(1/2),
/// `sld` = `bures` = HGamma(1), `bkm` = the f_0 limit.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MonotoneFunctionSpec {
    kind: Kind,
}

impl MonotoneFunctionSpec {
    pub fn wyd(beta: f64) -> Result<Self> {
        if !beta.is_finite() || !(-1.0..=0.5).contains(&beta) || beta == 0.0 {
            return Err(Error::invalid(
                "beta",
                format!("WYD metric requires beta in [-1, 1/2] \\ {{0}}, got {beta}"),
            ));
        }
        Ok(Self {
            kind: Kind::Wyd { beta },
        })
    }

    pub fn h_gamma(gamma: f64) -> Result<Self> {
        if !gamma.is_finite() || !(0.5..=1.0).contains(&gamma) {
            return Err(Error::invalid(
                "gamma",
                format!("h_gamma metric requires gamma in [1/2, 1], got {gamma}"),
            ));
        }
        Ok(Self {
            kind: Kind::HGamma { gamma },
        })
    }

    pub fn bkm() -> Self {
        Self { kind: Kind::Bkm }
    }

    pub fn rld() -> Self {
        Self::wyd(-1.0).expect("-1 is in range")
    }

    pub fn wy() -> Self {
        Self::wyd(0.5).expect("1/2 is in range")
    }

    pub fn sld() -> Self {
        Self::h_gamma(1.0).expect("1 is in range")
    }

    /// The WYD exponent when this is a WYD entry.
    pub fn beta(&self) -> Option<f64> {
        match self.kind {
            Kind::Wyd { beta } => Some(beta),
            _ => None,
        }
    }

    /// Radial limit f(0), in closed form per catalog entry. Positive
    /// exactly when the geometric bound G(f) is non-trivial.
    pub fn at_zero(&self) -> f64 {
        match self.kind {
            Kind::Wyd { beta } if beta > 0.0 => beta * (1.0 - beta),
            Kind::Wyd { .. } => 0.0,
            Kind::Bkm => 0.0,
            Kind::HGamma { gamma } => 0.5_f64.powf(1.0 / gamma),
        }
    }

    /// Evaluate f at x > 0. Continuous at x = 1 where f(1) = 1 by
    /// normalization; the degeneracy guard collapses arguments within
    /// [`tol::KERNEL_COLLAPSE_REL`] of 1 to the limiting value.
    pub fn evaluate(&self, x: f64) -> Result<f64> {
        if !x.is_finite() || x <= 0.0 {
            return Err(Error::invalid(
                "x",
                format!("monotone functions are evaluated on (0, inf), got {x}"),
            ));
        }
        if (x - 1.0).abs() <= tol::KERNEL_COLLAPSE_REL * x.max(1.0) {
            return Ok(1.0);
        }
        Ok(match self.kind {
            Kind::Wyd { beta } => {
                let ln_x = x.ln();
                let num = beta * (1.0 - beta) * (x - 1.0) * (x - 1.0);
                let den = (beta * ln_x).exp_m1() * ((1.0 - beta) * ln_x).exp_m1();
                num / den
            }
            Kind::Bkm => (x - 1.0) / x.ln(),
            Kind::HGamma { gamma } => ((1.0 + x.powf(gamma)) / 2.0).powf(1.0 / gamma),
        })
    }

    /// The kernel c_f(x, y) = 1 / (y f(x/y)) on eigenvalue pairs.
    ///
    /// Arguments within [`tol::KERNEL_COLLAPSE_REL`] of each other are
    /// treated as degenerate and the limit c(x, x) = 1/x is used at the
    /// midpoint, which keeps the kernel exactly symmetric. Outside the
    /// guard the pair is evaluated in sorted order for the same reason.
    pub fn kernel(&self, x: f64, y: f64) -> Result<f64> {
        if !(x > 0.0 && y > 0.0) || !x.is_finite() || !y.is_finite() {
            return Err(Error::invalid(
                "(x, y)",
                format!("kernel arguments must be positive, got ({x}, {y})"),
            ));
        }
        if (x - y).abs() <= tol::KERNEL_COLLAPSE_REL * x.max(y) {
            return Ok(2.0 / (x + y));
        }
        let (lo, hi) = if x < y { (x, y) } else { (y, x) };
        Ok(1.0 / (hi * self.evaluate(lo / hi)?))
    }
}

impl fmt::Display for MonotoneFunctionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            Kind::Wyd { beta } => write!(f, "wyd:{beta}"),
            Kind::Bkm => write!(f, "bkm"),
            Kind::HGamma { gamma } => write!(f, "hgamma:{gamma}"),
        }
    }
}

impl FromStr for MonotoneFunctionSpec {
    type Err = Error;

    /// Grammar: `wyd:<beta>`, `bkm`, `hgamma:<gamma>`, plus the aliases
    /// `rld`, `wy`, `sld`, `bures`.
    fn from_str(s: &str) -> Result<Self> {
        let lower = s.trim().to_ascii_lowercase();
        match lower.as_str() {
            "bkm" => return Ok(Self::bkm()),
            "rld" => return Ok(Self::rld()),
            "wy" => return Ok(Self::wy()),
            "sld" | "bures" => return Ok(Self::sld()),
            _ => {}
        }
        if let Some(rest) = lower.strip_prefix("wyd:") {
            let beta: f64 = rest.parse().map_err(|_| {
                Error::invalid("metric", format!("cannot parse WYD exponent from `{s}`"))
            })?;
            return Self::wyd(beta);
        }
        if let Some(rest) = lower.strip_prefix("hgamma:") {
            let gamma: f64 = rest.parse().map_err(|_| {
                Error::invalid("metric", format!("cannot parse h_gamma exponent from `{s}`"))
            })?;
            return Self::h_gamma(gamma);
        }
        Err(Error::invalid(
            "metric",
            format!("unknown metric spec `{s}` (expected wyd:<beta>, bkm, hgamma:<gamma>, rld, wy, sld, bures)"),
        ))
    }
}

impl Serialize for MonotoneFunctionSpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Metric data of one (spec, rho, A, B) instance.
#[derive(Clone, Debug, Serialize)]
pub struct MetricReport {
    pub metric_spec: MonotoneFunctionSpec,
    pub g_aa: f64,
    pub g_bb: f64,
    pub g_ab_re: f64,
    pub g_ab_im: f64,
    /// Area of the parallelogram spanned by the two tangent directions.
    pub area: f64,
    pub f_zero: f64,
    /// G(f) = f(0)^2 / 4 * area^2.
    pub bound: f64,
}

fn check_tangent_dims(rho: &DensityMatrix, x: &TangentVector) -> Result<()> {
    if rho.dim() != x.dim() {
        return Err(Error::DimensionMismatch {
            left: rho.dim(),
            right: x.dim(),
        });
    }
    Ok(())
}

/// The monotone metric g_f(X, Y) at rho, evaluated in the eigenbasis:
/// sum over (i, j) of c_f(lambda_i, lambda_j) conj(X~[i,j]) Y~[i,j].
///
/// Hermitian sesquilinear: g(X, Y) = conj(g(Y, X)); g(X, X) is real and
/// nonnegative.
pub fn metric(
    spec: MonotoneFunctionSpec,
    rho: &DensityMatrix,
    x: &TangentVector,
    y: &TangentVector,
) -> Result<Complex64> {
    check_tangent_dims(rho, x)?;
    check_tangent_dims(rho, y)?;
    let spectral = rho.spectral();
    let lambdas = spectral.eigenvalues();
    let xt = spectral.to_eigenbasis(x.matrix());
    let yt = spectral.to_eigenbasis(y.matrix());
    let n = lambdas.len();
    let mut g = Complex64::ZERO;
    for i in 0..n {
        for j in 0..n {
            let c = spec.kernel(lambdas[i], lambdas[j])?;
            g += c * xt.get(i, j).conj() * yt.get(i, j);
        }
    }
    Ok(g)
}

fn metric_quadratic(
    spec: MonotoneFunctionSpec,
    rho: &DensityMatrix,
    x: &TangentVector,
) -> Result<f64> {
    let g = metric(spec, rho, x, x)?;
    if g.im.abs() > tol::IM_RESIDUE {
        return Err(Error::ConsistencyCheck(format!(
            "metric quadratic form has imaginary residue {:.3e}",
            g.im
        )));
    }
    Ok(g.re)
}

/// Area of the parallelogram spanned by two tangent directions:
/// sqrt(g(X,X) g(Y,Y) - |g(X,Y)|^2), clamped at zero against roundoff.
pub fn area(
    spec: MonotoneFunctionSpec,
    rho: &DensityMatrix,
    x: &TangentVector,
    y: &TangentVector,
) -> Result<f64> {
    let gxx = metric_quadratic(spec, rho, x)?;
    let gyy = metric_quadratic(spec, rho, y)?;
    let gxy = metric(spec, rho, x, y)?;
    let sq = gxx * gyy - gxy.norm_sqr();
    Ok(sq.max(0.0).sqrt())
}

/// Full metric report for a pair of observables: tangent directions are
/// built internally as i[rho, A] and i[rho, B].
pub fn upf_bound(
    spec: MonotoneFunctionSpec,
    rho: &DensityMatrix,
    a: &Observable,
    b: &Observable,
) -> Result<MetricReport> {
    let ta = tangent_of(a, rho)?;
    let tb = tangent_of(b, rho)?;
    let g_aa = metric_quadratic(spec, rho, &ta)?;
    let g_bb = metric_quadratic(spec, rho, &tb)?;
    let g_ab = metric(spec, rho, &ta, &tb)?;
    let raw = g_aa * g_bb - g_ab.norm_sqr();
    debug_assert!(
        raw >= -1e-10 * (g_aa * g_bb).max(1.0),
        "Cauchy-Schwarz violated beyond roundoff: {raw}"
    );
    let area_sq = raw.max(0.0);
    let f_zero = spec.at_zero();
    Ok(MetricReport {
        metric_spec: spec,
        g_aa,
        g_bb,
        g_ab_re: g_ab.re,
        g_ab_im: g_ab.im,
        area: area_sq.sqrt(),
        f_zero,
        bound: f_zero * f_zero / 4.0 * area_sq,
    })
}
