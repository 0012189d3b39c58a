//! Text and CSV renderings of the report types. JSON goes through the
//! 17-significant-digit serializer in qfi-core so that identical runs
//! emit byte-identical documents.

use qfi_core::io::format_f64;
use qfi_core::{
    CounterexampleRecord, ExplorationSummary, GMonotonicityReport, InequalityReport, MetricReport,
};
use serde::Serialize;

/// One scan row over the counterexample family.
#[derive(Clone, Debug, Serialize)]
pub struct ScanRow {
    pub t: f64,
    pub beta: f64,
    pub closed_form_gap: f64,
    pub matrix_gap: f64,
    pub holds: bool,
}

fn opt(value: Option<f64>) -> String {
    value.map(format_f64).unwrap_or_default()
}

pub fn verify_text(r: &InequalityReport) -> String {
    let mut lines = vec![
        format!("metric:            {}", r.metric_spec),
        format!("s_gap:             {}", r.s_gap),
    ];
    if let (Some(t), Some(xi), Some(eta)) = (r.t_gap, r.xi, r.eta) {
        lines.push(format!("t_gap:             {t}"));
        lines.push(format!("xi:                {xi}"));
        lines.push(format!("eta:               {eta}"));
    }
    if let Some(in_range) = r.beta_in_theorem_range {
        let note = if in_range {
            "beta in proved range (0, 1/2]"
        } else {
            "beta OUTSIDE proved range; verdict reports the refutable extension"
        };
        lines.push(format!("range:             {note}"));
    }
    lines.push(format!("metric bound G(f): {}", r.bound));
    lines.push(format!("gap:               {}", r.gap));
    lines.push(format!("tolerance:         {}", r.tolerance));
    lines.push(format!(
        "verdict:           {}",
        if r.holds { "HOLDS" } else { "VIOLATED" }
    ));
    lines.join("\n")
}

pub fn verify_csv(r: &InequalityReport) -> String {
    let header = "metric,s_gap,t_gap,xi,eta,bound,gap,holds,tolerance";
    let row = format!(
        "{},{},{},{},{},{},{},{},{}",
        r.metric_spec,
        format_f64(r.s_gap),
        opt(r.t_gap),
        opt(r.xi),
        opt(r.eta),
        format_f64(r.bound),
        format_f64(r.gap),
        r.holds,
        format_f64(r.tolerance),
    );
    format!("{header}\n{row}")
}

pub fn scan_text(rows: &[ScanRow]) -> String {
    let mut lines = vec![format!(
        "{:>24} {:>8} {:>24} {:>24} {:>8}",
        "t", "beta", "closed_form_gap", "matrix_gap", "holds"
    )];
    for r in rows {
        lines.push(format!(
            "{:>24} {:>8} {:>24} {:>24} {:>8}",
            r.t, r.beta, r.closed_form_gap, r.matrix_gap, r.holds
        ));
    }
    lines.join("\n")
}

pub fn scan_csv(rows: &[ScanRow]) -> String {
    let mut out = String::from("t,beta,closed_form_gap,matrix_gap,holds");
    for r in rows {
        out.push('\n');
        out.push_str(&format!(
            "{},{},{},{},{}",
            format_f64(r.t),
            format_f64(r.beta),
            format_f64(r.closed_form_gap),
            format_f64(r.matrix_gap),
            r.holds
        ));
    }
    out
}

pub fn counterexample_text(r: &CounterexampleRecord) -> String {
    [
        format!("beta:            {}", r.beta),
        format!("first grid hit:  t = {}", r.t),
        format!("refined t0:      {}", r.t0),
        format!("gap at t0:       {}", r.gap_at_t0),
        format!("closed form:     {}", r.closed_form_gap),
        format!("matrix route:    {}", r.matrix_gap),
        format!(
            "route agreement: {:.3e}",
            (r.closed_form_gap - r.matrix_gap).abs()
        ),
    ]
    .join("\n")
}

pub fn counterexample_csv(r: &CounterexampleRecord) -> String {
    format!(
        "beta,t,t0,gap_at_t0,closed_form_gap,matrix_gap\n{},{},{},{},{},{}",
        format_f64(r.beta),
        format_f64(r.t),
        format_f64(r.t0),
        format_f64(r.gap_at_t0),
        format_f64(r.closed_form_gap),
        format_f64(r.matrix_gap),
    )
}

pub fn explore_text(s: &ExplorationSummary) -> String {
    [
        format!("metric:           {}", s.metric_spec),
        format!("trials:           {}", s.trials),
        format!("dims:             {:?}", s.dims),
        format!("seed:             {}", s.seed),
        format!("min gap:          {}", s.min_gap),
        format!("violations found: {}", s.violations_found),
        format!(
            "argmin:           trial {} (dim {})",
            s.argmin.trial, s.argmin.dim
        ),
        "note: exploration is report-only; it never asserts an open question".to_string(),
    ]
    .join("\n")
}

pub fn explore_csv(s: &ExplorationSummary) -> String {
    format!(
        "metric,trials,min_gap,violations_found,argmin_trial,argmin_dim\n{},{},{},{},{},{}",
        s.metric_spec,
        s.trials,
        format_f64(s.min_gap),
        s.violations_found,
        s.argmin.trial,
        s.argmin.dim,
    )
}

pub fn probe_text(r: &GMonotonicityReport) -> String {
    let pointwise = match r.pointwise {
        qfi_core::lab::PointwiseOrder::LessOrEqual => "f_a <= f_b",
        qfi_core::lab::PointwiseOrder::GreaterOrEqual => "f_a >= f_b",
        qfi_core::lab::PointwiseOrder::Equal => "f_a = f_b",
        qfi_core::lab::PointwiseOrder::Incomparable => "incomparable",
    };
    let verdict = match r.asserted_nonnegative {
        Some(true) => "min difference >= -1e-9 (asserted: proved range)".to_string(),
        Some(false) => "NEGATIVE in the proved range (inconsistent!)".to_string(),
        None => "reported without assertion (outside the proved range)".to_string(),
    };
    [
        format!("metrics:        {} vs {}", r.spec_a, r.spec_b),
        format!("pointwise:      {pointwise}"),
        format!("trials:         {}", r.trials),
        format!("min G(b)-G(a):  {}", r.min_difference),
        format!("verdict:        {verdict}"),
    ]
    .join("\n")
}

pub fn probe_csv(r: &GMonotonicityReport) -> String {
    let asserted = match r.asserted_nonnegative {
        Some(v) => v.to_string(),
        None => String::new(),
    };
    format!(
        "metric_a,metric_b,pointwise,trials,min_difference,proved_range,asserted_nonnegative\n{},{},{:?},{},{},{},{}",
        r.spec_a,
        r.spec_b,
        r.pointwise,
        r.trials,
        format_f64(r.min_difference),
        r.proved_range,
        asserted,
    )
}

pub fn metric_text(r: &MetricReport) -> String {
    [
        format!("metric:   {}", r.metric_spec),
        format!("g_aa:     {}", r.g_aa),
        format!("g_bb:     {}", r.g_bb),
        format!("g_ab:     {} + {}i", r.g_ab_re, r.g_ab_im),
        format!("area:     {}", r.area),
        format!("f(0):     {}", r.f_zero),
        format!("G(f):     {}", r.bound),
    ]
    .join("\n")
}

pub fn metric_csv(r: &MetricReport) -> String {
    format!(
        "metric,g_aa,g_bb,g_ab_re,g_ab_im,area,f_zero,bound\n{},{},{},{},{},{},{},{}",
        r.metric_spec,
        format_f64(r.g_aa),
        format_f64(r.g_bb),
        format_f64(r.g_ab_re),
        format_f64(r.g_ab_im),
        format_f64(r.area),
        format_f64(r.f_zero),
        format_f64(r.bound),
    )
}
