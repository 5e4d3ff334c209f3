//! Self-check report behind `berger-lens validate`.
//!
//! Each check prints one line, `PASS name: detail` or `FAIL name: detail`.
//! Details contain only computed numbers, never timings, so two runs with
//! the same level produce byte-identical reports.

use std::f64::consts::{FRAC_PI_2, PI};

use crate::algebra::boundary_defect;
use crate::diameter::{cut_time_max_numeric, diameter_bound};
use crate::error::{Error, Result};
use crate::locus::{sample_cut_locus, sr_limit_sweep, Stratum};
use crate::metric::{oblate_threshold, InitialCovector, MetricParams};
use crate::oracle::{find_maxwell_partner, verify_cut_point, OracleConfig};
use crate::parallel::{map_indexed, Execution};
use crate::times::{conjugate_tau, cut_time, maxwell_tau, tau_ell, tau_ell_minus, tau_ell_plus};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Level {
    Quick,
    Full,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail,
    /// An oracle search gave up (`NotReached` or `NoPartner`).
    OracleError,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CheckLine {
    pub name: &'static str,
    pub outcome: Outcome,
    pub detail: String,
}

impl CheckLine {
    pub fn render(&self) -> String {
        let tag = if self.outcome == Outcome::Pass { "PASS" } else { "FAIL" };
        format!("{tag} {}: {}", self.name, self.detail)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub lines: Vec<CheckLine>,
}

impl Report {
    pub fn all_pass(&self) -> bool {
        self.lines.iter().all(|l| l.outcome == Outcome::Pass)
    }

    pub fn has_oracle_error(&self) -> bool {
        self.lines.iter().any(|l| l.outcome == Outcome::OracleError)
    }

    pub fn render(&self) -> String {
        let mut s = String::new();
        for l in &self.lines {
            s.push_str(&l.render());
            s.push('\n');
        }
        let n_pass = self.lines.iter().filter(|l| l.outcome == Outcome::Pass).count();
        s.push_str(&format!("{n_pass}/{} checks passed\n", self.lines.len()));
        s
    }
}

/// `(p, η)` pairs used by the grid checks.
pub const PARAM_PAIRS: [(i64, f64); 14] = [
    (1, -0.5),
    (1, 0.5),
    (1, 2.0),
    (2, -0.9),
    (2, -0.3),
    (2, 0.0),
    (2, 1.0),
    (3, -0.8),
    (3, -0.5),
    (3, 2.0),
    (4, -0.9),
    (4, 0.5),
    (5, -0.95),
    (5, 0.3),
];

fn line(name: &'static str, ok: bool, detail: String) -> CheckLine {
    CheckLine { name, outcome: if ok { Outcome::Pass } else { Outcome::Fail }, detail }
}

fn from_result(name: &'static str, r: Result<CheckLine>) -> CheckLine {
    match r {
        Ok(l) => l,
        Err(e @ (Error::NotReached { .. } | Error::NoPartner { .. })) => {
            CheckLine { name, outcome: Outcome::OracleError, detail: e.to_string() }
        }
        Err(e) => CheckLine { name, outcome: Outcome::Fail, detail: e.to_string() },
    }
}

fn params(p: i64, eta: f64) -> Result<MetricParams> {
    MetricParams::with_eta(p, 1, 1.0, eta)
}

fn golden_values() -> Result<CheckLine> {
    let mut err: f64 = 0.0;
    let mut ok = true;
    for p in 2..=8 {
        let pf = p as f64;
        for &eta in &[-0.9, -0.5, 0.0, 0.5, 2.0] {
            err = err.max((tau_ell_minus(0.0, eta, p)? - FRAC_PI_2).abs());
            err = err.max((tau_ell_plus(0.0, eta, p)? - FRAC_PI_2).abs());
            err = err.max((tau_ell_minus(1.0, eta, p)? - PI / (pf * (1.0 + eta))).abs());
            err = err.max((tau_ell_plus(1.0, eta, p)? - (pf - 1.0) * PI / (pf * (1.0 + eta))).abs());
            let m = params(p, eta)?;
            err = err.max((cut_time(0.0, &m)?.t_cut - PI * m.i1.sqrt()).abs());
            if eta >= oblate_threshold(p) {
                err = err.max((cut_time(1.0, &m)?.t_cut - 2.0 * PI * m.i3.sqrt() / pf).abs());
            }
        }
    }
    for k in 0..=20 {
        let h = -1.0 + 0.1 * k as f64;
        ok &= conjugate_tau(h, -0.5)? == PI && conjugate_tau(h, 0.0)? == PI;
        let c = conjugate_tau(h, 1.0)?;
        ok &= if h.abs() > 1.0 - 1e-12 { c == PI } else { c > FRAC_PI_2 && c < PI };
    }
    ok &= err < 1e-10;
    Ok(line("golden-values", ok, format!("max_err={err:.3e}")))
}

fn grid(n: usize) -> Vec<f64> {
    (0..n).map(|i| -1.0 + 2.0 * i as f64 / (n - 1) as f64).collect()
}

fn symmetry(n: usize, exec: Execution) -> Result<CheckLine> {
    let hs = grid(n);
    let mut err: f64 = 0.0;
    for &(p, eta) in &PARAM_PAIRS {
        let m = params(p, eta)?;
        let errs = map_indexed(exec, hs.len(), |i| -> Result<f64> {
            let x = hs[i];
            let a = (tau_ell_minus(-x, eta, p)? - tau_ell_plus(x, eta, p)?).abs();
            let b = (tau_ell(-x, eta, p)? - tau_ell(x, eta, p)?).abs();
            let c = (cut_time(-x, &m)?.t_cut - cut_time(x, &m)?.t_cut).abs();
            Ok(a.max(b).max(c))
        });
        for e in errs {
            err = err.max(e?);
        }
    }
    Ok(line("symmetry", err < 1e-10, format!("pairs={} n={n} max_err={err:.3e}", PARAM_PAIRS.len())))
}

fn ordering(n: usize, exec: Execution) -> Result<CheckLine> {
    let hs = grid(n);
    let mut worst_gap = f64::NEG_INFINITY;
    let mut regime_ok = true;
    for &(p, eta) in &PARAM_PAIRS {
        let m = params(p, eta)?;
        let thr = oblate_threshold(p);
        let rows = map_indexed(exec, hs.len(), |i| -> Result<(f64, bool)> {
            let x = hs[i];
            let gap = maxwell_tau(x, &m)?.0 - conjugate_tau(x, eta)?;
            let t = tau_ell(x, eta, p)?;
            let ok = if eta >= thr {
                t <= PI + 1e-9
            } else if x.abs() >= (p - 1) as f64 / (p as f64 * eta.abs()) {
                t >= PI - 1e-9
            } else {
                t < PI
            };
            Ok((gap, ok))
        });
        for r in rows {
            let (g, ok) = r?;
            worst_gap = worst_gap.max(g);
            regime_ok &= ok;
        }
    }
    Ok(line(
        "ordering",
        worst_gap <= 1e-9 && regime_ok,
        format!("max(maxwell-conj)={worst_gap:.3e} regimes={}", if regime_ok { "ok" } else { "violated" }),
    ))
}

/// Representative parameters for the five diameter cases.
pub const DIAMETER_CASES: [(i64, f64); 7] =
    [(2, -0.9), (3, -0.5), (1, 0.0), (2, 0.0), (4, 0.5), (1, 0.5), (1, 2.0)];

fn diameter(exec: Execution) -> Result<CheckLine> {
    let mut err: f64 = 0.0;
    let mut tags = String::new();
    for &(p, eta) in &DIAMETER_CASES {
        let m = params(p, eta)?;
        let b = diameter_bound(&m);
        let (v, _) = cut_time_max_numeric(&m, 400, exec)?;
        err = err.max((v - b.value).abs());
        tags.push_str(b.case_tag.as_str());
    }
    Ok(line("diameter", err < 1e-6, format!("cases={tags} max_err={err:.3e}")))
}

fn strata(n_h3: usize, n_phi: usize, exec: Execution) -> Result<CheckLine> {
    let mut ell: f64 = 0.0;
    let mut axis: f64 = 0.0;
    let mut range_ok = true;
    let mut counts = [0usize; 2];
    for &p in &[2i64, 3, 5] {
        for &eta in &[-0.95, -0.85, -0.5, 0.0, 1.5] {
            let m = params(p, eta)?;
            let (lo, hi) = ((PI * eta.abs()).sin(), (PI / p as f64).sin());
            for s in sample_cut_locus(&m, n_h3, n_phi, exec)? {
                let x = s.point.rep;
                match s.stratum {
                    Stratum::BoundarySurface => {
                        let (a, b) = boundary_defect(&x, p)?;
                        ell = ell.max(a.abs().min(b.abs()));
                        counts[0] += 1;
                    }
                    Stratum::IntervalSegment => {
                        axis = axis.max(x.q1 * x.q1 + x.q2 * x.q2);
                        let r = x.q3.abs();
                        range_ok &= r >= lo - 1e-9 && r <= hi + 1e-9;
                        counts[1] += 1;
                    }
                }
            }
        }
    }
    Ok(line(
        "strata",
        ell < 1e-9 && axis < 1e-18 && range_ok && counts[1] > 0,
        format!(
            "surface={} interval={} max_ell={ell:.3e} max_q12sq={axis:.3e}",
            counts[0], counts[1]
        ),
    ))
}

fn sr_limit() -> Result<CheckLine> {
    let etas = [-0.9, -0.99, -0.999, -0.9999];
    let want = ["3.09017e-1", "3.14108e-2", "3.14159e-3", "3.14159e-4"];
    let rows = sr_limit_sweep(&params(3, -0.9)?, &etas)?;
    let mut ok = true;
    for (r, w) in rows.iter().zip(want) {
        ok &= format!("{:.5e}", r.interval_lower_endpoint) == w;
    }
    ok &= rows.windows(2).all(|w| w[1].interval_lower_endpoint < w[0].interval_lower_endpoint);
    let diffs: Vec<f64> = rows.windows(2).map(|w| (w[1].t_cut_h0 - w[0].t_cut_h0).abs()).collect();
    ok &= diffs.windows(2).all(|d| d[1] <= d[0].max(1e-12));
    let tail = rows.last().map_or(0.0, |r| r.interval_lower_endpoint);
    Ok(line("sr-limit", ok, format!("rows={} last_endpoint={tail:.6e}", rows.len())))
}

/// Covectors for the oracle checks, spanning both regimes.
fn oracle_samples() -> Vec<(i64, i64, f64, f64, f64)> {
    vec![
        (2, 1, 0.0, 0.0, 0.0),
        (2, 1, 0.5, 0.6, 1.0),
        (3, 1, -0.8, 0.9, 0.4),
        (3, 1, -0.8, 0.2, 2.0),
        (5, 2, 0.3, -0.5, 3.0),
        (5, 2, -0.9, 0.95, 5.0),
    ]
}

fn cut_points(exec: Execution) -> Result<CheckLine> {
    let cfg = OracleConfig { n_h3: 61, n_phi: 96, n_t: 384, ..OracleConfig::default() };
    let mut ok = true;
    let mut margin = f64::INFINITY;
    let samples = oracle_samples();
    for &(p, q, eta, h3, phi) in &samples {
        let m = MetricParams::with_eta(p, q, 1.0, eta)?;
        let r = verify_cut_point(&InitialCovector::new(h3, phi)?, &m, 0.05, &cfg, exec)?;
        ok &= r.optimal_before && r.beaten_after;
        margin = margin.min(r.margin);
    }
    Ok(line("cut-point-oracle", ok, format!("samples={} min_margin={margin:.3e}", samples.len())))
}

fn maxwell_pairs() -> Result<CheckLine> {
    let cfg = OracleConfig { n_phi: 128, ..OracleConfig::default() };
    let mut worst: f64 = 0.0;
    let mut n = 0;
    for &p in &[2i64, 3, 5] {
        for &eta in &[-0.5, 0.0, 1.5] {
            let m = params(p, eta)?;
            for k in 0..5 {
                let h3 = -0.9 + 0.45 * k as f64;
                let c = InitialCovector::new(h3, 0.7 * k as f64)?;
                let (_, mis) = find_maxwell_partner(&c, &m, &cfg)?;
                worst = worst.max(mis);
                n += 1;
            }
        }
    }
    Ok(line("maxwell-pairing", worst < 1e-8, format!("samples={n} max_mismatch={worst:.3e}")))
}

pub fn run(level: Level, exec: Execution) -> Report {
    let mut lines = vec![
        from_result("golden-values", golden_values()),
        from_result("symmetry", symmetry(201, exec)),
        from_result("ordering", ordering(201, exec)),
        from_result("diameter", diameter(exec)),
        from_result("strata", strata(17, 12, exec)),
        from_result("sr-limit", sr_limit()),
    ];
    if level == Level::Full {
        lines.push(from_result("maxwell-pairing", maxwell_pairs()));
        lines.push(from_result("cut-point-oracle", cut_points(exec)));
    }
    Report { lines }
}
