//! Cut-locus sampling, the sub-Riemannian limit sweep and their CSV tables.
//!
//! For `p ≥ 2` the cut locus of `o` is the glued boundary surface of the
//! model domain, joined (for `η < −(p−1)/p`) with a segment of the `q3`
//! axis. Each grid covector is pushed to its cut time and tagged by the
//! regime that produced the cut point.

use std::f64::consts::PI;
use std::io::Write;
use std::path::Path;

use crate::algebra::{canonicalize, LensPoint};
use crate::error::{Error, Result};
use crate::geodesic::exp_su2;
use crate::metric::{oblate_threshold, InitialCovector, MetricParams};
use crate::numfmt::sig17;
use crate::parallel::{map_indexed, Execution};
use crate::times::{cut_time, Regime};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Stratum {
    BoundarySurface,
    IntervalSegment,
}

impl Stratum {
    pub fn as_str(self) -> &'static str {
        match self {
            Stratum::BoundarySurface => "surface",
            Stratum::IntervalSegment => "interval",
        }
    }

    fn of(regime: Regime) -> Self {
        match regime {
            Regime::BoundaryStratum => Stratum::BoundarySurface,
            Regime::RotationStratum => Stratum::IntervalSegment,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CutLocusSample {
    pub h3bar: f64,
    pub phi: f64,
    pub t_cut: f64,
    pub tau: f64,
    pub regime: Regime,
    pub point: LensPoint,
    pub stratum: Stratum,
}

/// Cut points for the grid `h̄3 = −1 + 2i/(n_h3−1)`, `φ = 2πj/n_phi`,
/// ordered with `h̄3` outer and `φ` inner.
pub fn sample_cut_locus(
    params: &MetricParams,
    n_h3: usize,
    n_phi: usize,
    exec: Execution,
) -> Result<Vec<CutLocusSample>> {
    if params.p < 2 {
        return Err(Error::InvalidParams("cut locus sampling needs p >= 2".into()));
    }
    if n_h3 < 2 || n_phi < 2 {
        return Err(Error::InvalidArgument(format!(
            "grid sizes must be >= 2, got n_h3 = {n_h3}, n_phi = {n_phi}"
        )));
    }
    let eta = params.eta();
    let rows = map_indexed(exec, n_h3, |i| -> Result<Vec<CutLocusSample>> {
        let h3 = if i == n_h3 - 1 { 1.0 } else { -1.0 + 2.0 * i as f64 / (n_h3 - 1) as f64 };
        let data = cut_time(h3, params)?;
        (0..n_phi)
            .map(|j| {
                let c = InitialCovector::new(h3, 2.0 * PI * j as f64 / n_phi as f64)?;
                let x = exp_su2(&c, data.tau_cut, eta);
                Ok(CutLocusSample {
                    h3bar: h3,
                    phi: c.phi,
                    t_cut: data.t_cut,
                    tau: data.tau_cut,
                    regime: data.regime,
                    point: canonicalize(&x, params.p, params.q),
                    stratum: Stratum::of(data.regime),
                })
            })
            .collect()
    });
    let mut out = Vec::with_capacity(n_h3 * n_phi);
    for row in rows {
        out.extend(row?);
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SrLimitRow {
    pub eta: f64,
    pub t_cut_h0: f64,
    pub t_cut_h1: f64,
    /// `sin(π|η|)`, the inner end of the interval stratum.
    pub interval_lower_endpoint: f64,
}

/// Cut times at the equator and the pole and the interval endpoint along a
/// sequence of oblateness values approaching `−1`, at fixed `I1`.
pub fn sr_limit_sweep(base: &MetricParams, etas: &[f64]) -> Result<Vec<SrLimitRow>> {
    if etas.is_empty() {
        return Err(Error::InvalidArgument("empty eta list".into()));
    }
    let thr = oblate_threshold(base.p);
    for (k, &eta) in etas.iter().enumerate() {
        if !(eta > -1.0 && eta < thr) {
            return Err(Error::InvalidArgument(format!(
                "eta = {eta} is outside (-1, {thr}) for p = {}",
                base.p
            )));
        }
        if k > 0 && eta >= etas[k - 1] {
            return Err(Error::InvalidArgument("etas must decrease strictly".into()));
        }
    }
    etas.iter()
        .map(|&eta| {
            let m = MetricParams::with_eta(base.p, base.q, base.i1, eta)?;
            Ok(SrLimitRow {
                eta,
                t_cut_h0: cut_time(0.0, &m)?.t_cut,
                t_cut_h1: cut_time(1.0, &m)?.t_cut,
                interval_lower_endpoint: (PI * eta.abs()).sin(),
            })
        })
        .collect()
}

pub const LOCUS_HEADER: [&str; 10] =
    ["h3bar", "phi", "t_cut", "tau", "regime", "q0", "q1", "q2", "q3", "stratum"];

pub const SR_HEADER: [&str; 4] = ["eta", "t_cut_h0", "t_cut_h1", "interval_lower_endpoint"];

pub fn write_locus_csv<W: Write>(samples: &[CutLocusSample], w: W) -> Result<()> {
    if samples.is_empty() {
        return Err(Error::InvalidArgument("no samples to export".into()));
    }
    let mut wr = csv::Writer::from_writer(w);
    wr.write_record(LOCUS_HEADER)?;
    for s in samples {
        let x = s.point.rep;
        wr.write_record([
            sig17(s.h3bar),
            sig17(s.phi),
            sig17(s.t_cut),
            sig17(s.tau),
            s.regime.as_str().to_string(),
            sig17(x.q0),
            sig17(x.q1),
            sig17(x.q2),
            sig17(x.q3),
            s.stratum.as_str().to_string(),
        ])?;
    }
    wr.flush()?;
    Ok(())
}

pub fn export_locus_csv(samples: &[CutLocusSample], path: &Path) -> Result<()> {
    if samples.is_empty() {
        return Err(Error::InvalidArgument("no samples to export".into()));
    }
    write_locus_csv(samples, std::fs::File::create(path)?)
}

pub fn write_sr_csv<W: Write>(rows: &[SrLimitRow], w: W) -> Result<()> {
    if rows.is_empty() {
        return Err(Error::InvalidArgument("no rows to export".into()));
    }
    let mut wr = csv::Writer::from_writer(w);
    wr.write_record(SR_HEADER)?;
    for r in rows {
        wr.write_record([
            sig17(r.eta),
            sig17(r.t_cut_h0),
            sig17(r.t_cut_h1),
            sig17(r.interval_lower_endpoint),
        ])?;
    }
    wr.flush()?;
    Ok(())
}

pub fn export_sr_csv(rows: &[SrLimitRow], path: &Path) -> Result<()> {
    if rows.is_empty() {
        return Err(Error::InvalidArgument("no rows to export".into()));
    }
    write_sr_csv(rows, std::fs::File::create(path)?)
}
