//! Diameter lower bounds from the maximum of the cut time, the critical
//! points of `t_cut(h̄3)`, and a grid-plus-golden-section maximizer.
//!
//! The diameter is at least `max t_cut`, with equality on the homogeneous
//! lens spaces `L(p;±1)`. Since `t_cut` is even in `h̄3` everything is done
//! on `[0, 1]`.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::metric::{oblate_threshold, t_of_tau, MetricParams};
use crate::parallel::{map_indexed, Execution};
use crate::times::{maxwell_tau, tau_ell_minus};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CaseTag {
    /// `η < −(p−1)/p`.
    A,
    /// `−(p−1)/p ≤ η < 0`.
    B,
    /// `η = 0`.
    C,
    /// `η > 0`, `p ≥ 2`.
    D,
    /// `η > 0`, `p = 1`.
    E,
}

impl CaseTag {
    pub fn as_str(self) -> &'static str {
        match self {
            CaseTag::A => "a",
            CaseTag::B => "b",
            CaseTag::C => "c",
            CaseTag::D => "d",
            CaseTag::E => "e",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DiameterBound {
    pub value: f64,
    pub case_tag: CaseTag,
    /// The bound is the diameter (`q ≡ ±1 mod p`).
    pub exact: bool,
    pub argmax_h3bar: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CriticalKind {
    Min,
    Max,
}

impl CriticalKind {
    pub fn as_str(self) -> &'static str {
        match self {
            CriticalKind::Min => "min",
            CriticalKind::Max => "max",
        }
    }
}

/// `t_cut(h̄3)` without the auxiliary fields of [`crate::times::CutData`].
pub fn cut_time_value(h3bar: f64, params: &MetricParams) -> Result<f64> {
    Ok(t_of_tau(maxwell_tau(h3bar, params)?.0, h3bar, params))
}

fn classify(h: f64, params: &MetricParams) -> Result<Option<CriticalKind>> {
    let d = 1e-4 * h.min(1.0 - h).min(1.0);
    let f0 = cut_time_value(h, params)?;
    let fl = cut_time_value(h - d, params)?;
    let fr = cut_time_value(h + d, params)?;
    Ok(if fl > f0 && fr > f0 {
        Some(CriticalKind::Min)
    } else if fl < f0 && fr < f0 {
        Some(CriticalKind::Max)
    } else {
        None
    })
}

/// Interior critical points of `t_cut` on `(0, 1)`.
///
/// Inside the boundary regime they sit where `τℓ⁻ = π/2`, i.e. on the
/// family `h̄3 = ((2k+1)p + 2)/(pη)`. For `p ≥ 3`, `η < 0` only `k = −1`
/// can satisfy both conditions; for `p = 1` the point is `h̄3 = 1/η` when
/// `η > 1`. Each candidate is classified from neighbouring values.
pub fn critical_points(params: &MetricParams) -> Result<Vec<(f64, CriticalKind)>> {
    let eta = params.eta();
    let p = params.p;
    let pf = p as f64;
    let candidate = if p == 1 && eta > 1.0 {
        Some(1.0 / eta)
    } else if p >= 3 && eta < 0.0 {
        let h = (pf - 2.0) / (pf * eta.abs());
        let rotation = eta < oblate_threshold(p) && h >= (pf - 1.0) / (pf * eta.abs());
        let on_family = h > 0.0
            && h < 1.0
            && !rotation
            && (tau_ell_minus(h, eta, p)? - PI / 2.0).abs() < 1e-9;
        on_family.then_some(h)
    } else {
        None
    };
    let mut out = Vec::new();
    if let Some(h) = candidate {
        if let Some(kind) = classify(h, params)? {
            out.push((h, kind));
        }
    }
    Ok(out)
}

/// Closed-form lower bound for the diameter of `L(p;q)`.
pub fn diameter_bound(params: &MetricParams) -> DiameterBound {
    let eta = params.eta();
    let p = params.p;
    let pf = p as f64;
    let s1 = params.i1.sqrt();
    let s3 = params.i3.sqrt();
    let exact = p <= 2 || params.q.rem_euclid(p) == 1 || params.q.rem_euclid(p) == p - 1;
    let (value, case_tag, argmax_h3bar) = if eta < oblate_threshold(p) {
        let root = (-12.0 * eta).sqrt();
        let den = 3.0 * eta + 4.0;
        if pf >= (4.0 - root) / den && pf <= (4.0 + root) / den {
            let v = 2.0 * PI * s1 * (1.0 + (pf - 1.0).powi(2) / (pf * pf * eta)).sqrt();
            (v, CaseTag::A, (pf - 1.0) / (pf * eta.abs()))
        } else {
            (PI * s1, CaseTag::A, 0.0)
        }
    } else if eta < 0.0 {
        pole_or_equator(pf, eta, s1, s3, CaseTag::B)
    } else if eta == 0.0 {
        let v = if p == 1 { 2.0 * PI * s1 } else { PI * s1 };
        (v, CaseTag::C, 0.0)
    } else if p >= 2 {
        pole_or_equator(pf, eta, s1, s3, CaseTag::D)
    } else if eta <= 1.0 {
        (2.0 * PI * s3, CaseTag::E, 1.0)
    } else {
        (PI * params.i1 / (params.i1 - params.i3).sqrt(), CaseTag::E, 1.0 / eta)
    };
    DiameterBound { value, case_tag, exact, argmax_h3bar }
}

fn pole_or_equator(pf: f64, eta: f64, s1: f64, s3: f64, tag: CaseTag) -> (f64, CaseTag, f64) {
    if pf < 2.0 / (1.0 + eta).sqrt() {
        (2.0 * PI * s3 / pf, tag, 1.0)
    } else {
        (PI * s1, tag, 0.0)
    }
}

const INV_PHI: f64 = 0.618_033_988_749_894_8;

/// Golden-section search for a maximum of `f` on `[a, b]`.
fn golden_max<F: Fn(f64) -> Result<f64>>(f: F, mut a: f64, mut b: f64, tol: f64) -> Result<(f64, f64)> {
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let mut fc = f(c)?;
    let mut fd = f(d)?;
    while b - a > tol {
        if fc >= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = f(c)?;
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = f(d)?;
        }
    }
    let x = 0.5 * (a + b);
    Ok((f(x)?, x))
}

/// Maximum of `t_cut` over `[0, 1]`: uniform grid of `n` points, then
/// golden-section refinement on the two cells around the best grid point.
pub fn cut_time_max_numeric(params: &MetricParams, n: usize, exec: Execution) -> Result<(f64, f64)> {
    if n < 100 {
        return Err(Error::InvalidArgument(format!("need n >= 100 grid points, got {n}")));
    }
    let last = (n - 1) as f64;
    let grid = map_indexed(exec, n, |i| {
        let h = i as f64 / last;
        cut_time_value(h, params).map(|v| (v, h))
    });
    let mut best = (f64::NEG_INFINITY, 0.0);
    let mut best_i = 0;
    for (i, g) in grid.into_iter().enumerate() {
        let g = g?;
        if g.0 > best.0 {
            best = g;
            best_i = i;
        }
    }
    let lo = best_i.saturating_sub(1) as f64 / last;
    let hi = (best_i + 1).min(n - 1) as f64 / last;
    let refined = golden_max(|h| cut_time_value(h, params), lo, hi, 1e-12)?;
    Ok(if refined.0 > best.0 { refined } else { best })
}
