//! Boundary functions `ℓ±` along geodesics and the time functions built on
//! them: first boundary hits `τℓ±`, the Maxwell time, the conjugate time and
//! the cut time.
//!
//! Along the geodesic with vertical component `h̄3`, substituting the
//! exponential map into the lens boundary forms gives
//!
//! ```text
//! ℓ∓(τ) = cos τ·sin(τηh̄3 ∓ π/p) + h̄3·sin τ·cos(τηh̄3 ∓ π/p)
//! ```
//!
//! `τℓ±` are their first positive roots and `τℓ = τℓ⁻` for `h̄3 ≥ 0`,
//! `τℓ⁺` otherwise. For `p = 1` both forms reduce to `−q3` and `τℓ` is the
//! first positive root of `q3(τ)`.
//!
//! All `τ` values are in the rescaled time of [`crate::metric`]; only
//! [`CutData::t_cut`] is arclength.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::metric::{oblate_threshold, t_of_tau, MetricParams};
use crate::roots::{first_positive_root, RootConfig};

/// Which symmetry produces the first Maxwell point.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Regime {
    /// Reflection composed with a deck rotation: the endpoint lands on the
    /// glued boundary of the lens.
    BoundaryStratum,
    /// Rotation about the vertical axis at `τ = π`: the endpoint lands on
    /// the `q3` axis.
    RotationStratum,
}

impl Regime {
    pub fn as_str(self) -> &'static str {
        match self {
            Regime::BoundaryStratum => "boundary",
            Regime::RotationStratum => "rotation",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CutData {
    pub h3bar: f64,
    pub tau_ell_minus: f64,
    pub tau_ell_plus: f64,
    pub tau_ell: f64,
    pub tau_conj: f64,
    /// Rescaled cut time: `tau_ell` or `π` depending on the regime.
    pub tau_cut: f64,
    /// Cut time in arclength.
    pub t_cut: f64,
    pub regime: Regime,
}

pub fn ell_minus(tau: f64, h3bar: f64, eta: f64, p: i64) -> f64 {
    let a = tau * eta * h3bar - PI / p as f64;
    let (s, c) = tau.sin_cos();
    let (sa, ca) = a.sin_cos();
    c * sa + h3bar * s * ca
}

pub fn ell_plus(tau: f64, h3bar: f64, eta: f64, p: i64) -> f64 {
    let a = tau * eta * h3bar + PI / p as f64;
    let (s, c) = tau.sin_cos();
    let (sa, ca) = a.sin_cos();
    c * sa + h3bar * s * ca
}

fn sinc(x: f64) -> f64 {
    if x.abs() < 1e-8 {
        1.0 - x * x / 6.0
    } else {
        x.sin() / x
    }
}

/// `q3(τ)/h̄3`, smooth through `h̄3 = 0` and positive for small `τ > 0`.
fn vertical_ratio(tau: f64, h3bar: f64, eta: f64) -> f64 {
    let a = tau * eta * h3bar;
    tau.cos() * tau * eta * sinc(a) + tau.sin() * a.cos()
}

fn check_inputs(h3bar: f64, eta: f64, p: i64) -> Result<()> {
    if h3bar.is_nan() || h3bar.abs() > 1.0 {
        return Err(Error::InvalidArgument(format!("h3bar must lie in [-1, 1], got {h3bar}")));
    }
    if !(eta > -1.0 && eta.is_finite()) {
        return Err(Error::InvalidArgument(format!("eta must be > -1, got {eta}")));
    }
    if p < 1 {
        return Err(Error::InvalidArgument(format!("p must be >= 1, got {p}")));
    }
    Ok(())
}

/// Scan configuration used for the boundary roots.
pub fn boundary_root_config(eta: f64, p: i64) -> RootConfig {
    let mut cfg = RootConfig::for_boundary(eta, p);
    // The larger branch root reaches (p−1)π/(p(1+η)) near |h̄3| = 1, above
    // π + 2π/(p(1+η)) once pη < −3; the continuous argument of z grows at
    // rate ≥ 1+η up to ±π/2, so every first root is below (3π/2)/(1+η).
    cfg.tau_cap = cfg.tau_cap.max(PI + 2.0 * PI / (1.0 + eta));
    cfg
}

fn p1_root(h3bar: f64, eta: f64, cfg: &RootConfig) -> Result<f64> {
    if h3bar.abs() == 1.0 {
        return Ok(PI / (1.0 + eta));
    }
    first_positive_root(|t| vertical_ratio(t, h3bar, eta), cfg)
}

pub fn tau_ell_minus_with(h3bar: f64, eta: f64, p: i64, cfg: &RootConfig) -> Result<f64> {
    check_inputs(h3bar, eta, p)?;
    if p == 1 {
        return p1_root(h3bar, eta, cfg);
    }
    let pf = p as f64;
    if h3bar == 1.0 {
        return Ok(PI / (pf * (1.0 + eta)));
    }
    if h3bar == -1.0 {
        return Ok((pf - 1.0) * PI / (pf * (1.0 + eta)));
    }
    first_positive_root(|t| ell_minus(t, h3bar, eta, p), cfg)
}

pub fn tau_ell_plus_with(h3bar: f64, eta: f64, p: i64, cfg: &RootConfig) -> Result<f64> {
    check_inputs(h3bar, eta, p)?;
    if p == 1 {
        return p1_root(h3bar, eta, cfg);
    }
    let pf = p as f64;
    if h3bar == 1.0 {
        return Ok((pf - 1.0) * PI / (pf * (1.0 + eta)));
    }
    if h3bar == -1.0 {
        return Ok(PI / (pf * (1.0 + eta)));
    }
    first_positive_root(|t| ell_plus(t, h3bar, eta, p), cfg)
}

/// First positive root of `ℓ₋` along the geodesic.
pub fn tau_ell_minus(h3bar: f64, eta: f64, p: i64) -> Result<f64> {
    tau_ell_minus_with(h3bar, eta, p, &boundary_root_config(eta, p))
}

/// First positive root of `ℓ₊` along the geodesic.
pub fn tau_ell_plus(h3bar: f64, eta: f64, p: i64) -> Result<f64> {
    tau_ell_plus_with(h3bar, eta, p, &boundary_root_config(eta, p))
}

/// First boundary hit: `τℓ⁻` for `h̄3 ≥ 0`, `τℓ⁺` for `h̄3 < 0`.
pub fn tau_ell(h3bar: f64, eta: f64, p: i64) -> Result<f64> {
    if h3bar >= 0.0 {
        tau_ell_minus(h3bar, eta, p)
    } else {
        tau_ell_plus(h3bar, eta, p)
    }
}

/// Left side of the conjugate-time equation
/// `−τη(1−h̄3²)cos τ − (1+ηh̄3²)sin τ = 0`.
pub fn conjugate_equation(tau: f64, h3bar: f64, eta: f64) -> f64 {
    let h2 = h3bar * h3bar;
    -tau * eta * (1.0 - h2) * tau.cos() - (1.0 + eta * h2) * tau.sin()
}

/// First conjugate time in `τ` units: `π` for `η ≤ 0`, otherwise the least
/// of `π` and the smallest positive root of [`conjugate_equation`], which
/// lies in `(π/2, π]`.
pub fn conjugate_tau(h3bar: f64, eta: f64) -> Result<f64> {
    check_inputs(h3bar, eta, 1)?;
    if eta <= 0.0 || h3bar.abs() == 1.0 {
        return Ok(PI);
    }
    let cfg = RootConfig {
        scan_step: PI / 2000.0 / eta.max(1.0),
        tol: 1e-15,
        tau_cap: PI * (1.0 + 1e-9),
    };
    match first_positive_root(|t| conjugate_equation(t, h3bar, eta), &cfg) {
        Ok(r) => Ok(r.min(PI)),
        // h̄3 so close to ±1 that the sign change at π is lost to rounding
        Err(Error::NoRootInRange { .. }) => Ok(PI),
        Err(e) => Err(e),
    }
}

/// Rescaled first Maxwell time and the stratum it lands on.
///
/// Below the threshold `η < −(p−1)/p` and for `|h̄3| ≥ (p−1)/(p|η|)` the
/// rotation symmetry acts first, at `τ = π`; otherwise the first boundary
/// hit `τℓ` does. The threshold itself belongs to the boundary branch.
pub fn maxwell_tau(h3bar: f64, params: &MetricParams) -> Result<(f64, Regime)> {
    let eta = params.eta();
    let p = params.p;
    if eta < oblate_threshold(p) && h3bar.abs() >= (p - 1) as f64 / (p as f64 * eta.abs()) {
        check_inputs(h3bar, eta, p)?;
        return Ok((PI, Regime::RotationStratum));
    }
    Ok((tau_ell(h3bar, eta, p)?, Regime::BoundaryStratum))
}

/// Cut time with respect to `o` for covectors with vertical component `h̄3`.
pub fn cut_time(h3bar: f64, params: &MetricParams) -> Result<CutData> {
    let eta = params.eta();
    let p = params.p;
    let tau_ell_minus = tau_ell_minus(h3bar, eta, p)?;
    let tau_ell_plus = tau_ell_plus(h3bar, eta, p)?;
    let tau_ell = if h3bar >= 0.0 { tau_ell_minus } else { tau_ell_plus };
    let (tau_cut, regime) =
        if eta < oblate_threshold(p) && h3bar.abs() >= (p - 1) as f64 / (p as f64 * eta.abs()) {
            (PI, Regime::RotationStratum)
        } else {
            (tau_ell, Regime::BoundaryStratum)
        };
    Ok(CutData {
        h3bar,
        tau_ell_minus,
        tau_ell_plus,
        tau_ell,
        tau_conj: conjugate_tau(h3bar, eta)?,
        tau_cut,
        t_cut: t_of_tau(tau_cut, h3bar, params),
        regime,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::boundary_defect;
    use crate::geodesic::exp_su2;
    use crate::metric::InitialCovector;
    use std::f64::consts::FRAC_PI_2;

    /// `ℓ₋` through the geodesic endpoint and the boundary form.
    fn ell_minus_via_point(tau: f64, h3: f64, eta: f64, p: i64) -> f64 {
        let x = exp_su2(&InitialCovector::new(h3, 0.3).unwrap(), tau, eta);
        boundary_defect(&x, p).unwrap().0
    }

    /// Dense scan with linear interpolation inside the first sign change.
    fn dense_first_root(f: impl Fn(f64) -> f64, step: f64, cap: f64) -> f64 {
        let mut prev = f(0.0);
        let mut k = 1u64;
        loop {
            let t = k as f64 * step;
            assert!(t < cap, "no root");
            let v = f(t);
            if v.signum() != prev.signum() {
                return t - step * v / (v - prev);
            }
            prev = v;
            k += 1;
        }
    }

    #[test]
    fn ell_examples() {
        assert!((ell_minus(0.0, 0.4, 1.0, 2) + 1.0).abs() < 1e-15);
        assert!((ell_plus(0.0, 0.4, 1.0, 2) - 1.0).abs() < 1e-15);
        for &(tau, eta, p) in &[(0.3, 0.5, 3), (1.9, -0.7, 5), (4.0, 2.0, 2)] {
            let want = (tau * (1.0 + eta) - PI / p as f64).sin();
            assert!((ell_minus(tau, 1.0, eta, p) - want).abs() < 1e-14);
        }
        assert!(ell_minus(FRAC_PI_2, 0.0, 1.3, 3).abs() < 1e-15);
    }

    #[test]
    fn ell_matches_point_route() {
        for &(h3, eta, p) in &[(0.3, 0.5, 3), (-0.7, -0.6, 5), (0.99, 4.0, 2), (0.0, 1.0, 7)] {
            for k in 0..40 {
                let tau = 0.17 * k as f64;
                let a = ell_minus(tau, h3, eta, p);
                let b = ell_minus_via_point(tau, h3, eta, p);
                assert!((a - b).abs() < 1e-14, "{a} {b}");
            }
        }
    }

    #[test]
    fn boundary_roots_at_poles_and_equator() {
        for p in 2..=8 {
            for &eta in &[-0.9, -0.5, 0.0, 0.5, 2.0] {
                let pf = p as f64;
                assert!((tau_ell_minus(0.0, eta, p).unwrap() - FRAC_PI_2).abs() < 1e-10);
                assert!((tau_ell_plus(0.0, eta, p).unwrap() - FRAC_PI_2).abs() < 1e-10);
                let lo = PI / (pf * (1.0 + eta));
                assert!((tau_ell_minus(1.0, eta, p).unwrap() - lo).abs() < 1e-12);
                assert!((tau_ell_plus(1.0, eta, p).unwrap() - (pf - 1.0) * lo).abs() < 1e-12);
                // the scan agrees with the closed forms just inside the pole
                let near = tau_ell_minus(1.0 - 1e-12, eta, p).unwrap();
                assert!((near - lo).abs() < 1e-8, "p={p} eta={eta}: {near} vs {lo}");
            }
        }
    }

    #[test]
    fn boundary_root_matches_dense_scan() {
        let r = tau_ell_minus(0.7, 2.0, 3).unwrap();
        let dense = dense_first_root(|t| ell_minus_via_point(t, 0.7, 2.0, 3), PI / 1e6, 10.0);
        assert!(r > 0.0 && r <= FRAC_PI_2);
        assert!((r - dense).abs() < 1e-9, "{r} {dense}");
    }

    #[test]
    fn tau_ell_examples() {
        for &x in &[0.0, 0.2, 0.55, 0.9] {
            assert!((tau_ell(x, 0.0, 2).unwrap() - FRAC_PI_2).abs() < 1e-11);
            let a = tau_ell(x, 1.7, 5).unwrap();
            let b = tau_ell(-x, 1.7, 5).unwrap();
            assert!((a - b).abs() < 1e-10);
        }
        assert!((tau_ell(0.5, 0.0, 1).unwrap() - PI).abs() < 1e-11);
        // p = 1, h̄3 → 0 meets the conjugate time (tan τ = −ητ)
        let t0 = tau_ell(0.0, 1.0, 1).unwrap();
        assert!((t0 - conjugate_tau(0.0, 1.0).unwrap()).abs() < 1e-11);
    }

    #[test]
    fn conjugate_examples() {
        for &h in &[-1.0, -0.4, 0.0, 0.8] {
            assert_eq!(conjugate_tau(h, -0.5).unwrap(), PI);
        }
        assert_eq!(conjugate_tau(1.0, 1.0).unwrap(), PI);
        assert_eq!(conjugate_tau(-1.0, 1.0).unwrap(), PI);
        let r = conjugate_tau(0.0, 1.0).unwrap();
        assert!((r - 2.028757838).abs() < 1e-9);
        // independent check: tan τ = −τ on (π/2, π) by dense scan
        let dense = dense_first_root(|t| t.sin() + t * t.cos(), PI / 1e6, 4.0);
        assert!((r - dense).abs() < 1e-9);
        for &h in &[0.0, 0.3, 0.9, 0.999] {
            for &eta in &[0.01, 0.5, 3.0, 40.0] {
                let r = conjugate_tau(h, eta).unwrap();
                assert!(r > FRAC_PI_2 && r < PI, "h={h} eta={eta} r={r}");
            }
        }
    }

    #[test]
    fn maxwell_regimes() {
        let m = MetricParams::with_eta(3, 1, 1.0, -0.8).unwrap();
        assert_eq!(maxwell_tau(0.9, &m).unwrap(), (PI, Regime::RotationStratum));
        let (t, r) = maxwell_tau(0.1, &m).unwrap();
        assert_eq!(r, Regime::BoundaryStratum);
        assert_eq!(t, tau_ell(0.1, -0.8, 3).unwrap());
        let m = MetricParams::with_eta(2, 1, 1.0, 1.0).unwrap();
        for &h in &[-1.0, -0.2, 0.0, 0.6, 1.0] {
            assert_eq!(maxwell_tau(h, &m).unwrap().1, Regime::BoundaryStratum);
        }
        // p = 1 below η = 0: always the rotation branch
        let m = MetricParams::with_eta(1, 1, 1.0, -0.3).unwrap();
        assert_eq!(maxwell_tau(0.0, &m).unwrap().1, Regime::RotationStratum);
    }

    #[test]
    fn cut_time_examples() {
        for &(p, eta) in &[(2, 0.5), (3, -0.5), (5, 2.0), (3, -0.8)] {
            let m = MetricParams::with_eta(p, 1, 1.0, eta).unwrap();
            assert!((cut_time(0.0, &m).unwrap().t_cut - PI).abs() < 1e-10);
        }
        for &(p, eta) in &[(2, 0.5), (3, -0.5), (5, 2.0)] {
            let m = MetricParams::with_eta(p, 1, 1.0, eta).unwrap();
            let want = 2.0 * PI / (p as f64 * (1.0 + eta).sqrt());
            assert!((cut_time(1.0, &m).unwrap().t_cut - want).abs() < 1e-12);
        }
        let m = MetricParams::with_eta(3, 1, 1.0, -0.8).unwrap();
        let d = cut_time(0.9, &m).unwrap();
        assert_eq!(d.regime, Regime::RotationStratum);
        assert!((d.t_cut - 2.0 * PI * 0.352f64.sqrt()).abs() < 1e-12);
        assert!((d.t_cut - 3.7278).abs() < 1e-4);
    }

    #[test]
    fn boundary_hit_lands_on_boundary() {
        for &(p, eta) in &[(2, 0.3), (3, -0.5), (5, 1.5), (7, -0.2)] {
            for k in 0..=20 {
                let h3 = -1.0 + 0.1 * k as f64;
                let tau = tau_ell(h3, eta, p).unwrap();
                let x = exp_su2(&InitialCovector::new(h3, 0.9).unwrap(), tau, eta);
                let (m, pl) = boundary_defect(&x, p).unwrap();
                assert!((m * pl).abs() < 1e-9);
                assert!(x.q0 >= -1e-12);
            }
        }
    }

    #[test]
    fn rejects_out_of_range_inputs() {
        assert!(tau_ell_minus(1.5, 0.0, 3).is_err());
        assert!(tau_ell_minus(0.5, -1.0, 3).is_err());
        assert!(conjugate_tau(0.0, f64::NAN).is_err());
    }
}
