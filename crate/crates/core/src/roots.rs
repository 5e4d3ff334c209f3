//! First positive root of a scalar function: fixed-stride sign scan, then
//! bisection inside the first bracket.

use std::f64::consts::PI;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RootConfig {
    /// Bracketing stride.
    pub scan_step: f64,
    /// Final bracket width.
    pub tol: f64,
    /// Search horizon; the scan covers `(0, tau_cap]`.
    pub tau_cap: f64,
}

impl Default for RootConfig {
    fn default() -> Self {
        RootConfig { scan_step: PI / 2000.0, tol: 1e-12, tau_cap: 4.0 * PI }
    }
}

impl RootConfig {
    /// Configuration for the `ℓ±` family and `q3` (`p = 1`).
    ///
    /// The stride shrinks with `|η|` since `sin(τ·η·h̄3)` oscillates at that
    /// rate. The cap `π + 2π/(p(1+η))` covers the largest root
    /// `(p−1)π/(p(1+η))`, which grows without bound as `η → −1`.
    pub fn for_boundary(eta: f64, p: i64) -> Self {
        RootConfig {
            scan_step: PI / 2000.0 / eta.abs().max(1.0),
            tol: 1e-15,
            tau_cap: PI + 2.0 * PI / (p as f64 * (1.0 + eta)),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.scan_step > 0.0 && self.tol > 0.0 && self.tau_cap > self.scan_step {
            Ok(())
        } else {
            Err(Error::InvalidArgument(format!("bad root config {self:?}")))
        }
    }
}

/// Bisection on `[lo, hi]`; `f(lo)` and `f(hi)` must differ in sign.
///
/// Stops when the bracket is narrower than `tol` or cannot be split further.
pub fn bisect<F: Fn(f64) -> f64>(f: F, mut lo: f64, mut hi: f64, tol: f64) -> Result<f64> {
    let mut flo = f(lo);
    let fhi = f(hi);
    if flo == 0.0 {
        return Ok(lo);
    }
    if fhi == 0.0 {
        return Ok(hi);
    }
    if flo.signum() == fhi.signum() {
        return Err(Error::InvalidArgument(format!(
            "bisect: no sign change on [{lo}, {hi}]"
        )));
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if hi - lo <= tol || mid <= lo || mid >= hi {
            break;
        }
        let fm = f(mid);
        if fm == 0.0 {
            return Ok(mid);
        }
        if fm.signum() == flo.signum() {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Smallest positive root found by scanning left to right.
///
/// The sign reference is `f(0)` when it is nonzero; otherwise the scan starts
/// at `scan_step`, so a root in `(0, scan_step)` is not seen. Grid points are
/// `k·scan_step`, never accumulated.
pub fn first_positive_root<F: Fn(f64) -> f64>(f: F, cfg: &RootConfig) -> Result<f64> {
    cfg.validate()?;
    let f0 = f(0.0);
    let (mut k, mut prev) = if f0 != 0.0 {
        (0u64, f0)
    } else {
        let v = f(cfg.scan_step);
        if v == 0.0 {
            return Ok(cfg.scan_step);
        }
        (1u64, v)
    };
    loop {
        let lo = k as f64 * cfg.scan_step;
        if lo >= cfg.tau_cap {
            return Err(Error::NoRootInRange { cap: cfg.tau_cap });
        }
        let hi = ((k + 1) as f64 * cfg.scan_step).min(cfg.tau_cap);
        let v = f(hi);
        if v == 0.0 {
            return Ok(hi);
        }
        if v.signum() != prev.signum() {
            return bisect(&f, lo, hi, cfg.tol);
        }
        prev = v;
        k += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_2;

    #[test]
    fn examples() {
        let cfg = RootConfig::default();
        assert!((first_positive_root(f64::sin, &cfg).unwrap() - PI).abs() < 1e-12);
        assert!((first_positive_root(f64::cos, &cfg).unwrap() - FRAC_PI_2).abs() < 1e-12);
        assert!((first_positive_root(|t| t - 1.5, &cfg).unwrap() - 1.5).abs() < 1e-12);
    }

    #[test]
    fn no_root_is_reported() {
        let cfg = RootConfig { tau_cap: 3.0, ..RootConfig::default() };
        assert!(matches!(
            first_positive_root(f64::sin, &cfg),
            Err(Error::NoRootInRange { .. })
        ));
        let bad = RootConfig { scan_step: 0.0, ..cfg };
        assert!(first_positive_root(f64::cos, &bad).is_err());
    }

    #[test]
    fn bisect_requires_bracket() {
        assert!(bisect(f64::sin, 0.5, 1.0, 1e-12).is_err());
        let r = bisect(|x| x * x - 2.0, 0.0, 2.0, 1e-14).unwrap();
        assert!((r - 2f64.sqrt()).abs() < 1e-14);
    }

    #[test]
    fn finds_first_of_close_roots() {
        // roots at 1.0 and 1.0 + 5e-3, both resolved at the default stride
        let f = |t: f64| (t - 1.0) * (t - 1.005);
        let r = first_positive_root(f, &RootConfig::default()).unwrap();
        assert!((r - 1.0).abs() < 1e-12);
    }
}
