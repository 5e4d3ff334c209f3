//! Locale-independent number formatting shared by the CSV and JSON writers.

/// Formats `x` with 17 significant digits in scientific notation
/// (`1.5707963267948966e0`), which round-trips every `f64` exactly.
pub fn sig17(x: f64) -> String {
    if x == 0.0 {
        // avoid "-0.0000000000000000e0"
        return "0.0000000000000000e0".to_string();
    }
    format!("{:.16e}", x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trips() {
        for &x in &[std::f64::consts::PI, -1e-300, 0.1, 123456789.0, 2.0f64.sqrt()] {
            let s = sig17(x);
            assert_eq!(s.parse::<f64>().unwrap(), x, "{s}");
        }
        assert_eq!(sig17(-0.0), sig17(0.0));
        assert_eq!(sig17(1.0), "1.0000000000000000e0");
    }
}
