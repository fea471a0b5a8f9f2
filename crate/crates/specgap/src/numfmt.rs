//! Fixed significant-digit formatting for CLI and CSV payloads.

/// Format with `sig` significant digits, plain decimal notation.
pub fn fmt_sig(x: f64, sig: usize) -> String {
    if x == 0.0 {
        return format!("{:.*}", sig - 1, 0.0);
    }
    if !x.is_finite() {
        return if x.is_nan() {
            "nan".to_string()
        } else if x > 0.0 {
            "inf".to_string()
        } else {
            "-inf".to_string()
        };
    }
    let magnitude = x.abs().log10().floor() as i64;
    let decimals = (sig as i64 - 1 - magnitude).max(0) as usize;
    format!("{:.*}", decimals, x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twelve_significant_digits() {
        assert_eq!(fmt_sig(5.0, 12), "5.00000000000");
        assert_eq!(fmt_sig(0.0001, 12), "0.000100000000000");
        assert_eq!(fmt_sig(123.456, 12), "123.456000000");
        assert_eq!(fmt_sig(0.0, 12), "0.00000000000");
        assert_eq!(fmt_sig(-2.0, 12), "-2.00000000000");
        assert_eq!(fmt_sig(f64::INFINITY, 12), "inf");
    }
}
