//! Centralized numeric tolerances.

/// Tolerance bundle used across the crate.
///
/// `eig` drives eigensolver termination and symmetry checks; `compare` is
/// the tolerance for equality of computed spectral quantities (minimizer
/// clustering, quotient-vs-dense agreement, monotonicity slack).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    pub eig: f64,
    pub compare: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            eig: 1e-12,
            compare: 1e-9,
        }
    }
}

impl Tolerances {
    /// Default tolerances, with `compare` overridden by the `SPECGAP_TOL`
    /// environment variable when it is set to a parseable float.
    pub fn from_env() -> Self {
        let mut t = Tolerances::default();
        if let Ok(s) = std::env::var("SPECGAP_TOL") {
            if let Ok(v) = s.trim().parse::<f64>() {
                if v.is_finite() && v > 0.0 {
                    t.compare = v;
                }
            }
        }
        t
    }
}
