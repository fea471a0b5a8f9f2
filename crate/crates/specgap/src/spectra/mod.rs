//! Algebraic connectivity, Fiedler vectors, Rayleigh quotients, and
//! relaxation times, on top of a dense cyclic-Jacobi eigensolver.

mod jacobi;

pub use jacobi::{eigen_symmetric, eigen_values, Eigen, SymMatrix};

use crate::graph::Graph;
use crate::tol::Tolerances;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpectraError {
    #[error("weighting length does not match vertex count")]
    LengthMismatch,
    #[error("zero vector has no Rayleigh quotient")]
    ZeroVector,
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("Jacobi sweeps exceeded 100 without converging")]
    NoConvergence,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has fewer than 2 vertices")]
    TooSmall,
}

impl SpectraError {
    pub fn name(&self) -> &'static str {
        match self {
            SpectraError::LengthMismatch => "LengthMismatch",
            SpectraError::ZeroVector => "ZeroVector",
            SpectraError::NotSymmetric => "NotSymmetric",
            SpectraError::NoConvergence => "NoConvergence",
            SpectraError::Disconnected => "Disconnected",
            SpectraError::TooSmall => "TooSmall",
        }
    }
}

/// A weighting assigns one real value per vertex (the rho/x/y/z vectors).
pub type Weighting = Vec<f64>;

/// Full spectral summary of a connected graph.
#[derive(Debug, Clone)]
pub struct SpectralReport {
    /// algebraic connectivity, the second-smallest Laplacian eigenvalue
    pub mu: f64,
    /// all Laplacian eigenvalues, ascending
    pub laplacian_spectrum: Vec<f64>,
    /// unit Fiedler vector, orthogonal to the all-ones vector, sign-normalized
    /// so its first component of largest magnitude is positive
    pub fiedler: Vec<f64>,
    /// second-largest adjacency eigenvalue (computed independently of mu)
    pub adj_lambda2: f64,
    /// relaxation time 1/(1 - eta_2); +infinity when eta_2 is 1 within 1e-14
    pub tau: f64,
    /// set when the Fiedler eigenvalue is (numerically) not simple
    pub degenerate_fiedler: bool,
}

pub fn laplacian_matrix(g: &Graph) -> SymMatrix {
    let n = g.n();
    let mut m = SymMatrix::zeros(n);
    for v in 0..n {
        m.set(v, v, g.degree(v) as f64);
        for &w in g.neighbors(v) {
            if v < w {
                m.set(v, w, -1.0);
            }
        }
    }
    m
}

pub fn adjacency_matrix(g: &Graph) -> SymMatrix {
    let n = g.n();
    let mut m = SymMatrix::zeros(n);
    for v in 0..n {
        for &w in g.neighbors(v) {
            if v < w {
                m.set(v, w, 1.0);
            }
        }
    }
    m
}

/// x^T L x as the edge sum of squared differences.
pub fn laplacian_quadratic(g: &Graph, x: &[f64]) -> Result<f64, SpectraError> {
    if x.len() != g.n() {
        return Err(SpectraError::LengthMismatch);
    }
    let mut s = 0.0;
    for (u, v) in g.edges() {
        let d = x[u] - x[v];
        s += d * d;
    }
    Ok(s)
}

/// x^T L x / x^T x.
pub fn rayleigh_quotient(g: &Graph, x: &[f64]) -> Result<f64, SpectraError> {
    let num = laplacian_quadratic(g, x)?;
    let den: f64 = x.iter().map(|v| v * v).sum();
    if den == 0.0 {
        return Err(SpectraError::ZeroVector);
    }
    Ok(num / den)
}

/// mu(P_h) = 2(1 - cos(pi/h)).
pub fn path_mu_closed_form(h: usize) -> f64 {
    assert!(h >= 2, "path needs at least 2 vertices");
    2.0 * (1.0 - (std::f64::consts::PI / h as f64).cos())
}

/// Second-smallest Laplacian eigenvalue only (cheaper than a full report when
/// the adjacency side is not needed).
pub fn algebraic_connectivity(g: &Graph) -> Result<f64, SpectraError> {
    algebraic_connectivity_with(g, &Tolerances::default())
}

pub fn algebraic_connectivity_with(g: &Graph, tol: &Tolerances) -> Result<f64, SpectraError> {
    if g.n() < 2 {
        return Err(SpectraError::TooSmall);
    }
    if !g.is_connected() {
        return Err(SpectraError::Disconnected);
    }
    let values = eigen_values(&laplacian_matrix(g), tol)?;
    Ok(values[1])
}

pub fn spectral_report(g: &Graph) -> Result<SpectralReport, SpectraError> {
    spectral_report_with(g, &Tolerances::default())
}

pub fn spectral_report_with(g: &Graph, tol: &Tolerances) -> Result<SpectralReport, SpectraError> {
    let n = g.n();
    if n < 2 {
        return Err(SpectraError::TooSmall);
    }
    if !g.is_connected() {
        return Err(SpectraError::Disconnected);
    }

    let lap = eigen_symmetric(&laplacian_matrix(g), tol)?;
    let mu = lap.values[1];
    let degenerate_fiedler = n > 2 && (lap.values[2] - lap.values[1]).abs() < 1e-10;

    // Fiedler vector: re-project onto the complement of the all-ones vector to
    // scrub eigensolver leakage into the kernel, then renormalize and fix sign.
    let mut fiedler = lap.vectors[1].clone();
    let mean: f64 = fiedler.iter().sum::<f64>() / n as f64;
    for v in fiedler.iter_mut() {
        *v -= mean;
    }
    let norm: f64 = fiedler.iter().map(|v| v * v).sum::<f64>().sqrt();
    if norm > 0.0 {
        for v in fiedler.iter_mut() {
            *v /= norm;
        }
    }
    let mut arg = 0usize;
    for (i, v) in fiedler.iter().enumerate() {
        if v.abs() > fiedler[arg].abs() {
            arg = i;
        }
    }
    if fiedler[arg] < 0.0 {
        for v in fiedler.iter_mut() {
            *v = -*v;
        }
    }

    // adjacency side, computed independently
    let adj = eigen_values(&adjacency_matrix(g), tol)?;
    let adj_lambda2 = adj[n - 2];

    // eta_2: second-largest eigenvalue of D^{-1}A, via the similar symmetric
    // normalized adjacency D^{-1/2} A D^{-1/2}
    let eta2 = if let (_, _, Some(k)) = g.degree_profile() {
        adj_lambda2 / k as f64
    } else {
        let mut nm = SymMatrix::zeros(n);
        for v in 0..n {
            for &w in g.neighbors(v) {
                if v < w {
                    let val = 1.0 / ((g.degree(v) as f64) * (g.degree(w) as f64)).sqrt();
                    nm.set(v, w, val);
                }
            }
        }
        let ne = eigen_values(&nm, tol)?;
        ne[n - 2]
    };
    let tau = if (1.0 - eta2).abs() < 1e-14 {
        f64::INFINITY
    } else {
        1.0 / (1.0 - eta2)
    };

    Ok(SpectralReport {
        mu,
        laplacian_spectrum: lap.values,
        fiedler,
        adj_lambda2,
        tau,
        degenerate_fiedler,
    })
}

/// tau = 1/(1 - eta_2) for the random walk on g.
pub fn relaxation_time(g: &Graph) -> Result<f64, SpectraError> {
    Ok(spectral_report(g)?.tau)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    const EPS: f64 = 1e-9;

    #[test]
    fn quadratic_examples() {
        let p2 = Graph::path(2);
        assert_eq!(laplacian_quadratic(&p2, &[1.0, -1.0]).unwrap(), 4.0);
        let k5 = Graph::complete(5);
        assert_eq!(laplacian_quadratic(&k5, &[1.0; 5]).unwrap(), 0.0);
        assert_eq!(
            laplacian_quadratic(&k5, &[1.0; 4]).unwrap_err(),
            SpectraError::LengthMismatch
        );
    }

    #[test]
    fn rayleigh_examples() {
        let p2 = Graph::path(2);
        assert!((rayleigh_quotient(&p2, &[1.0, -1.0]).unwrap() - 2.0).abs() < EPS);
        let c4 = Graph::cycle(4);
        assert!((rayleigh_quotient(&c4, &[1.0, 0.0, -1.0, 0.0]).unwrap() - 2.0).abs() < EPS);
        assert_eq!(
            rayleigh_quotient(&c4, &[0.0; 4]).unwrap_err(),
            SpectraError::ZeroVector
        );
    }

    #[test]
    fn report_p2() {
        let r = spectral_report(&Graph::path(2)).unwrap();
        assert!((r.mu - 2.0).abs() < EPS);
        let inv = 0.5f64.sqrt();
        assert!((r.fiedler[0] - inv).abs() < EPS);
        assert!((r.fiedler[1] + inv).abs() < EPS);
    }

    #[test]
    fn report_k5() {
        let r = spectral_report(&Graph::complete(5)).unwrap();
        assert!((r.mu - 5.0).abs() < EPS);
        assert!(r.degenerate_fiedler);
        assert!((r.adj_lambda2 + 1.0).abs() < EPS);
        assert!((r.tau - 0.8).abs() < EPS);
    }

    #[test]
    fn relaxation_examples() {
        assert!((relaxation_time(&Graph::complete(5)).unwrap() - 0.8).abs() < EPS);
        assert!((relaxation_time(&Graph::cycle(4)).unwrap() - 1.0).abs() < EPS);
    }

    #[test]
    fn path_closed_form_examples() {
        assert!((path_mu_closed_form(2) - 2.0).abs() < EPS);
        assert!((path_mu_closed_form(4) - (2.0 - 2.0f64.sqrt())).abs() < EPS);
        let r = spectral_report(&Graph::path(50)).unwrap();
        assert!((path_mu_closed_form(50) - r.mu).abs() < 1e-9);
    }

    #[test]
    fn disconnected_and_tiny_rejected() {
        let g = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(spectral_report(&g).unwrap_err(), SpectraError::Disconnected);
        let one = Graph::new(1, &[]).unwrap();
        assert_eq!(spectral_report(&one).unwrap_err(), SpectraError::TooSmall);
    }

    #[test]
    fn report_invariants_on_star() {
        // non-regular graph exercises the normalized-adjacency eta_2 path
        let star = Graph::new(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        let r = spectral_report(&star).unwrap();
        assert!(r.laplacian_spectrum[0].abs() < 1e-9);
        let dot: f64 = r.fiedler.iter().sum();
        assert!(dot.abs() < 1e-8);
        let norm: f64 = r.fiedler.iter().map(|v| v * v).sum::<f64>();
        assert!((norm - 1.0).abs() < 1e-9);
        // star is bipartite: eta_n = -1, eta_2 = 0 (eigenvalues of D^{-1}A are
        // 1, 0, 0, 0, -1), so tau = 1
        assert!((r.tau - 1.0).abs() < EPS);
    }
}
