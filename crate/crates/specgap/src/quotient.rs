//! Equitable partitions and divisor (quotient) matrices.
//!
//! For the path-like families the symmetrized Laplacian quotient is banded
//! with small bandwidth, so its second-smallest eigenvalue is computed by
//! bisection with a Sturm (LDL^T inertia) count in O(cells * bandwidth^2)
//! per evaluation. That carries mu computations to n ~ 10^6 where dense
//! solvers cannot go. Small quotients use the dense Jacobi path.

use crate::families::{self, FamiliesError};
use crate::graph::Graph;
use crate::numfmt::fmt_sig;
use crate::spectra::{self, SpectraError, SymMatrix};
use crate::tol::Tolerances;
use rayon::prelude::*;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum QuotientError {
    #[error("bad partition: {0}")]
    BadPartition(String),
    #[error("partition is not equitable: {0}")]
    NotEquitable(String),
    #[error(transparent)]
    Families(#[from] FamiliesError),
    #[error(transparent)]
    Spectra(#[from] SpectraError),
}

impl QuotientError {
    pub fn name(&self) -> &'static str {
        match self {
            QuotientError::BadPartition(_) => "BadPartition",
            QuotientError::NotEquitable(_) => "NotEquitable",
            QuotientError::Families(e) => e.name(),
            QuotientError::Spectra(e) => e.name(),
        }
    }
}

/// Ordered partition of a vertex set into disjoint cells.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    pub cells: Vec<Vec<usize>>,
}

impl Partition {
    pub fn new(cells: Vec<Vec<usize>>) -> Partition {
        Partition { cells }
    }

    pub fn singletons(n: usize) -> Partition {
        Partition {
            cells: (0..n).map(|v| vec![v]).collect(),
        }
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.cells.iter().map(Vec::len).collect()
    }

    /// Cell index per vertex; errors unless the cells exactly cover 0..n-1.
    fn cell_index(&self, n: usize) -> Result<Vec<usize>, QuotientError> {
        let mut idx = vec![usize::MAX; n];
        for (i, cell) in self.cells.iter().enumerate() {
            if cell.is_empty() {
                return Err(QuotientError::BadPartition(format!("cell {i} is empty")));
            }
            for &v in cell {
                if v >= n {
                    return Err(QuotientError::BadPartition(format!(
                        "vertex {v} out of range {n}"
                    )));
                }
                if idx[v] != usize::MAX {
                    return Err(QuotientError::BadPartition(format!(
                        "vertex {v} appears in two cells"
                    )));
                }
                idx[v] = i;
            }
        }
        if let Some(v) = idx.iter().position(|&i| i == usize::MAX) {
            return Err(QuotientError::BadPartition(format!(
                "vertex {v} is not covered"
            )));
        }
        Ok(idx)
    }
}

/// Per-vertex neighbor counts into each cell, as a sorted sparse signature.
fn signature(g: &Graph, idx: &[usize], v: usize) -> Vec<(usize, usize)> {
    let mut sig: Vec<(usize, usize)> = Vec::with_capacity(g.degree(v));
    for &w in g.neighbors(v) {
        let c = idx[w];
        match sig.iter_mut().find(|(cell, _)| *cell == c) {
            Some((_, count)) => *count += 1,
            None => sig.push((c, 1)),
        }
    }
    sig.sort_unstable();
    sig
}

/// True iff every vertex of each cell has the same number of neighbors in
/// every cell.
pub fn is_equitable(g: &Graph, p: &Partition) -> Result<bool, QuotientError> {
    let idx = p.cell_index(g.n())?;
    for cell in &p.cells {
        let first = signature(g, &idx, cell[0]);
        for &v in &cell[1..] {
            if signature(g, &idx, v) != first {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Divisor matrix of an equitable partition: `b[i][j]` counts the neighbors
/// in cell j of any vertex in cell i. Row sums are the (cell-constant)
/// degrees.
#[derive(Debug, Clone)]
pub struct QuotientMatrix {
    pub sizes: Vec<usize>,
    /// sparse rows of B: (column, count)
    pub rows: Vec<Vec<(usize, usize)>>,
    /// per-cell degree (row sum of B)
    pub degree: Vec<usize>,
}

impl QuotientMatrix {
    pub fn k(&self) -> usize {
        self.sizes.len()
    }

    /// Dense B (small quotients only).
    pub fn b_dense(&self) -> Vec<Vec<f64>> {
        let k = self.k();
        let mut b = vec![vec![0.0; k]; k];
        for (i, row) in self.rows.iter().enumerate() {
            for &(j, c) in row {
                b[i][j] = c as f64;
            }
        }
        b
    }

    /// Symmetrized B: S = D^{1/2} B D^{-1/2} with D = diag(cell sizes).
    /// Computed from the upper triangle only, so it is exactly symmetric.
    pub fn symmetrized(&self) -> SymMatrix {
        let k = self.k();
        let mut s = SymMatrix::zeros(k);
        for (i, row) in self.rows.iter().enumerate() {
            for &(j, c) in row {
                if j >= i {
                    let v = c as f64 * (self.sizes[i] as f64 / self.sizes[j] as f64).sqrt();
                    s.set(i, j, v);
                }
            }
        }
        s
    }

    /// Symmetrized Laplacian quotient: diag(degree) - S.
    pub fn sym_laplacian(&self) -> SymMatrix {
        let k = self.k();
        let s = self.symmetrized();
        let mut m = SymMatrix::zeros(k);
        for i in 0..k {
            m.set(i, i, self.degree[i] as f64 - s.get(i, i));
            for j in (i + 1)..k {
                let v = s.get(i, j);
                if v != 0.0 {
                    m.set(i, j, -v);
                }
            }
        }
        m
    }

    /// Max |i - j| over nonzero entries.
    pub fn bandwidth(&self) -> usize {
        let mut bw = 0usize;
        for (i, row) in self.rows.iter().enumerate() {
            for &(j, _) in row {
                bw = bw.max(i.abs_diff(j));
            }
        }
        bw
    }

    /// Banded matrix congruent to the symmetrized Laplacian quotient minus
    /// x*I, with exactly representable integer entries.
    ///
    /// With C = diag(sqrt(Lcm/n_i)) and Lcm the cell-size lcm, the matrix
    /// C (L_S - xI) C^T has off-diagonal entries -b_ij * Lcm / n_j (integers,
    /// symmetric because b_ij n_i = b_ji n_j) and diagonal
    /// (deg_i - b_ii) Lcm / n_i - x * Lcm / n_i. Sylvester's law preserves
    /// the inertia, so the Sturm count on this matrix counts eigenvalues of
    /// the symmetrized quotient below x while avoiding irrational entries:
    /// run in double-double arithmetic, the count resolves eigenvalues far
    /// below the f64 rounding floor of the naive formulation.
    fn banded_congruence(&self) -> BandedSym {
        let k = self.k();
        let bw = self.bandwidth().max(1);
        let true_lcm = self
            .sizes
            .iter()
            .fold(1u64, |acc, &s| num_lcm(acc, s as u64).min(1 << 40));
        // exotic size mixes would overflow the exact-integer window; any
        // positive scale keeps the congruence (and the count) correct, it
        // just loses the exact representation
        let lcm = if true_lcm > 1 << 20 { 1.0 } else { true_lcm as f64 };
        let mut band = vec![0.0f64; k * (bw + 1)];
        let mut shift = vec![0.0f64; k];
        for (i, row) in self.rows.iter().enumerate() {
            let scale_i = lcm / self.sizes[i] as f64;
            shift[i] = scale_i;
            band[i * (bw + 1) + bw] = self.degree[i] as f64 * scale_i;
            for &(j, c) in row {
                if j < i {
                    band[i * (bw + 1) + (bw - (i - j))] =
                        -(c as f64) * (lcm / self.sizes[j] as f64);
                } else if j == i {
                    band[i * (bw + 1) + bw] -= c as f64 * scale_i;
                }
            }
        }
        BandedSym {
            n: k,
            bw,
            band,
            shift,
        }
    }
}

fn num_gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        num_gcd(b, a % b)
    }
}

fn num_lcm(a: u64, b: u64) -> u64 {
    a / num_gcd(a, b) * b
}

/// Build the divisor matrix; errors when the partition is not equitable.
pub fn quotient_matrix(g: &Graph, p: &Partition) -> Result<QuotientMatrix, QuotientError> {
    let idx = p.cell_index(g.n())?;
    let mut rows = Vec::with_capacity(p.cells.len());
    let mut degree = Vec::with_capacity(p.cells.len());
    for (i, cell) in p.cells.iter().enumerate() {
        let first = signature(g, &idx, cell[0]);
        for &v in &cell[1..] {
            if signature(g, &idx, v) != first {
                return Err(QuotientError::NotEquitable(format!(
                    "vertices {} and {} of cell {} disagree",
                    cell[0], v, i
                )));
            }
        }
        degree.push(first.iter().map(|&(_, c)| c).sum());
        rows.push(first);
    }
    Ok(QuotientMatrix {
        sizes: p.sizes(),
        rows,
        degree,
    })
}

/// Double-double arithmetic for the Sturm pivot recurrence: roughly 32
/// significant decimal digits, enough to resolve eigenvalues near 1e-9 on
/// matrices of unit scale, far past the plain f64 floor.
mod dd {
    #[derive(Debug, Clone, Copy)]
    pub struct Dd {
        hi: f64,
        lo: f64,
    }

    #[inline]
    fn two_sum(a: f64, b: f64) -> (f64, f64) {
        let s = a + b;
        let bb = s - a;
        (s, (a - (s - bb)) + (b - bb))
    }

    #[inline]
    fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
        let s = a + b;
        (s, b - (s - a))
    }

    #[inline]
    fn two_prod(a: f64, b: f64) -> (f64, f64) {
        let p = a * b;
        (p, f64::mul_add(a, b, -p))
    }

    impl Dd {
        #[inline]
        pub fn from(x: f64) -> Dd {
            Dd { hi: x, lo: 0.0 }
        }

        #[inline]
        pub fn prod(a: f64, b: f64) -> Dd {
            let (hi, lo) = two_prod(a, b);
            Dd { hi, lo }
        }

        #[inline]
        pub fn add(self, o: Dd) -> Dd {
            let (s, e) = two_sum(self.hi, o.hi);
            let e = e + self.lo + o.lo;
            let (hi, lo) = quick_two_sum(s, e);
            Dd { hi, lo }
        }

        #[inline]
        pub fn sub(self, o: Dd) -> Dd {
            self.add(Dd {
                hi: -o.hi,
                lo: -o.lo,
            })
        }

        #[inline]
        pub fn mul(self, o: Dd) -> Dd {
            let (p, e) = two_prod(self.hi, o.hi);
            let e = e + self.hi * o.lo + self.lo * o.hi;
            let (hi, lo) = quick_two_sum(p, e);
            Dd { hi, lo }
        }

        #[inline]
        pub fn div(self, o: Dd) -> Dd {
            let q1 = self.hi / o.hi;
            let r = self.sub(o.mul(Dd::from(q1)));
            let q2 = r.hi / o.hi;
            let r = r.sub(o.mul(Dd::from(q2)));
            let q3 = r.hi / o.hi;
            let (hi, lo) = quick_two_sum(q1, q2);
            Dd { hi, lo }.add(Dd::from(q3))
        }

        #[inline]
        pub fn is_negative(self) -> bool {
            self.hi < 0.0 || (self.hi == 0.0 && self.lo < 0.0)
        }

        #[inline]
        pub fn is_zero(self) -> bool {
            self.hi == 0.0 && self.lo == 0.0
        }
    }
}

use dd::Dd;

/// Symmetric banded matrix with a per-row diagonal shift coefficient: the
/// object factored is M - x * diag(shift). Lower band storage: row i holds
/// entries (i, i-bw) ... (i, i) at offsets 0..=bw.
struct BandedSym {
    n: usize,
    bw: usize,
    band: Vec<f64>,
    shift: Vec<f64>,
}

impl BandedSym {
    /// Number of negative eigenvalues of M - x*diag(shift): negative pivots
    /// of its LDL^T factorization, evaluated in double-double arithmetic.
    fn count_below(&self, x: f64) -> usize {
        let n = self.n;
        let bw = self.bw;
        let w = bw + 1;
        let mut l = vec![Dd::from(0.0); n * w];
        let mut d = vec![Dd::from(0.0); n];
        let mut negatives = 0usize;
        for i in 0..n {
            let lo = i.saturating_sub(bw);
            for j in lo..i {
                let mut v = Dd::from(self.band[i * w + (bw - (i - j))]);
                let tlo = lo.max(j.saturating_sub(bw));
                for t in tlo..j {
                    let lit = l[i * w + (bw - (i - t))];
                    let ljt = l[j * w + (bw - (j - t))];
                    v = v.sub(lit.mul(ljt).mul(d[t]));
                }
                l[i * w + (bw - (i - j))] = v.div(d[j]);
            }
            let mut v = Dd::from(self.band[i * w + bw]).sub(Dd::prod(x, self.shift[i]));
            for t in lo..i {
                let lit = l[i * w + (bw - (i - t))];
                v = v.sub(lit.mul(lit).mul(d[t]));
            }
            // guard against exact-zero pivots; the sign choice only moves the
            // count boundary by one ulp of x
            if v.is_zero() {
                v = Dd::from(-1e-300);
            }
            if v.is_negative() {
                negatives += 1;
            }
            d[i] = v;
        }
        negatives
    }

    /// Second-smallest eigenvalue by bisection on [0, hi], driven to full
    /// f64 resolution of the eigenvalue itself.
    fn second_smallest(&self, hi: f64) -> f64 {
        let mut lo = 0.0f64;
        let mut hi = hi;
        debug_assert!(self.count_below(hi) >= 2);
        for _ in 0..2000 {
            let mid = lo + 0.5 * (hi - lo);
            if mid <= lo || mid >= hi {
                break;
            }
            if self.count_below(mid) >= 2 {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        0.5 * (lo + hi)
    }
}

const DENSE_QUOTIENT_CAP: usize = 600;

/// Algebraic connectivity through the quotient: the second-smallest
/// eigenvalue of the symmetrized Laplacian quotient. Valid whenever the
/// partition is equitable and the Fiedler vector is cell-constant (true for
/// the families here).
pub fn mu_from_quotient(g: &Graph, p: &Partition) -> Result<f64, QuotientError> {
    mu_from_quotient_with(g, p, &Tolerances::default())
}

pub fn mu_from_quotient_with(
    g: &Graph,
    p: &Partition,
    tol: &Tolerances,
) -> Result<f64, QuotientError> {
    if !g.is_connected() {
        return Err(QuotientError::Spectra(SpectraError::Disconnected));
    }
    let qm = quotient_matrix(g, p)?;
    if qm.k() < 2 {
        return Err(QuotientError::BadPartition(
            "need at least 2 cells for a second eigenvalue".to_string(),
        ));
    }
    if qm.k() <= DENSE_QUOTIENT_CAP {
        let eig = spectra::eigen_symmetric(&qm.sym_laplacian(), tol)?;
        Ok(eig.values[1])
    } else {
        let hi = 2.0 * qm.degree.iter().copied().max().unwrap_or(1) as f64 + 1.0;
        Ok(qm.banded_congruence().second_smallest(hi))
    }
}

/// Force the banded Sturm path regardless of size (lets tests compare the
/// two routes).
pub fn mu_from_quotient_banded(g: &Graph, p: &Partition) -> Result<f64, QuotientError> {
    let qm = quotient_matrix(g, p)?;
    let hi = 2.0 * qm.degree.iter().copied().max().unwrap_or(1) as f64 + 1.0;
    Ok(qm.banded_congruence().second_smallest(hi))
}

/// Families covered by the asymptotics table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AsymFamily {
    CubicGn,
    CubicH,
    QuarticMin,
}

impl AsymFamily {
    pub fn regularity(self) -> usize {
        match self {
            AsymFamily::CubicGn | AsymFamily::CubicH => 3,
            AsymFamily::QuarticMin => 4,
        }
    }

    /// Graph of the given order together with its column partition. For the
    /// H family the order is the order of H itself (n + 2).
    fn build(self, order: usize) -> Result<(Graph, Partition), FamiliesError> {
        match self {
            AsymFamily::CubicGn => families::cubic_gn_with_cells(order),
            AsymFamily::CubicH => {
                if order < 14 {
                    return Err(FamiliesError::BadOrder(format!(
                        "H graphs have at least 14 vertices, got {order}"
                    )));
                }
                families::cubic_h_with_cells(order - 2)
            }
            AsymFamily::QuarticMin => families::conjectured_quartic_min_with_cells(order),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct AsymRow {
    pub n: usize,
    pub mu: f64,
    /// mu * n^2 / (2 pi^2)
    pub mu_ratio: f64,
    /// tau * 2 pi^2 / (3 n^2), with tau = k / mu
    pub tau_ratio: f64,
}

const DENSE_GRAPH_CAP: usize = 2000;

/// One row per requested order: mu via the dense solver for n <= 2000 and
/// via the banded quotient beyond; ratio columns normalized per the cubic
/// asymptotics. Rows computed in parallel, returned in input order.
pub fn asymptotics_table(
    orders: &[usize],
    family: AsymFamily,
    tol: &Tolerances,
) -> Result<Vec<AsymRow>, QuotientError> {
    let k = family.regularity() as f64;
    let two_pi2 = 2.0 * std::f64::consts::PI * std::f64::consts::PI;
    orders
        .par_iter()
        .map(|&n| {
            let (g, cells) = family.build(n)?;
            let mu = if n <= DENSE_GRAPH_CAP {
                spectra::algebraic_connectivity_with(&g, tol)?
            } else {
                if !is_equitable(&g, &cells)? {
                    return Err(QuotientError::NotEquitable(format!(
                        "column partition not equitable at n={n}"
                    )));
                }
                mu_from_quotient_with(&g, &cells, tol)?
            };
            let nsq = (n * n) as f64;
            let tau = k / mu;
            Ok(AsymRow {
                n,
                mu,
                mu_ratio: mu * nsq / two_pi2,
                tau_ratio: tau * two_pi2 / (3.0 * nsq),
            })
        })
        .collect()
}

/// CSV payload: header plus one row per entry, 12 significant digits, LF.
pub fn asymptotics_csv(rows: &[AsymRow]) -> String {
    let mut s = String::from("n,mu,mu_ratio,tau_ratio\n");
    for r in rows {
        s.push_str(&format!(
            "{},{},{},{}\n",
            r.n,
            fmt_sig(r.mu, 12),
            fmt_sig(r.mu_ratio, 12),
            fmt_sig(r.tau_ratio, 12)
        ));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{conjectured_quartic_min_with_cells, cubic_gn_with_cells};

    #[test]
    fn equitable_examples() {
        let (g10, cells) = cubic_gn_with_cells(10).unwrap();
        assert!(is_equitable(&g10, &cells).unwrap());

        let k5 = Graph::complete(5);
        assert!(is_equitable(&k5, &Partition::singletons(5)).unwrap());

        let p3 = Graph::path(3);
        assert!(is_equitable(&p3, &Partition::new(vec![vec![0, 2], vec![1]])).unwrap());
        assert!(!is_equitable(&p3, &Partition::new(vec![vec![0, 1], vec![2]])).unwrap());
    }

    #[test]
    fn bad_partitions_rejected() {
        let p3 = Graph::path(3);
        assert_eq!(
            is_equitable(&p3, &Partition::new(vec![vec![0, 1]]))
                .unwrap_err()
                .name(),
            "BadPartition"
        );
        assert_eq!(
            is_equitable(&p3, &Partition::new(vec![vec![0, 1], vec![1, 2]]))
                .unwrap_err()
                .name(),
            "BadPartition"
        );
    }

    #[test]
    fn quotient_matrix_examples() {
        let (g10, cells) = cubic_gn_with_cells(10).unwrap();
        let qm = quotient_matrix(&g10, &cells).unwrap();
        assert_eq!(qm.k(), 6);
        assert!(qm.degree.iter().all(|&d| d == 3));

        let k2 = Graph::complete(2);
        let qm = quotient_matrix(&k2, &Partition::singletons(2)).unwrap();
        assert_eq!(qm.b_dense(), vec![vec![0.0, 1.0], vec![1.0, 0.0]]);

        let c4 = Graph::cycle(4);
        let anti = Partition::new(vec![vec![0, 2], vec![1, 3]]);
        let qm = quotient_matrix(&c4, &anti).unwrap();
        assert_eq!(qm.b_dense(), vec![vec![0.0, 2.0], vec![2.0, 0.0]]);

        let p3 = Graph::path(3);
        assert_eq!(
            quotient_matrix(&p3, &Partition::new(vec![vec![0, 1], vec![2]]))
                .unwrap_err()
                .name(),
            "NotEquitable"
        );
    }

    #[test]
    fn mu_quotient_matches_dense_small() {
        let tol = Tolerances::default();
        for n in [10usize, 14, 30, 50] {
            let (g, cells) = cubic_gn_with_cells(n).unwrap();
            let dense = spectra::algebraic_connectivity(&g).unwrap();
            let quot = mu_from_quotient(&g, &cells).unwrap();
            let banded = mu_from_quotient_banded(&g, &cells).unwrap();
            assert!((dense - quot).abs() < tol.compare, "n={n}");
            assert!((dense - banded).abs() < tol.compare, "n={n} banded");
        }
        for n in [11usize, 15, 23, 41] {
            let (g, cells) = conjectured_quartic_min_with_cells(n).unwrap();
            assert!(is_equitable(&g, &cells).unwrap(), "quartic cells n={n}");
            let dense = spectra::algebraic_connectivity(&g).unwrap();
            let quot = mu_from_quotient(&g, &cells).unwrap();
            assert!((dense - quot).abs() < tol.compare, "n={n}");
        }
    }

    #[test]
    fn p2_trivial_partition_gives_two() {
        let p2 = Graph::path(2);
        let mu = mu_from_quotient(&p2, &Partition::singletons(2)).unwrap();
        assert!((mu - 2.0).abs() < 1e-9);
    }

    #[test]
    fn quotient_spectrum_within_full_spectrum() {
        let tol = Tolerances::default();
        for n in [10usize, 22, 50] {
            let (g, cells) = cubic_gn_with_cells(n).unwrap();
            let qm = quotient_matrix(&g, &cells).unwrap();
            let qe = spectra::eigen_symmetric(&qm.sym_laplacian(), &tol).unwrap();
            let fe = spectra::eigen_symmetric(&spectra::laplacian_matrix(&g), &tol).unwrap();
            for qv in &qe.values {
                let hit = fe.values.iter().any(|fv| (fv - qv).abs() < 1e-8);
                assert!(hit, "quotient eigenvalue {qv} missing from full spectrum");
            }
        }
    }

    #[test]
    fn sturm_count_matches_jacobi_on_random_band() {
        // deterministic pseudo-random symmetric banded matrix
        let n = 80usize;
        let bw = 3usize;
        let mut state = 0x2545f491_4f6cdd1du64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state >> 11) as f64 / (1u64 << 53) as f64 * 2.0 - 1.0
        };
        let mut dense = SymMatrix::zeros(n);
        for i in 0..n {
            // diagonally dominant keeps the spectrum positive, so the
            // [0, hi] bisection window below is valid
            dense.set(i, i, 8.0 + next());
            for j in (i + 1)..(i + bw + 1).min(n) {
                dense.set(i, j, next());
            }
        }
        let mut band = vec![0.0f64; n * (bw + 1)];
        for i in 0..n {
            for j in i.saturating_sub(bw)..=i {
                band[i * (bw + 1) + (bw - (i - j))] = dense.get(i, j);
            }
        }
        let banded = BandedSym {
            n,
            bw,
            band,
            shift: vec![1.0; n],
        };
        let eig = spectra::eigen_symmetric(&dense, &Tolerances::default()).unwrap();
        for &x in &[0.0, 1.0, 3.5, 4.0, 4.5, 8.0] {
            let want = eig.values.iter().filter(|&&v| v < x).count();
            assert_eq!(banded.count_below(x), want, "count at x={x}");
        }
        let second = banded.second_smallest(eig.values[n - 1] + 1.0);
        assert!(
            (second - eig.values[1]).abs() < 1e-10,
            "second smallest: sturm {second} vs jacobi {}",
            eig.values[1]
        );
    }

    #[test]
    fn banded_route_sanity_at_large_n() {
        // the banded path must engage above the dense cap and land on the
        // right asymptotic scale
        let (g, cells) = cubic_gn_with_cells(10002).unwrap();
        assert!(cells.cells.len() > DENSE_QUOTIENT_CAP);
        let mu = mu_from_quotient(&g, &cells).unwrap();
        let ratio = mu * (10002.0f64 * 10002.0) / (2.0 * std::f64::consts::PI.powi(2));
        assert!(ratio > 0.9 && ratio < 1.02, "ratio {ratio}");
    }

    #[test]
    fn csv_shape() {
        let rows =
            asymptotics_table(&[10, 50], AsymFamily::CubicGn, &Tolerances::default()).unwrap();
        let csv = asymptotics_csv(&rows);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), 3);
        assert_eq!(lines[0], "n,mu,mu_ratio,tau_ratio");
        assert!(lines[1].starts_with("10,"));
    }
}
