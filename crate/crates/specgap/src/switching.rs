//! Elementary moves (degree-preserving edge switches), proper-switch
//! detection against a Fiedler weighting, the exact Rayleigh delta, and a
//! mu-descent local search that never applies a disconnecting move.

use crate::graph::Graph;
use crate::spectra::{self, SpectraError, SpectralReport, Weighting};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SwitchError {
    #[error("invalid move: {0}")]
    InvalidMove(String),
    #[error(transparent)]
    Spectra(#[from] SpectraError),
}

impl SwitchError {
    pub fn name(&self) -> &'static str {
        match self {
            SwitchError::InvalidMove(_) => "InvalidMove",
            SwitchError::Spectra(e) => e.name(),
        }
    }
}

/// The switch sw(a, b, c, d): remove edges ab and cd, add ac and bd.
/// Requires a~b, c~d, a!~c, b!~d, all four distinct.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SwitchMove {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub d: usize,
    /// change of rho^T L rho removed by the move: 2 (rho_a - rho_d)(rho_c - rho_b)
    pub predicted_delta: f64,
}

impl SwitchMove {
    pub fn new(a: usize, b: usize, c: usize, d: usize) -> SwitchMove {
        SwitchMove {
            a,
            b,
            c,
            d,
            predicted_delta: 0.0,
        }
    }

    pub fn validate(&self, g: &Graph) -> Result<(), SwitchError> {
        let SwitchMove { a, b, c, d, .. } = *self;
        let verts = [a, b, c, d];
        for &v in &verts {
            if v >= g.n() {
                return Err(SwitchError::InvalidMove(format!("vertex {v} out of range")));
            }
        }
        for i in 0..4 {
            for j in (i + 1)..4 {
                if verts[i] == verts[j] {
                    return Err(SwitchError::InvalidMove(format!(
                        "vertices must be distinct, {} repeats",
                        verts[i]
                    )));
                }
            }
        }
        if !g.has_edge(a, b) {
            return Err(SwitchError::InvalidMove(format!("{a}~{b} required")));
        }
        if !g.has_edge(c, d) {
            return Err(SwitchError::InvalidMove(format!("{c}~{d} required")));
        }
        if g.has_edge(a, c) {
            return Err(SwitchError::InvalidMove(format!("{a}!~{c} required")));
        }
        if g.has_edge(b, d) {
            return Err(SwitchError::InvalidMove(format!("{b}!~{d} required")));
        }
        Ok(())
    }
}

/// Apply the switch, returning the new graph. Degree sequence is preserved.
pub fn elementary_move(g: &Graph, m: &SwitchMove) -> Result<Graph, SwitchError> {
    m.validate(g)?;
    Ok(g.swap_edges((m.a, m.b), (m.c, m.d)))
}

/// Vertices sorted by Fiedler value descending (ties by vertex id), plus the
/// weighting itself.
#[derive(Debug, Clone)]
pub struct ProperLabeling {
    pub order: Vec<usize>,
    pub rho: Weighting,
    pub report: SpectralReport,
}

pub fn proper_labeling(g: &Graph) -> Result<ProperLabeling, SwitchError> {
    let report = spectra::spectral_report(g)?;
    let rho = report.fiedler.clone();
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by(|&u, &v| {
        rho[v]
            .partial_cmp(&rho[u])
            .expect("Fiedler values are finite")
            .then(u.cmp(&v))
    });
    Ok(ProperLabeling { order, rho, report })
}

/// rho_a >= rho_d and rho_c >= rho_b, compared exactly on the computed values.
pub fn is_proper(rho: &[f64], m: &SwitchMove) -> bool {
    rho[m.a] >= rho[m.d] && rho[m.c] >= rho[m.b]
}

/// Exact identity: rho^T L(G) rho - rho^T L(G') rho for G' = sw(a,b,c,d)(G).
pub fn rayleigh_delta(rho: &[f64], m: &SwitchMove) -> f64 {
    2.0 * (rho[m.a] - rho[m.d]) * (rho[m.c] - rho[m.b])
}

/// The four tuple representations producing the same switched graph.
fn representations(a: usize, b: usize, c: usize, d: usize) -> [(usize, usize, usize, usize); 4] {
    [(a, b, c, d), (b, a, d, c), (c, d, a, b), (d, c, b, a)]
}

/// All proper switches available on g with respect to its Fiedler weighting.
///
/// Each switched graph is listed once, represented by the lexicographically
/// smallest proper tuple, with its predicted delta (always >= 0 for proper
/// moves). Sorted by delta descending, then lexicographically.
pub fn find_proper_switches(g: &Graph) -> Result<Vec<SwitchMove>, SwitchError> {
    let labeling = proper_labeling(g)?;
    Ok(proper_switches_for(g, &labeling.rho))
}

/// Same, against a caller-supplied weighting.
pub fn proper_switches_for(g: &Graph, rho: &[f64]) -> Vec<SwitchMove> {
    let edges = g.edges();
    let mut moves = Vec::new();
    for (i, &(u1, v1)) in edges.iter().enumerate() {
        for &(u2, v2) in &edges[i + 1..] {
            if u1 == u2 || u1 == v2 || v1 == u2 || v1 == v2 {
                continue;
            }
            // outcome A: remove u1v1, u2v2; add u1u2, v1v2
            if !g.has_edge(u1, u2) && !g.has_edge(v1, v2) {
                push_if_proper(rho, u1, v1, u2, v2, &mut moves);
            }
            // outcome B: remove u1v1, u2v2; add u1v2, v1u2
            if !g.has_edge(u1, v2) && !g.has_edge(v1, u2) {
                push_if_proper(rho, u1, v1, v2, u2, &mut moves);
            }
        }
    }
    moves.sort_by(|x, y| {
        y.predicted_delta
            .partial_cmp(&x.predicted_delta)
            .expect("deltas are finite")
            .then((x.a, x.b, x.c, x.d).cmp(&(y.a, y.b, y.c, y.d)))
    });
    moves
}

fn push_if_proper(
    rho: &[f64],
    a: usize,
    b: usize,
    c: usize,
    d: usize,
    moves: &mut Vec<SwitchMove>,
) {
    let mut best: Option<(usize, usize, usize, usize)> = None;
    for rep in representations(a, b, c, d) {
        let m = SwitchMove::new(rep.0, rep.1, rep.2, rep.3);
        if is_proper(rho, &m) && (best.is_none() || rep < best.unwrap()) {
            best = Some(rep);
        }
    }
    if let Some((a, b, c, d)) = best {
        let mut m = SwitchMove::new(a, b, c, d);
        m.predicted_delta = rayleigh_delta(rho, &m);
        moves.push(m);
    }
}

/// One applied step of the descent.
#[derive(Debug, Clone)]
pub struct TraceStep {
    pub step: usize,
    pub mv: SwitchMove,
    pub mu_before: f64,
    pub mu_after: f64,
}

/// Trace CSV: `step,a,b,c,d,delta,mu_before,mu_after`, 12 significant digits.
pub fn trace_csv(trace: &[TraceStep]) -> String {
    use crate::numfmt::fmt_sig;
    let mut s = String::from("step,a,b,c,d,delta,mu_before,mu_after\n");
    for t in trace {
        s.push_str(&format!(
            "{},{},{},{},{},{},{},{}\n",
            t.step,
            t.mv.a,
            t.mv.b,
            t.mv.c,
            t.mv.d,
            fmt_sig(t.mv.predicted_delta, 12),
            fmt_sig(t.mu_before, 12),
            fmt_sig(t.mu_after, 12),
        ));
    }
    s
}

const PLATEAU_MOVE_BUDGET: usize = 50;
const PLATEAU_BUDGET: usize = 20;
/// deltas above this count as strict improvements (the weighting is a unit
/// vector, so plateau moves sit at rounding scale many orders below)
const STRICT_DELTA: f64 = 1e-12;

/// Greedy mu-descent by proper switches.
///
/// Applies the proper switch of largest strictly positive predicted delta
/// whose application keeps the graph connected; on a plateau (only
/// zero-delta proper moves left) applies up to 50 randomized plateau moves
/// per plateau, at most 20 plateaus, then stops. mu is non-increasing along
/// the trace. With a degenerate Fiedler eigenvalue only strictly improving
/// moves are taken.
pub fn minimize_by_switching(
    g: &Graph,
    max_steps: usize,
    seed: u64,
) -> Result<(Graph, Vec<TraceStep>), SwitchError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut current = g.clone();
    let mut trace: Vec<TraceStep> = Vec::new();
    let mut plateaus_used = 0usize;
    let mut plateau_moves_left = PLATEAU_MOVE_BUDGET;
    let mut on_plateau = false;

    while trace.len() < max_steps {
        let labeling = proper_labeling(&current)?;
        let mu_before = labeling.report.mu;
        let moves = proper_switches_for(&current, &labeling.rho);

        // strict improvements first, largest delta whose result stays connected
        let mut applied = false;
        for mv in moves.iter().filter(|m| m.predicted_delta > STRICT_DELTA) {
            let candidate = elementary_move(&current, mv)?;
            if candidate.is_connected() {
                let mu_after = spectra::algebraic_connectivity(&candidate)?;
                trace.push(TraceStep {
                    step: trace.len(),
                    mv: *mv,
                    mu_before,
                    mu_after,
                });
                current = candidate;
                applied = true;
                if on_plateau {
                    on_plateau = false;
                    plateau_moves_left = PLATEAU_MOVE_BUDGET;
                }
                break;
            }
        }
        if applied {
            continue;
        }

        if labeling.report.degenerate_fiedler {
            // conservative policy in degenerate eigenspaces: no plateau moves
            break;
        }

        // plateau: pick a random zero-delta proper move that keeps connectivity
        if !on_plateau {
            if plateaus_used >= PLATEAU_BUDGET {
                break;
            }
            plateaus_used += 1;
            on_plateau = true;
        }
        if plateau_moves_left == 0 {
            break;
        }
        let mut flat: Vec<&SwitchMove> = moves
            .iter()
            .filter(|m| m.predicted_delta <= STRICT_DELTA)
            .collect();
        flat.shuffle(&mut rng);
        let mut moved = false;
        for mv in flat {
            let candidate = elementary_move(&current, mv)?;
            if candidate.is_connected() {
                let mu_after = spectra::algebraic_connectivity(&candidate)?;
                trace.push(TraceStep {
                    step: trace.len(),
                    mv: *mv,
                    mu_before,
                    mu_after,
                });
                current = candidate;
                plateau_moves_left -= 1;
                moved = true;
                break;
            }
        }
        if !moved {
            break;
        }
    }
    Ok((current, trace))
}
