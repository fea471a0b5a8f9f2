//! Canonical labeling by iterated color refinement plus backtracking over
//! the first non-singleton cell, pruning against the best code found so far.
//!
//! The canonical form is the graph6 encoding of the relabeled graph whose
//! upper-triangle bit string is lexicographically smallest. Equal canonical
//! forms iff isomorphic. Intended for the small orders used here (n up to a
//! few dozen); enumeration calls it on every generated leaf.

use super::Graph;

/// Ordered partition of the vertex set into cells.
#[derive(Clone)]
struct Coloring {
    /// cell index per vertex
    color: Vec<usize>,
    /// number of cells
    cells: usize,
}

fn initial_coloring(g: &Graph) -> Coloring {
    // group by degree, ascending
    let n = g.n();
    let mut degs: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut uniq: Vec<usize> = degs.clone();
    uniq.sort_unstable();
    uniq.dedup();
    let color: Vec<usize> = degs
        .drain(..)
        .map(|d| uniq.binary_search(&d).unwrap())
        .collect();
    Coloring {
        color,
        cells: uniq.len(),
    }
}

/// Refine until equitable: split cells by the multiset of neighbor colors.
fn refine(g: &Graph, c: &mut Coloring) {
    let n = g.n();
    loop {
        // signature per vertex: counts of neighbors in each cell
        let mut sig: Vec<Vec<usize>> = vec![vec![0; c.cells]; n];
        for v in 0..n {
            for &w in g.neighbors(v) {
                sig[v][c.color[w]] += 1;
            }
        }
        // within each cell, order vertices by signature; assign new colors so
        // that cell order is (old color, signature) lexicographic
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| (c.color[a], &sig[a]).cmp(&(c.color[b], &sig[b])));
        let mut new_color = vec![0usize; n];
        let mut cells = 0usize;
        for i in 0..n {
            if i > 0 {
                let (a, b) = (order[i - 1], order[i]);
                if (c.color[a], &sig[a]) != (c.color[b], &sig[b]) {
                    cells += 1;
                }
            }
            new_color[order[i]] = cells;
        }
        cells += 1;
        if cells == c.cells {
            return;
        }
        c.color = new_color;
        c.cells = cells;
    }
}

/// Upper-triangle bit code of g under the labeling `perm` (perm[new] = old),
/// in graph6 bit order, packed into bytes MSB-first.
fn code_under(g: &Graph, perm: &[usize]) -> Vec<u8> {
    let n = perm.len();
    let nbits = n * n.saturating_sub(1) / 2;
    let mut out = vec![0u8; nbits.div_ceil(8)];
    let mut bit = 0usize;
    for j in 1..n {
        for i in 0..j {
            if g.has_edge(perm[i], perm[j]) {
                out[bit / 8] |= 0x80 >> (bit % 8);
            }
            bit += 1;
        }
    }
    out
}

struct Search<'a> {
    g: &'a Graph,
    best_code: Option<Vec<u8>>,
    best_perm: Vec<usize>,
}

impl<'a> Search<'a> {
    fn descend(&mut self, c: Coloring) {
        let n = self.g.n();
        // find first non-singleton cell
        let mut count = vec![0usize; c.cells];
        for &col in &c.color {
            count[col] += 1;
        }
        let target = (0..c.cells).find(|&i| count[i] > 1);
        match target {
            None => {
                // discrete: vertices ordered by color
                let mut perm = vec![0usize; n];
                for (v, &col) in c.color.iter().enumerate() {
                    perm[col] = v;
                }
                let code = code_under(self.g, &perm);
                let better = match &self.best_code {
                    None => true,
                    Some(b) => code < *b,
                };
                if better {
                    self.best_code = Some(code);
                    self.best_perm = perm;
                }
            }
            Some(cell) => {
                let members: Vec<usize> =
                    (0..n).filter(|&v| c.color[v] == cell).collect();
                for v in members {
                    // individualize v: give it its own cell just before its cell
                    let mut child = c.clone();
                    for w in 0..n {
                        if child.color[w] >= cell && w != v {
                            child.color[w] += 1;
                        }
                    }
                    child.cells += 1;
                    refine(self.g, &mut child);
                    self.descend(child);
                }
            }
        }
    }
}

pub fn canonical_labeling(g: &Graph) -> Vec<usize> {
    let n = g.n();
    if n == 0 {
        return vec![];
    }
    let mut c = initial_coloring(g);
    refine(g, &mut c);
    let mut s = Search {
        g,
        best_code: None,
        best_perm: (0..n).collect(),
    };
    s.descend(c);
    s.best_perm
}

pub fn canonical_form(g: &Graph) -> Vec<u8> {
    let perm = canonical_labeling(g);
    g.relabel(&perm).to_graph6().into_bytes()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::are_isomorphic;

    #[test]
    fn cycle_relabelings_agree() {
        let c5a = Graph::cycle(5);
        let c5b = Graph::new(5, &[(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)]).unwrap();
        assert!(are_isomorphic(&c5a, &c5b));
    }

    #[test]
    fn k5_vs_c5_differ() {
        assert!(!are_isomorphic(&Graph::complete(5), &Graph::cycle(5)));
    }

    #[test]
    fn path_vs_star_differ() {
        let p4 = Graph::path(4);
        let star = Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(!are_isomorphic(&p4, &star));
    }

    #[test]
    fn invariance_under_permutation() {
        // deterministic scrambles of the Petersen graph
        let petersen = Graph::new(
            10,
            &[
                (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
                (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
                (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
            ],
        )
        .unwrap();
        let base = petersen.canonical_form();
        let mut perm: Vec<usize> = (0..10).collect();
        for shift in 1..10 {
            perm.rotate_left(shift);
            assert_eq!(petersen.relabel(&perm).canonical_form(), base);
        }
    }
}
