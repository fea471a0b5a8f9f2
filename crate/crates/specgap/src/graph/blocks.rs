//! Block-cut decomposition (lowpoint algorithm, iterative DFS).

use super::{Graph, GraphError};

/// Blocks (maximal 2-connected subgraphs; bridges appear as 2-vertex blocks),
/// cut vertices, and whether the block-cut tree is a path.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    pub blocks: Vec<Vec<usize>>,
    pub cut_vertices: Vec<usize>,
    pub block_tree_is_path: bool,
}

impl BlockDecomposition {
    /// Blocks with at least 3 vertices (equivalently, containing a cycle).
    pub fn nontrivial_blocks(&self) -> Vec<&Vec<usize>> {
        self.blocks.iter().filter(|b| b.len() > 2).collect()
    }

    /// 2-vertex blocks, i.e. bridges.
    pub fn bridges(&self) -> Vec<&Vec<usize>> {
        self.blocks.iter().filter(|b| b.len() == 2).collect()
    }
}

pub fn block_decomposition(g: &Graph) -> Result<BlockDecomposition, GraphError> {
    if !g.is_connected() {
        return Err(GraphError::Disconnected);
    }
    let n = g.n();
    if n == 1 {
        return Ok(BlockDecomposition {
            blocks: vec![vec![0]],
            cut_vertices: vec![],
            block_tree_is_path: true,
        });
    }

    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut parent = vec![usize::MAX; n];
    let mut cursor = vec![0usize; n];
    let mut is_cut = vec![false; n];
    let mut timer = 0usize;
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut blocks_edges: Vec<Vec<(usize, usize)>> = Vec::new();

    let root = 0usize;
    let mut root_children = 0usize;
    disc[root] = timer;
    low[root] = timer;
    timer += 1;
    let mut stack = vec![root];

    while let Some(&u) = stack.last() {
        if cursor[u] < g.degree(u) {
            let v = g.neighbors(u)[cursor[u]];
            cursor[u] += 1;
            if disc[v] == usize::MAX {
                parent[v] = u;
                if u == root {
                    root_children += 1;
                }
                edge_stack.push((u, v));
                disc[v] = timer;
                low[v] = timer;
                timer += 1;
                stack.push(v);
            } else if v != parent[u] && disc[v] < disc[u] {
                // back edge, recorded once
                edge_stack.push((u, v));
                low[u] = low[u].min(disc[v]);
            }
        } else {
            stack.pop();
            if let Some(&p) = stack.last() {
                low[p] = low[p].min(low[u]);
                if low[u] >= disc[p] {
                    // p separates: pop the block rooted at edge (p, u).
                    // Root cut status is finalized after the loop.
                    if p != root {
                        is_cut[p] = true;
                    }
                    let mut comp = Vec::new();
                    while let Some(&e) = edge_stack.last() {
                        edge_stack.pop();
                        comp.push(e);
                        if e == (p, u) {
                            break;
                        }
                    }
                    blocks_edges.push(comp);
                }
            }
        }
    }
    if root_children > 1 {
        is_cut[root] = true;
    }

    // blocks as sorted vertex sets
    let mut blocks: Vec<Vec<usize>> = Vec::with_capacity(blocks_edges.len());
    let mut mark = vec![usize::MAX; n];
    for (i, comp) in blocks_edges.iter().enumerate() {
        let mut verts = Vec::new();
        for &(a, b) in comp {
            for w in [a, b] {
                if mark[w] != i {
                    mark[w] = i;
                    verts.push(w);
                }
            }
        }
        verts.sort_unstable();
        blocks.push(verts);
    }
    blocks.sort();

    let cut_vertices: Vec<usize> = (0..n).filter(|&v| is_cut[v]).collect();

    // path test: every cut vertex in exactly 2 blocks, every block with <= 2 cut vertices
    let mut blocks_per_cut = vec![0usize; n];
    let mut path = true;
    for b in &blocks {
        let mut cuts_here = 0;
        for &v in b {
            if is_cut[v] {
                cuts_here += 1;
                blocks_per_cut[v] += 1;
            }
        }
        if cuts_here > 2 {
            path = false;
        }
    }
    for &v in &cut_vertices {
        if blocks_per_cut[v] != 2 {
            path = false;
        }
    }

    Ok(BlockDecomposition {
        blocks,
        cut_vertices,
        block_tree_is_path: path,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_graph_single_block() {
        let d = Graph::complete(5).block_decomposition().unwrap();
        assert_eq!(d.blocks.len(), 1);
        assert!(d.cut_vertices.is_empty());
        assert!(d.block_tree_is_path);
    }

    #[test]
    fn path_graph_all_bridges() {
        let d = Graph::path(5).block_decomposition().unwrap();
        assert_eq!(d.blocks.len(), 4);
        assert_eq!(d.bridges().len(), 4);
        assert_eq!(d.cut_vertices, vec![1, 2, 3]);
        assert!(d.block_tree_is_path);
    }

    #[test]
    fn star_is_not_a_path_tree() {
        let g = Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let d = g.block_decomposition().unwrap();
        assert_eq!(d.blocks.len(), 3);
        assert_eq!(d.cut_vertices, vec![0]);
        assert!(!d.block_tree_is_path);
    }

    #[test]
    fn two_triangles_sharing_a_vertex() {
        let g = Graph::new(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]).unwrap();
        let d = g.block_decomposition().unwrap();
        assert_eq!(d.blocks.len(), 2);
        assert_eq!(d.cut_vertices, vec![2]);
        assert!(d.block_tree_is_path);
    }

    #[test]
    fn edge_partition_is_exact() {
        let g = Graph::new(
            7,
            &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3), (5, 6)],
        )
        .unwrap();
        let d = g.block_decomposition().unwrap();
        let total: usize = d
            .blocks
            .iter()
            .map(|b| g.induced(b).edge_count())
            .sum();
        assert_eq!(total, g.edge_count());
    }

    #[test]
    fn disconnected_rejected() {
        let g = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(g.block_decomposition().unwrap_err(), GraphError::Disconnected);
    }
}
