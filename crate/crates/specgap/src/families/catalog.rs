//! Literal adjacency tables for the short quartic blocks and the bricks of
//! long blocks, transcribed once from the source figures.
//!
//! Vertex order within each template is figure reading order: left-to-right
//! columns, top before bottom. `cells` lists the columns in that order.
//! `left`/`right` are the degree-2 attachment vertices (cut vertices once
//! assembled); end blocks only have a right attachment in their unmirrored
//! (left-end) orientation.

/// A block template: adjacency plus column structure and attachment points.
#[derive(Debug, Clone)]
pub struct BlockTemplate {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    pub cells: Vec<Vec<usize>>,
    pub left: Option<usize>,
    pub right: Option<usize>,
}

impl BlockTemplate {
    /// Horizontal flip: reverses column order and swaps the attachment roles.
    /// The abstract graph is unchanged.
    pub fn mirrored(&self) -> BlockTemplate {
        let mut cells = self.cells.clone();
        cells.reverse();
        BlockTemplate {
            n: self.n,
            edges: self.edges.clone(),
            cells,
            left: self.right,
            right: self.left,
        }
    }
}

/// A brick template: a short block with one or both degree-2 vertices
/// removed, leaving "open sides" of two degree-3 vertices each, given as
/// (top, bottom).
#[derive(Debug, Clone)]
pub struct BrickTemplate {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    pub cells: Vec<Vec<usize>>,
    /// remaining degree-2 vertex on the left (unmirrored M' bricks)
    pub attach_left: Option<usize>,
    /// remaining degree-2 vertex on the right (mirrored M' bricks)
    pub attach_right: Option<usize>,
    pub open_left: Option<(usize, usize)>,
    pub open_right: Option<(usize, usize)>,
}

impl BrickTemplate {
    pub fn mirrored(&self) -> BrickTemplate {
        let mut cells = self.cells.clone();
        cells.reverse();
        BrickTemplate {
            n: self.n,
            edges: self.edges.clone(),
            cells,
            attach_left: self.attach_right,
            attach_right: self.attach_left,
            open_left: self.open_right,
            open_right: self.open_left,
        }
    }
}

fn tpl(
    n: usize,
    edges: &[(usize, usize)],
    cells: &[&[usize]],
    left: Option<usize>,
    right: Option<usize>,
) -> BlockTemplate {
    BlockTemplate {
        n,
        edges: edges.to_vec(),
        cells: cells.iter().map(|c| c.to_vec()).collect(),
        left,
        right,
    }
}

/// Middle block M: 7 vertices, 12 edges, degree-2 ends 0 and 6.
pub fn block_m() -> BlockTemplate {
    tpl(
        7,
        &[
            (0, 1), (0, 2), (1, 2), (1, 3), (1, 4), (2, 3),
            (2, 5), (3, 4), (3, 5), (4, 5), (4, 6), (5, 6),
        ],
        &[&[0], &[1, 2], &[3], &[4, 5], &[6]],
        Some(0),
        Some(6),
    )
}

/// Middle block M1: 6 vertices, 10 edges.
pub fn block_m1() -> BlockTemplate {
    tpl(
        6,
        &[
            (0, 1), (0, 2), (1, 2), (1, 3), (1, 4),
            (2, 3), (2, 4), (3, 4), (3, 5), (4, 5),
        ],
        &[&[0], &[1, 2], &[3, 4], &[5]],
        Some(0),
        Some(5),
    )
}

/// Middle block M2: 8 vertices, 14 edges.
pub fn block_m2() -> BlockTemplate {
    tpl(
        8,
        &[
            (0, 1), (0, 2), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4),
            (3, 5), (3, 6), (4, 5), (4, 6), (5, 6), (5, 7), (6, 7),
        ],
        &[&[0], &[1, 2], &[3, 4], &[5, 6], &[7]],
        Some(0),
        Some(7),
    )
}

/// Middle block M3: 9 vertices, 16 edges. Not mirror-symmetric as a column
/// sequence, hence its mirror appears separately in the structure theorem.
pub fn block_m3() -> BlockTemplate {
    tpl(
        9,
        &[
            (0, 1), (0, 2), (1, 2), (1, 3), (1, 4), (2, 3), (2, 5), (3, 4),
            (3, 5), (4, 6), (4, 7), (5, 6), (5, 7), (6, 7), (6, 8), (7, 8),
        ],
        &[&[0], &[1, 2], &[3], &[4, 5], &[6, 7], &[8]],
        Some(0),
        Some(8),
    )
}

/// End block D1: 7 vertices, 13 edges; leading K4 column of size 4.
pub fn block_d1() -> BlockTemplate {
    tpl(
        7,
        &[
            (0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 5),
            (2, 3), (2, 4), (3, 5), (4, 5), (4, 6), (5, 6),
        ],
        &[&[0, 1, 2, 3], &[4, 5], &[6]],
        None,
        Some(6),
    )
}

/// End block D2: 8 vertices, 15 edges.
pub fn block_d2() -> BlockTemplate {
    tpl(
        8,
        &[
            (0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3),
            (2, 5), (3, 6), (4, 5), (4, 6), (5, 6), (5, 7), (6, 7),
        ],
        &[&[0, 1], &[2, 3], &[4], &[5, 6], &[7]],
        None,
        Some(7),
    )
}

/// End block D3: 9 vertices, 17 edges.
pub fn block_d3() -> BlockTemplate {
    tpl(
        9,
        &[
            (0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 5), (2, 3), (2, 4),
            (3, 5), (4, 6), (4, 7), (5, 6), (5, 7), (6, 7), (6, 8), (7, 8),
        ],
        &[&[0, 1, 2, 3], &[4, 5], &[6, 7], &[8]],
        None,
        Some(8),
    )
}

/// End block D4: 6 vertices, 11 edges (K5 minus an edge plus an apex).
pub fn block_d4() -> BlockTemplate {
    tpl(
        6,
        &[
            (0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3),
            (1, 4), (2, 3), (2, 4), (3, 5), (4, 5),
        ],
        &[&[0], &[1, 2], &[3, 4], &[5]],
        None,
        Some(5),
    )
}

/// End block D5: 10 vertices, 19 edges. Equals the two-brick long end block
/// made of D4' and a mirrored M1' (asserted in tests).
pub fn block_d5() -> BlockTemplate {
    tpl(
        10,
        &[
            (0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4),
            (3, 5), (4, 6), (5, 6), (5, 7), (5, 8), (6, 7), (6, 8), (7, 8), (7, 9), (8, 9),
        ],
        &[&[0], &[1, 2], &[3, 4], &[5, 6], &[7, 8], &[9]],
        None,
        Some(9),
    )
}

fn brick(
    n: usize,
    edges: &[(usize, usize)],
    cells: &[&[usize]],
    attach_left: Option<usize>,
    open_left: Option<(usize, usize)>,
    open_right: Option<(usize, usize)>,
) -> BrickTemplate {
    BrickTemplate {
        n,
        edges: edges.to_vec(),
        cells: cells.iter().map(|c| c.to_vec()).collect(),
        attach_left,
        attach_right: None,
        open_left,
        open_right,
    }
}

/// M1' : M1 without its right degree-2 vertex.
pub fn brick_m1p() -> BrickTemplate {
    brick(
        5,
        &[
            (0, 1), (0, 2), (1, 2), (1, 3),
            (1, 4), (2, 3), (2, 4), (3, 4),
        ],
        &[&[0], &[1, 2], &[3, 4]],
        Some(0),
        None,
        Some((3, 4)),
    )
}

/// M2' : M2 without its right degree-2 vertex.
pub fn brick_m2p() -> BrickTemplate {
    brick(
        7,
        &[
            (0, 1), (0, 2), (1, 2), (1, 3), (1, 4), (2, 3),
            (2, 4), (3, 5), (3, 6), (4, 5), (4, 6), (5, 6),
        ],
        &[&[0], &[1, 2], &[3, 4], &[5, 6]],
        Some(0),
        None,
        Some((5, 6)),
    )
}

/// M3' : M3 without its right degree-2 vertex.
pub fn brick_m3p() -> BrickTemplate {
    brick(
        8,
        &[
            (0, 1), (0, 2), (1, 2), (1, 3), (1, 4), (2, 3), (2, 5),
            (3, 4), (3, 5), (4, 6), (4, 7), (5, 6), (5, 7), (6, 7),
        ],
        &[&[0], &[1, 2], &[3], &[4, 5], &[6, 7]],
        Some(0),
        None,
        Some((6, 7)),
    )
}

/// M1'' : M1 without both degree-2 vertices (a K4).
pub fn brick_m1pp() -> BrickTemplate {
    brick(
        4,
        &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
        &[&[0, 1], &[2, 3]],
        None,
        Some((0, 1)),
        Some((2, 3)),
    )
}

/// M2'' : M2 without both degree-2 vertices.
pub fn brick_m2pp() -> BrickTemplate {
    brick(
        6,
        &[
            (0, 1), (0, 2), (0, 3), (1, 2), (1, 3),
            (2, 4), (2, 5), (3, 4), (3, 5), (4, 5),
        ],
        &[&[0, 1], &[2, 3], &[4, 5]],
        None,
        Some((0, 1)),
        Some((4, 5)),
    )
}

/// D3' : D3 without its degree-2 vertex.
pub fn brick_d3p() -> BrickTemplate {
    brick(
        8,
        &[
            (0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 5), (2, 3),
            (2, 4), (3, 5), (4, 6), (4, 7), (5, 6), (5, 7), (6, 7),
        ],
        &[&[0, 1, 2, 3], &[4, 5], &[6, 7]],
        None,
        None,
        Some((6, 7)),
    )
}

/// D4' : D4 without its degree-2 vertex (K5 minus an edge).
pub fn brick_d4p() -> BrickTemplate {
    brick(
        5,
        &[
            (0, 1), (0, 2), (0, 3), (0, 4), (1, 2),
            (1, 3), (1, 4), (2, 3), (2, 4),
        ],
        &[&[0, 1, 2], &[3, 4]],
        None,
        None,
        Some((3, 4)),
    )
}
