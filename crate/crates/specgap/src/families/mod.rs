//! Constructors for the extremal graph families: the cubic minimizers G_n and
//! their companions H_{n+2}, the quartic short blocks and long-block grammar,
//! path-like assemblies, the small quartic minimizers, and the conjectured
//! quartic minimizer for every n >= 11. Also builds the cosine test vector
//! and the column cell partitions used by the quotient module.

mod catalog;

use crate::graph::Graph;
use crate::quotient::Partition;
use catalog::{BlockTemplate, BrickTemplate};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamiliesError {
    #[error("bad order: {0}")]
    BadOrder(String),
    #[error("grammar violation: {0}")]
    GrammarViolation(String),
    #[error("unknown family: {0}")]
    UnknownFamily(String),
}

impl FamiliesError {
    pub fn name(&self) -> &'static str {
        match self {
            FamiliesError::BadOrder(_) => "BadOrder",
            FamiliesError::GrammarViolation(_) => "GrammarViolation",
            FamiliesError::UnknownFamily(_) => "UnknownFamily",
        }
    }
}

/// The short quartic blocks of the structure theorem (plus D5).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ShortKind {
    M,
    M1,
    M2,
    M3,
    D1,
    D2,
    D3,
    D4,
    D5,
}

impl ShortKind {
    pub const ALL: [ShortKind; 9] = [
        ShortKind::M,
        ShortKind::M1,
        ShortKind::M2,
        ShortKind::M3,
        ShortKind::D1,
        ShortKind::D2,
        ShortKind::D3,
        ShortKind::D4,
        ShortKind::D5,
    ];

    pub const MIDDLES: [ShortKind; 4] = [ShortKind::M, ShortKind::M1, ShortKind::M2, ShortKind::M3];
    pub const ENDS: [ShortKind; 5] = [
        ShortKind::D1,
        ShortKind::D2,
        ShortKind::D3,
        ShortKind::D4,
        ShortKind::D5,
    ];

    pub fn is_middle(self) -> bool {
        matches!(self, ShortKind::M | ShortKind::M1 | ShortKind::M2 | ShortKind::M3)
    }

    pub fn name(self) -> &'static str {
        match self {
            ShortKind::M => "M",
            ShortKind::M1 => "M1",
            ShortKind::M2 => "M2",
            ShortKind::M3 => "M3",
            ShortKind::D1 => "D1",
            ShortKind::D2 => "D2",
            ShortKind::D3 => "D3",
            ShortKind::D4 => "D4",
            ShortKind::D5 => "D5",
        }
    }
}

impl std::str::FromStr for ShortKind {
    type Err = FamiliesError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "m" => Ok(ShortKind::M),
            "m1" => Ok(ShortKind::M1),
            "m2" => Ok(ShortKind::M2),
            "m3" => Ok(ShortKind::M3),
            "d1" => Ok(ShortKind::D1),
            "d2" => Ok(ShortKind::D2),
            "d3" => Ok(ShortKind::D3),
            "d4" => Ok(ShortKind::D4),
            "d5" => Ok(ShortKind::D5),
            other => Err(FamiliesError::UnknownFamily(format!(
                "unknown short block `{other}`"
            ))),
        }
    }
}

/// Bricks of long blocks: primes have one open side, double primes two.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BrickKind {
    M1p,
    M2p,
    M3p,
    M1pp,
    M2pp,
    D3p,
    D4p,
}

impl BrickKind {
    pub fn name(self) -> &'static str {
        match self {
            BrickKind::M1p => "M1'",
            BrickKind::M2p => "M2'",
            BrickKind::M3p => "M3'",
            BrickKind::M1pp => "M1''",
            BrickKind::M2pp => "M2''",
            BrickKind::D3p => "D3'",
            BrickKind::D4p => "D4'",
        }
    }
}

impl std::str::FromStr for BrickKind {
    type Err = FamiliesError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "m1p" | "m1'" => Ok(BrickKind::M1p),
            "m2p" | "m2'" => Ok(BrickKind::M2p),
            "m3p" | "m3'" => Ok(BrickKind::M3p),
            "m1pp" | "m1''" => Ok(BrickKind::M1pp),
            "m2pp" | "m2''" => Ok(BrickKind::M2pp),
            "d3p" | "d3'" => Ok(BrickKind::D3p),
            "d4p" | "d4'" => Ok(BrickKind::D4p),
            other => Err(FamiliesError::UnknownFamily(format!(
                "unknown brick `{other}`"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BrickSpec {
    pub kind: BrickKind,
    pub mirrored: bool,
}

impl BrickSpec {
    pub fn new(kind: BrickKind) -> BrickSpec {
        BrickSpec {
            kind,
            mirrored: false,
        }
    }

    pub fn mirrored(kind: BrickKind) -> BrickSpec {
        BrickSpec {
            kind,
            mirrored: true,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LongFlavor {
    End,
    Middle,
    Complete,
}

impl LongFlavor {
    pub fn name(self) -> &'static str {
        match self {
            LongFlavor::End => "end",
            LongFlavor::Middle => "middle",
            LongFlavor::Complete => "complete",
        }
    }
}

impl std::str::FromStr for LongFlavor {
    type Err = FamiliesError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "end" => Ok(LongFlavor::End),
            "middle" => Ok(LongFlavor::Middle),
            "complete" => Ok(LongFlavor::Complete),
            other => Err(FamiliesError::UnknownFamily(format!(
                "unknown long-block flavor `{other}`"
            ))),
        }
    }
}

/// One block of a path-like assembly: a short block or a long block, possibly
/// mirrored (mirroring matters for the asymmetric M3 and for end blocks used
/// on the right side).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum BlockKind {
    Short(ShortKind),
    Long {
        bricks: Vec<BrickSpec>,
        flavor: LongFlavor,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BlockSpec {
    pub kind: BlockKind,
    pub mirrored: bool,
}

impl BlockSpec {
    pub fn short(kind: ShortKind) -> BlockSpec {
        BlockSpec {
            kind: BlockKind::Short(kind),
            mirrored: false,
        }
    }

    pub fn short_mirrored(kind: ShortKind) -> BlockSpec {
        BlockSpec {
            kind: BlockKind::Short(kind),
            mirrored: true,
        }
    }
}

/// Ordered block list describing a path-like quartic graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PathLikeSpec {
    pub blocks: Vec<BlockSpec>,
}

/// Hints telling `cell_partition` which constructor produced a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilyHint {
    CubicGn,
    CubicH,
    QuarticMin,
    PathLike(PathLikeSpec),
    Long {
        bricks: Vec<BrickSpec>,
        flavor: LongFlavor,
    },
}

fn short_template(kind: ShortKind) -> BlockTemplate {
    match kind {
        ShortKind::M => catalog::block_m(),
        ShortKind::M1 => catalog::block_m1(),
        ShortKind::M2 => catalog::block_m2(),
        ShortKind::M3 => catalog::block_m3(),
        ShortKind::D1 => catalog::block_d1(),
        ShortKind::D2 => catalog::block_d2(),
        ShortKind::D3 => catalog::block_d3(),
        ShortKind::D4 => catalog::block_d4(),
        ShortKind::D5 => catalog::block_d5(),
    }
}

fn brick_template(kind: BrickKind) -> BrickTemplate {
    match kind {
        BrickKind::M1p => catalog::brick_m1p(),
        BrickKind::M2p => catalog::brick_m2p(),
        BrickKind::M3p => catalog::brick_m3p(),
        BrickKind::M1pp => catalog::brick_m1pp(),
        BrickKind::M2pp => catalog::brick_m2pp(),
        BrickKind::D3p => catalog::brick_d3p(),
        BrickKind::D4p => catalog::brick_d4p(),
    }
}

/// The short block as a standalone graph, vertices in figure reading order.
pub fn short_block(kind: ShortKind, mirrored: bool) -> Graph {
    let t = short_template(kind);
    let t = if mirrored { t.mirrored() } else { t };
    Graph::new(t.n, &t.edges).expect("catalog templates are valid")
}

/// Column cells of a standalone short block, left to right.
pub fn short_block_cells(kind: ShortKind, mirrored: bool) -> Vec<Vec<usize>> {
    let t = short_template(kind);
    let t = if mirrored { t.mirrored() } else { t };
    t.cells
}

/// The brick as a standalone graph (open sides left dangling at degree 3).
pub fn brick(kind: BrickKind) -> Graph {
    let t = brick_template(kind);
    Graph::new(t.n, &t.edges).expect("catalog templates are valid")
}

fn is_prime(kind: BrickKind) -> bool {
    matches!(kind, BrickKind::M1p | BrickKind::M2p | BrickKind::M3p)
}

fn is_double_prime(kind: BrickKind) -> bool {
    matches!(kind, BrickKind::M1pp | BrickKind::M2pp)
}

fn is_d_prime(kind: BrickKind) -> bool {
    matches!(kind, BrickKind::D3p | BrickKind::D4p)
}

fn validate_long(bricks: &[BrickSpec], flavor: LongFlavor) -> Result<(), FamiliesError> {
    let fail = |msg: String| Err(FamiliesError::GrammarViolation(msg));
    if bricks.len() < 2 {
        return fail(format!(
            "a long block needs at least 2 bricks, got {}",
            bricks.len()
        ));
    }
    let first = bricks[0];
    let last = bricks[bricks.len() - 1];
    match flavor {
        LongFlavor::End | LongFlavor::Complete => {
            if !is_d_prime(first.kind) || first.mirrored {
                return fail(format!(
                    "{} long block must start with un-mirrored D3' or D4', got {}{}",
                    flavor.name(),
                    if first.mirrored { "~" } else { "" },
                    first.kind.name()
                ));
            }
        }
        LongFlavor::Middle => {
            if !is_prime(first.kind) || first.mirrored {
                return fail(format!(
                    "middle long block must start with un-mirrored M1', M2' or M3', got {}{}",
                    if first.mirrored { "~" } else { "" },
                    first.kind.name()
                ));
            }
        }
    }
    for b in &bricks[1..bricks.len() - 1] {
        if !is_double_prime(b.kind) {
            return fail(format!(
                "interior bricks must be M1'' or M2'', got {}",
                b.kind.name()
            ));
        }
    }
    match flavor {
        LongFlavor::End | LongFlavor::Middle => {
            if !is_prime(last.kind) || !last.mirrored {
                return fail(format!(
                    "{} long block must finish with mirrored M1', M2' or M3', got {}{}",
                    flavor.name(),
                    if last.mirrored { "~" } else { "" },
                    last.kind.name()
                ));
            }
        }
        LongFlavor::Complete => {
            if !is_d_prime(last.kind) || !last.mirrored {
                return fail(format!(
                    "complete long block must finish with mirrored D3' or D4', got {}{}",
                    if last.mirrored { "~" } else { "" },
                    last.kind.name()
                ));
            }
        }
    }
    Ok(())
}

/// Build a long block's template: bricks chained left to right, consecutive
/// open sides joined by two straight edges (top to top, bottom to bottom).
fn long_template(bricks: &[BrickSpec], flavor: LongFlavor) -> Result<BlockTemplate, FamiliesError> {
    validate_long(bricks, flavor)?;
    let mut n = 0usize;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut cells: Vec<Vec<usize>> = Vec::new();
    let mut left = None;
    let mut right = None;
    let mut prev_open: Option<(usize, usize)> = None;
    let count = bricks.len();
    for (i, spec) in bricks.iter().enumerate() {
        let t = brick_template(spec.kind);
        let t = if spec.mirrored { t.mirrored() } else { t };
        // fresh ids in reading order
        let mut map = vec![usize::MAX; t.n];
        for cell in &t.cells {
            for &v in cell {
                map[v] = n;
                n += 1;
            }
        }
        for &(a, b) in &t.edges {
            edges.push((map[a], map[b]));
        }
        for cell in &t.cells {
            cells.push(cell.iter().map(|&v| map[v]).collect());
        }
        if i == 0 {
            left = t.attach_left.map(|v| map[v]);
        }
        if i + 1 == count {
            right = t.attach_right.map(|v| map[v]);
        }
        if let Some((pt, pb)) = prev_open {
            let (lt, lb) = t
                .open_left
                .expect("grammar guarantees an open left side on non-first bricks");
            edges.push((pt, map[lt]));
            edges.push((pb, map[lb]));
        }
        prev_open = t.open_right.map(|(a, b)| (map[a], map[b]));
    }
    Ok(BlockTemplate {
        n,
        edges,
        cells,
        left,
        right,
    })
}

/// A long block as a standalone graph.
pub fn long_block(bricks: &[BrickSpec], flavor: LongFlavor) -> Result<Graph, FamiliesError> {
    let t = long_template(bricks, flavor)?;
    Ok(Graph::new(t.n, &t.edges).expect("long template is valid"))
}

fn resolve_block(spec: &BlockSpec) -> Result<BlockTemplate, FamiliesError> {
    let t = match &spec.kind {
        BlockKind::Short(k) => short_template(*k),
        BlockKind::Long { bricks, flavor } => long_template(bricks, *flavor)?,
    };
    Ok(if spec.mirrored { t.mirrored() } else { t })
}

/// Glue blocks left to right, identifying the right degree-2 vertex of each
/// block with the left degree-2 vertex of the next (the cut vertices).
/// Returns the graph and its column cells.
pub fn assemble_path_like_with_cells(
    spec: &PathLikeSpec,
) -> Result<(Graph, Partition), FamiliesError> {
    let fail = |msg: String| Err(FamiliesError::GrammarViolation(msg));
    if spec.blocks.len() < 2 {
        return fail("a path-like assembly needs at least 2 blocks".to_string());
    }
    let templates: Vec<BlockTemplate> = spec
        .blocks
        .iter()
        .map(resolve_block)
        .collect::<Result<_, _>>()?;
    let last = templates.len() - 1;
    for (i, t) in templates.iter().enumerate() {
        let want_left = i > 0;
        let want_right = i < last;
        if (t.left.is_some() != want_left) || (t.right.is_some() != want_right) {
            return fail(format!(
                "block {} must be {} (degree-2 vertices on {})",
                i,
                if want_left && want_right {
                    "a middle block"
                } else if want_right {
                    "a left end block"
                } else {
                    "a right end block (mirrored)"
                },
                match (want_left, want_right) {
                    (true, true) => "both sides",
                    (false, true) => "the right only",
                    (true, false) => "the left only",
                    (false, false) => "neither side",
                }
            ));
        }
    }

    let mut n = 0usize;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut cells: Vec<Vec<usize>> = Vec::new();
    let mut prev_right: Option<usize> = None;
    for t in &templates {
        let mut map = vec![usize::MAX; t.n];
        let mut cell_iter = t.cells.iter();
        if let Some(shared) = prev_right {
            // first cell is the singleton left-attach vertex, glued onto the
            // previous block's right attach
            let first = cell_iter.next().expect("templates have cells");
            debug_assert_eq!(first.len(), 1);
            debug_assert_eq!(Some(first[0]), t.left);
            map[first[0]] = shared;
        }
        for cell in cell_iter.clone() {
            for &v in cell {
                map[v] = n;
                n += 1;
            }
        }
        for cell in cell_iter {
            cells.push(cell.iter().map(|&v| map[v]).collect());
        }
        for &(a, b) in &t.edges {
            edges.push((map[a], map[b]));
        }
        prev_right = t.right.map(|v| map[v]);
    }

    let g = Graph::new(n, &edges).expect("assembly produces a simple graph");
    debug_assert!(g.is_connected());
    debug_assert_eq!(g.degree_profile(), (4, 4, Some(4)));
    Ok((g, Partition::new(cells)))
}

pub fn assemble_path_like(spec: &PathLikeSpec) -> Result<Graph, FamiliesError> {
    Ok(assemble_path_like_with_cells(spec)?.0)
}

/// The cubic minimizer G_n (n even, n >= 10), vertices in reading order,
/// together with its column cells.
pub fn cubic_gn_with_cells(n: usize) -> Result<(Graph, Partition), FamiliesError> {
    if n < 10 || n % 2 != 0 {
        return Err(FamiliesError::BadOrder(format!(
            "cubic G_n is defined for even n >= 10, got {n}"
        )));
    }
    let long_right = n % 4 == 0;
    let m = if long_right { (n - 12) / 4 } else { (n - 10) / 4 };

    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut cells: Vec<Vec<usize>> = Vec::new();

    // left end block: joined column, K_{2,2} to a split column, apex
    edges.extend_from_slice(&[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 4), (3, 4)]);
    cells.extend_from_slice(&[vec![0, 1], vec![2, 3], vec![4]]);
    let mut attach = 4usize; // vertex that takes the next bridge
    let mut next = 5usize;

    for _ in 0..m {
        let (l, t, b, r) = (next, next + 1, next + 2, next + 3);
        edges.push((attach, l));
        edges.extend_from_slice(&[(l, t), (l, b), (t, b), (t, r), (b, r)]);
        cells.extend_from_slice(&[vec![l], vec![t, b], vec![r]]);
        attach = r;
        next += 4;
    }

    if long_right {
        // 7-vertex right end: triangle, two stems, split column, joined column
        let (t0, u, v, w, x, y, z) = (
            next,
            next + 1,
            next + 2,
            next + 3,
            next + 4,
            next + 5,
            next + 6,
        );
        edges.push((attach, t0));
        edges.extend_from_slice(&[
            (t0, u),
            (t0, v),
            (u, v),
            (u, w),
            (v, x),
            (w, y),
            (w, z),
            (x, y),
            (x, z),
            (y, z),
        ]);
        cells.extend_from_slice(&[vec![t0], vec![u, v], vec![w, x], vec![y, z]]);
        next += 7;
    } else {
        // 5-vertex right end: apex, split column, joined column
        let (a, b, c, d, e) = (next, next + 1, next + 2, next + 3, next + 4);
        edges.push((attach, a));
        edges.extend_from_slice(&[(a, b), (a, c), (b, d), (b, e), (c, d), (c, e), (d, e)]);
        cells.extend_from_slice(&[vec![a], vec![b, c], vec![d, e]]);
        next += 5;
    }
    debug_assert_eq!(next, n);

    let g = Graph::new(n, &edges).expect("G_n construction is valid");
    debug_assert!(g.is_connected());
    debug_assert_eq!(g.degree_profile(), (3, 3, Some(3)));
    Ok((g, Partition::new(cells)))
}

pub fn cubic_gn(n: usize) -> Result<Graph, FamiliesError> {
    Ok(cubic_gn_with_cells(n)?.0)
}

/// The enlarged companion H_{n+2} of G_n for n divisible by 4 (n >= 12): the
/// 5-vertex left end block grows to 7 vertices; the graph has n + 2 vertices.
pub fn cubic_h_with_cells(n: usize) -> Result<(Graph, Partition), FamiliesError> {
    if n < 12 || n % 4 != 0 {
        return Err(FamiliesError::BadOrder(format!(
            "cubic H_(n+2) is defined for n divisible by 4, n >= 12, got {n}"
        )));
    }
    let m = (n - 12) / 4;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut cells: Vec<Vec<usize>> = Vec::new();

    // 7-vertex left end block: joined column, split column, joined column, apex
    edges.extend_from_slice(&[
        (0, 1),
        (0, 2),
        (0, 3),
        (1, 2),
        (1, 3),
        (2, 4),
        (3, 5),
        (4, 5),
        (4, 6),
        (5, 6),
    ]);
    cells.extend_from_slice(&[vec![0, 1], vec![2, 3], vec![4, 5], vec![6]]);
    let mut attach = 6usize;
    let mut next = 7usize;

    for _ in 0..m {
        let (l, t, b, r) = (next, next + 1, next + 2, next + 3);
        edges.push((attach, l));
        edges.extend_from_slice(&[(l, t), (l, b), (t, b), (t, r), (b, r)]);
        cells.extend_from_slice(&[vec![l], vec![t, b], vec![r]]);
        attach = r;
        next += 4;
    }

    let (t0, u, v, w, x, y, z) = (
        next,
        next + 1,
        next + 2,
        next + 3,
        next + 4,
        next + 5,
        next + 6,
    );
    edges.push((attach, t0));
    edges.extend_from_slice(&[
        (t0, u),
        (t0, v),
        (u, v),
        (u, w),
        (v, x),
        (w, y),
        (w, z),
        (x, y),
        (x, z),
        (y, z),
    ]);
    cells.extend_from_slice(&[vec![t0], vec![u, v], vec![w, x], vec![y, z]]);
    next += 7;
    debug_assert_eq!(next, n + 2);

    let g = Graph::new(n + 2, &edges).expect("H construction is valid");
    debug_assert!(g.is_connected());
    debug_assert_eq!(g.degree_profile(), (3, 3, Some(3)));
    Ok((g, Partition::new(cells)))
}

pub fn cubic_h(n: usize) -> Result<Graph, FamiliesError> {
    Ok(cubic_h_with_cells(n)?.0)
}

/// The skew-symmetric cosine test weighting on G_n, n = 4m + 10: end-block
/// vertices carry the first (resp. last) cosine value, diamond middles carry
/// the average of their flanking values.
pub fn cosine_test_vector(n: usize) -> Result<Vec<f64>, FamiliesError> {
    if n < 14 || n % 4 != 2 {
        return Err(FamiliesError::BadOrder(format!(
            "cosine test vector needs n = 4m + 10 with m >= 1, got {n}"
        )));
    }
    let m = (n - 10) / 4;
    let x = |j: usize| -> f64 {
        // j in 1..=2m
        ((2 * j - 1) as f64 * std::f64::consts::PI / (4 * m) as f64).cos()
    };
    let mut w = vec![0.0f64; n];
    for v in w.iter_mut().take(5) {
        *v = x(1);
    }
    for i in 0..m {
        let base = 5 + 4 * i;
        let (lo, hi) = (x(2 * i + 1), x(2 * i + 2));
        w[base] = lo;
        w[base + 1] = 0.5 * (lo + hi);
        w[base + 2] = 0.5 * (lo + hi);
        w[base + 3] = hi;
    }
    for v in w.iter_mut().skip(5 + 4 * m) {
        *v = x(2 * m);
    }
    Ok(w)
}

/// The quartic minimizers on 5..=10 vertices. n = 8 returns both candidate
/// graphs; which one attains the minimum is decided numerically by the
/// search module, never assumed.
pub fn small_quartic_min(n: usize) -> Result<Vec<Graph>, FamiliesError> {
    let g = |n: usize, edges: &[(usize, usize)]| {
        Graph::new(n, edges).expect("small quartic tables are valid")
    };
    match n {
        5 => Ok(vec![Graph::complete(5)]),
        6 => Ok(vec![g(
            6,
            &[
                (0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3),
                (1, 5), (2, 4), (2, 5), (3, 4), (3, 5), (4, 5),
            ],
        )]),
        7 => Ok(vec![g(
            7,
            &[
                (0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4),
                (2, 5), (2, 6), (3, 5), (3, 6), (4, 5), (4, 6), (5, 6),
            ],
        )]),
        8 => Ok(vec![
            // two K4s joined by a perfect matching
            g(
                8,
                &[
                    (0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 5), (2, 3),
                    (2, 6), (3, 7), (4, 5), (4, 6), (4, 7), (5, 6), (5, 7), (6, 7),
                ],
            ),
            g(
                8,
                &[
                    (0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 5),
                    (2, 7), (3, 5), (3, 6), (4, 6), (4, 7), (5, 6), (5, 7), (6, 7),
                ],
            ),
        ]),
        9 => Ok(vec![g(
            9,
            &[
                (0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3), (2, 5),
                (3, 6), (4, 7), (4, 8), (5, 6), (5, 7), (5, 8), (6, 7), (6, 8), (7, 8),
            ],
        )]),
        10 => Ok(vec![long_block(
            &[BrickSpec::new(BrickKind::D4p), BrickSpec::mirrored(BrickKind::D4p)],
            LongFlavor::Complete,
        )?]),
        other => Err(FamiliesError::BadOrder(format!(
            "small quartic minimizers cover 5 <= n <= 10, got {other}"
        ))),
    }
}

/// Block list of the conjectured quartic minimizer on n >= 11 vertices:
/// write n - 11 = 5q + r; q middle blocks M1 between end blocks chosen by r.
pub fn conjectured_quartic_spec(n: usize) -> Result<PathLikeSpec, FamiliesError> {
    if n < 11 {
        return Err(FamiliesError::BadOrder(format!(
            "family defined for n >= 11; use small-quartic for n <= 10 (got {n})"
        )));
    }
    let q = (n - 11) / 5;
    let r = (n - 11) % 5;
    let (left, right) = match r {
        0 => (ShortKind::D4, ShortKind::D4),
        1 => (ShortKind::D4, ShortKind::D1),
        2 => (ShortKind::D1, ShortKind::D1),
        3 => (ShortKind::D1, ShortKind::D2),
        4 => (ShortKind::D4, ShortKind::D5),
        _ => unreachable!(),
    };
    let mut blocks = Vec::with_capacity(q + 2);
    blocks.push(BlockSpec::short(left));
    for _ in 0..q {
        blocks.push(BlockSpec::short(ShortKind::M1));
    }
    blocks.push(BlockSpec::short_mirrored(right));
    Ok(PathLikeSpec { blocks })
}

pub fn conjectured_quartic_min_with_cells(
    n: usize,
) -> Result<(Graph, Partition), FamiliesError> {
    let spec = conjectured_quartic_spec(n)?;
    let (g, cells) = assemble_path_like_with_cells(&spec)?;
    debug_assert_eq!(g.n(), n);
    Ok((g, cells))
}

pub fn conjectured_quartic_min(n: usize) -> Result<Graph, FamiliesError> {
    Ok(conjectured_quartic_min_with_cells(n)?.0)
}

/// Column cell partition of a family-constructed graph. The hint names the
/// constructor; the graph must match its output label-for-label.
pub fn cell_partition(g: &Graph, hint: &FamilyHint) -> Result<Partition, FamiliesError> {
    let unknown = |e: FamiliesError| {
        FamiliesError::UnknownFamily(format!("hint cannot produce this graph ({e})"))
    };
    let (built, cells) = match hint {
        FamilyHint::CubicGn => cubic_gn_with_cells(g.n()).map_err(unknown)?,
        FamilyHint::CubicH => {
            if g.n() < 14 {
                return Err(FamiliesError::UnknownFamily(format!(
                    "H graphs have at least 14 vertices, got {}",
                    g.n()
                )));
            }
            cubic_h_with_cells(g.n() - 2).map_err(unknown)?
        }
        FamilyHint::QuarticMin => conjectured_quartic_min_with_cells(g.n()).map_err(unknown)?,
        FamilyHint::PathLike(spec) => assemble_path_like_with_cells(spec).map_err(unknown)?,
        FamilyHint::Long { bricks, flavor } => {
            let t = long_template(bricks, *flavor).map_err(unknown)?;
            let graph = Graph::new(t.n, &t.edges).expect("long template is valid");
            (graph, Partition::new(t.cells))
        }
    };
    if &built != g {
        return Err(FamiliesError::UnknownFamily(
            "graph does not match the hinted family constructor".to_string(),
        ));
    }
    Ok(cells)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::are_isomorphic;

    #[test]
    fn short_block_inventory() {
        // (kind, order, edges, degree-2 count)
        let expect = [
            (ShortKind::M, 7, 12, 2),
            (ShortKind::M1, 6, 10, 2),
            (ShortKind::M2, 8, 14, 2),
            (ShortKind::M3, 9, 16, 2),
            (ShortKind::D1, 7, 13, 1),
            (ShortKind::D2, 8, 15, 1),
            (ShortKind::D3, 9, 17, 1),
            (ShortKind::D4, 6, 11, 1),
            (ShortKind::D5, 10, 19, 1),
        ];
        for (kind, n, e, deg2) in expect {
            let g = short_block(kind, false);
            assert_eq!(g.n(), n, "{:?} order", kind);
            assert_eq!(g.edge_count(), e, "{:?} edges", kind);
            let twos = (0..g.n()).filter(|&v| g.degree(v) == 2).count();
            let fours = (0..g.n()).filter(|&v| g.degree(v) == 4).count();
            assert_eq!(twos, deg2, "{:?} degree-2 vertices", kind);
            assert_eq!(twos + fours, g.n(), "{:?} degrees are 2 or 4", kind);
            // middle blocks expose both attachments, ends only the right one
            let cells = short_block_cells(kind, false);
            assert_eq!(cells.iter().map(Vec::len).sum::<usize>(), g.n());
        }
    }

    #[test]
    fn mirror_is_isomorphic_but_reverses_columns() {
        for kind in ShortKind::ALL {
            assert!(are_isomorphic(&short_block(kind, false), &short_block(kind, true)));
        }
        let cells = short_block_cells(ShortKind::M3, false);
        let mirrored = short_block_cells(ShortKind::M3, true);
        assert_ne!(cells, mirrored);
        let sizes: Vec<usize> = cells.iter().map(Vec::len).collect();
        let mirrored_sizes: Vec<usize> = mirrored.iter().map(Vec::len).collect();
        assert_eq!(sizes, vec![1, 2, 1, 2, 2, 1]);
        assert_eq!(mirrored_sizes, vec![1, 2, 2, 1, 2, 1]);
    }

    #[test]
    fn d5_is_the_two_brick_long_end_block() {
        let long = long_block(
            &[BrickSpec::new(BrickKind::D4p), BrickSpec::mirrored(BrickKind::M1p)],
            LongFlavor::End,
        )
        .unwrap();
        assert_eq!(long, short_block(ShortKind::D5, false));
    }

    #[test]
    fn ten_vertex_complete_long_block() {
        let g = long_block(
            &[BrickSpec::new(BrickKind::D4p), BrickSpec::mirrored(BrickKind::D4p)],
            LongFlavor::Complete,
        )
        .unwrap();
        assert_eq!(g.n(), 10);
        assert_eq!(g.edge_count(), 20);
        assert_eq!(g.degree_profile(), (4, 4, Some(4)));
        // figure transcription, label for label
        let literal = Graph::new(
            10,
            &[
                (0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4),
                (3, 5), (4, 6), (5, 7), (5, 8), (5, 9), (6, 7), (6, 8), (6, 9), (7, 8),
                (7, 9), (8, 9),
            ],
        )
        .unwrap();
        assert_eq!(g, literal);
    }

    #[test]
    fn long_block_grammar_rejections() {
        // un-mirrored M1' is not a valid closing brick
        let err = long_block(
            &[BrickSpec::new(BrickKind::D4p), BrickSpec::new(BrickKind::M1p)],
            LongFlavor::End,
        )
        .unwrap_err();
        assert_eq!(err.name(), "GrammarViolation");
        // a single brick is not a long block
        assert!(long_block(&[BrickSpec::new(BrickKind::D4p)], LongFlavor::Complete).is_err());
        // middle blocks cannot start with a D brick
        assert!(long_block(
            &[BrickSpec::new(BrickKind::D3p), BrickSpec::mirrored(BrickKind::M1p)],
            LongFlavor::Middle
        )
        .is_err());
    }

    #[test]
    fn long_middle_block_has_two_degree_two_vertices() {
        let g = long_block(
            &[BrickSpec::new(BrickKind::M1p), BrickSpec::mirrored(BrickKind::M1p)],
            LongFlavor::Middle,
        )
        .unwrap();
        assert_eq!(g.n(), 10);
        let twos: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) == 2).collect();
        assert_eq!(twos.len(), 2);
    }

    #[test]
    fn assemble_examples() {
        let spec = PathLikeSpec {
            blocks: vec![
                BlockSpec::short(ShortKind::D4),
                BlockSpec::short_mirrored(ShortKind::D4),
            ],
        };
        let (g, cells) = assemble_path_like_with_cells(&spec).unwrap();
        assert_eq!(g.n(), 11);
        assert_eq!(cells.cells.iter().map(Vec::len).sum::<usize>(), 11);

        let spec = PathLikeSpec {
            blocks: vec![
                BlockSpec::short(ShortKind::D4),
                BlockSpec::short(ShortKind::M1),
                BlockSpec::short_mirrored(ShortKind::D4),
            ],
        };
        assert_eq!(assemble_path_like(&spec).unwrap().n(), 16);

        let bad = PathLikeSpec {
            blocks: vec![BlockSpec::short(ShortKind::M1), BlockSpec::short(ShortKind::M1)],
        };
        assert_eq!(assemble_path_like(&bad).unwrap_err().name(), "GrammarViolation");
    }

    #[test]
    fn assembly_vertex_count_arithmetic() {
        // all specs with <= 4 blocks over the short catalog
        let ends = ShortKind::ENDS;
        let middles = [
            (ShortKind::M, false),
            (ShortKind::M1, false),
            (ShortKind::M2, false),
            (ShortKind::M3, false),
            (ShortKind::M3, true),
        ];
        let size = |k: ShortKind| short_block(k, false).n();
        let mut checked = 0usize;
        for &l in &ends {
            for &r in &ends {
                for mids in [vec![], vec![0], vec![0, 1]] {
                    // mids picks indices into `middles`; enumerate all tuples
                    let choices: Vec<Vec<(ShortKind, bool)>> = match mids.len() {
                        0 => vec![vec![]],
                        1 => middles.iter().map(|&m| vec![m]).collect(),
                        2 => middles
                            .iter()
                            .flat_map(|&a| middles.iter().map(move |&b| vec![a, b]))
                            .collect(),
                        _ => unreachable!(),
                    };
                    for combo in choices {
                        let mut blocks = vec![BlockSpec::short(l)];
                        let mut expected = size(l);
                        for (k, mir) in &combo {
                            blocks.push(if *mir {
                                BlockSpec::short_mirrored(*k)
                            } else {
                                BlockSpec::short(*k)
                            });
                            expected += size(*k);
                        }
                        blocks.push(BlockSpec::short_mirrored(r));
                        expected += size(r);
                        expected -= blocks.len() - 1;
                        let spec = PathLikeSpec { blocks };
                        let g = assemble_path_like(&spec).unwrap();
                        assert_eq!(g.n(), expected);
                        assert_eq!(g.degree_profile(), (4, 4, Some(4)));
                        checked += 1;
                    }
                }
            }
        }
        assert_eq!(checked, 5 * 5 * (1 + 5 + 25));
    }

    #[test]
    fn gn_examples() {
        let (g10, cells) = cubic_gn_with_cells(10).unwrap();
        assert_eq!(g10.n(), 10);
        assert_eq!(g10.edge_count(), 15);
        let sizes: Vec<usize> = cells.cells.iter().map(Vec::len).collect();
        assert_eq!(sizes, vec![2, 2, 1, 1, 2, 2]);
        let d = g10.block_decomposition().unwrap();
        assert_eq!(d.nontrivial_blocks().len(), 2);
        assert_eq!(d.bridges().len(), 1);
        assert!(d.block_tree_is_path);

        let g12 = cubic_gn(12).unwrap();
        assert_eq!(g12.n(), 12);
        let d = g12.block_decomposition().unwrap();
        let mut block_sizes: Vec<usize> =
            d.nontrivial_blocks().iter().map(|b| b.len()).collect();
        block_sizes.sort_unstable();
        assert_eq!(block_sizes, vec![5, 7]);
        assert_eq!(d.bridges().len(), 1);

        let g26 = cubic_gn(26).unwrap();
        let d = g26.block_decomposition().unwrap();
        let mut block_sizes: Vec<usize> =
            d.nontrivial_blocks().iter().map(|b| b.len()).collect();
        block_sizes.sort_unstable();
        assert_eq!(block_sizes, vec![4, 4, 4, 4, 5, 5]);
        assert_eq!(d.bridges().len(), 5);
        assert!(g26.is_connected());

        assert_eq!(cubic_gn(8).unwrap_err().name(), "BadOrder");
        assert_eq!(cubic_gn(11).unwrap_err().name(), "BadOrder");
    }

    #[test]
    fn h_examples() {
        let (h14, cells) = cubic_h_with_cells(12).unwrap();
        assert_eq!(h14.n(), 14);
        assert_eq!(h14.edge_count(), 21);
        assert_eq!(h14.degree_profile(), (3, 3, Some(3)));
        assert!(h14.is_connected());
        assert_eq!(cells.cells.iter().map(Vec::len).sum::<usize>(), 14);
        assert_eq!(cubic_h(10).unwrap_err().name(), "BadOrder");
    }

    #[test]
    fn cosine_vector_structure() {
        // m = 1: x = [cos(pi/4), cos(3pi/4)]
        let w = cosine_test_vector(14).unwrap();
        let r = 0.5f64.sqrt();
        assert!((w[0] - r).abs() < 1e-15);
        assert!((w[5] - r).abs() < 1e-15);
        assert!(w[6].abs() < 1e-15); // (x1 + x2)/2 = 0
        assert!((w[8] + r).abs() < 1e-15);
        for n in [14, 18, 30, 110] {
            let w = cosine_test_vector(n).unwrap();
            let sum: f64 = w.iter().sum();
            assert!(sum.abs() < 1e-12, "skew symmetry at n={n}: sum={sum}");
        }
        assert_eq!(cosine_test_vector(12).unwrap_err().name(), "BadOrder");
        assert_eq!(cosine_test_vector(10).unwrap_err().name(), "BadOrder");
    }

    #[test]
    fn small_quartic_inventory() {
        for n in 5..=10usize {
            let gs = small_quartic_min(n).unwrap();
            assert_eq!(gs.len(), if n == 8 { 2 } else { 1 });
            for g in &gs {
                assert_eq!(g.n(), n);
                assert_eq!(g.degree_profile(), (4, 4, Some(4)));
                assert!(g.is_connected());
            }
        }
        let both = small_quartic_min(8).unwrap();
        assert!(!are_isomorphic(&both[0], &both[1]));
        assert_eq!(small_quartic_min(4).unwrap_err().name(), "BadOrder");
        assert_eq!(small_quartic_min(11).unwrap_err().name(), "BadOrder");
    }

    #[test]
    fn conjectured_minimizer_orders() {
        for n in 11..=200usize {
            let g = conjectured_quartic_min(n).unwrap();
            assert_eq!(g.n(), n, "vertex count at n={n}");
            assert_eq!(g.degree_profile(), (4, 4, Some(4)));
            assert!(g.is_connected());
        }
        assert_eq!(conjectured_quartic_min(10).unwrap_err().name(), "BadOrder");
    }

    #[test]
    fn conjectured_block_structure_cases() {
        // r = 0 at n=11: [D4 | ~D4]
        let spec = conjectured_quartic_spec(11).unwrap();
        assert_eq!(spec.blocks.len(), 2);
        // r = 4 at n=15: [D4 | ~D5]
        let spec = conjectured_quartic_spec(15).unwrap();
        assert_eq!(spec.blocks.len(), 2);
        assert_eq!(spec.blocks[0], BlockSpec::short(ShortKind::D4));
        assert_eq!(spec.blocks[1], BlockSpec::short_mirrored(ShortKind::D5));
        // n = 16: q=1, r=0: [D4 | M1 | ~D4]
        let spec = conjectured_quartic_spec(16).unwrap();
        assert_eq!(spec.blocks.len(), 3);
        assert_eq!(spec.blocks[1], BlockSpec::short(ShortKind::M1));
    }

    #[test]
    fn cell_partition_hints() {
        let (g, want) = cubic_gn_with_cells(10).unwrap();
        let got = cell_partition(&g, &FamilyHint::CubicGn).unwrap();
        assert_eq!(got, want);

        let k5 = Graph::complete(5);
        assert_eq!(
            cell_partition(&k5, &FamilyHint::QuarticMin).unwrap_err().name(),
            "UnknownFamily"
        );
        assert_eq!(
            cell_partition(&k5, &FamilyHint::CubicGn).unwrap_err().name(),
            "UnknownFamily"
        );
        // an 11-vertex non-family graph is rejected by content, not order
        let c11 = Graph::cycle(11);
        assert_eq!(
            cell_partition(&c11, &FamilyHint::QuarticMin).unwrap_err().name(),
            "UnknownFamily"
        );
    }
}
