//! Seeded random regular graphs (pairing model with rejection).

use crate::graph::Graph;
use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Random simple k-regular graph on n vertices by the configuration model,
/// resampling until simple. Panics unless n*k is even and k < n.
pub fn random_regular(n: usize, k: usize, rng: &mut impl Rng) -> Graph {
    assert!(n * k % 2 == 0, "n*k must be even");
    assert!(k < n, "degree must be below the order");
    let mut stubs: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat(v).take(k)).collect();
    'resample: loop {
        stubs.shuffle(rng);
        let mut edges: Vec<(usize, usize)> = Vec::with_capacity(n * k / 2);
        for pair in stubs.chunks(2) {
            let (u, v) = (pair[0], pair[1]);
            if u == v {
                continue 'resample;
            }
            edges.push((u.min(v), u.max(v)));
        }
        edges.sort_unstable();
        if edges.windows(2).any(|w| w[0] == w[1]) {
            continue 'resample;
        }
        return Graph::new(n, &edges).expect("pairing produced a simple graph");
    }
}

/// Random *connected* simple k-regular graph.
pub fn random_connected_regular(n: usize, k: usize, rng: &mut impl Rng) -> Graph {
    loop {
        let g = random_regular(n, k, rng);
        if g.is_connected() {
            return g;
        }
    }
}

/// Convenience wrapper with its own deterministic stream.
pub fn seeded_connected_regular(n: usize, k: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_connected_regular(n, k, &mut rng)
}
