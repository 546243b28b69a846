#![allow(dead_code)]

use proptest::prelude::*;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use weak_iasi::Graph;

/// G(n, p) with ids 0..n.
pub fn random_graph(rng: &mut ChaCha8Rng, n: u32, p: f64) -> Graph {
    let mut g = Graph::new();
    for v in 0..n {
        g.add_vertex(v);
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

pub fn arb_graph(max_n: u32) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = (n * n.saturating_sub(1) / 2) as usize;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut g = Graph::new();
            for v in 0..n {
                g.add_vertex(v);
            }
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        g.add_edge(u, v).unwrap();
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

/// Minimum over independent vertex sets of the edges with no endpoint in
/// the set, by plain enumeration over the edge list.
pub fn brute_sparing(g: &Graph) -> usize {
    let ids: Vec<u32> = g.vertices().map(|v| v.0).collect();
    let pos = |v: u32| ids.iter().position(|&x| x == v).unwrap();
    let edges: Vec<(usize, usize)> = g.edges().map(|e| (pos(e.lo().0), pos(e.hi().0))).collect();
    let mut best = edges.len();
    for mask in 0u32..(1 << ids.len()) {
        let inside = |i: usize| mask >> i & 1 == 1;
        if edges.iter().any(|&(a, b)| inside(a) && inside(b)) {
            continue;
        }
        let uncovered = edges
            .iter()
            .filter(|&&(a, b)| !inside(a) && !inside(b))
            .count();
        best = best.min(uncovered);
    }
    best
}
