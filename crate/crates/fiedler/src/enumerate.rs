//! Exhaustive and randomized graph generation for the verification
//! harness: edge-bitmask enumeration of all labelled graphs on small
//! orders, backtracking enumeration of regular graphs, and seeded random
//! graphs.

use crate::graph::Graph;
use rand::Rng;

/// All labelled pairs (u, v), u < v, in lexicographic order.
pub fn vertex_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for u in 0..n {
        for v in u + 1..n {
            out.push((u, v));
        }
    }
    out
}

/// Every labelled graph on `n` vertices, one per edge subset
/// (2^(n(n-1)/2) graphs; intended for n <= 6).
pub fn graphs_with_order(n: usize) -> impl Iterator<Item = Graph> {
    let pairs = vertex_pairs(n);
    let m = pairs.len();
    assert!(m < 64, "edge bitmask enumeration limited to n <= 11");
    (0u64..(1u64 << m)).map(move |mask| {
        let mut g = Graph::new(n).expect("small order");
        for (i, &(u, v)) in pairs.iter().enumerate() {
            if mask & (1 << i) != 0 {
                g.add_edge(u, v).expect("valid pair");
            }
        }
        g
    })
}

/// All labelled connected regular graphs on `n` vertices (any degree),
/// by degree-constrained backtracking over the edge list.
pub fn connected_regular_graphs(n: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    for r in 0..n {
        if !(n * r).is_multiple_of(2) {
            continue;
        }
        let mut deg = vec![0usize; n];
        let mut edges = Vec::new();
        extend_regular(n, r, 0, 1, &mut deg, &mut edges, &mut out);
    }
    out
}

fn extend_regular(
    n: usize,
    r: usize,
    u: usize,
    v_start: usize,
    deg: &mut [usize],
    edges: &mut Vec<(usize, usize)>,
    out: &mut Vec<Graph>,
) {
    // Invariant: vertices < u are saturated at degree r.
    if u == n {
        let g = Graph::from_edges(n, edges).expect("valid edges");
        if g.is_connected() {
            out.push(g);
        }
        return;
    }
    if deg[u] == r {
        extend_regular(n, r, u + 1, u + 2, deg, edges, out);
        return;
    }
    let missing = r - deg[u];
    // u can only gain neighbours among v_start..n.
    if n - v_start < missing {
        return;
    }
    // Choose the next neighbour of u, or skip candidates.
    for v in v_start..=(n - missing) {
        if deg[v] < r {
            deg[u] += 1;
            deg[v] += 1;
            edges.push((u, v));
            extend_regular(n, r, u, v + 1, deg, edges, out);
            edges.pop();
            deg[u] -= 1;
            deg[v] -= 1;
        }
    }
}

/// Erdos-Renyi style random graph with the given edge probability.
pub fn random_graph<R: Rng>(n: usize, edge_prob: f64, rng: &mut R) -> Graph {
    let mut g = Graph::new(n).expect("order within bounds");
    for (u, v) in vertex_pairs(n) {
        if rng.gen::<f64>() < edge_prob {
            g.add_edge(u, v).expect("valid pair");
        }
    }
    g
}
