//! Shared fixtures for the benchmarks.

use fiedler::graph::Graph;

/// The seven-vertex combined 2-join used throughout the test suite.
pub fn worked_example() -> Graph {
    let g1 = Graph::complete(2).disjoint_union(&Graph::empty(1)).unwrap();
    let g2 = Graph::empty(1).join(&Graph::empty(3)).unwrap();
    g1.join(&g2).unwrap()
}

/// Rook's graph on a 3x3 board.
pub fn rook_3x3() -> Graph {
    let mut g = Graph::new(9).unwrap();
    for i in 0..3 {
        for j in 0..3 {
            let v = 3 * i + j;
            for jj in j + 1..3 {
                g.add_edge(v, 3 * i + jj).unwrap();
            }
            for ii in i + 1..3 {
                g.add_edge(v, 3 * ii + j).unwrap();
            }
        }
    }
    g
}
