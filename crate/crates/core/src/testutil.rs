//! Shared graph constructors for unit tests.

use crate::graph::Graph;

pub(crate) fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|v| (v, v + 1)).collect();
    Graph::from_edges(n, &edges).unwrap()
}

pub(crate) fn cycle(n: usize) -> Graph {
    let mut edges: Vec<_> = (1..n).map(|v| (v, v + 1)).collect();
    edges.push((n, 1));
    Graph::from_edges(n, &edges).unwrap()
}

/// Two triangles 123 and 456 joined by the perfect matching 14, 25, 36.
pub(crate) fn odd_prism() -> Graph {
    Graph::from_edges(
        6,
        &[(1, 2), (2, 3), (3, 1), (4, 5), (5, 6), (6, 4), (1, 4), (2, 5), (3, 6)],
    )
    .unwrap()
}
