//! Brute-force canonical forms, isomorphism testing, and exhaustive
//! enumeration of small graphs up to isomorphism.
//!
//! The canonical form is the relabeling whose adjacency rows, read as the
//! sequence of "bits toward already-placed vertices", is lexicographically
//! minimal. A branch-and-bound search over placements is plenty for the
//! desk-scale graphs (n ≤ 10) this crate works with.

use std::collections::HashMap;

use crate::graph::{bits, to_graph6, Graph};

/// Canonically relabelled copy of `g`: equal outputs exactly for isomorphic
/// inputs.
pub fn canonical_form(g: &Graph) -> Graph {
    let n = g.n();
    if n == 0 {
        return g.clone();
    }
    // Low-degree candidates first: minimal row sequences start sparse, so this
    // finds a good incumbent early and prunes hard.
    let mut cand_order: Vec<usize> = (0..n).collect();
    cand_order.sort_by_key(|&v| (g.adj_mask(v + 1).count_ones(), v));
    let mut state = CanonSearch {
        g,
        cand_order,
        perm: Vec::with_capacity(n),
        used: 0,
        rows: Vec::with_capacity(n),
        best: None,
        gen: 0,
    };
    state.search(false);
    let rows = state.best.unwrap();
    rows_to_graph(n, &rows)
}

struct CanonSearch<'a> {
    g: &'a Graph,
    cand_order: Vec<usize>,
    perm: Vec<usize>,
    used: u64,
    /// `rows[d]` holds the adjacency bits of placed vertex `d` toward
    /// positions `0..d`.
    rows: Vec<u64>,
    best: Option<Vec<u64>>,
    /// Bumped on every replacement of `best`. After a child call that bumped
    /// it, the incumbent runs through this node's prefix, so the "strictly
    /// better prefix" flag must drop back to tied comparisons.
    gen: usize,
}

impl CanonSearch<'_> {
    fn search(&mut self, better_in: bool) {
        let mut better = better_in;
        let d = self.perm.len();
        if d == self.g.n() {
            if better || self.best.is_none() {
                self.best = Some(self.rows.clone());
                self.gen += 1;
            }
            return;
        }
        for idx in 0..self.cand_order.len() {
            let v = self.cand_order[idx];
            if self.used & (1u64 << v) != 0 {
                continue;
            }
            let adj = self.g.adj_mask(v + 1);
            let mut row = 0u64;
            for (i, &p) in self.perm.iter().enumerate() {
                if adj & (1u64 << p) != 0 {
                    row |= 1u64 << i;
                }
            }
            let child_better = if better {
                true
            } else if let Some(best) = &self.best {
                match row.cmp(&best[d]) {
                    std::cmp::Ordering::Less => true,
                    std::cmp::Ordering::Equal => false,
                    std::cmp::Ordering::Greater => continue,
                }
            } else {
                false
            };
            let gen_before = self.gen;
            self.perm.push(v);
            self.used |= 1u64 << v;
            self.rows.push(row);
            self.search(child_better);
            self.rows.pop();
            self.used &= !(1u64 << v);
            self.perm.pop();
            if self.gen != gen_before {
                better = false;
            }
        }
    }
}

fn rows_to_graph(n: usize, rows: &[u64]) -> Graph {
    let mut g = Graph::new(n).unwrap();
    for (j, &row) in rows.iter().enumerate() {
        for i in bits(row) {
            g.add_edge(i + 1, j + 1).unwrap();
        }
    }
    g
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return false;
    }
    let mut da: Vec<usize> = a.vertices().map(|v| a.degree(v)).collect();
    let mut db: Vec<usize> = b.vertices().map(|v| b.degree(v)).collect();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return false;
    }
    canonical_form(a) == canonical_form(b)
}

/// All graphs on exactly `n` vertices, one canonical representative per
/// isomorphism class, sorted by graph6 string.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    let mut layer = vec![Graph::new(0).unwrap()];
    for m in 1..=n {
        let mut seen: HashMap<Graph, ()> = HashMap::new();
        for g in &layer {
            // Every graph on m vertices arises by attaching a vertex to some
            // graph on m - 1 vertices, so extending by all neighborhoods and
            // deduplicating canonically is exhaustive.
            for mask in 0u64..(1u64 << (m - 1)) {
                let mut h = Graph::new(m).unwrap();
                for (u, v) in g.edges() {
                    h.add_edge(u, v).unwrap();
                }
                for b in bits(mask) {
                    h.add_edge(b + 1, m).unwrap();
                }
                seen.entry(canonical_form(&h)).or_insert(());
            }
        }
        layer = seen.into_keys().collect();
        layer.sort_by_key(to_graph6);
    }
    layer
}

/// All graphs with `1..=n` vertices up to isomorphism, ascending order.
pub fn all_graphs_up_to(n: usize) -> Vec<Graph> {
    (1..=n).flat_map(all_graphs).collect()
}

/// The connected ones among `all_graphs_up_to(n)`, in the same order.
pub fn connected_graphs_up_to(n: usize) -> Vec<Graph> {
    all_graphs_up_to(n).into_iter().filter(Graph::is_connected).collect()
}
