//! Simple graphs on at most 64 vertices, with the constructions the stable
//! set ring machinery needs: induced subgraphs, complements, even-pair
//! contractions and replications.
//!
//! Vertices are `1..=n` in the public interface; bit `v - 1` of a `u64`
//! adjacency row stands for vertex `v`.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

/// Hard cap on vertex count: one adjacency word per vertex.
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph has {0} vertices, limit is {MAX_VERTICES}")]
    TooManyVertices(usize),
    #[error("vertex {v} out of range 1..={n}")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0} {1}")]
    DuplicateEdge(usize, usize),
    #[error("vertices {0} and {1} coincide")]
    SameVertex(usize, usize),
    #[error("vertices {0} and {1} are adjacent")]
    AdjacentPair(usize, usize),
    #[error("vertex {0} selected twice")]
    DuplicateVertex(usize),
    #[error("replication vector has {got} entries for {expected} vertices")]
    WeightLength { got: usize, expected: usize },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invalid graph6: {0}")]
    InvalidGraph6(String),
}

fn parse_err(line: usize, msg: impl Into<String>) -> GraphError {
    GraphError::Parse { line, msg: msg.into() }
}

/// Undirected simple graph, vertices `1..=n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices (the null graph for `n = 0`).
    pub fn new(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn complete(n: usize) -> Result<Self, GraphError> {
        let mut g = Graph::new(n)?;
        for v in 0..n {
            g.adj[v] = (mask_all(n)) & !(1u64 << v);
        }
        Ok(g)
    }

    /// Builds a graph from 1-based edge pairs, rejecting loops and duplicates.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::new(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> std::ops::RangeInclusive<usize> {
        1..=self.n
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v == 0 || v > self.n {
            Err(GraphError::VertexOutOfRange { v, n: self.n })
        } else {
            Ok(())
        }
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if self.has_edge(u, v) {
            return Err(GraphError::DuplicateEdge(u, v));
        }
        self.adj[u - 1] |= 1u64 << (v - 1);
        self.adj[v - 1] |= 1u64 << (u - 1);
        Ok(())
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        assert!(u >= 1 && u <= self.n && v >= 1 && v <= self.n, "vertex out of range");
        self.adj[u - 1] & (1u64 << (v - 1)) != 0
    }

    /// Adjacency row of `v` as a bitmask (bit `w - 1` set iff `v ~ w`).
    pub fn adj_mask(&self, v: usize) -> u64 {
        self.adj[v - 1]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v - 1].count_ones() as usize
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        bits(self.adj[v - 1]).map(|b| b + 1).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 1..=self.n {
            for b in bits(self.adj[u - 1] & !mask_all(u)) {
                out.push((u, b + 1));
            }
        }
        out
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * self.n.saturating_sub(1) / 2
    }

    /// Connectivity; the null graph counts as connected.
    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        self.reach(0).count_ones() as usize == self.n
    }

    fn reach(&self, start: usize) -> u64 {
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            for v in bits(frontier) {
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen
    }

    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut left = mask_all(self.n);
        let mut out = Vec::new();
        while left != 0 {
            let start = left.trailing_zeros() as usize;
            let comp = self.reach(start) & left;
            out.push(bits(comp).map(|b| b + 1).collect());
            left &= !comp;
        }
        out
    }

    pub fn complement(&self) -> Graph {
        let full = mask_all(self.n);
        let adj = (0..self.n)
            .map(|v| full & !self.adj[v] & !(1u64 << v))
            .collect();
        Graph { n: self.n, adj }
    }

    /// Subgraph induced by `verts`; the relabeling maps new vertex `i`
    /// (position `i - 1` of the returned vector) to its old label. New labels
    /// follow ascending old labels.
    pub fn induced_subgraph(&self, verts: &[usize]) -> Result<(Graph, Vec<usize>), GraphError> {
        let mut sorted: Vec<usize> = Vec::with_capacity(verts.len());
        let mut seen = BTreeSet::new();
        for &v in verts {
            self.check_vertex(v)?;
            if !seen.insert(v) {
                return Err(GraphError::DuplicateVertex(v));
            }
        }
        sorted.extend(seen.iter());
        let mut g = Graph::new(sorted.len())?;
        for i in 0..sorted.len() {
            for j in i + 1..sorted.len() {
                if self.has_edge(sorted[i], sorted[j]) {
                    g.add_edge(i + 1, j + 1)?;
                }
            }
        }
        Ok((g, sorted))
    }

    /// Identifies the non-adjacent pair `x, y` into one vertex adjacent to
    /// `N(x) ∪ N(y)`. Surviving vertices keep their relative order and are
    /// relabelled `1..`; the merged vertex becomes the last label `n - 1`.
    pub fn contract_pair(&self, x: usize, y: usize) -> Result<Graph, GraphError> {
        self.check_vertex(x)?;
        self.check_vertex(y)?;
        if x == y {
            return Err(GraphError::SameVertex(x, y));
        }
        if self.has_edge(x, y) {
            return Err(GraphError::AdjacentPair(x, y));
        }
        let survivors: Vec<usize> = (1..=self.n).filter(|&v| v != x && v != y).collect();
        let mut g = Graph::new(self.n - 1)?;
        for i in 0..survivors.len() {
            for j in i + 1..survivors.len() {
                if self.has_edge(survivors[i], survivors[j]) {
                    g.add_edge(i + 1, j + 1)?;
                }
            }
        }
        let z = self.n - 1;
        let joint = self.adj[x - 1] | self.adj[y - 1];
        for (i, &v) in survivors.iter().enumerate() {
            if joint & (1u64 << (v - 1)) != 0 {
                g.add_edge(i + 1, z)?;
            }
        }
        Ok(g)
    }

    /// Size of a largest clique, by branch and bound.
    pub fn clique_number(&self) -> usize {
        let mut best = 0;
        self.expand_clique(mask_all(self.n), 0, &mut best);
        best
    }

    fn expand_clique(&self, mut cand: u64, size: usize, best: &mut usize) {
        if size > *best {
            *best = size;
        }
        while cand != 0 {
            if size + cand.count_ones() as usize <= *best {
                return;
            }
            let v = cand.trailing_zeros() as usize;
            cand &= !(1u64 << v);
            self.expand_clique(cand & self.adj[v], size + 1, best);
        }
    }

    /// All maximal cliques as bitmasks (Bron–Kerbosch with pivoting).
    pub(crate) fn maximal_cliques(&self) -> Vec<u64> {
        if self.n == 0 {
            return Vec::new();
        }
        let mut out = Vec::new();
        self.bron_kerbosch(0, mask_all(self.n), 0, &mut out);
        out
    }

    fn bron_kerbosch(&self, r: u64, mut p: u64, mut x: u64, out: &mut Vec<u64>) {
        if p == 0 && x == 0 {
            out.push(r);
            return;
        }
        let pivot = bits(p | x)
            .max_by_key(|&u| (p & self.adj[u]).count_ones())
            .unwrap();
        let mut ext = p & !self.adj[pivot];
        while ext != 0 {
            let v = ext.trailing_zeros() as usize;
            let bit = 1u64 << v;
            ext &= !bit;
            self.bron_kerbosch(r | bit, p & self.adj[v], x & self.adj[v], out);
            p &= !bit;
            x |= bit;
        }
    }

    pub fn is_k_colorable(&self, k: usize) -> bool {
        if self.n == 0 {
            return true;
        }
        if k == 0 {
            return false;
        }
        // High-degree vertices first; first-use symmetry breaking on colors.
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(self.adj[v].count_ones()), v));
        let mut colors = vec![0u8; self.n];
        self.color_rec(&order, 0, k, 0, &mut colors)
    }

    fn color_rec(&self, order: &[usize], pos: usize, k: usize, used: usize, colors: &mut [u8]) -> bool {
        if pos == order.len() {
            return true;
        }
        let v = order[pos];
        let limit = k.min(used + 1);
        'next: for c in 1..=limit {
            for w in bits(self.adj[v]) {
                if colors[w] == c as u8 {
                    continue 'next;
                }
            }
            colors[v] = c as u8;
            if self.color_rec(order, pos + 1, k, used.max(c), colors) {
                return true;
            }
            colors[v] = 0;
        }
        false
    }

    /// Exact chromatic number; 0 for the null graph.
    pub fn chromatic_number(&self) -> usize {
        let mut k = self.clique_number();
        while !self.is_k_colorable(k) {
            k += 1;
        }
        k
    }

    pub fn is_bipartite(&self) -> bool {
        self.is_k_colorable(2)
    }
}

pub(crate) fn mask_all(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterates set bit positions (0-based) from lowest to highest.
pub(crate) fn bits(mask: u64) -> Bits {
    Bits(mask)
}

pub(crate) struct Bits(u64);

impl Iterator for Bits {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let b = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(b)
    }
}

/// Parses the edge-list format: a header line holding `n`, then one `i j`
/// pair per line, 1-based. Blank lines are ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut g: Option<Graph> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let s = raw.trim();
        if s.is_empty() {
            continue;
        }
        match g {
            None => {
                let n: usize = s
                    .parse()
                    .map_err(|_| parse_err(line, format!("expected vertex count, got {s:?}")))?;
                g = Some(Graph::new(n).map_err(|e| parse_err(line, e.to_string()))?);
            }
            Some(ref mut g) => {
                let mut it = s.split_whitespace();
                let (u, v) = match (it.next(), it.next(), it.next()) {
                    (Some(u), Some(v), None) => (u, v),
                    _ => return Err(parse_err(line, format!("expected edge \"i j\", got {s:?}"))),
                };
                let u: usize = u
                    .parse()
                    .map_err(|_| parse_err(line, format!("bad vertex {u:?}")))?;
                let v: usize = v
                    .parse()
                    .map_err(|_| parse_err(line, format!("bad vertex {v:?}")))?;
                g.add_edge(u, v).map_err(|e| parse_err(line, e.to_string()))?;
            }
        }
    }
    g.ok_or_else(|| parse_err(0, "empty input"))
}

/// Decodes one graph6 line (optionally prefixed `>>graph6<<`).
pub fn parse_graph6(line: &str) -> Result<Graph, GraphError> {
    let s = line.trim();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(GraphError::InvalidGraph6("empty string".into()));
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(GraphError::InvalidGraph6(format!("byte {b} outside graph6 range")));
    }
    let (n, off) = if bytes[0] == 126 {
        if bytes.len() >= 2 && bytes[1] == 126 {
            return Err(GraphError::InvalidGraph6("8-byte vertex counts unsupported".into()));
        }
        if bytes.len() < 4 {
            return Err(GraphError::InvalidGraph6("truncated vertex count".into()));
        }
        let n = (((bytes[1] - 63) as usize) << 12)
            | (((bytes[2] - 63) as usize) << 6)
            | (bytes[3] - 63) as usize;
        (n, 4)
    } else {
        ((bytes[0] - 63) as usize, 1)
    };
    if n > MAX_VERTICES {
        return Err(GraphError::TooManyVertices(n));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let need = nbits.div_ceil(6);
    if bytes.len() - off != need {
        return Err(GraphError::InvalidGraph6(format!(
            "expected {need} payload bytes for n = {n}, got {}",
            bytes.len() - off
        )));
    }
    let mut g = Graph::new(n)?;
    let mut pos = 0usize;
    // Column order: pair (i, j) for j in 1..n, i in 0..j, most significant bit first.
    for j in 1..n {
        for i in 0..j {
            let byte = bytes[off + pos / 6] - 63;
            if (byte >> (5 - pos % 6)) & 1 == 1 {
                g.add_edge(i + 1, j + 1)?;
            }
            pos += 1;
        }
    }
    Ok(g)
}

/// Encodes a graph as a graph6 string.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut bytes = Vec::new();
    if n <= 62 {
        bytes.push(n as u8 + 63);
    } else {
        bytes.push(126);
        bytes.push(((n >> 12) & 63) as u8 + 63);
        bytes.push(((n >> 6) & 63) as u8 + 63);
        bytes.push((n & 63) as u8 + 63);
    }
    let mut acc = 0u8;
    let mut filled = 0usize;
    for j in 1..n {
        for i in 0..j {
            acc <<= 1;
            if g.has_edge(i + 1, j + 1) {
                acc |= 1;
            }
            filled += 1;
            if filled == 6 {
                bytes.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        bytes.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(bytes).unwrap()
}

/// Parses either format, deciding by the first non-blank line: graph6 bytes
/// start at `?` (63), edge-list lines start with a digit.
pub fn parse_graph(text: &str) -> Result<Graph, GraphError> {
    let mut nonblank = text.lines().map(str::trim).filter(|s| !s.is_empty());
    let first = nonblank.next().ok_or_else(|| parse_err(0, "empty input"))?;
    let is_g6 = first.starts_with(">>graph6<<") || first.as_bytes()[0] >= 63;
    if is_g6 {
        if nonblank.next().is_some() {
            return Err(GraphError::InvalidGraph6(
                "multiple lines; expected a single graph".into(),
            ));
        }
        parse_graph6(first)
    } else {
        parse_edge_list(text)
    }
}

/// Replication graph: vertex `v` of the base becomes a clique of `weights[v-1]`
/// copies, and copies inherit adjacency across base edges.
#[derive(Clone, Debug)]
pub struct ReplicationGraph {
    pub base: Graph,
    pub weights: Vec<usize>,
    pub graph: Graph,
    /// `origin[w - 1]` is the base vertex that copy `w` replicates.
    pub origin: Vec<usize>,
    /// `first_copy[v - 1]` is the label of the first copy of base vertex `v`
    /// (the copies of `v` are the consecutive labels starting there).
    pub first_copy: Vec<usize>,
}

/// Builds the replication graph for a nonnegative weight vector. Copies are
/// laid out base vertex by base vertex in ascending order.
pub fn replication(g: &Graph, weights: &[usize]) -> Result<ReplicationGraph, GraphError> {
    if weights.len() != g.n() {
        return Err(GraphError::WeightLength { got: weights.len(), expected: g.n() });
    }
    let total: usize = weights.iter().sum();
    if total > MAX_VERTICES {
        return Err(GraphError::TooManyVertices(total));
    }
    let mut origin = Vec::with_capacity(total);
    let mut first_copy = Vec::with_capacity(g.n());
    for v in 1..=g.n() {
        first_copy.push(origin.len() + 1);
        for _ in 0..weights[v - 1] {
            origin.push(v);
        }
    }
    let mut rg = Graph::new(total)?;
    for i in 1..=total {
        for j in i + 1..=total {
            if origin[i - 1] == origin[j - 1] || g.has_edge(origin[i - 1], origin[j - 1]) {
                rg.add_edge(i, j)?;
            }
        }
    }
    Ok(ReplicationGraph {
        base: g.clone(),
        weights: weights.to_vec(),
        graph: rg,
        origin,
        first_copy,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::{cycle, path};

    #[test]
    fn parse_edge_list_path() {
        let g = parse_edge_list("3\n1 2\n2 3\n").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edges(), vec![(1, 2), (2, 3)]);
    }

    #[test]
    fn parse_edge_list_single_vertex() {
        let g = parse_edge_list("1\n").unwrap();
        assert_eq!(g.n(), 1);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn parse_edge_list_rejects_junk() {
        assert!(matches!(parse_edge_list("2\n1 1\n"), Err(GraphError::Parse { line: 2, .. })));
        assert!(matches!(parse_edge_list("2\n1 2\n1 2\n"), Err(GraphError::Parse { line: 3, .. })));
        assert!(matches!(parse_edge_list("2\n1 3\n"), Err(GraphError::Parse { line: 2, .. })));
        assert!(matches!(parse_edge_list("x\n"), Err(GraphError::Parse { line: 1, .. })));
        assert!(matches!(parse_edge_list(""), Err(GraphError::Parse { line: 0, .. })));
    }

    #[test]
    fn graph6_roundtrip_c5() {
        let c5 = cycle(5);
        let enc = to_graph6(&c5);
        let dec = parse_graph6(&enc).unwrap();
        assert_eq!(dec, c5);
    }

    #[test]
    fn graph6_header_prefix_accepted() {
        let enc = format!(">>graph6<<{}", to_graph6(&cycle(5)));
        assert_eq!(parse_graph6(&enc).unwrap(), cycle(5));
    }

    #[test]
    fn graph6_null_and_large() {
        assert_eq!(parse_graph6("?").unwrap().n(), 0);
        let g = Graph::complete(64).unwrap();
        assert_eq!(parse_graph6(&to_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn graph6_bad_length_rejected() {
        assert!(matches!(parse_graph6("D"), Err(GraphError::InvalidGraph6(_))));
        assert!(matches!(parse_graph6("Dhcc"), Err(GraphError::InvalidGraph6(_))));
    }

    #[test]
    fn auto_detect_formats() {
        assert_eq!(parse_graph("3\n1 2\n2 3\n").unwrap(), path(3));
        let g6 = to_graph6(&cycle(5));
        assert_eq!(parse_graph(&g6).unwrap(), cycle(5));
        assert!(parse_graph(&format!("{g6}\n{g6}\n")).is_err());
    }

    #[test]
    fn induced_subgraph_relabels_ascending() {
        let k4 = Graph::complete(4).unwrap();
        let (g, map) = k4.induced_subgraph(&[3, 1]).unwrap();
        assert_eq!(g, Graph::complete(2).unwrap());
        assert_eq!(map, vec![1, 3]);
        assert!(matches!(
            k4.induced_subgraph(&[1, 1]),
            Err(GraphError::DuplicateVertex(1))
        ));
    }

    #[test]
    fn complement_involution_and_complete() {
        let g = cycle(6);
        assert_eq!(g.complement().complement(), g);
        assert_eq!(Graph::complete(5).unwrap().complement(), Graph::new(5).unwrap());
    }

    #[test]
    fn contract_path_ends_gives_edge() {
        let g = path(3).contract_pair(1, 3).unwrap();
        assert_eq!(g, Graph::complete(2).unwrap());
    }

    #[test]
    fn contract_square_gives_path() {
        // C4, identify an opposite pair: the merged vertex is adjacent to both
        // survivors, which stay non-adjacent.
        let g = cycle(4).contract_pair(1, 3).unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edges(), vec![(1, 3), (2, 3)]);
    }

    #[test]
    fn contract_rejects_bad_pairs() {
        let g = path(3);
        assert!(matches!(g.contract_pair(1, 1), Err(GraphError::SameVertex(1, 1))));
        assert!(matches!(g.contract_pair(1, 2), Err(GraphError::AdjacentPair(1, 2))));
    }

    #[test]
    fn replication_unit_weights_copies_graph() {
        let g = cycle(5);
        let rg = replication(&g, &[1; 5]).unwrap();
        assert_eq!(rg.graph, g);
        assert_eq!(rg.origin, vec![1, 2, 3, 4, 5]);
    }

    #[test]
    fn replication_doubles_edge_into_k3() {
        let k2 = Graph::complete(2).unwrap();
        let rg = replication(&k2, &[2, 1]).unwrap();
        assert_eq!(rg.graph, Graph::complete(3).unwrap());
        assert_eq!(rg.origin, vec![1, 1, 2]);
        assert_eq!(rg.first_copy, vec![1, 3]);
    }

    #[test]
    fn replication_zero_weights_gives_null() {
        let rg = replication(&cycle(4), &[0; 4]).unwrap();
        assert_eq!(rg.graph.n(), 0);
    }

    #[test]
    fn replication_copies_are_adjacent_twins() {
        // Copies of one vertex share all neighbors outside the pair.
        let g = path(4);
        let rg = replication(&g, &[2, 1, 2, 1]).unwrap();
        let h = &rg.graph;
        for x in 1..=h.n() {
            for y in x + 1..=h.n() {
                if rg.origin[x - 1] == rg.origin[y - 1] {
                    assert!(h.has_edge(x, y));
                    let pair = (1u64 << (x - 1)) | (1u64 << (y - 1));
                    assert_eq!(h.adj_mask(x) & !pair, h.adj_mask(y) & !pair);
                }
            }
        }
    }

    #[test]
    fn clique_and_chromatic_basics() {
        assert_eq!(Graph::new(0).unwrap().clique_number(), 0);
        assert_eq!(Graph::new(0).unwrap().chromatic_number(), 0);
        assert_eq!(Graph::new(5).unwrap().chromatic_number(), 1);
        assert_eq!(Graph::complete(5).unwrap().clique_number(), 5);
        assert_eq!(cycle(5).clique_number(), 2);
        assert_eq!(cycle(5).chromatic_number(), 3);
        assert_eq!(cycle(6).chromatic_number(), 2);
        assert!(cycle(6).is_bipartite());
        assert!(!cycle(5).is_bipartite());
    }

    #[test]
    fn components_and_connectivity() {
        let mut g = Graph::new(4).unwrap();
        g.add_edge(1, 3).unwrap();
        assert!(!g.is_connected());
        assert_eq!(g.connected_components(), vec![vec![1, 3], vec![2], vec![4]]);
        assert!(Graph::new(0).unwrap().is_connected());
    }

    #[test]
    fn maximal_cliques_cover_triangles() {
        let g = Graph::from_edges(4, &[(1, 2), (2, 3), (1, 3), (3, 4)]).unwrap();
        let mut cliques = g.maximal_cliques();
        cliques.sort();
        assert_eq!(cliques, vec![0b0111, 0b1100]);
    }
}
