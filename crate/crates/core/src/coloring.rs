//! Proper colorings and Kempe switchings.
//!
//! A k-coloring is any proper map from vertices to `1..=k`; colors may go
//! unused. Two colorings are Kempe equivalent when a chain of single
//! switchings connects them, where one switching exchanges two colors on one
//! connected component of the subgraph induced by those two color classes.

use thiserror::Error;

use crate::graph::{bits, Graph};
use crate::unionfind::UnionFind;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ColoringError {
    #[error("color pair ({i},{j}) invalid for k={k}: need 1 <= i < j <= k")]
    BadColorPair { i: usize, j: usize, k: usize },
    #[error("coloring has {got} entries, graph has {expected} vertices")]
    WrongLength { got: usize, expected: usize },
    #[error("vertex {vertex} has color {color}, outside 1..={k}")]
    ColorOutOfRange { vertex: usize, color: usize, k: usize },
    #[error("adjacent vertices {u} and {v} share a color")]
    Improper { u: usize, v: usize },
    #[error("the given vertex set is not a Kempe component for this coloring and color pair")]
    NotAComponent,
}

/// A proper coloring with colors `1..=k`; entry `v - 1` colors vertex `v`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coloring {
    k: usize,
    colors: Vec<u8>,
}

impl Coloring {
    /// Validates length, color range, and properness against `g`.
    pub fn new(g: &Graph, k: usize, colors: Vec<u8>) -> Result<Self, ColoringError> {
        if colors.len() != g.n() {
            return Err(ColoringError::WrongLength { got: colors.len(), expected: g.n() });
        }
        for (i, &c) in colors.iter().enumerate() {
            if c == 0 || c as usize > k {
                return Err(ColoringError::ColorOutOfRange {
                    vertex: i + 1,
                    color: c as usize,
                    k,
                });
            }
        }
        check_proper(g, &colors)?;
        Ok(Coloring { k, colors })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Color of vertex `v`, in `1..=k`.
    pub fn color(&self, v: usize) -> usize {
        self.colors[v - 1] as usize
    }

    pub fn colors(&self) -> &[u8] {
        &self.colors
    }
}

impl std::fmt::Display for Coloring {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.colors.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

fn check_proper(g: &Graph, colors: &[u8]) -> Result<(), ColoringError> {
    for (u, v) in g.edges() {
        if colors[u - 1] == colors[v - 1] {
            return Err(ColoringError::Improper { u, v });
        }
    }
    Ok(())
}

/// All proper k-colorings of `g`, in lexicographic order of the color vector.
///
/// The stream is empty when `k < χ(g)`; the null graph yields exactly one
/// empty coloring for every k.
pub fn enumerate_colorings(g: &Graph, k: usize) -> ColoringIter<'_> {
    assert!(k <= u8::MAX as usize - 1, "color count {k} out of supported range");
    ColoringIter {
        g,
        k: k as u8,
        colors: vec![1; g.n()],
        pos: 0,
        emitted_null: false,
        done: false,
    }
}

pub struct ColoringIter<'a> {
    g: &'a Graph,
    k: u8,
    colors: Vec<u8>,
    pos: usize,
    emitted_null: bool,
    done: bool,
}

impl ColoringIter<'_> {
    fn fits(&self, pos: usize, c: u8) -> bool {
        let earlier = self.g.adj_mask(pos + 1) & !(u64::MAX << pos);
        bits(earlier).all(|u| self.colors[u] != c)
    }

    /// Resumes the backtracking walk; on success the full vector in
    /// `self.colors` is the next proper coloring in lex order.
    fn seek(&mut self) -> bool {
        let n = self.g.n();
        loop {
            if self.pos == n {
                return true;
            }
            let mut c = self.colors[self.pos];
            while c <= self.k && !self.fits(self.pos, c) {
                c += 1;
            }
            if c <= self.k {
                self.colors[self.pos] = c;
                self.pos += 1;
                if self.pos < n {
                    self.colors[self.pos] = 1;
                }
            } else {
                self.colors[self.pos] = 1;
                if self.pos == 0 {
                    return false;
                }
                self.pos -= 1;
                self.colors[self.pos] += 1;
            }
        }
    }
}

impl Iterator for ColoringIter<'_> {
    type Item = Coloring;

    fn next(&mut self) -> Option<Coloring> {
        if self.done {
            return None;
        }
        if self.g.n() == 0 {
            self.done = true;
            if self.emitted_null {
                return None;
            }
            self.emitted_null = true;
            return Some(Coloring { k: self.k as usize, colors: Vec::new() });
        }
        if !self.seek() {
            self.done = true;
            return None;
        }
        let out = Coloring { k: self.k as usize, colors: self.colors.clone() };
        self.pos = self.g.n() - 1;
        self.colors[self.pos] += 1;
        Some(out)
    }
}

/// Connected components of the subgraph induced on `mask`, each as a bitmask,
/// ordered by lowest member.
pub(crate) fn mask_components(g: &Graph, mask: u64) -> Vec<u64> {
    let mut rest = mask;
    let mut out = Vec::new();
    while rest != 0 {
        let mut comp = rest & rest.wrapping_neg();
        loop {
            let mut grow = comp;
            for v in bits(comp) {
                grow |= g.adj_mask(v + 1) & mask;
            }
            if grow == comp {
                break;
            }
            comp = grow;
        }
        out.push(comp);
        rest &= !comp;
    }
    out
}

fn check_color_pair(i: usize, j: usize, k: usize) -> Result<(), ColoringError> {
    if i == 0 || j == 0 || i >= j || j > k {
        return Err(ColoringError::BadColorPair { i, j, k });
    }
    Ok(())
}

fn two_color_mask(colors: &[u8], i: u8, j: u8) -> u64 {
    let mut mask = 0u64;
    for (v, &c) in colors.iter().enumerate() {
        if c == i || c == j {
            mask |= 1u64 << v;
        }
    }
    mask
}

/// Components of `g[f⁻¹(i) ∪ f⁻¹(j)]` as sorted 1-based vertex lists, ordered
/// by minimum vertex. A vertex of one color with no neighbor of the other
/// still forms a (switchable) singleton component.
pub fn kempe_components(
    g: &Graph,
    f: &Coloring,
    i: usize,
    j: usize,
) -> Result<Vec<Vec<usize>>, ColoringError> {
    check_color_pair(i, j, f.k)?;
    if f.colors.len() != g.n() {
        return Err(ColoringError::WrongLength { got: f.colors.len(), expected: g.n() });
    }
    check_proper(g, &f.colors)?;
    let mask = two_color_mask(&f.colors, i as u8, j as u8);
    Ok(mask_components(g, mask)
        .into_iter()
        .map(|comp| bits(comp).map(|v| v + 1).collect())
        .collect())
}

/// Exchanges colors `i` and `j` on `component`, which must be one of
/// `kempe_components(g, f, i, j)`. The result is proper; applying the same
/// switch again restores `f`.
pub fn kempe_switch(
    g: &Graph,
    f: &Coloring,
    i: usize,
    j: usize,
    component: &[usize],
) -> Result<Coloring, ColoringError> {
    let comps = kempe_components(g, f, i, j)?;
    let mut wanted: Vec<usize> = component.to_vec();
    wanted.sort_unstable();
    wanted.dedup();
    if wanted.len() != component.len() || !comps.contains(&wanted) {
        return Err(ColoringError::NotAComponent);
    }
    let mut colors = f.colors.clone();
    for &v in &wanted {
        let c = colors[v - 1];
        colors[v - 1] = if c as usize == i { j as u8 } else { i as u8 };
    }
    Ok(Coloring { k: f.k, colors })
}

/// Calls `emit` with the color vector of every coloring one Kempe switching
/// away from `colors` (all color pairs, all components). The buffer passed to
/// `emit` is reused between calls.
pub(crate) fn for_each_switch(
    g: &Graph,
    colors: &[u8],
    k: usize,
    mut emit: impl FnMut(&[u8]),
) {
    let mut buf = colors.to_vec();
    for i in 1..=k as u8 {
        for j in (i + 1)..=k as u8 {
            let mask = two_color_mask(colors, i, j);
            for comp in mask_components(g, mask) {
                for v in bits(comp) {
                    buf[v] = if buf[v] == i { j } else { i };
                }
                emit(&buf);
                for v in bits(comp) {
                    buf[v] = if buf[v] == i { j } else { i };
                }
            }
        }
    }
}

/// All proper k-colorings plus the partition into Kempe equivalence classes.
///
/// Materializes every coloring; memory grows like kⁿ, so keep to desk scale.
pub struct KempePartition {
    pub colorings: Vec<Coloring>,
    /// Class ids numbered by first appearance in coloring order.
    pub class_of: Vec<u32>,
    pub class_count: usize,
}

impl KempePartition {
    pub fn class_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0usize; self.class_count];
        for &c in &self.class_of {
            sizes[c as usize] += 1;
        }
        sizes
    }

    /// Index of the first coloring in each class.
    pub fn representatives(&self) -> Vec<usize> {
        let mut reps = vec![usize::MAX; self.class_count];
        for (idx, &c) in self.class_of.iter().enumerate() {
            if reps[c as usize] == usize::MAX {
                reps[c as usize] = idx;
            }
        }
        reps
    }

    pub fn class_of_coloring(&self, f: &Coloring) -> Option<u32> {
        self.colorings
            .binary_search_by(|c| c.colors.as_slice().cmp(f.colors.as_slice()))
            .ok()
            .map(|idx| self.class_of[idx])
    }
}

pub fn kempe_classes(g: &Graph, k: usize) -> KempePartition {
    let vectors: Vec<Vec<u8>> = enumerate_colorings(g, k).map(|c| c.colors).collect();
    let class_of = partition_vectors(g, k, &vectors);
    let class_count = class_of.iter().copied().max().map_or(0, |m| m as usize + 1);
    KempePartition {
        colorings: vectors
            .into_iter()
            .map(|colors| Coloring { k, colors })
            .collect(),
        class_of,
        class_count,
    }
}

/// Union-find closure over single switchings; `vectors` must be sorted, as
/// produced by `enumerate_colorings`. Returns first-appearance class ids.
fn partition_vectors(g: &Graph, k: usize, vectors: &[Vec<u8>]) -> Vec<u32> {
    let mut uf = UnionFind::new(vectors.len());
    for (idx, colors) in vectors.iter().enumerate() {
        for_each_switch(g, colors, k, |switched| {
            let target = vectors
                .binary_search_by(|v| v.as_slice().cmp(switched))
                .expect("Kempe switch left the proper-coloring list");
            uf.union(idx as u32, target as u32);
        });
    }
    let mut next_id = 0u32;
    let mut id_of_root = vec![u32::MAX; vectors.len()];
    let mut class_of = Vec::with_capacity(vectors.len());
    for idx in 0..vectors.len() {
        let root = uf.find(idx as u32) as usize;
        if id_of_root[root] == u32::MAX {
            id_of_root[root] = next_id;
            next_id += 1;
        }
        class_of.push(id_of_root[root]);
    }
    class_of
}

/// Whether all proper k-colorings of `g` form one Kempe class.
///
/// Breadth-first search from the lexicographically first coloring, stopping
/// as soon as every coloring is reached.
pub fn all_kempe_equivalent(g: &Graph, k: usize) -> bool {
    let vectors: Vec<Vec<u8>> = enumerate_colorings(g, k).map(|c| c.colors).collect();
    if vectors.len() <= 1 {
        return true;
    }
    let mut seen = vec![false; vectors.len()];
    seen[0] = true;
    let mut reached = 1usize;
    let mut queue = std::collections::VecDeque::from([0usize]);
    while let Some(idx) = queue.pop_front() {
        if reached == vectors.len() {
            return true;
        }
        for_each_switch(g, &vectors[idx], k, |switched| {
            let target = vectors
                .binary_search_by(|v| v.as_slice().cmp(switched))
                .expect("Kempe switch left the proper-coloring list");
            if !seen[target] {
                seen[target] = true;
                reached += 1;
                queue.push_back(target);
            }
        });
    }
    reached == vectors.len()
}
