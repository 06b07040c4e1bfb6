//! Stable sets, the binomial ideal of the stable set ring, and two
//! independent quadraticity deciders.
//!
//! A monomial is a degree-k multiset of stable-set indices; its multidegree
//! counts, per vertex, how many factors contain that vertex. A binomial lies
//! in the ideal exactly when its two sides share a multidegree, so the
//! degree-k slice of the ideal is described by "fibers": all monomials with
//! one fixed multidegree. Quadratic generation in degree k is connectivity of
//! each fiber under moves that swap two factors for two others covering the
//! same vertices.
//!
//! The second decider never touches fibers directly: it replicates each
//! vertex p into a clique of a_p copies and asks whether all k-colorings of
//! the replicated graph are Kempe equivalent. Both deciders must agree; the
//! test suite leans on that agreement heavily.

use std::collections::{BTreeMap, HashMap};
use std::ops::ControlFlow;

use thiserror::Error;

use crate::coloring::{for_each_switch, Coloring, ColoringError};
use crate::graph::{bits, replication, Graph, GraphError, ReplicationGraph};
use crate::unionfind::UnionFind;

#[derive(Debug, Error)]
pub enum ToricError {
    #[error("degree bound {got} too small, need at least {min}")]
    DegreeBound { got: usize, min: usize },
    #[error("expected a vector of length {expected}, got {got}")]
    LengthMismatch { got: usize, expected: usize },
    #[error("stable-set index {index} out of range for a family of {size} sets")]
    BadIndex { index: usize, size: usize },
    #[error("no stable set {0} in this family")]
    NotAStableSet(String),
    #[error("binomial sides have degrees {lhs} and {rhs}")]
    DegreeMismatch { lhs: usize, rhs: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
}

/// Every stable set of a graph, indexed in a canonical order: by size, then
/// lexicographically on the sorted vertex list. Index 0 is always the empty
/// set, followed by the n singletons.
pub struct StableFamily {
    graph: Graph,
    masks: Vec<u64>,
    /// Sorted by mask, for O(log m) index lookup.
    by_mask: Vec<(u64, u32)>,
    alpha: usize,
}

/// Enumerates all stable sets of `g`. Output-sensitive backtracking, so
/// complete graphs are cheap at any size; the family length is capped at
/// `u16::MAX` because monomials store indices as u16.
pub fn stable_sets(g: &Graph) -> StableFamily {
    let n = g.n();
    let mut masks = vec![0u64];
    let mut stack = vec![(0u64, 0usize)];
    while let Some((set, start)) = stack.pop() {
        for v in start..n {
            if g.adj_mask(v + 1) & set == 0 {
                let bigger = set | (1u64 << v);
                masks.push(bigger);
                stack.push((bigger, v + 1));
            }
        }
    }
    assert!(
        masks.len() <= u16::MAX as usize,
        "family of {} stable sets exceeds the u16 index space",
        masks.len()
    );
    let mut keyed: Vec<(usize, Vec<usize>, u64)> = masks
        .into_iter()
        .map(|m| (m.count_ones() as usize, mask_to_set(m), m))
        .collect();
    keyed.sort();
    let alpha = keyed.iter().map(|(size, _, _)| *size).max().unwrap_or(0);
    let masks: Vec<u64> = keyed.into_iter().map(|(_, _, m)| m).collect();
    let mut by_mask: Vec<(u64, u32)> =
        masks.iter().enumerate().map(|(i, &m)| (m, i as u32)).collect();
    by_mask.sort_unstable();
    StableFamily { graph: g.clone(), masks, by_mask, alpha }
}

fn mask_to_set(mask: u64) -> Vec<usize> {
    bits(mask).map(|v| v + 1).collect()
}

impl StableFamily {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn len(&self) -> usize {
        self.masks.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Largest stable set size.
    pub fn alpha(&self) -> usize {
        self.alpha
    }

    pub(crate) fn mask(&self, index: usize) -> u64 {
        self.masks[index]
    }

    /// The stable set at `index` as a sorted 1-based vertex list.
    pub fn set(&self, index: usize) -> Vec<usize> {
        mask_to_set(self.masks[index])
    }

    pub(crate) fn index_of_mask(&self, mask: u64) -> Option<usize> {
        self.by_mask
            .binary_search_by_key(&mask, |&(m, _)| m)
            .ok()
            .map(|pos| self.by_mask[pos].1 as usize)
    }

    pub fn index_of_set(&self, set: &[usize]) -> Option<usize> {
        let mut mask = 0u64;
        for &v in set {
            if v == 0 || v > self.graph.n() {
                return None;
            }
            mask |= 1u64 << (v - 1);
        }
        self.index_of_mask(mask)
    }
}

pub fn set_string(set: &[usize]) -> String {
    let parts: Vec<String> = set.iter().map(|v| v.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

/// A degree-k product of stable-set generators, stored as family indices in
/// non-increasing order. That gives each multiset one representation and makes
/// the lexicographic order on representations a total order on monomials.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    factors: Vec<u16>,
}

impl Monomial {
    pub fn new(fam: &StableFamily, mut factors: Vec<u16>) -> Result<Self, ToricError> {
        for &f in &factors {
            if f as usize >= fam.len() {
                return Err(ToricError::BadIndex { index: f as usize, size: fam.len() });
            }
        }
        factors.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Monomial { factors })
    }

    /// Builds a monomial from explicit vertex sets, resolving each against
    /// the family.
    pub fn from_sets(fam: &StableFamily, sets: &[Vec<usize>]) -> Result<Self, ToricError> {
        let mut factors = Vec::with_capacity(sets.len());
        for s in sets {
            let idx = fam
                .index_of_set(s)
                .ok_or_else(|| ToricError::NotAStableSet(set_string(s)))?;
            factors.push(idx as u16);
        }
        Monomial::new(fam, factors)
    }

    pub fn degree(&self) -> usize {
        self.factors.len()
    }

    pub fn factors(&self) -> &[u16] {
        &self.factors
    }

    /// Per-vertex count of factors containing that vertex.
    pub fn multidegree(&self, fam: &StableFamily) -> Vec<usize> {
        chunk_multidegree(fam, &self.factors)
    }

    /// Factor sets in ascending canonical order, e.g. `[{1,5},{2,6},{3,4}]`.
    pub fn render(&self, fam: &StableFamily) -> String {
        let parts: Vec<String> = self
            .factors
            .iter()
            .rev()
            .map(|&f| set_string(&fam.set(f as usize)))
            .collect();
        format!("[{}]", parts.join(","))
    }
}

fn chunk_multidegree(fam: &StableFamily, chunk: &[u16]) -> Vec<usize> {
    let mut a = vec![0usize; fam.graph.n()];
    for &f in chunk {
        for v in bits(fam.mask(f as usize)) {
            a[v] += 1;
        }
    }
    a
}

/// An ordered pair of equal-degree monomials, the combinatorial stand-in for
/// the difference of two monomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Binomial {
    pub lhs: Monomial,
    pub rhs: Monomial,
}

impl Binomial {
    pub fn new(lhs: Monomial, rhs: Monomial) -> Result<Self, ToricError> {
        if lhs.degree() != rhs.degree() {
            return Err(ToricError::DegreeMismatch { lhs: lhs.degree(), rhs: rhs.degree() });
        }
        Ok(Binomial { lhs, rhs })
    }

    pub fn render(&self, fam: &StableFamily) -> String {
        format!("{} - {}", self.lhs.render(fam), self.rhs.render(fam))
    }
}

/// Ideal membership: the two sides must cover every vertex equally often.
pub fn binomial_in_ideal(fam: &StableFamily, b: &Binomial) -> bool {
    b.lhs.multidegree(fam) == b.rhs.multidegree(fam)
}

/// Reads off the monomial of a proper coloring of a replication graph: factor
/// ℓ is the set of base vertices owning a copy colored ℓ. Properness makes
/// each such set stable, so the family lookup cannot fail.
pub fn coloring_to_monomial(
    fam: &StableFamily,
    rep: &ReplicationGraph,
    f: &Coloring,
) -> Result<Monomial, ToricError> {
    if fam.graph.n() != rep.base.n() {
        return Err(ToricError::LengthMismatch { got: rep.base.n(), expected: fam.graph.n() });
    }
    let recheck = Coloring::new(&rep.graph, f.k(), f.colors().to_vec())?;
    let mut origin_masks = vec![0u64; recheck.k()];
    for v in 1..=rep.graph.n() {
        let color = recheck.color(v);
        origin_masks[color - 1] |= 1u64 << (rep.origin[v - 1] - 1);
    }
    let mut factors = Vec::with_capacity(recheck.k());
    for mask in origin_masks {
        let idx = fam
            .index_of_mask(mask)
            .ok_or_else(|| ToricError::NotAStableSet(set_string(&mask_to_set(mask))))?;
        factors.push(idx as u16);
    }
    Monomial::new(fam, factors)
}

/// Inverts the correspondence: rebuilds the replication weights from the
/// multidegree and colors the replicated graph so that reading the monomial
/// back returns `m`. Color ℓ goes to the lowest-numbered free copy within
/// each clique of copies.
pub fn monomial_to_coloring(
    fam: &StableFamily,
    m: &Monomial,
) -> Result<(ReplicationGraph, Coloring), ToricError> {
    let a = m.multidegree(fam);
    let rep = replication(&fam.graph, &a)?;
    let colors = canonical_lift(fam, &rep, m.factors());
    let f = Coloring::new(&rep.graph, m.degree(), colors)?;
    Ok((rep, f))
}

/// Color vector of the canonical coloring for a fiber chunk: factor at
/// position ℓ-1 becomes color class ℓ, filling each origin's copies in label
/// order. Each origin appears in exactly `a_p` factors, so the map is total.
fn canonical_lift(fam: &StableFamily, rep: &ReplicationGraph, chunk: &[u16]) -> Vec<u8> {
    let mut used = vec![0usize; rep.base.n()];
    let mut colors = vec![0u8; rep.graph.n()];
    for (pos, &f) in chunk.iter().enumerate() {
        for p in bits(fam.mask(f as usize)) {
            let v = rep.first_copy[p] + used[p];
            used[p] += 1;
            colors[v - 1] = (pos + 1) as u8;
        }
    }
    colors
}

/// All degree-k monomials with multidegree exactly `a`, ascending. Requires
/// `k >= 1`.
pub fn enumerate_fiber(
    fam: &StableFamily,
    a: &[usize],
    k: usize,
) -> Result<Vec<Monomial>, ToricError> {
    if a.len() != fam.graph.n() {
        return Err(ToricError::LengthMismatch { got: a.len(), expected: fam.graph.n() });
    }
    if k == 0 {
        return Err(ToricError::DegreeBound { got: 0, min: 1 });
    }
    let flat = flat_fiber(fam, a, k);
    Ok((0..flat.len())
        .map(|i| Monomial { factors: flat.chunk(i).to_vec() })
        .collect())
}

/// Fiber stored as concatenated k-chunks of factor indices, each chunk
/// non-increasing, chunks in ascending lexicographic order.
struct FlatFiber {
    k: usize,
    data: Vec<u16>,
}

impl FlatFiber {
    fn len(&self) -> usize {
        self.data.len() / self.k
    }

    fn chunk(&self, i: usize) -> &[u16] {
        &self.data[i * self.k..(i + 1) * self.k]
    }

    fn search(&self, chunk: &[u16]) -> Option<usize> {
        let mut lo = 0usize;
        let mut hi = self.len();
        while lo < hi {
            let mid = (lo + hi) / 2;
            match self.chunk(mid).cmp(chunk) {
                std::cmp::Ordering::Less => lo = mid + 1,
                std::cmp::Ordering::Greater => hi = mid,
                std::cmp::Ordering::Equal => return Some(mid),
            }
        }
        None
    }
}

/// Backtracking fiber enumeration. Positions are filled left to right with
/// non-increasing indices; `residual` tracks how many more factors each
/// vertex still needs. Invariant kept while descending: every residual entry
/// is at most the number of unfilled positions, so reaching the last position
/// certifies the residual is zero.
fn flat_fiber(fam: &StableFamily, a: &[usize], k: usize) -> FlatFiber {
    assert!(k >= 1);
    if a.iter().any(|&x| x > k) || a.iter().sum::<usize>() > k * fam.alpha {
        return FlatFiber { k, data: Vec::new() };
    }
    let mut supp = 0u64;
    let mut hist = vec![0usize; k + 1];
    for (p, &x) in a.iter().enumerate() {
        hist[x] += 1;
        if x > 0 {
            supp |= 1u64 << p;
        }
    }
    let mut ctx = FiberSearch {
        fam,
        k,
        residual: a.to_vec(),
        hist,
        supp,
        chunk: vec![0u16; k],
        data: Vec::new(),
    };
    ctx.go(0, fam.len() - 1);
    FlatFiber { k, data: ctx.data }
}

struct FiberSearch<'a> {
    fam: &'a StableFamily,
    k: usize,
    residual: Vec<usize>,
    /// `hist[r]` counts vertices with residual exactly r; with the descent
    /// invariant "every residual <= open slots", a violation after one more
    /// placement shows up precisely at `hist[open slots + 1]`.
    hist: Vec<usize>,
    supp: u64,
    chunk: Vec<u16>,
    data: Vec<u16>,
}

impl FiberSearch<'_> {
    fn go(&mut self, pos: usize, max_idx: usize) {
        if self.supp == 0 {
            // Only empty factors remain; pad and emit one monomial.
            for slot in pos..self.k {
                self.chunk[slot] = 0;
            }
            self.data.extend_from_slice(&self.chunk);
            return;
        }
        if pos == self.k {
            return;
        }
        let slots_after = self.k - pos - 1;
        for idx in 1..=max_idx {
            let mask = self.fam.mask(idx);
            if mask & !self.supp != 0 {
                continue;
            }
            for p in bits(mask) {
                let r = self.residual[p];
                self.hist[r] -= 1;
                self.hist[r - 1] += 1;
                self.residual[p] = r - 1;
                if r == 1 {
                    self.supp &= !(1u64 << p);
                }
            }
            if self.hist[slots_after + 1] == 0 {
                self.chunk[pos] = idx as u16;
                self.go(pos + 1, idx);
            }
            for p in bits(mask) {
                let r = self.residual[p];
                self.hist[r] -= 1;
                self.hist[r + 1] += 1;
                self.residual[p] = r + 1;
                self.supp |= 1u64 << p;
            }
        }
    }
}

/// For every unordered pair of factor indices, the lexicographically first
/// pair with the same combined vertex coverage. Swapping a pair for its
/// representative is a quadratic move, and all pairs sharing a coverage
/// funnel into one representative, so unioning against representatives
/// preserves fiber components while touching far fewer edges.
struct PairRep {
    m: usize,
    rep: Vec<(u16, u16)>,
}

impl PairRep {
    fn build(fam: &StableFamily) -> PairRep {
        let m = fam.len();
        let mut first: HashMap<(u64, u64), (u16, u16)> = HashMap::new();
        let mut rep = vec![(0u16, 0u16); m * m];
        for p in 0..m {
            for q in 0..=p {
                // Combined coverage has per-vertex counts in {0,1,2}, encoded
                // losslessly as (union, intersection).
                let key = (
                    fam.mask(p) | fam.mask(q),
                    fam.mask(p) & fam.mask(q),
                );
                let entry = *first.entry(key).or_insert((p as u16, q as u16));
                rep[p * m + q] = entry;
            }
        }
        PairRep { m, rep }
    }

    fn get(&self, p: u16, q: u16) -> (u16, u16) {
        self.rep[p as usize * self.m + q as usize]
    }
}

/// Union-find over fiber chunks where the moves are quadratic factor swaps.
fn quad_move_union(pair_rep: &PairRep, flat: &FlatFiber) -> UnionFind {
    let len = flat.len();
    let mut uf = UnionFind::new(len);
    let k = flat.k;
    let mut target = vec![0u16; k];
    let mut seen_pairs: Vec<(u16, u16)> = Vec::with_capacity(k * (k - 1) / 2);
    for idx in 0..len {
        let chunk = flat.chunk(idx);
        seen_pairs.clear();
        for s in 0..k {
            for t in (s + 1)..k {
                let pair = (chunk[s], chunk[t]);
                if seen_pairs.contains(&pair) {
                    continue;
                }
                seen_pairs.push(pair);
                let rep = pair_rep.get(pair.0, pair.1);
                if rep == pair {
                    continue;
                }
                target.copy_from_slice(chunk);
                target[s] = rep.0;
                target[t] = rep.1;
                target.sort_unstable_by(|a, b| b.cmp(a));
                let j = flat
                    .search(&target)
                    .expect("quadratic move left the fiber: fiber incomplete");
                uf.union(idx as u32, j as u32);
            }
        }
    }
    uf
}

/// Union-find over fiber chunks where the moves are single Kempe switchings
/// of the canonical coloring, projected back to monomials. Sound because all
/// colorings reading off one monomial are Kempe equivalent (same-origin
/// copies are adjacent twins, so copy swaps and color transpositions are
/// switching chains), and a switching available from any such coloring is
/// available, up to relabeling, from the canonical one.
fn kempe_quotient_union(
    fam: &StableFamily,
    a: &[usize],
    k: usize,
    flat: &FlatFiber,
) -> Result<UnionFind, ToricError> {
    let rep = replication(&fam.graph, a)?;
    let len = flat.len();
    let mut uf = UnionFind::new(len);
    let nrep = rep.graph.n();
    let mut origin_masks = vec![0u64; k];
    let mut target = vec![0u16; k];
    for idx in 0..len {
        let colors = canonical_lift(fam, &rep, flat.chunk(idx));
        for_each_switch(&rep.graph, &colors, k, |switched| {
            for mask in origin_masks.iter_mut() {
                *mask = 0;
            }
            for v in 0..nrep {
                origin_masks[switched[v] as usize - 1] |= 1u64 << (rep.origin[v] - 1);
            }
            for (slot, &mask) in origin_masks.iter().enumerate() {
                let f = fam
                    .index_of_mask(mask)
                    .expect("switched coloring projected onto a non-stable set");
                target[slot] = f as u16;
            }
            target.sort_unstable_by(|a, b| b.cmp(a));
            let j = flat
                .search(&target)
                .expect("Kempe switching left the fiber: fiber incomplete");
            uf.union(idx as u32, j as u32);
        });
    }
    Ok(uf)
}

/// Whether the given fiber is connected under quadratic moves. The slice must
/// be a complete fiber as produced by `enumerate_fiber`; a move landing
/// outside it panics rather than silently misreporting connectivity.
pub fn fiber_quadratic_connected(fam: &StableFamily, fiber: &[Monomial]) -> bool {
    if fiber.len() <= 1 {
        return true;
    }
    let k = fiber[0].degree();
    let mut data = Vec::with_capacity(fiber.len() * k);
    let mut sorted: Vec<&Monomial> = fiber.iter().collect();
    sorted.sort();
    for m in sorted {
        assert_eq!(m.degree(), k, "fiber mixes degrees");
        data.extend_from_slice(m.factors());
    }
    let flat = FlatFiber { k, data };
    let pair_rep = PairRep::build(fam);
    quad_move_union(&pair_rep, &flat).components() == 1
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuadStatus {
    NonQuadratic,
    QuadraticUpToBounds,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Fiber,
    Kempe,
    Both,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Fiber => "fiber",
            Method::Kempe => "kempe",
            Method::Both => "both",
        }
    }
}

/// Outcome of a bounded quadraticity check. `NonQuadratic` is definitive and
/// carries a verified witness; `QuadraticUpToBounds` only rules out missing
/// generators up to `degree_bound`.
#[derive(Debug, Clone)]
pub struct QuadraticityVerdict {
    pub status: QuadStatus,
    pub witness: Option<Binomial>,
    pub degree_bound: usize,
    pub method: Method,
}

/// Decides quadraticity by enumerating each fiber and checking connectivity
/// under quadratic moves. Scan order: degree ascending, multidegree
/// lexicographic; the witness is the lexicographically smallest cross-
/// component pair of the first disconnected fiber.
pub fn is_quadratic_fiber(
    g: &Graph,
    degree_bound: usize,
) -> Result<QuadraticityVerdict, ToricError> {
    decide(g, degree_bound, Method::Fiber)
}

/// Decides quadraticity through colorings instead: for each replication
/// weight vector and color count in range, all colorings of the replicated
/// graph must be Kempe equivalent, checked on the per-monomial quotient.
/// Same scan order and witness rule as the fiber decider, but the edges come
/// from Kempe switchings, not factor swaps.
pub fn is_quadratic_kempe(
    g: &Graph,
    degree_bound: usize,
) -> Result<QuadraticityVerdict, ToricError> {
    decide(g, degree_bound, Method::Kempe)
}

fn decide(g: &Graph, degree_bound: usize, method: Method) -> Result<QuadraticityVerdict, ToricError> {
    if degree_bound < 3 {
        return Err(ToricError::DegreeBound { got: degree_bound, min: 3 });
    }
    let fam = stable_sets(g);
    let pair_rep = PairRep::build(&fam);
    let mut witness: Option<(Vec<usize>, usize, FlatFiber, usize, usize)> = None;
    'outer: for k in 3..=degree_bound {
        let mut err: Option<ToricError> = None;
        let flow = for_each_multidegree(g, &fam, k, &mut |a| {
            let flat = flat_fiber(&fam, a, k);
            if flat.len() < 2 {
                return ControlFlow::Continue(());
            }
            let uf = match method {
                Method::Kempe => match kempe_quotient_union(&fam, a, k, &flat) {
                    Ok(uf) => uf,
                    Err(e) => {
                        err = Some(e);
                        return ControlFlow::Break(());
                    }
                },
                _ => quad_move_union(&pair_rep, &flat),
            };
            if uf.components() > 1 {
                let mut uf = uf;
                let root0 = uf.find(0);
                let other = (1..flat.len())
                    .find(|&i| uf.find(i as u32) != root0)
                    .expect("component count said disconnected");
                witness = Some((a.to_vec(), k, flat, 0, other));
                return ControlFlow::Break(());
            }
            ControlFlow::Continue(())
        });
        if let Some(e) = err {
            return Err(e);
        }
        if flow.is_break() {
            break 'outer;
        }
    }
    match witness {
        None => Ok(QuadraticityVerdict {
            status: QuadStatus::QuadraticUpToBounds,
            witness: None,
            degree_bound,
            method,
        }),
        Some((a, k, flat, i, j)) => {
            let lhs = Monomial { factors: flat.chunk(i).to_vec() };
            let rhs = Monomial { factors: flat.chunk(j).to_vec() };
            let b = Binomial::new(lhs, rhs)?;
            assert!(
                verify_witness(&fam, &pair_rep, &a, k, &b),
                "witness failed independent fiber verification"
            );
            Ok(QuadraticityVerdict {
                status: QuadStatus::NonQuadratic,
                witness: Some(b),
                degree_bound,
                method,
            })
        }
    }
}

/// Independent check run on every witness before it is reported: both sides
/// lie in the ideal's fiber for (a, k) and in different components under
/// quadratic moves.
fn verify_witness(
    fam: &StableFamily,
    pair_rep: &PairRep,
    a: &[usize],
    k: usize,
    b: &Binomial,
) -> bool {
    if !binomial_in_ideal(fam, b) || b.lhs.degree() != k {
        return false;
    }
    if b.lhs.multidegree(fam) != a {
        return false;
    }
    let flat = flat_fiber(fam, a, k);
    let (Some(i), Some(j)) = (flat.search(b.lhs.factors()), flat.search(b.rhs.factors())) else {
        return false;
    };
    let mut uf = quad_move_union(pair_rep, &flat);
    uf.find(i as u32) != uf.find(j as u32)
}

/// Streams all multidegree vectors with entries in `0..=k` that pass the
/// necessary clique constraints (a clique meets each factor at most once, so
/// its weights sum to at most k). Lexicographic order.
fn for_each_multidegree(
    g: &Graph,
    fam: &StableFamily,
    k: usize,
    f: &mut dyn FnMut(&[usize]) -> ControlFlow<()>,
) -> ControlFlow<()> {
    let n = g.n();
    if n == 0 {
        return f(&[]);
    }
    let cliques = g.maximal_cliques();
    let mut cliques_of = vec![Vec::new(); n];
    for (ci, &c) in cliques.iter().enumerate() {
        for v in bits(c) {
            cliques_of[v].push(ci);
        }
    }
    let mut a = vec![0usize; n];
    let mut sums = vec![0usize; cliques.len()];
    let cap = k * fam.alpha;
    rec_multidegree(0, n, k, cap, &mut a, &mut sums, &cliques_of, &mut 0, f)
}

#[allow(clippy::too_many_arguments)]
fn rec_multidegree(
    pos: usize,
    n: usize,
    k: usize,
    cap: usize,
    a: &mut Vec<usize>,
    sums: &mut Vec<usize>,
    cliques_of: &[Vec<usize>],
    total: &mut usize,
    f: &mut dyn FnMut(&[usize]) -> ControlFlow<()>,
) -> ControlFlow<()> {
    if pos == n {
        return f(a);
    }
    for v in 0..=k {
        if *total + v > cap {
            break;
        }
        let fits = cliques_of[pos].iter().all(|&ci| sums[ci] + v <= k);
        if !fits {
            // Raising v only raises every clique sum.
            break;
        }
        a[pos] = v;
        for &ci in &cliques_of[pos] {
            sums[ci] += v;
        }
        *total += v;
        let flow = rec_multidegree(pos + 1, n, k, cap, a, sums, cliques_of, total, f);
        *total -= v;
        for &ci in &cliques_of[pos] {
            sums[ci] -= v;
        }
        a[pos] = 0;
        if flow.is_break() {
            return flow;
        }
    }
    ControlFlow::Continue(())
}

/// Degrees where the ideal needs new generators, with multiplicities: for
/// each degree k, the total count of missing connections (components minus
/// one, per fiber) when fibers are connected only by moves of degree below k.
///
/// Degree 2 has no lower moves, so its deficiency is fiber size minus one.
/// For k ≥ 3 the below-k move graph has exactly the edges of the share-a-
/// factor graph: any lower move fixes a factor, and two monomials sharing a
/// factor differ by a move of degree k-1.
pub fn minimal_generator_degrees(
    g: &Graph,
    degree_bound: usize,
) -> Result<BTreeMap<usize, usize>, ToricError> {
    if degree_bound < 2 {
        return Err(ToricError::DegreeBound { got: degree_bound, min: 2 });
    }
    let fam = stable_sets(g);
    let m = fam.len();
    let mut result = BTreeMap::new();
    for k in 2..=degree_bound {
        let mut deficiency = 0usize;
        let mut stamp = vec![0u32; m];
        let mut first = vec![0u32; m];
        let mut generation = 0u32;
        let _ = for_each_multidegree(g, &fam, k, &mut |a| {
            let flat = flat_fiber(&fam, a, k);
            let len = flat.len();
            if len < 2 {
                return ControlFlow::Continue(());
            }
            if k == 2 {
                deficiency += len - 1;
                return ControlFlow::Continue(());
            }
            generation += 1;
            let mut uf = UnionFind::new(len);
            for idx in 0..len {
                let chunk = flat.chunk(idx);
                let mut prev = u16::MAX;
                for &p in chunk {
                    if p == prev {
                        continue;
                    }
                    prev = p;
                    if stamp[p as usize] == generation {
                        uf.union(idx as u32, first[p as usize]);
                    } else {
                        stamp[p as usize] = generation;
                        first[p as usize] = idx as u32;
                    }
                }
            }
            deficiency += uf.components() - 1;
            ControlFlow::Continue(())
        });
        if deficiency > 0 {
            result.insert(k, deficiency);
        }
    }
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::{cycle, odd_prism, path};

    fn family_sets(fam: &StableFamily) -> Vec<Vec<usize>> {
        (0..fam.len()).map(|i| fam.set(i)).collect()
    }

    #[test]
    fn family_counts() {
        assert_eq!(stable_sets(&Graph::complete(3).unwrap()).len(), 4);
        assert_eq!(stable_sets(&cycle(5)).len(), 11);
        assert_eq!(stable_sets(&Graph::new(3).unwrap()).len(), 8);
        assert_eq!(stable_sets(&Graph::new(0).unwrap()).len(), 1);
    }

    #[test]
    fn family_order_is_size_then_lex() {
        let fam = stable_sets(&cycle(4));
        assert_eq!(
            family_sets(&fam),
            vec![
                vec![],
                vec![1],
                vec![2],
                vec![3],
                vec![4],
                vec![1, 3],
                vec![2, 4]
            ]
        );
        assert_eq!(fam.index_of_set(&[1, 3]), Some(5));
        assert_eq!(fam.index_of_set(&[1, 2]), None);
        assert_eq!(fam.alpha(), 2);
    }

    #[test]
    fn membership_by_matching_coverage() {
        let fam = stable_sets(&path(3));
        // Family: {}, {1}, {2}, {3}, {1,3}.
        let lhs = Monomial::from_sets(&fam, &[vec![1, 3], vec![]]).unwrap();
        let rhs = Monomial::from_sets(&fam, &[vec![1], vec![3]]).unwrap();
        assert!(binomial_in_ideal(&fam, &Binomial::new(lhs, rhs).unwrap()));

        let lhs = Monomial::from_sets(&fam, &[vec![1], vec![2]]).unwrap();
        let rhs = Monomial::from_sets(&fam, &[vec![1], vec![1]]).unwrap();
        assert!(!binomial_in_ideal(&fam, &Binomial::new(lhs, rhs).unwrap()));
    }

    #[test]
    fn degree_mismatch_is_rejected() {
        let fam = stable_sets(&path(3));
        let two = Monomial::from_sets(&fam, &[vec![1], vec![3]]).unwrap();
        let three = Monomial::from_sets(&fam, &[vec![1], vec![3], vec![]]).unwrap();
        assert!(matches!(
            Binomial::new(two, three),
            Err(ToricError::DegreeMismatch { lhs: 2, rhs: 3 })
        ));
    }

    #[test]
    fn coloring_reads_off_color_classes() {
        let g = Graph::complete(2).unwrap();
        let fam = stable_sets(&g);
        let rep = replication(&g, &[1, 1]).unwrap();
        let f = Coloring::new(&rep.graph, 2, vec![1, 2]).unwrap();
        let m = coloring_to_monomial(&fam, &rep, &f).unwrap();
        assert_eq!(m.render(&fam), "[{1},{2}]");

        let f3 = Coloring::new(&rep.graph, 3, vec![1, 2]).unwrap();
        let m3 = coloring_to_monomial(&fam, &rep, &f3).unwrap();
        assert_eq!(m3.render(&fam), "[{},{1},{2}]");
    }

    #[test]
    fn monomial_round_trips_through_coloring() {
        let g = path(3);
        let fam = stable_sets(&g);
        let m = Monomial::from_sets(&fam, &[vec![1, 3], vec![1, 3]]).unwrap();
        let (rep, f) = monomial_to_coloring(&fam, &m).unwrap();
        assert_eq!(rep.weights, vec![2, 0, 2]);
        assert_eq!(rep.graph.n(), 4);
        let back = coloring_to_monomial(&fam, &rep, &f).unwrap();
        assert_eq!(back, m);
    }

    #[test]
    fn all_small_monomials_round_trip() {
        let g = cycle(4);
        let fam = stable_sets(&g);
        let m = fam.len();
        for k in 1..=3usize {
            let mut stack = vec![Vec::<u16>::new()];
            while let Some(cur) = stack.pop() {
                if cur.len() == k {
                    let mono = Monomial::new(&fam, cur).unwrap();
                    let (rep, f) = monomial_to_coloring(&fam, &mono).unwrap();
                    assert_eq!(coloring_to_monomial(&fam, &rep, &f).unwrap(), mono);
                    continue;
                }
                let lo = cur.last().copied().unwrap_or(0);
                for idx in lo..m as u16 {
                    let mut next = cur.clone();
                    next.push(idx);
                    stack.push(next);
                }
            }
        }
    }

    #[test]
    fn zero_fiber_is_all_empty_factors() {
        let fam = stable_sets(&path(3));
        let fiber = enumerate_fiber(&fam, &[0, 0, 0], 2).unwrap();
        assert_eq!(fiber.len(), 1);
        assert_eq!(fiber[0].render(&fam), "[{},{}]");
    }

    #[test]
    fn square_unit_fiber_is_the_diagonal_pair() {
        let fam = stable_sets(&cycle(4));
        let fiber = enumerate_fiber(&fam, &[1, 1, 1, 1], 2).unwrap();
        assert_eq!(fiber.len(), 1);
        assert_eq!(fiber[0].render(&fam), "[{1,3},{2,4}]");
    }

    #[test]
    fn fiber_enumeration_is_sorted_and_complete() {
        let fam = stable_sets(&cycle(5));
        let fiber = enumerate_fiber(&fam, &[1, 1, 1, 1, 1], 3).unwrap();
        assert!(fiber.windows(2).all(|w| w[0] < w[1]));
        for m in &fiber {
            assert_eq!(m.multidegree(&fam), vec![1, 1, 1, 1, 1]);
        }
        // Independent count: triples of stable sets partitioning the 5 cycle
        // vertices, enumerated naively.
        let mut count = 0usize;
        let m = fam.len() as u16;
        for i in 0..m {
            for j in i..m {
                for l in j..m {
                    let mono = Monomial::new(&fam, vec![i, j, l]).unwrap();
                    if mono.multidegree(&fam) == vec![1, 1, 1, 1, 1] {
                        count += 1;
                    }
                }
            }
        }
        assert_eq!(fiber.len(), count);
    }

    #[test]
    fn prism_unit_fiber_holds_both_triangle_covers() {
        let fam = stable_sets(&odd_prism());
        let fiber = enumerate_fiber(&fam, &[1; 6], 3).unwrap();
        let f_mono = Monomial::from_sets(&fam, &[vec![1, 5], vec![2, 6], vec![3, 4]]).unwrap();
        let g_mono = Monomial::from_sets(&fam, &[vec![1, 6], vec![2, 4], vec![3, 5]]).unwrap();
        assert!(fiber.contains(&f_mono));
        assert!(fiber.contains(&g_mono));
        assert!(!fiber_quadratic_connected(&fam, &fiber));
    }

    #[test]
    fn small_fibers_are_connected_for_the_even_cycle() {
        let g = cycle(6);
        let fam = stable_sets(&g);
        let _ = for_each_multidegree(&g, &fam, 3, &mut |a| {
            let fiber = enumerate_fiber(&fam, a, 3).unwrap();
            assert!(fiber_quadratic_connected(&fam, &fiber), "disconnected at {a:?}");
            ControlFlow::Continue(())
        });
    }

    #[test]
    fn complete_graphs_are_quadratic_both_ways() {
        for n in 1..=4usize {
            let g = Graph::complete(n).unwrap();
            let f = is_quadratic_fiber(&g, 5).unwrap();
            let k = is_quadratic_kempe(&g, 5).unwrap();
            assert_eq!(f.status, QuadStatus::QuadraticUpToBounds);
            assert_eq!(k.status, QuadStatus::QuadraticUpToBounds);
        }
    }

    #[test]
    fn prism_is_non_quadratic_both_ways() {
        let g = odd_prism();
        for verdict in [is_quadratic_fiber(&g, 4).unwrap(), is_quadratic_kempe(&g, 4).unwrap()] {
            assert_eq!(verdict.status, QuadStatus::NonQuadratic);
            let w = verdict.witness.expect("witness required");
            assert_eq!(w.lhs.degree(), 3);
            let fam = stable_sets(&g);
            assert!(binomial_in_ideal(&fam, &w));
            assert_eq!(w.lhs.multidegree(&fam), vec![1; 6]);
        }
    }

    #[test]
    fn deciders_agree_on_assorted_graphs() {
        let graphs = vec![
            cycle(4),
            cycle(5),
            path(4),
            Graph::from_edges(4, &[(1, 2), (3, 4)]).unwrap(),
            Graph::complete(3).unwrap(),
        ];
        for g in graphs {
            let f = is_quadratic_fiber(&g, 5).unwrap();
            let k = is_quadratic_kempe(&g, 5).unwrap();
            assert_eq!(f.status, k.status, "disagreement on {g:?}");
        }
    }

    #[test]
    fn square_is_quadratic_to_bound_five() {
        let v = is_quadratic_fiber(&cycle(4), 5).unwrap();
        assert_eq!(v.status, QuadStatus::QuadraticUpToBounds);
        assert!(v.witness.is_none());
    }

    #[test]
    fn generator_degrees_of_complete_graph_are_empty() {
        for n in 1..=4usize {
            let g = Graph::complete(n).unwrap();
            assert!(minimal_generator_degrees(&g, n + 2).unwrap().is_empty());
        }
    }

    #[test]
    fn prism_needs_a_cubic_generator() {
        let degrees = minimal_generator_degrees(&odd_prism(), 4).unwrap();
        assert!(degrees.contains_key(&3), "got {degrees:?}");
    }

    #[test]
    fn bound_validation() {
        let g = path(3);
        assert!(matches!(
            is_quadratic_fiber(&g, 2),
            Err(ToricError::DegreeBound { got: 2, min: 3 })
        ));
        assert!(matches!(
            minimal_generator_degrees(&g, 1),
            Err(ToricError::DegreeBound { got: 1, min: 2 })
        ));
    }
}
