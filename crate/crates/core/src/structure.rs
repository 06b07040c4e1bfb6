//! Structural graph detectors: even pairs, even-pair contraction sequences,
//! holes and antiholes, prisms, darts, and the graph classes built from them
//! (perfect, weakly chordal, Meyniel, perfectly orderable, and the
//! odd-hole/antihole/odd-prism-free class of Everett and Reed).
//!
//! Everything here is exhaustive search at desk scale. Costs are exponential;
//! the intended range is n ≤ 10 or so, and the contraction search takes an
//! explicit node budget with a distinct "budget exhausted" outcome.

use std::collections::HashSet;

use crate::graph::{bits, Graph, GraphError};
use crate::iso::{are_isomorphic, canonical_form};

/// Nodes the contraction search may visit before giving up.
pub const DEFAULT_CONTRACTION_BUDGET: usize = 1_000_000;

/// An even pair is a non-adjacent pair whose induced connecting paths all
/// have even length. Pairs with no connecting path qualify vacuously, which
/// lets disconnected graphs contract toward a complete graph too.
pub fn is_even_pair(g: &Graph, x: usize, y: usize) -> Result<bool, GraphError> {
    if x == y {
        return Err(GraphError::SameVertex(x, y));
    }
    if x > g.n() || x == 0 {
        return Err(GraphError::VertexOutOfRange { v: x, n: g.n() });
    }
    if y > g.n() || y == 0 {
        return Err(GraphError::VertexOutOfRange { v: y, n: g.n() });
    }
    if g.has_edge(x, y) {
        return Ok(false);
    }
    let mut found_odd = false;
    for_each_induced_path(g, x, y, 0, &mut |path| {
        if (path.len() - 1) % 2 == 1 {
            found_odd = true;
            return false;
        }
        true
    });
    Ok(!found_odd)
}

/// Walks every induced x-y path whose internal vertices avoid `forbidden`
/// (a bitmask). `visit` gets the full vertex list including both endpoints
/// and may return false to stop early. An x-y edge yields the length-1 path.
fn for_each_induced_path(
    g: &Graph,
    x: usize,
    y: usize,
    forbidden: u64,
    visit: &mut impl FnMut(&[usize]) -> bool,
) {
    let mut path = vec![x];
    let mut path_mask = 1u64 << (x - 1);
    induced_path_dfs(g, y, forbidden, &mut path, &mut path_mask, visit);
}

fn induced_path_dfs(
    g: &Graph,
    y: usize,
    forbidden: u64,
    path: &mut Vec<usize>,
    path_mask: &mut u64,
    visit: &mut impl FnMut(&[usize]) -> bool,
) -> bool {
    let last = *path.last().unwrap();
    // A new vertex keeps the path induced exactly when its only neighbor on
    // the path so far is the current endpoint.
    let interior = *path_mask & !(1u64 << (last - 1));
    for w in bits(g.adj_mask(last)).map(|b| b + 1) {
        if *path_mask & (1u64 << (w - 1)) != 0 {
            continue;
        }
        if g.adj_mask(w) & interior != 0 {
            continue;
        }
        if w == y {
            path.push(w);
            let keep_going = visit(path);
            path.pop();
            if !keep_going {
                return false;
            }
            continue;
        }
        if forbidden & (1u64 << (w - 1)) != 0 {
            continue;
        }
        path.push(w);
        *path_mask |= 1u64 << (w - 1);
        let keep_going = induced_path_dfs(g, y, forbidden, path, path_mask, visit);
        *path_mask &= !(1u64 << (w - 1));
        path.pop();
        if !keep_going {
            return false;
        }
    }
    true
}

/// A run of even-pair contractions ending in a complete graph. Each step
/// stores the graph before the contraction and the 1-based pair contracted
/// in that graph's labeling.
#[derive(Debug, Clone)]
pub struct ContractionSequence {
    pub steps: Vec<(Graph, (usize, usize))>,
    pub final_graph: Graph,
}

impl ContractionSequence {
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.steps.iter().map(|(_, p)| *p).collect()
    }
}

#[derive(Debug, Clone)]
pub enum ContractileOutcome {
    Found(ContractionSequence),
    /// The whole search space was exhausted: no sequence exists.
    Absent,
    /// The node budget ran out before the space was exhausted; inconclusive.
    OutOfBudget,
}

/// Depth-first search for a sequence of even-pair contractions reducing `g`
/// to a complete graph. Candidate pairs are tried in lexicographic order, so
/// the first sequence found is deterministic. Graphs with at most 10 vertices
/// are memoized by canonical form once their whole subtree fails.
pub fn even_contractile_sequence(g: &Graph, budget: usize) -> ContractileOutcome {
    let mut state = ContractionSearch {
        budget,
        failed: HashSet::new(),
        steps: Vec::new(),
    };
    match state.dfs(g) {
        DfsResult::Found(final_graph) => ContractileOutcome::Found(ContractionSequence {
            steps: state.steps,
            final_graph,
        }),
        DfsResult::Absent => ContractileOutcome::Absent,
        DfsResult::OutOfBudget => ContractileOutcome::OutOfBudget,
    }
}

struct ContractionSearch {
    budget: usize,
    failed: HashSet<Graph>,
    steps: Vec<(Graph, (usize, usize))>,
}

enum DfsResult {
    Found(Graph),
    Absent,
    OutOfBudget,
}

impl ContractionSearch {
    fn dfs(&mut self, g: &Graph) -> DfsResult {
        if g.is_complete() {
            return DfsResult::Found(g.clone());
        }
        if self.budget == 0 {
            return DfsResult::OutOfBudget;
        }
        self.budget -= 1;
        let memo_key = (g.n() <= 10).then(|| canonical_form(g));
        if let Some(key) = &memo_key {
            if self.failed.contains(key) {
                return DfsResult::Absent;
            }
        }
        let mut ran_dry = false;
        for x in 1..=g.n() {
            for y in (x + 1)..=g.n() {
                if g.has_edge(x, y) || !is_even_pair(g, x, y).unwrap() {
                    continue;
                }
                let contracted = g.contract_pair(x, y).expect("pair checked non-adjacent");
                self.steps.push((g.clone(), (x, y)));
                match self.dfs(&contracted) {
                    DfsResult::Found(final_graph) => return DfsResult::Found(final_graph),
                    DfsResult::Absent => {
                        self.steps.pop();
                    }
                    DfsResult::OutOfBudget => {
                        self.steps.pop();
                        ran_dry = true;
                    }
                }
            }
        }
        if ran_dry {
            return DfsResult::OutOfBudget;
        }
        if let Some(key) = memo_key {
            self.failed.insert(key);
        }
        DfsResult::Absent
    }
}

/// Replays a contraction sequence against its starting graph: every step
/// must contract an even pair of the recorded snapshot, reproduce the next
/// snapshot exactly, and end in a complete graph.
pub fn validate_contraction_sequence(
    g: &Graph,
    seq: &ContractionSequence,
) -> Result<(), String> {
    let mut current = g.clone();
    for (i, (snapshot, (x, y))) in seq.steps.iter().enumerate() {
        if *snapshot != current {
            return Err(format!("step {i}: snapshot does not match the replayed graph"));
        }
        match is_even_pair(&current, *x, *y) {
            Ok(true) => {}
            Ok(false) => return Err(format!("step {i}: ({x},{y}) is not an even pair")),
            Err(e) => return Err(format!("step {i}: bad pair ({x},{y}): {e}")),
        }
        current = current
            .contract_pair(*x, *y)
            .map_err(|e| format!("step {i}: contraction failed: {e}"))?;
    }
    if current != seq.final_graph {
        return Err("final graph does not match the replayed result".into());
    }
    if !current.is_complete() {
        return Err("final graph is not complete".into());
    }
    Ok(())
}

/// Three-valued answer for budgeted searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Decision {
    Yes,
    No,
    OutOfBudget,
}

/// Whether every induced subgraph admits an even-pair contraction sequence.
/// Subgraphs are deduplicated up to isomorphism; `budget` applies to each
/// contraction search separately.
pub fn is_perfectly_contractile(g: &Graph, budget: usize) -> Decision {
    let n = g.n();
    let mut masks: Vec<u64> = (1..(1u64 << n)).collect();
    masks.sort_by_key(|m| (m.count_ones(), *m));
    let mut seen: HashSet<Graph> = HashSet::new();
    let mut ran_dry = false;
    for mask in masks {
        let verts: Vec<usize> = bits(mask).map(|b| b + 1).collect();
        let (sub, _) = g.induced_subgraph(&verts).unwrap();
        if !seen.insert(canonical_form(&sub)) {
            continue;
        }
        match even_contractile_sequence(&sub, budget) {
            ContractileOutcome::Found(_) => {}
            ContractileOutcome::Absent => return Decision::No,
            ContractileOutcome::OutOfBudget => ran_dry = true,
        }
    }
    if ran_dry {
        Decision::OutOfBudget
    } else {
        Decision::Yes
    }
}

/// All holes: induced cycles with at least 5 vertices, either parity. Each
/// hole appears once, as a cyclic vertex list starting at its minimum vertex,
/// with the smaller neighbor of the start in second position.
pub fn find_holes(g: &Graph) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let _ = for_each_hole(g, &mut |cycle| {
        out.push(cycle.to_vec());
        true
    });
    out
}

pub fn find_odd_holes(g: &Graph) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let _ = for_each_hole(g, &mut |cycle| {
        if cycle.len() % 2 == 1 {
            out.push(cycle.to_vec());
        }
        true
    });
    out
}

/// Vertex lists whose induced subgraph is the complement of a hole. The list
/// is the hole's cyclic order in the complement graph.
pub fn find_antiholes(g: &Graph) -> Vec<Vec<usize>> {
    find_holes(&g.complement())
}

fn for_each_hole(g: &Graph, visit: &mut impl FnMut(&[usize]) -> bool) -> bool {
    // Cycles are rooted at their minimum vertex; all other cycle vertices are
    // larger, which kills rotations. Direction is fixed at emission time.
    for s in 1..=g.n() {
        let mut path = vec![s];
        let mut path_mask = 1u64 << (s - 1);
        if !hole_dfs(g, s, &mut path, &mut path_mask, visit) {
            return false;
        }
    }
    true
}

fn hole_dfs(
    g: &Graph,
    s: usize,
    path: &mut Vec<usize>,
    path_mask: &mut u64,
    visit: &mut impl FnMut(&[usize]) -> bool,
) -> bool {
    let last = *path.last().unwrap();
    let t = path.len() - 1;
    // Chord-freedom along the open path; the root is handled separately
    // because an edge back to it is the closing edge, not a chord.
    let interior = *path_mask & !(1u64 << (last - 1)) & !(1u64 << (s - 1));
    for w in bits(g.adj_mask(last)).map(|b| b + 1) {
        if w <= s || *path_mask & (1u64 << (w - 1)) != 0 {
            continue;
        }
        if g.adj_mask(w) & interior != 0 {
            continue;
        }
        let closes = g.has_edge(w, s);
        if t == 0 {
            // w is the second cycle vertex; adjacency to the root is just the
            // first cycle edge, so keep extending.
            path.push(w);
            *path_mask |= 1u64 << (w - 1);
            let keep = hole_dfs(g, s, path, path_mask, visit);
            *path_mask &= !(1u64 << (w - 1));
            path.pop();
            if !keep {
                return false;
            }
        } else if closes {
            if t >= 3 && path[1] < w {
                path.push(w);
                let keep = visit(path);
                path.pop();
                if !keep {
                    return false;
                }
            }
            // w cannot continue the path: its edge to the root would chord.
        } else {
            path.push(w);
            *path_mask |= 1u64 << (w - 1);
            let keep = hole_dfs(g, s, path, path_mask, visit);
            *path_mask &= !(1u64 << (w - 1));
            path.pop();
            if !keep {
                return false;
            }
        }
    }
    true
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Odd,
    Even,
}

/// Two disjoint triangles joined by three vertex-disjoint induced paths of
/// the same parity, with no stray edges anywhere in the union. `paths[i]`
/// runs from `triangle_a[i]` to some vertex of `triangle_b`, endpoints
/// included.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrismWitness {
    pub triangle_a: [usize; 3],
    pub triangle_b: [usize; 3],
    pub paths: [Vec<usize>; 3],
}

/// All prism witnesses of the requested path parity.
pub fn find_prisms(g: &Graph, parity: Parity) -> Vec<PrismWitness> {
    let triangles = all_triangles(g);
    let mut out = Vec::new();
    for (i, ta) in triangles.iter().enumerate() {
        let mask_a = triangle_mask(ta);
        for tb in triangles.iter().skip(i + 1) {
            let mask_b = triangle_mask(tb);
            if mask_a & mask_b != 0 {
                continue;
            }
            collect_prisms(g, ta, tb, parity, &mut out);
        }
    }
    out
}

fn all_triangles(g: &Graph) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for a in 1..=g.n() {
        for b in (a + 1)..=g.n() {
            if !g.has_edge(a, b) {
                continue;
            }
            for c in (b + 1)..=g.n() {
                if g.has_edge(a, c) && g.has_edge(b, c) {
                    out.push([a, b, c]);
                }
            }
        }
    }
    out
}

fn triangle_mask(t: &[usize; 3]) -> u64 {
    t.iter().map(|&v| 1u64 << (v - 1)).sum()
}

fn collect_prisms(
    g: &Graph,
    ta: &[usize; 3],
    tb: &[usize; 3],
    parity: Parity,
    out: &mut Vec<PrismWitness>,
) {
    let triangle_verts = triangle_mask(ta) | triangle_mask(tb);
    // One path per triangle-A vertex, each ending at a distinct triangle-B
    // vertex; the assignment ranges over all six bijections.
    let perms: [[usize; 3]; 6] =
        [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    for perm in perms {
        let targets = [tb[perm[0]], tb[perm[1]], tb[perm[2]]];
        let mut chosen: Vec<Vec<usize>> = Vec::with_capacity(3);
        prism_paths(g, ta, &targets, triangle_verts, parity, 0, 0, &mut chosen, out);
    }
}

#[allow(clippy::too_many_arguments)]
fn prism_paths(
    g: &Graph,
    ta: &[usize; 3],
    targets: &[usize; 3],
    triangle_verts: u64,
    parity: Parity,
    leg: usize,
    used_internals: u64,
    chosen: &mut Vec<Vec<usize>>,
    out: &mut Vec<PrismWitness>,
) {
    if leg == 3 {
        if let Some(w) = assemble_prism(g, ta, targets, chosen) {
            out.push(w);
        }
        return;
    }
    // Internal vertices must stay clear of both triangles and of the other
    // legs; the other legs' endpoints are covered by triangle_verts.
    let forbidden = (triangle_verts & !(1u64 << (targets[leg] - 1))) | used_internals;
    let want_odd = matches!(parity, Parity::Odd);
    let mut paths_here: Vec<Vec<usize>> = Vec::new();
    for_each_induced_path(g, ta[leg], targets[leg], forbidden, &mut |path| {
        if (path.len() - 1) % 2 == usize::from(want_odd) {
            paths_here.push(path.to_vec());
        }
        true
    });
    for path in paths_here {
        let mut internals = 0u64;
        for &v in &path[1..path.len() - 1] {
            internals |= 1u64 << (v - 1);
        }
        chosen.push(path);
        prism_paths(
            g,
            ta,
            targets,
            triangle_verts,
            parity,
            leg + 1,
            used_internals | internals,
            chosen,
            out,
        );
        chosen.pop();
    }
}

/// Final inducedness check on the whole union: the induced subgraph on all
/// prism vertices must contain exactly the two triangles and the path edges.
fn assemble_prism(
    g: &Graph,
    ta: &[usize; 3],
    targets: &[usize; 3],
    chosen: &[Vec<usize>],
) -> Option<PrismWitness> {
    let mut verts: HashSet<usize> = HashSet::new();
    let mut expected: HashSet<(usize, usize)> = HashSet::new();
    let mut tb_sorted = *targets;
    tb_sorted.sort_unstable();
    for t in [ta, &tb_sorted] {
        verts.extend(t.iter().copied());
        for i in 0..3 {
            for j in (i + 1)..3 {
                expected.insert(ordered(t[i], t[j]));
            }
        }
    }
    for path in chosen {
        verts.extend(path.iter().copied());
        for pair in path.windows(2) {
            expected.insert(ordered(pair[0], pair[1]));
        }
    }
    let mut vlist: Vec<usize> = verts.into_iter().collect();
    vlist.sort_unstable();
    let mut actual = 0usize;
    for (i, &u) in vlist.iter().enumerate() {
        for &v in &vlist[i + 1..] {
            if g.has_edge(u, v) {
                if !expected.contains(&(u, v)) {
                    return None;
                }
                actual += 1;
            }
        }
    }
    if actual != expected.len() {
        return None;
    }
    Some(PrismWitness {
        triangle_a: *ta,
        triangle_b: tb_sorted,
        paths: [chosen[0].clone(), chosen[1].clone(), chosen[2].clone()],
    })
}

fn ordered(u: usize, v: usize) -> (usize, usize) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// The dart: five vertices, six edges, one vertex adjacent to all others,
/// one pendant hanging off it.
pub fn dart_graph() -> Graph {
    Graph::from_edges(5, &[(1, 2), (2, 3), (1, 5), (2, 5), (3, 5), (4, 5)]).unwrap()
}

/// All 5-subsets inducing a dart, as sorted vertex lists.
pub fn find_darts(g: &Graph) -> Vec<Vec<usize>> {
    let dart = dart_graph();
    let n = g.n();
    let mut out = Vec::new();
    if n < 5 {
        return out;
    }
    let mut combo: Vec<usize> = (1..=5).collect();
    loop {
        let (sub, _) = g.induced_subgraph(&combo).unwrap();
        if sub.edge_count() == 6 && are_isomorphic(&sub, &dart) {
            out.push(combo.clone());
        }
        // Next 5-combination in lexicographic order.
        let mut i = 5;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if combo[i] < n - (4 - i) {
                combo[i] += 1;
                for j in (i + 1)..5 {
                    combo[j] = combo[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// No odd holes and no odd antiholes.
pub fn is_perfect(g: &Graph) -> bool {
    find_odd_holes(g).is_empty() && find_odd_holes(&g.complement()).is_empty()
}

/// No holes and no antiholes of either parity.
pub fn is_weakly_chordal(g: &Graph) -> bool {
    let mut clean = for_each_hole(g, &mut |_| false);
    clean = clean && for_each_hole(&g.complement(), &mut |_| false);
    clean
}

/// First odd cycle (not necessarily induced) of length at least 5 carrying
/// fewer than two chords, if any.
pub fn meyniel_violation(g: &Graph) -> Option<Vec<usize>> {
    let mut witness = None;
    for s in 1..=g.n() {
        let mut path = vec![s];
        let mut path_mask = 1u64 << (s - 1);
        if !cycle_dfs(g, s, &mut path, &mut path_mask, &mut witness) {
            break;
        }
    }
    witness
}

/// Every odd cycle of length at least 5 has at least two chords.
pub fn is_meyniel(g: &Graph) -> bool {
    meyniel_violation(g).is_none()
}

fn cycle_dfs(
    g: &Graph,
    s: usize,
    path: &mut Vec<usize>,
    path_mask: &mut u64,
    witness: &mut Option<Vec<usize>>,
) -> bool {
    let last = *path.last().unwrap();
    let t = path.len() - 1;
    for w in bits(g.adj_mask(last)).map(|b| b + 1) {
        if w <= s || *path_mask & (1u64 << (w - 1)) != 0 {
            continue;
        }
        if t >= 1 && g.has_edge(w, s) && t >= 3 && path[1] < w {
            let len = t + 2;
            if len >= 5 && len % 2 == 1 {
                let mask = *path_mask | (1u64 << (w - 1));
                if chord_count(g, mask, len) < 2 {
                    path.push(w);
                    *witness = Some(path.clone());
                    path.pop();
                    return false;
                }
            }
        }
        path.push(w);
        *path_mask |= 1u64 << (w - 1);
        let keep = cycle_dfs(g, s, path, path_mask, witness);
        *path_mask &= !(1u64 << (w - 1));
        path.pop();
        if !keep {
            return false;
        }
    }
    true
}

fn chord_count(g: &Graph, cycle_mask: u64, len: usize) -> usize {
    let mut edges = 0usize;
    for v in bits(cycle_mask) {
        edges += (g.adj_mask(v + 1) & cycle_mask).count_ones() as usize;
    }
    edges / 2 - len
}

/// Searches for a vertex order with no induced four-vertex path whose two
/// endpoints both precede their middle neighbors. Returns the vertices from
/// smallest to largest, or None after exhausting all orders.
pub fn is_perfectly_orderable(g: &Graph) -> Option<Vec<usize>> {
    let constraints = p4_constraints(g);
    let n = g.n();
    let mut rank = vec![usize::MAX; n + 1];
    let mut order = Vec::with_capacity(n);
    if order_dfs(n, &constraints, &mut rank, &mut order) {
        Some(order)
    } else {
        None
    }
}

/// Each induced path a-b-c-d, one entry per unordered path, as (a, b, c, d)
/// with a < d. The forbidden pattern is a before b and d before c.
fn p4_constraints(g: &Graph) -> Vec<(usize, usize, usize, usize)> {
    let mut out = Vec::new();
    for b in 1..=g.n() {
        for c in 1..=g.n() {
            if b == c || !g.has_edge(b, c) {
                continue;
            }
            for a in 1..=g.n() {
                if a == b || a == c || !g.has_edge(a, b) || g.has_edge(a, c) {
                    continue;
                }
                for d in (a + 1)..=g.n() {
                    if d == b || d == c || d == a {
                        continue;
                    }
                    if g.has_edge(c, d) && !g.has_edge(b, d) && !g.has_edge(a, d) {
                        out.push((a, b, c, d));
                    }
                }
            }
        }
    }
    out
}

fn order_dfs(
    n: usize,
    constraints: &[(usize, usize, usize, usize)],
    rank: &mut Vec<usize>,
    order: &mut Vec<usize>,
) -> bool {
    if order.len() == n {
        return true;
    }
    let next_rank = order.len();
    'candidates: for v in 1..=n {
        if rank[v] != usize::MAX {
            continue;
        }
        rank[v] = next_rank;
        order.push(v);
        // A constraint is hopeless as soon as both "endpoint before its
        // neighbor" facts are settled true; unassigned vertices always come
        // later than assigned ones.
        for &(a, b, c, d) in constraints {
            let ab = rank[a] != usize::MAX && (rank[b] == usize::MAX || rank[a] < rank[b]);
            let dc = rank[d] != usize::MAX && (rank[c] == usize::MAX || rank[d] < rank[c]);
            if ab && dc {
                rank[v] = usize::MAX;
                order.pop();
                continue 'candidates;
            }
        }
        if order_dfs(n, constraints, rank, order) {
            return true;
        }
        rank[v] = usize::MAX;
        order.pop();
    }
    false
}

/// Whether `order` (vertices smallest-first) violates any induced-P4
/// constraint of `g`.
pub fn check_perfect_order(g: &Graph, order: &[usize]) -> bool {
    let mut rank = vec![usize::MAX; g.n() + 1];
    for (i, &v) in order.iter().enumerate() {
        rank[v] = i;
    }
    if rank.iter().skip(1).any(|&r| r == usize::MAX) {
        return false;
    }
    p4_constraints(g)
        .iter()
        .all(|&(a, b, c, d)| !(rank[a] < rank[b] && rank[d] < rank[c]))
}

/// First-fit coloring along the given vertex order; returns the number of
/// colors used.
pub fn greedy_coloring(g: &Graph, order: &[usize]) -> usize {
    let mut color = vec![0usize; g.n() + 1];
    let mut used = 0usize;
    for &v in order {
        let mut taken = 0u64;
        for u in bits(g.adj_mask(v)).map(|b| b + 1) {
            if color[u] != 0 {
                taken |= 1u64 << (color[u] - 1);
            }
        }
        let c = (!taken).trailing_zeros() as usize + 1;
        color[v] = c;
        used = used.max(c);
    }
    used
}

/// Membership report across all detected classes, with one witness per
/// failed class.
#[derive(Debug, Clone)]
pub struct ClassReport {
    pub perfect: bool,
    pub weakly_chordal: bool,
    pub meyniel: bool,
    pub dart_free: bool,
    pub even_prism_free: bool,
    pub odd_prism_free: bool,
    pub perfectly_orderable: Option<Vec<usize>>,
    /// No odd holes, no antiholes, no odd prisms.
    pub everett_reed: bool,
    pub odd_hole: Option<Vec<usize>>,
    pub hole: Option<Vec<usize>>,
    pub antihole: Option<Vec<usize>>,
    pub odd_antihole: Option<Vec<usize>>,
    pub dart: Option<Vec<usize>>,
    pub odd_prism: Option<PrismWitness>,
    pub even_prism: Option<PrismWitness>,
    pub meyniel_witness: Option<Vec<usize>>,
}

pub fn everett_reed_class(g: &Graph) -> ClassReport {
    let holes = find_holes(g);
    let comp_holes = find_holes(&g.complement());
    let odd_hole = holes.iter().find(|h| h.len() % 2 == 1).cloned();
    let odd_antihole = comp_holes.iter().find(|h| h.len() % 2 == 1).cloned();
    let darts = find_darts(g);
    let odd_prisms = find_prisms(g, Parity::Odd);
    let even_prisms = find_prisms(g, Parity::Even);
    let meyniel_witness = meyniel_violation(g);
    let antihole = comp_holes.first().cloned();
    ClassReport {
        perfect: odd_hole.is_none() && odd_antihole.is_none(),
        weakly_chordal: holes.is_empty() && comp_holes.is_empty(),
        meyniel: meyniel_witness.is_none(),
        dart_free: darts.is_empty(),
        even_prism_free: even_prisms.is_empty(),
        odd_prism_free: odd_prisms.is_empty(),
        perfectly_orderable: is_perfectly_orderable(g),
        everett_reed: odd_hole.is_none() && antihole.is_none() && odd_prisms.is_empty(),
        odd_hole,
        hole: holes.first().cloned(),
        antihole,
        odd_antihole,
        dart: darts.first().cloned(),
        odd_prism: odd_prisms.into_iter().next(),
        even_prism: even_prisms.into_iter().next(),
        meyniel_witness,
    }
}

/// Re-derives every witness in the report from scratch and checks it has the
/// claimed shape inside `g`.
pub fn validate_class_report(g: &Graph, r: &ClassReport) -> Result<(), String> {
    if let Some(h) = &r.odd_hole {
        check_hole(g, h, true)?;
    }
    if let Some(h) = &r.hole {
        check_hole(g, h, false)?;
    }
    if let Some(h) = &r.antihole {
        check_hole(&g.complement(), h, false)?;
    }
    if let Some(h) = &r.odd_antihole {
        check_hole(&g.complement(), h, true)?;
    }
    if let Some(d) = &r.dart {
        let (sub, _) = g
            .induced_subgraph(d)
            .map_err(|e| format!("dart witness: {e}"))?;
        if !are_isomorphic(&sub, &dart_graph()) {
            return Err("dart witness does not induce a dart".into());
        }
    }
    if let Some(w) = &r.odd_prism {
        check_prism(g, w, Parity::Odd)?;
    }
    if let Some(w) = &r.even_prism {
        check_prism(g, w, Parity::Even)?;
    }
    if let Some(cycle) = &r.meyniel_witness {
        check_meyniel_witness(g, cycle)?;
    }
    if let Some(order) = &r.perfectly_orderable {
        if !check_perfect_order(g, order) {
            return Err("claimed perfect order violates an induced P4".into());
        }
    }
    Ok(())
}

fn check_hole(g: &Graph, cycle: &[usize], require_odd: bool) -> Result<(), String> {
    let len = cycle.len();
    if len < 5 {
        return Err(format!("hole witness has only {len} vertices"));
    }
    if require_odd && len % 2 == 0 {
        return Err("hole witness has even length".into());
    }
    let set: HashSet<usize> = cycle.iter().copied().collect();
    if set.len() != len {
        return Err("hole witness repeats a vertex".into());
    }
    for i in 0..len {
        for j in (i + 1)..len {
            let adjacent = g.has_edge(cycle[i], cycle[j]);
            let consecutive = j == i + 1 || (i == 0 && j == len - 1);
            if adjacent != consecutive {
                return Err(format!(
                    "hole witness: vertices {} and {} break the cycle shape",
                    cycle[i], cycle[j]
                ));
            }
        }
    }
    Ok(())
}

fn check_prism(g: &Graph, w: &PrismWitness, parity: Parity) -> Result<(), String> {
    for t in [&w.triangle_a, &w.triangle_b] {
        for i in 0..3 {
            for j in (i + 1)..3 {
                if !g.has_edge(t[i], t[j]) {
                    return Err("prism witness: triangle is not complete".into());
                }
            }
        }
    }
    let mut seen: HashSet<usize> = HashSet::new();
    for (i, path) in w.paths.iter().enumerate() {
        if path.len() < 2 {
            return Err("prism witness: path too short".into());
        }
        if path[0] != w.triangle_a[i] || !w.triangle_b.contains(path.last().unwrap()) {
            return Err("prism witness: path endpoints misplaced".into());
        }
        let want_odd = matches!(parity, Parity::Odd);
        if ((path.len() - 1) % 2 == 1) != want_odd {
            return Err("prism witness: path has the wrong parity".into());
        }
        for pair in path.windows(2) {
            if !g.has_edge(pair[0], pair[1]) {
                return Err("prism witness: path edge missing".into());
            }
        }
        for &v in &path[1..path.len() - 1] {
            if !seen.insert(v) || w.triangle_a.contains(&v) || w.triangle_b.contains(&v) {
                return Err("prism witness: paths overlap".into());
            }
        }
    }
    let redo = |chosen: &[Vec<usize>]| {
        let targets = [
            *w.paths[0].last().unwrap(),
            *w.paths[1].last().unwrap(),
            *w.paths[2].last().unwrap(),
        ];
        assemble_prism(g, &w.triangle_a, &targets, chosen).is_some()
    };
    if !redo(&w.paths) {
        return Err("prism witness: union carries stray edges".into());
    }
    Ok(())
}

fn check_meyniel_witness(g: &Graph, cycle: &[usize]) -> Result<(), String> {
    let len = cycle.len();
    if len < 5 || len % 2 == 0 {
        return Err("chord witness must be an odd cycle of length >= 5".into());
    }
    let mut mask = 0u64;
    for &v in cycle {
        if mask & (1u64 << (v - 1)) != 0 {
            return Err("chord witness repeats a vertex".into());
        }
        mask |= 1u64 << (v - 1);
    }
    for i in 0..len {
        if !g.has_edge(cycle[i], cycle[(i + 1) % len]) {
            return Err("chord witness is not a cycle".into());
        }
    }
    if chord_count(g, mask, len) >= 2 {
        return Err("chord witness has two or more chords".into());
    }
    Ok(())
}
