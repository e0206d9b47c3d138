//! Exact counting and enumeration of k-cycles and induced k-cycles.
//!
//! The enumerator runs a depth-first search from each root vertex. A cycle
//! is reported exactly once, as its canonical representative: minimum
//! vertex first, and of its two cycle-neighbours the smaller one second.
//! Pruning: extension vertices must exceed the root, a per-root BFS table
//! rejects vertices that cannot reach the root in the remaining steps, and
//! at the last level the closing vertices are gathered with one mask
//! intersection instead of a recursive call.
//!
//! [`brute_force_cycle_count`] is a deliberately naive subset-and-permutation
//! oracle kept free of the optimized code path; it touches the graph only
//! through `has_edge`.

use std::ops::ControlFlow;

use itertools::Itertools;
use num::BigUint;
use rayon::prelude::*;
use serde::Serialize;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::{Distance, Graph};

/// One k-cycle as its canonical ordered vertex list.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CycleInstance {
    vertices: Vec<usize>,
}

impl CycleInstance {
    /// Canonicalize an arbitrary cyclic traversal: vertices must be distinct
    /// and consecutively adjacent (cyclically).
    pub fn from_traversal(g: &Graph, vertices: &[usize]) -> Result<Self> {
        let k = vertices.len();
        if k < 3 {
            return Err(Error::CycleLengthTooSmall(k));
        }
        let mut seen = VertexSet::empty();
        for &v in vertices {
            if v >= g.n() {
                return Err(Error::VertexOutOfRange { vertex: v, order: g.n() });
            }
            if seen.contains(v) {
                return Err(Error::NotACycle(vertices.to_vec()));
            }
            seen.insert(v);
        }
        for i in 0..k {
            if !g.has_edge(vertices[i], vertices[(i + 1) % k]) {
                return Err(Error::NotACycle(vertices.to_vec()));
            }
        }
        let pos = vertices
            .iter()
            .enumerate()
            .min_by_key(|&(_, &v)| v)
            .map(|(i, _)| i)
            .expect("nonempty");
        let fwd: Vec<usize> = (0..k).map(|i| vertices[(pos + i) % k]).collect();
        let bwd: Vec<usize> = (0..k).map(|i| vertices[(pos + k - i) % k]).collect();
        let chosen = if fwd[1] <= bwd[1] { fwd } else { bwd };
        Ok(CycleInstance { vertices: chosen })
    }

    fn from_canonical_path(path: &[usize], last: usize) -> Self {
        let mut vertices = Vec::with_capacity(path.len() + 1);
        vertices.extend_from_slice(path);
        vertices.push(last);
        CycleInstance { vertices }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.vertices.iter().copied().collect()
    }

    /// True when the cycle has no chord in `g`.
    pub fn is_induced(&self, g: &Graph) -> bool {
        let k = self.len();
        for i in 0..k {
            for j in i + 1..k {
                let consecutive = j == i + 1 || (i == 0 && j == k - 1);
                if !consecutive && g.has_edge(self.vertices[i], self.vertices[j]) {
                    return false;
                }
            }
        }
        true
    }
}

trait Sink {
    /// Receives the first k-1 path vertices and the set of valid closing
    /// vertices for them.
    fn close(&mut self, path: &[usize], candidates: VertexSet) -> ControlFlow<()>;
}

struct CountSink {
    acc: u128,
    total: BigUint,
}

impl CountSink {
    fn new() -> Self {
        CountSink { acc: 0, total: BigUint::ZERO }
    }
    fn finish(mut self) -> BigUint {
        if self.acc > 0 {
            self.total += BigUint::from(self.acc);
        }
        self.total
    }
}

impl Sink for CountSink {
    fn close(&mut self, _path: &[usize], candidates: VertexSet) -> ControlFlow<()> {
        let add = candidates.len() as u128;
        match self.acc.checked_add(add) {
            Some(acc) => self.acc = acc,
            None => {
                self.total += BigUint::from(self.acc);
                self.acc = add;
            }
        }
        ControlFlow::Continue(())
    }
}

struct VisitSink<'a, F: FnMut(&CycleInstance) -> ControlFlow<()>> {
    visit: &'a mut F,
}

impl<F: FnMut(&CycleInstance) -> ControlFlow<()>> Sink for VisitSink<'_, F> {
    fn close(&mut self, path: &[usize], candidates: VertexSet) -> ControlFlow<()> {
        for w in candidates.iter() {
            let instance = CycleInstance::from_canonical_path(path, w);
            (self.visit)(&instance)?;
        }
        ControlFlow::Continue(())
    }
}

fn search_root<S: Sink>(g: &Graph, k: usize, induced: bool, root: usize, sink: &mut S) -> ControlFlow<()> {
    let allowed = VertexSet::above(root) | VertexSet::singleton(root);
    let dist = g.bfs_within(root, &allowed);

    // dist_le[d] = vertices within BFS distance d of the root
    let mut dist_le = vec![VertexSet::empty(); k + 1];
    for (v, d) in dist.iter().enumerate() {
        if let Distance::Finite(dv) = d {
            if *dv <= k {
                dist_le[*dv].insert(v);
            }
        }
    }
    for d in 1..=k {
        dist_le[d] = dist_le[d] | dist_le[d - 1];
    }

    let mut path = vec![root];
    // everything at or below the root counts as spent
    let visited = VertexSet::full(root + 1);
    extend(
        g,
        k,
        induced,
        &dist_le,
        &mut path,
        visited,
        VertexSet::empty(),
        VertexSet::empty(),
        sink,
    )
}

#[allow(clippy::too_many_arguments)]
fn extend<S: Sink>(
    g: &Graph,
    k: usize,
    induced: bool,
    dist_le: &[VertexSet],
    path: &mut Vec<usize>,
    visited: VertexSet,
    nf_all: VertexSet,   // union of N(p_i) for i <= t-2: forbidden for interior extension
    nf_inner: VertexSet, // union of N(p_i) for 1 <= i <= t-2: forbidden for the closing vertex
    sink: &mut S,
) -> ControlFlow<()> {
    let t = path.len();
    let cur = *path.last().expect("path holds the root");
    let root = path[0];

    if t == k - 1 {
        let mut cand = *g.neighbors(cur) & *g.neighbors(root);
        cand = cand.minus(visited);
        cand &= VertexSet::above(path[1]);
        if induced {
            cand = cand.minus(nf_inner);
        }
        return sink.close(path, cand);
    }

    let mut cand = (*g.neighbors(cur)).minus(visited);
    cand &= dist_le[k - t];
    if induced {
        cand = cand.minus(nf_all);
    }

    let nf_all_next = nf_all | *g.neighbors(cur);
    let nf_inner_next = if t >= 2 {
        nf_inner | *g.neighbors(cur)
    } else {
        nf_inner
    };
    for w in cand.iter() {
        let mut visited_next = visited;
        visited_next.insert(w);
        path.push(w);
        let flow = extend(
            g,
            k,
            induced,
            dist_le,
            path,
            visited_next,
            nf_all_next,
            nf_inner_next,
            sink,
        );
        path.pop();
        flow?;
    }
    ControlFlow::Continue(())
}

/// Visit every k-cycle of `g` exactly once, in lexicographic order of the
/// canonical representative. With `induced_only`, chordless cycles only.
/// The visitor may stop the stream early by returning
/// [`ControlFlow::Break`].
pub fn enumerate_cycles<F>(g: &Graph, k: usize, induced_only: bool, mut visit: F) -> Result<()>
where
    F: FnMut(&CycleInstance) -> ControlFlow<()>,
{
    if k < 3 {
        return Err(Error::CycleLengthTooSmall(k));
    }
    if k > g.n() {
        return Ok(());
    }
    let mut sink = VisitSink { visit: &mut visit };
    for root in 0..g.n() {
        if search_root(g, k, induced_only, root, &mut sink).is_break() {
            break;
        }
    }
    Ok(())
}

fn count_mode(g: &Graph, k: usize, induced: bool) -> BigUint {
    if k > g.n() {
        return BigUint::ZERO;
    }
    (0..g.n())
        .into_par_iter()
        .map(|root| {
            let mut sink = CountSink::new();
            let _ = search_root(g, k, induced, root, &mut sink);
            sink.finish()
        })
        .reduce(|| BigUint::ZERO, |a, b| a + b)
}

/// Number of k-cycle subgraphs of `g`.
pub fn count_cycles(g: &Graph, k: usize) -> Result<BigUint> {
    if k < 3 {
        return Err(Error::CycleLengthTooSmall(k));
    }
    Ok(count_mode(g, k, false))
}

/// Number of chordless k-cycle subgraphs of `g`.
pub fn count_induced_cycles(g: &Graph, k: usize) -> Result<BigUint> {
    if k < 3 {
        return Err(Error::CycleLengthTooSmall(k));
    }
    Ok(count_mode(g, k, true))
}

/// First induced `len`-cycle in canonical order, if any.
pub fn find_induced_cycle(g: &Graph, len: usize) -> Result<Option<CycleInstance>> {
    let mut found = None;
    enumerate_cycles(g, len, true, |c| {
        found = Some(c.clone());
        ControlFlow::Break(())
    })?;
    Ok(found)
}

/// Does some induced `len`-cycle pass through `v`?
pub(crate) fn exists_induced_cycle_through(g: &Graph, v: usize, len: usize) -> bool {
    // relabel v <-> 0: every cycle through the new vertex 0 has it as its
    // minimum, so rooting the search at 0 alone sees exactly those cycles
    let mut perm: Vec<usize> = (0..g.n()).collect();
    perm.swap(0, v);
    let h = g.relabeled(&perm);
    struct Stop(bool);
    impl Sink for Stop {
        fn close(&mut self, _path: &[usize], candidates: VertexSet) -> ControlFlow<()> {
            if candidates.is_empty() {
                ControlFlow::Continue(())
            } else {
                self.0 = true;
                ControlFlow::Break(())
            }
        }
    }
    let mut sink = Stop(false);
    let _ = search_root(&h, len, true, 0, &mut sink);
    sink.0
}

/// Subset-and-permutation oracle: iterates all k-subsets of vertices and
/// counts Hamiltonian cycles of the induced subgraph, checking
/// chordlessness pairwise when `induced_only` is set. Feasible up to about
/// 14 vertices.
pub fn brute_force_cycle_count(g: &Graph, k: usize, induced_only: bool) -> Result<BigUint> {
    if k < 3 {
        return Err(Error::CycleLengthTooSmall(k));
    }
    let n = g.n();
    let mut count = 0u64;
    for subset in (0..n).combinations(k) {
        let first = subset[0];
        for perm in subset[1..].iter().copied().permutations(k - 1) {
            if perm[0] > perm[k - 2] {
                continue; // fix one direction per cyclic sequence
            }
            let mut cycle = Vec::with_capacity(k);
            cycle.push(first);
            cycle.extend(perm);
            let closed = (0..k).all(|i| g.has_edge(cycle[i], cycle[(i + 1) % k]));
            if !closed {
                continue;
            }
            if induced_only {
                let mut chordless = true;
                'chords: for i in 0..k {
                    for j in i + 1..k {
                        let consecutive = j == i + 1 || (i == 0 && j == k - 1);
                        if !consecutive && g.has_edge(cycle[i], cycle[j]) {
                            chordless = false;
                            break 'chords;
                        }
                    }
                }
                if !chordless {
                    continue;
                }
            }
            count += 1;
        }
    }
    Ok(BigUint::from(count))
}

/// A 6-vertex subset inducing exactly a hexagon plus one or two antipodal
/// chords.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct C6DiagonalWitness {
    pub hexagon: [usize; 6],
    pub diagonals: Vec<(usize, usize)>,
}

fn c6_pattern_in_subset(g: &Graph, subset: &[usize]) -> Option<C6DiagonalWitness> {
    debug_assert_eq!(subset.len(), 6);
    let mut induced = Vec::new();
    for i in 0..6 {
        for j in i + 1..6 {
            if g.has_edge(subset[i], subset[j]) {
                induced.push((subset[i], subset[j]));
            }
        }
    }
    if induced.len() < 7 || induced.len() > 8 {
        return None;
    }
    let norm = |u: usize, v: usize| if u < v { (u, v) } else { (v, u) };
    for perm in subset[1..].iter().copied().permutations(5) {
        if perm[0] > perm[4] {
            continue;
        }
        let mut hex = [subset[0], 0, 0, 0, 0, 0];
        hex[1..].copy_from_slice(&perm);
        if !(0..6).all(|i| g.has_edge(hex[i], hex[(i + 1) % 6])) {
            continue;
        }
        let cycle_edges: Vec<(usize, usize)> =
            (0..6).map(|i| norm(hex[i], hex[(i + 1) % 6])).collect();
        let antipodal: Vec<(usize, usize)> =
            (0..3).map(|i| norm(hex[i], hex[i + 3])).collect();
        let extras: Vec<(usize, usize)> = induced
            .iter()
            .copied()
            .filter(|e| !cycle_edges.contains(e))
            .collect();
        if (1..=2).contains(&extras.len()) && extras.iter().all(|e| antipodal.contains(e)) {
            return Some(C6DiagonalWitness {
                hexagon: hex,
                diagonals: extras,
            });
        }
    }
    None
}

/// Search all 6-vertex subsets for a hexagon carrying exactly one or two
/// main diagonals and nothing else.
pub fn has_induced_c6_with_diagonals(g: &Graph) -> Option<C6DiagonalWitness> {
    for subset in (0..g.n()).combinations(6) {
        if let Some(w) = c6_pattern_in_subset(g, &subset) {
            return Some(w);
        }
    }
    None
}

/// Variant restricted to subsets containing `v`; used by the incremental
/// generation filter.
pub(crate) fn has_c6_diagonal_pattern_with(g: &Graph, v: usize) -> bool {
    let others: Vec<usize> = (0..g.n()).filter(|&u| u != v).collect();
    for mut subset in others.into_iter().combinations(5) {
        subset.push(v);
        subset.sort_unstable();
        if c6_pattern_in_subset(g, &subset).is_some() {
            return true;
        }
    }
    false
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum ObservationViolation {
    InducedCycle(CycleInstance),
    C6WithDiagonals(C6DiagonalWitness),
}

#[derive(Clone, Debug, Serialize)]
pub struct ObservationCheck {
    pub k: usize,
    pub holds: bool,
    pub violation: Option<ObservationViolation>,
}

/// Class membership test for even k >= 8: no induced triangle, no induced
/// cycle of length 5..=k-1, and no hexagon with one or two main diagonals.
pub fn observation_class_check(g: &Graph, k: usize) -> Result<ObservationCheck> {
    if k < 8 || k % 2 != 0 {
        return Err(Error::BadObservationLength(k));
    }
    for len in std::iter::once(3).chain(5..k) {
        if let Some(c) = find_induced_cycle(g, len)? {
            return Ok(ObservationCheck {
                k,
                holds: false,
                violation: Some(ObservationViolation::InducedCycle(c)),
            });
        }
    }
    if let Some(w) = has_induced_c6_with_diagonals(g) {
        return Ok(ObservationCheck {
            k,
            holds: false,
            violation: Some(ObservationViolation::C6WithDiagonals(w)),
        });
    }
    Ok(ObservationCheck {
        k,
        holds: true,
        violation: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::BlowupSpec;
    use rand::{Rng, SeedableRng};

    fn petersen() -> Graph {
        Graph::from_edges(
            10,
            &[
                (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
                (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
                (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
            ],
        )
        .unwrap()
    }

    fn blowup_cycle(m: usize, t: usize) -> Graph {
        BlowupSpec::new(Graph::cycle(m).unwrap(), vec![t; m]).unwrap().build().unwrap()
    }

    #[test]
    fn enumerate_c7_itself() {
        let c7 = Graph::cycle(7).unwrap();
        let mut seen = Vec::new();
        enumerate_cycles(&c7, 7, false, |c| {
            seen.push(c.clone());
            ControlFlow::Continue(())
        })
        .unwrap();
        assert_eq!(seen.len(), 1);
        assert_eq!(seen[0].vertices(), &[0, 1, 2, 3, 4, 5, 6]);
    }

    #[test]
    fn k4_triangles_and_chorded_squares() {
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(count_cycles(&k4, 3).unwrap(), 4u32.into());
        assert_eq!(count_cycles(&k4, 4).unwrap(), 3u32.into());
        assert_eq!(count_induced_cycles(&k4, 4).unwrap(), 0u32.into());
        assert!(count_cycles(&k4, 2).is_err());
    }

    #[test]
    fn counts_on_blowups_and_petersen() {
        assert_eq!(count_cycles(&blowup_cycle(7, 2), 7).unwrap(), 128u32.into());
        assert_eq!(count_cycles(&petersen(), 5).unwrap(), 12u32.into());
        // bipartite graph has no odd cycles
        let b = Graph::complete_bipartite(4, 4).unwrap();
        assert_eq!(count_cycles(&b, 5).unwrap(), 0u32.into());
        assert_eq!(count_cycles(&b, 7).unwrap(), 0u32.into());
    }

    #[test]
    fn petersen_odd_girth_from_oracle() {
        // no triangles, twelve 5-cycles: shortest odd cycle has length 5
        let p = petersen();
        assert_eq!(brute_force_cycle_count(&p, 3, false).unwrap(), 0u32.into());
        assert_eq!(brute_force_cycle_count(&p, 5, false).unwrap(), 12u32.into());
        assert_eq!(p.odd_girth(), crate::graph::OddGirth::Finite(5));
    }

    #[test]
    fn induced_counts() {
        assert_eq!(count_induced_cycles(&Graph::cycle(7).unwrap(), 7).unwrap(), 1u32.into());
        assert_eq!(
            count_induced_cycles(&blowup_cycle(8, 2), 8).unwrap(),
            256u32.into()
        );
    }

    #[test]
    fn induced_blowup_c8_matches_bruteforce() {
        let g = blowup_cycle(8, 2);
        assert_eq!(
            brute_force_cycle_count(&g, 8, true).unwrap(),
            256u32.into()
        );
    }

    #[test]
    fn brute_force_pins() {
        assert_eq!(
            brute_force_cycle_count(&Graph::cycle(7).unwrap(), 7, false).unwrap(),
            1u32.into()
        );
        // (5-1)!/2 Hamiltonian 5-cycles in K5
        assert_eq!(
            brute_force_cycle_count(&Graph::complete(5).unwrap(), 5, false).unwrap(),
            12u32.into()
        );
        assert_eq!(
            brute_force_cycle_count(&Graph::empty(6).unwrap(), 4, false).unwrap(),
            0u32.into()
        );
    }

    #[test]
    fn oracle_equivalence_random_graphs() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(12345);
        for _ in 0..40 {
            let n = rng.random_range(3..=9);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.random_bool(0.45) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::from_edges(n, &edges).unwrap();
            for k in 3..=n {
                assert_eq!(
                    count_cycles(&g, k).unwrap(),
                    brute_force_cycle_count(&g, k, false).unwrap(),
                    "plain n={n} k={k} edges={edges:?}"
                );
                assert_eq!(
                    count_induced_cycles(&g, k).unwrap(),
                    brute_force_cycle_count(&g, k, true).unwrap(),
                    "induced n={n} k={k} edges={edges:?}"
                );
            }
        }
    }

    #[test]
    fn blowup_product_law() {
        // every k-cycle of a k-cycle blow-up takes one vertex per blob
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(6);
        for k in [5usize, 7, 9] {
            for _ in 0..12 {
                let mut blobs = vec![1usize; k];
                let budget = 12 - k;
                for _ in 0..budget {
                    let i = rng.random_range(0..k);
                    blobs[i] += 1;
                }
                let g = BlowupSpec::new(Graph::cycle(k).unwrap(), blobs.clone())
                    .unwrap()
                    .build()
                    .unwrap();
                let expected: u64 = blobs.iter().map(|&b| b as u64).product();
                assert_eq!(
                    count_cycles(&g, k).unwrap(),
                    BigUint::from(expected),
                    "k={k} blobs={blobs:?}"
                );
            }
        }
    }

    #[test]
    fn canonical_uniqueness_and_order() {
        let g = blowup_cycle(5, 2);
        let mut seen = std::collections::HashSet::new();
        let mut previous: Option<Vec<usize>> = None;
        enumerate_cycles(&g, 5, false, |c| {
            assert!(seen.insert(c.vertices().to_vec()), "duplicate {c:?}");
            // canonical head: minimum first, smaller neighbour second
            let min = *c.vertices().iter().min().unwrap();
            assert_eq!(c.vertices()[0], min);
            assert!(c.vertices()[1] < c.vertices()[c.len() - 1]);
            if let Some(p) = &previous {
                assert!(p < &c.vertices().to_vec(), "not lexicographic");
            }
            previous = Some(c.vertices().to_vec());
            ControlFlow::Continue(())
        })
        .unwrap();
        assert_eq!(seen.len(), 32);
    }

    #[test]
    fn induced_equals_plain_at_high_odd_girth() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(77);
        for _ in 0..20 {
            // random subgraphs of a C7 blow-up keep odd girth >= 7
            let g0 = blowup_cycle(7, 2);
            let mut g = g0.clone();
            for (u, v) in g0.edges() {
                if rng.random_bool(0.2) {
                    g = g.with_edge_toggled(u, v).unwrap();
                }
            }
            assert!(g.odd_girth().at_least(7));
            assert_eq!(
                count_cycles(&g, 7).unwrap(),
                count_induced_cycles(&g, 7).unwrap()
            );
        }
    }

    #[test]
    fn from_traversal_canonicalizes() {
        let c7 = Graph::cycle(7).unwrap();
        let c = CycleInstance::from_traversal(&c7, &[3, 4, 5, 6, 0, 1, 2]).unwrap();
        assert_eq!(c.vertices(), &[0, 1, 2, 3, 4, 5, 6]);
        let r = CycleInstance::from_traversal(&c7, &[3, 2, 1, 0, 6, 5, 4]).unwrap();
        assert_eq!(r.vertices(), &[0, 1, 2, 3, 4, 5, 6]);
        assert!(CycleInstance::from_traversal(&c7, &[0, 1, 2]).is_err());
        assert!(CycleInstance::from_traversal(&c7, &[0, 1, 2, 3, 4, 5, 5]).is_err());
    }

    #[test]
    fn early_stop_is_respected() {
        let g = Graph::complete(6).unwrap();
        let mut seen = 0;
        enumerate_cycles(&g, 3, false, |_| {
            seen += 1;
            if seen == 5 {
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        })
        .unwrap();
        assert_eq!(seen, 5);
    }

    #[test]
    fn hexagon_diagonal_patterns() {
        let mut c6_plus = Graph::cycle(6).unwrap();
        c6_plus = c6_plus.with_edge_toggled(0, 3).unwrap();
        let w = has_induced_c6_with_diagonals(&c6_plus).unwrap();
        assert_eq!(w.diagonals, vec![(0, 3)]);

        assert!(has_induced_c6_with_diagonals(&Graph::cycle(6).unwrap()).is_none());
        // K33 induces a hexagon with all three diagonals
        assert!(has_induced_c6_with_diagonals(&Graph::complete_bipartite(3, 3).unwrap()).is_none());

        let two_diag = Graph::cycle(6).unwrap()
            .with_edge_toggled(0, 3)
            .unwrap()
            .with_edge_toggled(1, 4)
            .unwrap();
        let w = has_induced_c6_with_diagonals(&two_diag).unwrap();
        assert_eq!(w.diagonals.len(), 2);
    }

    #[test]
    fn observation_class_examples() {
        // The doubled C8 blow-up is NOT in the class: both vertices of two
        // adjacent blobs plus one vertex from each flanking blob induce a
        // hexagon with exactly two main diagonals (e.g. 0-2-4-3-1-14 with
        // chords (0,3) and (1,2)). Frozen from the subset-scan oracle.
        let doubled = observation_class_check(&blowup_cycle(8, 2), 8).unwrap();
        assert!(!doubled.holds);
        assert!(matches!(
            doubled.violation,
            Some(ObservationViolation::C6WithDiagonals(_))
        ));

        // the alternating blow-up avoids adjacent big blobs and passes
        let alternating = BlowupSpec::new(Graph::cycle(8).unwrap(), vec![2, 1, 2, 1, 2, 1, 2, 1])
            .unwrap()
            .build()
            .unwrap();
        let ok = observation_class_check(&alternating, 8).unwrap();
        assert!(ok.holds, "violation: {:?}", ok.violation);
        assert_eq!(count_induced_cycles(&alternating, 8).unwrap(), 16u32.into());

        let c7 = observation_class_check(&Graph::cycle(7).unwrap(), 8).unwrap();
        assert!(!c7.holds);
        assert!(matches!(
            c7.violation,
            Some(ObservationViolation::InducedCycle(ref c)) if c.len() == 7
        ));

        let k4 = observation_class_check(&Graph::complete(4).unwrap(), 8).unwrap();
        assert!(matches!(
            k4.violation,
            Some(ObservationViolation::InducedCycle(ref c)) if c.len() == 3
        ));

        assert!(observation_class_check(&Graph::empty(3).unwrap(), 7).is_err());
        assert!(observation_class_check(&Graph::empty(3).unwrap(), 6).is_err());
    }

    #[test]
    fn induced_cycle_through_vertex() {
        let c7 = Graph::cycle(7).unwrap();
        assert!(exists_induced_cycle_through(&c7, 3, 7));
        assert!(!exists_induced_cycle_through(&c7, 3, 5));
        let mut g = c7.with_vertex_appended(&VertexSet::empty()).unwrap();
        assert!(!exists_induced_cycle_through(&g, 7, 7));
        g = Graph::complete(4).unwrap();
        assert!(exists_induced_cycle_through(&g, 0, 3));
    }
}
