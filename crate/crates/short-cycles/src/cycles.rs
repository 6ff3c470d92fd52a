//! Cycles as canonical edge-id sets, fundamental cycles of BFS trees, and
//! the candidate families built from them.
//!
//! The candidate family of a graph is generated in two stages: one
//! fundamental cycle per (root, cotree edge) pair over BFS trees from every
//! root, then the symmetric difference of every unordered pair of those that
//! again forms a single simple cycle. Both stages deduplicate by edge set and
//! merge provenance, so the result is a deterministic ordered set no matter
//! how many worker threads ran the scan.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use thiserror::Error;

use crate::graph::{BfsTree, EdgeId, Graph, VertexId};

#[derive(Debug, Error, Clone, Copy, PartialEq, Eq)]
pub enum CycleError {
    #[error("edge {0} is a tree edge, not a cotree edge")]
    EdgeInTree(EdgeId),
}

/// How a candidate cycle was produced. A deduplicated cycle keeps one tag
/// per way it was found.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Provenance {
    /// Fundamental cycle of the BFS tree at `root`, closed by `cotree_edge`.
    Fundamental { root: VertexId, cotree_edge: EdgeId },
    /// Symmetric difference of two fundamental candidates; the indices point
    /// into the ordered fundamental set.
    PairSum { first: usize, second: usize },
}

/// A simple cycle, stored canonically.
///
/// `edge_ids` is sorted ascending and is the identity of the cycle; the walk
/// starts at the smallest vertex and proceeds toward its smaller-id neighbor,
/// closing back on the start vertex.
#[derive(Debug, Clone)]
pub struct Cycle {
    edge_ids: Vec<EdgeId>,
    vertex_walk: Vec<VertexId>,
    provenance: Vec<Provenance>,
}

impl PartialEq for Cycle {
    fn eq(&self, other: &Self) -> bool {
        self.edge_ids == other.edge_ids
    }
}

impl Eq for Cycle {}

impl PartialOrd for Cycle {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Cycle {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.len(), &self.edge_ids).cmp(&(other.len(), &other.edge_ids))
    }
}

impl std::hash::Hash for Cycle {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.edge_ids.hash(state);
    }
}

impl fmt::Display for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.len())?;
        for v in &self.vertex_walk {
            write!(f, " {v}")?;
        }
        Ok(())
    }
}

#[allow(clippy::len_without_is_empty)] // a cycle has at least three edges
impl Cycle {
    pub fn len(&self) -> usize {
        self.edge_ids.len()
    }

    pub fn is_even(&self) -> bool {
        self.len().is_multiple_of(2)
    }

    /// Sorted ascending.
    pub fn edge_ids(&self) -> &[EdgeId] {
        &self.edge_ids
    }

    /// Closed canonical walk; first and last entries repeat the start vertex.
    pub fn vertex_walk(&self) -> &[VertexId] {
        &self.vertex_walk
    }

    /// The distinct vertices in walk order.
    pub fn vertices(&self) -> &[VertexId] {
        &self.vertex_walk[..self.len()]
    }

    pub fn provenance(&self) -> &[Provenance] {
        &self.provenance
    }

    /// True when some tag says the cycle is a fundamental cycle of a BFS tree.
    pub fn has_fundamental_provenance(&self) -> bool {
        self.provenance
            .iter()
            .any(|p| matches!(p, Provenance::Fundamental { .. }))
    }

    fn with_provenance(mut self, tag: Provenance) -> Self {
        self.provenance = vec![tag];
        self
    }
}

/// Symmetric difference of two sorted edge-id sets, sorted.
pub fn symmetric_difference(a: &[EdgeId], b: &[EdgeId]) -> Vec<EdgeId> {
    debug_assert!(a.windows(2).all(|w| w[0] < w[1]));
    debug_assert!(b.windows(2).all(|w| w[0] < w[1]));
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

/// Interprets an edge set as a single simple cycle, if it is one: nonempty,
/// connected, every touched vertex of degree exactly two. Returns the
/// canonical [`Cycle`] (no provenance) or `None`.
pub fn as_single_cycle(g: &Graph, edges: &[EdgeId]) -> Option<Cycle> {
    if edges.is_empty() {
        return None;
    }
    let mut sorted = edges.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }

    // local adjacency restricted to the edge set
    let mut local: BTreeMap<VertexId, Vec<(VertexId, EdgeId)>> = BTreeMap::new();
    for &e in &sorted {
        let (u, v) = g.endpoints(e);
        local.entry(u).or_default().push((v, e));
        local.entry(v).or_default().push((u, e));
    }
    if local.values().any(|nbrs| nbrs.len() != 2) {
        return None;
    }

    // walk from the smallest vertex toward its smaller neighbor
    let (&start, nbrs) = local.iter().next().expect("nonempty");
    let mut first = *nbrs.iter().min().expect("degree two");
    let mut walk = vec![start];
    let (mut cur, mut via) = (first.0, first.1);
    while cur != start {
        walk.push(cur);
        let nbrs = &local[&cur];
        first = if nbrs[0].1 == via { nbrs[1] } else { nbrs[0] };
        cur = first.0;
        via = first.1;
    }
    walk.push(start);

    // a disconnected union of cycles walks back early
    if walk.len() != sorted.len() + 1 {
        return None;
    }
    Some(Cycle {
        edge_ids: sorted,
        vertex_walk: walk,
        provenance: Vec::new(),
    })
}

/// The unique cycle closed by cotree edge `e` over the tree `t`: the
/// symmetric difference of the two root paths of its endpoints plus `e`.
pub fn fundamental_cycle(g: &Graph, t: &BfsTree, e: EdgeId) -> Result<Cycle, CycleError> {
    if t.is_tree_edge(e) {
        return Err(CycleError::EdgeInTree(e));
    }
    let (u, v) = g.endpoints(e);
    let mut pu = t.path_to_root(u);
    pu.sort_unstable();
    let mut pv = t.path_to_root(v);
    pv.sort_unstable();
    let mut ids = symmetric_difference(&pu, &pv);
    ids = symmetric_difference(&ids, &[e]);
    let cycle = as_single_cycle(g, &ids)
        .expect("two root paths plus their cotree edge always close one cycle");
    debug_assert!(cycle.len() <= t.depth(u) + t.depth(v) + 1);
    Ok(cycle.with_provenance(Provenance::Fundamental {
        root: t.root(),
        cotree_edge: e,
    }))
}

/// Which generation stage a candidate set came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CandidateOrigin {
    /// Fundamental cycles of BFS trees from every root.
    Fundamental,
    /// Pairwise symmetric differences of fundamental candidates.
    PairSum,
    /// Union of the two stages.
    Union,
}

/// A deduplicated, totally ordered set of candidate cycles.
#[derive(Debug, Clone, PartialEq)]
pub struct CandidateSet {
    origin: CandidateOrigin,
    cycles: Vec<Cycle>,
}

impl CandidateSet {
    fn from_cycles<I: IntoIterator<Item = Cycle>>(origin: CandidateOrigin, iter: I) -> Self {
        let mut cycles: Vec<Cycle> = iter.into_iter().collect();
        cycles.sort_unstable();
        let mut merged: Vec<Cycle> = Vec::with_capacity(cycles.len());
        for c in cycles {
            match merged.last_mut() {
                Some(last) if *last == c => last.provenance.extend(c.provenance),
                _ => merged.push(c),
            }
        }
        for c in &mut merged {
            c.provenance.sort_unstable();
            c.provenance.dedup();
        }
        Self {
            origin,
            cycles: merged,
        }
    }

    pub fn origin(&self) -> CandidateOrigin {
        self.origin
    }

    /// Ordered by (length, lexicographic edge ids).
    pub fn cycles(&self) -> &[Cycle] {
        &self.cycles
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Cycle> {
        self.cycles.iter()
    }

    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    /// Membership by edge set.
    pub fn contains_edge_set(&self, edges: &[EdgeId]) -> bool {
        self.cycles
            .binary_search_by(|c| (c.len(), c.edge_ids()).cmp(&(edges.len(), edges)))
            .is_ok()
    }

    pub fn shortest_len(&self) -> Option<usize> {
        self.cycles.first().map(Cycle::len)
    }
}

/// Fundamental cycles of the BFS trees rooted at every vertex, deduplicated.
/// Before deduplication there are exactly `n * (m - n + 1)` of them on a
/// connected graph.
pub fn fundamental_candidates(g: &Graph) -> CandidateSet {
    let per_root: Vec<Vec<Cycle>> = (0..g.vertex_count())
        .into_par_iter()
        .map(|root| {
            let t = g.bfs_tree(root).expect("root is in range");
            (0..g.edge_count())
                .filter(|&e| !t.is_tree_edge(e))
                .map(|e| fundamental_cycle(g, &t, e).expect("e is a cotree edge"))
                .collect()
        })
        .collect();
    CandidateSet::from_cycles(CandidateOrigin::Fundamental, per_root.into_iter().flatten())
}

/// Symmetric differences of every unordered pair of fundamental candidates
/// that form a single simple cycle. Pairs from the same root tree count too.
/// The scan visits all pairs without pruning, costing O(k^2 * m) for k
/// fundamental candidates; k is at most n(m - n + 1).
pub fn pair_sum_candidates(g: &Graph, fundamental: &CandidateSet) -> CandidateSet {
    debug_assert_eq!(fundamental.origin(), CandidateOrigin::Fundamental);
    let base = fundamental.cycles();
    let per_first: Vec<Vec<Cycle>> = (0..base.len())
        .into_par_iter()
        .map(|i| {
            let mut found = Vec::new();
            for j in i + 1..base.len() {
                let ids = symmetric_difference(base[i].edge_ids(), base[j].edge_ids());
                if let Some(c) = as_single_cycle(g, &ids) {
                    found.push(c.with_provenance(Provenance::PairSum {
                        first: i,
                        second: j,
                    }));
                }
            }
            found
        })
        .collect();
    CandidateSet::from_cycles(CandidateOrigin::PairSum, per_first.into_iter().flatten())
}

/// Both candidate stages and their union.
#[derive(Debug, Clone, PartialEq)]
pub struct CandidateFamily {
    pub fundamental: CandidateSet,
    pub pair_sums: CandidateSet,
    pub all: CandidateSet,
}

/// Generates the full candidate family of a connected graph.
pub fn candidate_cycles(g: &Graph) -> CandidateFamily {
    let fundamental = fundamental_candidates(g);
    let pair_sums = pair_sum_candidates(g, &fundamental);
    let all = CandidateSet::from_cycles(
        CandidateOrigin::Union,
        fundamental.iter().chain(pair_sums.iter()).cloned(),
    );
    CandidateFamily {
        fundamental,
        pair_sums,
        all,
    }
}
