//! Simple undirected graphs with dense integer ids, plus deterministic
//! breadth-first-search trees and tree paths.

use std::collections::{HashSet, VecDeque};

use thiserror::Error;

/// Vertices are `0..n`.
pub type VertexId = usize;
/// Edge ids equal positions in the edge list handed to [`Graph::new`].
pub type EdgeId = usize;

#[derive(Debug, Error, Clone, Copy, PartialEq, Eq)]
pub enum GraphError {
    #[error("edge {0} is a loop")]
    LoopEdge(usize),
    #[error("edge {0} repeats an earlier endpoint pair")]
    ParallelEdge(usize),
    #[error("edge {0} has an endpoint out of range")]
    EndpointOutOfRange(usize),
    #[error("root vertex {0} is out of range")]
    RootOutOfRange(VertexId),
}

/// A validated simple undirected graph.
///
/// Adjacency lists are kept sorted ascending by neighbor id so that every
/// traversal in this crate visits neighbors in the same order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(VertexId, VertexId)>,
    adj: Vec<Vec<(VertexId, EdgeId)>>,
}

impl Graph {
    /// Builds a graph on `n` vertices from an edge list. Rejects loops,
    /// parallel edges, and endpoints outside `0..n`; the error names the
    /// offending position in the list.
    pub fn new(n: usize, edge_list: &[(VertexId, VertexId)]) -> Result<Self, GraphError> {
        assert!(n >= 1, "a graph needs at least one vertex");
        let mut seen = HashSet::with_capacity(edge_list.len());
        let mut adj: Vec<Vec<(VertexId, EdgeId)>> = vec![Vec::new(); n];
        for (idx, &(u, v)) in edge_list.iter().enumerate() {
            if u >= n || v >= n {
                return Err(GraphError::EndpointOutOfRange(idx));
            }
            if u == v {
                return Err(GraphError::LoopEdge(idx));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(GraphError::ParallelEdge(idx));
            }
            adj[u].push((v, idx));
            adj[v].push((u, idx));
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Self {
            n,
            edges: edge_list.to_vec(),
            adj,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Endpoints in the order given at construction.
    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.edges[e]
    }

    /// The endpoint of `e` that is not `v`. Panics if `v` is not on `e`.
    pub fn other_endpoint(&self, e: EdgeId, v: VertexId) -> VertexId {
        let (a, b) = self.edges[e];
        if v == a {
            b
        } else {
            assert_eq!(v, b, "vertex {v} is not an endpoint of edge {e}");
            a
        }
    }

    /// `(neighbor, edge)` pairs sorted ascending by neighbor id.
    pub fn adjacency(&self, v: VertexId) -> &[(VertexId, EdgeId)] {
        &self.adj[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    /// Edge ids incident to `v`, ascending.
    pub fn incident_edges(&self, v: VertexId) -> Vec<EdgeId> {
        let mut ids: Vec<EdgeId> = self.adj[v].iter().map(|&(_, e)| e).collect();
        ids.sort_unstable();
        ids
    }

    pub fn edge_between(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        self.adj[u]
            .binary_search_by(|&(w, _)| w.cmp(&v))
            .ok()
            .map(|i| self.adj[u][i].1)
    }

    /// True iff one breadth-first search from vertex 0 reaches every vertex.
    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut reached = 1;
        while let Some(u) = queue.pop_front() {
            for &(w, _) in &self.adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    queue.push_back(w);
                }
            }
        }
        reached == self.n
    }

    /// Deterministic breadth-first-search tree rooted at `root`: the frontier
    /// is processed in FIFO order, neighbors are scanned ascending, and the
    /// parent of a vertex is its first discoverer. Requires a connected graph.
    pub fn bfs_tree(&self, root: VertexId) -> Result<BfsTree, GraphError> {
        if root >= self.n {
            return Err(GraphError::RootOutOfRange(root));
        }
        let mut parent: Vec<Option<(VertexId, EdgeId)>> = vec![None; self.n];
        let mut depth = vec![usize::MAX; self.n];
        depth[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &(w, e) in &self.adj[u] {
                if depth[w] == usize::MAX {
                    depth[w] = depth[u] + 1;
                    parent[w] = Some((u, e));
                    queue.push_back(w);
                }
            }
        }
        debug_assert!(
            depth.iter().all(|&d| d != usize::MAX),
            "bfs_tree requires a connected graph"
        );
        let mut tree_edges: Vec<EdgeId> = parent.iter().flatten().map(|&(_, e)| e).collect();
        tree_edges.sort_unstable();
        Ok(BfsTree {
            root,
            parent,
            depth,
            tree_edges,
        })
    }
}

/// A rooted shortest-path tree produced by [`Graph::bfs_tree`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BfsTree {
    root: VertexId,
    parent: Vec<Option<(VertexId, EdgeId)>>,
    depth: Vec<usize>,
    tree_edges: Vec<EdgeId>,
}

impl BfsTree {
    pub fn root(&self) -> VertexId {
        self.root
    }

    /// Hop distance from the root; equals the graph distance.
    pub fn depth(&self, v: VertexId) -> usize {
        self.depth[v]
    }

    pub fn parent_vertex(&self, v: VertexId) -> Option<VertexId> {
        self.parent[v].map(|(p, _)| p)
    }

    pub fn parent_edge(&self, v: VertexId) -> Option<EdgeId> {
        self.parent[v].map(|(_, e)| e)
    }

    pub fn is_tree_edge(&self, e: EdgeId) -> bool {
        self.tree_edges.binary_search(&e).is_ok()
    }

    /// Tree edge ids, ascending.
    pub fn tree_edges(&self) -> &[EdgeId] {
        &self.tree_edges
    }

    pub fn vertex_count(&self) -> usize {
        self.depth.len()
    }

    /// Edges from `v` up to the root, in walking order; the length equals
    /// `depth(v)`.
    pub fn path_to_root(&self, v: VertexId) -> Vec<EdgeId> {
        let mut path = Vec::with_capacity(self.depth[v]);
        let mut cur = v;
        while let Some((p, e)) = self.parent[cur] {
            path.push(e);
            cur = p;
        }
        path
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::{k4, path_graph, petersen};
    use proptest::prelude::*;

    #[test]
    fn k4_has_all_six_edges_in_input_order() {
        let g = k4();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 6);
        assert_eq!(g.endpoints(0), (0, 1));
        assert_eq!(g.endpoints(5), (2, 3));
        // adjacency sorted ascending by neighbor
        assert_eq!(g.adjacency(0), &[(1, 0), (2, 1), (3, 2)]);
        assert_eq!(g.adjacency(3), &[(0, 2), (1, 4), (2, 5)]);
    }

    #[test]
    fn loops_are_rejected() {
        assert_eq!(Graph::new(2, &[(0, 0)]), Err(GraphError::LoopEdge(0)));
    }

    #[test]
    fn parallel_edges_are_rejected_in_either_orientation() {
        assert_eq!(
            Graph::new(3, &[(0, 1), (1, 0)]),
            Err(GraphError::ParallelEdge(1))
        );
    }

    #[test]
    fn endpoints_must_be_in_range() {
        assert_eq!(
            Graph::new(3, &[(0, 1), (1, 7)]),
            Err(GraphError::EndpointOutOfRange(1))
        );
    }

    #[test]
    fn connectivity() {
        assert!(k4().is_connected());
        let split = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!split.is_connected());
        let lone = Graph::new(1, &[]).unwrap();
        assert!(lone.is_connected());
    }

    #[test]
    fn bfs_on_k4_hangs_everything_off_the_root() {
        let t = k4().bfs_tree(0).unwrap();
        assert_eq!(t.depth(0), 0);
        for v in 1..4 {
            assert_eq!(t.depth(v), 1);
            assert_eq!(t.parent_vertex(v), Some(0));
        }
        assert_eq!(t.tree_edges(), &[0, 1, 2]);
    }

    #[test]
    fn bfs_on_a_path_counts_hops() {
        let g = path_graph(3);
        let t = g.bfs_tree(0).unwrap();
        assert_eq!((t.depth(0), t.depth(1), t.depth(2)), (0, 1, 2));
    }

    #[test]
    fn bfs_on_a_five_cycle_splits_at_the_far_side() {
        let g = crate::testutil::cycle_graph(5);
        let t = g.bfs_tree(0).unwrap();
        let depths: Vec<usize> = (0..5).map(|v| t.depth(v)).collect();
        assert_eq!(depths, vec![0, 1, 2, 2, 1]);
    }

    #[test]
    fn bfs_root_must_be_in_range() {
        assert_eq!(k4().bfs_tree(9), Err(GraphError::RootOutOfRange(9)));
    }

    #[test]
    fn path_to_root_walks_upward() {
        let g = path_graph(3);
        let t = g.bfs_tree(0).unwrap();
        assert_eq!(t.path_to_root(0), Vec::<EdgeId>::new());
        assert_eq!(t.path_to_root(2), vec![1, 0]);

        let t = k4().bfs_tree(0).unwrap();
        assert_eq!(t.path_to_root(3), vec![2]);
    }

    #[test]
    fn petersen_bfs_depth_is_at_most_two() {
        let g = petersen();
        for root in 0..10 {
            let t = g.bfs_tree(root).unwrap();
            assert!((0..10).all(|v| t.depth(v) <= 2));
        }
    }

    /// Plain distance computation used as an independent check on BFS depths.
    fn distances_from(g: &Graph, src: VertexId) -> Vec<usize> {
        let mut dist = vec![usize::MAX; g.vertex_count()];
        dist[src] = 0;
        let mut queue = VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            for &(w, _) in g.adjacency(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    proptest! {
        #[test]
        fn bfs_trees_are_shortest_and_deterministic(seed in 0u64..500, n in 2usize..9, extra in 0usize..6) {
            let params = crate::oracle::InstanceParams {
                n,
                extra_edges: extra.min(n * (n - 1) / 2 - (n - 1)),
                negative_fraction: 0.0,
                with_rotation: false,
                seed,
            };
            let (g, _) = crate::oracle::random_instance(&params).unwrap();
            for root in 0..g.vertex_count() {
                let t = g.bfs_tree(root).unwrap();
                let dist = distances_from(&g, root);
                for (v, &d) in dist.iter().enumerate() {
                    prop_assert_eq!(t.depth(v), d);
                    let path = t.path_to_root(v);
                    prop_assert_eq!(path.len(), t.depth(v));
                    // consecutive path edges share exactly one vertex
                    for w in path.windows(2) {
                        let (a, b) = g.endpoints(w[0]);
                        let (c, d) = g.endpoints(w[1]);
                        let shared = [a, b].iter().filter(|x| **x == c || **x == d).count();
                        prop_assert_eq!(shared, 1);
                    }
                }
                // non-tree edges never skip a level
                for e in 0..g.edge_count() {
                    if !t.is_tree_edge(e) {
                        let (u, v) = g.endpoints(e);
                        prop_assert!(t.depth(u).abs_diff(t.depth(v)) <= 1);
                    }
                }
                // two constructions agree exactly
                prop_assert_eq!(&t, &g.bfs_tree(root).unwrap());
            }
        }
    }
}
