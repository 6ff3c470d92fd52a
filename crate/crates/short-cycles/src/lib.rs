//! Shortest-cycle search in embedded graphs.
//!
//! The candidate family of a connected graph consists of the fundamental
//! cycles of breadth-first-search trees rooted at every vertex, plus every
//! symmetric difference of two of those that again forms a single simple
//! cycle. Scanning that family answers, exactly and in polynomial time:
//!
//! * the shortest two-sided cycle of a graph with an edge signature,
//! * all shortest even cycles,
//! * all shortest odd cycles whenever the girth is odd, and
//! * a shortest contractible cycle of a projective-planar embedding, where
//!   contractible and two-sided coincide.
//!
//! [`oracle`] holds a brute-force reference implementation used to verify
//! all of the above on small instances, plus a seeded instance generator.
//! [`io`] defines the text instance format and the report serializations
//! behind the `short-cycles` command-line tool.

pub mod cycles;
pub mod embedding;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod solvers;

pub use cycles::{
    as_single_cycle, candidate_cycles, fundamental_candidates, fundamental_cycle,
    pair_sum_candidates, symmetric_difference, CandidateFamily, CandidateOrigin, CandidateSet,
    Cycle, CycleError, Provenance,
};
pub use embedding::{Dart, EmbeddingScheme, FaceSet, Parity, SchemeError, Sign, Surface};
pub use graph::{BfsTree, EdgeId, Graph, GraphError, VertexId};
pub use io::{parse_instance, serialize_instance, serialize_report, Format, IoError};
pub use oracle::{
    cross_check, enumerate_simple_cycles, oracle_shortest_parity_sets, oracle_shortest_two_sided,
    random_instance, CrossCheck, InstanceParams, OracleError, DEFAULT_CYCLE_CAP,
};
pub use solvers::{
    girth, is_isometric_cycle, run_query, shortest_contractible_projective, shortest_even_cycles,
    shortest_odd_cycles, shortest_two_sided, Outcome, Query, SolverError, SolverReport,
};

#[cfg(test)]
pub(crate) mod testutil {
    use crate::embedding::EmbeddingScheme;
    use crate::graph::{EdgeId, Graph, VertexId};

    pub fn triangle() -> Graph {
        Graph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    /// Edges in pair order: (0,1) (0,2) (0,3) (1,2) (1,3) (2,3).
    pub fn k4() -> Graph {
        complete_graph(4)
    }

    pub fn complete_graph(n: usize) -> Graph {
        let edges: Vec<(VertexId, VertexId)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        Graph::new(n, &edges).unwrap()
    }

    pub fn path_graph(n: usize) -> Graph {
        let edges: Vec<(VertexId, VertexId)> = (1..n).map(|v| (v - 1, v)).collect();
        Graph::new(n, &edges).unwrap()
    }

    pub fn cycle_graph(n: usize) -> Graph {
        let mut edges: Vec<(VertexId, VertexId)> = (1..n).map(|v| (v - 1, v)).collect();
        edges.push((0, n - 1));
        Graph::new(n, &edges).unwrap()
    }

    /// Outer 5-cycle 0..4, spokes to 5..9, inner pentagram.
    pub fn petersen() -> Graph {
        Graph::new(
            10,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (0, 4),
                (0, 5),
                (1, 6),
                (2, 7),
                (3, 8),
                (4, 9),
                (5, 7),
                (7, 9),
                (6, 9),
                (6, 8),
                (5, 8),
            ],
        )
        .unwrap()
    }

    /// A counterclockwise planar rotation system for [`k4`], all edges +1:
    /// vertex 0 in the middle of the triangle 1-2-3.
    pub fn k4_planar_rotation(g: &Graph) -> EmbeddingScheme {
        let rot: Vec<Vec<EdgeId>> = vec![
            vec![0, 1, 2], // at 0: edges to 1, 2, 3
            vec![3, 0, 4], // at 1: edges to 2, 0, 3
            vec![5, 1, 3], // at 2: edges to 3, 0, 1
            vec![4, 2, 5], // at 3: edges to 1, 0, 2
        ];
        let signature: Vec<(EdgeId, i8)> = (0..6).map(|e| (e, 1)).collect();
        EmbeddingScheme::new(g, Some(&rot), &signature).unwrap()
    }
}
