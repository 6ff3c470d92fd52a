//! Ground truth at desk scale: exhaustive simple-cycle enumeration,
//! reference answers computed from it, and a seeded random instance
//! generator for property tests.
//!
//! The enumeration never touches the candidate machinery, so comparing the
//! two routes is a genuine cross-check.

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::cycles::{as_single_cycle, Cycle};
use crate::embedding::{EmbeddingScheme, Parity};
use crate::graph::{EdgeId, Graph, VertexId};

/// Enumeration bound used by the reference solvers.
pub const DEFAULT_CYCLE_CAP: usize = 1_000_000;

#[derive(Debug, Error, Clone, Copy, PartialEq, Eq)]
pub enum OracleError {
    #[error("more than {0} simple cycles; raise the cap or shrink the instance")]
    CycleCapExceeded(usize),
    #[error(
        "{requested} edges requested but a simple graph on these vertices holds at most {max}"
    )]
    TooManyEdges { requested: usize, max: usize },
}

/// Every simple cycle of the graph, found once each by backtracking from its
/// smallest vertex, returned in canonical order.
pub fn enumerate_simple_cycles(g: &Graph, cap: usize) -> Result<Vec<Cycle>, OracleError> {
    let n = g.vertex_count();
    let mut cycles = Vec::new();
    let mut on_path = vec![false; n];
    let mut path: Vec<VertexId> = Vec::new();

    fn extend(
        g: &Graph,
        anchor: VertexId,
        path: &mut Vec<VertexId>,
        on_path: &mut [bool],
        cap: usize,
        out: &mut Vec<Cycle>,
    ) -> Result<(), OracleError> {
        let cur = *path.last().expect("path never empty");
        for &(w, _) in g.adjacency(cur) {
            if w == anchor && path.len() >= 3 {
                // each cycle closes twice; keep the traversal whose second
                // vertex is the smaller endpoint of the anchor
                if path[1] < cur {
                    if out.len() == cap {
                        return Err(OracleError::CycleCapExceeded(cap));
                    }
                    let mut ids: Vec<EdgeId> = path
                        .windows(2)
                        .map(|w| g.edge_between(w[0], w[1]).expect("walk edge"))
                        .collect();
                    ids.push(g.edge_between(cur, anchor).expect("closing edge"));
                    ids.sort_unstable();
                    out.push(as_single_cycle(g, &ids).expect("a closed walk is a cycle"));
                }
            } else if w > anchor && !on_path[w] {
                path.push(w);
                on_path[w] = true;
                extend(g, anchor, path, on_path, cap, out)?;
                path.pop();
                on_path[w] = false;
            }
        }
        Ok(())
    }

    for anchor in 0..n {
        path.clear();
        path.push(anchor);
        on_path[anchor] = true;
        extend(g, anchor, &mut path, &mut on_path, cap, &mut cycles)?;
        on_path[anchor] = false;
    }
    cycles.sort_unstable();
    debug_assert!(cycles.windows(2).all(|w| w[0] != w[1]));
    Ok(cycles)
}

/// Reference answer for the shortest two-sided cycle: filter the full
/// enumeration by parity and take the canonical minimum.
pub fn oracle_shortest_two_sided(
    g: &Graph,
    scheme: &EmbeddingScheme,
) -> Result<Option<Cycle>, OracleError> {
    let cycles = enumerate_simple_cycles(g, DEFAULT_CYCLE_CAP)?;
    Ok(cycles
        .into_iter()
        .find(|c| scheme.edge_set_parity(c.edge_ids()) == Parity::TwoSided))
}

/// Reference answer for the shortest even and odd cycle sets; either may be
/// empty.
pub fn oracle_shortest_parity_sets(g: &Graph) -> Result<(Vec<Cycle>, Vec<Cycle>), OracleError> {
    let cycles = enumerate_simple_cycles(g, DEFAULT_CYCLE_CAP)?;
    let pick = |even: bool| -> Vec<Cycle> {
        let shortest = cycles.iter().find(|c| c.is_even() == even).map(Cycle::len);
        match shortest {
            None => Vec::new(),
            Some(len) => cycles
                .iter()
                .filter(|c| c.is_even() == even && c.len() == len)
                .cloned()
                .collect(),
        }
    };
    Ok((pick(true), pick(false)))
}

/// Parameters for [`random_instance`]. Generation is deterministic in the
/// seed; the same params always give byte-identical instances.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InstanceParams {
    pub n: usize,
    /// Edges beyond the spanning tree, so `m = n - 1 + extra_edges`.
    pub extra_edges: usize,
    /// Probability that an edge gets a negative signature.
    pub negative_fraction: f64,
    pub with_rotation: bool,
    pub seed: u64,
}

/// A connected simple graph with a random scheme: a random recursive tree,
/// `extra_edges` distinct non-tree edges, independent signatures, and (when
/// asked) uniformly shuffled rotations.
pub fn random_instance(params: &InstanceParams) -> Result<(Graph, EmbeddingScheme), OracleError> {
    assert!(params.n >= 1);
    assert!(
        (0.0..=1.0).contains(&params.negative_fraction),
        "negative_fraction must lie in [0, 1]"
    );
    let n = params.n;
    let tree_edges = n - 1;
    let max_extra = n * (n - 1) / 2 - tree_edges;
    if params.extra_edges > max_extra {
        return Err(OracleError::TooManyEdges {
            requested: tree_edges + params.extra_edges,
            max: n * (n - 1) / 2,
        });
    }

    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let mut edges: Vec<(VertexId, VertexId)> = Vec::with_capacity(tree_edges + params.extra_edges);
    for v in 1..n {
        edges.push((rng.random_range(0..v), v));
    }

    let used: std::collections::HashSet<(usize, usize)> =
        edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
    let mut free: Vec<(VertexId, VertexId)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|p| !used.contains(p))
        .collect();
    free.shuffle(&mut rng);
    let mut extra: Vec<(VertexId, VertexId)> = free.into_iter().take(params.extra_edges).collect();
    extra.sort_unstable();
    edges.extend(extra);

    let signature: Vec<(EdgeId, i8)> = (0..edges.len())
        .map(|e| {
            let neg = params.negative_fraction > 0.0 && rng.random_bool(params.negative_fraction);
            (e, if neg { -1 } else { 1 })
        })
        .collect();

    let graph = Graph::new(n, &edges).expect("generated instances are simple by construction");

    let rotation: Option<Vec<Vec<EdgeId>>> = params.with_rotation.then(|| {
        (0..n)
            .map(|v| {
                let mut order = graph.incident_edges(v);
                order.shuffle(&mut rng);
                order
            })
            .collect()
    });

    let scheme = EmbeddingScheme::new(&graph, rotation.as_deref(), &signature)
        .expect("generated schemes pass validation");
    Ok((graph, scheme))
}

/// Outcome of cross-checking the candidate solvers against the brute-force
/// reference on one instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossCheck {
    pub two_sided_ok: bool,
    pub two_sided_solver: Option<usize>,
    pub two_sided_reference: Option<usize>,
    pub even_ok: bool,
    pub even_count: usize,
    /// The odd check only applies when the girth is odd.
    pub odd_applicable: bool,
    pub odd_ok: bool,
    pub odd_count: usize,
}

impl CrossCheck {
    pub fn all_ok(&self) -> bool {
        self.two_sided_ok && self.even_ok && (!self.odd_applicable || self.odd_ok)
    }
}

/// Runs the three solver-versus-reference comparisons on one instance.
pub fn cross_check(g: &Graph, scheme: &EmbeddingScheme) -> Result<CrossCheck, OracleError> {
    let reference = oracle_shortest_two_sided(g, scheme)?;
    let solver = crate::solvers::shortest_two_sided(g, scheme);
    let two_sided_solver = solver.as_ref().map(Cycle::len);
    let two_sided_reference = reference.as_ref().map(Cycle::len);
    let two_sided_ok = two_sided_solver == two_sided_reference;

    let (ref_even, ref_odd) = oracle_shortest_parity_sets(g)?;
    let solver_even = crate::solvers::shortest_even_cycles(g);
    let even_ok = edge_sets(&solver_even) == edge_sets(&ref_even);

    let girth_is_odd =
        !ref_odd.is_empty() && ref_even.first().is_none_or(|c| ref_odd[0].len() < c.len());
    let (odd_applicable, odd_ok, odd_count) = if girth_is_odd {
        let solver_odd = crate::solvers::shortest_odd_cycles(g);
        let ok = match &solver_odd {
            None => false,
            Some(set) => {
                edge_sets(set) == edge_sets(&ref_odd)
                    && set.iter().all(Cycle::has_fundamental_provenance)
            }
        };
        (true, ok, ref_odd.len())
    } else {
        (false, true, 0)
    };

    Ok(CrossCheck {
        two_sided_ok,
        two_sided_solver,
        two_sided_reference,
        even_ok,
        even_count: ref_even.len(),
        odd_applicable,
        odd_ok,
        odd_count,
    })
}

fn edge_sets(cycles: &[Cycle]) -> Vec<Vec<EdgeId>> {
    let mut sets: Vec<Vec<EdgeId>> = cycles.iter().map(|c| c.edge_ids().to_vec()).collect();
    sets.sort_unstable();
    sets
}
