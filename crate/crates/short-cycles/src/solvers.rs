//! Shortest-cycle queries answered by scanning the candidate family.
//!
//! The candidate family is exhaustive for these queries: it contains a
//! shortest two-sided cycle whenever one exists, every shortest even cycle,
//! and - when the girth is odd - every shortest odd cycle (those already
//! among the fundamental candidates). On a projective-planar embedding the
//! two-sided cycles are exactly the contractible ones, so the same scan
//! finds a shortest contractible cycle there.

use std::fmt;
use std::time::{Duration, Instant};

use thiserror::Error;

use crate::cycles::{candidate_cycles, CandidateFamily, Cycle};
use crate::embedding::{EmbeddingScheme, Parity, SchemeError, Surface};
use crate::graph::Graph;

#[derive(Debug, Error, Clone, Copy, PartialEq, Eq)]
pub enum SolverError {
    #[error("the embedding is not in the projective plane ({found})")]
    NotProjectivePlane { found: Surface },
    #[error(transparent)]
    Scheme(#[from] SchemeError),
}

/// Shortest two-sided cycle under the scheme's signature, canonical minimum
/// by (length, edge ids). `None` certifies that the graph has no two-sided
/// cycle at all.
pub fn shortest_two_sided(g: &Graph, scheme: &EmbeddingScheme) -> Option<Cycle> {
    two_sided_from(&candidate_cycles(g), scheme)
}

/// Every shortest even cycle of the graph; empty when no even cycle exists.
pub fn shortest_even_cycles(g: &Graph) -> Vec<Cycle> {
    even_from(&candidate_cycles(g))
}

/// Every shortest odd cycle, available only when the girth is odd; `None`
/// when the graph is acyclic or its girth is even, where no complete answer
/// is certified.
pub fn shortest_odd_cycles(g: &Graph) -> Option<Vec<Cycle>> {
    odd_from(&candidate_cycles(g))
}

/// Length of a shortest cycle; `None` for trees.
pub fn girth(g: &Graph) -> Option<usize> {
    candidate_cycles(g).all.shortest_len()
}

/// Shortest contractible cycle of a projective-planar embedding, which is
/// its shortest two-sided cycle. Fails unless the scheme's surface is the
/// projective plane; returns `None` when every cycle is one-sided (hence
/// noncontractible).
pub fn shortest_contractible_projective(
    g: &Graph,
    scheme: &EmbeddingScheme,
) -> Result<Option<Cycle>, SolverError> {
    let surface = scheme.euler_genus(g)?;
    if !surface.is_projective_plane() {
        return Err(SolverError::NotProjectivePlane { found: surface });
    }
    Ok(shortest_two_sided(g, scheme))
}

/// True iff distance along the cycle equals graph distance for every vertex
/// pair of the cycle. A failing pair means the cycle has a shortcut through
/// the rest of the graph.
pub fn is_isometric_cycle(g: &Graph, cycle: &Cycle) -> bool {
    let verts = cycle.vertices();
    let len = cycle.len();
    for (i, &x) in verts.iter().enumerate() {
        let tree = g.bfs_tree(x).expect("cycle vertices are in range");
        for (j, &y) in verts.iter().enumerate().skip(i + 1) {
            let around = (j - i).min(len - (j - i));
            if around != tree.depth(y) {
                return false;
            }
        }
    }
    true
}

fn two_sided_from(family: &CandidateFamily, scheme: &EmbeddingScheme) -> Option<Cycle> {
    family
        .all
        .iter()
        .find(|c| scheme.edge_set_parity(c.edge_ids()) == Parity::TwoSided)
        .cloned()
}

fn even_from(family: &CandidateFamily) -> Vec<Cycle> {
    let shortest = family.all.iter().find(|c| c.is_even()).map(Cycle::len);
    match shortest {
        None => Vec::new(),
        Some(len) => family
            .all
            .iter()
            .filter(|c| c.len() == len && c.is_even())
            .cloned()
            .collect(),
    }
}

fn odd_from(family: &CandidateFamily) -> Option<Vec<Cycle>> {
    let girth = family.all.shortest_len()?;
    if girth % 2 == 0 {
        return None;
    }
    Some(
        family
            .fundamental
            .iter()
            .filter(|c| c.len() == girth)
            .cloned()
            .collect(),
    )
}

/// The query kinds the command line exposes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Query {
    TwoSided,
    Even,
    Odd,
    Girth,
    ContractibleProjective,
}

impl Query {
    pub fn name(self) -> &'static str {
        match self {
            Query::TwoSided => "twosided",
            Query::Even => "even",
            Query::Odd => "odd",
            Query::Girth => "girth",
            Query::ContractibleProjective => "contractible",
        }
    }
}

impl fmt::Display for Query {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Sizes of the candidate sets a query scanned.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CandidateCounts {
    pub fundamental: usize,
    pub pair_sum: usize,
    pub total: usize,
}

/// A result cycle together with its sidedness under the query's scheme.
#[derive(Debug, Clone, PartialEq)]
pub struct ReportedCycle {
    pub cycle: Cycle,
    pub parity: Parity,
}

/// What a query produced: cycles, or a certified empty answer with the
/// reason spelled out.
#[derive(Debug, Clone, PartialEq)]
pub enum Outcome {
    Found(Vec<ReportedCycle>),
    None { reason: &'static str },
}

/// One query run: outcome, candidate-set sizes, and wall time. The wall time
/// never appears in serialized output.
#[derive(Debug, Clone)]
pub struct SolverReport {
    pub query: Query,
    pub outcome: Outcome,
    pub counts: CandidateCounts,
    pub elapsed: Duration,
}

/// Runs one query end to end over a freshly generated candidate family.
pub fn run_query(
    g: &Graph,
    scheme: &EmbeddingScheme,
    query: Query,
) -> Result<SolverReport, SolverError> {
    let start = Instant::now();
    if query == Query::ContractibleProjective {
        let surface = scheme.euler_genus(g)?;
        if !surface.is_projective_plane() {
            return Err(SolverError::NotProjectivePlane { found: surface });
        }
    }
    let family = candidate_cycles(g);
    let report = |cycles: Vec<Cycle>| -> Vec<ReportedCycle> {
        cycles
            .into_iter()
            .map(|cycle| ReportedCycle {
                parity: scheme.edge_set_parity(cycle.edge_ids()),
                cycle,
            })
            .collect()
    };
    let outcome = match query {
        Query::TwoSided => match two_sided_from(&family, scheme) {
            Some(c) => Outcome::Found(report(vec![c])),
            None => Outcome::None {
                reason: "no two-sided cycle exists under this signature",
            },
        },
        Query::Even => {
            let set = even_from(&family);
            if set.is_empty() {
                Outcome::None {
                    reason: "the graph has no even cycle",
                }
            } else {
                Outcome::Found(report(set))
            }
        }
        Query::Odd => match family.all.shortest_len() {
            None => Outcome::None {
                reason: "the graph is acyclic",
            },
            Some(girth) if girth % 2 == 0 => Outcome::None {
                reason: "the girth is even; the shortest odd set is only certified for odd girth",
            },
            Some(_) => Outcome::Found(report(odd_from(&family).expect("girth is odd"))),
        },
        Query::Girth => match family.all.cycles().first() {
            Some(c) => Outcome::Found(report(vec![c.clone()])),
            None => Outcome::None {
                reason: "the graph is acyclic",
            },
        },
        Query::ContractibleProjective => match two_sided_from(&family, scheme) {
            Some(c) => Outcome::Found(report(vec![c])),
            None => Outcome::None {
                reason: "every cycle of this embedding is one-sided, hence noncontractible",
            },
        },
    };
    Ok(SolverReport {
        query,
        outcome,
        counts: CandidateCounts {
            fundamental: family.fundamental.len(),
            pair_sum: family.pair_sums.len(),
            total: family.all.len(),
        },
        elapsed: start.elapsed(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycles::as_single_cycle;
    use crate::oracle;
    use crate::testutil::{cycle_graph, k4, k4_planar_rotation, petersen, triangle};

    #[test]
    fn a_cycle_with_one_negative_edge_has_no_two_sided_cycle() {
        let g = cycle_graph(5);
        let s = EmbeddingScheme::new(&g, None, &[(0, -1), (1, 1), (2, 1), (3, 1), (4, 1)]).unwrap();
        assert_eq!(shortest_two_sided(&g, &s), None);
    }

    #[test]
    fn all_positive_k4_yields_a_triangle() {
        let g = k4();
        let s = EmbeddingScheme::all_positive(&g);
        let c = shortest_two_sided(&g, &s).unwrap();
        assert_eq!(c.len(), 3);
        // canonical minimum among the four triangles
        assert_eq!(c.edge_ids(), &[0, 1, 3]);
    }

    #[test]
    fn shortest_even_cycles_of_k4_are_the_three_quads() {
        let set = shortest_even_cycles(&k4());
        let ids: Vec<&[usize]> = set.iter().map(|c| c.edge_ids()).collect();
        assert_eq!(ids, vec![&[0, 1, 4, 5][..], &[0, 2, 3, 5], &[1, 2, 3, 4]]);
    }

    #[test]
    fn odd_only_graphs_have_no_even_cycles() {
        assert!(shortest_even_cycles(&cycle_graph(5)).is_empty());
    }

    #[test]
    fn odd_cycles_need_odd_girth() {
        assert_eq!(shortest_odd_cycles(&cycle_graph(4)), None);
        let odd = shortest_odd_cycles(&k4()).unwrap();
        assert_eq!(odd.len(), 4);
        assert!(odd.iter().all(|c| c.len() == 3));
        assert!(odd.iter().all(|c| c.has_fundamental_provenance()));
    }

    #[test]
    fn petersen_has_twelve_shortest_odd_cycles() {
        let g = petersen();
        let odd = shortest_odd_cycles(&g).unwrap();
        assert_eq!(odd.len(), 12);
        assert!(odd.iter().all(|c| c.len() == 5));
        // brute force agrees
        let (_, oracle_odd) = oracle::oracle_shortest_parity_sets(&g).unwrap();
        assert_eq!(oracle_odd.len(), 12);
        for c in &oracle_odd {
            assert!(odd.contains(c));
        }
    }

    #[test]
    fn girth_of_fixtures() {
        assert_eq!(girth(&crate::testutil::path_graph(4)), None);
        assert_eq!(girth(&cycle_graph(5)), Some(5));
        assert_eq!(girth(&petersen()), Some(5));
    }

    #[test]
    fn contractible_needs_a_projective_plane() {
        let g = k4();
        let planar = k4_planar_rotation(&g);
        match shortest_contractible_projective(&g, &planar) {
            Err(SolverError::NotProjectivePlane { found }) => {
                assert_eq!(
                    found,
                    Surface {
                        euler_genus: 0,
                        orientable: true
                    }
                );
            }
            other => panic!("expected NotProjectivePlane, got {other:?}"),
        }
    }

    #[test]
    fn projective_triangle_has_no_contractible_cycle() {
        let g = triangle();
        let rot: Vec<Vec<usize>> = (0..3).map(|v| g.incident_edges(v)).collect();
        let s = EmbeddingScheme::new(&g, Some(&rot), &[(0, 1), (1, 1), (2, -1)]).unwrap();
        assert!(s.euler_genus(&g).unwrap().is_projective_plane());
        assert_eq!(shortest_contractible_projective(&g, &s).unwrap(), None);
    }

    #[test]
    fn isometric_cycle_checks() {
        let g = cycle_graph(5);
        let c = as_single_cycle(&g, &[0, 1, 2, 3, 4]).unwrap();
        assert!(is_isometric_cycle(&g, &c));

        // 6-cycle with an antipodal chord: the 6-cycle has a shortcut
        let g = Graph::new(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5), (0, 3)]).unwrap();
        let hexagon = as_single_cycle(&g, &[0, 1, 2, 3, 4, 5]).unwrap();
        assert!(!is_isometric_cycle(&g, &hexagon));

        let g = k4();
        let tri = as_single_cycle(&g, &[0, 1, 3]).unwrap();
        assert!(is_isometric_cycle(&g, &tri));
    }

    #[test]
    fn non_isometric_cycles_split_into_two_shorter_cycles() {
        // a cycle with a distance shortcut is always the symmetric
        // difference of two strictly shorter cycles
        use crate::cycles::symmetric_difference;
        for seed in 0..25u64 {
            let (g, _) = oracle::random_instance(&oracle::InstanceParams {
                n: 7,
                extra_edges: 5,
                negative_fraction: 0.0,
                with_rotation: false,
                seed,
            })
            .unwrap();
            let all = oracle::enumerate_simple_cycles(&g, 100_000).unwrap();
            for c in all.iter().filter(|c| !is_isometric_cycle(&g, c)) {
                let shorter: Vec<&Cycle> = all.iter().filter(|a| a.len() < c.len()).collect();
                let found = shorter.iter().enumerate().any(|(i, a)| {
                    shorter[i + 1..]
                        .iter()
                        .any(|b| symmetric_difference(a.edge_ids(), b.edge_ids()) == c.edge_ids())
                });
                assert!(found, "seed {seed}: no two-shorter-cycle split");
            }
        }
    }

    #[test]
    fn reruns_return_identical_reports() {
        let g = k4();
        let s = EmbeddingScheme::all_positive(&g);
        let a = run_query(&g, &s, Query::TwoSided).unwrap();
        let b = run_query(&g, &s, Query::TwoSided).unwrap();
        assert_eq!(a.outcome, b.outcome);
        assert_eq!(a.counts, b.counts);
    }

    #[test]
    fn short_cut_cycles_still_leave_a_same_length_two_sided_candidate() {
        // whenever a shortest two-sided cycle fails the isometric test, the
        // candidate family still contains a two-sided cycle of that length
        for seed in 0..60u64 {
            let (g, s) = oracle::random_instance(&oracle::InstanceParams {
                n: 7,
                extra_edges: 5,
                negative_fraction: 0.4,
                with_rotation: false,
                seed,
            })
            .unwrap();
            let all = oracle::enumerate_simple_cycles(&g, 100_000).unwrap();
            let best = all
                .iter()
                .filter(|c| s.edge_set_parity(c.edge_ids()) == Parity::TwoSided)
                .map(Cycle::len)
                .min();
            let Some(best) = best else { continue };
            let family = candidate_cycles(&g);
            for c in all.iter().filter(|c| {
                c.len() == best
                    && s.edge_set_parity(c.edge_ids()) == Parity::TwoSided
                    && !is_isometric_cycle(&g, c)
            }) {
                let witness = family.all.iter().any(|w| {
                    w.len() == c.len() && s.edge_set_parity(w.edge_ids()) == Parity::TwoSided
                });
                assert!(witness, "seed {seed}: no same-length two-sided candidate");
            }
        }
    }
}
