//! Embedding schemes: a rotation system (cyclic edge order at each vertex)
//! together with an edge signature in {-1, +1}.
//!
//! The signature alone decides sidedness: an edge set is *two-sided* when it
//! contains an even number of negative edges, *one-sided* otherwise. Schemes
//! related by local changes (reversing one vertex's rotation and negating its
//! incident edges) describe the same embedding, so sidedness, face structure,
//! and Euler genus are all invariant under them.
//!
//! A scheme may omit rotations entirely; sidedness still works, only face
//! tracing and genus need the rotation system.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::graph::{BfsTree, EdgeId, Graph, VertexId};

#[derive(Debug, Error, Clone, Copy, PartialEq, Eq)]
pub enum SchemeError {
    #[error("rotation at vertex {0} is not a permutation of its incident edges")]
    BadRotation(VertexId),
    #[error("no signature given for edge {0}")]
    MissingSignature(EdgeId),
    #[error("signature of edge {0} is neither +1 nor -1")]
    BadSignatureValue(EdgeId),
    #[error("signature entry names unknown edge {0}")]
    UnknownEdge(EdgeId),
    #[error("this operation needs rotations but the scheme has none")]
    MissingRotation,
}

/// An edge signature value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_int(value: i8) -> Option<Sign> {
        match value {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }

    pub fn as_int(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn is_negative(self) -> bool {
        self == Sign::Minus
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+1",
            Sign::Minus => "-1",
        })
    }
}

/// Sidedness of an edge set under a signature.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    TwoSided,
    OneSided,
}

impl Parity {
    /// GF(2) addition: two-sided acts as 0.
    pub fn xor(self, other: Parity) -> Parity {
        if self == other {
            Parity::TwoSided
        } else {
            Parity::OneSided
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::TwoSided => "two_sided",
            Parity::OneSided => "one_sided",
        })
    }
}

/// The surface described by a scheme with rotations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Surface {
    pub euler_genus: usize,
    pub orientable: bool,
}

impl Surface {
    pub fn is_projective_plane(self) -> bool {
        self.euler_genus == 1 && !self.orientable
    }
}

impl fmt::Display for Surface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "euler genus {}, {}",
            self.euler_genus,
            if self.orientable {
                "orientable"
            } else {
                "nonorientable"
            }
        )
    }
}

/// A validated embedding scheme for one particular graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddingScheme {
    rotation: Option<Vec<Vec<EdgeId>>>,
    signature: Vec<Sign>,
    // per-vertex incident edge ids, ascending; kept so local changes work
    // on signature-only schemes
    incident: Vec<Vec<EdgeId>>,
}

impl EmbeddingScheme {
    /// Checks a rotation system (optional, all vertices or none) and a
    /// signature map against `g`. Every edge needs a signature entry with
    /// value +1 or -1; each rotation must list exactly the incident edges.
    pub fn new(
        g: &Graph,
        rotation: Option<&[Vec<EdgeId>]>,
        signature: &[(EdgeId, i8)],
    ) -> Result<Self, SchemeError> {
        let n = g.vertex_count();
        let m = g.edge_count();

        let mut signs: Vec<Option<Sign>> = vec![None; m];
        for &(e, value) in signature {
            if e >= m {
                return Err(SchemeError::UnknownEdge(e));
            }
            signs[e] = Some(Sign::from_int(value).ok_or(SchemeError::BadSignatureValue(e))?);
        }
        let signature: Vec<Sign> = signs
            .into_iter()
            .enumerate()
            .map(|(e, s)| s.ok_or(SchemeError::MissingSignature(e)))
            .collect::<Result<_, _>>()?;

        let incident: Vec<Vec<EdgeId>> = (0..n).map(|v| g.incident_edges(v)).collect();

        let rotation = match rotation {
            None => None,
            Some(rot) => {
                if rot.len() != n {
                    return Err(SchemeError::BadRotation(rot.len().min(n)));
                }
                for (v, order) in rot.iter().enumerate() {
                    let mut sorted = order.clone();
                    sorted.sort_unstable();
                    if sorted != incident[v] {
                        return Err(SchemeError::BadRotation(v));
                    }
                }
                Some(rot.to_vec())
            }
        };

        Ok(Self {
            rotation,
            signature,
            incident,
        })
    }

    /// All edges +1, no rotations.
    pub fn all_positive(g: &Graph) -> Self {
        Self {
            rotation: None,
            signature: vec![Sign::Plus; g.edge_count()],
            incident: (0..g.vertex_count()).map(|v| g.incident_edges(v)).collect(),
        }
    }

    pub fn signature(&self, e: EdgeId) -> Sign {
        self.signature[e]
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signature
    }

    pub fn rotation(&self) -> Option<&[Vec<EdgeId>]> {
        self.rotation.as_deref()
    }

    pub fn has_rotation(&self) -> bool {
        self.rotation.is_some()
    }

    pub fn negative_edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.signature
            .iter()
            .enumerate()
            .filter(|(_, s)| s.is_negative())
            .map(|(e, _)| e)
    }

    /// Two-sided iff the set holds an even number of negative edges. Defined
    /// for arbitrary edge sets; on edge sets it is a GF(2) homomorphism:
    /// `parity(A xor B) = parity(A) xor parity(B)`.
    pub fn edge_set_parity(&self, edges: &[EdgeId]) -> Parity {
        let negatives = edges
            .iter()
            .filter(|&&e| self.signature[e].is_negative())
            .count();
        if negatives % 2 == 0 {
            Parity::TwoSided
        } else {
            Parity::OneSided
        }
    }

    /// Reverses the rotation at `v` (when present) and negates the signature
    /// of every edge incident to `v`. Cycle parities are unchanged because a
    /// cycle meets `v` in zero or two edges.
    pub fn local_change(&self, v: VertexId) -> Self {
        let mut out = self.clone();
        out.local_change_in_place(v);
        out
    }

    fn local_change_in_place(&mut self, v: VertexId) {
        if let Some(rot) = self.rotation.as_mut() {
            rot[v].reverse();
        }
        for &e in &self.incident[v] {
            self.signature[e] = self.signature[e].flip();
        }
    }

    /// Equivalent scheme in which every tree edge carries +1: walking from
    /// the root downward, a vertex is flipped exactly when its parent edge is
    /// currently negative.
    pub fn normalize_on_tree(&self, tree: &BfsTree) -> Self {
        let mut out = self.clone();
        let mut order: Vec<VertexId> = (0..tree.vertex_count()).collect();
        order.sort_unstable_by_key(|&v| (tree.depth(v), v));
        for v in order {
            if let Some(e) = tree.parent_edge(v) {
                if out.signature[e].is_negative() {
                    out.local_change_in_place(v);
                }
            }
        }
        out
    }

    /// Traces the facial walks of the embedding.
    ///
    /// A dart is (edge, direction, side). From the dart that entered `v`
    /// along `e` carrying side `s`, the walk continues on the successor of
    /// `e` in the rotation at `v` when `s = +1`, on the predecessor when
    /// `s = -1`; the side is multiplied by the signature of the edge being
    /// entered. Orbits of this rule partition the darts, every orbit has a
    /// mirror orbit traversing the same face backwards, and the faces are the
    /// orbit pairs.
    pub fn trace_faces(&self, g: &Graph) -> Result<FaceSet, SchemeError> {
        let rotation = self.rotation.as_ref().ok_or(SchemeError::MissingRotation)?;
        let m = g.edge_count();
        if m == 0 {
            // one vertex, one disk
            return Ok(FaceSet {
                faces: vec![Vec::new()],
            });
        }

        let mut pos: Vec<HashMap<EdgeId, usize>> = Vec::with_capacity(rotation.len());
        for order in rotation {
            pos.push(order.iter().enumerate().map(|(i, &e)| (e, i)).collect());
        }

        // dart id = ((edge * 2) + direction) * 2 + side,
        // direction 0 = stored endpoint order, side 0 = +1
        let decode = |d: usize| -> Dart {
            let side = if d & 1 == 0 { Sign::Plus } else { Sign::Minus };
            let (a, b) = g.endpoints(d >> 2);
            let (from, to) = if (d >> 1) & 1 == 0 { (a, b) } else { (b, a) };
            Dart {
                edge: d >> 2,
                from,
                to,
                side,
            }
        };
        let encode = |e: EdgeId, from: VertexId, side: Sign| -> usize {
            let dir = usize::from(g.endpoints(e).0 != from);
            (e * 2 + dir) * 2 + usize::from(side.is_negative())
        };
        let next = |d: usize| -> usize {
            let dart = decode(d);
            let order = &rotation[dart.to];
            let at = pos[dart.to][&dart.edge];
            let len = order.len();
            let succ = match dart.side {
                Sign::Plus => (at + 1) % len,
                Sign::Minus => (at + len - 1) % len,
            };
            let e2 = order[succ];
            let side2 = if self.signature[e2].is_negative() {
                dart.side.flip()
            } else {
                dart.side
            };
            encode(e2, dart.to, side2)
        };
        // the same traversal step walked backwards
        let mirror = |d: usize| -> usize {
            let dart = decode(d);
            let side = if self.signature[dart.edge].is_negative() {
                dart.side
            } else {
                dart.side.flip()
            };
            encode(dart.edge, dart.to, side)
        };

        let total = 4 * m;
        let mut orbit_of = vec![usize::MAX; total];
        let mut orbits: Vec<Vec<usize>> = Vec::new();
        for start in 0..total {
            if orbit_of[start] != usize::MAX {
                continue;
            }
            let id = orbits.len();
            let mut walk = Vec::new();
            let mut d = start;
            loop {
                orbit_of[d] = id;
                walk.push(d);
                d = next(d);
                if d == start {
                    break;
                }
            }
            orbits.push(walk);
        }

        assert!(
            orbits.len().is_multiple_of(2),
            "face orbits must come in mirror pairs"
        );
        let mut faces = Vec::with_capacity(orbits.len() / 2);
        for (id, walk) in orbits.iter().enumerate() {
            let partner = orbit_of[mirror(walk[0])];
            assert_ne!(partner, id, "an orbit cannot mirror itself");
            debug_assert_eq!(orbits[partner].len(), walk.len());
            if id < partner {
                faces.push(walk.iter().map(|&d| decode(d)).collect());
            }
        }
        Ok(FaceSet { faces })
    }

    /// Euler genus `2 - n + m - f` and orientability. Orientable iff the
    /// tree-normalized scheme has no negative edge left.
    pub fn euler_genus(&self, g: &Graph) -> Result<Surface, SchemeError> {
        let faces = self.trace_faces(g)?;
        let f = faces.count() as i64;
        let genus = 2 - (g.vertex_count() as i64 - g.edge_count() as i64 + f);
        assert!(genus >= 0, "Euler genus came out negative: broken trace");
        let tree = g
            .bfs_tree(0)
            .expect("vertex 0 exists; genus needs a connected graph");
        let orientable = !self
            .normalize_on_tree(&tree)
            .signature
            .iter()
            .any(|s| s.is_negative());
        Ok(Surface {
            euler_genus: genus as usize,
            orientable,
        })
    }
}

/// One traversal step on a facial walk.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Dart {
    pub edge: EdgeId,
    pub from: VertexId,
    pub to: VertexId,
    pub side: Sign,
}

/// The facial walks of an embedding, one walk per face.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceSet {
    faces: Vec<Vec<Dart>>,
}

impl FaceSet {
    pub fn count(&self) -> usize {
        self.faces.len()
    }

    pub fn faces(&self) -> &[Vec<Dart>] {
        &self.faces
    }
}
