//! The text instance format and result serialization.
//!
//! Instance files are line oriented; `#` starts a comment anywhere on a
//! line. The grammar is:
//!
//! ```text
//! graph <n> <m>
//! e <id> <u> <v> [<+1|-1>]     # m lines, ids 0..m-1 in order; sign defaults to +1
//! rot <v> <e...>               # optional, one line per vertex: all or none
//! ```
//!
//! Reports serialize either as plain text (one `length: walk` line per
//! cycle, or `NONE` plus a reason line) or as a versioned JSON document.
//! Both renderings are byte-deterministic for a fixed report; wall time is
//! deliberately left out.

use serde::Serialize;
use thiserror::Error;

use crate::cycles::{Cycle, Provenance};
use crate::embedding::{EmbeddingScheme, FaceSet, SchemeError, Surface};
use crate::graph::{EdgeId, Graph, GraphError, VertexId};
use crate::oracle::CrossCheck;
use crate::solvers::{Outcome, SolverReport};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IoError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("line {line}: edge id {got} out of order, expected {expected}")]
    IdMismatch {
        line: usize,
        expected: usize,
        got: usize,
    },
    #[error("line {line}: {source}")]
    Graph {
        line: usize,
        #[source]
        source: GraphError,
    },
    #[error("line {line}: {source}")]
    Scheme {
        line: usize,
        #[source]
        source: SchemeError,
    },
}

fn syntax(line: usize, msg: impl Into<String>) -> IoError {
    IoError::Syntax {
        line,
        msg: msg.into(),
    }
}

/// Parses an instance file into a validated graph and scheme.
pub fn parse_instance(text: &str) -> Result<(Graph, EmbeddingScheme), IoError> {
    let mut header: Option<(usize, usize, usize)> = None; // (n, m, line)
    let mut edges: Vec<(VertexId, VertexId)> = Vec::new();
    let mut edge_lines: Vec<usize> = Vec::new();
    let mut signature: Vec<(EdgeId, i8)> = Vec::new();
    let mut rotation: Vec<Option<(Vec<EdgeId>, usize)>> = Vec::new();
    let mut rot_seen = 0usize;
    let mut last_line = 0usize;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let mut tokens = content.split_whitespace();
        let keyword = tokens.next().expect("nonempty line");
        let rest: Vec<&str> = tokens.collect();

        match keyword {
            "graph" => {
                if header.is_some() {
                    return Err(syntax(line, "duplicate graph header"));
                }
                let [n, m] = parse_fields::<2>(line, "graph <n> <m>", &rest)?;
                if n == 0 {
                    return Err(syntax(line, "a graph needs at least one vertex"));
                }
                header = Some((n, m, line));
                rotation = vec![None; n];
            }
            "e" => {
                let (_, m, _) = header.ok_or_else(|| syntax(line, "edge before graph header"))?;
                if rest.len() != 3 && rest.len() != 4 {
                    return Err(syntax(line, "expected `e <id> <u> <v> [<+1|-1>]`"));
                }
                let id = parse_num(line, rest[0])?;
                if id != edges.len() {
                    return Err(IoError::IdMismatch {
                        line,
                        expected: edges.len(),
                        got: id,
                    });
                }
                if id >= m {
                    return Err(syntax(line, format!("more than {m} edge records")));
                }
                let u = parse_num(line, rest[1])?;
                let v = parse_num(line, rest[2])?;
                let sign = match rest.get(3) {
                    None => 1,
                    Some(&"+1") => 1,
                    Some(&"-1") => -1,
                    Some(other) => {
                        return Err(syntax(line, format!("bad signature `{other}`")));
                    }
                };
                edges.push((u, v));
                edge_lines.push(line);
                signature.push((id, sign));
            }
            "rot" => {
                let (n, _, _) =
                    header.ok_or_else(|| syntax(line, "rotation before graph header"))?;
                if rest.is_empty() {
                    return Err(syntax(line, "expected `rot <v> <e...>`"));
                }
                let v: usize = parse_num(line, rest[0])?;
                if v >= n {
                    return Err(syntax(line, format!("vertex {v} out of range")));
                }
                if rotation[v].is_some() {
                    return Err(syntax(line, format!("duplicate rotation for vertex {v}")));
                }
                let order: Vec<EdgeId> = rest[1..]
                    .iter()
                    .map(|t| parse_num(line, t))
                    .collect::<Result<_, _>>()?;
                rotation[v] = Some((order, line));
                rot_seen += 1;
            }
            other => {
                return Err(syntax(line, format!("unknown record `{other}`")));
            }
        }
    }

    let (n, m, header_line) =
        header.ok_or_else(|| syntax(last_line + 1, "missing graph header"))?;
    if edges.len() != m {
        return Err(syntax(
            last_line + 1,
            format!("expected {m} edge records, found {}", edges.len()),
        ));
    }

    let graph = Graph::new(n, &edges).map_err(|source| {
        let line = match source {
            GraphError::LoopEdge(i)
            | GraphError::ParallelEdge(i)
            | GraphError::EndpointOutOfRange(i) => edge_lines[i],
            GraphError::RootOutOfRange(_) => header_line,
        };
        IoError::Graph { line, source }
    })?;

    let rotation_vecs: Option<Vec<Vec<EdgeId>>> = if rot_seen == 0 {
        None
    } else if rot_seen == n {
        Some(
            rotation
                .iter()
                .map(|r| r.as_ref().expect("counted").0.clone())
                .collect(),
        )
    } else {
        return Err(syntax(
            last_line + 1,
            format!("rotations given for {rot_seen} of {n} vertices; give all or none"),
        ));
    };

    let scheme =
        EmbeddingScheme::new(&graph, rotation_vecs.as_deref(), &signature).map_err(|source| {
            let line = match source {
                SchemeError::BadRotation(v) => rotation
                    .get(v)
                    .and_then(|r| r.as_ref())
                    .map_or(header_line, |r| r.1),
                SchemeError::MissingSignature(e)
                | SchemeError::BadSignatureValue(e)
                | SchemeError::UnknownEdge(e) => edge_lines.get(e).copied().unwrap_or(header_line),
                SchemeError::MissingRotation => header_line,
            };
            IoError::Scheme { line, source }
        })?;

    Ok((graph, scheme))
}

/// Renders an instance in the same grammar `parse_instance` reads;
/// signatures are always written explicitly.
pub fn serialize_instance(g: &Graph, scheme: &EmbeddingScheme) -> String {
    let mut out = String::new();
    out.push_str(&format!("graph {} {}\n", g.vertex_count(), g.edge_count()));
    for e in 0..g.edge_count() {
        let (u, v) = g.endpoints(e);
        out.push_str(&format!("e {e} {u} {v} {}\n", scheme.signature(e)));
    }
    if let Some(rotation) = scheme.rotation() {
        for (v, order) in rotation.iter().enumerate() {
            out.push_str(&format!("rot {v}"));
            for e in order {
                out.push_str(&format!(" {e}"));
            }
            out.push('\n');
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Structured,
}

#[derive(Serialize)]
struct ReportDoc<'a> {
    format_version: u32,
    query: &'a str,
    status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    reason: Option<&'a str>,
    cycles: Vec<CycleDoc>,
    candidate_counts: CountsDoc,
}

#[derive(Serialize)]
struct CycleDoc {
    length: usize,
    edge_ids: Vec<EdgeId>,
    vertex_walk: Vec<VertexId>,
    parity: String,
    provenance: Vec<ProvenanceDoc>,
}

#[derive(Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
enum ProvenanceDoc {
    Fundamental { root: VertexId, cotree_edge: EdgeId },
    PairSum { first: usize, second: usize },
}

#[derive(Serialize)]
struct CountsDoc {
    fundamental: usize,
    pair_sum: usize,
    total: usize,
}

fn cycle_doc(cycle: &Cycle, parity: crate::embedding::Parity) -> CycleDoc {
    CycleDoc {
        length: cycle.len(),
        edge_ids: cycle.edge_ids().to_vec(),
        vertex_walk: cycle.vertex_walk().to_vec(),
        parity: parity.to_string(),
        provenance: cycle
            .provenance()
            .iter()
            .map(|p| match *p {
                Provenance::Fundamental { root, cotree_edge } => {
                    ProvenanceDoc::Fundamental { root, cotree_edge }
                }
                Provenance::PairSum { first, second } => ProvenanceDoc::PairSum { first, second },
            })
            .collect(),
    }
}

/// Renders a solver report. Both formats are byte-deterministic.
pub fn serialize_report(report: &SolverReport, format: Format) -> String {
    match format {
        Format::Text => match &report.outcome {
            Outcome::Found(cycles) => {
                let mut out = String::new();
                for rc in cycles {
                    out.push_str(&walk_line(&rc.cycle));
                    out.push('\n');
                }
                out
            }
            Outcome::None { reason } => format!("NONE\n{reason}\n"),
        },
        Format::Structured => {
            let (status, reason, cycles) = match &report.outcome {
                Outcome::Found(cycles) => (
                    "found",
                    None,
                    cycles
                        .iter()
                        .map(|rc| cycle_doc(&rc.cycle, rc.parity))
                        .collect(),
                ),
                Outcome::None { reason } => ("none", Some(*reason), Vec::new()),
            };
            let doc = ReportDoc {
                format_version: FORMAT_VERSION,
                query: report.query.name(),
                status,
                reason,
                cycles,
                candidate_counts: CountsDoc {
                    fundamental: report.counts.fundamental,
                    pair_sum: report.counts.pair_sum,
                    total: report.counts.total,
                },
            };
            to_json(&doc)
        }
    }
}

fn walk_line(cycle: &Cycle) -> String {
    let walk: Vec<String> = cycle.vertex_walk().iter().map(|v| v.to_string()).collect();
    format!("{}: {}", cycle.len(), walk.join(" "))
}

#[derive(Serialize)]
struct GenusDoc {
    format_version: u32,
    query: &'static str,
    euler_genus: usize,
    orientable: bool,
    faces: usize,
}

/// Renders the surface summary of the `genus` command.
pub fn serialize_genus(surface: Surface, faces: &FaceSet, format: Format) -> String {
    match format {
        Format::Text => format!(
            "genus: {}\norientable: {}\nfaces: {}\n",
            surface.euler_genus,
            surface.orientable,
            faces.count()
        ),
        Format::Structured => to_json(&GenusDoc {
            format_version: FORMAT_VERSION,
            query: "genus",
            euler_genus: surface.euler_genus,
            orientable: surface.orientable,
            faces: faces.count(),
        }),
    }
}

#[derive(Serialize)]
struct VerifyDoc {
    format_version: u32,
    query: &'static str,
    checks: Vec<CheckDoc>,
    overall: &'static str,
}

#[derive(Serialize)]
struct CheckDoc {
    name: &'static str,
    status: &'static str,
    detail: String,
}

/// Renders the solver-versus-reference comparison of the `verify` command.
pub fn serialize_verify(check: &CrossCheck, format: Format) -> String {
    let fmt_len = |l: Option<usize>| l.map_or("none".to_string(), |v| v.to_string());
    let checks = vec![
        CheckDoc {
            name: "two-sided-shortest",
            status: if check.two_sided_ok { "PASS" } else { "FAIL" },
            detail: format!(
                "solver {} vs reference {}",
                fmt_len(check.two_sided_solver),
                fmt_len(check.two_sided_reference)
            ),
        },
        CheckDoc {
            name: "even-shortest-set",
            status: if check.even_ok { "PASS" } else { "FAIL" },
            detail: format!("{} cycle(s)", check.even_count),
        },
        CheckDoc {
            name: "odd-shortest-set",
            status: if !check.odd_applicable {
                "N/A"
            } else if check.odd_ok {
                "PASS"
            } else {
                "FAIL"
            },
            detail: if check.odd_applicable {
                format!("{} cycle(s), all fundamental", check.odd_count)
            } else {
                "girth is even or graph acyclic".to_string()
            },
        },
    ];
    let overall = if check.all_ok() { "PASS" } else { "FAIL" };
    match format {
        Format::Text => {
            let mut out = String::new();
            for c in &checks {
                out.push_str(&format!("{}: {} ({})\n", c.name, c.status, c.detail));
            }
            out.push_str(&format!("verify: {overall}\n"));
            out
        }
        Format::Structured => to_json(&VerifyDoc {
            format_version: FORMAT_VERSION,
            query: "verify",
            checks,
            overall,
        }),
    }
}

fn to_json<T: Serialize>(doc: &T) -> String {
    let mut out = serde_json::to_string_pretty(doc).expect("report types always serialize");
    out.push('\n');
    out
}

fn parse_num(line: usize, token: &str) -> Result<usize, IoError> {
    token
        .parse()
        .map_err(|_| syntax(line, format!("expected a number, found `{token}`")))
}

fn parse_fields<const K: usize>(
    line: usize,
    shape: &str,
    rest: &[&str],
) -> Result<[usize; K], IoError> {
    if rest.len() != K {
        return Err(syntax(line, format!("expected `{shape}`")));
    }
    let mut out = [0usize; K];
    for (slot, token) in out.iter_mut().zip(rest) {
        *slot = parse_num(line, token)?;
    }
    Ok(out)
}
