//! External representations: graph JSON, DIMACS-like text, certificate and
//! bounds JSON. All formats speak symbolic vertex names; ids stay internal.

use crate::engine::bounds::BoundsReport;
use crate::engine::verify::{EqualizerCertificate, Witness};
use crate::graph::{Graph, GraphError};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("graph: {0}")]
    Graph(#[from] GraphError),
    #[error("dimacs line {line}: {msg}")]
    Dimacs { line: usize, msg: String },
}

#[derive(Serialize, Deserialize)]
struct GraphDoc {
    name: String,
    vertices: Vec<String>,
    edges: Vec<(String, String)>,
}

pub fn graph_to_json(g: &Graph) -> String {
    let doc = GraphDoc {
        name: g.name().to_string(),
        vertices: g.vertex_names().to_vec(),
        edges: g
            .edges()
            .into_iter()
            .map(|(u, v)| (g.vertex_name(u).to_string(), g.vertex_name(v).to_string()))
            .collect(),
    };
    serde_json::to_string_pretty(&doc).expect("plain data serializes")
}

pub fn graph_from_json(s: &str) -> Result<Graph, FormatError> {
    let doc: GraphDoc = serde_json::from_str(s)?;
    Ok(Graph::new(&doc.name, &doc.vertices, &doc.edges)?)
}

/// DIMACS-like text. Beyond the standard "p edge" and "e" lines, two comment
/// conventions keep the round trip lossless: "c graph <name>" carries the
/// graph name and "c name <i> <symbolic-name>" the 1-indexed naming map.
pub fn graph_to_dimacs(g: &Graph) -> String {
    let mut out = String::new();
    out.push_str(&format!("c graph {}\n", g.name()));
    for (i, name) in g.vertex_names().iter().enumerate() {
        out.push_str(&format!("c name {} {}\n", i + 1, name));
    }
    out.push_str(&format!("p edge {} {}\n", g.vertex_count(), g.edge_count()));
    for (u, v) in g.edges() {
        out.push_str(&format!("e {} {}\n", u + 1, v + 1));
    }
    out
}

pub fn graph_from_dimacs(s: &str) -> Result<Graph, FormatError> {
    let err = |line: usize, msg: String| FormatError::Dimacs { line, msg };
    let mut name = String::from("graph");
    let mut vertex_names: Vec<Option<String>> = Vec::new();
    let mut declared: Option<(usize, usize)> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for (idx, raw) in s.lines().enumerate() {
        let line = idx + 1;
        let mut parts = raw.split_whitespace();
        match parts.next() {
            None => {}
            Some("c") => {
                let rest: Vec<&str> = parts.collect();
                match rest.first() {
                    Some(&"graph") if rest.len() >= 2 => name = rest[1..].join(" "),
                    Some(&"name") if rest.len() == 3 => {
                        let i: usize = rest[1]
                            .parse()
                            .map_err(|_| err(line, format!("bad vertex index {}", rest[1])))?;
                        if i == 0 {
                            return Err(err(line, "vertex indices are 1-based".into()));
                        }
                        if vertex_names.len() < i {
                            vertex_names.resize(i, None);
                        }
                        vertex_names[i - 1] = Some(rest[2].to_string());
                    }
                    _ => {} // other comments are ignored
                }
            }
            Some("p") => {
                if declared.is_some() {
                    return Err(err(line, "duplicate p line".into()));
                }
                let kind = parts.next().unwrap_or("");
                if kind != "edge" {
                    return Err(err(line, format!("unsupported problem type {kind:?}")));
                }
                let n = parts
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| err(line, "bad vertex count".into()))?;
                let m = parts
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| err(line, "bad edge count".into()))?;
                declared = Some((n, m));
            }
            Some("e") => {
                let (n, _) = declared.ok_or_else(|| err(line, "e before p line".into()))?;
                let mut id = || -> Result<usize, FormatError> {
                    let t = parts
                        .next()
                        .ok_or_else(|| err(line, "edge needs two endpoints".into()))?;
                    let i: usize = t
                        .parse()
                        .map_err(|_| err(line, format!("bad endpoint {t}")))?;
                    if i == 0 || i > n {
                        return Err(err(line, format!("endpoint {i} outside 1..={n}")));
                    }
                    Ok(i - 1)
                };
                let u = id()?;
                let v = id()?;
                edges.push((u, v));
            }
            Some(other) => return Err(err(line, format!("unrecognized line type {other:?}"))),
        }
    }
    let (n, m) = declared.ok_or_else(|| err(s.lines().count().max(1), "missing p line".into()))?;
    if edges.len() != m {
        return Err(err(
            s.lines().count().max(1),
            format!("p line declares {m} edges, found {}", edges.len()),
        ));
    }
    if vertex_names.len() > n {
        return Err(err(
            s.lines().count().max(1),
            format!("named vertex {} exceeds count {n}", vertex_names.len()),
        ));
    }
    vertex_names.resize(n, None);
    let names: Vec<String> = vertex_names
        .into_iter()
        .enumerate()
        .map(|(i, o)| o.unwrap_or_else(|| format!("v{}", i + 1)))
        .collect();
    let named_edges: Vec<(String, String)> = edges
        .into_iter()
        .map(|(u, v)| (names[u].clone(), names[v].clone()))
        .collect();
    Ok(Graph::new(&name, &names, &named_edges)?)
}

#[derive(Serialize, Deserialize)]
struct WitnessDoc {
    pair: (String, String),
    x: String,
}

#[derive(Serialize, Deserialize)]
struct CertificateDoc {
    set: Vec<String>,
    witnesses: Vec<WitnessDoc>,
    value: usize,
}

pub fn certificate_to_json(g: &Graph, cert: &EqualizerCertificate) -> String {
    let doc = CertificateDoc {
        set: cert
            .set
            .iter()
            .map(|&s| g.vertex_name(s).to_string())
            .collect(),
        witnesses: cert
            .witnesses
            .iter()
            .map(|w| WitnessDoc {
                pair: (
                    g.vertex_name(w.u).to_string(),
                    g.vertex_name(w.v).to_string(),
                ),
                x: g.vertex_name(w.x).to_string(),
            })
            .collect(),
        value: cert.value(),
    };
    serde_json::to_string_pretty(&doc).expect("plain data serializes")
}

pub fn certificate_from_json(g: &Graph, s: &str) -> Result<EqualizerCertificate, FormatError> {
    let doc: CertificateDoc = serde_json::from_str(s)?;
    let id = |name: &str| -> Result<usize, FormatError> {
        g.vertex_id(name)
            .ok_or_else(|| GraphError::UnknownVertex(name.to_string()).into())
    };
    let set = doc.set.iter().map(|s| id(s)).collect::<Result<_, _>>()?;
    let witnesses = doc
        .witnesses
        .iter()
        .map(|w| {
            Ok(Witness {
                u: id(&w.pair.0)?,
                v: id(&w.pair.1)?,
                x: id(&w.x)?,
            })
        })
        .collect::<Result<_, FormatError>>()?;
    Ok(EqualizerCertificate { set, witnesses })
}

#[derive(Serialize)]
struct BoundEntryDoc<'a> {
    kind: &'a str,
    value: usize,
    source: &'a str,
}

pub fn bounds_to_json(report: &BoundsReport) -> String {
    let entries: Vec<BoundEntryDoc> = report
        .entries
        .iter()
        .map(|e| BoundEntryDoc {
            kind: e.kind.as_str(),
            value: e.value,
            source: &e.source,
        })
        .collect();
    serde_json::to_string_pretty(&entries).expect("plain data serializes")
}
