//! Text and JSON formats for instances, certificates and embeddings.
//!
//! Instance grammar (`#` starts a comment, blank lines are ignored):
//!
//! ```text
//! ladder <m> <n>
//! <l> <r>
//! ...
//! ```
//!
//! or
//!
//! ```text
//! functigraph <n>
//! <f(1)> <f(2)> ... <f(n)>
//! ```

use std::collections::{BTreeMap, HashSet};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::embedding::{EdgeClass, EmbeddedEdge, Embedding, GraphEdge};
use crate::error::{Error, Result};
use crate::geometry::Point;
use crate::ladder::{CrossEdge, GeneralizedLadder, Side, VertexRef};
use crate::witness::{BranchClasses, CertPath, Pattern, SubdivisionCertificate};

pub const FORMAT_VERSION: u32 = 1;

struct Token<'a> {
    line: usize,
    column: usize,
    text: &'a str,
}

fn tokens_by_line(text: &str) -> Vec<Vec<Token<'_>>> {
    text.lines()
        .enumerate()
        .map(|(i, raw)| {
            let body = raw.split('#').next().unwrap_or("");
            let mut out = Vec::new();
            let mut rest = body;
            let mut offset = 0;
            while let Some(start) = rest.find(|c: char| !c.is_whitespace()) {
                let tail = &rest[start..];
                let len = tail.find(char::is_whitespace).unwrap_or(tail.len());
                out.push(Token {
                    line: i + 1,
                    column: offset + start + 1,
                    text: &tail[..len],
                });
                offset += start + len;
                rest = &tail[len..];
            }
            out
        })
        .filter(|t| !t.is_empty())
        .collect()
}

fn parse_error(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

fn number(t: &Token<'_>) -> Result<usize> {
    t.text.parse::<usize>().map_err(|_| {
        parse_error(
            t.line,
            t.column,
            format!("expected a non-negative integer, found `{}`", t.text),
        )
    })
}

pub fn parse_instance(text: &str) -> Result<GeneralizedLadder> {
    let lines = tokens_by_line(text);
    let Some((header, body)) = lines.split_first() else {
        return Err(parse_error(
            1,
            1,
            "empty input; expected `ladder <m> <n>` or `functigraph <n>`",
        ));
    };
    let head = &header[0];
    match head.text {
        "ladder" => {
            if header.len() != 3 {
                return Err(parse_error(head.line, head.column, "header must be `ladder <m> <n>`"));
            }
            let m = number(&header[1])?;
            let n = number(&header[2])?;
            if m == 0 || n == 0 {
                return Err(parse_error(
                    head.line,
                    header[1].column,
                    Error::InvalidDimension { m, n }.to_string(),
                ));
            }
            let mut seen = HashSet::new();
            let mut edges = Vec::with_capacity(body.len());
            for line in body {
                if line.len() != 2 {
                    return Err(parse_error(line[0].line, line[0].column, "expected `<l> <r>`"));
                }
                let e = CrossEdge::new(number(&line[0])?, number(&line[1])?);
                let err = if e.l == 0 || e.l > m || e.r == 0 || e.r > n {
                    Some(Error::IndexOutOfRange { l: e.l, r: e.r, m, n })
                } else if !seen.insert(e) {
                    Some(Error::DuplicateEdge(e))
                } else {
                    None
                };
                if let Some(err) = err {
                    return Err(parse_error(line[0].line, line[0].column, err.to_string()));
                }
                edges.push(e);
            }
            GeneralizedLadder::new(m, n, edges)
        }
        "functigraph" => {
            if header.len() != 2 {
                return Err(parse_error(head.line, head.column, "header must be `functigraph <n>`"));
            }
            let n = number(&header[1])?;
            let values: Vec<&Token<'_>> = body.iter().flatten().collect();
            if values.len() != n {
                let (line, column) = values
                    .get(n)
                    .map(|t| (t.line, t.column))
                    .unwrap_or((head.line, head.column));
                return Err(parse_error(
                    line,
                    column,
                    format!("expected {n} function values, found {}", values.len()),
                ));
            }
            let mut f = Vec::with_capacity(n);
            for t in values {
                let v = number(t)?;
                if v == 0 || v > n {
                    return Err(parse_error(
                        t.line,
                        t.column,
                        format!("function value {v} outside [1, {n}]"),
                    ));
                }
                f.push(v);
            }
            GeneralizedLadder::from_functigraph(&f)
        }
        other => Err(parse_error(
            head.line,
            head.column,
            format!("unknown header `{other}`; expected `ladder` or `functigraph`"),
        )),
    }
}

/// Canonical ladder-form text of an instance.
pub fn serialize_instance(g: &GeneralizedLadder) -> String {
    let mut out = String::with_capacity(12 * (g.num_cross() + 1));
    let _ = writeln!(out, "ladder {} {}", g.m(), g.n());
    for e in g.cross() {
        let _ = writeln!(out, "{} {}", e.l, e.r);
    }
    out
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct VertexJson {
    side: Side,
    index: usize,
    x: i64,
    y: i64,
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
enum EdgeKind {
    Path,
    Cross,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct EdgeJson {
    kind: EdgeKind,
    endpoints: [VertexRef; 2],
    #[serde(default, skip_serializing_if = "Option::is_none")]
    class: Option<EdgeClass>,
    waypoints: Vec<[i64; 2]>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct EmbeddingJson {
    format_version: u32,
    vertices: Vec<VertexJson>,
    edges: Vec<EdgeJson>,
}

pub fn embedding_to_json(emb: &Embedding) -> String {
    let doc = EmbeddingJson {
        format_version: FORMAT_VERSION,
        vertices: emb
            .vertices
            .iter()
            .map(|(v, p)| VertexJson {
                side: v.side,
                index: v.index,
                x: p.x,
                y: p.y,
            })
            .collect(),
        edges: emb
            .edges
            .iter()
            .map(|e| {
                let (a, b) = e.edge.endpoints();
                EdgeJson {
                    kind: match e.edge {
                        GraphEdge::Path { .. } => EdgeKind::Path,
                        GraphEdge::Cross(_) => EdgeKind::Cross,
                    },
                    endpoints: [a, b],
                    class: e.class,
                    waypoints: e.polyline.iter().map(|p| [p.x, p.y]).collect(),
                }
            })
            .collect(),
    };
    serde_json::to_string_pretty(&doc).expect("embedding serializes")
}

fn json_error(e: serde_json::Error) -> Error {
    parse_error(e.line(), e.column(), e.to_string())
}

pub fn embedding_from_json(text: &str) -> Result<Embedding> {
    let doc: EmbeddingJson = serde_json::from_str(text).map_err(json_error)?;
    if doc.format_version != FORMAT_VERSION {
        return Err(parse_error(
            1,
            1,
            format!("unsupported format_version {}", doc.format_version),
        ));
    }
    let mut vertices = BTreeMap::new();
    for v in doc.vertices {
        let key = VertexRef {
            side: v.side,
            index: v.index,
        };
        if vertices.insert(key, Point::new(v.x, v.y)).is_some() {
            return Err(parse_error(1, 1, format!("vertex {key} listed twice")));
        }
    }
    let mut edges = Vec::with_capacity(doc.edges.len());
    for e in doc.edges {
        let [a, b] = e.endpoints;
        let mut polyline: Vec<Point> = e.waypoints.iter().map(|&[x, y]| Point::new(x, y)).collect();
        let edge = match e.kind {
            EdgeKind::Path if a.side == b.side && a.index.abs_diff(b.index) == 1 => {
                if a.index > b.index {
                    polyline.reverse();
                }
                GraphEdge::Path {
                    side: a.side,
                    index: a.index.min(b.index),
                }
            }
            EdgeKind::Cross if a.side != b.side => {
                let (u, v) = if a.side == Side::G1 { (a, b) } else { (b, a) };
                if a.side == Side::G2 {
                    polyline.reverse();
                }
                GraphEdge::Cross(CrossEdge::new(u.index, v.index))
            }
            _ => return Err(parse_error(1, 1, format!("edge {a}-{b} does not match its kind"))),
        };
        edges.push(EmbeddedEdge {
            edge,
            class: e.class,
            polyline,
        });
    }
    Ok(Embedding { vertices, edges })
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct PathJson {
    endpoints: [VertexRef; 2],
    vertices: Vec<VertexRef>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct CertificateJson {
    format_version: u32,
    pattern: Pattern,
    branch_classes: Vec<Vec<VertexRef>>,
    paths: Vec<PathJson>,
}

pub fn certificate_to_json(cert: &SubdivisionCertificate) -> String {
    let branch_classes = match &cert.branch_classes {
        BranchClasses::Bipartite { x, y } => vec![x.clone(), y.clone()],
        BranchClasses::Complete(v) => vec![v.clone()],
    };
    let doc = CertificateJson {
        format_version: FORMAT_VERSION,
        pattern: cert.pattern,
        branch_classes,
        paths: cert
            .paths
            .iter()
            .filter_map(|p| {
                let (a, b) = p.endpoints()?;
                Some(PathJson {
                    endpoints: [a, b],
                    vertices: p.vertices.clone(),
                })
            })
            .collect(),
    };
    serde_json::to_string_pretty(&doc).expect("certificate serializes")
}

pub fn certificate_from_json(text: &str) -> Result<SubdivisionCertificate> {
    let doc: CertificateJson = serde_json::from_str(text).map_err(json_error)?;
    if doc.format_version != FORMAT_VERSION {
        return Err(parse_error(
            1,
            1,
            format!("unsupported format_version {}", doc.format_version),
        ));
    }
    let mut classes = doc.branch_classes.into_iter();
    let branch_classes = match (doc.pattern, classes.next(), classes.next(), classes.next()) {
        (Pattern::K33 | Pattern::K32, Some(x), Some(y), None) => BranchClasses::Bipartite { x, y },
        (Pattern::K4, Some(v), None, None) => BranchClasses::Complete(v),
        _ => return Err(parse_error(1, 1, "branch classes do not match the pattern")),
    };
    Ok(SubdivisionCertificate {
        pattern: doc.pattern,
        branch_classes,
        paths: doc.paths.into_iter().map(|p| CertPath::new(p.vertices)).collect(),
    })
}

fn vertex_list(vs: &[VertexRef]) -> String {
    vs.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

/// Line-oriented certificate block.
pub fn certificate_to_text(cert: &SubdivisionCertificate) -> String {
    let mut out = format!("pattern {}\n", cert.pattern);
    match &cert.branch_classes {
        BranchClasses::Bipartite { x, y } => {
            let _ = writeln!(out, "X {}", vertex_list(x));
            let _ = writeln!(out, "Y {}", vertex_list(y));
        }
        BranchClasses::Complete(v) => {
            let _ = writeln!(out, "branch {}", vertex_list(v));
        }
    }
    for p in &cert.paths {
        let _ = writeln!(out, "path {}", vertex_list(&p.vertices));
    }
    out
}
