//! Plain-text graph files.
//!
//! ```text
//! c any comment
//! p cvd 3 3
//! e 1 2
//! e 2 3
//! e 3 1
//! ```
//!
//! Vertices are `1..=n`; parallel edges repeat the `e` line. `ect` files
//! carry a weight bit as a third field on every edge line.

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::MultiGraph;
use crate::recognizer::ClassMode;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormatError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("missing `p` header line")]
    MissingHeader,
    #[error("header declares {expected} edges but {found} were given")]
    EdgeCount { expected: usize, found: usize },
    #[error("graph labels must be exactly 1..=n to be written")]
    Labels,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphFile {
    pub mode: ClassMode,
    pub graph: MultiGraph,
    pub comments: Vec<String>,
}

fn syntax(line: usize, msg: impl Into<String>) -> FormatError {
    FormatError::Syntax {
        line,
        msg: msg.into(),
    }
}

fn number<T: std::str::FromStr>(
    tok: Option<&str>,
    line: usize,
    what: &str,
) -> Result<T, FormatError> {
    let tok = tok.ok_or_else(|| syntax(line, format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| syntax(line, format!("invalid {what} `{tok}`")))
}

pub fn parse_graph(text: &str) -> Result<GraphFile, FormatError> {
    let mut header: Option<(ClassMode, usize, usize)> = None;
    let mut graph = MultiGraph::new();
    let mut comments = Vec::new();
    let mut edges = 0usize;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() {
            continue;
        }
        if trimmed == "c" || trimmed.starts_with("c ") {
            comments.push(trimmed.get(2..).unwrap_or("").to_string());
            continue;
        }
        let mut toks = trimmed.split_whitespace();
        match toks.next() {
            Some("p") => {
                if header.is_some() {
                    return Err(syntax(line, "duplicate header"));
                }
                let name = toks
                    .next()
                    .ok_or_else(|| syntax(line, "missing problem name"))?;
                let mode = match name {
                    "cvd" => ClassMode::Cactus,
                    "ect" => ClassMode::OddCactus,
                    other => return Err(syntax(line, format!("unknown problem `{other}`"))),
                };
                let n: usize = number(toks.next(), line, "vertex count")?;
                let m: usize = number(toks.next(), line, "edge count")?;
                if toks.next().is_some() {
                    return Err(syntax(line, "trailing tokens in header"));
                }
                for v in 1..=n as u32 {
                    graph.insert_vertex(v).expect("fresh labels");
                }
                header = Some((mode, n, m));
            }
            Some("e") => {
                let (mode, n, _) = header.ok_or_else(|| syntax(line, "edge before header"))?;
                let u: u32 = number(toks.next(), line, "endpoint")?;
                let v: u32 = number(toks.next(), line, "endpoint")?;
                let w: u8 = match mode {
                    ClassMode::Cactus => 1,
                    ClassMode::OddCactus => {
                        let w = number(toks.next(), line, "weight")?;
                        if w > 1 {
                            return Err(syntax(line, format!("weight {w} is not 0 or 1")));
                        }
                        w
                    }
                };
                if toks.next().is_some() {
                    return Err(syntax(line, "trailing tokens in edge line"));
                }
                for x in [u, v] {
                    if x == 0 || x as usize > n {
                        return Err(syntax(line, format!("vertex {x} out of range 1..={n}")));
                    }
                }
                if u == v {
                    return Err(syntax(line, format!("self-loop at vertex {u}")));
                }
                graph.add_edge(u, v, w).expect("validated edge");
                edges += 1;
            }
            Some(other) => return Err(syntax(line, format!("unknown line type `{other}`"))),
            None => unreachable!("blank lines skipped"),
        }
    }
    let (mode, _, m) = header.ok_or(FormatError::MissingHeader)?;
    if edges != m {
        return Err(FormatError::EdgeCount {
            expected: m,
            found: edges,
        });
    }
    Ok(GraphFile {
        mode,
        graph,
        comments,
    })
}

pub fn write_graph(file: &GraphFile) -> Result<String, FormatError> {
    let g = &file.graph;
    let n = g.vertex_count();
    if g.vertices()
        .iter()
        .enumerate()
        .any(|(i, &v)| v as usize != i + 1)
    {
        return Err(FormatError::Labels);
    }
    let mut out = String::new();
    for c in &file.comments {
        writeln!(out, "c {c}").unwrap();
    }
    writeln!(
        out,
        "p {} {} {}",
        file.mode.problem_name(),
        n,
        g.edge_count()
    )
    .unwrap();
    for e in g.edges() {
        match file.mode {
            ClassMode::Cactus => writeln!(out, "e {} {}", e.u, e.v).unwrap(),
            ClassMode::OddCactus => writeln!(out, "e {} {} {}", e.u, e.v, e.weight).unwrap(),
        }
    }
    Ok(out)
}
