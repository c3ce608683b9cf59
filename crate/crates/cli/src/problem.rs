//! Problem ingestion: `.ising` term lists and hypergraph JSON.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::path::Path;

use parity_core::{CompiledHypergraph, Graph, Hypergraph, VertexId};

/// A parsed term list. Variable `names[i]` is vertex `i + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProblemSpec {
    pub names: Vec<String>,
    pub terms: Vec<(VertexId, VertexId)>,
    /// Warnings and notices for stderr.
    pub notices: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for ParseError {}

impl ProblemSpec {
    pub fn graph(&self) -> Graph {
        Graph::new(1..=self.names.len() as VertexId, self.terms.iter().copied())
            .expect("terms are distinct pairs of declared variables")
    }

    pub fn name(&self, v: VertexId) -> Option<&str> {
        self.names.get((v as usize).checked_sub(1)?).map(String::as_str)
    }
}

/// Parses two-body terms, one per line or separated by `;`.
///
/// A term is `a b` or `J a b` with a numeric coupling `J`. Couplings are
/// dropped (with a single notice). `#` starts a comment.
pub fn parse_problem(text: &str) -> Result<ProblemSpec, ParseError> {
    let mut ids: HashMap<String, VertexId> = HashMap::new();
    let mut names = Vec::new();
    let mut terms = Vec::new();
    let mut seen = BTreeSet::new();
    let mut notices = Vec::new();
    let mut had_coefficient = false;

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("");
        for term in content.split(';') {
            let tokens: Vec<&str> = term.split_whitespace().collect();
            let (a, b) = match tokens.as_slice() {
                [] => continue,
                [a, b] => (*a, *b),
                [j, a, b] if j.parse::<f64>().is_ok() => {
                    had_coefficient = true;
                    (*a, *b)
                }
                _ => {
                    return Err(ParseError {
                        line,
                        message: format!("expected `a b` or `J a b`, found `{}`", term.trim()),
                    })
                }
            };
            if a == b {
                return Err(ParseError {
                    line,
                    message: format!("self-interaction `{a} {a}`"),
                });
            }
            let mut id = |name: &str| {
                *ids.entry(name.to_string()).or_insert_with(|| {
                    names.push(name.to_string());
                    names.len() as VertexId
                })
            };
            let (u, v) = (id(a), id(b));
            if seen.insert((u.min(v), u.max(v))) {
                terms.push((u, v));
            } else {
                notices.push(format!("warning: line {line}: duplicate term `{a} {b}` merged"));
            }
        }
    }
    if had_coefficient {
        notices.push("note: coupling coefficients are ignored".to_string());
    }
    Ok(ProblemSpec {
        names,
        terms,
        notices,
    })
}

/// A loaded input file.
pub struct Input {
    pub hypergraph: Hypergraph,
    /// Set for `.ising` inputs.
    pub problem: Option<ProblemSpec>,
}

#[derive(Debug)]
pub struct LoadError(pub String);

impl fmt::Display for LoadError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Reads `.ising` term lists or JSON (plain or compiled hypergraph).
pub fn load(path: &Path) -> Result<Input, LoadError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| LoadError(format!("{}: {e}", path.display())))?;
    let fail = |msg: String| LoadError(format!("{}: {msg}", path.display()));
    if path.extension().is_some_and(|e| e == "ising") {
        let problem = parse_problem(&text).map_err(|e| fail(e.to_string()))?;
        return Ok(Input {
            hypergraph: problem.graph().into_hypergraph(),
            problem: Some(problem),
        });
    }
    let value: serde_json::Value = serde_json::from_str(&text).map_err(|e| fail(e.to_string()))?;
    if value.get("num_vertices").is_some() {
        let c: CompiledHypergraph = serde_json::from_value(value).map_err(|e| fail(e.to_string()))?;
        Ok(Input {
            hypergraph: c.hypergraph().clone(),
            problem: None,
        })
    } else {
        let h: Hypergraph = serde_json::from_value(value).map_err(|e| fail(e.to_string()))?;
        Ok(Input {
            hypergraph: h,
            problem: None,
        })
    }
}
