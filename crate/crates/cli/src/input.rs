use std::fs;

use graphprod::fixtures;
use graphprod::wreath::GraphAction;
use graphprod::{DefiningGraph, NormalForm, VertexId, VertexSet};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error(transparent)]
    Core(#[from] graphprod::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(graphprod::Error::CapExceeded { .. }) => 2,
            _ => 1,
        }
    }
}

pub fn usage<T>(msg: impl Into<String>) -> Result<T, CliError> {
    Err(CliError::Usage(msg.into()))
}

fn read(path: &str) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_string(),
        source,
    })
}

/// A built-in fixture name or a path to a graph document.
pub fn load_graph(spec: Option<&str>) -> Result<(DefiningGraph, String), CliError> {
    let Some(spec) = spec else {
        return usage(format!(
            "--graph is required (a JSON file or one of: {})",
            fixtures::NAMES.join(", ")
        ));
    };
    if let Some(g) = fixtures::by_name(spec) {
        return Ok((g, spec.to_string()));
    }
    let text = read(spec).map_err(|e| match e {
        CliError::Io { path, source } if source.kind() == std::io::ErrorKind::NotFound => {
            CliError::Usage(format!(
                "{path}: neither a file nor a fixture (fixtures: {})",
                fixtures::NAMES.join(", ")
            ))
        }
        other => other,
    })?;
    Ok((DefiningGraph::from_json(&text)?, spec.to_string()))
}

/// `trivial` or a path to an action document.
pub fn load_action(spec: Option<&str>, graph: &DefiningGraph) -> Result<GraphAction, CliError> {
    match spec {
        None => usage("--action is required (a JSON file or `trivial`)"),
        Some("trivial") => Ok(GraphAction::trivial(graph)),
        Some(path) => Ok(GraphAction::from_json(&read(path)?, graph)?),
    }
}

pub fn word(text: Option<&str>, flag: &str, graph: &DefiningGraph) -> Result<NormalForm, CliError> {
    match text {
        None => usage(format!("{flag} is required")),
        Some(t) => Ok(NormalForm::parse(t, graph)?),
    }
}

/// Like [`word`], but an absent flag means the identity.
pub fn word_or_identity(text: Option<&str>, graph: &DefiningGraph) -> Result<NormalForm, CliError> {
    text.map_or(Ok(NormalForm::identity()), |t| {
        Ok(NormalForm::parse(t, graph)?)
    })
}

pub fn vertex(id: Option<u32>, flag: &str, graph: &DefiningGraph) -> Result<VertexId, CliError> {
    let Some(id) = id else {
        return usage(format!("{flag} is required"));
    };
    let v = VertexId(id);
    graph.check_vertex(v)?;
    Ok(v)
}

/// Vertex ids separated by commas or spaces; the empty string is the empty set.
pub fn vertex_set(text: Option<&str>, graph: &DefiningGraph) -> Result<VertexSet, CliError> {
    let Some(text) = text else {
        return usage("--F is required (a list of vertex ids, possibly empty)");
    };
    let mut ids = Vec::new();
    for tok in text.split(|c: char| c == ',' || c.is_whitespace()) {
        if tok.is_empty() {
            continue;
        }
        match tok.parse::<u32>() {
            Ok(v) => ids.push(VertexId(v)),
            Err(_) => return usage(format!("bad vertex id {tok:?} in --F")),
        }
    }
    Ok(VertexSet::from_ids(graph, ids)?)
}

pub fn positive<T: PartialOrd + Default + Copy>(v: T, flag: &str) -> Result<T, CliError> {
    if v > T::default() {
        Ok(v)
    } else {
        usage(format!("{flag} must be positive"))
    }
}
