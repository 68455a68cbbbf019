//! Input resolution: graph specs, code files, generator matrix files.
//!
//! A graph spec is either a family name with parameters (`hamming 7 2`) or
//! `file <path>` naming an explicit edge list. Code files start with a graph
//! spec line, then one codeword label per line; `#` comments and blank lines
//! are skipped everywhere.

use std::fs;
use std::path::Path;

use drcodes::code::Code;
use drcodes::error::{Error, Result};
use drcodes::graph::{Family, Graph};
use drcodes::spectral::IntersectionArray;

#[derive(Clone, Debug)]
pub enum GraphSpec {
    Family(Family),
    File(String),
}

impl GraphSpec {
    pub fn parse(text: &str) -> Result<GraphSpec> {
        let t = text.trim();
        if let Some(rest) = t.strip_prefix("file") {
            if rest.is_empty() {
                return Err(Error::Parse("file spec needs a path".into()));
            }
            if rest.starts_with(char::is_whitespace) {
                return Ok(GraphSpec::File(rest.trim().to_string()));
            }
        }
        Family::parse(t).map(GraphSpec::Family)
    }

    /// The spec string reports echo back.
    pub fn name(&self) -> String {
        match self {
            GraphSpec::Family(f) => f.to_string(),
            GraphSpec::File(p) => format!("file {p}"),
        }
    }

    /// Builds the graph together with its intersection array. Family
    /// generators are trusted; explicit files are verified distance-regular.
    pub fn build(&self) -> Result<(Graph, IntersectionArray)> {
        match self {
            GraphSpec::Family(f) => Ok((f.generate()?, f.intersection_array()?)),
            GraphSpec::File(path) => {
                let g = Graph::parse(&read(path)?)?;
                match g.is_distance_regular()? {
                    Ok(ia) => Ok((g, ia)),
                    Err(w) => Err(Error::InvalidParameters(format!(
                        "graph in {path} is not distance-regular: {w}"
                    ))),
                }
            }
        }
    }

    /// The intersection array alone, skipping vertex-level construction when
    /// a closed form exists.
    pub fn array(&self) -> Result<IntersectionArray> {
        match self {
            GraphSpec::Family(f) => f.intersection_array(),
            GraphSpec::File(_) => Ok(self.build()?.1),
        }
    }
}

fn read(path: &str) -> Result<String> {
    fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("cannot read {path}: {e}")))
}

fn content_lines(text: &str) -> impl Iterator<Item = &str> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
}

/// A code resolved against its ambient graph, ready for analysis.
pub struct LoadedCode {
    pub graph: Graph,
    pub array: IntersectionArray,
    pub graph_name: String,
    pub code: Code,
    pub code_name: String,
}

/// Reads a code file. The header line names the graph unless `graph_override`
/// replaces it; later lines are codeword labels resolved per the graph's
/// vertex kind.
pub fn load_code(path: &Path, graph_override: Option<&str>) -> Result<LoadedCode> {
    let path_str = path.display().to_string();
    let text = read(&path_str)?;
    let mut lines = content_lines(&text);
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse(format!("{path_str} is empty")))?;
    let spec = GraphSpec::parse(graph_override.unwrap_or(header))?;
    let labels: Vec<String> = lines.map(str::to_string).collect();
    if labels.is_empty() {
        return Err(Error::Parse(format!("{path_str} lists no codewords")));
    }
    let (graph, array) = spec.build()?;
    let code = Code::from_labels(&graph, &labels)?;
    Ok(LoadedCode {
        graph,
        array,
        graph_name: spec.name(),
        code,
        code_name: path_str,
    })
}

/// Reads a generator matrix file: one generator word per line.
pub fn load_generators(path: &Path) -> Result<String> {
    read(&path.display().to_string())
}
