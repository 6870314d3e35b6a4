//! The WGM text format for graphs and the APSP variant for distance
//! matrices.
//!
//! ```text
//! WGM 1
//! directed <true|false>
//! n <int>
//! <n rows of n whitespace-separated tokens, decimal or `inf`>
//! ```
//!
//! The diagonal must be 0. Distance matrices use the identical grid with the
//! header `APSP 1`. Writing uses the shortest decimal that parses back to
//! the same value, so write -> read -> write is byte-identical.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use thiserror::Error;

use crate::apsp::ApspMatrix;
use crate::error::GraphError;
use crate::graph::DenseGraph;
use crate::weight::Weight;

pub const WGM_MAGIC: &str = "WGM 1";
pub const APSP_MAGIC: &str = "APSP 1";

#[derive(Debug, Error)]
pub enum WgmError {
    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("line {line}: {msg}")]
    Format { line: usize, msg: String },

    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn format_err(line: usize, msg: impl Into<String>) -> WgmError {
    WgmError::Format {
        line,
        msg: msg.into(),
    }
}

struct Grid {
    directed: bool,
    n: usize,
    weights: Vec<Weight>,
}

fn parse_grid(input: &str, magic: &str) -> Result<Grid, WgmError> {
    let mut lines = input.lines().enumerate();

    let (_, first) = lines
        .next()
        .ok_or_else(|| format_err(1, "empty input"))?;
    if first.trim_end() != magic {
        return Err(format_err(1, format!("expected header '{magic}'")));
    }

    let (_, second) = lines
        .next()
        .ok_or_else(|| format_err(2, "missing 'directed' line"))?;
    let directed = match second.trim_end() {
        "directed true" => true,
        "directed false" => false,
        _ => return Err(format_err(2, "expected 'directed <true|false>'")),
    };

    let (_, third) = lines
        .next()
        .ok_or_else(|| format_err(3, "missing 'n' line"))?;
    let n: usize = third
        .trim_end()
        .strip_prefix("n ")
        .and_then(|v| v.parse().ok())
        .ok_or_else(|| format_err(3, "expected 'n <int>'"))?;
    if n == 0 {
        return Err(format_err(3, "node count must be at least 1"));
    }

    let mut weights = Vec::with_capacity(n * n);
    for row in 0..n {
        let (idx, line) = lines
            .next()
            .ok_or_else(|| format_err(4 + row, format!("missing row {row}")))?;
        let mut count = 0;
        for token in line.split_whitespace() {
            let w: Weight = token
                .parse()
                .map_err(|e: GraphError| format_err(idx + 1, e.to_string()))?;
            if count == row && w != Weight::ZERO {
                return Err(format_err(idx + 1, "diagonal entry must be 0"));
            }
            weights.push(w);
            count += 1;
        }
        if count != n {
            return Err(format_err(
                idx + 1,
                format!("expected {n} tokens, got {count}"),
            ));
        }
    }

    for (idx, line) in lines {
        if !line.trim().is_empty() {
            return Err(format_err(idx + 1, "trailing content after matrix"));
        }
    }

    Ok(Grid {
        directed,
        n,
        weights,
    })
}

fn write_grid(magic: &str, directed: bool, n: usize, rows: impl Fn(usize) -> Vec<Weight>) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{magic}");
    let _ = writeln!(out, "directed {directed}");
    let _ = writeln!(out, "n {n}");
    for i in 0..n {
        let row = rows(i);
        for (j, w) in row.iter().enumerate() {
            if j > 0 {
                out.push(' ');
            }
            let _ = write!(out, "{w}");
        }
        out.push('\n');
    }
    out
}

pub fn write_graph_string(g: &DenseGraph) -> String {
    write_grid(WGM_MAGIC, g.directed(), g.n(), |i| g.row(i).to_vec())
}

pub fn read_graph_string(input: &str) -> Result<DenseGraph, WgmError> {
    let grid = parse_grid(input, WGM_MAGIC)?;
    Ok(DenseGraph::from_weights(
        grid.n,
        grid.directed,
        grid.weights,
        None,
    )?)
}

pub fn write_graph(path: impl AsRef<Path>, g: &DenseGraph) -> Result<(), WgmError> {
    fs::write(path, write_graph_string(g))?;
    Ok(())
}

pub fn read_graph(path: impl AsRef<Path>) -> Result<DenseGraph, WgmError> {
    read_graph_string(&fs::read_to_string(path)?)
}

/// Writes a distance matrix in the APSP variant; `directed` records the
/// directedness of the graph the matrix came from.
pub fn write_apsp_string(m: &ApspMatrix, directed: bool) -> String {
    write_grid(APSP_MAGIC, directed, m.n(), |i| m.row(i).to_vec())
}

pub fn read_apsp_string(input: &str) -> Result<(ApspMatrix, bool), WgmError> {
    let grid = parse_grid(input, APSP_MAGIC)?;
    let m = ApspMatrix::from_weights(grid.n, grid.weights)?;
    Ok((m, grid.directed))
}

pub fn write_apsp(path: impl AsRef<Path>, m: &ApspMatrix, directed: bool) -> Result<(), WgmError> {
    fs::write(path, write_apsp_string(m, directed))?;
    Ok(())
}

pub fn read_apsp(path: impl AsRef<Path>) -> Result<(ApspMatrix, bool), WgmError> {
    read_apsp_string(&fs::read_to_string(path)?)
}
