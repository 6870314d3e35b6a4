//! Warm-start point-to-point path extraction from a known APSP matrix.
//!
//! A node `k` can lie on a shortest path from `i` to `j` only when
//! `dist[i][k] + dist[k][j] = dist[i][j]`; every other node is pruned. The
//! query then runs plain Dijkstra on the induced subgraph of the surviving
//! candidates, which is usually tiny compared to the full graph.

use crate::apsp::ApspMatrix;
use crate::error::GraphError;
use crate::graph::{DenseGraph, NodeId};
use crate::solvers::{shortest_path_dijkstra, PathResult};
use crate::update::UpdateConfig;
use crate::weight::Weight;

/// The pruned node set for one `(source, target)` query, in ascending
/// original ids. Always contains the source and the target.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CandidateSet {
    nodes: Vec<NodeId>,
}

impl CandidateSet {
    pub fn nodes(&self) -> &[NodeId] {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn contains(&self, id: NodeId) -> bool {
        self.nodes.binary_search(&id).is_ok()
    }

    /// Compacted subgraph id of an original node, if it is a candidate.
    pub fn subgraph_id(&self, original: NodeId) -> Option<usize> {
        self.nodes.binary_search(&original).ok()
    }

    /// Original id of a compacted subgraph node.
    pub fn original_id(&self, subgraph: usize) -> NodeId {
        self.nodes[subgraph]
    }
}

/// Nodes that can participate in a shortest path from `i` to `j`: every `k`
/// with `dist[i][k] + dist[k][j] <= dist[i][j] + eps`, plus `i` and `j`
/// themselves. An unreachable pair keeps only `{i, j}`.
pub fn candidate_nodes(
    m: &ApspMatrix,
    i: NodeId,
    j: NodeId,
    eps: f64,
) -> Result<CandidateSet, GraphError> {
    let n = m.n();
    if i >= n {
        return Err(GraphError::NodeOutOfRange { id: i, n });
    }
    if j >= n {
        return Err(GraphError::NodeOutOfRange { id: j, n });
    }
    if i == j {
        return Err(GraphError::SamePair(i));
    }
    let mut nodes = vec![i.min(j), i.max(j)];
    let target = m.get(i, j);
    if target.is_finite() {
        let row_i = m.row(i);
        let bound = target.value() + eps;
        for k in (0..n).filter(|&k| k != i && k != j) {
            if row_i[k].value() + m.get(k, j).value() <= bound {
                nodes.push(k);
            }
        }
        nodes.sort_unstable();
    }
    Ok(CandidateSet { nodes })
}

/// Warm point-to-point shortest path: prunes to the candidate set, runs
/// Dijkstra on the induced subgraph, and translates the path back to the
/// original ids. The total always matches `m.get(i, j)`.
pub fn warm_shortest_path(
    m: &ApspMatrix,
    g: &DenseGraph,
    i: NodeId,
    j: NodeId,
    cfg: &UpdateConfig,
) -> Result<PathResult, GraphError> {
    if m.n() != g.n() {
        return Err(GraphError::DimensionMismatch {
            matrix_n: m.n(),
            graph_n: g.n(),
        });
    }
    let candidates = candidate_nodes(m, i, j, cfg.epsilon())?;
    if !m.get(i, j).is_finite() {
        return Ok(PathResult::no_path());
    }

    let k = candidates.len();
    let mut weights = vec![Weight::INFINITY; k * k];
    for (a, &oa) in candidates.nodes().iter().enumerate() {
        let orig_row = g.row(oa);
        for (b, &ob) in candidates.nodes().iter().enumerate() {
            weights[a * k + b] = orig_row[ob];
        }
    }
    let sub = DenseGraph::from_weights(k, g.directed(), weights, None)?;

    let sub_i = candidates.subgraph_id(i).expect("source is a candidate");
    let sub_j = candidates.subgraph_id(j).expect("target is a candidate");
    let sub_path = shortest_path_dijkstra(&sub, sub_i, sub_j)?;
    Ok(PathResult {
        nodes: sub_path
            .nodes
            .into_iter()
            .map(|s| candidates.original_id(s))
            .collect(),
        total: sub_path.total,
    })
}
