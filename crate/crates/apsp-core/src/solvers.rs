//! Cold-start reference solvers: Floyd-Warshall and binary-heap Dijkstra.
//!
//! These recompute shortest paths from the graph alone. The warm-start
//! operations in [`crate::update`] and [`crate::query`] are checked against
//! them, and the benchmark harness uses them as the cold comparators.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::apsp::ApspMatrix;
use crate::error::GraphError;
use crate::graph::{DenseGraph, NodeId};
use crate::weight::Weight;

/// A point-to-point query result: the node sequence from source to target
/// and its total weight. `nodes` is empty and `total` infinite when the
/// target is unreachable.
#[derive(Debug, Clone, PartialEq)]
pub struct PathResult {
    pub nodes: Vec<NodeId>,
    pub total: Weight,
}

impl PathResult {
    pub fn no_path() -> PathResult {
        PathResult {
            nodes: Vec::new(),
            total: Weight::INFINITY,
        }
    }

    pub fn is_no_path(&self) -> bool {
        self.nodes.is_empty()
    }
}

/// All-pairs shortest paths by Floyd-Warshall in Theta(n^3).
pub fn floyd_warshall(g: &DenseGraph) -> ApspMatrix {
    let n = g.n();
    let mut dist: Vec<Weight> = Vec::with_capacity(n * n);
    for i in 0..n {
        dist.extend_from_slice(g.row(i));
    }
    let mut row_k = vec![Weight::ZERO; n];
    for k in 0..n {
        row_k.copy_from_slice(&dist[k * n..(k + 1) * n]);
        for i in 0..n {
            let dik = dist[i * n + k];
            if !dik.is_finite() {
                continue;
            }
            let row_i = &mut dist[i * n..(i + 1) * n];
            for (dij, &dkj) in row_i.iter_mut().zip(&row_k) {
                let via = dik + dkj;
                if via < *dij {
                    *dij = via;
                }
            }
        }
    }
    ApspMatrix::from_raw(n, dist)
}

// Max-heap entry reversed on distance so the smallest pops first; ties pop
// the smaller node index, which keeps extracted paths deterministic.
#[derive(Copy, Clone, PartialEq)]
struct QueueEntry {
    dist: f64,
    node: usize,
}

impl Eq for QueueEntry {}

impl Ord for QueueEntry {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .dist
            .partial_cmp(&self.dist)
            .unwrap_or(Ordering::Equal)
            .then_with(|| other.node.cmp(&self.node))
    }
}

impl PartialOrd for QueueEntry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

// Binary-heap Dijkstra with lazy deletion. Predecessors break distance ties
// toward the smaller node index so the one extracted path is canonical.
// When `stop_at` is set the search halts once that node is settled.
fn dijkstra_impl(
    g: &DenseGraph,
    source: NodeId,
    stop_at: Option<NodeId>,
) -> (Vec<Weight>, Vec<Option<NodeId>>) {
    let n = g.n();
    let mut dist = vec![Weight::INFINITY; n];
    let mut pred: Vec<Option<NodeId>> = vec![None; n];
    let mut settled = vec![false; n];
    let mut heap = BinaryHeap::with_capacity(n);

    dist[source] = Weight::ZERO;
    heap.push(QueueEntry {
        dist: 0.0,
        node: source,
    });

    while let Some(QueueEntry { node: u, .. }) = heap.pop() {
        if settled[u] {
            continue;
        }
        settled[u] = true;
        if stop_at == Some(u) {
            break;
        }
        let du = dist[u];
        for (v, &w) in g.row(u).iter().enumerate() {
            if v == u || settled[v] || !w.is_finite() {
                continue;
            }
            let nd = du + w;
            if nd < dist[v] {
                dist[v] = nd;
                pred[v] = Some(u);
                heap.push(QueueEntry {
                    dist: nd.value(),
                    node: v,
                });
            } else if nd == dist[v] && pred[v].map_or(false, |p| u < p) {
                pred[v] = Some(u);
            }
        }
    }
    (dist, pred)
}

/// Single-source shortest-path distances from `s` to every node.
pub fn dijkstra_row(g: &DenseGraph, s: NodeId) -> Vec<Weight> {
    assert!(s < g.n(), "node id out of range");
    dijkstra_impl(g, s, None).0
}

/// All-pairs shortest paths by running Dijkstra from every source.
pub fn dijkstra_apsp(g: &DenseGraph) -> ApspMatrix {
    let n = g.n();
    let mut dist = Vec::with_capacity(n * n);
    for s in 0..n {
        dist.extend(dijkstra_row(g, s));
    }
    ApspMatrix::from_raw(n, dist)
}

/// Cold-start point-to-point shortest path from `i` to `j`.
pub fn shortest_path_dijkstra(
    g: &DenseGraph,
    i: NodeId,
    j: NodeId,
) -> Result<PathResult, GraphError> {
    g.check_node(i)?;
    g.check_node(j)?;
    if i == j {
        return Err(GraphError::SamePair(i));
    }
    let (dist, pred) = dijkstra_impl(g, i, Some(j));
    if !dist[j].is_finite() {
        return Ok(PathResult::no_path());
    }
    let mut nodes = vec![j];
    let mut cur = j;
    while let Some(p) = pred[cur] {
        nodes.push(p);
        cur = p;
    }
    debug_assert_eq!(cur, i);
    nodes.reverse();
    Ok(PathResult {
        nodes,
        total: dist[j],
    })
}
