//! Warm-start maintenance of an APSP matrix under single-node and
//! single-edge mutations.
//!
//! Adding a node is always Theta(n^2): the new row is the best of
//! `out_w[t] + dist[t][r]` over all attachment points `t`, the new column
//! the mirror image, and every old pair only has to compare its old
//! distance with the detour through the new node.
//!
//! Removing node `k` starts from a safety test on the known matrix: a pair
//! `(i, j)` with `dist[i][j] < dist[i][k] + dist[k][j]` cannot have run
//! through `k`, so its distance survives the removal. The remaining pairs
//! form the need-update list; the fraction of sources with a non-empty list
//! is the removal cost. A cheap removal re-runs Dijkstra only for the dirty
//! sources; an expensive one (cost above `delta`) falls back to a full
//! Floyd-Warshall recompute.
//!
//! Modifying an edge is remove-then-re-add of whichever endpoint is cheaper
//! to remove.

use crate::apsp::ApspMatrix;
use crate::error::GraphError;
use crate::graph::{DenseGraph, NodeId};
use crate::solvers::{dijkstra_row, floyd_warshall};
use crate::weight::Weight;

/// Forces a removal strategy regardless of the measured cost.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum StrategyOverride {
    #[default]
    Auto,
    AlwaysFloyd,
    AlwaysDijkstra,
}

/// The strategy a removal actually used.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    FullRecompute,
    SelectiveDijkstra,
}

impl std::fmt::Display for Strategy {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Strategy::FullRecompute => write!(f, "full_recompute"),
            Strategy::SelectiveDijkstra => write!(f, "selective_dijkstra"),
        }
    }
}

/// Tuning knobs for the warm-start operations: the cost threshold `delta`
/// above which a removal recomputes from scratch, and the absolute tolerance
/// `epsilon` for distance comparisons.
#[derive(Debug, Clone, Copy)]
pub struct UpdateConfig {
    delta: f64,
    epsilon: f64,
    strategy: StrategyOverride,
}

impl Default for UpdateConfig {
    fn default() -> Self {
        UpdateConfig {
            delta: 0.8,
            epsilon: 1e-9,
            strategy: StrategyOverride::Auto,
        }
    }
}

impl UpdateConfig {
    pub fn new(
        delta: f64,
        epsilon: f64,
        strategy: StrategyOverride,
    ) -> Result<UpdateConfig, GraphError> {
        if !(0.0..=1.0).contains(&delta) {
            return Err(GraphError::BadDelta(delta));
        }
        if !(epsilon > 0.0 && epsilon.is_finite()) {
            return Err(GraphError::BadEpsilon(epsilon));
        }
        Ok(UpdateConfig {
            delta,
            epsilon,
            strategy,
        })
    }

    pub fn delta(&self) -> f64 {
        self.delta
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }

    pub fn strategy(&self) -> StrategyOverride {
        self.strategy
    }

    pub fn with_strategy(mut self, strategy: StrategyOverride) -> UpdateConfig {
        self.strategy = strategy;
        self
    }
}

/// Per-source lists of ordered pairs whose distance may change when a node
/// is removed. Sources and targets are in post-removal indexing; `removed`
/// is the pre-removal id of the node being taken out.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NeedUpdateList {
    removed: NodeId,
    per_source: Vec<Vec<NodeId>>,
}

impl NeedUpdateList {
    pub fn removed(&self) -> NodeId {
        self.removed
    }

    /// Number of surviving sources (pre-removal n minus one).
    pub fn sources(&self) -> usize {
        self.per_source.len()
    }

    pub fn targets(&self, source: NodeId) -> &[NodeId] {
        &self.per_source[source]
    }

    /// Number of sources with a non-empty list.
    pub fn non_empty_count(&self) -> usize {
        self.per_source.iter().filter(|t| !t.is_empty()).count()
    }

    pub fn is_empty(&self) -> bool {
        self.non_empty_count() == 0
    }

    /// All listed `(source, target)` pairs in post-removal indexing.
    pub fn iter_pairs(&self) -> impl Iterator<Item = (NodeId, NodeId)> + '_ {
        self.per_source
            .iter()
            .enumerate()
            .flat_map(|(s, targets)| targets.iter().map(move |&t| (s, t)))
    }
}

/// Fraction of surviving sources whose distances may change when a node is
/// removed; always in `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct RemovalCost(f64);

impl RemovalCost {
    pub fn value(self) -> f64 {
        self.0
    }
}

/// What a warm removal produced: the new matrix plus the list, cost, and
/// strategy that led to it.
#[derive(Debug, Clone)]
pub struct RemovalOutcome {
    pub apsp: ApspMatrix,
    pub need_update: NeedUpdateList,
    pub cost: RemovalCost,
    pub strategy: Strategy,
}

fn check_dims(m: &ApspMatrix, g: &DenseGraph) -> Result<(), GraphError> {
    if m.n() != g.n() {
        return Err(GraphError::DimensionMismatch {
            matrix_n: m.n(),
            graph_n: g.n(),
        });
    }
    Ok(())
}

/// Extends the APSP matrix `m` of an n-node graph to the matrix of
/// `g_new`, the same graph with one extra node attached by the edge vectors
/// `out_w` (new node to `t`) and `in_w` (`t` to new node). Theta(n^2).
pub fn apsp_add_node(
    m: &ApspMatrix,
    g_new: &DenseGraph,
    out_w: &[Weight],
    in_w: &[Weight],
) -> Result<ApspMatrix, GraphError> {
    let n = m.n();
    if g_new.n() != n + 1 {
        return Err(GraphError::DimensionMismatch {
            matrix_n: n,
            graph_n: g_new.n(),
        });
    }
    if out_w.len() != n {
        return Err(GraphError::LengthMismatch {
            expected: n,
            got: out_w.len(),
        });
    }
    if in_w.len() != n {
        return Err(GraphError::LengthMismatch {
            expected: n,
            got: in_w.len(),
        });
    }

    // Row of the new node: best attachment point t, with t = r covering the
    // direct edge since dist[r][r] = 0.
    let mut new_row = vec![Weight::INFINITY; n];
    for (t, &base) in out_w.iter().enumerate() {
        if !base.is_finite() {
            continue;
        }
        for (best, &mtr) in new_row.iter_mut().zip(m.row(t)) {
            let cand = base + mtr;
            if cand < *best {
                *best = cand;
            }
        }
    }

    // Column of the new node: leave the old graph at t, then hop in.
    let mut new_col = vec![Weight::INFINITY; n];
    for (r, best) in new_col.iter_mut().enumerate() {
        for (&mrt, &hop) in m.row(r).iter().zip(in_w) {
            let cand = mrt + hop;
            if cand < *best {
                *best = cand;
            }
        }
    }

    // Old pairs: either the old distance survives or the pair detours
    // through the new node.
    let nn = n + 1;
    let mut dist = vec![Weight::ZERO; nn * nn];
    for i in 0..n {
        let t1 = new_col[i];
        let old_row = m.row(i);
        for j in 0..n {
            dist[i * nn + j] = old_row[j].min(t1 + new_row[j]);
        }
        dist[i * nn + n] = new_col[i];
    }
    dist[n * nn..n * nn + n].copy_from_slice(&new_row);
    dist[n * nn + n] = Weight::ZERO;
    Ok(ApspMatrix::from_raw(nn, dist))
}

/// Builds the need-update list for removing node `k` from a graph whose
/// APSP matrix is `m`.
///
/// A pair is kept out of the list only when the strict test
/// `dist[i][j] < dist[i][k] + dist[k][j] - epsilon` certifies that `k` is
/// not needed for it; ties and unreachable pairs land in the list, trading
/// wasted recomputation for correctness. Theta(n^2).
pub fn build_need_update_list(
    m: &ApspMatrix,
    g: &DenseGraph,
    k: NodeId,
    cfg: &UpdateConfig,
) -> Result<NeedUpdateList, GraphError> {
    check_dims(m, g)?;
    g.check_node(k)?;
    let n = g.n();
    if n < 2 {
        return Err(GraphError::TooSmall);
    }
    let eps = cfg.epsilon();
    let col_k: Vec<f64> = (0..n).map(|i| m.get(i, k).value()).collect();
    let row_k = m.row(k);
    let mut per_source = vec![Vec::new(); n - 1];
    for i in (0..n).filter(|&i| i != k) {
        let t1 = col_k[i];
        let new_i = if i < k { i } else { i - 1 };
        let row_i = m.row(i);
        let targets = &mut per_source[new_i];
        for j in (0..n).filter(|&j| j != k && j != i) {
            let through_k = t1 + row_k[j].value();
            if row_i[j].value() >= through_k - eps {
                targets.push(if j < k { j } else { j - 1 });
            }
        }
    }
    Ok(NeedUpdateList {
        removed: k,
        per_source,
    })
}

/// The removal cost: non-empty sources over `pre_n - 1` surviving nodes.
pub fn removal_cost(list: &NeedUpdateList, pre_n: usize) -> RemovalCost {
    assert!(pre_n >= 2, "removal cost needs a pre-removal size of >= 2");
    RemovalCost(list.non_empty_count() as f64 / (pre_n - 1) as f64)
}

fn remove_with_list(
    m: &ApspMatrix,
    g: &DenseGraph,
    k: NodeId,
    cfg: &UpdateConfig,
    list: &NeedUpdateList,
    cost: RemovalCost,
) -> Result<(ApspMatrix, DenseGraph, Strategy), GraphError> {
    let g_small = g.drop_node(k)?;
    let full = match cfg.strategy() {
        StrategyOverride::AlwaysFloyd => true,
        StrategyOverride::AlwaysDijkstra => false,
        StrategyOverride::Auto => cost.value() > cfg.delta(),
    };
    if full {
        let apsp = floyd_warshall(&g_small);
        return Ok((apsp, g_small, Strategy::FullRecompute));
    }
    let mut apsp = m.drop_index(k);
    for src in 0..g_small.n() {
        if !list.targets(src).is_empty() {
            let row = dijkstra_row(&g_small, src);
            apsp.replace_row(src, &row);
        }
    }
    Ok((apsp, g_small, Strategy::SelectiveDijkstra))
}

/// Warm removal of node `k`: builds the need-update list, gates on the
/// removal cost, and either selectively re-runs Dijkstra for dirty sources
/// or recomputes everything with Floyd-Warshall.
pub fn apsp_remove_node(
    m: &ApspMatrix,
    g: &DenseGraph,
    k: NodeId,
    cfg: &UpdateConfig,
) -> Result<RemovalOutcome, GraphError> {
    let list = build_need_update_list(m, g, k, cfg)?;
    let cost = removal_cost(&list, g.n());
    let (apsp, _, strategy) = remove_with_list(m, g, k, cfg, &list, cost)?;
    Ok(RemovalOutcome {
        apsp,
        need_update: list,
        cost,
        strategy,
    })
}

/// Warm update after changing the weight of edge `(u, v)` to `w_new`
/// (infinity deletes the edge). Removes whichever endpoint is cheaper to
/// remove, re-adds it with the modified edge in place, and restores the
/// original node numbering. Returns the new matrix and the updated graph.
pub fn apsp_modify_edge(
    m: &ApspMatrix,
    g: &DenseGraph,
    u: NodeId,
    v: NodeId,
    w_new: Weight,
    cfg: &UpdateConfig,
) -> Result<(ApspMatrix, DenseGraph), GraphError> {
    check_dims(m, g)?;
    g.check_node(u)?;
    g.check_node(v)?;
    if u == v {
        return Err(GraphError::SamePair(u));
    }
    let n = g.n();

    let list_u = build_need_update_list(m, g, u, cfg)?;
    let list_v = build_need_update_list(m, g, v, cfg)?;
    let cost_u = removal_cost(&list_u, n);
    let cost_v = removal_cost(&list_v, n);
    let removed = if cost_u.value() < cost_v.value() {
        u
    } else if cost_v.value() < cost_u.value() {
        v
    } else {
        u.min(v)
    };
    let (list, cost) = if removed == u {
        (list_u, cost_u)
    } else {
        (list_v, cost_v)
    };

    let (m_small, g_small, _) = remove_with_list(m, g, removed, cfg, &list, cost)?;

    // Edge vectors for re-adding `removed`, with the modified edge in place.
    let mut out_w = Vec::with_capacity(n - 1);
    let mut in_w = Vec::with_capacity(n - 1);
    for t in (0..n).filter(|&t| t != removed) {
        let mut wo = g.weight(removed, t);
        let mut wi = g.weight(t, removed);
        if removed == u && t == v {
            wo = w_new;
            if !g.directed() {
                wi = w_new;
            }
        } else if removed == v && t == u {
            wi = w_new;
            if !g.directed() {
                wo = w_new;
            }
        }
        out_w.push(wo);
        in_w.push(wi);
    }

    let g_appended = g_small.append_node(&out_w, &in_w)?;
    let m_appended = apsp_add_node(&m_small, &g_appended, &out_w, &in_w)?;

    // The re-added node sits at index n - 1; permute it back to `removed`
    // so callers keep stable ids.
    let orig_of = |idx: usize| {
        if idx == n - 1 {
            removed
        } else if idx < removed {
            idx
        } else {
            idx + 1
        }
    };
    let mut dist = vec![Weight::ZERO; n * n];
    for a in 0..n {
        let oa = orig_of(a);
        for b in 0..n {
            dist[oa * n + orig_of(b)] = m_appended.get(a, b);
        }
    }

    let mut g_out = g.clone();
    g_out.set_weight(u, v, w_new)?;
    Ok((ApspMatrix::from_raw(n, dist), g_out))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(v: f64) -> Weight {
        Weight::new(v).unwrap()
    }

    fn cfg() -> UpdateConfig {
        UpdateConfig::default()
    }

    /// Four nodes A,B,C,D (0..3) where C sits off to the side: the triangle
    /// A-B-D has unit edges and C hangs off every corner at weight 10.
    /// Removing C disturbs nothing.
    fn avoided_node_graph() -> DenseGraph {
        let mut g = DenseGraph::new(4, false).unwrap();
        g.set_weight(0, 1, w(1.0)).unwrap(); // A-B
        g.set_weight(0, 3, w(1.0)).unwrap(); // A-D
        g.set_weight(1, 3, w(1.0)).unwrap(); // B-D
        g.set_weight(0, 2, w(10.0)).unwrap(); // A-C
        g.set_weight(1, 2, w(10.0)).unwrap(); // B-C
        g.set_weight(2, 3, w(10.0)).unwrap(); // C-D
        g
    }

    /// Four nodes A,B,C,D (0..3) where B is the hub: A-B, B-C, B-D are unit
    /// edges, the direct alternatives are heavy, and C-D is unit.
    fn hub_graph() -> DenseGraph {
        let mut g = DenseGraph::new(4, false).unwrap();
        g.set_weight(0, 1, w(1.0)).unwrap(); // A-B
        g.set_weight(1, 2, w(1.0)).unwrap(); // B-C
        g.set_weight(1, 3, w(1.0)).unwrap(); // B-D
        g.set_weight(0, 2, w(5.0)).unwrap(); // A-C
        g.set_weight(0, 3, w(5.0)).unwrap(); // A-D
        g.set_weight(2, 3, w(1.0)).unwrap(); // C-D
        g
    }

    #[test]
    fn add_isolated_node_is_a_no_op_on_old_block() {
        let mut g = DenseGraph::new(3, true).unwrap();
        g.set_weight(0, 1, w(2.0)).unwrap();
        g.set_weight(1, 2, w(3.0)).unwrap();
        let m = floyd_warshall(&g);
        let inf = vec![Weight::INFINITY; 3];
        let g_new = g.append_node(&inf, &inf).unwrap();
        let m_new = apsp_add_node(&m, &g_new, &inf, &inf).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(m_new.get(i, j), m.get(i, j));
            }
        }
        for r in 0..3 {
            assert_eq!(m_new.get(3, r), Weight::INFINITY);
            assert_eq!(m_new.get(r, 3), Weight::INFINITY);
        }
        assert_eq!(m_new.get(3, 3), Weight::ZERO);
    }

    #[test]
    fn add_to_single_node_graph() {
        let g = DenseGraph::new(1, true).unwrap();
        let m = floyd_warshall(&g);
        let out = [w(3.0)];
        let inn = [w(4.0)];
        let g_new = g.append_node(&out, &inn).unwrap();
        let m_new = apsp_add_node(&m, &g_new, &out, &inn).unwrap();
        assert_eq!(m_new.get(0, 1), w(4.0));
        assert_eq!(m_new.get(1, 0), w(3.0));
        assert_eq!(m_new.get(0, 0), Weight::ZERO);
        assert_eq!(m_new.get(1, 1), Weight::ZERO);
    }

    #[test]
    fn add_node_dimension_checks() {
        let g = DenseGraph::new(2, true).unwrap();
        let m = floyd_warshall(&g);
        let short = [w(1.0)];
        let good = [w(1.0), w(2.0)];
        let g_new = g.append_node(&good, &good).unwrap();
        assert!(apsp_add_node(&m, &g_new, &short, &good).is_err());
        assert!(apsp_add_node(&m, &g, &good, &good).is_err());
    }

    #[test]
    fn avoided_node_has_empty_lists() {
        let g = avoided_node_graph();
        let m = floyd_warshall(&g);
        let list = build_need_update_list(&m, &g, 2, &cfg()).unwrap();
        assert!(list.is_empty());
        assert_eq!(removal_cost(&list, 4).value(), 0.0);
    }

    #[test]
    fn hub_node_lists_exactly_the_affected_pairs() {
        let g = hub_graph();
        let m = floyd_warshall(&g);
        let list = build_need_update_list(&m, &g, 1, &cfg()).unwrap();
        // Post-removal ids: A=0, C=1, D=2.
        assert_eq!(list.targets(0), &[1, 2]); // A: [C, D]
        assert_eq!(list.targets(1), &[0]); // C: [A]
        assert_eq!(list.targets(2), &[0]); // D: [A]
        assert_eq!(removal_cost(&list, 4).value(), 1.0);
    }

    #[test]
    fn removing_disconnected_node_lists_nothing() {
        let mut g = DenseGraph::new(4, true).unwrap();
        g.set_weight(0, 1, w(1.0)).unwrap();
        g.set_weight(1, 2, w(1.0)).unwrap();
        // Node 3 stays isolated.
        let m = floyd_warshall(&g);
        let list = build_need_update_list(&m, &g, 3, &cfg()).unwrap();
        // Pairs unreachable through node 3 that are also unreachable overall
        // stay conservative, but every *finite* pair passes the strict test.
        for (s, t) in list.iter_pairs() {
            assert!(!m.get(s, t).is_finite());
        }
        let outcome = apsp_remove_node(&m, &g, 3, &cfg()).unwrap();
        let cold = floyd_warshall(&g.drop_node(3).unwrap());
        assert_eq!(outcome.apsp.max_abs_deviation(&cold), 0.0);
    }

    #[test]
    fn hub_removal_recomputes_fully_at_default_delta() {
        let g = hub_graph();
        let m = floyd_warshall(&g);
        let outcome = apsp_remove_node(&m, &g, 1, &cfg()).unwrap();
        assert_eq!(outcome.strategy, Strategy::FullRecompute);
        assert_eq!(outcome.cost.value(), 1.0);
        let cold = floyd_warshall(&g.drop_node(1).unwrap());
        assert!(outcome.apsp.approx_eq(&cold, 1e-9));
    }

    #[test]
    fn strategy_overrides_agree_with_cold_start() {
        let g = hub_graph();
        let m = floyd_warshall(&g);
        let cold = floyd_warshall(&g.drop_node(1).unwrap());
        for strategy in [StrategyOverride::AlwaysFloyd, StrategyOverride::AlwaysDijkstra] {
            let outcome =
                apsp_remove_node(&m, &g, 1, &cfg().with_strategy(strategy)).unwrap();
            assert!(outcome.apsp.approx_eq(&cold, 1e-9));
        }
    }

    #[test]
    fn selective_path_engages_when_cost_is_low() {
        let g = avoided_node_graph();
        let m = floyd_warshall(&g);
        let outcome = apsp_remove_node(&m, &g, 2, &cfg()).unwrap();
        assert_eq!(outcome.strategy, Strategy::SelectiveDijkstra);
        assert_eq!(outcome.cost.value(), 0.0);
        let cold = floyd_warshall(&g.drop_node(2).unwrap());
        assert_eq!(outcome.apsp.max_abs_deviation(&cold), 0.0);
    }

    #[test]
    fn modify_edge_noop_keeps_matrix() {
        let g = hub_graph();
        let m = floyd_warshall(&g);
        let (m_new, g_new) = apsp_modify_edge(&m, &g, 0, 2, w(5.0), &cfg()).unwrap();
        assert!(m_new.approx_eq(&m, 1e-9));
        assert_eq!(g_new, g);
    }

    #[test]
    fn modify_edge_to_dominating_weight() {
        let g = hub_graph();
        let m = floyd_warshall(&g);
        let (m_new, g_new) = apsp_modify_edge(&m, &g, 0, 3, w(0.25), &cfg()).unwrap();
        assert_eq!(m_new.get(0, 3), w(0.25));
        assert_eq!(g_new.weight(0, 3), w(0.25));
        assert_eq!(g_new.weight(3, 0), w(0.25));
        let cold = floyd_warshall(&g_new);
        assert!(m_new.approx_eq(&cold, 1e-9));
    }

    #[test]
    fn modify_edge_deletion_via_infinity() {
        let mut g = DenseGraph::new(3, true).unwrap();
        g.set_weight(0, 1, w(1.0)).unwrap();
        g.set_weight(1, 2, w(1.0)).unwrap();
        g.set_weight(0, 2, w(10.0)).unwrap();
        let m = floyd_warshall(&g);
        let (m_new, g_new) = apsp_modify_edge(&m, &g, 0, 1, Weight::INFINITY, &cfg()).unwrap();
        assert_eq!(g_new.weight(0, 1), Weight::INFINITY);
        assert_eq!(m_new.get(0, 2), w(10.0));
        assert_eq!(m_new.get(0, 1), Weight::INFINITY);
        let cold = floyd_warshall(&g_new);
        assert!(m_new.approx_eq(&cold, 1e-9));
    }

    #[test]
    fn modify_edge_rejects_self_loop() {
        let g = hub_graph();
        let m = floyd_warshall(&g);
        assert_eq!(
            apsp_modify_edge(&m, &g, 1, 1, w(2.0), &cfg()).unwrap_err(),
            GraphError::SamePair(1)
        );
    }

    #[test]
    fn config_validation() {
        assert!(UpdateConfig::new(1.1, 1e-9, StrategyOverride::Auto).is_err());
        assert!(UpdateConfig::new(-0.1, 1e-9, StrategyOverride::Auto).is_err());
        assert!(UpdateConfig::new(0.5, 0.0, StrategyOverride::Auto).is_err());
        assert!(UpdateConfig::new(0.5, 1e-12, StrategyOverride::Auto).is_ok());
    }
}
