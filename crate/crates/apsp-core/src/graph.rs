use crate::error::GraphError;
use crate::weight::Weight;

/// Index of a node in a specific graph's current numbering, in `[0, n)`.
/// Removing a node compacts the numbering, so ids are positional, not stable;
/// labels carry identity across mutations when callers need it.
pub type NodeId = usize;

/// A dense weighted graph stored as a full n x n weight matrix.
///
/// `weight(i, j)` is the direct edge weight from `i` to `j`;
/// `Weight::INFINITY` means no edge. The diagonal is pinned to 0 and
/// undirected graphs keep the matrix symmetric under every mutation.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseGraph {
    n: usize,
    directed: bool,
    // Row-major: weights[i * n + j] = d(i, j).
    weights: Vec<Weight>,
    labels: Option<Vec<String>>,
}

impl DenseGraph {
    /// An edgeless graph: all off-diagonal weights infinite.
    pub fn new(n: usize, directed: bool) -> Result<DenseGraph, GraphError> {
        if n == 0 {
            return Err(GraphError::EmptyGraph);
        }
        let mut weights = vec![Weight::INFINITY; n * n];
        for i in 0..n {
            weights[i * n + i] = Weight::ZERO;
        }
        Ok(DenseGraph {
            n,
            directed,
            weights,
            labels: None,
        })
    }

    /// Builds a graph from a full weight matrix, validating the diagonal and
    /// (for undirected graphs) symmetry.
    pub fn from_weights(
        n: usize,
        directed: bool,
        weights: Vec<Weight>,
        labels: Option<Vec<String>>,
    ) -> Result<DenseGraph, GraphError> {
        if n == 0 {
            return Err(GraphError::EmptyGraph);
        }
        if weights.len() != n * n {
            return Err(GraphError::LengthMismatch {
                expected: n * n,
                got: weights.len(),
            });
        }
        if let Some(labels) = &labels {
            if labels.len() != n {
                return Err(GraphError::LengthMismatch {
                    expected: n,
                    got: labels.len(),
                });
            }
        }
        for i in 0..n {
            if weights[i * n + i] != Weight::ZERO {
                return Err(GraphError::NonZeroDiagonal(i));
            }
        }
        if !directed {
            for i in 0..n {
                for j in (i + 1)..n {
                    if weights[i * n + j] != weights[j * n + i] {
                        return Err(GraphError::Asymmetric);
                    }
                }
            }
        }
        Ok(DenseGraph {
            n,
            directed,
            weights,
            labels,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn directed(&self) -> bool {
        self.directed
    }

    pub fn weight(&self, i: NodeId, j: NodeId) -> Weight {
        assert!(i < self.n && j < self.n, "node id out of range");
        self.weights[i * self.n + j]
    }

    /// Outgoing edge weights of `i` as a slice of length `n`.
    pub fn row(&self, i: NodeId) -> &[Weight] {
        assert!(i < self.n, "node id out of range");
        &self.weights[i * self.n..(i + 1) * self.n]
    }

    pub fn label(&self, i: NodeId) -> Option<&str> {
        self.labels.as_ref().map(|l| l[i].as_str())
    }

    pub fn set_label(&mut self, i: NodeId, label: String) -> Result<(), GraphError> {
        self.check_node(i)?;
        let labels = self
            .labels
            .get_or_insert_with(|| vec![String::new(); self.n]);
        labels[i] = label;
        Ok(())
    }

    /// Sets the edge weight from `i` to `j` (and the mirror edge when
    /// undirected). `Weight::INFINITY` deletes the edge.
    pub fn set_weight(&mut self, i: NodeId, j: NodeId, w: Weight) -> Result<(), GraphError> {
        self.check_node(i)?;
        self.check_node(j)?;
        if i == j {
            return Err(GraphError::SelfLoop(i));
        }
        self.weights[i * self.n + j] = w;
        if !self.directed {
            self.weights[j * self.n + i] = w;
        }
        Ok(())
    }

    /// Removes node `k`, compacting ids: a surviving node with old id `m`
    /// gets new id `m` if `m < k`, else `m - 1`. Weights among survivors are
    /// untouched.
    pub fn drop_node(&self, k: NodeId) -> Result<DenseGraph, GraphError> {
        self.check_node(k)?;
        if self.n == 1 {
            return Err(GraphError::LastNode);
        }
        let n = self.n;
        let m = n - 1;
        let mut weights = Vec::with_capacity(m * m);
        for i in (0..n).filter(|&i| i != k) {
            for j in (0..n).filter(|&j| j != k) {
                weights.push(self.weights[i * n + j]);
            }
        }
        let labels = self.labels.as_ref().map(|l| {
            l.iter()
                .enumerate()
                .filter(|&(i, _)| i != k)
                .map(|(_, s)| s.clone())
                .collect()
        });
        Ok(DenseGraph {
            n: m,
            directed: self.directed,
            weights,
            labels,
        })
    }

    /// Appends a node with id `n`: `out_w[t]` becomes the weight of the new
    /// edge to `t`, `in_w[t]` the weight from `t`. Undirected graphs require
    /// `out_w == in_w`.
    pub fn append_node(&self, out_w: &[Weight], in_w: &[Weight]) -> Result<DenseGraph, GraphError> {
        let n = self.n;
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
        if !self.directed && out_w != in_w {
            return Err(GraphError::Asymmetric);
        }
        let nn = n + 1;
        let mut weights = vec![Weight::INFINITY; nn * nn];
        for i in 0..n {
            weights[i * nn..i * nn + n].copy_from_slice(&self.weights[i * n..(i + 1) * n]);
            weights[i * nn + n] = in_w[i];
            weights[n * nn + i] = out_w[i];
        }
        weights[n * nn + n] = Weight::ZERO;
        let labels = self.labels.as_ref().map(|l| {
            let mut l = l.clone();
            l.push(String::new());
            l
        });
        Ok(DenseGraph {
            n: nn,
            directed: self.directed,
            weights,
            labels,
        })
    }

    pub(crate) fn check_node(&self, id: NodeId) -> Result<(), GraphError> {
        if id < self.n {
            Ok(())
        } else {
            Err(GraphError::NodeOutOfRange { id, n: self.n })
        }
    }
}
