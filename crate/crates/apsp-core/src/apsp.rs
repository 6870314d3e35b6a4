use crate::error::GraphError;
use crate::graph::NodeId;
use crate::weight::Weight;

/// A square matrix of shortest-path distances: `get(i, j)` is the minimum
/// total weight of any path from `i` to `j`, `Weight::INFINITY` when `j` is
/// unreachable from `i`. The diagonal is 0.
#[derive(Debug, Clone, PartialEq)]
pub struct ApspMatrix {
    n: usize,
    // Row-major: dist[i * n + j].
    dist: Vec<Weight>,
}

impl ApspMatrix {
    pub(crate) fn from_raw(n: usize, dist: Vec<Weight>) -> ApspMatrix {
        debug_assert_eq!(dist.len(), n * n);
        ApspMatrix { n, dist }
    }

    /// Builds a matrix from raw distances, validating shape and diagonal.
    pub fn from_weights(n: usize, dist: Vec<Weight>) -> Result<ApspMatrix, GraphError> {
        if n == 0 {
            return Err(GraphError::EmptyGraph);
        }
        if dist.len() != n * n {
            return Err(GraphError::LengthMismatch {
                expected: n * n,
                got: dist.len(),
            });
        }
        for i in 0..n {
            if dist[i * n + i] != Weight::ZERO {
                return Err(GraphError::NonZeroDiagonal(i));
            }
        }
        Ok(ApspMatrix { n, dist })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: NodeId, j: NodeId) -> Weight {
        assert!(i < self.n && j < self.n, "node id out of range");
        self.dist[i * self.n + j]
    }

    pub fn row(&self, i: NodeId) -> &[Weight] {
        assert!(i < self.n, "node id out of range");
        &self.dist[i * self.n..(i + 1) * self.n]
    }

    pub(crate) fn replace_row(&mut self, i: NodeId, row: &[Weight]) {
        debug_assert_eq!(row.len(), self.n);
        self.dist[i * self.n..(i + 1) * self.n].copy_from_slice(row);
    }

    /// Deletes row and column `k`, compacting indices the same way
    /// `DenseGraph::drop_node` does.
    pub(crate) fn drop_index(&self, k: NodeId) -> ApspMatrix {
        let n = self.n;
        let m = n - 1;
        let mut dist = Vec::with_capacity(m * m);
        for i in (0..n).filter(|&i| i != k) {
            for j in (0..n).filter(|&j| j != k) {
                dist.push(self.dist[i * n + j]);
            }
        }
        ApspMatrix { n: m, dist }
    }

    /// Largest absolute entry-wise difference. Matching infinities count as
    /// zero deviation; an infinity paired with a finite value (or a shape
    /// mismatch) yields infinity.
    pub fn max_abs_deviation(&self, other: &ApspMatrix) -> f64 {
        if self.n != other.n {
            return f64::INFINITY;
        }
        let mut worst: f64 = 0.0;
        for (a, b) in self.dist.iter().zip(&other.dist) {
            let d = match (a.is_finite(), b.is_finite()) {
                (true, true) => (a.value() - b.value()).abs(),
                (false, false) => 0.0,
                _ => f64::INFINITY,
            };
            worst = worst.max(d);
        }
        worst
    }

    pub fn approx_eq(&self, other: &ApspMatrix, eps: f64) -> bool {
        self.max_abs_deviation(other) <= eps
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(v: f64) -> Weight {
        Weight::new(v).unwrap()
    }

    #[test]
    fn from_weights_checks_diagonal() {
        let dist = vec![Weight::ZERO, w(1.0), w(2.0), w(0.5)];
        assert_eq!(
            ApspMatrix::from_weights(2, dist),
            Err(GraphError::NonZeroDiagonal(1))
        );
    }

    #[test]
    fn deviation_handles_infinities() {
        let a = ApspMatrix::from_raw(2, vec![Weight::ZERO, Weight::INFINITY, w(1.0), Weight::ZERO]);
        let b = a.clone();
        assert_eq!(a.max_abs_deviation(&b), 0.0);

        let c = ApspMatrix::from_raw(2, vec![Weight::ZERO, w(7.0), w(1.0), Weight::ZERO]);
        assert_eq!(a.max_abs_deviation(&c), f64::INFINITY);
    }

    #[test]
    fn drop_index_removes_row_and_column() {
        let dist = vec![
            Weight::ZERO, w(1.0), w(2.0),
            w(3.0), Weight::ZERO, w(4.0),
            w(5.0), w(6.0), Weight::ZERO,
        ];
        let m = ApspMatrix::from_raw(3, dist);
        let d = m.drop_index(1);
        assert_eq!(d.n(), 2);
        assert_eq!(d.get(0, 1), w(2.0));
        assert_eq!(d.get(1, 0), w(5.0));
    }
}
