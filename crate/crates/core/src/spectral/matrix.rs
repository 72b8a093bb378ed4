use num_complex::Complex64;

use crate::graph::GainGraph;

/// Dense square complex matrix, row-major, expected to be Hermitian.
#[derive(Clone, Debug, PartialEq)]
pub struct HermitianMatrix {
    order: usize,
    entries: Vec<Complex64>,
}

impl HermitianMatrix {
    pub fn zeros(order: usize) -> HermitianMatrix {
        HermitianMatrix { order, entries: vec![Complex64::new(0.0, 0.0); order * order] }
    }

    /// Row-major entries; no symmetry check here (see [`Self::symmetry_residual`]).
    pub fn from_rows(rows: &[Vec<Complex64>]) -> HermitianMatrix {
        let order = rows.len();
        assert!(rows.iter().all(|r| r.len() == order), "matrix must be square");
        HermitianMatrix { order, entries: rows.concat() }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.entries[i * self.order + j]
    }

    pub fn set(&mut self, i: usize, j: usize, z: Complex64) {
        self.entries[i * self.order + j] = z;
    }

    /// `max |a_ij - conj(a_ji)|`, diagonal imaginary parts included.
    pub fn symmetry_residual(&self) -> f64 {
        let n = self.order;
        let mut worst: f64 = 0.0;
        for i in 0..n {
            for j in i..n {
                worst = worst.max((self.get(i, j) - self.get(j, i).conj()).norm());
            }
        }
        worst
    }

    /// Largest number of nonzero off-diagonal entries in a row.
    pub fn max_row_support(&self) -> usize {
        (0..self.order)
            .map(|i| (0..self.order).filter(|&j| j != i && self.get(i, j).norm() > 0.0).count())
            .max()
            .unwrap_or(0)
    }
}

/// `A(G)`: entry `(u, v)` is the gain of `u -> v`, zero off the edge set.
pub fn adjacency_matrix(g: &GainGraph) -> HermitianMatrix {
    let mut a = HermitianMatrix::zeros(g.order());
    for e in g.edges() {
        let z = e.gain.value();
        a.set(e.u, e.v, z);
        a.set(e.v, e.u, z.conj());
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gain::Gain;
    use crate::graph::{named, GainGraph};

    #[test]
    fn k2_matrices() {
        let a = adjacency_matrix(&named::path(2));
        assert_eq!(a.get(0, 1), Complex64::new(1.0, 0.0));
        assert_eq!(a.get(1, 0), Complex64::new(1.0, 0.0));
        assert_eq!(a.get(0, 0), Complex64::new(0.0, 0.0));

        let gi = GainGraph::new(2, [(0, 1, Gain::I)]).unwrap();
        let a = adjacency_matrix(&gi);
        assert_eq!(a.get(0, 1), Complex64::new(0.0, 1.0));
        assert_eq!(a.get(1, 0), Complex64::new(0.0, -1.0));
        assert_eq!(a.symmetry_residual(), 0.0);
    }

    #[test]
    fn edgeless_is_zero() {
        assert_eq!(adjacency_matrix(&GainGraph::empty(3)), HermitianMatrix::zeros(3));
    }
}
