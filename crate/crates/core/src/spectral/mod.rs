//! Hermitian adjacency matrices and their inertia.
//!
//! Two independent routes are provided: a floating-point route
//! (Householder tridiagonalization + Sturm counts) that works for any unit
//! gains, and an exact route (integer characteristic polynomial + Descartes'
//! rule) for gains in `{1, -1, i, -i}`.

mod exact;
mod matrix;
mod sturm;

use serde::{Deserialize, Serialize};

pub use exact::{char_poly_exact, inertia_exact, IntegerPolynomial};
pub use matrix::{adjacency_matrix, HermitianMatrix};
pub use sturm::{inertia_float, tridiagonalize, Tridiagonal, HERMITIAN_TOLERANCE};

use crate::graph::GainGraph;

/// Counts of positive, negative and zero eigenvalues.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Inertia {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

impl Inertia {
    pub fn new(positive: usize, negative: usize, zero: usize) -> Inertia {
        Inertia { positive, negative, zero }
    }

    pub fn order(&self) -> usize {
        self.positive + self.negative + self.zero
    }

    pub fn rank(&self) -> usize {
        self.positive + self.negative
    }
}

impl std::ops::Add for Inertia {
    type Output = Inertia;

    fn add(self, o: Inertia) -> Inertia {
        Inertia::new(self.positive + o.positive, self.negative + o.negative, self.zero + o.zero)
    }
}

impl std::iter::Sum for Inertia {
    fn sum<I: Iterator<Item = Inertia>>(iter: I) -> Inertia {
        iter.fold(Inertia::default(), |a, b| a + b)
    }
}

/// `|V| · 2⁻⁵² · max(1, Δ)`; unit-gain adjacency eigenvalues are bounded by Δ.
pub fn default_zero_tol(g: &GainGraph) -> f64 {
    g.order().max(1) as f64 * f64::EPSILON * g.max_degree().max(1) as f64
}

/// Inertia of `A(G)` with the default tolerance on the floating route.
pub fn inertia_float_default(g: &GainGraph) -> Inertia {
    inertia_float(&adjacency_matrix(g), default_zero_tol(g)).expect("adjacency matrices are Hermitian")
}

/// Inertia of `A(G)`: exact when every gain is a fourth root of unity,
/// floating otherwise (or if the exact route would overflow).
pub fn inertia(g: &GainGraph) -> Inertia {
    if g.is_exact() {
        if let Ok(i) = inertia_exact(g) {
            debug_assert_eq!(i, inertia_float_default(g), "exact and floating inertia disagree");
            return i;
        }
    }
    inertia_float_default(g)
}
