//! Floating-point inertia: Householder reduction of a Hermitian matrix to a
//! real symmetric tridiagonal, then Sturm counts at `±zero_tol`.

use num_complex::Complex64;

use super::matrix::HermitianMatrix;
use super::Inertia;
use crate::error::SpectralError;

/// Largest accepted `max |a_ij - conj(a_ji)|`.
pub const HERMITIAN_TOLERANCE: f64 = 1e-10;

/// A real symmetric tridiagonal matrix with non-negative off-diagonal.
#[derive(Clone, Debug, PartialEq)]
pub struct Tridiagonal {
    pub diagonal: Vec<f64>,
    /// `off_diagonal[k]` couples rows `k` and `k + 1`.
    pub off_diagonal: Vec<f64>,
}

/// Unitary reduction to tridiagonal form. The complex off-diagonal phases
/// are absorbed by a diagonal unitary similarity, leaving their moduli.
pub fn tridiagonalize(a: &HermitianMatrix) -> Tridiagonal {
    let n = a.order();
    let mut m: Vec<Vec<Complex64>> = (0..n).map(|i| (0..n).map(|j| a.get(i, j)).collect()).collect();
    let mut off_diagonal = Vec::with_capacity(n.saturating_sub(1));

    for k in 0..n.saturating_sub(1) {
        let alpha = (k + 1..n).map(|i| m[i][k].norm_sqr()).sum::<f64>().sqrt();
        if alpha == 0.0 {
            off_diagonal.push(0.0);
            continue;
        }
        let x0 = m[k + 1][k];
        let phase = if x0.norm() > 0.0 { x0 / x0.norm() } else { Complex64::new(1.0, 0.0) };
        // v = x + phase·alpha·e1 reflects x onto -phase·alpha·e1.
        let mut v: Vec<Complex64> = (k + 1..n).map(|i| m[i][k]).collect();
        v[0] += phase * alpha;
        let vv: f64 = v.iter().map(|z| z.norm_sqr()).sum();
        let tau = 2.0 / vv;

        // Trailing block B <- H B H with H = I - tau v v*.
        let len = n - k - 1;
        let p: Vec<Complex64> = (0..len)
            .map(|r| {
                let row = &m[k + 1 + r];
                (0..len).map(|c| row[k + 1 + c] * v[c]).sum::<Complex64>() * tau
            })
            .collect();
        let vp: Complex64 = v.iter().zip(&p).map(|(vi, pi)| vi.conj() * pi).sum();
        let half = vp * (tau / 2.0);
        let q: Vec<Complex64> = p.iter().zip(&v).map(|(pi, vi)| pi - half * vi).collect();
        for r in 0..len {
            for c in 0..len {
                m[k + 1 + r][k + 1 + c] -= v[r] * q[c].conj() + q[r] * v[c].conj();
            }
        }
        let beta = -phase * alpha;
        m[k + 1][k] = beta;
        m[k][k + 1] = beta.conj();
        for i in k + 2..n {
            m[i][k] = Complex64::new(0.0, 0.0);
            m[k][i] = Complex64::new(0.0, 0.0);
        }
        off_diagonal.push(alpha);
    }

    Tridiagonal { diagonal: (0..n).map(|i| m[i][i].re).collect(), off_diagonal }
}

impl Tridiagonal {
    /// Number of eigenvalues strictly below `x`, from the signs of the LDLᵀ
    /// pivots of `T - xI`.
    pub fn count_below(&self, x: f64) -> usize {
        let scale = self
            .diagonal
            .iter()
            .chain(&self.off_diagonal)
            .fold(1.0f64, |acc, v| acc.max(v.abs()));
        let tiny = f64::EPSILON * f64::EPSILON * scale;
        let mut count = 0;
        let mut q = 1.0;
        for (i, &d) in self.diagonal.iter().enumerate() {
            let coupling = if i == 0 { 0.0 } else { self.off_diagonal[i - 1].powi(2) / q };
            q = d - x - coupling;
            if q == 0.0 {
                q = -tiny;
            }
            if q < 0.0 {
                count += 1;
            }
        }
        count
    }

    /// Eigenvalues in `(tol, ∞)`, `(-∞, -tol)`, and the rest.
    pub fn inertia(&self, zero_tol: f64) -> Inertia {
        let n = self.diagonal.len();
        let negative = self.count_below(-zero_tol);
        let not_positive = self.count_below(zero_tol);
        Inertia { positive: n - not_positive, negative, zero: not_positive - negative }
    }
}

/// Inertia of a Hermitian matrix with eigenvalues of modulus `<= zero_tol`
/// counted as zero.
pub fn inertia_float(a: &HermitianMatrix, zero_tol: f64) -> Result<Inertia, SpectralError> {
    if !(zero_tol > 0.0 && zero_tol.is_finite()) {
        return Err(SpectralError::BadTolerance(zero_tol));
    }
    let residual = a.symmetry_residual();
    if residual > HERMITIAN_TOLERANCE {
        return Err(SpectralError::NotHermitian(residual));
    }
    Ok(tridiagonalize(a).inertia(zero_tol))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gain::Gain;
    use crate::graph::named;
    use crate::spectral::adjacency_matrix;

    #[test]
    fn tridiagonal_counts() {
        // diag(3, -1, 0) has eigenvalues 3, -1, 0.
        let t = Tridiagonal { diagonal: vec![3.0, -1.0, 0.0], off_diagonal: vec![0.0, 0.0] };
        assert_eq!(t.count_below(0.5), 2);
        assert_eq!(t.inertia(1e-12), Inertia { positive: 1, negative: 1, zero: 1 });
        // [[0,1],[1,0]] has eigenvalues ±1.
        let t = Tridiagonal { diagonal: vec![0.0, 0.0], off_diagonal: vec![1.0] };
        assert_eq!(t.inertia(1e-12), Inertia { positive: 1, negative: 1, zero: 0 });
    }

    #[test]
    fn cycles() {
        let tol = 1e-12;
        let c4 = inertia_float(&adjacency_matrix(&named::cycle(4)), tol).unwrap();
        assert_eq!(c4, Inertia { positive: 1, negative: 1, zero: 2 });
        let c3 = inertia_float(&adjacency_matrix(&named::cycle(3)), tol).unwrap();
        assert_eq!(c3, Inertia { positive: 1, negative: 2, zero: 0 });
        let z = inertia_float(&HermitianMatrix::zeros(4), tol).unwrap();
        assert_eq!(z, Inertia { positive: 0, negative: 0, zero: 4 });
    }

    #[test]
    fn complex_gains_reduce_to_real_tridiagonal() {
        let g = named::cycle_with_gains(&[Gain::ONE, Gain::ONE, Gain::I]);
        let t = tridiagonalize(&adjacency_matrix(&g));
        assert!(t.off_diagonal.iter().all(|&b| b >= 0.0));
        // C3 with cycle gain i has eigenvalues 0 and ±√3.
        assert_eq!(t.inertia(1e-12), Inertia { positive: 1, negative: 1, zero: 1 });
        let trace: f64 = t.diagonal.iter().sum();
        assert!(trace.abs() < 1e-12);
    }

    #[test]
    fn rejects_bad_input() {
        let mut a = HermitianMatrix::zeros(2);
        a.set(0, 1, Complex64::new(1.0, 0.0));
        assert!(matches!(inertia_float(&a, 1e-9), Err(SpectralError::NotHermitian(_))));
        assert!(matches!(
            inertia_float(&HermitianMatrix::zeros(2), 0.0),
            Err(SpectralError::BadTolerance(_))
        ));
    }
}
