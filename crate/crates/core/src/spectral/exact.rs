//! Exact characteristic polynomials for graphs whose gains are fourth roots
//! of unity, and the inertia read off them by Descartes' rule of signs.

use super::Inertia;
use crate::error::SpectralError;
use crate::graph::GainGraph;

/// `re + i·im` with checked 128-bit parts.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
struct GaussInt {
    re: i128,
    im: i128,
}

impl GaussInt {
    const ZERO: GaussInt = GaussInt { re: 0, im: 0 };

    fn from_exponent(k: u8) -> GaussInt {
        match k % 4 {
            0 => GaussInt { re: 1, im: 0 },
            1 => GaussInt { re: 0, im: 1 },
            2 => GaussInt { re: -1, im: 0 },
            _ => GaussInt { re: 0, im: -1 },
        }
    }

    fn add(self, o: GaussInt) -> Option<GaussInt> {
        Some(GaussInt { re: self.re.checked_add(o.re)?, im: self.im.checked_add(o.im)? })
    }

    fn mul(self, o: GaussInt) -> Option<GaussInt> {
        let re = self.re.checked_mul(o.re)?.checked_sub(self.im.checked_mul(o.im)?)?;
        let im = self.re.checked_mul(o.im)?.checked_add(self.im.checked_mul(o.re)?)?;
        Some(GaussInt { re, im })
    }
}

/// Monic integer polynomial; `coefficients[k]` multiplies `λ^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerPolynomial {
    pub coefficients: Vec<i128>,
}

impl IntegerPolynomial {
    pub fn degree(&self) -> usize {
        self.coefficients.len() - 1
    }

    /// Multiplicity of the root `0`.
    pub fn trailing_zeros(&self) -> usize {
        self.coefficients.iter().take_while(|&&c| c == 0).count()
    }

    /// Sign changes in the sequence of nonzero coefficients.
    pub fn sign_changes(&self) -> usize {
        let signs: Vec<bool> = self.coefficients.iter().filter(|&&c| c != 0).map(|&c| c > 0).collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    }
}

/// Sparse adjacency rows as `(column, gain)` pairs.
fn exact_rows(g: &GainGraph) -> Result<Vec<Vec<(usize, GaussInt)>>, SpectralError> {
    let mut rows = vec![Vec::new(); g.order()];
    for e in g.edges() {
        let k = e.gain.exact_exponent().ok_or(SpectralError::NonExactGain(e.u, e.v))?;
        rows[e.u].push((e.v, GaussInt::from_exponent(k)));
        rows[e.v].push((e.u, GaussInt::from_exponent((4 - k) % 4)));
    }
    Ok(rows)
}

/// `det(λI - A(G))` by the Faddeev–LeVerrier recurrence in exact
/// Gaussian-integer arithmetic.
///
/// With `M_0 = 0`, `c_n = 1`: `M_k = A·M_{k-1} + c_{n-k+1}·I` and
/// `c_{n-k} = -tr(A·M_k) / k`. Every division is exact and every
/// coefficient is real for a Hermitian `A`.
pub fn char_poly_exact(g: &GainGraph) -> Result<IntegerPolynomial, SpectralError> {
    let n = g.order();
    let rows = exact_rows(g)?;
    let overflow = || SpectralError::Overflow;
    let mut coefficients = vec![0i128; n + 1];
    coefficients[n] = 1;
    let mut m = vec![vec![GaussInt::ZERO; n]; n];

    for k in 1..=n {
        // M_k = A·M_{k-1} + c_{n-k+1}·I
        let mut next = vec![vec![GaussInt::ZERO; n]; n];
        for (i, row) in rows.iter().enumerate() {
            for &(l, a) in row {
                for j in 0..n {
                    let term = a.mul(m[l][j]).ok_or_else(overflow)?;
                    next[i][j] = next[i][j].add(term).ok_or_else(overflow)?;
                }
            }
        }
        let shift = GaussInt { re: coefficients[n - k + 1], im: 0 };
        for (i, row) in next.iter_mut().enumerate() {
            row[i] = row[i].add(shift).ok_or_else(overflow)?;
        }
        m = next;

        // tr(A·M_k)
        let mut trace = GaussInt::ZERO;
        for (i, row) in rows.iter().enumerate() {
            for &(l, a) in row {
                trace = trace.add(a.mul(m[l][i]).ok_or_else(overflow)?).ok_or_else(overflow)?;
            }
        }
        assert_eq!(trace.im, 0, "trace of a Hermitian product must be real");
        let k = k as i128;
        assert_eq!(trace.re % k, 0, "Faddeev-LeVerrier division must be exact");
        coefficients[n - k as usize] = -(trace.re / k);
    }
    Ok(IntegerPolynomial { coefficients })
}

/// Inertia from the exact characteristic polynomial. Every root is real,
/// so Descartes' rule counts the positive roots exactly.
pub fn inertia_exact(g: &GainGraph) -> Result<Inertia, SpectralError> {
    let poly = char_poly_exact(g)?;
    let zero = poly.trailing_zeros();
    let positive = poly.sign_changes();
    Ok(Inertia { positive, negative: g.order() - zero - positive, zero })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gain::Gain;
    use crate::graph::named;

    /// Principal minors by Laplace expansion, as an oracle for the
    /// coefficients: c_{n-k} = (-1)^k · sum of k×k principal minors.
    fn principal_minor_poly(g: &GainGraph) -> Vec<i128> {
        let n = g.order();
        let entry = |i: usize, j: usize| -> (i128, i128) {
            match g.gain(i, j) {
                None => (0, 0),
                Some(x) => {
                    let z = x.value();
                    (z.re.round() as i128, z.im.round() as i128)
                }
            }
        };
        fn minor(
            rows: &[usize],
            cols: &[usize],
            entry: &dyn Fn(usize, usize) -> (i128, i128),
        ) -> (i128, i128) {
            if rows.is_empty() {
                return (1, 0);
            }
            let mut total = (0, 0);
            for (pos, &col) in cols.iter().enumerate() {
                let (are, aim) = entry(rows[0], col);
                if are == 0 && aim == 0 {
                    continue;
                }
                let rest: Vec<usize> =
                    cols.iter().enumerate().filter(|&(p, _)| p != pos).map(|(_, &c)| c).collect();
                let sub = minor(&rows[1..], &rest, entry);
                let sign = if pos % 2 == 0 { 1 } else { -1 };
                total.0 += sign * (are * sub.0 - aim * sub.1);
                total.1 += sign * (are * sub.1 + aim * sub.0);
            }
            total
        }
        let mut coeffs = vec![0i128; n + 1];
        for mask in 0u32..(1 << n) {
            let idx: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
            let k = idx.len();
            let (re, im) = minor(&idx, &idx, &entry);
            assert_eq!(im, 0);
            let sign = if k % 2 == 0 { 1 } else { -1 };
            coeffs[n - k] += sign * re;
        }
        coeffs
    }

    #[test]
    fn small_polynomials() {
        assert_eq!(char_poly_exact(&named::path(2)).unwrap().coefficients, vec![-1, 0, 1]);
        assert_eq!(char_poly_exact(&named::cycle(3)).unwrap().coefficients, vec![-2, -3, 0, 1]);
        let c3i = named::cycle_with_gains(&[Gain::ONE, Gain::ONE, Gain::I]);
        assert_eq!(char_poly_exact(&c3i).unwrap().coefficients, vec![0, -3, 0, 1]);
    }

    #[test]
    fn matches_principal_minor_oracle() {
        let gains = [Gain::ONE, Gain::I, Gain::MINUS_ONE, Gain::MINUS_I];
        let mut edges = Vec::new();
        let mut k = 0;
        for u in 0..6 {
            for v in u + 1..6 {
                if (u * 7 + v * 3) % 5 < 3 {
                    edges.push((u, v, gains[k % 4]));
                    k += 1;
                }
            }
        }
        let g = GainGraph::new(6, edges).unwrap();
        assert_eq!(char_poly_exact(&g).unwrap().coefficients, principal_minor_poly(&g));
        let p = named::petersen();
        assert_eq!(char_poly_exact(&p).unwrap().coefficients, principal_minor_poly(&p));
    }

    #[test]
    fn descartes_inertia() {
        assert_eq!(
            inertia_exact(&named::cycle(3)).unwrap(),
            Inertia { positive: 1, negative: 2, zero: 0 }
        );
        let c3i = named::cycle_with_gains(&[Gain::ONE, Gain::ONE, Gain::I]);
        assert_eq!(inertia_exact(&c3i).unwrap(), Inertia { positive: 1, negative: 1, zero: 1 });
        assert_eq!(
            inertia_exact(&GainGraph::empty(3)).unwrap(),
            Inertia { positive: 0, negative: 0, zero: 3 }
        );
    }

    #[test]
    fn rejects_float_gains() {
        let g = GainGraph::new(2, [(0, 1, Gain::from_angle_degrees(30.0).unwrap())]).unwrap();
        assert_eq!(char_poly_exact(&g).unwrap_err(), SpectralError::NonExactGain(0, 1));
    }
}
