use super::ComplexMatrix;
use crate::error::{Error, Result};
use crate::scalar::{Complex, Real};

/// Sweep limit for the cyclic Jacobi iteration.
pub const MAX_SWEEPS: usize = 100;

/// Eigenvalues in ascending order with orthonormal eigenvectors as the
/// columns of `vectors`, in matching order.
#[derive(Clone, Debug)]
pub struct EigenDecomposition<T> {
    pub values: Vec<T>,
    pub vectors: ComplexMatrix<T>,
}

impl<T: Real> EigenDecomposition<T> {
    /// `V Λ V†`.
    pub fn reconstruct(&self) -> ComplexMatrix<T> {
        let n = self.values.len();
        ComplexMatrix::from_fn(n, n, |r, c| {
            (0..n).fold(Complex::new(T::zero(), T::zero()), |acc, k| {
                acc + self.vectors[(r, k)] * self.vectors[(c, k)].conj() * self.values[k]
            })
        })
    }
}

/// Ascending real eigenvalues of a Hermitian matrix.
pub fn eig_hermitian<T: Real>(h: &ComplexMatrix<T>) -> Result<Vec<T>> {
    jacobi(h, false).map(|d| d.values)
}

/// Full Hermitian eigendecomposition.
pub fn eigh<T: Real>(h: &ComplexMatrix<T>) -> Result<EigenDecomposition<T>> {
    jacobi(h, true)
}

fn jacobi<T: Real>(h: &ComplexMatrix<T>, want_vectors: bool) -> Result<EigenDecomposition<T>> {
    if !h.is_square() {
        return Err(Error::Shape(format!(
            "eigendecomposition of a {}x{} matrix",
            h.rows(),
            h.cols()
        )));
    }
    let dev = h.hermitian_deviation();
    if !(dev <= T::hermitian_tol()) {
        return Err(Error::NotHermitian(dev.to_f64().unwrap_or(f64::NAN)));
    }
    let n = h.rows();
    let mut a = h.hermitian_part();
    let mut v = if want_vectors {
        ComplexMatrix::identity(n)
    } else {
        ComplexMatrix::zeros(0, 0)
    };
    let scale = a.frobenius_norm().max(T::one());
    let stop = T::jacobi_tol() * scale;
    // Rotating away entries below this cannot change anything representable.
    let negligible = T::epsilon() * T::epsilon() * scale;

    let mut converged = false;
    for _ in 0..MAX_SWEEPS {
        if off_diagonal_norm(&a) <= stop {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[(p, q)];
                let r = apq.norm();
                if r <= negligible {
                    continue;
                }
                rotate(&mut a, want_vectors.then_some(&mut v), p, q, apq / r, r);
            }
        }
    }
    if !converged && off_diagonal_norm(&a) > stop {
        return Err(Error::NoConvergence(MAX_SWEEPS));
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| {
        a[(i, i)]
            .re
            .partial_cmp(&a[(j, j)].re)
            .expect("finite eigenvalues")
    });
    let values = order.iter().map(|&i| a[(i, i)].re).collect();
    let vectors = if want_vectors {
        ComplexMatrix::from_fn(n, n, |r, c| v[(r, order[c])])
    } else {
        v
    };
    Ok(EigenDecomposition { values, vectors })
}

fn off_diagonal_norm<T: Real>(a: &ComplexMatrix<T>) -> T {
    let n = a.rows();
    let mut s = T::zero();
    for r in 0..n {
        for c in 0..n {
            if r != c {
                s = s + a[(r, c)].norm_sqr();
            }
        }
    }
    s.sqrt()
}

/// Applies `A ← U† A U` with `U = D·P`, where `D` rotates the phase of
/// column `q` so that `a_pq` becomes the real `r`, and `P` is the real
/// Jacobi rotation annihilating it.
fn rotate<T: Real>(
    a: &mut ComplexMatrix<T>,
    v: Option<&mut ComplexMatrix<T>>,
    p: usize,
    q: usize,
    phase: Complex<T>,
    r: T,
) {
    let n = a.rows();
    let app = a[(p, p)].re;
    let aqq = a[(q, q)].re;
    let theta = (aqq - app) / (r + r);
    let t = if theta == T::zero() {
        T::one()
    } else {
        theta.signum() / (theta.abs() + (theta * theta + T::one()).sqrt())
    };
    let cs = T::one() / (t * t + T::one()).sqrt();
    let sn = t * cs;
    let inv_phase = phase.conj();

    // columns: U_pp = c, U_qp = -s·e^{-iφ}, U_pq = s, U_qq = c·e^{-iφ}
    let col_p = |x: Complex<T>, y: Complex<T>| x * cs - y * inv_phase * sn;
    let col_q = |x: Complex<T>, y: Complex<T>| x * sn + y * inv_phase * cs;
    for k in 0..n {
        let (x, y) = (a[(k, p)], a[(k, q)]);
        a[(k, p)] = col_p(x, y);
        a[(k, q)] = col_q(x, y);
    }
    for k in 0..n {
        let (x, y) = (a[(p, k)], a[(q, k)]);
        a[(p, k)] = x * cs - y * phase * sn;
        a[(q, k)] = x * sn + y * phase * cs;
    }
    a[(p, q)] = Complex::new(T::zero(), T::zero());
    a[(q, p)] = Complex::new(T::zero(), T::zero());
    a[(p, p)] = Complex::new(app - t * r, T::zero());
    a[(q, q)] = Complex::new(aqq + t * r, T::zero());

    if let Some(v) = v {
        for k in 0..n {
            let (x, y) = (v[(k, p)], v[(k, q)]);
            v[(k, p)] = col_p(x, y);
            v[(k, q)] = col_q(x, y);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::pauli_z;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_hermitian(n: usize, rng: &mut impl Rng) -> ComplexMatrix<f64> {
        let g = ComplexMatrix::from_fn(n, n, |_, _| {
            Complex::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
        });
        g.hermitian_part()
    }

    /// det(A) by Gaussian elimination with partial pivoting.
    fn det(mut m: Vec<Vec<Complex<f64>>>) -> Complex<f64> {
        let n = m.len();
        let mut d = Complex::new(1.0, 0.0);
        for col in 0..n {
            let piv = (col..n)
                .max_by(|&i, &j| m[i][col].norm().partial_cmp(&m[j][col].norm()).unwrap())
                .unwrap();
            if m[piv][col].norm() == 0.0 {
                return Complex::new(0.0, 0.0);
            }
            if piv != col {
                m.swap(piv, col);
                d = -d;
            }
            d *= m[col][col];
            for row in col + 1..n {
                let f = m[row][col] / m[col][col];
                let pivot_row = m[col].clone();
                for (x, p) in m[row][col..].iter_mut().zip(&pivot_row[col..]) {
                    *x -= f * p;
                }
            }
        }
        d
    }

    /// Real roots of det(A - λI) located by a sign-change scan then bisection.
    fn char_poly_roots(a: &ComplexMatrix<f64>) -> Vec<f64> {
        let n = a.rows();
        let p = |lam: f64| {
            let rows = (0..n)
                .map(|r| {
                    (0..n)
                        .map(|c| {
                            a[(r, c)]
                                - if r == c {
                                    Complex::new(lam, 0.0)
                                } else {
                                    Complex::new(0.0, 0.0)
                                }
                        })
                        .collect()
                })
                .collect();
            det(rows).re
        };
        let bound = a.frobenius_norm() + 1.0;
        let steps = 200_000;
        let mut roots = Vec::new();
        let mut x0 = -bound;
        let mut f0 = p(x0);
        for i in 1..=steps {
            let x1 = -bound + 2.0 * bound * i as f64 / steps as f64;
            let f1 = p(x1);
            if f0 == 0.0 {
                roots.push(x0);
            } else if f0.signum() != f1.signum() && f1 != 0.0 {
                let (mut lo, mut hi, mut flo) = (x0, x1, f0);
                for _ in 0..200 {
                    let mid = 0.5 * (lo + hi);
                    let fm = p(mid);
                    if fm.signum() == flo.signum() {
                        lo = mid;
                        flo = fm;
                    } else {
                        hi = mid;
                    }
                }
                roots.push(0.5 * (lo + hi));
            }
            x0 = x1;
            f0 = f1;
        }
        roots
    }

    #[test]
    fn identity_spectrum() {
        assert_eq!(
            eig_hermitian(&ComplexMatrix::<f64>::identity(3)).unwrap(),
            vec![1.0, 1.0, 1.0]
        );
    }

    #[test]
    fn pauli_z_spectrum() {
        assert_eq!(eig_hermitian(&pauli_z::<f64>()).unwrap(), vec![-1.0, 1.0]);
    }

    #[test]
    fn matches_characteristic_polynomial_roots() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..5 {
            let h = random_hermitian(4, &mut rng);
            let vals = eig_hermitian(&h).unwrap();
            let roots = char_poly_roots(&h);
            assert_eq!(roots.len(), 4, "expected four simple roots, got {roots:?}");
            for (v, r) in vals.iter().zip(&roots) {
                assert!((v - r).abs() <= 1e-9, "eigenvalue {v} vs root {r}");
            }
        }
    }

    #[test]
    fn reconstruction_and_orthonormality() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for n in 1..=8 {
            let h = random_hermitian(n, &mut rng);
            let d = eigh(&h).unwrap();
            assert!(d.values.windows(2).all(|w| w[0] <= w[1]));
            assert!(d.reconstruct().max_abs_diff(&h) <= 1e-10);
            let gram = &d.vectors.adjoint() * &d.vectors;
            assert!(gram.max_abs_diff(&ComplexMatrix::identity(n)) <= 1e-12);
        }
    }

    #[test]
    fn deterministic() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let h = random_hermitian(6, &mut rng);
        let a = eigh(&h).unwrap();
        let b = eigh(&h).unwrap();
        assert_eq!(a.values, b.values);
        assert_eq!(a.vectors, b.vectors);
    }

    #[test]
    fn rejects_non_hermitian_and_non_square() {
        let mut m = ComplexMatrix::<f64>::identity(2);
        m[(0, 1)] = Complex::new(1e-6, 0.0);
        assert!(matches!(eig_hermitian(&m), Err(Error::NotHermitian(_))));
        assert!(matches!(
            eig_hermitian(&ComplexMatrix::<f64>::zeros(2, 3)),
            Err(Error::Shape(_))
        ));
    }

    #[test]
    fn symmetrizes_within_tolerance() {
        let mut m = ComplexMatrix::<f64>::identity(2);
        m[(0, 1)] = Complex::new(0.5e-12, 0.0);
        let vals = eig_hermitian(&m).unwrap();
        assert!((vals[0] - (1.0 - 0.25e-12)).abs() < 1e-15);
    }

    #[test]
    fn single_precision() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let h64 = random_hermitian(4, &mut rng);
        let h32 = ComplexMatrix::from_fn(4, 4, |r, c| {
            let z = h64[(r, c)];
            Complex::new(z.re as f32, z.im as f32)
        });
        let v64 = eig_hermitian(&h64).unwrap();
        let v32 = eig_hermitian(&h32).unwrap();
        for (a, b) in v64.iter().zip(&v32) {
            assert!((a - *b as f64).abs() < 1e-5);
        }
    }
}
