use super::{eigh, ComplexMatrix};
use crate::error::{Error, Result};
use crate::scalar::{c, re, Complex, Real};

pub fn identity2<T: Real>() -> ComplexMatrix<T> {
    ComplexMatrix::identity(2)
}

pub fn pauli_x<T: Real>() -> ComplexMatrix<T> {
    let (o, z) = (re(T::one()), re(T::zero()));
    ComplexMatrix::from_vec(2, 2, vec![z, o, o, z]).expect("2x2")
}

pub fn pauli_y<T: Real>() -> ComplexMatrix<T> {
    let z = re(T::zero());
    ComplexMatrix::from_vec(
        2,
        2,
        vec![z, c(T::zero(), -T::one()), c(T::zero(), T::one()), z],
    )
    .expect("2x2")
}

pub fn pauli_z<T: Real>() -> ComplexMatrix<T> {
    ComplexMatrix::from_diag(&[T::one(), -T::one()])
}

/// Kronecker product `a ⊗ b`.
pub fn kron<T: Real>(a: &ComplexMatrix<T>, b: &ComplexMatrix<T>) -> Result<ComplexMatrix<T>> {
    let rows = a.rows().checked_mul(b.rows()).ok_or(Error::SizeOverflow)?;
    let cols = a.cols().checked_mul(b.cols()).ok_or(Error::SizeOverflow)?;
    rows.checked_mul(cols).ok_or(Error::SizeOverflow)?;
    let (br, bc) = (b.rows(), b.cols());
    Ok(ComplexMatrix::from_fn(rows, cols, |r, col| {
        a[(r / br, col / bc)] * b[(r % br, col % bc)]
    }))
}

/// Left-to-right Kronecker product of a non-empty list of factors.
pub fn kron_all<T: Real>(factors: &[ComplexMatrix<T>]) -> Result<ComplexMatrix<T>> {
    let (first, rest) = factors
        .split_first()
        .ok_or_else(|| Error::Shape("empty Kronecker product".into()))?;
    rest.iter().try_fold(first.clone(), |acc, f| kron(&acc, f))
}

/// Reduced matrix on the `keep` qubits, in ascending qubit order.
///
/// Qubit 0 is the leftmost (most significant) tensor factor, so basis
/// index `b` of an `n`-qubit register holds qubit `m` in bit `n - 1 - m`.
pub fn partial_trace<T: Real>(
    rho: &ComplexMatrix<T>,
    qubit_count: usize,
    keep: &[usize],
) -> Result<ComplexMatrix<T>> {
    if qubit_count == 0 || qubit_count >= usize::BITS as usize {
        return Err(Error::Shape(format!(
            "unsupported qubit count {qubit_count}"
        )));
    }
    let dim = 1usize << qubit_count;
    if rho.rows() != dim || rho.cols() != dim {
        return Err(Error::Shape(format!(
            "{}x{} matrix is not a {qubit_count}-qubit operator",
            rho.rows(),
            rho.cols()
        )));
    }
    let mut kept: Vec<usize> = keep.to_vec();
    kept.sort_unstable();
    kept.dedup();
    if kept.is_empty() {
        return Err(Error::Shape(
            "partial trace must keep at least one qubit".into(),
        ));
    }
    if let Some(&bad) = kept.iter().find(|&&q| q >= qubit_count) {
        return Err(Error::Index {
            index: bad,
            qubits: qubit_count,
        });
    }
    let traced: Vec<usize> = (0..qubit_count).filter(|q| !kept.contains(q)).collect();

    // Scatters the bits of `value` (most significant first) onto `qubits`.
    let place = |value: usize, qubits: &[usize]| -> usize {
        let k = qubits.len();
        qubits.iter().enumerate().fold(0, |acc, (i, &q)| {
            let bit = (value >> (k - 1 - i)) & 1;
            acc | (bit << (qubit_count - 1 - q))
        })
    };

    let out_dim = 1usize << kept.len();
    let env_dim = 1usize << traced.len();
    let mut out = ComplexMatrix::zeros(out_dim, out_dim);
    for e in 0..env_dim {
        let env = place(e, &traced);
        for i in 0..out_dim {
            let row = place(i, &kept) | env;
            for j in 0..out_dim {
                let col = place(j, &kept) | env;
                out[(i, j)] = out[(i, j)] + rho[(row, col)];
            }
        }
    }
    Ok(out)
}

/// Hermitian positive-semidefinite square root.
///
/// Eigenvalues at or above `-psd_tol` count as non-negative; those at the
/// round-off floor (including slightly negative ones) are set to zero so
/// that rank-deficient inputs keep an exactly rank-deficient root.
pub fn psd_sqrt<T: Real>(h: &ComplexMatrix<T>) -> Result<ComplexMatrix<T>> {
    let d = eigh(h)?;
    let n = d.values.len();
    let floor = T::round_off_floor(h.frobenius_norm());
    let mut roots = Vec::with_capacity(n);
    for &lam in &d.values {
        if lam < -T::psd_tol() {
            return Err(Error::NotPsd(lam.to_f64().unwrap_or(f64::NAN)));
        }
        roots.push(if lam <= floor { T::zero() } else { lam.sqrt() });
    }
    let s = ComplexMatrix::from_fn(n, n, |r, col| {
        (0..n).fold(Complex::new(T::zero(), T::zero()), |acc, k| {
            acc + d.vectors[(r, k)] * d.vectors[(col, k)].conj() * roots[k]
        })
    });
    Ok(s.hermitian_part())
}
