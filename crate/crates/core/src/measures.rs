//! Degree of first-order coherence, Wootters concurrence, Horodecki CHSH
//! quantities and purity for one- and two-qubit states.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{eig_hermitian, kron, pauli_x, pauli_y, pauli_z, psd_sqrt, ComplexMatrix};
use crate::scalar::{re, Real};
use crate::states::DensityMatrix;

/// The five resource quantities of one two-qubit state.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ResourceProfile<T> {
    /// Squared degree of coherence `D²`, the mean of the two marginal `D²`.
    pub d2: T,
    pub concurrence: T,
    /// Horodecki `M`: sum of the two largest eigenvalues of `TᵀT`.
    pub m: T,
    /// Bell nonlocality `max(0, 2√M − 2)`.
    pub n: T,
    pub purity: T,
}

impl<T: Real> ResourceProfile<T> {
    /// `N > bell_tol`; ties at the CHSH bound count as local.
    pub fn is_bell_nonlocal(&self) -> bool {
        self.n > T::bell_tol()
    }
}

/// `Tr ρ²`.
pub fn purity<T: Real>(rho: &DensityMatrix<T>) -> T {
    rho.matrix().as_slice().iter().map(|z| z.norm_sqr()).sum()
}

fn coherence_radicand<T: Real>(rho1: &DensityMatrix<T>) -> Result<T> {
    let rad = T::of(2.0) * purity(rho1) - T::one();
    if rad < -T::psd_tol() {
        return Err(Error::InvalidState(format!(
            "2 Tr ρ² − 1 = {rad} is negative"
        )));
    }
    Ok(rad.max(T::zero()))
}

/// Degree of first-order coherence `D = √(2 Tr ρ² − 1)` of a single qubit.
pub fn coherence_degree_single<T: Real>(rho1: &DensityMatrix<T>) -> Result<T> {
    rho1.expect_qubits(1, "coherence_degree_single")?;
    coherence_radicand(rho1).map(|r| r.sqrt())
}

/// Squared degree of coherence `D² = (D_A² + D_B²)/2` of a qubit pair.
pub fn coherence_degree_pair<T: Real>(rho2: &DensityMatrix<T>) -> Result<T> {
    rho2.expect_qubits(2, "coherence_degree_pair")?;
    let da = coherence_radicand(&rho2.reduce(&[0])?)?;
    let db = coherence_radicand(&rho2.reduce(&[1])?)?;
    Ok((da + db) * T::of(0.5))
}

/// Wootters concurrence.
///
/// The square roots `√λᵢ` of the spectrum of `√ρ ρ̃ √ρ` (with
/// `ρ̃ = (σy⊗σy) ρ* (σy⊗σy)`) are the singular values of `√ρ √ρ̃`. They are
/// read off the Hermitian dilation `[[0, A], [A†, 0]]`, whose spectrum is
/// `±√λᵢ`, so no square root of a near-zero eigenvalue is ever taken.
pub fn concurrence<T: Real>(rho2: &DensityMatrix<T>) -> Result<T> {
    rho2.expect_qubits(2, "concurrence")?;
    let s = psd_sqrt(rho2.matrix())?;
    let flip = spin_flip::<T>();
    let s_tilde = &(&flip * &s.conj()) * &flip;
    let a = &s * &s_tilde;
    let dilation = ComplexMatrix::from_fn(8, 8, |r, c| match (r < 4, c < 4) {
        (true, false) => a[(r, c - 4)],
        (false, true) => a[(c, r - 4)].conj(),
        _ => re(T::zero()),
    });
    let spectrum = eig_hermitian(&dilation)?;
    let sv: Vec<T> = spectrum[4..]
        .iter()
        .rev()
        .map(|&x| x.max(T::zero()))
        .collect();
    Ok((sv[0] - sv[1] - sv[2] - sv[3]).max(T::zero()))
}

/// `σy ⊗ σy`.
pub fn spin_flip<T: Real>() -> ComplexMatrix<T> {
    kron(&pauli_y(), &pauli_y()).expect("4x4")
}

/// Correlation matrix `T_ij = Tr(ρ σᵢ⊗σⱼ)`, Pauli order (x, y, z).
pub fn correlation_matrix<T: Real>(rho2: &DensityMatrix<T>) -> Result<[[T; 3]; 3]> {
    rho2.expect_qubits(2, "correlation_matrix")?;
    let paulis = [pauli_x::<T>(), pauli_y(), pauli_z()];
    let mut t = [[T::zero(); 3]; 3];
    for (i, si) in paulis.iter().enumerate() {
        for (j, sj) in paulis.iter().enumerate() {
            let op = kron(si, sj)?;
            let mut acc = re(T::zero());
            for a in 0..4 {
                for b in 0..4 {
                    acc = acc + rho2.entry(a, b) * op[(b, a)];
                }
            }
            t[i][j] = acc.re;
        }
    }
    Ok(t)
}

/// Horodecki `M(ρ)`: the two largest eigenvalues of `TᵀT`, summed.
pub fn bell_m<T: Real>(rho2: &DensityMatrix<T>) -> Result<T> {
    let t = correlation_matrix(rho2)?;
    let u = ComplexMatrix::from_fn(3, 3, |r, c| {
        re((0..3).map(|k| t[k][r] * t[k][c]).sum::<T>())
    });
    let vals = eig_hermitian(&u)?;
    Ok((vals[2] + vals[1]).max(T::zero()))
}

/// `max(0, 2√M − 2)`.
pub fn bell_n_from_m<T: Real>(m: T) -> T {
    (T::of(2.0) * m.max(T::zero()).sqrt() - T::of(2.0)).max(T::zero())
}

/// Bell nonlocality `N = max(0, 2√M − 2)`.
pub fn bell_n<T: Real>(rho2: &DensityMatrix<T>) -> Result<T> {
    bell_m(rho2).map(bell_n_from_m)
}

pub fn profile<T: Real>(rho2: &DensityMatrix<T>) -> Result<ResourceProfile<T>> {
    rho2.expect_qubits(2, "profile")?;
    let m = bell_m(rho2)?;
    Ok(ResourceProfile {
        d2: coherence_degree_pair(rho2)?,
        concurrence: concurrence(rho2)?,
        m,
        n: bell_n_from_m(m),
        purity: purity(rho2),
    })
}

fn check_x_shape<T: Real>(rho2: &DensityMatrix<T>) -> Result<()> {
    rho2.expect_qubits(2, "X-state formula")?;
    for r in 0..4 {
        for c in 0..4 {
            if r != c && r + c != 3 && !(rho2.entry(r, c).norm() < T::hermitian_tol()) {
                return Err(Error::Shape(format!(
                    "not an X state: entry ({r}, {c}) is nonzero"
                )));
            }
        }
    }
    Ok(())
}

/// The three eigenvalues of `TᵀT` for an X state:
/// `μ₁ = 4(|ρ₁₄| + |ρ₂₃|)²`, `μ₂ = 4(|ρ₁₄| − |ρ₂₃|)²`,
/// `μ₃ = (ρ₁₁ − ρ₂₂ − ρ₃₃ + ρ₄₄)²`.
pub fn x_state_mu<T: Real>(rho2: &DensityMatrix<T>) -> Result<[T; 3]> {
    check_x_shape(rho2)?;
    let r14 = rho2.entry(0, 3).norm();
    let r23 = rho2.entry(1, 2).norm();
    let four = T::of(4.0);
    let z = rho2.entry(0, 0).re - rho2.entry(1, 1).re - rho2.entry(2, 2).re + rho2.entry(3, 3).re;
    Ok([
        four * (r14 + r23).powi(2),
        four * (r14 - r23).powi(2),
        z * z,
    ])
}

/// `N = max(0, B₁, B₂)` with `B₁ = 2√(μ₁+μ₂) − 2`, `B₂ = 2√(μ₁+μ₃) − 2`.
pub fn x_state_bell_n<T: Real>(rho2: &DensityMatrix<T>) -> Result<T> {
    let [m1, m2, m3] = x_state_mu(rho2)?;
    let two = T::of(2.0);
    let b1 = two * (m1 + m2).sqrt() - two;
    let b2 = two * (m1 + m3).sqrt() - two;
    Ok(T::zero().max(b1).max(b2))
}

/// `2·max(0, |ρ₂₃| − √(ρ₁₁ρ₄₄), |ρ₁₄| − √(ρ₂₂ρ₃₃))`.
pub fn x_state_concurrence<T: Real>(rho2: &DensityMatrix<T>) -> Result<T> {
    check_x_shape(rho2)?;
    let d = |i: usize| rho2.entry(i, i).re.max(T::zero());
    let a = rho2.entry(1, 2).norm() - (d(0) * d(3)).sqrt();
    let b = rho2.entry(0, 3).norm() - (d(1) * d(2)).sqrt();
    Ok(T::of(2.0) * T::zero().max(a).max(b))
}
