//! Density matrices and the state families: W-type tripartite states and
//! their reduced pairs, Horodecki mixtures, and the minimal-coherence family.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::linalg::{eig_hermitian, partial_trace, ComplexMatrix};
use crate::scalar::{re, Complex, Real};

/// Validated density matrix on one to three qubits.
///
/// Hermitian within `hermitian_tol` (stored symmetrized), unit trace within
/// `trace_tol`, and no eigenvalue below `-state_eig_tol`.
#[derive(Clone, Debug, PartialEq)]
pub struct DensityMatrix<T> {
    qubits: usize,
    matrix: ComplexMatrix<T>,
}

impl<T: Real> DensityMatrix<T> {
    pub fn new(matrix: ComplexMatrix<T>) -> Result<Self> {
        let qubits = qubit_count_of(&matrix)?;
        let dev = matrix.hermitian_deviation();
        if !(dev <= T::hermitian_tol()) {
            return Err(Error::NotHermitian(dev.to_f64().unwrap_or(f64::NAN)));
        }
        let matrix = matrix.hermitian_part();
        let tr = matrix.trace().re;
        if !((tr - T::one()).abs() <= T::trace_tol()) {
            return Err(Error::InvalidState(format!("trace is {tr}, expected 1")));
        }
        let min = eig_hermitian(&matrix)?[0];
        if min < -T::state_eig_tol() {
            return Err(Error::NotPsd(min.to_f64().unwrap_or(f64::NAN)));
        }
        Ok(DensityMatrix { qubits, matrix })
    }

    /// Wraps a matrix that is a density matrix by construction (a channel
    /// output or partial trace of a validated state).
    pub(crate) fn from_trusted(matrix: ComplexMatrix<T>) -> Self {
        let qubits = qubit_count_of(&matrix).expect("trusted state has a qubit dimension");
        DensityMatrix {
            qubits,
            matrix: matrix.hermitian_part(),
        }
    }

    /// `|ψ⟩⟨ψ|` for a normalized state vector.
    pub fn from_pure(psi: &[Complex<T>]) -> Result<Self> {
        let norm: T = psi.iter().map(|z| z.norm_sqr()).sum();
        if !((norm - T::one()).abs() <= T::param_tol()) {
            return Err(Error::Parameter(format!(
                "state vector has squared norm {norm}"
            )));
        }
        Self::new(ComplexMatrix::outer(psi))
    }

    pub fn qubits(&self) -> usize {
        self.qubits
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &ComplexMatrix<T> {
        &self.matrix
    }

    pub fn into_matrix(self) -> ComplexMatrix<T> {
        self.matrix
    }

    #[inline]
    pub fn entry(&self, r: usize, c: usize) -> Complex<T> {
        self.matrix[(r, c)]
    }

    /// Reduced state on `keep` (ascending qubit order).
    pub fn reduce(&self, keep: &[usize]) -> Result<Self> {
        partial_trace(&self.matrix, self.qubits, keep).map(Self::from_trusted)
    }

    pub(crate) fn expect_qubits(&self, n: usize, what: &str) -> Result<()> {
        if self.qubits == n {
            Ok(())
        } else {
            Err(Error::Shape(format!(
                "{what} needs a {n}-qubit state, got {} qubits",
                self.qubits
            )))
        }
    }
}

fn qubit_count_of<T: Real>(m: &ComplexMatrix<T>) -> Result<usize> {
    match (m.rows(), m.cols()) {
        (2, 2) => Ok(1),
        (4, 4) => Ok(2),
        (8, 8) => Ok(3),
        (r, c) => Err(Error::Shape(format!(
            "{r}x{c} is not a 1-3 qubit density matrix"
        ))),
    }
}

/// Real amplitudes of `α|001⟩ + β|010⟩ + γ|100⟩` with `α² + β² + γ² = 1`.
///
/// Signs are allowed (the renormalized XXZ ground state has a negative
/// middle amplitude) but every closed form depends only on the squares.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct WParams<T> {
    pub alpha: T,
    pub beta: T,
    pub gamma: T,
}

impl<T: Real> WParams<T> {
    pub fn new(alpha: T, beta: T, gamma: T) -> Result<Self> {
        if !(alpha.is_finite() && beta.is_finite() && gamma.is_finite()) {
            return Err(Error::Parameter("W amplitudes must be finite".into()));
        }
        let norm = alpha * alpha + beta * beta + gamma * gamma;
        if !((norm - T::one()).abs() <= T::param_tol()) {
            return Err(Error::Parameter(format!(
                "α² + β² + γ² = {norm}, expected 1"
            )));
        }
        Ok(WParams { alpha, beta, gamma })
    }

    /// Rescales arbitrary amplitudes onto the unit sphere.
    pub fn normalized(alpha: T, beta: T, gamma: T) -> Result<Self> {
        let norm = (alpha * alpha + beta * beta + gamma * gamma).sqrt();
        if !(norm > T::zero() && norm.is_finite()) {
            return Err(Error::Parameter(
                "cannot normalize a zero or non-finite amplitude vector".into(),
            ));
        }
        Self::new(alpha / norm, beta / norm, gamma / norm)
    }

    /// Non-negative amplitudes from a point `(α², β², γ²)` of the simplex.
    pub fn from_squares(a2: T, b2: T, g2: T) -> Result<Self> {
        if a2 < T::zero() || b2 < T::zero() || g2 < T::zero() {
            return Err(Error::Parameter(
                "squared amplitudes must be non-negative".into(),
            ));
        }
        Self::new(a2.sqrt(), b2.sqrt(), g2.sqrt())
    }

    pub fn squares(&self) -> (T, T, T) {
        (
            self.alpha * self.alpha,
            self.beta * self.beta,
            self.gamma * self.gamma,
        )
    }

    /// State vector in the computational basis, qubit 1 leftmost.
    pub fn state_vector(&self) -> Vec<Complex<T>> {
        let mut psi = vec![re(T::zero()); 8];
        psi[0b001] = re(self.alpha);
        psi[0b010] = re(self.beta);
        psi[0b100] = re(self.gamma);
        psi
    }

    /// Squared amplitudes on the two sites of `pair`, lower label first.
    pub fn pair_squares(&self, pair: PairSelector) -> (T, T) {
        let (a2, b2, g2) = self.squares();
        match pair {
            // site 1 carries γ (|100⟩), site 2 carries β, site 3 carries α
            PairSelector::P12 => (g2, b2),
            PairSelector::P13 => (g2, a2),
            PairSelector::P23 => (b2, a2),
        }
    }
}

/// One of the three qubit pairs of a tripartite state, labelled 1..3.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PairSelector {
    P12,
    P13,
    P23,
}

impl PairSelector {
    pub const ALL: [PairSelector; 3] = [PairSelector::P12, PairSelector::P13, PairSelector::P23];

    /// Zero-based qubit indices kept by this pair.
    pub fn qubits(self) -> [usize; 2] {
        match self {
            PairSelector::P12 => [0, 1],
            PairSelector::P13 => [0, 2],
            PairSelector::P23 => [1, 2],
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            PairSelector::P12 => "12",
            PairSelector::P13 => "13",
            PairSelector::P23 => "23",
        }
    }
}

impl fmt::Display for PairSelector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for PairSelector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "12" | "21" => Ok(PairSelector::P12),
            "13" | "31" => Ok(PairSelector::P13),
            "23" | "32" => Ok(PairSelector::P23),
            other => Err(Error::Parse(format!(
                "unknown qubit pair {other:?} (expected 12, 13 or 23)"
            ))),
        }
    }
}

/// `|φ⟩⟨φ|` of the W-type pure state.
pub fn w_state<T: Real>(p: &WParams<T>) -> DensityMatrix<T> {
    DensityMatrix::from_trusted(ComplexMatrix::outer(&p.state_vector()))
}

/// Two-qubit reduced state of a three-qubit state, ordered (lower, higher).
pub fn reduce_pair<T: Real>(
    rho3: &DensityMatrix<T>,
    sel: PairSelector,
) -> Result<DensityMatrix<T>> {
    rho3.expect_qubits(3, "reduce_pair")?;
    rho3.reduce(&sel.qubits())
}

/// `(|01⟩ + |10⟩)/√2`, the Bell state mixed into the Horodecki family.
pub fn phi_plus<T: Real>() -> DensityMatrix<T> {
    let h = re(T::FRAC_1_SQRT_2());
    let z = re(T::zero());
    DensityMatrix::from_trusted(ComplexMatrix::outer(&[z, h, h, z]))
}

/// `ε|φ⁺⟩⟨φ⁺| + (1 − ε)|00⟩⟨00|`.
pub fn horodecki_state<T: Real>(eps: T) -> Result<DensityMatrix<T>> {
    if !(eps >= T::zero() && eps <= T::one()) {
        return Err(Error::Parameter(format!(
            "Horodecki ε = {eps} outside [0, 1]"
        )));
    }
    let half = eps * T::of(0.5);
    let mut m = ComplexMatrix::from_diag(&[T::one() - eps, half, half, T::zero()]);
    m[(1, 2)] = re(half);
    m[(2, 1)] = re(half);
    Ok(DensityMatrix::from_trusted(m))
}

/// Populations `(1/2, 1/2 − a, a, 0)` with `y·√(a/2 − a²)` on the
/// `|01⟩⟨10|` coherence; `y = 1` is the noiseless member, `y = Y` its
/// dephased counterpart.
pub fn min_coherence_state<T: Real>(a: T, y: T) -> Result<DensityMatrix<T>> {
    let half = T::of(0.5);
    if !(a >= T::zero() && a <= half) {
        return Err(Error::Parameter(format!("a = {a} outside [0, 1/2]")));
    }
    if !(y >= T::zero() && y <= T::one()) {
        return Err(Error::Parameter(format!("y = {y} outside [0, 1]")));
    }
    let off = y * (a * half - a * a).max(T::zero()).sqrt();
    let mut m = ComplexMatrix::from_diag(&[half, half - a, a, T::zero()]);
    m[(1, 2)] = re(off);
    m[(2, 1)] = re(off);
    Ok(DensityMatrix::from_trusted(m))
}
