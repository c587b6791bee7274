//! Phase-flip (dephasing) noise on every qubit of a register.
//!
//! Single-qubit Kraus pair: `E₁ = √p I`, `E₂ = √(1 − p) σz`. Applied
//! independently to each qubit, a coherence between basis states that differ
//! on `k` qubits is multiplied by `(2p − 1)^k`; the two-site coherences of a
//! W-type state therefore shrink by `Y = (1 − 2p)²` while populations stay.

use crate::error::{Error, Result};
use crate::linalg::{identity2, kron_all, pauli_z, ComplexMatrix};
use crate::measures::{profile, ResourceProfile};
use crate::scalar::Real;
use crate::states::{reduce_pair, w_state, DensityMatrix, PairSelector, WParams};

/// Decoherence strength `p ∈ [0, 1]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PfParams<T> {
    p: T,
}

impl<T: Real> PfParams<T> {
    pub fn new(p: T) -> Result<Self> {
        check_p(p)?;
        Ok(PfParams { p })
    }

    /// `p = 1 − e^{−ηt}` for decay rate `η ≥ 0` and time `t ≥ 0`.
    pub fn from_decay(eta: T, t: T) -> Result<Self> {
        if !(eta >= T::zero() && t >= T::zero() && (eta * t).is_finite()) {
            return Err(Error::Parameter(format!(
                "decay rate {eta} and time {t} must be non-negative"
            )));
        }
        Self::new(-(-eta * t).exp_m1())
    }

    pub fn p(&self) -> T {
        self.p
    }

    pub fn y(&self) -> T {
        let k = T::one() - T::of(2.0) * self.p;
        k * k
    }
}

fn check_p<T: Real>(p: T) -> Result<()> {
    if p >= T::zero() && p <= T::one() {
        Ok(())
    } else {
        Err(Error::Parameter(format!(
            "phase-flip strength p = {p} outside [0, 1]"
        )))
    }
}

/// Attenuation of two-site coherences, `Y = (1 − 2p)²`.
pub fn y_factor<T: Real>(p: T) -> Result<T> {
    PfParams::new(p).map(|pf| pf.y())
}

/// `(√p I, √(1 − p) σz)`.
pub fn pf_kraus<T: Real>(p: T) -> Result<[ComplexMatrix<T>; 2]> {
    check_p(p)?;
    Ok([
        identity2().scale(p.sqrt()),
        pauli_z().scale((T::one() - p).sqrt()),
    ])
}

/// Independent phase flip on every qubit: the `2ⁿ`-term Kraus sum over all
/// products `E_{i₁} ⊗ … ⊗ E_{iₙ}`.
pub fn apply_pf_each_qubit<T: Real>(rho: &DensityMatrix<T>, p: T) -> Result<DensityMatrix<T>> {
    let kraus = pf_kraus(p)?;
    let n = rho.qubits();
    let dim = rho.dim();
    let mut out = ComplexMatrix::zeros(dim, dim);
    for choice in 0..1usize << n {
        let factors: Vec<_> = (0..n)
            .map(|q| kraus[(choice >> (n - 1 - q)) & 1].clone())
            .collect();
        let k = kron_all(&factors)?;
        out = &out + &(&(&k * rho.matrix()) * &k.adjoint());
    }
    Ok(DensityMatrix::from_trusted(out))
}

/// The operator sum with one Kraus index shared by all qubits,
/// `Σᵢ (Eᵢ ⊗ … ⊗ Eᵢ) ρ (Eᵢ ⊗ … ⊗ Eᵢ)†`.
///
/// Diagnostic only: it is not trace preserving (`Σᵢ Kᵢ†Kᵢ = (pⁿ + (1−p)ⁿ) I`)
/// and on W-type states it rescales rather than dephases, so the result is
/// returned as a raw matrix.
pub fn apply_pf_correlated<T: Real>(rho: &DensityMatrix<T>, p: T) -> Result<ComplexMatrix<T>> {
    let kraus = pf_kraus(p)?;
    let n = rho.qubits();
    let mut out = ComplexMatrix::zeros(rho.dim(), rho.dim());
    for e in &kraus {
        let k = kron_all(&vec![e.clone(); n])?;
        out = &out + &(&(&k * rho.matrix()) * &k.adjoint());
    }
    Ok(out)
}

/// Profiles of pairs 12, 13 and 23 of the dephased W-type state.
pub fn pf_pair_profiles<T: Real>(w: &WParams<T>, p: T) -> Result<[ResourceProfile<T>; 3]> {
    let evolved = apply_pf_each_qubit(&w_state(w), p)?;
    let mut out = [None; 3];
    for (slot, pair) in out.iter_mut().zip(PairSelector::ALL) {
        *slot = Some(profile(&reduce_pair(&evolved, pair)?)?);
    }
    Ok(out.map(|p| p.expect("filled")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closed_form;
    use crate::measures::{coherence_degree_pair, concurrence};
    use crate::scalar::re;
    use proptest::prelude::*;

    fn sym() -> WParams<f64> {
        let s = 1.0 / 3f64.sqrt();
        WParams::new(s, s, s).unwrap()
    }

    #[test]
    fn y_factor_examples() {
        assert_eq!(y_factor(0.0).unwrap(), 1.0);
        assert_eq!(y_factor(0.5).unwrap(), 0.0);
        assert_eq!(y_factor(0.25).unwrap(), 0.25);
        assert!(y_factor(1.5).is_err());
        assert!(y_factor(-0.1).is_err());
    }

    #[test]
    fn decay_parametrization() {
        let pf = PfParams::from_decay(0.7, 2.0).unwrap();
        assert!((pf.p() - (1.0 - (-1.4f64).exp())).abs() <= 1e-12);
        assert_eq!(PfParams::from_decay(0.0, 5.0).unwrap().p(), 0.0);
        assert!(PfParams::from_decay(-1.0, 1.0).is_err());
    }

    #[test]
    fn kraus_examples_and_completeness() {
        let [e1, e2] = pf_kraus(1.0).unwrap();
        assert_eq!(e1, identity2());
        assert_eq!(e2.max_abs(), 0.0);
        let [e1, e2] = pf_kraus(0.0).unwrap();
        assert_eq!(e1.max_abs(), 0.0);
        assert_eq!(e2, pauli_z());
        for p in [0.0, 0.1, 0.5, 0.77, 1.0] {
            let [e1, e2] = pf_kraus(p).unwrap();
            let sum = &(&e1.adjoint() * &e1) + &(&e2.adjoint() * &e2);
            assert!(sum.max_abs_diff(&identity2()) <= 1e-15);
        }
        let [e1, e2] = pf_kraus(0.5).unwrap();
        assert!(e1.max_abs_diff(&identity2().scale(0.5f64.sqrt())) < 1e-16);
        assert!(e2.max_abs_diff(&pauli_z().scale(0.5f64.sqrt())) < 1e-16);
    }

    #[test]
    fn identity_channels() {
        let rho = w_state(&WParams::new(0.6f64, 0.48, 0.64).unwrap());
        for p in [0.0, 1.0] {
            let out = apply_pf_each_qubit(&rho, p).unwrap();
            assert!(out.matrix().max_abs_diff(rho.matrix()) <= 1e-15, "p = {p}");
        }
    }

    #[test]
    fn full_dephasing_kills_concurrence() {
        let out = apply_pf_each_qubit(&w_state(&sym()), 0.5).unwrap();
        for (r, c) in [(1, 2), (1, 4), (2, 4)] {
            assert!(out.entry(r, c).norm() <= 1e-16);
        }
        for pair in PairSelector::ALL {
            assert!(concurrence(&reduce_pair(&out, pair).unwrap()).unwrap() <= 1e-12);
        }
    }

    #[test]
    fn off_diagonals_scale_by_y() {
        let w = WParams::new(0.6f64, 0.48, 0.64).unwrap();
        let rho = w_state(&w);
        for p in [0.1, 0.3, 0.8] {
            let out = apply_pf_each_qubit(&rho, p).unwrap();
            let y = y_factor(p).unwrap();
            for r in 0..8 {
                for c in 0..8 {
                    let expect = if r == c {
                        rho.entry(r, c)
                    } else {
                        rho.entry(r, c) * y
                    };
                    assert!((out.entry(r, c) - expect).norm() <= 1e-15);
                }
            }
        }
    }

    #[test]
    fn correlated_form_is_not_trace_preserving() {
        let rho = w_state(&sym());
        let out = apply_pf_correlated(&rho, 0.25).unwrap();
        let expect = 0.25f64.powi(3) + 0.75f64.powi(3);
        assert!((out.trace().re - expect).abs() < 1e-15);
        // σz⊗σz⊗σz and I⊗I⊗I act identically on the single-excitation sector
        assert!(out.max_abs_diff(&rho.matrix().scale(expect)) < 1e-15);
    }

    #[test]
    fn general_register_sizes() {
        let mut m = ComplexMatrix::from_diag(&[0.5, 0.5]);
        m[(0, 1)] = re(0.5);
        m[(1, 0)] = re(0.5);
        let plus = DensityMatrix::new(m).unwrap();
        let out = apply_pf_each_qubit(&plus, 0.25f64).unwrap();
        assert!((out.entry(0, 1).re - 0.5 * (2.0 * 0.25 - 1.0)).abs() < 1e-16);
    }

    #[test]
    fn pair_profile_examples() {
        let prof = pf_pair_profiles(&sym(), 0.25).unwrap();
        assert!((prof[1].concurrence - 1.0 / 6.0).abs() < 1e-10);

        let h = std::f64::consts::FRAC_1_SQRT_2;
        let bell = WParams::new(h, 0.0, h).unwrap();
        let noiseless = profile(&reduce_pair(&w_state(&bell), PairSelector::P13).unwrap()).unwrap();
        let p0 = pf_pair_profiles(&bell, 0.0).unwrap()[1];
        for (a, b) in [
            (p0.d2, noiseless.d2),
            (p0.concurrence, noiseless.concurrence),
            (p0.n, noiseless.n),
            (p0.purity, noiseless.purity),
        ] {
            assert!((a - b).abs() <= 1e-12);
        }
    }

    #[test]
    fn coherence_immune_at_full_dephasing() {
        let w = WParams::new(0.6f64, 0.48, 0.64).unwrap();
        let before = w_state(&w);
        let after = apply_pf_each_qubit(&before, 0.5).unwrap();
        for pair in PairSelector::ALL {
            let d0 = coherence_degree_pair(&reduce_pair(&before, pair).unwrap()).unwrap();
            let d1 = coherence_degree_pair(&reduce_pair(&after, pair).unwrap()).unwrap();
            assert!((d0 - d1).abs() <= 1e-12, "{d0} vs {d1}");
        }
    }

    proptest! {
        #[test]
        fn matches_closed_forms(a2 in 0.0f64..1.0, frac in 0.0f64..1.0, p in 0.0f64..=1.0) {
            let b2 = (1.0 - a2) * frac;
            let w = WParams::from_squares(a2, b2, 1.0 - a2 - b2).unwrap();
            let y = y_factor(p).unwrap();
            let evolved = apply_pf_each_qubit(&w_state(&w), p).unwrap();
            prop_assert!((evolved.matrix().trace().re - 1.0).abs() <= 1e-12);
            prop_assert!(DensityMatrix::new(evolved.matrix().clone()).is_ok());
            let profiles = pf_pair_profiles(&w, p).unwrap();
            for (pair, got) in PairSelector::ALL.into_iter().zip(profiles) {
                let want = closed_form::w_pair(&w, pair, y);
                prop_assert!((got.d2 - want.d2).abs() <= 1e-10);
                prop_assert!((got.concurrence - want.concurrence).abs() <= 1e-10);
                prop_assert!((got.n - want.n).abs() <= 1e-10);
                prop_assert!((got.purity - want.purity).abs() <= 1e-10);
                let defect = got.d2 + got.concurrence.powi(2) - got.purity;
                prop_assert!((defect - closed_form::w_pair_defect(&w, pair, y)).abs() <= 1e-10);
            }
        }

        #[test]
        fn concurrence_decays_monotonically(a2 in 0.05f64..0.9, frac in 0.05f64..0.95) {
            let b2 = (1.0 - a2) * frac;
            let w = WParams::from_squares(a2, b2, 1.0 - a2 - b2).unwrap();
            let mut last = [f64::INFINITY; 3];
            for i in 0..=10 {
                let p = 0.05 * i as f64;
                let now = pf_pair_profiles(&w, p).unwrap();
                let mirror = pf_pair_profiles(&w, 1.0 - p).unwrap();
                for k in 0..3 {
                    prop_assert!(now[k].concurrence <= last[k] + 1e-12);
                    prop_assert!((now[k].concurrence - mirror[k].concurrence).abs() <= 1e-10);
                    last[k] = now[k].concurrence;
                }
            }
        }
    }
}
