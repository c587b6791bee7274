//! Three-site block of the renormalized spin-1/2 XXZ chain: ground states,
//! the coupling flow `J′ = J(2q/(2 + q²))²`, `δ′ = δq²/4`, and the pair
//! resources of the block ground state.
//!
//! Spins map to qubits as `↑ → |0⟩`, `↓ → |1⟩`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{identity2, kron_all, pauli_x, pauli_y, pauli_z, ComplexMatrix};
use crate::measures::ResourceProfile;
use crate::scalar::{re, Complex, Real};
use crate::states::{DensityMatrix, PairSelector, WParams};

/// Anisotropy `δ ≥ 0` and exchange constant `J > 0`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct XxzParams<T> {
    delta: T,
    j: T,
}

impl<T: Real> XxzParams<T> {
    pub fn new(delta: T, j: T) -> Result<Self> {
        check_delta(delta)?;
        if !(j > T::zero() && j.is_finite()) {
            return Err(Error::Parameter(format!(
                "exchange constant J = {j} must be positive and finite"
            )));
        }
        Ok(XxzParams { delta, j })
    }

    pub fn delta(&self) -> T {
        self.delta
    }

    pub fn j(&self) -> T {
        self.j
    }
}

fn check_delta<T: Real>(delta: T) -> Result<()> {
    if delta >= T::zero() && delta.is_finite() {
        Ok(())
    } else {
        Err(Error::Parameter(format!(
            "anisotropy δ = {delta} must be non-negative and finite"
        )))
    }
}

/// `q = −(δ + √(8 + δ²))/2`; always `q ≤ −√2`.
pub fn q_of_delta<T: Real>(delta: T) -> Result<T> {
    check_delta(delta)?;
    // √(8 + δ²) as a hypotenuse so huge δ does not overflow
    let root = T::of(8.0).sqrt().hypot(delta);
    Ok(-(delta + root) * T::of(0.5))
}

/// `E₀ = Jq/2 = −J(δ + √(8 + δ²))/4`.
pub fn ground_energy<T: Real>(params: &XxzParams<T>) -> T {
    let q = q_of_delta(params.delta).expect("validated δ");
    params.j * q * T::of(0.5)
}

/// `2q/(2 + q²)`, written as `2/(q + 2/q)` so that `q²` never overflows.
fn block_ratio<T: Real>(q: T) -> T {
    T::of(2.0) / (q + T::of(2.0) / q)
}

/// One renormalization step. Fails with [`Error::Overflow`] once the
/// couplings leave the finite range.
pub fn rg_step<T: Real>(params: &XxzParams<T>) -> Result<XxzParams<T>> {
    let q = q_of_delta(params.delta)?;
    let r = block_ratio(q);
    let j = params.j * r * r;
    let delta = params.delta * (q * q) * T::of(0.25);
    if !delta.is_finite() {
        return Err(Error::Overflow(format!(
            "δ′ overflows from δ = {}",
            params.delta
        )));
    }
    if !(j > T::zero()) {
        return Err(Error::Overflow(format!(
            "J′ underflows to zero from J = {}",
            params.j
        )));
    }
    Ok(XxzParams { delta, j })
}

/// One entry of an RG trajectory.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct RgStep<T> {
    pub j: T,
    pub delta: T,
    pub q: T,
    pub e0: T,
}

impl<T: Real> RgStep<T> {
    fn at(params: &XxzParams<T>) -> Self {
        let q = q_of_delta(params.delta).expect("validated δ");
        RgStep {
            j: params.j,
            delta: params.delta,
            q,
            e0: params.j * q * T::of(0.5),
        }
    }

    pub fn params(&self) -> XxzParams<T> {
        XxzParams {
            delta: self.delta,
            j: self.j,
        }
    }
}

/// The initial couplings followed by `n_steps` renormalized ones.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RgTrace<T> {
    pub steps: Vec<RgStep<T>>,
}

/// Iterate [`rg_step`] `n_steps ≥ 1` times.
pub fn rg_flow<T: Real>(params: &XxzParams<T>, n_steps: usize) -> Result<RgTrace<T>> {
    if n_steps == 0 {
        return Err(Error::Parameter("rg_flow needs at least one step".into()));
    }
    let mut steps = Vec::with_capacity(n_steps + 1);
    let mut cur = *params;
    steps.push(RgStep::at(&cur));
    for _ in 0..n_steps {
        cur = rg_step(&cur)?;
        steps.push(RgStep::at(&cur));
    }
    Ok(RgTrace { steps })
}

/// The two degenerate block ground states.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GroundVariant {
    /// `|↑↑↓⟩ + q|↑↓↑⟩ + |↓↑↑⟩`, one flipped spin.
    Psi0,
    /// `|↑↓↓⟩ + q|↓↑↓⟩ + |↓↓↑⟩`, two flipped spins.
    Psi0Prime,
}

/// Normalized ground vector of the block.
pub fn ground_vector<T: Real>(delta: T, variant: GroundVariant) -> Result<Vec<Complex<T>>> {
    let w = ground_amplitudes(delta)?;
    let mut psi = vec![re(T::zero()); 8];
    let idx = match variant {
        GroundVariant::Psi0 => [0b001, 0b010, 0b100],
        GroundVariant::Psi0Prime => [0b110, 0b101, 0b011],
    };
    psi[idx[0]] = re(w.alpha);
    psi[idx[1]] = re(w.beta);
    psi[idx[2]] = re(w.gamma);
    Ok(psi)
}

/// `(1, q, 1)/√(2 + q²)` as W amplitudes `(α, β, γ)`.
pub fn ground_amplitudes<T: Real>(delta: T) -> Result<WParams<T>> {
    let q = q_of_delta(delta)?;
    // divide through by |q| first so large δ stays finite
    let inv = T::one() / q.abs();
    let norm = (T::of(2.0) * inv * inv + T::one()).sqrt();
    let edge = inv / norm;
    WParams::new(edge, -T::one() / norm, edge)
}

pub fn ground_state<T: Real>(delta: T, variant: GroundVariant) -> Result<DensityMatrix<T>> {
    DensityMatrix::from_pure(&ground_vector(delta, variant)?)
}

/// `(J/4) Σ_{k=1,2} (σˣσˣ + σʸσʸ + δσᶻσᶻ)` on one open three-site block.
pub fn block_hamiltonian<T: Real>(params: &XxzParams<T>) -> Result<ComplexMatrix<T>> {
    let mut h = ComplexMatrix::zeros(8, 8);
    let id = identity2::<T>();
    for k in 0..2 {
        for (pauli, weight) in [
            (pauli_x::<T>(), T::one()),
            (pauli_y(), T::one()),
            (pauli_z(), params.delta),
        ] {
            let mut factors = vec![id.clone(); 3];
            factors[k] = pauli.clone();
            factors[k + 1] = pauli;
            h = &h + &kron_all(&factors)?.scale(weight);
        }
    }
    Ok(h.scale(params.j * T::of(0.25)))
}

/// Closed-form resources of a reduced pair of the block ground state.
///
/// With `g = 2 + q²`: `C₁₃ = 2/g`, `D²₁₃ = q⁴/g²`, `P₁₃ = (4 + q⁴)/g²`;
/// `C₁₂ = 2|q|/g`, `D²₁₂ = (2 − 2q² + q⁴)/g²`, `P₁₂ = (2 + 2q² + q⁴)/g²`.
/// `M` and `N` follow from the X-state eigenvalues `μ₁ = μ₂ = C²`,
/// `μ₃ = ((q² − 2)/g)²` for pair 13 and `(q²/g)²` for pairs 12, 23.
pub fn xxz_pair_profile<T: Real>(delta: T, sel: PairSelector) -> Result<ResourceProfile<T>> {
    let q = q_of_delta(delta)?;
    let two = T::of(2.0);
    // everything is a ratio of polynomials in q² of degree ≤ 2 over g²;
    // dividing by q⁴ keeps large δ finite
    let t = T::one() / (q * q);
    let g = two * t + T::one(); // g / q²
    let g2 = g * g;
    let (concurrence, d2, purity, z) = match sel {
        PairSelector::P13 => (
            two * t / g,
            T::one() / g2,
            (T::of(4.0) * t * t + T::one()) / g2,
            (T::one() - two * t) / g,
        ),
        PairSelector::P12 | PairSelector::P23 => (
            two * t.sqrt() / g,
            (two * t * t - two * t + T::one()) / g2,
            (two * t * t + two * t + T::one()) / g2,
            T::one() / g,
        ),
    };
    let mu = concurrence * concurrence;
    let m = mu + mu.max(z * z);
    let b1 = two * (two * mu).sqrt() - two;
    let b2 = two * (mu + z * z).sqrt() - two;
    Ok(ResourceProfile {
        d2,
        concurrence,
        m,
        n: T::zero().max(b1).max(b2),
        purity,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::eig_hermitian;
    use crate::measures::profile;
    use crate::relations::identity_defect;
    use crate::states::reduce_pair;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn q_examples() {
        assert!(close(q_of_delta(0.0).unwrap(), -2f64.sqrt(), 1e-15));
        assert_eq!(q_of_delta(1.0).unwrap(), -2.0);
        assert!(close(
            q_of_delta(7.0).unwrap(),
            -(7.0 + 57f64.sqrt()) / 2.0,
            1e-14
        ));
        assert!(close(q_of_delta(7.0).unwrap(), -7.2749, 1e-4));
        assert!(q_of_delta(-0.1).is_err());
        assert!(q_of_delta(f64::NAN).is_err());
        assert!(q_of_delta(1e300f64).unwrap().is_finite());
    }

    #[test]
    fn q_bounds() {
        for i in 0..1000 {
            let q = q_of_delta(i as f64 * 0.01).unwrap();
            assert!(q < 0.0 && q * q >= 2.0 - 1e-15);
        }
    }

    #[test]
    fn params_validation() {
        assert!(XxzParams::new(0.0, 1.0).is_ok());
        assert!(XxzParams::new(-1.0, 1.0).is_err());
        assert!(XxzParams::new(1.0, 0.0).is_err());
        assert!(XxzParams::new(1.0, f64::INFINITY).is_err());
    }

    #[test]
    fn energy_examples() {
        let e = |d, j| ground_energy(&XxzParams::new(d, j).unwrap());
        assert_eq!(e(1.0, 1.0), -1.0);
        assert!(close(e(0.0, 2.0), -2f64.sqrt(), 1e-15));
        assert!(close(e(7.0, 1.0), -(7.0 + 57f64.sqrt()) / 4.0, 1e-14));
        assert!(close(e(7.0, 1.0), -3.6375, 1e-4));
    }

    #[test]
    fn step_examples() {
        let s = rg_step(&XxzParams::new(1.0, 1.0).unwrap()).unwrap();
        assert!(close(s.j(), 4.0 / 9.0, 1e-15));
        assert_eq!(s.delta(), 1.0);
        let s = rg_step(&XxzParams::new(0.0, 1.0).unwrap()).unwrap();
        assert!(close(s.j(), 0.5, 1e-15));
        assert_eq!(s.delta(), 0.0);
        let s = rg_step(&XxzParams::new(2.0, 1.0).unwrap()).unwrap();
        let want = (2.0 + 12f64.sqrt()).powi(2) / 8.0;
        assert!(close(s.delta(), want, 1e-14));
        assert!(close(s.delta(), 3.732, 1e-3));
    }

    #[test]
    fn step_matches_literal_formula() {
        for i in 0..200 {
            let delta = i as f64 * 0.05;
            let p = XxzParams::new(delta, 1.3).unwrap();
            let q = q_of_delta(delta).unwrap();
            let s = rg_step(&p).unwrap();
            assert!(close(s.j(), 1.3 * (2.0 * q / (2.0 + q * q)).powi(2), 1e-14));
            assert!(close(
                s.delta(),
                delta * q * q / 4.0,
                1e-12 * delta.max(1.0)
            ));
        }
    }

    #[test]
    fn flows() {
        let t = rg_flow(&XxzParams::new(1.0, 1.0).unwrap(), 5).unwrap();
        assert_eq!(t.steps.len(), 6);
        assert!(t.steps.iter().all(|s| s.delta == 1.0 && s.q == -2.0));

        let t = rg_flow(&XxzParams::new(0.0, 1.0).unwrap(), 3).unwrap();
        let js: Vec<f64> = t.steps.iter().map(|s| s.j).collect();
        for (got, want) in js.iter().zip([1.0, 0.5, 0.25, 0.125]) {
            assert!(close(*got, want, 1e-15));
        }

        // δ > 1 runs away: eight steps are representable and increasing
        let t = rg_flow(&XxzParams::new(1.5, 1.0).unwrap(), 8).unwrap();
        assert!(t.steps.windows(2).all(|w| w[1].delta > w[0].delta));
        assert!(t.steps[8].delta > 1e244);
        // the ninth overflows f64
        assert!(matches!(
            rg_flow(&XxzParams::new(1.5, 1.0).unwrap(), 10),
            Err(Error::Overflow(_))
        ));

        // 0 < δ < 1 flows to the XX point
        let t = rg_flow(&XxzParams::new(0.5, 1.0).unwrap(), 10).unwrap();
        assert!(t.steps.windows(2).all(|w| w[1].delta < w[0].delta));
        assert!(rg_flow(&XxzParams::new(0.5, 1.0).unwrap(), 0).is_err());
    }

    #[test]
    fn trace_entries_consistent() {
        let t = rg_flow(&XxzParams::new(0.7, 2.0).unwrap(), 6).unwrap();
        for w in t.steps.windows(2) {
            let next = rg_step(&w[0].params()).unwrap();
            assert!(close(next.j(), w[1].j, 1e-12));
            assert!(close(next.delta(), w[1].delta, 1e-12));
            assert!(close(w[0].e0, ground_energy(&w[0].params()), 1e-15));
        }
    }

    #[test]
    fn ground_amplitude_examples() {
        let w = ground_amplitudes(1.0).unwrap();
        let s6 = 6f64.sqrt();
        assert!(
            close(w.alpha, 1.0 / s6, 1e-15)
                && close(w.beta, -2.0 / s6, 1e-15)
                && close(w.gamma, 1.0 / s6, 1e-15)
        );
        let w = ground_amplitudes(0.0).unwrap();
        assert!(close(w.alpha, 0.5, 1e-15) && close(w.beta, -2f64.sqrt() / 2.0, 1e-15));
        let w = ground_amplitudes(1e200).unwrap();
        assert!(close(w.beta, -1.0, 1e-15));
    }

    #[test]
    fn hamiltonian_ground_space() {
        for delta in [0.0, 0.3, 1.0, 2.5, 7.0] {
            let p = XxzParams::new(delta, 1.7).unwrap();
            let h = block_hamiltonian(&p).unwrap();
            assert!(h.hermitian_deviation() < 1e-15);
            let e0 = ground_energy(&p);
            for variant in [GroundVariant::Psi0, GroundVariant::Psi0Prime] {
                let psi = ground_vector(delta, variant).unwrap();
                let hpsi = h.mul_vec(&psi).unwrap();
                for (a, b) in hpsi.iter().zip(&psi) {
                    assert!((a - b * e0).norm() <= 1e-12, "δ = {delta}");
                }
            }
            let spectrum = eig_hermitian(&h).unwrap();
            assert!(
                close(spectrum[0], e0, 1e-10),
                "δ = {delta}: {} vs {e0}",
                spectrum[0]
            );
        }
    }

    #[test]
    fn periodic_ring_is_different() {
        // closing the block into a ring adds a 1-3 bond; away from the
        // isotropic point ψ₀ is then no longer an eigenvector
        let p = XxzParams::new(2.0, 1.0).unwrap();
        let mut ring = block_hamiltonian(&p).unwrap();
        let id = identity2::<f64>();
        for (pauli, weight) in [(pauli_x::<f64>(), 1.0), (pauli_y(), 1.0), (pauli_z(), 2.0)] {
            let bond = kron_all(&[pauli.clone(), id.clone(), pauli]).unwrap();
            ring = &ring + &bond.scale(0.25 * weight);
        }
        let psi = ground_vector(2.0, GroundVariant::Psi0).unwrap();
        let hpsi = ring.mul_vec(&psi).unwrap();
        let e: f64 = hpsi.iter().zip(&psi).map(|(a, b)| (a * b.conj()).re).sum();
        let resid: f64 = hpsi
            .iter()
            .zip(&psi)
            .map(|(a, b)| (a - b * e).norm_sqr())
            .sum();
        assert!(resid > 1e-3);
    }

    #[test]
    fn profile_examples() {
        let p = xxz_pair_profile(1.0, PairSelector::P13).unwrap();
        assert!(close(p.concurrence, 1.0 / 3.0, 1e-15));
        assert!(close(p.d2, 4.0 / 9.0, 1e-15));
        assert!(close(p.purity, 5.0 / 9.0, 1e-15));
        assert_eq!(p.n, 0.0);
        let p = xxz_pair_profile(1.0, PairSelector::P12).unwrap();
        assert!(close(p.concurrence, 2.0 / 3.0, 1e-15));
        assert!(close(p.d2, 5.0 / 18.0, 1e-15));
        assert!(close(p.purity, 13.0 / 18.0, 1e-15));
        assert_eq!(p.n, 0.0);
        let p = xxz_pair_profile(0.0, PairSelector::P13).unwrap();
        assert!(close(p.concurrence, 0.5, 1e-15));
        assert!(close(p.d2, 0.25, 1e-15));
        assert!(close(p.purity, 0.5, 1e-15));
    }

    #[test]
    fn closed_forms_match_literal_q_polynomials() {
        for i in 0..=1000 {
            let delta = i as f64 * 0.01;
            let q = q_of_delta(delta).unwrap();
            let g = 2.0 + q * q;
            let p13 = xxz_pair_profile(delta, PairSelector::P13).unwrap();
            assert!(close(p13.concurrence, 2.0 / g, 1e-14));
            assert!(close(p13.d2, q.powi(4) / (g * g), 1e-14));
            assert!(close(p13.purity, (4.0 + q.powi(4)) / (g * g), 1e-14));
            let n13 = 0f64
                .max(2.0 * (q.powi(4) - 4.0 * q * q + 8.0).sqrt() / g - 2.0)
                .max(4.0 * 2f64.sqrt() / g - 2.0);
            assert!(close(p13.n, n13, 1e-14));
            let p12 = xxz_pair_profile(delta, PairSelector::P12).unwrap();
            assert!(close(p12.concurrence, 2.0 * (q * q).sqrt() / g, 1e-14));
            assert!(close(
                p12.d2,
                (2.0 - 2.0 * q * q + q.powi(4)) / (g * g),
                1e-14
            ));
            assert!(close(
                p12.purity,
                (2.0 + 2.0 * q * q + q.powi(4)) / (g * g),
                1e-14
            ));
            let n12 = 0f64
                .max(4.0 * (2.0 * q * q).sqrt() / g - 2.0)
                .max(2.0 * (q.powi(4) + 4.0 * q * q).sqrt() / g - 2.0);
            assert!(close(p12.n, n12, 1e-14));
            assert_eq!(p12, xxz_pair_profile(delta, PairSelector::P23).unwrap());
        }
    }

    #[test]
    fn closed_forms_match_generic_path() {
        for i in 0..=200 {
            let delta = i as f64 * 0.05;
            let rho = ground_state(delta, GroundVariant::Psi0).unwrap();
            let rho_prime = ground_state(delta, GroundVariant::Psi0Prime).unwrap();
            for sel in PairSelector::ALL {
                let want = xxz_pair_profile(delta, sel).unwrap();
                let got = profile(&reduce_pair(&rho, sel).unwrap()).unwrap();
                let got_prime = profile(&reduce_pair(&rho_prime, sel).unwrap()).unwrap();
                for (a, b, c) in [
                    (got.d2, want.d2, got_prime.d2),
                    (got.concurrence, want.concurrence, got_prime.concurrence),
                    (got.n, want.n, got_prime.n),
                    (got.purity, want.purity, got_prime.purity),
                    (got.m, want.m, got_prime.m),
                ] {
                    assert!(close(a, b, 1e-10), "δ = {delta}, {sel}");
                    assert!(close(a, c, 1e-12), "δ = {delta}, {sel}");
                }
                assert!(identity_defect(&got).abs() <= 1e-10);
                assert_eq!(want.n, 0.0);
            }
        }
    }

    #[test]
    fn outer_pair_traces_a_line() {
        // D₁₃ = 1 − C₁₃ along the physical family
        for i in 0..=100 {
            let p = xxz_pair_profile(i as f64 * 0.1, PairSelector::P13).unwrap();
            assert!(close(p.d2.sqrt(), 1.0 - p.concurrence, 1e-14));
        }
    }

    #[test]
    fn f32_matches_f64() {
        let a = xxz_pair_profile(0.8f32, PairSelector::P12).unwrap();
        let b = xxz_pair_profile(0.8f64, PairSelector::P12).unwrap();
        assert!((a.concurrence as f64 - b.concurrence).abs() < 1e-6);
        assert!((a.d2 as f64 - b.d2).abs() < 1e-6);
    }
}
