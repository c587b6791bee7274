//! Closed-form resources of the state families, written directly from the
//! amplitudes. These never touch a density matrix and serve as the
//! independent reference for the generic measures.

use crate::measures::ResourceProfile;
use crate::scalar::Real;
use crate::states::{PairSelector, WParams};

/// Reduced pair of the W-type state after every qubit went through a
/// phase-flip channel with attenuation `y = (1 − 2p)²` (`y = 1`: no noise).
///
/// With `s, u` the squared amplitudes of the pair's sites:
/// `D² = 2(s² − s + u² − u) + 1`, `C = 2√(y²su)`,
/// `P = α⁴ + β⁴ + γ⁴ + 2y²su`, and
/// `N = max(0, 4√(2y²su) − 2, 2√(4y²su + (2s + 2u − 1)²) − 2)`.
pub fn w_pair<T: Real>(w: &WParams<T>, pair: PairSelector, y: T) -> ResourceProfile<T> {
    let (a2, b2, g2) = w.squares();
    let (s, u) = w.pair_squares(pair);
    let two = T::of(2.0);
    let four = T::of(4.0);
    let y2su = y * y * s * u;
    let d2 = two * (s * s - s + u * u - u) + T::one();
    let concurrence = two * y2su.sqrt();
    let purity = a2 * a2 + b2 * b2 + g2 * g2 + two * y2su;
    let z = two * s + two * u - T::one();
    let b1 = four * (two * y2su).sqrt() - two;
    let b2 = two * (four * y2su + z * z).sqrt() - two;
    let mu12 = four * y2su;
    ResourceProfile {
        d2,
        concurrence,
        m: mu12 + mu12.max(z * z),
        n: T::zero().max(b1).max(b2),
        purity,
    }
}

/// Horodecki mixture `ε|φ⁺⟩⟨φ⁺| + (1 − ε)|00⟩⟨00|`:
/// `C = ε`, `D² = (1 − ε)²`, `P = (1 − ε)² + ε²`,
/// `N = max(0, 2√(2ε²) − 2, 2√(1 + ε(5ε − 4)) − 2)`.
pub fn horodecki<T: Real>(eps: T) -> ResourceProfile<T> {
    let two = T::of(2.0);
    let one_m = T::one() - eps;
    let b1 = two * (two * eps * eps).sqrt() - two;
    let b2 = two * (T::one() + eps * (T::of(5.0) * eps - T::of(4.0))).sqrt() - two;
    let mu3 = (T::one() - two * eps).powi(2);
    ResourceProfile {
        d2: one_m * one_m,
        concurrence: eps,
        m: eps * eps + (eps * eps).max(mu3),
        n: T::zero().max(b1).max(b2),
        purity: one_m * one_m + eps * eps,
    }
}

/// `D² + C² − P` of a dephased W pair: `2su(y² − 1)`.
pub fn w_pair_defect<T: Real>(w: &WParams<T>, pair: PairSelector, y: T) -> T {
    let (s, u) = w.pair_squares(pair);
    T::of(2.0) * s * u * (y * y - T::one())
}
