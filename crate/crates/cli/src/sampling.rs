//! Seeded sampling of W-type amplitudes.
//!
//! The generator is ChaCha8 (`rand_chacha`) seeded through
//! `SeedableRng::seed_from_u64`, so a seed gives the same stream on every
//! platform. `(α², β², γ²)` is drawn uniformly from the 2-simplex (flat
//! Dirichlet) by sorting two uniforms `u ≤ v` and taking the gaps
//! `(u, v − u, 1 − v)`; amplitudes are the non-negative square roots.

use qrel_core::WParams64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn simplex_point<R: Rng>(rng: &mut R) -> (f64, f64, f64) {
    let (mut u, mut v): (f64, f64) = (rng.gen(), rng.gen());
    if u > v {
        std::mem::swap(&mut u, &mut v);
    }
    (u, v - u, 1.0 - v)
}

pub fn w_params<R: Rng>(rng: &mut R) -> WParams64 {
    let (a2, b2, g2) = simplex_point(rng);
    WParams64::from_squares(a2, b2, g2).expect("simplex point is normalized")
}
