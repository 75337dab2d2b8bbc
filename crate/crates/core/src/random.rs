//! Seeded sources for the randomized checks, so every run is reproducible.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::lattice::{DominantE8, RANK};
use crate::symfunc::EvalPoint;

pub const DEFAULT_SEED: u64 = 0;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Dominant weights with labels in `0..=max_label`, never the origin.
pub fn random_weights<R: Rng + ?Sized>(rng: &mut R, n: usize, max_label: u32) -> Vec<DominantE8> {
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let mut r = [0u32; RANK];
        for x in r.iter_mut() {
            *x = rng.gen_range(0..=max_label);
        }
        let w = DominantE8::new(r);
        if !w.is_zero() {
            out.push(w);
        }
    }
    out
}

pub fn random_points<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Vec<EvalPoint> {
    (0..n).map(|_| EvalPoint::random(rng)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_seed_same_draws() {
        let a = random_weights(&mut rng(7), 5, 3);
        let b = random_weights(&mut rng(7), 5, 3);
        assert_eq!(a, b);
        assert!(a.iter().all(|w| !w.is_zero()));
        assert_eq!(random_points(&mut rng(1), 2), random_points(&mut rng(1), 2));
    }
}
