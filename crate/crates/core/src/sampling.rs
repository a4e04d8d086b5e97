//! Counter-based seeded draws.
//!
//! Draw `k` at coefficient bound `b` for a given purpose depends only on
//! `(seed, purpose, k, b)`, never on how many other draws were made, so
//! widening `samples` or `bound` only adds draws to the set.

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sha2::{Digest, Sha256};

use crate::linalg::Rat;

/// Generator for draw `k` at bound `b`.
pub fn stream(seed: u64, purpose: &str, k: u64, b: u64) -> ChaCha8Rng {
    let mut h = Sha256::new();
    h.update(seed.to_le_bytes());
    h.update(purpose.as_bytes());
    let key: [u8; 32] = h.finalize().into();
    let mut rng = ChaCha8Rng::from_seed(key);
    rng.set_stream((b << 32) ^ k);
    rng
}

/// `p / q` with `|p| <= bound` and `1 <= q <= bound`.
pub fn rat<R: Rng>(rng: &mut R, bound: u64) -> Rat {
    let b = bound.max(1) as i64;
    let p = rng.gen_range(-b..=b);
    let q = rng.gen_range(1..=b);
    Rat::new(BigInt::from(p), BigInt::from(q))
}

pub fn vector<R: Rng>(rng: &mut R, len: usize, bound: u64) -> Vec<Rat> {
    (0..len).map(|_| rat(rng, bound)).collect()
}

/// Small integer in `[-bound, bound]`.
pub fn small_int<R: Rng>(rng: &mut R, bound: i64) -> Rat {
    Rat::from_integer(rng.gen_range(-bound..=bound).into())
}

/// The draws making up the sample set for `(samples, bound)`, in a fixed
/// order: by bound, then by counter.
pub fn draws(seed: u64, purpose: &str, samples: usize, bound: u64, len: usize) -> impl Iterator<Item = Vec<Rat>> + '_ {
    (1..=bound.max(1)).flat_map(move |b| {
        (0..samples as u64).map(move |k| vector(&mut stream(seed, purpose, k, b), len, b))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn draws_are_reproducible_and_nested() {
        let a: Vec<_> = draws(3, "x", 4, 5, 3).collect();
        let b: Vec<_> = draws(3, "x", 4, 5, 3).collect();
        assert_eq!(a, b);
        let small: Vec<_> = draws(3, "x", 2, 3, 3).collect();
        for v in &small {
            assert!(a.contains(v));
        }
        let other: Vec<_> = draws(4, "x", 4, 5, 3).collect();
        assert_ne!(a, other);
    }

    #[test]
    fn coefficients_respect_bound() {
        for v in draws(0, "bound", 8, 4, 5) {
            for c in v {
                assert!(c.numer().magnitude() <= &4u32.into());
                assert!(c.denom() <= &4.into());
            }
        }
    }
}
