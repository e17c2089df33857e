//! Seeded randomness. Every randomized routine draws from an `XorShiftRng`
//! seeded from a caller-supplied `u64`, so results are reproducible.

use rand::{Rng, SeedableRng};
use rand_xorshift::XorShiftRng;

use crate::field::{Field, Scalar};

pub type SeededRng = XorShiftRng;

pub fn rng(seed: u64) -> SeededRng {
    XorShiftRng::seed_from_u64(seed)
}

/// Uniform integer in `[-bound, bound]`.
pub fn integer(rng: &mut SeededRng, bound: i64) -> i64 {
    rng.random_range(-bound..=bound)
}

/// Point of `field^n` with integer coordinates in `[-bound, bound]`.
pub fn integer_point(rng: &mut SeededRng, field: &Field, n: usize, bound: i64) -> Vec<Scalar> {
    (0..n).map(|_| field.from_i64(integer(rng, bound))).collect()
}

pub fn index(rng: &mut SeededRng, len: usize) -> usize {
    rng.random_range(0..len)
}
