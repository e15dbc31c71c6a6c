//! Seeded evaluation points, reproducible across runs.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const COORD_MAX: i64 = 10_000;

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `n` pairwise distinct integers in `1..=10^4`.
pub fn distinct_coordinates(rng: &mut ChaCha8Rng, n: usize) -> Vec<i64> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let x = rng.gen_range(1..=COORD_MAX);
        if seen.insert(x) {
            out.push(x);
        }
    }
    out
}

pub fn distinct_point(rng: &mut ChaCha8Rng, n: usize) -> Vec<BigRational> {
    distinct_coordinates(rng, n)
        .into_iter()
        .map(|x| BigRational::from_integer(BigInt::from(x)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reproducible_and_distinct() {
        let a = distinct_coordinates(&mut seeded(7), 20);
        assert_eq!(a, distinct_coordinates(&mut seeded(7), 20));
        let set: BTreeSet<_> = a.iter().collect();
        assert_eq!(set.len(), 20);
        assert!(a.iter().all(|&x| (1..=COORD_MAX).contains(&x)));
    }
}
