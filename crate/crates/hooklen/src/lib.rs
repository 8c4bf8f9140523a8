//! Std companion to `hooklen-core`: JSON encodings, a parallel catalog
//! runner and random hook-weight tables.

pub mod json;
pub mod runner;

pub use hooklen_core as core;

use hooklen_core::verify::HookWeight;
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// Length of the random tables; covers every hook argument up to order 64.
pub const RANDOM_TABLE_LEN: usize = 64;

/// A table of `len` nonzero rationals with numerator and denominator in
/// `1..=9` up to sign, drawn from `seed`.
pub fn random_table(seed: u64, len: usize) -> HookWeight {
    let mut rng = StdRng::seed_from_u64(seed);
    let values = (0..len)
        .map(|_| {
            let num: i64 = rng.gen_range(1..=9) * if rng.gen_bool(0.5) { 1 } else { -1 };
            let den: i64 = rng.gen_range(1..=9);
            BigRational::new(BigInt::from(num), BigInt::from(den))
        })
        .collect();
    HookWeight::Table(values)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn random_tables_are_seeded() {
        assert_eq!(random_table(7, 10), random_table(7, 10));
        assert_ne!(random_table(7, 10), random_table(8, 10));
        let HookWeight::Table(v) = random_table(1, RANDOM_TABLE_LEN) else { unreachable!() };
        assert_eq!(v.len(), RANDOM_TABLE_LEN);
        assert!(v.iter().all(|x| *x != BigRational::from_integer(0.into())));
    }
}
