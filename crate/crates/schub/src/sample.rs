//! Seeded rational points for the fixed-point pairings.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use schub_core::oracle::RationalSample;

/// Give up on a case after this many samples hit a zero denominator.
pub const MAX_ATTEMPTS: usize = 64;

/// An independent generator for work item `stream`, so that parallel runs
/// draw the same numbers as sequential ones.
pub fn stream_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// `e^{α_i} ↦ p/q` with `p ≠ q` drawn from [`RationalSample::RANGE`].
pub fn draw(rng: &mut impl Rng, rank: usize) -> RationalSample {
    let ratios: Vec<(i64, i64)> = (0..rank)
        .map(|_| loop {
            let p = rng.gen_range(RationalSample::RANGE);
            let q = rng.gen_range(RationalSample::RANGE);
            if p != q {
                break (p, q);
            }
        })
        .collect();
    RationalSample::from_ratios(&ratios).expect("ratios in range are nonzero")
}

/// Runs `f` on fresh samples until one avoids every zero denominator.
pub fn with_resample<T>(
    rng: &mut impl Rng,
    rank: usize,
    mut f: impl FnMut(&RationalSample) -> schub_core::Result<T>,
) -> schub_core::Result<T> {
    for _ in 0..MAX_ATTEMPTS {
        match f(&draw(rng, rank)) {
            Err(schub_core::Error::ZeroDenominator) => continue,
            other => return other,
        }
    }
    Err(schub_core::Error::ZeroDenominator)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn streams_are_reproducible() {
        let a = draw(&mut stream_rng(7, 3), 3);
        let b = draw(&mut stream_rng(7, 3), 3);
        let c = draw(&mut stream_rng(7, 4), 3);
        assert_eq!(a, b);
        assert_ne!(a, c);
        assert!(a.values().iter().all(|x| !x.is_one()));
    }

    #[test]
    fn resampling() {
        let mut rng = stream_rng(1, 0);
        let mut calls = 0;
        let got = with_resample(&mut rng, 2, |_| {
            calls += 1;
            if calls < 3 {
                Err(schub_core::Error::ZeroDenominator)
            } else {
                Ok(calls)
            }
        });
        assert_eq!(got, Ok(3));
        assert!(with_resample(&mut rng, 2, |_| -> schub_core::Result<()> { Err(schub_core::Error::ZeroDenominator) })
            .is_err());
    }
}
