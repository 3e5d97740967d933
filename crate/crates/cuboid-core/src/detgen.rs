//! Deterministic value streams for reproducible checks.
//!
//! Identity and equivariance suites quantify over "random" tuples, but their
//! results must be reproducible on any machine with no seed plumbing, so the
//! streams here are fixed enumerations driven by a SplitMix64 mixer. Same
//! seed, same tuples, everywhere, forever.

use crate::tuple::Tuple;
use crate::{Int, Rat};

/// SplitMix64 mixer. Not a cryptographic generator, just a well-mixed
/// deterministic sequence.
#[derive(Clone, Debug)]
pub struct Mix64 {
    state: u64,
}

impl Mix64 {
    pub fn new(seed: u64) -> Self {
        Mix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }

    /// Integer in `-bound..=bound`.
    pub fn next_int(&mut self, bound: u64) -> i64 {
        (self.next_u64() % (2 * bound + 1)) as i64 - bound as i64
    }

    /// Reduced rational with numerator magnitude at most `num_bound` and
    /// denominator at most `den_bound` before reduction.
    pub fn next_rat(&mut self, num_bound: u64, den_bound: u64) -> Rat {
        let n = self.next_int(num_bound);
        let d = 1 + self.next_u64() % den_bound;
        Rat::new(Int::from(n), Int::from(d))
    }
}

/// `count` rational tuples, optionally carrying a space diagonal. Numerators
/// stay within `num_bound`, denominators within `den_bound`.
pub fn rational_tuples(
    seed: u64,
    count: usize,
    num_bound: u64,
    den_bound: u64,
    with_space_diagonal: bool,
) -> Vec<Tuple<Rat>> {
    let mut g = Mix64::new(seed);
    (0..count)
        .map(|_| {
            let mut next = || g.next_rat(num_bound, den_bound);
            let x = [next(), next(), next()];
            let d = [next(), next(), next()];
            let l = with_space_diagonal.then(&mut next);
            Tuple { x, d, l }
        })
        .collect()
}
