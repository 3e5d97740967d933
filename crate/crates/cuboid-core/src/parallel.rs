//! Deterministic work partitioning.
//!
//! Scans split the index space into fixed-size chunks, process chunks in
//! parallel, and merge results in chunk order. Chunk boundaries depend only
//! on the total count, never on the worker count, so every report is
//! byte-identical whether it was computed on one thread or sixty-four.

use rayon::prelude::*;
use std::ops::Range;

/// Fixed chunk width for index-space scans. Small enough to keep dozens of
/// chunks even for modest boxes, large enough that per-chunk overhead is
/// noise.
pub(crate) const CHUNK: u64 = 1 << 14;

/// Maps fixed chunks of `0..total` in parallel and folds the per-chunk
/// results sequentially in chunk order. `merge` sees accumulators in
/// ascending index order, so any worker count produces the same value.
pub(crate) fn fold_chunks<A, F, G>(total: u64, chunk: u64, f: F, merge: G) -> Option<A>
where
    A: Send,
    F: Fn(Range<u64>) -> A + Sync,
    G: Fn(A, A) -> A,
{
    assert!(chunk > 0);
    let nchunks = total.div_ceil(chunk);
    (0..nchunks)
        .into_par_iter()
        .map(|ci| {
            let lo = ci * chunk;
            f(lo..(lo + chunk).min(total))
        })
        .collect::<Vec<A>>()
        .into_iter()
        .reduce(merge)
}

/// `index` written in base `base` with `n` digits, most significant first.
/// Successive indices enumerate digit vectors in lexicographic order.
pub(crate) fn digits(mut index: u64, base: u64, n: usize) -> Vec<u64> {
    assert!(base > 0);
    let mut out = vec![0u64; n];
    for slot in out.iter_mut().rev() {
        *slot = index % base;
        index /= base;
    }
    debug_assert_eq!(index, 0, "index exceeds base^n");
    out
}

/// `base^n` without overflow surprises; scan totals can exceed `u64`.
pub(crate) fn total_points(base: u64, n: usize) -> u128 {
    (0..n).fold(1u128, |acc, _| acc.saturating_mul(base as u128))
}
