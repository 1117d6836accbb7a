//! Parallel-or-sequential folds over all subsets of a ground set of size
//! `bits`, in increasing mask order within each chunk.

use rayon::prelude::*;

const CHUNK_BITS: usize = 14;

/// Folds `step` over every mask in `0..2^bits`.
///
/// The mask range is cut into fixed chunks; each chunk is folded from
/// `init()` and the partial results are combined with `merge`. With exact
/// integer accumulators the result does not depend on the schedule.
pub(crate) fn fold_subsets<A, I, S, M>(bits: usize, parallel: bool, init: I, step: S, merge: M) -> A
where
    A: Send,
    I: Fn() -> A + Sync + Send,
    S: Fn(&mut A, u64) + Sync + Send,
    M: Fn(A, A) -> A + Sync + Send,
{
    debug_assert!(bits <= 64);
    let chunk_bits = bits.min(CHUNK_BITS);
    let chunks = ((1u128 << bits) >> chunk_bits) as u64;
    let run_chunk = |c: u64| {
        let mut acc = init();
        let base = if chunk_bits == 64 { 0 } else { c << chunk_bits };
        let len = 1u64 << chunk_bits;
        for i in 0..len {
            step(&mut acc, base | i);
        }
        acc
    };
    if parallel && chunks > 1 {
        (0..chunks)
            .into_par_iter()
            .map(run_chunk)
            .reduce(&init, &merge)
    } else {
        (0..chunks).map(run_chunk).fold(init(), &merge)
    }
}

/// Signed histogram: `step` adds into a fixed-length bucket vector.
pub(crate) fn histogram<S>(bits: usize, buckets: usize, parallel: bool, step: S) -> Vec<i128>
where
    S: Fn(&mut [i128], u64) + Sync + Send,
{
    fold_subsets(
        bits,
        parallel,
        || vec![0i128; buckets],
        |acc, mask| step(acc, mask),
        |mut a, b| {
            for (x, y) in a.iter_mut().zip(b) {
                *x += y;
            }
            a
        },
    )
}

#[inline]
pub(crate) fn sign(mask: u64) -> i128 {
    if mask.count_ones().is_multiple_of(2) {
        1
    } else {
        -1
    }
}
