//! Dispatch layer between the rayon-backed and sequential code paths.
//!
//! Every caller computes elements independently from read-only input, so the
//! parallel results are bit-identical to the sequential ones; the feature
//! flag only changes wall-clock time.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// `(0..len).map(f)` in index order.
pub(crate) fn map_indices<T, F>(len: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        (0..len).into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..len).map(f).collect()
    }
}

/// `(lo..=hi).filter_map(f)` preserving index order.
pub(crate) fn filter_map_range<T, F>(lo: u64, hi: u64, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(u64) -> Option<T> + Sync + Send,
{
    if lo > hi {
        return Vec::new();
    }
    #[cfg(feature = "parallel")]
    {
        (lo..=hi).into_par_iter().filter_map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (lo..=hi).filter_map(f).collect()
    }
}

/// Fold of `make(chunk)` over contiguous chunks of `items`, merged with
/// `merge`. Merging must be associative and commutative for determinism;
/// the single user accumulates integer tables by addition.
pub(crate) fn fold_chunks<I, A, M, G, E>(
    items: &[I],
    chunk: usize,
    make: M,
    merge: G,
    empty: E,
) -> A
where
    I: Sync,
    A: Send,
    M: Fn(&[I]) -> A + Sync + Send,
    G: Fn(A, A) -> A + Sync + Send,
    E: Fn() -> A + Sync + Send,
{
    assert!(chunk >= 1);
    #[cfg(feature = "parallel")]
    {
        items.par_chunks(chunk).map(make).reduce(empty, merge)
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.chunks(chunk).map(make).fold(empty(), merge)
    }
}
