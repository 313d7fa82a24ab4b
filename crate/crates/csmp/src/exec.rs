//! Feature-switched execution of the data-parallel inner loops.
//!
//! With the `parallel` feature (the default) the loops fan out through
//! rayon; without it the same closures run on a plain sequential iterator.
//! Every call site collects into a position-indexed `Vec` and performs any
//! further reduction sequentially over that vector, so results are
//! identical between the two modes and under any rayon schedule.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Maps `f` over `lo..hi`, collecting the results in index order.
#[cfg(feature = "parallel")]
pub(crate) fn map_range<T, F>(lo: usize, hi: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Send + Sync,
{
    (lo..hi).into_par_iter().map(f).collect()
}

/// Maps `f` over `lo..hi`, collecting the results in index order.
#[cfg(not(feature = "parallel"))]
pub(crate) fn map_range<T, F>(lo: usize, hi: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Send + Sync,
{
    (lo..hi).map(f).collect()
}
