//! Switch point between rayon and plain sequential execution.
//!
//! Everything data-parallel in this crate (classical trials, sweeps over
//! iteration counts, dense operator assembly) funnels through
//! [`map_indexed`], so disabling the `parallel` feature swaps the whole
//! crate to sequential loops.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Applies `f` to `0..n` and collects the results in index order.
#[cfg(feature = "parallel")]
pub fn map_indexed<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync,
{
    (0..n).into_par_iter().map(f).collect()
}

/// Applies `f` to `0..n` and collects the results in index order.
#[cfg(not(feature = "parallel"))]
pub fn map_indexed<T, F>(n: usize, f: F) -> Vec<T>
where
    F: Fn(usize) -> T,
{
    (0..n).map(f).collect()
}

/// Name of the active execution mode, used to label benchmark runs.
pub fn mode() -> &'static str {
    if cfg!(feature = "parallel") {
        "parallel"
    } else {
        "sequential"
    }
}
