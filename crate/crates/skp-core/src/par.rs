//! Data-parallel map with a sequential fallback.
//!
//! Every batch loop in the crate (sweep node updates, Monte-Carlo batteries,
//! multi-start runs) goes through `par_map_indexed`. With the default
//! `parallel` feature it fans out over rayon; without it the same call is a
//! plain sequential map. Output order is the index order in both cases, and
//! all reductions downstream are sequential folds over the collected vector,
//! so results are bit-identical regardless of thread count.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[cfg(feature = "parallel")]
pub fn par_map_indexed<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    (0..n).into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn par_map_indexed<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    (0..n).map(f).collect()
}

/// Name of the active execution mode, used by benches to label groups.
pub fn mode_name() -> &'static str {
    if cfg!(feature = "parallel") {
        "parallel"
    } else {
        "sequential"
    }
}
