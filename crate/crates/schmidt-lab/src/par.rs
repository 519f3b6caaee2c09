//! Execution helpers: data-parallel map over independent work items with a
//! sequential fallback. The `parallel` feature selects rayon; without it every
//! call degrades to a plain iterator. Callers merge results in input order, so
//! output never depends on the schedule.

#[cfg(feature = "parallel")]
pub fn map_collect<I, O, F>(parallel: bool, items: Vec<I>, f: F) -> Vec<O>
where
    I: Send,
    O: Send,
    F: Fn(I) -> O + Send + Sync,
{
    use rayon::prelude::*;
    if parallel {
        items.into_par_iter().map(f).collect()
    } else {
        items.into_iter().map(f).collect()
    }
}

#[cfg(not(feature = "parallel"))]
pub fn map_collect<I, O, F>(_parallel: bool, items: Vec<I>, f: F) -> Vec<O>
where
    I: Send,
    O: Send,
    F: Fn(I) -> O + Send + Sync,
{
    items.into_iter().map(f).collect()
}
