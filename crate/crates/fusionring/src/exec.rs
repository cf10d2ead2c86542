//! Parallel-or-sequential execution of bulk maps.
//!
//! The verification suites map an independent check over many partitions or
//! partition pairs. With the `parallel` feature (default) those maps run on
//! the rayon thread pool; without it, or with [`ExecMode::Sequential`], they
//! run as ordinary iterator chains. Results are returned in input order
//! either way, so output is deterministic.

/// How a bulk map should run. `Parallel` is a request, honoured only when
/// the `parallel` feature is compiled in.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ExecMode {
    #[default]
    Parallel,
    Sequential,
}

#[cfg(feature = "parallel")]
pub fn map<T, R, F>(mode: ExecMode, items: Vec<T>, f: F) -> Vec<R>
where
    T: Send,
    R: Send,
    F: Fn(T) -> R + Sync + Send,
{
    use rayon::prelude::*;
    match mode {
        ExecMode::Parallel => items.into_par_iter().map(f).collect(),
        ExecMode::Sequential => items.into_iter().map(f).collect(),
    }
}

#[cfg(not(feature = "parallel"))]
pub fn map<T, R, F>(_mode: ExecMode, items: Vec<T>, f: F) -> Vec<R>
where
    T: Send,
    R: Send,
    F: Fn(T) -> R + Sync + Send,
{
    items.into_iter().map(f).collect()
}

/// True iff `pred` holds for every item. Short-circuits in both modes.
#[cfg(feature = "parallel")]
pub fn all<T, F>(mode: ExecMode, items: Vec<T>, pred: F) -> bool
where
    T: Send + Sync,
    F: Fn(&T) -> bool + Sync + Send,
{
    use rayon::prelude::*;
    match mode {
        ExecMode::Parallel => items.par_iter().all(pred),
        ExecMode::Sequential => items.iter().all(pred),
    }
}

#[cfg(not(feature = "parallel"))]
pub fn all<T, F>(_mode: ExecMode, items: Vec<T>, pred: F) -> bool
where
    T: Send + Sync,
    F: Fn(&T) -> bool + Sync + Send,
{
    items.iter().all(pred)
}
