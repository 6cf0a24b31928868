//! Execution policy for the census kernels.
//!
//! With the `parallel` feature, work is spread over a rayon pool; without it
//! every policy runs sequentially. Slice results are always merged in slice
//! order, so output does not depend on the worker count.

use crate::error::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exec {
    Sequential,
    Parallel { workers: usize },
}

impl Exec {
    /// `workers <= 1` means sequential.
    pub fn with_workers(workers: usize) -> Self {
        if workers <= 1 {
            Exec::Sequential
        } else {
            Exec::Parallel { workers }
        }
    }

    /// One worker per available core.
    pub fn all_cores() -> Self {
        let n = std::thread::available_parallelism().map_or(1, |n| n.get());
        Self::with_workers(n)
    }

    pub fn workers(&self) -> usize {
        match self {
            Exec::Sequential => 1,
            Exec::Parallel { workers } => *workers,
        }
    }
}

impl Default for Exec {
    fn default() -> Self {
        Self::all_cores()
    }
}

/// Runs `work` on every slice index in `0..slices` and folds the results in
/// index order. The first error by slice index wins.
pub fn fold_slices<T, W, M>(exec: Exec, slices: usize, work: W, merge: M) -> Result<T>
where
    T: Send + Default,
    W: Fn(usize) -> Result<T> + Sync + Send,
    M: Fn(T, T) -> T,
{
    let results = run_slices(exec, slices, &work);
    results
        .into_iter()
        .try_fold(T::default(), |acc, r| r.map(|t| merge(acc, t)))
}

#[cfg(feature = "parallel")]
fn run_slices<T, W>(exec: Exec, slices: usize, work: &W) -> Vec<Result<T>>
where
    T: Send,
    W: Fn(usize) -> Result<T> + Sync + Send,
{
    use rayon::prelude::*;
    match exec {
        Exec::Sequential => (0..slices).map(work).collect(),
        Exec::Parallel { workers } => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(workers)
                .build()
                .expect("thread pool");
            pool.install(|| (0..slices).into_par_iter().map(work).collect())
        }
    }
}

#[cfg(not(feature = "parallel"))]
fn run_slices<T, W>(_exec: Exec, slices: usize, work: &W) -> Vec<Result<T>>
where
    T: Send,
    W: Fn(usize) -> Result<T> + Sync + Send,
{
    (0..slices).map(work).collect()
}
