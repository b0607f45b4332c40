//! Data-parallel helpers. With the `parallel` feature the maps run on rayon;
//! without it they fall back to plain iterators. Output order is always the
//! input order.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[cfg(feature = "parallel")]
pub(crate) fn map_range<R, F>(n: usize, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(usize) -> R + Sync + Send,
{
    (0..n).into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_range<R, F>(n: usize, f: F) -> Vec<R>
where
    F: Fn(usize) -> R,
{
    (0..n).map(f).collect()
}

#[cfg(feature = "parallel")]
pub(crate) fn map_slice<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_slice<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    F: Fn(&T) -> R,
{
    items.iter().map(f).collect()
}

/// How much parallelism a batch run may use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Parallelism {
    /// One worker thread.
    Sequential,
    /// `Threads(0)` uses every core.
    Threads(usize),
    #[default]
    Auto,
}

impl Parallelism {
    pub fn from_jobs(jobs: Option<usize>) -> Self {
        match jobs {
            None => Parallelism::Auto,
            Some(1) => Parallelism::Sequential,
            Some(n) => Parallelism::Threads(n),
        }
    }

    /// Runs `f` inside a pool sized for this setting.
    #[cfg(feature = "parallel")]
    pub fn install<R: Send>(self, f: impl FnOnce() -> R + Send) -> R {
        let threads = match self {
            Parallelism::Auto | Parallelism::Threads(0) => return f(),
            Parallelism::Sequential => 1,
            Parallelism::Threads(n) => n,
        };
        match rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
            Ok(pool) => pool.install(f),
            Err(_) => f(),
        }
    }

    #[cfg(not(feature = "parallel"))]
    pub fn install<R: Send>(self, f: impl FnOnce() -> R + Send) -> R {
        f()
    }
}
