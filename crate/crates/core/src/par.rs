//! Data-parallel helpers with a sequential fallback.
//!
//! With the `parallel` feature (default) [`Strategy::Parallel`] runs on the
//! rayon pool; without it every strategy runs sequentially. Results are
//! always returned in input order.

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Strategy {
    Sequential,
    #[default]
    Parallel,
}

pub fn is_parallel_available() -> bool {
    cfg!(feature = "parallel")
}

/// Sizes the global worker pool. Only the first call has an effect.
#[cfg(feature = "parallel")]
pub fn configure_threads(n: usize) -> Result<(), String> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| e.to_string())
}

#[cfg(not(feature = "parallel"))]
pub fn configure_threads(_n: usize) -> Result<(), String> {
    Ok(())
}

#[cfg(feature = "parallel")]
pub fn map<T, U, F>(strategy: Strategy, items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    use rayon::prelude::*;
    match strategy {
        Strategy::Parallel => items.par_iter().map(f).collect(),
        Strategy::Sequential => items.iter().map(f).collect(),
    }
}

#[cfg(not(feature = "parallel"))]
pub fn map<T, U, F>(_strategy: Strategy, items: &[T], f: F) -> Vec<U>
where
    F: Fn(&T) -> U,
{
    items.iter().map(f).collect()
}

#[cfg(feature = "parallel")]
pub fn flat_map<T, U, F>(strategy: Strategy, items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> Vec<U> + Sync + Send,
{
    use rayon::prelude::*;
    match strategy {
        Strategy::Parallel => items.par_iter().flat_map_iter(f).collect(),
        Strategy::Sequential => items.iter().flat_map(f).collect(),
    }
}

#[cfg(not(feature = "parallel"))]
pub fn flat_map<T, U, F>(_strategy: Strategy, items: &[T], f: F) -> Vec<U>
where
    F: Fn(&T) -> Vec<U>,
{
    items.iter().flat_map(f).collect()
}
