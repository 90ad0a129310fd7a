//! Execution strategy for the exhaustive and sampled checks.
//!
//! With the `parallel` feature the checks fan out over rayon's pool;
//! without it every strategy runs on the calling thread. Results are
//! identical either way: searches report the first hit in input order.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exec {
    Sequential,
    Parallel,
}

impl Default for Exec {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Exec::Parallel
        } else {
            Exec::Sequential
        }
    }
}

/// First `Some` produced by `f` in input order. `init` builds per-worker
/// scratch state (typically a product cache).
pub fn find_map_first<T, S, R, I, F>(exec: Exec, items: &[T], init: I, f: F) -> Option<R>
where
    T: Sync,
    R: Send,
    I: Fn() -> S + Sync + Send,
    F: Fn(&mut S, &T) -> Option<R> + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Exec::Parallel => items.par_iter().map_init(init, |s, t| f(s, t)).find_map_first(|r| r),
        _ => {
            let mut state = init();
            items.iter().find_map(|t| f(&mut state, t))
        }
    }
}

/// Map every item, preserving input order.
pub fn map_collect<T, S, R, I, F>(exec: Exec, items: &[T], init: I, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    I: Fn() -> S + Sync + Send,
    F: Fn(&mut S, &T) -> R + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Exec::Parallel => items.par_iter().map_init(init, |s, t| f(s, t)).collect(),
        _ => {
            let mut state = init();
            items.iter().map(|t| f(&mut state, t)).collect()
        }
    }
}
