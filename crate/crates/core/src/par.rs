//! Data-parallel helpers with a sequential fallback.

/// Execution mode for bulk work.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Sequential,
    Parallel,
}

impl Default for Mode {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Mode::Parallel
        } else {
            Mode::Sequential
        }
    }
}

/// Order-preserving map.
pub fn map<T, R, F>(mode: Mode, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    match mode {
        #[cfg(feature = "parallel")]
        Mode::Parallel => {
            use rayon::prelude::*;
            items.par_iter().map(f).collect()
        }
        _ => items.iter().map(f).collect(),
    }
}

/// Order-preserving map over `0..n`.
pub fn map_range<R, F>(mode: Mode, n: u64, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(u64) -> R + Sync + Send,
{
    match mode {
        #[cfg(feature = "parallel")]
        Mode::Parallel => {
            use rayon::prelude::*;
            (0..n).into_par_iter().map(f).collect()
        }
        _ => (0..n).map(f).collect(),
    }
}

/// Order-preserving filter-map over `0..n`; only the hits are stored.
pub fn filter_map_range<R, F>(mode: Mode, n: u64, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(u64) -> Option<R> + Sync + Send,
{
    match mode {
        #[cfg(feature = "parallel")]
        Mode::Parallel => {
            use rayon::prelude::*;
            (0..n).into_par_iter().filter_map(f).collect()
        }
        _ => (0..n).filter_map(f).collect(),
    }
}

/// Size the global pool from `GALOIS_LOCUS_THREADS` when set. Returns the
/// thread count in effect.
pub fn init_threads() -> usize {
    #[cfg(feature = "parallel")]
    {
        if let Some(n) = std::env::var("GALOIS_LOCUS_THREADS")
            .ok()
            .and_then(|s| s.parse::<usize>().ok())
        {
            let _ = rayon::ThreadPoolBuilder::new()
                .num_threads(n.max(1))
                .build_global();
        }
        rayon::current_num_threads()
    }
    #[cfg(not(feature = "parallel"))]
    {
        1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modes_agree() {
        let v: Vec<u64> = (0..1000).collect();
        let a = map(Mode::Sequential, &v, |x| x * x);
        let b = map(Mode::Parallel, &v, |x| x * x);
        assert_eq!(a, b);
        assert_eq!(
            map_range(Mode::Parallel, 10, |i| i + 1),
            (1..=10).collect::<Vec<_>>()
        );
    }
}
