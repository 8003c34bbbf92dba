//! Data-parallel helpers with a sequential fallback.
//!
//! With the `parallel` feature (default) work is spread over the rayon pool;
//! without it every helper runs on the calling thread. Results never depend
//! on how the work was split.

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Strategy {
    Sequential,
    #[default]
    Parallel,
}

impl Strategy {
    /// Whether parallel execution is compiled in.
    pub fn parallel_available() -> bool {
        cfg!(feature = "parallel")
    }
}

/// Sizes the global worker pool. Has no effect without the `parallel`
/// feature or once the pool is running.
pub fn set_threads(n: usize) {
    #[cfg(feature = "parallel")]
    {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    #[cfg(not(feature = "parallel"))]
    let _ = n;
}

/// Order-preserving map.
pub fn map_collect<T, R, F>(strategy: Strategy, items: Vec<T>, f: F) -> Vec<R>
where
    T: Send + Sync,
    R: Send,
    F: Fn(&T) -> R + Send + Sync,
{
    match strategy {
        #[cfg(feature = "parallel")]
        Strategy::Parallel => {
            use rayon::prelude::*;
            items.par_iter().map(f).collect()
        }
        _ => items.iter().map(f).collect(),
    }
}

/// Applies `f` to consecutive index ranges covering `0..total` and folds
/// the per-range results with `combine`.
pub fn fold_ranges<R, F, C>(strategy: Strategy, total: u128, identity: R, f: F, combine: C) -> R
where
    R: Send + Sync + Clone,
    F: Fn(u128, u128) -> R + Send + Sync,
    C: Fn(R, R) -> R + Send + Sync,
{
    if total == 0 {
        return identity;
    }
    let chunks = chunk_count(strategy, total);
    let step = total.div_ceil(chunks as u128);
    let ranges: Vec<(u128, u128)> = (0..chunks as u128)
        .map(|i| (i * step, ((i + 1) * step).min(total)))
        .filter(|(a, b)| a < b)
        .collect();
    match strategy {
        #[cfg(feature = "parallel")]
        Strategy::Parallel => {
            use rayon::prelude::*;
            ranges
                .par_iter()
                .map(|&(a, b)| f(a, b))
                .reduce(|| identity.clone(), &combine)
        }
        _ => ranges
            .iter()
            .map(|&(a, b)| f(a, b))
            .fold(identity, &combine),
    }
}

fn chunk_count(strategy: Strategy, total: u128) -> usize {
    let workers = match strategy {
        #[cfg(feature = "parallel")]
        Strategy::Parallel => rayon::current_num_threads(),
        _ => 1,
    };
    let wanted = if workers == 1 { 1 } else { workers * 8 };
    (wanted as u128).min(total).max(1) as usize
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fold_is_partition_independent() {
        for strategy in [Strategy::Sequential, Strategy::Parallel] {
            let s = fold_ranges(strategy, 1000, 0u128, |a, b| (a..b).sum::<u128>(), |x, y| x + y);
            assert_eq!(s, 999 * 1000 / 2);
        }
        assert_eq!(fold_ranges(Strategy::Parallel, 0, 7u32, |_, _| 0, |a, b| a + b), 7);
    }

    #[test]
    fn map_preserves_order() {
        let v: Vec<u32> = (0..100).collect();
        let a = map_collect(Strategy::Parallel, v.clone(), |x| x * 2);
        let b = map_collect(Strategy::Sequential, v, |x| x * 2);
        assert_eq!(a, b);
    }
}
