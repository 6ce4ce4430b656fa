//! Data-parallel map with a sequential fallback when the `parallel` feature
//! is off.

/// How independent work items are scheduled.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum Strategy {
    /// Spread items over the rayon pool. Same as `Sequential` without the
    /// `parallel` feature.
    #[default]
    Parallel,
    Sequential,
}

impl Strategy {
    /// Whether this build can actually run work concurrently.
    pub fn parallel_available() -> bool {
        cfg!(feature = "parallel")
    }
}

/// Maps `f` over `items`, keeping input order in the output.
pub(crate) fn map<T, R, F>(strategy: Strategy, items: Vec<T>, f: F) -> Vec<R>
where
    T: Send,
    R: Send,
    F: Fn(T) -> R + Sync + Send,
{
    match strategy {
        #[cfg(feature = "parallel")]
        Strategy::Parallel => {
            use rayon::prelude::*;
            items.into_par_iter().map(f).collect()
        }
        _ => items.into_iter().map(f).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_strategies_keep_order() {
        let items: Vec<u64> = (0..1000).collect();
        let seq = map(Strategy::Sequential, items.clone(), |x| x * x);
        let par = map(Strategy::Parallel, items, |x| x * x);
        assert_eq!(seq, par);
        assert_eq!(seq[999], 999 * 999);
    }
}
