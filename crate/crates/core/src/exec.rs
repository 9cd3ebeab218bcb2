//! Execution strategy for the data-parallel inner loops (term-wise products,
//! per-monomial rewriting, batch evaluation).
//!
//! With the `parallel` feature the work is spread over the rayon pool; without
//! it every strategy runs on the calling thread. Results are identical either
//! way since every merge step is an exact, order-independent sum.

/// How a bulk operation distributes its work.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    /// Always on the calling thread.
    Sequential,
    /// Always through the thread pool (sequential if the feature is off).
    Parallel,
    /// Parallel only once the input is large enough to amortize scheduling.
    #[default]
    Auto,
}

/// Below this many work items `Auto` stays sequential.
pub const AUTO_THRESHOLD: usize = 64;

impl Execution {
    pub fn is_parallel_for(self, len: usize) -> bool {
        if !cfg!(feature = "parallel") {
            return false;
        }
        match self {
            Execution::Sequential => false,
            Execution::Parallel => true,
            Execution::Auto => len >= AUTO_THRESHOLD,
        }
    }
}

/// Maps `f` over `items` and folds the partial results with `merge`.
///
/// `merge` must be associative and `identity` its neutral element.
pub fn map_reduce<T, R, F, M, I>(exec: Execution, items: &[T], identity: I, f: F, merge: M) -> R
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
    M: Fn(R, R) -> R + Sync + Send,
    I: Fn() -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        if exec.is_parallel_for(items.len()) {
            use rayon::prelude::*;
            return items.par_iter().map(&f).reduce(&identity, &merge);
        }
    }
    let _ = exec;
    items.iter().map(f).fold(identity(), merge)
}

/// Order-preserving parallel map.
pub fn map_collect<T, R, F>(exec: Execution, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        if exec.is_parallel_for(items.len()) {
            use rayon::prelude::*;
            return items.par_iter().map(&f).collect();
        }
    }
    let _ = exec;
    items.iter().map(f).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strategies_agree() {
        let xs: Vec<u64> = (1..=1000).collect();
        for exec in [Execution::Sequential, Execution::Parallel, Execution::Auto] {
            let s = map_reduce(exec, &xs, || 0u64, |x| x * x, |a, b| a + b);
            assert_eq!(s, 333_833_500);
            let v = map_collect(exec, &xs, |x| x + 1);
            assert_eq!(v[0], 2);
            assert_eq!(v[999], 1001);
        }
    }

    #[test]
    fn sequential_never_parallel() {
        assert!(!Execution::Sequential.is_parallel_for(1 << 20));
        assert!(!Execution::Auto.is_parallel_for(1));
    }
}
