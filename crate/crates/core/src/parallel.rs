//! Sequential / rayon switch for the grid sweeps.
//!
//! Every sweep in the crate goes through [`map_indexed`], which preserves input
//! order, so results are identical whichever execution mode is chosen.
//! Without the `parallel` feature [`Execution::Parallel`] runs sequentially.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    #[default]
    Parallel,
}

impl Execution {
    /// True when work will actually be spread over the rayon pool.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Execution::Parallel
    }
}

/// Maps `f` over `0..n`, returning results in index order.
pub fn map_indexed<R, F>(exec: Execution, n: usize, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(usize) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        return (0..n).into_par_iter().map(f).collect();
    }
    let _ = exec;
    (0..n).map(f).collect()
}

/// Maps `f` over a slice, returning results in slice order.
pub fn map_slice<T, R, F>(exec: Execution, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        return items.par_iter().map(f).collect();
    }
    let _ = exec;
    items.iter().map(f).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modes_agree_and_keep_order() {
        let seq = map_indexed(Execution::Sequential, 1000, |i| (i as f64).sqrt());
        let par = map_indexed(Execution::Parallel, 1000, |i| (i as f64).sqrt());
        assert_eq!(seq, par);
        assert_eq!(seq[49], 7.0);

        let xs: Vec<u32> = (0..257).collect();
        let a = map_slice(Execution::Sequential, &xs, |x| x * 3);
        let b = map_slice(Execution::Parallel, &xs, |x| x * 3);
        assert_eq!(a, b);
    }
}
