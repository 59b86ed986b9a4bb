//! Data-parallel map with a sequential fallback.
//!
//! With the `parallel` feature (default) [`Execution::Parallel`] runs on a
//! rayon pool; without it every execution mode runs sequentially. Results are
//! always returned in input order.

/// How a batch of independent jobs is evaluated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Execution {
    Sequential,
    /// `jobs = None` uses rayon's global pool.
    #[default]
    Parallel,
    ParallelWith { jobs: usize },
}

impl Execution {
    pub fn from_jobs(jobs: Option<usize>) -> Self {
        match jobs {
            Some(1) => Execution::Sequential,
            Some(n) if n > 1 => Execution::ParallelWith { jobs: n },
            _ => Execution::Parallel,
        }
    }
}

pub fn is_parallel_enabled() -> bool {
    cfg!(feature = "parallel")
}

#[cfg(feature = "parallel")]
pub fn map<T, U, Fun>(exec: Execution, items: &[T], f: Fun) -> Vec<U>
where
    T: Sync,
    U: Send,
    Fun: Fn(&T) -> U + Sync + Send,
{
    use rayon::prelude::*;
    match exec {
        Execution::Sequential => items.iter().map(f).collect(),
        Execution::Parallel => items.par_iter().map(f).collect(),
        Execution::ParallelWith { jobs } => match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
            Ok(pool) => pool.install(|| items.par_iter().map(f).collect()),
            Err(_) => items.par_iter().map(f).collect(),
        },
    }
}

#[cfg(not(feature = "parallel"))]
pub fn map<T, U, Fun>(_exec: Execution, items: &[T], f: Fun) -> Vec<U>
where
    T: Sync,
    U: Send,
    Fun: Fn(&T) -> U + Sync + Send,
{
    items.iter().map(f).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_preserved() {
        let items: Vec<u64> = (0..1000).collect();
        let seq = map(Execution::Sequential, &items, |x| x * x);
        for exec in [Execution::Parallel, Execution::ParallelWith { jobs: 3 }] {
            assert_eq!(map(exec, &items, |x| x * x), seq);
        }
    }

    #[test]
    fn jobs_flag() {
        assert_eq!(Execution::from_jobs(Some(1)), Execution::Sequential);
        assert_eq!(Execution::from_jobs(Some(4)), Execution::ParallelWith { jobs: 4 });
        assert_eq!(Execution::from_jobs(None), Execution::Parallel);
    }
}
