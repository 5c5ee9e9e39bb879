//! Order-preserving map over a slice, parallel when the `parallel` feature is on.

/// Runs work items on a fixed number of workers. Results always come back in
/// input order, so output never depends on the worker count.
pub struct Executor {
    jobs: usize,
    #[cfg(feature = "parallel")]
    pool: Option<rayon::ThreadPool>,
}

impl Executor {
    /// `jobs <= 1` (or a build without `parallel`) runs on the calling thread.
    pub fn new(jobs: usize) -> Self {
        let jobs = jobs.max(1);
        #[cfg(feature = "parallel")]
        {
            let pool = (jobs > 1).then(|| {
                rayon::ThreadPoolBuilder::new()
                    .num_threads(jobs)
                    .thread_name(|i| format!("icp-worker-{i}"))
                    .build()
                    .expect("failed to start worker pool")
            });
            Executor { jobs, pool }
        }
        #[cfg(not(feature = "parallel"))]
        Executor { jobs }
    }

    pub fn sequential() -> Self {
        Executor::new(1)
    }

    pub fn jobs(&self) -> usize {
        self.jobs
    }

    pub fn is_parallel(&self) -> bool {
        #[cfg(feature = "parallel")]
        {
            self.pool.is_some()
        }
        #[cfg(not(feature = "parallel"))]
        {
            false
        }
    }

    pub fn map<T, R, F>(&self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if let Some(pool) = &self.pool {
            use rayon::prelude::*;
            return pool.install(|| items.par_iter().map(&f).collect());
        }
        items.iter().map(f).collect()
    }
}

impl Default for Executor {
    fn default() -> Self {
        Executor::sequential()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn preserves_order() {
        let items: Vec<u64> = (0..1000).collect();
        let seq = Executor::sequential().map(&items, |x| x * x);
        let par = Executor::new(4).map(&items, |x| x * x);
        assert_eq!(seq, par);
        assert_eq!(seq[999], 999 * 999);
    }
}
