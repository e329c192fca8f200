//! Data-parallel map with a sequential fallback.
//!
//! Check sweeps are embarrassingly parallel over their cells; with the
//! `parallel` feature the work goes through rayon, without it the same call
//! runs sequentially. Output order matches input order either way.

#[cfg(feature = "parallel")]
pub fn par_map<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Sync + Send,
{
    use rayon::prelude::*;
    items.into_par_iter().map(f).collect()
}

/// Caps the global worker count. Takes effect only before the first parallel
/// call of the process; later calls are ignored, as is a zero cap.
#[cfg(feature = "parallel")]
pub fn set_max_threads(n: usize) {
    if n >= 1 {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global();
    }
}

#[cfg(not(feature = "parallel"))]
pub fn set_max_threads(_n: usize) {}

#[cfg(not(feature = "parallel"))]
pub fn par_map<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    F: Fn(T) -> U,
{
    items.into_iter().map(f).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn preserves_order() {
        let out = par_map((0..100).collect::<Vec<i64>>(), |x| x * x);
        assert_eq!(out, (0..100).map(|x| x * x).collect::<Vec<i64>>());
    }
}
