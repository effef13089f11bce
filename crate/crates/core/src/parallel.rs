//! Optional thread sharding controlled by the `GAMEKIT_THREADS` env var.
//!
//! The default is sequential execution. When more threads are requested the
//! work is split into index ranges and the partial results are merged in
//! range order, so the outcome is bitwise identical either way.

/// Number of worker threads to use (defaults to 1 = sequential).
pub(crate) fn thread_count() -> usize {
    std::env::var("GAMEKIT_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|&n| n >= 1)
        .unwrap_or(1)
}

/// Runs `work` on each index in `0..len`, returning results in index order.
pub(crate) fn map_indexed<T, F>(len: usize, work: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync,
{
    let threads = thread_count().min(len.max(1));
    if threads <= 1 || len <= 1 {
        return (0..len).map(work).collect();
    }
    let chunk = len.div_ceil(threads);
    let mut out: Vec<Option<T>> = Vec::with_capacity(len);
    out.resize_with(len, || None);
    let work = &work;
    std::thread::scope(|scope| {
        let mut slices: Vec<&mut [Option<T>]> = out.chunks_mut(chunk).collect();
        let mut handles = Vec::new();
        for (t, slice) in slices.drain(..).enumerate() {
            let start = t * chunk;
            handles.push(scope.spawn(move || {
                for (offset, slot) in slice.iter_mut().enumerate() {
                    *slot = Some(work(start + offset));
                }
            }));
        }
        for h in handles {
            h.join().expect("worker thread panicked");
        }
    });
    out.into_iter().map(|v| v.expect("slot filled")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn map_indexed_preserves_order() {
        let squares = map_indexed(17, |i| i * i);
        assert_eq!(squares, (0..17).map(|i| i * i).collect::<Vec<_>>());
    }
}
