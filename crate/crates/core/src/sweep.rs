//! Exhaustive sweeps over basis index tuples.
//!
//! The outermost index is split across the rayon pool; the result is the
//! lexicographically first failing tuple regardless of how work is divided.

use rayon::prelude::*;

use crate::report::Witness;

/// Visits every tuple in `0..n` of the given arity and returns the first
/// (lexicographic) one for which `probe` reports a mismatch.
pub fn first_failure<F>(n: usize, arity: usize, probe: F) -> Option<Witness>
where
    F: Fn(&[usize]) -> Option<Witness> + Sync,
{
    first_failure_in(&vec![n; arity], probe)
}

/// Like [`first_failure`] with a separate range per position.
pub fn first_failure_in<F>(ranges: &[usize], probe: F) -> Option<Witness>
where
    F: Fn(&[usize]) -> Option<Witness> + Sync,
{
    if ranges.is_empty() {
        return probe(&[]);
    }
    if ranges.contains(&0) {
        return None;
    }
    (0..ranges[0]).into_par_iter().find_map_first(|head| {
        let mut idx = vec![0; ranges.len()];
        idx[0] = head;
        loop {
            if let Some(w) = probe(&idx) {
                return Some(w);
            }
            let mut pos = ranges.len() - 1;
            loop {
                if pos == 0 {
                    return None;
                }
                idx[pos] += 1;
                if idx[pos] < ranges[pos] {
                    break;
                }
                idx[pos] = 0;
                pos -= 1;
            }
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_lexicographically_first() {
        let w = first_failure(4, 3, |t| {
            (t[1] == 2 || t[0] == 3).then(|| Witness::new(t.to_vec(), "a", "b"))
        });
        assert_eq!(w.unwrap().indices, vec![0, 2, 0]);
    }

    #[test]
    fn visits_everything() {
        use std::sync::atomic::{AtomicUsize, Ordering};
        let count = AtomicUsize::new(0);
        let w = first_failure_in(&[2, 3, 4], |_| {
            count.fetch_add(1, Ordering::Relaxed);
            None
        });
        assert!(w.is_none());
        assert_eq!(count.into_inner(), 24);
    }
}
