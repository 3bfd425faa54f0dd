//! Shared fixtures for the benchmarks.

use superyang::field::Rational;
use superyang::space::SuperSpace;
use superyang::symgroup::{Partition, Tableau};

/// Row-reading tableaux for every partition of `d`.
pub fn row_tableaux(d: usize) -> Vec<Tableau> {
    Partition::all(d).iter().map(Tableau::row_reading).collect()
}

/// Evaluation points `0, -1, ..., -(k-1)`.
pub fn descending_shifts(k: usize) -> Vec<Rational> {
    (0..k as i64).map(|i| Rational::from_int(-i)).collect()
}

/// The spaces used across benchmarks.
pub fn spaces() -> Vec<(&'static str, SuperSpace)> {
    vec![("gl(1|1)", SuperSpace::gl(1, 1)), ("gl(2|2)", SuperSpace::gl(2, 2)), ("osp(2)", SuperSpace::osp(2))]
}
