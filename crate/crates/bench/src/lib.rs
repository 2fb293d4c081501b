//! Shared inputs for the criterion benchmarks.

use syrt_core::Composition;

/// Shapes of increasing size used across benchmarks.
pub fn shapes() -> Vec<Composition> {
    ["3,2,2", "2,3,1,2", "3,1,2,2", "2,3,2,1,2", "4,2,3,1"]
        .iter()
        .map(|s| s.parse().expect("static shape"))
        .collect()
}
