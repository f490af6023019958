//! Shared fixtures for the benchmark targets.

use grasstilt_core::{GrassContext, Partition};

pub fn grass(l: u32, m: u32) -> GrassContext {
    GrassContext::new(l, m).expect("benchmark contexts are valid")
}

pub fn partition(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).expect("benchmark partitions are canonical")
}
