//! Inputs shared by the benchmarks.

use mdbs_core::greedy::prefer_complement;
use mdbs_core::HamCycle;

/// The prefer-complement cycle from vertex 1, which exists for every `n >= 4`.
pub fn reference_cycle(n: u32) -> HamCycle {
    prefer_complement(n, 1)
        .ok()
        .and_then(|p| p.into_cycle())
        .expect("prefer-complement from 1 is Hamiltonian")
}
