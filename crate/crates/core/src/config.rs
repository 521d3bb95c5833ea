use serde::{Deserialize, Serialize};

/// Size and effort limits shared by every exhaustive routine.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct Budget {
    /// Largest element space that will be enumerated.
    pub element_cap: u64,
    /// Largest order whose full Cayley table is cached in memory.
    pub table_cache: usize,
    /// Largest order `cayley_table` will render.
    pub cayley_cap: usize,
    /// Maximum star-tuple evaluations for one exhaustive identity check.
    pub evaluations: u64,
    /// Default number of random tuples in sampled mode.
    pub sample_trials: u64,
    /// Largest order searched by full power-set sweeps.
    pub power_set_max: usize,
    /// Largest order searched by generated-closure sweeps.
    pub closure_max: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            element_cap: 1_000_000,
            table_cache: 2048,
            cayley_cap: 256,
            evaluations: 100_000_000,
            sample_trials: 10_000,
            power_set_max: 20,
            closure_max: 4096,
        }
    }
}
