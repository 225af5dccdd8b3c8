//! Parameter points shared by the benchmarks.

use tavis_core::ModelParams;

/// `(label, params)` spanning small and large systems inside the parallel region.
pub fn workloads() -> Vec<(&'static str, ModelParams)> {
    [("n6", 6, 2.0), ("n100", 100, 2.0), ("n1000", 1000, 1.5)]
        .into_iter()
        .map(|(label, n, gamma)| (label, ModelParams::with_delta(n, 0.2, gamma).expect("valid workload")))
        .collect()
}
