use serde::Serialize;

/// Matter and field expectation values of a ground-state estimate.
///
/// Per-atom fields are divided by `N`; variances are absolute. Both the
/// coherent-state and the exact pipelines fill the same record so they can be
/// compared field by field.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ObservableSet {
    pub jz_per_n: f64,
    pub jx_per_n: f64,
    pub jy_per_n: f64,
    pub var_jx: f64,
    pub var_jy: f64,
    pub var_jz: f64,
    /// `⟨n̂⟩/N`.
    pub n_per_n: f64,
    pub var_n: f64,
    pub q_mean: f64,
    pub p_mean: f64,
    pub var_q: f64,
    pub var_p: f64,
    /// Entropy of the excited-atom number distribution, in nats.
    pub entropy_nats: f64,
    /// Spin squeezing `ξ = √(2 (ΔJ⊥)² / j)`; `ξ < 1` means squeezed.
    pub squeezing_xi: f64,
}

impl ObservableSet {
    /// The record as `(name, value)` pairs in declaration order.
    pub fn fields(&self) -> [(&'static str, f64); 14] {
        [
            ("jz_per_n", self.jz_per_n),
            ("jx_per_n", self.jx_per_n),
            ("jy_per_n", self.jy_per_n),
            ("var_jx", self.var_jx),
            ("var_jy", self.var_jy),
            ("var_jz", self.var_jz),
            ("n_per_n", self.n_per_n),
            ("var_n", self.var_n),
            ("q_mean", self.q_mean),
            ("p_mean", self.p_mean),
            ("var_q", self.var_q),
            ("var_p", self.var_p),
            ("entropy_nats", self.entropy_nats),
            ("squeezing_xi", self.squeezing_xi),
        ]
    }
}
