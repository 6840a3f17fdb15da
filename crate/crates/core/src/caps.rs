//! Resource limits and verification schedules shared across the crate.

/// Budgets for expansion, closure work, and verification escalation.
///
/// Every long-running computation in the crate is bounded by one of these
/// fields; exceeding a budget is a reported resource error, never a silent
/// truncation.
#[derive(Debug, Clone)]
pub struct Caps {
    /// Hard cap on materialized symbols per lazy word.
    pub symbol_cap: usize,
    /// Factor-closure work budget, measured in stored factors.
    pub work_budget: u64,
    /// First factor horizon tried by the cone-prefix computation.
    pub mx_horizon_start: usize,
    /// Horizon cap (symbols of continuation) for the cone-prefix computation.
    pub mx_horizon_cap: usize,
    /// First verification length for desubstitution candidates.
    pub verify_start: usize,
    /// Verification lengths escalate by this factor while candidates tie.
    pub verify_factor: usize,
    /// Verification length cap; surviving ties at the cap are an error.
    pub verify_cap: usize,
    /// Length of the final expansion-vs-oracle check of a synthesized
    /// representation.
    pub final_verify: usize,
    /// Token prefix reserved for fresh letters of extended alphabets.
    pub fresh_prefix: String,
}

impl Default for Caps {
    fn default() -> Caps {
        Caps {
            symbol_cap: 10_000_000,
            work_budget: 1_000_000,
            mx_horizon_start: 8,
            mx_horizon_cap: 4096,
            verify_start: 256,
            verify_factor: 4,
            verify_cap: 65536,
            final_verify: 5000,
            fresh_prefix: "@".into(),
        }
    }
}
