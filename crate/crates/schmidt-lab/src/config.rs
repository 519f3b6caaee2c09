//! Run-wide limits and execution switches.

/// Caps and switches threaded through the heavier computations.
///
/// All results are deterministic and independent of `parallel` and of the
/// worker count; the switches only affect wall-clock time.
#[derive(Clone, Debug)]
pub struct RunConfig {
    /// Largest group order accepted by endomorphism enumeration.
    pub end_cap: usize,
    /// Largest group order accepted by full subgroup enumeration.
    pub subgroup_cap: usize,
    /// Largest group order the constructors will materialize as a table.
    pub construct_cap: usize,
    /// Evaluate independent work items on the rayon pool when available.
    pub parallel: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            end_cap: 60,
            subgroup_cap: 200,
            construct_cap: 4096,
            parallel: true,
        }
    }
}

impl RunConfig {
    /// Default configuration with the `SCHMIDT_LAB_MAX_ORDER` environment
    /// variable applied. When set, it overrides both the endomorphism and the
    /// subgroup enumeration caps.
    pub fn from_env() -> Self {
        let mut cfg = RunConfig::default();
        if let Ok(s) = std::env::var("SCHMIDT_LAB_MAX_ORDER") {
            if let Ok(n) = s.trim().parse::<usize>() {
                if n > 0 {
                    cfg.end_cap = n;
                    cfg.subgroup_cap = n;
                }
            }
        }
        cfg
    }

    pub fn sequential(mut self) -> Self {
        self.parallel = false;
        self
    }
}
