/// Resource bounds for the exponential-space analyses.
///
/// The power-automaton routines work on up to `2^exhaustive_n` subsets; the
/// map-sweep routines (`is_sync_maximal`, `is_k_reachable`) enumerate all
/// maps of a given rank, which grows much faster, so they carry their own,
/// smaller bounds.
#[derive(Debug, Clone)]
pub struct Limits {
    /// Largest state count for subset-space constructions (default 20).
    pub exhaustive_n: usize,
    /// Largest degree for the sync-maximality sweep (default 7).
    pub sync_max_n: usize,
    /// Largest degree for `is_k_reachable` with k = 1 (default 7).
    pub k_reach_n_k1: usize,
    /// Largest degree for `is_k_reachable` with k ≥ 2 (default 6).
    pub k_reach_n: usize,
    /// Cap on transformation-monoid enumeration (default 2,000,000).
    pub monoid_cap: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            exhaustive_n: 20,
            sync_max_n: 7,
            k_reach_n_k1: 7,
            k_reach_n: 6,
            monoid_cap: 2_000_000,
        }
    }
}

impl Limits {
    /// Overrides every state-count bound with `n`, keeping the monoid cap.
    pub fn with_n(n: usize) -> Self {
        Limits {
            exhaustive_n: n,
            sync_max_n: n,
            k_reach_n_k1: n,
            k_reach_n: n,
            ..Limits::default()
        }
    }
}
