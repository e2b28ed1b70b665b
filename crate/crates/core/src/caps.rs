//! Size caps for the exhaustive deciders.
//!
//! Every enumeration in this crate is bounded. Exceeding a cap never
//! produces a truncated answer: operations either return a capacity
//! error or an `Unsupported` verdict naming the cap that was hit.

use serde::Serialize;

/// Configured bounds for construction and decision procedures.
#[derive(Debug, Clone, Serialize)]
pub struct Caps {
    /// Largest ring order accepted by `build_ring` and friends.
    pub ring_order_construct: usize,
    /// Largest ring order the ring-property deciders accept.
    pub ring_order_decide: usize,
    /// Largest right-ideal count `right_ideals` will enumerate.
    pub ideal_count: usize,
    /// Largest module order accepted by module constructors and deciders.
    pub module_order: usize,
    /// Largest submodule count `submodules` will enumerate.
    pub submodule_count: usize,
    /// Largest homomorphism-set size `hom_set` will enumerate.
    pub hom_set: usize,
    /// Separate (smaller) module-order cap for the quasi-injectivity
    /// decider, the most expensive search in the crate.
    pub quasi_injective_order: usize,
    /// Largest `|R|^g` lift space searched by the semihereditary decider.
    pub lift_space: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            ring_order_construct: 256,
            ring_order_decide: 64,
            ideal_count: 4096,
            module_order: 64,
            submodule_count: 4096,
            hom_set: 65536,
            quasi_injective_order: 32,
            lift_space: 1 << 20,
        }
    }
}

/// Description of an exceeded cap, carried by `Unsupported` verdicts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CapExceeded {
    /// Name of the cap, e.g. `"module_order"`.
    pub cap: &'static str,
    /// The configured limit.
    pub limit: usize,
    /// The size that was requested.
    pub actual: usize,
}

impl std::fmt::Display for CapExceeded {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "cap {} exceeded: {} > {}",
            self.cap, self.actual, self.limit
        )
    }
}
