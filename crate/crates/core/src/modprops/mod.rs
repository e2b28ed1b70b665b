//! Module-level property deciders.
//!
//! Every decider is an exhaustive search over the endomorphism monoid
//! and/or the submodule lattice, short-circuiting at the first
//! counterexample in deterministic order. Failure witnesses carry
//! generator-image arrays and re-check by definition unfolding through
//! an independent code path ([`recheck_module_witness`]).

mod deciders;
mod sum_theorem;

pub use deciders::{
    decide_module_property, decide_module_property_mode, is_relatively_rickart,
    k_local_retract_witness, recheck_module_witness, ModuleProperty, ModuleVerdict, ModuleWitness,
};
pub use sum_theorem::{check_direct_sum_theorem, ConditionReport, DirectSumReport};
