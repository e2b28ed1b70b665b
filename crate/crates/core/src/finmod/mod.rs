//! Finite right modules over finite rings.
//!
//! Modules are presented as products of cyclic groups with a validated
//! right action; submodule lattices, hom sets and the essential /
//! closed / direct-summand machinery all enumerate exhaustively within
//! the configured caps.
//!
//! Finite abelian groups are treated as modules over `zmod(e)` where
//! `e` is the group exponent: the `zmod(e)`-endomorphisms of a finite
//! abelian group of exponent `e` coincide with its additive-group
//! endomorphisms, so torsion questions about Z-modules can be decided
//! here (the mixed free/torsion case lives in [`crate::zmodsnf`]).

pub mod abelian;
mod hom;
mod module;
mod ops;
mod submodule;

pub use hom::{
    find_module_isomorphism, hom_set, quotient, submodule_as_module, sum_embeddings,
    sum_projections, Homomorphism,
};
pub use module::{
    build_module, cyclic_module, direct_sum, module_from_action, regular_module, split_components,
    zero_module, FiniteModule, ModuleDescription, ModuleError, ModuleRef, ModuleSpec,
    RegularModule, SumSplit,
};
pub use ops::{
    annihilator_in_ring, decomposes_along, is_direct_summand, is_direct_summand_with,
    is_summand_by_idempotent, submodule_intersection, SummandCertificate, SummandVerdict,
};
pub use submodule::{
    generated_submodule, is_closed, is_closed_with, is_essential, is_essential_in,
    submodule_closure, submodule_sum, submodules, Submodule,
};

pub(crate) use submodule::make_submodule;

pub(crate) fn ring_ideal_generators(
    ring: &crate::finring::FiniteRing,
    members: &crate::elemset::ElemSet,
) -> Vec<usize> {
    crate::finring::ideal_generators(ring, members)
}

pub(crate) fn serialize_hom_images<S>(h: &Homomorphism, s: S) -> Result<S::Ok, S::Error>
where
    S: serde::Serializer,
{
    use serde::Serialize;
    h.images().serialize(s)
}
