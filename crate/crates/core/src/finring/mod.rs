//! Finite rings with identity and the ring-level property deciders.
//!
//! Elements are indices `0..order`; the ring structure is a pair of
//! dense Cayley tables validated against the ring axioms at
//! construction. All deciders are exhaustive and exact.

mod ideal;
mod props;
mod ring;

pub use ideal::{
    idempotents, jacobson_radical, left_annihilator, right_annihilator, right_closure,
    right_ideals, LeftIdeal, RightIdeal,
};
pub use props::{annihilator_intersection_closure, is_essential_right_ideal};

/// Greedy generating set for a right ideal given as a member set.
pub fn ideal_generators(ring: &FiniteRing, members: &crate::elemset::ElemSet) -> Vec<usize> {
    ideal::greedy_generators(ring, members)
}
pub use props::{
    decide_ring_property, decide_ring_property_mode, recheck_ring_witness, RingProperty,
    RingVerdict, RingWitness, WitnessMode,
};
pub use ring::{
    build_ring, quotient_ring, ring_from_tables, ring_isomorphic, FiniteRing, RingError, RingRef,
    RingSpec,
};
