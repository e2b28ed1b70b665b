//! Finitely generated abelian groups (Z-modules) with possibly
//! infinite free part: exact integer linear algebra via Smith normal
//! form instead of element enumeration.
//!
//! No modular shortcuts are taken in this tier: all arithmetic is
//! overflow-checked `i64` (with `i128` intermediates for determinants)
//! and overflow is reported, never wrapped.

mod fgmod;
mod hom;
mod matrix;
mod rickart;
mod snf;
mod summand;

pub use fgmod::FgZModule;
pub use hom::{in_image, zhom_cokernel, zhom_kernel, ZKernel, ZModHom};
pub use matrix::{determinant, triple_product, BigMat, IntMat, ZError};
pub use rickart::{
    torsion_as_finite_module, zrickart_check, SweepInfo, ZRickartVerdict, ZRickartWitness,
};
pub use snf::{smith_normal_form, solve, unimodular_inverse, SnfResult, SolveOutcome};
pub use summand::{zsummand_test, ZObstruction, ZSummandVerdict};
