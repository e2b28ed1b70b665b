//! Materializes `S = End_R(M)` as a finite ring and evaluates the
//! module-to-endomorphism-ring correspondence statements.
//!
//! The multiplication convention is composition, `(f·g)(m) = f(g(m))`.
//! For right modules this makes `End(R_R)` isomorphic to `R` via left
//! multiplications; the isomorphism is validated by tests rather than
//! assumed.
//!
//! Reports never assert a theorem: both sides of every equivalence are
//! computed independently and compared, so an engine bug surfaces as a
//! `Violation` outcome instead of silent agreement.

use std::collections::HashMap;

use serde::Serialize;

use crate::caps::{CapExceeded, Caps};
use crate::elemset::ElemSet;
use crate::finmod::{hom_set, Homomorphism, ModuleError, ModuleRef};
use crate::finring::{
    decide_ring_property, jacobson_radical, quotient_ring, ring_from_tables, RingError,
    RingProperty, RingRef, RingVerdict,
};
use crate::modprops::{decide_module_property, ModuleProperty};
use crate::verdict::VerdictStatus;

/// `End_R(M)` as a finite ring with an indexed carrier.
pub struct EndoRing {
    pub ring: RingRef,
    pub carrier: Vec<Homomorphism>,
    pub module: ModuleRef,
}

#[derive(Debug, thiserror::Error)]
pub enum EndoError {
    #[error("{0}")]
    Module(#[from] ModuleError),
    #[error("{0}")]
    Ring(#[from] RingError),
}

impl EndoRing {
    /// Index of an endomorphism in the carrier.
    pub fn index_of(&self, h: &Homomorphism) -> Option<usize> {
        self.carrier.iter().position(|c| c == h)
    }
}

/// Builds the endomorphism ring of a module. Addition is pointwise,
/// multiplication is composition `(f·g)(m) = f(g(m))`.
pub fn endomorphism_ring(m: &ModuleRef, caps: &Caps) -> Result<EndoRing, EndoError> {
    let carrier = hom_set(m, m, caps)?;
    let order = carrier.len();
    if order > caps.ring_order_construct {
        return Err(EndoError::Ring(RingError::Capacity(CapExceeded {
            cap: "ring_order_construct",
            limit: caps.ring_order_construct,
            actual: order,
        })));
    }
    let index: HashMap<Vec<usize>, usize> = carrier
        .iter()
        .enumerate()
        .map(|(i, h)| (h.images().to_vec(), i))
        .collect();
    let lookup = |h: &Homomorphism| -> usize {
        *index
            .get(h.images())
            .expect("End(M) is closed under addition and composition")
    };
    let mut add = vec![vec![0usize; order]; order];
    let mut mul = vec![vec![0usize; order]; order];
    for (i, f) in carrier.iter().enumerate() {
        for (j, g) in carrier.iter().enumerate() {
            add[i][j] = lookup(&f.plus(g));
            mul[i][j] = lookup(&f.after(g));
        }
    }
    let zero = lookup(&Homomorphism::zero(m, m));
    let one = lookup(&Homomorphism::identity(m));
    let ring = ring_from_tables(
        order,
        add,
        mul,
        zero,
        one,
        format!("End({})", m.label()),
        caps,
    )?;
    Ok(EndoRing {
        ring,
        carrier,
        module: m.clone(),
    })
}

/// Outcome of a correspondence report, suitable for suite tabulation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ReportOutcome {
    /// Every evaluated flag is consistent.
    Consistent,
    /// A theorem-level equivalence failed on computed data.
    Violation,
    /// The report's hypothesis (e.g. quasi-injectivity) does not hold.
    NotApplicable,
    /// A cap was exceeded before the report could be evaluated.
    Unsupported,
}

/// A named implication/equivalence evaluated on computed bits.
/// `consistent == None` means a side was unsupported.
#[derive(Debug, Clone, Serialize)]
pub struct TheoremFlag {
    pub name: &'static str,
    pub consistent: Option<bool>,
}

/// Comparison of the Faith–Utumi description of the radical (essential
/// kernels) against the ring-theoretic Jacobson radical of `End(M)`,
/// plus regularity of the quotient.
#[derive(Debug, Clone, Serialize)]
pub struct FaithUtumiReport {
    pub module: String,
    pub quasi_injective: Option<bool>,
    pub essential_kernel_indices: Vec<usize>,
    pub radical_indices: Vec<usize>,
    pub sets_agree: bool,
    pub quotient_vn_regular: Option<RingVerdict>,
    pub outcome: ReportOutcome,
    pub unsupported: Option<CapExceeded>,
}

pub fn faith_utumi_radical_check(m: &ModuleRef, caps: &Caps) -> FaithUtumiReport {
    let qi = decide_module_property(m, ModuleProperty::QuasiInjective, caps);
    let base = |outcome, unsupported| FaithUtumiReport {
        module: m.label().to_string(),
        quasi_injective: qi.holds_bool(),
        essential_kernel_indices: Vec::new(),
        radical_indices: Vec::new(),
        sets_agree: false,
        quotient_vn_regular: None,
        outcome,
        unsupported,
    };
    match qi.holds_bool() {
        None => return base(ReportOutcome::Unsupported, qi.unsupported.clone()),
        Some(false) => return base(ReportOutcome::NotApplicable, None),
        Some(true) => {}
    }
    let endo = match endomorphism_ring(m, caps) {
        Ok(e) => e,
        Err(EndoError::Module(ModuleError::Capacity(c)))
        | Err(EndoError::Ring(RingError::Capacity(c))) => {
            return base(ReportOutcome::Unsupported, Some(c))
        }
        Err(e) => panic!("endomorphism ring construction failed: {e}"),
    };
    let full = ElemSet::full(m.size());
    let essential_kernel_indices: Vec<usize> = endo
        .carrier
        .iter()
        .enumerate()
        .filter(|(_, f)| {
            crate::finmod::is_essential_in(m, &f.kernel().members, &full)
        })
        .map(|(i, _)| i)
        .collect();
    let radical_indices: Vec<usize> = jacobson_radical(&endo.ring).members.to_vec();
    let sets_agree = essential_kernel_indices == radical_indices;
    let radical_set = ElemSet::from_iter(endo.ring.order(), radical_indices.iter().copied());
    let quotient_vn_regular = match quotient_ring(&endo.ring, &radical_set) {
        Ok(q) => Some(decide_ring_property(&q, RingProperty::VnRegular, caps)),
        Err(RingError::Capacity(c)) => return base(ReportOutcome::Unsupported, Some(c)),
        Err(e) => panic!("radical is not an ideal: {e}"),
    };
    let quotient_status = quotient_vn_regular.as_ref().map(|v| v.status);
    let (outcome, unsupported) = if !sets_agree {
        (ReportOutcome::Violation, None)
    } else {
        match quotient_status {
            Some(VerdictStatus::Holds) => (ReportOutcome::Consistent, None),
            Some(VerdictStatus::Fails) => (ReportOutcome::Violation, None),
            // the quotient ring outgrew the decider cap; honest
            // non-answer instead of a spurious violation
            Some(VerdictStatus::Unsupported) | None => (
                ReportOutcome::Unsupported,
                quotient_vn_regular
                    .as_ref()
                    .and_then(|v| v.unsupported.clone()),
            ),
        }
    };
    FaithUtumiReport {
        module: m.label().to_string(),
        quasi_injective: Some(true),
        essential_kernel_indices,
        radical_indices,
        sets_agree,
        quotient_vn_regular,
        outcome,
        unsupported,
    }
}

/// The module/endomorphism-ring correspondence bits and the flags tying
/// them together.
#[derive(Debug, Clone, Serialize)]
pub struct CorrespondenceReport {
    pub module: String,
    pub rickart: Option<bool>,
    pub baer: Option<bool>,
    pub right_rickart_s: Option<bool>,
    pub retractable: Option<bool>,
    pub k_local_retractable: Option<bool>,
    pub flags: Vec<TheoremFlag>,
    pub outcome: ReportOutcome,
    pub unsupported: Option<CapExceeded>,
}

pub fn correspondence_report(m: &ModuleRef, caps: &Caps) -> CorrespondenceReport {
    let rickart = decide_module_property(m, ModuleProperty::Rickart, caps);
    let baer = decide_module_property(m, ModuleProperty::Baer, caps);
    let retractable = decide_module_property(m, ModuleProperty::Retractable, caps);
    let klr = decide_module_property(m, ModuleProperty::KLocalRetractable, caps);
    let (right_rickart_s, unsupported) = match endomorphism_ring(m, caps) {
        Ok(endo) => {
            let v = decide_ring_property(&endo.ring, RingProperty::RightRickart, caps);
            (v.holds_bool(), v.unsupported)
        }
        Err(EndoError::Module(ModuleError::Capacity(c)))
        | Err(EndoError::Ring(RingError::Capacity(c))) => (None, Some(c)),
        Err(e) => panic!("endomorphism ring construction failed: {e}"),
    };
    let bits = (
        rickart.holds_bool(),
        baer.holds_bool(),
        right_rickart_s,
        retractable.holds_bool(),
        klr.holds_bool(),
    );
    let mut flags = Vec::new();
    // rickart module gives a right Rickart endomorphism ring
    flags.push(TheoremFlag {
        name: "rickart(M) => right_rickart(S)",
        consistent: match (bits.0, bits.2) {
            (Some(r), Some(s)) => Some(!r || s),
            _ => None,
        },
    });
    // for retractable modules the two sides are equivalent
    flags.push(TheoremFlag {
        name: "retractable(M) => (rickart(M) <=> right_rickart(S))",
        consistent: match (bits.3, bits.0, bits.2) {
            (Some(false), _, _) => Some(true),
            (Some(true), Some(r), Some(s)) => Some(r == s),
            _ => None,
        },
    });
    // rickart is exactly right-Rickart endomorphism ring plus
    // k-local-retractability
    flags.push(TheoremFlag {
        name: "rickart(M) <=> right_rickart(S) and k_local_retractable(M)",
        consistent: match (bits.0, bits.2, bits.4) {
            (Some(r), Some(s), Some(k)) => Some(r == (s && k)),
            _ => None,
        },
    });
    // finite S never has an infinite orthogonal idempotent family, so
    // the three-way equivalence applies unconditionally here
    flags.push(TheoremFlag {
        name: "baer(M) <=> rickart(M) <=> right_rickart(S)",
        consistent: match (bits.1, bits.0, bits.2) {
            (Some(b), Some(r), Some(s)) => Some(b == r && r == s),
            _ => None,
        },
    });
    let outcome = if flags.iter().any(|f| f.consistent == Some(false)) {
        ReportOutcome::Violation
    } else if flags.iter().any(|f| f.consistent.is_none()) {
        ReportOutcome::Unsupported
    } else {
        ReportOutcome::Consistent
    };
    CorrespondenceReport {
        module: m.label().to_string(),
        rickart: bits.0,
        baer: bits.1,
        right_rickart_s: bits.2,
        retractable: bits.3,
        k_local_retractable: bits.4,
        flags,
        outcome,
        unsupported,
    }
}

/// The six-way equivalence for quasi-injective modules: Baer M, Rickart
/// M, and regular / semihereditary / right Rickart / right nonsingular
/// `End(M)` must all agree.
#[derive(Debug, Clone, Serialize)]
pub struct QiEquivalenceReport {
    pub module: String,
    pub quasi_injective: Option<bool>,
    pub conditions: Vec<(String, Option<bool>)>,
    pub all_equal: Option<bool>,
    pub outcome: ReportOutcome,
    pub unsupported: Option<CapExceeded>,
}

pub fn quasi_injective_equivalence_report(m: &ModuleRef, caps: &Caps) -> QiEquivalenceReport {
    let qi = decide_module_property(m, ModuleProperty::QuasiInjective, caps);
    let base = |outcome, unsupported| QiEquivalenceReport {
        module: m.label().to_string(),
        quasi_injective: qi.holds_bool(),
        conditions: Vec::new(),
        all_equal: None,
        outcome,
        unsupported,
    };
    match qi.holds_bool() {
        None => return base(ReportOutcome::Unsupported, qi.unsupported.clone()),
        Some(false) => return base(ReportOutcome::NotApplicable, None),
        Some(true) => {}
    }
    let endo = match endomorphism_ring(m, caps) {
        Ok(e) => e,
        Err(EndoError::Module(ModuleError::Capacity(c)))
        | Err(EndoError::Ring(RingError::Capacity(c))) => {
            return base(ReportOutcome::Unsupported, Some(c))
        }
        Err(e) => panic!("endomorphism ring construction failed: {e}"),
    };
    let module_side = |p: ModuleProperty| -> (String, Option<bool>) {
        (
            format!("{p}(M)"),
            decide_module_property(m, p, caps).holds_bool(),
        )
    };
    let ring_side = |p: RingProperty| -> (String, Option<bool>) {
        (
            format!("{p}(S)"),
            decide_ring_property(&endo.ring, p, caps).holds_bool(),
        )
    };
    let conditions = vec![
        module_side(ModuleProperty::Baer),
        module_side(ModuleProperty::Rickart),
        ring_side(RingProperty::VnRegular),
        ring_side(RingProperty::RightSemihereditary),
        ring_side(RingProperty::RightRickart),
        ring_side(RingProperty::RightNonsingular),
    ];
    let all_equal = if conditions.iter().any(|(_, b)| b.is_none()) {
        None
    } else {
        let first = conditions[0].1;
        Some(conditions.iter().all(|(_, b)| *b == first))
    };
    let outcome = match all_equal {
        Some(true) => ReportOutcome::Consistent,
        Some(false) => ReportOutcome::Violation,
        None => ReportOutcome::Unsupported,
    };
    QiEquivalenceReport {
        module: m.label().to_string(),
        quasi_injective: Some(true),
        conditions,
        all_equal,
        outcome,
        unsupported: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finmod::{cyclic_module, direct_sum, regular_module, zero_module};
    use crate::finring::{build_ring, ring_isomorphic, RingSpec};

    fn caps() -> Caps {
        Caps::default()
    }
    fn zmod(n: u32) -> RingRef {
        build_ring(&RingSpec::Zmod(n), &caps()).unwrap()
    }

    #[test]
    fn end_of_regular_z4_is_z4() {
        let m = regular_module(&zmod(4), &caps()).unwrap().module;
        let endo = endomorphism_ring(&m, &caps()).unwrap();
        assert_eq!(endo.ring.order(), 4);
        assert!(ring_isomorphic(&endo.ring, &zmod(4)).unwrap().is_some());
    }

    #[test]
    fn end_of_klein_module_is_the_two_by_two_matrix_ring() {
        let r = zmod(2);
        let z2 = cyclic_module(&r, 2, &caps()).unwrap();
        let m = direct_sum(&z2, &z2, &caps()).unwrap();
        let endo = endomorphism_ring(&m, &caps()).unwrap();
        assert_eq!(endo.ring.order(), 16);
        let mat = build_ring(
            &RingSpec::Matrix {
                base: Box::new(RingSpec::Zmod(2)),
                size: 2,
            },
            &caps(),
        )
        .unwrap();
        assert!(ring_isomorphic(&endo.ring, &mat).unwrap().is_some());
    }

    #[test]
    fn end_of_zero_module_is_the_zero_ring() {
        let m = zero_module(&zmod(4), &caps()).unwrap();
        let endo = endomorphism_ring(&m, &caps()).unwrap();
        assert_eq!(endo.ring.order(), 1);
        assert_eq!(endo.ring.zero(), endo.ring.one());
    }

    #[test]
    fn idempotents_correspond_to_idempotent_endomorphisms() {
        let r = zmod(4);
        let z2 = cyclic_module(&r, 2, &caps()).unwrap();
        let z4 = cyclic_module(&r, 4, &caps()).unwrap();
        let m = direct_sum(&z2, &z4, &caps()).unwrap();
        let endo = endomorphism_ring(&m, &caps()).unwrap();
        for e in endo.ring.elements() {
            let is_ring_idem = endo.ring.is_idempotent(e);
            let h = &endo.carrier[e];
            assert_eq!(is_ring_idem, h.is_idempotent());
            if is_ring_idem {
                // image is a summand with the kernel as complement
                let im = h.image();
                let ker = h.kernel();
                assert!(im.members.intersection(&ker.members).is_zero_only());
                assert_eq!(im.len() * ker.len(), m.size());
            }
        }
    }

    #[test]
    fn faith_utumi_on_regular_z4() {
        let m = regular_module(&zmod(4), &caps()).unwrap().module;
        let rep = faith_utumi_radical_check(&m, &caps());
        assert_eq!(rep.outcome, ReportOutcome::Consistent);
        assert_eq!(rep.essential_kernel_indices.len(), 2); // zero map and doubling
        assert!(rep.sets_agree);
    }

    #[test]
    fn faith_utumi_on_klein_module() {
        let r = zmod(2);
        let z2 = cyclic_module(&r, 2, &caps()).unwrap();
        let m = direct_sum(&z2, &z2, &caps()).unwrap();
        let rep = faith_utumi_radical_check(&m, &caps());
        assert_eq!(rep.outcome, ReportOutcome::Consistent);
        assert_eq!(rep.radical_indices.len(), 1); // J(S) = 0
    }

    #[test]
    fn faith_utumi_on_zero_module() {
        let m = zero_module(&zmod(4), &caps()).unwrap();
        let rep = faith_utumi_radical_check(&m, &caps());
        assert_eq!(rep.outcome, ReportOutcome::Consistent);
        assert_eq!(rep.essential_kernel_indices, vec![0]);
        assert_eq!(rep.radical_indices, vec![0]);
    }

    #[test]
    fn correspondence_on_regular_z4() {
        let m = regular_module(&zmod(4), &caps()).unwrap().module;
        let rep = correspondence_report(&m, &caps());
        assert_eq!(rep.outcome, ReportOutcome::Consistent);
        assert_eq!(rep.rickart, Some(false));
        assert_eq!(rep.baer, Some(false));
        assert_eq!(rep.right_rickart_s, Some(false));
        assert_eq!(rep.retractable, Some(true));
        assert_eq!(rep.k_local_retractable, Some(true));
    }

    #[test]
    fn qi_equivalence_examples() {
        let all_true = regular_module(&zmod(6), &caps()).unwrap().module;
        let rep = quasi_injective_equivalence_report(&all_true, &caps());
        assert_eq!(rep.outcome, ReportOutcome::Consistent);
        assert!(rep.conditions.iter().all(|(_, b)| *b == Some(true)));

        let all_false = regular_module(&zmod(4), &caps()).unwrap().module;
        let rep = quasi_injective_equivalence_report(&all_false, &caps());
        assert_eq!(rep.outcome, ReportOutcome::Consistent);
        assert!(rep.conditions.iter().all(|(_, b)| *b == Some(false)));
    }
}
