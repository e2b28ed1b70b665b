use serde::Serialize;

use crate::caps::Caps;
use crate::finmod::{
    annihilator_in_ring, decomposes_along, direct_sum, submodules, ModuleError, ModuleRef,
};
use crate::finring::{right_closure, WitnessMode};
use crate::modprops::deciders::{
    decide_module_property, is_relatively_rickart, ModuleProperty, ModuleVerdict,
};
use crate::verdict::VerdictStatus;

/// One checked hypothesis with an optional witness rendering.
#[derive(Debug, Clone, Serialize)]
pub struct ConditionReport {
    pub name: &'static str,
    pub holds: bool,
    pub detail: Option<String>,
}

/// Full report for the direct-sum criterion: both factors Rickart,
/// every submodule of the sum splits along the factors (condition 1),
/// both cross relative-Rickart conditions (condition 2), the
/// annihilator-sum condition of the corollary, and the conclusion.
///
/// The report never asserts the implication; it evaluates both sides
/// and flags `theorem_violation` when the hypotheses hold but the
/// conclusion fails.
#[derive(Debug, Clone, Serialize)]
pub struct DirectSumReport {
    pub m1_rickart: ModuleVerdict,
    pub m2_rickart: ModuleVerdict,
    pub condition_split: ConditionReport,
    pub condition_rel_12: ModuleVerdict,
    pub condition_rel_21: ModuleVerdict,
    pub corollary_annihilators_sum_to_ring: ConditionReport,
    pub conclusion: ModuleVerdict,
    pub hypotheses_met: Option<bool>,
    pub theorem_violation: bool,
    /// The corollary's route: annihilator condition forces condition (1).
    pub corollary_implies_split_consistent: bool,
}

pub fn check_direct_sum_theorem(
    m1: &ModuleRef,
    m2: &ModuleRef,
    caps: &Caps,
) -> Result<DirectSumReport, ModuleError> {
    let sum = direct_sum(m1, m2, caps)?;

    let m1_rickart = decide_module_property(m1, ModuleProperty::Rickart, caps);
    let m2_rickart = decide_module_property(m2, ModuleProperty::Rickart, caps);

    let subs = submodules(&sum, caps)?;
    let mut split_failure: Option<String> = None;
    for n in &subs {
        if !decomposes_along(&sum, n)? {
            split_failure = Some(format!(
                "submodule {:?} does not split along the factors",
                n.members.to_vec()
            ));
            break;
        }
    }
    let condition_split = ConditionReport {
        name: "every submodule splits along the factors",
        holds: split_failure.is_none(),
        detail: split_failure,
    };

    let condition_rel_12 = is_relatively_rickart(m1, m2, caps, WitnessMode::First);
    let condition_rel_21 = is_relatively_rickart(m2, m1, caps, WitnessMode::First);

    let ring = m1.ring();
    let a1 = annihilator_in_ring(m1);
    let a2 = annihilator_in_ring(m2);
    let mut sum_gens: Vec<usize> = a1.members.iter().collect();
    sum_gens.extend(a2.members.iter());
    let ideal_sum = right_closure(ring, None, &sum_gens);
    let ann_condition = ideal_sum.len() == ring.order();
    let corollary_annihilators_sum_to_ring = ConditionReport {
        name: "r_R(M1) + r_R(M2) = R",
        holds: ann_condition,
        detail: Some(format!(
            "r(M1) = {:?}, r(M2) = {:?}, sum has {} of {} elements",
            a1.members.to_vec(),
            a2.members.to_vec(),
            ideal_sum.len(),
            ring.order()
        )),
    };

    let conclusion = decide_module_property(&sum, ModuleProperty::Rickart, caps);

    let hypotheses_met = match (
        m1_rickart.holds_bool(),
        m2_rickart.holds_bool(),
        condition_rel_12.holds_bool(),
        condition_rel_21.holds_bool(),
    ) {
        (Some(a), Some(b), Some(c), Some(d)) => Some(a && b && condition_split.holds && c && d),
        _ => None,
    };
    let theorem_violation = hypotheses_met == Some(true)
        && conclusion.status == VerdictStatus::Fails;
    // the corollary's bridge: if the annihilator condition holds, every
    // submodule of the sum splits along the factors
    let corollary_implies_split_consistent = !ann_condition || condition_split.holds;

    Ok(DirectSumReport {
        m1_rickart,
        m2_rickart,
        condition_split,
        condition_rel_12,
        condition_rel_21,
        corollary_annihilators_sum_to_ring,
        conclusion,
        hypotheses_met,
        theorem_violation,
        corollary_implies_split_consistent,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finmod::cyclic_module;
    use crate::finring::{build_ring, RingRef, RingSpec};

    fn caps() -> Caps {
        Caps::default()
    }
    fn zmod(n: u32) -> RingRef {
        build_ring(&RingSpec::Zmod(n), &caps()).unwrap()
    }

    #[test]
    fn z2_z3_over_z6_meets_all_hypotheses_and_conclusion() {
        let r = zmod(6);
        let z2 = cyclic_module(&r, 2, &caps()).unwrap();
        let z3 = cyclic_module(&r, 3, &caps()).unwrap();
        let rep = check_direct_sum_theorem(&z2, &z3, &caps()).unwrap();
        assert_eq!(rep.hypotheses_met, Some(true));
        assert!(rep.corollary_annihilators_sum_to_ring.holds);
        assert_eq!(rep.conclusion.status, VerdictStatus::Holds);
        assert!(!rep.theorem_violation);
        assert!(rep.corollary_implies_split_consistent);
    }

    #[test]
    fn z2_z4_over_z4_fails_hypotheses_without_violation() {
        let r = zmod(4);
        let z2 = cyclic_module(&r, 2, &caps()).unwrap();
        let z4 = cyclic_module(&r, 4, &caps()).unwrap();
        let rep = check_direct_sum_theorem(&z2, &z4, &caps()).unwrap();
        assert!(!rep.condition_split.holds);
        assert_eq!(rep.condition_rel_21.status, VerdictStatus::Fails);
        assert_eq!(rep.hypotheses_met, Some(false));
        assert_eq!(rep.conclusion.status, VerdictStatus::Fails);
        assert!(!rep.theorem_violation);
        assert!(!rep.corollary_annihilators_sum_to_ring.holds);
    }

    #[test]
    fn zero_summand_reduces_to_the_partner() {
        // rickart partner: hypotheses hold and the conclusion is its verdict
        let r2 = zmod(2);
        let z2 = cyclic_module(&r2, 2, &caps()).unwrap();
        let zero = crate::finmod::zero_module(&r2, &caps()).unwrap();
        let rep = check_direct_sum_theorem(&zero, &z2, &caps()).unwrap();
        assert_eq!(rep.hypotheses_met, Some(true));
        assert_eq!(rep.conclusion.status, VerdictStatus::Holds);
        assert!(!rep.theorem_violation);

        // non-rickart partner: conclusion tracks the partner, hypotheses fail
        let r4 = zmod(4);
        let z4 = cyclic_module(&r4, 4, &caps()).unwrap();
        let zero4 = crate::finmod::zero_module(&r4, &caps()).unwrap();
        let rep = check_direct_sum_theorem(&zero4, &z4, &caps()).unwrap();
        assert_eq!(rep.hypotheses_met, Some(false));
        assert_eq!(rep.conclusion.status, VerdictStatus::Fails);
        assert!(!rep.theorem_violation);
    }
}
