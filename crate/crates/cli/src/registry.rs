//! The theorem registry: every in-scope statement, quantified over the
//! corpus, evaluated by computing both sides and comparing. A
//! `Violation` outcome means the engine contradicted a statement on
//! concrete data, which is a build-stopping bug.

use serde::Serialize;

use rickart_core::caps::Caps;
use rickart_core::endobridge::{
    endomorphism_ring, faith_utumi_radical_check, quasi_injective_equivalence_report, EndoError,
    ReportOutcome,
};
use rickart_core::finmod::{
    generated_submodule, hom_set, is_closed_with, is_direct_summand_with, regular_module,
    submodule_as_module, submodules, ModuleRef, Submodule,
};
use rickart_core::finring::{
    annihilator_intersection_closure, decide_ring_property, RingProperty, RingRef, RingVerdict,
};
use rickart_core::modprops::{
    check_direct_sum_theorem, decide_module_property, ModuleProperty, ModuleVerdict,
};
use rickart_core::verdict::VerdictStatus;
use rickart_core::zmodsnf::{zrickart_check, zsummand_test, FgZModule, IntMat, ZModHom, ZRickartVerdict};

use crate::builtins::Corpus;

pub struct TheoremDef {
    pub id: &'static str,
    pub summary: &'static str,
}

/// Ordered registry of every verified statement.
pub const REGISTRY: &[TheoremDef] = &[
    TheoremDef { id: "prop-2.2", summary: "rickart(M) iff kernels of maps between summands are summands" },
    TheoremDef { id: "thm-2.3", summary: "direct summands of rickart modules are rickart" },
    TheoremDef { id: "ex-2.4", summary: "Z (+) Z_2 is not rickart; 2Z does not split off Z" },
    TheoremDef { id: "thm-2.5", summary: "split-submodule + relative-rickart hypotheses force rickart sums" },
    TheoremDef { id: "cor-2.6", summary: "annihilator condition r(M1)+r(M2)=R forces the splitting hypothesis" },
    TheoremDef { id: "prop-3.1", summary: "rickart(M) implies End(M) right rickart" },
    TheoremDef { id: "prop-3.3", summary: "for retractable M: rickart(M) iff End(M) right rickart" },
    TheoremDef { id: "thm-3.4", summary: "rickart(M) iff End(M) right rickart and M k-local-retractable" },
    TheoremDef { id: "ex-z4-klr", summary: "Z_4 is k-local-retractable but not rickart" },
    TheoremDef { id: "prop-3.5-fwd", summary: "regular End(M) implies rickart(M)" },
    TheoremDef { id: "prop-3.5-rev", summary: "rickart self-cogenerator M has regular End(M)" },
    TheoremDef { id: "chart", summary: "regular => semihereditary => right rickart => right nonsingular; baer => right rickart" },
    TheoremDef { id: "lemma-3.10", summary: "right nonsingular iff subset annihilators are closed right ideals" },
    TheoremDef { id: "faith-utumi", summary: "for quasi-injective M: J(End M) = essential-kernel maps, quotient regular" },
    TheoremDef { id: "thm-qi-equiv", summary: "six-way equivalence for quasi-injective modules" },
    TheoremDef { id: "cor-self-inj", summary: "five-way ring equivalence when the regular module is quasi-injective" },
    TheoremDef { id: "thm-small", summary: "baer(M) iff rickart(M) iff End(M) right rickart (finite End)" },
    TheoremDef { id: "cor-ring-small", summary: "baer iff right rickart for finite rings" },
];

pub fn theorem_ids() -> Vec<&'static str> {
    REGISTRY.iter().map(|t| t.id).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum InstanceOutcome {
    Consistent,
    Violation,
    NotApplicable,
}

#[derive(Debug, Clone, Serialize)]
pub struct InstanceResult {
    pub subject: String,
    pub outcome: InstanceOutcome,
    pub detail: String,
}

impl InstanceResult {
    fn consistent(subject: &str, detail: impl Into<String>) -> Self {
        InstanceResult {
            subject: subject.to_string(),
            outcome: InstanceOutcome::Consistent,
            detail: detail.into(),
        }
    }
    fn violation(subject: &str, detail: impl Into<String>) -> Self {
        InstanceResult {
            subject: subject.to_string(),
            outcome: InstanceOutcome::Violation,
            detail: detail.into(),
        }
    }
    fn na(subject: &str, detail: impl Into<String>) -> Self {
        InstanceResult {
            subject: subject.to_string(),
            outcome: InstanceOutcome::NotApplicable,
            detail: detail.into(),
        }
    }
    fn check(subject: &str, ok: bool, detail: impl Into<String>) -> Self {
        if ok {
            Self::consistent(subject, detail)
        } else {
            Self::violation(subject, detail)
        }
    }
}

/// Precomputed property bits for one corpus ring.
pub struct RingProfile {
    pub name: String,
    pub ring: RingRef,
    pub vn_regular: RingVerdict,
    pub right_rickart: RingVerdict,
    pub baer: RingVerdict,
    pub right_nonsingular: RingVerdict,
    pub right_semihereditary: RingVerdict,
}

pub fn ring_profile(name: &str, ring: &RingRef, caps: &Caps) -> RingProfile {
    let d = |p| decide_ring_property(ring, p, caps);
    RingProfile {
        name: name.to_string(),
        ring: ring.clone(),
        vn_regular: d(RingProperty::VnRegular),
        right_rickart: d(RingProperty::RightRickart),
        baer: d(RingProperty::Baer),
        right_nonsingular: d(RingProperty::RightNonsingular),
        right_semihereditary: d(RingProperty::RightSemihereditary),
    }
}

/// Precomputed property bits for one corpus module, including the
/// ring-level bits of its endomorphism ring where it fits the caps.
pub struct ModuleProfile {
    pub name: String,
    pub module: ModuleRef,
    pub rickart: ModuleVerdict,
    pub baer: ModuleVerdict,
    pub k_nonsingular: ModuleVerdict,
    pub retractable: ModuleVerdict,
    pub k_local_retractable: ModuleVerdict,
    pub quasi_injective: ModuleVerdict,
    pub self_cogenerator: ModuleVerdict,
    pub sip: ModuleVerdict,
    pub extending: ModuleVerdict,
    pub endo_order: Option<usize>,
    pub s_right_rickart: Option<RingVerdict>,
    pub s_vn_regular: Option<RingVerdict>,
}

pub fn module_profile(name: &str, module: &ModuleRef, caps: &Caps) -> ModuleProfile {
    let d = |p| decide_module_property(module, p, caps);
    let (endo_order, s_right_rickart, s_vn_regular) = match endomorphism_ring(module, caps) {
        Ok(endo) => (
            Some(endo.ring.order()),
            Some(decide_ring_property(&endo.ring, RingProperty::RightRickart, caps)),
            Some(decide_ring_property(&endo.ring, RingProperty::VnRegular, caps)),
        ),
        Err(EndoError::Module(_)) | Err(EndoError::Ring(_)) => (None, None, None),
    };
    ModuleProfile {
        name: name.to_string(),
        module: module.clone(),
        rickart: d(ModuleProperty::Rickart),
        baer: d(ModuleProperty::Baer),
        k_nonsingular: d(ModuleProperty::KNonsingular),
        retractable: d(ModuleProperty::Retractable),
        k_local_retractable: d(ModuleProperty::KLocalRetractable),
        quasi_injective: d(ModuleProperty::QuasiInjective),
        self_cogenerator: d(ModuleProperty::SelfCogenerator),
        sip: d(ModuleProperty::Sip),
        extending: d(ModuleProperty::Extending),
        endo_order,
        s_right_rickart,
        s_vn_regular,
    }
}

impl ModuleProfile {
    fn s_right_rickart_bit(&self) -> Option<bool> {
        self.s_right_rickart.as_ref().and_then(|v| v.holds_bool())
    }
    fn s_vn_regular_bit(&self) -> Option<bool> {
        self.s_vn_regular.as_ref().and_then(|v| v.holds_bool())
    }
}

pub struct SuiteContext<'a> {
    pub corpus: &'a Corpus,
    pub ring_profiles: &'a [RingProfile],
    pub module_profiles: &'a [ModuleProfile],
    pub caps: &'a Caps,
    pub bound: i64,
}

/// Evaluates one registry entry over the corpus.
pub fn run_theorem(id: &str, ctx: &SuiteContext) -> Vec<InstanceResult> {
    match id {
        "prop-2.2" => ctx.module_profiles.iter().map(|p| prop_2_2(p, ctx.caps)).collect(),
        "thm-2.3" => ctx.module_profiles.iter().map(|p| thm_2_3(p, ctx.caps)).collect(),
        "ex-2.4" => ex_2_4(ctx),
        "thm-2.5" => sum_pairs(ctx, false),
        "cor-2.6" => sum_pairs(ctx, true),
        "prop-3.1" => ctx
            .module_profiles
            .iter()
            .map(|p| {
                let subject = &p.name;
                match (p.rickart.holds_bool(), p.s_right_rickart_bit()) {
                    (Some(true), Some(s)) => {
                        InstanceResult::check(subject, s, "rickart module, checked End(M)")
                    }
                    (Some(false), _) => InstanceResult::consistent(subject, "vacuous: M not rickart"),
                    _ => InstanceResult::na(subject, "endomorphism ring outside caps"),
                }
            })
            .collect(),
        "prop-3.3" => ctx
            .module_profiles
            .iter()
            .map(|p| {
                let subject = &p.name;
                match (p.retractable.holds_bool(), p.rickart.holds_bool(), p.s_right_rickart_bit()) {
                    (Some(true), Some(r), Some(s)) => InstanceResult::check(
                        subject,
                        r == s,
                        format!("rickart(M)={r}, right_rickart(S)={s}"),
                    ),
                    (Some(false), _, _) => InstanceResult::na(subject, "M not retractable"),
                    _ => InstanceResult::na(subject, "a side is outside caps"),
                }
            })
            .collect(),
        "thm-3.4" => ctx
            .module_profiles
            .iter()
            .map(|p| {
                let subject = &p.name;
                match (
                    p.rickart.holds_bool(),
                    p.s_right_rickart_bit(),
                    p.k_local_retractable.holds_bool(),
                ) {
                    (Some(r), Some(s), Some(k)) => InstanceResult::check(
                        subject,
                        r == (s && k),
                        format!("rickart={r}, right_rickart(S)={s}, klr={k}"),
                    ),
                    _ => InstanceResult::na(subject, "a side is outside caps"),
                }
            })
            .collect(),
        "ex-z4-klr" => ex_z4_klr(ctx),
        "prop-3.5-fwd" => ctx
            .module_profiles
            .iter()
            .map(|p| {
                let subject = &p.name;
                match (p.s_vn_regular_bit(), p.rickart.holds_bool(), p.s_right_rickart_bit()) {
                    (Some(true), Some(r), Some(s)) => InstanceResult::check(
                        subject,
                        r && s,
                        format!("S regular; rickart={r}, right_rickart(S)={s}"),
                    ),
                    (Some(false), _, _) => InstanceResult::consistent(subject, "vacuous: S not regular"),
                    _ => InstanceResult::na(subject, "endomorphism ring outside caps"),
                }
            })
            .collect(),
        "prop-3.5-rev" => ctx
            .module_profiles
            .iter()
            .map(|p| {
                let subject = &p.name;
                match (
                    p.rickart.holds_bool(),
                    p.self_cogenerator.holds_bool(),
                    p.s_vn_regular_bit(),
                ) {
                    (Some(true), Some(true), Some(s)) => InstanceResult::check(
                        subject,
                        s,
                        "rickart self-cogenerator module, checked regularity of S",
                    ),
                    (Some(_), Some(_), _) if p.s_vn_regular.is_none() => {
                        InstanceResult::na(subject, "endomorphism ring outside caps")
                    }
                    (Some(_), Some(_), _) => {
                        InstanceResult::consistent(subject, "vacuous: hypotheses not met")
                    }
                    _ => InstanceResult::na(subject, "a side is outside caps"),
                }
            })
            .collect(),
        "chart" => ctx.ring_profiles.iter().map(chart).collect(),
        "lemma-3.10" => ctx
            .ring_profiles
            .iter()
            .map(|p| lemma_3_10(p, ctx.caps))
            .collect(),
        "faith-utumi" => ctx
            .module_profiles
            .iter()
            .map(|p| {
                let rep = faith_utumi_radical_check(&p.module, ctx.caps);
                report_outcome(&p.name, rep.outcome, format!(
                    "essential kernels {:?} vs radical {:?}",
                    rep.essential_kernel_indices, rep.radical_indices
                ))
            })
            .collect(),
        "thm-qi-equiv" => ctx
            .module_profiles
            .iter()
            .map(|p| {
                let rep = quasi_injective_equivalence_report(&p.module, ctx.caps);
                let detail = rep
                    .conditions
                    .iter()
                    .map(|(n, b)| format!("{n}={}", b.map(|x| x.to_string()).unwrap_or("?".into())))
                    .collect::<Vec<_>>()
                    .join(", ");
                report_outcome(&p.name, rep.outcome, detail)
            })
            .collect(),
        "cor-self-inj" => ctx
            .ring_profiles
            .iter()
            .map(|p| cor_self_inj(p, ctx.caps))
            .collect(),
        "thm-small" => ctx
            .module_profiles
            .iter()
            .map(|p| {
                let subject = &p.name;
                match (p.baer.holds_bool(), p.rickart.holds_bool(), p.s_right_rickart_bit()) {
                    (Some(b), Some(r), Some(s)) => InstanceResult::check(
                        subject,
                        b == r && r == s,
                        format!("baer={b}, rickart={r}, right_rickart(S)={s}"),
                    ),
                    _ => InstanceResult::na(subject, "a side is outside caps"),
                }
            })
            .collect(),
        "cor-ring-small" => ctx
            .ring_profiles
            .iter()
            .map(|p| {
                let subject = &p.name;
                match (p.baer.holds_bool(), p.right_rickart.holds_bool()) {
                    (Some(b), Some(r)) => {
                        InstanceResult::check(subject, b == r, format!("baer={b}, right_rickart={r}"))
                    }
                    _ => InstanceResult::na(subject, "ring outside caps"),
                }
            })
            .collect(),
        other => vec![InstanceResult::na(other, "unknown theorem id")],
    }
}

fn report_outcome(subject: &str, outcome: ReportOutcome, detail: String) -> InstanceResult {
    match outcome {
        ReportOutcome::Consistent => InstanceResult::consistent(subject, detail),
        ReportOutcome::Violation => InstanceResult::violation(subject, detail),
        ReportOutcome::NotApplicable => InstanceResult::na(subject, "not quasi-injective"),
        ReportOutcome::Unsupported => InstanceResult::na(subject, "outside caps"),
    }
}

fn prop_2_2(p: &ModuleProfile, caps: &Caps) -> InstanceResult {
    let subject = &p.name;
    let Some(lhs) = p.rickart.holds_bool() else {
        return InstanceResult::na(subject, "module outside caps");
    };
    let m = &p.module;
    let Ok(subs) = submodules(m, caps) else {
        return InstanceResult::na(subject, "submodule lattice outside caps");
    };
    let mut realized: Vec<(ModuleRef, Vec<Submodule>)> = Vec::new();
    for s in &subs {
        if is_direct_summand_with(m, s, &subs).holds() {
            let Ok((sub_mod, _)) = submodule_as_module(m, s, caps) else {
                return InstanceResult::na(subject, "summand realization outside caps");
            };
            let Ok(sub_lattice) = submodules(&sub_mod, caps) else {
                return InstanceResult::na(subject, "summand lattice outside caps");
            };
            realized.push((sub_mod, sub_lattice));
        }
    }
    let mut rhs = true;
    let mut failure = String::new();
    'outer: for (a, a_subs) in &realized {
        for (b, _) in &realized {
            let Ok(homs) = hom_set(a, b, caps) else {
                return InstanceResult::na(subject, "hom set outside caps");
            };
            for f in homs {
                let kernel = f.kernel();
                if !is_direct_summand_with(a, &kernel, a_subs).holds() {
                    rhs = false;
                    failure = format!(
                        "map between summands of orders {} and {} has non-summand kernel",
                        a.size(),
                        b.size()
                    );
                    break 'outer;
                }
            }
        }
    }
    InstanceResult::check(
        subject,
        lhs == rhs,
        if failure.is_empty() {
            format!("rickart={lhs}; {} summands, all kernels split", realized.len())
        } else {
            format!("rickart={lhs}; {failure}")
        },
    )
}

fn thm_2_3(p: &ModuleProfile, caps: &Caps) -> InstanceResult {
    let subject = &p.name;
    match p.rickart.holds_bool() {
        Some(true) => {}
        Some(false) => return InstanceResult::na(subject, "M not rickart"),
        None => return InstanceResult::na(subject, "module outside caps"),
    }
    let m = &p.module;
    let Ok(subs) = submodules(m, caps) else {
        return InstanceResult::na(subject, "submodule lattice outside caps");
    };
    let mut checked = 0;
    for s in &subs {
        if !is_direct_summand_with(m, s, &subs).holds() {
            continue;
        }
        let Ok((sub_mod, _)) = submodule_as_module(m, s, caps) else {
            return InstanceResult::na(subject, "summand realization outside caps");
        };
        let verdict = decide_module_property(&sub_mod, ModuleProperty::Rickart, caps);
        match verdict.holds_bool() {
            Some(true) => checked += 1,
            Some(false) => {
                return InstanceResult::violation(
                    subject,
                    format!("summand of order {} is not rickart", sub_mod.size()),
                )
            }
            None => return InstanceResult::na(subject, "summand outside caps"),
        }
    }
    InstanceResult::consistent(subject, format!("{checked} summands verified rickart"))
}

fn ex_2_4(ctx: &SuiteContext) -> Vec<InstanceResult> {
    let Some(m) = ctx.corpus.zmodule("z_plus_z2") else {
        return Vec::new();
    };
    let subject = "z_plus_z2";
    let verdict = match zrickart_check(m, ctx.bound, ctx.caps) {
        Ok(v) => v,
        Err(e) => return vec![InstanceResult::na(subject, format!("engine error: {e}"))],
    };
    let ZRickartVerdict::Fails { witness } = verdict else {
        return vec![InstanceResult::violation(
            subject,
            "expected a failing endomorphism witness",
        )];
    };
    let expected_kernel = FgZModule::new(1, vec![2]).expect("Z (+) Z_2");
    if witness.kernel != expected_kernel {
        return vec![InstanceResult::violation(
            subject,
            format!("witness kernel {} instead of Z (+) Z_2", witness.kernel),
        )];
    }
    // the classical non-split inclusion 2Z -> Z, checked independently
    let two_z = ZModHom::new(
        FgZModule::free(1),
        FgZModule::free(1),
        IntMat::from_rows(vec![vec![2]]).expect("1x1"),
    )
    .expect("doubling is a valid map");
    let split = match zsummand_test(&two_z) {
        Ok(v) => v.holds(),
        Err(e) => return vec![InstanceResult::na(subject, format!("engine error: {e}"))],
    };
    vec![InstanceResult::check(
        subject,
        !split,
        "witness kernel is Z (+) Z_2 embedded as 2Z (+) Z_2; 2Z does not split off Z",
    )]
}

fn ex_z4_klr(ctx: &SuiteContext) -> Vec<InstanceResult> {
    let Some(p) = ctx.module_profiles.iter().find(|p| p.name == "z4_over_z4") else {
        return Vec::new();
    };
    let subject = &p.name;
    match (p.k_local_retractable.holds_bool(), p.rickart.holds_bool()) {
        (Some(klr), Some(r)) => vec![InstanceResult::check(
            subject,
            klr && !r,
            format!("k_local_retractable={klr}, rickart={r}"),
        )],
        _ => vec![InstanceResult::na(subject, "outside caps")],
    }
}

fn sum_pairs(ctx: &SuiteContext, corollary: bool) -> Vec<InstanceResult> {
    ctx.corpus
        .sum_pairs
        .iter()
        .map(|(a, b)| {
            let subject = format!("{a} (+) {b}");
            let (Some(m1), Some(m2)) = (ctx.corpus.module(a), ctx.corpus.module(b)) else {
                return InstanceResult::na(&subject, "pair references unknown modules");
            };
            let rep = match check_direct_sum_theorem(m1, m2, ctx.caps) {
                Ok(r) => r,
                Err(e) => return InstanceResult::na(&subject, format!("outside caps: {e}")),
            };
            if corollary {
                // annihilator condition route
                if !rep.corollary_annihilators_sum_to_ring.holds {
                    return InstanceResult::na(&subject, "annihilator condition fails");
                }
                if !rep.corollary_implies_split_consistent {
                    return InstanceResult::violation(
                        &subject,
                        "annihilator condition holds but a submodule fails to split",
                    );
                }
                match rep.hypotheses_met {
                    Some(true) => InstanceResult::check(
                        &subject,
                        rep.conclusion.status == VerdictStatus::Holds,
                        "all corollary hypotheses met",
                    ),
                    Some(false) => InstanceResult::consistent(
                        &subject,
                        "annihilator condition holds; factor hypotheses not met",
                    ),
                    None => InstanceResult::na(&subject, "a hypothesis is outside caps"),
                }
            } else {
                match rep.hypotheses_met {
                    Some(true) => {
                        if rep.theorem_violation {
                            InstanceResult::violation(&subject, "hypotheses met but sum not rickart")
                        } else {
                            InstanceResult::consistent(&subject, "hypotheses met, sum rickart")
                        }
                    }
                    Some(false) => InstanceResult::na(&subject, "hypotheses not met"),
                    None => InstanceResult::na(&subject, "a hypothesis is outside caps"),
                }
            }
        })
        .collect()
}

fn chart(p: &RingProfile) -> InstanceResult {
    let subject = &p.name;
    let bits = [
        ("vn_regular", p.vn_regular.holds_bool()),
        ("right_semihereditary", p.right_semihereditary.holds_bool()),
        ("right_rickart", p.right_rickart.holds_bool()),
        ("right_nonsingular", p.right_nonsingular.holds_bool()),
        ("baer", p.baer.holds_bool()),
    ];
    if bits.iter().any(|(_, b)| b.is_none()) {
        return InstanceResult::na(subject, "a property is outside caps");
    }
    let get = |name: &str| bits.iter().find(|(n, _)| *n == name).unwrap().1.unwrap();
    let implications = [
        ("vn_regular", "right_semihereditary"),
        ("right_semihereditary", "right_rickart"),
        ("right_rickart", "right_nonsingular"),
        ("baer", "right_rickart"),
    ];
    for (from, to) in implications {
        if get(from) && !get(to) {
            return InstanceResult::violation(subject, format!("{from} holds but {to} fails"));
        }
    }
    let detail = bits
        .iter()
        .map(|(n, b)| format!("{n}={}", b.unwrap()))
        .collect::<Vec<_>>()
        .join(", ");
    InstanceResult::consistent(subject, detail)
}

fn lemma_3_10(p: &RingProfile, caps: &Caps) -> InstanceResult {
    let subject = &p.name;
    let Some(nonsingular) = p.right_nonsingular.holds_bool() else {
        return InstanceResult::na(subject, "nonsingularity outside caps");
    };
    let Ok(reg) = regular_module(&p.ring, caps) else {
        return InstanceResult::na(subject, "regular module outside caps");
    };
    let m = &reg.module;
    let Ok(subs) = submodules(m, caps) else {
        return InstanceResult::na(subject, "submodule lattice outside caps");
    };
    let mut all_closed = true;
    let mut offender = String::new();
    for (xs, ann) in annihilator_intersection_closure(&p.ring) {
        let members: Vec<usize> = ann.iter().map(|a| reg.to_module[a]).collect();
        let sub = generated_submodule(m, &members);
        debug_assert_eq!(sub.members.len(), ann.len());
        if !is_closed_with(m, &sub, &subs) {
            all_closed = false;
            offender = format!("r({xs:?}) = {:?} is not closed", ann.to_vec());
            break;
        }
    }
    InstanceResult::check(
        subject,
        nonsingular == all_closed,
        if offender.is_empty() {
            format!("right_nonsingular={nonsingular}; all subset annihilators closed")
        } else {
            format!("right_nonsingular={nonsingular}; {offender}")
        },
    )
}

fn cor_self_inj(p: &RingProfile, caps: &Caps) -> InstanceResult {
    let subject = &p.name;
    let Ok(reg) = regular_module(&p.ring, caps) else {
        return InstanceResult::na(subject, "regular module outside caps");
    };
    let qi = decide_module_property(&reg.module, ModuleProperty::QuasiInjective, caps);
    match qi.holds_bool() {
        Some(true) => {}
        Some(false) => return InstanceResult::na(subject, "R_R not quasi-injective"),
        None => return InstanceResult::na(subject, "quasi-injectivity outside caps"),
    }
    let bits = [
        ("baer", p.baer.holds_bool()),
        ("vn_regular", p.vn_regular.holds_bool()),
        ("right_semihereditary", p.right_semihereditary.holds_bool()),
        ("right_rickart", p.right_rickart.holds_bool()),
        ("right_nonsingular", p.right_nonsingular.holds_bool()),
    ];
    if bits.iter().any(|(_, b)| b.is_none()) {
        return InstanceResult::na(subject, "a property is outside caps");
    }
    let first = bits[0].1;
    let all_equal = bits.iter().all(|(_, b)| *b == first);
    let detail = bits
        .iter()
        .map(|(n, b)| format!("{n}={}", b.unwrap()))
        .collect::<Vec<_>>()
        .join(", ");
    InstanceResult::check(subject, all_equal, detail)
}
