use serde::Serialize;

use crate::caps::{CapExceeded, Caps};
use crate::elemset::ElemSet;
use crate::finring::ideal::{idempotents, right_annihilator, right_closure, right_ideals};
use crate::finring::ring::{FiniteRing, RingError};
use crate::verdict::VerdictStatus;

/// Ring-level property tags.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RingProperty {
    /// Every `a` has an `x` with `a*x*a = a`.
    VnRegular,
    /// The right annihilator of every element is `eR` for an idempotent `e`.
    RightRickart,
    /// The right annihilator of every subset is `eR` for an idempotent `e`.
    Baer,
    /// No nonzero element has an essential right annihilator.
    RightNonsingular,
    /// Every right ideal is projective (finite rings: all are finitely
    /// generated), decided by splitting the free cover.
    RightSemihereditary,
    /// No nonzero nilpotents.
    Reduced,
    /// No zero divisors (and `1 != 0`).
    Domain,
}

impl RingProperty {
    pub const ALL: [RingProperty; 7] = [
        RingProperty::VnRegular,
        RingProperty::RightRickart,
        RingProperty::Baer,
        RingProperty::RightNonsingular,
        RingProperty::RightSemihereditary,
        RingProperty::Reduced,
        RingProperty::Domain,
    ];

    pub fn tag(&self) -> &'static str {
        match self {
            RingProperty::VnRegular => "vn_regular",
            RingProperty::RightRickart => "right_rickart",
            RingProperty::Baer => "baer",
            RingProperty::RightNonsingular => "right_nonsingular",
            RingProperty::RightSemihereditary => "right_semihereditary",
            RingProperty::Reduced => "reduced",
            RingProperty::Domain => "domain",
        }
    }

    pub fn from_tag(tag: &str) -> Option<RingProperty> {
        RingProperty::ALL.iter().copied().find(|p| p.tag() == tag)
    }
}

impl std::fmt::Display for RingProperty {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.tag())
    }
}

/// Witness payloads. Failure witnesses re-check via
/// [`recheck_ring_witness`]; `*Certificate` variants document HOLDS
/// verdicts where the search produces a useful certificate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RingWitness {
    NotVnRegular {
        element: usize,
    },
    /// For each ring element `a`, the idempotent `e` with `r(a) = eR`.
    RickartCertificate {
        assignments: Vec<(usize, usize)>,
    },
    NotRightRickart {
        element: usize,
        annihilator: Vec<usize>,
    },
    /// For every member of the annihilator lattice, its generating set
    /// and the matching idempotent.
    BaerCertificate {
        assignments: Vec<BaerAssignment>,
    },
    NotBaer {
        annihilated_set: Vec<usize>,
        annihilator: Vec<usize>,
    },
    /// A nonzero element whose right annihilator is essential.
    Singular {
        element: usize,
        annihilator: Vec<usize>,
    },
    /// A right ideal whose free cover admits no splitting.
    NotSemihereditary {
        ideal_generators: Vec<usize>,
        ideal: Vec<usize>,
    },
    NotReduced {
        element: usize,
    },
    NotDomain {
        left: usize,
        right: usize,
    },
    OneEqualsZero,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BaerAssignment {
    pub annihilated_set: Vec<usize>,
    pub annihilator: Vec<usize>,
    pub idempotent: usize,
}

/// Whether a decider stops at the first counterexample or collects all
/// of them.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WitnessMode {
    First,
    All,
}

#[derive(Debug, Clone, Serialize)]
pub struct RingVerdict {
    pub property: RingProperty,
    pub status: VerdictStatus,
    /// First entry is the canonical (lexicographically least) witness.
    pub witnesses: Vec<RingWitness>,
    pub unsupported: Option<CapExceeded>,
}

impl RingVerdict {
    fn holds(property: RingProperty, witnesses: Vec<RingWitness>) -> Self {
        RingVerdict {
            property,
            status: VerdictStatus::Holds,
            witnesses,
            unsupported: None,
        }
    }
    fn fails(property: RingProperty, witnesses: Vec<RingWitness>) -> Self {
        RingVerdict {
            property,
            status: VerdictStatus::Fails,
            witnesses,
            unsupported: None,
        }
    }
    fn unsupported(property: RingProperty, cap: CapExceeded) -> Self {
        RingVerdict {
            property,
            status: VerdictStatus::Unsupported,
            witnesses: Vec::new(),
            unsupported: Some(cap),
        }
    }

    pub fn holds_bool(&self) -> Option<bool> {
        self.status.decided()
    }
}

/// `I` is essential as a right ideal: it meets every nonzero principal
/// right ideal nontrivially.
pub fn is_essential_right_ideal(ring: &FiniteRing, members: &ElemSet) -> bool {
    ring.elements().all(|b| {
        b == ring.zero()
            || ring
                .elements()
                .any(|s| ring.mul(b, s) != ring.zero() && members.contains(ring.mul(b, s)))
    })
}

/// The closure of `{ r(a) : a in R }` under intersection, each member
/// tagged with the annihilated set that produced it. These are exactly
/// the right annihilators `r(X)` of arbitrary subsets `X`.
pub fn annihilator_intersection_closure(ring: &FiniteRing) -> Vec<(Vec<usize>, ElemSet)> {
    let mut entries: Vec<(Vec<usize>, ElemSet)> = Vec::new();
    for a in ring.elements() {
        let ann = right_annihilator(ring, &[a]).members;
        if !entries.iter().any(|(_, s)| *s == ann) {
            entries.push((vec![a], ann));
        }
    }
    let mut i = 1;
    while i < entries.len() {
        for j in 0..i {
            let meet = entries[i].1.intersection(&entries[j].1);
            if !entries.iter().any(|(_, s)| *s == meet) {
                let mut xs = entries[i].0.clone();
                xs.extend_from_slice(&entries[j].0);
                xs.sort_unstable();
                xs.dedup();
                entries.push((xs, meet));
            }
        }
        i += 1;
    }
    entries
}

/// Searches for a right inverse of the canonical surjection
/// `R^g -> I`, `(r_i) -> sum gens_i * r_i`.
fn free_cover_splits(
    ring: &FiniteRing,
    gens: &[usize],
    caps: &Caps,
) -> Result<bool, CapExceeded> {
    let g = gens.len();
    if g == 0 {
        return Ok(true); // the zero ideal is a summand of R^0
    }
    let n = ring.order();
    let space = n.checked_pow(g as u32).filter(|&s| s <= caps.lift_space);
    let Some(space) = space else {
        return Err(CapExceeded {
            cap: "lift_space",
            limit: caps.lift_space,
            actual: usize::MAX,
        });
    };
    let decode = |x: usize| -> Vec<usize> {
        let mut t = Vec::with_capacity(g);
        let mut x = x;
        for _ in 0..g {
            t.push(x % n);
            x /= n;
        }
        t
    };
    let mut kernel: Vec<Vec<usize>> = Vec::new();
    let mut lifts: Vec<Vec<Vec<usize>>> = vec![Vec::new(); g];
    for x in 0..space {
        let t = decode(x);
        let mut v = ring.zero();
        for (i, &ti) in t.iter().enumerate() {
            v = ring.add(v, ring.mul(gens[i], ti));
        }
        if v == ring.zero() {
            kernel.push(t.clone());
        }
        for (i, &gi) in gens.iter().enumerate() {
            if v == gi {
                lifts[i].push(t.clone());
            }
        }
    }
    // choose u_i in lifts[i] with sum u_i * k_i = 0 for every kernel tuple
    fn rec(
        ring: &FiniteRing,
        lifts: &[Vec<Vec<usize>>],
        kernel: &[Vec<usize>],
        chosen: &mut Vec<usize>,
        level: usize,
    ) -> bool {
        if level == lifts.len() {
            return kernel.iter().all(|k| {
                (0..lifts.len()).all(|c| {
                    // coordinate c of sum u_i * k_i
                    let mut acc = ring.zero();
                    for (i, &ui) in chosen.iter().enumerate() {
                        acc = ring.add(acc, ring.mul(lifts[i][ui][c], k[i]));
                    }
                    acc == ring.zero()
                })
            });
        }
        for cand in 0..lifts[level].len() {
            chosen.push(cand);
            if rec(ring, lifts, kernel, chosen, level + 1) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    let mut chosen = Vec::with_capacity(g);
    Ok(rec(ring, &lifts, &kernel, &mut chosen, 0))
}

/// Decides a ring property, short-circuiting at the first witness.
pub fn decide_ring_property(ring: &FiniteRing, p: RingProperty, caps: &Caps) -> RingVerdict {
    decide_ring_property_mode(ring, p, caps, WitnessMode::First)
}

/// Decides a ring property with control over witness collection.
pub fn decide_ring_property_mode(
    ring: &FiniteRing,
    p: RingProperty,
    caps: &Caps,
    mode: WitnessMode,
) -> RingVerdict {
    if ring.order() > caps.ring_order_decide {
        return RingVerdict::unsupported(
            p,
            CapExceeded {
                cap: "ring_order_decide",
                limit: caps.ring_order_decide,
                actual: ring.order(),
            },
        );
    }
    let zero = ring.zero();
    let mut fails: Vec<RingWitness> = Vec::new();
    macro_rules! report {
        ($w:expr) => {
            fails.push($w);
            if matches!(mode, WitnessMode::First) {
                return RingVerdict::fails(p, fails);
            }
        };
    }
    match p {
        RingProperty::VnRegular => {
            for a in ring.elements() {
                if !ring
                    .elements()
                    .any(|x| ring.mul(ring.mul(a, x), a) == a)
                {
                    report!(RingWitness::NotVnRegular { element: a });
                }
            }
        }
        RingProperty::RightRickart => {
            let idem_ideals = idempotent_ideals(ring);
            let mut assignments = Vec::new();
            for a in ring.elements() {
                let ann = right_annihilator(ring, &[a]).members;
                match idem_ideals.iter().find(|(_, s)| *s == ann) {
                    Some(&(e, _)) => assignments.push((a, e)),
                    None => {
                        report!(RingWitness::NotRightRickart {
                            element: a,
                            annihilator: ann.to_vec(),
                        });
                    }
                }
            }
            if fails.is_empty() {
                return RingVerdict::holds(p, vec![RingWitness::RickartCertificate { assignments }]);
            }
        }
        RingProperty::Baer => {
            let idem_ideals = idempotent_ideals(ring);
            let mut assignments = Vec::new();
            for (xs, ann) in annihilator_intersection_closure(ring) {
                match idem_ideals.iter().find(|(_, s)| *s == ann) {
                    Some(&(e, _)) => assignments.push(BaerAssignment {
                        annihilated_set: xs,
                        annihilator: ann.to_vec(),
                        idempotent: e,
                    }),
                    None => {
                        report!(RingWitness::NotBaer {
                            annihilated_set: xs,
                            annihilator: ann.to_vec(),
                        });
                    }
                }
            }
            if fails.is_empty() {
                return RingVerdict::holds(p, vec![RingWitness::BaerCertificate { assignments }]);
            }
        }
        RingProperty::RightNonsingular => {
            for a in ring.elements() {
                if a == zero {
                    continue;
                }
                let ann = right_annihilator(ring, &[a]).members;
                if is_essential_right_ideal(ring, &ann) {
                    report!(RingWitness::Singular {
                        element: a,
                        annihilator: ann.to_vec(),
                    });
                }
            }
        }
        RingProperty::RightSemihereditary => {
            let ideals = match right_ideals(ring, caps) {
                Ok(i) => i,
                Err(RingError::Capacity(c)) => return RingVerdict::unsupported(p, c),
                Err(e) => panic!("unexpected enumeration failure: {e}"),
            };
            for ideal in ideals {
                match free_cover_splits(ring, &ideal.generators, caps) {
                    Ok(true) => {}
                    Ok(false) => {
                        report!(RingWitness::NotSemihereditary {
                            ideal_generators: ideal.generators.clone(),
                            ideal: ideal.members.to_vec(),
                        });
                    }
                    Err(c) => return RingVerdict::unsupported(p, c),
                }
            }
        }
        RingProperty::Reduced => {
            for a in ring.elements() {
                if a != zero && ring.mul(a, a) == zero {
                    report!(RingWitness::NotReduced { element: a });
                }
            }
        }
        RingProperty::Domain => {
            if ring.one() == zero {
                report!(RingWitness::OneEqualsZero);
            }
            for a in ring.elements() {
                if a == zero {
                    continue;
                }
                for b in ring.elements() {
                    if b != zero && ring.mul(a, b) == zero {
                        report!(RingWitness::NotDomain { left: a, right: b });
                    }
                }
            }
        }
    }
    if fails.is_empty() {
        RingVerdict::holds(p, Vec::new())
    } else {
        RingVerdict::fails(p, fails)
    }
}

fn idempotent_ideals(ring: &FiniteRing) -> Vec<(usize, ElemSet)> {
    idempotents(ring)
        .into_iter()
        .map(|e| {
            let set = ElemSet::from_iter(ring.order(), ring.elements().map(|r| ring.mul(e, r)));
            (e, set)
        })
        .collect()
}

/// Re-validates a witness by unfolding the defining condition with
/// fresh computations (used by tests and by the verification suite).
pub fn recheck_ring_witness(ring: &FiniteRing, witness: &RingWitness, caps: &Caps) -> bool {
    let zero = ring.zero();
    let principal = |e: usize| -> ElemSet {
        ElemSet::from_iter(ring.order(), ring.elements().map(|r| ring.mul(e, r)))
    };
    match witness {
        RingWitness::NotVnRegular { element } => ring
            .elements()
            .all(|x| ring.mul(ring.mul(*element, x), *element) != *element),
        RingWitness::NotRightRickart {
            element,
            annihilator,
        } => {
            let ann = ElemSet::from_iter(
                ring.order(),
                ring.elements().filter(|&r| ring.mul(*element, r) == zero),
            );
            ann.to_vec() == *annihilator
                && idempotents(ring).iter().all(|&e| principal(e) != ann)
        }
        RingWitness::NotBaer {
            annihilated_set,
            annihilator,
        } => {
            let ann = ElemSet::from_iter(
                ring.order(),
                ring.elements()
                    .filter(|&r| annihilated_set.iter().all(|&x| ring.mul(x, r) == zero)),
            );
            ann.to_vec() == *annihilator
                && idempotents(ring).iter().all(|&e| principal(e) != ann)
        }
        RingWitness::Singular {
            element,
            annihilator,
        } => {
            let ann = ElemSet::from_iter(
                ring.order(),
                ring.elements().filter(|&r| ring.mul(*element, r) == zero),
            );
            *element != zero
                && ann.to_vec() == *annihilator
                && is_essential_right_ideal(ring, &ann)
        }
        RingWitness::NotSemihereditary {
            ideal_generators,
            ideal,
        } => {
            let members = right_closure(ring, None, ideal_generators);
            members.to_vec() == *ideal
                && free_cover_splits(ring, ideal_generators, caps) == Ok(false)
        }
        RingWitness::NotReduced { element } => {
            *element != zero && ring.mul(*element, *element) == zero
        }
        RingWitness::NotDomain { left, right } => {
            *left != zero && *right != zero && ring.mul(*left, *right) == zero
        }
        RingWitness::OneEqualsZero => ring.one() == zero,
        RingWitness::RickartCertificate { assignments } => {
            assignments.len() == ring.order()
                && assignments.iter().all(|&(a, e)| {
                    ring.is_idempotent(e) && principal(e) == right_annihilator(ring, &[a]).members
                })
        }
        RingWitness::BaerCertificate { assignments } => assignments.iter().all(|b| {
            ring.is_idempotent(b.idempotent)
                && principal(b.idempotent) == right_annihilator(ring, &b.annihilated_set).members
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finring::ring::{build_ring, RingSpec};
    use crate::finring::RingRef;

    fn caps() -> Caps {
        Caps::default()
    }
    fn zmod(n: u32) -> RingRef {
        build_ring(&RingSpec::Zmod(n), &caps()).unwrap()
    }
    fn decide(r: &FiniteRing, p: RingProperty) -> RingVerdict {
        decide_ring_property(r, p, &caps())
    }

    #[test]
    fn z6_is_right_rickart_with_expected_certificate() {
        let v = decide(&zmod(6), RingProperty::RightRickart);
        assert_eq!(v.status, VerdictStatus::Holds);
        let Some(RingWitness::RickartCertificate { assignments }) = v.witnesses.first() else {
            panic!("expected certificate")
        };
        assert!(assignments.contains(&(2, 3)));
        assert!(assignments.contains(&(3, 4)));
    }

    #[test]
    fn z4_fails_right_rickart_with_witness_two() {
        let v = decide(&zmod(4), RingProperty::RightRickart);
        assert_eq!(v.status, VerdictStatus::Fails);
        assert_eq!(
            v.witnesses[0],
            RingWitness::NotRightRickart {
                element: 2,
                annihilator: vec![0, 2],
            }
        );
        assert!(recheck_ring_witness(&zmod(4), &v.witnesses[0], &caps()));
    }

    #[test]
    fn z4_is_singular_at_two() {
        let v = decide(&zmod(4), RingProperty::RightNonsingular);
        assert_eq!(v.status, VerdictStatus::Fails);
        assert_eq!(
            v.witnesses[0],
            RingWitness::Singular {
                element: 2,
                annihilator: vec![0, 2],
            }
        );
    }

    #[test]
    fn product_of_four_z2_is_baer() {
        let r = build_ring(
            &RingSpec::Product(vec![
                RingSpec::Zmod(2),
                RingSpec::Zmod(2),
                RingSpec::Zmod(2),
                RingSpec::Zmod(2),
            ]),
            &caps(),
        )
        .unwrap();
        let v = decide(&r, RingProperty::Baer);
        assert_eq!(v.status, VerdictStatus::Holds);
    }

    #[test]
    fn z12_is_not_vn_regular_with_witness_two() {
        let v = decide(&zmod(12), RingProperty::VnRegular);
        assert_eq!(v.status, VerdictStatus::Fails);
        assert_eq!(v.witnesses[0], RingWitness::NotVnRegular { element: 2 });
        assert!(recheck_ring_witness(&zmod(12), &v.witnesses[0], &caps()));
    }

    #[test]
    fn semihereditary_small_cases() {
        assert_eq!(
            decide(&zmod(6), RingProperty::RightSemihereditary).status,
            VerdictStatus::Holds
        );
        let v = decide(&zmod(4), RingProperty::RightSemihereditary);
        assert_eq!(v.status, VerdictStatus::Fails);
        assert!(recheck_ring_witness(&zmod(4), &v.witnesses[0], &caps()));
    }

    #[test]
    fn semihereditary_handles_two_generated_ideals() {
        // Z_4[x]/(x^2) has the non-principal ideal (2, x); not
        // semihereditary, and the decider must survive g = 2.
        let r = build_ring(
            &RingSpec::PolyQuotient {
                base: Box::new(RingSpec::Zmod(4)),
                coeffs: vec![0, 0, 1],
            },
            &caps(),
        )
        .unwrap();
        let v = decide(&r, RingProperty::RightSemihereditary);
        assert_eq!(v.status, VerdictStatus::Fails);
    }

    #[test]
    fn reduced_and_domain() {
        assert_eq!(decide(&zmod(6), RingProperty::Reduced).status, VerdictStatus::Holds);
        let v = decide(&zmod(4), RingProperty::Reduced);
        assert_eq!(v.witnesses[0], RingWitness::NotReduced { element: 2 });
        assert_eq!(decide(&zmod(5), RingProperty::Domain).status, VerdictStatus::Holds);
        let v = decide(&zmod(6), RingProperty::Domain);
        assert_eq!(v.witnesses[0], RingWitness::NotDomain { left: 2, right: 3 });
        let v = decide(&zmod(1), RingProperty::Domain);
        assert_eq!(v.witnesses[0], RingWitness::OneEqualsZero);
    }

    #[test]
    fn all_witnesses_mode_collects_every_counterexample() {
        let v = decide_ring_property_mode(
            &zmod(4),
            RingProperty::RightRickart,
            &caps(),
            WitnessMode::All,
        );
        assert_eq!(v.witnesses.len(), 1); // only a = 2 fails in Z_4
        let v = decide_ring_property_mode(
            &zmod(12),
            RingProperty::VnRegular,
            &caps(),
            WitnessMode::All,
        );
        let elems: Vec<usize> = v
            .witnesses
            .iter()
            .map(|w| match w {
                RingWitness::NotVnRegular { element } => *element,
                _ => panic!(),
            })
            .collect();
        assert_eq!(elems, vec![2, 6, 10]);
    }

    #[test]
    fn oversized_ring_is_unsupported() {
        let r = build_ring(&RingSpec::Zmod(100), &caps()).unwrap();
        let v = decide(&r, RingProperty::VnRegular);
        assert_eq!(v.status, VerdictStatus::Unsupported);
        assert_eq!(v.unsupported.as_ref().unwrap().cap, "ring_order_decide");
    }

    #[test]
    fn zmod_vn_regular_iff_squarefree() {
        // oracle: trial-division squarefreeness
        fn squarefree(mut n: u32) -> bool {
            let mut d = 2;
            while d * d <= n {
                if n % (d * d) == 0 {
                    return false;
                }
                while n % d == 0 {
                    n /= d;
                }
                d += 1;
            }
            true
        }
        for n in 1..=30u32 {
            let verdict = decide(&zmod(n), RingProperty::VnRegular);
            assert_eq!(
                verdict.status == VerdictStatus::Holds,
                squarefree(n),
                "zmod({n})"
            );
        }
    }
}
