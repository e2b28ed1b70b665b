use serde::Serialize;

use crate::caps::{CapExceeded, Caps};
use crate::elemset::ElemSet;
use crate::finmod::{
    hom_set, is_direct_summand_with, is_essential_in, is_summand_by_idempotent,
    submodule_as_module, submodules, Homomorphism, ModuleError, ModuleRef, Submodule,
};
use crate::finring::WitnessMode;
use crate::verdict::VerdictStatus;

/// Module property tags.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ModuleProperty {
    /// Every endomorphism kernel is a direct summand.
    Rickart,
    /// Every intersection of endomorphism kernels is a direct summand
    /// (the annihilators of left ideals of `End(M)` are exactly those
    /// intersections).
    Baer,
    /// An endomorphism with essential kernel is zero.
    KNonsingular,
    /// Nonzero homomorphisms into every nonzero submodule exist.
    Retractable,
    /// Every element of every kernel is reachable by a map from M into
    /// that kernel.
    KLocalRetractable,
    /// Homomorphisms from submodules into M extend to endomorphisms.
    QuasiInjective,
    /// Every submodule is essential in a direct summand.
    Extending,
    /// For every submodule N and x outside N some endomorphism kills N
    /// but not x.
    SelfCogenerator,
    /// Intersections of direct summands are direct summands.
    Sip,
    /// Self-relative Rickart; same as `Rickart`, provided for symmetry
    /// with [`is_relatively_rickart`].
    RelativeRickart,
}

impl ModuleProperty {
    pub const ALL: [ModuleProperty; 9] = [
        ModuleProperty::Rickart,
        ModuleProperty::Baer,
        ModuleProperty::KNonsingular,
        ModuleProperty::Retractable,
        ModuleProperty::KLocalRetractable,
        ModuleProperty::QuasiInjective,
        ModuleProperty::Extending,
        ModuleProperty::SelfCogenerator,
        ModuleProperty::Sip,
    ];

    pub fn tag(&self) -> &'static str {
        match self {
            ModuleProperty::Rickart => "rickart",
            ModuleProperty::Baer => "baer",
            ModuleProperty::KNonsingular => "k_nonsingular",
            ModuleProperty::Retractable => "retractable",
            ModuleProperty::KLocalRetractable => "k_local_retractable",
            ModuleProperty::QuasiInjective => "quasi_injective",
            ModuleProperty::Extending => "extending",
            ModuleProperty::SelfCogenerator => "self_cogenerator",
            ModuleProperty::Sip => "sip",
            ModuleProperty::RelativeRickart => "relative_rickart",
        }
    }

    pub fn from_tag(tag: &str) -> Option<ModuleProperty> {
        ModuleProperty::ALL
            .iter()
            .copied()
            .chain([ModuleProperty::RelativeRickart])
            .find(|p| p.tag() == tag)
    }
}

impl std::fmt::Display for ModuleProperty {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.tag())
    }
}

/// Failure witnesses. Homomorphisms are serialized as generator-image
/// arrays over the canonical generators of their source.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ModuleWitness {
    /// An endomorphism (or for relative Rickart a homomorphism into the
    /// partner module) whose kernel is not a direct summand.
    KernelNotSummand {
        hom_images: Vec<usize>,
        kernel: Vec<usize>,
    },
    /// Kernels whose intersection is not a direct summand.
    KernelMeetNotSummand {
        hom_images: Vec<Vec<usize>>,
        intersection: Vec<usize>,
    },
    /// A nonzero endomorphism with essential kernel.
    EssentialKernel {
        hom_images: Vec<usize>,
        kernel: Vec<usize>,
    },
    /// A nonzero submodule admitting only the zero map from M.
    Unretractable { submodule: Vec<usize> },
    /// A kernel element not reachable by any map of M into the kernel.
    LocalRetractGap {
        hom_images: Vec<usize>,
        element: usize,
    },
    /// A homomorphism from a submodule (realized on the listed ambient
    /// basis) with no extension to an endomorphism.
    NotExtendable {
        submodule: Vec<usize>,
        basis: Vec<usize>,
        hom_images: Vec<usize>,
    },
    /// A submodule not essential in any direct summand.
    NotEssentialInAnySummand { submodule: Vec<usize> },
    /// A submodule N and element x outside it that no endomorphism
    /// separates.
    CogeneratorGap { submodule: Vec<usize>, element: usize },
    /// Two summands with a non-summand intersection.
    SipFailure {
        first: Vec<usize>,
        second: Vec<usize>,
        intersection: Vec<usize>,
    },
}

#[derive(Debug, Clone, Serialize)]
pub struct ModuleVerdict {
    pub property: ModuleProperty,
    pub status: VerdictStatus,
    /// First entry is the canonical (first-in-deterministic-order) witness.
    pub witnesses: Vec<ModuleWitness>,
    pub unsupported: Option<CapExceeded>,
}

impl ModuleVerdict {
    fn holds(property: ModuleProperty) -> Self {
        ModuleVerdict {
            property,
            status: VerdictStatus::Holds,
            witnesses: Vec::new(),
            unsupported: None,
        }
    }
    fn fails(property: ModuleProperty, witnesses: Vec<ModuleWitness>) -> Self {
        ModuleVerdict {
            property,
            status: VerdictStatus::Fails,
            witnesses,
            unsupported: None,
        }
    }
    fn unsupported(property: ModuleProperty, cap: CapExceeded) -> Self {
        ModuleVerdict {
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

fn capacity_of(e: ModuleError, property: ModuleProperty) -> ModuleVerdict {
    match e {
        ModuleError::Capacity(c) => ModuleVerdict::unsupported(property, c),
        other => panic!("unexpected failure while deciding {property}: {other}"),
    }
}

/// Decides a module property, short-circuiting at the first witness.
pub fn decide_module_property(m: &ModuleRef, p: ModuleProperty, caps: &Caps) -> ModuleVerdict {
    decide_module_property_mode(m, p, caps, WitnessMode::First)
}

/// Decides a module property with control over witness collection.
pub fn decide_module_property_mode(
    m: &ModuleRef,
    p: ModuleProperty,
    caps: &Caps,
    mode: WitnessMode,
) -> ModuleVerdict {
    if m.size() > caps.module_order {
        return ModuleVerdict::unsupported(
            p,
            CapExceeded {
                cap: "module_order",
                limit: caps.module_order,
                actual: m.size(),
            },
        );
    }
    match p {
        ModuleProperty::Rickart => rickart(m, caps, mode),
        ModuleProperty::Baer => baer(m, caps, mode),
        ModuleProperty::KNonsingular => k_nonsingular(m, caps, mode),
        ModuleProperty::Retractable => retractable(m, caps, mode),
        ModuleProperty::KLocalRetractable => k_local_retractable(m, caps, mode),
        ModuleProperty::QuasiInjective => quasi_injective(m, caps, mode),
        ModuleProperty::Extending => extending(m, caps, mode),
        ModuleProperty::SelfCogenerator => self_cogenerator(m, caps, mode),
        ModuleProperty::Sip => sip(m, caps, mode),
        ModuleProperty::RelativeRickart => {
            let mut v = is_relatively_rickart(m, m, caps, mode);
            v.property = ModuleProperty::RelativeRickart;
            v
        }
    }
}

macro_rules! try_cap {
    ($e:expr, $p:expr) => {
        match $e {
            Ok(v) => v,
            Err(err) => return capacity_of(err, $p),
        }
    };
}

fn finish(p: ModuleProperty, witnesses: Vec<ModuleWitness>) -> ModuleVerdict {
    if witnesses.is_empty() {
        ModuleVerdict::holds(p)
    } else {
        ModuleVerdict::fails(p, witnesses)
    }
}

fn rickart(m: &ModuleRef, caps: &Caps, mode: WitnessMode) -> ModuleVerdict {
    let p = ModuleProperty::Rickart;
    let endos = try_cap!(hom_set(m, m, caps), p);
    let subs = try_cap!(submodules(m, caps), p);
    let mut witnesses = Vec::new();
    for phi in &endos {
        let kernel = phi.kernel();
        if !is_direct_summand_with(m, &kernel, &subs).holds() {
            witnesses.push(ModuleWitness::KernelNotSummand {
                hom_images: phi.images().to_vec(),
                kernel: kernel.members.to_vec(),
            });
            if mode == WitnessMode::First {
                break;
            }
        }
    }
    finish(p, witnesses)
}

fn baer(m: &ModuleRef, caps: &Caps, mode: WitnessMode) -> ModuleVerdict {
    let p = ModuleProperty::Baer;
    let endos = try_cap!(hom_set(m, m, caps), p);
    let subs = try_cap!(submodules(m, caps), p);
    // r_M(I) for a left ideal I = S phi_1 + ... + S phi_n equals the
    // intersection of the kernels of the phi_i, so the intersection
    // closure of single kernels is exactly the set of all r_M(I).
    let mut lattice: Vec<(Vec<usize>, ElemSet)> = Vec::new();
    for (i, phi) in endos.iter().enumerate() {
        let k = phi.kernel().members;
        if !lattice.iter().any(|(_, s)| *s == k) {
            lattice.push((vec![i], k));
        }
    }
    let mut i = 1;
    while i < lattice.len() {
        for j in 0..i {
            let meet = lattice[i].1.intersection(&lattice[j].1);
            if !lattice.iter().any(|(_, s)| *s == meet) {
                let mut phis = lattice[i].0.clone();
                phis.extend_from_slice(&lattice[j].0);
                phis.sort_unstable();
                phis.dedup();
                lattice.push((phis, meet));
            }
        }
        i += 1;
    }
    let mut witnesses = Vec::new();
    for (phis, members) in lattice {
        let sub = crate::finmod::make_submodule(m, members);
        if !is_direct_summand_with(m, &sub, &subs).holds() {
            witnesses.push(ModuleWitness::KernelMeetNotSummand {
                hom_images: phis.iter().map(|&i| endos[i].images().to_vec()).collect(),
                intersection: sub.members.to_vec(),
            });
            if mode == WitnessMode::First {
                break;
            }
        }
    }
    finish(p, witnesses)
}

fn k_nonsingular(m: &ModuleRef, caps: &Caps, mode: WitnessMode) -> ModuleVerdict {
    let p = ModuleProperty::KNonsingular;
    let endos = try_cap!(hom_set(m, m, caps), p);
    let full = ElemSet::full(m.size());
    let mut witnesses = Vec::new();
    for phi in &endos {
        if phi.is_zero() {
            continue;
        }
        let kernel = phi.kernel();
        if is_essential_in(m, &kernel.members, &full) {
            witnesses.push(ModuleWitness::EssentialKernel {
                hom_images: phi.images().to_vec(),
                kernel: kernel.members.to_vec(),
            });
            if mode == WitnessMode::First {
                break;
            }
        }
    }
    finish(p, witnesses)
}

fn retractable(m: &ModuleRef, caps: &Caps, mode: WitnessMode) -> ModuleVerdict {
    let p = ModuleProperty::Retractable;
    let endos = try_cap!(hom_set(m, m, caps), p);
    let subs = try_cap!(submodules(m, caps), p);
    let images: Vec<ElemSet> = endos.iter().map(|e| e.image().members).collect();
    let mut witnesses = Vec::new();
    for n in &subs {
        if n.is_zero() {
            continue;
        }
        let reachable = endos
            .iter()
            .zip(&images)
            .any(|(e, im)| !e.is_zero() && im.is_subset(&n.members));
        if !reachable {
            witnesses.push(ModuleWitness::Unretractable {
                submodule: n.members.to_vec(),
            });
            if mode == WitnessMode::First {
                break;
            }
        }
    }
    finish(p, witnesses)
}

/// The map `psi` witnessing k-local retractability of `element` inside
/// the kernel of `phi`, when one exists: an endomorphism of `m` whose
/// image lies inside `ker(phi)` and contains `element`.
pub fn k_local_retract_witness<'e>(
    phi: &Homomorphism,
    element: usize,
    endos: &'e [Homomorphism],
) -> Option<&'e Homomorphism> {
    let kernel = phi.kernel().members;
    endos.iter().find(|psi| {
        let im = psi.image().members;
        im.is_subset(&kernel) && im.contains(element)
    })
}

fn k_local_retractable(m: &ModuleRef, caps: &Caps, mode: WitnessMode) -> ModuleVerdict {
    let p = ModuleProperty::KLocalRetractable;
    let endos = try_cap!(hom_set(m, m, caps), p);
    let images: Vec<ElemSet> = endos.iter().map(|e| e.image().members).collect();
    let mut witnesses = Vec::new();
    'outer: for phi in &endos {
        let kernel = phi.kernel().members;
        for elt in kernel.iter() {
            if elt == m.zero() {
                continue;
            }
            let reachable = images
                .iter()
                .any(|im| im.is_subset(&kernel) && im.contains(elt));
            if !reachable {
                witnesses.push(ModuleWitness::LocalRetractGap {
                    hom_images: phi.images().to_vec(),
                    element: elt,
                });
                if mode == WitnessMode::First {
                    break 'outer;
                }
            }
        }
    }
    finish(p, witnesses)
}

fn quasi_injective(m: &ModuleRef, caps: &Caps, mode: WitnessMode) -> ModuleVerdict {
    let p = ModuleProperty::QuasiInjective;
    if m.size() > caps.quasi_injective_order {
        return ModuleVerdict::unsupported(
            p,
            CapExceeded {
                cap: "quasi_injective_order",
                limit: caps.quasi_injective_order,
                actual: m.size(),
            },
        );
    }
    let endos = try_cap!(hom_set(m, m, caps), p);
    let subs = try_cap!(submodules(m, caps), p);
    let mut witnesses = Vec::new();
    'outer: for n in &subs {
        let (n_mod, embed) = try_cap!(submodule_as_module(m, n, caps), p);
        // restrictions of endomorphisms to the basis of N
        let restricted: std::collections::HashSet<Vec<usize>> = endos
            .iter()
            .map(|g| embed.images().iter().map(|&b| g.apply(b)).collect())
            .collect();
        for f in try_cap!(hom_set(&n_mod, m, caps), p) {
            if !restricted.contains(f.images()) {
                witnesses.push(ModuleWitness::NotExtendable {
                    submodule: n.members.to_vec(),
                    basis: embed.images().to_vec(),
                    hom_images: f.images().to_vec(),
                });
                if mode == WitnessMode::First {
                    break 'outer;
                }
            }
        }
    }
    finish(p, witnesses)
}

fn extending(m: &ModuleRef, caps: &Caps, mode: WitnessMode) -> ModuleVerdict {
    let p = ModuleProperty::Extending;
    let subs = try_cap!(submodules(m, caps), p);
    let summands: Vec<&Submodule> = subs
        .iter()
        .filter(|s| is_direct_summand_with(m, s, &subs).holds())
        .collect();
    let mut witnesses = Vec::new();
    for n in &subs {
        let ok = summands
            .iter()
            .any(|d| n.members.is_subset(&d.members) && is_essential_in(m, &n.members, &d.members));
        if !ok {
            witnesses.push(ModuleWitness::NotEssentialInAnySummand {
                submodule: n.members.to_vec(),
            });
            if mode == WitnessMode::First {
                break;
            }
        }
    }
    finish(p, witnesses)
}

fn self_cogenerator(m: &ModuleRef, caps: &Caps, mode: WitnessMode) -> ModuleVerdict {
    let p = ModuleProperty::SelfCogenerator;
    let endos = try_cap!(hom_set(m, m, caps), p);
    let subs = try_cap!(submodules(m, caps), p);
    let mut witnesses = Vec::new();
    'outer: for n in &subs {
        let killers: Vec<&Homomorphism> = endos
            .iter()
            .filter(|f| n.members.iter().all(|y| f.apply(y) == m.zero()))
            .collect();
        for x in m.elements() {
            if n.members.contains(x) {
                continue;
            }
            if !killers.iter().any(|f| f.apply(x) != m.zero()) {
                witnesses.push(ModuleWitness::CogeneratorGap {
                    submodule: n.members.to_vec(),
                    element: x,
                });
                if mode == WitnessMode::First {
                    break 'outer;
                }
            }
        }
    }
    finish(p, witnesses)
}

fn sip(m: &ModuleRef, caps: &Caps, mode: WitnessMode) -> ModuleVerdict {
    let p = ModuleProperty::Sip;
    let subs = try_cap!(submodules(m, caps), p);
    let summands: Vec<&Submodule> = subs
        .iter()
        .filter(|s| is_direct_summand_with(m, s, &subs).holds())
        .collect();
    let mut witnesses = Vec::new();
    'outer: for a in &summands {
        for b in &summands {
            let meet = crate::finmod::make_submodule(m, a.members.intersection(&b.members));
            if !is_direct_summand_with(m, &meet, &subs).holds() {
                witnesses.push(ModuleWitness::SipFailure {
                    first: a.members.to_vec(),
                    second: b.members.to_vec(),
                    intersection: meet.members.to_vec(),
                });
                if mode == WitnessMode::First {
                    break 'outer;
                }
            }
        }
    }
    finish(p, witnesses)
}

/// `m` is relatively Rickart to `n`: every homomorphism `m -> n` has a
/// kernel that is a direct summand of `m`.
pub fn is_relatively_rickart(
    m: &ModuleRef,
    n: &ModuleRef,
    caps: &Caps,
    mode: WitnessMode,
) -> ModuleVerdict {
    let p = ModuleProperty::RelativeRickart;
    let homs = try_cap!(hom_set(m, n, caps), p);
    let subs = try_cap!(submodules(m, caps), p);
    let mut witnesses = Vec::new();
    for f in &homs {
        let kernel = f.kernel();
        if !is_direct_summand_with(m, &kernel, &subs).holds() {
            witnesses.push(ModuleWitness::KernelNotSummand {
                hom_images: f.images().to_vec(),
                kernel: kernel.members.to_vec(),
            });
            if mode == WitnessMode::First {
                break;
            }
        }
    }
    finish(p, witnesses)
}

/// Re-validates a failure witness by unfolding the defining condition
/// through an independent code path. For summand questions the
/// independent route searches `End(M)` for idempotents; for
/// essentiality it enumerates the submodule lattice instead of using
/// the cyclic criterion.
pub fn recheck_module_witness(
    m: &ModuleRef,
    witness: &ModuleWitness,
    partner: Option<&ModuleRef>,
    caps: &Caps,
) -> Result<bool, ModuleError> {
    let endos = hom_set(m, m, caps)?;
    let subs = submodules(m, caps)?;
    let check = match witness {
        ModuleWitness::KernelNotSummand { hom_images, kernel } => {
            let target = partner.unwrap_or(m);
            let f = Homomorphism::new(m, target, hom_images.clone())?;
            let k = f.kernel();
            k.members.to_vec() == *kernel && !is_summand_by_idempotent(&k, &endos)
        }
        ModuleWitness::KernelMeetNotSummand {
            hom_images,
            intersection,
        } => {
            let mut meet = ElemSet::full(m.size());
            for images in hom_images {
                let f = Homomorphism::new(m, m, images.clone())?;
                meet = meet.intersection(&f.kernel().members);
            }
            let sub = crate::finmod::make_submodule(m, meet);
            sub.members.to_vec() == *intersection && !is_summand_by_idempotent(&sub, &endos)
        }
        ModuleWitness::EssentialKernel { hom_images, kernel } => {
            let f = Homomorphism::new(m, m, hom_images.clone())?;
            let k = f.kernel();
            // essential = meets every nonzero submodule (lattice route)
            let essential = subs
                .iter()
                .filter(|s| !s.is_zero())
                .all(|s| !k.members.intersection(&s.members).is_zero_only());
            !f.is_zero() && k.members.to_vec() == *kernel && essential
        }
        ModuleWitness::Unretractable { submodule } => {
            let n = ElemSet::from_iter(m.size(), submodule.iter().copied());
            !n.is_zero_only()
                && endos
                    .iter()
                    .all(|f| f.is_zero() || !f.image().members.is_subset(&n))
        }
        ModuleWitness::LocalRetractGap {
            hom_images,
            element,
        } => {
            let f = Homomorphism::new(m, m, hom_images.clone())?;
            let kernel = f.kernel().members;
            kernel.contains(*element)
                && *element != m.zero()
                && endos.iter().all(|psi| {
                    let im = psi.image().members;
                    !(im.is_subset(&kernel) && im.contains(*element))
                })
        }
        ModuleWitness::NotExtendable {
            submodule,
            basis,
            hom_images,
        } => {
            let n = crate::finmod::make_submodule(
                m,
                ElemSet::from_iter(m.size(), submodule.iter().copied()),
            );
            let (n_mod, embed) = submodule_as_module(m, &n, caps)?;
            let f = Homomorphism::new(&n_mod, m, hom_images.clone())?;
            embed.images() == basis.as_slice()
                && endos
                    .iter()
                    .all(|g| embed.images().iter().zip(f.images()).any(|(&b, &y)| g.apply(b) != y))
        }
        ModuleWitness::NotEssentialInAnySummand { submodule } => {
            let n = ElemSet::from_iter(m.size(), submodule.iter().copied());
            subs.iter()
                .filter(|d| is_summand_by_idempotent(d, &endos))
                .all(|d| !(n.is_subset(&d.members) && is_essential_in(m, &n, &d.members)))
        }
        ModuleWitness::CogeneratorGap { submodule, element } => {
            let n = ElemSet::from_iter(m.size(), submodule.iter().copied());
            !n.contains(*element)
                && endos.iter().all(|f| {
                    f.apply(*element) == m.zero() || n.iter().any(|y| f.apply(y) != m.zero())
                })
        }
        ModuleWitness::SipFailure {
            first,
            second,
            intersection,
        } => {
            let a = ElemSet::from_iter(m.size(), first.iter().copied());
            let b = ElemSet::from_iter(m.size(), second.iter().copied());
            let meet = a.intersection(&b);
            let meet_sub = crate::finmod::make_submodule(m, meet.clone());
            meet.to_vec() == *intersection
                && is_summand_by_idempotent(
                    &crate::finmod::make_submodule(m, a),
                    &endos,
                )
                && is_summand_by_idempotent(
                    &crate::finmod::make_submodule(m, b),
                    &endos,
                )
                && !is_summand_by_idempotent(&meet_sub, &endos)
        }
    };
    Ok(check)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finmod::{cyclic_module, direct_sum, regular_module, zero_module};
    use crate::finring::{build_ring, RingRef, RingSpec};

    fn caps() -> Caps {
        Caps::default()
    }
    fn zmod(n: u32) -> RingRef {
        build_ring(&RingSpec::Zmod(n), &caps()).unwrap()
    }
    fn decide(m: &ModuleRef, p: ModuleProperty) -> ModuleVerdict {
        decide_module_property(m, p, &caps())
    }

    fn z2_plus_z4() -> ModuleRef {
        let r = zmod(4);
        let z2 = cyclic_module(&r, 2, &caps()).unwrap();
        let z4 = cyclic_module(&r, 4, &caps()).unwrap();
        direct_sum(&z2, &z4, &caps()).unwrap()
    }

    #[test]
    fn regular_z4_is_not_rickart_with_doubling_witness() {
        let m = regular_module(&zmod(4), &caps()).unwrap().module;
        let v = decide(&m, ModuleProperty::Rickart);
        assert_eq!(v.status, VerdictStatus::Fails);
        let ModuleWitness::KernelNotSummand { hom_images, kernel } = &v.witnesses[0] else {
            panic!("wrong witness kind")
        };
        // multiplication by 2: generator 1 maps to 2
        assert_eq!(hom_images, &vec![m.times(2, m.generator(0))]);
        assert_eq!(kernel, &vec![0, 2]);
        assert!(recheck_module_witness(&m, &v.witnesses[0], None, &caps()).unwrap());
    }

    #[test]
    fn z4_is_k_local_retractable() {
        let m = regular_module(&zmod(4), &caps()).unwrap().module;
        let v = decide(&m, ModuleProperty::KLocalRetractable);
        assert_eq!(v.status, VerdictStatus::Holds);
    }

    #[test]
    fn klein_module_is_rickart_and_baer() {
        let r = zmod(2);
        let z2 = cyclic_module(&r, 2, &caps()).unwrap();
        let m = direct_sum(&z2, &z2, &caps()).unwrap();
        assert_eq!(decide(&m, ModuleProperty::Rickart).status, VerdictStatus::Holds);
        assert_eq!(decide(&m, ModuleProperty::Baer).status, VerdictStatus::Holds);
        assert_eq!(
            decide(&m, ModuleProperty::QuasiInjective).status,
            VerdictStatus::Holds
        );
    }

    #[test]
    fn z2_plus_z4_fails_rickart_with_expected_witness() {
        let m = z2_plus_z4();
        let v = decide(&m, ModuleProperty::Rickart);
        assert_eq!(v.status, VerdictStatus::Fails);
        let ModuleWitness::KernelNotSummand { hom_images, kernel } = &v.witnesses[0] else {
            panic!("wrong witness kind")
        };
        // phi(a, b) = (0, 2b): generators (1,0) -> 0 and (0,1) -> (0,2)
        assert_eq!(hom_images, &vec![0, m.encode(&[0, 2])]);
        assert_eq!(
            kernel,
            &vec![0, m.encode(&[0, 2]), m.encode(&[1, 0]), m.encode(&[1, 2])]
        );
    }

    #[test]
    fn regular_z6_is_baer() {
        let m = regular_module(&zmod(6), &caps()).unwrap().module;
        assert_eq!(decide(&m, ModuleProperty::Baer).status, VerdictStatus::Holds);
    }

    #[test]
    fn zero_module_satisfies_everything() {
        let m = zero_module(&zmod(4), &caps()).unwrap();
        for p in ModuleProperty::ALL {
            assert_eq!(decide(&m, p).status, VerdictStatus::Holds, "{p}");
        }
    }

    #[test]
    fn relative_rickart_examples() {
        let r4 = zmod(4);
        let z2 = cyclic_module(&r4, 2, &caps()).unwrap();
        let z4 = cyclic_module(&r4, 4, &caps()).unwrap();
        // reduction Z_4 -> Z_2 has kernel 2Z_4, not a summand of Z_4
        let v = is_relatively_rickart(&z4, &z2, &caps(), WitnessMode::First);
        assert_eq!(v.status, VerdictStatus::Fails);
        let ModuleWitness::KernelNotSummand { kernel, .. } = &v.witnesses[0] else {
            panic!()
        };
        assert_eq!(kernel, &vec![0, 2]);
        assert!(recheck_module_witness(&z4, &v.witnesses[0], Some(&z2), &caps()).unwrap());
        // nonzero maps Z_2 -> Z_4 are injective
        let v = is_relatively_rickart(&z2, &z4, &caps(), WitnessMode::First);
        assert_eq!(v.status, VerdictStatus::Holds);

        let r6 = zmod(6);
        let z2 = cyclic_module(&r6, 2, &caps()).unwrap();
        let z3 = cyclic_module(&r6, 3, &caps()).unwrap();
        let v = is_relatively_rickart(&z2, &z3, &caps(), WitnessMode::First);
        assert_eq!(v.status, VerdictStatus::Holds);
    }

    #[test]
    fn quasi_injective_cap_is_separate() {
        let mut caps = Caps::default();
        caps.quasi_injective_order = 4;
        let m = z2_plus_z4();
        let v = decide_module_property(&m, ModuleProperty::QuasiInjective, &caps);
        assert_eq!(v.status, VerdictStatus::Unsupported);
        assert_eq!(v.unsupported.unwrap().cap, "quasi_injective_order");
    }

    #[test]
    fn retractable_holds_for_torsion_modules() {
        for m in [
            regular_module(&zmod(4), &caps()).unwrap().module,
            regular_module(&zmod(6), &caps()).unwrap().module,
            z2_plus_z4(),
        ] {
            assert_eq!(
                decide(&m, ModuleProperty::Retractable).status,
                VerdictStatus::Holds
            );
        }
    }
}
