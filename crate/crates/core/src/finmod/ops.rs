use serde::Serialize;

use crate::caps::Caps;
use crate::elemset::ElemSet;
use crate::finmod::hom::Homomorphism;
use crate::finmod::module::{split_components, FiniteModule, ModuleError, ModuleRef};
use crate::finmod::submodule::{make_submodule, submodules, Submodule};
use crate::finring::RightIdeal;
use crate::verdict::VerdictStatus;

/// Certificate that a submodule is a direct summand: a complement and
/// the idempotent endomorphism projecting onto the submodule.
#[derive(Debug, Clone, Serialize)]
pub struct SummandCertificate {
    pub complement: Submodule,
    #[serde(serialize_with = "crate::finmod::serialize_hom_images")]
    pub idempotent: Homomorphism,
}

#[derive(Debug, Clone, Serialize)]
pub struct SummandVerdict {
    pub status: VerdictStatus,
    pub certificate: Option<SummandCertificate>,
}

impl SummandVerdict {
    pub fn holds(&self) -> bool {
        self.status == VerdictStatus::Holds
    }
}

/// Decides whether `n` is a direct summand by scanning the submodule
/// lattice for a complement; on success the idempotent projection is
/// reconstructed from the decomposition and cross-verified.
pub fn is_direct_summand(
    m: &ModuleRef,
    n: &Submodule,
    caps: &Caps,
) -> Result<SummandVerdict, ModuleError> {
    let subs = submodules(m, caps)?;
    Ok(is_direct_summand_with(m, n, &subs))
}

/// Same as [`is_direct_summand`], with a precomputed submodule lattice.
pub fn is_direct_summand_with(
    m: &ModuleRef,
    n: &Submodule,
    subs: &[Submodule],
) -> SummandVerdict {
    for c in subs {
        if n.len() * c.len() != m.size() {
            continue;
        }
        if !n.members.intersection(&c.members).is_zero_only() {
            continue;
        }
        // m = n (+) c; build the projection onto n along c
        let mut proj = vec![usize::MAX; m.size()];
        for a in n.members.iter() {
            for b in c.members.iter() {
                proj[m.add(a, b)] = a;
            }
        }
        debug_assert!(proj.iter().all(|&p| p != usize::MAX));
        let images: Vec<usize> = (0..m.generator_count())
            .map(|i| proj[m.generator(i)])
            .collect();
        let idempotent = Homomorphism::new(m, m, images)
            .expect("projection along a complement is an endomorphism");
        // cross-verify the linear extension against the decomposition
        debug_assert!(m.elements().all(|x| idempotent.apply(x) == proj[x]));
        debug_assert!(idempotent.is_idempotent());
        debug_assert_eq!(idempotent.image().members, n.members);
        debug_assert_eq!(idempotent.kernel().members, c.members);
        return SummandVerdict {
            status: VerdictStatus::Holds,
            certificate: Some(SummandCertificate {
                complement: c.clone(),
                idempotent,
            }),
        };
    }
    SummandVerdict {
        status: VerdictStatus::Fails,
        certificate: None,
    }
}

/// Independent summand test: searches `End(M)` for an idempotent with
/// the prescribed image. Used to cross-check the complement route.
pub fn is_summand_by_idempotent(n: &Submodule, endos: &[Homomorphism]) -> bool {
    endos
        .iter()
        .any(|e| e.is_idempotent() && e.image().members == n.members)
}

/// `{ r in R : m · r = 0 for all m }`, a two-sided ideal of the base
/// ring.
pub fn annihilator_in_ring(m: &FiniteModule) -> RightIdeal {
    let ring = m.ring();
    let members = ElemSet::from_iter(
        ring.order(),
        ring.elements()
            .filter(|&r| m.elements().all(|x| m.act(r, x) == m.zero())),
    );
    // two-sidedness
    for a in members.iter() {
        for r in ring.elements() {
            debug_assert!(members.contains(ring.mul(r, a)));
            debug_assert!(members.contains(ring.mul(a, r)));
        }
    }
    let gens = crate::finmod::ring_ideal_generators(ring, &members);
    RightIdeal {
        members,
        generators: gens,
    }
}

/// For a direct sum `m = m1 (+) m2`: does `n` split along the factors,
/// i.e. `n = (n ∩ m1) (+) (n ∩ m2)`?
pub fn decomposes_along(m: &FiniteModule, n: &Submodule) -> Result<bool, ModuleError> {
    if m.split().is_none() {
        return Err(ModuleError::InvalidSpec(
            "decomposes_along requires a direct-sum module".into(),
        ));
    }
    Ok(n.members.iter().all(|x| {
        let (l, r) = split_components(m, x).expect("split checked above");
        n.members.contains(l) && n.members.contains(r)
    }))
}

/// Intersection of two submodules.
pub fn submodule_intersection(m: &FiniteModule, a: &Submodule, b: &Submodule) -> Submodule {
    make_submodule(m, a.members.intersection(&b.members))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finmod::hom::hom_set;
    use crate::finmod::module::{cyclic_module, direct_sum, regular_module};
    use crate::finmod::submodule::generated_submodule;
    use crate::finring::{build_ring, RingSpec};
    use crate::finring::RingRef;

    fn caps() -> Caps {
        Caps::default()
    }
    fn zmod(n: u32) -> RingRef {
        build_ring(&RingSpec::Zmod(n), &caps()).unwrap()
    }

    fn z2_plus_z4() -> ModuleRef {
        let r = zmod(4);
        let z2 = cyclic_module(&r, 2, &caps()).unwrap();
        let z4 = cyclic_module(&r, 4, &caps()).unwrap();
        direct_sum(&z2, &z4, &caps()).unwrap()
    }

    #[test]
    fn canonical_factor_is_a_summand() {
        let m = z2_plus_z4();
        let n = generated_submodule(&m, &[m.encode(&[0, 1])]);
        let v = is_direct_summand(&m, &n, &caps()).unwrap();
        assert!(v.holds());
        let cert = v.certificate.unwrap();
        assert_eq!(cert.complement.len(), 2);
        assert!(cert.idempotent.is_idempotent());
    }

    #[test]
    fn socle_like_submodule_is_not_a_summand() {
        let m = z2_plus_z4();
        // Z_2 + 2Z_4: every element of order <= 2 already lies inside
        let n = generated_submodule(&m, &[m.encode(&[1, 0]), m.encode(&[0, 2])]);
        let v = is_direct_summand(&m, &n, &caps()).unwrap();
        assert!(!v.holds());
    }

    #[test]
    fn proper_essential_ideal_is_not_a_summand() {
        let m = regular_module(&zmod(4), &caps()).unwrap().module;
        let n = generated_submodule(&m, &[m.times(2, m.generator(0))]);
        assert!(!is_direct_summand(&m, &n, &caps()).unwrap().holds());
    }

    #[test]
    fn both_summand_routes_agree_on_z2_plus_z4() {
        let m = z2_plus_z4();
        let endos = hom_set(&m, &m, &caps()).unwrap();
        for n in crate::finmod::submodule::submodules(&m, &caps()).unwrap() {
            let complement_route = is_direct_summand(&m, &n, &caps()).unwrap().holds();
            let idempotent_route = is_summand_by_idempotent(&n, &endos);
            assert_eq!(complement_route, idempotent_route, "submodule {:?}", n.members.to_vec());
        }
    }

    #[test]
    fn annihilators_in_ring() {
        let r6 = zmod(6);
        let z2 = cyclic_module(&r6, 2, &caps()).unwrap();
        assert_eq!(annihilator_in_ring(&z2).members.to_vec(), vec![0, 2, 4]);

        let reg = regular_module(&r6, &caps()).unwrap().module;
        assert_eq!(annihilator_in_ring(&reg).members.to_vec(), vec![0]);

        let zero = crate::finmod::module::zero_module(&r6, &caps()).unwrap();
        assert_eq!(annihilator_in_ring(&zero).members.len(), 6);
    }

    #[test]
    fn diagonal_does_not_decompose_along_factors() {
        let m = z2_plus_z4();
        let diag = generated_submodule(&m, &[m.encode(&[1, 1])]);
        assert!(!decomposes_along(&m, &diag).unwrap());
        let split = generated_submodule(&m, &[m.encode(&[1, 0]), m.encode(&[0, 2])]);
        assert!(decomposes_along(&m, &split).unwrap());
        let zero = generated_submodule(&m, &[]);
        assert!(decomposes_along(&m, &zero).unwrap());
    }
}
