use std::sync::Arc;

use crate::caps::Caps;
use crate::elemset::ElemSet;
use crate::finmod::abelian;
use crate::finmod::module::{module_from_action, FiniteModule, ModuleError, ModuleRef};
use crate::finmod::submodule::{make_submodule, Submodule};

/// An R-homomorphism between finite modules, determined by the images
/// of the source's canonical generators. The full element map is
/// expanded and validated at construction.
#[derive(Debug, Clone)]
pub struct Homomorphism {
    source: ModuleRef,
    target: ModuleRef,
    images: Vec<usize>,
    map: Vec<u32>,
}

impl PartialEq for Homomorphism {
    fn eq(&self, other: &Self) -> bool {
        self.source == other.source && self.target == other.target && self.images == other.images
    }
}
impl Eq for Homomorphism {}

impl Homomorphism {
    /// Builds and fully validates a homomorphism from generator images.
    pub fn new(
        source: &ModuleRef,
        target: &ModuleRef,
        images: Vec<usize>,
    ) -> Result<Homomorphism, ModuleError> {
        if source.ring() != target.ring() {
            return Err(ModuleError::RingMismatch);
        }
        if images.len() != source.generator_count() {
            return Err(ModuleError::InvalidSpec(
                "one image per source generator required".into(),
            ));
        }
        let fail = |detail: String| ModuleError::Axiom {
            axiom: "homomorphism",
            detail,
        };
        for (i, &y) in images.iter().enumerate() {
            if y >= target.size() {
                return Err(fail(format!("image {y} out of range")));
            }
            if target.times(source.cyclic_orders()[i], y) != 0 {
                return Err(fail(format!(
                    "generator {i} has order {}, image {y} does not",
                    source.cyclic_orders()[i]
                )));
            }
        }
        // linear extension
        let k = source.generator_count();
        let multiples: Vec<Vec<usize>> = (0..k)
            .map(|i| {
                (0..source.cyclic_orders()[i])
                    .map(|t| target.times(t, images[i]))
                    .collect()
            })
            .collect();
        let mut map = Vec::with_capacity(source.size());
        for x in source.elements() {
            let coords = source.decode(x);
            let mut y = 0;
            for i in 0..k {
                y = target.add(y, multiples[i][coords[i] as usize]);
            }
            map.push(y as u32);
        }
        let hom = Homomorphism {
            source: Arc::clone(source),
            target: Arc::clone(target),
            images,
            map,
        };
        // full-table verification of additivity and R-linearity
        for x in source.elements() {
            for y in source.elements() {
                if hom.apply(source.add(x, y)) != target.add(hom.apply(x), hom.apply(y)) {
                    return Err(fail(format!("not additive at ({x}, {y})")));
                }
            }
            for r in source.ring().elements() {
                if hom.apply(source.act(r, x)) != target.act(r, hom.apply(x)) {
                    return Err(fail(format!("not R-linear at x={x}, r={r}")));
                }
            }
        }
        Ok(hom)
    }

    /// Linear extension without the full-table verification, for images
    /// that are homomorphic by construction (sums and composites of
    /// validated maps).
    fn from_images_trusted(
        source: &ModuleRef,
        target: &ModuleRef,
        images: Vec<usize>,
    ) -> Homomorphism {
        let k = source.generator_count();
        debug_assert_eq!(images.len(), k);
        let multiples: Vec<Vec<usize>> = (0..k)
            .map(|i| {
                (0..source.cyclic_orders()[i])
                    .map(|t| target.times(t, images[i]))
                    .collect()
            })
            .collect();
        let mut map = Vec::with_capacity(source.size());
        for x in source.elements() {
            let coords = source.decode(x);
            let mut y = 0;
            for i in 0..k {
                y = target.add(y, multiples[i][coords[i] as usize]);
            }
            map.push(y as u32);
        }
        Homomorphism {
            source: Arc::clone(source),
            target: Arc::clone(target),
            images,
            map,
        }
    }

    pub fn source(&self) -> &ModuleRef {
        &self.source
    }
    pub fn target(&self) -> &ModuleRef {
        &self.target
    }
    pub fn images(&self) -> &[usize] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.map[x] as usize
    }

    pub fn identity(m: &ModuleRef) -> Homomorphism {
        let images = (0..m.generator_count()).map(|i| m.generator(i)).collect();
        Homomorphism::from_images_trusted(m, m, images)
    }

    pub fn zero(source: &ModuleRef, target: &ModuleRef) -> Homomorphism {
        Homomorphism::from_images_trusted(source, target, vec![0; source.generator_count()])
    }

    pub fn is_zero(&self) -> bool {
        self.map.iter().all(|&y| y == 0)
    }

    /// Composition `self ∘ other` (apply `other` first).
    pub fn after(&self, other: &Homomorphism) -> Homomorphism {
        assert_eq!(*other.target, *self.source, "composition shape mismatch");
        let images = other.images.iter().map(|&y| self.apply(y)).collect();
        Homomorphism::from_images_trusted(&other.source, &self.target, images)
    }

    /// Pointwise sum.
    pub fn plus(&self, other: &Homomorphism) -> Homomorphism {
        assert_eq!(*self.source, *other.source);
        assert_eq!(*self.target, *other.target);
        let images = self
            .images
            .iter()
            .zip(&other.images)
            .map(|(&a, &b)| self.target.add(a, b))
            .collect();
        Homomorphism::from_images_trusted(&self.source, &self.target, images)
    }

    pub fn is_idempotent(&self) -> bool {
        *self.source == *self.target && self.source.elements().all(|x| {
            self.apply(self.apply(x)) == self.apply(x)
        })
    }

    pub fn kernel(&self) -> Submodule {
        let members = ElemSet::from_iter(
            self.source.size(),
            self.source.elements().filter(|&x| self.apply(x) == 0),
        );
        make_submodule(&self.source, members)
    }

    pub fn image(&self) -> Submodule {
        let members = ElemSet::from_iter(
            self.target.size(),
            self.source.elements().map(|x| self.apply(x)),
        );
        make_submodule(&self.target, members)
    }

    pub fn is_injective(&self) -> bool {
        self.kernel().is_zero()
    }

    pub fn is_surjective(&self) -> bool {
        self.image().len() == self.target.size()
    }
}

/// Hard guard against runaway backtracking, independent of the
/// configured result-size cap so that cached results reproduce the
/// capacity contract exactly.
const HOM_SEARCH_NODE_CAP: usize = 1 << 22;

/// All R-homomorphisms from `m` to `n`, enumerated by backtracking over
/// generator images with constraint pruning, in lexicographic order of
/// the image tuples. Endomorphism sets (`m` and `n` the same module)
/// are cached write-once on the module.
pub fn hom_set(
    m: &ModuleRef,
    n: &ModuleRef,
    caps: &Caps,
) -> Result<Vec<Homomorphism>, ModuleError> {
    let self_hom = Arc::ptr_eq(m, n);
    if self_hom {
        if let Some(cached) = m.caches().endos.get() {
            if cached.len() <= caps.hom_set {
                return Ok(cached.clone());
            }
            return Err(ModuleError::capacity("hom_set", caps.hom_set, cached.len()));
        }
    }
    let out = hom_set_uncached(m, n, caps)?;
    if self_hom {
        let _ = m.caches().endos.set(out.clone());
    }
    Ok(out)
}

fn hom_set_uncached(
    m: &ModuleRef,
    n: &ModuleRef,
    caps: &Caps,
) -> Result<Vec<Homomorphism>, ModuleError> {
    if m.ring() != n.ring() {
        return Err(ModuleError::RingMismatch);
    }
    let ring = m.ring().clone();
    let k = m.generator_count();
    if k == 0 {
        return Ok(vec![Homomorphism::zero(m, n)]);
    }

    // candidates per generator: elements killed by the generator order
    let candidates: Vec<Vec<usize>> = (0..k)
        .map(|i| {
            let d = m.cyclic_orders()[i];
            n.elements().filter(|&y| n.times(d, y) == 0).collect()
        })
        .collect();

    // Constraint (i, r): f(g_i . r) = f(g_i) . r. The left side expands
    // over the coordinates of g_i . r, so the constraint becomes
    // checkable once every generator in its support is assigned.
    let mut by_level: Vec<Vec<(usize, usize, Vec<u32>)>> = vec![Vec::new(); k];
    for i in 0..k {
        for r in ring.elements() {
            let coords = m.decode(m.act(r, m.generator(i)));
            let support_max = coords
                .iter()
                .enumerate()
                .filter(|(_, &c)| c != 0)
                .map(|(j, _)| j)
                .max()
                .unwrap_or(0);
            let level = support_max.max(i);
            by_level[level].push((i, r, coords));
        }
    }

    let mut out: Vec<Homomorphism> = Vec::new();
    let mut assigned: Vec<usize> = Vec::new();
    let mut nodes: usize = 0;
    let node_cap = HOM_SEARCH_NODE_CAP;

    fn satisfied(
        n: &FiniteModule,
        assigned: &[usize],
        i: usize,
        r: usize,
        coords: &[u32],
    ) -> bool {
        let mut lhs = 0;
        for (j, &c) in coords.iter().enumerate() {
            if c != 0 {
                lhs = n.add(lhs, n.times(c, assigned[j]));
            }
        }
        lhs == n.act(r, assigned[i])
    }

    fn rec(
        m: &ModuleRef,
        n: &ModuleRef,
        candidates: &[Vec<usize>],
        by_level: &[Vec<(usize, usize, Vec<u32>)>],
        assigned: &mut Vec<usize>,
        out: &mut Vec<Homomorphism>,
        nodes: &mut usize,
        node_cap: usize,
        hom_cap: usize,
    ) -> Result<(), ModuleError> {
        let level = assigned.len();
        if level == candidates.len() {
            if out.len() >= hom_cap {
                return Err(ModuleError::capacity("hom_set", hom_cap, out.len() + 1));
            }
            let hom = Homomorphism::new(m, n, assigned.clone())
                .expect("pruned assignment must be a homomorphism");
            out.push(hom);
            return Ok(());
        }
        for &y in &candidates[level] {
            *nodes += 1;
            if *nodes > node_cap {
                return Err(ModuleError::capacity("hom_set search", node_cap, *nodes));
            }
            assigned.push(y);
            if by_level[level]
                .iter()
                .all(|(i, r, coords)| satisfied(n, assigned, *i, *r, coords))
            {
                rec(m, n, candidates, by_level, assigned, out, nodes, node_cap, hom_cap)?;
            }
            assigned.pop();
        }
        Ok(())
    }

    rec(
        m,
        n,
        &candidates,
        &by_level,
        &mut assigned,
        &mut out,
        &mut nodes,
        node_cap,
        caps.hom_set,
    )?;
    Ok(out)
}

/// Quotient module `m / n` with its projection.
pub fn quotient(
    m: &ModuleRef,
    n: &Submodule,
    caps: &Caps,
) -> Result<(ModuleRef, Homomorphism), ModuleError> {
    let rep = |x: usize| -> usize {
        n.members
            .iter()
            .map(|j| m.add(x, j))
            .min()
            .expect("submodule contains zero")
    };
    let reps: Vec<usize> = m.elements().map(rep).collect();
    let mut classes: Vec<usize> = reps.clone();
    classes.sort_unstable();
    classes.dedup();
    let class_of = |x: usize| classes.binary_search(&reps[x]).unwrap();

    let class_ids: Vec<usize> = (0..classes.len()).collect();
    let dec = abelian::decompose(&class_ids, class_of(m.zero()), |a, b| {
        class_of(m.add(classes[a], classes[b]))
    });
    let encode = |coords: &[u32]| -> usize {
        let mut strides = vec![1usize; dec.orders.len()];
        for i in (0..dec.orders.len().saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * dec.orders[i + 1] as usize;
        }
        coords.iter().zip(&strides).map(|(&c, &s)| c as usize * s).sum()
    };
    let gen_images: Vec<Vec<usize>> = m
        .ring()
        .elements()
        .map(|r| {
            dec.basis
                .iter()
                .map(|&cls| {
                    let acted = class_of(m.act(r, classes[cls]));
                    encode(&dec.coords[&acted])
                })
                .collect()
        })
        .collect();
    let q = module_from_action(
        m.ring(),
        dec.orders.clone(),
        gen_images,
        format!("{} / (submodule of order {})", m.label(), n.len()),
        caps,
    )?;
    let proj_images: Vec<usize> = (0..m.generator_count())
        .map(|i| encode(&dec.coords[&class_of(m.generator(i))]))
        .collect();
    let proj = Homomorphism::new(m, &q, proj_images)?;
    debug_assert!(proj.is_surjective());
    debug_assert_eq!(proj.kernel().members, n.members);
    Ok((q, proj))
}

/// Realizes a submodule as a standalone module together with its
/// embedding into the ambient module.
pub fn submodule_as_module(
    m: &ModuleRef,
    n: &Submodule,
    caps: &Caps,
) -> Result<(ModuleRef, Homomorphism), ModuleError> {
    let members: Vec<usize> = n.members.to_vec();
    let dec = abelian::decompose(&members, m.zero(), |a, b| m.add(a, b));
    let encode = |coords: &[u32]| -> usize {
        let mut strides = vec![1usize; dec.orders.len()];
        for i in (0..dec.orders.len().saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * dec.orders[i + 1] as usize;
        }
        coords.iter().zip(&strides).map(|(&c, &s)| c as usize * s).sum()
    };
    let gen_images: Vec<Vec<usize>> = m
        .ring()
        .elements()
        .map(|r| {
            dec.basis
                .iter()
                .map(|&b| encode(&dec.coords[&m.act(r, b)]))
                .collect()
        })
        .collect();
    let sub = module_from_action(
        m.ring(),
        dec.orders.clone(),
        gen_images,
        format!("submodule of order {} in {}", n.len(), m.label()),
        caps,
    )?;
    let embed = Homomorphism::new(&sub, m, dec.basis.clone())?;
    debug_assert!(embed.is_injective());
    debug_assert_eq!(embed.image().members, n.members);
    Ok((sub, embed))
}

/// Embeddings of the factors of a direct sum.
pub fn sum_embeddings(m: &ModuleRef) -> Option<(Homomorphism, Homomorphism)> {
    let split = m.split()?;
    let k_left = split.left_gens;
    let left_images: Vec<usize> = (0..k_left).map(|i| m.generator(i)).collect();
    let right_images: Vec<usize> = (k_left..m.generator_count())
        .map(|i| m.generator(i))
        .collect();
    let e1 = Homomorphism::new(&split.left, m, left_images).ok()?;
    let e2 = Homomorphism::new(&split.right, m, right_images).ok()?;
    Some((e1, e2))
}

/// Projections of a direct sum onto its factors.
pub fn sum_projections(m: &ModuleRef) -> Option<(Homomorphism, Homomorphism)> {
    let split = m.split()?;
    let k_left = split.left_gens;
    let mut left_images = Vec::new();
    let mut right_images = Vec::new();
    for i in 0..m.generator_count() {
        if i < k_left {
            left_images.push(split.left.generator(i));
            right_images.push(0);
        } else {
            left_images.push(0);
            right_images.push(split.right.generator(i - k_left));
        }
    }
    let p1 = Homomorphism::new(m, &split.left, left_images).ok()?;
    let p2 = Homomorphism::new(m, &split.right, right_images).ok()?;
    Some((p1, p2))
}

/// Brute-force module isomorphism (exists for tests).
pub fn find_module_isomorphism(
    a: &ModuleRef,
    b: &ModuleRef,
    caps: &Caps,
) -> Result<Option<Homomorphism>, ModuleError> {
    if a.size() != b.size() {
        return Ok(None);
    }
    Ok(hom_set(a, b, caps)?
        .into_iter()
        .find(|h| h.is_injective() && h.is_surjective()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finmod::module::{cyclic_module, direct_sum, regular_module, zero_module};
    use crate::finmod::submodule::{generated_submodule, submodules};
    use crate::finring::{build_ring, RingSpec};
    use crate::finring::RingRef;

    fn caps() -> Caps {
        Caps::default()
    }
    fn zmod(n: u32) -> RingRef {
        build_ring(&RingSpec::Zmod(n), &caps()).unwrap()
    }

    #[test]
    fn end_of_regular_z4_has_four_elements() {
        let m = regular_module(&zmod(4), &caps()).unwrap().module;
        let end = hom_set(&m, &m, &caps()).unwrap();
        assert_eq!(end.len(), 4);
    }

    #[test]
    fn hom_counts_match_gcd_formula() {
        // |Hom(Z_a, Z_b)| = gcd(a, b) for cyclic modules over the
        // exponent ring
        let r = zmod(4);
        let z4 = cyclic_module(&r, 4, &caps()).unwrap();
        let z2 = cyclic_module(&r, 2, &caps()).unwrap();
        assert_eq!(hom_set(&z4, &z2, &caps()).unwrap().len(), 2);
        assert_eq!(hom_set(&z2, &z4, &caps()).unwrap().len(), 2);
        assert_eq!(hom_set(&z4, &z4, &caps()).unwrap().len(), 4);
    }

    #[test]
    fn coprime_cyclics_admit_only_zero() {
        let r = zmod(6);
        let z2 = cyclic_module(&r, 2, &caps()).unwrap();
        let z3 = cyclic_module(&r, 3, &caps()).unwrap();
        let homs = hom_set(&z2, &z3, &caps()).unwrap();
        assert_eq!(homs.len(), 1);
        assert!(homs[0].is_zero());
    }

    #[test]
    fn end_of_z2_plus_z4() {
        // |End(Z_2 + Z_4)| = gcd(2,2) gcd(2,4) gcd(4,2) gcd(4,4) = 32
        let r = zmod(4);
        let z2 = cyclic_module(&r, 2, &caps()).unwrap();
        let z4 = cyclic_module(&r, 4, &caps()).unwrap();
        let m = direct_sum(&z2, &z4, &caps()).unwrap();
        assert_eq!(hom_set(&m, &m, &caps()).unwrap().len(), 32);
    }

    #[test]
    fn kernel_and_image_sizes_multiply() {
        let m = regular_module(&zmod(4), &caps()).unwrap().module;
        for f in hom_set(&m, &m, &caps()).unwrap() {
            assert_eq!(f.kernel().len() * f.image().len(), m.size());
        }
    }

    #[test]
    fn kernel_of_multiplication_by_two() {
        let m = regular_module(&zmod(4), &caps()).unwrap().module;
        let double = Homomorphism::new(&m, &m, vec![m.times(2, m.generator(0))]).unwrap();
        assert_eq!(double.kernel().members.to_vec(), vec![0, 2]);
        let id = Homomorphism::identity(&m);
        assert!(id.kernel().is_zero());
        assert!(id.is_surjective());
        let zero = Homomorphism::zero(&m, &m);
        assert!(zero.kernel().is_full(&m));
        assert!(zero.image().is_zero());
    }

    #[test]
    fn zero_module_end_is_trivial() {
        let z = zero_module(&zmod(4), &caps()).unwrap();
        assert_eq!(hom_set(&z, &z, &caps()).unwrap().len(), 1);
    }

    #[test]
    fn quotient_sizes() {
        let r = zmod(4);
        let z2 = cyclic_module(&r, 2, &caps()).unwrap();
        let z4 = cyclic_module(&r, 4, &caps()).unwrap();
        let m = direct_sum(&z2, &z4, &caps()).unwrap();
        // N = Z_2 + 2Z_4 (all elements killed by 2)
        let n = generated_submodule(&m, &[m.encode(&[1, 0]), m.encode(&[0, 2])]);
        assert_eq!(n.len(), 4);
        let (q, proj) = quotient(&m, &n, &caps()).unwrap();
        assert_eq!(q.size(), 2);
        assert!(proj.is_surjective());
        assert_eq!(proj.kernel().members, n.members);

        let full = submodules(&m, &caps()).unwrap().last().unwrap().clone();
        let (q2, _) = quotient(&m, &full, &caps()).unwrap();
        assert_eq!(q2.size(), 1);

        let zero_sub = generated_submodule(&m, &[]);
        let (q3, _) = quotient(&m, &zero_sub, &caps()).unwrap();
        assert_eq!(q3.size(), m.size());
        assert!(find_module_isomorphism(&q3, &m, &caps()).unwrap().is_some());
    }

    #[test]
    fn submodule_realization_round_trips() {
        let m = regular_module(&zmod(4), &caps()).unwrap().module;
        let n = generated_submodule(&m, &[m.times(2, m.generator(0))]);
        let (sub, embed) = submodule_as_module(&m, &n, &caps()).unwrap();
        assert_eq!(sub.size(), 2);
        assert!(embed.is_injective());
        assert_eq!(embed.image().members, n.members);
    }

    #[test]
    fn projections_compose_with_embeddings() {
        let r = zmod(4);
        let z2 = cyclic_module(&r, 2, &caps()).unwrap();
        let z4 = cyclic_module(&r, 4, &caps()).unwrap();
        let m = direct_sum(&z2, &z4, &caps()).unwrap();
        let (e1, e2) = sum_embeddings(&m).unwrap();
        let (p1, p2) = sum_projections(&m).unwrap();
        assert_eq!(p1.after(&e1), Homomorphism::identity(&z2));
        assert_eq!(p2.after(&e2), Homomorphism::identity(&z4));
        assert!(p1.after(&e2).is_zero());
        assert!(p2.after(&e1).is_zero());
    }
}
