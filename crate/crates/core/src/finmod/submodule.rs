use serde::Serialize;

use crate::caps::Caps;
use crate::elemset::ElemSet;
use crate::finmod::module::{FiniteModule, ModuleError};

/// A submodule, stored as a bitset over module element indices with a
/// generating set whose closure equals `members`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Submodule {
    pub members: ElemSet,
    pub generators: Vec<usize>,
}

impl Submodule {
    pub fn len(&self) -> usize {
        self.members.len()
    }
    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
    pub fn is_zero(&self) -> bool {
        self.members.is_zero_only()
    }
    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(x)
    }
    pub fn is_full(&self, m: &FiniteModule) -> bool {
        self.members.len() == m.size()
    }
}

/// Closure of `seed` (together with `start`) under addition and the
/// action of every ring element.
pub fn submodule_closure(m: &FiniteModule, start: Option<&ElemSet>, seed: &[usize]) -> ElemSet {
    let mut set = ElemSet::empty(m.size());
    let mut items: Vec<usize> = Vec::new();
    let push = |e: usize, set: &mut ElemSet, items: &mut Vec<usize>| {
        if set.insert(e) {
            items.push(e);
        }
    };
    push(m.zero(), &mut set, &mut items);
    if let Some(s) = start {
        for e in s.iter() {
            push(e, &mut set, &mut items);
        }
    }
    for &e in seed {
        push(e, &mut set, &mut items);
    }
    let mut i = 0;
    while i < items.len() {
        let x = items[i];
        for r in m.ring().elements() {
            push(m.act(r, x), &mut set, &mut items);
        }
        for j in 0..=i {
            push(m.add(x, items[j]), &mut set, &mut items);
        }
        i += 1;
    }
    set
}

pub(crate) fn assert_submodule(m: &FiniteModule, members: &ElemSet) {
    for a in members.iter() {
        for r in m.ring().elements() {
            debug_assert!(members.contains(m.act(r, a)), "not action closed");
        }
        for b in members.iter() {
            debug_assert!(members.contains(m.add(a, b)), "not additively closed");
        }
    }
}

pub(crate) fn make_submodule(m: &FiniteModule, members: ElemSet) -> Submodule {
    assert_submodule(m, &members);
    let mut gens: Vec<usize> = Vec::new();
    let mut span = submodule_closure(m, None, &[]);
    while span != members {
        let mut best: Option<(usize, usize)> = None;
        for e in members.iter() {
            if span.contains(e) {
                continue;
            }
            let gain = submodule_closure(m, Some(&span), &[e]).len();
            match best {
                Some((g, _)) if g >= gain => {}
                _ => best = Some((gain, e)),
            }
        }
        let (_, e) = best.expect("member set is not a submodule");
        span = submodule_closure(m, Some(&span), &[e]);
        gens.push(e);
    }
    Submodule { members, generators: gens }
}

/// Submodule generated by the given elements.
pub fn generated_submodule(m: &FiniteModule, gens: &[usize]) -> Submodule {
    let members = submodule_closure(m, None, gens);
    make_submodule(m, members)
}

/// Every submodule, exactly once, sorted by (size, bitset). The result
/// is cached on the module (write-once); the cache reproduces the
/// capacity contract exactly, since enumeration succeeds if and only
/// if the total count fits the cap.
pub fn submodules(m: &FiniteModule, caps: &Caps) -> Result<Vec<Submodule>, ModuleError> {
    if let Some(cached) = m.caches().submodules.get() {
        if cached.len() <= caps.submodule_count {
            return Ok(cached.clone());
        }
        return Err(ModuleError::capacity(
            "submodule_count",
            caps.submodule_count,
            cached.len(),
        ));
    }
    let computed = submodules_uncached(m, caps)?;
    let _ = m.caches().submodules.set(computed.clone());
    Ok(computed)
}

fn submodules_uncached(m: &FiniteModule, caps: &Caps) -> Result<Vec<Submodule>, ModuleError> {
    let mut seen: Vec<ElemSet> = vec![submodule_closure(m, None, &[])];
    let mut i = 0;
    while i < seen.len() {
        let current = seen[i].clone();
        for a in m.elements() {
            if current.contains(a) {
                continue;
            }
            let grown = submodule_closure(m, Some(&current), &[a]);
            if !seen.contains(&grown) {
                if seen.len() >= caps.submodule_count {
                    return Err(ModuleError::capacity(
                        "submodule_count",
                        caps.submodule_count,
                        seen.len() + 1,
                    ));
                }
                seen.push(grown);
            }
        }
        i += 1;
    }
    seen.sort();
    Ok(seen.into_iter().map(|s| make_submodule(m, s)).collect())
}

/// Elementwise sum `A + B` (already a submodule).
pub fn submodule_sum(m: &FiniteModule, a: &ElemSet, b: &ElemSet) -> ElemSet {
    let mut out = ElemSet::empty(m.size());
    for x in a.iter() {
        for y in b.iter() {
            out.insert(m.add(x, y));
        }
    }
    out
}

/// `inner` is essential in `outer`: every nonzero element of `outer`
/// has a nonzero multiple inside `inner` (the cyclic-submodule
/// criterion).
pub fn is_essential_in(m: &FiniteModule, inner: &ElemSet, outer: &ElemSet) -> bool {
    outer.iter().all(|x| {
        x == m.zero()
            || m.ring()
                .elements()
                .any(|r| m.act(r, x) != m.zero() && inner.contains(m.act(r, x)))
    })
}

/// `n` is essential in `m`.
pub fn is_essential(m: &FiniteModule, n: &Submodule) -> bool {
    is_essential_in(m, &n.members, &ElemSet::full(m.size()))
}

/// `n` is closed in `m`: no proper essential extension inside `m`.
/// `subs` must be the full submodule lattice of `m`.
pub fn is_closed_with(m: &FiniteModule, n: &Submodule, subs: &[Submodule]) -> bool {
    !subs.iter().any(|bigger| {
        n.members != bigger.members
            && n.members.is_subset(&bigger.members)
            && is_essential_in(m, &n.members, &bigger.members)
    })
}

pub fn is_closed(m: &FiniteModule, n: &Submodule, caps: &Caps) -> Result<bool, ModuleError> {
    let subs = submodules(m, caps)?;
    Ok(is_closed_with(m, n, &subs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finmod::module::{cyclic_module, direct_sum, regular_module};
    use crate::finring::{build_ring, RingSpec};

    fn caps() -> Caps {
        Caps::default()
    }

    #[test]
    fn klein_module_has_five_submodules() {
        let r = build_ring(&RingSpec::Zmod(2), &caps()).unwrap();
        let z2 = cyclic_module(&r, 2, &caps()).unwrap();
        let m = direct_sum(&z2, &z2, &caps()).unwrap();
        assert_eq!(submodules(&m, &caps()).unwrap().len(), 5);
    }

    #[test]
    fn regular_z4_has_three_submodules() {
        let r = build_ring(&RingSpec::Zmod(4), &caps()).unwrap();
        let m = regular_module(&r, &caps()).unwrap().module;
        let subs = submodules(&m, &caps()).unwrap();
        assert_eq!(subs.len(), 3);
        assert_eq!(subs[1].members.to_vec(), vec![0, 2]);
    }

    #[test]
    fn simple_module_has_two_submodules() {
        let r = build_ring(&RingSpec::Zmod(5), &caps()).unwrap();
        let m = regular_module(&r, &caps()).unwrap().module;
        assert_eq!(submodules(&m, &caps()).unwrap().len(), 2);
    }

    #[test]
    fn essential_and_closed_in_regular_z4() {
        let r = build_ring(&RingSpec::Zmod(4), &caps()).unwrap();
        let m = regular_module(&r, &caps()).unwrap().module;
        let subs = submodules(&m, &caps()).unwrap();
        let two = &subs[1];
        assert!(is_essential(&m, two));
        assert!(!is_closed(&m, two, &caps()).unwrap());
        assert!(is_closed(&m, &subs[2], &caps()).unwrap()); // M itself
        assert!(!is_essential(&m, &subs[0])); // {0} in a nonzero module
        assert!(is_essential(&m, &subs[2])); // M in M
    }

    #[test]
    fn summand_factors_are_closed() {
        let r = build_ring(&RingSpec::Zmod(2), &caps()).unwrap();
        let z2 = cyclic_module(&r, 2, &caps()).unwrap();
        let m = direct_sum(&z2, &z2, &caps()).unwrap();
        let n = generated_submodule(&m, &[m.encode(&[1, 0])]);
        assert!(is_closed(&m, &n, &caps()).unwrap());
    }
}
