use serde::Serialize;

use crate::caps::{CapExceeded, Caps};
use crate::elemset::ElemSet;
use crate::finring::ring::{FiniteRing, RingError};

/// A right ideal of a finite ring, stored as a bitset over element
/// indices together with a generating set whose right-module closure
/// equals `members`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RightIdeal {
    pub members: ElemSet,
    pub generators: Vec<usize>,
}

/// Mirror of [`RightIdeal`] for left annihilators.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LeftIdeal {
    pub members: ElemSet,
    pub generators: Vec<usize>,
}

impl RightIdeal {
    pub fn len(&self) -> usize {
        self.members.len()
    }
    pub fn is_empty(&self) -> bool {
        false // always contains zero
    }
    pub fn is_zero(&self, ring: &FiniteRing) -> bool {
        self.members.len() == 1 && self.members.contains(ring.zero())
    }
    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(x)
    }
}

/// Closure of `seed` (together with `start`, if given) under addition
/// and right multiplication by every ring element.
pub fn right_closure(ring: &FiniteRing, start: Option<&ElemSet>, seed: &[usize]) -> ElemSet {
    let n = ring.order();
    let mut set = ElemSet::empty(n);
    let mut items: Vec<usize> = Vec::new();
    let push = |e: usize, set: &mut ElemSet, items: &mut Vec<usize>| {
        if set.insert(e) {
            items.push(e);
        }
    };
    push(ring.zero(), &mut set, &mut items);
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
        for r in ring.elements() {
            push(ring.mul(x, r), &mut set, &mut items);
        }
        for j in 0..=i {
            push(ring.add(x, items[j]), &mut set, &mut items);
        }
        i += 1;
    }
    set
}

fn left_closure(ring: &FiniteRing, seed: &[usize]) -> ElemSet {
    let n = ring.order();
    let mut set = ElemSet::empty(n);
    let mut items: Vec<usize> = Vec::new();
    let push = |e: usize, set: &mut ElemSet, items: &mut Vec<usize>| {
        if set.insert(e) {
            items.push(e);
        }
    };
    push(ring.zero(), &mut set, &mut items);
    for &e in seed {
        push(e, &mut set, &mut items);
    }
    let mut i = 0;
    while i < items.len() {
        let x = items[i];
        for r in ring.elements() {
            push(ring.mul(r, x), &mut set, &mut items);
        }
        for j in 0..=i {
            push(ring.add(x, items[j]), &mut set, &mut items);
        }
        i += 1;
    }
    set
}

/// Greedy generating set: repeatedly pick the element whose addition
/// grows the right-closure the most (ties broken by element index).
/// Deterministic, and small enough for the splitting searches.
pub(crate) fn greedy_generators(ring: &FiniteRing, members: &ElemSet) -> Vec<usize> {
    let mut gens: Vec<usize> = Vec::new();
    let mut span = right_closure(ring, None, &[]);
    while span != *members {
        let mut best: Option<(usize, usize)> = None; // (gain, element)
        for e in members.iter() {
            if span.contains(e) {
                continue;
            }
            let grown = right_closure(ring, Some(&span), &[e]);
            let gain = grown.len();
            match best {
                Some((g, _)) if g >= gain => {}
                _ => best = Some((gain, e)),
            }
        }
        let (_, e) = best.expect("members not reachable from its own elements");
        span = right_closure(ring, Some(&span), &[e]);
        gens.push(e);
    }
    gens
}

fn assert_right_closed(ring: &FiniteRing, members: &ElemSet) {
    for a in members.iter() {
        for r in ring.elements() {
            debug_assert!(members.contains(ring.mul(a, r)), "not right closed");
        }
        for b in members.iter() {
            debug_assert!(members.contains(ring.add(a, b)), "not additively closed");
        }
    }
}

fn make_right_ideal(ring: &FiniteRing, members: ElemSet) -> RightIdeal {
    assert_right_closed(ring, &members);
    let generators = greedy_generators(ring, &members);
    RightIdeal { members, generators }
}

/// `{ r : x * r = 0 for every x in xs }`, always a right ideal.
pub fn right_annihilator(ring: &FiniteRing, xs: &[usize]) -> RightIdeal {
    let members = ElemSet::from_iter(
        ring.order(),
        ring.elements()
            .filter(|&r| xs.iter().all(|&x| ring.mul(x, r) == ring.zero())),
    );
    make_right_ideal(ring, members)
}

/// `{ r : r * x = 0 for every x in xs }`, always a left ideal.
pub fn left_annihilator(ring: &FiniteRing, xs: &[usize]) -> LeftIdeal {
    let members = ElemSet::from_iter(
        ring.order(),
        ring.elements()
            .filter(|&r| xs.iter().all(|&x| ring.mul(r, x) == ring.zero())),
    );
    // left-sided closure check
    for a in members.iter() {
        for r in ring.elements() {
            debug_assert!(members.contains(ring.mul(r, a)));
        }
    }
    let mut gens: Vec<usize> = Vec::new();
    let mut span = left_closure(ring, &[]);
    while span != members {
        let e = members.iter().find(|&e| !span.contains(e)).unwrap();
        gens.push(e);
        span = left_closure(ring, &gens);
    }
    LeftIdeal {
        members,
        generators: gens,
    }
}

/// All idempotents, in ascending element order.
pub fn idempotents(ring: &FiniteRing) -> Vec<usize> {
    ring.elements().filter(|&e| ring.is_idempotent(e)).collect()
}

/// Every right ideal of the ring, enumerated by closure-BFS over
/// generator extensions and sorted by (size, bitset).
pub fn right_ideals(ring: &FiniteRing, caps: &Caps) -> Result<Vec<RightIdeal>, RingError> {
    let mut seen: Vec<ElemSet> = vec![right_closure(ring, None, &[])];
    let mut i = 0;
    while i < seen.len() {
        let current = seen[i].clone();
        for a in ring.elements() {
            if current.contains(a) {
                continue;
            }
            let grown = right_closure(ring, Some(&current), &[a]);
            if !seen.contains(&grown) {
                if seen.len() >= caps.ideal_count {
                    return Err(RingError::Capacity(CapExceeded {
                        cap: "ideal_count",
                        limit: caps.ideal_count,
                        actual: seen.len() + 1,
                    }));
                }
                seen.push(grown);
            }
        }
        i += 1;
    }
    seen.sort();
    Ok(seen.into_iter().map(|m| make_right_ideal(ring, m)).collect())
}

/// The Jacobson radical `{ x : 1 - r*x is invertible for all r }`,
/// returned as a right ideal (it is in fact two-sided; verified).
pub fn jacobson_radical(ring: &FiniteRing) -> RightIdeal {
    let members = ElemSet::from_iter(
        ring.order(),
        ring.elements().filter(|&x| {
            ring.elements()
                .all(|r| ring.is_unit(ring.sub(ring.one(), ring.mul(r, x))))
        }),
    );
    // two-sidedness
    for a in members.iter() {
        for r in ring.elements() {
            debug_assert!(members.contains(ring.mul(r, a)), "radical not left closed");
            debug_assert!(members.contains(ring.mul(a, r)), "radical not right closed");
        }
    }
    make_right_ideal(ring, members)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finring::ring::{build_ring, RingSpec};

    fn zmod(n: u32) -> crate::finring::RingRef {
        build_ring(&RingSpec::Zmod(n), &Caps::default()).unwrap()
    }

    #[test]
    fn annihilator_of_two_in_z4() {
        let r = zmod(4);
        let ann = right_annihilator(&r, &[2]);
        assert_eq!(ann.members.to_vec(), vec![0, 2]);
    }

    #[test]
    fn annihilator_of_zero_and_one() {
        let r = zmod(6);
        assert_eq!(right_annihilator(&r, &[0]).members.len(), 6);
        assert_eq!(right_annihilator(&r, &[1]).members.to_vec(), vec![0]);
    }

    #[test]
    fn left_annihilator_matches_right_for_commutative() {
        let r = zmod(8);
        for x in r.elements() {
            assert_eq!(
                left_annihilator(&r, &[x]).members,
                right_annihilator(&r, &[x]).members
            );
        }
    }

    #[test]
    fn idempotents_of_small_rings() {
        assert_eq!(idempotents(&zmod(6)), vec![0, 1, 3, 4]);
        assert_eq!(idempotents(&zmod(4)), vec![0, 1]);
        assert_eq!(idempotents(&zmod(5)), vec![0, 1]);
    }

    #[test]
    fn ideal_counts() {
        let caps = Caps::default();
        let z4 = zmod(4);
        let ideals = right_ideals(&z4, &caps).unwrap();
        assert_eq!(ideals.len(), 3);
        assert_eq!(ideals[1].members.to_vec(), vec![0, 2]);

        assert_eq!(right_ideals(&zmod(5), &caps).unwrap().len(), 2);

        let z6 = zmod(6);
        let ideals = right_ideals(&z6, &caps).unwrap();
        let sets: Vec<Vec<usize>> = ideals.iter().map(|i| i.members.to_vec()).collect();
        assert_eq!(
            sets,
            vec![vec![0], vec![0, 3], vec![0, 2, 4], vec![0, 1, 2, 3, 4, 5]]
        );
    }

    #[test]
    fn ideal_generators_regenerate_members() {
        let caps = Caps::default();
        for n in [4, 6, 12] {
            let r = zmod(n);
            for ideal in right_ideals(&r, &caps).unwrap() {
                let regrown = right_closure(&r, None, &ideal.generators);
                assert_eq!(regrown, ideal.members);
            }
        }
    }

    #[test]
    fn jacobson_radicals() {
        assert_eq!(jacobson_radical(&zmod(4)).members.to_vec(), vec![0, 2]);
        assert_eq!(jacobson_radical(&zmod(6)).members.to_vec(), vec![0]);
        assert_eq!(jacobson_radical(&zmod(5)).members.to_vec(), vec![0]);
    }
}
