//! Cross-cutting algebraic invariants, checked over a sample of rings
//! and modules (the full corpus-quantified sweeps live in the
//! verification suite of the CLI crate).

use proptest::prelude::*;

use rickart_core::caps::Caps;
use rickart_core::elemset::ElemSet;
use rickart_core::finmod::{
    cyclic_module, direct_sum, hom_set, is_closed_with, is_direct_summand_with, is_essential_in,
    regular_module, submodule_sum, submodules, ModuleRef,
};
use rickart_core::finring::{
    build_ring, idempotents, right_annihilator, right_closure, RingRef, RingSpec,
};
use rickart_core::zmodsnf::{
    in_image, smith_normal_form, zhom_kernel, BigMat, FgZModule, IntMat, ZModHom,
};

fn caps() -> Caps {
    Caps::default()
}

fn sample_rings() -> Vec<RingRef> {
    let specs = vec![
        RingSpec::Zmod(4),
        RingSpec::Zmod(6),
        RingSpec::Zmod(12),
        RingSpec::Product(vec![RingSpec::Zmod(2), RingSpec::Zmod(2)]),
        RingSpec::Matrix {
            base: Box::new(RingSpec::Zmod(2)),
            size: 2,
        },
        RingSpec::PolyQuotient {
            base: Box::new(RingSpec::Zmod(2)),
            coeffs: vec![1, 1, 1],
        },
        RingSpec::PolyQuotient {
            base: Box::new(RingSpec::Zmod(4)),
            coeffs: vec![0, 0, 1],
        },
    ];
    specs
        .into_iter()
        .map(|s| build_ring(&s, &caps()).unwrap())
        .collect()
}

fn sample_modules() -> Vec<ModuleRef> {
    let z2 = build_ring(&RingSpec::Zmod(2), &caps()).unwrap();
    let z4 = build_ring(&RingSpec::Zmod(4), &caps()).unwrap();
    let z6 = build_ring(&RingSpec::Zmod(6), &caps()).unwrap();
    let c = |r: &RingRef, d: u32| cyclic_module(r, d, &caps()).unwrap();
    let mut out: Vec<ModuleRef> = vec![
        regular_module(&z4, &caps()).unwrap().module,
        regular_module(&z6, &caps()).unwrap().module,
        direct_sum(&c(&z2, 2), &c(&z2, 2), &caps()).unwrap(),
        direct_sum(&c(&z4, 2), &c(&z4, 4), &caps()).unwrap(),
        direct_sum(&c(&z6, 2), &c(&z6, 3), &caps()).unwrap(),
    ];
    let mat = build_ring(
        &RingSpec::Matrix {
            base: Box::new(RingSpec::Zmod(2)),
            size: 2,
        },
        &caps(),
    )
    .unwrap();
    out.push(regular_module(&mat, &caps()).unwrap().module);
    out
}

#[test]
fn idempotent_peirce_decomposition() {
    // eR and (1-e)R intersect trivially and sum to R
    for ring in sample_rings() {
        for e in idempotents(&ring) {
            let f = ring.sub(ring.one(), e);
            let er = ElemSet::from_iter(ring.order(), ring.elements().map(|r| ring.mul(e, r)));
            let fr = ElemSet::from_iter(ring.order(), ring.elements().map(|r| ring.mul(f, r)));
            let meet = er.intersection(&fr);
            assert_eq!(meet.len(), 1);
            assert!(meet.contains(ring.zero()));
            let mut sum = ElemSet::empty(ring.order());
            for a in er.iter() {
                for b in fr.iter() {
                    sum.insert(ring.add(a, b));
                }
            }
            assert_eq!(sum.len(), ring.order(), "e = {e} in {}", ring.label());
        }
    }
}

proptest! {
    #[test]
    fn annihilator_antitonicity(which in 0usize..7, mut xs in prop::collection::vec(0usize..16, 0..6), mut ys in prop::collection::vec(0usize..16, 0..4)) {
        let rings = sample_rings();
        let ring = &rings[which % rings.len()];
        xs.iter_mut().for_each(|x| *x %= ring.order());
        ys.iter_mut().for_each(|y| *y %= ring.order());
        // Y extends X, so r(Y) is contained in r(X)
        let mut bigger = xs.clone();
        bigger.extend_from_slice(&ys);
        let r_x = right_annihilator(ring, &xs).members;
        let r_y = right_annihilator(ring, &bigger).members;
        prop_assert!(r_y.is_subset(&r_x));
        // r(X) equals the intersection of the singleton annihilators
        let mut meet = ElemSet::full(ring.order());
        for &x in &xs {
            meet = meet.intersection(&right_annihilator(ring, &[x]).members);
        }
        prop_assert_eq!(r_x, meet);
    }
}

#[test]
fn ideal_generators_are_consistent() {
    for ring in sample_rings() {
        for x in ring.elements() {
            let ann = right_annihilator(&ring, &[x]);
            let regrown = right_closure(&ring, None, &ann.generators);
            assert_eq!(regrown, ann.members);
        }
    }
}

#[test]
fn kernel_image_sizes_and_composites() {
    let caps = caps();
    for m in sample_modules() {
        let endos = hom_set(&m, &m, &caps).unwrap();
        for phi in &endos {
            let kernel = phi.kernel();
            let image = phi.image();
            assert_eq!(kernel.len() * image.len(), m.size(), "{}", m.label());
            // kernel(phi) is contained in kernel(psi . phi)
            for psi in endos.iter().take(8) {
                let comp = psi.after(phi);
                for x in kernel.members.iter() {
                    assert_eq!(comp.apply(x), 0);
                }
            }
        }
    }
}

#[test]
fn summand_routes_agree_and_summands_are_closed() {
    let caps = caps();
    for m in sample_modules() {
        let subs = submodules(&m, &caps).unwrap();
        let endos = hom_set(&m, &m, &caps).unwrap();
        for n in &subs {
            let by_complement = is_direct_summand_with(&m, n, &subs);
            let by_idempotent = endos
                .iter()
                .any(|e| e.is_idempotent() && e.image().members == n.members);
            assert_eq!(
                by_complement.holds(),
                by_idempotent,
                "routes disagree on {:?} in {}",
                n.members.to_vec(),
                m.label()
            );
            if by_complement.holds() {
                assert!(is_closed_with(&m, n, &subs), "summand not closed");
                let cert = by_complement.certificate.unwrap();
                assert!(cert.idempotent.is_idempotent());
                assert_eq!(cert.idempotent.image().members, n.members);
                assert_eq!(cert.idempotent.kernel().members, cert.complement.members);
            }
        }
    }
}

#[test]
fn essentiality_is_transitive_on_chains() {
    let caps = caps();
    for m in sample_modules() {
        if m.size() > 16 {
            continue;
        }
        let subs = submodules(&m, &caps).unwrap();
        let full = ElemSet::full(m.size());
        for a in &subs {
            for b in &subs {
                if !a.members.is_subset(&b.members) {
                    continue;
                }
                let a_in_b = is_essential_in(&m, &a.members, &b.members);
                let b_in_m = is_essential_in(&m, &b.members, &full);
                if a_in_b && b_in_m {
                    assert!(
                        is_essential_in(&m, &a.members, &full),
                        "transitivity failed in {}",
                        m.label()
                    );
                }
            }
        }
    }
}

#[test]
fn modular_law_spot_check() {
    let caps = caps();
    for m in sample_modules() {
        if m.size() > 16 {
            continue;
        }
        let subs = submodules(&m, &caps).unwrap();
        for k in &subs {
            for a in &subs {
                if !k.members.is_subset(&a.members) {
                    continue;
                }
                for d in &subs {
                    let lhs = a
                        .members
                        .intersection(&submodule_sum(&m, &k.members, &d.members));
                    let rhs = submodule_sum(
                        &m,
                        &k.members,
                        &a.members.intersection(&d.members),
                    );
                    assert_eq!(lhs, rhs, "modular law failed in {}", m.label());
                }
            }
        }
    }
}

#[test]
fn hom_counts_match_the_gcd_formula() {
    // finite abelian groups over their exponent ring: the hom count
    // between cyclic factors is the gcd of the orders
    let caps = caps();
    let cases: Vec<(u32, Vec<u32>)> = vec![
        (4, vec![2, 4]),
        (2, vec![2, 2]),
        (6, vec![6]),
        (8, vec![2, 8]),
        (12, vec![2, 12]),
    ];
    for (exponent, orders) in cases {
        let ring = build_ring(&RingSpec::Zmod(exponent), &caps).unwrap();
        let factors: Vec<ModuleRef> = orders
            .iter()
            .map(|&d| cyclic_module(&ring, d, &caps).unwrap())
            .collect();
        let m = factors
            .iter()
            .skip(1)
            .fold(factors[0].clone(), |acc, f| direct_sum(&acc, f, &caps).unwrap());
        let expected: usize = orders
            .iter()
            .flat_map(|&a| orders.iter().map(move |&b| num_gcd(a, b) as usize))
            .product();
        let actual = hom_set(&m, &m, &caps).unwrap().len();
        assert_eq!(actual, expected, "End size for {orders:?} over zmod({exponent})");
    }
}

fn num_gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        num_gcd(b, a % b)
    }
}

fn matrix_strategy(max_dim: usize, bound: i64) -> impl Strategy<Value = IntMat> {
    (1..=max_dim, 1..=max_dim).prop_flat_map(move |(r, c)| {
        prop::collection::vec(prop::collection::vec(-bound..=bound, c), r)
            .prop_map(|rows| IntMat::from_rows(rows).unwrap())
    })
}

proptest! {
    #[test]
    fn snf_is_valid(a in matrix_strategy(6, 20)) {
        let snf = smith_normal_form(&a).unwrap();
        let lhs = snf.u.mul(&BigMat::from_mat(&a)).mul(&snf.v);
        prop_assert_eq!(&lhs, &BigMat::from_mat(&snf.d));
        prop_assert_eq!(snf.u.determinant().abs(), 1.into());
        prop_assert_eq!(snf.v.determinant().abs(), 1.into());
        let n = a.rows().min(a.cols());
        let diag: Vec<i64> = (0..n).map(|i| snf.d[(i, i)]).collect();
        for w in diag.windows(2) {
            prop_assert!(w[0] >= 0 && w[1] >= 0);
            if w[1] != 0 {
                prop_assert!(w[0] != 0 && w[1] % w[0] == 0);
            }
        }
    }

    #[test]
    fn invariant_factors_match_gcd_of_minors(a in matrix_strategy(4, 20)) {
        let snf = smith_normal_form(&a).unwrap();
        let via_snf = snf.invariant_factors();
        let via_minors = gcd_of_minors_factors(&a);
        prop_assert_eq!(via_snf, via_minors);
    }
}

/// Independent oracle: the k-th invariant factor is the ratio of the
/// gcd of all k x k minors to the gcd of all (k-1) x (k-1) minors.
fn gcd_of_minors_factors(a: &IntMat) -> Vec<i64> {
    let (r, c) = (a.rows(), a.cols());
    let n = r.min(c);
    let mut g_prev: i64 = 1;
    let mut out = Vec::new();
    for k in 1..=n {
        let mut g: i64 = 0;
        for rows in combinations(r, k) {
            for cols in combinations(c, k) {
                let minor_rows: Vec<Vec<i64>> = rows
                    .iter()
                    .map(|&i| cols.iter().map(|&j| a[(i, j)]).collect())
                    .collect();
                let m = IntMat::from_rows(minor_rows).unwrap();
                let det = i64::try_from(BigMat::from_mat(&m).determinant()).unwrap();
                g = gcd64(g, det);
            }
        }
        if g == 0 {
            break; // rank reached
        }
        out.push(g / g_prev);
        g_prev = g;
    }
    out
}

fn gcd64(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd64(b, a % b)
    }
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(start: usize, n: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for i in start..n {
            current.push(i);
            rec(i + 1, n, k, current, out);
            current.pop();
        }
    }
    rec(0, n, k, &mut current, &mut out);
    out
}

/// Random valid homs between small mixed modules: the computed kernel
/// inclusion composes to zero and captures every zero of the map.
proptest! {
    #[test]
    fn zhom_kernel_is_sound_and_complete(
        src_rank in 0usize..=2,
        tgt_rank in 0usize..=2,
        src_pick in 0usize..4,
        tgt_pick in 0usize..4,
        entries in prop::collection::vec(-6i64..=6, 16),
        probes in prop::collection::vec(-4i64..=4, 24),
    ) {
        let torsions: [&[i64]; 4] = [&[], &[2], &[4], &[2, 4]];
        let src = FgZModule::new(src_rank, torsions[src_pick].to_vec()).unwrap();
        let tgt = FgZModule::new(tgt_rank, torsions[tgt_pick].to_vec()).unwrap();
        let mut mat = IntMat::zeros(tgt.gens(), src.gens());
        let mut it = entries.iter();
        for i in 0..tgt.gens() {
            for j in 0..src.gens() {
                let raw = *it.next().unwrap();
                // force block validity
                mat[(i, j)] = match (tgt.gen_order(i), src.gen_order(j)) {
                    (None, Some(_)) => 0,
                    (Some(d), Some(e)) => raw * (d / gcd64(d, e)),
                    _ => raw,
                };
            }
        }
        let h = ZModHom::new(src.clone(), tgt, mat).unwrap();
        let kernel = zhom_kernel(&h).unwrap();
        // sound: h annihilates the kernel inclusion
        let composite = h.after(&kernel.inclusion).unwrap();
        prop_assert!(composite.is_zero());
        // complete: probing elements that map to zero lie in the image
        let mut it = probes.iter();
        let mut coords = vec![0i64; src.gens()];
        for c in coords.iter_mut() {
            *c = *it.next().unwrap_or(&0);
        }
        let coords = src.canonical_element(&coords);
        let image = h.apply(&coords).unwrap();
        if image.iter().all(|&x| x == 0) {
            prop_assert!(in_image(&kernel.inclusion, &coords).unwrap());
        }
    }
}
