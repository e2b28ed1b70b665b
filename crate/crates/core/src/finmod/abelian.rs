//! Decomposition of a finite abelian group into a product of cyclic
//! groups with orders in a divisibility chain.
//!
//! The group is handed in as a list of element ids plus an addition
//! law. Invariant factors are derived from element-order counts (which
//! determine the isomorphism type of a finite abelian group), and an
//! explicit basis realizing them is then found by backtracking.

use std::collections::BTreeMap;
use std::collections::BTreeSet;

/// Basis presentation of a finite abelian group.
#[derive(Debug, Clone)]
pub struct CyclicDecomposition {
    /// Factor orders, `d_1 | d_2 | ... | d_k`, all at least 2.
    pub orders: Vec<u32>,
    /// Group elements generating the factors, `basis[i]` of order `orders[i]`.
    pub basis: Vec<usize>,
    /// Coordinates of every element with respect to the basis.
    pub coords: BTreeMap<usize, Vec<u32>>,
}

pub fn decompose(
    elements: &[usize],
    zero: usize,
    add: impl Fn(usize, usize) -> usize,
) -> CyclicDecomposition {
    let n = elements.len();
    assert!(n >= 1 && elements.contains(&zero));
    if n == 1 {
        let mut coords = BTreeMap::new();
        coords.insert(zero, Vec::new());
        return CyclicDecomposition {
            orders: Vec::new(),
            basis: Vec::new(),
            coords,
        };
    }

    let order_of = |x: usize| -> u32 {
        let mut t = 1u32;
        let mut y = x;
        while y != zero {
            y = add(y, x);
            t += 1;
        }
        t
    };
    let orders_of: BTreeMap<usize, u32> = elements.iter().map(|&e| (e, order_of(e))).collect();

    // Invariant factors, largest first.
    let mut primes: Vec<u64> = Vec::new();
    let mut m = n as u64;
    let mut d = 2u64;
    while d * d <= m {
        if m % d == 0 {
            primes.push(d);
            while m % d == 0 {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        primes.push(m);
    }
    let mut factors_desc: Vec<u64> = Vec::new();
    for &p in &primes {
        // lambda_i = exponent of p in the i-th largest factor
        let mut counts: Vec<u32> = vec![0]; // log_p of #{x : p^k x = 0}
        let mut k = 1u32;
        loop {
            let pk = p.checked_pow(k).expect("group order fits in u64");
            let c = elements
                .iter()
                .filter(|&&e| {
                    let o = orders_of[&e] as u64;
                    pk % o == 0 && is_prime_power_of(o, p)
                })
                .count() as u64;
            let log = c.ilog(p as u64) as u32;
            debug_assert_eq!(p.pow(log), c, "p-torsion count must be a power of p");
            if log == *counts.last().unwrap() {
                break;
            }
            counts.push(log);
            k += 1;
        }
        let parts_ge: Vec<u32> = counts.windows(2).map(|w| w[1] - w[0]).collect();
        let max_parts = parts_ge.first().copied().unwrap_or(0);
        let lambda: Vec<u32> = (1..=max_parts)
            .map(|i| parts_ge.iter().filter(|&&r| r >= i).count() as u32)
            .collect();
        for (i, &e) in lambda.iter().enumerate() {
            if factors_desc.len() <= i {
                factors_desc.push(1);
            }
            factors_desc[i] *= p.pow(e);
        }
    }
    debug_assert_eq!(factors_desc.iter().product::<u64>(), n as u64);

    // Backtracking search for a basis realizing the factor orders.
    let span_with = |span: &BTreeSet<usize>, b: usize, ord: u32| -> BTreeSet<usize> {
        let mut out = BTreeSet::new();
        for &s in span {
            let mut m = s;
            for _ in 0..ord {
                out.insert(m);
                m = add(m, b);
            }
        }
        out
    };
    fn search(
        targets: &[u64],
        level: usize,
        span: &BTreeSet<usize>,
        basis: &mut Vec<usize>,
        elements: &[usize],
        orders_of: &BTreeMap<usize, u32>,
        span_with: &dyn Fn(&BTreeSet<usize>, usize, u32) -> BTreeSet<usize>,
    ) -> bool {
        if level == targets.len() {
            return true;
        }
        let want = targets[level] as u32;
        for &b in elements {
            if orders_of[&b] != want || span.contains(&b) {
                continue;
            }
            let grown = span_with(span, b, want);
            if grown.len() == span.len() * want as usize {
                basis.push(b);
                if search(targets, level + 1, &grown, basis, elements, orders_of, span_with) {
                    return true;
                }
                basis.pop();
            }
        }
        false
    }
    let mut basis_desc: Vec<usize> = Vec::new();
    let start: BTreeSet<usize> = [zero].into_iter().collect();
    let found = search(
        &factors_desc,
        0,
        &start,
        &mut basis_desc,
        elements,
        &orders_of,
        &span_with,
    );
    assert!(found, "abelian basis search failed; addition law is not a group");

    // Present with the divisibility chain ascending.
    let orders: Vec<u32> = factors_desc.iter().rev().map(|&d| d as u32).collect();
    let basis: Vec<usize> = basis_desc.into_iter().rev().collect();

    // Enumerate all coordinate tuples and invert the bijection.
    let mut coords: BTreeMap<usize, Vec<u32>> = BTreeMap::new();
    let k = orders.len();
    let mut tuple = vec![0u32; k];
    loop {
        let mut e = zero;
        for (i, &c) in tuple.iter().enumerate() {
            for _ in 0..c {
                e = add(e, basis[i]);
            }
        }
        let prev = coords.insert(e, tuple.clone());
        debug_assert!(prev.is_none(), "basis does not span freely");
        // next tuple, last coordinate fastest
        let mut i = k;
        loop {
            if i == 0 {
                debug_assert_eq!(coords.len(), n);
                return CyclicDecomposition { orders, basis, coords };
            }
            i -= 1;
            tuple[i] += 1;
            if tuple[i] < orders[i] {
                break;
            }
            tuple[i] = 0;
        }
    }
}

fn is_prime_power_of(mut o: u64, p: u64) -> bool {
    while o > 1 {
        if o % p != 0 {
            return false;
        }
        o /= p;
    }
    true
}
