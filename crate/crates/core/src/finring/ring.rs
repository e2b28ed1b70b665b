use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::caps::{CapExceeded, Caps};
use crate::elemset::ElemSet;

pub type RingRef = Arc<FiniteRing>;

#[derive(Debug, Error)]
pub enum RingError {
    #[error("ring axiom violated: {axiom} ({detail})")]
    Axiom { axiom: &'static str, detail: String },
    #[error("{0}")]
    Capacity(CapExceeded),
    #[error("invalid ring constructor: {0}")]
    InvalidSpec(String),
}

/// Constructor expression for [`build_ring`]. The `label` of the
/// resulting ring records the expression.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RingSpec {
    /// The ring of integers modulo `n`, `n >= 1`.
    Zmod(u32),
    /// Componentwise product of two or more rings.
    Product(Vec<RingSpec>),
    /// `k x k` matrices over a base ring.
    Matrix { base: Box<RingSpec>, size: usize },
    /// `Z_n[x] / (f)` for a monic polynomial `f`, coefficients listed
    /// low degree first with trailing coefficient 1.
    PolyQuotient { base: Box<RingSpec>, coeffs: Vec<u32> },
    /// Explicit Cayley tables.
    Table {
        order: usize,
        add: Vec<Vec<usize>>,
        mul: Vec<Vec<usize>>,
        zero: usize,
        one: usize,
    },
}

impl RingSpec {
    pub fn label(&self) -> String {
        match self {
            RingSpec::Zmod(n) => format!("zmod({n})"),
            RingSpec::Product(parts) => {
                let inner: Vec<String> = parts.iter().map(|p| p.label()).collect();
                format!("product({})", inner.join(","))
            }
            RingSpec::Matrix { base, size } => format!("matrix({},{})", base.label(), size),
            RingSpec::PolyQuotient { base, coeffs } => {
                let cs: Vec<String> = coeffs.iter().map(|c| c.to_string()).collect();
                format!("poly_quotient({},[{}])", base.label(), cs.join(","))
            }
            RingSpec::Table { order, .. } => format!("table(order={order})"),
        }
    }
}

/// A finite ring with identity, elements indexed `0..order`.
#[derive(Debug, Clone)]
pub struct FiniteRing {
    order: usize,
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
    zero: usize,
    one: usize,
    label: String,
}

impl PartialEq for FiniteRing {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order
            && self.zero == other.zero
            && self.one == other.one
            && self.add == other.add
            && self.mul == other.mul
    }
}
impl Eq for FiniteRing {}

impl FiniteRing {
    pub fn order(&self) -> usize {
        self.order
    }
    pub fn zero(&self) -> usize {
        self.zero
    }
    pub fn one(&self) -> usize {
        self.one
    }
    pub fn label(&self) -> &str {
        &self.label
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.order + b] as usize
    }
    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b] as usize
    }
    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.neg[a] as usize
    }
    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn is_idempotent(&self, e: usize) -> bool {
        self.mul(e, e) == e
    }

    /// True when `a` has a right inverse. Finite rings are
    /// Dedekind-finite, so this coincides with two-sided invertibility.
    pub fn is_unit(&self, a: usize) -> bool {
        self.elements().any(|y| self.mul(a, y) == self.one)
    }

    /// Raw tables, used by the serialization layer.
    pub fn tables(&self) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
        let row = |t: &Vec<u16>, a: usize| {
            (0..self.order)
                .map(|b| t[a * self.order + b] as usize)
                .collect::<Vec<_>>()
        };
        let add = (0..self.order).map(|a| row(&self.add, a)).collect();
        let mul = (0..self.order).map(|a| row(&self.mul, a)).collect();
        (add, mul)
    }

    fn from_raw(
        order: usize,
        add: Vec<u16>,
        mul: Vec<u16>,
        zero: usize,
        one: usize,
        label: String,
    ) -> Result<FiniteRing, RingError> {
        let mut ring = FiniteRing {
            order,
            add,
            mul,
            neg: vec![0; order],
            zero,
            one,
            label,
        };
        verify_axioms(&ring)?;
        for a in 0..order {
            let b = (0..order)
                .find(|&b| ring.add(a, b) == zero)
                .expect("inverse existence already verified");
            ring.neg[a] = b as u16;
        }
        Ok(ring)
    }
}

fn verify_axioms(r: &FiniteRing) -> Result<(), RingError> {
    let n = r.order;
    let fail = |axiom: &'static str, detail: String| Err(RingError::Axiom { axiom, detail });
    if n == 0 {
        return fail("nonempty", "order must be at least 1".into());
    }
    if r.zero >= n || r.one >= n {
        return fail("element range", "zero/one index out of range".into());
    }
    if r.add.len() != n * n || r.mul.len() != n * n {
        return fail("table shape", "tables must be order x order".into());
    }
    for v in r.add.iter().chain(r.mul.iter()) {
        if (*v as usize) >= n {
            return fail("element range", format!("table entry {v} out of range"));
        }
    }
    for a in 0..n {
        if r.add(r.zero, a) != a || r.add(a, r.zero) != a {
            return fail("additive identity", format!("0 + {a} != {a}"));
        }
        if r.mul(r.one, a) != a || r.mul(a, r.one) != a {
            return fail("multiplicative identity", format!("1 * {a} != {a}"));
        }
        if !(0..n).any(|b| r.add(a, b) == r.zero) {
            return fail("additive inverse", format!("no -{a}"));
        }
    }
    for a in 0..n {
        for b in 0..n {
            if r.add(a, b) != r.add(b, a) {
                return fail("addition commutative", format!("{a} + {b} != {b} + {a}"));
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            let ab = r.add(a, b);
            let ab_m = r.mul(a, b);
            for c in 0..n {
                if r.add(ab, c) != r.add(a, r.add(b, c)) {
                    return fail("addition associative", format!("({a}+{b})+{c}"));
                }
                if r.mul(ab_m, c) != r.mul(a, r.mul(b, c)) {
                    return fail("multiplication associative", format!("({a}*{b})*{c}"));
                }
                if r.mul(a, r.add(b, c)) != r.add(r.mul(a, b), r.mul(a, c)) {
                    return fail("left distributivity", format!("{a}*({b}+{c})"));
                }
                if r.mul(r.add(a, b), c) != r.add(r.mul(a, c), r.mul(b, c)) {
                    return fail("right distributivity", format!("({a}+{b})*{c}"));
                }
            }
        }
    }
    Ok(())
}

/// Builds and validates a ring from a constructor expression.
pub fn build_ring(spec: &RingSpec, caps: &Caps) -> Result<RingRef, RingError> {
    let ring = build_inner(spec, caps)?;
    Ok(Arc::new(ring))
}

/// Builds a ring directly from tables with a caller-chosen label
/// (used for endomorphism rings and quotients); validates the axioms
/// like every other constructor.
pub fn ring_from_tables(
    order: usize,
    add: Vec<Vec<usize>>,
    mul: Vec<Vec<usize>>,
    zero: usize,
    one: usize,
    label: String,
    caps: &Caps,
) -> Result<RingRef, RingError> {
    check_order(order, caps)?;
    let flatten = |t: Vec<Vec<usize>>| -> Result<Vec<u16>, RingError> {
        if t.len() != order || t.iter().any(|row| row.len() != order) {
            return Err(RingError::Axiom {
                axiom: "table shape",
                detail: "tables must be order x order".into(),
            });
        }
        Ok(t.into_iter().flatten().map(|v| v as u16).collect())
    };
    let ring = FiniteRing::from_raw(order, flatten(add)?, flatten(mul)?, zero, one, label)?;
    Ok(Arc::new(ring))
}

fn check_order(order: usize, caps: &Caps) -> Result<(), RingError> {
    if order > caps.ring_order_construct {
        return Err(RingError::Capacity(CapExceeded {
            cap: "ring_order_construct",
            limit: caps.ring_order_construct,
            actual: order,
        }));
    }
    Ok(())
}

fn build_inner(spec: &RingSpec, caps: &Caps) -> Result<FiniteRing, RingError> {
    match spec {
        RingSpec::Zmod(n) => {
            if *n < 1 {
                return Err(RingError::InvalidSpec("zmod(n) requires n >= 1".into()));
            }
            let n = *n as usize;
            check_order(n, caps)?;
            let mut add = vec![0u16; n * n];
            let mut mul = vec![0u16; n * n];
            for a in 0..n {
                for b in 0..n {
                    add[a * n + b] = ((a + b) % n) as u16;
                    mul[a * n + b] = ((a * b) % n) as u16;
                }
            }
            FiniteRing::from_raw(n, add, mul, 0, 1 % n, spec.label())
        }
        RingSpec::Product(parts) => {
            if parts.len() < 2 {
                return Err(RingError::InvalidSpec(
                    "product requires at least two factors".into(),
                ));
            }
            let factors: Vec<FiniteRing> = parts
                .iter()
                .map(|p| build_inner(p, caps))
                .collect::<Result<_, _>>()?;
            let order: usize = factors.iter().map(|f| f.order).product();
            check_order(order, caps)?;
            // index = sum of component indices weighted right to left
            let mut strides = vec![1usize; factors.len()];
            for i in (0..factors.len().saturating_sub(1)).rev() {
                strides[i] = strides[i + 1] * factors[i + 1].order;
            }
            let decode = |x: usize| -> Vec<usize> {
                factors
                    .iter()
                    .zip(&strides)
                    .map(|(f, s)| (x / s) % f.order)
                    .collect()
            };
            let encode = |parts: &[usize]| -> usize {
                parts.iter().zip(&strides).map(|(p, s)| p * s).sum()
            };
            let mut add = vec![0u16; order * order];
            let mut mul = vec![0u16; order * order];
            for x in 0..order {
                let xs = decode(x);
                for y in 0..order {
                    let ys = decode(y);
                    let sums: Vec<usize> = factors
                        .iter()
                        .enumerate()
                        .map(|(i, f)| f.add(xs[i], ys[i]))
                        .collect();
                    let prods: Vec<usize> = factors
                        .iter()
                        .enumerate()
                        .map(|(i, f)| f.mul(xs[i], ys[i]))
                        .collect();
                    add[x * order + y] = encode(&sums) as u16;
                    mul[x * order + y] = encode(&prods) as u16;
                }
            }
            let zero = encode(&factors.iter().map(|f| f.zero).collect::<Vec<_>>());
            let one = encode(&factors.iter().map(|f| f.one).collect::<Vec<_>>());
            FiniteRing::from_raw(order, add, mul, zero, one, spec.label())
        }
        RingSpec::Matrix { base, size } => {
            let k = *size;
            if k < 1 {
                return Err(RingError::InvalidSpec("matrix size must be >= 1".into()));
            }
            let b = build_inner(base, caps)?;
            let entries = k * k;
            let order = b
                .order
                .checked_pow(entries as u32)
                .filter(|&o| o <= caps.ring_order_construct)
                .ok_or(RingError::Capacity(CapExceeded {
                    cap: "ring_order_construct",
                    limit: caps.ring_order_construct,
                    actual: usize::MAX,
                }))?;
            check_order(order, caps)?;
            let decode = |x: usize| -> Vec<usize> {
                let mut v = Vec::with_capacity(entries);
                let mut x = x;
                for _ in 0..entries {
                    v.push(x % b.order);
                    x /= b.order;
                }
                v
            };
            let encode = |m: &[usize]| -> usize {
                m.iter().rev().fold(0, |acc, &e| acc * b.order + e)
            };
            let mut add = vec![0u16; order * order];
            let mut mul = vec![0u16; order * order];
            for x in 0..order {
                let xm = decode(x);
                for y in 0..order {
                    let ym = decode(y);
                    let mut sm = vec![0usize; entries];
                    let mut pm = vec![0usize; entries];
                    for i in 0..k {
                        for j in 0..k {
                            sm[i * k + j] = b.add(xm[i * k + j], ym[i * k + j]);
                            let mut acc = b.zero;
                            for l in 0..k {
                                acc = b.add(acc, b.mul(xm[i * k + l], ym[l * k + j]));
                            }
                            pm[i * k + j] = acc;
                        }
                    }
                    add[x * order + y] = encode(&sm) as u16;
                    mul[x * order + y] = encode(&pm) as u16;
                }
            }
            let zero = encode(&vec![b.zero; entries]);
            let mut one_m = vec![b.zero; entries];
            for i in 0..k {
                one_m[i * k + i] = b.one;
            }
            let one = encode(&one_m);
            FiniteRing::from_raw(order, add, mul, zero, one, spec.label())
        }
        RingSpec::PolyQuotient { base, coeffs } => {
            let RingSpec::Zmod(n) = **base else {
                return Err(RingError::InvalidSpec(
                    "poly_quotient base must be zmod(n)".into(),
                ));
            };
            if n < 1 {
                return Err(RingError::InvalidSpec("zmod(n) requires n >= 1".into()));
            }
            let n = n as usize;
            if coeffs.len() < 2 {
                return Err(RingError::InvalidSpec(
                    "poly_quotient needs a polynomial of degree >= 1".into(),
                ));
            }
            if *coeffs.last().unwrap() as usize % n != 1 % n {
                return Err(RingError::InvalidSpec(
                    "poly_quotient modulus must be monic".into(),
                ));
            }
            let deg = coeffs.len() - 1;
            let f: Vec<usize> = coeffs.iter().map(|&c| c as usize % n).collect();
            let order = n
                .checked_pow(deg as u32)
                .filter(|&o| o <= caps.ring_order_construct)
                .ok_or(RingError::Capacity(CapExceeded {
                    cap: "ring_order_construct",
                    limit: caps.ring_order_construct,
                    actual: usize::MAX,
                }))?;
            check_order(order, caps)?;
            let decode = |x: usize| -> Vec<usize> {
                let mut v = Vec::with_capacity(deg);
                let mut x = x;
                for _ in 0..deg {
                    v.push(x % n);
                    x /= n;
                }
                v
            };
            let encode =
                |p: &[usize]| -> usize { p.iter().rev().fold(0, |acc, &c| acc * n + c) };
            let reduce = |prod: &mut Vec<usize>| {
                // divide by the monic modulus, keeping the remainder
                for m in (deg..prod.len()).rev() {
                    let q = prod[m];
                    if q == 0 {
                        continue;
                    }
                    prod[m] = 0;
                    for (i, &fi) in f.iter().enumerate().take(deg) {
                        let idx = m - deg + i;
                        prod[idx] = (prod[idx] + n * n - (q * fi) % n) % n;
                    }
                }
            };
            let mut add = vec![0u16; order * order];
            let mut mul = vec![0u16; order * order];
            for x in 0..order {
                let xp = decode(x);
                for y in 0..order {
                    let yp = decode(y);
                    let sum: Vec<usize> =
                        xp.iter().zip(&yp).map(|(a, b)| (a + b) % n).collect();
                    let mut prod = vec![0usize; 2 * deg - 1];
                    for (i, &a) in xp.iter().enumerate() {
                        for (j, &b) in yp.iter().enumerate() {
                            prod[i + j] = (prod[i + j] + a * b) % n;
                        }
                    }
                    reduce(&mut prod);
                    prod.truncate(deg);
                    add[x * order + y] = encode(&sum) as u16;
                    mul[x * order + y] = encode(&prod) as u16;
                }
            }
            let mut one_p = vec![0usize; deg];
            one_p[0] = 1 % n;
            FiniteRing::from_raw(order, add, mul, 0, encode(&one_p), spec.label())
        }
        RingSpec::Table {
            order,
            add,
            mul,
            zero,
            one,
        } => {
            check_order(*order, caps)?;
            let flatten = |t: &Vec<Vec<usize>>| -> Result<Vec<u16>, RingError> {
                if t.len() != *order || t.iter().any(|row| row.len() != *order) {
                    return Err(RingError::Axiom {
                        axiom: "table shape",
                        detail: "tables must be order x order".into(),
                    });
                }
                Ok(t.iter().flatten().map(|&v| v as u16).collect())
            };
            FiniteRing::from_raw(*order, flatten(add)?, flatten(mul)?, *zero, *one, spec.label())
        }
    }
}

/// Quotient of `ring` by a two-sided ideal, as explicit coset tables.
/// Coset representatives are the least element index in each coset.
pub fn quotient_ring(ring: &FiniteRing, ideal: &ElemSet) -> Result<RingRef, RingError> {
    let n = ring.order();
    if !ideal.contains(ring.zero()) {
        return Err(RingError::InvalidSpec("ideal must contain zero".into()));
    }
    for a in ideal.iter() {
        for b in ideal.iter() {
            if !ideal.contains(ring.add(a, b)) {
                return Err(RingError::InvalidSpec("set not closed under addition".into()));
            }
        }
        for r in ring.elements() {
            if !ideal.contains(ring.mul(a, r)) || !ideal.contains(ring.mul(r, a)) {
                return Err(RingError::InvalidSpec("set is not a two-sided ideal".into()));
            }
        }
    }
    let rep = |x: usize| -> usize {
        ideal.iter().map(|j| ring.add(x, j)).min().unwrap_or(x)
    };
    let reps: Vec<usize> = (0..n).map(rep).collect();
    let mut classes: Vec<usize> = reps.clone();
    classes.sort_unstable();
    classes.dedup();
    let class_of = |x: usize, reps: &[usize], classes: &[usize]| -> usize {
        classes.binary_search(&reps[x]).unwrap()
    };
    let q = classes.len();
    let mut add = vec![0u16; q * q];
    let mut mul = vec![0u16; q * q];
    for (i, &a) in classes.iter().enumerate() {
        for (j, &b) in classes.iter().enumerate() {
            add[i * q + j] = class_of(ring.add(a, b), &reps, &classes) as u16;
            mul[i * q + j] = class_of(ring.mul(a, b), &reps, &classes) as u16;
        }
    }
    let zero = class_of(ring.zero(), &reps, &classes);
    let one = class_of(ring.one(), &reps, &classes);
    let ring = FiniteRing::from_raw(
        q,
        add,
        mul,
        zero,
        one,
        format!("quotient({})", ring.label()),
    )?;
    Ok(Arc::new(ring))
}

/// Brute-force unital ring isomorphism search. Exists for tests, not as
/// a feature; rejects orders above 16.
pub fn ring_isomorphic(a: &FiniteRing, b: &FiniteRing) -> Result<Option<Vec<usize>>, RingError> {
    if a.order() > 16 || b.order() > 16 {
        return Err(RingError::Capacity(CapExceeded {
            cap: "isomorphism_order",
            limit: 16,
            actual: a.order().max(b.order()),
        }));
    }
    if a.order() != b.order() {
        return Ok(None);
    }
    let n = a.order();

    // Derivation plan: how each element of `a` is first produced from
    // {0, 1, generators} under + and *.
    #[derive(Clone, Copy)]
    enum Deriv {
        Seed(usize),
        Gen(usize),
        Add(usize, usize),
        Mul(usize, usize),
    }
    let mut gens: Vec<usize> = Vec::new();
    let mut derivs: Vec<Deriv> = Vec::new();
    let mut elems: Vec<usize> = Vec::new();
    let mut pos_of: Vec<Option<usize>> = vec![None; n];
    let push = |e: usize,
                d: Deriv,
                elems: &mut Vec<usize>,
                derivs: &mut Vec<Deriv>,
                pos_of: &mut Vec<Option<usize>>| {
        if pos_of[e].is_none() {
            pos_of[e] = Some(elems.len());
            elems.push(e);
            derivs.push(d);
        }
    };
    push(a.zero(), Deriv::Seed(0), &mut elems, &mut derivs, &mut pos_of);
    push(a.one(), Deriv::Seed(1), &mut elems, &mut derivs, &mut pos_of);
    loop {
        // close under both operations
        let mut i = 0;
        while i < elems.len() {
            let x = elems[i];
            let xi = pos_of[x].unwrap();
            let mut j = 0;
            while j < elems.len() {
                let y = elems[j];
                let yj = pos_of[y].unwrap();
                push(a.add(x, y), Deriv::Add(xi, yj), &mut elems, &mut derivs, &mut pos_of);
                push(a.mul(x, y), Deriv::Mul(xi, yj), &mut elems, &mut derivs, &mut pos_of);
                j += 1;
            }
            i += 1;
        }
        if elems.len() == n {
            break;
        }
        let g = (0..n).find(|&e| pos_of[e].is_none()).unwrap();
        push(g, Deriv::Gen(gens.len()), &mut elems, &mut derivs, &mut pos_of);
        gens.push(g);
    }

    // Try every assignment of generator images in `b`.
    let mut assign = vec![0usize; gens.len()];
    loop {
        let mut img = vec![usize::MAX; derivs.len()];
        for (p, d) in derivs.iter().enumerate() {
            img[p] = match *d {
                Deriv::Seed(0) => b.zero(),
                Deriv::Seed(_) => b.one(),
                Deriv::Gen(g) => assign[g],
                Deriv::Add(i, j) => b.add(img[i], img[j]),
                Deriv::Mul(i, j) => b.mul(img[i], img[j]),
            };
        }
        let mut map = vec![usize::MAX; n];
        for (p, &e) in elems.iter().enumerate() {
            map[e] = img[p];
        }
        let mut seen = vec![false; n];
        let bijective = map.iter().all(|&v| {
            if seen[v] {
                false
            } else {
                seen[v] = true;
                true
            }
        });
        if bijective {
            let hom = (0..n).all(|x| {
                (0..n).all(|y| {
                    map[a.add(x, y)] == b.add(map[x], map[y])
                        && map[a.mul(x, y)] == b.mul(map[x], map[y])
                })
            });
            if hom {
                return Ok(Some(map));
            }
        }
        // next assignment
        let mut k = 0;
        loop {
            if k == assign.len() {
                return Ok(None);
            }
            assign[k] += 1;
            if assign[k] < n {
                break;
            }
            assign[k] = 0;
            k += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn caps() -> Caps {
        Caps::default()
    }

    #[test]
    fn zmod_one_is_the_zero_ring() {
        let r = build_ring(&RingSpec::Zmod(1), &caps()).unwrap();
        assert_eq!(r.order(), 1);
        assert_eq!(r.zero(), r.one());
    }

    #[test]
    fn zmod_six_tables() {
        let r = build_ring(&RingSpec::Zmod(6), &caps()).unwrap();
        assert_eq!(r.add(4, 5), 3);
        assert_eq!(r.mul(4, 5), 2);
        assert_eq!(r.neg(2), 4);
    }

    #[test]
    fn product_of_z2_z3_is_isomorphic_to_z6() {
        let p = build_ring(
            &RingSpec::Product(vec![RingSpec::Zmod(2), RingSpec::Zmod(3)]),
            &caps(),
        )
        .unwrap();
        let z6 = build_ring(&RingSpec::Zmod(6), &caps()).unwrap();
        assert_eq!(p.order(), 6);
        assert!(ring_isomorphic(&p, &z6).unwrap().is_some());
    }

    #[test]
    fn matrix_ring_over_z2() {
        let m = build_ring(
            &RingSpec::Matrix {
                base: Box::new(RingSpec::Zmod(2)),
                size: 2,
            },
            &caps(),
        )
        .unwrap();
        assert_eq!(m.order(), 16);
        // matrix rings of size >= 2 are noncommutative
        let noncomm = m
            .elements()
            .any(|x| m.elements().any(|y| m.mul(x, y) != m.mul(y, x)));
        assert!(noncomm);
    }

    #[test]
    fn gf4_is_a_field() {
        let f4 = build_ring(
            &RingSpec::PolyQuotient {
                base: Box::new(RingSpec::Zmod(2)),
                coeffs: vec![1, 1, 1],
            },
            &caps(),
        )
        .unwrap();
        assert_eq!(f4.order(), 4);
        for a in f4.elements() {
            if a != f4.zero() {
                assert!(f4.is_unit(a), "{a} should be invertible");
            }
        }
    }

    #[test]
    fn dual_numbers_have_a_nilpotent() {
        // Z_2[x]/(x^2): the class of x squares to zero
        let r = build_ring(
            &RingSpec::PolyQuotient {
                base: Box::new(RingSpec::Zmod(2)),
                coeffs: vec![0, 0, 1],
            },
            &caps(),
        )
        .unwrap();
        assert_eq!(r.order(), 4);
        let x = 2; // coefficient vector (0, 1)
        assert_eq!(r.mul(x, x), r.zero());
    }

    #[test]
    fn bad_table_names_the_axiom() {
        // "addition" table that is not commutative
        let spec = RingSpec::Table {
            order: 2,
            add: vec![vec![0, 1], vec![0, 1]],
            mul: vec![vec![0, 0], vec![0, 1]],
            zero: 0,
            one: 1,
        };
        let err = build_ring(&spec, &caps()).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("axiom"), "unexpected error: {msg}");
    }

    #[test]
    fn order_cap_is_enforced() {
        let err = build_ring(&RingSpec::Zmod(1000), &caps()).unwrap_err();
        assert!(matches!(err, RingError::Capacity(_)));
    }

    #[test]
    fn quotient_of_z4_by_two_z4() {
        let z4 = build_ring(&RingSpec::Zmod(4), &caps()).unwrap();
        let ideal = ElemSet::from_iter(4, [0, 2]);
        let q = quotient_ring(&z4, &ideal).unwrap();
        assert_eq!(q.order(), 2);
        let z2 = build_ring(&RingSpec::Zmod(2), &caps()).unwrap();
        assert!(ring_isomorphic(&q, &z2).unwrap().is_some());
    }

    #[test]
    fn isomorphism_rejects_different_structures() {
        let z4 = build_ring(&RingSpec::Zmod(4), &caps()).unwrap();
        let p = build_ring(
            &RingSpec::Product(vec![RingSpec::Zmod(2), RingSpec::Zmod(2)]),
            &caps(),
        )
        .unwrap();
        assert!(ring_isomorphic(&z4, &p).unwrap().is_none());
    }
}
