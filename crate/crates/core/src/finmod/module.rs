use std::sync::Arc;

use serde::Serialize;
use thiserror::Error;

use crate::caps::{CapExceeded, Caps};
use crate::finmod::abelian;
use crate::finring::RingRef;

pub type ModuleRef = Arc<FiniteModule>;

#[derive(Debug, Error)]
pub enum ModuleError {
    #[error("module axiom violated: {axiom} ({detail})")]
    Axiom { axiom: &'static str, detail: String },
    #[error("{0}")]
    Capacity(CapExceeded),
    #[error("modules live over different rings")]
    RingMismatch,
    #[error("invalid module spec: {0}")]
    InvalidSpec(String),
}

impl ModuleError {
    pub fn capacity(cap: &'static str, limit: usize, actual: usize) -> Self {
        ModuleError::Capacity(CapExceeded { cap, limit, actual })
    }
}

/// Construction recipe for [`build_module`].
#[derive(Debug, Clone)]
pub enum ModuleSpec {
    /// Cyclic orders plus, for every ring element, the images of the
    /// canonical generators under the right action.
    Explicit {
        cyclic_orders: Vec<u32>,
        action: Vec<Vec<usize>>,
    },
    /// The ring as a right module over itself.
    Regular,
    /// Direct sum of two modules over the same ring.
    DirectSum(Box<ModuleSpec>, Box<ModuleSpec>),
}

/// Split data retained by direct sums so that theorem checkers can
/// project onto the factors.
#[derive(Debug, Clone)]
pub struct SumSplit {
    pub left: ModuleRef,
    pub right: ModuleRef,
    /// Number of cyclic generators taken from the left factor.
    pub left_gens: usize,
}

/// Write-once caches for enumeration results that are requested by
/// several deciders (safe for concurrent readers).
#[derive(Debug, Default)]
pub(crate) struct ModuleCaches {
    pub(crate) submodules: std::sync::OnceLock<Vec<crate::finmod::Submodule>>,
    pub(crate) endos: std::sync::OnceLock<Vec<crate::finmod::Homomorphism>>,
}

/// A finite right module over a finite ring. The underlying group is
/// `Z_{d_1} x ... x Z_{d_k}`; elements are tuples encoded with the last
/// coordinate fastest, so the zero element is always index 0.
#[derive(Debug)]
pub struct FiniteModule {
    ring: RingRef,
    orders: Vec<u32>,
    strides: Vec<usize>,
    size: usize,
    /// Full action tables: `action[r][x]` is `x · r`.
    action: Vec<Vec<u32>>,
    label: String,
    split: Option<SumSplit>,
    caches: ModuleCaches,
}

impl Clone for FiniteModule {
    fn clone(&self) -> Self {
        FiniteModule {
            ring: self.ring.clone(),
            orders: self.orders.clone(),
            strides: self.strides.clone(),
            size: self.size,
            action: self.action.clone(),
            label: self.label.clone(),
            split: self.split.clone(),
            caches: ModuleCaches::default(),
        }
    }
}

impl PartialEq for FiniteModule {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.orders == other.orders && self.action == other.action
    }
}
impl Eq for FiniteModule {}

impl FiniteModule {
    pub fn ring(&self) -> &RingRef {
        &self.ring
    }
    pub fn size(&self) -> usize {
        self.size
    }
    pub fn cyclic_orders(&self) -> &[u32] {
        &self.orders
    }
    pub fn generator_count(&self) -> usize {
        self.orders.len()
    }
    pub fn label(&self) -> &str {
        &self.label
    }
    pub fn split(&self) -> Option<&SumSplit> {
        self.split.as_ref()
    }
    pub(crate) fn caches(&self) -> &ModuleCaches {
        &self.caches
    }
    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.size
    }
    pub fn zero(&self) -> usize {
        0
    }

    pub fn decode(&self, x: usize) -> Vec<u32> {
        self.orders
            .iter()
            .zip(&self.strides)
            .map(|(&d, &s)| ((x / s) % d as usize) as u32)
            .collect()
    }

    pub fn encode(&self, coords: &[u32]) -> usize {
        coords
            .iter()
            .zip(&self.strides)
            .zip(&self.orders)
            .map(|((&c, &s), &d)| (c as usize % d as usize) * s)
            .sum()
    }

    /// Index of the i-th canonical generator.
    pub fn generator(&self, i: usize) -> usize {
        self.strides[i]
    }

    pub fn add(&self, x: usize, y: usize) -> usize {
        let mut out = 0;
        for (&d, &s) in self.orders.iter().zip(&self.strides) {
            let d = d as usize;
            let cx = (x / s) % d;
            let cy = (y / s) % d;
            out += ((cx + cy) % d) * s;
        }
        out
    }

    pub fn neg(&self, x: usize) -> usize {
        let mut out = 0;
        for (&d, &s) in self.orders.iter().zip(&self.strides) {
            let d = d as usize;
            let c = (x / s) % d;
            out += ((d - c) % d) * s;
        }
        out
    }

    pub fn sub(&self, x: usize, y: usize) -> usize {
        self.add(x, self.neg(y))
    }

    /// `x` added to itself `t` times.
    pub fn times(&self, t: u32, x: usize) -> usize {
        let mut out = 0;
        for (&d, &s) in self.orders.iter().zip(&self.strides) {
            let d = d as usize;
            let c = (x / s) % d;
            out += ((c * t as usize) % d) * s;
        }
        out
    }

    /// The right action `x · r`.
    #[inline]
    pub fn act(&self, r: usize, x: usize) -> usize {
        self.action[r][x] as usize
    }

    /// Additive order of an element.
    pub fn element_order(&self, x: usize) -> u32 {
        let mut t = 1;
        let mut y = x;
        while y != 0 {
            y = self.add(y, x);
            t += 1;
        }
        t
    }

    fn strides_for(orders: &[u32]) -> (Vec<usize>, usize) {
        let mut strides = vec![1usize; orders.len()];
        for i in (0..orders.len().saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * orders[i + 1] as usize;
        }
        let size = orders.iter().map(|&d| d as usize).product::<usize>();
        (strides, size)
    }
}

/// Builds a module from cyclic orders and generator images, verifying
/// the module axioms exhaustively.
pub fn module_from_action(
    ring: &RingRef,
    orders: Vec<u32>,
    gen_images: Vec<Vec<usize>>,
    label: String,
    caps: &Caps,
) -> Result<ModuleRef, ModuleError> {
    if orders.iter().any(|&d| d == 0) {
        return Err(ModuleError::InvalidSpec("cyclic orders must be positive".into()));
    }
    let (strides, size) = FiniteModule::strides_for(&orders);
    if size > caps.module_order {
        return Err(ModuleError::capacity("module_order", caps.module_order, size));
    }
    if gen_images.len() != ring.order() || gen_images.iter().any(|g| g.len() != orders.len()) {
        return Err(ModuleError::InvalidSpec(
            "action must give one image per (ring element, generator)".into(),
        ));
    }
    let mut m = FiniteModule {
        ring: Arc::clone(ring),
        orders,
        strides,
        size,
        action: Vec::new(),
        label,
        split: None,
        caches: ModuleCaches::default(),
    };
    // well-definedness: the image of a generator of order d must be
    // killed by d
    for (r, images) in gen_images.iter().enumerate() {
        for (i, &y) in images.iter().enumerate() {
            if y >= size {
                return Err(ModuleError::InvalidSpec("generator image out of range".into()));
            }
            if m.times(m.orders[i], y) != 0 {
                return Err(ModuleError::Axiom {
                    axiom: "action well-defined",
                    detail: format!(
                        "d_{i} * (g_{i} . r{r}) != 0 (image {y} has order not dividing {})",
                        m.orders[i]
                    ),
                });
            }
        }
    }
    // linear extension to full tables
    let k = m.orders.len();
    let mut action = Vec::with_capacity(ring.order());
    for images in gen_images.iter() {
        let multiples: Vec<Vec<usize>> = (0..k)
            .map(|i| {
                (0..m.orders[i])
                    .map(|t| m.times(t, images[i]))
                    .collect::<Vec<_>>()
            })
            .collect();
        let mut table = Vec::with_capacity(size);
        for x in 0..size {
            let coords = m.decode(x);
            let mut y = 0;
            for i in 0..k {
                y = m.add(y, multiples[i][coords[i] as usize]);
            }
            table.push(y as u32);
        }
        action.push(table);
    }
    m.action = action;
    verify_module_axioms(&m)?;
    Ok(Arc::new(m))
}

fn verify_module_axioms(m: &FiniteModule) -> Result<(), ModuleError> {
    let ring = &m.ring;
    let fail = |axiom: &'static str, detail: String| Err(ModuleError::Axiom { axiom, detail });
    for x in m.elements() {
        if m.act(ring.one(), x) != x {
            return fail("unital", format!("{x} * 1 != {x}"));
        }
    }
    // additivity of each action map
    for r in ring.elements() {
        for x in m.elements() {
            for y in m.elements() {
                if m.act(r, m.add(x, y)) != m.add(m.act(r, x), m.act(r, y)) {
                    return fail("action additive", format!("({x}+{y}) . {r}"));
                }
            }
        }
    }
    // compatibility with ring addition and multiplication
    for a in ring.elements() {
        for b in ring.elements() {
            let sum = ring.add(a, b);
            let prod = ring.mul(a, b);
            for x in m.elements() {
                if m.act(sum, x) != m.add(m.act(a, x), m.act(b, x)) {
                    return fail("action additive in scalars", format!("x={x}, a={a}, b={b}"));
                }
                if m.act(prod, x) != m.act(b, m.act(a, x)) {
                    return fail(
                        "right action compatible with multiplication",
                        format!("x={x}, a={a}, b={b}"),
                    );
                }
            }
        }
    }
    Ok(())
}

/// The zero module over a ring.
pub fn zero_module(ring: &RingRef, caps: &Caps) -> Result<ModuleRef, ModuleError> {
    module_from_action(
        ring,
        Vec::new(),
        vec![Vec::new(); ring.order()],
        format!("zero over {}", ring.label()),
        caps,
    )
}

/// The cyclic module `Z_d` over `zmod(n)` style rings: element indices
/// of the ring are the integers acting by multiplication mod `d`.
/// Validation rejects the construction when `d` does not divide the
/// characteristic.
pub fn cyclic_module(ring: &RingRef, d: u32, caps: &Caps) -> Result<ModuleRef, ModuleError> {
    let images: Vec<Vec<usize>> = ring
        .elements()
        .map(|r| vec![r % d as usize])
        .collect();
    module_from_action(
        ring,
        vec![d],
        images,
        format!("Z_{d} over {}", ring.label()),
        caps,
    )
}

/// The ring as a right module over itself, plus the index translation
/// between ring elements and module elements.
pub struct RegularModule {
    pub module: ModuleRef,
    /// ring element index -> module element index
    pub to_module: Vec<usize>,
    /// module element index -> ring element index
    pub to_ring: Vec<usize>,
}

pub fn regular_module(ring: &RingRef, caps: &Caps) -> Result<RegularModule, ModuleError> {
    let n = ring.order();
    if n > caps.module_order {
        return Err(ModuleError::capacity("module_order", caps.module_order, n));
    }
    let elems: Vec<usize> = ring.elements().collect();
    let dec = abelian::decompose(&elems, ring.zero(), |a, b| ring.add(a, b));
    let encode = |coords: &[u32], orders: &[u32]| -> usize {
        let (strides, _) = FiniteModule::strides_for(orders);
        coords
            .iter()
            .zip(&strides)
            .map(|(&c, &s)| c as usize * s)
            .sum()
    };
    let gen_images: Vec<Vec<usize>> = ring
        .elements()
        .map(|r| {
            dec.basis
                .iter()
                .map(|&b| encode(&dec.coords[&ring.mul(b, r)], &dec.orders))
                .collect()
        })
        .collect();
    let module = module_from_action(
        ring,
        dec.orders.clone(),
        gen_images,
        format!("regular({})", ring.label()),
        caps,
    )?;
    let to_module: Vec<usize> = ring
        .elements()
        .map(|a| encode(&dec.coords[&a], &dec.orders))
        .collect();
    let mut to_ring = vec![0usize; n];
    for (a, &x) in to_module.iter().enumerate() {
        to_ring[x] = a;
    }
    Ok(RegularModule {
        module,
        to_module,
        to_ring,
    })
}

/// Direct sum with retained factor split.
pub fn direct_sum(
    left: &ModuleRef,
    right: &ModuleRef,
    caps: &Caps,
) -> Result<ModuleRef, ModuleError> {
    if left.ring() != right.ring() {
        return Err(ModuleError::RingMismatch);
    }
    let ring = left.ring();
    let mut orders = left.orders.clone();
    orders.extend_from_slice(&right.orders);
    let (strides, size) = FiniteModule::strides_for(&orders);
    if size > caps.module_order {
        return Err(ModuleError::capacity("module_order", caps.module_order, size));
    }
    let k_left = left.orders.len();
    let gen_images: Vec<Vec<usize>> = ring
        .elements()
        .map(|r| {
            let mut images = Vec::with_capacity(orders.len());
            for i in 0..k_left {
                let img = left.act(r, left.generator(i));
                let mut coords = left.decode(img);
                coords.extend(std::iter::repeat(0).take(right.orders.len()));
                images.push(encode_with(&coords, &strides, &orders));
            }
            for i in 0..right.orders.len() {
                let img = right.act(r, right.generator(i));
                let mut coords = vec![0u32; k_left];
                coords.extend(right.decode(img));
                images.push(encode_with(&coords, &strides, &orders));
            }
            images
        })
        .collect();
    let label = format!("{} (+) {}", left.label(), right.label());
    let built = module_from_action(ring, orders, gen_images, label, caps)?;
    let mut m = (*built).clone();
    m.split = Some(SumSplit {
        left: Arc::clone(left),
        right: Arc::clone(right),
        left_gens: k_left,
    });
    Ok(Arc::new(m))
}

fn encode_with(coords: &[u32], strides: &[usize], orders: &[u32]) -> usize {
    coords
        .iter()
        .zip(strides)
        .zip(orders)
        .map(|((&c, &s), &d)| (c as usize % d as usize) * s)
        .sum()
}

/// Builds a module from a construction recipe.
pub fn build_module(
    ring: &RingRef,
    spec: &ModuleSpec,
    caps: &Caps,
) -> Result<ModuleRef, ModuleError> {
    match spec {
        ModuleSpec::Explicit {
            cyclic_orders,
            action,
        } => module_from_action(
            ring,
            cyclic_orders.clone(),
            action.clone(),
            format!(
                "module[{}] over {}",
                cyclic_orders
                    .iter()
                    .map(|d| d.to_string())
                    .collect::<Vec<_>>()
                    .join(","),
                ring.label()
            ),
            caps,
        ),
        ModuleSpec::Regular => Ok(regular_module(ring, caps)?.module),
        ModuleSpec::DirectSum(a, b) => {
            let left = build_module(ring, a, caps)?;
            let right = build_module(ring, b, caps)?;
            direct_sum(&left, &right, caps)
        }
    }
}

/// Projections of a direct-sum element onto its two factors, expressed
/// inside the sum (the complementary coordinates are zeroed).
pub fn split_components(m: &FiniteModule, x: usize) -> Option<(usize, usize)> {
    let split = m.split.as_ref()?;
    let coords = m.decode(x);
    let mut lc = coords.clone();
    let mut rc = coords;
    for c in lc.iter_mut().skip(split.left_gens) {
        *c = 0;
    }
    for c in rc.iter_mut().take(split.left_gens) {
        *c = 0;
    }
    Some((m.encode(&lc), m.encode(&rc)))
}

/// Serializable description of a module (orders plus action tables on
/// generators), used by witnesses and the serialization layer.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ModuleDescription {
    pub ring: String,
    pub cyclic_orders: Vec<u32>,
}

impl From<&FiniteModule> for ModuleDescription {
    fn from(m: &FiniteModule) -> Self {
        ModuleDescription {
            ring: m.ring().label().to_string(),
            cyclic_orders: m.cyclic_orders().to_vec(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finring::{build_ring, RingSpec};

    fn caps() -> Caps {
        Caps::default()
    }
    fn zmod(n: u32) -> RingRef {
        build_ring(&RingSpec::Zmod(n), &caps()).unwrap()
    }

    #[test]
    fn regular_module_of_z4() {
        let reg = regular_module(&zmod(4), &caps()).unwrap();
        assert_eq!(reg.module.size(), 4);
        assert_eq!(reg.module.cyclic_orders(), &[4]);
        // translation is a group isomorphism
        let r = zmod(4);
        for a in r.elements() {
            for b in r.elements() {
                assert_eq!(
                    reg.to_module[r.add(a, b)],
                    reg.module.add(reg.to_module[a], reg.to_module[b])
                );
            }
        }
    }

    #[test]
    fn regular_module_of_product_ring() {
        let ring = build_ring(
            &RingSpec::Product(vec![RingSpec::Zmod(2), RingSpec::Zmod(2)]),
            &caps(),
        )
        .unwrap();
        let reg = regular_module(&ring, &caps()).unwrap();
        assert_eq!(reg.module.cyclic_orders(), &[2, 2]);
    }

    #[test]
    fn direct_sum_shape() {
        let r = zmod(4);
        let z2 = cyclic_module(&r, 2, &caps()).unwrap();
        let z4 = cyclic_module(&r, 4, &caps()).unwrap();
        let m = direct_sum(&z2, &z4, &caps()).unwrap();
        assert_eq!(m.size(), 8);
        assert_eq!(m.cyclic_orders(), &[2, 4]);
        // action of 3 on (1, 1): (3 mod 2, 3 mod 4) = (1, 3)
        let x = m.encode(&[1, 1]);
        assert_eq!(m.decode(m.act(3, x)), vec![1, 3]);
    }

    #[test]
    fn invalid_cyclic_module_is_rejected() {
        // Z_4 is not a module over Z_6: 0 = 6*1 would have to act as 6 mod 4 = 2
        let r = zmod(6);
        assert!(cyclic_module(&r, 4, &caps()).is_err());
    }

    #[test]
    fn zero_module_has_one_element() {
        let m = zero_module(&zmod(4), &caps()).unwrap();
        assert_eq!(m.size(), 1);
        assert_eq!(m.act(3, 0), 0);
    }

    #[test]
    fn split_components_recover_factors() {
        let r = zmod(4);
        let z2 = cyclic_module(&r, 2, &caps()).unwrap();
        let z4 = cyclic_module(&r, 4, &caps()).unwrap();
        let m = direct_sum(&z2, &z4, &caps()).unwrap();
        let x = m.encode(&[1, 3]);
        let (l, rr) = split_components(&m, x).unwrap();
        assert_eq!(m.decode(l), vec![1, 0]);
        assert_eq!(m.decode(rr), vec![0, 3]);
        assert_eq!(m.add(l, rr), x);
    }
}
