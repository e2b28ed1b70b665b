//! JSON schemas for rings, modules, z-modules and corpora.
//!
//! Ring file: `{"constructor": <expression>}` or `{"tables": {...}}`.
//! Constructor expressions: `{"zmod": 6}`, `{"product": [e, e, ...]}`,
//! `{"matrix": {"base": e, "size": 2}}`,
//! `{"poly_quotient": {"base": {"zmod": 2}, "coeffs": [1, 1, 1]}}`,
//! `{"table": {...}}`.
//!
//! Module file: `{"ring": <ring ref>, "cyclic_orders": [...],
//! "action": {"<ring element>": [[coords of g_i . r], ...]}}`; a ring
//! ref is `{"builtin": "z4"}` or an inline ring file.
//!
//! Z-module file: `{"rank": r, "torsion": [d_1, ...]}`.

use std::collections::BTreeMap;

use anyhow::{anyhow, bail, Context, Result};
use serde::{Deserialize, Serialize};

use rickart_core::caps::Caps;
use rickart_core::finmod::{module_from_action, ModuleRef};
use rickart_core::finring::{build_ring, FiniteRing, RingRef, RingSpec};
use rickart_core::zmodsnf::FgZModule;

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RingFile {
    Constructor { constructor: RingSpec },
    Tables { tables: TableSpec },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TableSpec {
    pub order: usize,
    pub add: Vec<Vec<usize>>,
    pub mul: Vec<Vec<usize>>,
    pub zero: usize,
    pub one: usize,
}

impl RingFile {
    pub fn build(&self, caps: &Caps) -> Result<RingRef> {
        let spec = match self {
            RingFile::Constructor { constructor } => constructor.clone(),
            RingFile::Tables { tables } => RingSpec::Table {
                order: tables.order,
                add: tables.add.clone(),
                mul: tables.mul.clone(),
                zero: tables.zero,
                one: tables.one,
            },
        };
        build_ring(&spec, caps).map_err(|e| anyhow!("ring construction failed: {e}"))
    }

    /// Table form of an already-built ring (used by `endo-ring`).
    pub fn from_ring(ring: &FiniteRing) -> RingFile {
        let (add, mul) = ring.tables();
        RingFile::Tables {
            tables: TableSpec {
                order: ring.order(),
                add,
                mul,
                zero: ring.zero(),
                one: ring.one(),
            },
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RingReference {
    Builtin { builtin: String },
    Inline(RingFile),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ModuleFile {
    pub ring: RingReference,
    pub cyclic_orders: Vec<u32>,
    /// Keys are ring element indices (as decimal strings, a JSON-map
    /// restriction); values list the image coordinates of each
    /// canonical generator under that element's right action.
    pub action: BTreeMap<String, Vec<Vec<u32>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

impl ModuleFile {
    pub fn build(&self, caps: &Caps, resolve_builtin: impl Fn(&str) -> Option<RingRef>) -> Result<ModuleRef> {
        let ring = match &self.ring {
            RingReference::Builtin { builtin } => resolve_builtin(builtin)
                .ok_or_else(|| anyhow!("unknown builtin ring {builtin:?}"))?,
            RingReference::Inline(file) => file.build(caps)?,
        };
        let k = self.cyclic_orders.len();
        let strides = {
            let mut s = vec![1usize; k];
            for i in (0..k.saturating_sub(1)).rev() {
                s[i] = s[i + 1] * self.cyclic_orders[i + 1] as usize;
            }
            s
        };
        let mut gen_images: Vec<Vec<usize>> = Vec::with_capacity(ring.order());
        for r in 0..ring.order() {
            let images = self
                .action
                .get(&r.to_string())
                .ok_or_else(|| anyhow!("action missing ring element {r}"))?;
            if images.len() != k {
                bail!("action for ring element {r} must list {k} generator images");
            }
            let encoded = images
                .iter()
                .map(|coords| {
                    if coords.len() != k {
                        bail!("generator image must have {k} coordinates");
                    }
                    Ok(coords
                        .iter()
                        .zip(&strides)
                        .zip(&self.cyclic_orders)
                        .map(|((&c, &s), &d)| (c as usize % d.max(1) as usize) * s)
                        .sum())
                })
                .collect::<Result<Vec<usize>>>()?;
            gen_images.push(encoded);
        }
        let label = self.label.clone().unwrap_or_else(|| {
            format!(
                "module[{}] over {}",
                self.cyclic_orders
                    .iter()
                    .map(|d| d.to_string())
                    .collect::<Vec<_>>()
                    .join(","),
                ring.label()
            )
        });
        module_from_action(&ring, self.cyclic_orders.clone(), gen_images, label, caps)
            .map_err(|e| anyhow!("module construction failed: {e}"))
    }

    /// File form of an already-built module over a builtin ring.
    pub fn describe(module: &ModuleRef, ring_ref: RingReference) -> ModuleFile {
        let ring = module.ring();
        let k = module.generator_count();
        let action: BTreeMap<String, Vec<Vec<u32>>> = (0..ring.order())
            .map(|r| {
                let images = (0..k)
                    .map(|i| module.decode(module.act(r, module.generator(i))))
                    .collect();
                (r.to_string(), images)
            })
            .collect();
        ModuleFile {
            ring: ring_ref,
            cyclic_orders: module.cyclic_orders().to_vec(),
            action,
            label: Some(module.label().to_string()),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ZModuleFile {
    pub rank: usize,
    #[serde(default)]
    pub torsion: Vec<i64>,
}

impl ZModuleFile {
    pub fn build(&self) -> Result<FgZModule> {
        FgZModule::new(self.rank, self.torsion.clone())
            .map_err(|e| anyhow!("invalid z-module: {e}"))
    }
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct CorpusFile {
    #[serde(default)]
    pub rings: Vec<NamedRing>,
    #[serde(default)]
    pub modules: Vec<NamedModule>,
    #[serde(default)]
    pub zmodules: Vec<NamedZModule>,
    /// Pairs of module names fed to the direct-sum theorem checks.
    #[serde(default)]
    pub sum_pairs: Vec<(String, String)>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct NamedRing {
    pub name: String,
    #[serde(flatten)]
    pub ring: RingFile,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct NamedModule {
    pub name: String,
    #[serde(flatten)]
    pub module: ModuleFile,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct NamedZModule {
    pub name: String,
    #[serde(flatten)]
    pub zmodule: ZModuleFile,
}

impl CorpusFile {
    pub fn is_empty(&self) -> bool {
        self.rings.is_empty() && self.modules.is_empty() && self.zmodules.is_empty()
    }

    pub fn merge(&mut self, other: CorpusFile) {
        self.rings.extend(other.rings);
        self.modules.extend(other.modules);
        self.zmodules.extend(other.zmodules);
        self.sum_pairs.extend(other.sum_pairs);
    }
}

pub fn parse_ring_file(text: &str) -> Result<RingFile> {
    serde_json::from_str(text).context("ring file does not match the schema")
}
pub fn parse_module_file(text: &str) -> Result<ModuleFile> {
    serde_json::from_str(text).context("module file does not match the schema")
}
pub fn parse_zmodule_file(text: &str) -> Result<ZModuleFile> {
    serde_json::from_str(text).context("z-module file does not match the schema")
}
pub fn parse_corpus_file(text: &str) -> Result<CorpusFile> {
    serde_json::from_str(text).context("corpus file does not match the schema")
}
