//! The named, versioned builtin corpus: the smallest family of rings,
//! modules and z-modules that exercises every registered theorem with
//! both holding and failing instances.

use anyhow::{anyhow, Result};

use rickart_core::caps::Caps;
use rickart_core::finmod::{cyclic_module, direct_sum, regular_module, zero_module, ModuleRef};
use rickart_core::finring::{build_ring, RingRef, RingSpec};
use rickart_core::zmodsnf::FgZModule;

use crate::formats::{CorpusFile, ModuleFile, NamedModule, NamedRing, NamedZModule, RingFile, RingReference, ZModuleFile};

pub const CORPUS_VERSION: &str = "1";

#[derive(Clone)]
pub struct Corpus {
    pub rings: Vec<(String, RingRef)>,
    pub modules: Vec<(String, ModuleRef)>,
    pub zmodules: Vec<(String, FgZModule)>,
    pub sum_pairs: Vec<(String, String)>,
}

impl Corpus {
    pub fn ring(&self, name: &str) -> Option<&RingRef> {
        self.rings.iter().find(|(n, _)| n == name).map(|(_, r)| r)
    }
    pub fn module(&self, name: &str) -> Option<&ModuleRef> {
        self.modules.iter().find(|(n, _)| n == name).map(|(_, m)| m)
    }
    pub fn zmodule(&self, name: &str) -> Option<&FgZModule> {
        self.zmodules.iter().find(|(n, _)| n == name).map(|(_, z)| z)
    }
    pub fn is_empty(&self) -> bool {
        self.rings.is_empty() && self.modules.is_empty() && self.zmodules.is_empty()
    }
}

fn ring_specs() -> Vec<(&'static str, RingSpec)> {
    let zmod = |n: u32| RingSpec::Zmod(n);
    let mut out: Vec<(&'static str, RingSpec)> = vec![
        ("z2", zmod(2)),
        ("z3", zmod(3)),
        ("z4", zmod(4)),
        ("z5", zmod(5)),
        ("z6", zmod(6)),
        ("z7", zmod(7)),
        ("z8", zmod(8)),
        ("z9", zmod(9)),
        ("z10", zmod(10)),
        ("z11", zmod(11)),
        ("z12", zmod(12)),
    ];
    out.push(("z2pow2", RingSpec::Product(vec![zmod(2), zmod(2)])));
    out.push(("z2pow3", RingSpec::Product(vec![zmod(2), zmod(2), zmod(2)])));
    out.push((
        "z2pow4",
        RingSpec::Product(vec![zmod(2), zmod(2), zmod(2), zmod(2)]),
    ));
    out.push((
        "mat2_z2",
        RingSpec::Matrix {
            base: Box::new(zmod(2)),
            size: 2,
        },
    ));
    out.push((
        "gf4",
        RingSpec::PolyQuotient {
            base: Box::new(zmod(2)),
            coeffs: vec![1, 1, 1],
        },
    ));
    out.push((
        "f2eps",
        RingSpec::PolyQuotient {
            base: Box::new(zmod(2)),
            coeffs: vec![0, 0, 1],
        },
    ));
    out.push((
        "f3eps",
        RingSpec::PolyQuotient {
            base: Box::new(zmod(3)),
            coeffs: vec![0, 0, 1],
        },
    ));
    out.push((
        "z4eps",
        RingSpec::PolyQuotient {
            base: Box::new(zmod(4)),
            coeffs: vec![0, 0, 1],
        },
    ));
    out
}

pub fn builtin_corpus(caps: &Caps) -> Corpus {
    let rings: Vec<(String, RingRef)> = ring_specs()
        .into_iter()
        .map(|(name, spec)| {
            (
                name.to_string(),
                build_ring(&spec, caps).expect("builtin ring must construct"),
            )
        })
        .collect();
    let ring = |name: &str| -> RingRef {
        rings
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, r)| r.clone())
            .expect("builtin ring")
    };

    let mut modules: Vec<(String, ModuleRef)> = Vec::new();
    for (name, r) in &rings {
        modules.push((
            format!("reg_{name}"),
            regular_module(r, caps).expect("regular module").module,
        ));
    }
    let cyc = |rname: &str, d: u32| -> ModuleRef {
        cyclic_module(&ring(rname), d, caps).expect("builtin cyclic module")
    };
    let sum = |a: &ModuleRef, b: &ModuleRef| -> ModuleRef {
        direct_sum(a, b, caps).expect("builtin direct sum")
    };

    let z2_over_z2 = cyc("z2", 2);
    let z2_over_z4 = cyc("z4", 2);
    let z4_over_z4 = cyc("z4", 4);
    let z2_over_z6 = cyc("z6", 2);
    let z3_over_z6 = cyc("z6", 3);
    let z6_over_z6 = cyc("z6", 6);
    let z2_over_z8 = cyc("z8", 2);
    let z8_over_z8 = cyc("z8", 8);
    let z3_over_z9 = cyc("z9", 3);
    let z9_over_z9 = cyc("z9", 9);
    let z3_over_z3 = cyc("z3", 3);

    modules.push(("z2_over_z2".into(), z2_over_z2.clone()));
    modules.push(("z2_over_z4".into(), z2_over_z4.clone()));
    modules.push(("z4_over_z4".into(), z4_over_z4.clone()));
    modules.push(("z2_over_z6".into(), z2_over_z6.clone()));
    modules.push(("z3_over_z6".into(), z3_over_z6.clone()));
    modules.push(("zero_over_z2".into(), zero_module(&ring("z2"), caps).unwrap()));
    modules.push(("z2xz2_over_z2".into(), sum(&z2_over_z2, &z2_over_z2)));
    modules.push(("z2xz4_over_z4".into(), sum(&z2_over_z4, &z4_over_z4)));
    modules.push(("z2xz3_over_z6".into(), sum(&z2_over_z6, &z3_over_z6)));
    modules.push((
        "z2xz2xz2_over_z2".into(),
        sum(&sum(&z2_over_z2, &z2_over_z2), &z2_over_z2),
    ));
    modules.push(("z3xz3_over_z3".into(), sum(&z3_over_z3, &z3_over_z3)));
    modules.push(("z4xz4_over_z4".into(), sum(&z4_over_z4, &z4_over_z4)));
    modules.push(("z2xz6_over_z6".into(), sum(&z2_over_z6, &z6_over_z6)));
    modules.push(("z2xz8_over_z8".into(), sum(&z2_over_z8, &z8_over_z8)));
    modules.push(("z9xz3_over_z9".into(), sum(&z9_over_z9, &z3_over_z9)));
    modules.push((
        "z2xz2xz4_over_z4".into(),
        sum(&sum(&z2_over_z4, &z2_over_z4), &z4_over_z4),
    ));

    let zmodules: Vec<(String, FgZModule)> = vec![
        ("z".into(), FgZModule::free(1)),
        ("zxz".into(), FgZModule::free(2)),
        ("z_plus_z2".into(), FgZModule::new(1, vec![2]).unwrap()),
        ("z2_plus_z4".into(), FgZModule::new(0, vec![2, 4]).unwrap()),
        ("z4_cyclic".into(), FgZModule::new(0, vec![4]).unwrap()),
        ("z2_plus_z2".into(), FgZModule::new(0, vec![2, 2]).unwrap()),
    ];

    let sum_pairs: Vec<(String, String)> = vec![
        ("z2_over_z6".into(), "z3_over_z6".into()),
        ("z2_over_z4".into(), "z4_over_z4".into()),
        ("z2_over_z2".into(), "z2_over_z2".into()),
        ("z2_over_z6".into(), "z2_over_z6".into()),
        ("z2_over_z4".into(), "z2_over_z4".into()),
        ("z4_over_z4".into(), "z4_over_z4".into()),
    ];

    Corpus {
        rings,
        modules,
        zmodules,
        sum_pairs,
    }
}

/// The builtin corpus in file form (round-trip tests, digests,
/// external re-verification).
pub fn builtin_corpus_file(caps: &Caps) -> CorpusFile {
    let corpus = builtin_corpus(caps);
    let spec_of = |name: &str| -> RingFile {
        let spec = ring_specs()
            .into_iter()
            .find(|(n, _)| *n == name)
            .map(|(_, s)| s)
            .expect("ring name");
        RingFile::Constructor { constructor: spec }
    };
    CorpusFile {
        rings: corpus
            .rings
            .iter()
            .map(|(name, _)| NamedRing {
                name: name.clone(),
                ring: spec_of(name),
            })
            .collect(),
        modules: corpus
            .modules
            .iter()
            .map(|(name, module)| {
                let ring_name = corpus
                    .rings
                    .iter()
                    .find(|(_, r)| r == module.ring())
                    .map(|(n, _)| n.clone())
                    .expect("module ring is builtin");
                NamedModule {
                    name: name.clone(),
                    module: ModuleFile::describe(
                        module,
                        RingReference::Builtin { builtin: ring_name },
                    ),
                }
            })
            .collect(),
        zmodules: corpus
            .zmodules
            .iter()
            .map(|(name, z)| NamedZModule {
                name: name.clone(),
                zmodule: ZModuleFile {
                    rank: z.rank,
                    torsion: z.torsion.clone(),
                },
            })
            .collect(),
        sum_pairs: corpus.sum_pairs.clone(),
    }
}

/// Resolves a corpus file against builders.
pub fn load_corpus(file: &CorpusFile, caps: &Caps) -> Result<Corpus> {
    let mut rings: Vec<(String, RingRef)> = Vec::new();
    for named in &file.rings {
        rings.push((named.name.clone(), named.ring.build(caps)?));
    }
    let builtin = builtin_corpus(caps);
    let mut modules: Vec<(String, ModuleRef)> = Vec::new();
    for named in &file.modules {
        let resolve = |name: &str| -> Option<RingRef> {
            rings
                .iter()
                .find(|(n, _)| n == name)
                .map(|(_, r)| r.clone())
                .or_else(|| builtin.ring(name).cloned())
        };
        modules.push((named.name.clone(), named.module.build(caps, resolve)?));
    }
    let mut zmodules: Vec<(String, FgZModule)> = Vec::new();
    for named in &file.zmodules {
        zmodules.push((named.name.clone(), named.zmodule.build()?));
    }
    for (a, b) in &file.sum_pairs {
        for name in [a, b] {
            if !modules.iter().any(|(n, _)| n == name) {
                return Err(anyhow!("sum pair references unknown module {name:?}"));
            }
        }
    }
    Ok(Corpus {
        rings,
        modules,
        zmodules,
        sum_pairs: file.sum_pairs.clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_corpus_builds_and_is_sizable() {
        let caps = Caps::default();
        let corpus = builtin_corpus(&caps);
        assert!(corpus.rings.len() >= 10, "rings: {}", corpus.rings.len());
        assert!(corpus.modules.len() >= 10, "modules: {}", corpus.modules.len());
        assert!(corpus.zmodules.len() >= 4);
        assert!(corpus.ring("z6").is_some());
        assert!(corpus.zmodule("z_plus_z2").is_some());
    }

    #[test]
    fn corpus_file_round_trips() {
        let caps = Caps::default();
        let file = builtin_corpus_file(&caps);
        let json = serde_json::to_string_pretty(&file).unwrap();
        let parsed = crate::formats::parse_corpus_file(&json).unwrap();
        let reloaded = load_corpus(&parsed, &caps).unwrap();
        let original = builtin_corpus(&caps);
        assert_eq!(reloaded.rings.len(), original.rings.len());
        for ((n1, r1), (n2, r2)) in reloaded.rings.iter().zip(&original.rings) {
            assert_eq!(n1, n2);
            assert_eq!(r1, r2, "ring {n1} changed in round trip");
        }
        for ((n1, m1), (n2, m2)) in reloaded.modules.iter().zip(&original.modules) {
            assert_eq!(n1, n2);
            assert_eq!(m1, m2, "module {n1} changed in round trip");
        }
        assert_eq!(reloaded.zmodules.len(), original.zmodules.len());
    }
}
