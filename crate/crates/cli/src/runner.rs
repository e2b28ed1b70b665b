//! Request execution: `check`, `suite`, `endo-ring`, `list-builtins`.
//!
//! Exit codes: 0 = HOLDS / no violations, 1 = FAILS / violations,
//! 2 = input, schema or capacity problems, 3 = UNDECIDED / not
//! applicable.

use std::fmt::Write as _;
use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use rayon::prelude::*;
use sha2::{Digest, Sha256};

use rickart_core::caps::Caps;
use rickart_core::endobridge::{
    correspondence_report, endomorphism_ring, faith_utumi_radical_check,
    quasi_injective_equivalence_report, EndoError, ReportOutcome,
};
use rickart_core::finmod::ModuleRef;
use rickart_core::finring::{
    decide_ring_property_mode, RingProperty, RingRef, RingVerdict, WitnessMode,
};
use rickart_core::modprops::{decide_module_property_mode, ModuleProperty, ModuleVerdict};
use rickart_core::verdict::VerdictStatus;
use rickart_core::zmodsnf::{zrickart_check, FgZModule, ZRickartVerdict};

use crate::builtins::{builtin_corpus, builtin_corpus_file, load_corpus, Corpus};
use crate::formats::{
    parse_corpus_file, parse_module_file, parse_ring_file, parse_zmodule_file, CorpusFile,
    RingFile,
};
use crate::registry::{
    module_profile, ring_profile, run_theorem, theorem_ids, SuiteContext, REGISTRY,
};
use crate::report::{
    engine_version, to_json, CheckReport, RequestEcho, SuiteReport, TheoremReport,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TargetKind {
    Ring,
    Module,
    Zmodule,
}

impl TargetKind {
    pub fn parse(s: &str) -> Result<TargetKind> {
        match s {
            "ring" => Ok(TargetKind::Ring),
            "module" => Ok(TargetKind::Module),
            "zmodule" => Ok(TargetKind::Zmodule),
            other => bail!("unknown target kind {other:?} (expected ring, module or zmodule)"),
        }
    }
    fn name(self) -> &'static str {
        match self {
            TargetKind::Ring => "ring",
            TargetKind::Module => "module",
            TargetKind::Zmodule => "zmodule",
        }
    }
}

#[derive(Debug, Clone)]
pub struct CheckOptions {
    pub bound: i64,
    pub caps: Caps,
    pub all_witnesses: bool,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            bound: 5,
            caps: Caps::default(),
            all_witnesses: false,
        }
    }
}

fn digest(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

enum Target {
    Ring(RingRef),
    Module(ModuleRef),
    Zmodule(FgZModule),
}

fn load_target(kind: TargetKind, source: &str, caps: &Caps) -> Result<(Target, String)> {
    if let Some(name) = source.strip_prefix("builtin:") {
        let corpus = builtin_corpus(caps);
        let target = match kind {
            TargetKind::Ring => Target::Ring(
                corpus
                    .ring(name)
                    .cloned()
                    .ok_or_else(|| anyhow!("no builtin ring named {name:?}"))?,
            ),
            TargetKind::Module => Target::Module(
                corpus
                    .module(name)
                    .cloned()
                    .ok_or_else(|| anyhow!("no builtin module named {name:?}"))?,
            ),
            TargetKind::Zmodule => Target::Zmodule(
                corpus
                    .zmodule(name)
                    .cloned()
                    .ok_or_else(|| anyhow!("no builtin z-module named {name:?}"))?,
            ),
        };
        return Ok((target, digest(source.as_bytes())));
    }
    let text = std::fs::read_to_string(source)
        .with_context(|| format!("cannot read input file {source:?}"))?;
    let dg = digest(text.as_bytes());
    let target = match kind {
        TargetKind::Ring => Target::Ring(parse_ring_file(&text)?.build(caps)?),
        TargetKind::Module => {
            let corpus = builtin_corpus(caps);
            Target::Module(
                parse_module_file(&text)?
                    .build(caps, |name| corpus.ring(name).cloned())?,
            )
        }
        TargetKind::Zmodule => Target::Zmodule(parse_zmodule_file(&text)?.build()?),
    };
    Ok((target, dg))
}

fn exit_for(status: VerdictStatus) -> i32 {
    match status {
        VerdictStatus::Holds => 0,
        VerdictStatus::Fails => 1,
        VerdictStatus::Unsupported => 2,
    }
}

fn render_ring_verdict(ring: &RingRef, v: &RingVerdict) -> String {
    let mut s = format!("{}: {} {}", ring.label(), v.property, v.status);
    if let Some(cap) = &v.unsupported {
        let _ = write!(s, " ({cap})");
    }
    for w in &v.witnesses {
        let _ = write!(s, "\n  witness: {}", serde_json::to_string(w).unwrap());
    }
    s
}

fn render_module_verdict(m: &ModuleRef, v: &ModuleVerdict) -> String {
    let mut s = format!("{}: {} {}", m.label(), v.property, v.status);
    if let Some(cap) = &v.unsupported {
        let _ = write!(s, " ({cap})");
    }
    for w in &v.witnesses {
        let _ = write!(s, "\n  witness: {}", serde_json::to_string(w).unwrap());
    }
    s
}

/// Runs a `check` request and assembles the report plus exit code.
pub fn run_check(
    kind: TargetKind,
    source: &str,
    property: Option<&str>,
    report: Option<&str>,
    opts: &CheckOptions,
) -> Result<CheckReport> {
    let started = std::time::Instant::now();
    let (target, input_digest) = load_target(kind, source, &opts.caps)?;
    let mode = if opts.all_witnesses {
        WitnessMode::All
    } else {
        WitnessMode::First
    };
    let (status, exit_code, result, rendering) = match (&target, property, report) {
        (Target::Ring(ring), Some(prop), None) => {
            let p = RingProperty::from_tag(prop)
                .ok_or_else(|| anyhow!("unknown ring property {prop:?}"))?;
            let v = decide_ring_property_mode(ring, p, &opts.caps, mode);
            (
                v.status.to_string().to_lowercase(),
                exit_for(v.status),
                serde_json::to_value(&v)?,
                render_ring_verdict(ring, &v),
            )
        }
        (Target::Module(m), Some(prop), None) => {
            let p = ModuleProperty::from_tag(prop)
                .ok_or_else(|| anyhow!("unknown module property {prop:?}"))?;
            let v = decide_module_property_mode(m, p, &opts.caps, mode);
            (
                v.status.to_string().to_lowercase(),
                exit_for(v.status),
                serde_json::to_value(&v)?,
                render_module_verdict(m, &v),
            )
        }
        (Target::Module(m), None, Some(rep)) => {
            let (outcome, value, rendering) = match rep {
                "correspondence" => {
                    let r = correspondence_report(m, &opts.caps);
                    let rendering = format!(
                        "{}: rickart={:?} baer={:?} right_rickart(S)={:?} retractable={:?} klr={:?} -> {:?}",
                        m.label(), r.rickart, r.baer, r.right_rickart_s, r.retractable,
                        r.k_local_retractable, r.outcome
                    );
                    (r.outcome, serde_json::to_value(&r)?, rendering)
                }
                "faith-utumi" => {
                    let r = faith_utumi_radical_check(m, &opts.caps);
                    let rendering = format!(
                        "{}: essential kernels {:?} vs J(S) {:?} -> {:?}",
                        m.label(), r.essential_kernel_indices, r.radical_indices, r.outcome
                    );
                    (r.outcome, serde_json::to_value(&r)?, rendering)
                }
                "qi-equiv" => {
                    let r = quasi_injective_equivalence_report(m, &opts.caps);
                    let rendering = format!("{}: {:?} -> {:?}", m.label(), r.conditions, r.outcome);
                    (r.outcome, serde_json::to_value(&r)?, rendering)
                }
                other => bail!("unknown module report {other:?} (expected correspondence, faith-utumi or qi-equiv)"),
            };
            let (status, exit) = match outcome {
                ReportOutcome::Consistent => ("consistent", 0),
                ReportOutcome::Violation => ("violation", 1),
                ReportOutcome::NotApplicable => ("not_applicable", 3),
                ReportOutcome::Unsupported => ("unsupported", 2),
            };
            (status.to_string(), exit, value, rendering)
        }
        (Target::Zmodule(z), Some("rickart"), None) => {
            let v = zrickart_check(z, opts.bound, &opts.caps)
                .map_err(|e| anyhow!("z-module check failed: {e}"))?;
            let (status, exit, rendering) = match &v {
                ZRickartVerdict::Holds { justification, .. } => {
                    ("holds".to_string(), 0, format!("{z}: rickart HOLDS — {justification}"))
                }
                ZRickartVerdict::Fails { witness } => (
                    "fails".to_string(),
                    1,
                    format!(
                        "{z}: rickart FAILS — endomorphism {:?} has kernel {} (inclusion {:?}), obstruction {:?}",
                        witness.endomorphism.matrix.to_rows(),
                        witness.kernel,
                        witness.inclusion.matrix.to_rows(),
                        witness.obstruction
                    ),
                ),
                ZRickartVerdict::Undecided { bound, .. } => (
                    "undecided".to_string(),
                    3,
                    format!("{z}: rickart UNDECIDED at bound {bound} (no bounded counterexample)"),
                ),
            };
            (status, exit, serde_json::to_value(&v)?, rendering)
        }
        (Target::Zmodule(_), Some(prop), None) => {
            bail!("z-modules support only the rickart property, not {prop:?}")
        }
        (_, None, None) => bail!("exactly one of --property or --report is required"),
        (_, Some(_), Some(_)) => bail!("--property and --report are mutually exclusive"),
        (_, None, Some(_)) => bail!("--report applies only to module targets"),
    };
    Ok(CheckReport {
        engine_version: engine_version(),
        request: RequestEcho {
            kind: kind.name().to_string(),
            source: source.to_string(),
            property: property.map(str::to_string),
            report: report.map(str::to_string),
            bound: opts.bound,
            all_witnesses: opts.all_witnesses,
        },
        input_digest,
        status,
        exit_code,
        result,
        rendering,
        timing_ms: started.elapsed().as_millis(),
    })
}

/// Loads "builtin" or a list of corpus files.
pub fn resolve_corpus(sources: &[String], caps: &Caps) -> Result<(Corpus, String, String)> {
    if sources.len() == 1 && sources[0] == "builtin" {
        let file = builtin_corpus_file(caps);
        let json = serde_json::to_string(&file).expect("builtin corpus serializes");
        return Ok((builtin_corpus(caps), "builtin".to_string(), digest(json.as_bytes())));
    }
    let mut merged = CorpusFile::default();
    let mut hasher = Sha256::new();
    for path in sources {
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("cannot read corpus file {path:?}"))?;
        hasher.update(text.as_bytes());
        merged.merge(parse_corpus_file(&text)?);
    }
    let corpus = load_corpus(&merged, caps)?;
    Ok((
        corpus,
        sources.join(","),
        hex::encode(hasher.finalize()),
    ))
}

/// Runs the theorem suite. `threads` of 0 means the rayon default.
pub fn run_suite(
    sources: &[String],
    filter: &[String],
    opts: &CheckOptions,
    threads: usize,
) -> Result<SuiteReport> {
    let started = std::time::Instant::now();
    let (corpus, corpus_name, corpus_digest) = resolve_corpus(sources, &opts.caps)?;
    if corpus.is_empty() {
        bail!("refusing to run the suite on an empty corpus");
    }
    let known = theorem_ids();
    for id in filter {
        if !known.contains(&id.as_str()) {
            bail!("unknown theorem id {id:?} (known: {})", known.join(", "));
        }
    }
    let selected: Vec<&crate::registry::TheoremDef> = REGISTRY
        .iter()
        .filter(|t| filter.is_empty() || filter.iter().any(|f| f == t.id))
        .collect();

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .context("thread pool")?;
    let caps = &opts.caps;
    let (ring_profiles, module_profiles, theorems) = pool.install(|| {
        let ring_profiles: Vec<_> = corpus
            .rings
            .par_iter()
            .map(|(name, ring)| ring_profile(name, ring, caps))
            .collect();
        let module_profiles: Vec<_> = corpus
            .modules
            .par_iter()
            .map(|(name, module)| module_profile(name, module, caps))
            .collect();
        let ctx = SuiteContext {
            corpus: &corpus,
            ring_profiles: &ring_profiles,
            module_profiles: &module_profiles,
            caps,
            bound: opts.bound,
        };
        let theorems: Vec<TheoremReport> = selected
            .par_iter()
            .map(|t| TheoremReport::new(t.id, t.summary, run_theorem(t.id, &ctx)))
            .collect();
        (ring_profiles, module_profiles, theorems)
    });
    let _ = (ring_profiles, module_profiles);
    let total_violations = theorems.iter().map(|t| t.violations).sum();
    Ok(SuiteReport {
        engine_version: engine_version(),
        corpus: corpus_name,
        corpus_digest,
        ring_count: corpus.rings.len(),
        module_count: corpus.modules.len(),
        zmodule_count: corpus.zmodules.len(),
        theorems,
        total_violations,
        timing_ms: started.elapsed().as_millis(),
    })
}

pub fn suite_exit_code(report: &SuiteReport) -> i32 {
    if report.total_violations == 0 {
        0
    } else {
        1
    }
}

/// Exports `End(M)` as a ring file.
pub fn endo_ring_export(source: &str, out: Option<&Path>, opts: &CheckOptions) -> Result<String> {
    let (target, _) = load_target(TargetKind::Module, source, &opts.caps)?;
    let Target::Module(m) = target else {
        unreachable!("loaded a module target")
    };
    let endo = endomorphism_ring(&m, &opts.caps).map_err(|e| match e {
        EndoError::Module(err) => anyhow!("endomorphism ring outside caps: {err}"),
        EndoError::Ring(err) => anyhow!("endomorphism ring outside caps: {err}"),
    })?;
    let file = RingFile::from_ring(&endo.ring);
    let json = to_json(&file);
    if let Some(path) = out {
        std::fs::write(path, &json).with_context(|| format!("cannot write {path:?}"))?;
    }
    Ok(json)
}

pub fn list_builtins(caps: &Caps) -> String {
    let corpus = builtin_corpus(caps);
    let mut out = String::new();
    out.push_str("rings:\n");
    for (name, ring) in &corpus.rings {
        let _ = writeln!(out, "  {name:<16} {}", ring.label());
    }
    out.push_str("modules:\n");
    for (name, m) in &corpus.modules {
        let _ = writeln!(out, "  {name:<16} {} (order {})", m.label(), m.size());
    }
    out.push_str("z-modules:\n");
    for (name, z) in &corpus.zmodules {
        let _ = writeln!(out, "  {name:<16} {z}");
    }
    out.push_str("sum pairs:\n");
    for (a, b) in &corpus.sum_pairs {
        let _ = writeln!(out, "  {a} (+) {b}");
    }
    out
}
