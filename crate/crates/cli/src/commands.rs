use std::collections::BTreeSet;
use std::path::{Path, PathBuf};
use std::sync::Arc;
use std::time::Instant;

use gradedie::algebra::{build_module, AlgebraicSubset, ElementSet, ModuleSpec};
use gradedie::grading::{GradedModule, GradingSpec};
use gradedie::predicates::{
    is_e_ie_prime_ideal, is_g_ie_prime, is_g_prime, is_graded_ie_prime, is_graded_prime, is_graded_weakly_prime,
    is_multiplication, Scope, Verdict, Witness,
};
use gradedie::theorems::{
    generators, run_suite, verify_witness, ClaimId, ClaimReport, ClaimWitness, Extras, Frame, Instance, LocalizedIdeal,
    SettingSpec, SuiteConfig, WitnessPart,
};
use gradedie::error::PredicateError;
use gradedie::theorems::Finding;
use serde::Deserialize;

use crate::error::CliError;
use crate::file::Loaded;
use crate::report::{
    ClassifyFile, EnumerateFile, EnumeratedSet, PointOut, SuiteFile, Timing, ValidateFile, VerdictEntry, WitnessOut,
};

pub fn validate(path: &Path) -> Result<ValidateFile, CliError> {
    let loaded = Loaded::from_path(path)?;
    let module = loaded.setting.module();
    Ok(ValidateFile {
        command: "validate",
        label: loaded.label.clone(),
        valid: true,
        ring_size: module.ring().size(),
        module_size: module.size(),
        group: loaded.setting.group().orders().to_vec(),
        ideals: loaded.ideals.keys().cloned().collect(),
        submodules: loaded.submodules.keys().cloned().collect(),
        mult_sets: loaded.mult_sets.keys().cloned().collect(),
        degrees: loaded.degrees.keys().cloned().collect(),
    })
}

fn witness_out(loaded: &Loaded, w: &Witness, ideal_level: bool) -> WitnessOut {
    let module = loaded.setting.module();
    let group = loaded.setting.group();
    let ring_shape = module.ring().shape();
    let vector_shape = if ideal_level { ring_shape } else { module.module().shape() };
    WitnessOut {
        condition: w.location.to_string(),
        frame: Frame::Base.name(),
        scalar: w.scalar.map(|p| PointOut::new(p, Some(ring_shape), group)),
        vector: Some(PointOut::new(w.vector, Some(vector_shape), group)),
        extra: Vec::new(),
        sets: Vec::new(),
    }
}

/// Re-checks a predicate witness against the raw definition.
fn verify_predicate(inst: &Instance, w: &Witness) -> bool {
    let report = ClaimReport {
        claim: ClaimId::PrimeImpliesIe,
        instance_id: inst.id.clone(),
        label: inst.label.clone(),
        variant: None,
        hypotheses_met: true,
        conclusion_holds: Some(false),
        witness: Some(ClaimWitness {
            direction: None,
            parts: vec![WitnessPart {
                finding: Finding::Predicate(w.location),
                frame: Frame::Base,
                scalar: w.scalar,
                vector: Some(w.vector),
                extra: Vec::new(),
                sets: Vec::new(),
            }],
        }),
    };
    verify_witness(inst, &report)
}

struct Classifier<'a> {
    loaded: &'a Loaded,
    inst: Instance,
    target: String,
    ideal: String,
}

impl Classifier<'_> {
    fn entry(
        &self,
        predicate: String,
        result: Result<Verdict, PredicateError>,
        degree: Option<usize>,
        ideal: bool,
        ideal_level: bool,
    ) -> Result<VerdictEntry, CliError> {
        let mut entry = match result {
            Ok(v) => {
                let witness = v.witness.as_ref().map(|w| witness_out(self.loaded, w, ideal_level));
                let verified = v.witness.as_ref().map(|w| verify_predicate(&self.inst, w));
                VerdictEntry {
                    verified,
                    ..VerdictEntry::from_verdict(predicate, &v, witness)
                }
            }
            Err(e @ (PredicateError::ImproperComponent { .. } | PredicateError::ImproperIdeal)) => {
                VerdictEntry::not_applicable(predicate, e.to_string())
            }
            Err(source) => {
                return Err(CliError::Predicate {
                    target: self.target.clone(),
                    source,
                })
            }
        };
        entry.target = Some(self.target.clone());
        entry.ideal = ideal.then(|| self.ideal.clone());
        entry.degree = degree.map(|g| self.loaded.setting.group().residues(g));
        Ok(entry)
    }
}

/// Every predicate on each target submodule relative to the named ideal,
/// followed by the multiplication checks.
pub fn classify(loaded: &Loaded, targets: &[String], ideal_name: &str) -> Result<ClassifyFile, CliError> {
    let setting = &loaded.setting;
    let module = setting.module();
    let ring = setting.ring();
    let ideal_set = loaded.ideal(ideal_name)?;
    let ideal = AlgebraicSubset::trusted(&**ring.ring(), ideal_set.clone());
    let mut entries = Vec::new();
    for name in targets {
        let n_set = loaded.submodule(name)?;
        let n = AlgebraicSubset::trusted(&**module.module(), n_set.clone());
        let extras = Extras {
            ideal_j: setting.module_is_ring().then(|| n_set.clone()),
            ..Extras::default()
        };
        let c = Classifier {
            loaded,
            inst: Instance::new(setting.clone(), ideal_set.clone(), n_set.clone(), extras),
            target: name.clone(),
            ideal: ideal_name.to_string(),
        };
        entries.push(c.entry("graded-prime".into(), is_graded_prime(module, &n), None, false, false)?);
        entries.push(c.entry("graded-weakly-prime".into(), is_graded_weakly_prime(module, &n), None, false, false)?);
        entries.push(c.entry("graded-ie-prime".into(), is_graded_ie_prime(module, &n, &ideal), None, true, false)?);
        for g in setting.group().elements() {
            entries.push(c.entry("g-prime".into(), is_g_prime(module, &n, g), Some(g), false, false)?);
            entries.push(c.entry("g-ie-prime".into(), is_g_ie_prime(module, &n, &ideal, g), Some(g), true, false)?);
        }
        if setting.module_is_ring() {
            let j = AlgebraicSubset::trusted(&**ring.ring(), n_set.clone());
            entries.push(c.entry("e-ie-prime-ideal".into(), is_e_ie_prime_ideal(ring, &j, &ideal), None, true, true)?);
        }
    }
    let scopes = std::iter::once(Scope::Whole).chain(setting.group().elements().map(Scope::Component));
    for scope in scopes {
        let v = is_multiplication(module, scope).map_err(|source| CliError::Predicate {
            target: "module".into(),
            source,
        })?;
        let witness = v.witness.as_ref().map(|w| witness_out(loaded, w, false));
        let mut entry = VerdictEntry::from_verdict("multiplication".into(), &v, witness);
        if let Scope::Component(g) = scope {
            entry.degree = Some(setting.group().residues(g));
        }
        entries.push(entry);
    }
    Ok(ClassifyFile {
        command: "classify",
        label: loaded.label.clone(),
        entries,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EnumerateKind {
    GradedSubmodules,
    GradedIdeals,
    GradedPrimes,
}

impl EnumerateKind {
    pub fn name(self) -> &'static str {
        match self {
            EnumerateKind::GradedSubmodules => "graded-submodules",
            EnumerateKind::GradedIdeals => "graded-ideals",
            EnumerateKind::GradedPrimes => "graded-primes",
        }
    }
}

impl std::str::FromStr for EnumerateKind {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        [
            EnumerateKind::GradedSubmodules,
            EnumerateKind::GradedIdeals,
            EnumerateKind::GradedPrimes,
        ]
        .into_iter()
        .find(|k| k.name() == s)
        .ok_or_else(|| CliError::UnknownName {
            kind: "enumeration",
            name: s.to_string(),
        })
    }
}

fn tags(module: &GradedModule, set: &ElementSet) -> Result<Vec<&'static str>, CliError> {
    let mut tags = Vec::new();
    if set.len() == 1 {
        tags.push("zero");
    }
    if set.is_full() {
        tags.push("whole");
        return Ok(tags);
    }
    let n = AlgebraicSubset::trusted(&**module.module(), set.clone());
    let err = |source| CliError::Predicate {
        target: format!("{:?}", set.as_slice()),
        source,
    };
    if is_graded_prime(module, &n).map_err(err)?.value {
        tags.push("graded-prime");
    }
    if is_graded_weakly_prime(module, &n).map_err(err)?.value {
        tags.push("graded-weakly-prime");
    }
    Ok(tags)
}

pub fn enumerate(loaded: &Loaded, kind: EnumerateKind) -> Result<EnumerateFile, CliError> {
    let setting = &loaded.setting;
    let ring = setting.ring();
    let scalars: Vec<usize> = ring.ring().elements().collect();
    // ideals are classified as submodules of the ring over itself
    let (module, sets) = match kind {
        EnumerateKind::GradedIdeals => {
            let m = build_module(&ModuleSpec::Ring, ring.ring()).map_err(|e| CliError::invalid("ring", e))?;
            let graded = GradedModule::from_spec(ring.clone(), Arc::new(m), &GradingSpec::Inherit)
                .map_err(|e| CliError::invalid("ring.grading", e))?;
            (Arc::new(graded), setting.graded_ideals().to_vec())
        }
        _ => (setting.module().clone(), setting.graded_submodules().to_vec()),
    };
    let mut out = Vec::new();
    for set in sets {
        let tags = tags(&module, &set)?;
        if kind == EnumerateKind::GradedPrimes && !tags.contains(&"graded-prime") {
            continue;
        }
        out.push(EnumeratedSet {
            generators: generators(&**module.module(), &scalars, &set),
            elements: set.iter().collect(),
            tags,
        });
    }
    Ok(EnumerateFile {
        command: "enumerate",
        label: loaded.label.clone(),
        kind: kind.name(),
        count: out.len(),
        sets: out,
    })
}

#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
enum Range {
    List(Vec<usize>),
    Span { from: usize, to: usize },
}

impl Range {
    fn values(&self) -> Vec<usize> {
        match self {
            Range::List(v) => v.clone(),
            Range::Span { from, to } => (*from..=*to).collect(),
        }
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct GroupRingEntry {
    coefficients: usize,
    group: Vec<usize>,
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct CorpusSection {
    cyclic: Option<Range>,
    #[serde(default)]
    group_rings: Vec<GroupRingEntry>,
    axis_products: Option<Range>,
    #[serde(default)]
    instance_files: Vec<PathBuf>,
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct ClaimsSection {
    run: Option<Vec<String>>,
    required: Option<Vec<String>>,
    variants: Option<Vec<String>>,
}

/// The `--config` document.
#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct SuiteConfigFile {
    corpus: Option<CorpusSection>,
    #[serde(default)]
    claims: ClaimsSection,
}

fn claim_list<S: AsRef<str>>(names: &[S]) -> Result<Vec<ClaimId>, CliError> {
    let mut out = Vec::new();
    for name in names {
        let name = name.as_ref().trim();
        match name {
            "" => {}
            "all" => out.extend(ClaimId::ALL),
            _ => out.push(name.parse().map_err(|_| CliError::UnknownName {
                kind: "claim",
                name: name.to_string(),
            })?),
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// Accepts `base`, `localized`, `both`, optionally prefixed by `localized-ideal=`.
pub fn parse_variant(s: &str) -> Result<Vec<LocalizedIdeal>, CliError> {
    let v = s.strip_prefix("localized-ideal=").unwrap_or(s);
    if v == "both" {
        return Ok(LocalizedIdeal::BOTH.to_vec());
    }
    v.parse().map(|x| vec![x]).map_err(|_| CliError::UnknownName {
        kind: "variant",
        name: s.to_string(),
    })
}

fn variant_list<S: AsRef<str>>(names: &[S]) -> Result<Vec<LocalizedIdeal>, CliError> {
    let mut out = Vec::new();
    for n in names {
        out.extend(parse_variant(n.as_ref())?);
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// Overrides applied on top of the configuration.
#[derive(Debug, Clone, Default)]
pub struct SuiteOptions {
    pub config: Option<PathBuf>,
    pub claims: Option<String>,
    pub required: Option<String>,
    pub variants: Vec<String>,
    pub jobs: Option<usize>,
    pub timing: bool,
}

fn split(list: &str) -> Vec<&str> {
    list.split(',').collect()
}

/// Builds the run configuration. Without `--config` the full default corpus
/// and claim set are used.
pub fn suite_config(opts: &SuiteOptions) -> Result<SuiteConfig, CliError> {
    let mut config = SuiteConfig::default();
    if let Some(path) = &opts.config {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.clone(),
            source,
        })?;
        let origin = path.display().to_string();
        let file: SuiteConfigFile = toml::from_str(&text).map_err(|e| CliError::parse(&origin, &text, &e))?;
        if let Some(corpus) = &file.corpus {
            let mut settings = BTreeSet::new();
            for n in corpus.cyclic.iter().flat_map(Range::values) {
                settings.insert(SettingSpec::Cyclic(n));
            }
            for g in &corpus.group_rings {
                settings.insert(SettingSpec::GroupRing {
                    coefficients: g.coefficients,
                    group: g.group.clone(),
                });
            }
            for n in corpus.axis_products.iter().flat_map(Range::values) {
                settings.insert(SettingSpec::AxisProduct(n));
            }
            config.settings = settings.into_iter().collect();
            let base = path.parent().unwrap_or(Path::new("."));
            for f in &corpus.instance_files {
                let loaded = Loaded::from_path(&base.join(f))?;
                config.extra.extend(loaded.suite_instances()?);
            }
        }
        if let Some(run) = &file.claims.run {
            config.claims = claim_list(run)?;
        }
        if let Some(req) = &file.claims.required {
            config.required = claim_list(req)?;
        }
        if let Some(v) = &file.claims.variants {
            config.variants = variant_list(v)?;
        }
    }
    if let Some(c) = &opts.claims {
        config.claims = claim_list(&split(c))?;
    }
    if let Some(r) = &opts.required {
        config.required = claim_list(&split(r))?;
    }
    if !opts.variants.is_empty() {
        config.variants = variant_list(&opts.variants)?;
    }
    if config.variants.is_empty() {
        return Err(CliError::Config("no localized-ideal variant selected".into()));
    }
    if opts.jobs == Some(0) {
        return Err(CliError::Config("--jobs must be positive".into()));
    }
    config.jobs = opts.jobs;
    Ok(config)
}

pub fn suite(opts: &SuiteOptions) -> Result<SuiteFile, CliError> {
    let config = suite_config(opts)?;
    let start = Instant::now();
    let report = run_suite(&config)?;
    let elapsed = start.elapsed();
    let timing = opts.timing.then_some(Timing {
        elapsed_ms: elapsed.as_millis(),
    });
    let variants = config.variants.iter().map(|v| v.name()).collect();
    Ok(SuiteFile::new(&report, variants, timing))
}
