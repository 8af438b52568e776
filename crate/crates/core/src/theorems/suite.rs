use rayon::prelude::*;

use crate::error::SuiteError;

use super::claims::{check_claim, ClaimId, ClaimReport, LocalizedIdeal, Shape};
use super::corpus::{build_settings, corpus, default_settings};
use super::instance::{Instance, SettingSpec};
use super::verify::verify_witness;

#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub settings: Vec<SettingSpec>,
    pub claims: Vec<ClaimId>,
    /// Claims whose falsification makes the run fail.
    pub required: Vec<ClaimId>,
    pub variants: Vec<LocalizedIdeal>,
    /// Worker threads; `None` uses the global pool.
    pub jobs: Option<usize>,
    /// Instances checked in addition to the enumerated corpus.
    pub extra: Vec<Instance>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            settings: default_settings(),
            claims: ClaimId::ALL.to_vec(),
            required: ClaimId::REQUIRED.to_vec(),
            variants: LocalizedIdeal::BOTH.to_vec(),
            jobs: None,
            extra: Vec::new(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClaimSummary {
    pub claim: ClaimId,
    pub required: bool,
    /// Instances the claim was checked on.
    pub evaluated: usize,
    /// Hypotheses not met.
    pub filtered: usize,
    pub held: usize,
    pub falsified: usize,
}

#[derive(Debug, Clone)]
pub struct SuiteReport {
    /// Sorted by claim, instance id, then variant.
    pub reports: Vec<ClaimReport>,
    pub summary: Vec<ClaimSummary>,
    pub instances: usize,
    /// The instances checked, sorted by id.
    pub corpus: Vec<Instance>,
}

impl SuiteReport {
    pub fn required_falsifications(&self) -> impl Iterator<Item = &ClaimReport> {
        let required: Vec<ClaimId> = self.summary.iter().filter(|s| s.required).map(|s| s.claim).collect();
        self.reports
            .iter()
            .filter(move |r| r.falsified() && required.contains(&r.claim))
    }

    /// No required claim was falsified.
    pub fn passed(&self) -> bool {
        self.required_falsifications().next().is_none()
    }

    pub fn summary_for(&self, claim: ClaimId) -> Option<&ClaimSummary> {
        self.summary.iter().find(|s| s.claim == claim)
    }
}

pub fn run_suite(config: &SuiteConfig) -> Result<SuiteReport, SuiteError> {
    let run = || {
        let settings = build_settings(&config.settings)?;
        let mut instances = corpus(&settings);
        instances.extend(config.extra.iter().cloned());
        instances.sort_by(|a, b| a.id.cmp(&b.id));
        instances.dedup_by(|a, b| a.id == b.id);
        run_on(&instances, config)
    };
    match config.jobs {
        None => run(),
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| SuiteError::Pool(e.to_string()))?
            .install(run),
    }
}

/// Evaluates `config.claims` on every applicable instance, checking every
/// witness before accepting a falsification.
pub fn run_on(instances: &[Instance], config: &SuiteConfig) -> Result<SuiteReport, SuiteError> {
    let mut claims = config.claims.clone();
    claims.sort();
    claims.dedup();
    let jobs: Vec<(ClaimId, &Instance, LocalizedIdeal)> = claims
        .iter()
        .flat_map(|&c| {
            let variants: Vec<LocalizedIdeal> = if c.shape() == Shape::Localized {
                config.variants.clone()
            } else {
                vec![LocalizedIdeal::Base]
            };
            instances
                .iter()
                .filter(move |inst| c.applies(inst))
                .flat_map(move |inst| variants.clone().into_iter().map(move |v| (c, inst, v)))
        })
        .collect();
    let mut reports = jobs
        .par_iter()
        .map(|&(claim, inst, variant)| {
            let report = check_claim(claim, inst, variant).map_err(|source| SuiteError::Claim {
                claim: claim.to_string(),
                instance: inst.id.clone(),
                source,
            })?;
            if report.falsified() && !verify_witness(inst, &report) {
                return Err(SuiteError::Integrity {
                    claim: claim.to_string(),
                    instance: inst.id.clone(),
                });
            }
            Ok(report)
        })
        .collect::<Result<Vec<_>, _>>()?;
    reports.sort_by(|a, b| (a.claim, &a.instance_id, a.variant).cmp(&(b.claim, &b.instance_id, b.variant)));
    let summary = claims
        .iter()
        .map(|&claim| {
            let of: Vec<&ClaimReport> = reports.iter().filter(|r| r.claim == claim).collect();
            ClaimSummary {
                claim,
                required: config.required.contains(&claim),
                evaluated: of.len(),
                filtered: of.iter().filter(|r| !r.hypotheses_met).count(),
                held: of.iter().filter(|r| r.conclusion_holds == Some(true)).count(),
                falsified: of.iter().filter(|r| r.falsified()).count(),
            }
        })
        .collect();
    Ok(SuiteReport {
        reports,
        summary,
        instances: instances.len(),
        corpus: instances.to_vec(),
    })
}
