//! Exhaustive checking of implications between the predicate families over
//! enumerated finite corpora, with independently re-checked witnesses.

mod claims;
mod corpus;
mod instance;
mod suite;
mod verify;

pub use claims::{
    check_claim, localized_excluded, ClaimId, ClaimReport, ClaimWitness, Finding, Frame, LocalizedIdeal, Shape,
    WitnessPart,
};
pub use corpus::{build_settings, corpus, default_settings, instances_for};
pub use instance::{generators, Extras, Instance, Setting, SettingSpec};
pub use suite::{run_on, run_suite, ClaimSummary, SuiteConfig, SuiteReport};
pub use verify::verify_witness;
