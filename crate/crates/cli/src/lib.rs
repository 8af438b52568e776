//! Batch front end for `gradedie`: instance files, classification,
//! enumeration and claim suites, all reported as JSON.

pub mod commands;
pub mod error;
pub mod file;
pub mod report;

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::commands::{EnumerateKind, SuiteOptions};
use crate::error::CliError;
use crate::file::Loaded;
use crate::report::to_json;

#[derive(Debug, Parser)]
#[command(name = "gradedie", version, about = "Graded prime-family submodules over finite graded rings")]
pub struct Cli {
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check an instance file.
    Validate { path: PathBuf },
    /// Run every predicate on the named submodules.
    Classify {
        path: PathBuf,
        /// Submodule names; repeatable.
        #[arg(long = "target", required = true)]
        targets: Vec<String>,
        /// Ideal name.
        #[arg(long, default_value = "I")]
        ideal: String,
    },
    /// List graded submodules, graded ideals or graded prime submodules.
    Enumerate {
        path: PathBuf,
        #[arg(long, value_parser = |s: &str| s.parse::<EnumerateKind>().map_err(|e| e.to_string()))]
        kind: EnumerateKind,
    },
    /// Check claims over a corpus.
    Suite {
        #[arg(long)]
        config: Option<PathBuf>,
        /// Comma-separated claim ids, or `all`.
        #[arg(long)]
        claims: Option<String>,
        /// Comma-separated claim ids whose falsification fails the run.
        #[arg(long)]
        required: Option<String>,
        /// `localized-ideal=base`, `localized-ideal=localized` or `both`; repeatable.
        #[arg(long = "variant")]
        variants: Vec<String>,
        #[arg(long)]
        no_timing: bool,
        #[arg(long)]
        jobs: Option<usize>,
    },
}

/// The report text and the process exit status.
pub struct Outcome {
    pub report: String,
    pub status: i32,
}

pub fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    let ok = |report| Outcome { report, status: 0 };
    match &cli.command {
        Command::Validate { path } => Ok(ok(to_json(&commands::validate(path)?)?)),
        Command::Classify { path, targets, ideal } => {
            let loaded = Loaded::from_path(path)?;
            Ok(ok(to_json(&commands::classify(&loaded, targets, ideal)?)?))
        }
        Command::Enumerate { path, kind } => {
            let loaded = Loaded::from_path(path)?;
            Ok(ok(to_json(&commands::enumerate(&loaded, *kind)?)?))
        }
        Command::Suite {
            config,
            claims,
            required,
            variants,
            no_timing,
            jobs,
        } => {
            let opts = SuiteOptions {
                config: config.clone(),
                claims: claims.clone(),
                required: required.clone(),
                variants: variants.clone(),
                jobs: *jobs,
                timing: !no_timing,
            };
            let file = commands::suite(&opts)?;
            Ok(Outcome {
                status: if file.passed { 0 } else { 1 },
                report: to_json(&file)?,
            })
        }
    }
}

/// Writes `text` to a sibling temporary file and renames it over `path`.
pub fn write_atomic(path: &Path, text: &str) -> Result<(), CliError> {
    let io = |source| CliError::Io {
        path: path.to_path_buf(),
        source,
    };
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(format!(".tmp{}", std::process::id()));
    let tmp = PathBuf::from(tmp);
    let mut f = std::fs::File::create(&tmp).map_err(io)?;
    f.write_all(text.as_bytes()).map_err(io)?;
    f.sync_all().map_err(io)?;
    drop(f);
    std::fs::rename(&tmp, path).map_err(io)
}

/// Runs the command, writes its report and returns the exit status.
pub fn run(cli: &Cli) -> i32 {
    let result = execute(cli).and_then(|o| {
        match &cli.out {
            Some(path) => write_atomic(path, &o.report)?,
            None => print!("{}", o.report),
        }
        Ok(o.status)
    });
    match result {
        Ok(status) => status,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
