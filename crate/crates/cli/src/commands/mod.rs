//! Subcommand implementations and the manifest format shared by them.

mod analyze;
mod generate;
mod verify;

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

pub use analyze::analyze;
pub use generate::generate;
pub use verify::{verify, Check, CheckStatus, VerifyReport};

use crate::config::{Job, JobConfig};
use crate::error::CliError;
use crate::io;

pub const SCHEMA_VERSION: u32 = 1;
pub const MANIFEST_FILE: &str = "manifest.json";

/// Provenance record written next to the sequence files. Its `config` is the
/// fully resolved job, so the manifest itself is a valid `--config`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Manifest {
    pub schema_version: u32,
    pub generator: String,
    pub config: JobConfig,
    pub derived: Derived,
    pub sets: Vec<ManifestSet>,
}

/// Quantities implied by the config, echoed for readers of the manifest.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Derived {
    pub delta: usize,
    pub t: usize,
    pub a: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub s: Option<usize>,
    pub n: usize,
    pub l: usize,
    pub offsets: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub sigma: Option<usize>,
    pub zcz_bound: i64,
}

/// File names are relative to the manifest's directory.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ManifestSet {
    pub label: String,
    pub carrier: String,
    pub sequences: Vec<String>,
}

impl Manifest {
    pub fn for_job(job: &Job) -> Self {
        let il = &job.interlace;
        Manifest {
            schema_version: SCHEMA_VERSION,
            generator: format!("zczseq {}", env!("CARGO_PKG_VERSION")),
            config: job.config.clone(),
            derived: Derived {
                delta: il.delta(),
                t: il.t(),
                a: il.a(),
                s: job.s,
                n: il.n(),
                l: il.l(),
                offsets: il.offsets().to_vec(),
                sigma: il.sigma(),
                zcz_bound: zcz_seq::analysis::zcz_bound(il.n(), il.a()).expect("A >= 1"),
            },
            sets: job
                .sets
                .iter()
                .enumerate()
                .map(|(r, set)| ManifestSet {
                    label: set.label().to_string(),
                    carrier: format!("set{r}_carrier.csv"),
                    sequences: (0..set.sequences().len())
                        .map(|n| format!("set{r}_seq{n}.csv"))
                        .collect(),
                })
                .collect(),
        }
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let v = io::read_json_value(path)?;
        let m: Manifest = serde_json::from_value(v).map_err(|e| CliError::format(path, e))?;
        if m.schema_version != SCHEMA_VERSION {
            return Err(CliError::format(
                path,
                format!("unsupported manifest schema_version {}", m.schema_version),
            ));
        }
        Ok(m)
    }
}

/// Read a job config, accepting either a plain config or a manifest.
pub fn load_config(path: &Path) -> Result<JobConfig, CliError> {
    let v = io::read_json_value(path)?;
    if v.get("schema_version").is_some() {
        Ok(Manifest::load(path)?.config)
    } else {
        io::from_value(path, v)
    }
}

pub(crate) fn output_dir(job: &Job) -> PathBuf {
    PathBuf::from(&job.config.output.dir)
}
