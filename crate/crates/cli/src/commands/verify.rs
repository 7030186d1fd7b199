use std::path::Path;

use serde::Serialize;
use serde_json::{json, Value};
use zcz_seq::analysis::{
    cross_set_check, max_off_grid, papr, periodic_acorr, periodic_xcorr, predicted_acorr,
    predicted_xcorr, set_zone_summary, spectral_compliance, zcz_bound,
};
use zcz_seq::cazac::{verify_cazac, verify_mcazac};
use zcz_seq::zcz::SequenceSet;
use zcz_seq::ComplexSeq;

use super::{load_config, output_dir, Manifest, MANIFEST_FILE, SCHEMA_VERSION};
use crate::config::{plan, Job, JobConfig, Overrides};
use crate::error::CliError;
use crate::io;

pub const REPORT_FILE: &str = "verify_report.json";

/// Envelope checks use fixed limits independent of `--tol`.
const PAPR_DB_LIMIT: f64 = 1e-8;
const SPREAD_LIMIT: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Pass,
    Fail,
    NotApplicable,
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub set: Option<usize>,
    pub status: CheckStatus,
    pub measured: Value,
    pub threshold: Value,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub note: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub schema_version: u32,
    /// `"files"` when checks ran on the files listed in an existing
    /// manifest, `"regenerated"` when on in-memory sequences.
    pub source: String,
    pub zero_tol: f64,
    pub passed: bool,
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn failed(&self) -> usize {
        self.checks
            .iter()
            .filter(|c| c.status == CheckStatus::Fail)
            .count()
    }
}

fn check(name: &str, set: Option<usize>, pass: bool, measured: Value, threshold: Value) -> Check {
    Check {
        name: name.into(),
        set,
        status: if pass {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail
        },
        measured,
        threshold,
        note: String::new(),
    }
}

fn not_applicable(name: &str, set: Option<usize>, note: &str) -> Check {
    Check {
        name: name.into(),
        set,
        status: CheckStatus::NotApplicable,
        measured: Value::Null,
        threshold: Value::Null,
        note: note.into(),
    }
}

fn same_job(a: &JobConfig, b: &JobConfig) -> bool {
    let strip = |c: &JobConfig| JobConfig {
        zero_tol: None,
        seed: None,
        ..c.clone()
    };
    strip(a) == strip(b)
}

/// Sets with their sequences replaced by the on-disk copies, and the carriers.
type Loaded = (Vec<SequenceSet>, Vec<ComplexSeq>);

/// Sets as stored on disk plus the carriers read back, or `None` when no
/// manifest exists in the output directory.
fn load_from_disk(job: &Job) -> Result<Option<Loaded>, CliError> {
    let dir = output_dir(job);
    let path = dir.join(MANIFEST_FILE);
    if !path.exists() {
        return Ok(None);
    }
    let manifest = Manifest::load(&path)?;
    if !same_job(&manifest.config, &job.config) {
        return Err(CliError::Validation(format!(
            "{} was generated from a different configuration",
            path.display()
        )));
    }
    let mut sets = Vec::new();
    let mut carriers = Vec::new();
    for (set, entry) in job.sets.iter().zip(&manifest.sets) {
        let seqs = entry
            .sequences
            .iter()
            .map(|f| io::read_sequence(&dir.join(f)))
            .collect::<Result<Vec<_>, _>>()?;
        let loaded = set
            .with_sequences(seqs)
            .map_err(|e| CliError::format(&path, format!("{}: {e}", entry.label)))?;
        sets.push(loaded);
        carriers.push(io::read_sequence(&dir.join(&entry.carrier))?);
    }
    Ok(Some((sets, carriers)))
}

fn max_diff(a: &[ComplexSeq], b: &[ComplexSeq]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.max_abs_diff(y).unwrap_or(f64::INFINITY))
        .fold(0.0, f64::max)
}

fn set_checks(
    job: &Job,
    r: usize,
    set: &SequenceSet,
    carrier: &ComplexSeq,
    out: &mut Vec<Check>,
) -> Result<(), CliError> {
    let tol = job.zero_tol;
    let il = set.interlace();
    let (a, t, l, n) = (il.a(), il.t(), il.l() as f64, il.n());
    let set_id = Some(r);
    let lib = |e: zcz_seq::Error| CliError::Validation(e.to_string());

    let cz = verify_cazac(carrier, tol);
    out.push(check(
        "carrier_cazac",
        set_id,
        cz.passed,
        json!({"magnitude_deviation": cz.magnitude_deviation, "max_sidelobe": cz.max_sidelobe}),
        json!({"relative": tol}),
    ));
    if il.supports_mcazac() {
        let m = verify_mcazac(carrier, a, tol).map_err(lib)?;
        out.push(check(
            "carrier_mcazac",
            set_id,
            m.passed,
            json!({
                "max_peak_deviation": m.max_peak_deviation,
                "max_zero_branch": m.max_zero_branch,
                "selection_counts": m.selection_counts(),
            }),
            json!({"relative": tol}),
        ));
    } else {
        out.push(not_applicable(
            "carrier_mcazac",
            set_id,
            "t is not a multiple of A",
        ));
    }

    let mut spec_ok = true;
    let (mut oob, mut in_min, mut in_max) = (0.0f64, f64::INFINITY, 0.0f64);
    for x in set.sequences() {
        let rep = spectral_compliance(x, il).map_err(lib)?;
        spec_ok &= rep.passes(tol);
        oob = oob.max(rep.out_of_band_max);
        in_min = in_min.min(rep.in_band_min);
        in_max = in_max.max(rep.in_band_max);
    }
    out.push(check(
        "spectral_compliance",
        set_id,
        spec_ok,
        json!({"out_of_band_max": oob, "in_band_min": in_min, "in_band_max": in_max}),
        json!({"out_of_band": tol, "in_band_deviation": tol}),
    ));

    let seqs = set.sequences();
    let mut off_grid = 0.0f64;
    let mut zero_delay = 0.0f64;
    let mut pred_diff = 0.0f64;
    for x in 0..seqs.len() {
        for y in 0..seqs.len() {
            let prof = periodic_xcorr(&seqs[x], &seqs[y]).map_err(lib)?;
            off_grid = off_grid.max(max_off_grid(&prof, t));
            if x != y {
                zero_delay = zero_delay.max(prof.values()[0].norm());
            }
            if job.config.analysis.predictions {
                let pred =
                    predicted_xcorr(il, set.ortho().row(x), set.ortho().row(y)).map_err(lib)?;
                pred_diff = pred_diff.max(prof.max_abs_diff(&pred).unwrap_or(f64::INFINITY));
                if x == y {
                    let acorr = periodic_acorr(&seqs[x]);
                    let pa = predicted_acorr(il);
                    pred_diff = pred_diff.max(acorr.max_abs_diff(&pa).unwrap_or(f64::INFINITY));
                }
            }
        }
    }
    out.push(check(
        "sparsity",
        set_id,
        off_grid < tol * l && zero_delay < tol * l,
        json!({"max_off_grid": off_grid, "max_cross_zero_delay": zero_delay}),
        json!({"absolute": tol * l}),
    ));
    if job.config.analysis.predictions {
        out.push(check(
            "predictions",
            set_id,
            pred_diff < tol * l,
            json!({"max_abs_diff": pred_diff}),
            json!({"absolute": tol * l}),
        ));
    } else {
        out.push(not_applicable("predictions", set_id, "disabled in config"));
    }

    if job.config.analysis.zones {
        let z = set_zone_summary(seqs, tol).map_err(lib)?;
        let zaz_min = z.zaz.iter().map(|r| r.zone_length).min().flatten();
        let zaz_need = match il.sigma() {
            Some(sg) => (t * sg - 1).min(n - 1),
            None => t - 1,
        };
        out.push(check(
            "zaz",
            set_id,
            zaz_min.is_some_and(|d| d >= zaz_need),
            json!({"min_zone": zaz_min, "per_sequence": z.zaz.iter().map(|r| r.zone_length).collect::<Vec<_>>()}),
            json!({"at_least": zaz_need}),
        ));
        if z.zccz.is_empty() {
            out.push(not_applicable("zccz", set_id, "single-sequence set"));
        } else {
            let zccz_min = z.zccz.iter().map(|(_, r)| r.zone_length).min().flatten();
            out.push(check(
                "zccz",
                set_id,
                zccz_min.is_some_and(|d| d >= t - 1),
                json!({"min_zone": zccz_min}),
                json!({"at_least": t - 1}),
            ));
        }
        let bound = zcz_bound(n, a).map_err(lib)?;
        out.push(check(
            "zcz_bound",
            set_id,
            z.zcz.is_some_and(|d| d as i64 <= bound),
            json!({"zcz": z.zcz, "optimal": z.zcz.map(|d| d as i64 == bound)}),
            json!({"at_most": bound}),
        ));
    } else {
        for name in ["zaz", "zccz", "zcz_bound"] {
            out.push(not_applicable(name, set_id, "disabled in config"));
        }
    }

    if !job.config.analysis.papr {
        out.push(not_applicable("papr", set_id, "disabled in config"));
    } else if !il.supports_mcazac() {
        out.push(not_applicable(
            "papr",
            set_id,
            "constant envelope needs an MCAZAC carrier, which needs t to be a multiple of A",
        ));
    } else {
        let expect = (a as f64 / il.delta() as f64).sqrt();
        let (mut db, mut spread, mut dev) = (0.0f64, 0.0f64, 0.0f64);
        for x in seqs {
            let p = papr(x);
            db = db.max(p.papr_db);
            spread = spread.max(p.magnitude_spread);
            dev = x
                .iter()
                .map(|z| (z.norm() - expect).abs())
                .fold(dev, f64::max);
        }
        out.push(check(
            "papr",
            set_id,
            db < PAPR_DB_LIMIT && spread < SPREAD_LIMIT && dev < SPREAD_LIMIT,
            json!({"max_papr_db": db, "max_magnitude_spread": spread, "expected_magnitude": expect, "max_magnitude_deviation": dev}),
            json!({"papr_db": PAPR_DB_LIMIT, "magnitude": SPREAD_LIMIT}),
        ));
    }
    Ok(())
}

/// Run every applicable check and write the report. Returns the report;
/// the caller maps failures to an exit status.
pub fn run_checks(job: &Job) -> Result<VerifyReport, CliError> {
    let tol = job.zero_tol;
    let mut checks = Vec::new();
    let regenerated_carriers: Vec<ComplexSeq> =
        job.sets.iter().map(|s| s.carrier().clone()).collect();
    let (sets, carriers, source) = match load_from_disk(job)? {
        Some((sets, carriers)) => {
            let seq_diff = job
                .sets
                .iter()
                .zip(&sets)
                .map(|(a, b)| max_diff(a.sequences(), b.sequences()))
                .fold(0.0, f64::max);
            let car_diff = max_diff(&regenerated_carriers, &carriers);
            checks.push(check(
                "reproduction",
                None,
                seq_diff <= tol && car_diff <= tol,
                json!({"max_sequence_diff": seq_diff, "max_carrier_diff": car_diff}),
                json!({"absolute": tol}),
            ));
            (sets, carriers, "files")
        }
        None => (job.sets.clone(), regenerated_carriers, "regenerated"),
    };

    let a = job.ortho.size();
    let mut ortho_max = 0.0f64;
    for x in 0..a {
        for y in 0..a {
            if x != y {
                ortho_max = ortho_max.max(job.ortho.inner(x, y).norm());
            }
        }
    }
    checks.push(check(
        "orthogonal_set",
        None,
        ortho_max < tol * a as f64,
        json!({"max_inner_product": ortho_max}),
        json!({"absolute": tol * a as f64}),
    ));

    for (r, (set, carrier)) in sets.iter().zip(&carriers).enumerate() {
        set_checks(job, r, set, carrier, &mut checks)?;
    }

    if sets.len() < 2 {
        checks.push(not_applicable("cross_set", None, "single set"));
    } else if !job.config.analysis.cross_set {
        checks.push(not_applicable("cross_set", None, "disabled in config"));
    } else {
        let s = job.s.expect("multi-set jobs have t = sA");
        for i in 0..sets.len() {
            for j in i + 1..sets.len() {
                let rep = cross_set_check(&sets[i], &sets[j], s)
                    .map_err(|e| CliError::Validation(e.to_string()))?;
                let mut c = check(
                    "cross_set",
                    None,
                    rep.passed(),
                    json!({
                        "sets": [i, j],
                        "max_magnitude": rep.max_magnitude,
                        "constant_magnitude": rep.constant_magnitude,
                        "zero_delay_count": rep.zero_delay_count,
                    }),
                    json!({"bound": rep.bound}),
                );
                c.note = format!("sets {i} and {j}");
                checks.push(c);
            }
        }
    }

    let report = VerifyReport {
        schema_version: SCHEMA_VERSION,
        source: source.into(),
        zero_tol: tol,
        passed: checks.iter().all(|c| c.status != CheckStatus::Fail),
        checks,
    };
    Ok(report)
}

pub fn verify(config: &Path, ov: Overrides) -> Result<VerifyReport, CliError> {
    let cfg = load_config(config)?;
    let job = plan(&cfg, ov)?;
    let report = run_checks(&job)?;
    let dir = output_dir(&job);
    io::write_atomic(&dir.join(REPORT_FILE), &io::json_bytes(&report))?;
    for c in &report.checks {
        let status = match c.status {
            CheckStatus::Pass => "PASS",
            CheckStatus::Fail => "FAIL",
            CheckStatus::NotApplicable => "N/A ",
        };
        let set = c.set.map(|r| format!(" [set {r}]")).unwrap_or_default();
        println!("{status} {}{set}", c.name);
    }
    if report.passed {
        Ok(report)
    } else {
        Err(CliError::ChecksFailed {
            failed: report.failed(),
            total: report.checks.len(),
        })
    }
}
