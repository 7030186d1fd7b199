use std::collections::BTreeSet;
use std::path::{Path, PathBuf};

use serde_json::{json, Value};
use zcz_seq::analysis::{
    cross_set_check, measure_zones, papr, periodic_acorr, periodic_xcorr, zcz_bound, ZoneReport,
};
use zcz_seq::ComplexSeq;

use super::{Manifest, SCHEMA_VERSION};
use crate::config::{plan, Overrides, DEFAULT_ZERO_TOL};
use crate::error::CliError;
use crate::io;

pub const ANALYSIS_FILE: &str = "analysis.json";

struct Named {
    name: String,
    seq: ComplexSeq,
}

/// Sequences analysed together: one per manifest set, or all bare CSV inputs.
struct Group {
    name: String,
    members: Vec<Named>,
}

fn stem(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "input".into())
}

fn zone_json(z: &ZoneReport) -> Value {
    json!({
        "zone_length": z.zone_length,
        "support": z.support,
        "max_nonzero_magnitude": z.max_nonzero_magnitude,
        "edge_magnitude": z.edge_magnitude,
        "threshold": z.threshold,
    })
}

fn is_manifest(path: &Path) -> bool {
    path.extension().is_some_and(|e| e == "json")
}

/// Export dense and sparse correlation profiles plus zone, PAPR and (for
/// multi-set manifests) cross-set reports into `out`.
pub fn analyze(inputs: &[PathBuf], out: &Path, ov: Overrides) -> Result<Value, CliError> {
    if inputs.is_empty() {
        return Err(CliError::Validation(
            "analyze needs at least one --in".into(),
        ));
    }
    let mut groups: Vec<Group> = Vec::new();
    let mut loose = Vec::new();
    let mut cross_sets = Vec::new();
    let mut manifest_tol = None;

    for path in inputs {
        if !is_manifest(path) {
            loose.push(Named {
                name: stem(path),
                seq: io::read_sequence(path)?,
            });
            continue;
        }
        let m = Manifest::load(path)?;
        manifest_tol = manifest_tol.or(m.config.zero_tol);
        let dir = path.parent().unwrap_or(Path::new(""));
        let mut members_per_set = Vec::new();
        for entry in &m.sets {
            let members = entry
                .sequences
                .iter()
                .map(|f| {
                    let p = dir.join(f);
                    Ok(Named {
                        name: stem(&p),
                        seq: io::read_sequence(&p)?,
                    })
                })
                .collect::<Result<Vec<_>, CliError>>()?;
            members_per_set.push(members);
        }
        if m.sets.len() > 1 {
            let job = plan(&m.config, Overrides::default())?;
            let s = job.s.expect("multi-set jobs have t = sA");
            let sets = job
                .sets
                .iter()
                .zip(&members_per_set)
                .map(|(set, ms)| {
                    set.with_sequences(ms.iter().map(|n| n.seq.clone()).collect())
                        .map_err(|e| CliError::format(path, e))
                })
                .collect::<Result<Vec<_>, _>>()?;
            for i in 0..sets.len() {
                for j in i + 1..sets.len() {
                    let rep = cross_set_check(&sets[i], &sets[j], s)
                        .map_err(|e| CliError::format(path, e))?;
                    cross_sets.push(json!({
                        "sets": [m.sets[i].label, m.sets[j].label],
                        "bound": rep.bound,
                        "max_magnitude": rep.max_magnitude,
                        "within_bound": rep.within_bound,
                        "constant_magnitude": rep.constant_magnitude,
                        "zero_delay_count": rep.zero_delay_count,
                        "passed": rep.passed(),
                    }));
                }
            }
        }
        for (entry, members) in m.sets.iter().zip(members_per_set) {
            groups.push(Group {
                name: entry.label.clone(),
                members,
            });
        }
    }
    if !loose.is_empty() {
        groups.push(Group {
            name: "inputs".into(),
            members: loose,
        });
    }

    let mut seen = BTreeSet::new();
    for g in &groups {
        for m in &g.members {
            if !seen.insert(m.name.clone()) {
                return Err(CliError::Validation(format!(
                    "duplicate input name {:?}",
                    m.name
                )));
            }
        }
    }

    let tol = ov.tol.or(manifest_tol).unwrap_or(DEFAULT_ZERO_TOL);
    if !(tol.is_finite() && tol > 0.0) {
        return Err(CliError::Validation(format!(
            "zero tolerance must be positive, got {tol}"
        )));
    }

    let mut seq_reports = Vec::new();
    let mut pair_reports = Vec::new();
    let mut group_reports = Vec::new();
    for g in &groups {
        let mut zones: Vec<Option<usize>> = Vec::new();
        for m in &g.members {
            let prof = periodic_acorr(&m.seq);
            io::write_atomic(
                &out.join(format!("{}.acorr.csv", m.name)),
                &io::profile_csv(&prof),
            )?;
            io::write_atomic(
                &out.join(format!("{}.acorr.sparse.csv", m.name)),
                &io::sparse_profile_csv(&prof, tol),
            )?;
            let z = measure_zones(&prof, tol);
            zones.push(z.zone_length);
            let p = papr(&m.seq);
            seq_reports.push(json!({
                "name": m.name,
                "group": g.name,
                "length": m.seq.len(),
                "energy": m.seq.energy(),
                "papr": {
                    "peak_power": p.peak_power,
                    "mean_power": p.mean_power,
                    "papr_db": p.papr_db,
                    "magnitude_spread": p.magnitude_spread,
                },
                "zaz": zone_json(&z),
            }));
        }
        for (i, x) in g.members.iter().enumerate() {
            for y in &g.members[i + 1..] {
                let prof = periodic_xcorr(&x.seq, &y.seq)
                    .map_err(|e| CliError::Validation(format!("{} vs {}: {e}", x.name, y.name)))?;
                let base = format!("{}__{}", x.name, y.name);
                io::write_atomic(
                    &out.join(format!("{base}.xcorr.csv")),
                    &io::profile_csv(&prof),
                )?;
                io::write_atomic(
                    &out.join(format!("{base}.xcorr.sparse.csv")),
                    &io::sparse_profile_csv(&prof, tol),
                )?;
                let z = measure_zones(&prof, tol);
                zones.push(z.zone_length);
                pair_reports.push(
                    json!({"group": g.name, "x": x.name, "y": y.name, "zccz": zone_json(&z)}),
                );
            }
        }
        let n = g.members[0].seq.len();
        let zcz = zones.iter().copied().min().flatten();
        group_reports.push(json!({
            "name": g.name,
            "size": g.members.len(),
            "zcz": zcz,
            "zcz_bound": zcz_bound(n, g.members.len()).ok(),
        }));
    }

    let report = json!({
        "schema_version": SCHEMA_VERSION,
        "zero_tol": tol,
        "sequences": seq_reports,
        "pairs": pair_reports,
        "groups": group_reports,
        "cross_sets": cross_sets,
    });
    io::write_atomic(&out.join(ANALYSIS_FILE), &io::json_bytes(&report))?;
    println!(
        "analyzed {} sequence(s) in {} group(s) into {}",
        seq_reports_len(&report),
        groups.len(),
        out.display()
    );
    Ok(report)
}

fn seq_reports_len(report: &Value) -> usize {
    report["sequences"].as_array().map_or(0, Vec::len)
}
