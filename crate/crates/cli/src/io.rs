//! File formats and atomic writes.
//!
//! Sequences are CSV `index,re,im`; profiles are CSV
//! `delay,re,im,magnitude`. Floats use 17 significant digits so every `f64`
//! survives a write/read cycle unchanged.

use std::fs;
use std::io::Write;
use std::path::Path;

use serde::de::DeserializeOwned;
use serde::Serialize;
use zcz_seq::analysis::CorrelationProfile;
use zcz_seq::{Complex64, ComplexSeq};

use crate::error::CliError;

pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

/// Write `bytes` to a temporary file next to `path`, then rename it into place.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> Result<(), CliError> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))?;
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(|e| CliError::io(dir, e))?;
    tmp.write_all(bytes).map_err(|e| CliError::io(path, e))?;
    tmp.as_file()
        .sync_all()
        .map_err(|e| CliError::io(path, e))?;
    tmp.persist(path).map_err(|e| CliError::io(path, e.error))?;
    Ok(())
}

fn csv_writer() -> csv::Writer<Vec<u8>> {
    csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new())
}

fn finish(w: csv::Writer<Vec<u8>>) -> Vec<u8> {
    w.into_inner().expect("writing to memory cannot fail")
}

pub fn sequence_csv(x: &ComplexSeq) -> Vec<u8> {
    let mut w = csv_writer();
    w.write_record(["index", "re", "im"]).unwrap();
    for (k, z) in x.iter().enumerate() {
        w.write_record([k.to_string(), fmt_f64(z.re), fmt_f64(z.im)])
            .unwrap();
    }
    finish(w)
}

pub fn parse_sequence_csv(path: &Path, bytes: &[u8]) -> Result<ComplexSeq, CliError> {
    let mut r = csv::ReaderBuilder::new().from_reader(bytes);
    let headers = r.headers().map_err(|e| CliError::format(path, e))?.clone();
    if headers.iter().collect::<Vec<_>>() != ["index", "re", "im"] {
        return Err(CliError::format(path, "expected header index,re,im"));
    }
    let mut v = Vec::new();
    for (row, rec) in r.records().enumerate() {
        let rec = rec.map_err(|e| CliError::format(path, e))?;
        let field = |i: usize| rec.get(i).unwrap_or("").trim();
        let index: usize = field(0).parse().map_err(|_| {
            CliError::format(path, format!("row {}: bad index {:?}", row + 1, field(0)))
        })?;
        if index != row {
            return Err(CliError::format(
                path,
                format!("row {}: index {index} out of order", row + 1),
            ));
        }
        let num = |i: usize| -> Result<f64, CliError> {
            field(i).parse::<f64>().map_err(|_| {
                CliError::format(path, format!("row {}: bad number {:?}", row + 1, field(i)))
            })
        };
        v.push(Complex64::new(num(1)?, num(2)?));
    }
    ComplexSeq::new(v).map_err(|e| CliError::format(path, e))
}

pub fn read_sequence(path: &Path) -> Result<ComplexSeq, CliError> {
    let bytes = fs::read(path).map_err(|e| CliError::io(path, e))?;
    parse_sequence_csv(path, &bytes)
}

/// Dense profile: one row per delay `0..N-1`.
pub fn profile_csv(p: &CorrelationProfile) -> Vec<u8> {
    rows_csv(p.values().iter().copied().enumerate())
}

/// Only delays with `|theta| >= rel_tol * reference`.
pub fn sparse_profile_csv(p: &CorrelationProfile, rel_tol: f64) -> Vec<u8> {
    rows_csv(p.sparse(rel_tol).into_iter())
}

fn rows_csv(rows: impl Iterator<Item = (usize, Complex64)>) -> Vec<u8> {
    let mut w = csv_writer();
    w.write_record(["delay", "re", "im", "magnitude"]).unwrap();
    for (d, z) in rows {
        w.write_record([
            d.to_string(),
            fmt_f64(z.re),
            fmt_f64(z.im),
            fmt_f64(z.norm()),
        ])
        .unwrap();
    }
    finish(w)
}

pub fn json_bytes<T: Serialize>(value: &T) -> Vec<u8> {
    let mut v = serde_json::to_vec_pretty(value).expect("serializable");
    v.push(b'\n');
    v
}

pub fn read_json_value(path: &Path) -> Result<serde_json::Value, CliError> {
    let bytes = fs::read(path).map_err(|e| CliError::io(path, e))?;
    serde_json::from_slice(&bytes).map_err(|e| CliError::format(path, e))
}

pub fn from_value<T: DeserializeOwned>(path: &Path, v: serde_json::Value) -> Result<T, CliError> {
    serde_json::from_value(v).map_err(|e| CliError::Validation(format!("{}: {e}", path.display())))
}
