//! End-to-end runs of the `zczseq` binary in scratch directories.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

const BIN: &str = env!("CARGO_BIN_EXE_zczseq");

fn configs_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("configs")
}

fn run(cwd: &Path, args: &[&str]) -> Output {
    Command::new(BIN)
        .current_dir(cwd)
        .args(args)
        .output()
        .unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn write_config(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.to_string_lossy().into_owned()
}

fn read_json(p: &Path) -> Value {
    serde_json::from_slice(&fs::read(p).unwrap()).unwrap()
}

fn check<'a>(report: &'a Value, name: &str) -> &'a Value {
    report["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["name"] == name)
        .unwrap_or_else(|| panic!("no check {name}"))
}

#[test]
fn minimal_config_writes_two_length_four_sequences() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = configs_dir().join("minimal.json");
    let o = run(dir.path(), &["generate", "--config", cfg.to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let out = dir.path().join("out/minimal");
    for n in 0..2 {
        let text = fs::read_to_string(out.join(format!("set0_seq{n}.csv"))).unwrap();
        assert_eq!(text.lines().count(), 5);
    }
    assert!(!out.join("set0_seq2.csv").exists());
    let m = read_json(&out.join("manifest.json"));
    assert_eq!(m["schema_version"], 1);
    assert_eq!(m["derived"]["n"], 4);
    assert_eq!(m["config"]["carrier"]["kind"], "zc");
}

#[test]
fn a_larger_than_delta_fails_validation_without_writing() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(
        dir.path(),
        "bad.json",
        r#"{"interlace": {"delta": 2, "t": 3, "offsets": [0, 1, 2]},
            "carrier": {"kind": "zc", "root": 1}, "output": {"dir": "out"}}"#,
    );
    let o = run(dir.path(), &["generate", "--config", &cfg]);
    assert_eq!(code(&o), 1);
    assert!(String::from_utf8_lossy(&o.stderr).contains("exceeds delta"));
    assert!(!dir.path().join("out").exists());
}

#[test]
fn malformed_config_is_a_validation_error_and_missing_config_an_io_error() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(dir.path(), "x.json", r#"{"interlace": {"delta": 2}}"#);
    assert_eq!(code(&run(dir.path(), &["verify", "--config", &cfg])), 1);
    assert_eq!(
        code(&run(dir.path(), &["generate", "--config", "nope.json"])),
        3
    );
    let garbled = write_config(dir.path(), "g.json", "{ not json");
    assert_eq!(
        code(&run(dir.path(), &["generate", "--config", &garbled])),
        3
    );
}

#[test]
fn multi_set_with_prime_a_gives_two_sets() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = configs_dir().join("multiset.json");
    let cfg = cfg.to_str().unwrap();
    assert_eq!(code(&run(dir.path(), &["generate", "--config", cfg])), 0);
    let out = dir.path().join("out/multiset");
    let m = read_json(&out.join("manifest.json"));
    assert_eq!(m["sets"].as_array().unwrap().len(), 2);
    for r in 0..2 {
        assert!(out.join(format!("set{r}_carrier.csv")).exists());
        for n in 0..3 {
            assert!(out.join(format!("set{r}_seq{n}.csv")).exists());
        }
    }
    let o = run(dir.path(), &["verify", "--config", cfg]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stdout));
    let rep = read_json(&out.join("verify_report.json"));
    let cs = check(&rep, "cross_set");
    assert_eq!(cs["status"], "pass");
    assert_eq!(cs["threshold"]["bound"], 6.0);

    let an = dir.path().join("an");
    let o = run(
        dir.path(),
        &[
            "analyze",
            "--in",
            out.join("manifest.json").to_str().unwrap(),
            "--out",
            an.to_str().unwrap(),
        ],
    );
    assert_eq!(code(&o), 0);
    let a = read_json(&an.join("analysis.json"));
    let x = &a["cross_sets"][0];
    assert_eq!(x["bound"], 6.0);
    assert!(x["max_magnitude"].as_f64().unwrap() <= 6.0 * (1.0 + 1e-9));
}

#[test]
fn default_job_passes_every_check() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = configs_dir().join("default.json");
    let cfg = cfg.to_str().unwrap();
    assert_eq!(code(&run(dir.path(), &["generate", "--config", cfg])), 0);
    let o = run(dir.path(), &["verify", "--config", cfg]);
    assert_eq!(code(&o), 0);
    let rep = read_json(&dir.path().join("out/default/verify_report.json"));
    assert_eq!(rep["passed"], true);
    assert_eq!(rep["source"], "files");
    assert_eq!(check(&rep, "zaz")["measured"]["min_zone"], 7);
    assert!(
        check(&rep, "zccz")["measured"]["min_zone"]
            .as_u64()
            .unwrap()
            >= 3
    );
    assert!(
        check(&rep, "papr")["measured"]["max_papr_db"]
            .as_f64()
            .unwrap()
            < 1e-8
    );
    assert_eq!(check(&rep, "spectral_compliance")["status"], "pass");
}

#[test]
fn verify_without_generate_checks_regenerated_sequences() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = configs_dir().join("minimal.json");
    let o = run(dir.path(), &["verify", "--config", cfg.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let rep = read_json(&dir.path().join("out/minimal/verify_report.json"));
    assert_eq!(rep["source"], "regenerated");
    assert_eq!(check(&rep, "zcz_bound")["measured"]["optimal"], true);
}

#[test]
fn corrupted_sequence_fails_spectral_compliance() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = configs_dir().join("default.json");
    let cfg = cfg.to_str().unwrap();
    assert_eq!(code(&run(dir.path(), &["generate", "--config", cfg])), 0);
    let seq = dir.path().join("out/default/set0_seq1.csv");
    let text = fs::read_to_string(&seq).unwrap();
    let mut lines: Vec<String> = text.lines().map(String::from).collect();
    lines[3] = "2,1.0000000000000000e0,0.0000000000000000e0".into();
    fs::write(&seq, lines.join("\n") + "\n").unwrap();
    let o = run(dir.path(), &["verify", "--config", cfg]);
    assert_eq!(code(&o), 2);
    let rep = read_json(&dir.path().join("out/default/verify_report.json"));
    assert_eq!(rep["passed"], false);
    assert_eq!(check(&rep, "spectral_compliance")["status"], "fail");
    assert_eq!(check(&rep, "reproduction")["status"], "fail");
}

#[test]
fn papr_not_applicable_when_t_is_not_a_multiple_of_a() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = configs_dir().join("non_mcazac.json");
    let o = run(dir.path(), &["verify", "--config", cfg.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let rep = read_json(&dir.path().join("out/non_mcazac/verify_report.json"));
    let p = check(&rep, "papr");
    assert_eq!(p["status"], "not_applicable");
    assert!(p["note"].as_str().unwrap().contains("multiple of A"));
    assert_eq!(check(&rep, "carrier_mcazac")["status"], "not_applicable");
}

#[test]
fn manifest_is_accepted_as_config_and_reproduces_files() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = configs_dir().join("default.json");
    assert_eq!(
        code(&run(
            dir.path(),
            &["generate", "--config", cfg.to_str().unwrap()]
        )),
        0
    );
    let out = dir.path().join("out/default");
    let before = fs::read(out.join("set0_seq0.csv")).unwrap();
    let manifest = dir.path().join("saved_manifest.json");
    fs::copy(out.join("manifest.json"), &manifest).unwrap();
    fs::remove_dir_all(&out).unwrap();
    // A different seed cannot matter: the manifest holds the drawn values.
    let o = run(
        dir.path(),
        &[
            "--seed",
            "1",
            "generate",
            "--config",
            manifest.to_str().unwrap(),
        ],
    );
    assert_eq!(code(&o), 0);
    assert_eq!(fs::read(out.join("set0_seq0.csv")).unwrap(), before);
}

#[test]
fn seed_override_changes_random_draws() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = configs_dir().join("default.json");
    let cfg = cfg.to_str().unwrap();
    run(dir.path(), &["generate", "--config", cfg]);
    let a = fs::read(dir.path().join("out/default/set0_seq0.csv")).unwrap();
    run(dir.path(), &["--seed", "5", "generate", "--config", cfg]);
    let b = fs::read(dir.path().join("out/default/set0_seq0.csv")).unwrap();
    assert_ne!(a, b);
    let m = read_json(&dir.path().join("out/default/manifest.json"));
    assert_eq!(m["config"]["seed"], 5);
}

#[test]
fn analyze_exports_dense_and_sparse_profiles() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = configs_dir().join("default.json");
    run(dir.path(), &["generate", "--config", cfg.to_str().unwrap()]);
    let out = dir.path().join("out/default");
    let an = dir.path().join("an");
    let o = run(
        dir.path(),
        &[
            "analyze",
            "--in",
            out.join("set0_seq0.csv").to_str().unwrap(),
            "--in",
            out.join("set0_seq1.csv").to_str().unwrap(),
            "--out",
            an.to_str().unwrap(),
        ],
    );
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let dense = fs::read_to_string(an.join("set0_seq0.acorr.csv")).unwrap();
    assert_eq!(dense.lines().next(), Some("delay,re,im,magnitude"));
    assert_eq!(dense.lines().count(), 17);
    let sparse = fs::read_to_string(an.join("set0_seq0.acorr.sparse.csv")).unwrap();
    let delays: Vec<&str> = sparse
        .lines()
        .skip(1)
        .map(|l| l.split(',').next().unwrap())
        .collect();
    assert_eq!(delays, ["0", "8"]);
    let xs = fs::read_to_string(an.join("set0_seq0__set0_seq1.xcorr.sparse.csv")).unwrap();
    assert!(xs
        .lines()
        .skip(1)
        .all(|l| l.split(',').next().unwrap().parse::<usize>().unwrap() % 4 == 0));
    let a = read_json(&an.join("analysis.json"));
    assert_eq!(a["sequences"][0]["zaz"]["zone_length"], 7);
    assert_eq!(a["groups"][0]["zcz_bound"], 7);

    let garbled = dir.path().join("garbled.csv");
    fs::write(&garbled, "index,re,im\n0,zz,1\n").unwrap();
    let o = run(
        dir.path(),
        &[
            "analyze",
            "--in",
            garbled.to_str().unwrap(),
            "--out",
            an.to_str().unwrap(),
        ],
    );
    assert_eq!(code(&o), 3);
}

#[test]
fn global_tol_is_recorded_and_used() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = configs_dir().join("minimal.json");
    let o = run(
        dir.path(),
        &["--tol", "1e-6", "verify", "--config", cfg.to_str().unwrap()],
    );
    assert_eq!(code(&o), 0);
    let rep = read_json(&dir.path().join("out/minimal/verify_report.json"));
    assert_eq!(rep["zero_tol"], 1e-6);
    assert_eq!(
        code(&run(
            dir.path(),
            &["--tol", "0", "verify", "--config", cfg.to_str().unwrap()]
        )),
        1
    );
}
