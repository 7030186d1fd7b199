//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails. Run with `cargo test -p zcz-cli --test acceptance`.

use std::collections::BTreeMap;
use std::fs;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::time::Instant;

use rand::Rng;
use zcz_cli::random;
use zcz_seq::analysis::{
    cross_set_check, max_off_grid, papr, periodic_xcorr, periodic_xcorr_freq, predicted_acorr,
    predicted_xcorr, set_zone_summary, zcz_bound,
};
use zcz_seq::arith::gcd;
use zcz_seq::cazac::{
    congruent_permutation_family, fourier_dual, generalized_unified, legacy_unified, verify_cazac,
    verify_mcazac, zadoff_chu, ZcParams,
};
use zcz_seq::numerics::dft_unitary;
use zcz_seq::zcz::{
    build_interlace, multi_set_generate, orthogonal_set_dft, synthesize, InterlaceSpec,
    SequenceSet, ZazExtensionSpec,
};
use zcz_seq::ComplexSeq;

const TOL: f64 = 1e-9;

type Outcome = Result<String, String>;
type Criterion<'a> = (u32, &'static str, Box<dyn Fn() -> Outcome + 'a>);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Every sequence produced for criteria 1 and 2, reused by criterion 4.
struct Carriers {
    zc: Vec<(String, ComplexSeq)>,
    mcazac: Vec<(String, ComplexSeq)>,
}

fn zc_sweep() -> Vec<(String, ComplexSeq)> {
    let mut out = Vec::new();
    for l in 1..=64usize {
        // Roots 1..2L cover every distinct sequence for both parities of L.
        for alpha in 1..(2 * l as i64) {
            if gcd(alpha, l as i64) != 1 {
                continue;
            }
            for q in [0, 1, -1] {
                let x = zadoff_chu(&ZcParams::new(l, alpha, q)).expect("coprime root");
                out.push((format!("ZC(L={l}, alpha={alpha}, q={q})"), x));
            }
        }
    }
    out
}

fn mcazac_draws() -> Vec<(String, usize, ComplexSeq)> {
    let mut rng = random::rng(0x5eed_0002);
    let mut out = Vec::new();
    for a in 1..=5 {
        for s in 1..=3 {
            for d in 0..20 {
                let g = generalized_unified(&random::unified(&mut rng, a, s)).expect("valid draw");
                out.push((format!("generalized(A={a}, s={s}, #{d})"), a, g));
                let l = legacy_unified(&random::legacy(&mut rng, a, s)).expect("valid draw");
                out.push((format!("legacy(A={a}, s={s}, #{d})"), a, l));
            }
        }
    }
    out
}

fn criterion_1(zc: &[(String, ComplexSeq)]) -> Outcome {
    let mut worst = 0.0f64;
    for (name, x) in zc {
        let r = verify_cazac(x, TOL);
        ensure(r.passed, || {
            format!("{name}: sidelobe {:e}", r.max_sidelobe)
        })?;
        worst = worst.max(r.max_sidelobe);
    }
    Ok(format!(
        "{} sequences, worst sidelobe {worst:.2e}",
        zc.len()
    ))
}

fn criterion_2(draws: &[(String, usize, ComplexSeq)]) -> Outcome {
    let mut worst = 0.0f64;
    for (name, a, x) in draws {
        let c = verify_cazac(x, TOL);
        ensure(c.passed, || {
            format!("{name}: not CAZAC (sidelobe {:e})", c.max_sidelobe)
        })?;
        let m = verify_mcazac(x, *a, TOL).map_err(|e| format!("{name}: {e}"))?;
        ensure(m.passed, || format!("{name}: partial-DFT test failed"))?;
        worst = worst.max(m.max_zero_branch);
    }
    Ok(format!(
        "{} carriers, worst zero branch {worst:.2e}",
        draws.len()
    ))
}

fn criterion_3() -> Outcome {
    let mut rng = random::rng(0x5eed_0003);
    let base = random::unified(&mut rng, 3, 2);
    for k in 0..20 {
        let p = base.with_eta(random::unit_phases(&mut rng, 3));
        let x = generalized_unified(&p).map_err(|e| e.to_string())?;
        let m = verify_mcazac(&x, 3, TOL).map_err(|e| e.to_string())?;
        ensure(m.passed, || format!("draw {k} broke the partial-DFT test"))?;
    }
    Ok("20 re-randomized eta on a fixed A=3, s=2 carrier".into())
}

fn criterion_4(c: &Carriers) -> Outcome {
    let all = c.zc.iter().chain(&c.mcazac);
    let mut count = 0;
    for (name, x) in all {
        let r = verify_cazac(&fourier_dual(x), TOL);
        ensure(r.passed, || format!("dual of {name} is not CAZAC"))?;
        count += 1;
    }
    Ok(format!("{count} Fourier duals"))
}

fn random_offsets<R: Rng>(rng: &mut R, delta: usize, a: usize) -> Vec<usize> {
    let mut v = rand::seq::index::sample(rng, delta, a).into_vec();
    v.sort_unstable();
    v
}

fn random_sets() -> Vec<SequenceSet> {
    let mut rng = random::rng(0x5eed_0005);
    let mut out = Vec::new();
    for _ in 0..60 {
        let delta = rng.gen_range(1..=8);
        let a = rng.gen_range(1..=delta);
        let s = rng.gen_range(1..=8 / a);
        let t = s * a;
        let il = build_interlace(delta, t, &random_offsets(&mut rng, delta, a)).unwrap();
        let carrier = generalized_unified(&random::unified(&mut rng, a, s)).unwrap();
        out.push(synthesize(&il, &orthogonal_set_dft(a).unwrap(), &carrier, "").unwrap());
    }
    out
}

fn criterion_5(sets: &[SequenceSet]) -> Outcome {
    let mut worst_zero = 0.0f64;
    let mut worst_pred = 0.0f64;
    for (k, set) in sets.iter().enumerate() {
        let il = set.interlace();
        let (t, l) = (il.t(), il.l() as f64);
        let seqs = set.sequences();
        let tag = || {
            format!(
                "draw {k} (delta={}, t={t}, offsets={:?})",
                il.delta(),
                il.offsets()
            )
        };
        for x in 0..seqs.len() {
            for y in 0..seqs.len() {
                let prof = periodic_xcorr(&seqs[x], &seqs[y]).map_err(|e| e.to_string())?;
                let mut z = max_off_grid(&prof, t);
                if x != y {
                    z = z.max(prof.values()[0].norm());
                }
                ensure(z < TOL * l, || {
                    format!("{}: ({x},{y}) nonzero off grid {z:e}", tag())
                })?;
                worst_zero = worst_zero.max(z / l);
                let pred = predicted_xcorr(il, set.ortho().row(x), set.ortho().row(y)).unwrap();
                let mut d = prof.max_abs_diff(&pred).unwrap();
                if x == y {
                    d = d.max(prof.max_abs_diff(&predicted_acorr(il)).unwrap());
                }
                ensure(d < TOL * l, || {
                    format!("{}: ({x},{y}) prediction off by {d:e}", tag())
                })?;
                worst_pred = worst_pred.max(d / l);
            }
        }
    }
    Ok(format!(
        "{} interlaces, worst off-grid {worst_zero:.1e}*L, worst prediction error {worst_pred:.1e}*L",
        sets.len()
    ))
}

fn unit_set(il: &InterlaceSpec, s: usize) -> SequenceSet {
    let a = il.a();
    let mut rng = random::rng(0x5eed_0006 + a as u64);
    let carrier = generalized_unified(&random::unified(&mut rng, a, s)).unwrap();
    synthesize(il, &orthogonal_set_dft(a).unwrap(), &carrier, "").unwrap()
}

fn criterion_6() -> Outcome {
    let il = build_interlace(4, 4, &[0, 2]).unwrap();
    let z = set_zone_summary(unit_set(&il, 2).sequences(), TOL).unwrap();
    for r in &z.zaz {
        ensure(r.zone_length == Some(7), || {
            format!("delta=4: ZAZ {:?}, expected 7", r.zone_length)
        })?;
    }
    let ext = ZazExtensionSpec {
        a_prime: 1,
        sigma: 3,
        big_b: 2,
        inner_offsets: vec![0],
    };
    let il = InterlaceSpec::with_extension(6, 6, &ext).unwrap();
    ensure(il.offsets() == [0, 2, 4], || {
        format!("offsets {:?}", il.offsets())
    })?;
    let z = set_zone_summary(unit_set(&il, 2).sequences(), TOL).unwrap();
    for r in &z.zaz {
        ensure(r.zone_length == Some(17), || {
            format!("delta=6: ZAZ {:?}, expected 17", r.zone_length)
        })?;
    }
    Ok("ZAZ 7 (delta=4, sigma=2) and 17 (delta=6, sigma=3)".into())
}

fn criterion_7() -> Outcome {
    let il = build_interlace(2, 2, &[0, 1]).unwrap();
    let set = unit_set(&il, 1);
    ensure(
        set.sequences().len() == 2 && set.sequences()[0].len() == 4,
        || "shape".into(),
    )?;
    let z = set_zone_summary(set.sequences(), TOL).unwrap();
    let bound = zcz_bound(4, 2).unwrap();
    ensure(z.zcz == Some(1) && bound == 1, || {
        format!("ZCZ {:?}, bound {bound}", z.zcz)
    })?;
    for r in &z.zaz {
        ensure(r.zone_length == Some(3), || {
            "autocorrelation not ideal".into()
        })?;
    }
    Ok("M=2, N=4: D_ZCZ = 1 = bound".into())
}

fn criterion_8(groups: &[&[SequenceSet]]) -> Outcome {
    let mut count = 0;
    let (mut worst_db, mut worst_spread) = (0.0f64, 0.0f64);
    for set in groups.iter().flat_map(|g| g.iter()) {
        let il = set.interlace();
        let expect = (il.a() as f64 / il.delta() as f64).sqrt();
        for x in set.sequences() {
            let p = papr(x);
            let dev = x
                .iter()
                .map(|z| (z.norm() - expect).abs())
                .fold(0.0, f64::max);
            ensure(
                p.papr_db < 1e-8 && p.magnitude_spread < 1e-9 && dev < 1e-9,
                || {
                    format!(
                        "delta={}, A={}: PAPR {:e} dB, spread {:e}, |s|-sqrt(A/delta) {dev:e}",
                        il.delta(),
                        il.a(),
                        p.papr_db,
                        p.magnitude_spread
                    )
                },
            )?;
            worst_db = worst_db.max(p.papr_db);
            worst_spread = worst_spread.max(p.magnitude_spread);
            count += 1;
        }
    }
    Ok(format!(
        "{count} sequences, worst PAPR {worst_db:.1e} dB, worst spread {worst_spread:.1e}"
    ))
}

fn family_sets(il: &InterlaceSpec, s: usize, seed: u64) -> Vec<SequenceSet> {
    let a = il.a();
    let tpl = random::unified(&mut random::rng(seed), a, s);
    let fam = congruent_permutation_family(a).unwrap();
    multi_set_generate(il, &tpl, &fam, &orthogonal_set_dft(a).unwrap()).unwrap()
}

fn criterion_9() -> Outcome {
    let il = build_interlace(6, 5, &[0, 1, 2, 3, 5]).unwrap();
    let sets = family_sets(&il, 1, 0x5eed_0009);
    ensure(sets.len() == 4, || {
        format!("{} sets from the A=5 family", sets.len())
    })?;
    for i in 0..sets.len() {
        for j in i + 1..sets.len() {
            let r = cross_set_check(&sets[i], &sets[j], 1).unwrap();
            ensure(r.constant_magnitude == Some(true) && r.within_bound, || {
                format!(
                    "A=5 sets {i},{j}: max {} not constant at t=5",
                    r.max_magnitude
                )
            })?;
        }
    }
    let il = build_interlace(5, 6, &[0, 2, 3]).unwrap();
    let sets = family_sets(&il, 2, 0x5eed_0019);
    let r = cross_set_check(&sets[0], &sets[1], 2).unwrap();
    ensure(r.max_magnitude <= 6.0 * (1.0 + 1e-9), || {
        format!("A=3, s=2: max {}", r.max_magnitude)
    })?;
    ensure(r.zero_delay_count > 0, || "A=3, s=2: no zero delay".into())?;
    Ok(format!(
        "A=5: |theta| = 5 at every delay over 6 set pairs; A=3, s=2: max {:.6}, {} zero delays",
        r.max_magnitude, r.zero_delay_count
    ))
}

fn criterion_10() -> Outcome {
    let mut rng = random::rng(0x5eed_0010);
    let mut worst = 0.0f64;
    for k in 0..100 {
        let n = rng.gen_range(1..=128);
        let draw = |rng: &mut rand_chacha::ChaCha8Rng| {
            let v = (0..n)
                .map(|_| {
                    zcz_seq::Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
                })
                .collect();
            ComplexSeq::new(v).unwrap()
        };
        let x = draw(&mut rng);
        let y = draw(&mut rng);
        let t = periodic_xcorr(&x, &y).unwrap();
        let f = periodic_xcorr_freq(&dft_unitary(&x), &dft_unitary(&y)).unwrap();
        let rel = t.max_abs_diff(&f).unwrap() / (x.energy() * y.energy()).sqrt();
        ensure(rel <= 1e-10, || {
            format!("pair {k} (N={n}): relative difference {rel:e}")
        })?;
        worst = worst.max(rel);
    }
    Ok(format!("100 pairs, worst relative difference {worst:.1e}"))
}

fn files_under(root: &Path) -> BTreeMap<PathBuf, Vec<u8>> {
    let mut out = BTreeMap::new();
    let mut stack = vec![root.to_path_buf()];
    while let Some(dir) = stack.pop() {
        for entry in fs::read_dir(&dir).unwrap() {
            let p = entry.unwrap().path();
            if p.is_dir() {
                stack.push(p);
            } else {
                out.insert(
                    p.strip_prefix(root).unwrap().to_path_buf(),
                    fs::read(&p).unwrap(),
                );
            }
        }
    }
    out
}

fn cli_round(default_cfg: &Path) -> Result<BTreeMap<PathBuf, Vec<u8>>, String> {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let cfg = default_cfg.to_str().unwrap();
    let steps: [&[&str]; 3] = [
        &["generate", "--config", cfg],
        &["verify", "--config", cfg],
        &[
            "analyze",
            "--in",
            "out/default/manifest.json",
            "--out",
            "analysis",
        ],
    ];
    for args in steps {
        let o = Command::new(env!("CARGO_BIN_EXE_zczseq"))
            .current_dir(dir.path())
            .args(args)
            .output()
            .map_err(|e| e.to_string())?;
        ensure(o.status.success(), || {
            format!(
                "`{}` exited {:?}: {}",
                args.join(" "),
                o.status.code(),
                String::from_utf8_lossy(&o.stderr)
            )
        })?;
    }
    Ok(files_under(dir.path()))
}

fn criterion_11() -> Outcome {
    let cfg = Path::new(env!("CARGO_MANIFEST_DIR")).join("configs/default.json");
    let first = cli_round(&cfg)?;
    let second = cli_round(&cfg)?;
    ensure(first.keys().eq(second.keys()), || {
        "runs produced different file lists".into()
    })?;
    for (p, bytes) in &first {
        ensure(&second[p] == bytes, || {
            format!("{} differs between runs", p.display())
        })?;
    }
    ensure(
        first.contains_key(Path::new("out/default/verify_report.json")),
        || "no verify report".into(),
    )?;
    Ok(format!(
        "{} files byte-identical across two runs, all exits 0",
        first.len()
    ))
}

fn main() {
    let start = Instant::now();
    let zc = zc_sweep();
    let draws = mcazac_draws();
    let carriers = Carriers {
        zc: zc.clone(),
        mcazac: draws
            .iter()
            .map(|(n, _, x)| (n.clone(), x.clone()))
            .collect(),
    };
    let sets = random_sets();
    let fixed: Vec<SequenceSet> = vec![
        unit_set(&build_interlace(4, 4, &[0, 2]).unwrap(), 2),
        unit_set(&build_interlace(2, 2, &[0, 1]).unwrap(), 1),
    ];
    let fam_sets = family_sets(&build_interlace(5, 6, &[0, 2, 3]).unwrap(), 2, 0x5eed_0019);

    let criteria: Vec<Criterion> = vec![
        (1, "CAZAC generators", Box::new(|| criterion_1(&zc))),
        (2, "MCAZAC generators", Box::new(|| criterion_2(&draws))),
        (3, "modulatability", Box::new(criterion_3)),
        (4, "Fourier duality", Box::new(|| criterion_4(&carriers))),
        (
            5,
            "ZCZ structure and predictions",
            Box::new(|| criterion_5(&sets)),
        ),
        (6, "ZAZ extension", Box::new(criterion_6)),
        (7, "optimality at A = delta", Box::new(criterion_7)),
        (
            8,
            "PAPR",
            Box::new(|| criterion_8(&[&sets, &fixed, &fam_sets])),
        ),
        (9, "multi-set bounds", Box::new(criterion_9)),
        (
            10,
            "time/frequency correlation agreement",
            Box::new(criterion_10),
        ),
        (11, "CLI determinism", Box::new(criterion_11)),
    ];

    let mut failed = 0;
    for (id, name, f) in &criteria {
        let t0 = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let secs = t0.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS criterion {id:>2} ({name}): {detail} [{secs:.2}s]"),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {id:>2} ({name}): {why} [{secs:.2}s]");
            }
        }
    }
    let total = start.elapsed().as_secs_f64();
    println!(
        "acceptance: {} of {} criteria passed in {total:.1}s",
        criteria.len() - failed,
        criteria.len()
    );
    if total >= 60.0 {
        println!("FAIL acceptance exceeded the one-minute budget");
        failed += 1;
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
