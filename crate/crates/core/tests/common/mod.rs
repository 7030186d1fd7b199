#![allow(dead_code)]

use std::f64::consts::PI;

use rand::seq::SliceRandom;
use rand::Rng;
use zcz_seq::arith::gcd;
use zcz_seq::cazac::{zadoff_chu, LegacyUnifiedParams, Permutation, UnifiedMcazacParams, ZcParams};
use zcz_seq::{Complex64, ComplexSeq};

pub fn unit_phases<R: Rng>(rng: &mut R, n: usize) -> Vec<Complex64> {
    (0..n)
        .map(|_| Complex64::from_polar(1.0, rng.gen_range(-PI..PI)))
        .collect()
}

pub fn random_permutation<R: Rng>(rng: &mut R, n: usize) -> Permutation {
    let mut v: Vec<usize> = (0..n).collect();
    v.shuffle(rng);
    Permutation::new(v).unwrap()
}

/// Random unit-magnitude CAZAC of length `s`: a ZC with random root and `q`,
/// rotated by a random constant phase. `[1]` when `s == 1`.
pub fn random_cazac<R: Rng>(rng: &mut R, s: usize) -> ComplexSeq {
    if s == 1 {
        return ComplexSeq::from_real(&[1.0]).unwrap();
    }
    let root = loop {
        let r = rng.gen_range(1..(2 * s as i64));
        if gcd(r, s as i64) == 1 {
            break r;
        }
    };
    let q = rng.gen_range(-3..4);
    let rot = Complex64::from_polar(1.0, rng.gen_range(-PI..PI));
    let z = zadoff_chu(&ZcParams::new(s, root, q)).unwrap();
    ComplexSeq::new(z.iter().map(|v| v * rot).collect()).unwrap()
}

pub fn random_unified<R: Rng>(rng: &mut R, a: usize, s: usize) -> UnifiedMcazacParams {
    UnifiedMcazacParams {
        a,
        s,
        eta: unit_phases(rng, a),
        gl: (0..a).map(|_| random_cazac(rng, s)).collect(),
        mu: random_permutation(rng, a),
    }
}

pub fn random_legacy<R: Rng>(rng: &mut R, a: usize, s: usize) -> LegacyUnifiedParams {
    loop {
        let p = LegacyUnifiedParams {
            a,
            s,
            r0: rng.gen_range(-12..13),
            n0: rng.gen_range(-12..13),
            r1: rng.gen_range(-12..13),
            n1: rng.gen_range(-12..13),
            mu: random_permutation(rng, a),
            eta: unit_phases(rng, a),
        };
        if p.validate().is_ok() {
            return p;
        }
    }
}

/// Test-side brute-force autocorrelation sidelobe check, independent of the
/// library's correlation engine.
pub fn naive_is_cazac(x: &[Complex64], tol: f64) -> bool {
    let n = x.len();
    let e: f64 = x.iter().map(|z| z.norm_sqr()).sum();
    let m0 = x[0].norm();
    if x.iter().any(|z| (z.norm() - m0).abs() >= tol * m0) {
        return false;
    }
    (1..n).all(|p| {
        let mut acc = Complex64::new(0.0, 0.0);
        for k in 0..n {
            acc += x[k] * x[(k + p) % n].conj();
        }
        acc.norm() < tol * e
    })
}
