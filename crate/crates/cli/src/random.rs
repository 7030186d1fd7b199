//! Seeded random draws for `"random"` parameter blocks and randomized sweeps.
//!
//! Everything runs off a `ChaCha8Rng`, so a seed fixes every draw on every
//! platform.

use std::f64::consts::PI;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use zcz_seq::arith::gcd;
use zcz_seq::cazac::{zadoff_chu, LegacyUnifiedParams, Permutation, UnifiedMcazacParams, ZcParams};
use zcz_seq::{Complex64, ComplexSeq};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn unit_phases<R: Rng>(rng: &mut R, n: usize) -> Vec<Complex64> {
    (0..n)
        .map(|_| Complex64::from_polar(1.0, rng.gen_range(-PI..PI)))
        .collect()
}

pub fn permutation<R: Rng>(rng: &mut R, n: usize) -> Permutation {
    let mut v: Vec<usize> = (0..n).collect();
    v.shuffle(rng);
    Permutation::new(v).expect("shuffled identity is a permutation")
}

/// A root in `1..2n` coprime to `n` (`1` when `n == 1`).
pub fn coprime_root<R: Rng>(rng: &mut R, n: usize) -> i64 {
    let n = n as i64;
    loop {
        let r = rng.gen_range(1..2 * n.max(1));
        if gcd(r, n) == 1 {
            return r;
        }
    }
}

/// Length-`s` ZC with random root and `q`, rotated by a random phase.
pub fn zc_cazac<R: Rng>(rng: &mut R, s: usize) -> ComplexSeq {
    let root = coprime_root(rng, s);
    let q = rng.gen_range(-3..4);
    let rot = Complex64::from_polar(1.0, rng.gen_range(-PI..PI));
    let z = zadoff_chu(&ZcParams::new(s, root, q)).expect("root is coprime");
    if s == 1 {
        return z;
    }
    ComplexSeq::new(z.iter().map(|v| v * rot).collect()).expect("finite")
}

pub fn unified<R: Rng>(rng: &mut R, a: usize, s: usize) -> UnifiedMcazacParams {
    UnifiedMcazacParams {
        a,
        s,
        eta: unit_phases(rng, a),
        gl: (0..a).map(|_| zc_cazac(rng, s)).collect(),
        mu: permutation(rng, a),
    }
}

/// Rejection-samples integer parameters until they validate.
pub fn legacy<R: Rng>(rng: &mut R, a: usize, s: usize) -> LegacyUnifiedParams {
    loop {
        let p = LegacyUnifiedParams {
            a,
            s,
            r0: rng.gen_range(-12..13),
            n0: rng.gen_range(-12..13),
            r1: rng.gen_range(-12..13),
            n1: rng.gen_range(-12..13),
            mu: permutation(rng, a),
            eta: unit_phases(rng, a),
        };
        if p.validate().is_ok() {
            return p;
        }
    }
}
