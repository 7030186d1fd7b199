//! Complex sequences, exact unit-root phases and the two DFT conventions.
//!
//! Throughout the crate `W_N = exp(-j 2 pi / N)`. Phase exponents are kept as
//! exact integers reduced modulo the root order and converted to a float angle
//! exactly once, in [`unit_root`].
//!
//! - [`dft_classic`] / [`idft_classic`]: unscaled forward, `1/N` inverse.
//! - [`dft_unitary`] / [`idft_unitary`]: `1/sqrt(N)` both ways, energy preserving.

use std::f64::consts::PI;
use std::ops::Index;

use num_complex::Complex64;

use crate::arith::reduce;
use crate::error::{Error, Result};
use crate::par;

/// A non-empty sequence of finite complex samples.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexSeq(Vec<Complex64>);

impl ComplexSeq {
    pub fn new(samples: Vec<Complex64>) -> Result<Self> {
        if samples.is_empty() {
            return Err(Error::EmptySequence);
        }
        if let Some(index) = samples
            .iter()
            .position(|z| !z.re.is_finite() || !z.im.is_finite())
        {
            return Err(Error::NonFinite { index });
        }
        Ok(Self(samples))
    }

    pub fn from_real(samples: &[f64]) -> Result<Self> {
        Self::new(samples.iter().map(|&r| Complex64::new(r, 0.0)).collect())
    }

    /// Internal constructor for outputs that are finite and non-empty by
    /// construction.
    pub(crate) fn from_vec(samples: Vec<Complex64>) -> Self {
        debug_assert!(!samples.is_empty());
        debug_assert!(samples.iter().all(|z| z.re.is_finite() && z.im.is_finite()));
        Self(samples)
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn samples(&self) -> &[Complex64] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<Complex64> {
        self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Complex64> {
        self.0.iter()
    }

    /// Sum of squared magnitudes.
    pub fn energy(&self) -> f64 {
        energy(self)
    }

    /// Largest elementwise distance to `other`; `None` on length mismatch.
    pub fn max_abs_diff(&self, other: &ComplexSeq) -> Option<f64> {
        if self.len() != other.len() {
            return None;
        }
        Some(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| (a - b).norm())
                .fold(0.0, f64::max),
        )
    }
}

impl Index<usize> for ComplexSeq {
    type Output = Complex64;

    fn index(&self, i: usize) -> &Complex64 {
        &self.0[i]
    }
}

impl<'a> IntoIterator for &'a ComplexSeq {
    type Item = &'a Complex64;
    type IntoIter = std::slice::Iter<'a, Complex64>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

/// `W_modulus^numerator = exp(-j 2 pi numerator / modulus)`, stored reduced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PhaseExponent {
    numerator: u64,
    modulus: u64,
}

impl PhaseExponent {
    pub fn new(numerator: i128, modulus: u64) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::ZeroModulus);
        }
        Ok(Self {
            numerator: reduce(numerator, modulus),
            modulus,
        })
    }

    pub fn numerator(&self) -> u64 {
        self.numerator
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }
}

/// Evaluate `W_m^n`. Quarter-turn points come out exact (`1`, `-j`, `-1`, `j`).
pub fn unit_root(exp: PhaseExponent) -> Complex64 {
    let (n, m) = (exp.numerator, exp.modulus);
    if (4 * n) % m == 0 {
        return match 4 * n / m {
            0 => Complex64::new(1.0, 0.0),
            1 => Complex64::new(0.0, -1.0),
            2 => Complex64::new(-1.0, 0.0),
            _ => Complex64::new(0.0, 1.0),
        };
    }
    let angle = -2.0 * PI * (n as f64) / (m as f64);
    let (s, c) = angle.sin_cos();
    Complex64::new(c, s)
}

/// `W_modulus^numerator` for any integer numerator.
///
/// Panics if `modulus == 0`.
pub fn root_pow(numerator: i128, modulus: u64) -> Complex64 {
    unit_root(PhaseExponent::new(numerator, modulus).expect("modulus must be nonzero"))
}

/// Precomputed `W_N^m` for `m in 0..N`.
#[derive(Debug, Clone)]
pub struct RootTable {
    roots: Vec<Complex64>,
}

impl RootTable {
    pub fn new(order: usize) -> Self {
        assert!(order >= 1, "root order must be at least 1");
        let roots = (0..order)
            .map(|m| root_pow(m as i128, order as u64))
            .collect();
        Self { roots }
    }

    pub fn order(&self) -> usize {
        self.roots.len()
    }

    /// `W_N^e` for an already non-negative exponent.
    #[inline]
    pub fn at(&self, e: usize) -> Complex64 {
        self.roots[e % self.roots.len()]
    }

    /// `W_N^e` for a signed exponent.
    #[inline]
    pub fn pow(&self, e: i128) -> Complex64 {
        self.roots[e.rem_euclid(self.roots.len() as i128) as usize]
    }
}

fn direct_transform(x: &ComplexSeq, inverse: bool, scale: f64) -> ComplexSeq {
    let n = x.len();
    let table = RootTable::new(n);
    let samples = x.samples();
    let out = par::map_indexed(n, |f| {
        let mut acc = Complex64::new(0.0, 0.0);
        for (k, &v) in samples.iter().enumerate() {
            let e = (f * k) % n;
            let w = if inverse {
                table.at((n - e) % n)
            } else {
                table.at(e)
            };
            acc += v * w;
        }
        acc * scale
    });
    ComplexSeq::from_vec(out)
}

/// `X'(f) = sum_k x'(k) W_N^{fk}`.
pub fn dft_classic(x: &ComplexSeq) -> ComplexSeq {
    direct_transform(x, false, 1.0)
}

/// `x'(k) = (1/N) sum_f X'(f) W_N^{-kf}`.
pub fn idft_classic(x: &ComplexSeq) -> ComplexSeq {
    direct_transform(x, true, 1.0 / x.len() as f64)
}

/// `X(f) = (1/sqrt N) sum_k x(k) W_N^{fk}`.
pub fn dft_unitary(x: &ComplexSeq) -> ComplexSeq {
    direct_transform(x, false, 1.0 / (x.len() as f64).sqrt())
}

/// `x(k) = (1/sqrt N) sum_f X(f) W_N^{-kf}`.
pub fn idft_unitary(x: &ComplexSeq) -> ComplexSeq {
    direct_transform(x, true, 1.0 / (x.len() as f64).sqrt())
}

pub fn energy(x: &ComplexSeq) -> f64 {
    x.iter().map(|z| z.norm_sqr()).sum()
}
