use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::numerics::{ComplexSeq, RootTable};
use crate::par;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CorrelationKind {
    Auto,
    Cross,
}

/// Dense periodic correlation `theta(p)` for cyclic delays `p = 0..N-1`.
///
/// Negative delays live at `N - p`: `theta_xy(-p) = conj(theta_yx(p))`.
#[derive(Debug, Clone, PartialEq)]
pub struct CorrelationProfile {
    values: Vec<Complex64>,
    kind: CorrelationKind,
    reference: f64,
}

impl CorrelationProfile {
    /// `reference` is the scale zero thresholds are relative to: the energy
    /// for an autocorrelation, `sqrt(E_x E_y)` for a crosscorrelation.
    pub fn new(values: Vec<Complex64>, kind: CorrelationKind, reference: f64) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::EmptySequence);
        }
        Ok(Self {
            values,
            kind,
            reference,
        })
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn kind(&self) -> CorrelationKind {
        self.kind
    }

    pub fn reference(&self) -> f64 {
        self.reference
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.values.len()
    }

    /// Value at a signed delay, taken cyclically.
    pub fn at(&self, p: i64) -> Complex64 {
        let n = self.values.len() as i64;
        self.values[p.rem_euclid(n) as usize]
    }

    pub fn magnitudes(&self) -> Vec<f64> {
        self.values.iter().map(|z| z.norm()).collect()
    }

    /// Delays whose magnitude is at least `rel_tol * reference`.
    pub fn sparse(&self, rel_tol: f64) -> Vec<(usize, Complex64)> {
        let thr = rel_tol * self.reference;
        self.values
            .iter()
            .enumerate()
            .filter(|(_, z)| z.norm() >= thr)
            .map(|(p, &z)| (p, z))
            .collect()
    }

    /// Largest elementwise distance to another profile of the same length.
    pub fn max_abs_diff(&self, other: &CorrelationProfile) -> Option<f64> {
        if self.len() != other.len() {
            return None;
        }
        Some(
            self.values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| (a - b).norm())
                .fold(0.0, f64::max),
        )
    }
}

fn check_len(x: usize, y: usize) -> Result<()> {
    if x != y {
        return Err(Error::LengthMismatch {
            context: "correlation operands",
            expected: x,
            actual: y,
        });
    }
    Ok(())
}

fn time_domain(x: &ComplexSeq, y: &ComplexSeq) -> Vec<Complex64> {
    let n = x.len();
    let (xs, ys) = (x.samples(), y.samples());
    par::map_indexed(n, |p| {
        let mut acc = Complex64::new(0.0, 0.0);
        for k in 0..n {
            acc += xs[k] * ys[(k + p) % n].conj();
        }
        acc
    })
}

/// `theta_xy(p) = sum_k x(k) conj(y(k + p))`, brute force.
pub fn periodic_xcorr(x: &ComplexSeq, y: &ComplexSeq) -> Result<CorrelationProfile> {
    check_len(x.len(), y.len())?;
    let reference = (x.energy() * y.energy()).sqrt();
    CorrelationProfile::new(time_domain(x, y), CorrelationKind::Cross, reference)
}

pub fn periodic_acorr(x: &ComplexSeq) -> CorrelationProfile {
    CorrelationProfile {
        values: time_domain(x, x),
        kind: CorrelationKind::Auto,
        reference: x.energy(),
    }
}

fn freq_domain(xf: &ComplexSeq, yf: &ComplexSeq) -> Vec<Complex64> {
    let n = xf.len();
    let table = RootTable::new(n);
    let prod: Vec<Complex64> = xf
        .iter()
        .zip(yf.iter())
        .map(|(a, b)| a * b.conj())
        .collect();
    par::map_indexed(n, |p| {
        let mut acc = Complex64::new(0.0, 0.0);
        for (f, v) in prod.iter().enumerate() {
            acc += v * table.at((p * f) % n);
        }
        acc
    })
}

/// `theta_xy(p) = sum_f X(f) conj(Y(f)) W_N^{pf}` from unitary DFT values.
pub fn periodic_xcorr_freq(xf: &ComplexSeq, yf: &ComplexSeq) -> Result<CorrelationProfile> {
    check_len(xf.len(), yf.len())?;
    let reference = (xf.energy() * yf.energy()).sqrt();
    CorrelationProfile::new(freq_domain(xf, yf), CorrelationKind::Cross, reference)
}

pub fn periodic_acorr_freq(xf: &ComplexSeq) -> CorrelationProfile {
    CorrelationProfile {
        values: freq_domain(xf, xf),
        kind: CorrelationKind::Auto,
        reference: xf.energy(),
    }
}
