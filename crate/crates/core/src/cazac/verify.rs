use num_complex::Complex64;

use crate::analysis::periodic_acorr;
use crate::error::{Error, Result};
use crate::numerics::{dft_unitary, ComplexSeq, RootTable};
use crate::par;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CazacReport {
    pub passed: bool,
    /// `max_k ||x(k)| - |x(0)||`.
    pub magnitude_deviation: f64,
    /// `max_{p != 0} |theta_xx(p)|`.
    pub max_sidelobe: f64,
    pub energy: f64,
}

/// Constant magnitude (relative to `|x(0)|`) and ideal periodic
/// autocorrelation (relative to the energy), both within `tol`.
pub fn verify_cazac(x: &ComplexSeq, tol: f64) -> CazacReport {
    let m0 = x[0].norm();
    let magnitude_deviation = x.iter().map(|z| (z.norm() - m0).abs()).fold(0.0, f64::max);
    let acorr = periodic_acorr(x);
    let max_sidelobe = acorr.values()[1..]
        .iter()
        .map(|z| z.norm())
        .fold(0.0, f64::max);
    let energy = acorr.reference();
    CazacReport {
        passed: magnitude_deviation < tol * m0 && max_sidelobe < tol * energy,
        magnitude_deviation,
        max_sidelobe,
        energy,
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct McazacReport {
    pub passed: bool,
    pub a: usize,
    pub t: usize,
    /// `l_hat(z)` for `z = 0..L-1`; `None` where the condition fails.
    pub selected: Vec<Option<usize>>,
    /// Worst `||S_z(l_hat)| - sqrt(L)|` over `z`.
    pub max_peak_deviation: f64,
    /// Worst `|S_z(l)|` over `l != l_hat`.
    pub max_zero_branch: f64,
}

impl McazacReport {
    /// How often each `l` is selected across `z = 0..L-1`.
    pub fn selection_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.a];
        for l in self.selected.iter().flatten() {
            counts[*l] += 1;
        }
        counts
    }
}

/// Partial-DFT characterization of unit-magnitude MCAZAC sequences.
///
/// For every `z` the sums `S_z(l) = sum_{i<t} x(Ai + l) W_t^{zi}` must have
/// exactly one `l` with `|S_z(l)| = sqrt(L)` and all others zero, each within
/// `tol * sqrt(L)`.
pub fn verify_mcazac(x: &ComplexSeq, a: usize, tol: f64) -> Result<McazacReport> {
    let len = x.len();
    if a == 0 || !len.is_multiple_of(a) {
        return Err(Error::NotDivisible {
            what: "sequence length",
            value: len,
            divisor: a,
        });
    }
    let t = len / a;
    let root_l = (len as f64).sqrt();
    let thr = tol * root_l;
    let roots = RootTable::new(t);
    let xs = x.samples();

    // S_z depends on z only through z mod t.
    let per_residue: Vec<(Option<usize>, f64, f64)> = par::map_indexed(t, |z| {
        let mags: Vec<f64> = (0..a)
            .map(|l| {
                let mut acc = Complex64::new(0.0, 0.0);
                for i in 0..t {
                    acc += xs[a * i + l] * roots.at(z * i % t);
                }
                acc.norm()
            })
            .collect();
        let (best, best_mag) =
            mags.iter()
                .copied()
                .enumerate()
                .fold(
                    (0, f64::NEG_INFINITY),
                    |acc, (l, m)| if m > acc.1 { (l, m) } else { acc },
                );
        let peak_dev = (best_mag - root_l).abs();
        let zero_branch = mags
            .iter()
            .enumerate()
            .filter(|&(l, _)| l != best)
            .map(|(_, &m)| m)
            .fold(0.0, f64::max);
        let ok = peak_dev < thr && zero_branch < thr;
        (ok.then_some(best), peak_dev, zero_branch)
    });

    let selected: Vec<Option<usize>> = (0..len).map(|z| per_residue[z % t].0).collect();
    let max_peak_deviation = per_residue.iter().map(|r| r.1).fold(0.0, f64::max);
    let max_zero_branch = per_residue.iter().map(|r| r.2).fold(0.0, f64::max);
    Ok(McazacReport {
        passed: selected.iter().all(Option::is_some),
        a,
        t,
        selected,
        max_peak_deviation,
        max_zero_branch,
    })
}

/// Unitary DFT of a sequence; CAZAC in, CAZAC out.
pub fn fourier_dual(x: &ComplexSeq) -> ComplexSeq {
    dft_unitary(x)
}
