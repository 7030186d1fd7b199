use crate::error::{Error, Result};
use crate::numerics::{dft_unitary, ComplexSeq};
use crate::zcz::InterlaceSpec;

/// Unitary-DFT magnitudes of a sequence split by interlace membership.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralReport {
    /// Largest `|S(f)|` over bins outside the interlace.
    pub out_of_band_max: f64,
    pub in_band_min: f64,
    pub in_band_max: f64,
}

impl SpectralReport {
    /// Out-of-band zero and in-band unit magnitude, both within `tol`.
    pub fn passes(&self, tol: f64) -> bool {
        self.out_of_band_max < tol
            && (self.in_band_min - 1.0).abs() < tol
            && (self.in_band_max - 1.0).abs() < tol
    }
}

pub fn spectral_compliance(x: &ComplexSeq, interlace: &InterlaceSpec) -> Result<SpectralReport> {
    if x.len() != interlace.n() {
        return Err(Error::LengthMismatch {
            context: "sequence vs interlace N",
            expected: interlace.n(),
            actual: x.len(),
        });
    }
    let spec = dft_unitary(x);
    let mut report = SpectralReport {
        out_of_band_max: 0.0,
        in_band_min: f64::INFINITY,
        in_band_max: 0.0,
    };
    for (f, z) in spec.iter().enumerate() {
        let m = z.norm();
        if interlace.is_allowed(f) {
            report.in_band_min = report.in_band_min.min(m);
            report.in_band_max = report.in_band_max.max(m);
        } else {
            report.out_of_band_max = report.out_of_band_max.max(m);
        }
    }
    Ok(report)
}
