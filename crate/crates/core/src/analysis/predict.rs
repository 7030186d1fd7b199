use num_complex::Complex64;

use super::correlation::{CorrelationKind, CorrelationProfile};
use crate::error::{Error, Result};
use crate::numerics::RootTable;
use crate::zcz::InterlaceSpec;

/// Closed-form crosscorrelation of the sequences built from rows `bx`, `by`
/// with a unit-magnitude carrier:
/// `theta(t q) = t sum_l bx(l) conj(by(l)) W_delta^{q j_l}`, zero off the
/// `t` grid. At `q = 0` this is `t <bx, by>`, which vanishes for distinct
/// orthogonal rows.
pub fn predicted_xcorr(
    interlace: &InterlaceSpec,
    bx: &[Complex64],
    by: &[Complex64],
) -> Result<CorrelationProfile> {
    let a = interlace.a();
    for row in [bx, by] {
        if row.len() != a {
            return Err(Error::LengthMismatch {
                context: "orthogonal row vs interlace A",
                expected: a,
                actual: row.len(),
            });
        }
    }
    let (delta, t) = (interlace.delta(), interlace.t());
    let roots = RootTable::new(delta);
    let mut values = vec![Complex64::new(0.0, 0.0); interlace.n()];
    for q in 0..delta {
        let sum: Complex64 = interlace
            .offsets()
            .iter()
            .enumerate()
            .map(|(l, &j)| bx[l] * by[l].conj() * roots.at(q * j % delta))
            .sum();
        values[t * q] = sum * t as f64;
    }
    CorrelationProfile::new(values, CorrelationKind::Cross, interlace.l() as f64)
}

/// Closed-form autocorrelation: `theta(0) = L`,
/// `theta(t q) = t sum_l W_delta^{q j_l}`, zero off the `t` grid. For
/// ZAZ-extended offsets with factor `sigma`, `theta(t q) = 0` whenever
/// `q` is not a multiple of `sigma`.
pub fn predicted_acorr(interlace: &InterlaceSpec) -> CorrelationProfile {
    let (delta, t) = (interlace.delta(), interlace.t());
    let roots = RootTable::new(delta);
    let mut values = vec![Complex64::new(0.0, 0.0); interlace.n()];
    values[0] = Complex64::new(interlace.l() as f64, 0.0);
    for q in 1..delta {
        if interlace.sigma().is_some_and(|sigma| q % sigma != 0) {
            continue;
        }
        let sum: Complex64 = interlace
            .offsets()
            .iter()
            .map(|&j| roots.at(q * j % delta))
            .sum();
        values[t * q] = sum * t as f64;
    }
    CorrelationProfile::new(values, CorrelationKind::Auto, interlace.l() as f64)
        .expect("interlace has N >= 1")
}
