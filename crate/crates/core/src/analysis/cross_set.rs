use super::correlation::periodic_xcorr;
use super::DEFAULT_ZERO_TOL;
use crate::error::{Error, Result};
use crate::par;
use crate::zcz::SequenceSet;

#[derive(Debug, Clone, PartialEq)]
pub struct CrossPairReport {
    /// Index of the sequence in the first set.
    pub x: usize,
    /// Index of the sequence in the second set.
    pub y: usize,
    pub max_magnitude: f64,
    pub min_magnitude: f64,
    /// Delays where the crosscorrelation vanishes.
    pub zero_delays: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CrossSetReport {
    /// The bound `t`.
    pub bound: f64,
    pub max_magnitude: f64,
    /// `max_magnitude <= t (1 + 1e-9)`.
    pub within_bound: bool,
    /// For `s = 1`: every delay of every pair has magnitude `t` within `1e-9 t`.
    pub constant_magnitude: Option<bool>,
    pub zero_delay_count: usize,
    pub pairs: Vec<CrossPairReport>,
}

impl CrossSetReport {
    pub fn passed(&self) -> bool {
        self.within_bound && self.constant_magnitude.unwrap_or(true)
    }
}

/// Brute-force crosscorrelation between every sequence of `set_a` and every
/// sequence of `set_b`, checked against the bound `t`.
pub fn cross_set_check(
    set_a: &SequenceSet,
    set_b: &SequenceSet,
    s: usize,
) -> Result<CrossSetReport> {
    if set_a.interlace() != set_b.interlace() {
        return Err(Error::InvalidInterlace(
            "sets use different interlaces".into(),
        ));
    }
    let il = set_a.interlace();
    let t = il.t() as f64;
    let zero_thr = DEFAULT_ZERO_TOL * il.l() as f64;
    let pairs: Vec<(usize, usize)> = (0..set_a.sequences().len())
        .flat_map(|x| (0..set_b.sequences().len()).map(move |y| (x, y)))
        .collect();
    let reports = par::map_slice(&pairs, |&(x, y)| -> Result<CrossPairReport> {
        let prof = periodic_xcorr(&set_a.sequences()[x], &set_b.sequences()[y])?;
        let mags = prof.magnitudes();
        Ok(CrossPairReport {
            x,
            y,
            max_magnitude: mags.iter().copied().fold(0.0, f64::max),
            min_magnitude: mags.iter().copied().fold(f64::INFINITY, f64::min),
            zero_delays: (0..mags.len()).filter(|&p| mags[p] < zero_thr).collect(),
        })
    })
    .into_iter()
    .collect::<Result<Vec<_>>>()?;

    let max_magnitude = reports.iter().map(|r| r.max_magnitude).fold(0.0, f64::max);
    let constant_magnitude = (s == 1).then(|| {
        reports.iter().all(|r| {
            (r.max_magnitude - t).abs() <= 1e-9 * t && (r.min_magnitude - t).abs() <= 1e-9 * t
        })
    });
    Ok(CrossSetReport {
        bound: t,
        max_magnitude,
        within_bound: max_magnitude <= t * (1.0 + 1e-9),
        constant_magnitude,
        zero_delay_count: reports.iter().map(|r| r.zero_delays.len()).sum(),
        pairs: reports,
    })
}
