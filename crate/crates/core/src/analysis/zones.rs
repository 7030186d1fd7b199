use super::correlation::{CorrelationKind, CorrelationProfile};
use crate::error::{Error, Result};

/// A run of consecutive zero delays `start, start+1, ..` (cyclic).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ZeroRun {
    pub start: usize,
    pub length: usize,
}

/// Zone structure of a correlation profile under a zero threshold.
#[derive(Debug, Clone, PartialEq)]
pub struct ZoneReport {
    pub kind: CorrelationKind,
    /// `D_ZAZ` for an autocorrelation, `D_ZCCZ` for a crosscorrelation.
    /// `None` when a crosscorrelation is nonzero at delay 0.
    pub zone_length: Option<usize>,
    /// Delays with `|theta| >= threshold`.
    pub support: Vec<usize>,
    /// Largest magnitude outside the zero-delay peak (all delays for cross).
    pub max_nonzero_magnitude: f64,
    /// `max(|theta(D+1)|, |theta(-(D+1))|)`: the value that ends the zone.
    pub edge_magnitude: Option<f64>,
    pub zero_runs: Vec<ZeroRun>,
    /// Absolute threshold used (`zero_tol * reference`).
    pub threshold: f64,
}

impl ZoneReport {
    /// Whether the measured zone is at least `guaranteed` delays long.
    pub fn zone_at_least(&self, guaranteed: usize) -> bool {
        self.zone_length.is_some_and(|d| d >= guaranteed)
    }
}

/// Measure the ZAZ (auto) or ZCCZ (cross) of a profile.
///
/// A value is zero when `|theta(p)| < zero_tol * profile.reference()`. The
/// zone is the largest `D` with `theta(p) = 0` for every `1 <= |p| <= D`
/// (auto) or `0 <= |p| <= D` (cross); an all-zero profile gives `N - 1`.
pub fn measure_zones(profile: &CorrelationProfile, zero_tol: f64) -> ZoneReport {
    let n = profile.len();
    let mags = profile.magnitudes();
    let threshold = zero_tol * profile.reference();
    let zero: Vec<bool> = mags.iter().map(|&m| m < threshold).collect();
    let kind = profile.kind();

    let support: Vec<usize> = (0..n).filter(|&p| !zero[p]).collect();
    let skip_origin = kind == CorrelationKind::Auto;
    let max_nonzero_magnitude = mags
        .iter()
        .enumerate()
        .filter(|&(p, _)| !(skip_origin && p == 0))
        .map(|(_, &m)| m)
        .fold(0.0, f64::max);

    let (zone_length, edge_magnitude) = if kind == CorrelationKind::Cross && !zero[0] {
        (None, Some(mags[0]))
    } else {
        match (1..n).find(|&d| !zero[d] || !zero[n - d]) {
            Some(d) => (Some(d - 1), Some(mags[d].max(mags[n - d]))),
            None => (Some(n - 1), None),
        }
    };

    ZoneReport {
        kind,
        zone_length,
        support,
        max_nonzero_magnitude,
        edge_magnitude,
        zero_runs: zero_runs(&zero),
        threshold,
    }
}

fn zero_runs(zero: &[bool]) -> Vec<ZeroRun> {
    let n = zero.len();
    let Some(anchor) = zero.iter().position(|&z| !z) else {
        return vec![ZeroRun {
            start: 0,
            length: n,
        }];
    };
    let mut runs = Vec::new();
    let mut current: Option<ZeroRun> = None;
    for step in 1..=n {
        let p = (anchor + step) % n;
        if zero[p] {
            match current.as_mut() {
                Some(run) => run.length += 1,
                None => {
                    current = Some(ZeroRun {
                        start: p,
                        length: 1,
                    })
                }
            }
        } else if let Some(run) = current.take() {
            runs.push(run);
        }
    }
    runs.sort_by_key(|r| r.start);
    runs
}

/// Largest `|theta(p)|` over delays not divisible by `t`.
pub fn max_off_grid(profile: &CorrelationProfile, t: usize) -> f64 {
    profile
        .values()
        .iter()
        .enumerate()
        .filter(|(p, _)| p % t != 0)
        .map(|(_, z)| z.norm())
        .fold(0.0, f64::max)
}

/// Upper bound `floor(N / M) - 1` on the ZCZ length of `M` sequences of length `N`.
pub fn zcz_bound(n: usize, m: usize) -> Result<i64> {
    if m < 1 {
        return Err(Error::InvalidParameter(
            "set size M must be at least 1".into(),
        ));
    }
    Ok((n / m) as i64 - 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    fn profile(vals: &[f64], kind: CorrelationKind, reference: f64) -> CorrelationProfile {
        CorrelationProfile::new(
            vals.iter().map(|&v| Complex64::new(v, 0.0)).collect(),
            kind,
            reference,
        )
        .unwrap()
    }

    #[test]
    fn ideal_auto() {
        let p = profile(&[5.0, 0.0, 0.0, 0.0, 0.0], CorrelationKind::Auto, 5.0);
        let r = measure_zones(&p, 1e-9);
        assert_eq!(r.zone_length, Some(4));
        assert_eq!(r.support, vec![0]);
        assert_eq!(r.edge_magnitude, None);
        assert_eq!(
            r.zero_runs,
            vec![ZeroRun {
                start: 1,
                length: 4
            }]
        );
    }

    #[test]
    fn auto_zone_uses_both_signs() {
        // nonzero at p = -2 only
        let p = profile(
            &[8.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0],
            CorrelationKind::Auto,
            8.0,
        );
        let r = measure_zones(&p, 1e-9);
        assert_eq!(r.zone_length, Some(1));
        assert_eq!(r.edge_magnitude, Some(1.0));
        assert_eq!(
            r.zero_runs,
            vec![
                ZeroRun {
                    start: 1,
                    length: 5
                },
                ZeroRun {
                    start: 7,
                    length: 1
                }
            ]
        );
    }

    #[test]
    fn cross_zone() {
        let p = profile(&[0.0, 0.0, 0.0, 3.0, 0.0, 0.0], CorrelationKind::Cross, 4.0);
        let r = measure_zones(&p, 1e-9);
        assert_eq!(r.zone_length, Some(2));
        assert_eq!(r.max_nonzero_magnitude, 3.0);
        // wrap-around run joins delays 4, 5, 0, 1, 2
        assert_eq!(
            r.zero_runs,
            vec![ZeroRun {
                start: 4,
                length: 5
            }]
        );
        let q = profile(&[1.0, 0.0, 0.0], CorrelationKind::Cross, 4.0);
        assert_eq!(measure_zones(&q, 1e-9).zone_length, None);
        let z = profile(&[0.0, 0.0, 0.0], CorrelationKind::Cross, 4.0);
        let rz = measure_zones(&z, 1e-9);
        assert_eq!(rz.zone_length, Some(2));
        assert_eq!(
            rz.zero_runs,
            vec![ZeroRun {
                start: 0,
                length: 3
            }]
        );
    }

    #[test]
    fn bound_values() {
        assert_eq!(zcz_bound(16, 2).unwrap(), 7);
        assert_eq!(zcz_bound(4, 2).unwrap(), 1);
        assert_eq!(zcz_bound(9, 9).unwrap(), 0);
        assert!(zcz_bound(4, 0).is_err());
    }

    #[test]
    fn off_grid() {
        let p = profile(&[4.0, 0.1, 2.0, 0.0], CorrelationKind::Auto, 4.0);
        assert_eq!(max_off_grid(&p, 2), 0.1);
    }
}
