use super::correlation::{periodic_acorr, periodic_xcorr};
use super::zones::{measure_zones, ZoneReport};
use crate::error::Result;
use crate::numerics::ComplexSeq;
use crate::par;

/// Zone structure of a whole sequence set.
#[derive(Debug, Clone, PartialEq)]
pub struct SetZoneSummary {
    /// One autocorrelation report per sequence.
    pub zaz: Vec<ZoneReport>,
    /// One crosscorrelation report per unordered pair `(x, y)`, `x < y`.
    pub zccz: Vec<((usize, usize), ZoneReport)>,
    /// `min(D_ZAZ, D_ZCCZ)` over the set; `None` if some pair has no ZCCZ.
    pub zcz: Option<usize>,
}

pub fn set_zone_summary(seqs: &[ComplexSeq], zero_tol: f64) -> Result<SetZoneSummary> {
    let zaz = par::map_slice(seqs, |s| measure_zones(&periodic_acorr(s), zero_tol));
    let pairs: Vec<(usize, usize)> = (0..seqs.len())
        .flat_map(|x| (x + 1..seqs.len()).map(move |y| (x, y)))
        .collect();
    let zccz = par::map_slice(&pairs, |&(x, y)| -> Result<_> {
        let prof = periodic_xcorr(&seqs[x], &seqs[y])?;
        Ok(((x, y), measure_zones(&prof, zero_tol)))
    })
    .into_iter()
    .collect::<Result<Vec<_>>>()?;

    let zcz = zaz
        .iter()
        .map(|r| r.zone_length)
        .chain(zccz.iter().map(|(_, r)| r.zone_length))
        .try_fold(usize::MAX, |acc, d| d.map(|d| acc.min(d)));
    Ok(SetZoneSummary { zaz, zccz, zcz })
}
