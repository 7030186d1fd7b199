use crate::numerics::ComplexSeq;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PaprReport {
    pub peak_power: f64,
    pub mean_power: f64,
    /// `10 log10(peak / mean)`; 0 for an all-zero sequence.
    pub papr_db: f64,
    /// `max|x| - min|x|`.
    pub magnitude_spread: f64,
}

pub fn papr(x: &ComplexSeq) -> PaprReport {
    let powers: Vec<f64> = x.iter().map(|z| z.norm_sqr()).collect();
    let mean_power = powers.iter().sum::<f64>() / powers.len() as f64;
    let peak_power = powers.iter().copied().fold(0.0, f64::max);
    let (lo, hi) = x
        .iter()
        .map(|z| z.norm())
        .fold((f64::INFINITY, 0.0f64), |(lo, hi), m| {
            (lo.min(m), hi.max(m))
        });
    let papr_db = if mean_power > 0.0 {
        10.0 * (peak_power / mean_power).log10()
    } else {
        0.0
    };
    PaprReport {
        peak_power,
        mean_power,
        papr_db,
        magnitude_spread: hi - lo,
    }
}
