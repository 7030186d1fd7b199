//! Periodic correlation, zone measurement, PAPR and the closed-form
//! correlation predictors for interlaced sequence sets.

mod correlation;
mod cross_set;
mod papr;
mod predict;
mod set_zones;
mod spectral;
mod zones;

pub use correlation::{
    periodic_acorr, periodic_acorr_freq, periodic_xcorr, periodic_xcorr_freq, CorrelationKind,
    CorrelationProfile,
};
pub use cross_set::{cross_set_check, CrossPairReport, CrossSetReport};
pub use papr::{papr, PaprReport};
pub use predict::{predicted_acorr, predicted_xcorr};
pub use set_zones::{set_zone_summary, SetZoneSummary};
pub use spectral::{spectral_compliance, SpectralReport};
pub use zones::{max_off_grid, measure_zones, zcz_bound, ZeroRun, ZoneReport};

/// Default relative threshold below which a correlation value counts as zero.
pub const DEFAULT_ZERO_TOL: f64 = 1e-9;
