//! CAZAC and modulatable CAZAC (MCAZAC) sequences.
//!
//! A CAZAC sequence has constant magnitude and an ideal periodic
//! autocorrelation. A CAZAC of length `L = A t` is *modulatable* when it stays
//! CAZAC after multiplying by any unit-magnitude length-`A` sequence repeated
//! `t` times; [`verify_mcazac`] checks the equivalent partial-DFT condition.
//!
//! Generators:
//!
//! - [`zadoff_chu`]: polyphase ZC sequences of any length.
//! - [`legacy_unified`]: the four-integer unified construction of length `s A^2`.
//! - [`generalized_unified`]: carrier `eta(l) g_l(i mod s) W_t^{mu(l) i}` where
//!   each `g_l` is any unit-magnitude CAZAC of length `s`.
//!
//! Permutation families with closed pairwise differences ([`PermutationFamily`])
//! give several carriers whose sequence sets have bounded mutual correlation.

mod permutation;
mod unified;
mod verify;
mod zadoff_chu;

pub use permutation::{
    congruent_permutation_family, verify_permutation_family, Permutation, PermutationFamily,
};
pub use unified::{generalized_unified, legacy_unified, LegacyUnifiedParams, UnifiedMcazacParams};
pub use verify::{fourier_dual, verify_cazac, verify_mcazac, CazacReport, McazacReport};
pub use zadoff_chu::{zadoff_chu, zc_cyclic_shift_identity_check, ZcParams};

/// Default tolerance for the CAZAC and MCAZAC verifiers.
pub const DEFAULT_TOL: f64 = 1e-9;

/// Allowed deviation of `|eta(l)|` and `|g_l(k)|` from 1.
pub(crate) const UNIT_TOL: f64 = 1e-9;
