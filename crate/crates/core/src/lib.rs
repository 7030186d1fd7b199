//! Spectrally constrained zero-correlation-zone (ZCZ) sequence sets.
//!
//! The crate builds sets of time-domain sequences whose DFT is confined to a
//! block-repetitive interlace of allowed frequencies, and whose periodic
//! correlation functions are sparse with zero zones whose size depends only
//! on the interlace geometry. The frequency-domain modulation values are the
//! product of a long carrier (controlling PAPR) and short orthogonal sequences
//! (controlling crosscorrelation). Choosing a modulatable CAZAC carrier gives
//! constant-envelope (0 dB PAPR) time-domain sequences.
//!
//! Modules:
//!
//! - [`numerics`]: complex sequences, exact unit roots, DFT conventions.
//! - [`cazac`]: Zadoff-Chu and unified MCAZAC generators, CAZAC/MCAZAC
//!   verifiers, permutation families.
//! - [`zcz`]: interlaces, orthogonal short sets, synthesis of sequence sets.
//! - [`analysis`]: brute-force correlation, zone measurement, PAPR, closed-form
//!   predictions and the cross-set bound check.
//!
//! Heavy loops run on rayon when the `parallel` feature is enabled (default).
//! Every reduction is ordered, so results are bit-identical either way.

pub mod analysis;
pub mod arith;
pub mod cazac;
mod error;
pub mod numerics;
pub mod par;
pub mod zcz;

pub use error::{Error, Result};
pub use numerics::{ComplexSeq, PhaseExponent};

pub use num_complex::Complex64;
