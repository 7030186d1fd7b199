//! Interlaced spectral constraints and ZCZ sequence-set synthesis.
//!
//! The `N = delta * t` DFT bins are split into `t` subbands of `delta` bins;
//! the same `A` offsets `j_0 < .. < j_{A-1}` are used in every subband. A set
//! of `A` time-domain sequences is obtained by placing the modulation values
//! `c_n(Ai + l) = b_n(l) a(Ai + l)` on bin `delta * i + j_l` and taking the
//! unitary inverse DFT. Correlations of such sets vanish at every delay that
//! is not a multiple of `t`, whatever the offsets are.

mod interlace;
mod orthogonal;
mod synth;

pub use interlace::{build_interlace, zaz_extended_offsets, InterlaceSpec, ZazExtensionSpec};
pub use orthogonal::{orthogonal_set_dft, orthogonal_set_walsh, orthogonal_set_zc, OrthogonalSet};
pub use synth::{
    dense_spectrum, modulation_sequences, multi_set_generate, synthesize, synthesize_sequence,
    SequenceSet,
};
