use num_complex::Complex64;

use super::interlace::InterlaceSpec;
use super::orthogonal::OrthogonalSet;
use crate::cazac::{
    generalized_unified, verify_permutation_family, PermutationFamily, UnifiedMcazacParams,
};
use crate::error::{Error, Result};
use crate::numerics::{ComplexSeq, RootTable};
use crate::par;

/// `c_n(u) = b_n(u mod A) a(u)` for every row of `ortho`.
pub fn modulation_sequences(
    ortho: &OrthogonalSet,
    carrier: &ComplexSeq,
) -> Result<Vec<ComplexSeq>> {
    let a = ortho.size();
    if !carrier.len().is_multiple_of(a) {
        return Err(Error::NotDivisible {
            what: "carrier length",
            value: carrier.len(),
            divisor: a,
        });
    }
    Ok(ortho
        .rows()
        .iter()
        .map(|b| {
            ComplexSeq::from_vec(
                carrier
                    .iter()
                    .enumerate()
                    .map(|(u, &x)| b[u % a] * x)
                    .collect(),
            )
        })
        .collect())
}

fn check_mod_len(interlace: &InterlaceSpec, c: &ComplexSeq) -> Result<()> {
    if c.len() != interlace.l() {
        return Err(Error::LengthMismatch {
            context: "modulation sequence vs interlace L",
            expected: interlace.l(),
            actual: c.len(),
        });
    }
    Ok(())
}

/// Length-`N` spectrum with `c(Ai + l)` on bin `delta i + j_l`, zero elsewhere.
pub fn dense_spectrum(interlace: &InterlaceSpec, c: &ComplexSeq) -> Result<ComplexSeq> {
    check_mod_len(interlace, c)?;
    let mut spec = vec![Complex64::new(0.0, 0.0); interlace.n()];
    for (u, &v) in c.iter().enumerate() {
        spec[interlace.frequency(u)] = v;
    }
    Ok(ComplexSeq::from_vec(spec))
}

/// `s(k) = (1/sqrt N) sum_{f in allowed} S(f) W_N^{-kf}`, summing over the
/// `L` allowed bins only.
pub fn synthesize_sequence(interlace: &InterlaceSpec, c: &ComplexSeq) -> Result<ComplexSeq> {
    check_mod_len(interlace, c)?;
    let n = interlace.n();
    let roots = RootTable::new(n);
    let freqs = interlace.allowed_frequencies();
    let scale = 1.0 / (n as f64).sqrt();
    let cs = c.samples();
    let out = par::map_indexed(n, |k| {
        let mut acc = Complex64::new(0.0, 0.0);
        for (u, &f) in freqs.iter().enumerate() {
            acc += cs[u] * roots.at((n - (k * f) % n) % n);
        }
        acc * scale
    });
    Ok(ComplexSeq::from_vec(out))
}

/// A synthesized set of `A` time-domain sequences with its provenance.
#[derive(Debug, Clone, PartialEq)]
pub struct SequenceSet {
    sequences: Vec<ComplexSeq>,
    modulations: Vec<ComplexSeq>,
    interlace: InterlaceSpec,
    ortho: OrthogonalSet,
    carrier: ComplexSeq,
    label: String,
}

impl SequenceSet {
    pub fn sequences(&self) -> &[ComplexSeq] {
        &self.sequences
    }

    /// Frequency-domain modulation sequences `c_n`, one per sequence.
    pub fn modulations(&self) -> &[ComplexSeq] {
        &self.modulations
    }

    pub fn interlace(&self) -> &InterlaceSpec {
        &self.interlace
    }

    pub fn ortho(&self) -> &OrthogonalSet {
        &self.ortho
    }

    pub fn carrier(&self) -> &ComplexSeq {
        &self.carrier
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// The same set with its time-domain sequences replaced, e.g. by copies
    /// read back from disk. Count and lengths must match.
    pub fn with_sequences(&self, sequences: Vec<ComplexSeq>) -> Result<SequenceSet> {
        if sequences.len() != self.sequences.len() {
            return Err(Error::LengthMismatch {
                context: "sequence count",
                expected: self.sequences.len(),
                actual: sequences.len(),
            });
        }
        let n = self.interlace.n();
        if let Some(bad) = sequences.iter().find(|s| s.len() != n) {
            return Err(Error::LengthMismatch {
                context: "sequence length vs interlace N",
                expected: n,
                actual: bad.len(),
            });
        }
        Ok(SequenceSet {
            sequences,
            ..self.clone()
        })
    }
}

/// Build the set `{ s_n }` for carrier `a` and orthogonal rows `b_n`.
pub fn synthesize(
    interlace: &InterlaceSpec,
    ortho: &OrthogonalSet,
    carrier: &ComplexSeq,
    label: impl Into<String>,
) -> Result<SequenceSet> {
    if ortho.size() != interlace.a() {
        return Err(Error::LengthMismatch {
            context: "orthogonal set size vs interlace A",
            expected: interlace.a(),
            actual: ortho.size(),
        });
    }
    if carrier.len() != interlace.l() {
        return Err(Error::LengthMismatch {
            context: "carrier length vs interlace L",
            expected: interlace.l(),
            actual: carrier.len(),
        });
    }
    let modulations = modulation_sequences(ortho, carrier)?;
    let sequences = modulations
        .iter()
        .map(|c| synthesize_sequence(interlace, c))
        .collect::<Result<Vec<_>>>()?;
    Ok(SequenceSet {
        sequences,
        modulations,
        interlace: interlace.clone(),
        ortho: ortho.clone(),
        carrier: carrier.clone(),
        label: label.into(),
    })
}

/// One set per family member `mu_r`, each with carrier
/// `eta(l) g_l(i mod s) W_t^{mu_r(l) i}` sharing `eta`, `g_l` and `ortho`.
pub fn multi_set_generate(
    interlace: &InterlaceSpec,
    template: &UnifiedMcazacParams,
    fam: &PermutationFamily,
    ortho: &OrthogonalSet,
) -> Result<Vec<SequenceSet>> {
    if fam.size() != template.a {
        return Err(Error::LengthMismatch {
            context: "permutation size vs carrier A",
            expected: template.a,
            actual: fam.size(),
        });
    }
    if !verify_permutation_family(fam) {
        return Err(Error::FamilyNotClosed(fam.size()));
    }
    if interlace.a() != template.a || interlace.t() != template.t() {
        return Err(Error::InvalidParameter(format!(
            "carrier (A = {}, t = sA = {}) does not fit interlace (A = {}, t = {})",
            template.a,
            template.t(),
            interlace.a(),
            interlace.t()
        )));
    }
    fam.members()
        .iter()
        .enumerate()
        .map(|(r, mu)| {
            let carrier = generalized_unified(&template.with_mu(mu.clone()))?;
            synthesize(
                interlace,
                ortho,
                &carrier,
                format!("set{r} mu={:?}", mu.as_slice()),
            )
        })
        .collect()
}
