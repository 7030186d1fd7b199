//! Job configuration and its resolution into concrete sequence sets.
//!
//! A config may leave some values to the seeded RNG (`"random"` phases,
//! `"random-zc"` inner sequences). [`plan`] draws them once and returns a
//! resolved config in which every such value is explicit, so a manifest
//! carrying the resolved config regenerates the same sequences without the
//! RNG.

use serde::{Deserialize, Serialize};
use zcz_seq::cazac::{
    congruent_permutation_family, generalized_unified, legacy_unified, zadoff_chu,
    LegacyUnifiedParams, Permutation, PermutationFamily, UnifiedMcazacParams, ZcParams,
};
use zcz_seq::zcz::{
    multi_set_generate, orthogonal_set_dft, orthogonal_set_walsh, orthogonal_set_zc, synthesize,
    InterlaceSpec, OrthogonalSet, SequenceSet, ZazExtensionSpec,
};
use zcz_seq::{Complex64, ComplexSeq};

use crate::error::{invalid, CliError};
use crate::random;

pub const DEFAULT_ZERO_TOL: f64 = 1e-9;

/// Complex value in JSON: `[re, im]`.
pub type JsonComplex = [f64; 2];

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobConfig {
    pub interlace: InterlaceConfig,
    pub carrier: CarrierConfig,
    #[serde(default)]
    pub orthogonal_set: OrthoConfig,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub multi_set: Option<MultiSetConfig>,
    #[serde(default)]
    pub analysis: AnalysisConfig,
    #[serde(default)]
    pub output: OutputConfig,
    /// Relative zero threshold for correlation and spectral checks.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub zero_tol: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

/// `offsets` or `extension`, not both.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InterlaceConfig {
    pub delta: usize,
    pub t: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub offsets: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub extension: Option<ExtensionConfig>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExtensionConfig {
    pub a_prime: usize,
    pub sigma: usize,
    pub big_b: usize,
    pub inner_offsets: Vec<usize>,
}

/// `"ones"`, `"random"` or an explicit list of `[re, im]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PhaseSpec {
    Named(String),
    Explicit(Vec<JsonComplex>),
}

impl Default for PhaseSpec {
    fn default() -> Self {
        PhaseSpec::Named("ones".into())
    }
}

/// `"zc"` (ZC of length `s`, root 1), `"random-zc"` or explicit sequences.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum InnerSpec {
    Named(String),
    Explicit(Vec<Vec<JsonComplex>>),
}

impl Default for InnerSpec {
    fn default() -> Self {
        InnerSpec::Named("zc".into())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum CarrierConfig {
    /// Zadoff-Chu of length `L = A t`.
    Zc {
        root: i64,
        #[serde(default)]
        q: i64,
    },
    LegacyUnified {
        r0: i64,
        n0: i64,
        r1: i64,
        n1: i64,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        mu: Option<Vec<usize>>,
        #[serde(default)]
        eta: PhaseSpec,
    },
    GeneralizedUnified {
        #[serde(default)]
        eta: PhaseSpec,
        #[serde(default)]
        g: InnerSpec,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        mu: Option<Vec<usize>>,
    },
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum OrthoConfig {
    #[default]
    Dft,
    Walsh,
    /// Rows from a Zadoff-Chu of length `A t`.
    Zc {
        root: i64,
        #[serde(default)]
        q: i64,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MultiSetConfig {
    pub family: FamilySpec,
}

/// `"congruent"` (`r l mod A`, `A` prime) or explicit permutations.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FamilySpec {
    Named(String),
    Explicit(Vec<Vec<usize>>),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct AnalysisConfig {
    pub zones: bool,
    pub papr: bool,
    pub predictions: bool,
    pub cross_set: bool,
}

impl Default for AnalysisConfig {
    fn default() -> Self {
        Self {
            zones: true,
            papr: true,
            predictions: true,
            cross_set: true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct OutputConfig {
    /// Directory for sequence files, manifest and reports.
    pub dir: String,
}

impl Default for OutputConfig {
    fn default() -> Self {
        Self { dir: "out".into() }
    }
}

/// Command-line values that take precedence over the config.
#[derive(Debug, Clone, Copy, Default)]
pub struct Overrides {
    pub tol: Option<f64>,
    pub seed: Option<u64>,
}

/// A validated config together with everything built from it.
#[derive(Debug, Clone)]
pub struct Job {
    /// Resolved config: overrides applied, random draws made explicit.
    pub config: JobConfig,
    pub interlace: InterlaceSpec,
    pub ortho: OrthogonalSet,
    pub sets: Vec<SequenceSet>,
    /// `t / A` when `A` divides `t`.
    pub s: Option<usize>,
    pub zero_tol: f64,
    pub seed: u64,
}

fn to_complex(v: &[JsonComplex]) -> Vec<Complex64> {
    v.iter().map(|&[re, im]| Complex64::new(re, im)).collect()
}

fn to_json(v: &[Complex64]) -> Vec<JsonComplex> {
    v.iter().map(|z| [z.re, z.im]).collect()
}

fn resolve_phases<R: rand::Rng>(
    spec: &PhaseSpec,
    a: usize,
    rng: &mut R,
) -> Result<Vec<Complex64>, CliError> {
    let eta = match spec {
        PhaseSpec::Named(n) if n == "ones" => vec![Complex64::new(1.0, 0.0); a],
        PhaseSpec::Named(n) if n == "random" => random::unit_phases(rng, a),
        PhaseSpec::Named(n) => {
            return Err(CliError::Validation(format!(
                "carrier.eta: unknown value {n:?} (expected \"ones\", \"random\" or a list of [re, im])"
            )))
        }
        PhaseSpec::Explicit(v) => to_complex(v),
    };
    if eta.len() != a {
        return Err(CliError::Validation(format!(
            "carrier.eta: expected {a} values, got {}",
            eta.len()
        )));
    }
    Ok(eta)
}

fn resolve_mu(mu: &Option<Vec<usize>>, a: usize) -> Result<Permutation, CliError> {
    let p = match mu {
        None => Permutation::identity(a),
        Some(v) => Permutation::new(v.clone()).map_err(invalid("carrier.mu"))?,
    };
    if p.len() != a {
        return Err(CliError::Validation(format!(
            "carrier.mu: expected a permutation of 0..{a}, got length {}",
            p.len()
        )));
    }
    Ok(p)
}

fn require_s(il: &InterlaceSpec, what: &str) -> Result<usize, CliError> {
    if !il.t().is_multiple_of(il.a()) {
        return Err(CliError::Validation(format!(
            "{what} carrier needs t = {} to be a multiple of A = {}",
            il.t(),
            il.a()
        )));
    }
    Ok(il.t() / il.a())
}

fn build_interlace(cfg: &InterlaceConfig) -> Result<InterlaceSpec, CliError> {
    match (&cfg.offsets, &cfg.extension) {
        (Some(o), None) => {
            InterlaceSpec::new(cfg.delta, cfg.t, o.clone()).map_err(invalid("interlace"))
        }
        (None, Some(e)) => {
            let ext = ZazExtensionSpec {
                a_prime: e.a_prime,
                sigma: e.sigma,
                big_b: e.big_b,
                inner_offsets: e.inner_offsets.clone(),
            };
            InterlaceSpec::with_extension(cfg.delta, cfg.t, &ext)
                .map_err(invalid("interlace.extension"))
        }
        _ => Err(CliError::Validation(
            "interlace: give exactly one of \"offsets\" and \"extension\"".into(),
        )),
    }
}

fn build_ortho(cfg: &OrthoConfig, il: &InterlaceSpec) -> Result<OrthogonalSet, CliError> {
    let a = il.a();
    match cfg {
        OrthoConfig::Dft => orthogonal_set_dft(a),
        OrthoConfig::Walsh => orthogonal_set_walsh(a),
        OrthoConfig::Zc { root, q } => orthogonal_set_zc(&ZcParams::new(il.l(), *root, *q), il.t()),
    }
    .map_err(invalid("orthogonal_set"))
}

fn build_family(spec: &FamilySpec, a: usize) -> Result<PermutationFamily, CliError> {
    match spec {
        FamilySpec::Named(n) if n == "congruent" => {
            congruent_permutation_family(a).map_err(invalid("multi_set.family"))
        }
        FamilySpec::Named(n) => Err(CliError::Validation(format!(
            "multi_set.family: unknown value {n:?} (expected \"congruent\" or a list of permutations)"
        ))),
        FamilySpec::Explicit(v) => {
            let members = v
                .iter()
                .map(|m| Permutation::new(m.clone()))
                .collect::<zcz_seq::Result<Vec<_>>>()
                .map_err(invalid("multi_set.family"))?;
            PermutationFamily::new(members).map_err(invalid("multi_set.family"))
        }
    }
}

/// Validate `cfg` and build its sequence sets. Nothing is written.
pub fn plan(cfg: &JobConfig, ov: Overrides) -> Result<Job, CliError> {
    let zero_tol = ov.tol.or(cfg.zero_tol).unwrap_or(DEFAULT_ZERO_TOL);
    if !(zero_tol.is_finite() && zero_tol > 0.0) {
        return Err(CliError::Validation(format!(
            "zero tolerance must be positive and finite, got {zero_tol}"
        )));
    }
    let seed = ov.seed.or(cfg.seed).unwrap_or(0);
    let mut rng = random::rng(seed);
    let mut resolved = cfg.clone();
    resolved.zero_tol = Some(zero_tol);
    resolved.seed = Some(seed);

    let il = build_interlace(&cfg.interlace)?;
    let (a, l) = (il.a(), il.l());
    let s = (il.t() % a == 0).then(|| il.t() / a);

    let mut template = None;
    let carrier: ComplexSeq = match &cfg.carrier {
        CarrierConfig::Zc { root, q } => {
            zadoff_chu(&ZcParams::new(l, *root, *q)).map_err(invalid("carrier"))?
        }
        CarrierConfig::LegacyUnified {
            r0,
            n0,
            r1,
            n1,
            mu,
            eta,
        } => {
            let s = require_s(&il, "legacy-unified")?;
            let eta_v = resolve_phases(eta, a, &mut rng)?;
            let mu_p = resolve_mu(mu, a)?;
            let p = LegacyUnifiedParams {
                a,
                s,
                r0: *r0,
                n0: *n0,
                r1: *r1,
                n1: *n1,
                mu: mu_p.clone(),
                eta: eta_v.clone(),
            };
            let x = legacy_unified(&p).map_err(invalid("carrier"))?;
            resolved.carrier = CarrierConfig::LegacyUnified {
                r0: *r0,
                n0: *n0,
                r1: *r1,
                n1: *n1,
                mu: Some(mu_p.as_slice().to_vec()),
                eta: PhaseSpec::Explicit(to_json(&eta_v)),
            };
            x
        }
        CarrierConfig::GeneralizedUnified { eta, g, mu } => {
            let s = require_s(&il, "generalized-unified")?;
            let eta_v = resolve_phases(eta, a, &mut rng)?;
            let (gl, g_resolved) = match g {
                InnerSpec::Named(n) if n == "zc" => {
                    let z = zadoff_chu(&ZcParams::new(s, 1, 0)).map_err(invalid("carrier.g"))?;
                    (vec![z; a], g.clone())
                }
                InnerSpec::Named(n) if n == "random-zc" => {
                    let gl: Vec<ComplexSeq> = (0..a).map(|_| random::zc_cazac(&mut rng, s)).collect();
                    let explicit = gl.iter().map(|x| to_json(x.samples())).collect();
                    (gl, InnerSpec::Explicit(explicit))
                }
                InnerSpec::Named(n) => {
                    return Err(CliError::Validation(format!(
                        "carrier.g: unknown value {n:?} (expected \"zc\", \"random-zc\" or explicit sequences)"
                    )))
                }
                InnerSpec::Explicit(v) => {
                    let gl = v
                        .iter()
                        .map(|x| ComplexSeq::new(to_complex(x)))
                        .collect::<zcz_seq::Result<Vec<_>>>()
                        .map_err(invalid("carrier.g"))?;
                    (gl, g.clone())
                }
            };
            let mu_p = resolve_mu(mu, a)?;
            let p = UnifiedMcazacParams {
                a,
                s,
                eta: eta_v.clone(),
                gl,
                mu: mu_p.clone(),
            };
            let x = generalized_unified(&p).map_err(invalid("carrier"))?;
            resolved.carrier = CarrierConfig::GeneralizedUnified {
                eta: PhaseSpec::Explicit(to_json(&eta_v)),
                g: g_resolved,
                mu: Some(mu_p.as_slice().to_vec()),
            };
            template = Some(p);
            x
        }
    };

    let ortho = build_ortho(&cfg.orthogonal_set, &il)?;

    let sets = match &cfg.multi_set {
        None => vec![synthesize(&il, &ortho, &carrier, "set0").map_err(invalid("synthesis"))?],
        Some(ms) => {
            let tpl = template.ok_or_else(|| {
                CliError::Validation("multi_set requires a generalized-unified carrier".into())
            })?;
            let fam = build_family(&ms.family, a)?;
            multi_set_generate(&il, &tpl, &fam, &ortho).map_err(invalid("multi_set"))?
        }
    };

    Ok(Job {
        config: resolved,
        interlace: il,
        ortho,
        sets,
        s,
        zero_tol,
        seed,
    })
}
