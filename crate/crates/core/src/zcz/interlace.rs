use crate::error::{Error, Result};

/// Block-repetitive set of allowed frequencies
/// `{ delta * i + j_l : i < t, l < A }`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InterlaceSpec {
    delta: usize,
    t: usize,
    offsets: Vec<usize>,
    /// Set when the offsets were produced by [`zaz_extended_offsets`].
    sigma: Option<usize>,
}

pub fn build_interlace(delta: usize, t: usize, offsets: &[usize]) -> Result<InterlaceSpec> {
    InterlaceSpec::new(delta, t, offsets.to_vec())
}

impl InterlaceSpec {
    pub fn new(delta: usize, t: usize, offsets: Vec<usize>) -> Result<Self> {
        if delta == 0 || t == 0 {
            return Err(Error::InvalidInterlace(format!(
                "delta and t must be positive (delta = {delta}, t = {t})"
            )));
        }
        if offsets.is_empty() {
            return Err(Error::InvalidInterlace(
                "at least one offset is required".into(),
            ));
        }
        if offsets.len() > delta {
            return Err(Error::InvalidInterlace(format!(
                "A = {} exceeds delta = {delta}",
                offsets.len()
            )));
        }
        if let Some(&j) = offsets.iter().find(|&&j| j >= delta) {
            return Err(Error::InvalidInterlace(format!(
                "offset {j} outside 0..{delta}"
            )));
        }
        if let Some(w) = offsets.windows(2).find(|w| w[0] >= w[1]) {
            let what = if w[0] == w[1] {
                "duplicate"
            } else {
                "decreasing"
            };
            return Err(Error::InvalidInterlace(format!(
                "{what} offsets {} and {}",
                w[0], w[1]
            )));
        }
        Ok(Self {
            delta,
            t,
            offsets,
            sigma: None,
        })
    }

    /// Interlace whose offsets come from a ZAZ-extension block.
    pub fn with_extension(delta: usize, t: usize, ext: &ZazExtensionSpec) -> Result<Self> {
        let offsets = zaz_extended_offsets(delta, ext)?;
        let mut spec = Self::new(delta, t, offsets)?;
        spec.sigma = Some(ext.sigma);
        Ok(spec)
    }

    /// Subband width `delta`.
    pub fn delta(&self) -> usize {
        self.delta
    }

    /// Number of subbands `t`.
    pub fn t(&self) -> usize {
        self.t
    }

    /// Offsets per subband `A`.
    pub fn a(&self) -> usize {
        self.offsets.len()
    }

    /// Sequence length `N = delta * t`.
    pub fn n(&self) -> usize {
        self.delta * self.t
    }

    /// Number of allowed frequencies `L = A * t`.
    pub fn l(&self) -> usize {
        self.a() * self.t
    }

    pub fn offsets(&self) -> &[usize] {
        &self.offsets
    }

    pub fn sigma(&self) -> Option<usize> {
        self.sigma
    }

    /// Bin carrying modulation index `u = A i + l`.
    pub fn frequency(&self, u: usize) -> usize {
        let a = self.a();
        self.delta * (u / a) + self.offsets[u % a]
    }

    /// Allowed bins in modulation-index order.
    pub fn allowed_frequencies(&self) -> Vec<usize> {
        (0..self.l()).map(|u| self.frequency(u)).collect()
    }

    pub fn is_allowed(&self, f: usize) -> bool {
        f < self.n() && self.offsets.binary_search(&(f % self.delta)).is_ok()
    }

    /// `A == delta`: no spectral constraint.
    pub fn is_full(&self) -> bool {
        self.a() == self.delta
    }

    /// `t` is a multiple of `A`, so an MCAZAC carrier of length `L` exists.
    pub fn supports_mcazac(&self) -> bool {
        self.t.is_multiple_of(self.a())
    }
}

/// Offsets `j_{A' i' + l'} = (delta / sigma) i' + j'_{l'}` with
/// `A = A' sigma` and `delta = A' sigma B`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZazExtensionSpec {
    pub a_prime: usize,
    pub sigma: usize,
    pub big_b: usize,
    pub inner_offsets: Vec<usize>,
}

pub fn zaz_extended_offsets(delta: usize, ext: &ZazExtensionSpec) -> Result<Vec<usize>> {
    let ZazExtensionSpec {
        a_prime,
        sigma,
        big_b,
        ref inner_offsets,
    } = *ext;
    if a_prime == 0 || sigma == 0 || big_b == 0 {
        return Err(Error::InvalidInterlace(
            "A', sigma and B must be positive".into(),
        ));
    }
    if a_prime * sigma * big_b != delta {
        return Err(Error::InvalidInterlace(format!(
            "A' * sigma * B = {} does not equal delta = {delta}",
            a_prime * sigma * big_b
        )));
    }
    if inner_offsets.len() != a_prime {
        return Err(Error::InvalidInterlace(format!(
            "expected {a_prime} inner offsets, got {}",
            inner_offsets.len()
        )));
    }
    let width = delta / sigma;
    if inner_offsets.iter().any(|&j| j >= width) || inner_offsets.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidInterlace(format!(
            "inner offsets must be strictly increasing within 0..{width}"
        )));
    }
    Ok((0..sigma)
        .flat_map(|i| inner_offsets.iter().map(move |&j| width * i + j))
        .collect())
}
