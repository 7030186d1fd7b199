use crate::arith::is_prime;
use crate::error::{Error, Result};

/// A bijection on `{0, .., A-1}` stored as its image table.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(mapping: Vec<usize>) -> Result<Self> {
        let n = mapping.len();
        if n == 0 {
            return Err(Error::InvalidPermutation("empty mapping".into()));
        }
        let mut seen = vec![false; n];
        for &v in &mapping {
            if v >= n {
                return Err(Error::InvalidPermutation(format!(
                    "value {v} out of range 0..{n}"
                )));
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidPermutation(format!("value {v} repeated")));
            }
        }
        Ok(Self(mapping))
    }

    pub fn identity(n: usize) -> Self {
        Self((0..n).collect())
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn apply(&self, l: usize) -> usize {
        self.0[l]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    /// `l -> (self(l) - other(l)) mod A`; `None` on size mismatch.
    pub fn difference(&self, other: &Permutation) -> Option<Vec<usize>> {
        if self.len() != other.len() {
            return None;
        }
        let a = self.len();
        Some(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&x, &y)| (x + a - y) % a)
                .collect(),
        )
    }
}

/// Permutations of one common size `A`. Closure under differences is not
/// enforced here; see [`verify_permutation_family`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermutationFamily {
    members: Vec<Permutation>,
}

impl PermutationFamily {
    pub fn new(members: Vec<Permutation>) -> Result<Self> {
        let Some(first) = members.first() else {
            return Err(Error::InvalidPermutation("empty family".into()));
        };
        let a = first.len();
        if let Some(bad) = members.iter().find(|m| m.len() != a) {
            return Err(Error::InvalidPermutation(format!(
                "family mixes sizes {a} and {}",
                bad.len()
            )));
        }
        Ok(Self { members })
    }

    pub fn members(&self) -> &[Permutation] {
        &self.members
    }

    /// Size `A` of every member.
    pub fn size(&self) -> usize {
        self.members[0].len()
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.members.len()
    }
}

/// True iff every pair of distinct members has a bijective difference map mod `A`.
pub fn verify_permutation_family(fam: &PermutationFamily) -> bool {
    let members = fam.members();
    for (i, x) in members.iter().enumerate() {
        for y in &members[i + 1..] {
            let diff = x.difference(y).expect("family members share a size");
            if Permutation::new(diff).is_err() {
                return false;
            }
        }
    }
    true
}

/// The `A - 1` permutations `mu_r(l) = r l mod A`, `r = 1..A-1`, for prime `A`.
pub fn congruent_permutation_family(a: usize) -> Result<PermutationFamily> {
    if !is_prime(a) {
        return Err(Error::NotPrime(a));
    }
    let members = (1..a)
        .map(|r| Permutation((0..a).map(|l| r * l % a).collect()))
        .collect();
    PermutationFamily::new(members)
}
