use crate::arith::gcd;
use crate::error::{Error, Result};
use crate::numerics::{root_pow, ComplexSeq};

/// Zadoff-Chu parameters: length `L`, root index `alpha` (coprime to `L`) and
/// phase parameter `q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ZcParams {
    pub length: usize,
    pub root: i64,
    pub q: i64,
}

impl ZcParams {
    pub fn new(length: usize, root: i64, q: i64) -> Self {
        Self { length, root, q }
    }

    pub fn validate(&self) -> Result<()> {
        if self.length == 0 {
            return Err(Error::InvalidParameter(
                "ZC length must be at least 1".into(),
            ));
        }
        let g = gcd(self.root, self.length as i64);
        if g != 1 {
            return Err(Error::NotCoprime {
                name: "root index alpha".into(),
                value: self.root,
                modulus: self.length as i64,
                gcd: g,
            });
        }
        Ok(())
    }

    /// Exact exponent of `W_{2L}` for sample `u`.
    fn numerator(&self, u: i128) -> i128 {
        let l = self.length as i128;
        self.root as i128 * u * (u + l % 2 + 2 * self.q as i128)
    }
}

/// `a(u) = W_L^{alpha u (u + L mod 2 + 2q) / 2}`, evaluated as a power of
/// `W_{2L}` so that even lengths need no fractional exponent.
pub fn zadoff_chu(p: &ZcParams) -> Result<ComplexSeq> {
    p.validate()?;
    let modulus = 2 * p.length as u64;
    Ok(ComplexSeq::from_vec(
        (0..p.length)
            .map(|u| root_pow(p.numerator(u as i128), modulus))
            .collect(),
    ))
}

/// Check `a(u + shift) = a(u) a(shift) W_L^{alpha u shift}` for every `u`.
pub fn zc_cyclic_shift_identity_check(p: &ZcParams, shift: i64) -> Result<bool> {
    let a = zadoff_chu(p)?;
    let n = p.length as i64;
    let a_shift = a[shift.rem_euclid(n) as usize];
    Ok((0..n).all(|u| {
        let lhs = a[(u + shift).rem_euclid(n) as usize];
        let twist = root_pow(p.root as i128 * u as i128 * shift as i128, n as u64);
        let rhs = a[u as usize] * a_shift * twist;
        (lhs - rhs).norm() < 1e-12
    }))
}
