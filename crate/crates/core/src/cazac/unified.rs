use num_complex::Complex64;

use super::permutation::Permutation;
use super::verify::verify_cazac;
use super::zadoff_chu::{zadoff_chu, ZcParams};
use super::{DEFAULT_TOL, UNIT_TOL};
use crate::arith::gcd;
use crate::error::{Error, Result};
use crate::numerics::{root_pow, ComplexSeq, RootTable};

fn check_unit(values: &[Complex64], name: &'static str) -> Result<()> {
    match values
        .iter()
        .position(|z| (z.norm() - 1.0).abs() >= UNIT_TOL)
    {
        Some(index) => Err(Error::NotUnitMagnitude { name, index }),
        None => Ok(()),
    }
}

fn check_len(context: &'static str, expected: usize, actual: usize) -> Result<()> {
    if expected != actual {
        return Err(Error::LengthMismatch {
            context,
            expected,
            actual,
        });
    }
    Ok(())
}

fn check_dims(a: usize, s: usize) -> Result<()> {
    if a == 0 || s == 0 {
        return Err(Error::InvalidParameter(format!(
            "A and s must be positive (A = {a}, s = {s})"
        )));
    }
    Ok(())
}

/// Parameters of the four-integer unified MCAZAC construction of length `s A^2`.
#[derive(Debug, Clone, PartialEq)]
pub struct LegacyUnifiedParams {
    pub a: usize,
    pub s: usize,
    pub r0: i64,
    pub n0: i64,
    pub r1: i64,
    pub n1: i64,
    pub mu: Permutation,
    pub eta: Vec<Complex64>,
}

impl LegacyUnifiedParams {
    /// `r0 + n0 l (l + 1) / 2`; `l (l + 1)` is always even.
    fn base(&self, l: usize) -> i64 {
        let l = l as i64;
        self.r0 + self.n0 * (l * (l + 1) / 2)
    }

    /// `phi_l = (s + 1)(r0 + n0 l (l + 1) / 2)`.
    pub fn phi(&self, l: usize) -> i64 {
        (self.s as i64 + 1) * self.base(l)
    }

    pub fn validate(&self) -> Result<()> {
        check_dims(self.a, self.s)?;
        check_len("legacy mu", self.a, self.mu.len())?;
        check_len("legacy eta", self.a, self.eta.len())?;
        check_unit(&self.eta, "eta")?;
        if ((self.s as i64 + 1) * self.n0).rem_euclid(2) != 0 {
            return Err(Error::InvalidParameter(format!(
                "(s + 1) * n0 must be even (s = {}, n0 = {})",
                self.s, self.n0
            )));
        }
        for l in 0..self.a {
            let v = self.base(l);
            let g = gcd(v, self.s as i64);
            if g != 1 {
                return Err(Error::NotCoprime {
                    name: format!("r0 + n0*l(l+1)/2 at l = {l}"),
                    value: v,
                    modulus: self.s as i64,
                    gcd: g,
                });
            }
        }
        let g = gcd(self.r1, self.a as i64);
        if g != 1 {
            return Err(Error::NotCoprime {
                name: "r1".into(),
                value: self.r1,
                modulus: self.a as i64,
                gcd: g,
            });
        }
        Ok(())
    }
}

/// `a(iA + l) = eta(l) g_l(i mod s) W_t^{(r1 mu(l) + n1) i}` with
/// `g_l(k) = W_{2s}^{phi_l k^2}` and `t = s A`.
///
/// Both phase terms are folded into one exact exponent of `W_{2t}`.
pub fn legacy_unified(p: &LegacyUnifiedParams) -> Result<ComplexSeq> {
    p.validate()?;
    let (a, s) = (p.a, p.s);
    let t = s * a;
    let modulus = 2 * t as u64;
    let mut out = vec![Complex64::new(0.0, 0.0); t * a];
    for l in 0..a {
        let phi = p.phi(l) as i128;
        let lin = p.r1 as i128 * p.mu.apply(l) as i128 + p.n1 as i128;
        for i in 0..t {
            let k = (i % s) as i128;
            // W_{2s}^{phi k^2} = W_{2t}^{A phi k^2},  W_t^{lin i} = W_{2t}^{2 lin i}
            let e = a as i128 * phi * k * k + 2 * lin * i as i128;
            out[i * a + l] = p.eta[l] * root_pow(e, modulus);
        }
    }
    Ok(ComplexSeq::from_vec(out))
}

/// Parameters of the generalized unified MCAZAC construction of length `s A^2`.
#[derive(Debug, Clone, PartialEq)]
pub struct UnifiedMcazacParams {
    pub a: usize,
    pub s: usize,
    pub eta: Vec<Complex64>,
    /// One length-`s` sequence per `l`: unit-magnitude CAZAC for `s > 1`,
    /// the single value 1 for `s = 1`.
    pub gl: Vec<ComplexSeq>,
    pub mu: Permutation,
}

impl UnifiedMcazacParams {
    /// `eta = 1`, `mu = identity`, every `g_l = ZC(s, 1, 0)`.
    pub fn canonical(a: usize, s: usize) -> Result<Self> {
        check_dims(a, s)?;
        let g = zadoff_chu(&ZcParams::new(s, 1, 0))?;
        Ok(Self {
            a,
            s,
            eta: vec![Complex64::new(1.0, 0.0); a],
            gl: vec![g; a],
            mu: Permutation::identity(a),
        })
    }

    pub fn with_mu(&self, mu: Permutation) -> Self {
        Self { mu, ..self.clone() }
    }

    pub fn with_eta(&self, eta: Vec<Complex64>) -> Self {
        Self {
            eta,
            ..self.clone()
        }
    }

    /// Carrier length `L = s A^2`.
    pub fn length(&self) -> usize {
        self.s * self.a * self.a
    }

    /// `t = s A`.
    pub fn t(&self) -> usize {
        self.s * self.a
    }

    pub fn validate(&self) -> Result<()> {
        check_dims(self.a, self.s)?;
        check_len("unified mu", self.a, self.mu.len())?;
        check_len("unified eta", self.a, self.eta.len())?;
        check_len("unified g_l count", self.a, self.gl.len())?;
        check_unit(&self.eta, "eta")?;
        for (index, g) in self.gl.iter().enumerate() {
            check_len("g_l length", self.s, g.len())?;
            if self.s == 1 {
                if (g[0] - Complex64::new(1.0, 0.0)).norm() >= UNIT_TOL {
                    return Err(Error::InvalidParameter(format!(
                        "g_{index} must equal 1 when s = 1"
                    )));
                }
            } else {
                check_unit(g.samples(), "g_l")?;
                if !verify_cazac(g, DEFAULT_TOL).passed {
                    return Err(Error::NotCazac { index });
                }
            }
        }
        Ok(())
    }
}

/// `a(iA + l) = eta(l) g_l(i mod s) W_t^{mu(l) i}`, `t = s A`.
pub fn generalized_unified(p: &UnifiedMcazacParams) -> Result<ComplexSeq> {
    p.validate()?;
    let (a, s) = (p.a, p.s);
    let t = s * a;
    let roots = RootTable::new(t);
    let mut out = vec![Complex64::new(0.0, 0.0); t * a];
    for l in 0..a {
        let m = p.mu.apply(l);
        for i in 0..t {
            out[i * a + l] = p.eta[l] * p.gl[l][i % s] * roots.at(m * i % t);
        }
    }
    Ok(ComplexSeq::from_vec(out))
}
