use num_complex::Complex64;

use crate::arith::gcd;
use crate::cazac::{zadoff_chu, ZcParams};
use crate::error::{Error, Result};
use crate::numerics::root_pow;

/// `A` mutually orthogonal unit-magnitude sequences `b_n` of length `A`.
#[derive(Debug, Clone, PartialEq)]
pub struct OrthogonalSet {
    rows: Vec<Vec<Complex64>>,
}

impl OrthogonalSet {
    pub fn new(rows: Vec<Vec<Complex64>>) -> Result<Self> {
        let a = rows.len();
        if a == 0 {
            return Err(Error::InvalidParameter(
                "orthogonal set needs at least one row".into(),
            ));
        }
        for row in &rows {
            if row.len() != a {
                return Err(Error::LengthMismatch {
                    context: "orthogonal set row",
                    expected: a,
                    actual: row.len(),
                });
            }
            if let Some(index) = row.iter().position(|z| (z.norm() - 1.0).abs() >= 1e-10) {
                return Err(Error::NotUnitMagnitude { name: "b_n", index });
            }
        }
        let set = Self { rows };
        for x in 0..a {
            for y in x + 1..a {
                let ip = set.inner(x, y).norm();
                if ip >= 1e-10 * a as f64 {
                    return Err(Error::InvalidParameter(format!(
                        "rows {x} and {y} are not orthogonal (|<b_x, b_y>| = {ip:e})"
                    )));
                }
            }
        }
        Ok(set)
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn row(&self, n: usize) -> &[Complex64] {
        &self.rows[n]
    }

    pub fn rows(&self) -> &[Vec<Complex64>] {
        &self.rows
    }

    /// `sum_l b_x(l) conj(b_y(l))`.
    pub fn inner(&self, x: usize, y: usize) -> Complex64 {
        self.rows[x]
            .iter()
            .zip(&self.rows[y])
            .map(|(p, q)| p * q.conj())
            .sum()
    }
}

/// DFT rows `b_n(l) = W_A^{n l}`.
pub fn orthogonal_set_dft(a: usize) -> Result<OrthogonalSet> {
    if a == 0 {
        return Err(Error::InvalidParameter("A must be at least 1".into()));
    }
    let rows = (0..a)
        .map(|n| {
            (0..a)
                .map(|l| root_pow((n * l) as i128, a as u64))
                .collect()
        })
        .collect();
    OrthogonalSet::new(rows)
}

/// Rows `b_n(l) = a(t n) W_A^{alpha n l}` from a ZC sequence of length `A t`.
/// Used with the same ZC as carrier, the modulation sequences become the
/// cyclic shifts `a(u + t n)`.
pub fn orthogonal_set_zc(zc: &ZcParams, t: usize) -> Result<OrthogonalSet> {
    if t == 0 || !zc.length.is_multiple_of(t) {
        return Err(Error::NotDivisible {
            what: "ZC length",
            value: zc.length,
            divisor: t,
        });
    }
    let seq = zadoff_chu(zc)?;
    let a = zc.length / t;
    let g = gcd(zc.root, a as i64);
    if g != 1 {
        return Err(Error::NotCoprime {
            name: "root index alpha".into(),
            value: zc.root,
            modulus: a as i64,
            gcd: g,
        });
    }
    let rows = (0..a)
        .map(|n| {
            (0..a)
                .map(|l| seq[t * n] * root_pow(zc.root as i128 * (n * l) as i128, a as u64))
                .collect()
        })
        .collect();
    OrthogonalSet::new(rows)
}

/// Sylvester-Hadamard rows `(-1)^{popcount(n & l)}`; `A` must be a power of two.
pub fn orthogonal_set_walsh(a: usize) -> Result<OrthogonalSet> {
    if !a.is_power_of_two() {
        return Err(Error::InvalidParameter(format!(
            "Walsh-Hadamard set needs A a power of two, got {a}"
        )));
    }
    let rows = (0..a)
        .map(|n| {
            (0..a)
                .map(|l| {
                    let sign = if (n & l).count_ones() % 2 == 0 {
                        1.0
                    } else {
                        -1.0
                    };
                    Complex64::new(sign, 0.0)
                })
                .collect()
        })
        .collect();
    OrthogonalSet::new(rows)
}
