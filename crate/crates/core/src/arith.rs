//! Small integer helpers shared by the constructions.

/// Greatest common divisor; always nonnegative. `gcd(0, 0) == 0`.
pub fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.unsigned_abs(), b.unsigned_abs());
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a as i64
}

pub fn is_prime(n: usize) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Reduce an exact integer exponent into `0..modulus`.
pub fn reduce(numerator: i128, modulus: u64) -> u64 {
    numerator.rem_euclid(modulus as i128) as u64
}
