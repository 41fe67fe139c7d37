//! Number-theoretic helpers: divisors, Euler's totient, the Möbius function
//! and exact binomial / Catalan numbers.

use num_bigint::BigUint;
use num_traits::One;

use crate::{Error, Result};

/// Divisors of `m` in ascending order. Empty for `m = 0`.
pub fn divisors(m: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= m {
        if m.is_multiple_of(d) {
            small.push(d);
            if d != m / d {
                large.push(m / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Prime factorisation as `(prime, exponent)` pairs, primes ascending.
fn factorize(mut m: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            let mut e = 0;
            while m.is_multiple_of(p) {
                m /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if m > 1 {
        out.push((m, 1));
    }
    out
}

fn require_positive(m: u64, what: &str) -> Result<()> {
    if m == 0 {
        return Err(Error::Domain(format!(
            "{what} is defined for m >= 1, got 0"
        )));
    }
    Ok(())
}

/// Euler's totient: the number of `1 <= k <= m` coprime to `m`.
pub fn euler_phi(m: u64) -> Result<u64> {
    require_positive(m, "euler_phi")?;
    Ok(factorize(m)
        .into_iter()
        .fold(m, |acc, (p, _)| acc / p * (p - 1)))
}

/// The Möbius function: 0 if `m` has a square factor, otherwise `(-1)^k`
/// for `k` distinct prime factors.
pub fn moebius(m: u64) -> Result<i8> {
    require_positive(m, "moebius")?;
    let factors = factorize(m);
    if factors.iter().any(|&(_, e)| e > 1) {
        return Ok(0);
    }
    Ok(if factors.len().is_multiple_of(2) {
        1
    } else {
        -1
    })
}

/// Characteristic function of the odd integers.
pub fn chi_odd(m: u64) -> Result<u8> {
    require_positive(m, "chi_odd")?;
    Ok((m % 2) as u8)
}

/// `binom(a, b)`, zero when `b > a`.
pub fn binomial(a: u64, b: u64) -> BigUint {
    if b > a {
        return BigUint::default();
    }
    let b = b.min(a - b);
    let mut acc = BigUint::one();
    // acc = binom(a - b + i, i) after step i; every intermediate division is exact.
    for i in 1..=b {
        acc *= a - b + i;
        acc /= i;
    }
    acc
}

/// The Catalan number `C_n = binom(2n, n) / (n + 1)`.
pub fn catalan(n: u64) -> BigUint {
    binomial(2 * n, n) / (n + 1)
}

/// `C_n` as a machine integer, for sizing enumerations. `None` on overflow.
pub fn catalan_u64(n: u64) -> Option<u64> {
    u64::try_from(catalan(n)).ok()
}
