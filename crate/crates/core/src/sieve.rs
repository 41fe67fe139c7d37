//! q-analogues, cyclotomic polynomials and the cyclic sieving check for
//! chord diagrams under rotation.
//!
//! The set is the `C_n` noncrossing perfect matchings of `2n` points on a
//! circle, the group is rotation by `Z/2n`, and the q-enumerator is the
//! q-Catalan number `[2n choose n]_q / [n + 1]_q`. Both forms of the sieving
//! statement are checked without leaving the integers: evaluation at a
//! primitive `d`-th root of unity becomes divisibility by the cyclotomic
//! polynomial `Φ_d`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::arith::divisors;
use crate::orbit::orbit_table_capped;
use crate::poly::IntPolynomial;
use crate::tree::enumerate_trees_capped;
use crate::{Cap, Error, Result};

/// `[n]_q = 1 + q + ... + q^{n-1}`; `[0]_q = 0`.
pub fn q_integer(n: usize) -> IntPolynomial {
    IntPolynomial::new(vec![BigInt::one(); n])
}

/// `[n]_q! = [1]_q [2]_q ... [n]_q`.
pub fn q_factorial(n: usize) -> IntPolynomial {
    (1..=n).fold(IntPolynomial::one(), |acc, k| &acc * &q_integer(k))
}

/// Gaussian binomial `[a choose b]_q` by the recurrence
/// `[a, b] = [a-1, b-1] + q^b [a-1, b]`.
pub fn q_binomial(a: usize, b: usize) -> Result<IntPolynomial> {
    if b > a {
        return Err(Error::Domain(format!("q_binomial({a}, {b}) needs b <= a")));
    }
    // row[j] = [i choose j]_q for the current i, j in 0..=b
    let mut row = vec![IntPolynomial::zero(); b + 1];
    row[0] = IntPolynomial::one();
    for i in 1..=a {
        for j in (1..=b.min(i)).rev() {
            row[j] = &row[j - 1] + &row[j].shift(j);
        }
    }
    Ok(row.swap_remove(b))
}

/// `[a]_q! / ([b]_q! [a-b]_q!)`, the quotient form of [`q_binomial`].
pub fn q_binomial_by_division(a: usize, b: usize) -> Result<IntPolynomial> {
    if b > a {
        return Err(Error::Domain(format!("q_binomial({a}, {b}) needs b <= a")));
    }
    q_factorial(a).exact_div(&(&q_factorial(b) * &q_factorial(a - b)))
}

/// The q-Catalan number `[2n choose n]_q / [n + 1]_q`.
pub fn q_catalan(n: usize) -> Result<IntPolynomial> {
    q_binomial(2 * n, n)?.exact_div(&q_integer(n + 1))
}

/// The cyclotomic polynomial `Φ_d`: `q^d - 1` divided by `Φ_e` for every
/// proper divisor `e` of `d`.
pub fn cyclotomic(d: usize) -> Result<IntPolynomial> {
    if d == 0 {
        return Err(Error::Domain("cyclotomic(d) needs d >= 1".into()));
    }
    let mut acc = &IntPolynomial::monomial(BigInt::one(), d) - &IntPolynomial::one();
    for e in divisors(d as u64) {
        let e = e as usize;
        if e < d {
            acc = acc.exact_div(&cyclotomic(e)?)?;
        }
    }
    Ok(acc)
}

/// Number of noncrossing perfect matchings on `2n` labelled points fixed by
/// rotating every label `c` steps, by brute force.
pub fn fixed_point_count(n: usize, c: usize, cap: Cap) -> Result<u64> {
    if c >= 2 * n {
        return Err(Error::Domain(format!(
            "rotation {c} outside [0, {})",
            2 * n
        )));
    }
    Ok(enumerate_trees_capped(n, cap)?
        .filter(|t| t.is_fixed_by_rotation(c as i64))
        .count() as u64)
}

/// One root-of-unity check: `d` divides `2n`, the rotation by `2n / d` has
/// order `d`, and `Φ_d` must divide `X(q) - fixed_points`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootOfUnityCheck {
    pub d: usize,
    pub rotation: usize,
    pub fixed_points: u64,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResidueCheck {
    /// `a_0 .. a_{2n-1}` of `X(q) mod q^{2n} - 1`.
    #[serde(with = "crate::bignum::vec_int")]
    pub residues: Vec<BigInt>,
    /// Number of orbits whose stabiliser order divides `l`, for each `l`.
    #[serde(with = "crate::bignum::vec_int")]
    pub expected: Vec<BigInt>,
    /// Stabiliser order `2n / length` -> number of orbits.
    pub stabilizer_tallies: BTreeMap<usize, u64>,
    pub pass: bool,
}

/// Outcome of checking both sieving conditions at one `n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CspReport {
    pub n: usize,
    pub q_catalan: IntPolynomial,
    pub condition1: Vec<RootOfUnityCheck>,
    pub condition1_pass: bool,
    pub condition2: ResidueCheck,
    /// The two conditions are equivalent, so their verdicts must match.
    pub conditions_agree: bool,
    pub pass: bool,
}

/// Checks both sieving conditions. Uses the default cap.
pub fn csp_verify(n: usize) -> Result<CspReport> {
    csp_verify_capped(n, Cap::default())
}

pub fn csp_verify_capped(n: usize, cap: Cap) -> Result<CspReport> {
    if n == 0 {
        return Err(Error::Domain("csp_verify needs n >= 1".into()));
    }
    cap.check(n)?;
    let order = 2 * n;
    let x = q_catalan(n)?;

    let mut condition1 = Vec::new();
    for d in divisors(order as u64) {
        let d = d as usize;
        let rotation = (order / d) % order;
        let fixed_points = fixed_point_count(n, rotation, cap)?;
        let shifted = &x - &IntPolynomial::monomial(BigInt::from(fixed_points), 0);
        let pass = shifted.is_divisible_by(&cyclotomic(d)?)?;
        condition1.push(RootOfUnityCheck {
            d,
            rotation,
            fixed_points,
            pass,
        });
    }
    let condition1_pass = condition1.iter().all(|c| c.pass);

    let table = orbit_table_capped(n, cap)?;
    let mut stabilizer_tallies = BTreeMap::new();
    for (length, count) in table.entries() {
        let count = u64::try_from(count).expect("orbit counts at enumerable n fit in u64");
        stabilizer_tallies.insert(order / length, count);
    }
    let residues = x.mod_cyclic(order);
    let expected: Vec<BigInt> = (0..order)
        .map(|l| {
            stabilizer_tallies
                .iter()
                .filter(|&(&s, _)| l % s == 0)
                .map(|(_, &c)| BigInt::from(c))
                .sum()
        })
        .collect();
    let pass2 = residues == expected;
    let condition2 = ResidueCheck {
        residues,
        expected,
        stabilizer_tallies,
        pass: pass2,
    };

    Ok(CspReport {
        n,
        q_catalan: x,
        condition1,
        condition1_pass,
        conditions_agree: condition1_pass == pass2,
        pass: condition1_pass && pass2,
        condition2,
    })
}
