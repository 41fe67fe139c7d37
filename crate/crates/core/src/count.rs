//! Closed-form counts of planar trees and the brute-force counters that
//! check them.
//!
//! A *planar* tree is a plane tree up to rerooting, i.e. a [`phi`]-orbit. A
//! *rooted planar* tree keeps its root but forgets which root subtree comes
//! first: the root's subtrees are ordered cyclically. "Asymmetric" means no
//! nontrivial rotational symmetry (fixing the root, in the rooted case).

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{catalan, chi_odd, divisors, euler_phi, moebius};
use crate::tree::{enumerate_trees_capped, phi, PlaneTree};
use crate::{Cap, Error, Result};

fn require_n(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::Domain("tree counts need n >= 1".into()));
    }
    Ok(())
}

/// `(1 / 2n) Σ_{d | n} weight(n / d) · binom(2d, d)`, checked exact.
fn divisor_sum(n: usize, weight: impl Fn(u64) -> Result<BigInt>) -> Result<BigInt> {
    require_n(n)?;
    let n = n as u64;
    let mut sum = BigInt::zero();
    for d in divisors(n) {
        sum += weight(n / d)? * BigInt::from(crate::arith::binomial(2 * d, d));
    }
    let (q, r) = sum.div_rem(&BigInt::from(2 * n));
    if !r.is_zero() {
        return Err(Error::Inconsistency(format!(
            "divisor sum {sum} not divisible by {}",
            2 * n
        )));
    }
    Ok(q)
}

fn to_natural(x: BigInt, what: &str) -> Result<BigUint> {
    x.to_biguint()
        .ok_or_else(|| Error::Inconsistency(format!("{what} came out negative")))
}

/// Rooted planar trees with `n` edges: `(1/2n) Σ_{d|n} φ(n/d) binom(2d, d)`.
pub fn count_rooted_planar(n: usize) -> Result<BigUint> {
    let x = divisor_sum(n, |m| euler_phi(m).map(BigInt::from))?;
    to_natural(x, "rootPT")
}

/// Asymmetric rooted planar trees: `(1/2n) Σ_{d|n} μ(n/d) binom(2d, d)`.
pub fn count_asym_rooted_planar(n: usize) -> Result<BigUint> {
    let x = divisor_sum(n, |m| moebius(m).map(BigInt::from))?;
    to_natural(x, "asymrootPT")
}

/// `χ_odd(n) · C_{(n-1)/2}`: the correction for a chord fixed by a half turn.
fn odd_correction(n: usize) -> Result<BigInt> {
    Ok(if chi_odd(n as u64)? == 1 {
        BigInt::from(catalan((n as u64 - 1) / 2))
    } else {
        BigInt::zero()
    })
}

fn halve(twice: BigInt, what: &str) -> Result<BigUint> {
    let (half, r) = twice.div_rem(&BigInt::from(2));
    if !r.is_zero() || half.is_negative() {
        return Err(Error::Inconsistency(format!(
            "{what}: 2x = {twice} is not a natural even number"
        )));
    }
    to_natural(half, what)
}

/// Planar trees: `rootPT(n) - C_n / 2 + χ_odd(n) C_{(n-1)/2} / 2`.
pub fn count_planar(n: usize) -> Result<BigUint> {
    let rooted = BigInt::from(count_rooted_planar(n)?);
    let c = BigInt::from(catalan(n as u64));
    halve(2 * rooted - c + odd_correction(n)?, "PT")
}

/// Asymmetric planar trees: `asymrootPT(n) - C_n / 2 - χ_odd(n) C_{(n-1)/2} / 2`.
pub fn count_asym_planar(n: usize) -> Result<BigUint> {
    let rooted = BigInt::from(count_asym_rooted_planar(n)?);
    let c = BigInt::from(catalan(n as u64));
    halve(2 * rooted - c - odd_correction(n)?, "asymPT")
}

/// The four closed-form counts for one `n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountReport {
    pub n: usize,
    #[serde(serialize_with = "crate::bignum::serialize_uint")]
    #[serde(deserialize_with = "crate::bignum::deserialize_uint")]
    pub catalan: BigUint,
    #[serde(rename = "rootPT")]
    #[serde(serialize_with = "crate::bignum::serialize_uint")]
    #[serde(deserialize_with = "crate::bignum::deserialize_uint")]
    pub rooted_planar: BigUint,
    #[serde(rename = "asymRootPT")]
    #[serde(serialize_with = "crate::bignum::serialize_uint")]
    #[serde(deserialize_with = "crate::bignum::deserialize_uint")]
    pub asym_rooted_planar: BigUint,
    #[serde(rename = "PT")]
    #[serde(serialize_with = "crate::bignum::serialize_uint")]
    #[serde(deserialize_with = "crate::bignum::deserialize_uint")]
    pub planar: BigUint,
    #[serde(rename = "asymPT")]
    #[serde(serialize_with = "crate::bignum::serialize_uint")]
    #[serde(deserialize_with = "crate::bignum::deserialize_uint")]
    pub asym_planar: BigUint,
}

impl CountReport {
    pub fn new(n: usize) -> Result<Self> {
        Ok(Self {
            n,
            catalan: catalan(n as u64),
            rooted_planar: count_rooted_planar(n)?,
            asym_rooted_planar: count_asym_rooted_planar(n)?,
            planar: count_planar(n)?,
            asym_planar: count_asym_planar(n)?,
        })
    }
}

/// The distinct trees `t, φ(t), φ²(t), ...` before the first repeat.
pub fn phi_orbit(t: &PlaneTree) -> Vec<PlaneTree> {
    let mut orbit = vec![t.clone()];
    let mut x = phi(t);
    while &x != t {
        let next = phi(&x);
        orbit.push(x);
        x = next;
    }
    orbit
}

/// Length of the [`phi`]-orbit of `t`: the least `k >= 1` with `φ^k(t) = t`.
pub fn phi_period(t: &PlaneTree) -> usize {
    let len = 2 * t.n();
    (1..=len)
        .find(|&k| len.is_multiple_of(k) && t.is_fixed_by_rotation(k as i64))
        .expect("rotating by 2n is the identity")
}

/// The least Dyck word in the [`phi`]-orbit: one representative per planar tree.
pub fn canonical_planar(t: &PlaneTree) -> PlaneTree {
    phi_orbit(t)
        .into_iter()
        .min()
        .expect("orbits are non-empty")
}

/// Order of the rotational symmetry group of the underlying planar tree:
/// `2n / |orbit|`.
pub fn symmetry_order(t: &PlaneTree) -> usize {
    2 * t.n() / phi_period(t)
}

/// Brute-force counterparts of the four closed forms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct BruteCounts {
    pub rooted_planar: u64,
    pub asym_rooted_planar: u64,
    pub planar: u64,
    pub asym_planar: u64,
}

/// Counts by canonicalisation over every plane tree with `n` edges.
///
/// Rooted planar classes are represented by the tree whose sequence of root
/// subtrees is the least of its cyclic rotations; a class is asymmetric when
/// that sequence is primitive. Planar classes are [`phi`]-orbits, represented
/// by their least Dyck word; asymmetric ones have the full length `2n`.
pub fn brute_force_counts(n: usize, cap: Cap) -> Result<BruteCounts> {
    let mut out = BruteCounts::default();
    for t in enumerate_trees_capped(n, cap)? {
        let parts = t.root_components();
        let k = parts.len();
        let mut is_least = true;
        let mut period = k;
        for r in 1..k {
            let rotated = parts[r..].iter().chain(&parts[..r]);
            match rotated.cmp(parts.iter()) {
                std::cmp::Ordering::Less => {
                    is_least = false;
                    break;
                }
                std::cmp::Ordering::Equal => period = period.min(r),
                std::cmp::Ordering::Greater => {}
            }
        }
        if is_least {
            out.rooted_planar += 1;
            if period == k {
                out.asym_rooted_planar += 1;
            }
        }

        let orbit = phi_orbit(&t);
        if orbit.iter().all(|x| &t <= x) {
            out.planar += 1;
            if orbit.len() == 2 * n {
                out.asym_planar += 1;
            }
        }
    }
    Ok(out)
}

pub fn count_rooted_planar_bruteforce(n: usize, cap: Cap) -> Result<u64> {
    Ok(brute_force_counts(n, cap)?.rooted_planar)
}

pub fn count_asym_rooted_planar_bruteforce(n: usize, cap: Cap) -> Result<u64> {
    Ok(brute_force_counts(n, cap)?.asym_rooted_planar)
}

pub fn count_planar_bruteforce(n: usize, cap: Cap) -> Result<u64> {
    Ok(brute_force_counts(n, cap)?.planar)
}

pub fn count_asym_planar_bruteforce(n: usize, cap: Cap) -> Result<u64> {
    Ok(brute_force_counts(n, cap)?.asym_planar)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::{star_bt, star_tp};

    fn big(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn rooted_examples() {
        assert_eq!(count_rooted_planar(2).unwrap(), big(2));
        assert_eq!(count_rooted_planar(3).unwrap(), big(4));
        assert_eq!(count_rooted_planar(4).unwrap(), big(10));
        assert_eq!(count_asym_rooted_planar(1).unwrap(), big(1));
        assert_eq!(count_asym_rooted_planar(2).unwrap(), big(1));
        assert_eq!(count_asym_rooted_planar(3).unwrap(), big(3));
        assert_eq!(count_asym_rooted_planar(4).unwrap(), big(8));
        assert_eq!(count_asym_rooted_planar(5).unwrap(), big(25));
    }

    #[test]
    fn planar_examples() {
        assert_eq!(count_planar(4).unwrap(), big(3));
        assert_eq!(count_asym_planar(4).unwrap(), big(1));
        assert_eq!(count_planar(3).unwrap(), big(2));
        assert_eq!(count_asym_planar(3).unwrap(), big(0));
        assert_eq!(count_asym_planar(5).unwrap(), big(3));
        assert_eq!(count_planar(5).unwrap(), big(6));
        assert_eq!(count_planar(1).unwrap(), big(1));
        assert_eq!(count_asym_planar(1).unwrap(), big(0));
    }

    #[test]
    fn zero_edges_rejected() {
        assert!(matches!(count_planar(0), Err(Error::Domain(_))));
        assert!(matches!(count_rooted_planar(0), Err(Error::Domain(_))));
    }

    #[test]
    fn report_json_shape() {
        let r = CountReport::new(4).unwrap();
        let json = serde_json::to_string(&r).unwrap();
        assert_eq!(
            json,
            r#"{"n":4,"catalan":14,"rootPT":10,"asymRootPT":8,"PT":3,"asymPT":1}"#
        );
        assert_eq!(serde_json::from_str::<CountReport>(&json).unwrap(), r);
        let big_report = CountReport::new(40).unwrap();
        let json = serde_json::to_string(&big_report).unwrap();
        assert!(json.contains(r#""catalan":"2622127042276492108820""#));
        assert_eq!(
            serde_json::from_str::<CountReport>(&json).unwrap(),
            big_report
        );
    }

    #[test]
    fn orbits_and_symmetry() {
        for n in 2..=6 {
            assert_eq!(symmetry_order(&star_tp(n)), n);
        }
        // a single edge is fixed by every shift
        assert_eq!(symmetry_order(&star_tp(1)), 2);
        assert_eq!(phi_orbit(&star_tp(2)), vec![star_tp(2), star_bt(2)]);
        let path: PlaneTree = "((()))".parse().unwrap();
        assert_eq!(phi_orbit(&path).len(), 3);
        assert_eq!(symmetry_order(&path), 2);
        assert_eq!(canonical_planar(&star_tp(3)).to_dyck(), "(()())");
        assert_eq!(phi_period(&"()".parse().unwrap()), 1);
    }

    #[test]
    fn brute_force_examples() {
        assert_eq!(count_planar_bruteforce(4, Cap::default()).unwrap(), 3);
        assert_eq!(
            count_rooted_planar_bruteforce(3, Cap::default()).unwrap(),
            4
        );
        assert_eq!(count_asym_planar_bruteforce(5, Cap::default()).unwrap(), 3);
        assert_eq!(
            count_asym_rooted_planar_bruteforce(4, Cap::default()).unwrap(),
            8
        );
        assert!(matches!(
            brute_force_counts(6, Cap(5)),
            Err(Error::ResourceLimit { n: 6, cap: 5 })
        ));
    }
}
