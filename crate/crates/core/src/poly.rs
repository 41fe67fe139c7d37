//! Dense polynomials in `q` with exact integer coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// `coeffs[k]` is the coefficient of `q^k`. No trailing zeros; the zero
/// polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize)]
#[serde(transparent)]
pub struct IntPolynomial {
    #[serde(serialize_with = "crate::bignum::vec_int::serialize")]
    coeffs: Vec<BigInt>,
}

/// Structured form: ascending coefficient array. Trailing zeros are accepted and trimmed.
impl<'de> Deserialize<'de> for IntPolynomial {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        crate::bignum::vec_int::deserialize(d).map(Self::new)
    }
}

impl IntPolynomial {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = Self { coeffs };
        p.trim();
        p
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0)
    }

    /// `c * q^e`.
    pub fn monomial(c: BigInt, e: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); e + 1];
        coeffs[e] = c;
        Self::new(coeffs)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `q^e`, zero past the degree.
    pub fn coeff(&self, e: usize) -> BigInt {
        self.coeffs.get(e).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Horner evaluation at an integer.
    pub fn eval(&self, q: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * q + c)
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Multiplies by `q^e`.
    pub fn shift(&self, e: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); e];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    /// Long division. Every quotient coefficient must be an integer, which
    /// always holds for monic divisors; otherwise the division is reported as
    /// inconsistent rather than rounded.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let Some(dd) = divisor.degree() else {
            return Err(Error::Domain("division by the zero polynomial".into()));
        };
        let lead = &divisor.coeffs[dd];
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree().filter(|&nd| nd >= dd) else {
            return Ok((Self::zero(), self.clone()));
        };
        let mut quot = vec![BigInt::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let (c, r) = top.div_rem(lead);
            if !r.is_zero() {
                return Err(Error::Inconsistency(format!(
                    "non-integral quotient coefficient {top}/{lead} at q^{k}"
                )));
            }
            for (t, d) in divisor.coeffs.iter().enumerate() {
                rem[k + t] -= &c * d;
            }
            quot[k] = c;
        }
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Division that must leave no remainder.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self> {
        let (q, r) = self.div_rem(divisor)?;
        if !r.is_zero() {
            return Err(Error::Inconsistency(format!(
                "({self}) / ({divisor}) leaves remainder {r}"
            )));
        }
        Ok(q)
    }

    /// Whether `divisor` divides `self` exactly.
    pub fn is_divisible_by(&self, divisor: &Self) -> Result<bool> {
        Ok(self.div_rem(divisor)?.1.is_zero())
    }

    /// Reduces modulo `q^m - 1` by folding exponents: `a_l` is the sum of the
    /// coefficients of all `q^e` with `e ≡ l (mod m)`.
    pub fn mod_cyclic(&self, m: usize) -> Vec<BigInt> {
        assert!(m >= 1, "modulus q^m - 1 needs m >= 1");
        let mut out = vec![BigInt::zero(); m];
        for (e, c) in self.coeffs.iter().enumerate() {
            out[e % m] += c;
        }
        out
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (a, b) in coeffs.iter_mut().zip(&short.coeffs) {
            *a += b;
        }
        IntPolynomial::new(coeffs)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        self + &(-rhs)
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPolynomial::new(coeffs)
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $f:ident),*) => {$(
        impl $tr for IntPolynomial {
            type Output = IntPolynomial;
            fn $f(self, rhs: IntPolynomial) -> IntPolynomial {
                (&self).$f(&rhs)
            }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

/// Ascending exponents: `1 + q^2 + 2q^4`, `-1 + q`, `0`.
impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            match (first, c.is_negative()) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            if e == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match e {
                0 => {}
                1 => f.write_str("q")?,
                _ => write!(f, "q^{e}")?,
            }
        }
        Ok(())
    }
}

impl FromStr for IntPolynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let bad = |t: &str| Error::Parse(format!("bad polynomial term {t:?}"));
        // split into signed terms
        let mut terms = Vec::new();
        let mut start = 0;
        for (i, ch) in compact.char_indices() {
            if (ch == '+' || ch == '-') && i > 0 {
                terms.push(&compact[start..i]);
                start = i;
            }
        }
        terms.push(&compact[start..]);

        let mut acc = IntPolynomial::zero();
        for term in terms {
            let (negative, body) = match term.as_bytes().first() {
                Some(b'-') => (true, &term[1..]),
                Some(b'+') => (false, &term[1..]),
                _ => (false, term),
            };
            if body.is_empty() {
                return Err(bad(term));
            }
            let (coef, exp) = match body.find('q') {
                None => (body, 0),
                Some(pos) => {
                    let exp = match &body[pos + 1..] {
                        "" => 1,
                        rest => rest
                            .strip_prefix('^')
                            .and_then(|e| e.parse::<usize>().ok())
                            .ok_or_else(|| bad(term))?,
                    };
                    (&body[..pos], exp)
                }
            };
            let mut c: BigInt = if coef.is_empty() {
                BigInt::one()
            } else {
                coef.parse().map_err(|_| bad(term))?
            };
            if negative {
                c = -c;
            }
            acc = &acc + &IntPolynomial::monomial(c, exp);
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    #[test]
    fn trimming_and_degree() {
        assert_eq!(p(&[1, 2, 0, 0]).coeffs().len(), 2);
        assert_eq!(p(&[0, 0]).degree(), None);
        assert!(p(&[]).is_zero());
        assert_eq!(p(&[3, 0, 1]).degree(), Some(2));
    }

    #[test]
    fn arithmetic() {
        let a = p(&[1, 1]);
        let b = p(&[-1, 1]);
        assert_eq!(&a * &b, p(&[-1, 0, 1]));
        assert_eq!(&a + &b, p(&[0, 2]));
        assert_eq!(&a - &a, IntPolynomial::zero());
        assert_eq!(a.shift(2), p(&[0, 0, 1, 1]));
        assert_eq!(p(&[1, 2, 3]).eval(&BigInt::from(-1)), BigInt::from(2));
        assert_eq!(p(&[1, 2, 3]).eval_at_one(), BigInt::from(6));
    }

    #[test]
    fn division() {
        let num = p(&[1, 1, 2, 1, 1]);
        let den = p(&[1, 1, 1]);
        assert_eq!(num.exact_div(&den).unwrap(), p(&[1, 0, 1]));
        let (q, r) = p(&[1, 0, 0, 1]).div_rem(&p(&[1, 1])).unwrap();
        assert_eq!(q, p(&[1, -1, 1]));
        assert!(r.is_zero());
        let (q, r) = p(&[5, 0, 1]).div_rem(&p(&[1, 1])).unwrap();
        assert_eq!(q, p(&[-1, 1]));
        assert_eq!(r, p(&[6]));
        assert!(matches!(
            p(&[1, 0, 1]).exact_div(&p(&[1, 1])),
            Err(Error::Inconsistency(_))
        ));
        assert!(matches!(
            p(&[1, 1]).div_rem(&p(&[0, 2])),
            Err(Error::Inconsistency(_))
        ));
        assert!(matches!(
            p(&[1]).div_rem(&IntPolynomial::zero()),
            Err(Error::Domain(_))
        ));
        assert_eq!(
            p(&[1]).div_rem(&p(&[0, 1])).unwrap(),
            (IntPolynomial::zero(), p(&[1]))
        );
    }

    #[test]
    fn cyclic_folding() {
        assert_eq!(p(&[1, 0, 1]).mod_cyclic(4), [1, 0, 1, 0].map(BigInt::from));
        assert_eq!(p(&[1, 2, 3, 4, 5]).mod_cyclic(2), [9, 6].map(BigInt::from));
        assert_eq!(p(&[1, 2, 3]).mod_cyclic(1), [BigInt::from(6)]);
    }

    #[test]
    fn text_form() {
        assert_eq!(p(&[1, 0, 1, 0, 2]).to_string(), "1 + q^2 + 2q^4");
        assert_eq!(p(&[-1, 1]).to_string(), "-1 + q");
        assert_eq!(p(&[0, -3, 0, 1]).to_string(), "-3q + q^3");
        assert_eq!(IntPolynomial::zero().to_string(), "0");
        for s in ["1 + q^2 + 2q^4", "-1 + q", "-3q + q^3", "0", "7"] {
            assert_eq!(s.parse::<IntPolynomial>().unwrap().to_string(), s);
        }
        assert_eq!(
            "q^2+q^2 - 1".parse::<IntPolynomial>().unwrap(),
            p(&[-1, 0, 2])
        );
        for s in ["", "q^", "1 + + q", "2x", "q^-1"] {
            assert!(s.parse::<IntPolynomial>().is_err(), "{s}");
        }
    }

    #[test]
    fn structured_form() {
        let x = p(&[1, 0, 2]);
        assert_eq!(serde_json::to_string(&x).unwrap(), "[1,0,2]");
        let big = IntPolynomial::new(vec!["123456789012345678901234567890".parse().unwrap()]);
        let json = serde_json::to_string(&big).unwrap();
        assert_eq!(json, r#"["123456789012345678901234567890"]"#);
        assert_eq!(serde_json::from_str::<IntPolynomial>(&json).unwrap(), big);
        assert_eq!(
            serde_json::from_str::<IntPolynomial>("[1,0,2,0]").unwrap(),
            x
        );
    }
}
