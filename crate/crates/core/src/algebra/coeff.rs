//! Exact coefficients: residues modulo a prime, or arbitrary-precision rationals.

use crate::error::{EngineError, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// The coefficient domain of a polynomial ring: a prime field or the rationals.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum CoeffDomain {
    /// Integers modulo the given prime.
    Fp(u64),
    /// Exact rational numbers.
    Rational,
}

impl CoeffDomain {
    pub fn characteristic(&self) -> u64 {
        match self {
            CoeffDomain::Fp(p) => *p,
            CoeffDomain::Rational => 0,
        }
    }

    /// Validates that an `Fp` modulus is actually prime.
    pub fn validate(&self) -> Result<()> {
        match self {
            CoeffDomain::Rational => Ok(()),
            CoeffDomain::Fp(p) => {
                if is_prime(*p) {
                    Ok(())
                } else {
                    Err(EngineError::BadCharacteristic(*p))
                }
            }
        }
    }

    pub fn zero(&self) -> Coefficient {
        match self {
            CoeffDomain::Fp(p) => Coefficient::Fp { value: 0, modulus: *p },
            CoeffDomain::Rational => Coefficient::Rational(BigRational::zero()),
        }
    }

    pub fn one(&self) -> Coefficient {
        match self {
            CoeffDomain::Fp(p) => Coefficient::Fp { value: 1 % *p, modulus: *p },
            CoeffDomain::Rational => Coefficient::Rational(BigRational::one()),
        }
    }

    /// The image of an integer in this domain.
    pub fn from_int(&self, n: i64) -> Coefficient {
        match self {
            CoeffDomain::Fp(p) => {
                let p = *p;
                let r = n.rem_euclid(p as i64) as u64;
                Coefficient::Fp { value: r, modulus: p }
            }
            CoeffDomain::Rational => Coefficient::Rational(BigRational::from(BigInt::from(n))),
        }
    }

    pub fn from_ratio(&self, num: i64, den: i64) -> Result<Coefficient> {
        if den == 0 {
            return Err(EngineError::DivisionByZero);
        }
        match self {
            CoeffDomain::Rational => Ok(Coefficient::Rational(BigRational::new(
                BigInt::from(num),
                BigInt::from(den),
            ))),
            CoeffDomain::Fp(_) => {
                let d = self.from_int(den);
                if d.is_zero() {
                    return Err(EngineError::DivisionByZero);
                }
                Ok(self.from_int(num).mul(&d.inverse()?))
            }
        }
    }
}

impl fmt::Display for CoeffDomain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoeffDomain::Fp(p) => write!(f, "F_{p}"),
            CoeffDomain::Rational => write!(f, "Q"),
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// An exact field element: always reduced mod p, or a rational in lowest terms.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Coefficient {
    Fp { value: u64, modulus: u64 },
    Rational(BigRational),
}

impl Coefficient {
    pub fn domain(&self) -> CoeffDomain {
        match self {
            Coefficient::Fp { modulus, .. } => CoeffDomain::Fp(*modulus),
            Coefficient::Rational(_) => CoeffDomain::Rational,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Coefficient::Fp { value, .. } => *value == 0,
            Coefficient::Rational(r) => r.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Coefficient::Fp { value, .. } => *value == 1,
            Coefficient::Rational(r) => r.is_one(),
        }
    }

    fn check_domain(&self, other: &Coefficient) {
        debug_assert_eq!(
            self.domain(),
            other.domain(),
            "coefficient domain mismatch inside arithmetic"
        );
    }

    pub fn add(&self, other: &Coefficient) -> Coefficient {
        self.check_domain(other);
        match (self, other) {
            (Coefficient::Fp { value: a, modulus: p }, Coefficient::Fp { value: b, .. }) => {
                Coefficient::Fp { value: add_mod(*a, *b, *p), modulus: *p }
            }
            (Coefficient::Rational(a), Coefficient::Rational(b)) => Coefficient::Rational(a + b),
            _ => unreachable!("mixed coefficient domains"),
        }
    }

    pub fn sub(&self, other: &Coefficient) -> Coefficient {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Coefficient {
        match self {
            Coefficient::Fp { value, modulus } => Coefficient::Fp {
                value: if *value == 0 { 0 } else { modulus - value },
                modulus: *modulus,
            },
            Coefficient::Rational(r) => Coefficient::Rational(-r),
        }
    }

    pub fn mul(&self, other: &Coefficient) -> Coefficient {
        self.check_domain(other);
        match (self, other) {
            (Coefficient::Fp { value: a, modulus: p }, Coefficient::Fp { value: b, .. }) => {
                Coefficient::Fp { value: mul_mod(*a, *b, *p), modulus: *p }
            }
            (Coefficient::Rational(a), Coefficient::Rational(b)) => Coefficient::Rational(a * b),
            _ => unreachable!("mixed coefficient domains"),
        }
    }

    pub fn inverse(&self) -> Result<Coefficient> {
        if self.is_zero() {
            return Err(EngineError::DivisionByZero);
        }
        Ok(match self {
            Coefficient::Fp { value, modulus } => Coefficient::Fp {
                // Fermat: a^(p-2) mod p
                value: pow_mod(*value, *modulus - 2, *modulus),
                modulus: *modulus,
            },
            Coefficient::Rational(r) => Coefficient::Rational(r.recip()),
        })
    }

    pub fn pow(&self, e: u64) -> Coefficient {
        match self {
            Coefficient::Fp { value, modulus } => Coefficient::Fp {
                value: pow_mod(*value, e, *modulus),
                modulus: *modulus,
            },
            Coefficient::Rational(r) => {
                let e = i32::try_from(e).expect("rational exponent too large");
                Coefficient::Rational(r.pow(e))
            }
        }
    }
}

impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coefficient::Fp { value, .. } => write!(f, "{value}"),
            Coefficient::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else if r.is_negative() {
                    write!(f, "-{}/{}", r.numer().magnitude(), r.denom())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
        }
    }
}

fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 + b as u128) % p as u128) as u64
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut base: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        e >>= 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fp_inverse_roundtrip() {
        let d = CoeffDomain::Fp(7);
        for v in 1..7 {
            let a = d.from_int(v);
            assert!(a.mul(&a.inverse().unwrap()).is_one());
        }
    }

    #[test]
    fn additive_inverse_is_exact() {
        let d = CoeffDomain::Rational;
        let a = d.from_ratio(22, 7).unwrap();
        assert!(a.add(&a.neg()).is_zero());
        let d = CoeffDomain::Fp(5);
        let a = d.from_int(3);
        assert!(a.add(&a.neg()).is_zero());
    }

    #[test]
    fn rational_stays_reduced() {
        let d = CoeffDomain::Rational;
        let a = d.from_ratio(4, 6).unwrap();
        let b = d.from_ratio(2, 3).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn rejects_composite_modulus() {
        assert!(CoeffDomain::Fp(6).validate().is_err());
        assert!(CoeffDomain::Fp(1).validate().is_err());
        assert!(CoeffDomain::Fp(2).validate().is_ok());
        assert!(CoeffDomain::Fp(101).validate().is_ok());
    }
}
