//! Exact non-negative rational exponents and their scaled ceilings.

use crate::error::{EngineError, Result};
use num_integer::Integer;
use serde::{Deserialize, Serialize};
use std::fmt;

/// A non-negative rational t = a/b in lowest terms, b >= 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RationalExponent {
    numer: u64,
    denom: u64,
}

impl RationalExponent {
    pub fn new(numer: u64, denom: u64) -> Result<Self> {
        if denom == 0 {
            return Err(EngineError::DivisionByZero);
        }
        let g = numer.gcd(&denom);
        if g == 0 {
            return Ok(RationalExponent { numer: 0, denom: 1 });
        }
        Ok(RationalExponent { numer: numer / g, denom: denom / g })
    }

    pub fn from_integer(n: u64) -> Self {
        RationalExponent { numer: n, denom: 1 }
    }

    /// Parses "a/b" or "a".
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = |m: &str| EngineError::Parse { offset: 0, message: m.to_string() };
        match s.split_once('/') {
            Some((a, b)) => {
                let numer = a.trim().parse().map_err(|_| bad("bad numerator"))?;
                let denom = b.trim().parse().map_err(|_| bad("bad denominator"))?;
                RationalExponent::new(numer, denom)
            }
            None => Ok(RationalExponent::from_integer(
                s.parse().map_err(|_| bad("bad integer exponent"))?,
            )),
        }
    }

    pub fn numer(&self) -> u64 {
        self.numer
    }

    pub fn denom(&self) -> u64 {
        self.denom
    }

    /// ceil(t * q) by exact integer arithmetic.
    pub fn ceil_scale(&self, q: u64) -> u64 {
        debug_assert!(q >= 1);
        let n = self.numer as u128 * q as u128;
        let d = self.denom as u128;
        ((n + d - 1) / d) as u64
    }
}

impl fmt::Display for RationalExponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom == 1 {
            write!(f, "{}", self.numer)
        } else {
            write!(f, "{}/{}", self.numer, self.denom)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ceil_scale_examples() {
        assert_eq!(RationalExponent::new(1, 2).unwrap().ceil_scale(8), 4);
        assert_eq!(RationalExponent::new(2, 3).unwrap().ceil_scale(4), 3);
        let t = RationalExponent::from_integer(1);
        for q in [1, 2, 4, 8, 16] {
            assert_eq!(t.ceil_scale(q), q);
        }
    }

    #[test]
    fn reduces_to_lowest_terms() {
        let t = RationalExponent::new(4, 6).unwrap();
        assert_eq!((t.numer(), t.denom()), (2, 3));
        assert_eq!(RationalExponent::parse("4/6").unwrap(), t);
        assert_eq!(RationalExponent::parse("2").unwrap().denom(), 1);
    }
}
