//! Exact sparse multivariate polynomial arithmetic over prime fields and the
//! rationals, monomial orders, and Frobenius-power helpers.

mod coeff;
mod module;
mod monomial;
mod poly;
mod rational;

pub use coeff::{CoeffDomain, Coefficient};
pub use module::FreeModuleElement;
pub use monomial::{ModuleOrder, Monomial, MonomialOrder};
pub use poly::{parse_polynomial, Polynomial, RingCtx};
pub use rational::RationalExponent;

use crate::error::{EngineError, Result};

/// Checks that q is a power of the prime p (q = p^e, e >= 0).
pub fn validate_frobenius_power(q: u64, p: u64) -> Result<u32> {
    if p < 2 {
        return Err(EngineError::NeedsPrimeChar(p));
    }
    let mut q0 = q;
    let mut e = 0u32;
    while q0 > 1 {
        if q0 % p != 0 {
            return Err(EngineError::NotAFrobeniusPower(q, p));
        }
        q0 /= p;
        e += 1;
    }
    if q == 0 {
        return Err(EngineError::NotAFrobeniusPower(q, p));
    }
    Ok(e)
}

/// Componentwise q-th power of a module element, q a power of the characteristic.
pub fn frobenius_vector_power(z: &FreeModuleElement, q: u64) -> Result<FreeModuleElement> {
    let p = z.ctx().characteristic();
    validate_frobenius_power(q, p)?;
    Ok(z.frobenius_power(q))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn frobenius_power_validation() {
        assert!(validate_frobenius_power(8, 2).is_ok());
        assert!(validate_frobenius_power(1, 3).is_ok());
        assert!(validate_frobenius_power(6, 2).is_err());
        assert!(validate_frobenius_power(9, 2).is_err());
        assert!(validate_frobenius_power(4, 0).is_err());
    }
}
