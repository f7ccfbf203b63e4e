//! Elements of a free module R^m: fixed-length vectors of polynomials.

use crate::algebra::poly::{Polynomial, RingCtx};
use crate::error::{EngineError, Result};
use std::fmt;
use std::sync::Arc;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeModuleElement {
    comps: Vec<Polynomial>,
}

impl FreeModuleElement {
    pub fn new(comps: Vec<Polynomial>) -> Self {
        assert!(!comps.is_empty(), "free module rank must be positive");
        FreeModuleElement { comps }
    }

    pub fn zero(ctx: &Arc<RingCtx>, rank: usize) -> Self {
        FreeModuleElement { comps: vec![Polynomial::zero(ctx); rank] }
    }

    /// The standard basis vector e_i scaled by `p`.
    pub fn basis_scaled(ctx: &Arc<RingCtx>, rank: usize, i: usize, p: Polynomial) -> Self {
        let mut v = Self::zero(ctx, rank);
        v.comps[i] = p;
        v
    }

    pub fn from_scalar(p: Polynomial) -> Self {
        FreeModuleElement { comps: vec![p] }
    }

    /// The single component of a rank-1 element.
    pub fn as_scalar(&self) -> &Polynomial {
        assert_eq!(self.comps.len(), 1, "not a rank-1 element");
        &self.comps[0]
    }

    pub fn rank(&self) -> usize {
        self.comps.len()
    }

    pub fn comps(&self) -> &[Polynomial] {
        &self.comps
    }

    pub fn ctx(&self) -> &Arc<RingCtx> {
        self.comps[0].ctx()
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(|p| p.is_zero())
    }

    fn check_rank(&self, other: &Self) -> Result<()> {
        if self.rank() == other.rank() {
            Ok(())
        } else {
            Err(EngineError::RankMismatch { expected: self.rank(), got: other.rank() })
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_rank(other)?;
        let comps = self
            .comps
            .iter()
            .zip(&other.comps)
            .map(|(a, b)| a.add(b))
            .collect::<Result<_>>()?;
        Ok(FreeModuleElement { comps })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        FreeModuleElement { comps: self.comps.iter().map(|p| p.neg()).collect() }
    }

    pub fn scale(&self, s: &Polynomial) -> Result<Self> {
        let comps = self.comps.iter().map(|p| p.mul(s)).collect::<Result<_>>()?;
        Ok(FreeModuleElement { comps })
    }

    /// Componentwise q-th power; valid as the Frobenius image when q is a
    /// power of the ring characteristic (the caller validates q).
    pub fn frobenius_power(&self, q: u64) -> Self {
        FreeModuleElement { comps: self.comps.iter().map(|p| p.pow(q)).collect() }
    }

    pub fn extend_to(&self, target: &Arc<RingCtx>) -> Result<Self> {
        let comps = self.comps.iter().map(|p| p.extend_to(target)).collect::<Result<_>>()?;
        Ok(FreeModuleElement { comps })
    }

    pub fn map_vars(&self, target: &Arc<RingCtx>, var_map: &[usize]) -> Result<Self> {
        let comps = self
            .comps
            .iter()
            .map(|p| p.map_vars(target, var_map))
            .collect::<Result<_>>()?;
        Ok(FreeModuleElement { comps })
    }

    pub fn substitute(&self, target: &Arc<RingCtx>, images: &[Polynomial]) -> Result<Self> {
        let comps = self
            .comps
            .iter()
            .map(|p| p.substitute(target, images))
            .collect::<Result<_>>()?;
        Ok(FreeModuleElement { comps })
    }
}

impl fmt::Display for FreeModuleElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.comps.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::coeff::CoeffDomain;
    use crate::algebra::monomial::MonomialOrder;
    use crate::algebra::poly::parse_polynomial;

    fn ctx(p: u64) -> Arc<RingCtx> {
        RingCtx::new(
            vec!["x".into(), "y".into()],
            CoeffDomain::Fp(p),
            MonomialOrder::GrevLex,
        )
        .unwrap()
    }

    #[test]
    fn componentwise_frobenius() {
        let c = ctx(2);
        let z = FreeModuleElement::new(vec![
            parse_polynomial(&c, "x").unwrap(),
            parse_polynomial(&c, "y").unwrap(),
        ]);
        let z2 = z.frobenius_power(2);
        assert_eq!(z2.comps()[0], parse_polynomial(&c, "x^2").unwrap());
        assert_eq!(z2.comps()[1], parse_polynomial(&c, "y^2").unwrap());
    }

    #[test]
    fn frobenius_on_sums_char_3() {
        let c = ctx(3);
        let z = FreeModuleElement::new(vec![
            parse_polynomial(&c, "x+y").unwrap(),
            parse_polynomial(&c, "1").unwrap(),
        ]);
        let z3 = z.frobenius_power(3);
        assert_eq!(z3.comps()[0], parse_polynomial(&c, "x^3+y^3").unwrap());
        assert!(z3.comps()[1].is_one());
    }

    #[test]
    fn zero_vector_power() {
        let c = ctx(2);
        let z = FreeModuleElement::zero(&c, 3);
        assert!(z.frobenius_power(4).is_zero());
    }

    #[test]
    fn rank_mismatch_rejected() {
        let c = ctx(2);
        let a = FreeModuleElement::zero(&c, 2);
        let b = FreeModuleElement::zero(&c, 3);
        assert!(a.add(&b).is_err());
    }
}
