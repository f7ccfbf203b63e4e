//! Monomials and the orders on them (including module orders on position/term pairs).

use serde::{Deserialize, Serialize};
use std::cmp::Ordering;

/// A power product, stored as one exponent slot per ring variable.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
    degree: u32,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        let degree = exps.iter().sum();
        Monomial { exps, degree }
    }

    pub fn one(nvars: usize) -> Self {
        Monomial { exps: vec![0; nvars], degree: 0 }
    }

    pub fn var(nvars: usize, idx: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[idx] = 1;
        Monomial { exps, degree: 1 }
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        let exps = self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect();
        Monomial::new(exps)
    }

    pub fn pow(&self, e: u32) -> Monomial {
        let exps = self.exps.iter().map(|a| a * e).collect();
        Monomial::new(exps)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`; caller must ensure divisibility.
    pub fn quotient(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        let exps = other.exps.iter().zip(&self.exps).map(|(b, a)| b - a).collect();
        Monomial::new(exps)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        let exps = self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect();
        Monomial::new(exps)
    }

    pub fn is_coprime_with(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }
}

/// A total, multiplicative well-order on monomials.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MonomialOrder {
    Lex,
    GrevLex,
    /// Elimination order: variables with index below `split` dominate
    /// (graded reverse-lex inside each block).
    Block { split: usize },
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Lex => lex_cmp(a.exps(), b.exps()),
            MonomialOrder::GrevLex => grevlex_cmp(a.exps(), b.exps()),
            MonomialOrder::Block { split } => {
                let s = (*split).min(a.exps().len());
                grevlex_cmp(&a.exps()[..s], &b.exps()[..s])
                    .then_with(|| grevlex_cmp(&a.exps()[s..], &b.exps()[s..]))
            }
        }
    }
}

impl std::fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            MonomialOrder::Lex => write!(f, "lex"),
            MonomialOrder::GrevLex => write!(f, "grevlex"),
            MonomialOrder::Block { split } => write!(f, "block({split})"),
        }
    }
}

fn lex_cmp(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            ord => return ord,
        }
    }
    Ordering::Equal
}

fn grevlex_cmp(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        ord => return ord,
    }
    // same degree: the last variable where they differ decides, reversed
    for (x, y) in a.iter().zip(b.iter()).rev() {
        match x.cmp(y) {
            Ordering::Equal => continue,
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}

/// Order on (component, monomial) pairs of a free module.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ModuleOrder {
    /// Compare monomials first, break ties by component (lower index larger).
    TermOverPosition(MonomialOrder),
    /// Compare components first (lower index larger), then monomials.
    PositionOverTerm(MonomialOrder),
}

impl ModuleOrder {
    pub fn ring_order(&self) -> MonomialOrder {
        match self {
            ModuleOrder::TermOverPosition(o) | ModuleOrder::PositionOverTerm(o) => *o,
        }
    }

    pub fn cmp(&self, a: (usize, &Monomial), b: (usize, &Monomial)) -> Ordering {
        match self {
            ModuleOrder::TermOverPosition(o) => {
                o.cmp(a.1, b.1).then_with(|| b.0.cmp(&a.0))
            }
            ModuleOrder::PositionOverTerm(o) => {
                b.0.cmp(&a.0).then_with(|| o.cmp(a.1, b.1))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn grevlex_basics() {
        let o = MonomialOrder::GrevLex;
        // degree decides first
        assert_eq!(o.cmp(&m(&[2, 0]), &m(&[1, 0])), Ordering::Greater);
        // x > y at the same degree
        assert_eq!(o.cmp(&m(&[1, 0]), &m(&[0, 1])), Ordering::Greater);
        // x*z < y^2 in grevlex (classic three-variable case)
        assert_eq!(o.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Less);
    }

    #[test]
    fn block_order_eliminates_prefix() {
        let o = MonomialOrder::Block { split: 1 };
        // any power of the eliminated variable dominates anything without it
        assert_eq!(o.cmp(&m(&[1, 0, 0]), &m(&[0, 9, 9])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[0, 2, 0]), &m(&[0, 0, 1])), Ordering::Greater);
    }

    #[test]
    fn divides_and_quotient() {
        let a = m(&[1, 2]);
        let b = m(&[2, 2]);
        assert!(a.divides(&b));
        assert!(!b.divides(&a));
        assert_eq!(a.quotient(&b), m(&[1, 0]));
        assert_eq!(a.lcm(&m(&[2, 0])), m(&[2, 2]));
    }

    #[test]
    fn module_order_tiebreaks() {
        let top = ModuleOrder::TermOverPosition(MonomialOrder::GrevLex);
        let pot = ModuleOrder::PositionOverTerm(MonomialOrder::GrevLex);
        let x = m(&[1, 0]);
        let y = m(&[0, 1]);
        // TOP: monomial decides even across components
        assert_eq!(top.cmp((1, &x), (0, &y)), Ordering::Greater);
        // POT: component decides even across monomials
        assert_eq!(pot.cmp((1, &x), (0, &y)), Ordering::Less);
        // lower component is the larger position
        assert_eq!(top.cmp((0, &x), (1, &x)), Ordering::Greater);
    }
}
