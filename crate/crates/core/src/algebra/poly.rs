//! Sparse multivariate polynomials in normal form over an explicit ring context.

use crate::algebra::coeff::{CoeffDomain, Coefficient};
use crate::algebra::monomial::{Monomial, MonomialOrder};
use crate::error::{EngineError, Result};
use std::fmt;
use std::sync::Arc;

/// The ambient polynomial ring: variable names, coefficient domain, term order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingCtx {
    pub vars: Vec<String>,
    pub domain: CoeffDomain,
    pub order: MonomialOrder,
}

impl RingCtx {
    pub fn new(vars: Vec<String>, domain: CoeffDomain, order: MonomialOrder) -> Result<Arc<Self>> {
        domain.validate()?;
        Ok(Arc::new(RingCtx { vars, domain, order }))
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn characteristic(&self) -> u64 {
        self.domain.characteristic()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// A copy of this context extended by one fresh variable (appended last).
    pub fn extended(self: &Arc<Self>, fresh: &str) -> Arc<RingCtx> {
        let mut vars = self.vars.clone();
        vars.push(fresh.to_string());
        Arc::new(RingCtx { vars, domain: self.domain.clone(), order: self.order })
    }

    /// Same variables and domain, different term order.
    pub fn with_order(self: &Arc<Self>, order: MonomialOrder) -> Arc<RingCtx> {
        Arc::new(RingCtx { vars: self.vars.clone(), domain: self.domain.clone(), order })
    }

    pub fn describe(&self) -> String {
        format!("{}[{}] ({})", self.domain, self.vars.join(","), self.order)
    }

    /// Picks a variable name not already used, based on `stem`.
    pub fn fresh_var_name(&self, stem: &str) -> String {
        if self.var_index(stem).is_none() {
            return stem.to_string();
        }
        let mut i = 1usize;
        loop {
            let cand = format!("{stem}{i}");
            if self.var_index(&cand).is_none() {
                return cand;
            }
            i += 1;
        }
    }
}

fn same_ctx(a: &Arc<RingCtx>, b: &Arc<RingCtx>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

/// A polynomial in normal form: nonzero coefficients, terms strictly
/// descending under the context's order, at most one term per monomial.
#[derive(Debug, Clone)]
pub struct Polynomial {
    ctx: Arc<RingCtx>,
    terms: Vec<(Monomial, Coefficient)>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        same_ctx(&self.ctx, &other.ctx) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl Polynomial {
    pub fn zero(ctx: &Arc<RingCtx>) -> Self {
        Polynomial { ctx: ctx.clone(), terms: Vec::new() }
    }

    pub fn one(ctx: &Arc<RingCtx>) -> Self {
        Self::constant(ctx, ctx.domain.one())
    }

    pub fn constant(ctx: &Arc<RingCtx>, c: Coefficient) -> Self {
        if c.is_zero() {
            return Self::zero(ctx);
        }
        Polynomial { ctx: ctx.clone(), terms: vec![(Monomial::one(ctx.nvars()), c)] }
    }

    pub fn var(ctx: &Arc<RingCtx>, idx: usize) -> Self {
        Polynomial {
            ctx: ctx.clone(),
            terms: vec![(Monomial::var(ctx.nvars(), idx), ctx.domain.one())],
        }
    }

    pub fn monomial(ctx: &Arc<RingCtx>, m: Monomial, c: Coefficient) -> Self {
        let mut p = Polynomial { ctx: ctx.clone(), terms: vec![(m, c)] };
        p.normalize();
        p
    }

    /// Builds a polynomial from arbitrary (monomial, coefficient) pairs.
    pub fn from_terms(ctx: &Arc<RingCtx>, terms: Vec<(Monomial, Coefficient)>) -> Self {
        let mut p = Polynomial { ctx: ctx.clone(), terms };
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        let order = self.ctx.order;
        self.terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        let mut out: Vec<(Monomial, Coefficient)> = Vec::with_capacity(self.terms.len());
        for (m, c) in self.terms.drain(..) {
            if let Some(last) = out.last_mut() {
                if last.0 == m {
                    last.1 = last.1.add(&c);
                    if last.1.is_zero() {
                        out.pop();
                    }
                    continue;
                }
            }
            if !c.is_zero() {
                out.push((m, c));
            }
        }
        self.terms = out;
    }

    pub fn ctx(&self) -> &Arc<RingCtx> {
        &self.ctx
    }

    pub fn terms(&self) -> &[(Monomial, Coefficient)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() <= 1 && self.terms.iter().all(|(m, _)| m.is_one())
    }

    /// True when every term is a bare power product (at most one term).
    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn leading(&self) -> Option<&(Monomial, Coefficient)> {
        self.terms.first()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0)
    }

    fn check_ctx(&self, other: &Polynomial) -> Result<()> {
        if same_ctx(&self.ctx, &other.ctx) {
            Ok(())
        } else {
            Err(EngineError::ContextMismatch {
                left: self.ctx.describe(),
                right: other.ctx.describe(),
            })
        }
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ctx(other)?;
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        Ok(Polynomial::from_terms(&self.ctx, terms))
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ctx(other)?;
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                terms.push((ma.mul(mb), ca.mul(cb)));
            }
        }
        Ok(Polynomial::from_terms(&self.ctx, terms))
    }

    pub fn mul_term(&self, m: &Monomial, c: &Coefficient) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ctx);
        }
        Polynomial {
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|(tm, tc)| (tm.mul(m), tc.mul(c))).collect(),
        }
    }

    pub fn scale(&self, c: &Coefficient) -> Polynomial {
        self.mul_term(&Monomial::one(self.ctx.nvars()), c)
    }

    /// Exact `e`-th power. In characteristic p the p-power part is taken
    /// term-wise (Frobenius additivity); the rest goes through binary powering.
    pub fn pow(&self, e: u64) -> Polynomial {
        if e == 0 {
            return Polynomial::one(&self.ctx);
        }
        let p = self.ctx.characteristic();
        let mut frob = 1u64;
        let mut rest = e;
        if p > 1 {
            while rest % p == 0 {
                frob *= p;
                rest /= p;
            }
        }
        let base = if frob > 1 { self.frobenius_pow(frob) } else { self.clone() };
        base.pow_generic(rest)
    }

    /// Term-wise q-th power; only valid when q is a power of the characteristic.
    fn frobenius_pow(&self, q: u64) -> Polynomial {
        let qe = u32::try_from(q).expect("frobenius power exponent too large");
        Polynomial {
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.pow(qe), c.pow(q))).collect(),
        }
    }

    fn pow_generic(&self, mut e: u64) -> Polynomial {
        let mut acc = Polynomial::one(&self.ctx);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).expect("same context");
            }
            base = base.mul(&base).expect("same context");
            e >>= 1;
        }
        acc
    }

    /// Repeated-multiplication power, kept as an independent route for tests.
    pub fn pow_by_repeated_mul(&self, e: u64) -> Polynomial {
        let mut acc = Polynomial::one(&self.ctx);
        for _ in 0..e {
            acc = acc.mul(self).expect("same context");
        }
        acc
    }

    /// Reinterprets the polynomial in `target`, whose variables must contain
    /// this context's variables as a prefix (fresh ones appended).
    pub fn extend_to(&self, target: &Arc<RingCtx>) -> Result<Polynomial> {
        if target.nvars() < self.ctx.nvars()
            || target.vars[..self.ctx.nvars()] != self.ctx.vars[..]
            || target.domain != self.ctx.domain
        {
            return Err(EngineError::ContextMismatch {
                left: self.ctx.describe(),
                right: target.describe(),
            });
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut exps = m.exps().to_vec();
                exps.resize(target.nvars(), 0);
                (Monomial::new(exps), c.clone())
            })
            .collect();
        Ok(Polynomial::from_terms(target, terms))
    }

    /// Moves the polynomial into `target` sending variable `i` to the
    /// variable `var_map[i]` of the target.
    pub fn map_vars(&self, target: &Arc<RingCtx>, var_map: &[usize]) -> Result<Polynomial> {
        if var_map.len() != self.ctx.nvars() || self.ctx.domain != target.domain {
            return Err(EngineError::ContextMismatch {
                left: self.ctx.describe(),
                right: target.describe(),
            });
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut exps = vec![0u32; target.nvars()];
                for (i, e) in m.exps().iter().enumerate() {
                    exps[var_map[i]] += e;
                }
                (Monomial::new(exps), c.clone())
            })
            .collect();
        Ok(Polynomial::from_terms(target, terms))
    }

    /// Ring homomorphism determined by images of the variables.
    pub fn substitute(&self, target: &Arc<RingCtx>, images: &[Polynomial]) -> Result<Polynomial> {
        if images.len() != self.ctx.nvars() {
            return Err(EngineError::ContextMismatch {
                left: self.ctx.describe(),
                right: target.describe(),
            });
        }
        let mut acc = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut term = Polynomial::constant(target, c.clone());
            for (i, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    term = term.mul(&images[i].pow(e as u64))?;
                }
            }
            acc = acc.add(&term)?;
        }
        Ok(acc)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let cs = c.to_string();
            let (neg, mag) = match cs.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, cs),
            };
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            let mut parts: Vec<String> = Vec::new();
            if !(mag == "1" && !m.is_one()) {
                parts.push(mag);
            }
            for (vi, &e) in m.exps().iter().enumerate() {
                if e == 1 {
                    parts.push(self.ctx.vars[vi].clone());
                } else if e > 1 {
                    parts.push(format!("{}^{}", self.ctx.vars[vi], e));
                }
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

/// Parses the canonical ASCII grammar: terms joined by `+`/`-`, monomials as
/// `coeff*x^e*y`, coefficient `1` and exponent `1` elidable.
pub fn parse_polynomial(ctx: &Arc<RingCtx>, input: &str) -> Result<Polynomial> {
    Parser { ctx, src: input.as_bytes(), pos: 0 }.parse()
}

struct Parser<'a> {
    ctx: &'a Arc<RingCtx>,
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn parse(mut self) -> Result<Polynomial> {
        let mut terms: Vec<(Monomial, Coefficient)> = Vec::new();
        self.skip_ws();
        let mut sign = 1i64;
        if self.eat(b'-') {
            sign = -1;
        } else {
            self.eat(b'+');
        }
        loop {
            let (m, c) = self.term(sign)?;
            terms.push((m, c));
            self.skip_ws();
            if self.eat(b'+') {
                sign = 1;
            } else if self.eat(b'-') {
                sign = -1;
            } else {
                break;
            }
        }
        self.skip_ws();
        if self.pos != self.src.len() {
            return Err(self.err("trailing input"));
        }
        Ok(Polynomial::from_terms(self.ctx, terms))
    }

    fn term(&mut self, sign: i64) -> Result<(Monomial, Coefficient)> {
        self.skip_ws();
        let mut coeff = self.ctx.domain.from_int(sign);
        let mut exps = vec![0u32; self.ctx.nvars()];
        let mut saw_factor = false;
        loop {
            self.skip_ws();
            if self.peek().is_some_and(|c| c.is_ascii_digit()) {
                let num = self.number()?;
                self.skip_ws();
                let c = if self.eat(b'/') {
                    self.skip_ws();
                    let den = self.number()?;
                    self.ctx.domain.from_ratio(num, den)?
                } else {
                    self.ctx.domain.from_int(num)
                };
                coeff = coeff.mul(&c);
                saw_factor = true;
            } else if self.peek().is_some_and(|c| c.is_ascii_alphabetic() || c == b'_') {
                let name = self.ident();
                let idx = self
                    .ctx
                    .var_index(&name)
                    .ok_or(EngineError::UnknownVariable(name))?;
                self.skip_ws();
                let e = if self.eat(b'^') {
                    self.skip_ws();
                    let e = self.number()?;
                    if e < 0 {
                        return Err(self.err("negative exponent"));
                    }
                    e as u32
                } else {
                    1
                };
                exps[idx] += e;
                saw_factor = true;
            } else {
                return Err(self.err("expected coefficient or variable"));
            }
            self.skip_ws();
            if !self.eat(b'*') {
                break;
            }
        }
        if !saw_factor {
            return Err(self.err("empty term"));
        }
        Ok((Monomial::new(exps), coeff))
    }

    fn number(&mut self) -> Result<i64> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected number"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse::<i64>()
            .map_err(|_| self.err("number out of range"))
    }

    fn ident(&mut self) -> String {
        let start = self.pos;
        while self
            .peek()
            .is_some_and(|c| c.is_ascii_alphanumeric() || c == b'_')
        {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn err(&self, message: &str) -> EngineError {
        EngineError::Parse { offset: self.pos, message: message.to_string() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2_xy() -> Arc<RingCtx> {
        RingCtx::new(
            vec!["x".into(), "y".into()],
            CoeffDomain::Fp(2),
            MonomialOrder::GrevLex,
        )
        .unwrap()
    }

    fn q_xy() -> Arc<RingCtx> {
        RingCtx::new(
            vec!["x".into(), "y".into()],
            CoeffDomain::Rational,
            MonomialOrder::GrevLex,
        )
        .unwrap()
    }

    fn p(ctx: &Arc<RingCtx>, s: &str) -> Polynomial {
        parse_polynomial(ctx, s).unwrap()
    }

    #[test]
    fn add_x_minus_x_is_zero() {
        let ctx = q_xy();
        let x = p(&ctx, "x");
        assert!(x.add(&x.neg()).unwrap().is_zero());
    }

    #[test]
    fn frobenius_additivity_char_2() {
        let ctx = f2_xy();
        let s = p(&ctx, "x+y");
        assert_eq!(s.mul(&s).unwrap(), p(&ctx, "x^2+y^2"));
    }

    #[test]
    fn difference_of_squares_over_q() {
        let ctx = q_xy();
        let lhs = p(&ctx, "x+1").mul(&p(&ctx, "x-1")).unwrap();
        assert_eq!(lhs, p(&ctx, "x^2-1"));
    }

    #[test]
    fn cube_in_char_3() {
        let ctx = RingCtx::new(
            vec!["x".into(), "y".into()],
            CoeffDomain::Fp(3),
            MonomialOrder::GrevLex,
        )
        .unwrap();
        assert_eq!(p(&ctx, "x+y").pow(3), p(&ctx, "x^3+y^3"));
    }

    #[test]
    fn zeroth_power_is_one() {
        let ctx = q_xy();
        assert!(p(&ctx, "x^2+3*y").pow(0).is_one());
    }

    #[test]
    fn fast_and_generic_powers_agree() {
        // (x+y)^4 over F_2: frobenius fast path vs squaring twice
        let ctx = f2_xy();
        let s = p(&ctx, "x+y");
        let fast = s.pow(4);
        let generic = s.mul(&s).unwrap().mul(&s.mul(&s).unwrap()).unwrap();
        assert_eq!(fast, generic);
        assert_eq!(fast, s.pow_by_repeated_mul(4));
    }

    #[test]
    fn mul_term_count_bound() {
        let ctx = q_xy();
        let f = p(&ctx, "x+y+1");
        let g = p(&ctx, "x-y");
        assert!(f.mul(&g).unwrap().terms().len() <= 6);
    }

    #[test]
    fn context_mismatch_rejected() {
        let a = p(&f2_xy(), "x");
        let b = p(&q_xy(), "x");
        let err = a.add(&b).unwrap_err().to_string();
        assert!(err.contains("F_2"), "{err}");
        assert!(err.contains("Q["), "{err}");
    }

    #[test]
    fn parse_print_roundtrip_is_canonical() {
        let ctx = q_xy();
        for s in ["x^2-1", "x*y+y^2", "3/2*x", "0", "1", "-x+2", "x^2+x*y+y^2"] {
            let poly = p(&ctx, s);
            assert_eq!(p(&ctx, &poly.to_string()), poly);
        }
        // printing is descending under grevlex
        assert_eq!(p(&ctx, "1+x+x^2").to_string(), "x^2+x+1");
        assert_eq!(p(&ctx, "y^2 + x*y").to_string(), "x*y+y^2");
    }

    #[test]
    fn parse_rejects_unknown_variable() {
        assert!(parse_polynomial(&q_xy(), "x+z").is_err());
    }

    #[test]
    fn substitute_evaluates_hom() {
        let ctx = q_xy();
        let f = p(&ctx, "x^2+y");
        // x -> y, y -> x*y
        let img = f.substitute(&ctx, &[p(&ctx, "y"), p(&ctx, "x*y")]).unwrap();
        assert_eq!(img, p(&ctx, "y^2+x*y"));
    }
}
