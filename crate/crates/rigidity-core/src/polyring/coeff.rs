//! Coefficient domains: exact rationals and polynomials in parameter symbols.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::expvec::ExpVec;

/// Exact rational numbers with arbitrary-precision integer parts.
pub type Rat = BigRational;

/// A coefficient domain for [`super::Polynomial`]: a commutative ring with a
/// distinguished embedding of the rationals, in which division by a nonzero
/// rational is always possible.
///
/// Constructors are prototype-based (`zero_like`, `one_like`) because the
/// parametric domain carries a symbol context that a bare `zero()` could not
/// supply.
pub trait Coeff: Clone + PartialEq + fmt::Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul_rat(&self, r: &Rat) -> Self;
    /// Exact division by a nonzero rational.
    fn div_rat(&self, r: &Rat) -> Self {
        self.mul_rat(&r.recip())
    }
    fn embed_rat(&self, r: &Rat) -> Self;
    /// Canonical text for this coefficient; `parenthesize` reports whether it
    /// needs parentheses when multiplied by a monomial.
    fn coeff_text(&self) -> (String, bool);
}

impl Coeff for Rat {
    fn zero_like(&self) -> Self {
        Rat::zero()
    }

    fn one_like(&self) -> Self {
        Rat::one()
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn add(&self, other: &Self) -> Self {
        self + other
    }

    fn sub(&self, other: &Self) -> Self {
        self - other
    }

    fn mul(&self, other: &Self) -> Self {
        self * other
    }

    fn neg(&self) -> Self {
        -self
    }

    fn mul_rat(&self, r: &Rat) -> Self {
        self * r
    }

    fn embed_rat(&self, r: &Rat) -> Self {
        r.clone()
    }

    fn coeff_text(&self) -> (String, bool) {
        (self.to_string(), false)
    }
}

/// An ordered set of parameter symbols, e.g. `{k, c[y4][1], c[y4][2]}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParamContext {
    symbols: Vec<String>,
}

impl ParamContext {
    pub fn new<S: Into<String>>(symbols: Vec<S>) -> Arc<Self> {
        let symbols: Vec<String> = symbols.into_iter().map(Into::into).collect();
        debug_assert!({
            let mut sorted = symbols.clone();
            sorted.sort();
            sorted.dedup();
            sorted.len() == symbols.len()
        });
        Arc::new(ParamContext { symbols })
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbol(&self, i: usize) -> &str {
        &self.symbols[i]
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.symbols.iter().position(|s| s == name)
    }
}

/// A polynomial with rational coefficients in the symbols of a
/// [`ParamContext`]. Terms are kept sorted in descending tuple-lex order with
/// no zero coefficients and no duplicate exponent vectors.
#[derive(Debug, Clone)]
pub struct ParamPoly {
    ctx: Arc<ParamContext>,
    terms: Vec<(Rat, ExpVec)>,
}

impl PartialEq for ParamPoly {
    fn eq(&self, other: &Self) -> bool {
        *self.ctx == *other.ctx && self.terms == other.terms
    }
}

impl Eq for ParamPoly {}

impl ParamPoly {
    pub fn zero(ctx: Arc<ParamContext>) -> Self {
        ParamPoly { ctx, terms: vec![] }
    }

    pub fn constant(ctx: Arc<ParamContext>, value: Rat) -> Self {
        if Zero::is_zero(&value) {
            return Self::zero(ctx);
        }
        let unit = ExpVec::unit(ctx.len());
        ParamPoly {
            ctx,
            terms: vec![(value, unit)],
        }
    }

    pub fn constant_i64(ctx: Arc<ParamContext>, value: i64) -> Self {
        Self::constant(ctx, Rat::from_integer(BigInt::from(value)))
    }

    /// The symbol with the given index, as a polynomial.
    pub fn symbol(ctx: Arc<ParamContext>, i: usize) -> Self {
        let exp = ExpVec::var(ctx.len(), i);
        ParamPoly {
            ctx,
            terms: vec![(Rat::one(), exp)],
        }
    }

    /// Builds from arbitrary (coefficient, exponents) pairs; merges
    /// duplicates and drops zeros.
    pub fn from_terms(ctx: Arc<ParamContext>, terms: Vec<(Rat, Vec<u16>)>) -> Self {
        let mut raw: Vec<(Rat, ExpVec)> = terms
            .into_iter()
            .map(|(c, e)| {
                assert_eq!(e.len(), ctx.len(), "parameter term arity mismatch");
                (c, ExpVec::new(e))
            })
            .collect();
        raw.sort_by(|a, b| b.1.cmp_tuple(&a.1));
        let mut merged: Vec<(Rat, ExpVec)> = Vec::with_capacity(raw.len());
        for (c, e) in raw {
            match merged.last_mut() {
                Some(last) if last.1 == e => last.0 += c,
                _ => merged.push((c, e)),
            }
        }
        merged.retain(|(c, _)| !Zero::is_zero(c));
        ParamPoly { ctx, terms: merged }
    }

    pub fn ctx(&self) -> &Arc<ParamContext> {
        &self.ctx
    }

    pub fn terms(&self) -> &[(Rat, ExpVec)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// True when the polynomial is a rational constant (possibly zero).
    pub fn as_constant(&self) -> Option<Rat> {
        match self.terms.len() {
            0 => Some(Rat::zero()),
            1 if self.terms[0].1.is_unit() => Some(self.terms[0].0.clone()),
            _ => None,
        }
    }

    fn assert_same_ctx(&self, other: &Self) {
        assert!(
            *self.ctx == *other.ctx,
            "parameter context mismatch in coefficient arithmetic"
        );
    }

    fn merge(&self, other: &Self, negate_other: bool) -> Self {
        self.assert_same_ctx(other);
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (ca, ea) = &self.terms[i];
            let (cb, eb) = &other.terms[j];
            match ea.cmp_tuple(eb) {
                std::cmp::Ordering::Greater => {
                    out.push((ca.clone(), ea.clone()));
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    let c = if negate_other { -cb } else { cb.clone() };
                    out.push((c, eb.clone()));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if negate_other { ca - cb } else { ca + cb };
                    if !Zero::is_zero(&c) {
                        out.push((c, ea.clone()));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        for (c, e) in &self.terms[i..] {
            out.push((c.clone(), e.clone()));
        }
        for (c, e) in &other.terms[j..] {
            let c = if negate_other { -c } else { c.clone() };
            out.push((c, e.clone()));
        }
        ParamPoly {
            ctx: self.ctx.clone(),
            terms: out,
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut result = Self::constant(self.ctx.clone(), Rat::one());
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = Coeff::mul(&result, &base);
            }
            n >>= 1;
            if n > 0 {
                base = Coeff::mul(&base, &base);
            }
        }
        result
    }

    /// Substitutes a rational value for one symbol.
    pub fn eval_symbol(&self, sym: usize, value: &Rat) -> Self {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (c, e) in &self.terms {
            let mut exps = e.exponents().to_vec();
            let power = exps[sym];
            exps[sym] = 0;
            let mut c = c.clone();
            if power > 0 {
                let mut factor = Rat::one();
                for _ in 0..power {
                    factor *= value;
                }
                c *= factor;
            }
            terms.push((c, exps));
        }
        Self::from_terms(self.ctx.clone(), terms)
    }

    /// Substitutes a polynomial value for every symbol at once. `values`
    /// must be aligned with the context symbols and live in the same context.
    pub fn substitute_symbols(&self, values: &[ParamPoly]) -> Self {
        assert_eq!(values.len(), self.ctx.len(), "one value per symbol");
        let mut acc = Self::zero(self.ctx.clone());
        for (c, e) in &self.terms {
            let mut term = Self::constant(self.ctx.clone(), c.clone());
            for (i, &exp) in e.exponents().iter().enumerate() {
                if exp > 0 {
                    term = Coeff::mul(&term, &values[i].pow(exp as u32));
                }
            }
            acc = Coeff::add(&acc, &term);
        }
        acc
    }

    /// Degree in one symbol.
    pub fn degree_in(&self, sym: usize) -> Option<u16> {
        self.terms.iter().map(|(_, e)| e.exp(sym)).max()
    }

    /// The positive rational `s` such that `self / s` has coprime integer
    /// coefficients, together with the sign of the leading coefficient.
    /// Returns `(1, 1)` for the zero polynomial.
    pub fn content_and_sign(&self) -> (Rat, i8) {
        if self.terms.is_empty() {
            return (Rat::one(), 1);
        }
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for (c, _) in &self.terms {
            num_gcd = num_gcd.gcd(&c.numer().abs());
            den_lcm = den_lcm.lcm(c.denom());
        }
        let content = Rat::new(num_gcd, den_lcm);
        let sign = if self.terms[0].0.is_negative() { -1 } else { 1 };
        (content, sign)
    }

    /// Primitive part: integer coprime coefficients, positive leading
    /// coefficient under the canonical term order.
    pub fn primitive(&self) -> (Self, Rat) {
        if self.terms.is_empty() {
            return (self.clone(), Rat::one());
        }
        let (content, sign) = self.content_and_sign();
        let scale = if sign < 0 { -content } else { content };
        let prim = self.mul_rat(&scale.recip());
        (prim, scale)
    }
}

impl Coeff for ParamPoly {
    fn zero_like(&self) -> Self {
        Self::zero(self.ctx.clone())
    }

    fn one_like(&self) -> Self {
        Self::constant(self.ctx.clone(), Rat::one())
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add(&self, other: &Self) -> Self {
        self.merge(other, false)
    }

    fn sub(&self, other: &Self) -> Self {
        self.merge(other, true)
    }

    fn mul(&self, other: &Self) -> Self {
        self.assert_same_ctx(other);
        if self.is_empty() || other.is_empty() {
            return Self::zero(self.ctx.clone());
        }
        let mut raw = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (ca, ea) in &self.terms {
            for (cb, eb) in &other.terms {
                raw.push((ca * cb, ea.times(eb).exponents().to_vec()));
            }
        }
        Self::from_terms(self.ctx.clone(), raw)
    }

    fn neg(&self) -> Self {
        ParamPoly {
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|(c, e)| (-c, e.clone())).collect(),
        }
    }

    fn mul_rat(&self, r: &Rat) -> Self {
        if Zero::is_zero(r) {
            return Self::zero(self.ctx.clone());
        }
        ParamPoly {
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|(c, e)| (c * r, e.clone())).collect(),
        }
    }

    fn embed_rat(&self, r: &Rat) -> Self {
        Self::constant(self.ctx.clone(), r.clone())
    }

    fn coeff_text(&self) -> (String, bool) {
        (self.to_string(), self.terms.len() > 1)
    }
}

impl fmt::Display for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (c, e)) in self.terms.iter().enumerate() {
            let mut factors = Vec::new();
            for (i, &exp) in e.exponents().iter().enumerate() {
                if exp == 1 {
                    factors.push(self.ctx.symbol(i).to_string());
                } else if exp > 1 {
                    factors.push(format!("{}^{}", self.ctx.symbol(i), exp));
                }
            }
            let abs = c.abs();
            let mut body = if factors.is_empty() {
                abs.to_string()
            } else if abs.is_one() {
                factors.join("*")
            } else {
                format!("{}*{}", abs, factors.join("*"))
            };
            if idx == 0 {
                if c.is_negative() {
                    body = format!("-{body}");
                }
                f.write_str(&body)?;
            } else if c.is_negative() {
                write!(f, " - {body}")?;
            } else {
                write!(f, " + {body}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kc() -> Arc<ParamContext> {
        ParamContext::new(vec!["k", "a", "b"])
    }

    fn rat(n: i64) -> Rat {
        Rat::from_integer(BigInt::from(n))
    }

    #[test]
    fn arithmetic_and_display() {
        let ctx = kc();
        let k = ParamPoly::symbol(ctx.clone(), 0);
        let a = ParamPoly::symbol(ctx.clone(), 1);
        let b = ParamPoly::symbol(ctx.clone(), 2);
        // 3*(a + b)^2 = 3a^2 + 6ab + 3b^2
        let sum = Coeff::add(&a, &b);
        let sq = Coeff::mul(&sum, &sum).mul_rat(&rat(3));
        assert_eq!(sq.to_string(), "3*a^2 + 6*a*b + 3*b^2");
        // k^8 - k^8 = 0
        let k8 = k.pow(8);
        assert!(Coeff::sub(&k8, &k8).is_zero());
    }

    #[test]
    fn eval_and_substitute() {
        let ctx = kc();
        let k = ParamPoly::symbol(ctx.clone(), 0);
        let a = ParamPoly::symbol(ctx.clone(), 1);
        // a*k^2 at k = 3 gives 9a.
        let p = Coeff::mul(&a, &k.pow(2));
        let at3 = p.eval_symbol(0, &rat(3));
        assert_eq!(at3.to_string(), "9*a");
        // substitute a := k^4, b := 0, k := k in (a + b*k).
        let b = ParamPoly::symbol(ctx.clone(), 2);
        let expr = Coeff::add(&a, &Coeff::mul(&b, &k));
        let values = vec![k.clone(), k.pow(4), ParamPoly::zero(ctx.clone())];
        assert_eq!(expr.substitute_symbols(&values), k.pow(4));
    }

    #[test]
    fn primitive_normalization() {
        let ctx = kc();
        let a = ParamPoly::symbol(ctx.clone(), 1);
        let p = Coeff::sub(
            &a.pow(2).mul_rat(&Rat::new(BigInt::from(-2), BigInt::from(3))),
            &ParamPoly::constant(ctx.clone(), rat(4)),
        );
        let (prim, scale) = p.primitive();
        assert_eq!(prim.to_string(), "a^2 + 6");
        assert_eq!(p, prim.mul_rat(&scale));
    }
}
