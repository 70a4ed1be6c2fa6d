//! Sparse polynomials over a coefficient domain, kept in a canonical sorted
//! form (descending lexicographic order under the context precedence).

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::coeff::{Coeff, ParamContext, ParamPoly, Rat};
use super::context::Ctx;
use super::expvec::ExpVec;
use super::order::MonomialOrder;
use super::PolyError;

/// One monomial with its coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term<C> {
    pub coeff: C,
    pub exp: ExpVec,
}

/// Result of [`Polynomial::weighted_degree`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeightedDegree {
    /// The zero polynomial is homogeneous of every degree.
    Zero,
    Homogeneous(u64),
    Inhomogeneous,
}

impl WeightedDegree {
    /// The degree when homogeneous of a single degree.
    pub fn degree(&self) -> Option<u64> {
        match self {
            WeightedDegree::Homogeneous(w) => Some(*w),
            _ => None,
        }
    }

    /// True for the zero polynomial or a homogeneous one of weight `w`.
    pub fn is_homogeneous_of(&self, w: u64) -> bool {
        matches!(self, WeightedDegree::Zero) || *self == WeightedDegree::Homogeneous(w)
    }
}

/// A sparse multivariate polynomial. Invariants: no zero coefficients, no
/// duplicate exponent vectors, terms sorted strictly descending under the
/// context's canonical lex order.
#[derive(Debug, Clone)]
pub struct Polynomial<C: Coeff> {
    ctx: Ctx,
    terms: Vec<Term<C>>,
}

impl<C: Coeff> PartialEq for Polynomial<C> {
    fn eq(&self, other: &Self) -> bool {
        *self.ctx == *other.ctx && self.terms == other.terms
    }
}

impl<C: Coeff + Eq> Eq for Polynomial<C> {}

impl<C: Coeff> Polynomial<C> {
    pub fn zero(ctx: Ctx) -> Self {
        Polynomial { ctx, terms: vec![] }
    }

    /// A single term `coeff * x^exp`.
    pub fn term(ctx: Ctx, coeff: C, exp: ExpVec) -> Self {
        assert_eq!(exp.arity(), ctx.len(), "term arity mismatch");
        if coeff.is_zero() {
            return Self::zero(ctx);
        }
        Polynomial {
            ctx,
            terms: vec![Term { coeff, exp }],
        }
    }

    /// Builds from arbitrary terms: merges duplicates, drops zeros, sorts.
    pub fn from_terms(ctx: Ctx, terms: Vec<(C, ExpVec)>) -> Self {
        let mut raw: Vec<Term<C>> = terms
            .into_iter()
            .map(|(coeff, exp)| {
                assert_eq!(exp.arity(), ctx.len(), "term arity mismatch");
                Term { coeff, exp }
            })
            .collect();
        raw.sort_by(|a, b| ctx.cmp_lex(&b.exp, &a.exp));
        let mut merged: Vec<Term<C>> = Vec::with_capacity(raw.len());
        for t in raw {
            match merged.last_mut() {
                Some(last) if last.exp == t.exp => last.coeff = last.coeff.add(&t.coeff),
                _ => merged.push(t),
            }
        }
        merged.retain(|t| !t.coeff.is_zero());
        Polynomial { ctx, terms: merged }
    }

    pub fn ctx(&self) -> &Ctx {
        &self.ctx
    }

    pub fn terms(&self) -> &[Term<C>] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// The coefficient of a monomial (zero-like values are never stored, so
    /// `None` means the coefficient is zero).
    pub fn coeff_of(&self, exp: &ExpVec) -> Option<&C> {
        self.terms.iter().find(|t| t.exp == *exp).map(|t| &t.coeff)
    }

    fn guard_ctx(&self, other: &Self) {
        assert!(
            *self.ctx == *other.ctx,
            "polynomial context mismatch: {} vs {}",
            self.ctx,
            other.ctx
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.guard_ctx(other);
        self.merge(other, false)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.guard_ctx(other);
        self.merge(other, true)
    }

    fn merge(&self, other: &Self, negate_other: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let a = &self.terms[i];
            let b = &other.terms[j];
            match self.ctx.cmp_lex(&a.exp, &b.exp) {
                std::cmp::Ordering::Greater => {
                    out.push(a.clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    let coeff = if negate_other {
                        b.coeff.neg()
                    } else {
                        b.coeff.clone()
                    };
                    out.push(Term {
                        coeff,
                        exp: b.exp.clone(),
                    });
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let coeff = if negate_other {
                        a.coeff.sub(&b.coeff)
                    } else {
                        a.coeff.add(&b.coeff)
                    };
                    if !coeff.is_zero() {
                        out.push(Term {
                            coeff,
                            exp: a.exp.clone(),
                        });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        for b in &other.terms[j..] {
            let coeff = if negate_other {
                b.coeff.neg()
            } else {
                b.coeff.clone()
            };
            out.push(Term {
                coeff,
                exp: b.exp.clone(),
            });
        }
        Polynomial {
            ctx: self.ctx.clone(),
            terms: out,
        }
    }

    pub fn neg(&self) -> Self {
        Polynomial {
            ctx: self.ctx.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: t.coeff.neg(),
                    exp: t.exp.clone(),
                })
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.guard_ctx(other);
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.ctx.clone());
        }
        let mut raw = Vec::with_capacity(self.terms.len() * other.terms.len());
        for a in &self.terms {
            for b in &other.terms {
                raw.push((a.coeff.mul(&b.coeff), a.exp.times(&b.exp)));
            }
        }
        Self::from_terms(self.ctx.clone(), raw)
    }

    /// Integer power, `n >= 0`. `0^0 = 1`, so the zero polynomial needs a
    /// positive exponent unless the coefficient domain is prototyped by an
    /// existing term.
    pub fn pow(&self, n: u32) -> Self {
        if n == 0 {
            let one = self
                .terms
                .first()
                .map(|t| t.coeff.one_like())
                .unwrap_or_else(|| panic!("cannot form x^0 for a zero polynomial without a coefficient prototype"));
            return Self::term(self.ctx.clone(), one, ExpVec::unit(self.ctx.len()));
        }
        let mut result = self.clone();
        for _ in 1..n {
            result = result.mul(self);
        }
        result
    }

    /// Scalar multiple by a rational.
    pub fn scale(&self, r: &Rat) -> Self {
        if Zero::is_zero(r) {
            return Self::zero(self.ctx.clone());
        }
        Polynomial {
            ctx: self.ctx.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: t.coeff.mul_rat(r),
                    exp: t.exp.clone(),
                })
                .collect(),
        }
    }

    /// The total weight when every term has the same one.
    pub fn weighted_degree(&self) -> WeightedDegree {
        let mut it = self.terms.iter();
        let first = match it.next() {
            None => return WeightedDegree::Zero,
            Some(t) => self.ctx.weight_of(&t.exp),
        };
        for t in it {
            if self.ctx.weight_of(&t.exp) != first {
                return WeightedDegree::Inhomogeneous;
            }
        }
        WeightedDegree::Homogeneous(first)
    }

    /// Leading term under an arbitrary monomial order.
    pub fn leading_term(&self, order: &MonomialOrder) -> Option<&Term<C>> {
        self.terms
            .iter()
            .max_by(|a, b| order.cmp(&a.exp, &b.exp))
    }

    /// Terms sorted descending under an arbitrary order.
    pub fn sorted_terms(&self, order: &MonomialOrder) -> Vec<Term<C>> {
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| order.cmp(&b.exp, &a.exp));
        terms
    }

    /// Applies the ring homomorphism sending each generator to its image.
    /// Images must share a common context (which may differ from `self`'s).
    pub fn substitute(&self, images: &[Polynomial<C>]) -> Result<Polynomial<C>, PolyError> {
        if images.len() != self.ctx.len() {
            return Err(PolyError::ArityMismatch {
                got: images.len(),
                want: self.ctx.len(),
            });
        }
        let target_ctx = match images.first() {
            Some(p) => p.ctx.clone(),
            None => self.ctx.clone(), // zero-variable ring
        };
        for img in images {
            if *img.ctx != *target_ctx {
                return Err(PolyError::ContextMismatch);
            }
        }
        // Memoized powers of each image.
        let mut powers: Vec<HashMap<u16, Polynomial<C>>> = vec![HashMap::new(); images.len()];
        let mut acc = Polynomial::zero(target_ctx.clone());
        for t in &self.terms {
            let mut term_poly: Option<Polynomial<C>> = None;
            for (i, &e) in t.exp.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let p = powers[i]
                    .entry(e)
                    .or_insert_with(|| images[i].pow(e as u32))
                    .clone();
                term_poly = Some(match term_poly {
                    None => p,
                    Some(q) => q.mul(&p),
                });
            }
            let contribution = match term_poly {
                None => Polynomial::term(
                    target_ctx.clone(),
                    t.coeff.clone(),
                    ExpVec::unit(target_ctx.len()),
                ),
                Some(p) => Polynomial {
                    ctx: p.ctx.clone(),
                    terms: p
                        .terms
                        .into_iter()
                        .map(|u| Term {
                            coeff: u.coeff.mul(&t.coeff),
                            exp: u.exp,
                        })
                        .filter(|u| !u.coeff.is_zero())
                        .collect(),
                },
            };
            acc = acc.add(&contribution);
        }
        Ok(acc)
    }

    /// Like [`Self::substitute`] but with images keyed by generator name;
    /// every generator must receive an image.
    pub fn substitute_named(
        &self,
        images: &[(&str, Polynomial<C>)],
    ) -> Result<Polynomial<C>, PolyError> {
        let mut aligned = Vec::with_capacity(self.ctx.len());
        for i in 0..self.ctx.len() {
            let name = self.ctx.name(i);
            match images.iter().find(|(n, _)| *n == name) {
                Some((_, p)) => aligned.push(p.clone()),
                None => return Err(PolyError::MissingImage(name.to_string())),
            }
        }
        self.substitute(&aligned)
    }

    /// Maps coefficients into another domain.
    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> Polynomial<D> {
        Polynomial {
            ctx: self.ctx.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: f(&t.coeff),
                    exp: t.exp.clone(),
                })
                .filter(|t| !t.coeff.is_zero())
                .collect(),
        }
    }

    /// Renders terms descending under the given order (the canonical text
    /// uses the storage order; pass a weighted order for graded output).
    pub fn text_with_order(&self, order: &MonomialOrder) -> String {
        let terms = self.sorted_terms(order);
        render_terms(&self.ctx, &terms)
    }
}

impl Polynomial<Rat> {
    /// Constant polynomial.
    pub fn constant(ctx: Ctx, value: Rat) -> Self {
        let unit = ExpVec::unit(ctx.len());
        Self::term(ctx, value, unit)
    }

    pub fn constant_i64(ctx: Ctx, value: i64) -> Self {
        Self::constant(ctx, Rat::from_integer(BigInt::from(value)))
    }

    /// The generator with index `i`.
    pub fn var(ctx: Ctx, i: usize) -> Self {
        let exp = ExpVec::var(ctx.len(), i);
        Self::term(ctx, Rat::one(), exp)
    }

    /// Content and sign of the leading coefficient under `order`: the unique
    /// positive rational `c` and sign `s` with `self = (s*c) * primitive`.
    pub fn content_and_sign(&self, order: &MonomialOrder) -> (Rat, i8) {
        if self.terms.is_empty() {
            return (Rat::one(), 1);
        }
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for t in &self.terms {
            num_gcd = num_gcd.gcd(&t.coeff.numer().abs());
            den_lcm = den_lcm.lcm(t.coeff.denom());
        }
        let lead = self.leading_term(order).unwrap();
        let sign = if lead.coeff.is_negative() { -1 } else { 1 };
        (Rat::new(num_gcd, den_lcm), sign)
    }

    /// Primitive form: a positive rational multiple of `self` with coprime
    /// integer coefficients and positive leading coefficient under `order`.
    /// The zero polynomial is returned unchanged with scale 1.
    pub fn primitive_normalized(&self, order: &MonomialOrder) -> (Self, Rat) {
        if self.is_zero() {
            return (self.clone(), Rat::one());
        }
        let (content, sign) = self.content_and_sign(order);
        let scale = if sign < 0 { -content } else { content };
        (self.scale(&scale.recip()), scale)
    }

    /// Primitive form under the canonical lex order.
    pub fn normalize_primitive(&self) -> Self {
        self.primitive_normalized(&MonomialOrder::lex(self.ctx.clone()))
            .0
    }

    /// Evaluates at a rational point (one value per generator).
    pub fn eval(&self, values: &[Rat]) -> Rat {
        assert_eq!(values.len(), self.ctx.len());
        let mut acc = Rat::zero();
        for t in &self.terms {
            let mut v = t.coeff.clone();
            for (i, &e) in t.exp.exponents().iter().enumerate() {
                for _ in 0..e {
                    v *= &values[i];
                }
            }
            acc += v;
        }
        acc
    }

    /// Converts into a polynomial with parametric coefficients.
    pub fn to_parametric(&self, pctx: &std::sync::Arc<ParamContext>) -> Polynomial<ParamPoly> {
        self.map_coeffs(|c| ParamPoly::constant(pctx.clone(), c.clone()))
    }
}

/// All exponent vectors of total weight `r`, in descending lexicographic
/// order on the raw tuples (so for weight 4 over `{y1:1, y3:3, y4:4}` the
/// list is `y1^4, y1*y3, y4`).
pub fn monomial_basis(ctx: &Ctx, r: u64) -> Vec<ExpVec> {
    let mut out = Vec::new();
    let mut current = vec![0u16; ctx.len()];
    fn rec(ctx: &Ctx, i: usize, remaining: u64, current: &mut Vec<u16>, out: &mut Vec<ExpVec>) {
        if i == ctx.len() {
            if remaining == 0 {
                out.push(ExpVec::new(current.clone()));
            }
            return;
        }
        let w = ctx.weight(i) as u64;
        let max = (remaining / w).min(u16::MAX as u64) as u16;
        for e in (0..=max).rev() {
            current[i] = e;
            rec(ctx, i + 1, remaining - e as u64 * w, current, out);
        }
        current[i] = 0;
    }
    rec(ctx, 0, r, &mut current, &mut out);
    out
}

fn render_terms<C: Coeff>(ctx: &Ctx, terms: &[Term<C>]) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (idx, t) in terms.iter().enumerate() {
        let (text, needs_parens) = t.coeff.coeff_text();
        let (sign_is_minus, mut body) = match text.strip_prefix('-') {
            Some(rest) if !needs_parens => (true, rest.to_string()),
            _ => (false, text),
        };
        if needs_parens {
            body = format!("({body})");
        }
        let monomial = ctx.monomial_text(&t.exp);
        let piece = if t.exp.is_unit() {
            body
        } else if body == "1" {
            monomial
        } else {
            format!("{body}*{monomial}")
        };
        if idx == 0 {
            if sign_is_minus {
                out.push('-');
            }
            out.push_str(&piece);
        } else if sign_is_minus {
            out.push_str(" - ");
            out.push_str(&piece);
        } else {
            out.push_str(" + ");
            out.push_str(&piece);
        }
    }
    out
}

impl<C: Coeff> fmt::Display for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_terms(&self.ctx, &self.terms))
    }
}
