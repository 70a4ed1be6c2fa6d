//! Multivariate division: the unique residue (normal form) of a polynomial
//! against a list of divisors under a monomial order.
//!
//! Divisor leading coefficients are rational, hence invertible, so the
//! dividend may carry parametric coefficients.

use crate::polyring::{Coeff, ExpVec, MonomialOrder, Polynomial, Rat, Term};

use super::GroebnerError;

/// Quotients and residue with `input = sum(quotient_i * basis_i) + residue`.
#[derive(Debug, Clone)]
pub struct DivisionResult<C: Coeff> {
    pub residue: Polynomial<C>,
    pub quotients: Vec<Polynomial<C>>,
}

impl<C: Coeff> DivisionResult<C> {
    /// Re-expands `sum(quotient_i * basis_i) + residue`.
    pub fn reexpand(&self, basis: &[Polynomial<Rat>]) -> Polynomial<C> {
        let mut acc = self.residue.clone();
        for (q, b) in self.quotients.iter().zip(basis) {
            if q.is_zero() {
                continue;
            }
            let b_in_c = b.map_coeffs(|r| {
                q.terms()[0].coeff.embed_rat(r)
            });
            acc = acc.add(&q.mul(&b_in_c));
        }
        acc
    }
}

/// A divisor prepared for repeated reduction: leading exponent, inverse
/// leading coefficient, and all terms sorted descending under the order.
struct Divisor {
    lead_exp: ExpVec,
    lead_coeff_inv: Rat,
    terms: Vec<Term<Rat>>,
}

/// Computes the normal form of `f` against `basis` under `order`, walking
/// the current leading term and reducing by the first divisor whose leading
/// monomial divides it.
pub fn normal_form<C: Coeff>(
    f: &Polynomial<C>,
    basis: &[Polynomial<Rat>],
    order: &MonomialOrder,
) -> Result<DivisionResult<C>, GroebnerError> {
    normal_form_with_limit(f, basis, order, None)
}

pub(crate) fn normal_form_with_limit<C: Coeff>(
    f: &Polynomial<C>,
    basis: &[Polynomial<Rat>],
    order: &MonomialOrder,
    max_terms: Option<usize>,
) -> Result<DivisionResult<C>, GroebnerError> {
    for b in basis {
        if b.is_zero() {
            return Err(GroebnerError::ZeroBasisElement);
        }
        if *b.ctx() != *f.ctx() {
            return Err(GroebnerError::ContextMismatch);
        }
    }
    if *order.ctx().as_ref() != *f.ctx().as_ref() {
        return Err(GroebnerError::ContextMismatch);
    }

    let divisors: Vec<Divisor> = basis
        .iter()
        .map(|b| {
            let terms = b.sorted_terms(order);
            let lead = &terms[0];
            Divisor {
                lead_exp: lead.exp.clone(),
                lead_coeff_inv: lead.coeff.recip(),
                terms,
            }
        })
        .collect();

    let mut work: Vec<Term<C>> = f.sorted_terms(order);
    let mut residue: Vec<Term<C>> = Vec::new();
    let mut quotients: Vec<Vec<Term<C>>> = vec![Vec::new(); basis.len()];

    while let Some(lead) = work.first().cloned() {
        match divisors
            .iter()
            .position(|d| d.lead_exp.divides(&lead.exp))
        {
            Some(i) => {
                let d = &divisors[i];
                let shift = lead.exp.checked_div(&d.lead_exp).unwrap();
                let q = lead.coeff.mul_rat(&d.lead_coeff_inv);
                // Subtract q * x^shift * divisor; the leading term cancels.
                let subtrahend: Vec<Term<C>> = d
                    .terms
                    .iter()
                    .map(|t| Term {
                        coeff: q.mul_rat(&t.coeff),
                        exp: t.exp.times(&shift),
                    })
                    .collect();
                work = merge_sub(work, &subtrahend, order);
                debug_assert!(
                    work.first().map(|t| order.cmp(&t.exp, &lead.exp) == std::cmp::Ordering::Less)
                        .unwrap_or(true),
                    "leading term failed to cancel"
                );
                quotients[i].push(Term {
                    coeff: q,
                    exp: shift,
                });
            }
            None => {
                residue.push(work.remove(0));
            }
        }
        if let Some(limit) = max_terms {
            if work.len() > limit {
                return Err(GroebnerError::TermLimit(work.len()));
            }
        }
    }

    let ctx = f.ctx().clone();
    Ok(DivisionResult {
        residue: Polynomial::from_terms(
            ctx.clone(),
            residue.into_iter().map(|t| (t.coeff, t.exp)).collect(),
        ),
        quotients: quotients
            .into_iter()
            .map(|terms| {
                Polynomial::from_terms(
                    ctx.clone(),
                    terms.into_iter().map(|t| (t.coeff, t.exp)).collect(),
                )
            })
            .collect(),
    })
}

/// Merges two descending-sorted term lists as `a - b`.
fn merge_sub<C: Coeff>(
    a: Vec<Term<C>>,
    b: &[Term<C>],
    order: &MonomialOrder,
) -> Vec<Term<C>> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match order.cmp(&a[i].exp, &b[j].exp) {
            std::cmp::Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            std::cmp::Ordering::Less => {
                out.push(Term {
                    coeff: b[j].coeff.neg(),
                    exp: b[j].exp.clone(),
                });
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                let coeff = a[i].coeff.sub(&b[j].coeff);
                if !coeff.is_zero() {
                    out.push(Term {
                        coeff,
                        exp: a[i].exp.clone(),
                    });
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    for t in &b[j..] {
        out.push(Term {
            coeff: t.coeff.neg(),
            exp: t.exp.clone(),
        });
    }
    out
}
