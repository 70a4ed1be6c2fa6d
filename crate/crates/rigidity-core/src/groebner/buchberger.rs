//! Buchberger's algorithm with the normal pair-selection strategy, the
//! product and chain criteria, and an optional weight-truncation mode for
//! homogeneous ideals.

use std::collections::{BTreeSet, HashSet};

use crate::polyring::{ExpVec, MonomialOrder, Polynomial, Rat};

use super::division::normal_form_with_limit;
use super::{weight_of_homogeneous, GroebnerBasis, GroebnerConfig, GroebnerError};

/// The cancellation combination of two nonzero polynomials: both leading
/// terms are scaled onto their least common multiple and subtracted, so the
/// lcm monomial has coefficient zero in the result.
pub fn s_polynomial(
    f: &Polynomial<Rat>,
    g: &Polynomial<Rat>,
    order: &MonomialOrder,
) -> Result<Polynomial<Rat>, GroebnerError> {
    if f.is_zero() || g.is_zero() {
        return Err(GroebnerError::ZeroGenerator);
    }
    if *f.ctx() != *g.ctx() {
        return Err(GroebnerError::ContextMismatch);
    }
    let lt_f = f.leading_term(order).unwrap();
    let lt_g = g.leading_term(order).unwrap();
    let lcm = lt_f.exp.lcm(&lt_g.exp);
    let shift_f = lcm.checked_div(&lt_f.exp).unwrap();
    let shift_g = lcm.checked_div(&lt_g.exp).unwrap();
    let ctx = f.ctx().clone();
    let mono_f = Polynomial::term(ctx.clone(), lt_f.coeff.recip(), shift_f);
    let mono_g = Polynomial::term(ctx, lt_g.coeff.recip(), shift_g);
    Ok(mono_f.mul(f).sub(&mono_g.mul(g)))
}

/// An S-pair queued by (lcm weight, lcm exponents, indices); popping the
/// minimum realizes the normal selection strategy deterministically.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
struct Pair {
    lcm_weight: u64,
    lcm: ExpVec,
    i: usize,
    j: usize,
}

/// Computes the reduced, primitive-normalized Gröbner basis of the ideal
/// generated by `generators` under `order`.
///
/// With `bound = Some(D)` the generators must be weighted-homogeneous of
/// weight `<= D`; S-pairs whose lcm weight exceeds `D` are skipped, which is
/// sound for normal forms of inputs of weight `<= D` because homogeneous
/// division of a weight-`t` element only ever involves elements of weight
/// `<= t`.
pub fn buchberger(
    generators: &[Polynomial<Rat>],
    order: &MonomialOrder,
    bound: Option<u64>,
    config: &GroebnerConfig,
) -> Result<GroebnerBasis, GroebnerError> {
    if generators.is_empty() {
        return Err(GroebnerError::EmptyGenerators);
    }
    let ctx = generators[0].ctx().clone();
    for g in generators {
        if g.is_zero() {
            return Err(GroebnerError::ZeroGenerator);
        }
        if *g.ctx().as_ref() != *ctx.as_ref() {
            return Err(GroebnerError::ContextMismatch);
        }
    }
    if *order.ctx().as_ref() != *ctx.as_ref() {
        return Err(GroebnerError::ContextMismatch);
    }
    if let Some(bound) = bound {
        for g in generators {
            let w = weight_of_homogeneous(g)?;
            if w > bound {
                return Err(GroebnerError::BoundBelowGenerators {
                    bound,
                    required: w,
                });
            }
        }
    }

    let mut basis: Vec<Polynomial<Rat>> = Vec::new();
    for g in generators {
        let (prim, _) = g.primitive_normalized(order);
        if !basis.contains(&prim) {
            basis.push(prim);
        }
    }

    let mut queue: BTreeSet<Pair> = BTreeSet::new();
    let mut treated: HashSet<(usize, usize)> = HashSet::new();
    let enqueue = |queue: &mut BTreeSet<Pair>,
                       basis: &[Polynomial<Rat>],
                       i: usize,
                       j: usize| {
        let lm_i = &basis[i].leading_term(order).unwrap().exp;
        let lm_j = &basis[j].leading_term(order).unwrap().exp;
        let lcm = lm_i.lcm(lm_j);
        queue.insert(Pair {
            lcm_weight: ctx.weight_of(&lcm),
            lcm,
            i,
            j,
        });
    };
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            enqueue(&mut queue, &basis, i, j);
        }
    }

    let mut pairs_examined = 0usize;
    while let Some(pair) = queue.pop_first() {
        pairs_examined += 1;
        if pairs_examined > config.max_pairs {
            return Err(GroebnerError::PairLimit(pairs_examined));
        }
        treated.insert((pair.i, pair.j));

        if let Some(bound) = bound {
            // Homogeneous setting: this S-polynomial has weight > D and can
            // never touch a reduction of weight <= D.
            if pair.lcm_weight > bound {
                continue;
            }
        }
        let lm_i = &basis[pair.i].leading_term(order).unwrap().exp;
        let lm_j = &basis[pair.j].leading_term(order).unwrap().exp;
        // Product criterion: coprime leading monomials reduce to zero.
        if lm_i.coprime(lm_j) {
            continue;
        }
        // Chain criterion: a third element dividing the lcm whose pairs with
        // both ends were already treated makes this pair redundant.
        let chain = (0..basis.len()).any(|k| {
            if k == pair.i || k == pair.j {
                return false;
            }
            let lm_k = &basis[k].leading_term(order).unwrap().exp;
            if !lm_k.divides(&pair.lcm) {
                return false;
            }
            let key_ik = (pair.i.min(k), pair.i.max(k));
            let key_jk = (pair.j.min(k), pair.j.max(k));
            treated.contains(&key_ik) && treated.contains(&key_jk)
        });
        if chain {
            continue;
        }

        let s = s_polynomial(&basis[pair.i], &basis[pair.j], order)?;
        if s.is_zero() {
            continue;
        }
        let reduced =
            normal_form_with_limit(&s, &basis, order, Some(config.max_terms))?.residue;
        if reduced.is_zero() {
            continue;
        }
        let (prim, _) = reduced.primitive_normalized(order);
        basis.push(prim);
        let new_idx = basis.len() - 1;
        for i in 0..new_idx {
            enqueue(&mut queue, &basis, i, new_idx);
        }
    }

    let elements = autoreduce(basis, order, config)?;
    Ok(GroebnerBasis::new(elements, order.clone(), bound))
}

/// Minimalizes (drops elements whose leading monomial is divisible by
/// another's) and tail-reduces until every element is fully reduced against
/// the rest, then normalizes and sorts by descending leading monomial.
fn autoreduce(
    mut basis: Vec<Polynomial<Rat>>,
    order: &MonomialOrder,
    config: &GroebnerConfig,
) -> Result<Vec<Polynomial<Rat>>, GroebnerError> {
    // Minimalize.
    let mut keep: Vec<bool> = vec![true; basis.len()];
    for i in 0..basis.len() {
        if !keep[i] {
            continue;
        }
        let lm_i = basis[i].leading_term(order).unwrap().exp.clone();
        for j in 0..basis.len() {
            if i == j || !keep[j] {
                continue;
            }
            let lm_j = &basis[j].leading_term(order).unwrap().exp;
            if lm_j.divides(&lm_i) && (*lm_j != lm_i || j < i) {
                keep[i] = false;
                break;
            }
        }
    }
    let mut minimal: Vec<Polynomial<Rat>> = basis
        .drain(..)
        .zip(keep)
        .filter_map(|(p, k)| k.then_some(p))
        .collect();

    // Tail-reduce to a fixpoint.
    loop {
        let mut changed = false;
        for i in 0..minimal.len() {
            let others: Vec<Polynomial<Rat>> = minimal
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, p)| p.clone())
                .collect();
            if others.is_empty() {
                break;
            }
            let reduced = normal_form_with_limit(
                &minimal[i],
                &others,
                order,
                Some(config.max_terms),
            )?
            .residue;
            if reduced != minimal[i] {
                // Minimality guarantees the leading term survives.
                debug_assert!(!reduced.is_zero());
                minimal[i] = reduced.primitive_normalized(order).0;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }

    minimal.sort_by(|a, b| {
        let lm_a = &a.leading_term(order).unwrap().exp;
        let lm_b = &b.leading_term(order).unwrap().exp;
        order.cmp(lm_b, lm_a)
    });
    Ok(minimal)
}
