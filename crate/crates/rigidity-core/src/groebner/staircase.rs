//! Standard-monomial counting: the dimension of the quotient ring as a
//! rational vector space, read off the staircase of leading monomials.

use crate::polyring::{ExpVec, MonomialOrder, Polynomial, Rat};

/// Count of monomials divisible by no basis leading monomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StandardCount {
    Finite(u128),
    /// Some variable has no pure power among the leading monomials, so the
    /// staircase is unbounded in that direction.
    Infinite,
}

pub(crate) fn count_standard_monomials(
    elements: &[Polynomial<Rat>],
    order: &MonomialOrder,
) -> StandardCount {
    let ctx = order.ctx();
    let leading: Vec<ExpVec> = elements
        .iter()
        .map(|p| p.leading_term(order).unwrap().exp.clone())
        .collect();

    // A finite staircase needs a pure power of every variable.
    let mut box_bounds = Vec::with_capacity(ctx.len());
    for var in 0..ctx.len() {
        let bound = leading
            .iter()
            .filter(|lm| {
                lm.exponents()
                    .iter()
                    .enumerate()
                    .all(|(i, &e)| i == var || e == 0)
            })
            .map(|lm| lm.exp(var))
            .min();
        match bound {
            Some(b) => box_bounds.push(b),
            None => return StandardCount::Infinite,
        }
    }

    // Standard monomials live strictly inside the box of pure powers.
    let mut count: u128 = 0;
    let mut current = vec![0u16; ctx.len()];
    fn rec(
        bounds: &[u16],
        leading: &[ExpVec],
        i: usize,
        current: &mut Vec<u16>,
        count: &mut u128,
    ) {
        if i == bounds.len() {
            let exp = ExpVec::new(current.clone());
            if !leading.iter().any(|lm| lm.divides(&exp)) {
                *count += 1;
            }
            return;
        }
        for e in 0..bounds[i] {
            current[i] = e;
            rec(bounds, leading, i + 1, current, count);
        }
        current[i] = 0;
    }
    rec(&box_bounds, &leading, 0, &mut current, &mut count);
    StandardCount::Finite(count)
}
