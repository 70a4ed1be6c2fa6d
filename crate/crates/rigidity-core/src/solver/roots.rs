//! Rational-root extraction for integer univariate polynomials via the
//! rational-root theorem: candidate roots `p/q` have `p` dividing the
//! constant term and `q` dividing the leading coefficient. Divisor
//! enumeration uses trial division plus Miller-Rabin/Pollard-rho; when a
//! cofactor resists factoring, the search reports itself incomplete rather
//! than returning a wrong answer.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::polyring::Rat;

use super::uni::{self, UniPoly};

/// Outcome of a rational-root search.
#[derive(Debug, Clone)]
pub struct RootSearch {
    /// Distinct rational roots, ascending.
    pub roots: Vec<Rat>,
    /// Degree left after dividing out every rational root (counting
    /// multiplicity); a positive value marks a factor with no rational root.
    pub remainder_degree: usize,
    /// False when divisor enumeration could not be completed.
    pub complete: bool,
}

const TRIAL_DIVISION_BOUND: u64 = 100_000;
const MAX_CANDIDATES: usize = 500_000;
const RHO_ROUNDS: usize = 64;

/// Finds all rational roots of a nonzero rational polynomial.
pub fn rational_roots(p: &UniPoly) -> RootSearch {
    let p = uni::trim(p.clone());
    assert!(!p.is_empty(), "root search on the zero polynomial");
    if p.len() == 1 {
        return RootSearch {
            roots: vec![],
            remainder_degree: 0,
            complete: true,
        };
    }

    let ints = uni::primitive_integer(&p);
    // Factor out x^m.
    let zero_mult = ints.iter().take_while(|c| c.is_zero()).count();
    let reduced: Vec<BigInt> = ints[zero_mult..].to_vec();
    let mut roots: Vec<Rat> = Vec::new();
    if zero_mult > 0 {
        roots.push(Rat::zero());
    }
    if reduced.len() == 1 {
        return RootSearch {
            roots,
            remainder_degree: 0,
            complete: true,
        };
    }

    let c0 = reduced.first().unwrap().abs();
    let cd = reduced.last().unwrap().abs();
    let (c0_divs, c0_complete) = divisors(&c0);
    let (cd_divs, cd_complete) = divisors(&cd);
    let complete = c0_complete && cd_complete
        && c0_divs.len().saturating_mul(cd_divs.len()) <= MAX_CANDIDATES;

    let rational: UniPoly = reduced.iter().map(|c| Rat::from_integer(c.clone())).collect();
    if c0_divs.len().saturating_mul(cd_divs.len()) <= MAX_CANDIDATES {
        for num in &c0_divs {
            for den in &cd_divs {
                if num.gcd(den) != BigInt::one() {
                    continue;
                }
                for candidate in [
                    Rat::new(num.clone(), den.clone()),
                    Rat::new(-num.clone(), den.clone()),
                ] {
                    if uni::eval(&rational, &candidate).is_zero() && !roots.contains(&candidate) {
                        roots.push(candidate);
                    }
                }
            }
        }
    }

    // Divide out every found root with multiplicity.
    let mut deflated = rational;
    for r in &roots {
        if r.is_zero() {
            continue; // already stripped
        }
        while deflated.len() > 1 && uni::eval(&deflated, r).is_zero() {
            deflated = uni::deflate(&deflated, r);
        }
    }

    roots.sort();
    RootSearch {
        roots,
        remainder_degree: deflated.len().saturating_sub(1),
        complete,
    }
}

/// All positive divisors of `n > 0`. The flag is false when a cofactor
/// resisted factoring (the returned list then only covers the factored
/// part).
fn divisors(n: &BigInt) -> (Vec<BigInt>, bool) {
    if n.is_one() {
        return (vec![BigInt::one()], true);
    }
    let (factors, complete) = factorize(n.clone());
    let mut divs = vec![BigInt::one()];
    for (prime, mult) in factors {
        let mut extended = Vec::with_capacity(divs.len() * (mult as usize + 1));
        for d in &divs {
            let mut power = BigInt::one();
            for _ in 0..=mult {
                extended.push(d * &power);
                power *= &prime;
            }
        }
        divs = extended;
        if divs.len() > MAX_CANDIDATES {
            return (divs, false);
        }
    }
    (divs, complete)
}

/// Trial division up to a fixed bound, then Miller-Rabin plus Pollard rho.
fn factorize(mut n: BigInt) -> (BTreeMap<BigInt, u32>, bool) {
    let mut factors: BTreeMap<BigInt, u32> = BTreeMap::new();
    let mut complete = true;
    debug_assert!(n.is_positive());

    for small in std::iter::once(2u64).chain((3..TRIAL_DIVISION_BOUND).step_by(2)) {
        let p = BigInt::from(small);
        if &p * &p > n {
            break;
        }
        while n.is_multiple_of(&p) {
            *factors.entry(p.clone()).or_insert(0) += 1;
            n /= &p;
        }
        if n.is_one() {
            break;
        }
    }
    if n.is_one() {
        return (factors, complete);
    }

    let mut stack = vec![n];
    while let Some(m) = stack.pop() {
        if m.is_one() {
            continue;
        }
        if is_probable_prime(&m) {
            *factors.entry(m).or_insert(0) += 1;
            continue;
        }
        match pollard_rho(&m) {
            Some(d) => {
                stack.push(&m / &d);
                stack.push(d);
            }
            None => {
                // Give up on this cofactor; record incompleteness.
                complete = false;
            }
        }
    }
    (factors, complete)
}

/// Miller-Rabin with a fixed base set, deterministic far beyond the sizes
/// arising here.
fn is_probable_prime(n: &BigInt) -> bool {
    let two = BigInt::from(2);
    if n < &two {
        return false;
    }
    for base in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let b = BigInt::from(base);
        if &b >= n {
            return true;
        }
        if n.is_multiple_of(&b) {
            return false;
        }
    }
    let n_minus_1: BigInt = n - 1;
    let trailing = n_minus_1.trailing_zeros().unwrap_or(0);
    let odd = &n_minus_1 >> trailing;
    'bases: for base in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = BigInt::from(base).modpow(&odd, n);
        if x.is_one() || x == n_minus_1 {
            continue;
        }
        for _ in 1..trailing {
            x = x.modpow(&two, n);
            if x == n_minus_1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

/// Brent-style Pollard rho with deterministic parameters.
fn pollard_rho(n: &BigInt) -> Option<BigInt> {
    if n.is_multiple_of(&BigInt::from(2)) {
        return Some(BigInt::from(2));
    }
    for round in 0..RHO_ROUNDS {
        let c = BigInt::from(round as u64 * 2 + 1);
        let mut x = BigInt::from(round as u64 + 2);
        let mut y = x.clone();
        let mut d = BigInt::one();
        let step = |v: &BigInt| (v * v + &c) % n;
        let mut iterations = 0u64;
        while d.is_one() && iterations < 1_000_000 {
            x = step(&x);
            y = step(&step(&y));
            let diff = (&x - &y).abs();
            if diff.is_zero() {
                break;
            }
            d = diff.gcd(n);
            iterations += 1;
        }
        if !d.is_one() && !d.is_zero() && &d != n {
            return Some(d);
        }
    }
    None
}
