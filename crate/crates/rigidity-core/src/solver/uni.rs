//! Univariate polynomial helpers over the rationals, used by the
//! back-substitution stage. Polynomials are coefficient vectors indexed by
//! degree with no trailing zeros.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::polyring::Rat;

pub type UniPoly = Vec<Rat>;

pub fn trim(mut p: UniPoly) -> UniPoly {
    while matches!(p.last(), Some(c) if Zero::is_zero(c)) {
        p.pop();
    }
    p
}

pub fn degree(p: &UniPoly) -> Option<usize> {
    if p.is_empty() {
        None
    } else {
        Some(p.len() - 1)
    }
}

pub fn eval(p: &UniPoly, x: &Rat) -> Rat {
    let mut acc = Rat::zero();
    for c in p.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

/// Exact division with remainder over the rationals.
pub fn div_rem(a: &UniPoly, b: &UniPoly) -> (UniPoly, UniPoly) {
    assert!(!b.is_empty(), "division by zero polynomial");
    let mut rem = a.clone();
    if rem.len() < b.len() {
        return (vec![], trim(rem));
    }
    let mut quo = vec![Rat::zero(); rem.len() - b.len() + 1];
    let lead = b.last().unwrap().clone();
    for i in (0..quo.len()).rev() {
        let c = &rem[i + b.len() - 1] / &lead;
        if Zero::is_zero(&c) {
            continue;
        }
        for (j, bc) in b.iter().enumerate() {
            let t = bc * &c;
            rem[i + j] -= t;
        }
        quo[i] = c;
    }
    (trim(quo), trim(rem))
}

/// Monic gcd over the rationals (Euclid; degrees here are small).
pub fn gcd(a: &UniPoly, b: &UniPoly) -> UniPoly {
    let mut a = trim(a.clone());
    let mut b = trim(b.clone());
    while !b.is_empty() {
        let (_, r) = div_rem(&a, &b);
        a = b;
        b = r;
    }
    if let Some(lead) = a.last().cloned() {
        for c in &mut a {
            *c /= &lead;
        }
    }
    a
}

/// Divides out `(x - root)`; the root must be exact.
pub fn deflate(p: &UniPoly, root: &Rat) -> UniPoly {
    let divisor = vec![-root.clone(), Rat::one()];
    let (q, r) = div_rem(p, &divisor);
    assert!(r.is_empty(), "deflation by a non-root");
    q
}

/// Clears denominators and content: integer coefficients with gcd 1 and
/// positive leading coefficient.
pub fn primitive_integer(p: &UniPoly) -> Vec<BigInt> {
    if p.is_empty() {
        return vec![];
    }
    let mut den_lcm = BigInt::one();
    for c in p {
        den_lcm = den_lcm.lcm(c.denom());
    }
    let mut ints: Vec<BigInt> = p
        .iter()
        .map(|c| c.numer() * (&den_lcm / c.denom()))
        .collect();
    let mut content = BigInt::zero();
    for c in &ints {
        content = content.gcd(c);
    }
    if ints.last().unwrap().is_negative() {
        content = -content;
    }
    for c in &mut ints {
        *c /= &content;
    }
    ints
}

/// Renders `p` as text in the variable `name`.
pub fn text(p: &UniPoly, name: &str) -> String {
    if p.is_empty() {
        return "0".to_string();
    }
    let mut parts = Vec::new();
    for (deg, c) in p.iter().enumerate().rev() {
        if Zero::is_zero(c) {
            continue;
        }
        let var = match deg {
            0 => String::new(),
            1 => name.to_string(),
            d => format!("{name}^{d}"),
        };
        let abs = c.abs();
        let body = if var.is_empty() {
            abs.to_string()
        } else if abs.is_one() {
            var
        } else {
            format!("{abs}*{var}")
        };
        if parts.is_empty() {
            parts.push(if c.is_negative() {
                format!("-{body}")
            } else {
                body
            });
        } else if c.is_negative() {
            parts.push(format!(" - {body}"));
        } else {
            parts.push(format!(" + {body}"));
        }
    }
    parts.concat()
}
