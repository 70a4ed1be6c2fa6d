//! Exponent vectors for sparse monomials.

use std::cmp::Ordering;

/// A dense vector of non-negative exponents, one per context variable.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExpVec(Vec<u16>);

impl ExpVec {
    pub fn new(exps: Vec<u16>) -> Self {
        ExpVec(exps)
    }

    /// The unit monomial (all exponents zero).
    pub fn unit(arity: usize) -> Self {
        ExpVec(vec![0; arity])
    }

    /// The monomial `x_i`.
    pub fn var(arity: usize, i: usize) -> Self {
        let mut e = vec![0; arity];
        e[i] = 1;
        ExpVec(e)
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn exp(&self, i: usize) -> u16 {
        self.0[i]
    }

    pub fn exponents(&self) -> &[u16] {
        &self.0
    }

    pub fn is_unit(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Product of monomials (componentwise sum).
    pub fn times(&self, other: &ExpVec) -> ExpVec {
        debug_assert_eq!(self.arity(), other.arity());
        ExpVec(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| a.checked_add(b).expect("exponent overflow"))
                .collect(),
        )
    }

    /// `self / other` when `other` divides `self`.
    pub fn checked_div(&self, other: &ExpVec) -> Option<ExpVec> {
        debug_assert_eq!(self.arity(), other.arity());
        let mut out = Vec::with_capacity(self.0.len());
        for (&a, &b) in self.0.iter().zip(&other.0) {
            if a < b {
                return None;
            }
            out.push(a - b);
        }
        Some(ExpVec(out))
    }

    pub fn divides(&self, other: &ExpVec) -> bool {
        debug_assert_eq!(self.arity(), other.arity());
        self.0.iter().zip(&other.0).all(|(&a, &b)| a <= b)
    }

    pub fn lcm(&self, other: &ExpVec) -> ExpVec {
        debug_assert_eq!(self.arity(), other.arity());
        ExpVec(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        )
    }

    /// True when the monomials share no variable.
    pub fn coprime(&self, other: &ExpVec) -> bool {
        self.0.iter().zip(&other.0).all(|(&a, &b)| a == 0 || b == 0)
    }

    /// Plain lexicographic comparison on the raw tuple (declaration order).
    pub fn cmp_tuple(&self, other: &ExpVec) -> Ordering {
        self.0.cmp(&other.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn division_and_lcm() {
        let a = ExpVec::new(vec![4, 2]);
        let b = ExpVec::new(vec![1, 2]);
        assert_eq!(a.checked_div(&b), Some(ExpVec::new(vec![3, 0])));
        assert_eq!(b.checked_div(&a), None);
        assert_eq!(a.lcm(&b), ExpVec::new(vec![4, 2]));
        assert!(b.divides(&a));
        assert!(!a.divides(&b));
    }

    #[test]
    fn coprime_detection() {
        let a = ExpVec::new(vec![3, 0]);
        let b = ExpVec::new(vec![0, 2]);
        assert!(a.coprime(&b));
        assert!(!a.coprime(&a));
        assert!(ExpVec::unit(2).coprime(&a));
    }
}
