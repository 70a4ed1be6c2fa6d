//! Buchberger's algorithm, multivariate division (normal forms), ideal
//! membership, and standard-monomial counting, with an optional
//! degree-truncation mode for weighted-homogeneous ideals.

mod buchberger;
mod division;
mod staircase;

pub use buchberger::{buchberger, s_polynomial};
pub use division::{normal_form, DivisionResult};
pub use staircase::StandardCount;

use thiserror::Error;

use crate::polyring::{Coeff, MonomialOrder, Polynomial, Rat, WeightedDegree};

/// Resource ceilings for basis computations. Exceeding one is a distinct
/// error, never a wrong answer.
#[derive(Debug, Clone)]
pub struct GroebnerConfig {
    /// Maximum number of S-pairs examined.
    pub max_pairs: usize,
    /// Maximum number of terms in any intermediate polynomial.
    pub max_terms: usize,
}

impl Default for GroebnerConfig {
    fn default() -> Self {
        GroebnerConfig {
            max_pairs: 100_000,
            max_terms: 2_000_000,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroebnerError {
    #[error("generator list is empty")]
    EmptyGenerators,
    #[error("zero polynomial among the generators")]
    ZeroGenerator,
    #[error("zero polynomial among the basis elements")]
    ZeroBasisElement,
    #[error("polynomials live in different variable contexts")]
    ContextMismatch,
    #[error("degree truncation requires weighted-homogeneous generators")]
    NotHomogeneous,
    #[error("truncation bound {bound} is below a generator weight {required}")]
    BoundBelowGenerators { bound: u64, required: u64 },
    #[error("input of weight {weight} exceeds the truncation bound {bound}")]
    TruncationExceeded { bound: u64, weight: u64 },
    #[error("pair ceiling exceeded ({0} pairs)")]
    PairLimit(usize),
    #[error("term ceiling exceeded ({0} terms)")]
    TermLimit(usize),
    #[error("operation requires an untruncated basis")]
    Truncated,
}

/// A reduced, primitive-normalized Gröbner basis under a declared order,
/// optionally truncated at a weight bound `D`: every S-polynomial of weight
/// `<= D` reduces to zero against the elements, so normal forms are correct
/// for all inputs of weight `<= D`.
#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    elements: Vec<Polynomial<Rat>>,
    order: MonomialOrder,
    truncation_bound: Option<u64>,
}

/// Ideal-membership verdict with its witness: the quotients when contained,
/// the nonzero residue otherwise.
#[derive(Debug, Clone)]
pub struct Membership<C: Coeff> {
    pub contained: bool,
    pub witness: DivisionResult<C>,
}

impl GroebnerBasis {
    pub(crate) fn new(
        elements: Vec<Polynomial<Rat>>,
        order: MonomialOrder,
        truncation_bound: Option<u64>,
    ) -> Self {
        GroebnerBasis {
            elements,
            order,
            truncation_bound,
        }
    }

    pub fn elements(&self) -> &[Polynomial<Rat>] {
        &self.elements
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn truncation_bound(&self) -> Option<u64> {
        self.truncation_bound
    }

    /// Largest weight among the terms of `f`.
    fn max_term_weight<C: Coeff>(f: &Polynomial<C>) -> u64 {
        f.terms()
            .iter()
            .map(|t| f.ctx().weight_of(&t.exp))
            .max()
            .unwrap_or(0)
    }

    fn check_bound<C: Coeff>(&self, f: &Polynomial<C>) -> Result<(), GroebnerError> {
        if let Some(bound) = self.truncation_bound {
            let weight = Self::max_term_weight(f);
            if weight > bound {
                return Err(GroebnerError::TruncationExceeded { bound, weight });
            }
        }
        Ok(())
    }

    /// The residue and quotients of `f` against this basis. With a truncated
    /// basis the input weight must not exceed the bound.
    pub fn normal_form<C: Coeff>(
        &self,
        f: &Polynomial<C>,
    ) -> Result<DivisionResult<C>, GroebnerError> {
        self.check_bound(f)?;
        normal_form(f, &self.elements, &self.order)
    }

    /// Lemma-style membership: `f` lies in the ideal iff its residue is zero.
    pub fn ideal_membership<C: Coeff>(
        &self,
        f: &Polynomial<C>,
    ) -> Result<Membership<C>, GroebnerError> {
        let witness = self.normal_form(f)?;
        Ok(Membership {
            contained: witness.residue.is_zero(),
            witness,
        })
    }

    /// Number of monomials divisible by no leading monomial of the basis.
    /// Requires an untruncated basis.
    pub fn standard_monomial_count(&self) -> Result<StandardCount, GroebnerError> {
        if self.truncation_bound.is_some() {
            return Err(GroebnerError::Truncated);
        }
        Ok(staircase::count_standard_monomials(
            &self.elements,
            &self.order,
        ))
    }
}

pub(crate) fn weight_of_homogeneous(
    p: &Polynomial<Rat>,
) -> Result<u64, GroebnerError> {
    match p.weighted_degree() {
        WeightedDegree::Homogeneous(w) => Ok(w),
        WeightedDegree::Zero => Ok(0),
        WeightedDegree::Inhomogeneous => Err(GroebnerError::NotHomogeneous),
    }
}
