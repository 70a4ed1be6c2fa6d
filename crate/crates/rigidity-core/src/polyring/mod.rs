//! Sparse multivariate polynomial arithmetic over exact rationals and over a
//! parametric coefficient ring, with weighted gradings and monomial orders.

mod coeff;
mod context;
mod expvec;
mod order;
mod poly;
pub mod text;

pub use coeff::{Coeff, ParamContext, ParamPoly, Rat};
pub use context::{Ctx, VariableContext};
pub use expvec::ExpVec;
pub use order::{MonomialOrder, OrderKind};
pub use poly::{monomial_basis, Polynomial, Term, WeightedDegree};

use thiserror::Error;

/// Errors raised by polynomial-level operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("variable names must be unique: `{0}` declared twice")]
    DuplicateVariable(String),
    #[error("variable `{0}` must have weight >= 1")]
    BadWeight(String),
    #[error("precedence must be a permutation of the declared variables")]
    BadPrecedence,
    #[error("exponent vector has arity {got}, context has {want} variables")]
    ArityMismatch { got: usize, want: usize },
    #[error("operands live in different variable contexts")]
    ContextMismatch,
    #[error("no image supplied for generator `{0}`")]
    MissingImage(String),
    #[error("exponent {0} does not fit in the exponent type")]
    ExponentOverflow(u64),
}
