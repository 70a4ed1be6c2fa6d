//! Exact-arithmetic kernel for computing endomorphisms of the rational
//! cohomology rings of the exceptional Grassmannians.
//!
//! The crate is organized as a small pipeline:
//!
//! * [`polyring`] — sparse multivariate polynomials over exact rationals
//!   (and over a parametric coefficient ring), weighted gradings, monomial
//!   orders.
//! * [`groebner`] — Buchberger's algorithm, multivariate division (normal
//!   forms), ideal membership and standard-monomial counts, with an optional
//!   degree-truncation mode for weighted-homogeneous ideals.
//! * [`presentations`] — the built-in catalog of the eight cohomology-ring
//!   presentations, plus the `.pres` text format with parser and canonical
//!   formatter.
//! * [`endomorph`] — the generic endomorphism ansatz, constraint-system
//!   extraction, and the known coefficient families (Adams operators `psi^p`
//!   and the involution family `tau` on `E6_A6`).
//! * [`solver`] — specialization of constraint systems at rational values of
//!   `k`, rational-solution enumeration via lex elimination, and
//!   classification of solution sets.
//!
//! All values are immutable after construction and all operations are pure
//! functions, so everything here is safe to use from multiple threads.

pub mod endomorph;
pub mod groebner;
pub mod polyring;
pub mod presentations;
pub mod solver;

pub use polyring::{
    monomial_basis, ExpVec, MonomialOrder, OrderKind, ParamContext, ParamPoly, PolyError,
    Polynomial, Rat, VariableContext, WeightedDegree,
};
