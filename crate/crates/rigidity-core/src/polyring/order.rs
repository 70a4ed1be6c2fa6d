//! Monomial orders: lex, weighted-graded lex, and weighted-graded revlex,
//! each refined by the context's variable precedence.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use super::context::Ctx;
use super::expvec::ExpVec;
use super::PolyError;

/// The three supported order kinds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderKind {
    /// Pure lexicographic order on precedence-permuted exponents.
    Lex,
    /// Compare total weight first, ties broken lexicographically.
    WGrLex,
    /// Compare total weight first, ties broken by reverse lexicographic
    /// comparison (the monomial with the smaller exponent at the last
    /// differing position is the larger one).
    WGrevLex,
}

impl OrderKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            OrderKind::Lex => "lex",
            OrderKind::WGrLex => "wgrlex",
            OrderKind::WGrevLex => "wgrevlex",
        }
    }
}

impl FromStr for OrderKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "lex" => Ok(OrderKind::Lex),
            "wgrlex" => Ok(OrderKind::WGrLex),
            "wgrevlex" => Ok(OrderKind::WGrevLex),
            other => Err(format!(
                "unknown order `{other}` (expected lex, wgrlex or wgrevlex)"
            )),
        }
    }
}

/// A total, multiplicative, well-founded order on the monomials of a context.
#[derive(Debug, Clone)]
pub struct MonomialOrder {
    kind: OrderKind,
    ctx: Ctx,
}

impl MonomialOrder {
    pub fn new(kind: OrderKind, ctx: Ctx) -> Self {
        MonomialOrder { kind, ctx }
    }

    pub fn lex(ctx: Ctx) -> Self {
        Self::new(OrderKind::Lex, ctx)
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn ctx(&self) -> &Ctx {
        &self.ctx
    }

    /// Checked comparison; errors if either vector has the wrong arity.
    pub fn compare(&self, a: &ExpVec, b: &ExpVec) -> Result<Ordering, PolyError> {
        let want = self.ctx.len();
        for exp in [a, b] {
            if exp.arity() != want {
                return Err(PolyError::ArityMismatch {
                    got: exp.arity(),
                    want,
                });
            }
        }
        Ok(self.cmp(a, b))
    }

    /// Unchecked comparison (arity assumed correct).
    pub fn cmp(&self, a: &ExpVec, b: &ExpVec) -> Ordering {
        match self.kind {
            OrderKind::Lex => self.ctx.cmp_lex(a, b),
            OrderKind::WGrLex => self
                .ctx
                .weight_of(a)
                .cmp(&self.ctx.weight_of(b))
                .then_with(|| self.ctx.cmp_lex(a, b)),
            OrderKind::WGrevLex => self
                .ctx
                .weight_of(a)
                .cmp(&self.ctx.weight_of(b))
                .then_with(|| {
                    for &i in self.ctx.precedence().iter().rev() {
                        if a.exp(i) != b.exp(i) {
                            // Smaller trailing exponent wins the tie.
                            return b.exp(i).cmp(&a.exp(i));
                        }
                    }
                    Ordering::Equal
                }),
        }
    }

    /// Human-readable descriptor, e.g. `lex y1 > y4`.
    pub fn descriptor(&self) -> String {
        format!(
            "{} {}",
            self.kind.as_str(),
            self.ctx.precedence_names().join(" > ")
        )
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.descriptor())
    }
}
