//! Variable contexts: named, weighted generators with a precedence order.

use std::fmt;
use std::sync::Arc;

use super::expvec::ExpVec;
use super::PolyError;

/// Shared handle to a [`VariableContext`].
pub type Ctx = Arc<VariableContext>;

/// An ordered set of generator names with positive integer weights and a
/// total precedence order used by monomial comparisons.
///
/// Weights use the halved convention: a generator of cohomological degree
/// `2i` is stored with weight `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VariableContext {
    names: Vec<String>,
    weights: Vec<u32>,
    /// Indices into `names`, highest-precedence variable first.
    precedence: Vec<usize>,
}

impl VariableContext {
    /// Builds a context whose precedence is the declaration order.
    pub fn new<S: Into<String>>(vars: Vec<(S, u32)>) -> Result<Ctx, PolyError> {
        let n = vars.len();
        Self::with_precedence(vars, (0..n).collect())
    }

    /// Builds a context with an explicit precedence permutation
    /// (`precedence[0]` is the index of the largest variable).
    pub fn with_precedence<S: Into<String>>(
        vars: Vec<(S, u32)>,
        precedence: Vec<usize>,
    ) -> Result<Ctx, PolyError> {
        let mut names = Vec::with_capacity(vars.len());
        let mut weights = Vec::with_capacity(vars.len());
        for (name, weight) in vars {
            let name = name.into();
            if names.contains(&name) {
                return Err(PolyError::DuplicateVariable(name));
            }
            if weight == 0 {
                return Err(PolyError::BadWeight(name));
            }
            names.push(name);
            weights.push(weight);
        }
        let mut seen = vec![false; names.len()];
        if precedence.len() != names.len() {
            return Err(PolyError::BadPrecedence);
        }
        for &i in &precedence {
            if i >= names.len() || seen[i] {
                return Err(PolyError::BadPrecedence);
            }
            seen[i] = true;
        }
        Ok(Arc::new(VariableContext {
            names,
            weights,
            precedence,
        }))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn weight(&self, i: usize) -> u32 {
        self.weights[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Variable indices in precedence order, largest first.
    pub fn precedence(&self) -> &[usize] {
        &self.precedence
    }

    /// Variable names in precedence order, largest first.
    pub fn precedence_names(&self) -> Vec<&str> {
        self.precedence.iter().map(|&i| self.name(i)).collect()
    }

    /// Total weight of a monomial in this context.
    pub fn weight_of(&self, exp: &ExpVec) -> u64 {
        debug_assert_eq!(exp.arity(), self.len());
        exp.exponents()
            .iter()
            .zip(&self.weights)
            .map(|(&e, &w)| e as u64 * w as u64)
            .sum()
    }

    /// Lexicographic comparison of exponent vectors under this context's
    /// precedence. Used as the canonical storage order for polynomial terms.
    pub fn cmp_lex(&self, a: &ExpVec, b: &ExpVec) -> std::cmp::Ordering {
        for &i in &self.precedence {
            let ord = a.exp(i).cmp(&b.exp(i));
            if ord != std::cmp::Ordering::Equal {
                return ord;
            }
        }
        std::cmp::Ordering::Equal
    }

    /// Renders a monomial as canonical text, e.g. `y1^4*y4`; the empty
    /// monomial renders as `1`. Factors follow precedence order.
    pub fn monomial_text(&self, exp: &ExpVec) -> String {
        let mut parts = Vec::new();
        for &i in &self.precedence {
            let e = exp.exp(i);
            if e == 1 {
                parts.push(self.name(i).to_string());
            } else if e > 1 {
                parts.push(format!("{}^{}", self.name(i), e));
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

impl fmt::Display for VariableContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vars: Vec<String> = self
            .names
            .iter()
            .zip(&self.weights)
            .map(|(n, w)| format!("{n}:{w}"))
            .collect();
        write!(f, "{{{}}}", vars.join(", "))
    }
}
