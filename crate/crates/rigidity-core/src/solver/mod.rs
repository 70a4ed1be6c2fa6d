//! Solving constraint systems at specialized rational values of `k`:
//! lex Gröbner elimination, back-substitution with exact rational root
//! extraction, and classification of the resulting solution sets.

mod roots;
mod uni;

use num_traits::Zero;

use thiserror::Error;

use crate::endomorph::{adams_family, tau_family, ConstraintSystem, EndomorphismAnsatz};
use crate::groebner::{buchberger, GroebnerConfig, GroebnerError};
use crate::polyring::{Ctx, ExpVec, MonomialOrder, Polynomial, Rat, VariableContext};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
}

/// A constraint system with `k` replaced by a rational, leaving polynomials
/// in the unknown coefficients only. Identically-zero constraints are
/// dropped and the rest are stored primitive.
#[derive(Debug, Clone)]
pub struct SpecializedSystem {
    pres_name: String,
    p: Rat,
    ctx: Ctx,
    polys: Vec<Polynomial<Rat>>,
}

impl SpecializedSystem {
    pub fn presentation_name(&self) -> &str {
        &self.pres_name
    }

    pub fn k_value(&self) -> &Rat {
        &self.p
    }

    pub fn unknowns(&self) -> &[String] {
        self.ctx.names()
    }

    pub fn polys(&self) -> &[Polynomial<Rat>] {
        &self.polys
    }
}

/// Evaluates every constraint at `k = p`.
pub fn specialize(
    system: &ConstraintSystem,
    ansatz: &EndomorphismAnsatz,
    p: &Rat,
) -> SpecializedSystem {
    let unknowns: Vec<(String, u32)> = ansatz
        .unknowns()
        .iter()
        .map(|s| (s.name.clone(), 1))
        .collect();
    let ctx = VariableContext::new(unknowns).unwrap_or_else(|_| {
        // A presentation whose only generator is the Kaehlerian class has no
        // unknowns; model it with a single placeholder the solver never uses.
        VariableContext::new(vec![("_none".to_string(), 1)]).unwrap()
    });
    let has_unknowns = !ansatz.unknowns().is_empty();
    let order = MonomialOrder::lex(ctx.clone());

    let mut polys: Vec<Polynomial<Rat>> = Vec::new();
    for c in system.constraints() {
        let evaluated = c.raw.eval_symbol(0, p);
        if evaluated.is_empty() {
            continue;
        }
        let terms = evaluated
            .terms()
            .iter()
            .map(|(coeff, exp)| {
                // Drop the k column (index 0); it is zero after evaluation.
                debug_assert_eq!(exp.exp(0), 0);
                let rest: Vec<u16> = exp.exponents()[1..].to_vec();
                let rest = if has_unknowns { rest } else { vec![0] };
                (coeff.clone(), ExpVec::new(rest))
            })
            .collect();
        let poly = Polynomial::from_terms(ctx.clone(), terms);
        if poly.is_zero() {
            continue;
        }
        let (prim, _) = poly.primitive_normalized(&order);
        if !polys.contains(&prim) {
            polys.push(prim);
        }
    }

    SpecializedSystem {
        pres_name: system.presentation_name().to_string(),
        p: p.clone(),
        ctx,
        polys,
    }
}

/// The rational solutions of a specialized system along with descriptions of
/// anything the search could not resolve into rational points.
#[derive(Debug, Clone)]
pub struct SolutionReport {
    /// Full assignments, aligned with the unknowns, lexicographically sorted.
    pub points: Vec<Vec<Rat>>,
    /// Unresolved components: positive-dimensional markers, univariate
    /// factors with no rational root, or incomplete divisor enumerations.
    pub residuals: Vec<String>,
}

/// Classification of a solution set against the known families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Classification {
    Adams,
    AdamsOrTau,
    Other,
    Incomplete,
}

impl Classification {
    pub fn as_str(&self) -> &'static str {
        match self {
            Classification::Adams => "adams",
            Classification::AdamsOrTau => "adams_or_tau",
            Classification::Other => "other",
            Classification::Incomplete => "incomplete",
        }
    }
}

impl std::fmt::Display for Classification {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Enumerates all rational solutions: computes a lex Gröbner basis in the
/// unknowns, requires zero-dimensionality (a pure power of every unknown
/// among the leading monomials), back-substitutes from the最 last unknown
/// upward using gcds of the substituted univariate constraints, and
/// re-verifies every completed point against all constraints.
pub fn solve_rational(
    sys: &SpecializedSystem,
    config: &GroebnerConfig,
) -> Result<SolutionReport, SolveError> {
    let n = sys.ctx.len();
    if sys.polys.is_empty() {
        // Every constraint vanished identically.
        return Ok(SolutionReport {
            points: vec![],
            residuals: vec![format!(
                "positive-dimensional: all constraints vanish, {} free unknown(s)",
                n
            )],
        });
    }

    let order = MonomialOrder::lex(sys.ctx.clone());
    let basis = buchberger(&sys.polys, &order, None, config)?;
    let elements = basis.elements();

    // Unit ideal: no solutions at all.
    if elements.iter().any(|p| {
        p.leading_term(&order)
            .map(|t| t.exp.is_unit())
            .unwrap_or(false)
    }) {
        return Ok(SolutionReport {
            points: vec![],
            residuals: vec![],
        });
    }

    // Zero-dimensionality: every unknown needs a pure power among the
    // leading monomials.
    for var in 0..n {
        let has_pure_power = elements.iter().any(|p| {
            let lm = &p.leading_term(&order).unwrap().exp;
            lm.exp(var) > 0
                && lm
                    .exponents()
                    .iter()
                    .enumerate()
                    .all(|(i, &e)| i == var || e == 0)
        });
        if !has_pure_power {
            return Ok(SolutionReport {
                points: vec![],
                residuals: vec![format!(
                    "positive-dimensional: no pure power of `{}` among the leading monomials",
                    sys.ctx.name(var)
                )],
            });
        }
    }

    // Level of each element: the smallest variable index it involves.
    let mut by_level: Vec<Vec<&Polynomial<Rat>>> = vec![Vec::new(); n];
    for p in elements {
        let min_var = (0..n)
            .find(|&v| p.terms().iter().any(|t| t.exp.exp(v) > 0))
            .expect("non-constant basis element");
        by_level[min_var].push(p);
    }

    let mut points: Vec<Vec<Rat>> = Vec::new();
    let mut residuals: Vec<String> = Vec::new();
    let mut assignment: Vec<Option<Rat>> = vec![None; n];
    descend(
        sys,
        &by_level,
        n as isize - 1,
        &mut assignment,
        &mut points,
        &mut residuals,
    );

    // Mandatory soundness re-check: every emitted point must satisfy every
    // constraint exactly.
    points.retain(|point| {
        let ok = sys.polys.iter().all(|p| p.eval(point).is_zero());
        debug_assert!(ok, "candidate point failed re-verification");
        if !ok {
            residuals.push("internal: a candidate point failed re-verification".to_string());
        }
        ok
    });
    points.sort();
    points.dedup();

    Ok(SolutionReport { points, residuals })
}

/// Back-substitution over variable `level` (lex-largest variable is 0, so we
/// walk from `n-1` down to 0 and emit a point at level -1).
fn descend(
    sys: &SpecializedSystem,
    by_level: &[Vec<&Polynomial<Rat>>],
    level: isize,
    assignment: &mut Vec<Option<Rat>>,
    points: &mut Vec<Vec<Rat>>,
    residuals: &mut Vec<String>,
) {
    if level < 0 {
        points.push(
            assignment
                .iter()
                .map(|v| v.clone().expect("complete assignment"))
                .collect(),
        );
        return;
    }
    let var = level as usize;

    // Substitute the fixed tail into every element of this level.
    let mut univariates: Vec<uni::UniPoly> = Vec::new();
    let mut inconsistent = false;
    for p in &by_level[var] {
        let u = substitute_tail(p, var, assignment);
        match uni::degree(&u) {
            None => continue,                  // vanished
            Some(0) => inconsistent = true,    // nonzero constant
            Some(_) => univariates.push(u),
        }
    }
    if inconsistent {
        return;
    }
    if univariates.is_empty() {
        residuals.push(format!(
            "unconstrained `{}` at {}",
            sys.ctx.name(var),
            branch_text(sys, assignment)
        ));
        return;
    }

    let mut g = univariates[0].clone();
    for u in &univariates[1..] {
        g = uni::gcd(&g, u);
    }
    match uni::degree(&g) {
        None => unreachable!("gcd of nonzero polynomials"),
        Some(0) => return, // coprime constraints: no common root
        Some(_) => {}
    }

    let search = roots::rational_roots(&g);
    if !search.complete {
        residuals.push(format!(
            "incomplete root enumeration for `{}` in {} at {}",
            sys.ctx.name(var),
            uni::text(&g, sys.ctx.name(var)),
            branch_text(sys, assignment)
        ));
    }
    if search.remainder_degree > 0 {
        residuals.push(format!(
            "degree-{} factor of {} in `{}` with no rational root at {}",
            search.remainder_degree,
            uni::text(&g, sys.ctx.name(var)),
            sys.ctx.name(var),
            branch_text(sys, assignment)
        ));
    }
    for root in search.roots {
        assignment[var] = Some(root);
        descend(sys, by_level, level - 1, assignment, points, residuals);
        assignment[var] = None;
    }
}

/// Substitutes the already-assigned variables (`> var`) into `p`, producing
/// a univariate polynomial in `var` (all other variables of `p` are beyond
/// `var` by construction of the levels).
fn substitute_tail(
    p: &Polynomial<Rat>,
    var: usize,
    assignment: &[Option<Rat>],
) -> uni::UniPoly {
    let mut coeffs: Vec<Rat> = Vec::new();
    for t in p.terms() {
        let mut value = t.coeff.clone();
        for (i, &e) in t.exp.exponents().iter().enumerate() {
            if i == var || e == 0 {
                continue;
            }
            debug_assert!(i > var, "levels guarantee no smaller variable");
            let v = assignment[i].as_ref().expect("tail variable assigned");
            for _ in 0..e {
                value *= v;
            }
        }
        let deg = t.exp.exp(var) as usize;
        if coeffs.len() <= deg {
            coeffs.resize(deg + 1, Rat::zero());
        }
        coeffs[deg] += value;
    }
    uni::trim(coeffs)
}

fn branch_text(sys: &SpecializedSystem, assignment: &[Option<Rat>]) -> String {
    let parts: Vec<String> = assignment
        .iter()
        .enumerate()
        .filter_map(|(i, v)| v.as_ref().map(|r| format!("{} = {}", sys.ctx.name(i), r)))
        .collect();
    if parts.is_empty() {
        "the top level".to_string()
    } else {
        format!("branch {}", parts.join(", "))
    }
}

/// Compares a verified solution set against the known families: `adams` when
/// it is exactly the Adams specialization, `adams_or_tau` when it is exactly
/// the two printed families (E6_A6), `incomplete` when residuals remain, and
/// `other` with a witness description otherwise.
pub fn classify(
    ansatz: &EndomorphismAnsatz,
    sys: &SpecializedSystem,
    report: &SolutionReport,
) -> (Classification, Option<String>) {
    let p = &sys.p;
    let adams_point = adams_family(ansatz)
        .specialize_k(p)
        .constant_point()
        .expect("specialized family is constant");

    let mut expected = vec![adams_point.clone()];
    if let Ok(tau) = tau_family(ansatz) {
        let tau_point = tau
            .specialize_k(p)
            .constant_point()
            .expect("specialized family is constant");
        if !expected.contains(&tau_point) {
            expected.push(tau_point);
        }
    }
    expected.sort();

    if !report.residuals.is_empty() {
        return (
            Classification::Incomplete,
            Some(report.residuals.join("; ")),
        );
    }

    let points = &report.points;
    if points.len() == 1 && points[0] == adams_point {
        return (Classification::Adams, None);
    }
    if ansatz.presentation().name() == "E6_A6" && *points == expected && expected.len() == 2 {
        return (Classification::AdamsOrTau, None);
    }

    // Build a witness: a point that matches no family, or a missing one.
    let witness = points
        .iter()
        .find(|pt| !expected.contains(pt))
        .map(|pt| format!("unexpected point ({})", point_text(sys, pt)))
        .or_else(|| {
            expected
                .iter()
                .find(|pt| !points.contains(pt))
                .map(|pt| format!("missing expected point ({})", point_text(sys, pt)))
        });
    (Classification::Other, witness)
}

pub fn point_text(sys: &SpecializedSystem, point: &[Rat]) -> String {
    point
        .iter()
        .enumerate()
        .map(|(i, v)| format!("{} = {}", sys.ctx.name(i), v))
        .collect::<Vec<_>>()
        .join(", ")
}
