//! The general ring-endomorphism ansatz, residue-based constraint
//! extraction, and the known coefficient families.
//!
//! An endomorphism sending the Kaehlerian generator to `k` times itself must
//! send each weight-`i` generator to a combination of the weight-`i`
//! monomials. Substituting those images into every relation and reducing
//! against a Gröbner basis of the relation ideal yields residues whose
//! monomial coefficients are the polynomial constraints the unknown
//! coefficients must satisfy.

mod family;

pub use family::{format_family, parse_family, FamilyParseError};

use std::sync::Arc;

use thiserror::Error;

use crate::groebner::{GroebnerBasis, GroebnerError};
use crate::polyring::{
    monomial_basis, Coeff, ExpVec, ParamContext, ParamPoly, PolyError, Polynomial, Rat,
};
use crate::presentations::RingPresentation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EndomorphError {
    #[error("ansatz, basis and presentation must agree")]
    PresentationMismatch,
    #[error("truncation bound {bound} is below the maximum relation weight {required}")]
    TruncationTooLow { bound: u64, required: u64 },
    #[error("no value assigned for symbol `{0}`")]
    UnassignedSymbol(String),
    #[error("value for `{0}` must be a polynomial in k alone")]
    NotPolynomialInK(String),
    #[error("the tau family exists only for E6_A6")]
    NoTauFamily,
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// One unknown coefficient `c[gen][idx]` attached to a weight-`i` monomial,
/// or the distinguished parameter `k` (always symbol index 0).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnsatzSymbol {
    pub name: String,
    /// Generator whose image this coefficient belongs to.
    pub generator: usize,
    /// Position in the monomial basis of the generator's weight (0-based).
    pub basis_index: usize,
    /// The monomial this coefficient multiplies.
    pub monomial: ExpVec,
}

/// The generic endomorphism ansatz for a presentation: a parameter context,
/// one symbol per unknown coefficient, and the symbolic generator images.
#[derive(Debug, Clone)]
pub struct EndomorphismAnsatz {
    pres: RingPresentation,
    param_ctx: Arc<ParamContext>,
    symbols: Vec<AnsatzSymbol>,
    images: Vec<Polynomial<ParamPoly>>,
}

impl EndomorphismAnsatz {
    pub fn presentation(&self) -> &RingPresentation {
        &self.pres
    }

    pub fn param_ctx(&self) -> &Arc<ParamContext> {
        &self.param_ctx
    }

    /// All symbols; index 0 is `k`.
    pub fn symbols(&self) -> &[AnsatzSymbol] {
        &self.symbols
    }

    /// The unknown coefficients (everything except `k`).
    pub fn unknowns(&self) -> &[AnsatzSymbol] {
        &self.symbols[1..]
    }

    /// Symbolic image of each generator, aligned with the context.
    pub fn images(&self) -> &[Polynomial<ParamPoly>] {
        &self.images
    }

    pub fn symbol_index(&self, name: &str) -> Option<usize> {
        self.symbols.iter().position(|s| s.name == name)
    }
}

/// Builds the ansatz for a presentation: `f(y1) = k*y1` for the Kaehlerian
/// generator (its weight-1 monomial basis is just `y1`; this is checked) and
/// `f(y_i) = sum c[y_i][a] * y^a` over the weight-`i` monomial basis.
pub fn build_ansatz(pres: &RingPresentation) -> EndomorphismAnsatz {
    let ctx = pres.ctx();
    let kaehler = pres.kaehler_generator();
    let weight_one = monomial_basis(ctx, 1);
    assert_eq!(
        weight_one,
        vec![ExpVec::var(ctx.len(), kaehler)],
        "weight-1 monomial basis must be exactly the Kaehlerian generator"
    );

    let mut names = vec!["k".to_string()];
    let mut symbols = vec![AnsatzSymbol {
        name: "k".to_string(),
        generator: kaehler,
        basis_index: 0,
        monomial: ExpVec::var(ctx.len(), kaehler),
    }];
    let mut per_generator: Vec<Vec<usize>> = vec![Vec::new(); ctx.len()];
    per_generator[kaehler].push(0);

    for (gen, slots) in per_generator.iter_mut().enumerate() {
        if gen == kaehler {
            continue;
        }
        let basis = monomial_basis(ctx, ctx.weight(gen) as u64);
        for (idx, monomial) in basis.into_iter().enumerate() {
            let name = format!("c[{}][{}]", ctx.name(gen), idx + 1);
            slots.push(symbols.len());
            names.push(name.clone());
            symbols.push(AnsatzSymbol {
                name,
                generator: gen,
                basis_index: idx,
                monomial,
            });
        }
    }

    let param_ctx = ParamContext::new(names);
    let images = (0..ctx.len())
        .map(|gen| {
            let terms = per_generator[gen]
                .iter()
                .map(|&sym_idx| {
                    (
                        ParamPoly::symbol(param_ctx.clone(), sym_idx),
                        symbols[sym_idx].monomial.clone(),
                    )
                })
                .collect();
            Polynomial::from_terms(ctx.clone(), terms)
        })
        .collect();

    EndomorphismAnsatz {
        pres: pres.clone(),
        param_ctx,
        symbols,
        images,
    }
}

/// One scalar constraint `b = 0`: the coefficient of `monomial` in the
/// residue of the substituted relation. The raw form is kept for comparison
/// with printed residues; the primitive form (integer content removed,
/// positive leading coefficient) is what solvers consume.
#[derive(Debug, Clone)]
pub struct Constraint {
    pub relation: String,
    pub monomial: ExpVec,
    pub raw: ParamPoly,
    pub primitive: ParamPoly,
    pub scale: Rat,
}

/// All constraints of a presentation, along with the full residues they came
/// from.
#[derive(Debug, Clone)]
pub struct ConstraintSystem {
    pres_name: String,
    param_ctx: Arc<ParamContext>,
    residues: Vec<(String, Polynomial<ParamPoly>)>,
    constraints: Vec<Constraint>,
}

impl ConstraintSystem {
    pub fn presentation_name(&self) -> &str {
        &self.pres_name
    }

    pub fn param_ctx(&self) -> &Arc<ParamContext> {
        &self.param_ctx
    }

    /// Residue of each substituted relation, in relation order.
    pub fn residues(&self) -> &[(String, Polynomial<ParamPoly>)] {
        &self.residues
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    /// True when every residue is identically zero.
    pub fn is_empty(&self) -> bool {
        self.constraints.is_empty()
    }
}

/// Substitutes the ansatz into every relation, reduces against the basis,
/// and collects the nonzero monomial coefficients of the residues in
/// (relation, monomial-basis) order.
pub fn extract_constraints(
    pres: &RingPresentation,
    basis: &GroebnerBasis,
    ansatz: &EndomorphismAnsatz,
) -> Result<ConstraintSystem, EndomorphError> {
    if ansatz.pres != *pres || *basis.order().ctx() != *pres.ctx() {
        return Err(EndomorphError::PresentationMismatch);
    }
    if let Some(bound) = basis.truncation_bound() {
        let required = pres.max_relation_weight();
        if bound < required {
            return Err(EndomorphError::TruncationTooLow { bound, required });
        }
    }

    let ctx = pres.ctx();
    let mut residues = Vec::with_capacity(pres.relations().len());
    let mut constraints = Vec::new();
    for rel in pres.relations() {
        let substituted = rel
            .poly
            .to_parametric(&ansatz.param_ctx)
            .substitute(&ansatz.images)?;
        debug_assert!(
            substituted.weighted_degree().is_homogeneous_of(rel.weight),
            "substituted relation must stay homogeneous"
        );
        let residue = basis.normal_form(&substituted)?.residue;
        for monomial in monomial_basis(ctx, rel.weight) {
            if let Some(raw) = residue.coeff_of(&monomial) {
                let (primitive, scale) = raw.primitive();
                constraints.push(Constraint {
                    relation: rel.label.clone(),
                    monomial,
                    raw: raw.clone(),
                    primitive,
                    scale,
                });
            }
        }
        residues.push((rel.label.clone(), residue));
    }

    Ok(ConstraintSystem {
        pres_name: pres.name().to_string(),
        param_ctx: ansatz.param_ctx.clone(),
        residues,
        constraints,
    })
}

/// A parametric solution: a value polynomial in `k` for every ansatz symbol
/// (the value of `k` itself is stored at index 0, which lets specialized
/// families compose).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoefficientFamily {
    param_ctx: Arc<ParamContext>,
    values: Vec<ParamPoly>,
}

impl CoefficientFamily {
    pub fn param_ctx(&self) -> &Arc<ParamContext> {
        &self.param_ctx
    }

    /// Values aligned with the ansatz symbols.
    pub fn values(&self) -> &[ParamPoly] {
        &self.values
    }

    pub fn value_of(&self, ansatz: &EndomorphismAnsatz, name: &str) -> Option<&ParamPoly> {
        ansatz.symbol_index(name).map(|i| &self.values[i])
    }

    /// Evaluates every value at `k = p`, producing a constant family.
    pub fn specialize_k(&self, p: &Rat) -> CoefficientFamily {
        let values = self
            .values
            .iter()
            .map(|v| v.eval_symbol(0, p))
            .collect();
        CoefficientFamily {
            param_ctx: self.param_ctx.clone(),
            values,
        }
    }

    /// The rational point assigned to the unknowns (requires a family that
    /// has been specialized to constants).
    pub fn constant_point(&self) -> Option<Vec<Rat>> {
        self.values[1..]
            .iter()
            .map(|v| v.as_constant())
            .collect()
    }

    /// Concrete generator images under this family.
    pub fn generator_images(&self, ansatz: &EndomorphismAnsatz) -> Vec<Polynomial<ParamPoly>> {
        ansatz
            .images()
            .iter()
            .map(|img| img.map_coeffs(|c| c.substitute_symbols(&self.values)))
            .collect()
    }
}

/// The Adams family `psi^k`: each weight-`i` generator maps to `k^i` times
/// itself, all cross coefficients zero.
pub fn adams_family(ansatz: &EndomorphismAnsatz) -> CoefficientFamily {
    let pctx = ansatz.param_ctx.clone();
    let k = ParamPoly::symbol(pctx.clone(), 0);
    let ctx = ansatz.pres.ctx();
    let values = ansatz
        .symbols
        .iter()
        .map(|sym| {
            let own = ExpVec::var(ctx.len(), sym.generator);
            if sym.monomial == own {
                k.pow(ctx.weight(sym.generator))
            } else {
                ParamPoly::zero(pctx.clone())
            }
        })
        .collect();
    CoefficientFamily {
        param_ctx: pctx,
        values,
    }
}

/// The extra family on `E6_A6` (`psi^k` composed with the involution `tau`):
/// `f(y3) = k^3*y1^3 - k^3*y3`, `f(y4) = k^4*y1^4 - 2*k^4*y1*y3 + k^4*y4`.
pub fn tau_family(ansatz: &EndomorphismAnsatz) -> Result<CoefficientFamily, EndomorphError> {
    if ansatz.pres.name() != "E6_A6" {
        return Err(EndomorphError::NoTauFamily);
    }
    let pctx = ansatz.param_ctx.clone();
    let k = ParamPoly::symbol(pctx.clone(), 0);
    let assignments: [(&str, ParamPoly); 5] = [
        ("c[y3][1]", k.pow(3)),
        ("c[y3][2]", k.pow(3).neg()),
        ("c[y4][1]", k.pow(4)),
        ("c[y4][2]", k.pow(4).mul_rat(&Rat::from_integer((-2).into()))),
        ("c[y4][3]", k.pow(4)),
    ];
    let mut values = vec![k.clone()];
    for sym in &ansatz.symbols[1..] {
        let value = assignments
            .iter()
            .find(|(name, _)| *name == sym.name)
            .map(|(_, v)| v.clone())
            .ok_or_else(|| EndomorphError::UnassignedSymbol(sym.name.clone()))?;
        values.push(value);
    }
    Ok(CoefficientFamily {
        param_ctx: pctx,
        values,
    })
}

/// Outcome of verifying a family against a constraint system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail {
        relation: String,
        monomial: ExpVec,
        /// The nonzero value polynomial in `k` the constraint evaluates to.
        witness: ParamPoly,
    },
}

impl Verdict {
    pub fn passed(&self) -> bool {
        matches!(self, Verdict::Pass)
    }
}

/// Substitutes the family into every constraint; passes iff each becomes the
/// zero polynomial of `Q[k]`.
pub fn verify_family(
    system: &ConstraintSystem,
    family: &CoefficientFamily,
) -> Result<Verdict, EndomorphError> {
    if *system.param_ctx != *family.param_ctx {
        return Err(EndomorphError::PresentationMismatch);
    }
    for c in &system.constraints {
        let witness = c.raw.substitute_symbols(&family.values);
        if !witness.is_zero() {
            return Ok(Verdict::Fail {
                relation: c.relation.clone(),
                monomial: c.monomial.clone(),
                witness,
            });
        }
    }
    Ok(Verdict::Pass)
}

/// The family of `f o g` (apply `g` first), computed pointwise in `k` by
/// substituting `f`'s generator images into `g`'s image polynomials.
pub fn compose_families(
    f: &CoefficientFamily,
    g: &CoefficientFamily,
    ansatz: &EndomorphismAnsatz,
) -> Result<CoefficientFamily, EndomorphError> {
    if *f.param_ctx != *ansatz.param_ctx || *g.param_ctx != *ansatz.param_ctx {
        return Err(EndomorphError::PresentationMismatch);
    }
    let f_images = f.generator_images(ansatz);
    let g_images = g.generator_images(ansatz);
    let composed: Vec<Polynomial<ParamPoly>> = g_images
        .iter()
        .map(|img| img.substitute(&f_images))
        .collect::<Result<_, _>>()?;

    let zero = ParamPoly::zero(ansatz.param_ctx.clone());
    let values = ansatz
        .symbols
        .iter()
        .map(|sym| {
            composed[sym.generator]
                .coeff_of(&sym.monomial)
                .cloned()
                .unwrap_or_else(|| zero.clone())
        })
        .collect();
    Ok(CoefficientFamily {
        param_ctx: ansatz.param_ctx.clone(),
        values,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::{buchberger, GroebnerConfig};
    use crate::polyring::MonomialOrder;
    use crate::presentations::builtin;

    fn lex_basis(pres: &RingPresentation) -> GroebnerBasis {
        let order = MonomialOrder::lex(pres.ctx().clone());
        let gens: Vec<_> = pres.relations().iter().map(|r| r.poly.clone()).collect();
        buchberger(&gens, &order, None, &GroebnerConfig::default()).unwrap()
    }

    #[test]
    fn ansatz_shapes() {
        // F4_C3: f(y1) = k*y1, f(y4) = c1*y1^4 + c2*y4.
        let pres = builtin("F4_C3").unwrap();
        let ansatz = build_ansatz(pres);
        let names: Vec<&str> = ansatz.symbols().iter().map(|s| s.name.as_str()).collect();
        assert_eq!(names, vec!["k", "c[y4][1]", "c[y4][2]"]);
        assert_eq!(ansatz.images()[0].to_string(), "k*y1");
        assert_eq!(ansatz.images()[1].to_string(), "c[y4][1]*y1^4 + c[y4][2]*y4");

        // E6_A6: 1 + 2 + 3 unknowns plus k.
        let pres = builtin("E6_A6").unwrap();
        let ansatz = build_ansatz(pres);
        assert_eq!(ansatz.symbols().len(), 6);

        // E7_E6: f(y5) = a1*y1^5 + a2*y5, f(y9) = b1*y1^9 + b2*y1^4*y5 + b3*y9.
        let pres = builtin("E7_E6").unwrap();
        let ansatz = build_ansatz(pres);
        let names: Vec<&str> = ansatz.symbols().iter().map(|s| s.name.as_str()).collect();
        assert_eq!(
            names,
            vec!["k", "c[y5][1]", "c[y5][2]", "c[y9][1]", "c[y9][2]", "c[y9][3]"]
        );
        assert_eq!(
            ansatz.images()[2].to_string(),
            "c[y9][1]*y1^9 + c[y9][2]*y1^4*y5 + c[y9][3]*y9"
        );
    }

    #[test]
    fn adams_family_values() {
        let pres = builtin("F4_C3").unwrap();
        let ansatz = build_ansatz(pres);
        let fam = adams_family(&ansatz);
        assert_eq!(fam.value_of(&ansatz, "c[y4][1]").unwrap().to_string(), "0");
        assert_eq!(fam.value_of(&ansatz, "c[y4][2]").unwrap().to_string(), "k^4");

        let pres = builtin("E7_E6").unwrap();
        let ansatz = build_ansatz(pres);
        let fam = adams_family(&ansatz);
        assert_eq!(fam.value_of(&ansatz, "c[y5][2]").unwrap().to_string(), "k^5");
        assert_eq!(fam.value_of(&ansatz, "c[y9][3]").unwrap().to_string(), "k^9");
        assert_eq!(fam.value_of(&ansatz, "c[y9][1]").unwrap().to_string(), "0");
    }

    #[test]
    fn adams_at_one_is_identity() {
        let pres = builtin("F4_C3").unwrap();
        let ansatz = build_ansatz(pres);
        let fam = adams_family(&ansatz).specialize_k(&Rat::from_integer(1.into()));
        let images = fam.generator_images(&ansatz);
        assert_eq!(images[0].to_string(), "y1");
        assert_eq!(images[1].to_string(), "y4");
    }

    #[test]
    fn tau_family_images() {
        let pres = builtin("E6_A6").unwrap();
        let ansatz = build_ansatz(pres);
        let tau = tau_family(&ansatz).unwrap();
        let images = tau.generator_images(&ansatz);
        assert_eq!(images[1].to_string(), "k^3*y1^3 - k^3*y3");
        assert_eq!(images[2].to_string(), "k^4*y1^4 - 2*k^4*y1*y3 + k^4*y4");

        let other = build_ansatz(builtin("F4_C3").unwrap());
        assert_eq!(tau_family(&other).unwrap_err(), EndomorphError::NoTauFamily);
    }

    #[test]
    fn tau_squared_is_identity_at_one() {
        let pres = builtin("E6_A6").unwrap();
        let ansatz = build_ansatz(pres);
        let one = Rat::from_integer(1.into());
        let tau1 = tau_family(&ansatz).unwrap().specialize_k(&one);
        let composed = compose_families(&tau1, &tau1, &ansatz).unwrap();
        let identity = adams_family(&ansatz).specialize_k(&one);
        assert_eq!(composed, identity);
    }

    #[test]
    fn adams_composition_multiplies_orders() {
        let pres = builtin("F4_C3").unwrap();
        let ansatz = build_ansatz(pres);
        let two = adams_family(&ansatz).specialize_k(&Rat::from_integer(2.into()));
        let three = adams_family(&ansatz).specialize_k(&Rat::from_integer(3.into()));
        let six = adams_family(&ansatz).specialize_k(&Rat::from_integer(6.into()));
        assert_eq!(compose_families(&two, &three, &ansatz).unwrap(), six);
        // any family composed with the identity is itself
        let identity = adams_family(&ansatz).specialize_k(&Rat::from_integer(1.into()));
        assert_eq!(compose_families(&two, &identity, &ansatz).unwrap(), two);
        assert_eq!(compose_families(&identity, &two, &ansatz).unwrap(), two);
    }

    #[test]
    fn identity_ansatz_satisfies_all_constraints() {
        for name in ["F4_C3", "F4_B3", "E6_D5"] {
            let pres = builtin(name).unwrap();
            let ansatz = build_ansatz(pres);
            let basis = lex_basis(pres);
            let system = extract_constraints(pres, &basis, &ansatz).unwrap();
            let identity = adams_family(&ansatz).specialize_k(&Rat::from_integer(1.into()));
            assert!(verify_family(&system, &identity).unwrap().passed());
        }
    }

    #[test]
    fn wrong_family_fails_with_witness() {
        let pres = builtin("F4_C3").unwrap();
        let ansatz = build_ansatz(pres);
        let basis = lex_basis(pres);
        let system = extract_constraints(pres, &basis, &ansatz).unwrap();
        // a = 0, b = k^4 + 1 is not a solution
        let pctx = ansatz.param_ctx().clone();
        let k = ParamPoly::symbol(pctx.clone(), 0);
        let bad = CoefficientFamily {
            param_ctx: pctx.clone(),
            values: vec![
                k.clone(),
                ParamPoly::zero(pctx.clone()),
                k.pow(4).add(&ParamPoly::constant_i64(pctx, 1)),
            ],
        };
        match verify_family(&system, &bad).unwrap() {
            Verdict::Fail { witness, .. } => assert!(!witness.is_zero()),
            Verdict::Pass => panic!("expected failure"),
        }
    }

    #[test]
    fn truncation_below_relations_is_rejected() {
        let pres = builtin("F4_C3").unwrap();
        let ansatz = build_ansatz(pres);
        let order = MonomialOrder::lex(pres.ctx().clone());
        let gens: Vec<_> = pres.relations().iter().map(|r| r.poly.clone()).collect();
        let gb = buchberger(&gens, &order, Some(8), &GroebnerConfig::default());
        // bound 8 < max relation weight 12 already fails at construction
        assert!(matches!(
            gb.unwrap_err(),
            GroebnerError::BoundBelowGenerators { .. }
        ));
        // and a valid truncated basis below the max relation weight is
        // rejected by extract_constraints itself
        let g8_only = vec![pres.relations()[0].poly.clone()];
        let gb8 = buchberger(&g8_only, &order, Some(8), &GroebnerConfig::default()).unwrap();
        assert_eq!(
            extract_constraints(pres, &gb8, &ansatz).unwrap_err(),
            EndomorphError::TruncationTooLow {
                bound: 8,
                required: 12
            }
        );
    }
}
