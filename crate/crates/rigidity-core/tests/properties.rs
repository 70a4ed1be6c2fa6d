//! Randomized invariant checks for the polynomial and Gröbner layers:
//! order axioms, ring laws, homomorphism/grading properties, division
//! identities, Buchberger's criterion on computed bases, and parser round
//! trips. Structured generators use a fixed-seed ChaCha RNG so failures
//! reproduce exactly.

use num_bigint::BigInt;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use rigidity_core::groebner::{buchberger, normal_form, s_polynomial, GroebnerConfig};
use rigidity_core::polyring::text::parse_polynomial;
use rigidity_core::polyring::Ctx;
use rigidity_core::presentations::{format_canonical, parse_presentation, RingPresentation};
use rigidity_core::{
    monomial_basis, ExpVec, MonomialOrder, OrderKind, Polynomial, Rat, VariableContext,
    WeightedDegree,
};

const SEED: u64 = 0x5eed_0001;

fn ctx2() -> Ctx {
    VariableContext::new(vec![("y1", 1), ("y4", 4)]).unwrap()
}

fn ctx3() -> Ctx {
    VariableContext::new(vec![("y1", 1), ("y3", 3), ("y4", 4)]).unwrap()
}

fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

fn all_orders(ctx: &Ctx) -> Vec<MonomialOrder> {
    [OrderKind::Lex, OrderKind::WGrLex, OrderKind::WGrevLex]
        .into_iter()
        .map(|kind| MonomialOrder::new(kind, ctx.clone()))
        .collect()
}

fn expvec3() -> impl Strategy<Value = ExpVec> {
    proptest::collection::vec(0u16..8, 3).prop_map(ExpVec::new)
}

fn poly3() -> impl Strategy<Value = Polynomial<Rat>> {
    proptest::collection::vec(
        ((-9i64..10).prop_filter("nonzero", |&n| n != 0), expvec3()),
        0..5,
    )
    .prop_map(|terms| {
        Polynomial::from_terms(
            ctx3(),
            terms.into_iter().map(|(c, e)| (rat(c), e)).collect(),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn order_axioms(a in expvec3(), b in expvec3(), c in expvec3()) {
        for order in all_orders(&ctx3()) {
            // Totality and antisymmetry.
            let ab = order.cmp(&a, &b);
            let ba = order.cmp(&b, &a);
            prop_assert_eq!(ab, ba.reverse());
            prop_assert_eq!(ab == std::cmp::Ordering::Equal, a == b);
            // Multiplicativity: a > b implies a*c > b*c.
            let ac = a.times(&c);
            let bc = b.times(&c);
            prop_assert_eq!(order.cmp(&ac, &bc), ab);
            // Well-foundedness: the unit monomial is minimal.
            let unit = ExpVec::unit(3);
            prop_assert_ne!(order.cmp(&unit, &a), std::cmp::Ordering::Greater);
            // Transitivity on the sorted triple.
            let mut sorted = [a.clone(), b.clone(), c.clone()];
            sorted.sort_by(|x, y| order.cmp(x, y));
            prop_assert_ne!(order.cmp(&sorted[0], &sorted[2]), std::cmp::Ordering::Greater);
        }
    }

    #[test]
    fn ring_laws(p in poly3(), q in poly3(), r in poly3()) {
        prop_assert_eq!(p.add(&q), q.add(&p));
        prop_assert_eq!(p.add(&q).add(&r), p.add(&q.add(&r)));
        prop_assert_eq!(p.mul(&q), q.mul(&p));
        prop_assert_eq!(p.mul(&q).mul(&r), p.mul(&q.mul(&r)));
        prop_assert_eq!(p.mul(&q.add(&r)), p.mul(&q).add(&p.mul(&r)));
        prop_assert_eq!(p.sub(&q).add(&q), p.clone());
        prop_assert!(p.add(&p.neg()).is_zero());
    }

    #[test]
    fn substitution_is_a_ring_homomorphism(p in poly3(), q in poly3()) {
        // Small images keep exponents well inside range.
        let ctx = ctx3();
        let y1 = Polynomial::var(ctx.clone(), 0);
        let y3 = Polynomial::var(ctx.clone(), 1);
        let y4 = Polynomial::var(ctx.clone(), 2);
        let images = vec![
            y1.add(&y3).neg(),
            y3.mul(&y1).sub(&y4.scale(&rat(2))),
            y4.add(&y1.mul(&y1)),
        ];
        let sum = p.add(&q).substitute(&images).unwrap();
        prop_assert_eq!(
            sum,
            p.substitute(&images).unwrap().add(&q.substitute(&images).unwrap())
        );
        let prod = p.mul(&q).substitute(&images).unwrap();
        prop_assert_eq!(
            prod,
            p.substitute(&images).unwrap().mul(&q.substitute(&images).unwrap())
        );
    }

    #[test]
    fn grading_is_additive(wp in 1u64..7, wq in 1u64..7, pick in any::<u64>()) {
        // Homogeneous polynomials built from the monomial basis.
        let ctx = ctx3();
        let build = |w: u64, salt: u64| {
            let basis = monomial_basis(&ctx, w);
            let terms: Vec<(Rat, ExpVec)> = basis
                .into_iter()
                .enumerate()
                .filter(|(i, _)| (salt >> (i % 60)) & 1 == 0)
                .map(|(i, e)| (rat(i as i64 % 5 + 1), e))
                .collect();
            Polynomial::from_terms(ctx.clone(), terms)
        };
        let p = build(wp, pick);
        let q = build(wq, pick / 3);
        prop_assert!(p.weighted_degree().is_homogeneous_of(wp));
        let product = p.mul(&q);
        if p.is_zero() || q.is_zero() {
            prop_assert!(product.is_zero());
        } else {
            prop_assert_eq!(product.weighted_degree(), WeightedDegree::Homogeneous(wp + wq));
        }
    }

    #[test]
    fn division_identity_and_irreducibility(f in poly3(), g in poly3(), h in poly3()) {
        let order = MonomialOrder::lex(ctx3());
        let basis: Vec<Polynomial<Rat>> =
            [g, h].into_iter().filter(|p| !p.is_zero()).collect();
        prop_assume!(!basis.is_empty());
        let result = normal_form(&f, &basis, &order).unwrap();
        // f = sum(q_i b_i) + r, exactly.
        prop_assert_eq!(result.reexpand(&basis), f);
        // No residue term is divisible by any basis leading monomial.
        for t in result.residue.terms() {
            for b in &basis {
                let lm = &b.leading_term(&order).unwrap().exp;
                prop_assert!(!lm.divides(&t.exp));
            }
        }
        // Idempotence.
        let again = normal_form(&result.residue, &basis, &order).unwrap();
        prop_assert_eq!(again.residue, result.residue);
    }

    #[test]
    fn polynomial_text_round_trip(p in poly3()) {
        let text = p.to_string();
        let reparsed = parse_polynomial(&text, &ctx3()).unwrap();
        prop_assert_eq!(reparsed, p);
    }
}

/// Random small homogeneous ideals in two variables, for basis-level
/// properties where each instance costs a Buchberger run.
fn random_homogeneous(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Polynomial<Rat> {
    loop {
        let weight = rng.gen_range(2u64..12);
        let basis = monomial_basis(ctx, weight);
        let mut terms: Vec<(Rat, ExpVec)> = Vec::new();
        for e in basis {
            if rng.gen_bool(0.7) {
                terms.push((rat(rng.gen_range(-6i64..7)), e));
            }
        }
        let p = Polynomial::from_terms(ctx.clone(), terms);
        if !p.is_zero() {
            return p;
        }
    }
}

#[test]
fn buchberger_criterion_on_random_ideals() {
    let ctx = ctx2();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let config = GroebnerConfig::default();
    for round in 0..60 {
        let order = MonomialOrder::new(
            [OrderKind::Lex, OrderKind::WGrLex, OrderKind::WGrevLex][round % 3],
            ctx.clone(),
        );
        let gens: Vec<Polynomial<Rat>> = (0..rng.gen_range(1..4))
            .map(|_| random_homogeneous(&ctx, &mut rng))
            .collect();
        let gb = buchberger(&gens, &order, None, &config).unwrap();
        let elements = gb.elements();
        // Every S-polynomial reduces to zero against the basis.
        for i in 0..elements.len() {
            for j in (i + 1)..elements.len() {
                let s = s_polynomial(&elements[i], &elements[j], &order).unwrap();
                let reduced = normal_form(&s, elements, &order).unwrap();
                assert!(
                    reduced.residue.is_zero(),
                    "S({i},{j}) fails to reduce under {order}"
                );
            }
        }
        // Reduced-basis uniqueness under generator permutation.
        let mut permuted = gens.clone();
        permuted.reverse();
        let gb2 = buchberger(&permuted, &order, None, &config).unwrap();
        assert_eq!(gb.elements(), gb2.elements());
        // The reduced property itself.
        for (i, e) in elements.iter().enumerate() {
            for (j, other) in elements.iter().enumerate() {
                if i == j {
                    continue;
                }
                let lm = &other.leading_term(&order).unwrap().exp;
                for t in e.terms() {
                    assert!(!lm.divides(&t.exp), "basis not fully reduced");
                }
            }
        }
    }
}

#[test]
fn normal_form_is_linear_over_groebner_bases() {
    let ctx = ctx2();
    let order = MonomialOrder::lex(ctx.clone());
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 1);
    let config = GroebnerConfig::default();
    for _ in 0..40 {
        let gens: Vec<Polynomial<Rat>> = (0..2)
            .map(|_| random_homogeneous(&ctx, &mut rng))
            .collect();
        let gb = buchberger(&gens, &order, None, &config).unwrap();
        let f = random_homogeneous(&ctx, &mut rng);
        let g = random_homogeneous(&ctx, &mut rng);
        let scale = rat(rng.gen_range(-4i64..5));
        let lhs = gb.normal_form(&f.scale(&scale).add(&g)).unwrap().residue;
        let rhs = gb
            .normal_form(&f)
            .unwrap()
            .residue
            .scale(&scale)
            .add(&gb.normal_form(&g).unwrap().residue);
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn homogeneous_inputs_give_homogeneous_bases_and_residues() {
    let ctx = ctx2();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 2);
    let config = GroebnerConfig::default();
    for round in 0..30 {
        let order = MonomialOrder::new(
            [OrderKind::Lex, OrderKind::WGrevLex][round % 2],
            ctx.clone(),
        );
        let gens: Vec<Polynomial<Rat>> = (0..2)
            .map(|_| random_homogeneous(&ctx, &mut rng))
            .collect();
        let gb = buchberger(&gens, &order, None, &config).unwrap();
        for e in gb.elements() {
            assert!(matches!(
                e.weighted_degree(),
                WeightedDegree::Homogeneous(_)
            ));
        }
        let f = random_homogeneous(&ctx, &mut rng);
        let w = f.weighted_degree().degree().unwrap();
        let residue = gb.normal_form(&f).unwrap().residue;
        assert!(residue.weighted_degree().is_homogeneous_of(w));
    }
}

/// Truncated and full bases compute identical normal forms for every
/// monomial up to the truncation bound, on every catalog ideal where the
/// full basis is feasible.
#[test]
fn truncated_and_full_normal_forms_agree() {
    let config = GroebnerConfig::default();
    for name in ["F4_C3", "F4_B3", "E6_A6", "E6_D5", "E7_E6"] {
        let pres = rigidity_core::presentations::builtin(name).unwrap();
        let ctx = pres.ctx();
        let order = MonomialOrder::lex(ctx.clone());
        let gens: Vec<_> = pres.relations().iter().map(|r| r.poly.clone()).collect();
        let bound = pres.max_relation_weight();
        let full = buchberger(&gens, &order, None, &config).unwrap();
        let truncated = buchberger(&gens, &order, Some(bound), &config).unwrap();
        for w in 0..=bound {
            for exp in monomial_basis(ctx, w) {
                let m = Polynomial::term(ctx.clone(), rat(1), exp);
                let a = full.normal_form(&m).unwrap().residue;
                let b = truncated.normal_form(&m).unwrap().residue;
                assert_eq!(a, b, "{name}: normal forms differ at weight {w}");
            }
        }
    }
}

fn random_presentation(rng: &mut ChaCha8Rng) -> RingPresentation {
    loop {
        let n_vars = rng.gen_range(1..4usize);
        let mut vars = vec![("y1".to_string(), 1u32)];
        let mut used = vec![1u32];
        for _ in 1..n_vars {
            let w = rng.gen_range(2u32..7);
            if used.contains(&w) {
                continue;
            }
            used.push(w);
            vars.push((format!("y{w}"), w));
        }
        let ctx = VariableContext::new(vars.clone()).unwrap();
        let n_rels = rng.gen_range(0..3usize);
        let mut lines = vec![format!("presentation \"RAND{}\"", rng.gen_range(0..1000))];
        for (name, w) in &vars {
            lines.push(format!("var {name} deg {w}"));
        }
        let mut ok = true;
        let mut labels = Vec::new();
        for _ in 0..n_rels {
            let weight = rng.gen_range(2u64..10);
            let label = format!("g{weight}");
            if labels.contains(&label) {
                continue;
            }
            let basis = monomial_basis(&ctx, weight);
            let mut terms: Vec<(Rat, ExpVec)> = Vec::new();
            for e in basis {
                if rng.gen_bool(0.6) {
                    let num = rng.gen_range(-9i64..10);
                    let den = rng.gen_range(1i64..4);
                    terms.push((Rat::new(BigInt::from(num), BigInt::from(den)), e));
                }
            }
            let poly = Polynomial::from_terms(ctx.clone(), terms);
            if poly.is_zero() {
                ok = false;
                break;
            }
            labels.push(label.clone());
            lines.push(format!("rel {label} deg {weight} = {poly}"));
        }
        if !ok {
            continue;
        }
        let src = lines.join("\n") + "\n";
        return parse_presentation(&src).unwrap();
    }
}

#[test]
fn presentation_round_trip_on_random_presentations() {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 3);
    for _ in 0..200 {
        let pres = random_presentation(&mut rng);
        let text = format_canonical(&pres);
        let reparsed = parse_presentation(&text).unwrap();
        assert_eq!(reparsed, pres);
        assert_eq!(format_canonical(&reparsed), text);
    }
}
