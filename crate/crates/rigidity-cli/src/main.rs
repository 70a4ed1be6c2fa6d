//! `rigidity` — command-line surface for the exact-arithmetic
//! endomorphism-rigidity pipeline: Gröbner bases and normal forms of the
//! catalog presentations, constraint-system extraction, family verification,
//! and specialized solving with classification.

mod report;

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use rigidity_core::endomorph::{
    adams_family, build_ansatz, extract_constraints, parse_family, tau_family,
    CoefficientFamily, ConstraintSystem, EndomorphismAnsatz, Verdict,
};
use rigidity_core::groebner::{buchberger, GroebnerBasis, GroebnerConfig, GroebnerError, StandardCount};
use rigidity_core::presentations::{builtin, parse_presentation, RingPresentation, CATALOG_NAMES};
use rigidity_core::solver::{classify, solve_rational, specialize, Classification};
use rigidity_core::polyring::text::parse_polynomial;
use rigidity_core::{MonomialOrder, OrderKind, Rat};

use report::{
    CaseInfo, ConstraintEntry, OrderInfo, ResidueEntry, ResidueTerm, RunReport, SolveEntry,
    ToolInfo, VerifyEntry, WitnessEntry, SCHEMA_VERSION,
};

const EXIT_OK: u8 = 0;
const EXIT_FAILURE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_RESOURCE: u8 = 3;

#[derive(Parser)]
#[command(
    name = "rigidity",
    version,
    about = "Exact-arithmetic endomorphism computations for the catalog of exceptional-Grassmannian cohomology rings"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Compute the reduced Groebner basis of the relation ideal
    Gb(CommonArgs),
    /// Normal form of a polynomial against the relation ideal
    Nf {
        #[command(flatten)]
        common: CommonArgs,
        /// Polynomial in canonical text, e.g. "y1^4*y4^2"
        #[arg(long, value_name = "POLY")]
        poly: String,
    },
    /// Monomial basis of a weight
    Basis {
        #[command(flatten)]
        common: CommonArgs,
        /// Total weight r >= 0
        #[arg(long)]
        weight: u64,
    },
    /// Standard-monomial count (dimension of the quotient ring)
    Dim(CommonArgs),
    /// Emit the endomorphism constraint system
    Constraints(CommonArgs),
    /// Solve the constraint system at a rational k and classify the solutions
    Solve {
        #[command(flatten)]
        common: CommonArgs,
        /// Rational value for k, e.g. "2" or "-1/2"
        #[arg(long, value_name = "P")]
        k: String,
    },
    /// Verify a coefficient family symbolically in k
    Verify {
        #[command(flatten)]
        common: CommonArgs,
        /// "adams", "tau", or a path to a family file
        #[arg(long, value_name = "adams|tau|FILE")]
        family: String,
    },
    /// Full pipeline report (basis, residues, constraints, verification)
    Report {
        #[command(flatten)]
        common: CommonArgs,
        /// Run every catalog case in order
        #[arg(long, conflicts_with = "case", conflicts_with = "input")]
        all: bool,
        /// Also solve at this rational k
        #[arg(long, value_name = "P")]
        k: Option<String>,
    },
}

#[derive(Args)]
struct CommonArgs {
    /// Built-in presentation name (see `report --all` for the catalog)
    #[arg(long, value_name = "NAME")]
    case: Option<String>,
    /// Load a presentation from a `.pres` file instead
    #[arg(long, value_name = "PATH", conflicts_with = "case")]
    input: Option<PathBuf>,
    /// Monomial order: lex (default), wgrlex or wgrevlex
    #[arg(long, default_value = "lex", value_name = "KIND")]
    order: String,
    /// Truncate the basis at this weight ("auto" = max relation weight)
    #[arg(long, value_name = "D|auto")]
    truncate: Option<String>,
    /// S-pair ceiling (overrides RIGIDITY_MAX_PAIRS)
    #[arg(long, value_name = "N")]
    max_pairs: Option<usize>,
    /// Intermediate term ceiling (overrides RIGIDITY_MAX_TERMS)
    #[arg(long, value_name = "N")]
    max_terms: Option<usize>,
    /// Emit the JSON report schema instead of text
    #[arg(long)]
    json: bool,
    /// Write the output to a file instead of stdout
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Parse(String),
    Resource(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Parse(_) => EXIT_USAGE,
            CliError::Resource(_) => EXIT_RESOURCE,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Parse(m) | CliError::Resource(m) => f.write_str(m),
        }
    }
}

fn groebner_error(e: GroebnerError) -> CliError {
    match e {
        GroebnerError::PairLimit(_) | GroebnerError::TermLimit(_) => {
            CliError::Resource(e.to_string())
        }
        other => CliError::Usage(other.to_string()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn run(cmd: Cmd) -> Result<u8, CliError> {
    match cmd {
        Cmd::Gb(common) => cmd_gb(&common),
        Cmd::Nf { common, poly } => cmd_nf(&common, &poly),
        Cmd::Basis { common, weight } => cmd_basis(&common, weight),
        Cmd::Dim(common) => cmd_dim(&common),
        Cmd::Constraints(common) => cmd_constraints(&common),
        Cmd::Solve { common, k } => cmd_solve(&common, &k),
        Cmd::Verify { common, family } => cmd_verify(&common, &family),
        Cmd::Report { common, all, k } => cmd_report(&common, all, k.as_deref()),
    }
}

/// Everything the pipeline commands share: the presentation, order, limits,
/// computed basis, and phase timings.
struct CaseData {
    pres: RingPresentation,
    order: MonomialOrder,
    bound: Option<u64>,
    config: GroebnerConfig,
    basis: GroebnerBasis,
    timings: BTreeMap<String, u128>,
}

fn load_presentation(common: &CommonArgs) -> Result<RingPresentation, CliError> {
    match (&common.case, &common.input) {
        (Some(name), None) => builtin(name)
            .cloned()
            .map_err(|e| CliError::Usage(e.to_string())),
        (None, Some(path)) => {
            let src = std::fs::read_to_string(path)
                .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
            parse_presentation(&src)
                .map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))
        }
        (None, None) => Err(CliError::Usage(
            "one of --case or --input is required".to_string(),
        )),
        (Some(_), Some(_)) => unreachable!("clap enforces exclusivity"),
    }
}

fn parse_order(common: &CommonArgs, pres: &RingPresentation) -> Result<MonomialOrder, CliError> {
    let kind = OrderKind::from_str(&common.order).map_err(CliError::Usage)?;
    Ok(MonomialOrder::new(kind, pres.ctx().clone()))
}

fn parse_bound(common: &CommonArgs, pres: &RingPresentation) -> Result<Option<u64>, CliError> {
    match common.truncate.as_deref() {
        None => Ok(None),
        Some("auto") => Ok(Some(pres.max_relation_weight())),
        Some(text) => text
            .parse::<u64>()
            .map(Some)
            .map_err(|_| CliError::Usage(format!("invalid --truncate value `{text}`"))),
    }
}

fn env_limit(name: &str) -> Result<Option<usize>, CliError> {
    match std::env::var(name) {
        Ok(text) => text
            .parse::<usize>()
            .map(Some)
            .map_err(|_| CliError::Usage(format!("invalid {name} value `{text}`"))),
        Err(_) => Ok(None),
    }
}

fn build_config(common: &CommonArgs) -> Result<GroebnerConfig, CliError> {
    let defaults = GroebnerConfig::default();
    let max_pairs = match common.max_pairs {
        Some(n) => n,
        None => env_limit("RIGIDITY_MAX_PAIRS")?.unwrap_or(defaults.max_pairs),
    };
    let max_terms = match common.max_terms {
        Some(n) => n,
        None => env_limit("RIGIDITY_MAX_TERMS")?.unwrap_or(defaults.max_terms),
    };
    Ok(GroebnerConfig {
        max_pairs,
        max_terms,
    })
}

fn prepare(common: &CommonArgs) -> Result<CaseData, CliError> {
    let pres = load_presentation(common)?;
    let order = parse_order(common, &pres)?;
    let bound = parse_bound(common, &pres)?;
    let config = build_config(common)?;
    if pres.relations().is_empty() {
        return Err(CliError::Usage(format!(
            "presentation `{}` declares no relations",
            pres.name()
        )));
    }
    let generators: Vec<_> = pres.relations().iter().map(|r| r.poly.clone()).collect();
    let started = Instant::now();
    let basis = buchberger(&generators, &order, bound, &config).map_err(groebner_error)?;
    let mut timings = BTreeMap::new();
    timings.insert("groebner".to_string(), started.elapsed().as_millis());
    Ok(CaseData {
        pres,
        order,
        bound,
        config,
        basis,
        timings,
    })
}

fn emit(common: &CommonArgs, text: String) -> Result<(), CliError> {
    match &common.out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn base_report(data: &CaseData) -> RunReport {
    RunReport {
        schema_version: SCHEMA_VERSION,
        tool: ToolInfo::default(),
        case: CaseInfo {
            name: data.pres.name().to_string(),
            sha256: data.pres.sha256(),
        },
        order: OrderInfo {
            kind: data.order.kind().as_str().to_string(),
            precedence: data
                .order
                .ctx()
                .precedence_names()
                .iter()
                .map(|s| s.to_string())
                .collect(),
        },
        truncation_bound: data.bound,
        groebner_basis: data
            .basis
            .elements()
            .iter()
            .map(|p| p.text_with_order(&data.order))
            .collect(),
        standard_monomial_count: None,
        residues: vec![],
        constraints: vec![],
        verify: vec![],
        solve: None,
        verdicts: BTreeMap::new(),
        timings_ms: data.timings.clone(),
    }
}

fn cmd_gb(common: &CommonArgs) -> Result<u8, CliError> {
    let data = prepare(common)?;
    if common.json {
        emit(common, report::to_json(&base_report(&data)))?;
    } else {
        let mut text = String::new();
        for p in data.basis.elements() {
            text.push_str(&p.text_with_order(&data.order));
            text.push('\n');
        }
        emit(common, text)?;
    }
    Ok(EXIT_OK)
}

fn cmd_nf(common: &CommonArgs, poly: &str) -> Result<u8, CliError> {
    let data = prepare(common)?;
    let f = parse_polynomial(poly, data.pres.ctx())
        .map_err(|e| CliError::Parse(format!("--poly: {e}")))?;
    let division = data.basis.normal_form(&f).map_err(groebner_error)?;
    if common.json {
        let mut rep = base_report(&data);
        rep.verdicts.insert(
            "normal_form".to_string(),
            division.residue.text_with_order(&data.order),
        );
        rep.verdicts.insert(
            "ideal_member".to_string(),
            division.residue.is_zero().to_string(),
        );
        emit(common, report::to_json(&rep))?;
    } else {
        emit(
            common,
            format!("{}\n", division.residue.text_with_order(&data.order)),
        )?;
    }
    Ok(EXIT_OK)
}

fn cmd_basis(common: &CommonArgs, weight: u64) -> Result<u8, CliError> {
    let pres = load_presentation(common)?;
    let ctx = pres.ctx();
    let mut text = String::new();
    for exp in rigidity_core::monomial_basis(ctx, weight) {
        text.push_str(&ctx.monomial_text(&exp));
        text.push('\n');
    }
    emit(common, text)?;
    Ok(EXIT_OK)
}

fn cmd_dim(common: &CommonArgs) -> Result<u8, CliError> {
    let data = prepare(common)?;
    let count = data
        .basis
        .standard_monomial_count()
        .map_err(groebner_error)?;
    let text = match count {
        StandardCount::Finite(n) => n.to_string(),
        StandardCount::Infinite => "infinite".to_string(),
    };
    if common.json {
        let mut rep = base_report(&data);
        rep.standard_monomial_count = Some(text);
        emit(common, report::to_json(&rep))?;
    } else {
        emit(common, format!("{text}\n"))?;
    }
    Ok(EXIT_OK)
}

/// Builds the ansatz and constraint system on top of a prepared case.
fn constraint_step(
    data: &mut CaseData,
) -> Result<(EndomorphismAnsatz, ConstraintSystem), CliError> {
    let ansatz = build_ansatz(&data.pres);
    let started = Instant::now();
    let system = extract_constraints(&data.pres, &data.basis, &ansatz)
        .map_err(|e| CliError::Usage(e.to_string()))?;
    data.timings
        .insert("constraints".to_string(), started.elapsed().as_millis());
    Ok((ansatz, system))
}

fn fill_constraint_report(rep: &mut RunReport, data: &CaseData, system: &ConstraintSystem) {
    let ctx = data.pres.ctx();
    rep.residues = system
        .residues()
        .iter()
        .map(|(label, residue)| ResidueEntry {
            relation: label.clone(),
            terms: residue
                .sorted_terms(&data.order)
                .iter()
                .map(|t| ResidueTerm {
                    monomial: ctx.monomial_text(&t.exp),
                    coefficient: t.coeff.to_string(),
                })
                .collect(),
        })
        .collect();
    rep.constraints = system
        .constraints()
        .iter()
        .map(|c| ConstraintEntry {
            relation: c.relation.clone(),
            monomial: ctx.monomial_text(&c.monomial),
            polynomial: c.primitive.to_string(),
        })
        .collect();
    rep.timings_ms = data.timings.clone();
}

fn cmd_constraints(common: &CommonArgs) -> Result<u8, CliError> {
    let mut data = prepare(common)?;
    let (_ansatz, system) = constraint_step(&mut data)?;
    if common.json {
        let mut rep = base_report(&data);
        fill_constraint_report(&mut rep, &data, &system);
        emit(common, report::to_json(&rep))?;
    } else {
        let ctx = data.pres.ctx();
        let mut text = String::new();
        for c in system.constraints() {
            text.push_str(&format!(
                "{} @ {}: {}\n",
                c.relation,
                ctx.monomial_text(&c.monomial),
                c.primitive
            ));
        }
        emit(common, text)?;
    }
    Ok(EXIT_OK)
}

fn parse_k(text: &str) -> Result<Rat, CliError> {
    Rat::from_str(text).map_err(|e| CliError::Parse(format!("invalid --k value `{text}`: {e}")))
}

fn solve_step(
    data: &mut CaseData,
    ansatz: &EndomorphismAnsatz,
    system: &ConstraintSystem,
    p: &Rat,
) -> Result<(SolveEntry, Classification), CliError> {
    let started = Instant::now();
    let sys = specialize(system, ansatz, p);
    let solved = solve_rational(&sys, &data.config).map_err(|e| match e {
        rigidity_core::solver::SolveError::Groebner(g) => groebner_error(g),
    })?;
    let (classification, detail) = classify(ansatz, &sys, &solved);
    data.timings
        .insert("solve".to_string(), started.elapsed().as_millis());

    let points = solved
        .points
        .iter()
        .map(|pt| {
            sys.unknowns()
                .iter()
                .zip(pt)
                .map(|(name, value)| (name.clone(), value.to_string()))
                .collect::<BTreeMap<_, _>>()
        })
        .collect();
    let mut residuals = solved.residuals.clone();
    if let Some(detail) = detail {
        residuals.push(detail);
    }
    Ok((
        SolveEntry {
            k: p.to_string(),
            points,
            residuals,
            classification: classification.as_str().to_string(),
        },
        classification,
    ))
}

fn cmd_solve(common: &CommonArgs, k: &str) -> Result<u8, CliError> {
    let p = parse_k(k)?;
    let mut data = prepare(common)?;
    let (ansatz, system) = constraint_step(&mut data)?;
    let (entry, classification) = solve_step(&mut data, &ansatz, &system, &p)?;
    if common.json {
        let mut rep = base_report(&data);
        fill_constraint_report(&mut rep, &data, &system);
        rep.verdicts.insert(
            "classification".to_string(),
            classification.as_str().to_string(),
        );
        rep.solve = Some(entry);
        emit(common, report::to_json(&rep))?;
    } else {
        let mut text = String::new();
        for point in &entry.points {
            let fields: Vec<String> =
                point.iter().map(|(n, v)| format!("{n} = {v}")).collect();
            text.push_str(&format!("point: {}\n", fields.join(", ")));
        }
        for r in &entry.residuals {
            text.push_str(&format!("residual: {r}\n"));
        }
        text.push_str(&format!("classification: {}\n", entry.classification));
        emit(common, text)?;
    }
    match classification {
        Classification::Adams | Classification::AdamsOrTau => Ok(EXIT_OK),
        _ => Ok(EXIT_FAILURE),
    }
}

fn load_family(
    name: &str,
    ansatz: &EndomorphismAnsatz,
) -> Result<CoefficientFamily, CliError> {
    match name {
        "adams" => Ok(adams_family(ansatz)),
        "tau" => tau_family(ansatz).map_err(|e| CliError::Usage(e.to_string())),
        path => {
            let src = std::fs::read_to_string(path).map_err(|e| {
                CliError::Usage(format!("cannot read family file `{path}`: {e}"))
            })?;
            parse_family(&src, ansatz).map_err(|e| CliError::Parse(format!("{path}: {e}")))
        }
    }
}

fn verify_step(
    data: &mut CaseData,
    system: &ConstraintSystem,
    family_name: &str,
    family: &CoefficientFamily,
) -> Result<VerifyEntry, CliError> {
    let started = Instant::now();
    let verdict = rigidity_core::endomorph::verify_family(system, family)
        .map_err(|e| CliError::Usage(e.to_string()))?;
    data.timings.insert(
        format!("verify_{family_name}"),
        started.elapsed().as_millis(),
    );
    let ctx = data.pres.ctx();
    Ok(match verdict {
        Verdict::Pass => VerifyEntry {
            family: family_name.to_string(),
            verdict: "pass".to_string(),
            witness: None,
        },
        Verdict::Fail {
            relation,
            monomial,
            witness,
        } => VerifyEntry {
            family: family_name.to_string(),
            verdict: "fail".to_string(),
            witness: Some(WitnessEntry {
                relation,
                monomial: ctx.monomial_text(&monomial),
                value: witness.to_string(),
            }),
        },
    })
}

fn cmd_verify(common: &CommonArgs, family_arg: &str) -> Result<u8, CliError> {
    let mut data = prepare(common)?;
    let (ansatz, system) = constraint_step(&mut data)?;
    let family = load_family(family_arg, &ansatz)?;
    let family_label = if family_arg == "adams" || family_arg == "tau" {
        family_arg
    } else {
        "file"
    };
    let entry = verify_step(&mut data, &system, family_label, &family)?;
    let passed = entry.verdict == "pass";
    if common.json {
        let mut rep = base_report(&data);
        fill_constraint_report(&mut rep, &data, &system);
        rep.verdicts
            .insert(format!("verify_{family_label}"), entry.verdict.clone());
        rep.verify.push(entry);
        emit(common, report::to_json(&rep))?;
    } else {
        let mut text = format!("{}\n", entry.verdict);
        if let Some(w) = &entry.witness {
            text.push_str(&format!(
                "witness: {} @ {} = {}\n",
                w.relation, w.monomial, w.value
            ));
        }
        emit(common, text)?;
    }
    Ok(if passed { EXIT_OK } else { EXIT_FAILURE })
}

/// The full pipeline for one case; returns the filled report and whether
/// every verdict passed.
fn run_case_report(common: &CommonArgs, k: Option<&Rat>) -> Result<(RunReport, bool), CliError> {
    let mut data = prepare(common)?;
    let (ansatz, system) = constraint_step(&mut data)?;
    let mut rep = base_report(&data);
    if data.bound.is_none() {
        let count = data
            .basis
            .standard_monomial_count()
            .map_err(groebner_error)?;
        rep.standard_monomial_count = Some(match count {
            StandardCount::Finite(n) => n.to_string(),
            StandardCount::Infinite => "infinite".to_string(),
        });
    }
    fill_constraint_report(&mut rep, &data, &system);

    let mut all_passed = true;
    let adams = adams_family(&ansatz);
    let entry = verify_step(&mut data, &system, "adams", &adams)?;
    all_passed &= entry.verdict == "pass";
    rep.verdicts
        .insert("verify_adams".to_string(), entry.verdict.clone());
    rep.verify.push(entry);

    if let Ok(tau) = tau_family(&ansatz) {
        let entry = verify_step(&mut data, &system, "tau", &tau)?;
        all_passed &= entry.verdict == "pass";
        rep.verdicts
            .insert("verify_tau".to_string(), entry.verdict.clone());
        rep.verify.push(entry);
    }

    if let Some(p) = k {
        let (entry, classification) = solve_step(&mut data, &ansatz, &system, p)?;
        all_passed &= matches!(
            classification,
            Classification::Adams | Classification::AdamsOrTau
        );
        rep.verdicts.insert(
            "classification".to_string(),
            classification.as_str().to_string(),
        );
        rep.solve = Some(entry);
    }
    rep.timings_ms = data.timings.clone();
    Ok((rep, all_passed))
}

fn render_report_text(rep: &RunReport) -> String {
    let mut text = String::new();
    text.push_str(&format!("case {} (sha256 {})\n", rep.case.name, rep.case.sha256));
    text.push_str(&format!(
        "order: {} {}\n",
        rep.order.kind,
        rep.order.precedence.join(" > ")
    ));
    match rep.truncation_bound {
        Some(d) => text.push_str(&format!("truncation bound: {d}\n")),
        None => text.push_str("truncation bound: none\n"),
    }
    text.push_str(&format!("basis ({} elements):\n", rep.groebner_basis.len()));
    for line in &rep.groebner_basis {
        text.push_str(&format!("  {line}\n"));
    }
    if let Some(count) = &rep.standard_monomial_count {
        text.push_str(&format!("standard monomials: {count}\n"));
    }
    text.push_str(&format!("residues ({}):\n", rep.residues.len()));
    for r in &rep.residues {
        if r.terms.is_empty() {
            text.push_str(&format!("  {}: 0\n", r.relation));
        } else {
            text.push_str(&format!("  {}:\n", r.relation));
            for t in &r.terms {
                text.push_str(&format!("    [{}] {}\n", t.monomial, t.coefficient));
            }
        }
    }
    text.push_str(&format!("constraints ({}):\n", rep.constraints.len()));
    for c in &rep.constraints {
        text.push_str(&format!("  {} @ {}: {}\n", c.relation, c.monomial, c.polynomial));
    }
    for v in &rep.verify {
        text.push_str(&format!("verify {}: {}\n", v.family, v.verdict));
        if let Some(w) = &v.witness {
            text.push_str(&format!(
                "  witness: {} @ {} = {}\n",
                w.relation, w.monomial, w.value
            ));
        }
    }
    if let Some(s) = &rep.solve {
        text.push_str(&format!("solve at k = {}:\n", s.k));
        for point in &s.points {
            let fields: Vec<String> = point.iter().map(|(n, v)| format!("{n} = {v}")).collect();
            text.push_str(&format!("  point: {}\n", fields.join(", ")));
        }
        for r in &s.residuals {
            text.push_str(&format!("  residual: {r}\n"));
        }
        text.push_str(&format!("  classification: {}\n", s.classification));
    }
    text
}

fn cmd_report(common: &CommonArgs, all: bool, k: Option<&str>) -> Result<u8, CliError> {
    let p = k.map(parse_k).transpose()?;
    if all {
        let mut reports = Vec::new();
        let mut all_passed = true;
        for name in CATALOG_NAMES {
            let case_common = CommonArgs {
                case: Some(name.to_string()),
                input: None,
                order: common.order.clone(),
                truncate: common.truncate.clone(),
                max_pairs: common.max_pairs,
                max_terms: common.max_terms,
                json: common.json,
                out: None,
            };
            let (rep, passed) = run_case_report(&case_common, p.as_ref())?;
            all_passed &= passed;
            reports.push(rep);
        }
        if common.json {
            emit(common, report::to_json(&reports))?;
        } else {
            let text: Vec<String> = reports.iter().map(render_report_text).collect();
            emit(common, text.join("\n"))?;
        }
        Ok(if all_passed { EXIT_OK } else { EXIT_FAILURE })
    } else {
        let (rep, passed) = run_case_report(common, p.as_ref())?;
        if common.json {
            emit(common, report::to_json(&rep))?;
        } else {
            emit(common, render_report_text(&rep))?;
        }
        Ok(if passed { EXIT_OK } else { EXIT_FAILURE })
    }
}
