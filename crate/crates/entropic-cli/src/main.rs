//! Command-line front end for the prover and the region toolkit.
//!
//! Exit codes: `0` proved / valid / achievable, `1` disproved / invalid /
//! not achievable, `2` unknown (including "not implied by the cone", which
//! leaves validity open), `64` usage or parse errors.

mod problemfile;

use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand};

use entropic::classical::{
    amgm_member, amgm_witness, cs_member, cs_witness, markov_member, markov_witness, AmgmPoint,
    CsPoint, MarkovMembership, MarkovPoint, RegionError, Witness,
};
use entropic::cone::{ConstraintOrigin, ConstraintRow};
use entropic::linform::LinForm;
use entropic::models::SearchOptions;
use entropic::parser::{parse_ci, parse_statement, Statement, VarTable};
use entropic::prover::{
    disprove, implies, verify, Augment, Certificate, CondIndep, ImplicationVerdict,
    ImpliesOptions, Problem, Ray, Verdict, VerifyOptions,
};
use entropic::rational::{parse_rat, Rat};
use entropic::translate::{
    to_group_inequality, to_kolmogorov, to_minor_inequality, TranslateError,
};

const EXIT_TRUE: u8 = 0;
const EXIT_FALSE: u8 = 1;
const EXIT_UNKNOWN: u8 = 2;
const EXIT_USAGE: u8 = 64;

#[derive(Parser)]
#[command(
    name = "entropic",
    about = "Prove entropy inequalities over the Shannon cone, search for counterexample \
             distributions, translate inequalities into group/minor/Kolmogorov forms, and \
             construct witnesses for classical achievable regions.",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide an inequality over the (optionally constrained) Shannon cone.
    Prove(ProveArgs),
    /// Search for a distribution violating an inequality.
    Disprove(DisproveArgs),
    /// Decide a conditional-independence implication.
    Implies(ImpliesArgs),
    /// Render the group / principal-minor / Kolmogorov form.
    Translate(TranslateArgs),
    /// Construct an achievability witness for a classical region point.
    Witness(WitnessArgs),
    /// Classify a point against a classical region.
    Region(RegionArgs),
    /// Run a problem file (vars / assume / prove|disprove / options).
    Solve(SolveArgs),
}

#[derive(Args)]
struct ProveArgs {
    /// Inequality or equality statement, e.g. "I(X1;X2) >= 0".
    #[arg(allow_hyphen_values = true)]
    expr: String,
    /// Equality assumptions, repeatable.
    #[arg(long = "assume")]
    assume: Vec<String>,
    /// Augment the cone ("zy98").
    #[arg(long)]
    augment: Option<String>,
    /// Comma-separated variable declaration; makes parsing strict.
    #[arg(long)]
    vars: Option<String>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct DisproveArgs {
    #[arg(allow_hyphen_values = true)]
    expr: String,
    #[arg(long = "assume")]
    assume: Vec<String>,
    /// Alphabet sizes: a single size for all variables or a comma list.
    #[arg(long)]
    alphabet: Option<String>,
    /// Number of search restarts.
    #[arg(long)]
    budget: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    /// Parallel search workers.
    #[arg(long)]
    jobs: Option<usize>,
    #[arg(long)]
    vars: Option<String>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ImpliesArgs {
    /// Premise CIs, e.g. "I(X1;X2)" or "I(X1;X3|X2) = 0"; repeatable.
    #[arg(long = "premise", required = true)]
    premises: Vec<String>,
    #[arg(long)]
    conclusion: String,
    #[arg(long)]
    augment: Option<String>,
    #[arg(long)]
    alphabet: Option<String>,
    #[arg(long)]
    budget: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    jobs: Option<usize>,
    #[arg(long)]
    vars: Option<String>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
#[command(group(ArgGroup::new("kind").required(true).args(["group", "minor", "kolmogorov"])))]
struct TranslateArgs {
    #[arg(allow_hyphen_values = true)]
    expr: String,
    #[arg(long)]
    group: bool,
    #[arg(long)]
    minor: bool,
    #[arg(long)]
    kolmogorov: bool,
    #[arg(long)]
    vars: Option<String>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct WitnessArgs {
    /// Region family: amgm | markov | cs.
    family: String,
    /// Point coordinates: "a g" | "c p m" | "x y z dim".
    point: Vec<String>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct RegionArgs {
    family: String,
    point: Vec<String>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct SolveArgs {
    file: String,
    #[arg(long)]
    json: bool,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // help/version are not usage errors
            use clap::error::ErrorKind;
            let kind = err.kind();
            let _ = err.print();
            return if matches!(kind, ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                ExitCode::from(EXIT_TRUE)
            } else {
                ExitCode::from(EXIT_USAGE)
            };
        }
    };
    let code = match cli.command {
        Command::Prove(args) => run_prove(args),
        Command::Disprove(args) => run_disprove(args),
        Command::Implies(args) => run_implies(args),
        Command::Translate(args) => run_translate(args),
        Command::Witness(args) => run_witness(args),
        Command::Region(args) => run_region(args),
        Command::Solve(args) => run_solve(args),
    };
    match code {
        Ok(code) => ExitCode::from(code),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

// ------------------------------------------------------------- utilities --

fn make_table(vars: &Option<String>) -> Result<VarTable, String> {
    match vars {
        None => Ok(VarTable::auto()),
        Some(list) => {
            let names: Vec<&str> = list
                .split([',', ' '])
                .filter(|s| !s.is_empty())
                .collect();
            VarTable::with_declarations(&names).map_err(|e| e.to_string())
        }
    }
}

fn parse_goal(expr: &str, table: &mut VarTable) -> Result<Statement, String> {
    let text = expr.trim();
    let statement = if text.contains(['<', '>', '=']) {
        text.to_string()
    } else {
        format!("{text} >= 0")
    };
    parse_statement(&statement, table).map_err(|e| e.to_string())
}

fn parse_assumptions(
    texts: &[String],
    table: &mut VarTable,
) -> Result<Vec<(String, Statement)>, String> {
    let mut out = Vec::new();
    for text in texts {
        let stmt = parse_statement(text, table).map_err(|e| format!("--assume {text:?}: {e}"))?;
        if !stmt.is_equality() {
            return Err(format!("--assume {text:?}: assumptions must be equalities"));
        }
        out.push((text.clone(), stmt));
    }
    Ok(out)
}

fn lower_assumptions(
    assumptions: &[(String, Statement)],
    n: u8,
) -> Result<Vec<ConstraintRow>, String> {
    assumptions
        .iter()
        .map(|(text, stmt)| {
            let form = stmt.lower(n).map_err(|e| e.to_string())?;
            Ok(ConstraintRow {
                form,
                origin: ConstraintOrigin::Statement(text.clone()),
            })
        })
        .collect()
}

fn parse_augment(flag: &Option<String>) -> Result<Augment, String> {
    match flag.as_deref() {
        None => Ok(Augment::None),
        Some("zy98") => Ok(Augment::Zy98),
        Some(other) => Err(format!("unknown augmentation `{other}` (expected `zy98`)")),
    }
}

fn parse_alphabet(flag: &Option<String>, n: u8) -> Result<Option<Vec<usize>>, String> {
    let Some(text) = flag else { return Ok(None) };
    let parts: Vec<usize> = text
        .split(',')
        .map(|t| t.trim().parse::<usize>())
        .collect::<Result<_, _>>()
        .map_err(|_| format!("bad --alphabet `{text}`"))?;
    if parts.iter().any(|&k| k < 1) {
        return Err("alphabet sizes must be at least 1".into());
    }
    match parts.len() {
        1 => Ok(Some(vec![parts[0]; n as usize])),
        len if len == n as usize => Ok(Some(parts)),
        _ => Err(format!(
            "--alphabet needs one size or {} comma-separated sizes",
            n
        )),
    }
}

fn search_options(
    alphabet: Option<Vec<usize>>,
    budget: Option<usize>,
    seed: Option<u64>,
    jobs: Option<usize>,
) -> SearchOptions {
    SearchOptions {
        alphabets: alphabet,
        restarts: budget.unwrap_or_else(|| SearchOptions::default().restarts),
        sweeps: SearchOptions::default().sweeps,
        seed: seed.unwrap_or_else(|| SearchOptions::default().seed),
        jobs: jobs.unwrap_or(1).max(1),
    }
}

fn rat_arg(text: &str, what: &str) -> Result<Rat, String> {
    parse_rat(text).ok_or_else(|| format!("{what}: expected a rational, got `{text}`"))
}

fn ray_json(ray: &Ray) -> serde_json::Value {
    serde_json::Value::Array(
        ray.coords()
            .iter()
            .map(|c| serde_json::json!(c.to_string()))
            .collect(),
    )
}

fn pmf_text(pmf: &entropic::models::JointPMF) -> String {
    let mut buf = Vec::new();
    pmf.write_to(&mut buf).expect("in-memory write");
    String::from_utf8(buf).expect("utf8 pmf text")
}

fn pmf_json(pmf: &entropic::models::JointPMF) -> serde_json::Value {
    serde_json::json!({
        "alphabets": pmf.alphabets(),
        "probs": pmf.probs(),
    })
}

fn emit(json: bool, value: serde_json::Value, human: String) {
    if json {
        println!("{value}");
    } else {
        print!("{human}");
        if !human.ends_with('\n') {
            println!();
        }
    }
}

// -------------------------------------------------------------- commands --

struct ProveOutcome {
    code: u8,
    verdict: &'static str,
    certificate: Option<(Certificate, Problem)>,
    ray: Option<Ray>,
}

fn prove_form(
    b: LinForm,
    constraints: Vec<ConstraintRow>,
    augment: Augment,
) -> Result<ProveOutcome, String> {
    let problem = Problem::shannon(b, constraints, VerifyOptions { augment })
        .map_err(|e| e.to_string())?;
    let verdict = verify(&problem).map_err(|e| e.to_string())?;
    Ok(match verdict {
        Verdict::Proved { certificate } => ProveOutcome {
            code: EXIT_TRUE,
            verdict: "proved",
            certificate: Some((certificate, problem)),
            ray: None,
        },
        Verdict::ProvedAugmented { certificate } => ProveOutcome {
            code: EXIT_TRUE,
            verdict: "proved_augmented",
            certificate: Some((certificate, problem)),
            ray: None,
        },
        Verdict::NotImpliedByCone { ray } => ProveOutcome {
            code: EXIT_UNKNOWN,
            verdict: "not_implied_by_cone",
            certificate: None,
            ray: Some(ray),
        },
        Verdict::Disproved { .. } | Verdict::Unknown => unreachable!("verify never returns these"),
    })
}

fn render_prove(json: bool, outcomes: Vec<ProveOutcome>) -> u8 {
    let code = outcomes.iter().map(|o| o.code).max().unwrap_or(EXIT_TRUE);
    if json {
        let mut value = serde_json::json!({
            "verdict": overall_verdict(&outcomes),
        });
        let certs: Vec<serde_json::Value> = outcomes
            .iter()
            .filter_map(|o| o.certificate.as_ref().map(|(c, p)| c.to_json(p)))
            .collect();
        if !certs.is_empty() {
            value["certificate"] = if certs.len() == 1 {
                certs.into_iter().next().unwrap()
            } else {
                serde_json::Value::Array(certs)
            };
        }
        if let Some(ray) = outcomes.iter().find_map(|o| o.ray.as_ref()) {
            value["ray"] = ray_json(ray);
        }
        println!("{value}");
    } else {
        let mut human = format!("verdict: {}\n", overall_verdict(&outcomes));
        for o in &outcomes {
            if let Some((certificate, problem)) = &o.certificate {
                human.push_str("certificate:\n");
                human.push_str(&certificate.render(problem));
            }
            if let Some(ray) = &o.ray {
                human.push_str(&format!("ray: {ray}\n"));
                human.push_str(
                    "the inequality is not implied by the cone; it may still be valid\n",
                );
            }
        }
        print!("{human}");
    }
    code
}

fn overall_verdict(outcomes: &[ProveOutcome]) -> &'static str {
    if outcomes.iter().any(|o| o.verdict == "not_implied_by_cone") {
        "not_implied_by_cone"
    } else if outcomes.iter().any(|o| o.verdict == "proved_augmented") {
        "proved_augmented"
    } else {
        "proved"
    }
}

fn run_prove(args: ProveArgs) -> Result<u8, String> {
    let augment = parse_augment(&args.augment)?;
    let mut table = make_table(&args.vars)?;
    let goal = parse_goal(&args.expr, &mut table)?;
    let assumptions = parse_assumptions(&args.assume, &mut table)?;
    let n = table.n();
    let constraints = lower_assumptions(&assumptions, n)?;
    let b = goal.lower(n).map_err(|e| e.to_string())?;

    // an equality goal is the pair of opposite inequalities
    let targets = if goal.is_equality() {
        vec![b.clone(), -&b]
    } else {
        vec![b]
    };
    let outcomes = targets
        .into_iter()
        .map(|t| prove_form(t, constraints.clone(), augment))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(render_prove(args.json, outcomes))
}

fn run_disprove(args: DisproveArgs) -> Result<u8, String> {
    let mut table = make_table(&args.vars)?;
    let goal = parse_goal(&args.expr, &mut table)?;
    if goal.is_equality() {
        return Err("disprove needs an inequality goal".into());
    }
    let assumptions = parse_assumptions(&args.assume, &mut table)?;
    let n = table.n();
    let constraints = lower_assumptions(&assumptions, n)?;
    let b = goal.lower(n).map_err(|e| e.to_string())?;
    let opts = search_options(
        parse_alphabet(&args.alphabet, n)?,
        args.budget,
        args.seed,
        args.jobs,
    );
    match disprove(&b, &constraints, &opts) {
        Verdict::Disproved { witness, value } => {
            emit(
                args.json,
                serde_json::json!({
                    "verdict": "disproved",
                    "witness": { "pmf": pmf_json(&witness), "value": value },
                }),
                format!(
                    "verdict: disproved\nvalue: {value} bits\nwitness pmf:\n{}",
                    pmf_text(&witness)
                ),
            );
            Ok(EXIT_FALSE)
        }
        _ => {
            emit(
                args.json,
                serde_json::json!({ "verdict": "unknown" }),
                "verdict: unknown (no counterexample within budget)".to_string(),
            );
            Ok(EXIT_UNKNOWN)
        }
    }
}

fn run_implies(args: ImpliesArgs) -> Result<u8, String> {
    let mut table = make_table(&args.vars)?;
    let mut premise_sets = Vec::new();
    for text in &args.premises {
        premise_sets
            .push(parse_ci(text, &mut table).map_err(|e| format!("--premise {text:?}: {e}"))?);
    }
    let conclusion_sets = parse_ci(&args.conclusion, &mut table)
        .map_err(|e| format!("--conclusion {:?}: {e}", args.conclusion))?;
    let n = table.n();
    let premises: Vec<CondIndep> = premise_sets
        .into_iter()
        .map(|(l, r, c)| CondIndep::new(l, r, c))
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    let conclusion = CondIndep::new(conclusion_sets.0, conclusion_sets.1, conclusion_sets.2)
        .map_err(|e| e.to_string())?;
    let opts = ImpliesOptions {
        augment: parse_augment(&args.augment)?,
        search: search_options(
            parse_alphabet(&args.alphabet, n)?,
            args.budget,
            args.seed,
            args.jobs,
        ),
    };
    match implies(n, &premises, &conclusion, &opts).map_err(|e| e.to_string())? {
        ImplicationVerdict::Implied { certificate } => {
            // render against the problem the implication was decided on
            let problem = Problem::shannon(
                -&conclusion.mutual_form(n).map_err(|e| e.to_string())?,
                premises
                    .iter()
                    .map(|ci| ci.constraint(n))
                    .collect::<Result<_, _>>()
                    .map_err(|e| e.to_string())?,
                VerifyOptions {
                    augment: opts.augment,
                },
            )
            .map_err(|e| e.to_string())?;
            emit(
                args.json,
                serde_json::json!({
                    "verdict": "implied",
                    "certificate": certificate.to_json(&problem),
                }),
                format!(
                    "verdict: implied\ncertificate:\n{}",
                    certificate.render(&problem)
                ),
            );
            Ok(EXIT_TRUE)
        }
        ImplicationVerdict::NotImplied {
            witness,
            mutual_information,
        } => {
            emit(
                args.json,
                serde_json::json!({
                    "verdict": "not_implied",
                    "witness": {
                        "pmf": pmf_json(&witness),
                        "conclusion_mutual_information": mutual_information,
                    },
                }),
                format!(
                    "verdict: not implied\nconclusion mutual information: {mutual_information} \
                     bits\nwitness pmf:\n{}",
                    pmf_text(&witness)
                ),
            );
            Ok(EXIT_FALSE)
        }
        ImplicationVerdict::Unknown => {
            emit(
                args.json,
                serde_json::json!({ "verdict": "unknown" }),
                "verdict: unknown (Shannon-level test inconclusive, no counterexample found)"
                    .to_string(),
            );
            Ok(EXIT_UNKNOWN)
        }
    }
}

fn run_translate(args: TranslateArgs) -> Result<u8, String> {
    let mut table = make_table(&args.vars)?;
    let goal = parse_goal(&args.expr, &mut table)?;
    if goal.is_equality() {
        return Err("translate needs an inequality".into());
    }
    let b = goal.lower(table.n()).map_err(|e| e.to_string())?;
    let result = if args.group {
        Ok(to_group_inequality(&b))
    } else if args.kolmogorov {
        Ok(to_kolmogorov(&b))
    } else {
        to_minor_inequality(&b)
    };
    match result {
        Ok(t) => {
            emit(
                args.json,
                serde_json::json!({ "verdict": "translated", "translation": t.to_json() }),
                format!("{}\n", t.text),
            );
            Ok(EXIT_TRUE)
        }
        Err(e @ TranslateError::Unbalanced { .. }) => {
            emit(
                args.json,
                serde_json::json!({ "verdict": "unbalanced", "error": e.to_string() }),
                format!("{e}\n"),
            );
            Ok(EXIT_FALSE)
        }
        Err(e) => Err(e.to_string()),
    }
}

fn point_args<const N: usize>(point: &[String], names: [&str; N]) -> Result<[Rat; N], String> {
    if point.len() != N {
        return Err(format!(
            "expected {N} coordinates ({}), got {}",
            names.join(" "),
            point.len()
        ));
    }
    let mut out = Vec::with_capacity(N);
    for (text, name) in point.iter().zip(names) {
        out.push(rat_arg(text, name)?);
    }
    Ok(out.try_into().expect("sized above"))
}

fn witness_human(w: &Witness) -> String {
    match w {
        Witness::Amgm { x, y } => format!("x = {x}\ny = {y}\n"),
        Witness::Markov { atoms } => {
            let mut s = String::from("atoms (value probability):\n");
            for (v, p) in atoms {
                s.push_str(&format!("{v} {p}\n"));
            }
            s
        }
        Witness::Cs { u, v } => {
            let fmt = |xs: &[entropic::classical::Scalar]| {
                let inner: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
                format!("[{}]", inner.join(", "))
            };
            format!("u = {}\nv = {}\n", fmt(u), fmt(v))
        }
    }
}

fn run_witness(args: WitnessArgs) -> Result<u8, String> {
    let result: Result<Witness, RegionError> = match args.family.as_str() {
        "amgm" => {
            let [a, g] = point_args(&args.point, ["a", "g"])?;
            amgm_witness(&AmgmPoint { a, g })
        }
        "markov" => {
            let [c, p, m] = point_args(&args.point, ["c", "p", "m"])?;
            markov_witness(&MarkovPoint { c, p, m })
        }
        "cs" => {
            if args.point.len() != 4 {
                return Err("expected coordinates: x y z dim".into());
            }
            let [x, y, z] = point_args(&args.point[..3], ["x", "y", "z"])?;
            let dim: u32 = args.point[3]
                .parse()
                .map_err(|_| format!("dim: expected an integer, got `{}`", args.point[3]))?;
            cs_witness(&CsPoint { x, y, z, dim })
        }
        other => return Err(format!("unknown region family `{other}`")),
    };
    match result {
        Ok(w) => {
            // `--json` prints the bare witness object
            emit(args.json, w.to_json(), witness_human(&w));
            Ok(EXIT_TRUE)
        }
        Err(e @ (RegionError::NotInRegion | RegionError::NotAchievable)) => {
            emit(
                args.json,
                serde_json::json!({ "verdict": "not_achievable", "error": e.to_string() }),
                format!("{e}\n"),
            );
            Ok(EXIT_FALSE)
        }
        Err(e) => Err(e.to_string()),
    }
}

fn run_region(args: RegionArgs) -> Result<u8, String> {
    let (verdict, code) = match args.family.as_str() {
        "amgm" => {
            let [a, g] = point_args(&args.point, ["a", "g"])?;
            if amgm_member(&AmgmPoint { a, g }) {
                ("achievable", EXIT_TRUE)
            } else {
                ("outside", EXIT_FALSE)
            }
        }
        "markov" => {
            let [c, p, m] = point_args(&args.point, ["c", "p", "m"])?;
            match markov_member(&MarkovPoint { c, p, m }).map_err(|e| e.to_string())? {
                MarkovMembership::Achievable => ("achievable", EXIT_TRUE),
                MarkovMembership::ExcludedBoundary => ("excluded_boundary", EXIT_FALSE),
                MarkovMembership::Outside => ("outside", EXIT_FALSE),
            }
        }
        "cs" => {
            if args.point.len() != 4 {
                return Err("expected coordinates: x y z dim".into());
            }
            let [x, y, z] = point_args(&args.point[..3], ["x", "y", "z"])?;
            let dim: u32 = args.point[3]
                .parse()
                .map_err(|_| format!("dim: expected an integer, got `{}`", args.point[3]))?;
            if cs_member(&CsPoint { x, y, z, dim }) {
                ("achievable", EXIT_TRUE)
            } else {
                ("outside", EXIT_FALSE)
            }
        }
        other => return Err(format!("unknown region family `{other}`")),
    };
    emit(
        args.json,
        serde_json::json!({ "verdict": verdict }),
        format!("{verdict}\n"),
    );
    Ok(code)
}

fn run_solve(args: SolveArgs) -> Result<u8, String> {
    let text = std::fs::read_to_string(&args.file).map_err(|e| format!("{}: {e}", args.file))?;
    let pf = problemfile::parse_problem_file(&text).map_err(|e| e.to_string())?;
    let n = pf.table.n();
    let constraints = lower_assumptions(&pf.assumptions, n)?;
    let b = pf.goal.lower(n).map_err(|e| e.to_string())?;
    match pf.goal_kind {
        problemfile::GoalKind::Prove => {
            let augment = if pf.augment_zy98 {
                Augment::Zy98
            } else {
                Augment::None
            };
            let targets = if pf.goal.is_equality() {
                vec![b.clone(), -&b]
            } else {
                vec![b]
            };
            let outcomes = targets
                .into_iter()
                .map(|t| prove_form(t, constraints.clone(), augment))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(render_prove(args.json, outcomes))
        }
        problemfile::GoalKind::Disprove => {
            let opts = search_options(pf.alphabet.clone(), pf.budget, pf.seed, None);
            match disprove(&b, &constraints, &opts) {
                Verdict::Disproved { witness, value } => {
                    emit(
                        args.json,
                        serde_json::json!({
                            "verdict": "disproved",
                            "witness": { "pmf": pmf_json(&witness), "value": value },
                        }),
                        format!(
                            "verdict: disproved\nvalue: {value} bits\nwitness pmf:\n{}",
                            pmf_text(&witness)
                        ),
                    );
                    Ok(EXIT_FALSE)
                }
                _ => {
                    emit(
                        args.json,
                        serde_json::json!({ "verdict": "unknown" }),
                        "verdict: unknown (no counterexample within budget)".to_string(),
                    );
                    Ok(EXIT_UNKNOWN)
                }
            }
        }
    }
}
