//! Batch front door: configuration, dispatch, reports.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use crate::domain::{build_domain, inner_witness, AnyDomain, Domain, DomainSpec, MapOrder};
use crate::error::Error;
use crate::ideal::{format_ideal, ideal_make, ideal_norm, ideal_to_json, FactorDomain, Ideal};
use crate::oracle::{
    agree_largest_stable, agree_sigma_delta_prime, brute_is_sigma_delta_prime,
    brute_largest_stable_deepening, brute_minimality_check, OracleBudget, OracleDomain,
    OracleLargest, OracleReport,
};
use crate::ore::ore_to_json;
use crate::prime::{
    classify_contraction, extend_and_falsify, is_sigma_delta_prime, largest_stable_ideal,
    minimal_primes_inner, validate_verdict, Verdict,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CONFIG: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;
pub const EXIT_PRECONDITION: i32 = 4;
pub const EXIT_BUDGET: i32 = 5;
pub const EXIT_DISAGREEMENT: i32 = 6;
pub const EXIT_IO: i32 = 1;

pub const DEFAULT_NORM_BOUND: u64 = 27;
pub const DEFAULT_BUDGET: u64 = 1000;
pub const DEFAULT_SAMPLES: u64 = 500;
/// Ceiling for the oracle when it has to look past `norm_bound`.
pub const ORACLE_LIMIT: u64 = 1_000_000;

pub const CONVENTION_NOTE: &str =
    "minimality ranges over nonzero (σ,δ)-primes; (0) never counts as a smaller one";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    CheckDomain,
    Classify,
    EnumerateMinimal,
    LargestStable,
    Verify,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::CheckDomain => "check-domain",
            Command::Classify => "classify",
            Command::EnumerateMinimal => "enumerate-minimal",
            Command::LargestStable => "largest-stable",
            Command::Verify => "verify",
        }
    }
}

#[derive(Debug, Clone, Default, Parser)]
#[command(
    name = "ore-prime",
    version,
    about = "Minimal primes of Ore extensions over Dedekind domains"
)]
pub struct Args {
    #[arg(long)]
    pub config: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub command: Option<Command>,
    /// Comma-separated generators in canonical element syntax.
    #[arg(long)]
    pub ideal: Option<String>,
    #[arg(long)]
    pub norm_bound: Option<u64>,
    #[arg(long)]
    pub budget: Option<u64>,
    #[arg(long)]
    pub samples: Option<u64>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
enum IdealField {
    One(String),
    Many(Vec<String>),
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct ConfigFile {
    domain: DomainSpec,
    command: Option<Command>,
    ideal: Option<IdealField>,
    norm_bound: Option<u64>,
    budget: Option<u64>,
    #[serde(alias = "sample_count")]
    samples: Option<u64>,
    seed: Option<u64>,
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub domain: DomainSpec,
    pub command: Command,
    pub ideal: Vec<String>,
    pub norm_bound: u64,
    pub budget: u64,
    pub sample_count: u64,
    pub seed: u64,
    pub out: Option<PathBuf>,
}

impl RunConfig {
    pub fn new(domain: DomainSpec, command: Command) -> Self {
        RunConfig {
            domain,
            command,
            ideal: Vec::new(),
            norm_bound: DEFAULT_NORM_BOUND,
            budget: DEFAULT_BUDGET,
            sample_count: DEFAULT_SAMPLES,
            seed: 0,
            out: None,
        }
    }
}

fn split_ideal(s: &str) -> Vec<String> {
    s.split(',')
        .map(str::trim)
        .filter(|x| !x.is_empty())
        .map(String::from)
        .collect()
}

/// Reads the config file named in `args` and applies flag overrides.
pub fn load_config(args: &Args) -> Result<RunConfig, String> {
    let path = args.config.as_ref().ok_or("--config is required")?;
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    parse_config(&text, args)
}

/// Parses config text and applies flag overrides.
pub fn parse_config(text: &str, args: &Args) -> Result<RunConfig, String> {
    let file: ConfigFile = toml::from_str(text).map_err(|e| e.to_string())?;
    let command = args
        .command
        .or(file.command)
        .ok_or("no command given in the config or on the command line")?;
    let ideal = match (&args.ideal, file.ideal) {
        (Some(s), _) => split_ideal(s),
        (None, Some(IdealField::One(s))) => split_ideal(&s),
        (None, Some(IdealField::Many(v))) => v,
        (None, None) => Vec::new(),
    };
    Ok(RunConfig {
        domain: file.domain,
        command,
        ideal,
        norm_bound: args
            .norm_bound
            .or(file.norm_bound)
            .unwrap_or(DEFAULT_NORM_BOUND),
        budget: args.budget.or(file.budget).unwrap_or(DEFAULT_BUDGET),
        sample_count: args.samples.or(file.samples).unwrap_or(DEFAULT_SAMPLES),
        seed: args.seed.or(file.seed).unwrap_or(0),
        out: args.out.clone().or(file.out),
    })
}

/// Exit status and the report to write.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub exit_code: i32,
    pub report: Value,
}

pub fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::Parse(_) => EXIT_CONFIG,
        Error::InvalidDomain(_) => EXIT_DOMAIN,
        Error::NotApplicable(_) | Error::Precondition(_) | Error::OutOfOracleBudget(_) => {
            EXIT_PRECONDITION
        }
        Error::FactorBudget(_) | Error::BudgetExhausted { .. } => EXIT_BUDGET,
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::Parse(_) => "parse",
        Error::InvalidDomain(_) => "invalid-domain",
        Error::NotApplicable(_) => "not-applicable",
        Error::FactorBudget(_) => "factor-budget",
        Error::Precondition(_) => "precondition",
        Error::BudgetExhausted { .. } => "budget-exhausted",
        Error::OutOfOracleBudget(_) => "out-of-oracle-budget",
    }
}

fn status_name(code: i32) -> &'static str {
    match code {
        EXIT_OK => "ok",
        EXIT_CONFIG => "config-error",
        EXIT_DOMAIN => "invalid-domain",
        EXIT_PRECONDITION => "precondition",
        EXIT_BUDGET => "undecided",
        EXIT_DISAGREEMENT => "oracle-disagreement",
        _ => "io-error",
    }
}

fn envelope(command: &str, inputs: Value, code: i32, body: (&str, Value)) -> Value {
    let mut m = Map::new();
    m.insert("tool".into(), json!("ore-prime"));
    m.insert("version".into(), json!(env!("CARGO_PKG_VERSION")));
    m.insert("command".into(), json!(command));
    m.insert("inputs".into(), inputs);
    m.insert("status".into(), json!(status_name(code)));
    m.insert("exit_code".into(), json!(code));
    m.insert(body.0.into(), body.1);
    Value::Object(m)
}

/// Report for a run that never got a valid configuration.
pub fn config_error_report(message: &str) -> Outcome {
    Outcome {
        exit_code: EXIT_CONFIG,
        report: envelope(
            "unknown",
            Value::Null,
            EXIT_CONFIG,
            ("error", json!({"kind": "config", "message": message})),
        ),
    }
}

fn base_inputs(cfg: &RunConfig, spec: &DomainSpec) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert(
        "domain".into(),
        serde_json::to_value(spec).expect("serializable"),
    );
    m.insert("norm_bound".into(), json!(cfg.norm_bound));
    m.insert("budget".into(), json!(cfg.budget));
    m.insert("samples".into(), json!(cfg.sample_count));
    m.insert("seed".into(), json!(cfg.seed));
    m
}

struct Run<'a> {
    cfg: &'a RunConfig,
    inputs: Map<String, Value>,
}

type Step = Result<(i32, Value), Error>;

/// Runs one configuration.
pub fn execute(cfg: &RunConfig) -> Outcome {
    let mut run = Run {
        cfg,
        inputs: base_inputs(cfg, &cfg.domain),
    };
    let name = cfg.command.name();
    let step = build_domain(&cfg.domain).and_then(|dom| {
        run.inputs.insert(
            "domain".into(),
            serde_json::to_value(dom.spec()).expect("serializable"),
        );
        dispatch(&dom, &mut run)
    });
    let inputs = Value::Object(run.inputs);
    match step {
        Ok((code, result)) => Outcome {
            exit_code: code,
            report: envelope(name, inputs, code, ("result", result)),
        },
        Err(e) => {
            let code = exit_code_for(&e);
            Outcome {
                exit_code: code,
                report: envelope(
                    name,
                    inputs,
                    code,
                    (
                        "error",
                        json!({"kind": error_kind(&e), "message": e.to_string()}),
                    ),
                ),
            }
        }
    }
}

fn dispatch(dom: &AnyDomain, run: &mut Run) -> Step {
    macro_rules! with_oracle {
        ($d:expr) => {
            match run.cfg.command {
                Command::CheckDomain => check_domain($d),
                Command::Classify => classify($d, run, Some(oracle_classify)),
                Command::EnumerateMinimal => enumerate_minimal($d, run, Some(oracle_minimal)),
                Command::LargestStable => largest_stable($d, run, Some(oracle_largest)),
                Command::Verify => verify($d, run),
            }
        };
    }
    match dom {
        AnyDomain::Gaussian(d) => with_oracle!(d),
        AnyDomain::FiniteField(d) => with_oracle!(d),
        AnyDomain::Rational(d) => match run.cfg.command {
            Command::CheckDomain => check_domain(d),
            Command::Classify => classify(d, run, None),
            Command::EnumerateMinimal => enumerate_minimal(d, run, None),
            Command::LargestStable => largest_stable(d, run, None),
            Command::Verify => Err(Error::NotApplicable(
                "no definitional oracle exists over Q[t]".into(),
            )),
        },
    }
}

fn order_json(o: MapOrder) -> Value {
    match o {
        MapOrder::Finite(n) => json!(n),
        MapOrder::Infinite => json!("infinite"),
    }
}

fn check_domain<D: Domain>(dom: &D) -> Step {
    let inner = match inner_witness(dom) {
        Ok(Some(a)) => json!({"inner": true, "witness": dom.format(&a)}),
        Ok(None) => json!({"inner": false}),
        Err(Error::NotApplicable(m)) => json!({"inner": false, "note": m}),
        Err(e) => return Err(e),
    };
    Ok((
        EXIT_OK,
        json!({
            "spec": serde_json::to_value(dom.spec()).expect("serializable"),
            "sigma_identity": dom.sigma_is_identity(),
            "sigma_order": order_json(dom.sigma_order()),
            "delta_zero": dom.delta_is_zero(),
            "derivation": inner,
        }),
    ))
}

fn target_ideal<D: FactorDomain>(dom: &D, run: &mut Run) -> Result<Ideal<D::Elem>, Error> {
    if run.cfg.ideal.is_empty() {
        return Err(Error::Precondition("this command needs --ideal".into()));
    }
    let gens = run
        .cfg
        .ideal
        .iter()
        .map(|s| dom.parse(s))
        .collect::<Result<Vec<_>, _>>()?;
    let i = ideal_make(dom, &gens)?;
    run.inputs.insert(
        "ideal".into(),
        json!({
            "generators": gens.iter().map(|g| dom.format(g)).collect::<Vec<_>>(),
            "ideal": ideal_to_json(dom, &i),
            "text": format_ideal(dom, &i),
        }),
    );
    Ok(i)
}

fn in_range<D: FactorDomain>(dom: &D, i: &Ideal<D::Elem>, bound: u64) -> bool {
    ideal_norm(dom, i).is_some_and(|n| n <= bound.into())
}

/// Oracle cross-check: `(agree, details)` or `None` when out of range.
type OracleHook<D> =
    fn(&D, &RunConfig, &Ideal<<D as Domain>::Elem>, &Value) -> Option<(bool, Value)>;

fn oracle_budget(bound: u64) -> OracleBudget {
    let cap = (u64::BITS - bound.max(2).leading_zeros()).max(1);
    OracleBudget::new(bound).with_max_exponent(cap)
}

fn oracle_status(hook: Option<(bool, Value)>) -> (i32, Value) {
    match hook {
        Some((true, v)) => (
            EXIT_OK,
            json!({"status": "oracle-confirmed", "agree": true, "checks": v}),
        ),
        Some((false, v)) => (
            EXIT_DISAGREEMENT,
            json!({"status": "oracle-disagreement", "agree": false, "checks": v}),
        ),
        None => (EXIT_OK, json!({"status": "fast-path-only"})),
    }
}

fn verdict_json<D: Domain>(dom: &D, v: &Verdict<D::Elem>) -> Value {
    let mut m = Map::new();
    m.insert("verdict".into(), json!(v.name()));
    match v {
        Verdict::ExtensionMinimal { p } | Verdict::ContractionMinimal { p } => {
            m.insert("p".into(), ideal_to_json(dom, p));
        }
        Verdict::NotMinimal { witness } => {
            m.insert("witness".into(), ideal_to_json(dom, witness));
            m.insert("witness_text".into(), json!(format_ideal(dom, witness)));
        }
        Verdict::OutsideDichotomy { reason } => {
            m.insert("reason".into(), json!(reason));
        }
        Verdict::Undecided { budget, what } => {
            m.insert("budget".into(), json!(budget));
            m.insert("reason".into(), json!(what));
        }
    }
    Value::Object(m)
}

fn classify<D: FactorDomain>(dom: &D, run: &mut Run, oracle: Option<OracleHook<D>>) -> Step {
    let p = target_ideal(dom, run)?;
    let v = classify_contraction(dom, &p, run.cfg.budget)?;
    let mut result = verdict_json(dom, &v);
    let validated = validate_verdict(dom, &p, &v, run.cfg.budget);
    let m = result.as_object_mut().expect("object");
    m.insert("ideal".into(), json!(format_ideal(dom, &p)));
    m.insert("witness_validated".into(), json!(validated.is_ok()));
    if let Err(e) = &validated {
        m.insert("validation_error".into(), json!(e));
    }
    m.insert("convention".into(), json!(CONVENTION_NOTE));
    if let Verdict::Undecided { .. } = v {
        m.insert("oracle".into(), json!({"status": "not-run"}));
        m.insert("status_note".into(), json!("budget exhausted; no verdict"));
        return Ok((EXIT_BUDGET, result));
    }
    let (code, o) = oracle_status(oracle.and_then(|h| h(dom, run.cfg, &p, &result)));
    result["oracle"] = o;
    let code = if validated.is_err() {
        EXIT_DISAGREEMENT
    } else {
        code
    };
    Ok((code, result))
}

fn oracle_classify<D: OracleDomain>(
    dom: &D,
    cfg: &RunConfig,
    p: &Ideal<D::Elem>,
    result: &Value,
) -> Option<(bool, Value)> {
    if !in_range(dom, p, cfg.norm_bound) {
        return None;
    }
    let ob = oracle_budget(cfg.norm_bound);
    let fast = is_sigma_delta_prime(dom, p, cfg.budget).ok()?;
    let brute = brute_is_sigma_delta_prime(dom, p, &ob).ok()?;
    let mut checks = vec![json!({"check": "sigma-delta-prime", "fast": fast, "oracle": brute})];
    let mut agree = fast == brute;
    if let Some(w) = result.get("witness") {
        // every NotMinimal witness is a nonzero stable ideal strictly inside p
        let w = crate::ideal::ideal_from_json(dom, w).ok()?;
        let inside = w != *p && p.contains(&w);
        let start = oracle_budget(cfg.norm_bound);
        let top = if let Some(q) = p.as_prime() {
            brute_largest_stable_deepening(dom, &Ideal::prime(q.clone()), &start, ORACLE_LIMIT).ok()
        } else {
            None
        };
        let ok = match &top {
            Some(OracleLargest::Found(m)) => inside && m.contains(&w),
            _ => inside,
        };
        agree &= ok;
        checks.push(json!({"check": "witness-inside", "ok": ok}));
    }
    Some((agree, Value::Array(checks)))
}

fn enumerate_minimal<D: FactorDomain>(
    dom: &D,
    run: &mut Run,
    oracle: Option<OracleHook<D>>,
) -> Step {
    let mp = minimal_primes_inner(dom, run.cfg.norm_bound)?;
    let mut code = EXIT_OK;
    let mut primes = Vec::new();
    for p in &mp.primes {
        let fast = is_sigma_delta_prime(dom, p, run.cfg.budget)?;
        let (c, o) = oracle_status(oracle.and_then(|h| h(dom, run.cfg, p, &Value::Null)));
        if c != EXIT_OK || !fast {
            code = EXIT_DISAGREEMENT;
        }
        primes.push(json!({
            "ideal": ideal_to_json(dom, p),
            "text": format_ideal(dom, p),
            "sigma_delta_prime": fast,
            "oracle": o,
        }));
    }
    Ok((
        code,
        json!({"minimal_primes": primes, "count": mp.primes.len(), "note": mp.note}),
    ))
}

fn oracle_minimal<D: OracleDomain>(
    dom: &D,
    cfg: &RunConfig,
    p: &Ideal<D::Elem>,
    _: &Value,
) -> Option<(bool, Value)> {
    if !in_range(dom, p, cfg.norm_bound) {
        return None;
    }
    let ob = oracle_budget(cfg.norm_bound);
    let prime = brute_is_sigma_delta_prime(dom, p, &ob).ok()?;
    let minimal = prime && brute_minimality_check(dom, p, &ob).ok()?;
    Some((
        prime && minimal,
        json!({"sigma_delta_prime": prime, "minimal": minimal}),
    ))
}

fn largest_stable<D: FactorDomain>(dom: &D, run: &mut Run, oracle: Option<OracleHook<D>>) -> Step {
    let p = target_ideal(dom, run)?;
    if p.is_zero() {
        return Err(Error::Precondition("the ideal must be nonzero".into()));
    }
    let core = largest_stable_ideal(dom, &p, run.cfg.budget)?;
    let mut result = json!({
        "ideal": format_ideal(dom, &p),
        "largest_stable": ideal_to_json(dom, &core),
        "text": format_ideal(dom, &core),
    });
    let (code, o) = oracle_status(oracle.and_then(|h| h(dom, run.cfg, &p, &result)));
    result["oracle"] = o;
    Ok((code, result))
}

fn oracle_largest<D: OracleDomain>(
    dom: &D,
    cfg: &RunConfig,
    p: &Ideal<D::Elem>,
    result: &Value,
) -> Option<(bool, Value)> {
    if !in_range(dom, p, cfg.norm_bound) {
        return None;
    }
    let fast = crate::ideal::ideal_from_json(dom, &result["largest_stable"]).ok()?;
    let brute =
        brute_largest_stable_deepening(dom, p, &oracle_budget(cfg.norm_bound), ORACLE_LIMIT)
            .ok()?;
    let (agree, shown) = match brute {
        OracleLargest::Found(m) => (m == fast, ideal_to_json(dom, &m)),
        OracleLargest::Flagged => return None,
    };
    Some((agree, json!({"oracle": shown})))
}

fn tally(reports: &[OracleReport]) -> Value {
    let agree = reports.iter().filter(|r| r.agree).count();
    let total = reports.len();
    let disagreements: Vec<&OracleReport> = reports.iter().filter(|r| !r.agree).collect();
    json!({
        "total": total,
        "agree": agree,
        "agreement_percent": if total == 0 { 100.0 } else { 100.0 * agree as f64 / total as f64 },
        "disagreements": serde_json::to_value(disagreements).expect("serializable"),
    })
}

fn verify<D: OracleDomain>(dom: &D, run: &mut Run) -> Step {
    let cfg = run.cfg;
    let sd = agree_sigma_delta_prime(dom, cfg.norm_bound, cfg.budget);
    let ls = agree_largest_stable(dom, cfg.norm_bound, cfg.budget, ORACLE_LIMIT);

    let confirmed: Vec<Ideal<D::Elem>> = crate::ideal::enumerate_ideals(dom, cfg.norm_bound)
        .into_iter()
        .zip(sd.iter().skip(1))
        .filter(|(i, r)| r.agree && r.oracle_result == json!(true) && !i.is_unit())
        .map(|(i, _)| i)
        .collect();

    let mut targets: Vec<Ideal<D::Elem>> = dom
        .enumerate_primes(cfg.norm_bound)
        .into_iter()
        .map(Ideal::prime)
        .collect();
    targets.extend(confirmed.iter().cloned());
    targets.sort();
    targets.dedup();
    let mut verdicts = Map::new();
    let (mut validated, mut undecided, mut failed) = (0usize, 0usize, Vec::new());
    for p in &targets {
        match classify_contraction(dom, p, cfg.budget) {
            Ok(v) => {
                *verdicts.entry(v.name()).or_insert(json!(0)) =
                    json!(verdicts.get(v.name()).and_then(Value::as_u64).unwrap_or(0) + 1);
                if matches!(v, Verdict::Undecided { .. }) {
                    undecided += 1;
                } else if validate_verdict(dom, p, &v, cfg.budget).is_ok() {
                    validated += 1;
                } else {
                    failed.push(format_ideal(dom, p));
                }
            }
            Err(e) => failed.push(format!("{}: {e}", format_ideal(dom, p))),
        }
    }

    let mut witnesses = Vec::new();
    for p in &confirmed {
        if let Some(f) = extend_and_falsify(dom, p, cfg.sample_count, cfg.seed)? {
            witnesses.push(json!({
                "ideal": format_ideal(dom, p),
                "f": ore_to_json(dom, &f.f),
                "r": ore_to_json(dom, &f.r),
                "g": ore_to_json(dom, &f.g),
            }));
        }
    }

    let all_agree = sd.iter().chain(&ls).all(|r| r.agree);
    let code = if !all_agree || !failed.is_empty() || !witnesses.is_empty() {
        EXIT_DISAGREEMENT
    } else if undecided > 0 {
        EXIT_BUDGET
    } else {
        EXIT_OK
    };
    Ok((
        code,
        json!({
            "sigma_delta_prime": tally(&sd),
            "largest_stable": tally(&ls),
            "classification": {
                "total": targets.len(),
                "validated": validated,
                "undecided": undecided,
                "failed": failed,
                "verdicts": verdicts,
            },
            "falsification": {
                "ideals": confirmed.len(),
                "samples_per_ideal": cfg.sample_count,
                "witnesses": witnesses,
            },
            "convention": CONVENTION_NOTE,
        }),
    ))
}

/// Pretty JSON with sorted keys and a trailing newline.
pub fn render(report: &Value) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("serializable");
    s.push('\n');
    s
}

/// Writes `text` to `path` in one step, or to stdout.
pub fn write_report(text: &str, path: Option<&Path>) -> std::io::Result<()> {
    match path {
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()
        }
        Some(p) => {
            let dir = match p.parent() {
                Some(d) if !d.as_os_str().is_empty() => d,
                _ => Path::new("."),
            };
            let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
            tmp.write_all(text.as_bytes())?;
            tmp.persist(p).map_err(|e| e.error)?;
            Ok(())
        }
    }
}

/// Full run from parsed arguments; returns the process exit code.
pub fn run(args: &Args) -> i32 {
    let (outcome, out) = match load_config(args) {
        Ok(cfg) => (execute(&cfg), cfg.out.clone()),
        Err(msg) => (config_error_report(&msg), args.out.clone()),
    };
    if let Some(err) = outcome.report.get("error") {
        eprintln!("ore-prime: {}", err["message"].as_str().unwrap_or("error"));
    }
    match write_report(&render(&outcome.report), out.as_deref()) {
        Ok(()) => outcome.exit_code,
        Err(e) => {
            eprintln!("ore-prime: cannot write report: {e}");
            EXIT_IO
        }
    }
}
