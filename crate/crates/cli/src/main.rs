//! `qeuler`: tables, single values and verification suites for q-Euler
//! numbers, Euler q-zeta functions and q-L-functions.
//!
//! Exit codes: 0 success, 1 usage or domain error, 2 verification failure.

mod output;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use qeuler_core::classical::{alt_power_sum, alt_power_sum_closed, bernoulli_numbers, euler_numbers, euler_poly};
use qeuler_core::dirichlet::{characters_mod, l_function, l_function_special_value, CyclotomicValue};
use qeuler_core::par::ExecMode;
use qeuler_core::qeuler::{
    alt_q_power_sum, alt_q_power_sum_closed, q_euler_numbers, q_euler_poly, q_euler_star_number, q_euler_star_poly,
    weighted_alt_q_power_sum, weighted_alt_q_power_sum_closed,
};
use qeuler_core::qzeta::{partial_zeta, partial_zeta_direct, partial_zeta_special_value, zeta, zeta_euler_transform, ZetaQuery};
use qeuler_core::verify::{run_suites, Bounds, Suite, MAX_PRECISION, MIN_PRECISION};
use qeuler_core::{QBase, QPower, Rational, RealP, DEFAULT_PRECISION};

use output::{Document, Format, Precision};

/// Largest table index accepted by `numbers`.
const MAX_TABLE_N: u32 = 200;

#[derive(Parser)]
#[command(name = "qeuler", version, about = "Exact q-Euler numbers, Euler q-zeta values and verification suites")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Table of E_{n,q}, E*_{n,q}, or the classical Euler / Bernoulli numbers for n = 0..=max-n.
    Numbers(NumbersArgs),
    /// One polynomial value E_{n,q}(x), E*_{n,q}(x) or E_n(x).
    Poly(PolyArgs),
    /// Alternating power sum up to n - 1, brute force and closed form.
    Sums(SumsArgs),
    /// Euler q-zeta value zeta_{E,q}(s, x).
    Zeta(ZetaArgs),
    /// Partial zeta H_q(s, a; F).
    PartialZeta(PartialZetaArgs),
    /// q-L-function l_{E,q}(s, chi).
    Lfunction(LfunctionArgs),
    /// Dirichlet characters modulo an odd d in canonical order.
    Characters(CharactersArgs),
    /// Run identity verification suites.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum NumberVariant {
    Plain,
    Star,
    ClassicalEuler,
    ClassicalBernoulli,
}

#[derive(Args)]
struct NumbersArgs {
    #[arg(long = "max-n", visible_alias = "n")]
    max_n: u32,
    /// Base q as "p/q" or a finite decimal. Required for the q-variants.
    #[arg(long, allow_hyphen_values = true)]
    q: Option<String>,
    #[arg(long, value_enum, default_value_t = NumberVariant::Plain)]
    variant: NumberVariant,
}

#[derive(Clone, Copy, ValueEnum)]
enum PolyVariant {
    Plain,
    Star,
    ClassicalEuler,
}

#[derive(Args)]
struct PolyArgs {
    #[arg(long)]
    n: u32,
    /// Rational argument; q^x must be rational.
    #[arg(long, allow_hyphen_values = true)]
    x: String,
    #[arg(long, allow_hyphen_values = true)]
    q: Option<String>,
    #[arg(long, value_enum, default_value_t = PolyVariant::Plain)]
    variant: PolyVariant,
}

#[derive(Clone, Copy, ValueEnum)]
enum SumVariant {
    Plain,
    Weighted,
    Classical,
}

#[derive(Args)]
struct SumsArgs {
    #[arg(long)]
    m: u32,
    #[arg(long)]
    n: u64,
    #[arg(long, allow_hyphen_values = true)]
    q: Option<String>,
    #[arg(long, value_enum, default_value_t = SumVariant::Plain)]
    variant: SumVariant,
}

#[derive(Clone, Copy, ValueEnum)]
enum ZetaMethod {
    Continuation,
    EulerTransform,
}

#[derive(Args)]
struct ZetaArgs {
    #[arg(long, allow_hyphen_values = true)]
    s: String,
    #[arg(long, allow_hyphen_values = true)]
    x: String,
    #[arg(long, allow_hyphen_values = true)]
    q: String,
    #[arg(long, default_value_t = DEFAULT_PRECISION)]
    prec: u32,
    #[arg(long, value_enum, default_value_t = ZetaMethod::Continuation)]
    method: ZetaMethod,
}

#[derive(Clone, Copy, ValueEnum)]
enum PartialMethod {
    Continuation,
    Direct,
}

#[derive(Args)]
struct PartialZetaArgs {
    #[arg(long, allow_hyphen_values = true)]
    s: String,
    #[arg(long)]
    a: u64,
    /// Odd modulus F >= 3.
    #[arg(long)]
    f: u64,
    #[arg(long, allow_hyphen_values = true)]
    q: String,
    #[arg(long, default_value_t = DEFAULT_PRECISION)]
    prec: u32,
    #[arg(long, value_enum, default_value_t = PartialMethod::Continuation)]
    method: PartialMethod,
}

#[derive(Args)]
struct LfunctionArgs {
    #[arg(long, allow_hyphen_values = true)]
    s: String,
    #[arg(long)]
    modulus: u64,
    /// Index into the canonical character order; 0 is principal.
    #[arg(long = "char-index", visible_alias = "char")]
    char_index: usize,
    #[arg(long, allow_hyphen_values = true)]
    q: String,
    #[arg(long, default_value_t = DEFAULT_PRECISION)]
    prec: u32,
}

#[derive(Args)]
struct CharactersArgs {
    #[arg(long)]
    modulus: u64,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite name or "all".
    #[arg(long, default_value = "all")]
    suite: String,
    #[arg(long = "max-m")]
    max_m: Option<u32>,
    #[arg(long = "max-n", visible_alias = "n")]
    max_n: Option<u32>,
    #[arg(long = "max-k")]
    max_k: Option<u64>,
    #[arg(long = "max-x")]
    max_x: Option<u32>,
    /// Comma-separated q values replacing the suite defaults.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    q: Option<Vec<String>>,
    /// Comma-separated odd f values for thm4.
    #[arg(long, value_delimiter = ',')]
    f: Option<Vec<u32>>,
    /// Comma-separated odd moduli for characters and lfunction.
    #[arg(long, value_delimiter = ',')]
    modulus: Option<Vec<u64>>,
    #[arg(long, default_value_t = DEFAULT_PRECISION)]
    prec: u32,
    /// Also write the JSON report to this path.
    #[arg(long)]
    report: Option<PathBuf>,
    /// Run grids on the calling thread only.
    #[arg(long)]
    sequential: bool,
    /// Record wall-clock time in `elapsed_ms` instead of 0.
    #[arg(long)]
    timings: bool,
}

/// A usage or domain error, reported with exit code 1.
struct Fail(String);

impl From<qeuler_core::Error> for Fail {
    fn from(e: qeuler_core::Error) -> Self {
        Fail(e.to_string())
    }
}

type CliResult<T> = Result<T, Fail>;

enum Status {
    Ok,
    Failed,
}

fn rational(name: &str, s: &str) -> CliResult<Rational> {
    s.parse().map_err(|_| Fail(format!("--{name}: cannot parse {s:?} as a rational")))
}

fn required_q(q: &Option<String>) -> CliResult<QBase> {
    let q = q.as_deref().ok_or_else(|| Fail("--q is required for this variant".into()))?;
    Ok(QBase::new(rational("q", q)?)?)
}

fn check_precision(p: u32) -> CliResult<()> {
    if (MIN_PRECISION..=MAX_PRECISION).contains(&p) {
        Ok(())
    } else {
        Err(Fail(format!("--prec must be in {MIN_PRECISION}..={MAX_PRECISION}, got {p}")))
    }
}

/// `Some(n)` when `s = -n` for an integer `n >= 0`.
fn nonpositive_integer(s: &Rational) -> Option<u32> {
    if s.is_integer() && !s.is_positive() {
        (-s).to_i64().and_then(|n| u32::try_from(n).ok())
    } else {
        None
    }
}

fn cyclotomic_json(v: &CyclotomicValue) -> Value {
    match v.as_rational() {
        Some(r) => json!(r.to_string()),
        None => json!({
            "order": v.order(),
            "coeffs": v.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        }),
    }
}

fn cyclotomic_cell(v: &CyclotomicValue) -> String {
    match v.as_rational() {
        Some(r) => r.to_string(),
        None => v.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>().join(";"),
    }
}

fn numbers(args: &NumbersArgs) -> CliResult<Document> {
    if args.max_n > MAX_TABLE_N {
        return Err(Fail(format!("--max-n must be at most {MAX_TABLE_N}")));
    }
    let mut doc = Document::new("numbers", Precision::Exact)
        .param("max_n", args.max_n)
        .param("variant", args.variant.to_possible_value().unwrap().get_name());
    let values: Vec<Rational> = match args.variant {
        NumberVariant::Plain => {
            let base = required_q(&args.q)?;
            doc = doc.param("q", base.q().to_string());
            q_euler_numbers(args.max_n, &base)
        }
        NumberVariant::Star => {
            let base = required_q(&args.q)?;
            doc = doc.param("q", base.q().to_string());
            (0..=args.max_n).map(|n| q_euler_star_number(n, &base)).collect()
        }
        NumberVariant::ClassicalEuler => euler_numbers(args.max_n as usize),
        NumberVariant::ClassicalBernoulli => bernoulli_numbers(args.max_n as usize),
    };
    let values = &values[..=args.max_n as usize];
    let results = values.iter().enumerate().map(|(n, v)| json!({"n": n, "value": v.to_string()})).collect();
    let rows = values.iter().enumerate().map(|(n, v)| vec![n.to_string(), v.to_string()]).collect();
    Ok(doc.results(Value::Array(results)).table(vec!["n", "value"], rows))
}

fn poly(args: &PolyArgs) -> CliResult<Document> {
    let x = rational("x", &args.x)?;
    let mut doc = Document::new("poly", Precision::Exact)
        .param("n", args.n)
        .param("x", x.to_string())
        .param("variant", args.variant.to_possible_value().unwrap().get_name());
    let value = match args.variant {
        PolyVariant::ClassicalEuler => euler_poly(args.n as usize, &x),
        PolyVariant::Plain | PolyVariant::Star => {
            let base = required_q(&args.q)?;
            doc = doc.param("q", base.q().to_string());
            let qp = QPower::at(&base, &x)?;
            match args.variant {
                PolyVariant::Plain => q_euler_poly(args.n, &qp),
                _ => q_euler_star_poly(args.n, &qp),
            }
        }
    };
    Ok(doc
        .results(json!({"value": value.to_string()}))
        .table(vec!["n", "x", "value"], vec![vec![args.n.to_string(), x.to_string(), value.to_string()]]))
}

fn sums(args: &SumsArgs) -> CliResult<(Document, Status)> {
    let mut doc = Document::new("sums", Precision::Exact)
        .param("m", args.m)
        .param("n", args.n)
        .param("variant", args.variant.to_possible_value().unwrap().get_name());
    let (brute, closed) = match args.variant {
        SumVariant::Classical => (alt_power_sum(args.m, args.n), alt_power_sum_closed(args.m, args.n)),
        SumVariant::Plain | SumVariant::Weighted => {
            let base = required_q(&args.q)?;
            doc = doc.param("q", base.q().to_string());
            match args.variant {
                SumVariant::Plain => (alt_q_power_sum(args.m, args.n, &base), alt_q_power_sum_closed(args.m, args.n, &base)),
                _ => (
                    weighted_alt_q_power_sum(args.m, args.n, &base),
                    weighted_alt_q_power_sum_closed(args.m, args.n, &base),
                ),
            }
        }
    };
    let agree = brute == closed;
    let doc = doc
        .results(json!({
            "brute_force": brute.to_string(),
            "closed_form": closed.to_string(),
            "agree": agree,
        }))
        .table(
            vec!["m", "n", "brute_force", "closed_form", "agree"],
            vec![vec![args.m.to_string(), args.n.to_string(), brute.to_string(), closed.to_string(), agree.to_string()]],
        );
    Ok((doc, if agree { Status::Ok } else { Status::Failed }))
}

fn zeta_cmd(args: &ZetaArgs) -> CliResult<Document> {
    check_precision(args.prec)?;
    let (s, x, q) = (rational("s", &args.s)?, rational("x", &args.x)?, rational("q", &args.q)?);
    let query = ZetaQuery::from_rationals(&s, &x, &q, args.prec)?;
    let value = match args.method {
        ZetaMethod::Continuation => zeta(&query)?,
        ZetaMethod::EulerTransform => zeta_euler_transform(&query)?,
    };
    let shown = value.to_string();
    Ok(Document::new("zeta", Precision::Digits(args.prec))
        .param("s", s.to_string())
        .param("x", x.to_string())
        .param("q", q.to_string())
        .param("method", args.method.to_possible_value().unwrap().get_name())
        .results(json!({"value": shown}))
        .table(vec!["value", "precision"], vec![vec![shown, args.prec.to_string()]]))
}

fn partial_zeta_cmd(args: &PartialZetaArgs) -> CliResult<Document> {
    check_precision(args.prec)?;
    let (s, q) = (rational("s", &args.s)?, rational("q", &args.q)?);
    let base = QBase::zeta(q.clone())?;
    let s_real = RealP::from_rational(&s, args.prec);
    let value = match args.method {
        PartialMethod::Continuation => partial_zeta(&s_real, args.a, args.f, &base, args.prec)?,
        PartialMethod::Direct => partial_zeta_direct(&s_real, args.a, args.f, &base, args.prec)?,
    };
    let special = match nonpositive_integer(&s) {
        Some(n) => Some(partial_zeta_special_value(n, args.a, args.f, &base)?.to_string()),
        None => None,
    };
    let shown = value.to_string();
    Ok(Document::new("partial-zeta", Precision::Digits(args.prec))
        .param("s", s.to_string())
        .param("a", args.a)
        .param("f", args.f)
        .param("q", q.to_string())
        .param("method", args.method.to_possible_value().unwrap().get_name())
        .results(json!({"value": shown, "special_value": special}))
        .table(
            vec!["value", "special_value", "precision"],
            vec![vec![shown, special.unwrap_or_default(), args.prec.to_string()]],
        ))
}

fn lfunction_cmd(args: &LfunctionArgs) -> CliResult<Document> {
    check_precision(args.prec)?;
    let (s, q) = (rational("s", &args.s)?, rational("q", &args.q)?);
    let base = QBase::zeta(q.clone())?;
    let group = characters_mod(args.modulus)?;
    let chi = group.get(args.char_index).ok_or_else(|| {
        Fail(format!("--char-index {} out of range: modulus {} has {} characters", args.char_index, args.modulus, group.len()))
    })?;
    let value = l_function(&RealP::from_rational(&s, args.prec), chi, &base, args.prec)?;
    let special = match nonpositive_integer(&s) {
        Some(n) => Some(l_function_special_value(n, chi, &base)?),
        None => None,
    };
    let (re, im) = (value.re.to_string(), value.im.to_string());
    Ok(Document::new("lfunction", Precision::Digits(args.prec))
        .param("s", s.to_string())
        .param("modulus", args.modulus)
        .param("char_index", args.char_index)
        .param("q", q.to_string())
        .results(json!({
            "re": re,
            "im": im,
            "character_order": chi.order(),
            "special_value": special.as_ref().map(cyclotomic_json),
        }))
        .table(
            vec!["re", "im", "special_value", "precision"],
            vec![vec![re, im, special.as_ref().map(cyclotomic_cell).unwrap_or_default(), args.prec.to_string()]],
        ))
}

fn characters_cmd(args: &CharactersArgs) -> CliResult<Document> {
    let group = characters_mod(args.modulus)?;
    let mut results = Vec::new();
    let mut rows = Vec::new();
    for (index, chi) in group.characters().iter().enumerate() {
        results.push(json!({
            "index": index,
            "modulus": chi.modulus(),
            "order": chi.order(),
            "principal": chi.is_principal(),
            "real": chi.is_real(),
            "exponents": chi.exponents(),
        }));
        let exps: Vec<String> = chi.exponents().iter().map(|e| e.map_or("-".into(), |e| e.to_string())).collect();
        rows.push(vec![
            index.to_string(),
            chi.order().to_string(),
            chi.is_principal().to_string(),
            chi.is_real().to_string(),
            exps.join(";"),
        ]);
    }
    Ok(Document::new("characters", Precision::Exact)
        .param("modulus", args.modulus)
        .results(Value::Array(results))
        .table(vec!["index", "order", "principal", "real", "exponents"], rows))
}

fn verify_cmd(args: &VerifyArgs) -> CliResult<(Document, Status)> {
    let suites = Suite::parse_selection(&args.suite)?;
    let qs = match &args.q {
        Some(list) => Some(list.iter().map(|q| rational("q", q)).collect::<CliResult<Vec<_>>>()?),
        None => None,
    };
    let bounds = Bounds {
        max_m: args.max_m,
        max_n: args.max_n,
        max_k: args.max_k,
        max_x: args.max_x,
        qs,
        fs: args.f.clone(),
        moduli: args.modulus.clone(),
        precision: args.prec,
    };
    for &suite in &suites {
        bounds.validate(suite)?;
    }
    let mode = if args.sequential { ExecMode::Sequential } else { ExecMode::Parallel };
    let mut reports = run_suites(&suites, &bounds, mode)?;
    if !args.timings {
        for r in &mut reports {
            r.elapsed_ms = 0;
        }
    }
    let passed = reports.iter().all(|r| r.passed);
    let rows = reports
        .iter()
        .map(|r| {
            vec![
                r.suite.name().to_string(),
                r.cases_run.to_string(),
                r.failures.len().to_string(),
                r.max_deviation.clone(),
                r.tolerance.clone(),
                r.passed.to_string(),
            ]
        })
        .collect();
    let mut doc = Document::new("verify", Precision::Digits(args.prec)).param("suite", args.suite.clone());
    if let Some(m) = args.max_m {
        doc = doc.param("max_m", m);
    }
    if let Some(n) = args.max_n {
        doc = doc.param("max_n", n);
    }
    if let Some(k) = args.max_k {
        doc = doc.param("max_k", k);
    }
    if let Some(x) = args.max_x {
        doc = doc.param("max_x", x);
    }
    if let Some(qs) = &bounds.qs {
        doc = doc.param("q", qs.iter().map(|q| q.to_string()).collect::<Vec<_>>());
    }
    if let Some(fs) = &bounds.fs {
        doc = doc.param("f", fs.clone());
    }
    if let Some(ds) = &bounds.moduli {
        doc = doc.param("modulus", ds.clone());
    }
    let results = serde_json::to_value(&reports).expect("serializable");
    let doc = doc
        .results(results)
        .table(vec!["suite", "cases_run", "failures", "max_deviation", "tolerance", "passed"], rows);
    if let Some(path) = &args.report {
        fs::write(path, doc.render(Format::Json)).map_err(|e| Fail(format!("cannot write {}: {e}", path.display())))?;
    }
    Ok((doc, if passed { Status::Ok } else { Status::Failed }))
}

fn run(cli: &Cli) -> CliResult<(Document, Status)> {
    let ok = |doc| Ok((doc, Status::Ok));
    match &cli.command {
        Command::Numbers(a) => ok(numbers(a)?),
        Command::Poly(a) => ok(poly(a)?),
        Command::Sums(a) => sums(a),
        Command::Zeta(a) => ok(zeta_cmd(a)?),
        Command::PartialZeta(a) => ok(partial_zeta_cmd(a)?),
        Command::Lfunction(a) => ok(lfunction_cmd(a)?),
        Command::Characters(a) => ok(characters_cmd(a)?),
        Command::Verify(a) => verify_cmd(a),
    }
}

fn exit_code(status: &Status) -> u8 {
    match status {
        Status::Ok => 0,
        Status::Failed => 2,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(&cli) {
        Ok((doc, status)) => {
            print!("{}", doc.render(cli.format));
            ExitCode::from(exit_code(&status))
        }
        Err(Fail(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
