use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use superyang::drinfeld;
use superyang::field::Rational;
use superyang::space::SuperSpace;
use superyang::suite::{self, Level, SuiteConfig};
use superyang::symgroup::{fusion_bound_from_env, fusion_idempotent, murphy_idempotent, Partition, Tableau};
use superyang::yangian::gl::{self, Variant};
use superyang::yangian::{osp, rtt_check, RMatrix};
use superyang::Error;

/// Exact constructions and identity checks for super Yangian representations.
#[derive(Parser)]
#[command(name = "superyang", version)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Include details in text output.
    #[arg(long, global = true)]
    verbose: bool,
    /// Largest d for the fusion procedure (overrides SUPERYANG_FUSION_BOUND).
    #[arg(long, global = true, value_name = "D")]
    fusion_bound: Option<usize>,
    /// Write the report to a file instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact Yang-Baxter check of an R-matrix.
    Ybe(YbeArgs),
    /// Primitive idempotent of a standard tableau.
    Idempotent(IdempotentArgs),
    /// Build a module, run its checks and extract the highest weight.
    Module(ModuleArgs),
    /// Run the verification suite.
    Suite(SuiteArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Gl,
    Osp,
    OspSub,
}

#[derive(Args)]
struct YbeArgs {
    #[arg(long, value_enum)]
    kind: Kind,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Murphy,
    Fusion,
    Both,
}

#[derive(Args)]
struct IdempotentArgs {
    /// Comma-separated parts, e.g. `2,1`.
    #[arg(long)]
    shape: String,
    /// Entries in row-reading order (`1,3,2`) or rows separated by `;`.
    /// Defaults to the row-reading tableau.
    #[arg(long)]
    tableau: Option<String>,
    #[arg(long, value_enum, default_value = "both")]
    method: Method,
}

#[derive(Args)]
struct ModuleArgs {
    #[arg(long, value_enum)]
    kind: Kind,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    shape: Option<String>,
    #[arg(long)]
    tableau: Option<String>,
    /// `r` or `rprime`.
    #[arg(long, default_value = "r")]
    variant: String,
    #[arg(long)]
    d: Option<usize>,
    /// Root parameter of the second fundamental family, e.g. `-3/2`.
    #[arg(long, allow_hyphen_values = true)]
    gamma: Option<String>,
}

#[derive(Args)]
struct SuiteArgs {
    #[arg(long, default_value = "quick")]
    level: String,
}

/// A finished command: JSON value, text rendering and verdict.
struct Report {
    value: Value,
    text: String,
    passed: bool,
}

enum Failure {
    Usage(String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Lib(e) => match e {
                Error::InvalidInput(_) | Error::IndexOutOfRange(_) | Error::WrongSpaceKind { .. } => 2,
                Error::BoundExceeded(_) => 3,
                Error::NotInHook { .. }
                | Error::NoSolution(_)
                | Error::DegreeMismatch { .. }
                | Error::IrrationalRoots { .. } => 4,
                _ => 1,
            },
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Usage(m) => m.clone(),
            Failure::Lib(e) => e.to_string(),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(&cli);
    match result {
        Ok(report) => {
            let body = if cli.json { report.value_text() } else { report.text.clone() };
            if let Err(e) = emit(&cli, &body) {
                eprintln!("error: {e}");
                return ExitCode::from(1);
            }
            ExitCode::from(if report.passed { 0 } else { 1 })
        }
        Err(f) => {
            let code = f.exit_code();
            eprintln!("error: {}", f.message());
            if cli.json {
                let body = format!("{}\n", json!({ "error": f.message(), "exit_code": code }));
                let _ = emit(&cli, &body);
            }
            ExitCode::from(code)
        }
    }
}

impl Report {
    fn value_text(&self) -> String {
        match &self.value {
            // suites stream one object per line
            Value::Array(lines) => lines.iter().map(|v| format!("{v}\n")).collect(),
            v => format!("{}\n", serde_json::to_string_pretty(v).expect("serializable")),
        }
    }
}

fn emit(cli: &Cli, body: &str) -> std::io::Result<()> {
    match &cli.output {
        Some(path) => std::fs::write(path, body),
        None => std::io::stdout().lock().write_all(body.as_bytes()),
    }
}

fn run(cli: &Cli) -> Result<Report, Failure> {
    let bound = match cli.fusion_bound {
        Some(b) => b,
        None => fusion_bound_from_env()?,
    };
    match &cli.command {
        Command::Ybe(a) => cmd_ybe(a),
        Command::Idempotent(a) => cmd_idempotent(a, bound),
        Command::Module(a) => cmd_module(a, cli.verbose),
        Command::Suite(a) => cmd_suite(a, bound, cli.verbose),
    }
}

fn require(x: Option<usize>, name: &str) -> Result<usize, Failure> {
    x.ok_or_else(|| Failure::Usage(format!("--{name} is required for this kind")))
}

fn space_for(kind: Kind, m: Option<usize>, n: Option<usize>) -> Result<SuperSpace, Failure> {
    match kind {
        Kind::Gl => {
            let (m, n) = (require(m, "m")?, require(n, "n")?);
            if m + n == 0 {
                return Err(Failure::Usage("m + n must be positive".into()));
            }
            Ok(SuperSpace::gl(m, n))
        }
        Kind::Osp | Kind::OspSub => {
            let n = require(n, "n")?;
            if n == 0 {
                return Err(Failure::Usage("n must be positive".into()));
            }
            Ok(if matches!(kind, Kind::Osp) { SuperSpace::osp(n) } else { SuperSpace::osp_sub(n) })
        }
    }
}

fn cmd_ybe(a: &YbeArgs) -> Result<Report, Failure> {
    let space = space_for(a.kind, a.m, a.n)?;
    let r = RMatrix::for_space(&space)?;
    let residual = r.ybe_residual()?;
    let witness = residual.first_nonzero().map(|(i, j, x)| format!("({i}, {j}): {x}"));
    let passed = witness.is_none();
    let value = json!({
        "command": "ybe",
        "space": space.to_string(),
        "kind": r.kind(),
        "kappa": r.kappa(),
        "residual_zero": passed,
        "witness": witness,
    });
    let text = match &witness {
        None => format!("Yang-Baxter equation holds exactly for the R-matrix on {space}\n"),
        Some(w) => format!("Yang-Baxter residual on {space} is nonzero at {w}\n"),
    };
    Ok(Report { value, text, passed })
}

fn parse_tableau(shape: &Partition, spec: Option<&str>) -> Result<Tableau, Failure> {
    let Some(spec) = spec else {
        return Ok(Tableau::row_reading(shape));
    };
    if spec.contains(';') {
        let t: Tableau = spec.parse()?;
        if t.shape() != shape {
            return Err(Failure::Usage(format!("tableau {t} does not have shape {shape}")));
        }
        return Ok(t);
    }
    let entries: Vec<usize> = spec
        .split(',')
        .map(|x| x.trim().parse().map_err(|_| Failure::Usage(format!("bad tableau entry {x:?}"))))
        .collect::<Result<_, _>>()?;
    if entries.len() != shape.size() {
        return Err(Failure::Usage(format!("{} entries for a shape of size {}", entries.len(), shape.size())));
    }
    let mut rows = Vec::new();
    let mut rest = &entries[..];
    for &len in shape.parts() {
        rows.push(rest[..len].to_vec());
        rest = &rest[len..];
    }
    Ok(Tableau::new(rows)?)
}

fn cmd_idempotent(a: &IdempotentArgs, bound: usize) -> Result<Report, Failure> {
    let shape: Partition = a.shape.parse()?;
    let t = parse_tableau(&shape, a.tableau.as_deref())?;
    let murphy = matches!(a.method, Method::Murphy | Method::Both).then(|| murphy_idempotent(&t));
    let fusion = match a.method {
        Method::Fusion | Method::Both => Some(fusion_idempotent(&t, bound)?),
        Method::Murphy => None,
    };
    let equal = match (&murphy, &fusion) {
        (Some(x), Some(y)) => Some(x == y),
        _ => None,
    };
    let value = json!({
        "command": "idempotent",
        "shape": shape,
        "tableau": t.to_string(),
        "murphy": murphy,
        "fusion": fusion,
        "equal": equal,
    });
    let mut text = format!("tableau {t} of shape {shape}\n");
    for (name, e) in [("murphy", &murphy), ("fusion", &fusion)] {
        if let Some(e) = e {
            text.push_str(&format!("{name}: {}\n", serde_json::to_string(e).expect("serializable")));
        }
    }
    if let Some(eq) = equal {
        text.push_str(if eq { "equal\n" } else { "different\n" });
    }
    Ok(Report { value, text, passed: equal.unwrap_or(true) })
}

fn cmd_module(a: &ModuleArgs, verbose: bool) -> Result<Report, Failure> {
    match a.kind {
        Kind::Gl => gl_module(a, verbose),
        Kind::Osp => osp_module(a, verbose),
        Kind::OspSub => Err(Failure::Usage("module supports --kind gl and --kind osp".into())),
    }
}

fn gl_module(a: &ModuleArgs, verbose: bool) -> Result<Report, Failure> {
    let space = space_for(Kind::Gl, a.m, a.n)?;
    let (m, n) = (a.m.unwrap_or(0), a.n.unwrap_or(0));
    let shape: Partition = a.shape.as_deref().ok_or_else(|| Failure::Usage("--shape is required".into()))?.parse()?;
    let t = parse_tableau(&shape, a.tableau.as_deref())?;
    let variant: Variant = a.variant.parse()?;
    let pm = gl::polynomial_module(&space, &t, variant)?;
    let rtt = rtt_check(&pm.module, &RMatrix::yang(&space)?)?;
    let hw = pm.module.highest_weight()?;
    let expected = match variant {
        Variant::R => gl::pi_flat(&shape, m, n)?,
        Variant::Rprime => gl::pi_sharp(&shape, m, n)?,
    };
    let matches = hw.weights == expected;
    let passed = matches && rtt.holds;
    let value = json!({
        "command": "module",
        "space": space.to_string(),
        "shape": shape,
        "tableau": t.to_string(),
        "variant": a.variant,
        "dim": pm.module.dim(),
        "invariant": true,
        "rtt": rtt,
        "highest_weight": hw.weights,
        "expected": expected,
        "matches": matches,
    });
    let mut text = format!(
        "module L_U for U = {t} on {space} ({:?}), dimension {}\nRTT: {}\nhighest weight: {}\nexpected:       {}\n{}\n",
        variant,
        pm.module.dim(),
        if rtt.holds { "holds" } else { "fails" },
        fmt_tuple(&hw.weights),
        fmt_tuple(&expected),
        if matches { "match" } else { "MISMATCH" },
    );
    if verbose {
        text.push_str(&format!("highest vector: {:?}\n", hw.vector));
    }
    Ok(Report { value, text, passed })
}

fn osp_module(a: &ModuleArgs, verbose: bool) -> Result<Report, Failure> {
    let space = space_for(Kind::Osp, None, a.n)?;
    let n = a.n.unwrap_or(0);
    let d = require(a.d, "d")?;
    if d == 0 || d > n {
        return Err(Failure::Usage(format!("--d must satisfy 1 <= d <= n = {n}")));
    }
    let vector = osp::vector_rep(&space)?;
    let r = RMatrix::osp(&space)?;
    let rtt_vector = rtt_check(&vector, &r)?;
    let rtt_square = if n <= 2 {
        Some(rtt_check(&osp::tensor_module(&space, &[Rational::from_int(-1), Rational::ZERO])?, &r)?)
    } else {
        None
    };
    let m = osp::xi_module(n, d)?;
    let tuple = drinfeld::drinfeld_from_weight(m.highest_weight.reduced())?;
    let expected = drinfeld::xi_tuple(n, d)?;
    let mut passed = tuple == expected && rtt_vector.holds && rtt_square.as_ref().map_or(true, |x| x.holds);
    let second = match &a.gamma {
        Some(g) => {
            let gamma: Rational = g.parse()?;
            let k = if d < n { d + 1 } else { n + 1 };
            let derived = drinfeld::second_family_via_xi(n, k, &gamma)?;
            let direct = drinfeld::second_family(n, k, &gamma)?;
            passed &= derived == direct;
            Some((derived.to_string(), json!({ "gamma": gamma, "component": k, "tuple": derived, "matches": derived == direct })))
        }
        None => None,
    };
    let value = json!({
        "command": "module",
        "n": n,
        "d": d,
        "dim": m.dim,
        "highest_weight": m.highest_weight.full,
        "central_series": m.central_series,
        "drinfeld": tuple,
        "expected": expected,
        "checks": {
            "highest_vector": true,
            "eigenvalues": true,
            "consistency": true,
            "central_series": true,
            "rtt_vector_rep": rtt_vector.holds,
            "rtt_tensor_square": rtt_square.as_ref().map(|x| x.holds),
            "drinfeld_matches": tuple == expected,
        },
        "second_family": second.as_ref().map(|s| &s.1),
    });
    let factors = if d == 1 { "V_0".to_string() } else { format!("V_0 (x) ... (x) V_{}", 1 - d as i64) };
    let mut text = format!(
        "xi_{d} in {factors} over X({space}), dimension {}\nhighest weight: {}\nc(u) = {}\nDrinfeld tuple: {tuple}\nexpected:       {expected}\n",
        m.dim,
        fmt_tuple(&m.highest_weight.full),
        m.central_series,
    );
    if let Some(s) = &second {
        text.push_str(&format!("second family via transition and shift: {}\n", s.0));
    }
    if verbose {
        text.push_str(&format!("xi_{d} has {} terms\n", m.terms));
    }
    text.push_str(if passed { "all checks pass\n" } else { "CHECK FAILED\n" });
    Ok(Report { value, text, passed })
}

fn fmt_tuple(w: &[superyang::field::Q1]) -> String {
    let parts: Vec<String> = w.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(", "))
}

fn cmd_suite(a: &SuiteArgs, bound: usize, verbose: bool) -> Result<Report, Failure> {
    let level: Level = a.level.parse()?;
    let report = suite::run_suite(&SuiteConfig { level, fusion_bound: bound });
    let failed = report.checks.iter().filter(|c| !c.passed).count();
    let mut lines: Vec<Value> = report.checks.iter().map(|c| json!(c)).collect();
    lines.push(json!({ "summary": { "level": level, "checks": report.checks.len(), "failed": failed, "passed": report.passed } }));
    let mut text = String::new();
    for c in &report.checks {
        let tag = if c.criterion == 0 { "extra".to_string() } else { format!("{:>5}", c.criterion) };
        text.push_str(&format!("{} [{tag}] {}\n", if c.passed { "PASS" } else { "FAIL" }, c.name));
        if verbose || !c.passed {
            text.push_str(&format!("        {}\n", c.detail));
        }
    }
    text.push_str(&format!("{} checks, {failed} failed\n", report.checks.len()));
    Ok(Report { value: Value::Array(lines), text, passed: report.passed })
}
