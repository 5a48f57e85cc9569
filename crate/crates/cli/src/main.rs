//! `ftlb`: invariants, traces, trace-parameter solutions and verification
//! suites from the command line.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use ftlb_core::coeff::{parse_scalar, Scalar};
use ftlb_core::cyclic::{build_solution, enumerate_profiles, verify_functional_system, SupportProfile};
use ftlb_core::invariants::{evaluate, parse_braid, InvariantKind, InvariantSpec};
use ftlb_core::markov::{trace_of_word, TraceParams};
use ftlb_core::suites::{run_suite, Suite, SuiteOptions};

#[derive(Parser, Debug)]
#[command(name = "ftlb", version, about = "Exact traces and solid-torus link invariants for framed type-B Hecke algebras")]
struct Cli {
    /// TOML file whose keys mirror the flags; flags take precedence.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate a link invariant on a braid word.
    Invariant(Flags),
    /// Evaluate the Markov trace of a braid word.
    Trace(Flags),
    /// List trace parameters that factor through the framed quotient.
    Solve(Flags),
    /// Run a verification suite.
    Verify(Flags),
}

#[derive(Args, Debug, Default, Clone, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "kebab-case")]
struct Flags {
    /// Modulus of the framing.
    #[arg(long)]
    d: Option<u32>,
    /// Number of strands.
    #[arg(long)]
    n: Option<usize>,
    /// Braid word, e.g. "s1 r1^-1 t2^1".
    #[arg(long, allow_hyphen_values = true)]
    braid: Option<String>,
    /// Invariant: pb, vb, xb or rhob.
    #[arg(long)]
    kind: Option<String>,
    /// Support set S as comma-separated residues.
    #[arg(long = "S")]
    #[serde(rename = "S")]
    s: Option<String>,
    /// Support profile, e.g. "sup1=0;sup2=1;y1=;y2=1;y3=;y4=".
    #[arg(long)]
    profile: Option<String>,
    /// Branch 1-4 of the solution at frequency 0.
    #[arg(long)]
    branch: Option<u8>,
    /// Value of z for `trace`.
    #[arg(long, allow_hyphen_values = true)]
    z: Option<String>,
    /// Values x_1..x_{d-1} for `trace`, comma-separated.
    #[arg(long, allow_hyphen_values = true)]
    x: Option<String>,
    /// Values y_0..y_{d-1} for `trace`, comma-separated.
    #[arg(long, allow_hyphen_values = true)]
    y: Option<String>,
    /// Suite name for `verify`.
    #[arg(long)]
    suite: Option<String>,
    /// Seed for randomized checks.
    #[arg(long)]
    seed: Option<u64>,
    /// Random samples per family for randomized checks.
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long, value_enum)]
    output: Option<Output>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Default, Deserialize)]
#[serde(rename_all = "lowercase")]
enum Output {
    #[default]
    Text,
    Json,
}

impl Flags {
    fn or(self, cfg: Flags) -> Flags {
        Flags {
            d: self.d.or(cfg.d),
            n: self.n.or(cfg.n),
            braid: self.braid.or(cfg.braid),
            kind: self.kind.or(cfg.kind),
            s: self.s.or(cfg.s),
            profile: self.profile.or(cfg.profile),
            branch: self.branch.or(cfg.branch),
            z: self.z.or(cfg.z),
            x: self.x.or(cfg.x),
            y: self.y.or(cfg.y),
            suite: self.suite.or(cfg.suite),
            seed: self.seed.or(cfg.seed),
            samples: self.samples.or(cfg.samples),
            output: self.output.or(cfg.output),
        }
    }
}

/// Invalid input (exit 2) or a computation that could not be carried out
/// (exit 1).
enum Failure {
    Usage(String),
    Run(String),
}

fn usage(msg: impl ToString) -> Failure {
    Failure::Usage(msg.to_string())
}

fn run_err(msg: impl ToString) -> Failure {
    Failure::Run(msg.to_string())
}

#[derive(Serialize)]
struct InvariantJson {
    invariant: String,
    braid: String,
    value: String,
}

#[derive(Serialize)]
struct TraceJson {
    braid: String,
    n: usize,
    d: u32,
    value: String,
}

#[derive(Serialize)]
struct SolutionJson {
    profile: String,
    branch: u8,
    z: String,
    x: Vec<String>,
    y: Vec<String>,
    certified: bool,
}

#[derive(Serialize)]
struct SolveJson {
    d: u32,
    solutions: Vec<SolutionJson>,
}

#[derive(Serialize)]
struct CheckJson {
    status: String,
    label: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    detail: Option<String>,
}

#[derive(Serialize)]
struct VerifyJson {
    suite: String,
    passed: bool,
    checks: Vec<CheckJson>,
}

fn need<T>(v: Option<T>, flag: &str) -> Result<T, Failure> {
    v.ok_or_else(|| usage(format!("missing --{}", flag)))
}

fn parse_residues(s: &str) -> Result<Vec<u32>, Failure> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| usage(format!("bad residue '{}' in --S", t))))
        .collect()
}

fn parse_scalars(s: &str, flag: &str) -> Result<Vec<Scalar>, Failure> {
    s.split(',')
        .map(|t| parse_scalar(t.trim()).map_err(|e| usage(format!("--{}: {}", flag, e))))
        .collect()
}

fn emit<T: Serialize>(out: Output, json: &T, text: &str) {
    let body = match out {
        Output::Json => serde_json::to_string(json).expect("serializable"),
        Output::Text => text.to_string(),
    };
    let mut stdout = std::io::stdout().lock();
    let _ = writeln!(stdout, "{}", body).and_then(|_| stdout.flush());
}

fn invariant_spec(f: &Flags, d: u32) -> Result<InvariantSpec, Failure> {
    let kind: InvariantKind = need(f.kind.as_deref(), "kind")?.parse().map_err(usage)?;
    let classical = |spec: InvariantSpec| {
        if d != 1 {
            Err(usage(format!("--kind {} needs --d 1", kind.name())))
        } else {
            Ok(spec)
        }
    };
    match kind {
        InvariantKind::Pb => classical(InvariantSpec::pb()),
        InvariantKind::Vb => classical(InvariantSpec::vb()),
        InvariantKind::Xb => {
            let s = parse_residues(f.s.as_deref().unwrap_or("0"))?;
            InvariantSpec::xb(d, &s).map_err(usage)
        }
        InvariantKind::RhoB => match (&f.profile, &f.s) {
            (Some(p), _) => {
                let profile = SupportProfile::parse(p, d).map_err(usage)?;
                InvariantSpec::rhob_profile(&profile).map_err(usage)
            }
            (None, s) => InvariantSpec::rhob(d, &parse_residues(s.as_deref().unwrap_or("0"))?).map_err(usage),
        },
    }
}

fn cmd_invariant(f: &Flags, out: Output) -> Result<bool, Failure> {
    let d = f.d.unwrap_or(1);
    let n = need(f.n, "n")?;
    let text = f.braid.clone().unwrap_or_default();
    let spec = invariant_spec(f, d)?;
    let word = parse_braid(&text, n, d).map_err(usage)?;
    let value = evaluate(&word, &spec).map_err(run_err)?.to_string();
    let json = InvariantJson { invariant: spec.kind.name().to_string(), braid: word.to_string(), value };
    emit(out, &json, &json.value);
    Ok(true)
}

fn trace_params(f: &Flags, d: u32) -> Result<TraceParams, Failure> {
    if let Some(p) = &f.profile {
        let profile = SupportProfile::parse(p, d).map_err(usage)?;
        let branch = f.branch.unwrap_or(profile.branches()[0]);
        let sol = build_solution(&profile, branch).map_err(usage)?;
        return sol.params().map_err(run_err);
    }
    let mut p = TraceParams::symbolic(d);
    if let Some(z) = &f.z {
        p.z = parse_scalar(z).map_err(|e| usage(format!("--z: {}", e)))?;
    }
    if let Some(x) = &f.x {
        let xs = parse_scalars(x, "x")?;
        if xs.len() + 1 != d as usize {
            return Err(usage(format!("--x needs {} values x_1..x_{}", d - 1, d - 1)));
        }
        p.x[1..].clone_from_slice(&xs);
    }
    if let Some(y) = &f.y {
        let ys = parse_scalars(y, "y")?;
        if ys.len() != d as usize {
            return Err(usage(format!("--y needs {} values y_0..y_{}", d, d - 1)));
        }
        p.y = ys;
    }
    Ok(p)
}

fn cmd_trace(f: &Flags, out: Output) -> Result<bool, Failure> {
    let d = f.d.unwrap_or(1);
    let n = need(f.n, "n")?;
    let word = parse_braid(f.braid.as_deref().unwrap_or(""), n, d).map_err(usage)?;
    let params = trace_params(f, d)?;
    let value = trace_of_word(&word.algebra_letters(), n, d, &params).map_err(run_err)?.to_string();
    let json = TraceJson { braid: word.to_string(), n, d, value };
    emit(out, &json, &json.value);
    Ok(true)
}

fn cmd_solve(f: &Flags, out: Output) -> Result<bool, Failure> {
    let d = need(f.d, "d")?;
    if d == 0 {
        return Err(usage("--d must be positive"));
    }
    let profiles = match &f.profile {
        Some(p) => vec![SupportProfile::parse(p, d).map_err(usage)?],
        None => enumerate_profiles(d),
    };
    let mut solutions = Vec::new();
    for p in profiles {
        let branches: Vec<u8> = match f.branch {
            Some(b) if p.branches().contains(&b) => vec![b],
            Some(b) => return Err(usage(format!("branch {} is not available for {}", b, p))),
            None => p.branches().to_vec(),
        };
        for b in branches {
            let sol = build_solution(&p, b).map_err(run_err)?;
            let rep = verify_functional_system(&sol.x, &sol.y, &sol.z).map_err(run_err)?;
            solutions.push(SolutionJson {
                profile: p.to_string(),
                branch: b,
                z: sol.z.to_string(),
                x: sol.x.values().iter().map(Scalar::to_string).collect(),
                y: sol.y.values().iter().map(Scalar::to_string).collect(),
                certified: rep.passed(),
            });
        }
    }
    let ok = solutions.iter().all(|s| s.certified);
    let text: Vec<String> = solutions
        .iter()
        .map(|s| {
            format!(
                "{} {} branch {}: z = {}; x = [{}]; y = [{}]",
                if s.certified { "CERTIFIED" } else { "REJECTED" },
                s.profile,
                s.branch,
                s.z,
                s.x.join(", "),
                s.y.join(", ")
            )
        })
        .collect();
    emit(out, &SolveJson { d, solutions }, &text.join("\n"));
    Ok(ok)
}

fn cmd_verify(f: &Flags, out: Output) -> Result<bool, Failure> {
    let suite: Suite = need(f.suite.as_deref(), "suite")?.parse().map_err(usage)?;
    let opts = SuiteOptions { d: f.d, seed: f.seed.unwrap_or(1), samples: f.samples };
    let rep = run_suite(suite, &opts).map_err(|e| match e {
        ftlb_core::suites::SuiteError::Modulus(..) => usage(e),
        other => run_err(other),
    })?;
    let json = VerifyJson {
        suite: suite.name().to_string(),
        passed: rep.passed(),
        checks: rep
            .lines
            .iter()
            .map(|l| CheckJson { status: l.status().to_string(), label: l.label.clone(), detail: l.detail.clone() })
            .collect(),
    };
    emit(out, &json, &rep.to_string());
    Ok(rep.passed())
}

fn load_config(path: &PathBuf) -> Result<Flags, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {}", path.display(), e)))?;
    toml::from_str(&text).map_err(|e| usage(format!("{}: {}", path.display(), e)))
}

fn run(cli: Cli) -> Result<bool, Failure> {
    let cfg = match &cli.config {
        Some(p) => load_config(p)?,
        None => Flags::default(),
    };
    let (cmd, flags): (fn(&Flags, Output) -> Result<bool, Failure>, Flags) = match cli.command {
        Command::Invariant(f) => (cmd_invariant, f),
        Command::Trace(f) => (cmd_trace, f),
        Command::Solve(f) => (cmd_solve, f),
        Command::Verify(f) => (cmd_verify, f),
    };
    let flags = flags.or(cfg);
    let out = flags.output.unwrap_or_default();
    cmd(&flags, out)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(m)) => {
            eprintln!("error: {}", m);
            ExitCode::from(2)
        }
        Err(Failure::Run(m)) => {
            eprintln!("error: {}", m);
            ExitCode::from(1)
        }
    }
}
