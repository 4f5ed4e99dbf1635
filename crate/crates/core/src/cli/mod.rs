//! Command-line front end: `eval`, `table` and `verify`.
//!
//! Exit codes: 0 success, 1 verification failure (any `mismatch` or
//! `float_only` report), 2 usage, configuration or domain error.

pub mod registry;
pub mod source;
pub mod sweep;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::exact::parse_rational;
use crate::fracops::{ae_frac_diff, frac_sum_diff, mr_frac_diff, nabla_poch_diff, FracOrder};
use crate::gridfn::sample_falling_power;
use crate::identities::{hyp3f2_terminating, status_counts, Status, VerificationReport};
use crate::special::{falling, gen_binomial, pochhammer};
use crate::{Rational, Scalar};
use source::{ExactFn, FunctionSpec};
use sweep::{default_suite, parse_configs, Literal, OutputFormat, SweepConfig};

pub use registry::IDENTITIES;

const EXIT_OK: i32 = 0;
const EXIT_FAILURE: i32 = 1;
const EXIT_USAGE: i32 = 2;

fn rational_arg(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

#[derive(Debug, Parser)]
#[command(name = "fracdiff", version, about = "Exact discrete fractional calculus")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate a special function or operator at one point.
    Eval(EvalArgs),
    /// Tabulate a grid function as CSV or JSON.
    Table(TableArgs),
    /// Verify an identity at one point or over a sweep.
    Verify(Box<VerifyArgs>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EvalSubject {
    Falling,
    Poch,
    Binom,
    Fracsum,
    Mrdiff,
    Aediff,
    Nabla,
    Hyp3f2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableSubject {
    /// The `--f` function itself.
    Source,
    /// `(s−a)^(μ)` on the grid starting at `a+μ`.
    FallingPower,
    Fracsum,
    Mrdiff,
    Aediff,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, ValueEnum)]
pub enum EvalFormat {
    #[default]
    Text,
    Json,
}

/// Operator and special-function inputs shared by `eval` and `table`.
#[derive(Debug, Default, Args)]
pub struct OperatorArgs {
    #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
    pub x: Option<Rational>,
    #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
    pub y: Option<Rational>,
    #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
    pub alpha: Option<Rational>,
    #[arg(long)]
    pub n: Option<usize>,
    /// Grid origin.
    #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
    pub a: Option<Rational>,
    #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
    pub nu: Option<Rational>,
    #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
    pub mu: Option<Rational>,
    /// Input function: const:q | falling:mu | table:q,q,... | random:seed
    #[arg(long)]
    pub f: Option<FunctionSpec>,
    /// Number of input samples.
    #[arg(long)]
    pub len: Option<usize>,
    #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
    pub p: Option<Rational>,
    #[arg(long)]
    pub t_index: Option<usize>,
    #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
    pub a1: Option<Rational>,
    #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
    pub a2: Option<Rational>,
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
    pub b1: Option<Rational>,
    #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
    pub b2: Option<Rational>,
    #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
    pub z: Option<Rational>,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    #[arg(value_enum)]
    pub subject: EvalSubject,
    #[command(flatten)]
    pub op: OperatorArgs,
    /// Output index for grid operators; all values are printed if omitted.
    #[arg(long)]
    pub at: Option<usize>,
    #[arg(long, value_enum, default_value_t)]
    pub format: EvalFormat,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    #[default]
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(value_enum)]
    pub subject: TableSubject,
    #[command(flatten)]
    pub op: OperatorArgs,
    #[arg(long, value_enum, default_value_t)]
    pub format: TableFormat,
}

#[derive(Debug, Default, Args)]
pub struct VerifyArgs {
    /// Identity name, or `all` for the built-in suite.
    pub identity: String,
    /// Sweep config: one JSON object or an array of them.
    #[arg(long)]
    pub config: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub format: Option<OutputFormat>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long)]
    pub max_window: Option<usize>,
    /// Evaluate outside the identity's hypotheses (saalschutz).
    #[arg(long)]
    pub force: bool,
    #[command(flatten)]
    pub point: PointArgs,
}

/// Single-point verifier parameters.
#[derive(Debug, Default, Args)]
pub struct PointArgs {
    #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
    pub a: Option<Rational>,
    /// Saalschütz `a`.
    #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
    pub pa: Option<Rational>,
    /// Saalschütz `b`.
    #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
    pub pb: Option<Rational>,
    /// Saalschütz `c`.
    #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
    pub pc: Option<Rational>,
    #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
    pub m: Option<Rational>,
    #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
    pub mu: Option<Rational>,
    #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
    pub nu: Option<Rational>,
    #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
    pub n_max: Option<Rational>,
    /// `n`, or `N` for form1.
    #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
    pub n: Option<Rational>,
    #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
    pub x: Option<Rational>,
    #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
    pub y: Option<Rational>,
    #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
    pub p: Option<Rational>,
    #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
    pub alpha: Option<Rational>,
    #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
    pub t_index: Option<Rational>,
    #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
    pub k: Option<Rational>,
    #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
    pub t: Option<Rational>,
    #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
    pub beta: Option<Rational>,
    #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
    pub gamma: Option<Rational>,
    /// `mu+nu` for gamma-sum.
    #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
    pub sum: Option<Rational>,
    #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
    pub trial: Option<Rational>,
}

impl PointArgs {
    fn named(&self) -> Vec<(&'static str, &Rational)> {
        [
            ("a", &self.a),
            ("pa", &self.pa),
            ("pb", &self.pb),
            ("pc", &self.pc),
            ("m", &self.m),
            ("mu", &self.mu),
            ("nu", &self.nu),
            ("n_max", &self.n_max),
            ("n", &self.n),
            ("x", &self.x),
            ("y", &self.y),
            ("p", &self.p),
            ("alpha", &self.alpha),
            ("t_index", &self.t_index),
            ("k", &self.k),
            ("t", &self.t),
            ("beta", &self.beta),
            ("gamma", &self.gamma),
            ("sum", &self.sum),
            ("trial", &self.trial),
        ]
        .into_iter()
        .filter_map(|(name, v)| v.as_ref().map(|v| (name, v)))
        .collect()
    }
}

/// Usage or domain problem, reported on stderr with exit code 2.
#[derive(Debug)]
struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        Self(e.to_string())
    }
}

type CliResult<T> = std::result::Result<T, UsageError>;

fn need<'a, T>(v: &'a Option<T>, flag: &str) -> CliResult<&'a T> {
    v.as_ref().ok_or_else(|| UsageError(format!("missing required flag --{flag}")))
}

/// Parses `args` (including the program name) and runs the command,
/// returning the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{text}") } else { write!(out, "{text}") };
            return code;
        }
    };
    let result = match &cli.command {
        Command::Eval(args) => cmd_eval(args, out).map(|()| EXIT_OK),
        Command::Table(args) => cmd_table(args, out).map(|()| EXIT_OK),
        Command::Verify(args) => cmd_verify(args, out, err),
    };
    match result {
        Ok(code) => code,
        Err(UsageError(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn input_function(op: &OperatorArgs, len: usize) -> CliResult<ExactFn> {
    let a = need(&op.a, "a")?;
    Ok(need(&op.f, "f")?.sample(a, len)?)
}

/// Input length: `--len` (a table's own length by default), or just long enough to reach output index `at`
/// when the operator consumes `extra` additional samples.
fn input_len(op: &OperatorArgs, at: Option<usize>, extra: usize) -> CliResult<usize> {
    let needed = at.map(|k| k + extra + 1);
    let len = match &op.f {
        Some(FunctionSpec::Table(vals)) => Some(op.len.unwrap_or(vals.len())),
        _ => op.len,
    };
    match (len, needed) {
        (Some(len), Some(needed)) if len < needed => Err(UsageError(format!(
            "--len {len} is too short for --at {}: need {needed} samples",
            at.unwrap_or_default()
        ))),
        (Some(len), _) => Ok(len),
        (None, Some(needed)) => Ok(needed),
        (None, None) => Err(UsageError("missing required flag --len".into())),
    }
}

/// Runs a grid operator subject on the `--f` input.
fn grid_operator(subject: TableSubject, op: &OperatorArgs, at: Option<usize>) -> CliResult<ExactFn> {
    match subject {
        TableSubject::Source => input_function(op, input_len(op, at, 0)?),
        TableSubject::FallingPower => Ok(sample_falling_power(
            need(&op.a, "a")?,
            need(&op.mu, "mu")?,
            input_len(op, at, 0)?,
        )?),
        TableSubject::Fracsum => {
            let nu = FracOrder::new(need(&op.nu, "nu")?.clone())?;
            Ok(frac_sum_diff(&input_function(op, input_len(op, at, 0)?)?, &nu))
        }
        TableSubject::Mrdiff => {
            let mu = need(&op.mu, "mu")?;
            Ok(mr_frac_diff(&input_function(op, input_len(op, at, 0)?)?, mu)?)
        }
        TableSubject::Aediff => {
            let mu = need(&op.mu, "mu")?;
            let extra = mu.ceil_int().and_then(|n| usize::try_from(n).ok()).unwrap_or(0);
            Ok(ae_frac_diff(&input_function(op, input_len(op, at, extra)?)?, mu)?)
        }
    }
}

#[derive(Serialize)]
struct EvalOutput {
    subject: String,
    value: String,
    approx: Option<f64>,
}

fn cmd_eval(args: &EvalArgs, out: &mut dyn Write) -> CliResult<()> {
    let op = &args.op;
    let exact = |v: crate::GammaPolynomial| (v.to_string(), Some(v.to_float()));
    let special = |v: crate::special::SpecialValue| {
        let approx = v.to_polynomial().map(|p| p.to_float());
        (v.to_string(), approx)
    };
    let rational = |q: Rational| exact(crate::GammaPolynomial::constant(q));
    let values: Vec<(String, Option<f64>)> = match args.subject {
        EvalSubject::Falling => vec![special(falling(need(&op.x, "x")?, need(&op.y, "y")?))],
        EvalSubject::Poch => vec![special(pochhammer(need(&op.x, "x")?, need(&op.y, "y")?))],
        EvalSubject::Binom => vec![rational(gen_binomial(need(&op.alpha, "alpha")?, *need(&op.n, "n")?))],
        EvalSubject::Nabla => vec![exact(nabla_poch_diff(
            need(&op.a, "a")?,
            need(&op.p, "p")?,
            need(&op.alpha, "alpha")?,
            *need(&op.t_index, "t-index")?,
        )?)],
        EvalSubject::Hyp3f2 => vec![rational(hyp3f2_terminating(
            need(&op.a1, "a1")?,
            need(&op.a2, "a2")?,
            *need(&op.m, "m")?,
            need(&op.b1, "b1")?,
            need(&op.b2, "b2")?,
            need(&op.z, "z")?,
        )?)],
        EvalSubject::Fracsum | EvalSubject::Mrdiff | EvalSubject::Aediff => {
            let subject = match args.subject {
                EvalSubject::Fracsum => TableSubject::Fracsum,
                EvalSubject::Mrdiff => TableSubject::Mrdiff,
                _ => TableSubject::Aediff,
            };
            let g = grid_operator(subject, op, args.at)?;
            match args.at {
                Some(k) => {
                    let v = g.get(k).ok_or_else(|| {
                        UsageError(format!("--at {k} is outside the output window of {} values", g.len()))
                    })?;
                    vec![exact(v.clone())]
                }
                None => g.values().iter().cloned().map(exact).collect(),
            }
        }
    };
    let subject = args.subject.to_possible_value().expect("no skipped variants").get_name().to_string();
    for (value, approx) in values {
        match args.format {
            EvalFormat::Text => writeln!(out, "{value}")?,
            EvalFormat::Json => {
                let rec = EvalOutput { subject: subject.clone(), value, approx };
                writeln!(out, "{}", serde_json::to_string(&rec)?)?;
            }
        }
    }
    Ok(())
}

fn cmd_table(args: &TableArgs, out: &mut dyn Write) -> CliResult<()> {
    let g = grid_operator(args.subject, &args.op, None)?;
    match args.format {
        TableFormat::Csv => {
            writeln!(out, "point,value")?;
            for (t, v) in g.samples() {
                writeln!(out, "{t},{v}")?;
            }
        }
        TableFormat::Json => writeln!(out, "{}", serde_json::to_string(&g)?)?,
    }
    Ok(())
}

/// Builds the sweep list for `verify`.
fn verify_configs(args: &VerifyArgs) -> CliResult<Vec<SweepConfig>> {
    let all = args.identity == "all";
    if !all && registry::lookup(&args.identity).is_none() {
        let names: Vec<&str> = IDENTITIES.iter().map(|s| s.name).collect();
        return Err(UsageError(format!(
            "unknown identity '{}' (expected all, {})",
            args.identity,
            names.join(", ")
        )));
    }
    let named = args.point.named();
    let mut configs = if let Some(path) = &args.config {
        if !named.is_empty() {
            return Err(UsageError("parameter flags cannot be combined with --config".into()));
        }
        let text = std::fs::read_to_string(path)
            .map_err(|e| UsageError(format!("cannot read {}: {e}", path.display())))?;
        let configs = parse_configs(&text)?;
        if let Some(c) = configs.iter().find(|c| !all && c.identity != args.identity) {
            return Err(UsageError(format!(
                "config sweeps '{}' but the command names '{}'",
                c.identity, args.identity
            )));
        }
        configs
    } else if named.is_empty() {
        default_suite()
            .into_iter()
            .filter(|c| all || c.identity == args.identity)
            .collect()
    } else if all {
        return Err(UsageError("verify all takes no parameter flags".into()));
    } else {
        let mut fixed = std::collections::BTreeMap::new();
        for (flag, value) in named {
            let name = match (args.identity.as_str(), flag) {
                ("saalschutz", "pa") => "a",
                ("saalschutz", "pb") => "b",
                ("saalschutz", "pc") => "c",
                ("form1", "n") => "N",
                _ => flag,
            };
            if fixed.insert(name.to_string(), Literal::Text(value.to_string())).is_some() {
                return Err(UsageError(format!("parameter '{name}' given twice")));
            }
        }
        vec![SweepConfig {
            identity: args.identity.clone(),
            fixed,
            swept: Default::default(),
            max_window: 12,
            output: OutputFormat::Json,
            seed: 0,
            samples: None,
            force: false,
        }]
    };
    for c in &mut configs {
        if let Some(seed) = args.seed {
            c.seed = seed;
        }
        if let Some(w) = args.max_window {
            c.max_window = w;
        }
        c.force |= args.force;
    }
    Ok(configs)
}

fn csv_row(r: &VerificationReport) -> String {
    [
        r.identity_name.clone(),
        r.params_string(),
        r.status.to_string(),
        r.lhs.clone().unwrap_or_default(),
        r.rhs.clone().unwrap_or_default(),
        r.abs_float_gap.map(|g| g.to_string()).unwrap_or_default(),
        r.reason.clone().unwrap_or_default(),
    ]
    .join(",")
}

fn cmd_verify(args: &VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> CliResult<i32> {
    let configs = verify_configs(args)?;
    let format = args
        .format
        .or_else(|| configs.first().map(|c| c.output))
        .unwrap_or_default();
    if format == OutputFormat::Csv {
        writeln!(out, "identity,params,status,lhs,rhs,abs_float_gap,reason")?;
    }
    let mut counts = status_counts([]);
    for config in &configs {
        let reports = config.run()?;
        for r in &reports {
            match format {
                OutputFormat::Json => writeln!(out, "{}", serde_json::to_string(r)?)?,
                OutputFormat::Csv => writeln!(out, "{}", csv_row(r))?,
            }
        }
        for (status, n) in status_counts(&reports) {
            *counts.entry(status).or_default() += n;
        }
    }
    let total: usize = counts.values().sum();
    let summary: Vec<String> = counts.iter().map(|(s, n)| format!("{s}={n}")).collect();
    writeln!(err, "summary: {} total={total}", summary.join(" "))?;
    Ok(verify_exit_code(&counts))
}

/// 1 if any `mismatch` or `float_only` report was produced, else 0.
fn verify_exit_code(counts: &std::collections::BTreeMap<Status, usize>) -> i32 {
    let failed = counts.iter().any(|(s, n)| s.is_failure() && *n > 0);
    if failed {
        EXIT_FAILURE
    } else {
        EXIT_OK
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("fracdiff").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn eval_examples() {
        assert_eq!(run_str(&["eval", "falling", "--x", "5", "--y", "2"]).1, "20\n");
        assert_eq!(
            run_str(&["eval", "nabla", "--a", "0", "--p", "1/2", "--alpha", "3/2", "--t-index", "1"]).1,
            "1/2*G(1/2)^1\n"
        );
        assert_eq!(
            run_str(&["eval", "fracsum", "--a", "0", "--nu", "1/2", "--f", "const:1", "--len", "3", "--at", "2"]).1,
            "15/8\n"
        );
        assert_eq!(run_str(&["eval", "poch", "--x", "-2", "--y", "1/2"]).1, "0\n");
        assert_eq!(run_str(&["eval", "poch", "--x", "1/2", "--y", "-5/2"]).1, "pole\n");
        assert_eq!(run_str(&["eval", "binom", "--alpha", "-1/2", "--n", "2"]).1, "3/8\n");
        assert_eq!(
            run_str(&["eval", "hyp3f2", "--a1", "1/2", "--a2", "1/2", "--m", "1", "--b1", "2", "--b2", "-1", "--z", "1"]).1,
            "9/8\n"
        );
        let (code, out, _) =
            run_str(&["eval", "aediff", "--a", "0", "--mu", "1/2", "--f", "table:1,2,4", "--format", "json"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), 2);
    }

    #[test]
    fn eval_errors_exit_two() {
        let (code, _, err) =
            run_str(&["eval", "fracsum", "--a", "0", "--nu", "-1", "--f", "const:1", "--len", "3"]);
        assert_eq!(code, 2);
        assert!(err.contains("nu must not be a nonpositive integer"), "{err}");
        assert_eq!(run_str(&["eval", "falling", "--x", "5"]).0, 2);
        assert_eq!(run_str(&["eval", "falling", "--x", "1/0", "--y", "1"]).0, 2);
        assert_eq!(run_str(&["frobnicate"]).0, 2);
        assert_eq!(run_str(&["--help"]).0, 0);
    }

    #[test]
    fn table_examples() {
        let (code, out, _) =
            run_str(&["table", "fracsum", "--a", "0", "--nu", "1/2", "--f", "const:1", "--len", "4"]);
        assert_eq!(code, 0);
        assert_eq!(out, "point,value\n1/2,1\n3/2,3/2\n5/2,15/8\n7/2,35/16\n");
        let out = run_str(&["table", "falling-power", "--a", "0", "--mu", "1", "--len", "3"]).1;
        assert_eq!(out, "point,value\n1,1\n2,2\n3,3\n");
    }

    #[test]
    fn verify_single_points() {
        let (code, out, err) =
            run_str(&["verify", "saalschutz", "--pa", "1/2", "--pb", "1/2", "--pc", "2", "--m", "1"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), 1);
        assert!(out.contains(r#""status":"exact""#) && out.contains(r#""lhs":"9/8""#), "{out}");
        assert!(err.contains("exact=1"), "{err}");

        let (code, out, _) =
            run_str(&["verify", "power-rule", "--a", "0", "--mu", "1/2", "--nu", "1/2", "--n-max", "8"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().filter(|l| l.contains(r#""status":"exact""#)).count(), 9);

        let (code, out, _) = run_str(&[
            "verify", "form1", "--alpha", "1/2", "--beta", "1/4", "--gamma", "1/3", "--n", "3", "--format", "csv",
        ]);
        assert_eq!(code, 0);
        assert!(out.starts_with("identity,params,status"));
        assert!(out.lines().nth(1).unwrap().starts_with("form1,N=3;alpha=1/2;beta=1/4;gamma=1/3,exact,"));
    }

    #[test]
    fn failures_set_exit_one() {
        let mut counts = status_counts([]);
        *counts.get_mut(&Status::Exact).unwrap() = 3;
        *counts.get_mut(&Status::DomainExcluded).unwrap() = 2;
        *counts.get_mut(&Status::Pole).unwrap() = 1;
        assert_eq!(verify_exit_code(&counts), 0);
        for bad in [Status::Mismatch, Status::FloatOnly] {
            let mut c = counts.clone();
            *c.get_mut(&bad).unwrap() = 1;
            assert_eq!(verify_exit_code(&c), 1);
        }
    }

    #[test]
    fn verify_usage_errors() {
        assert_eq!(run_str(&["verify", "nope"]).0, 2);
        assert_eq!(run_str(&["verify", "saalschutz", "--pa", "1/2"]).0, 2);
        assert_eq!(run_str(&["verify", "binom-poch", "--x", "1", "--y", "1", "--n", "1", "--mu", "1"]).0, 2);
        assert_eq!(run_str(&["verify", "all", "--x", "1"]).0, 2);
        assert_eq!(run_str(&["verify", "all", "--config", "/nonexistent/sweeps.json"]).0, 2);
    }
}
