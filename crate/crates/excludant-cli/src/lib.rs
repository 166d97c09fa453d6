//! Batch front end: sequence generation, identity verification, bijection
//! exploration, and asymptotic reports, with table/CSV/JSON output.
//!
//! Exit codes are stable across commands: 0 success, 1 a requested
//! verification failed, 2 usage or input error, 3 enumeration budget
//! exceeded.

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use excludant_core::asymptotics::AsymContext;
use excludant_core::bijection::{check_bijection, phi, phi_inverse, BijectionInput};
use excludant_core::identities::{series_sequence, verify, TheoremId, VerificationReport};
use excludant_core::partitions::{FerrersDiagram, Partition, PartitionClass};
use excludant_core::qseries::TruncatedSeries;
use excludant_core::statistics::{
    sequence_value_with_budget, StatisticId, DEFAULT_ENUMERATION_BUDGET,
};
use excludant_core::Error as CoreError;

pub mod format;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "excludant",
    about = "Exact engine for excludant statistics on integer partitions",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print a statistic's sequence values for n = 0..=n_max.
    Seq(SeqArgs),
    /// Verify generating-function identities three ways.
    Verify(VerifyArgs),
    /// Apply the staircase bijection or check it exhaustively.
    Bijection(BijectionArgs),
    /// Compare exact sequence values against asymptotic main terms.
    Asym(AsymArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Table,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Engine {
    Enumerate,
    Series,
}

#[derive(Debug, Args)]
pub struct SeqArgs {
    /// Statistic name (see --list).
    #[arg(long)]
    pub stat: Option<String>,
    /// Largest n to print.
    #[arg(long)]
    pub n: Option<u32>,
    #[arg(long, value_enum, default_value_t = Engine::Enumerate)]
    pub engine: Engine,
    #[arg(long, value_enum, default_value_t = OutputFormat::Table)]
    pub format: OutputFormat,
    /// Print the statistic catalog and exit.
    #[arg(long)]
    pub list: bool,
    /// Run both engines and require agreement.
    #[arg(long)]
    pub self_check: bool,
    /// Enumeration budget override.
    #[arg(long, default_value_t = DEFAULT_ENUMERATION_BUDGET)]
    pub budget: u32,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Verify every catalogued identity.
    #[arg(long, conflicts_with = "theorem")]
    pub all: bool,
    /// Single identity name (e.g. rem2).
    #[arg(long)]
    pub theorem: Option<String>,
    /// Series truncation order.
    #[arg(long, default_value_t = 300)]
    pub order: usize,
    /// Enumeration cross-check bound.
    #[arg(long = "enum", default_value_t = 40)]
    pub n_enum: u32,
    /// `deep` raises the series order to 2000.
    #[arg(long, default_value = "default")]
    pub profile: String,
    #[arg(long, value_enum, default_value_t = OutputFormat::Table)]
    pub format: OutputFormat,
}

#[derive(Debug, Args)]
pub struct BijectionArgs {
    /// Comma-separated partition literal, e.g. "6,4,3,1".
    #[arg(long, conflicts_with = "check")]
    pub map: Option<String>,
    /// Staircase parameter for --map.
    #[arg(long, default_value_t = 0)]
    pub k: u32,
    /// Target weight (defaults to weight + k(k+1)).
    #[arg(long)]
    pub n: Option<u32>,
    /// Exhaustively check the bijection at this weight.
    #[arg(long)]
    pub check: Option<u32>,
    /// Also print the augmented diagram and its split.
    #[arg(long)]
    pub diagram: bool,
    #[arg(long, value_enum, default_value_t = OutputFormat::Table)]
    pub format: OutputFormat,
}

#[derive(Debug, Args)]
pub struct AsymArgs {
    /// Statistic with a proven main term: a-o-od, a-e-od, or sigma-od-moex.
    #[arg(long)]
    pub stat: String,
    /// Comma-separated checkpoints.
    #[arg(long, default_value = "250,1000,4000")]
    pub checkpoints: String,
    /// Series order (defaults to the largest checkpoint).
    #[arg(long)]
    pub order: Option<usize>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
    pub format: OutputFormat,
}

/// Everything a command produces; `main` prints and exits accordingly.
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self { stdout, stderr: String::new(), code: EXIT_OK }
    }

    fn fail(code: i32, message: String) -> Self {
        Self { stdout: String::new(), stderr: message, code }
    }
}

pub fn execute(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Seq(args) => cmd_seq(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Bijection(args) => cmd_bijection(args),
        Command::Asym(args) => cmd_asym(args),
    }
}

fn parse_stat(name: &str) -> Result<StatisticId, Outcome> {
    StatisticId::from_name(name).ok_or_else(|| {
        let known: Vec<&str> = StatisticId::ALL.iter().map(|s| s.name()).collect();
        Outcome::fail(
            EXIT_USAGE,
            format!("unknown statistic `{name}`; known: {}", known.join(", ")),
        )
    })
}

fn cmd_seq(args: &SeqArgs) -> Outcome {
    if args.list {
        let mut out = String::new();
        for stat in StatisticId::ALL {
            let _ = writeln!(out, "{:16} {}", stat.name(), stat.description());
        }
        return Outcome::ok(out);
    }
    let (Some(stat), Some(n_max)) = (&args.stat, args.n) else {
        return Outcome::fail(EXIT_USAGE, "--stat and --n are required (or use --list)".into());
    };
    let stat = match parse_stat(stat) {
        Ok(s) => s,
        Err(o) => return o,
    };

    let by_enum = |n_max: u32| -> Result<Vec<num_bigint::BigInt>, Outcome> {
        let mut values = Vec::new();
        for n in 0..=n_max {
            match sequence_value_with_budget(stat, n, args.budget) {
                Ok(v) => values.push(num_bigint::BigInt::from(v)),
                Err(e @ CoreError::BudgetExceeded { .. }) => {
                    return Err(Outcome::fail(
                        EXIT_BUDGET,
                        format!("{e}; rerun with --engine series"),
                    ))
                }
                Err(e) => return Err(Outcome::fail(EXIT_USAGE, e.to_string())),
            }
        }
        Ok(values)
    };
    let by_series = |n_max: u32| -> Vec<num_bigint::BigInt> {
        let series = series_sequence(stat, n_max as usize);
        (0..=n_max as usize).map(|n| series.coeff(n)).collect()
    };

    let values = if args.self_check {
        let enumerated = match by_enum(n_max.min(args.budget)) {
            Ok(v) => v,
            Err(o) => return o,
        };
        let series = by_series(n_max);
        for (n, v) in enumerated.iter().enumerate() {
            if v != &series[n] {
                return Outcome::fail(
                    EXIT_VERIFY_FAILED,
                    format!("engines disagree for {} at n = {n}: {v} vs {}", stat.name(), series[n]),
                );
            }
        }
        series
    } else {
        match args.engine {
            Engine::Enumerate => match by_enum(n_max) {
                Ok(v) => v,
                Err(o) => return o,
            },
            Engine::Series => by_series(n_max),
        }
    };

    let out = match args.format {
        OutputFormat::Table => {
            let mut out = String::new();
            for (n, v) in values.iter().enumerate() {
                let _ = writeln!(out, "{n:6}  {v}");
            }
            out
        }
        OutputFormat::Csv => format::csv_rows(
            &["n", "value"],
            values.iter().enumerate().map(|(n, v)| vec![n.to_string(), v.to_string()]),
        ),
        OutputFormat::Json => format::sequence_json(stat.name(), engine_name(args), &values),
    };
    Outcome::ok(out)
}

fn engine_name(args: &SeqArgs) -> &'static str {
    if args.self_check {
        "self-check"
    } else {
        match args.engine {
            Engine::Enumerate => "enumerate",
            Engine::Series => "series",
        }
    }
}

fn cmd_verify(args: &VerifyArgs) -> Outcome {
    let order = match args.profile.as_str() {
        "default" => args.order,
        "deep" => 2000,
        other => {
            return Outcome::fail(EXIT_USAGE, format!("unknown profile `{other}`"));
        }
    };
    let theorems: Vec<TheoremId> = if args.all || args.theorem.is_none() {
        TheoremId::ALL.to_vec()
    } else {
        let name = args.theorem.as_deref().unwrap();
        match TheoremId::from_name(name) {
            Some(t) => vec![t],
            None => {
                let known: Vec<&str> = TheoremId::ALL.iter().map(|t| t.name()).collect();
                return Outcome::fail(
                    EXIT_USAGE,
                    format!("unknown theorem `{name}`; known: {}", known.join(", ")),
                );
            }
        }
    };

    let mut reports: Vec<VerificationReport> = Vec::new();
    for theorem in theorems {
        // the bivariate refinement keeps its own enumeration-scale bound
        let order = if theorem == TheoremId::Meex4e { order.min(60) } else { order };
        match verify(theorem, order, args.n_enum) {
            Ok(r) => reports.push(r),
            Err(e) => return Outcome::fail(EXIT_USAGE, e.to_string()),
        }
    }

    let all_pass = reports.iter().all(|r| r.pass);
    let out = match args.format {
        OutputFormat::Table => {
            let mut out = String::new();
            for r in &reports {
                let status = if r.pass { "pass" } else { "FAIL" };
                let detail = match &r.mismatch {
                    None => String::new(),
                    Some(m) => format!(
                        "  first mismatch n = {}{} enum {} defn {} closed {}",
                        m.n,
                        m.w_power.map(|j| format!(" w^{j}")).unwrap_or_default(),
                        m.enumeration
                            .as_ref()
                            .map(|v| v.to_string())
                            .unwrap_or_else(|| "-".into()),
                        m.definitional,
                        m.closed_form
                    ),
                };
                let _ = writeln!(
                    out,
                    "{:14} order {:5} enum {:3} {status}{detail}",
                    r.theorem.name(),
                    r.order,
                    r.n_enum
                );
            }
            out
        }
        OutputFormat::Csv => format::csv_rows(
            &["theorem", "order", "n_enum", "status", "mismatch_n"],
            reports.iter().map(|r| {
                vec![
                    r.theorem.name().to_string(),
                    r.order.to_string(),
                    r.n_enum.to_string(),
                    if r.pass { "pass".into() } else { "fail".to_string() },
                    r.mismatch.as_ref().map(|m| m.n.to_string()).unwrap_or_default(),
                ]
            }),
        ),
        OutputFormat::Json => format::reports_json(&reports),
    };
    Outcome {
        stdout: out,
        stderr: String::new(),
        code: if all_pass { EXIT_OK } else { EXIT_VERIFY_FAILED },
    }
}

fn parse_partition_literal(s: &str) -> Result<Partition, String> {
    let mut parts = Vec::new();
    for token in s.split(',') {
        let token = token.trim();
        if token.is_empty() {
            continue;
        }
        match token.parse::<u32>() {
            Ok(0) | Err(_) => return Err(format!("bad part `{token}` in partition literal")),
            Ok(v) => parts.push(v),
        }
    }
    Partition::new(parts).map_err(|e| e.to_string())
}

fn cmd_bijection(args: &BijectionArgs) -> Outcome {
    if let Some(n) = args.check {
        let report = check_bijection(n);
        let out = match args.format {
            OutputFormat::Json => format::bijection_report_json(&report),
            _ => {
                let status = if report.pass { "pass" } else { "FAIL" };
                format!(
                    "n = {}: {status}  domain {} image {}{}\n",
                    report.n,
                    report.domain_size,
                    report.image_size,
                    report.failure.as_ref().map(|f| format!("  ({f})")).unwrap_or_default()
                )
            }
        };
        return Outcome {
            stdout: out,
            stderr: String::new(),
            code: if report.pass { EXIT_OK } else { EXIT_VERIFY_FAILED },
        };
    }

    let Some(literal) = &args.map else {
        return Outcome::fail(EXIT_USAGE, "either --map or --check is required".into());
    };
    let partition = match parse_partition_literal(literal) {
        Ok(p) => p,
        Err(e) => return Outcome::fail(EXIT_USAGE, e),
    };
    if !partition.is_in_class(PartitionClass::DistinctOddParts) {
        return Outcome::fail(
            EXIT_USAGE,
            format!("{partition} repeats an odd part; the domain needs distinct odd parts"),
        );
    }
    let k = args.k;
    let staircase_weight = (k as u64) * (k as u64 + 1);
    let implied = partition.weight() + staircase_weight;
    if implied > u32::MAX as u64 {
        return Outcome::fail(EXIT_USAGE, format!("staircase parameter {k} is too large"));
    }
    let target = args.n.unwrap_or(implied as u32);
    let input = BijectionInput { partition, staircase: k };
    let image = match phi(&input, target) {
        Ok(cp) => cp,
        Err(e @ CoreError::WeightMismatch { .. }) | Err(e @ CoreError::ClassViolation(_)) => {
            return Outcome::fail(EXIT_USAGE, e.to_string())
        }
        Err(e) => return Outcome::fail(EXIT_USAGE, e.to_string()),
    };

    let mut out = String::new();
    match args.format {
        OutputFormat::Json => {
            out = format::colored_json(&image);
        }
        _ => {
            let _ = writeln!(out, "{image}");
        }
    }
    if args.diagram {
        let halved = Partition::new(
            input
                .partition
                .parts()
                .iter()
                .filter(|p| *p % 2 == 0)
                .map(|p| p / 2)
                .collect(),
        )
        .expect("positive");
        let augmented = FerrersDiagram::augmented(&halved, k);
        let _ = writeln!(out, "augmented diagram (staircase + halved evens):");
        out.push_str(&augmented.render_ascii());
        // round trip as a sanity line
        let back = phi_inverse(&image).expect("image round-trips");
        let _ = writeln!(out, "inverse: {} with staircase {}", back.partition, back.staircase);
    }
    Outcome::ok(out)
}

fn cmd_asym(args: &AsymArgs) -> Outcome {
    let stat = match parse_stat(&args.stat) {
        Ok(s) => s,
        Err(o) => return o,
    };
    let mut checkpoints = Vec::new();
    for token in args.checkpoints.split(',') {
        match token.trim().parse::<u64>() {
            Ok(v) if v >= 1 => checkpoints.push(v),
            _ => {
                return Outcome::fail(EXIT_USAGE, format!("bad checkpoint `{}`", token.trim()));
            }
        }
    }
    if checkpoints.is_empty() {
        return Outcome::fail(EXIT_USAGE, "no checkpoints given".into());
    }
    let digits = std::env::var("ASYM_PRECISION_DIGITS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .unwrap_or(excludant_core::asymptotics::DEFAULT_PRECISION_DIGITS);
    let mut ctx = AsymContext::new(digits);
    // refuse unsupported statistics before the series work
    if let Err(e @ CoreError::NoAsymptoticLaw(_)) = ctx.params_for(stat) {
        return Outcome::fail(EXIT_USAGE, format!("{e}: no asymptotic law in source"));
    }
    let order = args.order.unwrap_or(*checkpoints.iter().max().unwrap() as usize);
    let series: TruncatedSeries = series_sequence(stat, order);
    let report = match ctx.convergence_report(stat, &checkpoints, &series) {
        Ok(r) => r,
        Err(e) => return Outcome::fail(EXIT_USAGE, e.to_string()),
    };

    let mut rows = Vec::new();
    for p in &report.points {
        rows.push(vec![
            p.n.to_string(),
            p.exact.to_string(),
            ctx.format_scientific(&p.predicted, 20),
            ctx.format_fixed(&p.ratio, 12),
        ]);
    }
    let out = match args.format {
        OutputFormat::Json => format::convergence_json(stat.name(), &rows),
        OutputFormat::Csv => {
            format::csv_rows(&["n", "exact", "predicted", "ratio"], rows.into_iter())
        }
        OutputFormat::Table => {
            let mut out = String::new();
            for row in rows {
                let _ = writeln!(out, "{:>6}  {:>24}  {:>28}  {}", row[0], row[1], row[2], row[3]);
            }
            out
        }
    };
    Outcome::ok(out)
}
