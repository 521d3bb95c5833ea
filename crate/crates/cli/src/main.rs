use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use ggl_core::identities::{check_identity_with, CheckMode, IdentityId};
use ggl_core::structure::structure_report;
use ggl_core::theorems::{count_class, run_suite, ClassCountQuery, ClassKind, NRange, SuiteConfig};
use ggl_core::{worked, Budget, Carrier, Error, Groupoid, GroupoidSpec, Shape};

// Output goes through these so a closed pipe (`ggl ... | head`) is not a panic.
fn emit(s: &str) {
    let _ = std::io::stdout().lock().write_all(s.as_bytes());
}

macro_rules! put {
    ($($t:tt)*) => { emit(&format!($($t)*)) };
}

macro_rules! say {
    ($($t:tt)*) => { emit(&(format!($($t)*) + "\n")) };
}

#[derive(Parser)]
#[command(name = "ggl", version, about = "Finite groupoids x*y = t*x + u*y: tables, identities, structure, verification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the Cayley table
    Table {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long, value_enum, default_value_t = TableFormat::Tsv)]
        format: TableFormat,
    },
    /// Check an identity
    Check {
        #[command(flatten)]
        spec: SpecArgs,
        /// Identity name, or `all`
        #[arg(long)]
        identity: String,
        /// exhaustive | auto | sampled:N:SEED
        #[arg(long, default_value = "auto")]
        mode: String,
    },
    /// Subgroupoids, ideals, normality, simplicity, Smarandache status
    Structure {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long, default_value_t = 20)]
        max_order: usize,
    },
    /// Run the verification suite
    Verify {
        /// `default`, or a path to a suite config (JSON)
        #[arg(long, default_value = "default")]
        suite: String,
        /// Comma-separated check ids
        #[arg(long, value_delimiter = ',')]
        only: Vec<String>,
        /// Override every check's modulus range, e.g. n=3..30
        #[arg(long)]
        range: Option<String>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
        format: ReportFormat,
        /// Suppress the elapsed-time footer on stderr
        #[arg(long)]
        no_timing: bool,
    },
    /// Count parameter pairs of a class
    Count {
        #[arg(long)]
        carrier: String,
        /// all-pairs | level-one-pairs | idempotent-pairs | equal-pairs
        #[arg(long)]
        class: String,
        /// Count pairs with t = u
        #[arg(long)]
        equal_pairs: bool,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
    },
    /// Replay a worked example
    Demo {
        /// Example id; `list` prints the available ids
        #[arg(long)]
        example: String,
    },
}

#[derive(Args)]
struct SpecArgs {
    /// zn:N, zni:N, nzn:N, o(...) or q
    #[arg(long)]
    carrier: String,
    /// scalar, mat:RxC, poly:D:entrywise|shuffle|conv
    #[arg(long, default_value = "scalar")]
    shape: String,
    /// T,U with an optional I suffix on either component
    #[arg(long)]
    pair: String,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Tsv,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

/// Failure classes, mapped onto exit codes.
enum Failure {
    Suite,
    Usage(String),
    Budget(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_budget() {
            Failure::Budget(e.to_string())
        } else {
            Failure::Usage(e.to_string())
        }
    }
}

type Outcome = std::result::Result<(), Failure>;

fn budget() -> Result<Budget, Failure> {
    let Ok(raw) = std::env::var("GGL_BUDGET") else {
        return Ok(Budget::default());
    };
    // a bare integer overrides the evaluation budget; JSON overrides any field
    if let Ok(evaluations) = raw.trim().parse::<u64>() {
        return Ok(Budget {
            evaluations,
            ..Budget::default()
        });
    }
    serde_json::from_str(&raw).map_err(|e| Failure::Usage(format!("GGL_BUDGET: {e}")))
}

fn build(args: &SpecArgs, budget: &Budget) -> Result<Groupoid, Failure> {
    let carrier: Carrier = args.carrier.parse()?;
    let shape: Shape = args.shape.parse()?;
    let (t, u) = args
        .pair
        .split_once(',')
        .ok_or_else(|| Failure::Usage(format!("bad pair `{}`, expected T,U", args.pair)))?;
    let spec = GroupoidSpec::new(carrier, shape, carrier.parse_param(t)?, carrier.parse_param(u)?)?;
    Ok(Groupoid::build_with(spec, budget)?)
}

fn print_json(v: &impl serde::Serialize) {
    say!("{}", serde_json::to_string_pretty(v).expect("serializable"));
}

fn run(cli: Cli) -> Outcome {
    let budget = budget()?;
    match cli.command {
        Command::Table { spec, format } => {
            let g = build(&spec, &budget)?;
            let table = g.cayley_table(budget.cayley_cap)?;
            match format {
                TableFormat::Tsv => put!("{}", table.to_tsv()),
                TableFormat::Json => say!("{}", table.to_json()),
            }
        }
        Command::Check { spec, identity, mode } => {
            let g = build(&spec, &budget)?;
            let mode: CheckMode = mode.parse()?;
            let ids = if identity == "all" {
                IdentityId::ALL.to_vec()
            } else {
                vec![identity.parse::<IdentityId>()?]
            };
            let verdicts = ids
                .into_iter()
                .map(|id| check_identity_with(&g, id, mode, &budget))
                .collect::<ggl_core::Result<Vec<_>>>()?;
            let body = json!({ "groupoid": g.to_string(), "verdicts": verdicts });
            print_json(&if verdicts.len() == 1 {
                json!({ "groupoid": g.to_string(), "verdict": verdicts[0] })
            } else {
                body
            });
        }
        Command::Structure { spec, max_order } => {
            let g = build(&spec, &budget)?;
            print_json(&structure_report(&g, max_order, &budget)?);
        }
        Command::Verify {
            suite,
            only,
            range,
            seed,
            format,
            no_timing,
        } => {
            let start = Instant::now();
            let mut config = if suite == "default" {
                SuiteConfig::default_suite(0)
            } else {
                let text = fs::read_to_string(PathBuf::from(&suite)).map_err(|e| Failure::Usage(format!("{suite}: {e}")))?;
                serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("{suite}: {e}")))?
            };
            if suite == "default" {
                config.budgets = budget;
            }
            if let Some(seed) = seed {
                config.seed = seed;
            }
            if !only.is_empty() {
                config = config.only(&only)?;
            }
            if let Some(r) = range {
                config = config.with_range(r.parse::<NRange>()?);
            }
            let report = run_suite(&config)?;
            match format {
                ReportFormat::Json => print_json(&report),
                ReportFormat::Text => {
                    for c in &report.checks {
                        let outcome = serde_json::to_value(c.outcome).expect("serializable");
                        say!(
                            "{:<10} {:<22} {:<11} instances={} {}",
                            c.id,
                            outcome.as_str().unwrap_or_default(),
                            serde_json::to_value(c.tier).expect("serializable").as_str().unwrap_or_default(),
                            c.instances,
                            c.title
                        );
                        for line in c.counterexamples.iter().chain(&c.details) {
                            say!("    {}", line.replace('\n', "\n    "));
                        }
                    }
                    let s = &report.summary;
                    say!("passed {}, failed {}, reported {}", s.passed, s.failed, s.reported);
                }
            }
            if !no_timing {
                eprintln!("elapsed: {:.2}s", start.elapsed().as_secs_f64());
            }
            if !report.success {
                return Err(Failure::Suite);
            }
        }
        Command::Count {
            carrier,
            class,
            equal_pairs,
            format,
        } => {
            let carrier: Carrier = carrier.parse()?;
            let kind: ClassKind = class.parse()?;
            let q = ClassCountQuery {
                carrier,
                kind,
                equal_pairs_included: equal_pairs,
            };
            let n = count_class(&q)?;
            match format {
                ReportFormat::Text => {
                    let eq = if equal_pairs { "included" } else { "excluded" };
                    say!("{n}\t{class} over {carrier}, ordered nonzero pairs, equal pairs {eq}");
                }
                ReportFormat::Json => print_json(&json!({ "query": q, "count": n })),
            }
        }
        Command::Demo { example } => {
            if example == "list" {
                for e in worked::EXAMPLES {
                    say!("{}\t{}", e.id, e.title);
                }
                return Ok(());
            }
            let r = worked::replay(&example)?;
            say!("example {}: {}", r.id, r.title);
            put!("{}", r.output);
            match (r.matches, r.errata) {
                (true, _) => say!("reference values: match"),
                (false, true) => put!("reference values differ (known miscalculation); printed values were:\n{}", r.golden),
                (false, false) => {
                    put!("reference values differ; expected:\n{}", r.golden);
                    return Err(Failure::Suite);
                }
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Suite) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Budget(msg)) => {
            eprintln!("{}", json!({ "error": "budget-exceeded", "message": msg }));
            ExitCode::from(3)
        }
    }
}
