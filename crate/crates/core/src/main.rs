use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde_json::{Map, Value};

use motzkin::bijections::BijectionError;
use motzkin::trees::{format_tree, parse_tree, path_to_tree, tree_to_path};
use motzkin::{
    all_avoiding, count_avoiding, BijectionRegistry, CheckId, ClassSpec, Harness, Mode, MotzkinPath, Pattern,
};

#[derive(Parser)]
#[command(name = "motzkin", version, about = "Motzkin paths, labeled trees and bijections between path classes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Apply a bijection (or its inverse) to a path.
    Apply {
        /// 1-5 or invol.
        #[arg(long)]
        bij: String,
        #[arg(long)]
        input: String,
        #[arg(long)]
        inverse: bool,
        #[arg(long, default_value = "checked")]
        mode: Mode,
    },
    /// List every n-path avoiding the given patterns.
    Enumerate {
        #[arg(long)]
        n: usize,
        /// Comma-separated, e.g. UU,DD.
        #[arg(long, default_value = "")]
        avoid: String,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Class sizes for n = 0..=max_n.
    Count {
        #[arg(long)]
        max_n: usize,
        #[arg(long, default_value = "")]
        avoid: String,
    },
    /// Path statistics.
    Stats {
        #[arg(long)]
        input: String,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Convert between paths and tree s-expressions.
    Tree(TreeArgs),
    /// Run verification checks.
    Verify {
        #[arg(long)]
        max_n: usize,
        /// `all` or a single check name.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
        /// Worker threads (default: all cores).
        #[arg(long)]
        threads: Option<usize>,
    },
    /// ASCII drawing of a path.
    Render {
        #[arg(long)]
        input: String,
    },
}

#[derive(Args)]
#[command(group(ArgGroup::new("direction").required(true).args(["to_tree", "to_path"])))]
struct TreeArgs {
    #[arg(long)]
    to_tree: bool,
    #[arg(long)]
    to_path: bool,
    #[arg(long)]
    input: String,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Json,
}

/// An error with the exit code it maps to.
struct Failure(u8, String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(2, e.to_string())
    }
}

fn bijection_failure(e: BijectionError) -> Failure {
    let code = match e {
        BijectionError::ModeMismatch { .. } | BijectionError::InverseMismatch { .. } => 3,
        BijectionError::DomainViolation { .. } | BijectionError::UnknownBijection(_) => 2,
    };
    Failure(code, e.to_string())
}

fn avoid_list(text: &str) -> Result<Vec<Pattern>, Failure> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    Ok(Pattern::parse_list(text)?)
}

fn plain_value(v: &Value) -> String {
    match v {
        Value::Null => "none".to_string(),
        Value::Array(items) => items.iter().map(plain_value).collect::<Vec<_>>().join(","),
        other => other.to_string(),
    }
}

fn stats_object(p: &MotzkinPath) -> Map<String, Value> {
    match serde_json::to_value(p.statistics()).expect("statistics serialize") {
        Value::Object(m) => m,
        _ => unreachable!("statistics serialize to an object"),
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Apply { bij, input, inverse, mode } => {
            let registry = BijectionRegistry::standard();
            let b = registry.lookup(&bij).map_err(bijection_failure)?;
            let p: MotzkinPath = input.parse()?;
            let out = if inverse { b.apply_inverse(&p, mode) } else { b.apply(&p, mode) };
            println!("{}", out.map_err(bijection_failure)?);
        }
        Command::Enumerate { n, avoid, format } => {
            let spec = ClassSpec::new(n, &avoid_list(&avoid)?);
            for p in all_avoiding(&spec) {
                match format {
                    Format::Plain => println!("{p}"),
                    Format::Json => {
                        let mut record = Map::new();
                        record.insert("path".into(), Value::String(p.to_string()));
                        record.extend(stats_object(&p));
                        println!("{}", Value::Object(record));
                    }
                }
            }
        }
        Command::Count { max_n, avoid } => {
            let avoid = avoid_list(&avoid)?;
            for n in 0..=max_n {
                println!("{n}\t{}", count_avoiding(&ClassSpec::new(n, &avoid)));
            }
        }
        Command::Stats { input, format } => {
            let p: MotzkinPath = input.parse()?;
            let stats = stats_object(&p);
            match format {
                Format::Plain => {
                    for (k, v) in &stats {
                        println!("{k}\t{}", plain_value(v));
                    }
                }
                Format::Json => println!("{}", Value::Object(stats)),
            }
        }
        Command::Tree(args) => {
            if args.to_tree {
                let p: MotzkinPath = args.input.parse()?;
                println!("{}", format_tree(&path_to_tree(&p)));
            } else {
                println!("{}", tree_to_path(&parse_tree(&args.input)?));
            }
        }
        Command::Verify { max_n, suite, format, threads } => {
            let checks: Vec<CheckId> =
                if suite.eq_ignore_ascii_case("all") { Vec::new() } else { vec![suite.parse::<CheckId>()?] };
            let pool = rayon::ThreadPoolBuilder::new().num_threads(threads.unwrap_or(0)).build()?;
            let harness = Harness::standard();
            let reports = pool.install(|| {
                if checks.is_empty() {
                    harness.run_all(max_n)
                } else {
                    checks.iter().map(|&c| harness.run_check(c, max_n)).collect()
                }
            });
            for r in &reports {
                match format {
                    Format::Json => println!("{}", r.to_json()),
                    Format::Plain => {
                        println!("{}", r.summary_line());
                        for f in r.failures.iter().take(10) {
                            println!(
                                "  {}: input={:?} expected={:?} actual={:?}",
                                f.detail, f.input, f.expected, f.actual
                            );
                        }
                        if r.failures.len() > 10 {
                            println!("  ... {} more", r.failures.len() - 10);
                        }
                    }
                }
            }
            if reports.iter().any(|r| !r.passed()) {
                return Ok(1);
            }
        }
        Command::Render { input } => {
            let p: MotzkinPath = input.parse()?;
            let drawing = p.render_ascii();
            if !drawing.is_empty() {
                println!("{drawing}");
            }
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(Failure(code, message)) => {
            eprintln!("error: {message}");
            ExitCode::from(code)
        }
    }
}
