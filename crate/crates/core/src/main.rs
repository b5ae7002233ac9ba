use std::fs;
use std::io::{self, Read as _};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use critsets::bench;
use critsets::graph::Bipartition;
use critsets::io::report::Method;
use critsets::io::{self as cio, analyze, parse_graph, render_graph, AnalyzeOptions, GraphDocument, GraphKind};
use critsets::oracle::OracleBounds;
use critsets::verify::battery::{run_battery, BatteryOptions, CheckResult, Status, CHECKS};
use critsets::verify::conjecture_search;

/// Critical independent sets, ker, diadem, core and corona.
#[derive(Parser)]
#[command(name = "critsets", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute every invariant of a graph.
    Analyze {
        #[command(flatten)]
        input: Input,
        /// Append the identity battery.
        #[arg(long)]
        verify: bool,
        /// Cross-check against exhaustive enumeration.
        #[arg(long)]
        oracle: bool,
        #[command(flatten)]
        out: Output,
        /// Omit the elapsed time from the report.
        #[arg(long)]
        no_timing: bool,
    },
    /// Run the identity battery.
    Verify {
        /// Graph file, `-` for stdin, or `fixture:<name>`.
        #[arg(required_unless_present = "list")]
        file: Option<String>,
        /// List the checks and exit.
        #[arg(long)]
        list: bool,
        /// Report only these check ids (comma separated).
        #[arg(long, value_delimiter = ',')]
        checks: Vec<String>,
        #[command(flatten)]
        out: Output,
    },
    /// Compute every invariant by exhaustive enumeration.
    Oracle {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        out: Output,
    },
    /// Write a seeded random graph.
    Generate {
        #[command(flatten)]
        spec: KindArgs,
        #[arg(long)]
        seed: u64,
        /// Instance number within the seed's streams.
        #[arg(long, default_value_t = 0)]
        stream: u64,
        /// Write here instead of stdout.
        #[arg(long, short)]
        output: Option<String>,
    },
    /// Search random graphs for |ker| + |diadem| > 2α.
    Search {
        #[command(flatten)]
        spec: KindArgs,
        #[arg(long)]
        count: u64,
        #[arg(long)]
        seed: u64,
        /// Worker threads; 0 uses every CPU.
        #[arg(long, default_value_t = 0)]
        workers: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Time the bipartite pipeline over doubling sizes.
    Bench {
        #[arg(long = "n-a", alias = "nA")]
        n_a: usize,
        #[arg(long = "n-b", alias = "nB")]
        n_b: usize,
        #[arg(long = "avg-deg", default_value_t = 10.0)]
        avg_deg: f64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Number of sizes, halving from the largest.
        #[arg(long, default_value_t = 4)]
        steps: u32,
        /// Runs per size; the fastest is reported.
        #[arg(long, default_value_t = 1)]
        repeats: usize,
        #[arg(long)]
        json: bool,
    },
    /// Print a built-in example graph.
    Fixture {
        #[arg(required_unless_present = "list")]
        name: Option<String>,
        #[arg(long)]
        list: bool,
    },
}

#[derive(Args)]
struct Input {
    /// Graph file, `-` for stdin, or `fixture:<name>`.
    file: String,
    /// Oracle vertex bound (overrides CRITSETS_ORACLE_BOUND).
    #[arg(long)]
    bound: Option<usize>,
}

#[derive(Args)]
struct Output {
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    General,
    Bipartite,
}

#[derive(Args)]
struct KindArgs {
    #[arg(long, value_enum)]
    kind: Kind,
    /// Vertices of a general graph.
    #[arg(long, required_if_eq("kind", "general"))]
    n: Option<usize>,
    #[arg(long = "n-a", alias = "nA", required_if_eq("kind", "bipartite"))]
    n_a: Option<usize>,
    #[arg(long = "n-b", alias = "nB", required_if_eq("kind", "bipartite"))]
    n_b: Option<usize>,
    /// Edge probability.
    #[arg(long)]
    p: f64,
}

impl KindArgs {
    fn kind(&self) -> GraphKind {
        match self.kind {
            Kind::General => GraphKind::General {
                n: self.n.unwrap(),
                p: self.p,
            },
            Kind::Bipartite => GraphKind::Bipartite {
                n_a: self.n_a.unwrap(),
                n_b: self.n_b.unwrap(),
                p: self.p,
            },
        }
    }
}

/// An input or usage problem: exit 1.
struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

fn bounds(bound: Option<usize>) -> OracleBounds {
    let b = OracleBounds::from_env();
    match bound {
        Some(v) => b.with_vertices(v),
        None => b,
    }
}

fn load(file: &str) -> Result<GraphDocument, Failure> {
    if let Some(name) = file.strip_prefix("fixture:") {
        return cio::fixture(name).ok_or_else(|| Failure(format!("unknown fixture `{name}`")));
    }
    let text = if file == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        s
    } else {
        fs::read_to_string(file).map_err(|e| Failure(format!("{file}: {e}")))?
    };
    parse_graph(&text).map_err(|e| Failure(format!("{file}: {e}")))
}

fn print_json<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string_pretty(value).expect("reports serialize"));
}

#[derive(Serialize)]
struct BatteryJson<'a> {
    schema: u32,
    graph: &'a str,
    passed: usize,
    failed: usize,
    skipped: usize,
    checks: &'a [CheckResult],
}

#[derive(Serialize)]
struct BenchJson<'a> {
    schema: u32,
    avg_deg: f64,
    seed: u64,
    rows: &'a [bench::BenchRow],
}

fn status_line(c: &CheckResult) -> String {
    match &c.status {
        Status::Pass { detail: Some(d) } => format!("PASS {}: {} [{d}]", c.id, c.statement),
        Status::Pass { detail: None } => format!("PASS {}: {}", c.id, c.statement),
        Status::Fail { witness } => format!("FAIL {}: {} [{witness}]", c.id, c.statement),
        Status::Skipped { reason } => format!("SKIP {}: {} [{reason}]", c.id, c.statement),
    }
}

fn run(cli: Cli) -> Result<bool, Failure> {
    match cli.command {
        Command::Analyze {
            input,
            verify,
            oracle,
            out,
            no_timing,
        } => {
            let doc = load(&input.file)?;
            let opts = AnalyzeOptions {
                method: Method::Auto,
                verify,
                oracle,
                bounds: bounds(input.bound),
                timing: !no_timing,
            };
            let r = analyze(&doc, &opts)?;
            if out.json {
                println!("{}", r.to_json());
            } else {
                print!("{}", r.to_text());
            }
            Ok(r.is_clean())
        }
        Command::Oracle { input, out } => {
            let doc = load(&input.file)?;
            let opts = AnalyzeOptions {
                method: Method::Oracle,
                bounds: bounds(input.bound),
                timing: false,
                ..AnalyzeOptions::default()
            };
            let r = analyze(&doc, &opts)?;
            if out.json {
                println!("{}", r.to_json());
            } else {
                print!("{}", r.to_text());
            }
            Ok(true)
        }
        Command::Verify { file, list, checks, out } => {
            if list {
                for c in CHECKS {
                    println!("{:<28} {:<15} {}", c.id, c.group.name(), c.statement);
                }
                return Ok(true);
            }
            if let Some(bad) = checks.iter().find(|id| !CHECKS.iter().any(|c| c.id == id.as_str())) {
                return Err(Failure(format!("unknown check `{bad}` (see `verify --list`)")));
            }
            let doc = load(file.as_deref().unwrap())?;
            let g = doc.graph();
            let declared: Option<Bipartition> = doc.declared_bipartition(&g).transpose()?;
            let opts = BatteryOptions {
                bounds: OracleBounds::from_env(),
                ..BatteryOptions::default()
            };
            let mut report = run_battery(&g, &doc.name, declared.as_ref(), doc.names.as_deref(), &opts);
            if !checks.is_empty() {
                report.checks.retain(|c| checks.iter().any(|id| id == c.id));
            }
            let failed = report.failures().count();
            if out.json {
                print_json(&BatteryJson {
                    schema: 1,
                    graph: &report.graph,
                    passed: report.passed(),
                    failed,
                    skipped: report.skipped(),
                    checks: &report.checks,
                });
            } else {
                println!("graph: {}", report.graph);
                for c in &report.checks {
                    println!("{}", status_line(c));
                }
                println!("{} passed, {} failed, {} skipped", report.passed(), failed, report.skipped());
            }
            Ok(failed == 0)
        }
        Command::Generate {
            spec,
            seed,
            stream,
            output,
        } => {
            let doc = cio::generate(&spec.kind(), seed, stream)?;
            let text = render_graph(&doc);
            match output {
                Some(path) => fs::write(&path, text).map_err(|e| Failure(format!("{path}: {e}")))?,
                None => print!("{text}"),
            }
            Ok(true)
        }
        Command::Search {
            spec,
            count,
            seed,
            workers,
            out,
        } => {
            let r = conjecture_search(&spec.kind(), seed, count, workers, &OracleBounds::from_env())?;
            if out.json {
                println!("{}", r.to_json());
            } else {
                print!("{}", r.to_text());
            }
            Ok(r.is_clean())
        }
        Command::Bench {
            n_a,
            n_b,
            avg_deg,
            seed,
            steps,
            repeats,
            json,
        } => {
            let rows = bench::doubling_table(n_a, n_b, avg_deg, seed, steps, repeats)?;
            if json {
                print_json(&BenchJson {
                    schema: 1,
                    avg_deg,
                    seed,
                    rows: &rows,
                });
            } else {
                print!("{}", bench::render_table(&rows));
            }
            Ok(true)
        }
        Command::Fixture { name, list } => {
            if list {
                for n in cio::fixture_names() {
                    println!("{n}");
                }
                return Ok(true);
            }
            let name = name.unwrap();
            let text = cio::fixture_text(&name).ok_or_else(|| Failure(format!("unknown fixture `{name}`")))?;
            print!("{text}");
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(2),
        Err(Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
