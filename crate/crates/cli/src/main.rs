//! Batch front end for the sl2 weight-system engine.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
//! 3 time budget exceeded. Progress goes to stderr; results to stdout.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand, ValueEnum};

use sl2ws::algebra::CasimirPoly;
use sl2ws::checks::{CheckConfig, CheckFailure, Suite};
use sl2ws::chords::ChordDiagram;
use sl2ws::hopf::{project_bipartite_eval, projection_egf};
use sl2ws::sl2::{egf_k, k_closed, ogf_convention, ogf_p, Evaluator, Sl2Closed};

#[derive(Parser)]
#[command(name = "sl2ws", version, about = "sl2 weight system on chord diagrams")]
struct Cli {
    /// Largest diagram order the verification suites run at
    #[arg(long, global = true, default_value_t = 6)]
    max_order: usize,

    /// Wall-clock budget for verification, in seconds
    #[arg(long, global = true, default_value_t = 300)]
    budget: u64,

    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    format: Format,

    /// Seed for the sampled suites
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableKind {
    Values,
    Projections,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
#[allow(non_camel_case_types)]
enum SeriesKind {
    /// EGF of the values w(K_{l,n})
    #[value(name = "egf_K")]
    egf_K,
    /// EGF of the projection values w(pi(K_{l,n}))
    #[value(name = "egf_P")]
    egf_P,
    /// OGF of the projection values
    #[value(name = "ogf_P")]
    ogf_P,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate the weight system at a double-occurrence word
    Eval {
        /// Diagram as a double-occurrence word, e.g. "1 2 1 2"
        dow: String,
    },
    /// Print k_{l,n} values and/or projection values for n = 0..n_max
    Table {
        /// Size of the bounded part, 0..=3
        l: usize,
        n_max: usize,
        #[arg(value_enum, default_value_t = TableKind::Values)]
        kind: TableKind,
    },
    /// Expand a generating function and print its coefficients
    Series {
        /// Size of the bounded part
        l: usize,
        #[arg(value_enum)]
        which: SeriesKind,
        /// Truncation order
        order: usize,
    },
    /// Run a verification suite
    Verify {
        /// One of: fourterm, isograph, oracle, recurrences, hopf, lando, all
        suite: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Eval { ref dow } => cmd_eval(dow, cli.format),
        Command::Table { l, n_max, kind } => cmd_table(l, n_max, kind, cli.format),
        Command::Series { l, which, order } => cmd_series(l, which, order, cli.format),
        Command::Verify { ref suite } => Ok(cmd_verify(suite, &cli)?),
    }
}

fn print_poly(p: &CasimirPoly, format: Format) {
    match format {
        Format::Human => println!("{p}"),
        Format::Json => println!("{}", p.to_json()),
    }
}

fn cmd_eval(dow: &str, format: Format) -> Result<ExitCode, String> {
    let diagram: ChordDiagram = dow.parse().map_err(|e| format!("{e}"))?;
    let value = Evaluator::new().eval(&diagram).map_err(|e| format!("{e}"))?;
    print_poly(&value, format);
    Ok(ExitCode::SUCCESS)
}

/// Projection value of K_{l,n}; the l = 0 family projects to K_{0,1} itself
/// at n = 1 and to 0 everywhere else.
fn projection_value(l: usize, n: usize) -> Result<CasimirPoly, String> {
    if l == 0 {
        return Ok(if n == 1 {
            CasimirPoly::c()
        } else {
            CasimirPoly::zero()
        });
    }
    project_bipartite_eval(l, n, &Sl2Closed).map_err(|e| format!("{e}"))
}

fn cmd_table(l: usize, n_max: usize, kind: TableKind, format: Format) -> Result<ExitCode, String> {
    if l > 3 {
        return Err(format!("l = {l} out of range 0..=3"));
    }
    let mut rows = Vec::new();
    for n in 0..=n_max {
        let value = match kind {
            TableKind::Values | TableKind::Both => Some(k_closed(l, n).map_err(|e| format!("{e}"))?),
            TableKind::Projections => None,
        };
        let projection = match kind {
            TableKind::Projections | TableKind::Both => Some(projection_value(l, n)?),
            TableKind::Values => None,
        };
        rows.push((n, value, projection));
    }
    match format {
        Format::Human => {
            for (n, value, projection) in &rows {
                let mut line = format!("n={n}");
                if let Some(v) = value {
                    line.push_str(&format!("\tk[{l},{n}] = {v}"));
                }
                if let Some(p) = projection {
                    line.push_str(&format!("\tw(pi(K[{l},{n}])) = {p}"));
                }
                println!("{line}");
            }
        }
        Format::Json => {
            let items: Vec<serde_json::Value> = rows
                .iter()
                .map(|(n, value, projection)| match kind {
                    TableKind::Values => value.as_ref().unwrap().to_json(),
                    TableKind::Projections => projection.as_ref().unwrap().to_json(),
                    TableKind::Both => serde_json::json!({
                        "n": n,
                        "value": value.as_ref().unwrap().to_json(),
                        "projection": projection.as_ref().unwrap().to_json(),
                    }),
                })
                .collect();
            println!("{}", serde_json::Value::Array(items));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_series(l: usize, which: SeriesKind, order: usize, format: Format) -> Result<ExitCode, String> {
    match which {
        SeriesKind::egf_K | SeriesKind::egf_P => {
            let series = match which {
                SeriesKind::egf_K => egf_k(l, order).map_err(|e| format!("{e}"))?,
                _ => projection_egf(l, &Sl2Closed, order).map_err(|e| format!("{e}"))?,
            };
            match format {
                Format::Human => {
                    for k in 0..=series.truncation_order() {
                        println!("x^{k}: {}", series.coeff(k));
                    }
                }
                Format::Json => {
                    let coeffs: Vec<serde_json::Value> = (0..=series.truncation_order())
                        .map(|k| series.coeff(k).to_json())
                        .collect();
                    println!(
                        "{}",
                        serde_json::json!({ "variable": "x", "coefficients": coeffs })
                    );
                }
            }
        }
        SeriesKind::ogf_P => {
            let coeffs = ogf_p(l, order).map_err(|e| format!("{e}"))?;
            let conv = ogf_convention(l, 6.min(order.saturating_sub(l)))
                .map_err(|e| format!("{e}"))?;
            let note = match (conv.matches_n, conv.matches_n_plus_l) {
                (true, true) => "both s^n and s^(n+l)".to_string(),
                (true, false) => "s^n".to_string(),
                (false, true) => "s^(n+l)".to_string(),
                (false, false) => "NEITHER convention (mismatch)".to_string(),
            };
            match format {
                Format::Human => {
                    println!("# coefficient of {note} equals w(pi(K[{l},n]))");
                    for (k, p) in coeffs.iter().enumerate() {
                        println!("s^{k}: {p}");
                    }
                }
                Format::Json => {
                    let items: Vec<serde_json::Value> = coeffs.iter().map(|p| p.to_json()).collect();
                    println!(
                        "{}",
                        serde_json::json!({ "variable": "s", "convention": note, "coefficients": items })
                    );
                }
            }
            if !conv.matches_n && !conv.matches_n_plus_l {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(suite_name: &str, cli: &Cli) -> Result<ExitCode, String> {
    let suite = Suite::parse(suite_name)
        .ok_or_else(|| format!("unknown suite {suite_name:?} (try: fourterm, isograph, oracle, recurrences, hopf, lando, all)"))?;
    let cfg = CheckConfig {
        max_order: cli.max_order,
        seed: cli.seed,
        random_samples: 50,
        deadline: Some(Instant::now() + Duration::from_secs(cli.budget)),
    };
    let mut all_pass = true;
    let mut results = Vec::new();
    for check in suite.checks() {
        eprintln!("running: {} ...", check.name);
        let started = Instant::now();
        match (check.run)(&cfg) {
            Ok(detail) => {
                results.push((check.name, true, detail, started.elapsed()));
            }
            Err(CheckFailure::Budget) => {
                emit_results(&results, cli.format);
                eprintln!("time budget exhausted during: {}", check.name);
                return Ok(ExitCode::from(3));
            }
            Err(CheckFailure::Fail(detail)) => {
                all_pass = false;
                results.push((check.name, false, detail, started.elapsed()));
            }
        }
    }
    emit_results(&results, cli.format);
    Ok(if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn emit_results(results: &[(&'static str, bool, String, Duration)], format: Format) {
    match format {
        Format::Human => {
            for (name, pass, detail, elapsed) in results {
                println!(
                    "{}: {name} - {detail} ({:.2}s)",
                    if *pass { "PASS" } else { "FAIL" },
                    elapsed.as_secs_f64()
                );
            }
        }
        Format::Json => {
            let items: Vec<serde_json::Value> = results
                .iter()
                .map(|(name, pass, detail, elapsed)| {
                    serde_json::json!({
                        "name": name,
                        "pass": pass,
                        "detail": detail,
                        "seconds": elapsed.as_secs_f64(),
                    })
                })
                .collect();
            println!("{}", serde_json::Value::Array(items));
        }
    }
}
