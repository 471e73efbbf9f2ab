//! `qchar`: characters of q(n)-modules from the command line.

mod cache;
mod record;

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use qchar::order::{succ_chain_oracle, succeq, succeq_gl};
use qchar::verify::{self, VerifyConfig};
use qchar::{decompose_euler, euler_character, irreducible_character, kw_character, Error, Weight};
use serde_json::json;

use cache::Cache;
use record::{CharacterRecord, Kind};

#[derive(Parser)]
#[command(
    name = "qchar",
    version,
    about = "Exact characters of half-integer weight q(n)-modules"
)]
struct Cli {
    /// Skip reading and writing the result cache.
    #[arg(long, global = true)]
    no_cache: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderKind {
    Chain,
    Wt,
    Gl,
}

#[derive(Subcommand)]
enum Command {
    /// Character of the Euler characteristic E(λ).
    Euler {
        #[arg(short, long, allow_hyphen_values = true)]
        weight: Weight,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Character of the irreducible module L(λ).
    Irr {
        #[arg(short, long, allow_hyphen_values = true)]
        weight: Weight,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Closed formula for ch L(λ) on totally connected or disconnected λ.
    Kw {
        #[arg(short, long, allow_hyphen_values = true)]
        weight: Weight,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// [E(λ)] as a sum of classes [L(μ)].
    Decompose {
        #[arg(short, long, allow_hyphen_values = true)]
        weight: Weight,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Compare two weights.
    Order {
        #[arg(short, allow_hyphen_values = true)]
        a: Weight,
        #[arg(short, allow_hyphen_values = true)]
        b: Weight,
        #[arg(long, value_enum, default_value = "chain")]
        order: OrderKind,
    },
    /// Run the exhaustive cross-checks.
    Verify {
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        /// Largest |λ_i| for the character checks.
        #[arg(long, default_value = "9/2", allow_hyphen_values = true)]
        bound: Weight,
        /// Largest |λ_i| for integer order checks.
        #[arg(long, default_value_t = 3)]
        order_bound: i64,
        /// Largest |λ_i| for half-integer order checks.
        #[arg(long, default_value = "7/2")]
        half_order_bound: Weight,
        #[arg(long)]
        json: bool,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NonExactDivision(_) | Error::Internal(_) => 1,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn character(kind: Kind, w: &Weight) -> Result<CharacterRecord, Failure> {
    let start = Instant::now();
    let mut metadata = BTreeMap::new();
    let ch = match kind {
        Kind::Euler => euler_character(w)?,
        Kind::Irreducible => irreducible_character(w)?,
        Kind::Kw => {
            let k = kw_character(w)?;
            metadata.insert("mode".into(), json!(format!("{:?}", k.connectivity.mode)));
            metadata.insert("sign".into(), json!(k.sign));
            metadata.insert("divisor".into(), json!(k.divisor));
            metadata.insert("two_power".into(), json!(k.two_power));
            metadata.insert("uparrow".into(), json!(k.connectivity.uparrow));
            k.character
        }
    };
    if kind != Kind::Kw && w.is_half_integer() {
        if let Ok(c) = w.connectivity() {
            metadata.insert("mode".into(), json!(format!("{:?}", c.mode)));
        }
    }
    metadata.insert(
        "elapsed_ms".into(),
        json!(start.elapsed().as_secs_f64() * 1e3),
    );
    Ok(CharacterRecord::new(kind, w.clone(), ch, metadata))
}

fn cached_character(
    kind: Kind,
    w: &Weight,
    cache: Option<&Cache>,
) -> Result<CharacterRecord, Failure> {
    if let Some(r) = cache.and_then(|c| c.get(kind, w)) {
        return Ok(r);
    }
    let record = character(kind, w)?;
    if let Some(c) = cache {
        if let Err(e) = c.put(&record) {
            eprintln!("warning: could not write cache entry: {e}");
        }
    }
    Ok(record)
}

fn half_bound2(w: &Weight, flag: &str) -> Result<i64, Failure> {
    match w.doubled() {
        [b] if *b >= 0 => Ok(*b),
        _ => Err(Failure {
            code: 2,
            message: format!("--{flag} takes one non-negative number"),
        }),
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let cache = (!cli.no_cache).then(Cache::from_env);
    match cli.command {
        Command::Euler { weight, format } => print_record(
            cached_character(Kind::Euler, &weight, cache.as_ref())?,
            format,
        ),
        Command::Irr { weight, format } => print_record(
            cached_character(Kind::Irreducible, &weight, cache.as_ref())?,
            format,
        ),
        Command::Kw { weight, format } => {
            print_record(cached_character(Kind::Kw, &weight, cache.as_ref())?, format)
        }
        Command::Decompose { weight, format } => {
            let entries = decompose_euler(&weight)?;
            match format {
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&entries).expect("entries serialize")
                ),
                Format::Table => {
                    println!("[E({weight})] =");
                    for e in &entries {
                        let theta: Vec<String> =
                            e.theta.iter().flatten().map(u32::to_string).collect();
                        println!(
                            "  {} [L({})]  theta=({})",
                            e.coeff,
                            e.weight,
                            theta.join(",")
                        );
                    }
                }
            }
        }
        Command::Order { a, b, order } => {
            let verdict = match order {
                OrderKind::Chain => succ_chain_oracle(&a, &b)?,
                OrderKind::Wt => succeq(&a, &b)?,
                OrderKind::Gl => succeq_gl(&a, &b)?,
            };
            println!("a ≽ b: {verdict}");
        }
        Command::Verify {
            max_n,
            bound,
            order_bound,
            half_order_bound,
            json,
        } => {
            let cfg = VerifyConfig {
                max_n,
                order_bound,
                half_order_bound2: half_bound2(&half_order_bound, "half-order-bound")?,
                char_bound2: half_bound2(&bound, "bound")?,
            };
            let reports = verify::run_all(&cfg);
            if json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&reports).expect("reports serialize")
                );
            } else {
                for r in &reports {
                    println!("{r}");
                }
            }
            let failed = reports.iter().filter(|r| !r.passed()).count();
            if failed > 0 {
                return Err(Failure {
                    code: 1,
                    message: format!("{failed} criteria failed"),
                });
            }
        }
    }
    Ok(())
}

fn print_record(record: CharacterRecord, format: Format) {
    match format {
        Format::Json => println!("{}", record.to_json()),
        Format::Table => print!("{}", record.to_table()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
