//! `descent-forge`: generate, verify and certify solutions of
//! `7x² + 59y² = 3^m`, and scan `ax² + by² = λ·k^m` by brute force.

use std::io::{self, Write};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::Serialize;

use descent_forge::arith::ternary_solvable;
use descent_forge::descend_to_root;
use descent_forge::oracle::{oracle_sweep, EquationSpec, DEFAULT_BUDGET};
use descent_forge::solution::{is_suitable, verify, PPSolution, SolutionClass};
use descent_forge::successor::{successor, SuccessorKind};
use descent_forge::tree::enumerate;

/// Environment variable overriding the oracle iteration budget.
const BUDGET_ENV: &str = "DESCENT_FORGE_BUDGET";

/// Exit code for invalid input or internal failures.
const EXIT_ERROR: u8 = 3;

#[derive(Parser)]
#[command(
    name = "descent-forge",
    version,
    about = "Primitive positive solutions of 7x² + 59y² = 3^m"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Jsonl,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    First,
    Second,
}

#[derive(Subcommand)]
enum Command {
    /// List every solution with m ≤ MAX_M, in increasing m.
    Generate {
        #[arg(long, value_parser = clap::value_parser!(u32).range(5..))]
        max_m: u32,
        #[arg(long, value_enum, default_value = "jsonl")]
        format: Format,
    },
    /// Classify (x, y, m). Exit 0: pp-solution, 1: other solution, 2: not a solution.
    Verify {
        #[arg(allow_negative_numbers = true)]
        x: BigInt,
        #[arg(allow_negative_numbers = true)]
        y: BigInt,
        #[arg(allow_negative_numbers = true)]
        m: i64,
    },
    /// Print a descent certificate from (x, y, m) down to (1, 2, 5).
    Descend {
        x: BigInt,
        y: BigInt,
        #[arg(allow_negative_numbers = true)]
        m: i64,
    },
    /// Print the first or second successor of (x, y, m).
    Successor {
        x: BigInt,
        y: BigInt,
        #[arg(allow_negative_numbers = true)]
        m: i64,
        #[arg(long, value_enum)]
        which: Which,
    },
    /// Brute-force ax² + by² = λ·k^m for m = 1..=M_MAX.
    Oracle {
        #[arg(long, default_value = "7")]
        a: BigInt,
        #[arg(long, default_value = "59")]
        b: BigInt,
        #[arg(long, default_value = "1")]
        lambda: BigInt,
        #[arg(long, default_value = "3")]
        k: BigInt,
        #[arg(long)]
        m_max: u32,
        /// Iteration budget for the whole sweep [env: DESCENT_FORGE_BUDGET].
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long, value_enum, default_value = "jsonl")]
        format: Format,
    },
    /// Legendre's criterion for ax² + by² = cz².
    CheckSolvability { a: BigInt, b: BigInt, c: BigInt },
    /// Whether m ≡ 5 (mod 10).
    Suitable {
        #[arg(allow_negative_numbers = true)]
        m: i64,
    },
}

#[derive(Serialize)]
struct SolutionOut {
    m: u32,
    x: String,
    y: String,
}

#[derive(Serialize)]
struct OracleOut {
    m: u32,
    x: String,
    y: String,
    primitive: bool,
}

#[derive(Serialize)]
struct TruncationOut {
    truncated_at: u32,
}

fn exponent(m: i64) -> Result<u32> {
    if m <= 0 {
        bail!("exponent must be positive, got {m}");
    }
    u32::try_from(m).with_context(|| format!("exponent {m} is too large"))
}

fn pp_solution(x: BigInt, y: BigInt, m: i64) -> Result<PPSolution> {
    Ok(PPSolution::new(x, y, exponent(m)?)?)
}

fn budget(flag: Option<u64>) -> Result<u64> {
    if let Some(b) = flag {
        return Ok(b);
    }
    match std::env::var(BUDGET_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .with_context(|| format!("{BUDGET_ENV}={v:?} is not a non-negative integer")),
        Err(_) => Ok(DEFAULT_BUDGET),
    }
}

fn write_jsonl<T: Serialize>(
    out: &mut impl Write,
    records: impl IntoIterator<Item = T>,
) -> Result<()> {
    for r in records {
        serde_json::to_writer(&mut *out, &r)?;
        out.write_all(b"\n")?;
    }
    Ok(())
}

fn write_csv<T: Serialize>(
    out: &mut impl Write,
    records: impl IntoIterator<Item = T>,
) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for r in records {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}

fn run(cli: Cli) -> Result<ExitCode> {
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    match cli.command {
        Command::Generate { max_m, format } => {
            let records = enumerate(max_m)?.into_iter().map(|n| n.to_record());
            match format {
                Format::Jsonl => write_jsonl(&mut out, records)?,
                Format::Csv => write_csv(&mut out, records)?,
            }
        }
        Command::Verify { x, y, m } => {
            let class = verify(&x, &y, exponent(m)?)?;
            let code = match &class {
                SolutionClass::PpSolution => {
                    writeln!(out, "pp_solution")?;
                    0
                }
                SolutionClass::Imprimitive { scaled_by } => {
                    writeln!(out, "imprimitive (gcd {scaled_by})")?;
                    1
                }
                SolutionClass::PrimitiveNonpositive => {
                    writeln!(out, "primitive_nonpositive")?;
                    1
                }
                SolutionClass::NotASolution => {
                    writeln!(out, "not_a_solution")?;
                    2
                }
            };
            out.flush()?;
            return Ok(ExitCode::from(code));
        }
        Command::Descend { x, y, m } => {
            let s = pp_solution(x, y, m)?;
            let cert = descend_to_root(&s)?.to_certificate();
            serde_json::to_writer_pretty(&mut out, &cert)?;
            writeln!(out)?;
        }
        Command::Successor { x, y, m, which } => {
            let s = pp_solution(x, y, m)?;
            let kind = match which {
                Which::First => SuccessorKind::First,
                Which::Second => SuccessorKind::Second,
            };
            let t = successor(&s, kind)?;
            write_jsonl(
                &mut out,
                [SolutionOut {
                    m: t.m(),
                    x: t.x().to_string(),
                    y: t.y().to_string(),
                }],
            )?;
        }
        Command::Oracle {
            a,
            b,
            lambda,
            k,
            m_max,
            budget: flag,
            format,
        } => {
            let spec = EquationSpec::new(a, b, lambda, k)?;
            let sweep = oracle_sweep(&spec, m_max, budget(flag)?)?;
            let records = sweep.hits.iter().flat_map(|(&m, hits)| {
                hits.iter().map(move |h| OracleOut {
                    m,
                    x: h.x.to_string(),
                    y: h.y.to_string(),
                    primitive: h.primitive,
                })
            });
            match format {
                Format::Jsonl => write_jsonl(&mut out, records)?,
                Format::Csv => write_csv(&mut out, records)?,
            }
            if let Some(m) = sweep.truncated_at {
                if let Format::Jsonl = format {
                    write_jsonl(&mut out, [TruncationOut { truncated_at: m }])?;
                }
                eprintln!("budget exhausted: scan stopped before m = {m}");
            }
            if let Some(suitable) = &sweep.suitable {
                eprintln!("exponents with primitive solutions: {suitable:?}");
            }
        }
        Command::CheckSolvability { a, b, c } => {
            let verdict = if ternary_solvable(&a, &b, &c)? {
                "solvable"
            } else {
                "unsolvable"
            };
            writeln!(out, "{verdict}")?;
        }
        Command::Suitable { m } => {
            let verdict = if is_suitable(exponent(m)?)? {
                "suitable"
            } else {
                "not suitable"
            };
            writeln!(out, "{verdict}")?;
        }
    }
    out.flush()?;
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_ERROR)
        }
    }
}
