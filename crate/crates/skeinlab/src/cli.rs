//! The `skeinlab` command line.
//!
//! Every subcommand writes to the given sink and returns an exit status:
//! 0 on success, 1 on a parse or domain error (one line on the error sink),
//! 2 on bad usage. `verify` returns 1 when any check fails.

use std::ffi::OsString;
use std::io::{self, Write};

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::json;
use skeinlab_core::extalg::Monomial;
use skeinlab_core::fermions::{big_f, big_g, small_f, small_g, tilde_big_f, tilde_small_f};
use skeinlab_core::quadring::{hilbert_series, Quotient};
use skeinlab_core::repsym::{skein_trace, SymFunc};
use skeinlab_core::setpart::enumerate;
use skeinlab_core::skein::{resolve_greedy, sigma, skein_act, GreedyPolicy};
use skeinlab_core::verify::MAX_VERIFY_N;
use skeinlab_core::{fdr, Fermion, NcVector, Permutation, SetPartition, MAX_N};

use crate::formats::{parse_partition, parse_permutation, parse_segmented, ParseError};
use crate::{cache, runner};

/// Largest `n` for the representation-theory subcommands.
pub const MAX_REP_N: usize = 9;

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("parse error: {0}")]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Domain(#[from] skeinlab_core::Error),
    #[error("{0}")]
    Invalid(String),
    #[error("output: {0}")]
    Io(#[from] io::Error),
    #[error("thread pool: {0}")]
    Pool(#[from] rayon::ThreadPoolBuildError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Tsv,
    JsonLines,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    /// Exact linear solve against the noncrossing fermions.
    Algebraic,
    /// Greedy two-block resolution, lexicographically first crossing pair.
    Greedy,
    /// Greedy two-block resolution, largest tangle reduction first.
    GreedyTangle,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Kind {
    #[value(name = "F")]
    BigF,
    #[value(name = "f")]
    SmallF,
    #[value(name = "G")]
    BigG,
    #[value(name = "g")]
    SmallG,
    #[value(name = "tildeF")]
    TildeBigF,
    #[value(name = "tildef")]
    TildeSmallF,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum QuotientArg {
    /// Disjoint and noncrossing supports.
    Ij,
    /// Disjoint supports.
    J,
}

#[derive(Debug, Parser)]
#[command(name = "skeinlab", version, about = "Exact skein calculus of set partitions")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Tsv, global = true)]
    format: Format,
    /// Worker threads for parallel subcommands (0 = all cores).
    #[arg(long, env = "SKEINLAB_THREADS", global = true, default_value_t = 0)]
    threads: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Expand a partition in the noncrossing basis.
    Resolve {
        partition: String,
        #[arg(long, value_enum, default_value_t = Method::Algebraic)]
        method: Method,
    },
    /// Apply the skein action of a permutation to a partition (resolved first
    /// if crossing).
    Act { permutation: String, partition: String },
    /// The crossing resolution of an almost noncrossing partition.
    Sigma {
        partition: String,
        /// Index i of the swap s_i; defaults to the smallest valid one.
        #[arg(long)]
        i: Option<usize>,
    },
    /// Print the fermion of a partition (F, f, tildeF, tildef) or of a
    /// segmented permutation (G, g, tildeF, tildef).
    Fermion {
        input: String,
        #[arg(long, value_enum, default_value_t = Kind::BigF)]
        kind: Kind,
    },
    /// List set partitions of [n].
    Enumerate {
        n: usize,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        noncrossing: bool,
        /// Print only the number of partitions.
        #[arg(long)]
        count: bool,
    },
    /// Schur expansion of the skein module on NC(n, k) or NC(n, k, m).
    Frobenius {
        n: usize,
        k: usize,
        #[arg(long)]
        m: Option<usize>,
    },
    /// Bigraded dimensions of the fermionic diagonal coinvariants.
    FdrDims { n: usize },
    /// The (m, k) Hilbert series table of the quadratic quotient.
    Hilbert {
        n: usize,
        #[arg(long, value_enum, default_value_t = QuotientArg::Ij)]
        quotient: QuotientArg,
    },
    /// Run every invariant check up to n = nmax.
    Verify {
        #[arg(long, default_value_t = 6)]
        nmax: usize,
    },
}

/// Parses `args` (including the program name) and runs the subcommand.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    let fmt = cli.format;
    match &cli.command {
        Command::Resolve { partition, method } => {
            let pi = parse_partition(partition)?;
            let v = match method {
                Method::Algebraic => cache::resolve(&pi)?,
                Method::Greedy => resolve_greedy(&pi, GreedyPolicy::LexMin)?,
                Method::GreedyTangle => resolve_greedy(&pi, GreedyPolicy::MaxTangleReduction)?,
            };
            write_vector(out, fmt, &v)?;
        }
        Command::Act { permutation, partition } => {
            let w = parse_permutation(permutation)?;
            let pi = parse_partition(partition)?;
            check_same_n(&w, &pi)?;
            write_vector(out, fmt, &skein_act(&w, &cache::resolve(&pi)?)?)?;
        }
        Command::Sigma { partition, i } => {
            let pi = parse_partition(partition)?;
            let i = match i {
                Some(i) => *i,
                None => *pi
                    .almost_noncrossing_indices()
                    .first()
                    .ok_or_else(|| CliError::Invalid(format!("{pi} is not almost noncrossing")))?,
            };
            write_vector(out, fmt, &sigma(&pi, i)?)?;
        }
        Command::Fermion { input, kind } => write_fermion(out, fmt, &fermion_of(input, *kind)?)?,
        Command::Enumerate {
            n,
            k,
            m,
            noncrossing,
            count,
        } => {
            let parts = enumerate(*n, *k, *m, *noncrossing)?;
            if *count {
                match fmt {
                    Format::JsonLines => writeln!(out, "{}", json!({ "count": parts.len() }))?,
                    _ => writeln!(out, "{}", parts.len())?,
                }
            } else {
                for p in &parts {
                    match fmt {
                        Format::JsonLines => writeln!(out, "{}", partition_json(p))?,
                        _ => writeln!(out, "{p}")?,
                    }
                }
            }
        }
        Command::Frobenius { n, k, m } => {
            let f = frobenius(*n, *k, *m, cli.threads)?;
            write_symfunc(out, fmt, &f)?;
        }
        Command::FdrDims { n } => {
            check_n(*n, MAX_N)?;
            let rows = fdr::fdr_dimension_table(*n)?;
            write_table(out, fmt, "i", "j", "dim", &rows.iter().map(|r| r.iter().map(|&d| d as u128).collect()).collect::<Vec<_>>())?;
        }
        Command::Hilbert { n, quotient } => {
            let which = match quotient {
                QuotientArg::Ij => Quotient::ModIJ,
                QuotientArg::J => Quotient::ModJ,
            };
            write_table(out, fmt, "m", "k", "dim", &hilbert_series(*n, which)?)?;
        }
        Command::Verify { nmax } => {
            check_n(*nmax, MAX_VERIFY_N)?;
            let outcomes = runner::run_all(*nmax, cli.threads)?;
            let width = outcomes.iter().map(|o| o.name.len()).max().unwrap_or(0);
            for o in &outcomes {
                let detail = match &o.passed {
                    Err(e) => e.as_str(),
                    Ok(_) => "",
                };
                match fmt {
                    Format::Human => {
                        let line = format!("{:width$}  {}  {detail}", o.name, o.label());
                        writeln!(out, "{}", line.trim_end())?
                    }
                    Format::Tsv if detail.is_empty() => writeln!(out, "{}\t{}", o.name, o.label())?,
                    Format::Tsv => writeln!(out, "{}\t{}\t{detail}", o.name, o.label())?,
                    Format::JsonLines => {
                        writeln!(out, "{}", json!({ "check": o.name, "status": o.label(), "error": detail }))?
                    }
                }
            }
            if outcomes.iter().any(|o| !o.ok()) {
                return Ok(1);
            }
        }
    }
    Ok(0)
}

fn check_n(n: usize, max: usize) -> Result<(), CliError> {
    if n > max {
        return Err(CliError::Invalid(format!("n = {n} exceeds the limit {max}")));
    }
    Ok(())
}

fn check_same_n(w: &Permutation, pi: &SetPartition) -> Result<(), CliError> {
    if w.n() != pi.n() {
        return Err(CliError::Invalid(format!(
            "permutation of {} letters applied to a partition of [{}]",
            w.n(),
            pi.n()
        )));
    }
    Ok(())
}

/// Partitions go through their canonical segmented permutation for `G`,
/// `g` and the antisymmetrized kinds; segmented permutations go through their
/// underlying partition for `F` and `f`.
fn fermion_of(input: &str, kind: Kind) -> Result<Fermion, CliError> {
    let seg = if input.contains('|') {
        parse_segmented(input)?
    } else {
        skeinlab_core::setpart::canonical_segperm(&parse_partition(input)?)
    };
    Ok(match kind {
        Kind::BigF => big_f(&seg.to_partition()),
        Kind::SmallF => small_f(&seg.to_partition()),
        Kind::BigG => big_g(&seg),
        Kind::SmallG => small_g(&seg),
        Kind::TildeBigF => tilde_big_f(&seg)?,
        Kind::TildeSmallF => tilde_small_f(&seg)?,
    })
}

fn frobenius(n: usize, k: usize, m: Option<usize>, threads: usize) -> Result<SymFunc, CliError> {
    check_n(n, MAX_REP_N)?;
    let table = cache::character_table(n)?;
    let basis = enumerate(n, Some(k), m, true)?;
    let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build()?;
    let words: Vec<Vec<usize>> = table
        .classes()
        .iter()
        .map(|mu| Permutation::cycle_type_word(mu.parts()))
        .collect();
    // Split each class trace over chunks of the basis so large strata spread
    // across the pool; sums are exact so the grouping does not matter.
    let chunk = basis.len().div_ceil(64).max(1);
    let chi = pool.install(|| {
        words
            .par_iter()
            .map(|w| {
                basis
                    .par_chunks(chunk)
                    .map(|c| skein_trace(w, c))
                    .try_reduce(|| 0, |a, b| Ok(a + b))
                    .map(i128::from)
            })
            .collect::<skeinlab_core::Result<Vec<_>>>()
    })?;
    Ok(table.decompose(&chi)?)
}

fn partition_json(p: &SetPartition) -> serde_json::Value {
    json!({ "partition": p.to_string(), "blocks": p.block_lists() })
}

fn write_vector(out: &mut dyn Write, fmt: Format, v: &NcVector) -> io::Result<()> {
    match fmt {
        Format::Human => writeln!(out, "{v}"),
        Format::Tsv => {
            for (p, c) in v.terms() {
                writeln!(out, "{c}\t{p}")?;
            }
            Ok(())
        }
        Format::JsonLines => {
            for (p, c) in v.terms() {
                let mut obj = partition_json(p);
                obj["coefficient"] = json!(c.to_string());
                writeln!(out, "{obj}")?;
            }
            Ok(())
        }
    }
}

fn monomial_text(m: &Monomial) -> String {
    let mut parts: Vec<String> = m.theta.iter().map(|i| format!("t{i}")).collect();
    parts.extend(m.xi.iter().map(|i| format!("x{i}")));
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join(" ")
    }
}

fn write_fermion(out: &mut dyn Write, fmt: Format, f: &Fermion) -> io::Result<()> {
    match fmt {
        Format::Human => writeln!(out, "{f}"),
        Format::Tsv => {
            for (m, c) in f.terms() {
                writeln!(out, "{c}\t{}", monomial_text(m))?;
            }
            Ok(())
        }
        Format::JsonLines => {
            for (m, c) in f.terms() {
                let obj = json!({ "coefficient": c.to_string(), "theta": m.theta.to_vec(), "xi": m.xi.to_vec() });
                writeln!(out, "{obj}")?;
            }
            Ok(())
        }
    }
}

fn write_symfunc(out: &mut dyn Write, fmt: Format, f: &SymFunc) -> io::Result<()> {
    match fmt {
        Format::Human => writeln!(out, "{f}"),
        Format::Tsv => {
            for (l, c) in f.terms() {
                writeln!(out, "{c}\t{l}")?;
            }
            Ok(())
        }
        Format::JsonLines => {
            for (l, c) in f.terms() {
                writeln!(out, "{}", json!({ "coefficient": c, "shape": l.parts() }))?;
            }
            Ok(())
        }
    }
}

/// A dense table: TSV rows, an aligned grid with headers, or one JSON object
/// per cell.
fn write_table(
    out: &mut dyn Write,
    fmt: Format,
    row: &str,
    col: &str,
    value: &str,
    rows: &[Vec<u128>],
) -> io::Result<()> {
    match fmt {
        Format::Tsv => {
            for r in rows {
                let cells: Vec<String> = r.iter().map(u128::to_string).collect();
                writeln!(out, "{}", cells.join("\t"))?;
            }
        }
        Format::Human => {
            let width = rows.iter().flatten().map(|v| v.to_string().len()).max().unwrap_or(1).max(2);
            let cols = rows.first().map_or(0, Vec::len);
            write!(out, "{:>4}", format!("{row}\\{col}"))?;
            for j in 0..cols {
                write!(out, " {j:>width$}")?;
            }
            writeln!(out)?;
            for (i, r) in rows.iter().enumerate() {
                write!(out, "{i:>4}")?;
                for v in r {
                    write!(out, " {v:>width$}")?;
                }
                writeln!(out)?;
            }
        }
        Format::JsonLines => {
            for (i, r) in rows.iter().enumerate() {
                for (j, v) in r.iter().enumerate() {
                    writeln!(out, "{}", json!({ row: i, col: j, value: *v as u64 }))?;
                }
            }
        }
    }
    Ok(())
}
