use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};
use qmds::construct::{self, Options, Request};
use qmds::table::{self, Format};
use qmds::{exit_code, selftest};
use qmds_core::quantum::Family;
use qmds_core::verify::Budgets;

#[derive(Parser)]
#[command(
    name = "qmds",
    version,
    about = "Construct and verify Hermitian self-orthogonal GRS codes and their quantum MDS parameters"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build one code, run every check and print a JSON report.
    Construct(ConstructArgs),
    /// Emit the parameter table, verifying rows with small q.
    Table(TableArgs),
    /// Run the invariant suite on the built-in field roster.
    Selftest(SelftestArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    A,
    B,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
}

#[derive(Args)]
struct BudgetArgs {
    /// Largest codeword count (q²)^k for the exhaustive distance oracle.
    #[arg(long, default_value_t = 10_000_000)]
    mds_budget: u128,
    /// Largest number of k-column subsets for the minor check.
    #[arg(long, default_value_t = 1_000_000)]
    minor_budget: u128,
}

impl BudgetArgs {
    fn budgets(&self) -> Budgets {
        Budgets {
            codewords: self.mds_budget,
            minors: self.minor_budget,
        }
    }
}

#[derive(Args)]
struct ConstructArgs {
    #[arg(long, value_enum, ignore_case = true)]
    family: FamilyArg,
    /// Characteristic of the field.
    #[arg(long)]
    p: u64,
    /// q = p^e; the code lives over GF(q²).
    #[arg(long, default_value_t = 1)]
    e: u32,
    #[arg(long)]
    s: u64,
    /// Number of cosets (family A).
    #[arg(long)]
    lambda: Option<u64>,
    #[arg(long)]
    k: u64,
    /// Exponents c of the coset representatives g^c (family A).
    #[arg(long, value_delimiter = ',', conflicts_with = "removed_reps")]
    coset_reps: Option<Vec<u64>>,
    /// Indices of the removed cosets (family B).
    #[arg(long, value_delimiter = ',')]
    removed_reps: Option<Vec<u64>>,
    /// Allow family-B removals beyond the certified range.
    #[arg(long)]
    unsafe_extended: bool,
    #[command(flatten)]
    budgets: BudgetArgs,
    /// Include evaluation points, scalars and the generator matrix.
    #[arg(long)]
    dump_matrix: bool,
    /// Include per-check elapsed times (makes output run-dependent).
    #[arg(long)]
    timings: bool,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, hide = true)]
    inject_fault: Option<usize>,
}

#[derive(Args)]
struct TableArgs {
    #[arg(long)]
    q_max: u64,
    /// Build and check every row with q at most this.
    #[arg(long, default_value_t = 0)]
    verify_below: u64,
    #[arg(long, value_enum, default_value = "json")]
    format: FormatArg,
    /// Worker threads; 0 picks one per core.
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    #[command(flatten)]
    budgets: BudgetArgs,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SelftestArgs {
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    #[arg(long, hide = true)]
    inject_fault: bool,
}

fn output(path: Option<&PathBuf>) -> anyhow::Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(
            File::create(p).with_context(|| format!("creating {}", p.display()))?,
        )),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn thread_pool(jobs: usize) -> anyhow::Result<rayon::ThreadPool> {
    Ok(rayon::ThreadPoolBuilder::new().num_threads(jobs).build()?)
}

/// Returns whether every check passed.
fn run(cli: Cli) -> anyhow::Result<bool> {
    match cli.command {
        Command::Construct(a) => {
            let family = match a.family {
                FamilyArg::A => Family::A,
                FamilyArg::B => Family::B,
            };
            let reps = match family {
                Family::A => {
                    anyhow::ensure!(
                        a.removed_reps.is_none(),
                        "--removed-reps applies to family B only"
                    );
                    a.coset_reps
                }
                Family::B => {
                    anyhow::ensure!(
                        a.coset_reps.is_none(),
                        "--coset-reps applies to family A only"
                    );
                    a.removed_reps
                }
            };
            let req = Request {
                family,
                p: a.p,
                e: a.e,
                s: a.s,
                lambda: a.lambda,
                k: a.k,
                reps,
                unsafe_extended: a.unsafe_extended,
            };
            let opts = Options {
                budgets: a.budgets.budgets(),
                timings: a.timings,
                dump_matrix: a.dump_matrix,
                inject_fault: a.inject_fault,
            };
            let report = construct::run(&req, &opts)?;
            let mut out = output(a.out.as_ref())?;
            serde_json::to_writer_pretty(&mut out, &report)?;
            writeln!(out)?;
            out.flush()?;
            Ok(report.passed)
        }
        Command::Table(a) => {
            let opts = Options {
                budgets: a.budgets.budgets(),
                ..Options::default()
            };
            let records =
                thread_pool(a.jobs)?.install(|| table::records(a.q_max, a.verify_below, &opts))?;
            let format = match a.format {
                FormatArg::Json => Format::Json,
                FormatArg::Csv => Format::Csv,
            };
            let mut out = output(a.out.as_ref())?;
            table::write_records(&mut out, &records, format)?;
            out.flush()?;
            Ok(records
                .iter()
                .all(|r| r.status != qmds::report::RowStatus::Failed))
        }
        Command::Selftest(a) => {
            let summary = thread_pool(a.jobs)?.install(|| selftest::run(a.inject_fault));
            println!("{summary}");
            Ok(summary.passed())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
