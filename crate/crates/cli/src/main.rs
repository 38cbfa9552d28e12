use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use dcoset::presented::{
    parse_word, rook_product_table, scaled_limit_table, structure_table_parallel, Normalizer,
    StructureTable,
};
use dcoset::rational::{format_q, parse_q};
use dcoset::verify::{
    crosscheck_many, dimension_suite, gram_positivity, limit_suite, relation_suite,
    semisimplicity_probe, smallest_positive_definite_nu, VerificationReport, VerifyOptions,
};
use dcoset::{Error, Limits, Q};

/// Exact double-coset algebras: tables, normal forms and verification suites.
#[derive(Parser, Debug)]
#[command(name = "dcoset", version)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Global {
    /// Worker threads for table and suite builders (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Largest alpha for enumeration and counting.
    #[arg(long, global = true, env = dcoset::limits::MAX_ALPHA_ENV)]
    max_alpha: Option<usize>,
    /// Largest alpha for full structure tables.
    #[arg(long, global = true)]
    max_table_alpha: Option<usize>,
    /// Largest alpha + n for brute-force oracle checks.
    #[arg(long, global = true)]
    max_group_degree: Option<usize>,
}

impl Global {
    fn limits(&self) -> Limits {
        let d = Limits::default();
        Limits {
            max_alpha: self.max_alpha.unwrap_or(d.max_alpha),
            max_table_alpha: self.max_table_alpha.unwrap_or(d.max_table_alpha),
            max_group_degree: self.max_group_degree.unwrap_or(d.max_group_degree),
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Count |Π_α| by every available route.
    Dims {
        #[arg(long)]
        alpha: usize,
    },
    /// List the canonical basis with 1-based indices.
    Basis {
        #[arg(long)]
        alpha: usize,
    },
    /// Normal form of a word such as "T1 T1 A(12)".
    Normalize {
        #[arg(long)]
        alpha: usize,
        #[arg(long)]
        word: String,
    },
    /// Export the structure constants, optionally at a rational ν.
    Table {
        #[arg(long)]
        alpha: usize,
        #[arg(long, value_parser = parse_rational)]
        nu: Option<Q>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Re-read an exported polynomial table and print its canonical JSON.
    Reread {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Gram matrix at ν and its positive-definiteness verdict.
    Gram {
        #[arg(long)]
        alpha: usize,
        #[arg(long, value_parser = parse_rational)]
        nu: Q,
    },
    /// The ν → ∞ limit table, compared with the rook monoid.
    Limit {
        #[arg(long)]
        alpha: usize,
    },
    /// Run a verification suite and print its JSON report.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[arg(long)]
        alpha: usize,
        /// Repeat for several values (crosscheck); defaults to max(alpha, 1).
        #[arg(long)]
        n: Vec<usize>,
        #[arg(long, default_value_t = 5)]
        max_counterexamples: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Json,
    Csv,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Suite {
    Crosscheck,
    Relations,
    Dims,
    Limit,
    Semisimple,
}

fn parse_rational(s: &str) -> Result<Q, String> {
    parse_q(s).map_err(|e| e.to_string())
}

fn emit(text: &str, out: Option<&PathBuf>) -> anyhow::Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// `Ok(false)` means a check ran and failed.
fn run(cli: Cli) -> anyhow::Result<bool> {
    if let Some(jobs) = cli.global.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .context("configuring the thread pool")?;
    }
    let limits = cli.global.limits();
    match cli.command {
        Command::Dims { alpha } => {
            let report = dimension_suite(alpha, &VerifyOptions { limits, ..Default::default() })?;
            let m = &report.metrics;
            let show = |k: &str| m[k].as_str().unwrap_or("skipped").to_string();
            println!("rook monoid enumeration: {}", show("rook_enumeration"));
            println!("closed form:             {}", show("rook_formula"));
            println!("sum of squared blocks:   {}", show("sum_of_squares"));
            println!("basis of the algebra:    {}", show("basis"));
            println!("block dimensions:        {}", m["multiplicities"]);
            finish(&report)
        }
        Command::Basis { alpha } => {
            let table_basis = dcoset::presented::basis_enumerate(alpha, &limits)?;
            for (i, m) in table_basis.iter().enumerate() {
                println!("{:>4}  {:<16} {}", i + 1, m.to_string(), m.rook());
            }
            Ok(true)
        }
        Command::Normalize { alpha, word } => {
            limits.check_alpha(alpha)?;
            let tokens = parse_word(&word, alpha)?;
            println!("{}", Normalizer::new(alpha).normalize(&tokens)?);
            Ok(true)
        }
        Command::Table { alpha, nu, format, out } => {
            let table = structure_table_parallel(alpha, &limits)?;
            let text = match (nu, format) {
                (None, Format::Json) => table.to_json(),
                (None, Format::Csv) => table.to_csv(),
                (Some(x), Format::Json) => table.evaluate_at(&x).to_json(),
                (Some(x), Format::Csv) => table.evaluate_at(&x).to_csv(),
            };
            emit(&text, out.as_ref())?;
            Ok(true)
        }
        Command::Reread { input } => {
            let text = fs::read_to_string(&input).with_context(|| format!("reading {}", input.display()))?;
            if dcoset::presented::exported_nu(&text)?.is_some() {
                bail!(Error::Argument("only polynomial tables (exported without --nu) can be re-read".into()));
            }
            print!("{}", StructureTable::from_json(&text)?.to_json());
            Ok(true)
        }
        Command::Gram { alpha, nu } => {
            let table = structure_table_parallel(alpha, &limits)?;
            let (g, verdict) = gram_positivity(&table, &nu)?;
            println!("Gram matrix at nu = {}:", format_q(&nu));
            for row in &g {
                let cells: Vec<String> = row.iter().map(format_q).collect();
                println!("  {}", cells.join(" "));
            }
            let pivots: Vec<String> = verdict.pivots.iter().map(format_q).collect();
            println!("LDL pivots: {}", pivots.join(" "));
            match verdict.failed_at {
                None => println!("positive definite: yes"),
                Some(k) => println!("positive definite: no (pivot {} is not positive)", k + 1),
            }
            match smallest_positive_definite_nu(&table)? {
                Some(k) => println!("smallest integer nu in [0, {}] with a positive definite Gram matrix: {k}", 4 * alpha),
                None => println!("no integer nu in [0, {}] gives a positive definite Gram matrix", 4 * alpha),
            }
            Ok(true)
        }
        Command::Limit { alpha } => {
            let table = structure_table_parallel(alpha, &limits)?;
            let lim = scaled_limit_table(&table)?;
            let rook = rook_product_table(alpha, &limits)?;
            for (i, m) in table.basis().iter().enumerate() {
                println!("{:>4}  {}", i + 1, m.rook());
            }
            for row in &lim.products {
                let cells: Vec<String> = row.iter().map(|r| format!("{:>4}", r + 1)).collect();
                println!("{}", cells.join(""));
            }
            let ok = lim.products == rook;
            println!("equals the rook monoid table: {}", if ok { "yes" } else { "no" });
            if !ok {
                eprintln!("verification failed: limit");
            }
            Ok(ok)
        }
        Command::Verify { suite, alpha, n, max_counterexamples, out } => {
            let opts = VerifyOptions { limits, max_counterexamples };
            let ns = if n.is_empty() { vec![alpha.max(1)] } else { n };
            let report = match suite {
                Suite::Crosscheck => crosscheck_many(alpha, &ns, &opts)?,
                Suite::Relations => {
                    if ns.len() != 1 {
                        bail!(Error::Argument("relations takes a single --n".into()));
                    }
                    relation_suite(alpha, ns[0], &opts)?
                }
                Suite::Dims => dimension_suite(alpha, &opts)?,
                Suite::Limit => limit_suite(alpha, &opts)?,
                Suite::Semisimple => semisimplicity_probe(alpha, &opts)?,
            };
            emit(&report.to_json(), out.as_ref())?;
            for w in &report.warnings {
                eprintln!("{w}");
            }
            finish(&report)
        }
    }
}

fn finish(report: &VerificationReport) -> anyhow::Result<bool> {
    if !report.passed() {
        eprintln!("verification failed: {}", report.suite);
    }
    Ok(report.passed())
}

fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<Error>() {
        Some(Error::Capacity { .. }) => 3,
        Some(Error::Argument(_) | Error::Parse(_) | Error::Dimension(_) | Error::EmptyCoset(_)) => 2,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}
