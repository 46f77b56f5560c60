//! Command-line interface: generation, checking, scans, witness search,
//! and exact numeric tables. Machine-readable JSON (or CSV) on stdout,
//! diagnostics on stderr.
//!
//! Exit codes: 0 on success (a nonunimodal verdict is data, not an error),
//! 1 on usage or validation problems, 2 on internal verification failure.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use ferrers::analysis::{self, RationalValue};
use ferrers::genfunc;
use ferrers::search::{self, GfKind, ScanConfig};
use ferrers::{CoeffSeq, Error, Partition};

#[derive(Parser)]
#[command(
    name = "ferrers",
    version,
    about = "Exact rank generating functions of subpartitions in Ferrers diagrams"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the coefficients of G (all subpartitions) or F (distinct parts)
    Gen(GenArgs),
    /// Compute a generating function and classify its coefficient sequence
    Check(CheckArgs),
    /// Exhaustively scan partitions, streaming nonunimodal findings
    Scan(ScanArgs),
    /// Search the 4-part quadratic witness family over a range of m
    Witness4(Witness4Args),
    /// Emit exact numeric tables: alternating sums, finite differences, alpha grid
    Tables(TablesArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindArg {
    #[value(alias = "G")]
    G,
    #[value(alias = "F")]
    F,
}

impl KindArg {
    fn label(self) -> &'static str {
        match self {
            KindArg::G => "G",
            KindArg::F => "F",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    /// Subset expansion (2^b signed geometric terms)
    Formula,
    /// Largest-part recursion with memoization
    Recursion,
    /// First-part-bounded dynamic program
    Dp,
    /// Brute-force enumeration (small partitions only)
    Enum,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
}

#[derive(Args)]
struct GenArgs {
    /// Partition as comma-separated parts, largest first (e.g. 4,3,1)
    #[arg(long)]
    lambda: String,
    #[arg(long, value_enum, default_value_t = KindArg::G)]
    kind: KindArg,
    /// Weight of the first part of each subpartition (kind G only)
    #[arg(long, default_value_t = 1)]
    weight: u32,
    #[arg(long, value_enum, default_value_t = MethodArg::Formula)]
    method: MethodArg,
    /// Truncation degree; defaults to the full degree
    #[arg(long)]
    truncate: Option<usize>,
    #[arg(long, value_enum, default_value_t = FormatArg::Json)]
    format: FormatArg,
    /// Cross-check against an independent method before printing
    #[arg(long)]
    verify: bool,
}

#[derive(Args)]
struct CheckArgs {
    /// Partition as comma-separated parts, largest first
    #[arg(long)]
    lambda: String,
    #[arg(long, value_enum, default_value_t = KindArg::G)]
    kind: KindArg,
    #[arg(long, value_enum, default_value_t = MethodArg::Formula)]
    method: MethodArg,
    #[arg(long, value_enum, default_value_t = FormatArg::Json)]
    format: FormatArg,
    /// Cross-check against an independent method before printing
    #[arg(long)]
    verify: bool,
}

#[derive(Args)]
struct ScanArgs {
    /// Number of parts of every scanned partition
    #[arg(long)]
    parts: usize,
    /// Upper bound on the first part
    #[arg(long)]
    max_first: u32,
    #[arg(long, value_enum, default_value_t = KindArg::G)]
    kind: KindArg,
    /// Scan strictly decreasing partitions (implies --kind f)
    #[arg(long)]
    distinct: bool,
    /// Worker threads (defaults to all available cores)
    #[arg(long)]
    jobs: Option<usize>,
    /// Checkpoint file: scans resume after the partition recorded there
    #[arg(long)]
    checkpoint: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = FormatArg::Json)]
    format: FormatArg,
    /// Emit every scanned partition, not only nonunimodal findings
    #[arg(long)]
    all: bool,
}

#[derive(Args)]
struct Witness4Args {
    #[arg(long)]
    m_min: u64,
    #[arg(long)]
    m_max: u64,
}

#[derive(Args)]
struct TablesArgs {
    /// Largest argument of the alternating-sum table (from 5)
    #[arg(long, default_value_t = 40)]
    tb_max: u32,
    /// Largest order of the finite-difference table
    #[arg(long, default_value_t = 12)]
    fd_max: u32,
    /// Number of grid steps on x in [5/6, 1] (samples = steps + 1)
    #[arg(long, default_value_t = 200)]
    alpha_steps: u64,
}

/// One generating-function record. Coefficients are decimal strings so
/// consumers never need arbitrary-width integers to parse the output.
#[derive(Serialize)]
struct OutputRecord {
    lambda: Vec<u32>,
    kind: &'static str,
    weight: u32,
    coeffs: Vec<String>,
    unimodal: bool,
    peak: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    first_dip: Option<usize>,
}

impl OutputRecord {
    fn build(lambda: &Partition, kind: KindArg, weight: u32, series: &CoeffSeq) -> OutputRecord {
        let report = analysis::unimodality_report(series);
        OutputRecord {
            lambda: lambda.parts().to_vec(),
            kind: kind.label(),
            weight,
            coeffs: series.coeffs().iter().map(|c| c.to_string()).collect(),
            unimodal: report.unimodal,
            peak: report.peak_index,
            first_dip: report.first_dip_index,
        }
    }

    fn print(&self, format: FormatArg) {
        match format {
            FormatArg::Json => {
                println!("{}", serde_json::to_string(self).expect("record serializes"))
            }
            FormatArg::Csv => {
                println!("n,coeff");
                for (n, c) in self.coeffs.iter().enumerate() {
                    println!("{n},{c}");
                }
            }
        }
    }
}

enum AppError {
    Usage(String),
    Verification(String),
}

impl From<Error> for AppError {
    fn from(e: Error) -> AppError {
        match e {
            Error::VerificationFailed(msg) => AppError::Verification(msg),
            other => AppError::Usage(other.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match cli.command {
        Command::Gen(args) => cmd_gen(args),
        Command::Check(args) => cmd_check(args),
        Command::Scan(args) => cmd_scan(args),
        Command::Witness4(args) => cmd_witness4(args),
        Command::Tables(args) => cmd_tables(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(AppError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(AppError::Verification(msg)) => {
            eprintln!("verification failure: {msg}");
            ExitCode::from(2)
        }
    }
}

fn parse_lambda(text: &str) -> Result<Partition, AppError> {
    text.parse::<Partition>().map_err(AppError::from)
}

fn compute_series(
    lambda: &Partition,
    kind: KindArg,
    weight: u32,
    method: MethodArg,
    truncate: Option<usize>,
) -> Result<CoeffSeq, AppError> {
    if weight < 1 {
        return Err(AppError::Usage("weight must be at least 1".into()));
    }
    match kind {
        KindArg::G => {
            let t = truncate.unwrap_or_else(|| genfunc::full_degree(lambda, weight));
            match method {
                MethodArg::Formula => Ok(genfunc::rank_gf_formula(lambda, weight, t)),
                MethodArg::Recursion => Ok(genfunc::rank_gf_recursive(lambda, weight, t)),
                MethodArg::Dp => {
                    if weight != 1 {
                        return Err(AppError::Usage("method dp supports weight 1 only".into()));
                    }
                    Ok(genfunc::rank_gf_dp(lambda, t))
                }
                MethodArg::Enum => Ok(genfunc::enumeration_histogram(
                    lambda,
                    weight,
                    t,
                    genfunc::DEFAULT_ENUMERATION_BOUND,
                )?),
            }
        }
        KindArg::F => {
            if weight != 1 {
                return Err(AppError::Usage("kind F supports weight 1 only".into()));
            }
            let t = truncate.unwrap_or(lambda.size() as usize);
            match method {
                MethodArg::Formula => Ok(genfunc::distinct_rank_gf(lambda, t)?),
                MethodArg::Enum => Ok(genfunc::enumeration_histogram_distinct(
                    lambda,
                    t,
                    genfunc::DEFAULT_ENUMERATION_BOUND,
                )?),
                MethodArg::Recursion | MethodArg::Dp => Err(AppError::Usage(
                    "kind F supports methods formula and enum".into(),
                )),
            }
        }
    }
}

/// Cross-checks a computed series against an independent route; used by
/// `--verify`. A mismatch is an internal failure (exit code 2).
fn cross_verify(
    lambda: &Partition,
    kind: KindArg,
    weight: u32,
    truncate: Option<usize>,
    series: &CoeffSeq,
) -> Result<(), AppError> {
    let other = match kind {
        KindArg::G => {
            if weight == 1 {
                let t = truncate.unwrap_or_else(|| genfunc::full_degree(lambda, 1));
                genfunc::rank_gf_dp(lambda, t)
            } else {
                let t = truncate.unwrap_or_else(|| genfunc::full_degree(lambda, weight));
                genfunc::rank_gf_recursive(lambda, weight, t)
            }
        }
        KindArg::F => {
            let t = truncate.unwrap_or(lambda.size() as usize);
            if lambda.len() == 4 {
                genfunc::distinct_rank_gf_4part(lambda, t)?
            } else if lambda.size() <= genfunc::DEFAULT_ENUMERATION_BOUND {
                genfunc::enumeration_histogram_distinct(
                    lambda,
                    t,
                    genfunc::DEFAULT_ENUMERATION_BOUND,
                )?
            } else {
                return Err(AppError::Usage(
                    "no independent verification method for this F input".into(),
                ));
            }
        }
    };
    if other != *series {
        return Err(AppError::Verification(format!(
            "independent method disagrees for λ = {lambda}"
        )));
    }
    Ok(())
}

fn cmd_gen(args: GenArgs) -> Result<(), AppError> {
    let lambda = parse_lambda(&args.lambda)?;
    let series = compute_series(&lambda, args.kind, args.weight, args.method, args.truncate)?;
    if args.verify {
        cross_verify(&lambda, args.kind, args.weight, args.truncate, &series)?;
    }
    OutputRecord::build(&lambda, args.kind, args.weight, &series).print(args.format);
    Ok(())
}

fn cmd_check(args: CheckArgs) -> Result<(), AppError> {
    let lambda = parse_lambda(&args.lambda)?;
    let series = compute_series(&lambda, args.kind, 1, args.method, None)?;
    if args.verify {
        cross_verify(&lambda, args.kind, 1, None, &series)?;
    }
    OutputRecord::build(&lambda, args.kind, 1, &series).print(args.format);
    Ok(())
}

fn cmd_scan(args: ScanArgs) -> Result<(), AppError> {
    if args.parts < 1 {
        return Err(AppError::Usage("--parts must be at least 1".into()));
    }
    if args.max_first < 1 {
        return Err(AppError::Usage("--max-first must be at least 1".into()));
    }
    let jobs = match args.jobs {
        Some(0) => return Err(AppError::Usage("--jobs must be at least 1".into())),
        Some(j) => j,
        None => std::thread::available_parallelism().map_or(1, |n| n.get()),
    };
    let kind = if args.distinct { KindArg::F } else { args.kind };
    let mut config = ScanConfig::new(
        args.parts,
        args.max_first,
        match kind {
            KindArg::G => GfKind::G,
            KindArg::F => GfKind::F,
        },
    );
    config.jobs = jobs;
    config.checkpoint = args.checkpoint.clone();
    if args.format == FormatArg::Csv {
        println!("lambda,kind,unimodal,peak,first_dip");
    }
    for result in search::scan_partitions(&config)? {
        if result.report.unimodal && !args.all {
            continue;
        }
        match args.format {
            FormatArg::Json => {
                // regenerate the series for emitted records only
                let series = compute_series(&result.lambda, kind, 1, MethodArg::Formula, None)?;
                let record = OutputRecord::build(&result.lambda, kind, 1, &series);
                println!("{}", serde_json::to_string(&record).expect("record serializes"));
            }
            FormatArg::Csv => {
                let dip = result
                    .report
                    .first_dip_index
                    .map_or(String::new(), |d| d.to_string());
                let parts = result
                    .lambda
                    .parts()
                    .iter()
                    .map(|p| p.to_string())
                    .collect::<Vec<_>>()
                    .join(" ");
                println!(
                    "{},{},{},{},{}",
                    parts,
                    kind.label(),
                    result.report.unimodal,
                    result.report.peak_index,
                    dip
                );
            }
        }
    }
    Ok(())
}

fn cmd_witness4(args: Witness4Args) -> Result<(), AppError> {
    if args.m_min < 1 || args.m_min > args.m_max {
        return Err(AppError::Usage("require 1 <= m-min <= m-max".into()));
    }
    #[derive(Serialize)]
    struct WitnessRecord {
        lambda: Vec<u32>,
        #[serde(rename = "N")]
        n_base: usize,
        m: u64,
        ell: u64,
        n: u64,
        f: String,
        g: String,
        verified: bool,
    }
    for m in args.m_min..=args.m_max {
        if let Some(w) = search::find_witness(m)? {
            let record = WitnessRecord {
                lambda: w.lambda.parts().to_vec(),
                n_base: w.n_base,
                m: w.m,
                ell: w.ell,
                n: w.n,
                f: w.f_value.to_string(),
                g: w.g_value.to_string(),
                // find_witness only returns after the series re-check
                verified: true,
            };
            println!("{}", serde_json::to_string(&record).expect("record serializes"));
        }
    }
    Ok(())
}

fn cmd_tables(args: TablesArgs) -> Result<(), AppError> {
    if args.tb_max < 5 {
        return Err(AppError::Usage("--tb-max must be at least 5".into()));
    }
    if args.alpha_steps < 1 {
        return Err(AppError::Usage("--alpha-steps must be at least 1".into()));
    }
    #[derive(Serialize)]
    struct AlternatingRow {
        b: u32,
        value: String,
    }
    #[derive(Serialize)]
    struct DifferenceRow {
        k: u32,
        value: String,
    }
    #[derive(Serialize)]
    struct AlphaRow {
        x: String,
        /// α(x, 5/2), the top edge of the concavity window
        at_y_max: String,
        /// α(x, 5x/2), the bottom edge
        at_y_min: String,
    }
    #[derive(Serialize)]
    struct Tables {
        alternating_sums: Vec<AlternatingRow>,
        finite_differences: Vec<DifferenceRow>,
        alpha_grid: Vec<AlphaRow>,
    }

    let alternating_sums = (5..=args.tb_max)
        .map(|b| {
            analysis::alternating_sum_t(b).map(|v| AlternatingRow {
                b,
                value: v.to_string(),
            })
        })
        .collect::<Result<Vec<_>, Error>>()?;
    let finite_differences = (1..=args.fd_max)
        .map(|k| DifferenceRow {
            k,
            value: analysis::finite_difference_sum(k).to_string(),
        })
        .collect();
    let y_max = RationalValue::new(5.into(), 2.into());
    let alpha_grid = (0..=args.alpha_steps)
        .map(|t| {
            let x = RationalValue::new(5.into(), 6.into())
                + RationalValue::new(t.into(), (6 * args.alpha_steps).into());
            let y_min = &x * &y_max;
            AlphaRow {
                at_y_max: analysis::alpha5(&x, &y_max).to_string(),
                at_y_min: analysis::alpha5(&x, &y_min).to_string(),
                x: x.to_string(),
            }
        })
        .collect();
    let tables = Tables {
        alternating_sums,
        finite_differences,
        alpha_grid,
    };
    println!("{}", serde_json::to_string(&tables).expect("tables serialize"));
    Ok(())
}
