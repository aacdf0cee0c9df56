use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use diagzeta::curve::{validate_params, Regime};
use diagzeta::report::{build_report, sweep, ReportDocument};
use diagzeta::verify::{self, Suite};

#[derive(Parser)]
#[command(name = "diagzeta", version, about = "Zeta functions of diagonal curves aY^e = bX^e + cZ^e over F_q")]
#[command(arg_required_else_help = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full report for one curve.
    Report(ReportArgs),
    /// One report per coefficient class b = g^i, a = g^j, c = 1.
    Sweep(SweepArgs),
    /// Run verification suites.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct RegimeArgs {
    #[arg(long)]
    p: u64,
    #[arg(long)]
    l: u64,
    #[arg(long)]
    e: u64,
    #[arg(long)]
    s: u32,
}

#[derive(Args)]
struct ReportArgs {
    #[command(flatten)]
    regime: RegimeArgs,
    /// Coefficient of Y^e: integer, `g^k` or `poly:[...]`.
    #[arg(long)]
    a: String,
    #[arg(long)]
    b: String,
    #[arg(long)]
    c: String,
    #[arg(long, default_value_t = 4)]
    n_max: u32,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Also count points by enumeration while within the budget.
    #[arg(long)]
    bruteforce: bool,
    #[arg(long, env = "DIAGZETA_BUDGET", default_value_t = diagzeta::count::DEFAULT_BUDGET)]
    budget: u128,
}

#[derive(Args)]
struct SweepArgs {
    #[command(flatten)]
    regime: RegimeArgs,
    /// Iterate over every (i, j) in Z_e^2.
    #[arg(long, required = true)]
    all_ij: bool,
    #[arg(long, default_value_t = 4)]
    n_max: u32,
    /// Output file; `.csv` selects CSV, anything else JSON lines.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum)]
    format: Option<SweepFormat>,
    #[arg(long)]
    bruteforce: bool,
    #[arg(long, env = "DIAGZETA_BUDGET", default_value_t = diagzeta::count::DEFAULT_BUDGET)]
    budget: u128,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = SuiteArg::All)]
    suite: SuiteArg,
    #[arg(long, env = "DIAGZETA_BUDGET", default_value_t = diagzeta::count::DEFAULT_BUDGET)]
    budget: u128,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum SweepFormat {
    Jsonl,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Lemma1,
    Lemma2,
    Series,
    Weil,
    Classnum,
    Powersum,
    Extremality,
    Hermitian,
    Classifier,
    Golden,
    All,
}

enum Failure {
    Invalid(diagzeta::Error),
    Io(String),
    Checks,
}

impl From<diagzeta::Error> for Failure {
    fn from(e: diagzeta::Error) -> Self {
        Failure::Invalid(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Report(args) => report(args),
        Command::Sweep(args) => run_sweep(args),
        Command::Verify(args) => run_verify(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Checks) => ExitCode::from(1),
        Err(Failure::Invalid(e)) => {
            eprintln!("error: {}: {e}", e.name());
            ExitCode::from(2)
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: Io: {msg}");
            ExitCode::from(2)
        }
    }
}

fn write_csv<W: Write>(out: W, docs: &[ReportDocument]) -> Result<(), Failure> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(ReportDocument::csv_header())?;
    for d in docs {
        w.write_record(d.csv_record())?;
    }
    w.flush()?;
    Ok(())
}

fn report(args: ReportArgs) -> Result<(), Failure> {
    let r = &args.regime;
    let params = validate_params(r.p, r.l, r.e, r.s, &args.a, &args.b, &args.c)?;
    let doc = build_report(&params, args.n_max, args.bruteforce.then_some(args.budget))?;
    let stdout = io::stdout().lock();
    match args.format {
        Format::Json => writeln!(BufWriter::new(stdout), "{}", doc.to_json())?,
        Format::Text => write!(BufWriter::new(stdout), "{}", doc.to_text())?,
        Format::Csv => write_csv(stdout, std::slice::from_ref(&doc))?,
    }
    Ok(())
}

fn run_sweep(args: SweepArgs) -> Result<(), Failure> {
    let r = &args.regime;
    let regime = Regime::new(r.p, r.l, r.e, r.s)?;
    let docs = sweep(&regime, args.n_max, args.bruteforce.then_some(args.budget))?;
    let is_csv = |p: &Path| p.extension().is_some_and(|x| x.eq_ignore_ascii_case("csv"));
    let format = args.format.unwrap_or(match &args.out {
        Some(p) if is_csv(p) => SweepFormat::Csv,
        _ => SweepFormat::Jsonl,
    });
    let out: Box<dyn Write> = match &args.out {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    match format {
        SweepFormat::Csv => write_csv(out, &docs)?,
        SweepFormat::Jsonl => {
            let mut out = out;
            for d in &docs {
                writeln!(out, "{}", d.to_json_line())?;
            }
            out.flush()?;
        }
    }
    Ok(())
}

fn run_verify(args: VerifyArgs) -> Result<(), Failure> {
    let suites: Vec<Suite> = match args.suite {
        SuiteArg::All => Suite::ALL.to_vec(),
        SuiteArg::Lemma1 => vec![Suite::Lemma1],
        SuiteArg::Lemma2 => vec![Suite::Lemma2],
        SuiteArg::Series => vec![Suite::Series],
        SuiteArg::Weil => vec![Suite::Weil],
        SuiteArg::Classnum => vec![Suite::Classnum],
        SuiteArg::Powersum => vec![Suite::Powersum],
        SuiteArg::Extremality => vec![Suite::Extremality],
        SuiteArg::Hermitian => vec![Suite::Hermitian],
        SuiteArg::Classifier => vec![Suite::Classifier],
        SuiteArg::Golden => vec![Suite::Golden],
    };
    let mut failed = 0;
    let mut total = 0;
    for suite in suites {
        for check in verify::run(suite, args.budget) {
            println!("{check}");
            total += 1;
            failed += usize::from(!check.passed);
        }
    }
    println!("{} of {total} checks passed", total - failed);
    if failed > 0 {
        Err(Failure::Checks)
    } else {
        Ok(())
    }
}
