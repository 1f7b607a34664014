//! Command-line front end.
//!
//! [`run`] takes the argument vector and the two output streams and returns
//! the process exit code: 0 on success, 1 when a verification check fails,
//! 2 on usage errors. Diagnostics go to the error stream only.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use cyclotomy::arith::{gcd, ramanujan_sum, MethodChoice, Natural};
use cyclotomy::cyclo::{cyclotomic, cyclotomic_of_power, Algorithm};
use cyclotomy::intpoly::IntPoly;
use cyclotomy::verify::{self, Suite, SweepConfig};
use serde::Serialize;

/// Largest accepted `--max-n`, and the largest polynomial index the CLI
/// will build.
pub const MAX_N_CAP: u64 = 200_000;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "cyclotomy",
    version,
    about = "Exact cyclotomic polynomials and Ramanujan sums"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print Φ_N.
    Compute {
        #[arg(long)]
        n: Natural,
        #[arg(long, default_value = "recursive", value_parser = parse_algorithm)]
        algorithm: Algorithm,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print Φ_N(X^M) as the product of Φ_{dN} over d | M.
    Compose {
        #[arg(long)]
        n: Natural,
        #[arg(long)]
        m: Natural,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print the Ramanujan sum c_N(Q).
    Ramanujan {
        #[arg(long)]
        n: Natural,
        #[arg(long)]
        q: u64,
        #[arg(long, default_value = "kluyver", value_parser = parse_method)]
        method: MethodChoice,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run identity sweeps.
    Verify {
        #[arg(long)]
        max_n: Natural,
        #[arg(long, default_value_t = 50)]
        max_q: u64,
        #[arg(long, default_value = "all", value_parser = parse_suite)]
        suite: Suite,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Time each algorithm for every n up to N and write a CSV file.
    Bench {
        #[arg(long)]
        max_n: Natural,
        #[arg(long, value_delimiter = ',', value_parser = parse_algorithm)]
        algorithms: Vec<Algorithm>,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Write the coefficients of Φ_1 .. Φ_N.
    Table {
        #[arg(long)]
        max_n: Natural,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

fn parse_algorithm(s: &str) -> Result<Algorithm, String> {
    s.parse()
}

fn parse_method(s: &str) -> Result<MethodChoice, String> {
    s.parse()
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse()
}

/// One row of `compute` / `table` JSON output.
#[derive(Debug, Serialize)]
pub struct PolyRow {
    pub n: u64,
    pub degree: usize,
    pub coefficients: Vec<String>,
}

impl PolyRow {
    pub fn new(n: u64, poly: &IntPoly) -> Self {
        PolyRow {
            n,
            degree: poly.degree().unwrap_or(0),
            coefficients: poly.coeffs().iter().map(ToString::to_string).collect(),
        }
    }
}

#[derive(Debug, Serialize)]
struct ComposeOutput {
    n: u64,
    m: u64,
    degree: usize,
    coefficients: Vec<String>,
}

#[derive(Debug, Serialize)]
struct RamanujanOutput {
    n: u64,
    q: u64,
    method: MethodChoice,
    value: i64,
}

#[derive(Debug, Serialize)]
struct BenchRow {
    n: u64,
    algorithm: &'static str,
    micros: u128,
    degree: usize,
    height: String,
}

enum Failure {
    Usage(String),
    Runtime(String),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Runtime(e.to_string())
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return EXIT_OK;
            }
            if e.kind() == ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand {
                let _ = write!(err, "error: a subcommand is required\n\n{e}");
                return EXIT_USAGE;
            }
            // the message without clap's trailing usage and help hint
            let rendered = e.to_string();
            for line in rendered.lines().take_while(|l| !l.trim().is_empty()) {
                let _ = writeln!(err, "{line}");
            }
            return EXIT_USAGE;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Runtime(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_CHECK_FAILED
        }
    }
}

fn check_cap(what: &str, value: u64) -> Result<(), Failure> {
    if value > MAX_N_CAP {
        return Err(Failure::Usage(format!(
            "{what} = {value} is out of range (limit {MAX_N_CAP})"
        )));
    }
    Ok(())
}

fn reject_csv(format: Format, command: &str) -> Result<(), Failure> {
    if format == Format::Csv {
        return Err(Failure::Usage(format!(
            "--format csv is only available for bench and table, not {command}"
        )));
    }
    Ok(())
}

fn write_json_line<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<(), Failure> {
    serde_json::to_writer(&mut *out, value).map_err(|e| Failure::Runtime(e.to_string()))?;
    writeln!(out)?;
    Ok(())
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32, Failure> {
    match command {
        Command::Compute {
            n,
            algorithm,
            format,
        } => {
            reject_csv(format, "compute")?;
            check_cap("n", n.get())?;
            let result =
                cyclotomic(n.get(), algorithm).map_err(|e| Failure::Runtime(e.to_string()))?;
            match format {
                Format::Json => write_json_line(out, &PolyRow::new(n.get(), &result.poly))?,
                _ => writeln!(out, "{}", result.poly)?,
            }
        }
        Command::Compose { n, m, format } => {
            reject_csv(format, "compose")?;
            if gcd(n.get(), m.get()) != 1 {
                return Err(Failure::Usage("n and m must be coprime".into()));
            }
            let product = n.get().saturating_mul(m.get());
            check_cap("n*m", product)?;
            let poly = cyclotomic_of_power(n.get(), m.get())
                .map_err(|e| Failure::Runtime(e.to_string()))?;
            match format {
                Format::Json => write_json_line(
                    out,
                    &ComposeOutput {
                        n: n.get(),
                        m: m.get(),
                        degree: poly.degree().unwrap_or(0),
                        coefficients: poly.coeffs().iter().map(ToString::to_string).collect(),
                    },
                )?,
                _ => writeln!(out, "{poly}")?,
            }
        }
        Command::Ramanujan {
            n,
            q,
            method,
            format,
        } => {
            reject_csv(format, "ramanujan")?;
            if matches!(method, MethodChoice::Newton | MethodChoice::Definition) {
                check_cap("n", n.get())?;
            }
            let value =
                ramanujan_sum(n.get(), q, method).map_err(|e| Failure::Runtime(e.to_string()))?;
            match format {
                Format::Json => write_json_line(
                    out,
                    &RamanujanOutput {
                        n: n.get(),
                        q,
                        method,
                        value,
                    },
                )?,
                _ => writeln!(out, "{value}")?,
            }
        }
        Command::Verify {
            max_n,
            max_q,
            suite,
            format,
        } => {
            reject_csv(format, "verify")?;
            check_cap("max-n", max_n.get())?;
            return run_verify(suite, max_n.get(), max_q, format, out);
        }
        Command::Bench {
            max_n,
            algorithms,
            out: path,
            format,
        } => {
            if format != Format::Csv {
                return Err(Failure::Usage("bench only writes csv".into()));
            }
            check_cap("max-n", max_n.get())?;
            if algorithms.is_empty() {
                return Err(Failure::Usage(
                    "--algorithms needs at least one entry".into(),
                ));
            }
            run_bench(max_n.get(), &algorithms, &path)?;
        }
        Command::Table {
            max_n,
            out: path,
            format,
        } => {
            if format == Format::Text {
                return Err(Failure::Usage("table writes json or csv".into()));
            }
            check_cap("max-n", max_n.get())?;
            write_table(max_n.get(), format, &path)?;
        }
    }
    Ok(EXIT_OK)
}

fn run_verify(
    suite: Suite,
    max_n: u64,
    max_q: u64,
    format: Format,
    out: &mut dyn Write,
) -> Result<i32, Failure> {
    let summaries = verify::sweep(suite, SweepConfig { max_n, max_q });
    let failed: u64 = summaries.iter().map(|s| s.failures.len() as u64).sum();
    let total: u64 = summaries.iter().map(|s| s.checks).sum();
    match format {
        Format::Json => write_json_line(out, &summaries)?,
        _ => {
            for s in &summaries {
                writeln!(
                    out,
                    "{}: {} checks, {} failed",
                    s.suite,
                    s.checks,
                    s.failures.len()
                )?;
                for f in &s.failures {
                    writeln!(out, "  {f}")?;
                }
            }
            if failed == 0 {
                writeln!(out, "all checks passed")?;
            } else {
                writeln!(out, "{failed} of {total} checks failed")?;
            }
        }
    }
    Ok(if failed == 0 {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    })
}

fn create(path: &Path) -> Result<BufWriter<File>, Failure> {
    File::create(path)
        .map(BufWriter::new)
        .map_err(|e| Failure::Runtime(format!("cannot write {}: {e}", path.display())))
}

fn csv_error(e: csv::Error) -> Failure {
    Failure::Runtime(e.to_string())
}

fn run_bench(max_n: u64, algorithms: &[Algorithm], path: &Path) -> Result<(), Failure> {
    let mut writer = csv::Writer::from_writer(create(path)?);
    // Timings are taken sequentially so runs do not compete for cores.
    for n in 1..=max_n {
        for &algorithm in algorithms {
            let start = Instant::now();
            let result = cyclotomic(n, algorithm).map_err(|e| Failure::Runtime(e.to_string()))?;
            let micros = start.elapsed().as_micros();
            writer
                .serialize(BenchRow {
                    n,
                    algorithm: algorithm.name(),
                    micros,
                    degree: result.poly.degree().unwrap_or(0),
                    height: result.poly.height().to_string(),
                })
                .map_err(csv_error)?;
        }
    }
    writer.flush()?;
    Ok(())
}

fn write_table(max_n: u64, format: Format, path: &Path) -> Result<(), Failure> {
    let rows = (1..=max_n).map(|n| {
        cyclotomic(n, Algorithm::Radical)
            .map(|r| PolyRow::new(n, &r.poly))
            .map_err(|e| Failure::Runtime(e.to_string()))
    });
    let mut file = create(path)?;
    match format {
        Format::Csv => {
            let mut writer = csv::WriterBuilder::new()
                .flexible(true)
                .from_writer(&mut file);
            writer
                .write_record(["n", "degree", "coefficients"])
                .map_err(csv_error)?;
            for row in rows {
                let row = row?;
                let mut record = vec![row.n.to_string(), row.degree.to_string()];
                record.push(row.coefficients.join(" "));
                writer.write_record(&record).map_err(csv_error)?;
            }
            writer.flush()?;
        }
        _ => {
            // Streamed as a JSON array, one row per line.
            writeln!(file, "[")?;
            for (i, row) in rows.enumerate() {
                let row = row?;
                if i > 0 {
                    writeln!(file, ",")?;
                }
                serde_json::to_writer(&mut file, &row)
                    .map_err(|e| Failure::Runtime(e.to_string()))?;
            }
            writeln!(file, "\n]")?;
        }
    }
    file.flush()?;
    Ok(())
}
