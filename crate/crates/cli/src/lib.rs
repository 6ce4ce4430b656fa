//! `knomial` command-line front end.
//!
//! Exit codes: 0 on success (or an all-pass verification), 1 when a
//! verification fails or benchmark strategies disagree, 2 on usage errors.

use std::ffi::OsString;
use std::io::{self, Write};
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand, ValueEnum};
use knomial::identities::{expand_power, verify, PropertyId, Strategy, VerifyConfig};
use knomial::{coefficient, make_params, BigInt, CoefficientQuery, KNomialParams, Row};
use serde::{Deserialize, Serialize};

pub const EXIT_SUCCESS: u8 = 0;
pub const EXIT_FAILURE: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "knomial",
    version,
    about = "k-nomial coefficients and triangles of order k"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print line n of the triangle of order k.
    #[command(allow_negative_numbers = true)]
    Row {
        #[arg(long)]
        k: i64,
        #[arg(long)]
        n: i64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Print the coefficient of x^h in (1 + x + ... + x^(k-1))^n.
    #[command(allow_negative_numbers = true)]
    Coeff {
        #[arg(long)]
        k: i64,
        #[arg(long)]
        n: i64,
        #[arg(long)]
        h: i64,
    },
    /// Print lines 0 through n-max of the triangle of order k.
    #[command(allow_negative_numbers = true)]
    Triangle {
        #[arg(long)]
        k: i64,
        #[arg(long)]
        n_max: i64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Check the triangle's properties against independent computations.
    #[command(allow_negative_numbers = true)]
    Verify {
        #[arg(long)]
        k: i64,
        #[arg(long, default_value_t = 10)]
        n_max: i64,
        #[arg(long, default_value_t = 5)]
        m_max: i64,
        /// Offset the expected values of one property by one.
        #[arg(long, hide = true, value_parser = parse_property)]
        perturb: Option<PropertyId>,
        /// Run checks on the calling thread only.
        #[arg(long)]
        sequential: bool,
    },
    /// Time window-sum line generation against the naive polynomial expansion.
    #[command(allow_negative_numbers = true)]
    Bench {
        #[arg(long)]
        k: i64,
        #[arg(long)]
        n: i64,
        #[arg(long, default_value_t = 1)]
        repetitions: i64,
    },
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// Center-aligned lines labelled "line n".
    #[default]
    Text,
    Csv,
    /// One compact object per line, coefficients as decimal strings.
    Json,
}

fn parse_property(s: &str) -> Result<PropertyId, String> {
    s.parse().map_err(|e| format!("{e}"))
}

/// Wire form of one line.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowJson {
    pub k: usize,
    pub n: usize,
    pub coefficients: Vec<String>,
}

impl From<&Row> for RowJson {
    fn from(row: &Row) -> Self {
        Self {
            k: row.k(),
            n: row.n(),
            coefficients: row.coefficients().iter().map(ToString::to_string).collect(),
        }
    }
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Io(io::Error),
}

impl From<knomial::Error> for Failure {
    fn from(e: knomial::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

/// Parses `args` (program name first) and runs the command, returning the
/// process exit code.
pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{}", e.render());
                return EXIT_SUCCESS;
            }
            let rendered = e.render().to_string();
            let line = rendered
                .lines()
                .next()
                .unwrap_or("error: invalid arguments");
            let _ = writeln!(err, "{line}");
            return EXIT_USAGE;
        }
    };
    match execute(&cli.command, out) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => EXIT_SUCCESS,
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_FAILURE
        }
    }
}

fn execute(command: &Command, out: &mut impl Write) -> Result<u8, Failure> {
    match *command {
        Command::Row { k, n, format } => {
            let row = knomial::row(k, n)?;
            write_row(out, &row, format)?;
            Ok(EXIT_SUCCESS)
        }
        Command::Coeff { k, n, h } => {
            let value = coefficient(CoefficientQuery::new(k, n, h))?;
            writeln!(out, "{value}")?;
            Ok(EXIT_SUCCESS)
        }
        Command::Triangle { k, n_max, format } => {
            let lines = knomial::triangle(k, n_max)?;
            write_triangle(out, lines, format)?;
            Ok(EXIT_SUCCESS)
        }
        Command::Verify {
            k,
            n_max,
            m_max,
            perturb,
            sequential,
        } => {
            let params = make_params(k)?;
            let n_max = non_negative("n-max", n_max)?;
            let m_max = non_negative("m-max", m_max)?;
            let strategy = if sequential {
                Strategy::Sequential
            } else {
                Strategy::Parallel
            };
            let config = VerifyConfig::new(n_max, m_max)
                .strategy(strategy)
                .perturb(perturb);
            let report = verify(&params, &config);
            write!(out, "{report}")?;
            if report.all_pass() {
                writeln!(out, "all {} properties PASS", report.results.len())?;
                Ok(EXIT_SUCCESS)
            } else {
                writeln!(
                    out,
                    "{} of {} properties FAIL",
                    report.failures().count(),
                    report.results.len()
                )?;
                Ok(EXIT_FAILURE)
            }
        }
        Command::Bench { k, n, repetitions } => {
            let params = make_params(k)?;
            let n = non_negative("n", n)?;
            let repetitions = non_negative("repetitions", repetitions)?;
            if repetitions == 0 {
                return Err(Failure::Usage("repetitions must be at least 1".into()));
            }
            bench(out, &params, n, repetitions)
        }
    }
}

fn non_negative(name: &str, value: i64) -> Result<usize, Failure> {
    usize::try_from(value)
        .map_err(|_| Failure::Usage(format!("--{name} must be non-negative, got {value}")))
}

pub fn write_row(out: &mut impl Write, row: &Row, format: Format) -> io::Result<()> {
    match format {
        Format::Text => writeln!(out, "line {}: {row}", row.n()),
        Format::Csv => writeln!(out, "{}", csv_line(row)),
        Format::Json => writeln!(out, "{}", json_line(row)),
    }
}

fn csv_line(row: &Row) -> String {
    let fields: Vec<String> = row.coefficients().iter().map(ToString::to_string).collect();
    fields.join(",")
}

fn json_line(row: &Row) -> String {
    serde_json::to_string(&RowJson::from(row)).expect("string fields always serialize")
}

/// Streams the lines of `lines`. Text output centers every line on the
/// midline of the widest one, which is always the last.
pub fn write_triangle(
    out: &mut impl Write,
    lines: knomial::Triangle,
    format: Format,
) -> io::Result<()> {
    if format != Format::Text {
        for row in lines {
            write_row(out, &row, format)?;
        }
        return Ok(());
    }

    let params = *lines.params();
    let n_max = lines.len().saturating_sub(1);
    let widest = Row::generate(&params, n_max).to_string().len();
    let label_width = format!("line {n_max}:").len();
    for row in lines {
        let body = row.to_string();
        let pad = (widest - body.len()) / 2;
        let label = format!("line {}:", row.n());
        writeln!(out, "{label:<label_width$} {:pad$}{body}", "")?;
    }
    Ok(())
}

fn millis(d: Duration) -> f64 {
    d.as_secs_f64() * 1e3
}

fn bench(
    out: &mut impl Write,
    params: &KNomialParams,
    n: usize,
    repetitions: usize,
) -> Result<u8, Failure> {
    writeln!(
        out,
        "order k = {}, line {n}, {repetitions} repetition(s)",
        params.k()
    )?;
    writeln!(
        out,
        "{:<5} {:>14} {:>14} {:>9}",
        "run", "window_ms", "oracle_ms", "speedup"
    )?;
    let mut agree = true;
    for run in 1..=repetitions {
        let start = Instant::now();
        let row = Row::generate(params, n);
        let window = start.elapsed();

        let start = Instant::now();
        let expanded = expand_power(params, n);
        let oracle = start.elapsed();

        let equal = row.len() == expanded.coefficients().len()
            && row
                .coefficients()
                .iter()
                .zip(expanded.coefficients())
                .all(|(a, b)| &BigInt::from(a.clone()) == b);
        agree &= equal;

        let speedup = oracle.as_secs_f64() / window.as_secs_f64().max(f64::MIN_POSITIVE);
        writeln!(
            out,
            "{run:<5} {:>14.3} {:>14.3} {:>8.1}x",
            millis(window),
            millis(oracle),
            speedup
        )?;
    }
    if agree {
        writeln!(out, "results equal")?;
        Ok(EXIT_SUCCESS)
    } else {
        writeln!(out, "results DIFFER")?;
        Ok(EXIT_FAILURE)
    }
}
