//! `buchsbaum` — decide, construct, and verify h-vectors of
//! two-dimensional Buchsbaum simplicial complexes.
//!
//! Exit codes: 0 success, 1 semantic failure (not realizable, or a scan
//! found a violation), 2 input error. Reports go to stdout as JSON by
//! default (`--format text` for the line format); diagnostics go to
//! stderr.

use buchsbaum_cli::formats::{atomic_write, read_complex, write_complex};
use buchsbaum_cli::report::{
    census_dto, macaulay_dto, render_census_csv, render_census_text, render_certificate_text,
    render_check_text, render_macaulay_text, render_sweep_text, render_threshold_scan_text,
    threshold_scan_dto, CensusDto, CertificateDto, CheckReportDto, FieldChoice, MacaulayDto,
    SweepDto, ThresholdScanDto,
};
use buchsbaum_cli::run::{parallel_census, run_sweep};
use buchsbaum_cli::{parse_hvector, CliError};
use buchsbaum_core::hvec::{macaulay_power, macaulay_rep};
use buchsbaum_core::oracle::{betti_profile_scan, ScanOptions};
use buchsbaum_core::properties::analyze;
use buchsbaum_core::realizer::{realize, realize_split};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use std::path::{Path, PathBuf};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FieldArg {
    Rationals,
    Gf2,
    Both,
}

impl From<FieldArg> for FieldChoice {
    fn from(f: FieldArg) -> Self {
        match f {
            FieldArg::Rationals => FieldChoice::Rationals,
            FieldArg::Gf2 => FieldChoice::Gf2,
            FieldArg::Both => FieldChoice::Both,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SweepMode {
    Connected,
    Arbitrary,
    Both,
}

/// Decide, construct, and verify h-vectors of two-dimensional Buchsbaum
/// simplicial complexes. All arithmetic is exact.
#[derive(Debug, Parser)]
#[command(name = "buchsbaum", version, max_term_width = 100)]
struct Cli {
    /// Report format on stdout.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Analyze a complex file: f/h-vectors, exact Betti numbers over Q
    /// and GF(2), and every structural predicate.
    ///
    /// The file is JSON ({"n": .., "facets": [[..], ..]}) or plain text
    /// (one facet per line, `#` comments); the format is sniffed from
    /// the content. Exits 0 whenever the file parses, 2 otherwise.
    Check {
        file: PathBuf,
        /// Restrict the text rendering to one coefficient field
        /// (JSON always carries both).
        #[arg(long, value_enum, default_value_t = FieldArg::Both)]
        field: FieldArg,
    },
    /// Decide whether an h-vector is realizable and construct a witness
    /// complex with a step-by-step certificate.
    ///
    /// Exits 0 with the certificate on stdout when realizable, 1 with
    /// the failing condition on stderr otherwise.
    Realize {
        /// Target as four comma-separated integers, e.g. 1,5,14,-4.
        h: String,
        /// Require a connected witness.
        #[arg(long)]
        connected: bool,
        /// Use exactly this many disjoint triangle components instead
        /// of the minimum.
        #[arg(long, conflicts_with = "connected")]
        k: Option<i64>,
        /// Write the witness complex here (`.json` extension selects
        /// JSON, anything else the text format).
        #[arg(short, long)]
        out: Option<PathBuf>,
        /// Write the certificate JSON here.
        #[arg(long)]
        certificate: Option<PathBuf>,
    },
    /// Macaulay binomial representation of a for index d, and the
    /// shifted value a^<d>.
    Macaulay { a: i64, d: u32 },
    /// Exhaustively classify every pure 2-dimensional complex on n
    /// vertices (3 <= n <= 6) and count violations of the necessary
    /// conditions (there must be none; exits 1 otherwise).
    ///
    /// BUCHSBAUM_WORKERS sets the number of worker threads (default 1).
    Census {
        n: u32,
        /// Write the census here (`.json` extension selects JSON,
        /// anything else CSV with the fixed header).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also compare the fast Buchsbaum test against the homological
        /// definition over both fields on every complex (slow).
        #[arg(long)]
        verify_definitional: bool,
        /// Restrict the text rendering to one coefficient field.
        #[arg(long, value_enum, default_value_t = FieldArg::Both)]
        field: FieldArg,
    },
    /// Scan all 13-triangle complexes on 6 vertices with complete edge
    /// skeleton (h = (1,3,6,3), the Cohen-Macaulay face-count
    /// threshold) and tabulate the Betti profiles of the Buchsbaum
    /// ones. Exits 1 if any has b1 != 0.
    ThresholdScan,
    /// Realize every feasible h-vector with h1 <= the bound and verify
    /// all certificates (exits 1 on any failure).
    Sweep {
        #[arg(long, default_value_t = 6)]
        h1_max: i64,
        #[arg(long, value_enum, default_value_t = SweepMode::Both)]
        mode: SweepMode,
    },
}

fn main() {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(code) => std::process::exit(code),
        Err(err) => {
            eprintln!("error: {err}");
            std::process::exit(err.exit_code());
        }
    }
}

fn emit<T: Serialize>(format: Format, dto: &T, render: impl Fn(&T) -> String) {
    match format {
        Format::Json => {
            println!(
                "{}",
                serde_json::to_string_pretty(dto).expect("report serialization")
            );
        }
        Format::Text => print!("{}", render(dto)),
    }
}

fn worker_count() -> Result<u64, CliError> {
    match std::env::var("BUCHSBAUM_WORKERS") {
        Err(std::env::VarError::NotPresent) => Ok(1),
        Err(e) => Err(CliError::Input(format!("BUCHSBAUM_WORKERS: {e}"))),
        Ok(s) => s
            .trim()
            .parse::<u64>()
            .ok()
            .filter(|&w| w >= 1)
            .ok_or_else(|| {
                CliError::Input(format!(
                    "BUCHSBAUM_WORKERS must be a positive integer, got {s:?}"
                ))
            }),
    }
}

fn write_report_json<T: Serialize>(path: &Path, dto: &T) -> Result<(), CliError> {
    let mut bytes = serde_json::to_vec_pretty(dto).expect("report serialization");
    bytes.push(b'\n');
    Ok(atomic_write(path, &bytes)?)
}

fn dispatch(cli: Cli) -> Result<i32, CliError> {
    match cli.command {
        Command::Check { file, field } => {
            let complex = read_complex(&file)?;
            let dto: CheckReportDto = (&analyze(&complex)).into();
            let choice: FieldChoice = field.into();
            emit(cli.format, &dto, |d| render_check_text(d, choice));
            Ok(0)
        }
        Command::Realize {
            h,
            connected,
            k,
            out,
            certificate,
        } => {
            let target = parse_hvector(&h)?;
            let cert = match k {
                Some(k) if k < 0 => {
                    return Err(CliError::Input(format!(
                        "--k must be nonnegative, got {k}"
                    )))
                }
                Some(k) => realize_split(&target, k)?,
                None => realize(&target, connected)?,
            };
            let dto: CertificateDto = (&cert).into();
            if let Some(path) = &out {
                write_complex(path, &cert.complex)?;
            }
            if let Some(path) = &certificate {
                write_report_json(path, &dto)?;
            }
            emit(cli.format, &dto, render_certificate_text);
            Ok(0)
        }
        Command::Macaulay { a, d } => {
            let rep = macaulay_rep(a, d)?;
            let power = macaulay_power(a, d)?;
            let dto: MacaulayDto = macaulay_dto(a, d, &rep, power);
            emit(cli.format, &dto, render_macaulay_text);
            Ok(0)
        }
        Command::Census {
            n,
            out,
            verify_definitional,
            field,
        } => {
            let workers = worker_count()?;
            let opts = ScanOptions {
                verify_definitional,
            };
            let census = parallel_census(n, workers, &opts)?;
            let dto: CensusDto = census_dto(&census, workers);
            if let Some(path) = &out {
                if path.extension().is_some_and(|e| e == "json") {
                    write_report_json(path, &dto)?;
                } else {
                    let bytes = render_census_csv(&dto)
                        .map_err(|e| CliError::Input(format!("csv: {e}")))?;
                    atomic_write(path, &bytes)?;
                }
            }
            let choice: FieldChoice = field.into();
            emit(cli.format, &dto, |d| render_census_text(d, choice));
            Ok(if dto.violations.all_zero { 0 } else { 1 })
        }
        Command::ThresholdScan => {
            let dto: ThresholdScanDto = threshold_scan_dto(&betti_profile_scan());
            emit(cli.format, &dto, render_threshold_scan_text);
            let clean = dto.nonzero_b1_q == 0
                && dto.nonzero_b1_gf2 == 0
                && dto.profile_1_4_q == 0
                && dto.profile_1_4_gf2 == 0;
            Ok(if clean { 0 } else { 1 })
        }
        Command::Sweep { h1_max, mode } => {
            if h1_max < 0 {
                return Err(CliError::Input(format!(
                    "--h1-max must be nonnegative, got {h1_max}"
                )));
            }
            let (connected, arbitrary) = match mode {
                SweepMode::Connected => (true, false),
                SweepMode::Arbitrary => (false, true),
                SweepMode::Both => (true, true),
            };
            let dto: SweepDto = run_sweep(h1_max, connected, arbitrary);
            emit(cli.format, &dto, render_sweep_text);
            Ok(if dto.all_verified { 0 } else { 1 })
        }
    }
}
