//! The `logimg` command-line interface.
//!
//! Exit codes: 0 success, 1 failed verification, 2 bad arguments,
//! 3 I/O or decode failure, 4 degenerate fit (zero mean norm or singular
//! system).

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand};
use serde::Serialize;

use crate::enhance::{apply_affine, enhance_auto, fit_params, AffineParams, Algorithm};
use crate::error::Error;
use crate::logspace::ColorVec;
use crate::raster::io::{load_image, save_image};
use crate::raster::stats::{channel_histograms, compute_stats};
use crate::raster::RasterImage;
use crate::verify::{self, VerifyConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_IO: i32 = 3;
pub const EXIT_DEGENERATE: i32 = 4;

#[derive(Parser)]
#[command(
    name = "logimg",
    version,
    about = "Colour image enhancement in a bounded logarithmic colour space"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enhance an image with fitted or manual affine parameters.
    Enhance(EnhanceArgs),
    /// Print channel statistics and both parameter fits as JSON.
    Stats(StatsArgs),
    /// Write per-channel histograms before and after enhancement as CSV.
    Report(ReportArgs),
    /// Run the built-in property and regression suite.
    Verify(VerifyArgs),
}

#[derive(Args)]
#[command(group(ArgGroup::new("mode").required(true).args(["algo", "alpha"])))]
struct EnhanceArgs {
    /// Parameter fit: A (constant translation) or B (translation
    /// proportional to the mean). Mutually exclusive with manual
    /// parameters.
    #[arg(long, conflicts_with_all = ["alpha", "beta", "k"])]
    algo: Option<Algorithm>,

    /// Manual scale factor (use together with --beta and --k).
    #[arg(long, requires = "beta", requires = "k")]
    alpha: Option<f64>,

    /// Manual translation factor.
    #[arg(long, requires = "alpha")]
    beta: Option<f64>,

    /// Manual translation direction: three comma-separated channel values
    /// in (-1, 1), e.g. "0.762,0.762,0.762".
    #[arg(long, value_parser = parse_color, requires = "alpha")]
    k: Option<ColorVec>,

    /// Input image (PNG or binary PPM).
    #[arg(long = "in")]
    input: PathBuf,

    /// Output image path (.png or .ppm).
    #[arg(long = "out")]
    output: PathBuf,

    /// Also write the JSON statistics report to this path, or "-" for
    /// stdout.
    #[arg(long)]
    json: Option<String>,
}

#[derive(Args)]
struct StatsArgs {
    /// Input image (PNG or binary PPM).
    #[arg(long = "in")]
    input: PathBuf,

    /// Write the JSON report to this path instead of stdout ("-" is
    /// stdout).
    #[arg(long)]
    json: Option<String>,
}

#[derive(Args)]
struct ReportArgs {
    /// Parameter fit used for the "after" histograms.
    #[arg(long)]
    algo: Algorithm,

    /// Input image (PNG or binary PPM).
    #[arg(long = "in")]
    input: PathBuf,

    /// Output CSV path.
    #[arg(long = "out")]
    output: PathBuf,
}

#[derive(Args)]
struct VerifyArgs {
    /// Random samples per property check.
    #[arg(long, default_value_t = verify::DEFAULT_SAMPLES)]
    samples: usize,

    /// Seed for the sample streams.
    #[arg(long, default_value_t = verify::DEFAULT_SEED)]
    seed: u64,

    /// Absolute tolerance for the property checks.
    #[arg(long, default_value_t = verify::DEFAULT_TOLERANCE)]
    tolerance: f64,
}

/// Statistics report emitted by `stats` and `enhance --json`. Field order
/// is the wire order.
#[derive(Serialize)]
pub struct StatsReport {
    pub v0: [f64; 3],
    pub v1: [f64; 3],
    pub v2: [f64; 3],
    pub alpha_a: Option<f64>,
    pub beta_a: Option<f64>,
    pub k_a: Option<[f64; 3]>,
    pub alpha_b: Option<f64>,
    pub beta_b: Option<f64>,
    pub k_b: Option<[f64; 3]>,
    pub width: u32,
    pub height: u32,
    pub lower_counts: [u64; 3],
    pub upper_counts: [u64; 3],
    pub error_a: Option<String>,
    pub error_b: Option<String>,
}

impl StatsReport {
    /// Compute statistics and both parameter fits for an image. Degenerate
    /// fits are reported as error strings, not failures.
    pub fn for_image(image: &RasterImage) -> StatsReport {
        let stats = compute_stats(image);
        let fit_a = fit_params(&stats, Algorithm::A);
        let fit_b = fit_params(&stats, Algorithm::B);
        let split = |fit: crate::error::Result<AffineParams>| match fit {
            Ok(p) => (Some(p.alpha), Some(p.beta), Some(p.k.values()), None),
            Err(e) => (None, None, None, Some(e.to_string())),
        };
        let (alpha_a, beta_a, k_a, error_a) = split(fit_a);
        let (alpha_b, beta_b, k_b, error_b) = split(fit_b);
        StatsReport {
            v0: stats.v0.values(),
            v1: stats.v1.values(),
            v2: stats.v2.values(),
            alpha_a,
            beta_a,
            k_a,
            alpha_b,
            beta_b,
            k_b,
            width: image.width(),
            height: image.height(),
            lower_counts: stats.lower_counts,
            upper_counts: stats.upper_counts,
            error_a,
            error_b,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

/// Parse the command line from the process environment and run it.
pub fn run() -> i32 {
    run_from(std::env::args_os())
}

/// Run with explicit arguments; returns the process exit code.
pub fn run_from<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            use clap::error::ErrorKind;
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let _ = err.print();
            return code;
        }
    };
    let result = match cli.command {
        Command::Enhance(args) => cmd_enhance(args),
        Command::Stats(args) => cmd_stats(args),
        Command::Report(args) => cmd_report(args),
        Command::Verify(args) => Ok(cmd_verify(args)),
    };
    match result {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            exit_code_for(&err)
        }
    }
}

fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::ZeroMeanNorm | Error::SingularSystem => EXIT_DEGENERATE,
        Error::NonFinite(_) | Error::InvalidStats => EXIT_USAGE,
        Error::Io(_)
        | Error::CorruptInput(_)
        | Error::UnsupportedFormat(_)
        | Error::EmptyImage
        | Error::PixelCount { .. }
        | Error::DimensionMismatch(..) => EXIT_IO,
    }
}

fn parse_color(s: &str) -> Result<ColorVec, String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 3 {
        return Err("expected three comma-separated values, e.g. 0.5,0.5,0.5".into());
    }
    let mut vals = [0.0f64; 3];
    for (v, p) in vals.iter_mut().zip(&parts) {
        *v = p
            .trim()
            .parse::<f64>()
            .map_err(|e| format!("bad channel value '{p}': {e}"))?;
        if !v.is_finite() || v.abs() >= 1.0 {
            return Err(format!("channel value {p} outside the open interval (-1, 1)"));
        }
    }
    ColorVec::from_values(vals[0], vals[1], vals[2]).map_err(|e| e.to_string())
}

fn cmd_enhance(args: EnhanceArgs) -> crate::error::Result<i32> {
    let input = load_image(&args.input)?;
    let output = match args.algo {
        Some(algorithm) => enhance_auto(&input, algorithm)?.image,
        None => {
            // clap guarantees alpha, beta and k arrive together.
            let params = AffineParams::new(
                args.alpha.expect("required by arg group"),
                args.beta.expect("required by clap"),
                args.k.expect("required by clap"),
            )?;
            apply_affine(&input, &params)
        }
    };
    save_image(&output, &args.output)?;
    if let Some(dest) = &args.json {
        write_json(dest, &StatsReport::for_image(&input))?;
    }
    Ok(EXIT_OK)
}

fn cmd_stats(args: StatsArgs) -> crate::error::Result<i32> {
    let input = load_image(&args.input)?;
    let report = StatsReport::for_image(&input);
    match &args.json {
        Some(dest) => write_json(dest, &report)?,
        None => print!("{}", report.to_json()),
    }
    Ok(EXIT_OK)
}

fn write_json(dest: &str, report: &StatsReport) -> crate::error::Result<()> {
    if dest == "-" {
        print!("{}", report.to_json());
    } else {
        fs::write(dest, report.to_json())?;
    }
    Ok(())
}

fn cmd_report(args: ReportArgs) -> crate::error::Result<i32> {
    let input = load_image(&args.input)?;
    let before = channel_histograms(&input);
    let after = channel_histograms(&enhance_auto(&input, args.algo)?.image);

    let mut csv = String::from("code,r_before,g_before,b_before,r_after,g_after,b_after\n");
    for code in 0..256 {
        csv.push_str(&format!(
            "{code},{},{},{},{},{},{}\n",
            before[0][code],
            before[1][code],
            before[2][code],
            after[0][code],
            after[1][code],
            after[2][code],
        ));
    }
    fs::write(&args.output, csv)?;
    Ok(EXIT_OK)
}

fn cmd_verify(args: VerifyArgs) -> i32 {
    let config = VerifyConfig {
        samples: args.samples,
        seed: args.seed,
        tolerance: args.tolerance,
    };
    let outcomes = verify::run_all(&config);

    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let _ = writeln!(
        out,
        "verify: samples={} seed={} tolerance={:.1e}",
        config.samples, config.seed, config.tolerance
    );
    let mut failed = 0usize;
    for o in &outcomes {
        let status = if o.passed { "PASS" } else { "FAIL" };
        if !o.passed {
            failed += 1;
        }
        let _ = writeln!(out, "{status}  {:<24} {}", o.name, o.detail);
    }
    let _ = writeln!(
        out,
        "{} of {} checks passed",
        outcomes.len() - failed,
        outcomes.len()
    );
    if failed == 0 {
        EXIT_OK
    } else {
        EXIT_VERIFY_FAILED
    }
}
