//! Command-line front end: single-point evaluation, figure-grade sweeps to
//! CSV and SVG, and the validation suite runner.
//!
//! Exit codes: 0 success, 1 validation or runtime failure, 2 usage error.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use qdiscord::channels::{evolved_at, p_of_t, ChannelKind};
use qdiscord::config::{
    load_config_file, parse_angle, parse_angle_list, parse_channel_list, parse_gamma_grid,
    parse_measure_list, parse_n_list, SweepOverrides,
};
use qdiscord::oracle::GridSpec;
use qdiscord::sweep::{format_float, run_sweep, write_csv, Measure, SweepRow, SweepSpec};
use qdiscord::twisting::{expectations, twisted_state, TwistingParams};
use qdiscord::validate;
use qdiscord::TwoQubitXState;

const DEFAULT_FIXTURES: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/golden.txt");

#[derive(Parser)]
#[command(
    name = "qdiscord",
    version,
    about = "Pairwise quantum discord of one-axis-twisting states under local noise"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate all correlation measures at one parameter point.
    Point(PointArgs),
    /// Sweep a (channel, n, theta, gamma_t) grid into a CSV file.
    Sweep(SweepArgs),
    /// Run the cross-validation suite against the golden fixtures.
    Validate(ValidateArgs),
}

#[derive(Args)]
struct PointArgs {
    /// Number of spin particles (N >= 2).
    #[arg(long)]
    n: u32,
    /// Twisting angle; accepts radians or multiples of pi, e.g. 0.1pi.
    #[arg(long)]
    theta: String,
    /// Noise channel to apply (phase-flip, amplitude-damping, phase-damping,
    /// depolarizing). Without it the unperturbed state is reported.
    #[arg(long, requires = "gamma_t")]
    channel: Option<ChannelKind>,
    /// Dimensionless decay time; requires --channel.
    #[arg(long = "gamma-t", requires = "channel")]
    gamma_t: Option<f64>,
}

#[derive(Args)]
struct SweepArgs {
    /// Output CSV path.
    #[arg(long)]
    out: PathBuf,
    /// Channels, comma separated or `all`.
    #[arg(long)]
    channel: Option<String>,
    /// Particle counts: comma list or start:stop:points.
    #[arg(long)]
    n: Option<String>,
    /// Twisting angles: comma list or start:stop:points, pi suffix allowed.
    #[arg(long)]
    theta: Option<String>,
    /// gamma_t grid as start:stop:points.
    #[arg(long = "gamma-t")]
    gamma_t: Option<String>,
    /// Measures to plot: comma list of qd, gmqd, classical, mutual_info.
    #[arg(long)]
    measures: Option<String>,
    /// Config file with key = value lines (flags take precedence).
    #[arg(long)]
    config: Option<PathBuf>,
    /// Additionally write one SVG line plot per (channel, n, theta) slice.
    #[arg(long)]
    svg: bool,
}

#[derive(Args)]
struct ValidateArgs {
    /// Rewrite the fixtures file instead of checking against it.
    #[arg(long)]
    regenerate: bool,
    /// Fixtures file location.
    #[arg(long, default_value = DEFAULT_FIXTURES)]
    fixtures: PathBuf,
    /// Brute-force grid as coarse[:rounds[:shrink]].
    #[arg(long)]
    grid: Option<String>,
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Point(args) => cmd_point(args),
        Command::Sweep(args) => cmd_sweep(args),
        Command::Validate(args) => cmd_validate(args),
    }
}

fn usage_error(message: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(2)
}

fn runtime_error(message: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(1)
}

fn cmd_point(args: PointArgs) -> ExitCode {
    let theta = match parse_angle(&args.theta) {
        Ok(theta) => theta,
        Err(err) => return usage_error(err),
    };
    let params = match TwistingParams::new(args.n, theta) {
        Ok(params) => params,
        Err(err) => return usage_error(err),
    };

    let state: TwoQubitXState = match args.channel {
        None => match twisted_state(params) {
            Ok(state) => state,
            Err(err) => return runtime_error(err),
        },
        Some(kind) => {
            let gamma_t = args.gamma_t.expect("clap enforces the pairing");
            match evolved_at(kind, &expectations(params), gamma_t) {
                Ok(state) => state,
                Err(err) => return usage_error(err),
            }
        }
    };

    match args.channel {
        Some(kind) => {
            let gamma_t = args.gamma_t.unwrap();
            println!("channel         = {kind}");
            println!("gamma_t         = {}", format_float(gamma_t));
            println!(
                "p               = {}",
                format_float(p_of_t(gamma_t).expect("validated above"))
            );
        }
        None => println!("channel         = none"),
    }
    println!("n               = {}", params.n());
    println!(
        "theta           = {} rad ({:.6} pi)",
        format_float(params.theta()),
        params.theta() / std::f64::consts::PI
    );
    println!("d1              = {}", format_float(state.d1()));
    println!("d2              = {}", format_float(state.d2()));
    println!("d3              = {}", format_float(state.d3()));
    println!("d4              = {}", format_float(state.d4()));
    println!("a_re            = {}", format_float(state.a().re));
    println!("a_im            = {}", format_float(state.a().im));
    println!("b_re            = {}", format_float(state.b().re));
    println!("b_im            = {}", format_float(state.b().im));
    let report = state.quantum_discord();
    println!("qd              = {}", format_float(report.qd));
    println!("gmqd_normalized = {}", format_float(report.gmqd_normalized));
    println!("classical       = {}", format_float(report.classical));
    println!("mutual_info     = {}", format_float(report.mutual_info));
    println!("q1              = {}", format_float(report.q1));
    println!("q2              = {}", format_float(report.q2));
    ExitCode::SUCCESS
}

fn collect_overrides(args: &SweepArgs) -> Result<SweepOverrides, String> {
    let mut overrides = SweepOverrides::default();
    if let Some(text) = &args.channel {
        overrides.channels = Some(parse_channel_list(text)?);
    }
    if let Some(text) = &args.n {
        overrides.n_values = Some(parse_n_list(text)?);
    }
    if let Some(text) = &args.theta {
        overrides.theta_values = Some(parse_angle_list(text)?);
    }
    if let Some(text) = &args.gamma_t {
        overrides.gamma_t = Some(parse_gamma_grid(text)?);
    }
    if let Some(text) = &args.measures {
        overrides.measures = Some(parse_measure_list(text)?);
    }
    Ok(overrides)
}

fn cmd_sweep(args: SweepArgs) -> ExitCode {
    // Precedence: built-in Figure-1 defaults, then config file, then flags.
    let mut spec = SweepSpec::figure1();
    if let Some(path) = &args.config {
        match load_config_file(path) {
            Ok(overrides) => overrides.apply(&mut spec),
            Err(err) => return usage_error(err),
        }
    }
    match collect_overrides(&args) {
        Ok(overrides) => overrides.apply(&mut spec),
        Err(err) => return usage_error(err),
    }
    if let Err(err) = spec.validate() {
        return usage_error(err);
    }

    let rows = match run_sweep(&spec) {
        Ok(rows) => rows,
        Err(err) => return runtime_error(err),
    };

    let mut buffer = Vec::new();
    if let Err(err) = write_csv(&mut buffer, &rows) {
        return runtime_error(format!("serializing CSV: {err}"));
    }
    if let Err(err) = std::fs::write(&args.out, &buffer) {
        return runtime_error(format!("writing {}: {err}", args.out.display()));
    }
    println!("wrote {} rows to {}", rows.len(), args.out.display());

    if args.svg {
        match write_svg_slices(&args.out, &rows, &spec.measures) {
            Ok(count) => println!("wrote {count} SVG plots"),
            Err(err) => return runtime_error(err),
        }
    }
    ExitCode::SUCCESS
}

const MEASURE_COLORS: [(Measure, &str); 4] = [
    (Measure::Qd, "#1f77b4"),
    (Measure::GmqdNormalized, "#d62728"),
    (Measure::Classical, "#2ca02c"),
    (Measure::MutualInfo, "#9467bd"),
];

fn write_svg_slices(out: &Path, rows: &[SweepRow], measures: &[Measure]) -> Result<usize, String> {
    let stem = out
        .file_stem()
        .and_then(|s| s.to_str())
        .unwrap_or("sweep")
        .to_string();
    let dir = out.parent().unwrap_or_else(|| Path::new("."));

    let mut slices: Vec<(ChannelKind, u32, u64)> = rows
        .iter()
        .map(|r| (r.channel, r.n, r.theta.to_bits()))
        .collect();
    slices.dedup();

    let mut count = 0;
    for (channel, n, theta_bits) in slices {
        let theta = f64::from_bits(theta_bits);
        let slice: Vec<&SweepRow> = rows
            .iter()
            .filter(|r| r.channel == channel && r.n == n && r.theta.to_bits() == theta_bits)
            .collect();
        let series: Vec<qdiscord::svg::Series> = MEASURE_COLORS
            .iter()
            .filter(|(m, _)| measures.contains(m))
            .map(|&(measure, color)| qdiscord::svg::Series {
                label: measure.name(),
                color,
                points: slice
                    .iter()
                    .map(|r| (r.gamma_t, measure.of_row(r)))
                    .collect(),
            })
            .collect();
        let theta_pi = theta / std::f64::consts::PI;
        let title = format!("{channel}, N = {n}, theta = {theta_pi:.6} pi");
        let y_label = if series.len() == 1 {
            series[0].label.to_string()
        } else {
            "measure value".to_string()
        };
        let svg = qdiscord::svg::render_plot(&title, "gamma_t", &y_label, &series);
        let name = format!("{stem}_{channel}_n{n}_theta{theta_pi:.6}pi.svg");
        let path = dir.join(name);
        std::fs::write(&path, svg).map_err(|err| format!("writing {}: {err}", path.display()))?;
        count += 1;
    }
    Ok(count)
}

fn parse_grid_spec(text: &str) -> Result<GridSpec, String> {
    let mut grid = GridSpec::default();
    let parts: Vec<&str> = text.split(':').collect();
    if parts.is_empty() || parts.len() > 3 {
        return Err(format!("grid '{text}' must be coarse[:rounds[:shrink]]"));
    }
    grid.coarse_points = parts[0]
        .trim()
        .parse()
        .map_err(|_| format!("cannot parse coarse point count '{}'", parts[0]))?;
    if let Some(rounds) = parts.get(1) {
        grid.refine_rounds = rounds
            .trim()
            .parse()
            .map_err(|_| format!("cannot parse refine rounds '{rounds}'"))?;
    }
    if let Some(shrink) = parts.get(2) {
        grid.refine_shrink = shrink
            .trim()
            .parse()
            .map_err(|_| format!("cannot parse shrink factor '{shrink}'"))?;
    }
    grid.validate().map_err(|err| err.to_string())?;
    Ok(grid)
}

fn cmd_validate(args: ValidateArgs) -> ExitCode {
    let grid = match args.grid.as_deref().map(parse_grid_spec).transpose() {
        Ok(grid) => grid.unwrap_or_default(),
        Err(err) => return usage_error(err),
    };

    if args.regenerate {
        return match validate::write_fixtures(&args.fixtures, &grid) {
            Ok(Ok(())) => {
                println!("regenerated fixtures at {}", args.fixtures.display());
                ExitCode::SUCCESS
            }
            Ok(Err(err)) => runtime_error(format!("writing {}: {err}", args.fixtures.display())),
            Err(err) => runtime_error(err),
        };
    }

    let reports = match validate::run_all(Some(&args.fixtures), &grid) {
        Ok(reports) => reports,
        Err(err) => return runtime_error(err),
    };
    let mut all_passed = true;
    for report in &reports {
        let verdict = if report.passed { "PASS" } else { "FAIL" };
        println!("{verdict} {} — {}", report.name, report.detail);
        all_passed &= report.passed;
    }
    if all_passed {
        println!("all {} checks passed", reports.len());
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
