//! qcdist — evaluate the distortion functions, verify the inequality
//! suites, and emit bound tables.
//!
//! Exit codes: 0 all checks pass, 1 at least one asserted check failed,
//! 2 usage or domain error.

// domain checks are written as !(x > 0.0) on purpose: the negated form
// rejects NaN, which x <= 0.0 would let through
#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod output;
mod tables;

use clap::{Args, Parser, Subcommand, ValueEnum};
use output::{fmt_sig, write_rows, OutputFormat};
use qcdist::bounds::{
    euclidean_displacement_bound, hyperbolic_displacement_bound, image_radius_bound, krzyz_c1,
    DilatationK,
};
use qcdist::capacity::{eta_kn, gamma_2, tau_n, Dimension};
use qcdist::mn::{compute_m, iterate_a, p_func, q_func, verify_interval, MnParams};
use qcdist::suites::{run_all, run_suite, SuiteOptions};
use qcdist::{
    hyperbolic_distance, mu_inv, phi_k, BallPoint, CheckReport, Error, GridSpec, ModulusValue,
    RadialStretching, Spacing, UnitRadius,
};
use std::io::Write;
use std::process::ExitCode;

const EXIT_CHECK_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(
    name = "qcdist",
    about = "Distortion bounds for quasiconformal maps of the unit ball with identity boundary values",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one function of the registry at given arguments
    ///
    /// Registry: mu r | mu_inv y | phi_K K r | gamma_2 s | tau_n n t |
    /// eta_Kn K n t | c1 K | main_bound K n | mycor K n | image_bound K x |
    /// delta K n | rho x1,..,xn y1,..,yn
    Eval {
        /// Function name (aliases: phi = phi_K, gamma2 = gamma_2,
        /// tau = tau_n, eta = eta_Kn)
        function: String,
        /// Positional arguments of the function
        args: Vec<String>,
    },
    /// Run the verification suites and stream one check report per line
    Verify {
        /// Restrict to one suite (default: all)
        #[arg(long)]
        suite: Option<String>,
        /// Grid density multiplier for the sweeps
        #[arg(long, default_value_t = 1.0)]
        scale: f64,
        /// Seed of the sampled checks
        #[arg(long, default_value_t = 0x51_EED)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
    },
    /// Emit a bound table over a parameter grid (csv or line-json)
    Table(TableArgs),
    /// Solve the p/q fixed-point problem and print the iteration summary
    MnLemma {
        #[arg(long, default_value_t = 3.0)]
        m: f64,
        #[arg(long, default_value_t = 2.0)]
        n: f64,
        #[arg(long, default_value_t = 10_000)]
        max_steps: usize,
        #[arg(long, default_value_t = 1e-13)]
        tol: f64,
    },
    /// Scan the averaging comparison for phi_K; asserts only the proven
    /// t = 1 slice, interior margins are recorded
    ScanConjecture {
        /// K grid as start:stop:count
        #[arg(long, default_value = "1:3:5")]
        k: String,
        /// t grid as start:stop:count, inside (0,1)
        #[arg(long, default_value = "0.1:0.9:5")]
        t: String,
        /// r grid as start:stop:count, inside (0,1)
        #[arg(long, default_value = "0.1:0.9:5")]
        r: String,
        #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
        format: OutputFormat,
        /// Write rows to this file instead of stdout
        #[arg(long)]
        out: Option<std::path::PathBuf>,
    },
}

#[derive(Args)]
struct TableArgs {
    /// Which table: c1 | bounds | mn-lemma
    which: String,
    /// K grid as start:stop:count
    #[arg(long)]
    k: Option<String>,
    /// Grid spacing
    #[arg(long, value_enum, default_value_t = GridKind::Linear)]
    grid: GridKind,
    /// First p/q parameter (mn-lemma table)
    #[arg(long)]
    m: Option<f64>,
    /// Second p/q parameter (mn-lemma table); dimension for `bounds`
    #[arg(long)]
    n: Option<f64>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
    format: OutputFormat,
    /// Write rows to this file instead of stdout
    #[arg(long)]
    out: Option<std::path::PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum GridKind {
    Linear,
    Log,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("qcdist: {err}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Eval { function, args } => cmd_eval(&function, &args),
        Command::Verify {
            suite,
            scale,
            seed,
            format,
        } => cmd_verify(suite.as_deref(), scale, seed, format),
        Command::Table(args) => cmd_table(args),
        Command::MnLemma {
            m,
            n,
            max_steps,
            tol,
        } => cmd_mn_lemma(m, n, max_steps, tol),
        Command::ScanConjecture {
            k,
            t,
            r,
            format,
            out,
        } => cmd_scan(&k, &t, &r, format, out.as_deref()),
    }
}

fn parse_f64(s: &str, what: &str) -> Result<f64, Error> {
    s.parse::<f64>()
        .map_err(|_| Error::usage(format!("{what}: expected a number, got '{s}'")))
}

fn parse_point(s: &str) -> Result<BallPoint, Error> {
    let coords = s
        .split(',')
        .map(|c| parse_f64(c.trim(), "point coordinate"))
        .collect::<Result<Vec<_>, _>>()?;
    BallPoint::new(coords)
}

fn parse_dimension(s: &str) -> Result<Dimension, Error> {
    let n = s
        .parse::<u32>()
        .map_err(|_| Error::usage(format!("dimension: expected an integer >= 2, got '{s}'")))?;
    Dimension::new(n)
}

/// Parses "start:stop:count" into a grid.
fn parse_grid(spec: &str, name: &str, spacing: Spacing) -> Result<GridSpec, Error> {
    let parts: Vec<&str> = spec.split(':').collect();
    if parts.len() != 3 {
        return Err(Error::usage(format!(
            "{name} grid: expected start:stop:count, got '{spec}'"
        )));
    }
    let start = parse_f64(parts[0], "grid start")?;
    let stop = parse_f64(parts[1], "grid stop")?;
    let count = parts[2].parse::<usize>().map_err(|_| {
        Error::usage(format!(
            "grid count: expected an integer, got '{}'",
            parts[2]
        ))
    })?;
    GridSpec::new(name, start, stop, count, spacing)
}

fn expect_args(args: &[String], n: usize, usage: &str) -> Result<(), Error> {
    if args.len() != n {
        return Err(Error::usage(format!(
            "expected {n} argument(s): {usage}; got {}",
            args.len()
        )));
    }
    Ok(())
}

fn cmd_eval(function: &str, args: &[String]) -> Result<ExitCode, Error> {
    let out = match function {
        "mu" => {
            expect_args(args, 1, "mu r")?;
            let r = UnitRadius::new(parse_f64(&args[0], "r")?)?;
            fmt_sig(qcdist::mu(r).value(), 12)
        }
        "mu_inv" => {
            expect_args(args, 1, "mu_inv y")?;
            let y = ModulusValue::new(parse_f64(&args[0], "y")?)?;
            fmt_sig(mu_inv(y).value(), 12)
        }
        "phi_K" | "phi" => {
            expect_args(args, 2, "phi_K K r")?;
            let k = parse_f64(&args[0], "K")?;
            let r = parse_f64(&args[1], "r")?;
            fmt_sig(phi_k(k, r)?, 12)
        }
        "gamma_2" | "gamma2" => {
            expect_args(args, 1, "gamma_2 s")?;
            fmt_sig(gamma_2(parse_f64(&args[0], "s")?)?, 12)
        }
        "tau_n" | "tau" => {
            expect_args(args, 2, "tau_n n t")?;
            let n = parse_dimension(&args[0])?;
            let t = parse_f64(&args[1], "t")?;
            output::fmt_enclosure(&tau_n(n, t)?, 12)
        }
        "eta_Kn" | "eta" => {
            expect_args(args, 3, "eta_Kn K n t")?;
            let k = parse_f64(&args[0], "K")?;
            let n = parse_dimension(&args[1])?;
            let t = parse_f64(&args[2], "t")?;
            output::fmt_enclosure(&eta_kn(k, n, t)?, 12)
        }
        "c1" => {
            expect_args(args, 1, "c1 K")?;
            let k = DilatationK::new(parse_f64(&args[0], "K")?)?;
            fmt_sig(krzyz_c1(k), 12)
        }
        "main_bound" => {
            expect_args(args, 2, "main_bound K n")?;
            let k = DilatationK::new(parse_f64(&args[0], "K")?)?;
            let n = parse_dimension(&args[1])?;
            output::fmt_enclosure(&hyperbolic_displacement_bound(k, n), 12)
        }
        "mycor" => {
            expect_args(args, 2, "mycor K n")?;
            let k = DilatationK::new(parse_f64(&args[0], "K")?)?;
            let n = parse_dimension(&args[1])?;
            let b = euclidean_displacement_bound(k, n)?;
            format!(
                "{} ({}; chain 2tanh(main/4) = {})",
                fmt_sig(b.value, 12),
                b.validity,
                fmt_sig(b.chain_tanh, 12)
            )
        }
        "image_bound" => {
            expect_args(args, 2, "image_bound K x_norm")?;
            let k = DilatationK::new(parse_f64(&args[0], "K")?)?;
            fmt_sig(image_radius_bound(k, parse_f64(&args[1], "x_norm")?)?, 12)
        }
        "delta" => {
            expect_args(args, 2, "delta K n")?;
            let n = parse_dimension(&args[1])?;
            let f = RadialStretching::from_dilatation(n, parse_f64(&args[0], "K")?)?;
            fmt_sig(f.delta(), 12)
        }
        "rho" => {
            expect_args(args, 2, "rho x1,..,xn y1,..,yn")?;
            let x = parse_point(&args[0])?;
            let y = parse_point(&args[1])?;
            fmt_sig(hyperbolic_distance(&x, &y)?, 12)
        }
        other => {
            return Err(Error::usage(format!(
                "unknown function '{other}'; registry: mu, mu_inv, phi_K, gamma_2, tau_n, \
                 eta_Kn, c1, main_bound, mycor, image_bound, delta, rho"
            )))
        }
    };
    println!("{out}");
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(
    suite: Option<&str>,
    scale: f64,
    seed: u64,
    format: ReportFormat,
) -> Result<ExitCode, Error> {
    if !(scale > 0.0) {
        return Err(Error::usage(format!(
            "--scale must be positive, got {scale}"
        )));
    }
    let opts = SuiteOptions {
        grid_scale: scale,
        seed,
    };
    let named: Vec<(String, Vec<CheckReport>)> = match suite {
        Some(name) => vec![(name.to_string(), run_suite(name, &opts)?)],
        None => run_all(&opts),
    };
    let stdout = std::io::stdout();
    let mut w = stdout.lock();
    let mut failures = 0usize;
    let mut total = 0usize;
    for (name, reports) in &named {
        for r in reports {
            total += 1;
            if r.is_failure() {
                failures += 1;
            }
            match format {
                ReportFormat::Json => {
                    let line = serde_json::to_string(r).expect("reports serialize");
                    writeln!(w, "{line}").expect("stdout writable");
                }
                ReportFormat::Text => {
                    let tag = match r.pass {
                        Some(true) => "PASS",
                        Some(false) => "FAIL",
                        None => "info",
                    };
                    writeln!(
                        w,
                        "[{tag}] {name}/{id} margin={m} {note}",
                        id = r.check_id,
                        m = fmt_sig(r.margin, 6),
                        note = r.validity_note
                    )
                    .expect("stdout writable");
                }
            }
        }
    }
    if matches!(format, ReportFormat::Text) {
        writeln!(w, "{} checks, {} failures", total, failures).expect("stdout writable");
    }
    Ok(if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_CHECK_FAILED)
    })
}

fn cmd_table(args: TableArgs) -> Result<ExitCode, Error> {
    let spacing = match args.grid {
        GridKind::Linear => Spacing::Linear,
        GridKind::Log => Spacing::Log,
    };
    let (header, rows) = match args.which.as_str() {
        "c1" => {
            let grid = parse_grid(args.k.as_deref().unwrap_or("1.01:5:50"), "K", spacing)?;
            tables::c1_table(&grid)
        }
        "bounds" => {
            let grid = parse_grid(args.k.as_deref().unwrap_or("1:17:33"), "K", spacing)?;
            let dim = Dimension::new(args.n.map(|n| n as u32).unwrap_or(2))?;
            tables::bounds_table(&grid, dim)?
        }
        "mn-lemma" => {
            let params = MnParams::new(args.m.unwrap_or(3.0), args.n.unwrap_or(2.0))?;
            tables::mn_table(params)?
        }
        other => {
            return Err(Error::usage(format!(
                "unknown table '{other}'; available: c1, bounds, mn-lemma"
            )))
        }
    };
    write_rows(&header, &rows, args.format, args.out.as_deref())?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_mn_lemma(m: f64, n: f64, max_steps: usize, tol: f64) -> Result<ExitCode, Error> {
    let params = MnParams::new(m, n)?;
    let threshold = compute_m(params);
    let trace = iterate_a(params, max_steps, tol)?;
    println!("M({m}, {n})      = {}", fmt_sig(threshold, 15));
    println!(
        "upper cap       = {}  (2^(2m/n) e^2)",
        fmt_sig(trace.upper_cap, 15)
    );
    println!("steps           = {}", trace.sequence.len() - 1);
    println!("converged       = {}", trace.converged);
    if let Some(a36) = trace.step(36) {
        println!(
            "a_36            = {}  (> 17: {})",
            fmt_sig(a36, 15),
            a36 > 17.0
        );
    }
    println!("limit estimate  = {}", fmt_sig(trace.limit_estimate, 15));
    let resid =
        (p_func(params, trace.limit_estimate)? - q_func(params, trace.limit_estimate)?).abs();
    println!("|p(a) - q(a)|   = {}", fmt_sig(resid, 6));
    let rep = verify_interval(params, trace.limit_estimate, 2_000)?;
    println!(
        "p <= q on [1,a] = {} (worst margin {})",
        rep.pass == Some(true),
        fmt_sig(rep.margin, 6)
    );
    Ok(if rep.pass == Some(true) && trace.converged {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_CHECK_FAILED)
    })
}

fn cmd_scan(
    k_spec: &str,
    t_spec: &str,
    r_spec: &str,
    format: OutputFormat,
    out: Option<&std::path::Path>,
) -> Result<ExitCode, Error> {
    let k_grid = parse_grid(k_spec, "K", Spacing::Linear)?.points();
    let t_grid = parse_grid(t_spec, "t", Spacing::Linear)?.points();
    let r_grid = parse_grid(r_spec, "r", Spacing::Linear)?.points();
    let reports = qcdist::bounds::averaging_conjecture_scan(&k_grid, &t_grid, &r_grid)?;

    let header = vec![
        "check".to_string(),
        "K".to_string(),
        "t".to_string(),
        "r".to_string(),
        "lhs".to_string(),
        "rhs".to_string(),
        "margin".to_string(),
        "asserted".to_string(),
    ];
    let rows: Vec<Vec<output::Cell>> = reports
        .iter()
        .map(|r| {
            vec![
                output::Cell::Text(r.check_id.clone()),
                output::Cell::Num(r.params.get("K").copied().unwrap_or(f64::NAN)),
                output::Cell::Num(r.params.get("t").copied().unwrap_or(1.0)),
                output::Cell::Num(r.params.get("r").copied().unwrap_or(f64::NAN)),
                output::Cell::Num(r.lhs),
                output::Cell::Num(r.rhs),
                output::Cell::Num(r.margin),
                output::Cell::Text(
                    match r.pass {
                        Some(_) => "yes",
                        None => "no",
                    }
                    .to_string(),
                ),
            ]
        })
        .collect();
    write_rows(&header, &rows, format, out)?;

    let min_margin = reports
        .iter()
        .map(|r| r.margin)
        .fold(f64::INFINITY, f64::min);
    let failures = reports.iter().filter(|r| r.is_failure()).count();
    println!(
        "# min_margin={} checks={}",
        fmt_sig(min_margin, 6),
        reports.len()
    );
    Ok(if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_CHECK_FAILED)
    })
}
