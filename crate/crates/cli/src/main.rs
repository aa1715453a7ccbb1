use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use spirallike::{CatalogParams, Orientation, Sign};
use spirallike_cli::commands::{self, DEFAULT_TRUNCATION};
use spirallike_cli::format::{parse_angle, parse_complex, parse_complex_list, parse_real_list};
use spirallike_cli::plot::{DEFAULT_RADII, DEFAULT_SAMPLES};
use spirallike_cli::{CliError, Output, PlotFormat, PlotSpec};

/// Coefficient and grid tests for harmonic spirallike maps.
#[derive(Parser)]
#[command(name = "spirallike", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run every applicable check on a map file and print a JSON report.
    Verify {
        file: PathBuf,
        /// r_min,r_max,n_r,n_theta
        #[arg(long, allow_hyphen_values = true)]
        grid: Option<String>,
        #[arg(long)]
        eps: Option<f64>,
        /// Evaluate both sides of the cleared inequality at re,im.
        #[arg(long, value_parser = parse_point, allow_hyphen_values = true)]
        probe: Option<Complex64>,
    },
    /// Print the weight table A_n, A_n/B, nB/A_n.
    Weights {
        #[arg(long, value_parser = angle, allow_hyphen_values = true)]
        lambda: f64,
        #[arg(long, default_value_t = 10)]
        n: usize,
    },
    /// Build maps from the constructions.
    #[command(subcommand)]
    Construct(Construct),
    /// Draw images of circles |z| = r.
    Plot {
        file: PathBuf,
        /// Comma separated, strictly increasing radii in (0, 1).
        #[arg(long)]
        radii: Option<String>,
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        /// CSV samples instead of SVG.
        #[arg(long)]
        csv: bool,
        #[arg(long, default_value_t = 800)]
        width: u32,
        #[arg(long, default_value_t = 800)]
        height: u32,
    },
    /// List or emit the named example maps.
    #[command(subcommand)]
    Catalog(CatalogCmd),
}

#[derive(Args)]
struct Target {
    #[arg(long, value_parser = angle, allow_hyphen_values = true)]
    lambda: f64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum SignArg {
    Plus,
    Minus,
}

#[derive(Clone, Copy, ValueEnum)]
enum OrientationArg {
    Direct,
    Mirrored,
}

#[derive(Subcommand)]
enum Construct {
    /// z + Σ(B/A_n)x_n z^n + conj(Σ(B/A_n)y_n z^n); values are re or re:im.
    Extremal {
        #[command(flatten)]
        target: Target,
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        x: String,
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        y: String,
        #[arg(long, default_value_t = 1)]
        truncation: usize,
    },
    /// Convex combination of the extreme points with weights X_1.., Y_1..
    Combo {
        #[command(flatten)]
        target: Target,
        #[arg(long, default_value = "")]
        x: String,
        #[arg(long, default_value = "")]
        y: String,
        #[arg(long, value_enum, default_value_t = SignArg::Minus)]
        sign: SignArg,
    },
    /// Extreme-point weights of a signed-form map.
    Decompose { file: PathBuf },
    /// Multiply the coefficients of a starlike map by d_n.
    Multiplier {
        #[arg(long)]
        from: PathBuf,
        #[arg(long, value_parser = angle, allow_hyphen_values = true)]
        lambda: Option<f64>,
        /// d_1,d_2,.. as re or re:im.
        #[arg(long, allow_hyphen_values = true, conflicts_with = "dn_max")]
        d: Option<String>,
        /// d_n = nB/A_n (the default).
        #[arg(long)]
        dn_max: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// h = z (g/z)^mu for an analytic starlike g (catalog name or file).
    PowerTransform {
        #[arg(long)]
        g: String,
        #[command(flatten)]
        target: Target,
        #[arg(long, value_enum, default_value_t = OrientationArg::Direct)]
        orientation: OrientationArg,
        #[arg(long, default_value_t = DEFAULT_TRUNCATION)]
        truncation: usize,
    },
    /// Sampled check of the F_eps family of a signed-form map.
    FEpsilon {
        #[arg(long)]
        from: PathBuf,
        #[arg(long, value_parser = angle, allow_hyphen_values = true)]
        lambda: Option<f64>,
        #[arg(long, allow_hyphen_values = true)]
        grid: Option<String>,
        #[arg(long)]
        eps: Option<f64>,
        #[arg(long, default_value_t = spirallike::criteria::DEFAULT_N_EPS)]
        n_eps: usize,
        #[arg(long, allow_hyphen_values = true)]
        d: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum CatalogCmd {
    List,
    Emit {
        name: String,
        #[arg(long, value_parser = angle, allow_hyphen_values = true, default_value = "0")]
        lambda: f64,
        #[arg(long, value_parser = parse_complex_arg, allow_hyphen_values = true)]
        alpha: Option<Complex64>,
        #[arg(long, value_parser = parse_complex_arg, allow_hyphen_values = true)]
        exponent: Option<Complex64>,
        #[arg(long, default_value_t = DEFAULT_TRUNCATION)]
        truncation: usize,
        /// Write a catalog reference instead of the expanded coefficients.
        #[arg(long)]
        reference: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn angle(s: &str) -> Result<f64, String> {
    parse_angle(s).map_err(|e| e.to_string())
}

fn parse_complex_arg(s: &str) -> Result<Complex64, String> {
    parse_complex(s).map_err(|e| e.to_string())
}

fn parse_point(s: &str) -> Result<Complex64, String> {
    let v = parse_real_list(s).map_err(|e| e.to_string())?;
    match v[..] {
        [re, im] => Ok(Complex64::new(re, im)),
        _ => Err(format!("'{s}' must read re,im")),
    }
}

fn run(cli: Cli) -> Result<Output, CliError> {
    match cli.command {
        Command::Verify { file, grid, eps, probe } => commands::cmd_verify(&file, grid.as_deref(), eps, probe),
        Command::Weights { lambda, n } => commands::cmd_weights(lambda, n),
        Command::Construct(c) => match c {
            Construct::Extremal { target, x, y, truncation } => commands::cmd_extremal(
                target.lambda,
                &parse_complex_list(&x)?,
                &parse_complex_list(&y)?,
                truncation,
                target.out.as_deref(),
            ),
            Construct::Combo { target, x, y, sign } => {
                let sign = match sign {
                    SignArg::Plus => Sign::Plus,
                    SignArg::Minus => Sign::Minus,
                };
                commands::cmd_combo(target.lambda, parse_real_list(&x)?, parse_real_list(&y)?, sign, target.out.as_deref())
            }
            Construct::Decompose { file } => commands::cmd_decompose(&file),
            Construct::Multiplier { from, lambda, d, dn_max: _, out } => {
                let d = d.map(|s| parse_complex_list(&s)).transpose()?;
                commands::cmd_multiplier(&from, lambda, d.as_deref(), out.as_deref())
            }
            Construct::PowerTransform { g, target, orientation, truncation } => {
                let o = match orientation {
                    OrientationArg::Direct => Orientation::Direct,
                    OrientationArg::Mirrored => Orientation::Mirrored,
                };
                commands::cmd_power_transform(&g, target.lambda, o, truncation, target.out.as_deref())
            }
            Construct::FEpsilon { from, lambda, grid, eps, n_eps, d, out } => {
                let d = d.map(|s| parse_complex_list(&s)).transpose()?;
                commands::cmd_f_epsilon(&from, lambda, grid.as_deref(), eps, n_eps, d.as_deref(), out.as_deref())
            }
        },
        Command::Plot { file, radii, samples, out, csv, width, height } => {
            let radii = match radii {
                Some(r) => parse_real_list(&r)?,
                None => DEFAULT_RADII.to_vec(),
            };
            let format = if csv { PlotFormat::Csv } else { PlotFormat::Svg };
            let spec = PlotSpec { radii, samples_per_circle: samples, format, width, height };
            commands::cmd_plot(&file, &spec, out.as_deref())
        }
        Command::Catalog(CatalogCmd::List) => Ok(commands::cmd_catalog_list()),
        Command::Catalog(CatalogCmd::Emit { name, lambda, alpha, exponent, truncation, reference, out }) => {
            let mut params = CatalogParams::new();
            if let Some(a) = alpha {
                params.insert("alpha".into(), a);
            }
            if let Some(e) = exponent {
                params.insert("exponent".into(), e);
            }
            commands::cmd_catalog_emit(&name, &params, lambda, truncation, !reference, out.as_deref())
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            // A closed pipe downstream is not an error of ours.
            let _ = stdout.write_all(out.stdout.as_bytes()).and_then(|_| stdout.flush());
            ExitCode::from(out.code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            if let CliError::Usage(msg) = &e {
                if msg.starts_with("unknown catalog entry") {
                    eprint!("{}", commands::cmd_catalog_list().stdout);
                }
            }
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
