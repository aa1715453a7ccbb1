//! Command bodies. Each returns the text destined for stdout and an exit status,
//! so tests can drive them without spawning the binary.

use std::fmt::Write;
use std::path::Path;

use num_complex::Complex64;
use serde_json::json;
use spirallike::catalog::{describe, NAMES};
use spirallike::{
    catalog, convex_combination, decompose, extremal_family, f_epsilon_family_check, multiplier_transfer,
    spirallike_power_transform, theorem1_inequality, verify, weights, CatalogParams, CombinationWeights, GridSpec,
    HarmonicMapSpec, MultiplierSequence, Orientation, PowerSeries, Sign, SpiralParams,
};

use crate::format::{pair, sig9, write_atomic};
use crate::mapfile::MapFile;
use crate::plot::{render, PlotSpec};
use crate::report::{grid as grid_json, report_json, to_text};
use crate::{CliError, Output};

pub const DEFAULT_TRUNCATION: usize = 64;

pub fn spiral(lambda: f64) -> Result<SpiralParams, CliError> {
    SpiralParams::new(lambda).map_err(|e| CliError::Usage(e.to_string()))
}

/// `r_min,r_max,n_r,n_theta`.
pub fn parse_grid(s: &str, eps: f64) -> Result<GridSpec, CliError> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let bad = || CliError::Usage(format!("grid '{s}' must read r_min,r_max,n_r,n_theta"));
    if parts.len() != 4 {
        return Err(bad());
    }
    let r_min = parts[0].parse().map_err(|_| bad())?;
    let r_max = parts[1].parse().map_err(|_| bad())?;
    let n_r = parts[2].parse().map_err(|_| bad())?;
    let n_t = parts[3].parse().map_err(|_| bad())?;
    GridSpec::new(r_min, r_max, n_r, n_t, eps).map_err(|e| CliError::Usage(e.to_string()))
}

fn grid_or_default(grid: Option<&str>, eps: Option<f64>) -> Result<GridSpec, CliError> {
    let eps = eps.unwrap_or(GridSpec::default().margin_eps);
    match grid {
        Some(g) => parse_grid(g, eps),
        None => {
            let g = GridSpec::default().with_eps(eps);
            g.validate().map_err(|e| CliError::Usage(e.to_string()))?;
            Ok(g)
        }
    }
}

/// Writes `text` to `out`, or returns it for stdout.
fn deliver(text: String, out: Option<&Path>) -> Result<String, CliError> {
    match out {
        Some(p) => {
            write_atomic(p, text.as_bytes())?;
            Ok(String::new())
        }
        None => Ok(text),
    }
}

pub fn cmd_verify(path: &Path, grid: Option<&str>, eps: Option<f64>, probe: Option<Complex64>) -> Result<Output, CliError> {
    let file = MapFile::read(path)?;
    let m = file.to_map().map_err(|e| e.in_file(path))?;
    let p = file.params();
    let g = grid_or_default(grid, eps)?;
    let report = verify(&m, p, &g)?;
    let probe = match probe {
        Some(z) => Some((z, theorem1_inequality(&m, p, z)?)),
        None => None,
    };
    let code = if report.all_pass() { 0 } else { 1 };
    Ok(Output { stdout: to_text(&report_json(&report, probe)), code })
}

pub fn cmd_weights(lambda: f64, n: usize) -> Result<Output, CliError> {
    let p = spiral(lambda)?;
    if n == 0 {
        return Err(CliError::Usage("n must be at least 1".into()));
    }
    let w = weights(p, n);
    // full precision: the columns carry the exact weights
    let mut s = String::new();
    writeln!(s, "# lambda = {}", p.lambda()).unwrap();
    writeln!(s, "# B = {}", w.b()).unwrap();
    writeln!(s, "n,A_n,A_n/B,nB/A_n").unwrap();
    for k in 1..=n {
        writeln!(s, "{},{},{},{}", k, w.a(k), w.ratio(k), w.multiplier_bound(k)).unwrap();
    }
    Ok(Output::ok(s))
}

pub fn cmd_extremal(lambda: f64, x: &[Complex64], y: &[Complex64], truncation: usize, out: Option<&Path>) -> Result<Output, CliError> {
    let p = spiral(lambda)?;
    let m = extremal_family(x, y, p, truncation)?;
    Ok(Output::ok(deliver(MapFile::from_map(&m, lambda).emit(), out)?))
}

pub fn cmd_combo(lambda: f64, x: Vec<f64>, y: Vec<f64>, sign: Sign, out: Option<&Path>) -> Result<Output, CliError> {
    let p = spiral(lambda)?;
    let w = CombinationWeights::new(x, y)?;
    let m = convex_combination(&w, p, sign)?;
    Ok(Output::ok(deliver(MapFile::from_map(&m, lambda).emit(), out)?))
}

pub fn cmd_decompose(path: &Path) -> Result<Output, CliError> {
    let file = MapFile::read(path)?;
    let m = file.to_map().map_err(|e| e.in_file(path))?;
    let w = decompose(&m, file.params())?;
    let round = |v: &[f64]| v.iter().map(|&x| sig9(x)).collect::<Vec<_>>();
    let v = json!({ "lambda": sig9(file.lambda), "X": round(w.x_weights()), "Y": round(w.y_weights()) });
    Ok(Output::ok(to_text(&v)))
}

pub fn cmd_multiplier(
    from: &Path,
    lambda: Option<f64>,
    d: Option<&[Complex64]>,
    out: Option<&Path>,
) -> Result<Output, CliError> {
    let file = MapFile::read(from)?;
    let f = file.to_map().map_err(|e| e.in_file(from))?;
    let lambda = lambda.unwrap_or(file.lambda);
    let p = spiral(lambda)?;
    let d = match d {
        Some(d) => MultiplierSequence::new(d.to_vec()),
        None => MultiplierSequence::maximal(p, f.order()),
    };
    let m = multiplier_transfer(&f, &d, p)?;
    Ok(Output::ok(deliver(MapFile::from_map(&m, lambda).emit(), out)?))
}

/// Analytic part of a catalog entry or of a coefficient file with `g = 0`.
fn analytic_source(g: &str, p: SpiralParams, truncation: usize) -> Result<HarmonicMapSpec, CliError> {
    let path = Path::new(g);
    let m = if NAMES.contains(&g) {
        catalog(g, &CatalogParams::new(), p, truncation)?
    } else if path.exists() {
        let file = MapFile::read(path)?;
        file.to_map().map_err(|e| e.in_file(path))?
    } else {
        return Err(CliError::Usage(format!("'{g}' is neither a catalog name nor a file")));
    };
    if !m.is_analytic() {
        return Err(CliError::Usage(format!("'{g}' has a nonzero co-analytic part")));
    }
    Ok(m)
}

pub fn cmd_power_transform(
    g: &str,
    lambda: f64,
    orientation: Orientation,
    truncation: usize,
    out: Option<&Path>,
) -> Result<Output, CliError> {
    let p = spiral(lambda)?;
    let src = analytic_source(g, p, truncation)?;
    let t = spirallike_power_transform(src.h_series(), p, orientation)?;
    let m = HarmonicMapSpec::from_series(&t.h, &PowerSeries::zero(t.h.order()))?;
    let file = MapFile::from_map(&m, lambda).emit();
    let summary = to_text(&json!({
        "mu": pair(t.mu),
        "a2": pair(t.h.coeff(2)),
        "probe_min": sig9(t.probe.value),
        "probe_witness": pair(t.probe.at),
        "probe_pass": t.probe_pass(),
    }));
    match out {
        Some(path) => {
            write_atomic(path, file.as_bytes())?;
            Ok(Output::ok(summary))
        }
        None => Ok(Output::ok(file)),
    }
}

/// `H = z + Σ a_n z^n`, `G = Σ b_n z^n` taken from a signed-form file.
pub fn cmd_f_epsilon(
    from: &Path,
    lambda: Option<f64>,
    grid: Option<&str>,
    eps: Option<f64>,
    n_eps: usize,
    d: Option<&[Complex64]>,
    out: Option<&Path>,
) -> Result<Output, CliError> {
    let file = MapFile::read(from)?;
    let m = file.to_map().map_err(|e| e.in_file(from))?;
    let lambda = lambda.unwrap_or(file.lambda);
    let p = spiral(lambda)?;
    let g = grid_or_default(grid, eps)?;
    let check = f_epsilon_family_check(m.h_series(), m.g_series(), p, &g, n_eps)?;
    if let Some(path) = out {
        let d = match d {
            Some(d) => MultiplierSequence::new(d.to_vec()),
            None => MultiplierSequence::new(vec![Complex64::new(1.0, 0.0); m.order()]),
        };
        let a = (2..=m.order()).map(|n| d.d(n) * m.a(n)).collect();
        let b = (1..=m.order()).map(|n| d.d(n) * m.b(n)).collect();
        let f = HarmonicMapSpec::new(a, b, m.order(), false)?;
        write_atomic(path, MapFile::from_map(&f, lambda).emit().as_bytes())?;
    }
    let v = json!({
        "min": sig9(check.min),
        "witness": pair(check.at),
        "epsilon": pair(check.eps),
        "n_eps": n_eps,
        "pass": check.pass,
        "sampled": true,
        "grid_used": grid_json(&g),
    });
    Ok(Output { stdout: to_text(&v), code: if check.pass { 0 } else { 1 } })
}

pub fn cmd_plot(path: &Path, spec: &PlotSpec, out: Option<&Path>) -> Result<Output, CliError> {
    let file = MapFile::read(path)?;
    let m = file.to_map().map_err(|e| e.in_file(path))?;
    Ok(Output::ok(deliver(render(&m, spec)?, out)?))
}

pub fn cmd_catalog_list() -> Output {
    let mut s = String::new();
    for n in NAMES {
        writeln!(s, "{n:<16}{}", describe(n).unwrap_or("")).unwrap();
    }
    Output::ok(s)
}

pub fn cmd_catalog_emit(
    name: &str,
    params: &CatalogParams,
    lambda: f64,
    truncation: usize,
    expand: bool,
    out: Option<&Path>,
) -> Result<Output, CliError> {
    if !NAMES.contains(&name) {
        return Err(CliError::Usage(format!("unknown catalog entry '{name}'; valid names: {}", NAMES.join(", "))));
    }
    let p = spiral(lambda)?;
    let m = catalog(name, params, p, truncation)?;
    let text = if expand {
        MapFile::from_map(&m, lambda).emit()
    } else {
        MapFile::from_catalog(name, params, lambda, truncation, m.signed_form()).emit()
    };
    Ok(Output::ok(deliver(text, out)?))
}
