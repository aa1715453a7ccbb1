//! Number formatting, argument parsing helpers and atomic file output.

use std::fs;
use std::io::Write;
use std::path::Path;

use num_complex::Complex64;
use serde_json::Value;

use crate::CliError;

pub const SIG_DIGITS: usize = 9;

/// Rounds to nine significant digits. Negative zero becomes zero.
pub fn sig9(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return if x == 0.0 { 0.0 } else { x };
    }
    let r: f64 = format!("{:.*e}", SIG_DIGITS - 1, x).parse().expect("formatted float parses");
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

/// Nine-significant-digit text form, shortest representation of the rounded value.
pub fn fmt9(x: f64) -> String {
    format!("{}", sig9(x))
}

pub fn pair(z: Complex64) -> [f64; 2] {
    [sig9(z.re), sig9(z.im)]
}

/// Parses an angle given in radians, or as `pi`, `pi/k`, `m*pi/k`, with an optional leading minus.
pub fn parse_angle(s: &str) -> Result<f64, CliError> {
    let t = s.trim();
    if let Ok(v) = t.parse::<f64>() {
        return finite(v, s);
    }
    let (neg, body) = match t.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, t),
    };
    let bad = || CliError::Usage(format!("cannot read angle '{s}'"));
    let (num, den) = match body.split_once('/') {
        Some((n, d)) => (n, d.trim().parse::<f64>().map_err(|_| bad())?),
        None => (body, 1.0),
    };
    let num = num.trim();
    let k = if num == "pi" {
        1.0
    } else if let Some(m) = num.strip_suffix("*pi").or_else(|| num.strip_suffix("pi")) {
        m.trim().parse::<f64>().map_err(|_| bad())?
    } else {
        return Err(bad());
    };
    let v = k * std::f64::consts::PI / den;
    finite(if neg { -v } else { v }, s)
}

fn finite(v: f64, s: &str) -> Result<f64, CliError> {
    if v.is_finite() {
        Ok(v)
    } else {
        Err(CliError::Usage(format!("'{s}' is not a finite number")))
    }
}

/// A real `x` or a complex `re:im`.
pub fn parse_complex(s: &str) -> Result<Complex64, CliError> {
    let t = s.trim();
    let bad = || CliError::Usage(format!("cannot read number '{s}'"));
    let z = match t.split_once(':') {
        Some((re, im)) => Complex64::new(re.trim().parse().map_err(|_| bad())?, im.trim().parse().map_err(|_| bad())?),
        None => Complex64::new(t.parse().map_err(|_| bad())?, 0.0),
    };
    if z.re.is_finite() && z.im.is_finite() {
        Ok(z)
    } else {
        Err(bad())
    }
}

/// Comma separated list of [`parse_complex`] values. The empty string is the empty list.
pub fn parse_complex_list(s: &str) -> Result<Vec<Complex64>, CliError> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(parse_complex).collect()
}

pub fn parse_real_list(s: &str) -> Result<Vec<f64>, CliError> {
    parse_complex_list(s)?
        .into_iter()
        .map(|z| if z.im == 0.0 { Ok(z.re) } else { Err(CliError::Usage(format!("'{s}' must hold real numbers"))) })
        .collect()
}

/// Writes through a temporary sibling and renames, so readers never see a partial file.
pub fn write_atomic(path: &Path, contents: &[u8]) -> Result<(), CliError> {
    let dir = path.parent().filter(|p| !p.as_os_str().is_empty()).unwrap_or(Path::new("."));
    let name = path.file_name().ok_or_else(|| CliError::Usage(format!("'{}' is not a file path", path.display())))?;
    let tmp = dir.join(format!(".{}.tmp{}", name.to_string_lossy(), std::process::id()));
    let io = |e: std::io::Error| CliError::Io(format!("{}: {e}", path.display()));
    let mut f = fs::File::create(&tmp).map_err(io)?;
    f.write_all(contents).map_err(io)?;
    f.sync_all().map_err(io)?;
    drop(f);
    fs::rename(&tmp, path).map_err(io)
}

/// Two-space indented JSON in which arrays of scalars stay on one line.
pub fn pretty_json(v: &Value) -> String {
    let mut out = String::new();
    write_value(&mut out, v, 0);
    out.push('\n');
    out
}

fn scalar(v: &Value) -> String {
    serde_json::to_string(v).expect("json scalars serialize")
}

fn write_value(out: &mut String, v: &Value, depth: usize) {
    let pad = |d: usize| "  ".repeat(d);
    match v {
        Value::Array(items) if items.is_empty() => out.push_str("[]"),
        Value::Array(items) if items.iter().all(|x| !x.is_array() && !x.is_object()) => {
            out.push('[');
            out.push_str(&items.iter().map(scalar).collect::<Vec<_>>().join(", "));
            out.push(']');
        }
        Value::Array(items) => {
            out.push_str("[\n");
            for (i, x) in items.iter().enumerate() {
                out.push_str(&pad(depth + 1));
                write_value(out, x, depth + 1);
                out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(depth));
            out.push(']');
        }
        Value::Object(map) if map.is_empty() => out.push_str("{}"),
        Value::Object(map) => {
            out.push_str("{\n");
            for (i, (k, x)) in map.iter().enumerate() {
                out.push_str(&pad(depth + 1));
                out.push_str(&scalar(&Value::String(k.clone())));
                out.push_str(": ");
                write_value(out, x, depth + 1);
                out.push_str(if i + 1 < map.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(depth));
            out.push('}');
        }
        other => out.push_str(&scalar(other)),
    }
}
