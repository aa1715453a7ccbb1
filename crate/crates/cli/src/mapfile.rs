//! JSON coefficient files.
//!
//! ```json
//! {
//!   "lambda": 0.785398163,
//!   "truncation": 8,
//!   "a": [[-0.1, 0.0]],
//!   "b": [[0.2, 0.0]],
//!   "signed_form": true
//! }
//! ```
//!
//! or, instead of `a` and `b`, a `"catalog": {"name": "f2", "params": {"alpha": 0.95}}` entry.

use std::collections::BTreeMap;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use spirallike::{catalog, CatalogParams, HarmonicMapSpec, SpiralParams};

use crate::format::{pair, pretty_json, sig9};
use crate::CliError;

/// A catalog parameter: a real number or an `[re, im]` pair.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ParamValue {
    Real(f64),
    Complex([f64; 2]),
}

impl ParamValue {
    pub fn value(self) -> Complex64 {
        match self {
            ParamValue::Real(x) => Complex64::new(x, 0.0),
            ParamValue::Complex([re, im]) => Complex64::new(re, im),
        }
    }

    pub fn from_value(z: Complex64) -> Self {
        if z.im == 0.0 {
            ParamValue::Real(sig9(z.re))
        } else {
            ParamValue::Complex(pair(z))
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CatalogRef {
    pub name: String,
    #[serde(default)]
    pub params: BTreeMap<String, ParamValue>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapFile {
    pub lambda: f64,
    pub truncation: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a: Option<Vec<[f64; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b: Option<Vec<[f64; 2]>>,
    #[serde(default)]
    pub signed_form: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub catalog: Option<CatalogRef>,
}

fn field(name: &str, reason: impl Into<String>) -> CliError {
    CliError::Field { field: name.into(), reason: reason.into() }
}

fn check_pairs(name: &str, v: &Option<Vec<[f64; 2]>>) -> Result<(), CliError> {
    for (i, [re, im]) in v.iter().flatten().enumerate() {
        if !(re.is_finite() && im.is_finite()) {
            return Err(field(&format!("{name}[{i}]"), "not a finite number"));
        }
    }
    Ok(())
}

fn to_complex(v: &Option<Vec<[f64; 2]>>) -> Vec<Complex64> {
    v.iter().flatten().map(|&[re, im]| Complex64::new(re, im)).collect()
}

impl MapFile {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let f: MapFile = serde_json::from_str(text)
            .map_err(|e| CliError::Parse { line: e.line(), column: e.column(), reason: e.to_string() })?;
        f.validate()?;
        Ok(f)
    }

    pub fn read(path: &std::path::Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
        Self::parse(&text).map_err(|e| e.in_file(path))
    }

    pub fn validate(&self) -> Result<(), CliError> {
        if !self.lambda.is_finite() {
            return Err(field("lambda", "not a finite number"));
        }
        SpiralParams::new(self.lambda).map_err(|e| field("lambda", e.to_string()))?;
        let arrays = self.a.is_some() || self.b.is_some();
        match (arrays, &self.catalog) {
            (true, Some(_)) => return Err(field("catalog", "give either a/b arrays or a catalog entry, not both")),
            (false, None) => return Err(field("a", "missing a/b arrays or catalog entry")),
            _ => {}
        }
        check_pairs("a", &self.a)?;
        check_pairs("b", &self.b)?;
        if let Some(c) = &self.catalog {
            for (k, v) in &c.params {
                let z = v.value();
                if !(z.re.is_finite() && z.im.is_finite()) {
                    return Err(field(&format!("catalog.params.{k}"), "not a finite number"));
                }
            }
        }
        Ok(())
    }

    pub fn params(&self) -> SpiralParams {
        SpiralParams::new(self.lambda).expect("validated on parse")
    }

    /// Builds the map; catalog entries are expanded to `truncation` coefficients.
    pub fn to_map(&self) -> Result<HarmonicMapSpec, CliError> {
        let p = self.params();
        match &self.catalog {
            Some(c) => {
                let params: CatalogParams = c.params.iter().map(|(k, v)| (k.clone(), v.value())).collect();
                let m = catalog(&c.name, &params, p, self.truncation).map_err(|e| field("catalog", e.to_string()))?;
                if self.signed_form {
                    m.into_signed().map_err(|e| field("signed_form", e.to_string()))
                } else {
                    Ok(m)
                }
            }
            None => HarmonicMapSpec::new(to_complex(&self.a), to_complex(&self.b), self.truncation, self.signed_form)
                .map_err(|e| field(if self.signed_form { "signed_form" } else { "a" }, e.to_string())),
        }
    }

    /// Coefficient-array file for `m`, rounded to nine significant digits.
    pub fn from_map(m: &HarmonicMapSpec, lambda: f64) -> Self {
        let a = m.a_coeffs().iter().map(|&z| pair(z)).collect();
        let b = m.b_coeffs().iter().map(|&z| pair(z)).collect();
        Self { lambda: sig9(lambda), truncation: m.order(), a: Some(a), b: Some(b), signed_form: m.signed_form(), catalog: None }
    }

    pub fn from_catalog(name: &str, params: &CatalogParams, lambda: f64, truncation: usize, signed_form: bool) -> Self {
        let params = params.iter().map(|(k, &v)| (k.clone(), ParamValue::from_value(v))).collect();
        Self {
            lambda: sig9(lambda),
            truncation,
            a: None,
            b: None,
            signed_form,
            catalog: Some(CatalogRef { name: name.into(), params }),
        }
    }

    /// Same file with every number rounded to nine significant digits.
    pub fn normalized(&self) -> Self {
        let round = |v: &Option<Vec<[f64; 2]>>| v.as_ref().map(|v| v.iter().map(|&[re, im]| [sig9(re), sig9(im)]).collect());
        Self {
            lambda: sig9(self.lambda),
            truncation: self.truncation,
            a: round(&self.a),
            b: round(&self.b),
            signed_form: self.signed_form,
            catalog: self.catalog.as_ref().map(|c| CatalogRef {
                name: c.name.clone(),
                params: c.params.iter().map(|(k, v)| (k.clone(), ParamValue::from_value(v.value()))).collect(),
            }),
        }
    }

    /// Pretty JSON of the normalized file, newline terminated.
    pub fn emit(&self) -> String {
        pretty_json(&serde_json::to_value(self.normalized()).expect("map files serialize"))
    }
}
