//! Named example maps.

use std::collections::BTreeMap;

use num_complex::Complex64;

use crate::criteria::{SpiralParams, WeightTable};
use crate::error::{Error, Result};
use crate::harmonic::{ClosedForm, HarmonicMapSpec};
use crate::series::PowerSeries;

/// Every name accepted by [`catalog`].
pub const NAMES: &[&str] = &[
    "identity",
    "f1",
    "f2",
    "f3",
    "f4",
    "f5",
    "f6",
    "f7",
    "koebe",
    "koebe_power",
    "harmonic_koebe",
    "half_plane",
];

/// One-line description per catalog entry.
pub fn describe(name: &str) -> Option<&'static str> {
    Some(match name {
        "identity" => "z",
        "f1" => "z + alpha conj(z), |alpha| < 1",
        "f2" => "z + alpha (B/A_2) conj(z^2), |alpha| < 1",
        "f3" => "z + alpha (B/A_1) conj(z) + (B/A_3)(1 - |alpha|) conj(z^3), |alpha| < 1",
        "f4" => "z (1 - z)^(i - 1)",
        "f5" => "z + alpha (B/A_1) conj(z) + (B/A_2)(1 - alpha) conj(z^2), 0 < alpha < 1",
        "f6" => "z - (B/A_1) conj(z)",
        "f7" => "z + (B/A_1) conj(z)",
        "koebe" => "z / (1 - z)^2",
        "koebe_power" => "z (1 - z)^(-exponent)",
        "harmonic_koebe" => "(z - z^2/2 + z^3/6)/(1-z)^3 + conj((z^2/2 + z^3/6)/(1-z)^3)",
        "half_plane" => "(z - z^2/2)/(1-z)^2 + conj((-z^2/2)/(1-z)^2)",
        _ => return None,
    })
}

/// Named real or complex parameters.
pub type CatalogParams = BTreeMap<String, Complex64>;

fn param(params: &CatalogParams, name: &str) -> Result<Complex64> {
    params.get(name).copied().ok_or_else(|| Error::InvalidParameter {
        name: name.into(),
        reason: "required".into(),
    })
}

fn disk_param(params: &CatalogParams, name: &str) -> Result<Complex64> {
    let v = param(params, name)?;
    if v.norm() >= 1.0 {
        return Err(Error::InvalidParameter { name: name.into(), reason: format!("|{v}| must be < 1") });
    }
    Ok(v)
}

fn real_param(params: &CatalogParams, name: &str) -> Result<f64> {
    let v = param(params, name)?;
    if v.im != 0.0 {
        return Err(Error::InvalidParameter { name: name.into(), reason: "must be real".into() });
    }
    Ok(v.re)
}

fn reject_extra(params: &CatalogParams, allowed: &[&str]) -> Result<()> {
    match params.keys().find(|k| !allowed.contains(&k.as_str())) {
        Some(k) => Err(Error::InvalidParameter { name: k.clone(), reason: "not used by this entry".into() }),
        None => Ok(()),
    }
}

fn zero() -> Complex64 {
    Complex64::default()
}

/// `(1 - z)^{-k}` as a series, by repeated products of the geometric series.
fn inverse_power(k: usize, order: usize) -> PowerSeries {
    (1..k).fold(PowerSeries::geometric(order), |acc, _| &acc * &PowerSeries::geometric(order))
}

fn rational(numerator: &[f64], k: usize, order: usize) -> Result<PowerSeries> {
    let p = PowerSeries::from_real(numerator)?.with_order(order);
    Ok(&p * &inverse_power(k, order))
}

/// Shape-detects the signed form for polynomial entries.
fn finish(m: HarmonicMapSpec) -> HarmonicMapSpec {
    m.clone().into_signed().unwrap_or(m)
}

/// `z (1 - z)^{-c}` with closed-form evaluation.
fn koebe_power(exponent: Complex64, order: usize) -> Result<HarmonicMapSpec> {
    let h = PowerSeries::geometric(order.saturating_sub(1)).pow(exponent)?.mul_z();
    Ok(HarmonicMapSpec::from_series(&h, &PowerSeries::zero(order))?.with_closed_form(ClosedForm::KoebePower { exponent }))
}

/// Builds a catalog entry at angle `p` with `order` retained coefficients.
pub fn catalog(name: &str, params: &CatalogParams, p: SpiralParams, order: usize) -> Result<HarmonicMapSpec> {
    let order = order.max(1);
    let w = WeightTable::new(p, 3);
    let one = Complex64::new(1.0, 0.0);
    match name {
        "identity" => {
            reject_extra(params, &[])?;
            Ok(finish(HarmonicMapSpec::identity(order)))
        }
        "f1" => {
            reject_extra(params, &["alpha"])?;
            let alpha = disk_param(params, "alpha")?;
            Ok(finish(HarmonicMapSpec::new(vec![], vec![alpha.conj()], order, false)?))
        }
        "f2" => {
            reject_extra(params, &["alpha"])?;
            let alpha = disk_param(params, "alpha")?;
            Ok(finish(HarmonicMapSpec::new(vec![], vec![zero(), alpha.conj() * w.inverse_ratio(2)], order, false)?))
        }
        "f3" => {
            reject_extra(params, &["alpha"])?;
            let alpha = disk_param(params, "alpha")?;
            let b = vec![alpha.conj() * w.inverse_ratio(1), zero(), one * (w.inverse_ratio(3) * (1.0 - alpha.norm()))];
            Ok(finish(HarmonicMapSpec::new(vec![], b, order, false)?))
        }
        "f4" => {
            reject_extra(params, &[])?;
            koebe_power(Complex64::new(1.0, -1.0), order)
        }
        "f5" => {
            reject_extra(params, &["alpha"])?;
            let alpha = real_param(params, "alpha")?;
            if !(alpha > 0.0 && alpha < 1.0) {
                return Err(Error::InvalidParameter { name: "alpha".into(), reason: format!("{alpha} not in (0, 1)") });
            }
            let b = vec![one * (alpha * w.inverse_ratio(1)), one * ((1.0 - alpha) * w.inverse_ratio(2))];
            Ok(finish(HarmonicMapSpec::new(vec![], b, order, false)?))
        }
        "f6" | "f7" => {
            reject_extra(params, &[])?;
            let s = if name == "f6" { -1.0 } else { 1.0 };
            Ok(finish(HarmonicMapSpec::new(vec![], vec![one * (s * w.inverse_ratio(1))], order, false)?))
        }
        "koebe" => {
            reject_extra(params, &[])?;
            koebe_power(Complex64::new(2.0, 0.0), order)
        }
        "koebe_power" => {
            reject_extra(params, &["exponent"])?;
            koebe_power(param(params, "exponent")?, order)
        }
        "harmonic_koebe" => {
            reject_extra(params, &[])?;
            let h = rational(&[0.0, 1.0, -0.5, 1.0 / 6.0], 3, order)?;
            let g = rational(&[0.0, 0.0, 0.5, 1.0 / 6.0], 3, order)?;
            Ok(HarmonicMapSpec::from_series(&h, &g)?.with_closed_form(ClosedForm::HarmonicKoebe))
        }
        "half_plane" => {
            reject_extra(params, &[])?;
            let h = rational(&[0.0, 1.0, -0.5], 2, order)?;
            let g = rational(&[0.0, 0.0, -0.5], 2, order)?;
            Ok(HarmonicMapSpec::from_series(&h, &g)?.with_closed_form(ClosedForm::HalfPlane))
        }
        other => Err(Error::UnknownCatalog(other.to_string())),
    }
}
