//! Annulus sampling plans for the pointwise criteria.

use std::f64::consts::TAU;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Radii × angles sampling of `r_min <= |z| <= r_max`, plus the pass margin
/// applied to strict inequalities evaluated on it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub r_min: f64,
    pub r_max: f64,
    pub n_radii: usize,
    pub n_angles: usize,
    pub margin_eps: f64,
}

impl Default for GridSpec {
    fn default() -> Self {
        Self {
            r_min: 1e-3,
            r_max: 0.99,
            n_radii: 40,
            n_angles: 256,
            margin_eps: 1e-9,
        }
    }
}

impl GridSpec {
    pub fn new(r_min: f64, r_max: f64, n_radii: usize, n_angles: usize, margin_eps: f64) -> Result<Self> {
        let g = Self { r_min, r_max, n_radii, n_angles, margin_eps };
        g.validate()?;
        Ok(g)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidGrid(msg));
        if !(self.r_min > 0.0 && self.r_min < 1.0) {
            return bad(format!("r_min = {} must lie in (0, 1)", self.r_min));
        }
        if !(self.r_max > self.r_min && self.r_max < 1.0) {
            return bad(format!("r_max = {} must lie in (r_min, 1)", self.r_max));
        }
        if self.n_radii < 1 {
            return bad("n_radii must be at least 1".into());
        }
        if self.n_angles < 8 {
            return bad(format!("n_angles = {} must be at least 8", self.n_angles));
        }
        if !(self.margin_eps >= 0.0 && self.margin_eps.is_finite()) {
            return bad(format!("margin_eps = {} must be finite and >= 0", self.margin_eps));
        }
        Ok(())
    }

    pub fn with_eps(mut self, margin_eps: f64) -> Self {
        self.margin_eps = margin_eps;
        self
    }

    /// Equally spaced radii from `r_min` to `r_max` inclusive. A single radius sits at `r_max`.
    pub fn radii(&self) -> Vec<f64> {
        if self.n_radii == 1 {
            return vec![self.r_max];
        }
        let step = (self.r_max - self.r_min) / (self.n_radii - 1) as f64;
        (0..self.n_radii)
            .map(|i| if i + 1 == self.n_radii { self.r_max } else { self.r_min + step * i as f64 })
            .collect()
    }

    pub fn angles(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.n_angles).map(move |k| TAU * k as f64 / self.n_angles as f64)
    }

    pub fn points(&self) -> Vec<Complex64> {
        let angles: Vec<f64> = self.angles().collect();
        self.radii()
            .into_iter()
            .flat_map(|r| angles.iter().map(move |&t| Complex64::from_polar(r, t)))
            .collect()
    }

    pub fn len(&self) -> usize {
        self.n_radii * self.n_angles
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Smallest sampled value together with the point that attains it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Witness {
    pub value: f64,
    pub at: Complex64,
}

/// Minimum of `f` over the points; the first point wins ties.
pub fn min_over<F>(points: &[Complex64], mut f: F) -> Result<Witness>
where
    F: FnMut(Complex64) -> Result<f64>,
{
    let mut best = Witness { value: f64::INFINITY, at: Complex64::default() };
    for &z in points {
        let v = f(z)?;
        if v < best.value || v.is_nan() {
            best = Witness { value: v, at: z };
            if v.is_nan() {
                break;
            }
        }
    }
    Ok(best)
}
