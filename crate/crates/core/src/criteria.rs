//! Spirallikeness tests for harmonic maps.
//!
//! Coefficient tests compare weighted coefficient sums against fixed bounds
//! using the weights built from
//!
//! ```text
//! A_n = |1 + n e^{-iλ}| + |1 - n e^{-iλ}|,   B = |1 + e^{-iλ}| - |1 - e^{-iλ}|.
//! ```
//!
//! Pointwise tests sample `Re(e^{-iλ} Df/f)` and related quantities on a
//! [`GridSpec`]. A grid pass is evidence, not a proof; a grid failure is a
//! genuine counterexample.

use std::f64::consts::{FRAC_PI_2, TAU};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::grid::{min_over, GridSpec, Witness};
use crate::harmonic::{nonvanishing_on_grid, sense_preserving_on_grid, GridCheck, HarmonicMapSpec, Parts};

/// Default number of unimodular `ε` samples for the `h + εg` family.
pub const DEFAULT_N_EPS: usize = 64;

/// Angle `λ ∈ (-π/2, π/2)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpiralParams {
    lambda: f64,
}

impl SpiralParams {
    pub fn new(lambda: f64) -> Result<Self> {
        if !lambda.is_finite() || lambda.abs() >= FRAC_PI_2 {
            return Err(Error::InvalidLambda(lambda));
        }
        Ok(Self { lambda })
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    /// `e^{-iλ}`.
    pub fn rotation(&self) -> Complex64 {
        Complex64::from_polar(1.0, -self.lambda)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct WeightTable {
    a: Vec<f64>,
    b: f64,
    lambda: f64,
}

impl WeightTable {
    pub fn new(p: SpiralParams, n_max: usize) -> Self {
        let e = p.rotation();
        let one = Complex64::new(1.0, 0.0);
        let a = (1..=n_max.max(1))
            .map(|n| {
                let ne = e * n as f64;
                (one + ne).norm() + (one - ne).norm()
            })
            .collect();
        let b = (one + e).norm() - (one - e).norm();
        Self { a, b, lambda: p.lambda() }
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn len(&self) -> usize {
        self.a.len()
    }

    pub fn is_empty(&self) -> bool {
        self.a.is_empty()
    }

    /// `A_n`, `n >= 1`. Panics past the table length.
    pub fn a(&self, n: usize) -> f64 {
        self.a[n - 1]
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    /// `A_n / B`.
    pub fn ratio(&self, n: usize) -> f64 {
        self.a(n) / self.b
    }

    /// `B / A_n`.
    pub fn inverse_ratio(&self, n: usize) -> f64 {
        self.b / self.a(n)
    }

    /// `n B / A_n`, the largest admissible multiplier modulus at index `n`.
    pub fn multiplier_bound(&self, n: usize) -> f64 {
        n as f64 * self.inverse_ratio(n)
    }
}

pub fn weights(p: SpiralParams, n_max: usize) -> WeightTable {
    WeightTable::new(p, n_max)
}

/// A truncated weighted coefficient sum compared to a bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoefficientSum {
    pub sum: f64,
    pub bound: f64,
    pub pass: bool,
    /// Largest index included in the sum.
    pub truncated_at: usize,
    /// First index at which the partial sum exceeded the bound.
    pub first_violation: Option<usize>,
}

/// Accumulates `weight(n) (|a_n| + |b_n|)` starting from `start`, with `a`
/// terms only for `n >= 2` and `b` terms for `n >= 1`.
fn weighted_sum(
    m: &HarmonicMapSpec,
    start: f64,
    bound: f64,
    eps: f64,
    weight: impl Fn(usize) -> f64,
) -> CoefficientSum {
    let mut sum = start;
    let mut first_violation = None;
    for n in 1..=m.order() {
        let mut term = m.b(n).norm();
        if n >= 2 {
            term += m.a(n).norm();
        }
        sum += weight(n) * term;
        if first_violation.is_none() && sum > bound + eps {
            first_violation = Some(n);
        }
    }
    CoefficientSum { sum, bound, pass: sum <= bound + eps, truncated_at: m.order(), first_violation }
}

/// `1 + Σ_{n≥2} n|a_n| + Σ_{n≥1} n|b_n| <= 2`.
pub fn silverman_check(m: &HarmonicMapSpec, eps: f64) -> CoefficientSum {
    weighted_sum(m, 1.0, 2.0, eps, |n| n as f64)
}

/// `Σ_{n≥2} (A_n/B)|a_n| + Σ_{n≥1} (A_n/B)|b_n| <= 1`.
pub fn sufficient_check(m: &HarmonicMapSpec, p: SpiralParams, eps: f64) -> CoefficientSum {
    let w = WeightTable::new(p, m.order());
    weighted_sum(m, 0.0, 1.0, eps, |n| w.ratio(n))
}

/// `Σ_{n≥2} (B/A_n)|a_n| + Σ_{n≥1} (B/A_n)|b_n| <= 1`, necessary on signed-form maps.
pub fn necessary_weighted_check(m: &HarmonicMapSpec, p: SpiralParams, eps: f64) -> Result<CoefficientSum> {
    if !m.signed_form() {
        return Err(Error::Class("necessary_weighted_check"));
    }
    let w = WeightTable::new(p, m.order());
    Ok(weighted_sum(m, 0.0, 1.0, eps, |n| w.inverse_ratio(n)))
}

/// Both conventions of the unweighted necessary bound on signed-form maps.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SharpNecessary {
    /// `Σ_{n≥2} n|a_n| + Σ_{n≥1} n|b_n|`, compared with 1.
    pub tail: CoefficientSum,
    /// The same sum with the `a_1 = 1` term counted, compared with 2.
    pub with_leading_term: f64,
}

pub fn necessary_sharp_check(m: &HarmonicMapSpec, eps: f64) -> Result<SharpNecessary> {
    if !m.signed_form() {
        return Err(Error::Class("necessary_sharp_check"));
    }
    let tail = weighted_sum(m, 0.0, 1.0, eps, |n| n as f64);
    Ok(SharpNecessary { tail, with_leading_term: 1.0 + tail.sum })
}

/// `φ(r) = f(r)/r` on the positive axis for a signed-form map.
pub fn phi(m: &HarmonicMapSpec, r: f64) -> f64 {
    1.0 + (2..=m.order()).map(|n| -m.a(n).norm() * r.powi(n as i32 - 1)).sum::<f64>()
        + (1..=m.order()).map(|n| m.b(n).norm() * r.powi(n as i32 - 1)).sum::<f64>()
}

/// `ψ(r) = Σ_{n≥2} n|a_n| r^{n-1} + Σ_{n≥1} n|b_n| r^{n-1}`.
pub fn psi(m: &HarmonicMapSpec, r: f64) -> f64 {
    (1..=m.order())
        .map(|n| {
            let mut t = m.b(n).norm();
            if n >= 2 {
                t += m.a(n).norm();
            }
            n as f64 * t * r.powi(n as i32 - 1)
        })
        .sum()
}

/// `Re(e^{-iλ} Df/f)` with a division guard.
fn spiral_ratio(parts: &Parts, z: Complex64, rot: Complex64, guard: f64) -> Result<f64> {
    let f = parts.f();
    let modulus = f.norm();
    if modulus < guard {
        return Err(Error::NearZero { z, modulus });
    }
    Ok((rot * parts.d(z) / f).re)
}

/// Minimum of `Re(e^{-iλ} Df/f)` over the grid; passes when it exceeds `-margin_eps`.
pub fn pointwise_spiral_check(m: &HarmonicMapSpec, p: SpiralParams, grid: &GridSpec) -> Result<GridCheck> {
    grid.validate()?;
    let rot = p.rotation();
    let w = min_over(&grid.points(), |z| spiral_ratio(&m.parts(z), z, rot, grid.margin_eps))?;
    Ok(GridCheck { min: w.value, at: w.at, pass: w.value > -grid.margin_eps })
}

/// The `λ = 0` case: `Re(Df/f)`.
pub fn pointwise_fully_starlike_check(m: &HarmonicMapSpec, grid: &GridSpec) -> Result<GridCheck> {
    pointwise_spiral_check(m, SpiralParams { lambda: 0.0 }, grid)
}

/// Both sides of the cleared pointwise inequality
///
/// ```text
/// Re(e^{-iλ} z h' conj(h)) > Re(e^{iλ} z g' conj(g)) + Re(z e^{iλ} (h g' - e^{-2iλ} g h'))
/// ```
///
/// whose difference equals `|f|^2 Re(e^{-iλ} Df/f)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InequalitySides {
    pub lhs: f64,
    pub rhs: f64,
}

impl InequalitySides {
    pub fn holds(&self) -> bool {
        self.lhs > self.rhs
    }
}

pub fn theorem1_inequality(m: &HarmonicMapSpec, p: SpiralParams, z: Complex64) -> Result<InequalitySides> {
    m.eval_f(z)?;
    Ok(inequality_sides(&m.parts(z), p, z))
}

pub(crate) fn inequality_sides(q: &Parts, p: SpiralParams, z: Complex64) -> InequalitySides {
    let rot = p.rotation();
    let rot_inv = rot.conj();
    let lhs = (rot * z * q.dh * q.h.conj()).re;
    let rhs = (rot_inv * z * q.dg * q.g.conj()).re
        + (z * rot_inv * (q.h * q.dg - rot * rot * q.g * q.dh)).re;
    InequalitySides { lhs, rhs }
}

/// `M = |f + e^{-iλ}Df| - |f - e^{-iλ}Df|`.
pub fn margin_m(m: &HarmonicMapSpec, p: SpiralParams, z: Complex64) -> Result<f64> {
    if z.norm() == 0.0 {
        return Err(Error::Domain(z));
    }
    m.eval_f(z)?;
    Ok(margin_from_parts(&m.parts(z), p, z))
}

fn margin_from_parts(q: &Parts, p: SpiralParams, z: Complex64) -> f64 {
    let f = q.f();
    let rd = p.rotation() * q.d(z);
    (f + rd).norm() - (f - rd).norm()
}

pub fn margin_m_on_grid(m: &HarmonicMapSpec, p: SpiralParams, grid: &GridSpec) -> Result<GridCheck> {
    grid.validate()?;
    let w = min_over(&grid.points(), |z| Ok(margin_from_parts(&m.parts(z), p, z)))?;
    Ok(GridCheck { min: w.value, at: w.at, pass: w.value > -grid.margin_eps })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GrowthBounds {
    pub lower: f64,
    pub upper: f64,
    pub covering_radius: f64,
}

/// `(1 - B/A_1) r <= |f(z)| <= (1 + B/A_1) r` on `|z| = r` for maps passing the sufficient test.
pub fn growth_bounds(m: &HarmonicMapSpec, p: SpiralParams, r: f64, eps: f64) -> Result<GrowthBounds> {
    let s = sufficient_check(m, p, eps);
    if !s.pass {
        return Err(Error::Hypothesis(format!(
            "growth bounds need the sufficient coefficient test; sum = {}",
            s.sum
        )));
    }
    if !(0.0..1.0).contains(&r) {
        return Err(Error::InvalidParameter { name: "r".into(), reason: format!("{r} not in [0, 1)") });
    }
    let q = WeightTable::new(p, 1).inverse_ratio(1);
    Ok(GrowthBounds { lower: (1.0 - q) * r, upper: (1.0 + q) * r, covering_radius: 1.0 - q })
}

fn unimodular_samples(n_eps: usize) -> impl Iterator<Item = Complex64> {
    (0..n_eps).map(move |k| Complex64::from_polar(1.0, TAU * k as f64 / n_eps as f64))
}

/// Minimum over grid and sample `ε`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EpsilonCheck {
    pub min: f64,
    pub at: Complex64,
    pub eps: Complex64,
    pub pass: bool,
}

/// Minimum of `Re(z (h + εg)'/(h + εg))` over `ε = e^{2πik/n_eps}` and the grid.
pub fn epsilon_starlike_family_check(m: &HarmonicMapSpec, grid: &GridSpec, n_eps: usize) -> Result<EpsilonCheck> {
    grid.validate()?;
    if n_eps == 0 {
        return Err(Error::InvalidParameter { name: "n_eps".into(), reason: "must be positive".into() });
    }
    let points = grid.points();
    let parts: Vec<Parts> = points.iter().map(|&z| m.parts(z)).collect();
    let mut best = EpsilonCheck { min: f64::INFINITY, at: Complex64::default(), eps: Complex64::new(1.0, 0.0), pass: false };
    for eps in unimodular_samples(n_eps) {
        for (&z, q) in points.iter().zip(&parts) {
            let s = q.h + eps * q.g;
            if s.norm() < grid.margin_eps {
                return Err(Error::NearZeroEpsilon { eps, z });
            }
            let v = (z * (q.dh + eps * q.dg) / s).re;
            if v < best.min {
                best = EpsilonCheck { min: v, at: z, eps, pass: false };
            }
        }
    }
    best.pass = best.min > -grid.margin_eps;
    Ok(best)
}

/// Everything the toolkit can say about one map at one `λ`.
#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    pub lambda: f64,
    pub truncation: usize,
    pub signed_form: bool,
    pub closed_form: bool,
    pub weights_b: f64,
    pub b_over_a1: f64,
    pub silverman: CoefficientSum,
    pub sufficient: CoefficientSum,
    pub necessary_weighted: Option<CoefficientSum>,
    pub necessary_sharp: Option<SharpNecessary>,
    pub sense_preserving: GridCheck,
    pub nonvanishing: GridCheck,
    /// `None` when the division guard tripped; see `pointwise_error`.
    pub pointwise: Option<GridCheck>,
    pub pointwise_error: Option<String>,
    /// Cleared inequality sides at the pointwise witness.
    pub theorem1_at_witness: Option<(Complex64, InequalitySides)>,
    pub margin_m: GridCheck,
    pub growth: Option<GrowthBounds>,
    pub grid: GridSpec,
    /// Pointwise results come from finite sampling.
    pub sampled: bool,
}

impl VerificationReport {
    /// Pass flags of every applicable check, by name.
    pub fn checks(&self) -> Vec<(&'static str, bool)> {
        let mut out = vec![
            ("silverman", self.silverman.pass),
            ("sufficient", self.sufficient.pass),
        ];
        if let Some(n) = &self.necessary_weighted {
            out.push(("necessary_weighted", n.pass));
        }
        if let Some(n) = &self.necessary_sharp {
            out.push(("necessary_sharp", n.tail.pass));
        }
        out.push(("sense_preserving", self.sense_preserving.pass));
        out.push(("nonvanishing", self.nonvanishing.pass));
        out.push(("pointwise", self.pointwise.map(|p| p.pass).unwrap_or(false)));
        out.push(("margin_m", self.margin_m.pass));
        out
    }

    pub fn all_pass(&self) -> bool {
        self.checks().iter().all(|&(_, ok)| ok)
    }

    /// Sampled evidence of hereditary spirallikeness: sense-preserving,
    /// zero-free away from 0 and the pointwise criterion on the grid.
    pub fn spirallike_on_grid(&self) -> bool {
        self.sense_preserving.pass && self.nonvanishing.pass && self.pointwise.map(|p| p.pass).unwrap_or(false)
    }
}

pub fn verify(m: &HarmonicMapSpec, p: SpiralParams, grid: &GridSpec) -> Result<VerificationReport> {
    grid.validate()?;
    let eps = grid.margin_eps;
    let w = WeightTable::new(p, m.order());
    let sufficient = sufficient_check(m, p, eps);
    let nonvanishing = nonvanishing_on_grid(m, grid)?;
    let (pointwise, pointwise_error) = match pointwise_spiral_check(m, p, grid) {
        Ok(c) => (Some(c), None),
        Err(e @ Error::NearZero { .. }) => (None, Some(e.to_string())),
        Err(e) => return Err(e),
    };
    let theorem1_at_witness = pointwise.map(|c| (c.at, inequality_sides(&m.parts(c.at), p, c.at)));
    let growth = if sufficient.pass { Some(growth_bounds(m, p, grid.r_max, eps)?) } else { None };
    Ok(VerificationReport {
        lambda: p.lambda(),
        truncation: m.order(),
        signed_form: m.signed_form(),
        closed_form: m.closed_form().is_some(),
        weights_b: w.b(),
        b_over_a1: w.inverse_ratio(1),
        silverman: silverman_check(m, eps),
        sufficient,
        necessary_weighted: if m.signed_form() { Some(necessary_weighted_check(m, p, eps)?) } else { None },
        necessary_sharp: if m.signed_form() { Some(necessary_sharp_check(m, eps)?) } else { None },
        sense_preserving: sense_preserving_on_grid(m, grid)?,
        nonvanishing,
        pointwise,
        pointwise_error,
        theorem1_at_witness,
        margin_m: margin_m_on_grid(m, p, grid)?,
        growth,
        grid: *grid,
        sampled: true,
    })
}

/// Witness minimum over one circle `|z| = r` at `n` equally spaced angles.
pub fn circle_min(n: usize, r: f64, mut f: impl FnMut(Complex64) -> Result<f64>) -> Result<Witness> {
    let pts: Vec<Complex64> = (0..n).map(|k| Complex64::from_polar(r, TAU * k as f64 / n as f64)).collect();
    min_over(&pts, &mut f)
}
