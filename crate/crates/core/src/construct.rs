//! Builders and transforms producing spirallike maps.

use num_complex::Complex64;

use crate::criteria::{
    necessary_sharp_check, necessary_weighted_check, silverman_check, EpsilonCheck, SpiralParams, WeightTable,
};
use crate::error::{Error, Result};
use crate::grid::{min_over, GridSpec, Witness};
use crate::harmonic::HarmonicMapSpec;
use crate::series::{PowerSeries, NORMALIZATION_TOL};

const BUDGET_TOL: f64 = 1e-12;

/// `f(z) = z + Σ (B/A_n) x_n z^n + Σ (B/A_n) conj(y_n z^n)`; `x` starts at `n = 2`
/// and `y` at `n = 1`. Its sufficient sum equals `Σ|x_n| + Σ|y_n|`.
pub fn extremal_family(x: &[Complex64], y: &[Complex64], p: SpiralParams, order: usize) -> Result<HarmonicMapSpec> {
    let budget: f64 = x.iter().chain(y).map(|c| c.norm()).sum();
    if budget > 1.0 + BUDGET_TOL {
        return Err(Error::Constraint(format!("sum |x_n| + sum |y_n| = {budget} > 1")));
    }
    let order = order.max(x.len() + 1).max(y.len()).max(1);
    let w = WeightTable::new(p, order);
    let a = x.iter().enumerate().map(|(i, &c)| c * w.inverse_ratio(i + 2)).collect();
    let b = y.iter().enumerate().map(|(i, &c)| c * w.inverse_ratio(i + 1)).collect();
    HarmonicMapSpec::new(a, b, order, false)
}

/// Nonnegative weights `X_1..X_N`, `Y_1..Y_N` summing to one.
#[derive(Debug, Clone, PartialEq)]
pub struct CombinationWeights {
    x: Vec<f64>,
    y: Vec<f64>,
}

impl CombinationWeights {
    pub fn new(x: Vec<f64>, y: Vec<f64>) -> Result<Self> {
        if let Some(v) = x.iter().chain(&y).find(|v| !(v.is_finite() && **v >= 0.0)) {
            return Err(Error::Constraint(format!("combination weight {v} must be finite and >= 0")));
        }
        let total: f64 = x.iter().chain(&y).sum();
        if (total - 1.0).abs() > BUDGET_TOL {
            return Err(Error::Constraint(format!("combination weights sum to {total}, not 1")));
        }
        Ok(Self { x, y })
    }

    /// `X_n`, `n >= 1`.
    pub fn x(&self, n: usize) -> f64 {
        self.x.get(n.wrapping_sub(1)).copied().unwrap_or(0.0)
    }

    /// `Y_n`, `n >= 1`.
    pub fn y(&self, n: usize) -> f64 {
        self.y.get(n.wrapping_sub(1)).copied().unwrap_or(0.0)
    }

    pub fn x_weights(&self) -> &[f64] {
        &self.x
    }

    pub fn y_weights(&self) -> &[f64] {
        &self.y
    }

    fn len(&self) -> usize {
        self.x.len().max(self.y.len()).max(1)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    fn value(self) -> f64 {
        match self {
            Sign::Plus => 1.0,
            Sign::Minus => -1.0,
        }
    }
}

/// `Σ (X_n h_n + Y_n g_n)` with `h_1 = z`, `h_n = z ± (B/A_n) z^n`, `g_n = z + (B/A_n) conj(z^n)`.
/// The minus sign gives a signed-form map.
pub fn convex_combination(w: &CombinationWeights, p: SpiralParams, sign: Sign) -> Result<HarmonicMapSpec> {
    let order = w.len();
    let t = WeightTable::new(p, order);
    let a = (2..=order).map(|n| Complex64::new(sign.value() * w.x(n) * t.inverse_ratio(n), 0.0)).collect();
    let b = (1..=order).map(|n| Complex64::new(w.y(n) * t.inverse_ratio(n), 0.0)).collect();
    HarmonicMapSpec::new(a, b, order, sign == Sign::Minus)
}

/// Weights `X_n = B|a_n|/A_n`, `Y_n = B|b_n|/A_n`, `X_1 = 1 - ΣX_n - ΣY_n` of a signed-form map.
/// Recombining them with [`recombine`] reproduces the map.
pub fn decompose(m: &HarmonicMapSpec, p: SpiralParams) -> Result<CombinationWeights> {
    if !m.signed_form() {
        return Err(Error::Class("decompose"));
    }
    let nec = necessary_weighted_check(m, p, 0.0)?;
    let x1 = 1.0 - nec.sum;
    if x1 < -BUDGET_TOL {
        return Err(Error::DecompositionInfeasible(x1));
    }
    let t = WeightTable::new(p, m.order());
    let mut x = vec![x1.max(0.0)];
    x.extend((2..=m.order()).map(|n| m.a(n).norm() * t.inverse_ratio(n)));
    let y = (1..=m.order()).map(|n| m.b(n).norm() * t.inverse_ratio(n)).collect();
    CombinationWeights::new(x, y)
}

/// `Σ (X_n h_n + Y_n g_n)` with `h_1 = z`, `h_n = z - (A_n/B) z^n`, `g_n = z + (A_n/B) conj(z^n)`.
pub fn recombine(w: &CombinationWeights, p: SpiralParams) -> Result<HarmonicMapSpec> {
    let order = w.len();
    let t = WeightTable::new(p, order);
    let a = (2..=order).map(|n| Complex64::new(-w.x(n) * t.ratio(n), 0.0)).collect();
    let b = (1..=order).map(|n| Complex64::new(w.y(n) * t.ratio(n), 0.0)).collect();
    HarmonicMapSpec::new(a, b, order, true)
}

/// Multipliers `d_1, d_2, ..` with `|d_n| <= n B/A_n`.
#[derive(Debug, Clone, PartialEq)]
pub struct MultiplierSequence {
    d: Vec<Complex64>,
}

impl MultiplierSequence {
    pub fn new(d: Vec<Complex64>) -> Self {
        Self { d }
    }

    /// `d_n = n B/A_n` for `n = 1..=order`.
    pub fn maximal(p: SpiralParams, order: usize) -> Self {
        let t = WeightTable::new(p, order);
        Self { d: (1..=order).map(|n| Complex64::new(t.multiplier_bound(n), 0.0)).collect() }
    }

    pub fn d(&self, n: usize) -> Complex64 {
        self.d.get(n.wrapping_sub(1)).copied().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.d.len()
    }

    pub fn is_empty(&self) -> bool {
        self.d.is_empty()
    }

    /// First index whose multiplier exceeds `n B/A_n`.
    pub fn check(&self, p: SpiralParams) -> Result<()> {
        let t = WeightTable::new(p, self.d.len().max(1));
        for (i, d) in self.d.iter().enumerate() {
            let n = i + 1;
            let bound = t.multiplier_bound(n);
            if d.norm() > bound * (1.0 + BUDGET_TOL) {
                return Err(Error::Constraint(format!("|d_{n}| = {} > {n}B/A_{n} = {bound}", d.norm())));
            }
        }
        Ok(())
    }
}

/// `f = z + Σ d_n a_n z^n + conj(Σ d_n b_n z^n)` from a starlike `F`.
/// The result passes the sufficient coefficient test whenever `F` passes Silverman's.
pub fn multiplier_transfer(f: &HarmonicMapSpec, d: &MultiplierSequence, p: SpiralParams) -> Result<HarmonicMapSpec> {
    if f.closed_form().is_some() {
        return Err(Error::Hypothesis("multiplier transfer needs a coefficient-backed map".into()));
    }
    let s = silverman_check(f, BUDGET_TOL);
    if !s.pass {
        return Err(Error::Hypothesis(format!("input fails the Silverman test: sum = {}", s.sum)));
    }
    d.check(p)?;
    let order = f.order();
    let a = (2..=order).map(|n| d.d(n) * f.a(n)).collect();
    let b = (1..=order).map(|n| d.d(n) * f.b(n)).collect();
    HarmonicMapSpec::new(a, b, order, false)
}

/// The converse direction: a signed-form spirallike map satisfies the
/// unweighted necessary bound, so its coefficients define a starlike map.
pub fn starlike_preimage(f: &HarmonicMapSpec) -> Result<HarmonicMapSpec> {
    let sharp = necessary_sharp_check(f, BUDGET_TOL)?;
    if !sharp.tail.pass {
        return Err(Error::Hypothesis(format!(
            "signed-form map violates the necessary bound: sum = {}",
            sharp.tail.sum
        )));
    }
    Ok(f.clone())
}

/// Exponent convention for `h(z)/z = (g(z)/z)^μ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Orientation {
    /// `μ = e^{iλ} cos λ`: starlike `g` gives `Re(e^{-iλ} z h'/h) > 0`.
    #[default]
    Direct,
    /// `μ = e^{-iλ} cos λ`: starlike `g` gives `Re(e^{iλ} z h'/h) > 0`.
    Mirrored,
}

impl Orientation {
    pub fn exponent(self, p: SpiralParams) -> Complex64 {
        let l = p.lambda();
        let e = match self {
            Orientation::Direct => Complex64::from_polar(1.0, l),
            Orientation::Mirrored => Complex64::from_polar(1.0, -l),
        };
        e * l.cos()
    }

    /// The rotation under which the output is positive: `e^{-iλ}` or `e^{iλ}`.
    pub fn rotation(self, p: SpiralParams) -> Complex64 {
        match self {
            Orientation::Direct => p.rotation(),
            Orientation::Mirrored => p.rotation().conj(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PowerTransform {
    pub h: PowerSeries,
    pub mu: Complex64,
    pub orientation: Orientation,
    /// Minimum of `Re(rotation · z h'/h)` on a coarse probe grid.
    pub probe: Witness,
}

impl PowerTransform {
    pub fn probe_pass(&self) -> bool {
        self.probe.value > 0.0
    }
}

fn probe_grid() -> GridSpec {
    GridSpec { r_min: 0.05, r_max: 0.9, n_radii: 8, n_angles: 32, margin_eps: 0.0 }
}

fn check_normalized(g: &PowerSeries) -> Result<()> {
    if g.order() < 1 {
        return Err(Error::EmptyDerivative);
    }
    if g.coeff(0).norm() > NORMALIZATION_TOL {
        return Err(Error::Normalization { expected: 0.0, found: g.coeff(0) });
    }
    let one = Complex64::new(1.0, 0.0);
    if (g.coeff(1) - one).norm() > NORMALIZATION_TOL {
        return Err(Error::Normalization { expected: 1.0, found: g.coeff(1) });
    }
    Ok(())
}

/// `h = z (g/z)^μ` for analytic `g` with `g(0) = 0`, `g'(0) = 1`.
pub fn spirallike_power_transform(g: &PowerSeries, p: SpiralParams, orientation: Orientation) -> Result<PowerTransform> {
    check_normalized(g)?;
    let mu = orientation.exponent(p);
    let h = g.div_z()?.pow(mu)?.mul_z();
    let rot = orientation.rotation(p);
    let dh = h.differentiate()?;
    let probe = min_over(&probe_grid().points(), |z| Ok((rot * z * dh.evaluate(z) / h.evaluate(z)).re))?;
    Ok(PowerTransform { h, mu, orientation, probe })
}

/// Largest discrepancy between `Re(rotation · z h'/h)` and `cos λ Re(z g'/g)` on the grid, with
/// `h` the power transform of `g`.
pub fn thm211_identity_check(g: &PowerSeries, p: SpiralParams, orientation: Orientation, grid: &GridSpec) -> Result<Witness> {
    grid.validate()?;
    let t = spirallike_power_transform(g, p, orientation)?;
    let rot = orientation.rotation(p);
    let cos = p.lambda().cos();
    let guard = grid.margin_eps;
    let w = min_over(&grid.points(), |z| {
        let (gv, gd) = g.evaluate_with_derivative(z);
        let (hv, hd) = t.h.evaluate_with_derivative(z);
        for v in [gv, hv] {
            if v.norm() < guard {
                return Err(Error::NearZero { z, modulus: v.norm() });
            }
        }
        let lhs = (rot * z * hd / hv).re;
        let rhs = cos * (z * gd / gv).re;
        Ok(-(lhs - rhs).abs())
    })?;
    Ok(Witness { value: -w.value, at: w.at })
}

/// Samples `F_ε(z) = z ((H + εG)/z)^{e^{iλ} cos λ}` over `ε = e^{2πik/n_eps}` and reports the
/// minimum of `Re(e^{-iλ} z F_ε'/F_ε)` on the grid. A positive minimum is sampled evidence
/// that `z + Σ d_n a_n z^n + conj(Σ d_n b_n z^n)` is spirallike for every admissible `d`.
///
/// `F_ε` is built from `(H + εG)/(c_0 z)` with `c_0 = 1 + ε G'(0)`; the constant factor
/// `c_0^μ` does not change `z F_ε'/F_ε`.
pub fn f_epsilon_family_check(
    big_h: &PowerSeries,
    big_g: &PowerSeries,
    p: SpiralParams,
    grid: &GridSpec,
    n_eps: usize,
) -> Result<EpsilonCheck> {
    grid.validate()?;
    check_normalized(big_h)?;
    check_family_shape(big_h, big_g)?;
    if n_eps == 0 {
        return Err(Error::InvalidParameter { name: "n_eps".into(), reason: "must be positive".into() });
    }
    let mu = Orientation::Direct.exponent(p);
    let rot = p.rotation();
    let order = big_h.order().min(big_g.order().max(1));
    let h = big_h.with_order(order);
    let g = big_g.with_order(order);
    let points = grid.points();
    let mut best = EpsilonCheck { min: f64::INFINITY, at: Complex64::default(), eps: Complex64::new(1.0, 0.0), pass: false };
    for k in 0..n_eps {
        let eps = Complex64::from_polar(1.0, std::f64::consts::TAU * k as f64 / n_eps as f64);
        let s = h.add(&g.scale(eps)).div_z()?;
        let c0 = s.coeff(0);
        if c0.norm() < grid.margin_eps.max(NORMALIZATION_TOL) {
            return Err(Error::NearZeroEpsilon { eps, z: Complex64::default() });
        }
        let f = s.scale(c0.inv()).pow(mu)?.mul_z();
        let df = f.differentiate()?;
        for &z in &points {
            let fv = f.evaluate(z);
            if fv.norm() < grid.margin_eps {
                return Err(Error::NearZeroEpsilon { eps, z });
            }
            let v = (rot * z * df.evaluate(z) / fv).re;
            if v < best.min {
                best = EpsilonCheck { min: v, at: z, eps, pass: false };
            }
        }
    }
    best.pass = best.min > -grid.margin_eps;
    Ok(best)
}

fn check_family_shape(big_h: &PowerSeries, big_g: &PowerSeries) -> Result<()> {
    let tol = NORMALIZATION_TOL;
    for n in 2..=big_h.order() {
        let c = big_h.coeff(n);
        if c.im.abs() > tol || c.re > tol {
            return Err(Error::SignedForm(format!("H coefficient {n} = {c}")));
        }
    }
    if big_g.coeff(0).norm() > tol {
        return Err(Error::Normalization { expected: 0.0, found: big_g.coeff(0) });
    }
    for n in 1..=big_g.order() {
        let c = big_g.coeff(n);
        if c.im.abs() > tol || c.re < -tol {
            return Err(Error::SignedForm(format!("G coefficient {n} = {c}")));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::criteria::{pointwise_spiral_check, sufficient_check};
    use approx::assert_abs_diff_eq;
    use std::f64::consts::{FRAC_PI_3, FRAC_PI_4, FRAC_PI_8};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn lam(x: f64) -> SpiralParams {
        SpiralParams::new(x).unwrap()
    }

    fn koebe(order: usize) -> PowerSeries {
        PowerSeries::from_fn(order, |n| c(n as f64, 0.0)).unwrap()
    }

    #[test]
    fn extremal_examples() {
        let p = lam(0.8);
        let id = extremal_family(&[], &[], p, 8).unwrap();
        assert_eq!(id, HarmonicMapSpec::identity(8));

        let f7 = extremal_family(&[], &[c(1.0, 0.0)], p, 4).unwrap();
        let q = WeightTable::new(p, 1).inverse_ratio(1);
        assert_abs_diff_eq!(f7.b(1).re, q, epsilon = 1e-15);
        assert_abs_diff_eq!(sufficient_check(&f7, p, 0.0).sum, 1.0, epsilon = 1e-12);

        let err = extremal_family(&[c(0.7, 0.0)], &[c(0.5, 0.0)], p, 4).unwrap_err();
        assert!(matches!(err, Error::Constraint(_)));
    }

    #[test]
    fn extremal_reproduces_f3_shape() {
        let p = lam(0.5);
        let alpha = 0.3;
        let w = WeightTable::new(p, 3);
        let m = extremal_family(&[], &[c(alpha, 0.0), c(0.0, 0.0), c(1.0 - alpha, 0.0)], p, 3).unwrap();
        assert_abs_diff_eq!(m.b(1).re, w.b() * alpha / w.a(1), epsilon = 1e-15);
        assert_abs_diff_eq!(m.b(3).re, w.b() / w.a(3) * (1.0 - alpha), epsilon = 1e-15);
        assert_abs_diff_eq!(sufficient_check(&m, p, 0.0).sum, 1.0, epsilon = 1e-12);
    }

    #[test]
    fn combination_examples() {
        let p = lam(FRAC_PI_3);
        let w = CombinationWeights::new(vec![1.0], vec![]).unwrap();
        assert_eq!(convex_combination(&w, p, Sign::Plus).unwrap(), HarmonicMapSpec::identity(1));

        let w = CombinationWeights::new(vec![0.0, 1.0], vec![]).unwrap();
        let m = convex_combination(&w, p, Sign::Plus).unwrap();
        assert_abs_diff_eq!(m.a(2).re, WeightTable::new(p, 2).inverse_ratio(2), epsilon = 1e-15);
        let s = sufficient_check(&m, p, 1e-12);
        assert_abs_diff_eq!(s.sum, 1.0, epsilon = 1e-12);
        assert!(s.pass);

        let w = CombinationWeights::new(vec![0.2, 0.3, 0.1], vec![0.25, 0.15]).unwrap();
        let m = convex_combination(&w, p, Sign::Minus).unwrap();
        assert!(m.signed_form());
        assert_abs_diff_eq!(sufficient_check(&m, p, 0.0).sum, 0.8, epsilon = 1e-12);

        assert!(CombinationWeights::new(vec![0.5], vec![0.4]).is_err());
        assert!(CombinationWeights::new(vec![1.2], vec![-0.2]).is_err());
    }

    #[test]
    fn decompose_examples() {
        let p = lam(FRAC_PI_4);
        let id = HarmonicMapSpec::identity(3).into_signed().unwrap();
        let w = decompose(&id, p).unwrap();
        assert_eq!(w.x(1), 1.0);
        assert!(w.y_weights().iter().all(|&v| v == 0.0));

        let q = FRAC_PI_8.tan();
        let f6 = HarmonicMapSpec::signed(&[], &[q], 2).unwrap();
        let w = decompose(&f6, p).unwrap();
        assert_abs_diff_eq!(w.y(1), q * q, epsilon = 1e-15);
        assert_abs_diff_eq!(w.x(1), 1.0 - q * q, epsilon = 1e-15);

        let back = recombine(&w, p).unwrap();
        for n in 1..=2 {
            assert_abs_diff_eq!((back.b(n) - f6.b(n)).norm(), 0.0, epsilon = 1e-12);
            assert_abs_diff_eq!((back.a(n) - f6.a(n)).norm(), 0.0, epsilon = 1e-12);
        }

        let heavy = HarmonicMapSpec::signed(&[6.0], &[], 2).unwrap();
        assert!(matches!(decompose(&heavy, p), Err(Error::DecompositionInfeasible(_))));
    }

    #[test]
    fn multiplier_examples() {
        let p = lam(FRAC_PI_3);
        let alpha = 0.6;
        let big_f = HarmonicMapSpec::new(vec![], vec![c(alpha, 0.0), c(0.5 * (1.0 - alpha), 0.0)], 2, false).unwrap();

        let zero = MultiplierSequence::new(vec![c(0.0, 0.0); 2]);
        assert_eq!(multiplier_transfer(&big_f, &zero, p).unwrap(), HarmonicMapSpec::identity(2));

        let f5 = multiplier_transfer(&big_f, &MultiplierSequence::maximal(p, 2), p).unwrap();
        let w = WeightTable::new(p, 2);
        assert_abs_diff_eq!(f5.b(1).re, w.b() * alpha / w.a(1), epsilon = 1e-15);
        assert_abs_diff_eq!(f5.b(2).re, w.b() / w.a(2) * (1.0 - alpha), epsilon = 1e-15);
        assert!(sufficient_check(&f5, p, 1e-12).pass);

        let bad = MultiplierSequence::new(vec![c(0.1, 0.0), c(0.0, 0.0), c(3.0, 0.0)]);
        let msg = multiplier_transfer(&big_f, &bad, p).unwrap_err().to_string();
        assert!(msg.contains("|d_3|"), "{msg}");
    }

    #[test]
    fn converse_returns_starlike_map() {
        let f = HarmonicMapSpec::signed(&[0.1], &[0.3], 2).unwrap();
        let big_f = starlike_preimage(&f).unwrap();
        assert!(silverman_check(&big_f, 0.0).pass);
        let bad = HarmonicMapSpec::signed(&[0.5], &[0.5], 2).unwrap();
        assert!(starlike_preimage(&bad).is_err());
    }

    #[test]
    fn power_transform_at_zero_is_identity() {
        let g = PowerSeries::from_real(&[0.0, 1.0, -0.3, 0.1]).unwrap();
        let t = spirallike_power_transform(&g, lam(0.0), Orientation::Direct).unwrap();
        assert!(t.h.max_abs_diff(&g) < 1e-12);
    }

    #[test]
    fn power_transform_of_koebe() {
        let g = koebe(64);
        let t = spirallike_power_transform(&g, lam(-FRAC_PI_4), Orientation::Direct).unwrap();
        assert_abs_diff_eq!((t.mu - c(0.5, -0.5)).norm(), 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!((t.h.coeff(2) - c(1.0, -1.0)).norm(), 0.0, epsilon = 1e-10);
        assert!(t.probe_pass());

        let m = spirallike_power_transform(&g, lam(FRAC_PI_4), Orientation::Mirrored).unwrap();
        assert!(m.h.max_abs_diff(&t.h) < 1e-15);
        assert!(m.probe_pass());

        assert!(spirallike_power_transform(&PowerSeries::geometric(5), lam(0.1), Orientation::Direct).is_err());
    }

    #[test]
    fn identity_check_trivial_cases() {
        let grid = GridSpec { n_radii: 8, n_angles: 32, ..GridSpec::default() };
        let g = koebe(256);
        let w = thm211_identity_check(&g, lam(0.0), Orientation::Direct, &grid).unwrap();
        assert!(w.value < 1e-9);
        let z = PowerSeries::identity(8);
        let w = thm211_identity_check(&z, lam(1.1), Orientation::Direct, &grid).unwrap();
        assert!(w.value < 1e-15);
    }

    #[test]
    fn f_epsilon_examples() {
        let grid = GridSpec::default();
        let p = lam(FRAC_PI_4);
        let z = PowerSeries::identity(16);
        let r = f_epsilon_family_check(&z, &PowerSeries::zero(16), p, &grid, 8).unwrap();
        assert_abs_diff_eq!(r.min, FRAC_PI_4.cos(), epsilon = 1e-12);

        let g = PowerSeries::identity(16).scale(c(0.4, 0.0));
        let r = f_epsilon_family_check(&z, &g, p, &grid, 8).unwrap();
        assert_abs_diff_eq!(r.min, FRAC_PI_4.cos(), epsilon = 1e-12);

        let h = PowerSeries::from_real(&[0.0, 1.0, -0.25]).unwrap().with_order(64);
        let g = PowerSeries::from_real(&[0.0, 0.25]).unwrap().with_order(64);
        let r = f_epsilon_family_check(&h, &g, p, &grid, 64).unwrap();
        assert!(r.pass && r.min > 0.0, "{r:?}");

        // G = z makes H + εG vanish to first order at ε = -1
        let r = f_epsilon_family_check(&z, &PowerSeries::identity(16), p, &grid, 8);
        assert!(matches!(r, Err(Error::NearZeroEpsilon { .. })));

        let bad = PowerSeries::from_real(&[0.0, 1.0, 0.25]).unwrap();
        assert!(f_epsilon_family_check(&bad, &PowerSeries::zero(2), p, &grid, 8).is_err());
    }

    #[test]
    fn sampled_spirallike_after_transfer() {
        let p = lam(FRAC_PI_3);
        let big_f = HarmonicMapSpec::new(vec![], vec![c(0.2, 0.0), c(0.4, 0.0)], 2, false).unwrap();
        let f = multiplier_transfer(&big_f, &MultiplierSequence::maximal(p, 2), p).unwrap();
        assert!(pointwise_spiral_check(&f, p, &GridSpec::default()).unwrap().pass);
    }
}
