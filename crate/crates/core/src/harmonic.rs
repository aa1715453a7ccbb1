//! Harmonic maps `f = h + conj(g)` on the unit disk.
//!
//! A map is stored through the coefficients `a_2..a_N` of
//! `h(z) = z + sum a_n z^n` and `b_1..b_N` of `g(z) = sum b_n z^n`.
//! Maps whose coefficients do not decay carry a [`ClosedForm`] that replaces
//! the truncated series for pointwise evaluation.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::grid::{min_over, GridSpec, Witness};
use crate::series::PowerSeries;

const SIGN_TOL: f64 = 1e-12;

/// Non-polynomial maps with exact evaluators for `h`, `h'`, `g`, `g'`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ClosedForm {
    /// `h(z) = z (1 - z)^(-exponent)`, `g = 0`. Exponent 2 is the Koebe map,
    /// exponent `1 - i` is `z (1 - z)^(i - 1)`.
    KoebePower { exponent: Complex64 },
    /// `h = (z - z^2/2 + z^3/6)/(1-z)^3`, `g = (z^2/2 + z^3/6)/(1-z)^3`.
    HarmonicKoebe,
    /// `h = (z - z^2/2)/(1-z)^2`, `g = (-z^2/2)/(1-z)^2`.
    HalfPlane,
}

/// `h(z), h'(z), g(z), g'(z)` at one point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Parts {
    pub h: Complex64,
    pub dh: Complex64,
    pub g: Complex64,
    pub dg: Complex64,
}

impl Parts {
    pub fn f(&self) -> Complex64 {
        self.h + self.g.conj()
    }

    /// `z h'(z) - conj(z g'(z))`.
    pub fn d(&self, z: Complex64) -> Complex64 {
        z * self.dh - (z * self.dg).conj()
    }

    pub fn jacobian(&self) -> f64 {
        self.dh.norm_sqr() - self.dg.norm_sqr()
    }
}

impl std::ops::Add for Parts {
    type Output = Parts;
    fn add(self, o: Parts) -> Parts {
        Parts { h: self.h + o.h, dh: self.dh + o.dh, g: self.g + o.g, dg: self.dg + o.dg }
    }
}

impl ClosedForm {
    pub fn parts(&self, z: Complex64) -> Parts {
        let one = Complex64::new(1.0, 0.0);
        let w = one - z;
        match *self {
            ClosedForm::KoebePower { exponent } => {
                let p = (-exponent * w.ln()).exp();
                Parts {
                    h: z * p,
                    dh: p * (one + exponent * z / w),
                    g: Complex64::default(),
                    dg: Complex64::default(),
                }
            }
            ClosedForm::HarmonicKoebe => {
                let w3 = w * w * w;
                let w4 = w3 * w;
                let p = z - z * z / 2.0 + z * z * z / 6.0;
                let dp = one - z + z * z / 2.0;
                let q = z * z / 2.0 + z * z * z / 6.0;
                let dq = z + z * z / 2.0;
                Parts {
                    h: p / w3,
                    dh: dp / w3 + p * 3.0 / w4,
                    g: q / w3,
                    dg: dq / w3 + q * 3.0 / w4,
                }
            }
            ClosedForm::HalfPlane => {
                let w2 = w * w;
                let w3 = w2 * w;
                let p = z - z * z / 2.0;
                let dp = one - z;
                let q = -z * z / 2.0;
                let dq = -z;
                Parts {
                    h: p / w2,
                    dh: dp / w2 + p * 2.0 / w3,
                    g: q / w2,
                    dg: dq / w2 + q * 2.0 / w3,
                }
            }
        }
    }
}

/// A normalized harmonic map in the class H (or H' when `signed_form` is set).
#[derive(Debug, Clone, PartialEq)]
pub struct HarmonicMapSpec {
    a: Vec<Complex64>,
    b: Vec<Complex64>,
    order: usize,
    signed_form: bool,
    closed_form: Option<ClosedForm>,
    h: PowerSeries,
    g: PowerSeries,
    dh: PowerSeries,
    dg: PowerSeries,
}

impl HarmonicMapSpec {
    /// `a` holds `a_2, a_3, ..` and `b` holds `b_1, b_2, ..`; both are zero
    /// padded to `order`. Longer inputs raise the order instead of being cut.
    pub fn new(a: Vec<Complex64>, b: Vec<Complex64>, order: usize, signed_form: bool) -> Result<Self> {
        let order = order.max(a.len() + 1).max(b.len()).max(1);
        let finite = |c: &Complex64| c.re.is_finite() && c.im.is_finite();
        if !a.iter().all(finite) || !b.iter().all(finite) {
            return Err(Error::NonFinite("map coefficients"));
        }
        let mut a = a;
        let mut b = b;
        a.resize(order - 1, Complex64::default());
        b.resize(order, Complex64::default());
        if signed_form {
            check_signed(&a, &b)?;
        }

        let mut hc = Vec::with_capacity(order + 1);
        hc.push(Complex64::default());
        hc.push(Complex64::new(1.0, 0.0));
        hc.extend_from_slice(&a);
        let mut gc = Vec::with_capacity(order + 1);
        gc.push(Complex64::default());
        gc.extend_from_slice(&b);
        let h = PowerSeries::from_vec_unchecked(hc);
        let g = PowerSeries::from_vec_unchecked(gc);
        let dh = h.differentiate()?;
        let dg = g.differentiate()?;
        Ok(Self { a, b, order, signed_form, closed_form: None, h, g, dh, dg })
    }

    /// Signed-form map `z - sum |a_n| z^n + conj(sum |b_n| z^n)` from the moduli.
    pub fn signed(a_abs: &[f64], b_abs: &[f64], order: usize) -> Result<Self> {
        Self::new(
            a_abs.iter().map(|&x| Complex64::new(-x.abs(), 0.0)).collect(),
            b_abs.iter().map(|&x| Complex64::new(x.abs(), 0.0)).collect(),
            order,
            true,
        )
    }

    pub fn identity(order: usize) -> Self {
        Self::new(Vec::new(), Vec::new(), order, false).expect("identity map is valid")
    }

    /// Builds the map from series `h` (with `h_0 = 0`, `h_1 = 1`) and `g` (with `g_0 = 0`).
    pub fn from_series(h: &PowerSeries, g: &PowerSeries) -> Result<Self> {
        let tol = crate::series::NORMALIZATION_TOL;
        if h.coeff(0).norm() > tol || (h.coeff(1) - Complex64::new(1.0, 0.0)).norm() > tol {
            return Err(Error::Normalization { expected: 1.0, found: h.coeff(1) });
        }
        if g.coeff(0).norm() > tol {
            return Err(Error::Normalization { expected: 0.0, found: g.coeff(0) });
        }
        let order = h.order().max(g.order());
        let a = (2..=h.order()).map(|n| h.coeff(n)).collect();
        let b = (1..=g.order()).map(|n| g.coeff(n)).collect();
        Self::new(a, b, order, false)
    }

    pub fn with_closed_form(mut self, cf: ClosedForm) -> Self {
        self.closed_form = Some(cf);
        self
    }

    /// Re-tags as signed form; fails if any coefficient has the wrong sign.
    pub fn into_signed(mut self) -> Result<Self> {
        check_signed(&self.a, &self.b)?;
        self.signed_form = true;
        Ok(self)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn signed_form(&self) -> bool {
        self.signed_form
    }

    pub fn closed_form(&self) -> Option<ClosedForm> {
        self.closed_form
    }

    /// `a_n` for `n >= 1` (`a_1 = 1`).
    pub fn a(&self, n: usize) -> Complex64 {
        match n {
            0 => Complex64::default(),
            1 => Complex64::new(1.0, 0.0),
            _ => self.a.get(n - 2).copied().unwrap_or_default(),
        }
    }

    /// `b_n` for `n >= 1`.
    pub fn b(&self, n: usize) -> Complex64 {
        if n == 0 {
            return Complex64::default();
        }
        self.b.get(n - 1).copied().unwrap_or_default()
    }

    /// `a_2..a_N`.
    pub fn a_coeffs(&self) -> &[Complex64] {
        &self.a
    }

    /// `b_1..b_N`.
    pub fn b_coeffs(&self) -> &[Complex64] {
        &self.b
    }

    pub fn h_series(&self) -> &PowerSeries {
        &self.h
    }

    pub fn g_series(&self) -> &PowerSeries {
        &self.g
    }

    /// True when `g` has no nonzero coefficient.
    pub fn is_analytic(&self) -> bool {
        match self.closed_form {
            Some(ClosedForm::KoebePower { .. }) => true,
            Some(_) => false,
            None => self.b.iter().all(|c| c.norm() == 0.0),
        }
    }

    /// Evaluates `h, h', g, g'` without the domain check.
    pub fn parts(&self, z: Complex64) -> Parts {
        if let Some(cf) = self.closed_form {
            return cf.parts(z);
        }
        Parts {
            h: self.h.evaluate(z),
            dh: self.dh.evaluate(z),
            g: self.g.evaluate(z),
            dg: self.dg.evaluate(z),
        }
    }

    pub fn eval_f(&self, z: Complex64) -> Result<Complex64> {
        in_disk(z)?;
        Ok(self.parts(z).f())
    }

    /// `Df(z) = z f_z - conj(z) f_zbar = z h'(z) - conj(z g'(z))`.
    pub fn d_operator(&self, z: Complex64) -> Result<Complex64> {
        in_disk(z)?;
        Ok(self.parts(z).d(z))
    }

    pub fn jacobian(&self, z: Complex64) -> Result<f64> {
        in_disk(z)?;
        Ok(self.parts(z).jacobian())
    }
}

fn check_signed(a: &[Complex64], b: &[Complex64]) -> Result<()> {
    for (i, c) in a.iter().enumerate() {
        if c.im.abs() > SIGN_TOL || c.re > SIGN_TOL {
            return Err(Error::SignedForm(format!("a_{} = {}", i + 2, c)));
        }
    }
    for (i, c) in b.iter().enumerate() {
        if c.im.abs() > SIGN_TOL || c.re < -SIGN_TOL {
            return Err(Error::SignedForm(format!("b_{} = {}", i + 1, c)));
        }
    }
    Ok(())
}

fn in_disk(z: Complex64) -> Result<()> {
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(Error::NonFinite("evaluation point"));
    }
    if z.norm() >= 1.0 {
        return Err(Error::Domain(z));
    }
    Ok(())
}

/// Result of a grid minimum with its pass flag.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridCheck {
    pub min: f64,
    pub at: Complex64,
    pub pass: bool,
}

impl GridCheck {
    pub(crate) fn from_witness(w: Witness, pass: bool) -> Self {
        Self { min: w.value, at: w.at, pass }
    }
}

/// Minimum Jacobian over the grid; passes when it exceeds `margin_eps`.
pub fn sense_preserving_on_grid(m: &HarmonicMapSpec, grid: &GridSpec) -> Result<GridCheck> {
    grid.validate()?;
    let w = min_over(&grid.points(), |z| Ok(m.parts(z).jacobian()))?;
    Ok(GridCheck::from_witness(w, w.value > grid.margin_eps))
}

/// Minimum of `|f|` over the grid; passes when it exceeds `margin_eps`.
pub fn nonvanishing_on_grid(m: &HarmonicMapSpec, grid: &GridSpec) -> Result<GridCheck> {
    grid.validate()?;
    let w = min_over(&grid.points(), |z| Ok(m.parts(z).f().norm()))?;
    Ok(GridCheck::from_witness(w, w.value > grid.margin_eps))
}
