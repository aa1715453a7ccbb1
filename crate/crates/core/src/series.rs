//! Truncated complex power series.
//!
//! A [`PowerSeries`] of truncation order `N` stores exactly `N + 1`
//! coefficients `c_0..c_N`. Binary operations truncate to the smaller of the
//! two orders. `log`, `exp` and complex powers use the formal recurrences
//! obtained from `L' = s'/s` and `E' = L'E`, so results are exact up to
//! rounding at every retained order.

use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Tolerance on the constant-term preconditions of `log`, `exp` and `pow`.
pub const NORMALIZATION_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub struct PowerSeries {
    coeffs: Vec<Complex64>,
}

impl PowerSeries {
    /// Builds a series from `c_0..c_N`. Rejects empty input and non-finite coefficients.
    pub fn new(coeffs: Vec<Complex64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::InvalidParameter {
                name: "coeffs".into(),
                reason: "a series needs at least the constant term".into(),
            });
        }
        if coeffs.iter().any(|c| !c.re.is_finite() || !c.im.is_finite()) {
            return Err(Error::NonFinite("series coefficients"));
        }
        Ok(Self { coeffs })
    }

    pub(crate) fn from_vec_unchecked(coeffs: Vec<Complex64>) -> Self {
        debug_assert!(!coeffs.is_empty());
        Self { coeffs }
    }

    pub fn from_real(coeffs: &[f64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect())
    }

    /// Series with `c_n = f(n)` for `n = 0..=order`.
    pub fn from_fn(order: usize, f: impl FnMut(usize) -> Complex64) -> Result<Self> {
        Self::new((0..=order).map(f).collect())
    }

    pub fn zero(order: usize) -> Self {
        Self::from_vec_unchecked(vec![Complex64::new(0.0, 0.0); order + 1])
    }

    pub fn constant(value: Complex64, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = value;
        s
    }

    pub fn one(order: usize) -> Self {
        Self::constant(Complex64::new(1.0, 0.0), order)
    }

    /// The identity function `z`.
    pub fn identity(order: usize) -> Self {
        let mut s = Self::zero(order);
        if order >= 1 {
            s.coeffs[1] = Complex64::new(1.0, 0.0);
        }
        s
    }

    /// `1 / (1 - z) = sum z^n`.
    pub fn geometric(order: usize) -> Self {
        Self::from_vec_unchecked(vec![Complex64::new(1.0, 0.0); order + 1])
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Coefficient of `z^n`; zero beyond the truncation order.
    pub fn coeff(&self, n: usize) -> Complex64 {
        self.coeffs.get(n).copied().unwrap_or_default()
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order());
        Self::from_vec_unchecked(self.coeffs[..=order].to_vec())
    }

    /// Extends with zeros (or truncates) to exactly `order`.
    pub fn with_order(&self, order: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(order + 1, Complex64::default());
        Self::from_vec_unchecked(coeffs)
    }

    pub fn scale(&self, k: Complex64) -> Self {
        Self::from_vec_unchecked(self.coeffs.iter().map(|&c| c * k).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        Self::from_vec_unchecked((0..=n).map(|i| self.coeffs[i] + other.coeffs[i]).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        Self::from_vec_unchecked((0..=n).map(|i| self.coeffs[i] - other.coeffs[i]).collect())
    }

    /// Cauchy product truncated at the smaller order.
    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let out = (0..=n)
            .map(|k| (0..=k).map(|j| self.coeffs[j] * other.coeffs[k - j]).sum())
            .collect();
        Self::from_vec_unchecked(out)
    }

    /// Multiplication by `z`; the order grows by one.
    pub fn mul_z(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Complex64::default());
        coeffs.extend_from_slice(&self.coeffs);
        Self::from_vec_unchecked(coeffs)
    }

    /// Division by `z`; requires `c_0 = 0` and order at least 1.
    pub fn div_z(&self) -> Result<Self> {
        if self.order() == 0 {
            return Err(Error::EmptyDerivative);
        }
        let c0 = self.coeffs[0];
        if c0.norm() > NORMALIZATION_TOL {
            return Err(Error::Normalization { expected: 0.0, found: c0 });
        }
        Ok(Self::from_vec_unchecked(self.coeffs[1..].to_vec()))
    }

    pub fn differentiate(&self) -> Result<Self> {
        if self.order() == 0 {
            return Err(Error::EmptyDerivative);
        }
        Ok(Self::from_vec_unchecked(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(n, &c)| c * n as f64)
                .collect(),
        ))
    }

    /// Horner evaluation of the truncated polynomial. Intended for `|z| <= 1`.
    pub fn evaluate(&self, z: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::default(), |acc, &c| acc * z + c)
    }

    /// Value and first derivative in one Horner pass.
    pub fn evaluate_with_derivative(&self, z: Complex64) -> (Complex64, Complex64) {
        let mut value = Complex64::default();
        let mut deriv = Complex64::default();
        for &c in self.coeffs.iter().rev() {
            deriv = deriv * z + value;
            value = value * z + c;
        }
        (value, deriv)
    }

    /// Principal logarithm of a series with `c_0 = 1`; the result has zero constant term.
    pub fn log(&self) -> Result<Self> {
        let one = Complex64::new(1.0, 0.0);
        let c0 = self.coeffs[0];
        if (c0 - one).norm() > NORMALIZATION_TOL {
            return Err(Error::Normalization { expected: 1.0, found: c0 });
        }
        let s = &self.coeffs;
        let n_max = self.order();
        let mut l = vec![Complex64::default(); n_max + 1];
        // n l_n = n s_n - sum_{k=1}^{n-1} k l_k s_{n-k}
        for n in 1..=n_max {
            let mut acc: Complex64 = (1..n).map(|k| l[k] * s[n - k] * k as f64).sum();
            acc /= n as f64;
            l[n] = s[n] - acc;
        }
        Ok(Self::from_vec_unchecked(l))
    }

    /// Exponential of a series with `c_0 = 0`.
    pub fn exp(&self) -> Result<Self> {
        let c0 = self.coeffs[0];
        if c0.norm() > NORMALIZATION_TOL {
            return Err(Error::Normalization { expected: 0.0, found: c0 });
        }
        let s = &self.coeffs;
        let n_max = self.order();
        let mut e = vec![Complex64::default(); n_max + 1];
        e[0] = Complex64::new(1.0, 0.0);
        // n e_n = sum_{k=1}^{n} k s_k e_{n-k}
        for n in 1..=n_max {
            let acc: Complex64 = (1..=n).map(|k| s[k] * e[n - k] * k as f64).sum();
            e[n] = acc / n as f64;
        }
        Ok(Self::from_vec_unchecked(e))
    }

    /// `s^mu = exp(mu log s)` on the principal branch; requires `c_0 = 1`.
    pub fn pow(&self, mu: Complex64) -> Result<Self> {
        self.log()?.scale(mu).exp()
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let n = self.order().max(other.order());
        (0..=n)
            .map(|i| (self.coeff(i) - other.coeff(i)).norm())
            .fold(0.0, f64::max)
    }
}

impl Add for &PowerSeries {
    type Output = PowerSeries;
    fn add(self, rhs: Self) -> PowerSeries {
        PowerSeries::add(self, rhs)
    }
}

impl Sub for &PowerSeries {
    type Output = PowerSeries;
    fn sub(self, rhs: Self) -> PowerSeries {
        PowerSeries::sub(self, rhs)
    }
}

impl Mul for &PowerSeries {
    type Output = PowerSeries;
    fn mul(self, rhs: Self) -> PowerSeries {
        PowerSeries::mul(self, rhs)
    }
}

impl Neg for &PowerSeries {
    type Output = PowerSeries;
    fn neg(self) -> PowerSeries {
        self.scale(Complex64::new(-1.0, 0.0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;

    const N: usize = 64;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    // (1 - z)^(-p) by the generalized binomial recurrence, independent of log/exp.
    fn binomial_oracle(p: Complex64, order: usize) -> Vec<Complex64> {
        let mut out = vec![c(1.0, 0.0)];
        for n in 1..=order {
            let prev = out[n - 1];
            out.push(prev * (p + (n - 1) as f64) / n as f64);
        }
        out
    }

    fn one_minus_z(order: usize) -> PowerSeries {
        PowerSeries::from_real(&[1.0, -1.0]).unwrap().with_order(order)
    }

    #[test]
    fn add_examples() {
        let z = PowerSeries::identity(N);
        let two_z = &z + &z;
        assert_eq!(two_z.coeff(1), c(2.0, 0.0));
        assert_eq!(&z + &PowerSeries::zero(N), z);

        let p = PowerSeries::from_real(&[0.0, 1.0, 1.0]).unwrap();
        let q = PowerSeries::from_real(&[0.0, 1.0, -1.0]).unwrap();
        let sum = &p + &q;
        assert_eq!(sum.coeffs(), &[c(0.0, 0.0), c(2.0, 0.0), c(0.0, 0.0)]);
    }

    #[test]
    fn mul_examples() {
        let p = PowerSeries::from_real(&[1.0, 1.0]).unwrap().with_order(4);
        let q = one_minus_z(4);
        let prod = &p * &q;
        assert_eq!(prod.coeff(1), c(0.0, 0.0));
        assert_eq!(prod.coeff(2), c(-1.0, 0.0));

        let unit = &PowerSeries::geometric(N) * &one_minus_z(N);
        assert_eq!(unit, PowerSeries::one(N));

        let z = PowerSeries::identity(N);
        let z2 = &z * &z;
        assert_eq!(z2.coeff(2), c(1.0, 0.0));
        assert_eq!(z2.coeffs().iter().filter(|c| c.norm() > 0.0).count(), 1);
    }

    #[test]
    fn mixed_orders_truncate_to_min() {
        let p = PowerSeries::geometric(3);
        let q = PowerSeries::geometric(8);
        assert_eq!((&p + &q).order(), 3);
        assert_eq!((&p * &q).order(), 3);
    }

    #[test]
    fn differentiate_examples() {
        let dz = PowerSeries::identity(N).differentiate().unwrap();
        assert_eq!(dz.coeff(0), c(1.0, 0.0));
        assert_eq!(dz.order(), N - 1);

        let z3 = PowerSeries::from_real(&[0.0, 0.0, 0.0, 1.0]).unwrap();
        assert_eq!(z3.differentiate().unwrap().coeff(2), c(3.0, 0.0));

        let d = PowerSeries::geometric(N).differentiate().unwrap();
        assert_eq!(d.coeff(2), c(3.0, 0.0));

        assert_eq!(
            PowerSeries::one(0).differentiate(),
            Err(Error::EmptyDerivative)
        );
    }

    #[test]
    fn evaluate_examples() {
        let half = c(0.5, 0.0);
        assert_eq!(PowerSeries::identity(N).evaluate(half), half);

        let geo = PowerSeries::geometric(63);
        let closed = (c(1.0, 0.0) - half.powu(64)) / (c(1.0, 0.0) - half);
        assert_abs_diff_eq!(geo.evaluate(half).re, closed.re, epsilon = 1e-12);
        assert_abs_diff_eq!(geo.evaluate(half).re, 2.0, epsilon = 1e-12);

        let s = PowerSeries::new(vec![c(0.3, -0.2), c(1.0, 1.0), c(2.0, 0.0)]).unwrap();
        assert_eq!(s.evaluate(c(0.0, 0.0)), c(0.3, -0.2));
    }

    #[test]
    fn derivative_pass_matches_differentiate() {
        let s = PowerSeries::new(vec![c(0.3, -0.2), c(1.0, 1.0), c(2.0, 0.5), c(-0.7, 0.1)])
            .unwrap();
        let z = c(0.4, -0.3);
        let (v, d) = s.evaluate_with_derivative(z);
        assert_abs_diff_eq!((v - s.evaluate(z)).norm(), 0.0, epsilon = 1e-15);
        let d2 = s.differentiate().unwrap().evaluate(z);
        assert_abs_diff_eq!((d - d2).norm(), 0.0, epsilon = 1e-14);
    }

    #[test]
    fn log_examples() {
        assert_eq!(PowerSeries::one(N).log().unwrap(), PowerSeries::zero(N));

        // Mercator: log 1/(1-z) = sum z^n / n
        let l = PowerSeries::geometric(N).log().unwrap();
        assert_abs_diff_eq!(l.coeff(3).re, 1.0 / 3.0, epsilon = 1e-14);
        for n in 1..=N {
            assert_abs_diff_eq!((l.coeff(n) - c(1.0 / n as f64, 0.0)).norm(), 0.0, epsilon = 1e-13);
        }

        let bad = PowerSeries::constant(c(2.0, 0.0), 4);
        assert!(matches!(bad.log(), Err(Error::Normalization { .. })));
    }

    #[test]
    fn exp_examples() {
        assert_eq!(PowerSeries::zero(N).exp().unwrap(), PowerSeries::one(N));

        let e = PowerSeries::identity(N).exp().unwrap();
        assert_abs_diff_eq!(e.coeff(4).re, 1.0 / 24.0, epsilon = 1e-15);

        let bad = PowerSeries::one(4);
        assert!(matches!(bad.exp(), Err(Error::Normalization { .. })));
    }

    #[test]
    fn pow_examples() {
        let s = PowerSeries::geometric(N);
        let p0 = s.pow(c(0.0, 0.0)).unwrap();
        assert_abs_diff_eq!(p0.max_abs_diff(&PowerSeries::one(N)), 0.0, epsilon = 1e-15);

        let sq = s.pow(c(2.0, 0.0)).unwrap();
        assert_abs_diff_eq!(sq.coeff(2).re, 3.0, epsilon = 1e-12);
        for n in 0..=N {
            assert_abs_diff_eq!((sq.coeff(n) - c((n + 1) as f64, 0.0)).norm(), 0.0, epsilon = 1e-10);
        }

        // ((1-z)^-2)^((1-i)/2) = (1-z)^(i-1); coefficient of z is 1 - i
        let koebe_over_z = PowerSeries::from_fn(N, |n| c((n + 1) as f64, 0.0)).unwrap();
        let p = koebe_over_z.pow(c(0.5, -0.5)).unwrap();
        assert_abs_diff_eq!((p.coeff(1) - c(1.0, -1.0)).norm(), 0.0, epsilon = 1e-12);
        let oracle = binomial_oracle(c(1.0, -1.0), N);
        for (n, o) in oracle.iter().enumerate() {
            assert_abs_diff_eq!((p.coeff(n) - o).norm(), 0.0, epsilon = 1e-10);
        }
    }

    #[test]
    fn div_and_mul_z() {
        let s = PowerSeries::from_real(&[0.0, 1.0, 2.0]).unwrap();
        let q = s.div_z().unwrap();
        assert_eq!(q.coeffs(), &[c(1.0, 0.0), c(2.0, 0.0)]);
        assert_eq!(q.mul_z(), s);
        assert!(PowerSeries::one(3).div_z().is_err());
    }

    #[test]
    fn rejects_non_finite() {
        assert!(PowerSeries::new(vec![c(f64::NAN, 0.0)]).is_err());
        assert!(PowerSeries::new(vec![]).is_err());
    }

    fn coeff_strategy(len: usize) -> impl Strategy<Value = Vec<Complex64>> {
        proptest::collection::vec((-1.0..1.0f64, -1.0..1.0f64), len)
            .prop_map(|v| v.into_iter().map(|(re, im)| c(re, im)).collect())
    }

    fn normalized(mut v: Vec<Complex64>, c0: Complex64) -> PowerSeries {
        v[0] = c0;
        PowerSeries::new(v).unwrap()
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn ring_axioms(a in coeff_strategy(12), b in coeff_strategy(12), d in coeff_strategy(12)) {
            let (a, b, d) = (
                PowerSeries::new(a).unwrap(),
                PowerSeries::new(b).unwrap(),
                PowerSeries::new(d).unwrap(),
            );
            let lhs = &(&a + &b) + &d;
            let rhs = &a + &(&b + &d);
            prop_assert!(lhs.max_abs_diff(&rhs) < 1e-12);
            let lhs = &(&a * &b) * &d;
            let rhs = &a * &(&b * &d);
            prop_assert!(lhs.max_abs_diff(&rhs) < 1e-12);
            let lhs = &a * &(&b + &d);
            let rhs = &(&a * &b) + &(&a * &d);
            prop_assert!(lhs.max_abs_diff(&rhs) < 1e-12);
        }

        #[test]
        fn exp_log_roundtrip(v in coeff_strategy(24)) {
            let s = normalized(v.clone(), c(1.0, 0.0));
            let back = s.log().unwrap().exp().unwrap();
            prop_assert!(back.max_abs_diff(&s) < 1e-10);

            let t = normalized(v, c(0.0, 0.0));
            let back = t.exp().unwrap().log().unwrap();
            prop_assert!(back.max_abs_diff(&t) < 1e-10);
        }

        #[test]
        fn integer_pow_matches_repeated_mul(v in coeff_strategy(16), k in 0u32..5) {
            let s = normalized(v, c(1.0, 0.0)).scale(c(1.0, 0.0));
            // keep the series small so repeated products stay well scaled
            let s = PowerSeries::new(
                s.coeffs().iter().enumerate()
                    .map(|(n, &x)| if n == 0 { x } else { x * 0.5 }).collect()
            ).unwrap();
            let mut expected = PowerSeries::one(s.order());
            for _ in 0..k {
                expected = &expected * &s;
            }
            let got = s.pow(c(k as f64, 0.0)).unwrap();
            prop_assert!(got.max_abs_diff(&expected) < 1e-12, "diff {}", got.max_abs_diff(&expected));
        }

        #[test]
        fn pow_matches_binomial_oracle(re in -3.0..3.0f64, im in -3.0..3.0f64) {
            let p = c(re, im);
            prop_assume!(p.norm() <= 3.0);
            let order = N;
            let got = one_minus_z(order).pow(-p).unwrap();
            let oracle = binomial_oracle(p, order);
            for (n, o) in oracle.iter().enumerate() {
                prop_assert!((got.coeff(n) - o).norm() < 1e-10, "n = {}", n);
            }
        }
    }
}
