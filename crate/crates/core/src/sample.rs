//! Seeded random maps drawn inside the hypothesis classes, for property tests.

use std::f64::consts::TAU;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::criteria::{SpiralParams, WeightTable};
use crate::harmonic::HarmonicMapSpec;
use crate::series::PowerSeries;

pub type SampleRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SampleRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Coefficient phase freedom.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Phases {
    /// Arbitrary phases (class H).
    Free,
    /// `a_n = -|a_n|`, `b_n = |b_n|` (class H').
    Signed,
}

/// Nonnegative magnitudes with a random support; about half the entries vanish.
fn magnitudes(rng: &mut SampleRng, len: usize) -> Vec<f64> {
    (0..len)
        .map(|_| if rng.random_bool(0.5) { rng.random::<f64>() } else { 0.0 })
        .collect()
}

fn phased(rng: &mut SampleRng, m: f64, phases: Phases, negate: bool) -> Complex64 {
    match phases {
        Phases::Free => Complex64::from_polar(m, rng.random_range(0.0..TAU)),
        Phases::Signed => Complex64::new(if negate { -m } else { m }, 0.0),
    }
}

/// Map with `sum w_n (|a_n| + |b_n|) = t` where `t` is uniform in `[0, budget)`,
/// `w_n` the provided weight for index `n`. `b_1` is always included.
fn budgeted_map(rng: &mut SampleRng, order: usize, phases: Phases, budget: f64, weight: impl Fn(usize) -> f64) -> HarmonicMapSpec {
    let order = order.max(2);
    let mut a = magnitudes(rng, order - 1);
    let mut b = magnitudes(rng, order);
    if b.iter().chain(&a).all(|&x| x == 0.0) {
        b[0] = 1.0;
    }
    let total: f64 = a.iter().enumerate().map(|(i, x)| weight(i + 2) * x).sum::<f64>()
        + b.iter().enumerate().map(|(i, x)| weight(i + 1) * x).sum::<f64>();
    let target = budget * rng.random::<f64>();
    let k = target / total;
    a.iter_mut().chain(b.iter_mut()).for_each(|x| *x *= k);
    let a = a.into_iter().map(|m| phased(rng, m, phases, true)).collect();
    let b = b.into_iter().map(|m| phased(rng, m, phases, false)).collect();
    HarmonicMapSpec::new(a, b, order, phases == Phases::Signed).expect("sampled coefficients are finite")
}

/// A map passing the sufficient coefficient test at `p`.
pub fn sufficient_map(rng: &mut SampleRng, p: SpiralParams, order: usize, phases: Phases) -> HarmonicMapSpec {
    let w = WeightTable::new(p, order.max(2));
    budgeted_map(rng, order, phases, 1.0, |n| w.ratio(n))
}

/// A map with `sum n (|a_n| + |b_n|) < 1` (Silverman budget).
pub fn silverman_map(rng: &mut SampleRng, order: usize, phases: Phases) -> HarmonicMapSpec {
    budgeted_map(rng, order, phases, 1.0, |n| n as f64)
}

/// Normalized map with coefficients uniform in the square of half-width `scale / n`.
pub fn arbitrary_map(rng: &mut SampleRng, order: usize, scale: f64) -> HarmonicMapSpec {
    let order = order.max(2);
    let mut draw = |n: usize| {
        let s = scale / n as f64;
        Complex64::new(rng.random_range(-s..s), rng.random_range(-s..s))
    };
    let a = (2..=order).map(&mut draw).collect();
    let b = (1..=order).map(&mut draw).collect();
    HarmonicMapSpec::new(a, b, order, false).expect("sampled coefficients are finite")
}

/// Uniform point in the disk `|z| < r_max` (area measure).
pub fn disk_point(rng: &mut SampleRng, r_max: f64) -> Complex64 {
    Complex64::from_polar(r_max * rng.random::<f64>().sqrt(), rng.random_range(0.0..TAU))
}

/// Point with `|z| = r` and uniform argument.
pub fn circle_point(rng: &mut SampleRng, r: f64) -> Complex64 {
    Complex64::from_polar(r, rng.random_range(0.0..TAU))
}

/// Angle uniform in `(-limit, limit)`.
pub fn lambda(rng: &mut SampleRng, limit: f64) -> SpiralParams {
    let l = rng.random_range(-limit..limit);
    SpiralParams::new(l).expect("limit below pi/2")
}

/// Analytic starlike series `z + sum c_n z^n` with `sum n |c_n| < 1` and free phases.
pub fn starlike_series(rng: &mut SampleRng, order: usize) -> PowerSeries {
    let order = order.max(2);
    let mut m = magnitudes(rng, order - 1);
    if m.iter().all(|&x| x == 0.0) {
        m[0] = 1.0;
    }
    let total: f64 = m.iter().enumerate().map(|(i, x)| (i + 2) as f64 * x).sum();
    let k = rng.random::<f64>() / total;
    let mut c = vec![Complex64::default(), Complex64::new(1.0, 0.0)];
    c.extend(m.into_iter().map(|x| phased(rng, x * k, Phases::Free, false)));
    PowerSeries::new(c).expect("sampled coefficients are finite")
}
