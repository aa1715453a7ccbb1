//! Coefficient and pointwise tests for harmonic spirallike maps of the unit disk.
//!
//! A map `f = h + conj(g)` with `h = z + sum a_n z^n`, `g = sum b_n z^n` is
//! described by [`HarmonicMapSpec`]. The coefficient tests live in
//! [`criteria`], the constructions in [`construct`], and [`catalog`] holds
//! the standard examples.

pub mod catalog;
pub mod construct;
pub mod criteria;
pub mod error;
pub mod grid;
pub mod harmonic;
pub mod sample;
pub mod series;

pub use num_complex::Complex64;

pub use catalog::{catalog, CatalogParams};
pub use construct::{
    convex_combination, decompose, extremal_family, f_epsilon_family_check, multiplier_transfer, recombine,
    spirallike_power_transform, starlike_preimage, thm211_identity_check, CombinationWeights, MultiplierSequence,
    Orientation, PowerTransform, Sign,
};
pub use criteria::{
    epsilon_starlike_family_check, growth_bounds, margin_m, margin_m_on_grid, necessary_sharp_check,
    necessary_weighted_check, phi, pointwise_fully_starlike_check, pointwise_spiral_check, psi, silverman_check,
    sufficient_check, theorem1_inequality, verify, circle_min, weights, CoefficientSum, EpsilonCheck, GrowthBounds,
    InequalitySides, SharpNecessary, SpiralParams, VerificationReport, WeightTable,
};
pub use error::{Error, Result};
pub use grid::{GridSpec, Witness};
pub use harmonic::{nonvanishing_on_grid, sense_preserving_on_grid, ClosedForm, GridCheck, HarmonicMapSpec, Parts};
pub use series::PowerSeries;
