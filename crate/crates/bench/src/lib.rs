//! Fixtures shared by the kernel benchmarks.

use spirallike::sample::{self, Phases};
use spirallike::{catalog, CatalogParams, HarmonicMapSpec, PowerSeries, SpiralParams};

pub const SEED: u64 = 0x5eed;

pub fn params(lambda: f64) -> SpiralParams {
    SpiralParams::new(lambda).expect("lambda inside the open interval")
}

/// `z/(1-z)^2` truncated at `order`.
pub fn koebe(order: usize) -> PowerSeries {
    catalog("koebe", &CatalogParams::new(), params(0.0), order).expect("koebe is in the catalog").h_series().clone()
}

/// Seeded maps that satisfy the weighted coefficient bound for `p`.
pub fn sufficient_maps(count: usize, order: usize, p: SpiralParams) -> Vec<HarmonicMapSpec> {
    let mut rng = sample::rng(SEED);
    (0..count).map(|_| sample::sufficient_map(&mut rng, p, order, Phases::Free)).collect()
}
