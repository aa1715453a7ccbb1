//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each and
//! exits nonzero if any criterion fails.

use std::f64::consts::{FRAC_PI_3, FRAC_PI_4, FRAC_PI_8, PI};

use num_complex::Complex64;
use spirallike::sample::{self, Phases};
use spirallike::*;
use spirallike_cli::commands::cmd_plot;
use spirallike_cli::plot::self_intersection;
use spirallike_cli::{MapFile, PlotSpec};

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn lam(l: f64) -> SpiralParams {
    SpiralParams::new(l).unwrap()
}

fn no_params() -> CatalogParams {
    CatalogParams::new()
}

fn lambda_grid() -> Vec<f64> {
    (0..101).map(|k| (k as f64 - 50.0) * 0.0314).collect()
}

fn c1_zero_lambda_reduction() -> Outcome {
    let p = lam(0.0);
    let w = weights(p, 64);
    let ratio_err = (1..=64).map(|n| (w.ratio(n) - n as f64).abs()).fold(0.0, f64::max);
    let mut rng = sample::rng(101);
    let mut sum_err: f64 = 0.0;
    for _ in 0..100 {
        let m = sample::arbitrary_map(&mut rng, 16, 1.0);
        let silverman = silverman_check(&m, 0.0).sum - 1.0;
        sum_err = sum_err.max((sufficient_check(&m, p, 0.0).sum - silverman).abs());
    }
    outcome(ratio_err <= 1e-12 && sum_err <= 1e-12, format!("max |A_n/B - n| = {ratio_err:.2e}, max sum gap = {sum_err:.2e}"))
}

fn c2_weight_floor() -> Outcome {
    let mut worst = f64::INFINITY;
    let mut at = (0.0, 0);
    for l in lambda_grid() {
        let w = weights(lam(l), 64);
        for n in 1..=64 {
            let slack = w.ratio(n) - n as f64;
            if slack < worst {
                worst = slack;
                at = (l, n);
            }
        }
    }
    outcome(worst >= -1e-12, format!("min A_n/B - n = {worst:.3e} at lambda = {:.4}, n = {}", at.0, at.1))
}

fn c3_b_over_a1_closed_form() -> Outcome {
    let err = lambda_grid()
        .into_iter()
        .map(|l| (weights(lam(l), 1).inverse_ratio(1) - (FRAC_PI_4 - l.abs() / 2.0).tan()).abs())
        .fold(0.0, f64::max);
    let q = weights(lam(FRAC_PI_4), 1).inverse_ratio(1);
    let pass = err <= 1e-12 && (q - FRAC_PI_8.tan()).abs() <= 1e-12 && (q - 0.414214).abs() < 1e-6;
    outcome(pass, format!("max error {err:.2e}; B/A_1(pi/4) = {q:.9}"))
}

fn c4_example_regression() -> Outcome {
    let mut params = no_params();
    params.insert("alpha".into(), Complex64::new(-0.5, 0.0));
    let p = lam(FRAC_PI_4);
    let f1 = catalog("f1", &params, p, 1).unwrap();
    let z = Complex64::new(0.5, 0.5);
    let s = theorem1_inequality(&f1, p, z).unwrap();
    let pass = (s.lhs - 0.75).abs() <= 1e-12 && (s.rhs - 1.0).abs() <= 1e-12;
    outcome(pass, format!("lhs = {:.12}, rhs = {:.12} (expected 0.75 and 1.0)", s.lhs, s.rhs))
}

fn c5_f4_non_necessity() -> Outcome {
    let p = lam(FRAC_PI_4);
    let w = weights(p, 2);
    let value = 2f64.sqrt() * w.ratio(2);
    let f4 = catalog("f4", &no_params(), p, 2).unwrap();
    let partial = sufficient_check(&f4, p, 0.0);
    let term = (f4.a(2).norm() * w.ratio(2) - value).abs();
    let grid = GridSpec::default().with_eps(1e-9);
    let mut passes = Vec::new();
    for l in [-FRAC_PI_4, FRAC_PI_4] {
        let m = catalog("f4", &no_params(), lam(l), 64).unwrap();
        let c = pointwise_spiral_check(&m, lam(l), &grid).unwrap();
        passes.push((l, c.pass, c.min));
    }
    let exactly_one = passes.iter().filter(|x| x.1).count() == 1;
    let pass = value > 2.0 && (value - 5.5811).abs() <= 1e-3 && term < 1e-12 && !partial.pass && exactly_one;
    let detail = format!(
        "sqrt2 A_2/B = {value:.6}; grid min at -pi/4 = {:.3e} ({}), at +pi/4 = {:.3e} ({})",
        passes[0].2,
        if passes[0].1 { "pass" } else { "fail" },
        passes[1].2,
        if passes[1].1 { "pass" } else { "fail" },
    );
    outcome(pass, detail)
}

fn c6_power_transform() -> Outcome {
    let koebe = catalog("koebe", &no_params(), lam(0.0), 4096).unwrap();
    let g = koebe.h_series().clone();
    let target = Complex64::new(1.0, -1.0);
    let mut worst_a2: f64 = 0.0;
    let mut worst_defect: f64 = 0.0;
    for (l, o) in [(-FRAC_PI_4, Orientation::Direct), (FRAC_PI_4, Orientation::Mirrored)] {
        let small = g.truncate(64);
        let t = spirallike_power_transform(&small, lam(l), o).unwrap();
        worst_a2 = worst_a2.max((t.h.coeff(2) - target).norm());
        let w = thm211_identity_check(&g, lam(l), o, &GridSpec::default()).unwrap();
        worst_defect = worst_defect.max(w.value);
    }
    outcome(
        worst_a2 <= 1e-10 && worst_defect < 1e-9,
        format!("|a_2 - (1-i)| = {worst_a2:.2e}, identity defect = {worst_defect:.2e} (order 4096)"),
    )
}

fn c7_growth() -> Outcome {
    let p = lam(FRAC_PI_4);
    let q = weights(p, 1).inverse_ratio(1);
    let f6 = catalog("f6", &no_params(), p, 1).unwrap();
    let f7 = catalog("f7", &no_params(), p, 1).unwrap();
    let mut sharp: f64 = 0.0;
    for r in [0.1, 0.5, 0.9] {
        let z = Complex64::new(r, 0.0);
        sharp = sharp.max((f7.eval_f(z).unwrap().norm() - (1.0 + q) * r).abs());
        sharp = sharp.max((f6.eval_f(z).unwrap().norm() - (1.0 - q) * r).abs());
    }
    let mut rng = sample::rng(707);
    let mut violations = 0;
    for _ in 0..1000 {
        let p = sample::lambda(&mut rng, 1.5);
        let m = sample::sufficient_map(&mut rng, p, 8, Phases::Free);
        for _ in 0..100 {
            let z = sample::disk_point(&mut rng, 0.999);
            let b = growth_bounds(&m, p, z.norm(), 0.0).unwrap();
            let v = m.eval_f(z).unwrap().norm();
            if v < b.lower - 1e-9 || v > b.upper + 1e-9 {
                violations += 1;
            }
        }
    }
    outcome(sharp <= 1e-12 && violations == 0, format!("sharpness error {sharp:.2e}; {violations} violations in 100000 samples"))
}

fn c8_implication_chain() -> Outcome {
    let grid = GridSpec::default();
    let mut rng = sample::rng(808);
    let mut counter = 0;
    let mut worst = f64::INFINITY;
    for _ in 0..500 {
        let p = sample::lambda(&mut rng, 1.5);
        let m = sample::sufficient_map(&mut rng, p, 8, Phases::Free);
        if !sufficient_check(&m, p, 0.0).pass {
            counter += 1;
            continue;
        }
        let pw = pointwise_spiral_check(&m, p, &grid).unwrap();
        let jac = sense_preserving_on_grid(&m, &grid).unwrap();
        worst = worst.min(pw.min);
        if !(pw.min > 0.0 && jac.min > 0.0) {
            counter += 1;
        }
    }
    outcome(counter == 0, format!("{counter} counterexamples; smallest pointwise min {worst:.3e}"))
}

fn sign(x: f64) -> i8 {
    if x > 0.0 {
        1
    } else if x < 0.0 {
        -1
    } else {
        0
    }
}

fn c9_sign_equivalence() -> Outcome {
    let mut rng = sample::rng(909);
    let mut tested = 0;
    let mut disagreements = 0;
    while tested < 10_000 {
        let p = sample::lambda(&mut rng, 1.5);
        let m = sample::arbitrary_map(&mut rng, 6, 1.5);
        let z = sample::disk_point(&mut rng, 0.99);
        let q = m.parts(z);
        if q.f().norm() <= 1e-6 {
            continue;
        }
        tested += 1;
        let direct = (p.rotation() * q.d(z) / q.f()).re;
        let margin = margin_m(&m, p, z).unwrap();
        let s = theorem1_inequality(&m, p, z).unwrap();
        if sign(direct) != sign(margin) || sign(direct) != sign(s.lhs - s.rhs) {
            disagreements += 1;
        }
    }
    outcome(disagreements == 0, format!("{disagreements} disagreements in {tested} samples"))
}

fn c10_roundtrip() -> Outcome {
    let mut rng = sample::rng(1010);
    let mut worst: f64 = 0.0;
    for _ in 0..200 {
        let p = sample::lambda(&mut rng, 1.5);
        let m = sample::sufficient_map(&mut rng, p, 10, Phases::Signed);
        let back = recombine(&decompose(&m, p).unwrap(), p).unwrap();
        for n in 1..=10 {
            worst = worst.max((back.a(n) - m.a(n)).norm()).max((back.b(n) - m.b(n)).norm());
        }
    }
    outcome(worst <= 1e-12, format!("max coefficient error {worst:.2e}"))
}

fn c11_harmonic_koebe() -> Outcome {
    let k = catalog("harmonic_koebe", &no_params(), lam(0.0), 64).unwrap();
    let r = 5f64.sqrt() / 3.0;
    let w = circle_min(4096, r, |z| {
        let q = k.parts(z);
        Ok((q.d(z) / q.f()).re)
    })
    .unwrap();
    outcome(w.value < 0.0, format!("min Re(Dk/k) = {:.6} at theta = {:.6}", w.value, w.at.arg()))
}

fn c12_figure_parity() -> Outcome {
    let dir = tempfile::TempDir::new().unwrap();
    let mut cases = Vec::new();
    for l in [0.0, FRAC_PI_8, PI / 5.0, FRAC_PI_3] {
        cases.push(("f2", 0.95, l));
    }
    for a in [0.2, 0.5, 0.7, 0.9] {
        cases.push(("f5", a, FRAC_PI_3));
    }
    let spec = PlotSpec::default();
    let mut failures = Vec::new();
    for (i, (name, alpha, l)) in cases.iter().enumerate() {
        let mut params = no_params();
        params.insert("alpha".into(), Complex64::new(*alpha, 0.0));
        let file = dir.path().join(format!("{i}.json"));
        std::fs::write(&file, MapFile::from_catalog(name, &params, *l, 2, false).emit()).unwrap();
        let a = cmd_plot(&file, &spec, None).unwrap().stdout;
        let b = cmd_plot(&file, &spec, None).unwrap().stdout;
        if a != b {
            failures.push(format!("{name}({alpha}, {l:.4}) not deterministic"));
        }
        for line in a.lines().filter(|l| l.starts_with("<polyline")) {
            let pts: Vec<Complex64> = line
                .split("points=\"")
                .nth(1)
                .unwrap()
                .trim_end_matches("\"/>")
                .split(' ')
                .map(|p| {
                    let (x, y) = p.split_once(',').unwrap();
                    Complex64::new(x.parse().unwrap(), y.parse().unwrap())
                })
                .collect();
            let closed = pts.len() == spec.samples_per_circle + 1 && pts.first() == pts.last();
            if !closed || self_intersection(&pts[..pts.len() - 1]).is_some() {
                failures.push(format!("{name}({alpha}, {l:.4}) curve not simple closed"));
            }
        }
    }
    outcome(failures.is_empty(), if failures.is_empty() { "8 plots, 56 simple closed curves".into() } else { failures.join("; ") })
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 12] = [
        ("zero-lambda reduction", c1_zero_lambda_reduction),
        ("weight floor", c2_weight_floor),
        ("B/A_1 closed form", c3_b_over_a1_closed_form),
        ("f1 inequality regression", c4_example_regression),
        ("f4 non-necessity", c5_f4_non_necessity),
        ("power-transform coefficient", c6_power_transform),
        ("growth sharpness", c7_growth),
        ("implication chain", c8_implication_chain),
        ("sign equivalence", c9_sign_equivalence),
        ("decompose/recombine roundtrip", c10_roundtrip),
        ("harmonic Koebe non-starlikeness", c11_harmonic_koebe),
        ("figure parity", c12_figure_parity),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let o = run();
        if !o.pass {
            failed += 1;
        }
        println!("criterion {:>2} {:<32} {}  {}", i + 1, name, if o.pass { "PASS" } else { "FAIL" }, o.detail);
    }
    println!("acceptance: {} passed, {} failed", criteria.len() - failed, failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
