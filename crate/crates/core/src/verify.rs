//! Sweeps behind `crossings verify …`.
//!
//! Each suite returns one [`Check`] per property. Suites keep going after a
//! failure so the caller can report the first failing check and a summary.

use std::f64::consts::PI;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::drawing::{opposite_page_at_half_span, same_page_shift_count};
use crate::fourier::{
    canonical_forms_exact, canonical_level_value, convolution_sum, cosine, crossing_indicator, level_form_evaluate,
    level_gradient_check, level_max_ratio, lhs_form, parity_product, quadrature_integral, rhs_form, truncated_series,
    CoefficientTable, LevelVector, TorusPoint,
};

#[derive(Clone, Debug, PartialEq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check { name: name.into(), passed, detail: detail.into() }
    }
}

pub fn first_failure(checks: &[Check]) -> Option<&Check> {
    checks.iter().find(|c| !c.passed)
}

#[derive(Clone, Copy, Debug)]
pub struct FourierSuiteParams {
    /// Random points per pointwise identity, and tables for the inequality checks.
    pub trials: usize,
    /// Series truncation for the pointwise convergence check.
    pub truncation: u32,
    /// Points per axis for the quadrature oracle.
    pub grid: usize,
    pub seed: u64,
}

impl Default for FourierSuiteParams {
    fn default() -> Self {
        FourierSuiteParams { trials: 10_000, truncation: 400, grid: 64, seed: 1 }
    }
}

fn random_point(rng: &mut ChaCha8Rng) -> TorusPoint {
    TorusPoint::new(rng.gen::<f64>())
}

pub fn fourier_suite(params: FourierSuiteParams) -> Vec<Check> {
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let mut checks = Vec::new();

    let mut parity_err = 0.0f64;
    let mut unity_failures = 0;
    let mut symmetry_failures = 0;
    for _ in 0..params.trials {
        let [w, x, y, z] = [(); 4].map(|_| random_point(&mut rng));
        let sign = if crossing_indicator(w, x, y, z) == 1 { -1.0 } else { 1.0 };
        parity_err = parity_err.max((parity_product(w, x, y, z) - Complex64::new(sign, 0.0)).norm());

        let pairings = crossing_indicator(w, x, y, z) + crossing_indicator(w, y, x, z) + crossing_indicator(w, x, z, y);
        if pairings != 1 {
            unity_failures += 1;
        }

        let t: f64 = rng.gen();
        let c = crossing_indicator(w, x, y, z);
        let rotated = crossing_indicator(w.rotated(t), x.rotated(t), y.rotated(t), z.rotated(t));
        let swapped = crossing_indicator(x, w, z, y);
        if rotated != c || swapped != c {
            symmetry_failures += 1;
        }
    }
    checks.push(Check::new(
        "parity product equals (-1)^C",
        parity_err <= 1e-9,
        format!("max error {parity_err:.3e} over {} points", params.trials),
    ));
    checks.push(Check::new(
        "exactly one of three pairings crosses",
        unity_failures == 0,
        format!("{unity_failures} failures over {} points", params.trials),
    ));
    checks.push(Check::new(
        "indicator is rotation and pair-swap invariant",
        symmetry_failures == 0,
        format!("{symmetry_failures} failures over {} points", params.trials),
    ));

    let zero = convolution_sum(0, 100_000).expect("N large enough");
    checks.push(Check::new(
        "convolution sum k=0 is -pi^2/3",
        (zero + PI * PI / 3.0).abs() <= 1e-4,
        format!("value {zero:.8}"),
    ));
    let worst = (1..=10)
        .map(|k| (convolution_sum(k, 100_000).expect("N large enough") + 2.0 / (k * k) as f64).abs())
        .fold(0.0, f64::max);
    checks.push(Check::new("convolution sums k=1..10 are -2/k^2", worst <= 1e-4, format!("max error {worst:.3e}")));

    let series = truncated_series(
        TorusPoint::new(0.05),
        TorusPoint::new(0.30),
        TorusPoint::new(0.55),
        TorusPoint::new(0.80),
        params.truncation,
    );
    checks.push(Check::new(
        "truncated series approximates C at a crossing point",
        (series.re - 1.0).abs() <= 0.1 && series.im.abs() <= 1e-9,
        format!("N = {}, value {:.6} {:+.2e}i", params.truncation, series.re, series.im),
    ));

    let tables = params.trials.min(100);
    let mut worst_gap = f64::INFINITY;
    for i in 0..tables {
        let t = CoefficientTable::random_symmetric(1 + (i % 5) as i32, rng.gen());
        let gap = lhs_form(&t).expect("symmetric") - rhs_form(&t).expect("symmetric");
        worst_gap = worst_gap.min(gap);
    }
    checks.push(Check::new(
        "lhs form >= rhs form",
        worst_gap >= -1e-12,
        format!("min(lhs - rhs) = {worst_gap:.3e} over {tables} tables"),
    ));

    let bounded = params.trials.min(20);
    let mut worst_lhs = f64::INFINITY;
    for _ in 0..bounded {
        let t = CoefficientTable::random_symmetric(rng.gen_range(1..=3), rng.gen());
        let t = t.scaled(1.0 / t.sampled_sup_norm(256));
        worst_lhs = worst_lhs.min(lhs_form(&t).expect("symmetric"));
    }
    checks.push(Check::new(
        "|f| <= 1 implies lhs >= -1/pi^2",
        worst_lhs >= -1.0 / (PI * PI) - 1e-9,
        format!("min lhs {worst_lhs:.6} over {bounded} tables"),
    ));

    let mut worst_rel = 0.0f64;
    for _ in 0..3 {
        let t = CoefficientTable::random_symmetric(rng.gen_range(1..=3), rng.gen());
        let closed = lhs_form(&t).expect("symmetric");
        let quad = quadrature_integral(&t, params.grid).expect("grid >= 8");
        // 5% relative, with an absolute floor of 0.005 near zero
        worst_rel = worst_rel.max((quad - closed).abs() / closed.abs().max(0.005 / 0.05));
    }
    checks.push(Check::new(
        "closed-form lhs matches quadrature",
        worst_rel <= 0.05,
        format!("max relative error {worst_rel:.4} (grid {})", params.grid),
    ));

    checks
}

pub fn level_suite(k_max: u32) -> Vec<Check> {
    let mut checks = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(u64::from(k_max));
    for k in 2..=k_max {
        let eig = match level_max_ratio(k) {
            Ok(e) => e,
            Err(err) => {
                checks.push(Check::new(format!("k={k} eigensolve"), false, err.to_string()));
                continue;
            }
        };
        let canonical = LevelVector::canonical(k).expect("k >= 2");
        let cos = cosine(&eig.eigenvector, canonical.entries());
        checks.push(Check::new(
            format!("k={k} max ratio is 1 at c_n = k+1-2n"),
            (eig.ratio - 1.0).abs() <= 1e-9 && cos >= 1.0 - 1e-9,
            format!("ratio {:.12}, cosine {:.12}", eig.ratio, cos),
        ));

        let exact = canonical_forms_exact(k).expect("k >= 2");
        let target = canonical_level_value(k);
        checks.push(Check::new(
            format!("k={k} canonical forms equal (k^3-k)/6"),
            exact.lhs == target && exact.rhs == target,
            format!("lhs {}, rhs {}, expected {target}", exact.lhs, exact.rhs),
        ));

        let gradient = level_gradient_check(k);
        checks.push(Check::new(
            format!("k={k} gradient equals 2c"),
            matches!(gradient, Ok(d) if d <= 1e-6),
            format!("{gradient:?}"),
        ));

        let mut worst = f64::INFINITY;
        for _ in 0..20 {
            let c = (0..k / 2).map(|_| rng.gen_range(-1.0..1.0)).collect();
            let forms = level_form_evaluate(&LevelVector::new(k, c).expect("right length"));
            worst = worst.min(forms.rhs - forms.lhs);
        }
        checks.push(Check::new(
            format!("k={k} lhs <= rhs on random vectors"),
            worst >= -1e-12,
            format!("min(rhs - lhs) = {worst:.3e}"),
        ));
    }
    checks
}

pub fn counting_suite(n_max: u32) -> Vec<Check> {
    let mut checks = Vec::new();
    for n in 3..=n_max {
        let bad: Vec<u32> =
            (1..n.div_ceil(2)).filter(|&d| same_page_shift_count(n, d).ok() != Some(n - 2 * d)).collect();
        checks.push(Check::new(
            format!("n={n} same-page shift count is n-2d"),
            bad.is_empty(),
            if bad.is_empty() { "all d".to_string() } else { format!("fails for d in {bad:?}") },
        ));
        if n % 2 == 0 {
            let ok = opposite_page_at_half_span(n);
            checks.push(Check::new(
                format!("n={n} half-span pairs on opposite pages"),
                ok == Ok(true),
                format!("{ok:?}"),
            ));
        }
    }
    checks
}
