//! The crossing indicator on the 4-torus and its Fourier series.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// A point of R/Z, kept as its representative in `[0, 1)`.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd)]
pub struct TorusPoint(f64);

impl TorusPoint {
    pub fn new(t: f64) -> Self {
        TorusPoint(bracket(t))
    }

    pub fn value(self) -> f64 {
        self.0
    }

    pub fn rotated(self, by: f64) -> Self {
        TorusPoint::new(self.0 + by)
    }
}

impl std::ops::Sub for TorusPoint {
    type Output = f64;

    /// Representative of the difference in `[0, 1)`.
    fn sub(self, rhs: TorusPoint) -> f64 {
        bracket(self.0 - rhs.0)
    }
}

/// Representative of `t` mod 1 in `[0, 1)`.
pub fn bracket(t: f64) -> f64 {
    let r = t.rem_euclid(1.0);
    // rem_euclid can round up to exactly 1.0 for tiny negative inputs
    if r >= 1.0 {
        0.0
    } else {
        r
    }
}

/// e(t) = exp(2πit).
pub fn e(t: f64) -> Complex64 {
    Complex64::from_polar(1.0, 2.0 * PI * t)
}

fn degenerate(w: TorusPoint, x: TorusPoint, y: TorusPoint, z: TorusPoint) -> bool {
    w == x || w == y || w == z || x == y || x == z || y == z
}

/// 1 iff the pair (w, y) crosses the pair (x, z) on the circle.
///
/// Uses the winding parity: `[x−w] + [y−x] + [z−y] + [w−z]` is an integer,
/// odd exactly for crossing configurations. Coincident coordinates give 0.
pub fn crossing_indicator(w: TorusPoint, x: TorusPoint, y: TorusPoint, z: TorusPoint) -> u8 {
    if degenerate(w, x, y, z) {
        return 0;
    }
    let winding = (x - w) + (y - x) + (z - y) + (w - z);
    (winding.round() as i64 & 1) as u8
}

/// e([x−w]/2)·e([y−x]/2)·e([z−y]/2)·e([w−z]/2), which equals (−1)^C.
pub fn parity_product(w: TorusPoint, x: TorusPoint, y: TorusPoint, z: TorusPoint) -> Complex64 {
    e((x - w) / 2.0) * e((y - x) / 2.0) * e((z - y) / 2.0) * e((w - z) / 2.0)
}

/// Σ_{0<|n|≤N} e(n·t)/n.
fn harmonic_kernel(t: f64, truncation: u32) -> Complex64 {
    let step = e(t);
    let mut power = Complex64::new(1.0, 0.0);
    let mut acc = Complex64::new(0.0, 0.0);
    for n in 1..=truncation {
        power *= step;
        // e(nt)/n + e(−nt)/(−n)
        acc += (power - power.conj()) / n as f64;
    }
    acc
}

/// Σ_{0<|p|≤N} e(p·t)/p².
fn square_kernel(t: f64, truncation: u32) -> Complex64 {
    let step = e(t);
    let mut power = Complex64::new(1.0, 0.0);
    let mut acc = Complex64::new(0.0, 0.0);
    for p in 1..=truncation {
        power *= step;
        acc += (power + power.conj()) / (p as f64 * p as f64);
    }
    acc
}

/// The Fourier series of the crossing indicator, truncated to 1 ≤ |n|, |m| ≤ N.
///
/// C(w,x,y,z) − 1/3 is the sum over n, m ≠ 0 of (1/(2π²nm)) times
///
/// ```text
///   − e(nw−nx+my−mz) − e(nw−mx+my−nz)
///   + e(−mx+(n+m)y−nz) + e(nw+my−(n+m)z)
///   + e((n+m)w−nx−mz) + e(nw−(n+m)x+my)
/// ```
///
/// plus Σ_{p≠0} (1/(2π²p²))·[e(p(w−x)) + e(p(x−y)) + e(p(y−z)) + e(p(z−w))],
/// the modes where only two adjacent coordinates carry frequency.
///
/// Each double sum factors into a product of two single sums of e(n·t)/n, so
/// the cost is O(N) per point. The imaginary part vanishes up to rounding.
pub fn truncated_series(w: TorusPoint, x: TorusPoint, y: TorusPoint, z: TorusPoint, truncation: u32) -> Complex64 {
    let (w, x, y, z) = (w.value(), x.value(), y.value(), z.value());
    let g_wx = harmonic_kernel(w - x, truncation);
    let g_yz = harmonic_kernel(y - z, truncation);
    let g_wz = harmonic_kernel(w - z, truncation);
    let g_yx = harmonic_kernel(y - x, truncation);

    let scale = 1.0 / (2.0 * PI * PI);
    // e(nw−nx+my−mz) + e(nw−mx+my−nz)
    let first = g_wx * g_yz + g_wz * g_yx;
    // e(−mx+(n+m)y−nz) + e(nw+my−(n+m)z)
    let second = g_yz * g_yx + g_wz * g_yz;
    // e((n+m)w−nx−mz) + e(nw−(n+m)x+my)
    let third = g_wx * g_wz + g_wx * g_yx;
    let adjacent = square_kernel(w - x, truncation)
        + square_kernel(x - y, truncation)
        + square_kernel(y - z, truncation)
        + square_kernel(z - w, truncation);
    (second + third - first + adjacent) * scale + Complex64::new(1.0 / 3.0, 0.0)
}

/// Real part of [`truncated_series`].
pub fn truncated_series_c(w: TorusPoint, x: TorusPoint, y: TorusPoint, z: TorusPoint, truncation: u32) -> f64 {
    truncated_series(w, x, y, z, truncation).re
}

/// Partial sum of 1/(nm) over n + m = k, n, m ≠ 0, |n| ≤ N.
///
/// Tends to −π²/3 for k = 0 and to −2/k² otherwise: writing
/// 1/(n(k−n)) = (1/k)(1/n + 1/(k−n)), each of the two telescoping halves
/// leaves the single term −1/k behind.
pub fn convolution_sum(k: i64, truncation: i64) -> Result<f64> {
    if truncation < k.abs() + 1 {
        return Err(Error::TruncationTooSmall { k, truncation });
    }
    // sum from the smallest terms up
    let mut acc = 0.0;
    for magnitude in (1..=truncation).rev() {
        for n in [magnitude, -magnitude] {
            let m = k - n;
            if m != 0 {
                acc += 1.0 / (n as f64 * m as f64);
            }
        }
    }
    Ok(acc)
}
