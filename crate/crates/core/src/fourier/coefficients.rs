//! Finitely supported Fourier coefficient tables on the 2-torus and the
//! quadratic forms on both sides of the relaxed MAX-CUT inequality.

use std::f64::consts::PI;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::torus::{crossing_indicator, e, TorusPoint};
use crate::cyclic::Chord;
use crate::drawing::{Page, TwoPageDrawing};
use crate::error::{Error, Result};

/// Coefficients a(n, m) of f(x, y) = Σ a(n, m)·e(nx + my) for |n|, |m| ≤ bound.
/// Entries outside the box are zero.
#[derive(Clone, Debug, PartialEq)]
pub struct CoefficientTable {
    bound: i32,
    entries: Vec<Complex64>,
}

impl CoefficientTable {
    pub fn zeros(bound: i32) -> Self {
        assert!(bound >= 0, "support bound must be non-negative");
        let side = (2 * bound + 1) as usize;
        CoefficientTable { bound, entries: vec![Complex64::new(0.0, 0.0); side * side] }
    }

    /// Table with independent uniform real and imaginary parts in [−1, 1],
    /// then symmetrized.
    pub fn random_symmetric(bound: i32, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut t = Self::zeros(bound);
        for v in t.entries.iter_mut() {
            *v = Complex64::new(rng.gen_range(-1.0..=1.0), rng.gen_range(-1.0..=1.0));
        }
        symmetrize(&t)
    }

    pub fn bound(&self) -> i32 {
        self.bound
    }

    fn slot(&self, n: i32, m: i32) -> Option<usize> {
        if n.abs() > self.bound || m.abs() > self.bound {
            return None;
        }
        let side = 2 * self.bound + 1;
        Some(((n + self.bound) * side + (m + self.bound)) as usize)
    }

    pub fn get(&self, n: i32, m: i32) -> Complex64 {
        self.slot(n, m).map_or(Complex64::new(0.0, 0.0), |i| self.entries[i])
    }

    pub fn set(&mut self, n: i32, m: i32, value: Complex64) -> Result<()> {
        let i = self.slot(n, m).ok_or(Error::OutOfSupport { n, m, bound: self.bound })?;
        self.entries[i] = value;
        Ok(())
    }

    /// Builder-style [`set`](Self::set) for real values; panics outside the box.
    pub fn with(mut self, n: i32, m: i32, value: f64) -> Self {
        self.set(n, m, Complex64::new(value, 0.0)).expect("index inside support bound");
        self
    }

    /// All index pairs in the support box, row-major.
    pub fn indices(&self) -> impl Iterator<Item = (i32, i32)> {
        let b = self.bound;
        (-b..=b).flat_map(move |n| (-b..=b).map(move |m| (n, m)))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.iter().all(|v| *v == Complex64::new(0.0, 0.0))
    }

    pub fn is_symmetric(&self) -> bool {
        self.first_asymmetry().is_none()
    }

    fn first_asymmetry(&self) -> Option<(i32, i32)> {
        self.indices().find(|&(n, m)| self.get(n, m) != self.get(m, n))
    }

    fn require_symmetric(&self) -> Result<()> {
        match self.first_asymmetry() {
            Some((n, m)) => Err(Error::NotSymmetric { n, m }),
            None => Ok(()),
        }
    }

    /// f(x, y) = Σ a(n, m)·e(nx + my).
    pub fn evaluate(&self, x: f64, y: f64) -> Complex64 {
        let b = self.bound;
        let ex: Vec<Complex64> = (-b..=b).map(|n| e(n as f64 * x)).collect();
        let ey: Vec<Complex64> = (-b..=b).map(|m| e(m as f64 * y)).collect();
        let side = (2 * b + 1) as usize;
        let mut acc = Complex64::new(0.0, 0.0);
        for (i, exn) in ex.iter().enumerate() {
            let row = &self.entries[i * side..(i + 1) * side];
            let inner: Complex64 = row.iter().zip(&ey).map(|(a, eym)| a * eym).sum();
            acc += exn * inner;
        }
        acc
    }

    /// max |f| over the points ((i+½)/grid, (j+½)/grid).
    pub fn sampled_sup_norm(&self, grid: usize) -> f64 {
        let mut sup = 0.0f64;
        for i in 0..grid {
            for j in 0..grid {
                let x = (i as f64 + 0.5) / grid as f64;
                let y = (j as f64 + 0.5) / grid as f64;
                sup = sup.max(self.evaluate(x, y).norm());
            }
        }
        sup
    }

    pub fn scaled(&self, factor: f64) -> Self {
        CoefficientTable { bound: self.bound, entries: self.entries.iter().map(|v| v * factor).collect() }
    }
}

/// Coefficients of (f(x, y) + f(y, x))/2.
pub fn symmetrize(t: &CoefficientTable) -> CoefficientTable {
    let mut out = CoefficientTable::zeros(t.bound);
    for (n, m) in t.indices() {
        let v = (t.get(n, m) + t.get(m, n)) / 2.0;
        out.set(n, m, v).expect("same support box");
    }
    out
}

/// −(1/π²) Σ_{n,m≠0} |a(n,m) − a(n+m,0)|² / (nm), summed over all of Z²,
/// which equals ∫ f(w,y)·conj(f(x,z))·C(w,x,y,z) for symmetric tables.
///
/// Outside the support box only the a(n+m, 0) part survives. Along each
/// anti-diagonal n + m = k the full sum of 1/(nm) is −π²/3 for k = 0 and
/// −2/k² otherwise, so each tail is added in closed form and the value is
/// exact up to rounding.
pub fn lhs_form(t: &CoefficientTable) -> Result<f64> {
    t.require_symmetric()?;
    let mut acc = 0.0;
    for (n, m) in t.indices() {
        if n == 0 || m == 0 {
            continue;
        }
        let a = t.get(n, m);
        let diag = t.get(n + m, 0);
        acc += ((a - diag).norm_sqr() - diag.norm_sqr()) / (n as f64 * m as f64);
    }
    for k in -t.bound..=t.bound {
        acc += t.get(k, 0).norm_sqr() * anti_diagonal_sum(k);
    }
    Ok(-acc / (PI * PI))
}

/// Σ 1/(nm) over n + m = k with n, m ≠ 0.
fn anti_diagonal_sum(k: i32) -> f64 {
    if k == 0 {
        -PI * PI / 3.0
    } else {
        -2.0 / (k as f64 * k as f64)
    }
}

/// −(1/(2π²)) Σ_{n,m} |a(n,m) − a(n+1,m−1)|², equal to
/// −(2/π²)∫|f(x,y)|² sin²(π(x−y)) dx dy.
pub fn rhs_form(t: &CoefficientTable) -> Result<f64> {
    t.require_symmetric()?;
    let b = t.bound;
    let mut acc = 0.0;
    for n in -b - 1..=b {
        for m in -b..=b + 1 {
            acc += (t.get(n, m) - t.get(n + 1, m - 1)).norm_sqr();
        }
    }
    Ok(-acc / (2.0 * PI * PI))
}

/// Cell offsets (in units of 1/grid) for w, x, y, z. Distinct offsets keep
/// the four coordinates pairwise distinct at every grid node.
const QUADRATURE_OFFSETS: [f64; 4] = [0.125, 0.375, 0.625, 0.875];

fn grid_values(t: &CoefficientTable, grid: usize, first: f64, second: f64) -> Vec<Complex64> {
    let mut out = Vec::with_capacity(grid * grid);
    for i in 0..grid {
        for j in 0..grid {
            let u = (i as f64 + first) / grid as f64;
            let v = (j as f64 + second) / grid as f64;
            out.push(t.evaluate(u, v));
        }
    }
    out
}

/// Midpoint-rule value of ∫ f(w,y)·conj(f(x,z))·C(w,x,y,z) on a grid⁴
/// lattice, with f synthesized from `t`. Error is O(1/grid) from the jumps
/// of C.
///
/// Rows of w are summed in parallel; row totals are added in index order so
/// the result does not depend on scheduling.
pub fn quadrature_integral(t: &CoefficientTable, grid: usize) -> Result<f64> {
    if grid < 8 {
        return Err(Error::GridTooCoarse(grid));
    }
    if t.is_empty() {
        return Ok(0.0);
    }
    let [ow, ox, oy, oz] = QUADRATURE_OFFSETS;
    let f_wy = grid_values(t, grid, ow, oy);
    let f_xz: Vec<Complex64> = grid_values(t, grid, ox, oz).iter().map(|v| v.conj()).collect();
    let coord = |i: usize, offset: f64| TorusPoint::new((i as f64 + offset) / grid as f64);

    let rows: Vec<Complex64> = (0..grid)
        .into_par_iter()
        .map(|iw| {
            let w = coord(iw, ow);
            let mut row = Complex64::new(0.0, 0.0);
            for iy in 0..grid {
                let y = coord(iy, oy);
                let fwy = f_wy[iw * grid + iy];
                let mut inner = Complex64::new(0.0, 0.0);
                for ix in 0..grid {
                    let x = coord(ix, ox);
                    for iz in 0..grid {
                        if crossing_indicator(w, x, y, coord(iz, oz)) == 1 {
                            inner += f_xz[ix * grid + iz];
                        }
                    }
                }
                row += fwy * inner;
            }
            row
        })
        .collect();
    let total: Complex64 = rows.into_iter().sum();
    Ok(total.re / (grid as f64).powi(4))
}

/// ∫ over [lo, lo + 1/n] of e(−p·t) dt.
fn cell_transform(p: i32, lo: f64, width: f64) -> Complex64 {
    if p == 0 {
        return Complex64::new(width, 0.0);
    }
    let denom = Complex64::new(0.0, -2.0 * PI * p as f64);
    (e(-p as f64 * (lo + width)) - e(-p as f64 * lo)) / denom
}

/// Exact Fourier coefficients, truncated to |n|, |m| ≤ bound, of the ±1
/// step function that is +1 on cell (i, j) iff `{i, j}` is a top-page chord
/// of `d` (diagonal cells are −1).
pub fn step_function_table(d: &TwoPageDrawing, bound: i32) -> CoefficientTable {
    let n = d.n();
    let width = 1.0 / n as f64;
    let sign = |i: u32, j: u32| -> f64 {
        if i == j {
            return -1.0;
        }
        let chord = Chord::from_residues(i as i64, j as i64, n).expect("distinct cells");
        if d.page(chord) == Page::Top {
            1.0
        } else {
            -1.0
        }
    };
    let transforms: Vec<Vec<Complex64>> =
        (-bound..=bound).map(|p| (0..n).map(|i| cell_transform(p, i as f64 * width, width)).collect()).collect();

    let mut table = CoefficientTable::zeros(bound);
    for (pi, p) in (-bound..=bound).enumerate() {
        for (qi, q) in (-bound..=bound).enumerate() {
            let mut acc = Complex64::new(0.0, 0.0);
            for i in 0..n {
                let mut row = Complex64::new(0.0, 0.0);
                for j in 0..n {
                    row += transforms[qi][j as usize] * sign(i, j);
                }
                acc += transforms[pi][i as usize] * row;
            }
            table.set(p, q, acc).expect("inside bound");
        }
    }
    // f is symmetric; this only removes rounding asymmetry
    symmetrize(&table)
}
