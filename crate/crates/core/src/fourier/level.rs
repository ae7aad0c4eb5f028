//! Per-level quadratic forms.
//!
//! For a level k ≥ 2 the differences b(n, k−n) along one anti-diagonal are
//! parametrized by c_1..c_⌊k/2⌋: b(n, k−n) = c_1 + … + c_n for n ≤ k/2, with
//! b(0, k) = 0 and the mirror symmetry b(n, k−n) = b(k−n, n). The weighted
//! form Σ |b(n,k−n)|²/(n(k−n)) never exceeds the difference form
//! Σ |b(n,k−n) − b(n+1,k−n−1)|²/2, with equality at c_n = k + 1 − 2n.

use nalgebra::{DMatrix, SymmetricEigen};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct LevelVector {
    k: u32,
    c: Vec<f64>,
}

impl LevelVector {
    pub fn new(k: u32, c: Vec<f64>) -> Result<Self> {
        if k < 2 {
            return Err(Error::LevelTooSmall(k));
        }
        let expected = (k / 2) as usize;
        if c.len() != expected {
            return Err(Error::LevelLength { k, expected, got: c.len() });
        }
        Ok(LevelVector { k, c })
    }

    /// c_n = k + 1 − 2n.
    pub fn canonical(k: u32) -> Result<Self> {
        let c = (1..=k / 2).map(|n| (k + 1 - 2 * n) as f64).collect();
        Self::new(k, c)
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn entries(&self) -> &[f64] {
        &self.c
    }

    /// b(n, k−n) for n = 0..=k.
    pub fn reconstruct(&self) -> Vec<f64> {
        let k = self.k as usize;
        let mut prefix = vec![0.0; self.c.len() + 1];
        for (i, ci) in self.c.iter().enumerate() {
            prefix[i + 1] = prefix[i] + ci;
        }
        (0..=k).map(|n| prefix[n.min(k - n)]).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LevelForms {
    pub lhs: f64,
    pub rhs: f64,
}

fn weighted_terms(k: usize, b: &[f64]) -> impl Iterator<Item = f64> + '_ {
    (1..k).map(move |n| b[n] * b[n] / (n * (k - n)) as f64)
}

fn difference_terms(k: usize, b: &[f64]) -> impl Iterator<Item = f64> + '_ {
    (0..k).map(move |n| (b[n] - b[n + 1]).powi(2) / 2.0)
}

pub fn level_form_evaluate(v: &LevelVector) -> LevelForms {
    let k = v.k as usize;
    let b = v.reconstruct();
    LevelForms { lhs: weighted_terms(k, &b).sum(), rhs: difference_terms(k, &b).sum() }
}

/// Linear map c ↦ (b(0,k), …, b(k,0)) as a (k+1) × ⌊k/2⌋ matrix.
fn reconstruction_matrix(k: usize) -> DMatrix<f64> {
    let h = k / 2;
    DMatrix::from_fn(k + 1, h, |n, i| if i < n.min(k - n) { 1.0 } else { 0.0 })
}

/// Gram matrices (lhs, rhs) of the two level forms in the c coordinates.
pub fn level_form_matrices(k: u32) -> Result<(DMatrix<f64>, DMatrix<f64>)> {
    if k < 2 {
        return Err(Error::LevelTooSmall(k));
    }
    let k = k as usize;
    let reconstruct = reconstruction_matrix(k);
    let weights =
        DMatrix::from_fn(k + 1, k + 1, |r, s| if r == s && r > 0 && r < k { 1.0 / (r * (k - r)) as f64 } else { 0.0 });
    let lhs = reconstruct.transpose() * weights * &reconstruct;

    let differences = DMatrix::from_fn(k, k + 1, |r, s| {
        if s == r {
            1.0
        } else if s == r + 1 {
            -1.0
        } else {
            0.0
        }
    });
    let d = differences * &reconstruct;
    let rhs = d.transpose() * d * 0.5;
    Ok((lhs, rhs))
}

#[derive(Clone, Debug, PartialEq)]
pub struct LevelEigen {
    /// Largest value of lhs/rhs over nonzero c.
    pub ratio: f64,
    /// Maximizer, unit length with a non-negative first entry.
    pub eigenvector: Vec<f64>,
}

/// Largest generalized eigenvalue of (lhs, rhs) and its eigenvector.
///
/// Reduces to a standard symmetric problem through the Cholesky factor of
/// the rhs Gram matrix.
pub fn level_max_ratio(k: u32) -> Result<LevelEigen> {
    let (lhs, rhs) = level_form_matrices(k)?;
    let chol = rhs.cholesky().expect("difference form is positive definite");
    let l = chol.l();
    let l_inv = l.clone().try_inverse().expect("triangular factor is invertible");
    let reduced = &l_inv * lhs * l_inv.transpose();
    let reduced = (&reduced + reduced.transpose()) * 0.5;
    let eig = SymmetricEigen::new(reduced);
    let (top, &ratio) =
        eig.eigenvalues.iter().enumerate().max_by(|a, b| a.1.total_cmp(b.1)).expect("at least one eigenvalue");
    let y = eig.eigenvectors.column(top).into_owned();
    let mut x = l_inv.transpose() * y;
    x /= x.norm();
    if x[0] < 0.0 {
        x = -x;
    }
    Ok(LevelEigen { ratio, eigenvector: x.iter().copied().collect() })
}

/// Cosine of the angle between two vectors.
pub fn cosine(a: &[f64], b: &[f64]) -> f64 {
    let dot: f64 = a.iter().zip(b).map(|(x, y)| x * y).sum();
    let na: f64 = a.iter().map(|x| x * x).sum::<f64>().sqrt();
    let nb: f64 = b.iter().map(|x| x * x).sum::<f64>().sqrt();
    dot / (na * nb)
}

/// Σ_{i≤n} c_i for the canonical vector, n = 1..=⌊k/2⌋, in integers.
pub fn canonical_partial_sums(k: u32) -> Vec<i64> {
    let k = k as i64;
    (1..=k / 2)
        .scan(0i64, |acc, n| {
            *acc += k + 1 - 2 * n;
            Some(*acc)
        })
        .collect()
}

/// Both level forms at the canonical vector, in exact integer arithmetic.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExactLevelForms {
    pub lhs: i128,
    pub rhs: i128,
}

pub fn canonical_forms_exact(k: u32) -> Result<ExactLevelForms> {
    if k < 2 {
        return Err(Error::LevelTooSmall(k));
    }
    let kk = k as i128;
    let partial = canonical_partial_sums(k);
    let b = |n: i128| -> i128 {
        let m = n.min(kk - n);
        if m == 0 {
            0
        } else {
            partial[m as usize - 1] as i128
        }
    };
    let mut lhs = 0i128;
    for n in 1..kk {
        let weight = n * (kk - n);
        let sq = b(n) * b(n);
        debug_assert_eq!(sq % weight, 0);
        lhs += sq / weight;
    }
    let twice_rhs: i128 = (0..kk).map(|n| (b(n) - b(n + 1)).pow(2)).sum();
    debug_assert_eq!(twice_rhs % 2, 0);
    Ok(ExactLevelForms { lhs, rhs: twice_rhs / 2 })
}

/// (k³ − k)/6.
pub fn canonical_level_value(k: u32) -> i128 {
    let k = k as i128;
    (k * k * k - k) / 6
}

/// Max over m of |∂lhs/∂c_m − 2c_m| at the canonical vector, with the
/// derivative taken by central differences with step 1e−4.
///
/// The canonical vector is integral, so with every entry scaled by 10⁴ the
/// perturbed vectors and their partial sums are exact integers. Each term's
/// difference of squares is formed in i128 and only the division by its
/// weight is rounded; plain f64 differencing of terms near k⁴ would lose
/// about 1e−5 to cancellation at k = 300.
///
/// Also checks Σ_{i≤n} c_i = n(k − n) exactly.
pub fn level_gradient_check(k: u32) -> Result<f64> {
    const INV_STEP: i128 = 10_000;
    let canonical = LevelVector::canonical(k)?;
    let partial = canonical_partial_sums(k);
    for (i, &sum) in partial.iter().enumerate() {
        let n = i as i64 + 1;
        let expected = n * (k as i64 - n);
        if sum != expected {
            return Err(Error::PartialSumMismatch { k, n: n as u32, got: sum, expected });
        }
    }

    let kk = k as usize;
    let scaled: Vec<i128> = canonical.c.iter().map(|&c| c as i128 * INV_STEP).collect();
    let reconstruct = |c: &[i128]| -> Vec<i128> {
        let mut prefix = vec![0i128; c.len() + 1];
        for (i, ci) in c.iter().enumerate() {
            prefix[i + 1] = prefix[i] + ci;
        }
        (0..=kk).map(|n| prefix[n.min(kk - n)]).collect()
    };
    let mut worst = 0.0f64;
    for m in 0..scaled.len() {
        let mut plus = scaled.clone();
        plus[m] += 1;
        let mut minus = scaled.clone();
        minus[m] -= 1;
        let (bp, bm) = (reconstruct(&plus), reconstruct(&minus));
        // Σ (b₊² − b₋²)/(n(k−n)), in units of 1/INV_STEP²
        let delta: f64 = (1..kk).map(|n| (bp[n] * bp[n] - bm[n] * bm[n]) as f64 / (n * (kk - n)) as f64).sum();
        let derivative = delta / (INV_STEP * INV_STEP) as f64 * INV_STEP as f64 / 2.0;
        worst = worst.max((derivative - 2.0 * canonical.c[m]).abs());
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn form_examples() {
        let v = LevelVector::new(3, vec![2.0]).unwrap();
        assert_eq!(level_form_evaluate(&v), LevelForms { lhs: 4.0, rhs: 4.0 });
        let v = LevelVector::new(2, vec![1.0]).unwrap();
        assert_eq!(level_form_evaluate(&v), LevelForms { lhs: 1.0, rhs: 1.0 });
        let v = LevelVector::new(4, vec![3.0, 1.0]).unwrap();
        let f = level_form_evaluate(&v);
        assert!((f.lhs - 10.0).abs() < 1e-12 && (f.rhs - 10.0).abs() < 1e-12, "{f:?}");
    }

    #[test]
    fn wrong_length_is_rejected() {
        assert_eq!(LevelVector::new(5, vec![1.0]), Err(Error::LevelLength { k: 5, expected: 2, got: 1 }));
        assert_eq!(LevelVector::new(1, vec![]), Err(Error::LevelTooSmall(1)));
    }

    #[test]
    fn reconstruction_is_mirror_symmetric() {
        let v = LevelVector::new(7, vec![1.0, -2.0, 0.5]).unwrap();
        let b = v.reconstruct();
        assert_eq!(b, vec![0.0, 1.0, -1.0, -0.5, -0.5, -1.0, 1.0, 0.0]);
    }

    #[test]
    fn rhs_matrix_is_identity() {
        for k in 2..20 {
            let (_, rhs) = level_form_matrices(k).unwrap();
            let h = (k / 2) as usize;
            assert_eq!(rhs, DMatrix::identity(h, h), "k = {k}");
        }
    }

    #[test]
    fn gram_matrices_agree_with_direct_evaluation() {
        let k = 9;
        let (lhs, rhs) = level_form_matrices(k).unwrap();
        let c = vec![0.3, -1.2, 2.0, 0.7];
        let forms = level_form_evaluate(&LevelVector::new(k, c.clone()).unwrap());
        let cv = nalgebra::DVector::from_vec(c);
        assert!(((cv.transpose() * &lhs * &cv)[0] - forms.lhs).abs() < 1e-12);
        assert!(((cv.transpose() * &rhs * &cv)[0] - forms.rhs).abs() < 1e-12);
    }

    #[test]
    fn max_ratio_small_levels() {
        let r = level_max_ratio(2).unwrap();
        assert!((r.ratio - 1.0).abs() < 1e-12);
        assert_eq!(r.eigenvector, vec![1.0]);

        let r = level_max_ratio(3).unwrap();
        assert!((r.ratio - 1.0).abs() < 1e-9);
        assert!((r.eigenvector[0] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn max_ratio_level_fifty() {
        let r = level_max_ratio(50).unwrap();
        assert!((r.ratio - 1.0).abs() < 1e-9);
        let expected: Vec<f64> = (1..=25).map(|n| (51 - 2 * n) as f64).collect();
        assert!(cosine(&r.eigenvector, &expected) >= 1.0 - 1e-9);
    }

    #[test]
    fn gradient_examples() {
        assert!(level_gradient_check(3).unwrap() <= 1e-6);
        assert!(level_gradient_check(2).unwrap() <= 1e-6);
        assert_eq!(canonical_partial_sums(7), vec![6, 10, 12]);
    }

    #[test]
    fn exact_forms() {
        assert_eq!(canonical_forms_exact(3), Ok(ExactLevelForms { lhs: 4, rhs: 4 }));
        assert_eq!(canonical_forms_exact(4), Ok(ExactLevelForms { lhs: 10, rhs: 10 }));
        assert_eq!(canonical_level_value(4), 10);
    }
}
