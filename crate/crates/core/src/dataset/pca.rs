use nalgebra::{DMatrix, SymmetricEigen};
use serde::{Deserialize, Serialize};

use super::scale::check_width;
use crate::error::{Error, Result};

/// Principal axes of the sample covariance, strongest first. Every
/// eigenvalue is kept in `explained_variance`; only the first `k` axes are
/// used for projection.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PcaModel {
    pub mean: Vec<f64>,
    /// Row `i` is the `i`-th unit axis.
    pub components: Vec<Vec<f64>>,
    pub explained_variance: Vec<f64>,
    pub k: usize,
}

impl PcaModel {
    pub fn fit(x: &[Vec<f64>], k: usize) -> Result<Self> {
        if x.len() < 2 {
            return Err(Error::invalid("PCA needs at least two rows"));
        }
        let d = x[0].len();
        check_width(x, d)?;
        if k == 0 || k > d {
            return Err(Error::invalid(format!("PCA components must be in 1..={d}, got {k}")));
        }
        if x.iter().flatten().any(|v| !v.is_finite()) {
            return Err(Error::Eigen("non-finite input".into()));
        }
        let n = x.len();
        let mut mean = vec![0.0; d];
        for row in x {
            for (m, v) in mean.iter_mut().zip(row) {
                *m += v;
            }
        }
        mean.iter_mut().for_each(|m| *m /= n as f64);
        let centered = DMatrix::from_fn(n, d, |i, j| x[i][j] - mean[j]);
        let cov = (centered.transpose() * &centered) / (n - 1) as f64;
        let eig = SymmetricEigen::try_new(cov, f64::EPSILON, 10_000)
            .ok_or_else(|| Error::Eigen("no convergence".into()))?;

        let mut order: Vec<usize> = (0..d).collect();
        order.sort_by(|&a, &b| eig.eigenvalues[b].total_cmp(&eig.eigenvalues[a]).then(a.cmp(&b)));
        let mut components = Vec::with_capacity(d);
        let mut explained_variance = Vec::with_capacity(d);
        for &i in &order {
            let mut axis: Vec<f64> = eig.eigenvectors.column(i).iter().copied().collect();
            // sign: largest-magnitude entry positive
            let pivot = axis
                .iter()
                .enumerate()
                .fold(0, |best, (j, v)| if v.abs() > axis[best].abs() { j } else { best });
            if axis[pivot] < 0.0 {
                axis.iter_mut().for_each(|v| *v = -*v);
            }
            components.push(axis);
            explained_variance.push(eig.eigenvalues[i].max(0.0));
        }
        Ok(PcaModel {
            mean,
            components,
            explained_variance,
            k,
        })
    }

    pub fn apply(&self, x: &[Vec<f64>]) -> Result<Vec<Vec<f64>>> {
        check_width(x, self.mean.len())?;
        Ok(x.iter()
            .map(|row| {
                self.components[..self.k]
                    .iter()
                    .map(|axis| {
                        axis.iter()
                            .zip(row.iter().zip(&self.mean))
                            .map(|(a, (v, m))| a * (v - m))
                            .sum()
                    })
                    .collect()
            })
            .collect())
    }

    pub fn reconstruct(&self, z: &[Vec<f64>]) -> Result<Vec<Vec<f64>>> {
        check_width(z, self.k)?;
        Ok(z.iter()
            .map(|scores| {
                let mut row = self.mean.clone();
                for (score, axis) in scores.iter().zip(&self.components) {
                    for (r, a) in row.iter_mut().zip(axis) {
                        *r += score * a;
                    }
                }
                row
            })
            .collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn noisy(n: usize, d: usize, seed: u64) -> Vec<Vec<f64>> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..n)
            .map(|_| (0..d).map(|j| rng.random_range(-1.0..1.0) * (j + 1) as f64).collect())
            .collect()
    }

    #[test]
    fn diagonal_line() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let x: Vec<Vec<f64>> = (0..200)
            .map(|_| {
                let t = rng.random_range(-5.0..5.0);
                vec![t + rng.random_range(-1e-3..1e-3), t + rng.random_range(-1e-3..1e-3)]
            })
            .collect();
        let m = PcaModel::fit(&x, 1).unwrap();
        let axis = &m.components[0];
        let cos = (axis[0] + axis[1]) / 2f64.sqrt();
        assert!(cos.acos() < 1e-2);
    }

    #[test]
    fn full_rank_reconstruction_and_orthonormality() {
        let x = noisy(100, 14, 3);
        let m = PcaModel::fit(&x, 14).unwrap();
        let back = m.reconstruct(&m.apply(&x).unwrap()).unwrap();
        for (a, b) in x.iter().zip(&back) {
            for (u, v) in a.iter().zip(b) {
                assert!((u - v).abs() < 1e-6);
            }
        }
        for i in 0..14 {
            for j in 0..14 {
                let dot: f64 = m.components[i].iter().zip(&m.components[j]).map(|(a, b)| a * b).sum();
                assert!((dot - (i == j) as u8 as f64).abs() < 1e-9);
            }
        }
        assert!(m.explained_variance.windows(2).all(|w| w[0] >= w[1]));
        // total variance is preserved
        let n = x.len() as f64;
        let total: f64 = (0..14)
            .map(|j| {
                let mean = x.iter().map(|r| r[j]).sum::<f64>() / n;
                x.iter().map(|r| (r[j] - mean).powi(2)).sum::<f64>() / (n - 1.0)
            })
            .sum();
        assert!((m.explained_variance.iter().sum::<f64>() - total).abs() < 1e-6);
    }

    #[test]
    fn duplicated_column_has_zero_eigenvalue() {
        let x: Vec<Vec<f64>> = noisy(50, 3, 4).into_iter().map(|r| vec![r[0], r[1], r[2], r[1]]).collect();
        let m = PcaModel::fit(&x, 4).unwrap();
        assert!(m.explained_variance[3].abs() < 1e-9);
    }

    #[test]
    fn invalid_inputs() {
        assert!(PcaModel::fit(&[vec![1.0, 2.0]], 1).is_err());
        assert!(PcaModel::fit(&noisy(5, 2, 0), 3).is_err());
        assert!(PcaModel::fit(&noisy(5, 2, 0), 0).is_err());
        assert!(matches!(PcaModel::fit(&[vec![f64::NAN], vec![1.0]], 1), Err(Error::Eigen(_))));
    }
}
