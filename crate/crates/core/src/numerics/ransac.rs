use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{ols_fit, LineFit};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RansacParams {
    pub threshold: f64,
    pub iterations: usize,
    pub seed: u64,
}

impl Default for RansacParams {
    fn default() -> Self {
        RansacParams {
            threshold: 0.05,
            iterations: 2000,
            seed: 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RansacFit {
    pub slope: f64,
    pub intercept: f64,
    pub inlier_mask: Vec<bool>,
    pub inlier_fit: LineFit,
    pub params: RansacParams,
}

impl RansacFit {
    pub fn inlier_count(&self) -> usize {
        self.inlier_mask.iter().filter(|&&b| b).count()
    }
}

/// Two-point RANSAC with vertical residuals. The first strictly largest
/// consensus set wins and is refitted by least squares.
pub fn ransac_fit(points: &[(f64, f64)], params: RansacParams) -> Result<RansacFit> {
    if points.len() < 2 {
        return Err(Error::invalid("RANSAC needs at least two points"));
    }
    if !(params.threshold > 0.0) {
        return Err(Error::invalid("RANSAC threshold must be positive"));
    }
    if params.iterations == 0 {
        return Err(Error::invalid("RANSAC needs at least one iteration"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let n = points.len();
    let mut best: Vec<bool> = Vec::new();
    let mut best_count = 0usize;
    let mut mask = vec![false; n];
    for _ in 0..params.iterations {
        let i = rng.random_range(0..n);
        let mut j = rng.random_range(0..n - 1);
        if j >= i {
            j += 1;
        }
        let ((x1, y1), (x2, y2)) = (points[i], points[j]);
        if x1 == x2 {
            continue;
        }
        let slope = (y2 - y1) / (x2 - x1);
        let intercept = y1 - slope * x1;
        let mut count = 0;
        for (m, &(x, y)) in mask.iter_mut().zip(points) {
            *m = (y - (slope * x + intercept)).abs() <= params.threshold;
            count += *m as usize;
        }
        if count > best_count {
            best_count = count;
            best.clone_from(&mask);
        }
    }
    if best_count < 2 {
        return Err(Error::NoConsensus);
    }
    let (xs, ys): (Vec<f64>, Vec<f64>) = points
        .iter()
        .zip(&best)
        .filter(|(_, &keep)| keep)
        .map(|(&p, _)| p)
        .unzip();
    let inlier_fit = ols_fit(&xs, &ys)?;
    Ok(RansacFit {
        slope: inlier_fit.slope,
        intercept: inlier_fit.intercept,
        inlier_mask: best,
        inlier_fit,
        params,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn slope_two_with_outliers(seed: u64) -> Vec<(f64, f64)> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut pts: Vec<(f64, f64)> = (0..60)
            .map(|_| {
                let x = rng.random_range(-1.0..1.0);
                (x, 2.0 * x)
            })
            .collect();
        for _ in 0..40 {
            let x = rng.random_range(-1.0..1.0);
            let off = rng.random_range(0.6..3.0) * if rng.random::<bool>() { 1.0 } else { -1.0 };
            pts.push((x, 2.0 * x + off));
        }
        pts
    }

    #[test]
    fn recovers_line_and_inliers() {
        for seed in 0..5 {
            let pts = slope_two_with_outliers(seed);
            let fit = ransac_fit(&pts, RansacParams { seed, ..Default::default() }).unwrap();
            assert!((fit.slope - 2.0).abs() <= 1e-6);
            let expected: Vec<bool> = (0..100).map(|i| i < 60).collect();
            assert_eq!(fit.inlier_mask, expected);
        }
    }

    #[test]
    fn collinear_all_inliers() {
        let pts: Vec<(f64, f64)> = (0..20).map(|i| (i as f64, 3.0 - 0.5 * i as f64)).collect();
        let fit = ransac_fit(&pts, RansacParams::default()).unwrap();
        assert_eq!(fit.inlier_count(), 20);
    }

    #[test]
    fn infinite_threshold_is_ols() {
        let pts = slope_two_with_outliers(9);
        let fit = ransac_fit(
            &pts,
            RansacParams {
                threshold: f64::INFINITY,
                iterations: 10,
                seed: 1,
            },
        )
        .unwrap();
        let (xs, ys): (Vec<f64>, Vec<f64>) = pts.iter().copied().unzip();
        let ols = ols_fit(&xs, &ys).unwrap();
        assert!((fit.slope - ols.slope).abs() < 1e-9);
        assert!((fit.intercept - ols.intercept).abs() < 1e-9);
    }

    #[test]
    fn deterministic_and_validated() {
        let pts = slope_two_with_outliers(3);
        let p = RansacParams { seed: 11, iterations: 50, threshold: 0.05 };
        assert_eq!(ransac_fit(&pts, p).unwrap(), ransac_fit(&pts, p).unwrap());
        assert!(ransac_fit(&pts[..1], p).is_err());
        assert!(ransac_fit(&pts, RansacParams { threshold: 0.0, ..p }).is_err());
        assert!(ransac_fit(&pts, RansacParams { iterations: 0, ..p }).is_err());
        let same_x = [(1.0, 0.0), (1.0, 5.0), (1.0, 9.0)];
        assert!(matches!(ransac_fit(&same_x, p), Err(Error::NoConsensus)));
    }
}
