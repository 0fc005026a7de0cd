use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Least-squares line with Pearson correlation and the population standard
/// deviations of both coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LineFit {
    pub slope: f64,
    pub intercept: f64,
    pub r: f64,
    pub sigma_x: f64,
    pub sigma_y: f64,
    pub n_points: usize,
}

impl LineFit {
    pub fn predict(&self, x: f64) -> f64 {
        self.slope * x + self.intercept
    }
}

pub fn ols_fit(xs: &[f64], ys: &[f64]) -> Result<LineFit> {
    if xs.len() != ys.len() {
        return Err(Error::shape(
            format!("{} y values", xs.len()),
            ys.len(),
        ));
    }
    if xs.len() < 2 {
        return Err(Error::DegenerateFit("fewer than two points"));
    }
    if xs.iter().any(|v| !v.is_finite()) || ys.iter().any(|v| !v.is_finite()) {
        return Err(Error::DegenerateFit("non-finite coordinate"));
    }
    if xs.iter().all(|&x| x == xs[0]) {
        return Err(Error::DegenerateFit("all x values are equal"));
    }
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let (mut sxx, mut syy, mut sxy) = (0.0, 0.0, 0.0);
    for (&x, &y) in xs.iter().zip(ys) {
        let (dx, dy) = (x - mx, y - my);
        sxx += dx * dx;
        syy += dy * dy;
        sxy += dx * dy;
    }
    if !(sxx > 0.0) {
        return Err(Error::DegenerateFit("zero variance in x"));
    }
    let slope = sxy / sxx;
    let r = if syy > 0.0 {
        (sxy / (sxx * syy).sqrt()).clamp(-1.0, 1.0)
    } else {
        0.0
    };
    Ok(LineFit {
        slope,
        intercept: my - slope * mx,
        r,
        sigma_x: (sxx / n).sqrt(),
        sigma_y: (syy / n).sqrt(),
        n_points: xs.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    /// Solves the 2x2 normal equations with raw sums (Cramer's rule).
    fn normal_equations(xs: &[f64], ys: &[f64]) -> (f64, f64, f64) {
        let n = xs.len() as f64;
        let sx: f64 = xs.iter().sum();
        let sy: f64 = ys.iter().sum();
        let sxx: f64 = xs.iter().map(|x| x * x).sum();
        let syy: f64 = ys.iter().map(|y| y * y).sum();
        let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| x * y).sum();
        let det = n * sxx - sx * sx;
        let slope = (n * sxy - sx * sy) / det;
        let intercept = (sxx * sy - sx * sxy) / det;
        let r = (n * sxy - sx * sy) / ((n * sxx - sx * sx).sqrt() * (n * syy - sy * sy).sqrt());
        (slope, intercept, r)
    }

    #[test]
    fn exact_lines() {
        let f = ols_fit(&[0.0, 1.0, 2.0], &[0.0, 2.0, 4.0]).unwrap();
        assert_eq!((f.slope, f.intercept, f.r), (2.0, 0.0, 1.0));
        let f = ols_fit(&[0.0, 1.0], &[1.0, 0.0]).unwrap();
        assert_eq!((f.slope, f.intercept, f.r), (-1.0, 1.0, -1.0));
    }

    #[test]
    fn degenerate_inputs() {
        assert!(matches!(ols_fit(&[1.0, 1.0, 1.0], &[0.0, 1.0, 2.0]), Err(Error::DegenerateFit(_))));
        assert!(matches!(ols_fit(&[1.0], &[1.0]), Err(Error::DegenerateFit(_))));
        assert!(matches!(ols_fit(&[1.0, 2.0], &[1.0]), Err(Error::Shape { .. })));
    }

    #[test]
    fn matches_normal_equations() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let xs: Vec<f64> = (0..200).map(|_| rng.random_range(-3.0..3.0)).collect();
        let ys: Vec<f64> = xs.iter().map(|x| 0.7 * x - 1.0 + rng.random_range(-0.5..0.5)).collect();
        let f = ols_fit(&xs, &ys).unwrap();
        let (s, b, r) = normal_equations(&xs, &ys);
        assert!((f.slope - s).abs() < 1e-9);
        assert!((f.intercept - b).abs() < 1e-9);
        assert!((f.r - r).abs() < 1e-9);
    }

    proptest! {
        #[test]
        fn slope_identity(points in prop::collection::vec((-1e3f64..1e3, -1e3f64..1e3), 2..80)) {
            let (xs, ys): (Vec<f64>, Vec<f64>) = points.into_iter().unzip();
            if let Ok(f) = ols_fit(&xs, &ys) {
                prop_assert!((-1.0..=1.0).contains(&f.r));
                let via = f.r * f.sigma_y / f.sigma_x;
                prop_assert!((f.slope - via).abs() <= 1e-9 * f.slope.abs().max(1.0));
            }
        }

        #[test]
        fn shift_in_x(points in prop::collection::vec((-10f64..10.0, -10f64..10.0), 3..40), c in -5f64..5.0) {
            let (xs, ys): (Vec<f64>, Vec<f64>) = points.into_iter().unzip();
            let shifted: Vec<f64> = xs.iter().map(|x| x + c).collect();
            if let (Ok(a), Ok(b)) = (ols_fit(&xs, &ys), ols_fit(&shifted, &ys)) {
                prop_assert!((a.slope - b.slope).abs() < 1e-8 * a.slope.abs().max(1.0));
                prop_assert!((a.r - b.r).abs() < 1e-9);
                prop_assert!((b.intercept - (a.intercept - a.slope * c)).abs() < 1e-7);
            }
        }
    }
}
