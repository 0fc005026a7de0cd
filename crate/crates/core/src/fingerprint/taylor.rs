use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::numerics::{ols_fit, running_moments};

/// Log-log fit of prefix variance against prefix mean. A degenerate fit has
/// every numeric field zeroed.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TaylorFit {
    pub s: f64,
    pub intercept: f64,
    pub r: f64,
    pub sigma_x: f64,
    pub sigma_y: f64,
    pub n_points: usize,
    pub degenerate: bool,
}

impl TaylorFit {
    fn degenerate(n_points: usize) -> Self {
        TaylorFit {
            s: 0.0,
            intercept: 0.0,
            r: 0.0,
            sigma_x: 0.0,
            sigma_y: 0.0,
            n_points,
            degenerate: true,
        }
    }
}

/// The `(ln mean, ln variance)` points for every prefix of length at least
/// two whose mean and variance are both positive.
pub fn taylor_points(terms: &[BigInt]) -> Vec<(f64, f64)> {
    let m = running_moments(terms);
    m.mu
        .iter()
        .zip(&m.var)
        .skip(1)
        .filter(|(mu, var)| mu.is_sign_positive() && var.is_sign_positive())
        .map(|(mu, var)| (mu.ln(), var.ln()))
        .collect()
}

pub fn taylor_features(terms: &[BigInt]) -> TaylorFit {
    let (xs, ys): (Vec<f64>, Vec<f64>) = taylor_points(terms).into_iter().unzip();
    match ols_fit(&xs, &ys) {
        Ok(fit) => TaylorFit {
            s: fit.slope,
            intercept: fit.intercept,
            r: fit.r,
            sigma_x: fit.sigma_x,
            sigma_y: fit.sigma_y,
            n_points: fit.n_points,
            degenerate: false,
        },
        Err(_) => TaylorFit::degenerate(xs.len()),
    }
}
