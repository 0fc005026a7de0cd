use serde::{Deserialize, Serialize};

use super::DigitDistribution;
use crate::error::{Error, Result};

/// Benford probabilities `log10((i + 1) / i)` for digits 1..9; `b[0]` is digit 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BenfordReference {
    pub b: [f64; 9],
}

impl BenfordReference {
    pub fn digit(&self, d: usize) -> f64 {
        self.b[d - 1]
    }
}

pub fn benford_reference() -> BenfordReference {
    let mut b = [0.0; 9];
    for (i, p) in b.iter_mut().enumerate() {
        let d = (i + 1) as f64;
        *p = ((d + 1.0) / d).log10();
    }
    BenfordReference { b }
}

fn check_mass(p: &[f64; 9]) -> Result<()> {
    if p.iter().sum::<f64>() > 0.0 {
        Ok(())
    } else {
        Err(Error::UndefinedDistance)
    }
}

/// Natural-log KL divergence of `p` from Benford, with `0 log 0 = 0`.
pub fn kl_divergence(p: &[f64; 9], q: &BenfordReference) -> Result<f64> {
    check_mass(p)?;
    Ok(p.iter()
        .zip(&q.b)
        .filter(|(&pi, _)| pi > 0.0)
        .map(|(&pi, &qi)| pi * (pi / qi).ln())
        .sum::<f64>()
        .max(0.0))
}

/// Largest absolute gap between the two CDFs over digits 1..9.
pub fn ks_statistic(p: &[f64; 9], q: &BenfordReference) -> Result<f64> {
    check_mass(p)?;
    let (mut cp, mut cq, mut worst) = (0.0, 0.0, 0.0f64);
    for (&pi, &qi) in p.iter().zip(&q.b) {
        cp += pi;
        cq += qi;
        worst = worst.max((cp - cq).abs());
    }
    Ok(worst.min(1.0))
}

/// Mean absolute difference between the sorted probability values, which
/// makes the distance blind to which digit carries which mass.
pub fn wasserstein_sorted(p: &[f64; 9], q: &BenfordReference) -> Result<f64> {
    check_mass(p)?;
    let mut a = *p;
    let mut b = q.b;
    a.sort_by(f64::total_cmp);
    b.sort_by(f64::total_cmp);
    Ok(a.iter().zip(&b).map(|(x, y)| (x - y).abs()).sum::<f64>() / 9.0)
}

/// Total variation over digits 0..9, Benford having no mass at 0.
pub fn total_variation(d: &DigitDistribution, q: &BenfordReference) -> f64 {
    let gap: f64 = d.b_d[0].abs()
        + d.b_d[1..]
            .iter()
            .zip(&q.b)
            .map(|(x, y)| (x - y).abs())
            .sum::<f64>();
    (0.5 * gap).clamp(0.0, 1.0)
}

/// The four distances of a digit distribution from Benford. The first three
/// are `None` when the sequence has no nonzero term.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Distances {
    pub kl: Option<f64>,
    pub ks: Option<f64>,
    pub wd: Option<f64>,
    pub tv: f64,
}

impl Distances {
    pub fn of(d: &DigitDistribution) -> Distances {
        let q = benford_reference();
        let p = d.nonzero_digits().ok();
        Distances {
            kl: p.and_then(|p| kl_divergence(&p, &q).ok()),
            ks: p.and_then(|p| ks_statistic(&p, &q).ok()),
            wd: p.and_then(|p| wasserstein_sorted(&p, &q).ok()),
            tv: total_variation(d, &q),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn delta(d: usize) -> [f64; 9] {
        let mut p = [0.0; 9];
        p[d - 1] = 1.0;
        p
    }

    #[test]
    #[allow(clippy::approx_constant)] // hand-tabulated value
    fn reference_values() {
        let q = benford_reference();
        assert!((q.digit(1) - 0.301030).abs() < 1e-6);
        assert!((q.digit(9) - 0.045757).abs() < 1e-6);
        assert!((q.b.iter().sum::<f64>() - 1.0).abs() < 1e-12);
        assert!(q.b.windows(2).all(|w| w[0] > w[1]));
    }

    #[test]
    fn anchors() {
        let q = benford_reference();
        let log10_2 = 2f64.log10();
        assert!((kl_divergence(&[1.0 / 9.0; 9], &q).unwrap() - 0.1913).abs() < 1e-3);
        assert!((kl_divergence(&delta(1), &q).unwrap() - 1.2005).abs() < 1e-3);
        assert!((kl_divergence(&delta(1), &q).unwrap() - (1.0 / log10_2).ln()).abs() < 1e-12);
        assert!((ks_statistic(&delta(1), &q).unwrap() - 0.69897).abs() < 1e-5);
        assert!((ks_statistic(&delta(9), &q).unwrap() - 0.95424).abs() < 1e-5);
        assert!((wasserstein_sorted(&delta(9), &q).unwrap() - 0.15533).abs() < 1e-4);
        assert!((wasserstein_sorted(&delta(9), &q).unwrap() - 2.0 * (1.0 - log10_2) / 9.0).abs() < 1e-12);
        let mut d = DigitDistribution { b_d: [0.0; 10], p_z: 1.0 };
        d.b_d[1] = 1.0;
        assert!((total_variation(&d, &q) - 0.69897).abs() < 1e-5);
    }

    #[test]
    fn self_distance_is_zero() {
        let q = benford_reference();
        assert!(kl_divergence(&q.b, &q).unwrap().abs() < 1e-15);
        assert_eq!(ks_statistic(&q.b, &q).unwrap(), 0.0);
        assert_eq!(wasserstein_sorted(&q.b, &q).unwrap(), 0.0);
        let mut d = DigitDistribution { b_d: [0.0; 10], p_z: 1.0 };
        d.b_d[1..].copy_from_slice(&q.b);
        assert_eq!(total_variation(&d, &q), 0.0);
        let mut reversed = q.b;
        reversed.reverse();
        assert_eq!(wasserstein_sorted(&reversed, &q).unwrap(), 0.0);
    }

    #[test]
    fn zero_mass_is_an_error() {
        let q = benford_reference();
        assert!(matches!(kl_divergence(&[0.0; 9], &q), Err(Error::UndefinedDistance)));
        assert!(ks_statistic(&[0.0; 9], &q).is_err());
        assert!(wasserstein_sorted(&[0.0; 9], &q).is_err());
        let d = DigitDistribution { b_d: [1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0], p_z: 0.0 };
        let all = Distances::of(&d);
        assert_eq!((all.kl, all.ks, all.wd), (None, None, None));
        assert_eq!(all.tv, 0.5 * (1.0 + 1.0));
    }

    proptest! {
        #[test]
        fn ranges(raw in prop::array::uniform9(0.0f64..1.0)) {
            let total: f64 = raw.iter().sum();
            prop_assume!(total > 1e-6);
            let p = raw.map(|v| v / total);
            let q = benford_reference();
            prop_assert!(kl_divergence(&p, &q).unwrap() >= 0.0);
            let ks = ks_statistic(&p, &q).unwrap();
            prop_assert!((0.0..=1.0).contains(&ks));
            prop_assert!(wasserstein_sorted(&p, &q).unwrap() <= 0.15534);
        }
    }
}
