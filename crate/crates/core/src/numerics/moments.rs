use num_bigint::BigInt;

use super::WideReal;

/// Prefix means and prefix sample variances, index `n - 1` holding the
/// statistics of the first `n` terms.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct RunningMoments {
    pub mu: Vec<WideReal>,
    pub var: Vec<WideReal>,
}

impl RunningMoments {
    pub fn len(&self) -> usize {
        self.mu.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mu.is_empty()
    }
}

/// Welford's single-pass update over wide values. The variance uses divisor
/// `n - 1` and is zero for the first term.
pub fn running_moments(terms: &[BigInt]) -> RunningMoments {
    let mut out = RunningMoments {
        mu: Vec::with_capacity(terms.len()),
        var: Vec::with_capacity(terms.len()),
    };
    let mut mean = WideReal::ZERO;
    let mut m2 = WideReal::ZERO;
    for (i, term) in terms.iter().enumerate() {
        let n = (i + 1) as u64;
        let x = WideReal::from_bigint(term);
        let delta = x - mean;
        let wn = WideReal::from_u64(n);
        mean = mean + delta / wn;
        // delta^2 (n-1)/n is non-negative by construction
        m2 = m2 + delta * delta * WideReal::from_u64(n - 1) / wn;
        out.mu.push(mean);
        out.var.push(if n == 1 {
            WideReal::ZERO
        } else {
            m2 / WideReal::from_u64(n - 1)
        });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use num_traits::{Signed, ToPrimitive, Zero};
    use proptest::prelude::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    /// Exact mean and sample variance of the whole slice, in rationals.
    fn exact(terms: &[BigInt]) -> (BigRational, BigRational) {
        let n = terms.len();
        let values: Vec<BigRational> =
            terms.iter().map(|t| BigRational::from_integer(t.clone())).collect();
        let mu = values.iter().fold(BigRational::zero(), |a, b| a + b)
            / BigRational::from_integer(BigInt::from(n));
        if n == 1 {
            return (mu, BigRational::zero());
        }
        let ss = values
            .iter()
            .fold(BigRational::zero(), |a, t| a + (t - &mu) * (t - &mu));
        (mu, ss / BigRational::from_integer(BigInt::from(n - 1)))
    }

    fn rational_ln(q: &BigRational) -> f64 {
        let num = WideReal::from_bigint(q.numer()).ln();
        let den = WideReal::from_bigint(q.denom()).ln();
        num - den
    }

    fn rel_close(w: WideReal, q: &BigRational, tol: f64) -> bool {
        if q.is_zero() {
            return w.to_f64().abs() < 1e-9;
        }
        if w.is_sign_positive() != q.is_positive() {
            return false;
        }
        // relative error via logs keeps the check valid beyond f64 range
        (w.abs().ln() - rational_ln(&q.abs())).abs() < tol
    }

    #[test]
    fn hand_example() {
        let m = running_moments(&ints(&[1, 2, 3]));
        let mu: Vec<f64> = m.mu.iter().map(|w| w.to_f64()).collect();
        let var: Vec<f64> = m.var.iter().map(|w| w.to_f64()).collect();
        assert_eq!(mu, vec![1.0, 1.5, 2.0]);
        assert_eq!(var, vec![0.0, 0.5, 1.0]);
    }

    #[test]
    fn constant_has_zero_variance() {
        let m = running_moments(&ints(&[7, 7, 7, 7]));
        assert!(m.var.iter().all(|v| v.is_zero()));
    }

    #[test]
    fn powers_of_two_match_rational_oracle() {
        let terms: Vec<BigInt> = (0..1000usize).map(|k| BigInt::from(1) << k).collect();
        let m = running_moments(&terms);
        for n in [1, 2, 10, 500, 1000] {
            let (mu, var) = exact(&terms[..n]);
            assert!(rel_close(m.mu[n - 1], &mu, 1e-9), "mu({n})");
            assert!(rel_close(m.var[n - 1], &var, 1e-9), "var({n})");
        }
    }

    #[test]
    fn population_relation() {
        let terms = ints(&[3, 1, 4, 1, 5, 9, 2, 6, 5, 3, 5]);
        let m = running_moments(&terms);
        for n in 2..=terms.len() {
            let head: Vec<f64> = terms[..n].iter().map(|t| t.to_f64().unwrap()).collect();
            let mean = head.iter().sum::<f64>() / n as f64;
            let pop = head.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / n as f64;
            let via = (n - 1) as f64 * m.var[n - 1].to_f64() / n as f64;
            assert!((pop - via).abs() < 1e-12 * pop.max(1.0));
        }
    }

    proptest! {
        #[test]
        fn small_sequences_match_oracle(v in prop::collection::vec(-1000i64..1000, 1..50)) {
            let terms = ints(&v);
            let m = running_moments(&terms);
            prop_assert_eq!(m.len(), terms.len());
            for n in 0..terms.len() {
                let (mu, var) = exact(&terms[..=n]);
                prop_assert!(rel_close(m.mu[n], &mu, 1e-10));
                prop_assert!(!(m.var[n] < WideReal::ZERO));
                prop_assert!(rel_close(m.var[n], &var, 1e-10));
            }
        }
    }
}
