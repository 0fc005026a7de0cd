use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Confusion counts and derived scores for one label. Undefined ratios are 0.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LabelMetrics {
    pub tp: usize,
    pub fp: usize,
    #[serde(rename = "fn")]
    pub fn_: usize,
    pub tn: usize,
    pub precision: f64,
    pub recall: f64,
    pub f1: f64,
    pub support: usize,
}

impl LabelMetrics {
    pub fn from_counts(tp: usize, fp: usize, fn_: usize, tn: usize) -> Self {
        let ratio = |a: usize, b: usize| if b == 0 { 0.0 } else { a as f64 / b as f64 };
        let precision = ratio(tp, tp + fp);
        let recall = ratio(tp, tp + fn_);
        // harmonic mean of precision and recall, as one division
        let f1 = ratio(2 * tp, 2 * tp + fp + fn_);
        LabelMetrics {
            tp,
            fp,
            fn_,
            tn,
            precision,
            recall,
            f1,
            support: tp + fn_,
        }
    }

    pub fn accuracy(&self) -> f64 {
        let n = self.tp + self.fp + self.fn_ + self.tn;
        if n == 0 {
            0.0
        } else {
            (self.tp + self.tn) as f64 / n as f64
        }
    }
}

fn check_shapes(y_true: &[Vec<bool>], y_pred: &[Vec<bool>]) -> Result<usize> {
    if y_true.len() != y_pred.len() {
        return Err(Error::shape(format!("{} prediction rows", y_true.len()), y_pred.len()));
    }
    let width = y_true.first().map_or(0, |r| r.len());
    for row in y_true.iter().chain(y_pred) {
        if row.len() != width {
            return Err(Error::shape(format!("{width} label columns"), row.len()));
        }
    }
    Ok(width)
}

/// Fraction of rows whose whole label vector is predicted exactly.
pub fn subset_accuracy(y_true: &[Vec<bool>], y_pred: &[Vec<bool>]) -> Result<f64> {
    check_shapes(y_true, y_pred)?;
    if y_true.is_empty() {
        return Err(Error::invalid("subset accuracy of zero rows"));
    }
    let hits = y_true.iter().zip(y_pred).filter(|(t, p)| t == p).count();
    Ok(hits as f64 / y_true.len() as f64)
}

pub fn per_label_metrics(y_true: &[Vec<bool>], y_pred: &[Vec<bool>]) -> Result<Vec<LabelMetrics>> {
    let width = check_shapes(y_true, y_pred)?;
    Ok((0..width)
        .map(|j| {
            let mut c = [0usize; 4];
            for (t, p) in y_true.iter().zip(y_pred) {
                c[(t[j] as usize) << 1 | p[j] as usize] += 1;
            }
            // index = truth*2 + prediction
            LabelMetrics::from_counts(c[3], c[1], c[2], c[0])
        })
        .collect())
}

/// Support-weighted precision, recall and F1.
pub fn weighted_average(metrics: &[LabelMetrics]) -> Result<(f64, f64, f64)> {
    let total: usize = metrics.iter().map(|m| m.support).sum();
    if total == 0 {
        return Err(Error::ZeroSupport);
    }
    let avg = |f: fn(&LabelMetrics) -> f64| {
        metrics.iter().map(|m| m.support as f64 * f(m)).sum::<f64>() / total as f64
    };
    Ok((avg(|m| m.precision), avg(|m| m.recall), avg(|m| m.f1)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rows(v: &[&[u8]]) -> Vec<Vec<bool>> {
        v.iter().map(|r| r.iter().map(|&b| b == 1).collect()).collect()
    }

    #[test]
    fn hand_example() {
        let t = rows(&[&[1, 0], &[1, 1]]);
        let p = rows(&[&[1, 1], &[1, 0]]);
        assert_eq!(subset_accuracy(&t, &p).unwrap(), 0.0);
        let m = per_label_metrics(&t, &p).unwrap();
        assert_eq!((m[0].precision, m[0].recall, m[0].f1, m[0].support), (1.0, 1.0, 1.0, 2));
        assert_eq!((m[1].precision, m[1].recall, m[1].f1, m[1].support), (0.0, 0.0, 0.0, 1));
        let (wp, wr, wf) = weighted_average(&m).unwrap();
        for v in [wp, wr, wf] {
            assert!((v - 2.0 / 3.0).abs() < 1e-12);
        }
    }

    #[test]
    fn undefined_is_zero() {
        let t = rows(&[&[0], &[0]]);
        let m = per_label_metrics(&t, &t).unwrap();
        assert_eq!((m[0].precision, m[0].recall, m[0].f1), (0.0, 0.0, 0.0));
        assert!(matches!(weighted_average(&m), Err(Error::ZeroSupport)));
    }

    #[test]
    fn identical_and_complement() {
        let t = rows(&[&[1, 0, 1], &[0, 1, 1]]);
        let c: Vec<Vec<bool>> = t.iter().map(|r| r.iter().map(|b| !b).collect()).collect();
        assert_eq!(subset_accuracy(&t, &t).unwrap(), 1.0);
        assert_eq!(subset_accuracy(&t, &c).unwrap(), 0.0);
        assert!(per_label_metrics(&t, &t).unwrap().iter().all(|m| m.f1 == 1.0));
        assert!(subset_accuracy(&t, &t[..1]).is_err());
    }

    proptest! {
        #[test]
        fn accuracy_bounded_by_labels(bits in prop::collection::vec(prop::collection::vec(any::<(bool, bool)>(), 5), 1..30)) {
            let t: Vec<Vec<bool>> = bits.iter().map(|r| r.iter().map(|p| p.0).collect()).collect();
            let p: Vec<Vec<bool>> = bits.iter().map(|r| r.iter().map(|p| p.1).collect()).collect();
            let sa = subset_accuracy(&t, &p).unwrap();
            for m in per_label_metrics(&t, &p).unwrap() {
                prop_assert!(sa <= m.accuracy() + 1e-15);
                prop_assert_eq!(m.tp + m.fp + m.fn_ + m.tn, t.len());
            }
        }

        #[test]
        fn weighted_f1_ignores_label_order(bits in prop::collection::vec(prop::collection::vec(any::<(bool, bool)>(), 6), 1..30), rot in 0usize..6) {
            let t: Vec<Vec<bool>> = bits.iter().map(|r| r.iter().map(|p| p.0).collect()).collect();
            let p: Vec<Vec<bool>> = bits.iter().map(|r| r.iter().map(|p| p.1).collect()).collect();
            let mut m = per_label_metrics(&t, &p).unwrap();
            if let Ok(a) = weighted_average(&m) {
                m.rotate_left(rot);
                let b = weighted_average(&m).unwrap();
                prop_assert!((a.2 - b.2).abs() < 1e-12);
            }
        }
    }
}
