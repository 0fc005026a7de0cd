use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Per-column mean and population standard deviation of the training rows.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScalerModel {
    pub mean: Vec<f64>,
    pub std: Vec<f64>,
}

pub(crate) fn check_width(x: &[Vec<f64>], width: usize) -> Result<()> {
    match x.iter().find(|row| row.len() != width) {
        Some(row) => Err(Error::shape(format!("{width} columns"), row.len())),
        None => Ok(()),
    }
}

impl ScalerModel {
    pub fn fit(x: &[Vec<f64>]) -> Result<Self> {
        let first = x.first().ok_or_else(|| Error::invalid("cannot fit a scaler on zero rows"))?;
        let d = first.len();
        check_width(x, d)?;
        let n = x.len() as f64;
        let mut mean = vec![0.0; d];
        for row in x {
            for (m, v) in mean.iter_mut().zip(row) {
                *m += v;
            }
        }
        mean.iter_mut().for_each(|m| *m /= n);
        let mut std = vec![0.0; d];
        for row in x {
            for ((s, v), m) in std.iter_mut().zip(row).zip(&mean) {
                *s += (v - m) * (v - m);
            }
        }
        std.iter_mut().for_each(|s| *s = (*s / n).sqrt());
        Ok(ScalerModel { mean, std })
    }

    /// Standardizes rows; columns with zero spread map to 0.
    pub fn apply(&self, x: &[Vec<f64>]) -> Result<Vec<Vec<f64>>> {
        check_width(x, self.mean.len())?;
        Ok(x.iter()
            .map(|row| {
                row.iter()
                    .zip(self.mean.iter().zip(&self.std))
                    .map(|(v, (m, s))| if *s > 0.0 { (v - m) / s } else { 0.0 })
                    .collect()
            })
            .collect())
    }

    /// Undoes `apply`; zero-spread columns come back as their mean.
    pub fn inverse(&self, z: &[Vec<f64>]) -> Result<Vec<Vec<f64>>> {
        check_width(z, self.mean.len())?;
        Ok(z.iter()
            .map(|row| {
                row.iter()
                    .zip(self.mean.iter().zip(&self.std))
                    .map(|(v, (m, s))| v * s + m)
                    .collect()
            })
            .collect())
    }
}
