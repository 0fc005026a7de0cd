//! Wide-exponent reals, streaming moments and line fitting.

mod moments;
mod ols;
mod ransac;
mod wide;

pub use moments::{running_moments, RunningMoments};
pub use ols::{ols_fit, LineFit};
pub use ransac::{ransac_fit, RansacFit, RansacParams};
pub use wide::WideReal;
