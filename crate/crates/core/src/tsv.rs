//! Shared text formatting for the tab-separated artifacts.

/// Seventeen significant digits: enough for an exact `f64` round trip.
pub fn real(v: f64) -> String {
    format!("{v:.16e}")
}

pub fn parse_real(text: &str) -> Option<f64> {
    text.trim().parse().ok()
}
