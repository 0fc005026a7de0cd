//! Robust line through the (r, slope) points of the fixture corpus.

use std::path::Path;

use seqprint::fingerprint::fingerprint_all;
use seqprint::numerics::{ransac_fit, RansacParams};
use seqprint::oeis::{load_cache_dir, select_corpus};
use seqprint::pipeline::slope_points;

fn main() -> seqprint::Result<()> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures/oeis/cache");
    let corpus = select_corpus(load_cache_dir(&dir)?.sequences, 990);
    let rows = fingerprint_all(&corpus);
    let points: Vec<(f64, f64)> = slope_points(&rows).into_iter().map(|(_, p)| p).collect();

    let fit = ransac_fit(&points, RansacParams::default())?;
    println!(
        "slope {:.4}  intercept {:.4}  inliers {}/{}  inlier r {:.4}",
        fit.slope,
        fit.intercept,
        fit.inlier_count(),
        points.len(),
        fit.inlier_fit.r
    );
    Ok(())
}
