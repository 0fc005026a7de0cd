use std::fs;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use super::Report;
use crate::error::{Error, Result};
use crate::fingerprint::{Fingerprint, DISTANCE_NAMES};
use crate::numerics::RansacFit;
use crate::oeis::SequenceId;
use crate::tsv::real;

fn write_file(path: &Path, body: impl FnOnce(&mut dyn Write) -> std::io::Result<()>) -> Result<PathBuf> {
    let file = fs::File::create(path).map_err(|e| Error::io(path, e))?;
    let mut out = BufWriter::new(file);
    body(&mut out)
        .and_then(|_| out.flush())
        .map_err(|e| Error::io(path, e))?;
    Ok(path.to_path_buf())
}

/// `fig1_<distance>.tsv`: one row per sequence, undefined values as `NaN`.
pub fn export_distances(dir: &Path, rows: &[Fingerprint]) -> Result<Vec<PathBuf>> {
    DISTANCE_NAMES
        .iter()
        .enumerate()
        .map(|(k, name)| {
            write_file(&dir.join(format!("fig1_{name}.tsv")), |out| {
                writeln!(out, "index\tid\t{name}")?;
                for (i, fp) in rows.iter().enumerate() {
                    let d = &fp.distances;
                    let v = [d.kl, d.ks, d.wd, Some(d.tv)][k].unwrap_or(f64::NAN);
                    writeln!(out, "{i}\t{}\t{}", fp.id, real(v))?;
                }
                Ok(())
            })
        })
        .collect()
}

/// `fig2.tsv`: the correlation coefficient of each sequence's fit.
pub fn export_correlations(dir: &Path, rows: &[Fingerprint]) -> Result<PathBuf> {
    write_file(&dir.join("fig2.tsv"), |out| {
        writeln!(out, "index\tid\tr")?;
        for (i, fp) in rows.iter().enumerate() {
            writeln!(out, "{i}\t{}\t{}", fp.id, real(fp.features.0[2]))?;
        }
        Ok(())
    })
}

/// `fig3.tsv`: `(r, s)` points with their inlier flags, under a `#` header
/// carrying the robust line.
pub fn export_slope_scatter(dir: &Path, points: &[(SequenceId, (f64, f64))], fit: &RansacFit) -> Result<PathBuf> {
    if points.len() != fit.inlier_mask.len() {
        return Err(Error::shape(format!("{} inlier flags", points.len()), fit.inlier_mask.len()));
    }
    write_file(&dir.join("fig3.tsv"), |out| {
        writeln!(out, "# ransac_slope\t{}", real(fit.slope))?;
        writeln!(out, "# ransac_intercept\t{}", real(fit.intercept))?;
        writeln!(out, "# inlier_r\t{}", real(fit.inlier_fit.r))?;
        writeln!(out, "# inliers\t{}\t{}", fit.inlier_count(), points.len())?;
        writeln!(
            out,
            "# threshold\t{}\titerations\t{}\tseed\t{}",
            real(fit.params.threshold),
            fit.params.iterations,
            fit.params.seed
        )?;
        writeln!(out, "id\tr\ts\tinlier")?;
        for ((id, (r, s)), inlier) in points.iter().zip(&fit.inlier_mask) {
            writeln!(out, "{id}\t{}\t{}\t{}", real(*r), real(*s), *inlier as u8)?;
        }
        Ok(())
    })
}

/// `fig5.tsv`: headline metrics of every report.
pub fn export_model_summary(dir: &Path, reports: &[Report]) -> Result<PathBuf> {
    write_file(&dir.join("fig5.tsv"), |out| {
        writeln!(out, "model\tdataset\tmetric\tvalue")?;
        for r in reports {
            for (metric, v) in [
                ("subset_accuracy", r.subset_accuracy),
                ("weighted_precision", r.weighted_precision),
                ("weighted_recall", r.weighted_recall),
                ("weighted_f1", r.weighted_f1),
            ] {
                writeln!(out, "{}\t{}\t{metric}\t{}", r.model_id, r.dataset_id, real(v))?;
            }
        }
        Ok(())
    })
}

/// `fig6_<model>.tsv`: per-label scores of one report.
pub fn export_label_scores(dir: &Path, report: &Report) -> Result<PathBuf> {
    write_file(&dir.join(format!("fig6_{}.tsv", report.model_id)), |out| {
        writeln!(out, "label\tprecision\trecall\tf1\tsupport")?;
        for (name, m) in report.label_names.iter().zip(&report.labels) {
            writeln!(
                out,
                "{name}\t{}\t{}\t{}\t{}",
                real(m.precision),
                real(m.recall),
                real(m.f1),
                m.support
            )?;
        }
        Ok(())
    })
}
