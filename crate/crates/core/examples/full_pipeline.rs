//! Every stage over the bundled fixture, into a directory of your choice.
//!
//! cargo run --release --example full_pipeline -- /tmp/seqprint-run

use std::path::{Path, PathBuf};

use seqprint::evaluate::Report;
use seqprint::pipeline::{run_pipeline, Layout, RunConfig};

fn main() -> seqprint::Result<()> {
    let out = std::env::args().nth(1).map(PathBuf::from).unwrap_or_else(|| PathBuf::from("seqprint-out"));
    let mut cfg = RunConfig::load(&Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures/fixture.toml"))?;
    cfg.out = Some(std::path::absolute(&out).map_err(|e| seqprint::Error::io(&out, e))?);
    run_pipeline(&cfg)?;

    let layout = Layout::new(cfg.out_dir());
    let mut paths: Vec<_> = std::fs::read_dir(layout.reports())
        .map_err(|e| seqprint::Error::io(layout.reports(), e))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    paths.sort();
    for p in paths {
        let r = Report::load(&p)?;
        println!("{:<24} {} rows  weighted f1 {:.4}", r.model_id, r.rows, r.weighted_f1);
    }
    println!("artifacts in {}", cfg.out_dir().display());
    Ok(())
}
