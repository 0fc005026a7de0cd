//! Fluctuation scaling of a sequence read from stdin: log variance against
//! log mean over its prefixes.
//!
//! seq 1 2000 | cargo run --example taylor_fit

use std::io::Read;

use seqprint::fingerprint::{taylor_features, taylor_points};
use seqprint::oeis::parse_terms_text;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut text = String::new();
    std::io::stdin().read_to_string(&mut text)?;
    let terms = parse_terms_text(&text)?;
    let points = taylor_points(&terms);
    let fit = taylor_features(&terms);
    println!("{} terms, {} usable prefix points", terms.len(), points.len());
    if fit.degenerate {
        println!("fit is degenerate (constant or too short)");
    } else {
        println!("slope {:.4}  intercept {:.4}  r {:.6}", fit.s, fit.intercept, fit.r);
    }
    Ok(())
}
