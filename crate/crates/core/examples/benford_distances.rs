//! Leading-digit distribution of 2^n and its distance to the Benford curve.
//!
//! cargo run --example benford_distances -- 1000

use num_bigint::BigInt;
use seqprint::fingerprint::{benford_reference, digit_distribution, Distances};

fn main() {
    let n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(1000);
    let terms: Vec<BigInt> = (0..n).map(|k| BigInt::from(1) << k).collect();
    let dist = digit_distribution(&terms);
    let reference = benford_reference();

    println!("digit  observed  benford");
    for d in 1..=9 {
        println!("{d:>5}  {:>8.4}  {:>7.4}", dist.b_d[d], reference.digit(d));
    }
    let show = |v: Option<f64>| v.map_or("undefined".to_string(), |v| format!("{v:.6}"));
    let dd = Distances::of(&dist);
    println!("kl {}  ks {}  wd {}  tv {:.6}", show(dd.kl), show(dd.ks), show(dd.wd), dd.tv);
}
