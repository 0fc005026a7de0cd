//! Leading-digit and variance-scaling fingerprints of integer sequences, with
//! tree-ensemble classifiers built on top of them.

#![allow(clippy::neg_cmp_op_on_partial_ord)] // `!(x > 0.0)` guards also reject NaN

pub mod dataset;
pub mod error;
pub mod evaluate;
pub mod fingerprint;
pub mod learn;
pub mod numerics;
pub mod oeis;
pub mod pipeline;
pub mod seeds;
pub mod tsv;

pub use error::{Error, Result};
