use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SplitTag {
    Train,
    Validation,
    Test,
}

impl SplitTag {
    pub const ALL: [SplitTag; 3] = [SplitTag::Train, SplitTag::Validation, SplitTag::Test];

    pub fn as_str(&self) -> &'static str {
        match self {
            SplitTag::Train => "train",
            SplitTag::Validation => "validation",
            SplitTag::Test => "test",
        }
    }
}

impl fmt::Display for SplitTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SplitTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SplitTag::ALL
            .into_iter()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| Error::invalid(format!("unknown split tag {s:?}")))
    }
}

/// Part sizes: floors first, then one extra row each to the parts with the
/// largest fractional remainders (earlier parts win ties).
pub fn split_sizes(rows: usize, fractions: [f64; 3]) -> Result<[usize; 3]> {
    if fractions.iter().any(|f| !(*f >= 0.0)) {
        return Err(Error::invalid("split fractions must be non-negative"));
    }
    let total: f64 = fractions.iter().sum();
    if (total - 1.0).abs() > 1e-9 {
        return Err(Error::invalid(format!("split fractions sum to {total}, not 1")));
    }
    let exact = fractions.map(|f| f * rows as f64);
    let mut sizes = exact.map(|e| (e + 1e-9).floor() as usize);
    let mut order = [0usize, 1, 2];
    order.sort_by(|&a, &b| {
        let fa = exact[a] - sizes[a] as f64;
        let fb = exact[b] - sizes[b] as f64;
        fb.total_cmp(&fa).then(a.cmp(&b))
    });
    let assigned: usize = sizes.iter().sum();
    for &k in order.iter().cycle().take(rows.saturating_sub(assigned)) {
        sizes[k] += 1;
    }
    Ok(sizes)
}

/// Random partition of `rows` row indices into train, validation and test.
pub fn split(rows: usize, fractions: [f64; 3], seed: u64) -> Result<Vec<SplitTag>> {
    let sizes = split_sizes(rows, fractions)?;
    let mut order: Vec<usize> = (0..rows).collect();
    order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    let mut tags = vec![SplitTag::Train; rows];
    for (pos, &row) in order.iter().enumerate() {
        tags[row] = if pos < sizes[0] {
            SplitTag::Train
        } else if pos < sizes[0] + sizes[1] {
            SplitTag::Validation
        } else {
            SplitTag::Test
        };
    }
    Ok(tags)
}
