use serde::{Deserialize, Serialize};

use super::OeisEntry;

/// The eight keyword labels, in their frozen column order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Label {
    Nice,
    Core,
    Easy,
    Mult,
    Prime,
    Binomial,
    Palindrome,
    Other,
}

impl Label {
    pub const ALL: [Label; 8] = [
        Label::Nice,
        Label::Core,
        Label::Easy,
        Label::Mult,
        Label::Prime,
        Label::Binomial,
        Label::Palindrome,
        Label::Other,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Label::Nice => "nice",
            Label::Core => "core",
            Label::Easy => "easy",
            Label::Mult => "mult",
            Label::Prime => "prime",
            Label::Binomial => "binomial",
            Label::Palindrome => "palindrome",
            Label::Other => "other",
        }
    }

    pub fn index(&self) -> usize {
        *self as usize
    }

    pub fn names() -> Vec<String> {
        Label::ALL.iter().map(|l| l.name().to_string()).collect()
    }
}

/// Presence flags for the eight labels. `other` is set exactly when none of
/// the first seven are.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct LabelSet {
    flags: [bool; 7],
}

impl LabelSet {
    pub fn from_labels<I: IntoIterator<Item = Label>>(labels: I) -> Self {
        let mut set = LabelSet::default();
        for label in labels {
            if label != Label::Other {
                set.flags[label.index()] = true;
            }
        }
        set
    }

    /// Rebuilds a set from an 8-column row; fails when the `other` column
    /// contradicts the other seven.
    pub fn from_row(row: &[bool]) -> Option<Self> {
        if row.len() != 8 {
            return None;
        }
        let mut flags = [false; 7];
        flags.copy_from_slice(&row[..7]);
        let set = LabelSet { flags };
        (set.contains(Label::Other) == row[7]).then_some(set)
    }

    pub fn contains(&self, label: Label) -> bool {
        match label {
            Label::Other => !self.flags.iter().any(|&f| f),
            l => self.flags[l.index()],
        }
    }

    pub fn to_row(&self) -> Vec<bool> {
        Label::ALL.iter().map(|&l| self.contains(l)).collect()
    }

    pub fn labels(&self) -> impl Iterator<Item = Label> + '_ {
        Label::ALL.into_iter().filter(|&l| self.contains(l))
    }
}

/// Keyword labels straight from the keyword field; word labels by
/// case-insensitive substring search over the name and comments.
///
/// Substring matching means "primes" counts as `prime`, and so does "primer".
pub fn extract_labels(entry: &OeisEntry) -> LabelSet {
    let text: Vec<String> = std::iter::once(&entry.name)
        .chain(entry.comments.iter())
        .map(|s| s.to_lowercase())
        .collect();
    let mentions = |word: &str| text.iter().any(|t| t.contains(word));

    let mut labels = Vec::new();
    for (label, keyword) in [
        (Label::Nice, "nice"),
        (Label::Core, "core"),
        (Label::Easy, "easy"),
        (Label::Mult, "mult"),
    ] {
        if entry.has_keyword(keyword) {
            labels.push(label);
        }
    }
    for (label, word) in [
        (Label::Prime, "prime"),
        (Label::Binomial, "binomial"),
        (Label::Palindrome, "palindrome"),
    ] {
        if mentions(word) {
            labels.push(label);
        }
    }
    LabelSet::from_labels(labels)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oeis::{keyword_tokens, SequenceId};

    fn entry(keywords: &str, name: &str, comments: &[&str]) -> OeisEntry {
        OeisEntry {
            id: SequenceId::oeis(1).unwrap(),
            name: name.into(),
            keywords: keyword_tokens(keywords),
            comments: comments.iter().map(|s| s.to_string()).collect(),
            terms: vec![],
        }
    }

    #[test]
    fn keyword_mapping() {
        let set = extract_labels(&entry("core,nice,easy", "Fibonacci numbers", &[]));
        assert_eq!(
            set.labels().collect::<Vec<_>>(),
            vec![Label::Nice, Label::Core, Label::Easy]
        );
    }

    #[test]
    fn word_mapping() {
        let set = extract_labels(&entry("", "Smallest prime containing n digits", &[]));
        assert_eq!(set.labels().collect::<Vec<_>>(), vec![Label::Prime]);

        let set = extract_labels(&entry("nonn", "a(n)", &["Row sums of BINOMIAL transform.", "Palindromes in base 3."]));
        assert_eq!(
            set.labels().collect::<Vec<_>>(),
            vec![Label::Binomial, Label::Palindrome]
        );
    }

    #[test]
    fn other_when_nothing_matches() {
        let set = extract_labels(&entry("", "Number of trees", &[]));
        assert_eq!(set.labels().collect::<Vec<_>>(), vec![Label::Other]);
        assert_eq!(set.to_row(), vec![false, false, false, false, false, false, false, true]);
    }

    #[test]
    fn case_insensitive() {
        let lower = entry("mult", "sum of divisors of primes", &["binomial(n,k)"]);
        let upper = entry("mult", "SUM OF DIVISORS OF PRIMES", &["BINOMIAL(N,K)"]);
        assert_eq!(extract_labels(&lower), extract_labels(&upper));
    }

    #[test]
    fn row_round_trip_enforces_other() {
        let set = LabelSet::from_labels([Label::Mult, Label::Prime]);
        assert_eq!(LabelSet::from_row(&set.to_row()), Some(set));
        let mut bad = set.to_row();
        bad[7] = true;
        assert_eq!(LabelSet::from_row(&bad), None);
    }

    proptest::proptest! {
        #[test]
        fn extraction_ignores_case(name in "[a-zA-Z ]{0,40}", comment in "[a-zA-Z ]{0,40}", kw in "(nice|core|easy|mult|nonn)(,(nice|core|easy|mult|nonn)){0,3}") {
            let a = entry(&kw, &name, &[&comment]);
            let b = entry(&kw, &name.to_uppercase(), &[&comment.to_uppercase()]);
            proptest::prop_assert_eq!(extract_labels(&a), extract_labels(&a));
            proptest::prop_assert_eq!(extract_labels(&a), extract_labels(&b));
        }
    }
}
