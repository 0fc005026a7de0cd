use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

/// How a node picks its threshold on a candidate feature.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SplitRule {
    /// Best Gini gain over every distinct value of the feature.
    BestGini,
    /// One uniform threshold in `[min, max)` of the feature at the node.
    RandomThreshold,
}

/// Growth limits and randomisation knobs shared by every tree of a forest.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TreeParams {
    pub max_depth: Option<usize>,
    pub min_samples_leaf: usize,
    pub max_features: usize,
    pub split_rule: SplitRule,
}

/// Flat node storage; children are indices into the same vector.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Node {
    /// `[feature, threshold, left, right]`; `x[feature] <= threshold` goes left.
    Split(usize, f64, u32, u32),
    /// `[negatives, positives]` among the training samples reaching the leaf.
    Leaf(u32, u32),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Tree {
    pub nodes: Vec<Node>,
}

impl Tree {
    fn leaf_of(&self, row: &[f64]) -> (u32, u32) {
        let mut at = 0usize;
        loop {
            match self.nodes[at] {
                Node::Split(f, t, l, r) => at = if row[f] <= t { l as usize } else { r as usize },
                Node::Leaf(neg, pos) => return (neg, pos),
            }
        }
    }

    /// Fraction of positive training samples in the leaf reached by `row`.
    pub fn predict_proba(&self, row: &[f64]) -> f64 {
        let (neg, pos) = self.leaf_of(row);
        pos as f64 / (neg + pos) as f64
    }

    pub fn depth(&self) -> usize {
        let mut deepest = 0;
        let mut stack = vec![(0usize, 0usize)];
        while let Some((at, d)) = stack.pop() {
            deepest = deepest.max(d);
            if let Node::Split(_, _, l, r) = self.nodes[at] {
                stack.push((l as usize, d + 1));
                stack.push((r as usize, d + 1));
            }
        }
        deepest
    }

    pub fn split_count(&self) -> usize {
        self.nodes.iter().filter(|n| matches!(n, Node::Split(..))).count()
    }
}

/// `n * gini` of a node with the given class counts.
fn weighted_gini(neg: usize, pos: usize) -> f64 {
    let n = (neg + pos) as f64;
    if n == 0.0 {
        return 0.0;
    }
    n - (neg * neg + pos * pos) as f64 / n
}

struct Candidate {
    feature: usize,
    threshold: f64,
    gain: f64,
}

struct Grower<'a> {
    x: &'a [Vec<f64>],
    y: &'a [bool],
    params: TreeParams,
    n_features: usize,
}

impl Grower<'_> {
    fn counts(&self, samples: &[usize]) -> (usize, usize) {
        let pos = samples.iter().filter(|&&i| self.y[i]).count();
        (samples.len() - pos, pos)
    }

    fn best_gini(&self, samples: &[usize], feature: usize, parent: f64) -> Option<Candidate> {
        let mut order: Vec<(f64, bool)> = samples.iter().map(|&i| (self.x[i][feature], self.y[i])).collect();
        order.sort_by(|a, b| a.0.total_cmp(&b.0));
        let n = order.len();
        let total_pos = order.iter().filter(|s| s.1).count();
        let leaf = self.params.min_samples_leaf.max(1);
        let mut best: Option<Candidate> = None;
        let mut left_pos = 0;
        for k in 0..n - 1 {
            left_pos += order[k].1 as usize;
            if order[k].0 == order[k + 1].0 {
                continue;
            }
            let nl = k + 1;
            if nl < leaf || n - nl < leaf {
                continue;
            }
            let gain = parent
                - weighted_gini(nl - left_pos, left_pos)
                - weighted_gini(n - nl - (total_pos - left_pos), total_pos - left_pos);
            if best.as_ref().is_none_or(|b| gain > b.gain) {
                best = Some(Candidate {
                    feature,
                    threshold: order[k].0,
                    gain,
                });
            }
        }
        best
    }

    fn random_threshold(
        &self,
        samples: &[usize],
        feature: usize,
        parent: f64,
        rng: &mut ChaCha8Rng,
    ) -> Option<Candidate> {
        let (lo, hi) = samples.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &i| {
            let v = self.x[i][feature];
            (lo.min(v), hi.max(v))
        });
        if !(lo < hi) {
            return None;
        }
        let threshold = rng.random_range(lo..hi);
        let (mut nl, mut left_pos, mut total_pos) = (0, 0, 0);
        for &i in samples {
            total_pos += self.y[i] as usize;
            if self.x[i][feature] <= threshold {
                nl += 1;
                left_pos += self.y[i] as usize;
            }
        }
        let n = samples.len();
        let leaf = self.params.min_samples_leaf.max(1);
        if nl < leaf || n - nl < leaf {
            return None;
        }
        let gain = parent
            - weighted_gini(nl - left_pos, left_pos)
            - weighted_gini(n - nl - (total_pos - left_pos), total_pos - left_pos);
        Some(Candidate {
            feature,
            threshold,
            gain,
        })
    }

    /// Features are shuffled, then examined in blocks of `max_features`
    /// (each block in ascending index order) until a block yields a split.
    fn choose(&self, samples: &[usize], parent: f64, rng: &mut ChaCha8Rng) -> Option<Candidate> {
        let mut features: Vec<usize> = (0..self.n_features).collect();
        features.shuffle(rng);
        let block = self.params.max_features.clamp(1, self.n_features);
        for chunk in features.chunks(block) {
            let mut chunk = chunk.to_vec();
            chunk.sort_unstable();
            let mut best: Option<Candidate> = None;
            for f in chunk {
                let found = match self.params.split_rule {
                    SplitRule::BestGini => self.best_gini(samples, f, parent),
                    SplitRule::RandomThreshold => self.random_threshold(samples, f, parent, rng),
                };
                if let Some(c) = found {
                    if best.as_ref().is_none_or(|b| c.gain > b.gain) {
                        best = Some(c);
                    }
                }
            }
            if best.is_some() {
                return best;
            }
        }
        None
    }
}

/// Grows one tree on the given sample indices (repeats allowed, as drawn by
/// a bootstrap). Returns the tree and its unnormalised impurity decrease per
/// feature.
pub fn tree_fit(
    x: &[Vec<f64>],
    y: &[bool],
    samples: Vec<usize>,
    params: TreeParams,
    rng: &mut ChaCha8Rng,
) -> (Tree, Vec<f64>) {
    let n_features = x.first().map_or(0, |r| r.len());
    let grower = Grower {
        x,
        y,
        params,
        n_features,
    };
    let mut importance = vec![0.0; n_features];
    let mut nodes: Vec<Node> = vec![Node::Leaf(0, 0)];
    let mut stack = vec![(0usize, samples, 0usize)];
    while let Some((slot, samples, depth)) = stack.pop() {
        let (neg, pos) = grower.counts(&samples);
        let stop = neg == 0
            || pos == 0
            || params.max_depth.is_some_and(|d| depth >= d)
            || samples.len() < 2 * params.min_samples_leaf.max(1)
            || n_features == 0;
        let parent = weighted_gini(neg, pos);
        let chosen = if stop { None } else { grower.choose(&samples, parent, rng) };
        match chosen {
            None => nodes[slot] = Node::Leaf(neg as u32, pos as u32),
            Some(c) => {
                importance[c.feature] += c.gain.max(0.0);
                let (left, right): (Vec<usize>, Vec<usize>) =
                    samples.iter().partition(|&&i| x[i][c.feature] <= c.threshold);
                let l = nodes.len();
                nodes.push(Node::Leaf(0, 0));
                nodes.push(Node::Leaf(0, 0));
                nodes[slot] = Node::Split(c.feature, c.threshold, l as u32, l as u32 + 1);
                // right pushed first so the left subtree is numbered first
                stack.push((l + 1, right, depth + 1));
                stack.push((l, left, depth + 1));
            }
        }
    }
    (Tree { nodes }, importance)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    fn params(rule: SplitRule, max_features: usize) -> TreeParams {
        TreeParams {
            max_depth: None,
            min_samples_leaf: 1,
            max_features,
            split_rule: rule,
        }
    }

    fn accuracy(tree: &Tree, x: &[Vec<f64>], y: &[bool]) -> f64 {
        let hits = x.iter().zip(y).filter(|(r, &t)| (tree.predict_proba(r) >= 0.5) == t).count();
        hits as f64 / y.len() as f64
    }

    #[test]
    fn separable_threshold() {
        let x: Vec<Vec<f64>> = (0..100).map(|i| vec![i as f64 - 50.0]).collect();
        let y: Vec<bool> = x.iter().map(|r| r[0] >= 0.0).collect();
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let (tree, imp) = tree_fit(&x, &y, (0..100).collect(), params(SplitRule::BestGini, 1), &mut rng);
        assert_eq!(tree.split_count(), 1);
        assert_eq!(tree.nodes[0], Node::Split(0, -1.0, 1, 2));
        assert_eq!(accuracy(&tree, &x, &y), 1.0);
        assert!(imp[0] > 0.0);
    }

    #[test]
    fn pure_input_is_a_leaf() {
        let x = vec![vec![1.0], vec![2.0]];
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let (tree, _) = tree_fit(&x, &[true, true], vec![0, 1], params(SplitRule::BestGini, 1), &mut rng);
        assert_eq!(tree.nodes, vec![Node::Leaf(0, 2)]);
    }

    #[test]
    fn xor_needs_depth_two() {
        let base = [([0.0, 0.0], false), ([0.0, 1.0], true), ([1.0, 0.0], true), ([1.0, 1.0], false)];
        let (x, y): (Vec<Vec<f64>>, Vec<bool>) =
            (0..50).flat_map(|_| base.iter().map(|(p, l)| (p.to_vec(), *l))).unzip();
        for rule in [SplitRule::BestGini, SplitRule::RandomThreshold] {
            let mut rng = ChaCha8Rng::seed_from_u64(3);
            let (tree, _) = tree_fit(&x, &y, (0..200).collect(), params(rule, 2), &mut rng);
            assert_eq!(accuracy(&tree, &x, &y), 1.0, "{rule:?}");
            assert!(tree.depth() >= 2);
        }
    }

    #[test]
    fn limits_are_respected() {
        let x: Vec<Vec<f64>> = (0..64).map(|i| vec![(i * 37 % 64) as f64, (i % 7) as f64]).collect();
        let y: Vec<bool> = (0..64).map(|i| i % 3 == 0).collect();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let p = TreeParams {
            max_depth: Some(3),
            min_samples_leaf: 5,
            ..params(SplitRule::BestGini, 2)
        };
        let (tree, _) = tree_fit(&x, &y, (0..64).collect(), p, &mut rng);
        assert!(tree.depth() <= 3);
        assert!(tree.nodes.iter().all(|n| match n {
            Node::Leaf(a, b) => a + b >= 5,
            _ => true,
        }));
    }

    #[test]
    fn ties_prefer_lowest_feature() {
        // features 0 and 1 are identical
        let x: Vec<Vec<f64>> = (0..10).map(|i| vec![i as f64, i as f64]).collect();
        let y: Vec<bool> = (0..10).map(|i| i >= 5).collect();
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let (tree, _) = tree_fit(&x, &y, (0..10).collect(), params(SplitRule::BestGini, 2), &mut rng);
        assert_eq!(tree.nodes[0], Node::Split(0, 4.0, 1, 2));
    }
}
