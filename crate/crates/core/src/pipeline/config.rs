use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::learn::Hyper;
use crate::numerics::RansacParams;
use crate::oeis::CACHE_DIR_ENV;
use crate::seeds::derive_seed;

/// Where the OEIS corpus comes from and which part of it is used.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct CorpusConfig {
    /// Directory of cached `A??????.json` entries and b-files.
    pub cache_dir: PathBuf,
    /// Optional stripped file adding sequences absent from the cache.
    pub stripped: Option<PathBuf>,
    /// Optional names file for those sequences.
    pub names: Option<PathBuf>,
    /// Ids fetched into the cache before loading.
    pub fetch: Vec<String>,
    pub rate_limit: f64,
    pub min_terms: usize,
    /// Random subset size of the qualifying sequences; all when unset.
    pub sample_size: Option<usize>,
    pub sample_seed: Option<u64>,
}

impl Default for CorpusConfig {
    fn default() -> Self {
        CorpusConfig {
            cache_dir: PathBuf::from("oeis-cache"),
            stripped: None,
            names: None,
            fetch: Vec::new(),
            rate_limit: 1.0,
            min_terms: 990,
            sample_size: None,
            sample_seed: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RandomConfig {
    pub count: usize,
    pub length: usize,
    pub lo: i64,
    pub hi: i64,
    pub seed: Option<u64>,
}

impl Default for RandomConfig {
    fn default() -> Self {
        RandomConfig {
            count: 40_000,
            length: 2000,
            lo: 0,
            hi: 1_000_000,
            seed: None,
        }
    }
}

/// Train/validation/test fractions per task.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SplitConfig {
    pub oeis_vs_random: [f64; 3],
    pub keywords: [f64; 3],
    pub seed: Option<u64>,
}

impl Default for SplitConfig {
    fn default() -> Self {
        SplitConfig {
            oeis_vs_random: [0.875, 0.0, 0.125],
            keywords: [0.9, 0.0, 0.1],
            seed: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RansacConfig {
    pub threshold: f64,
    pub iterations: usize,
    pub seed: Option<u64>,
}

impl Default for RansacConfig {
    fn default() -> Self {
        RansacConfig {
            threshold: 0.05,
            iterations: 2000,
            seed: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct PreprocessConfig {
    pub scale: bool,
    pub pca: bool,
    pub pca_components: usize,
}

impl Default for PreprocessConfig {
    fn default() -> Self {
        PreprocessConfig {
            scale: true,
            pca: true,
            pca_components: 14,
        }
    }
}

impl PreprocessConfig {
    pub fn components(&self) -> Option<usize> {
        self.pca.then_some(self.pca_components)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Task {
    OeisVsRandom,
    Keywords,
}

impl Task {
    pub const ALL: [Task; 2] = [Task::OeisVsRandom, Task::Keywords];

    pub fn as_str(&self) -> &'static str {
        match self {
            Task::OeisVsRandom => "oeis_vs_random",
            Task::Keywords => "keywords",
        }
    }

    pub fn parse(text: &str) -> Result<Task> {
        match text.replace('-', "_").as_str() {
            "oeis_vs_random" => Ok(Task::OeisVsRandom),
            "keywords" => Ok(Task::Keywords),
            _ => Err(Error::invalid(format!("unknown task {text:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ModelKind {
    Forest,
    Extra,
    Baseline,
}

impl ModelKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            ModelKind::Forest => "forest",
            ModelKind::Extra => "extra",
            ModelKind::Baseline => "baseline",
        }
    }

    pub fn parse(text: &str) -> Result<ModelKind> {
        match text {
            "forest" => Ok(ModelKind::Forest),
            "extra" => Ok(ModelKind::Extra),
            "baseline" => Ok(ModelKind::Baseline),
            _ => Err(Error::invalid(format!("unknown model kind {text:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct TrainConfig {
    pub oeis_vs_random: Vec<ModelKind>,
    pub keywords: Vec<ModelKind>,
    /// Trees of the random forest on the OEIS-versus-random task.
    pub binary_forest_trees: usize,
    pub forest_trees: usize,
    pub extra_trees: usize,
    pub max_depth: Option<usize>,
    pub min_samples_leaf: usize,
    pub max_features: usize,
    pub seed: Option<u64>,
}

impl Default for TrainConfig {
    fn default() -> Self {
        TrainConfig {
            oeis_vs_random: vec![ModelKind::Forest],
            keywords: vec![ModelKind::Forest, ModelKind::Extra, ModelKind::Baseline],
            binary_forest_trees: 665,
            forest_trees: 744,
            extra_trees: 1059,
            max_depth: None,
            min_samples_leaf: 1,
            max_features: 4,
            seed: None,
        }
    }
}

impl TrainConfig {
    pub fn kinds(&self, task: Task) -> &[ModelKind] {
        match task {
            Task::OeisVsRandom => &self.oeis_vs_random,
            Task::Keywords => &self.keywords,
        }
    }

    pub fn hyper(&self, task: Task, kind: ModelKind, seed: u64) -> Hyper {
        let n_trees = match (task, kind) {
            (Task::OeisVsRandom, ModelKind::Forest) => self.binary_forest_trees,
            (_, ModelKind::Extra) => self.extra_trees,
            _ => self.forest_trees,
        };
        Hyper {
            max_depth: self.max_depth,
            min_samples_leaf: self.min_samples_leaf,
            max_features: self.max_features,
            seed,
            ..Hyper::with_trees(n_trees)
        }
    }
}

/// The whole experiment in one declarative file. Relative paths resolve
/// against the directory holding the file.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    pub seed: u64,
    /// Worker threads; 0 uses one per core.
    pub workers: usize,
    pub out: Option<PathBuf>,
    pub corpus: CorpusConfig,
    pub random: RandomConfig,
    pub split: SplitConfig,
    pub ransac: RansacConfig,
    pub preprocess: PreprocessConfig,
    pub train: TrainConfig,
    #[serde(skip)]
    pub base_dir: PathBuf,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            seed: 0,
            workers: 0,
            out: None,
            corpus: CorpusConfig::default(),
            random: RandomConfig::default(),
            split: SplitConfig::default(),
            ransac: RansacConfig::default(),
            preprocess: PreprocessConfig::default(),
            train: TrainConfig::default(),
            base_dir: PathBuf::from("."),
        }
    }
}

impl RunConfig {
    pub fn from_toml(text: &str) -> Result<RunConfig> {
        let config: RunConfig = toml::from_str(text).map_err(|e| Error::invalid(format!("config: {e}")))?;
        config.validate()?;
        Ok(config)
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("config is always representable as TOML")
    }

    pub fn load(path: &Path) -> Result<RunConfig> {
        let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        let mut config = RunConfig::from_toml(&text).map_err(|e| match e {
            Error::Invalid(m) => Error::invalid(format!("{}: {m}", path.display())),
            other => other,
        })?;
        config.base_dir = path.parent().map(Path::to_path_buf).unwrap_or_default();
        Ok(config)
    }

    pub fn validate(&self) -> Result<()> {
        for (name, f) in [("oeis_vs_random", self.split.oeis_vs_random), ("keywords", self.split.keywords)] {
            crate::dataset::split_sizes(0, f).map_err(|e| Error::invalid(format!("split.{name}: {e}")))?;
        }
        if self.random.lo >= self.random.hi || self.random.length == 0 {
            return Err(Error::invalid("random: need lo < hi and length >= 1"));
        }
        if !(self.ransac.threshold > 0.0) || self.ransac.iterations == 0 {
            return Err(Error::invalid("ransac: need threshold > 0 and iterations >= 1"));
        }
        if self.preprocess.pca && !(1..=14).contains(&self.preprocess.pca_components) {
            return Err(Error::invalid("preprocess.pca_components must be in 1..=14"));
        }
        Ok(())
    }

    fn resolve(&self, p: &Path) -> PathBuf {
        if p.is_absolute() {
            p.to_path_buf()
        } else {
            self.base_dir.join(p)
        }
    }

    /// The entry cache, overridable through the environment.
    pub fn cache_dir(&self) -> PathBuf {
        match std::env::var_os(CACHE_DIR_ENV) {
            Some(dir) if !dir.is_empty() => PathBuf::from(dir),
            _ => self.resolve(&self.corpus.cache_dir),
        }
    }

    pub fn stripped_path(&self) -> Option<PathBuf> {
        self.corpus.stripped.as_deref().map(|p| self.resolve(p))
    }

    pub fn names_path(&self) -> Option<PathBuf> {
        self.corpus.names.as_deref().map(|p| self.resolve(p))
    }

    pub fn out_dir(&self) -> PathBuf {
        match &self.out {
            Some(p) => self.resolve(p),
            None => PathBuf::from("seqprint-out"),
        }
    }

    /// Explicit per-stage seed, else one derived from the master seed.
    pub fn stage_seed(&self, explicit: Option<u64>, stage: &str) -> u64 {
        explicit.unwrap_or_else(|| derive_seed(self.seed, stage))
    }

    pub fn ransac_params(&self) -> RansacParams {
        RansacParams {
            threshold: self.ransac.threshold,
            iterations: self.ransac.iterations,
            seed: self.stage_seed(self.ransac.seed, "ransac"),
        }
    }
}
