use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use seqprint::fingerprint::{DISTANCE_NAMES, FEATURE_NAMES};
use seqprint::learn::ModelFile;
use seqprint::pipeline::{self, Layout, ModelKind, RunConfig, Task};
use seqprint::tsv::real;
use seqprint::{Error, Result};

/// Benford and Taylor fingerprints of integer sequences, and classifiers over them.
#[derive(Parser)]
#[command(name = "seqprint", version)]
struct Cli {
    /// Run configuration (TOML). Defaults apply when omitted.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Master seed, overriding the configuration.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Output directory, overriding the configuration.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build the corpus manifest from the entry cache and OEIS files.
    Ingest,
    /// Fingerprint every corpus sequence.
    Features,
    /// Robust slope fit over the (r, s) points.
    Ransac,
    /// Labels, random negatives and splits for both tasks.
    MakeDataset,
    /// Train models; every configured model when no task is given.
    Train {
        #[arg(long, value_parser = ["oeis-vs-random", "keywords"])]
        task: Option<String>,
        #[arg(long, value_parser = ["forest", "extra", "baseline"])]
        kind: Option<String>,
    },
    /// Score the trained models on held-out rows.
    Evaluate,
    /// Write the plot-data files.
    ExportFigs,
    /// Fingerprint one sequence read from standard input.
    Classify {
        /// Model used for label prediction; defaults to the keyword forest
        /// in the output directory when present.
        #[arg(long)]
        model: Option<PathBuf>,
    },
    /// Every stage in order.
    Run,
}

fn config(cli: &Cli) -> Result<RunConfig> {
    let mut cfg = match &cli.config {
        Some(path) => RunConfig::load(path)?,
        None => RunConfig::default(),
    };
    if let Some(seed) = cli.seed {
        cfg.seed = seed;
    }
    if let Some(out) = &cli.out {
        let cwd = std::env::current_dir().map_err(|e| Error::io(".", e))?;
        cfg.out = Some(cwd.join(out));
    }
    Ok(cfg)
}

fn execute(cli: Cli) -> Result<()> {
    let cfg = config(&cli)?;
    match cli.command {
        Command::Ingest => {
            let s = pipeline::ingest(&cfg)?;
            println!("loaded {}, qualifying {}, selected {}", s.loaded, s.qualifying, s.selected);
        }
        Command::Features => println!("fingerprinted {} sequences", pipeline::features(&cfg)?),
        Command::Ransac => {
            let a = pipeline::ransac(&cfg)?;
            println!(
                "slope {:.4} intercept {:.4} inlier r {:.4} inliers {}/{}",
                a.fit.slope,
                a.fit.intercept,
                a.fit.inlier_fit.r,
                a.fit.inlier_count(),
                a.points.len()
            );
        }
        Command::MakeDataset => {
            let (binary, keywords) = pipeline::make_dataset(&cfg)?;
            println!("oeis_vs_random {binary} rows, keywords {keywords} rows");
        }
        Command::Train { task, kind } => {
            let tasks = match &task {
                Some(t) => vec![Task::parse(t)?],
                None => Task::ALL.to_vec(),
            };
            for task in tasks {
                let kinds = match &kind {
                    Some(k) => vec![ModelKind::parse(k)?],
                    None => cfg.train.kinds(task).to_vec(),
                };
                for kind in kinds {
                    println!("{}", pipeline::train(&cfg, task, kind)?.display());
                }
            }
        }
        Command::Evaluate => {
            for report in pipeline::evaluate(&cfg)? {
                println!("{}", report.to_table());
            }
        }
        Command::ExportFigs => {
            for path in pipeline::export_figs(&cfg)? {
                println!("{}", path.display());
            }
        }
        Command::Classify { model } => {
            let mut input = String::new();
            std::io::stdin()
                .read_to_string(&mut input)
                .map_err(|e| Error::io("<stdin>", e))?;
            let default = Layout::new(cfg.out_dir()).model(Task::Keywords, ModelKind::Forest);
            let path = model.or_else(|| default.is_file().then_some(default));
            let file = path.as_deref().map(ModelFile::load).transpose()?;
            let c = pipeline::classify(&input, file.as_ref())?;
            println!("terms\t{}", c.terms);
            for (name, v) in FEATURE_NAMES.iter().zip(c.features.0) {
                println!("{name}\t{}", real(v));
            }
            let d = c.distances;
            for (name, v) in DISTANCE_NAMES.iter().zip([d.kl, d.ks, d.wd, Some(d.tv)]) {
                println!("{name}\t{}", real(v.unwrap_or(f64::NAN)));
            }
            if let Some(labels) = c.labels {
                let shown = if labels.is_empty() { "-".to_string() } else { labels.join(",") };
                println!("labels\t{shown}");
            }
        }
        Command::Run => {
            pipeline::run_pipeline(&cfg)?;
            println!("artifacts in {}", cfg.out_dir().display());
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match std::panic::catch_unwind(|| execute(cli)) {
        Ok(Ok(())) => ExitCode::SUCCESS,
        Ok(Err(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
        Err(_) => ExitCode::from(3),
    }
}
