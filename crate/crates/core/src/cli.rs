//! Command-line front end: `gen`, `count`, `experiment`, `curve`.

use std::fs::File;
use std::io::{BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use thiserror::Error;

use crate::constraints::{self, ConstraintMode};
use crate::experiment::{
    self, EnsembleConfig, ExperimentError, RateSelection, ReferenceRate, Summary,
};
use crate::graph::{rng_from_seed, EnsembleKind, Graph, GraphError, RegularStrategy};
use crate::report;

pub const DEFAULT_SEED: u64 = 1;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Experiment(#[from] ExperimentError),
    #[error("{path}: {source}")]
    File {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

#[derive(Debug, Parser)]
#[command(name = "isbdd", version, about = "Exact independent-set and kernel counts with BDDs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a random graph and write it in `n m` / `u v` format.
    Gen(GenArgs),
    /// Count independent sets or kernels of a graph file.
    Count(CountArgs),
    /// Run an ensemble and write records, summary and curve CSVs.
    Experiment(ExperimentArgs),
    /// Recompute fluctuation curves from a records CSV with another reference rate.
    Curve(CurveArgs),
}

#[derive(Debug, Args)]
pub struct EnsembleArgs {
    /// Degree of a random regular graph.
    #[arg(long, conflicts_with = "avg_degree")]
    pub regular: Option<usize>,
    /// Average degree of a uniformly random graph with d*n/2 edges.
    #[arg(long = "avg-degree")]
    pub avg_degree: Option<usize>,
    /// Regular-graph sampler: greedy or pairing.
    #[arg(long, default_value = "greedy")]
    pub strategy: RegularStrategy,
}

impl EnsembleArgs {
    fn kind(&self) -> EnsembleKind {
        match (self.regular, self.avg_degree) {
            (_, Some(d)) => EnsembleKind::AverageDegree(d),
            (Some(k), None) => EnsembleKind::Regular(k),
            (None, None) => EnsembleKind::Regular(3),
        }
    }
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(long)]
    pub n: usize,
    #[command(flatten)]
    pub ensemble: EnsembleArgs,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Output path; standard output when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CountArgs {
    pub graph: PathBuf,
    #[arg(long, default_value = "is")]
    pub mode: ConstraintMode,
    /// Variable order as a comma-separated permutation of the vertices.
    #[arg(long)]
    pub order: Option<String>,
}

#[derive(Debug, Args)]
pub struct ExperimentArgs {
    /// Sizes as `a:b:step`, a comma list, or a single value.
    #[arg(long)]
    pub sizes: String,
    #[arg(long, default_value_t = 1000)]
    pub samples: usize,
    #[arg(long, default_value = "is")]
    pub mode: ConstraintMode,
    #[command(flatten)]
    pub ensemble: EnsembleArgs,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// auto, w, y, x, calibrated, or a number > 1.
    #[arg(long, default_value = "auto")]
    pub reference: RateSelection,
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
    #[arg(long, default_value = ".")]
    pub out_dir: PathBuf,
    /// Prefix for the three output file names.
    #[arg(long, default_value = "")]
    pub prefix: String,
}

#[derive(Debug, Args)]
pub struct CurveArgs {
    /// Records CSV written by `experiment`.
    #[arg(long)]
    pub records: PathBuf,
    /// w, y, x, calibrated, or a number > 1.
    #[arg(long)]
    pub reference: RateSelection,
    /// Output path; standard output when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Parses `6:40:2`, `6,8,10` or `6`.
pub fn parse_sizes(spec: &str) -> Result<Vec<usize>, CliError> {
    let bad = || CliError::Usage(format!("cannot parse sizes {spec:?}"));
    let num = |s: &str| s.trim().parse::<usize>().map_err(|_| bad());
    if spec.contains(':') {
        let parts: Vec<&str> = spec.split(':').collect();
        let (start, end, step) = match parts.as_slice() {
            [a, b] => (num(a)?, num(b)?, 1),
            [a, b, c] => (num(a)?, num(b)?, num(c)?),
            _ => return Err(bad()),
        };
        if step == 0 || start > end {
            return Err(bad());
        }
        Ok((start..=end).step_by(step).collect())
    } else {
        spec.split(',').map(num).collect()
    }
}

fn create(path: &Path) -> Result<BufWriter<File>, CliError> {
    File::create(path).map(BufWriter::new).map_err(|source| CliError::File {
        path: path.to_path_buf(),
        source,
    })
}

fn open(path: &Path) -> Result<BufReader<File>, CliError> {
    File::open(path).map(BufReader::new).map_err(|source| CliError::File {
        path: path.to_path_buf(),
        source,
    })
}

pub fn run(cli: Cli, stdout: &mut dyn Write) -> Result<(), CliError> {
    match cli.command {
        Command::Gen(a) => cmd_gen(a, stdout),
        Command::Count(a) => cmd_count(a, stdout),
        Command::Experiment(a) => cmd_experiment(a, stdout),
        Command::Curve(a) => cmd_curve(a, stdout),
    }
}

fn degree_summary(g: &Graph) -> String {
    let degrees = g.degrees();
    let min = degrees.iter().min().copied().unwrap_or(0);
    let max = degrees.iter().max().copied().unwrap_or(0);
    let seq = degrees.iter().map(usize::to_string).collect::<Vec<_>>().join(" ");
    format!(
        "n={} m={} min_degree={min} max_degree={max} degrees=[{seq}]",
        g.num_vertices(),
        g.num_edges()
    )
}

pub fn cmd_gen(a: GenArgs, stdout: &mut dyn Write) -> Result<(), CliError> {
    let kind = a.ensemble.kind();
    let g = kind.sample(a.n, a.ensemble.strategy, &mut rng_from_seed(a.seed))?;
    match &a.out {
        Some(path) => {
            let mut w = create(path)?;
            g.write_to(&mut w)?;
            w.flush()?;
            writeln!(stdout, "{}", degree_summary(&g))?;
        }
        None => {
            g.write_to(&mut *stdout)?;
            eprintln!("{}", degree_summary(&g));
        }
    }
    Ok(())
}

pub fn cmd_count(a: CountArgs, stdout: &mut dyn Write) -> Result<(), CliError> {
    let g = Graph::read_from(open(&a.graph)?)?;
    let order = match &a.order {
        None => constraints::VarOrder::natural(g.num_vertices()),
        Some(s) => {
            let seq = parse_sizes(s)?;
            constraints::VarOrder::from_sequence(&seq).map_err(CliError::Usage)?
        }
    };
    let bdd = match a.mode {
        ConstraintMode::IndependentSet => constraints::independent_set_bdd_with_order(&g, &order),
        ConstraintMode::Kernel => constraints::kernel_bdd_with_order(&g, &order),
    }
    .map_err(|e| CliError::Usage(e.to_string()))?;
    let count = bdd
        .count_solutions()
        .map_err(|e| CliError::Usage(e.to_string()))?;
    writeln!(
        stdout,
        "count={count} nodes={} accesses={}",
        bdd.node_count(),
        bdd.access_count()
    )?;
    Ok(())
}

fn provenance(cfg: &EnsembleConfig, reference: &ReferenceRate) -> Vec<(String, String)> {
    let mut p = vec![("tool".to_string(), format!("isbdd {}", env!("CARGO_PKG_VERSION")))];
    p.extend(cfg.describe());
    p.push(("reference_rate".into(), report::fmt_sig12(reference.rate)));
    p.push(("reference_source".into(), reference.source.to_string()));
    p
}

pub fn cmd_experiment(a: ExperimentArgs, stdout: &mut dyn Write) -> Result<(), CliError> {
    let cfg = EnsembleConfig {
        sizes: parse_sizes(&a.sizes)?,
        samples_per_size: a.samples,
        mode: a.mode,
        ensemble: a.ensemble.kind(),
        strategy: a.ensemble.strategy,
        master_seed: a.seed,
        rate: a.reference,
    };
    cfg.validate()?;
    if a.jobs == 0 {
        return Err(CliError::Usage("--jobs must be at least 1".into()));
    }
    for (k, v) in cfg.describe() {
        writeln!(stdout, "# {k} = {v}")?;
    }
    writeln!(stdout, "# jobs = {}", a.jobs)?;

    let run = experiment::run_ensemble_detailed(&cfg, a.jobs)?;
    let prov = provenance(&cfg, &run.reference);
    writeln!(
        stdout,
        "# reference_rate = {} ({})",
        report::fmt_sig12(run.reference.rate),
        run.reference.source
    )?;

    let mut summaries: Vec<Summary> = Vec::new();
    let mut curves = Vec::new();
    for &n in &cfg.sizes {
        match experiment::summarize(&run.records, n) {
            Ok(s) => {
                summaries.push(s);
                curves.push(experiment::fluctuation_curve(&run.records, n)?);
            }
            Err(ExperimentError::EmptySample(_)) => log::warn!("size {n}: every sample excluded"),
            Err(e) => return Err(e.into()),
        }
    }

    std::fs::create_dir_all(&a.out_dir).map_err(|source| CliError::File {
        path: a.out_dir.clone(),
        source,
    })?;
    let path = |name: &str| a.out_dir.join(format!("{}{name}", a.prefix));
    let records_path = path("records.csv");
    let summary_path = path("summary.csv");
    let curve_path = path("curve.csv");
    let mut w = create(&records_path)?;
    report::write_records(&mut w, &prov, &run.records)?;
    w.flush()?;
    let mut w = create(&summary_path)?;
    report::write_summary(&mut w, &prov, &summaries, run.reference.rate)?;
    w.flush()?;
    let mut w = create(&curve_path)?;
    report::write_curves(&mut w, &prov, &curves)?;
    w.flush()?;

    for s in &summaries {
        writeln!(
            stdout,
            "size={} samples={} mean={} rate_estimate={}",
            s.size,
            s.samples,
            report::fmt_sig12(s.mean),
            report::fmt_sig12(s.rate_estimate)
        )?;
    }
    for p in [&records_path, &summary_path, &curve_path] {
        writeln!(stdout, "wrote {}", p.display())?;
    }
    Ok(())
}

pub fn cmd_curve(a: CurveArgs, stdout: &mut dyn Write) -> Result<(), CliError> {
    let mut records = report::read_records(open(&a.records)?)?;
    let reference = match a.reference {
        RateSelection::Auto => {
            return Err(CliError::Usage(
                "curve needs an explicit --reference (w, y, x, calibrated or a number)".into(),
            ))
        }
        RateSelection::Calibrated => experiment::calibrate(&records)?,
        sel => sel
            .fixed(ConstraintMode::IndependentSet, EnsembleKind::Regular(3))
            .expect("fixed selection"),
    };
    for r in &mut records {
        r.rebase(&reference);
    }
    let mut sizes: Vec<usize> = records.iter().map(|r| r.size).collect();
    sizes.sort_unstable();
    sizes.dedup();
    let curves = sizes
        .iter()
        .map(|&n| experiment::fluctuation_curve(&records, n))
        .collect::<Result<Vec<_>, _>>()?;
    let prov = vec![
        ("tool".to_string(), format!("isbdd {}", env!("CARGO_PKG_VERSION"))),
        ("records".into(), a.records.display().to_string()),
        ("reference_rate".into(), report::fmt_sig12(reference.rate)),
        ("reference_source".into(), reference.source.to_string()),
    ];
    match &a.out {
        Some(path) => {
            let mut w = create(path)?;
            report::write_curves(&mut w, &prov, &curves)?;
            w.flush()?;
            writeln!(stdout, "wrote {}", path.display())?;
        }
        None => report::write_curves(&mut *stdout, &prov, &curves)?,
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn size_ranges() {
        assert_eq!(parse_sizes("6:12:2").unwrap(), vec![6, 8, 10, 12]);
        assert_eq!(parse_sizes("6").unwrap(), vec![6]);
        assert_eq!(parse_sizes("6,10").unwrap(), vec![6, 10]);
        assert_eq!(parse_sizes("4:6").unwrap(), vec![4, 5, 6]);
        assert!(parse_sizes("6:4:2").is_err());
        assert!(parse_sizes("6:8:0").is_err());
        assert!(parse_sizes("six").is_err());
    }
}
