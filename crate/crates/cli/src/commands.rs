//! Command-line definitions and dispatch.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use hvas_core::compare::{self, CompareConfig, Method};
use hvas_core::distance::{check_axioms, DistanceMeasure, Registry};
use hvas_core::hvas;
use hvas_core::hypervolume::{hv_set, mc_oracle, HvConfig, Reference};
use hvas_core::robustness::{audit, rank_by_reference, AuditConfig, ReferenceKind};

use crate::error::{CliError, Result};
use crate::points::{parse_coordinates, parse_points};
use crate::problem::parse_problem;
use crate::report::{Body, Estimate, Format, Report};

#[derive(Debug, Parser)]
#[command(
    name = "hvas",
    version,
    about = "Rank intuitionistic fuzzy alternatives by hypervolume"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Report format.
    #[arg(long, value_enum, default_value_t = Format::Md, global = true)]
    pub format: Format,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Rank a problem's alternatives by net hypervolume.
    Rank(RankArgs),
    /// Rank a problem with several methods side by side.
    Compare(CompareArgs),
    /// Search for pairs that rank differently against the two ideals.
    Audit(AuditArgs),
    /// Exact hypervolume of a point set.
    Hv(HvArgs),
    /// Check the metric axioms of distance measures on random triples.
    Axioms(AxiomsArgs),
}

#[derive(Debug, Args)]
pub struct HypervolumeFlags {
    /// Factor of perception in [-1, 1] applied to the hesitancy volume.
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub alpha: f64,

    /// Reference point: one value for every criterion, or one per criterion
    /// separated by commas.
    #[arg(long, default_value = "-1", allow_hyphen_values = true)]
    pub reference: String,
}

impl HypervolumeFlags {
    fn config(&self) -> Result<HvConfig> {
        let coords = parse_coordinates(&self.reference)
            .map_err(|e| CliError::Usage(format!("--reference: {e}")))?;
        let reference = match coords.as_slice() {
            [single] => Reference::Uniform(*single),
            _ => Reference::Explicit(coords),
        };
        let config = HvConfig {
            reference,
            alpha: self.alpha,
            ..HvConfig::default()
        };
        config.validate()?;
        Ok(config)
    }
}

#[derive(Debug, Args)]
pub struct RankArgs {
    /// Problem file.
    pub problem: PathBuf,

    #[command(flatten)]
    pub hv: HypervolumeFlags,
}

#[derive(Debug, Args)]
pub struct CompareArgs {
    /// Problem file.
    pub problem: PathBuf,

    /// Methods to run, comma separated.
    #[arg(long, value_delimiter = ',', default_value = "hvas,topsis,vikor,codas")]
    pub methods: Vec<Method>,

    /// CODAS threshold.
    #[arg(long, default_value_t = 0.02)]
    pub tau: f64,

    /// VIKOR strategy weight.
    #[arg(long, default_value_t = 0.5)]
    pub v: f64,

    /// Primary distance measure of the comparators.
    #[arg(long, default_value = "euclidean2")]
    pub measure: String,

    /// Secondary distance measure used by CODAS.
    #[arg(long, default_value = "hamming")]
    pub secondary_measure: String,

    #[command(flatten)]
    pub hv: HypervolumeFlags,
}

#[derive(Debug, Args)]
pub struct AuditArgs {
    /// Optional problem file whose alternatives are also ranked against
    /// both ideals.
    pub problem: Option<PathBuf>,

    #[arg(long, default_value = "euclidean2")]
    pub measure: String,

    /// Maximum number of candidate pairs.
    #[arg(long, default_value_t = 10_000)]
    pub budget: usize,

    /// Tolerance on equal distance to the negative ideal.
    #[arg(long, default_value_t = 1e-9)]
    pub eps: f64,

    /// Difference in distance to the positive ideal that counts as a
    /// violation.
    #[arg(long, default_value_t = 1e-3)]
    pub delta: f64,

    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct HvArgs {
    /// Point-set file, one comma-separated point per line.
    pub points: PathBuf,

    /// Reference point: one value for every dimension, or one per
    /// dimension separated by commas.
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    pub reference: String,

    /// Also estimate the volume with this many Monte Carlo samples.
    #[arg(long)]
    pub samples: Option<usize>,

    #[arg(long, default_value_t = 0, requires = "samples")]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct AxiomsArgs {
    /// Measure to check; every built-in measure when omitted.
    #[arg(long, conflicts_with = "all")]
    pub measure: Option<String>,

    /// Check every built-in measure.
    #[arg(long)]
    pub all: bool,

    #[arg(long, default_value_t = 100_000)]
    pub samples: usize,

    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

fn measure(name: &str) -> Result<DistanceMeasure> {
    Ok(Registry::builtin().get(name)?.clone())
}

pub fn run(command: &Command) -> Result<Report> {
    let (name, body) = match command {
        Command::Rank(args) => ("rank", rank(args)?),
        Command::Compare(args) => ("compare", compare(args)?),
        Command::Audit(args) => ("audit", robustness(args)?),
        Command::Hv(args) => ("hv", hypervolume(args)?),
        Command::Axioms(args) => ("axioms", axioms(args)?),
    };
    Ok(Report {
        command: name.into(),
        body,
    })
}

fn rank(args: &RankArgs) -> Result<Body> {
    let problem = parse_problem(&args.problem)?;
    let ranking = hvas::rank(&problem, &args.hv.config()?)?;
    Ok(Body::Rankings {
        rankings: vec![ranking],
    })
}

fn compare(args: &CompareArgs) -> Result<Body> {
    if args.methods.is_empty() {
        return Err(CliError::Usage(
            "--methods must name at least one method".into(),
        ));
    }
    let mut methods = args.methods.clone();
    methods.dedup();
    let problem = parse_problem(&args.problem)?;
    let config = CompareConfig {
        tau: args.tau,
        v: args.v,
        measure_primary: measure(&args.measure)?,
        measure_secondary: measure(&args.secondary_measure)?,
        ..CompareConfig::default()
    };
    let rankings = compare::run_methods(&problem, &methods, &args.hv.config()?, &config)?;
    Ok(Body::Rankings { rankings })
}

fn robustness(args: &AuditArgs) -> Result<Body> {
    let measure = measure(&args.measure)?;
    let config = AuditConfig {
        budget: args.budget,
        eps: args.eps,
        delta: args.delta,
        seed: args.seed,
    };
    let report = audit(&measure, &config)?;
    let mut reference_rankings = Vec::new();
    let mut robust_on_problem = None;
    if let Some(path) = &args.problem {
        let problem = parse_problem(path)?;
        let matrix = hvas::weighted_normalized(&problem)?;
        let sets: Vec<_> = (0..matrix.alternatives())
            .map(|i| matrix.alternative(i))
            .collect();
        for kind in [ReferenceKind::Pis, ReferenceKind::Nis] {
            reference_rankings.push(
                rank_by_reference(&sets, &measure, kind)?
                    .relabel(problem.alternatives().to_vec())?,
            );
        }
        robust_on_problem = Some(reference_rankings[0].order == reference_rankings[1].order);
    }
    Ok(Body::Audit {
        audit: report,
        reference_rankings,
        robust_on_problem,
    })
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn hypervolume(args: &HvArgs) -> Result<Body> {
    let points = parse_points(&read(&args.points)?).map_err(|e| match e {
        CliError::Parse(message) => {
            CliError::Parse(format!("{}: {message}", args.points.display()))
        }
        other => other,
    })?;
    let dimensions = points[0].len();
    let coords = parse_coordinates(&args.reference)
        .map_err(|e| CliError::Usage(format!("--reference: {e}")))?;
    let reference = match coords.as_slice() {
        [single] => vec![*single; dimensions],
        _ => coords,
    };
    if reference.len() != dimensions {
        return Err(CliError::Usage(format!(
            "--reference has {} coordinates but the points have {dimensions}",
            reference.len()
        )));
    }
    let volume = hv_set(&points, &reference)?;
    let estimate = match args.samples {
        Some(samples) => {
            let (value, stderr) = mc_oracle(&points, &reference, samples, args.seed)?;
            Some(Estimate {
                samples,
                seed: args.seed,
                value,
                stderr,
            })
        }
        None => None,
    };
    Ok(Body::Hypervolume {
        points: points.len(),
        dimensions,
        reference,
        volume,
        estimate,
    })
}

fn axioms(args: &AxiomsArgs) -> Result<Body> {
    let registry = Registry::builtin();
    let measures: Vec<&DistanceMeasure> = match &args.measure {
        Some(name) => vec![registry.get(name)?],
        None => registry.iter().collect(),
    };
    let reports = measures
        .into_iter()
        .map(|m| check_axioms(m, args.samples, args.seed))
        .collect::<hvas_core::Result<Vec<_>>>()?;
    Ok(Body::Axioms { reports })
}
