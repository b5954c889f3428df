//! The `drdf` command line. [`run`] takes explicit streams so it can be
//! driven from tests; the binary only forwards the process arguments.
//!
//! Exit codes: 0 success, 1 bad input or usage, 2 solver timeout,
//! 3 labeling invalid (check) or violations found (sweep with
//! `--fail-on-violation`).

use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use thiserror::Error;

use crate::construct::{check_bound, construct_drdf, ConstructOptions, ReductionTrace};
use crate::graph::{generate, parse_edge_list, write_edge_list, FamilySpec, Graph, GraphError};
use crate::harness::{
    instance_rng, random_graph, run_sweep, HarnessError, RandomModel, SweepConfig, SweepMode,
    SweepProperty, SweepSource,
};
use crate::labeling::{parse_labeling, validate, LabelingError, ViolationKind};
use crate::solver::{gamma_dr, SolveOptions, SolverError};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Graph(#[from] GraphError),
    #[error("labeling: {0}")]
    Labeling(#[from] LabelingError),
    #[error("{0}")]
    Solver(#[from] SolverError),
    #[error("{0}")]
    Harness(#[from] HarnessError),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{0}")]
    Usage(String),
}

#[derive(Debug, Parser)]
#[command(name = "drdf", version, about = "Double Roman domination toolkit")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct IoArgs {
    /// Edge-list graph file, `-` for stdin.
    #[arg(long, default_value = "-")]
    pub input: String,
    /// Write the result here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Exact γ_dR with a witness labeling.
    Gamma {
        #[command(flatten)]
        io: IoArgs,
        #[arg(long)]
        timeout_s: Option<f64>,
        /// Search over {0,1,2,3} instead of {0,2,3}.
        #[arg(long)]
        allow_ones: bool,
    },
    /// Labeling from the reduction engine, with its bound report.
    Construct {
        #[command(flatten)]
        io: IoArgs,
        #[arg(long, default_value_t = 12)]
        fallback_n: usize,
        /// Include every reduction step in the record.
        #[arg(long)]
        trace: bool,
        /// Also write the labeling in the labeling text format.
        #[arg(long)]
        labeling_out: Option<PathBuf>,
    },
    /// Validate a labeling against a graph.
    Check {
        #[command(flatten)]
        io: IoArgs,
        /// Labeling file.
        #[arg(long)]
        labeling: String,
    },
    /// Write a family member as an edge list.
    Gen {
        /// cycle, path, complete, tadpole, spider, q, gq, gh
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        /// Spider leg lengths, comma separated.
        #[arg(long, value_delimiter = ',')]
        legs: Vec<usize>,
        /// Base graph for gq/gh (edge-list file); a single vertex if absent.
        #[arg(long)]
        base: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Seeded random graphs, concatenated with `# instance` comment lines.
    Random {
        #[arg(long, value_enum)]
        model: RandomModel,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        count: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Verification sweep; prints the CSV summary.
    Sweep(SweepArgs),
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(long, value_enum, default_value_t = SourceArg::Enumerate)]
    pub source: SourceArg,
    #[arg(long, default_value_t = 3)]
    pub n_min: usize,
    #[arg(long, default_value_t = 7)]
    pub n_max: usize,
    #[arg(long, default_value_t = 2)]
    pub min_degree: usize,
    #[arg(long)]
    pub allow_disconnected: bool,
    /// Enumerate labeled graphs rather than isomorphism classes.
    #[arg(long)]
    pub labeled: bool,
    /// Family to flag as excluded, e.g. `cycle:5`, `tadpole:5,6`, `q`.
    #[arg(long)]
    pub exclude: Vec<String>,
    #[arg(long, value_enum, default_value_t = SweepMode::Exact)]
    pub mode: SweepMode,
    #[arg(long, value_enum, default_value_t = SweepProperty::Bound)]
    pub property: SweepProperty,
    #[arg(long, value_enum, default_value_t = RandomModel::UniformMinDeg2)]
    pub model: RandomModel,
    /// Instances for the random and spider sources.
    #[arg(long, default_value_t = 100)]
    pub count: usize,
    #[arg(long)]
    pub report: Option<PathBuf>,
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub timeout_s: Option<f64>,
    #[arg(long, default_value_t = 12)]
    pub fallback_n: usize,
    /// Exit with status 3 when a non-excluded violation is found.
    #[arg(long)]
    pub fail_on_violation: bool,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum SourceArg {
    Enumerate,
    Random,
    Spiders,
}

/// Parses `name[:a[,b...]]` into a family, e.g. `cycle:5` or `tadpole:5,6`.
pub fn parse_family_spec(s: &str) -> Result<FamilySpec, CliError> {
    let (name, params) = s.split_once(':').unwrap_or((s, ""));
    let nums: Vec<usize> = params
        .split(',')
        .filter(|t| !t.is_empty())
        .map(|t| t.trim().parse().map_err(|_| CliError::Usage(format!("bad number {t:?} in {s:?}"))))
        .collect::<Result<_, _>>()?;
    let want = |k: usize| {
        if nums.len() == k {
            Ok(())
        } else {
            Err(CliError::Usage(format!("{name} takes {k} parameter(s), got {}", nums.len())))
        }
    };
    let spec = match name.to_ascii_lowercase().as_str() {
        "cycle" => want(1).map(|_| FamilySpec::Cycle(nums[0]))?,
        "path" => want(1).map(|_| FamilySpec::Path(nums[0]))?,
        "complete" => want(1).map(|_| FamilySpec::Complete(nums[0]))?,
        "tadpole" => want(2).map(|_| FamilySpec::Tadpole { m: nums[0], k: nums[1] })?,
        "spider" => FamilySpec::Spider(nums),
        "q" => want(0).map(|_| FamilySpec::QGraph)?,
        other => return Err(CliError::Usage(format!("unknown family {other:?}"))),
    };
    spec.validate()?;
    Ok(spec)
}

/// Runs the CLI on `args` (including the program name) and returns the
/// exit status.
pub fn run<I, S>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return if e.use_stderr() { 1 } else { 0 };
        }
    };
    match dispatch(cli.command, stdin, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

fn read_source(path: &str, stdin: &mut dyn Read) -> Result<String, CliError> {
    let io = |source| CliError::Io {
        path: path.to_string(),
        source,
    };
    if path == "-" {
        let mut s = String::new();
        stdin.read_to_string(&mut s).map_err(io)?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(io)
    }
}

fn read_graph(path: &str, stdin: &mut dyn Read) -> Result<Graph, CliError> {
    Ok(parse_edge_list(&read_source(path, stdin)?)?)
}

fn emit(text: &str, dest: &Option<PathBuf>, out: &mut dyn Write) -> Result<(), CliError> {
    match dest {
        Some(p) => fs::write(p, text).map_err(|source| CliError::Io {
            path: p.display().to_string(),
            source,
        }),
        None => out.write_all(text.as_bytes()).map_err(|source| CliError::Io {
            path: "<stdout>".into(),
            source,
        }),
    }
}

fn timeout(secs: Option<f64>) -> Result<Option<Duration>, CliError> {
    secs.map(|s| Duration::try_from_secs_f64(s).map_err(|_| CliError::Usage(format!("bad timeout {s}"))))
        .transpose()
}

#[derive(Serialize)]
struct ConstructRecord<'a> {
    n: usize,
    m: usize,
    weight: u64,
    threshold: (u64, u64),
    satisfied: bool,
    rules: String,
    fallback_used: bool,
    labeling: &'a [u8],
    #[serde(skip_serializing_if = "Option::is_none")]
    trace: Option<&'a ReductionTrace>,
}

fn dispatch(cmd: Command, stdin: &mut dyn Read, out: &mut dyn Write) -> Result<i32, CliError> {
    match cmd {
        Command::Gamma {
            io,
            timeout_s,
            allow_ones,
        } => {
            let g = read_graph(&io.input, stdin)?;
            let res = gamma_dr(
                &g,
                &SolveOptions {
                    allow_ones,
                    timeout: timeout(timeout_s)?,
                    ..Default::default()
                },
            )?;
            let line = serde_json::to_string(&res.record(&g)).expect("record serializes");
            emit(&format!("{line}\n"), &io.out, out)?;
            Ok(if res.is_optimal() { 0 } else { 2 })
        }
        Command::Construct {
            io,
            fallback_n,
            trace,
            labeling_out,
        } => {
            let g = read_graph(&io.input, stdin)?;
            let opts = ConstructOptions {
                fallback_n,
                ..Default::default()
            };
            let (f, tr) = construct_drdf(&g, &opts);
            let report = check_bound(&g, &f)?;
            let rec = ConstructRecord {
                n: g.order(),
                m: g.edge_count(),
                weight: report.weight,
                threshold: report.threshold,
                satisfied: report.satisfied,
                rules: tr.summary(),
                fallback_used: tr.fallback_used,
                labeling: f.values(),
                trace: trace.then_some(&tr),
            };
            let line = serde_json::to_string(&rec).expect("record serializes");
            emit(&format!("{line}\n"), &io.out, out)?;
            if let Some(p) = labeling_out {
                emit(&crate::labeling::write_labeling(&f), &Some(p), out)?;
            }
            Ok(0)
        }
        Command::Check { io, labeling } => {
            if io.input == "-" && labeling == "-" {
                return Err(CliError::Usage("graph and labeling cannot both come from stdin".into()));
            }
            let g = read_graph(&io.input, stdin)?;
            let f = parse_labeling(&read_source(&labeling, stdin)?)?;
            let violations = validate(&g, &f)?;
            if violations.is_empty() {
                emit(&format!("VALID weight={}\n", f.weight()), &io.out, out)?;
                return Ok(0);
            }
            let mut text = String::new();
            for v in &violations {
                let kind = match v.kind {
                    ViolationKind::ZeroUncovered => "zero-uncovered",
                    ViolationKind::OneUncovered => "one-uncovered",
                };
                text.push_str(&format!("VIOLATION vertex={} kind={kind}\n", v.vertex));
            }
            text.push_str(&format!("INVALID violations={}\n", violations.len()));
            emit(&text, &io.out, out)?;
            Ok(3)
        }
        Command::Gen {
            family,
            n,
            m,
            k,
            legs,
            base,
            out: dest,
        } => {
            let need = |x: Option<usize>, flag: &str| {
                x.ok_or_else(|| CliError::Usage(format!("--family {family} needs --{flag}")))
            };
            let base_graph = |stdin: &mut dyn Read| -> Result<Graph, CliError> {
                match &base {
                    Some(p) => read_graph(p, stdin),
                    None => Ok(Graph::empty(1)),
                }
            };
            let spec = match family.to_ascii_lowercase().as_str() {
                "cycle" => FamilySpec::Cycle(need(n, "n")?),
                "path" => FamilySpec::Path(need(n, "n")?),
                "complete" => FamilySpec::Complete(need(n, "n")?),
                "tadpole" => FamilySpec::Tadpole {
                    m: need(m, "m")?,
                    k: need(k, "k")?,
                },
                "spider" => FamilySpec::Spider(legs),
                "q" => FamilySpec::QGraph,
                "gq" => FamilySpec::GQ(base_graph(stdin)?),
                "gh" => FamilySpec::GH(base_graph(stdin)?),
                other => return Err(CliError::Usage(format!("unknown family {other:?}"))),
            };
            let g = generate(&spec)?;
            emit(&write_edge_list(&g), &dest, out)?;
            Ok(0)
        }
        Command::Random {
            model,
            n,
            seed,
            count,
            out: dest,
        } => {
            let mut text = String::new();
            for i in 0..count {
                let mut rng = instance_rng(seed, i as u64);
                let g = random_graph(model, n, &mut rng)?;
                text.push_str(&format!("# instance {i} seed {seed}\n"));
                text.push_str(&write_edge_list(&g));
            }
            emit(&text, &dest, out)?;
            Ok(0)
        }
        Command::Sweep(a) => {
            let source = match a.source {
                SourceArg::Enumerate => SweepSource::Enumerate { dedup: !a.labeled },
                SourceArg::Random => SweepSource::Random {
                    model: a.model,
                    count: a.count,
                },
                SourceArg::Spiders => SweepSource::Spiders { count: a.count },
            };
            let exclude = a
                .exclude
                .iter()
                .map(|s| parse_family_spec(s))
                .collect::<Result<Vec<_>, _>>()?;
            let config = SweepConfig {
                source,
                n_min: a.n_min,
                n_max: a.n_max,
                min_degree: a.min_degree,
                connected_only: !a.allow_disconnected,
                exclude,
                mode: a.mode,
                property: a.property,
                report: a.report,
                jobs: a.jobs,
                seed: a.seed,
                timeout: timeout(a.timeout_s)?,
                fallback_n: a.fallback_n,
            };
            let outcome = run_sweep(&config)?;
            emit(&outcome.summary.csv(), &a.out, out)?;
            Ok(if a.fail_on_violation && outcome.summary.violations > 0 {
                3
            } else {
                0
            })
        }
    }
}
