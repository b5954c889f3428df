//! Sweeps over enumerated, random or spider instances.
//!
//! Each instance yields one [`ReportRow`]. Rows are written as JSON lines in
//! instance order regardless of the worker count; a one-row CSV summary
//! sits next to the report, and every violation is dumped as an edge-list
//! certificate.

use std::fs;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::random::{instance_rng, random_graph, random_spider_legs, RandomModel};
use super::HarnessError;
use crate::construct::{construct_drdf, exclusion_tags, ConstructOptions, ExclusionTag};
use crate::graph::{
    canonical_code, enumerate_small, from_labeled_index, generate, labeled_pair_count,
    write_edge_list, EnumerateOptions, FamilySpec, Graph, DEFAULT_ENUMERATION_CEILING,
};
use crate::solver::{gamma_dr, SolveOptions};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum SweepMode {
    Exact,
    Construct,
    Both,
}

/// The upper bound each row is compared against.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum SweepProperty {
    /// 12n/11
    Bound,
    /// 2n − 2Δ + 1
    DegreeBound,
    /// n + 1
    OrderPlusOne,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SweepSource {
    /// Every graph with `n_min ≤ n ≤ n_max`, optionally one per
    /// isomorphism class.
    Enumerate { dedup: bool },
    /// `count` graphs with order drawn uniformly from the n range.
    Random { model: RandomModel, count: usize },
    /// `count` spiders on at most `n_max` vertices.
    Spiders { count: usize },
}

#[derive(Clone, Debug)]
pub struct SweepConfig {
    pub source: SweepSource,
    pub n_min: usize,
    pub n_max: usize,
    pub min_degree: usize,
    pub connected_only: bool,
    /// Instances matching one of these are flagged as excluded.
    pub exclude: Vec<FamilySpec>,
    pub mode: SweepMode,
    pub property: SweepProperty,
    /// JSON-lines report; the summary and certificates go next to it.
    pub report: Option<PathBuf>,
    pub jobs: usize,
    pub seed: u64,
    pub timeout: Option<Duration>,
    pub fallback_n: usize,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self {
            source: SweepSource::Enumerate { dedup: true },
            n_min: 3,
            n_max: 7,
            min_degree: 2,
            connected_only: true,
            exclude: Vec::new(),
            mode: SweepMode::Exact,
            property: SweepProperty::Bound,
            report: None,
            jobs: 1,
            seed: 0,
            timeout: None,
            fallback_n: ConstructOptions::default().fallback_n,
        }
    }
}

impl SweepConfig {
    fn validate(&self) -> Result<(), HarnessError> {
        if self.n_min > self.n_max {
            return Err(HarnessError::InvalidConfig(format!(
                "empty n range {}..={}",
                self.n_min, self.n_max
            )));
        }
        if matches!(self.source, SweepSource::Enumerate { .. }) && self.n_max > DEFAULT_ENUMERATION_CEILING {
            return Err(HarnessError::InvalidConfig(format!(
                "enumeration is capped at n = {DEFAULT_ENUMERATION_CEILING}"
            )));
        }
        if self.jobs == 0 {
            return Err(HarnessError::InvalidConfig("jobs must be positive".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRow {
    pub id: String,
    pub n: usize,
    pub m: usize,
    /// γ_dR when the exact solve finished.
    pub gamma: Option<u64>,
    /// Weight of the constructed labeling.
    pub weight: Option<u64>,
    /// The number compared with the threshold: the constructed weight when
    /// the engine ran, otherwise the exact value (or its upper bound after
    /// a timeout).
    pub value: u64,
    pub threshold_num: u64,
    pub threshold_den: u64,
    pub satisfied: bool,
    pub excluded: bool,
    pub tags: Vec<ExclusionTag>,
    /// Rule counts of the construction, e.g. `R2x1 terminalx1`.
    pub rules: String,
    pub millis: u64,
    #[serde(skip)]
    pub witness: Vec<u8>,
}

impl ReportRow {
    pub fn recompute_satisfied(&self) -> bool {
        self.value * self.threshold_den <= self.threshold_num
    }

    pub fn is_violation(&self) -> bool {
        !self.excluded && !self.satisfied
    }

    /// Exact value not above the constructed weight (true when either is
    /// missing).
    pub fn sandwich_ok(&self) -> bool {
        match (self.gamma, self.weight) {
            (Some(g), Some(w)) => g <= w,
            _ => true,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepSummary {
    pub instances: usize,
    pub satisfied: usize,
    pub violations: usize,
    pub excluded: usize,
    pub sandwich_failures: usize,
}

impl SweepSummary {
    pub fn from_rows(rows: &[ReportRow]) -> Self {
        Self {
            instances: rows.len(),
            satisfied: rows.iter().filter(|r| r.satisfied).count(),
            violations: rows.iter().filter(|r| r.is_violation()).count(),
            excluded: rows.iter().filter(|r| r.excluded).count(),
            sandwich_failures: rows.iter().filter(|r| !r.sandwich_ok()).count(),
        }
    }

    pub fn csv(&self) -> String {
        format!(
            "instances,satisfied,violations,excluded,sandwich_failures\n{},{},{},{},{}\n",
            self.instances, self.satisfied, self.violations, self.excluded, self.sandwich_failures
        )
    }
}

#[derive(Clone, Debug)]
pub struct SweepOutcome {
    pub rows: Vec<ReportRow>,
    pub summary: SweepSummary,
    pub certificates: Vec<PathBuf>,
}

pub fn degree_bound(g: &Graph) -> u64 {
    (2 * g.order() + 1).saturating_sub(2 * g.max_degree()) as u64
}

/// Whether `g` is (isomorphic to) the graph `spec` generates. Uses
/// canonical codes up to 11 vertices; above that, structure for cycles,
/// paths and complete graphs and the degree sequence otherwise.
pub fn matches_spec(g: &Graph, spec: &FamilySpec) -> bool {
    if spec.validate().is_err() || spec.order() != g.order() {
        return false;
    }
    let Ok(h) = generate(spec) else { return false };
    if h.edge_count() != g.edge_count() {
        return false;
    }
    if g.order() <= 11 {
        return canonical_code(g) == canonical_code(&h);
    }
    match spec {
        FamilySpec::Cycle(_) => g.is_cycle(),
        FamilySpec::Path(_) => g.is_connected() && g.max_degree() <= 2,
        FamilySpec::Complete(_) => true,
        _ => {
            let mut a = g.degrees();
            let mut b = h.degrees();
            a.sort_unstable();
            b.sort_unstable();
            a == b
        }
    }
}

fn threshold(property: SweepProperty, g: &Graph) -> (u64, u64) {
    let n = g.order() as u64;
    match property {
        SweepProperty::Bound => (12 * n, 11),
        SweepProperty::DegreeBound => (degree_bound(g), 1),
        SweepProperty::OrderPlusOne => (n + 1, 1),
    }
}

fn evaluate(config: &SweepConfig, id: String, g: &Graph) -> Result<ReportRow, HarnessError> {
    let start = Instant::now();
    let mut gamma = None;
    let mut exact_value = None;
    let mut witness = Vec::new();
    if config.mode != SweepMode::Construct {
        let res = gamma_dr(
            g,
            &SolveOptions {
                timeout: config.timeout,
                ..Default::default()
            },
        )?;
        if res.is_optimal() {
            gamma = Some(res.value);
        }
        exact_value = Some(res.value);
        witness = res.witness.into_values();
    }
    let mut weight = None;
    let mut rules = String::new();
    if config.mode != SweepMode::Exact {
        let opts = ConstructOptions {
            fallback_n: config.fallback_n,
            ..Default::default()
        };
        let (f, trace) = construct_drdf(g, &opts);
        weight = Some(f.weight());
        rules = trace.summary();
        witness = f.into_values();
    }
    let value = weight.or(exact_value).expect("at least one mode ran");
    let (num, den) = threshold(config.property, g);
    let tags = if config.property == SweepProperty::Bound {
        exclusion_tags(g)
    } else {
        Vec::new()
    };
    Ok(ReportRow {
        id,
        n: g.order(),
        m: g.edge_count(),
        gamma,
        weight,
        value,
        threshold_num: num,
        threshold_den: den,
        satisfied: value * den <= num,
        excluded: config.exclude.iter().any(|s| matches_spec(g, s)),
        tags,
        rules,
        millis: start.elapsed().as_millis() as u64,
        witness,
    })
}

fn keep(config: &SweepConfig, g: &Graph) -> bool {
    (g.order() == 0 || g.min_degree() >= config.min_degree) && (!config.connected_only || g.is_connected())
}

fn listed_instances(config: &SweepConfig) -> Result<Vec<(String, Graph)>, HarnessError> {
    let mut out = Vec::new();
    match &config.source {
        SweepSource::Enumerate { .. } => {
            let opts = EnumerateOptions {
                connected_only: config.connected_only,
                dedup: true,
                ceiling: DEFAULT_ENUMERATION_CEILING,
            };
            for n in config.n_min..=config.n_max {
                for (i, g) in enumerate_small(n, config.min_degree, opts)?.enumerate() {
                    out.push((format!("n{n}-c{i}"), g));
                }
            }
        }
        SweepSource::Random { model, count } => {
            let gs: Result<Vec<_>, HarnessError> = (0..*count)
                .into_par_iter()
                .map(|i| {
                    let mut rng = instance_rng(config.seed, i as u64);
                    let n = rng.gen_range(config.n_min..=config.n_max);
                    let g = random_graph(*model, n, &mut rng)?;
                    Ok((format!("{}-s{}-i{i}", model_name(*model), config.seed), g))
                })
                .collect();
            out = gs?;
        }
        SweepSource::Spiders { count } => {
            for i in 0..*count {
                let mut rng = instance_rng(config.seed, i as u64);
                let legs = random_spider_legs(config.n_max, &mut rng);
                let g = generate(&FamilySpec::Spider(legs))?;
                out.push((format!("spider-s{}-i{i}", config.seed), g));
            }
        }
    }
    Ok(out)
}

fn model_name(model: RandomModel) -> &'static str {
    match model {
        RandomModel::UniformMinDeg2 => "uniform-min-deg-2",
        RandomModel::CycleUnion => "cycle-union",
        RandomModel::Family => "family",
    }
}

pub fn run_sweep(config: &SweepConfig) -> Result<SweepOutcome, HarnessError> {
    config.validate()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs)
        .build()
        .map_err(|e| HarnessError::Pool(e.to_string()))?;
    let rows: Result<Vec<ReportRow>, HarnessError> = pool.install(|| {
        if config.source == (SweepSource::Enumerate { dedup: false }) {
            let mut all = Vec::new();
            for n in config.n_min..=config.n_max {
                let total = 1u64 << labeled_pair_count(n);
                let part: Result<Vec<Option<ReportRow>>, HarnessError> = (0..total)
                    .into_par_iter()
                    .map(|i| {
                        let g = from_labeled_index(n, i);
                        if !keep(config, &g) {
                            return Ok(None);
                        }
                        evaluate(config, format!("n{n}-l{i}"), &g).map(Some)
                    })
                    .collect();
                all.extend(part?.into_iter().flatten());
            }
            Ok(all)
        } else {
            let instances = listed_instances(config)?;
            instances
                .par_iter()
                .map(|(id, g)| evaluate(config, id.clone(), g))
                .collect()
        }
    });
    let rows = rows?;
    let summary = SweepSummary::from_rows(&rows);
    let mut certificates = Vec::new();
    if let Some(path) = &config.report {
        write_report(path, &rows, &summary)?;
        certificates = write_certificates(path, config, &rows)?;
    }
    Ok(SweepOutcome {
        rows,
        summary,
        certificates,
    })
}

fn io_err(path: &Path) -> impl FnOnce(std::io::Error) -> HarnessError + '_ {
    move |source| HarnessError::Io {
        path: path.to_path_buf(),
        source,
    }
}

/// Path of the CSV summary written next to `report`.
pub fn summary_path(report: &Path) -> PathBuf {
    report.with_extension("summary.csv")
}

fn certificate_dir(report: &Path) -> PathBuf {
    let stem = report.file_stem().and_then(|s| s.to_str()).unwrap_or("report");
    report.with_file_name(format!("{stem}-certificates"))
}

fn write_report(path: &Path, rows: &[ReportRow], summary: &SweepSummary) -> Result<(), HarnessError> {
    let mut text = String::new();
    for r in rows {
        text.push_str(&serde_json::to_string(r).expect("rows serialize"));
        text.push('\n');
    }
    fs::write(path, text).map_err(io_err(path))?;
    let sp = summary_path(path);
    fs::write(&sp, summary.csv()).map_err(io_err(&sp))
}

fn write_certificates(path: &Path, config: &SweepConfig, rows: &[ReportRow]) -> Result<Vec<PathBuf>, HarnessError> {
    let bad: Vec<&ReportRow> = rows.iter().filter(|r| r.is_violation()).collect();
    if bad.is_empty() {
        return Ok(Vec::new());
    }
    let dir = certificate_dir(path);
    fs::create_dir_all(&dir).map_err(io_err(&dir))?;
    let all = listed_or_regenerated(config, &bad);
    let mut out = Vec::new();
    for (row, g) in bad.iter().zip(all) {
        let file = dir.join(format!("{}.edges", row.id));
        let labels: Vec<String> = row.witness.iter().map(|x| x.to_string()).collect();
        let text = format!(
            "# {} value={} threshold={}/{}\n# labeling {}\n{}",
            row.id,
            row.value,
            row.threshold_num,
            row.threshold_den,
            labels.join(" "),
            write_edge_list(&g)
        );
        fs::write(&file, text).map_err(io_err(&file))?;
        out.push(file);
    }
    Ok(out)
}

/// Rebuilds the graphs of the given rows from their ids.
fn listed_or_regenerated(config: &SweepConfig, rows: &[&ReportRow]) -> Vec<Graph> {
    let listed = if config.source == (SweepSource::Enumerate { dedup: false }) {
        Vec::new()
    } else {
        listed_instances(config).unwrap_or_default()
    };
    rows.iter()
        .map(|r| {
            if let Some((_, g)) = listed.iter().find(|(id, _)| *id == r.id) {
                return g.clone();
            }
            // labeled ids look like n{n}-l{index}
            let (n, i) = r.id[1..].split_once("-l").expect("labeled id");
            from_labeled_index(n.parse().unwrap(), i.parse().unwrap())
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn excl() -> Vec<FamilySpec> {
        vec![FamilySpec::Cycle(5), FamilySpec::Cycle(7)]
    }

    #[test]
    fn desk_sweep_small() {
        let cfg = SweepConfig {
            n_max: 6,
            exclude: excl(),
            ..Default::default()
        };
        let out = run_sweep(&cfg).unwrap();
        assert_eq!(out.summary.violations, 0);
        assert_eq!(out.summary.excluded, 1);
        assert!(out.rows.iter().all(|r| r.recompute_satisfied() == r.satisfied));
    }

    #[test]
    fn width_independent() {
        let mut cfg = SweepConfig {
            source: SweepSource::Random {
                model: RandomModel::UniformMinDeg2,
                count: 12,
            },
            n_min: 8,
            n_max: 16,
            mode: SweepMode::Both,
            seed: 5,
            ..Default::default()
        };
        let strip = |rows: Vec<ReportRow>| -> Vec<ReportRow> {
            rows.into_iter().map(|r| ReportRow { millis: 0, ..r }).collect()
        };
        let a = strip(run_sweep(&cfg).unwrap().rows);
        cfg.jobs = 3;
        let b = strip(run_sweep(&cfg).unwrap().rows);
        assert_eq!(a, b);
        assert!(a.iter().all(ReportRow::sandwich_ok));
    }

    #[test]
    fn labeled_and_dedup_agree_on_violations() {
        let base = SweepConfig {
            n_min: 5,
            n_max: 5,
            ..Default::default()
        };
        let dedup = run_sweep(&base).unwrap();
        let labeled = run_sweep(&SweepConfig {
            source: SweepSource::Enumerate { dedup: false },
            ..base
        })
        .unwrap();
        // Only C_5 violates: one class, 12 labelings.
        assert_eq!(dedup.summary.violations, 1);
        assert_eq!(labeled.summary.violations, 12);
    }

    #[test]
    fn certificates_written() {
        let dir = std::env::temp_dir().join(format!("drdf-sweep-{}", std::process::id()));
        fs::create_dir_all(&dir).unwrap();
        let report = dir.join("c5.jsonl");
        let cfg = SweepConfig {
            n_min: 5,
            n_max: 5,
            report: Some(report.clone()),
            ..Default::default()
        };
        let out = run_sweep(&cfg).unwrap();
        assert_eq!(out.certificates.len(), 1);
        let text = fs::read_to_string(&out.certificates[0]).unwrap();
        let g = crate::graph::parse_edge_list(&text).unwrap();
        assert!(g.is_cycle() && g.order() == 5);
        let summary = fs::read_to_string(summary_path(&report)).unwrap();
        assert!(summary.starts_with("instances,"));
        fs::remove_dir_all(&dir).unwrap();
    }

    #[test]
    fn matches_spec_cases() {
        let c5 = generate(&FamilySpec::Cycle(5)).unwrap();
        assert!(matches_spec(&c5, &FamilySpec::Cycle(5)));
        assert!(!matches_spec(&c5, &FamilySpec::Cycle(7)));
        let relabeled = Graph::new(5, &[(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)]).unwrap();
        assert!(matches_spec(&relabeled, &FamilySpec::Cycle(5)));
    }

    #[test]
    fn bad_config() {
        let cfg = SweepConfig {
            n_max: 9,
            ..Default::default()
        };
        assert!(matches!(run_sweep(&cfg), Err(HarnessError::InvalidConfig(_))));
    }
}
