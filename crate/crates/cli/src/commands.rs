use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context};
use clap::Args;
use serde::Serialize;

use hfree::bounds::{inequality_suite, SuiteReport};
use hfree::census::{census_sweep, write_csv as census_csv};
use hfree::criticality::{classify_with, is_edge_critical, Classification, Star, StarSelection};
use hfree::density::{profile_from_report, threshold_m_h, Regime, ThresholdProfile};
use hfree::graph::parse_graph6;
use hfree::sampler::{sweep_grk_fraction, write_csv as sample_csv, ChainConfig, Method};
use hfree::{Density, Graph};

use crate::manifest::{emit_csv, emit_json, RunManifest};

/// Malformed command-line input (exit code 2).
#[derive(Debug)]
pub struct InputError(pub String);

impl std::fmt::Display for InputError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for InputError {}

/// A checked inequality failed (exit code 4).
#[derive(Debug)]
pub struct Violation(pub String);

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Violation {}

/// An existing file is read one graph per line; anything else is parsed as
/// a single inline graph6 string.
pub fn load_graphs(arg: &str) -> anyhow::Result<Vec<Graph>> {
    let path = Path::new(arg);
    if path.is_file() {
        let text = fs::read_to_string(path).map_err(|e| InputError(format!("{arg}: {e}")))?;
        let graphs = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .enumerate()
            .map(|(i, l)| parse_graph6(l).with_context(|| format!("{arg} line {}", i + 1)))
            .collect::<anyhow::Result<Vec<_>>>()?;
        if graphs.is_empty() {
            return Err(InputError(format!("{arg} holds no graphs")).into());
        }
        Ok(graphs)
    } else {
        Ok(vec![parse_graph6(arg)?])
    }
}

fn load_one(arg: &str) -> anyhow::Result<Graph> {
    let mut graphs = load_graphs(arg)?;
    if graphs.len() != 1 {
        return Err(InputError(format!("expected one graph, {arg} holds {}", graphs.len())).into());
    }
    Ok(graphs.remove(0))
}

#[derive(Args, Debug, Serialize)]
pub struct InvariantsArgs {
    /// graph6 string, or a file with one graph6 string per line
    #[arg(long)]
    pub graph6: String,
    /// Which critical stars enter η and ζ
    #[arg(long, value_enum, default_value = "all")]
    pub stars: Stars,
    #[arg(long)]
    #[serde(skip)]
    pub out: Option<PathBuf>,
}

#[derive(clap::ValueEnum, Clone, Copy, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Stars {
    All,
    MinSizeOnly,
}

impl From<Stars> for StarSelection {
    fn from(s: Stars) -> Self {
        match s {
            Stars::All => StarSelection::All,
            Stars::MinSizeOnly => StarSelection::MinSizeOnly,
        }
    }
}

fn ratio_string(r: &Density) -> String {
    r.to_string()
}

#[derive(Debug, Serialize)]
struct InvariantReport {
    graph6: String,
    n: usize,
    edges: usize,
    chi: usize,
    edge_critical: bool,
    critical_edges: Vec<(usize, usize)>,
    critical_vertices: Vec<usize>,
    critical_stars: Vec<Star>,
    crit: Option<usize>,
    class: Classification,
    m2: String,
    strictly_2_balanced: bool,
    eta: String,
    zeta: usize,
    regime: Regime,
    profile: ThresholdProfile,
}

fn invariants_of(g: &Graph, selection: StarSelection) -> anyhow::Result<InvariantReport> {
    let report = classify_with(g, selection);
    let profile = profile_from_report(g, &report, selection).with_context(|| format!("graph {g}"))?;
    let ec = is_edge_critical(g)?;
    Ok(InvariantReport {
        graph6: g.to_string(),
        n: g.n(),
        edges: g.edge_count(),
        chi: report.chi,
        edge_critical: ec.edge_critical,
        critical_edges: ec.witnesses.0,
        critical_vertices: report.critical_vertices.clone(),
        critical_stars: report.critical_stars.clone(),
        crit: report.crit_h,
        class: report.classification,
        m2: ratio_string(&profile.m2),
        strictly_2_balanced: profile.strictly_2_balanced,
        eta: ratio_string(&profile.eta),
        zeta: profile.zeta,
        regime: profile.regime,
        profile,
    })
}

pub fn invariants(args: &InvariantsArgs) -> anyhow::Result<()> {
    let manifest = RunManifest::start("invariants", args, None);
    let graphs = load_graphs(&args.graph6)?;
    let reports = graphs
        .iter()
        .map(|g| invariants_of(g, args.stars.into()))
        .collect::<anyhow::Result<Vec<_>>>()?;
    emit_json(manifest, "graphs", &reports, args.out.as_deref())
}

#[derive(Args, Debug, Serialize)]
pub struct ThresholdArgs {
    #[arg(long)]
    pub graph6: String,
    /// Number of vertices of the host graph
    #[arg(long)]
    pub n: u64,
    #[arg(long, value_enum, default_value = "all")]
    pub stars: Stars,
    #[arg(long)]
    #[serde(skip)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Serialize)]
struct ThresholdReport {
    graph6: String,
    n: u64,
    value: f64,
    regime: Regime,
    n_exponent: String,
    log_exponent: String,
    m2: String,
    eta: String,
    zeta: usize,
}

pub fn threshold(args: &ThresholdArgs) -> anyhow::Result<()> {
    let manifest = RunManifest::start("threshold", args, None);
    let mut rows = Vec::new();
    for g in load_graphs(&args.graph6)? {
        let selection = args.stars.into();
        let report = classify_with(&g, selection);
        let profile = profile_from_report(&g, &report, selection).with_context(|| format!("graph {g}"))?;
        let t = threshold_m_h(&profile, args.n)?;
        rows.push(ThresholdReport {
            graph6: g.to_string(),
            n: args.n,
            value: t.value,
            regime: t.regime,
            n_exponent: ratio_string(&t.n_exponent),
            log_exponent: ratio_string(&t.log_exponent),
            m2: ratio_string(&profile.m2),
            eta: ratio_string(&profile.eta),
            zeta: profile.zeta,
        });
    }
    emit_json(manifest, "thresholds", &rows, args.out.as_deref())
}

#[derive(Args, Debug, Serialize)]
pub struct CensusArgs {
    /// Forbidden graph H
    #[arg(long)]
    pub graph6: String,
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 0)]
    pub m_min: usize,
    /// Defaults to n(n-1)/2
    #[arg(long)]
    pub m_max: Option<usize>,
    #[arg(long, default_value_t = 2)]
    pub r: usize,
    #[arg(long, default_value_t = 0)]
    pub k: usize,
    #[arg(long)]
    #[serde(skip)]
    pub out: Option<PathBuf>,
}

pub fn census(args: &CensusArgs) -> anyhow::Result<()> {
    let manifest = RunManifest::start("census", args, None);
    let h = load_one(&args.graph6)?;
    let m_max = args.m_max.unwrap_or(args.n * args.n.saturating_sub(1) / 2);
    let rows = census_sweep(args.n, &h, args.r, args.k, args.m_min..=m_max)?;
    let mut buf = Vec::new();
    census_csv(&rows, &mut buf)?;
    emit_csv(manifest, &buf, args.out.as_deref())
}

#[derive(Args, Debug, Serialize)]
pub struct SampleArgs {
    /// Forbidden graph H
    #[arg(long)]
    pub graph6: String,
    #[arg(long)]
    pub n: usize,
    /// Comma-separated edge counts
    #[arg(long, value_delimiter = ',', required = true)]
    pub m: Vec<usize>,
    #[arg(long, default_value_t = 2)]
    pub r: usize,
    #[arg(long, default_value_t = 0)]
    pub k: usize,
    /// Draws per edge count
    #[arg(long, default_value_t = 1000)]
    pub samples: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// rejection or edge-swap
    #[arg(long, default_value = "edge-swap")]
    pub method: Method,
    #[arg(long, default_value_t = 100_000)]
    pub burn_in: u64,
    #[arg(long, default_value_t = 1_000)]
    pub thin: u64,
    /// Rejections allowed per draw
    #[arg(long, default_value_t = 1_000_000)]
    pub max_tries: u64,
    #[arg(long)]
    #[serde(skip)]
    pub out: Option<PathBuf>,
}

pub fn sample(args: &SampleArgs) -> anyhow::Result<()> {
    let manifest = RunManifest::start("sample", args, Some(args.seed));
    let h = load_one(&args.graph6)?;
    let cfg = ChainConfig {
        burn_in: args.burn_in,
        thin: args.thin,
        max_tries: args.max_tries,
        ..ChainConfig::new(args.n, 0, h, args.seed, args.method)
    };
    let rows = sweep_grk_fraction(&cfg, &args.m, args.r, args.k, args.samples)?;
    let mut buf = Vec::new();
    sample_csv(args.n, &rows, &mut buf)?;
    emit_csv(manifest, &buf, args.out.as_deref())
}

#[derive(Args, Debug, Serialize)]
pub struct VerifyBoundsArgs {
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Random subset families in the corpus
    #[arg(long, default_value_t = 200)]
    pub families: usize,
    #[arg(long)]
    #[serde(skip)]
    pub out: Option<PathBuf>,
}

pub fn verify_bounds(args: &VerifyBoundsArgs) -> anyhow::Result<()> {
    let manifest = RunManifest::start("verify-bounds", args, Some(args.seed));
    let report: SuiteReport = inequality_suite(args.seed, args.families)?;
    emit_json(manifest, "report", &report, args.out.as_deref())?;
    if !report.all_hold() {
        bail!(Violation(format!("{} inequality violations", report.violations.len())));
    }
    Ok(())
}
