//! Sampling from `F_{n,m}(H)`, the `H`-free graphs on `0..n` with `m` edges.
//!
//! Rejection from uniform `G(n,m)` is exact but only practical while
//! `H`-free graphs are a reasonable share of all `m`-edge graphs. Past that
//! point the edge-swap chain takes over: remove a uniform edge, add a
//! uniform non-edge, keep the move iff the result is still `H`-free. The
//! proposal is symmetric, so the chain is uniform on whatever class of
//! states it can reach from its start.
//!
//! All randomness comes from ChaCha8 seeded with the config seed; parallel
//! chains use separate streams of the same seed.

use std::fmt;
use std::io::{self, Write};
use std::str::FromStr;

use rand::seq::{index, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Matcher, MAX_VERTICES};
use crate::partition::{in_grk, turan_partition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Rejection,
    #[default]
    EdgeSwap,
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "rejection" => Ok(Method::Rejection),
            "edge-swap" => Ok(Method::EdgeSwap),
            _ => Err(Error::param("method", format!("unknown method {s:?}"))),
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Rejection => "rejection",
            Method::EdgeSwap => "edge-swap",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainConfig {
    pub n: usize,
    pub m: usize,
    pub pattern: Graph,
    pub burn_in: u64,
    pub thin: u64,
    pub seed: u64,
    pub method: Method,
    /// Rejections allowed per draw before the rejection sampler gives up.
    pub max_tries: u64,
}

impl ChainConfig {
    pub fn new(n: usize, m: usize, pattern: Graph, seed: u64, method: Method) -> Self {
        ChainConfig {
            n,
            m,
            pattern,
            burn_in: 100_000,
            thin: 1_000,
            seed,
            method,
            max_tries: 1_000_000,
        }
    }

    pub fn pair_count(&self) -> usize {
        self.n * self.n.saturating_sub(1) / 2
    }

    pub fn validate(&self) -> Result<()> {
        if self.n > MAX_VERTICES {
            return Err(Error::Capacity {
                n: self.n,
                capacity: MAX_VERTICES,
            });
        }
        if self.m > self.pair_count() {
            return Err(Error::Precondition(format!(
                "m = {} exceeds the {} pairs on {} vertices",
                self.m,
                self.pair_count(),
                self.n
            )));
        }
        if self.method == Method::EdgeSwap && (self.burn_in == 0 || self.thin == 0) {
            return Err(Error::param(
                "burn_in/thin",
                "edge-swap needs burn_in >= 1 and thin >= 1",
            ));
        }
        Ok(())
    }

    fn rng(&self, stream: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(stream);
        rng
    }
}

fn all_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

/// Repeated exact draws by rejection from uniform `G(n,m)`.
#[derive(Debug, Clone)]
pub struct RejectionSampler {
    cfg: ChainConfig,
    pairs: Vec<(usize, usize)>,
    matcher: Matcher,
    rng: ChaCha8Rng,
}

impl RejectionSampler {
    pub fn new(cfg: &ChainConfig) -> Result<Self> {
        Self::with_stream(cfg, 0)
    }

    fn with_stream(cfg: &ChainConfig, stream: u64) -> Result<Self> {
        cfg.validate()?;
        Ok(RejectionSampler {
            pairs: all_pairs(cfg.n),
            matcher: Matcher::new(&cfg.pattern),
            rng: cfg.rng(stream),
            cfg: cfg.clone(),
        })
    }

    /// Next draw, or an error after `max_tries` rejections.
    pub fn sample(&mut self, max_tries: u64) -> Result<Graph> {
        for _ in 0..max_tries.max(1) {
            let mut g = Graph::empty(self.cfg.n)?;
            for i in index::sample(&mut self.rng, self.pairs.len(), self.cfg.m) {
                let (u, v) = self.pairs[i];
                g.add_edge(u, v);
            }
            if !self.matcher.is_contained_in(&g) {
                return Ok(g);
            }
        }
        Err(Error::Sampler(format!(
            "no H-free graph after {max_tries} rejections at n = {}, m = {}",
            self.cfg.n, self.cfg.m
        )))
    }
}

/// One exact draw from a fresh sampler seeded by `cfg.seed`.
pub fn sample_rejection(cfg: &ChainConfig, max_tries: u64) -> Result<Graph> {
    if cfg.method != Method::Rejection {
        return Err(Error::param("method", "sample_rejection needs method = rejection"));
    }
    RejectionSampler::new(cfg)?.sample(max_tries)
}

/// The edge-swap Metropolis chain. As an iterator it yields the state after
/// `burn_in` steps and then after every further `thin` steps.
#[derive(Debug, Clone)]
pub struct EdgeSwapChain {
    cfg: ChainConfig,
    pairs: Vec<(usize, usize)>,
    present: Vec<usize>,
    absent: Vec<usize>,
    state: Graph,
    matcher: Matcher,
    rng: ChaCha8Rng,
    started: bool,
    steps: u64,
    accepted: u64,
}

impl EdgeSwapChain {
    pub fn new(cfg: &ChainConfig) -> Result<Self> {
        Self::with_stream(cfg, 0)
    }

    fn with_stream(cfg: &ChainConfig, stream: u64) -> Result<Self> {
        cfg.validate()?;
        let pairs = all_pairs(cfg.n);
        let matcher = Matcher::new(&cfg.pattern);
        let mut rng = cfg.rng(stream);

        // greedy start: pairs across a balanced (chi(H)-1)-partition first,
        // each group in random order, skipping any pair that would create H
        let parts = cfg.pattern.chromatic_number().saturating_sub(1).max(1);
        let part = turan_partition(cfg.n, parts);
        let (mut cross, mut inner): (Vec<usize>, Vec<usize>) =
            (0..pairs.len()).partition(|&i| !part.is_within_class(pairs[i].0, pairs[i].1));
        cross.shuffle(&mut rng);
        inner.shuffle(&mut rng);
        let mut state = Graph::empty(cfg.n)?;
        if matcher.is_contained_in(&state) {
            return Err(Error::Sampler("every graph on n vertices contains H".into()));
        }
        let mut in_state = vec![false; pairs.len()];
        for i in cross.into_iter().chain(inner) {
            if state.edge_count() == cfg.m {
                break;
            }
            let (u, v) = pairs[i];
            state.add_edge(u, v);
            if matcher.contains_through_edge(&state, u, v) {
                state.remove_edge(u, v);
            } else {
                in_state[i] = true;
            }
        }
        if state.edge_count() < cfg.m {
            return Err(Error::Sampler(format!(
                "greedy construction stopped at {} < m = {} edges",
                state.edge_count(),
                cfg.m
            )));
        }
        let (present, absent) = (0..pairs.len()).partition(|&i| in_state[i]);
        Ok(EdgeSwapChain {
            cfg: cfg.clone(),
            pairs,
            present,
            absent,
            state,
            matcher,
            rng,
            started: false,
            steps: 0,
            accepted: 0,
        })
    }

    pub fn state(&self) -> &Graph {
        &self.state
    }

    pub fn steps(&self) -> u64 {
        self.steps
    }

    pub fn accepted(&self) -> u64 {
        self.accepted
    }

    /// One Metropolis step; returns whether the proposal was accepted.
    pub fn step(&mut self) -> bool {
        self.steps += 1;
        if self.present.is_empty() || self.absent.is_empty() {
            return false;
        }
        let i = self.rng.random_range(0..self.present.len());
        let j = self.rng.random_range(0..self.absent.len());
        let (a, b) = self.pairs[self.present[i]];
        let (u, v) = self.pairs[self.absent[j]];
        self.state.remove_edge(a, b);
        self.state.add_edge(u, v);
        if self.matcher.contains_through_edge(&self.state, u, v) {
            self.state.remove_edge(u, v);
            self.state.add_edge(a, b);
            return false;
        }
        std::mem::swap(&mut self.present[i], &mut self.absent[j]);
        self.accepted += 1;
        true
    }

    pub fn advance(&mut self, steps: u64) {
        for _ in 0..steps {
            self.step();
        }
    }
}

impl Iterator for EdgeSwapChain {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        let steps = if self.started { self.cfg.thin } else { self.cfg.burn_in };
        self.started = true;
        self.advance(steps);
        Some(self.state.clone())
    }
}

/// The edge-swap sample stream for `cfg`.
pub fn sample_edge_swap(cfg: &ChainConfig) -> Result<EdgeSwapChain> {
    EdgeSwapChain::new(cfg)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FractionEstimate {
    /// Draws that produced a graph.
    pub samples: u64,
    pub successes: u64,
    pub point: f64,
    pub ci_low: f64,
    pub ci_high: f64,
    /// Draws abandoned by the rejection sampler.
    pub failures: u64,
}

const Z95: f64 = 1.959963984540054;

/// Wilson 95% interval for `successes` out of `samples`.
pub fn wilson_interval(successes: u64, samples: u64) -> (f64, f64, f64) {
    if samples == 0 {
        return (0.0, 0.0, 1.0);
    }
    let n = samples as f64;
    let p = successes as f64 / n;
    let z2 = Z95 * Z95;
    let denom = 1.0 + z2 / n;
    let centre = (p + z2 / (2.0 * n)) / denom;
    let half = Z95 * (p * (1.0 - p) / n + z2 / (4.0 * n * n)).sqrt() / denom;
    let low = (centre - half).clamp(0.0, 1.0).min(p);
    let high = (centre + half).clamp(0.0, 1.0).max(p);
    (p, low, high)
}

/// Number of independent chains an estimate is split over. Fixed so results
/// do not depend on the thread count.
pub const CHAINS: u64 = 4;

/// Fraction of draws lying in `G(r,k)`, pooled over [`CHAINS`] chains.
pub fn estimate_grk_fraction(cfg: &ChainConfig, r: usize, k: usize, samples: u64) -> Result<FractionEstimate> {
    cfg.validate()?;
    if r == 0 {
        return Err(Error::param("r", "need r >= 1"));
    }
    let per_chain = |c: u64| samples / CHAINS + u64::from(c < samples % CHAINS);
    let counts = (0..CHAINS)
        .into_par_iter()
        .map(|c| -> Result<(u64, u64, u64)> {
            let want = per_chain(c);
            let (mut drawn, mut hits, mut failed) = (0, 0, 0);
            if want == 0 {
                return Ok((0, 0, 0));
            }
            match cfg.method {
                Method::Rejection => {
                    let mut s = RejectionSampler::with_stream(cfg, c)?;
                    for _ in 0..want {
                        match s.sample(cfg.max_tries) {
                            Ok(g) => {
                                drawn += 1;
                                hits += u64::from(in_grk(&g, r, k).is_some());
                            }
                            Err(_) => failed += 1,
                        }
                    }
                }
                Method::EdgeSwap => {
                    for g in EdgeSwapChain::with_stream(cfg, c)?.take(want as usize) {
                        drawn += 1;
                        hits += u64::from(in_grk(&g, r, k).is_some());
                    }
                }
            }
            Ok((drawn, hits, failed))
        })
        .collect::<Result<Vec<_>>>()?;
    let (drawn, hits, failed) = counts
        .into_iter()
        .fold((0, 0, 0), |a, b| (a.0 + b.0, a.1 + b.1, a.2 + b.2));
    let (point, ci_low, ci_high) = wilson_interval(hits, drawn);
    Ok(FractionEstimate {
        samples: drawn,
        successes: hits,
        point,
        ci_low,
        ci_high,
        failures: failed,
    })
}

/// Estimates at each `m` in turn, with `cfg.m` replaced.
pub fn sweep_grk_fraction(
    cfg: &ChainConfig,
    ms: &[usize],
    r: usize,
    k: usize,
    samples: u64,
) -> Result<Vec<(usize, FractionEstimate)>> {
    ms.iter()
        .map(|&m| {
            let c = ChainConfig { m, ..cfg.clone() };
            Ok((m, estimate_grk_fraction(&c, r, k, samples)?))
        })
        .collect()
}

pub const CSV_HEADER: &str = "n,m,samples,successes,point,ci_low,ci_high,failures";

pub fn write_csv<W: Write>(n: usize, rows: &[(usize, FractionEstimate)], mut out: W) -> io::Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for (m, e) in rows {
        writeln!(
            out,
            "{n},{m},{},{},{:.6},{:.6},{:.6},{}",
            e.samples, e.successes, e.point, e.ci_low, e.ci_high, e.failures
        )?;
    }
    Ok(())
}
