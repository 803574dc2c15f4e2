//! 2-density, the generalised densities `d_k`, the star extremals η/ζ and
//! the threshold function `m_H(n)`.
//!
//! All maximisations run in an [`ExactScalar`] so ties are decided exactly;
//! only [`threshold_m_h`] leaves the exact world.
//!
//! The threshold has two branches. When `m₂(H) > η(H)` it is
//! `n^{2 - 1/m₂(H)}`; otherwise it is
//! `n^{2 - 1/η(H)} · (log n)^{1/(ζ(H) - k - 1)}` with `crit(H) = k + 1`.
//! The criticality branch reduces to `n^{2 - 1/m₂} (log n)^{1/(e_H - 1)}`
//! for strictly 2-balanced edge-critical `H`. Logarithms are natural.

use serde::{Deserialize, Serialize};

use crate::criticality::{classify_with, Classification, CriticalityReport, Star, StarSelection};
use crate::error::{Error, Result};
use crate::graph::{full_set, members, Graph, VertexSet};
use crate::scalar::ExactScalar;
use crate::Density;

/// Largest pattern order accepted by the subset scans in this module.
pub const MAX_PATTERN_ORDER: usize = 24;

#[derive(Debug, Clone, PartialEq)]
pub struct TwoDensity<T> {
    pub value: T,
    /// A vertex set `W` with `(e(H[W]) - 1)/(|W| - 2) = m₂(H)`.
    pub witness: Vec<usize>,
}

fn check_order(h: &Graph) -> Result<()> {
    if h.n() < 3 {
        return Err(Error::Precondition(format!(
            "2-density needs at least 3 vertices, got {}",
            h.n()
        )));
    }
    if h.n() > MAX_PATTERN_ORDER {
        return Err(Error::LimitExceeded {
            what: format!("pattern order {}", h.n()),
            limit: MAX_PATTERN_ORDER,
        });
    }
    Ok(())
}

fn ratio_term<T: ExactScalar>(edges: usize, vertices: usize) -> T {
    T::ratio(edges as i64 - 1, vertices as i64 - 2)
}

/// `m₂(H) = max (e_K - 1)/(v_K - 2)` over subgraphs with `v_K >= 3`.
///
/// For a fixed vertex set the term grows with the edge count, so it is
/// enough to scan induced subgraphs.
pub fn two_density<T: ExactScalar>(h: &Graph) -> Result<TwoDensity<T>> {
    check_order(h)?;
    let mut best: Option<(T, VertexSet)> = None;
    for w in 1..=full_set(h.n()) {
        let size = w.count_ones() as usize;
        if size < 3 {
            continue;
        }
        let val: T = ratio_term(h.edges_within(w), size);
        if best.as_ref().is_none_or(|(b, _)| val > *b) {
            best = Some((val, w));
        }
    }
    let (value, w) = best.expect("at least one vertex set of size 3");
    Ok(TwoDensity {
        value,
        witness: members(w).collect(),
    })
}

/// True iff the 2-density is attained only by `H` itself.
pub fn is_strictly_2_balanced(h: &Graph) -> Result<bool> {
    check_order(h)?;
    let all = full_set(h.n());
    let whole: Density = ratio_term(h.edge_count(), h.n());
    for w in 1..all {
        let size = w.count_ones() as usize;
        if size >= 3 && ratio_term::<Density>(h.edges_within(w), size) >= whole {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `d_k(F) = (e_F - k + 1)/(v_F - k)`, defined for `v_F >= k + 1`.
pub fn dk_density<T: ExactScalar>(edges: usize, vertices: usize, k: usize) -> Result<T> {
    if vertices <= k {
        return Err(Error::Precondition(format!(
            "d_{k} needs more than {k} vertices, got {vertices}"
        )));
    }
    Ok(T::ratio(edges as i64 - k as i64 + 1, (vertices - k) as i64))
}

/// `d_k` of a whole graph; isolated vertices count.
pub fn dk_of_graph<T: ExactScalar>(f: &Graph, k: usize) -> Result<T> {
    dk_density(f.edge_count(), f.n(), k)
}

#[derive(Debug, Clone, PartialEq)]
pub struct StarExtremal<T> {
    pub star: Star,
    pub eta: T,
    pub zeta: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct EtaZeta<T> {
    pub eta: T,
    pub zeta: usize,
    pub per_star: Vec<StarExtremal<T>>,
}

/// η_i and ζ_i for one star.
///
/// `F` runs over `S ⊊ F ⊆ H`, described by a vertex set `W ⊇ V(S)` and an
/// edge count between `e_S` and `e(H[W])`. `d_{k+2}` is only defined for
/// `|W| >= k + 3`. The maximum is taken with all edges of `H[W]`; ζ_i is
/// the least edge count whose density hits η_i exactly.
pub fn star_extremal<T: ExactScalar>(h: &Graph, star: &Star, k: usize) -> Result<StarExtremal<T>> {
    let base = star.vertex_set();
    let rest = full_set(h.n()) & !base;
    let e_s = star.edge_count();
    let min_order = k + 3;

    let feasible = |w: VertexSet| -> Option<(usize, usize, usize)> {
        let size = w.count_ones() as usize;
        if size < min_order {
            return None;
        }
        let full = h.edges_within(w);
        let lo = if w == base { e_s + 1 } else { e_s };
        (lo <= full).then_some((size, lo, full))
    };

    let mut eta: Option<T> = None;
    for_each_subset(rest, |extra| {
        if let Some((size, _, full)) = feasible(base | extra) {
            let d: T = dk_density(full, size, k + 2).expect("size > k + 2");
            if eta.as_ref().is_none_or(|e| d > *e) {
                eta = Some(d);
            }
        }
    });
    let eta = eta.ok_or_else(|| {
        Error::Precondition(format!(
            "no subgraph strictly containing star {star:?} has more than {} vertices",
            k + 2
        ))
    })?;

    let mut zeta = usize::MAX;
    for_each_subset(rest, |extra| {
        if let Some((size, lo, full)) = feasible(base | extra) {
            for e in lo..=full.min(zeta.saturating_sub(1)) {
                if dk_density::<T>(e, size, k + 2).expect("size > k + 2") == eta {
                    zeta = e;
                    break;
                }
            }
        }
    });
    debug_assert!(zeta != usize::MAX, "the maximiser itself attains eta");
    Ok(StarExtremal {
        star: star.clone(),
        eta,
        zeta,
    })
}

fn for_each_subset(set: VertexSet, mut f: impl FnMut(VertexSet)) {
    // standard submask walk, including the empty set
    let mut sub = set;
    loop {
        f(sub);
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & set;
    }
}

/// η(H) = min η_i and ζ(H) = max ζ_i over the stars attaining η.
pub fn eta_zeta<T: ExactScalar>(h: &Graph, report: &CriticalityReport) -> Result<EtaZeta<T>> {
    if !report.is_vertex_critical() {
        return Err(Error::NotVertexCritical);
    }
    let crit = report
        .crit_h
        .ok_or_else(|| Error::Precondition("criticality undefined".into()))?;
    if report.critical_stars.is_empty() {
        return Err(Error::Precondition("no critical stars".into()));
    }
    let k = crit - 1;
    let per_star = report
        .critical_stars
        .iter()
        .map(|s| star_extremal::<T>(h, s, k))
        .collect::<Result<Vec<_>>>()?;
    let eta = per_star
        .iter()
        .map(|s| s.eta.clone())
        .reduce(|a, b| if b < a { b } else { a })
        .expect("nonempty");
    let zeta = per_star
        .iter()
        .filter(|s| s.eta == eta)
        .map(|s| s.zeta)
        .max()
        .expect("some star attains the minimum");
    Ok(EtaZeta { eta, zeta, per_star })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Regime {
    /// `m₂(H) > η(H)`.
    TwoDensity,
    Criticality,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StarDensity {
    pub star: Star,
    #[serde(with = "crate::scalar::ratio_json")]
    pub eta: Density,
    pub zeta: usize,
}

/// Every invariant of `H` the threshold depends on.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ThresholdProfile {
    pub chi: usize,
    /// `crit(H) - 1`.
    pub k: usize,
    /// `χ(H) - 1`.
    pub r: usize,
    #[serde(with = "crate::scalar::ratio_json")]
    pub m2: Density,
    pub strictly_2_balanced: bool,
    #[serde(with = "crate::scalar::ratio_json")]
    pub eta: Density,
    pub zeta: usize,
    pub per_star: Vec<StarDensity>,
    pub regime: Regime,
    pub e_h: usize,
    pub v_h: usize,
    pub star_selection: StarSelection,
}

/// Builds the threshold profile; needs `χ(H) >= 3` and a vertex-critical `H`.
pub fn threshold_profile(h: &Graph, selection: StarSelection) -> Result<ThresholdProfile> {
    let report = classify_with(h, selection);
    profile_from_report(h, &report, selection)
}

pub fn profile_from_report(
    h: &Graph,
    report: &CriticalityReport,
    selection: StarSelection,
) -> Result<ThresholdProfile> {
    if report.chi < 3 {
        return Err(Error::Precondition(format!(
            "χ(H) = {} < 3: threshold theory needs a non-bipartite pattern",
            report.chi
        )));
    }
    if report.classification == Classification::NotVertexCritical {
        return Err(Error::NotVertexCritical);
    }
    let m2 = two_density::<Density>(h)?.value;
    let ez = eta_zeta::<Density>(h, report)?;
    let crit = report.crit_h.expect("eta_zeta checked crit");
    let regime = if m2 > ez.eta {
        Regime::TwoDensity
    } else {
        Regime::Criticality
    };
    Ok(ThresholdProfile {
        chi: report.chi,
        k: crit - 1,
        r: report.chi - 1,
        m2,
        strictly_2_balanced: is_strictly_2_balanced(h)?,
        eta: ez.eta,
        zeta: ez.zeta,
        per_star: ez
            .per_star
            .into_iter()
            .map(|s| StarDensity {
                star: s.star,
                eta: s.eta,
                zeta: s.zeta,
            })
            .collect(),
        regime,
        e_h: h.edge_count(),
        v_h: h.n(),
        star_selection: selection,
    })
}

/// `m_H(n)` with its exponents.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ThresholdValue {
    pub value: f64,
    pub regime: Regime,
    /// Exponent of `n`.
    #[serde(with = "crate::scalar::ratio_json")]
    pub n_exponent: Density,
    /// Exponent of `log n`; zero in the two-density branch.
    #[serde(with = "crate::scalar::ratio_json")]
    pub log_exponent: Density,
}

impl ThresholdProfile {
    pub fn exponents(&self) -> (Density, Density) {
        let two = Density::from_integer(2);
        match self.regime {
            Regime::TwoDensity => (two - self.m2.recip(), Density::from_integer(0)),
            Regime::Criticality => (two - self.eta.recip(), Density::new(1, (self.zeta - self.k - 1) as i64)),
        }
    }
}

pub fn threshold_m_h(profile: &ThresholdProfile, n: u64) -> Result<ThresholdValue> {
    if n < 3 {
        return Err(Error::Precondition(format!("m_H(n) needs n >= 3, got {n}")));
    }
    let (a, b) = profile.exponents();
    let to_f = |r: &Density| *r.numer() as f64 / *r.denom() as f64;
    let ln = (n as f64).ln();
    let value = (to_f(&a) * ln).exp() * ln.powf(to_f(&b));
    Ok(ThresholdValue {
        value,
        regime: profile.regime,
        n_exponent: a,
        log_exponent: b,
    })
}
