//! Critical vertices, critical stars and the simple/plain taxonomy.
//!
//! A vertex `v` is critical when `χ(H - v) = χ(H) - 1`. A star centred at a
//! critical vertex is critical when deleting its edges drops χ by one and no
//! proper sub-star does. Because deleting more edges can only help,
//! minimality only has to be checked against sub-stars with one leaf fewer.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{chromatic_number, girth, is_colourable, members, EdgeList, Graph, VertexSet};

/// A star `S ⊆ H`: a centre and a nonempty set of neighbours of it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Star {
    pub centre: usize,
    /// Sorted ascending.
    pub leaves: Vec<usize>,
}

impl Star {
    pub fn new(centre: usize, mut leaves: Vec<usize>) -> Self {
        leaves.sort_unstable();
        Star { centre, leaves }
    }

    pub fn edge_count(&self) -> usize {
        self.leaves.len()
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.leaves.iter().fold(1u64 << self.centre, |acc, &l| acc | 1 << l)
    }

    /// The star's edges as `(min, max)` pairs, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut e: Vec<_> = self
            .leaves
            .iter()
            .map(|&l| (self.centre.min(l), self.centre.max(l)))
            .collect();
        e.sort_unstable();
        e
    }
}

/// Which critical stars to report.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum StarSelection {
    /// Every minimal star, whatever its size.
    #[default]
    All,
    /// Only stars with exactly `crit(H)` edges.
    MinSizeOnly,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Classification {
    NotVertexCritical,
    VertexCritical,
    Simple,
    Plain,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeCriticality {
    pub edge_critical: bool,
    /// Every edge whose deletion lowers χ.
    pub witnesses: EdgeList,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriticalityReport {
    pub chi: usize,
    pub critical_vertices: Vec<usize>,
    pub crit_per_vertex: BTreeMap<usize, usize>,
    pub crit_h: Option<usize>,
    pub critical_stars: Vec<Star>,
    pub classification: Classification,
}

impl CriticalityReport {
    pub fn is_vertex_critical(&self) -> bool {
        !self.critical_vertices.is_empty()
    }
}

pub fn is_edge_critical(h: &Graph) -> Result<EdgeCriticality> {
    if h.edge_count() == 0 {
        return Err(Error::Precondition("edge-criticality needs at least one edge".into()));
    }
    let chi = chromatic_number(h);
    let witnesses: Vec<(usize, usize)> = h
        .edges()
        .filter(|e| is_colourable(&h.without_edges([e]), chi - 1))
        .collect();
    Ok(EdgeCriticality {
        edge_critical: !witnesses.is_empty(),
        witnesses: EdgeList(witnesses),
    })
}

/// Vertices whose deletion lowers the chromatic number.
pub fn critical_vertices(h: &Graph) -> Vec<usize> {
    if h.n() == 0 {
        return Vec::new();
    }
    let chi = chromatic_number(h);
    (0..h.n())
        .filter(|&v| chromatic_number(&h.remove_vertex(v)) + 1 == chi)
        .collect()
}

/// Minimal critical stars centred at `v`, in lexicographic leaf order.
fn stars_at(h: &Graph, chi: usize, v: usize) -> Vec<Star> {
    let nbrs: Vec<usize> = members(h.neighbours(v)).collect();
    let d = nbrs.len();
    assert!(d < 32, "degree too large for star enumeration");
    // works[mask]: deleting the edges to nbrs[mask] gives a (χ-1)-colourable graph
    let mut works = vec![false; 1 << d];
    let mut minimal = Vec::new();
    let mut masks: Vec<u32> = (1..(1u32 << d)).collect();
    masks.sort_by_key(|m| (m.count_ones(), *m));
    for mask in masks {
        let m = mask as usize;
        let sub_works = (0..d).any(|i| m >> i & 1 == 1 && works[m & !(1 << i)]);
        if sub_works {
            works[m] = true;
            continue;
        }
        let star: Vec<(usize, usize)> = (0..d).filter(|&i| m >> i & 1 == 1).map(|i| (v, nbrs[i])).collect();
        if chi >= 1 && is_colourable(&h.without_edges(&star), chi - 1) {
            works[m] = true;
            minimal.push(Star::new(v, star.iter().map(|&(_, l)| l).collect()));
        }
    }
    minimal.sort();
    minimal
}

fn all_stars(h: &Graph, chi: usize, critical: &[usize]) -> Vec<Star> {
    critical.iter().flat_map(|&v| stars_at(h, chi, v)).collect()
}

/// Critical stars, ordered by centre and then lexicographically by leaves.
pub fn critical_stars(h: &Graph, selection: StarSelection) -> Result<Vec<Star>> {
    let critical = critical_vertices(h);
    if critical.is_empty() {
        return Err(Error::NotVertexCritical);
    }
    let chi = chromatic_number(h);
    let stars = all_stars(h, chi, &critical);
    Ok(select(stars, selection))
}

fn select(stars: Vec<Star>, selection: StarSelection) -> Vec<Star> {
    match selection {
        StarSelection::All => stars,
        StarSelection::MinSizeOnly => {
            let min = stars.iter().map(Star::edge_count).min().unwrap_or(0);
            stars.into_iter().filter(|s| s.edge_count() == min).collect()
        }
    }
}

/// Distinct edge sets among `stars`; for `k = 0` the same edge is a star
/// from either endpoint.
pub fn distinct_edge_sets(stars: &[Star]) -> Vec<EdgeList> {
    let set: BTreeSet<Vec<(usize, usize)>> = stars.iter().map(Star::edges).collect();
    set.into_iter().map(EdgeList).collect()
}

/// `crit(v)`: fewest edges at `v` whose deletion lowers χ.
pub fn crit_of_vertex(h: &Graph, v: usize) -> Result<usize> {
    if v >= h.n() {
        return Err(Error::VertexOutOfRange { vertex: v, n: h.n() });
    }
    let chi = chromatic_number(h);
    if chromatic_number(&h.remove_vertex(v)) + 1 != chi {
        return Err(Error::NotCriticalVertex(v));
    }
    stars_at(h, chi, v)
        .iter()
        .map(Star::edge_count)
        .min()
        .ok_or_else(|| Error::Precondition(format!("critical vertex {v} has no incident critical star")))
}

/// Calls `visit` with each map `V -> 0..colours`, up to renaming colours
/// (colours appear in first-use order along `0..n`). Stops when `visit`
/// returns false.
pub fn for_each_colouring(n: usize, colours: usize, mut visit: impl FnMut(&[usize]) -> bool) {
    fn rec(c: &mut Vec<usize>, n: usize, colours: usize, used: usize, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if c.len() == n {
            return visit(c);
        }
        for col in 0..colours.min(used + 1) {
            c.push(col);
            let go = rec(c, n, colours, used.max(col + 1), visit);
            c.pop();
            if !go {
                return false;
            }
        }
        true
    }
    if n == 0 || colours == 0 {
        return;
    }
    rec(&mut Vec::with_capacity(n), n, colours, 0, &mut visit);
}

/// Monochromatic graph of a colouring: edges whose endpoints share a colour.
pub fn monochromatic_graph(h: &Graph, colour: &[usize]) -> Graph {
    let mut b = Graph::empty(h.n()).expect("same order");
    for (u, v) in h.edges() {
        if colour[u] == colour[v] {
            b.add_edge(u, v);
        }
    }
    b
}

/// The "simple" test for one monochromatic graph: a star with `crit`
/// edges or a cycle.
pub fn simple_condition(b: &Graph, crit: usize) -> bool {
    b.max_degree() >= crit || girth(b).is_some()
}

/// The four alternatives of the "plain" test, degrees taken in `b`.
pub fn plain_condition(b: &Graph, crit: usize) -> bool {
    if girth(b).is_some() {
        return true;
    }
    let is_star = b.edge_count() == crit && (0..b.n()).any(|v| b.degree(v) == crit);
    if is_star {
        return true;
    }
    if b.max_degree() > crit {
        return true;
    }
    let at_crit: Vec<usize> = (0..b.n()).filter(|&v| b.degree(v) == crit).collect();
    at_crit
        .iter()
        .enumerate()
        .any(|(i, &u)| at_crit[i + 1..].iter().any(|&v| !b.has_edge(u, v)))
}

/// Full criticality report with the strongest applicable label.
pub fn classify_vertex_critical(h: &Graph) -> CriticalityReport {
    classify_with(h, StarSelection::All)
}

pub fn classify_with(h: &Graph, selection: StarSelection) -> CriticalityReport {
    let chi = chromatic_number(h);
    let critical = critical_vertices(h);
    let stars = all_stars(h, chi, &critical);
    let mut crit_per_vertex = BTreeMap::new();
    for s in &stars {
        let e = crit_per_vertex.entry(s.centre).or_insert(usize::MAX);
        *e = (*e).min(s.edge_count());
    }
    let crit_h = crit_per_vertex.values().copied().min();

    let classification = if critical.is_empty() {
        Classification::NotVertexCritical
    } else if let Some(crit) = crit_h {
        let (simple, plain) = colouring_tests(h, chi, crit);
        if plain {
            Classification::Plain
        } else if simple {
            Classification::Simple
        } else {
            Classification::VertexCritical
        }
    } else {
        Classification::VertexCritical
    };

    CriticalityReport {
        chi,
        critical_vertices: critical,
        crit_per_vertex,
        crit_h,
        critical_stars: select(stars, selection),
        classification,
    }
}

/// Runs both tests over every (χ-1)-colouring; returns (simple, plain).
fn colouring_tests(h: &Graph, chi: usize, crit: usize) -> (bool, bool) {
    let (mut simple, mut plain) = (true, true);
    for_each_colouring(h.n(), chi.saturating_sub(1), |c| {
        let b = monochromatic_graph(h, c);
        simple &= simple_condition(&b, crit);
        plain &= plain_condition(&b, crit);
        simple || plain
    });
    (simple, plain)
}

/// Every (χ-1)-colouring satisfies the simple condition.
pub fn is_simple_vertex_critical(h: &Graph) -> bool {
    let report = classify_vertex_critical(h);
    let Some(crit) = report.crit_h else { return false };
    let mut ok = true;
    for_each_colouring(h.n(), report.chi.saturating_sub(1), |c| {
        ok &= simple_condition(&monochromatic_graph(h, c), crit);
        ok
    });
    ok
}

/// Every (χ-1)-colouring satisfies one of the plain alternatives.
pub fn is_plain_vertex_critical(h: &Graph) -> bool {
    let report = classify_vertex_critical(h);
    let Some(crit) = report.crit_h else { return false };
    let mut ok = true;
    for_each_colouring(h.n(), report.chi.saturating_sub(1), |c| {
        ok &= plain_condition(&monochromatic_graph(h, c), crit);
        ok
    });
    ok
}
