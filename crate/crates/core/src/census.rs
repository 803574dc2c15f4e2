//! Exact labelled counts of `H`-free graphs on `0..n` with `m` edges,
//! split by membership in `G(r,k)`.
//!
//! Both properties are closed under deleting edges, so a depth-first walk
//! over edge sets in lexicographic order can drop a branch as soon as the
//! current graph has neither property. Every node of the walk is a distinct
//! edge set, which lets one walk fill in the counts for every `m` at once.
//! The walk is split on its first two edges and the pieces are counted in
//! parallel.

use std::io::{self, Write};
use std::ops::RangeInclusive;

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{find_colouring, Graph, Matcher, VertexSet};
use crate::scalar::binomial;
use crate::{BigRational, Count};

/// Largest `n` accepted by the exact enumerations.
pub const ENUMERATION_LIMIT: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusResult {
    pub n: usize,
    pub m: usize,
    /// `C(N, m)` with `N = n(n-1)/2`.
    pub total: Count,
    pub h_free: Count,
    pub in_grk: Count,
    pub h_free_and_grk: Count,
    /// `h_free_and_grk / h_free`; absent when there are no `H`-free graphs.
    pub fraction: Option<BigRational>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
struct Tally {
    h_free: Vec<u64>,
    in_grk: Vec<u64>,
    both: Vec<u64>,
}

impl Tally {
    fn new(len: usize) -> Self {
        Tally {
            h_free: vec![0; len],
            in_grk: vec![0; len],
            both: vec![0; len],
        }
    }

    fn add(&mut self, m: usize, free: bool, grk: bool) {
        self.h_free[m] += free as u64;
        self.in_grk[m] += grk as u64;
        self.both[m] += (free && grk) as u64;
    }

    fn merge(mut self, other: Tally) -> Tally {
        for (a, b) in [
            (&mut self.h_free, &other.h_free),
            (&mut self.in_grk, &other.in_grk),
            (&mut self.both, &other.both),
        ] {
            a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
        }
        self
    }
}

struct Walker<'a> {
    n: usize,
    pairs: Vec<(usize, usize)>,
    matcher: &'a Matcher,
    grk: Option<(usize, usize)>,
    max_m: usize,
}

/// Witness colouring as class masks.
type Classes = Vec<VertexSet>;

impl<'a> Walker<'a> {
    fn new(n: usize, matcher: &'a Matcher, grk: Option<(usize, usize)>, max_m: usize) -> Self {
        let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        Walker {
            n,
            pairs,
            matcher,
            grk,
            max_m,
        }
    }

    fn colouring(&self, g: &Graph) -> Option<Classes> {
        let (r, k) = self.grk?;
        let labels = find_colouring(g, r, k)?;
        let mut classes = vec![0; r];
        for (v, &c) in labels.iter().enumerate() {
            classes[c] |= 1 << v;
        }
        Some(classes)
    }

    /// Flags of a graph computed from scratch.
    fn flags(&self, g: &Graph) -> (bool, Option<Classes>) {
        (!self.matcher.is_contained_in(g), self.colouring(g))
    }

    fn alive(&self, free: bool, witness: &Option<Classes>) -> bool {
        free || (self.grk.is_some() && witness.is_some())
    }

    /// Flags after adding `uv` to a graph with the given flags.
    fn extend(&self, g: &Graph, u: usize, v: usize, free: bool, witness: &Option<Classes>) -> (bool, Option<Classes>) {
        let free = free && !self.matcher.contains_through_edge(g, u, v);
        let witness = match (self.grk, witness) {
            (Some((_, k)), Some(classes)) => {
                let cu = classes.iter().position(|c| c >> u & 1 == 1).expect("covered");
                let still_valid = classes[cu] >> v & 1 == 0
                    || ((g.neighbours(u) & classes[cu]).count_ones() as usize <= k
                        && (g.neighbours(v) & classes[cu]).count_ones() as usize <= k);
                if still_valid {
                    Some(classes.clone())
                } else {
                    self.colouring(g)
                }
            }
            _ => None,
        };
        (free, witness)
    }

    fn walk<F>(&self, g: &mut Graph, next: usize, free: bool, witness: Option<Classes>, visit: &mut F)
    where
        F: FnMut(&Graph, bool, bool),
    {
        visit(g, free, witness.is_some());
        if g.edge_count() == self.max_m {
            return;
        }
        for i in next..self.pairs.len() {
            let (u, v) = self.pairs[i];
            g.add_edge(u, v);
            let (cf, cw) = self.extend(g, u, v, free, &witness);
            if self.alive(cf, &cw) {
                self.walk(g, i + 1, cf, cw, visit);
            }
            g.remove_edge(u, v);
        }
    }

    fn tally(&self) -> Tally {
        let len = self.max_m + 1;
        let mut head = Tally::new(len);
        let empty = Graph::empty(self.n).expect("n within limit");
        // the root and single edges are visited directly, deeper nodes in
        // one parallel task per pair of first edges
        let (free, w) = self.flags(&empty);
        head.add(0, free, w.is_some());
        if self.max_m == 0 {
            return head;
        }
        for &(u, v) in &self.pairs {
            let mut g = empty.clone();
            g.add_edge(u, v);
            let (free, w) = self.flags(&g);
            head.add(1, free, w.is_some());
        }
        if self.max_m == 1 {
            return head;
        }
        let np = self.pairs.len();
        let roots: Vec<(usize, usize)> = (0..np).flat_map(|i| (i + 1..np).map(move |j| (i, j))).collect();
        let tails = roots
            .par_iter()
            .map(|&(i, j)| {
                let mut t = Tally::new(len);
                let mut g = empty.clone();
                for idx in [i, j] {
                    let (u, v) = self.pairs[idx];
                    g.add_edge(u, v);
                }
                let (free, w) = self.flags(&g);
                if self.alive(free, &w) {
                    self.walk(&mut g, j + 1, free, w, &mut |g: &Graph, f, k| {
                        t.add(g.edge_count(), f, k)
                    });
                }
                t
            })
            .collect::<Vec<_>>();
        tails.into_iter().fold(head, Tally::merge)
    }
}

fn check_n(n: usize) -> Result<()> {
    if n > ENUMERATION_LIMIT {
        return Err(Error::LimitExceeded {
            what: format!("n = {n}"),
            limit: ENUMERATION_LIMIT,
        });
    }
    Ok(())
}

fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

fn check_m(n: usize, m: usize) -> Result<()> {
    if m > pair_count(n) {
        return Err(Error::Precondition(format!(
            "m = {m} exceeds the {} vertex pairs of K_{n}",
            pair_count(n)
        )));
    }
    Ok(())
}

/// `|F_{n,m}(H)|`.
pub fn count_h_free(n: usize, m: usize, h: &Graph) -> Result<Count> {
    check_n(n)?;
    check_m(n, m)?;
    let matcher = Matcher::new(h);
    let tally = Walker::new(n, &matcher, None, m).tally();
    Ok(Count::from(tally.h_free[m]))
}

/// All `H`-free graphs on `0..n` with `m` edges, in walk order.
pub fn enumerate_h_free(n: usize, m: usize, h: &Graph) -> Result<Vec<Graph>> {
    check_n(n)?;
    check_m(n, m)?;
    let matcher = Matcher::new(h);
    let walker = Walker::new(n, &matcher, None, m);
    let mut g = Graph::empty(n)?;
    let (free, _) = walker.flags(&g);
    let mut out = Vec::new();
    if free {
        walker.walk(&mut g, 0, true, None, &mut |g: &Graph, f, _| {
            if f && g.edge_count() == m {
                out.push(g.clone());
            }
        });
    }
    Ok(out)
}

/// Counts for a single `m`.
pub fn census_structure(n: usize, m: usize, h: &Graph, r: usize, k: usize) -> Result<CensusResult> {
    Ok(census_sweep(n, h, r, k, m..=m)?.remove(0))
}

/// Counts for every `m` in the range, ascending, from one walk.
pub fn census_sweep(n: usize, h: &Graph, r: usize, k: usize, ms: RangeInclusive<usize>) -> Result<Vec<CensusResult>> {
    check_n(n)?;
    if ms.is_empty() {
        return Ok(Vec::new());
    }
    check_m(n, *ms.end())?;
    if r == 0 {
        return Err(Error::param("r", "need r >= 1"));
    }
    let matcher = Matcher::new(h);
    let tally = Walker::new(n, &matcher, Some((r, k)), *ms.end()).tally();
    let big_n = pair_count(n) as u64;
    Ok(ms
        .map(|m| {
            let h_free = Count::from(tally.h_free[m]);
            let both = Count::from(tally.both[m]);
            let fraction =
                (!h_free.is_zero()).then(|| BigRational::new(BigInt::from(both.clone()), BigInt::from(h_free.clone())));
            CensusResult {
                n,
                m,
                total: binomial(big_n, m as u64),
                h_free,
                in_grk: Count::from(tally.in_grk[m]),
                h_free_and_grk: both,
                fraction,
            }
        })
        .collect())
}

pub const CSV_HEADER: &str = "n,m,total,h_free,in_grk,h_free_and_grk,fraction_num,fraction_den";

/// Writes rows in the census CSV layout; an absent fraction leaves both
/// fraction columns empty.
pub fn write_csv<W: Write>(rows: &[CensusResult], mut out: W) -> io::Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for r in rows {
        let (num, den) = match &r.fraction {
            Some(f) => (f.numer().to_string(), f.denom().to_string()),
            None => (String::new(), String::new()),
        };
        writeln!(
            out,
            "{},{},{},{},{},{},{},{}",
            r.n, r.m, r.total, r.h_free, r.in_grk, r.h_free_and_grk, num, den
        )?;
    }
    Ok(())
}
