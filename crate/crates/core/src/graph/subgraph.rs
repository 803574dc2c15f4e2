//! Non-induced subgraph containment by ordered backtracking.
//!
//! Pattern vertices are matched in a connectivity-first order (each next
//! vertex has as many already-matched neighbours as possible, ties broken by
//! higher degree). Host candidates for a position are the intersection of
//! the neighbourhoods of the images of its matched pattern-neighbours, minus
//! used vertices and vertices of too small degree.

use std::ops::ControlFlow;

use super::{full_set, members, Graph, VertexSet};

#[derive(Debug, Clone)]
struct Plan {
    order: Vec<usize>,
    /// For each position, the earlier positions adjacent in the pattern.
    back: Vec<Vec<usize>>,
    degree: Vec<usize>,
    /// Positions `>= matched_len` are isolated pattern vertices.
    matched_len: usize,
}

impl Plan {
    fn new(pattern: &Graph, seed: &[usize]) -> Self {
        let n = pattern.n();
        let mut placed: VertexSet = 0;
        let mut order = Vec::with_capacity(n);
        for &v in seed {
            order.push(v);
            placed |= 1 << v;
        }
        let non_isolated: Vec<usize> = (0..n).filter(|&v| pattern.degree(v) > 0).collect();
        while order.len() < non_isolated.len() {
            let next = non_isolated
                .iter()
                .copied()
                .filter(|&v| placed >> v & 1 == 0)
                .max_by_key(|&v| {
                    (
                        (pattern.neighbours(v) & placed).count_ones(),
                        pattern.degree(v),
                        std::cmp::Reverse(v),
                    )
                })
                .expect("unplaced vertex remains");
            order.push(next);
            placed |= 1 << next;
        }
        let matched_len = order.len();
        order.extend((0..n).filter(|&v| pattern.degree(v) == 0));

        let mut pos = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let back = order
            .iter()
            .enumerate()
            .map(|(i, &v)| {
                let mut b: Vec<usize> = members(pattern.neighbours(v))
                    .map(|w| pos[w])
                    .filter(|&p| p < i)
                    .collect();
                b.sort_unstable();
                b
            })
            .collect();
        let degree = order.iter().map(|&v| pattern.degree(v)).collect();
        Plan {
            order,
            back,
            degree,
            matched_len,
        }
    }
}

/// Precomputed search plans for one pattern graph.
///
/// Besides plain containment, the matcher answers "does the host contain a
/// copy of the pattern through edge `uv`", which is what incremental
/// enumeration and edge-swap sampling need after inserting `uv`.
#[derive(Debug, Clone)]
pub struct Matcher {
    pattern: Graph,
    full: Plan,
    /// One plan per oriented pattern edge `(a, b)`, seeded with `[a, b]`.
    anchored: Vec<Plan>,
    isolated: usize,
}

impl Matcher {
    pub fn new(pattern: &Graph) -> Self {
        let start: Vec<usize> = (0..pattern.n())
            .filter(|&v| pattern.degree(v) > 0)
            .max_by_key(|&v| (pattern.degree(v), std::cmp::Reverse(v)))
            .into_iter()
            .collect();
        let full = Plan::new(pattern, &start);
        let mut anchored = Vec::with_capacity(2 * pattern.edge_count());
        for (a, b) in pattern.edges() {
            anchored.push(Plan::new(pattern, &[a, b]));
            anchored.push(Plan::new(pattern, &[b, a]));
        }
        let isolated = full.order.len() - full.matched_len;
        Matcher {
            pattern: pattern.clone(),
            full,
            anchored,
            isolated,
        }
    }

    pub fn pattern(&self) -> &Graph {
        &self.pattern
    }

    /// True iff `host` contains a (not necessarily induced) copy of the pattern.
    pub fn is_contained_in(&self, host: &Graph) -> bool {
        if self.pattern.n() > host.n() || self.pattern.edge_count() > host.edge_count() {
            return false;
        }
        let mut images = [0usize; 64];
        search(host, &self.full, 0, 0, &mut images, self.isolated, &mut |_| {
            ControlFlow::Break(())
        })
        .is_break()
    }

    /// True iff some copy of the pattern in `host` uses the edge `uv`.
    ///
    /// `host` must contain `uv`. If `host - uv` is pattern-free, this is
    /// equivalent to [`Matcher::is_contained_in`].
    pub fn contains_through_edge(&self, host: &Graph, u: usize, v: usize) -> bool {
        debug_assert!(host.has_edge(u, v));
        if self.pattern.n() > host.n() || self.pattern.edge_count() > host.edge_count() {
            return false;
        }
        let (du, dv) = (host.degree(u), host.degree(v));
        let mut images = [0usize; 64];
        for plan in &self.anchored {
            if plan.degree[0] > du || plan.degree[1] > dv {
                continue;
            }
            images[0] = u;
            images[1] = v;
            let used = (1u64 << u) | (1u64 << v);
            let found = search(host, plan, 2, used, &mut images, self.isolated, &mut |_| {
                ControlFlow::Break(())
            });
            if found.is_break() {
                return true;
            }
        }
        false
    }

    /// Calls `visit` with every injective homomorphism of the pattern into
    /// `host`, as an image array indexed by pattern vertex.
    pub fn for_each_embedding<F>(&self, host: &Graph, mut visit: F) -> ControlFlow<()>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        if self.pattern.n() > host.n() {
            return ControlFlow::Continue(());
        }
        let plan = &self.full;
        let mut images = [0usize; 64];
        let mut by_vertex = vec![0usize; self.pattern.n()];
        search_all(host, plan, 0, 0, &mut images, &mut |imgs| {
            for (i, &v) in plan.order.iter().enumerate() {
                by_vertex[v] = imgs[i];
            }
            visit(&by_vertex)
        })
    }
}

/// Finds matches for the non-isolated positions, then only checks that
/// enough unused vertices remain for the isolated ones.
fn search<F>(
    host: &Graph,
    plan: &Plan,
    depth: usize,
    used: VertexSet,
    images: &mut [usize; 64],
    isolated: usize,
    found: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    if depth == plan.matched_len {
        if (host.n() - depth) >= isolated {
            return found(&images[..depth]);
        }
        return ControlFlow::Continue(());
    }
    for x in members(candidates(host, plan, depth, used, images)) {
        images[depth] = x;
        search(host, plan, depth + 1, used | (1 << x), images, isolated, found)?;
    }
    ControlFlow::Continue(())
}

fn search_all<F>(
    host: &Graph,
    plan: &Plan,
    depth: usize,
    used: VertexSet,
    images: &mut [usize; 64],
    found: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    if depth == plan.order.len() {
        return found(&images[..depth]);
    }
    for x in members(candidates(host, plan, depth, used, images)) {
        images[depth] = x;
        search_all(host, plan, depth + 1, used | (1 << x), images, found)?;
    }
    ControlFlow::Continue(())
}

#[inline]
fn candidates(host: &Graph, plan: &Plan, depth: usize, used: VertexSet, images: &[usize; 64]) -> VertexSet {
    let mut cand = full_set(host.n()) & !used;
    for &p in &plan.back[depth] {
        cand &= host.neighbours(images[p]);
    }
    let need = plan.degree[depth];
    if need > 1 {
        let mut filtered = 0;
        for x in members(cand) {
            if host.degree(x) >= need {
                filtered |= 1 << x;
            }
        }
        cand = filtered;
    }
    cand
}

/// True iff `host` contains a (not necessarily induced) copy of `pattern`.
pub fn contains_subgraph(host: &Graph, pattern: &Graph) -> bool {
    Matcher::new(pattern).is_contained_in(host)
}

pub fn for_each_embedding<F>(host: &Graph, pattern: &Graph, visit: F) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    Matcher::new(pattern).for_each_embedding(host, visit)
}
