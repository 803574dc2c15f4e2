//! Isomorphism-class catalogues of small graphs, used to run exhaustive
//! checks over "all graphs on at most n vertices".

use std::collections::HashSet;

use super::Graph;

/// Largest order for which canonical codes fit in a `u64`.
pub const MAX_CATALOG_ORDER: usize = 11;

fn pair_bit(i: usize, j: usize) -> u32 {
    let (a, b) = if i < j { (i, j) } else { (j, i) };
    (b * (b - 1) / 2 + a) as u32
}

/// Canonical code: the maximum upper-triangle word over all relabellings
/// that list vertices by non-increasing degree.
pub fn canonical_code(g: &Graph) -> u64 {
    let n = g.n();
    assert!(n <= MAX_CATALOG_ORDER, "canonical code needs n <= {MAX_CATALOG_ORDER}");
    let mut verts: Vec<usize> = (0..n).collect();
    verts.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    // groups of equal degree, permuted independently
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for &v in &verts {
        match groups.last_mut() {
            Some(grp) if g.degree(grp[0]) == g.degree(v) => grp.push(v),
            _ => groups.push(vec![v]),
        }
    }
    let mut best = 0u64;
    let mut order = Vec::with_capacity(n);
    permute_groups(g, &mut groups, 0, &mut order, &mut best);
    best
}

fn permute_groups(g: &Graph, groups: &mut [Vec<usize>], gi: usize, order: &mut Vec<usize>, best: &mut u64) {
    if gi == groups.len() {
        let mut code = 0u64;
        for j in 1..order.len() {
            for i in 0..j {
                if g.has_edge(order[i], order[j]) {
                    code |= 1 << pair_bit(i, j);
                }
            }
        }
        *best = (*best).max(code);
        return;
    }
    let len = groups[gi].len();
    heap_permutations(&mut groups[gi].clone(), len, &mut |perm| {
        let mark = order.len();
        order.extend_from_slice(perm);
        permute_groups(g, groups, gi + 1, order, best);
        order.truncate(mark);
    });
}

fn heap_permutations(items: &mut [usize], k: usize, visit: &mut dyn FnMut(&[usize])) {
    if k <= 1 {
        visit(items);
        return;
    }
    for i in 0..k {
        heap_permutations(items, k - 1, visit);
        if k.is_multiple_of(2) {
            items.swap(i, k - 1);
        } else {
            items.swap(0, k - 1);
        }
    }
}

/// One representative per isomorphism class of graphs on exactly `n`
/// vertices, built by adding a vertex to every class on `n - 1` vertices.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= 8, "catalogue generation is meant for n <= 8");
    let mut level = vec![Graph::empty(0).expect("empty")];
    for order in 1..=n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for g in &level {
            for nbrs in 0u64..(1 << (order - 1)) {
                let mut h = Graph::empty(order).expect("fits");
                for (u, v) in g.edges() {
                    h.add_edge(u, v);
                }
                for w in super::members(nbrs) {
                    h.add_edge(w, order - 1);
                }
                if seen.insert(canonical_code(&h)) {
                    next.push(h);
                }
            }
        }
        level = next;
    }
    level
}

pub fn connected_graphs(n: usize) -> Vec<Graph> {
    all_graphs(n).into_iter().filter(Graph::is_connected).collect()
}
