//! Colourings with bounded monochromatic degree.
//!
//! [`find_colouring`] searches for a map `V -> 0..colours` under which every
//! vertex has at most `max_mono_degree` neighbours of its own colour; with
//! `max_mono_degree = 0` that is a proper colouring. Components are solved
//! independently. Inside a component vertices are taken in a
//! connectivity-first order starting from a vertex of largest degree, and
//! colours are introduced in first-use order to remove the symmetry between
//! colour classes.

use super::{members, Graph, VertexSet};

/// A colouring satisfying the degree bound, or `None`.
pub fn find_colouring(g: &Graph, colours: usize, max_mono_degree: usize) -> Option<Vec<usize>> {
    let n = g.n();
    let mut colour = vec![usize::MAX; n];
    if n == 0 {
        return Some(colour);
    }
    if colours == 0 {
        return None;
    }
    for comp in g.components() {
        let order = search_order(g, comp);
        let mut state = Search {
            g,
            order: &order,
            colours,
            bound: max_mono_degree,
            colour: &mut colour,
            mono: vec![0; n],
            class: vec![0; colours.min(64)],
        };
        if !state.assign(0, 0) {
            return None;
        }
    }
    Some(colour)
}

pub fn is_colourable(g: &Graph, colours: usize) -> bool {
    find_colouring(g, colours, 0).is_some()
}

/// Exact chromatic number by increasing `k` up to the greedy bound.
///
/// 0 for the empty vertex set, 1 for nonempty edgeless graphs. The search is
/// exponential; patterns up to about 16 vertices are practical.
pub fn chromatic_number(g: &Graph) -> usize {
    if g.n() == 0 {
        return 0;
    }
    if g.edge_count() == 0 {
        return 1;
    }
    let upper = greedy_colour_count(g);
    (2..upper).find(|&k| is_colourable(g, k)).unwrap_or(upper)
}

/// Number of colours used by first-fit in descending-degree order.
pub fn greedy_colour_count(g: &Graph) -> usize {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut colour = vec![usize::MAX; g.n()];
    let mut used = 0;
    for &v in &order {
        let taken: u64 = members(g.neighbours(v))
            .filter(|&w| colour[w] != usize::MAX)
            .fold(0, |acc, w| acc | 1 << colour[w]);
        let c = (!taken).trailing_zeros() as usize;
        colour[v] = c;
        used = used.max(c + 1);
    }
    used
}

fn search_order(g: &Graph, comp: VertexSet) -> Vec<usize> {
    let mut order = Vec::with_capacity(comp.count_ones() as usize);
    let mut placed: VertexSet = 0;
    let start = members(comp)
        .max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v)))
        .expect("nonempty component");
    order.push(start);
    placed |= 1 << start;
    while placed != comp {
        let next = members(comp & !placed)
            .max_by_key(|&v| {
                (
                    (g.neighbours(v) & placed).count_ones(),
                    g.degree(v),
                    std::cmp::Reverse(v),
                )
            })
            .expect("component not exhausted");
        order.push(next);
        placed |= 1 << next;
    }
    order
}

struct Search<'a> {
    g: &'a Graph,
    order: &'a [usize],
    colours: usize,
    bound: usize,
    colour: &'a mut Vec<usize>,
    mono: Vec<usize>,
    class: Vec<VertexSet>,
}

impl Search<'_> {
    fn assign(&mut self, depth: usize, used: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let v = self.order[depth];
        let limit = self.colours.min(used + 1);
        for c in 0..limit {
            let same = self.g.neighbours(v) & self.class[c];
            if same.count_ones() as usize > self.bound || members(same).any(|w| self.mono[w] + 1 > self.bound) {
                continue;
            }
            self.colour[v] = c;
            self.class[c] |= 1 << v;
            self.mono[v] = same.count_ones() as usize;
            for w in members(same) {
                self.mono[w] += 1;
            }
            if self.assign(depth + 1, used.max(c + 1)) {
                return true;
            }
            for w in members(same) {
                self.mono[w] -= 1;
            }
            self.mono[v] = 0;
            self.class[c] &= !(1 << v);
            self.colour[v] = usize::MAX;
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_force_chromatic(g: &Graph) -> usize {
        let n = g.n();
        if n == 0 {
            return 0;
        }
        for k in 1..=n {
            let total = k.pow(n as u32);
            for code in 0..total {
                let mut c = vec![0; n];
                let mut x = code;
                for slot in c.iter_mut() {
                    *slot = x % k;
                    x /= k;
                }
                if g.edges().all(|(u, v)| c[u] != c[v]) {
                    return k;
                }
            }
        }
        n
    }

    #[test]
    fn examples() {
        for r in 1..=3 {
            assert_eq!(chromatic_number(&Graph::complete(r + 1)), r + 1);
        }
        assert_eq!(chromatic_number(&Graph::cycle(5)), 3);
        assert_eq!(chromatic_number(&Graph::complete_multipartite(&[1, 2, 3])), 3);
        assert_eq!(chromatic_number(&Graph::empty(0).unwrap()), 0);
        assert_eq!(chromatic_number(&Graph::empty(4).unwrap()), 1);
        assert_eq!(chromatic_number(&Graph::petersen()), 3);
    }

    #[test]
    fn agrees_with_exhaustive_search_on_small_graphs() {
        for g in crate::graph::catalog::all_graphs(7) {
            assert_eq!(chromatic_number(&g), brute_force_chromatic(&g), "{g:?}");
        }
    }

    #[test]
    fn mono_degree_bound() {
        // K4 with three colours needs one monochromatic edge
        assert!(find_colouring(&Graph::complete(4), 3, 0).is_none());
        let c = find_colouring(&Graph::complete(4), 3, 1).unwrap();
        let k4 = Graph::complete(4);
        let mono: Vec<_> = k4.edges().filter(|&(u, v)| c[u] == c[v]).collect();
        assert!(!mono.is_empty());
        for v in 0..4 {
            assert!(mono.iter().filter(|&&(a, b)| a == v || b == v).count() <= 1);
        }
        // C5 with two colours and one monochromatic edge
        assert!(find_colouring(&Graph::cycle(5), 2, 1).is_some());
        assert!(find_colouring(&Graph::cycle(5), 2, 0).is_none());
    }
}
