//! Ordered r-colourings of `0..n`, identified with complete r-partite graphs.

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{find_colouring, full_set, members, Graph, VertexSet};
use crate::scalar::{binomial, ExactScalar};
use crate::Count;

/// Classes `V_1, ..., V_r` (labelled, possibly empty) covering `0..n`.
///
/// Serialised as the length-`n` array of class indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    n: usize,
    classes: Vec<VertexSet>,
}

impl Partition {
    pub fn new(n: usize, classes: Vec<VertexSet>) -> Result<Self> {
        if classes.is_empty() {
            return Err(Error::Precondition("a partition needs at least one class".into()));
        }
        let mut seen: VertexSet = 0;
        for &c in &classes {
            if c & seen != 0 {
                return Err(Error::Precondition("partition classes overlap".into()));
            }
            seen |= c;
        }
        if n > 64 || seen != full_set(n) {
            return Err(Error::Precondition(format!("classes do not cover 0..{n} exactly")));
        }
        Ok(Partition { n, classes })
    }

    pub fn from_labels(labels: &[usize], r: usize) -> Result<Self> {
        let mut classes = vec![0; r];
        for (v, &c) in labels.iter().enumerate() {
            if c >= r {
                return Err(Error::Precondition(format!(
                    "label {c} of vertex {v} is not below r = {r}"
                )));
            }
            classes[c] |= 1 << v;
        }
        Partition::new(labels.len(), classes)
    }

    /// Class sizes as given, class `i` on the next block of consecutive vertices.
    pub fn from_sizes(sizes: &[usize]) -> Result<Self> {
        let mut labels = Vec::new();
        for (i, &s) in sizes.iter().enumerate() {
            labels.extend(std::iter::repeat_n(i, s));
        }
        Partition::from_labels(&labels, sizes.len())
    }

    /// Every ordered partition of `0..n` into `r` labelled classes.
    pub fn all(n: usize, r: usize) -> impl Iterator<Item = Partition> {
        let total = (r as u64).pow(n as u32);
        (0..total).map(move |mut code| {
            let mut labels = vec![0; n];
            for l in labels.iter_mut() {
                *l = (code % r as u64) as usize;
                code /= r as u64;
            }
            Partition::from_labels(&labels, r).expect("valid labels")
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.classes.len()
    }

    pub fn classes(&self) -> &[VertexSet] {
        &self.classes
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c.count_ones() as usize).collect()
    }

    /// Class sizes in non-increasing order, for reporting.
    pub fn unordered_sizes(&self) -> Vec<usize> {
        let mut s = self.class_sizes();
        s.sort_unstable_by(|a, b| b.cmp(a));
        s
    }

    pub fn class_of(&self, v: usize) -> usize {
        self.classes
            .iter()
            .position(|c| c >> v & 1 == 1)
            .expect("partition covers every vertex")
    }

    pub fn labels(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.class_of(v)).collect()
    }

    /// The complete r-partite graph `Π`.
    pub fn complete_partite(&self) -> Graph {
        let mut g = Graph::empty(self.n).expect("n <= 64");
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.class_of(u) != self.class_of(v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// `Π̄`: disjoint cliques on the classes.
    pub fn within_class_graph(&self) -> Graph {
        let mut g = Graph::empty(self.n).expect("n <= 64");
        for &c in &self.classes {
            let vs: Vec<usize> = members(c).collect();
            for (i, &u) in vs.iter().enumerate() {
                for &v in &vs[i + 1..] {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    pub fn is_within_class(&self, u: usize, v: usize) -> bool {
        self.classes.iter().any(|&c| c >> u & 1 == 1 && c >> v & 1 == 1)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.labels().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let labels = Vec::<usize>::deserialize(d)?;
        let r = labels.iter().max().map_or(1, |m| m + 1);
        Partition::from_labels(&labels, r).map_err(serde::de::Error::custom)
    }
}

/// Colouring witnessing `G ∈ G(r,k)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrkWitness {
    pub partition: Partition,
    pub mono_max_degree: usize,
}

/// `(1/r - γ)n <= |V_i| <= (1/r + γ)n` for every class.
pub fn is_balanced<T: ExactScalar>(p: &Partition, gamma: T) -> Result<bool> {
    let r = T::from_int(p.r() as i64);
    let inv_r = T::one() / r;
    if gamma <= T::zero() || gamma >= inv_r {
        return Err(Error::param("gamma", format!("need 0 < gamma < 1/{}", p.r())));
    }
    let n = T::from_int(p.n() as i64);
    let lo = (inv_r.clone() - gamma.clone()) * n.clone();
    let hi = (inv_r + gamma) * n;
    Ok(p.class_sizes().into_iter().all(|s| {
        let s = T::from_int(s as i64);
        lo <= s && s <= hi
    }))
}

/// `e(Π) = Σ_{i<j} |V_i||V_j|`.
pub fn partition_edge_count(p: &Partition) -> u64 {
    let sizes = p.class_sizes();
    let total: u64 = sizes.iter().map(|&s| s as u64).sum();
    let squares: u64 = sizes.iter().map(|&s| (s * s) as u64).sum();
    (total * total - squares) / 2
}

/// `e(Π)` together with the two edge-count bounds for balanced and
/// unbalanced colourings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeCountReport {
    pub edges: u64,
    pub balanced: bool,
    /// `e(Π) >= (1 - 2rγ)(1 - 1/r) n²/2`, checked for balanced `Π`.
    pub lower_bound_holds: Option<bool>,
    /// `e(Π) <= (1 - γ²/3) ex(n, K_{r+1})`, checked for unbalanced `Π`;
    /// only guaranteed for large `n`.
    pub upper_bound_holds: Option<bool>,
}

pub fn partition_edge_report<T: ExactScalar>(p: &Partition, gamma: T) -> Result<EdgeCountReport> {
    let balanced = is_balanced(p, gamma.clone())?;
    let edges = partition_edge_count(p);
    let e = T::from_int(edges as i64);
    let r = T::from_int(p.r() as i64);
    let n = T::from_int(p.n() as i64);
    let one = T::one();
    let two = T::from_int(2);
    let (mut lower, mut upper) = (None, None);
    if balanced {
        let bound = (one.clone() - two.clone() * r.clone() * gamma) * (one.clone() - one / r) * n.clone() * n / two;
        lower = Some(e >= bound);
    } else {
        let ex = T::from_int(ex_turan(p.n(), p.r()) as i64);
        let bound = (one - gamma.clone() * gamma / T::from_int(3)) * ex;
        upper = Some(e <= bound);
    }
    Ok(EdgeCountReport {
        edges,
        balanced,
        lower_bound_holds: lower,
        upper_bound_holds: upper,
    })
}

/// `G ∩ Π̄`: the edges of `G` inside classes.
pub fn mono_graph(g: &Graph, p: &Partition) -> Result<Graph> {
    if g.n() != p.n() {
        return Err(Error::Precondition(format!(
            "graph has {} vertices, partition covers {}",
            g.n(),
            p.n()
        )));
    }
    let mut b = Graph::empty(g.n())?;
    for &c in p.classes() {
        for u in members(c) {
            for v in members(g.neighbours(u) & c) {
                if u < v {
                    b.add_edge(u, v);
                }
            }
        }
    }
    Ok(b)
}

/// A colouring with `r` classes whose monochromatic graph has maximum
/// degree at most `k`, if one exists.
pub fn in_grk(g: &Graph, r: usize, k: usize) -> Option<GrkWitness> {
    if r == 0 {
        return None;
    }
    let labels = find_colouring(g, r, k)?;
    let labels: Vec<usize> = labels
        .into_iter()
        .map(|c| if c == usize::MAX { 0 } else { c })
        .collect();
    let partition = Partition::from_labels(&labels, r).expect("colours below r");
    let mono_max_degree = mono_graph(g, &partition).expect("same order").max_degree();
    Some(GrkWitness {
        partition,
        mono_max_degree,
    })
}

/// `|G_m(Π, B)| = C(e(Π), m - e(B))`: graphs with `m` edges whose
/// monochromatic part under `Π` is exactly `B`.
pub fn count_gpb(p: &Partition, b: &Graph, m: u64) -> Result<Count> {
    if b.n() != p.n() {
        return Err(Error::Precondition("B and Π have different orders".into()));
    }
    if let Some((u, v)) = b.edges().find(|&(u, v)| !p.is_within_class(u, v)) {
        return Err(Error::Precondition(format!("B has the cross-class edge ({u}, {v})")));
    }
    let eb = b.edge_count() as u64;
    if eb > m {
        return Ok(Count::default());
    }
    Ok(binomial(partition_edge_count(p), m - eb))
}

/// Balanced r-partition of `0..n`; the first `n mod r` classes get the
/// extra vertex.
pub fn turan_partition(n: usize, r: usize) -> Partition {
    assert!(r >= 1);
    let sizes: Vec<usize> = (0..r).map(|i| n / r + usize::from(i < n % r)).collect();
    Partition::from_sizes(&sizes).expect("sizes sum to n")
}

/// `ex(n, K_{r+1})`, the edge count of the Turán graph.
pub fn ex_turan(n: usize, r: usize) -> u64 {
    partition_edge_count(&turan_partition(n, r))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Density;
    use std::collections::HashMap;

    fn sizes(s: &[usize]) -> Partition {
        Partition::from_sizes(s).unwrap()
    }

    #[test]
    fn balanced_examples() {
        let g = Density::new(1, 10);
        assert!(is_balanced(&sizes(&[5, 5]), g).unwrap());
        assert!(!is_balanced(&sizes(&[3, 7]), g).unwrap());
        assert!(is_balanced(&sizes(&[5, 5, 5, 5]), Density::new(1, 1000)).unwrap());
        assert!(is_balanced(&sizes(&[5, 5]), Density::new(1, 2)).is_err());
        assert!(is_balanced(&sizes(&[5, 5]), Density::new(0, 1)).is_err());
        assert!(is_balanced(&sizes(&[5, 5]), 0.1f64).unwrap());
    }

    #[test]
    fn edge_count_examples() {
        assert_eq!(partition_edge_count(&sizes(&[2, 2])), 4);
        assert_eq!(partition_edge_count(&sizes(&[2, 2, 2])), 12);
        assert_eq!(partition_edge_count(&sizes(&[1, 4])), 4);
        let p = sizes(&[3, 4, 2]);
        assert_eq!(partition_edge_count(&p), p.complete_partite().edge_count() as u64);
    }

    #[test]
    fn edge_report_bounds() {
        let r = partition_edge_report(&sizes(&[10, 10, 10, 10]), Density::new(1, 80)).unwrap();
        assert_eq!(r.lower_bound_holds, Some(true));
        assert_eq!(r.upper_bound_holds, None);
        let r = partition_edge_report(&sizes(&[1, 39]), Density::new(1, 10)).unwrap();
        assert!(!r.balanced);
        assert_eq!(r.upper_bound_holds, Some(true));
    }

    #[test]
    fn mono_graph_examples() {
        let p = sizes(&[2, 3]);
        assert_eq!(mono_graph(&p.complete_partite(), &p).unwrap().edge_count(), 0);
        let b = mono_graph(&Graph::complete(5), &p).unwrap();
        assert_eq!(b, p.within_class_graph());
        assert_eq!(b.edge_count(), 1 + 3);
        // C5 coloured 0,1,0,1,1: only edge (3,4) is monochromatic
        let q = Partition::from_labels(&[0, 1, 0, 1, 1], 2).unwrap();
        assert_eq!(mono_graph(&Graph::cycle(5), &q).unwrap().edge_list().0, vec![(3, 4)]);
        assert!(mono_graph(&Graph::cycle(4), &q).is_err());
    }

    #[test]
    fn grk_examples() {
        let w = in_grk(&Graph::cycle(6), 2, 0).unwrap();
        assert_eq!(w.mono_max_degree, 0);
        let w = in_grk(&Graph::complete(4), 3, 1).unwrap();
        assert_eq!(w.mono_max_degree, 1);
        assert!(in_grk(&Graph::complete(4), 3, 0).is_none());
        let w = in_grk(&Graph::cycle(5), 2, 1).unwrap();
        assert_eq!(mono_graph(&Graph::cycle(5), &w.partition).unwrap().edge_count(), 1);
        assert!(in_grk(&Graph::complete(1), 0, 0).is_none());
    }

    #[test]
    fn grk_zero_is_colourability_on_small_graphs() {
        for n in 1..=7 {
            for g in crate::graph::catalog::all_graphs(n) {
                let chi = g.chromatic_number();
                for r in 1..=4 {
                    assert_eq!(in_grk(&g, r, 0).is_some(), chi <= r, "{g:?} r={r}");
                }
            }
        }
    }

    #[test]
    fn count_gpb_examples() {
        let p = sizes(&[2, 2]);
        let empty = Graph::empty(4).unwrap();
        assert_eq!(count_gpb(&p, &empty, 0).unwrap(), Count::from(1u32));
        let b = Graph::from_edges(4, &[(0, 1)]).unwrap();
        assert_eq!(count_gpb(&p, &b, 3).unwrap(), Count::from(6u32));
        assert_eq!(count_gpb(&p, &b, 5).unwrap(), Count::from(1u32));
        assert_eq!(count_gpb(&p, &b, 6).unwrap(), Count::from(0u32));
        let cross = Graph::from_edges(4, &[(0, 2)]).unwrap();
        assert!(count_gpb(&p, &cross, 3).is_err());
    }

    /// Groups all graphs on `0..n` by (mono graph, edge count) and compares
    /// each bucket size with the binomial formula.
    #[test]
    fn count_gpb_matches_enumeration() {
        for n in 1..=5usize {
            let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
            let np = pairs.len();
            for r in 2..=3 {
                for p in Partition::all(n, r) {
                    let mut buckets: HashMap<(Graph, usize), u64> = HashMap::new();
                    for mask in 0u32..(1 << np) {
                        let edges: Vec<_> = (0..np).filter(|&i| mask >> i & 1 == 1).map(|i| pairs[i]).collect();
                        let g = Graph::from_edges(n, &edges).unwrap();
                        *buckets.entry((mono_graph(&g, &p).unwrap(), edges.len())).or_default() += 1;
                    }
                    let within: Vec<_> = pairs
                        .iter()
                        .copied()
                        .filter(|&(u, v)| p.is_within_class(u, v))
                        .collect();
                    for bmask in 0u32..(1 << within.len()) {
                        let bedges: Vec<_> = (0..within.len())
                            .filter(|&i| bmask >> i & 1 == 1)
                            .map(|i| within[i])
                            .collect();
                        let b = Graph::from_edges(n, &bedges).unwrap();
                        for m in 0..=np {
                            let expected = buckets.get(&(b.clone(), m)).copied().unwrap_or(0);
                            assert_eq!(count_gpb(&p, &b, m as u64).unwrap(), Count::from(expected));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn turan_examples() {
        assert_eq!(ex_turan(4, 2), 4);
        assert_eq!(ex_turan(5, 2), 6);
        assert_eq!(ex_turan(6, 3), 12);
        assert_eq!(turan_partition(7, 3).class_sizes(), vec![3, 2, 2]);
    }

    #[test]
    fn serializes_as_labels() {
        let p = Partition::from_labels(&[0, 1, 1, 0, 2], 3).unwrap();
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, "[0,1,1,0,2]");
        let back: Partition = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
    }
}
