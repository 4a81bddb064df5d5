use super::poset::RankedPoset;
use crate::error::{AduError, Result};
use serde::Serialize;
use serde_json::json;
use std::collections::{BTreeSet, VecDeque};

/// Graph on the top fiber of a polar poset; two vertices are adjacent when they
/// are distinct and cover a common element.
#[derive(Clone, Debug, PartialEq)]
pub struct DualPolarGraph {
    pub family: String,
    pub params: serde_json::Value,
    /// Keys of the vertices, in top-fiber order.
    pub keys: Vec<String>,
    pub adjacency: Vec<Vec<usize>>,
    pub distances: Vec<Vec<usize>>,
}

impl DualPolarGraph {
    pub fn from_poset(p: &RankedPoset) -> Result<Self> {
        let top = p.fibers.last().filter(|f| !f.is_empty()).ok_or_else(|| {
            AduError::Unsupported("poset has an empty top fiber".into())
        })?;
        let local: std::collections::HashMap<usize, usize> = top.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        let mut above: std::collections::HashMap<usize, Vec<usize>> = std::collections::HashMap::new();
        for &(lo, hi) in &p.covers {
            if let Some(&v) = local.get(&hi) {
                above.entry(lo).or_default().push(v);
            }
        }
        let n = top.len();
        let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
        for vs in above.values() {
            for &a in vs {
                for &b in vs {
                    if a != b {
                        adj[a].insert(b);
                    }
                }
            }
        }
        let adjacency: Vec<Vec<usize>> = adj.into_iter().map(|s| s.into_iter().collect()).collect();
        let mut distances = Vec::with_capacity(n);
        for src in 0..n {
            let mut d = vec![usize::MAX; n];
            d[src] = 0;
            let mut queue = VecDeque::from([src]);
            while let Some(u) = queue.pop_front() {
                for &v in &adjacency[u] {
                    if d[v] == usize::MAX {
                        d[v] = d[u] + 1;
                        queue.push_back(v);
                    }
                }
            }
            if d.contains(&usize::MAX) {
                return Err(AduError::Disconnected);
            }
            distances.push(d);
        }
        let keys = top.iter().map(|&x| p.elements[x].clone()).collect();
        Ok(Self { family: p.family.clone(), params: p.params.clone(), keys, adjacency, distances })
    }

    pub fn len(&self) -> usize {
        self.keys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.keys.is_empty()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn diameter(&self) -> usize {
        self.distances.iter().flatten().copied().max().unwrap_or(0)
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.len()).flat_map(|a| self.adjacency[a].iter().filter(move |&&b| a < b).map(move |&b| (a, b))).collect()
    }

    /// Betweenness order seen from `x`: `y <= z` iff `d(x,y) + d(y,z) = d(x,z)`.
    pub fn leq(&self, x: usize, y: usize, z: usize) -> bool {
        self.distances[x][y] + self.distances[y][z] == self.distances[x][z]
    }

    /// Number of vertices at each distance from `x`.
    pub fn distance_distribution(&self, x: usize) -> Vec<usize> {
        let mut out = vec![0; self.diameter() + 1];
        for &d in &self.distances[x] {
            out[d] += 1;
        }
        out
    }
}

/// The top fiber ordered by betweenness from base vertex `x`. Fibers are
/// distances from `x`; covers are adjacent pairs one step further from `x`.
pub fn build_polar_top(g: &DualPolarGraph, x: usize) -> Result<RankedPoset> {
    if x >= g.len() {
        return Err(AduError::Unsupported(format!("base vertex {x} out of range (graph has {})", g.len())));
    }
    let d = &g.distances[x];
    let items = g.keys.iter().zip(d).map(|(k, &r)| (k.clone(), r)).collect();
    let covers = g.edges().into_iter().flat_map(|(a, b)| [(a, b), (b, a)]).filter(|&(a, b)| d[b] == d[a] + 1);
    let mut params = g.params.clone();
    if let Some(obj) = params.as_object_mut() {
        obj.insert("base_vertex".into(), json!(x));
    }
    RankedPoset::from_parts("polar_top", params, items, covers)
}

#[derive(Serialize)]
struct GraphJson<'a> {
    #[serde(flatten)]
    poset: &'a RankedPoset,
    edges: Vec<(usize, usize)>,
    base_vertex: usize,
    distances: &'a [Vec<usize>],
}

/// Poset JSON extended with `edges`, `base_vertex` and `distances`. Edge and
/// distance indices refer to the graph's vertex order (the polar top fiber).
pub fn graph_json(g: &DualPolarGraph, top: &RankedPoset, x: usize) -> String {
    let doc = GraphJson { poset: top, edges: g.edges(), base_vertex: x, distances: &g.distances };
    serde_json::to_string_pretty(&doc).expect("graph serializes")
}

#[cfg(test)]
mod tests {
    use super::super::polar::{build_polar, PolarKind};
    use super::*;

    fn quadrangle() -> DualPolarGraph {
        DualPolarGraph::from_poset(&build_polar(2, 2, PolarKind::PARABOLIC).unwrap()).unwrap()
    }

    #[test]
    fn parabolic_dual_polar_graph() {
        let g = quadrangle();
        assert_eq!(g.len(), 15);
        assert!((0..15).all(|v| g.degree(v) == 6));
        assert_eq!(g.diameter(), 2);
        for x in 0..15 {
            assert_eq!(g.distance_distribution(x), vec![1, 6, 8]);
        }
    }

    #[test]
    fn polar_top_fibers_for_every_base() {
        let g = quadrangle();
        for x in 0..g.len() {
            let p = build_polar_top(&g, x).unwrap();
            assert_eq!(p.fiber_sizes(), vec![1, 6, 8]);
            assert_eq!(p.fibers[0].len(), 1);
        }
    }

    #[test]
    fn betweenness_is_transitive() {
        let g = quadrangle();
        let x = 0;
        for a in 0..g.len() {
            assert!(g.leq(x, a, a) && g.leq(x, x, a));
            for b in 0..g.len() {
                for c in 0..g.len() {
                    if g.leq(x, a, b) && g.leq(x, b, c) {
                        assert!(g.leq(x, a, c));
                    }
                }
            }
        }
    }

    #[test]
    fn single_vertex_is_edgeless() {
        let p = build_polar(2, 0, PolarKind::HYPERBOLIC).unwrap();
        let g = DualPolarGraph::from_poset(&p).unwrap();
        assert_eq!(g.len(), 1);
        assert!(g.edges().is_empty());
    }
}
