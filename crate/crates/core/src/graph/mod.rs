//! Weighted bipartite graphs, the dangling-edge extension, star states,
//! and the `G x K_2` doubling.
//!
//! All base edges are oriented from part `A` towards part `B`; the dangling
//! edge `ss'` is oriented `s -> s'` and `t't` is oriented `t' -> t`. Under
//! this convention every star state has nonnegative coefficients. Edge ids
//! are dense integers assigned at construction: base edges first in input
//! order, then `ss'`, then `t't`.

mod flow;
mod vector;

pub use flow::Flow;
pub use vector::EdgeVector;

use std::collections::HashMap;

use rand::seq::IndexedRandom;
use rand::Rng;

use crate::error::Error;
use crate::Result;

/// Dense edge index into the walk space.
pub type EdgeId = usize;

/// Reserved name of the dangling vertex attached to the start.
pub const S_PRIME: &str = "s'";
/// Reserved name of the dangling vertex attached to the marked vertex.
pub const T_PRIME: &str = "t'";

/// Bipartition class of a vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Part {
    A,
    B,
}

impl Part {
    fn letter(self) -> char {
        match self {
            Part::A => 'A',
            Part::B => 'B',
        }
    }
}

#[derive(Clone, Debug)]
struct Edge {
    a: usize,
    b: usize,
    weight: f64,
}

/// A weighted bipartite graph with strictly positive edge weights.
#[derive(Clone, Debug)]
pub struct BipartiteGraph {
    a_names: Vec<String>,
    b_names: Vec<String>,
    index: HashMap<String, (Part, usize)>,
    edges: Vec<Edge>,
    a_incident: Vec<Vec<EdgeId>>,
    b_incident: Vec<Vec<EdgeId>>,
}

impl BipartiteGraph {
    pub fn new(
        a_names: Vec<String>,
        b_names: Vec<String>,
        edges: &[(String, String, f64)],
    ) -> Result<Self> {
        let mut index = HashMap::new();
        for (part, names) in [(Part::A, &a_names), (Part::B, &b_names)] {
            for (i, name) in names.iter().enumerate() {
                if name == S_PRIME || name == T_PRIME {
                    return Err(Error::domain(format!("vertex name `{name}` is reserved")));
                }
                if index.insert(name.clone(), (part, i)).is_some() {
                    return Err(Error::domain(format!("duplicate vertex name `{name}`")));
                }
            }
        }
        let mut graph = BipartiteGraph {
            a_incident: vec![Vec::new(); a_names.len()],
            b_incident: vec![Vec::new(); b_names.len()],
            a_names,
            b_names,
            index,
            edges: Vec::with_capacity(edges.len()),
        };
        let mut seen = HashMap::new();
        for (u, v, w) in edges {
            let a = graph.require(u, Part::A)?;
            let b = graph.require(v, Part::B)?;
            if *w <= 0.0 || !w.is_finite() {
                return Err(Error::NonpositiveWeight(u.clone(), v.clone(), *w));
            }
            if seen.insert((a, b), ()).is_some() {
                return Err(Error::DuplicateEdge(u.clone(), v.clone()));
            }
            let id = graph.edges.len();
            graph.edges.push(Edge { a, b, weight: *w });
            graph.a_incident[a].push(id);
            graph.b_incident[b].push(id);
        }
        Ok(graph)
    }

    /// Test-friendly constructor from string slices.
    pub fn from_strs(a: &[&str], b: &[&str], edges: &[(&str, &str, f64)]) -> Result<Self> {
        BipartiteGraph::new(
            a.iter().map(|s| s.to_string()).collect(),
            b.iter().map(|s| s.to_string()).collect(),
            &edges
                .iter()
                .map(|(u, v, w)| (u.to_string(), v.to_string(), *w))
                .collect::<Vec<_>>(),
        )
    }

    fn require(&self, name: &str, part: Part) -> Result<usize> {
        match self.index.get(name) {
            Some(&(p, i)) if p == part => Ok(i),
            Some(_) => Err(Error::SideMismatch {
                vertex: name.to_string(),
                expected: part.letter(),
            }),
            None => Err(Error::UnknownVertex(name.to_string())),
        }
    }

    pub fn a_names(&self) -> &[String] {
        &self.a_names
    }

    pub fn b_names(&self) -> &[String] {
        &self.b_names
    }

    pub fn vertex_count(&self) -> usize {
        self.a_names.len() + self.b_names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn part_of(&self, name: &str) -> Option<Part> {
        self.index.get(name).map(|&(p, _)| p)
    }

    /// Endpoint names and weight of a base edge, in `(A, B, weight)` order.
    pub fn edge(&self, e: EdgeId) -> (&str, &str, f64) {
        let edge = &self.edges[e];
        (
            &self.a_names[edge.a],
            &self.b_names[edge.b],
            edge.weight,
        )
    }

    pub fn weight(&self, e: EdgeId) -> f64 {
        self.edges[e].weight
    }

    /// Ids of the base edges incident to a vertex.
    pub fn incident(&self, name: &str) -> Result<&[EdgeId]> {
        match self.index.get(name) {
            Some(&(Part::A, i)) => Ok(&self.a_incident[i]),
            Some(&(Part::B, i)) => Ok(&self.b_incident[i]),
            None => Err(Error::UnknownVertex(name.to_string())),
        }
    }

    pub fn degree(&self, name: &str) -> Result<usize> {
        Ok(self.incident(name)?.len())
    }

    /// Id of the base edge between two vertices, if present (either order).
    pub fn edge_between(&self, u: &str, v: &str) -> Option<EdgeId> {
        let (&(pu, iu), &(pv, iv)) = (self.index.get(u)?, self.index.get(v)?);
        let (a, b) = match (pu, pv) {
            (Part::A, Part::B) => (iu, iv),
            (Part::B, Part::A) => (iv, iu),
            _ => return None,
        };
        self.a_incident[a]
            .iter()
            .copied()
            .find(|&e| self.edges[e].b == b)
    }

    /// Total weight of the base edges.
    pub fn total_weight(&self) -> f64 {
        self.edges.iter().map(|e| e.weight).sum()
    }

    /// Scales every base edge weight by `alpha > 0`.
    pub fn reweight(&self, alpha: f64) -> Result<Self> {
        if alpha <= 0.0 || !alpha.is_finite() {
            return Err(Error::domain(format!(
                "reweighting factor must be positive, got {alpha}"
            )));
        }
        let mut scaled = self.clone();
        for e in &mut scaled.edges {
            e.weight *= alpha;
        }
        Ok(scaled)
    }

    /// Connected components of the base graph, as sorted name lists.
    pub fn components(&self) -> Vec<Vec<String>> {
        let n = self.vertex_count();
        let mut comp = vec![usize::MAX; n];
        let mut out = Vec::new();
        for start in 0..n {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut stack = vec![start];
            let mut members = Vec::new();
            comp[start] = id;
            while let Some(v) = stack.pop() {
                members.push(self.global_name(v).to_string());
                for &e in self.global_incident(v) {
                    let other = self.global_other(e, v);
                    if comp[other] == usize::MAX {
                        comp[other] = id;
                        stack.push(other);
                    }
                }
            }
            members.sort();
            out.push(members);
        }
        out
    }

    // Global vertex ids: A vertices first, then B.
    pub(crate) fn global_id(&self, name: &str) -> Option<usize> {
        self.index.get(name).map(|&(p, i)| match p {
            Part::A => i,
            Part::B => self.a_names.len() + i,
        })
    }

    pub(crate) fn global_name(&self, v: usize) -> &str {
        if v < self.a_names.len() {
            &self.a_names[v]
        } else {
            &self.b_names[v - self.a_names.len()]
        }
    }

    pub(crate) fn global_incident(&self, v: usize) -> &[EdgeId] {
        if v < self.a_names.len() {
            &self.a_incident[v]
        } else {
            &self.b_incident[v - self.a_names.len()]
        }
    }

    pub(crate) fn global_endpoints(&self, e: EdgeId) -> (usize, usize) {
        let edge = &self.edges[e];
        (edge.a, self.a_names.len() + edge.b)
    }

    fn global_other(&self, e: EdgeId, v: usize) -> usize {
        let (a, b) = self.global_endpoints(e);
        if a == v {
            b
        } else {
            a
        }
    }

    /// Attaches the dangling edges `ss'` and `t't` and fixes the orientation
    /// convention of the walk space.
    pub fn extend(&self, s: &str, t: &str, w0: f64, w_end: f64) -> Result<ExtendedGraph> {
        let s = self.require(s, Part::A)?;
        let t = self.require(t, Part::B)?;
        if w0 <= 0.0 || w_end <= 0.0 {
            return Err(Error::domain(format!(
                "dangling weights must be positive, got {w0} and {w_end}"
            )));
        }
        Ok(ExtendedGraph {
            base: self.clone(),
            s,
            t,
            w0,
            w_end,
        })
    }
}

/// A bipartite graph with the two dangling edges attached.
#[derive(Clone, Debug)]
pub struct ExtendedGraph {
    base: BipartiteGraph,
    s: usize,
    t: usize,
    w0: f64,
    w_end: f64,
}

impl ExtendedGraph {
    pub fn base(&self) -> &BipartiteGraph {
        &self.base
    }

    pub fn s_name(&self) -> &str {
        &self.base.a_names[self.s]
    }

    pub fn t_name(&self) -> &str {
        &self.base.b_names[self.t]
    }

    pub fn w0(&self) -> f64 {
        self.w0
    }

    pub fn w_end(&self) -> f64 {
        self.w_end
    }

    /// Dimension of the walk space `C^{E ∪ E'}`.
    pub fn dim(&self) -> usize {
        self.base.edges.len() + 2
    }

    /// Edge id of `ss'`.
    pub fn start_edge(&self) -> EdgeId {
        self.base.edges.len()
    }

    /// Edge id of `t't`.
    pub fn target_edge(&self) -> EdgeId {
        self.base.edges.len() + 1
    }

    /// Weight of any edge of the extended graph, dangling edges included.
    pub fn edge_weight(&self, e: EdgeId) -> f64 {
        let m = self.base.edges.len();
        match e {
            _ if e < m => self.base.edges[e].weight,
            _ if e == m => self.w0,
            _ => self.w_end,
        }
    }

    /// The star state `psi_u = sum_{e ~ u} sqrt(w_e) |e>`.
    ///
    /// Includes the dangling edges for `u ∈ {s, t}`. Every coefficient is
    /// nonnegative because of the fixed orientation.
    pub fn star_state(&self, u: &str) -> Result<EdgeVector> {
        if u == S_PRIME || u == T_PRIME {
            return Err(Error::NotWalkVertex(u.to_string()));
        }
        let &(part, i) = self
            .base
            .index
            .get(u)
            .ok_or_else(|| Error::UnknownVertex(u.to_string()))?;
        let mut psi = EdgeVector::zeros(self.dim());
        let incident = match part {
            Part::A => &self.base.a_incident[i],
            Part::B => &self.base.b_incident[i],
        };
        for &e in incident {
            psi.set_real(e, self.base.edges[e].weight.sqrt());
        }
        if part == Part::A && i == self.s {
            psi.set_real(self.start_edge(), self.w0.sqrt());
        }
        if part == Part::B && i == self.t {
            psi.set_real(self.target_edge(), self.w_end.sqrt());
        }
        Ok(psi)
    }

    /// Amplitude of `x` on the edge from `u` to `v`, negated when `(u, v)`
    /// opposes the stored orientation.
    pub fn oriented_amplitude(
        &self,
        x: &EdgeVector,
        u: &str,
        v: &str,
    ) -> Result<num_complex::Complex64> {
        let m = self.base.edges.len();
        let (e, reversed) = if u == self.s_name() && v == S_PRIME {
            (m, false)
        } else if u == S_PRIME && v == self.s_name() {
            (m, true)
        } else if u == T_PRIME && v == self.t_name() {
            (m + 1, false)
        } else if u == self.t_name() && v == T_PRIME {
            (m + 1, true)
        } else {
            let e = self
                .base
                .edge_between(u, v)
                .ok_or_else(|| Error::domain(format!("no edge between `{u}` and `{v}`")))?;
            let reversed = self.base.part_of(u) == Some(Part::B);
            (e, reversed)
        };
        let amp = x.amplitude(e);
        Ok(if reversed { -amp } else { amp })
    }
}

/// A plain undirected weighted graph; input type of [`tensor_k2`].
#[derive(Clone, Debug)]
pub struct Graph {
    names: Vec<String>,
    index: HashMap<String, usize>,
    edges: Vec<(usize, usize, f64)>,
}

impl Graph {
    pub fn new(names: Vec<String>, edges: &[(String, String, f64)]) -> Result<Self> {
        let mut index = HashMap::new();
        for (i, name) in names.iter().enumerate() {
            if index.insert(name.clone(), i).is_some() {
                return Err(Error::domain(format!("duplicate vertex name `{name}`")));
            }
        }
        let mut seen = HashMap::new();
        let mut out = Vec::with_capacity(edges.len());
        for (u, v, w) in edges {
            let iu = *index
                .get(u)
                .ok_or_else(|| Error::UnknownVertex(u.clone()))?;
            let iv = *index
                .get(v)
                .ok_or_else(|| Error::UnknownVertex(v.clone()))?;
            if iu == iv {
                return Err(Error::domain(format!("self-loop on `{u}`")));
            }
            if *w <= 0.0 || !w.is_finite() {
                return Err(Error::NonpositiveWeight(u.clone(), v.clone(), *w));
            }
            let key = (iu.min(iv), iu.max(iv));
            if seen.insert(key, ()).is_some() {
                return Err(Error::DuplicateEdge(u.clone(), v.clone()));
            }
            out.push((iu, iv, *w));
        }
        Ok(Graph {
            names,
            index,
            edges: out,
        })
    }

    pub fn from_strs(names: &[&str], edges: &[(&str, &str, f64)]) -> Result<Self> {
        Graph::new(
            names.iter().map(|s| s.to_string()).collect(),
            &edges
                .iter()
                .map(|(u, v, w)| (u.to_string(), v.to_string(), *w))
                .collect::<Vec<_>>(),
        )
    }

    pub fn from_bipartite(g: &BipartiteGraph) -> Self {
        let names: Vec<String> = g
            .a_names
            .iter()
            .chain(g.b_names.iter())
            .cloned()
            .collect();
        let edges: Vec<(String, String, f64)> = (0..g.edge_count())
            .map(|e| {
                let (a, b, w) = g.edge(e);
                (a.to_string(), b.to_string(), w)
            })
            .collect();
        Graph::new(names, &edges).expect("bipartite graph is a valid graph")
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }
}

/// Output of [`tensor_k2`]: the doubled graph plus the recorded start vertex.
#[derive(Clone, Debug)]
pub struct Doubled {
    pub graph: BipartiteGraph,
    pub start: String,
}

/// Name of a doubled vertex `(v, side)`.
pub fn doubled_name(v: &str, side: usize) -> String {
    format!("{v}|{side}")
}

/// The tensor product `G x K_2`, bipartite with parts `V x {0}` and
/// `V x {1}` regardless of whether the input is bipartite.
pub fn tensor_k2(g: &Graph, s: &str) -> Result<Doubled> {
    if !g.index.contains_key(s) {
        return Err(Error::UnknownVertex(s.to_string()));
    }
    let a: Vec<String> = g.names.iter().map(|v| doubled_name(v, 0)).collect();
    let b: Vec<String> = g.names.iter().map(|v| doubled_name(v, 1)).collect();
    let mut edges = Vec::with_capacity(2 * g.edges.len());
    for &(u, v, w) in &g.edges {
        edges.push((a[u].clone(), b[v].clone(), w));
        edges.push((a[v].clone(), b[u].clone(), w));
    }
    Ok(Doubled {
        graph: BipartiteGraph::new(a, b, &edges)?,
        start: doubled_name(s, 0),
    })
}

/// A random connected bipartite graph: a random spanning tree plus `extra`
/// additional edges, with weights drawn from `[0.5, 2.5)`.
pub fn random_connected_bipartite(
    na: usize,
    nb: usize,
    extra: usize,
    rng: &mut impl Rng,
) -> BipartiteGraph {
    assert!(na >= 1 && nb >= 1);
    let a_names: Vec<String> = (0..na).map(|i| format!("a{i}")).collect();
    let b_names: Vec<String> = (0..nb).map(|i| format!("b{i}")).collect();
    let mut edges: Vec<(String, String, f64)> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    let mut placed_a = vec![0usize];
    let mut placed_b: Vec<usize> = Vec::new();
    // Alternate new vertices between the two sides so both stay reachable.
    let mut next_a = 1;
    let mut next_b = 0;
    while next_a < na || next_b < nb {
        if next_b < nb && (next_b <= next_a || next_a >= na) {
            let partner = *placed_a.choose(rng).expect("nonempty");
            seen.insert((partner, next_b));
            edges.push((
                a_names[partner].clone(),
                b_names[next_b].clone(),
                rng.random_range(0.5..2.5),
            ));
            placed_b.push(next_b);
            next_b += 1;
        } else {
            let partner = *placed_b.choose(rng).expect("tree order places b first");
            seen.insert((next_a, partner));
            edges.push((
                a_names[next_a].clone(),
                b_names[partner].clone(),
                rng.random_range(0.5..2.5),
            ));
            placed_a.push(next_a);
            next_a += 1;
        }
    }
    let mut budget = 20 * extra + 20;
    let mut added = 0;
    while added < extra && budget > 0 {
        budget -= 1;
        let i = rng.random_range(0..na);
        let j = rng.random_range(0..nb);
        if seen.insert((i, j)) {
            edges.push((
                a_names[i].clone(),
                b_names[j].clone(),
                rng.random_range(0.5..2.5),
            ));
            added += 1;
        }
    }
    BipartiteGraph::new(a_names, b_names, &edges).expect("generated edges are valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::welded::WeldedTree;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn extend_counts_welded_depth_3() {
        let tree = WeldedTree::generate(3, 9).unwrap();
        let g = tree.graph().extend(tree.s_name(), tree.t_name(), 1.0, 1.0).unwrap();
        assert_eq!(g.base().edge_count(), 44);
        assert_eq!(g.dim(), 46);
    }

    #[test]
    fn extend_single_edge_is_three_edge_path() {
        let g = BipartiteGraph::from_strs(&["a"], &["b"], &[("a", "b", 1.0)]).unwrap();
        let ext = g.extend("a", "b", 1.0, 1.0).unwrap();
        assert_eq!(ext.dim(), 3);
        assert_eq!(ext.start_edge(), 1);
        assert_eq!(ext.target_edge(), 2);
    }

    #[test]
    fn extend_rejects_wrong_side_and_bad_weights() {
        let g = BipartiteGraph::from_strs(&["a"], &["b"], &[("a", "b", 1.0)]).unwrap();
        assert!(matches!(
            g.extend("b", "b", 1.0, 1.0),
            Err(Error::SideMismatch { .. })
        ));
        assert!(matches!(
            g.extend("a", "a", 1.0, 1.0),
            Err(Error::SideMismatch { .. })
        ));
        assert!(matches!(
            g.extend("x", "b", 1.0, 1.0),
            Err(Error::UnknownVertex(_))
        ));
        assert!(g.extend("a", "b", 0.0, 1.0).is_err());
    }

    #[test]
    fn constructor_rejects_duplicates_and_bad_weights() {
        assert!(matches!(
            BipartiteGraph::from_strs(&["a"], &["b"], &[("a", "b", 1.0), ("a", "b", 2.0)]),
            Err(Error::DuplicateEdge(_, _))
        ));
        assert!(matches!(
            BipartiteGraph::from_strs(&["a"], &["b"], &[("a", "b", -1.0)]),
            Err(Error::NonpositiveWeight(_, _, _))
        ));
        assert!(BipartiteGraph::from_strs(&["a", "a"], &["b"], &[]).is_err());
        assert!(BipartiteGraph::from_strs(&["s'"], &["b"], &[]).is_err());
    }

    #[test]
    fn star_state_examples() {
        // Degree-1 vertex in a unit-weight path: a single basis edge.
        let g = BipartiteGraph::from_strs(
            &["a0", "a1"],
            &["b0"],
            &[("a0", "b0", 1.0), ("a1", "b0", 1.0)],
        )
        .unwrap();
        let ext = g.extend("a0", "b0", 1.0, 1.0).unwrap();
        let psi = ext.star_state("a1").unwrap();
        assert!((psi.norm() - 1.0).abs() < 1e-15);
        assert_eq!(psi.amplitude(1).re, 1.0);

        // Incident weights {2, 4}: amplitudes sqrt(2) and 2, norm² = 6.
        let g = BipartiteGraph::from_strs(
            &["a0"],
            &["b0", "b1"],
            &[("a0", "b0", 2.0), ("a0", "b1", 4.0)],
        )
        .unwrap();
        let ext = g.extend("a0", "b0", 1.0, 1.0).unwrap();
        let psi = ext.star_state("a0").unwrap();
        assert!((psi.amplitude(0).re - 2.0_f64.sqrt()).abs() < 1e-15);
        assert!((psi.amplitude(1).re - 2.0).abs() < 1e-15);
        // a0 is the start vertex, so the dangling edge contributes 1 more.
        assert!((psi.norm_squared() - 7.0).abs() < 1e-15);

        assert!(matches!(
            ext.star_state(S_PRIME),
            Err(Error::NotWalkVertex(_))
        ));
    }

    #[test]
    fn star_state_at_welded_start() {
        let tree = WeldedTree::generate(3, 5).unwrap();
        let ext = tree.extended(1.0, 1.0).unwrap();
        let psi = ext.star_state(ext.s_name()).unwrap();
        assert!((psi.norm_squared() - 3.0).abs() < 1e-15);
        assert_eq!(psi.amplitude(ext.start_edge()).re, 1.0);
        let support: Vec<_> = (0..ext.dim()).filter(|&e| psi.amplitude(e).re != 0.0).collect();
        assert_eq!(support.len(), 3);
    }

    #[test]
    fn total_weight_examples() {
        let tree = WeldedTree::generate(3, 2).unwrap();
        assert_eq!(tree.graph().total_weight(), 44.0);
        let empty = BipartiteGraph::from_strs(&["a"], &["b"], &[]).unwrap();
        assert_eq!(empty.total_weight(), 0.0);
    }

    #[test]
    fn reweight_scales_weight_and_resistance() {
        let g = BipartiteGraph::from_strs(&["a"], &["b"], &[("a", "b", 1.0)]).unwrap();
        let same = g.reweight(1.0).unwrap();
        assert_eq!(same.total_weight(), 1.0);
        let doubled = g.reweight(2.0).unwrap();
        assert_eq!(doubled.total_weight(), 2.0);
        let (_, r) = doubled.electric_flow("a", "b").unwrap();
        assert!((r - 0.5).abs() < 1e-12);
        assert!(g.reweight(0.0).is_err());
        assert!(g.reweight(-2.0).is_err());
    }

    #[test]
    fn reweight_welded_balances_weight_and_resistance() {
        let tree = WeldedTree::generate(3, 11).unwrap();
        let g = tree.graph();
        let w = g.total_weight();
        let (_, r) = g.electric_flow(tree.s_name(), tree.t_name()).unwrap();
        let alpha = (r / w).sqrt();
        let scaled = g.reweight(alpha).unwrap();
        let target = (w * r).sqrt();
        assert!((scaled.total_weight() - target).abs() < 1e-9);
        let (_, r2) = scaled.electric_flow(tree.s_name(), tree.t_name()).unwrap();
        assert!((r2 - target).abs() < 1e-9);
        assert!((target * target - 79.75).abs() < 1e-9);
    }

    #[test]
    fn tensor_k2_bipartite_input_splits_into_two_copies() {
        let g = BipartiteGraph::from_strs(
            &["a0", "a1"],
            &["b0"],
            &[("a0", "b0", 1.0), ("a1", "b0", 2.0)],
        )
        .unwrap();
        let doubled = tensor_k2(&Graph::from_bipartite(&g), "a0").unwrap();
        let comps = doubled.graph.components();
        assert_eq!(comps.len(), 2);
        let with_start = comps
            .iter()
            .find(|c| c.contains(&doubled.start))
            .unwrap();
        // The start component is the A x {0} ∪ B x {1} copy of the input.
        for a in g.a_names() {
            assert!(with_start.contains(&doubled_name(a, 0)));
        }
        for b in g.b_names() {
            assert!(with_start.contains(&doubled_name(b, 1)));
        }
        assert_eq!(with_start.len(), g.vertex_count());
        let e = doubled
            .graph
            .edge_between(&doubled_name("a1", 0), &doubled_name("b0", 1))
            .unwrap();
        assert_eq!(doubled.graph.weight(e), 2.0);
    }

    #[test]
    fn tensor_k2_triangle_gives_six_cycle() {
        let g = Graph::from_strs(
            &["x", "y", "z"],
            &[("x", "y", 1.0), ("y", "z", 1.0), ("z", "x", 1.0)],
        )
        .unwrap();
        let doubled = tensor_k2(&g, "x").unwrap();
        assert_eq!(doubled.graph.vertex_count(), 6);
        assert_eq!(doubled.graph.edge_count(), 6);
        assert_eq!(doubled.graph.components().len(), 1);
        for name in doubled.graph.a_names().to_vec() {
            assert_eq!(doubled.graph.degree(&name).unwrap(), 2);
        }
        for name in doubled.graph.b_names().to_vec() {
            assert_eq!(doubled.graph.degree(&name).unwrap(), 2);
        }
    }

    #[test]
    fn tensor_k2_single_edge_gives_two_disjoint_edges() {
        let g = Graph::from_strs(&["u", "v"], &[("u", "v", 1.5)]).unwrap();
        let doubled = tensor_k2(&g, "u").unwrap();
        assert_eq!(doubled.graph.edge_count(), 2);
        assert_eq!(doubled.graph.components().len(), 2);
    }

    #[test]
    fn oriented_amplitude_flips_sign() {
        let g = BipartiteGraph::from_strs(&["a"], &["b"], &[("a", "b", 1.0)]).unwrap();
        let ext = g.extend("a", "b", 1.0, 1.0).unwrap();
        let mut x = EdgeVector::zeros(3);
        x.set_real(0, 0.5);
        x.set_real(1, 0.25);
        x.set_real(2, 0.125);
        assert_eq!(ext.oriented_amplitude(&x, "a", "b").unwrap().re, 0.5);
        assert_eq!(ext.oriented_amplitude(&x, "b", "a").unwrap().re, -0.5);
        assert_eq!(ext.oriented_amplitude(&x, "a", S_PRIME).unwrap().re, 0.25);
        assert_eq!(ext.oriented_amplitude(&x, S_PRIME, "a").unwrap().re, -0.25);
        assert_eq!(ext.oriented_amplitude(&x, T_PRIME, "b").unwrap().re, 0.125);
        assert_eq!(ext.oriented_amplitude(&x, "b", T_PRIME).unwrap().re, -0.125);
    }

    #[test]
    fn random_bipartite_is_connected() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..10 {
            let na = rng.random_range(2..8);
            let nb = rng.random_range(2..8);
            let g = random_connected_bipartite(na, nb, 5, &mut rng);
            assert_eq!(g.components().len(), 1);
            assert!(g.edge_count() >= na + nb - 1);
        }
    }
}
