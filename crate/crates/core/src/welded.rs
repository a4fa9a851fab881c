//! Welded tree graphs: two complete binary trees of depth `n` joined by a
//! random alternating cycle on their leaves, with the opaque-label neighbor
//! oracle and the phase-flipped catalysts.
//!
//! Edge layers are kept in path order `L_1 .. L_n, M, R_n .. R_1` so the
//! graph doubles as a 1-D hierarchical graph with `2n + 1` edge layers.

use std::collections::{BTreeMap, HashMap, HashSet};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Error;
use crate::graph::{BipartiteGraph, EdgeVector, ExtendedGraph};
use crate::hierarchical::LayeredGraph;
use crate::walk::{walk_step, Phase};
use crate::Result;

/// A welded tree of depth `n`, its layer structure, and the opaque labels.
#[derive(Clone, Debug)]
pub struct WeldedTree {
    depth: usize,
    graph: BipartiteGraph,
    s: String,
    t: String,
    labels: BTreeMap<String, String>,
    layers: Vec<Vec<usize>>,
}

fn left_name(d: usize, k: usize) -> String {
    format!("l{d}.{k}")
}

fn right_name(d: usize, k: usize) -> String {
    format!("r{d}.{k}")
}

impl WeldedTree {
    /// Generates a welded tree of depth `n`, deterministic in `seed`.
    ///
    /// The weld is the alternating cycle `ℓ_{π(1)}, r_{σ(1)}, ℓ_{π(2)}, ...`
    /// of two independent uniform permutations of the leaf indices.
    pub fn generate(n: usize, seed: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::domain("tree depth must be at least 1"));
        }
        if n > 24 {
            return Err(Error::domain("tree depth above desk scale"));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);

        // Vertex names in a fixed order: left tree by depth, then right.
        let mut names = Vec::new();
        for d in 0..=n {
            for k in 0..1usize << d {
                names.push(left_name(d, k));
            }
        }
        for d in 0..=n {
            for k in 0..1usize << d {
                names.push(right_name(d, k));
            }
        }

        // Labels are drawn before and independently of any structure.
        let labels = draw_labels(names.len(), 2 * n + 2, &mut rng);
        let labels: BTreeMap<String, String> =
            names.iter().cloned().zip(labels).collect();

        // Distance parity from the left root decides the bipartition class:
        // left depth d has parity d, right depth d has parity 2n + 1 - d.
        let part_a = |name: &str, d: usize| -> bool {
            if name.starts_with('l') {
                d % 2 == 0
            } else {
                (2 * n + 1 - d) % 2 == 0
            }
        };
        let mut a_names = Vec::new();
        let mut b_names = Vec::new();
        for d in 0..=n {
            for k in 0..1usize << d {
                for (side, name) in [('l', left_name(d, k)), ('r', right_name(d, k))] {
                    let _ = side;
                    if part_a(&name, d) {
                        a_names.push(name);
                    } else {
                        b_names.push(name);
                    }
                }
            }
        }

        let oriented = |u: String, du: usize, v: String, dv: usize| -> (String, String, f64) {
            if part_a(&u, du) {
                (u, v, 1.0)
            } else {
                (v, u, 1.0)
            }
        };

        let mut edges = Vec::new();
        let mut layers = Vec::new();
        // Left layers 1..n.
        for j in 1..=n {
            let mut layer = Vec::new();
            for k in 0..1usize << j {
                layer.push(edges.len());
                edges.push(oriented(left_name(j - 1, k / 2), j - 1, left_name(j, k), j));
            }
            layers.push(layer);
        }
        // Middle cycle.
        let leaves = 1usize << n;
        let mut pi: Vec<usize> = (0..leaves).collect();
        let mut sigma: Vec<usize> = (0..leaves).collect();
        pi.shuffle(&mut rng);
        sigma.shuffle(&mut rng);
        let mut middle = Vec::new();
        for i in 0..leaves {
            middle.push(edges.len());
            edges.push(oriented(
                left_name(n, pi[i]),
                n,
                right_name(n, sigma[i]),
                n,
            ));
            middle.push(edges.len());
            edges.push(oriented(
                left_name(n, pi[(i + 1) % leaves]),
                n,
                right_name(n, sigma[i]),
                n,
            ));
        }
        layers.push(middle);
        // Right layers n..1 in path order.
        for j in (1..=n).rev() {
            let mut layer = Vec::new();
            for k in 0..1usize << j {
                layer.push(edges.len());
                edges.push(oriented(
                    right_name(j - 1, k / 2),
                    j - 1,
                    right_name(j, k),
                    j,
                ));
            }
            layers.push(layer);
        }

        let graph = BipartiteGraph::new(a_names, b_names, &edges)?;
        Ok(WeldedTree {
            depth: n,
            graph,
            s: left_name(0, 0),
            t: right_name(0, 0),
            labels,
            layers,
        })
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn graph(&self) -> &BipartiteGraph {
        &self.graph
    }

    pub fn s_name(&self) -> &str {
        &self.s
    }

    pub fn t_name(&self) -> &str {
        &self.t
    }

    pub fn labels(&self) -> &BTreeMap<String, String> {
        &self.labels
    }

    /// Edge layers in path order `L_1 .. L_n, M, R_n .. R_1`.
    pub fn layers(&self) -> &[Vec<usize>] {
        &self.layers
    }

    /// Display name of a path-ordered layer (1-based).
    pub fn layer_label(&self, k: usize) -> String {
        let n = self.depth;
        if k <= n {
            format!("L{k}")
        } else if k == n + 1 {
            "M".to_string()
        } else {
            format!("R{}", 2 * n + 2 - k)
        }
    }

    /// The extended graph with dangling weights `w0` at `s` and `w_end` at `t`.
    pub fn extended(&self, w0: f64, w_end: f64) -> Result<ExtendedGraph> {
        self.graph.extend(&self.s, &self.t, w0, w_end)
    }

    /// The welded tree as a layered hierarchical graph.
    pub fn layered(&self) -> LayeredGraph {
        LayeredGraph::new(
            self.graph.clone(),
            self.s.clone(),
            self.t.clone(),
            self.layers.clone(),
        )
    }

    /// The black-box neighbor oracle over the opaque labels.
    pub fn oracle(&self) -> WeldOracle {
        let mut adjacency: HashMap<String, Vec<String>> = HashMap::new();
        for e in 0..self.graph.edge_count() {
            let (u, v, _) = self.graph.edge(e);
            let lu = self.labels[u].clone();
            let lv = self.labels[v].clone();
            adjacency.entry(lu.clone()).or_default().push(lv);
            adjacency.entry(lv).or_default().push(lu);
        }
        for list in adjacency.values_mut() {
            list.sort();
        }
        WeldOracle {
            entry: self.labels[&self.s].clone(),
            adjacency,
        }
    }

    /// Catalyst amplitude per edge of path-ordered layer `k` (1-based), for
    /// the left-heavy catalyst. Levels `2i` and `2i+1` of the left tree and
    /// `2i` and `2i-1` of the right tree carry `(-1/2)^i`; the middle layer
    /// is the `(n+1)`-st level of both trees.
    fn v2_layer_amplitude(&self, k: usize) -> f64 {
        let n = self.depth;
        let i = if k <= n {
            k / 2
        } else if k == n + 1 {
            (n + 1) / 2
        } else {
            let level = 2 * n + 2 - k;
            level.div_ceil(2)
        };
        (-0.5f64).powi(i as i32)
    }

    /// Mirror image of [`Self::v2_layer_amplitude`].
    fn v3_layer_amplitude(&self, k: usize) -> f64 {
        let n = self.depth;
        let i = if k <= n {
            k.div_ceil(2)
        } else if k == n + 1 {
            (n + 1) / 2
        } else {
            let level = 2 * n + 2 - k;
            level / 2
        };
        (-0.5f64).powi(i as i32)
    }

    fn layer_vector(&self, amp: impl Fn(usize) -> f64) -> EdgeVector {
        let mut v = EdgeVector::zeros(self.graph.edge_count() + 2);
        for (idx, layer) in self.layers.iter().enumerate() {
            let a = amp(idx + 1);
            for &e in layer {
                v.set_real(e, a);
            }
        }
        v
    }

    /// The catalyst that behaves as an edge sum for part `A` and as a flow
    /// for part `B`. Requires odd depth.
    pub fn catalyst_v2(&self) -> Result<EdgeVector> {
        if self.depth % 2 == 0 {
            return Err(Error::EvenDepth(self.depth));
        }
        Ok(self.layer_vector(|k| self.v2_layer_amplitude(k)))
    }

    /// The mirror catalyst: edge sum for part `B`, flow for part `A`.
    /// Requires odd depth.
    pub fn catalyst_v3(&self) -> Result<EdgeVector> {
        if self.depth % 2 == 0 {
            return Err(Error::EvenDepth(self.depth));
        }
        Ok(self.layer_vector(|k| self.v3_layer_amplitude(k)))
    }
}

fn draw_labels(count: usize, bits: usize, rng: &mut impl Rng) -> Vec<String> {
    let mask = if bits >= 64 {
        u64::MAX
    } else {
        (1u64 << bits) - 1
    };
    let mut seen = HashSet::new();
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let raw = rng.random::<u64>() & mask;
        if seen.insert(raw) {
            out.push(format!("{raw:0width$b}", width = bits));
        }
    }
    out
}

/// The neighbor oracle: reveals only sorted neighbor-label lists.
#[derive(Clone, Debug)]
pub struct WeldOracle {
    entry: String,
    adjacency: HashMap<String, Vec<String>>,
}

impl WeldOracle {
    /// Label of the entry vertex `s`.
    pub fn entry(&self) -> &str {
        &self.entry
    }

    /// Neighbor labels in sorted order; unknown labels get an empty list.
    pub fn neighbors(&self, label: &str) -> Vec<String> {
        self.adjacency.get(label).cloned().unwrap_or_default()
    }
}

/// Report of the phase-flipped transduction check on a welded tree.
#[derive(Clone, Debug)]
pub struct WeldedReport {
    /// Norm squared of the explicit catalyst `(v2 + v3)/2`.
    pub complexity: f64,
    /// `‖(-U)(|s> + (v2+v3)/2) − (|t> + (v2+v3)/2)‖`.
    pub residual: f64,
    /// The guaranteed bound `3(n+1)`.
    pub bound: f64,
}

/// Builds `-U` on a fresh welded tree and checks that it maps
/// `|s> ⊕ (v2+v3)/2` to `|t> ⊕ (v2+v3)/2`, reporting the explicit catalyst
/// complexity against the `3(n+1)` bound.
pub fn verify_welded(n: usize, seed: u64) -> Result<WeldedReport> {
    let tree = WeldedTree::generate(n, seed)?;
    let g = tree.extended(1.0, 1.0)?;
    let v2 = tree.catalyst_v2()?;
    let v3 = tree.catalyst_v3()?;
    let catalyst = (&v2 + &v3) * 0.5;
    let input = EdgeVector::basis(g.dim(), g.start_edge()) + &catalyst;
    let expected = EdgeVector::basis(g.dim(), g.target_edge()) + &catalyst;
    let minus_u = walk_step(&g, Phase::Minus);
    let residual = minus_u.apply(&input).distance(&expected);
    let tolerance = 1e-9;
    if residual > tolerance {
        return Err(Error::NumericalFailure {
            residual,
            tolerance,
        });
    }
    let complexity = catalyst.norm_squared();
    let bound = 3.0 * (n as f64 + 1.0);
    if complexity > bound + 1e-9 {
        return Err(Error::domain(format!(
            "explicit catalyst norm {complexity} exceeds the bound {bound}"
        )));
    }
    Ok(WeldedReport {
        complexity,
        residual,
        bound,
    })
}
