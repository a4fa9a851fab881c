//! Two-register (diffuse-and-shift) realization of the walk.
//!
//! The state `|u>|v>` represents the edge between `(u, 0)` and `(v, 1)` in
//! `G x K_2`; the dangling edges are padded with a reserved element `⊥`
//! outside the vertex set as `|s>|⊥>` and `|⊥>|t>`. One walk step is
//! `S D S D`, where `D` reflects the first-register star states and `S`
//! swaps the registers. Restricted to the component of the start edge this
//! reproduces the edge-space walk on `G x K_2`.

use nalgebra::DVector;
use num_complex::Complex64;

use crate::graph::{EdgeVector, ExtendedGraph};

/// Amplitudes over ordered pairs `(u, v)` with `u, v ∈ V ∪ {⊥}`.
#[derive(Clone, Debug)]
pub struct PairStateVector {
    side: usize,
    amps: DVector<Complex64>,
}

impl PairStateVector {
    /// `side` counts the real vertices; `⊥` is the extra index `side - 1`.
    fn with_vertices(nv: usize) -> Self {
        let side = nv + 1;
        PairStateVector {
            side,
            amps: DVector::from_element(side * side, Complex64::ZERO),
        }
    }

    pub fn zeros_like(other: &PairStateVector) -> Self {
        PairStateVector {
            side: other.side,
            amps: DVector::from_element(other.amps.len(), Complex64::ZERO),
        }
    }

    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    fn cell(&self, first: usize, second: usize) -> usize {
        first * self.side + second
    }

    pub fn amplitude(&self, first: usize, second: usize) -> Complex64 {
        self.amps[self.cell(first, second)]
    }

    pub fn set(&mut self, first: usize, second: usize, value: Complex64) {
        let c = self.cell(first, second);
        self.amps[c] = value;
    }

    pub fn norm(&self) -> f64 {
        self.amps.norm()
    }

    pub fn distance(&self, other: &PairStateVector) -> f64 {
        (&self.amps - &other.amps).norm()
    }

    /// Swaps the two registers.
    pub fn swapped(&self) -> PairStateVector {
        let mut out = PairStateVector::zeros_like(self);
        for p in 0..self.side {
            for q in 0..self.side {
                out.amps[out.cell(q, p)] = self.amps[self.cell(p, q)];
            }
        }
        out
    }
}

struct PairStar {
    cells: Vec<usize>,
    coeff: Vec<f64>,
    norm_squared: f64,
}

/// The diffuse-and-shift walk step `U = S D S D` on the pair space.
pub struct DiffuseShift {
    nv: usize,
    stars: Vec<PairStar>,
}

impl DiffuseShift {
    pub fn new(g: &ExtendedGraph) -> Self {
        let base = g.base();
        let nv = base.vertex_count();
        let side = nv + 1;
        let bottom = nv;
        let s_id = base.global_id(g.s_name()).expect("start exists");
        let t_id = base.global_id(g.t_name()).expect("target exists");
        let stars = (0..nv)
            .map(|u| {
                let mut cells = Vec::new();
                let mut coeff = Vec::new();
                for &e in base.global_incident(u) {
                    let (a, b) = base.global_endpoints(e);
                    let v = if a == u { b } else { a };
                    cells.push(u * side + v);
                    coeff.push(base.weight(e).sqrt());
                }
                if u == s_id {
                    cells.push(u * side + bottom);
                    coeff.push(g.w0().sqrt());
                }
                if u == t_id {
                    cells.push(u * side + bottom);
                    coeff.push(g.w_end().sqrt());
                }
                let norm_squared = coeff.iter().map(|c| c * c).sum();
                PairStar {
                    cells,
                    coeff,
                    norm_squared,
                }
            })
            .collect();
        DiffuseShift { nv, stars }
    }

    pub fn pair_dim(&self) -> usize {
        (self.nv + 1) * (self.nv + 1)
    }

    pub fn zero_state(&self) -> PairStateVector {
        PairStateVector::with_vertices(self.nv)
    }

    /// The diffuse reflection `D`; an involution.
    pub fn diffuse(&self, x: &PairStateVector) -> PairStateVector {
        let mut out = x.clone();
        for star in &self.stars {
            let mut inner = Complex64::ZERO;
            for (&c, &w) in star.cells.iter().zip(&star.coeff) {
                inner += out.amps[c] * w;
            }
            let scale = inner * (2.0 / star.norm_squared);
            for (&c, &w) in star.cells.iter().zip(&star.coeff) {
                out.amps[c] -= scale * w;
            }
        }
        out
    }

    /// The register swap `S`.
    pub fn shift(&self, x: &PairStateVector) -> PairStateVector {
        x.swapped()
    }

    /// One walk step `S D S D`.
    pub fn step(&self, x: &PairStateVector) -> PairStateVector {
        let x = self.diffuse(x);
        let x = self.shift(&x);
        let x = self.diffuse(&x);
        self.shift(&x)
    }

    /// The canonical identification of the edge space into the pair space:
    /// base edge `(a, b)` to `|a>|b>`, `ss'` to `|s>|⊥>`, `t't` to `|⊥>|t>`.
    pub fn embed(&self, g: &ExtendedGraph, v: &EdgeVector) -> PairStateVector {
        let base = g.base();
        let bottom = self.nv;
        let mut out = PairStateVector::with_vertices(self.nv);
        for e in 0..base.edge_count() {
            let (a, b) = base.global_endpoints(e);
            out.set(a, b, v.amplitude(e));
        }
        let s_id = base.global_id(g.s_name()).expect("start exists");
        let t_id = base.global_id(g.t_name()).expect("target exists");
        out.set(s_id, bottom, v.amplitude(g.start_edge()));
        out.set(bottom, t_id, v.amplitude(g.target_edge()));
        out
    }

    /// Pulls a pair state back to the edge space; the second value is the
    /// norm of the component outside the image of the identification.
    pub fn extract(&self, g: &ExtendedGraph, x: &PairStateVector) -> (EdgeVector, f64) {
        let base = g.base();
        let bottom = self.nv;
        let mut v = EdgeVector::zeros(g.dim());
        for e in 0..base.edge_count() {
            let (a, b) = base.global_endpoints(e);
            v.set(e, x.amplitude(a, b));
        }
        let s_id = base.global_id(g.s_name()).expect("start exists");
        let t_id = base.global_id(g.t_name()).expect("target exists");
        v.set(g.start_edge(), x.amplitude(s_id, bottom));
        v.set(g.target_edge(), x.amplitude(bottom, t_id));
        let leak = (x.norm().powi(2) - v.norm_squared()).max(0.0).sqrt();
        (v, leak)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::BipartiteGraph;
    use crate::verify::diffuse_shift_deviation;
    use crate::walk::{walk_step, Phase};
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn single_edge() -> ExtendedGraph {
        BipartiteGraph::from_strs(&["a"], &["b"], &[("a", "b", 1.0)])
            .unwrap()
            .extend("a", "b", 1.0, 1.0)
            .unwrap()
    }

    #[test]
    fn diffuse_is_an_involution() {
        let g = single_edge();
        let ds = DiffuseShift::new(&g);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let mut x = ds.zero_state();
        for p in 0..3 {
            for q in 0..3 {
                x.set(p, q, Complex64::new(rng.random_range(-1.0..1.0), 0.0));
            }
        }
        let twice = ds.diffuse(&ds.diffuse(&x));
        assert!(twice.distance(&x) < 1e-13);
    }

    #[test]
    fn matches_edge_space_walk_on_single_edge() {
        let g = single_edge();
        assert!(diffuse_shift_deviation(&g) < 1e-12);
    }

    #[test]
    fn start_pair_image_matches_walk_image() {
        let g = single_edge();
        let ds = DiffuseShift::new(&g);
        let u = walk_step(&g, Phase::Plus);
        let start = EdgeVector::basis(g.dim(), g.start_edge());
        let expected = u.apply(&start);
        let image = ds.step(&ds.embed(&g, &start));
        let (back, leak) = ds.extract(&g, &image);
        assert!(leak < 1e-12);
        assert!(back.distance(&expected) < 1e-12);
    }
}
