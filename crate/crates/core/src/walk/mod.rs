//! The quantum walk on the edge space: reflections about star-state spans,
//! the walk step `U = ±R_B R_A`, and the generic electric catalysts.
//!
//! Star states of distinct vertices in the same part have disjoint edge
//! support, so each reflection is a sum of independent rank-one updates and
//! one walk step costs `O(|E|)`. Dense matrices are only assembled for
//! desk-scale identity tests and exact solves.

mod pair;

pub use pair::{DiffuseShift, PairStateVector};

use nalgebra::{ComplexField, DMatrix, DVector};

use crate::graph::{EdgeVector, ExtendedGraph, Part};
use crate::par;
use crate::Result;

/// Global phase of the walk step.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Phase {
    Plus,
    Minus,
}

impl Phase {
    pub fn sign(self) -> f64 {
        match self {
            Phase::Plus => 1.0,
            Phase::Minus => -1.0,
        }
    }
}

impl std::fmt::Display for Phase {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Phase::Plus => write!(f, "+1"),
            Phase::Minus => write!(f, "-1"),
        }
    }
}

/// One star: the incident edges of a vertex with their `sqrt(w)` weights.
#[derive(Clone, Debug)]
struct Star {
    edges: Vec<usize>,
    coeff: Vec<f64>,
    norm_squared: f64,
}

impl Star {
    /// Reflects `x` about the orthogonal complement of this star, i.e.
    /// negates the component along it.
    fn reflect<T>(&self, x: &mut DVector<T>)
    where
        T: ComplexField<RealField = f64> + Copy,
    {
        let mut inner = T::zero();
        for (&e, &c) in self.edges.iter().zip(&self.coeff) {
            inner += x[e] * T::from_real(c);
        }
        let scale = inner * T::from_real(2.0 / self.norm_squared);
        for (&e, &c) in self.edges.iter().zip(&self.coeff) {
            x[e] -= scale * T::from_real(c);
        }
    }
}

/// One step of the quantum walk, `U = phase · R_B R_A`, stored matrix-free.
#[derive(Clone, Debug)]
pub struct WalkOperator {
    phase: Phase,
    stars_a: Vec<Star>,
    stars_b: Vec<Star>,
    dim: usize,
    start_edge: usize,
    target_edge: usize,
}

impl WalkOperator {
    pub fn new(g: &ExtendedGraph, phase: Phase) -> Self {
        let build = |part: Part| -> Vec<Star> {
            let names: Vec<String> = match part {
                Part::A => g.base().a_names().to_vec(),
                Part::B => g.base().b_names().to_vec(),
            };
            names
                .iter()
                .map(|u| {
                    let psi = g.star_state(u).expect("graph vertex");
                    let mut edges = Vec::new();
                    let mut coeff = Vec::new();
                    for e in 0..g.dim() {
                        let c = psi.amplitude(e).re;
                        if c != 0.0 {
                            edges.push(e);
                            coeff.push(c);
                        }
                    }
                    Star {
                        norm_squared: psi.norm_squared(),
                        edges,
                        coeff,
                    }
                })
                .collect()
        };
        WalkOperator {
            phase,
            stars_a: build(Part::A),
            stars_b: build(Part::B),
            dim: g.dim(),
            start_edge: g.start_edge(),
            target_edge: g.target_edge(),
        }
    }

    pub fn phase(&self) -> Phase {
        self.phase
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn start_edge(&self) -> usize {
        self.start_edge
    }

    pub fn target_edge(&self) -> usize {
        self.target_edge
    }

    /// Reflection `R_A` or `R_B` applied to a raw coordinate vector.
    pub fn reflect_slice<T>(&self, part: Part, x: &mut DVector<T>)
    where
        T: ComplexField<RealField = f64> + Copy,
    {
        let stars = match part {
            Part::A => &self.stars_a,
            Part::B => &self.stars_b,
        };
        for star in stars {
            star.reflect(x);
        }
    }

    /// Applies one walk step to a raw coordinate vector.
    pub fn apply_slice<T>(&self, x: &mut DVector<T>)
    where
        T: ComplexField<RealField = f64> + Copy,
    {
        self.reflect_slice(Part::A, x);
        self.reflect_slice(Part::B, x);
        if self.phase == Phase::Minus {
            for v in x.iter_mut() {
                *v = -*v;
            }
        }
    }

    /// The reflection about the span of the star states of one part.
    pub fn reflect(&self, part: Part, x: &EdgeVector) -> EdgeVector {
        let mut v = x.as_dvector().clone();
        self.reflect_slice(part, &mut v);
        EdgeVector::from_dvector(v)
    }

    /// One walk step applied to an edge vector.
    pub fn apply(&self, x: &EdgeVector) -> EdgeVector {
        let mut v = x.as_dvector().clone();
        self.apply_slice(&mut v);
        EdgeVector::from_dvector(v)
    }

    /// `U^k x`.
    pub fn apply_iterated(&self, x: &EdgeVector, k: usize) -> EdgeVector {
        let mut v = x.as_dvector().clone();
        for _ in 0..k {
            self.apply_slice(&mut v);
        }
        EdgeVector::from_dvector(v)
    }

    /// Dense real matrix of the operator, assembled column by column.
    pub fn to_dense(&self) -> DMatrix<f64> {
        let cols = par::map_indexed(self.dim, |e| {
            let mut col = DVector::<f64>::zeros(self.dim);
            col[e] = 1.0;
            self.apply_slice(&mut col);
            col
        });
        DMatrix::from_columns(&cols)
    }
}

/// The reflection that negates `span{psi_u : u in part}` and fixes its
/// orthogonal complement.
pub fn reflect_part(g: &ExtendedGraph, part: Part, x: &EdgeVector) -> EdgeVector {
    WalkOperator::new(g, Phase::Plus).reflect(part, x)
}

/// One step of the quantum walk on the extended graph.
pub fn walk_step(g: &ExtendedGraph, phase: Phase) -> WalkOperator {
    WalkOperator::new(g, phase)
}

/// `U^k x`.
pub fn apply_walk(u: &WalkOperator, x: &EdgeVector, k: usize) -> EdgeVector {
    u.apply_iterated(x, k)
}

/// The edge-sum catalyst `v0 = sum_{e in E} sqrt(w_e) |e>` (base edges only).
///
/// Satisfies `|s> + |v0> = sum_{u in A} psi_u` and
/// `|v0> + |t> = sum_{u in B} psi_u`.
pub fn catalyst_v0(g: &ExtendedGraph) -> EdgeVector {
    let mut v = EdgeVector::zeros(g.dim());
    for e in 0..g.base().edge_count() {
        v.set_real(e, g.base().weight(e).sqrt());
    }
    v
}

/// The flow catalyst `v1 = sum_{e in E} (p_e / sqrt(w_e)) |e>`, where `p`
/// is the unit electrical flow from `s` to `t`.
///
/// Extending the flow with `p_{ss'} = p_{t't} = -1` makes
/// `-|s> + |v1> - |t>` orthogonal to every star state.
pub fn catalyst_v1(g: &ExtendedGraph) -> Result<EdgeVector> {
    let (flow, _) = g.base().electric_flow(g.s_name(), g.t_name())?;
    let mut v = EdgeVector::zeros(g.dim());
    for e in 0..g.base().edge_count() {
        v.set_real(e, flow.on(e) / g.base().weight(e).sqrt());
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::BipartiteGraph;
    use crate::linalg::unitarity_defect;
    use crate::welded::WeldedTree;
    use nalgebra::DMatrix;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn single_edge() -> ExtendedGraph {
        BipartiteGraph::from_strs(&["a"], &["b"], &[("a", "b", 1.0)])
            .unwrap()
            .extend("a", "b", 1.0, 1.0)
            .unwrap()
    }

    fn random_state(dim: usize, rng: &mut impl Rng) -> EdgeVector {
        let mut x = EdgeVector::zeros(dim);
        for e in 0..dim {
            x.set(
                e,
                num_complex::Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)),
            );
        }
        x
    }

    #[test]
    fn reflection_negates_own_star_and_fixes_complement() {
        let tree = WeldedTree::generate(2, 3).unwrap();
        let g = tree.extended(1.0, 1.0).unwrap();
        let u = g.base().a_names()[1].clone();
        let psi = g.star_state(&u).unwrap();
        let reflected = reflect_part(&g, Part::A, &psi);
        assert!(reflected.distance(&(-&psi)) < 1e-12);

        // Reflections are isometries.
        let v = g.base().b_names()[0].clone();
        let psi_b = g.star_state(&v).unwrap();
        let r = reflect_part(&g, Part::A, &psi_b);
        assert!((r.norm() - psi_b.norm()).abs() < 1e-12);
    }

    #[test]
    fn reflection_fixes_orthogonal_vectors() {
        // Two edges sharing an A vertex: the difference of the normalized
        // edges weighted to cancel is orthogonal to the star.
        let g = BipartiteGraph::from_strs(
            &["a0"],
            &["b0", "b1"],
            &[("a0", "b0", 1.0), ("a0", "b1", 1.0)],
        )
        .unwrap()
        .extend("a0", "b0", 1.0, 1.0)
        .unwrap();
        let mut x = EdgeVector::zeros(g.dim());
        x.set_real(0, 1.0);
        x.set_real(1, -1.0);
        let psi = g.star_state("a0").unwrap();
        assert!(psi.inner(&x).norm() < 1e-15);
        let r = reflect_part(&g, Part::A, &x);
        assert!(r.distance(&x) < 1e-15);
    }

    #[test]
    fn walk_step_single_edge_is_unitary() {
        let g = single_edge();
        let u = walk_step(&g, Phase::Plus);
        let m = u.to_dense();
        assert_eq!(m.nrows(), 3);
        assert!(unitarity_defect(&m) < 1e-12);

        // U = R_B R_A exactly.
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let x = random_state(3, &mut rng);
        let chained = u.reflect(Part::B, &u.reflect(Part::A, &x));
        assert!(u.apply(&x).distance(&chained) < 1e-13);
    }

    #[test]
    fn phase_minus_negates() {
        let g = single_edge();
        let plus = walk_step(&g, Phase::Plus);
        let minus = walk_step(&g, Phase::Minus);
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        let x = random_state(3, &mut rng);
        assert!(minus.apply(&x).distance(&(-plus.apply(&x))) < 1e-14);
    }

    #[test]
    fn apply_walk_composes() {
        let tree = WeldedTree::generate(3, 8).unwrap();
        let g = tree.extended(1.0, 1.0).unwrap();
        let u = walk_step(&g, Phase::Minus);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let x = random_state(g.dim(), &mut rng);
        assert!(apply_walk(&u, &x, 0).distance(&x) < 1e-15);
        let twice = u.apply(&u.apply(&x));
        assert!(apply_walk(&u, &x, 2).distance(&twice) < 1e-13);
    }

    #[test]
    fn walk_preserves_norm_over_many_steps() {
        let tree = WeldedTree::generate(5, 1).unwrap();
        let g = tree.extended(1.0, 1.0).unwrap();
        let u = walk_step(&g, Phase::Minus);
        let start = EdgeVector::basis(g.dim(), g.start_edge());
        let out = apply_walk(&u, &start, 50);
        assert!((out.norm() - 1.0).abs() < 1e-9);
    }

    #[test]
    fn catalyst_v0_examples() {
        let tree = WeldedTree::generate(3, 12).unwrap();
        let g = tree.extended(1.0, 1.0).unwrap();
        let v0 = catalyst_v0(&g);
        assert!((v0.norm_squared() - 44.0).abs() < 1e-12);
        for e in 0..g.base().edge_count() {
            assert_eq!(v0.amplitude(e).re, 1.0);
        }
        assert_eq!(v0.amplitude(g.start_edge()).re, 0.0);

        let g = BipartiteGraph::from_strs(
            &["a0"],
            &["b0", "b1"],
            &[("a0", "b0", 4.0), ("a0", "b1", 9.0)],
        )
        .unwrap()
        .extend("a0", "b0", 1.0, 1.0)
        .unwrap();
        let v0 = catalyst_v0(&g);
        assert_eq!(v0.amplitude(0).re, 2.0);
        assert_eq!(v0.amplitude(1).re, 3.0);
    }

    #[test]
    fn catalyst_v0_matches_star_sums() {
        let tree = WeldedTree::generate(2, 9).unwrap();
        let g = tree.extended(1.0, 1.0).unwrap();
        let v0 = catalyst_v0(&g);
        let s = EdgeVector::basis(g.dim(), g.start_edge());
        let t = EdgeVector::basis(g.dim(), g.target_edge());
        let mut sum_a = EdgeVector::zeros(g.dim());
        for u in g.base().a_names().to_vec() {
            sum_a = sum_a + g.star_state(&u).unwrap();
        }
        assert!((&s + &v0).distance(&sum_a) < 1e-12);
        let mut sum_b = EdgeVector::zeros(g.dim());
        for u in g.base().b_names().to_vec() {
            sum_b = sum_b + g.star_state(&u).unwrap();
        }
        assert!((&v0 + &t).distance(&sum_b) < 1e-12);
    }

    #[test]
    fn catalyst_v1_single_edge_sign() {
        // Orthogonality of -|s> + |v1> - |t> to psi_s and psi_t forces the
        // amplitude +1 on the lone base edge.
        let g = single_edge();
        let v1 = catalyst_v1(&g).unwrap();
        assert!((v1.amplitude(0).re - 1.0).abs() < 1e-12);
        let witness = -EdgeVector::basis(3, 1) + &v1 - EdgeVector::basis(3, 2);
        for u in ["a", "b"] {
            let psi = g.star_state(u).unwrap();
            assert!(psi.inner(&witness).norm() < 1e-12);
        }
    }

    #[test]
    fn catalyst_v1_welded_layer_amplitudes() {
        let tree = WeldedTree::generate(3, 21).unwrap();
        let g = tree.extended(1.0, 1.0).unwrap();
        let v1 = catalyst_v1(&g).unwrap();
        assert!((v1.norm_squared() - 29.0 / 16.0).abs() < 1e-10);
        // Layer amplitudes 1/2, -1/4, 1/8, -1/16, 1/8, -1/4, 1/2 on the base
        // edges; the witness extends with -1 on both dangling edges.
        let expected = [
            0.5,
            -0.25,
            0.125,
            -0.0625,
            0.125,
            -0.25,
            0.5,
        ];
        for (k, edges) in tree.layers().iter().enumerate() {
            for &e in edges {
                assert!(
                    (v1.amplitude(e).re - expected[k]).abs() < 1e-10,
                    "layer {k} amplitude"
                );
            }
        }
    }

    #[test]
    fn walk_equals_dense_matrix_on_random_input() {
        let tree = WeldedTree::generate(2, 2).unwrap();
        let g = tree.extended(1.0, 1.0).unwrap();
        let u = walk_step(&g, Phase::Minus);
        let m = u.to_dense();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let x = DVector::<f64>::from_fn(g.dim(), |_, _| rng.random_range(-1.0..1.0));
        let mut y = x.clone();
        u.apply_slice(&mut y);
        assert!((&m * &x - y).norm() < 1e-12);
        let eye = DMatrix::<f64>::identity(g.dim(), g.dim());
        assert!(((&m.transpose() * &m) - eye).amax() < 1e-12);
    }
}
