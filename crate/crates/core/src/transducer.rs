//! Transducers: unitaries `S` on a direct sum `H ⊕ L` that map
//! `ξ ⊕ v ↦ τ ⊕ v`.
//!
//! The private vector `v` is the catalyst of the transduction and
//! `W(S, ξ) = ‖v‖²` its complexity. The exact solver recovers the
//! minimum-norm catalyst from `(I − S_LL) v = S_LH ξ`; for unitary `S` the
//! right-hand side is orthogonal to the kernel of the system, so the
//! minimum-norm least-squares solve is exact. The iterative runner
//! implements the transduction with `K` controlled applications of `S` and
//! error at most `2·sqrt(W/K)`.
//!
//! Public coordinates precede private ones throughout.

use nalgebra::{ComplexField, DMatrix, DVector};

use crate::error::Error;
use crate::linalg::{min_norm_solve, unitarity_defect};
use crate::walk::WalkOperator;
use crate::Result;

/// Relative singular-value cutoff below which kernel directions are dropped.
pub const KERNEL_CUTOFF: f64 = 1e-10;

/// Entrywise unitarity tolerance enforced on dense transducers.
pub const UNITARITY_TOL: f64 = 1e-10;

/// A unitary with a declared public/private split of its space.
pub trait SplitUnitary<T>
where
    T: ComplexField<RealField = f64> + Copy,
{
    fn dim_public(&self) -> usize;
    fn dim_private(&self) -> usize;

    fn dim(&self) -> usize {
        self.dim_public() + self.dim_private()
    }

    /// Applies the unitary to a full-space vector.
    fn apply_in_place(&self, x: &mut DVector<T>);

    /// Dense matrix of the unitary, assembled column by column.
    fn to_dense(&self) -> DMatrix<T> {
        let n = self.dim();
        let cols: Vec<DVector<T>> = (0..n)
            .map(|i| {
                let mut c = DVector::from_element(n, T::zero());
                c[i] = T::one();
                self.apply_in_place(&mut c);
                c
            })
            .collect();
        DMatrix::from_columns(&cols)
    }
}

/// A dense transducer, validated unitary on construction.
#[derive(Clone, Debug)]
pub struct Transducer<T: ComplexField<RealField = f64> + Copy> {
    matrix: DMatrix<T>,
    dim_public: usize,
}

impl<T: ComplexField<RealField = f64> + Copy> Transducer<T> {
    pub fn new(matrix: DMatrix<T>, dim_public: usize) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::domain("transducer matrix must be square"));
        }
        if dim_public > matrix.nrows() {
            return Err(Error::DimensionMismatch {
                expected: matrix.nrows(),
                got: dim_public,
            });
        }
        let defect = unitarity_defect(&matrix);
        if defect > UNITARITY_TOL {
            return Err(Error::NumericalFailure {
                residual: defect,
                tolerance: UNITARITY_TOL,
            });
        }
        Ok(Transducer { matrix, dim_public })
    }

    pub fn matrix(&self) -> &DMatrix<T> {
        &self.matrix
    }
}

impl<T: ComplexField<RealField = f64> + Copy> SplitUnitary<T> for Transducer<T> {
    fn dim_public(&self) -> usize {
        self.dim_public
    }

    fn dim_private(&self) -> usize {
        self.matrix.nrows() - self.dim_public
    }

    fn apply_in_place(&self, x: &mut DVector<T>) {
        let y = &self.matrix * &*x;
        x.copy_from(&y);
    }

    fn to_dense(&self) -> DMatrix<T> {
        self.matrix.clone()
    }
}

/// A walk step viewed as a transducer: public space `span{|ss'>, |t't>}`
/// (coordinates 0 and 1), private space `C^E`.
#[derive(Clone, Debug)]
pub struct WalkTransducer<'a> {
    op: &'a WalkOperator,
}

impl<'a> WalkTransducer<'a> {
    pub fn new(op: &'a WalkOperator) -> Self {
        WalkTransducer { op }
    }

    /// The public input `|ss'>` in transducer coordinates.
    pub fn start_state<T: ComplexField<RealField = f64> + Copy>(&self) -> DVector<T> {
        let mut xi = DVector::from_element(2, T::zero());
        xi[0] = T::one();
        xi
    }

    /// The public target `|t't>` in transducer coordinates.
    pub fn target_state<T: ComplexField<RealField = f64> + Copy>(&self) -> DVector<T> {
        let mut tau = DVector::from_element(2, T::zero());
        tau[1] = T::one();
        tau
    }
}

impl<'a, T> SplitUnitary<T> for WalkTransducer<'a>
where
    T: ComplexField<RealField = f64> + Copy,
{
    fn dim_public(&self) -> usize {
        2
    }

    fn dim_private(&self) -> usize {
        self.op.dim() - 2
    }

    fn apply_in_place(&self, x: &mut DVector<T>) {
        // Transducer layout [ss', t't, e_0, ..] -> edge layout [e_0, .., ss', t't].
        let n = self.op.dim();
        let mut edges = DVector::from_element(n, T::zero());
        edges[n - 2] = x[0];
        edges[n - 1] = x[1];
        for e in 0..n - 2 {
            edges[e] = x[e + 2];
        }
        self.op.apply_slice(&mut edges);
        x[0] = edges[n - 2];
        x[1] = edges[n - 1];
        for e in 0..n - 2 {
            x[e + 2] = edges[e];
        }
    }
}

/// Result of an exact transduction solve.
#[derive(Clone, Debug)]
pub struct TransductionResult<T: ComplexField<RealField = f64> + Copy> {
    /// The transduced public vector `τ(S, ξ)`.
    pub tau: DVector<T>,
    /// Minimum-norm catalyst, orthogonal to the fixed private space.
    pub catalyst: DVector<T>,
    /// `W(S, ξ) = ‖catalyst‖²`.
    pub complexity: f64,
    /// `‖S(ξ ⊕ v) − (τ ⊕ v)‖`.
    pub residual: f64,
}

/// Solves `S: ξ ⊕ v ↦ τ ⊕ v` for the minimum-norm catalyst `v`.
pub fn solve_transduction<T, S>(s: &S, xi: &DVector<T>, tol: f64) -> Result<TransductionResult<T>>
where
    T: ComplexField<RealField = f64> + Copy,
    S: SplitUnitary<T>,
{
    let h = s.dim_public();
    let l = s.dim_private();
    if xi.len() != h {
        return Err(Error::DimensionMismatch {
            expected: h,
            got: xi.len(),
        });
    }
    if xi.norm() == 0.0 {
        return Err(Error::domain("transduction input must be nonzero"));
    }
    let m = s.to_dense();
    let s_hh = m.view((0, 0), (h, h));
    let s_hl = m.view((0, h), (h, l));
    let s_lh = m.view((h, 0), (l, h));
    let s_ll = m.view((h, h), (l, l));

    let mut a = -s_ll.into_owned();
    for i in 0..l {
        a[(i, i)] += T::one();
    }
    let b = s_lh * xi;
    let sol = min_norm_solve(&a, &b, KERNEL_CUTOFF);
    let catalyst = sol.x;
    let tau = s_hh * xi + s_hl * &catalyst;

    // Residual of the defining equation on the full space.
    let mut full = DVector::from_element(h + l, T::zero());
    full.rows_mut(0, h).copy_from(xi);
    full.rows_mut(h, l).copy_from(&catalyst);
    s.apply_in_place(&mut full);
    let mut expected = DVector::from_element(h + l, T::zero());
    expected.rows_mut(0, h).copy_from(&tau);
    expected.rows_mut(h, l).copy_from(&catalyst);
    let residual = (&full - &expected).norm();
    if residual > tol {
        return Err(Error::NumericalFailure {
            residual,
            tolerance: tol,
        });
    }
    let complexity = catalyst.norm_squared();
    Ok(TransductionResult {
        tau,
        catalyst,
        complexity,
        residual,
    })
}

/// Orthonormal basis of the fixed private space `ker(I − S_LL)`, the space
/// catalysts are kept orthogonal to.
pub fn fixed_private_space<T, S>(s: &S) -> Vec<DVector<T>>
where
    T: ComplexField<RealField = f64> + Copy,
    S: SplitUnitary<T>,
{
    let h = s.dim_public();
    let l = s.dim_private();
    let m = s.to_dense();
    let s_ll = m.view((h, h), (l, l));
    let mut a = -s_ll.into_owned();
    for i in 0..l {
        a[(i, i)] += T::one();
    }
    let b = DVector::from_element(l, T::zero());
    min_norm_solve(&a, &b, KERNEL_CUTOFF).kernel
}

/// Runs the transduction with `k` controlled applications of `S`.
///
/// The construction works in `(C^k ⊗ H) ⊕ L` with a shared private
/// register: the counter slot `t` carries `ξ/sqrt(k)`, each application of
/// `S` consumes and restores the (absent) catalyst `v/sqrt(k)`, and the
/// output is the projection back onto the uniform counter. Dropping the
/// catalyst costs `‖τ' − τ‖ ≤ 2·sqrt(W(S, ξ)/k)`.
pub fn run_iterative<T, S>(s: &S, xi: &DVector<T>, k: usize) -> DVector<T>
where
    T: ComplexField<RealField = f64> + Copy,
    S: SplitUnitary<T>,
{
    assert!(k >= 1, "at least one application");
    let h = s.dim_public();
    let l = s.dim_private();
    let scale = T::from_real(1.0 / (k as f64).sqrt());
    let mut private = DVector::from_element(l, T::zero());
    let mut accumulated = DVector::from_element(h, T::zero());
    let mut buf = DVector::from_element(h + l, T::zero());
    for _ in 0..k {
        buf.rows_mut(0, h).copy_from(&(xi * scale));
        buf.rows_mut(h, l).copy_from(&private);
        s.apply_in_place(&mut buf);
        accumulated += buf.rows(0, h);
        private.copy_from(&buf.rows(h, l));
    }
    accumulated * scale
}

/// The re-weighting factor `α = sqrt(r/w)` that balances total weight and
/// effective resistance at `sqrt(r·w)` each.
pub fn rebalance_alpha(w: f64, r: f64) -> Result<f64> {
    if w <= 0.0 || r <= 0.0 || !w.is_finite() || !r.is_finite() {
        return Err(Error::domain(format!(
            "weight and resistance must be positive, got {w} and {r}"
        )));
    }
    Ok((r / w).sqrt())
}

/// `|<target, τ'>|²`: the probability that measuring in a basis containing
/// `target` yields it.
pub fn success_probability<T>(tau_prime: &DVector<T>, target: &DVector<T>) -> f64
where
    T: ComplexField<RealField = f64> + Copy,
{
    target.dotc(tau_prime).modulus_squared()
}
