//! Dense linear-algebra helpers: minimum-norm singular solves, kernel
//! extraction, and random unitaries.
//!
//! Walk operators are real orthogonal matrices, so their solves run in `f64`;
//! the same code instantiates at `Complex<f64>` for arbitrary unitaries.

use nalgebra::{ComplexField, DMatrix, DVector};
use num_complex::Complex64;
use rand::Rng;

/// Result of a minimum-norm least-squares solve of `A x = b`.
pub struct MinNormSolution<T: ComplexField> {
    /// Minimum-norm solution, orthogonal to the kernel of `A`.
    pub x: DVector<T>,
    /// Number of singular values above the cutoff.
    pub rank: usize,
    /// Orthonormal basis of the (numerical) kernel of `A`.
    pub kernel: Vec<DVector<T>>,
    /// `‖A x − b‖`.
    pub residual: f64,
}

/// Solves `A x = b` in the minimum-norm least-squares sense.
///
/// Singular values below `rel_cutoff` times the largest one are treated as
/// zero; the corresponding right singular vectors span the reported kernel.
pub fn min_norm_solve<T>(a: &DMatrix<T>, b: &DVector<T>, rel_cutoff: f64) -> MinNormSolution<T>
where
    T: ComplexField<RealField = f64> + Copy,
{
    assert!(a.is_square(), "min_norm_solve expects a square system");
    assert_eq!(a.nrows(), b.len(), "system shape mismatch");
    let svd = a.clone().svd(true, true);
    let u = svd.u.as_ref().expect("svd with u");
    let v_t = svd.v_t.as_ref().expect("svd with v_t");
    let sigma = &svd.singular_values;
    let sigma_max = sigma.iter().cloned().fold(0.0_f64, f64::max);
    let cutoff = rel_cutoff * sigma_max;

    // x = V Σ⁺ Uᴴ b, dropping directions below the cutoff.
    let mut y = u.ad_mul(b);
    let mut rank = 0;
    let mut kernel = Vec::new();
    for i in 0..sigma.len() {
        if sigma[i] > cutoff {
            y[i] *= T::from_real(1.0 / sigma[i]);
            rank += 1;
        } else {
            y[i] = T::zero();
            kernel.push(v_t.row(i).adjoint());
        }
    }
    let x = v_t.ad_mul(&y);
    let residual = (a * &x - b).norm();
    MinNormSolution {
        x,
        rank,
        kernel,
        residual,
    }
}

/// Largest entrywise deviation of `Mᴴ M` from the identity.
pub fn unitarity_defect<T>(m: &DMatrix<T>) -> f64
where
    T: ComplexField<RealField = f64> + Copy,
{
    let mut prod = m.ad_mul(m);
    for i in 0..prod.nrows() {
        prod[(i, i)] -= T::one();
    }
    prod.iter().map(|c| c.modulus()).fold(0.0, f64::max)
}

fn standard_normal(rng: &mut impl Rng) -> f64 {
    // Box-Muller; the lower clamp keeps ln() finite.
    let u: f64 = rng.random::<f64>().max(1e-300);
    let v: f64 = rng.random();
    (-2.0 * u.ln()).sqrt() * (std::f64::consts::TAU * v).cos()
}

/// Haar-random unitary: QR of a complex Ginibre matrix with the phases of
/// the diagonal of R absorbed into Q.
pub fn random_unitary(dim: usize, rng: &mut impl Rng) -> DMatrix<Complex64> {
    let g = DMatrix::from_fn(dim, dim, |_, _| {
        Complex64::new(standard_normal(rng), standard_normal(rng))
    });
    let qr = g.qr();
    let r = qr.r();
    let mut q = qr.q();
    for i in 0..dim {
        let d = r[(i, i)];
        if d.norm() > 0.0 {
            let phase = d / d.norm();
            for k in 0..dim {
                q[(k, i)] *= phase;
            }
        }
    }
    q
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn random_unitary_is_unitary() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for dim in [2, 5, 16] {
            let u = random_unitary(dim, &mut rng);
            assert!(unitarity_defect(&u) < 1e-12);
        }
    }

    #[test]
    fn min_norm_solve_singular_system() {
        // A = diag(1, 0) over 2 dims: b = (2, 0) is consistent and the
        // minimum-norm solution has no kernel component.
        let a = DMatrix::<f64>::from_diagonal(&DVector::from_vec(vec![1.0, 0.0]));
        let b = DVector::from_vec(vec![2.0, 0.0]);
        let sol = min_norm_solve(&a, &b, 1e-10);
        assert_eq!(sol.rank, 1);
        assert_eq!(sol.kernel.len(), 1);
        assert!((sol.x[0] - 2.0).abs() < 1e-14);
        assert!(sol.x[1].abs() < 1e-14);
        assert!(sol.residual < 1e-14);
    }

    #[test]
    fn min_norm_solution_is_orthogonal_to_kernel() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        // Rank-deficient random complex system with a consistent rhs.
        let u = random_unitary(6, &mut rng);
        let v = random_unitary(6, &mut rng);
        let sigma =
            DVector::from_vec(vec![2.0, 1.5, 0.7, 0.3, 0.0, 0.0]).map(|x| Complex64::new(x, 0.0));
        let a = &u * DMatrix::from_diagonal(&sigma) * v.adjoint();
        let x0 = v.column(0).into_owned() + v.column(2).into_owned();
        let b = &a * &x0;
        let sol = min_norm_solve(&a, &b, 1e-10);
        assert_eq!(sol.rank, 4);
        assert!(sol.residual < 1e-12);
        for z in &sol.kernel {
            assert!(sol.x.dotc(z).norm() < 1e-12);
        }
    }
}
