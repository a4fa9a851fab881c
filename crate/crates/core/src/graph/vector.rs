use std::ops::{Add, Mul, Neg, Sub};

use nalgebra::DVector;
use num_complex::Complex64;

/// A complex amplitude vector over the oriented edges `E ∪ E'`.
///
/// Amplitudes are stored with respect to the fixed orientation (base edges
/// `A -> B`, `s -> s'`, `t' -> t`); querying an edge against its orientation
/// negates the amplitude, see [`ExtendedGraph::oriented_amplitude`].
///
/// [`ExtendedGraph::oriented_amplitude`]: super::ExtendedGraph::oriented_amplitude
#[derive(Clone, Debug, PartialEq)]
pub struct EdgeVector {
    amps: DVector<Complex64>,
}

impl EdgeVector {
    pub fn zeros(dim: usize) -> Self {
        EdgeVector {
            amps: DVector::from_element(dim, Complex64::ZERO),
        }
    }

    /// The basis vector `|e>`.
    pub fn basis(dim: usize, e: usize) -> Self {
        let mut v = EdgeVector::zeros(dim);
        v.set_real(e, 1.0);
        v
    }

    pub fn from_dvector(amps: DVector<Complex64>) -> Self {
        EdgeVector { amps }
    }

    pub fn from_real(amps: &DVector<f64>) -> Self {
        EdgeVector {
            amps: amps.map(|x| Complex64::new(x, 0.0)),
        }
    }

    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn amplitude(&self, e: usize) -> Complex64 {
        self.amps[e]
    }

    pub fn set(&mut self, e: usize, value: Complex64) {
        self.amps[e] = value;
    }

    pub fn set_real(&mut self, e: usize, value: f64) {
        self.amps[e] = Complex64::new(value, 0.0);
    }

    pub fn norm(&self) -> f64 {
        self.amps.norm()
    }

    pub fn norm_squared(&self) -> f64 {
        self.amps.norm_squared()
    }

    /// Inner product `<self, other>`, conjugate-linear in `self`.
    pub fn inner(&self, other: &EdgeVector) -> Complex64 {
        self.amps.dotc(&other.amps)
    }

    /// `‖self − other‖`.
    pub fn distance(&self, other: &EdgeVector) -> f64 {
        (&self.amps - &other.amps).norm()
    }

    /// Largest imaginary part in absolute value; zero for real vectors.
    pub fn max_imag(&self) -> f64 {
        self.amps.iter().map(|c| c.im.abs()).fold(0.0, f64::max)
    }

    pub fn as_dvector(&self) -> &DVector<Complex64> {
        &self.amps
    }

    pub fn into_dvector(self) -> DVector<Complex64> {
        self.amps
    }

    /// Real parts as an `f64` vector; walk states stay real throughout.
    pub fn real_vector(&self) -> DVector<f64> {
        self.amps.map(|c| c.re)
    }
}

macro_rules! edge_vector_binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl $trait<&EdgeVector> for &EdgeVector {
            type Output = EdgeVector;
            fn $method(self, rhs: &EdgeVector) -> EdgeVector {
                EdgeVector { amps: &self.amps $op &rhs.amps }
            }
        }
        impl $trait<&EdgeVector> for EdgeVector {
            type Output = EdgeVector;
            fn $method(self, rhs: &EdgeVector) -> EdgeVector {
                EdgeVector { amps: self.amps $op &rhs.amps }
            }
        }
        impl $trait<EdgeVector> for &EdgeVector {
            type Output = EdgeVector;
            fn $method(self, rhs: EdgeVector) -> EdgeVector {
                EdgeVector { amps: &self.amps $op rhs.amps }
            }
        }
        impl $trait<EdgeVector> for EdgeVector {
            type Output = EdgeVector;
            fn $method(self, rhs: EdgeVector) -> EdgeVector {
                EdgeVector { amps: self.amps $op rhs.amps }
            }
        }
    };
}

edge_vector_binop!(Add, add, +);
edge_vector_binop!(Sub, sub, -);

impl Neg for &EdgeVector {
    type Output = EdgeVector;
    fn neg(self) -> EdgeVector {
        EdgeVector { amps: -&self.amps }
    }
}

impl Neg for EdgeVector {
    type Output = EdgeVector;
    fn neg(self) -> EdgeVector {
        EdgeVector { amps: -self.amps }
    }
}

impl Mul<f64> for &EdgeVector {
    type Output = EdgeVector;
    fn mul(self, rhs: f64) -> EdgeVector {
        EdgeVector {
            amps: &self.amps * Complex64::new(rhs, 0.0),
        }
    }
}

impl Mul<f64> for EdgeVector {
    type Output = EdgeVector;
    fn mul(self, rhs: f64) -> EdgeVector {
        EdgeVector {
            amps: self.amps * Complex64::new(rhs, 0.0),
        }
    }
}

impl Mul<Complex64> for &EdgeVector {
    type Output = EdgeVector;
    fn mul(self, rhs: Complex64) -> EdgeVector {
        EdgeVector {
            amps: &self.amps * rhs,
        }
    }
}
