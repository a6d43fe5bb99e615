use std::fmt::Debug;

use super::Scalar;

/// Coefficient ring for matrices and tensors: exact rationals or polynomials over them.
pub trait Coeff: Clone + PartialEq + Debug + Send + Sync {
    fn zero() -> Self;
    fn from_scalar(s: Scalar) -> Self;
    fn is_zero(&self) -> bool;
    fn add_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn scale(&self, s: &Scalar) -> Self;
    fn neg_ref(&self) -> Self;

    fn one() -> Self {
        Self::from_scalar(Scalar::one())
    }

    fn add_assign_ref(&mut self, other: &Self) {
        *self = self.add_ref(other);
    }

    /// `self += a * s`, skipping the work when either factor vanishes.
    fn add_scaled(&mut self, a: &Self, s: &Scalar) {
        if !s.is_zero() && !a.is_zero() {
            *self = self.add_ref(&a.scale(s));
        }
    }
}

impl Coeff for Scalar {
    fn zero() -> Self {
        Scalar::zero()
    }
    fn from_scalar(s: Scalar) -> Self {
        s
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn scale(&self, s: &Scalar) -> Self {
        self * s
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn add_assign_ref(&mut self, other: &Self) {
        *self += other;
    }
    fn add_scaled(&mut self, a: &Self, s: &Scalar) {
        if !s.is_zero() && !a.is_zero() {
            *self += a * s;
        }
    }
}
