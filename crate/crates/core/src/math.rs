//! Small fixed-size linear algebra aliases and helpers.
//!
//! Gradients of the mid-plane deformation and of the director are 3×2
//! matrices stored column-major, so column α is the partial derivative with
//! respect to the α-th reference coordinate. That makes cross-product
//! identities like `f,₁ × f,₂` direct column reads.

use crate::error::Error;
use nalgebra::{Matrix3, Matrix3x2, Vector2, Vector3};

/// 3-vector (deformation values, directors, normals).
pub type Vec3 = Vector3<f64>;
/// 2-vector (reference-plane quantities).
pub type Vec2 = Vector2<f64>;
/// Gradient of a 3-vector field over the 2-d reference domain; columns are
/// the partial derivatives with respect to `x₁` and `x₂`.
pub type Grad3x2 = Matrix3x2<f64>;
/// Dense 3×3 matrix (rotations).
pub type Mat3 = Matrix3<f64>;

/// Builds a gradient from its two columns.
pub fn grad_from_columns(c1: Vec3, c2: Vec3) -> Grad3x2 {
    Grad3x2::from_columns(&[c1, c2])
}

pub fn all_finite_grad(m: &Grad3x2) -> bool {
    m.iter().all(|v| v.is_finite())
}

pub fn all_finite_vec3(v: &Vec3) -> bool {
    v.iter().all(|v| v.is_finite())
}

/// Checks `QᵀQ = I` and `det Q = 1` within `tol`.
pub fn is_rotation(q: &Mat3, tol: f64) -> bool {
    let gram = q.transpose() * q;
    let ortho_err = (gram - Mat3::identity()).abs().max();
    q.iter().all(|v| v.is_finite()) && ortho_err <= tol && (q.determinant() - 1.0).abs() <= tol
}

/// Validates that a matrix is a rotation, for operations that take one.
pub fn require_rotation(q: &Mat3, tol: f64) -> Result<(), Error> {
    if is_rotation(q, tol) {
        Ok(())
    } else {
        Err(Error::invalid(format!(
            "matrix is not a rotation within tolerance {tol:e}"
        )))
    }
}
