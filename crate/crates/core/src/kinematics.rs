//! Exact kinematic quantities of a shell configuration.
//!
//! For a deformation gradient `F = ∇f` and director gradient `G = ∇d` (both
//! 3×2), the fifteen 2×2 sub-determinants of the 2×6 combined gradient
//! `U = [Fᵀ | Gᵀ]` are the null-Lagrangian quantities behind the
//! polyconvexity structure of the stored energy:
//!
//! - `m₁, m₂, m₃` are the components of `f,₁ × f,₂` (minors of `F` alone),
//! - `m₄ … m₁₂` mix one row of `F` with one row of `G`,
//! - `m₁₃, m₁₄, m₁₅` are the components of `d,₁ × d,₂` (minors of `G` alone).
//!
//! The orientation functional `J(d, F) = d·(f,₁ × f,₂)` must stay positive
//! on admissible states; the membrane area ratio `√det(FᵀF) = |f,₁ × f,₂|`
//! is its director-free counterpart.

use crate::error::Error;
use crate::math::{
    all_finite_grad, all_finite_vec3, grad_from_columns, require_rotation, Grad3x2, Mat3, Vec3,
};

/// Tolerance for accepting a matrix as a rotation in [`rotate`].
pub const ROTATION_TOL: f64 = 1e-12;

/// The fifteen 2×2 sub-determinants of `[Fᵀ | Gᵀ]`, indexed 1-based as
/// `m(1) … m(15)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MinorVector(pub [f64; 15]);

impl MinorVector {
    /// 1-based access matching the customary numbering `m₁ … m₁₅`.
    #[inline]
    pub fn m(&self, l: usize) -> f64 {
        assert!((1..=15).contains(&l), "minor index out of range: {l}");
        self.0[l - 1]
    }

    /// `(m₁, m₂, m₃)`, the components of `f,₁ × f,₂`.
    #[inline]
    pub fn f_cross(&self) -> Vec3 {
        Vec3::new(self.0[0], self.0[1], self.0[2])
    }

    /// `(m₁₃, m₁₄, m₁₅)`, the components of `d,₁ × d,₂`.
    #[inline]
    pub fn g_cross(&self) -> Vec3 {
        Vec3::new(self.0[12], self.0[13], self.0[14])
    }

    /// Sum of squares of the mixed minors `m₄ … m₁₂`.
    #[inline]
    pub fn mixed_sq_sum(&self) -> f64 {
        self.0[3..12].iter().map(|m| m * m).sum()
    }

    /// Sum of squares of `m₄ … m₁₅` (the convex-argument minors).
    #[inline]
    pub fn tail_sq_sum(&self) -> f64 {
        self.0[3..].iter().map(|m| m * m).sum()
    }

    /// Sum of squares of all fifteen minors.
    #[inline]
    pub fn total_sq_sum(&self) -> f64 {
        self.0.iter().map(|m| m * m).sum()
    }
}

fn require_finite(f: &Grad3x2, g: &Grad3x2) -> Result<(), Error> {
    if !all_finite_grad(f) || !all_finite_grad(g) {
        return Err(Error::invalid("gradient with non-finite entries"));
    }
    Ok(())
}

/// Computes the fifteen 2×2 sub-determinants of `[Fᵀ | Gᵀ]` in the
/// customary order.
///
/// Entry (i, α) of a gradient is row i, column α. Writing `u, v` for the
/// columns of `F` and `w, z` for the columns of `G`:
/// `(m₁,m₂,m₃) = u × v`, `m₃ₐ₊ᵦ = F_{a1}G_{b2} − F_{a2}G_{b1}` for rows
/// `a, b ∈ {1,2,3}`, and `(m₁₃,m₁₄,m₁₅) = w × z`.
pub fn minors(f: &Grad3x2, g: &Grad3x2) -> Result<MinorVector, Error> {
    require_finite(f, g)?;
    let mut m = [0.0; 15];
    // Minors of F alone: the cross product of its columns.
    m[0] = f[(1, 0)] * f[(2, 1)] - f[(1, 1)] * f[(2, 0)];
    m[1] = f[(2, 0)] * f[(0, 1)] - f[(2, 1)] * f[(0, 0)];
    m[2] = f[(0, 0)] * f[(1, 1)] - f[(0, 1)] * f[(1, 0)];
    // Mixed minors: row a of F against row b of G, l = 3 + 3a + b (0-based rows).
    for a in 0..3 {
        for b in 0..3 {
            m[3 + 3 * a + b] = f[(a, 0)] * g[(b, 1)] - f[(a, 1)] * g[(b, 0)];
        }
    }
    // Minors of G alone: the cross product of its columns.
    m[12] = g[(1, 0)] * g[(2, 1)] - g[(1, 1)] * g[(2, 0)];
    m[13] = g[(0, 1)] * g[(2, 0)] - g[(0, 0)] * g[(2, 1)];
    m[14] = g[(0, 0)] * g[(1, 1)] - g[(0, 1)] * g[(1, 0)];
    Ok(MinorVector(m))
}

/// The orientation functional `J(d, F) = d·(f,₁ × f,₂)`.
///
/// The sign is meaningful: a negative value is a legal number but marks an
/// inadmissible state.
pub fn orientation_j(d: &Vec3, f: &Grad3x2) -> Result<f64, Error> {
    if !all_finite_vec3(d) || !all_finite_grad(f) {
        return Err(Error::invalid("non-finite director or gradient"));
    }
    Ok(d.dot(&f.column(0).cross(&f.column(1))))
}

/// The membrane area ratio `√det(FᵀF) = |f,₁ × f,₂| ≥ 0`.
pub fn area_ratio(f: &Grad3x2) -> Result<f64, Error> {
    if !all_finite_grad(f) {
        return Err(Error::invalid("non-finite gradient"));
    }
    let gram = f.transpose() * f;
    Ok(gram.determinant().max(0.0).sqrt())
}

/// Applies a rotation to a configuration: `(d, F, G) ↦ (Qd, QF, QG)`.
///
/// `q` must satisfy `QᵀQ = I`, `det Q = 1` within [`ROTATION_TOL`].
pub fn rotate(
    q: &Mat3,
    d: &Vec3,
    f: &Grad3x2,
    g: &Grad3x2,
) -> Result<(Vec3, Grad3x2, Grad3x2), Error> {
    require_rotation(q, ROTATION_TOL)?;
    if !all_finite_vec3(d) {
        return Err(Error::invalid("non-finite director"));
    }
    require_finite(f, g)?;
    Ok((q * d, q * f, q * g))
}

/// Convenience: gradient with the two unit columns of the flat reference
/// mid-plane, `F = (e₁ | e₂)`.
pub fn reference_gradient() -> Grad3x2 {
    grad_from_columns(Vec3::x(), Vec3::y())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn zeros() -> Grad3x2 {
        Grad3x2::zeros()
    }

    #[test]
    fn identity_midplane_has_unit_m3() {
        let m = minors(&reference_gradient(), &zeros()).unwrap();
        for l in 1..=15 {
            let expect = if l == 3 { 1.0 } else { 0.0 };
            assert_eq!(m.m(l), expect, "m{l}");
        }
    }

    #[test]
    fn unit_director_gradient_has_unit_m15() {
        let m = minors(&zeros(), &reference_gradient()).unwrap();
        for l in 1..=15 {
            let expect = if l == 15 { 1.0 } else { 0.0 };
            assert_eq!(m.m(l), expect, "m{l}");
        }
    }

    #[test]
    fn single_mixed_entry_isolates_m4() {
        let mut f = zeros();
        f[(0, 0)] = 1.0;
        let mut g = zeros();
        g[(0, 1)] = 1.0;
        let m = minors(&f, &g).unwrap();
        for l in 1..=15 {
            let expect = if l == 4 { 1.0 } else { 0.0 };
            assert_eq!(m.m(l), expect, "m{l}");
        }
    }

    #[test]
    fn orientation_of_reference_state() {
        let f = reference_gradient();
        assert_eq!(orientation_j(&Vec3::z(), &f).unwrap(), 1.0);
        assert_eq!(orientation_j(&(2.0 * Vec3::z()), &f).unwrap(), 2.0);
    }

    #[test]
    fn area_ratio_of_diagonal_stretch() {
        assert_eq!(area_ratio(&reference_gradient()).unwrap(), 1.0);
        let f = grad_from_columns(2.0 * Vec3::x(), 3.0 * Vec3::y());
        assert_relative_eq!(area_ratio(&f).unwrap(), 6.0, max_relative = 1e-15);
    }

    #[test]
    fn rotate_identity_is_noop() {
        let f = reference_gradient();
        let g = zeros();
        let d = Vec3::z();
        let (dr, fr, gr) = rotate(&Mat3::identity(), &d, &f, &g).unwrap();
        assert_eq!(dr, d);
        assert_eq!(fr, f);
        assert_eq!(gr, g);
    }

    #[test]
    fn rotate_half_turn_flips_inplane_director() {
        let q = Mat3::new(-1.0, 0.0, 0.0, 0.0, -1.0, 0.0, 0.0, 0.0, 1.0);
        let (dr, _, _) = rotate(&q, &Vec3::x(), &reference_gradient(), &zeros()).unwrap();
        assert_relative_eq!(dr, -Vec3::x(), epsilon = 1e-15);
    }

    #[test]
    fn rotate_rejects_non_rotation() {
        let q = Mat3::identity() * 2.0;
        let err = rotate(&q, &Vec3::z(), &reference_gradient(), &zeros()).unwrap_err();
        assert!(matches!(err, Error::InvalidInput(_)));
    }

    #[test]
    fn non_finite_input_is_rejected() {
        let mut f = reference_gradient();
        f[(0, 0)] = f64::NAN;
        assert!(minors(&f, &zeros()).is_err());
        assert!(orientation_j(&Vec3::z(), &f).is_err());
        assert!(area_ratio(&f).is_err());
    }
}
