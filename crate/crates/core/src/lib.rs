//! Discrete energy minimization for single-director Cosserat shell models
//! with finite mid-plane strain.
//!
//! A configuration of the shell is a pair of fields over a flat rectangular
//! reference domain: a deformation `f: Ω → ℝ³` of the mid-plane and a
//! director `d: Ω → ℝ³` carrying thickness/shear/bending kinematics. The
//! crate provides:
//!
//! - [`kinematics`]: the fifteen 2×2 minors of the combined gradient
//!   `[∇fᵀ | ∇dᵀ]`, the orientation functional `J = d·(f,₁ × f,₂)`, and the
//!   membrane area ratio `√det(FᵀF)`.
//! - [`energy`]: a polyconvex stored-energy family with an orientation
//!   barrier that blows up as `J → 0⁺`, its membrane reduction, analytic
//!   first derivatives, and the dead-load functional.
//! - [`convexity`]: sampling probes for joint convexity of the energy in its
//!   polyconvexity arguments, rank-one convexity of the membrane density
//!   (with witness search), and the barrier blow-up scan.
//! - [`mesh`], [`field`], [`assembly`]: structured bilinear quadrilateral
//!   discretization, the four constraint modes (unconstrained, unit
//!   director, normal director, Kirchhoff-Love), and exact assembly of the
//!   discrete energy and its gradient over free degrees of freedom.
//! - [`solver`]: an orientation-preserving limited-memory quasi-Newton
//!   descent that keeps `J > 0` at every quadrature point along the way.

pub mod assembly;
pub mod convexity;
pub mod energy;
pub mod error;
pub mod field;
pub mod kinematics;
pub mod math;
pub mod mesh;
pub mod solver;

pub use assembly::{evaluate_kinematics, Problem, QuadKinematics};
pub use convexity::{
    blowup_scan, check_joint_convexity, find_rank_one_violation, ConvexityReport, PolyArgs,
    RankOneSearch, RankOneWitness, SegmentSample,
};
pub use energy::{
    load_value, objectivity_check, Density, DensityEval, EnergyParams, LoadSpec, MembraneDensity,
    ParamField, ReferenceDensity,
};
pub use error::Error;
pub use field::{BoundaryData, ConstraintMode, DofLayout, FieldState};
pub use kinematics::{area_ratio, minors, orientation_j, rotate, MinorVector};
pub use math::{Grad3x2, Mat3, Vec3};
pub use mesh::{BoundaryRegion, Edge, Mesh};
pub use solver::{
    minimize, nodal_normals, project_unit_director, Solution, SolverOptions, TerminationReason,
};
