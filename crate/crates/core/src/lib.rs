//! Exact torus-action combinatorics of the Grassmannian of 2-planes.
//!
//! Plücker coordinates, strata and their moment polytopes, cross-ratio
//! coordinates on the quotient, virtual parameter spaces of strata and
//! limits of one-parameter degenerations, all over the Gaussian rationals.

pub mod error;
pub mod fixtures;
pub mod laurent;
pub mod linalg;
pub mod sampling;
pub mod scalar;

pub mod crossratio;
pub mod degeneration;
pub mod gm_config;
pub mod golden;
pub mod grassmann;
pub mod momentmap;
pub mod param_space;
pub mod strata;
pub mod suites;

pub use crossratio::{
    classify_cross_ratio, cross_ratio_from_z, embed_phi, evaluate_cross_ratio, identity_suite, z_coordinates,
    Classification, CrossRatioValue, CrossTuple, Forced, Tuple4,
};
pub use degeneration::{continuity_check, limit_point, plucker_laurent, LaurentPlane, LimitReport};
pub use error::{Error, Result};
pub use gm_config::{config_of_plane, cross_ratio_of_points, normalize_config, plane_of_config, PointConfiguration};
pub use grassmann::{plucker_of, reconstruct_torus, torus_act, Pair, Plane, PluckerVector, TorusElement};
pub use laurent::{laurent_limit_ratio, LaurentScalar};
pub use momentmap::{
    admissible_polytope, in_relative_interior, moment_map, theorem6_form, AdmissiblePolytope, HyperplaneForm,
    HypersimplexPoint,
};
pub use param_space::{
    check_containment, member_of_virtual, project_strong, same_orbit, virtual_space_of, VirtualSpaceDescription,
};
pub use scalar::{proj_canonicalize, GaussianRational, ProjectivePoint, Rational};
pub use strata::{
    enumerate_strata, is_admissible, parallel_structure_of, signature_of, stabilizer_lattice, ParallelStructure,
    Signature,
};
