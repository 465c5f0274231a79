//! Construction, verification and classification of SIC sets in
//! low-dimensional complex projective space.
//!
//! A SIC set is a configuration of n² points of CP^{n-1} that are
//! mutually equidistant in the Fubini-Study metric, equivalently rank-one
//! projectors {Pᵢ} with tr(PⱼPₖ) = 1/(n+1) off the diagonal and
//! (1/n)ΣPᵢ = I. This crate covers n = 2, 3, 4 at desk scale:
//!
//! - [`projective`]: rays, cross ratios, distances, projectors, the
//!   moment map, and SIC verification;
//! - [`heisenberg`]: Weyl-Heisenberg orbits, midpoint solutions, the
//!   one-parameter family S_θ, the Clifford element M and its
//!   eigenvector configuration, and fiducial classification;
//! - [`torus`]: the pinched-torus coordinates over the incircle and the
//!   separation trigonometry behind the curve plots;
//! - [`poly`]: exact rational multivariate polynomials, symmetric
//!   reduction, divided differences, resultants, and Sturm-based real
//!   root counting and isolation;
//! - [`classify`]: the symmetric system F₁,…,F₄ with its re-derivation,
//!   the six-condition disjunction, the per-t Case (iv) solver with its
//!   solution-count table, and the fake SIC nine-point configuration.

pub mod cmatrix;
pub mod classify;
pub mod error;
pub mod heisenberg;
pub mod poly;
pub mod projective;
pub mod torus;

pub use error::{Error, Result};
pub use projective::{
    collinear_triples, configuration_from_json, configuration_to_json, cross_ratio, fs_distance,
    is_correctly_separated, moment_map, on_incircle, projector_of, verify_sic, ComplexVector,
    Configuration, HermitianProjector, ProjectivePoint, SicReport, ALG_TOL, GEOM_TOL,
};
