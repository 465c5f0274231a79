//! Exact polynomial machinery: sparse multivariate arithmetic over
//! rationals, symmetric reduction, divided differences, resultants, and
//! real-root counting and isolation.

pub(crate) mod ipoly;
pub mod multipoly;
pub mod resultant;
pub mod unipoly;

pub use multipoly::{elementary_symmetric, parse_poly, rat, rat_frac, MultiPoly, Rat};
pub use resultant::resultant;
pub use unipoly::{real_roots, sturm_count, RatPoly, SturmChain, UniRealPoly};
