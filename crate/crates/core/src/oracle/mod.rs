//! Independent ways of computing the same numbers as [`crate::schubert`]:
//! restrictions of type-A double Schubert polynomials, structure constants
//! solved from restriction tables alone, and fixed-point pairings on
//! Bott-Samelson manifolds evaluated at exact rational points.

mod double_schubert;
mod localize;
mod pairing;

pub use double_schubert::{calibrate, oracle_restriction_h, Convention, DoubleSchubert};
pub use localize::{localization_solve, Localizer};
pub use pairing::{ideal_pair_alternating, pairing_matrix, tangent_weight, woods_hole_pair, RationalSample, Sheaf};
