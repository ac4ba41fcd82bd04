//! Exact arithmetic: odd prime fields, their quadratic extension, GF(2^k),
//! and quadrance / Poincaré-distance geometry.

mod geometry;
mod gf2k;
mod prime;
mod quadext;

pub use geometry::{
    circle_points, count_intersections_bruteforce, intersection_discriminant, intersection_table,
    predicted_intersections, predicted_intersections_null, quadrance, Point,
};
pub use gf2k::{BinaryFieldSpec, Gf2kOp};
pub use prime::{field_arith, is_prime, odd_primes, FieldElement, FieldOp, FieldSpec};
pub use quadext::{mobius_action, poincare_distance, Mobius, QuadExtElement};
