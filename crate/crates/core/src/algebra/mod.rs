//! Exact algebraic substrate: free groups, group rings, Laurent
//! polynomials, integer matrices, and group presentations.

mod group_ring;
mod laurent;
mod matrix;
mod presentation;
mod word;

pub use group_ring::{fox_derivative, GroupRingElement};
pub use laurent::LaurentPoly;
pub use matrix::{smith_normal_form, IntMatrix, SmithForm};
pub use presentation::{simplify_presentation, Presentation, Simplification, Verdict};
pub use word::{Generator, Letter, Word};
