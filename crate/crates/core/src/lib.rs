//! Exact algebra for positive allowable Lefschetz fibrations over the disk
//! whose fiber is a planar surface.
//!
//! The crate is `no_std` (it needs `alloc`). It covers:
//!
//! - [`algebra`]: reduced free-group words, integral group rings, Fox
//!   derivatives, Laurent polynomials, integer matrices with Smith normal
//!   form, and Tietze simplification of presentations.
//! - [`surface`]: the `r`-holed sphere, its standard simple closed curves,
//!   and Dehn twists acting on the free fundamental group of the page.
//! - [`lefschetz`]: vanishing-cycle data, the handle chain complex of the
//!   total space, its homology and fundamental group, and the family `X_n`.
//! - [`knot`]: Alexander polynomials of deficiency-one presentations, the
//!   `f(t) f(t^-1)` factorization for ribbon knots, and the Casson surgery
//!   formula.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod algebra;
mod error;
pub mod knot;
pub mod lefschetz;
pub mod surface;

pub use error::{Error, Result};
