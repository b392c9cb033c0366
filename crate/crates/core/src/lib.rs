//! Orbit structure of centralizers on subregular Springer fibres.
//!
//! For a simple algebraic group in good characteristic and a subregular
//! nilpotent element `e`, the Springer fibre of `e` is a Dynkin curve: a
//! connected union of projective lines, one family per simple root. This
//! crate computes, classifies and cross-checks:
//!
//! * root systems, highest roots and diagram foldings ([`roots`]);
//! * Dynkin curves, their cell partitions and orbit censuses ([`curve`]);
//! * the finiteness classifications for the fibre, for the intersections of
//!   the subregular orbit with minimal nilradicals, and for the subregular
//!   orbital varieties ([`classify`]);
//! * Borel-stable ideals and their abelianizations ([`ideals`]);
//! * exact-rational matrix models of the classical Lie algebras with explicit
//!   subregular representatives ([`matrixlie`]);
//! * brute-force Borel orbit enumeration over small prime fields
//!   ([`fforacle`]).
//!
//! Simple roots are always numbered `1..=rank` following the Bourbaki
//! labelling.
//!
//! ```
//! use subregular::{census, CartanType, TypeLabel};
//!
//! let b4 = CartanType::new(TypeLabel::B, 4).unwrap();
//! let census = census::fibre_orbit_census(b4);
//! assert_eq!(census.total.finite(), Some(7));
//! ```

pub mod classify;
pub mod cli;
pub mod curve;
mod error;
pub mod fforacle;
pub mod ideals;
pub mod linalg;
pub mod matrixlie;
pub mod roots;

pub use curve::census;
pub use error::{Error, Result};
pub use roots::{CartanType, Root, RootSystem, TypeLabel};
