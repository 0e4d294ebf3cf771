//! Exact computation kernel for split projective super-geometry.
//!
//! The crate provides, with exact rational arithmetic throughout:
//!
//! - [`superring`]: free Z2-graded commutative polynomial rings, canonical
//!   normal forms, the bosonic truncation, and parity-preserving
//!   homomorphisms, plus a parser for the expression grammar;
//! - [`superideal`]: homogeneous ideals with degree-truncated membership
//!   and normal forms via exact linear elimination;
//! - [`sheafcalc`]: cohomology bookkeeping for sums of line bundles on
//!   genus-zero curves and their pullbacks along degree-d maps;
//! - [`superscheme`]: descriptors of split super-schemes over projective
//!   space, super-dimension, canonical degree, and Calabi-Yau tests;
//! - [`moduli`]: stable-map dual-graph combinatorics, stabilization,
//!   forgetful maps, expected-dimension formulas, and genus-zero graph
//!   enumeration;
//! - [`chern`]: Chern and Todd class arithmetic in the truncated
//!   cohomology ring of projective space;
//! - [`cli`]: the `supergeom` command-line interface over all of the above.

pub mod chern;
pub mod cli;
pub mod error;
pub mod moduli;
pub mod sheafcalc;
pub mod superideal;
pub mod superring;
pub mod superscheme;

pub use error::{Error, Result};
