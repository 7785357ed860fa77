//! Exact computation of the D-module composition multiplicities of local
//! cohomology with support in determinantal, symmetric-determinantal and
//! Pfaffian ideals.
//!
//! The crate is layered bottom-up:
//!
//! - [`partitions`]: partitions, dominant weights and the shape transforms
//!   (conjugation, doubling, duplication, box complements).
//! - [`qseries`]: exact Laurent polynomials in `q` and Gauss polynomials.
//! - [`bott`]: Bott's algorithm on Grassmannians and the closed-form
//!   isotypic predicates derived from it.
//! - [`characters`]: weight sets of the simple equivariant D-modules,
//!   witness weights, Cauchy decompositions, ideal characters and the
//!   filtration check.
//! - [`extmult`]: Ext multiplicities at witness weights, by closed form,
//!   by enumeration, and by running Bott's algorithm on the sheaf model.
//! - [`loccoh`]: the polynomials `H_p(q)`, their assembly from Ext
//!   multiplicities, and local cohomological dimension.

pub mod bott;
pub mod characters;
pub mod error;
pub mod extmult;
pub mod loccoh;
pub mod partitions;
pub mod qseries;
pub mod space;

pub use error::{Error, Result};
pub use partitions::{DominantWeight, Partition};
pub use qseries::LaurentPoly;
pub use space::Space;
