//! Finite group cohomology, unit-class modules and Hesse-curve arithmetic,
//! assembled into checkable Brauer group computations.

pub mod brauer;
pub mod checks;
pub mod cohomology;
pub mod descriptor;
pub mod error;
pub mod field;
mod field_table;
pub mod gmodule;
pub mod group;
pub mod hesse;
pub mod kummer;
pub mod lattice;
pub mod poly;
pub mod smith;
pub mod weierstrass;
pub mod zmod;

pub use error::{Error, Result};
