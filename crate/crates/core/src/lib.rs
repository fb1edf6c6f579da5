//! Band-primeness certificates and ribbon concordance obstructions for knot
//! diagrams given as PD codes.

pub mod corpus;
pub mod diagram;
pub mod error;
pub mod hfk;
pub mod invariants;
pub mod lattice;
pub mod matrix;
pub mod obstruct;
pub mod report;
pub mod tait;

pub use error::{Error, Result};
