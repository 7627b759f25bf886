//! Exact commutative algebra over prime fields.
//!
//! Reduced Groebner bases, Hilbert series and multiplicities of graded
//! quotients, Frobenius powers, roots and closures, Fedder's F-purity test,
//! HSL numbers of hypersurfaces, and checks of multiplicity bounds built on
//! top of them.

pub mod cli;
pub mod error;
pub mod field;
pub mod frobenius;
pub mod groebner;
pub mod hilbert;
pub mod poly;
pub mod session;
pub mod verify;

pub use error::{Error, Result};
