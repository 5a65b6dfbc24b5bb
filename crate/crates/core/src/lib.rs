//! Exact arithmetic for braided dendriform and tridendriform algebras on
//! decorated planar trees, their braided Hopf structures, and the
//! combinatorics of the underlying tree families.

pub mod axioms;
pub mod braid;
pub mod dendriform;
pub mod error;
pub mod forest;
pub mod hopf;
pub mod linear;
pub mod report;
pub mod tensor;
pub mod trees;
pub mod tridendriform;

pub use error::{Error, Result};
pub use linear::{LinComb, Rational, Word};
