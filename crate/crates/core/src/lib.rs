//! Exact computation and verification of the augmented Zagreb index (AZI)
//! on small graphs.
//!
//! All AZI values are exact rationals. Bounds are checked by exhaustive
//! enumeration of non-isomorphic graphs, with canonical labelling done in
//! crate.

pub mod arith;
pub mod cli;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod graph;
pub mod indices;
pub mod ng;
pub mod report;

pub use arith::{rat, Rational};
pub use error::{Error, Result};
pub use graph::{DegreeProfile, Graph};
