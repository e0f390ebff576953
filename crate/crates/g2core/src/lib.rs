//! Exact computations for G2 structures with characteristic torsion on
//! seven-dimensional homogeneous spaces.

pub mod clifford;
pub mod error;
pub mod exact;
pub mod exterior;
pub mod g2lie;
pub mod invariants;
pub mod torsion;
pub mod curvature;
pub mod geometry;
pub mod properties;
pub mod reductive;
pub mod report;

pub use error::{AlgebraError, Result};
