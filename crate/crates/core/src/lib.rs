//! Identifying planar point sets with disks.
//!
//! A family of disks *identifies* a point set when every point lies in some
//! disk and no two points lie in exactly the same disks. This crate provides
//! exact rational geometry, an enumerator of all disk-realizable subsets, an
//! exact minimum solver, the known constructive upper bounds, closed-form
//! lower bounds and generators for the extremal instance families.

pub mod app;
pub mod constructions;
pub mod fixedline;
mod geometry_util;
pub mod instances;
pub mod kernel;
pub mod oracle;
pub mod solver;
pub mod subset;

pub use kernel::{GeneralizedDisk, RPoint, Rational};
pub use subset::Subset;
