//! Constructive upper bounds: collinear points, the greedy half-plane
//! method, general configuration via a six-partition and Delaunay
//! triangles, and the grid families.

mod collinear;
mod general;
mod greedy;
mod grid;
mod sixpart;

use thiserror::Error;

use crate::kernel::KernelError;

pub use collinear::identify_collinear;
pub use general::{
    identify_general_position, identify_general_position_traced, trichromatic_triangle, Round,
};
pub use greedy::identify_greedy_half;
pub use grid::{identify_grid_2xn, identify_grid_halfplanes, identify_grid_long};
pub use sixpart::{six_partition, Line, SixPartition};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConstructionError {
    #[error(transparent)]
    Kernel(#[from] KernelError),
    #[error("points are not collinear")]
    NotCollinear,
    #[error("region {0} is empty")]
    EmptyRegion(usize),
    #[error("no triangle has a vertex in each region")]
    NoTrichromatic,
    #[error("no six-partition found")]
    SearchFailed,
    #[error("{0}")]
    Precondition(String),
    #[error("grid subset {0} is not cut out by any disk")]
    Unrealizable(String),
}
