//! Exact rational geometry: points, generalized disks, the orientation and
//! in-circle predicates, convex hulls and Delaunay triangulations.

mod delaunay;
mod disk;
mod hull;
mod point;
mod predicates;
pub mod rational;

use std::cmp::Ordering;

use num_traits::{Signed, Zero};
use thiserror::Error;

pub use delaunay::{delaunay, Triangulation};
pub use disk::GeneralizedDisk;
pub use hull::convex_hull;
pub use point::RPoint;
pub use predicates::{
    check_distinct, check_general_configuration, check_no_three_collinear, circumcircle_center, circumdisk,
    in_circumcircle, orientation,
};
pub use rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn of(v: &Rational) -> Sign {
        if v.is_zero() {
            Sign::Zero
        } else if v.is_positive() {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }

    pub fn from_ordering(o: Ordering) -> Sign {
        match o {
            Ordering::Less => Sign::Negative,
            Ordering::Equal => Sign::Zero,
            Ordering::Greater => Sign::Positive,
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Negative => -1,
            Sign::Zero => 0,
            Sign::Positive => 1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Negative => Sign::Positive,
            Sign::Zero => Sign::Zero,
            Sign::Positive => Sign::Negative,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KernelError {
    #[error("three collinear points at indices {0}, {1}, {2}")]
    Collinear(usize, usize, usize),
    #[error("four cocyclic points at indices {0}, {1}, {2}, {3}")]
    Cocyclic(usize, usize, usize, usize),
    #[error("duplicate points at indices {0} and {1}")]
    Duplicate(usize, usize),
    #[error("degenerate input: collinear triple")]
    CollinearTriple,
    #[error("need at least {needed} points, got {got}")]
    TooFewPoints { needed: usize, got: usize },
    #[error("negative squared radius")]
    NegativeRadius,
    #[error("half-plane with zero normal")]
    DegenerateHalfPlane,
}
