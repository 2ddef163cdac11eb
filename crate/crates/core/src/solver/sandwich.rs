use std::fmt;

use thiserror::Error;

use super::{solve_exact, verify, Mode, SolveError};
use crate::constructions::{identify_collinear, identify_general_position, identify_greedy_half};
use crate::fixedline::{identify_fixed_r_linear, LineInstance};
use crate::instances::{bound_log, bound_sqrt};
use crate::kernel::{check_general_configuration, RPoint};
use crate::oracle::{all_collinear, RadiusMode};

/// Lower bounds, the exact optimum and the sizes of the constructions that
/// apply to a point set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SandwichReport {
    pub n: usize,
    pub lower: Vec<(&'static str, usize)>,
    pub optimum: usize,
    pub upper: Vec<(&'static str, usize)>,
}

impl SandwichReport {
    pub fn holds(&self) -> bool {
        self.lower.iter().all(|(_, l)| *l <= self.optimum)
            && self.upper.iter().all(|(_, u)| self.optimum <= *u)
    }
}

impl fmt::Display for SandwichReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let row = |v: &[(&str, usize)]| {
            v.iter().map(|(k, x)| format!("{k}={x}")).collect::<Vec<_>>().join(" ")
        };
        write!(f, "n={} lower[{}] optimum={} upper[{}]", self.n, row(&self.lower), self.optimum, row(&self.upper))
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SandwichError {
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error("bounds violated: {0}")]
    Violated(SandwichReport),
    #[error("construction {0} does not identify the points")]
    InvalidConstruction(&'static str),
}

/// Solves exactly and checks `lower bounds <= optimum <= constructions`.
pub fn sandwich_check(points: &[RPoint], radius_mode: &RadiusMode) -> Result<SandwichReport, SandwichError> {
    let n = points.len();
    let optimum = solve_exact(points, Mode::Identify, radius_mode)?.size;
    let mut lower = Vec::new();
    if n > 0 {
        lower.push(("log", bound_log(n).expect("n >= 1")));
        lower.push(("sqrt", bound_sqrt(n).expect("n >= 1")));
    }
    let collinear = all_collinear(points);
    let mut upper = Vec::new();
    let mut add = |name: &'static str, disks: Vec<crate::kernel::GeneralizedDisk>| {
        if !verify(points, &disks, Mode::Identify).is_valid() {
            return Err(SandwichError::InvalidConstruction(name));
        }
        upper.push((name, disks.len()));
        Ok(())
    };
    match radius_mode {
        RadiusMode::Free => {
            if collinear {
                add("collinear", identify_collinear(points).expect("collinear input"))?;
            }
            add("greedy", identify_greedy_half(points).expect("distinct input"))?;
            if n > 0 && check_general_configuration(points).is_ok() {
                add("genpos", identify_general_position(points).expect("general input"))?;
            }
        }
        RadiusMode::Fixed(r2) => {
            if collinear {
                let (inst, _) = LineInstance::from_points(points, r2).expect("collinear input");
                let fam = identify_fixed_r_linear(&inst);
                // checked on the line instance, which is the same set up to
                // a similarity
                let w = inst.witnesses(&fam).expect("runs within the diameter");
                if !verify(&inst.points(), &w, Mode::Identify).is_valid() {
                    return Err(SandwichError::InvalidConstruction("fixedline"));
                }
                upper.push(("fixedline", fam.len()));
            }
        }
    }
    let report = SandwichReport { n, lower, optimum, upper };
    if report.holds() {
        Ok(report)
    } else {
        Err(SandwichError::Violated(report))
    }
}
