//! Exact verification and exact minimum identifying families.
//!
//! The optimum is a minimum test cover of the hypergraph of realizable
//! subsets. In identify mode a phantom element that lies in no edge is added,
//! so covering a point is the same as separating it from the phantom.

mod cover;
mod sandwich;
mod verify;

use thiserror::Error;

use crate::kernel::{check_distinct, GeneralizedDisk, KernelError, RPoint};
use crate::oracle::{realizable_subsets, realizable_subsets_fixed_r, Hypergraph, RadiusMode};
use cover::{CoverError, Problem};

pub use sandwich::{sandwich_check, SandwichError, SandwichReport};
pub use verify::{verify, Certificate, Mode, Status};

/// Point count above which `solve_exact` refuses to run, unless overridden
/// by the `DISKIDENT_CAP` environment variable.
pub const DEFAULT_CAP: usize = 16;

/// Hard limit of the bitmask search.
pub const MAX_POINTS: usize = 63;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveResult {
    pub disks: Vec<GeneralizedDisk>,
    pub size: usize,
    pub optimal: bool,
    pub mode: Mode,
    pub radius_mode: RadiusMode,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SolveError {
    #[error("{n} points exceed the solver cap of {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error(transparent)]
    Kernel(#[from] KernelError),
    #[error("no disk separates points {0} and {1}")]
    Infeasible(usize, usize),
    #[error("no disk covers point {0}")]
    Uncoverable(usize),
}

/// The cap in effect: `DISKIDENT_CAP` if set to a number, else the default.
pub fn configured_cap() -> usize {
    std::env::var("DISKIDENT_CAP")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_CAP)
}

pub fn solve_exact(
    points: &[RPoint],
    mode: Mode,
    radius_mode: &RadiusMode,
) -> Result<SolveResult, SolveError> {
    solve_exact_with_cap(points, mode, radius_mode, configured_cap())
}

pub fn solve_exact_with_cap(
    points: &[RPoint],
    mode: Mode,
    radius_mode: &RadiusMode,
    cap: usize,
) -> Result<SolveResult, SolveError> {
    let n = points.len();
    if n > cap.min(MAX_POINTS) {
        return Err(SolveError::CapExceeded { n, cap: cap.min(MAX_POINTS) });
    }
    check_distinct(points)?;
    let h = match radius_mode {
        RadiusMode::Free => realizable_subsets(points),
        RadiusMode::Fixed(r2) => realizable_subsets_fixed_r(points, r2),
    };
    let picked = solve_hypergraph(&h, mode)?;
    let disks: Vec<GeneralizedDisk> = picked.iter().map(|&k| h.edges[k].witness.clone()).collect();
    Ok(SolveResult {
        size: disks.len(),
        disks,
        optimal: true,
        mode,
        radius_mode: radius_mode.clone(),
    })
}

/// Indices of a minimum family of edges of `h` that identifies (or just
/// separates) its points.
pub fn solve_hypergraph(h: &Hypergraph, mode: Mode) -> Result<Vec<usize>, SolveError> {
    let n = h.points.len();
    assert!(n <= MAX_POINTS);
    let masks: Vec<u64> = h
        .edges
        .iter()
        .map(|e| e.subset.as_u64().expect("edge within 63 points"))
        .collect();
    // Edges with the same cut are interchangeable; keep the first of each.
    let full = if n == 0 { 0 } else { u64::MAX >> (64 - n) };
    let mut seen = std::collections::HashSet::new();
    let mut kept = Vec::new();
    for (k, &m) in masks.iter().enumerate() {
        let key = match mode {
            Mode::Identify => m,
            Mode::SeparateOnly => m.min(!m & full),
        };
        if seen.insert(key) {
            kept.push(k);
        }
    }
    let n_elems = match mode {
        Mode::Identify => n + 1,
        Mode::SeparateOnly => n,
    };
    let problem = Problem::new(n_elems, kept.iter().map(|&k| masks[k]).collect());
    match problem.solve() {
        Ok(sol) => Ok(sol.into_iter().map(|i| kept[i]).collect()),
        Err(CoverError::Inseparable(u, v)) if v == n => Err(SolveError::Uncoverable(u)),
        Err(CoverError::Inseparable(u, v)) => Err(SolveError::Infeasible(u, v)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::rational::{frac, int};

    fn pts(v: &[(i64, i64)]) -> Vec<RPoint> {
        v.iter().map(|&(x, y)| RPoint::from_ints(x, y)).collect()
    }

    #[test]
    fn small_free_optima() {
        let line = pts(&[(0, 0), (1, 0), (2, 0)]);
        let r = solve_exact(&line, Mode::Identify, &RadiusMode::Free).unwrap();
        assert_eq!(r.size, 2);
        assert!(verify(&line, &r.disks, Mode::Identify).is_valid());
        let one = pts(&[(3, 4)]);
        assert_eq!(solve_exact(&one, Mode::Identify, &RadiusMode::Free).unwrap().size, 1);
        assert_eq!(solve_exact(&one, Mode::SeparateOnly, &RadiusMode::Free).unwrap().size, 0);
        assert_eq!(solve_exact(&[], Mode::Identify, &RadiusMode::Free).unwrap().size, 0);
    }

    #[test]
    fn fixed_radius_line() {
        let line = pts(&[(0, 0), (1, 0), (2, 0), (3, 0), (4, 0)]);
        let r = solve_exact(&line, Mode::Identify, &RadiusMode::Fixed(int(4))).unwrap();
        assert_eq!(r.size, 3);
        for d in &r.disks {
            assert!(matches!(d, GeneralizedDisk::Disk { r2, .. } if *r2 == int(4)));
        }
        let far = pts(&[(0, 0), (1, 0), (10, 0)]);
        let r = solve_exact(&far, Mode::Identify, &RadiusMode::Fixed(frac(1, 1))).unwrap();
        assert_eq!(r.size, 3);
    }

    #[test]
    fn cap_and_duplicates() {
        let many: Vec<RPoint> = (0..20).map(|i| RPoint::from_ints(i, i * i)).collect();
        assert_eq!(
            solve_exact_with_cap(&many, Mode::Identify, &RadiusMode::Free, 16),
            Err(SolveError::CapExceeded { n: 20, cap: 16 })
        );
        let dup = pts(&[(0, 0), (0, 0)]);
        assert_eq!(
            solve_exact(&dup, Mode::Identify, &RadiusMode::Free),
            Err(SolveError::Kernel(KernelError::Duplicate(0, 1)))
        );
    }
}
