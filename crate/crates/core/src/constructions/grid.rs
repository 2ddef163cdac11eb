use std::collections::BTreeMap;

use super::ConstructionError;
use crate::instances::gen_grid;
use crate::kernel::rational::{frac, int};
use crate::kernel::{GeneralizedDisk, RPoint};
use crate::oracle::realizable_subsets;
use crate::subset::Subset;

/// Columns `lo..=hi` (1-based) of one row, `None` for no point.
type Run = Option<(usize, usize)>;

/// `D(a, b, c, d)`: columns `a..=b` of the first row and `c..=d` of the
/// second.
fn dabcd(a: usize, b: usize, c: usize, d: usize) -> [Run; 2] {
    [Some((a, b)), Some((c, d))]
}

fn column_run(a: usize, b: usize) -> [Run; 2] {
    dabcd(a, b, a, b)
}

/// The family for `2 x n` as column runs per row, before realization, and
/// whether the row-separating half-plane is needed.
fn grid2_runs(n: usize) -> (Vec<[Run; 2]>, bool) {
    match n {
        2 | 3 | 4 | 5 | 7 => {
            let len = n.div_ceil(2);
            let runs = (1..=(n + 2) / 2).map(|k| column_run(k, (k + len - 1).min(n))).collect();
            (runs, true)
        }
        6 => (
            vec![dabcd(1, 5, 3, 4), dabcd(3, 6, 4, 5), dabcd(2, 3, 1, 5), dabcd(4, 4, 2, 6)],
            false,
        ),
        9 => (
            vec![
                dabcd(1, 6, 2, 4),
                dabcd(2, 9, 4, 6),
                dabcd(3, 5, 1, 8),
                dabcd(4, 8, 6, 7),
                dabcd(5, 7, 3, 9),
            ],
            false,
        ),
        _ if n % 4 == 1 => (grid2_4p1((n - 1) / 4), false),
        _ if n % 4 == 3 => {
            // drop the outer columns of the 4p+1 family and its widest ring
            let p = (n + 1) / 4;
            let runs = grid2_4p1(p)
                .into_iter()
                .filter(|r| *r != column_run(2, 4 * p))
                .map(|r| r.map(|run| clip(run, 2, 4 * p).map(|(a, b)| (a - 1, b - 1))))
                .filter(|r| r.iter().any(Option::is_some))
                .collect();
            (runs, false)
        }
        _ => {
            // even: the family for n + 1 without its last column
            let (runs, hp) = grid2_runs(n + 1);
            let runs = runs
                .into_iter()
                .map(|r| r.map(|run| clip(run, 1, n)))
                .filter(|r| r.iter().any(Option::is_some))
                .collect();
            (runs, hp)
        }
    }
}

fn clip(run: Run, lo: usize, hi: usize) -> Run {
    let (a, b) = run?;
    let (a, b) = (a.max(lo), b.min(hi));
    (a <= b).then_some((a, b))
}

/// Three steps for `n = 4p + 1`, `p >= 3`: four disks separating the rows,
/// two small column disks, then nested column rings.
fn grid2_4p1(p: usize) -> Vec<[Run; 2]> {
    let mut out = vec![
        dabcd(1, 3 * p + 1, p + 2, 2 * p),
        dabcd(p + 2, 2 * p, 1, 3 * p + 1),
        dabcd(p + 1, 4 * p + 1, 2 * p + 2, 3 * p),
        dabcd(2 * p + 2, 3 * p, p + 1, 4 * p + 1),
        column_run(p, p + 2),
        column_run(3 * p, 3 * p + 2),
    ];
    for i in (2..p).chain(p + 4..=2 * p) {
        out.push(column_run(i, 4 * p + 2 - i));
    }
    out
}

fn runs_subset(n: usize, runs: &[Run; 2]) -> Subset {
    let mut s = Subset::empty();
    for (row, run) in runs.iter().enumerate() {
        if let Some((a, b)) = run {
            for col in *a..=*b {
                s.insert(row * n + col - 1);
            }
        }
    }
    s
}

fn describe(runs: &[Run; 2]) -> String {
    let f = |r: &Run| r.map_or("-".to_string(), |(a, b)| format!("{a}..{b}"));
    format!("rows [{}, {}]", f(&runs[0]), f(&runs[1]))
}

/// Exact-size family for the `2 x n` grid (rows `y = 1, 2`, columns
/// `x = 1..n`): `ceil((n+1)/2) + 1` disks for `n` in `{2, 3, 4, 5, 7}`,
/// `ceil((n+1)/2)` otherwise. Witnesses come from the realizable-subset
/// oracle on the grid itself.
pub fn identify_grid_2xn(n: usize) -> Result<Vec<GeneralizedDisk>, ConstructionError> {
    if n < 2 {
        return Err(ConstructionError::Precondition(format!("2 x {n} grid needs n >= 2")));
    }
    let points = gen_grid(2, n).points;
    let (runs, half_plane) = grid2_runs(n);
    let h = realizable_subsets(&points);
    let mut out = Vec::with_capacity(runs.len() + 1);
    let mut seen = BTreeMap::new();
    for r in &runs {
        let s = runs_subset(n, r);
        if seen.insert(s.clone(), ()).is_some() {
            continue;
        }
        let w = h
            .witness_for(&s)
            .ok_or_else(|| ConstructionError::Unrealizable(describe(r)))?;
        out.push(w.clone());
    }
    if half_plane {
        out.push(GeneralizedDisk::HalfPlane { a: int(0), b: int(1), c: frac(3, 2) });
    }
    Ok(out)
}

/// Half-planes bounded by the lines between adjacent rows and columns:
/// `y <= r + 1/2` for every row gap, `x >= 3/2` for the first column gap
/// and `x <= c + 1/2` for the others, so every point is covered.
fn grid_lines(m: usize, n: usize, columns: bool) -> Vec<GeneralizedDisk> {
    let half = frac(1, 2);
    let mut out = Vec::new();
    for r in 1..m {
        out.push(GeneralizedDisk::HalfPlane { a: int(0), b: int(1), c: int(r as i64) + &half });
    }
    if columns {
        for c in 1..n {
            let at = int(c as i64) + &half;
            out.push(if c == 1 {
                GeneralizedDisk::HalfPlane { a: int(-1), b: int(0), c: -at }
            } else {
                GeneralizedDisk::HalfPlane { a: int(1), b: int(0), c: at }
            });
        }
    }
    out
}

/// `m + n - 2` half-planes identifying the `m x n` grid.
pub fn identify_grid_halfplanes(m: usize, n: usize) -> Result<Vec<GeneralizedDisk>, ConstructionError> {
    if m < 3 || n < 3 {
        return Err(ConstructionError::Precondition(format!("{m} x {n} grid needs m, n >= 3")));
    }
    Ok(grid_lines(m, n, true))
}

/// `ceil(n/2) + m - 1` generalized disks for a long `m x n` grid: `m - 1`
/// row half-planes and `ceil(n/2)` equal disks of squared radius
/// `(ceil(n/2)/2)^2 + m^2/4` centered at height `m/2`, sliding along the
/// columns.
///
/// Each disk must meet every row in exactly `ceil(n/2)` columns, which holds
/// iff `2 ceil(n/2) >= m^2 - (m mod 2)`; smaller `n` is rejected.
pub fn identify_grid_long(m: usize, n: usize) -> Result<Vec<GeneralizedDisk>, ConstructionError> {
    if m < 3 || 2 * n.div_ceil(2) < m * m - m % 2 {
        return Err(ConstructionError::Precondition(format!(
            "{m} x {n} grid needs m >= 3 and 2*ceil(n/2) >= m^2 - (m mod 2)"
        )));
    }
    let k = n.div_ceil(2) as i64;
    let mut out = grid_lines(m, n, false);
    // every row is covered by a half-plane once the lowest one faces up
    if let Some(GeneralizedDisk::HalfPlane { b, c, .. }) = out.first_mut() {
        *b = int(-1);
        *c = -c.clone();
    }
    let r2 = frac(k * k, 4) + frac((m * m) as i64, 4);
    let cy = frac(m as i64, 2);
    for j in 0..k {
        let cx = frac(k + 1, 2) + int(j);
        out.push(GeneralizedDisk::Disk { center: RPoint::new(cx, cy.clone()), r2: r2.clone() });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::bound_grid2;
    use crate::solver::{verify, Mode};

    #[test]
    fn two_row_sizes() {
        for n in 2..=13 {
            let d = identify_grid_2xn(n).unwrap();
            assert_eq!(Ok(d.len()), bound_grid2(n), "n = {n}");
            let pts = gen_grid(2, n).points;
            assert!(verify(&pts, &d, Mode::Identify).is_valid(), "n = {n}");
        }
    }

    #[test]
    fn half_plane_grids() {
        for (m, n) in [(3, 3), (3, 4), (4, 3), (4, 4), (4, 7)] {
            let d = identify_grid_halfplanes(m, n).unwrap();
            assert_eq!(d.len(), m + n - 2);
            assert!(verify(&gen_grid(m, n).points, &d, Mode::Identify).is_valid());
        }
    }

    #[test]
    fn long_grids() {
        let d = identify_grid_long(3, 9).unwrap();
        assert_eq!(d.len(), 7);
        assert!(verify(&gen_grid(3, 9).points, &d, Mode::Identify).is_valid());
        assert!(identify_grid_long(3, 6).is_err());
        assert!(identify_grid_long(4, 10).is_err());
        for (m, n) in [(3, 7), (3, 8), (4, 15), (4, 16), (5, 23), (6, 35)] {
            let d = identify_grid_long(m, n).unwrap();
            assert_eq!(d.len(), n.div_ceil(2) + m - 1);
            assert!(verify(&gen_grid(m, n).points, &d, Mode::Identify).is_valid(), "{m} x {n}");
        }
    }
}
