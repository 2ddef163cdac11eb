use std::cmp::Ordering;

use num_traits::{One, Signed, Zero};

use super::greedy::distinct_direction;
use super::ConstructionError;
use crate::kernel::rational::int;
use crate::kernel::{check_distinct, check_no_three_collinear, GeneralizedDisk, RPoint, Rational};

/// The line through `point` with direction `dir`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Line {
    pub point: RPoint,
    pub dir: RPoint,
}

/// Three lines through `apex` cutting the plane into six sectors with
/// `ceil(n/6) - 1` or `ceil(n/6)` points each.
///
/// Sectors are numbered `0..6` counterclockwise starting just after
/// `lines[0].dir`; `lines[1]` and `lines[2]` bound sectors 0|1 and 1|2.
/// `halfplanes[0]` covers sectors 0, 1, 2, `halfplanes[1]` covers 2, 3, 4 and
/// `halfplanes[2]` covers 4, 5, 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SixPartition {
    pub apex: RPoint,
    pub lines: [Line; 3],
    pub region_label: Vec<u8>,
    pub halfplanes: [GeneralizedDisk; 3],
}

impl SixPartition {
    pub fn counts(&self) -> [usize; 6] {
        let mut c = [0; 6];
        for &l in &self.region_label {
            c[l as usize] += 1;
        }
        c
    }

    /// Letter of a sector, `a` to `f`.
    pub fn letter(region: u8) -> char {
        (b'a' + region) as char
    }
}

/// Closed half-plane to the left of `dir` through `at`.
fn left_of(at: &RPoint, dir: &RPoint) -> GeneralizedDisk {
    // cross(dir, p - at) >= 0  <=>  dir.y*x - dir.x*y <= dir.y*at.x - dir.x*at.y
    GeneralizedDisk::HalfPlane {
        a: dir.y.clone(),
        b: -dir.x.clone(),
        c: &dir.y * &at.x - &dir.x * &at.y,
    }
}

/// Searches halving lines `L1` (several directions and offsets), apex
/// positions on `L1` between consecutive crossings with lines through two
/// points, and for each apex the two other lines from the angular order of
/// the points around it.
pub fn six_partition(points: &[RPoint]) -> Result<SixPartition, ConstructionError> {
    check_distinct(points)?;
    check_no_three_collinear(points)?;
    let n = points.len();
    if n == 0 {
        return Err(ConstructionError::Precondition("six-partition of no points".into()));
    }
    let q = n.div_ceil(6);
    let mut dirs = vec![distinct_direction(points)];
    for k in 1..8i64 {
        for u in [RPoint::new(int(k), int(1)), RPoint::new(int(-k), int(1))] {
            if distinct(points, &u) && !dirs.contains(&u) {
                dirs.push(u);
            }
        }
    }
    for u in &dirs {
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&i| points[i].dot(u));
        let proj = |k: usize| points[order[k]].dot(u);
        // split positions: halving first, then its neighbours
        let mut splits: Vec<usize> = vec![n / 2];
        for d in 1..=2 {
            if n / 2 >= d {
                splits.push(n / 2 - d);
            }
            splits.push(n / 2 + d);
        }
        for &s in &splits {
            let upper = n - s;
            if upper + 3 < 3 * q || upper > 3 * q || s + 3 < 3 * q || s > 3 * q {
                continue;
            }
            let tau = match (s, s < n) {
                (0, _) => proj(0) - Rational::one(),
                (_, true) => (proj(s - 1) + proj(s)) / int(2),
                (_, false) => proj(n - 1) + Rational::one(),
            };
            if let Some(sp) = search_on_line(points, u, &tau, q) {
                return Ok(sp);
            }
        }
    }
    Err(ConstructionError::SearchFailed)
}

fn distinct(points: &[RPoint], u: &RPoint) -> bool {
    let mut p: Vec<Rational> = points.iter().map(|p| p.dot(u)).collect();
    p.sort();
    p.windows(2).all(|w| w[0] != w[1])
}

fn search_on_line(points: &[RPoint], u: &RPoint, tau: &Rational, q: usize) -> Option<SixPartition> {
    let n = points.len();
    // L1 = { base + s w }, w = perp(u), base on the line
    let w = u.perp();
    let base = u.scale(&(tau / u.norm2()));
    let mut events: Vec<Rational> = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            // s with base + s w on the line through points i and j
            let (a, b) = (&points[i], &points[j]);
            let d = b.sub(a);
            let den = d.cross(&w);
            if den.is_zero() {
                continue;
            }
            events.push(d.cross(&base.sub(a)) / -den);
        }
    }
    events.sort();
    events.dedup();
    let mut cands: Vec<Rational> = Vec::with_capacity(events.len() + 1);
    match (events.first(), events.last()) {
        (Some(lo), Some(hi)) => {
            cands.extend(events.windows(2).map(|e| (&e[0] + &e[1]) / int(2)));
            // the middle of the line first
            cands.sort_by_key(|s| s.abs());
            cands.push(lo - Rational::one());
            cands.push(hi + Rational::one());
        }
        _ => cands.push(Rational::zero()),
    }
    for s in cands {
        let apex = base.add(&w.scale(&s));
        if let Some(sp) = try_apex(points, &apex, &w, q) {
            return Some(sp);
        }
    }
    None
}

fn try_apex(points: &[RPoint], apex: &RPoint, w: &RPoint, q: usize) -> Option<SixPartition> {
    let n = points.len();
    // reduce every point to a direction in the open upper half-plane of w
    let mut red: Vec<(RPoint, bool, usize)> = points
        .iter()
        .enumerate()
        .map(|(i, p)| {
            let v = p.sub(apex);
            let up = w.cross(&v).is_positive();
            (if up { v } else { v.scale(&-Rational::one()) }, up, i)
        })
        .collect();
    red.sort_by(|a, b| {
        let c = a.0.cross(&b.0);
        if c.is_positive() {
            Ordering::Less
        } else if c.is_negative() {
            Ordering::Greater
        } else {
            Ordering::Equal
        }
    });
    let total_up = red.iter().filter(|r| r.1).count();
    let total_down = n - total_up;
    let ok = |c: usize| c + 1 == q || c == q;
    // lattice path of (upper, lower) counts before each gap
    let mut path = Vec::with_capacity(n + 1);
    let (mut a, mut b) = (0usize, 0usize);
    path.push((a, b));
    for r in &red {
        if r.1 {
            a += 1;
        } else {
            b += 1;
        }
        path.push((a, b));
    }
    for j2 in 0..=n {
        let (a2, b2) = path[j2];
        if !ok(a2) || !ok(b2) {
            continue;
        }
        for (j3, &(a3, b3)) in path.iter().enumerate().skip(j2) {
            if ok(a3 - a2) && ok(b3 - b2) && ok(total_up - a3) && ok(total_down - b3) {
                return Some(build(points, apex, w, &red, j2, j3));
            }
        }
    }
    None
}

/// Direction strictly inside gap `j` of the sorted reduced directions
/// (gap 0 before the first, gap `n` after the last), `bias` in {0, 1, 2}
/// choosing a position inside the gap.
fn gap_direction(w: &RPoint, red: &[(RPoint, bool, usize)], j: usize, bias: i64) -> RPoint {
    let neg_w = w.scale(&-Rational::one());
    let lo = if j == 0 { w.clone() } else { red[j - 1].0.clone() };
    let hi = if j == red.len() { neg_w } else { red[j].0.clone() };
    lo.scale(&int(3 - bias)).add(&hi.scale(&int(1 + bias)))
}

fn build(
    points: &[RPoint],
    apex: &RPoint,
    w: &RPoint,
    red: &[(RPoint, bool, usize)],
    j2: usize,
    j3: usize,
) -> SixPartition {
    let (d2, d3) = if j2 == j3 {
        (gap_direction(w, red, j2, 0), gap_direction(w, red, j3, 2))
    } else {
        (gap_direction(w, red, j2, 1), gap_direction(w, red, j3, 1))
    };
    let mut label = vec![0u8; points.len()];
    for (pos, r) in red.iter().enumerate() {
        let sector = if pos < j2 {
            0
        } else if pos < j3 {
            1
        } else {
            2
        };
        label[r.2] = if r.1 { sector } else { sector + 3 };
    }
    let halfplanes = [
        left_of(apex, w),
        left_of(apex, &d3),
        left_of(apex, &d2.scale(&-Rational::one())),
    ];
    SixPartition {
        apex: apex.clone(),
        lines: [
            Line { point: apex.clone(), dir: w.clone() },
            Line { point: apex.clone(), dir: d2 },
            Line { point: apex.clone(), dir: d3 },
        ],
        region_label: label,
        halfplanes,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::gen_random_general;
    use crate::kernel::Sign;

    fn check(points: &[RPoint], sp: &SixPartition) {
        let q = points.len().div_ceil(6);
        for c in sp.counts() {
            assert!(c + 1 == q || c == q, "{:?}", sp.counts());
        }
        let covers = [[0u8, 1, 2], [2, 3, 4], [4, 5, 0]];
        for (i, p) in points.iter().enumerate() {
            for l in &sp.lines {
                let s = Sign::of(&l.dir.cross(&p.sub(&l.point)));
                assert_ne!(s, Sign::Zero);
            }
            for (h, cov) in sp.halfplanes.iter().zip(&covers) {
                assert_eq!(h.contains(p), cov.contains(&sp.region_label[i]), "point {i}");
            }
        }
    }

    #[test]
    fn random_sets() {
        for (n, seed) in [(1, 3), (5, 1), (6, 2), (12, 3), (13, 4), (30, 5)] {
            let pts = gen_random_general(n, seed).points;
            let sp = six_partition(&pts).unwrap();
            check(&pts, &sp);
            if n == 12 {
                assert_eq!(sp.counts(), [2; 6]);
            }
            if n == 6 {
                assert_eq!(sp.counts(), [1; 6]);
            }
            if n == 5 {
                let mut c = sp.counts();
                c.sort();
                assert_eq!(c, [0, 1, 1, 1, 1, 1]);
            }
        }
    }
}
