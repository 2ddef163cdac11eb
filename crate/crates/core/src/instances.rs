//! Closed-form bounds and generators for the extremal instance families.

use num_bigint::BigInt;
use num_integer::Roots;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::kernel::rational::{frac, int};
use crate::kernel::{in_circumcircle, orientation, GeneralizedDisk, RPoint, Rational, Sign};
use crate::oracle::realizable_subsets_fixed_r;
use crate::subset::Subset;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum InstanceError {
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
    #[error("construction failed: {0}")]
    Construction(String),
}

fn require(ok: bool, what: impl FnOnce() -> String) -> Result<(), InstanceError> {
    if ok {
        Ok(())
    } else {
        Err(InstanceError::OutOfRange(what()))
    }
}

/// `ceil(log2(n + 1))`: `k` disks give at most `2^k - 1` nonempty signatures.
pub fn bound_log(n: usize) -> Result<usize, InstanceError> {
    require(n >= 1, || format!("n = {n} < 1"))?;
    Ok((usize::BITS - n.leading_zeros()) as usize)
}

/// Smallest `k` with `k^2 - k + 1 >= n`, i.e. `ceil((1 + sqrt(4n - 3)) / 2)`.
pub fn bound_sqrt(n: usize) -> Result<usize, InstanceError> {
    require(n >= 1, || format!("n = {n} < 1"))?;
    let d = 4 * n as u128 - 3;
    let s = d.sqrt();
    // d is odd, so an exact root is odd; otherwise round (1 + sqrt d) / 2 up
    let k = if s * s == d { s.div_ceil(2) } else { (s + 2).div_ceil(2) };
    Ok(k as usize)
}

/// `ceil((n + 1) / 2)`, achieved by the greedy half-plane construction.
pub fn bound_upper(n: usize) -> Result<usize, InstanceError> {
    require(n >= 1, || format!("n = {n} < 1"))?;
    Ok((n + 2) / 2)
}

/// `2 ceil(n / 6) + 1` for points in general configuration.
pub fn bound_genpos(n: usize) -> Result<usize, InstanceError> {
    require(n >= 1, || format!("n = {n} < 1"))?;
    Ok(2 * n.div_ceil(6) + 1)
}

/// Exact value `ceil((n + 1) / 2)` for collinear points.
pub fn bound_collinear(n: usize) -> Result<usize, InstanceError> {
    bound_upper(n)
}

/// Exact value for the `2 x n` grid.
pub fn bound_grid2(n: usize) -> Result<usize, InstanceError> {
    require(n >= 2, || format!("n = {n} < 2"))?;
    let base = (n + 2) / 2;
    Ok(if matches!(n, 2 | 3 | 4 | 5 | 7) { base + 1 } else { base })
}

/// Exact half-plane value `m + n - 2` for the `m x n` grid.
pub fn bound_grid_hp(m: usize, n: usize) -> Result<usize, InstanceError> {
    require(m >= 3 && n >= 3, || format!("grid {m}x{n} needs m, n >= 3"))?;
    Ok(m + n - 2)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Collinear(usize),
    Grid(usize, usize),
    PolygonArrangement(usize),
    Intermediate(usize, usize),
    HalfParabola(usize),
    RandomGeneral(usize, u64),
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Family::Collinear(n) => write!(f, "collinear:{n}"),
            Family::Grid(m, n) => write!(f, "grid:{m},{n}"),
            Family::PolygonArrangement(k) => write!(f, "polygon:{k}"),
            Family::Intermediate(n, k) => write!(f, "intermediate:{n},{k}"),
            Family::HalfParabola(n) => write!(f, "parabola:{n}"),
            Family::RandomGeneral(n, seed) => write!(f, "random:{n},{seed}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Known {
    pub lower: usize,
    pub upper: usize,
    pub exact: Option<usize>,
}

impl Known {
    fn exact(v: usize) -> Self {
        Known { lower: v, upper: v, exact: Some(v) }
    }
}

#[derive(Clone, Debug)]
pub struct Instance {
    pub family: Family,
    pub points: Vec<RPoint>,
    pub known: Option<Known>,
    /// A reference identifying family when the construction provides one.
    pub disks: Vec<GeneralizedDisk>,
}

fn generic_known(n: usize) -> Option<Known> {
    if n == 0 {
        return None;
    }
    let lower = bound_log(n).ok()?.max(bound_sqrt(n).ok()?);
    Some(Known { lower, upper: bound_upper(n).ok()?, exact: None })
}

/// `n` points `(i, 0)`, `i = 1..n`.
pub fn gen_collinear(n: usize) -> Instance {
    let points = (1..=n as i64).map(|i| RPoint::from_ints(i, 0)).collect();
    Instance {
        family: Family::Collinear(n),
        points,
        known: bound_collinear(n).ok().map(Known::exact),
        disks: Vec::new(),
    }
}

/// Grid points `(x, y)` with columns `x = 1..n` and rows `y = 1..m`, listed
/// row by row.
pub fn gen_grid(m: usize, n: usize) -> Instance {
    let mut points = Vec::with_capacity(m * n);
    for y in 1..=m as i64 {
        for x in 1..=n as i64 {
            points.push(RPoint::from_ints(x, y));
        }
    }
    let known = match (m, n) {
        (0, _) | (_, 0) => None,
        (1, k) | (k, 1) => bound_collinear(k).ok().map(Known::exact),
        (2, k) => bound_grid2(k).ok().map(Known::exact),
        _ => generic_known(m * n).map(|k| Known { upper: k.upper.min(m + n - 2), ..k }),
    };
    Instance { family: Family::Grid(m, n), points, known, disks: Vec::new() }
}

/// Points `(i, i^2)`, `i = 1..n`. A circle meets the parabola in at most
/// four points and the right half of it in at most three, so at least
/// `ceil(n / 3)` disks are needed.
pub fn gen_half_parabola(n: usize) -> Instance {
    let points = (1..=n as i64).map(|i| RPoint::from_ints(i, i * i)).collect();
    let known = generic_known(n).map(|k| Known { lower: k.lower.max(n.div_ceil(3)), ..k });
    Instance { family: Family::HalfParabola(n), points, known, disks: Vec::new() }
}

/// `n` points on the lattice `(1/100) Z^2` inside `[0, 100)^2`, drawn from a
/// seeded generator and rejected until no three are collinear and no four
/// cocyclic.
pub fn gen_random_general(n: usize, seed: u64) -> Instance {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points: Vec<RPoint> = Vec::with_capacity(n);
    while points.len() < n {
        let p = RPoint::new(
            frac(rng.gen_range(0..10_000), 100),
            frac(rng.gen_range(0..10_000), 100),
        );
        if fits_general(&points, &p) {
            points.push(p);
        }
    }
    let known = generic_known(n).map(|k| Known {
        upper: k.upper.min(bound_genpos(n).unwrap_or(usize::MAX)),
        ..k
    });
    Instance { family: Family::RandomGeneral(n, seed), points, known, disks: Vec::new() }
}

fn fits_general(pts: &[RPoint], p: &RPoint) -> bool {
    let m = pts.len();
    for i in 0..m {
        if pts[i] == *p {
            return false;
        }
        for j in i + 1..m {
            if orientation(&pts[i], &pts[j], p) == Sign::Zero {
                return false;
            }
            for k in j + 1..m {
                if in_circumcircle(&pts[i], &pts[j], &pts[k], p) == Ok(Sign::Zero) {
                    return false;
                }
            }
        }
    }
    true
}

/// Rational point on the unit circle close to angle `2 pi i / k`.
fn unit_circle_point(i: usize, k: usize) -> RPoint {
    if 2 * i == k {
        return RPoint::from_ints(-1, 0);
    }
    // stereographic parameter t = tan(theta / 2), rounded
    let theta = std::f64::consts::PI * i as f64 / k as f64;
    let t = Rational::new(BigInt::from((theta.tan() * 1e6).round() as i64), BigInt::from(1_000_000));
    let one = Rational::one();
    let t2 = &t * &t;
    let den = &one + &t2;
    RPoint::new((&one - &t2) / &den, (&t * int(2)) / den)
}

/// Strict signature of `p` with respect to `disks`, or `None` if `p` is on a
/// boundary.
fn strict_signature(disks: &[GeneralizedDisk], p: &RPoint) -> Option<Subset> {
    let mut s = Subset::empty();
    for (k, d) in disks.iter().enumerate() {
        match d.side(p) {
            Sign::Negative => s.insert(k),
            Sign::Zero => return None,
            Sign::Positive => {}
        }
    }
    Some(s)
}

/// A point with small denominators that still satisfies `ok`, trying
/// denominators `1, 2, 4, ...`; falls back to `p`.
fn simplify(p: &RPoint, ok: impl Fn(&RPoint) -> bool) -> RPoint {
    for bits in 0..48 {
        let d = Rational::from_integer(BigInt::one() << bits);
        let q = RPoint::new((&p.x * &d).round() / &d, (&p.y * &d).round() / &d);
        if ok(&q) {
            return q;
        }
    }
    p.clone()
}

/// `k` disks of radius `1 + eps` centered near the vertices of a regular
/// `k`-gon inscribed in the unit circle, and one point inside each of the
/// `k^2 - k + 1` nonempty faces of their arrangement.
pub fn gen_polygon_arrangement(
    k: usize,
) -> Result<(Vec<GeneralizedDisk>, Vec<RPoint>), InstanceError> {
    require(k >= 2, || format!("k = {k} < 2"))?;
    let want = k * k - k + 1;
    let centers: Vec<RPoint> = (0..k).map(|i| unit_circle_point(i, k)).collect();
    for eps in [frac(1, 10), frac(1, 20), frac(1, 50), frac(1, 100)] {
        let r = Rational::one() + eps;
        let r2 = &r * &r;
        let disks: Vec<GeneralizedDisk> = centers
            .iter()
            .map(|c| GeneralizedDisk::Disk { center: c.clone(), r2: r2.clone() })
            .collect();
        // a point sees disk i iff it is within r of center i, so the faces
        // are the subsets of centers cut out by radius-r disks
        let faces = realizable_subsets_fixed_r(&centers, &r2);
        let mut points = Vec::with_capacity(faces.len());
        let mut strict = true;
        for e in &faces.edges {
            let GeneralizedDisk::Disk { center, .. } = &e.witness else {
                unreachable!("fixed-radius witnesses are disks")
            };
            if strict_signature(&disks, center).as_ref() != Some(&e.subset) {
                strict = false;
                break;
            }
            points.push(simplify(center, |q| {
                strict_signature(&disks, q).as_ref() == Some(&e.subset)
            }));
        }
        if strict && points.len() == want {
            return Ok((disks, points));
        }
    }
    Err(InstanceError::Construction(format!(
        "no radius gave {want} faces for k = {k}"
    )))
}

/// `n` points needing exactly `k` disks: `min(2k - 1, n)` collinear points in
/// distinct faces of the `k`-disk polygon arrangement along a line through
/// the middle, and the rest in other faces.
pub fn gen_intermediate(n: usize, k: usize) -> Result<Instance, InstanceError> {
    require(n >= 1, || format!("n = {n} < 1"))?;
    let (lo, hi) = (bound_sqrt(n)?, bound_upper(n)?);
    require(lo <= k && k <= hi, || format!("k = {k} outside [{lo}, {hi}] for n = {n}"))?;
    let on_line = (2 * k - 1).min(n);
    if k == 1 {
        return Ok(Instance {
            family: Family::Intermediate(n, k),
            points: vec![RPoint::from_ints(0, 0)],
            known: Some(Known::exact(1)),
            disks: vec![GeneralizedDisk::Disk { center: RPoint::from_ints(0, 0), r2: int(1) }],
        });
    }
    let (disks, faces) = gen_polygon_arrangement(k)?;
    let line = line_through_faces(&disks, 2 * k - 1).ok_or_else(|| {
        InstanceError::Construction(format!("no line crosses {} faces", 2 * k - 1))
    })?;
    let mut points: Vec<RPoint> = line.iter().take(on_line).map(|(p, _)| p.clone()).collect();
    let used: Vec<&Subset> = line.iter().take(on_line).map(|(_, s)| s).collect();
    for q in &faces {
        if points.len() == n {
            break;
        }
        let s = membership_of(&disks, q);
        if !used.contains(&&s) {
            points.push(q.clone());
        }
    }
    if points.len() != n {
        return Err(InstanceError::Construction("not enough faces".into()));
    }
    Ok(Instance {
        family: Family::Intermediate(n, k),
        points,
        known: Some(Known::exact(k)),
        disks,
    })
}

fn membership_of(disks: &[GeneralizedDisk], p: &RPoint) -> Subset {
    Subset::from_indices((0..disks.len()).filter(|&d| disks[d].contains(p)))
}

/// Walks a few lines near the common center and returns the first one that
/// meets at least `want` distinct nonempty faces, with a sample point and
/// signature per face in order along the line.
fn line_through_faces(disks: &[GeneralizedDisk], want: usize) -> Option<Vec<(RPoint, Subset)>> {
    let steps = 4000i64;
    let reach = int(3);
    for offset in [frac(1, 50), frac(1, 20), frac(1, 7), frac(3, 10)] {
        for slope in [frac(1, 7), frac(2, 9), frac(1, 3), frac(0, 1), frac(5, 11)] {
            let base = RPoint::new(Rational::zero(), offset.clone());
            let dir = RPoint::new(Rational::one(), slope);
            let mut seen: Vec<(RPoint, Subset)> = Vec::new();
            let mut fine = true;
            for j in -steps..=steps {
                let t = &reach * frac(j, steps);
                let p = base.add(&dir.scale(&t));
                let Some(s) = strict_signature(disks, &p) else { continue };
                if s.is_empty() || seen.last().is_some_and(|(_, last)| *last == s) {
                    continue;
                }
                if seen.iter().any(|(_, old)| *old == s) {
                    fine = false;
                    break;
                }
                seen.push((p, s));
            }
            if fine && seen.len() >= want {
                return Some(seen);
            }
        }
    }
    None
}
