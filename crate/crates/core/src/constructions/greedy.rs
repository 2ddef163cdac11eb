use num_traits::{One, Signed, Zero};

use crate::kernel::rational::int;
use crate::kernel::{check_distinct, orientation, GeneralizedDisk, RPoint, Rational, Sign};

/// Direction `(1, k)`, `k = 0, 1, -1, 2, -2, ...`, along which all points
/// have distinct projections.
pub(crate) fn distinct_direction(points: &[RPoint]) -> RPoint {
    for step in 0i64.. {
        let k = if step % 2 == 1 { (step + 1) / 2 } else { -step / 2 };
        let u = RPoint::new(Rational::one(), int(k));
        let mut proj: Vec<Rational> = points.iter().map(|p| p.dot(&u)).collect();
        proj.sort();
        if proj.windows(2).all(|w| w[0] != w[1]) {
            return u;
        }
    }
    unreachable!()
}

/// At most `ceil((n + 1) / 2)` generalized disks: the half-plane below a
/// median line `L`, then repeatedly a disk around the hull edge of the
/// remaining points that crosses `L` highest, containing exactly its two
/// endpoints, which are then removed.
pub fn identify_greedy_half(
    points: &[RPoint],
) -> Result<Vec<GeneralizedDisk>, crate::constructions::ConstructionError> {
    check_distinct(points)?;
    let n = points.len();
    if n == 0 {
        return Ok(Vec::new());
    }
    let u = distinct_direction(points);
    let v = u.perp();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| points[i].dot(&u));
    let low = n.div_ceil(2);
    let tau = if low < n {
        (points[order[low - 1]].dot(&u) + points[order[low]].dot(&u)) / int(2)
    } else {
        points[order[low - 1]].dot(&u) + Rational::one()
    };
    let mut out = vec![GeneralizedDisk::HalfPlane { a: u.x.clone(), b: u.y.clone(), c: tau.clone() }];
    let below = |p: &RPoint| p.dot(&u) < tau;

    let mut alive: Vec<usize> = order.clone();
    for _ in 0..n / 2 {
        let (x, y) = highest_crossing_pair(points, &alive, &u, &v, &tau, &below);
        out.push(pair_disk(points, &alive, x, y));
        alive.retain(|&i| i != x && i != y);
    }
    Ok(out)
}

/// The two consecutive points along the hull edge of `alive` that straddles
/// the line `u.p = tau` at the largest `v` coordinate.
fn highest_crossing_pair(
    points: &[RPoint],
    alive: &[usize],
    u: &RPoint,
    v: &RPoint,
    tau: &Rational,
    below: &impl Fn(&RPoint) -> bool,
) -> (usize, usize) {
    let hull = hull_indices(points, alive);
    let m = hull.len();
    let mut best: Option<(Rational, usize, usize)> = None;
    for k in 0..m {
        let (a, b) = (hull[k], hull[(k + 1) % m]);
        if a == b || below(&points[a]) == below(&points[b]) {
            continue;
        }
        let (pa, pb) = (&points[a], &points[b]);
        let d = pb.sub(pa);
        let s = (tau - pa.dot(u)) / d.dot(u);
        let ord = pa.dot(v) + s * d.dot(v);
        if best.as_ref().is_none_or(|(o, _, _)| ord > *o) {
            best = Some((ord, a, b));
        }
    }
    let (_, a, b) = best.expect("both sides of the median line are nonempty");
    // other points on the edge: take the neighbours along it that straddle L
    let (pa, pb) = (&points[a], &points[b]);
    let d = pb.sub(pa);
    let mut on_edge: Vec<(Rational, usize)> = alive
        .iter()
        .filter(|&&i| orientation(pa, pb, &points[i]) == Sign::Zero)
        .map(|&i| (points[i].sub(pa).dot(&d), i))
        .filter(|(t, _)| !t.is_negative() && *t <= d.norm2())
        .collect();
    on_edge.sort();
    on_edge
        .windows(2)
        .map(|w| (w[0].1, w[1].1))
        .find(|&(x, y)| below(&points[x]) != below(&points[y]))
        .expect("an edge crossing L has a crossing step")
}

/// Counterclockwise hull vertices of a subset, without collinear boundary
/// points. Two entries for a segment, one for a point.
fn hull_indices(points: &[RPoint], idx: &[usize]) -> Vec<usize> {
    let mut s: Vec<usize> = idx.to_vec();
    s.sort_by(|&a, &b| points[a].cmp(&points[b]));
    if s.len() <= 2 {
        return s;
    }
    let chain = |it: &mut dyn Iterator<Item = usize>| {
        let mut h: Vec<usize> = Vec::new();
        for p in it {
            while h.len() >= 2
                && orientation(&points[h[h.len() - 2]], &points[h[h.len() - 1]], &points[p])
                    != Sign::Positive
            {
                h.pop();
            }
            h.push(p);
        }
        h.pop();
        h
    };
    let mut lower = chain(&mut s.iter().copied());
    let upper = chain(&mut s.iter().rev().copied());
    lower.extend(upper);
    lower
}

/// A disk containing exactly `x` and `y` among `alive`, where `xy` is a
/// piece of a hull edge: its center moves out along the bisector until every
/// other point is strictly outside, then the radius grows by half the
/// smallest remaining gap.
fn pair_disk(points: &[RPoint], alive: &[usize], x: usize, y: usize) -> GeneralizedDisk {
    let (px, py) = (&points[x], &points[y]);
    let m = px.midpoint(py);
    let d = py.sub(px);
    // outward normal: the side with no points of `alive`
    let mut nout = RPoint::new(d.y.clone(), -d.x.clone());
    if alive.iter().any(|&i| points[i].sub(&m).dot(&nout).is_positive()) {
        nout = nout.scale(&-Rational::one());
    }
    let base = m.dist2(px);
    let mut t = Rational::zero();
    for &i in alive {
        let q = &points[i];
        let depth = m.sub(q).dot(&nout);
        if depth.is_positive() {
            let need = (&base - m.dist2(q)) / (int(2) * &depth);
            if need > t {
                t = need;
            }
        }
    }
    t += Rational::one();
    let center = m.add(&nout.scale(&t));
    let r2 = center.dist2(px);
    let gap = alive
        .iter()
        .filter(|&&i| i != x && i != y)
        .map(|&i| center.dist2(&points[i]) - &r2)
        .min();
    let r2 = match gap {
        Some(g) => &r2 + g / int(2),
        None => &r2 + Rational::one(),
    };
    GeneralizedDisk::Disk { center, r2 }
}
