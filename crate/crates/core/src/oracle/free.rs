use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::{all_collinear, cuts_strictly, interval_disk, order_along_line, Hypergraph};
use crate::geometry_util::angle_cmp;
use crate::kernel::{GeneralizedDisk, RPoint, Rational};
use crate::subset::Subset;

/// All nonempty subsets `P ∩ D` over closed disks `D` (half-planes add
/// nothing new), each with a witness that has no point on its boundary.
pub fn realizable_subsets(points: &[RPoint]) -> Hypergraph {
    let mut map: BTreeMap<Subset, GeneralizedDisk> = BTreeMap::new();
    let n = points.len();
    if n == 0 {
        return Hypergraph::from_map(Vec::new(), map);
    }
    if all_collinear(points) {
        let order = order_along_line(points);
        for lo in 0..n {
            for hi in lo..n {
                let s = Subset::from_indices(order[lo..=hi].iter().copied());
                map.insert(s, interval_disk(points, &order, lo, hi));
            }
        }
        return Hypergraph::from_map(points.to_vec(), map);
    }

    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let Some(center) =
                    crate::kernel::circumcircle_center(&points[i], &points[j], &points[k])
                else {
                    continue;
                };
                // Only handle each circle once, from its lowest triple.
                let r2 = center.dist2(&points[i]);
                let on: Vec<usize> = (0..n).filter(|&q| center.dist2(&points[q]) == r2).collect();
                if on[..3] != [i, j, k] {
                    continue;
                }
                circle_patterns(points, &center, &r2, &on, &mut map);
            }
        }
    }
    Hypergraph::from_map(points.to_vec(), map)
}

/// Subsets realized by disks close to the circle `(center, r2)`: the strict
/// interior plus a circular arc of the cocircular points `on`.
fn circle_patterns(
    points: &[RPoint],
    center: &RPoint,
    r2: &Rational,
    on: &[usize],
    map: &mut BTreeMap<Subset, GeneralizedDisk>,
) {
    let inside: Vec<usize> = (0..points.len())
        .filter(|&q| &center.dist2(&points[q]) < r2)
        .collect();
    let mut ring: Vec<usize> = on.to_vec();
    ring.sort_by(|&a, &b| angle_cmp(&points[a].sub(center), &points[b].sub(center)));
    let m = ring.len();
    let w = r2 - center.norm2();

    let mut try_arc = |arc: &[usize], dir: (RPoint, Rational)| {
        let s = Subset::from_indices(inside.iter().chain(arc.iter()).copied());
        if s.is_empty() || map.contains_key(&s) {
            return;
        }
        let witness = perturb(points, center, &w, &dir, &s);
        map.insert(s, witness);
    };

    // Empty arc: shrink. Full ring: grow.
    try_arc(&[], (RPoint::from_ints(0, 0), -Rational::one()));
    try_arc(&ring, (RPoint::from_ints(0, 0), Rational::one()));
    for start in 0..m {
        for len in 1..m {
            let arc: Vec<usize> = (0..len).map(|t| ring[(start + t) % m]).collect();
            let before = &points[ring[(start + m - 1) % m]];
            let first = &points[ring[start]];
            let last = &points[ring[(start + len - 1) % m]];
            let after = &points[ring[(start + len) % m]];
            // The line through the midpoints of the two chords leaving the
            // arc separates the arc from the rest of the ring.
            let m1 = before.midpoint(first);
            let m2 = last.midpoint(after);
            let mut nu = m2.sub(&m1).perp();
            let mut beta = nu.dot(&m1);
            if nu.dot(first) < beta {
                nu = nu.scale(&-Rational::one());
                beta = -beta;
            }
            // ring point p enters when nu.p > beta: move center by nu/2, w by -beta.
            let half = Rational::new(1.into(), 2.into());
            try_arc(&arc, (nu.scale(&half), -beta));
        }
    }
}

/// Moves `(center, w)` along `dir` in the lifted space until the disk cuts
/// exactly `target` with no boundary points.
fn perturb(
    points: &[RPoint],
    center: &RPoint,
    w: &Rational,
    dir: &(RPoint, Rational),
    target: &Subset,
) -> GeneralizedDisk {
    let mut eps = Rational::one();
    let half = Rational::new(1.into(), 2.into());
    for _ in 0..400 {
        let c = center.add(&dir.0.scale(&eps));
        let w2 = w + &dir.1 * &eps;
        let r2 = &w2 + c.norm2();
        if r2 > Rational::zero() {
            let d = GeneralizedDisk::Disk { center: c, r2 };
            if cuts_strictly(&d, points, target) {
                return d;
            }
        }
        eps *= &half;
    }
    unreachable!("cell around a circle vertex must be open")
}
