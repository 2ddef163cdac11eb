use std::collections::{BTreeMap, HashSet};

use num_traits::{One, Signed, Zero};

use super::{cuts_strictly, membership, Hypergraph};
use crate::geometry_util::{angle_cmp, same_direction};
use crate::kernel::rational::{sqrt_exact, sqrt_floor_approx};
use crate::kernel::{GeneralizedDisk, RPoint, Rational, Sign};
use crate::subset::Subset;

/// All nonempty subsets `P ∩ D` over closed disks `D` of squared radius
/// exactly `r2`. Witnesses are strict whenever the subset is realized by an
/// open cell of the center arrangement; tangency-only subsets get a witness
/// with boundary points.
pub fn realizable_subsets_fixed_r(points: &[RPoint], r2: &Rational) -> Hypergraph {
    assert!(r2.is_positive(), "radius must be positive");
    let n = points.len();
    let mut open: BTreeMap<Subset, GeneralizedDisk> = BTreeMap::new();
    let mut closed: BTreeMap<Subset, GeneralizedDisk> = BTreeMap::new();
    let four_r2 = r2 * Rational::from_integer(4.into());
    let mut seen_vertices: HashSet<RPoint> = HashSet::new();

    for i in 0..n {
        let isolated = (0..n).all(|j| j == i || points[i].dist2(&points[j]) > four_r2);
        if isolated {
            open.insert(
                Subset::from_indices([i]),
                GeneralizedDisk::Disk { center: points[i].clone(), r2: r2.clone() },
            );
        }
    }

    for i in 0..n {
        for j in i + 1..n {
            let d = points[j].sub(&points[i]);
            let dd = d.norm2();
            if dd > four_r2 {
                continue;
            }
            let m = points[i].midpoint(&points[j]);
            let q = d.perp();
            // vertices are m ± s q with s^2 = t
            let t = (r2 - &dd / Rational::from_integer(4.into())) / &dd;
            match sqrt_exact(&t) {
                Some(s) => {
                    for sign in [Rational::one(), -Rational::one()] {
                        let v = m.add(&q.scale(&(&s * &sign)));
                        if seen_vertices.insert(v.clone()) {
                            rational_vertex(points, r2, &v, &mut open, &mut closed);
                        }
                        if s.is_zero() {
                            break;
                        }
                    }
                }
                None => {
                    for sigma in [Rational::one(), -Rational::one()] {
                        irrational_vertex(points, r2, i, j, &m, &q, &t, &sigma, &mut open);
                    }
                }
            }
        }
    }

    for (s, w) in closed {
        open.entry(s).or_insert(w);
    }
    Hypergraph::from_map(points.to_vec(), open)
}

/// Cells around a vertex with rational coordinates, plus the closed subset
/// at the vertex itself.
fn rational_vertex(
    points: &[RPoint],
    r2: &Rational,
    v: &RPoint,
    open: &mut BTreeMap<Subset, GeneralizedDisk>,
    closed: &mut BTreeMap<Subset, GeneralizedDisk>,
) {
    let mut inside = Vec::new();
    let mut on = Vec::new();
    for (k, p) in points.iter().enumerate() {
        match Sign::of(&(v.dist2(p) - r2)) {
            Sign::Negative => inside.push(k),
            Sign::Zero => on.push(k),
            Sign::Positive => {}
        }
    }
    let here = Subset::from_indices(inside.iter().chain(on.iter()).copied());
    if !here.is_empty() {
        closed
            .entry(here)
            .or_insert_with(|| GeneralizedDisk::Disk { center: v.clone(), r2: r2.clone() });
    }

    // Tangent directions of the circles through v, both ways, in angular
    // order; sample each of them and each open sector between neighbours.
    let normals: Vec<RPoint> = on.iter().map(|&k| v.sub(&points[k])).collect();
    let mut dirs: Vec<RPoint> = normals
        .iter()
        .flat_map(|nk| [nk.perp(), nk.perp().scale(&-Rational::one())])
        .collect();
    dirs.sort_by(angle_cmp);
    dirs.dedup_by(|a, b| same_direction(a, b));
    let mut samples: Vec<RPoint> = dirs.clone();
    for idx in 0..dirs.len() {
        let u1 = &dirs[idx];
        let u2 = &dirs[(idx + 1) % dirs.len()];
        if u1.cross(u2).is_zero() {
            // opposite directions: the sector is a half-plane
            samples.push(u1.perp());
        } else {
            samples.push(u1.add(u2));
        }
    }
    for u in samples {
        let target = Subset::from_indices(
            inside
                .iter()
                .copied()
                .chain(on.iter().zip(&normals).filter(|(_, nk)| u.dot(nk).is_negative()).map(|(&k, _)| k)),
        );
        if target.is_empty() || open.contains_key(&target) {
            continue;
        }
        let w = walk_out(points, r2, |eps| v.add(&u.scale(eps)), &target);
        open.insert(target, w);
    }
}

/// Cells around `m + sigma*sqrt(t)*q`, an irrational crossing of exactly the
/// two circles around `points[i]` and `points[j]`.
#[allow(clippy::too_many_arguments)]
fn irrational_vertex(
    points: &[RPoint],
    r2: &Rational,
    i: usize,
    j: usize,
    m: &RPoint,
    q: &RPoint,
    t: &Rational,
    sigma: &Rational,
    open: &mut BTreeMap<Subset, GeneralizedDisk>,
) {
    let qq = q.norm2();
    let two = Rational::from_integer(2.into());
    let mut inside = Vec::new();
    for (k, p) in points.iter().enumerate() {
        if k == i || k == j {
            continue;
        }
        // |v - p|^2 - r2 = a + b*sqrt(t)
        let mp = m.sub(p);
        let a = mp.norm2() + t * &qq - r2;
        let b = &two * sigma * q.dot(&mp);
        match sign_with_sqrt(&a, &b, t) {
            Sign::Negative => inside.push(k),
            Sign::Zero => unreachable!("three circles through an irrational point"),
            Sign::Positive => {}
        }
    }
    let away = q.scale(sigma);
    let toward = away.scale(&-Rational::one());
    let i_only = points[i].sub(&points[j]);
    let j_only = points[j].sub(&points[i]);
    let cells: [(RPoint, &[usize]); 4] = [
        (toward, &[i, j]),
        (i_only, &[i]),
        (j_only, &[j]),
        (away, &[]),
    ];
    for (u, extra) in cells {
        let target = Subset::from_indices(inside.iter().chain(extra.iter()).copied());
        if target.is_empty() || open.contains_key(&target) {
            continue;
        }
        let w = walk_out(
            points,
            r2,
            |eps| {
                // rational stand-in for the vertex, much closer than eps
                let bits = 2 * eps_bits(eps) + 24;
                let s = sqrt_floor_approx(t, bits);
                m.add(&q.scale(&(sigma * s))).add(&u.scale(eps))
            },
            &target,
        );
        open.insert(target, w);
    }
}

fn eps_bits(eps: &Rational) -> u32 {
    (eps.denom().bits() as u32).saturating_sub(eps.numer().bits() as u32) + 1
}

/// Sign of `a + b*sqrt(t)` for `t > 0`.
fn sign_with_sqrt(a: &Rational, b: &Rational, t: &Rational) -> Sign {
    let sa = Sign::of(a);
    let sb = Sign::of(b);
    if sb == Sign::Zero {
        return sa;
    }
    if sa == Sign::Zero || sa == sb {
        return sb;
    }
    // opposite signs: compare a^2 with b^2 t
    let cmp = Sign::of(&(a * a - b * b * t));
    if sa == Sign::Positive {
        cmp
    } else {
        cmp.flip()
    }
}

/// Halves `eps` until the disk of squared radius `r2` centered at
/// `center(eps)` cuts exactly `target` with no boundary points.
fn walk_out(
    points: &[RPoint],
    r2: &Rational,
    center: impl Fn(&Rational) -> RPoint,
    target: &Subset,
) -> GeneralizedDisk {
    let half = Rational::new(1.into(), 2.into());
    let mut eps = Rational::one();
    for _ in 0..200 {
        let d = GeneralizedDisk::Disk { center: center(&eps), r2: r2.clone() };
        if cuts_strictly(&d, points, target) {
            debug_assert_eq!(membership(&d, points), *target);
            return d;
        }
        eps *= &half;
    }
    unreachable!("open cell next to an arrangement vertex must contain a rational center")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::rational::int;

    #[test]
    fn sqrt_sign() {
        // 1 - sqrt(2) < 0, 2 - sqrt(2) > 0, -1 + sqrt(2) > 0
        assert_eq!(sign_with_sqrt(&int(1), &int(-1), &int(2)), Sign::Negative);
        assert_eq!(sign_with_sqrt(&int(2), &int(-1), &int(2)), Sign::Positive);
        assert_eq!(sign_with_sqrt(&int(-1), &int(1), &int(2)), Sign::Positive);
        assert_eq!(sign_with_sqrt(&int(0), &int(-3), &int(2)), Sign::Negative);
    }

    #[test]
    fn triangle_with_irrational_vertices() {
        let pts = [RPoint::from_ints(0, 0), RPoint::from_ints(1, 0), RPoint::from_ints(0, 1)];
        let h = realizable_subsets_fixed_r(&pts, &int(1));
        assert_eq!(h.first_bad_witness(), None);
        // radius 1 reaches every subset of this small triangle
        assert_eq!(h.len(), 7);
    }
}
