use std::collections::HashMap;

use super::disk::GeneralizedDisk;
use super::point::RPoint;
use super::rational::Rational;
use super::{KernelError, Sign};

/// Sign of `(q - p) x (r - p)`: positive for a left turn.
pub fn orientation(p: &RPoint, q: &RPoint, r: &RPoint) -> Sign {
    Sign::of(&q.sub(p).cross(&r.sub(p)))
}

/// Position of `p` relative to the circle through `a`, `b`, `c`: `Positive`
/// strictly inside, `Zero` cocyclic, `Negative` strictly outside.
///
/// The triple may be given in either orientation; it must not be collinear.
pub fn in_circumcircle(
    a: &RPoint,
    b: &RPoint,
    c: &RPoint,
    p: &RPoint,
) -> Result<Sign, KernelError> {
    let o = orientation(a, b, c);
    if o == Sign::Zero {
        return Err(KernelError::CollinearTriple);
    }
    let det = incircle_det(a, b, c, p);
    let s = Sign::of(&det);
    Ok(if o == Sign::Positive { s } else { s.flip() })
}

/// Classic lifted 3x3 determinant; positive iff `p` is inside the circle of a
/// counterclockwise triple.
pub(crate) fn incircle_det(a: &RPoint, b: &RPoint, c: &RPoint, p: &RPoint) -> Rational {
    let (ad, bd, cd) = (a.sub(p), b.sub(p), c.sub(p));
    let (al, bl, cl) = (ad.norm2(), bd.norm2(), cd.norm2());
    al * bd.cross(&cd) - bl * ad.cross(&cd) + cl * ad.cross(&bd)
}

/// Center of the circle through three non-collinear points.
pub fn circumcircle_center(a: &RPoint, b: &RPoint, c: &RPoint) -> Option<RPoint> {
    let ab = b.sub(a);
    let ac = c.sub(a);
    let d = ab.cross(&ac) * Rational::from_integer(2.into());
    if d == Rational::from_integer(0.into()) {
        return None;
    }
    let (b2, c2) = (ab.norm2(), ac.norm2());
    let ux = (&ac.y * &b2 - &ab.y * &c2) / &d;
    let uy = (&ab.x * &c2 - &ac.x * &b2) / &d;
    Some(RPoint::new(&a.x + ux, &a.y + uy))
}

/// The closed disk whose boundary passes through `a`, `b` and `c`.
pub fn circumdisk(a: &RPoint, b: &RPoint, c: &RPoint) -> Result<GeneralizedDisk, KernelError> {
    let center = circumcircle_center(a, b, c).ok_or(KernelError::CollinearTriple)?;
    let r2 = center.dist2(a);
    Ok(GeneralizedDisk::Disk { center, r2 })
}

pub fn check_distinct(points: &[RPoint]) -> Result<(), KernelError> {
    let mut seen: HashMap<&RPoint, usize> = HashMap::with_capacity(points.len());
    for (i, p) in points.iter().enumerate() {
        if let Some(&j) = seen.get(p) {
            return Err(KernelError::Duplicate(j, i));
        }
        seen.insert(p, i);
    }
    Ok(())
}

pub fn check_no_three_collinear(points: &[RPoint]) -> Result<(), KernelError> {
    let n = points.len();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                if orientation(&points[i], &points[j], &points[k]) == Sign::Zero {
                    return Err(KernelError::Collinear(i, j, k));
                }
            }
        }
    }
    Ok(())
}

/// No duplicates, no three collinear points and no four cocyclic points.
/// Violations name the lowest offending indices.
pub fn check_general_configuration(points: &[RPoint]) -> Result<(), KernelError> {
    check_distinct(points)?;
    check_no_three_collinear(points)?;
    let n = points.len();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                for l in k + 1..n {
                    let d = incircle_det(&points[i], &points[j], &points[k], &points[l]);
                    if Sign::of(&d) == Sign::Zero {
                        return Err(KernelError::Cocyclic(i, j, k, l));
                    }
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::rational::int;

    fn p(x: i64, y: i64) -> RPoint {
        RPoint::from_ints(x, y)
    }

    #[test]
    fn orientation_examples() {
        assert_eq!(orientation(&p(0, 0), &p(1, 0), &p(0, 1)), Sign::Positive);
        assert_eq!(orientation(&p(0, 0), &p(1, 1), &p(2, 2)), Sign::Zero);
        assert_eq!(orientation(&p(0, 0), &p(0, 1), &p(1, 0)), Sign::Negative);
    }

    #[test]
    fn in_circumcircle_examples() {
        let (a, b, c) = (p(0, 0), p(2, 0), p(0, 2));
        assert_eq!(in_circumcircle(&a, &b, &c, &p(1, 1)), Ok(Sign::Positive));
        assert_eq!(in_circumcircle(&a, &b, &c, &p(2, 2)), Ok(Sign::Zero));
        assert_eq!(in_circumcircle(&a, &b, &c, &p(5, 5)), Ok(Sign::Negative));
        // clockwise input gives the same answer
        assert_eq!(in_circumcircle(&a, &c, &b, &p(1, 1)), Ok(Sign::Positive));
        assert_eq!(
            in_circumcircle(&p(0, 0), &p(1, 0), &p(2, 0), &p(1, 1)),
            Err(KernelError::CollinearTriple)
        );
    }

    #[test]
    fn circumdisk_examples() {
        let d = circumdisk(&p(0, 0), &p(2, 0), &p(0, 2)).unwrap();
        assert_eq!(d, GeneralizedDisk::Disk { center: p(1, 1), r2: int(2) });
        let d = circumdisk(&p(0, 0), &p(4, 0), &p(2, 2)).unwrap();
        assert_eq!(d, GeneralizedDisk::Disk { center: p(2, 0), r2: int(4) });
        assert!(circumdisk(&p(0, 0), &p(1, 0), &p(2, 0)).is_err());
    }

    #[test]
    fn general_configuration_reports_lowest_violation() {
        let sq = [p(0, 0), p(1, 0), p(1, 1), p(0, 1)];
        assert_eq!(check_general_configuration(&sq), Err(KernelError::Cocyclic(0, 1, 2, 3)));
        let line = [p(0, 0), p(5, 7), p(1, 1), p(2, 2)];
        assert_eq!(check_general_configuration(&line), Err(KernelError::Collinear(0, 2, 3)));
        let dup = [p(0, 0), p(1, 0), p(0, 0)];
        assert_eq!(check_distinct(&dup), Err(KernelError::Duplicate(0, 2)));
    }
}
