//! Collinear points with every disk of one fixed radius `r`: the greedy
//! linear-time optimum and checkers for its structural properties.
//!
//! Indices are 0-based. A disk of radius `r` meets the line in an interval of
//! length at most `2r`, so a family is described by the runs of consecutive
//! points its disks cover.

use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::kernel::rational::sqrt_floor_approx;
use crate::kernel::{GeneralizedDisk, RPoint, Rational};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FixedLineError {
    #[error("abscissas must be strictly increasing (index {0})")]
    NotIncreasing(usize),
    #[error("radius must be positive")]
    NonPositiveRadius,
    #[error("run {lo}..={hi} is longer than the diameter")]
    TooLong { lo: usize, hi: usize },
    #[error("run {lo}..={hi} is out of range")]
    OutOfRange { lo: usize, hi: usize },
    #[error("points {0} and {1} are not separated")]
    Unseparated(usize, usize),
    #[error("point {0} is not covered")]
    Uncovered(usize),
    #[error("points are not collinear")]
    NotCollinear,
}

/// Points `(x_i, 0)` and disks of squared radius `r2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineInstance {
    pub xs: Vec<Rational>,
    pub r2: Rational,
}

/// A disk given by the inclusive run `lo..=hi` of points it contains.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IntervalDisk {
    pub lo: usize,
    pub hi: usize,
}

impl LineInstance {
    pub fn new(xs: Vec<Rational>, r2: Rational) -> Result<Self, FixedLineError> {
        if !r2.is_positive() {
            return Err(FixedLineError::NonPositiveRadius);
        }
        if let Some(i) = (1..xs.len()).find(|&i| xs[i] <= xs[i - 1]) {
            return Err(FixedLineError::NotIncreasing(i));
        }
        Ok(LineInstance { xs, r2 })
    }

    /// Collinear points as a line instance, in their order along the line.
    /// Abscissas are scaled by the length of the line's direction vector, and
    /// the radius with them. The second value maps instance positions back to
    /// point indices.
    pub fn from_points(
        points: &[RPoint],
        r2: &Rational,
    ) -> Result<(Self, Vec<usize>), FixedLineError> {
        if !crate::oracle::all_collinear(points) {
            return Err(FixedLineError::NotCollinear);
        }
        let mut order: Vec<usize> = (0..points.len()).collect();
        order.sort_by(|&a, &b| points[a].cmp(&points[b]));
        let (first, last) = match (order.first(), order.last()) {
            (Some(&f), Some(&l)) if f != l => (f, l),
            _ => {
                let xs = order.iter().map(|_| Rational::zero()).collect();
                return Ok((LineInstance::new(xs, r2.clone())?, order));
            }
        };
        let d = points[last].sub(&points[first]);
        let xs = order.iter().map(|&i| points[i].sub(&points[first]).dot(&d)).collect();
        Ok((LineInstance::new(xs, r2 * d.norm2())?, order))
    }

    pub fn len(&self) -> usize {
        self.xs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.xs.is_empty()
    }

    pub fn points(&self) -> Vec<RPoint> {
        self.xs.iter().map(|x| RPoint::new(x.clone(), Rational::zero())).collect()
    }

    /// `x_j - x_i <= 2r`, with positions past the end at infinity.
    fn within(&self, i: usize, j: usize, ops: &mut u64) -> bool {
        *ops += 1;
        if j >= self.xs.len() {
            return false;
        }
        let g = &self.xs[j] - &self.xs[i];
        &g * &g <= &self.r2 * Rational::from_integer(4.into())
    }

    /// Disk of squared radius exactly `r2` containing exactly the run.
    pub fn witness(&self, d: IntervalDisk) -> Result<GeneralizedDisk, FixedLineError> {
        let IntervalDisk { lo, hi } = d;
        if lo > hi || hi >= self.xs.len() {
            return Err(FixedLineError::OutOfRange { lo, hi });
        }
        let mut ops = 0;
        if !self.within(lo, hi, &mut ops) {
            return Err(FixedLineError::TooLong { lo, hi });
        }
        let two = Rational::from_integer(2.into());
        let m = (&self.xs[lo] + &self.xs[hi]) / &two;
        let half = (&self.xs[hi] - &self.xs[lo]) / &two;
        // nearest excluded neighbour, if any
        let near = [lo.checked_sub(1).map(|k| &m - &self.xs[k]), self.xs.get(hi + 1).map(|x| x - &m)]
            .into_iter()
            .flatten()
            .min();
        // half-chord L = sqrt(r2 - h^2) must satisfy half <= L < near
        let hi2 = &self.r2 - &half * &half;
        let lo2 = near.map(|v| &self.r2 - &v * &v);
        let mut bits = 4;
        let h = loop {
            let h = sqrt_floor_approx(&hi2, bits);
            if lo2.as_ref().is_none_or(|l| &(&h * &h) > l) {
                break h;
            }
            bits *= 2;
        };
        Ok(GeneralizedDisk::Disk { center: RPoint::new(m, h), r2: self.r2.clone() })
    }

    pub fn witnesses(&self, disks: &[IntervalDisk]) -> Result<Vec<GeneralizedDisk>, FixedLineError> {
        disks.iter().map(|&d| self.witness(d)).collect()
    }
}

/// The minimum family, built from maximal normal-form blocks left to right.
pub fn identify_fixed_r_linear(inst: &LineInstance) -> Vec<IntervalDisk> {
    identify_fixed_r_linear_counted(inst).0
}

/// As `identify_fixed_r_linear`, also returning the number of gap
/// comparisons made.
pub fn identify_fixed_r_linear_counted(inst: &LineInstance) -> (Vec<IntervalDisk>, u64) {
    let n = inst.len();
    let mut ops = 0u64;
    let mut out = Vec::with_capacity(n / 2 + 1);
    let mut i = 0;
    while i < n {
        if !inst.within(i, i + 1, &mut ops) || !inst.within(i + 1, i + 2, &mut ops) {
            out.push(IntervalDisk { lo: i, hi: i });
            i += 1;
        } else {
            out.push(IntervalDisk { lo: i, hi: i + 1 });
            i += 1;
            while inst.within(i, i + 2, &mut ops) && inst.within(i + 2, i + 3, &mut ops) {
                out.push(IntervalDisk { lo: i, hi: i + 2 });
                i += 2;
            }
            out.push(IntervalDisk { lo: i, hi: i + 1 });
            i += 2;
        }
    }
    (out, ops)
}

fn check_identifies(n: usize, disks: &[IntervalDisk]) -> Result<(), FixedLineError> {
    let sig = |k: usize| -> Vec<usize> {
        (0..disks.len()).filter(|&d| disks[d].lo <= k && k <= disks[d].hi).collect()
    };
    let sigs: Vec<Vec<usize>> = (0..n).map(sig).collect();
    if let Some(k) = sigs.iter().position(|s| s.is_empty()) {
        return Err(FixedLineError::Uncovered(k));
    }
    for a in 0..n {
        for b in a + 1..n {
            if sigs[a] == sigs[b] {
                return Err(FixedLineError::Unseparated(a, b));
            }
        }
    }
    Ok(())
}

/// Classes of the relation "linked by a chain of disks sharing points":
/// each as (first point, last point, disk indices). Assumes every point is
/// covered.
pub fn components(n: usize, disks: &[IntervalDisk]) -> Vec<(usize, usize, Vec<usize>)> {
    let mut order: Vec<usize> = (0..disks.len()).collect();
    order.sort_by_key(|&d| (disks[d].lo, disks[d].hi));
    let mut out: Vec<(usize, usize, Vec<usize>)> = Vec::new();
    for d in order {
        let IntervalDisk { lo, hi } = disks[d];
        match out.last_mut() {
            Some((_, end, ds)) if lo <= *end => {
                *end = (*end).max(hi);
                ds.push(d);
            }
            _ => out.push((lo, hi, vec![d])),
        }
    }
    out.retain(|(lo, _, _)| *lo < n);
    out
}

/// Whether `disks` is the normal-form family of the odd run it covers: one
/// disk on a single point, or end pairs and overlapping interior triples.
pub fn is_normal_form(_inst: &LineInstance, disks: &[IntervalDisk]) -> bool {
    let Some(a) = disks.iter().map(|d| d.lo).min() else {
        return false;
    };
    let b = disks.iter().map(|d| d.hi).max().unwrap_or(a);
    let len = b - a + 1;
    if len % 2 == 0 {
        return false;
    }
    let mut got = disks.to_vec();
    got.sort();
    if len == 1 {
        return got == [IntervalDisk { lo: a, hi: a }];
    }
    let p = (len - 1) / 2;
    let mut want = vec![IntervalDisk { lo: a, hi: a + 1 }];
    for i in 1..p {
        want.push(IntervalDisk { lo: a + 2 * i - 1, hi: a + 2 * i + 1 });
    }
    want.push(IntervalDisk { lo: b - 1, hi: b });
    want.sort();
    got == want
}

/// Whether every component of an identifying family uses exactly
/// `(size + 1) / 2` disks on an odd number of points.
pub fn is_piecewise_perfect(inst: &LineInstance, disks: &[IntervalDisk]) -> Result<bool, FixedLineError> {
    check_identifies(inst.len(), disks)?;
    Ok(components(inst.len(), disks).iter().all(|(lo, hi, ds)| {
        let size = hi - lo + 1;
        size % 2 == 1 && ds.len() == size.div_ceil(2)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::rational::{frac, int};
    use crate::solver::{verify, Mode};

    fn inst(xs: &[i64], r2: Rational) -> LineInstance {
        LineInstance::new(xs.iter().map(|&x| int(x)).collect(), r2).unwrap()
    }

    fn iv(lo: usize, hi: usize) -> IntervalDisk {
        IntervalDisk { lo, hi }
    }

    #[test]
    fn traces() {
        let a = inst(&[0, 1, 2, 3, 4], int(4));
        assert_eq!(identify_fixed_r_linear(&a), vec![iv(0, 1), iv(1, 3), iv(3, 4)]);
        let b = inst(&[0, 1, 10], int(1));
        assert_eq!(identify_fixed_r_linear(&b), vec![iv(0, 0), iv(1, 1), iv(2, 2)]);
        let c = inst(&[0], frac(1, 9));
        assert_eq!(identify_fixed_r_linear(&c), vec![iv(0, 0)]);
    }

    #[test]
    fn witnesses_have_the_radius_and_the_run() {
        for (xs, r2) in [(vec![0, 1, 2, 3, 4], int(4)), (vec![0, 1, 10], int(1)), (vec![0, 2, 3, 7], int(1))] {
            let li = inst(&xs, r2.clone());
            let fam = identify_fixed_r_linear(&li);
            let w = li.witnesses(&fam).unwrap();
            for (d, g) in fam.iter().zip(&w) {
                assert_eq!(g.members(&li.points()), (d.lo..=d.hi).collect::<Vec<_>>());
                assert!(matches!(g, GeneralizedDisk::Disk { r2: r, .. } if *r == r2));
            }
            assert!(verify(&li.points(), &w, Mode::Identify).is_valid());
        }
        // a run exactly one diameter long
        let li = inst(&[0, 2, 3], int(1));
        let w = li.witness(iv(0, 1)).unwrap();
        assert_eq!(w.members(&li.points()), vec![0, 1]);
        assert_eq!(li.witness(iv(0, 2)), Err(FixedLineError::TooLong { lo: 0, hi: 2 }));
    }

    #[test]
    fn structure_checks() {
        let li = inst(&[0, 1, 2, 3, 4], int(4));
        assert!(is_normal_form(&li, &[iv(0, 1), iv(1, 3), iv(3, 4)]));
        assert!(!is_normal_form(&li, &[iv(0, 1), iv(2, 4)]));
        assert!(is_normal_form(&inst(&[5], int(1)), &[iv(0, 0)]));
        assert_eq!(is_piecewise_perfect(&li, &[iv(0, 1), iv(1, 3), iv(3, 4)]), Ok(true));
        let far = inst(&[0, 1, 10], int(1));
        assert_eq!(is_piecewise_perfect(&far, &[iv(0, 0), iv(1, 1), iv(2, 2)]), Ok(true));
        let two = inst(&[0, 1], int(1));
        assert_eq!(
            is_piecewise_perfect(&two, &[iv(0, 1), iv(0, 1)]),
            Err(FixedLineError::Unseparated(0, 1))
        );
    }

    #[test]
    fn rejects_bad_instances() {
        assert_eq!(LineInstance::new(vec![int(1), int(1)], int(1)), Err(FixedLineError::NotIncreasing(1)));
        assert_eq!(LineInstance::new(vec![], int(0)), Err(FixedLineError::NonPositiveRadius));
    }
}
