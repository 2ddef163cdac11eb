//! Ground truth: every subset of a point set that some disk cuts out, each
//! with a concrete witness disk.
//!
//! For free radius the subsets are read off the circles through point
//! triples: around such a circle the realizable subsets are the points
//! strictly inside plus any circular arc of the points on the circle. For a
//! fixed radius the candidate centers are sampled around the vertices of the
//! arrangement of radius-`r` circles centered at the points.

mod fixed;
mod free;

use std::collections::BTreeMap;

use crate::kernel::{GeneralizedDisk, RPoint, Rational, Sign};
use crate::subset::Subset;

pub use fixed::realizable_subsets_fixed_r;
pub use free::realizable_subsets;

/// Free radius, or every disk of squared radius exactly `r2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RadiusMode {
    Free,
    Fixed(Rational),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub subset: Subset,
    pub witness: GeneralizedDisk,
}

/// Points together with all of their disk-realizable subsets, sorted by
/// subset.
#[derive(Clone, Debug)]
pub struct Hypergraph {
    pub points: Vec<RPoint>,
    pub edges: Vec<Edge>,
}

impl Hypergraph {
    pub(crate) fn from_map(points: Vec<RPoint>, map: BTreeMap<Subset, GeneralizedDisk>) -> Self {
        let edges = map
            .into_iter()
            .map(|(subset, witness)| Edge { subset, witness })
            .collect();
        Hypergraph { points, edges }
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn subsets(&self) -> impl Iterator<Item = &Subset> {
        self.edges.iter().map(|e| &e.subset)
    }

    pub fn witness_for(&self, s: &Subset) -> Option<&GeneralizedDisk> {
        self.edges
            .binary_search_by(|e| e.subset.cmp(s))
            .ok()
            .map(|i| &self.edges[i].witness)
    }

    /// Index of the first edge whose witness does not cut out exactly its
    /// subset.
    pub fn first_bad_witness(&self) -> Option<usize> {
        self.edges
            .iter()
            .position(|e| membership(&e.witness, &self.points) != e.subset)
    }
}

pub fn membership(d: &GeneralizedDisk, points: &[RPoint]) -> Subset {
    Subset::from_indices(d.members(points))
}

/// `Some(witness)` if a disk of the given radius mode cuts exactly `subset`
/// out of `points`, `None` if no disk does.
pub fn realize_subset(
    points: &[RPoint],
    subset: &Subset,
    radius: &RadiusMode,
) -> Option<GeneralizedDisk> {
    if subset.is_empty() || subset.iter().any(|i| i >= points.len()) {
        return None;
    }
    let h = match radius {
        RadiusMode::Free => realizable_subsets(points),
        RadiusMode::Fixed(r2) => realizable_subsets_fixed_r(points, r2),
    };
    let w = h.witness_for(subset)?.clone();
    (membership(&w, points) == *subset).then_some(w)
}

/// True if the disk cuts out exactly `target`, with no point on its boundary.
pub(crate) fn cuts_strictly(d: &GeneralizedDisk, points: &[RPoint], target: &Subset) -> bool {
    points.iter().enumerate().all(|(i, p)| match d.side(p) {
        Sign::Negative => target.contains(i),
        Sign::Positive => !target.contains(i),
        Sign::Zero => false,
    })
}

/// True if all points lie on one line (vacuously for fewer than three).
pub fn all_collinear(points: &[RPoint]) -> bool {
    let Some(a) = points.first() else { return true };
    let Some(b) = points.iter().find(|p| *p != a) else { return true };
    points
        .iter()
        .all(|p| crate::kernel::orientation(a, b, p) == Sign::Zero)
}

/// Indices of collinear points sorted along their line.
pub(crate) fn order_along_line(points: &[RPoint]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..points.len()).collect();
    idx.sort_by(|&i, &j| points[i].cmp(&points[j]));
    idx
}

/// A disk centered on the line through collinear points that contains
/// exactly the run `order[lo..=hi]`, strictly.
pub(crate) fn interval_disk(points: &[RPoint], order: &[usize], lo: usize, hi: usize) -> GeneralizedDisk {
    let a = &points[order[lo]];
    let b = &points[order[hi]];
    let m = a.midpoint(b);
    let inner = m.dist2(a);
    let mut outer: Option<Rational> = None;
    if lo > 0 {
        outer = Some(m.dist2(&points[order[lo - 1]]));
    }
    if hi + 1 < order.len() {
        let d = m.dist2(&points[order[hi + 1]]);
        outer = Some(match outer {
            Some(o) if o < d => o,
            _ => d,
        });
    }
    let r2 = match outer {
        Some(o) => (&inner + &o) / Rational::from_integer(2.into()),
        None => &inner + Rational::from_integer(1.into()),
    };
    GeneralizedDisk::Disk { center: m, r2 }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::rational::frac;

    fn p(x: i64, y: i64) -> RPoint {
        RPoint::from_ints(x, y)
    }

    fn sets(h: &Hypergraph) -> Vec<Vec<usize>> {
        h.subsets().map(|s| s.iter().collect()).collect()
    }

    #[test]
    fn collinear_triple_never_skips_the_middle() {
        let h = realizable_subsets(&[p(0, 0), p(1, 1), p(2, 2)]);
        assert_eq!(
            sets(&h),
            vec![vec![0], vec![0, 1], vec![0, 1, 2], vec![1], vec![1, 2], vec![2]]
        );
        assert_eq!(h.first_bad_witness(), None);
    }

    #[test]
    fn generic_triple_gives_everything() {
        let h = realizable_subsets(&[p(0, 0), p(3, 1), p(1, 4)]);
        assert_eq!(h.len(), 7);
        assert_eq!(h.first_bad_witness(), None);
    }

    #[test]
    fn single_point() {
        let h = realizable_subsets(&[p(5, -2)]);
        assert_eq!(sets(&h), vec![vec![0]]);
        assert_eq!(h.first_bad_witness(), None);
        assert!(realizable_subsets(&[]).is_empty());
    }

    #[test]
    fn fixed_radius_examples() {
        let one = frac(1, 1);
        let h = realizable_subsets_fixed_r(&[p(0, 0), p(10, 0)], &one);
        assert_eq!(sets(&h), vec![vec![0], vec![1]]);
        let h = realizable_subsets_fixed_r(&[p(0, 0), p(1, 0)], &one);
        assert_eq!(sets(&h), vec![vec![0], vec![0, 1], vec![1]]);
        let h = realizable_subsets_fixed_r(&[p(0, 0), p(1, 0), p(9, 0)], &frac(1, 4));
        assert_eq!(sets(&h), vec![vec![0], vec![0, 1], vec![1], vec![2]]);
        assert_eq!(h.first_bad_witness(), None);
        for e in &h.edges {
            let GeneralizedDisk::Disk { r2, .. } = &e.witness else { panic!() };
            assert_eq!(r2, &frac(1, 4));
        }
    }

    #[test]
    fn realize_prescribed_subsets() {
        let line = [p(0, 0), p(1, 0), p(2, 0)];
        assert_eq!(realize_subset(&line, &Subset::from_indices([0, 2]), &RadiusMode::Free), None);
        let w = realize_subset(&line, &Subset::from_indices([1]), &RadiusMode::Free).unwrap();
        assert_eq!(membership(&w, &line), Subset::from_indices([1]));

        // 2x6 grid, row 1 columns 1..5 and row 2 columns 3..4
        let grid: Vec<RPoint> = (1..=2)
            .flat_map(|y| (1..=6).map(move |x| p(x, y)))
            .collect();
        let target = Subset::from_indices([0, 1, 2, 3, 4, 8, 9]);
        let w = realize_subset(&grid, &target, &RadiusMode::Free).unwrap();
        assert_eq!(membership(&w, &grid), target);
    }
}
