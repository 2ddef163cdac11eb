use super::point::RPoint;
use super::predicates::orientation;
use super::Sign;

/// Counterclockwise convex hull (Andrew's monotone chain), starting at the
/// lexicographically smallest point. Duplicates and collinear boundary points
/// are dropped.
pub fn convex_hull(pts: &[RPoint]) -> Vec<RPoint> {
    let mut sorted: Vec<RPoint> = pts.to_vec();
    sorted.sort();
    sorted.dedup();
    if sorted.len() <= 2 {
        return sorted;
    }
    let mut lower: Vec<RPoint> = Vec::with_capacity(sorted.len());
    for p in &sorted {
        while lower.len() >= 2
            && orientation(&lower[lower.len() - 2], &lower[lower.len() - 1], p) != Sign::Positive
        {
            lower.pop();
        }
        lower.push(p.clone());
    }
    let mut upper: Vec<RPoint> = Vec::with_capacity(sorted.len());
    for p in sorted.iter().rev() {
        while upper.len() >= 2
            && orientation(&upper[upper.len() - 2], &upper[upper.len() - 1], p) != Sign::Positive
        {
            upper.pop();
        }
        upper.push(p.clone());
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    if lower.len() == 2 && lower[0] == lower[1] {
        lower.pop();
    }
    lower
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: i64, y: i64) -> RPoint {
        RPoint::from_ints(x, y)
    }

    #[test]
    fn hull_examples() {
        assert_eq!(convex_hull(&[p(0, 0)]), vec![p(0, 0)]);
        assert_eq!(
            convex_hull(&[p(0, 0), p(2, 0), p(1, 1), p(1, 3)]),
            vec![p(0, 0), p(2, 0), p(1, 3)]
        );
        assert_eq!(
            convex_hull(&[p(1, 1), p(0, 1), p(0, 0), p(1, 0)]),
            vec![p(0, 0), p(1, 0), p(1, 1), p(0, 1)]
        );
    }

    #[test]
    fn collinear_and_duplicate_inputs() {
        assert_eq!(convex_hull(&[p(2, 2), p(0, 0), p(1, 1), p(0, 0)]), vec![p(0, 0), p(2, 2)]);
        assert_eq!(convex_hull(&[p(3, 3), p(3, 3)]), vec![p(3, 3)]);
        // collinear point on an edge is dropped
        assert_eq!(
            convex_hull(&[p(0, 0), p(1, 0), p(2, 0), p(1, 2)]),
            vec![p(0, 0), p(2, 0), p(1, 2)]
        );
    }
}
