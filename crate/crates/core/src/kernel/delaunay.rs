use std::collections::HashMap;

use super::point::RPoint;
use super::predicates::{check_distinct, check_no_three_collinear, incircle_det, orientation};
use super::{KernelError, Sign};

/// Triangulation of a point set; triangles are counterclockwise index
/// triples into `vertices`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triangulation {
    pub vertices: Vec<RPoint>,
    pub triangles: Vec<[usize; 3]>,
}

impl Triangulation {
    /// Exhaustively checks the empty-circumcircle property.
    pub fn is_delaunay(&self) -> bool {
        self.triangles.iter().all(|t| {
            let [a, b, c] = t.map(|i| &self.vertices[i]);
            self.vertices.iter().enumerate().all(|(q, pq)| {
                t.contains(&q) || Sign::of(&incircle_det(a, b, c, pq)) == Sign::Negative
            })
        })
    }
}

/// Directed edge `(u, v)` -> apex `w` of the counterclockwise triangle
/// `(u, v, w)`.
struct Mesh {
    apex: HashMap<(usize, usize), usize>,
}

impl Mesh {
    fn add(&mut self, a: usize, b: usize, c: usize) {
        self.apex.insert((a, b), c);
        self.apex.insert((b, c), a);
        self.apex.insert((c, a), b);
    }

    fn remove(&mut self, a: usize, b: usize, c: usize) {
        self.apex.remove(&(a, b));
        self.apex.remove(&(b, c));
        self.apex.remove(&(c, a));
    }

    /// Lawson flips restoring local Delaunay-ness of edge `(a, b)` in
    /// triangle `(a, b, p)`.
    fn legalize(&mut self, pts: &[RPoint], a: usize, b: usize, p: usize) {
        let mut stack = vec![(a, b, p)];
        while let Some((a, b, p)) = stack.pop() {
            if self.apex.get(&(a, b)) != Some(&p) {
                continue;
            }
            let Some(&d) = self.apex.get(&(b, a)) else {
                continue;
            };
            if Sign::of(&incircle_det(&pts[a], &pts[b], &pts[p], &pts[d])) == Sign::Positive {
                self.remove(a, b, p);
                self.remove(b, a, d);
                self.add(a, d, p);
                self.add(d, b, p);
                stack.push((a, d, p));
                stack.push((d, b, p));
            }
        }
    }
}

/// Delaunay triangulation of a point set in general configuration, built by
/// lexicographic incremental insertion with exact flips.
///
/// Collinear triples and cocircular quadruples that make the result
/// non-unique are rejected, not perturbed.
pub fn delaunay(pts: &[RPoint]) -> Result<Triangulation, KernelError> {
    if pts.len() < 3 {
        return Err(KernelError::TooFewPoints { needed: 3, got: pts.len() });
    }
    check_distinct(pts)?;
    check_no_three_collinear(pts)?;

    let mut order: Vec<usize> = (0..pts.len()).collect();
    order.sort_by(|&i, &j| pts[i].cmp(&pts[j]));

    let mut mesh = Mesh { apex: HashMap::new() };
    let (a, b, c) = (order[0], order[1], order[2]);
    if orientation(&pts[a], &pts[b], &pts[c]) == Sign::Positive {
        mesh.add(a, b, c);
    } else {
        mesh.add(a, c, b);
    }

    for &p in &order[3..] {
        // p is lexicographically last, so it lies outside the current hull.
        let visible: Vec<(usize, usize)> = mesh
            .apex
            .keys()
            .filter(|&&(u, v)| !mesh.apex.contains_key(&(v, u)))
            .filter(|&&(u, v)| orientation(&pts[u], &pts[v], &pts[p]) == Sign::Negative)
            .copied()
            .collect();
        for &(u, v) in &visible {
            mesh.add(v, u, p);
        }
        for &(u, v) in &visible {
            mesh.legalize(pts, v, u, p);
        }
    }

    let mut triangles: Vec<[usize; 3]> = mesh
        .apex
        .iter()
        .filter(|(&(u, v), &w)| u < v && u < w)
        .map(|(&(u, v), &w)| [u, v, w])
        .collect();
    triangles.sort();

    for t in &triangles {
        let [a, b, c] = t.map(|i| &pts[i]);
        for (q, pq) in pts.iter().enumerate() {
            if t.contains(&q) {
                continue;
            }
            match Sign::of(&incircle_det(a, b, c, pq)) {
                Sign::Negative => {}
                Sign::Zero => {
                    let mut quad = [t[0], t[1], t[2], q];
                    quad.sort();
                    return Err(KernelError::Cocyclic(quad[0], quad[1], quad[2], quad[3]));
                }
                Sign::Positive => unreachable!("flip algorithm left a non-Delaunay triangle"),
            }
        }
    }

    Ok(Triangulation { vertices: pts.to_vec(), triangles })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: i64, y: i64) -> RPoint {
        RPoint::from_ints(x, y)
    }

    /// All ccw triangles of the point set whose circumcircle is empty.
    fn brute_force_delaunay(pts: &[RPoint]) -> Vec<[usize; 3]> {
        let n = pts.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let tri = if orientation(&pts[i], &pts[j], &pts[k]) == Sign::Positive {
                        [i, j, k]
                    } else {
                        [i, k, j]
                    };
                    let empty = (0..n).filter(|q| !tri.contains(q)).all(|q| {
                        Sign::of(&incircle_det(&pts[tri[0]], &pts[tri[1]], &pts[tri[2]], &pts[q]))
                            == Sign::Negative
                    });
                    if empty {
                        out.push(tri);
                    }
                }
            }
        }
        out.sort();
        out
    }

    #[test]
    fn single_triangle() {
        let t = delaunay(&[p(0, 0), p(3, 0), p(0, 3)]).unwrap();
        assert_eq!(t.triangles, vec![[0, 1, 2]]);
    }

    #[test]
    fn square_is_degenerate() {
        let e = delaunay(&[p(0, 0), p(1, 0), p(1, 1), p(0, 1)]).unwrap_err();
        assert_eq!(e, KernelError::Cocyclic(0, 1, 2, 3));
    }

    #[test]
    fn four_points_match_brute_force() {
        let pts = [p(0, 0), p(4, 0), p(5, 3), p(1, 4)];
        let t = delaunay(&pts).unwrap();
        assert_eq!(t.triangles.len(), 2);
        assert!(t.is_delaunay());
        assert_eq!(t.triangles, brute_force_delaunay(&pts));
    }

    #[test]
    fn collinear_input_rejected() {
        assert_eq!(
            delaunay(&[p(0, 0), p(1, 1), p(2, 2), p(0, 5)]).unwrap_err(),
            KernelError::Collinear(0, 1, 2)
        );
    }

    #[test]
    fn larger_set_matches_brute_force() {
        let pts = [
            p(0, 0), p(7, 1), p(3, 9), p(11, 4), p(5, 6), p(2, 13), p(9, 12), p(14, 8),
            p(6, -2), p(-4, 7),
        ];
        let t = delaunay(&pts).unwrap();
        assert!(t.is_delaunay());
        assert_eq!(t.triangles, brute_force_delaunay(&pts));
    }
}
