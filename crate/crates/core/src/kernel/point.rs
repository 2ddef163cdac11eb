use std::fmt;

use super::rational::{format_rational, int, Rational};

/// A point with exact rational coordinates. Ordered lexicographically by
/// `(x, y)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RPoint {
    pub x: Rational,
    pub y: Rational,
}

impl RPoint {
    pub fn new(x: Rational, y: Rational) -> Self {
        RPoint { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        RPoint::new(int(x), int(y))
    }

    pub fn sub(&self, o: &RPoint) -> RPoint {
        RPoint::new(&self.x - &o.x, &self.y - &o.y)
    }

    pub fn add(&self, o: &RPoint) -> RPoint {
        RPoint::new(&self.x + &o.x, &self.y + &o.y)
    }

    pub fn scale(&self, k: &Rational) -> RPoint {
        RPoint::new(&self.x * k, &self.y * k)
    }

    pub fn dot(&self, o: &RPoint) -> Rational {
        &self.x * &o.x + &self.y * &o.y
    }

    pub fn cross(&self, o: &RPoint) -> Rational {
        &self.x * &o.y - &self.y * &o.x
    }

    pub fn norm2(&self) -> Rational {
        self.dot(self)
    }

    pub fn dist2(&self, o: &RPoint) -> Rational {
        self.sub(o).norm2()
    }

    pub fn midpoint(&self, o: &RPoint) -> RPoint {
        let h = Rational::new(1.into(), 2.into());
        self.add(o).scale(&h)
    }

    /// Counterclockwise quarter turn.
    pub fn perp(&self) -> RPoint {
        RPoint::new(-self.y.clone(), self.x.clone())
    }
}

impl fmt::Display for RPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", format_rational(&self.x), format_rational(&self.y))
    }
}
