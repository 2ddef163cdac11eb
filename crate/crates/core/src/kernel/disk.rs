use std::fmt;

use num_traits::{Signed, Zero};

use super::point::RPoint;
use super::rational::{format_rational, Rational};
use super::{KernelError, Sign};

/// A closed disk, or a closed half-plane seen as the limit of ever larger
/// disks.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GeneralizedDisk {
    /// `|p - center|^2 <= r2`
    Disk { center: RPoint, r2: Rational },
    /// `a*x + b*y <= c`
    HalfPlane { a: Rational, b: Rational, c: Rational },
}

impl GeneralizedDisk {
    pub fn disk(center: RPoint, r2: Rational) -> Result<Self, KernelError> {
        if r2.is_negative() {
            return Err(KernelError::NegativeRadius);
        }
        Ok(GeneralizedDisk::Disk { center, r2 })
    }

    pub fn half_plane(a: Rational, b: Rational, c: Rational) -> Result<Self, KernelError> {
        if a.is_zero() && b.is_zero() {
            return Err(KernelError::DegenerateHalfPlane);
        }
        Ok(GeneralizedDisk::HalfPlane { a, b, c })
    }

    /// Signed position of `p`: `Negative` strictly inside, `Zero` on the
    /// boundary, `Positive` strictly outside.
    pub fn side(&self, p: &RPoint) -> Sign {
        let v = match self {
            GeneralizedDisk::Disk { center, r2 } => p.dist2(center) - r2,
            GeneralizedDisk::HalfPlane { a, b, c } => a * &p.x + b * &p.y - c,
        };
        Sign::of(&v)
    }

    pub fn contains(&self, p: &RPoint) -> bool {
        self.side(p) != Sign::Positive
    }

    pub fn is_half_plane(&self) -> bool {
        matches!(self, GeneralizedDisk::HalfPlane { .. })
    }

    /// Indices of the points covered by this disk.
    pub fn members(&self, points: &[RPoint]) -> Vec<usize> {
        points
            .iter()
            .enumerate()
            .filter(|(_, p)| self.contains(p))
            .map(|(i, _)| i)
            .collect()
    }

    /// True when no point lies exactly on the boundary.
    pub fn is_strict_on(&self, points: &[RPoint]) -> bool {
        points.iter().all(|p| self.side(p) != Sign::Zero)
    }
}

impl fmt::Display for GeneralizedDisk {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeneralizedDisk::Disk { center, r2 } => {
                write!(f, "disk(center {center}, r2 {})", format_rational(r2))
            }
            GeneralizedDisk::HalfPlane { a, b, c } => write!(
                f,
                "halfplane({}*x + {}*y <= {})",
                format_rational(a),
                format_rational(b),
                format_rational(c)
            ),
        }
    }
}
