//! Small exact helpers shared by several modules.

use std::cmp::Ordering;

use num_traits::{Signed, Zero};

use crate::kernel::RPoint;

fn half(v: &RPoint) -> u8 {
    if v.y.is_positive() || (v.y.is_zero() && v.x.is_positive()) {
        0
    } else {
        1
    }
}

/// Counterclockwise angular order of nonzero vectors, starting at the
/// positive x axis.
pub fn angle_cmp(u: &RPoint, v: &RPoint) -> Ordering {
    half(u).cmp(&half(v)).then_with(|| {
        let c = u.cross(v);
        if c.is_positive() {
            Ordering::Less
        } else if c.is_negative() {
            Ordering::Greater
        } else {
            Ordering::Equal
        }
    })
}

/// True if `u` and `v` point the same way (positive multiples).
pub fn same_direction(u: &RPoint, v: &RPoint) -> bool {
    u.cross(v).is_zero() && u.dot(v).is_positive()
}
