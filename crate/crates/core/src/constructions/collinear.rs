use super::ConstructionError;
use crate::kernel::{check_distinct, GeneralizedDisk, RPoint};
use crate::oracle::{all_collinear, interval_disk, order_along_line};

/// `ceil((n + 1) / 2)` disks for collinear points: disk `k` covers the run of
/// `ceil(n / 2)` consecutive points starting at the `k`-th (shorter at the
/// end), so the signatures grow by one disk and then shrink by one.
pub fn identify_collinear(points: &[RPoint]) -> Result<Vec<GeneralizedDisk>, ConstructionError> {
    check_distinct(points)?;
    if !all_collinear(points) {
        return Err(ConstructionError::NotCollinear);
    }
    let n = points.len();
    if n == 0 {
        return Ok(Vec::new());
    }
    let order = order_along_line(points);
    let len = n.div_ceil(2);
    let count = (n + 2) / 2;
    Ok((0..count)
        .map(|k| interval_disk(points, &order, k, (k + len - 1).min(n - 1)))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solver::{verify, Mode};

    #[test]
    fn sizes_and_validity() {
        for n in 1..=12i64 {
            let pts: Vec<RPoint> = (0..n).map(|i| RPoint::from_ints(3 * i - 7, 2 * i)).collect();
            let d = identify_collinear(&pts).unwrap();
            assert_eq!(d.len() as i64, (n + 2) / 2);
            assert!(verify(&pts, &d, Mode::Identify).is_valid(), "n = {n}");
        }
        let bent = [RPoint::from_ints(0, 0), RPoint::from_ints(1, 0), RPoint::from_ints(0, 1)];
        assert_eq!(identify_collinear(&bent), Err(ConstructionError::NotCollinear));
    }
}
