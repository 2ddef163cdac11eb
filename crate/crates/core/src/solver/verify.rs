use crate::kernel::{GeneralizedDisk, RPoint};

/// What an identifying family has to achieve.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    /// Every point covered, all signatures distinct.
    Identify,
    /// All signatures distinct; one point may stay uncovered.
    SeparateOnly,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Status {
    Valid,
    Uncovered(usize),
    Unseparated(usize, usize),
}

/// Per-point signatures (sorted indices of the disks containing the point)
/// and the first violation found, if any.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub signatures: Vec<Vec<usize>>,
    pub status: Status,
}

impl Certificate {
    pub fn is_valid(&self) -> bool {
        self.status == Status::Valid
    }
}

/// Checks a disk family against a point set. Uncovered points are reported
/// before unseparated pairs; within each kind the lowest indices win.
pub fn verify(points: &[RPoint], disks: &[GeneralizedDisk], mode: Mode) -> Certificate {
    let signatures: Vec<Vec<usize>> = points
        .iter()
        .map(|p| (0..disks.len()).filter(|&d| disks[d].contains(p)).collect())
        .collect();
    let status = first_violation(&signatures, mode);
    Certificate { signatures, status }
}

fn first_violation(sigs: &[Vec<usize>], mode: Mode) -> Status {
    if mode == Mode::Identify {
        if let Some(i) = sigs.iter().position(|s| s.is_empty()) {
            return Status::Uncovered(i);
        }
    }
    let mut order: Vec<usize> = (0..sigs.len()).collect();
    order.sort_by(|&a, &b| sigs[a].cmp(&sigs[b]).then(a.cmp(&b)));
    // lowest colliding pair: smallest first index, then smallest partner
    let mut best: Option<(usize, usize)> = None;
    for run in order.chunk_by(|&a, &b| sigs[a] == sigs[b]) {
        if run.len() > 1 {
            let pair = (run[0], run[1]);
            if best.is_none_or(|b| pair < b) {
                best = Some(pair);
            }
        }
    }
    match best {
        Some((a, b)) => Status::Unseparated(a, b),
        None => Status::Valid,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::rational::int;

    fn two_points() -> (Vec<RPoint>, GeneralizedDisk, GeneralizedDisk) {
        let pts = vec![RPoint::from_ints(0, 0), RPoint::from_ints(2, 0)];
        let d1 = GeneralizedDisk::disk(RPoint::from_ints(0, 0), int(1)).unwrap();
        let d2 = GeneralizedDisk::disk(RPoint::from_ints(1, 0), int(4)).unwrap();
        (pts, d1, d2)
    }

    #[test]
    fn two_point_examples() {
        let (pts, d1, d2) = two_points();
        let c = verify(&pts, &[d1.clone(), d2.clone()], Mode::Identify);
        assert_eq!(c.status, Status::Valid);
        assert_eq!(c.signatures, vec![vec![0, 1], vec![1]]);
        assert_eq!(verify(&pts, &[d2], Mode::Identify).status, Status::Unseparated(0, 1));
        assert_eq!(verify(&pts, std::slice::from_ref(&d1), Mode::Identify).status, Status::Uncovered(1));
        assert_eq!(verify(&pts, &[d1], Mode::SeparateOnly).status, Status::Valid);
    }

    #[test]
    fn lowest_pair_reported() {
        let sigs = vec![vec![1], vec![0], vec![1], vec![0]];
        assert_eq!(first_violation(&sigs, Mode::Identify), Status::Unseparated(0, 2));
    }
}
