use super::sixpart::six_partition;
use super::ConstructionError;
use crate::kernel::{check_general_configuration, circumdisk, delaunay, GeneralizedDisk, RPoint, Triangulation};

/// One Delaunay step: the circumdisk of `triangle` (point indices), chosen
/// among the `survivors` of the three sectors in `trio`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Round {
    pub trio: [u8; 3],
    pub survivors: Vec<usize>,
    pub triangle: [usize; 3],
    pub disk: GeneralizedDisk,
}

/// First triangle (in the triangulation's order) with one vertex of each
/// label `0`, `1`, `2`. Every label must occur.
pub fn trichromatic_triangle(tri: &Triangulation, labels: &[u8]) -> Result<[usize; 3], ConstructionError> {
    for r in 0..3u8 {
        if !labels.contains(&r) {
            return Err(ConstructionError::EmptyRegion(r as usize));
        }
    }
    tri.triangles
        .iter()
        .find(|t| {
            let mut l = t.map(|v| labels[v]);
            l.sort_unstable();
            l == [0, 1, 2]
        })
        .copied()
        .ok_or(ConstructionError::NoTrichromatic)
}

/// At most `2 ceil(n/6) + 1` generalized disks for points in general
/// configuration: the three half-planes of a six-partition, then for the
/// sector trios `{a, c, e}` and `{b, d, f}` up to `ceil(n/6) - 1` circumdisks
/// of Delaunay triangles with a vertex in each sector of the trio, removing
/// the three vertices each time.
pub fn identify_general_position(points: &[RPoint]) -> Result<Vec<GeneralizedDisk>, ConstructionError> {
    identify_general_position_traced(points).map(|(d, _)| d)
}

/// As `identify_general_position`, also returning the Delaunay rounds.
pub fn identify_general_position_traced(
    points: &[RPoint],
) -> Result<(Vec<GeneralizedDisk>, Vec<Round>), ConstructionError> {
    check_general_configuration(points)?;
    let n = points.len();
    if n == 0 {
        return Ok((Vec::new(), Vec::new()));
    }
    let sp = six_partition(points)?;
    let rounds_max = n.div_ceil(6) - 1;
    let mut disks: Vec<GeneralizedDisk> = sp.halfplanes.to_vec();
    let mut rounds = Vec::new();
    for trio in [[0u8, 2, 4], [1, 3, 5]] {
        let mut alive: Vec<usize> =
            (0..n).filter(|&i| trio.contains(&sp.region_label[i])).collect();
        for _ in 0..rounds_max {
            if trio.iter().any(|r| !alive.iter().any(|&i| sp.region_label[i] == *r)) {
                break;
            }
            let sub: Vec<RPoint> = alive.iter().map(|&i| points[i].clone()).collect();
            let labels: Vec<u8> = alive
                .iter()
                .map(|&i| trio.iter().position(|r| *r == sp.region_label[i]).unwrap() as u8)
                .collect();
            let tri = delaunay(&sub)?;
            let t = trichromatic_triangle(&tri, &labels)?;
            let disk = circumdisk(&sub[t[0]], &sub[t[1]], &sub[t[2]])?;
            let triangle = t.map(|k| alive[k]);
            rounds.push(Round { trio, survivors: alive.clone(), triangle, disk: disk.clone() });
            disks.push(disk);
            alive.retain(|i| !triangle.contains(i));
        }
    }
    Ok((disks, rounds))
}
