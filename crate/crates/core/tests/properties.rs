mod common;

use diskident::app::format::{parse_disks, parse_points, write_disks, write_points};
use diskident::constructions::identify_greedy_half;
use diskident::oracle::{realizable_subsets, realizable_subsets_fixed_r, RadiusMode};
use diskident::solver::{solve_exact, verify, Mode};
use diskident::{GeneralizedDisk, RPoint, Rational};
use num_bigint::BigInt;
use proptest::prelude::*;

use common::{log_floor_count, sqrt_floor_count};

fn point_set(max: usize, range: i64) -> impl Strategy<Value = Vec<RPoint>> {
    prop::collection::btree_set((0..range, 0..range), 1..=max)
        .prop_map(|s| s.into_iter().map(|(x, y)| RPoint::from_ints(x, y)).collect())
}

fn rational() -> impl Strategy<Value = Rational> {
    (-1000i64..1000, 1i64..50).prop_map(|(n, d)| Rational::new(BigInt::from(n), BigInt::from(d)))
}

fn disk() -> impl Strategy<Value = GeneralizedDisk> {
    prop_oneof![
        (rational(), rational(), rational()).prop_map(|(x, y, r)| GeneralizedDisk::Disk {
            center: RPoint::new(x, y),
            r2: &r * &r,
        }),
        (rational(), rational(), rational())
            .prop_filter("normal", |(a, b, _)| *a != Rational::from_integer(0.into())
                || *b != Rational::from_integer(0.into()))
            .prop_map(|(a, b, c)| GeneralizedDisk::HalfPlane { a, b, c }),
    ]
}

fn size(points: &[RPoint], mode: Mode, radius: &RadiusMode) -> usize {
    solve_exact(points, mode, radius).unwrap().size
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 32, ..ProptestConfig::default() })]

    #[test]
    fn files_round_trip(pts in prop::collection::vec((rational(), rational()), 0..12),
                        disks in prop::collection::vec(disk(), 0..6)) {
        let mut points: Vec<RPoint> = Vec::new();
        for (x, y) in pts {
            let p = RPoint::new(x, y);
            if !points.contains(&p) {
                points.push(p);
            }
        }
        prop_assert_eq!(parse_points(&write_points(&points, None)).unwrap().points, points);
        prop_assert_eq!(parse_disks(&write_disks(&disks, None)).unwrap().disks, disks);
    }

    #[test]
    fn adding_disks_keeps_separation(pts in point_set(9, 8), ds in prop::collection::vec(disk(), 1..6), extra in disk()) {
        let before = verify(&pts, &ds, Mode::SeparateOnly);
        let mut more = ds.clone();
        more.push(extra);
        let after = verify(&pts, &more, Mode::SeparateOnly);
        prop_assert!(!before.is_valid() || after.is_valid());
    }

    #[test]
    fn solver_output_is_optimal_and_valid(pts in point_set(7, 6)) {
        let n = pts.len();
        let res = solve_exact(&pts, Mode::Identify, &RadiusMode::Free).unwrap();
        prop_assert!(verify(&pts, &res.disks, Mode::Identify).is_valid());
        prop_assert!(res.size >= log_floor_count(n).max(sqrt_floor_count(n)));
        prop_assert!(res.size <= identify_greedy_half(&pts).unwrap().len());
        let sep = size(&pts, Mode::SeparateOnly, &RadiusMode::Free);
        prop_assert!(sep <= res.size && res.size <= sep + 1);
    }

    #[test]
    fn removing_a_point_never_costs_more(pts in point_set(7, 6), k in 0usize..7) {
        prop_assume!(pts.len() >= 2);
        let mut fewer = pts.clone();
        fewer.remove(k % pts.len());
        prop_assert!(size(&fewer, Mode::Identify, &RadiusMode::Free) <= size(&pts, Mode::Identify, &RadiusMode::Free));
    }

    #[test]
    fn free_radius_never_worse_than_fixed(pts in point_set(6, 5), num in 1i64..8, den in 1i64..4) {
        let r = Rational::new(num.into(), den.into());
        let fixed = RadiusMode::Fixed(&r * &r);
        let h = realizable_subsets_fixed_r(&pts, &(&r * &r));
        prop_assert_eq!(h.first_bad_witness(), None);
        let free = realizable_subsets(&pts);
        for s in h.subsets() {
            prop_assert!(free.witness_for(s).is_some());
        }
        if let Ok(res) = solve_exact(&pts, Mode::Identify, &fixed) {
            prop_assert!(verify(&pts, &res.disks, Mode::Identify).is_valid());
            prop_assert!(size(&pts, Mode::Identify, &RadiusMode::Free) <= res.size);
        }
    }
}
