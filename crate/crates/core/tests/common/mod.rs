#![allow(dead_code)]

use std::collections::BTreeSet;

use diskident::{RPoint, Rational};
use num_traits::{Signed, Zero};
use rand::Rng;

/// `coef . x < rhs`
#[derive(Clone)]
struct Strict {
    coef: Vec<Rational>,
    rhs: Rational,
}

/// Fourier-Motzkin on a system of strict inequalities.
fn feasible(mut sys: Vec<Strict>, vars: usize) -> bool {
    for k in 0..vars {
        let (mut pos, mut neg, mut rest) = (Vec::new(), Vec::new(), Vec::new());
        for c in sys {
            if c.coef[k].is_positive() {
                pos.push(c);
            } else if c.coef[k].is_negative() {
                neg.push(c);
            } else {
                rest.push(c);
            }
        }
        for p in &pos {
            for q in &neg {
                let (a, b) = (p.coef[k].clone(), -q.coef[k].clone());
                let coef = (0..vars).map(|j| &p.coef[j] * &b + &q.coef[j] * &a).collect();
                rest.push(Strict { coef, rhs: &p.rhs * &b + &q.rhs * &a });
            }
        }
        sys = rest;
    }
    sys.iter().all(|c| c.rhs.is_positive())
}

/// Every nonempty subset cut out by an open disk, decided one subset at a
/// time: `S` is realizable iff some `(cx, cy, w)` has
/// `|p|^2 - 2 c.p + w < 0` on `S` and `> 0` off `S`.
pub fn naive_free_subsets(points: &[RPoint]) -> BTreeSet<Vec<usize>> {
    let n = points.len();
    assert!(n <= 12);
    let two = Rational::from_integer(2.into());
    let mut out = BTreeSet::new();
    for mask in 1u32..(1 << n) {
        let sys = points
            .iter()
            .enumerate()
            .map(|(i, p)| {
                let norm = &p.x * &p.x + &p.y * &p.y;
                let coef = vec![-&two * &p.x, -&two * &p.y, Rational::from_integer(1.into())];
                if mask >> i & 1 == 1 {
                    Strict { coef, rhs: -norm }
                } else {
                    Strict { coef: coef.into_iter().map(|c| -c).collect(), rhs: norm }
                }
            })
            .collect();
        if feasible(sys, 3) {
            out.insert((0..n).filter(|i| mask >> i & 1 == 1).collect());
        }
    }
    out
}

/// Distinct integer points in `[0, range)^2`.
pub fn random_points(rng: &mut impl Rng, n: usize, range: i64) -> Vec<RPoint> {
    let mut pts: Vec<RPoint> = Vec::with_capacity(n);
    while pts.len() < n {
        let p = RPoint::from_ints(rng.gen_range(0..range), rng.gen_range(0..range));
        if !pts.contains(&p) {
            pts.push(p);
        }
    }
    pts
}

/// Smallest `k` with `k^2 - k + 1 >= n`.
pub fn sqrt_floor_count(n: usize) -> usize {
    (1..).find(|&k: &usize| k * k - k + 1 >= n).unwrap()
}

/// Smallest `k` with `2^k - 1 >= n`.
pub fn log_floor_count(n: usize) -> usize {
    (0..).find(|&k: &u32| (1usize << k) > n).unwrap() as usize
}

pub fn ceil_half(n: usize) -> usize {
    n.div_ceil(2)
}

pub fn rat(s: &str) -> Rational {
    diskident::kernel::rational::parse_rational(s).unwrap()
}

pub fn is_zero(r: &Rational) -> bool {
    r.is_zero()
}
