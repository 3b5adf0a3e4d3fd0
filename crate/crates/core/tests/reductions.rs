use ccp_core::exact::Vector;
use ccp_core::reductions::{conv_intersection, embraces_origin, sarkaria_lift, solve_tverberg, tverberg_parts, Backend};
use ccp_core::Rational;
use proptest::prelude::*;

fn points(n: std::ops::RangeInclusive<usize>, d: usize, r: i64) -> impl Strategy<Value = Vec<Vector>> {
    prop::collection::vec(prop::collection::vec(-r..=r, d).prop_map(|v| v.into_iter().map(Rational::from).collect()), n)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn lift_embraces_origin_iff_hulls_meet(parts in prop::collection::vec(points(1..=3, 2, 3), 2..=3)) {
        let meet = conv_intersection(&parts).unwrap().is_some();
        let lifted: Vec<Vector> = sarkaria_lift(&parts).unwrap().concat();
        prop_assert_eq!(meet, embraces_origin(&lifted).unwrap());
    }

    #[test]
    fn tverberg_partitions_every_point_once(pts in points(3..=8, 2, 6)) {
        let out = solve_tverberg(&pts, Backend::Pls).unwrap();
        prop_assert_eq!(out.m, tverberg_parts(pts.len(), 2));
        prop_assert_eq!(out.certificate.partition.len(), out.m);
        let mut all: Vec<usize> = out.certificate.partition.concat();
        all.sort_unstable();
        prop_assert_eq!(all, (0..pts.len()).collect::<Vec<_>>());
        prop_assert!(out.certificate.verify(&pts));
    }
}
