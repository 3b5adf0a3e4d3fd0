use ccp_core::exact::{dot, sub_vec, Rational, Vector};
use ccp_core::generate::random_instance;
use ccp_core::oracle::min_distance_bruteforce;
use ccp_core::pls::{nearest_point_in_cone, potential, run_local_search, LocalSearchOptions, PivotRule};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn point(d: usize) -> impl Strategy<Value = Vector> {
    prop::collection::vec(-4i64..=4, d).prop_map(|v| v.into_iter().map(Rational::from).collect())
}

fn cone_case() -> impl Strategy<Value = (Vec<Vector>, Vector)> {
    (1usize..=3).prop_flat_map(|d| (prop::collection::vec(point(d), 0..=5), point(d)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn projection_satisfies_kkt((c, b) in cone_case()) {
        let p = nearest_point_in_cone(&c, &b).unwrap();
        let r = sub_vec(&b, &p.point);
        prop_assert_eq!(dot(&r, &r), p.squared_distance.clone());
        prop_assert_eq!(dot(&r, &p.point), Rational::from(0));
        for g in &c {
            prop_assert!(dot(&r, g) <= 0u32);
        }
        prop_assert!(p.weights.iter().all(|w| *w > 0u32));
        let mut sum = vec![Rational::from(0); b.len()];
        for (&j, w) in p.support.iter().zip(&p.weights) {
            for (s, x) in sum.iter_mut().zip(&c[j]) {
                *s += w * x;
            }
        }
        prop_assert_eq!(sum, p.point);
    }

    #[test]
    fn sampling_never_beats_the_projection((c, b) in cone_case(), seed in any::<u64>()) {
        let exact = nearest_point_in_cone(&c, &b).unwrap().squared_distance;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        prop_assert!(min_distance_bruteforce(&c, &b, 50, &mut rng) >= exact);
    }

    #[test]
    fn potential_strictly_decreases(seed in any::<u64>(), d in 2usize..=4, best in any::<bool>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let inst = random_instance(&mut rng, d, d + 1, 3);
        let rule = if best { PivotRule::Best } else { PivotRule::First };
        let out = run_local_search(&inst, &LocalSearchOptions { rule, ..Default::default() }).unwrap();
        let mut last: Option<Rational> = None;
        for s in &out.trace {
            prop_assert!(s.new_potential < s.old_potential);
            if let Some(l) = &last {
                prop_assert_eq!(l, &s.old_potential);
            }
            last = Some(s.new_potential.clone());
        }
        let picks: Vec<usize> = out.choice.picks.iter().map(|p| p.1).collect();
        prop_assert_eq!(potential(&inst, &picks).unwrap(), Rational::from(0));
        prop_assert!(out.choice.is_colorful(d) && out.choice.certifies(&inst.colors, &inst.b));
    }
}

#[test]
fn small_example_subset_distance() {
    let c = vec![vec![Rational::from(1), Rational::from(0)], vec![Rational::from(2), Rational::from(1)]];
    let b = vec![Rational::from(1), Rational::from(1)];
    let p = nearest_point_in_cone(&c, &b).unwrap();
    assert_eq!(p.squared_distance, Rational::from_signeds(1, 5));
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    assert!(min_distance_bruteforce(&c, &b, 200, &mut rng) >= Rational::from_signeds(1, 5));
}
