use ccp_core::generate::{random_embracing_color, random_nonzero_point};
use ccp_core::two_color::find_split;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn splits_have_exact_counts_within_cap(seed in any::<u64>(), d in 2usize..=5) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let b = random_nonzero_point(&mut rng, d, 50);
        let c1 = random_embracing_color(&mut rng, &b, d, 50);
        let c2 = random_embracing_color(&mut rng, &b, d, 50);
        for k in 1..d {
            let out = find_split(&c1, &c2, &b, k).unwrap();
            prop_assert!(out.iterations <= out.cap);
            prop_assert_eq!(out.choice.count_of_color(0), k);
            prop_assert_eq!(out.choice.count_of_color(1), d - k);
            prop_assert!(out.choice.certifies(&[c1.clone(), c2.clone()], &b));
        }
    }
}
