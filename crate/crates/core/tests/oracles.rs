mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use systolic::checkers::{enumerate_full_cycles, is_k_large};
use systolic::helly::{helly_point, HellyOutcome};
use systolic::{io, verify, Complex};

use common::*;

fn flag_complex_strategy(max_n: usize) -> impl Strategy<Value = Complex> {
    (1..=max_n, 0.1f64..0.9, any::<u64>())
        .prop_map(|(n, p, seed)| random_flag_complex(&mut ChaCha8Rng::seed_from_u64(seed), n, p))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn full_cycles_match_brute_force(x in flag_complex_strategy(9), max_len in 3usize..=9) {
        let fast = enumerate_full_cycles(&x, max_len);
        prop_assert_eq!(fast.len(), cycle_sets(&fast).len());
        prop_assert_eq!(cycle_sets(&fast), naive_full_cycles(&x, max_len));
    }

    #[test]
    fn largeness_is_monotone(x in flag_complex_strategy(9)) {
        let large: Vec<bool> = (5..=9).map(|k| is_k_large(&x, k).unwrap()).collect();
        for k in 1..large.len() {
            prop_assert!(!large[k] || large[k - 1]);
        }
    }

    #[test]
    fn complement_is_closure_of_difference(x in flag_complex_strategy(8), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let y = random_subcomplex(&mut rng, &x, 0.5);
        let c = x.complement(&y).unwrap();
        prop_assert_eq!(c.simplices().cloned().collect::<BTreeSet<_>>(), naive_complement(&x, &y));
        prop_assert!(c.union(&y) == x);
    }

    #[test]
    fn complex_text_round_trips(x in flag_complex_strategy(8)) {
        prop_assert_eq!(io::parse_complex(&io::write_complex(&x)).unwrap(), x);
    }

    #[test]
    fn certificates_always_verify(seed in any::<u64>()) {
        let input = random_valid_input(&mut ChaCha8Rng::seed_from_u64(seed));
        if let HellyOutcome::Certificate(c) = helly_point(&input).unwrap() {
            prop_assert!(verify::certificate(&input.x, &input.a, &c.simplex).is_ok());
        }
    }
}
