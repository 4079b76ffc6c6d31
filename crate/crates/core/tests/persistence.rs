use num_rational::BigRational;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rzero_core::exact::{ExactRadius, Field, Gap};
use rzero_core::persistence::random::random_pointed_module;
use rzero_core::persistence::{barcode, bottleneck, decompose_oracle, feasible_within, PointedBarcode};

const FIELDS: [Field; 3] = [Field::Prime(2), Field::Prime(3), Field::Rationals];

fn random_barcode(seed: u64, field: Field) -> PointedBarcode {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    barcode(&random_pointed_module(&mut rng, field, 5, 3)).unwrap()
}

// All samples are integers here, so every distance is rational.
fn value(g: &Gap) -> BigRational {
    g.as_radius().and_then(|r| r.as_rational()).expect("rational distance")
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn rank_formula_matches_oracle(seed in any::<u64>(), f in 0usize..3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let module = random_pointed_module(&mut rng, FIELDS[f], 6, 4);
        prop_assert_eq!(barcode(&module).unwrap(), decompose_oracle(&module).unwrap());
    }

    #[test]
    fn bars_alive_match_dimensions(seed in any::<u64>(), f in 0usize..3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let module = random_pointed_module(&mut rng, FIELDS[f], 6, 4);
        let b = barcode(&module).unwrap();
        for (i, dim) in module.dims().into_iter().enumerate() {
            prop_assert_eq!(b.alive_at(&module.samples[i]), dim);
        }
    }

    #[test]
    fn bottleneck_is_a_metric(s1 in any::<u64>(), s2 in any::<u64>(), s3 in any::<u64>()) {
        let (a, b, c) = (
            random_barcode(s1, Field::Prime(2)),
            random_barcode(s2, Field::Prime(2)),
            random_barcode(s3, Field::Prime(2)),
        );
        prop_assert_eq!(value(&bottleneck(&a, &a)), BigRational::from_integer(0.into()));
        let ab = value(&bottleneck(&a, &b));
        prop_assert_eq!(&ab, &value(&bottleneck(&b, &a)));
        prop_assert!(value(&bottleneck(&a, &c)) <= ab + value(&bottleneck(&b, &c)));
    }

    #[test]
    fn feasibility_is_monotone(s1 in any::<u64>(), s2 in any::<u64>(), k in 0i64..12) {
        let a = random_barcode(s1, Field::Rationals);
        let b = random_barcode(s2, Field::Rationals);
        let d = bottleneck(&a, &b);
        let delta = Gap::of(&ExactRadius::rat(BigRational::new(k.into(), 2.into())));
        prop_assert_eq!(feasible_within(&a, &b, &delta), delta >= d);
    }
}
