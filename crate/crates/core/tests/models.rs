mod common;

use common::checks::*;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig { cases: 16, ..ProptestConfig::default() })]

    #[test]
    fn product_of_random_two_cones(seed in any::<u64>()) {
        prop_assert_eq!(random_product_model(seed), Ok(()));
    }

    #[test]
    fn diagonal_chain_map(seed in any::<u64>()) {
        prop_assert_eq!(diagonal_is_a_chain_map(seed), Ok(()));
    }

    #[test]
    fn gamma_boundary_identity(seed in any::<u64>()) {
        prop_assert_eq!(gamma_boundary(seed), Ok(()));
    }

    #[test]
    fn gamma_antisymmetry(seed in any::<u64>()) {
        prop_assert_eq!(gamma_respects_antisymmetry(seed), Ok(()));
    }

    #[test]
    fn gamma_jacobiator_witness(seed in any::<u64>()) {
        prop_assert_eq!(gamma_jacobiator_is_a_boundary(seed), Ok(()));
    }
}
