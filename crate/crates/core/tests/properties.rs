mod common;

use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn parse_emit_round_trip(spec in common::drawing(7)) {
        common::round_trip(&spec)?;
    }

    #[test]
    fn euler_holds_after_restrict(spec in common::drawing(7), keep_mask in prop::collection::vec(any::<bool>(), 21)) {
        common::euler_after_restrict(&spec, &keep_mask)?;
    }

    #[test]
    fn two_sticks_per_residual_edge(spec in common::drawing(7)) {
        common::two_sticks_per_residual_edge(&spec)?;
    }

    #[test]
    fn k_planarity_is_monotone(spec in common::drawing(7)) {
        common::k_planarity_monotone(&spec)?;
    }
}
