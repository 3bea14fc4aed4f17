mod common;

use common::props::*;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn basis_round_trips(f in symfunc()) {
        round_trip(&f).map_err(TestCaseError::fail)?;
    }

    #[test]
    fn hall_pairing_is_a_constant_term((f, g, k) in hall_pair()) {
        hall_matches_constant_term(&f, &g, k).map_err(TestCaseError::fail)?;
    }

    #[test]
    fn skewing_is_adjoint_to_multiplication((lam, f, g) in skew_triple()) {
        skew_is_adjoint(&lam, &f, &g).map_err(TestCaseError::fail)?;
    }

    #[test]
    fn dual_rectangle_identity((n, k) in rectangle_case()) {
        dual_rectangle(n, k).map_err(TestCaseError::fail)?;
    }
}
