//! Randomized invariants, 1000 cases each.

mod common;

use common::*;
use proptest::prelude::*;

proptest! {
    #![proptest_config(config())]

    #[test]
    fn substitution_is_inverted_by_negated_correction(input in substitution_input()) {
        check_substitution_inverse(input)?;
    }

    #[test]
    fn products_substitutions_and_partials_stay_homogeneous(input in grade_input()) {
        check_grade_preservation(input)?;
    }

    #[test]
    fn smith_form_is_a_divisor_chain(rows in snf_input()) {
        check_snf(rows)?;
    }

    #[test]
    fn reid_tai_ignores_the_choice_of_generator(input in reid_tai_input()) {
        check_reid_tai(input)?;
    }

    #[test]
    fn point_set_stabilizers_are_groups_and_conjugate(input in pgl2_input()) {
        check_pgl2(input)?;
    }

    #[test]
    fn enumeration_matches_the_hilbert_series(input in enumeration_input()) {
        check_enumeration(input)?;
    }
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn diagonal_group_shrinks_as_support_grows(input in diagonal_input()) {
        check_diagonal_monotone(input)?;
    }
}
