mod common;

use common::{all_splits, bounded_compositions};
use shuffle_skew::involution::shrink;
use shuffle_skew::llt::{big_to_tableaux, llt_inv, pairing_at_q_one, tableaux_to_big, to_llt};
use shuffle_skew::parking::{enumerate_fillings, f_big, pair_big_with_rectangle};

#[test]
fn llt_inversions_equal_tdinv_big() {
    for sp in all_splits(5, 3) {
        let boxes = sp.big_boxes();
        let total: usize = sp.b().iter().sum();
        for c in bounded_compositions(total, total, sp.k()) {
            for big in enumerate_fillings(sp.b(), &c) {
                assert_eq!(llt_inv(&sp, &big), boxes.tdinv(&big), "{:?} {big:?}", sp.to_json());
                assert_eq!(tableaux_to_big(&sp, &big_to_tableaux(&sp, &big)), big);
            }
        }
    }
}

#[test]
fn tuple_generating_function_is_f_big() {
    for sp in all_splits(5, 3) {
        assert!(to_llt(&sp).generating_function().same_as(&f_big(&sp)), "{:?}", sp.to_json());
    }
}

#[test]
fn adjusted_contents_follow_shrunken_rows() {
    // c̃(x) = (k − i) − k·t_x for a box of column i at shrunken row t_x
    for sp in all_splits(5, 3).into_iter().filter(|s| s.is_admissible()) {
        let k = sp.k() as i64;
        let big: Vec<Vec<usize>> = sp.b().iter().map(|&b| (1..=b).collect()).collect();
        let d = shrink(&sp, &big).unwrap();
        let contents = to_llt(&sp).adjusted_contents();
        for (i, col) in d.columns.iter().enumerate() {
            let tab = &contents[sp.k() - 1 - i];
            for (r, &c) in tab.iter().enumerate() {
                let row = col.bottom + r as i64;
                assert_eq!(c, k - (i as i64 + 1) - k * row);
            }
        }
    }
}

#[test]
fn q_one_pairing_is_one_on_admissible_splits() {
    for (n, k) in [(3, 2), (4, 2), (4, 3), (5, 3), (5, 4)] {
        for sp in all_splits(n, k) {
            let direct = pairing_at_q_one(&sp).unwrap();
            assert_eq!(direct, pair_big_with_rectangle(&sp).sum_coeffs());
            assert_eq!(direct, sp.is_admissible() as i128, "{:?}", sp.to_json());
        }
    }
}
