mod common;

use std::collections::BTreeSet;

use common::{all_splits, bounded_compositions, cases_up_to};
use shuffle_skew::involution::{
    allowable_words, content, fixed_point, induced_involution, is_allowable, phi, reduce_to_base, shrink, shrink_complete,
    word_tied_inversions, ShrunkenColumn, ShrunkenDiagram,
};
use shuffle_skew::parking::{c_stat, d_stat, enumerate_fillings, pair_big_with_rectangle, BigSmallSplit, ColumnBoxes};
use shuffle_skew::QTPoly;

/// Every big filling with labels in `1..=m`, with its complement content.
fn big_fillings(sp: &BigSmallSplit) -> Vec<(Vec<Vec<usize>>, Vec<usize>)> {
    let (m, k) = (sp.m(), sp.k());
    let total: usize = sp.b().iter().sum();
    let mut out = Vec::new();
    for tilde in bounded_compositions(total, m, k) {
        let alpha: Vec<usize> = tilde.iter().map(|&a| k - a).collect();
        for f in enumerate_fillings(sp.b(), &tilde) {
            out.push((f, alpha.clone()));
        }
    }
    out
}

fn zeros(alpha: &[usize]) -> usize {
    alpha.iter().filter(|&&a| a == 0).count()
}

#[test]
fn shrunken_inv_is_tdinv_big() {
    for (n, k) in cases_up_to(9) {
        if n == k {
            continue;
        }
        for sp in all_splits(n, k) {
            let boxes = sp.big_boxes();
            for (f, _) in big_fillings(&sp) {
                assert_eq!(shrink(&sp, &f).unwrap().inv(), boxes.tdinv(&f), "{:?} {f:?}", sp.to_json());
            }
        }
    }
}

#[test]
fn induced_involution_properties() {
    for (n, k) in cases_up_to(9) {
        if n == k {
            continue;
        }
        for sp in all_splits(n, k).into_iter().filter(|s| s.is_admissible()) {
            let boxes = sp.big_boxes();
            let p0 = fixed_point(&sp).unwrap();
            let mut fixed_seen = 0;
            for (f, alpha) in big_fillings(&sp).into_iter().filter(|(_, a)| is_allowable(a)) {
                let g = induced_involution(&sp, &f).unwrap();
                assert_eq!(induced_involution(&sp, &g).unwrap(), f);
                assert_eq!(boxes.tdinv(&g), boxes.tdinv(&f));
                let d = shrink(&sp, &g).unwrap();
                let beta = content(&d.complement_reading_word(), sp.m());
                assert!(is_allowable(&beta));
                if g == f {
                    fixed_seen += 1;
                    assert_eq!(f, p0);
                } else {
                    assert_ne!(zeros(&alpha) % 2, zeros(&beta) % 2);
                }
            }
            assert_eq!(fixed_seen, 1, "{:?}", sp.to_json());
        }
    }
}

#[test]
fn signed_sum_collapses_to_fixed_point() {
    for (n, k) in cases_up_to(9) {
        for sp in all_splits(n, k) {
            let pairing = pair_big_with_rectangle(&sp);
            if !sp.is_admissible() {
                assert!(pairing.is_zero(), "{:?}", sp.to_json());
                continue;
            }
            let c = c_stat(&sp);
            assert!(c >= 0);
            assert_eq!(pairing, QTPoly::q_pow(c as u32), "{:?}", sp.to_json());
            if n > k {
                let p0 = fixed_point(&sp).unwrap();
                assert_eq!(sp.big_boxes().tdinv(&p0) as i64, c);
            }
        }
    }
}

#[test]
fn fixed_points_satisfy_the_identity_and_reduce() {
    for (n, k) in cases_up_to(9) {
        if n == k {
            continue;
        }
        for sp in all_splits(n, k).into_iter().filter(|s| s.is_admissible()) {
            let p0 = fixed_point(&sp).unwrap();
            let d = shrink_complete(&sp, &p0).unwrap();
            assert!(d.is_complete());
            assert!(d.is_generalized_fixed_point());
            let path = sp.path();
            assert_eq!(d.pathdinv(), path.pathdinv(), "{:?}", sp.to_json());
            assert_eq!(d.max_inv(), path.maxtdinv());
            // zeros in the small boxes: Inv picks up exactly d(s, b)
            assert_eq!(d.inv(), sp.big_boxes().tdinv(&p0) + d_stat(&sp));
            assert_eq!(d.inv() + d.pathdinv(), d.max_inv());
            let before = d.defect();
            for step in reduce_to_base(&d).unwrap() {
                assert!(step.after.is_complete());
                assert!(step.after.is_generalized_fixed_point());
                assert_eq!(step.conserved, before);
                assert_eq!(step.before.defect(), before);
            }
        }
    }
}

#[test]
fn shrunken_pathdinv_matches_path_for_any_labels() {
    for (n, k) in cases_up_to(9) {
        if n == k {
            continue;
        }
        for sp in all_splits(n, k) {
            let filler: Vec<Vec<usize>> = sp.b().iter().map(|&b| (1..=b.min(sp.m())).collect()).collect();
            if filler.iter().zip(sp.b()).any(|(f, &b)| f.len() != b) {
                continue;
            }
            let d = shrink_complete(&sp, &filler).unwrap();
            assert_eq!(d.pathdinv(), sp.path().pathdinv(), "{:?}", sp.to_json());
        }
    }
}

#[test]
fn phi_is_a_sign_reversing_involution() {
    for m in 1..=6 {
        let words = allowable_words(m).unwrap();
        let mut fixed = Vec::new();
        for w in &words {
            let v = phi(w, m).unwrap();
            assert_eq!(phi(&v, m).unwrap(), *w);
            assert!(is_allowable(&content(&v, m)));
            assert_eq!(word_tied_inversions(&v), word_tied_inversions(w), "{w:?}");
            if v == *w {
                fixed.push(v);
            } else {
                assert_ne!(zeros(&content(w, m)) % 2, zeros(&content(&v, m)) % 2);
            }
        }
        assert_eq!(fixed, vec![(1..=m).collect::<Vec<_>>()]);
    }
}

/// `Inv(C₁, C₂) + tiedInv(C̄₁, C̄₂)` depends only on heights and offset.
#[test]
fn complement_sums_depend_only_on_shape() {
    fn subsets(m: usize, b: usize) -> Vec<Vec<usize>> {
        (0u32..1 << m)
            .filter(|x| x.count_ones() as usize == b)
            .map(|x| (1..=m).filter(|v| x >> (v - 1) & 1 == 1).collect())
            .collect()
    }
    for m in 1..=5 {
        for b1 in 0..=m {
            for b2 in 0..=m {
                for offset in -(m as i64 + 2)..=(m as i64 + 2) {
                    let mut totals = BTreeSet::new();
                    for c1 in subsets(m, b1) {
                        for c2 in subsets(m, b2) {
                            let col1 = ShrunkenColumn::new(m as i64 + 1 - b1 as i64, c1.clone());
                            let top2 = m as i64 + offset;
                            let col2 = ShrunkenColumn::new(top2 - b2 as i64 + 1, c2.clone());
                            let d = ShrunkenDiagram::new(m, vec![col1, col2]).unwrap();
                            totals.insert(d.inv_between(0, 1) + d.tied_inv_between(0, 1));
                        }
                    }
                    assert_eq!(totals.len(), 1, "m={m} b=({b1},{b2}) offset={offset}: {totals:?}");
                }
            }
        }
    }
}

#[test]
fn big_box_attack_structure_is_row_based() {
    // same-diagonal big boxes land in one shrunken row
    for sp in all_splits(5, 3).into_iter().filter(|s| s.is_admissible()) {
        let boxes: ColumnBoxes = sp.big_boxes();
        let f: Vec<Vec<usize>> = sp.b().iter().map(|&b| (1..=b).collect()).collect();
        let d = shrink(&sp, &f).unwrap();
        let cells = d.cells();
        let flat: Vec<_> = boxes.columns().iter().flatten().copied().collect();
        for ((&bx, cell), _) in flat.iter().zip(&cells).zip(0..) {
            assert_eq!(bx.diagonal(sp.path().slope()) + 1, cell.1);
        }
    }
}
