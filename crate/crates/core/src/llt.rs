//! Big-label fillings as tuples of single-column tableaux with shifts, and the
//! LLT inversion statistic.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::parking::{for_each_filling, BigSmallSplit};
use crate::partition::{partitions_bounded, Partition};
use crate::qt::QTPoly;
use crate::symfunc::{hall_inner, Basis, SymFunc};

/// Shapes `(1^{b_k}, …, 1^{b_1})` and shifts `c_0, …, c_{k−1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LltTuple {
    pub k: usize,
    /// Column length of tableau `j`.
    pub shapes: Vec<usize>,
    pub shifts: Vec<i64>,
}

impl LltTuple {
    /// Adjusted content `k·c(x) + c_j` of each box, bottom to top; box `r`
    /// of a single column has content `−r`.
    pub fn adjusted_contents(&self) -> Vec<Vec<i64>> {
        let k = self.k as i64;
        self.shapes
            .iter()
            .zip(&self.shifts)
            .map(|(&len, &c)| (0..len as i64).map(|r| -k * r + c).collect())
            .collect()
    }

    /// Number of pairs `(x, y)` with `T(x) < T(y)` and `0 < c̃(x) − c̃(y) < k`.
    pub fn inv(&self, tableaux: &[Vec<usize>]) -> usize {
        let k = self.k as i64;
        let contents = self.adjusted_contents();
        let flat: Vec<(i64, usize)> = contents
            .iter()
            .zip(tableaux)
            .flat_map(|(cs, t)| cs.iter().copied().zip(t.iter().copied()))
            .collect();
        let mut n = 0;
        for &(cx, tx) in &flat {
            for &(cy, ty) in &flat {
                let d = cx - cy;
                if tx < ty && 0 < d && d < k {
                    n += 1;
                }
            }
        }
        n
    }

    /// `Σ_T q^{inv(T)} x^T` in the monomial basis.
    pub fn generating_function(&self) -> SymFunc {
        let n: usize = self.shapes.iter().sum();
        let cols = self.shapes.iter().filter(|&&h| h > 0).count();
        let terms: Vec<(Partition, QTPoly)> = partitions_bounded(n, cols.max(1), n)
            .into_par_iter()
            .map(|lam| {
                let mut counts: BTreeMap<u32, i128> = BTreeMap::new();
                for_each_filling(&self.shapes, lam.parts(), &mut |t| {
                    *counts.entry(self.inv(t) as u32).or_insert(0) += 1;
                });
                (lam, QTPoly::from_terms(counts.into_iter().map(|(e, c)| ((e, 0), c))))
            })
            .collect();
        SymFunc::from_terms(Basis::Monomial, n, terms).expect("partition degrees match")
    }
}

/// Bottom row of each column of the complete shrunken diagram, 1-based.
pub fn shrunken_bottoms(split: &BigSmallSplit) -> Vec<i64> {
    let s = split.m() as i64 + 1;
    (0..split.k()).map(|i| 1 + split.path().prefix(i) as i64 - i as i64 * s).collect()
}

/// The tuple for explicit column bottoms `h_1, …, h_k`: `c_{k−i} = (k−i) − k(h_i + s_i)`.
pub fn to_llt_with_bottoms(split: &BigSmallSplit, bottoms: &[i64]) -> Result<LltTuple> {
    let k = split.k();
    if bottoms.len() != k {
        return Err(Error::InvalidParameters(format!("{} bottoms for {k} columns", bottoms.len())));
    }
    let mut shapes = vec![0; k];
    let mut shifts = vec![0; k];
    for i in 1..=k {
        shapes[k - i] = split.b()[i - 1];
        shifts[k - i] = (k - i) as i64 - k as i64 * (bottoms[i - 1] + split.s()[i - 1] as i64);
    }
    Ok(LltTuple { k, shapes, shifts })
}

pub fn to_llt(split: &BigSmallSplit) -> LltTuple {
    to_llt_with_bottoms(split, &shrunken_bottoms(split)).expect("one bottom per column")
}

/// Column `i` of the big labeling becomes tableau `k − i`.
pub fn big_to_tableaux(split: &BigSmallSplit, big: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let k = split.k();
    (0..k).map(|j| big[k - 1 - j].clone()).collect()
}

pub fn tableaux_to_big(split: &BigSmallSplit, tableaux: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let k = split.k();
    (0..k).map(|i| tableaux[k - 1 - i].clone()).collect()
}

/// LLT inversions of the tableaux attached to a big labeling.
pub fn llt_inv(split: &BigSmallSplit, big: &[Vec<usize>]) -> usize {
    to_llt(split).inv(&big_to_tableaux(split, big))
}

/// `⟨f_{D,b}[X; 1], s_{(k−1)^{n−k}}⟩` through the `q = 1` specialization
/// `e_{b_1} ⋯ e_{b_k}`.
pub fn pairing_at_q_one(split: &BigSmallSplit) -> Result<i128> {
    let mut prod = SymFunc::one();
    for &b in split.b().iter().filter(|&&b| b > 0) {
        prod = prod.mul(&SymFunc::e(Partition::new(vec![b])?));
    }
    let rect = SymFunc::schur(Partition::rectangle(split.k() - 1, split.m()));
    Ok(hall_inner(&prod, &rect)?.sum_coeffs())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::paths::DyckPath;

    fn split(n: usize, runs: &[usize], b: &[usize]) -> BigSmallSplit {
        let k = runs.len();
        BigSmallSplit::new(n, DyckPath::new(k * (n - k + 1), k, runs.to_vec()).unwrap(), b.to_vec()).unwrap()
    }

    #[test]
    fn two_single_boxes() {
        let sp = split(3, &[2, 2], &[1, 0]);
        let t = to_llt(&sp);
        assert_eq!(t.shapes, vec![0, 1]);
        let sp = split(4, &[3, 3], &[1, 1]);
        let t = to_llt(&sp);
        assert_eq!(t.shapes, vec![1, 1]);
        assert_eq!(big_to_tableaux(&sp, &[vec![1], vec![2]]), vec![vec![2], vec![1]]);
        assert_eq!(tableaux_to_big(&sp, &[vec![2], vec![1]]), vec![vec![1], vec![2]]);
    }

    #[test]
    fn single_column_has_no_inversions() {
        let sp = split(3, &[4, 0], &[1, 0]);
        assert_eq!(llt_inv(&sp, &[vec![1], vec![]]), 0);
    }

    #[test]
    fn uniform_bottom_offset_leaves_inversions_unchanged() {
        let sp = split(5, &[3, 3, 3], &[2, 1, 1]);
        let ours = shrunken_bottoms(&sp);
        let shifted: Vec<i64> = ours.iter().map(|h| h - 3).collect();
        let a = to_llt(&sp);
        let b = to_llt_with_bottoms(&sp, &shifted).unwrap();
        assert!(a.shifts.iter().zip(&b.shifts).all(|(x, y)| y - x == 9));
        let big = vec![vec![1, 2], vec![1], vec![2]];
        let t = big_to_tableaux(&sp, &big);
        assert_eq!(a.inv(&t), b.inv(&t));
    }
}
