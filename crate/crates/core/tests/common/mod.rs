#![allow(dead_code)]

pub mod props;

use shuffle_skew::parking::{enumerate_splits, BigSmallSplit};
use shuffle_skew::paths::enumerate_paths;

/// Every `(n, k)` with `1 ≤ k ≤ n` and `K = k(n−k+1) ≤ max_k`.
pub fn cases_up_to(max_k: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for n in 1..=max_k {
        for k in 1..=n {
            if k * (n - k + 1) <= max_k {
                out.push((n, k));
            }
        }
    }
    out
}

pub fn all_splits(n: usize, k: usize) -> Vec<BigSmallSplit> {
    let big_k = k * (n - k + 1);
    enumerate_paths(big_k, k)
        .unwrap()
        .iter()
        .flat_map(|d| enumerate_splits(n, d).unwrap())
        .collect()
}

/// Compositions of `total` into `parts` entries, each at most `cap`.
pub fn bounded_compositions(total: usize, parts: usize, cap: usize) -> Vec<Vec<usize>> {
    fn rec(left: usize, parts: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if parts == 0 {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for v in 0..=left.min(cap) {
            cur.push(v);
            rec(left - v, parts - 1, cap, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(total, parts, cap, &mut Vec::new(), &mut out);
    out
}
