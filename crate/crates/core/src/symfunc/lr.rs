//! Littlewood–Richardson coefficients by enumerating LR tableaux of skew shapes.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use crate::partition::{partitions_bounded, Partition};

type LrMap = Arc<BTreeMap<Partition, u64>>;

/// `s_{ν/λ} = Σ_μ c^ν_{λμ} s_μ`: returns the map `μ ↦ c^ν_{λμ}`.
pub fn skew_expansion(nu: &Partition, lambda: &Partition) -> LrMap {
    static CACHE: OnceLock<Mutex<HashMap<(Partition, Partition), LrMap>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let key = (nu.clone(), lambda.clone());
    if let Some(v) = cache.lock().unwrap().get(&key) {
        return v.clone();
    }
    let v = Arc::new(enumerate_lr(nu, lambda));
    cache.lock().unwrap().entry(key).or_insert(v).clone()
}

fn enumerate_lr(nu: &Partition, lambda: &Partition) -> BTreeMap<Partition, u64> {
    let mut out = BTreeMap::new();
    if !nu.contains(lambda) {
        return out;
    }
    // cells in reading order: rows top to bottom, each row right to left
    let mut cells = Vec::new();
    for r in 0..nu.len() {
        for c in (lambda.part(r)..nu.part(r)).rev() {
            cells.push((r, c));
        }
    }
    let mut grid: Vec<Vec<usize>> = (0..nu.len()).map(|r| vec![0; nu.part(r)]).collect();
    let mut counts = vec![0usize; nu.len() + 2];
    fn rec(
        idx: usize,
        cells: &[(usize, usize)],
        nu: &Partition,
        lambda: &Partition,
        grid: &mut Vec<Vec<usize>>,
        counts: &mut Vec<usize>,
        out: &mut BTreeMap<Partition, u64>,
    ) {
        if idx == cells.len() {
            let content = Partition::from_multiset(counts[1..].to_vec());
            *out.entry(content).or_insert(0) += 1;
            return;
        }
        let (r, c) = cells[idx];
        let hi = if c + 1 < nu.part(r) { grid[r][c + 1] } else { r + 1 };
        let lo = if r > 0 && c >= lambda.part(r - 1) && c < nu.part(r - 1) { grid[r - 1][c] + 1 } else { 1 };
        for v in lo..=hi.min(r + 1) {
            if v > 1 && counts[v] + 1 > counts[v - 1] {
                continue;
            }
            grid[r][c] = v;
            counts[v] += 1;
            rec(idx + 1, cells, nu, lambda, grid, counts, out);
            counts[v] -= 1;
        }
        grid[r][c] = 0;
    }
    rec(0, &cells, nu, lambda, &mut grid, &mut counts, &mut out);
    out
}

/// `c^ν_{λμ}`.
pub fn lr_coefficient(nu: &Partition, lambda: &Partition, mu: &Partition) -> u64 {
    if nu.size() != lambda.size() + mu.size() {
        return 0;
    }
    skew_expansion(nu, lambda).get(mu).copied().unwrap_or(0)
}

/// `s_λ s_μ = Σ_ν c^ν_{λμ} s_ν`.
pub fn product(lambda: &Partition, mu: &Partition) -> BTreeMap<Partition, u64> {
    let n = lambda.size() + mu.size();
    let max_len = lambda.len() + mu.len();
    let max_part = lambda.largest() + mu.largest();
    partitions_bounded(n, max_part, max_len)
        .into_iter()
        .filter(|nu| nu.contains(lambda) && nu.contains(mu))
        .filter_map(|nu| {
            let c = lr_coefficient(&nu, lambda, mu);
            (c > 0).then_some((nu, c))
        })
        .collect()
}
