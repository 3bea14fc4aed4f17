//! Kostka numbers by counting semistandard tableaux, built as chains of
//! horizontal strips.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use crate::partition::{partitions, Partition};

/// All shapes obtained from `shape` by adding a horizontal strip of `r` boxes.
pub fn horizontal_strips(shape: &[usize], r: usize) -> Vec<Vec<usize>> {
    fn rec(shape: &[usize], i: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == shape.len() + 1 || left == 0 {
            if left == 0 {
                let mut v = cur.clone();
                v.extend_from_slice(&shape[i.min(shape.len())..]);
                while v.last() == Some(&0) {
                    v.pop();
                }
                out.push(v);
            }
            return;
        }
        let base = shape.get(i).copied().unwrap_or(0);
        // row i may grow up to the old length of the row above it
        let cap = if i == 0 { usize::MAX } else { shape[i - 1] };
        let room = cap.saturating_sub(base).min(left);
        for add in 0..=room {
            cur.push(base + add);
            rec(shape, i + 1, left - add, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(shape, 0, r, &mut Vec::new(), &mut out);
    out
}

/// Number of SSYT of shape `lambda` with content given by the (unordered)
/// composition `content`.
pub fn kostka_number(lambda: &Partition, content: &[usize]) -> u64 {
    let mut layer: HashMap<Vec<usize>, u64> = HashMap::from([(Vec::new(), 1)]);
    for &c in content {
        let mut next: HashMap<Vec<usize>, u64> = HashMap::new();
        for (sh, cnt) in layer {
            for nsh in horizontal_strips(&sh, c) {
                if nsh.len() <= lambda.len() && nsh.iter().zip(lambda.parts()).all(|(a, b)| a <= b) {
                    *next.entry(nsh).or_insert(0) += cnt;
                }
            }
        }
        layer = next;
    }
    layer.get(lambda.parts()).copied().unwrap_or(0)
}

/// The full Kostka matrix for one degree: `row(λ)[μ] = K_{λμ}`.
#[derive(Debug)]
pub struct KostkaTable {
    pub parts: Vec<Partition>,
    /// `by_content[μ]` maps λ to `K_{λμ}` (nonzero entries only).
    pub by_content: BTreeMap<Partition, BTreeMap<Partition, u64>>,
    /// `by_shape[λ]` maps μ to `K_{λμ}`.
    pub by_shape: BTreeMap<Partition, BTreeMap<Partition, u64>>,
}

impl KostkaTable {
    fn build(n: usize) -> Self {
        let parts = partitions(n);
        let mut by_content = BTreeMap::new();
        let mut by_shape: BTreeMap<Partition, BTreeMap<Partition, u64>> = BTreeMap::new();
        for mu in &parts {
            let mut layer: HashMap<Vec<usize>, u64> = HashMap::from([(Vec::new(), 1)]);
            for &c in mu.parts() {
                let mut next: HashMap<Vec<usize>, u64> = HashMap::new();
                for (sh, cnt) in layer {
                    for nsh in horizontal_strips(&sh, c) {
                        *next.entry(nsh).or_insert(0) += cnt;
                    }
                }
                layer = next;
            }
            let row: BTreeMap<Partition, u64> = layer
                .into_iter()
                .map(|(sh, c)| (Partition::new(sh).expect("strip chain yields a partition"), c))
                .collect();
            for (lam, &c) in &row {
                by_shape.entry(lam.clone()).or_default().insert(mu.clone(), c);
            }
            by_content.insert(mu.clone(), row);
        }
        KostkaTable { parts, by_content, by_shape }
    }

    pub fn get(&self, lambda: &Partition, mu: &Partition) -> u64 {
        self.by_shape.get(lambda).and_then(|r| r.get(mu)).copied().unwrap_or(0)
    }
}

/// Cached Kostka matrix of degree `n`.
pub fn kostka_table(n: usize) -> Arc<KostkaTable> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<KostkaTable>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(t) = cache.lock().unwrap().get(&n) {
        return t.clone();
    }
    let t = Arc::new(KostkaTable::build(n));
    cache.lock().unwrap().entry(n).or_insert(t).clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::part;

    #[test]
    fn small_values() {
        let t = kostka_table(3);
        assert_eq!(t.get(&part(&[2, 1]), &part(&[1, 1, 1])), 2);
        assert_eq!(t.get(&part(&[3]), &part(&[1, 1, 1])), 1);
        assert_eq!(t.get(&part(&[1, 1, 1]), &part(&[2, 1])), 0);
        assert_eq!(kostka_number(&part(&[2, 2]), &[1, 1, 1, 1]), 2);
        assert_eq!(kostka_number(&part(&[3, 2]), &[2, 2, 1]), 2);
    }

    #[test]
    fn diagonal_is_one_and_triangular() {
        let t = kostka_table(6);
        for l in &t.parts {
            assert_eq!(t.get(l, l), 1);
            for m in &t.parts {
                if t.get(l, m) != 0 {
                    assert!(l.dominates(m));
                }
            }
        }
    }

    #[test]
    fn content_order_irrelevant() {
        let l = part(&[3, 2, 1]);
        assert_eq!(kostka_number(&l, &[1, 2, 3]), kostka_number(&l, &[3, 2, 1]));
        assert_eq!(kostka_number(&l, &[2, 0, 1, 3]), kostka_number(&l, &[3, 2, 1]));
    }

    #[test]
    fn strips() {
        let mut s = horizontal_strips(&[2, 1], 1);
        s.sort();
        assert_eq!(s, vec![vec![2, 1, 1], vec![2, 2], vec![3, 1]]);
    }
}
