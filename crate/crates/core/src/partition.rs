use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An integer partition. Parts are positive and weakly decreasing.
///
/// `Ord` is lexicographic on the parts, which refines dominance order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    /// Sorts and drops zeros.
    pub fn from_multiset(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Rectangle `a^b` (b rows of length a).
    pub fn rectangle(a: usize, b: usize) -> Self {
        if a == 0 {
            Partition::empty()
        } else {
            Partition(vec![a; b])
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn largest(&self) -> usize {
        self.0.first().copied().unwrap_or(0)
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Self {
        let m = self.largest();
        Partition((0..m).map(|j| self.0.iter().filter(|&&p| p > j).count()).collect())
    }

    /// Dominance order `self ≥ other`.
    pub fn dominates(&self, other: &Partition) -> bool {
        if self.size() != other.size() {
            return false;
        }
        let (mut a, mut b) = (0, 0);
        for i in 0..self.len().max(other.len()) {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return false;
            }
        }
        true
    }

    /// `Σ (i-1) λ_i`.
    pub fn n_stat(&self) -> usize {
        self.0.iter().enumerate().map(|(i, &p)| i * p).sum()
    }

    /// Multiplicity counts `m_1, m_2, ...` up to the largest part.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.largest()];
        for &p in &self.0 {
            m[p - 1] += 1;
        }
        m
    }

    /// Cells `(row, col)` in English notation, row-major.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.iter().enumerate().flat_map(|(r, &p)| (0..p).map(move |c| (r, c)))
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }
}

/// All partitions of `n`, in decreasing lexicographic order.
pub fn partitions(n: usize) -> Vec<Partition> {
    partitions_bounded(n, n, usize::MAX)
}

/// Partitions of `n` with parts at most `max_part` and at most `max_len` parts,
/// in decreasing lexicographic order.
pub fn partitions_bounded(n: usize, max_part: usize, max_len: usize) -> Vec<Partition> {
    fn rec(n: usize, max_part: usize, max_len: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        if max_len == 0 {
            return;
        }
        for p in (1..=max_part.min(n)).rev() {
            cur.push(p);
            rec(n - p, p, max_len - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, max_part, max_len, &mut Vec::new(), &mut out);
    out
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(d)?;
        Partition::new(v).map_err(serde::de::Error::custom)
    }
}

/// Shorthand used heavily in tests: `part(&[2, 1])`.
pub fn part(p: &[usize]) -> Partition {
    Partition::new(p.to_vec()).expect("valid partition literal")
}
