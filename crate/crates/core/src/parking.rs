//! Word parking functions on rational Dyck paths, their statistics, and the
//! big/small label split.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{partitions_bounded, Partition};
use crate::paths::{attacking, enumerate_paths, BoxCoord, DyckPath};
use crate::qt::QTPoly;
use crate::symfunc::{truncated_jacobi_trudi, Basis, SymFunc};

/// Calls `f` on every column-strict filling of columns with the given heights
/// using exactly `content[v-1]` copies of each value `v`. Columns are listed
/// bottom to top.
pub fn for_each_filling(heights: &[usize], content: &[usize], f: &mut dyn FnMut(&[Vec<usize>])) {
    if heights.iter().sum::<usize>() != content.iter().sum::<usize>() {
        return;
    }
    let mut cols: Vec<Vec<usize>> = heights.iter().map(|&h| Vec::with_capacity(h)).collect();
    fill_rec(0, heights, content, &mut cols, f);
}

fn fill_rec(v: usize, heights: &[usize], content: &[usize], cols: &mut Vec<Vec<usize>>, f: &mut dyn FnMut(&[Vec<usize>])) {
    if v == content.len() {
        f(cols);
        return;
    }
    let open: Vec<usize> = (0..heights.len()).filter(|&c| cols[c].len() < heights[c]).collect();
    let need = content[v];
    if need > open.len() {
        return;
    }
    choose(&open, need, 0, &mut Vec::with_capacity(need), &mut |chosen| {
        for &c in chosen {
            cols[c].push(v + 1);
        }
        fill_rec(v + 1, heights, content, cols, f);
        for &c in chosen {
            cols[c].pop();
        }
    });
}

fn choose(items: &[usize], r: usize, start: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
    if cur.len() == r {
        f(cur);
        return;
    }
    for i in start..items.len() {
        if items.len() - i < r - cur.len() {
            break;
        }
        cur.push(items[i]);
        choose(items, r, i + 1, cur, f);
        cur.pop();
    }
}

/// All column-strict fillings, see [`for_each_filling`].
pub fn enumerate_fillings(heights: &[usize], content: &[usize]) -> Vec<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    for_each_filling(heights, content, &mut |c| out.push(c.to_vec()));
    out
}

/// A set of boxes grouped by column (bottom to top within each column),
/// together with its attacking pairs.
#[derive(Clone, Debug)]
pub struct ColumnBoxes {
    slope: usize,
    columns: Vec<Vec<BoxCoord>>,
    pairs: Vec<(usize, usize)>,
}

impl ColumnBoxes {
    /// `rows[i] = (lo, hi)` selects rows `lo..hi` of column `i`.
    pub fn from_rows(slope: usize, rows: &[(usize, usize)]) -> Self {
        let columns: Vec<Vec<BoxCoord>> =
            rows.iter().enumerate().map(|(x, &(lo, hi))| (lo..hi).map(|y| BoxCoord::new(x, y)).collect()).collect();
        let flat: Vec<BoxCoord> = columns.iter().flatten().copied().collect();
        let mut pairs = Vec::new();
        for (i, &a) in flat.iter().enumerate() {
            for (j, &b) in flat.iter().enumerate() {
                if attacking(a, b, slope) {
                    pairs.push((i, j));
                }
            }
        }
        ColumnBoxes { slope, columns, pairs }
    }

    pub fn full(path: &DyckPath) -> Self {
        let rows: Vec<(usize, usize)> = (0..path.width()).map(|i| (path.prefix(i), path.prefix(i + 1))).collect();
        Self::from_rows(path.slope(), &rows)
    }

    pub fn heights(&self) -> Vec<usize> {
        self.columns.iter().map(|c| c.len()).collect()
    }

    pub fn columns(&self) -> &[Vec<BoxCoord>] {
        &self.columns
    }

    pub fn len(&self) -> usize {
        self.columns.iter().map(|c| c.len()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn slope(&self) -> usize {
        self.slope
    }

    /// Attacking pairs as indices into the column-major flattening.
    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// Attacking pairs `(a, b)` with `label(a) < label(b)`.
    pub fn tdinv(&self, labels: &[Vec<usize>]) -> usize {
        let flat: Vec<usize> = labels.iter().flatten().copied().collect();
        debug_assert_eq!(flat.len(), self.len());
        self.pairs.iter().filter(|&&(a, b)| flat[a] < flat[b]).count()
    }

    /// `Σ_fillings q^{tdinv} x^{filling}` in the monomial basis. Contents with a
    /// part exceeding the number of columns have no fillings and are skipped.
    pub fn generating_function(&self) -> SymFunc {
        let n = self.len();
        let heights = self.heights();
        let k = heights.iter().filter(|&&h| h > 0).count();
        let terms: Vec<(Partition, QTPoly)> = partitions_bounded(n, k.max(1), n)
            .into_par_iter()
            .map(|lam| {
                let mut counts: BTreeMap<u32, i128> = BTreeMap::new();
                for_each_filling(&heights, lam.parts(), &mut |f| {
                    *counts.entry(self.tdinv(f) as u32).or_insert(0) += 1;
                });
                (lam, QTPoly::from_terms(counts.into_iter().map(|(e, c)| ((e, 0), c))))
            })
            .collect();
        SymFunc::from_terms(Basis::Monomial, n, terms).expect("partition degrees match")
    }
}

/// A labeled `(K, k)` Dyck path with column-strict positive labels.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WordParkingFunction {
    path: DyckPath,
    labels: Vec<Vec<usize>>,
}

impl WordParkingFunction {
    pub fn new(path: DyckPath, labels: Vec<Vec<usize>>) -> Result<Self> {
        if labels.len() != path.width() {
            return Err(Error::InvalidLabeling(format!("{} label columns for width {}", labels.len(), path.width())));
        }
        for (i, (col, &r)) in labels.iter().zip(path.runs()).enumerate() {
            if col.len() != r {
                return Err(Error::InvalidLabeling(format!("column {} has {} labels but run {r}", i + 1, col.len())));
            }
            if col.contains(&0) || col.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::InvalidLabeling(format!("column {} = {col:?} is not strictly increasing", i + 1)));
            }
        }
        Ok(WordParkingFunction { path, labels })
    }

    pub fn path(&self) -> &DyckPath {
        &self.path
    }

    pub fn labels(&self) -> &[Vec<usize>] {
        &self.labels
    }

    pub fn tdinv(&self) -> usize {
        ColumnBoxes::full(&self.path).tdinv(&self.labels)
    }

    /// `pathdinv + tdinv − maxtdinv`.
    pub fn dinv(&self) -> i64 {
        self.path.pathdinv() as i64 + self.tdinv() as i64 - self.path.maxtdinv() as i64
    }

    pub fn area(&self) -> usize {
        self.path.area()
    }

    /// `content[v-1]` is the number of labels equal to `v`.
    pub fn content(&self) -> Vec<usize> {
        let max = self.labels.iter().flatten().copied().max().unwrap_or(0);
        let mut c = vec![0; max];
        for &l in self.labels.iter().flatten() {
            c[l - 1] += 1;
        }
        c
    }
}

/// `f_D = Σ_π q^{tdinv(π)} x^π` over word parking functions on `D`.
pub fn f_d(path: &DyckPath) -> SymFunc {
    ColumnBoxes::full(path).generating_function()
}

fn check_nk(n: usize, k: usize) -> Result<()> {
    if k == 0 || k > n {
        return Err(Error::InvalidParameters(format!("need 1 <= k <= n, got n={n}, k={k}")));
    }
    Ok(())
}

/// `Σ_D t^{area(D)} q^{pathdinv(D) − maxtdinv(D)} f_D` over `(k(n−k+1), k)` paths.
pub fn rational_shuffle_sum(n: usize, k: usize) -> Result<SymFunc> {
    check_nk(n, k)?;
    let big_k = k * (n - k + 1);
    let paths = enumerate_paths(big_k, k)?;
    let parts: Vec<Result<SymFunc>> = paths
        .par_iter()
        .map(|d| {
            let f = f_d(d);
            let shift = d.pathdinv() as i64 - d.maxtdinv() as i64;
            let area = d.area() as u32;
            let mut out = SymFunc::zero(Basis::Monomial, big_k);
            for (lam, c) in f.terms() {
                let mut terms = Vec::with_capacity(c.len());
                for &((a, _), x) in c.terms() {
                    let e = a as i64 + shift;
                    if e < 0 {
                        return Err(Error::Internal(format!("negative dinv {e} on path {d} content {lam}")));
                    }
                    terms.push(((e as u32, area), x));
                }
                out.add_term(lam.clone(), &QTPoly::from_terms(terms));
            }
            Ok(out)
        })
        .collect();
    let mut total = SymFunc::zero(Basis::Monomial, big_k);
    for p in parts {
        total = total.add(&p?)?;
    }
    Ok(total)
}

/// Split of a `(k(n−k+1), k)` path into `b_i` big boxes (top of each run) and
/// `s_i` small boxes.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BigSmallSplit {
    n: usize,
    path: DyckPath,
    b: Vec<usize>,
    s: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct SplitJson {
    n: usize,
    k: usize,
    runs: Vec<usize>,
    b: Vec<usize>,
}

impl BigSmallSplit {
    pub fn new(n: usize, path: DyckPath, b: Vec<usize>) -> Result<Self> {
        let k = path.width();
        check_nk(n, k)?;
        if path.height() != k * (n - k + 1) {
            return Err(Error::InvalidParameters(format!("path height {} is not k(n-k+1) = {}", path.height(), k * (n - k + 1))));
        }
        if b.len() != k {
            return Err(Error::InvalidParameters(format!("b has {} entries, expected {k}", b.len())));
        }
        if b.iter().zip(path.runs()).any(|(bi, r)| bi > r) {
            return Err(Error::InvalidParameters(format!("b = {b:?} exceeds runs {:?}", path.runs())));
        }
        if b.iter().sum::<usize>() != (k - 1) * (n - k) {
            return Err(Error::InvalidParameters(format!("b = {b:?} does not sum to (k-1)(n-k) = {}", (k - 1) * (n - k))));
        }
        let s = path.runs().iter().zip(&b).map(|(r, bi)| r - bi).collect();
        Ok(BigSmallSplit { n, path, b, s })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.path.width()
    }

    /// `n − k`.
    pub fn m(&self) -> usize {
        self.n - self.k()
    }

    pub fn path(&self) -> &DyckPath {
        &self.path
    }

    pub fn b(&self) -> &[usize] {
        &self.b
    }

    pub fn s(&self) -> &[usize] {
        &self.s
    }

    pub fn is_admissible(&self) -> bool {
        self.b.iter().all(|&bi| bi <= self.m())
    }

    pub fn big_boxes(&self) -> ColumnBoxes {
        let rows: Vec<(usize, usize)> =
            (0..self.k()).map(|i| (self.path.prefix(i + 1) - self.b[i], self.path.prefix(i + 1))).collect();
        ColumnBoxes::from_rows(self.path.slope(), &rows)
    }

    pub fn small_boxes(&self) -> ColumnBoxes {
        let rows: Vec<(usize, usize)> =
            (0..self.k()).map(|i| (self.path.prefix(i), self.path.prefix(i) + self.s[i])).collect();
        ColumnBoxes::from_rows(self.path.slope(), &rows)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(SplitJson { n: self.n, k: self.k(), runs: self.path.runs().to_vec(), b: self.b.clone() })
            .expect("split serializes")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let j: SplitJson = serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        if j.runs.len() != j.k {
            return Err(Error::Parse(format!("k = {} but {} runs", j.k, j.runs.len())));
        }
        let path = DyckPath::new(j.runs.iter().sum(), j.k, j.runs)?;
        BigSmallSplit::new(j.n, path, j.b)
    }
}

/// Every split of `path` for the given `n`.
pub fn enumerate_splits(n: usize, path: &DyckPath) -> Result<Vec<BigSmallSplit>> {
    let k = path.width();
    check_nk(n, k)?;
    let total = (k - 1) * (n - k);
    let mut out = Vec::new();
    fn rec(i: usize, left: usize, runs: &[usize], cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == runs.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let rest: usize = runs[i + 1..].iter().sum();
        for bi in (0..=runs[i].min(left)).rev() {
            if left - bi > rest {
                break;
            }
            cur.push(bi);
            rec(i + 1, left - bi, runs, cur, out);
            cur.pop();
        }
    }
    let mut bs = Vec::new();
    rec(0, total, path.runs(), &mut Vec::new(), &mut bs);
    for b in bs {
        out.push(BigSmallSplit::new(n, path.clone(), b)?);
    }
    Ok(out)
}

/// Attacking pairs `(c, c′)` with `c` small and `c′` big.
pub fn d_stat(split: &BigSmallSplit) -> usize {
    let small: Vec<BoxCoord> = split.small_boxes().columns().iter().flatten().copied().collect();
    let big: Vec<BoxCoord> = split.big_boxes().columns().iter().flatten().copied().collect();
    let s = split.path().slope();
    small.iter().map(|&c| big.iter().filter(|&&b| attacking(c, b, s)).count()).sum()
}

pub fn f_big(split: &BigSmallSplit) -> SymFunc {
    split.big_boxes().generating_function()
}

pub fn f_small(split: &BigSmallSplit) -> SymFunc {
    split.small_boxes().generating_function()
}

/// `maxtdinv(D) − pathdinv(D) − d(s, b)`.
pub fn c_stat(split: &BigSmallSplit) -> i64 {
    let d = split.path();
    d.maxtdinv() as i64 - d.pathdinv() as i64 - d_stat(split) as i64
}

/// One signed content contribution to [`pair_big_with_rectangle`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedContent {
    pub sign: i8,
    /// Big-label content `α̃`.
    pub content: Vec<usize>,
    pub sum: QTPoly,
}

/// Per-content terms of `⟨f_{D,b}, s_{(k−1)^{n−k}}⟩` from the truncated
/// Jacobi–Trudi expansion.
pub fn pairing_terms(split: &BigSmallSplit) -> Vec<SignedContent> {
    let m = split.m();
    let k = split.k();
    if m == 0 || k == 1 {
        return vec![SignedContent { sign: 1, content: vec![], sum: QTPoly::one() }];
    }
    let boxes = split.big_boxes();
    let heights = boxes.heights();
    truncated_jacobi_trudi(m, k)
        .expect("m, k >= 1")
        .into_iter()
        .map(|term| {
            let mut counts: BTreeMap<u32, i128> = BTreeMap::new();
            for_each_filling(&heights, &term.composition, &mut |f| {
                *counts.entry(boxes.tdinv(f) as u32).or_insert(0) += 1;
            });
            SignedContent {
                sign: term.sign,
                content: term.composition,
                sum: QTPoly::from_terms(counts.into_iter().map(|(e, c)| ((e, 0), c))),
            }
        })
        .collect()
}

/// `⟨f_{D,b}, s_{(k−1)^{n−k}}⟩` as a signed sum over fillings.
pub fn pair_big_with_rectangle(split: &BigSmallSplit) -> QTPoly {
    pairing_terms(split).into_iter().map(|t| t.sum.scale(t.sign as i128)).sum()
}
