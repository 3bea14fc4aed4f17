//! Shrunken diagrams of big-label fillings, their complements, the
//! sign-reversing involution on complement reading words, and the reduction
//! steps that prove `Inv + pathdinv = maxInv` on generalized fixed points.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::parking::BigSmallSplit;

/// One column of a shrunken diagram. Rows are 1-based and may be `≤ 0` for
/// columns that hang below the first row.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ShrunkenColumn {
    /// Row `h_i` of the lowest label (one above `top` when the column is empty).
    pub bottom: i64,
    /// Labels bottom to top.
    pub labels: Vec<usize>,
}

impl ShrunkenColumn {
    pub fn new(bottom: i64, labels: Vec<usize>) -> Self {
        ShrunkenColumn { bottom, labels }
    }

    /// Row `h′_i` of the highest label.
    pub fn top(&self) -> i64 {
        self.bottom + self.labels.len() as i64 - 1
    }

    pub fn label_at(&self, row: i64) -> Option<usize> {
        if row < self.bottom || row > self.top() {
            None
        } else {
            Some(self.labels[(row - self.bottom) as usize])
        }
    }

    fn nonzero(&self) -> usize {
        self.labels.iter().filter(|&&v| v > 0).count()
    }
}

/// Columns of big labels (optionally with the small boxes filled by `0`),
/// translated so that attacking pairs become same-row or adjacent-row pairs.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ShrunkenDiagram {
    /// `n − k`; nonzero labels lie in `1..=m`.
    pub m: usize,
    pub columns: Vec<ShrunkenColumn>,
}

/// A labeled cell `(column, row, label)`.
pub type Cell = (usize, i64, usize);

impl ShrunkenDiagram {
    pub fn new(m: usize, columns: Vec<ShrunkenColumn>) -> Result<Self> {
        for (i, c) in columns.iter().enumerate() {
            if c.labels.iter().any(|&v| v > m) {
                return Err(Error::InvalidLabeling(format!("column {} has a label above {m}: {:?}", i + 1, c.labels)));
            }
            let ok = c.labels.windows(2).all(|p| p[0] < p[1] || (p[0] == 0 && p[1] == 0));
            if !ok {
                return Err(Error::InvalidLabeling(format!("column {} = {:?} is not increasing", i + 1, c.labels)));
            }
        }
        Ok(ShrunkenDiagram { m, columns })
    }

    pub fn k(&self) -> usize {
        self.columns.len()
    }

    /// All labeled cells, column by column, bottom to top.
    pub fn cells(&self) -> Vec<Cell> {
        let mut out = Vec::new();
        for (i, c) in self.columns.iter().enumerate() {
            for (j, &v) in c.labels.iter().enumerate() {
                out.push((i, c.bottom + j as i64, v));
            }
        }
        out
    }

    /// Complement cells: the letters of `1..=m` missing from each column,
    /// written under its nonzero labels, increasing downward.
    pub fn complement(&self) -> Vec<Cell> {
        let mut out = Vec::new();
        for (i, c) in self.columns.iter().enumerate() {
            let present: BTreeSet<usize> = c.labels.iter().copied().filter(|&v| v > 0).collect();
            let first_nonzero = c.top() - c.nonzero() as i64 + 1;
            let missing = (1..=self.m).filter(|v| !present.contains(v));
            for (d, v) in missing.enumerate() {
                out.push((i, first_nonzero - 1 - d as i64, v));
            }
        }
        out
    }

    /// Complement letters read row by row from the top, right to left.
    pub fn complement_reading_word(&self) -> Vec<usize> {
        reading_order(self.complement()).into_iter().map(|(_, _, v)| v).collect()
    }

    pub fn inv(&self) -> usize {
        count_pairs(&self.cells(), |x, y| x < y)
    }

    pub fn max_inv(&self) -> usize {
        count_pairs(&self.cells(), |_, _| true)
    }

    /// Attacking pairs of complement cells with `x ≤ y`.
    pub fn tied_inv_complement(&self) -> usize {
        count_pairs(&self.complement(), |x, y| x <= y)
    }

    /// `Inv` restricted to pairs between columns `i < j`.
    pub fn inv_between(&self, i: usize, j: usize) -> usize {
        let cells: Vec<Cell> = self.cells().into_iter().filter(|c| c.0 == i || c.0 == j).collect();
        count_pairs(&cells, |x, y| x < y)
    }

    /// Tied inversions between the complements of columns `i < j`.
    pub fn tied_inv_between(&self, i: usize, j: usize) -> usize {
        let cells: Vec<Cell> = self.complement().into_iter().filter(|c| c.0 == i || c.0 == j).collect();
        count_pairs(&cells, |x, y| x <= y)
    }

    /// Pairs `(x, y)` in one row with `x` in an earlier column at most
    /// `m + 1` rows below that column's top and `y` labeled.
    pub fn pathdinv(&self) -> usize {
        let s = self.m as i64 + 1;
        let mut count = 0;
        for (i, ci) in self.columns.iter().enumerate() {
            let (lo, hi) = (ci.top() - s, ci.top());
            for cj in &self.columns[i + 1..] {
                let a = lo.max(cj.bottom);
                let b = hi.min(cj.top());
                if b >= a {
                    count += (b - a + 1) as usize;
                }
            }
        }
        count
    }

    /// `maxInv − pathdinv − Inv`.
    pub fn defect(&self) -> i64 {
        self.max_inv() as i64 - self.pathdinv() as i64 - self.inv() as i64
    }

    /// The complement reading word is strictly increasing.
    pub fn is_generalized_fixed_point(&self) -> bool {
        self.complement_reading_word().windows(2).all(|p| p[0] < p[1])
    }

    /// Checks the complete-diagram conditions `h₁ = 1`, `h′_k = m + 1`,
    /// `h_{i+1} = h′_i − m` and `h′_i ≥ m + 1`.
    pub fn is_complete(&self) -> bool {
        let m = self.m as i64;
        let Some(last) = self.columns.last() else { return false };
        self.columns[0].bottom == 1
            && last.top() == m + 1
            && self.columns.iter().all(|c| c.top() > m)
            && self.columns.windows(2).all(|p| p[1].bottom == p[0].top() - m)
    }

    fn is_basic(&self, c: &ShrunkenColumn) -> bool {
        c.bottom == 1 && c.labels.iter().copied().eq(0..=self.m)
    }

    /// Index of the leftmost column that is not `0, 1, …, m` on rows `1..=m+1`.
    pub fn leftmost_nonbasic(&self) -> Option<usize> {
        self.columns.iter().position(|c| !self.is_basic(c))
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("diagram serializes")
    }
}

impl fmt::Display for ShrunkenDiagram {
    /// Rows top to bottom; `.` for an empty box.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let comp = self.complement();
        let lo = self.columns.iter().map(|c| c.bottom).chain(comp.iter().map(|c| c.1)).min().unwrap_or(1);
        let hi = self.columns.iter().map(|c| c.top()).max().unwrap_or(0);
        for row in (lo..=hi).rev() {
            let line: Vec<String> = self
                .columns
                .iter()
                .enumerate()
                .map(|(i, c)| match c.label_at(row) {
                    Some(v) => v.to_string(),
                    None => match comp.iter().find(|x| x.0 == i && x.1 == row) {
                        Some(x) => format!("'{}", x.2),
                        None => ".".into(),
                    },
                })
                .collect();
            writeln!(f, "{row:>3} | {}", line.join(" "))?;
        }
        Ok(())
    }
}

/// Sorts cells into reading order: higher rows first, right to left in a row.
fn reading_order(mut cells: Vec<Cell>) -> Vec<Cell> {
    cells.sort_by(|a, b| b.1.cmp(&a.1).then(b.0.cmp(&a.0)));
    cells
}

/// Counts ordered pairs `(x, y)` with `x` left of `y` in one row, or `x` right
/// of `y` one row lower, for which `accept(label x, label y)`.
fn count_pairs(cells: &[Cell], accept: impl Fn(usize, usize) -> bool) -> usize {
    let mut n = 0;
    for &(cx, rx, vx) in cells {
        for &(cy, ry, vy) in cells {
            let attacks = (rx == ry && cx < cy) || (rx + 1 == ry && cx > cy);
            if attacks && accept(vx, vy) {
                n += 1;
            }
        }
    }
    n
}

fn slope(split: &BigSmallSplit) -> i64 {
    split.m() as i64 + 1
}

/// Top row `h′_i = R_i − (i−1)(m+1)` of column `i` (0-based `i` here).
fn column_top(split: &BigSmallSplit, i: usize) -> i64 {
    split.path().prefix(i + 1) as i64 - i as i64 * slope(split)
}

fn check_big_labels(split: &BigSmallSplit, big: &[Vec<usize>]) -> Result<()> {
    if big.len() != split.k() || big.iter().zip(split.b()).any(|(c, &b)| c.len() != b) {
        return Err(Error::InvalidLabeling(format!("big labels {big:?} do not fit b = {:?}", split.b())));
    }
    if big.iter().flatten().any(|&v| v == 0 || v > split.m()) {
        return Err(Error::InvalidLabeling(format!("big labels {big:?} must lie in 1..={}", split.m())));
    }
    if big.iter().any(|c| c.windows(2).any(|p| p[0] >= p[1])) {
        return Err(Error::InvalidLabeling(format!("big labels {big:?} are not column-strict")));
    }
    Ok(())
}

/// Shrunken diagram of a big-label filling with values in `1..=n−k`.
pub fn shrink(split: &BigSmallSplit, big: &[Vec<usize>]) -> Result<ShrunkenDiagram> {
    check_big_labels(split, big)?;
    let columns = (0..split.k())
        .map(|i| ShrunkenColumn::new(column_top(split, i) - split.b()[i] as i64 + 1, big[i].clone()))
        .collect();
    ShrunkenDiagram::new(split.m(), columns)
}

/// Like [`shrink`], with every small box filled by `0`.
pub fn shrink_complete(split: &BigSmallSplit, big: &[Vec<usize>]) -> Result<ShrunkenDiagram> {
    check_big_labels(split, big)?;
    let columns = (0..split.k())
        .map(|i| {
            let mut labels = vec![0; split.s()[i]];
            labels.extend_from_slice(&big[i]);
            ShrunkenColumn::new(column_top(split, i) - split.path().runs()[i] as i64 + 1, labels)
        })
        .collect();
    ShrunkenDiagram::new(split.m(), columns)
}

/// Content `α` of a word over `1..=m`: `α_v` copies of `v`.
pub fn content(word: &[usize], m: usize) -> Vec<usize> {
    let mut c = vec![0; m];
    for &v in word {
        if (1..=m).contains(&v) {
            c[v - 1] += 1;
        }
    }
    c
}

/// `α₁ > 0` and each positive entry `t` is followed by exactly `t − 1` zeros.
pub fn is_allowable(alpha: &[usize]) -> bool {
    let mut i = 0;
    if alpha.first().is_none_or(|&a| a == 0) {
        return false;
    }
    while i < alpha.len() {
        let t = alpha[i];
        if t == 0 || i + t > alpha.len() {
            return false;
        }
        if alpha[i + 1..i + t].iter().any(|&z| z != 0) {
            return false;
        }
        i += t;
    }
    true
}

/// An allowable content with its sign `(−1)^{#zeros}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct AllowableContent {
    pub content: Vec<usize>,
    pub sign: i8,
}

impl AllowableContent {
    pub fn zeros(&self) -> usize {
        self.content.iter().filter(|&&a| a == 0).count()
    }
}

/// All `2^{m−1}` allowable contents of length `m`: fewest zeros first, then
/// by the multiset of positive entries, then by the positive entries in order.
pub fn allowable_contents(m: usize) -> Result<Vec<AllowableContent>> {
    if m == 0 {
        return Err(Error::InvalidParameters("allowable contents need m >= 1".into()));
    }
    // compositions of m into parts t, each written as t, 0^{t-1}
    let mut out = Vec::new();
    fn rec(left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for t in 1..=left {
            let len = cur.len();
            cur.push(t);
            cur.extend(std::iter::repeat_n(0, t - 1));
            rec(left - t, cur, out);
            cur.truncate(len);
        }
    }
    let mut raw = Vec::new();
    rec(m, &mut Vec::new(), &mut raw);
    for c in raw {
        let zeros = c.iter().filter(|&&a| a == 0).count();
        out.push(AllowableContent { content: c, sign: if zeros % 2 == 0 { 1 } else { -1 } });
    }
    out.sort_by_cached_key(|a| (a.zeros(), parts_key(&a.content), a.content.iter().filter(|&&x| x > 0).copied().collect::<Vec<_>>()));
    Ok(out)
}

/// The positive entries sorted decreasingly.
fn parts_key(c: &[usize]) -> Vec<usize> {
    let mut p: Vec<usize> = c.iter().copied().filter(|&x| x > 0).collect();
    p.sort_unstable_by(|a, b| b.cmp(a));
    p
}

/// Which rule of the involution applies to a word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum PhiCase {
    /// A singleton `i` is lowered to the next smaller letter `j`.
    Lower,
    /// The first copy of the largest repeated letter is raised.
    Raise,
    Fixed,
}

fn phi_case(w: &[usize], m: usize) -> Result<(PhiCase, Vec<usize>)> {
    if w.len() != m || w.iter().any(|&v| v == 0 || v > m) {
        return Err(Error::NonAllowable(w.to_vec()));
    }
    let alpha = content(w, m);
    if !is_allowable(&alpha) {
        return Err(Error::NonAllowable(w.to_vec()));
    }
    let repeated = (1..=m).rev().find(|&v| alpha[v - 1] >= 2);
    let singleton = (1..=m).rev().find(|&v| {
        if alpha[v - 1] != 1 {
            return false;
        }
        let Some(j) = (1..v).rev().find(|&u| alpha[u - 1] > 0) else { return false };
        let pos_i = w.iter().position(|&x| x == v).expect("present");
        let first_j = w.iter().position(|&x| x == j).expect("present");
        pos_i < first_j
    });
    let mut out = w.to_vec();
    match (singleton, repeated) {
        (Some(i), r) if r.is_none_or(|r| i > r) => {
            let j = (1..i).rev().find(|&u| alpha[u - 1] > 0).expect("checked above");
            let p = w.iter().position(|&x| x == i).expect("present");
            out[p] = j;
            Ok((PhiCase::Lower, out))
        }
        (_, Some(r)) => {
            let t = (r + 1..=m).find(|&u| alpha[u - 1] > 0).unwrap_or(m + 1);
            let p = w.iter().position(|&x| x == r).expect("present");
            out[p] = t - 1;
            Ok((PhiCase::Raise, out))
        }
        (None, None) => Ok((PhiCase::Fixed, out)),
        (Some(_), None) => unreachable!("matched by the first arm"),
    }
}

/// The sign-reversing involution on words of length `m` with allowable content.
pub fn phi(w: &[usize], m: usize) -> Result<Vec<usize>> {
    phi_case(w, m).map(|(_, v)| v)
}

pub fn phi_with_case(w: &[usize], m: usize) -> Result<(PhiCase, Vec<usize>)> {
    phi_case(w, m)
}

/// Pairs `p < q` of positions with `w[p] ≥ w[q]`.
pub fn word_tied_inversions(w: &[usize]) -> usize {
    (0..w.len()).flat_map(|p| (p + 1..w.len()).map(move |q| (p, q))).filter(|&(p, q)| w[p] >= w[q]).count()
}

/// All distinct rearrangements of a multiset, lexicographically.
fn arrangements(mut letters: Vec<usize>) -> Vec<Vec<usize>> {
    letters.sort_unstable();
    let mut out = vec![letters.clone()];
    let n = letters.len();
    while let Some(i) = (1..n).rev().find(|&i| letters[i - 1] < letters[i]) {
        let j = (i..n).rev().find(|&j| letters[j] > letters[i - 1]).expect("exists by choice of i");
        letters.swap(i - 1, j);
        letters[i..].reverse();
        out.push(letters.clone());
    }
    out
}

/// Every word of length `m` whose content is allowable, lexicographically.
pub fn allowable_words(m: usize) -> Result<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    for a in allowable_contents(m)? {
        let letters: Vec<usize> = a.content.iter().enumerate().flat_map(|(i, &c)| std::iter::repeat_n(i + 1, c)).collect();
        out.extend(arrangements(letters));
    }
    out.sort();
    Ok(out)
}

/// The pairing of allowable words under [`phi`].
#[derive(Clone, Debug, Serialize)]
pub struct InvolutionTable {
    pub m: usize,
    pub contents: Vec<AllowableContent>,
    /// `(w, φ(w))` with `w` the word on which a singleton is lowered.
    pub pairs: Vec<(Vec<usize>, Vec<usize>)>,
    pub fixed: Vec<Vec<usize>>,
}

pub fn involution_table(m: usize) -> Result<InvolutionTable> {
    if m > 8 {
        return Err(Error::SizeGuard { what: "involution table length", value: m, cap: 8 });
    }
    let contents = allowable_contents(m)?;
    let mut pairs = Vec::new();
    let mut fixed = Vec::new();
    for w in allowable_words(m)? {
        match phi_case(&w, m)? {
            (PhiCase::Lower, v) => pairs.push((w, v)),
            (PhiCase::Fixed, v) => fixed.push(v),
            (PhiCase::Raise, _) => {}
        }
    }
    Ok(InvolutionTable { m, contents, pairs, fixed })
}

/// Letters of a word joined without separators (`m ≤ 9`).
pub fn word_string(w: &[usize]) -> String {
    w.iter().map(|v| v.to_string()).collect()
}

/// Complement cells of `diagram` rewritten with `word` in reading order, and
/// the big labels that complement back. Fails if a column stops increasing.
fn refill(diagram: &ShrunkenDiagram, word: &[usize]) -> Result<Vec<Vec<usize>>> {
    let cells = reading_order(diagram.complement());
    debug_assert_eq!(cells.len(), word.len());
    let k = diagram.k();
    let mut comp: Vec<Vec<(i64, usize)>> = vec![Vec::new(); k];
    for (&(c, r, _), &v) in cells.iter().zip(word) {
        comp[c].push((r, v));
    }
    let mut out = Vec::with_capacity(k);
    for (i, col) in comp.into_iter().enumerate() {
        // reading order visits a column top to bottom
        if col.windows(2).any(|p| p[0].1 >= p[1].1) {
            return Err(Error::Internal(format!("column {} complement {:?} is not increasing downward", i + 1, col)));
        }
        let missing: BTreeSet<usize> = col.iter().map(|x| x.1).collect();
        out.push((1..=diagram.m).filter(|v| !missing.contains(v)).collect());
    }
    Ok(out)
}

/// The involution induced on big-label fillings through complement reading words.
pub fn induced_involution(split: &BigSmallSplit, big: &[Vec<usize>]) -> Result<Vec<Vec<usize>>> {
    let d = shrink(split, big)?;
    let w = d.complement_reading_word();
    let v = phi(&w, split.m())?;
    refill(&d, &v)
}

/// The big labeling whose complement reading word is `1, 2, …, n−k`.
pub fn fixed_point(split: &BigSmallSplit) -> Result<Vec<Vec<usize>>> {
    if !split.is_admissible() {
        return Err(Error::NonAdmissible(format!("b = {:?} with n - k = {}", split.b(), split.m())));
    }
    // any column-strict placeholder has the same complement cells
    let placeholder: Vec<Vec<usize>> = split.b().iter().map(|&b| (1..=b).collect()).collect();
    let d = shrink(split, &placeholder)?;
    let word: Vec<usize> = (1..=split.m()).collect();
    refill(&d, &word)
}

/// One reduction toward the all-basic diagram.
#[derive(Clone, Debug, Serialize)]
pub struct ReductionStep {
    pub case: u8,
    /// 1-based column index.
    pub column: usize,
    pub before: ShrunkenDiagram,
    pub after: ShrunkenDiagram,
    pub conserved: i64,
}

fn nonbasic(s: &ShrunkenDiagram) -> Result<usize> {
    let i = s.leftmost_nonbasic().ok_or_else(|| Error::ReductionNotApplicable("every column is basic".into()))?;
    if s.columns[i].bottom != 1 || s.columns[i].labels.first() != Some(&0) {
        return Err(Error::ReductionNotApplicable(format!("column {} does not start with 0 on row 1", i + 1)));
    }
    Ok(i)
}

/// Removes the highest `0` of the leftmost non-basic column and inserts its
/// smallest missing letter; the shape is unchanged.
pub fn reduce_case1(s: &ShrunkenDiagram) -> Result<ShrunkenDiagram> {
    let i = nonbasic(s)?;
    let col = &s.columns[i];
    let Some(missing) = (1..=s.m).find(|v| !col.labels.contains(v)) else {
        return Err(Error::ReductionNotApplicable(format!("column {} contains all of 1..={}", i + 1, s.m)));
    };
    let zeros = col.labels.iter().filter(|&&v| v == 0).count();
    if zeros < 2 {
        return Err(Error::ReductionNotApplicable(format!("column {} has a single 0", i + 1)));
    }
    let mut labels = col.labels[1..].to_vec();
    let pos = labels.partition_point(|&v| v < missing);
    labels.insert(pos, missing);
    let mut out = s.clone();
    out.columns[i].labels = labels;
    Ok(out)
}

/// Lowers the leftmost non-basic column `0^a, 1, …, m` (with `a ≥ 2`) by one
/// row and adds a `0` at the bottom of the next column.
pub fn reduce_case2(s: &ShrunkenDiagram) -> Result<ShrunkenDiagram> {
    let i = nonbasic(s)?;
    let col = &s.columns[i];
    let nonzero: Vec<usize> = col.labels.iter().copied().filter(|&v| v > 0).collect();
    if nonzero != (1..=s.m).collect::<Vec<_>>() {
        return Err(Error::ReductionNotApplicable(format!("column {} is missing a letter of 1..={}", i + 1, s.m)));
    }
    if col.labels.len() - nonzero.len() < 2 {
        return Err(Error::ReductionNotApplicable(format!("column {} has a single 0", i + 1)));
    }
    if i + 1 >= s.k() {
        return Err(Error::ReductionNotApplicable("no column to the right".into()));
    }
    let mut out = s.clone();
    out.columns[i].labels.remove(0);
    let next = &mut out.columns[i + 1];
    next.labels.insert(0, 0);
    next.bottom -= 1;
    Ok(out)
}

/// Applies whichever reduction fits until every column is basic.
pub fn reduce_to_base(s: &ShrunkenDiagram) -> Result<Vec<ReductionStep>> {
    let mut cur = s.clone();
    let mut trace = Vec::new();
    // each step removes a missing letter or moves a zero rightward
    let bound = (s.k() + 1) * (s.cells().len() + 1) * (s.m + 1);
    while let Some(i) = cur.leftmost_nonbasic() {
        if trace.len() > bound {
            return Err(Error::Internal("reduction did not terminate".into()));
        }
        let missing = (1..=cur.m).any(|v| !cur.columns[i].labels.contains(&v));
        let (case, next) = if missing { (1, reduce_case1(&cur)?) } else { (2, reduce_case2(&cur)?) };
        trace.push(ReductionStep { case, column: i + 1, before: cur.clone(), after: next.clone(), conserved: next.defect() });
        cur = next;
    }
    Ok(trace)
}

/// The trace as the JSON list `[{case, column, before, after, conserved}, …]`.
pub fn trace_json(trace: &[ReductionStep]) -> serde_json::Value {
    serde_json::to_value(trace).expect("trace serializes")
}
