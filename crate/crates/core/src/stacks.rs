//! Stacked parking functions, the square expansion behind `hdinv`, and the
//! map `F` from small labelings of admissible splits.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::parking::{BigSmallSplit, ColumnBoxes, WordParkingFunction};
use crate::paths::{attacking, DyckPath};
use crate::qt::QTPoly;
use crate::symfunc::{Basis, SymFunc};

/// Column heights `w_1..w_k` of a stack, each at least 1, summing to `n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Stack {
    pub w: Vec<usize>,
}

impl Stack {
    pub fn new(w: Vec<usize>) -> Result<Self> {
        if w.is_empty() || w.contains(&0) {
            return Err(Error::InvalidParameters(format!("stack heights {w:?} must be positive")));
        }
        Ok(Stack { w })
    }

    pub fn n(&self) -> usize {
        self.w.iter().sum()
    }

    pub fn k(&self) -> usize {
        self.w.len()
    }

    pub fn prefix(&self, i: usize) -> usize {
        self.w[..i].iter().sum()
    }
}

/// All stacks with `k` columns and `n` rows.
pub fn enumerate_stacks(n: usize, k: usize) -> Vec<Stack> {
    fn rec(left: usize, slots: usize, cur: &mut Vec<usize>, out: &mut Vec<Stack>) {
        if slots == 0 {
            if left == 0 {
                out.push(Stack { w: cur.clone() });
            }
            return;
        }
        for wi in 1..=left.saturating_sub(slots - 1) {
            cur.push(wi);
            rec(left - wi, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k >= 1 && k <= n {
        rec(n, k, &mut Vec::new(), &mut out);
    }
    out
}

/// Path runs `u` over a stack: `u_1 + … + u_i ≥ w_1 + … + w_i`, total `n`.
pub fn paths_over_stack(stack: &Stack) -> Vec<Vec<usize>> {
    let n = stack.n();
    fn rec(i: usize, acc: usize, n: usize, stack: &Stack, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == stack.k() {
            if acc == n {
                out.push(cur.clone());
            }
            return;
        }
        let need = stack.prefix(i + 1).saturating_sub(acc);
        for u in (need..=n - acc).rev() {
            cur.push(u);
            rec(i + 1, acc + u, n, stack, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, 0, n, stack, &mut Vec::new(), &mut out);
    out
}

/// A labeled path weakly above a stack.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct StackedPF {
    pub n: usize,
    pub k: usize,
    pub w: Vec<usize>,
    pub u: Vec<usize>,
    pub labels: Vec<Vec<usize>>,
}

/// How `hdinv` treats equal labels in an attacking pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TieRule {
    /// Count pairs with `label(a) < label(b)` (the `tdinv` convention).
    Strict,
    /// Count pairs with `label(a) ≤ label(b)`.
    Weak,
}

impl StackedPF {
    pub fn new(w: Vec<usize>, u: Vec<usize>, labels: Vec<Vec<usize>>) -> Result<Self> {
        let stack = Stack::new(w.clone())?;
        let (n, k) = (stack.n(), stack.k());
        if u.len() != k || labels.len() != k {
            return Err(Error::InvalidParameters(format!("w, u, labels lengths differ: {k}, {}, {}", u.len(), labels.len())));
        }
        if u.iter().sum::<usize>() != n {
            return Err(Error::InvalidPath(format!("runs {u:?} do not sum to {n}")));
        }
        let mut acc = 0;
        for i in 0..k {
            acc += u[i];
            if acc < stack.prefix(i + 1) {
                return Err(Error::InvalidPath(format!("runs {u:?} dip below stack {w:?} at column {}", i + 1)));
            }
            if labels[i].len() != u[i] || labels[i].contains(&0) || labels[i].windows(2).any(|p| p[0] >= p[1]) {
                return Err(Error::InvalidLabeling(format!("column {} = {:?} for run {}", i + 1, labels[i], u[i])));
            }
        }
        Ok(StackedPF { n, k, w, u, labels })
    }

    pub fn stack(&self) -> Stack {
        Stack { w: self.w.clone() }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("stacked parking function serializes")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let raw: StackedPF = serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        let p = StackedPF::new(raw.w, raw.u, raw.labels)?;
        if p.n != raw.n || p.k != raw.k {
            return Err(Error::Parse(format!("declared (n,k) = ({},{}) but data gives ({},{})", raw.n, raw.k, p.n, p.k)));
        }
        Ok(p)
    }
}

/// Boxes between path and stack: `Σ_i (U_i − W_i)`.
pub fn area_stacked(p: &StackedPF) -> usize {
    let st = p.stack();
    (1..=p.k).map(|i| p.u[..i].iter().sum::<usize>() - st.prefix(i)).sum()
}

/// Row ranges of the labeled boxes after inserting `w_i − 1` empty columns
/// after column `i`. Returns one entry per column of the `n × n` grid.
fn square_rows(w: &[usize], u: &[usize]) -> Vec<(usize, usize)> {
    let n: usize = w.iter().sum();
    let mut rows = vec![(0, 0); n];
    let (mut x, mut y) = (0, 0);
    for (wi, ui) in w.iter().zip(u) {
        rows[x] = (y, y + ui);
        // empty columns sit at the current height
        for r in rows.iter_mut().take(x + wi).skip(x + 1) {
            *r = (y + ui, y + ui);
        }
        x += wi;
        y += ui;
    }
    rows
}

/// The ordinary `(n, n)` parking function obtained by widening column `i` to `w_i` columns.
pub fn expand_to_square(p: &StackedPF) -> WordParkingFunction {
    let rows = square_rows(&p.w, &p.u);
    let runs: Vec<usize> = rows.iter().map(|(a, b)| b - a).collect();
    let mut labels: Vec<Vec<usize>> = vec![Vec::new(); p.n];
    let mut x = 0;
    for (i, wi) in p.w.iter().enumerate() {
        labels[x] = p.labels[i].clone();
        x += wi;
    }
    let path = DyckPath::new(p.n, p.n, runs).expect("expansion of a stacked path is a square Dyck path");
    WordParkingFunction::new(path, labels).expect("labels carried verbatim stay column-strict")
}

/// `hdinv` with the given tie convention.
pub fn hdinv_with(p: &StackedPF, rule: TieRule) -> usize {
    let sq = expand_to_square(p);
    let boxes = sq.path().labeled_boxes();
    let flat: Vec<usize> = sq.labels().iter().flatten().copied().collect();
    let mut count = 0;
    for (i, &a) in boxes.iter().enumerate() {
        for (j, &b) in boxes.iter().enumerate() {
            if attacking(a, b, 1) {
                let ok = match rule {
                    TieRule::Strict => flat[i] < flat[j],
                    TieRule::Weak => flat[i] <= flat[j],
                };
                count += ok as usize;
            }
        }
    }
    count
}

/// `hdinv` with strict comparison of labels.
pub fn hdinv(p: &StackedPF) -> usize {
    hdinv_with(p, TieRule::Strict)
}

/// `F`: drop the big boxes, keep small labels, set `w_i = n − k + 1 − b_i`, `u_i = s_i`.
pub fn map_f(split: &BigSmallSplit, small_labels: &[Vec<usize>]) -> Result<StackedPF> {
    if !split.is_admissible() {
        return Err(Error::NonAdmissible(format!("b = {:?} with n - k = {}", split.b(), split.m())));
    }
    let w: Vec<usize> = split.b().iter().map(|&bi| split.m() + 1 - bi).collect();
    StackedPF::new(w, split.s().to_vec(), small_labels.to_vec())
}

/// Inverse of [`map_f`].
pub fn inverse_f(p: &StackedPF) -> Result<(BigSmallSplit, Vec<Vec<usize>>)> {
    let m = p.n - p.k;
    if p.w.iter().any(|&wi| wi > m + 1) {
        return Err(Error::NonAdmissible(format!("stack {:?} has a column taller than n - k + 1", p.w)));
    }
    let b: Vec<usize> = p.w.iter().map(|&wi| m + 1 - wi).collect();
    let runs: Vec<usize> = b.iter().zip(&p.u).map(|(bi, ui)| bi + ui).collect();
    let path = DyckPath::new(p.k * (m + 1), p.k, runs)?;
    Ok((BigSmallSplit::new(p.n, path, b)?, p.labels.clone()))
}

/// The label-free part of a stacked parking function.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StackedShape {
    pub stack: Stack,
    pub u: Vec<usize>,
}

impl StackedShape {
    pub fn area(&self) -> usize {
        (1..=self.stack.k()).map(|i| self.u[..i].iter().sum::<usize>() - self.stack.prefix(i)).sum()
    }

    /// Labeled boxes of the square expansion, for strict-tie `hdinv`.
    pub fn square_boxes(&self) -> ColumnBoxes {
        ColumnBoxes::from_rows(1, &square_rows(&self.stack.w, &self.u))
    }
}

/// Every (stack, path) pair for `(n, k)`.
pub fn enumerate_stacked(n: usize, k: usize) -> Vec<StackedShape> {
    enumerate_stacks(n, k)
        .into_iter()
        .flat_map(|st| paths_over_stack(&st).into_iter().map(move |u| StackedShape { stack: st.clone(), u }))
        .collect()
}

/// `Σ_P t^{area(P)} q^{hdinv(P)} x^P` in the monomial basis.
pub fn stacked_sum(n: usize, k: usize) -> Result<SymFunc> {
    if k == 0 || k > n {
        return Err(Error::InvalidParameters(format!("need 1 <= k <= n, got n={n}, k={k}")));
    }
    let shapes = enumerate_stacked(n, k);
    let parts: Vec<SymFunc> = shapes
        .par_iter()
        .map(|sh| {
            let area = sh.area() as u32;
            sh.square_boxes().generating_function().map_coeffs(|c| c.shift(0, area))
        })
        .collect();
    let mut total = SymFunc::zero(Basis::Monomial, n);
    for p in parts {
        total = total.add(&p)?;
    }
    Ok(total)
}

/// `t^{area} q^{hdinv}` of one stacked parking function.
pub fn weight(p: &StackedPF) -> QTPoly {
    QTPoly::monomial(1, hdinv(p) as u32, area_stacked(p) as u32)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stack_counts() {
        assert_eq!(enumerate_stacks(3, 2).len(), 2);
        assert_eq!(enumerate_stacks(4, 4), vec![Stack { w: vec![1, 1, 1, 1] }]);
        let s = enumerate_stacked(2, 1);
        assert_eq!(s.len(), 1);
        assert_eq!(s[0].u, vec![2]);
        // (1,2): u in {(3,0),(2,1),(1,2)}; (2,1): u in {(3,0),(2,1)}
        assert_eq!(enumerate_stacked(3, 2).len(), 5);
    }

    #[test]
    fn area_and_expand() {
        let p = StackedPF::new(vec![1, 2], vec![1, 2], vec![vec![1], vec![2, 3]]).unwrap();
        assert_eq!(area_stacked(&p), 0);
        let p = StackedPF::new(vec![2], vec![2], vec![vec![1, 2]]).unwrap();
        let sq = expand_to_square(&p);
        assert_eq!(sq.path().runs(), &[2, 0]);
        assert_eq!(sq.labels(), &[vec![1, 2], vec![]]);
        assert_eq!(hdinv(&p), 0);
    }

    #[test]
    fn tie_rules_differ_on_repeated_labels() {
        let p = StackedPF::new(vec![1, 1], vec![1, 1], vec![vec![1], vec![1]]).unwrap();
        assert_eq!(hdinv_with(&p, TieRule::Strict), 0);
        assert_eq!(hdinv_with(&p, TieRule::Weak), 1);
    }

    #[test]
    fn rejects_bad_stacked() {
        assert!(StackedPF::new(vec![2, 1], vec![1, 2], vec![vec![1], vec![1, 2]]).is_err());
        assert!(StackedPF::new(vec![0, 3], vec![3, 0], vec![vec![1, 2, 3], vec![]]).is_err());
    }

    #[test]
    fn json_roundtrip() {
        let p = StackedPF::new(vec![1, 2], vec![2, 1], vec![vec![1, 3], vec![2]]).unwrap();
        let j = p.to_json();
        assert_eq!(j.to_string(), r#"{"n":3,"k":2,"w":[1,2],"u":[2,1],"labels":[[1,3],[2]]}"#);
        assert_eq!(StackedPF::from_json(&j).unwrap(), p);
    }
}
