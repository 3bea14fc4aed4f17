//! Rational Dyck paths in a `K × k` grid with `k | K`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Lower-left corner of a unit box; `x` is the column, `y` the row, both 0-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BoxCoord {
    pub x: usize,
    pub y: usize,
}

impl BoxCoord {
    pub fn new(x: usize, y: usize) -> Self {
        BoxCoord { x, y }
    }

    /// Diagonal index `y − slope·x`.
    pub fn diagonal(self, slope: usize) -> i64 {
        self.y as i64 - (slope * self.x) as i64
    }
}

/// Does `a` attack `b`? Same diagonal with `a` to the left, or `a` one
/// diagonal lower and to the right.
pub fn attacking(a: BoxCoord, b: BoxCoord, slope: usize) -> bool {
    let (da, db) = (a.diagonal(slope), b.diagonal(slope));
    (da == db && a.x < b.x) || (da + 1 == db && a.x > b.x)
}

/// A rational Dyck path stored by its vertical runs: `runs[i]` north steps at `x = i`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DyckPath {
    height: usize,
    width: usize,
    runs: Vec<usize>,
}

impl DyckPath {
    pub fn new(height: usize, width: usize, runs: Vec<usize>) -> Result<Self> {
        if width == 0 || !height.is_multiple_of(width) {
            return Err(Error::NotDivisible { big_k: height, k: width });
        }
        if runs.len() != width {
            return Err(Error::InvalidPath(format!("expected {width} runs, got {}", runs.len())));
        }
        if runs.iter().sum::<usize>() != height {
            return Err(Error::InvalidPath(format!("runs {runs:?} do not sum to {height}")));
        }
        let s = height / width;
        let mut acc = 0;
        for (i, r) in runs.iter().enumerate() {
            acc += r;
            if acc < (i + 1) * s {
                return Err(Error::InvalidPath(format!("runs {runs:?} dip below the diagonal at column {}", i + 1)));
            }
        }
        Ok(DyckPath { height, width, runs })
    }

    /// `K`.
    pub fn height(&self) -> usize {
        self.height
    }

    /// `k`.
    pub fn width(&self) -> usize {
        self.width
    }

    pub fn runs(&self) -> &[usize] {
        &self.runs
    }

    /// `K / k`.
    pub fn slope(&self) -> usize {
        self.height / self.width
    }

    /// `r_1 + … + r_i`.
    pub fn prefix(&self, i: usize) -> usize {
        self.runs[..i].iter().sum()
    }

    /// Labeled boxes column by column, bottom to top.
    pub fn labeled_boxes(&self) -> Vec<BoxCoord> {
        let mut out = Vec::with_capacity(self.height);
        let mut y = 0;
        for (x, &r) in self.runs.iter().enumerate() {
            for _ in 0..r {
                out.push(BoxCoord::new(x, y));
                y += 1;
            }
        }
        out
    }

    pub fn attacks(&self, a: BoxCoord, b: BoxCoord) -> bool {
        attacking(a, b, self.slope())
    }

    /// Whole boxes between the path and the diagonal.
    pub fn area(&self) -> usize {
        let s = self.slope();
        (1..=self.width).map(|i| self.prefix(i) - i * s).sum()
    }

    /// Boxes strictly above the path with their arm and leg.
    pub fn boxes_above(&self) -> Vec<(BoxCoord, usize, usize)> {
        let mut out = Vec::new();
        for x in 0..self.width {
            let base = self.prefix(x + 1);
            for y in base..self.height {
                let arm = (x + 1..self.width).filter(|&x2| self.prefix(x2 + 1) <= y).count();
                out.push((BoxCoord::new(x, y), arm, y - base));
            }
        }
        out
    }

    pub fn pathdinv(&self) -> usize {
        let (big_k, k) = (self.height, self.width);
        self.boxes_above()
            .into_iter()
            .filter(|&(_, arm, leg)| arm * big_k <= k * (leg + 1) && (leg == 0 || k * leg < big_k * (arm + 1)))
            .count()
    }

    /// Index pairs `(a, b)` into [`labeled_boxes`](Self::labeled_boxes) with `a` attacking `b`.
    pub fn attacking_pairs(&self) -> Vec<(usize, usize)> {
        let boxes = self.labeled_boxes();
        let s = self.slope();
        let mut out = Vec::new();
        for (i, &a) in boxes.iter().enumerate() {
            for (j, &b) in boxes.iter().enumerate() {
                if attacking(a, b, s) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn maxtdinv(&self) -> usize {
        self.attacking_pairs().len()
    }

    /// Text form `K,k:r1,r2,...`.
    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r: Vec<String> = self.runs.iter().map(|x| x.to_string()).collect();
        write!(f, "{},{}:{}", self.height, self.width, r.join(","))
    }
}

impl fmt::Debug for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DyckPath({self})")
    }
}

/// Parses a comma-separated list of non-negative integers.
pub fn parse_list(s: &str) -> Result<Vec<usize>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|x| x.trim().parse::<usize>().map_err(|e| Error::Parse(format!("{x:?}: {e}"))))
        .collect()
}

impl FromStr for DyckPath {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let (head, tail) = s.split_once(':').ok_or_else(|| Error::Parse(format!("missing ':' in {s:?}")))?;
        let hk = parse_list(head)?;
        let [h, k] = hk[..] else {
            return Err(Error::Parse(format!("expected 'K,k' before ':' in {s:?}")));
        };
        DyckPath::new(h, k, parse_list(tail)?)
    }
}

/// All `(K, k)` Dyck paths, runs in decreasing lexicographic order.
pub fn enumerate_paths(height: usize, width: usize) -> Result<Vec<DyckPath>> {
    if width == 0 || !height.is_multiple_of(width) {
        return Err(Error::NotDivisible { big_k: height, k: width });
    }
    let s = height / width;
    let mut out = Vec::new();
    fn rec(i: usize, acc: usize, s: usize, h: usize, w: usize, cur: &mut Vec<usize>, out: &mut Vec<DyckPath>) {
        if i == w {
            if acc == h {
                out.push(DyckPath { height: h, width: w, runs: cur.clone() });
            }
            return;
        }
        let need = ((i + 1) * s).saturating_sub(acc);
        for r in (need..=h - acc).rev() {
            cur.push(r);
            rec(i + 1, acc + r, s, h, w, cur, out);
            cur.pop();
        }
    }
    rec(0, 0, s, height, width, &mut Vec::new(), &mut out);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(h: usize, w: usize, runs: &[usize]) -> DyckPath {
        DyckPath::new(h, w, runs.to_vec()).unwrap()
    }

    #[test]
    fn counts() {
        assert_eq!(enumerate_paths(2, 2).unwrap().len(), 2);
        let four_two: Vec<Vec<usize>> = enumerate_paths(4, 2).unwrap().iter().map(|d| d.runs().to_vec()).collect();
        assert_eq!(four_two, vec![vec![4, 0], vec![3, 1], vec![2, 2]]);
        assert_eq!(enumerate_paths(3, 3).unwrap().len(), 5);
        assert!(matches!(enumerate_paths(5, 2), Err(Error::NotDivisible { .. })));
    }

    #[test]
    fn statistics_on_four_by_two() {
        assert_eq!(p(4, 2, &[4, 0]).area(), 2);
        assert_eq!(p(4, 2, &[2, 2]).area(), 0);
        assert_eq!(p(4, 2, &[4, 0]).pathdinv(), 0);
        assert_eq!(p(4, 2, &[2, 2]).pathdinv(), 2);
        assert_eq!(p(4, 2, &[3, 1]).pathdinv(), 1);
        assert_eq!(p(4, 2, &[4, 0]).maxtdinv(), 0);
        assert_eq!(p(4, 2, &[2, 2]).maxtdinv(), 3);
    }

    #[test]
    fn attack_examples() {
        assert!(attacking(BoxCoord::new(0, 0), BoxCoord::new(1, 2), 2));
        assert!(attacking(BoxCoord::new(1, 2), BoxCoord::new(0, 1), 2));
        assert!(!attacking(BoxCoord::new(0, 0), BoxCoord::new(0, 1), 2));
        assert!(!attacking(BoxCoord::new(0, 1), BoxCoord::new(0, 0), 2));
    }

    #[test]
    fn text_form() {
        let d: DyckPath = "4,2:3,1".parse().unwrap();
        assert_eq!(d, p(4, 2, &[3, 1]));
        assert_eq!(d.to_string(), "4,2:3,1");
        assert!("4,2:1,3".parse::<DyckPath>().is_err());
        assert!("4,2".parse::<DyckPath>().is_err());
    }

    #[test]
    fn rejects_invalid() {
        assert!(DyckPath::new(4, 2, vec![1, 3]).is_err());
        assert!(DyckPath::new(4, 2, vec![4]).is_err());
        assert!(DyckPath::new(4, 3, vec![2, 1, 1]).is_err());
    }
}
