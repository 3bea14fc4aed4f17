//! Signed `h`-expansion of the rectangle Schur function `s_{(k−1)^{m}}`,
//! with every `h_j` for `j ≥ k+1` set to zero.

use serde::Serialize;

use crate::error::{Error, Result};

/// One signed term `±h_{α̃_1} ⋯ h_{α̃_m}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct JtTerm {
    pub sign: i8,
    /// Subscripts by column of the determinant `det(h_{k−1−i+j})`.
    pub composition: Vec<usize>,
    /// The same term in the dual determinant `det(h_{i−j+1})`: `α_j = k − α̃_j`.
    pub dual: Vec<usize>,
}

impl JtTerm {
    pub fn zeros(&self) -> usize {
        self.dual.iter().filter(|&&a| a == 0).count()
    }
}

/// All nonvanishing terms of the truncated determinant, for an `m × m`
/// rectangle with rows of length `k − 1`.
///
/// Ordered by the number of zeros in the dual composition, then decreasing
/// lexicographically.
pub fn truncated_jacobi_trudi(m: usize, k: usize) -> Result<Vec<JtTerm>> {
    if m == 0 || k == 0 {
        return Err(Error::InvalidParameters(format!("need n-k >= 1 and k >= 1, got {m}, {k}")));
    }
    // row i picks column sigma(i); entry index k-1-i+sigma(i) with 0-based i, j
    let mut out = Vec::new();
    let mut used = vec![false; m];
    let mut sigma = vec![0usize; m];
    fn rec(i: usize, m: usize, k: usize, used: &mut [bool], sigma: &mut [usize], out: &mut Vec<JtTerm>) {
        if i == m {
            let mut comp = vec![0; m];
            for (row, &col) in sigma.iter().enumerate() {
                comp[col] = k - 1 + col - row;
            }
            let inversions = (0..m).flat_map(|a| (a + 1..m).map(move |b| (a, b))).filter(|&(a, b)| sigma[a] > sigma[b]).count();
            let sign = if inversions % 2 == 0 { 1 } else { -1 };
            let dual = comp.iter().map(|&c| k - c).collect();
            out.push(JtTerm { sign, composition: comp, dual });
            return;
        }
        for j in 0..m {
            if used[j] || k - 1 + j < i {
                continue;
            }
            if k - 1 + j - i > k {
                continue;
            }
            used[j] = true;
            sigma[i] = j;
            rec(i + 1, m, k, used, sigma, out);
            used[j] = false;
        }
    }
    rec(0, m, k, &mut used, &mut sigma, &mut out);
    out.sort_by(|a, b| a.zeros().cmp(&b.zeros()).then(b.dual.cmp(&a.dual)));
    Ok(out)
}
