//! Laurent polynomials in finitely many variables and the k-variable
//! constant-term form of the Hall inner product.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::qt::QTPoly;

use super::SymFunc;

/// A Laurent polynomial in `nvars` variables with `ℤ[q,t]` coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Laurent {
    nvars: usize,
    terms: BTreeMap<Vec<i32>, QTPoly>,
}

impl Laurent {
    pub fn zero(nvars: usize) -> Self {
        Laurent { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::monomial(vec![0; nvars], QTPoly::one())
    }

    pub fn monomial(exps: Vec<i32>, c: QTPoly) -> Self {
        let mut l = Self::zero(exps.len());
        l.add_term(exps, &c);
        l
    }

    fn add_term(&mut self, e: Vec<i32>, c: &QTPoly) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e.clone()).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i32>, &QTPoly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &[i32]) -> QTPoly {
        self.terms.get(e).cloned().unwrap_or_default()
    }

    /// `f(x_1, …, x_k)` (or `f(x_1^{-1}, …)` when `inverted`).
    pub fn from_symfunc(f: &SymFunc, nvars: usize, inverted: bool) -> Self {
        let m = f.to_monomial();
        let mut out = Self::zero(nvars);
        for (lam, c) in m.terms() {
            if lam.len() > nvars {
                continue;
            }
            let mut padded: Vec<i32> = lam.parts().iter().map(|&p| p as i32).collect();
            padded.resize(nvars, 0);
            if inverted {
                padded.iter_mut().for_each(|x| *x = -*x);
            }
            for perm in distinct_permutations(&padded) {
                out.add_term(perm, c);
            }
        }
        out
    }

    pub fn mul(&self, other: &Laurent) -> Laurent {
        assert_eq!(self.nvars, other.nvars);
        let mut out = Self::zero(self.nvars);
        for (a, c) in &self.terms {
            for (b, d) in &other.terms {
                let e: Vec<i32> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                out.add_term(e, &(c * d));
            }
        }
        out
    }

    pub fn constant_term(&self) -> QTPoly {
        self.coeff(&vec![0; self.nvars])
    }

    /// Constant term of `self · other` without forming the product.
    pub fn constant_term_of_product(&self, other: &Laurent) -> QTPoly {
        let mut acc = QTPoly::zero();
        for (a, c) in &self.terms {
            let neg: Vec<i32> = a.iter().map(|x| -x).collect();
            if let Some(d) = other.terms.get(&neg) {
                acc += c * d;
            }
        }
        acc
    }

    /// `∏_{i≠j} (1 − x_i/x_j)`.
    pub fn weyl_density(nvars: usize) -> Laurent {
        let mut acc = Self::one(nvars);
        for i in 0..nvars {
            for j in 0..nvars {
                if i == j {
                    continue;
                }
                let mut e = vec![0; nvars];
                e[i] = 1;
                e[j] = -1;
                let mut factor = Self::one(nvars);
                factor.add_term(e, &QTPoly::constant(-1));
                acc = acc.mul(&factor);
            }
        }
        acc
    }
}

/// All distinct rearrangements of `v`, in lexicographic order.
pub fn distinct_permutations(v: &[i32]) -> Vec<Vec<i32>> {
    let mut cur = v.to_vec();
    cur.sort_unstable();
    let mut out = vec![cur.clone()];
    // next_permutation loop
    loop {
        let n = cur.len();
        if n < 2 {
            break;
        }
        let mut i = n - 1;
        while i > 0 && cur[i - 1] >= cur[i] {
            i -= 1;
        }
        if i == 0 {
            break;
        }
        let mut j = n - 1;
        while cur[j] <= cur[i - 1] {
            j -= 1;
        }
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
    out
}

fn check_rows(f: &SymFunc, k: usize) -> Result<()> {
    let s = f.to_schur();
    if let Some(p) = s.support().find(|p| p.len() > k) {
        return Err(Error::TooManyRows { partition: p.to_string(), k });
    }
    Ok(())
}

/// The k-variable Hall pairing as a constant term,
/// `(1/k!) ⟨x^0⟩ f(x^{-1}) g(x) ∏_{i≠j}(1 − x_i/x_j)`.
///
/// Rejects inputs whose Schur support has a partition of length `> k`.
pub fn constant_term_inner(f: &SymFunc, g: &SymFunc, k: usize) -> Result<QTPoly> {
    if f.degree() != g.degree() {
        return Err(Error::DegreeMismatch { left: f.degree(), right: g.degree() });
    }
    if k == 0 {
        return Err(Error::InvalidParameters("constant term needs at least one variable".into()));
    }
    check_rows(f, k)?;
    check_rows(g, k)?;
    let fi = Laurent::from_symfunc(f, k, true).mul(&Laurent::weyl_density(k));
    let gx = Laurent::from_symfunc(g, k, false);
    let ct = fi.constant_term_of_product(&gx);
    let fact: i128 = (1..=k as i128).product();
    ct.div_exact(&QTPoly::constant(fact))
        .ok_or_else(|| Error::Internal(format!("constant term {ct} not divisible by {k}!")))
}

/// Checks `s_{(n−k)^{k−1}}(x^{-1}) · (x_1⋯x_k)^{n−k} = h_{n−k}(x_1, …, x_k)`.
pub fn dual_rectangle_check(n: usize, k: usize) -> Result<bool> {
    if k == 0 || k > n {
        return Err(Error::InvalidParameters(format!("need 1 <= k <= n, got n={n}, k={k}")));
    }
    let m = n - k;
    let rect = Partition::rectangle(m, k - 1);
    let lhs = Laurent::from_symfunc(&SymFunc::schur(rect), k, true)
        .mul(&Laurent::monomial(vec![m as i32; k], QTPoly::one()));
    let h = if m == 0 { SymFunc::one() } else { SymFunc::h(Partition::new(vec![m]).expect("single part")) };
    let rhs = Laurent::from_symfunc(&h, k, false);
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::part;

    #[test]
    fn naive_constant_term_double_counts() {
        let s1 = SymFunc::schur(part(&[1]));
        let naive = Laurent::from_symfunc(&s1, 2, true).constant_term_of_product(&Laurent::from_symfunc(&s1, 2, false));
        assert_eq!(naive, QTPoly::constant(2));
        assert_eq!(constant_term_inner(&s1, &s1, 2).unwrap(), QTPoly::one());
    }

    #[test]
    fn examples() {
        let s2 = SymFunc::schur(part(&[2]));
        let s11 = SymFunc::schur(part(&[1, 1]));
        let s21 = SymFunc::schur(part(&[2, 1]));
        assert_eq!(constant_term_inner(&s2, &s11, 2).unwrap(), QTPoly::zero());
        assert_eq!(constant_term_inner(&s21, &s21, 2).unwrap(), QTPoly::one());
        assert!(matches!(
            constant_term_inner(&SymFunc::schur(part(&[1, 1, 1])), &s21, 2),
            Err(Error::TooManyRows { .. })
        ));
    }

    #[test]
    fn dual_rectangles() {
        assert!(dual_rectangle_check(3, 2).unwrap());
        assert!(dual_rectangle_check(5, 3).unwrap());
        for n in 1..6 {
            assert!(dual_rectangle_check(n, 1).unwrap());
        }
    }

    #[test]
    fn perms() {
        assert_eq!(distinct_permutations(&[1, 0, 0]).len(), 3);
        assert_eq!(distinct_permutations(&[2, 1, 0]).len(), 6);
    }
}
