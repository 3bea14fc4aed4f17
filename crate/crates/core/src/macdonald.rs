//! The modified Macdonald basis `H̃_μ` at small degree and the `Δ′_{e_j}`
//! operators that act diagonally on it.
//!
//! `H̃_μ` is built from the fillings formula
//! `Σ_σ q^{inv(σ)} t^{maj(σ)} x^σ` over all fillings of the French diagram
//! of `μ`. For `n ≤ 4` the result is checked against an exact solve of the
//! two plethystic triangularity conditions plus the `s_(n)` normalization at
//! several rational points.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partition::{partitions, Partition};
use crate::qt::QTPoly;
use crate::qtrat::QTRat;
use crate::symfunc::{Basis, SymFunc};

/// Largest degree accepted by [`macdonald_basis`] and [`delta_prime_e`].
pub const DESK_BOUND: usize = 6;

/// Degrees at which the fillings formula is cross-checked against the axioms.
const AXIOM_CHECK_BOUND: usize = 4;

#[derive(Debug)]
pub struct MacdonaldBasis {
    n: usize,
    parts: Vec<Partition>,
    monomial: Vec<SymFunc>,
    schur: Vec<SymFunc>,
}

impl MacdonaldBasis {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Partitions of `n` in decreasing lexicographic order.
    pub fn partitions(&self) -> &[Partition] {
        &self.parts
    }

    fn index(&self, mu: &Partition) -> Option<usize> {
        self.parts.iter().position(|p| p == mu)
    }

    /// `H̃_μ` in the monomial basis.
    pub fn monomial(&self, mu: &Partition) -> Option<&SymFunc> {
        self.index(mu).map(|i| &self.monomial[i])
    }

    /// `H̃_μ` in the Schur basis.
    pub fn schur(&self, mu: &Partition) -> Option<&SymFunc> {
        self.index(mu).map(|i| &self.schur[i])
    }

    /// Monomial coefficients of `H̃_μ` as rational functions.
    pub fn monomial_rat(&self, mu: &Partition) -> Option<Vec<(Partition, QTRat)>> {
        let f = self.monomial(mu)?;
        Some(self.parts.iter().map(|l| (l.clone(), QTRat::from(f.coeff(l)))).collect())
    }

    /// Row `μ`, column `λ`: the Schur coefficient `⟨H̃_μ, s_λ⟩`.
    pub fn schur_matrix(&self) -> Vec<Vec<QTPoly>> {
        self.schur.iter().map(|h| self.parts.iter().map(|l| h.coeff(l)).collect()).collect()
    }
}

fn cache() -> &'static Mutex<HashMap<usize, Arc<MacdonaldBasis>>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<MacdonaldBasis>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The basis `{H̃_μ : μ ⊢ n}`, computed once per degree and shared.
pub fn macdonald_basis(n: usize) -> Result<Arc<MacdonaldBasis>> {
    if n > DESK_BOUND {
        return Err(Error::SizeGuard { what: "Macdonald degree", value: n, cap: DESK_BOUND });
    }
    if let Some(b) = cache().lock().expect("basis cache poisoned").get(&n) {
        return Ok(Arc::clone(b));
    }
    let parts = partitions(n);
    let monomial: Vec<SymFunc> = parts.iter().map(fillings_formula).collect();
    let schur = monomial.iter().map(SymFunc::to_schur).collect();
    let basis = MacdonaldBasis { n, parts, monomial, schur };
    if n <= AXIOM_CHECK_BOUND {
        check_against_axioms(&basis)?;
    }
    let basis = Arc::new(basis);
    cache().lock().expect("basis cache poisoned").entry(n).or_insert_with(|| Arc::clone(&basis));
    Ok(basis)
}

/// Cells of `μ` in reading order: rows from the top down, each left to right.
/// Entries are `(row, col)` with row 0 at the bottom.
fn reading_cells(mu: &Partition) -> Vec<(usize, usize)> {
    (0..mu.len()).rev().flat_map(|r| (0..mu.part(r)).map(move |c| (r, c))).collect()
}

struct FillingStats {
    /// Attacking pairs `(i, j)`, `i` before `j` in reading order.
    attacks: Vec<(usize, usize)>,
    /// `(upper, lower, leg + 1, arm)` for each vertically adjacent pair.
    verticals: Vec<(usize, usize, u32, u32)>,
}

fn filling_stats(mu: &Partition) -> FillingStats {
    let cells = reading_cells(mu);
    let conj = mu.conjugate();
    let mut attacks = Vec::new();
    let mut verticals = Vec::new();
    for (i, &(r1, c1)) in cells.iter().enumerate() {
        for (j, &(r2, c2)) in cells.iter().enumerate().skip(i + 1) {
            if r1 == r2 || (r1 == r2 + 1 && c1 > c2) {
                attacks.push((i, j));
            }
            if r1 == r2 + 1 && c1 == c2 {
                let leg = conj.part(c1) - r1 - 1;
                let arm = mu.part(r1) - c1 - 1;
                verticals.push((i, j, leg as u32 + 1, arm as u32));
            }
        }
    }
    FillingStats { attacks, verticals }
}

fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).expect("a larger element exists");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

fn fillings_formula(mu: &Partition) -> SymFunc {
    let n = mu.size();
    let stats = filling_stats(mu);
    let terms: Vec<(Partition, QTPoly)> = partitions(n)
        .into_iter()
        .map(|lam| {
            let mut word: Vec<usize> =
                lam.parts().iter().enumerate().flat_map(|(v, &c)| std::iter::repeat_n(v, c)).collect();
            let mut counts: HashMap<(u32, u32), i128> = HashMap::new();
            loop {
                let mut inv = stats.attacks.iter().filter(|&&(i, j)| word[i] > word[j]).count() as i64;
                let mut maj = 0u32;
                for &(u, v, leg1, arm) in &stats.verticals {
                    if word[u] > word[v] {
                        maj += leg1;
                        inv -= arm as i64;
                    }
                }
                let inv = u32::try_from(inv).expect("inv of a filling is non-negative");
                *counts.entry((inv, maj)).or_insert(0) += 1;
                if !next_permutation(&mut word) {
                    break;
                }
            }
            (lam, QTPoly::from_terms(counts))
        })
        .collect();
    SymFunc::from_terms(Basis::Monomial, n, terms).expect("partition degrees match")
}

fn rat(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

/// `χ[ν][ρ]`: the Schur coefficient of `s_ν` in `p_ρ`.
fn characters(parts: &[Partition]) -> Vec<Vec<BigRational>> {
    fn assignments(rho: &[usize], room: &mut [usize]) -> i128 {
        let Some((&first, rest)) = rho.split_first() else {
            return room.iter().all(|&r| r == 0) as i128;
        };
        let mut total = 0;
        for r in 0..room.len() {
            if room[r] >= first {
                room[r] -= first;
                total += assignments(rest, room);
                room[r] += first;
            }
        }
        total
    }
    let n = parts.first().map_or(0, Partition::size);
    let mut chi = vec![vec![BigRational::zero(); parts.len()]; parts.len()];
    for (r, rho) in parts.iter().enumerate() {
        let terms = parts.iter().map(|lam| {
            let mut room = lam.parts().to_vec();
            (lam.clone(), QTPoly::constant(assignments(rho.parts(), &mut room)))
        });
        let p = SymFunc::from_terms(Basis::Monomial, n, terms).expect("partition degrees match").to_schur();
        for (v, nu) in parts.iter().enumerate() {
            chi[v][r] = rat(p.coeff(nu).coeff(0, 0) as i64);
        }
    }
    chi
}

/// `z_ρ = ∏ i^{m_i} m_i!`.
fn z(rho: &Partition) -> BigRational {
    let mut acc: i64 = 1;
    for (i, &m) in rho.multiplicities().iter().enumerate() {
        for j in 1..=m {
            acc *= (i as i64 + 1) * j as i64;
        }
    }
    rat(acc)
}

/// Schur-to-Schur matrix of `f ↦ f[X(1 − x)]`. Row `ν`, column `λ`.
fn plethysm_matrix(parts: &[Partition], chi: &[Vec<BigRational>], x: &BigRational) -> Vec<Vec<BigRational>> {
    let weights: Vec<BigRational> = parts
        .iter()
        .map(|rho| {
            let mut w = BigRational::one() / z(rho);
            for &r in rho.parts() {
                w *= BigRational::one() - num_traits::pow(x.clone(), r);
            }
            w
        })
        .collect();
    let k = parts.len();
    (0..k)
        .map(|nu| {
            (0..k)
                .map(|lam| (0..k).map(|r| &chi[nu][r] * &chi[lam][r] * &weights[r]).sum())
                .collect()
        })
        .collect()
}

/// Unique solution of an (over)determined system, or `None`.
fn solve_unique(mut rows: Vec<Vec<BigRational>>, mut rhs: Vec<BigRational>, unknowns: usize) -> Option<Vec<BigRational>> {
    for c in 0..unknowns {
        let p = (c..rows.len()).find(|&i| !rows[i][c].is_zero())?;
        rows.swap(c, p);
        rhs.swap(c, p);
        let inv = BigRational::one() / &rows[c][c];
        let pivot_row: Vec<BigRational> = rows[c].iter().map(|x| x * &inv).collect();
        let pivot_rhs = &rhs[c] * &inv;
        for (row, b) in rows.iter_mut().zip(rhs.iter_mut()) {
            let f = row[c].clone();
            if f.is_zero() {
                continue;
            }
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                *x -= &f * y;
            }
            *b -= &f * &pivot_rhs;
        }
        rows[c] = pivot_row;
        rhs[c] = pivot_rhs;
    }
    if rhs[unknowns..].iter().any(|x| !x.is_zero()) {
        return None;
    }
    rhs.truncate(unknowns);
    Some(rhs)
}

/// Schur coordinates of every `H̃_μ` at a numeric point, from the axioms alone.
pub fn axioms_solve(n: usize, q: &BigRational, t: &BigRational) -> Result<Vec<Vec<BigRational>>> {
    let parts = partitions(n);
    let chi = characters(&parts);
    let mq = plethysm_matrix(&parts, &chi, q);
    let mt = plethysm_matrix(&parts, &chi, t);
    let k = parts.len();
    parts
        .iter()
        .map(|mu| {
            let mu_c = mu.conjugate();
            let mut rows = Vec::new();
            let mut rhs = Vec::new();
            for (v, nu) in parts.iter().enumerate() {
                if !nu.dominates(mu) {
                    rows.push(mq[v].clone());
                    rhs.push(BigRational::zero());
                }
                if !nu.dominates(&mu_c) {
                    rows.push(mt[v].clone());
                    rhs.push(BigRational::zero());
                }
            }
            let mut norm = vec![BigRational::zero(); k];
            norm[0] = BigRational::one();
            rows.push(norm);
            rhs.push(BigRational::one());
            solve_unique(rows, rhs, k)
                .ok_or_else(|| Error::Internal(format!("axioms do not determine H̃_{mu} at q={q}, t={t}")))
        })
        .collect()
}

const AXIOM_POINTS: [(i64, i64, i64, i64); 3] = [(2, 1, 3, 1), (5, 1, 7, 1), (1, 3, 11, 5)];

fn check_against_axioms(basis: &MacdonaldBasis) -> Result<()> {
    for (qn, qd, tn, td) in AXIOM_POINTS {
        let q = BigRational::new(BigInt::from(qn), BigInt::from(qd));
        let t = BigRational::new(BigInt::from(tn), BigInt::from(td));
        let solved = axioms_solve(basis.n, &q, &t)?;
        for (mu, (h, row)) in basis.parts.iter().zip(basis.schur.iter().zip(&solved)) {
            for (lam, want) in basis.parts.iter().zip(row) {
                if &h.coeff(lam).eval(&q, &t) != want {
                    return Err(Error::Internal(format!(
                        "fillings formula and axioms disagree on H̃_{mu} at s_{lam}, q={q}, t={t}"
                    )));
                }
            }
        }
    }
    Ok(())
}

/// The multiset `{q^{a′} t^{ℓ′} : □ ∈ λ, □ ≠ (0,0)}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BPrime {
    /// `(coarm, coleg)` exponent pairs.
    pub weights: Vec<(u32, u32)>,
}

impl BPrime {
    pub fn new(lambda: &Partition) -> Self {
        let weights = lambda.cells().filter(|&c| c != (0, 0)).map(|(r, c)| (c as u32, r as u32)).collect();
        BPrime { weights }
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    /// `e_j` evaluated on the multiset.
    pub fn e(&self, j: usize) -> QTPoly {
        let mut e = vec![QTPoly::one()];
        for &(a, b) in &self.weights {
            e.push(QTPoly::zero());
            for i in (1..e.len()).rev() {
                let add = e[i - 1].shift(a, b);
                e[i] += add;
            }
        }
        e.get(j).cloned().unwrap_or_else(QTPoly::zero)
    }
}

/// `e_j[B′_λ]`, the eigenvalue of `Δ′_{e_j}` on `H̃_λ`.
pub fn eigenvalue_delta_prime(j: usize, lambda: &Partition) -> QTPoly {
    BPrime::new(lambda).e(j)
}

/// Fraction-free solve of `A x = b` over ℤ[q,t]: returns `(D, N)` with
/// `x = N / D`.
fn bareiss_solve(mut a: Vec<Vec<QTPoly>>, mut b: Vec<QTPoly>) -> Result<(QTPoly, Vec<QTPoly>)> {
    let n = a.len();
    let exact = |x: &QTPoly, d: &QTPoly| {
        x.div_exact(d).ok_or_else(|| Error::Internal("inexact division in fraction-free elimination".into()))
    };
    let mut prev = QTPoly::one();
    for k in 0..n {
        let p = (k..n)
            .find(|&i| !a[i][k].is_zero())
            .ok_or_else(|| Error::Internal("Macdonald basis matrix is singular".into()))?;
        a.swap(k, p);
        b.swap(k, p);
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = exact(&v, &prev)?;
            }
            let v = &(&b[i] * &a[k][k]) - &(&a[i][k] * &b[k]);
            b[i] = exact(&v, &prev)?;
            a[i][k] = QTPoly::zero();
        }
        prev = a[k][k].clone();
    }
    let d = prev;
    let mut num = vec![QTPoly::zero(); n];
    for i in (0..n).rev() {
        let mut v = &d * &b[i];
        for j in i + 1..n {
            v -= &(&a[i][j] * &num[j]);
        }
        num[i] = exact(&v, &a[i][i])?;
    }
    Ok((d, num))
}

/// Common denominator and numerators of `f` in the `H̃` basis.
fn expand_fraction_free(f: &SymFunc) -> Result<(Arc<MacdonaldBasis>, QTPoly, Vec<QTPoly>)> {
    let basis = macdonald_basis(f.degree())?;
    let fs = f.to_schur();
    let h = basis.schur_matrix();
    let k = basis.parts.len();
    // rows indexed by λ, columns by μ
    let a: Vec<Vec<QTPoly>> = (0..k).map(|l| (0..k).map(|m| h[m][l].clone()).collect()).collect();
    let b: Vec<QTPoly> = basis.parts.iter().map(|l| fs.coeff(l)).collect();
    let (d, num) = bareiss_solve(a, b)?;
    Ok((basis, d, num))
}

/// Coefficients of `f` in the `H̃` basis.
pub fn expand_in_macdonald(f: &SymFunc) -> Result<Vec<(Partition, QTRat)>> {
    let (basis, d, num) = expand_fraction_free(f)?;
    basis.parts.iter().zip(num).map(|(mu, x)| Ok((mu.clone(), QTRat::new(x, d.clone())?))).collect()
}

/// `Δ′_{e_j} f` in the Schur basis with rational coefficients.
pub fn delta_prime_e_rational(j: usize, f: &SymFunc) -> Result<Vec<(Partition, QTRat)>> {
    let (basis, d, vals) = delta_numerators(j, f)?;
    basis.parts.iter().zip(vals).map(|(l, v)| Ok((l.clone(), QTRat::new(v, d.clone())?))).collect()
}

fn delta_numerators(j: usize, f: &SymFunc) -> Result<(Arc<MacdonaldBasis>, QTPoly, Vec<QTPoly>)> {
    let (basis, d, num) = expand_fraction_free(f)?;
    let h = basis.schur_matrix();
    let scaled: Vec<QTPoly> =
        basis.parts.iter().zip(&num).map(|(mu, x)| &eigenvalue_delta_prime(j, mu) * x).collect();
    let vals = (0..basis.parts.len())
        .map(|l| scaled.iter().zip(&h).map(|(x, row)| x * &row[l]).sum())
        .collect();
    Ok((basis, d, vals))
}

/// `Δ′_{e_j} f` in the Schur basis. Fails with [`Error::Internal`] if the
/// result does not have polynomial coefficients.
pub fn delta_prime_e(j: usize, f: &SymFunc) -> Result<SymFunc> {
    if f.degree() == 0 {
        return Ok(if j == 0 { f.clone() } else { SymFunc::zero(Basis::Schur, 0) });
    }
    let (basis, d, vals) = delta_numerators(j, f)?;
    let terms = basis
        .parts
        .iter()
        .zip(vals)
        .map(|(l, v)| {
            v.div_exact(&d)
                .map(|c| (l.clone(), c))
                .ok_or_else(|| Error::Internal(format!("denominator does not clear at s_{l} in Δ′_e{j}")))
        })
        .collect::<Result<Vec<_>>>()?;
    SymFunc::from_terms(Basis::Schur, basis.n, terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::part;
    use crate::symfunc::e_n;

    fn poly(terms: &[((u32, u32), i128)]) -> QTPoly {
        QTPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn degree_one_and_two() {
        let b1 = macdonald_basis(1).unwrap();
        assert_eq!(b1.monomial(&part(&[1])).unwrap(), &SymFunc::m(part(&[1])));
        let b2 = macdonald_basis(2).unwrap();
        let h2 = b2.monomial(&part(&[2])).unwrap();
        assert_eq!(h2.coeff(&part(&[2])), QTPoly::one());
        assert_eq!(h2.coeff(&part(&[1, 1])), poly(&[((0, 0), 1), ((1, 0), 1)]));
        let h11 = b2.monomial(&part(&[1, 1])).unwrap();
        assert_eq!(h11.coeff(&part(&[2])), QTPoly::one());
        assert_eq!(h11.coeff(&part(&[1, 1])), poly(&[((0, 0), 1), ((0, 1), 1)]));
    }

    #[test]
    fn three_is_consistent_with_the_axioms() {
        let b = macdonald_basis(3).unwrap();
        let h21 = b.schur(&part(&[2, 1])).unwrap();
        assert_eq!(h21.coeff(&part(&[3])), QTPoly::one());
        assert_eq!(h21.coeff(&part(&[2, 1])), &QTPoly::q() + &QTPoly::t());
        assert_eq!(h21.coeff(&part(&[1, 1, 1])), poly(&[((1, 1), 1)]));
    }

    #[test]
    fn desk_bound_is_enforced() {
        assert!(matches!(macdonald_basis(DESK_BOUND + 1), Err(Error::SizeGuard { .. })));
    }

    #[test]
    fn bprime_eigenvalues() {
        let l = part(&[2, 1]);
        assert_eq!(BPrime::new(&l).len(), 2);
        assert_eq!(eigenvalue_delta_prime(0, &l), QTPoly::one());
        assert_eq!(eigenvalue_delta_prime(1, &l), &QTPoly::q() + &QTPoly::t());
        assert!(eigenvalue_delta_prime(3, &l).is_zero());
        for lam in partitions(5) {
            let top = eigenvalue_delta_prime(lam.size() - 1, &lam);
            assert_eq!(top, QTPoly::monomial(1, lam.conjugate().n_stat() as u32, lam.n_stat() as u32));
        }
    }

    #[test]
    fn delta_e1_on_e3() {
        let r = delta_prime_e(1, &e_n(3)).unwrap();
        assert_eq!(r.coeff(&part(&[3])), QTPoly::zero());
        assert_eq!(r.coeff(&part(&[2, 1])), poly(&[((0, 0), 1), ((1, 0), 1), ((0, 1), 1)]));
        assert_eq!(
            r.coeff(&part(&[1, 1, 1])),
            poly(&[((1, 0), 1), ((0, 1), 1), ((2, 0), 1), ((1, 1), 1), ((0, 2), 1)])
        );
    }

    #[test]
    fn delta_e0_is_identity() {
        for n in 1..=4 {
            assert!(delta_prime_e(0, &e_n(n)).unwrap().same_as(&e_n(n)));
        }
    }

    #[test]
    fn expansion_recombines() {
        let f = SymFunc::schur(part(&[2, 2]));
        let coeffs = expand_in_macdonald(&f).unwrap();
        let b = macdonald_basis(4).unwrap();
        for lam in b.partitions() {
            let mut acc = QTRat::zero();
            for (mu, c) in &coeffs {
                acc = &acc + &(c * &QTRat::from(b.schur(mu).unwrap().coeff(lam)));
            }
            assert_eq!(acc, QTRat::from(f.coeff(lam)));
        }
        let r = delta_prime_e_rational(1, &e_n(3)).unwrap();
        assert!(r.iter().all(|(_, c)| c.as_poly().is_some()));
    }

    #[test]
    fn axiom_check_rejects_a_wrong_basis() {
        let good = macdonald_basis(3).unwrap();
        let swapped = MacdonaldBasis {
            n: 3,
            parts: good.parts.clone(),
            monomial: good.monomial.iter().map(SymFunc::swap_qt).collect(),
            schur: good.schur.iter().map(SymFunc::swap_qt).collect(),
        };
        assert!(matches!(check_against_axioms(&swapped), Err(Error::Internal(_))));
    }

    #[test]
    fn next_permutation_walks_multiset_orders() {
        let mut v = vec![0, 0, 1];
        let mut seen = vec![v.clone()];
        while next_permutation(&mut v) {
            seen.push(v.clone());
        }
        assert_eq!(seen, vec![vec![0, 0, 1], vec![0, 1, 0], vec![1, 0, 0]]);
    }
}
