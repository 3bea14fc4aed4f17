//! Homogeneous symmetric functions with `ℤ[q,t]` coefficients.

pub mod jacobi_trudi;
pub mod kostka;
pub mod laurent;
pub mod lr;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::qt::QTPoly;

pub use jacobi_trudi::{truncated_jacobi_trudi, JtTerm};
pub use laurent::{constant_term_inner, dual_rectangle_check, Laurent};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    Monomial,
    Homogeneous,
    Elementary,
    Schur,
}

impl Basis {
    fn letter(self) -> &'static str {
        match self {
            Basis::Monomial => "m",
            Basis::Homogeneous => "h",
            Basis::Elementary => "e",
            Basis::Schur => "s",
        }
    }
}

/// A homogeneous symmetric function in one of the four classical bases.
#[derive(Clone, PartialEq, Eq)]
pub struct SymFunc {
    basis: Basis,
    degree: usize,
    coeffs: BTreeMap<Partition, QTPoly>,
}

impl SymFunc {
    pub fn zero(basis: Basis, degree: usize) -> Self {
        SymFunc { basis, degree, coeffs: BTreeMap::new() }
    }

    /// The single basis element `b_λ`.
    pub fn basis_element(basis: Basis, lambda: Partition) -> Self {
        let degree = lambda.size();
        SymFunc { basis, degree, coeffs: BTreeMap::from([(lambda, QTPoly::one())]) }
    }

    pub fn schur(lambda: Partition) -> Self {
        Self::basis_element(Basis::Schur, lambda)
    }

    pub fn h(lambda: Partition) -> Self {
        Self::basis_element(Basis::Homogeneous, lambda)
    }

    pub fn e(lambda: Partition) -> Self {
        Self::basis_element(Basis::Elementary, lambda)
    }

    pub fn m(lambda: Partition) -> Self {
        Self::basis_element(Basis::Monomial, lambda)
    }

    /// `1` as a degree-zero function.
    pub fn one() -> Self {
        Self::schur(Partition::empty())
    }

    /// Builds from terms, summing repeats. Every partition must have size `degree`.
    pub fn from_terms<I>(basis: Basis, degree: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Partition, QTPoly)>,
    {
        let mut f = Self::zero(basis, degree);
        for (p, c) in terms {
            if p.size() != degree {
                return Err(Error::DegreeMismatch { left: p.size(), right: degree });
            }
            f.add_term(p, &c);
        }
        Ok(f)
    }

    pub(crate) fn add_term(&mut self, p: Partition, c: &QTPoly) {
        debug_assert_eq!(p.size(), self.degree);
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(p).or_default();
        *slot += c;
        if slot.is_zero() {
            self.coeffs.retain(|_, v| !v.is_zero());
        }
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, p: &Partition) -> QTPoly {
        self.coeffs.get(p).cloned().unwrap_or_default()
    }

    /// Terms in decreasing lexicographic partition order.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &QTPoly)> {
        self.coeffs.iter().rev()
    }

    pub fn support(&self) -> impl Iterator<Item = &Partition> {
        self.coeffs.keys()
    }

    pub fn map_coeffs(&self, f: impl Fn(&QTPoly) -> QTPoly) -> Self {
        let mut out = Self::zero(self.basis, self.degree);
        for (p, c) in &self.coeffs {
            out.add_term(p.clone(), &f(c));
        }
        out
    }

    pub fn scale(&self, c: &QTPoly) -> Self {
        self.map_coeffs(|x| x * c)
    }

    pub fn add(&self, other: &SymFunc) -> Result<Self> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch { left: self.degree, right: other.degree });
        }
        let (a, b) = if self.basis == other.basis {
            (self.clone(), other.clone())
        } else {
            (self.to_schur(), other.to_schur())
        };
        let mut out = a;
        for (p, c) in b.coeffs {
            out.add_term(p, &c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &SymFunc) -> Result<Self> {
        self.add(&other.map_coeffs(|c| -c))
    }

    /// Expansion in the Schur basis.
    pub fn to_schur(&self) -> SymFunc {
        let n = self.degree;
        match self.basis {
            Basis::Schur => self.clone(),
            Basis::Homogeneous | Basis::Elementary => {
                let kt = kostka::kostka_table(n);
                let mut out = SymFunc::zero(Basis::Schur, n);
                for (mu, c) in &self.coeffs {
                    for (lam, &kk) in &kt.by_content[mu] {
                        let shape = if self.basis == Basis::Elementary { lam.conjugate() } else { lam.clone() };
                        out.add_term(shape, &c.scale(kk as i128));
                    }
                }
                out
            }
            Basis::Monomial => {
                // peel off the lex-largest monomial repeatedly
                let kt = kostka::kostka_table(n);
                let mut rest = self.coeffs.clone();
                let mut out = SymFunc::zero(Basis::Schur, n);
                while let Some((lam, c)) = rest.iter().next_back().map(|(p, c)| (p.clone(), c.clone())) {
                    for (mu, &kk) in &kt.by_shape[&lam] {
                        let slot = rest.entry(mu.clone()).or_default();
                        *slot -= &c.scale(kk as i128);
                        if slot.is_zero() {
                            rest.remove(mu);
                        }
                    }
                    out.add_term(lam, &c);
                }
                out
            }
        }
    }

    /// Expansion in the monomial basis.
    pub fn to_monomial(&self) -> SymFunc {
        if self.basis == Basis::Monomial {
            return self.clone();
        }
        let s = self.to_schur();
        let kt = kostka::kostka_table(self.degree);
        let mut out = SymFunc::zero(Basis::Monomial, self.degree);
        for (lam, c) in &s.coeffs {
            for (mu, &kk) in &kt.by_shape[lam] {
                out.add_term(mu.clone(), &c.scale(kk as i128));
            }
        }
        out
    }

    /// Equality as symmetric functions, regardless of basis.
    pub fn same_as(&self, other: &SymFunc) -> bool {
        if self.is_zero() && other.is_zero() {
            return true;
        }
        self.degree == other.degree && self.to_schur() == other.to_schur()
    }

    /// Product, returned in the Schur basis.
    pub fn mul(&self, other: &SymFunc) -> SymFunc {
        let a = self.to_schur();
        let b = other.to_schur();
        let mut out = SymFunc::zero(Basis::Schur, self.degree + other.degree);
        for (l, c) in &a.coeffs {
            for (m, d) in &b.coeffs {
                let cd = c * d;
                for (nu, k) in lr::product(l, m) {
                    out.add_term(nu, &cd.scale(k as i128));
                }
            }
        }
        out
    }

    /// Longest Schur-support partition (0 for the zero function).
    pub fn max_schur_rows(&self) -> usize {
        self.to_schur().coeffs.keys().map(|p| p.len()).max().unwrap_or(0)
    }

    pub fn swap_qt(&self) -> SymFunc {
        self.map_coeffs(|c| c.swap_qt())
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(SymFuncJson::from(self)).expect("SymFunc serializes")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let j: SymFuncJson = serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        SymFunc::from_terms(j.basis, j.degree, j.terms.into_iter().map(|t| (t.partition, t.coeff)))
    }
}

/// Hall inner product.
pub fn hall_inner(f: &SymFunc, g: &SymFunc) -> Result<QTPoly> {
    if f.degree != g.degree {
        return Err(Error::DegreeMismatch { left: f.degree, right: g.degree });
    }
    let dual = |a: &SymFunc, b: &SymFunc| {
        let mut acc = QTPoly::zero();
        for (p, c) in &a.coeffs {
            if let Some(d) = b.coeffs.get(p) {
                acc += c * d;
            }
        }
        acc
    };
    Ok(match (f.basis, g.basis) {
        (Basis::Homogeneous, Basis::Monomial) | (Basis::Monomial, Basis::Homogeneous) => dual(f, g),
        (_, Basis::Homogeneous) => dual(&f.to_monomial(), g),
        (Basis::Homogeneous, _) => dual(f, &g.to_monomial()),
        _ => dual(&f.to_schur(), &g.to_schur()),
    })
}

/// `s_λ^⊥ f` in the Schur basis; the zero function when `|λ| > deg f`.
pub fn skew_schur(lambda: &Partition, f: &SymFunc) -> SymFunc {
    if lambda.size() > f.degree {
        return SymFunc::zero(Basis::Schur, 0);
    }
    let fs = f.to_schur();
    let mut out = SymFunc::zero(Basis::Schur, f.degree - lambda.size());
    for (nu, c) in &fs.coeffs {
        for (mu, &k) in lr::skew_expansion(nu, lambda).iter() {
            out.add_term(mu.clone(), &c.scale(k as i128));
        }
    }
    out
}

/// The involution `ω`, returned in the Schur basis.
pub fn omega(f: &SymFunc) -> SymFunc {
    let fs = f.to_schur();
    let mut out = SymFunc::zero(Basis::Schur, f.degree);
    for (p, c) in &fs.coeffs {
        out.add_term(p.conjugate(), c);
    }
    out
}

/// `e_n`.
pub fn e_n(n: usize) -> SymFunc {
    if n == 0 {
        SymFunc::one()
    } else {
        SymFunc::e(Partition::new(vec![n]).expect("single part"))
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    partition: Partition,
    coeff: QTPoly,
}

#[derive(Serialize, Deserialize)]
struct SymFuncJson {
    basis: Basis,
    degree: usize,
    terms: Vec<TermJson>,
}

impl From<&SymFunc> for SymFuncJson {
    fn from(f: &SymFunc) -> Self {
        SymFuncJson {
            basis: f.basis,
            degree: f.degree,
            terms: f.terms().map(|(p, c)| TermJson { partition: p.clone(), coeff: c.clone() }).collect(),
        }
    }
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let l = self.basis.letter();
        for (i, (p, c)) in self.terms().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if c.is_one() {
                write!(f, "{l}{p}")?;
            } else if c.len() == 1 && c.terms()[0].1 > 0 {
                write!(f, "{c}*{l}{p}")?;
            } else {
                write!(f, "({c})*{l}{p}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymFunc[{:?}; deg {}] {}", self.basis, self.degree, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::part;

    fn poly(terms: &[(u32, u32, i128)]) -> QTPoly {
        QTPoly::from_terms(terms.iter().map(|&(a, b, c)| ((a, b), c)))
    }

    #[test]
    fn h11_and_e3() {
        let h = SymFunc::h(part(&[1, 1])).to_schur();
        assert_eq!(h.coeff(&part(&[2])), QTPoly::one());
        assert_eq!(h.coeff(&part(&[1, 1])), QTPoly::one());
        assert_eq!(h.terms().count(), 2);
        let e = e_n(3).to_schur();
        assert_eq!(e, SymFunc::schur(part(&[1, 1, 1])));
    }

    #[test]
    fn monomial_roundtrip() {
        let s = SymFunc::schur(part(&[3, 2, 1]));
        let m = s.to_monomial();
        assert_eq!(m.to_schur(), s);
        assert_eq!(m.coeff(&part(&[1, 1, 1, 1, 1, 1])), QTPoly::constant(16));
    }

    #[test]
    fn inner_products() {
        let s21 = SymFunc::schur(part(&[2, 1]));
        let s3 = SymFunc::schur(part(&[3]));
        assert_eq!(hall_inner(&s21, &s21).unwrap(), QTPoly::one());
        assert_eq!(hall_inner(&s21, &s3).unwrap(), QTPoly::zero());
        let h21 = SymFunc::h(part(&[2, 1]));
        assert_eq!(hall_inner(&h21, &s21).unwrap(), QTPoly::one());
        assert_eq!(hall_inner(&s21, &h21).unwrap(), QTPoly::one());
        assert!(hall_inner(&s21, &SymFunc::schur(part(&[1]))).is_err());
    }

    #[test]
    fn skewing_small() {
        let s1 = SymFunc::schur(part(&[1]));
        let r = skew_schur(&part(&[1]), &s1);
        assert_eq!(r, SymFunc::one());
        assert!(skew_schur(&part(&[2]), &SymFunc::schur(part(&[1, 1]))).is_zero());
        assert!(skew_schur(&part(&[3]), &s1).is_zero());
    }

    #[test]
    fn omega_cases() {
        let s21 = SymFunc::schur(part(&[2, 1]));
        assert_eq!(omega(&s21), s21);
        assert!(omega(&SymFunc::h(part(&[3]))).same_as(&SymFunc::e(part(&[3]))));
    }

    #[test]
    fn json_form() {
        let f = SymFunc::from_terms(
            Basis::Schur,
            2,
            [(part(&[1, 1]), poly(&[(0, 1, 1), (1, 0, 1)])), (part(&[2]), QTPoly::one())],
        )
        .unwrap();
        let s = f.to_json().to_string();
        assert_eq!(
            s,
            r#"{"basis":"schur","degree":2,"terms":[{"partition":[2],"coeff":[[0,0,1]]},{"partition":[1,1],"coeff":[[0,1,1],[1,0,1]]}]}"#
        );
        assert_eq!(SymFunc::from_json(&f.to_json()).unwrap(), f);
        assert_eq!(f.to_string(), "s(2) + (q + t)*s(1,1)");
    }
}
