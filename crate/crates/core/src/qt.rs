//! Sparse polynomials in `q` and `t` with exact integer coefficients.
//!
//! Every generating function in the crate accumulates into [`QTPoly`]. Terms
//! are kept sorted by `(q-exponent, t-exponent)` with no zero coefficients,
//! so structural equality is polynomial equality.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Integer coefficient type. All arithmetic on it is checked.
pub type Coeff = i128;

/// A monomial exponent pair `(q-exponent, t-exponent)`.
pub type Exp = (u32, u32);

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QTPoly {
    terms: Vec<(Exp, Coeff)>,
}

#[inline]
fn add_c(a: Coeff, b: Coeff) -> Coeff {
    a.checked_add(b).expect("QTPoly coefficient overflow in addition")
}

#[inline]
fn mul_c(a: Coeff, b: Coeff) -> Coeff {
    a.checked_mul(b).expect("QTPoly coefficient overflow in multiplication")
}

impl QTPoly {
    pub fn zero() -> Self {
        QTPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: Coeff) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn monomial(c: Coeff, qexp: u32, texp: u32) -> Self {
        if c == 0 {
            Self::zero()
        } else {
            QTPoly { terms: vec![((qexp, texp), c)] }
        }
    }

    pub fn q() -> Self {
        Self::monomial(1, 1, 0)
    }

    pub fn t() -> Self {
        Self::monomial(1, 0, 1)
    }

    /// `q^a`.
    pub fn q_pow(a: u32) -> Self {
        Self::monomial(1, a, 0)
    }

    /// Builds a polynomial from arbitrary (possibly repeated, possibly zero) terms.
    pub fn from_terms<I: IntoIterator<Item = (Exp, Coeff)>>(it: I) -> Self {
        let mut v: Vec<(Exp, Coeff)> = it.into_iter().collect();
        v.sort_unstable_by_key(|&(e, _)| e);
        let mut out: Vec<(Exp, Coeff)> = Vec::with_capacity(v.len());
        for (e, c) in v {
            match out.last_mut() {
                Some((le, lc)) if *le == e => *lc = add_c(*lc, c),
                _ => out.push((e, c)),
            }
        }
        out.retain(|&(_, c)| c != 0);
        QTPoly { terms: out }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0] == ((0, 0), 1)
    }

    /// Terms in increasing `(qexp, texp)` order.
    pub fn terms(&self) -> &[(Exp, Coeff)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, qexp: u32, texp: u32) -> Coeff {
        match self.terms.binary_search_by_key(&(qexp, texp), |&(e, _)| e) {
            Ok(i) => self.terms[i].1,
            Err(_) => 0,
        }
    }

    /// Lex-leading term with `q` dominant.
    pub fn leading(&self) -> Option<(Exp, Coeff)> {
        self.terms.last().copied()
    }

    /// `Some((qexp, texp, coeff))` if the polynomial is a single term.
    pub fn as_monomial(&self) -> Option<(u32, u32, Coeff)> {
        match self.terms.as_slice() {
            [((a, b), c)] => Some((*a, *b, *c)),
            _ => None,
        }
    }

    pub fn q_degree(&self) -> Option<u32> {
        self.terms.iter().map(|&((a, _), _)| a).max()
    }

    pub fn t_degree(&self) -> Option<u32> {
        self.terms.iter().map(|&((_, b), _)| b).max()
    }

    pub fn scale(&self, c: Coeff) -> Self {
        if c == 0 {
            return Self::zero();
        }
        QTPoly { terms: self.terms.iter().map(|&(e, x)| (e, mul_c(x, c))).collect() }
    }

    /// Multiplies by the monomial `q^a t^b`.
    pub fn shift(&self, a: u32, b: u32) -> Self {
        QTPoly { terms: self.terms.iter().map(|&((x, y), c)| ((x + a, y + b), c)).collect() }
    }

    pub fn swap_qt(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|&((a, b), c)| ((b, a), c)))
    }

    /// Substitutes `t = 1`.
    pub fn at_t_one(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|&((a, _), c)| ((a, 0), c)))
    }

    /// Substitutes `q = 1`.
    pub fn at_q_one(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|&((_, b), c)| ((0, b), c)))
    }

    /// Value at `q = t = 1`.
    pub fn sum_coeffs(&self) -> Coeff {
        self.terms.iter().fold(0, |acc, &(_, c)| add_c(acc, c))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn eval(&self, q: &BigRational, t: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for &((a, b), c) in &self.terms {
            acc += BigRational::from_integer(BigInt::from(c)) * pow_rat(q, a) * pow_rat(t, b);
        }
        acc
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &QTPoly) -> Option<QTPoly> {
        let (dlead, dc) = d.leading()?;
        if self.is_zero() {
            return Some(Self::zero());
        }
        let mut rem: std::collections::BTreeMap<Exp, Coeff> = self.terms.iter().copied().collect();
        let mut quot: Vec<(Exp, Coeff)> = Vec::new();
        while let Some((&(ra, rb), &rc)) = rem.iter().next_back() {
            if ra < dlead.0 || rb < dlead.1 || rc % dc != 0 {
                return None;
            }
            let (qa, qb, qc) = (ra - dlead.0, rb - dlead.1, rc / dc);
            quot.push(((qa, qb), qc));
            for &((x, y), c) in &d.terms {
                let e = (x + qa, y + qb);
                let v = rem.entry(e).or_insert(0);
                *v = v.checked_sub(mul_c(c, qc)).expect("QTPoly coefficient overflow in division");
                if *v == 0 {
                    rem.remove(&e);
                }
            }
        }
        Some(Self::from_terms(quot))
    }

    /// Gcd of the integer coefficients (non-negative; zero for the zero polynomial).
    pub fn content(&self) -> Coeff {
        self.terms.iter().fold(0i128, |g, &(_, c)| gcd_i128(g, c))
    }
}

fn gcd_i128(a: Coeff, b: Coeff) -> Coeff {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

fn pow_rat(x: &BigRational, e: u32) -> BigRational {
    let mut acc = BigRational::one();
    for _ in 0..e {
        acc *= x;
    }
    acc
}

impl From<Coeff> for QTPoly {
    fn from(c: Coeff) -> Self {
        QTPoly::constant(c)
    }
}

fn merge(a: &[(Exp, Coeff)], b: &[(Exp, Coeff)], sign: Coeff) -> Vec<(Exp, Coeff)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push((b[j].0, mul_c(b[j].1, sign)));
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                let c = add_c(a[i].1, mul_c(b[j].1, sign));
                if c != 0 {
                    out.push((a[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend(b[j..].iter().map(|&(e, c)| (e, mul_c(c, sign))));
    out
}

impl<'a> Add<&'a QTPoly> for &'a QTPoly {
    type Output = QTPoly;
    fn add(self, rhs: &QTPoly) -> QTPoly {
        QTPoly { terms: merge(&self.terms, &rhs.terms, 1) }
    }
}

impl<'a> Sub<&'a QTPoly> for &'a QTPoly {
    type Output = QTPoly;
    fn sub(self, rhs: &QTPoly) -> QTPoly {
        QTPoly { terms: merge(&self.terms, &rhs.terms, -1) }
    }
}

impl<'a> Mul<&'a QTPoly> for &'a QTPoly {
    type Output = QTPoly;
    fn mul(self, rhs: &QTPoly) -> QTPoly {
        if self.is_zero() || rhs.is_zero() {
            return QTPoly::zero();
        }
        if self.terms.len() == 1 || rhs.terms.len() == 1 {
            let (m, p) = if self.terms.len() == 1 { (self, rhs) } else { (rhs, self) };
            let ((a, b), c) = m.terms[0];
            return QTPoly {
                terms: p.terms.iter().map(|&((x, y), d)| ((x + a, y + b), mul_c(c, d))).collect(),
            };
        }
        let qd = (self.q_degree().unwrap() + rhs.q_degree().unwrap()) as usize + 1;
        let td = (self.t_degree().unwrap() + rhs.t_degree().unwrap()) as usize + 1;
        if qd.saturating_mul(td) <= 1 << 22 {
            let mut dense = vec![0 as Coeff; qd * td];
            for &((a, b), c) in &self.terms {
                for &((x, y), d) in &rhs.terms {
                    let idx = (a + x) as usize * td + (b + y) as usize;
                    dense[idx] = add_c(dense[idx], mul_c(c, d));
                }
            }
            let terms = dense
                .into_iter()
                .enumerate()
                .filter(|&(_, c)| c != 0)
                .map(|(i, c)| (((i / td) as u32, (i % td) as u32), c))
                .collect();
            QTPoly { terms }
        } else {
            QTPoly::from_terms(self.terms.iter().flat_map(|&((a, b), c)| {
                rhs.terms.iter().map(move |&((x, y), d)| ((a + x, b + y), mul_c(c, d)))
            }))
        }
    }
}

impl Neg for &QTPoly {
    type Output = QTPoly;
    fn neg(self) -> QTPoly {
        self.scale(-1)
    }
}

impl Neg for QTPoly {
    type Output = QTPoly;
    fn neg(self) -> QTPoly {
        self.scale(-1)
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<QTPoly> for QTPoly {
            type Output = QTPoly;
            fn $m(self, rhs: QTPoly) -> QTPoly {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a QTPoly> for QTPoly {
            type Output = QTPoly;
            fn $m(self, rhs: &QTPoly) -> QTPoly {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<QTPoly> for &'a QTPoly {
            type Output = QTPoly;
            fn $m(self, rhs: QTPoly) -> QTPoly {
                self.$m(&rhs)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl AddAssign<&QTPoly> for QTPoly {
    fn add_assign(&mut self, rhs: &QTPoly) {
        self.terms = merge(&self.terms, &rhs.terms, 1);
    }
}

impl AddAssign<QTPoly> for QTPoly {
    fn add_assign(&mut self, rhs: QTPoly) {
        *self += &rhs;
    }
}

impl SubAssign<&QTPoly> for QTPoly {
    fn sub_assign(&mut self, rhs: &QTPoly) {
        self.terms = merge(&self.terms, &rhs.terms, -1);
    }
}

impl std::iter::Sum for QTPoly {
    fn sum<I: Iterator<Item = QTPoly>>(iter: I) -> Self {
        iter.fold(QTPoly::zero(), |acc, x| acc + x)
    }
}

fn fmt_monomial(f: &mut fmt::Formatter<'_>, a: u32, b: u32) -> fmt::Result {
    let mut parts = Vec::new();
    match a {
        0 => {}
        1 => parts.push("q".to_string()),
        _ => parts.push(format!("q^{a}")),
    }
    match b {
        0 => {}
        1 => parts.push("t".to_string()),
        _ => parts.push(format!("t^{b}")),
    }
    write!(f, "{}", parts.join("*"))
}

impl fmt::Display for QTPoly {
    /// Terms by increasing total degree, `q`-heavier first within a degree.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut ts = self.terms.clone();
        ts.sort_by_key(|&((a, b), _)| (a + b, std::cmp::Reverse(a)));
        for (i, &((a, b), c)) in ts.iter().enumerate() {
            let mag = c.unsigned_abs();
            if i == 0 {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else if c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if a == 0 && b == 0 {
                write!(f, "{mag}")?;
            } else {
                if mag != 1 {
                    write!(f, "{mag}*")?;
                }
                fmt_monomial(f, a, b)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for QTPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QTPoly({self})")
    }
}

impl Serialize for QTPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let v: Vec<(u32, u32, Coeff)> = self.terms.iter().map(|&((a, b), c)| (a, b, c)).collect();
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for QTPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v: Vec<(u32, u32, Coeff)> = Vec::deserialize(d)?;
        Ok(QTPoly::from_terms(v.into_iter().map(|(a, b, c)| ((a, b), c))))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[(u32, u32, Coeff)]) -> QTPoly {
        QTPoly::from_terms(terms.iter().map(|&(a, b, c)| ((a, b), c)))
    }

    #[test]
    fn zero_terms_are_dropped() {
        let x = p(&[(1, 0, 2), (1, 0, -2), (0, 0, 3)]);
        assert_eq!(x, QTPoly::constant(3));
        assert_eq!(&QTPoly::q() - &QTPoly::q(), QTPoly::zero());
    }

    #[test]
    fn product_and_exact_division() {
        let a = &QTPoly::one() + &QTPoly::q();
        let b = &QTPoly::one() - &QTPoly::t();
        let ab = &a * &b;
        assert_eq!(ab, p(&[(0, 0, 1), (1, 0, 1), (0, 1, -1), (1, 1, -1)]));
        assert_eq!(ab.div_exact(&a), Some(b.clone()));
        assert_eq!(ab.div_exact(&b), Some(a.clone()));
        assert_eq!(a.div_exact(&b), None);
        assert_eq!(QTPoly::constant(3).div_exact(&QTPoly::constant(2)), None);
    }

    #[test]
    fn display_orders_by_degree() {
        let x = p(&[(2, 0, 1), (1, 1, 1), (0, 2, 1), (0, 0, 1), (1, 0, -2)]);
        assert_eq!(x.to_string(), "1 - 2*q + q^2 + q*t + t^2");
    }

    #[test]
    fn json_triples_sorted() {
        let x = p(&[(0, 1, 1), (1, 0, 1)]);
        assert_eq!(serde_json::to_string(&x).unwrap(), "[[0,1,1],[1,0,1]]");
        let back: QTPoly = serde_json::from_str("[[1,0,1],[0,1,1]]").unwrap();
        assert_eq!(back, x);
    }

    #[test]
    fn swap_and_eval() {
        let x = p(&[(2, 1, 3)]);
        assert_eq!(x.swap_qt(), p(&[(1, 2, 3)]));
        let two = BigRational::from_integer(2.into());
        let three = BigRational::from_integer(3.into());
        assert_eq!(x.eval(&two, &three), BigRational::from_integer(36.into()));
    }
}
