//! Rational functions in `q` and `t`.
//!
//! A [`QTRat`] is stored reduced: numerator and denominator share no common
//! factor and the denominator's lex-leading coefficient (q dominant) is
//! positive, so derived `PartialEq` is equality in ℚ(q,t).

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::qt::QTPoly;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QTRat {
    num: QTPoly,
    den: QTPoly,
}

impl QTRat {
    pub fn new(num: QTPoly, den: QTPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::InvalidParameters("zero denominator".into()));
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = gcd(&num, &den);
        let mut num = num.div_exact(&g).expect("gcd divides numerator");
        let mut den = den.div_exact(&g).expect("gcd divides denominator");
        if den.leading().is_some_and(|(_, c)| c < 0) {
            num = -num;
            den = -den;
        }
        Ok(QTRat { num, den })
    }

    pub fn zero() -> Self {
        QTRat { num: QTPoly::zero(), den: QTPoly::one() }
    }

    pub fn one() -> Self {
        QTRat { num: QTPoly::one(), den: QTPoly::one() }
    }

    pub fn numerator(&self) -> &QTPoly {
        &self.num
    }

    pub fn denominator(&self) -> &QTPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The polynomial value, if the denominator is `1`.
    pub fn as_poly(&self) -> Option<&QTPoly> {
        self.den.is_one().then_some(&self.num)
    }

    pub fn recip(&self) -> Result<Self> {
        QTRat::new(self.den.clone(), self.num.clone())
    }

    /// Value at a point; `None` if the denominator vanishes there.
    pub fn eval(&self, q: &BigRational, t: &BigRational) -> Option<BigRational> {
        let d = self.den.eval(q, t);
        (!d.is_zero()).then(|| self.num.eval(q, t) / d)
    }
}

impl From<QTPoly> for QTRat {
    fn from(p: QTPoly) -> Self {
        QTRat { num: p, den: QTPoly::one() }
    }
}

impl<'a> Add<&'a QTRat> for &'a QTRat {
    type Output = QTRat;
    fn add(self, o: &QTRat) -> QTRat {
        if self.den == o.den {
            return QTRat::new(&self.num + &o.num, self.den.clone()).expect("nonzero denominator");
        }
        QTRat::new(&(&self.num * &o.den) + &(&o.num * &self.den), &self.den * &o.den).expect("nonzero denominator")
    }
}

impl<'a> Sub<&'a QTRat> for &'a QTRat {
    type Output = QTRat;
    fn sub(self, o: &QTRat) -> QTRat {
        self + &(-o)
    }
}

impl<'a> Mul<&'a QTRat> for &'a QTRat {
    type Output = QTRat;
    fn mul(self, o: &QTRat) -> QTRat {
        QTRat::new(&self.num * &o.num, &self.den * &o.den).expect("nonzero denominator")
    }
}

impl<'a> Div<&'a QTRat> for &'a QTRat {
    type Output = QTRat;
    /// Panics on division by zero.
    fn div(self, o: &QTRat) -> QTRat {
        assert!(!o.is_zero(), "QTRat division by zero");
        QTRat::new(&self.num * &o.den, &self.den * &o.num).expect("nonzero denominator")
    }
}

impl Neg for &QTRat {
    type Output = QTRat;
    fn neg(self) -> QTRat {
        QTRat { num: -&self.num, den: self.den.clone() }
    }
}

impl fmt::Display for QTRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for QTRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

// Dense helpers: `Up` is a polynomial in q over ℤ, `Bp` a polynomial in t
// with `Up` coefficients. Both are trimmed (no trailing zeros).

type Up = Vec<BigInt>;
type Bp = Vec<Up>;

fn up_trim(mut a: Up) -> Up {
    while a.last().is_some_and(Zero::is_zero) {
        a.pop();
    }
    a
}

fn up_mul(a: &Up, b: &Up) -> Up {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    up_trim(out)
}

fn up_sub(a: &Up, b: &Up) -> Up {
    let mut out = a.clone();
    out.resize(a.len().max(b.len()), BigInt::zero());
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    up_trim(out)
}

fn up_content(a: &Up) -> BigInt {
    a.iter().fold(BigInt::zero(), |g, x| g.gcd(x))
}

/// Exact quotient; panics if `b` does not divide `a`.
fn up_div_exact(a: &Up, b: &Up) -> Up {
    let mut rem = a.clone();
    if rem.is_empty() {
        return rem;
    }
    let db = b.len() - 1;
    assert!(rem.len() > db, "inexact univariate division");
    let lb = &b[db];
    let mut quot = vec![BigInt::zero(); rem.len() - db];
    for i in (0..quot.len()).rev() {
        let (c, r) = rem[i + db].div_rem(lb);
        assert!(r.is_zero(), "inexact univariate division");
        for (j, y) in b.iter().enumerate() {
            rem[i + j] -= &c * y;
        }
        quot[i] = c;
    }
    assert!(rem.iter().all(Zero::is_zero), "inexact univariate division");
    up_trim(quot)
}

/// `lc(b)^{deg a − deg b + 1} · a mod b`.
fn up_prem(a: &Up, b: &Up) -> Up {
    let mut rem = a.clone();
    let db = b.len() - 1;
    let lb = b[db].clone();
    let mut steps = (a.len() as isize - db as isize).max(0) as u32;
    while rem.len() > db {
        let top = rem.len() - 1;
        let c = rem[top].clone();
        for x in rem.iter_mut() {
            *x *= &lb;
        }
        for (j, y) in b.iter().enumerate() {
            rem[top - db + j] -= &c * y;
        }
        rem = up_trim(rem);
        steps -= 1;
    }
    let f = num_traits::pow(lb, steps as usize);
    up_trim(rem.into_iter().map(|x| x * &f).collect())
}

fn up_primitive(a: &Up) -> Up {
    let c = up_content(a);
    if c.is_zero() {
        return Vec::new();
    }
    let sign = if a.last().unwrap().is_negative() { -c } else { c };
    a.iter().map(|x| x / &sign).collect()
}

fn up_gcd(a: &Up, b: &Up) -> Up {
    if a.is_empty() {
        return up_primitive(b).into_iter().map(|x| x * up_content(b)).collect();
    }
    if b.is_empty() {
        return up_gcd(b, a);
    }
    let c = up_content(a).gcd(&up_content(b));
    let (mut x, mut y) = (up_primitive(a), up_primitive(b));
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        let r = up_primitive(&up_prem(&x, &y));
        x = y;
        y = r;
    }
    up_primitive(&x).into_iter().map(|v| v * &c).collect()
}

fn bp_trim(mut a: Bp) -> Bp {
    while a.last().is_some_and(Vec::is_empty) {
        a.pop();
    }
    a
}

fn bp_content(a: &Bp) -> Up {
    a.iter().fold(Vec::new(), |g, x| up_gcd(&g, x))
}

fn bp_div_up(a: &Bp, c: &Up) -> Bp {
    a.iter().map(|x| up_div_exact(x, c)).collect()
}

fn bp_primitive(a: &Bp) -> Bp {
    let c = bp_content(a);
    let mut p = bp_div_up(a, &c);
    let lead = p.last().and_then(|l| l.last()).is_some_and(Signed::is_negative);
    if lead {
        for x in p.iter_mut() {
            for v in x.iter_mut() {
                *v = -&*v;
            }
        }
    }
    p
}

fn bp_prem(a: &Bp, b: &Bp) -> Bp {
    let mut rem = a.clone();
    let db = b.len() - 1;
    let lb = b[db].clone();
    let mut steps = (a.len() as isize - db as isize).max(0) as u32;
    while rem.len() > db {
        let top = rem.len() - 1;
        let c = rem[top].clone();
        for x in rem.iter_mut() {
            *x = up_mul(x, &lb);
        }
        for (j, y) in b.iter().enumerate() {
            rem[top - db + j] = up_sub(&rem[top - db + j], &up_mul(&c, y));
        }
        rem = bp_trim(rem);
        steps -= 1;
    }
    let mut f: Up = vec![BigInt::one()];
    for _ in 0..steps {
        f = up_mul(&f, &lb);
    }
    bp_trim(rem.iter().map(|x| up_mul(x, &f)).collect())
}

fn to_bp(p: &QTPoly) -> Bp {
    let mut out: Bp = vec![Vec::new(); p.t_degree().map_or(0, |d| d as usize + 1)];
    for &((a, b), c) in p.terms() {
        let row = &mut out[b as usize];
        if row.len() <= a as usize {
            row.resize(a as usize + 1, BigInt::zero());
        }
        row[a as usize] = BigInt::from(c);
    }
    out
}

fn from_bp(p: &Bp) -> QTPoly {
    QTPoly::from_terms(p.iter().enumerate().flat_map(|(b, row)| {
        row.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(move |(a, c)| {
            ((a as u32, b as u32), c.to_i128().expect("gcd coefficient fits in i128"))
        })
    }))
}

/// Greatest common divisor in ℤ[q,t], up to sign.
pub fn gcd(a: &QTPoly, b: &QTPoly) -> QTPoly {
    if a.is_zero() {
        return b.clone();
    }
    if b.is_zero() {
        return a.clone();
    }
    let (a, b) = (to_bp(a), to_bp(b));
    let c = up_gcd(&bp_content(&a), &bp_content(&b));
    let (mut x, mut y) = (bp_primitive(&a), bp_primitive(&b));
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while y.len() > 1 {
        let r = bp_prem(&x, &y);
        x = y;
        y = if r.is_empty() { Vec::new() } else { bp_primitive(&r) };
    }
    // y is a nonzero constant in t: the primitive parts are coprime
    let g = if y.is_empty() { x } else { vec![vec![BigInt::one()]] };
    from_bp(&g.iter().map(|row| up_mul(row, &c)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[((u32, u32), i128)]) -> QTPoly {
        QTPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn gcd_finds_common_factors() {
        let q = QTPoly::q();
        let t = QTPoly::t();
        let one = QTPoly::one();
        let a = &(&q - &t) * &(&q + &one);
        let b = &(&q - &t) * &(&t.pow(2) + &one);
        let g = gcd(&a, &b);
        assert!(g == &q - &t || g == &t - &q);
        let six = QTPoly::constant(6);
        assert_eq!(gcd(&a.scale(4), &b.scale(6)).content(), 2);
        assert_eq!(gcd(&six, &QTPoly::constant(4)), QTPoly::constant(2));
        assert_eq!(gcd(&q, &t).as_monomial().map(|(a, b, c)| (a, b, c.abs())), Some((0, 0, 1)));
    }

    #[test]
    fn normalization_is_canonical() {
        let q = QTPoly::q();
        let t = QTPoly::t();
        let one = QTPoly::one();
        let x = QTRat::new(&(&q - &t) * &(&q + &t), (&t - &q).scale(2)).unwrap();
        assert_eq!(x, QTRat::new(-(&q + &t), QTPoly::constant(2)).unwrap());
        let a = QTRat::new(one.clone(), &one - &q).unwrap();
        let b = QTRat::new(q.clone(), &one - &q).unwrap();
        assert_eq!(&a - &b, QTRat::one());
        assert_eq!(&(&a * &b) / &b, a);
        assert!(QTRat::new(one, QTPoly::zero()).is_err());
        assert_eq!(format!("{}", QTRat::from(p(&[((1, 0), 1)]))), "q");
    }
}
