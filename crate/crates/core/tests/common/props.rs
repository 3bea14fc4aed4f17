//! Random symmetric functions and the engine properties checked on them.

use proptest::collection::vec;
use proptest::prelude::*;
use shuffle_skew::partition::{partitions, partitions_bounded, Partition};
use shuffle_skew::symfunc::laurent::{constant_term_inner, dual_rectangle_check};
use shuffle_skew::symfunc::{hall_inner, skew_schur};
use shuffle_skew::{Basis, QTPoly, SymFunc};

pub const MAX_DEGREE: usize = 8;

pub fn qtpoly() -> impl Strategy<Value = QTPoly> {
    vec(((0u32..3, 0u32..3), -3i128..=3), 0..3).prop_map(QTPoly::from_terms)
}

pub fn basis() -> impl Strategy<Value = Basis> {
    prop_oneof![Just(Basis::Monomial), Just(Basis::Homogeneous), Just(Basis::Elementary), Just(Basis::Schur)]
}

/// A random element of degree `deg` supported on partitions with at most `rows` parts.
pub fn symfunc_in(b: Basis, deg: usize, rows: usize) -> impl Strategy<Value = SymFunc> {
    let parts = partitions_bounded(deg, deg, rows);
    vec((0..parts.len(), qtpoly()), 1..4).prop_map(move |ts| {
        SymFunc::from_terms(b, deg, ts.into_iter().map(|(i, c)| (parts[i].clone(), c))).unwrap()
    })
}

pub fn symfunc() -> impl Strategy<Value = SymFunc> {
    (basis(), 1..=MAX_DEGREE).prop_flat_map(|(b, d)| symfunc_in(b, d, d))
}

/// `(f, g, k)` of equal degree with Schur support of at most `k` rows.
pub fn hall_pair() -> impl Strategy<Value = (SymFunc, SymFunc, usize)> {
    (1..=MAX_DEGREE, 1usize..=3).prop_flat_map(|(d, k)| {
        (symfunc_in(Basis::Schur, d, k), symfunc_in(Basis::Schur, d, k), Just(k))
    })
}

/// `(λ, f, g)` with `deg f = |λ| + deg g`.
pub fn skew_triple() -> impl Strategy<Value = (Partition, SymFunc, SymFunc)> {
    (1..=MAX_DEGREE)
        .prop_flat_map(|d| (Just(d), 0..=d))
        .prop_flat_map(|(d, j)| {
            let lams = partitions(j);
            (0..lams.len(), basis(), basis()).prop_flat_map(move |(i, b1, b2)| {
                (Just(lams[i].clone()), symfunc_in(b1, d, d), symfunc_in(b2, d - j, d - j))
            })
        })
}

pub fn rectangle_case() -> impl Strategy<Value = (usize, usize)> {
    (1..=MAX_DEGREE).prop_flat_map(|n| (Just(n), 1..=n))
}

pub fn round_trip(f: &SymFunc) -> Result<(), String> {
    let m = f.to_monomial();
    if m.to_schur().to_monomial() != m {
        return Err(format!("round trip fails for {f}"));
    }
    if !f.to_schur().same_as(f) {
        return Err(format!("Schur form differs from {f}"));
    }
    Ok(())
}

pub fn hall_matches_constant_term(f: &SymFunc, g: &SymFunc, k: usize) -> Result<(), String> {
    let hall = hall_inner(f, g).map_err(|e| e.to_string())?;
    let ct = constant_term_inner(f, g, k).map_err(|e| e.to_string())?;
    if hall != ct {
        return Err(format!("<{f}, {g}> = {hall} but constant term in {k} variables is {ct}"));
    }
    Ok(())
}

pub fn skew_is_adjoint(lam: &Partition, f: &SymFunc, g: &SymFunc) -> Result<(), String> {
    let left = hall_inner(&skew_schur(lam, f), g).map_err(|e| e.to_string())?;
    let right = hall_inner(f, &SymFunc::schur(lam.clone()).mul(g)).map_err(|e| e.to_string())?;
    if left != right {
        return Err(format!("skewing by s_{lam}: {left} vs {right} for f = {f}, g = {g}"));
    }
    Ok(())
}

pub fn dual_rectangle(n: usize, k: usize) -> Result<(), String> {
    match dual_rectangle_check(n, k) {
        Ok(true) => Ok(()),
        Ok(false) => Err(format!("dual rectangle identity fails at n={n}, k={k}")),
        Err(e) => Err(e.to_string()),
    }
}
