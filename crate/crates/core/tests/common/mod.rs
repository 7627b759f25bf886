#![allow(dead_code)]

pub mod oracle;

use fplab::field::Prime;
use fplab::groebner::Ideal;
use fplab::poly::{
    parse_poly, parse_poly_list, Monomial, MonomialOrder, Polynomial, Ring, RingCtx,
};
use proptest::prelude::*;

pub const VARS: [&str; 4] = ["x", "y", "z", "w"];

pub fn ring(p: u64, vars: &[&str]) -> Ring {
    RingCtx::new(Prime::new(p).unwrap(), vars, MonomialOrder::Grevlex).unwrap()
}

pub fn ring_n(p: u64, n: usize) -> Ring {
    ring(p, &VARS[..n])
}

pub fn id(r: &Ring, s: &str) -> Ideal {
    Ideal::new(r, parse_poly_list(s, r).unwrap()).unwrap()
}

pub fn pp(r: &Ring, s: &str) -> Polynomial {
    parse_poly(s, r).unwrap()
}

/// Raw polynomial data: (coefficient, exponent vector) pairs.
pub type RawPoly = Vec<(u32, Vec<u32>)>;

pub fn build(r: &Ring, raw: &RawPoly) -> Polynomial {
    Polynomial::from_terms(r, raw.iter().map(|(c, e)| (*c, Monomial::new(e.clone()))))
}

pub fn build_all(r: &Ring, raws: &[RawPoly]) -> Vec<Polynomial> {
    raws.iter().map(|s| build(r, s)).collect()
}

pub fn build_ideal(r: &Ring, raws: &[RawPoly]) -> Ideal {
    Ideal::new(r, build_all(r, raws)).unwrap()
}

/// A monomial of total degree exactly `deg` in `n` variables.
pub fn monomial_of_degree(n: usize, deg: u32) -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(0..n, deg as usize).prop_map(move |picks| {
        let mut e = vec![0u32; n];
        for i in picks {
            e[i] += 1;
        }
        e
    })
}

/// A monomial of total degree at most `max_deg`.
pub fn monomial_up_to(n: usize, max_deg: u32) -> impl Strategy<Value = Vec<u32>> {
    (0..=max_deg).prop_flat_map(move |d| monomial_of_degree(n, d))
}

pub fn raw_poly(n: usize, max_deg: u32, max_terms: usize) -> impl Strategy<Value = RawPoly> {
    prop::collection::vec((1u32..3, monomial_up_to(n, max_deg)), 1..=max_terms)
}

/// Homogeneous of degree `deg` (before cancellation).
pub fn raw_homog(n: usize, deg: u32, max_terms: usize) -> impl Strategy<Value = RawPoly> {
    prop::collection::vec((1u32..3, monomial_of_degree(n, deg)), 1..=max_terms)
}

/// Homogeneous with a random degree in `1..=max_deg`.
pub fn raw_homog_any(n: usize, max_deg: u32, max_terms: usize) -> impl Strategy<Value = RawPoly> {
    (1..=max_deg).prop_flat_map(move |d| raw_homog(n, d, max_terms))
}

pub fn prime() -> impl Strategy<Value = u64> {
    prop_oneof![Just(2u64), Just(3u64)]
}

/// (p, n, generator raws) with p ∈ {2,3}, n ≤ 4, degree ≤ 4.
pub fn ideal_case(
    max_gens: usize,
    max_terms: usize,
) -> impl Strategy<Value = (u64, usize, Vec<RawPoly>)> {
    (prime(), 1usize..=4).prop_flat_map(move |(p, n)| {
        (
            Just(p),
            Just(n),
            prop::collection::vec(raw_poly(n, 4, max_terms), 1..=max_gens),
        )
    })
}

/// As [`ideal_case`] with homogeneous generators.
pub fn homog_case(
    max_vars: usize,
    max_deg: u32,
    max_gens: usize,
    max_terms: usize,
) -> impl Strategy<Value = (u64, usize, Vec<RawPoly>)> {
    (prime(), 1usize..=max_vars).prop_flat_map(move |(p, n)| {
        (
            Just(p),
            Just(n),
            prop::collection::vec(raw_homog_any(n, max_deg, max_terms), 1..=max_gens),
        )
    })
}

/// A random combination `Σ c_i m_i g_i` of the generators.
pub fn combination(r: &Ring, gens: &[Polynomial], mults: &[RawPoly]) -> Polynomial {
    let mut acc = Polynomial::zero(r);
    for (g, m) in gens.iter().zip(mults) {
        acc = acc.add(&g.mul(&build(r, m)).unwrap()).unwrap();
    }
    acc
}

pub fn basis_strings(i: &Ideal) -> Vec<String> {
    i.grevlex_basis()
        .unwrap()
        .elements()
        .iter()
        .map(|g| g.to_string())
        .collect()
}
