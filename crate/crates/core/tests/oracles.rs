//! Library results against the Groebner-free rank oracle.

mod common;

use common::oracle::{self, colon_dim, hilbert_function, intersection_dim, Piece};
use common::*;
use fplab::frobenius::{bracket_power, frobenius_closure};
use fplab::groebner::{colon_poly, ideal_sum, intersect, intersect_all, Ideal};
use fplab::hilbert::{hilbert_series, initial_ideal, length_quotient, Length};
use fplab::poly::Polynomial;
use fplab::verify::embedded_session;
use proptest::prelude::*;

/// Coefficients of `num / (1-t)^d` up to degree `k`.
fn expand(num: &[i64], d: usize, k: usize) -> Vec<i64> {
    let mut s: Vec<i64> = (0..=k).map(|i| num.get(i).copied().unwrap_or(0)).collect();
    for _ in 0..d {
        for i in 1..=k {
            s[i] += s[i - 1];
        }
    }
    s
}

#[test]
fn oracle_self_checks() {
    assert_eq!(oracle::rank(vec![vec![1, 1], vec![1, 1]], 2), 1);
    assert_eq!(oracle::rank(vec![vec![1, 2], vec![2, 1]], 3), 1);
    assert_eq!(oracle::rank(vec![vec![1, 2], vec![2, 1]], 5), 2);
    assert_eq!(oracle::monomials(3, 2).len(), 6);
    let r = ring(2, &["x", "y"]);
    let gens = id(&r, "x^2, x*y").gens().to_vec();
    let h: Vec<usize> = (0..5).map(|k| hilbert_function(2, 2, &gens, k)).collect();
    assert_eq!(h, [1, 2, 1, 1, 1]);
    assert_eq!(oracle::length(2, 2, id(&r, "x^2, y^3").gens(), 20), Some(6));
}

#[test]
fn example1_series_matches_rank_counts() {
    let s = embedded_session("example1").unwrap();
    let i = s.ideal("I").unwrap();
    let hs = hilbert_series(i).unwrap();
    let from_series = expand(&hs.reduced_numerator, hs.pole_order, 10);
    let counted: Vec<i64> = (0..=10)
        .map(|k| hilbert_function(4, 2, i.gens(), k as u32) as i64)
        .collect();
    assert_eq!(from_series, counted);
    // the printed (1 - t^2) denominator would give a bounded function
    let misread = expand(&[1, 2, 3, 2, -1], 0, 10);
    let mut alt = misread.clone();
    for k in 2..=10 {
        alt[k] += alt[k - 2];
    }
    assert_ne!(alt, counted);
    // raw numerator agrees as well
    assert_eq!(expand(&hs.raw_numerator, 4, 10), counted);
}

#[test]
fn example2_lengths() {
    let s = embedded_session("example2").unwrap();
    let (i, j) = (s.ideal("I").unwrap(), s.ideal("J").unwrap());
    let j2 = ideal_sum(&bracket_power(j, 1).unwrap(), i).unwrap();
    let l2 = oracle::length(5, 2, j2.gens(), 30).unwrap();
    assert_eq!(length_quotient(&j2).unwrap(), Length::Finite(l2));
    let ji = ideal_sum(j, i).unwrap();
    let l_j = oracle::length(5, 2, ji.gens(), 30).unwrap();
    let chain = frobenius_closure(j, i, 3).unwrap();
    let closure = chain.stable().unwrap();
    let l_f = oracle::length(5, 2, &basis_polys(closure), 30).unwrap();
    assert_eq!((l_j, l_f), (4, 3));
    assert_eq!(length_quotient(&ji).unwrap(), Length::Finite(l_j));
    assert_eq!(length_quotient(closure).unwrap(), Length::Finite(l_f));
}

fn basis_polys(i: &Ideal) -> Vec<Polynomial> {
    i.grevlex_basis().unwrap().elements().to_vec()
}

#[test]
fn scaling_identity_by_rank_counts() {
    let r = ring(2, &["x", "y", "z"]);
    let base = oracle::length(3, 2, id(&r, "y, z, x^3 + y^3 + z^3").gens(), 30).unwrap();
    assert_eq!(base, 3);
    for (q, gens) in [
        (2, "y^2, z^2, x^3 + y^3 + z^3"),
        (4, "y^4, z^4, x^3 + y^3 + z^3"),
    ] {
        let l = oracle::length(3, 2, id(&r, gens).gens(), 40).unwrap();
        assert_eq!(l, q * q * base);
        assert_eq!(length_quotient(&id(&r, gens)).unwrap(), Length::Finite(l));
    }
}

#[test]
fn example2_intersections_by_rank_counts() {
    let s = embedded_session("example2").unwrap();
    let i1 = intersect(s.ideal("A1").unwrap(), s.ideal("A2").unwrap()).unwrap();
    let i2 = intersect_all(&[
        s.ideal("B1").unwrap().clone(),
        s.ideal("B2").unwrap().clone(),
        s.ideal("B3").unwrap().clone(),
    ])
    .unwrap();
    for k in 0..=5 {
        let expect = intersection_dim(
            5,
            2,
            s.ideal("A1").unwrap().gens(),
            s.ideal("A2").unwrap().gens(),
            k,
        );
        assert_eq!(Piece::new(5, 2, k, &basis_polys(&i1)).rank(), expect);
    }
    assert!(i2.ideal_eq(s.ideal("I2").unwrap()).unwrap());
    let i = intersect(&i1, &i2).unwrap();
    assert!(i.ideal_eq(s.ideal("I").unwrap()).unwrap());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn hilbert_function_matches_rank_counts((p, n, raws) in homog_case(3, 3, 3, 3)) {
        let r = ring_n(p, n);
        let i = build_ideal(&r, &raws);
        prop_assume!(!i.is_unit().unwrap());
        let hs = hilbert_series(&i).unwrap();
        let from_series = expand(&hs.reduced_numerator, hs.pole_order, 6);
        for k in 0..=6u32 {
            prop_assert_eq!(from_series[k as usize], hilbert_function(n, p, i.gens(), k) as i64);
        }
        let via_initial = hilbert_series(&initial_ideal(&i).unwrap()).unwrap();
        prop_assert_eq!(hs, via_initial);
    }

    #[test]
    fn intersection_matches_rank_counts(
        (p, n, a) in homog_case(3, 3, 2, 3),
        b_seed in prop::collection::vec(raw_homog_any(3, 3, 3), 1..=2),
    ) {
        let r = ring_n(p, n);
        let a = build_ideal(&r, &a);
        let b_specs: Vec<RawPoly> = b_seed
            .into_iter()
            .map(|s| s.into_iter().map(|(c, e)| (c, e[..n].to_vec())).collect())
            .collect();
        let b_polys: Vec<Polynomial> = build_all(&r, &b_specs).into_iter().filter(|g| g.is_homogeneous()).collect();
        let b = Ideal::new(&r, b_polys).unwrap();
        let meet = intersect(&a, &b).unwrap();
        prop_assert!(a.contains_ideal(&meet).unwrap() && b.contains_ideal(&meet).unwrap());
        for k in 0..=5u32 {
            let expect = intersection_dim(n, p, a.gens(), b.gens(), k);
            prop_assert_eq!(Piece::new(n, p, k, &basis_polys(&meet)).rank(), expect, "degree {}", k);
        }
    }

    #[test]
    fn colon_matches_rank_counts((p, n, raws) in homog_case(3, 3, 3, 3), g_spec in raw_homog_any(3, 2, 2)) {
        let r = ring_n(p, n);
        let i = build_ideal(&r, &raws);
        let g_spec: RawPoly = g_spec.into_iter().map(|(c, e)| (c, e[..n].to_vec())).collect();
        let g = build(&r, &g_spec);
        prop_assume!(!g.is_zero() && g.is_homogeneous());
        let c = colon_poly(&i, &g).unwrap();
        for k in 0..=4u32 {
            let expect = colon_dim(n, p, i.gens(), &g, k);
            prop_assert_eq!(Piece::new(n, p, k, &basis_polys(&c)).rank(), expect, "degree {}", k);
        }
    }

    #[test]
    fn length_matches_rank_counts((p, n, raws) in homog_case(3, 3, 3, 3), powers in prop::collection::vec(1u32..=3, 3)) {
        let r = ring_n(p, n);
        let mut gens = build_all(&r, &raws);
        for (v, &a) in powers.iter().take(n).enumerate() {
            gens.push(Polynomial::var(&r, v).pow(a as u64).unwrap());
        }
        let i = Ideal::new(&r, gens).unwrap();
        let expect = oracle::length(n, p, i.gens(), 20).unwrap();
        prop_assert_eq!(length_quotient(&i).unwrap(), Length::Finite(expect));
        // for m-primary ideals the numerator is the series itself
        let hs = hilbert_series(&i).unwrap();
        if expect > 0 {
            prop_assert_eq!(hs.pole_order, 0);
            prop_assert_eq!(hs.reduced_numerator.iter().sum::<i64>(), expect as i64);
        }
    }
}
