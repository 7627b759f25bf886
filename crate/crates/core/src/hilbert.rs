//! Hilbert series, dimension, multiplicity and length of quotients `S/I`,
//! all read off the initial ideal of a reduced grevlex basis.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::poly::{Monomial, Polynomial};

/// Hilbert series `h(t) / (1-t)^n` of a graded quotient, with the reduced
/// form `h~(t) / (1-t)^d`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HilbertSeries {
    pub nvars: usize,
    /// Coefficients of `h(t)`, lowest degree first.
    pub raw_numerator: Vec<i64>,
    pub reduced_numerator: Vec<i64>,
    pub pole_order: usize,
}

impl HilbertSeries {
    fn from_raw(nvars: usize, raw: Vec<i64>) -> Self {
        let raw = trim(raw);
        let mut reduced = raw.clone();
        let mut cancelled = 0;
        while !reduced.is_empty() && reduced.iter().sum::<i64>() == 0 {
            reduced = divide_one_minus_t(&reduced);
            cancelled += 1;
        }
        HilbertSeries {
            nvars,
            raw_numerator: raw,
            reduced_numerator: reduced,
            pole_order: nvars - cancelled,
        }
    }

    /// `h~(1)`.
    pub fn multiplicity(&self) -> i64 {
        self.reduced_numerator.iter().sum()
    }

    pub fn dimension(&self) -> usize {
        self.pole_order
    }

    /// Dimension of the degree-`k` piece, expanded from the series.
    pub fn hilbert_function(&self, k: usize) -> i64 {
        // coefficient of t^k in h~(t) * sum_j binom(j+d-1, d-1) t^j
        let d = self.pole_order;
        let mut total = 0i64;
        for (i, &c) in self.reduced_numerator.iter().enumerate() {
            if i > k {
                break;
            }
            let j = k - i;
            let b = if d == 0 {
                (j == 0) as i64
            } else {
                binomial((j + d - 1) as u64, (d - 1) as u64) as i64
            };
            total += c * b;
        }
        total
    }
}

impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({})/(1-t)^{}",
            format_univariate(&self.reduced_numerator),
            self.pole_order
        )
    }
}

pub(crate) fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// Renders an integer polynomial in `t`, e.g. `1 + 2t + 3t^2 - t^4`.
pub fn format_univariate(coeffs: &[i64]) -> String {
    let mut out = String::new();
    for (i, &c) in coeffs.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let mag = c.unsigned_abs();
        let body = match (i, mag) {
            (0, m) => m.to_string(),
            (1, 1) => "t".to_string(),
            (1, m) => format!("{m}t"),
            (k, 1) => format!("t^{k}"),
            (k, m) => format!("{m}t^{k}"),
        };
        if out.is_empty() {
            if c < 0 {
                out.push('-');
            }
        } else {
            out.push_str(if c < 0 { " - " } else { " + " });
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn trim(mut v: Vec<i64>) -> Vec<i64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn divide_one_minus_t(h: &[i64]) -> Vec<i64> {
    // h = (1 - t) g  =>  g_k = h_0 + ... + h_k
    let mut g = Vec::with_capacity(h.len().saturating_sub(1));
    let mut run = 0;
    for &c in &h[..h.len() - 1] {
        run += c;
        g.push(run);
    }
    debug_assert_eq!(run + h[h.len() - 1], 0);
    trim(g)
}

fn poly_add(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0; a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] += c;
    }
    trim(out)
}

fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn one_minus_t_pow(d: usize) -> Vec<i64> {
    let mut v = vec![0; d + 1];
    v[0] = 1;
    v[d] -= 1;
    trim(v)
}

/// Removes generators divisible by other generators; sorts and dedups.
fn minimize(mut gens: Vec<Vec<u32>>) -> Vec<Vec<u32>> {
    gens.sort_by_key(|g| g.iter().map(|&e| e as u64).sum::<u64>());
    gens.dedup();
    let mut out: Vec<Vec<u32>> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|h| h.iter().zip(&g).all(|(a, b)| a <= b)) {
            out.push(g);
        }
    }
    out
}

fn pure_var(g: &[u32]) -> Option<usize> {
    let mut found = None;
    for (i, &e) in g.iter().enumerate() {
        if e > 0 {
            if found.is_some() {
                return None;
            }
            found = Some(i);
        }
    }
    found
}

/// Numerator of the Hilbert series of `S/M` over `(1-t)^n` for a monomial
/// ideal `M`, by the pivot recursion `N(M) = N(M + (x)) + t N(M : x)`.
pub(crate) fn monomial_numerator(gens: Vec<Vec<u32>>) -> Vec<i64> {
    let gens = minimize(gens);
    if gens.is_empty() {
        return vec![1];
    }
    if gens.iter().any(|g| g.iter().all(|&e| e == 0)) {
        return Vec::new();
    }
    let deg = |g: &Vec<u32>| g.iter().map(|&e| e as usize).sum::<usize>();
    if gens.len() == 1 || gens.iter().all(|g| pure_var(g).is_some()) {
        return gens
            .iter()
            .fold(vec![1], |acc, g| poly_mul(&acc, &one_minus_t_pow(deg(g))));
    }
    let n = gens[0].len();
    let mut counts = vec![0usize; n];
    for g in gens.iter().filter(|g| pure_var(g).is_none()) {
        for (i, &e) in g.iter().enumerate() {
            if e > 0 {
                counts[i] += 1;
            }
        }
    }
    let pivot = (0..n)
        .max_by_key(|&i| (counts[i], std::cmp::Reverse(i)))
        .unwrap();

    let mut plus: Vec<Vec<u32>> = gens.iter().filter(|g| g[pivot] == 0).cloned().collect();
    let mut xv = vec![0; n];
    xv[pivot] = 1;
    plus.push(xv);
    let colon: Vec<Vec<u32>> = gens
        .iter()
        .map(|g| {
            let mut h = g.clone();
            h[pivot] = h[pivot].saturating_sub(1);
            h
        })
        .collect();
    let a = monomial_numerator(plus);
    let b = monomial_numerator(colon);
    let mut tb = vec![0];
    tb.extend(b);
    poly_add(&a, &tb)
}

fn require_graded(ideal: &Ideal) -> Result<()> {
    if !ideal.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    if ideal.is_unit()? {
        return Err(Error::UnitIdeal);
    }
    Ok(())
}

/// The monomial ideal of leading terms of the reduced grevlex basis.
pub fn initial_ideal(ideal: &Ideal) -> Result<Ideal> {
    let gb = ideal.grevlex_basis()?;
    let ring = ideal.ring();
    Ideal::new(
        ring,
        gb.elements()
            .iter()
            .map(|g| Polynomial::monomial(ring, 1, g.leading_mono().unwrap().clone())),
    )
}

fn leading_exponents(ideal: &Ideal) -> Result<Vec<Vec<u32>>> {
    let gb = ideal.grevlex_basis()?;
    Ok(gb
        .elements()
        .iter()
        .map(|g| g.leading_mono().unwrap().exps().to_vec())
        .collect())
}

pub fn hilbert_series(ideal: &Ideal) -> Result<HilbertSeries> {
    require_graded(ideal)?;
    let n = ideal.ring().nvars();
    Ok(HilbertSeries::from_raw(
        n,
        monomial_numerator(leading_exponents(ideal)?),
    ))
}

pub fn dimension(ideal: &Ideal) -> Result<usize> {
    Ok(hilbert_series(ideal)?.pole_order)
}

pub fn multiplicity(ideal: &Ideal) -> Result<u64> {
    let m = hilbert_series(ideal)?.multiplicity();
    debug_assert!(m > 0);
    Ok(m as u64)
}

/// `n` minus the number of linear forms in the reduced grevlex basis.
pub fn embedding_dimension(ideal: &Ideal) -> Result<usize> {
    require_graded(ideal)?;
    let gb = ideal.grevlex_basis()?;
    let linear = gb
        .elements()
        .iter()
        .filter(|g| g.degree() == Some(1))
        .count();
    Ok(ideal.ring().nvars() - linear)
}

/// Length of `S/I` as a vector space.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Length {
    Finite(u64),
    Infinite,
}

impl Length {
    pub fn finite(self) -> Option<u64> {
        match self {
            Length::Finite(v) => Some(v),
            Length::Infinite => None,
        }
    }
}

impl fmt::Display for Length {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Length::Finite(v) => write!(f, "{v}"),
            Length::Infinite => write!(f, "INFINITE"),
        }
    }
}

impl Serialize for Length {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Length::Finite(v) => s.serialize_u64(*v),
            Length::Infinite => s.serialize_str("INFINITE"),
        }
    }
}

/// Counts standard monomials of a monomial ideal in which every variable has
/// a pure power. Recurses on the exponent of the leading variable.
fn count_standard(gens: &[Vec<u32>]) -> u64 {
    if gens.iter().any(|g| g.iter().all(|&e| e == 0)) {
        return 0;
    }
    let n = gens[0].len();
    let bound = gens
        .iter()
        .filter(|g| pure_var(g) == Some(0))
        .map(|g| g[0])
        .min()
        .expect("pure power present");
    if n == 1 {
        return bound as u64;
    }
    let mut total = 0;
    for a in 0..bound {
        let sub: Vec<Vec<u32>> = gens
            .iter()
            .filter(|g| g[0] <= a)
            .map(|g| g[1..].to_vec())
            .collect();
        total += count_standard(&minimize(sub));
    }
    total
}

/// Number of monomials outside the initial ideal, or `Infinite` when some
/// variable has no pure power there. The unit ideal gives 0.
pub fn length_quotient(ideal: &Ideal) -> Result<Length> {
    if ideal.is_zero() {
        return Ok(Length::Infinite);
    }
    let lead = minimize(leading_exponents(ideal)?);
    if lead.iter().any(|g| g.iter().all(|&e| e == 0)) {
        return Ok(Length::Finite(0));
    }
    let n = ideal.ring().nvars();
    for v in 0..n {
        if !lead.iter().any(|g| pure_var(g) == Some(v)) {
            return Ok(Length::Infinite);
        }
    }
    Ok(Length::Finite(count_standard(&lead)))
}

/// Standard monomials of a zero-dimensional ideal, for inspection.
pub fn standard_monomials(ideal: &Ideal, limit: usize) -> Result<Option<Vec<Monomial>>> {
    let lead = minimize(leading_exponents(ideal)?);
    if length_quotient(ideal)? == Length::Infinite {
        return Ok(None);
    }
    let n = ideal.ring().nvars();
    let bounds: Vec<u32> = (0..n)
        .map(|v| {
            lead.iter()
                .filter(|g| pure_var(g) == Some(v))
                .map(|g| g[v])
                .min()
                .unwrap_or(0)
        })
        .collect();
    let mut out = Vec::new();
    let mut cur = vec![0u32; n];
    'outer: loop {
        if !lead.iter().any(|g| g.iter().zip(&cur).all(|(a, b)| a <= b)) {
            out.push(Monomial::new(cur.clone()));
            if out.len() >= limit {
                break;
            }
        }
        for i in (0..n).rev() {
            cur[i] += 1;
            if cur[i] < bounds[i] {
                continue 'outer;
            }
            cur[i] = 0;
        }
        break;
    }
    Ok(Some(out))
}
