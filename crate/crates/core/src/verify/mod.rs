//! Checks of multiplicity bounds on concrete rings, and the built-in example
//! suites.
//!
//! Nothing here decides F-injectivity or the generalized Cohen-Macaulay
//! property. The bound checks compute both sides of an inequality; whether
//! its hypotheses hold for the input is left to the caller.

mod suite;

pub use suite::{
    embedded_session, remark33_session_text, run_suite, CheckReport, SuiteName, SuiteReport,
};

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::field::Prime;
use crate::frobenius::{frobenius_closure, hsl_hypersurface, ClosureMembership, ClosureTester};
use crate::groebner::{ideal_product, ideal_sum, Ideal};
use crate::hilbert::{dimension, embedding_dimension, length_quotient, multiplicity, Length};
use crate::poly::{Monomial, MonomialOrder, Polynomial, Ring, RingCtx};

pub const DEFAULT_E_MAX: u32 = 4;
pub const DEFAULT_S_MAX: u32 = 10;

/// Outcome of a single check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Inconclusive,
    Error,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Inconclusive => "inconclusive",
            Verdict::Error => "error",
        })
    }
}

/// A nonnegative rational in lowest terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Rational {
    pub num: u64,
    pub den: u64,
}

impl Rational {
    pub fn new(num: u64, den: u64) -> Result<Rational> {
        if den == 0 {
            return Err(Error::InvalidArgument("zero denominator".into()));
        }
        let g = num.gcd(&den);
        Ok(Rational {
            num: num / g,
            den: den / g,
        })
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.num as u128 * other.den as u128).cmp(&(other.num as u128 * self.den as u128))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

/// Exact `C(v, d)`.
pub fn binom(v: u64, d: u64) -> Result<u64> {
    if d > v {
        return Err(Error::InvalidArgument(format!(
            "binom({v}, {d}) needs d <= v"
        )));
    }
    let k = d.min(v - d);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (v - i) / (i + 1) is always integral at this point
        acc = acc
            .checked_mul((v - i) as u128)
            .ok_or_else(|| Error::InvalidArgument(format!("binom({v}, {d}) overflows")))?
            / (i + 1) as u128;
    }
    u64::try_from(acc).map_err(|_| Error::InvalidArgument(format!("binom({v}, {d}) overflows")))
}

/// Named intermediate value attached to a [`BoundReport`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Aux {
    Int(u64),
    Ratio(Rational),
    Flag(bool),
    Text(String),
}

/// Which right-hand side a [`BoundReport`] compares against.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundShape {
    /// `C(v, d)`
    Binomial,
    /// `Q^(v-d) C(v, d)`
    FrobeniusScaled { q: u64 },
    /// `C(v, d) + excess`
    ClosureExcess { excess: u64 },
}

impl BoundShape {
    fn name(self) -> &'static str {
        match self {
            BoundShape::Binomial => "binomial",
            BoundShape::FrobeniusScaled { .. } => "frobenius_scaled",
            BoundShape::ClosureExcess { .. } => "closure_excess",
        }
    }
}

/// `e <= bound(v, d)` for one ring. `bound` and `holds` are derived from
/// the stored components on every call.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub ring_description: String,
    pub e: u64,
    pub v: u64,
    pub d: u64,
    pub shape: BoundShape,
    pub auxiliaries: BTreeMap<String, Aux>,
}

impl BoundReport {
    /// The right-hand side, saturating at `u64::MAX` (which can only make
    /// `holds` more permissive when the true value is larger still).
    pub fn bound(&self) -> u64 {
        let c = binom(self.v, self.d).unwrap_or(u64::MAX);
        match self.shape {
            BoundShape::Binomial => c,
            BoundShape::FrobeniusScaled { q } => {
                let exp = u32::try_from(self.v - self.d).unwrap_or(u32::MAX);
                q.checked_pow(exp)
                    .and_then(|f| f.checked_mul(c))
                    .unwrap_or(u64::MAX)
            }
            BoundShape::ClosureExcess { excess } => c.saturating_add(excess),
        }
    }

    pub fn holds(&self) -> bool {
        self.e <= self.bound()
    }

    pub fn verdict(&self) -> Verdict {
        if self.holds() {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }
}

impl Serialize for BoundReport {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("BoundReport", 8)?;
        st.serialize_field("ring", &self.ring_description)?;
        st.serialize_field("shape", self.shape.name())?;
        st.serialize_field("e", &self.e)?;
        st.serialize_field("v", &self.v)?;
        st.serialize_field("d", &self.d)?;
        st.serialize_field("bound", &self.bound())?;
        st.serialize_field("holds", &self.holds())?;
        st.serialize_field("auxiliaries", &self.auxiliaries)?;
        st.end()
    }
}

struct Invariants {
    e: u64,
    v: u64,
    d: u64,
}

fn invariants(ideal: &Ideal) -> Result<Invariants> {
    if !ideal.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    Ok(Invariants {
        e: multiplicity(ideal)?,
        v: embedding_dimension(ideal)? as u64,
        d: dimension(ideal)? as u64,
    })
}

/// `e(S/I) <= C(v, d)` for a homogeneous proper ideal.
pub fn check_hw_bound(ideal: &Ideal) -> Result<BoundReport> {
    let inv = invariants(ideal)?;
    Ok(BoundReport {
        ring_description: ideal.ring().describe(),
        e: inv.e,
        v: inv.v,
        d: inv.d,
        shape: BoundShape::Binomial,
        auxiliaries: BTreeMap::new(),
    })
}

/// `e(S/(f)) <= p^(η (v-d)) C(v, d)` with `η` the HSL number of the
/// hypersurface. Inconclusive when the HSL chain has not stabilized by
/// `e_max`.
pub fn check_hsl_bound(f: &Polynomial, e_max: u32) -> Result<BoundReport> {
    if !f.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let ideal = Ideal::principal(f);
    let inv = invariants(&ideal)?;
    let chain = hsl_hypersurface(f, e_max)?;
    let eta = chain.stabilized_at.ok_or_else(|| {
        Error::Inconclusive(format!("HSL chain not stable within e_max = {e_max}"))
    })?;
    let q = (f.ring().p() as u64)
        .checked_pow(eta)
        .ok_or(Error::ExponentOverflow)?;
    let mut auxiliaries = BTreeMap::new();
    auxiliaries.insert("eta".into(), Aux::Int(eta as u64));
    auxiliaries.insert("Q".into(), Aux::Int(q));
    Ok(BoundReport {
        ring_description: f.ring().describe(),
        e: inv.e,
        v: inv.v,
        d: inv.d,
        shape: BoundShape::FrobeniusScaled { q },
        auxiliaries,
    })
}

/// `((n-1)p + 1) / (np)`.
pub fn gamma(n: u64, p: Prime) -> Result<Rational> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "gamma needs n >= 2, got {n}"
        )));
    }
    let p = p.get() as u64;
    Rational::new((n - 1) * p + 1, n * p)
}

/// `deg f / (C(n, n-1) p^η)` assembled from the constructed family.
pub fn gamma_from_family(n: u64, p: Prime, e_max: u32) -> Result<Rational> {
    let (f, _) = make_remark33_family(n, p)?;
    let report = check_hsl_bound(&f, e_max)?;
    let q = match report.shape {
        BoundShape::FrobeniusScaled { q } => q,
        _ => unreachable!("check_hsl_bound always scales by Q"),
    };
    let deg = f.degree().expect("nonzero");
    Rational::new(deg, binom(n, n - 1)? * q)
}

/// The ring `F_p[x1, ..., xn]` in grevlex.
pub fn indexed_ring(n: u64, p: Prime) -> Result<Ring> {
    let vars: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    RingCtx::new(p, &vars, MonomialOrder::Grevlex)
}

/// `f = Σ_i x_i Π_{j≠i} x_j^p` and `h = x_1 ⋯ x_{n-1}`, so that
/// `∂f/∂x_n = h^p`.
pub fn make_remark33_family(n: u64, p: Prime) -> Result<(Polynomial, Polynomial)> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "family needs n >= 2, got {n}"
        )));
    }
    let ring = indexed_ring(n, p)?;
    let n = n as usize;
    let terms = (0..n).map(|i| {
        let exps: Vec<u32> = (0..n).map(|j| if j == i { 1 } else { p.get() }).collect();
        (1, Monomial::new(exps))
    });
    let f = Polynomial::from_terms(&ring, terms);
    let h_exps: Vec<u32> = (0..n).map(|j| u32::from(j + 1 < n)).collect();
    let h = Polynomial::monomial(&ring, 1, Monomial::new(h_exps));
    Ok((f, h))
}

/// Monomials of degree `k` as polynomials, in descending lex order.
pub fn monomials_of_degree(ring: &Ring, k: u32) -> Vec<Polynomial> {
    fn go(n: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if cur.len() + 1 == n {
            cur.push(left);
            out.push(Monomial::new(cur.clone()));
            cur.pop();
            return;
        }
        for a in (0..=left).rev() {
            cur.push(a);
            go(n, left - a, cur, out);
            cur.pop();
        }
    }
    let n = ring.nvars();
    let mut out = Vec::new();
    if n == 0 {
        if k == 0 {
            out.push(Monomial::one(0));
        }
    } else {
        go(n, k, &mut Vec::with_capacity(n), &mut out);
    }
    out.into_iter()
        .map(|m| Polynomial::monomial(ring, 1, m))
        .collect()
}

/// Result of searching for `m^(s+1) ⊆ J m^s + I`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ReductionOutcome {
    ReductionAt { s: u32 },
    NotShownUpTo { s_max: u32 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReductionReport {
    pub outcome: ReductionOutcome,
    /// Number of generators of `J`.
    pub generators: usize,
    /// `dim S/I`.
    pub dimension: usize,
    /// `generators == dimension`.
    pub minimal: bool,
}

impl ReductionReport {
    pub fn verdict(&self) -> Verdict {
        match self.outcome {
            ReductionOutcome::ReductionAt { .. } => Verdict::Pass,
            ReductionOutcome::NotShownUpTo { .. } => Verdict::Inconclusive,
        }
    }
}

/// Whether `J m^s + I ⊇ m^(s+1)` in `S`.
pub fn reduction_holds_at(j: &Ideal, ambient: &Ideal, s: u32) -> Result<bool> {
    j.check_ideal(ambient)?;
    let ring = j.ring();
    let ms = Ideal::new(ring, monomials_of_degree(ring, s))?;
    let target = ideal_sum(&ideal_product(j, &ms)?, ambient)?;
    for m in monomials_of_degree(ring, s + 1) {
        if !target.contains(&m)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Smallest `s <= s_max` with `m^(s+1) ⊆ J m^s + I`, where `m` is the ideal
/// of all variables.
pub fn is_reduction(j: &Ideal, ambient: &Ideal, s_max: u32) -> Result<ReductionReport> {
    j.check_ideal(ambient)?;
    if !j.is_homogeneous() || !ambient.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let dim = dimension(ambient)?;
    let mut outcome = ReductionOutcome::NotShownUpTo { s_max };
    for s in 0..=s_max {
        if reduction_holds_at(j, ambient, s)? {
            outcome = ReductionOutcome::ReductionAt { s };
            break;
        }
    }
    let generators = j.gens().len();
    Ok(ReductionReport {
        outcome,
        generators,
        dimension: dim,
        minimal: generators == dim,
    })
}

/// Frobenius-closure membership of every monomial of degree `d + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SkodaReport {
    pub d: usize,
    pub degree: u32,
    pub tested: usize,
    pub members: usize,
    /// Largest `e` any witness needed.
    pub max_witness_e: u32,
    /// Monomials with no witness up to `e_max`.
    pub undecided: Vec<String>,
    pub e_max: u32,
}

impl SkodaReport {
    pub fn verdict(&self) -> Verdict {
        if self.undecided.is_empty() {
            Verdict::Pass
        } else {
            Verdict::Inconclusive
        }
    }
}

fn require_parameter_count(j: &Ideal, d: usize) -> Result<()> {
    if j.gens().len() != d {
        return Err(Error::InvalidArgument(format!(
            "J has {} generators but dim S/I = {d}",
            j.gens().len()
        )));
    }
    Ok(())
}

/// Tests `m^(d+1) ⊆ J^F` in `S/I` monomial by monomial. `J` is assumed to
/// be a reduction of `m` generated by `d = dim S/I` elements.
pub fn check_skoda(j: &Ideal, ambient: &Ideal, e_max: u32) -> Result<SkodaReport> {
    j.check_ideal(ambient)?;
    let d = dimension(ambient)?;
    require_parameter_count(j, d)?;
    let degree = d as u32 + 1;
    let mut tester = ClosureTester::new(j, ambient, e_max)?;
    let monos = monomials_of_degree(j.ring(), degree);
    let mut report = SkodaReport {
        d,
        degree,
        tested: monos.len(),
        members: 0,
        max_witness_e: 0,
        undecided: Vec::new(),
        e_max,
    };
    for m in &monos {
        match tester.test(m)? {
            ClosureMembership::Member(w) => {
                report.members += 1;
                report.max_witness_e = report.max_witness_e.max(w.e);
            }
            ClosureMembership::NonMemberUpTo { .. } => report.undecided.push(m.to_string()),
        }
    }
    Ok(report)
}

fn finite_length(ideal: &Ideal, what: &str) -> Result<u64> {
    match length_quotient(ideal)? {
        Length::Finite(l) => Ok(l),
        Length::Infinite => Err(Error::InvalidArgument(format!(
            "{what} does not have finite length"
        ))),
    }
}

/// `e(S/I) <= C(v, d) + ℓ(J^F/J)` with the closure read off the first
/// repeated entry of the chain `P_e`. Inconclusive when no two consecutive
/// entries agree by `e_max`.
pub fn check_cor24b(j: &Ideal, ambient: &Ideal, e_max: u32) -> Result<BoundReport> {
    j.check_ideal(ambient)?;
    let inv = invariants(ambient)?;
    require_parameter_count(j, inv.d as usize)?;
    let chain = frobenius_closure(j, ambient, e_max)?;
    let stable_at = chain.stabilized_at.ok_or_else(|| {
        Error::Inconclusive(format!("closure chain not stable within e_max = {e_max}"))
    })?;
    let closure = chain.stable().expect("stable entry");
    let len_j = finite_length(&ideal_sum(j, ambient)?, "S/(J + I)")?;
    let len_closure = finite_length(closure, "S/(J^F + I)")?;
    let excess = len_j - len_closure;
    let mut auxiliaries = BTreeMap::new();
    auxiliaries.insert("length_J".into(), Aux::Int(len_j));
    auxiliaries.insert("length_JF".into(), Aux::Int(len_closure));
    auxiliaries.insert("length_JF_over_J".into(), Aux::Int(excess));
    auxiliaries.insert("stabilized_at".into(), Aux::Int(stable_at as u64));
    auxiliaries.insert("certified".into(), Aux::Flag(chain.certified));
    Ok(BoundReport {
        ring_description: ambient.ring().describe(),
        e: inv.e,
        v: inv.v,
        d: inv.d,
        shape: BoundShape::ClosureExcess { excess },
        auxiliaries,
    })
}
