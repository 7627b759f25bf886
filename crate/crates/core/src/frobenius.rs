//! Prime-characteristic operations: bracket powers, Frobenius roots
//! `I_e`, Frobenius preimages and closures, Fedder's F-purity criterion and
//! the HSL number of a hypersurface.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::{colon, pair_budget, weighted_groebner_basis};
use crate::groebner::{ideal_product, ideal_sum, Ideal};
use crate::poly::{frobenius_q, Monomial, MonomialOrder, Polynomial, RingCtx, RESERVED_PREFIX};

/// `I^[p^e]`: the ideal generated by `p^e`-th powers of the generators.
pub fn bracket_power(ideal: &Ideal, e: u32) -> Result<Ideal> {
    let gens: Vec<Polynomial> = ideal
        .gens()
        .iter()
        .map(|g| g.frobenius(e))
        .collect::<Result<_>>()?;
    Ideal::new(ideal.ring(), gens)
}

/// `I_e(g)`, the smallest ideal `K` with `g ∈ K^[p^e]`.
///
/// Each term `c x^β` is split as `c x^(qγ + α)` with `0 <= α < q`
/// componentwise; the generators are `h_α = Σ c^(1/q) x^γ`, one per residue
/// class `α` occurring in `g`. Coefficients are their own `q`-th roots in F_p.
pub fn frobenius_root(g: &Polynomial, e: u32) -> Result<Ideal> {
    if g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if e == 0 {
        return Err(Error::InvalidArgument("Frobenius root needs e >= 1".into()));
    }
    let ring = g.ring();
    let q = frobenius_q(ring.p(), e)? as u32;
    let mut classes: BTreeMap<Vec<u32>, Vec<(u32, Monomial)>> = BTreeMap::new();
    for t in g.terms() {
        let alpha: Vec<u32> = t.mono.exps().iter().map(|&b| b % q).collect();
        let gamma: Vec<u32> = t.mono.exps().iter().map(|&b| b / q).collect();
        classes
            .entry(alpha)
            .or_default()
            .push((t.coeff, Monomial::new(gamma)));
    }
    Ideal::new(
        ring,
        classes
            .into_values()
            .map(|terms| Polynomial::from_terms(ring, terms)),
    )
}

/// `I_e(A) = Σ_g I_e(g)` over the generators of `A`.
pub fn frobenius_root_ideal(a: &Ideal, e: u32) -> Result<Ideal> {
    if a.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let mut gens = Vec::new();
    for g in a.gens() {
        gens.extend(frobenius_root(g, e)?.gens().iter().cloned());
    }
    Ideal::new(a.ring(), gens)
}

/// `{x : x^(p^e) ∈ A}`: the preimage of `A` under `x_i ↦ x_i^(p^e)`,
/// computed by eliminating `x` from `A(x) + (y_i - x_i^(p^e))` and renaming
/// `y` back to `x`.
pub fn frobenius_preimage(a: &Ideal, e: u32) -> Result<Ideal> {
    let ring = a.ring();
    if e == 0 {
        return Ok(a.clone());
    }
    let q = frobenius_q(ring.p(), e)? as u32;
    let n = ring.nvars();
    let mut vars: Vec<String> = ring.vars().to_vec();
    vars.extend(ring.vars().iter().map(|v| format!("{RESERVED_PREFIX}{v}")));
    let ext = RingCtx::new_internal(ring.prime(), vars, MonomialOrder::Elim(n))?;

    let mut gens = Vec::with_capacity(a.gens().len() + n);
    for g in a.gens() {
        gens.push(g.map_monomials(&ext, |m| {
            let mut v = m.exps().to_vec();
            v.resize(2 * n, 0);
            Monomial::new(v)
        }));
    }
    for i in 0..n {
        let mut xq = vec![0; 2 * n];
        xq[i] = q;
        let mut y = vec![0; 2 * n];
        y[n + i] = 1;
        gens.push(Polynomial::from_terms(
            &ext,
            [(1, Monomial::new(y)), (ring.p() - 1, Monomial::new(xq))],
        ));
    }
    // weighting @x_i by q makes @x_i - x_i^q homogeneous for sugar
    let weights: Vec<u64> = (0..2 * n)
        .map(|i| if i < n { 1 } else { q as u64 })
        .collect();
    let gb = weighted_groebner_basis(&ext, &gens, &weights, pair_budget())?;
    let kept = gb
        .into_iter()
        .filter(|g| g.avoids_vars(0..n))
        .map(|g| g.map_monomials(ring, |m| Monomial::new(m.exps()[n..].to_vec())));
    Ideal::new(ring, kept)
}

/// Direction of a Frobenius chain.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ChainDirection {
    Ascending,
    Descending,
}

/// A chain of ideals produced by iterating a Frobenius construction.
#[derive(Clone, Debug)]
pub struct FrobeniusChainReport {
    pub direction: ChainDirection,
    /// Index of `chain[0]` (1 for closure chains, 0 for HSL chains).
    pub first_index: u32,
    pub chain: Vec<Ideal>,
    /// First index `e` with `C_{e+1} = C_e`.
    pub stabilized_at: Option<u32>,
    pub certified: bool,
}

impl FrobeniusChainReport {
    /// The entry at chain index `e`.
    pub fn entry(&self, e: u32) -> Option<&Ideal> {
        e.checked_sub(self.first_index)
            .and_then(|k| self.chain.get(k as usize))
    }

    /// The stable entry, when the chain stabilized.
    pub fn stable(&self) -> Option<&Ideal> {
        self.stabilized_at.and_then(|e| self.entry(e))
    }
}

#[derive(Serialize)]
struct ChainJson {
    direction: ChainDirection,
    first_index: u32,
    chain: Vec<Vec<String>>,
    stabilized_at: Option<u32>,
    certified: bool,
}

impl Serialize for FrobeniusChainReport {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let chain = self
            .chain
            .iter()
            .map(|i| {
                i.grevlex_basis()
                    .map(|gb| gb.elements().iter().map(|g| g.to_string()).collect())
                    .unwrap_or_else(|e| vec![format!("<{e}>")])
            })
            .collect();
        ChainJson {
            direction: self.direction,
            first_index: self.first_index,
            chain,
            stabilized_at: self.stabilized_at,
            certified: self.certified,
        }
        .serialize(s)
    }
}

fn ambient_sum(j: &Ideal, ambient: &Ideal) -> Result<Ideal> {
    ideal_sum(j, ambient)
}

/// Ascending chain `P_e = {x : x^(p^e) ∈ J^[p^e] + I} + I`, `e = 1..e_max`.
/// Equal consecutive entries do not prove `P_e = J^F`; the report is only
/// `certified` through [`frobenius_closure_with_bound`].
pub fn frobenius_closure(j: &Ideal, ambient: &Ideal, e_max: u32) -> Result<FrobeniusChainReport> {
    frobenius_closure_with_bound(j, ambient, e_max, None)
}

/// As [`frobenius_closure`], where `proven_bound = Some(b)` asserts (from
/// theory supplied by the caller) that `J^F = P_max(b,1)`. The chain is then
/// certified when it reaches that index.
pub fn frobenius_closure_with_bound(
    j: &Ideal,
    ambient: &Ideal,
    e_max: u32,
    proven_bound: Option<u32>,
) -> Result<FrobeniusChainReport> {
    if e_max == 0 {
        return Err(Error::InvalidArgument("e_max must be at least 1".into()));
    }
    j.check_ideal(ambient)?;
    let mut chain: Vec<Ideal> = Vec::new();
    let mut stabilized_at = None;
    for e in 1..=e_max {
        let target = ambient_sum(&bracket_power(j, e)?, ambient)?;
        let pe = ambient_sum(&frobenius_preimage(&target, e)?, ambient)?;
        if let Some(prev) = chain.last() {
            if stabilized_at.is_none() && prev.ideal_eq(&pe)? {
                stabilized_at = Some(e - 1);
            }
        }
        chain.push(pe);
    }
    let certified = proven_bound.is_some_and(|b| b.max(1) <= e_max);
    if certified {
        let b = proven_bound.unwrap().max(1);
        stabilized_at = Some(stabilized_at.map_or(b, |s| s.min(b)));
    }
    Ok(FrobeniusChainReport {
        direction: ChainDirection::Ascending,
        first_index: 1,
        chain,
        stabilized_at,
        certified,
    })
}

/// Evidence that `element^q ∈ J^[q] + I` with `q = p^e`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClosureWitness {
    #[serde(serialize_with = "ser_poly")]
    pub element: Polynomial,
    pub e: u32,
    pub q: u64,
}

fn ser_poly<S: serde::Serializer>(p: &Polynomial, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(p)
}

/// Outcome of a bounded Frobenius-closure membership search.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ClosureMembership {
    Member(ClosureWitness),
    /// No witness with `e <= e_max`; says nothing about larger `e`.
    NonMemberUpTo {
        e_max: u32,
    },
}

impl ClosureMembership {
    pub fn is_member(&self) -> bool {
        matches!(self, ClosureMembership::Member(_))
    }
}

/// Tests many elements for Frobenius-closure membership, building each
/// `J^[q] + I` (and its basis) once.
pub struct ClosureTester {
    j: Ideal,
    ambient: Ideal,
    levels: Vec<Ideal>,
    e_max: u32,
}

impl ClosureTester {
    pub fn new(j: &Ideal, ambient: &Ideal, e_max: u32) -> Result<Self> {
        if e_max == 0 {
            return Err(Error::InvalidArgument("e_max must be at least 1".into()));
        }
        j.check_ideal(ambient)?;
        Ok(ClosureTester {
            j: j.clone(),
            ambient: ambient.clone(),
            levels: Vec::new(),
            e_max,
        })
    }

    fn level(&mut self, e: u32) -> Result<&Ideal> {
        while self.levels.len() < e as usize {
            let next = self.levels.len() as u32 + 1;
            let lvl = ideal_sum(&bracket_power(&self.j, next)?, &self.ambient)?;
            self.levels.push(lvl);
        }
        Ok(&self.levels[e as usize - 1])
    }

    pub fn test(&mut self, x: &Polynomial) -> Result<ClosureMembership> {
        self.j.check_poly(x)?;
        let p = x.ring().p();
        for e in 1..=self.e_max {
            let xq = x.frobenius(e)?;
            if self.level(e)?.contains(&xq)? {
                return Ok(ClosureMembership::Member(ClosureWitness {
                    element: x.clone(),
                    e,
                    q: frobenius_q(p, e)?,
                }));
            }
        }
        Ok(ClosureMembership::NonMemberUpTo { e_max: self.e_max })
    }
}

/// Searches `e = 1..e_max` for `x^(p^e) ∈ J^[p^e] + I`.
pub fn in_frobenius_closure(
    x: &Polynomial,
    j: &Ideal,
    ambient: &Ideal,
    e_max: u32,
) -> Result<ClosureMembership> {
    ClosureTester::new(j, ambient, e_max)?.test(x)
}

/// True when every term has some exponent `>= p`, i.e. `f ∈ m^[p]`.
fn in_frobenius_power_of_maximal(f: &Polynomial) -> bool {
    let p = f.ring().p();
    f.terms()
        .iter()
        .all(|t| t.mono.exps().iter().any(|&e| e >= p))
}

/// Fedder's criterion at the homogeneous maximal ideal:
/// `S/I` is F-pure iff `(I^[p] : I) ⊄ m^[p]`.
pub fn fedder_is_fpure(ideal: &Ideal) -> Result<bool> {
    if ideal.is_unit()? {
        return Err(Error::UnitIdeal);
    }
    if ideal.is_zero() {
        return Ok(true);
    }
    let c = colon(&bracket_power(ideal, 1)?, ideal)?;
    Ok(c.gens().iter().any(|g| !in_frobenius_power_of_maximal(g)))
}

/// Descending chain `C_0 = (1)`, `C_{e+1} = I_1(f^(p-1) C_e)`; the HSL number
/// `η` is the first `e` with `C_{e+1} = C_e`. Once two consecutive entries
/// agree the chain is constant, so stabilization is conclusive.
pub fn hsl_hypersurface(f: &Polynomial, e_max: u32) -> Result<FrobeniusChainReport> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.is_constant() {
        return Err(Error::UnitIdeal);
    }
    let ring = f.ring();
    let fp = Ideal::principal(&f.pow(ring.p() as u64 - 1)?);
    let mut chain = vec![Ideal::unit(ring)];
    let mut stabilized_at = None;
    for e in 0..=e_max {
        let cur = chain.last().unwrap();
        let gens = Ideal::new(ring, cur.grevlex_basis()?.elements().iter().cloned())?;
        let next = frobenius_root_ideal(&ideal_product(&fp, &gens)?, 1)?;
        let stop = next.ideal_eq(cur)?;
        chain.push(next);
        if stop {
            stabilized_at = Some(e);
            break;
        }
    }
    Ok(FrobeniusChainReport {
        direction: ChainDirection::Descending,
        first_index: 0,
        chain,
        certified: stabilized_at.is_some(),
        stabilized_at,
    })
}
