//! Ideal arithmetic through reduced Groebner bases.

mod buchberger;
mod ideal;

pub(crate) use buchberger::weighted_groebner_basis;
pub use buchberger::{
    pair_budget, reduced_groebner_basis, reduced_groebner_basis_with_budget, set_pair_budget,
    DEFAULT_PAIR_BUDGET, PAIR_BUDGET_ENV,
};
pub use ideal::{GroebnerBasis, Ideal};

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::poly::{Monomial, MonomialOrder, Polynomial, Ring, RingCtx, RESERVED_PREFIX};

pub fn buchberger(ideal: &Ideal, order: MonomialOrder) -> Result<Arc<GroebnerBasis>> {
    ideal.groebner_basis_in(order)
}

pub fn normal_form(f: &Polynomial, gb: &GroebnerBasis) -> Result<Polynomial> {
    if !gb.ring().same_space(f.ring()) {
        return Err(Error::ContextMismatch);
    }
    gb.normal_form(f)?.reorder(f.ring())
}

pub fn ideal_member(f: &Polynomial, ideal: &Ideal) -> Result<bool> {
    ideal.contains(f)
}

pub fn ideal_eq(a: &Ideal, b: &Ideal) -> Result<bool> {
    a.ideal_eq(b)
}

pub fn ideal_sum(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    a.check_ideal(b)?;
    Ideal::new(a.ring(), a.gens().iter().chain(b.gens()).cloned())
}

pub fn ideal_product(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    a.check_ideal(b)?;
    let b_gens: Vec<Polynomial> = b
        .gens()
        .iter()
        .map(|g| g.reorder(a.ring()))
        .collect::<Result<_>>()?;
    let mut out = Vec::with_capacity(a.gens().len() * b_gens.len());
    for f in a.gens() {
        for g in &b_gens {
            out.push(f.mul(g)?);
        }
    }
    Ideal::new(a.ring(), out)
}

/// Runs a Groebner basis under the block order eliminating the first `k`
/// variables of `ext` and keeps the elements free of them.
fn eliminate_block(ext: &Ring, gens: Vec<Polynomial>, k: usize) -> Result<Vec<Polynomial>> {
    let gb = reduced_groebner_basis(ext, &gens)?;
    Ok(gb.into_iter().filter(|g| g.avoids_vars(0..k)).collect())
}

/// `I ∩ F_p[x_{k+1}, ..., x_n]`, as an ideal of the original ring.
pub fn eliminate(ideal: &Ideal, k: usize) -> Result<Ideal> {
    let n = ideal.ring().nvars();
    if k == 0 || k >= n {
        return Err(Error::InvalidArgument(format!(
            "can only eliminate 1..{} of {n} variables, got {k}",
            n.saturating_sub(1)
        )));
    }
    let ext = ideal.ring().with_order(MonomialOrder::Elim(k))?;
    let gens: Vec<Polynomial> = ideal
        .gens()
        .iter()
        .map(|g| g.reorder(&ext))
        .collect::<Result<_>>()?;
    let kept = eliminate_block(&ext, gens, k)?;
    Ideal::new(ideal.ring(), kept)
}

/// A ring with `extra` auxiliary variables prepended (to be eliminated).
pub(crate) fn extended_ring(ring: &Ring, extra: &[String], order: MonomialOrder) -> Result<Ring> {
    let mut vars: Vec<String> = extra
        .iter()
        .map(|v| format!("{RESERVED_PREFIX}{v}"))
        .collect();
    vars.extend(ring.vars().iter().cloned());
    RingCtx::new_internal(ring.prime(), vars, order)
}

pub(crate) fn shift_in(f: &Polynomial, ext: &Ring, lead: &[u32]) -> Polynomial {
    f.map_monomials(ext, |m| {
        let mut e = lead.to_vec();
        e.extend_from_slice(m.exps());
        Monomial::new(e)
    })
}

pub(crate) fn project_out(f: &Polynomial, ring: &Ring, k: usize) -> Polynomial {
    f.map_monomials(ring, |m| Monomial::new(m.exps()[k..].to_vec()))
}

/// Ideal intersection via `t*I + (1-t)*J` and elimination of `t`.
pub fn intersect(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    a.check_ideal(b)?;
    let ring = a.ring();
    if a.is_zero() || b.is_zero() {
        return Ok(Ideal::zero(ring));
    }
    let ext = extended_ring(ring, &["t".to_string()], MonomialOrder::Elim(1))?;
    let mut gens = Vec::with_capacity(a.gens().len() + 2 * b.gens().len());
    for f in a.gens() {
        gens.push(shift_in(f, &ext, &[1]));
    }
    for g in b.gens() {
        let g0 = shift_in(g, &ext, &[0]);
        let gt = shift_in(g, &ext, &[1]);
        gens.push(g0.sub(&gt)?);
    }
    let kept = eliminate_block(&ext, gens, 1)?;
    Ideal::new(ring, kept.iter().map(|g| project_out(g, ring, 1)))
}

/// Intersection of a nonempty list of ideals, folded left to right.
pub fn intersect_all(ideals: &[Ideal]) -> Result<Ideal> {
    let (first, rest) = ideals
        .split_first()
        .ok_or_else(|| Error::InvalidArgument("empty intersection".into()))?;
    let mut acc = first.clone();
    for i in rest {
        acc = intersect(&acc, i)?;
    }
    Ok(acc)
}

/// `(I : g)` computed as `(I ∩ (g)) / g`.
pub fn colon_poly(ideal: &Ideal, g: &Polynomial) -> Result<Ideal> {
    ideal.check_poly(g)?;
    if g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let g = g.reorder(ideal.ring())?;
    let meet = intersect(ideal, &Ideal::principal(&g))?;
    let quotients: Vec<Polynomial> = meet
        .gens()
        .iter()
        .map(|h| h.exact_div(&g))
        .collect::<Result<_>>()?;
    Ideal::new(ideal.ring(), quotients)
}

/// `(I : J) = ∩_{g ∈ gens(J)} (I : g)`.
pub fn colon(ideal: &Ideal, by: &Ideal) -> Result<Ideal> {
    ideal.check_ideal(by)?;
    if by.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let parts: Vec<Ideal> = by
        .gens()
        .iter()
        .map(|g| colon_poly(ideal, g))
        .collect::<Result<_>>()?;
    intersect_all(&parts)
}
