//! Buchberger's algorithm with the Gebauer-Moeller pair update and the
//! sugar selection strategy.

use std::cmp::Ordering;
use std::sync::atomic::{AtomicU64, Ordering as AtomicOrdering};

use crate::error::{Error, Result};
use crate::poly::{Monomial, Polynomial, Ring, Term};

pub const DEFAULT_PAIR_BUDGET: u64 = 1_000_000;

/// Environment variable overriding the default S-pair budget.
pub const PAIR_BUDGET_ENV: &str = "FPLAB_PAIR_BUDGET";

static PAIR_BUDGET: AtomicU64 = AtomicU64::new(0);

/// Current S-pair budget per basis computation.
pub fn pair_budget() -> u64 {
    match PAIR_BUDGET.load(AtomicOrdering::Relaxed) {
        0 => {
            let b = std::env::var(PAIR_BUDGET_ENV)
                .ok()
                .and_then(|s| s.trim().parse::<u64>().ok())
                .filter(|b| *b > 0)
                .unwrap_or(DEFAULT_PAIR_BUDGET);
            PAIR_BUDGET.store(b, AtomicOrdering::Relaxed);
            b
        }
        b => b,
    }
}

pub fn set_pair_budget(budget: u64) {
    PAIR_BUDGET.store(budget.max(1), AtomicOrdering::Relaxed);
}

/// Fully reduces `f` modulo polynomials with monic leading terms.
/// The result has no term divisible by any of their leading monomials.
pub(crate) fn reduce(f: &Polynomial, basis: &[&Polynomial]) -> Polynomial {
    let ring = f.ring().clone();
    let mut rest = f.clone();
    let mut start = 0;
    let mut rem: Vec<Term> = Vec::new();
    while start < rest.len() {
        let t = &rest.terms()[start];
        let reducer = basis
            .iter()
            .find(|g| g.leading_mono().is_some_and(|lm| lm.divides(&t.mono)));
        match reducer {
            Some(g) => {
                let lm = g.leading_mono().unwrap();
                debug_assert_eq!(g.terms()[0].coeff, 1);
                let m = lm.quotient_of(&t.mono);
                rest = rest.sub_scaled_shift(start, t.coeff, &m, g);
                start = 0;
            }
            None => {
                rem.push(t.clone());
                start += 1;
            }
        }
    }
    Polynomial::from_sorted(&ring, rem)
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u64,
}

struct State {
    ring: Ring,
    weights: Vec<u64>,
    polys: Vec<Polynomial>,
    sugars: Vec<u64>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
}

impl State {
    fn wdeg(&self, m: &Monomial) -> u64 {
        m.exps()
            .iter()
            .zip(&self.weights)
            .map(|(&e, &w)| e as u64 * w)
            .sum()
    }

    fn poly_wdeg(&self, f: &Polynomial) -> u64 {
        f.terms()
            .iter()
            .map(|t| self.wdeg(&t.mono))
            .max()
            .unwrap_or(0)
    }

    fn pair_sugar(&self, i: usize, j: usize, lcm: &Monomial) -> u64 {
        let side = |k: usize| self.sugars[k] + self.wdeg(lcm) - self.wdeg(self.lm(k));
        side(i).max(side(j))
    }

    fn lm(&self, i: usize) -> &Monomial {
        self.polys[i].leading_mono().expect("nonzero basis element")
    }

    fn active_refs(&self) -> Vec<&Polynomial> {
        self.polys
            .iter()
            .zip(&self.active)
            .filter(|(_, a)| **a)
            .map(|(p, _)| p)
            .collect()
    }

    /// Inserts a new monic element and prunes pairs by the product and
    /// chain criteria.
    fn update(&mut self, h: Polynomial, sugar: u64) {
        let hi = self.polys.len();
        self.polys.push(h);
        self.sugars.push(sugar);
        self.active.push(true);
        let lh = self.lm(hi).clone();

        let cands: Vec<(usize, Monomial)> = (0..hi)
            .filter(|&g| self.active[g])
            .map(|g| (g, lh.lcm(self.lm(g))))
            .collect();

        let mut kept: Vec<(usize, Monomial)> = Vec::new();
        for (idx, (g1, l1)) in cands.iter().enumerate() {
            let coprime = lh.is_coprime(self.lm(*g1));
            let dominated = cands[idx + 1..].iter().any(|(_, l2)| l2.divides(l1))
                || kept.iter().any(|(_, l2)| l2.divides(l1));
            if coprime || !dominated {
                kept.push((*g1, l1.clone()));
            }
        }
        let new_pairs: Vec<Pair> = kept
            .into_iter()
            .filter(|(g, _)| !lh.is_coprime(self.lm(*g)))
            .map(|(g, lcm)| Pair {
                i: g,
                j: hi,
                sugar: self.pair_sugar(g, hi, &lcm),
                lcm,
            })
            .collect();

        let polys = &self.polys;
        let lm = |i: usize| polys[i].leading_mono().unwrap();
        self.pairs.retain(|pr| {
            !(lh.divides(&pr.lcm) && lm(pr.i).lcm(&lh) != pr.lcm && lh.lcm(lm(pr.j)) != pr.lcm)
        });
        self.pairs.extend(new_pairs);

        for g in 0..hi {
            if self.active[g] && lh.divides(self.lm(g)) {
                self.active[g] = false;
            }
        }
    }

    fn take_pair(&mut self) -> Option<Pair> {
        let order = self.ring.order();
        let best = self
            .pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                a.sugar
                    .cmp(&b.sugar)
                    .then(order.cmp(&a.lcm, &b.lcm))
                    .then(a.j.cmp(&b.j))
                    .then(a.i.cmp(&b.i))
            })
            .map(|(k, _)| k)?;
        Some(self.pairs.swap_remove(best))
    }

    fn spoly(&self, pr: &Pair) -> Result<Polynomial> {
        let (f, g) = (&self.polys[pr.i], &self.polys[pr.j]);
        let mf = self.lm(pr.i).quotient_of(&pr.lcm);
        let mg = self.lm(pr.j).quotient_of(&pr.lcm);
        let fm = f.mul_term(1, &mf)?;
        Ok(fm.sub_scaled_shift(0, 1, &mg, g))
    }
}

fn canonical_input(gens: &[Polynomial]) -> Vec<Polynomial> {
    let mut v: Vec<Polynomial> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.monic())
        .collect();
    if let Some(first) = v.first() {
        let order = first.ring().order();
        v.sort_by(|a, b| cmp_polys(order, a, b));
    }
    v.dedup();
    v
}

/// Total order on canonical polynomials: term by term, ascending.
pub(crate) fn cmp_polys(
    order: crate::poly::MonomialOrder,
    a: &Polynomial,
    b: &Polynomial,
) -> Ordering {
    for (ta, tb) in a.terms().iter().zip(b.terms()) {
        let o = order.cmp(&ta.mono, &tb.mono).then(ta.coeff.cmp(&tb.coeff));
        if o != Ordering::Equal {
            return o;
        }
    }
    a.len().cmp(&b.len())
}

/// The reduced Groebner basis of the ideal generated by `gens`, under the
/// order of `ring`. Output is sorted ascending by leading monomial; the zero
/// ideal yields an empty list and the unit ideal yields `[1]`.
pub fn reduced_groebner_basis(ring: &Ring, gens: &[Polynomial]) -> Result<Vec<Polynomial>> {
    reduced_groebner_basis_with_budget(ring, gens, pair_budget())
}

/// As [`reduced_groebner_basis`] with an explicit S-pair budget.
pub fn reduced_groebner_basis_with_budget(
    ring: &Ring,
    gens: &[Polynomial],
    budget: u64,
) -> Result<Vec<Polynomial>> {
    weighted_groebner_basis(ring, gens, &vec![1; ring.nvars()], budget)
}

/// Reduced Groebner basis where pair selection uses sugar measured in the
/// given variable weights. Weights only steer the computation; the result
/// is the same reduced basis.
pub(crate) fn weighted_groebner_basis(
    ring: &Ring,
    gens: &[Polynomial],
    weights: &[u64],
    budget: u64,
) -> Result<Vec<Polynomial>> {
    for g in gens {
        if g.ring() != ring {
            return Err(Error::ContextMismatch);
        }
    }
    let input = canonical_input(gens);
    if input.is_empty() {
        return Ok(Vec::new());
    }
    if input.iter().any(|g| g.is_constant()) {
        return Ok(vec![Polynomial::one(ring)]);
    }
    let mut st = State {
        ring: ring.clone(),
        weights: weights.to_vec(),
        polys: Vec::new(),
        sugars: Vec::new(),
        active: Vec::new(),
        pairs: Vec::new(),
    };
    for f in input {
        let h = reduce(&f, &st.active_refs());
        if h.is_zero() {
            continue;
        }
        if h.is_constant() {
            return Ok(vec![Polynomial::one(ring)]);
        }
        let sugar = st.poly_wdeg(&f).max(st.poly_wdeg(&h));
        st.update(h.monic(), sugar);
    }
    let mut processed: u64 = 0;
    while let Some(pr) = st.take_pair() {
        processed += 1;
        if processed > budget {
            return Err(Error::PairBudgetExceeded(budget));
        }
        let s = st.spoly(&pr)?;
        let h = reduce(&s, &st.active_refs());
        if h.is_zero() {
            continue;
        }
        if h.is_constant() {
            return Ok(vec![Polynomial::one(ring)]);
        }
        let sugar = pr.sugar.max(st.poly_wdeg(&h));
        st.update(h.monic(), sugar);
    }
    Ok(interreduce(
        ring,
        st.active_refs().into_iter().cloned().collect(),
    ))
}

/// Turns a minimal Groebner basis into the reduced one.
fn interreduce(ring: &Ring, mut basis: Vec<Polynomial>) -> Vec<Polynomial> {
    let order = ring.order();
    basis.sort_by(|a, b| order.cmp(a.leading_mono().unwrap(), b.leading_mono().unwrap()));
    let mut out = Vec::with_capacity(basis.len());
    for i in 0..basis.len() {
        let others: Vec<&Polynomial> = basis
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, g)| g)
            .collect();
        let g = &basis[i];
        let head = Polynomial::from_sorted(ring, vec![g.terms()[0].clone()]);
        let tail = Polynomial::from_sorted(ring, g.terms()[1..].to_vec());
        let r = reduce(&tail, &others);
        out.push(head.add(&r).expect("same ring"));
    }
    out
}
