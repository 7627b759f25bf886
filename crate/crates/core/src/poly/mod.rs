//! Sparse multivariate polynomials over F_p.
//!
//! A [`Polynomial`] is a list of nonzero terms sorted strictly descending in
//! its ring's monomial order, so two polynomials over the same ring are equal
//! exactly when their term lists are.

mod monomial;
mod order;
mod parse;
mod ring;

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

pub use monomial::Monomial;
pub use order::{mono_cmp, MonomialOrder};
pub use parse::{format_poly, parse_poly, parse_poly_list};
pub(crate) use ring::RESERVED_PREFIX;
pub use ring::{Ring, RingCtx, MAX_USER_VARS};

use crate::error::{Error, Result};
use crate::field::FpScalar;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub coeff: u32,
    pub mono: Monomial,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    ring: Ring,
    terms: Vec<Term>,
}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &Ring, c: i64) -> Self {
        let c = ring.prime().reduce(c);
        Self::monomial(ring, c, Monomial::one(ring.nvars()))
    }

    pub fn one(ring: &Ring) -> Self {
        Self::constant(ring, 1)
    }

    pub fn var(ring: &Ring, i: usize) -> Self {
        Self::monomial(ring, 1, Monomial::var(ring.nvars(), i))
    }

    pub fn monomial(ring: &Ring, coeff: u32, mono: Monomial) -> Self {
        let coeff = coeff % ring.p();
        let terms = if coeff == 0 {
            Vec::new()
        } else {
            vec![Term { coeff, mono }]
        };
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Builds a canonical polynomial from arbitrary (coefficient, monomial)
    /// pairs: like monomials are combined and zero terms dropped.
    pub fn from_terms(ring: &Ring, terms: impl IntoIterator<Item = (u32, Monomial)>) -> Self {
        let p = ring.prime();
        let mut acc: HashMap<Monomial, u32> = HashMap::new();
        for (c, m) in terms {
            debug_assert_eq!(m.len(), ring.nvars());
            let e = acc.entry(m).or_insert(0);
            *e = p.add(*e, c % p.get());
        }
        let mut terms: Vec<Term> = acc
            .into_iter()
            .filter(|(_, c)| *c != 0)
            .map(|(mono, coeff)| Term { coeff, mono })
            .collect();
        let order = ring.order();
        terms.sort_by(|a, b| order.cmp(&b.mono, &a.mono));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Wraps terms that are already canonical.
    pub(crate) fn from_sorted(ring: &Ring, terms: Vec<Term>) -> Self {
        debug_assert!(terms
            .windows(2)
            .all(|w| ring.order().cmp(&w[0].mono, &w[1].mono) == Ordering::Greater));
        debug_assert!(terms.iter().all(|t| t.coeff != 0));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.mono.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn leading_mono(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.mono)
    }

    pub fn leading_coeff(&self) -> Option<FpScalar> {
        self.terms
            .first()
            .map(|t| FpScalar::new(t.coeff as i64, self.ring.prime()))
    }

    /// Maximal total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u64> {
        self.terms.iter().map(|t| t.mono.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.iter().map(|t| t.mono.degree());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::ContextMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.combine(other, 1))
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.combine(other, self.ring.p() - 1))
    }

    pub fn neg(&self) -> Polynomial {
        self.scale(self.ring.p() - 1)
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let p = self.ring.prime();
        let mut out = Vec::with_capacity(self.len() * other.len());
        for a in &self.terms {
            for b in &other.terms {
                out.push((p.mul(a.coeff, b.coeff), a.mono.checked_mul(&b.mono)?));
            }
        }
        Ok(Polynomial::from_terms(&self.ring, out))
    }

    /// Multiplies by a scalar residue.
    pub fn scale(&self, c: u32) -> Polynomial {
        let p = self.ring.prime();
        let c = c % p.get();
        if c == 0 {
            return Polynomial::zero(&self.ring);
        }
        let terms = self
            .terms
            .iter()
            .map(|t| Term {
                coeff: p.mul(t.coeff, c),
                mono: t.mono.clone(),
            })
            .collect();
        Polynomial::from_sorted(&self.ring, terms)
    }

    /// Multiplies by `c * m`; the order is multiplicative so no re-sort.
    pub fn mul_term(&self, c: u32, m: &Monomial) -> Result<Polynomial> {
        let p = self.ring.prime();
        let c = c % p.get();
        if c == 0 {
            return Ok(Polynomial::zero(&self.ring));
        }
        let mut terms = Vec::with_capacity(self.len());
        for t in &self.terms {
            terms.push(Term {
                coeff: p.mul(t.coeff, c),
                mono: t.mono.checked_mul(m)?,
            });
        }
        Ok(Polynomial::from_sorted(&self.ring, terms))
    }

    /// Scales so the leading coefficient is 1. Zero stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.terms.first() {
            None => self.clone(),
            Some(t) if t.coeff == 1 => self.clone(),
            Some(t) => {
                let inv = self.ring.prime().inv(t.coeff).expect("nonzero coefficient");
                self.scale(inv)
            }
        }
    }

    /// `self + factor * other` by a single ordered merge.
    fn combine(&self, other: &Polynomial, factor: u32) -> Polynomial {
        let p = self.ring.prime();
        let order = self.ring.order();
        let mut out = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match order.cmp(&a[i].mono, &b[j].mono) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(Term {
                        coeff: p.mul(b[j].coeff, factor),
                        mono: b[j].mono.clone(),
                    });
                    j += 1;
                }
                Ordering::Equal => {
                    let c = p.add(a[i].coeff, p.mul(b[j].coeff, factor));
                    if c != 0 {
                        out.push(Term {
                            coeff: c,
                            mono: a[i].mono.clone(),
                        });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        for t in &b[j..] {
            out.push(Term {
                coeff: p.mul(t.coeff, factor),
                mono: t.mono.clone(),
            });
        }
        out.retain(|t| t.coeff != 0);
        Polynomial::from_sorted(&self.ring, out)
    }

    /// `self - c * m * g`, skipping terms of `self` before `start`.
    /// Used by reduction where `g`'s shifted terms never overflow.
    pub(crate) fn sub_scaled_shift(
        &self,
        start: usize,
        c: u32,
        m: &Monomial,
        g: &Polynomial,
    ) -> Polynomial {
        let p = self.ring.prime();
        let order = self.ring.order();
        let neg = p.neg(c);
        let a = &self.terms[start..];
        let b = &g.terms;
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        let mut shifted: Option<Monomial> = b.first().map(|t| t.mono.mul(m));
        while i < a.len() && j < b.len() {
            let sm = shifted.as_ref().unwrap();
            match order.cmp(&a[i].mono, sm) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(Term {
                        coeff: p.mul(b[j].coeff, neg),
                        mono: shifted.take().unwrap(),
                    });
                    j += 1;
                    shifted = b.get(j).map(|t| t.mono.mul(m));
                }
                Ordering::Equal => {
                    let cc = p.add(a[i].coeff, p.mul(b[j].coeff, neg));
                    if cc != 0 {
                        out.push(Term {
                            coeff: cc,
                            mono: a[i].mono.clone(),
                        });
                    }
                    i += 1;
                    j += 1;
                    shifted = b.get(j).map(|t| t.mono.mul(m));
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        while j < b.len() {
            out.push(Term {
                coeff: p.mul(b[j].coeff, neg),
                mono: b[j].mono.mul(m),
            });
            j += 1;
        }
        out.retain(|t| t.coeff != 0);
        Polynomial::from_sorted(&self.ring, out)
    }

    /// Exact power by repeated squaring.
    pub fn pow(&self, mut k: u64) -> Result<Polynomial> {
        let mut acc = Polynomial::one(&self.ring);
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// `self^(p^e)`, computed termwise: each `c x^a` becomes `c x^(p^e a)`.
    pub fn frobenius(&self, e: u32) -> Result<Polynomial> {
        let q = frobenius_q(self.ring.p(), e)?;
        if q == 1 {
            return Ok(self.clone());
        }
        let mut terms = Vec::with_capacity(self.len());
        for t in &self.terms {
            terms.push(Term {
                coeff: t.coeff,
                mono: t.mono.scaled(q)?,
            });
        }
        Ok(Polynomial::from_sorted(&self.ring, terms))
    }

    /// Re-sorts into another ring over the same variables (typically a
    /// different monomial order).
    pub fn reorder(&self, ring: &Ring) -> Result<Polynomial> {
        if !self.ring.same_space(ring) {
            return Err(Error::ContextMismatch);
        }
        if self.ring.order() == ring.order() {
            return Ok(Polynomial {
                ring: ring.clone(),
                terms: self.terms.clone(),
            });
        }
        let mut terms = self.terms.clone();
        let order = ring.order();
        terms.sort_by(|a, b| order.cmp(&b.mono, &a.mono));
        Ok(Polynomial {
            ring: ring.clone(),
            terms,
        })
    }

    /// Transports the polynomial into `ring` by mapping each exponent vector.
    pub(crate) fn map_monomials(
        &self,
        ring: &Ring,
        f: impl Fn(&Monomial) -> Monomial,
    ) -> Polynomial {
        Polynomial::from_terms(ring, self.terms.iter().map(|t| (t.coeff, f(&t.mono))))
    }

    /// True when every monomial is 1 in the listed variables.
    pub(crate) fn avoids_vars(&self, vars: std::ops::Range<usize>) -> bool {
        self.terms
            .iter()
            .all(|t| t.mono.exps()[vars.clone()].iter().all(|&e| e == 0))
    }

    /// Exact division; `Err(DivisionFailure)` if `divisor` does not divide.
    pub fn exact_div(&self, divisor: &Polynomial) -> Result<Polynomial> {
        self.check_ring(divisor)?;
        let lead = divisor.leading_term().ok_or(Error::ZeroPolynomial)?;
        let p = self.ring.prime();
        let inv = p.inv(lead.coeff)?;
        let mut rest = self.clone();
        let mut quot = Vec::new();
        while let Some(t) = rest.terms.first() {
            if !lead.mono.divides(&t.mono) {
                return Err(Error::DivisionFailure);
            }
            let m = lead.mono.quotient_of(&t.mono);
            let c = p.mul(t.coeff, inv);
            rest = rest.sub_scaled_shift(0, c, &m, divisor);
            quot.push((c, m));
        }
        Ok(Polynomial::from_terms(&self.ring, quot))
    }
}

/// `p^e` with overflow guard.
pub fn frobenius_q(p: u32, e: u32) -> Result<u64> {
    (p as u64)
        .checked_pow(e)
        .filter(|q| *q <= u32::MAX as u64)
        .ok_or(Error::ExponentOverflow)
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_poly(self))
    }
}
