use std::fmt;
use std::sync::{Arc, RwLock};

use super::buchberger::{reduce, reduced_groebner_basis};
use crate::error::{Error, Result};
use crate::poly::{MonomialOrder, Polynomial, Ring};

/// A reduced Groebner basis together with the ring (and so the order) it
/// was computed in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: Ring,
    elems: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn order(&self) -> MonomialOrder {
        self.ring.order()
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elems
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.elems.len() == 1 && self.elems[0].is_constant()
    }

    /// Normal form of `f` (any order over the same variables).
    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        let f = f.reorder(&self.ring)?;
        let refs: Vec<&Polynomial> = self.elems.iter().collect();
        Ok(reduce(&f, &refs))
    }
}

struct Inner {
    ring: Ring,
    gens: Vec<Polynomial>,
    cache: RwLock<Vec<Arc<GroebnerBasis>>>,
}

/// An ideal given by generators, with reduced Groebner bases cached per
/// monomial order.
#[derive(Clone)]
pub struct Ideal {
    inner: Arc<Inner>,
}

impl Ideal {
    /// Zero generators are dropped; the remaining ones must live in `ring`
    /// (they are re-sorted if only the order differs).
    pub fn new(ring: &Ring, gens: impl IntoIterator<Item = Polynomial>) -> Result<Ideal> {
        let mut out = Vec::new();
        for g in gens {
            if g.is_zero() {
                continue;
            }
            out.push(g.reorder(ring)?);
        }
        Ok(Ideal {
            inner: Arc::new(Inner {
                ring: ring.clone(),
                gens: out,
                cache: RwLock::new(Vec::new()),
            }),
        })
    }

    pub fn zero(ring: &Ring) -> Ideal {
        Ideal::new(ring, []).expect("empty generator list")
    }

    pub fn unit(ring: &Ring) -> Ideal {
        Ideal::new(ring, [Polynomial::one(ring)]).expect("same ring")
    }

    pub fn principal(f: &Polynomial) -> Ideal {
        Ideal::new(f.ring(), [f.clone()]).expect("same ring")
    }

    /// The homogeneous maximal ideal `(x_1, ..., x_n)`.
    pub fn maximal(ring: &Ring) -> Ideal {
        Ideal::new(ring, (0..ring.nvars()).map(|i| Polynomial::var(ring, i))).expect("same ring")
    }

    pub fn ring(&self) -> &Ring {
        &self.inner.ring
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.inner.gens
    }

    pub fn is_zero(&self) -> bool {
        self.inner.gens.is_empty()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.inner.gens.iter().all(|g| g.is_homogeneous())
    }

    /// Reduced Groebner basis under `order`, computed once and cached.
    pub fn groebner_basis_in(&self, order: MonomialOrder) -> Result<Arc<GroebnerBasis>> {
        if let Some(gb) = self
            .inner
            .cache
            .read()
            .expect("cache lock")
            .iter()
            .find(|gb| gb.order() == order)
        {
            return Ok(gb.clone());
        }
        let ring = if order == self.ring().order() {
            self.ring().clone()
        } else {
            self.ring().with_order(order)?
        };
        let gens: Vec<Polynomial> = self
            .gens()
            .iter()
            .map(|g| g.reorder(&ring))
            .collect::<Result<_>>()?;
        let elems = reduced_groebner_basis(&ring, &gens)?;
        let gb = Arc::new(GroebnerBasis { ring, elems });
        let mut cache = self.inner.cache.write().expect("cache lock");
        // another thread may have raced us; both results are identical
        if !cache.iter().any(|g| g.order() == order) {
            cache.push(gb.clone());
        }
        Ok(gb)
    }

    /// Reduced Groebner basis under the ring's own order.
    pub fn groebner_basis(&self) -> Result<Arc<GroebnerBasis>> {
        self.groebner_basis_in(self.ring().order())
    }

    pub fn grevlex_basis(&self) -> Result<Arc<GroebnerBasis>> {
        self.groebner_basis_in(MonomialOrder::Grevlex)
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        self.check_poly(f)?;
        let gb = self.groebner_basis()?;
        gb.normal_form(f)?.reorder(self.ring())
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        self.check_poly(f)?;
        if f.is_zero() {
            return Ok(true);
        }
        Ok(self.grevlex_basis()?.normal_form(f)?.is_zero())
    }

    /// `other ⊆ self`.
    pub fn contains_ideal(&self, other: &Ideal) -> Result<bool> {
        self.check_ideal(other)?;
        for g in other.gens() {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn is_unit(&self) -> Result<bool> {
        Ok(self.grevlex_basis()?.is_unit())
    }

    /// Equality as ideals: identical reduced grevlex bases.
    pub fn ideal_eq(&self, other: &Ideal) -> Result<bool> {
        self.check_ideal(other)?;
        let a = self.grevlex_basis()?;
        let b = other.grevlex_basis()?;
        Ok(a.elements() == b.elements())
    }

    pub(crate) fn check_poly(&self, f: &Polynomial) -> Result<()> {
        if !self.ring().same_space(f.ring()) {
            return Err(Error::ContextMismatch);
        }
        Ok(())
    }

    pub(crate) fn check_ideal(&self, other: &Ideal) -> Result<()> {
        if !self.ring().same_space(other.ring()) {
            return Err(Error::ContextMismatch);
        }
        Ok(())
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "(0)");
        }
        let parts: Vec<String> = self.gens().iter().map(|g| g.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}
