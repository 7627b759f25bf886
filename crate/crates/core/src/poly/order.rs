use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use super::monomial::{grevlex, lex, Monomial};
use crate::error::{Error, Result};

/// A monomial order on exponent vectors.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    #[default]
    Grevlex,
    Lex,
    /// Block order eliminating the first `k` variables: grevlex on the first
    /// block, ties broken by grevlex on the remaining variables.
    Elim(usize),
}

impl MonomialOrder {
    #[inline]
    pub fn cmp_exps(&self, a: &[u32], b: &[u32]) -> Ordering {
        match *self {
            MonomialOrder::Grevlex => grevlex(a, b),
            MonomialOrder::Lex => lex(a, b),
            MonomialOrder::Elim(k) => {
                let k = k.min(a.len());
                grevlex(&a[..k], &b[..k]).then_with(|| grevlex(&a[k..], &b[k..]))
            }
        }
    }

    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.cmp_exps(a.exps(), b.exps())
    }
}

/// Compares two monomials, rejecting vectors of different length.
pub fn mono_cmp(a: &Monomial, b: &Monomial, order: MonomialOrder) -> Result<Ordering> {
    if a.len() != b.len() {
        return Err(Error::InvalidArgument(format!(
            "monomial length mismatch: {} vs {}",
            a.len(),
            b.len()
        )));
    }
    Ok(order.cmp(a, b))
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonomialOrder::Grevlex => write!(f, "grevlex"),
            MonomialOrder::Lex => write!(f, "lex"),
            MonomialOrder::Elim(k) => write!(f, "elim({k})"),
        }
    }
}

impl FromStr for MonomialOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "grevlex" => Ok(MonomialOrder::Grevlex),
            "lex" => Ok(MonomialOrder::Lex),
            other => Err(Error::InvalidArgument(format!(
                "unknown monomial order '{other}' (expected grevlex or lex)"
            ))),
        }
    }
}

impl Serialize for MonomialOrder {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(v: &[u32]) -> Monomial {
        Monomial::new(v.to_vec())
    }

    #[test]
    fn grevlex_examples() {
        let o = MonomialOrder::Grevlex;
        assert_eq!(
            mono_cmp(&m(&[2, 1]), &m(&[1, 2]), o).unwrap(),
            Ordering::Greater
        );
        assert_eq!(
            mono_cmp(&m(&[1, 0]), &m(&[0, 1]), o).unwrap(),
            Ordering::Greater
        );
        assert_eq!(
            mono_cmp(&m(&[3, 1]), &m(&[3, 1]), o).unwrap(),
            Ordering::Equal
        );
        // xz < y^2 in grevlex with x > y > z
        assert_eq!(o.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Less);
        assert!(mono_cmp(&m(&[1]), &m(&[1, 0]), o).is_err());
    }

    #[test]
    fn lex_and_elim() {
        assert_eq!(
            MonomialOrder::Lex.cmp(&m(&[1, 0]), &m(&[0, 5])),
            Ordering::Greater
        );
        let e = MonomialOrder::Elim(1);
        // t beats any power of the remaining variables
        assert_eq!(e.cmp(&m(&[1, 0, 0]), &m(&[0, 7, 7])), Ordering::Greater);
        // equal first block: grevlex on the tail
        assert_eq!(e.cmp(&m(&[1, 2, 0]), &m(&[1, 0, 2])), Ordering::Greater);
    }
}
