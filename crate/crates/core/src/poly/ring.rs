use std::sync::Arc;

use serde::Serialize;

use super::order::MonomialOrder;
use crate::error::{Error, Result};
use crate::field::Prime;

/// Default cap on the number of user-declared variables.
pub const MAX_USER_VARS: usize = 12;

/// Prefix reserved for auxiliary variables introduced internally.
pub(crate) const RESERVED_PREFIX: char = '@';

/// The polynomial ring `F_p[x_1, ..., x_n]` with a monomial order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct RingCtx {
    prime: Prime,
    vars: Vec<String>,
    order: MonomialOrder,
}

pub type Ring = Arc<RingCtx>;

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl RingCtx {
    pub fn new<S: AsRef<str>>(prime: Prime, vars: &[S], order: MonomialOrder) -> Result<Ring> {
        if vars.is_empty() {
            return Err(Error::InvalidRing("at least one variable required".into()));
        }
        if vars.len() > MAX_USER_VARS {
            return Err(Error::InvalidRing(format!(
                "{} variables exceeds the limit of {MAX_USER_VARS}",
                vars.len()
            )));
        }
        for v in vars {
            if !valid_name(v.as_ref()) {
                return Err(Error::InvalidRing(format!(
                    "invalid variable name '{}'",
                    v.as_ref()
                )));
            }
        }
        Self::build(
            prime,
            vars.iter().map(|v| v.as_ref().to_string()).collect(),
            order,
        )
    }

    /// Constructor for internal extended rings; skips the name and size guards.
    pub(crate) fn new_internal(
        prime: Prime,
        vars: Vec<String>,
        order: MonomialOrder,
    ) -> Result<Ring> {
        Self::build(prime, vars, order)
    }

    fn build(prime: Prime, vars: Vec<String>, order: MonomialOrder) -> Result<Ring> {
        for (i, v) in vars.iter().enumerate() {
            if vars[..i].contains(v) {
                return Err(Error::InvalidRing(format!("duplicate variable '{v}'")));
            }
        }
        if let MonomialOrder::Elim(k) = order {
            if k == 0 || k >= vars.len() {
                return Err(Error::InvalidRing(format!(
                    "elimination block {k} out of range for {} variables",
                    vars.len()
                )));
            }
        }
        Ok(Arc::new(RingCtx { prime, vars, order }))
    }

    pub fn prime(&self) -> Prime {
        self.prime
    }

    pub fn p(&self) -> u32 {
        self.prime.get()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// Same variables and characteristic, different order.
    pub fn with_order(&self, order: MonomialOrder) -> Result<Ring> {
        Self::build(self.prime, self.vars.clone(), order)
    }

    /// Rings are compatible when they share characteristic and variables.
    pub fn same_space(&self, other: &RingCtx) -> bool {
        self.prime == other.prime && self.vars == other.vars
    }

    pub fn describe(&self) -> String {
        format!("F_{}[{}] ({})", self.prime, self.vars.join(","), self.order)
    }
}
