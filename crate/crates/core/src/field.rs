//! Arithmetic in the prime field F_p.
//!
//! Coefficients are stored as `u32` residues in `[0, p)`. With `p < 2^16`
//! every product of two residues fits in a `u64` without reduction tricks.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// A prime characteristic `2 <= p < 2^16`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Prime(u32);

impl Prime {
    pub const MAX_EXCLUSIVE: u64 = 1 << 16;

    pub fn new(p: u64) -> Result<Self> {
        if !(2..Self::MAX_EXCLUSIVE).contains(&p) || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Prime(p as u32))
    }

    #[inline]
    pub fn get(self) -> u32 {
        self.0
    }

    /// Reduces an arbitrary signed integer into `[0, p)`.
    pub fn reduce(self, n: i64) -> u32 {
        n.rem_euclid(self.0 as i64) as u32
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= self.0 {
            s - self.0
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.0 - b
        }
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.0 - a
        }
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.0 as u64) as u32
    }

    pub fn pow(self, a: u32, mut k: u64) -> u32 {
        let mut base = a % self.0;
        let mut acc = 1 % self.0;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// Multiplicative inverse via Fermat; `a` must be nonzero mod p.
    pub fn inv(self, a: u32) -> Result<u32> {
        if a.is_multiple_of(self.0) {
            return Err(Error::DivisionByZero(self.0));
        }
        Ok(self.pow(a, self.0 as u64 - 2))
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An element of F_p together with its characteristic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FpScalar {
    value: u32,
    prime: Prime,
}

/// The four field operations accepted by [`fp_arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Checked field operations; operands from different characteristics are
/// an error, so these stay inherent methods rather than operator traits.
#[allow(clippy::should_implement_trait)]
impl FpScalar {
    pub fn new(value: i64, prime: Prime) -> Self {
        FpScalar {
            value: prime.reduce(value),
            prime,
        }
    }

    pub fn zero(prime: Prime) -> Self {
        FpScalar { value: 0, prime }
    }

    pub fn one(prime: Prime) -> Self {
        FpScalar { value: 1, prime }
    }

    pub fn value(self) -> u32 {
        self.value
    }

    pub fn prime(self) -> Prime {
        self.prime
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    fn check(self, other: FpScalar) -> Result<Prime> {
        if self.prime != other.prime {
            return Err(Error::CharacteristicMismatch(
                self.prime.get(),
                other.prime.get(),
            ));
        }
        Ok(self.prime)
    }

    pub fn add(self, other: FpScalar) -> Result<FpScalar> {
        fp_arith(self, other, FieldOp::Add)
    }

    pub fn sub(self, other: FpScalar) -> Result<FpScalar> {
        fp_arith(self, other, FieldOp::Sub)
    }

    pub fn mul(self, other: FpScalar) -> Result<FpScalar> {
        fp_arith(self, other, FieldOp::Mul)
    }

    pub fn div(self, other: FpScalar) -> Result<FpScalar> {
        fp_arith(self, other, FieldOp::Div)
    }

    pub fn inv(self) -> Result<FpScalar> {
        Ok(FpScalar {
            value: self.prime.inv(self.value)?,
            prime: self.prime,
        })
    }

    pub fn pow(self, k: u64) -> FpScalar {
        FpScalar {
            value: self.prime.pow(self.value, k),
            prime: self.prime,
        }
    }

    /// The unique p-th root. F_p is perfect and Frobenius fixes it pointwise,
    /// so this is the identity.
    pub fn pth_root(self) -> FpScalar {
        self
    }
}

impl fmt::Display for FpScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// Exact modular arithmetic on two scalars of the same characteristic.
pub fn fp_arith(a: FpScalar, b: FpScalar, op: FieldOp) -> Result<FpScalar> {
    let p = a.check(b)?;
    let value = match op {
        FieldOp::Add => p.add(a.value, b.value),
        FieldOp::Sub => p.sub(a.value, b.value),
        FieldOp::Mul => p.mul(a.value, b.value),
        FieldOp::Div => p.mul(a.value, p.inv(b.value)?),
    };
    Ok(FpScalar { value, prime: p })
}

pub fn fp_pth_root(a: FpScalar) -> FpScalar {
    a.pth_root()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: i64, p: u64) -> FpScalar {
        FpScalar::new(v, Prime::new(p).unwrap())
    }

    #[test]
    fn prime_validation() {
        assert!(Prime::new(2).is_ok());
        assert!(Prime::new(65521).is_ok());
        assert_eq!(Prime::new(1), Err(Error::NotPrime(1)));
        assert_eq!(Prime::new(9), Err(Error::NotPrime(9)));
        assert!(Prime::new(65537).is_err());
    }

    #[test]
    fn small_identities() {
        assert_eq!(s(1, 2).add(s(1, 2)).unwrap().value(), 0);
        assert_eq!(s(2, 5).mul(s(3, 5)).unwrap().value(), 1);
        assert_eq!(s(2, 5).inv().unwrap().value(), 3);
        assert_eq!(s(2, 3).add(s(2, 3)).unwrap().value(), 1);
        assert_eq!(s(-1, 7).value(), 6);
    }

    #[test]
    fn errors() {
        assert_eq!(s(1, 5).div(s(0, 5)), Err(Error::DivisionByZero(5)));
        assert_eq!(
            s(1, 5).add(s(1, 7)),
            Err(Error::CharacteristicMismatch(5, 7))
        );
    }

    #[test]
    fn pth_root_is_identity_and_inverts_frobenius() {
        assert_eq!(fp_pth_root(s(1, 2)).value(), 1);
        assert_eq!(fp_pth_root(s(2, 3)).value(), 2);
        assert_eq!(fp_pth_root(s(0, 3)).value(), 0);
        for p in [2u64, 3, 5, 7, 11, 13, 65521] {
            let prime = Prime::new(p).unwrap();
            for a in (0..p.min(200)).map(|a| FpScalar::new(a as i64, prime)) {
                assert_eq!(fp_pth_root(a).pow(p), a);
            }
        }
    }

    #[test]
    fn exhaustive_tables_small_primes() {
        for p in [2u64, 3, 5, 7, 11, 13] {
            let prime = Prime::new(p).unwrap();
            for a in 0..p {
                for b in 0..p {
                    let (x, y) = (
                        FpScalar::new(a as i64, prime),
                        FpScalar::new(b as i64, prime),
                    );
                    assert_eq!(x.add(y).unwrap().value() as u64, (a + b) % p);
                    assert_eq!(x.mul(y).unwrap().value() as u64, (a * b) % p);
                    assert_eq!(x.sub(y).unwrap().value() as u64, (a + p - b) % p);
                    if b != 0 {
                        assert_eq!(x.div(y).unwrap().mul(y).unwrap(), x);
                    }
                }
                if a != 0 {
                    let x = FpScalar::new(a as i64, prime);
                    assert_eq!(x.mul(x.inv().unwrap()).unwrap().value(), 1);
                }
            }
        }
    }
}
