//! Minimal commutative-ring interface shared by every coefficient type.

use num::{BigInt, BigRational, One, Signed, Zero};
use std::fmt::Debug;

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    BigRational::from_integer(BigInt::from(n))
}

pub fn qf(n: i64, d: i64) -> Q {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Commutative ring with unit, containing the rationals.
pub trait Ring: Clone + PartialEq + Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn radd(&self, o: &Self) -> Self;
    fn rsub(&self, o: &Self) -> Self;
    fn rmul(&self, o: &Self) -> Self;
    fn rneg(&self) -> Self;
    fn from_q(c: &Q) -> Self;
    /// Inverse of a unit, `None` otherwise.
    fn unit_inv(&self) -> Option<Self>;

    fn scale(&self, c: &Q) -> Self {
        self.rmul(&Self::from_q(c))
    }
    fn from_i64(n: i64) -> Self {
        Self::from_q(&q(n))
    }
    fn is_one(&self) -> bool {
        *self == Self::one()
    }
    fn radd_assign(&mut self, o: &Self) {
        *self = self.radd(o);
    }
    fn pow(&self, e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.rmul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.rmul(&base);
            }
        }
        acc
    }
    /// Integer power; negative exponents need a unit.
    fn powi(&self, e: i64) -> Option<Self> {
        if e >= 0 {
            Some(self.pow(e as u64))
        } else {
            self.unit_inv().map(|v| v.pow(e.unsigned_abs()))
        }
    }
}

/// Rings in which every nonzero element is invertible.
pub trait Field: Ring {
    fn inv(&self) -> Option<Self> {
        self.unit_inv()
    }
    fn rdiv(&self, o: &Self) -> Option<Self> {
        o.inv().map(|i| self.rmul(&i))
    }
    /// A x = b; fields with a cheaper exact method override this.
    fn solve_system(a: &[Vec<Self>], b: &[Self]) -> super::linalg::Solution<Self> {
        super::linalg::solve(a, b)
    }
}

impl Ring for Q {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn radd(&self, o: &Self) -> Self {
        self + o
    }
    fn rsub(&self, o: &Self) -> Self {
        self - o
    }
    fn rmul(&self, o: &Self) -> Self {
        self * o
    }
    fn rneg(&self) -> Self {
        -self
    }
    fn from_q(c: &Q) -> Self {
        c.clone()
    }
    fn unit_inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn scale(&self, c: &Q) -> Self {
        self * c
    }
    fn radd_assign(&mut self, o: &Self) {
        *self += o;
    }
}

impl Field for Q {}

/// "p/q" text form used by the canonical JSON encoding.
pub fn q_to_string(c: &Q) -> String {
    format!("{}/{}", c.numer(), c.denom())
}

pub fn q_parse(s: &str) -> Option<Q> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().ok()?;
        let d: BigInt = d.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        Some(BigRational::new(n, d))
    } else {
        let n: BigInt = s.parse().ok()?;
        Some(BigRational::from_integer(n))
    }
}

pub fn is_integer(c: &Q) -> bool {
    c.denom().is_one()
}

pub fn q_abs(c: &Q) -> Q {
    c.abs()
}

/// Binomial coefficient binom(e, k) for rational e.
pub fn binom_q(e: &Q, k: u64) -> Q {
    let mut acc = q(1);
    for j in 0..k {
        acc = acc * (e - q(j as i64)) / q(j as i64 + 1);
    }
    acc
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |a, k| a * BigInt::from(k))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_roundtrip() {
        let c = qf(-6, 4);
        assert_eq!(q_to_string(&c), "-3/2");
        assert_eq!(q_parse("-3/2").unwrap(), c);
        assert_eq!(q_parse("7").unwrap(), q(7));
        assert!(q_parse("1/0").is_none());
    }

    #[test]
    fn powers() {
        assert_eq!(qf(2, 3).powi(-2).unwrap(), qf(9, 4));
        assert!(q(0).powi(-1).is_none());
        assert_eq!(binom_q(&qf(1, 2), 2), qf(-1, 8));
    }
}
