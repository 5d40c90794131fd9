//! Torus knot parameters and the evaluation point for A.

use crate::algebra::{LaurentPoly, Ring, Q};
use crate::error::{Error, Result};
use num::integer::gcd;
use num::BigRational;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct KnotParams {
    pub q: u32,
    pub p: u32,
    /// Smallest γ ≥ 0 with Q | Pγ + 1.
    pub gamma: u32,
    pub b: Q,
}

impl KnotParams {
    pub fn new(q: u32, p: u32) -> Result<Self> {
        if q == 0 || p == 0 {
            return Err(Error::InvalidKnot(format!("T[{},{}]: P and Q must be positive", q, p)));
        }
        if gcd(q, p) != 1 {
            return Err(Error::InvalidKnot(format!("T[{},{}]: gcd(P,Q) must be 1", q, p)));
        }
        let gamma = (0..q).find(|g| (p as u64 * *g as u64 + 1) % q as u64 == 0).unwrap_or(0);
        Ok(KnotParams { q, p, gamma, b: BigRational::new(p.into(), q.into()) })
    }

    pub fn qi(&self) -> i64 {
        self.q as i64
    }

    pub fn pi(&self) -> i64 {
        self.p as i64
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({"Q": self.q, "P": self.p})
    }
}

/// A knot together with a value for Â = A^{1/Q}: either the formal variable
/// (`R = LaurentPoly`) or a rational specialization (`R = Q`).
#[derive(Clone, Debug)]
pub struct Point<R: Ring> {
    pub knot: KnotParams,
    pub ahat: R,
}

impl Point<LaurentPoly> {
    pub fn symbolic(knot: &KnotParams) -> Self {
        Point { knot: knot.clone(), ahat: LaurentPoly::ahat(1) }
    }
}

impl Point<Q> {
    pub fn at(knot: &KnotParams, ahat: Q) -> Self {
        Point { knot: knot.clone(), ahat }
    }
}

impl<R: Ring> Point<R> {
    /// Â^e
    pub fn ah(&self, e: i64) -> R {
        self.ahat.powi(e).expect("Â must be invertible")
    }

    /// A^e
    pub fn a(&self, e: i64) -> R {
        self.ah(self.knot.qi() * e)
    }

    /// A^{b e}
    pub fn ab(&self, e: i64) -> R {
        self.ah(self.knot.pi() * e)
    }

    /// A^e − A^{−e}
    pub fn a_diff(&self, e: i64) -> R {
        self.a(e).rsub(&self.a(-e))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::q;

    #[test]
    fn gamma_values() {
        assert_eq!(KnotParams::new(2, 3).unwrap().gamma, 1);
        assert_eq!(KnotParams::new(3, 2).unwrap().gamma, 1);
        assert_eq!(KnotParams::new(1, 2).unwrap().gamma, 0);
        assert_eq!(KnotParams::new(3, 4).unwrap().gamma, 2);
        assert_eq!(KnotParams::new(2, 5).unwrap().gamma, 1);
        assert!(KnotParams::new(2, 4).is_err());
        assert!(KnotParams::new(0, 1).is_err());
    }

    #[test]
    fn point_powers() {
        let k = KnotParams::new(2, 3).unwrap();
        let s = Point::symbolic(&k);
        assert_eq!(s.a(1), LaurentPoly::ahat(2));
        assert_eq!(s.ab(1), LaurentPoly::ahat(3));
        let n = Point::at(&k, q(2));
        assert_eq!(n.a(-1), crate::algebra::qf(1, 4));
    }
}
