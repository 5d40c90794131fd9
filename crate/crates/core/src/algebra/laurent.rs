//! Sparse univariate Laurent polynomials over ℚ.

use super::ring::{q, q_to_string, Q, Ring};
use num::Signed;
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    /// Â = A^{1/Q}
    AHat,
    /// t = e^{ħ/(2Q)}
    T,
}

#[derive(Clone, Debug)]
pub struct LaurentPoly {
    pub var: Var,
    terms: BTreeMap<i64, Q>,
}

impl PartialEq for LaurentPoly {
    // Constants compare equal across variable tags.
    fn eq(&self, o: &Self) -> bool {
        self.terms == o.terms && (self.var == o.var || self.is_constant() || o.is_constant())
    }
}

impl LaurentPoly {
    pub fn zero_in(var: Var) -> Self {
        LaurentPoly { var, terms: BTreeMap::new() }
    }

    pub fn constant(c: Q) -> Self {
        Self::monomial(Var::AHat, 0, c)
    }

    pub fn monomial(var: Var, e: i64, c: Q) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        LaurentPoly { var, terms }
    }

    /// Â^e
    pub fn ahat(e: i64) -> Self {
        Self::monomial(Var::AHat, e, q(1))
    }

    /// t^e
    pub fn t(e: i64) -> Self {
        Self::monomial(Var::T, e, q(1))
    }

    pub fn from_terms(var: Var, it: impl IntoIterator<Item = (i64, Q)>) -> Self {
        let mut p = Self::zero_in(var);
        for (e, c) in it {
            p.add_term(e, &c);
        }
        p
    }

    pub fn add_term(&mut self, e: i64, c: &Q) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_insert_with(Q::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn terms(&self) -> &BTreeMap<i64, Q> {
        &self.terms
    }

    pub fn coeff(&self, e: i64) -> Q {
        self.terms.get(&e).cloned().unwrap_or_else(Q::zero)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|&e| e == 0)
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn tag(&self, o: &Self) -> Var {
        if self.is_constant() {
            o.var
        } else {
            debug_assert!(o.is_constant() || o.var == self.var, "mixed Laurent variables");
            self.var
        }
    }

    /// Multiply by x^k.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly { var: self.var, terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect() }
    }

    /// x → x^k.
    pub fn inflate(&self, k: i64) -> Self {
        assert!(k != 0);
        LaurentPoly { var: self.var, terms: self.terms.iter().map(|(e, c)| (e * k, c.clone())).collect() }
    }

    /// x → 1/x.
    pub fn flip(&self) -> Self {
        self.inflate(-1)
    }

    pub fn eval(&self, x: &Q) -> Q {
        let mut acc = Q::zero();
        for (e, c) in &self.terms {
            acc += c * x.powi(*e).expect("evaluation at zero with negative exponent");
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        LaurentPoly::from_terms(self.var, self.terms.iter().map(|(e, c)| (e - 1, c * q(*e))))
    }

    /// Exact division by a polynomial whose lowest term is handled by shifting;
    /// `None` if the division is not exact.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.is_empty() {
            return None;
        }
        if self.is_empty() {
            return Some(self.clone());
        }
        let dmax = d.max_exp().unwrap();
        let dlead = d.coeff(dmax);
        let dmin = d.min_exp().unwrap();
        let mut rem = self.clone();
        let mut quo = LaurentPoly::zero_in(self.tag(d));
        while let Some(rmax) = rem.max_exp() {
            if rmax - dmax < rem.min_exp().unwrap() - dmin {
                return None;
            }
            let c = rem.coeff(rmax) / &dlead;
            let e = rmax - dmax;
            quo.add_term(e, &c);
            for (de, dc) in &d.terms {
                rem.add_term(de + e, &(-(&c * dc)));
            }
        }
        Some(quo)
    }

    pub fn map_coeffs(&self, f: impl Fn(&Q) -> Q) -> Self {
        LaurentPoly::from_terms(self.var, self.terms.iter().map(|(e, c)| (*e, f(c))))
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.terms
                .iter()
                .map(|(e, c)| serde_json::json!([e, q_to_string(c)]))
                .collect(),
        )
    }
}

impl Ring for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::zero_in(Var::AHat)
    }
    fn one() -> Self {
        LaurentPoly::constant(q(1))
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn radd(&self, o: &Self) -> Self {
        let mut r = self.clone();
        r.var = self.tag(o);
        for (e, c) in &o.terms {
            r.add_term(*e, c);
        }
        r
    }
    fn radd_assign(&mut self, o: &Self) {
        self.var = self.tag(o);
        for (e, c) in &o.terms {
            self.add_term(*e, c);
        }
    }
    fn rsub(&self, o: &Self) -> Self {
        let mut r = self.clone();
        r.var = self.tag(o);
        for (e, c) in &o.terms {
            r.add_term(*e, &-c);
        }
        r
    }
    fn rmul(&self, o: &Self) -> Self {
        let var = self.tag(o);
        let mut acc: BTreeMap<i64, Q> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                *acc.entry(e1 + e2).or_insert_with(Q::zero) += c1 * c2;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        LaurentPoly { var, terms: acc }
    }
    fn rneg(&self) -> Self {
        self.map_coeffs(|c| -c)
    }
    fn from_q(c: &Q) -> Self {
        LaurentPoly::constant(c.clone())
    }
    fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return LaurentPoly::zero_in(self.var);
        }
        self.map_coeffs(|x| x * c)
    }
    fn unit_inv(&self) -> Option<Self> {
        if self.terms.len() != 1 {
            return None;
        }
        let (e, c) = self.terms.iter().next().unwrap();
        Some(LaurentPoly::monomial(self.var, -e, c.recip()))
    }
    fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let name = match self.var {
            Var::AHat => "Â",
            Var::T => "t",
        };
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            if !first {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            } else if neg {
                write!(f, "-")?;
            }
            first = false;
            let a = c.abs();
            match *e {
                0 => write!(f, "{}", a)?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{}*", a)?;
                    }
                    if *e == 1 {
                        write!(f, "{}", name)?
                    } else {
                        write!(f, "{}^{}", name, e)?
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ring::qf;

    #[test]
    fn arithmetic() {
        let x = LaurentPoly::ahat(1);
        let xi = LaurentPoly::ahat(-1);
        let p = x.radd(&xi);
        let sq = p.rmul(&p);
        assert_eq!(sq, LaurentPoly::from_terms(Var::AHat, [(2, q(1)), (0, q(2)), (-2, q(1))]));
        assert!(p.rsub(&p).is_zero());
        assert_eq!(x.unit_inv().unwrap(), xi);
        assert!(p.unit_inv().is_none());
    }

    #[test]
    fn exact_division() {
        let a = LaurentPoly::from_terms(Var::AHat, [(0, q(1)), (1, q(-1))]);
        let b = LaurentPoly::from_terms(Var::AHat, [(-3, q(2)), (2, qf(1, 3))]);
        let prod = a.rmul(&b);
        assert_eq!(prod.div_exact(&a).unwrap(), b);
        assert!(b.radd(&LaurentPoly::ahat(0)).div_exact(&a).is_none());
    }

    #[test]
    fn constants_ignore_tag() {
        assert_eq!(LaurentPoly::monomial(Var::T, 0, q(3)), LaurentPoly::constant(q(3)));
        assert_ne!(LaurentPoly::t(1), LaurentPoly::ahat(1));
    }
}
