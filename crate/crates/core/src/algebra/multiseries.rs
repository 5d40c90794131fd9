//! Truncated power series in several variables (used for double expansions
//! at Λᵢ = ∞). Exponent vectors are non-negative and bounded per variable.

use super::laurent::LaurentPoly;
use super::ring::{q, Q, Ring};
use super::series::Series;
use crate::error::{Error, Result};
use std::collections::BTreeMap;

#[derive(Clone, Debug, PartialEq)]
pub struct MultiSeries {
    pub caps: Vec<i64>,
    terms: BTreeMap<Vec<i64>, LaurentPoly>,
}

impl MultiSeries {
    pub fn zero(caps: Vec<i64>) -> Self {
        MultiSeries { caps, terms: BTreeMap::new() }
    }

    pub fn constant(caps: Vec<i64>, c: LaurentPoly) -> Self {
        let mut s = Self::zero(caps);
        let n = s.caps.len();
        s.add_term(vec![0; n], &c);
        s
    }

    pub fn nvars(&self) -> usize {
        self.caps.len()
    }

    fn in_range(&self, e: &[i64]) -> bool {
        e.iter().zip(&self.caps).all(|(x, c)| *x >= 0 && x < c)
    }

    pub fn add_term(&mut self, e: Vec<i64>, c: &LaurentPoly) {
        if c.is_zero() || !self.in_range(&e) {
            return;
        }
        let v = match self.terms.get(&e) {
            Some(x) => x.radd(c),
            None => c.clone(),
        };
        if v.is_zero() {
            self.terms.remove(&e);
        } else {
            self.terms.insert(e, v);
        }
    }

    pub fn terms(&self) -> &BTreeMap<Vec<i64>, LaurentPoly> {
        &self.terms
    }

    pub fn coeff(&self, e: &[i64]) -> LaurentPoly {
        self.terms.get(e).cloned().unwrap_or_else(LaurentPoly::zero)
    }

    /// Embed a univariate series as a series in variable `i`.
    pub fn from_series(caps: Vec<i64>, i: usize, s: &Series<LaurentPoly>) -> Result<Self> {
        if s.floor < 0 {
            return Err(Error::BadValuation { expected: 0, got: s.floor });
        }
        let mut r = Self::zero(caps);
        r.caps[i] = r.caps[i].min(s.cap);
        let n = r.nvars();
        for (e, c) in s.terms() {
            let mut v = vec![0; n];
            v[i] = *e;
            r.add_term(v, c);
        }
        Ok(r)
    }

    pub fn add(&self, o: &Self) -> Self {
        let caps: Vec<i64> = self.caps.iter().zip(&o.caps).map(|(a, b)| *a.min(b)).collect();
        let mut r = Self::zero(caps);
        for (e, c) in self.terms.iter().chain(o.terms.iter()) {
            r.add_term(e.clone(), c);
        }
        r
    }

    pub fn scale(&self, c: &Q) -> Self {
        let mut r = Self::zero(self.caps.clone());
        for (e, x) in &self.terms {
            r.add_term(e.clone(), &x.scale(c));
        }
        r
    }

    pub fn mul(&self, o: &Self) -> Self {
        let caps: Vec<i64> = self.caps.iter().zip(&o.caps).map(|(a, b)| *a.min(b)).collect();
        let mut r = Self::zero(caps);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let e: Vec<i64> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                if r.in_range(&e) {
                    r.add_term(e, &c1.rmul(c2));
                }
            }
        }
        r
    }

    /// Total degree of the lowest nonzero term.
    pub fn min_total_degree(&self) -> Option<i64> {
        self.terms.keys().map(|e| e.iter().sum()).min()
    }

    /// log(1 + s) for s with zero constant term.
    pub fn log1p(&self) -> Result<Self> {
        let n = self.nvars();
        if !self.coeff(&vec![0; n]).is_zero() {
            return Err(Error::BadValuation { expected: 1, got: 0 });
        }
        let bound: i64 = self.caps.iter().map(|c| c - 1).sum();
        let mut acc = Self::zero(self.caps.clone());
        let mut pw = self.clone();
        for k in 1..=bound.max(0) {
            let sign = if k % 2 == 1 { q(1) } else { q(-1) };
            acc = acc.add(&pw.scale(&(sign / q(k))));
            pw = pw.mul(self);
            if pw.terms.is_empty() {
                break;
            }
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn log_of_product_is_sum() {
        let x = Series::from_terms(0, 5, [(1, LaurentPoly::ahat(1)), (2, LaurentPoly::constant(q(3)))]);
        let y = Series::from_terms(0, 5, [(1, LaurentPoly::constant(q(-2)))]);
        let mx = MultiSeries::from_series(vec![5, 5], 0, &x).unwrap();
        let my = MultiSeries::from_series(vec![5, 5], 1, &y).unwrap();
        let one = MultiSeries::constant(vec![5, 5], LaurentPoly::one());
        let prod = one.add(&mx).mul(&one.add(&my));
        let lhs = prod.add(&one.scale(&q(-1))).log1p().unwrap();
        let rhs = mx.log1p().unwrap().add(&my.log1p().unwrap());
        assert_eq!(lhs, rhs);
    }
}
