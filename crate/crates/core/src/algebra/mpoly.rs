//! Sparse multivariate Laurent polynomials over ℚ. Variables are positional;
//! exponent vectors are stored with trailing zeros trimmed so that the ring
//! needs no fixed arity.

use super::laurent::{LaurentPoly, Var};
use super::ring::{q, q_to_string, Q, Ring};

use std::collections::BTreeMap;

pub type Mono = Vec<i32>;

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct MPoly {
    terms: BTreeMap<Mono, Q>,
}

fn trim(mut m: Mono) -> Mono {
    while m.last() == Some(&0) {
        m.pop();
    }
    m
}

fn mono_mul(a: &[i32], b: &[i32]) -> Mono {
    let n = a.len().max(b.len());
    let mut r = vec![0; n];
    for (i, x) in a.iter().enumerate() {
        r[i] += x;
    }
    for (i, x) in b.iter().enumerate() {
        r[i] += x;
    }
    trim(r)
}

impl MPoly {
    pub fn var(i: usize) -> Self {
        Self::monomial(&unit_mono(i, 1), q(1))
    }

    pub fn monomial(m: &[i32], c: Q) -> Self {
        let mut p = MPoly::default();
        p.add_term(m.to_vec(), &c);
        p
    }

    pub fn constant(c: Q) -> Self {
        Self::monomial(&[], c)
    }

    pub fn add_term(&mut self, m: Mono, c: &Q) {
        if c.is_zero() {
            return;
        }
        let m = trim(m);
        let e = self.terms.entry(m.clone()).or_insert_with(Q::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn terms(&self) -> &BTreeMap<Mono, Q> {
        &self.terms
    }

    pub fn coeff(&self, m: &[i32]) -> Q {
        self.terms.get(&trim(m.to_vec())).cloned().unwrap_or_else(Q::zero)
    }

    /// Maximum exponent of variable i (None when zero).
    pub fn degree_in(&self, i: usize) -> Option<i32> {
        self.terms.keys().map(|m| m.get(i).copied().unwrap_or(0)).max()
    }

    pub fn min_degree_in(&self, i: usize) -> Option<i32> {
        self.terms.keys().map(|m| m.get(i).copied().unwrap_or(0)).min()
    }

    /// Total degree (sum of exponents).
    pub fn total_degree(&self) -> Option<i32> {
        self.terms.keys().map(|m| m.iter().sum::<i32>()).max()
    }

    /// Substitute a rational value for variable i.
    pub fn eval_var(&self, i: usize, x: &Q) -> MPoly {
        let mut r = MPoly::default();
        for (m, c) in &self.terms {
            let e = m.get(i).copied().unwrap_or(0);
            let mut m2 = m.clone();
            if i < m2.len() {
                m2[i] = 0;
            }
            let f = x.powi(e as i64).expect("negative power of zero");
            r.add_term(m2, &(c * f));
        }
        r
    }

    /// Substitute a polynomial for variable i (non-negative exponents only).
    pub fn subst(&self, i: usize, v: &MPoly) -> MPoly {
        let mut r = MPoly::default();
        let mut cache: BTreeMap<i32, MPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.get(i).copied().unwrap_or(0);
            let mut m2 = m.clone();
            if i < m2.len() {
                m2[i] = 0;
            }
            let pw = cache
                .entry(e)
                .or_insert_with(|| v.powi(e as i64).expect("substitution needs a unit for negative powers"))
                .clone();
            r = r.radd(&MPoly::monomial(&m2, c.clone()).rmul(&pw));
        }
        r
    }

    /// Coefficients with respect to variable i, as a map exponent → MPoly.
    pub fn collect(&self, i: usize) -> BTreeMap<i32, MPoly> {
        let mut r: BTreeMap<i32, MPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.get(i).copied().unwrap_or(0);
            let mut m2 = m.clone();
            if i < m2.len() {
                m2[i] = 0;
            }
            r.entry(e).or_default().add_term(m2, c);
        }
        r
    }

    pub fn derivative(&self, i: usize) -> MPoly {
        let mut r = MPoly::default();
        for (m, c) in &self.terms {
            let e = m.get(i).copied().unwrap_or(0);
            if e == 0 {
                continue;
            }
            let mut m2 = m.clone();
            m2[i] -= 1;
            r.add_term(m2, &(c * q(e as i64)));
        }
        r
    }

    /// The univariate polynomial in variable i, if no other variable occurs.
    pub fn to_laurent(&self, i: usize, var: Var) -> Option<LaurentPoly> {
        let mut r = LaurentPoly::zero_in(var);
        for (m, c) in &self.terms {
            for (j, e) in m.iter().enumerate() {
                if j != i && *e != 0 {
                    return None;
                }
            }
            r.add_term(m.get(i).copied().unwrap_or(0) as i64, c);
        }
        Some(r)
    }

    pub fn from_laurent(p: &LaurentPoly, i: usize) -> MPoly {
        let mut r = MPoly::default();
        for (e, c) in p.terms() {
            r.add_term(unit_mono(i, *e as i32), c);
        }
        r
    }

    /// Exact division by a univariate polynomial in variable i with
    /// constant-free lowest term handled; `None` when not exact.
    pub fn div_exact_univariate(&self, i: usize, d: &MPoly) -> Option<MPoly> {
        let dl = d.to_laurent(i, Var::AHat)?;
        let coll = self.collect_other(i);
        let mut r = MPoly::default();
        for (rest, p) in coll {
            let quo = p.div_exact(&dl)?;
            for (e, c) in quo.terms() {
                let mut m = rest.clone();
                if m.len() <= i {
                    m.resize(i + 1, 0);
                }
                m[i] = *e as i32;
                r.add_term(m, c);
            }
        }
        Some(r)
    }

    fn collect_other(&self, i: usize) -> BTreeMap<Mono, LaurentPoly> {
        let mut r: BTreeMap<Mono, LaurentPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.get(i).copied().unwrap_or(0);
            let mut m2 = m.clone();
            if i < m2.len() {
                m2[i] = 0;
            }
            r.entry(trim(m2)).or_insert_with(|| LaurentPoly::zero_in(Var::AHat)).add_term(e as i64, c);
        }
        r
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.terms
                .iter()
                .map(|(m, c)| serde_json::json!([m, q_to_string(c)]))
                .collect(),
        )
    }
}

pub fn unit_mono(i: usize, e: i32) -> Mono {
    let mut m = vec![0; i + 1];
    m[i] = e;
    trim(m)
}

impl Ring for MPoly {
    fn zero() -> Self {
        MPoly::default()
    }
    fn one() -> Self {
        MPoly::constant(q(1))
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn radd(&self, o: &Self) -> Self {
        let mut r = self.clone();
        r.radd_assign(o);
        r
    }
    fn radd_assign(&mut self, o: &Self) {
        for (m, c) in &o.terms {
            self.add_term(m.clone(), c);
        }
    }
    fn rsub(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.add_term(m.clone(), &-c);
        }
        r
    }
    fn rmul(&self, o: &Self) -> Self {
        let mut acc: BTreeMap<Mono, Q> = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                *acc.entry(mono_mul(m1, m2)).or_insert_with(Q::zero) += c1 * c2;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        MPoly { terms: acc }
    }
    fn rneg(&self) -> Self {
        MPoly { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
    fn from_q(c: &Q) -> Self {
        MPoly::constant(c.clone())
    }
    fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return MPoly::default();
        }
        MPoly { terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect() }
    }
    fn unit_inv(&self) -> Option<Self> {
        if self.terms.len() != 1 {
            return None;
        }
        let (m, c) = self.terms.iter().next().unwrap();
        Some(MPoly::monomial(&m.iter().map(|e| -e).collect::<Vec<_>>(), c.recip()))
    }
    fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&Vec::new()).is_some_and(|c| c.is_one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multiply_and_collect() {
        let a = MPoly::var(0);
        let r = MPoly::var(1);
        let p = a.radd(&r).rmul(&a.rsub(&r));
        let expect = a.rmul(&a).rsub(&r.rmul(&r));
        assert_eq!(p, expect);
        let c = p.collect(1);
        assert_eq!(c[&2], MPoly::constant(q(-1)));
        assert_eq!(p.eval_var(1, &q(2)), a.rmul(&a).rsub(&MPoly::constant(q(4))));
    }

    #[test]
    fn trailing_zero_canonical() {
        let m = MPoly::monomial(&[1, 0, 0], q(1));
        assert_eq!(m, MPoly::var(0));
        assert!(MPoly::monomial(&[0, 0], q(1)).is_one());
    }

    #[test]
    fn univariate_division() {
        let x = MPoly::var(1);
        let a = MPoly::var(0);
        let d = x.rsub(&MPoly::constant(q(3)));
        let p = d.rmul(&a.radd(&x.rmul(&x)));
        assert_eq!(p.div_exact_univariate(1, &d).unwrap(), a.radd(&x.rmul(&x)));
    }
}
