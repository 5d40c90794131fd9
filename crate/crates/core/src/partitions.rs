//! Integer partitions, symmetric-group characters, and power-sum expansions.

use crate::algebra::{q, Ring, Q};
use crate::error::{Error, Result};
use num::{BigInt, BigRational};
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{OnceLock, RwLock};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", p)?;
        }
        write!(f, ")")
    }
}

impl Partition {
    /// Sorts the input; zero parts are dropped.
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: vec![] }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Vec::new();
        if let Some(&first) = self.parts.first() {
            for j in 1..=first {
                t.push(self.parts.iter().filter(|&&p| p >= j).count() as u32);
            }
        }
        Partition { parts: t }
    }

    /// Multiplicities m_i for i = 1..max part.
    pub fn multiplicities(&self) -> BTreeMap<u32, u32> {
        let mut m = BTreeMap::new();
        for &p in &self.parts {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    /// z_σ = ∏ i^{m_i} m_i!
    pub fn z(&self) -> BigInt {
        let mut z = BigInt::from(1);
        for (i, m) in self.multiplicities() {
            for k in 1..=m {
                z *= BigInt::from(i) * BigInt::from(k);
            }
        }
        z
    }

    /// Content sum ∑ (j − i) over cells (row i, column j).
    pub fn kappa(&self) -> i64 {
        let mut s = 0i64;
        for (i, &p) in self.parts.iter().enumerate() {
            for j in 0..p as i64 {
                s += j - i as i64;
            }
        }
        s
    }

    pub fn scaled(&self, k: u32) -> Self {
        Partition { parts: self.parts.iter().map(|p| p * k).collect() }
    }

    /// Union of parts.
    pub fn join(&self, o: &Self) -> Self {
        let mut v = self.parts.clone();
        v.extend_from_slice(&o.parts);
        Partition::new(v)
    }

    pub fn without_index(&self, i: usize) -> Self {
        let mut v = self.parts.clone();
        v.remove(i);
        Partition { parts: v }
    }

    fn beta(&self) -> Vec<i64> {
        let l = self.parts.len() as i64;
        self.parts.iter().enumerate().map(|(i, &p)| p as i64 + l - 1 - i as i64).collect()
    }

    fn from_beta(mut b: Vec<i64>) -> Self {
        b.sort_unstable_by(|x, y| y.cmp(x));
        let l = b.len() as i64;
        Partition::new(b.iter().enumerate().map(|(i, &x)| (x - (l - 1 - i as i64)) as u32).collect())
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!(self.parts)
    }
}

/// All partitions of n, lexicographically sorted.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn rec(n: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=n.min(max)).rev() {
            cur.push(p);
            rec(n - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n as u32, n as u32, &mut Vec::new(), &mut out);
    out.sort();
    out
}

type CharKey = (Partition, Partition);

fn char_cache() -> &'static RwLock<HashMap<CharKey, i128>> {
    static C: OnceLock<RwLock<HashMap<CharKey, i128>>> = OnceLock::new();
    C.get_or_init(|| RwLock::new(HashMap::new()))
}

fn mn(lambda: &Partition, sigma: &Partition) -> i128 {
    if sigma.is_empty() {
        return 1;
    }
    let key = (lambda.clone(), sigma.clone());
    if let Some(v) = char_cache().read().unwrap().get(&key) {
        return *v;
    }
    let r = sigma.parts[0] as i64;
    let rest = sigma.without_index(0);
    let beta = lambda.beta();
    let mut total = 0i128;
    for (idx, &x) in beta.iter().enumerate() {
        let y = x - r;
        if y < 0 || beta.contains(&y) {
            continue;
        }
        let between = beta.iter().filter(|&&z| z > y && z < x).count();
        let mut nb = beta.clone();
        nb[idx] = y;
        let sign = if between % 2 == 0 { 1 } else { -1 };
        total += sign * mn(&Partition::from_beta(nb), &rest);
    }
    char_cache().write().unwrap().insert(key, total);
    total
}

/// Irreducible character χ^λ evaluated on the class of cycle type σ.
pub fn mn_character(lambda: &Partition, sigma: &Partition) -> Result<Q> {
    if lambda.weight() != sigma.weight() {
        return Err(Error::WeightMismatch { left: lambda.weight(), right: sigma.weight() });
    }
    Ok(BigRational::from_integer(BigInt::from(mn(lambda, sigma))))
}

/// Polynomial in power sums p_σ with coefficients in a ring.
#[derive(Clone, Debug, PartialEq)]
pub struct PowerSumPoly<R: Ring> {
    terms: BTreeMap<Partition, R>,
}

impl<R: Ring> Default for PowerSumPoly<R> {
    fn default() -> Self {
        PowerSumPoly { terms: BTreeMap::new() }
    }
}

impl<R: Ring> PowerSumPoly<R> {
    pub fn monomial(sigma: Partition, c: R) -> Self {
        let mut p = Self::default();
        p.add_term(sigma, &c);
        p
    }

    pub fn add_term(&mut self, sigma: Partition, c: &R) {
        if c.is_zero() {
            return;
        }
        let v = match self.terms.get(&sigma) {
            Some(x) => x.radd(c),
            None => c.clone(),
        };
        if v.is_zero() {
            self.terms.remove(&sigma);
        } else {
            self.terms.insert(sigma, v);
        }
    }

    pub fn terms(&self) -> &BTreeMap<Partition, R> {
        &self.terms
    }

    pub fn coeff(&self, sigma: &Partition) -> R {
        self.terms.get(sigma).cloned().unwrap_or_else(R::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (s, c) in &o.terms {
            r.add_term(s.clone(), c);
        }
        r
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (s, c) in &o.terms {
            r.add_term(s.clone(), &c.rneg());
        }
        r
    }

    pub fn scale(&self, c: &R) -> Self {
        let mut r = Self::default();
        for (s, x) in &self.terms {
            r.add_term(s.clone(), &x.rmul(c));
        }
        r
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut r = Self::default();
        for (s1, c1) in &self.terms {
            for (s2, c2) in &o.terms {
                r.add_term(s1.join(s2), &c1.rmul(c2));
            }
        }
        r
    }

    /// Product restricted to total weight ≤ w.
    pub fn mul_trunc(&self, o: &Self, w: usize) -> Self {
        let mut r = Self::default();
        for (s1, c1) in &self.terms {
            for (s2, c2) in &o.terms {
                if s1.weight() + s2.weight() <= w {
                    r.add_term(s1.join(s2), &c1.rmul(c2));
                }
            }
        }
        r
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> PowerSumPoly<S> {
        let mut r = PowerSumPoly::default();
        for (s, c) in &self.terms {
            r.add_term(s.clone(), &f(c));
        }
        r
    }

    /// Substitute p_i ↦ p_{iQ}.
    pub fn adams(&self, k: u32) -> Self {
        let mut r = Self::default();
        for (s, c) in &self.terms {
            r.add_term(s.scaled(k), c);
        }
        r
    }

    /// Evaluate with p_i ↦ value(i) in a ring S into which R maps.
    pub fn evaluate<S: Ring>(&self, lift: impl Fn(&R) -> S, value: impl Fn(u32) -> S) -> S {
        let mut cache: HashMap<u32, S> = HashMap::new();
        let mut acc = S::zero();
        for (s, c) in &self.terms {
            let mut m = lift(c);
            for &p in s.parts() {
                let v = cache.entry(p).or_insert_with(|| value(p));
                m = m.rmul(v);
            }
            acc = acc.radd(&m);
        }
        acc
    }

    /// The second cut-and-join operator
    /// Ŵ₂ = ½ ∑_{a,b} ((a+b) p_a p_b ∂_{a+b} + ab p_{a+b} ∂_a ∂_b).
    pub fn cutjoin(&self) -> Self {
        let mut r = Self::default();
        for (s, c) in &self.terms {
            let parts = s.parts();
            let n = parts.len();
            // join two parts
            for i in 0..n {
                for j in (i + 1)..n {
                    let mut v: Vec<u32> = parts
                        .iter()
                        .enumerate()
                        .filter(|(k, _)| *k != i && *k != j)
                        .map(|(_, &p)| p)
                        .collect();
                    v.push(parts[i] + parts[j]);
                    r.add_term(Partition::new(v), &c.scale(&q(parts[i] as i64 * parts[j] as i64)));
                }
            }
            // cut one part
            for i in 0..n {
                let ci = parts[i];
                for a in 1..ci {
                    let mut v: Vec<u32> = s.without_index(i).parts;
                    v.push(a);
                    v.push(ci - a);
                    r.add_term(Partition::new(v), &c.scale(&crate::algebra::qf(ci as i64, 2)));
                }
            }
        }
        r
    }
}

/// s_R = ∑_σ χ^R_σ p_σ / z_σ.
pub fn schur_in_power_sums(r: &Partition) -> PowerSumPoly<Q> {
    let mut out = PowerSumPoly::default();
    for sigma in partitions_of(r.weight()) {
        let chi = mn_character(r, &sigma).unwrap();
        let z = BigRational::from_integer(sigma.z());
        out.add_term(sigma, &(chi / z));
    }
    out
}

/// Adams coefficients c^{R₁}_R for the Q-th Adams operation.
pub fn adams_coefficients(r: &Partition, qq: u32) -> BTreeMap<Partition, i64> {
    let n = r.weight();
    let sigmas = partitions_of(n);
    let mut out = BTreeMap::new();
    for r1 in partitions_of(n * qq as usize) {
        let mut acc = q(0);
        for sigma in &sigmas {
            let chi = mn_character(r, sigma).unwrap();
            if chi == q(0) {
                continue;
            }
            let chi1 = mn_character(&r1, &sigma.scaled(qq)).unwrap();
            acc += chi * chi1 / BigRational::from_integer(sigma.z());
        }
        assert!(acc.is_integer(), "non-integral Adams coefficient");
        let v: i64 = acc.to_integer().try_into().expect("Adams coefficient fits i64");
        if v != 0 {
            out.insert(r1, v);
        }
    }
    out
}

pub fn kappa(r: &Partition) -> i64 {
    r.kappa()
}

/// All set partitions of {0, …, n−1}, as lists of blocks.
pub fn set_partitions(n: usize) -> Vec<Vec<Vec<usize>>> {
    fn rec(i: usize, n: usize, cur: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        if i == n {
            out.push(cur.clone());
            return;
        }
        for b in 0..cur.len() {
            cur[b].push(i);
            rec(i + 1, n, cur, out);
            cur[b].pop();
        }
        cur.push(vec![i]);
        rec(i + 1, n, cur, out);
        cur.pop();
    }
    let mut out = Vec::new();
    rec(0, n, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::qf;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec())
    }

    #[test]
    fn counts() {
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
        assert_eq!(partitions_of(4).len(), 5);
        assert_eq!(partitions_of(10).len(), 42);
        let v = partitions_of(6);
        let mut w = v.clone();
        w.dedup();
        assert_eq!(v, w);
        assert_eq!(set_partitions(4).len(), 15);
    }

    #[test]
    fn small_characters() {
        assert_eq!(mn_character(&p(&[1]), &p(&[1])).unwrap(), q(1));
        assert_eq!(mn_character(&p(&[2]), &p(&[2])).unwrap(), q(1));
        assert_eq!(mn_character(&p(&[1, 1]), &p(&[2])).unwrap(), q(-1));
        assert_eq!(mn_character(&p(&[2, 1]), &p(&[1, 1, 1])).unwrap(), q(2));
        assert!(mn_character(&p(&[2]), &p(&[1])).is_err());
    }

    #[test]
    fn column_orthogonality_weight5() {
        let ps = partitions_of(5);
        for s in &ps {
            for t in &ps {
                let sum: Q = ps
                    .iter()
                    .map(|l| mn_character(l, s).unwrap() * mn_character(l, t).unwrap())
                    .fold(q(0), |a, b| a + b);
                let expect = if s == t { BigRational::from_integer(s.z()) } else { q(0) };
                assert_eq!(sum, expect);
            }
        }
    }

    #[test]
    fn schur_small() {
        assert_eq!(schur_in_power_sums(&p(&[1])), PowerSumPoly::monomial(p(&[1]), q(1)));
        let s2 = schur_in_power_sums(&p(&[2]));
        assert_eq!(s2.coeff(&p(&[1, 1])), qf(1, 2));
        assert_eq!(s2.coeff(&p(&[2])), qf(1, 2));
        let s11 = schur_in_power_sums(&p(&[1, 1]));
        assert_eq!(s11.coeff(&p(&[2])), qf(-1, 2));
    }

    // s_{21}(x1,x2,x3) = ∑ over SSYT, compared with the power-sum expansion
    // evaluated at a few rational points.
    #[test]
    fn schur_21_monomial_oracle() {
        let s21 = schur_in_power_sums(&p(&[2, 1]));
        let pts = [[q(1), q(2), q(3)], [qf(1, 2), q(-1), q(5)], [q(0), q(7), qf(-2, 3)]];
        for x in pts {
            let ps = |i: u32| x.iter().map(|v| crate::algebra::series::pow_q(v, i as u64)).fold(q(0), |a, b| a + b);
            let val = s21.evaluate(|c| c.clone(), ps);
            // s21 = m21 + 2 m111
            let (a, b, c) = (&x[0], &x[1], &x[2]);
            let m21 = a * a * b + a * a * c + b * b * a + b * b * c + c * c * a + c * c * b;
            let m111 = a * b * c;
            assert_eq!(val, m21 + q(2) * m111);
        }
    }

    #[test]
    fn adams_examples() {
        let one = adams_coefficients(&p(&[2, 1]), 1);
        assert_eq!(one.len(), 1);
        assert_eq!(one[&p(&[2, 1])], 1);
        let two = adams_coefficients(&p(&[1]), 2);
        assert_eq!(two[&p(&[2])], 1);
        assert_eq!(two[&p(&[1, 1])], -1);
        let three = adams_coefficients(&p(&[1]), 3);
        assert_eq!(three[&p(&[3])], 1);
        assert_eq!(three[&p(&[2, 1])], -1);
        assert_eq!(three[&p(&[1, 1, 1])], 1);
    }

    #[test]
    fn adams_reproduces_plethysm() {
        for w in 1..=3 {
            for qq in 1..=3u32 {
                for r in partitions_of(w) {
                    let lhs = schur_in_power_sums(&r).adams(qq);
                    let mut rhs = PowerSumPoly::default();
                    for (r1, c) in adams_coefficients(&r, qq) {
                        rhs = rhs.add(&schur_in_power_sums(&r1).scale(&q(c)));
                    }
                    assert_eq!(lhs, rhs, "R={} Q={}", r, qq);
                }
            }
        }
    }

    #[test]
    fn kappa_values_and_transpose() {
        assert_eq!(kappa(&p(&[1])), 0);
        assert_eq!(kappa(&p(&[2])), 1);
        assert_eq!(kappa(&p(&[1, 1])), -1);
        assert_eq!(kappa(&p(&[3, 1])), 2);
        for w in 0..=8 {
            for r in partitions_of(w) {
                assert_eq!(kappa(&r.transpose()), -kappa(&r));
            }
        }
    }

    #[test]
    fn cutjoin_eigenvalues() {
        assert!(PowerSumPoly::monomial(p(&[1]), q(1)).cutjoin().is_zero());
        assert_eq!(
            PowerSumPoly::monomial(p(&[2]), q(1)).cutjoin(),
            PowerSumPoly::monomial(p(&[1, 1]), q(1))
        );
        for w in 1..=6 {
            for r in partitions_of(w) {
                let s = schur_in_power_sums(&r);
                assert_eq!(s.cutjoin(), s.scale(&q(kappa(&r))), "R={}", r);
            }
        }
    }
}
