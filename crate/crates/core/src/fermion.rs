//! Vacuum expectations of ℰ-operators, the Ã-operators, and the
//! disconnected and connected correlators K_μ, K°_μ.

use crate::algebra::{exp_w_coefficients, zeta_ratio, zeta_series, Ring, Series, Q};
use crate::error::{Error, Result};
use crate::knot::Point;
use crate::par::map_collect;
use crate::partitions::{set_partitions, Partition};
use num::{BigInt, BigRational};
use std::collections::HashMap;
use std::sync::RwLock;

/// ℰ̃_n(c u), or ℰ_n(c u) when `tilde` is false.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EOp {
    pub energy: i64,
    pub arg: Q,
    pub tilde: bool,
}

impl EOp {
    pub fn tilde(energy: i64, arg: Q) -> Self {
        EOp { energy, arg, tilde: true }
    }

    pub fn plain(energy: i64, arg: Q) -> Self {
        EOp { energy, arg, tilde: false }
    }
}

type Key = Vec<(i64, Q)>;

/// Memoized evaluator of ⟨ℰ̃…ℰ̃⟩ at a fixed u-precision. Values are power
/// series with rational coefficients.
pub struct Correlators {
    cap: i64,
    memo: RwLock<HashMap<Key, Series<Q>>>,
}

impl Correlators {
    pub fn new(cap: i64) -> Self {
        Correlators { cap, memo: RwLock::new(HashMap::new()) }
    }

    pub fn cap(&self) -> i64 {
        self.cap
    }

    /// ⟨∏ ops⟩; each plain ℰ_0 is split into ℰ̃_0 + 1/ζ. The result has
    /// floor ≥ −(number of plain ℰ_0 factors).
    pub fn eval(&self, ops: &[EOp]) -> Result<Series<Q>> {
        for o in ops {
            if !o.tilde && o.energy == 0 && o.arg.is_zero() {
                return Err(Error::InvalidArgument("ℰ_0(0) has a pole".into()));
            }
        }
        let zeros: Vec<usize> = (0..ops.len()).filter(|&i| !ops[i].tilde && ops[i].energy == 0).collect();
        let inner = self.cap;
        let mut acc = Series::<Q>::zero_with_cap(inner - zeros.len() as i64);
        for mask in 0u32..(1 << zeros.len()) {
            let mut scalar = Series::<Q>::one();
            let mut rest = Vec::with_capacity(ops.len());
            let mut zi = 0;
            for (i, o) in ops.iter().enumerate() {
                if zi < zeros.len() && zeros[zi] == i {
                    let take_scalar = mask & (1 << zi) != 0;
                    zi += 1;
                    if take_scalar {
                        scalar = scalar.mul(&crate::algebra::inv_zeta::<Q>(&o.arg, inner));
                        continue;
                    }
                }
                rest.push((o.energy, o.arg.clone()));
            }
            let c = self.tilde(&rest);
            if !c.is_zero() {
                acc = acc.add(&scalar.mul(&c));
            }
        }
        Ok(acc)
    }

    /// ⟨ℰ̃_{n₁}(c₁u)⋯ℰ̃_{n_k}(c_k u)⟩, commuting the leftmost operator to the
    /// right with [ℰ̃_a(z), ℰ̃_b(w)] = ζ(aw − bz) ℰ_{a+b}(z + w).
    pub fn tilde(&self, ops: &[(i64, Q)]) -> Series<Q> {
        let cap = self.cap;
        if ops.is_empty() {
            return Series::one().truncate(cap);
        }
        if ops.iter().map(|o| o.0).sum::<i64>() != 0 || ops[0].0 <= 0 || ops[ops.len() - 1].0 >= 0 {
            return Series::zero_with_cap(cap);
        }
        if let Some(v) = self.memo.read().unwrap().get(ops) {
            return v.clone();
        }
        let (a, z) = &ops[0];
        let rest = &ops[1..];
        let mut acc = Series::<Q>::zero_with_cap(cap);
        for j in 0..rest.len() {
            let (b, w) = &rest[j];
            let x = Q::from_integer((*a).into()) * w - Q::from_integer((*b).into()) * z;
            let e = a + b;
            let s = z + w;
            let replaced = |op: (i64, Q)| {
                let mut v = rest.to_vec();
                v[j] = op;
                v
            };
            if e != 0 || !s.is_zero() {
                // ℰ̃_e(s) part; ℰ̃_0(0) is the charge operator, zero on charge 0.
                if !x.is_zero() {
                    let c = self.tilde(&replaced((e, s.clone())));
                    if !c.is_zero() {
                        acc = acc.add(&zeta_series::<Q>(&x, 0, cap).mul(&c));
                    }
                }
            }
            if e == 0 {
                // scalar part ζ(xu)/ζ(su); as s → 0 it tends to a.
                let mut v = rest.to_vec();
                v.remove(j);
                let c = self.tilde(&v);
                if c.is_zero() {
                    continue;
                }
                let f = if s.is_zero() {
                    Series::constant(Q::from_integer((*a).into()))
                } else if x.is_zero() {
                    continue;
                } else {
                    zeta_ratio::<Q>(&x, &s, cap)
                };
                acc = acc.add(&f.mul(&c));
            }
        }
        let acc = acc.truncate(cap);
        self.memo.write().unwrap().insert(ops.to_vec(), acc.clone());
        acc
    }
}

/// One-shot ⟨∏ ops⟩ to u^cap.
pub fn e_correlator(ops: &[EOp], cap: i64) -> Result<Series<Q>> {
    let extra = ops.iter().filter(|o| !o.tilde && o.energy == 0).count() as i64;
    Ok(Correlators::new(cap + extra).eval(ops)?.truncate(cap))
}

/// Coefficients of ℰ_{k−m}(um) in Ã(m, um), for 0 ≤ k ≤ kmax.
#[derive(Clone, Debug)]
pub struct AtildeCoeffs<R: Ring> {
    pub m: u32,
    pub cap: i64,
    pub coeffs: Vec<Series<R>>,
}

/// (A^{bm}/m)·[w^k] exp(∑_i (A^i − A^{−i}) ζ(ium)/ζ(iu/b) w^i / i).
pub fn a_tilde_coeffs<R: Ring>(m: u32, pt: &Point<R>, kmax: usize, cap: i64) -> AtildeCoeffs<R> {
    let mq = Q::from_integer(m.into());
    let binv = pt.knot.b.recip();
    // y_i, the weighted exponent coefficients
    let y: Vec<Series<R>> = (0..=kmax)
        .map(|i| {
            if i == 0 {
                return Series::exact_zero();
            }
            let iq = Q::from_integer(i.into());
            zeta_ratio::<R>(&(&iq * &mq), &(&iq * &binv), cap)
                .mul_coeff(&pt.a_diff(i as i64))
                .scale(&iq.recip())
        })
        .collect();
    let c = exp_w_coefficients(&y, kmax, cap);
    let pref = pt.ab(m as i64).scale(&mq.recip());
    AtildeCoeffs { m, cap, coeffs: c.into_iter().map(|s| s.mul_coeff(&pref)).collect() }
}

/// All compositions (k_1..k_n) of `total` into n non-negative parts.
fn compositions(total: usize, n: usize) -> Vec<Vec<usize>> {
    fn rec(left: usize, slots: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if slots == 1 {
            cur.push(left);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for k in 0..=left {
            cur.push(k);
            rec(left - k, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        rec(total, n, &mut Vec::new(), &mut out);
    }
    out
}

/// ⟨∏ Ã(μ_i, uμ_i)⟩ with the operators in the given order.
pub fn k_mu_ordered<R: Ring>(pt: &Point<R>, parts: &[u32], cap: i64) -> Series<R> {
    let n = parts.len();
    if n == 0 {
        return Series::one().truncate(cap);
    }
    let total: usize = parts.iter().map(|&p| p as usize).sum();
    let inner = cap + n as i64;
    let coeffs: Vec<AtildeCoeffs<R>> = parts.iter().map(|&m| a_tilde_coeffs(m, pt, total, inner)).collect();
    let corr = Correlators::new(inner);
    let tuples: Vec<Vec<usize>> = compositions(total, n)
        .into_iter()
        .filter(|ks| {
            // the first operator must lower energy (or be a plain ℰ_0) and the last must raise it
            ks[0] >= parts[0] as usize && ks[n - 1] <= parts[n - 1] as usize
        })
        .collect();
    let terms = map_collect(&tuples, |ks| {
        let ops: Vec<EOp> = ks
            .iter()
            .zip(parts)
            .map(|(&k, &m)| EOp::plain(k as i64 - m as i64, Q::from_integer(m.into())))
            .collect();
        let c = corr.eval(&ops).expect("positive arguments");
        if c.is_zero() {
            return None;
        }
        let mut t = c.map(|x| R::from_q(x));
        for (i, &k) in ks.iter().enumerate() {
            t = t.mul(&coeffs[i].coeffs[k]);
        }
        Some(t)
    });
    let mut acc = Series::<R>::zero_with_cap(inner);
    for t in terms.into_iter().flatten() {
        acc = acc.add(&t);
    }
    acc.truncate(cap)
}

pub fn k_mu<R: Ring>(pt: &Point<R>, mu: &Partition, cap: i64) -> Series<R> {
    k_mu_ordered(pt, mu.parts(), cap)
}

/// Cumulants of K over set partitions of the parts of μ.
pub struct ConnectedCorrelator<R: Ring> {
    pub mu: Partition,
    pub value: Series<R>,
}

impl<R: Ring> ConnectedCorrelator<R> {
    /// [u^k] K°_μ.
    pub fn coeff(&self, k: i64) -> Result<R> {
        self.value.try_coeff(k)
    }
}

/// Computes K°_ν for every sub-multiset ν of μ that the inversion needs.
pub fn connected_k<R: Ring>(pt: &Point<R>, mu: &Partition, cap: i64) -> ConnectedCorrelator<R> {
    let n = mu.len();
    let parts = mu.parts();
    let blocks = set_partitions(n);
    let mut subs: Vec<Partition> = Vec::new();
    for pi in &blocks {
        for b in pi {
            let p = Partition::new(b.iter().map(|&i| parts[i]).collect());
            if !subs.contains(&p) {
                subs.push(p);
            }
        }
    }
    // K_ν has floor −ℓ(ν); products of blocks need slack n.
    let inner = cap + n as i64;
    let vals = map_collect(&subs, |p| k_mu(pt, p, inner));
    let table: HashMap<Partition, Series<R>> = subs.into_iter().zip(vals).collect();
    let mut acc = Series::<R>::zero_with_cap(inner);
    for pi in &blocks {
        let nb = pi.len();
        let mut t = Series::<R>::one();
        for b in pi {
            let p = Partition::new(b.iter().map(|&i| parts[i]).collect());
            t = t.mul(&table[&p]);
        }
        // (−1)^{|π|−1} (|π|−1)!
        let mut c = BigInt::from(1);
        for j in 1..nb {
            c *= j;
        }
        if nb % 2 == 0 {
            c = -c;
        }
        acc = acc.add(&t.scale(&BigRational::from_integer(c)));
    }
    ConnectedCorrelator { mu: mu.clone(), value: acc.truncate(cap) }
}

/// C^{(g)}_μ = Q^n b^{2g−2+n} [u^{2g−2+n}] K°_μ.
pub fn c_g<R: Ring>(g: i64, mu: &Partition, pt: &Point<R>) -> Result<R> {
    let n = mu.len() as i64;
    let order = 2 * g - 2 + n;
    if order < -1 || n == 0 {
        return Err(Error::StabilityRange { order, floor: -n });
    }
    let cc = connected_k(pt, mu, order + 1);
    let k = &pt.knot;
    let mut f = pow_q(&Q::from_integer(k.q.into()), n as u64);
    let bp = if order >= 0 { pow_q(&k.b, order as u64) } else { pow_q(&k.b.recip(), (-order) as u64) };
    f *= bp;
    Ok(cc.coeff(order)?.scale(&f))
}

fn pow_q(x: &Q, e: u64) -> Q {
    crate::algebra::series::pow_q(x, e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{inv_zeta, q, qf, LaurentPoly};
    use crate::homfly::ov_coefficient_rossojones;
    use crate::knot::KnotParams;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec())
    }

    #[test]
    fn correlator_basics() {
        assert_eq!(e_correlator(&[], 4).unwrap(), Series::one().truncate(4));
        assert!(e_correlator(&[EOp::tilde(0, q(1))], 4).unwrap().is_zero());
        for (z, w) in [(q(1), q(2)), (qf(1, 3), qf(-5, 2)), (q(3), q(-1))] {
            let v = e_correlator(&[EOp::tilde(1, z), EOp::tilde(-1, w)], 5).unwrap();
            assert_eq!(v, Series::one().truncate(5));
        }
        let v = e_correlator(&[EOp::plain(0, q(2))], 4).unwrap();
        assert_eq!(v, inv_zeta::<Q>(&q(2), 4));
        assert!(e_correlator(&[EOp::tilde(2, q(1)), EOp::tilde(-1, q(1))], 4).unwrap().is_zero());
    }

    // ⟨α_a α_{-a}⟩ = a, ⟨α_1 α_1 α_{-1} α_{-1}⟩ = 2 with α_k = ℰ_k(0).
    #[test]
    fn bosonic_limits() {
        for a in 1..5 {
            let v = e_correlator(&[EOp::tilde(a, q(0)), EOp::tilde(-a, q(0))], 3).unwrap();
            assert_eq!(v, Series::constant(q(a)).truncate(3));
        }
        let ops = [EOp::tilde(1, q(0)), EOp::tilde(1, q(0)), EOp::tilde(-1, q(0)), EOp::tilde(-1, q(0))];
        assert_eq!(e_correlator(&ops, 3).unwrap(), Series::constant(q(2)).truncate(3));
    }

    #[test]
    fn atilde_matches_partition_sum() {
        let k = KnotParams::new(2, 3).unwrap();
        let pt = Point::symbolic(&k);
        let cap = 5;
        for m in 1..=3u32 {
            let co = a_tilde_coeffs(m, &pt, 4, cap);
            assert_eq!(co.coeffs[0], Series::constant(pt.ab(m as i64).scale(&qf(1, m as i64))).truncate(cap));
            let x = |i: usize| {
                let iq = q(i as i64);
                zeta_ratio::<LaurentPoly>(&(&iq * q(m as i64)), &(&iq / &k.b), cap)
                    .mul_coeff(&pt.a_diff(i as i64))
                    .scale(&iq.recip())
            };
            for kk in 1..=4usize {
                // ∑_{λ⊢k} ∏ x_i^{λ_i−λ_{i+1}}/(λ_i−λ_{i+1})!
                let mut sum = Series::<LaurentPoly>::zero_with_cap(cap);
                for lam in crate::partitions::partitions_of(kk) {
                    let t = lam.transpose();
                    let mut term = Series::<LaurentPoly>::one();
                    for (i, mult) in t.multiplicities() {
                        let mut f = BigInt::from(1);
                        for j in 1..=mult {
                            f *= j;
                        }
                        term = term.mul(&x(i as usize).pow(mult as u64)).scale(&BigRational::new(1.into(), f));
                    }
                    sum = sum.add(&term);
                }
                let expect = sum.mul_coeff(&pt.ab(m as i64).scale(&qf(1, m as i64))).truncate(cap);
                assert_eq!(co.coeffs[kk], expect, "m={} k={}", m, kk);
            }
        }
    }

    #[test]
    fn k1_value() {
        let k = KnotParams::new(2, 3).unwrap();
        let pt = Point::symbolic(&k);
        let v = k_mu(&pt, &p(&[1]), 4);
        let expect = inv_zeta::<LaurentPoly>(&k.b.recip(), 4).mul_coeff(&pt.ab(1).rmul(&pt.a_diff(1)));
        assert_eq!(v, expect);
    }

    #[test]
    fn agrees_with_characters() {
        for (qq, pp) in [(2, 3), (3, 2)] {
            let k = KnotParams::new(qq, pp).unwrap();
            let pt = Point::symbolic(&k);
            for mu in [p(&[2]), p(&[2, 1]), p(&[3]), p(&[1, 1]), p(&[2, 2])] {
                assert_eq!(k_mu(&pt, &mu, 3), ov_coefficient_rossojones(&pt, &mu, 3).unwrap(), "mu={}", mu);
            }
        }
    }

    #[test]
    fn symmetric_in_order() {
        let k = KnotParams::new(2, 5).unwrap();
        let pt = Point::at(&k, qf(2, 7));
        let a = k_mu_ordered(&pt, &[3, 1, 2], 3);
        let b = k_mu_ordered(&pt, &[1, 2, 3], 3);
        assert_eq!(a, b);
    }

    #[test]
    fn c0_one_point_m1() {
        let k = KnotParams::new(2, 3).unwrap();
        let pt = Point::symbolic(&k);
        // Q(A² − 1)A^{b−1}
        let expect = pt.a(2).rsub(&LaurentPoly::one()).rmul(&pt.ab(1)).rmul(&pt.a(-1)).scale(&q(2));
        assert_eq!(c_g(0, &p(&[1]), &pt).unwrap(), expect);
    }
}
