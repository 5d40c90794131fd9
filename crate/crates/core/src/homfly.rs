//! Colored HOMFLY-PT polynomials of torus knots in the spectral framing and
//! the coefficients K_μ(u) of the extended Ooguri-Vafa partition function,
//! computed from characters (Rosso-Jones) and from the cut-and-join
//! exponential.

use crate::algebra::{exp_series, inv_zeta, Ring, Series, Q};
use crate::error::{Error, Result};
use crate::knot::Point;
use crate::partitions::{adams_coefficients, mn_character, partitions_of, schur_in_power_sums, Partition, PowerSumPoly};
use num::{BigInt, BigRational};
use std::collections::BTreeMap;

/// p*_i = (A^i − A^{−i})/ζ(iu/b), floor −1, known to u^cap.
pub fn topological_locus<R: Ring>(pt: &Point<R>, i: u32, cap: i64) -> Series<R> {
    let c = Q::from_integer(i.into()) / &pt.knot.b;
    inv_zeta::<R>(&c, cap).mul_coeff(&pt.a_diff(i as i64))
}

/// The values p*_1, …, p*_n at a fixed precision.
pub struct TopLocus<R: Ring> {
    values: Vec<Series<R>>,
}

impl<R: Ring> TopLocus<R> {
    pub fn new(pt: &Point<R>, n: usize, cap: i64) -> Self {
        TopLocus { values: (1..=n as u32).map(|i| topological_locus(pt, i, cap)).collect() }
    }

    pub fn get(&self, i: u32) -> Series<R> {
        self.values[i as usize - 1].clone()
    }

    pub fn eval(&self, f: &PowerSumPoly<Q>) -> Series<R> {
        f.evaluate(|c| Series::constant(R::from_q(c)), |i| self.get(i))
    }
}

/// H_R(p) = A^{P|R|} ∑_{R₁⊢Q|R|} c^{R₁}_R e^{uκ_{R₁}} s_{R₁}(p); the twist
/// uses the content sum of R₁, which is what makes Ŵ₂ act diagonally.
pub fn homfly_extended<R: Ring>(pt: &Point<R>, r: &Partition, cap: i64) -> PowerSumPoly<Series<R>> {
    let pref = pt.ab(pt.knot.qi() * r.weight() as i64);
    let mut out = PowerSumPoly::default();
    for (r1, c) in adams_coefficients(r, pt.knot.q) {
        let tw = exp_series::<R>(&Q::from_integer(r1.kappa().into()), cap).mul_coeff(&pref.scale(&Q::from_integer(c.into())));
        for (sigma, x) in schur_in_power_sums(&r1).terms() {
            out.add_term(sigma.clone(), &tw.scale(x));
        }
    }
    out
}

fn check_cap(cap: i64) -> Result<()> {
    if cap < 1 {
        return Err(Error::CapTooSmall { needed: 1, cap });
    }
    Ok(())
}

fn prod_ab_over_parts<R: Ring>(pt: &Point<R>, mu: &Partition) -> R {
    let w = mu.weight() as i64;
    let d: i64 = mu.parts().iter().map(|&p| p as i64).product();
    pt.ab(w).scale(&BigRational::new(1.into(), d.into()))
}

/// K_μ(u) from characters. When every part of μ is divisible by Q this sums
/// genuine HOMFLY-PT polynomials H_R(p*) over R ⊢ |μ|/Q; otherwise it uses
/// the extended expansion ∏(A^{bμ_i}/μ_i) ∑_λ χ^λ_μ e^{uκ_λ} s_λ(p*).
pub fn ov_coefficient_rossojones<R: Ring>(pt: &Point<R>, mu: &Partition, cap: i64) -> Result<Series<R>> {
    check_cap(cap)?;
    if mu.is_empty() {
        return Ok(Series::one());
    }
    let w = mu.weight();
    let inner = cap + w as i64;
    let loc = TopLocus::new(pt, w, inner);
    let qq = pt.knot.q;
    let total = if mu.parts().iter().all(|p| p % qq == 0) {
        let nu = Partition::new(mu.parts().iter().map(|p| p / qq).collect());
        let mut schur_cache: BTreeMap<Partition, Series<R>> = BTreeMap::new();
        let mut acc = Series::<R>::zero_with_cap(inner);
        for r in partitions_of(nu.weight()) {
            let chi = mn_character(&r, &nu)?;
            if chi == Q::from_integer(0.into()) {
                continue;
            }
            let mut h = Series::<R>::zero_with_cap(inner);
            for (r1, c) in adams_coefficients(&r, qq) {
                let s = schur_cache.entry(r1.clone()).or_insert_with(|| loc.eval(&schur_in_power_sums(&r1))).clone();
                let tw = exp_series::<R>(&Q::from_integer(r1.kappa().into()), inner);
                h = h.add(&s.mul(&tw).scale(&Q::from_integer(c.into())));
            }
            acc = acc.add(&h.scale(&chi));
        }
        // Q^{-n} A^{P|ν|} / ∏ν_i = A^{b|μ|} / ∏μ_i
        let d: BigInt = nu.parts().iter().map(|&p| BigInt::from(p * qq)).product();
        acc.mul_coeff(&pt.ab(w as i64)).scale(&BigRational::new(1.into(), d))
    } else {
        let mut acc = Series::<R>::zero_with_cap(inner);
        for lambda in partitions_of(w) {
            let chi = mn_character(&lambda, mu)?;
            if chi == Q::from_integer(0.into()) {
                continue;
            }
            let s = loc.eval(&schur_in_power_sums(&lambda));
            let tw = exp_series::<R>(&Q::from_integer(lambda.kappa().into()), inner);
            acc = acc.add(&s.mul(&tw).scale(&chi));
        }
        acc.mul_coeff(&prod_ab_over_parts(pt, mu))
    };
    debug_assert!(total.cap >= cap);
    Ok(total.truncate(cap))
}

/// K_μ(u) = ∏(A^{bμ_i}/μ_i) · [e^{uŴ₂} p_μ](p*), with the exponential
/// expanded term by term.
pub fn ov_coefficient_cutjoin<R: Ring>(pt: &Point<R>, mu: &Partition, cap: i64) -> Result<Series<R>> {
    check_cap(cap)?;
    if mu.is_empty() {
        return Ok(Series::one());
    }
    let w = mu.weight();
    let inner = cap + w as i64;
    let loc = TopLocus::new(pt, w, inner);
    let mut term = PowerSumPoly::monomial(mu.clone(), Q::from_integer(1.into()));
    let mut acc = Series::<R>::zero_with_cap(inner);
    let mut fact = BigInt::from(1);
    // p_σ(p*) has valuation ≥ −ℓ(σ) ≥ −|μ|, so u^k terms with k ≥ cap + |μ| are invisible.
    for k in 0..(cap + w as i64) {
        if term.is_zero() {
            break;
        }
        if k > 0 {
            fact *= k;
        }
        let v = loc.eval(&term).shift(k).scale(&BigRational::new(1.into(), fact.clone()));
        acc = acc.add(&v);
        term = term.cutjoin();
    }
    Ok(acc.mul_coeff(&prod_ab_over_parts(pt, mu)).truncate(cap))
}

pub fn cutjoin_apply<R: Ring>(f: &PowerSumPoly<R>) -> PowerSumPoly<R> {
    f.cutjoin()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{q, zeta_series, LaurentPoly};
    use crate::knot::KnotParams;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec())
    }

    #[test]
    fn locus_leading_term_and_antisymmetry() {
        let k = KnotParams::new(2, 3).unwrap();
        let pt = Point::symbolic(&k);
        let s = topological_locus(&pt, 1, 4);
        assert_eq!(s.coeff(-1), pt.a_diff(1).scale(&k.b));
        let flipped = s.map(|c| c.flip());
        assert_eq!(flipped, s.neg());
        assert_eq!(s.coeff(0), LaurentPoly::zero());
    }

    #[test]
    fn homfly_trefoil_fundamental() {
        let k = KnotParams::new(2, 3).unwrap();
        let pt = Point::symbolic(&k);
        let h = homfly_extended(&pt, &p(&[1]), 4);
        // A³(e^{u} s₂ − e^{−u} s₁₁), weight-2 monomials only
        for sigma in h.terms().keys() {
            assert_eq!(sigma.weight(), 2);
        }
        let a3 = LaurentPoly::ahat(6);
        let ep = exp_series::<LaurentPoly>(&q(1), 4);
        let em = exp_series::<LaurentPoly>(&q(-1), 4);
        let half = crate::algebra::qf(1, 2);
        let c11 = ep.sub(&em).scale(&half).mul_coeff(&a3);
        let c2 = ep.add(&em).scale(&half).mul_coeff(&a3);
        assert_eq!(h.coeff(&p(&[1, 1])), c11);
        assert_eq!(h.coeff(&p(&[2])), c2);
    }

    #[test]
    fn unknot_trivial() {
        let k = KnotParams::new(1, 1).unwrap();
        let pt = Point::symbolic(&k);
        let h = homfly_extended(&pt, &p(&[1]), 3);
        assert_eq!(h.terms().len(), 1);
        assert_eq!(h.coeff(&p(&[1])), Series::constant(LaurentPoly::ahat(1)).truncate(3));
    }

    #[test]
    fn k1_closed_form() {
        for (qq, pp) in [(1, 1), (2, 3), (3, 2)] {
            let k = KnotParams::new(qq, pp).unwrap();
            let pt = Point::symbolic(&k);
            let expect = zeta_series::<LaurentPoly>(&(Q::from_integer(1.into()) / &k.b), 1, 6)
                .shift(-1)
                .inverse()
                .unwrap()
                .shift(-1)
                .mul_coeff(&pt.ab(1).rmul(&pt.a_diff(1)))
                .truncate(4);
            let rj = ov_coefficient_rossojones(&pt, &p(&[1]), 4).unwrap();
            let cj = ov_coefficient_cutjoin(&pt, &p(&[1]), 4).unwrap();
            assert_eq!(rj, expect);
            assert_eq!(cj, expect);
        }
    }

    #[test]
    fn routes_agree_small() {
        let k = KnotParams::new(2, 3).unwrap();
        let pt = Point::symbolic(&k);
        for mu in [p(&[2]), p(&[2, 2]), p(&[3, 1]), p(&[4]), p(&[1, 1, 1])] {
            let a = ov_coefficient_rossojones(&pt, &mu, 3).unwrap();
            let b = ov_coefficient_cutjoin(&pt, &mu, 3).unwrap();
            assert_eq!(a, b, "mu={}", mu);
        }
    }

    #[test]
    fn cutjoin_on_p2() {
        let f = PowerSumPoly::monomial(p(&[2]), q(1));
        assert_eq!(cutjoin_apply(&f), PowerSumPoly::monomial(p(&[1, 1]), q(1)));
    }

    #[test]
    fn empty_and_cap() {
        let k = KnotParams::new(2, 3).unwrap();
        let pt = Point::symbolic(&k);
        assert_eq!(ov_coefficient_rossojones(&pt, &Partition::empty(), 3).unwrap(), Series::one());
        assert!(ov_coefficient_cutjoin(&pt, &p(&[1]), 0).is_err());
    }
}
