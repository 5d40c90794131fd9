//! The principally specialized wave function Ψ(Λ) = ∑ ψ_ℓ Λ^ℓ and the
//! difference operator that annihilates it.
//!
//! Exponentials are monomials in t = e^{ħ/(2Q)}, so e^{ħ/2} = t^Q and
//! e^{−ħb} = t^{−2P}. ψ_ℓ is a Laurent polynomial in (Â, t) over a
//! denominator in t alone.

use crate::algebra::{binomial_series, LaurentPoly, MPoly, Ring, Series, Q};
use crate::error::Result;
use crate::knot::{KnotParams, Point};
use crate::par::map_collect;
use crate::partitions::{schur_in_power_sums, Partition};
use crate::report::CheckReport;
use serde_json::json;

/// Position of Â in the bivariate polynomials of this module.
pub const AH: usize = 0;
/// Position of t.
pub const T: usize = 1;

fn mono(ah: i64, t: i64, c: i64) -> MPoly {
    MPoly::monomial(&[ah as i32, t as i32], Q::from_integer(c.into()))
}

fn t_laurent(p: &LaurentPoly) -> MPoly {
    MPoly::from_laurent(p, T)
}

/// t^{−a} − t^{a}
fn t_diff(a: i64) -> LaurentPoly {
    LaurentPoly::t(-a).rsub(&LaurentPoly::t(a))
}

#[derive(Clone, Debug, PartialEq)]
pub struct WaveTerm {
    pub num: MPoly,
    pub den: LaurentPoly,
}

impl WaveTerm {
    /// Equality of fractions by cross-multiplication.
    pub fn same_as(&self, o: &WaveTerm) -> bool {
        self.num.rmul(&t_laurent(&o.den)) == o.num.rmul(&t_laurent(&self.den))
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// t → t⁻¹.
    pub fn flip_t(&self) -> WaveTerm {
        WaveTerm { num: flip_var(&self.num, T), den: self.den.flip() }
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({"num": self.num.to_json(), "den": self.den.to_json()})
    }
}

fn flip_var(p: &MPoly, i: usize) -> MPoly {
    let mut r = MPoly::default();
    for (m, c) in p.terms() {
        let mut m = m.clone();
        if m.len() > i {
            m[i] = -m[i];
        }
        r.add_term(m, c);
    }
    r
}

/// ∏_{i=lo}^{hi} (t^{−Qi} − t^{Qi})
fn den_range(k: &KnotParams, lo: i64, hi: i64) -> LaurentPoly {
    (lo..=hi).fold(LaurentPoly::one(), |acc, i| acc.rmul(&t_diff(k.qi() * i)))
}

/// ψ_ℓ = A^{ℓb} e^{−ħb(ℓ²−ℓ)/2} ∏_{i=1}^ℓ (A e^{−ħ(i−1)/2} − A⁻¹ e^{ħ(i−1)/2})/(e^{−ħi/2} − e^{ħi/2}).
pub fn psi_coefficient(k: &KnotParams, l: u32) -> WaveTerm {
    let (qq, pp) = (k.qi(), k.pi());
    let li = l as i64;
    let mut num = mono(pp * li, -pp * (li * li - li), 1);
    for i in 1..=li {
        num = num.rmul(&mono(qq, -qq * (i - 1), 1).rsub(&mono(-qq, qq * (i - 1), 1)));
    }
    WaveTerm { num, den: den_range(k, 1, li) }
}

pub fn wave_function(k: &KnotParams, n: u32) -> Vec<WaveTerm> {
    let ls: Vec<u32> = (0..=n).collect();
    map_collect(&ls, |&l| psi_coefficient(k, l))
}

/// One term Λ^{shift} Â^{ahat} e^{(t_rate/(2Q)) ħ Λ d/dΛ} of a difference operator.
#[derive(Clone, Debug)]
pub struct OpTerm {
    pub shift: i64,
    pub ahat: i64,
    pub t_rate: i64,
    pub coeff: i64,
}

/// (e^{−ħD/2} − e^{ħD/2}) − Λ A^b e^{−ħbD}(A e^{−ħD/2} − A⁻¹ e^{ħD/2}), D = Λ d/dΛ.
pub fn qsc_operator(k: &KnotParams) -> Vec<OpTerm> {
    let (qq, pp) = (k.qi(), k.pi());
    vec![
        OpTerm { shift: 0, ahat: 0, t_rate: -qq, coeff: 1 },
        OpTerm { shift: 0, ahat: 0, t_rate: qq, coeff: -1 },
        OpTerm { shift: 1, ahat: pp + qq, t_rate: -2 * pp - qq, coeff: -1 },
        OpTerm { shift: 1, ahat: pp - qq, t_rate: -2 * pp + qq, coeff: 1 },
    ]
}

/// Coefficients of Λ^ℓ, 1 ≤ ℓ ≤ n, of the operator applied to Ψ, each over
/// the denominator of ψ_ℓ.
pub fn qc_residual(k: &KnotParams, n: u32) -> Vec<WaveTerm> {
    let psi = wave_function(k, n);
    let op = qsc_operator(k);
    let ls: Vec<i64> = (1..=n as i64).collect();
    map_collect(&ls, |&l| {
        let mut num = MPoly::zero();
        for term in &op {
            let j = l - term.shift;
            if j < 0 {
                continue;
            }
            // bring ψ_j over the denominator of ψ_ℓ
            let lift = t_laurent(&den_range(k, j + 1, l));
            let c = mono(term.ahat, term.t_rate * j, term.coeff);
            num = num.radd(&psi[j as usize].num.rmul(&lift).rmul(&c));
        }
        WaveTerm { num, den: psi[l as usize].den.clone() }
    })
}

/// ψ_{ℓ+1}/ψ_ℓ without Λ: A^b e^{−ħbℓ}(A e^{−ħℓ/2} − A⁻¹ e^{ħℓ/2})/(e^{−ħ(ℓ+1)/2} − e^{ħ(ℓ+1)/2}).
pub fn psi_ratio(k: &KnotParams, l: u32) -> WaveTerm {
    let (qq, pp) = (k.qi(), k.pi());
    let li = l as i64;
    let num = mono(pp + qq, -2 * pp * li - qq * li, 1).rsub(&mono(pp - qq, -2 * pp * li + qq * li, 1));
    WaveTerm { num, den: t_diff(qq * (li + 1)) }
}

/// A^{ℓb} e^{ħb(ℓ²−ℓ)/2} s_(ℓ) at p_i = (A^i − A^{−i})/(e^{iħ/2} − e^{−iħ/2}),
/// with s_(ℓ) expanded in power sums; the ψ_ℓ of the flipped convention
/// should be this after t → t⁻¹.
pub fn psi_from_power_sums(k: &KnotParams, l: u32) -> WaveTerm {
    let qq = k.qi();
    let pt = Point::<LaurentPoly>::symbolic(k);
    let li = l as i64;
    let den = den_range(k, 1, li).flip();
    let mut num = MPoly::zero();
    for (sigma, c) in schur_in_power_sums(&Partition::new(vec![l])).terms() {
        let mut ap = LaurentPoly::one();
        let mut tp = LaurentPoly::one();
        for &s in sigma.parts() {
            ap = ap.rmul(&pt.a_diff(s as i64));
            tp = tp.rmul(&t_diff(qq * s as i64).flip());
        }
        let cof = den.div_exact(&tp).expect("power-sum denominators divide the product");
        num = num.radd(&MPoly::from_laurent(&ap, AH).rmul(&t_laurent(&cof)).scale(c));
    }
    let pre = mono(k.pi() * li, k.pi() * (li * li - li), 1);
    WaveTerm { num: num.rmul(&pre), den }
}

pub fn qcurve_check(k: &KnotParams, n: u32) -> CheckReport {
    let mut rep = CheckReport::new("qcurve").param("Q", k.q).param("P", k.p).param("N", n);
    let psi = wave_function(k, n);
    rep.check("psi_0 = 1", psi[0].num.is_one() && psi[0].den.is_one(), || psi[0].to_json());
    let nonzero = psi.iter().all(|p| !p.is_zero());
    rep.check("psi nonzero", nonzero, || json!(null));
    for (i, r) in qc_residual(k, n).iter().enumerate() {
        rep.check(format!("residual Λ^{}", i + 1), r.is_zero(), || r.to_json());
    }
    for l in 0..n {
        let ratio = psi_ratio(k, l);
        let lhs = psi[l as usize + 1].num.rmul(&t_laurent(&psi[l as usize].den)).rmul(&t_laurent(&ratio.den));
        let rhs = psi[l as usize].num.rmul(&ratio.num).rmul(&t_laurent(&psi[l as usize + 1].den));
        rep.check(format!("ratio ψ_{}/ψ_{}", l + 1, l), lhs == rhs, || json!(null));
    }
    let small: Vec<u32> = (0..=n.min(8)).collect();
    let flips = map_collect(&small, |&l| psi[l as usize].flip_t().same_as(&psi_from_power_sums(k, l)));
    for (l, ok) in small.iter().zip(flips) {
        rep.check(format!("t → 1/t at ℓ = {}", l), ok, || json!(null));
    }
    rep
}

/// Λ(V) = (1 − V)/(A^{b+1} V^{−b} (1 − A^{−2} V)) against the curve Λ(U),
/// with V = (1 − A^{b+1}U)/(1 − A^{b−1}U), as series in U to U^order.
/// Cross-multiplied: A^{b+1}(1 − A^{−2}V) Λ(U) = (1 − V) V^b.
pub fn dequantization_check(k: &KnotParams, order: i64) -> Result<CheckReport> {
    let mut rep = CheckReport::new("dequantization").param("Q", k.q).param("P", k.p).param("order", order);
    let pt = Point::<LaurentPoly>::symbolic(k);
    let cap = order + 1;
    let ap = pt.ah(k.pi() + k.qi());
    let am = pt.ah(k.pi() - k.qi());
    let v = binomial_series(&ap, &Q::from_integer(1.into()), order)
        .mul(&binomial_series(&am, &Q::from_integer((-1).into()), order))
        .truncate(cap);
    let one = Series::one().truncate(cap);
    // V^b through exp(b log V); V(0) = 1
    let vb = v.sub(&one).log1p()?.scale(&k.b).exp()?;
    let lam = crate::spectral::lambda_series(k, order);
    let lhs = one.sub(&v.mul_coeff(&pt.a(-2))).mul(&lam).mul_coeff(&ap).truncate(cap);
    let rhs = one.sub(&v).mul(&vb).truncate(cap);
    let mut bad = None;
    for e in 0..cap {
        if lhs.coeff(e) != rhs.coeff(e) {
            bad = Some(e);
            break;
        }
    }
    rep.check(format!("series identity to U^{}", order), bad.is_none(), || {
        let e = bad.unwrap();
        json!({"exponent": e, "lhs": lhs.coeff(e).to_json(), "rhs": rhs.coeff(e).to_json()})
    });
    rep.check("U = 0: Λ = 0, V = 1", lam.coeff(0).is_zero() && v.coeff(0).is_one(), || json!(null));
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn knot(qq: u32, pp: u32) -> KnotParams {
        KnotParams::new(qq, pp).unwrap()
    }

    #[test]
    fn first_terms() {
        let k = knot(2, 3);
        assert!(psi_coefficient(&k, 0).num.is_one());
        // ψ₁ = A^b (A − A⁻¹)/(t^{−Q} − t^Q)
        let p1 = psi_coefficient(&k, 1);
        let want = WaveTerm { num: mono(5, 0, 1).rsub(&mono(1, 0, 1)), den: t_diff(2) };
        assert!(p1.same_as(&want));
        let r = qc_residual(&k, 2);
        assert!(r.iter().all(|x| x.is_zero()));
    }

    #[test]
    fn annihilation() {
        for (qq, pp) in [(1, 1), (1, 2), (2, 3), (3, 2)] {
            let r = qcurve_check(&knot(qq, pp), 12);
            assert!(r.passed(), "{:?}", r.failures());
        }
    }

    #[test]
    fn wrong_sign_ratio_fails() {
        let k = knot(2, 3);
        let mut op = qsc_operator(&k);
        op[2].t_rate = 2 * k.pi() - k.qi();
        op[3].t_rate = 2 * k.pi() + k.qi();
        let psi = wave_function(&k, 2);
        let lift = t_laurent(&den_range(&k, 2, 2));
        let mut num = MPoly::zero();
        for term in &op {
            let j = 2 - term.shift;
            let lift = if j == 1 { lift.clone() } else { MPoly::one() };
            num = num.radd(&psi[j as usize].num.rmul(&lift).rmul(&mono(term.ahat, term.t_rate * j, term.coeff)));
        }
        assert!(!num.is_zero());
    }

    #[test]
    fn dequantization() {
        for (qq, pp) in [(1, 2), (2, 3), (3, 2), (2, 5)] {
            let r = dequantization_check(&knot(qq, pp), 8).unwrap();
            assert!(r.passed(), "{:?}", r.failures());
        }
    }
}
