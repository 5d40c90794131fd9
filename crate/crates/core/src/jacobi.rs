//! Jacobi polynomials at 1 − 2a, the J_m specialization and the identities
//! they satisfy: three-term relation, exponential generating functions, the
//! q-hypergeometric representation, the ₂F₁ relations and the G-polynomial
//! decomposition.
//!
//! Polynomials live in `MPoly` with variable [`A`] for a = A² and [`X`] for
//! the second parameter (ρb, x or ρ depending on the identity).

use crate::algebra::linalg::Solution;
use crate::algebra::{exp_series, exp_w_coefficients, pow_q, zeta_ratio, Field, LaurentPoly, MPoly, Ring, Series, Var, Q};
use crate::error::{Error, Result};
use crate::knot::{KnotParams, Point};
use crate::par::map_collect;
use crate::partitions::partitions_of;
use std::collections::BTreeMap;

pub const A: usize = 0;
pub const X: usize = 1;

fn qi(n: i64) -> Q {
    Q::from_integer(n.into())
}

fn cst(c: Q) -> MPoly {
    MPoly::constant(c)
}

fn a_var() -> MPoly {
    MPoly::var(A)
}

fn x_var() -> MPoly {
    MPoly::var(X)
}

fn rising(x: &MPoly, k: i64) -> MPoly {
    (0..k).fold(MPoly::one(), |acc, j| acc.rmul(&x.radd(&cst(qi(j)))))
}

fn factorial_q(n: i64) -> Q {
    (1..=n).fold(qi(1), |acc, k| acc * qi(k))
}

/// 𝒫_n^{(α,β)}(1 − 2a) = (1/n!) ∑_s (−n)_s (1+α+β+n)_s (α+s+1)_{n−s} a^s / s!.
/// α and β must not involve the variable a. Zero for n < 0.
pub fn jacobi_p(n: i64, alpha: &MPoly, beta: &MPoly) -> MPoly {
    if n < 0 {
        return MPoly::zero();
    }
    let top = alpha.radd(beta).radd(&cst(qi(1 + n)));
    // tail[s] = (α+s+1)_{n−s}, built from s = n downwards
    let mut tail = vec![MPoly::one(); n as usize + 1];
    for s in (0..n).rev() {
        tail[s as usize] = tail[s as usize + 1].rmul(&alpha.radd(&cst(qi(s + 1))));
    }
    let mut out = MPoly::zero();
    let mut head = MPoly::one();
    let mut minus_n = qi(1);
    for s in 0..=n {
        if s > 0 {
            head = head.rmul(&top.radd(&cst(qi(s - 1))));
            minus_n *= qi(s - 1 - n);
        }
        let c = head.rmul(&tail[s as usize]).scale(&(&minus_n / (factorial_q(s) * factorial_q(n))));
        out = out.radd(&c.rmul(&a_var().pow(s as u64)));
    }
    out
}

pub fn jacobi_p_q(n: i64, alpha: &Q, beta: &Q) -> MPoly {
    jacobi_p(n, &cst(alpha.clone()), &cst(beta.clone()))
}

/// J_m = 𝒫_m^{(ρb−m−1, 1)}(1 − 2a).
pub fn j_poly(m: i64, rho_b: &MPoly) -> MPoly {
    jacobi_p(m, &rho_b.rsub(&cst(qi(m + 1))), &MPoly::one())
}

/// J_k + (a + 1 + (a − 1)ρb/k) J_{k−1} + a J_{k−2}.
pub fn three_term_residual(k: i64, rho_b: &MPoly) -> MPoly {
    assert!(k >= 1);
    let a = a_var();
    let mid = a
        .radd(&MPoly::one())
        .radd(&a.rsub(&MPoly::one()).rmul(rho_b).scale(&qi(k).recip()));
    j_poly(k, rho_b).radd(&mid.rmul(&j_poly(k - 1, rho_b))).radd(&a.rmul(&j_poly(k - 2, rho_b)))
}

/// Partition-sum side of the generating-function identity, multiplied by A^m:
/// ∑_{λ⊢m} ∏_i ((a^i − 1)x/i)^{d_i}/d_i!, d_i = λ_i − λ_{i+1}.
pub fn genfun_partition_side(m: u32, x: &MPoly) -> MPoly {
    let mut out = MPoly::zero();
    for lam in partitions_of(m as usize) {
        // λ_i − λ_{i+1} is the multiplicity of i in the transpose
        let mut term = MPoly::one();
        for (i, d) in lam.transpose().multiplicities() {
            let y = a_var().pow(i as u64).rsub(&MPoly::one()).rmul(x).scale(&qi(i as i64).recip());
            term = term.rmul(&y.pow(d as u64)).scale(&factorial_q(d as i64).recip());
        }
        out = out.radd(&term);
    }
    out
}

/// Jacobi side, multiplied by A^m: (−1)^m (1 − a)(x/m) 𝒫_{m−1}^{(x−m,1)}(1−2a).
pub fn genfun_jacobi_side(m: u32, x: &MPoly) -> MPoly {
    let mi = m as i64;
    let sign = if m % 2 == 0 { qi(1) } else { qi(-1) };
    MPoly::one()
        .rsub(&a_var())
        .rmul(x)
        .scale(&(sign / qi(mi)))
        .rmul(&jacobi_p(mi - 1, &x.rsub(&cst(qi(mi))), &MPoly::one()))
}

/// Difference of the two sides (times A^m, so that it lies in ℚ[a, x]).
pub fn genfun_coefficient(m: u32, x: &MPoly) -> MPoly {
    genfun_partition_side(m, x).rsub(&genfun_jacobi_side(m, x))
}

/// [w^k] exp(∑ (a^i − 1) w^i x/i) for k = 0..=kmax.
pub fn exp_genfun(kmax: u32, x: &MPoly) -> Vec<MPoly> {
    let y: Vec<Series<MPoly>> = (0..=kmax as i64)
        .map(|i| {
            if i == 0 {
                return Series::exact_zero();
            }
            Series::constant(a_var().pow(i as u64).rsub(&MPoly::one()).rmul(x).scale(&qi(i).recip()))
        })
        .collect();
    exp_w_coefficients(&y, kmax as usize, 1).into_iter().map(|s| s.coeff(0)).collect()
}

/// ζ(c u)/u for a ring-valued c, to u^cap.
fn zeta_over_u<R: Ring>(c: &R, cap: i64) -> Series<R> {
    let mut terms = Vec::new();
    let mut j = 0;
    while j < cap {
        // x^{j+1}/(2^j (j+1)!)
        let f = (pow_q(&qi(2), j as u64) * factorial_q(j + 1)).recip();
        terms.push((j, c.pow(j as u64 + 1).scale(&f)));
        j += 2;
    }
    Series::from_terms(0, cap, terms)
}

/// [w^k] exp(∑ (a^i − 1)/i · w^i ζ(iuρ)/ζ(iu/b)) for k = 0..=kmax, with a and
/// ρ taken from any coefficient ring.
pub fn exp_zeta_coefficients<R: Ring>(a: &R, rho: &R, b: &Q, kmax: u32, cap: i64) -> Vec<Series<R>> {
    let y: Vec<Series<R>> = (0..=kmax as i64)
        .map(|i| {
            if i == 0 {
                return Series::exact_zero();
            }
            let c2 = qi(i) / b;
            let den = zeta_over_u::<Q>(&c2, cap).inverse().expect("unit constant term");
            let num = zeta_over_u(&rho.scale(&qi(i)), cap);
            let amp = a.pow(i as u64).rsub(&R::one()).scale(&qi(i).recip());
            num.mul(&den.map(|c| R::from_q(c))).mul_coeff(&amp)
        })
        .collect();
    exp_w_coefficients(&y, kmax as usize, cap)
}

/// Left side of the q-hypergeometric identity at a = A², numeric ρ.
pub fn qphi_lhs(m: u32, pt: &Point<LaurentPoly>, rho: &Q, cap: i64) -> Series<LaurentPoly> {
    let a = pt.a(2);
    let b = &pt.knot.b;
    let y: Vec<Series<LaurentPoly>> = (0..=m as i64)
        .map(|i| {
            if i == 0 {
                return Series::exact_zero();
            }
            let iq = qi(i);
            zeta_ratio::<LaurentPoly>(&(&iq * rho), &(&iq / b), cap)
                .mul_coeff(&a.pow(i as u64).rsub(&LaurentPoly::one()))
                .scale(&iq.recip())
        })
        .collect();
    exp_w_coefficients(&y, m as usize, cap).pop().unwrap()
}

/// Exponent rρb + c of q in a factor 1 − q^{rρb+c}.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct QFactor {
    r: i64,
    c: i64,
}

/// One term of the ₂φ₁ side: sign · q^{eρb+f} · ∏ num / ∏ den.
struct QTerm {
    sign: i64,
    e: Q,
    f: Q,
    num: Vec<QFactor>,
    den: Vec<QFactor>,
}

impl QTerm {
    /// Normalize every factor so that its exponent is "positive", pulling
    /// 1 − q^{−x} = −q^{−x}(1 − q^x) into the prefactor, then cancel.
    fn normalize(mut self) -> Self {
        let flip = |f: &QFactor| f.r < 0 || (f.r == 0 && f.c < 0);
        let mut num = Vec::new();
        for f in std::mem::take(&mut self.num) {
            if flip(&f) {
                self.sign = -self.sign;
                self.e += qi(f.r);
                self.f += qi(f.c);
                num.push(QFactor { r: -f.r, c: -f.c });
            } else {
                num.push(f);
            }
        }
        let mut den = Vec::new();
        for f in std::mem::take(&mut self.den) {
            if flip(&f) {
                self.sign = -self.sign;
                self.e -= qi(f.r);
                self.f -= qi(f.c);
                den.push(QFactor { r: -f.r, c: -f.c });
            } else {
                den.push(f);
            }
        }
        let mut kept_den = Vec::new();
        for f in den {
            if let Some(pos) = num.iter().position(|g| *g == f) {
                num.swap_remove(pos);
            } else {
                kept_den.push(f);
            }
        }
        self.num = num;
        self.den = kept_den;
        self
    }

    /// Expand in u with q = e^{−u/b} at a numeric ρb.
    fn expand(&self, rho_b: &Q, b: &Q, cap: i64) -> Result<Series<Q>> {
        let work = cap + self.den.len() as i64 + 1;
        // 1 − e^{−xu/b} = u · unit
        let unit = |x: &Q| exp_series::<Q>(&(-x / b), work + 1).neg().add(&Series::one()).shift(-1).truncate(work);
        let value = |f: &QFactor| qi(f.r) * rho_b + qi(f.c);
        let mut acc = exp_series::<Q>(&(-(&self.e * rho_b + &self.f) / b), work).scale(&qi(self.sign));
        for f in &self.num {
            let v = value(f);
            if v == qi(0) {
                return Ok(Series::exact_zero());
            }
            acc = acc.mul(&unit(&v));
        }
        for f in &self.den {
            let v = value(f);
            if v == qi(0) {
                return Err(Error::SampleAtPole(format!("1 − q^0 in a denominator at ρb = {}", rho_b)));
            }
            acc = acc.mul(&unit(&v).inverse()?);
        }
        let shift = self.num.len() as i64 - self.den.len() as i64;
        Ok(acc.shift(shift).truncate(cap))
    }
}

/// (q^{1/2+ρb/2})^m (q^{−ρb};q)_m/(q;q)_m · ₂φ₁(q^{−m}, q^{ρb}; q^{ρb+1−m}; q; aq)
/// at q = e^{−u/b}. Pochhammer factors are cancelled symbolically in ρb
/// before specializing, so integral ρb needs no limit.
pub fn qphi_rhs(m: u32, pt: &Point<LaurentPoly>, rho: &Q, cap: i64) -> Result<Series<LaurentPoly>> {
    let b = pt.knot.b.clone();
    let rho_b = rho * &b;
    let mi = m as i64;
    let a = pt.a(2);
    let mut out = Series::<LaurentPoly>::zero_with_cap(cap);
    for n in 0..=mi {
        let mut num = Vec::new();
        let mut den = Vec::new();
        num.extend((0..mi).map(|j| QFactor { r: -1, c: j }));
        num.extend((0..n).map(|j| QFactor { r: 0, c: j - mi }));
        num.extend((0..n).map(|j| QFactor { r: 1, c: j }));
        den.extend((1..=mi).map(|j| QFactor { r: 0, c: j }));
        den.extend((0..n).map(|j| QFactor { r: 1, c: 1 - mi + j }));
        den.extend((1..=n).map(|j| QFactor { r: 0, c: j }));
        let half_m = Q::new(mi.into(), 2.into());
        let term = QTerm { sign: 1, e: half_m.clone(), f: half_m + qi(n), num, den }.normalize();
        let s = term.expand(&rho_b, &b, cap)?;
        let an = a.pow(n as u64);
        out = out.add(&s.map(|c| an.scale(c)));
    }
    Ok(out)
}

pub fn qphi_identity_residual(m: u32, k: &KnotParams, rho: &Q, cap: i64) -> Result<Series<LaurentPoly>> {
    let pt = Point::symbolic(k);
    Ok(qphi_lhs(m, &pt, rho, cap).sub(&qphi_rhs(m, &pt, rho, cap)?))
}

/// Γ(m−ρb)/(Γ(m+1)Γ(−ρb)) ₂F₁(−m, ρb; ρb+1−m)(a) as a polynomial in a and
/// ρb. The Γ-ratio is ∏_{j<m}(j − ρb)/m!, and each ₂F₁ coefficient is
/// divided by its (ρb+1−m)_s exactly.
pub fn hyper2f1_lhs(m: u32) -> MPoly {
    let mi = m as i64;
    let x = x_var();
    let gamma = (0..mi).fold(MPoly::one(), |acc, j| acc.rmul(&cst(qi(j)).rsub(&x)));
    let mut out = MPoly::zero();
    for s in 0..=mi {
        let numer = gamma.rmul(&rising(&cst(qi(-mi)), s)).rmul(&rising(&x, s));
        let denom = rising(&x.radd(&cst(qi(1 - mi))), s);
        let c = numer
            .div_exact_univariate(X, &denom)
            .expect("Pochhammer denominator divides the Γ-ratio")
            .scale(&(factorial_q(s) * factorial_q(mi)).recip());
        out = out.radd(&c.rmul(&a_var().pow(s as u64)));
    }
    out
}

/// Residuals of the two ₂F₁–Jacobi relations, symbolic in ρb when `rho_b`
/// is `None`.
pub fn hyper2f1_jacobi_residuals(m: u32, rho_b: Option<&Q>) -> (MPoly, MPoly) {
    assert!(m >= 1);
    let mi = m as i64;
    let x = x_var();
    let lhs = hyper2f1_lhs(m);
    let sign = if m % 2 == 0 { qi(1) } else { qi(-1) };
    let r1 = lhs.rsub(
        &MPoly::one()
            .rsub(&a_var())
            .rmul(&x)
            .scale(&(sign.clone() / qi(mi)))
            .rmul(&j_poly(mi - 1, &x)),
    );
    let r2 = lhs
        .derivative(A)
        .rsub(&x.scale(&(-sign)).rmul(&j_poly(mi - 1, &x).radd(&j_poly(mi - 2, &x))));
    match rho_b {
        None => (r1, r2),
        Some(v) => (r1.eval_var(X, v), r2.eval_var(X, v)),
    }
}

/// Odd-u coefficients of [w^m] exp(∑ (a^i−1)/i w^i ζ(iuρ)/ζ(iu/b)), which
/// must all vanish; returns the first nonzero one.
pub fn odd_u_witness(m: u32, k: &KnotParams, rho: &Q, cap: i64) -> Option<i64> {
    let pt = Point::symbolic(k);
    let s = qphi_lhs(m, &pt, rho, cap);
    (1..cap).step_by(2).find(|&e| !s.coeff(e).is_zero())
}

/// How the variable a is treated in the G-fit.
#[derive(Clone, Debug, PartialEq)]
pub enum AMode {
    /// a specialized to a rational value.
    At(Q),
    /// a kept symbolic; linear algebra over ℚ(a).
    Exact,
}

/// G¹_k, G²_k as coefficient tables (i, j) ↦ coefficient of ρ^i m^j.
#[derive(Clone, Debug, PartialEq)]
pub struct GFit<F> {
    pub k: u32,
    pub degree: u32,
    pub g1: BTreeMap<(u32, u32), F>,
    pub g2: BTreeMap<(u32, u32), F>,
    pub samples: Vec<u32>,
    pub holdout: Vec<u32>,
}

/// (−1)^m m · [u^{2k} w^m] exp(…) and J_{m−1}, J_{m−2}, all in ℚ[a, ρ]
/// (a already substituted when specialized).
fn g_data(k: u32, ms: &[u32], b: &Q, a: &MPoly) -> Vec<(u32, MPoly, MPoly, MPoly)> {
    let mmax = ms.iter().copied().max().unwrap_or(0);
    let cap = 2 * k as i64 + 1;
    let coeffs = exp_zeta_coefficients(a, &x_var(), b, mmax, cap);
    let rho_b = x_var().scale(b);
    let spec = |p: MPoly| match a.degree_in(A) {
        Some(d) if d > 0 => p,
        _ => p.subst(A, a),
    };
    map_collect(ms, |&m| {
        let sign = if m % 2 == 0 { qi(1) } else { qi(-1) };
        let lhs = coeffs[m as usize].coeff(2 * k as i64).scale(&(sign * qi(m as i64)));
        let j1 = spec(j_poly(m as i64 - 1, &rho_b));
        let j2 = spec(j_poly(m as i64 - 2, &rho_b));
        (m, lhs, j1, j2)
    })
}

fn monomials(d: u32) -> Vec<(u32, u32)> {
    let mut v = Vec::new();
    for t in 0..=d {
        for i in 0..=t {
            v.push((i, t - i));
        }
    }
    v
}

/// Rows of the linear system for one sample: one equation per power of ρ.
fn g_rows<F: Field>(
    d: u32,
    m: u32,
    lhs: &MPoly,
    j1: &MPoly,
    j2: &MPoly,
    to_f: &dyn Fn(&MPoly) -> F,
) -> (Vec<Vec<F>>, Vec<F>) {
    let mons = monomials(d);
    let lc = lhs.collect(X);
    let c1 = j1.collect(X);
    let c2 = j2.collect(X);
    let top = lhs
        .degree_in(X)
        .unwrap_or(0)
        .max(c1.keys().max().copied().unwrap_or(0) + d as i32 + 1)
        .max(c2.keys().max().copied().unwrap_or(0) + d as i32 + 1);
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for e in 0..=top {
        let mut row = Vec::with_capacity(2 * mons.len());
        for c in [&c1, &c2] {
            for &(i, j) in &mons {
                // [ρ^e] ρ^{i+1} m^j J
                let src = e - i as i32 - 1;
                let v = c.get(&src).cloned().unwrap_or_default().scale(&pow_q(&qi(m as i64), j as u64));
                row.push(to_f(&v));
            }
        }
        rows.push(row);
        rhs.push(to_f(&lc.get(&e).cloned().unwrap_or_default()));
    }
    (rows, rhs)
}

fn g_eval_residual<F: Field>(
    fit: &GFit<F>,
    m: u32,
    lhs: &MPoly,
    j1: &MPoly,
    j2: &MPoly,
    to_f: &dyn Fn(&MPoly) -> F,
) -> bool {
    let (rows, rhs) = g_rows(fit.degree, m, lhs, j1, j2, to_f);
    let mons = monomials(fit.degree);
    let sol: Vec<F> = [&fit.g1, &fit.g2]
        .iter()
        .flat_map(|t| mons.iter().map(move |mn| t[mn].clone()))
        .collect();
    rows.iter().zip(&rhs).all(|(row, r)| {
        let s = row.iter().zip(&sol).fold(F::zero(), |acc, (x, y)| acc.radd(&x.rmul(y)));
        s == *r
    })
}

fn fit_g_generic<F: Field>(
    k: u32,
    data: &[(u32, MPoly, MPoly, MPoly)],
    samples: &[u32],
    holdout: &[u32],
    max_degree: u32,
    to_f: &dyn Fn(&MPoly) -> F,
) -> Result<GFit<F>> {
    let find = |m: u32| data.iter().find(|d| d.0 == m).expect("sampled");
    for d in 0..=max_degree {
        let mons = monomials(d);
        let mut rows = Vec::new();
        let mut rhs = Vec::new();
        for &m in samples {
            let (_, l, j1, j2) = find(m);
            let (r, b) = g_rows(d, m, l, j1, j2, to_f);
            rows.extend(r);
            rhs.extend(b);
        }
        match F::solve_system(&rows, &rhs) {
            Solution::Inconsistent => continue,
            Solution::Underdetermined { rank, unknowns } => {
                return Err(Error::FitFailed(format!(
                    "G-fit at degree {} underdetermined (rank {} of {}); add samples",
                    d, rank, unknowns
                )))
            }
            Solution::Unique(sol) => {
                let n = mons.len();
                let g1 = mons.iter().cloned().zip(sol[..n].iter().cloned()).collect();
                let g2 = mons.iter().cloned().zip(sol[n..].iter().cloned()).collect();
                let fit = GFit { k, degree: d, g1, g2, samples: samples.to_vec(), holdout: holdout.to_vec() };
                for &m in holdout {
                    let (_, l, j1, j2) = find(m);
                    if !g_eval_residual(&fit, m, l, j1, j2, to_f) {
                        return Err(Error::FitFailed(format!("G-fit k={} fails held-out m={}", k, m)));
                    }
                }
                return Ok(fit);
            }
        }
    }
    Err(Error::FitFailed(format!("no G-decomposition for k={} up to degree {}", k, max_degree)))
}

/// Default sample/holdout split for a degree bound D: m = 1..=2D+6 for the
/// fit and five larger values held out.
pub fn default_g_samples(max_degree: u32) -> (Vec<u32>, Vec<u32>) {
    let top = 2 * max_degree + 6;
    ((1..=top).collect(), (top + 1..=top + 5).collect())
}

/// Result of a G-fit in either mode, with coefficients rendered in ℚ(a).
#[derive(Clone, Debug)]
pub struct GDecomposition {
    pub fit: GFit<crate::algebra::RationalFunction>,
    pub mode: AMode,
}

fn a_to_rf(p: &MPoly) -> crate::algebra::RationalFunction {
    crate::algebra::RationalFunction::from_poly(p.to_laurent(A, Var::AHat).expect("polynomial in a only"))
}

/// Finds the smallest degree D ≤ `max_degree` at which
/// (−1)^m m [u^{2k}w^m](…) = ρ (G¹_k(ρ,m) J_{m−1} + G²_k(ρ,m) J_{m−2})
/// holds on `samples`, then validates on `holdout`.
pub fn g_decomposition(
    k: u32,
    knot: &KnotParams,
    mode: &AMode,
    samples: &[u32],
    holdout: &[u32],
    max_degree: u32,
) -> Result<GDecomposition> {
    let all: Vec<u32> = samples.iter().chain(holdout).copied().collect();
    let b = &knot.b;
    match mode {
        AMode::At(a0) => {
            let data = g_data(k, &all, b, &cst(a0.clone()));
            let to_f = |p: &MPoly| p.coeff(&[]);
            let fit = fit_g_generic::<Q>(k, &data, samples, holdout, max_degree, &to_f)?;
            let lift = |t: &BTreeMap<(u32, u32), Q>| {
                t.iter().map(|(k, v)| (*k, crate::algebra::RationalFunction::from_q(v))).collect()
            };
            let fit = GFit {
                k,
                degree: fit.degree,
                g1: lift(&fit.g1),
                g2: lift(&fit.g2),
                samples: fit.samples,
                holdout: fit.holdout,
            };
            Ok(GDecomposition { fit, mode: mode.clone() })
        }
        AMode::Exact => {
            let data = g_data(k, &all, b, &a_var());
            let fit = fit_g_generic(k, &data, samples, holdout, max_degree, &a_to_rf)?;
            Ok(GDecomposition { fit, mode: mode.clone() })
        }
    }
}

impl GDecomposition {
    fn a_value(&self) -> crate::algebra::RationalFunction {
        match &self.mode {
            AMode::At(a0) => crate::algebra::RationalFunction::from_q(a0),
            AMode::Exact => a_to_rf(&a_var()),
        }
    }

    /// G¹_k(ρ,0) = δ_{k,0}(1−a)b and G²_k(ρ,0) = 0.
    pub fn g0_holds(&self, b: &Q) -> bool {
        let one = crate::algebra::RationalFunction::one();
        let expect = if self.fit.k == 0 { one.rsub(&self.a_value()).scale(b) } else { Ring::zero() };
        let at_m0 = |t: &BTreeMap<(u32, u32), crate::algebra::RationalFunction>, i: u32| {
            t.get(&(i, 0)).cloned().unwrap_or_else(Ring::zero)
        };
        (0..=self.fit.degree).all(|i| {
            let want = if i == 0 { expect.clone() } else { Ring::zero() };
            at_m0(&self.fit.g1, i) == want && at_m0(&self.fit.g2, i).is_zero()
        })
    }

    /// Coefficients of m⁰ and m¹ in G(m, m) for both channels.
    pub fn diagonal_low_coeffs(&self) -> [crate::algebra::RationalFunction; 4] {
        let low = |t: &BTreeMap<(u32, u32), crate::algebra::RationalFunction>| {
            let g = |i, j| t.get(&(i, j)).cloned().unwrap_or_else(Ring::zero);
            (g(0, 0), g(1, 0).radd(&g(0, 1)))
        };
        let (a0, a1) = low(&self.fit.g1);
        let (b0, b1) = low(&self.fit.g2);
        [a0, a1, b0, b1]
    }

    pub fn double_zero_holds(&self) -> bool {
        self.diagonal_low_coeffs().iter().all(|c| c.is_zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{q, qf};

    fn rb(v: Q) -> MPoly {
        cst(v)
    }

    #[test]
    fn small_values() {
        assert_eq!(jacobi_p_q(0, &q(3), &q(1)), MPoly::one());
        assert_eq!(jacobi_p_q(-1, &q(3), &q(1)), MPoly::zero());
        // n = 1: (α+1) − (α+β+2)a
        let (al, be) = (qf(2, 3), qf(-1, 2));
        let expect = cst(&al + q(1)).rsub(&a_var().scale(&(&al + &be + q(2))));
        assert_eq!(jacobi_p_q(1, &al, &be), expect);
        // J_1 = ρb(1−a) − (1+a)
        let x = x_var();
        let j1 = x.rmul(&MPoly::one().rsub(&a_var())).rsub(&MPoly::one().radd(&a_var()));
        assert_eq!(j_poly(1, &x), j1);
        assert_eq!(j_poly(0, &x), MPoly::one());
    }

    #[test]
    fn classical_values() {
        // 𝒫_n^{(0,0)} are the Legendre polynomials: P_2(z) = (3z² − 1)/2
        let p2 = jacobi_p_q(2, &q(0), &q(0));
        let z = MPoly::one().rsub(&a_var().scale(&q(2)));
        let legendre = z.rmul(&z).scale(&qf(3, 2)).rsub(&cst(qf(1, 2)));
        assert_eq!(p2, legendre);
        // 𝒫_n^{(α,β)}(1) = (α+1)_n/n!
        let p = jacobi_p_q(4, &qf(1, 3), &q(2));
        assert_eq!(p.eval_var(A, &q(0)), cst(qf(4, 3) * qf(7, 3) * qf(10, 3) * qf(13, 3) / q(24)));
    }

    #[test]
    fn three_term_symbolic() {
        for k in 1..=30 {
            assert!(three_term_residual(k, &x_var()).is_zero(), "k={}", k);
        }
        for v in [qf(3, 2), qf(-5, 7), q(11)] {
            for k in 1..=12 {
                assert!(three_term_residual(k, &rb(v.clone())).is_zero());
            }
        }
    }

    #[test]
    fn genfun_identity() {
        for m in 1..=12 {
            assert!(genfun_coefficient(m, &x_var()).is_zero(), "m={}", m);
        }
        let b = qf(3, 2);
        for m in 1..=8u32 {
            assert!(genfun_coefficient(m, &cst(qf(7, 3))).is_zero());
            assert!(genfun_coefficient(m, &cst(&b * q(m as i64))).is_zero());
        }
    }

    #[test]
    fn genfun_exp_oracle() {
        let x = x_var();
        let ex = exp_genfun(10, &x);
        for m in 1..=10u32 {
            assert_eq!(ex[m as usize], genfun_partition_side(m, &x));
            // [w^{m−1}] relation with J_{m−2}
            let mi = m as i64;
            let sign = if m % 2 == 0 { q(1) } else { q(-1) };
            let lhs = MPoly::one().rsub(&a_var()).rmul(&x).scale(&(sign / q(mi))).rmul(&j_poly(mi - 2, &x));
            let rhs = ex[m as usize - 1].scale(&(-qf(mi - 1, mi)));
            assert_eq!(lhs, rhs, "m={}", m);
        }
    }

    #[test]
    fn qphi_identity() {
        let k = KnotParams::new(2, 3).unwrap();
        for rho in [q(1), q(2), qf(5, 2)] {
            for m in 1..=6 {
                let r = qphi_identity_residual(m, &k, &rho, 6).unwrap();
                assert!(r.is_exactly_zero_to(6), "m={} rho={}", m, rho);
            }
        }
    }

    #[test]
    fn qphi_u0_limit() {
        let k = KnotParams::new(2, 3).unwrap();
        let pt = Point::symbolic(&k);
        let rho = qf(5, 2);
        let s = qphi_lhs(4, &pt, &rho, 1);
        let x = cst(&rho * &k.b);
        let expect = genfun_partition_side(4, &x).subst(A, &MPoly::from_laurent(&pt.a(2), A));
        assert_eq!(MPoly::from_laurent(&s.coeff(0), A), expect);
    }

    #[test]
    fn hyper2f1_relations() {
        for m in 1..=8 {
            let (r1, r2) = hyper2f1_jacobi_residuals(m, None);
            assert!(r1.is_zero() && r2.is_zero(), "m={}", m);
            for v in [qf(3, 2), q(4)] {
                let (r1, r2) = hyper2f1_jacobi_residuals(m, Some(&v));
                assert!(r1.is_zero() && r2.is_zero());
            }
        }
    }

    #[test]
    fn odd_u_parity() {
        let k = KnotParams::new(2, 3).unwrap();
        for m in 1..=8 {
            assert_eq!(odd_u_witness(m, &k, &qf(5, 2), 6), None);
        }
    }

    #[test]
    fn g_fit_k0_and_k1() {
        let k = KnotParams::new(2, 3).unwrap();
        let mode = AMode::At(qf(2, 7));
        for kk in 0..=1 {
            let (s, h) = default_g_samples(9 * kk + 2);
            let g = g_decomposition(kk, &k, &mode, &s, &h, 9 * kk + 2).unwrap();
            assert!(g.g0_holds(&k.b), "k={}", kk);
            if kk >= 1 {
                assert!(g.double_zero_holds());
            }
        }
    }
}
