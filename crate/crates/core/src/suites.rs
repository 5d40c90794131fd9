//! Verification suites. Each returns a CheckReport; `all` concatenates them.

use crate::algebra::{qf, MPoly, Ring, Q};
use crate::error::Result;
use crate::fermion::k_mu;
use crate::homfly::{ov_coefficient_cutjoin, ov_coefficient_rossojones};
use crate::jacobi::{
    default_g_samples, g_decomposition, genfun_coefficient, hyper2f1_jacobi_residuals, odd_u_witness,
    qphi_identity_residual, three_term_residual, AMode, X,
};
use crate::knot::{KnotParams, Point};
use crate::par::map_collect;
use crate::partitions::partitions_of;
use crate::qcurve::{dequantization_check, qcurve_check};
use crate::quasipoly::{
    fit_identity_element, fit_matrix_element, fit_quasipolynomial, is_stable, random_ahat, unstable_witness, FitMode,
};
use crate::report::CheckReport;
use crate::spectral::{c0_one_point_check, f01_check, f02_check, i_integral_check, xi_expansion_check};
use serde_json::{json, Value};
use std::time::Instant;

pub const SUITES: [&str; 7] = ["threeway", "jacobi", "xi", "unstable", "quasipoly", "qcurve", "all"];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModeChoice {
    Specialized,
    Exact,
    Both,
}

impl ModeChoice {
    pub fn name(&self) -> &'static str {
        match self {
            ModeChoice::Specialized => "specialized",
            ModeChoice::Exact => "exact",
            ModeChoice::Both => "both",
        }
    }
}

/// Sizes for every suite. `knots` overrides the per-suite default knot lists.
#[derive(Clone, Debug)]
pub struct SuiteParams {
    pub knots: Option<Vec<KnotParams>>,
    pub max_weight: usize,
    pub u_order: i64,
    pub m_max: u32,
    pub seed: u64,
    pub mode: ModeChoice,
    pub timing: bool,
}

impl Default for SuiteParams {
    fn default() -> Self {
        SuiteParams { knots: None, max_weight: 6, u_order: 4, m_max: 8, seed: 7, mode: ModeChoice::Both, timing: true }
    }
}

fn knots_or(p: &SuiteParams, default: &[(u32, u32)]) -> Vec<KnotParams> {
    p.knots
        .clone()
        .unwrap_or_else(|| default.iter().map(|&(q, pp)| KnotParams::new(q, pp).expect("coprime defaults")).collect())
}

fn label(k: &KnotParams) -> String {
    format!("K=({},{})", k.q, k.p)
}

fn knot_list(ks: &[KnotParams]) -> Value {
    json!(ks.iter().map(|k| [k.q, k.p]).collect::<Vec<_>>())
}

fn err_check(rep: &mut CheckReport, name: String, r: Result<CheckReport>) {
    match r {
        Ok(sub) => {
            for mut c in sub.checks {
                c.name = format!("{} {}", name, c.name);
                rep.checks.push(c);
            }
        }
        Err(e) => rep.fail(name, json!(e.to_string())),
    }
}

fn timed(p: &SuiteParams, f: impl FnOnce() -> CheckReport) -> CheckReport {
    let t = Instant::now();
    let mut r = f();
    r.ms = if p.timing { t.elapsed().as_millis() as u64 } else { 0 };
    r
}

/// Rosso-Jones = cut-and-join = ⟨∏Ã⟩ for every μ with |μ| ≤ max_weight.
pub fn threeway(p: &SuiteParams) -> CheckReport {
    timed(p, || {
        let ks = knots_or(p, &[(1, 1), (1, 2), (2, 3), (3, 2), (2, 5)]);
        let mut rep = CheckReport::new("threeway")
            .param("knots", knot_list(&ks))
            .param("max_weight", p.max_weight)
            .param("u_order", p.u_order);
        for k in &ks {
            let pt = Point::symbolic(k);
            let mus: Vec<_> = (1..=p.max_weight).flat_map(partitions_of).collect();
            let res = map_collect(&mus, |mu| {
                let rj = ov_coefficient_rossojones(&pt, mu, p.u_order);
                let cj = ov_coefficient_cutjoin(&pt, mu, p.u_order);
                let fm = k_mu(&pt, mu, p.u_order);
                (rj, cj, fm)
            });
            for (mu, (rj, cj, fm)) in mus.iter().zip(res) {
                let name = format!("{} mu={}", label(k), mu);
                match (rj, cj) {
                    (Ok(rj), Ok(cj)) => {
                        let ok = rj == cj && cj == fm;
                        rep.check(name, ok, || {
                            json!({"rossojones": rj.to_json(), "cutjoin": cj.to_json(), "fermion": fm.to_json()})
                        })
                    }
                    (a, b) => rep.fail(name, json!([a.err().map(|e| e.to_string()), b.err().map(|e| e.to_string())])),
                }
            }
        }
        rep
    })
}

/// Three-term relation, generating function, q-hypergeometric identity,
/// ₂F₁ relations, odd-u parity and the G-decomposition.
pub fn jacobi(p: &SuiteParams) -> CheckReport {
    timed(p, || {
        let mut rep = jacobi_identities(p);
        rep.absorb(gdecomp(p));
        rep
    })
}

/// The Jacobi identities without the G-decomposition.
pub fn jacobi_identities(p: &SuiteParams) -> CheckReport {
    timed(p, || {
        let ks = knots_or(p, &[(2, 3)]);
        let mut rep = CheckReport::new("jacobi").param("knots", knot_list(&ks)).param("m_max", p.m_max);
        let x = MPoly::var(X);
        let ks30: Vec<i64> = (1..=30).collect();
        let tt = map_collect(&ks30, |&k| three_term_residual(k, &x).is_zero());
        let bad: Vec<i64> = ks30.iter().zip(&tt).filter(|(_, ok)| !**ok).map(|(k, _)| *k).collect();
        rep.check("three-term relation, k <= 30, symbolic in rho b", bad.is_empty(), || json!(bad));
        let gm = p.m_max.max(12);
        let ms: Vec<u32> = (1..=gm).collect();
        let gf = map_collect(&ms, |&m| genfun_coefficient(m, &x).is_zero());
        let bad: Vec<u32> = ms.iter().zip(&gf).filter(|(_, ok)| !**ok).map(|(m, _)| *m).collect();
        rep.check(format!("generating function, m <= {}", gm), bad.is_empty(), || json!(bad));
        let hm: Vec<u32> = (1..=p.m_max.max(8)).collect();
        let hy = map_collect(&hm, |&m| {
            let (r1, r2) = hyper2f1_jacobi_residuals(m, None);
            r1.is_zero() && r2.is_zero()
        });
        let bad: Vec<u32> = hm.iter().zip(&hy).filter(|(_, ok)| !**ok).map(|(m, _)| *m).collect();
        rep.check(format!("2F1-Jacobi relations, m <= {}", hm.len()), bad.is_empty(), || json!(bad));
        for k in &ks {
            let rhos = [Q::from_integer(1.into()), Q::from_integer(2.into()), qf(5, 2)];
            let cases: Vec<(u32, Q)> = (1..=6).flat_map(|m| rhos.iter().map(move |r| (m, r.clone()))).collect();
            let qp = map_collect(&cases, |(m, r)| qphi_identity_residual(*m, k, r, 6).map(|s| s.is_zero()));
            for ((m, r), ok) in cases.iter().zip(qp) {
                let name = format!("{} q-hypergeometric m={} rho={}", label(k), m, r);
                match ok {
                    Ok(ok) => rep.check(name, ok, || Value::Null),
                    Err(e) => rep.fail(name, json!(e.to_string())),
                }
            }
            let ms: Vec<u32> = (1..=8).collect();
            let odd = map_collect(&ms, |&m| odd_u_witness(m, k, &qf(5, 2), 6));
            let bad: Vec<_> = ms.iter().zip(&odd).filter(|(_, w)| w.is_some()).map(|(m, w)| (*m, *w)).collect();
            rep.check(format!("{} odd u-powers vanish, m <= 8", label(k)), bad.is_empty(), || json!(bad));
        }
        rep
    })
}

/// G-decomposition fits for k ≤ 2 specialized and k ≤ 1 exact, with the
/// G(ρ,0) values and the double zero on the diagonal.
pub fn gdecomp(p: &SuiteParams) -> CheckReport {
    timed(p, || {
        let ks = knots_or(p, &[(2, 3)]);
        let mut rep = CheckReport::new("gdecomp").param("knots", knot_list(&ks)).param("mode", p.mode.name());
        for k in &ks {
            let modes: Vec<AMode> = match p.mode {
                ModeChoice::Specialized => vec![AMode::At(qf(2, 7))],
                ModeChoice::Exact => vec![AMode::Exact],
                ModeChoice::Both => vec![AMode::At(qf(2, 7)), AMode::Exact],
            };
            for mode in &modes {
                let kmax = if *mode == AMode::Exact { 1 } else { 2 };
                for kk in 0..=kmax {
                    let (s, h) = default_g_samples(9 * kk + 2);
                    let tag = match mode {
                        AMode::At(a) => format!("a={}", a),
                        AMode::Exact => "exact".to_string(),
                    };
                    let name = format!("{} G-decomposition k={} {}", label(k), kk, tag);
                    match g_decomposition(kk, k, mode, &s, &h, 9 * kk + 2) {
                        Ok(g) => {
                            rep.check(format!("{} fit", name), true, || Value::Null);
                            rep.info(format!("{} degree", name), json!(g.fit.degree));
                            rep.check(format!("{} G(rho,0)", name), g.g0_holds(&k.b), || Value::Null);
                            if kk >= 1 {
                                rep.check(format!("{} double zero", name), g.double_zero_holds(), || {
                                    json!(g.diagonal_low_coeffs().iter().map(|c| c.to_json()).collect::<Vec<_>>())
                                });
                            }
                        }
                        Err(e) => rep.fail(format!("{} fit", name), json!(e.to_string())),
                    }
                }
            }
        }
        rep
    })
}

/// ξ-function expansions for both indices and the I-integrals.
pub fn xi(p: &SuiteParams) -> CheckReport {
    timed(p, || {
        let ks = knots_or(p, &[(1, 2), (2, 3), (3, 2)]);
        let mut rep = CheckReport::new("xi").param("knots", knot_list(&ks)).param("m_max", p.m_max);
        for k in &ks {
            for idx in [1u8, 2] {
                err_check(&mut rep, label(k), xi_expansion_check(idx, k, p.m_max));
            }
            err_check(&mut rep, label(k), Ok(i_integral_check(k, p.m_max)));
        }
        rep
    })
}

/// Genus-zero one- and two-point functions against the curve.
pub fn unstable(p: &SuiteParams) -> CheckReport {
    timed(p, || {
        let ks = knots_or(p, &[(2, 3), (3, 2)]);
        let mut rep = CheckReport::new("unstable").param("knots", knot_list(&ks)).param("m_max", p.m_max);
        for k in &ks {
            err_check(&mut rep, label(k), c0_one_point_check(k, p.m_max.max(10)));
            err_check(&mut rep, label(k), f01_check(k, p.m_max));
            err_check(&mut rep, label(k), f02_check(k, p.m_max));
        }
        rep
    })
}

/// Stable (n, k) with n ≤ 3, k < u_order in specialized mode over three
/// seeds, exact mode for n ≤ 2, unstable witnesses and Ã matrix elements.
pub fn quasipoly(p: &SuiteParams) -> CheckReport {
    timed(p, || {
        let ks = knots_or(p, &[(2, 3), (3, 2)]);
        let mut rep = CheckReport::new("quasipoly")
            .param("knots", knot_list(&ks))
            .param("seed", p.seed)
            .param("u_order", p.u_order)
            .param("mode", p.mode.name());
        let cases: Vec<(usize, i64)> =
            (1..=3usize).flat_map(|n| (-1..p.u_order).map(move |k| (n, k))).filter(|&(n, k)| is_stable(n, k)).collect();
        for k in &ks {
            let mut modes: Vec<FitMode> = Vec::new();
            if p.mode != ModeChoice::Exact {
                modes.extend((0..3).map(|i| FitMode::Specialized(random_ahat(p.seed + i, k))));
            }
            if p.mode != ModeChoice::Specialized {
                modes.push(FitMode::Exact);
            }
            for &(n, kk) in &cases {
                let mut degrees = Vec::new();
                for mode in &modes {
                    if *mode == FitMode::Exact && n > 2 {
                        continue;
                    }
                    let tag = match mode {
                        FitMode::Specialized(a) => format!("ahat={}", a),
                        FitMode::Exact => "exact".into(),
                    };
                    let name = format!("{} (n,k)=({},{}) {}", label(k), n, kk, tag);
                    match fit_quasipolynomial(n, kk, k, mode, 40) {
                        Ok(f) => {
                            rep.check(format!("{} fit", name), f.degree as i64 <= f.degree_bound, || f.to_json());
                            rep.check(format!("{} symmetric", name), f.symmetric(), || f.to_json());
                            rep.info(format!("{} degree", name), json!({"degree": f.degree, "bound": f.degree_bound}));
                            degrees.push(f.degree);
                        }
                        Err(e) => rep.fail(format!("{} fit", name), json!(e.to_string())),
                    }
                }
                let same = degrees.windows(2).all(|w| w[0] == w[1]);
                rep.check(format!("{} (n,k)=({},{}) degrees agree across modes", label(k), n, kk), same, || json!(degrees));
            }
            let mode = FitMode::Specialized(random_ahat(p.seed, k));
            err_check(&mut rep, label(k), unstable_witness(k, &mode, (8, 4)));
            let elements = [(0i64, qf(1, 2), 0u32), (0, qf(1, 2), 1), (1, qf(-3, 2), 2), (2, qf(5, 2), 1)];
            for (kk, l, s) in elements.into_iter().filter(|e| e.0 < p.u_order) {
                let name = format!("{} matrix element k={} l={} s={}", label(k), kk, l, s);
                match fit_matrix_element(kk, &l, s, k, &mode, 40) {
                    Ok(f) => {
                        rep.check(name.clone(), f.degree as i64 <= f.degree_bound, || f.to_json());
                        rep.info(format!("{} degree", name), json!(f.degree));
                    }
                    Err(e) => rep.fail(name, json!(e.to_string())),
                }
            }
            for kk in -1..p.u_order.min(3) {
                let name = format!("{} identity element k={}", label(k), kk);
                match fit_identity_element(kk, k, &mode, 40) {
                    Ok(f) => {
                        rep.check(name.clone(), f.degree as i64 <= f.degree_bound, || f.to_json());
                        rep.info(format!("{} degree", name), json!(f.degree));
                    }
                    Err(e) => rep.fail(name, json!(e.to_string())),
                }
            }
        }
        rep
    })
}

/// Annihilation of Ψ and the dequantized curve.
pub fn qcurve(p: &SuiteParams) -> CheckReport {
    timed(p, || {
        let ks = knots_or(p, &[(1, 1), (1, 2), (2, 3), (3, 2)]);
        let n = p.m_max.max(20);
        let mut rep = CheckReport::new("qcurve").param("knots", knot_list(&ks)).param("N", n);
        for k in &ks {
            err_check(&mut rep, label(k), Ok(qcurve_check(k, n)));
            err_check(&mut rep, label(k), dequantization_check(k, 8));
        }
        rep
    })
}

pub fn run(name: &str, p: &SuiteParams) -> Option<CheckReport> {
    Some(match name {
        "threeway" => threeway(p),
        "jacobi" => jacobi(p),
        "xi" => xi(p),
        "unstable" => unstable(p),
        "quasipoly" => quasipoly(p),
        "qcurve" => qcurve(p),
        "all" => timed(p, || {
            let mut rep = CheckReport::new("all");
            for s in &SUITES[..SUITES.len() - 1] {
                rep.absorb(run(s, p).expect("known suite"));
            }
            rep
        }),
        _ => return None,
    })
}
