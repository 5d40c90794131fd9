//! Acceptance suite: one pass/fail line per criterion, exact equality
//! throughout. Lines go straight to stderr so they show without
//! `--nocapture`.

use knotfermion::algebra::{lagrange_revert, qf, zeta_series, Field, LaurentPoly, RationalFunction, Ring, Series, Var, Q};
use knotfermion::report::CheckReport;
use knotfermion::suites::{self, SuiteParams};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};
use std::io::Write;
use std::process::Command;
use std::time::{Duration, Instant};

struct Outcome {
    ok: bool,
    detail: String,
}

fn from_report(r: CheckReport) -> Outcome {
    let fails: Vec<String> = r.failures().iter().map(|c| c.name.clone()).collect();
    let total = r.checks.len();
    Outcome {
        ok: fails.is_empty(),
        detail: if fails.is_empty() { format!("{} checks", total) } else { format!("failed: {}", fails.join("; ")) },
    }
}

fn line(id: u32, name: &str, budget: Duration, f: impl FnOnce() -> Outcome) -> bool {
    let t = Instant::now();
    let o = f();
    let el = t.elapsed();
    let status = if o.ok { "PASS" } else { "FAIL" };
    let over = if el > budget { format!(" (over {}s budget)", budget.as_secs()) } else { String::new() };
    let _ = writeln!(std::io::stderr(), "criterion {} [{}] {}: {} in {:.1}s{}", id, name, status, o.detail, el.as_secs_f64(), over);
    o.ok
}

fn small_q() -> impl Strategy<Value = Q> {
    (-9i64..=9, 1i64..=5).prop_map(|(n, d)| qf(n, d))
}

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-4i64..=4, small_q()), 0..5).prop_map(|ts| LaurentPoly::from_terms(Var::AHat, ts))
}

fn unit_series(cap: i64) -> impl Strategy<Value = Series<Q>> {
    (small_q().prop_filter("unit", |c| *c != qf(0, 1)), prop::collection::vec(small_q(), (cap - 1) as usize)).prop_map(
        move |(c0, rest)| {
            Series::from_terms(0, cap, std::iter::once((0, c0)).chain(rest.into_iter().enumerate().map(|(i, c)| (i as i64 + 1, c))))
        },
    )
}

fn run_prop<S: Strategy>(name: &str, s: S, f: impl Fn(S::Value) -> bool) -> Result<(), String> {
    let mut runner = TestRunner::new(Config { cases: 200, ..Config::default() });
    runner.run(&s, |v| {
        prop_assert!(f(v));
        Ok(())
    })
    .map_err(|e| format!("{}: {}", name, e))
}

fn kernel_properties() -> Result<(), String> {
    run_prop("ring axioms", (laurent(), laurent(), laurent()), |(a, b, c)| {
        a.radd(&b) == b.radd(&a)
            && a.rmul(&b).rmul(&c) == a.rmul(&b.rmul(&c))
            && a.rmul(&b.radd(&c)) == a.rmul(&b).radd(&a.rmul(&c))
            && a.rsub(&a).is_zero()
    })?;
    run_prop("rational function inverse", (laurent(), laurent()), |(n, d)| {
        if n.is_zero() || d.is_zero() {
            return true;
        }
        let r = RationalFunction::new(n, d).unwrap();
        r.rmul(&r.inv().unwrap()).is_one()
    })?;
    run_prop("series inverse", unit_series(8), |s| s.mul(&s.inverse().unwrap()) == Series::one().truncate(8))?;
    run_prop("reversion", unit_series(7), |s| {
        let f = s.shift(1);
        let r = lagrange_revert(&f, 6).unwrap();
        let id = Series::monomial(1, qf(1, 1)).truncate(7);
        f.compose(&r).unwrap().truncate(7) == id && r.compose(&f).unwrap().truncate(7) == id
    })?;
    run_prop("zeta parity", small_q(), |c| {
        let z: Series<Q> = zeta_series(&c, 0, 12);
        let zm: Series<Q> = zeta_series(&(-c), 0, 12);
        zm == z.neg() && z.terms().iter().all(|(e, v)| e % 2 == 1 || *v == qf(0, 1))
    })?;
    Ok(())
}

fn cli(args: &[&str]) -> (i32, Vec<u8>) {
    let out = Command::new(env!("CARGO_BIN_EXE_knotfermion")).args(args).output().expect("binary runs");
    (out.status.code().unwrap_or(-1), out.stdout)
}

fn cli_contract() -> Result<(), String> {
    let args = ["verify", "--suite", "quasipoly", "--Q", "2", "--P", "3", "--mode", "specialized", "--seed", "7", "--u-order", "2", "--no-timing"];
    let (c1, o1) = cli(&args);
    let (c2, o2) = cli(&args);
    if c1 != 0 || c2 != 0 {
        return Err(format!("quasipoly exit codes {} {}", c1, c2));
    }
    if o1 != o2 {
        return Err("quasipoly report differs between identical runs".into());
    }
    let v: serde_json::Value = serde_json::from_slice(&o1).map_err(|e| e.to_string())?;
    if v["params"]["seed"] != 7 {
        return Err("seed missing from report".into());
    }
    let (c, o) = cli(&["compute", "correlator", "--Q", "2", "--P", "3", "--mu", "1", "--u-order", "3"]);
    let (c_, o_) = cli(&["compute", "correlator", "--Q", "2", "--P", "3", "--mu", "1", "--u-order", "3"]);
    if c != 0 || c_ != 0 || o != o_ {
        return Err("compute correlator is not deterministic".into());
    }
    for bad in [
        vec!["compute", "homfly", "--Q", "2", "--P", "4", "-R", "1"],
        vec!["compute", "xi", "--index", "3"],
        vec!["verify", "--suite", "nope"],
        vec!["verify", "--suite", "xi", "--Q", "2"],
    ] {
        let (code, _) = cli(&bad);
        if code != 2 {
            return Err(format!("{:?} exited {} instead of 2", bad, code));
        }
    }
    Ok(())
}

#[test]
fn acceptance() {
    let p = SuiteParams { timing: false, ..SuiteParams::default() };
    let min = |m: u64| Duration::from_secs(60 * m);
    let results = [
        line(1, "three-way partition function", min(3), || from_report(suites::threeway(&p))),
        line(2, "Jacobi identities", min(1), || from_report(suites::jacobi_identities(&SuiteParams { m_max: 12, ..p.clone() }))),
        line(3, "xi expansions", min(1), || from_report(suites::xi(&p))),
        line(4, "unstable matches", min(2), || from_report(suites::unstable(&p))),
        line(5, "quasi-polynomiality", min(10), || from_report(suites::quasipoly(&p))),
        line(6, "G-decomposition", min(2), || from_report(suites::gdecomp(&p))),
        line(7, "quantum curve", min(1), || from_report(suites::qcurve(&p))),
        line(8, "kernel properties and CLI determinism", min(1), || match kernel_properties().and_then(|_| cli_contract()) {
            Ok(()) => Outcome { ok: true, detail: "5 properties x 200 cases, CLI contract".into() },
            Err(e) => Outcome { ok: false, detail: e },
        }),
    ];
    let failed: Vec<usize> = results.iter().enumerate().filter(|(_, ok)| !**ok).map(|(i, _)| i + 1).collect();
    assert!(failed.is_empty(), "criteria failed: {:?}", failed);
}
