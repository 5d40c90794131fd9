//! `knotfermion` command line: compute objects or run verification suites,
//! printing JSON.

use clap::{Args, Parser, Subcommand, ValueEnum};
use knotfermion::fermion::{c_g, connected_k, k_mu};
use knotfermion::homfly::homfly_extended;
use knotfermion::knot::{KnotParams, Point};
use knotfermion::partitions::Partition;
use knotfermion::qcurve::wave_function;
use knotfermion::spectral::xi_coeff;
use knotfermion::suites::{self, ModeChoice, SuiteParams};
use serde_json::{json, Value};
use std::process::ExitCode;
use std::io::Write;

#[derive(Parser)]
#[command(name = "knotfermion", version, about = "Exact torus-knot HOMFLY-PT and spectral-curve checks")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Compute an object and print it as JSON.
    Compute {
        #[command(subcommand)]
        what: Compute,
    },
    /// Run a verification suite and print its report.
    Verify(VerifyArgs),
}

#[derive(Args, Clone)]
struct KnotArgs {
    #[arg(long = "Q", default_value_t = 2)]
    q: u32,
    #[arg(long = "P", default_value_t = 3)]
    p: u32,
}

#[derive(Subcommand)]
enum Compute {
    /// Extended colored HOMFLY-PT in power sums.
    Homfly {
        #[command(flatten)]
        knot: KnotArgs,
        /// Color, e.g. 2,1
        #[arg(short = 'R', long = "R")]
        r: String,
        #[arg(long, default_value_t = 3)]
        u_order: i64,
    },
    /// K_μ, K°_μ, or C^(g)_μ.
    Correlator {
        #[command(flatten)]
        knot: KnotArgs,
        #[arg(long)]
        mu: String,
        #[arg(long, default_value_t = 3)]
        u_order: i64,
        #[arg(long)]
        connected: bool,
        #[arg(long)]
        genus: Option<i64>,
    },
    /// ξ^index_m for 1 ≤ m ≤ m-max.
    Xi {
        #[command(flatten)]
        knot: KnotArgs,
        #[arg(long, default_value_t = 1)]
        index: u8,
        #[arg(long, default_value_t = 8)]
        m_max: u32,
    },
    /// ψ_ℓ for 0 ≤ ℓ ≤ l-max.
    Psi {
        #[command(flatten)]
        knot: KnotArgs,
        #[arg(long, default_value_t = 4)]
        l_max: u32,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Specialized,
    Exact,
    Both,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_parser = clap::builder::PossibleValuesParser::new(suites::SUITES))]
    suite: String,
    /// Restrict to one knot; both --Q and --P are required together.
    #[arg(long = "Q", requires = "p")]
    q: Option<u32>,
    #[arg(long = "P", requires = "q")]
    p: Option<u32>,
    #[arg(long, default_value_t = 6)]
    max_weight: usize,
    #[arg(long, default_value_t = 4)]
    u_order: i64,
    #[arg(long, default_value_t = 8)]
    m_max: u32,
    #[arg(long, default_value_t = 7)]
    seed: u64,
    #[arg(long, value_enum, default_value = "both")]
    mode: ModeArg,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<std::path::PathBuf>,
    /// Report 0 ms so that output is byte-identical across runs.
    #[arg(long)]
    no_timing: bool,
}

fn usage_error(flag: &str, msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: invalid value for {}: {}", flag, msg);
    ExitCode::from(2)
}

fn parse_parts(s: &str) -> Option<Partition> {
    let parts: Option<Vec<u32>> = s.split(',').map(|x| x.trim().parse().ok().filter(|&v| v > 0)).collect();
    parts.filter(|p| !p.is_empty()).map(Partition::new)
}

fn knot(q: u32, p: u32) -> Result<KnotParams, ExitCode> {
    KnotParams::new(q, p).map_err(|e| usage_error("--Q/--P", e))
}

fn print(v: &Value) {
    let _ = writeln!(std::io::stdout(), "{}", serde_json::to_string_pretty(v).expect("json"));
}

fn compute(what: Compute) -> Result<Value, ExitCode> {
    Ok(match what {
        Compute::Homfly { knot: ka, r, u_order } => {
            let k = knot(ka.q, ka.p)?;
            let r = parse_parts(&r).ok_or_else(|| usage_error("-R", "expected comma-separated positive parts"))?;
            if u_order < 1 {
                return Err(usage_error("--u-order", "must be at least 1"));
            }
            let h = homfly_extended(&Point::symbolic(&k), &r, u_order);
            let terms: Vec<Value> = h.terms().iter().map(|(s, c)| json!({"p": s.to_json(), "coeff": c.to_json()})).collect();
            json!({"knot": k.to_json(), "R": r.to_json(), "u_order": u_order, "homfly": terms})
        }
        Compute::Correlator { knot: ka, mu, u_order, connected, genus } => {
            let k = knot(ka.q, ka.p)?;
            let mu = parse_parts(&mu).ok_or_else(|| usage_error("--mu", "expected comma-separated positive parts"))?;
            let pt = Point::symbolic(&k);
            let base = json!({"knot": k.to_json(), "mu": mu.to_json()});
            let mut out = base.as_object().cloned().unwrap_or_default();
            if let Some(g) = genus {
                let c = c_g(g, &mu, &pt).map_err(|e| usage_error("--genus", e))?;
                out.insert("genus".into(), json!(g));
                out.insert("C".into(), c.to_json());
            } else {
                if u_order < 0 {
                    return Err(usage_error("--u-order", "must be non-negative"));
                }
                let s = if connected { connected_k(&pt, &mu, u_order).value } else { k_mu(&pt, &mu, u_order) };
                out.insert("connected".into(), json!(connected));
                out.insert("u_order".into(), json!(u_order));
                out.insert("series".into(), s.to_json());
            }
            Value::Object(out)
        }
        Compute::Xi { knot: ka, index, m_max } => {
            let k = knot(ka.q, ka.p)?;
            if index != 1 && index != 2 {
                return Err(usage_error("--index", "must be 1 or 2"));
            }
            let xs: Vec<Value> = (1..=m_max).map(|m| json!({"m": m, "xi": xi_coeff(index, m, &k).to_json()})).collect();
            json!({"knot": k.to_json(), "index": index, "xi": xs})
        }
        Compute::Psi { knot: ka, l_max } => {
            let k = knot(ka.q, ka.p)?;
            let psi: Vec<Value> = wave_function(&k, l_max).iter().map(|w| w.to_json()).collect();
            json!({"knot": k.to_json(), "psi": psi})
        }
    })
}

fn verify(a: VerifyArgs) -> ExitCode {
    let knots = match (a.q, a.p) {
        (Some(q), Some(p)) => match knot(q, p) {
            Ok(k) => Some(vec![k]),
            Err(c) => return c,
        },
        _ => None,
    };
    if a.u_order < 1 {
        return usage_error("--u-order", "must be at least 1");
    }
    if a.m_max < 2 {
        return usage_error("--m-max", "must be at least 2");
    }
    let params = SuiteParams {
        knots,
        max_weight: a.max_weight,
        u_order: a.u_order,
        m_max: a.m_max,
        seed: a.seed,
        mode: match a.mode {
            ModeArg::Specialized => ModeChoice::Specialized,
            ModeArg::Exact => ModeChoice::Exact,
            ModeArg::Both => ModeChoice::Both,
        },
        timing: !a.no_timing,
    };
    let report = suites::run(&a.suite, &params).expect("suite names are validated by clap");
    let text = serde_json::to_string_pretty(&report.to_json()).expect("json");
    match &a.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, text + "\n") {
                return usage_error("--out", e);
            }
        }
        None => {
            let _ = writeln!(std::io::stdout(), "{}", text);
        }
    }
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn configure_threads() {
    #[cfg(feature = "parallel")]
    if let Some(n) = std::env::var("KNOTFERMION_THREADS").ok().and_then(|s| s.parse::<usize>().ok()) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
}

fn main() -> ExitCode {
    configure_threads();
    let cli = Cli::parse();
    match cli.cmd {
        Cmd::Compute { what } => match compute(what) {
            Ok(v) => {
                print(&v);
                ExitCode::SUCCESS
            }
            Err(c) => c,
        },
        Cmd::Verify(a) => verify(a),
    }
}
