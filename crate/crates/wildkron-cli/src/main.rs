//! `wildkron` — exact calculus for wild Kronecker quivers on the command
//! line.
//!
//! Numeric output is printed exactly as decimal strings, identical argv
//! gives byte-identical stdout (timings go to stderr), and exit codes are:
//! 0 success, 2 usage or input error, 3 theorem violation or failing
//! verification suite, 4 internal construction failure.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use wildkron::bricks::{construct_brick, indecomposable_dim_for_quasilength, quasi_length_options};
use wildkron::components::{dimset_equal, length_census, samelength_pair_search, ComponentSeed};
use wildkron::reps::{end_dim, hom_dim, rep_from_json, rep_to_json};
use wildkron::roots::{classify, coxeter_apply, DimVector, RootKind};
use wildkron::sequences::SeqCache;
use wildkron::verify::{
    beta_suite, bricks_suite, dimset_suite, identities_suite, inequalities_suite, pairs_suite,
    Report,
};
use wildkron::Error;

/// Dimension vector argument in the form `a,b` (arbitrary precision).
#[derive(Debug, Clone)]
struct VecArg(DimVector);

impl FromStr for VecArg {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (a, b) = s
            .split_once(',')
            .ok_or_else(|| format!("expected a,b but got {s:?}"))?;
        let a = BigInt::from_str(a.trim()).map_err(|e| format!("bad first component: {e}"))?;
        let b = BigInt::from_str(b.trim()).map_err(|e| format!("bad second component: {e}"))?;
        Ok(VecArg(DimVector::new(a, b)))
    }
}

/// Inclusive integer range `lo..hi` (a single value means `v..v`).
#[derive(Debug, Clone, Copy)]
struct RangeArg(i64, i64);

impl FromStr for RangeArg {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if let Some((lo, hi)) = s.split_once("..") {
            let lo = lo
                .trim()
                .parse()
                .map_err(|e| format!("bad range start: {e}"))?;
            let hi = hi
                .trim()
                .parse()
                .map_err(|e| format!("bad range end: {e}"))?;
            if lo > hi {
                return Err(format!("empty range {s:?}"));
            }
            Ok(RangeArg(lo, hi))
        } else {
            let v = s.trim().parse().map_err(|e| format!("bad value: {e}"))?;
            Ok(RangeArg(v, v))
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SeqKind {
    #[value(name = "A", alias = "a")]
    A,
    #[value(name = "B", alias = "b")]
    B,
    #[value(name = "s", alias = "S")]
    S,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SuiteName {
    Identities,
    Inequalities,
    Bricks,
    Beta,
    Pairs,
    Dimset,
}

#[derive(Parser)]
#[command(
    name = "wildkron",
    version,
    about = "Exact root, brick and component calculus for wild Kronecker quivers"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print sequence values A_0..A_K, B_0..B_K, or s_1, s_3, ... up to K.
    Seq {
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum)]
        kind: SeqKind,
        #[arg(long)]
        upto: usize,
    },
    /// Root-level queries.
    Root {
        #[command(subcommand)]
        cmd: RootCmd,
    },
    /// Print the Coxeter orbit v·Φ^i for i in the given range.
    Orbit {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        vec: VecArg,
        #[arg(long, allow_hyphen_values = true)]
        range: RangeArg,
    },
    /// Construct a verified brick for an imaginary root.
    Brick {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        vec: VecArg,
        /// Write the representation JSON to this file.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Re-verify the certificate and print the verification line.
        #[arg(long)]
        verify: bool,
    },
    /// Dimension of Hom(rep1, rep2) for representations stored as JSON.
    Homdim {
        #[arg(long)]
        rep1: PathBuf,
        #[arg(long)]
        rep2: PathBuf,
    },
    /// Admissible quasi-lengths of an imaginary root, with seeds and layers.
    Ql {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        vec: VecArg,
    },
    /// All nodes of a component with the given length (at most two).
    Census {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        seed: VecArg,
        #[arg(long)]
        length: String,
        #[arg(long)]
        json: bool,
    },
    /// Search for same-length pairs with quasi-lengths r and s.
    Pairs {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        r: u32,
        #[arg(long)]
        s: u32,
        #[arg(long = "max-i", allow_hyphen_values = true)]
        max_i: i64,
    },
    /// Decide whether two components share their dimension-vector set.
    Dimset {
        #[arg(long)]
        n: u32,
        #[arg(long = "seedA")]
        seed_a: VecArg,
        #[arg(long = "seedB")]
        seed_b: VecArg,
    },
    /// Run a verification suite; exit 0 iff there are no failures.
    Verify {
        #[arg(long, value_enum)]
        suite: SuiteName,
        /// Quiver size or range, e.g. `3` or `3..8`.
        #[arg(long, default_value = "3")]
        n: RangeArg,
        #[arg(long, default_value_t = 25)]
        upto: usize,
        #[arg(long = "tuple-bound", default_value_t = 8)]
        tuple_bound: usize,
        #[arg(long = "sum-bound", default_value_t = 40)]
        sum_bound: i64,
        #[arg(long = "seed-bound", default_value_t = 6)]
        seed_bound: i64,
        #[arg(long = "length-bound", default_value_t = 120)]
        length_bound: i64,
        #[arg(long = "r-bound", default_value_t = 3)]
        r_bound: u32,
        #[arg(long = "s-bound", default_value_t = 3)]
        s_bound: u32,
        #[arg(long = "max-i", default_value_t = 8)]
        max_i: i64,
        #[arg(long, default_value_t = 4)]
        window: i64,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum RootCmd {
    /// Classify a vector as Real, Imaginary or NonRoot.
    Classify {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        vec: VecArg,
    },
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::InvalidParameter(_)
        | Error::InvalidRep(_)
        | Error::ArrowCountMismatch { .. }
        | Error::NotImaginaryRoot { .. } => 2,
        Error::TheoremViolation(_) => 3,
        Error::ConstructionInvariant { .. } | Error::ReflectionContract(_) => 4,
    }
}

struct Failed {
    code: u8,
    message: String,
}

impl From<Error> for Failed {
    fn from(e: Error) -> Self {
        Failed {
            code: exit_code_for(&e),
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failed {
    Failed {
        code: 2,
        message: message.into(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: Cli) -> Result<u8, Failed> {
    match cli.cmd {
        Cmd::Seq { n, kind, upto } => {
            let mut cache = SeqCache::new(n)?;
            let vals: Vec<String> = match kind {
                SeqKind::A => (0..=upto).map(|i| cache.a(i).to_string()).collect(),
                SeqKind::B => (0..=upto).map(|i| cache.b(i).to_string()).collect(),
                SeqKind::S => (1..=upto)
                    .step_by(2)
                    .map(|r| cache.s(r).map(|v| v.to_string()))
                    .collect::<Result<_, _>>()?,
            };
            println!("{}", vals.join(" "));
            Ok(0)
        }
        Cmd::Root { cmd } => match cmd {
            RootCmd::Classify { n, vec } => {
                let class = classify(n, &vec.0)?;
                println!("{class}");
                Ok(0)
            }
        },
        Cmd::Orbit { n, vec, range } => {
            if n < 3 {
                return Err(usage(format!("n must be >= 3, got {n}")));
            }
            let mut out = String::new();
            for i in range.0..=range.1 {
                let v = coxeter_apply(n, &vec.0, i);
                writeln!(out, "i={i} {v}").unwrap();
            }
            print!("{out}");
            Ok(0)
        }
        Cmd::Brick {
            n,
            vec,
            out,
            verify,
        } => {
            let cert = construct_brick(n, &vec.0)?;
            println!("{}", cert.to_json());
            if verify {
                let recomputed = end_dim(&cert.rep);
                let class = classify(n, &cert.rep.dim)?;
                let ok =
                    recomputed == 1 && cert.rep.dim == vec.0 && class.kind == RootKind::Imaginary;
                println!(
                    "verified dim={} end_dim={recomputed} class={}",
                    cert.rep.dim, class.kind
                );
                if !ok {
                    return Err(Failed {
                        code: 4,
                        message: "certificate re-verification failed".into(),
                    });
                }
            }
            if let Some(path) = out {
                let json = rep_to_json(&cert.rep)?;
                std::fs::write(&path, json)
                    .map_err(|e| usage(format!("cannot write {}: {e}", path.display())))?;
            }
            Ok(0)
        }
        Cmd::Homdim { rep1, rep2 } => {
            let read = |p: &PathBuf| -> Result<String, Failed> {
                std::fs::read_to_string(p)
                    .map_err(|e| usage(format!("cannot read {}: {e}", p.display())))
            };
            let m = rep_from_json(&read(&rep1)?)?;
            let n = rep_from_json(&read(&rep2)?)?;
            let sol = hom_dim(&m, &n)?;
            println!("{}", sol.dimension);
            Ok(0)
        }
        Cmd::Ql { n, vec } => {
            let options = quasi_length_options(n, &vec.0)?;
            let rendered: Vec<String> = options.iter().map(|r| r.to_string()).collect();
            println!("options: {}", rendered.join(" "));
            for r in options {
                let (seed, layer) = indecomposable_dim_for_quasilength(n, &vec.0, r)?;
                println!("r={r} seed={seed} layer={layer}");
            }
            Ok(0)
        }
        Cmd::Census {
            n,
            seed,
            length,
            json,
        } => {
            let d =
                BigInt::from_str(&length).map_err(|e| usage(format!("bad --length value: {e}")))?;
            let comp = ComponentSeed::new(n, seed.0.clone())?;
            let res = length_census(&comp, &d)?;
            if json {
                let hits: Vec<serde_json::Value> = res
                    .hits
                    .iter()
                    .map(|h| {
                        serde_json::json!({
                            "shift": h.coord.shift,
                            "quasi_length": h.coord.quasi_length,
                            "dim": [h.dim.a.to_string(), h.dim.b.to_string()],
                        })
                    })
                    .collect();
                let doc = serde_json::json!({
                    "n": n,
                    "seed": [seed.0.a.to_string(), seed.0.b.to_string()],
                    "length": d.to_string(),
                    "count": res.count(),
                    "hits": hits,
                });
                println!("{doc}");
            } else {
                println!("length={d} count={}", res.count());
                for h in &res.hits {
                    println!(
                        "node(i={}, r={}) dim={}",
                        h.coord.shift, h.coord.quasi_length, h.dim
                    );
                }
            }
            Ok(0)
        }
        Cmd::Pairs { n, r, s, max_i } => {
            let witnesses = samelength_pair_search(n, r, s, max_i)?;
            for w in &witnesses {
                println!(
                    "i={} seed={} node_r(i={},r={})={} node_s(i={},r={})={} length={}",
                    w.shift,
                    w.seed,
                    w.node_r.coord.shift,
                    w.node_r.coord.quasi_length,
                    w.node_r.dim,
                    w.node_s.coord.shift,
                    w.node_s.coord.quasi_length,
                    w.node_s.dim,
                    w.length
                );
            }
            Ok(0)
        }
        Cmd::Dimset { n, seed_a, seed_b } => {
            let a = ComponentSeed::new(n, seed_a.0)?;
            let b = ComponentSeed::new(n, seed_b.0)?;
            println!("{}", dimset_equal(&a, &b)?);
            Ok(0)
        }
        Cmd::Verify {
            suite,
            n,
            upto,
            tuple_bound,
            sum_bound,
            seed_bound,
            length_bound,
            r_bound,
            s_bound,
            max_i,
            window,
            json,
        } => {
            if n.0 < 3 {
                return Err(usage(format!("n must be >= 3, got {}", n.0)));
            }
            let (n_lo, n_hi) = (n.0 as u32, n.1 as u32);
            let report = match suite {
                SuiteName::Identities => identities_suite(n_lo, n_hi, upto),
                SuiteName::Inequalities => inequalities_suite(n_lo, n_hi, upto, tuple_bound),
                SuiteName::Bricks => merge_over_n(n_lo, n_hi, |n| bricks_suite(n, sum_bound)),
                SuiteName::Beta => {
                    merge_over_n(n_lo, n_hi, |n| beta_suite(n, seed_bound, length_bound))
                }
                SuiteName::Pairs => {
                    merge_over_n(n_lo, n_hi, |n| pairs_suite(n, r_bound, s_bound, max_i))
                }
                SuiteName::Dimset => {
                    merge_over_n(n_lo, n_hi, |n| dimset_suite(n, seed_bound, window))
                }
            };
            eprintln!("time_ms={}", report.wall_ms);
            if json {
                println!("{}", serde_json::to_string(&report).expect("serializable"));
            } else {
                println!(
                    "suite={} cases={} failures={}",
                    report.suite,
                    report.cases,
                    report.failures.len()
                );
                for f in report.failures.iter().take(10) {
                    println!(
                        "FAIL input={} expected={} actual={}",
                        f.input, f.expected, f.actual
                    );
                }
                if report.failures.len() > 10 {
                    println!("... {} more failures", report.failures.len() - 10);
                }
            }
            Ok(if report.ok() { 0 } else { 3 })
        }
    }
}

fn merge_over_n(n_lo: u32, n_hi: u32, suite: impl Fn(u32) -> Report) -> Report {
    let mut merged: Option<Report> = None;
    for n in n_lo..=n_hi {
        let r = suite(n);
        merged = Some(match merged {
            None => r,
            Some(mut acc) => {
                acc.cases += r.cases;
                acc.failures.extend(r.failures);
                acc.wall_ms += r.wall_ms;
                acc
            }
        });
    }
    merged.expect("nonempty n range")
}
