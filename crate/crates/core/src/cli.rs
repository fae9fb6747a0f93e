//! Command-line front end. `run` parses arguments, writes the report and
//! returns the process exit code: 0 on success, 2 for bad input, 3 when an
//! internal consistency check fails.

use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::catalog::Catalog;
use crate::cube::{CubeOptions, SignedCubeComplex};
use crate::diagram::{Skeleton, VirtualLinkDiagram};
use crate::error::Error;
use crate::frobenius::FrobeniusSpec;
use crate::homology::{choice_independence, homology_of, Coeffs};
use crate::lee::{canonical_generators, lee_complex, positive_s_min, rasmussen, seifert_genus, verify_generator_cycle};
use crate::orientation::{OrientationLayer, StarRule};
use crate::smoothing::{check_cap, Resolution, SmoothingState, StateSum};

#[derive(Parser, Debug)]
#[command(name = "vkh", version, about = "Jones polynomial, Khovanov and Lee homology of virtual links")]
pub struct Args {
    /// Print a JSON report.
    #[arg(long, global = true)]
    pub json: bool,
    #[arg(long, global = true, default_value_t = crate::DEFAULT_MAX_CROSSINGS)]
    pub max_crossings: usize,
    /// Extra catalog file, searched before the bundled one.
    #[arg(long, global = true)]
    pub catalog: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Kauffman bracket in A and q, normalized f and the Jones polynomial.
    Jones { input: String },
    /// Khovanov homology table, Poincaré polynomial and Euler check.
    Homology {
        input: String,
        #[arg(long, default_value = "z")]
        coeff: Coeffs,
    },
    /// Rasmussen invariant and slice-genus bounds.
    S {
        input: String,
        /// Read s_min off the all-A state of a positive diagram.
        #[arg(long)]
        positive_fast: bool,
    },
    /// Runs the structural checks on the cube and the Lee generators.
    Check {
        input: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Negates the edge `MASK:SITE_INDEX` before checking.
        #[arg(long, hide = true)]
        flip_edge: Option<String>,
    },
    /// Cut loci, stars and every edge of the cube.
    Dump { input: String },
    /// Prints a random code.
    Random {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 4)]
        crossings: usize,
        #[arg(long, default_value_t = 1)]
        components: usize,
    },
}

enum Failure {
    Input(Error),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Internal(m) => Failure::Internal(m),
            e => Failure::Input(e),
        }
    }
}

/// Input text: a catalog name, a file holding a code, or a literal code.
pub fn resolve_input(input: &str, extra: Option<&Catalog>) -> crate::Result<VirtualLinkDiagram> {
    if let Some(c) = extra {
        if let Ok(d) = c.get(input) {
            return Ok(d);
        }
    }
    if let Ok(d) = Catalog::bundled().get(input) {
        return Ok(d);
    }
    let path = std::path::Path::new(input);
    if !input.is_empty() && path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Validation(format!("{input}: {e}")))?;
        return VirtualLinkDiagram::parse(text.trim());
    }
    VirtualLinkDiagram::parse(input)
}

fn input_hash(d: &VirtualLinkDiagram) -> String {
    hex::encode(Sha256::digest(d.to_string().as_bytes()))
}

struct Outcome {
    result: Value,
    text: String,
    ok: bool,
}

pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args = match Args::try_parse_from(args) {
        Ok(a) => a,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if code == 0 { write!(out, "{e}") } else { write!(err, "{e}") };
            return code;
        }
    };
    let start = Instant::now();
    match execute(&args) {
        Ok((name, d, o)) => {
            if args.json {
                let report = json!({
                    "command": name,
                    "input": d.as_ref().map(|d| d.to_string()),
                    "input_hash": d.as_ref().map(input_hash),
                    "result": o.result,
                    "elapsed_ms": start.elapsed().as_millis() as u64,
                });
                let _ = writeln!(out, "{}", serde_json::to_string_pretty(&report).unwrap());
            } else {
                let _ = write!(out, "{}", o.text);
            }
            if o.ok {
                0
            } else {
                let _ = writeln!(err, "internal consistency check failed");
                3
            }
        }
        Err(Failure::Input(e)) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
        Err(Failure::Internal(m)) => {
            let _ = writeln!(err, "internal error: {m}");
            3
        }
    }
}

fn execute(args: &Args) -> Result<(&'static str, Option<VirtualLinkDiagram>, Outcome), Failure> {
    let extra = match &args.catalog {
        Some(p) => Some(Catalog::load(p)?),
        None => None,
    };
    let load = |input: &str| -> Result<VirtualLinkDiagram, Failure> {
        let d = resolve_input(input, extra.as_ref())?;
        check_cap(&d, args.max_crossings)?;
        Ok(d)
    };
    let opts = CubeOptions { max_crossings: args.max_crossings, ..Default::default() };
    Ok(match &args.command {
        Command::Jones { input } => {
            let d = load(input)?;
            ("jones", Some(d.clone()), jones_cmd(&d, args.max_crossings)?)
        }
        Command::Homology { input, coeff } => {
            let d = load(input)?;
            ("homology", Some(d.clone()), homology_cmd(&d, *coeff, &opts)?)
        }
        Command::S { input, positive_fast } => {
            let d = load(input)?;
            ("s", Some(d.clone()), s_cmd(&d, *positive_fast)?)
        }
        Command::Check { input, seed, flip_edge } => {
            let d = load(input)?;
            let flip = match flip_edge {
                None => None,
                Some(s) => {
                    let bad = || Error::Validation(format!("bad --flip-edge {s:?}"));
                    let (m, k) = s.split_once(':').ok_or_else(bad)?;
                    Some((m.parse().map_err(|_| bad())?, k.parse().map_err(|_| bad())?))
                }
            };
            let opts = CubeOptions { flip_edge: flip, ..opts };
            ("check", Some(d.clone()), check_cmd(&d, *seed, &opts)?)
        }
        Command::Dump { input } => {
            let d = load(input)?;
            ("dump", Some(d.clone()), dump_cmd(&d, &opts)?)
        }
        Command::Random { seed, crossings, components } => {
            let d = crate::random::random_diagram(&mut ChaCha8Rng::seed_from_u64(*seed), *crossings, *components);
            let text = format!("{d}\n");
            ("random", Some(d.clone()), Outcome { result: json!(d.to_string()), text, ok: true })
        }
    })
}

fn jones_cmd(d: &VirtualLinkDiagram, cap: usize) -> Result<Outcome, Failure> {
    let sum = StateSum::compute(d, cap)?;
    let (a, q, f, j) = (sum.bracket_a(), sum.bracket_q(), sum.f_poly(), sum.jones());
    let text = format!("bracket_A: {a}\nbracket_q: {q}\nf: {f}\njones: {j}\n");
    Ok(Outcome { result: json!({"bracket_a": a, "bracket_q": q, "f": f, "jones": j}), text, ok: true })
}

fn homology_cmd(d: &VirtualLinkDiagram, coeffs: Coeffs, opts: &CubeOptions) -> Result<Outcome, Failure> {
    let complex = SignedCubeComplex::build(d, &FrobeniusSpec::khovanov(), opts)?;
    let h = homology_of(&complex, coeffs);
    let jones = StateSum::compute(d, opts.max_crossings)?.jones();
    let euler_ok = h.euler_q() == jones;
    let p = h.poincare();
    let text = format!("{h}poincare: {p}\neuler matches jones: {euler_ok}\n");
    let result = json!({"table": h.to_json(), "poincare": p.to_string(), "euler_matches_jones": euler_ok});
    Ok(Outcome { result, text, ok: euler_ok })
}

fn s_cmd(d: &VirtualLinkDiagram, fast: bool) -> Result<Outcome, Failure> {
    let result = if fast {
        let s_min = positive_s_min(d)?;
        let g = seifert_genus(d)?;
        json!({
            "s_min": s_min,
            "s_max": s_min + 2,
            "s_bar": s_min + 1,
            "genus_lower": *g.numer() as f64 / *g.denom() as f64,
            "genus_upper": *g.numer() as f64 / *g.denom() as f64,
        })
    } else {
        rasmussen(d)?.to_json()
    };
    let mut text = String::new();
    for k in ["s_min", "s_max", "s_bar", "genus_lower", "genus_upper", "generators"] {
        if let Some(v) = result.get(k) {
            text += &format!("{k}: {v}\n");
        }
    }
    Ok(Outcome { result, text, ok: true })
}

/// Structural checks as `(name, passed)` pairs.
pub fn checks(d: &VirtualLinkDiagram, seed: u64, opts: &CubeOptions) -> crate::Result<Vec<(&'static str, bool)>> {
    let kh = SignedCubeComplex::build(d, &FrobeniusSpec::khovanov(), opts)?;
    let lee = SignedCubeComplex::build(d, &FrobeniusSpec::lee(), opts)?;
    let sk = Skeleton::new(d);
    let layer = OrientationLayer::new(&sk);
    let n = sk.crossing_count();
    let even = (0..1u64 << n).all(|m| {
        let res = Resolution::new(&sk, SmoothingState::new(m, n).unwrap());
        layer.cuts().per_cycle(&res).iter().all(|c| c.len() % 2 == 0)
    });
    let gens = canonical_generators(d)?;
    let lee_default = lee_complex(d)?;
    let cycles = gens.iter().all(|g| verify_generator_cycle(&lee_default, g));
    let ind = choice_independence(d, Coeffs::Z, seed)?;
    Ok(vec![
        ("d2", kh.check_d2().ok),
        ("lee_d2", lee.check_d2().ok),
        ("even_cut_loci", even),
        ("generator_count", gens.len() == 1 << d.component_count()),
        ("generator_cycles", cycles),
        ("root_order", ind.root_order),
        ("spanning_tree", ind.spanning_tree),
        ("star_rule", ind.star_rule),
    ])
}

fn check_cmd(d: &VirtualLinkDiagram, seed: u64, opts: &CubeOptions) -> Result<Outcome, Failure> {
    let results = checks(d, seed, opts)?;
    let ok = results.iter().all(|r| r.1);
    let mut text = String::new();
    let mut obj = serde_json::Map::new();
    for (name, pass) in &results {
        text += &format!("{name}: {}\n", if *pass { "pass" } else { "FAIL" });
        obj.insert(name.to_string(), json!(pass));
    }
    if opts.flip_edge.is_some() || !ok {
        let kh = SignedCubeComplex::build(d, &FrobeniusSpec::khovanov(), opts)?;
        let report = kh.check_d2();
        for f in &report.faces {
            text += &format!("face at state {} sites {} {} does not anticommute\n", f.state, f.sites.0, f.sites.1);
        }
        obj.insert("faces".into(), json!(report.faces));
    }
    obj.insert("ok".into(), json!(ok));
    Ok(Outcome { result: Value::Object(obj), text, ok })
}

fn dump_cmd(d: &VirtualLinkDiagram, opts: &CubeOptions) -> Result<Outcome, Failure> {
    let stars = crate::orientation::dump(d, StarRule::default());
    let complex = SignedCubeComplex::build(d, &FrobeniusSpec::khovanov(), opts)?;
    let edges = complex.dump();
    let text = format!("{stars}{edges}");
    let result = json!({"orientation": stars.lines().collect::<Vec<_>>(), "edges": edges.lines().collect::<Vec<_>>()});
    Ok(Outcome { result, text, ok: true })
}
