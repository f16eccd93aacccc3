//! Command-line front end: exact Ehrhart polynomials, Hodge numbers,
//! moduli dimensions, symmetrizer reports, and non-genericity certificates.
//!
//! Exit codes: 0 success, 2 input error, 3 hypothesis violation, 1 internal.

use clap::{Parser, Subcommand};
use serde::Deserialize;
use std::process::ExitCode;
use std::sync::Arc;

use ivhs_core::certify;
use ivhs_core::ci::{check_ci, CIProblem};
use ivhs_core::error::Error;
use ivhs_core::hodge;
use ivhs_core::jacobian::CoxRing;
use ivhs_core::lattice::{Inequality, LatticePolytope};
use ivhs_core::symmetrizer::randomized_triviality_report;
use ivhs_core::toric::{Fan, TorusDivisor, WeightSystem};

#[derive(Parser)]
#[command(name = "ivhs", about = "Exact Hodge-theoretic computations and certificates")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Ehrhart polynomial of a lattice polytope (exact fractions)
    Ehrhart {
        /// JSON file: {"dim_ambient": n, "inequalities": [{"a": [..], "c": k}]}
        #[arg(long)]
        polytope: String,
        #[arg(long)]
        json: bool,
    },
    /// Hodge numbers of a generic hypersurface in |t·D|
    Hodge {
        /// JSON file: {"rays": [[..]], "max_cones": [[..]]}
        #[arg(long)]
        fan: String,
        /// comma-separated torus-divisor coefficients, one per ray
        #[arg(long)]
        divisor: String,
        #[arg(long)]
        t: i64,
        #[arg(long)]
        json: bool,
    },
    /// Moduli dimension of the generic hypersurface in |t·D|
    Moduli {
        #[arg(long)]
        fan: String,
        #[arg(long)]
        divisor: String,
        #[arg(long)]
        t: i64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
    /// Non-genericity certificates
    Check {
        #[command(subcommand)]
        what: CheckCmd,
    },
    /// Certificates over a range of t, reporting the first NonGeneric one
    Scan {
        #[arg(long)]
        fan: String,
        #[arg(long)]
        divisor: String,
        #[arg(long)]
        from: i64,
        #[arg(long)]
        to: i64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
    /// Randomized symmetrizer triviality report
    Symm {
        #[arg(long)]
        g0: usize,
        #[arg(long)]
        g1: usize,
        #[arg(long)]
        g2: usize,
        #[arg(long)]
        d: usize,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum CheckCmd {
    /// Hypersurface in a complete simplicial toric variety
    Toric {
        #[arg(long)]
        fan: String,
        #[arg(long)]
        divisor: String,
        #[arg(long)]
        t: i64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
    /// Degree-d hypersurface in a weighted projective space
    Wps {
        /// comma-separated weights
        #[arg(long)]
        weights: String,
        #[arg(long)]
        d: i64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
    /// Complete intersection in projective space
    Ci {
        /// ambient projective dimension
        #[arg(long)]
        n: usize,
        /// comma-separated hypersurface degrees
        #[arg(long)]
        degrees: String,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Deserialize)]
struct FanDocument {
    rays: Vec<Vec<i64>>,
    max_cones: Vec<Vec<usize>>,
    #[serde(default)]
    #[allow(dead_code)]
    name: Option<String>,
}

#[derive(Deserialize)]
struct IneqDocument {
    a: Vec<i64>,
    c: i64,
}

#[derive(Deserialize)]
struct PolytopeDocument {
    dim_ambient: usize,
    inequalities: Vec<IneqDocument>,
}

fn read_json<T: serde::de::DeserializeOwned>(path: &str) -> Result<T, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidInput(format!("cannot read {path}: {e}")))?;
    serde_json::from_str(&text).map_err(|e| Error::InvalidInput(format!("bad JSON in {path}: {e}")))
}

fn load_fan(path: &str) -> Result<Fan, Error> {
    let doc: FanDocument = read_json(path)?;
    let dim = doc
        .rays
        .first()
        .map(|r| r.len())
        .ok_or_else(|| Error::InvalidInput("fan has no rays".into()))?;
    Fan::new(dim, doc.rays, doc.max_cones)
}

fn load_polytope(path: &str) -> Result<LatticePolytope, Error> {
    let doc: PolytopeDocument = read_json(path)?;
    let ineqs = doc
        .inequalities
        .iter()
        .map(|i| Inequality::new_i64(&i.a, i.c))
        .collect();
    LatticePolytope::new(doc.dim_ambient, ineqs)
}

fn parse_i64_list(s: &str, what: &str) -> Result<Vec<i64>, Error> {
    s.split(',')
        .map(|p| {
            p.trim()
                .parse::<i64>()
                .map_err(|_| Error::InvalidInput(format!("bad {what} entry: {p}")))
        })
        .collect()
}

fn exit_for(e: &Error) -> u8 {
    match e {
        Error::NotComplete(_)
        | Error::NotCartier(_)
        | Error::NotAmple
        | Error::DimensionTooSmall(_, _)
        | Error::HypothesisViolation(_)
        | Error::ModuliIdentificationUnavailable => 3,
        Error::Internal(_) => 1,
        _ => 2,
    }
}

fn toric_inputs(fan_path: &str, divisor: &str) -> Result<(CoxRing, TorusDivisor), Error> {
    let fan = Arc::new(load_fan(fan_path)?);
    let coeffs = parse_i64_list(divisor, "divisor")?;
    if coeffs.len() != fan.n_rays() {
        return Err(Error::InvalidInput(format!(
            "divisor has {} coefficients but the fan has {} rays",
            coeffs.len(),
            fan.n_rays()
        )));
    }
    Ok((CoxRing::new(fan), TorusDivisor::from_i64(&coeffs)))
}

fn run(cli: Cli) -> Result<(), Error> {
    // accepted to cap internal parallelism; computations are exact and
    // currently sequential, so any value is a no-op
    let _ = std::env::var("IVHS_THREADS");
    match cli.cmd {
        Cmd::Ehrhart { polytope, json } => {
            let p = load_polytope(&polytope)?;
            let e = p.ehrhart()?;
            let coeffs: Vec<String> = e.coeffs.iter().map(|c| c.to_string()).collect();
            if json {
                println!(
                    "{}",
                    serde_json::json!({ "coefficients": coeffs }).to_string()
                );
            } else {
                println!("Ehrhart coefficients, constant term first:");
                for (i, c) in coeffs.iter().enumerate() {
                    println!("  t^{i}: {c}");
                }
            }
        }
        Cmd::Hodge {
            fan,
            divisor,
            t,
            json,
        } => {
            let (ring, div) = toric_inputs(&fan, &divisor)?;
            let h = hodge::hypersurface_hodge(ring.fan(), &div, t)?;
            if json {
                println!(
                    "{}",
                    serde_json::json!({
                        "h_top": h.h_top.to_string(),
                        "h_next": h.h_next.to_string(),
                    })
                );
            } else {
                println!("h^(k,0) = {}", h.h_top);
                println!("h^(k-1,1) = {}", h.h_next);
            }
        }
        Cmd::Moduli {
            fan,
            divisor,
            t,
            seed,
            json,
        } => {
            let (ring, div) = toric_inputs(&fan, &divisor)?;
            let mu = hodge::moduli_dim(&ring, &div, t, seed)?;
            if json {
                println!("{}", serde_json::json!({ "moduli_dim": mu }));
            } else {
                println!("moduli dimension = {mu}");
            }
        }
        Cmd::Check { what } => {
            let (cert, json) = match what {
                CheckCmd::Toric {
                    fan,
                    divisor,
                    t,
                    seed,
                    json,
                } => {
                    let (ring, div) = toric_inputs(&fan, &divisor)?;
                    (certify::check_toric(&ring, &div, t, seed)?, json)
                }
                CheckCmd::Wps {
                    weights,
                    d,
                    seed,
                    json,
                } => {
                    let w = WeightSystem::new(parse_i64_list(&weights, "weights")?)?;
                    (certify::check_wps(&w, d, seed)?, json)
                }
                CheckCmd::Ci {
                    n,
                    degrees,
                    seed,
                    json,
                } => {
                    let prob = CIProblem::new(n, parse_i64_list(&degrees, "degrees")?)?;
                    (check_ci(&prob, seed)?, json)
                }
            };
            if json {
                println!("{}", cert.to_json());
            } else {
                println!("instance: {}", cert.instance);
                println!("h = ({}, {})", cert.h_top, cert.h_next);
                println!(
                    "mu = {} vs rhs = {} -> inequality {}",
                    cert.mu,
                    cert.rhs,
                    if cert.inequality_holds { "holds" } else { "fails" }
                );
                println!("p0 injective: {} ({})", cert.p0_injective, cert.p0_method);
                println!("p1 nonzero: {} ({})", cert.p1_nonzero, cert.p1_method);
                println!("verdict: {}", cert.verdict);
                for w in &cert.warnings {
                    println!("warning: {w}");
                }
            }
        }
        Cmd::Scan {
            fan,
            divisor,
            from,
            to,
            seed,
            json,
        } => {
            let (ring, div) = toric_inputs(&fan, &divisor)?;
            let report = certify::scan_toric(&ring, &div, from, to, seed)?;
            if json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&report)
                        .map_err(|e| Error::Internal(e.to_string()))?
                );
            } else {
                for (i, c) in report.certificates.iter().enumerate() {
                    println!("t = {}: {}", from + i as i64, c.verdict);
                }
                match report.first_non_generic {
                    Some(t) => println!("first NonGeneric at t = {t}"),
                    None => println!("no NonGeneric verdict in range"),
                }
            }
        }
        Cmd::Symm {
            g0,
            g1,
            g2,
            d,
            trials,
            seed,
            json,
        } => {
            let report = randomized_triviality_report(g0, g1, g2, d, trials, seed)?;
            if json {
                println!(
                    "{}",
                    serde_json::json!({
                        "trials": report.trials,
                        "failures": report.failures,
                        "dims": report.dims,
                    })
                );
            } else {
                println!(
                    "{} trials, {} failures, dims {:?}",
                    report.trials, report.failures, report.dims
                );
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_for(&e))
        }
    }
}
