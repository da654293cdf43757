//! Batch command-line surface over the library, with JSON on standard output.
//!
//! Exit codes: 0 on success; 1 on any verification failure or math-level
//! error, with a machine-readable `{"error": …}` object on standard output;
//! 2 on argument/usage errors. Identical arguments (and seed) always produce
//! byte-identical output.

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;

use qgroth::invariant::ABasisElement;
use qgroth::supercharacter::{sch_l_q2, sch_verma};
use qgroth::verify::{run_suite, SweepConfig, SweepOutcome};
use qgroth::weight::Weight;
use qgroth::wire;
use qgroth::QError;

#[derive(Parser)]
#[command(
    name = "qgroth",
    version,
    about = "Exact computations in the reduced Grothendieck ring of q(n)-modules"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the cancellation core of a weight's value multiset.
    Core {
        /// Weight literal, e.g. "3,1,0,-2" or "3/2,-1/2".
        #[arg(short = 'w', long = "weight")]
        weight: String,
    },
    /// Print a weight's structural profile.
    Classify {
        /// Weight literal.
        #[arg(short = 'w', long = "weight")]
        weight: String,
    },
    /// Multiply two basis classes and print the result.
    Product {
        /// Basis of the factors and the result: "a", "C", or "C-".
        #[arg(long)]
        basis: String,
        /// Ambient rank; must match both weight literals.
        #[arg(short = 'n', long)]
        n: usize,
        /// Left factor's weight literal.
        #[arg(short = 'x', long = "left")]
        x: String,
        /// Right factor's weight literal.
        #[arg(short = 'y', long = "right")]
        y: String,
    },
    /// Print the supercharacter of a highest-weight module, truncated at a depth.
    SchVerma {
        /// Highest weight literal.
        #[arg(short = 'w', long = "weight")]
        weight: String,
        /// Largest total step size of the cone correction.
        #[arg(long)]
        depth: u32,
    },
    /// Print the supercharacter of an irreducible: any typical dominant
    /// weight, or any dominant weight at ambient rank two.
    SchL {
        /// Dominant weight literal.
        #[arg(short = 'w', long = "weight")]
        weight: String,
        /// Ambient rank; must match the weight literal when given.
        #[arg(short = 'n', long)]
        n: Option<usize>,
    },
    /// Apply a rank-drop map to an element read from a file or standard input.
    Ds {
        /// Number of directions to drop.
        #[arg(long)]
        drop: usize,
        /// Element JSON file; standard input when omitted or "-".
        #[arg(value_name = "FILE")]
        input: Option<PathBuf>,
    },
    /// Apply the duality involution to an element read from a file or
    /// standard input (the grading-swap duality for the ξ-graded basis).
    Dual {
        /// Element JSON file; standard input when omitted or "-".
        #[arg(value_name = "FILE")]
        input: Option<PathBuf>,
    },
    /// Run a verification suite and print its report.
    Verify {
        /// One of: oracle, rings, ds, supercharacter.
        #[arg(long)]
        suite: String,
        /// Largest ambient rank enumerated.
        #[arg(long, default_value_t = 3)]
        max_n: usize,
        /// Weight entries range over -max-entry ..= max-entry.
        #[arg(long, default_value_t = 2)]
        max_entry: i64,
        /// Seed for the randomized sweeps.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Worker count; 0 uses the default pool.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
}

/// Weight profile printed by `classify`.
#[derive(Serialize)]
struct Profile {
    nonzero: Vec<String>,
    zero_count: usize,
    #[serde(rename = "rank_F")]
    rank_f: usize,
    parity_class: &'static str,
    dominant: bool,
    typical: bool,
}

/// Full report printed by `verify`.
#[derive(Serialize)]
struct VerifyReport {
    suite: String,
    max_n: usize,
    max_entry: i64,
    seed: u64,
    sweeps: Vec<SweepOutcome>,
    pass: bool,
}

fn parse_weight(s: &str) -> Result<Weight, QError> {
    s.parse()
}

fn read_input(input: &Option<PathBuf>) -> Result<String, QError> {
    match input {
        Some(path) if path.as_os_str() != "-" => std::fs::read_to_string(path)
            .map_err(|e| QError::Parse(format!("cannot read {}: {e}", path.display()))),
        _ => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| QError::Parse(format!("cannot read standard input: {e}")))?;
            Ok(buf)
        }
    }
}

/// What kind of element a JSON document carries, decided by its tag field.
fn element_tag(doc: &str) -> Result<String, QError> {
    let v: serde_json::Value = serde_json::from_str(doc)
        .map_err(|e| QError::Parse(format!("bad element JSON: {e}")))?;
    if let Some(b) = v.get("basis").and_then(|b| b.as_str()) {
        return Ok(b.to_string());
    }
    if v.get("flavor").is_some() {
        return Ok("spoiled".to_string());
    }
    Err(QError::Parse(
        "element JSON needs a \"basis\" or \"flavor\" tag".into(),
    ))
}

fn rational_strings(vals: &[num::BigRational]) -> Vec<String> {
    vals.iter().map(qgroth::quad::rational_str).collect()
}

fn run(cmd: Cmd) -> Result<(String, bool), QError> {
    match cmd {
        Cmd::Core { weight } => {
            let w = parse_weight(&weight)?;
            let core = rational_strings(&w.core());
            Ok((
                serde_json::json!({ "core": core }).to_string(),
                true,
            ))
        }
        Cmd::Classify { weight } => {
            let w = parse_weight(&weight)?;
            let profile = Profile {
                nonzero: rational_strings(&w.nonzero_values_desc()),
                zero_count: w.zero_count(),
                rank_f: w.rank(),
                parity_class: w.parity_class().as_str(),
                dominant: w.is_dominant(),
                typical: w.is_typical(),
            };
            Ok((
                serde_json::to_string(&profile).expect("profile serialization"),
                true,
            ))
        }
        Cmd::Product { basis, n, x, y } => {
            let wx = parse_weight(&x)?;
            let wy = parse_weight(&y)?;
            if wx.n() != n || wy.n() != n {
                return Err(QError::Incompatible(format!(
                    "ambient rank {n} does not match the weight literals ({}, {})",
                    wx.n(),
                    wy.n()
                )));
            }
            let out = match basis.as_str() {
                "a" => {
                    let prod = ABasisElement::from_a(&wx)?.mul(&ABasisElement::from_a(&wy)?)?;
                    wire::a_basis_to_json(&prod)
                }
                "C" => {
                    let prod = qgroth::cartan::GrXiElement::from_c(&wx)
                        .mul(&qgroth::cartan::GrXiElement::from_c(&wy))?;
                    wire::gr_xi_to_json(&prod)
                }
                "C-" => {
                    let prod = qgroth::cartan::GrMinusElement::from_c(&wx)
                        .mul(&qgroth::cartan::GrMinusElement::from_c(&wy))?;
                    wire::gr_minus_to_json(&prod)
                }
                other => {
                    return Err(QError::Parse(format!(
                        "unknown basis {other:?}: expected \"a\", \"C\", or \"C-\""
                    )))
                }
            };
            Ok((out, true))
        }
        Cmd::SchVerma { weight, depth } => {
            let w = parse_weight(&weight)?;
            let x = sch_verma(&w, depth);
            Ok((wire::gr_minus_to_json(&x), true))
        }
        Cmd::SchL { weight, n } => {
            let w = parse_weight(&weight)?;
            if let Some(n) = n {
                if w.n() != n {
                    return Err(QError::Incompatible(format!(
                        "ambient rank {n} does not match the weight literal ({})",
                        w.n()
                    )));
                }
            }
            let x = if w.n() == 2 {
                sch_l_q2(&w)?
            } else {
                qgroth::invariant::sch_typical(&w)?
            };
            Ok((wire::a_basis_to_json(&x), true))
        }
        Cmd::Ds { drop, input } => {
            let doc = read_input(&input)?;
            match element_tag(&doc)?.as_str() {
                "a" => {
                    let x = wire::a_basis_from_json(&doc)?;
                    let idx = qgroth::ds::DsIndex::new(x.n(), drop)?;
                    let image = qgroth::ds::ds_a(&idx, &x)?;
                    Ok((wire::a_basis_to_json(&image), true))
                }
                "spoiled" => {
                    let z = wire::spoiled_from_json(&doc)?;
                    let idx = qgroth::ds::DsIndex::new(z.bound(), drop)?;
                    let image = qgroth::ds::ds_model(&idx, &z)?;
                    Ok((wire::spoiled_to_json(&image), true))
                }
                other => Err(QError::Incompatible(format!(
                    "rank-drop maps act on orbit-basis (\"a\") or value-model elements, not {other:?}"
                ))),
            }
        }
        Cmd::Dual { input } => {
            let doc = read_input(&input)?;
            match element_tag(&doc)?.as_str() {
                "a" => {
                    let x = wire::a_basis_from_json(&doc)?;
                    Ok((wire::a_basis_to_json(&x.dual_star()), true))
                }
                "C-" => {
                    let x = wire::gr_minus_from_json(&doc)?;
                    Ok((wire::gr_minus_to_json(&x.dual_star()), true))
                }
                "C" => {
                    let x = wire::gr_xi_from_json(&doc)?;
                    Ok((wire::gr_xi_to_json(&x.dual_sharp()), true))
                }
                other => Err(QError::Incompatible(format!(
                    "no duality is defined for elements tagged {other:?}"
                ))),
            }
        }
        Cmd::Verify { suite, max_n, max_entry, seed, jobs } => {
            let cfg = SweepConfig { max_n, max_entry, seed, jobs };
            let sweeps = run_suite(&suite, &cfg)?;
            let pass = sweeps.iter().all(|s| s.pass);
            let report = VerifyReport { suite, max_n, max_entry, seed, sweeps, pass };
            Ok((
                serde_json::to_string(&report).expect("report serialization"),
                pass,
            ))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok((out, ok)) => {
            println!("{out}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            println!(
                "{}",
                serde_json::json!({ "error": e.to_string() })
            );
            ExitCode::from(1)
        }
    }
}
