//! Command-line front end. [`run`] is pure apart from the environment
//! variable read by the Groebner limits, so tests can drive it directly.

use std::ffi::OsString;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::charvariety::{goldman_bracket, TorusTrace};
use crate::error::{Error, Result};
use crate::ideals::{sl2, LaurentIdeal};
use crate::knotdata::{apply, preset_function, trefoil_oracle, Chirality, LatticeFunction};
use crate::parse::parse_weight;
use crate::qlaurent::LaurentQ;
use crate::qweyl_algebra::{AlgebraElement, CommPoly};
use crate::rootdata::RootData;
use crate::verify;

pub const SCHEMA: u32 = 1;

#[derive(Parser, Debug)]
#[command(name = "qweyl", version, about = "Exact computations in quantum Weyl algebras and their classical limits")]
struct Cli {
    /// Print a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for the randomized suites.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker threads for sweeps.
    #[arg(long, global = true, value_name = "N")]
    parallel: Option<usize>,
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Poisson bracket of two trace lifts against the Goldman bracket.
    Bracket {
        #[arg(long, default_value = "sl2")]
        algebra: String,
        #[arg(long, value_parser = parse_pair, allow_hyphen_values = true)]
        x: (i64, i64),
        #[arg(long, value_parser = parse_pair, allow_hyphen_values = true)]
        y: (i64, i64),
    },
    /// Run a named verification.
    Verify(VerifyArgs),
    /// Apply an operator to a lattice function at one weight.
    Apply {
        #[arg(long, default_value = "sl2")]
        algebra: String,
        #[arg(long, allow_hyphen_values = true)]
        op: String,
        /// unknot, zero, delta, trefoil-left or trefoil-right
        #[arg(long = "fn")]
        function: String,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        /// Support of `delta`; the origin by default.
        #[arg(long, allow_hyphen_values = true)]
        at: Option<String>,
    },
    /// Groebner basis, membership and radical membership in the sl2 Laurent ring.
    Groebner {
        #[arg(long = "gens", required = true, allow_hyphen_values = true)]
        gens: Vec<String>,
        #[arg(long = "member", allow_hyphen_values = true)]
        member: Vec<String>,
    },
    /// Classical limit of an element.
    Epsilon {
        #[arg(long, default_value = "sl2")]
        algebra: String,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Normal-ordered product of elements.
    Mul {
        #[arg(long, default_value = "sl2")]
        algebra: String,
        #[arg(required = true, num_args = 1.., allow_hyphen_values = true)]
        factors: Vec<String>,
    },
    /// Colored Jones values of the built-in oracles.
    OracleExport {
        #[arg(long)]
        knot: String,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        framing: i64,
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        from: i64,
        #[arg(long, default_value_t = 10, allow_hyphen_values = true)]
        to: i64,
    },
}

#[derive(Args, Debug)]
struct VerifyArgs {
    id: String,
    #[arg(long)]
    algebra: Option<String>,
    #[arg(long)]
    range: Option<i64>,
    #[arg(long)]
    radius: Option<i64>,
}

fn parse_pair(s: &str) -> std::result::Result<(i64, i64), String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    match parts.as_slice() {
        [a, b] => Ok((
            a.parse().map_err(|e| format!("{a}: {e}"))?,
            b.parse().map_err(|e| format!("{b}: {e}"))?,
        )),
        _ => Err(format!("expected `a,b`, got `{s}`")),
    }
}

/// What the binary prints and returns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Report {
    command: &'static str,
    algebra: Option<String>,
    parameters: Value,
    passed: bool,
    details: Value,
    text: String,
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::ResourceExceeded(_) | Error::WeylGroupTooLarge { .. } => 3,
        Error::Internal(_) => 1,
        _ => 2,
    }
}

pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Output { code, stdout: text, stderr: String::new() }
            } else {
                Output { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let json_mode = cli.json;
    let name = command_name(&cli.cmd);
    let result = match cli.parallel {
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build() {
            Ok(pool) => pool.install(|| dispatch(&cli)),
            Err(e) => Err(Error::Internal(e.to_string())),
        },
        None => dispatch(&cli),
    };
    match result {
        Ok(r) => {
            let status = if r.passed { "pass" } else { "fail" };
            let stdout = if json_mode {
                let v = json!({
                    "schema": SCHEMA,
                    "command": r.command,
                    "algebra": r.algebra,
                    "parameters": r.parameters,
                    "status": status,
                    "details": r.details,
                });
                format!("{}\n", serde_json::to_string_pretty(&v).expect("serializable"))
            } else {
                format!("{}status: {status}\n", r.text)
            };
            Output {
                code: if r.passed { 0 } else { 1 },
                stdout,
                stderr: String::new(),
            }
        }
        Err(e) => {
            let code = exit_code(&e);
            let stdout = if json_mode && code == 3 {
                let v = json!({
                    "schema": SCHEMA,
                    "command": name,
                    "status": "exceeded",
                    "details": { "error": e.to_string() },
                });
                format!("{}\n", serde_json::to_string_pretty(&v).expect("serializable"))
            } else {
                String::new()
            };
            Output {
                code,
                stdout,
                stderr: format!("error: {e}\n"),
            }
        }
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Bracket { .. } => "bracket",
        Command::Verify(_) => "verify",
        Command::Apply { .. } => "apply",
        Command::Groebner { .. } => "groebner",
        Command::Epsilon { .. } => "epsilon",
        Command::Mul { .. } => "mul",
        Command::OracleExport { .. } => "oracle-export",
    }
}

fn algebra(name: &str) -> Result<Arc<RootData>> {
    Ok(Arc::new(name.parse::<RootData>()?))
}

fn dispatch(cli: &Cli) -> Result<Report> {
    let command = command_name(&cli.cmd);
    match &cli.cmd {
        Command::Bracket { algebra: a, x, y } => {
            let rd = algebra(a)?;
            let lhs = AlgebraElement::tau_lift(&rd, x.0, x.1).poisson(&AlgebraElement::tau_lift(&rd, y.0, y.1))?;
            let rhs = goldman_bracket(&rd, TorusTrace::new(x.0, x.1), TorusTrace::new(y.0, y.1));
            let equal = lhs == rhs;
            let det = x.0 * y.1 - x.1 * y.0;
            Ok(Report {
                command,
                algebra: Some(rd.name()),
                parameters: json!({ "x": [x.0, x.1], "y": [y.0, y.1] }),
                passed: equal,
                details: json!({
                    "det": det,
                    "poisson": lhs.to_string(),
                    "goldman": rhs.to_string(),
                    "equal": equal,
                }),
                text: format!("det: {det}\npoisson: {lhs}\ngoldman: {rhs}\nequal: {equal}\n"),
            })
        }
        Command::Verify(v) => {
            let opts = verify::Options {
                algebra: v.algebra.clone(),
                range: v.range,
                radius: v.radius,
                seed: cli.seed,
            };
            let out = verify::run(&v.id, &opts)?;
            Ok(Report {
                command,
                algebra: v.algebra.clone(),
                parameters: json!({
                    "id": v.id,
                    "range": v.range,
                    "radius": v.radius,
                    "seed": cli.seed,
                }),
                passed: out.passed,
                text: format!("{}: {}\n", v.id, if out.passed { "ok" } else { "FAILED" })
                    + &if out.passed {
                        String::new()
                    } else {
                        format!("{}\n", serde_json::to_string_pretty(&out.details).expect("serializable"))
                    },
                details: out.details,
            })
        }
        Command::Apply {
            algebra: a,
            op,
            function,
            lambda,
            at,
        } => {
            let rd = algebra(a)?;
            let x = AlgebraElement::parse(op, &rd)?;
            let lam = parse_weight(lambda, &rd)?;
            let f = lattice_function(&rd, function, at.as_deref())?;
            let value = apply(&x, &f, &lam)?;
            Ok(Report {
                command,
                algebra: Some(rd.name()),
                parameters: json!({
                    "op": x.to_string(),
                    "fn": function,
                    "lambda": lam.coords(),
                }),
                passed: true,
                details: json!({ "value": value.to_string() }),
                text: format!("{value}\n"),
            })
        }
        Command::Groebner { gens, member } => {
            let rd = sl2();
            let gens = gens
                .iter()
                .map(|s| CommPoly::parse(s, &rd))
                .collect::<Result<Vec<_>>>()?;
            let queries = member
                .iter()
                .map(|s| CommPoly::parse(s, &rd))
                .collect::<Result<Vec<_>>>()?;
            let ideal = LaurentIdeal::new(&gens)?;
            let report = ideal.report(&queries)?;
            let basis: Vec<String> = ideal.basis().polys().iter().map(ToString::to_string).collect();
            let mut text = format!("basis ({}):\n", basis.len());
            for b in &basis {
                text += &format!("  {b}\n");
            }
            for q in &report.queries {
                text += &format!("{}: member {}, radical member {}\n", q.poly, q.member, q.radical_member);
            }
            let mut details = serde_json::to_value(&report).map_err(|e| Error::Internal(e.to_string()))?;
            details["basis"] = json!(basis);
            Ok(Report {
                command,
                algebra: Some(rd.name()),
                parameters: json!({ "gens": report.generators, "member": member }),
                passed: true,
                details,
                text,
            })
        }
        Command::Epsilon { algebra: a, expr } => {
            let rd = algebra(a)?;
            let x = AlgebraElement::parse(expr, &rd)?;
            let e = x.epsilon();
            Ok(Report {
                command,
                algebra: Some(rd.name()),
                parameters: json!({ "expr": x.to_string() }),
                passed: true,
                details: json!({ "value": e.to_string() }),
                text: format!("{e}\n"),
            })
        }
        Command::Mul { algebra: a, factors } => {
            let rd = algebra(a)?;
            let xs = factors
                .iter()
                .map(|s| AlgebraElement::parse(s, &rd))
                .collect::<Result<Vec<_>>>()?;
            let mut p = AlgebraElement::one(&rd);
            for x in &xs {
                p = p.checked_mul(x)?;
            }
            Ok(Report {
                command,
                algebra: Some(rd.name()),
                parameters: json!({ "factors": xs.iter().map(ToString::to_string).collect::<Vec<_>>() }),
                passed: true,
                details: json!({ "product": p.to_string() }),
                text: format!("{p}\n"),
            })
        }
        Command::OracleExport {
            knot,
            framing,
            from,
            to,
        } => {
            if from > to {
                return Err(Error::InvalidArgument(format!("empty range {from}..{to}")));
            }
            let f = framed_oracle(knot, *framing)?;
            let mut values = Vec::new();
            let mut text = String::new();
            for n in *from..=*to {
                let v = f.at_index(n);
                text += &format!("{n}\t{v}\n");
                values.push(json!([n, v.to_string()]));
            }
            Ok(Report {
                command,
                algebra: Some("sl2".into()),
                parameters: json!({ "knot": knot, "framing": framing, "from": from, "to": to }),
                passed: true,
                details: json!({ "values": values }),
                text,
            })
        }
    }
}

fn lattice_function(rd: &Arc<RootData>, name: &str, at: Option<&str>) -> Result<LatticeFunction> {
    match name {
        "unknot" => LatticeFunction::unknot_j(rd),
        "zero" => Ok(LatticeFunction::zero(rd)),
        "delta" => {
            let mu = match at {
                Some(s) => parse_weight(s, rd)?,
                None => rd.zero_weight(),
            };
            Ok(LatticeFunction::delta(rd, &mu))
        }
        "trefoil-left" | "trefoil-right" => {
            if rd.name() != "sl2" {
                return Err(Error::InvalidArgument(format!("{name} is only available for sl2")));
            }
            Ok(preset_function(name).expect("built-in"))
        }
        _ => Err(Error::InvalidArgument(format!(
            "unknown function `{name}`; expected unknot, zero, delta, trefoil-left or trefoil-right"
        ))),
    }
}

/// Oracle values with the framing factor `q^{framing (n^2 - 1) / 4}`.
fn framed_oracle(knot: &str, framing: i64) -> Result<LatticeFunction> {
    match knot {
        "trefoil-left" | "trefoil-right" => {
            let c: Chirality = knot.trim_start_matches("trefoil-").parse()?;
            Ok(trefoil_oracle(c, framing))
        }
        "unknot" => {
            let base = LatticeFunction::unknot_j(&sl2())?;
            Ok(LatticeFunction::sl2(format!("unknot-f{framing}"), move |n| {
                let e = num_rational::Rational64::new(framing * (n * n - 1), 4);
                let v: LaurentQ = base.at_index(n);
                v.shift(e)
            }))
        }
        _ => Err(Error::InvalidArgument(format!("unknown knot `{knot}`"))),
    }
}
