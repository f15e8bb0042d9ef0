//! Command-line front end: algebra arithmetic, multiplication tables,
//! identity reports, polynomial operations, root finding, left
//! eigenvalues, and the reproduction checklist.

use cdalg::algebra::{solve_left, Algebra};
use cdalg::eigen::{
    assoc_eig2x2, eig_exists, eig_from_t, spectrum_oracle, unit_elements, zero_in_spectrum,
    AssocEigClass, Matrix2,
};
use cdalg::error::CdError;
use cdalg::identities::identity_report;
use cdalg::parse::{
    element_to_json, element_to_string, parse_element, parse_matrix, parse_poly, poly_to_json,
    poly_to_string,
};
use cdalg::roots::{all_roots, factorize, SphereKind};
use cdalg::scalar::{Scalar, ScalarMode};
use clap::{Args, Parser, Subcommand};
use serde_json::json;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "cdalg", about = "Cayley-Dickson algebra toolkit", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct AlgebraArgs {
    /// Doubling parameters, comma separated (e.g. -1,-1,-1 for the octonions)
    #[arg(long, default_value = "-1,-1,-1", allow_hyphen_values = true)]
    gammas: String,
    /// Scalar mode: rational or f64
    #[arg(long, default_value = "rational")]
    scalar: String,
    /// Numeric tolerance (float mode)
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
}

impl AlgebraArgs {
    fn build(&self) -> Result<Algebra, CdError> {
        let mode = match self.scalar.as_str() {
            "rational" => ScalarMode::Rational,
            "f64" => ScalarMode::F64,
            other => {
                return Err(CdError::Invalid(format!(
                    "unknown scalar mode {other:?} (use rational or f64)"
                )))
            }
        };
        let gammas = self
            .gammas
            .split(',')
            .map(|g| Scalar::parse(g, mode))
            .collect::<Result<Vec<_>, _>>()?;
        Algebra::new(gammas, mode, self.tol)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Multiply two elements
    Mul {
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(allow_hyphen_values = true)]
        y: String,
        #[command(flatten)]
        alg: AlgebraArgs,
    },
    /// Conjugate an element
    Conj {
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[command(flatten)]
        alg: AlgebraArgs,
    },
    /// Norm of an element
    Norm {
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[command(flatten)]
        alg: AlgebraArgs,
    },
    /// Trace of an element
    Trace {
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[command(flatten)]
        alg: AlgebraArgs,
    },
    /// Inverse of an element
    Inv {
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[command(flatten)]
        alg: AlgebraArgs,
    },
    /// Solve a*x = b for x
    SolveLeft {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
        #[command(flatten)]
        alg: AlgebraArgs,
    },
    /// Emit the basis multiplication table as CSV
    Table {
        #[command(flatten)]
        alg: AlgebraArgs,
    },
    /// Run the randomized identity suite
    Identities {
        #[arg(long, default_value_t = 500)]
        trials: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[command(flatten)]
        alg: AlgebraArgs,
    },
    /// Polynomial operations
    Poly {
        #[command(subcommand)]
        op: PolyOp,
    },
    /// Find all root spheres of a polynomial (quaternions/octonions, f64)
    Roots {
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        #[command(flatten)]
        alg: AlgebraArgs,
    },
    /// Full linear factorization (quaternions/octonions, f64)
    Factor {
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        #[command(flatten)]
        alg: AlgebraArgs,
    },
    /// Left eigenvalue operations on 2x2 matrices
    Eig {
        #[command(subcommand)]
        op: EigOp,
    },
    /// Replay the worked examples as a pass/fail checklist
    Repro {
        /// Run every case (default when --case is absent)
        #[arg(long)]
        all: bool,
        /// Run a single case by id (e.g. R9)
        #[arg(long)]
        case: Option<String>,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Write the JSON artifact to this path
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum PolyOp {
    /// Evaluate f at an element
    Eval {
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        #[arg(long, allow_hyphen_values = true)]
        at: String,
        #[command(flatten)]
        alg: AlgebraArgs,
    },
    /// Companion polynomial C_f = f * conj(f)
    Companion {
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        #[command(flatten)]
        alg: AlgebraArgs,
    },
    /// Right division by x - lambda
    Divlin {
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[command(flatten)]
        alg: AlgebraArgs,
    },
    /// Division by the central quadratic x^2 - t x + n
    Divquad {
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        #[arg(long, allow_hyphen_values = true)]
        t: String,
        #[arg(long, allow_hyphen_values = true)]
        n: String,
        #[command(flatten)]
        alg: AlgebraArgs,
    },
    /// Formal derivative
    Derive {
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        #[command(flatten)]
        alg: AlgebraArgs,
    },
}

#[derive(Subcommand)]
enum EigOp {
    /// One guaranteed eigenpair
    Exists {
        #[arg(long)]
        matrix: PathBuf,
        #[command(flatten)]
        alg: AlgebraArgs,
    },
    /// Eigenpairs with eigenvector (1, s) * t; sweeps seeded unit elements
    /// when --t is absent
    FromT {
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        t: Option<String>,
        #[arg(long, default_value_t = 256)]
        samples: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[command(flatten)]
        alg: AlgebraArgs,
    },
    /// Zero-in-spectrum criterion with kernel witness
    Zero {
        #[arg(long)]
        matrix: PathBuf,
        #[command(flatten)]
        alg: AlgebraArgs,
    },
    /// Real-representation singularity oracle for a candidate eigenvalue
    Oracle {
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[command(flatten)]
        alg: AlgebraArgs,
    },
    /// Associative (quaternion) spectrum description
    Assoc {
        #[arg(long)]
        matrix: PathBuf,
        #[command(flatten)]
        alg: AlgebraArgs,
    },
}

fn load_matrix(path: &PathBuf, algebra: &Algebra) -> Result<Matrix2, CdError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CdError::Invalid(format!("cannot read {}: {e}", path.display())))?;
    let value: serde_json::Value =
        serde_json::from_str(&text).map_err(|e| CdError::Invalid(format!("bad JSON: {e}")))?;
    parse_matrix(&value, algebra)
}

fn sphere_json(classes: &[cdalg::SphereClass], f: &cdalg::CdPoly) -> serde_json::Value {
    let items: Vec<serde_json::Value> = classes
        .iter()
        .map(|c| {
            let (kind, lambda, residual) = match &c.kind {
                SphereKind::Isolated(l) => (
                    "isolated",
                    Some(element_to_string(l)),
                    Some(f.eval(l).map(|v| v.max_abs()).unwrap_or(f64::NAN)),
                ),
                SphereKind::Spherical => ("spherical", None, Some(0.0)),
                SphereKind::NoRoot => ("none", None, None),
            };
            json!({
                "t": c.t.to_f64(),
                "n": c.n.to_f64(),
                "kind": kind,
                "lambda": lambda,
                "residual": residual,
            })
        })
        .collect();
    serde_json::Value::Array(items)
}

fn run() -> Result<ExitCode, CdError> {
    let cli = Cli::parse();
    match cli.command {
        Command::Mul { x, y, alg } => {
            let a = alg.build()?;
            let r = parse_element(&x, &a)?.checked_mul(&parse_element(&y, &a)?)?;
            println!("{}", element_to_string(&r));
        }
        Command::Conj { x, alg } => {
            let a = alg.build()?;
            println!("{}", element_to_string(&parse_element(&x, &a)?.conj()));
        }
        Command::Norm { x, alg } => {
            let a = alg.build()?;
            println!("{}", parse_element(&x, &a)?.norm());
        }
        Command::Trace { x, alg } => {
            let a = alg.build()?;
            println!("{}", parse_element(&x, &a)?.trace());
        }
        Command::Inv { x, alg } => {
            let a = alg.build()?;
            println!("{}", element_to_string(&parse_element(&x, &a)?.inverse()?));
        }
        Command::SolveLeft { a, b, alg } => {
            let al = alg.build()?;
            let lhs = parse_element(&a, &al)?;
            let rhs = parse_element(&b, &al)?;
            match solve_left(&lhs, &rhs)? {
                Some(x) => println!("{}", element_to_string(&x)),
                None => println!("no solution"),
            }
        }
        Command::Table { alg } => {
            let a = alg.build()?;
            println!("i,j,product");
            for i in 0..a.dim() {
                for j in 0..a.dim() {
                    let p = a.basis(i)?.mul(&a.basis(j)?);
                    let nonzero: Vec<usize> = (0..a.dim()).filter(|&k| !p.coord(k).is_zero()).collect();
                    let cell = if nonzero.len() == 1 {
                        let k = nonzero[0];
                        let c = p.coord(k);
                        if c == &Scalar::one(a.mode()) {
                            format!("{k}")
                        } else if c == &(-&Scalar::one(a.mode())) {
                            format!("-{k}")
                        } else {
                            element_to_string(&p)
                        }
                    } else {
                        element_to_string(&p)
                    };
                    println!("{i},{j},{cell}");
                }
            }
        }
        Command::Identities { trials, seed, alg } => {
            let a = alg.build()?;
            let report = identity_report(&a, trials, seed)?;
            let items: Vec<serde_json::Value> = report
                .results
                .iter()
                .map(|r| {
                    json!({
                        "identity": r.name,
                        "trials": r.trials,
                        "failures": r.failures,
                        "witness": r.witness,
                    })
                })
                .collect();
            println!(
                "{}",
                serde_json::to_string_pretty(&json!({
                    "dimension": report.dim,
                    "all_passed": report.all_passed(),
                    "results": items,
                }))
                .unwrap()
            );
        }
        Command::Poly { op } => match op {
            PolyOp::Eval { poly, at, alg } => {
                let a = alg.build()?;
                let f = parse_poly(&poly, &a)?;
                let v = f.eval(&parse_element(&at, &a)?)?;
                println!("{}", element_to_string(&v));
            }
            PolyOp::Companion { poly, alg } => {
                let a = alg.build()?;
                let c = parse_poly(&poly, &a)?.companion()?;
                let parts: Vec<String> = c.coeffs().iter().map(|s| s.to_string()).collect();
                println!("{}", parts.join("; "));
            }
            PolyOp::Divlin { poly, lambda, alg } => {
                let a = alg.build()?;
                let f = parse_poly(&poly, &a)?;
                let (g, r) = f.right_divide_linear(&parse_element(&lambda, &a)?)?;
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "quotient": poly_to_json(&g),
                        "remainder": element_to_json(&r),
                        "quotient_text": poly_to_string(&g),
                        "remainder_text": element_to_string(&r),
                    }))
                    .unwrap()
                );
            }
            PolyOp::Divquad { poly, t, n, alg } => {
                let a = alg.build()?;
                let f = parse_poly(&poly, &a)?;
                let ts = Scalar::parse(&t, a.mode())?;
                let ns = Scalar::parse(&n, a.mode())?;
                let (q, ra, rb) = f.divide_central_quadratic(&ts, &ns);
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "quotient": poly_to_json(&q),
                        "a": element_to_json(&ra),
                        "b": element_to_json(&rb),
                    }))
                    .unwrap()
                );
            }
            PolyOp::Derive { poly, alg } => {
                let a = alg.build()?;
                println!("{}", poly_to_string(&parse_poly(&poly, &a)?.derivative()));
            }
        },
        Command::Roots { poly, alg } => {
            let a = alg.build()?;
            let f = parse_poly(&poly, &a)?;
            let classes = all_roots(&f)?;
            println!("{}", serde_json::to_string_pretty(&sphere_json(&classes, &f)).unwrap());
        }
        Command::Factor { poly, alg } => {
            let a = alg.build()?;
            let f = parse_poly(&poly, &a)?;
            let fac = factorize(&f)?;
            let residual = fac
                .reconstruct()
                .sub(&f)
                .coeffs()
                .iter()
                .map(|c| c.max_abs())
                .fold(0.0_f64, f64::max);
            println!(
                "{}",
                serde_json::to_string_pretty(&json!({
                    "leading": element_to_string(&fac.leading),
                    "lambdas": fac.lambdas.iter().map(element_to_string).collect::<Vec<_>>(),
                    "residual": residual,
                }))
                .unwrap()
            );
        }
        Command::Eig { op } => match op {
            EigOp::Exists { matrix, alg } => {
                let a = alg.build()?;
                let b = load_matrix(&matrix, &a)?;
                let pair = eig_exists(&b)?;
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "lambda": element_to_string(&pair.lambda),
                        "v": [element_to_string(&pair.v.0), element_to_string(&pair.v.1)],
                        "oracle": spectrum_oracle(&b, &pair.lambda),
                    }))
                    .unwrap()
                );
            }
            EigOp::FromT {
                matrix,
                t,
                samples,
                seed,
                alg,
            } => {
                let a = alg.build()?;
                let b = load_matrix(&matrix, &a)?;
                let ts = match t {
                    Some(text) => vec![parse_element(&text, &a)?],
                    None => unit_elements(&a, samples, seed),
                };
                let mut out = Vec::new();
                for tv in &ts {
                    for pair in eig_from_t(&b, tv)? {
                        out.push(json!({
                            "t": element_to_string(tv),
                            "lambda": element_to_string(&pair.lambda),
                            "v": [element_to_string(&pair.v.0), element_to_string(&pair.v.1)],
                        }));
                    }
                }
                println!("{}", serde_json::to_string_pretty(&serde_json::Value::Array(out)).unwrap());
            }
            EigOp::Zero { matrix, alg } => {
                let a = alg.build()?;
                let b = load_matrix(&matrix, &a)?;
                let (member, witness) = zero_in_spectrum(&b)?;
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "zero_in_spectrum": member,
                        "witness": witness.map(|t| element_to_string(&t)),
                    }))
                    .unwrap()
                );
            }
            EigOp::Oracle { matrix, lambda, alg } => {
                let a = alg.build()?;
                let b = load_matrix(&matrix, &a)?;
                let l = parse_element(&lambda, &a)?;
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "lambda": element_to_string(&l),
                        "in_spectrum": spectrum_oracle(&b, &l),
                    }))
                    .unwrap()
                );
            }
            EigOp::Assoc { matrix, alg } => {
                let a = alg.build()?;
                let b = load_matrix(&matrix, &a)?;
                let classes = assoc_eig2x2(&b)?;
                let items: Vec<serde_json::Value> = classes
                    .iter()
                    .map(|c| match c {
                        AssocEigClass::Single(l) => json!({
                            "kind": "single",
                            "lambda": element_to_string(l),
                        }),
                        AssocEigClass::Sphere { t, n, samples } => json!({
                            "kind": "sphere",
                            "t": t.to_f64(),
                            "n": n.to_f64(),
                            "samples": samples.iter().map(element_to_string).collect::<Vec<_>>(),
                        }),
                    })
                    .collect();
                println!("{}", serde_json::to_string_pretty(&serde_json::Value::Array(items)).unwrap());
            }
        },
        Command::Repro {
            all: _,
            case,
            seed,
            json: json_path,
        } => {
            let report = match case {
                Some(id) => cdalg::repro::ReproReport {
                    seed,
                    cases: vec![cdalg::repro::run_case(&id, seed)?],
                },
                None => cdalg::repro::run_all(seed)?,
            };
            for c in &report.cases {
                println!(
                    "{} [{}] {} {}",
                    c.id,
                    c.section,
                    if c.pass { "PASS" } else { "FAIL" },
                    c.detail
                );
            }
            if let Some(path) = json_path {
                std::fs::write(&path, serde_json::to_string_pretty(&report.to_json()).unwrap())
                    .map_err(|e| CdError::Invalid(format!("cannot write {}: {e}", path.display())))?;
            }
            return Ok(if report.all_pass() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            });
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
