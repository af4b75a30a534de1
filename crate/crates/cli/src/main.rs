//! Command-line front end. Every command prints one JSON document on stdout.

use std::path::Path;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use legendrian::exact::{parse_rat, parse_ratfunc, RatFunc};
use legendrian::legcurve::{self, CurveSpec};
use legendrian::liealg::{tanaka_prolong, FiltLieAlg};
use legendrian::linalg::MatF;
use legendrian::models235::{
    build_model, cauchy_char_check, cross_equivalences, growth_vector, lift_model, model_row,
    ModelName,
};
use legendrian::ode4::{
    general_transform_ode, legendrian_invariants, numeric_lf_reduce, q0_family, Ode4,
};
use legendrian::verify::{run_suite, Suite};
use legendrian::Error;

const SCHEMA: &str = "1";

const EXPR_HELP: &str = "\
Rational functions are written inline in a small infix grammar: rational
numbers (3, -2/5), variables by name (t, c, a, r, ...), the operators
+ - * / ^ with non-negative integer exponents, and parentheses. Example: \"(t+1)/(t^2+c)^3\".
Wherever JSON is expected, a path to a file holding the JSON also works.";

#[derive(Parser)]
#[command(name = "legendrian", version, about = "Exact invariants of homogeneous Legendrian curves and related Lie algebra computations", after_help = EXPR_HELP)]
struct Cli {
    /// Indent the JSON output.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Relative and absolute invariants of u'''' + q0 u = 0.
    Invariants {
        /// q0 as an expression in t, a rational-function JSON object, or
        /// the shorthand "c2=...,c0=..." for the constant-coefficient family.
        #[arg(long)]
        q0: String,
    },
    /// Classify the curve exp(tA)z.
    Classify(SpecArgs),
    /// The compatible symplectic form of exp(tA)z, normalized at (1,4).
    Sigma(SpecArgs),
    /// Dimension of the symmetry algebra of exp(tA)z.
    AutDim(SpecArgs),
    /// Whether the labels a and b give projectively equivalent curves.
    Equiv {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
    },
    /// Tanaka prolongation of a depth-two graded algebra.
    Prolong {
        /// Algebra JSON: {dim, names, degrees, brackets: [{i, j, coeffs}]}.
        #[arg(long)]
        algebra: String,
        /// JSON array of square matrices, each a degree-0 derivation.
        #[arg(long)]
        g0: String,
        /// Maximum number of positive degrees to compute.
        #[arg(long, default_value_t = 5)]
        max: usize,
    },
    /// Table rows of the multiply-transitive (2,3,5) models.
    Models {
        /// N7c, N6 or D6a; all three when omitted.
        #[arg(long)]
        name: Option<String>,
        /// Value for the model parameter; symbolic when omitted.
        #[arg(long, allow_hyphen_values = true)]
        param: Option<String>,
        /// Run the Jacobi, growth, filtration, Cauchy and cross checks.
        #[arg(long)]
        verify_all: bool,
    },
    /// Class of the curve induced by rolling with ratio rho.
    Rolling {
        #[arg(long, allow_hyphen_values = true)]
        rho: String,
    },
    /// Numeric check of the Laguerre-Forsyth reduction of u'''' + c2 u'' + c0 u = 0.
    LfCheck {
        #[arg(long, allow_hyphen_values = true)]
        c2: f64,
        #[arg(long, allow_hyphen_values = true)]
        c0: f64,
        /// Sample points, comma separated.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, default_values_t = [-0.3, -0.1, 0.0, 0.15, 0.35])]
        at: Vec<f64>,
        /// Take the other square-root branch.
        #[arg(long)]
        flip_branch: bool,
    },
    /// Transform an ODE by (t, u) -> (lambda(t), mu(t) u).
    TransformOde {
        /// JSON {"p": [p0, p1, p2, p3]}.
        #[arg(long)]
        ode: String,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
    },
    /// Run the invariant suites.
    Verify {
        /// A suite name or "all".
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 2024)]
        seed: u64,
    },
}

#[derive(Args)]
struct SpecArgs {
    /// JSON {"A": [[...]], "z": [...]}; alternative to --A/--z.
    #[arg(long, conflicts_with_all = ["a", "z"])]
    spec: Option<String>,
    /// 4x4 matrix as a JSON array of rows.
    #[arg(long = "A", id = "a", requires = "z")]
    a: Option<String>,
    /// Base point as a JSON array.
    #[arg(long, requires = "a")]
    z: Option<String>,
}

enum Failure {
    Usage(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

type Outcome = Result<Value, Failure>;

#[derive(Serialize, Deserialize, Debug, PartialEq)]
struct Envelope<T> {
    schema: String,
    #[serde(flatten)]
    body: T,
}

fn usage(e: impl std::fmt::Display) -> Failure {
    Failure::Usage(e.to_string())
}

fn to_value<T: Serialize>(body: T) -> Outcome {
    serde_json::to_value(Envelope {
        schema: SCHEMA.into(),
        body,
    })
    .map_err(usage)
}

/// Inline JSON, or the contents of the named file.
fn read_json<T: for<'de> Deserialize<'de>>(arg: &str) -> Result<T, Failure> {
    let text = if Path::new(arg).is_file() {
        std::fs::read_to_string(arg).map_err(usage)?
    } else {
        arg.to_string()
    };
    serde_json::from_str(&text).map_err(|e| usage(format!("malformed JSON: {e}")))
}

fn expr(s: &str) -> Result<RatFunc, Failure> {
    parse_ratfunc(s).map_err(usage)
}

fn spec_of(args: &SpecArgs) -> Result<CurveSpec, Failure> {
    match (&args.spec, &args.a, &args.z) {
        (Some(s), _, _) => read_json(s),
        (None, Some(a), Some(z)) => Ok(CurveSpec::new(read_json::<MatF>(a)?, read_json(z)?)),
        _ => Err(usage("either --spec or both --A and --z are required")),
    }
}

fn q0_arg(s: &str) -> Result<RatFunc, Failure> {
    let s = s.trim();
    if s.starts_with('{') {
        return read_json(s);
    }
    if s.contains('=') {
        let (mut c2, mut c0) = (None, None);
        for part in s.split(',') {
            let (k, v) = part
                .split_once('=')
                .ok_or_else(|| usage(format!("expected key=value, got {part:?}")))?;
            match k.trim() {
                "c2" => c2 = Some(expr(v)?),
                "c0" => c0 = Some(expr(v)?),
                other => return Err(usage(format!("unknown key {other:?}"))),
            }
        }
        return match (c2, c0) {
            (Some(c2), Some(c0)) => Ok(q0_family(&c2, &c0)),
            _ => Err(usage("shorthand needs both c2 and c0")),
        };
    }
    expr(s)
}

#[derive(Serialize, Deserialize)]
struct SigmaOut {
    sigma: MatF,
}

#[derive(Serialize, Deserialize)]
struct AutDimOut {
    aut_dim: usize,
}

#[derive(Serialize, Deserialize)]
struct EquivOut {
    equivalent: bool,
}

#[derive(Serialize, Deserialize)]
struct ProlongOut {
    dims: Vec<usize>,
    total: usize,
    /// Basis elements of each positive degree as value tables on the
    /// basis of the negative part.
    bases: Vec<Vec<Vec<Vec<String>>>>,
}

#[derive(Serialize, Deserialize)]
struct RowsOut<T> {
    rows: Vec<T>,
}

#[derive(Serialize, Deserialize)]
struct ModelCheck {
    name: ModelName,
    jacobi: bool,
    growth: [usize; 3],
    quotient_dims: Vec<usize>,
    cauchy: legendrian::models235::CauchyReport,
    passed: bool,
}

#[derive(Serialize, Deserialize)]
struct VerifyAllOut {
    models: Vec<ModelCheck>,
    cross: legendrian::models235::CrossReport,
    passed: bool,
}

#[derive(Serialize, Deserialize)]
struct LfOut {
    residual: legendrian::ode4::LfResidual,
    tolerance: f64,
    passed: bool,
}

#[derive(Serialize, Deserialize)]
struct VerifyOut {
    reports: Vec<legendrian::verify::SuiteReport>,
    passed: bool,
}

fn run(cmd: Command) -> Outcome {
    match cmd {
        Command::Invariants { q0 } => to_value(legendrian_invariants(&q0_arg(&q0)?)),
        Command::Classify(s) => to_value(legcurve::classify(&spec_of(&s)?)?),
        Command::Sigma(s) => to_value(SigmaOut {
            sigma: legcurve::compatible_sigma(&spec_of(&s)?)?,
        }),
        Command::AutDim(s) => to_value(AutDimOut {
            aut_dim: legcurve::aut_dimension(&spec_of(&s)?)?,
        }),
        Command::Equiv { a, b } => {
            let a = parse_rat(&a).map_err(usage)?;
            let b = parse_rat(&b).map_err(usage)?;
            to_value(EquivOut {
                equivalent: legcurve::equivalent(&a, &b)?,
            })
        }
        Command::Prolong { algebra, g0, max } => {
            let m: FiltLieAlg = read_json(&algebra)?;
            let g0: Vec<MatF> = read_json(&g0)?;
            let res = tanaka_prolong(&m, &g0, max)?;
            let bases = res
                .bases
                .iter()
                .map(|level| {
                    level
                        .iter()
                        .map(|table| {
                            table
                                .iter()
                                .map(|col| col.iter().map(|x| x.to_string()).collect())
                                .collect()
                        })
                        .collect()
                })
                .collect();
            to_value(ProlongOut {
                dims: res.dims,
                total: res.total,
                bases,
            })
        }
        Command::Models {
            name,
            param,
            verify_all,
        } => {
            let names = match &name {
                Some(n) => vec![n.parse::<ModelName>().map_err(usage)?],
                None => ModelName::ALL.to_vec(),
            };
            let param = param.as_deref().map(expr).transpose()?;
            if verify_all {
                let mut models = Vec::new();
                for n in names {
                    let p = if n.param_name().is_some() { param.as_ref() } else { None };
                    let m = build_model(n, p)?;
                    let lm = lift_model(&m)?;
                    let cauchy = cauchy_char_check(&lm);
                    let growth = growth_vector(&m);
                    let quotient_dims = lm.quotient_dims();
                    let passed = growth == [2, 3, 5]
                        && quotient_dims == [2, 3, 4, 5, cauchy.dim_quotient]
                        && cauchy.passed();
                    models.push(ModelCheck {
                        name: n,
                        jacobi: true,
                        growth,
                        quotient_dims,
                        cauchy,
                        passed,
                    });
                }
                let cross = cross_equivalences()?;
                let passed = cross.all_match && models.iter().all(|m| m.passed);
                return to_value(VerifyAllOut {
                    models,
                    cross,
                    passed,
                });
            }
            let mut rows = Vec::new();
            for n in &names {
                let p = match (n.param_name(), &param, &name) {
                    (None, Some(_), Some(_)) => {
                        return Err(Failure::Domain(Error::Invalid(format!(
                            "model {n} has no parameter"
                        ))))
                    }
                    (None, _, _) => None,
                    (Some(_), p, _) => p.as_ref(),
                };
                rows.push(model_row(*n, p)?);
            }
            if name.is_some() {
                to_value(rows.pop().expect("one row"))
            } else {
                to_value(RowsOut { rows })
            }
        }
        Command::Rolling { rho } => {
            to_value(legcurve::rolling_class(&parse_rat(&rho).map_err(usage)?)?)
        }
        Command::LfCheck {
            c2,
            c0,
            at,
            flip_branch,
        } => {
            let residual = numeric_lf_reduce(
                Complex64::new(c2, 0.0),
                Complex64::new(c0, 0.0),
                &at,
                flip_branch,
            )?;
            let tolerance = 1e-9;
            to_value(LfOut {
                passed: residual.max() < tolerance,
                residual,
                tolerance,
            })
        }
        Command::TransformOde { ode, lambda, mu } => {
            let e: Ode4 = read_json(&ode)?;
            to_value(general_transform_ode(&e, &expr(&lambda)?, &expr(&mu)?)?)
        }
        Command::Verify { suite, seed } => {
            let suites = if suite == "all" {
                Suite::ALL.to_vec()
            } else {
                vec![suite.parse::<Suite>().map_err(usage)?]
            };
            let reports: Vec<_> = suites.into_iter().map(|s| run_suite(s, seed)).collect();
            let passed = reports.iter().all(|r| r.passed());
            to_value(VerifyOut { reports, passed })
        }
    }
}

/// Variant name of a domain error, used as its machine-readable kind.
fn error_kind(e: &Error) -> String {
    let dbg = format!("{e:?}");
    dbg.split(|c: char| !c.is_alphanumeric())
        .next()
        .unwrap_or_default()
        .to_string()
}

fn emit(v: &Value, pretty: bool) -> String {
    if pretty {
        serde_json::to_string_pretty(v).expect("serializable")
    } else {
        serde_json::to_string(v).expect("serializable")
    }
}

/// A closed pipe is not an error worth reporting.
fn write_line(mut w: impl std::io::Write, s: &str) {
    let _ = writeln!(w, "{s}");
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let pretty = cli.pretty;
    let (out, fail_code) = match run(cli.cmd) {
        Ok(v) => {
            let failed = v.get("passed") == Some(&Value::Bool(false));
            write_line(std::io::stdout(), &emit(&v, pretty));
            return ExitCode::from(if failed { 1 } else { 0 });
        }
        Err(Failure::Usage(msg)) => (
            serde_json::json!({"schema": SCHEMA, "error": {"kind": "Usage", "message": msg}}),
            2,
        ),
        Err(Failure::Domain(e)) => (
            serde_json::json!({
                "schema": SCHEMA,
                "error": {"kind": error_kind(&e), "message": e.to_string()}
            }),
            1,
        ),
    };
    write_line(std::io::stderr(), &emit(&out, pretty));
    ExitCode::from(fail_code)
}
