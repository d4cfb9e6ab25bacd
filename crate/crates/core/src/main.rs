use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use wolfes_core::diffop2::expr::parse_poly2;
use wolfes_core::diffop2::{check_flag_preservation, json, latex, text, DiffOp, Poly2};
use wolfes_core::envelope::{decompose, enumerate_env_basis, DEFAULT_MAX_BASIS};
use wolfes_core::exactcoeff::{parse_rational, Rational};
use wolfes_core::modelbank::{resolve, MODEL_NAMES};
use wolfes_core::repspace::{basis, eigenpolynomials, matrix, multiset, spectrum};
use wolfes_core::verifysuite::{reports_json, reports_table, run_group, Orientation, GROUPS};
use wolfes_core::Error;

#[derive(Parser)]
#[command(name = "wolfes", version, about = "Exact algebra of the G2/I6 and A2 rational models")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Latex,
    Csv,
}

#[derive(Args, Clone, Default)]
struct Params {
    #[arg(long, value_parser = rational)]
    lambda: Option<Rational>,
    #[arg(long, value_parser = rational)]
    nu: Option<Rational>,
    #[arg(long, value_parser = rational)]
    omega: Option<Rational>,
    /// Mark `n` used by `gen.*` names.
    #[arg(long, value_parser = rational)]
    mark: Option<Rational>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print an operator (model name or `gen.<family>.<s>[.<i>]`).
    Show {
        name: String,
        #[command(flatten)]
        params: Params,
    },
    /// Apply an operator to a polynomial written in its variables.
    Apply {
        name: String,
        poly: String,
        #[command(flatten)]
        params: Params,
    },
    /// Commutator `[a, b]`.
    Commute {
        a: String,
        b: String,
        #[command(flatten)]
        params: Params,
    },
    /// Exact matrix on `P^(s)_n`; all three parameters are required.
    Matrix {
        name: String,
        #[arg(long)]
        s: u32,
        #[arg(long)]
        n: u32,
        #[command(flatten)]
        params: Params,
    },
    /// Triangular spectrum on `P^(s)_n`.
    Spectrum {
        name: String,
        #[arg(long)]
        s: u32,
        #[arg(long)]
        n: u32,
        /// Also print eigenpolynomials.
        #[arg(long)]
        vectors: bool,
        #[command(flatten)]
        params: Params,
    },
    /// Whether the operator preserves `P^(s)_n` for all `n <= n`.
    Flagcheck {
        name: String,
        #[arg(long)]
        s: u32,
        #[arg(long)]
        n: u32,
        #[command(flatten)]
        params: Params,
    },
    /// Run a group of relation checks.
    Verify {
        #[arg(value_parser = clap::builder::PossibleValuesParser::new(GROUPS))]
        group: String,
        #[arg(long, default_value = "reversed", value_parser = ["forward", "reversed"])]
        orientation: String,
        #[arg(long)]
        timings: bool,
    },
    /// Express an operator in products of `g^(s)` generators at mark 0.
    Decompose {
        name: String,
        #[arg(long)]
        s: u32,
        #[arg(long, default_value_t = 2)]
        degree: u32,
        #[arg(long)]
        include_raising: bool,
        #[arg(long, default_value_t = DEFAULT_MAX_BASIS)]
        max_basis: usize,
        #[command(flatten)]
        params: Params,
    },
    /// Serialize one or more operators (`all` for every model).
    Export {
        names: Vec<String>,
        #[command(flatten)]
        params: Params,
    },
}

fn rational(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

enum Failure {
    Usage(String),
    Runtime(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::BadRational(_)
            | Error::BadParamPoly(_)
            | Error::Parse { .. }
            | Error::UnknownModel(_)
            | Error::BadGenerator(_)
            | Error::InvalidArgument(_) => Failure::Usage(e.to_string()),
            _ => Failure::Runtime(e.to_string()),
        }
    }
}

struct Output {
    body: String,
    ok: bool,
}

fn load(name: &str, p: &Params) -> Result<DiffOp, Error> {
    let zero = Rational::from_integer(0.into());
    let op = resolve(name, p.mark.as_ref().unwrap_or(&zero))?;
    Ok(op.substitute(p.lambda.as_ref(), p.nu.as_ref(), p.omega.as_ref()))
}

fn all_params(p: &Params) -> Result<(Rational, Rational, Rational), Error> {
    let need = |v: &Option<Rational>, flag: &str| {
        v.clone().ok_or_else(|| Error::InvalidArgument(format!("--{flag} is required")))
    };
    Ok((need(&p.lambda, "lambda")?, need(&p.nu, "nu")?, need(&p.omega, "omega")?))
}

fn format_op(d: &DiffOp, f: Format) -> Result<String, Error> {
    Ok(match f {
        Format::Text => text::serialize(d) + "\n",
        Format::Json => json::to_json_string(d) + "\n",
        Format::Latex => latex::to_latex(d) + "\n",
        Format::Csv => return Err(Error::InvalidArgument("csv applies to matrices only".into())),
    })
}

fn format_poly(p: &Poly2, d: &DiffOp, f: Format) -> Result<String, Error> {
    Ok(match f {
        Format::Text => text::serialize_poly2(p) + "\n",
        Format::Json => serde_json::to_string(&json::poly_json(p)).expect("poly serializes") + "\n",
        Format::Latex => latex::poly2_latex(p, d.names()) + "\n",
        Format::Csv => return Err(Error::InvalidArgument("csv applies to matrices only".into())),
    })
}

fn pretty(v: &serde_json::Value) -> String {
    serde_json::to_string_pretty(v).expect("json serializes") + "\n"
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    let fmt = cli.format;
    let done = |body: String| Ok(Output { body, ok: true });
    match &cli.cmd {
        Cmd::Show { name, params } => done(format_op(&load(name, params)?, fmt)?),
        Cmd::Apply { name, poly, params } => {
            let d = load(name, params)?;
            let p = parse_poly2(poly, d.names())?.substitute(params.lambda.as_ref(), params.nu.as_ref(), params.omega.as_ref());
            done(format_poly(&d.apply(&p), &d, fmt)?)
        }
        Cmd::Commute { a, b, params } => {
            let da = load(a, params)?;
            done(format_op(&da.commutator(&load(b, params)?), fmt)?)
        }
        Cmd::Matrix { name, s, n, params } => {
            let d = load(name, params)?;
            let (l, nu, w) = all_params(params)?;
            let m = matrix(&d, &basis(*s, *n)?, &l, &nu, &w)?;
            done(match fmt {
                Format::Csv | Format::Text => m.to_csv(),
                Format::Json => pretty(&m.to_json()),
                Format::Latex => return Err(Failure::Usage("latex is not available for matrices".into())),
            })
        }
        Cmd::Spectrum { name, s, n, vectors, params } => {
            let d = load(name, params)?;
            let (l, nu, w) = all_params(params)?;
            let m = matrix(&d, &basis(*s, *n)?, &l, &nu, &w)?;
            let diag = spectrum(&m)?;
            let eig = if *vectors { Some(eigenpolynomials(&m)?) } else { None };
            done(match fmt {
                Format::Json => {
                    let mut v = serde_json::json!({
                        "diagonal": diag.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
                        "multiset": multiset(&diag).iter().map(|(x, k)| serde_json::json!([x.to_string(), k])).collect::<Vec<_>>(),
                    });
                    if let Some(eig) = &eig {
                        v["eigenpolynomials"] = eig
                            .iter()
                            .map(|(x, p)| serde_json::json!({"value": x.to_string(), "poly": text::serialize_poly2(p)}))
                            .collect();
                    }
                    pretty(&v)
                }
                Format::Text | Format::Csv => {
                    let mut out = String::new();
                    for (x, k) in multiset(&diag) {
                        out.push_str(&format!("{x} x{k}\n"));
                    }
                    for (x, p) in eig.iter().flatten() {
                        out.push_str(&format!("{x}: {}\n", text::serialize_poly2(p)));
                    }
                    out
                }
                Format::Latex => return Err(Failure::Usage("latex is not available for spectra".into())),
            })
        }
        Cmd::Flagcheck { name, s, n, params } => {
            let r = check_flag_preservation(&load(name, params)?, *s, *n)?;
            let body = match fmt {
                Format::Json => pretty(&serde_json::to_value(&r).expect("report serializes")),
                _ => match r.witness {
                    None => format!("preserves P^({s})_n for n <= {n}\n"),
                    Some(((p, q), (op, oq))) => format!(
                        "does not preserve P^({s}): u^{p} v^{q} -> u^{op} v^{oq}\n"
                    ),
                },
            };
            Ok(Output { body, ok: r.preserved })
        }
        Cmd::Verify { group, orientation, timings } => {
            let o: Orientation = orientation.parse()?;
            let reports = run_group(group, o)?;
            let body = match fmt {
                Format::Json => reports_json(&reports, *timings) + "\n",
                _ => reports_table(&reports, *timings),
            };
            Ok(Output { body, ok: reports.iter().all(|r| r.ok) })
        }
        Cmd::Decompose { name, s, degree, include_raising, max_basis, params } => {
            let d = load(name, params)?;
            let b = enumerate_env_basis(*s, Rational::from_integer(0.into()), *degree, !include_raising)?;
            let dec = decompose(name, &d, &b, *max_basis)?;
            let body = match fmt {
                Format::Json => pretty(&dec.to_json()),
                _ => dec.to_text(),
            };
            Ok(Output { body, ok: dec.is_exact() })
        }
        Cmd::Export { names, params } => {
            let names: Vec<String> = if names.iter().any(|n| n == "all") || names.is_empty() {
                MODEL_NAMES.iter().map(|s| s.to_string()).collect()
            } else {
                names.clone()
            };
            let mut ops = Vec::new();
            for n in &names {
                ops.push((n.clone(), load(n, params)?));
            }
            done(match fmt {
                Format::Json => {
                    let map: serde_json::Map<String, serde_json::Value> = ops
                        .iter()
                        .map(|(n, d)| (n.clone(), serde_json::to_value(json::to_json(d)).expect("op serializes")))
                        .collect();
                    pretty(&serde_json::Value::Object(map))
                }
                _ => {
                    let mut out = String::new();
                    for (n, d) in &ops {
                        out.push_str(&format!("# {n}\n{}", format_op(d, fmt)?));
                    }
                    out
                }
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let written = match &cli.out {
                Some(path) => fs::write(path, &out.body),
                None => io::stdout().write_all(out.body.as_bytes()),
            };
            if let Err(e) = written {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Runtime(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
