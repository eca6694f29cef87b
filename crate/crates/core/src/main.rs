use std::io::Write;
use std::panic;
use std::path::Path;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use operad_hopf::endo::{adams, convolve, lie_bracket, GradedEndo};
use operad_hopf::free::{quotient_dim, Presentation};
use operad_hopf::hopf::{antipode, coproduct, product, ProductKind, TensorConvention};
use operad_hopf::lincomb::BasisKey;
use operad_hopf::operad::{Ass, Multiplicative};
use operad_hopf::parse::{parse_lincomb, parse_perm};
use operad_hopf::perm::{parse_word, standardize};
use operad_hopf::suites::{run_suite, SuiteOptions, SUITES};
use operad_hopf::{Error, Perm};

#[derive(Parser)]
#[command(
    name = "operad-hopf",
    version,
    about = "Exact computations in the permutation operad and its Hopf structure"
)]
struct Cli {
    /// Emit JSON on standard output.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Permutation kernel.
    #[command(subcommand)]
    Perm(PermCmd),
    /// Products, coproduct and antipode on linear combinations.
    #[command(subcommand)]
    Hopf(HopfCmd),
    /// Convolution of graded endomorphisms (JSON inline or a file path).
    #[command(subcommand)]
    Conv(ConvCmd),
    /// Free operads given by generators and relations.
    #[command(subcommand)]
    Free(FreeCmd),
    /// Run a verification suite and print its report.
    Verify {
        /// One of: operad, cosimplicial, cosimplicial-compat, leibniz, coalgebra,
        /// bialgebra, hopf, convolution, convolution-delta, free.
        suite: String,
        #[arg(long)]
        max_arity: Option<usize>,
        #[arg(long, default_value = "odot")]
        product: ProductKind,
        #[arg(long, default_value = "plain")]
        tensor: TensorConvention,
        #[arg(long, default_value_t = 7)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum PermCmd {
    /// Standardize a word, e.g. `2122`.
    St { word: String },
    /// Substitute `beta` at position `i` of `alpha`.
    Sub {
        alpha: String,
        i: usize,
        beta: String,
    },
    /// Block composition `tau ∘_i sigma`.
    Compose {
        tau: String,
        i: usize,
        sigma: String,
    },
}

#[derive(Subcommand)]
enum HopfCmd {
    Coproduct {
        x: String,
    },
    Product {
        x: String,
        y: String,
        #[arg(long, default_value = "odot")]
        product: ProductKind,
    },
    Antipode {
        x: String,
        #[arg(long, default_value = "odot")]
        product: ProductKind,
    },
}

#[derive(Subcommand)]
enum ConvCmd {
    /// The k-th convolution power of the identity.
    Adams {
        k: usize,
        #[arg(long, default_value_t = 3)]
        arity_bound: usize,
        #[arg(long, default_value = "odot")]
        product: ProductKind,
    },
    Convolve {
        u: String,
        v: String,
        #[arg(long, default_value = "odot")]
        product: ProductKind,
    },
    Bracket {
        u: String,
        v: String,
        #[arg(long, default_value = "odot")]
        product: ProductKind,
    },
}

#[derive(Subcommand)]
enum FreeCmd {
    /// Dimension of the quotient in one arity.
    QuotientDim {
        #[arg(
            long,
            conflicts_with = "relations",
            required_unless_present = "relations"
        )]
        preset: Option<String>,
        /// Presentation file in JSON.
        #[arg(long)]
        relations: Option<String>,
        #[arg(long)]
        arity: usize,
        /// Largest arity saturated; defaults to the arity asked for.
        #[arg(long)]
        cap: Option<usize>,
    },
}

/// What a command produced: text for people, JSON for `--json`, and the
/// exit status.
struct Output {
    text: String,
    json: String,
    code: u8,
}

impl Output {
    fn ok(text: impl Into<String>, json: Value) -> Self {
        Output {
            text: text.into(),
            json: json.to_string(),
            code: 0,
        }
    }
}

fn perm_output(p: Perm) -> Output {
    Output::ok(p.to_string(), p.to_json())
}

fn load_endo(arg: &str) -> Result<GradedEndo<Perm>, Error> {
    let text = if arg.trim_start().starts_with('{') {
        arg.to_string()
    } else {
        std::fs::read_to_string(Path::new(arg)).map_err(|e| Error::Json(format!("{arg}: {e}")))?
    };
    let v: Value = serde_json::from_str(&text)?;
    GradedEndo::from_json(&Ass, &v)
}

fn endo_output(e: GradedEndo<Perm>) -> Output {
    let j = e.to_json();
    Output::ok(serde_json::to_string_pretty(&j).unwrap_or_default(), j)
}

fn run(cmd: Command) -> Result<Output, Error> {
    let m = Multiplicative::ass();
    Ok(match cmd {
        Command::Perm(PermCmd::St { word }) => perm_output(standardize(&parse_word(&word)?)),
        Command::Perm(PermCmd::Sub { alpha, i, beta }) => {
            perm_output(parse_perm(&alpha)?.substitute(i, &parse_perm(&beta)?)?)
        }
        Command::Perm(PermCmd::Compose { tau, i, sigma }) => {
            perm_output(parse_perm(&tau)?.block_compose(i, &parse_perm(&sigma)?)?)
        }
        Command::Hopf(HopfCmd::Coproduct { x }) => {
            let d = coproduct(&m, &parse_lincomb(&x)?)?;
            Output::ok(d.to_string(), d.to_json())
        }
        Command::Hopf(HopfCmd::Product {
            x,
            y,
            product: kind,
        }) => {
            let v = product(&m, kind, &parse_lincomb(&x)?, &parse_lincomb(&y)?)?;
            Output::ok(v.to_string(), v.to_json())
        }
        Command::Hopf(HopfCmd::Antipode { x, product: kind }) => {
            let v = antipode(&m, kind, &parse_lincomb(&x)?)?;
            Output::ok(v.to_string(), v.to_json())
        }
        Command::Conv(ConvCmd::Adams {
            k,
            arity_bound,
            product: kind,
        }) => endo_output(adams(&m, kind, k, arity_bound)?),
        Command::Conv(ConvCmd::Convolve {
            u,
            v,
            product: kind,
        }) => endo_output(convolve(&m, kind, &load_endo(&u)?, &load_endo(&v)?)?),
        Command::Conv(ConvCmd::Bracket {
            u,
            v,
            product: kind,
        }) => endo_output(lie_bracket(&m, kind, &load_endo(&u)?, &load_endo(&v)?)?),
        Command::Free(FreeCmd::QuotientDim {
            preset,
            relations,
            arity,
            cap,
        }) => {
            let p = match (preset, relations) {
                (Some(name), _) => Presentation::preset(&name).ok_or_else(|| Error::Parse {
                    input: name.clone(),
                    position: 1,
                    message: "unknown preset; expected assoc or lie".into(),
                })?,
                (None, Some(path)) => {
                    let text = std::fs::read_to_string(&path)
                        .map_err(|e| Error::Json(format!("{path}: {e}")))?;
                    Presentation::from_json(&serde_json::from_str(&text)?)?
                }
                (None, None) => unreachable!("clap requires one of --preset and --relations"),
            };
            let q = quotient_dim(&p, arity, cap.unwrap_or(arity))?;
            let j = serde_json::to_value(&q)?;
            Output::ok(q.dim.to_string(), j)
        }
        Command::Verify {
            suite,
            max_arity,
            product,
            tensor,
            seed,
        } => {
            if !SUITES.contains(&suite.as_str()) {
                return Err(Error::Parse {
                    input: suite,
                    position: 1,
                    message: format!("unknown suite; expected one of {}", SUITES.join(", ")),
                });
            }
            let opts = SuiteOptions {
                max_arity,
                product,
                tensor,
                seed,
            };
            let r = run_suite(&suite, &opts)?;
            eprintln!(
                "{}: {} ({} cases, {} counterexamples)",
                r.suite,
                if r.passed() { "pass" } else { "fail" },
                r.cases,
                r.counterexamples.len()
            );
            let code = if r.passed() { 0 } else { 1 };
            Output {
                text: r.to_json_string(),
                json: serde_json::to_string(&r)?,
                code,
            }
        }
    })
}

/// Writes a line to standard output; a closed pipe is not an error.
fn emit(line: &str) {
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{line}");
}

fn main() -> ExitCode {
    panic::set_hook(Box::new(|info| eprintln!("internal error: {info}")));
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let json = cli.json;
    let outcome = panic::catch_unwind(|| run(cli.command));
    match outcome {
        Ok(Ok(out)) => {
            if json {
                emit(&out.json);
            } else {
                emit(&out.text);
            }
            ExitCode::from(out.code)
        }
        Ok(Err(e)) => {
            eprintln!("error: {e}");
            if json {
                emit(&json!({ "error": e.to_string() }).to_string());
            }
            ExitCode::from(2)
        }
        Err(_) => {
            if json {
                emit(&json!({ "error": "internal error" }).to_string());
            }
            ExitCode::from(2)
        }
    }
}
