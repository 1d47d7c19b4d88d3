//! Command-line front end. All output goes to stdout, JSON unless `--plain`.
//!
//! Exit codes: 0 success, 1 violations or findings, 2 usage errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::braid3::{cone_certificate_b3, dehornoy_reduce, is_d_positive, sigma_to_ab, SigmaWord};
use crate::cone::{decide_sign, Verdict};
use crate::context::GroupContext;
use crate::error::Error;
use crate::hecke::{b_power_of, oracle_equal, oracle_report};
use crate::lab::{self, CayleyFormat, SuiteReport};
use crate::normal_form::to_normal_form;
use crate::orderings::{self, convergence_experiment, OrderingSpec};
use crate::word::Word;

#[derive(Parser, Debug)]
#[command(
    name = "gamman",
    version,
    about = "Word problem and orderings for <a,b : b a^n b = a>"
)]
struct Cli {
    /// Plain text output instead of JSON.
    #[arg(long, global = true)]
    plain: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Sign of a word: positive, negative or identity, with a witness.
    Sign {
        #[arg(long)]
        n: u32,
        word: String,
    },
    /// Compare two words in an ordering.
    Cmp {
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value_t = Order::Dd)]
        order: Order,
        /// Conjugate the ordering: x is positive iff conj x conj^-1 is.
        #[arg(long)]
        conj: Option<String>,
        u: String,
        v: String,
    },
    /// Normal form u · Δ^ell.
    Nf {
        #[arg(long)]
        n: u32,
        word: String,
    },
    /// Exact identity oracle; with two words, decides equality.
    Oracle {
        #[arg(long)]
        n: u32,
        word: String,
        other: Option<String>,
    },
    /// Data attached to n.
    Ctx {
        #[arg(long)]
        n: u32,
    },
    /// Braid group tools in the generators s1, s2.
    B3 {
        #[command(subcommand)]
        command: B3Command,
    },
    /// Positivity of (b^k a)^-1 c (b^k a) in the Dehornoy-like ordering.
    Converge {
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 6)]
        kmax: u32,
        /// File with one word per line.
        #[arg(long)]
        elems: PathBuf,
    },
    /// Exhaustive verification suites.
    Suite {
        #[arg(long, default_value_t = 2)]
        n: u32,
        #[arg(long, value_enum, default_value_t = SuiteKind::Trichotomy)]
        kind: SuiteKind,
        #[arg(long, default_value_t = 8)]
        max_len: usize,
        /// Worker threads (0 = all cores).
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
    /// Cayley graph ball with the positive cone marked.
    Cayley {
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 2)]
        radius: usize,
        #[arg(long, value_enum, default_value_t = Format::Dot)]
        format: Format,
    },
}

#[derive(Subcommand, Debug)]
enum B3Command {
    /// D-positivity and Dehornoy-like verdict of a σ-word.
    Sign { word: String },
    /// Translate a σ-word into a, b.
    Bridge { word: String },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Order {
    Dd,
    Ddrev,
    Dlike,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum SuiteKind {
    Trichotomy,
    Closure,
    Identity,
    Dehornoy,
    Convexity,
    GammaMn,
    PropertyS,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Format {
    Dot,
    Json,
}

enum Failure {
    Usage(String),
    Other(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. }
            | Error::ZeroExponent { .. }
            | Error::OutOfRange(_)
            | Error::InvalidOrdering(_) => Failure::Usage(e.to_string()),
            _ => Failure::Other(e.to_string()),
        }
    }
}

type Outcome = Result<(String, i32), Failure>;

/// Runs the CLI with stdout as the sink.
pub fn cli_main<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    run(args, &mut stdout.lock())
}

/// Runs the CLI, writing the report to `out`; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(&cli) {
        Ok((text, code)) => {
            let _ = writeln!(out, "{}", text);
            code
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {}", msg);
            2
        }
        Err(Failure::Other(msg)) => {
            eprintln!("error: {}", msg);
            1
        }
    }
}

fn parse(s: &str) -> Result<Word, Failure> {
    s.parse::<Word>().map_err(Failure::from)
}

fn render<T: Serialize>(plain: bool, value: &T, text: impl FnOnce() -> String) -> String {
    if plain {
        text()
    } else {
        serde_json::to_string_pretty(value).expect("serializable")
    }
}

fn dispatch(cli: &Cli) -> Outcome {
    let plain = cli.plain;
    match &cli.command {
        Command::Sign { n, word } => {
            let ctx = GroupContext::new(*n)?;
            let w = parse(word)?;
            let r = decide_sign(&w, &ctx)?;
            let v = json!({"word": w.to_string(), "verdict": r.verdict, "witness": r.witness.to_string(), "steps": r.steps});
            Ok((
                render(plain, &v, || {
                    format!("{} = {}", r.verdict.as_str(), r.witness)
                }),
                0,
            ))
        }
        Command::Cmp {
            n,
            order,
            conj,
            u,
            v,
        } => {
            let ctx = GroupContext::new(*n)?;
            let base = match order {
                Order::Dd => OrderingSpec::Dd,
                Order::Ddrev => OrderingSpec::DdReversed,
                Order::Dlike => OrderingSpec::DehornoyLike,
            };
            let spec = match conj {
                Some(g) => OrderingSpec::conjugated(base, parse(g)?)?,
                None => base,
            };
            let (u, v) = (parse(u)?, parse(v)?);
            let result = format!("{:?}", orderings::cmp(&u, &v, &spec, &ctx)?);
            let j = json!({"u": u.to_string(), "v": v.to_string(), "ordering": format!("{:?}", spec), "result": result});
            Ok((render(plain, &j, || result.clone()), 0))
        }
        Command::Nf { n, word } => {
            let ctx = GroupContext::new(*n)?;
            let f = to_normal_form(&parse(word)?, &ctx)?;
            let j = f.to_json();
            Ok((
                render(plain, &j, || format!("{} · Δ^{}", f.prefix, f.ell)),
                0,
            ))
        }
        Command::Oracle { n, word, other } => {
            let ctx = GroupContext::new(*n)?;
            let w = parse(word)?;
            match other {
                None => {
                    let r = oracle_report(&w, &ctx);
                    let bp = b_power_of(&w, &ctx);
                    let j = json!({"word": w.to_string(), "identity": r.identity, "rho_is_identity": r.rho_is_identity, "phi": r.phi, "b_power": bp});
                    Ok((render(plain, &j, || format!("identity: {}", r.identity)), 0))
                }
                Some(o) => {
                    let o = parse(o)?;
                    let eq = oracle_equal(&w, &o, &ctx);
                    let j = json!({"u": w.to_string(), "v": o.to_string(), "equal": eq});
                    Ok((render(plain, &j, || format!("equal: {}", eq)), 0))
                }
            }
        }
        Command::Ctx { n } => {
            let ctx = GroupContext::new(*n)?;
            let j = json!({
                "n": ctx.n(), "q": ctx.q(), "min_poly": ctx.min_poly(),
                "phi_a": ctx.phi_a(), "phi_b": ctx.phi_b(), "delta": ctx.delta().to_string(),
            });
            Ok((
                render(plain, &j, || {
                    format!(
                        "n = {}, lambda = 2cos(pi/{}), min poly {:?}",
                        ctx.n(),
                        ctx.q(),
                        ctx.min_poly()
                    )
                }),
                0,
            ))
        }
        Command::B3 { command } => match command {
            B3Command::Sign { word } => {
                let ctx = GroupContext::new(2)?;
                let s: SigmaWord = word.parse().map_err(Failure::from)?;
                let ab = sigma_to_ab(&s);
                let d = is_d_positive(&s)?;
                let like = orderings::is_positive(&ab, &OrderingSpec::DehornoyLike, &ctx)?;
                let red = dehornoy_reduce(&s)?;
                let sign = decide_sign(&ab, &ctx)?;
                let cert = (sign.verdict == Verdict::Positive)
                    .then(|| cone_certificate_b3(&sign.witness))
                    .flatten();
                let j = json!({
                    "word": s.to_string(), "ab": ab.to_string(), "reduced": red.to_string(),
                    "d_positive": d, "dehornoy_like_positive": like, "cone_certificate": cert,
                });
                Ok((
                    render(plain, &j, || {
                        format!("d-positive: {}, dehornoy-like: {}", d, like)
                    }),
                    i32::from(d != like),
                ))
            }
            B3Command::Bridge { word } => {
                let s: SigmaWord = word.parse().map_err(Failure::from)?;
                let ab = sigma_to_ab(&s);
                let j = json!({"word": s.to_string(), "ab": ab.to_string()});
                Ok((render(plain, &j, || ab.to_string()), 0))
            }
        },
        Command::Converge { n, kmax, elems } => {
            let ctx = GroupContext::new(*n)?;
            let text = std::fs::read_to_string(elems)
                .map_err(|e| Failure::Usage(format!("cannot read {}: {}", elems.display(), e)))?;
            let words = text
                .lines()
                .map(str::trim)
                .filter(|l| !l.is_empty() && !l.starts_with('#'))
                .map(parse)
                .collect::<Result<Vec<_>, _>>()?;
            let r = convergence_experiment(&ctx, &words, *kmax)?;
            let code = i32::from(!r.unstable.is_empty() || !r.minima_differ_from_b_inverse);
            let table = || {
                r.rows
                    .iter()
                    .map(|row| {
                        let cells: String = row
                            .positive
                            .iter()
                            .map(|&p| if p { '+' } else { '.' })
                            .collect();
                        format!("{:>12} {}", row.element, cells)
                    })
                    .collect::<Vec<_>>()
                    .join("\n")
            };
            Ok((render(plain, &r, table), code))
        }
        Command::Suite {
            n,
            kind,
            max_len,
            jobs,
        } => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(*jobs)
                .build()
                .map_err(|e| Failure::Other(e.to_string()))?;
            pool.install(|| run_suite(*n, *kind, *max_len, plain))
        }
        Command::Cayley { n, radius, format } => {
            let ctx = GroupContext::new(*n)?;
            let fmt = match format {
                Format::Dot => CayleyFormat::Dot,
                Format::Json => CayleyFormat::Json,
            };
            Ok((lab::export_cayley_ball(&ctx, *radius, fmt)?, 0))
        }
    }
}

fn run_suite(n: u32, kind: SuiteKind, max_len: usize, plain: bool) -> Outcome {
    let report: SuiteReport = match kind {
        SuiteKind::Trichotomy => lab::run_trichotomy_suite(&GroupContext::new(n)?, max_len),
        SuiteKind::Closure => lab::run_closure_suite(&GroupContext::new(n)?, max_len),
        SuiteKind::Identity => lab::run_identity_suite(&GroupContext::new(n)?),
        SuiteKind::Dehornoy => lab::run_dehornoy_suite(max_len)?,
        SuiteKind::Convexity => lab::run_convexity_suite(&GroupContext::new(n)?, max_len)?,
        SuiteKind::GammaMn => {
            let bound = max_len.max(1) as u32;
            let failures: Vec<_> = (1..=bound)
                .flat_map(|m| (1..=bound).map(move |k| (m, k)))
                .filter(|&(m, k)| !lab::verify_gamma_mn_identity(m, k))
                .collect();
            let j = json!({"kind": "gamma-mn", "bound": bound, "failures": failures});
            return Ok((
                render(plain, &j, || format!("{} failures", failures.len())),
                i32::from(!failures.is_empty()),
            ));
        }
        SuiteKind::PropertyS => {
            let ctx = GroupContext::new(n)?;
            let probes = [OrderingSpec::Dd, OrderingSpec::DehornoyLike]
                .iter()
                .map(|s| lab::property_s_probe(&ctx, s, max_len))
                .collect::<Result<Vec<_>, _>>()?;
            return Ok((render(plain, &probes, || format!("{:?}", probes)), 0));
        }
    };
    let code = i32::from(!report.passed());
    let text = || {
        let mut s = format!(
            "{} n={} max_len={} {:?}",
            report.kind, report.n, report.max_len, report.counts
        );
        for v in &report.violations {
            s.push_str(&format!("\n{} [{}] {}", v.word, v.check, v.detail));
        }
        s
    };
    Ok((render(plain, &report, text), code))
}
