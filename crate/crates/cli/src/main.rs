//! `qlfun`: tables, function values and verification reports.
//!
//! Exit status: 0 on success (every case passes for `verify`), 1 when a
//! verification fails, 2 on usage or domain errors.

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde_json::{json, Value};

use qlfun::characters::DirichletCharacter;
use qlfun::numerics::{format_rational, parse_complex, parse_rational, PadicNumber, Rational};
use qlfun::qeuler::{PadicQContext, QArg, QContext};
use qlfun::report::padic_json;
use qlfun::suites::{run_suite, SuiteParams, DEFAULT_SEED, SUITES};
use qlfun::zeta_arch::{dirichlet_l, zeta_e, Truncation};
use qlfun::zeta_padic::{PadicZeta, Theorem5Form};
use qlfun::Error;

#[derive(Parser)]
#[command(name = "qlfun", version, about = "q-Euler numbers and q-l-functions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Table of E_{m,q} (or E_{m,χ,q}) for m = 0..=max-m.
    Euler(EulerArgs),
    /// ζ_{E,q}(s, x) by its certified series.
    Zeta(ZetaArgs),
    /// l_q(s, χ) by its certified series.
    Lfun(LfunArgs),
    /// l_{p,q}(s, χ) in Z_p.
    PadicL(PadicLArgs),
    /// Both sides of the power-sum expansion, in every arrangement.
    Theorem5(Theorem5Args),
    /// Run a verification suite and print its JSON report.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Args)]
struct EulerArgs {
    /// Rational q (with --p, an element of Q_p).
    #[arg(long, allow_hyphen_values = true, conflicts_with = "complex")]
    q: Option<String>,
    #[arg(long, requires = "q")]
    p: Option<u64>,
    #[arg(long, requires = "p", default_value_t = 8)]
    prec: u32,
    /// Complex q as RE,IM.
    #[arg(long, allow_hyphen_values = true)]
    complex: Option<String>,
    #[arg(long)]
    max_m: u64,
    /// trivial:f, quadratic:p or teich:p:t.
    #[arg(long)]
    chi: Option<String>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Args)]
struct SeriesArgs {
    /// q as RE or RE,IM with 0 < |q| < 1.
    #[arg(long, allow_hyphen_values = true)]
    q: String,
    /// s as RE or RE,IM.
    #[arg(long, allow_hyphen_values = true)]
    s: String,
    #[arg(long, default_value_t = 1e-12)]
    eps: f64,
    #[arg(long, default_value_t = 200_000)]
    max_terms: usize,
}

#[derive(Args)]
struct ZetaArgs {
    #[command(flatten)]
    series: SeriesArgs,
    /// x as A or A/F.
    #[arg(long, default_value = "1")]
    x: String,
}

#[derive(Args)]
struct LfunArgs {
    #[command(flatten)]
    series: SeriesArgs,
    #[arg(long)]
    chi: String,
}

#[derive(Args)]
struct PadicArgs {
    #[arg(long)]
    p: u64,
    #[arg(long, default_value_t = 10)]
    prec: u32,
    #[arg(long, allow_hyphen_values = true)]
    q: String,
}

#[derive(Args)]
struct PadicLArgs {
    #[command(flatten)]
    ctx: PadicArgs,
    #[arg(long)]
    chi: String,
    /// Rational s with v_p(s) >= 0.
    #[arg(long, allow_hyphen_values = true)]
    s: String,
}

#[derive(Args)]
struct Theorem5Args {
    #[command(flatten)]
    ctx: PadicArgs,
    #[arg(long)]
    n: u64,
    #[arg(long)]
    r: u64,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(value_parser = clap::builder::PossibleValuesParser::new(SUITES))]
    suite: String,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long)]
    trials: Option<usize>,
    #[arg(long)]
    p: Option<u64>,
    #[arg(long, allow_hyphen_values = true)]
    q: Option<String>,
    #[arg(long)]
    prec: Option<u32>,
    #[arg(long)]
    n: Option<u64>,
    #[arg(long)]
    m: Option<u64>,
    #[arg(long)]
    r: Option<u64>,
    #[arg(long)]
    k: Option<u64>,
    #[arg(long)]
    j: Option<u64>,
    #[arg(long)]
    tol: Option<f64>,
}

type Out = Result<(Value, bool), Error>;

fn character(spec: &Option<String>) -> Result<Option<DirichletCharacter>, Error> {
    spec.as_deref().map(str::parse).transpose()
}

fn rows_json(rows: Vec<(u64, Value)>) -> Value {
    Value::Array(
        rows.into_iter()
            .map(|(m, v)| json!({"m": m, "value": v}))
            .collect(),
    )
}

fn csv_cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Object(o) => o.values().map(csv_cell).collect::<Vec<_>>().join(","),
        Value::Null => String::new(),
        other => other.to_string(),
    }
}

fn csv_header(v: &Value) -> String {
    match v {
        Value::Object(o) => o.keys().cloned().collect::<Vec<_>>().join(","),
        _ => "value".into(),
    }
}

fn euler(args: &EulerArgs) -> Result<Vec<(u64, Value)>, Error> {
    let chi = character(&args.chi)?;
    let ms = 0..=args.max_m;
    if let Some(z) = &args.complex {
        let ctx = QContext::complex(parse_complex(z)?)?;
        let values = chi.as_ref().map(|c| c.values_complex());
        return ms
            .map(|m| {
                let v: Complex64 = match &values {
                    Some(t) => ctx.base(1).generalized_q_euler(m, t)?,
                    None => ctx.q_euler_number(m)?,
                };
                Ok((m, json!({"re": v.re, "im": v.im})))
            })
            .collect();
    }
    let q = parse_rational(
        args.q
            .as_deref()
            .ok_or_else(|| Error::Parse("one of --q or --complex is required".into()))?,
    )?;
    if let Some(p) = args.p {
        let ctx = PadicQContext::new(p, args.prec, q)?;
        let z = match &chi {
            Some(c) => Some(PadicZeta::for_character(ctx.clone(), c)?),
            None => None,
        };
        return ms
            .map(|m| {
                let v: PadicNumber = match (&z, &chi) {
                    (Some(z), Some(c)) => z.generalized_euler(m, c, 1)?,
                    _ => ctx.q_euler_number(m, 1)?,
                };
                Ok((m, padic_json(&v)))
            })
            .collect();
    }
    let ctx = QContext::rational(q)?;
    let values = chi.as_ref().map(|c| c.values_rational()).transpose()?;
    ms.map(|m| {
        let v: Rational = match &values {
            Some(t) => ctx.base(1).generalized_q_euler(m, t)?,
            None => ctx.q_euler_number(m)?,
        };
        Ok((m, json!(format_rational(&v))))
    })
    .collect()
}

fn series_setup(args: &SeriesArgs) -> Result<(Complex64, QContext<Complex64>, Truncation), Error> {
    let ctx = QContext::complex(parse_complex(&args.q)?)?;
    Ok((
        parse_complex(&args.s)?,
        ctx,
        Truncation::new(args.eps, args.max_terms)?,
    ))
}

fn zeta(args: &ZetaArgs) -> Out {
    let (s, ctx, tr) = series_setup(&args.series)?;
    let x = QArg::parse(&args.x)?;
    let v = zeta_e(s, x, &ctx, &tr)?;
    Ok((
        json!({"s": {"re": s.re, "im": s.im}, "x": x.to_string(), "result": v}),
        true,
    ))
}

fn lfun(args: &LfunArgs) -> Out {
    let (s, ctx, tr) = series_setup(&args.series)?;
    let chi: DirichletCharacter = args.chi.parse()?;
    let v = dirichlet_l(s, &chi, &ctx, &tr)?;
    Ok((
        json!({"s": {"re": s.re, "im": s.im}, "chi": chi.label(), "result": v}),
        true,
    ))
}

fn padic_context(args: &PadicArgs) -> Result<PadicQContext, Error> {
    PadicQContext::new(args.p, args.prec, parse_rational(&args.q)?)
}

fn padic_l(args: &PadicLArgs) -> Out {
    let ctx = padic_context(&args.ctx)?;
    let chi: DirichletCharacter = args.chi.parse()?;
    let z = PadicZeta::for_character(ctx, &chi)?;
    let s = parse_rational(&args.s)?;
    let value = z.padic_l(&z.exponent(&s)?, &chi)?;
    Ok((
        json!({
            "p": z.prime(),
            "q": args.ctx.q,
            "chi": chi.label(),
            "F": z.modulus(),
            "s": format_rational(&s),
            "certified_exponent": z.certified(),
            "value": padic_json(&value),
        }),
        true,
    ))
}

fn theorem5(args: &Theorem5Args) -> Out {
    let ctx = padic_context(&args.ctx)?;
    let p = ctx.prime();
    let z = PadicZeta::new(ctx, p)?;
    let (n, r) = (args.n, args.r);
    let lhs = z.theorem5_lhs(n, r)?;
    let rec = z.reconstruction(n, r)?;
    let mut forms = serde_json::Map::new();
    for form in [
        Theorem5Form::Literal { shift: 0 },
        Theorem5Form::Literal { shift: 1 },
        Theorem5Form::CorrectedFromOne,
        Theorem5Form::CorrectedLeading,
        Theorem5Form::Corollary,
    ] {
        let v = z.theorem5_rhs(n, r, form)?;
        forms.insert(
            form.label(),
            json!({"value": padic_json(&v), "agreement": v.agreement(&lhs)}),
        );
    }
    Ok((
        json!({
            "p": p,
            "q": args.ctx.q,
            "n": n,
            "r": r,
            "lhs": {"exact": format_rational(&z.theorem5_lhs_exact(n, r)?), "value": padic_json(&lhs)},
            "reconstruction": {"value": padic_json(&rec), "agreement": rec.agreement(&lhs)},
            "forms": forms,
        }),
        true,
    ))
}

fn verify(args: &VerifyArgs) -> Out {
    let params = SuiteParams {
        seed: args.seed,
        trials: args.trials,
        p: args.p,
        q: args.q.as_deref().map(parse_rational).transpose()?,
        prec: args.prec,
        n: args.n,
        m: args.m,
        r: args.r,
        k: args.k,
        j: args.j,
        tol: args.tol,
    };
    let report = run_suite(&args.suite, &params)?;
    let ok = report.ok;
    if !ok {
        eprintln!(
            "{}: {} of {} cases failed",
            report.suite,
            report.failures().count(),
            report.cases.len()
        );
    }
    let value = serde_json::to_value(&report).map_err(|e| Error::Parse(e.to_string()))?;
    Ok((value, ok))
}

fn run(cli: Cli) -> Result<(String, bool), Error> {
    let pretty = |v: &Value| serde_json::to_string_pretty(v).expect("values serialize");
    let (value, ok) = match &cli.command {
        Command::Euler(args) => {
            let rows = euler(args)?;
            if let Format::Csv = args.format {
                let mut out = format!(
                    "m,{}\n",
                    rows.first().map_or("value".into(), |r| csv_header(&r.1))
                );
                for (m, v) in &rows {
                    out.push_str(&format!("{m},{}\n", csv_cell(v)));
                }
                return Ok((out.trim_end().to_string(), true));
            }
            (rows_json(rows), true)
        }
        Command::Zeta(args) => zeta(args)?,
        Command::Lfun(args) => lfun(args)?,
        Command::PadicL(args) => padic_l(args)?,
        Command::Theorem5(args) => theorem5(args)?,
        Command::Verify(args) => verify(args)?,
    };
    Ok((pretty(&value), ok))
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok((text, ok)) => {
            // A closed pipe on stdout is not an error of the computation.
            let _ = writeln!(std::io::stdout().lock(), "{text}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
