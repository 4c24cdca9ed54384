//! `freesub`: free subgroup numbers, their Padé approximants and their
//! rational forms modulo prime powers.

mod config;
mod golden;

use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Number, Value};

use freesub_core::arith::{BigRational, ModRingCtx};
use freesub_core::emit::{emit, latex_factor, to_json, Format};
use freesub_core::groups::{free_subgroup_numbers, params_for, FamilyKind, GroupFamily};
use freesub_core::modular::{base_degree, rational_form_with, second_class, FormConfig, LiftChoice, RationalFormModPA};
use freesub_core::pade::{construct, pade_pair, verify_gosper, verify_identity};
use freesub_core::period::{analyze_form, horizon, predicted_period};
use freesub_core::riccati::RiccatiParams;
use freesub_core::valuation::lemma_divisibility;
use freesub_core::Error;

use config::{Defaults, Tier};

pub const EXIT_FAILED: u8 = 1;
pub const EXIT_INVALID: u8 = 2;
pub const EXIT_DEGENERATE: u8 = 3;
pub const EXIT_DEGREE_BOUND: u8 = 4;
pub const EXIT_HORIZON: u8 = 5;
pub const EXIT_GOLDEN: u8 = 6;

#[derive(Parser, Debug)]
#[command(name = "freesub", version, about = "Free subgroup numbers, Padé approximants and rational forms modulo p^alpha")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print f_1, ..., f_L.
    Counts(CountsArgs),
    /// Padé approximant of order n with its residual constant.
    Pade(PadeArgs),
    /// Polynomial part plus partial fractions modulo p^alpha.
    Reduce(ReduceArgs),
    /// Only the partial fractions of the reduced form.
    Pfrac(ReduceArgs),
    /// Eventual period of f modulo p^alpha.
    Period(PeriodArgs),
    /// Check Q_n = Q_d (mod p) over the admissible classes of n.
    Lemmas(LemmaArgs),
    /// Regenerate a named preset and compare it with the embedded reference.
    Reproduce(ReproduceArgs),
}

#[derive(Args, Debug, Clone)]
struct FamilyArgs {
    /// modular3 or hecke4 [default: modular3]
    #[arg(long)]
    family: Option<String>,
    /// Lift index m >= 1 [default: 1]
    #[arg(long)]
    m: Option<u64>,
}

#[derive(Args, Debug)]
struct CountsArgs {
    #[command(flatten)]
    family: FamilyArgs,
    /// Number of terms L.
    #[arg(long)]
    count: usize,
    #[arg(long)]
    format: Option<String>,
}

#[derive(Args, Debug)]
struct PadeArgs {
    #[command(flatten)]
    family: FamilyArgs,
    #[arg(long = "A", allow_hyphen_values = true)]
    a: Option<String>,
    #[arg(long = "B", allow_hyphen_values = true)]
    b: Option<String>,
    #[arg(long = "C", allow_hyphen_values = true)]
    c: Option<String>,
    #[arg(long = "D", allow_hyphen_values = true)]
    d: Option<String>,
    /// Square root of A^2 - 4CD; the nonnegative one when omitted.
    #[arg(long = "E", allow_hyphen_values = true)]
    e: Option<String>,
    /// Order n.
    #[arg(long)]
    n: u32,
    /// Also check the Riccati identity and the Gosper sums.
    #[arg(long)]
    verify: bool,
    /// Fail with exit 3 instead of solving the linear system when the closed form is undefined.
    #[arg(long)]
    no_fallback: bool,
    #[arg(long)]
    format: Option<String>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Lift {
    Canonical,
    Hensel,
}

#[derive(Args, Debug)]
struct ModulusArgs {
    #[command(flatten)]
    family: FamilyArgs,
    #[arg(long)]
    p: u64,
    #[arg(long, default_value_t = 1)]
    alpha: u32,
}

#[derive(Args, Debug)]
struct ReduceArgs {
    #[command(flatten)]
    modulus: ModulusArgs,
    #[arg(long)]
    format: Option<String>,
    /// Seed of the randomized factorization.
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, value_enum, default_value_t = Lift::Canonical)]
    lift: Lift,
    /// Longest series searched for the zero run that certifies the form.
    #[arg(long, default_value_t = 1 << 16)]
    max_len: usize,
}

#[derive(Args, Debug)]
struct PeriodArgs {
    #[command(flatten)]
    modulus: ModulusArgs,
    /// Number of terms to inspect [default: four periods past the polynomial part].
    #[arg(long)]
    horizon: Option<usize>,
    /// Refuse horizons longer than this.
    #[arg(long, default_value_t = 1 << 22)]
    max_horizon: usize,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    format: Option<String>,
}

#[derive(Args, Debug)]
struct LemmaArgs {
    #[command(flatten)]
    family: FamilyArgs,
    #[arg(long)]
    p: u64,
    /// Largest n checked [default: 3p].
    #[arg(long)]
    n_max: Option<u64>,
    #[arg(long)]
    format: Option<String>,
}

#[derive(Args, Debug)]
struct ReproduceArgs {
    /// free7^5, free11^5, free13^5 or periods-17
    preset: String,
    #[arg(long)]
    tier: Option<Tier>,
}

/// Failure carried to the exit status.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Self { code, message: message.into() }
    }

    fn invalid(message: impl Into<String>) -> Self {
        Self::new(EXIT_INVALID, message)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::DegenerateParameters(_) => EXIT_DEGENERATE,
            Error::DegreeBoundExceeded { .. } => EXIT_DEGREE_BOUND,
            Error::HorizonTooShort { .. } => EXIT_HORIZON,
            Error::NotPrime(_)
            | Error::InvalidModulus(_)
            | Error::InvalidParams(_)
            | Error::UnsupportedPrime { .. }
            | Error::UnsupportedFamily
            | Error::InvalidCongruenceClass { .. }
            | Error::Parse(_) => EXIT_INVALID,
            _ => EXIT_FAILED,
        };
        Self::new(code, e.to_string())
    }
}

type CmdResult = Result<String, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let defaults = match Defaults::load() {
        Ok(d) => d,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_INVALID);
        }
    };
    let out = match cli.command {
        Command::Counts(a) => cmd_counts(&defaults, a),
        Command::Pade(a) => cmd_pade(&defaults, a),
        Command::Reduce(a) => cmd_reduce(&defaults, a, false),
        Command::Pfrac(a) => cmd_reduce(&defaults, a, true),
        Command::Period(a) => cmd_period(&defaults, a),
        Command::Lemmas(a) => cmd_lemmas(&defaults, a),
        Command::Reproduce(a) => golden::cmd_reproduce(&defaults, &a.preset, a.tier.unwrap_or(defaults.tier)),
    };
    match out {
        Ok(s) => {
            print!("{s}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn family(defaults: &Defaults, a: &FamilyArgs) -> Result<GroupFamily, Failure> {
    let kind = match &a.family {
        Some(s) => FamilyKind::from_str(s)?,
        None => defaults.family,
    };
    Ok(GroupFamily::new(kind, a.m.unwrap_or(defaults.m))?)
}

fn format(defaults: &Defaults, f: &Option<String>) -> Result<Format, Failure> {
    match f {
        Some(s) => Ok(Format::from_str(s)?),
        None => Ok(defaults.format),
    }
}

fn modulus(defaults: &Defaults, a: &ModulusArgs) -> Result<(GroupFamily, ModRingCtx), Failure> {
    Ok((family(defaults, &a.family)?, ModRingCtx::new(a.p, a.alpha)?))
}

fn big(v: &impl ToString) -> Value {
    Value::Number(Number::from_str(&v.to_string()).expect("integer literal"))
}

fn json_out(v: Value) -> String {
    serde_json::to_string_pretty(&v).expect("json") + "\n"
}

fn cmd_counts(defaults: &Defaults, a: CountsArgs) -> CmdResult {
    if a.count == 0 {
        return Err(Failure::invalid("--count must be at least 1"));
    }
    let fam = family(defaults, &a.family)?;
    let values = free_subgroup_numbers(&fam, a.count)?.values;
    match format(defaults, &a.format)? {
        Format::Text => {
            let s: Vec<String> = values.iter().map(|v| v.to_string()).collect();
            Ok(s.join(" ") + "\n")
        }
        Format::Json => Ok(json_out(json!({
            "family": fam.kind.name(),
            "m": fam.m,
            "values": values.iter().map(big).collect::<Vec<_>>(),
        }))),
        Format::Latex => Err(Failure::invalid("counts supports text and json")),
    }
}

fn rational(name: &str, s: &str) -> Result<BigRational, Failure> {
    BigRational::from_str(s).map_err(|_| Failure::invalid(format!("--{name}: {s:?} is not a rational number")))
}

fn pade_params(defaults: &Defaults, a: &PadeArgs) -> Result<RiccatiParams, Failure> {
    let explicit = [&a.a, &a.b, &a.c, &a.d];
    if explicit.iter().all(|x| x.is_none()) && a.e.is_none() {
        return Ok(params_for(&family(defaults, &a.family)?));
    }
    let mut v = Vec::with_capacity(4);
    for (name, x) in ["A", "B", "C", "D"].iter().zip(explicit) {
        match x {
            Some(s) => v.push(rational(name, s)?),
            None => return Err(Failure::invalid(format!("--{name} is required with an explicit tuple"))),
        }
    }
    let [aa, b, c, d]: [BigRational; 4] = v.try_into().expect("four values");
    Ok(match &a.e {
        Some(e) => RiccatiParams::new(aa, b, c, d, rational("E", e)?)?,
        None => RiccatiParams::with_root(aa, b, c, d)?,
    })
}

fn cmd_pade(defaults: &Defaults, a: PadeArgs) -> CmdResult {
    let params = pade_params(defaults, &a)?;
    let pair = if a.no_fallback { pade_pair(&params, a.n)? } else { construct(&params, a.n)? };
    let identity = a.verify.then(|| verify_identity(&pair, &params));
    let gosper = if a.verify {
        Some(match verify_gosper(a.n, &params) {
            Ok(ok) => Ok(ok),
            Err(Error::DegenerateParameters(m)) => Err(m),
            Err(e) => return Err(e.into()),
        })
    } else {
        None
    };
    let out = match format(defaults, &a.format)? {
        Format::Text => {
            let mut s = format!(
                "route: {}\nP: {}\nQ: {}\nresidual: {}\n",
                pair.route.label(),
                pair.p,
                pair.q,
                pair.residual_const
            );
            if let Some(ok) = identity {
                s += &format!("identity: {}\n", if ok { "OK" } else { "FAILED" });
            }
            match &gosper {
                Some(Ok(ok)) => s += &format!("gosper: {}\n", if *ok { "OK" } else { "FAILED" }),
                Some(Err(m)) => s += &format!("gosper: skipped ({m})\n"),
                None => {}
            }
            s
        }
        Format::Json => {
            let coeffs = |p: &freesub_core::poly::Poly<freesub_core::ring::Rationals>| {
                p.coeffs().iter().map(|c| Value::String(c.to_string())).collect::<Vec<_>>()
            };
            json_out(json!({
                "n": pair.n,
                "route": pair.route.label(),
                "p": coeffs(&pair.p),
                "q": coeffs(&pair.q),
                "residual": pair.residual_const.to_string(),
                "identity": identity,
                "gosper": gosper.as_ref().map(|g| g.as_ref().ok().copied()),
            }))
        }
        Format::Latex => return Err(Failure::invalid("pade supports text and json")),
    };
    if identity == Some(false) || matches!(gosper, Some(Ok(false))) {
        eprint!("{out}");
        return Err(Failure::new(EXIT_FAILED, "verification failed"));
    }
    Ok(out)
}

fn form_config(seed: u64, lift: Lift, max_len: usize) -> FormConfig {
    let lift = match lift {
        Lift::Canonical => LiftChoice::Canonical,
        Lift::Hensel => LiftChoice::Hensel,
    };
    FormConfig { seed, lift, max_length: max_len, ..FormConfig::default() }
}

fn build_form(fam: &GroupFamily, ctx: &ModRingCtx, cfg: &FormConfig) -> Result<RationalFormModPA, Failure> {
    rational_form_with(fam, ctx, cfg).map_err(|e| {
        let mut f = Failure::from(e);
        if f.code == EXIT_DEGREE_BOUND {
            f.message += "; raise --max-len";
        }
        f
    })
}

fn cmd_reduce(defaults: &Defaults, a: ReduceArgs, fractions_only: bool) -> CmdResult {
    let (fam, ctx) = modulus(defaults, &a.modulus)?;
    let fmt = format(defaults, &a.format)?;
    let cfg = form_config(a.seed.unwrap_or(defaults.seed), a.lift, a.max_len);
    let form = build_form(&fam, &ctx, &cfg)?;
    if !fractions_only {
        return Ok(emit(&form, fmt));
    }
    match fmt {
        Format::Text => {
            let mut s = String::new();
            for f in &form.fractions {
                s += &format!("({}) / ({})^{}\n", f.residue, latex_factor(&f.factor), f.exponent);
            }
            Ok(s)
        }
        Format::Json => Ok(json_out(to_json(&form)["fractions"].clone())),
        Format::Latex => Err(Failure::invalid("pfrac supports text and json")),
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn cmd_period(defaults: &Defaults, a: PeriodArgs) -> CmdResult {
    let (fam, ctx) = modulus(defaults, &a.modulus)?;
    let fmt = format(defaults, &a.format)?;
    let form = build_form(&fam, &ctx, &form_config(a.seed.unwrap_or(defaults.seed), Lift::Canonical, 1 << 16))?;
    let len = match a.horizon {
        Some(h) => h,
        None => horizon(&fam, &form)?,
    };
    if len > a.max_horizon {
        return Err(Failure::new(EXIT_HORIZON, format!("horizon {len} exceeds --max-horizon {}", a.max_horizon)));
    }
    let report = analyze_form(&form, len).map_err(|e| {
        let mut f = Failure::from(e);
        f.message += "; raise --horizon";
        f
    })?;
    let predicted = predicted_period(&fam, ctx.p(), ctx.alpha());
    match fmt {
        Format::Text => {
            let (pred, matched) = match predicted {
                Some(t) => (t.to_string(), yes_no(t == report.period as u64)),
                None => ("none".into(), "n/a"),
            };
            let bound = report.certificate.as_ref().map_or("none".into(), |b| b.to_string());
            let divides = report.divides_certificate().map_or("n/a", yes_no);
            Ok(format!(
                "period={} predicted={pred} match={matched}\npreperiod={} horizon={} order_bound={bound} divides={divides}\n",
                report.period, report.preperiod, report.verified_horizon
            ))
        }
        Format::Json => Ok(json_out(report.to_json(predicted))),
        Format::Latex => Err(Failure::invalid("period supports text and json")),
    }
}

/// Admissible `n <= n_max`, in increasing order, with the class each belongs to.
fn lemma_cases(kind: FamilyKind, p: u64, n_max: u64) -> Result<Vec<(u64, &'static str)>, Failure> {
    let d = base_degree(kind, p)? % p;
    let second = second_class(kind, p)? % p;
    Ok((0..=n_max)
        .filter_map(|n| {
            if n % p == d {
                Some((n, "d"))
            } else if n % p == second {
                Some((n, "second"))
            } else {
                None
            }
        })
        .collect())
}

fn cmd_lemmas(defaults: &Defaults, a: LemmaArgs) -> CmdResult {
    let fam = family(defaults, &a.family)?;
    let fmt = format(defaults, &a.format)?;
    let cases = lemma_cases(fam.kind, a.p, a.n_max.unwrap_or(3 * a.p))?;
    let workers = std::thread::available_parallelism().map_or(1, |n| n.get()).min(cases.len().max(1));
    let chunk = cases.len().div_ceil(workers).max(1);
    let results: Vec<freesub_core::Result<bool>> = std::thread::scope(|s| {
        let handles: Vec<_> = cases
            .chunks(chunk)
            .map(|part| s.spawn(move || part.iter().map(|&(n, _)| lemma_divisibility(&fam, a.p, n)).collect::<Vec<_>>()))
            .collect();
        handles.into_iter().flat_map(|h| h.join().expect("worker")).collect()
    });
    let mut ok = Vec::with_capacity(cases.len());
    for r in results {
        ok.push(r?);
    }
    let all = ok.iter().all(|&b| b);
    let out = match fmt {
        Format::Text => {
            let mut s = String::new();
            for (&(n, class), &good) in cases.iter().zip(&ok) {
                s += &format!("n={n} class={class} {}\n", if good { "OK" } else { "FAILED" });
            }
            s += &format!("{} cases, {}\n", cases.len(), if all { "all OK" } else { "some FAILED" });
            s += "note: finite instance checks, evidence rather than proof\n";
            s
        }
        Format::Json => json_out(json!({
            "family": fam.kind.name(),
            "m": fam.m,
            "p": a.p,
            "cases": cases.iter().zip(&ok).map(|(&(n, class), &good)| json!({"n": n, "class": class, "ok": good})).collect::<Vec<_>>(),
            "all_ok": all,
            "kind": "instance-check",
        })),
        Format::Latex => return Err(Failure::invalid("lemmas supports text and json")),
    };
    if !all {
        print!("{out}");
        return Err(Failure::new(EXIT_FAILED, "lemma instance failed"));
    }
    Ok(out)
}
