//! Text, JSON and LaTeX renderings of a [`RationalFormModPA`].
//!
//! LaTeX lists the polynomial part in descending powers, then the fractions
//! factor by factor in ascending exponent. Factors are written with constant
//! term 1 and symmetric coefficients, residues and polynomial coefficients as
//! representatives in `[0, p^alpha)`. Zero terms are omitted.

use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigInt;
use serde_json::{json, Number, Value};

use crate::arith::ModRingCtx;
use crate::error::{Error, Result};
use crate::groups::{FamilyKind, GroupFamily};
use crate::modular::{Fraction, ModPoly, RationalFormModPA};
use crate::poly::Poly;
use crate::ring::Integers;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Latex,
}

impl FromStr for Format {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            "latex" => Ok(Format::Latex),
            other => Err(Error::Parse(format!("unknown format {other:?}"))),
        }
    }
}

pub fn emit(form: &RationalFormModPA, format: Format) -> String {
    match format {
        Format::Text => to_text(form),
        Format::Json => serde_json::to_string_pretty(&to_json(form)).expect("json") + "\n",
        Format::Latex => to_latex(form) + "\n",
    }
}

fn power(base: &str, e: usize) -> String {
    let e = e.to_string();
    if e.len() == 1 {
        format!("{base}^{e}")
    } else {
        format!("{base}^{{{e}}}")
    }
}

fn monomial(c: &str, k: usize) -> String {
    match (k, c) {
        (0, _) => c.to_string(),
        (_, "1") => zpow(k),
        _ => format!("{c} {}", zpow(k)),
    }
}

fn zpow(k: usize) -> String {
    if k == 1 {
        "z".into()
    } else {
        power("z", k)
    }
}

/// Constant term first, signed coefficients: `1+2z`, `1-z`, `1-2z+7z^2`.
pub fn latex_factor(g: &ModPoly) -> String {
    let mut s = String::new();
    for (k, c) in g.coeffs().iter().enumerate() {
        let v = c.symmetric();
        if v == 0 {
            continue;
        }
        let mag = v.unsigned_abs().to_string();
        let body = if k > 0 && mag == "1" { zpow(k) } else if k == 0 { mag } else { format!("{mag}{}", zpow(k)) };
        if v < 0 {
            s.push('-');
        } else if !s.is_empty() {
            s.push('+');
        }
        s.push_str(&body);
    }
    s
}

/// Ascending powers, canonical representatives.
fn latex_ascending(p: &ModPoly) -> String {
    let terms: Vec<String> = p
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| monomial(&c.value().to_string(), k))
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join("+")
    }
}

fn latex_fraction(f: &Fraction) -> String {
    let g = latex_factor(&f.factor);
    let den = if f.exponent == 1 { g } else { power(&format!("({g})"), f.exponent as usize) };
    format!("\\frac{{{}}}{{{den}}}", latex_ascending(&f.residue))
}

pub fn to_latex(form: &RationalFormModPA) -> String {
    let mut terms: Vec<String> = form
        .poly_part
        .coeffs()
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| monomial(&c.value().to_string(), k))
        .collect();
    terms.extend(form.fractions.iter().filter(|f| !f.residue.is_zero()).map(latex_fraction));
    let rhs = if terms.is_empty() { "0".to_string() } else { terms.join("+") };
    format!(
        "1+\\sum_{{\\lambda\\ge1}}f_\\lambda\\,z^\\lambda={rhs}\\quad\\text{{modulo }}{}",
        power(&form.ctx.p().to_string(), form.ctx.alpha() as usize)
    )
}

pub fn to_text(form: &RationalFormModPA) -> String {
    let mut s = String::new();
    let c = &form.ctx;
    let _ = writeln!(s, "family: {}", form.family);
    let _ = writeln!(s, "modulus: {}^{} = {}", c.p(), c.alpha(), c.modulus());
    let _ = writeln!(s, "d: {}", form.d);
    let _ = writeln!(s, "q_base: {}", form.q_base);
    let _ = writeln!(s, "poly_part: {}", form.poly_part);
    if form.fractions.is_empty() {
        let _ = writeln!(s, "note: polynomial only, the sequence is eventually zero modulo {}", c.modulus());
    }
    for f in &form.fractions {
        let _ = writeln!(s, "fraction: ({}) / ({})^{}", f.residue, latex_factor(&f.factor), f.exponent);
    }
    let _ = writeln!(s, "value at z=0: {}", form.value_at_zero());
    s
}

fn big_number(v: &BigInt) -> Value {
    Value::Number(Number::from_str(&v.to_string()).expect("integer literal"))
}

fn values(p: &ModPoly) -> Value {
    Value::Array(p.values().into_iter().map(Value::from).collect())
}

pub fn to_json(form: &RationalFormModPA) -> Value {
    let fractions: Vec<Value> = form
        .fractions
        .iter()
        .map(|f| json!({"factor": values(&f.factor), "exponent": f.exponent, "residue": values(&f.residue)}))
        .collect();
    json!({
        "family": form.family.kind.name(),
        "m": form.family.m,
        "p": form.ctx.p(),
        "alpha": form.ctx.alpha(),
        "d": form.d,
        "q_base": Value::Array(form.q_base.coeffs().iter().map(big_number).collect()),
        "poly_part": values(&form.poly_part),
        "fractions": fractions,
    })
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| Error::Parse(format!("missing field {key:?}")))
}

fn as_u64(v: &Value, key: &str) -> Result<u64> {
    field(v, key)?.as_u64().ok_or_else(|| Error::Parse(format!("{key:?} is not an unsigned integer")))
}

fn mod_poly(v: &Value, ctx: &ModRingCtx) -> Result<ModPoly> {
    let arr = v.as_array().ok_or_else(|| Error::Parse("expected a coefficient list".into()))?;
    let mut out = Vec::with_capacity(arr.len());
    for c in arr {
        let c = c.as_u64().ok_or_else(|| Error::Parse("coefficient is not an unsigned integer".into()))?;
        if c >= ctx.modulus() {
            return Err(Error::Parse(format!("coefficient {c} is not reduced modulo {}", ctx.modulus())));
        }
        out.push(ctx.elem(c));
    }
    Ok(Poly::new(*ctx, out))
}

/// Inverse of [`to_json`]; the cleared numerator and denominator are recomputed.
pub fn from_json(v: &Value) -> Result<RationalFormModPA> {
    let kind: FamilyKind = field(v, "family")?
        .as_str()
        .ok_or_else(|| Error::Parse("family is not a string".into()))?
        .parse()?;
    let family = GroupFamily::new(kind, as_u64(v, "m")?)?;
    let alpha = u32::try_from(as_u64(v, "alpha")?).map_err(|_| Error::Parse("alpha too large".into()))?;
    let ctx = ModRingCtx::new(as_u64(v, "p")?, alpha)?;
    let d = as_u64(v, "d")? as u32;
    let q_base = field(v, "q_base")?
        .as_array()
        .ok_or_else(|| Error::Parse("q_base is not a list".into()))?
        .iter()
        .map(|c| BigInt::from_str(&c.to_string()).map_err(|e| Error::Parse(e.to_string())))
        .collect::<Result<Vec<_>>>()?;
    let poly_part = mod_poly(field(v, "poly_part")?, &ctx)?;
    let mut fractions = Vec::new();
    for f in field(v, "fractions")?.as_array().ok_or_else(|| Error::Parse("fractions is not a list".into()))? {
        fractions.push(Fraction {
            factor: mod_poly(field(f, "factor")?, &ctx)?,
            exponent: as_u64(f, "exponent")? as u32,
            residue: mod_poly(field(f, "residue")?, &ctx)?,
        });
    }
    RationalFormModPA::from_parts(ctx, family, d, Poly::new(Integers, q_base), poly_part, fractions)
}
