//! Preperiod and minimal period of a reduced coefficient stream.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;
use serde_json::{json, Number, Value};
use std::str::FromStr;

use crate::arith::ModRingCtx;
use crate::error::{Error, Result};
use crate::groups::{FamilyKind, GroupFamily};
use crate::modular::{ModSeries, RationalFormModPA};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeriodReport {
    pub ctx: ModRingCtx,
    pub preperiod: usize,
    pub period: usize,
    /// Number of terms over which the shift identity was checked.
    pub verified_horizon: usize,
    /// Companion-order bound the period divides, when a form was supplied.
    pub certificate: Option<BigUint>,
}

/// Smallest start index from which `a[i + t] == a[i]` holds up to the end.
fn tail_start(a: &[u64], t: usize) -> usize {
    let mut i = a.len() - t;
    while i > 0 && a[i - 1] == a[i - 1 + t] {
        i -= 1;
    }
    i
}

/// Scans candidate periods `t = 1, 2, ...`. A candidate is accepted when the
/// shift identity holds on a stretch of at least `3t` terms that also covers
/// half of the available window; its minimal preperiod comes with it.
pub fn detect_period(series: &ModSeries) -> Result<PeriodReport> {
    let a: Vec<u64> = series.coeffs().iter().map(|c| c.value()).collect();
    let len = a.len();
    for t in 1..=len / 4 {
        let mu = tail_start(&a, t);
        let span = len - mu;
        if span >= 4 * t && 2 * span >= len {
            return Ok(PeriodReport {
                ctx: *series.ring(),
                preperiod: mu,
                period: t,
                verified_horizon: len,
                certificate: None,
            });
        }
    }
    Err(Error::HorizonTooShort { length: len })
}

/// Known minimal periods of `Modular3(1)`.
pub fn predicted_period(family: &GroupFamily, p: u64, alpha: u32) -> Option<u64> {
    if family.kind != FamilyKind::Modular3 || family.m != 1 || alpha == 0 {
        return None;
    }
    let pk = |e: u32| p.checked_pow(e);
    match (p, alpha) {
        (7, _) => pk(alpha - 1)?.checked_mul(6),
        (11, _) => pk(alpha - 1),
        (13, _) => pk(alpha - 1)?.checked_mul(12),
        (17, 1) => Some(6 * 16),
        (17, 2) => Some(18 * 16 * 17),
        (17, 3) => Some(102 * 16 * 17 * 17),
        _ => None,
    }
}

/// Least `e` with `p^e >= x`.
fn ceil_log(p: u64, x: u64) -> u32 {
    let (mut e, mut acc) = (0u32, 1u128);
    while acc < x as u128 {
        acc *= p as u128;
        e += 1;
    }
    e
}

/// A multiple of the eventual period of the form's expansion: the lcm over
/// factors of degree `d'` of `(p^d' - 1) p^(alpha - 1 + ceil(log_p(alpha d')))`.
pub fn order_bound(form: &RationalFormModPA) -> BigUint {
    let p = form.ctx.p();
    let alpha = form.ctx.alpha();
    form.factors().into_iter().fold(BigUint::one(), |acc, g| {
        let dp = g.degree().unwrap_or(0) as u32;
        if dp == 0 {
            return acc;
        }
        let base = BigUint::from(p);
        let b = (base.pow(dp) - 1u32) * base.pow(alpha - 1 + ceil_log(p, alpha as u64 * dp as u64));
        acc.lcm(&b)
    })
}

/// Series length to request: four times the predicted period when known,
/// otherwise four times the order bound, plus room for the preperiod.
pub fn horizon(family: &GroupFamily, form: &RationalFormModPA) -> Result<usize> {
    let slack = form.poly_part.degree().map_or(0, |d| d + 1);
    let base = match predicted_period(family, form.ctx.p(), form.ctx.alpha()) {
        Some(t) => BigUint::from(t),
        None => order_bound(form),
    };
    let total = base * 4u32 + slack;
    usize::try_from(&total).map_err(|_| Error::Overflow("horizon"))
}

/// Detects the period of the form's expansion to `len` terms and attaches the
/// order bound, which the period must divide.
pub fn analyze_form(form: &RationalFormModPA, len: usize) -> Result<PeriodReport> {
    let mut report = detect_period(&form.expand(len))?;
    report.certificate = Some(order_bound(form));
    Ok(report)
}

impl PeriodReport {
    /// Whether the period divides the attached bound.
    pub fn divides_certificate(&self) -> Option<bool> {
        self.certificate.as_ref().map(|b| (b % BigUint::from(self.period)) == BigUint::ZERO)
    }

    pub fn to_json(&self, predicted: Option<u64>) -> Value {
        let bound = self
            .certificate
            .as_ref()
            .map(|b| Value::Number(Number::from_str(&b.to_string()).expect("integer literal")));
        json!({
            "p": self.ctx.p(),
            "alpha": self.ctx.alpha(),
            "preperiod": self.preperiod,
            "period": self.period,
            "verified_horizon": self.verified_horizon,
            "order_bound": bound,
            "predicted": predicted,
            "match": predicted.map(|t| t == self.period as u64),
        })
    }
}
