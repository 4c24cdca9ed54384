//! Free subgroup generating functions modulo `p^alpha` as rational functions:
//! a polynomial part plus partial fractions over powers of the factors of the
//! Padé denominator `Q_d` reduced mod `p`.

use num_traits::Zero;

use crate::arith::{is_prime, vp_rational, ModElem, ModRingCtx};
use crate::error::{Error, Result};
use crate::groups::{params_for, FamilyKind, GroupFamily};
use crate::pade::{construct, pade_pair};
use crate::poly::{ext_gcd_coprime, factor_mod_p, hensel_lift, series_div, Poly, Series};
use crate::riccati::{riccati_series, riccati_series_mod};
use crate::ring::{Integers, Ring};

pub type ModPoly = Poly<ModRingCtx>;
pub type ModSeries = Series<ModRingCtx>;

/// Degree `d` of the denominator base for `family` at `p`, ignoring `p | m`.
pub fn base_degree(kind: FamilyKind, p: u64) -> Result<u64> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    match kind {
        FamilyKind::Modular3 => match p % 6 {
            1 => Ok((p - 1) / 6),
            5 => Ok((p - 5) / 6),
            _ => Err(Error::UnsupportedPrime { p }),
        },
        FamilyKind::Hecke4 => match p % 4 {
            1 => Ok((p - 1) / 4),
            3 => Ok((p - 3) / 4),
            _ => Err(Error::UnsupportedPrime { p }),
        },
    }
}

/// The other residue class of orders `n` whose denominators agree with `Q_d` mod `p`.
pub fn second_class(kind: FamilyKind, p: u64) -> Result<u64> {
    base_degree(kind, p)?;
    Ok(match (kind, p % 6, p % 4) {
        (FamilyKind::Modular3, 1, _) => 5 * (p - 1) / 6,
        (FamilyKind::Modular3, _, _) => (5 * p - 1) / 6,
        (FamilyKind::Hecke4, _, 1) => 3 * (p - 1) / 4,
        (FamilyKind::Hecke4, _, _) => (3 * p - 1) / 4,
    })
}

/// `(d, Q_d)` with integer coefficients; `(0, 1)` when `p | m`.
pub fn denominator_base(family: &GroupFamily, p: u64) -> Result<(u32, Poly<Integers>)> {
    let d = base_degree(family.kind, p)?;
    if family.m.is_multiple_of(p) || d == 0 {
        return Ok((0, Poly::one(Integers)));
    }
    let pair = pade_pair(&params_for(family), d as u32)?;
    let q = Poly::from_rational(Integers, &pair.q)?;
    Ok((d as u32, q))
}

/// `f_0 .. f_{len-1}` modulo `p^alpha` from the recurrence run in the residue ring.
pub fn reduce_series(family: &GroupFamily, ctx: &ModRingCtx, len: usize) -> Result<ModSeries> {
    let s = riccati_series_mod(&params_for(family), ctx, len)?;
    // spot check against the exact integers on a short prefix
    let window = len.min(16);
    let exact = riccati_series(&params_for(family), window);
    for (i, q) in exact.coeffs().iter().enumerate() {
        if ctx.from_rational(q)? != *s.coeff(i) {
            return Err(Error::IntegralityViolation(format!("reduced coefficient {i} disagrees")));
        }
    }
    Ok(s)
}

/// Which lift of the mod-`p` factors of `Q_d` the partial fractions use.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum LiftChoice {
    /// Constant term 1 and symmetric integer coefficients, e.g. `1 - 2z`.
    #[default]
    Canonical,
    /// Hensel lift of the factorization of `Q_d` itself.
    Hensel,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormConfig {
    pub seed: u64,
    pub lift: LiftChoice,
    /// Overrides the initial search length `alpha d + 2 p alpha + 64`.
    pub length: Option<usize>,
    /// Overrides the required zero run `alpha d + 32`.
    pub window: Option<usize>,
    /// Doubling stops once the search length would exceed this.
    pub max_length: usize,
}

impl Default for FormConfig {
    fn default() -> Self {
        Self { seed: 0, lift: LiftChoice::Canonical, length: None, window: None, max_length: 1 << 16 }
    }
}

/// `residue / factor^exponent`.
#[derive(Clone, Debug, PartialEq)]
pub struct Fraction {
    pub factor: ModPoly,
    pub exponent: u32,
    pub residue: ModPoly,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RationalFormModPA {
    pub ctx: ModRingCtx,
    pub family: GroupFamily,
    pub d: u32,
    pub q_base: Poly<Integers>,
    pub poly_part: ModPoly,
    pub fractions: Vec<Fraction>,
    /// `prod factor^alpha`, constant term 1.
    pub denominator: ModPoly,
    /// `poly_part * denominator + sum residue * denominator / factor^exponent`.
    pub numerator: ModPoly,
    /// Number of series terms the form was checked against.
    pub verified_terms: usize,
}

impl RationalFormModPA {
    /// Assembles a form from its displayed parts, recomputing the cleared
    /// numerator and denominator.
    pub fn from_parts(
        ctx: ModRingCtx,
        family: GroupFamily,
        d: u32,
        q_base: Poly<Integers>,
        poly_part: ModPoly,
        fractions: Vec<Fraction>,
    ) -> Result<Self> {
        let (numerator, denominator) = recombine(&poly_part, &fractions, ctx.alpha())?;
        Ok(Self { ctx, family, d, q_base, poly_part, fractions, denominator, numerator, verified_terms: 0 })
    }

    /// The distinct factors in display order.
    pub fn factors(&self) -> Vec<&ModPoly> {
        let mut out: Vec<&ModPoly> = Vec::new();
        for f in &self.fractions {
            if !out.contains(&&f.factor) {
                out.push(&f.factor);
            }
        }
        out
    }

    /// Series expansion of the form to `len` terms.
    pub fn expand(&self, len: usize) -> ModSeries {
        let raw = expand_raw(&self.numerator.values(), &self.denominator.values(), self.ctx.modulus(), len);
        Series::new(self.ctx, raw.into_iter().map(|v| self.ctx.elem(v)).collect())
    }

    /// The form evaluated at `z = 0`.
    pub fn value_at_zero(&self) -> ModElem {
        let mut acc = self.poly_part.coeff(0);
        for f in &self.fractions {
            let c0 = f.residue.coeff(0);
            let g0 = f.factor.coeff(0).pow(f.exponent as u64);
            acc = acc + c0 * g0.inverse().expect("unit constant term");
        }
        acc
    }

    /// Largest exponent with a nonzero residue for each factor.
    pub fn max_exponents(&self) -> Vec<(ModPoly, u32)> {
        self.factors()
            .into_iter()
            .map(|g| {
                let e = self
                    .fractions
                    .iter()
                    .filter(|f| &f.factor == g && !f.residue.is_zero())
                    .map(|f| f.exponent)
                    .max()
                    .unwrap_or(0);
                (g.clone(), e)
            })
            .collect()
    }
}

/// Coefficients of `num / den` modulo `m` via the linear recurrence given by
/// `den`, whose constant term must be invertible.
pub fn expand_raw(num: &[u64], den: &[u64], modulus: u64, len: usize) -> Vec<u64> {
    let ctx_inv = {
        let c = den.first().copied().unwrap_or(0) % modulus;
        let g = num_integer::Integer::extended_gcd(&(c as i64), &(modulus as i64));
        assert_eq!(g.gcd, 1, "denominator constant term is not a unit");
        g.x.rem_euclid(modulus as i64) as u64
    };
    let mut out = Vec::with_capacity(len);
    for i in 0..len {
        let mut acc = num.get(i).copied().unwrap_or(0) as u128;
        let mut neg: u128 = 0;
        for j in 1..den.len().min(i + 1) {
            neg += den[j] as u128 * out[i - j] as u128;
        }
        let m = modulus as u128;
        acc = (acc + m - neg % m) % m;
        out.push((acc * ctx_inv as u128 % m) as u64);
    }
    out
}

/// Lifts of the mod-`p` irreducible factors of `Q_base`, constant term 1, in
/// display order (descending symmetric coefficients).
pub fn denominator_factors(
    q_base: &Poly<Integers>,
    ctx: &ModRingCtx,
    lift: LiftChoice,
    seed: u64,
) -> Result<Vec<ModPoly>> {
    if q_base.degree().unwrap_or(0) == 0 {
        return Ok(Vec::new());
    }
    let fp = ctx.residue_field();
    let q_p = q_base.map(&fp, |c| fp.from_bigint(c));
    let fac = factor_mod_p(&q_p, seed)?;
    if fac.factors.iter().any(|(_, e)| *e > 1) {
        return Err(Error::NotCoprime);
    }
    let normalize = |g: &ModPoly| -> Result<ModPoly> {
        let c0 = g.coeff(0).inverse()?;
        Ok(g.scale(&c0))
    };
    let mut out = match lift {
        LiftChoice::Canonical => fac
            .factors
            .iter()
            .map(|(g, _)| {
                let g = normalize(g)?;
                Ok(Poly::new(*ctx, g.coeffs().iter().map(|c| ctx.from_i64(c.symmetric())).collect()))
            })
            .collect::<Result<Vec<_>>>()?,
        LiftChoice::Hensel => {
            let target = q_base.map(ctx, |c| ctx.from_bigint(c));
            let small: Vec<_> = fac.factors.iter().map(|(g, _)| g.clone()).collect();
            hensel_lift(&small, &target)?.factors.iter().map(|(g, _)| normalize(g)).collect::<Result<Vec<_>>>()?
        }
    };
    let key = |g: &ModPoly| g.coeffs().iter().map(|c| c.symmetric()).collect::<Vec<_>>();
    out.sort_by_key(|g| std::cmp::Reverse(key(g)));
    Ok(out)
}

/// Partial fractions of `numerator / prod factor^alpha`, where the numerator is
/// proper. Exponents run `1..=alpha` for each factor, zero residues included.
pub fn partial_fractions(numerator: &ModPoly, factors: &[ModPoly], alpha: u32) -> Result<Vec<Fraction>> {
    let ctx = *numerator.ring();
    let powers: Vec<ModPoly> = factors.iter().map(|g| g.pow(alpha)).collect();
    let den = powers.iter().fold(Poly::one(ctx), |acc, g| &acc * g);
    if numerator.degree().unwrap_or(0) >= den.degree().unwrap_or(0) && !numerator.is_zero() {
        return Err(Error::InvalidParams("numerator is not proper".into()));
    }
    let mut out = Vec::new();
    for (i, (g, gpow)) in factors.iter().zip(&powers).enumerate() {
        let others = powers
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .fold(Poly::one(ctx), |acc, (_, h)| &acc * h);
        // u = others^{-1} mod g^alpha
        let (u, _) = ext_gcd_coprime(&others, gpow, &ctx)?;
        let mut rest = (numerator * &u).rem(gpow)?;
        // g-adic digits: rest = sum_t a_t g^t, and a_t / g^(alpha - t)
        let mut digits = Vec::with_capacity(alpha as usize);
        for _ in 0..alpha {
            let (q, r) = rest.div_rem(g)?;
            digits.push(r);
            rest = q;
        }
        for s in 1..=alpha {
            out.push(Fraction { factor: g.clone(), exponent: s, residue: digits[(alpha - s) as usize].clone() });
        }
    }
    Ok(out)
}

/// Clears denominators: returns `(numerator, prod factor^alpha)`.
pub fn recombine(poly_part: &ModPoly, fractions: &[Fraction], alpha: u32) -> Result<(ModPoly, ModPoly)> {
    let ctx = *poly_part.ring();
    let mut factors: Vec<&ModPoly> = Vec::new();
    for f in fractions {
        if f.exponent == 0 || f.exponent > alpha {
            return Err(Error::InvalidParams(format!("exponent {} outside 1..={alpha}", f.exponent)));
        }
        if !factors.contains(&&f.factor) {
            factors.push(&f.factor);
        }
    }
    let den = factors.iter().fold(Poly::one(ctx), |acc, g| &acc * &g.pow(alpha));
    let mut num = poly_part * &den;
    for f in fractions {
        let cofactor = den.div_rem(&f.factor.pow(f.exponent))?.0;
        num = &num + &(&f.residue * &cofactor);
    }
    Ok((num, den))
}

/// Sizes for the zero-run search of the numerator.
fn search_sizes(cfg: &FormConfig, alpha: u32, d: u32, p: u64) -> (usize, usize) {
    let ad = alpha as usize * d as usize;
    let len = cfg.length.unwrap_or(ad + 2 * p as usize * alpha as usize + 64);
    let window = cfg.window.unwrap_or(ad + 32);
    (len, window)
}

pub fn rational_form(family: &GroupFamily, ctx: &ModRingCtx) -> Result<RationalFormModPA> {
    rational_form_with(family, ctx, &FormConfig::default())
}

/// Finds the numerator of `F mod p^alpha` over `prod factor^alpha` from the
/// reduced series, certifies it on twice the search length and splits it
/// into polynomial part and partial fractions.
pub fn rational_form_with(family: &GroupFamily, ctx: &ModRingCtx, cfg: &FormConfig) -> Result<RationalFormModPA> {
    let (d, q_base) = denominator_base(family, ctx.p())?;
    let factors = denominator_factors(&q_base, ctx, cfg.lift, cfg.seed)?;
    let alpha = ctx.alpha();
    let den = factors.iter().fold(Poly::one(*ctx), |acc, g| &acc * &g.pow(alpha));
    let (mut len, window) = search_sizes(cfg, alpha, d, ctx.p());
    loop {
        if len > cfg.max_length {
            return Err(Error::DegreeBoundExceeded { length: cfg.max_length, window });
        }
        if let Some(num) = try_numerator(family, ctx, &den, len, window)? {
            let (poly_part, rem) = num.div_rem(&den)?;
            let fractions = partial_fractions(&rem, &factors, alpha)?;
            let mut form = RationalFormModPA {
                ctx: *ctx,
                family: *family,
                d,
                q_base,
                poly_part,
                fractions,
                denominator: den,
                numerator: num,
                verified_terms: 2 * len,
            };
            let (n2, d2) = recombine(&form.poly_part, &form.fractions, alpha)?;
            debug_assert_eq!((&n2, &d2), (&form.numerator, &form.denominator));
            form.numerator = n2;
            return Ok(form);
        }
        len *= 2;
    }
}

/// The candidate numerator for search length `len`, if its trailing zero run
/// is long enough and it reproduces the series to `2 len` terms.
fn try_numerator(
    family: &GroupFamily,
    ctx: &ModRingCtx,
    den: &ModPoly,
    len: usize,
    window: usize,
) -> Result<Option<ModPoly>> {
    let series = reduce_series(family, ctx, 2 * len)?;
    let head = series.truncate(len);
    let prod = &head * &den.to_series(len);
    let last = prod.coeffs().iter().rposition(|c| !c.is_zero());
    let Some(last) = last else { return Ok(None) };
    if len - 1 - last < window {
        return Ok(None);
    }
    let num = Poly::new(*ctx, prod.coeffs()[..=last].to_vec());
    let check = series_div(&num.to_series(2 * len), &den.to_series(2 * len), 2 * len)?;
    Ok((check == series).then_some(num))
}

/// Smallest `n = d (mod p)` whose residual constant has `p`-valuation at least
/// `alpha`; factors are accumulated one by one.
pub fn pade_route_order(family: &GroupFamily, ctx: &ModRingCtx) -> Result<u32> {
    let p = ctx.p();
    let excluded = match family.kind {
        FamilyKind::Modular3 => 6 * family.m,
        FamilyKind::Hecke4 => 2 * family.m,
    };
    if excluded % p == 0 {
        return Err(Error::UnsupportedPrime { p });
    }
    let d = base_degree(family.kind, p)?;
    let params = params_for(family);
    let mut n = d;
    loop {
        let mut v: i64 = 0;
        for f in params.residual_factors(n as u32) {
            if f.is_zero() {
                v = i64::MAX;
                break;
            }
            v += vp_rational(&f, p)?;
        }
        if v >= ctx.alpha() as i64 {
            return Ok(n as u32);
        }
        n += p;
    }
}

/// `(n, P_n / Q_n mod p^alpha)` to `len` terms.
pub fn pade_route(family: &GroupFamily, ctx: &ModRingCtx, len: usize) -> Result<(u32, ModSeries)> {
    let n = pade_route_order(family, ctx)?;
    let pair = construct(&params_for(family), n)?;
    let p = Poly::from_rational(*ctx, &pair.p)?;
    let q = Poly::from_rational(*ctx, &pair.q)?;
    let s = series_div(&p.to_series(len), &q.to_series(len), len)?;
    Ok((n, s))
}

/// `Q_n mod p` for the family's parameters.
pub fn q_mod_p(family: &GroupFamily, n: u32, p: u64) -> Result<Poly<ModRingCtx>> {
    let fp = ModRingCtx::new(p, 1)?;
    let pair = pade_pair(&params_for(family), n)?;
    Poly::from_rational(fp, &pair.q)
}
