//! Bezout cofactors and Hensel lifting over `Z/p^alpha`.

use super::factor::gcd;
use super::{Factorization, Poly};
use crate::arith::ModRingCtx;
use crate::error::{Error, Result};
use crate::ring::Ring;

type ModPoly = Poly<ModRingCtx>;

/// Extended Euclid over `Z/p`: returns `(s, t)` with `s a + t b = 1`.
fn bezout_mod_p(a: &ModPoly, b: &ModPoly) -> Result<(ModPoly, ModPoly)> {
    let ctx = *a.ring();
    debug_assert_eq!(ctx.alpha(), 1);
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (Poly::one(ctx), Poly::zero(ctx));
    let (mut t0, mut t1) = (Poly::zero(ctx), Poly::one(ctx));
    while !r1.is_zero() {
        let (q, r) = r0.div_rem(&r1)?;
        let s2 = &s0 - &(&q * &s1);
        let t2 = &t0 - &(&q * &t1);
        (r0, r1) = (r1, r);
        (s0, s1) = (s1, s2);
        (t0, t1) = (t1, t2);
    }
    if r0.degree() != Some(0) {
        return Err(Error::NotCoprime);
    }
    let inv = ctx.inv(&r0.coeffs()[0]).ok_or(Error::NotCoprime)?;
    Ok((s0.scale(&inv), t0.scale(&inv)))
}

/// Exact division, failing unless the remainder vanishes.
fn exact_div(a: &ModPoly, b: &ModPoly) -> Result<ModPoly> {
    let (q, r) = a.div_rem(b)?;
    if !r.is_zero() {
        return Err(Error::LiftMismatch);
    }
    Ok(q)
}

/// Cofactors `(u, v)` with `u f + v g = 1` over `Z/p^alpha`, `deg u < deg g`
/// and `deg v < deg f`. One of `f`, `g` needs a unit leading coefficient.
pub fn ext_gcd_coprime(f: &ModPoly, g: &ModPoly, ctx: &ModRingCtx) -> Result<(ModPoly, ModPoly)> {
    if f.ring() != ctx || g.ring() != ctx {
        return Err(Error::RingMismatch);
    }
    let fp = ctx.residue_field();
    let (s, t) = bezout_mod_p(&f.reduce_to(&fp), &g.reduce_to(&fp))?;
    let (u0, v0) = (s.lift_to(ctx), t.lift_to(ctx));
    let one = Poly::one(*ctx);
    // u0 f + v0 g = 1 - r with r divisible by p, so multiply by 1 + r + ... + r^(alpha-1)
    let r = &one - &(&(&u0 * f) + &(&v0 * g));
    let mut sum = one.clone();
    let mut term = one.clone();
    for _ in 1..ctx.alpha() {
        term = &term * &r;
        sum = &sum + &term;
    }
    let (u1, v1) = (&u0 * &sum, &v0 * &sum);
    let unit_lead = |h: &ModPoly| h.lead().is_some_and(|c| c.is_unit());
    if unit_lead(g) {
        let u = u1.rem(g)?;
        let v = exact_div(&(&one - &(&u * f)), g)?;
        Ok((u, v))
    } else if unit_lead(f) {
        let v = v1.rem(f)?;
        let u = exact_div(&(&one - &(&v * g)), f)?;
        Ok((u, v))
    } else {
        Err(Error::NonUnitLeadingCoefficient)
    }
}

/// Lifts a coprime factorization of `target mod p` into monic factors over the
/// ring of `target`. The factors are given over `Z/p`; the returned unit is the
/// leading coefficient of `target`.
pub fn hensel_lift(factors: &[ModPoly], target: &ModPoly) -> Result<Factorization<ModRingCtx>> {
    let ctx = *target.ring();
    let fp = ctx.residue_field();
    let unit = *target.lead().ok_or(Error::NonUnitLeadingCoefficient)?;
    let inv = ctx.inv(&unit).ok_or(Error::NonUnitLeadingCoefficient)?;
    let t = target.scale(&inv);

    let mut base = Vec::with_capacity(factors.len());
    for g in factors {
        if g.ring() != &fp {
            return Err(Error::RingMismatch);
        }
        base.push(g.monic()?.1);
    }
    let prod = base.iter().fold(Poly::one(fp), |acc, g| &acc * g);
    if prod != t.reduce_to(&fp) {
        return Err(Error::LiftMismatch);
    }
    for (i, a) in base.iter().enumerate() {
        for b in &base[i + 1..] {
            if gcd(a, b)?.degree() != Some(0) {
                return Err(Error::NotCoprime);
            }
        }
    }
    // s_i = (prod_{j != i} g_j)^{-1} mod g_i
    let mut inverses = Vec::with_capacity(base.len());
    for (i, g) in base.iter().enumerate() {
        let others = base
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .fold(Poly::one(fp), |acc, (_, h)| &acc * h);
        inverses.push(bezout_mod_p(&others, g)?.0);
    }

    let mut lifted: Vec<ModPoly> = base.iter().map(|g| g.lift_to(&ctx)).collect();
    let mut pk = 1u64;
    for _ in 1..ctx.alpha() {
        pk *= ctx.p();
        let prod = lifted.iter().fold(Poly::one(ctx), |acc, g| &acc * g);
        let diff = &t - &prod;
        let e = Poly::new(fp, diff.coeffs().iter().map(|c| fp.elem(c.value() / pk)).collect());
        for ((g, s), big) in base.iter().zip(&inverses).zip(lifted.iter_mut()) {
            let delta = (&e * s).rem(g)?;
            let step = delta.lift_to(&ctx).scale(&ctx.elem(pk));
            *big = &*big + &step;
        }
    }
    Ok(Factorization { unit, factors: lifted.into_iter().map(|g| (g, 1)).collect() })
}
