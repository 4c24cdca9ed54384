//! Factorization over the prime field `Z/p`.
//!
//! Linear factors come from an exhaustive root search when `p` is small. The
//! rest goes through a square-free decomposition, distinct-degree splitting and
//! a seeded Cantor-Zassenhaus equal-degree split.

use num_bigint::BigUint;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Factorization, Poly};
use crate::arith::ModRingCtx;
use crate::error::{Error, Result};

type FpPoly = Poly<ModRingCtx>;

const ROOT_SEARCH_LIMIT: u64 = 1 << 16;

fn field_check(f: &FpPoly) -> Result<()> {
    if f.ring().alpha() != 1 {
        return Err(Error::NotAField);
    }
    Ok(())
}

/// Monic gcd over a field.
pub fn gcd(a: &FpPoly, b: &FpPoly) -> Result<FpPoly> {
    field_check(a)?;
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_zero() {
        let r = a.rem(&b)?;
        a = b;
        b = r;
    }
    if a.is_zero() {
        return Ok(a);
    }
    Ok(a.monic()?.1)
}

/// `base^e mod m`.
pub fn pow_mod(base: &FpPoly, e: &BigUint, m: &FpPoly) -> Result<FpPoly> {
    let mut acc = Poly::one(*base.ring()).rem(m)?;
    let b = base.rem(m)?;
    for i in (0..e.bits()).rev() {
        acc = (&acc * &acc).rem(m)?;
        if e.bit(i) {
            acc = (&acc * &b).rem(m)?;
        }
    }
    Ok(acc)
}

fn is_one(f: &FpPoly) -> bool {
    f.degree() == Some(0)
}

/// Inverse of the Frobenius on a polynomial with `f' = 0`. Over `Z/p` every
/// element is its own p-th power.
fn pth_root(f: &FpPoly) -> FpPoly {
    let p = f.ring().p() as usize;
    let v = f.coeffs().iter().step_by(p).cloned().collect();
    Poly::new(*f.ring(), v)
}

/// Yun's algorithm adapted to characteristic `p`; input must be monic.
pub fn square_free(f: &FpPoly) -> Result<Vec<(FpPoly, u32)>> {
    field_check(f)?;
    let mut out = Vec::new();
    if f.degree().unwrap_or(0) == 0 {
        return Ok(out);
    }
    let p = f.ring().p() as u32;
    let df = f.derivative();
    if df.is_zero() {
        for (g, e) in square_free(&pth_root(f))? {
            out.push((g, e * p));
        }
        return Ok(out);
    }
    let mut c = gcd(f, &df)?;
    let mut w = f.div_rem(&c)?.0;
    let mut i = 1;
    while !is_one(&w) {
        let y = gcd(&w, &c)?;
        let z = w.div_rem(&y)?.0;
        if !is_one(&z) {
            out.push((z.monic()?.1, i));
        }
        i += 1;
        w = y;
        c = c.div_rem(&w)?.0;
    }
    if !is_one(&c) {
        for (g, e) in square_free(&pth_root(&c.monic()?.1))? {
            out.push((g, e * p));
        }
    }
    Ok(out)
}

/// Splits a square-free monic polynomial into `(product of degree-i factors, i)`.
fn distinct_degree(f: &FpPoly) -> Result<Vec<(FpPoly, usize)>> {
    let ctx = *f.ring();
    let x = Poly::monomial(ctx, ctx.one(), 1);
    let p = BigUint::from(ctx.p());
    let mut out = Vec::new();
    let mut g = f.clone();
    let mut h = x.rem(&g)?;
    let mut i = 0;
    while g.degree().unwrap_or(0) >= 2 * (i + 1) {
        i += 1;
        h = pow_mod(&h, &p, &g)?;
        let d = gcd(&g, &(&h - &x))?;
        if !is_one(&d) {
            g = g.div_rem(&d)?.0;
            h = h.rem(&g)?;
            out.push((d, i));
        }
    }
    if g.degree().unwrap_or(0) > 0 {
        let deg = g.degree().unwrap();
        out.push((g, deg));
    }
    Ok(out)
}

fn random_poly(ctx: ModRingCtx, deg: usize, rng: &mut ChaCha8Rng) -> FpPoly {
    let v = (0..deg).map(|_| ctx.elem(rng.random_range(0..ctx.p()))).collect();
    Poly::new(ctx, v)
}

/// Equal-degree split of a product of distinct monic irreducibles of degree `d`.
fn equal_degree(f: &FpPoly, d: usize, rng: &mut ChaCha8Rng) -> Result<Vec<FpPoly>> {
    let n = f.degree().unwrap_or(0);
    if n == 0 {
        return Ok(Vec::new());
    }
    if n == d {
        return Ok(vec![f.clone()]);
    }
    let ctx = *f.ring();
    let p = ctx.p();
    loop {
        let a = random_poly(ctx, n, rng);
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        let b = if p == 2 {
            // trace from GF(2^d) down to GF(2)
            let mut t = a.clone();
            let mut acc = a.clone();
            for _ in 1..d {
                t = (&t * &t).rem(f)?;
                acc = &acc + &t;
            }
            acc
        } else {
            let e = (BigUint::from(p).pow(d as u32) - BigUint::one()) / 2u32;
            &pow_mod(&a, &e, f)? - &Poly::one(ctx)
        };
        let g = gcd(f, &b)?;
        let dg = g.degree().unwrap_or(0);
        if g.is_zero() || dg == 0 || dg == n {
            continue;
        }
        let h = f.div_rem(&g)?.0.monic()?.1;
        let mut out = equal_degree(&g, d, rng)?;
        out.extend(equal_degree(&h, d, rng)?);
        return Ok(out);
    }
}

/// Complete factorization into monic irreducibles, sorted by degree and then by
/// coefficients. Identical seeds give identical work.
pub fn factor_mod_p(f: &FpPoly, seed: u64) -> Result<Factorization<ModRingCtx>> {
    field_check(f)?;
    if f.is_zero() {
        return Err(Error::InvalidParams("cannot factor the zero polynomial".into()));
    }
    let ctx = *f.ring();
    let (unit, monic) = f.monic()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut factors: Vec<(FpPoly, u32)> = Vec::new();

    for (part, e) in square_free(&monic)? {
        let mut rest = part;
        if ctx.p() <= ROOT_SEARCH_LIMIT {
            for x in 0..ctx.p() {
                if rest.degree().unwrap_or(0) == 0 {
                    break;
                }
                let r = ctx.elem(x);
                if rest.eval(&r).is_zero() {
                    let lin = Poly::new(ctx, vec![-r, ctx.one()]);
                    rest = rest.div_rem(&lin)?.0;
                    factors.push((lin, e));
                }
            }
        }
        if rest.degree().unwrap_or(0) == 0 {
            continue;
        }
        for (block, d) in distinct_degree(&rest)? {
            for g in equal_degree(&block, d, &mut rng)? {
                factors.push((g, e));
            }
        }
    }
    factors.sort_by(|(a, ea), (b, eb)| {
        (a.degree(), a.values(), ea).cmp(&(b.degree(), b.values(), eb))
    });
    Ok(Factorization { unit, factors })
}
