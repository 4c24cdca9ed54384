//! Formal power series solution of
//! `(1 - A z) F - B z^2 F' - C z F^2 - 1 - D z = 0` with `F(0) = 1`.

use num_traits::{One, Zero};

use crate::arith::{rat_int, BigRational, ModRingCtx};
use crate::error::{Error, Result};
use crate::poly::Series;
use crate::ring::{Rationals, Ring};

/// Parameters of the equation together with a square root `E` of `A^2 - 4CD`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RiccatiParams {
    a: BigRational,
    b: BigRational,
    c: BigRational,
    d: BigRational,
    e: BigRational,
}

impl RiccatiParams {
    pub fn new(a: BigRational, b: BigRational, c: BigRational, d: BigRational, e: BigRational) -> Result<Self> {
        if b.is_zero() {
            return Err(Error::InvalidParams("B must be nonzero".into()));
        }
        if &e * &e != &a * &a - rat_int(4) * &c * &d {
            return Err(Error::InvalidParams(format!("E = {e} is not a square root of A^2 - 4CD")));
        }
        Ok(Self { a, b, c, d, e })
    }

    pub fn from_ints(a: i64, b: i64, c: i64, d: i64, e: i64) -> Result<Self> {
        Self::new(rat_int(a), rat_int(b), rat_int(c), rat_int(d), rat_int(e))
    }

    /// Picks the nonnegative square root of `A^2 - 4CD`, which must be rational.
    pub fn with_root(a: BigRational, b: BigRational, c: BigRational, d: BigRational) -> Result<Self> {
        let disc = &a * &a - rat_int(4) * &c * &d;
        let e = rational_sqrt(&disc)
            .ok_or_else(|| Error::InvalidParams(format!("A^2 - 4CD = {disc} is not a rational square")))?;
        Self::new(a, b, c, d, e)
    }

    pub fn a(&self) -> &BigRational {
        &self.a
    }
    pub fn b(&self) -> &BigRational {
        &self.b
    }
    pub fn c(&self) -> &BigRational {
        &self.c
    }
    pub fn d(&self) -> &BigRational {
        &self.d
    }
    pub fn e(&self) -> &BigRational {
        &self.e
    }

    /// The same equation with the other square root.
    pub fn flip_e(&self) -> Self {
        Self { e: -&self.e, ..self.clone() }
    }

    /// All parameters multiplied by `t`.
    pub fn scaled(&self, t: &BigRational) -> Result<Self> {
        Self::new(&self.a * t, &self.b * t, &self.c * t, &self.d * t, &self.e * t)
    }

    pub fn is_integral(&self) -> bool {
        [&self.a, &self.b, &self.c, &self.d, &self.e].iter().all(|q| q.is_integer())
    }

    /// `(A + C + D) prod_{l=1}^{n} (l A B + A C + C D + l^2 B^2 + 2 l B C + C^2)`.
    pub fn residual_const(&self, n: u32) -> BigRational {
        self.residual_factors(n).into_iter().fold(BigRational::one(), |acc, f| acc * f)
    }

    /// The individual factors of [`Self::residual_const`], `A + C + D` first.
    pub fn residual_factors(&self, n: u32) -> Vec<BigRational> {
        let (a, b, c, d) = (&self.a, &self.b, &self.c, &self.d);
        let mut out = vec![a + c + d];
        for l in 1..=n {
            let l = rat_int(l);
            out.push(&l * a * b + a * c + c * d + &l * &l * b * b + rat_int(2) * &l * b * c + c * c);
        }
        out
    }

    /// Images of `A, B, C, D` in `ring`.
    pub fn coefficients_in<R: Ring>(&self, ring: &R) -> Result<[R::Elem; 4]> {
        Ok([
            ring.from_rational(&self.a)?,
            ring.from_rational(&self.b)?,
            ring.from_rational(&self.c)?,
            ring.from_rational(&self.d)?,
        ])
    }
}

fn rational_sqrt(q: &BigRational) -> Option<BigRational> {
    use num_traits::Signed;
    if q.is_negative() {
        return None;
    }
    let (n, d) = (q.numer().sqrt(), q.denom().sqrt());
    (BigRational::new(&n * &n, &d * &d) == *q).then(|| BigRational::new(n, d))
}

/// Series solution for arbitrary `A, B, C, D` in `ring`. Every step solves a
/// monic linear equation for the new coefficient, so no division occurs:
/// `f_m = (A + (m-1) B) f_{m-1} + C sum_{i+j=m-1} f_i f_j + [m = 1] D`.
pub fn riccati_series_in<R: Ring>(ring: &R, abcd: &[R::Elem; 4], len: usize) -> Series<R> {
    let [a, b, c, d] = abcd;
    let mut f: Vec<R::Elem> = Vec::with_capacity(len);
    if len == 0 {
        return Series::new(ring.clone(), f);
    }
    f.push(ring.one());
    for m in 1..len {
        let lin = ring.add(a, &ring.mul(&ring.from_i64(m as i64 - 1), b));
        let mut conv = ring.zero();
        for i in 0..m {
            conv = ring.add(&conv, &ring.mul(&f[i], &f[m - 1 - i]));
        }
        let mut next = ring.add(&ring.mul(&lin, &f[m - 1]), &ring.mul(c, &conv));
        if m == 1 {
            next = ring.add(&next, d);
        }
        f.push(next);
    }
    Series::new(ring.clone(), f)
}

/// Rational series solution to `len` terms.
pub fn riccati_series(params: &RiccatiParams, len: usize) -> Series<Rationals> {
    let abcd = params.coefficients_in(&Rationals).expect("rationals");
    riccati_series_in(&Rationals, &abcd, len)
}

/// Series solution over `Z/p^alpha`; fails if a parameter has a denominator
/// divisible by `p`.
pub fn riccati_series_mod(params: &RiccatiParams, ctx: &ModRingCtx, len: usize) -> Result<Series<ModRingCtx>> {
    let abcd = params.coefficients_in(ctx)?;
    let raw = riccati_series_raw(abcd.map(|x| x.value()), ctx.modulus(), len);
    Ok(Series::new(*ctx, raw.into_iter().map(|v| ctx.elem(v)).collect()))
}

/// Machine-word version of the recurrence for a modulus below `2^32`.
pub fn riccati_series_raw(abcd: [u64; 4], modulus: u64, len: usize) -> Vec<u64> {
    assert!(modulus <= u32::MAX as u64);
    let [a, b, c, d] = abcd;
    let mut f: Vec<u64> = Vec::with_capacity(len);
    if len == 0 {
        return f;
    }
    f.push(1 % modulus);
    for m in 1..len {
        let lin = (a + (m as u64 - 1) % modulus * b) % modulus;
        // symmetric convolution: each product below 2^64, accumulated in u128
        let half = m / 2;
        let mut acc: u128 = 0;
        for i in 0..half {
            acc += (f[i] * f[m - 1 - i]) as u128;
        }
        acc *= 2;
        if m % 2 == 1 {
            acc += (f[half] * f[half]) as u128;
        }
        let conv = (acc % modulus as u128) as u64;
        let mut next = (lin * f[m - 1] % modulus + c * conv % modulus) % modulus;
        if m == 1 {
            next = (next + d) % modulus;
        }
        f.push(next);
    }
    f
}
