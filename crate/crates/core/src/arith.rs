//! Exact integers and rationals, Pochhammer symbols, p-adic valuations and
//! the residue rings Z/p^alpha.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub use num_rational::BigRational;

/// Builds the rational `num/den`. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_int(v: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(v.into())
}

/// Rising factorial `a (a+1) ... (a+m-1)`; the empty product for `m = 0`.
pub fn pochhammer(a: &BigRational, m: u32) -> BigRational {
    let mut acc = BigRational::one();
    let mut x = a.clone();
    for _ in 0..m {
        if x.is_zero() {
            return BigRational::zero();
        }
        acc *= &x;
        x += BigRational::one();
    }
    acc
}

/// Binomial coefficient, zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// Trial division up to `sqrt(n)`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Exponent of `p` in a nonzero integer.
pub fn vp_int(n: &BigInt, p: u64) -> Result<i64> {
    if n.is_zero() {
        return Err(Error::ZeroValuation);
    }
    let p = BigInt::from(p);
    let mut n = n.abs();
    let mut v = 0;
    loop {
        let (q, r) = n.div_rem(&p);
        if !r.is_zero() {
            return Ok(v);
        }
        n = q;
        v += 1;
    }
}

/// `v_p(numerator) - v_p(denominator)`.
pub fn vp_rational(q: &BigRational, p: u64) -> Result<i64> {
    if q.is_zero() {
        return Err(Error::ZeroValuation);
    }
    Ok(vp_int(q.numer(), p)? - vp_int(q.denom(), p)?)
}

/// The ring Z/p^alpha with a prime `p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ModRingCtx {
    p: u64,
    alpha: u32,
    modulus: u64,
}

impl ModRingCtx {
    /// Moduli are capped at `u32::MAX` so that products of two residues fit
    /// into a `u64`.
    pub fn new(p: u64, alpha: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if alpha == 0 {
            return Err(Error::InvalidModulus("alpha must be positive".into()));
        }
        let modulus = p
            .checked_pow(alpha)
            .filter(|&m| m <= u32::MAX as u64)
            .ok_or_else(|| Error::InvalidModulus(format!("{p}^{alpha} exceeds 32 bits")))?;
        Ok(Self { p, alpha, modulus })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn alpha(&self) -> u32 {
        self.alpha
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// The residue field Z/p of this ring.
    pub fn residue_field(&self) -> Self {
        Self { p: self.p, alpha: 1, modulus: self.p }
    }

    pub fn with_alpha(&self, alpha: u32) -> Result<Self> {
        Self::new(self.p, alpha)
    }

    pub fn elem(&self, v: u64) -> ModElem {
        ModElem { value: v % self.modulus, ctx: *self }
    }

    pub fn from_i64(&self, v: i64) -> ModElem {
        self.elem(v.rem_euclid(self.modulus as i64) as u64)
    }

    pub fn from_bigint(&self, v: &BigInt) -> ModElem {
        let m = BigInt::from(self.modulus);
        let r = v.mod_floor(&m);
        self.elem(r.to_u64().expect("residue fits u64"))
    }

    pub fn zero(&self) -> ModElem {
        self.elem(0)
    }

    pub fn one(&self) -> ModElem {
        self.elem(1)
    }
}

impl fmt::Display for ModRingCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z/{}^{}", self.p, self.alpha)
    }
}

/// A residue in `[0, p^alpha)` tagged with its ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ModElem {
    value: u64,
    ctx: ModRingCtx,
}

impl ModElem {
    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn ctx(&self) -> ModRingCtx {
        self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    pub fn is_unit(&self) -> bool {
        !self.value.is_multiple_of(self.ctx.p)
    }

    /// Representative in `(-m/2, m/2]`.
    pub fn symmetric(&self) -> i64 {
        let m = self.ctx.modulus;
        if self.value > m / 2 {
            self.value as i64 - m as i64
        } else {
            self.value as i64
        }
    }

    pub fn pow(&self, mut e: u64) -> ModElem {
        let mut base = *self;
        let mut acc = self.ctx.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    pub fn pow_big(&self, e: &BigUint) -> ModElem {
        let mut acc = self.ctx.one();
        for i in (0..e.bits()).rev() {
            acc = acc * acc;
            if e.bit(i) {
                acc = acc * *self;
            }
        }
        acc
    }

    pub fn inverse(&self) -> Result<ModElem> {
        mod_inverse(self)
    }
}

impl fmt::Display for ModElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Add for ModElem {
    type Output = ModElem;
    fn add(self, rhs: ModElem) -> ModElem {
        debug_assert_eq!(self.ctx, rhs.ctx);
        let m = self.ctx.modulus;
        let s = self.value + rhs.value;
        ModElem { value: if s >= m { s - m } else { s }, ctx: self.ctx }
    }
}

impl Sub for ModElem {
    type Output = ModElem;
    fn sub(self, rhs: ModElem) -> ModElem {
        debug_assert_eq!(self.ctx, rhs.ctx);
        let m = self.ctx.modulus;
        let v = if self.value >= rhs.value { self.value - rhs.value } else { self.value + m - rhs.value };
        ModElem { value: v, ctx: self.ctx }
    }
}

impl Mul for ModElem {
    type Output = ModElem;
    fn mul(self, rhs: ModElem) -> ModElem {
        debug_assert_eq!(self.ctx, rhs.ctx);
        ModElem { value: self.value * rhs.value % self.ctx.modulus, ctx: self.ctx }
    }
}

impl Neg for ModElem {
    type Output = ModElem;
    fn neg(self) -> ModElem {
        let m = self.ctx.modulus;
        ModElem { value: if self.value == 0 { 0 } else { m - self.value }, ctx: self.ctx }
    }
}

/// Reduces a p-integral rational into Z/p^alpha.
pub fn mod_reduce(q: &BigRational, ctx: &ModRingCtx) -> Result<ModElem> {
    let p = BigInt::from(ctx.p);
    if q.denom().is_multiple_of(&p) {
        return Err(Error::NonInvertibleDenominator { p: ctx.p });
    }
    let num = ctx.from_bigint(q.numer());
    let den = ctx.from_bigint(q.denom());
    Ok(num * mod_inverse(&den)?)
}

/// Inverse via the extended Euclidean algorithm.
pub fn mod_inverse(x: &ModElem) -> Result<ModElem> {
    let m = x.ctx.modulus as i64;
    let g = (x.value as i64).extended_gcd(&m);
    if g.gcd != 1 {
        return Err(Error::NonInvertible { value: x.value, modulus: x.ctx.modulus });
    }
    Ok(x.ctx.from_i64(g.x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn pochhammer_examples() {
        assert_eq!(pochhammer(&rat(3, 7), 0), rat(1, 1));
        assert_eq!(pochhammer(&rat(5, 6), 2), rat(55, 36));
        assert_eq!(pochhammer(&rat(-2, 1), 3), rat(0, 1));
    }

    #[test]
    fn valuation_examples() {
        assert_eq!(vp_rational(&rat(77, 6), 7).unwrap(), 1);
        assert_eq!(vp_rational(&rat(1, 49), 7).unwrap(), -2);
        assert_eq!(vp_rational(&rat(55, 36), 5).unwrap(), 1);
        assert_eq!(vp_rational(&rat(0, 1), 5), Err(Error::ZeroValuation));
    }

    #[test]
    fn reduce_examples() {
        let c7 = ModRingCtx::new(7, 1).unwrap();
        assert_eq!(mod_reduce(&rat(1, 2), &c7).unwrap().value(), 4);
        let c75 = ModRingCtx::new(7, 5).unwrap();
        assert_eq!(mod_reduce(&rat(5, 1), &c75).unwrap().value(), 5);
        assert_eq!(mod_reduce(&rat(1, 7), &c7), Err(Error::NonInvertibleDenominator { p: 7 }));
        assert_eq!(mod_reduce(&rat(-3, 4), &c7).unwrap().value(), 1);
    }

    #[test]
    fn inverse_examples() {
        let c = ModRingCtx::new(7, 5).unwrap();
        // brute force oracle
        let oracle = (0..c.modulus()).find(|x| 2 * x % c.modulus() == 1).unwrap();
        assert_eq!(oracle, 8404);
        assert_eq!(mod_inverse(&c.elem(2)).unwrap().value(), 8404);
        assert_eq!(mod_inverse(&c.elem(1)).unwrap().value(), 1);
        let c2 = ModRingCtx::new(7, 2).unwrap();
        assert!(matches!(mod_inverse(&c2.elem(7)), Err(Error::NonInvertible { .. })));
    }

    #[test]
    fn ctx_validation() {
        assert_eq!(ModRingCtx::new(15, 1), Err(Error::NotPrime(15)));
        assert_eq!(ModRingCtx::new(1, 1), Err(Error::NotPrime(1)));
        assert!(ModRingCtx::new(7, 0).is_err());
        assert!(ModRingCtx::new(7, 40).is_err());
        assert_eq!(ModRingCtx::new(13, 5).unwrap().modulus(), 371293);
    }

    #[test]
    fn binomial_edges() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(4, 5), BigInt::zero());
        assert_eq!(binomial(3, -1), BigInt::zero());
        assert_eq!(binomial(0, 0), BigInt::one());
    }

    fn small_rat() -> impl Strategy<Value = BigRational> {
        (-40i64..40, 1i64..30).prop_map(|(n, d)| rat(n, d))
    }

    fn nonzero_rat() -> impl Strategy<Value = BigRational> {
        small_rat().prop_filter("nonzero", |q| !q.is_zero())
    }

    proptest! {
        #[test]
        fn pochhammer_composes(a in small_rat(), m in 0u32..=20, n in 0u32..=20) {
            let lhs = pochhammer(&a, m + n);
            let rhs = pochhammer(&a, m) * pochhammer(&(a.clone() + rat_int(m)), n);
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn valuation_is_additive(q in nonzero_rat(), r in nonzero_rat(), p in prop::sample::select(vec![2u64, 3, 5, 7, 11])) {
            let prod = &q * &r;
            prop_assert_eq!(vp_rational(&prod, p).unwrap(), vp_rational(&q, p).unwrap() + vp_rational(&r, p).unwrap());
        }

        #[test]
        fn reduction_is_a_homomorphism(qn in -500i64..500, qd in 1i64..60, rn in -500i64..500, rd in 1i64..60, alpha in 1u32..4) {
            let ctx = ModRingCtx::new(7, alpha).unwrap();
            prop_assume!(qd % 7 != 0 && rd % 7 != 0);
            let q = rat(qn, qd);
            let r = rat(rn, rd);
            let (a, b) = (mod_reduce(&q, &ctx).unwrap(), mod_reduce(&r, &ctx).unwrap());
            prop_assert_eq!(mod_reduce(&(&q + &r), &ctx).unwrap(), a + b);
            prop_assert_eq!(mod_reduce(&(&q * &r), &ctx).unwrap(), a * b);
        }
    }
}
