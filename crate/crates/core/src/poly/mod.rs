//! Dense univariate polynomials and truncated power series over a [`Ring`].

pub mod factor;
pub mod lift;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Signed;

use crate::arith::{BigRational, ModRingCtx};
use crate::error::{Error, Result};
use crate::ring::{Integers, Rationals, Ring};

pub use factor::factor_mod_p;
pub use lift::{ext_gcd_coprime, hensel_lift};

/// Coefficients are stored constant term first, without trailing zeros.
#[derive(Clone, Debug, PartialEq)]
pub struct Poly<R: Ring> {
    ring: R,
    coeffs: Vec<R::Elem>,
}

impl<R: Ring> Poly<R> {
    pub fn new(ring: R, mut coeffs: Vec<R::Elem>) -> Self {
        while coeffs.last().is_some_and(|c| ring.is_zero(c)) {
            coeffs.pop();
        }
        Self { ring, coeffs }
    }

    pub fn from_i64s(ring: R, coeffs: &[i64]) -> Self {
        let v = coeffs.iter().map(|&c| ring.from_i64(c)).collect();
        Self::new(ring, v)
    }

    pub fn zero(ring: R) -> Self {
        Self { ring, coeffs: Vec::new() }
    }

    pub fn one(ring: R) -> Self {
        let one = ring.one();
        Self::new(ring, vec![one])
    }

    pub fn constant(ring: R, c: R::Elem) -> Self {
        Self::new(ring, vec![c])
    }

    /// `c z^k`
    pub fn monomial(ring: R, c: R::Elem, k: usize) -> Self {
        let mut v = vec![ring.zero(); k];
        v.push(c);
        Self::new(ring, v)
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn coeffs(&self) -> &[R::Elem] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R::Elem> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> R::Elem {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.ring.zero())
    }

    pub fn lead(&self) -> Option<&R::Elem> {
        self.coeffs.last()
    }

    fn same_ring(&self, other: &Self) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        let r = &self.ring;
        let n = self.coeffs.len().max(other.coeffs.len());
        let v = (0..n).map(|i| r.add(&self.coeff(i), &other.coeff(i))).collect();
        Ok(Self::new(r.clone(), v))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        let r = &self.ring;
        let n = self.coeffs.len().max(other.coeffs.len());
        let v = (0..n).map(|i| r.sub(&self.coeff(i), &other.coeff(i))).collect();
        Ok(Self::new(r.clone(), v))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        let r = &self.ring;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(r.clone()));
        }
        let mut v = vec![r.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if r.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                v[i + j] = r.add(&v[i + j], &r.mul(a, b));
            }
        }
        Ok(Self::new(r.clone(), v))
    }

    pub fn scale(&self, c: &R::Elem) -> Self {
        let v = self.coeffs.iter().map(|a| self.ring.mul(a, c)).collect();
        Self::new(self.ring.clone(), v)
    }

    /// Multiplication by `z^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut v = vec![self.ring.zero(); k];
        v.extend(self.coeffs.iter().cloned());
        Self::new(self.ring.clone(), v)
    }

    /// Keeps the coefficients of `z^0 .. z^(n-1)`.
    pub fn truncate(&self, n: usize) -> Self {
        Self::new(self.ring.clone(), self.coeffs.iter().take(n).cloned().collect())
    }

    pub fn derivative(&self) -> Self {
        let r = &self.ring;
        let v = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| r.mul(&r.from_i64(i as i64), c))
            .collect();
        Self::new(r.clone(), v)
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &R::Elem) -> R::Elem {
        let r = &self.ring;
        self.coeffs.iter().rev().fold(r.zero(), |acc, c| r.add(&r.mul(&acc, x), c))
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.ring.clone());
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Euclidean division by a polynomial whose leading coefficient is a unit.
    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self)> {
        self.same_ring(d)?;
        let r = &self.ring;
        let lead = d.lead().ok_or(Error::NonUnitLeadingCoefficient)?;
        let inv = r.inv(lead).ok_or(Error::NonUnitLeadingCoefficient)?;
        let dd = d.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(r.clone()), self.clone()));
        }
        let mut q = vec![r.zero(); rem.len() - dd];
        for i in (0..q.len()).rev() {
            let c = r.mul(&rem[i + dd], &inv);
            if r.is_zero(&c) {
                continue;
            }
            for (j, dj) in d.coeffs.iter().enumerate() {
                rem[i + j] = r.sub(&rem[i + j], &r.mul(&c, dj));
            }
            q[i] = c;
        }
        rem.truncate(dd);
        Ok((Self::new(r.clone(), q), Self::new(r.clone(), rem)))
    }

    pub fn rem(&self, d: &Self) -> Result<Self> {
        Ok(self.div_rem(d)?.1)
    }

    /// Returns `(lead, self / lead)`.
    pub fn monic(&self) -> Result<(R::Elem, Self)> {
        let lead = self.lead().ok_or(Error::NonUnitLeadingCoefficient)?.clone();
        let inv = self.ring.inv(&lead).ok_or(Error::NonUnitLeadingCoefficient)?;
        Ok((lead, self.scale(&inv)))
    }

    /// Coefficient-wise image in another ring.
    pub fn map<S: Ring>(&self, target: &S, f: impl Fn(&R::Elem) -> S::Elem) -> Poly<S> {
        Poly::new(target.clone(), self.coeffs.iter().map(f).collect())
    }

    pub fn to_series(&self, len: usize) -> Series<R> {
        let v = (0..len).map(|i| self.coeff(i)).collect();
        Series { ring: self.ring.clone(), coeffs: v }
    }
}

impl<R: Ring> Poly<R> {
    /// Image of a rational polynomial, failing where the ring map is undefined.
    pub fn from_rational(ring: R, p: &Poly<Rationals>) -> Result<Self> {
        let v = p.coeffs.iter().map(|c| ring.from_rational(c)).collect::<Result<Vec<_>>>()?;
        Ok(Self::new(ring, v))
    }
}

impl Poly<ModRingCtx> {
    /// Reduction to `Z/p^beta` for `beta <= alpha`.
    pub fn reduce_to(&self, ctx: &ModRingCtx) -> Self {
        assert_eq!(ctx.p(), self.ring.p());
        assert!(ctx.alpha() <= self.ring.alpha());
        self.map(ctx, |c| ctx.elem(c.value()))
    }

    /// Canonical lift of a polynomial over a smaller power of `p`.
    pub fn lift_to(&self, ctx: &ModRingCtx) -> Self {
        assert_eq!(ctx.p(), self.ring.p());
        self.map(ctx, |c| ctx.elem(c.value()))
    }

    pub fn values(&self) -> Vec<u64> {
        self.coeffs.iter().map(|c| c.value()).collect()
    }
}

impl Poly<Rationals> {
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_i64s(Rationals, coeffs)
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $checked:ident) => {
        impl<R: Ring> $tr for &Poly<R> {
            type Output = Poly<R>;
            fn $m(self, rhs: &Poly<R>) -> Poly<R> {
                self.$checked(rhs).expect("polynomials over different rings")
            }
        }
        impl<R: Ring> $tr for Poly<R> {
            type Output = Poly<R>;
            fn $m(self, rhs: Poly<R>) -> Poly<R> {
                (&self).$m(&rhs)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl<R: Ring> Neg for &Poly<R> {
    type Output = Poly<R>;
    fn neg(self) -> Poly<R> {
        let v = self.coeffs.iter().map(|c| self.ring.neg(c)).collect();
        Poly::new(self.ring.clone(), v)
    }
}

/// Sign and magnitude of a coefficient for display.
pub trait DisplayCoeff: Ring {
    fn parts(&self, c: &Self::Elem) -> (bool, String);
}

impl DisplayCoeff for Rationals {
    fn parts(&self, c: &BigRational) -> (bool, String) {
        (c.is_negative(), c.abs().to_string())
    }
}

impl DisplayCoeff for Integers {
    fn parts(&self, c: &num_bigint::BigInt) -> (bool, String) {
        (c.is_negative(), c.abs().to_string())
    }
}

impl DisplayCoeff for ModRingCtx {
    fn parts(&self, c: &crate::arith::ModElem) -> (bool, String) {
        (false, c.value().to_string())
    }
}

impl<R: DisplayCoeff> fmt::Display for Poly<R> {
    /// Ascending powers of `z`, e.g. `1 - 7z + 91z^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if self.ring.is_zero(c) {
                continue;
            }
            let (neg, mag) = self.ring.parts(c);
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
                (true, false) => {}
            }
            first = false;
            let mag = if i > 0 && mag == "1" { String::new() } else { mag };
            match i {
                0 => write!(f, "{mag}")?,
                1 => write!(f, "{mag}z")?,
                _ => write!(f, "{mag}z^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// A power series known modulo `z^len`.
#[derive(Clone, Debug, PartialEq)]
pub struct Series<R: Ring> {
    ring: R,
    coeffs: Vec<R::Elem>,
}

impl<R: Ring> Series<R> {
    pub fn new(ring: R, coeffs: Vec<R::Elem>) -> Self {
        Self { ring, coeffs }
    }

    pub fn from_poly(p: &Poly<R>, len: usize) -> Self {
        p.to_series(len)
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[R::Elem] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R::Elem> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &R::Elem {
        &self.coeffs[i]
    }

    pub fn truncate(&self, len: usize) -> Self {
        assert!(len <= self.len(), "cannot extend a truncated series");
        Self { ring: self.ring.clone(), coeffs: self.coeffs[..len].to_vec() }
    }

    pub fn to_poly(&self) -> Poly<R> {
        Poly::new(self.ring.clone(), self.coeffs.clone())
    }

    /// Product modulo `z^min(len)`.
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        let r = &self.ring;
        let n = self.len().min(other.len());
        let mut v = vec![r.zero(); n];
        for (i, a) in self.coeffs.iter().take(n).enumerate() {
            if r.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(n - i).enumerate() {
                v[i + j] = r.add(&v[i + j], &r.mul(a, b));
            }
        }
        Ok(Self { ring: r.clone(), coeffs: v })
    }

    pub fn map<S: Ring>(&self, target: &S, f: impl Fn(&R::Elem) -> S::Elem) -> Series<S> {
        Series { ring: target.clone(), coeffs: self.coeffs.iter().map(f).collect() }
    }
}

impl<R: Ring> Mul for &Series<R> {
    type Output = Series<R>;
    fn mul(self, rhs: &Series<R>) -> Series<R> {
        self.checked_mul(rhs).expect("series over different rings")
    }
}

/// `num / den` modulo `z^len`; both inputs must be known to at least `len` terms.
pub fn series_div<R: Ring>(num: &Series<R>, den: &Series<R>, len: usize) -> Result<Series<R>> {
    if num.ring != den.ring {
        return Err(Error::RingMismatch);
    }
    if num.len() < len || den.len() < len {
        return Err(Error::InvalidParams(format!(
            "series of lengths {} and {} cannot be divided to {len} terms",
            num.len(),
            den.len()
        )));
    }
    let r = &num.ring;
    if len == 0 {
        return Ok(Series::new(r.clone(), Vec::new()));
    }
    let inv = r.inv(&den.coeffs[0]).ok_or(Error::NonInvertibleConstantTerm)?;
    let support = den.coeffs[..len].iter().rposition(|c| !r.is_zero(c)).unwrap_or(0);
    let mut out: Vec<R::Elem> = Vec::with_capacity(len);
    for i in 0..len {
        let mut acc = num.coeffs[i].clone();
        for j in 1..=support.min(i) {
            acc = r.sub(&acc, &r.mul(&den.coeffs[j], &out[i - j]));
        }
        out.push(r.mul(&acc, &inv));
    }
    Ok(Series::new(r.clone(), out))
}

/// `unit * prod(factor^mult)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Factorization<R: Ring> {
    pub unit: R::Elem,
    pub factors: Vec<(Poly<R>, u32)>,
}

impl<R: Ring> Factorization<R> {
    pub fn expand(&self, ring: &R) -> Poly<R> {
        self.factors
            .iter()
            .fold(Poly::constant(ring.clone(), self.unit.clone()), |acc, (f, e)| &acc * &f.pow(*e))
    }
}
