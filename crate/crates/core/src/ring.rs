//! The coefficient rings polynomials and series are built over.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::arith::{mod_inverse, mod_reduce, BigRational, ModElem, ModRingCtx};
use crate::error::{Error, Result};

pub trait Ring: Clone + Debug + PartialEq {
    type Elem: Clone + Debug + PartialEq;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn from_bigint(&self, v: &BigInt) -> Self::Elem;
    /// Multiplicative inverse, if `a` is a unit.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    /// Image of a rational number, when it is defined.
    fn from_rational(&self, q: &BigRational) -> Result<Self::Elem>;

    fn from_i64(&self, v: i64) -> Self::Elem {
        self.from_bigint(&BigInt::from(v))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct Rationals;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct Integers;

impl Ring for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn from_bigint(&self, v: &BigInt) -> BigRational {
        BigRational::from_integer(v.clone())
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        (!a.is_zero()).then(|| a.recip())
    }
    fn from_rational(&self, q: &BigRational) -> Result<BigRational> {
        Ok(q.clone())
    }
}

impl Ring for Integers {
    type Elem = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a - b
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn from_bigint(&self, v: &BigInt) -> BigInt {
        v.clone()
    }
    fn inv(&self, a: &BigInt) -> Option<BigInt> {
        a.abs().is_one().then(|| a.clone())
    }
    fn from_rational(&self, q: &BigRational) -> Result<BigInt> {
        if q.denom().is_one() {
            Ok(q.numer().clone())
        } else {
            Err(Error::IntegralityViolation(format!("{q} is not an integer")))
        }
    }
}

impl Ring for ModRingCtx {
    type Elem = ModElem;

    fn zero(&self) -> ModElem {
        self.elem(0)
    }
    fn one(&self) -> ModElem {
        self.elem(1)
    }
    fn is_zero(&self, a: &ModElem) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &ModElem, b: &ModElem) -> ModElem {
        *a + *b
    }
    fn sub(&self, a: &ModElem, b: &ModElem) -> ModElem {
        *a - *b
    }
    fn neg(&self, a: &ModElem) -> ModElem {
        -*a
    }
    fn mul(&self, a: &ModElem, b: &ModElem) -> ModElem {
        *a * *b
    }
    fn from_bigint(&self, v: &BigInt) -> ModElem {
        ModRingCtx::from_bigint(self, v)
    }
    fn from_i64(&self, v: i64) -> ModElem {
        ModRingCtx::from_i64(self, v)
    }
    fn inv(&self, a: &ModElem) -> Option<ModElem> {
        mod_inverse(a).ok()
    }
    fn from_rational(&self, q: &BigRational) -> Result<ModElem> {
        mod_reduce(q, self)
    }
}
