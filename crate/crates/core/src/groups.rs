//! Lifts `C_{2m} *_{C_m} C_{3m}` of the modular group and `C_{2m} *_{C_m} C_{4m}`
//! of the Hecke group of order 4, as parameter tuples of the Riccati equation
//! satisfied by their free subgroup generating functions.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::arith::{rat, rat_int, BigRational};
use crate::error::{Error, Result};
use crate::riccati::{riccati_series, RiccatiParams};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FamilyKind {
    Modular3,
    Hecke4,
}

impl FamilyKind {
    pub fn name(&self) -> &'static str {
        match self {
            FamilyKind::Modular3 => "modular3",
            FamilyKind::Hecke4 => "hecke4",
        }
    }
}

impl std::str::FromStr for FamilyKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "modular3" => Ok(FamilyKind::Modular3),
            "hecke4" => Ok(FamilyKind::Hecke4),
            other => Err(Error::Parse(format!("unknown family {other:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GroupFamily {
    pub kind: FamilyKind,
    pub m: u64,
}

impl GroupFamily {
    pub fn new(kind: FamilyKind, m: u64) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidParams("m must be at least 1".into()));
        }
        Ok(Self { kind, m })
    }

    pub fn modular3(m: u64) -> Self {
        Self::new(FamilyKind::Modular3, m).expect("m >= 1")
    }

    pub fn hecke4(m: u64) -> Self {
        Self::new(FamilyKind::Hecke4, m).expect("m >= 1")
    }

    /// Index of the subgroups counted by `f_lambda`, divided by `lambda`.
    pub fn index_step(&self) -> u64 {
        match self.kind {
            FamilyKind::Modular3 => 6 * self.m,
            FamilyKind::Hecke4 => 4 * self.m,
        }
    }
}

impl fmt::Display for GroupFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} m={}", self.kind.name(), self.m)
    }
}

/// Modular3: `(6m-2, 6m, 1, 1-6m+5m^2)` with `E = 4m`.
/// Hecke4: `(4m-2, 4m, 1, 1-4m+3m^2)` with `E = 2m`.
pub fn params_for(family: &GroupFamily) -> RiccatiParams {
    let m = family.m as i64;
    let (a, b, d, e) = match family.kind {
        FamilyKind::Modular3 => (6 * m - 2, 6 * m, 1 - 6 * m + 5 * m * m, 4 * m),
        FamilyKind::Hecke4 => (4 * m - 2, 4 * m, 1 - 4 * m + 3 * m * m, 2 * m),
    };
    RiccatiParams::from_ints(a, b, 1, d, e).expect("family parameters satisfy E^2 = A^2 - 4CD")
}

/// `f_1 .. f_L`; `f_0 = 1` is implicit.
#[derive(Clone, Debug, PartialEq)]
pub struct SubgroupSeries {
    pub family: GroupFamily,
    pub values: Vec<BigInt>,
}

pub fn free_subgroup_numbers(family: &GroupFamily, len: usize) -> Result<SubgroupSeries> {
    if len == 0 {
        return Err(Error::InvalidParams("count must be at least 1".into()));
    }
    let s = riccati_series(&params_for(family), len + 1);
    let mut values = Vec::with_capacity(len);
    for (i, c) in s.coeffs().iter().enumerate().skip(1) {
        if !c.is_integer() || c.is_negative() {
            return Err(Error::IntegralityViolation(format!("f_{i} = {c}")));
        }
        values.push(c.to_integer());
    }
    Ok(SubgroupSeries { family: *family, values })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hecke4Invariants {
    pub m_gamma: u64,
    pub chi: BigRational,
    pub mu: BigRational,
    pub a0: u64,
    pub a1: u64,
    pub a2: u64,
}

/// `m_Gamma = 4m`, Euler characteristic `1/(2m) + 1/(4m) - 1/m`, `mu = 1 - m_Gamma chi`.
pub fn hecke4_invariants(m: u64) -> Result<Hecke4Invariants> {
    if m == 0 {
        return Err(Error::InvalidParams("m must be at least 1".into()));
    }
    let mi = m as i64;
    let chi = rat(1, 2 * mi) + rat(1, 4 * mi) - rat(1, mi);
    let m_gamma = 4 * m;
    let mu = rat_int(1) - rat_int(m_gamma) * &chi;
    Ok(Hecke4Invariants { m_gamma, chi, mu, a0: 3 * m * m, a1: 32 * m * m, a2: 16 * m * m })
}
