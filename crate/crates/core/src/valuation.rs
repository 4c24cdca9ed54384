//! p-adic valuations of the summands in the transformed denominator
//! coefficients, and the mod-p agreement of high-order denominators with `Q_d`.

use num_traits::{One, Zero};

use crate::arith::{binomial, factorial, is_prime, pochhammer, rat, rat_int, vp_rational, BigRational};
use crate::error::{Error, Result};
use crate::groups::{FamilyKind, GroupFamily};
use crate::modular::{base_degree, q_mod_p, second_class};

/// Which summand and which floor-sum display is evaluated. `Expp`/`Expp3`
/// are the first summand (shifts 5/6 over 2/3), `Expp2`/`Expp4` the second
/// (1/6 over -2/3); the first pair is for `p = 1 (mod 6)`, the second pair
/// for `p = 5 (mod 6)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variant {
    Expp,
    Expp2,
    Expp3,
    Expp4,
}

impl Variant {
    pub const ALL: [Variant; 4] = [Variant::Expp, Variant::Expp2, Variant::Expp3, Variant::Expp4];

    pub fn name(&self) -> &'static str {
        match self {
            Variant::Expp => "expp",
            Variant::Expp2 => "expp2",
            Variant::Expp3 => "expp3",
            Variant::Expp4 => "expp4",
        }
    }

    /// Residue of `p` mod 6 the variant is stated for.
    pub fn prime_class(&self) -> u64 {
        match self {
            Variant::Expp | Variant::Expp2 => 1,
            Variant::Expp3 | Variant::Expp4 => 5,
        }
    }

    /// `(x, y)` with summand ratio `(x - j)_{n+k+1} / (y - j)_{k+1}`.
    pub fn shifts(&self) -> (BigRational, BigRational) {
        match self {
            Variant::Expp | Variant::Expp3 => (rat(5, 6), rat(2, 3)),
            Variant::Expp2 | Variant::Expp4 => (rat(1, 6), rat(-2, 3)),
        }
    }
}

impl std::str::FromStr for Variant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Variant::ALL
            .into_iter()
            .find(|v| v.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown variant {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ValuationCase {
    p: u64,
    n: u64,
    k: u64,
    j: u64,
    variant: Variant,
}

impl ValuationCase {
    pub fn new(p: u64, n: u64, k: u64, j: u64, variant: Variant) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if p % 6 != variant.prime_class() {
            return Err(Error::UnsupportedPrime { p });
        }
        if !(j <= k && k <= n) {
            return Err(Error::InvalidParams(format!("need j <= k <= n, got n={n} k={k} j={j}")));
        }
        Ok(Self { p, n, k, j, variant })
    }

    pub fn p(&self) -> u64 {
        self.p
    }
    pub fn n(&self) -> u64 {
        self.n
    }
    pub fn k(&self) -> u64 {
        self.k
    }
    pub fn j(&self) -> u64 {
        self.j
    }
    pub fn variant(&self) -> Variant {
        self.variant
    }
}

/// `floor(x6 / (6 pl))`; every floor argument below is a rational with denominator 6.
fn fl(x6: i128, pl: i128) -> i128 {
    x6.div_euclid(6 * pl)
}

/// The summand of index `l` of the floor sum for `case.variant`. With
/// `as_printed`, the odd-`l` denominator terms of `Expp4` use the shifts
/// `(2P-1)/3` and `(2P-4)/3` instead of the correct `(P-2)/3` and `(P-5)/3`.
fn floor_term(case: &ValuationCase, l: u32, as_printed: bool) -> i128 {
    let pl = (case.p as i128).pow(l);
    let (n, k, j) = (case.n as i128, case.k as i128, case.j as i128);
    let common = -fl(6 * j, pl) - fl(6 * (k - j), pl);
    let top = 6 * (n + k - j);
    let first = |pl: i128| {
        fl(top + pl + 5, pl) - fl(-6 * j + pl - 1, pl) - fl(6 * (k - j) + 2 * (pl + 2), pl)
            + fl(-6 * j + 2 * (pl - 1), pl)
    };
    let second = |pl: i128| {
        fl(top + 5 * pl + 1, pl) - fl(-6 * j + 5 * (pl - 1), pl) - fl(6 * (k - j) + 4 * (pl - 1), pl)
            + fl(-6 * j + 2 * (2 * pl - 5), pl)
    };
    let odd = l % 2 == 1;
    common
        + match case.variant {
            Variant::Expp => first(pl),
            Variant::Expp2 => second(pl),
            Variant::Expp3 if !odd => first(pl),
            Variant::Expp3 => {
                fl(top + 5 * (pl + 1), pl) - fl(-6 * j + 5 * pl - 1, pl) - fl(6 * (k - j) + 4 * (pl + 1), pl)
                    + fl(-6 * j + 2 * (2 * pl - 1), pl)
            }
            Variant::Expp4 if !odd => second(pl),
            Variant::Expp4 => {
                let (a, b) = if as_printed { (2 * pl - 1, 2 * pl - 4) } else { (pl - 2, pl - 5) };
                fl(top + pl + 1, pl) - fl(-6 * j + pl - 5, pl) - fl(6 * (k - j) + 2 * a, pl) + fl(-6 * j + 2 * b, pl)
            }
        }
}

/// Smallest `l` with `p^l > 6 (n + k + 1)`.
fn truncation(case: &ValuationCase) -> u32 {
    let bound = 6 * (case.n as u128 + case.k as u128 + 1);
    let (mut l, mut pl) = (0u32, 1u128);
    while pl <= bound {
        pl *= case.p as u128;
        l += 1;
    }
    l
}

fn floor_sum(case: &ValuationCase, as_printed: bool) -> i64 {
    let top = truncation(case);
    let total: i128 = (1..=top).map(|l| floor_term(case, l, as_printed)).sum();
    assert_eq!(floor_term(case, top + 1, as_printed), 0, "floor sum does not terminate for {case:?}");
    total as i64
}

/// The floor-sum value of the summand's valuation, summed up to the truncation
/// index. The next term is checked to vanish.
pub fn legendre_vp_sum(case: &ValuationCase) -> i64 {
    floor_sum(case, false)
}

/// [`legendre_vp_sum`] with the odd-`l` `Expp4` denominator shifts of the
/// published display, which miscount multiples of `p^l` in `(-2/3 - j)_{k+1}`.
pub fn legendre_vp_sum_as_printed(case: &ValuationCase) -> i64 {
    floor_sum(case, true)
}

/// `(-1)^(k+j) / k! * C(k, j) * (x - j)_{n+k+1} / (y - j)_{k+1}`.
pub fn summand(x: &BigRational, y: &BigRational, n: u64, k: u64, j: u64) -> Result<BigRational> {
    let j_r = rat_int(j);
    let num = pochhammer(&(x - &j_r), (n + k + 1) as u32);
    let den = pochhammer(&(y - &j_r), (k + 1) as u32);
    if num.is_zero() || den.is_zero() {
        return Err(Error::DegenerateParameters(format!(
            "a Pochhammer factor vanishes for shifts ({x}, {y}) at n={n} k={k} j={j}"
        )));
    }
    let sign = if (k + j).is_multiple_of(2) { BigRational::one() } else { -BigRational::one() };
    Ok(sign * rat_int(binomial(k as i64, j as i64)) / rat_int(factorial(k)) * num / den)
}

/// Direct `p`-adic valuation of the summand with arbitrary shifts.
pub fn vp_summand(p: u64, x: &BigRational, y: &BigRational, n: u64, k: u64, j: u64) -> Result<i64> {
    vp_rational(&summand(x, y, n, k, j)?, p)
}

/// Direct valuation of the summand named by `case`.
pub fn vp_pochhammer_ratio(case: &ValuationCase) -> Result<i64> {
    let (x, y) = case.variant.shifts();
    vp_summand(case.p, &x, &y, case.n, case.k, case.j)
}

/// `q_{n, n-k}` of the `Modular3(m)` denominator through the two single sums
/// over `j` obtained after the hypergeometric transformation.
pub fn qnk_transformed(family: &GroupFamily, n: u64, k: u64) -> Result<BigRational> {
    if family.kind != FamilyKind::Modular3 {
        return Err(Error::UnsupportedFamily);
    }
    if k > n {
        return Err(Error::InvalidParams(format!("k = {k} exceeds n = {n}")));
    }
    let (x1, y1) = Variant::Expp.shifts();
    let (x2, y2) = Variant::Expp2.shifts();
    let mut sum = BigRational::zero();
    for j in 0..=k {
        sum += summand(&x1, &y1, n, k, j)? + summand(&x2, &y2, n, k, j)?;
    }
    let sign = if n.is_multiple_of(2) { BigRational::one() } else { -BigRational::one() };
    let scale = num_traits::pow(rat_int(6 * family.m), (n - k) as usize);
    Ok(sign * scale * sum)
}

/// Whether `Q_n = Q_d (mod p)` coefficientwise, `d` the base degree of the
/// family at `p`. `n` must lie in one of the two admissible classes mod `p`.
pub fn lemma_divisibility(family: &GroupFamily, p: u64, n: u64) -> Result<bool> {
    let d = base_degree(family.kind, p)?;
    let second = second_class(family.kind, p)?;
    if n % p != d % p && n % p != second % p {
        return Err(Error::InvalidCongruenceClass { n, p });
    }
    let qn = q_mod_p(family, n as u32, p)?;
    let qd = q_mod_p(family, d as u32, p)?;
    Ok(qn == qd)
}
