//! Diagonal Padé approximants `P_n / Q_n` of the Riccati series.
//!
//! Coefficients come from the hypergeometric closed form when its
//! denominators are nonzero. [`construct`] falls back to solving the linear
//! Padé system on the series itself, which needs neither `E` nor `C != 0`.

use num_traits::{One, Zero};

use crate::arith::{binomial, pochhammer, rat_int, BigRational};
use crate::error::{Error, Result};
use crate::poly::{series_div, Poly, Series};
use crate::riccati::{riccati_series, RiccatiParams};
use crate::ring::Rationals;

type QPoly = Poly<Rationals>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Route {
    ClosedForm,
    Oracle,
}

impl Route {
    pub fn label(&self) -> &'static str {
        match self {
            Route::ClosedForm => "closed-form",
            Route::Oracle => "oracle",
        }
    }
}

/// `P_n`, `Q_n` with `P(0) = Q(0) = 1`, and the positive residual constant
/// `R` such that `P/Q` misses the equation by `-R z^(2n+1) / Q^2`.
#[derive(Clone, Debug, PartialEq)]
pub struct PadePair {
    pub n: u32,
    pub p: QPoly,
    pub q: QPoly,
    pub residual_const: BigRational,
    pub route: Route,
}

impl PadePair {
    /// Expansion of `P/Q` to `len` terms.
    pub fn series(&self, len: usize) -> Series<Rationals> {
        series_div(&self.p.to_series(len), &self.q.to_series(len), len).expect("Q(0) = 1")
    }
}

fn degenerate(msg: impl Into<String>) -> Error {
    Error::DegenerateParameters(msg.into())
}

/// The bracket multiplying the `j`-th summand of the numerator sums. `sign`
/// is -1 in the first sum and +1 in the second. For `k = j = 0` it is `A -+ E`.
fn bracket(params: &RiccatiParams, k: u32, j: u32, sign: i64) -> BigRational {
    let (a, b, e) = (params.a(), params.b(), params.e());
    let s = rat_int(sign);
    if k + j == 0 {
        return a + s * e;
    }
    let kj = rat_int(k + j);
    a + rat_int(2 * k * j) / &kj * b + s * rat_int(k as i64 - j as i64) / kj * e
}

/// Shared core of both closed forms, for the coefficient of `z^(n-k)`.
fn closed_form(params: &RiccatiParams, n: u32, k: u32, numerator: bool) -> Result<BigRational> {
    let (a, b, c, e) = (params.a(), params.b(), params.c(), params.e());
    let eb = e / b;
    let den = pochhammer(&(&eb - rat_int(k)), 2 * k + 1);
    if den.is_zero() {
        return Err(degenerate(format!("E/B = {eb} lies in [-{k}, {k}]")));
    }
    if numerator && c.is_zero() {
        return Err(degenerate("C = 0"));
    }
    let two_b = rat_int(2) * b;
    let up = (a + rat_int(2) * c + e) / &two_b;
    let down = (a + rat_int(2) * c - e) / &two_b;

    let mut first = BigRational::zero();
    let mut second = BigRational::zero();
    for j in 0..=k {
        let w = rat_int(binomial((k + j) as i64, k as i64) * binomial((n - j) as i64, (k - j) as i64));
        if w.is_zero() {
            continue;
        }
        let mut t1 = &w * pochhammer(&(-&eb + rat_int(j + 1)), k - j) * pochhammer(&down, j);
        let mut t2 = &w * pochhammer(&(&eb + rat_int(j + 1)), k - j) * pochhammer(&up, j);
        if numerator {
            t1 *= bracket(params, k, j, -1);
            t2 *= bracket(params, k, j, 1);
        }
        first += t1;
        second += t2;
    }
    let body = pochhammer(&up, n + 1) * first - pochhammer(&down, n + 1) * second;
    let bk = num_traits::pow(b.clone(), (n - k) as usize);
    let sign = if (n + numerator as u32).is_multiple_of(2) { BigRational::one() } else { -BigRational::one() };
    let mut out = sign * bk / den * body;
    if numerator {
        out /= rat_int(2) * c;
    }
    if params.is_integral() && !out.is_integer() {
        return Err(Error::IntegralityViolation(format!(
            "coefficient {out} of z^{} at n = {n} is not an integer",
            n - k
        )));
    }
    Ok(out)
}

fn check_index(n: u32, k: u32) -> Result<()> {
    if k > n {
        return Err(Error::InvalidParams(format!("coefficient index {k} exceeds the order {n}")));
    }
    Ok(())
}

/// `p_{n,k}`, the coefficient of `z^k` in `P_n`.
pub fn pade_coeff_p(params: &RiccatiParams, n: u32, k: u32) -> Result<BigRational> {
    check_index(n, k)?;
    closed_form(params, n, n - k, true)
}

/// `q_{n,k}`, the coefficient of `z^k` in `Q_n`.
pub fn pade_coeff_q(params: &RiccatiParams, n: u32, k: u32) -> Result<BigRational> {
    check_index(n, k)?;
    closed_form(params, n, n - k, false)
}

/// The closed-form pair; fails with `DegenerateParameters` where it is undefined.
pub fn pade_pair(params: &RiccatiParams, n: u32) -> Result<PadePair> {
    let mut p = vec![BigRational::one()];
    let mut q = vec![BigRational::one()];
    for k in 1..=n {
        p.push(pade_coeff_p(params, n, k)?);
        q.push(pade_coeff_q(params, n, k)?);
    }
    Ok(PadePair {
        n,
        p: Poly::new(Rationals, p),
        q: Poly::new(Rationals, q),
        residual_const: params.residual_const(n),
        route: Route::ClosedForm,
    })
}

/// Closed form when defined, otherwise the linear-algebra route.
pub fn construct(params: &RiccatiParams, n: u32) -> Result<PadePair> {
    match pade_pair(params, n) {
        Err(Error::DegenerateParameters(_)) => pade_oracle(params, n),
        other => other,
    }
}

/// Solves `F Q - P = O(z^(2n+1))` with `Q(0) = 1` from the series alone.
pub fn pade_oracle(params: &RiccatiParams, n: u32) -> Result<PadePair> {
    let f = riccati_series(params, 2 * n as usize + 1);
    let (p, q) = pade_from_series(&f, n)?;
    Ok(PadePair { n, p, q, residual_const: params.residual_const(n), route: Route::Oracle })
}

/// Diagonal Padé approximant of a series known to at least `2n+1` terms.
/// When the system for `q_1..q_n` is consistent but singular, free unknowns
/// are set to zero.
pub fn pade_from_series(f: &Series<Rationals>, n: u32) -> Result<(QPoly, QPoly)> {
    let n = n as usize;
    if f.len() < 2 * n + 1 {
        return Err(Error::InvalidParams(format!("need {} series terms, have {}", 2 * n + 1, f.len())));
    }
    let c = |i: usize| f.coeff(i).clone();
    // row i: sum_{j=1..n} q_j f_{n+i-j} = -f_{n+i}, i = 1..n
    let mut rows: Vec<Vec<BigRational>> = (1..=n)
        .map(|i| {
            let mut r: Vec<_> = (1..=n).map(|j| c(n + i - j)).collect();
            r.push(-c(n + i));
            r
        })
        .collect();
    let sol = solve(&mut rows, n)?;
    let mut q = vec![BigRational::one()];
    q.extend(sol);
    let p = (0..=n)
        .map(|i| (0..=i).map(|j| &q[j] * c(i - j)).fold(BigRational::zero(), |s, t| s + t))
        .collect();
    Ok((Poly::new(Rationals, p), Poly::new(Rationals, q)))
}

/// Gauss-Jordan elimination on an augmented matrix with `cols` unknowns.
fn solve(rows: &mut [Vec<BigRational>], cols: usize) -> Result<Vec<BigRational>> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..cols {
        let Some(pr) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else { continue };
        rows.swap(r, pr);
        let inv = rows[r][col].recip();
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][col].is_zero() {
                let factor = rows[i][col].clone();
                for j in col..=cols {
                    let delta = &factor * &rows[r][j];
                    rows[i][j] -= delta;
                }
            }
        }
        pivots.push((r, col));
        r += 1;
    }
    if rows[r..].iter().any(|row| !row[cols].is_zero()) {
        return Err(Error::SingularPadeSystem);
    }
    let mut x = vec![BigRational::zero(); cols];
    for (row, col) in pivots {
        x[col] = rows[row][cols].clone();
    }
    Ok(x)
}

/// Checks `(1-Az)PQ - Bz^2(P'Q - PQ') - CzP^2 - (1+Dz)Q^2 = -R z^(2n+1)`.
pub fn verify_identity(pair: &PadePair, params: &RiccatiParams) -> bool {
    let k = |x: &BigRational| Poly::constant(Rationals, x.clone());
    let z = Poly::from_ints(&[0, 1]);
    let one = Poly::from_ints(&[1]);
    let (p, q) = (&pair.p, &pair.q);
    let lhs = &(&one - &(&k(params.a()) * &z)) * &(p * q);
    let wr = &(&p.derivative() * q) - &(p * &q.derivative());
    let lhs = &lhs - &(&(&k(params.b()) * &(&z * &z)) * &wr);
    let lhs = &lhs - &(&(&k(params.c()) * &z) * &(p * p));
    let lhs = &lhs - &(&(&one + &(&k(params.d()) * &z)) * &(q * q));
    let rhs = Poly::monomial(Rationals, -pair.residual_const.clone(), 2 * pair.n as usize + 1);
    lhs == rhs
}

fn gosper_prefactor(params: &RiccatiParams, n: u32) -> Result<(BigRational, BigRational, BigRational)> {
    let (a, b, c, e) = (params.a(), params.b(), params.c(), params.e());
    let eb = e / b;
    let den = pochhammer(&(&eb - rat_int(n)), 2 * n + 1);
    if den.is_zero() || c.is_zero() {
        return Err(degenerate("Gosper denominators vanish"));
    }
    let down = (a + rat_int(2) * c - e) / (rat_int(2) * b);
    let sign = if n.is_multiple_of(2) { BigRational::one() } else { -BigRational::one() };
    Ok((eb, down, sign / den))
}

/// The summand `t(n, j)` of the telescoping identity.
pub fn gosper_summand(params: &RiccatiParams, n: u32, j: u32) -> Result<BigRational> {
    let (eb, down, pre) = gosper_prefactor(params, n)?;
    let (a, b, c, e) = (params.a(), params.b(), params.c(), params.e());
    let br = if n + j == 0 {
        rat_int(2) * c + a - e
    } else {
        let nj = rat_int(n + j);
        rat_int(2) * c + a + rat_int(2 * n * j) / &nj * b - rat_int(n as i64 - j as i64) / nj * e
    };
    let w = rat_int(binomial((n + j) as i64, n as i64));
    let binv = num_traits::pow(b.recip(), n as usize + 1);
    Ok(rat_int(2 * n + 1) * pre * binv / (rat_int(2) * c)
        * w
        * pochhammer(&(-eb + rat_int(j + 1)), n.saturating_sub(j))
        * pochhammer(&down, j)
        * br)
}

/// The certificate `G(n, j)`, with `t(n, j) = G(n, j+1) - G(n, j)`.
pub fn gosper_certificate(params: &RiccatiParams, n: u32, j: u32) -> Result<BigRational> {
    let (eb, down, pre) = gosper_prefactor(params, n)?;
    let w = rat_int(binomial(n as i64 + j as i64 - 1, n as i64));
    if w.is_zero() {
        return Ok(BigRational::zero());
    }
    let binv = num_traits::pow(params.b().recip(), n as usize);
    Ok(rat_int(2 * n + 1) * pre * binv / params.c()
        * w
        * pochhammer(&(-eb + rat_int(j)), n + 1 - j)
        * pochhammer(&down, j))
}

/// Closed-form value of `sum_{j=0}^{n} t(n, j)`.
pub fn gosper_rhs(params: &RiccatiParams, n: u32) -> Result<BigRational> {
    let (_, down, pre) = gosper_prefactor(params, n)?;
    let binv = num_traits::pow(params.b().recip(), n as usize);
    Ok(rat_int(2 * n + 1) * rat_int(binomial(2 * n as i64, n as i64)) * pre * binv * pochhammer(&down, n + 1)
        / params.c())
}

/// `t(n, j) = G(n, j+1) - G(n, j)` for every `j` in `0..=n`, for a given certificate.
pub fn telescopes(
    params: &RiccatiParams,
    n: u32,
    certificate: impl Fn(u32) -> Result<BigRational>,
) -> Result<bool> {
    for j in 0..=n {
        if gosper_summand(params, n, j)? != certificate(j + 1)? - certificate(j)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Finite sum equals the closed form, and the certificate telescopes.
pub fn verify_gosper(n: u32, params: &RiccatiParams) -> Result<bool> {
    let mut sum = BigRational::zero();
    for j in 0..=n {
        sum += gosper_summand(params, n, j)?;
    }
    Ok(sum == gosper_rhs(params, n)? && telescopes(params, n, |j| gosper_certificate(params, n, j))?)
}
