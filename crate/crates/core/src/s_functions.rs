//! The building blocks `s^top`, `s^par` and `s^ell` from which every
//! dimension formula is assembled.
//!
//! Each is evaluated at an exact divisor `n` of the index `m` (so
//! `gcd(n, m/n) = 1`), carried by [`SContext`]. The theorems only use
//! `n = 1` and `n = m`, but any exact divisor is accepted.

use crate::arith::{gcd, rat, square_part_of, squarefree_cofactor_discriminants, Rational};
use crate::class_numbers::hn;
use crate::error::{domain, Error, Result};
use crate::gegenbauer::{p_even_unchecked, GegenbauerArg};

/// Weight `k`, index `m`, exact divisor `n` of `m` and its codivisor `m/n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SContext {
    k: i64,
    m: i64,
    n: i64,
    n_prime: i64,
}

impl SContext {
    pub fn new(k: i64, m: i64, n: i64) -> Result<Self> {
        if k < 2 {
            return Err(Error::UnsupportedWeight(k));
        }
        if m < 1 {
            return domain(format!("index m must be ≥ 1 (got {m})"));
        }
        if n < 1 || m % n != 0 {
            return domain(format!("n = {n} does not divide m = {m}"));
        }
        let n_prime = m / n;
        if gcd(n, n_prime) != 1 {
            return domain(format!("n = {n} is not an exact divisor of m = {m}"));
        }
        Ok(Self { k, m, n, n_prime })
    }

    pub fn k(&self) -> i64 {
        self.k
    }

    pub fn m(&self) -> i64 {
        self.m
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    pub fn n_prime(&self) -> i64 {
        self.n_prime
    }

    fn p(&self, arg: GegenbauerArg) -> i64 {
        p_even_unchecked(2 * self.k - 2, arg)
    }
}

fn check_width(b: i64) -> Result<u64> {
    if b < 1 {
        return domain(format!("cusp width b must be ≥ 1 (got {b})"));
    }
    Ok(b as u64)
}

/// `−p_{2k−2}(2)·H_{bn′}(0) − ½·Q(n′·(4n′, bn))`.
pub fn s_top(ctx: &SContext, b: i64) -> Result<Rational> {
    let b = check_width(b)? as i64;
    let np = ctx.n_prime;
    let first = -rat(ctx.p(GegenbauerArg::TWO)) * hn((b * np) as u64, 0);
    let q = square_part_of((np * gcd(4 * np, b * ctx.n)) as u64);
    Ok(first - Rational::new(q as i128, 2))
}

/// `−½·g·p_{2k−2}(0)·Σ_Δ H_{bn′/g}(Δ)` with `g = (4n, bn′)`, where `Δ < 0`
/// runs over divisors of `4n/g` with `4n/(gΔ)` square-free.
pub fn s_par(ctx: &SContext, b: i64) -> Result<Rational> {
    let b = check_width(b)? as i64;
    let g = gcd(4 * ctx.n, b * ctx.n_prime);
    let twist = (b * ctx.n_prime / g) as u64;
    let sum: Rational = squarefree_cofactor_discriminants((4 * ctx.n / g) as u64)
        .into_iter()
        .map(|delta| hn(twist, delta))
        .sum();
    Ok(-Rational::new(g as i128, 2) * rat(ctx.p(GegenbauerArg::ZERO)) * sum)
}

/// `−δ((t+2) | n)·p_{2k−2}(√(t+2))·H_{n′}(t² − 4)` for `t ∈ {−1, 0, 1}`.
pub fn s_ell(ctx: &SContext, t: i64) -> Result<Rational> {
    let arg = GegenbauerArg::elliptic(t)?;
    if ctx.n % (t + 2) != 0 {
        return Ok(rat(0));
    }
    Ok(-rat(ctx.p(arg)) * hn(ctx.n_prime as u64, t * t - 4))
}

/// The five summands `s^top_b, s^par_b, s^ell_{−1}, s^ell_0, s^ell_{+1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SFunctionTriple {
    pub top: Rational,
    pub par: Rational,
    pub ell_minus1: Rational,
    pub ell_0: Rational,
    pub ell_plus1: Rational,
}

impl SFunctionTriple {
    pub fn evaluate(ctx: &SContext, b: i64) -> Result<Self> {
        Ok(Self {
            top: s_top(ctx, b)?,
            par: s_par(ctx, b)?,
            ell_minus1: s_ell(ctx, -1)?,
            ell_0: s_ell(ctx, 0)?,
            ell_plus1: s_ell(ctx, 1)?,
        })
    }

    pub fn total(&self) -> Rational {
        self.top + self.par + self.ell_minus1 + self.ell_0 + self.ell_plus1
    }
}
