//! Independent oracles and consistency identities.
//!
//! * The cotangent/Gauss-sum identity behind the parabolic terms, checked by
//!   direct floating-point summation against its exact class-number side.
//! * `dim S_{2k−2}(Γ₀(m))` from the genus/valence formula, compared with the
//!   sum of s-functions over divisors `m′ | m` with `m/m′` square-free.
//! * The lifting identity for primes `p ≡ 1 mod 12`, which relies on the
//!   conjectural skew-holomorphic dimension.

use std::f64::consts::PI;

use serde::Serialize;

use crate::arith::{
    divisors_u, factorize, frac, gcd, kronecker_u, rat, squarefree_cofactor_discriminants,
    squarefree_u, Rational,
};
use crate::class_numbers::h1;
use crate::dimensions::{dim_jacobi, skew_dim_conjecture, theorem1_value, theorem2_value};
use crate::error::{domain, Error, Result};
use crate::group::BranchingScheme;
use crate::s_functions::{SContext, SFunctionTriple};

/// A rational as an explicit `num/den` pair for machine-readable output.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ExactValue {
    pub num: i128,
    pub den: i128,
}

impl From<Rational> for ExactValue {
    fn from(r: Rational) -> Self {
        Self {
            num: *r.numer(),
            den: *r.denom(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct LemmaCheckReport {
    pub a: i64,
    pub f: i64,
    pub lhs_numeric: f64,
    pub lhs_imaginary: f64,
    pub rhs_exact: ExactValue,
    pub abs_error: f64,
}

fn check_positive(a: i64, f: i64) -> Result<()> {
    if a < 1 || f < 1 {
        return domain(format!("a and f must be ≥ 1 (got a = {a}, f = {f})"));
    }
    Ok(())
}

/// `(i/f)·Σ_{ν mod f} C(ν/f)·Σ_{λ mod f} e(aνλ²/f)` as `(re, im)`, where
/// `C(z) = cot(πz)` off the integers and `C = 0` on them.
fn lemma_lhs_parts(a: i64, f: i64) -> (f64, f64) {
    let (mut re, mut im) = (0.0, 0.0);
    for nu in 1..f {
        let cot = 1.0 / (PI * nu as f64 / f as f64).tan();
        let (mut x, mut y) = (0.0, 0.0);
        for lambda in 0..f {
            let r = ((a % f) * nu % f * (lambda * lambda % f)) % f;
            let angle = 2.0 * PI * r as f64 / f as f64;
            x += angle.cos();
            y += angle.sin();
        }
        // i·C·(x + iy) = −C·y + i·C·x
        re -= cot * y;
        im += cot * x;
    }
    (re / f as f64, im / f as f64)
}

/// Real part of the cotangent-weighted quadratic Gauss sum.
pub fn lemma_lhs_numeric(a: i64, f: i64) -> Result<f64> {
    check_positive(a, f)?;
    Ok(lemma_lhs_parts(a, f).0)
}

/// `−2(a, f)·Σ_Δ (Δ | a/(a, f))·H(Δ)`, `Δ < 0` dividing `f/(a, f)` with
/// `f/((a, f)Δ)` square-free.
pub fn lemma_rhs_exact(a: i64, f: i64) -> Result<Rational> {
    check_positive(a, f)?;
    let g = gcd(a, f);
    let sum: Rational = squarefree_cofactor_discriminants((f / g) as u64)
        .into_iter()
        .map(|delta| rat(kronecker_u(delta, (a / g) as u64) as i64) * h1(delta))
        .sum();
    Ok(rat(-2 * g) * sum)
}

pub fn lemma_check(a: i64, f: i64) -> Result<LemmaCheckReport> {
    check_positive(a, f)?;
    let (re, im) = lemma_lhs_parts(a, f);
    let rhs = lemma_rhs_exact(a, f)?;
    let rhs_float = *rhs.numer() as f64 / *rhs.denom() as f64;
    Ok(LemmaCheckReport {
        a,
        f,
        lhs_numeric: re,
        lhs_imaginary: im,
        rhs_exact: rhs.into(),
        abs_error: (re - rhs_float).abs(),
    })
}

/// `dim S_w(Γ₀(N))` for even `w ≥ 4` from the genus formula
/// `g = 1 + μ/12 − ν₂/4 − ν₃/3 − ν_∞/2` and
/// `dim = (w−1)(g−1) + (w/2−1)ν_∞ + ν₂⌊w/4⌋ + ν₃⌊w/3⌋`.
pub fn classical_dim_cusp_forms(w: i64, n: i64) -> Result<i64> {
    if w < 4 || w % 2 != 0 {
        return domain(format!("weight w must be even and ≥ 4 (got {w})"));
    }
    let scheme = BranchingScheme::gamma0(n)?;
    let mu = scheme.psl_index();
    let (nu2, nu3) = (scheme.e0(), scheme.e1());
    let cusps = scheme.cusp_count() as i64;
    let genus = rat(1) + frac(mu, 12) - frac(nu2, 4) - frac(nu3, 3) - frac(cusps, 2);
    let dim =
        rat(w - 1) * (genus - rat(1)) + rat((w / 2 - 1) * cusps + nu2 * (w / 4) + nu3 * (w / 3));
    if !dim.is_integer() {
        return Err(Error::Postcondition(format!(
            "genus formula gave {dim} for w = {w}, N = {n}"
        )));
    }
    Ok(dim.to_integer() as i64)
}

/// `Σ_{m′ | m, m/m′ square-free} (s^top_1(1) + s^par_1(1) + Σ_t s^ell_t(1))`
/// at index `m′`, which equals `dim S_{2k−2}(Γ₀(m))`.
pub fn s_identity_dim(k: i64, m: i64) -> Result<Rational> {
    if k < 3 {
        return domain(format!("k must be ≥ 3 (got {k})"));
    }
    if m < 1 {
        return domain(format!("index m must be ≥ 1 (got {m})"));
    }
    let mut total = rat(0);
    for m_prime in divisors_u(m as u64) {
        if squarefree_u(m as u64 / m_prime) {
            let ctx = SContext::new(k, m_prime as i64, 1)?;
            total += SFunctionTriple::evaluate(&ctx, 1)?.total();
        }
    }
    Ok(total)
}

/// Both sides of
/// `dim S_{k,1}(Γ₀(p)) = dim S_{k,1}(Γ(1)) + dim S_{k,p}(Γ(1)) + dim S^+_{k,p}(Γ(1))`.
#[derive(Debug, Clone, Serialize)]
pub struct LiftingReport {
    pub p: i64,
    pub k: i64,
    pub gamma0_p_index_one: ExactValue,
    pub full_index_one: ExactValue,
    pub full_index_p: ExactValue,
    pub skew_index_p: ExactValue,
    pub holds: bool,
}

pub fn lifting_identity_report(p: i64, k: i64) -> Result<LiftingReport> {
    let prime = p >= 2 && factorize(p as u64) == [(p as u64, 1)];
    if !prime || p % 12 != 1 {
        return domain(format!("p must be a prime ≡ 1 mod 12 (got {p})"));
    }
    if k < 4 || k % 2 != 0 {
        return domain(format!("k must be even and ≥ 4 (got {k})"));
    }
    let full = BranchingScheme::principal_congruence(1)?;
    let lhs = dim_jacobi(k, 1, &BranchingScheme::gamma0(p)?)?.value;
    let one = dim_jacobi(k, 1, &full)?.value;
    let at_p = dim_jacobi(k, p, &full)?.value;
    let skew = skew_dim_conjecture(k, p)?;
    Ok(LiftingReport {
        p,
        k,
        gamma0_p_index_one: lhs.into(),
        full_index_one: one.into(),
        full_index_p: at_p.into(),
        skew_index_p: skew.into(),
        holds: lhs == one + at_p + skew,
    })
}

pub fn lifting_identity_check(p: i64, k: i64) -> Result<bool> {
    lifting_identity_report(p, k).map(|r| r.holds)
}

/// Outcome of one consistency suite.
#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: &'static str,
    pub checks: usize,
    pub failures: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_abs_error: Option<f64>,
}

impl SuiteReport {
    fn new(suite: &'static str) -> Self {
        Self {
            suite,
            checks: 0,
            failures: Vec::new(),
            max_abs_error: None,
        }
    }

    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(describe());
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Tolerance for the floating-point side of the lemma check, on both the
/// real discrepancy and the imaginary part.
pub const LEMMA_TOLERANCE: f64 = 1e-7;

pub fn lemma_suite(max_a: i64, max_f: i64) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("lemma");
    let mut worst: f64 = 0.0;
    for a in 1..=max_a {
        for f in 1..=max_f {
            let r = lemma_check(a, f)?;
            worst = worst.max(r.abs_error).max(r.lhs_imaginary.abs());
            report.record(
                r.abs_error < LEMMA_TOLERANCE && r.lhs_imaginary.abs() < LEMMA_TOLERANCE,
                || {
                    format!(
                        "a={a} f={f}: lhs={} (im {}) rhs={}/{}",
                        r.lhs_numeric, r.lhs_imaginary, r.rhs_exact.num, r.rhs_exact.den
                    )
                },
            );
        }
    }
    report.max_abs_error = Some(worst);
    Ok(report)
}

pub fn identity_suite(max_k: i64, max_m: i64) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("identity");
    for k in 3..=max_k {
        for m in 1..=max_m {
            let lhs = s_identity_dim(k, m)?;
            let classical = classical_dim_cusp_forms(2 * k - 2, m)?;
            report.record(lhs == rat(classical), || {
                format!("k={k} m={m}: s-functions give {lhs}, genus formula {classical}")
            });
        }
    }
    Ok(report)
}

pub fn lifting_suite(primes: &[i64], weights: &[i64]) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("lifting");
    for &p in primes {
        for &k in weights {
            let r = lifting_identity_report(p, k)?;
            report.record(r.holds, || {
                let show = |v: ExactValue| format!("{}/{}", v.num, v.den);
                format!(
                    "p={p} k={k}: Γ₀(p) side {} vs {} + {} + {}",
                    show(r.gamma0_p_index_one),
                    show(r.full_index_one),
                    show(r.full_index_p),
                    show(r.skew_index_p)
                )
            });
        }
    }
    Ok(report)
}

/// Exact agreement of the class-number and s-function forms of the
/// torsion-free formula over the given weights, indices and width lists.
/// Values are compared as rationals, so unrealizable synthetic width lists
/// are allowed.
pub fn equivalence_suite(max_k: i64, max_m: i64, width_lists: &[Vec<i64>]) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("equivalence");
    for k in 2..=max_k {
        for m in 1..=max_m {
            for widths in width_lists {
                let one = theorem1_value(k, m, widths)?;
                let two = theorem2_value(k, m, widths)?;
                report.record(one == two, || {
                    format!("k={k} m={m} widths={widths:?}: {one} vs {two}")
                });
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lemma_examples() {
        assert!(lemma_lhs_numeric(1, 1).unwrap().abs() < 1e-12);
        assert!((lemma_lhs_numeric(1, 4).unwrap() + 1.0).abs() < 1e-9);
        assert_eq!(lemma_rhs_exact(1, 1), Ok(rat(0)));
        assert_eq!(lemma_rhs_exact(1, 4), Ok(rat(-1)));
        assert_eq!(lemma_rhs_exact(3, 9), Ok(rat(-2)));
        let r = lemma_check(2, 8).unwrap();
        assert!(r.abs_error < 1e-8, "{r:?}");
        assert!(lemma_check(0, 3).is_err());
    }

    #[test]
    fn classical_examples() {
        assert_eq!(classical_dim_cusp_forms(12, 1), Ok(1));
        assert_eq!(classical_dim_cusp_forms(18, 1), Ok(1));
        assert_eq!(classical_dim_cusp_forms(4, 11), Ok(2));
        // genus 1, two cusps: 5·0 + 2·2
        assert_eq!(classical_dim_cusp_forms(6, 11), Ok(4));
        assert_eq!(classical_dim_cusp_forms(4, 1), Ok(0));
        assert!(classical_dim_cusp_forms(5, 1).is_err());
        assert!(classical_dim_cusp_forms(2, 1).is_err());
    }

    #[test]
    fn identity_examples() {
        assert_eq!(s_identity_dim(10, 1), Ok(rat(1)));
        assert_eq!(s_identity_dim(3, 11), Ok(rat(2)));
        assert_eq!(s_identity_dim(4, 11), Ok(rat(4)));
        assert_eq!(s_identity_dim(3, 1), Ok(rat(0)));
        assert!(s_identity_dim(2, 1).is_err());
    }

    #[test]
    fn lifting_examples() {
        assert_eq!(lifting_identity_check(13, 4), Ok(true));
        assert_eq!(lifting_identity_check(37, 6), Ok(true));
        assert_eq!(lifting_identity_check(13, 10), Ok(true));
        assert!(lifting_identity_check(11, 4).is_err());
        assert!(lifting_identity_check(25, 4).is_err());
        assert!(lifting_identity_check(13, 5).is_err());
    }

    #[test]
    fn full_group_matches_classical() {
        let full = BranchingScheme::principal_congruence(1).unwrap();
        for k in (4..=24).step_by(2) {
            let dim = dim_jacobi(k, 1, &full).unwrap().value;
            assert_eq!(
                dim,
                rat(classical_dim_cusp_forms(2 * k - 2, 1).unwrap()),
                "k = {k}"
            );
        }
    }
}
