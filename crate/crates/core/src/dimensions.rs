//! Dimension formulas for `S_{k,m}(Γ)`.
//!
//! For `k ≥ 3` every formula returns `dim S_{k,m}(Γ)`. For `k = 2` it
//! returns `dim S_{2,m}(Γ) − dim J^skew_{1,m}(Γ)`, the skew-holomorphic
//! correction being left undetermined; [`DimensionResult::plain`] tells the
//! two apart.
//!
//! * [`dim_theorem1`]: torsion-free `Γ` without trace `−2` elements, written
//!   with Hurwitz class numbers directly.
//! * [`dim_theorem2`]: the same case assembled from s-functions.
//! * [`dim_theorem3`]: `−1 ∈ Γ`.
//! * [`dim_theorem4`]: `−1 ∉ Γ`, possibly with irregular cusps and elliptic
//!   points of order 3.
//! * [`dim_corollary_gamma_n`], [`dim_gamma_n_4m_divides_n`]: closed forms
//!   for `Γ(N)`.

use crate::arith::{
    euler_phi, frac, gcd, kronecker_u, psi_index, rat, square_part_of,
    squarefree_cofactor_discriminants, Rational,
};
use crate::class_numbers::h1;
use crate::error::{domain, Error, Result};
use crate::group::BranchingScheme;
use crate::s_functions::{s_ell, s_par, s_top, SContext};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimensionResult {
    pub value: Rational,
    /// True iff `k ≥ 3`, i.e. `value` is `dim S_{k,m}(Γ)` itself.
    pub plain: bool,
}

impl DimensionResult {
    fn finish(k: i64, value: Rational, what: &str) -> Result<Self> {
        let plain = k >= 3;
        if !value.is_integer() {
            return Err(Error::Postcondition(format!(
                "{what} produced non-integral value {value}"
            )));
        }
        if plain && value < rat(0) {
            return Err(Error::Postcondition(format!(
                "{what} produced negative dimension {value}"
            )));
        }
        Ok(Self { value, plain })
    }

    pub fn to_integer(&self) -> i128 {
        self.value.to_integer()
    }
}

fn check_args(k: i64, m: i64) -> Result<()> {
    if k < 2 {
        return Err(Error::UnsupportedWeight(k));
    }
    if m < 1 {
        return domain(format!("index m must be ≥ 1 (got {m})"));
    }
    Ok(())
}

fn check_widths(widths: &[i64]) -> Result<()> {
    if widths.is_empty() {
        return domain("at least one cusp width is required");
    }
    if let Some(b) = widths.iter().find(|&&b| b < 1) {
        return domain(format!("cusp widths must be positive (got {b})"));
    }
    Ok(())
}

/// Distinct widths with their multiplicities.
fn width_counts(widths: &[i64]) -> Vec<(i64, Rational)> {
    let mut sorted = widths.to_vec();
    sorted.sort_unstable();
    sorted
        .chunk_by(|x, y| x == y)
        .map(|run| (run[0], rat(run.len() as i64)))
        .collect()
}

fn parity_sign(k: i64) -> Rational {
    rat(if k % 2 == 0 { 1 } else { -1 })
}

/// Torsion-free `Γ` without elements of trace `−2`, cusp widths `b_p`:
///
/// `m·[Γ₁:Γ]·(2k−3)/24 − Σ_p (m/f_p)·Q(f_p)
///  − Σ_p (2m/f_p)·Σ_Δ (Δ | b_p/(4m, b_p))·H(Δ)`
///
/// with `f_p = 4m/(4m, b_p)` and `Δ < 0`, `Δ | f_p`, `f_p/Δ` square-free.
pub fn dim_theorem1(k: i64, m: i64, widths: &[i64]) -> Result<DimensionResult> {
    DimensionResult::finish(k, theorem1_value(k, m, widths)?, "theorem 1")
}

/// The rational value of [`dim_theorem1`] without the integrality check.
/// Width lists that no group realizes give non-integral values.
pub fn theorem1_value(k: i64, m: i64, widths: &[i64]) -> Result<Rational> {
    check_args(k, m)?;
    check_widths(widths)?;
    let sl2_index: i64 = 2 * widths.iter().sum::<i64>();
    let mut value = frac(m * sl2_index * (2 * k - 3), 24);
    for (b, count) in width_counts(widths) {
        let g = gcd(4 * m, b);
        let f = 4 * m / g;
        let class_sum: Rational = squarefree_cofactor_discriminants(f as u64)
            .into_iter()
            .map(|delta| rat(kronecker_u(delta, (b / g) as u64) as i64) * h1(delta))
            .sum();
        value -=
            count * (frac(m * square_part_of(f as u64) as i64, f) + frac(2 * m, f) * class_sum);
    }
    Ok(value)
}

/// The torsion-free case via s-functions:
/// `Σ_j (s^top_{b_j}(1) + (−1)^k·s^par_{b_j}(m))`.
pub fn dim_theorem2(k: i64, m: i64, widths: &[i64]) -> Result<DimensionResult> {
    DimensionResult::finish(k, theorem2_value(k, m, widths)?, "theorem 2")
}

/// The rational value of [`dim_theorem2`] without the integrality check.
pub fn theorem2_value(k: i64, m: i64, widths: &[i64]) -> Result<Rational> {
    check_args(k, m)?;
    check_widths(widths)?;
    let at_one = SContext::new(k, m, 1)?;
    let at_m = SContext::new(k, m, m)?;
    let sign = parity_sign(k);
    let mut value = rat(0);
    for (b, count) in width_counts(widths) {
        value += count * (s_top(&at_one, b)? + sign * s_par(&at_m, b)?);
    }
    Ok(value)
}

fn elliptic_count(scheme: &BranchingScheme, t: i64) -> i64 {
    if t == 0 {
        scheme.e0()
    } else {
        scheme.e1()
    }
}

/// Value of the `−1 ∈ Γ` formula with the `(−1)^k` factors replaced by
/// `sign`.
fn minus_one_formula(k: i64, m: i64, scheme: &BranchingScheme, sign: Rational) -> Result<Rational> {
    let at_one = SContext::new(k, m, 1)?;
    let at_m = SContext::new(k, m, m)?;
    let half = frac(1, 2);
    let mut value = rat(0);
    for (b, count) in width_counts(scheme.regular_widths()) {
        value += count * half * (s_top(&at_one, b)? + sign * s_top(&at_m, b)?);
        value += count * half * (s_par(&at_one, b)? + sign * s_par(&at_m, b)?);
    }
    for t in -1..=1 {
        let e = rat(elliptic_count(scheme, t));
        value += e * half * (s_ell(&at_one, t)? + sign * s_ell(&at_m, t)?);
    }
    Ok(value)
}

/// `Γ ∋ −1`:
///
/// `Σ_j ½(s^top_{b_j}(1) + (−1)^k s^top_{b_j}(m))
///  + Σ_j ½(s^par_{b_j}(1) + (−1)^k s^par_{b_j}(m))
///  + Σ_t e(t)/2·(s^ell_t(1) + (−1)^k s^ell_t(m))`.
pub fn dim_theorem3(k: i64, m: i64, scheme: &BranchingScheme) -> Result<DimensionResult> {
    check_args(k, m)?;
    if !scheme.contains_minus_one() {
        return Err(Error::WrongTheorem("this formula requires −1 ∈ Γ"));
    }
    let value = minus_one_formula(k, m, scheme, parity_sign(k))?;
    DimensionResult::finish(k, value, "theorem 3")
}

/// `Γ ∌ −1`, with regular widths `b_j` and irregular widths `b′_j`:
///
/// ```text
///   Σ_reg (s^top_b(1) + (−1)^k s^par_b(m))
/// + Σ_irr ½(s^top_{2b}(1) + (−1)^k s^par_{2b}(m))
/// + Σ_irr (s^par_b(1) + (−1)^k s^top_b(m))
/// − Σ_irr ½(s^par_{2b}(1) + (−1)^k s^top_{2b}(m))
/// + e(−1)·(s^ell_{−1}(1) + (−1)^k s^ell_{+1}(m))
/// ```
pub fn dim_theorem4(k: i64, m: i64, scheme: &BranchingScheme) -> Result<DimensionResult> {
    check_args(k, m)?;
    if scheme.contains_minus_one() {
        return Err(Error::WrongTheorem("this formula requires −1 ∉ Γ"));
    }
    let at_one = SContext::new(k, m, 1)?;
    let at_m = SContext::new(k, m, m)?;
    let sign = parity_sign(k);
    let half = frac(1, 2);
    let mut value = rat(0);
    for (b, count) in width_counts(scheme.regular_widths()) {
        value += count * (s_top(&at_one, b)? + sign * s_par(&at_m, b)?);
    }
    for (b, count) in width_counts(scheme.irregular_widths()) {
        value += count * half * (s_top(&at_one, 2 * b)? + sign * s_par(&at_m, 2 * b)?);
        value += count * (s_par(&at_one, b)? + sign * s_top(&at_m, b)?);
        value -= count * half * (s_par(&at_one, 2 * b)? + sign * s_top(&at_m, 2 * b)?);
    }
    value += rat(scheme.e1()) * (s_ell(&at_one, -1)? + sign * s_ell(&at_m, 1)?);
    DimensionResult::finish(k, value, "theorem 4")
}

/// Dispatches on `−1 ∈ Γ`.
pub fn dim_jacobi(k: i64, m: i64, scheme: &BranchingScheme) -> Result<DimensionResult> {
    if scheme.contains_minus_one() {
        dim_theorem3(k, m, scheme)
    } else {
        dim_theorem4(k, m, scheme)
    }
}

fn check_gamma_n_args(n: i64, k: i64, m: i64) -> Result<()> {
    if n < 3 {
        return domain(format!("the Γ(N) closed form requires N ≥ 3 (got N = {n})"));
    }
    if k < 3 {
        return domain(format!("the Γ(N) closed form requires k ≥ 3 (got k = {k})"));
    }
    if m < 1 {
        return domain(format!("index m must be ≥ 1 (got {m})"));
    }
    Ok(())
}

/// `dim S_{k,m}(Γ(N))` for `N, k ≥ 3`:
///
/// `φ(N)ψ(N)·(mN(2k−3)/24 − (d/8)·Q(4m/d) − (d/4)·Σ_Δ (Δ | N/d)·H(Δ))`
///
/// with `d = (4m, N)` and `Δ < 0`, `Δ | 4m/d`, `4m/(dΔ)` square-free.
pub fn dim_corollary_gamma_n(n: i64, k: i64, m: i64) -> Result<DimensionResult> {
    check_gamma_n_args(n, k, m)?;
    let d = gcd(4 * m, n);
    let f = 4 * m / d;
    let class_sum: Rational = squarefree_cofactor_discriminants(f as u64)
        .into_iter()
        .map(|delta| rat(kronecker_u(delta, (n / d) as u64) as i64) * h1(delta))
        .sum();
    let bracket = frac(m * n * (2 * k - 3), 24)
        - frac(d * square_part_of(f as u64) as i64, 8)
        - frac(d, 4) * class_sum;
    let value = rat(euler_phi(n)? * psi_index(n)?) * bracket;
    DimensionResult::finish(k, value, "Γ(N) closed form")
}

/// `dim S_{k,m}(Γ(N)) = m·φ(N)ψ(N)·(N(2k−3)/24 − ½)` when `4m | N`.
pub fn dim_gamma_n_4m_divides_n(n: i64, k: i64, m: i64) -> Result<DimensionResult> {
    check_gamma_n_args(n, k, m)?;
    if n % (4 * m) != 0 {
        return domain(format!("requires 4m | N (got N = {n}, m = {m})"));
    }
    let value = rat(m * euler_phi(n)? * psi_index(n)?) * (frac(n * (2 * k - 3), 24) - frac(1, 2));
    DimensionResult::finish(k, value, "Γ(N), 4m | N")
}

/// Conjectural dimension of the skew-holomorphic space `S^+_{k,m}(SL(2,ℤ))`:
/// the `−1 ∈ Γ` formula for `Γ(1)` with each `(−1)^k` replaced by
/// `−(−1)^k`. Unproved; no integrality is enforced.
pub fn skew_dim_conjecture(k: i64, m: i64) -> Result<Rational> {
    check_args(k, m)?;
    let full = BranchingScheme::principal_congruence(1)?;
    minus_one_formula(k, m, &full, -parity_sign(k))
}
