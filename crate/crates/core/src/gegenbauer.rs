//! Values `p_j(s)` of the polynomials defined by
//! `(1 − s·x + x²)^{-1} = Σ_{j ≥ 2} p_j(s)·x^{j−2}`, at even `j` and at the
//! arguments `s = √u`, `u ∈ {0, 1, 2, 3, 4}`.
//!
//! For even `j` the value is a polynomial in `u = s²`, so everything stays
//! in `ℤ`.

use crate::error::{domain, Result};

/// The square `u = s²` of an evaluation point, restricted to `{0, …, 4}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GegenbauerArg(u8);

impl GegenbauerArg {
    pub const ZERO: Self = Self(0);
    pub const TWO: Self = Self(4);

    pub fn new(u: i64) -> Result<Self> {
        match u {
            0..=4 => Ok(Self(u as u8)),
            _ => domain(format!(
                "Gegenbauer argument u = s² must lie in 0..=4 (got {u})"
            )),
        }
    }

    /// The argument `s = √(t + 2)` used by the elliptic terms.
    pub fn elliptic(t: i64) -> Result<Self> {
        if !(-1..=1).contains(&t) {
            return domain(format!("t must be −1, 0 or 1 (got {t})"));
        }
        Self::new(t + 2)
    }

    pub fn u(self) -> i64 {
        self.0 as i64
    }
}

pub(crate) fn p_even_unchecked(j: i64, arg: GegenbauerArg) -> i64 {
    debug_assert!(j >= 2 && j % 2 == 0);
    let shift = arg.u() - 2;
    // p_j = (u − 2)·p_{j−2} − p_{j−4}, starting from p_0 = −1, p_2 = 1.
    let (mut prev, mut cur) = (-1i64, 1i64);
    for _ in 0..(j - 2) / 2 {
        (prev, cur) = (cur, shift * cur - prev);
    }
    cur
}

/// `p_j(√u)` for even `j ≥ 2`.
pub fn p_even(j: i64, arg: GegenbauerArg) -> Result<i64> {
    if j < 2 || j % 2 != 0 {
        return domain(format!("p_even requires an even index j ≥ 2 (got {j})"));
    }
    Ok(p_even_unchecked(j, arg))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn arg(u: i64) -> GegenbauerArg {
        GegenbauerArg::new(u).unwrap()
    }

    /// Coefficients of `(1 − s·x + x²)^{-1}` carried in `ℤ[√u]` as pairs
    /// `(rational part, √u part)`, by series division.
    fn series_oracle(u: i64, len: usize) -> Vec<(i64, i64)> {
        let mut c: Vec<(i64, i64)> = Vec::with_capacity(len);
        for i in 0..len {
            // c_i = s·c_{i−1} − c_{i−2}, with s·(x + y√u) = y·u + x√u.
            let (mut x, mut y) = if i == 0 { (1, 0) } else { (0, 0) };
            if i >= 1 {
                let (px, py) = c[i - 1];
                x += py * u;
                y += px;
            }
            if i >= 2 {
                x -= c[i - 2].0;
                y -= c[i - 2].1;
            }
            c.push((x, y));
        }
        c
    }

    #[test]
    fn documented_values() {
        for k in 2..=12 {
            assert_eq!(p_even(2 * k - 2, GegenbauerArg::TWO), Ok(2 * k - 3));
            assert_eq!(
                p_even(2 * k - 2, GegenbauerArg::ZERO),
                Ok(if k % 2 == 0 { 1 } else { -1 })
            );
        }
        assert_eq!(p_even(4, arg(2)), Ok(1));
        assert_eq!(p_even(8, arg(3)), Ok(-1));
        assert!(p_even(3, arg(2)).is_err());
        assert!(p_even(0, arg(2)).is_err());
        assert!(GegenbauerArg::new(5).is_err());
        assert!(GegenbauerArg::elliptic(2).is_err());
    }

    #[test]
    fn periodicity() {
        // (1 − x + x²)^{-1} = (1 + x)/(1 + x³): even-index coefficients 1, 0, −1.
        let u1 = [1, 0, -1];
        let u2 = [1, 1, -1, -1];
        for (i, j) in (2..=60).step_by(2).enumerate() {
            assert_eq!(p_even(j, arg(4)).unwrap(), j - 1);
            assert_eq!(p_even(j, arg(1)).unwrap(), u1[i % 3]);
            assert_eq!(p_even(j, arg(2)).unwrap(), u2[i % 4]);
            assert_eq!(p_even(j, arg(0)).unwrap(), if i % 2 == 0 { 1 } else { -1 });
        }
    }

    #[test]
    fn agrees_with_series_expansion() {
        for u in 0..=4 {
            let series = series_oracle(u, 40);
            for j in (2..=40).step_by(2) {
                let (x, y) = series[(j - 2) as usize];
                assert_eq!(y, 0, "even coefficient has no √u part");
                assert_eq!(p_even(j, arg(u)).unwrap(), x, "u = {u}, j = {j}");
            }
        }
    }
}
