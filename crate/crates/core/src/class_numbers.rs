//! Hurwitz class numbers `H(Δ)` by enumeration of reduced forms, and the
//! generalized `H_n(Δ)`.

use std::fmt;

use crate::arith::{frac, gcd, kronecker_u, square_part_of, Rational};
use crate::error::{domain, Result};

/// A discriminant `Δ ≤ 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Discriminant(i64);

impl Discriminant {
    pub fn new(value: i64) -> Result<Self> {
        if value > 0 {
            return domain(format!("discriminant must be ≤ 0 (got {value})"));
        }
        Ok(Self(value))
    }

    pub fn value(self) -> i64 {
        self.0
    }
}

impl TryFrom<i64> for Discriminant {
    type Error = crate::Error;

    fn try_from(value: i64) -> Result<Self> {
        Self::new(value)
    }
}

/// A reduced positive definite form `a·x² + b·xy + c·y²`:
/// `|b| ≤ a ≤ c`, and `b ≥ 0` when `|b| = a` or `a = c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ReducedForm {
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

impl ReducedForm {
    pub fn discriminant(&self) -> i64 {
        self.b * self.b - 4 * self.a * self.c
    }

    /// Weight of the class in the Hurwitz count: `1/2` for multiples of
    /// `x² + y²`, `1/3` for multiples of `x² + xy + y²`, otherwise `1`.
    pub fn weight(&self) -> Rational {
        if self.b == 0 && self.a == self.c {
            frac(1, 2)
        } else if self.a == self.b && self.b == self.c {
            frac(1, 3)
        } else {
            frac(1, 1)
        }
    }
}

impl fmt::Display for ReducedForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.c)
    }
}

fn reduced_forms(delta: i64) -> Vec<ReducedForm> {
    debug_assert!(delta < 0);
    let abs = -delta;
    let mut forms = Vec::new();
    let mut a = 1;
    while 3 * a * a <= abs {
        for b in -a..=a {
            let num = b * b - delta;
            if num % (4 * a) != 0 {
                continue;
            }
            let c = num / (4 * a);
            if c < a || (b < 0 && (-b == a || a == c)) {
                continue;
            }
            forms.push(ReducedForm { a, b, c });
        }
        a += 1;
    }
    forms
}

/// One reduced representative per `SL(2,ℤ)`-class of positive definite
/// forms (primitive or not) of discriminant `Δ`.
pub fn enumerate_reduced_forms(delta: Discriminant) -> Result<Vec<ReducedForm>> {
    let d = delta.value();
    if d == 0 || d.rem_euclid(4) > 1 {
        return domain(format!(
            "reduced forms need Δ < 0 with Δ ≡ 0, 1 mod 4 (got {d})"
        ));
    }
    Ok(reduced_forms(d))
}

pub(crate) fn h1(delta: i64) -> Rational {
    debug_assert!(delta <= 0);
    if delta == 0 {
        return frac(-1, 12);
    }
    if delta.rem_euclid(4) > 1 {
        return frac(0, 1);
    }
    reduced_forms(delta).iter().map(ReducedForm::weight).sum()
}

/// Hurwitz class number, with `H(0) = −1/12` and `H(Δ) = 0` for
/// `Δ ≡ 2, 3 mod 4`.
pub fn hurwitz_h1(delta: Discriminant) -> Rational {
    h1(delta.value())
}

pub(crate) fn hn(n: u64, delta: i64) -> Rational {
    debug_assert!(n >= 1 && delta <= 0);
    let g = gcd(n as i64, delta) as u64;
    let a = square_part_of(g);
    let b = g / (a * a);
    let a2b = (a * a * b) as i64;
    let a2b2 = a2b * b as i64;
    if delta % a2b2 != 0 {
        return frac(0, 1);
    }
    let reduced = delta / a2b2;
    let symbol = kronecker_u(reduced, n / a2b as u64);
    h1(reduced) * Rational::from_integer((a2b * symbol as i64) as i128)
}

/// `H_n(Δ)`: with `(n, Δ) = a²b`, `b` square-free, this is
/// `a²b·(Δ/a²b² | n/a²b)·H(Δ/a²b²)` when `a²b² | Δ` and zero otherwise.
/// `(n, 0) = n`, so `H_n(0) = −n/12`.
pub fn hurwitz_hn(n: i64, delta: Discriminant) -> Result<Rational> {
    if n < 1 {
        return domain(format!("hurwitz_hn requires n ≥ 1 (got {n})"));
    }
    Ok(hn(n as u64, delta.value()))
}
