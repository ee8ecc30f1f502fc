//! Exact integer helpers and the rational type shared by every formula.
//!
//! Public entry points take `i64` and reject arguments outside their domain.
//! The `pub(crate)` variants work on values already known to be valid.

use num_integer::Integer;
use num_rational::Ratio;

use crate::error::{domain, Result};

/// Exact fraction, always stored in lowest terms with a positive denominator.
pub type Rational = Ratio<i128>;

pub(crate) fn rat(n: i64) -> Rational {
    Rational::from_integer(n as i128)
}

pub(crate) fn frac(num: i64, den: i64) -> Rational {
    Rational::new(num as i128, den as i128)
}

/// Nonnegative greatest common divisor; `gcd(0, 0) = 0`.
pub fn gcd(a: i64, b: i64) -> i64 {
    a.gcd(&b)
}

/// Prime factorization by trial division, primes in increasing order.
pub(crate) fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

fn require_positive(n: i64, what: &str) -> Result<u64> {
    if n < 1 {
        return domain(format!("{what} requires n ≥ 1 (got {n})"));
    }
    Ok(n as u64)
}

pub(crate) fn square_part_of(n: u64) -> u64 {
    factorize(n).iter().map(|&(p, e)| p.pow(e / 2)).product()
}

pub(crate) fn squarefree_u(n: u64) -> bool {
    factorize(n).iter().all(|&(_, e)| e == 1)
}

/// Largest `q` with `q² | n`.
pub fn square_part(n: i64) -> Result<i64> {
    require_positive(n, "square_part").map(|n| square_part_of(n) as i64)
}

/// Unique `(a, b)` with `n = a²·b` and `b` square-free.
pub fn core_square_decompose(n: i64) -> Result<(i64, i64)> {
    let n = require_positive(n, "core_square_decompose")?;
    let a = square_part_of(n);
    Ok((a as i64, (n / (a * a)) as i64))
}

/// True iff no prime square divides `|n|`.
pub fn is_squarefree(n: i64) -> Result<bool> {
    if n == 0 {
        return domain("is_squarefree requires n ≠ 0");
    }
    Ok(squarefree_u(n.unsigned_abs()))
}

pub(crate) fn kronecker_u(top: i64, bottom: u64) -> i32 {
    debug_assert!(bottom >= 1);
    let mut result = 1;
    let twos = bottom.trailing_zeros();
    let mut b = bottom >> twos;
    if twos > 0 {
        if top % 2 == 0 {
            return 0;
        }
        let r = top.rem_euclid(8);
        if (r == 3 || r == 5) && twos % 2 == 1 {
            result = -1;
        }
    }
    // Jacobi symbol (top / b) for odd b.
    let mut a = (top as i128).rem_euclid(b as i128) as u64;
    while a != 0 {
        while a.is_multiple_of(2) {
            a /= 2;
            if b % 8 == 3 || b % 8 == 5 {
                result = -result;
            }
        }
        std::mem::swap(&mut a, &mut b);
        if a % 4 == 3 && b % 4 == 3 {
            result = -result;
        }
        a %= b;
    }
    if b == 1 {
        result
    } else {
        0
    }
}

/// Kronecker symbol `(top / bottom)` for `bottom ≥ 1`, with `(top / 1) = 1`
/// for every `top` including `0`.
pub fn kronecker_symbol(top: i64, bottom: i64) -> Result<i32> {
    if bottom < 1 {
        return domain(format!(
            "kronecker_symbol requires bottom ≥ 1 (got {bottom})"
        ));
    }
    Ok(kronecker_u(top, bottom as u64))
}

pub fn euler_phi(n: i64) -> Result<i64> {
    let n = require_positive(n, "euler_phi")?;
    Ok(factorize(n)
        .iter()
        .fold(n, |acc, &(p, _)| acc / p * (p - 1)) as i64)
}

/// `N·∏_{p | N}(1 + 1/p)`, the index of `Γ₀(N)` in `SL(2,ℤ)`.
pub fn psi_index(n: i64) -> Result<i64> {
    let n = require_positive(n, "psi_index")?;
    Ok(factorize(n)
        .iter()
        .fold(n, |acc, &(p, _)| acc / p * (p + 1)) as i64)
}

pub(crate) fn divisors_u(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Positive divisors in increasing order.
pub fn divisors(n: i64) -> Result<Vec<i64>> {
    let n = require_positive(n, "divisors")?;
    Ok(divisors_u(n).into_iter().map(|d| d as i64).collect())
}

/// The negative `Δ` with `Δ | x` and `|x / Δ|` square-free, in decreasing
/// order of `|Δ|`. This is the summation range shared by every class-number
/// sum in the dimension formulas.
pub(crate) fn squarefree_cofactor_discriminants(x: u64) -> Vec<i64> {
    divisors_u(x)
        .into_iter()
        .rev()
        .filter(|&d| squarefree_u(x / d))
        .map(|d| -(d as i64))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn brute_square_part(n: i64) -> i64 {
        (1..=n)
            .filter(|q| q * q <= n && n % (q * q) == 0)
            .max()
            .unwrap()
    }

    fn legendre_by_residues(a: i64, p: i64) -> i32 {
        let a = a.rem_euclid(p);
        if a == 0 {
            0
        } else if (1..p).any(|x| (x * x) % p == a) {
            1
        } else {
            -1
        }
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(gcd(12, 8), 4);
        assert_eq!(gcd(0, 7), 7);
        assert_eq!(gcd(4, 3), 1);
        assert_eq!(gcd(0, 0), 0);
        assert_eq!(gcd(-6, 4), 2);
    }

    #[test]
    fn square_part_examples() {
        assert_eq!(square_part(16), Ok(4));
        assert_eq!(square_part(12), Ok(brute_square_part(12)));
        assert_eq!(square_part(12), Ok(2));
        assert_eq!(square_part(1), Ok(1));
        assert!(square_part(0).is_err());
    }

    #[test]
    fn core_square_examples() {
        assert_eq!(core_square_decompose(12), Ok((2, 3)));
        assert_eq!(core_square_decompose(1), Ok((1, 1)));
        assert_eq!(core_square_decompose(8), Ok((2, 2)));
        assert!(core_square_decompose(-3).is_err());
    }

    #[test]
    fn squarefree_examples() {
        assert_eq!(is_squarefree(6), Ok(true));
        assert_eq!(is_squarefree(-4), Ok(false));
        assert_eq!(is_squarefree(30), Ok(true));
        assert!(is_squarefree(0).is_err());
    }

    #[test]
    fn kronecker_examples() {
        assert_eq!(kronecker_symbol(0, 1), Ok(1));
        assert_eq!(kronecker_symbol(-4, 3), Ok(-1));
        assert_eq!(kronecker_symbol(-3, 2), Ok(-1));
        assert_eq!(kronecker_symbol(-7, 2), Ok(1));
        assert_eq!(kronecker_symbol(0, 2), Ok(0));
        assert_eq!(kronecker_symbol(6, 9), Ok(0));
        assert!(kronecker_symbol(3, 0).is_err());
    }

    #[test]
    fn phi_psi_divisors() {
        assert_eq!(euler_phi(1), Ok(1));
        assert_eq!(euler_phi(8), Ok(4));
        assert_eq!(euler_phi(3), Ok(2));
        for n in 1..200 {
            let count = (1..=n).filter(|&a| gcd(a, n) == 1).count() as i64;
            assert_eq!(euler_phi(n), Ok(count));
        }
        assert_eq!(psi_index(1), Ok(1));
        assert_eq!(psi_index(4), Ok(6));
        assert_eq!(psi_index(6), Ok(12));
        assert_eq!(divisors(4), Ok(vec![1, 2, 4]));
        assert_eq!(divisors(1), Ok(vec![1]));
        assert_eq!(divisors(12), Ok(vec![1, 2, 3, 4, 6, 12]));
        assert!(divisors(0).is_err());
    }

    #[test]
    fn discriminant_range() {
        assert_eq!(squarefree_cofactor_discriminants(4), vec![-4, -2]);
        assert_eq!(squarefree_cofactor_discriminants(8), vec![-8, -4]);
        assert_eq!(squarefree_cofactor_discriminants(1), vec![-1]);
    }

    #[test]
    fn rationals_are_reduced() {
        let x = frac(6, -4) + frac(1, 6);
        assert_eq!((*x.numer(), *x.denom()), (-4, 3));
        assert_eq!(frac(2, 4), frac(1, 2));
    }

    #[test]
    fn kronecker_matches_residue_count_for_odd_primes() {
        for p in [3i64, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
            for a in -60..=60 {
                assert_eq!(
                    kronecker_symbol(a, p).unwrap(),
                    legendre_by_residues(a, p),
                    "({a}/{p})"
                );
            }
        }
    }

    proptest! {
        #[test]
        fn square_part_invariants(n in 1i64..100_000) {
            let q = square_part(n).unwrap();
            prop_assert_eq!(n % (q * q), 0);
            prop_assert!(is_squarefree(n / (q * q)).unwrap());
            prop_assert_eq!(square_part(4 * n).unwrap(), 2 * q);
            let (a, b) = core_square_decompose(n).unwrap();
            prop_assert_eq!(a * a * b, n);
            prop_assert!(is_squarefree(b).unwrap());
        }

        #[test]
        fn kronecker_is_multiplicative(
            a in -200i64..200, b in -200i64..200, m in 1i64..300, n in 1i64..300,
        ) {
            let k = |x, y| kronecker_symbol(x, y).unwrap();
            prop_assert_eq!(k(a * b, m), k(a, m) * k(b, m));
            prop_assert_eq!(k(a, m * n), k(a, m) * k(a, n));
        }

        #[test]
        fn rational_ops_stay_reduced(a in -500i64..500, b in 1i64..500, c in -500i64..500, d in 1i64..500) {
            for x in [frac(a, b) + frac(c, d), frac(a, b) * frac(c, d), -frac(a, b)] {
                prop_assert_eq!(x.numer().gcd(x.denom()), 1);
                prop_assert!(*x.denom() >= 1);
            }
        }
    }
}
