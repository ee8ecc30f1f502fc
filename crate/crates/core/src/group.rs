//! Branching schemes: the data of a finite-index subgroup `Γ ≤ SL(2,ℤ)`
//! that the dimension formulas consume.
//!
//! A scheme records whether `−1 ∈ Γ`, the widths of the regular and
//! irregular cusps, and the number of elliptic orbits `e0` (equivalent to
//! `i`) and `e1` (equivalent to `e^{2πi/3}`, the common value
//! `e(−1) = e(+1)`). Synthetic schemes are accepted as long as they satisfy
//! the structural invariants; no realizing group is constructed.

use serde::{Deserialize, Serialize};

use crate::arith::{euler_phi, factorize, gcd, kronecker_u, psi_index};
use crate::error::{domain, Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "SchemeJson", into = "SchemeJson")]
pub struct BranchingScheme {
    contains_minus_one: bool,
    regular_widths: Vec<i64>,
    irregular_widths: Vec<i64>,
    e0: i64,
    e1: i64,
}

/// Wire form: `{"minus_one", "regular_widths", "irregular_widths", "e0", "e1"}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SchemeJson {
    minus_one: bool,
    regular_widths: Vec<i64>,
    #[serde(default)]
    irregular_widths: Vec<i64>,
    e0: i64,
    e1: i64,
}

impl TryFrom<SchemeJson> for BranchingScheme {
    type Error = Error;

    fn try_from(raw: SchemeJson) -> Result<Self> {
        Self::new(
            raw.minus_one,
            raw.regular_widths,
            raw.irregular_widths,
            raw.e0,
            raw.e1,
        )
    }
}

impl From<BranchingScheme> for SchemeJson {
    fn from(s: BranchingScheme) -> Self {
        Self {
            minus_one: s.contains_minus_one,
            regular_widths: s.regular_widths,
            irregular_widths: s.irregular_widths,
            e0: s.e0,
            e1: s.e1,
        }
    }
}

fn invalid<T>(msg: &str) -> Result<T> {
    Err(Error::InvalidScheme(msg.to_owned()))
}

impl BranchingScheme {
    /// Validates and builds a scheme. Width lists are stored sorted.
    pub fn new(
        contains_minus_one: bool,
        mut regular_widths: Vec<i64>,
        mut irregular_widths: Vec<i64>,
        e0: i64,
        e1: i64,
    ) -> Result<Self> {
        if regular_widths.is_empty() && irregular_widths.is_empty() {
            return invalid("at least one cusp is required");
        }
        if regular_widths
            .iter()
            .chain(&irregular_widths)
            .any(|&b| b < 1)
        {
            return invalid("cusp widths must be positive");
        }
        if e0 < 0 || e1 < 0 {
            return invalid("elliptic orbit counts e0, e1 must be nonnegative");
        }
        if contains_minus_one && !irregular_widths.is_empty() {
            return invalid("a group containing −1 has no irregular cusps");
        }
        if !contains_minus_one && e0 != 0 {
            return invalid("a group without −1 has no elliptic points of order 4 (e0 must be 0)");
        }
        regular_widths.sort_unstable();
        irregular_widths.sort_unstable();
        Ok(Self {
            contains_minus_one,
            regular_widths,
            irregular_widths,
            e0,
            e1,
        })
    }

    /// A scheme with only regular cusps and no elliptic points, as for a
    /// torsion-free group without elements of trace `−2`.
    pub fn torsion_free(widths: Vec<i64>) -> Result<Self> {
        Self::new(false, widths, Vec::new(), 0, 0)
    }

    pub fn contains_minus_one(&self) -> bool {
        self.contains_minus_one
    }

    pub fn regular_widths(&self) -> &[i64] {
        &self.regular_widths
    }

    pub fn irregular_widths(&self) -> &[i64] {
        &self.irregular_widths
    }

    pub fn e0(&self) -> i64 {
        self.e0
    }

    pub fn e1(&self) -> i64 {
        self.e1
    }

    pub fn cusp_count(&self) -> usize {
        self.regular_widths.len() + self.irregular_widths.len()
    }

    /// `[SL(2,ℤ) : {±1}·Γ]`, the sum of all cusp widths.
    pub fn psl_index(&self) -> i64 {
        self.regular_widths
            .iter()
            .chain(&self.irregular_widths)
            .sum()
    }

    /// `Γ(N)`.
    pub fn principal_congruence(n: i64) -> Result<Self> {
        match n {
            i64::MIN..=0 => domain(format!("level N must be ≥ 1 (got {n})")),
            1 => Self::new(true, vec![1], vec![], 1, 1),
            2 => Self::new(true, vec![2; 3], vec![], 0, 0),
            _ => {
                let cusps = euler_phi(n)? * psi_index(n)? / 2;
                Self::new(false, vec![n; cusps as usize], vec![], 0, 0)
            }
        }
    }

    /// `Γ₀(N)`: for each `c | N`, `φ((c, N/c))` cusps of width `N/(c², N)`.
    pub fn gamma0(n: i64) -> Result<Self> {
        if n < 1 {
            return domain(format!("level N must be ≥ 1 (got {n})"));
        }
        let mut widths = Vec::new();
        for c in crate::arith::divisors(n)? {
            let count = euler_phi(gcd(c, n / c))?;
            let width = n / gcd(c * c, n);
            widths.extend(std::iter::repeat_n(width, count as usize));
        }
        let primes = factorize(n as u64);
        let nu2 = if n % 4 == 0 {
            0
        } else {
            primes
                .iter()
                .map(|&(p, _)| 1 + kronecker_u(-4, p) as i64)
                .product()
        };
        let nu3 = if n % 9 == 0 {
            0
        } else {
            primes
                .iter()
                .map(|&(p, _)| 1 + kronecker_u(-3, p) as i64)
                .product()
        };
        Self::new(true, widths, vec![], nu2, nu3)
    }

    /// `Γ₁(N)`. Cusps are found as orbits of primitive vectors `(a, c)`
    /// mod `N` under `(a, c) ↦ (a + c, c)` and `−1`; a cusp is irregular
    /// when its stabilizer is generated by an element of trace `−2`.
    pub fn gamma1(n: i64) -> Result<Self> {
        if n < 1 {
            return domain(format!("level N must be ≥ 1 (got {n})"));
        }
        if n <= 2 {
            return Self::gamma0(n);
        }
        let mut regular = Vec::new();
        let mut irregular = Vec::new();
        for (a, c) in gamma1_cusp_representatives(n) {
            let (width, is_regular) = gamma1_cusp_width(n, a, c);
            if is_regular {
                regular.push(width);
            } else {
                irregular.push(width);
            }
        }
        let e1 = if n == 3 { 1 } else { 0 };
        Self::new(false, regular, irregular, 0, e1)
    }
}

/// One `(a, c)` per cusp of `Γ₁(N)`, `N ≥ 3`.
pub(crate) fn gamma1_cusp_representatives(n: i64) -> Vec<(i64, i64)> {
    let size = n as usize;
    let mut seen = vec![false; size * size];
    let mut reps = Vec::new();
    for c in 0..n {
        for a in 0..n {
            if seen[(a * n + c) as usize] || gcd(gcd(a, c), n) != 1 {
                continue;
            }
            reps.push((a, c));
            for sign in [1, -1] {
                for j in 0..n {
                    let a2 = (sign * (a + j * c)).rem_euclid(n);
                    let c2 = (sign * c).rem_euclid(n);
                    seen[(a2 * n + c2) as usize] = true;
                }
            }
        }
    }
    reps
}

/// Smallest `w ≥ 1` with `±g·T^w·g⁻¹ ∈ Γ₁(N)` for `g` with first column
/// `(a, c)`; the flag is true when the `+` sign occurs (regular cusp).
fn gamma1_cusp_width(n: i64, a: i64, c: i64) -> (i64, bool) {
    // g·T^w·g⁻¹ = [[1 − acw, a²w], [−c²w, 1 + acw]].
    let in_gamma1 = |sign: i64, w: i64| {
        let lower_left = (sign * -c * c * w).rem_euclid(n);
        let top_left = (sign * (1 - a * c * w)).rem_euclid(n);
        let bottom_right = (sign * (1 + a * c * w)).rem_euclid(n);
        lower_left == 0 && top_left == 1 % n && bottom_right == 1 % n
    };
    for w in 1..=n {
        if in_gamma1(1, w) {
            return (w, true);
        }
        if in_gamma1(-1, w) {
            return (w, false);
        }
    }
    unreachable!("T^N conjugates always lie in Γ(N)")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sl2_index_gamma1(n: i64) -> i64 {
        // N²·∏(1 − p⁻²)
        factorize(n as u64).iter().fold(n * n, |acc, &(p, _)| {
            acc / (p * p) as i64 * (p * p - 1) as i64
        })
    }

    #[test]
    fn psl_index_examples() {
        assert_eq!(
            BranchingScheme::principal_congruence(1)
                .unwrap()
                .psl_index(),
            1
        );
        assert_eq!(
            BranchingScheme::principal_congruence(3)
                .unwrap()
                .psl_index(),
            12
        );
        assert_eq!(BranchingScheme::gamma0(4).unwrap().psl_index(), 6);
    }

    #[test]
    fn principal_congruence_examples() {
        let g4 = BranchingScheme::principal_congruence(4).unwrap();
        assert!(!g4.contains_minus_one());
        assert_eq!(g4.regular_widths(), &[4; 6]);
        assert_eq!((g4.e0(), g4.e1()), (0, 0));
        assert_eq!(g4.psl_index(), 24);

        let g1 = BranchingScheme::principal_congruence(1).unwrap();
        assert!(g1.contains_minus_one());
        assert_eq!(g1.regular_widths(), &[1]);
        assert_eq!((g1.e0(), g1.e1()), (1, 1));

        let g3 = BranchingScheme::principal_congruence(3).unwrap();
        assert_eq!(g3.regular_widths(), &[3; 4]);
        assert!(BranchingScheme::principal_congruence(0).is_err());
    }

    #[test]
    fn gamma0_examples() {
        assert_eq!(
            BranchingScheme::gamma0(1),
            BranchingScheme::principal_congruence(1)
        );
        let g = BranchingScheme::gamma0(4).unwrap();
        assert_eq!(g.regular_widths(), &[1, 1, 4]);
        assert_eq!((g.e0(), g.e1()), (0, 0));
        let g = BranchingScheme::gamma0(11).unwrap();
        assert_eq!(g.regular_widths(), &[1, 11]);
        assert_eq!((g.e0(), g.e1()), (0, 0));
        assert_eq!(g.psl_index(), 12);
        let g = BranchingScheme::gamma0(13).unwrap();
        assert_eq!((g.e0(), g.e1()), (2, 2));
        let g = BranchingScheme::gamma0(2).unwrap();
        assert_eq!((g.e0(), g.e1()), (1, 0));
        let g = BranchingScheme::gamma0(3).unwrap();
        assert_eq!((g.e0(), g.e1()), (0, 1));
    }

    #[test]
    fn gamma1_examples() {
        let g = BranchingScheme::gamma1(4).unwrap();
        assert!(!g.contains_minus_one());
        assert_eq!(g.regular_widths(), &[1, 4]);
        assert_eq!(g.irregular_widths(), &[1]);
        assert_eq!((g.e0(), g.e1()), (0, 0));
        assert_eq!(g.psl_index(), 6);

        let g = BranchingScheme::gamma1(3).unwrap();
        assert_eq!(g.regular_widths(), &[1, 3]);
        assert!(g.irregular_widths().is_empty());
        assert_eq!((g.e0(), g.e1()), (0, 1));
        assert_eq!(g.psl_index(), 4);

        let g = BranchingScheme::gamma1(5).unwrap();
        assert_eq!(g.cusp_count(), 4);
        assert_eq!(g.psl_index(), 12);
        assert_eq!(BranchingScheme::gamma1(2), BranchingScheme::gamma0(2));
    }

    #[test]
    fn gamma1_cusp_count_and_index() {
        for n in 5..=60 {
            let g = BranchingScheme::gamma1(n).unwrap();
            assert!(g.irregular_widths().is_empty(), "N = {n}");
            assert_eq!(2 * g.psl_index(), sl2_index_gamma1(n), "N = {n}");
            let expected: i64 = crate::arith::divisors(n)
                .unwrap()
                .iter()
                .map(|&d| euler_phi(d).unwrap() * euler_phi(n / d).unwrap())
                .sum::<i64>()
                / 2;
            assert_eq!(g.cusp_count() as i64, expected, "N = {n}");
        }
    }

    #[test]
    fn validation_names_the_invariant() {
        let err = BranchingScheme::new(true, vec![1], vec![2], 0, 0).unwrap_err();
        assert!(err.to_string().contains("irregular"));
        let err = BranchingScheme::new(false, vec![1], vec![], 1, 0).unwrap_err();
        assert!(err.to_string().contains("e0"));
        assert!(BranchingScheme::new(true, vec![], vec![], 0, 0).is_err());
        assert!(BranchingScheme::new(true, vec![0], vec![], 0, 0).is_err());
        assert!(BranchingScheme::new(true, vec![1], vec![], -1, 0).is_err());
    }

    #[test]
    fn json_round_trip() {
        let g = BranchingScheme::gamma1(4).unwrap();
        let text = serde_json::to_string(&g).unwrap();
        assert_eq!(
            text,
            r#"{"minus_one":false,"regular_widths":[1,4],"irregular_widths":[1],"e0":0,"e1":0}"#
        );
        assert_eq!(serde_json::from_str::<BranchingScheme>(&text).unwrap(), g);

        let bad = r#"{"minus_one":true,"regular_widths":[1],"irregular_widths":[1],"e0":0,"e1":0}"#;
        let err = serde_json::from_str::<BranchingScheme>(bad).unwrap_err();
        assert!(err.to_string().contains("irregular cusps"));
    }
}
