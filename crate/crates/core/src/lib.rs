//! Exact dimensions of spaces of Jacobi cusp forms `S_{k,m}(Γ)` for
//! finite-index subgroups `Γ ≤ SL(2,ℤ)`.
//!
//! A subgroup enters every formula only through its [`BranchingScheme`]:
//! the cusp widths (split into regular and irregular cusps), the number of
//! elliptic orbits of each type, and whether `−1 ∈ Γ`. All values are
//! carried as exact rationals.
//!
//! ```
//! use jacobi_dim::{dim_jacobi, BranchingScheme};
//!
//! let gamma3 = BranchingScheme::principal_congruence(3).unwrap();
//! let dim = dim_jacobi(3, 1, &gamma3).unwrap();
//! assert_eq!(dim.value, 2.into());
//! assert!(dim.plain);
//! ```

pub mod arith;
pub mod class_numbers;
pub mod crosscheck;
pub mod dimensions;
mod error;
pub mod gegenbauer;
pub mod group;
pub mod s_functions;

pub use arith::Rational;
pub use class_numbers::{hurwitz_h1, hurwitz_hn, Discriminant, ReducedForm};
pub use dimensions::{dim_jacobi, DimensionResult};
pub use error::{Error, Result};
pub use group::BranchingScheme;
