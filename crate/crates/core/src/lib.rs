//! Generalized weight polynomials of matroids and linear codes.
//!
//! A [`Matroid`] is stored by its bases over a ground set `{1, ..., n}`.
//! From it the crate computes
//!
//! - graded Betti numbers of the Stanley-Reisner ideal of the matroid and of
//!   every elongation ([`betti`]),
//! - the generalized weight polynomials `P_{M,j}(Z)`, the enumerator
//!   `W(X, Y, Z)` and the Tutte polynomial, with conversions both ways
//!   ([`weight`]),
//! - the higher weight hierarchy `d_1 < d_2 < ...`.
//!
//! Linear codes over `GF(p^m)` enter through their parity-check matroid
//! ([`codes`]); brute-force enumeration over extension fields checks the
//! polynomials against actual codeword counts.
//!
//! All arithmetic is exact. Polynomial coefficients are `i128`.
//!
//! ```
//! use matroid_gwp::{fixtures, gwp_direct};
//!
//! let m = fixtures::gf5_7_4();
//! let p = gwp_direct(&m);
//! assert_eq!(p[5].to_string(), "15Z^2 - 43Z + 28");
//! ```

pub mod betti;
pub mod cli;
pub mod codes;
pub mod fixtures;
pub mod gf;
pub mod matrix;
pub mod matroid;
pub mod parse;
pub mod poly;
pub mod sample;
pub mod subset;
pub mod weight;

pub use betti::{betti_tables, graded_betti_table, homology_dims_oracle, GradedBettiTable};
pub use codes::{LinearCode, WeightDistribution};
pub use gf::FiniteField;
pub use matrix::FieldMatrix;
pub use matroid::{Matroid, MatroidError};
pub use parse::ParseError;
pub use poly::{BiPoly, Coeff, TriPoly, UniPoly};
pub use subset::GroundSubset;
pub use weight::{
    enumerator, enumerator_from_tutte, gwp_complement_form, gwp_direct, gwp_from_betti, gwp_naive,
    tutte, tutte_from_enumerator, WeightHierarchy,
};
