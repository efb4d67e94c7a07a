//! Matroids and codes shipped with the crate under `fixtures/`.
//!
//! The raw files are exposed as string constants so that examples, tests and
//! the command line all read the same bytes.

use crate::codes::LinearCode;
use crate::matrix::FieldMatrix;
use crate::matroid::Matroid;

pub const GF5_7_4_BASES: &str = include_str!("../fixtures/gf5_7_4.bases");
pub const GF5_7_4_PCHECK: &str = include_str!("../fixtures/gf5_7_4.pcheck");
pub const VAMOS_BASES: &str = include_str!("../fixtures/vamos.bases");
pub const COUNTEREXAMPLE_N7_BASES: &str = include_str!("../fixtures/counterexample_n7.bases");
pub const COUNTEREXAMPLE_M8_BASES: &str = include_str!("../fixtures/counterexample_m8.bases");
pub const COUNTEREXAMPLE_N8_BASES: &str = include_str!("../fixtures/counterexample_n8.bases");
pub const SIMPLEX_2_3_GEN: &str = include_str!("../fixtures/simplex_2_3.gen");
pub const HAMMING_7_4_GEN: &str = include_str!("../fixtures/hamming_7_4.gen");
pub const RS_GF4_GEN: &str = include_str!("../fixtures/rs_gf4.gen");
pub const UNIFORM_2_4_BASES: &str = include_str!("../fixtures/uniform_2_4.bases");
pub const UNIFORM_3_7_BASES: &str = include_str!("../fixtures/uniform_3_7.bases");

fn matroid(text: &str) -> Matroid {
    Matroid::parse(text).expect("bundled matroid fixture is valid")
}

fn matrix(text: &str) -> FieldMatrix {
    FieldMatrix::parse(text).expect("bundled matrix fixture is valid")
}

/// `M(H)` for the `[7,4]` code over GF(5), from its listed bases.
pub fn gf5_7_4() -> Matroid {
    matroid(GF5_7_4_BASES)
}

/// The 3x7 parity-check matrix over GF(5).
pub fn gf5_7_4_parity_check() -> FieldMatrix {
    matrix(GF5_7_4_PCHECK)
}

pub fn gf5_7_4_code() -> LinearCode {
    LinearCode::from_parity_check(gf5_7_4_parity_check()).expect("full row rank")
}

pub fn vamos() -> Matroid {
    matroid(VAMOS_BASES)
}

/// Seven-element matroid with the same weight polynomials as [`gf5_7_4`].
pub fn counterexample_n7() -> Matroid {
    matroid(COUNTEREXAMPLE_N7_BASES)
}

/// Eight-element pair with one shared Betti table and different `P_4`.
pub fn counterexample_pair_8() -> (Matroid, Matroid) {
    (
        matroid(COUNTEREXAMPLE_M8_BASES),
        matroid(COUNTEREXAMPLE_N8_BASES),
    )
}

pub fn simplex_2_3_generator() -> FieldMatrix {
    matrix(SIMPLEX_2_3_GEN)
}

pub fn simplex_2_3_code() -> LinearCode {
    LinearCode::from_generator(simplex_2_3_generator()).expect("full row rank")
}

pub fn hamming_7_4_code() -> LinearCode {
    LinearCode::from_generator(matrix(HAMMING_7_4_GEN)).expect("full row rank")
}

/// A `[5,2]` MDS code over GF(4).
pub fn rs_gf4_code() -> LinearCode {
    LinearCode::from_generator(matrix(RS_GF4_GEN)).expect("full row rank")
}
