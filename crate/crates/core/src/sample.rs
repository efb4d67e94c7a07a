//! Random matroids for property tests and examples.

use rand::Rng;

use crate::gf::FiniteField;
use crate::matrix::FieldMatrix;
use crate::matroid::Matroid;

/// Uniformly random `rows x cols` matrix over `field`.
pub fn random_matrix<R: Rng + ?Sized>(
    rng: &mut R,
    field: &FiniteField,
    rows: usize,
    cols: usize,
) -> FieldMatrix {
    let data = (0..rows * cols)
        .map(|_| rng.gen_range(0..field.order()))
        .collect();
    FieldMatrix::new(field.clone(), rows, cols, data).expect("entries drawn from the field")
}

/// Vector matroid of a random `r x n` matrix. The rank may fall below `r`.
pub fn random_vector_matroid<R: Rng + ?Sized>(
    rng: &mut R,
    field: &FiniteField,
    r: usize,
    n: usize,
) -> Matroid {
    random_matrix(rng, field, r, n)
        .vector_matroid()
        .expect("sampled ground set within the cap")
}

/// Random vector matroid over GF(2) or GF(5) with `1 <= n <= max_n`.
pub fn random_small_matroid<R: Rng + ?Sized>(rng: &mut R, max_n: usize) -> Matroid {
    let p = if rng.gen_bool(0.5) { 2 } else { 5 };
    let field = FiniteField::prime(p).expect("prime");
    let n = rng.gen_range(1..=max_n);
    let r = rng.gen_range(0..=n);
    random_vector_matroid(rng, &field, r, n)
}

/// `U(r, n)` elongated by `level`, with `r + level <= n`.
pub fn elongated_uniform(r: usize, n: usize, level: usize) -> Matroid {
    Matroid::uniform(r, n)
        .and_then(|u| u.elongate(level))
        .expect("parameters within range")
}
