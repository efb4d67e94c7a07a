//! Linear codes, their matroids, and extended weight distributions.

use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::gf::{FieldError, FiniteField};
use crate::matrix::FieldMatrix;
use crate::matroid::{Matroid, MatroidError};
use crate::poly::UniPoly;
use crate::subset::GroundSubset;
use crate::weight::gwp_direct;

/// Largest number of messages `q^{km}` brute-force enumeration will visit.
pub const ENUMERATION_BUDGET: u128 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodeError {
    #[error("matrix has rank {rank} but {rows} rows; a full-row-rank matrix is required")]
    RankDeficientMatrix { rank: usize, rows: usize },
    #[error("enumerating {words} words exceeds the budget of {ENUMERATION_BUDGET}")]
    EnumerationBudgetExceeded { words: u128 },
    #[error("extension degree must be at least 1")]
    ZeroExtension,
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Matroid(#[from] MatroidError),
}

/// A linear `[n, k]` code with generator `G` (`k x n`) and parity-check
/// matrix `H` (`(n-k) x n`), both of full row rank, `G H^T = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearCode {
    generator: FieldMatrix,
    parity_check: FieldMatrix,
}

impl LinearCode {
    pub fn from_parity_check(h: FieldMatrix) -> Result<Self, CodeError> {
        require_full_rank(&h)?;
        Ok(LinearCode {
            generator: h.kernel_basis(),
            parity_check: h,
        })
    }

    pub fn from_generator(g: FieldMatrix) -> Result<Self, CodeError> {
        require_full_rank(&g)?;
        Ok(LinearCode {
            parity_check: g.kernel_basis(),
            generator: g,
        })
    }

    /// The `[n, 0]` code.
    pub fn zero(field: FiniteField, n: usize) -> Self {
        LinearCode {
            generator: FieldMatrix::zeros(field.clone(), 0, n),
            parity_check: FieldMatrix::identity(field, n),
        }
    }

    pub fn field(&self) -> &FiniteField {
        self.generator.field()
    }

    pub fn length(&self) -> usize {
        self.generator.cols()
    }

    pub fn dimension(&self) -> usize {
        self.generator.rows()
    }

    pub fn generator(&self) -> &FieldMatrix {
        &self.generator
    }

    pub fn parity_check(&self) -> &FieldMatrix {
        &self.parity_check
    }

    /// `M(H)`, the matroid all weight polynomials are taken from.
    pub fn parity_matroid(&self) -> Result<Matroid, MatroidError> {
        self.parity_check.vector_matroid()
    }

    /// `M(G)`, equal to the dual of `M(H)`.
    pub fn generator_matroid(&self) -> Result<Matroid, MatroidError> {
        self.generator.vector_matroid()
    }

    /// Deletes the coordinates in `j` from every word.
    pub fn puncture(&self, j: GroundSubset) -> LinearCode {
        let keep = kept_columns(self.length(), j);
        let g = self.generator.select_columns(&keep).row_basis();
        if g.rows() == 0 {
            return LinearCode::zero(self.field().clone(), keep.len());
        }
        LinearCode::from_generator(g).expect("row basis has full rank")
    }

    /// Keeps the words vanishing on `j`, then deletes those coordinates.
    /// The parity-check matrix is `H` restricted to the remaining columns.
    pub fn shorten(&self, j: GroundSubset) -> LinearCode {
        let keep = kept_columns(self.length(), j);
        let h = self.parity_check.select_columns(&keep).row_basis();
        LinearCode::from_parity_check(h).expect("row basis has full rank")
    }

    /// Number of words of each weight in `C ⊗ GF(q^m)`, by enumerating all
    /// `q^{km}` messages.
    pub fn brute_force_distribution(&self, m: u32) -> Result<WeightDistribution, CodeError> {
        if m == 0 {
            return Err(CodeError::ZeroExtension);
        }
        let base = self.field();
        let (n, k) = (self.length(), self.dimension());
        let words = (base.order() as u128)
            .checked_pow(m * k as u32)
            .unwrap_or(u128::MAX);
        if words > ENUMERATION_BUDGET {
            return Err(CodeError::EnumerationBudgetExceeded { words });
        }
        let big = FiniteField::new(base.characteristic(), base.degree() * m)?;
        let order = big.order() as usize;
        let mut counts = vec![0u64; n + 1];
        if k == 0 {
            counts[0] = 1;
            return Ok(WeightDistribution { m, counts });
        }
        let embed = big.embedding_of(base)?;
        // multiples[t][a] = a * (row t of G), lifted into the big field.
        let multiples: Vec<Vec<Vec<u32>>> = (0..k)
            .map(|t| {
                let row: Vec<u32> = self
                    .generator
                    .row(t)
                    .iter()
                    .map(|&g| embed[g as usize])
                    .collect();
                big.elements()
                    .map(|a| row.iter().map(|&g| big.mul(a, g)).collect())
                    .collect()
            })
            .collect();
        let partial: Vec<Vec<u64>> = (0..order)
            .into_par_iter()
            .map(|lead| tally_block(&big, &multiples, lead, n))
            .collect();
        for block in partial {
            for (c, b) in counts.iter_mut().zip(block) {
                *c += b;
            }
        }
        Ok(WeightDistribution { m, counts })
    }

    /// `A_{C,j}(Q)` for `j = 0..=n`, as the GWPs of `M(H)`.
    pub fn extended_weight_polynomials(&self) -> Result<Vec<UniPoly>, CodeError> {
        Ok(gwp_direct(&self.parity_matroid()?))
    }
}

fn require_full_rank(m: &FieldMatrix) -> Result<(), CodeError> {
    let rank = m.rank();
    if rank != m.rows() {
        return Err(CodeError::RankDeficientMatrix {
            rank,
            rows: m.rows(),
        });
    }
    Ok(())
}

fn kept_columns(n: usize, j: GroundSubset) -> Vec<usize> {
    (1..=n).filter(|&e| !j.contains(e)).map(|e| e - 1).collect()
}

/// Weights of all messages whose first coordinate is `lead`, walking the
/// remaining coordinates as an odometer in compact-encoding order.
fn tally_block(
    field: &FiniteField,
    multiples: &[Vec<Vec<u32>>],
    lead: usize,
    n: usize,
) -> Vec<u64> {
    let k = multiples.len();
    let order = field.order() as usize;
    let mut counts = vec![0u64; n + 1];
    let mut digits = vec![0usize; k];
    digits[0] = lead;
    let mut word = multiples[0][lead].clone();
    loop {
        counts[word.iter().filter(|&&x| x != 0).count()] += 1;
        // Advance the odometer over positions 1..k.
        let mut t = k;
        loop {
            if t == 1 {
                return counts;
            }
            t -= 1;
            let old = digits[t];
            let new = if old + 1 == order { 0 } else { old + 1 };
            digits[t] = new;
            for (c, w) in word.iter_mut().enumerate() {
                *w = field.add(field.sub(*w, multiples[t][old][c]), multiples[t][new][c]);
            }
            if new != 0 {
                break;
            }
        }
    }
}

/// `A_j` for `j = 0..=n` in the extension to `GF(q^m)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeightDistribution {
    pub m: u32,
    pub counts: Vec<u64>,
}

impl WeightDistribution {
    pub fn total(&self) -> u128 {
        self.counts.iter().map(|&c| c as u128).sum()
    }

    /// Smallest positive weight that occurs.
    pub fn minimum_distance(&self) -> Option<usize> {
        self.counts
            .iter()
            .skip(1)
            .position(|&c| c != 0)
            .map(|j| j + 1)
    }

    /// `j  A_j` lines.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for (j, c) in self.counts.iter().enumerate() {
            let _ = writeln!(out, "{j}  {c}");
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("distribution JSON serialization")
    }
}
