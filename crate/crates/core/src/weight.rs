//! Generalized weight polynomials (GWPs), the three-variable enumerator, the
//! Tutte polynomial, and higher weights.
//!
//! Every quantity has at least two independent routes so the library can
//! check itself:
//!
//! * GWPs: [`gwp_direct`], [`gwp_complement_form`], [`gwp_from_betti`], and
//!   the literal triple sum [`gwp_naive`].
//! * Enumerator: [`enumerator`] (assembled from GWPs) and
//!   [`enumerator_via_complements`].
//! * Tutte polynomial: [`tutte`] and [`tutte_from_enumerator`].
//! * Higher weights: [`higher_weights_from_gwp`], [`higher_weights_from_betti`]
//!   and [`Matroid::higher_weights`].

use std::fmt;

use thiserror::Error;

use crate::betti::GradedBettiTable;
use crate::matroid::Matroid;
use crate::poly::{BiPoly, Coeff, TriPoly, UniPoly};
use crate::subset::GroundSubset;

/// The literal definition enumerates pairs `γ ⊆ σ ⊆ E` (3^n of them).
pub const NAIVE_MAX_N: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WeightError {
    #[error("naive GWP route is limited to {cap} elements, got {n}")]
    NaiveCapExceeded { n: usize, cap: usize },
    #[error("Betti tables disagree on the ground-set size ({0} vs {1})")]
    InconsistentTables(usize, usize),
    #[error("no Betti tables supplied")]
    NoTables,
    #[error("no weight polynomial has degree {0}")]
    MissingDegree(usize),
    #[error("level {0} has no nonzero β_0 entry")]
    MissingEntry(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConversionError {
    #[error("enumerator term with X-degree {x} and Y-degree {y} is not of total degree {n}")]
    NotHomogeneous { x: u32, y: u32, n: usize },
    #[error("division by (X-1)^{0} leaves a remainder; input is not a matroid enumerator")]
    NotDivisible(usize),
    #[error("Tutte polynomial exceeds the degree bounds deg_X <= {k}, deg_Y <= {corank}")]
    DegreeBound { k: usize, corank: usize },
    #[error("rank {k} exceeds ground-set size {n}")]
    RankTooLarge { k: usize, n: usize },
}

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> Coeff {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1, |acc: Coeff, i| acc * (n - i) as Coeff / (i as Coeff + 1))
}

fn sign(e: usize) -> Coeff {
    if e.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `P_{M,0}, ..., P_{M,n}` by one sweep over `γ ⊆ E`.
///
/// Uses `Σ_{|σ|=j} Σ_{γ⊆σ} f(γ) = Σ_γ C(n - |γ|, j - |γ|) f(γ)`, bucketing
/// subsets by cardinality and nullity.
pub fn gwp_direct(m: &Matroid) -> Vec<UniPoly> {
    let n = m.ground_size();
    let corank = m.corank();
    let mut buckets = vec![vec![0 as Coeff; corank + 1]; n + 1];
    let table = m.rank_table();
    for (mask, &r) in table.iter().enumerate() {
        let size = mask.count_ones() as usize;
        buckets[size][size - r as usize] += 1;
    }
    let mut out = vec![UniPoly::constant(1)];
    for j in 1..=n {
        let coeffs = (0..=corank)
            .map(|v| {
                sign(j)
                    * (0..=j)
                        .map(|s| sign(s) * binomial(n - s, j - s) * buckets[s][v])
                        .sum::<Coeff>()
            })
            .collect();
        out.push(UniPoly::from_coeffs(coeffs));
    }
    out
}

/// The defining triple sum `(-1)^j Σ_{|σ|=j} Σ_{γ⊆σ} (-1)^{|γ|} Z^{n(γ)}`,
/// evaluated literally.
pub fn gwp_naive(m: &Matroid) -> Result<Vec<UniPoly>, WeightError> {
    let n = m.ground_size();
    if n > NAIVE_MAX_N {
        return Err(WeightError::NaiveCapExceeded {
            n,
            cap: NAIVE_MAX_N,
        });
    }
    let mut out = vec![UniPoly::constant(1)];
    for j in 1..=n {
        let mut coeffs = vec![0 as Coeff; m.corank() + 1];
        for sigma in GroundSubset::all_of_size(n, j) {
            for gamma in sigma.subsets() {
                coeffs[m.nullity_fast(gamma)] += sign(gamma.len());
            }
        }
        out.push(UniPoly::from_coeffs(
            coeffs.into_iter().map(|c| sign(j) * c).collect(),
        ));
    }
    Ok(out)
}

/// GWPs through complements:
/// `P_i = Σ_{j=n-i}^{n} (-1)^{i+j+n} C(j, n-i) Σ_{|γ|=j} Z^{n(E∖γ)}`.
pub fn gwp_complement_form(m: &Matroid) -> Vec<UniPoly> {
    let n = m.ground_size();
    let counts = complement_counts(m);
    (0..=n)
        .map(|i| {
            let coeffs = (0..=m.corank())
                .map(|v| {
                    (n - i..=n)
                        .map(|j| sign(i + j + n) * binomial(j, n - i) * counts[j][v])
                        .sum()
                })
                .collect();
            UniPoly::from_coeffs(coeffs)
        })
        .collect()
}

/// `counts[j][v] = #{γ : |γ| = j, n(E∖γ) = v}`.
fn complement_counts(m: &Matroid) -> Vec<Vec<Coeff>> {
    let n = m.ground_size();
    let full = m.ground_set();
    let mut counts = vec![vec![0 as Coeff; m.corank() + 1]; n + 1];
    for mask in 0..(1u32 << n) {
        let gamma = GroundSubset::from_mask(mask);
        counts[gamma.len()][m.nullity_fast(full.difference(gamma))] += 1;
    }
    counts
}

/// GWPs from the Betti tables of `M` and its elongations: the coefficient of
/// `Z^l` in `P_{M,j}` is `Σ_i (-1)^i (β^{(l-1)}_{i,j} - β^{(l)}_{i,j})`.
///
/// Levels that are not supplied count as zero tables.
pub fn gwp_from_betti(tables: &[GradedBettiTable]) -> Result<Vec<UniPoly>, WeightError> {
    let n = tables.first().ok_or(WeightError::NoTables)?.ground_size();
    if let Some(t) = tables.iter().find(|t| t.ground_size() != n) {
        return Err(WeightError::InconsistentTables(n, t.ground_size()));
    }
    let alternating = |level: i64, j: usize| -> Coeff {
        tables
            .iter()
            .filter(|t| t.level() == level)
            .flat_map(|t| t.entries())
            .filter(|&((_, jj), _)| jj == j)
            .map(|((i, _), b)| sign(i) * b as Coeff)
            .sum()
    };
    let mut out = vec![UniPoly::constant(1)];
    for j in 1..=n {
        let coeffs = (0..=n as i64)
            .map(|l| alternating(l - 1, j) - alternating(l, j))
            .collect();
        out.push(UniPoly::from_coeffs(coeffs));
    }
    Ok(out)
}

/// `W(X, Y, Z) = Σ_i P_{M,i}(Z) X^{n-i} Y^i`.
pub fn enumerator_from_gwp(gwp: &[UniPoly]) -> TriPoly {
    let n = gwp.len().saturating_sub(1) as u32;
    let mut w = TriPoly::zero();
    for (i, p) in gwp.iter().enumerate() {
        for (z, &c) in p.coeffs().iter().enumerate() {
            w.add_term([n - i as u32, i as u32, z as u32], c);
        }
    }
    w
}

pub fn enumerator(m: &Matroid) -> TriPoly {
    enumerator_from_gwp(&gwp_direct(m))
}

/// `W = Σ_j Σ_{|γ|=j} Z^{n(E∖γ)} (X - Y)^j Y^{n-j}`, never touching the
/// GWPs.
pub fn enumerator_via_complements(m: &Matroid) -> TriPoly {
    let n = m.ground_size();
    let counts = complement_counts(m);
    let mut w = TriPoly::zero();
    for (j, row) in counts.iter().enumerate() {
        for (v, &count) in row.iter().enumerate() {
            if count == 0 {
                continue;
            }
            for t in 0..=j {
                let c = count * binomial(j, t) * sign(t);
                w.add_term([(j - t) as u32, (t + n - j) as u32, v as u32], c);
            }
        }
    }
    w
}

/// Corank-nullity expansion `Σ_σ (X-1)^{r(E)-r(σ)} (Y-1)^{|σ|-r(σ)}`.
pub fn tutte(m: &Matroid) -> BiPoly {
    let k = m.rank();
    let mut counts = vec![vec![0 as Coeff; m.corank() + 1]; k + 1];
    for (mask, &r) in m.rank_table().iter().enumerate() {
        let size = mask.count_ones() as usize;
        counts[k - r as usize][size - r as usize] += 1;
    }
    let mut t = BiPoly::zero();
    for (a, row) in counts.iter().enumerate() {
        for (b, &count) in row.iter().enumerate() {
            if count == 0 {
                continue;
            }
            // (X-1)^a (Y-1)^b
            for x in 0..=a {
                for y in 0..=b {
                    let c = count * binomial(a, x) * binomial(b, y) * sign(a - x + b - y);
                    t.add_term([x as u32, y as u32], c);
                }
            }
        }
    }
    t
}

/// `t(X, Y) = (X-1)^{-(n-k)} X^n W(1, X^{-1}, (X-1)(Y-1))`.
///
/// Since `W` is homogeneous of degree `n` in `X, Y`, this equals
/// `W(X, 1, (X-1)(Y-1)) / (X-1)^{n-k}`, computed as exact polynomial
/// division. A nonzero remainder means `W` was not a matroid enumerator.
pub fn tutte_from_enumerator(w: &TriPoly, n: usize, k: usize) -> Result<BiPoly, ConversionError> {
    if k > n {
        return Err(ConversionError::RankTooLarge { k, n });
    }
    let z_sub = BiPoly::from_terms([([1, 1], 1), ([1, 0], -1), ([0, 1], -1), ([0, 0], 1)]);
    let mut numerator = BiPoly::zero();
    for (&[x, y, z], &c) in w.terms() {
        if (x + y) as usize != n {
            return Err(ConversionError::NotHomogeneous { x, y, n });
        }
        let term = BiPoly::monomial([x, 0], c).mul(&z_sub.pow(z));
        numerator = numerator.add(&term);
    }
    divide_by_x_minus_one(&numerator, n - k).ok_or(ConversionError::NotDivisible(n - k))
}

/// Exact division by `(X - 1)^times`, one synthetic division per power;
/// `None` on a nonzero remainder.
fn divide_by_x_minus_one(p: &BiPoly, times: usize) -> Option<BiPoly> {
    let mut current = p.clone();
    for _ in 0..times {
        let max_y = match current.degree_in(1) {
            Some(d) => d,
            None => return Some(current),
        };
        let mut next = BiPoly::zero();
        for y in 0..=max_y {
            let column: Vec<Coeff> = {
                let dx = current.degree_in(0).unwrap_or(0) as usize;
                (0..=dx).map(|x| current.coeff([x as u32, y])).collect()
            };
            let mut carry = 0;
            for x in (1..column.len()).rev() {
                carry += column[x];
                next.add_term([(x - 1) as u32, y], carry);
            }
            if column[0] + carry != 0 {
                return None;
            }
        }
        current = next;
    }
    Some(current)
}

/// `W = (X-Y)^{n-k} Y^k t(X/Y, (X + (Z-1)Y)/(X-Y))`, expanded term by term
/// as `X^a Y^{k-a} (X + (Z-1)Y)^b (X-Y)^{n-k-b}`.
pub fn enumerator_from_tutte(t: &BiPoly, n: usize, k: usize) -> Result<TriPoly, ConversionError> {
    if k > n {
        return Err(ConversionError::RankTooLarge { k, n });
    }
    let corank = n - k;
    if t.degree_in(0).unwrap_or(0) as usize > k || t.degree_in(1).unwrap_or(0) as usize > corank {
        return Err(ConversionError::DegreeBound { k, corank });
    }
    // X + ZY - Y and X - Y
    let mixed = TriPoly::from_terms([([1, 0, 0], 1), ([0, 1, 1], 1), ([0, 1, 0], -1)]);
    let diff = TriPoly::from_terms([([1, 0, 0], 1), ([0, 1, 0], -1)]);
    let mut w = TriPoly::zero();
    for (&[a, b], &c) in t.terms() {
        let term = TriPoly::monomial([a, k as u32 - a, 0], c)
            .mul(&mixed.pow(b))
            .mul(&diff.pow(corank as u32 - b));
        w = w.add(&term);
    }
    Ok(w)
}

/// GWP of the next elongation: `a_n Z^n + ... + a_1 Z + a_0` becomes
/// `a_n Z^{n-1} + ... + a_2 Z + (a_1 + a_0)`.
pub fn gwp_elongation_shift(p: &UniPoly) -> UniPoly {
    let c = p.coeffs();
    if c.len() <= 1 {
        return p.clone();
    }
    let mut out = Vec::with_capacity(c.len() - 1);
    out.push(c[0] + c[1]);
    out.extend_from_slice(&c[2..]);
    UniPoly::from_coeffs(out)
}

/// `d_1 < d_2 < ... < d_{n-r(M)}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightHierarchy(Vec<usize>);

impl WeightHierarchy {
    pub fn new(weights: Vec<usize>) -> Self {
        WeightHierarchy(weights)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    /// `d_i` for 1-based `i`.
    pub fn get(&self, i: usize) -> Option<usize> {
        i.checked_sub(1).and_then(|i| self.0.get(i)).copied()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_strictly_increasing(&self) -> bool {
        self.0.windows(2).all(|w| w[0] < w[1])
    }
}

impl fmt::Display for WeightHierarchy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// `d_i = min{s : deg P_{M,s} = i}` for `i = 1..=n - r(M)`.
///
/// `n - r(M)` is the largest degree among the `P_{M,s}`. It is not always
/// attained by `P_{M,n}`, which vanishes when `M` has a coloop.
pub fn higher_weights_from_gwp(gwp: &[UniPoly]) -> Result<WeightHierarchy, WeightError> {
    let top = gwp.iter().filter_map(UniPoly::degree).max().unwrap_or(0);
    let weights = (1..=top)
        .map(|i| {
            gwp.iter()
                .position(|p| p.degree() == Some(i))
                .ok_or(WeightError::MissingDegree(i))
        })
        .collect::<Result<_, _>>()?;
    Ok(WeightHierarchy(weights))
}

/// `d_i = min{j : β^{(i-1)}_{0,j} ≠ 0}` for `i = 1..=n - r(M)`.
pub fn higher_weights_from_betti(
    tables: &[GradedBettiTable],
) -> Result<WeightHierarchy, WeightError> {
    let first = tables.first().ok_or(WeightError::NoTables)?;
    let corank = first.ground_size() - first.base_rank();
    let weights = (1..=corank)
        .map(|i| {
            tables
                .iter()
                .filter(|t| t.level() == i as i64 - 1)
                .flat_map(|t| t.entries())
                .filter(|&((h, _), _)| h == 0)
                .map(|((_, j), _)| j)
                .min()
                .ok_or(WeightError::MissingEntry(i - 1))
        })
        .collect::<Result<_, _>>()?;
    Ok(WeightHierarchy(weights))
}

/// Brute-force hierarchy from the nullity function.
pub fn higher_weights_by_nullity(m: &Matroid) -> WeightHierarchy {
    WeightHierarchy(m.higher_weights())
}

/// Closed form for the GWPs of `U(r, n)` (parity-check matroid of an MDS
/// code): for `j ≥ 1`,
/// `(-1)^{j+r} C(n,j) (Σ_{l≥1} (-1)^l C(j, r+l) Z^l + C(j-1, r))`.
pub fn uniform_gwp_closed_form(r: usize, n: usize) -> Vec<UniPoly> {
    let mut out = vec![UniPoly::constant(1)];
    for j in 1..=n {
        let outer = sign(j + r) * binomial(n, j);
        let mut coeffs = vec![outer * binomial(j - 1, r)];
        for l in 1..=n {
            coeffs.push(outer * sign(l) * binomial(j, r + l));
        }
        out.push(UniPoly::from_coeffs(coeffs));
    }
    out
}
