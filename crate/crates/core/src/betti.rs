//! Graded Betti numbers of Stanley-Reisner ideals of a matroid and of all
//! its elongations.
//!
//! The fast route never builds a resolution. For a matroid the reduced
//! homology of every restriction `M|σ` is concentrated in dimension
//! `r(σ) - 1`, so Hochster's formula collapses to
//!
//! ```text
//! β_{i,σ}(M_l) = (-1)^{|σ| + n_l(σ)} · Σ_{γ ⊆ σ, n(γ) ≤ l} (-1)^{|γ|}   if i = n_l(σ) - 1
//! ```
//!
//! and zero otherwise. The inner sum over subsets is a zeta transform, so all
//! `σ` for one level cost `O(2^n · n)`.
//!
//! [`homology_dims_oracle`] computes the same homology from explicit boundary
//! matrices and is used to cross-check the fast route.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;
use thiserror::Error;

use crate::gf::FiniteField;
use crate::matrix::FieldMatrix;
use crate::matroid::Matroid;
use crate::subset::GroundSubset;

/// Largest ground set the chain-complex oracle accepts.
pub const ORACLE_MAX_N: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BettiError {
    #[error("homology oracle is limited to {cap} elements, got {n}")]
    OracleCapExceeded { n: usize, cap: usize },
}

/// `β_{i,j}` for one elongation level; zero entries are not stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedBettiTable {
    n: usize,
    level: i64,
    base_rank: usize,
    entries: BTreeMap<(usize, usize), u64>,
}

#[derive(Serialize)]
struct JsonEntry {
    i: usize,
    j: usize,
    beta: u64,
}

#[derive(Serialize)]
pub struct JsonTable {
    l: i64,
    entries: Vec<JsonEntry>,
}

impl GradedBettiTable {
    fn empty(n: usize, level: i64, base_rank: usize) -> Self {
        GradedBettiTable {
            n,
            level,
            base_rank,
            entries: BTreeMap::new(),
        }
    }

    /// Builds a table from explicit entries (zeros are dropped).
    pub fn from_entries<I>(n: usize, level: i64, base_rank: usize, entries: I) -> Self
    where
        I: IntoIterator<Item = ((usize, usize), u64)>,
    {
        GradedBettiTable {
            n,
            level,
            base_rank,
            entries: entries.into_iter().filter(|&(_, b)| b != 0).collect(),
        }
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    /// The elongation level `l`.
    pub fn level(&self) -> i64 {
        self.level
    }

    /// `r(M)` of the matroid the elongations were taken from.
    pub fn base_rank(&self) -> usize {
        self.base_rank
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Nonzero entries `((i, j), β_{i,j})` in increasing `(i, j)` order.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), u64)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    /// Largest homological index with a nonzero entry.
    pub fn max_index(&self) -> Option<usize> {
        self.entries.keys().map(|&(i, _)| i).max()
    }

    /// Text block: `l=<l>` then one `i=<i>: j=<j>:<β> ...` row per index.
    pub fn render(&self) -> String {
        let mut out = format!("l={}\n", self.level);
        let mut current = None;
        for (&(i, j), &b) in &self.entries {
            if current != Some(i) {
                if current.is_some() {
                    out.push('\n');
                }
                let _ = write!(out, "i={i}:");
                current = Some(i);
            }
            let _ = write!(out, " j={j}:{b}");
        }
        if current.is_some() {
            out.push('\n');
        }
        out
    }

    pub fn to_json_value(&self) -> JsonTable {
        JsonTable {
            l: self.level,
            entries: self
                .entries
                .iter()
                .map(|(&(i, j), &beta)| JsonEntry { i, j, beta })
                .collect(),
        }
    }
}

/// Reduced homology dimensions `dim H̃_d` for `d = -1, ..., r(M) - 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyDims {
    dims: Vec<u64>,
}

impl HomologyDims {
    /// `dim H̃_d`; zero outside the stored range.
    pub fn get(&self, d: isize) -> u64 {
        usize::try_from(d + 1)
            .ok()
            .and_then(|i| self.dims.get(i))
            .copied()
            .unwrap_or(0)
    }

    /// Pairs `(d, dim H̃_d)` starting at `d = -1`.
    pub fn iter(&self) -> impl Iterator<Item = (isize, u64)> + '_ {
        self.dims
            .iter()
            .enumerate()
            .map(|(i, &v)| (i as isize - 1, v))
    }
}

/// Reduced homology of the independence complex over GF(2), from explicit
/// boundary matrices (the empty face included).
pub fn homology_dims_oracle(m: &Matroid) -> Result<HomologyDims, BettiError> {
    homology_dims_over(m, &FiniteField::prime(2).expect("2 is prime"))
}

/// Same as [`homology_dims_oracle`] over an arbitrary finite field.
pub fn homology_dims_over(m: &Matroid, field: &FiniteField) -> Result<HomologyDims, BettiError> {
    let n = m.ground_size();
    if n > ORACLE_MAX_N {
        return Err(BettiError::OracleCapExceeded {
            n,
            cap: ORACLE_MAX_N,
        });
    }
    let r = m.rank();
    let mut faces: Vec<Vec<GroundSubset>> = vec![Vec::new(); r + 1];
    for s in m.independent_sets() {
        faces[s.len()].push(s);
    }
    let index: Vec<BTreeMap<GroundSubset, usize>> = faces
        .iter()
        .map(|fs| fs.iter().enumerate().map(|(i, &s)| (s, i)).collect())
        .collect();
    let minus_one = field.neg(1);
    // boundary_rank[c] = rank of the map from cardinality-c faces to
    // cardinality-(c-1) faces.
    let mut boundary_rank = vec![0usize; r + 2];
    for c in 1..=r {
        let mut d = FieldMatrix::zeros(field.clone(), faces[c - 1].len(), faces[c].len());
        for (col, &sigma) in faces[c].iter().enumerate() {
            for (pos, e) in sigma.labels().enumerate() {
                let sign = if pos % 2 == 0 { 1 } else { minus_one };
                let row = index[c - 1][&sigma.remove(e)];
                d.set(row, col, sign);
            }
        }
        boundary_rank[c] = d.rank();
    }
    let dims = (0..=r)
        .map(|c| (faces[c].len() - boundary_rank[c] - boundary_rank[c + 1]) as u64)
        .collect();
    Ok(HomologyDims { dims })
}

/// Signed count `Σ_{γ ⊆ σ, n(γ) ≤ level} (-1)^{|γ|}`.
fn signed_count(m: &Matroid, s: GroundSubset, level: usize) -> i64 {
    s.subsets()
        .filter(|&g| m.nullity_fast(g) <= level)
        .map(|g| if g.len() % 2 == 0 { 1 } else { -1 })
        .sum()
}

/// `β_{i,σ}` of `I_M`.
///
/// Nonzero only when `i + 1 = n(σ)`, in which case it equals
/// `(-1)^{r(σ) - 1} χ(M|σ)`.
pub fn betti_sigma(m: &Matroid, i: usize, s: GroundSubset) -> u64 {
    betti_sigma_at_level(m, 0, i, s)
}

/// `β_{i,σ}` of the Stanley-Reisner ideal of the elongation `M_level`.
pub fn betti_sigma_at_level(m: &Matroid, level: usize, i: usize, s: GroundSubset) -> u64 {
    let nul = m.nullity_fast(s);
    if nul <= level || i + 1 != nul - level {
        return 0;
    }
    let value = sign(s.len() + nul - level) * signed_count(m, s, level);
    debug_assert!(value >= 0, "Betti numbers are non-negative");
    value as u64
}

fn sign(e: usize) -> i64 {
    if e.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// In-place subset-sum (zeta) transform: `f[σ] <- Σ_{γ ⊆ σ} f[γ]`.
fn zeta_transform(f: &mut [i64], n: usize) {
    for bit in 0..n {
        let step = 1usize << bit;
        for mask in 0..f.len() {
            if mask & step != 0 {
                f[mask] += f[mask ^ step];
            }
        }
    }
}

/// Per-subset Betti numbers of one elongation level: `(σ, i, β_{i,σ})` for
/// every nonzero value, ordered by mask.
pub fn multigraded_betti(m: &Matroid, level: usize) -> Vec<(GroundSubset, usize, u64)> {
    let n = m.ground_size();
    if level > m.corank() {
        return Vec::new();
    }
    let table = m.rank_table();
    let mut f: Vec<i64> = (0..table.len())
        .map(|mask| {
            let size = mask.count_ones() as usize;
            if size - table[mask] as usize <= level {
                sign(size)
            } else {
                0
            }
        })
        .collect();
    zeta_transform(&mut f, n);
    collect_level(table, &f, level)
}

fn collect_level(table: &[u8], sums: &[i64], level: usize) -> Vec<(GroundSubset, usize, u64)> {
    let mut out = Vec::new();
    for (mask, &sum) in sums.iter().enumerate() {
        let size = mask.count_ones() as usize;
        let nul = size - table[mask] as usize;
        if nul <= level || sum == 0 {
            continue;
        }
        let value = sign(size + nul - level) * sum;
        debug_assert!(value > 0);
        out.push((
            GroundSubset::from_mask(mask as u32),
            nul - level - 1,
            value as u64,
        ));
    }
    out
}

/// The N-graded table of `M_level`. Levels outside `[0, n - r(M)]` give the
/// zero table.
pub fn graded_betti_table(m: &Matroid, level: i64) -> GradedBettiTable {
    let n = m.ground_size();
    match usize::try_from(level) {
        Ok(l) if l <= m.corank() => {
            let mut entries = BTreeMap::new();
            for (s, i, b) in multigraded_betti(m, l) {
                *entries.entry((i, s.len())).or_insert(0) += b;
            }
            GradedBettiTable {
                n,
                level,
                base_rank: m.rank(),
                entries,
            }
        }
        _ => GradedBettiTable::empty(n, level, m.rank()),
    }
}

/// Tables for every level `0..=n - r(M)`, sharing one cumulative sweep.
pub fn betti_tables(m: &Matroid) -> Vec<GradedBettiTable> {
    let n = m.ground_size();
    let table = m.rank_table();
    let mut base = vec![0i64; table.len()];
    let mut out = Vec::with_capacity(m.corank() + 1);
    for level in 0..=m.corank() {
        for (mask, slot) in base.iter_mut().enumerate() {
            let size = mask.count_ones() as usize;
            if size - table[mask] as usize == level {
                *slot = sign(size);
            }
        }
        let mut sums = base.clone();
        zeta_transform(&mut sums, n);
        let mut entries = BTreeMap::new();
        for (s, i, b) in collect_level(table, &sums, level) {
            *entries.entry((i, s.len())).or_insert(0) += b;
        }
        out.push(GradedBettiTable {
            n,
            level: level as i64,
            base_rank: m.rank(),
            entries,
        });
    }
    out
}

/// Checks that for `i ≥ 1`, `β^{(l)}_{i,j} ≠ 0` iff `β^{(l+1)}_{i-1,j} ≠ 0`,
/// over all `j` and all levels.
pub fn betti_support_shift_check(m: &Matroid) -> bool {
    let tables = betti_tables(m);
    support_shift_holds(&tables, m.ground_size())
}

pub(crate) fn support_shift_holds(tables: &[GradedBettiTable], n: usize) -> bool {
    let empty = GradedBettiTable::empty(n, -1, 0);
    let at = |l: usize| tables.get(l).unwrap_or(&empty);
    (0..tables.len()).all(|l| {
        (1..=n).all(|i| (0..=n).all(|j| (at(l).get(i, j) != 0) == (at(l + 1).get(i - 1, j) != 0)))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn set(n: usize, labels: &[usize]) -> GroundSubset {
        GroundSubset::from_labels(n, labels.iter().copied()).unwrap()
    }

    #[test]
    fn oracle_examples() {
        let two_points = Matroid::uniform(1, 2).unwrap();
        let h = homology_dims_oracle(&two_points).unwrap();
        assert_eq!(h.iter().collect::<Vec<_>>(), vec![(-1, 0), (0, 1)]);

        for n in 1..=6 {
            let h = homology_dims_oracle(&Matroid::free(n).unwrap()).unwrap();
            assert!(h.iter().all(|(_, d)| d == 0), "n={n}");
        }

        let h = homology_dims_oracle(&fixtures::gf5_7_4()).unwrap();
        assert_eq!(
            h.iter().collect::<Vec<_>>(),
            vec![(-1, 0), (0, 0), (1, 0), (2, 10)]
        );
    }

    #[test]
    fn oracle_rank_zero_matroid() {
        // Only the empty face: H̃_{-1} has dimension 1.
        let m = Matroid::uniform(0, 3).unwrap();
        let h = homology_dims_oracle(&m).unwrap();
        assert_eq!(h.get(-1), 1);
    }

    #[test]
    fn oracle_cap() {
        let m = Matroid::uniform(2, 13).unwrap();
        assert_eq!(
            homology_dims_oracle(&m),
            Err(BettiError::OracleCapExceeded {
                n: 13,
                cap: ORACLE_MAX_N
            })
        );
    }

    #[test]
    fn homology_is_field_independent_on_gf5_7_4() {
        let m = fixtures::gf5_7_4();
        let gf2 = homology_dims_oracle(&m).unwrap();
        for p in [3, 5, 7] {
            assert_eq!(
                homology_dims_over(&m, &FiniteField::prime(p).unwrap()).unwrap(),
                gf2
            );
        }
    }

    #[test]
    fn betti_sigma_examples() {
        let m = fixtures::gf5_7_4();
        assert_eq!(betti_sigma(&m, 0, set(7, &[5, 6])), 1);
        assert_eq!(betti_sigma(&m, 3, m.ground_set()), 10);
        for i in 0..5 {
            assert_eq!(betti_sigma(&m, i, set(7, &[1, 3, 6])), 0);
        }
    }

    #[test]
    fn gf5_7_4_tables() {
        let m = fixtures::gf5_7_4();
        let expect = |l: i64, entries: &[((usize, usize), u64)]| {
            GradedBettiTable::from_entries(7, l, 3, entries.iter().copied())
        };
        let tables = betti_tables(&m);
        assert_eq!(tables.len(), 5);
        assert_eq!(
            tables[0],
            expect(
                0,
                &[
                    ((0, 2), 1),
                    ((0, 3), 6),
                    ((0, 4), 6),
                    ((1, 4), 5),
                    ((1, 5), 28),
                    ((2, 6), 31),
                    ((3, 7), 10)
                ]
            )
        );
        assert_eq!(
            tables[1],
            expect(1, &[((0, 4), 2), ((0, 5), 15), ((1, 6), 29), ((2, 7), 13)])
        );
        assert_eq!(tables[2], expect(2, &[((0, 6), 7), ((1, 7), 6)]));
        assert_eq!(tables[3], expect(3, &[((0, 7), 1)]));
        assert!(tables[4].is_zero());
        for (l, t) in tables.iter().enumerate() {
            assert_eq!(&graded_betti_table(&m, l as i64), t);
        }
        assert!(graded_betti_table(&m, -1).is_zero());
        assert!(graded_betti_table(&m, 9).is_zero());
    }

    #[test]
    fn table_rendering() {
        let t = graded_betti_table(&fixtures::gf5_7_4(), 2);
        assert_eq!(t.render(), "l=2\ni=0: j=6:7\ni=1: j=7:6\n");
        let json = serde_json::to_string(&t.to_json_value()).unwrap();
        assert_eq!(
            json,
            r#"{"l":2,"entries":[{"i":0,"j":6,"beta":7},{"i":1,"j":7,"beta":6}]}"#
        );
        assert_eq!(
            graded_betti_table(&fixtures::gf5_7_4(), 4).render(),
            "l=4\n"
        );
    }

    #[test]
    fn support_shift_examples() {
        assert!(betti_support_shift_check(&fixtures::gf5_7_4()));
        for (r, n) in [(1, 4), (2, 5), (3, 7), (0, 3)] {
            assert!(betti_support_shift_check(&Matroid::uniform(r, n).unwrap()));
        }
        assert!(betti_support_shift_check(&Matroid::free(5).unwrap()));
    }

    #[test]
    fn support_shift_detects_a_broken_table() {
        let m = fixtures::gf5_7_4();
        let mut tables = betti_tables(&m);
        tables[1] =
            GradedBettiTable::from_entries(7, 1, 3, [((0, 4), 2), ((0, 5), 15), ((1, 6), 29)]);
        assert!(!support_shift_holds(&tables, 7));
    }

    #[test]
    fn uniform_closed_form() {
        let binom = |n: usize, k: usize| -> u64 {
            if k > n {
                0
            } else {
                (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i as u64 + 1))
            }
        };
        for n in 1..=8 {
            for r in 0..=n {
                let t = graded_betti_table(&Matroid::uniform(r, n).unwrap(), 0);
                for i in 0..=n {
                    for j in 0..=n {
                        let expected = if j >= r + 1 + i && i == j - r - 1 {
                            binom(j - 1, r) * binom(n, j)
                        } else {
                            0
                        };
                        assert_eq!(t.get(i, j), expected, "U({r},{n}) i={i} j={j}");
                    }
                }
            }
        }
    }
}
