//! Matroids on small ground sets, stored by their bases.
//!
//! Every derived quantity (independent sets, the full rank table, circuits)
//! is computed on demand and cached. Caches are filled through [`OnceLock`],
//! so concurrent readers may race to compute the same value but only one
//! result is ever installed.

use std::collections::HashSet;
use std::fmt::Write as _;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::parse::{content_lines, key_value, ParseError};
use crate::subset::{ground_set_cap, GroundSubset};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatroidError {
    #[error("the basis family is empty")]
    EmptyBasisFamily,
    #[error("bases {first} and {second} have different cardinalities")]
    UnequalBasisCardinality {
        first: GroundSubset,
        second: GroundSubset,
    },
    #[error(
        "basis exchange fails: removing {removed} from {first} admits no replacement from {second}"
    )]
    ExchangeAxiomViolation {
        first: GroundSubset,
        second: GroundSubset,
        removed: usize,
    },
    #[error("element {element} is outside the ground set {{1,...,{n}}}")]
    ElementOutOfRange { element: usize, n: usize },
    #[error("ground set of size {n} exceeds the cap of {cap} (set MATROID_MAX_N to raise it)")]
    GroundSetTooLarge { n: usize, cap: usize },
    #[error("rank {rank} exceeds ground-set size {n}")]
    RankTooLarge { rank: usize, n: usize },
    #[error("elongation level {level} outside [0, {max}]")]
    ElongationOutOfRange { level: usize, max: usize },
}

pub(crate) fn check_cap(n: usize) -> Result<(), MatroidError> {
    let cap = ground_set_cap();
    if n > cap {
        Err(MatroidError::GroundSetTooLarge { n, cap })
    } else {
        Ok(())
    }
}

/// A matroid on `{1, ..., n}` given by its bases.
#[derive(Debug, Clone)]
pub struct Matroid {
    n: usize,
    rank: usize,
    bases: Vec<GroundSubset>,
    rank_table: OnceLock<Vec<u8>>,
    circuits: OnceLock<Vec<GroundSubset>>,
}

impl PartialEq for Matroid {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.bases == other.bases
    }
}

impl Eq for Matroid {}

/// A restriction `M|σ` relabelled onto `{1, ..., |σ|}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Restriction {
    pub matroid: Matroid,
    /// `elements[i]` is the original label of new label `i + 1`.
    pub elements: Vec<usize>,
}

/// Rank and nullity of one subset.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RankProfile {
    pub rank: usize,
    pub nullity: usize,
}

impl Matroid {
    /// Validates a basis family and builds the matroid.
    ///
    /// Checks that the family is non-empty, that all bases share one
    /// cardinality and that basis exchange holds for every ordered pair.
    pub fn from_bases<I>(n: usize, bases: I) -> Result<Self, MatroidError>
    where
        I: IntoIterator<Item = GroundSubset>,
    {
        check_cap(n)?;
        let mut bases: Vec<GroundSubset> = bases.into_iter().collect();
        for b in &bases {
            if let Some(e) = b.max_label().filter(|&e| e > n) {
                return Err(MatroidError::ElementOutOfRange { element: e, n });
            }
        }
        bases.sort();
        bases.dedup();
        let first = *bases.first().ok_or(MatroidError::EmptyBasisFamily)?;
        if let Some(&b) = bases.iter().find(|b| b.len() != first.len()) {
            return Err(MatroidError::UnequalBasisCardinality { first, second: b });
        }
        let lookup: HashSet<GroundSubset> = bases.iter().copied().collect();
        for &b1 in &bases {
            for &b2 in &bases {
                if b1 == b2 {
                    continue;
                }
                let candidates = b2.difference(b1);
                for x in b1.difference(b2).labels() {
                    let without = b1.remove(x);
                    if !candidates
                        .labels()
                        .any(|y| lookup.contains(&without.insert(y)))
                    {
                        return Err(MatroidError::ExchangeAxiomViolation {
                            first: b1,
                            second: b2,
                            removed: x,
                        });
                    }
                }
            }
        }
        Ok(Self::from_bases_unchecked(n, bases))
    }

    /// Convenience wrapper over [`Matroid::from_bases`] taking 1-based label
    /// lists.
    pub fn from_label_lists<B>(n: usize, bases: &[B]) -> Result<Self, MatroidError>
    where
        B: AsRef<[usize]>,
    {
        let mut out = Vec::with_capacity(bases.len());
        for b in bases {
            let s = GroundSubset::from_labels(n, b.as_ref().iter().copied())
                .map_err(|element| MatroidError::ElementOutOfRange { element, n })?;
            out.push(s);
        }
        Self::from_bases(n, out)
    }

    /// Builds a matroid without validating the axioms. The caller guarantees
    /// that `bases` is a non-empty family of equal-size subsets of
    /// `{1, ..., n}` satisfying basis exchange.
    pub fn from_bases_unchecked(n: usize, mut bases: Vec<GroundSubset>) -> Self {
        bases.sort();
        bases.dedup();
        let rank = bases.first().map_or(0, |b| b.len());
        Matroid {
            n,
            rank,
            bases,
            rank_table: OnceLock::new(),
            circuits: OnceLock::new(),
        }
    }

    /// The uniform matroid `U(r, n)`.
    pub fn uniform(r: usize, n: usize) -> Result<Self, MatroidError> {
        check_cap(n)?;
        if r > n {
            return Err(MatroidError::RankTooLarge { rank: r, n });
        }
        Ok(Self::from_bases_unchecked(
            n,
            GroundSubset::all_of_size(n, r).collect(),
        ))
    }

    /// The free matroid `U(n, n)`.
    pub fn free(n: usize) -> Result<Self, MatroidError> {
        Self::uniform(n, n)
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    /// `r(M)`, the common cardinality of the bases.
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// `n - r(M)`, the nullity of the whole ground set.
    pub fn corank(&self) -> usize {
        self.n - self.rank
    }

    pub fn ground_set(&self) -> GroundSubset {
        GroundSubset::full(self.n)
    }

    pub fn bases(&self) -> &[GroundSubset] {
        &self.bases
    }

    fn check_subset(&self, s: GroundSubset) -> Result<(), MatroidError> {
        match s.max_label() {
            Some(e) if e > self.n => Err(MatroidError::ElementOutOfRange {
                element: e,
                n: self.n,
            }),
            _ => Ok(()),
        }
    }

    /// `r(σ)`, computed as the largest intersection of `σ` with a basis.
    pub fn rank_of(&self, s: GroundSubset) -> Result<usize, MatroidError> {
        self.check_subset(s)?;
        Ok(self
            .bases
            .iter()
            .map(|b| b.intersection(s).len())
            .max()
            .unwrap_or(0))
    }

    /// `n(σ) = |σ| - r(σ)`.
    pub fn nullity_of(&self, s: GroundSubset) -> Result<usize, MatroidError> {
        Ok(s.len() - self.rank_of(s)?)
    }

    pub fn profile(&self, s: GroundSubset) -> Result<RankProfile, MatroidError> {
        let rank = self.rank_of(s)?;
        Ok(RankProfile {
            rank,
            nullity: s.len() - rank,
        })
    }

    /// Ranks of all `2^n` subsets, indexed by mask.
    pub fn rank_table(&self) -> &[u8] {
        self.rank_table.get_or_init(|| self.compute_rank_table())
    }

    fn compute_rank_table(&self) -> Vec<u8> {
        let size = 1usize << self.n;
        let mut independent = vec![false; size];
        for b in &self.bases {
            independent[b.mask() as usize] = true;
        }
        for mask in (0..size).rev() {
            if !independent[mask] {
                continue;
            }
            let mut rest = mask;
            while rest != 0 {
                let bit = rest & rest.wrapping_neg();
                independent[mask ^ bit] = true;
                rest ^= bit;
            }
        }
        let mut rank = vec![0u8; size];
        for mask in 1..size {
            rank[mask] = if independent[mask] {
                mask.count_ones() as u8
            } else {
                let mut best = 0;
                let mut rest = mask;
                while rest != 0 {
                    let bit = rest & rest.wrapping_neg();
                    best = best.max(rank[mask ^ bit]);
                    rest ^= bit;
                }
                best
            };
        }
        rank
    }

    /// Nullity looked up in the cached rank table.
    #[inline]
    pub fn nullity_fast(&self, s: GroundSubset) -> usize {
        s.len() - self.rank_table()[s.mask() as usize] as usize
    }

    #[inline]
    pub fn rank_fast(&self, s: GroundSubset) -> usize {
        self.rank_table()[s.mask() as usize] as usize
    }

    pub fn is_independent(&self, s: GroundSubset) -> bool {
        self.bases.iter().any(|b| s.is_subset_of(*b))
    }

    /// All independent sets, in increasing mask order.
    pub fn independent_sets(&self) -> Vec<GroundSubset> {
        let table = self.rank_table();
        (0..table.len() as u32)
            .map(GroundSubset::from_mask)
            .filter(|s| table[s.mask() as usize] as usize == s.len())
            .collect()
    }

    /// `f_i`, the number of independent sets of each cardinality `0..=r(M)`.
    pub fn independent_counts(&self) -> Vec<u64> {
        let mut f = vec![0u64; self.rank + 1];
        for s in self.independent_sets() {
            f[s.len()] += 1;
        }
        f
    }

    /// The dual matroid, whose bases are the complements of the bases.
    pub fn dual(&self) -> Matroid {
        Matroid::from_bases_unchecked(
            self.n,
            self.bases.iter().map(|b| b.complement(self.n)).collect(),
        )
    }

    /// `M|σ`, relabelled order-preservingly onto `{1, ..., |σ|}`.
    pub fn restrict(&self, s: GroundSubset) -> Result<Restriction, MatroidError> {
        self.check_subset(s)?;
        let elements: Vec<usize> = s.labels().collect();
        let r = self.rank_of(s)?;
        let bases = self
            .bases
            .iter()
            .map(|b| b.intersection(s))
            .filter(|b| b.len() == r)
            .map(|b| compress(b, &elements))
            .collect();
        Ok(Restriction {
            matroid: Matroid::from_bases_unchecked(elements.len(), bases),
            elements,
        })
    }

    /// The elongation `M_i`: independent sets are the subsets of nullity at
    /// most `i`, and the rank is `r(M) + i`.
    pub fn elongate(&self, level: usize) -> Result<Matroid, MatroidError> {
        let max = self.corank();
        if level > max {
            return Err(MatroidError::ElongationOutOfRange { level, max });
        }
        if level == 0 {
            return Ok(self.clone());
        }
        let table = self.rank_table();
        let bases = GroundSubset::all_of_size(self.n, self.rank + level)
            .filter(|s| table[s.mask() as usize] as usize == self.rank)
            .collect();
        Ok(Matroid::from_bases_unchecked(self.n, bases))
    }

    /// Minimal dependent sets, ordered by size and then by mask.
    pub fn circuits(&self) -> &[GroundSubset] {
        self.circuits.get_or_init(|| {
            let table = self.rank_table();
            let indep = |m: u32| table[m as usize] as u32 == m.count_ones();
            let mut out: Vec<GroundSubset> = (0..table.len() as u32)
                .filter(|&m| !indep(m))
                .filter(|&m| {
                    let mut rest = m;
                    while rest != 0 {
                        let bit = rest & rest.wrapping_neg();
                        if !indep(m ^ bit) {
                            return false;
                        }
                        rest ^= bit;
                    }
                    true
                })
                .map(GroundSubset::from_mask)
                .collect();
            out.sort_by_key(|c| (c.len(), c.mask()));
            out
        })
    }

    /// Reduced Euler characteristic `-1 + f_1 - f_2 + ...` of the
    /// independence complex.
    pub fn euler_characteristic(&self) -> i64 {
        self.independent_counts()
            .iter()
            .enumerate()
            .map(|(i, &f)| if i % 2 == 0 { -(f as i64) } else { f as i64 })
            .sum()
    }

    /// Higher weights by definition: `d_i = min{|σ| : n(σ) = i}`,
    /// for `i = 1..=n - r(M)`.
    pub fn higher_weights(&self) -> Vec<usize> {
        let mut d = vec![usize::MAX; self.corank() + 1];
        let table = self.rank_table();
        for (mask, &r) in table.iter().enumerate() {
            let size = mask.count_ones() as usize;
            let nul = size - r as usize;
            d[nul] = d[nul].min(size);
        }
        d.into_iter().skip(1).collect()
    }

    /// The text format: `n=<int>` followed by one `{a,b,c}` basis per line.
    pub fn to_text(&self) -> String {
        let mut out = format!("n={}\n", self.n);
        for b in &self.bases {
            let _ = writeln!(out, "{b}");
        }
        out
    }

    pub fn parse_text(text: &str) -> Result<Matroid, ParseError> {
        let mut lines = content_lines(text);
        let (first_line, header) = lines
            .next()
            .ok_or_else(|| ParseError::new(1, "empty matroid file"))?;
        let n = key_value(header, "n", first_line)?;
        let mut bases = Vec::new();
        for (line, body) in lines {
            let inner = body
                .strip_prefix('{')
                .and_then(|b| b.strip_suffix('}'))
                .ok_or_else(|| {
                    ParseError::new(
                        line,
                        format!("expected a basis like `{{1,3,6}}`, found `{body}`"),
                    )
                })?;
            let mut labels = Vec::new();
            for tok in inner.split(',').map(str::trim).filter(|t| !t.is_empty()) {
                let e: usize = tok.parse().map_err(|_| {
                    ParseError::new(line, format!("`{tok}` is not an element label"))
                })?;
                labels.push(e);
            }
            bases.push((line, labels));
        }
        Self::from_parsed(n, bases, first_line)
    }

    fn from_parsed(
        n: usize,
        bases: Vec<(usize, Vec<usize>)>,
        header_line: usize,
    ) -> Result<Matroid, ParseError> {
        let mut subsets = Vec::with_capacity(bases.len());
        for (line, labels) in bases {
            let s = GroundSubset::from_labels(n, labels).map_err(|e| {
                ParseError::new(line, format!("element {e} is outside {{1,...,{n}}}"))
            })?;
            subsets.push(s);
        }
        Matroid::from_bases(n, subsets).map_err(|e| ParseError::new(header_line, e.to_string()))
    }

    pub fn to_json(&self) -> String {
        let doc = MatroidJson {
            n: self.n,
            bases: self.bases.iter().map(|b| b.labels().collect()).collect(),
        };
        serde_json::to_string(&doc).expect("matroid JSON serialization")
    }

    pub fn parse_json(text: &str) -> Result<Matroid, ParseError> {
        let doc: MatroidJson = serde_json::from_str(text)?;
        Self::from_parsed(doc.n, doc.bases.into_iter().map(|b| (0, b)).collect(), 0)
    }

    /// Parses either format: text files have `n=` on their first content
    /// line, anything else is treated as JSON.
    pub fn parse(text: &str) -> Result<Matroid, ParseError> {
        let first = content_lines(text).next().map(|(_, l)| l).unwrap_or("");
        if first.starts_with("n=") {
            Self::parse_text(text)
        } else {
            Self::parse_json(text)
        }
    }
}

#[derive(Serialize, Deserialize)]
struct MatroidJson {
    n: usize,
    bases: Vec<Vec<usize>>,
}

/// Maps a subset of `elements` (original labels) to new labels `1..`.
fn compress(s: GroundSubset, elements: &[usize]) -> GroundSubset {
    let mut out = GroundSubset::EMPTY;
    for (i, &e) in elements.iter().enumerate() {
        if s.contains(e) {
            out = out.insert(i + 1);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn set(n: usize, labels: &[usize]) -> GroundSubset {
        GroundSubset::from_labels(n, labels.iter().copied()).unwrap()
    }

    #[test]
    fn gf5_7_4_rank_three() {
        let m = fixtures::gf5_7_4();
        assert_eq!(m.rank(), 3);
        assert_eq!(m.bases().len(), 24);
        assert_eq!(
            m.profile(set(7, &[1, 3, 6])).unwrap(),
            RankProfile {
                rank: 3,
                nullity: 0
            }
        );
        assert_eq!(
            m.profile(set(7, &[5, 6])).unwrap(),
            RankProfile {
                rank: 1,
                nullity: 1
            }
        );
        assert_eq!(m.rank_of(GroundSubset::EMPTY).unwrap(), 0);
    }

    #[test]
    fn loop_matroid() {
        let m = Matroid::from_bases(1, [GroundSubset::EMPTY]).unwrap();
        assert_eq!(m.rank(), 0);
        assert_eq!(m.circuits(), &[set(1, &[1])]);
    }

    #[test]
    fn exchange_holds_for_two_bases() {
        let m = Matroid::from_label_lists(3, &[vec![1, 2], vec![1, 3]]).unwrap();
        assert_eq!(m.rank(), 2);
        // 2 and 3 are parallel.
        assert_eq!(m.circuits(), &[set(3, &[2, 3])]);
    }

    #[test]
    fn validation_errors() {
        assert_eq!(
            Matroid::from_bases(3, Vec::new()),
            Err(MatroidError::EmptyBasisFamily)
        );
        assert!(matches!(
            Matroid::from_label_lists(3, &[vec![1, 2], vec![3]]),
            Err(MatroidError::UnequalBasisCardinality { .. })
        ));
        // {1,2},{3,4}: removing 1 from {1,2} needs {2,3} or {2,4}.
        assert!(matches!(
            Matroid::from_label_lists(4, &[vec![1, 2], vec![3, 4]]),
            Err(MatroidError::ExchangeAxiomViolation { .. })
        ));
        assert!(matches!(
            Matroid::from_label_lists(3, &[vec![1, 4]]),
            Err(MatroidError::ElementOutOfRange { element: 4, n: 3 })
        ));
        assert!(matches!(
            Matroid::uniform(2, 40),
            Err(MatroidError::GroundSetTooLarge { .. })
        ));
        assert!(matches!(
            Matroid::uniform(5, 4),
            Err(MatroidError::RankTooLarge { .. })
        ));
        let m = fixtures::gf5_7_4();
        assert!(m.rank_of(GroundSubset::from_mask(1 << 7)).is_err());
    }

    #[test]
    fn uniform_bases() {
        assert_eq!(Matroid::uniform(2, 4).unwrap().bases().len(), 6);
        assert_eq!(
            Matroid::uniform(0, 3).unwrap().bases(),
            &[GroundSubset::EMPTY]
        );
    }

    #[test]
    fn dual_examples() {
        let m = fixtures::gf5_7_4();
        assert_eq!(m.dual().dual(), m);
        assert_eq!(m.dual().rank(), 4);
        for (r, n) in [(0, 3), (2, 4), (3, 7), (5, 5)] {
            assert_eq!(
                Matroid::uniform(r, n).unwrap().dual(),
                Matroid::uniform(n - r, n).unwrap()
            );
        }
    }

    #[test]
    fn restriction_examples() {
        let m = fixtures::gf5_7_4();
        assert_eq!(m.restrict(m.ground_set()).unwrap().matroid, m);

        let u = Matroid::uniform(2, 4).unwrap();
        let r = u.restrict(set(4, &[1, 2, 3])).unwrap();
        assert_eq!(r.matroid, Matroid::uniform(2, 3).unwrap());
        assert_eq!(r.elements, vec![1, 2, 3]);

        let r = m.restrict(set(7, &[5, 6])).unwrap();
        assert_eq!(r.elements, vec![5, 6]);
        assert_eq!(r.matroid.rank(), 1);
        assert_eq!(r.matroid.circuits(), &[set(2, &[1, 2])]);
    }

    #[test]
    fn elongation_examples() {
        let m = fixtures::gf5_7_4();
        let top = m.elongate(4).unwrap();
        assert_eq!(top.bases(), &[m.ground_set()]);
        assert_eq!(m.elongate(0).unwrap(), m);
        assert!(matches!(
            m.elongate(5),
            Err(MatroidError::ElongationOutOfRange { level: 5, max: 4 })
        ));
        for (r, n) in [(0, 4), (2, 5), (3, 7)] {
            let u = Matroid::uniform(r, n).unwrap();
            for i in 0..=n - r {
                assert_eq!(u.elongate(i).unwrap(), Matroid::uniform(r + i, n).unwrap());
            }
        }
    }

    #[test]
    fn gf5_7_4_circuits_match_listing() {
        let m = fixtures::gf5_7_4();
        #[rustfmt::skip]
        let listed: Vec<Vec<usize>> = vec![
            vec![1, 2, 6, 7], vec![5, 6], vec![2, 3, 6, 7], vec![1, 2, 3, 5], vec![1, 3, 7], vec![1, 4, 7], vec![1, 2, 3, 6],
            vec![2, 4, 6], vec![2, 3, 5, 7], vec![3, 4, 7], vec![1, 2, 5, 7], vec![1, 3, 4], vec![2, 4, 5],
        ];
        let mut expected: Vec<GroundSubset> = listed.iter().map(|c| set(7, c)).collect();
        expected.sort_by_key(|c| (c.len(), c.mask()));
        assert_eq!(m.circuits(), expected.as_slice());
    }

    #[test]
    fn uniform_circuits() {
        let u = Matroid::uniform(2, 5).unwrap();
        assert_eq!(u.circuits().len(), 10);
        assert!(u.circuits().iter().all(|c| c.len() == 3));
        assert!(Matroid::free(6).unwrap().circuits().is_empty());
    }

    #[test]
    fn euler_characteristic_examples() {
        assert_eq!(Matroid::uniform(2, 4).unwrap().euler_characteristic(), -3);
        for n in 1..=8 {
            assert_eq!(Matroid::free(n).unwrap().euler_characteristic(), 0);
        }
        let binom = |n: i64, k: i64| (0..k).fold(1i64, |acc, i| acc * (n - i) / (i + 1));
        for n in 1..=8i64 {
            for r in 0..=n {
                let closed: i64 = (0..=r)
                    .map(|i| {
                        if i % 2 == 0 {
                            -binom(n, i)
                        } else {
                            binom(n, i)
                        }
                    })
                    .sum();
                assert_eq!(
                    Matroid::uniform(r as usize, n as usize)
                        .unwrap()
                        .euler_characteristic(),
                    closed
                );
            }
        }
    }

    #[test]
    fn rank_table_agrees_with_basis_route() {
        for m in [
            fixtures::gf5_7_4(),
            fixtures::vamos(),
            fixtures::counterexample_n7(),
        ] {
            for mask in 0..(1u32 << m.ground_size()) {
                let s = GroundSubset::from_mask(mask);
                assert_eq!(m.rank_fast(s), m.rank_of(s).unwrap());
                assert_eq!(m.is_independent(s), m.nullity_fast(s) == 0);
            }
        }
    }

    #[test]
    fn text_and_json_round_trip() {
        let m = fixtures::vamos();
        assert_eq!(Matroid::parse(&m.to_text()).unwrap(), m);
        assert_eq!(Matroid::parse(&m.to_json()).unwrap(), m);
        let json = r#"{"n":3,"bases":[[1,2],[1,3]]}"#;
        assert_eq!(Matroid::parse(json).unwrap().bases().len(), 2);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let err = Matroid::parse_text("n=3\n{1,2}\n{1,x}\n").unwrap_err();
        assert_eq!(err.line, 3);
        let err = Matroid::parse_text("n=3\n{1,2}\n1,3\n").unwrap_err();
        assert_eq!(err.line, 3);
        let err = Matroid::parse_text("n=3\n{1,2}\n{1,5}\n").unwrap_err();
        assert_eq!(err.line, 3);
        let err = Matroid::parse_text("m=3\n").unwrap_err();
        assert_eq!(err.line, 1);
    }
}
