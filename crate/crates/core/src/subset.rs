//! Subsets of a small ground set, stored as bit masks.
//!
//! Element `e` (1-based, as in all external I/O) lives at bit `e - 1`.

use std::fmt;
use std::sync::OnceLock;

/// Largest ground set any mask can hold.
pub const HARD_MAX_N: usize = 30;

/// Default cap on ground-set size for exhaustive (2^n / 3^n) operations.
pub const DEFAULT_MAX_N: usize = 20;

/// Ground-set cap, overridable through the `MATROID_MAX_N` environment variable.
///
/// The value is read once per process. Values above [`HARD_MAX_N`] are clamped.
pub fn ground_set_cap() -> usize {
    static CAP: OnceLock<usize> = OnceLock::new();
    *CAP.get_or_init(|| {
        std::env::var("MATROID_MAX_N")
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok())
            .map(|v| v.min(HARD_MAX_N))
            .unwrap_or(DEFAULT_MAX_N)
    })
}

/// A subset of `{1, ..., n}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct GroundSubset(u32);

impl GroundSubset {
    pub const EMPTY: GroundSubset = GroundSubset(0);

    pub const fn from_mask(mask: u32) -> Self {
        GroundSubset(mask)
    }

    /// The whole ground set `{1, ..., n}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= HARD_MAX_N);
        GroundSubset(((1u64 << n) - 1) as u32)
    }

    /// Builds a subset from 1-based labels. Returns the first offending label
    /// if one falls outside `[1, n]`.
    pub fn from_labels<I>(n: usize, labels: I) -> Result<Self, usize>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut mask = 0u32;
        for e in labels {
            if e == 0 || e > n {
                return Err(e);
            }
            mask |= 1 << (e - 1);
        }
        Ok(GroundSubset(mask))
    }

    pub const fn mask(self) -> u32 {
        self.0
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Membership test for a 1-based label.
    pub fn contains(self, e: usize) -> bool {
        (1..=32).contains(&e) && self.0 & (1 << (e - 1)) != 0
    }

    pub fn is_subset_of(self, other: GroundSubset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: GroundSubset) -> Self {
        GroundSubset(self.0 | other.0)
    }

    pub fn intersection(self, other: GroundSubset) -> Self {
        GroundSubset(self.0 & other.0)
    }

    pub fn difference(self, other: GroundSubset) -> Self {
        GroundSubset(self.0 & !other.0)
    }

    /// Complement inside `{1, ..., n}`.
    pub fn complement(self, n: usize) -> Self {
        GroundSubset::full(n).difference(self)
    }

    pub fn insert(self, e: usize) -> Self {
        GroundSubset(self.0 | (1 << (e - 1)))
    }

    pub fn remove(self, e: usize) -> Self {
        GroundSubset(self.0 & !(1 << (e - 1)))
    }

    /// 1-based labels in increasing order.
    pub fn labels(self) -> Labels {
        Labels(self.0)
    }

    /// Largest label present, if any. Useful to check that a subset fits in
    /// a ground set of size `n`.
    pub fn max_label(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(32 - self.0.leading_zeros() as usize)
        }
    }

    /// Iterates over all subsets of `self`, starting with the empty set.
    pub fn subsets(self) -> Subsets {
        Subsets {
            of: self.0,
            next: Some(0),
        }
    }

    /// All subsets of `{1, ..., n}` with exactly `k` elements, in increasing
    /// mask order.
    pub fn all_of_size(n: usize, k: usize) -> OfSize {
        let next = if k > n {
            None
        } else {
            Some(((1u64 << k) - 1) as u32)
        };
        OfSize { n, next }
    }
}

impl fmt::Debug for GroundSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for GroundSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (idx, e) in self.labels().enumerate() {
            if idx > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

pub struct Labels(u32);

impl Iterator for Labels {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let tz = self.0.trailing_zeros();
        self.0 &= self.0 - 1;
        Some(tz as usize + 1)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for Labels {}

/// Subset-of-subset enumeration (`sub = (sub - of) & of`).
pub struct Subsets {
    of: u32,
    next: Option<u32>,
}

impl Iterator for Subsets {
    type Item = GroundSubset;

    fn next(&mut self) -> Option<GroundSubset> {
        let cur = self.next?;
        self.next = if cur == self.of {
            None
        } else {
            Some(cur.wrapping_sub(self.of) & self.of)
        };
        Some(GroundSubset(cur))
    }
}

/// Gosper's hack over fixed-cardinality masks.
pub struct OfSize {
    n: usize,
    next: Option<u32>,
}

impl Iterator for OfSize {
    type Item = GroundSubset;

    fn next(&mut self) -> Option<GroundSubset> {
        let cur = self.next?;
        self.next = if cur == 0 {
            None
        } else {
            let c = cur as u64;
            let low = c & c.wrapping_neg();
            let ripple = c + low;
            let nxt = (((ripple ^ c) >> 2) / low) | ripple;
            if nxt >> self.n != 0 {
                None
            } else {
                Some(nxt as u32)
            }
        };
        Some(GroundSubset(cur))
    }
}
