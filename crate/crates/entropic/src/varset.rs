//! Subsets of the variable index set `{1, .., n}`.
//!
//! A `VarSet` is a bitmask over variable indices. The coordinates of the
//! entropy space are labeled by the nonempty subsets, ordered by ascending
//! bitmask: `h1, h2, h12, h3, h13, h23, h123, ...`; that order is canonical
//! everywhere in this crate (vectors, certificates, renderings).

use std::fmt;

use crate::error::CoreError;

/// Hard ceiling on the number of variables. `2^n - 1` coordinates and the
/// elemental row count grow exponentially; 16 bounds memory while covering
/// every desk-scale problem.
pub const MAX_VARS: u8 = 16;

/// A set of variable indices drawn from `1..=n`, `n <= 16`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct VarSet(u32);

impl VarSet {
    pub const EMPTY: VarSet = VarSet(0);

    /// Set containing the single index `i` (1-based).
    pub fn singleton(i: u8) -> Result<VarSet, CoreError> {
        if i == 0 || i > MAX_VARS {
            return Err(CoreError::IndexOutOfRange(i));
        }
        Ok(VarSet(1 << (i - 1)))
    }

    /// Build from 1-based indices.
    pub fn from_indices(indices: &[u8]) -> Result<VarSet, CoreError> {
        let mut mask = 0u32;
        for &i in indices {
            if i == 0 || i > MAX_VARS {
                return Err(CoreError::IndexOutOfRange(i));
            }
            mask |= 1 << (i - 1);
        }
        Ok(VarSet(mask))
    }

    /// Raw bitmask constructor; bit `i-1` encodes index `i`.
    pub fn from_mask(mask: u32) -> Result<VarSet, CoreError> {
        if mask >= 1 << MAX_VARS {
            return Err(CoreError::IndexOutOfRange(MAX_VARS + 1));
        }
        Ok(VarSet(mask))
    }

    /// The full set `{1, .., n}`.
    pub fn full(n: u8) -> VarSet {
        debug_assert!(n <= MAX_VARS);
        VarSet(((1u64 << n) - 1) as u32)
    }

    pub fn mask(self) -> u32 {
        self.0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> u32 {
        self.0.count_ones()
    }

    pub fn contains(self, i: u8) -> bool {
        (1..=MAX_VARS).contains(&i) && self.0 & (1 << (i - 1)) != 0
    }

    pub fn union(self, other: VarSet) -> VarSet {
        VarSet(self.0 | other.0)
    }

    pub fn intersect(self, other: VarSet) -> VarSet {
        VarSet(self.0 & other.0)
    }

    pub fn minus(self, other: VarSet) -> VarSet {
        VarSet(self.0 & !other.0)
    }

    pub fn is_disjoint(self, other: VarSet) -> bool {
        self.0 & other.0 == 0
    }

    pub fn is_subset_of(self, other: VarSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Largest index in the set, or 0 for the empty set.
    pub fn max_index(self) -> u8 {
        (32 - self.0.leading_zeros()) as u8
    }

    /// 1-based indices in ascending order.
    pub fn indices(self) -> impl Iterator<Item = u8> {
        let mask = self.0;
        (1..=MAX_VARS).filter(move |i| mask & (1 << (i - 1)) != 0)
    }

    /// All nonempty subsets of `{1, .., n}` in canonical (ascending-mask) order.
    pub fn all_nonempty(n: u8) -> impl Iterator<Item = VarSet> {
        debug_assert!(n <= MAX_VARS);
        (1u32..(1u32 << n)).map(VarSet)
    }

    /// All subsets of `{1, .., n}` including the empty set.
    pub fn all(n: u8) -> impl Iterator<Item = VarSet> {
        debug_assert!(n <= MAX_VARS);
        (0u32..(1u32 << n)).map(VarSet)
    }

    /// Position of this subset in the canonical coordinate order, i.e. the
    /// index into a `2^n - 1` vector. Empty sets have no coordinate.
    pub fn coord_index(self) -> Result<usize, CoreError> {
        if self.is_empty() {
            return Err(CoreError::EmptySet);
        }
        Ok(self.0 as usize - 1)
    }

    /// Compact label used in coordinate names: `12` for `{1,2}`. Falls back
    /// to a braced list (`{2,10}`) as soon as an index needs two digits.
    pub fn label(self) -> String {
        if self.max_index() <= 9 {
            self.indices().map(|i| i.to_string()).collect()
        } else {
            let inner: Vec<String> = self.indices().map(|i| i.to_string()).collect();
            format!("{{{}}}", inner.join(","))
        }
    }
}

impl fmt::Display for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let inner: Vec<String> = self.indices().map(|i| i.to_string()).collect();
        write!(f, "{{{}}}", inner.join(","))
    }
}

impl fmt::Debug for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_order_is_ascending_mask() {
        let order: Vec<String> = VarSet::all_nonempty(3).map(|s| s.label()).collect();
        assert_eq!(order, vec!["1", "2", "12", "3", "13", "23", "123"]);
    }

    #[test]
    fn set_algebra() {
        let a = VarSet::from_indices(&[1, 3]).unwrap();
        let b = VarSet::from_indices(&[2, 3]).unwrap();
        assert_eq!(a.union(b).label(), "123");
        assert_eq!(a.intersect(b).label(), "3");
        assert!(!a.is_disjoint(b));
        assert!(a.minus(b).is_disjoint(b));
        assert_eq!(a.len(), 2);
        assert_eq!(a.max_index(), 3);
    }

    #[test]
    fn rejects_out_of_range_indices() {
        assert!(VarSet::singleton(0).is_err());
        assert!(VarSet::singleton(17).is_err());
        assert!(VarSet::from_indices(&[1, 16]).is_ok());
    }

    #[test]
    fn wide_sets_use_braced_labels() {
        let s = VarSet::from_indices(&[2, 10]).unwrap();
        assert_eq!(s.label(), "{2,10}");
        assert_eq!(s.to_string(), "{2,10}");
    }

    #[test]
    fn coordinate_indexing() {
        assert_eq!(VarSet::from_indices(&[1]).unwrap().coord_index().unwrap(), 0);
        assert_eq!(
            VarSet::from_indices(&[1, 2]).unwrap().coord_index().unwrap(),
            2
        );
        assert!(VarSet::EMPTY.coord_index().is_err());
    }
}
