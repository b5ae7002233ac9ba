//! Vertex subsets over a fixed universe `0..n`.
//!
//! Universes of at most [`BITMASK_LIMIT`] vertices are stored as a single
//! `u128` mask; larger universes use a sorted, deduplicated id vector. The
//! representation is a function of the universe size alone, so two sets over
//! the same universe always compare structurally.

use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

/// Largest universe stored as a bit mask.
pub const BITMASK_LIMIT: usize = 128;

#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    Bits(u128),
    Sorted(Vec<usize>),
}

/// A set of vertex ids drawn from `0..universe`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    universe: usize,
    repr: Repr,
}

impl VertexSet {
    pub fn empty(universe: usize) -> Self {
        let repr = if universe <= BITMASK_LIMIT {
            Repr::Bits(0)
        } else {
            Repr::Sorted(Vec::new())
        };
        VertexSet { universe, repr }
    }

    pub fn full(universe: usize) -> Self {
        Self::from_sorted_unchecked(universe, (0..universe).collect())
    }

    /// Builds a set from arbitrary ids.
    ///
    /// Panics if an id is outside the universe; use [`VertexSet::try_new`]
    /// for untrusted input.
    pub fn new<I: IntoIterator<Item = usize>>(universe: usize, ids: I) -> Self {
        match Self::try_new(universe, ids) {
            Ok(set) => set,
            Err(v) => panic!("vertex {v} outside universe 0..{universe}"),
        }
    }

    /// Builds a set, returning the first out-of-range id on failure.
    pub fn try_new<I: IntoIterator<Item = usize>>(universe: usize, ids: I) -> Result<Self, usize> {
        if universe <= BITMASK_LIMIT {
            let mut bits = 0u128;
            for v in ids {
                if v >= universe {
                    return Err(v);
                }
                bits |= 1u128 << v;
            }
            Ok(VertexSet {
                universe,
                repr: Repr::Bits(bits),
            })
        } else {
            let mut ids: Vec<usize> = ids.into_iter().collect();
            if let Some(&v) = ids.iter().find(|&&v| v >= universe) {
                return Err(v);
            }
            ids.sort_unstable();
            ids.dedup();
            Ok(VertexSet {
                universe,
                repr: Repr::Sorted(ids),
            })
        }
    }

    /// `ids` must be strictly increasing and inside the universe.
    pub(crate) fn from_sorted_unchecked(universe: usize, ids: Vec<usize>) -> Self {
        debug_assert!(ids.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(ids.last().is_none_or(|&v| v < universe));
        if universe <= BITMASK_LIMIT {
            let bits = ids.iter().fold(0u128, |acc, &v| acc | (1u128 << v));
            VertexSet {
                universe,
                repr: Repr::Bits(bits),
            }
        } else {
            VertexSet {
                universe,
                repr: Repr::Sorted(ids),
            }
        }
    }

    /// Builds a set from a membership vector of length `universe`.
    pub fn from_flags(flags: &[bool]) -> Self {
        let ids = flags
            .iter()
            .enumerate()
            .filter_map(|(v, &f)| f.then_some(v))
            .collect();
        Self::from_sorted_unchecked(flags.len(), ids)
    }

    /// Builds a set from a `u128` mask. Panics if bits beyond the universe are set
    /// or the universe is too large for masks.
    pub fn from_mask(universe: usize, mask: u128) -> Self {
        assert!(universe <= BITMASK_LIMIT, "universe {universe} too large for a mask");
        assert!(
            universe == 128 || mask >> universe == 0,
            "mask has bits outside 0..{universe}"
        );
        VertexSet {
            universe,
            repr: Repr::Bits(mask),
        }
    }

    /// The mask form, available whenever the universe fits in 128 bits.
    pub fn as_mask(&self) -> Option<u128> {
        match self.repr {
            Repr::Bits(b) => Some(b),
            Repr::Sorted(_) => None,
        }
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn len(&self) -> usize {
        match &self.repr {
            Repr::Bits(b) => b.count_ones() as usize,
            Repr::Sorted(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn contains(&self, v: usize) -> bool {
        match &self.repr {
            Repr::Bits(b) => v < self.universe && (b >> v) & 1 == 1,
            Repr::Sorted(ids) => ids.binary_search(&v).is_ok(),
        }
    }

    pub fn insert(&mut self, v: usize) {
        assert!(v < self.universe, "vertex {v} outside universe 0..{}", self.universe);
        match &mut self.repr {
            Repr::Bits(b) => *b |= 1u128 << v,
            Repr::Sorted(ids) => {
                if let Err(pos) = ids.binary_search(&v) {
                    ids.insert(pos, v);
                }
            }
        }
    }

    pub fn remove(&mut self, v: usize) {
        match &mut self.repr {
            Repr::Bits(b) => {
                if v < self.universe {
                    *b &= !(1u128 << v)
                }
            }
            Repr::Sorted(ids) => {
                if let Ok(pos) = ids.binary_search(&v) {
                    ids.remove(pos);
                }
            }
        }
    }

    /// Copy of `self` without `v`.
    pub fn without(&self, v: usize) -> Self {
        let mut out = self.clone();
        out.remove(v);
        out
    }

    pub fn iter(&self) -> Iter<'_> {
        match &self.repr {
            Repr::Bits(b) => Iter::Bits(*b),
            Repr::Sorted(ids) => Iter::Sorted(ids.iter()),
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Membership vector of length `universe`.
    pub fn to_flags(&self) -> Vec<bool> {
        let mut flags = vec![false; self.universe];
        for v in self.iter() {
            flags[v] = true;
        }
        flags
    }

    fn check_same_universe(&self, other: &Self) {
        assert_eq!(
            self.universe, other.universe,
            "vertex sets over different universes"
        );
    }

    pub fn union(&self, other: &Self) -> Self {
        self.check_same_universe(other);
        match (&self.repr, &other.repr) {
            (Repr::Bits(a), Repr::Bits(b)) => self.with_bits(a | b),
            (Repr::Sorted(a), Repr::Sorted(b)) => {
                let mut out = Vec::with_capacity(a.len() + b.len());
                let (mut i, mut j) = (0, 0);
                while i < a.len() && j < b.len() {
                    match a[i].cmp(&b[j]) {
                        Ordering::Less => {
                            out.push(a[i]);
                            i += 1;
                        }
                        Ordering::Greater => {
                            out.push(b[j]);
                            j += 1;
                        }
                        Ordering::Equal => {
                            out.push(a[i]);
                            i += 1;
                            j += 1;
                        }
                    }
                }
                out.extend_from_slice(&a[i..]);
                out.extend_from_slice(&b[j..]);
                Self::from_sorted_unchecked(self.universe, out)
            }
            _ => unreachable!("representation is determined by the universe"),
        }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.check_same_universe(other);
        match (&self.repr, &other.repr) {
            (Repr::Bits(a), Repr::Bits(b)) => self.with_bits(a & b),
            (Repr::Sorted(_), Repr::Sorted(b)) => {
                let out = b.iter().copied().filter(|&v| self.contains(v)).collect();
                Self::from_sorted_unchecked(self.universe, out)
            }
            _ => unreachable!("representation is determined by the universe"),
        }
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.check_same_universe(other);
        match (&self.repr, &other.repr) {
            (Repr::Bits(a), Repr::Bits(b)) => self.with_bits(a & !b),
            (Repr::Sorted(a), Repr::Sorted(_)) => {
                let out = a.iter().copied().filter(|&v| !other.contains(v)).collect();
                Self::from_sorted_unchecked(self.universe, out)
            }
            _ => unreachable!("representation is determined by the universe"),
        }
    }

    pub fn complement(&self) -> Self {
        VertexSet::full(self.universe).difference(self)
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.check_same_universe(other);
        match (&self.repr, &other.repr) {
            (Repr::Bits(a), Repr::Bits(b)) => a & !b == 0,
            _ => self.iter().all(|v| other.contains(v)),
        }
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.check_same_universe(other);
        match (&self.repr, &other.repr) {
            (Repr::Bits(a), Repr::Bits(b)) => a & b == 0,
            _ => self.iter().all(|v| !other.contains(v)),
        }
    }

    fn with_bits(&self, bits: u128) -> Self {
        VertexSet {
            universe: self.universe,
            repr: Repr::Bits(bits),
        }
    }
}

/// Iterator over members in ascending order.
pub enum Iter<'a> {
    Bits(u128),
    Sorted(std::slice::Iter<'a, usize>),
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        match self {
            Iter::Bits(b) => {
                if *b == 0 {
                    None
                } else {
                    let v = b.trailing_zeros() as usize;
                    *b &= *b - 1;
                    Some(v)
                }
            }
            Iter::Sorted(it) => it.next().copied(),
        }
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = usize;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

/// Lexicographic on the ascending member lists, then by universe.
impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter()
            .cmp(other.iter())
            .then(self.universe.cmp(&other.universe))
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}
