//! Subsets of a finite point universe `{0, …, n-1}` stored as membership masks.

use std::fmt;

use crate::error::TopologyError;

/// Largest universe a single space may have.
pub const MAX_POINTS: usize = 16;

/// Mask with the low `n` bits set.
#[inline]
pub(crate) fn full_mask(n: usize) -> u32 {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

/// A subset of an `n`-point universe.
///
/// Equality is extensional: two sets are equal when they live in the same
/// universe and have the same members.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct PointSet {
    universe: u8,
    bits: u32,
}

impl PointSet {
    pub fn empty(universe: usize) -> Self {
        assert!(universe <= MAX_POINTS, "universe of {universe} points exceeds {MAX_POINTS}");
        PointSet { universe: universe as u8, bits: 0 }
    }

    pub fn full(universe: usize) -> Self {
        assert!(universe <= MAX_POINTS, "universe of {universe} points exceeds {MAX_POINTS}");
        PointSet { universe: universe as u8, bits: full_mask(universe) }
    }

    /// Builds a set from a raw mask, rejecting bits outside the universe.
    pub fn from_bits(universe: usize, bits: u32) -> Result<Self, TopologyError> {
        if universe > MAX_POINTS {
            return Err(TopologyError::TooManyPoints { points: universe });
        }
        if bits & !full_mask(universe) != 0 {
            let point = (bits & !full_mask(universe)).trailing_zeros() as usize;
            return Err(TopologyError::PointOutOfRange { point, universe });
        }
        Ok(PointSet { universe: universe as u8, bits })
    }

    pub fn from_points<I>(universe: usize, points: I) -> Result<Self, TopologyError>
    where
        I: IntoIterator<Item = usize>,
    {
        if universe > MAX_POINTS {
            return Err(TopologyError::TooManyPoints { points: universe });
        }
        let mut bits = 0u32;
        for p in points {
            if p >= universe {
                return Err(TopologyError::PointOutOfRange { point: p, universe });
            }
            bits |= 1 << p;
        }
        Ok(PointSet { universe: universe as u8, bits })
    }

    /// Caller guarantees `bits` fits the universe.
    #[inline]
    pub(crate) fn from_bits_unchecked(universe: usize, bits: u32) -> Self {
        debug_assert!(bits & !full_mask(universe) == 0);
        PointSet { universe: universe as u8, bits }
    }

    #[inline]
    pub fn universe_size(&self) -> usize {
        self.universe as usize
    }

    #[inline]
    pub fn bits(&self) -> u32 {
        self.bits
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    #[inline]
    pub fn contains(&self, point: usize) -> bool {
        point < self.universe as usize && self.bits >> point & 1 == 1
    }

    pub fn points(&self) -> impl Iterator<Item = usize> + '_ {
        let bits = self.bits;
        (0..self.universe as usize).filter(move |&p| bits >> p & 1 == 1)
    }

    pub fn complement(&self) -> Self {
        PointSet { universe: self.universe, bits: !self.bits & full_mask(self.universe as usize) }
    }

    pub fn union(&self, other: &Self) -> Self {
        self.same_universe(other);
        PointSet { universe: self.universe, bits: self.bits | other.bits }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.same_universe(other);
        PointSet { universe: self.universe, bits: self.bits & other.bits }
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        self.same_universe(other);
        self.bits & !other.bits == 0
    }

    pub fn is_disjoint_from(&self, other: &Self) -> bool {
        self.same_universe(other);
        self.bits & other.bits == 0
    }

    fn same_universe(&self, other: &Self) {
        assert_eq!(self.universe, other.universe, "set operation across different universes");
    }

    /// Every subset of the universe, ascending by mask value.
    pub fn all_subsets(universe: usize) -> impl Iterator<Item = PointSet> {
        assert!(universe <= MAX_POINTS);
        (0..=full_mask(universe)).map(move |bits| PointSet::from_bits_unchecked(universe, bits))
    }
}

/// Normalized order: cardinality first, then mask value.
#[inline]
pub(crate) fn normalized_key(bits: u32) -> (u32, u32) {
    (bits.count_ones(), bits)
}

impl PartialOrd for PointSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for PointSet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.universe, normalized_key(self.bits)).cmp(&(other.universe, normalized_key(other.bits)))
    }
}

/// Roster notation, e.g. `{0,2}` and `{}`.
impl fmt::Display for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, p) in self.points().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("}")
    }
}
