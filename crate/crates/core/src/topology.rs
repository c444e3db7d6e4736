//! Finite topologies and their interior/closure operators.
//!
//! Every finite topology is determined by the minimal open neighbourhood of
//! each point, so interior and closure reduce to `n` mask tests:
//!
//! * `x ∈ int(A)` iff `min_nbhd(x) ⊆ A`
//! * `x ∈ cl(A)` iff `min_nbhd(x) ∩ A ≠ ∅`

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{TopologyError, Violation};
use crate::point_set::{full_mask, normalized_key, PointSet, MAX_POINTS};

/// A validated topology on `{0, …, n-1}`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Topology {
    n: usize,
    /// Sorted by (cardinality, mask), no duplicates.
    opens: Vec<u32>,
    min_nbhd: Vec<u32>,
}

impl Topology {
    /// Validates `family` as the open sets of a topology on `n` points.
    ///
    /// All axiom violations are reported together; for the closure axioms
    /// the first offending pair in normalized order is named.
    pub fn from_opens<I>(n: usize, family: I) -> Result<Self, TopologyError>
    where
        I: IntoIterator<Item = PointSet>,
    {
        if n > MAX_POINTS {
            return Err(TopologyError::TooManyPoints { points: n });
        }
        let mut masks = Vec::new();
        for set in family {
            if set.universe_size() != n {
                return Err(TopologyError::UniverseMismatch { expected: n, found: set.universe_size() });
            }
            masks.push(set.bits());
        }
        masks.sort_unstable_by_key(|&m| normalized_key(m));
        masks.dedup();

        let full = full_mask(n);
        let mut present = vec![false; 1usize << n];
        for &m in &masks {
            present[m as usize] = true;
        }

        let mut violations = Vec::new();
        if !present[0] {
            violations.push(Violation::MissingEmptyOrFull { missing: PointSet::empty(n) });
        }
        if full != 0 && !present[full as usize] {
            violations.push(Violation::MissingEmptyOrFull { missing: PointSet::full(n) });
        }

        // A family is a topology iff it equals the up-closed sets of its own
        // minimal neighbourhoods; pairwise search only runs on failure.
        let min_nbhd: Vec<u32> = (0..n)
            .map(|x| masks.iter().filter(|&&m| m >> x & 1 == 1).fold(full, |acc, &m| acc & m))
            .collect();
        let generated = up_closed_sets(n, &min_nbhd);
        if violations.is_empty() && generated == masks {
            return Ok(Topology { n, opens: masks, min_nbhd });
        }

        let set = |m: u32| PointSet::from_bits_unchecked(n, m);
        if let Some((a, b)) = first_pair(&masks, |a, b| !present[(a | b) as usize]) {
            violations.push(Violation::NotClosedUnderUnion(set(a), set(b)));
        }
        if let Some((a, b)) = first_pair(&masks, |a, b| !present[(a & b) as usize]) {
            violations.push(Violation::NotClosedUnderIntersection(set(a), set(b)));
        }
        debug_assert!(!violations.is_empty());
        Err(TopologyError::InvalidFamily(violations))
    }

    /// Builds the Alexandrov topology of a preorder.
    ///
    /// `reaches[x][y]` means `y` lies in every open set containing `x`. The
    /// open sets are exactly the sets closed upward under the relation.
    pub fn from_preorder(n: usize, reaches: &[Vec<bool>]) -> Result<Self, TopologyError> {
        if n > MAX_POINTS {
            return Err(TopologyError::TooManyPoints { points: n });
        }
        if reaches.len() != n || reaches.iter().any(|row| row.len() != n) {
            return Err(TopologyError::MatrixShape { points: n });
        }
        let rows: Vec<u32> = reaches
            .iter()
            .map(|row| row.iter().enumerate().filter(|(_, &r)| r).fold(0u32, |acc, (y, _)| acc | 1 << y))
            .collect();
        Self::from_reach_rows(n, &rows)
    }

    /// Mask form of [`Topology::from_preorder`]: bit `y` of `rows[x]` is `reaches[x][y]`.
    pub fn from_reach_rows(n: usize, rows: &[u32]) -> Result<Self, TopologyError> {
        if n > MAX_POINTS {
            return Err(TopologyError::TooManyPoints { points: n });
        }
        if rows.len() != n || rows.iter().any(|&r| r & !full_mask(n) != 0) {
            return Err(TopologyError::MatrixShape { points: n });
        }
        for (x, &row) in rows.iter().enumerate() {
            if row >> x & 1 == 0 {
                return Err(TopologyError::NotReflexive { point: x });
            }
        }
        for x in 0..n {
            for y in 0..n {
                if rows[x] >> y & 1 == 0 {
                    continue;
                }
                let missing = rows[y] & !rows[x];
                if missing != 0 {
                    return Err(TopologyError::NotTransitive { x, y, z: missing.trailing_zeros() as usize });
                }
            }
        }
        let min_nbhd = rows.to_vec();
        let opens = up_closed_sets(n, &min_nbhd);
        Ok(Topology { n, opens, min_nbhd })
    }

    pub fn discrete(n: usize) -> Self {
        let rows: Vec<u32> = (0..n).map(|x| 1 << x).collect();
        Self::from_reach_rows(n, &rows).expect("identity relation is a preorder")
    }

    pub fn indiscrete(n: usize) -> Self {
        let rows = vec![full_mask(n); n];
        Self::from_reach_rows(n, &rows).expect("total relation is a preorder")
    }

    #[inline]
    pub fn points(&self) -> usize {
        self.n
    }

    /// The specialization preorder: `[x][y]` is true iff `y ∈ min_nbhd(x)`.
    pub fn derive_preorder(&self) -> Vec<Vec<bool>> {
        self.min_nbhd
            .iter()
            .map(|&row| (0..self.n).map(|y| row >> y & 1 == 1).collect())
            .collect()
    }

    /// Intersection of all open sets containing `x`.
    pub fn min_nbhd(&self, x: usize) -> PointSet {
        PointSet::from_bits_unchecked(self.n, self.min_nbhd[x])
    }

    pub fn min_nbhd_masks(&self) -> &[u32] {
        &self.min_nbhd
    }

    /// Open sets as masks in normalized order.
    pub fn open_masks(&self) -> &[u32] {
        &self.opens
    }

    pub fn open_sets(&self) -> impl Iterator<Item = PointSet> + '_ {
        self.opens.iter().map(move |&m| PointSet::from_bits_unchecked(self.n, m))
    }

    /// Complements of the open sets, in the order of the opens they complement.
    pub fn closed_sets(&self) -> impl Iterator<Item = PointSet> + '_ {
        self.open_sets().map(|s| s.complement())
    }

    pub fn interior(&self, a: &PointSet) -> Result<PointSet, TopologyError> {
        self.check_universe(a)?;
        Ok(PointSet::from_bits_unchecked(self.n, self.interior_bits(a.bits())))
    }

    pub fn closure(&self, a: &PointSet) -> Result<PointSet, TopologyError> {
        self.check_universe(a)?;
        Ok(PointSet::from_bits_unchecked(self.n, self.closure_bits(a.bits())))
    }

    pub fn is_open(&self, a: &PointSet) -> Result<bool, TopologyError> {
        self.check_universe(a)?;
        Ok(self.is_open_bits(a.bits()))
    }

    pub fn is_closed(&self, a: &PointSet) -> Result<bool, TopologyError> {
        self.check_universe(a)?;
        Ok(self.is_open_bits(!a.bits() & self.full_bits()))
    }

    #[inline]
    pub fn full_bits(&self) -> u32 {
        full_mask(self.n)
    }

    #[inline]
    pub fn interior_bits(&self, a: u32) -> u32 {
        let mut out = 0;
        for (x, &m) in self.min_nbhd.iter().enumerate() {
            if m & !a == 0 {
                out |= 1 << x;
            }
        }
        out
    }

    #[inline]
    pub fn closure_bits(&self, a: u32) -> u32 {
        let mut out = 0;
        for (x, &m) in self.min_nbhd.iter().enumerate() {
            if m & a != 0 {
                out |= 1 << x;
            }
        }
        out
    }

    #[inline]
    pub fn is_open_bits(&self, a: u32) -> bool {
        self.interior_bits(a) == a
    }

    /// Distinct sets reachable from `a` by repeated closure and complement.
    pub fn kuratowski_orbit(&self, a: &PointSet) -> Result<Vec<PointSet>, TopologyError> {
        self.check_universe(a)?;
        let full = self.full_bits();
        let mut seen = BTreeSet::from([a.bits()]);
        let mut frontier = vec![a.bits()];
        while let Some(s) = frontier.pop() {
            for next in [self.closure_bits(s), !s & full] {
                if seen.insert(next) {
                    frontier.push(next);
                }
            }
        }
        Ok(seen.into_iter().map(|m| PointSet::from_bits_unchecked(self.n, m)).collect())
    }

    fn check_universe(&self, a: &PointSet) -> Result<(), TopologyError> {
        if a.universe_size() != self.n {
            return Err(TopologyError::UniverseMismatch { expected: self.n, found: a.universe_size() });
        }
        Ok(())
    }
}

impl fmt::Display for Topology {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, s) in self.open_sets().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{s}")?;
        }
        f.write_str("]")
    }
}

fn up_closed_sets(n: usize, min_nbhd: &[u32]) -> Vec<u32> {
    let mut opens: Vec<u32> = (0..=full_mask(n))
        .filter(|&a| min_nbhd.iter().enumerate().all(|(x, &m)| a >> x & 1 == 0 || m & !a == 0))
        .collect();
    opens.sort_unstable_by_key(|&m| normalized_key(m));
    opens
}

fn first_pair(masks: &[u32], bad: impl Fn(u32, u32) -> bool) -> Option<(u32, u32)> {
    masks
        .iter()
        .enumerate()
        .flat_map(|(i, &a)| masks[i + 1..].iter().map(move |&b| (a, b)))
        .find(|&(a, b)| bad(a, b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn set(n: usize, pts: &[usize]) -> PointSet {
        PointSet::from_points(n, pts.iter().copied()).unwrap()
    }

    fn family(n: usize, sets: &[&[usize]]) -> Vec<PointSet> {
        sets.iter().map(|s| set(n, s)).collect()
    }

    fn sierpinski() -> Topology {
        Topology::from_opens(2, family(2, &[&[], &[0], &[0, 1]])).unwrap()
    }

    /// opens {∅,{0},{1},{0,1},X} on three points.
    fn three_point() -> Topology {
        Topology::from_opens(3, family(3, &[&[], &[0], &[1], &[0, 1], &[0, 1, 2]])).unwrap()
    }

    #[test]
    fn sierpinski_min_nbhds() {
        let t = sierpinski();
        assert_eq!(t.min_nbhd(0), set(2, &[0]));
        assert_eq!(t.min_nbhd(1), set(2, &[0, 1]));
    }

    #[test]
    fn indiscrete_min_nbhds() {
        let t = Topology::from_opens(3, family(3, &[&[], &[0, 1, 2]])).unwrap();
        for x in 0..3 {
            assert_eq!(t.min_nbhd(x), PointSet::full(3));
        }
        assert_eq!(t, Topology::indiscrete(3));
    }

    #[test]
    fn reports_missing_full_and_union_failure() {
        let err = Topology::from_opens(2, family(2, &[&[], &[0], &[1]])).unwrap_err();
        let TopologyError::InvalidFamily(v) = err else { panic!("wrong error {err:?}") };
        assert!(v.contains(&Violation::MissingEmptyOrFull { missing: PointSet::full(2) }));
        assert!(v.contains(&Violation::NotClosedUnderUnion(set(2, &[0]), set(2, &[1]))));
    }

    #[test]
    fn reports_intersection_failure() {
        let err = Topology::from_opens(3, family(3, &[&[], &[0, 1], &[1, 2], &[0, 1, 2]])).unwrap_err();
        assert_eq!(
            err,
            TopologyError::InvalidFamily(vec![Violation::NotClosedUnderIntersection(set(3, &[0, 1]), set(3, &[1, 2]))])
        );
    }

    #[test]
    fn rejects_universe_mismatch() {
        let err = Topology::from_opens(2, vec![PointSet::empty(2), PointSet::full(3)]).unwrap_err();
        assert_eq!(err, TopologyError::UniverseMismatch { expected: 2, found: 3 });
        assert!(sierpinski().interior(&PointSet::full(3)).is_err());
        assert!(sierpinski().closure(&PointSet::full(1)).is_err());
        assert!(sierpinski().is_open(&PointSet::full(1)).is_err());
    }

    #[test]
    fn opens_are_normalized() {
        let t = Topology::from_opens(2, family(2, &[&[0, 1], &[0], &[], &[0]])).unwrap();
        assert_eq!(t.open_masks(), &[0b00, 0b01, 0b11]);
    }

    #[test]
    fn preorder_sierpinski() {
        let t = Topology::from_preorder(2, &[vec![true, false], vec![true, true]]).unwrap();
        assert_eq!(t, sierpinski());
    }

    #[test]
    fn preorder_identity_is_discrete() {
        let id: Vec<Vec<bool>> = (0..3).map(|x| (0..3).map(|y| x == y).collect()).collect();
        let t = Topology::from_preorder(3, &id).unwrap();
        assert_eq!(t.open_masks().len(), 8);
        assert_eq!(t, Topology::discrete(3));
    }

    #[test]
    fn preorder_errors() {
        let mut m = vec![vec![true, true], vec![false, true]];
        assert!(Topology::from_preorder(2, &m).is_ok());
        m[0][0] = false;
        assert_eq!(Topology::from_preorder(2, &m), Err(TopologyError::NotReflexive { point: 0 }));
        let m = vec![vec![true, true, false], vec![false, true, true], vec![false, false, true]];
        assert_eq!(Topology::from_preorder(3, &m), Err(TopologyError::NotTransitive { x: 0, y: 1, z: 2 }));
        assert_eq!(Topology::from_preorder(2, &[vec![true]]), Err(TopologyError::MatrixShape { points: 2 }));
    }

    #[test]
    fn interior_examples() {
        let s = sierpinski();
        assert_eq!(s.interior(&set(2, &[1])).unwrap(), PointSet::empty(2));
        assert_eq!(s.interior(&PointSet::full(2)).unwrap(), PointSet::full(2));
        assert_eq!(three_point().interior(&set(3, &[0, 2])).unwrap(), set(3, &[0]));
    }

    #[test]
    fn closure_examples() {
        let s = sierpinski();
        assert_eq!(s.closure(&set(2, &[0])).unwrap(), PointSet::full(2));
        assert_eq!(s.closure(&PointSet::empty(2)).unwrap(), PointSet::empty(2));
        assert_eq!(three_point().closure(&set(3, &[0])).unwrap(), set(3, &[0, 2]));
    }

    #[test]
    fn open_and_closed_tests() {
        let s = sierpinski();
        assert!(s.is_open(&set(2, &[0])).unwrap());
        assert!(!s.is_open(&set(2, &[1])).unwrap());
        assert!(s.is_closed(&set(2, &[1])).unwrap());
        assert!(s.is_open(&PointSet::full(2)).unwrap());
        assert!(s.is_closed(&PointSet::full(2)).unwrap());
    }

    #[test]
    fn open_set_listings() {
        let opens: Vec<String> = sierpinski().open_sets().map(|s| s.to_string()).collect();
        assert_eq!(opens, ["{}", "{0}", "{0,1}"]);
        let closed: Vec<String> = sierpinski().closed_sets().map(|s| s.to_string()).collect();
        assert_eq!(closed, ["{0,1}", "{1}", "{}"]);
        assert_eq!(Topology::discrete(2).open_sets().count(), 4);
        assert_eq!(Topology::indiscrete(3).open_masks(), &[0, 0b111]);
    }

    #[test]
    fn empty_and_singleton_spaces() {
        let t0 = Topology::from_opens(0, vec![PointSet::empty(0)]).unwrap();
        assert_eq!(t0.open_masks(), &[0]);
        assert_eq!(t0, Topology::discrete(0));
        let t1 = Topology::from_opens(1, vec![PointSet::empty(1), PointSet::full(1)]).unwrap();
        assert_eq!(t1, Topology::indiscrete(1));
        assert!(Topology::from_opens(0, vec![]).is_err());
    }

    #[test]
    fn sixteen_points_are_accepted() {
        let t = Topology::discrete(16);
        assert_eq!(t.open_masks().len(), 1 << 16);
        assert_eq!(Topology::from_reach_rows(17, &[0; 17]), Err(TopologyError::TooManyPoints { points: 17 }));
    }

    #[test]
    fn kuratowski_orbit_of_sierpinski() {
        let orbit = sierpinski().kuratowski_orbit(&set(2, &[0])).unwrap();
        // {0} -> cl {0,1} -> cmp {} ; {0} -> cmp {1} -> cl {1}
        assert_eq!(orbit.len(), 4);
    }

    fn arb_topology() -> impl Strategy<Value = Topology> {
        (1usize..=6).prop_flat_map(|n| {
            proptest::collection::vec(0u32..(1 << n), n).prop_map(move |mut rows| {
                for (x, r) in rows.iter_mut().enumerate() {
                    *r |= 1 << x;
                }
                // reflexive-transitive closure
                for k in 0..n {
                    for i in 0..n {
                        if rows[i] >> k & 1 == 1 {
                            rows[i] |= rows[k];
                        }
                    }
                }
                Topology::from_reach_rows(n, &rows).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn operator_laws(t in arb_topology(), a in any::<u32>(), b in any::<u32>()) {
            let full = t.full_bits();
            let (a, b) = (a & full, b & full);
            let int = |s| t.interior_bits(s);
            let cl = |s| t.closure_bits(s);
            prop_assert_eq!(cl(a), !int(!a & full) & full);
            prop_assert_eq!(int(int(a)), int(a));
            prop_assert_eq!(cl(cl(a)), cl(a));
            prop_assert!(int(a) & !a == 0 && a & !cl(a) == 0);
            prop_assert!(t.is_open_bits(int(a)));
            let (lo, hi) = (a & b, a);
            prop_assert!(int(lo) & !int(hi) == 0 && cl(lo) & !cl(hi) == 0);
            let orbit = t.kuratowski_orbit(&PointSet::from_bits(t.points(), a).unwrap()).unwrap();
            prop_assert!(orbit.len() <= 14);
        }

        #[test]
        fn opens_match_min_nbhd_characterization(t in arb_topology()) {
            let n = t.points();
            for x in 0..n {
                let m = t.min_nbhd(x);
                prop_assert!(m.contains(x));
                prop_assert!(t.is_open(&m).unwrap());
            }
            for a in PointSet::all_subsets(n) {
                let up_closed = a.points().all(|x| t.min_nbhd(x).is_subset_of(&a));
                prop_assert_eq!(t.open_masks().contains(&a.bits()), up_closed);
            }
        }

        #[test]
        fn preorder_round_trip(t in arb_topology()) {
            let again = Topology::from_preorder(t.points(), &t.derive_preorder()).unwrap();
            prop_assert_eq!(again.open_masks(), t.open_masks());
            let from_family = Topology::from_opens(t.points(), t.open_sets()).unwrap();
            prop_assert_eq!(from_family, t);
        }
    }
}
