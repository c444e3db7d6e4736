//! Exhaustive generation of finite topologies.
//!
//! Finite topologies on labeled points correspond one-to-one with preorders
//! (reflexive transitive relations), so the generator backtracks over
//! relations and converts each one. Up to homeomorphism, one representative
//! per class is kept: the labeling whose encoding is its own canonical key.

mod canonical;
mod families;
mod preorders;

pub use canonical::{canonical_form, is_canonical, stabilizer_size, CanonicalKey, CANONICAL_CAP};
pub use families::{closed_families, FAMILY_ORACLE_CAP};
pub use preorders::PreorderTopologies;

use crate::error::CapExceeded;
use crate::topology::Topology;

/// How many points an enumeration may use.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum SizeLimit {
    /// Up to 5 points.
    #[default]
    Standard,
    /// Up to 7 points. Seven points has 9,535,241 labeled topologies.
    Extended,
}

impl SizeLimit {
    pub fn max_points(self) -> usize {
        match self {
            SizeLimit::Standard => 5,
            SizeLimit::Extended => 7,
        }
    }

    pub fn check(self, n: usize) -> Result<(), CapExceeded> {
        if n > self.max_points() {
            return Err(CapExceeded { requested: n, cap: self.max_points() });
        }
        Ok(())
    }
}

/// Every labeled topology on `n` points, each exactly once.
pub fn enumerate_topologies(n: usize, limit: SizeLimit) -> Result<PreorderTopologies, CapExceeded> {
    limit.check(n)?;
    Ok(PreorderTopologies::new(n))
}

/// One representative per homeomorphism class on `n` points.
pub fn enumerate_homeo_classes(
    n: usize,
    limit: SizeLimit,
) -> Result<impl Iterator<Item = Topology>, CapExceeded> {
    Ok(enumerate_topologies(n, limit)?.filter(is_canonical))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn count(n: usize) -> usize {
        enumerate_topologies(n, SizeLimit::Standard).unwrap().count()
    }

    #[test]
    fn small_counts() {
        assert_eq!(count(0), 1);
        assert_eq!(count(1), 1);
        assert_eq!(count(2), 4);
        assert_eq!(count(3), 29);
    }

    #[test]
    fn two_point_order() {
        let all: Vec<Vec<u32>> =
            enumerate_topologies(2, SizeLimit::Standard).unwrap().map(|t| t.open_masks().to_vec()).collect();
        assert_eq!(all, vec![vec![0, 1, 2, 3], vec![0, 1, 3], vec![0, 2, 3], vec![0, 3]]);
    }

    #[test]
    fn no_duplicates_and_valid() {
        let mut seen = HashSet::new();
        for t in enumerate_topologies(4, SizeLimit::Standard).unwrap() {
            assert!(Topology::from_opens(4, t.open_sets()).is_ok());
            assert!(seen.insert(t.open_masks().to_vec()));
        }
        assert_eq!(seen.len(), 355);
    }

    #[test]
    fn caps() {
        assert_eq!(
            enumerate_topologies(6, SizeLimit::Standard).err(),
            Some(CapExceeded { requested: 6, cap: 5 })
        );
        assert!(enumerate_topologies(6, SizeLimit::Extended).is_ok());
        assert!(enumerate_topologies(8, SizeLimit::Extended).is_err());
    }

    #[test]
    fn homeo_classes() {
        let classes = |n| enumerate_homeo_classes(n, SizeLimit::Standard).unwrap().count();
        assert_eq!(classes(0), 1);
        assert_eq!(classes(1), 1);
        assert_eq!(classes(2), 3);
        assert_eq!(classes(3), 9);
    }

    #[test]
    fn orbit_stabilizer_partition() {
        let fact: [usize; 5] = [1, 1, 2, 6, 24];
        for (n, f) in fact.iter().enumerate() {
            let total: usize = enumerate_homeo_classes(n, SizeLimit::Standard)
                .unwrap()
                .map(|t| f / stabilizer_size(&t))
                .sum();
            assert_eq!(total, count(n), "n = {n}");
        }
    }

    #[test]
    fn keys_agree_exactly_for_homeomorphic_spaces() {
        let all: Vec<Topology> = enumerate_topologies(3, SizeLimit::Standard).unwrap().collect();
        let keys: Vec<CanonicalKey> = all.iter().map(canonical_form).collect();
        let tables: Vec<Vec<usize>> = {
            use itertools::Itertools;
            (0..3).permutations(3).collect()
        };
        for (i, s) in all.iter().enumerate() {
            for (j, t) in all.iter().enumerate() {
                let related = tables.iter().any(|p| {
                    let image = |m: u32| (0..3).filter(|&x| m >> x & 1 == 1).fold(0u32, |acc, x| acc | 1 << p[x]);
                    let mut mapped: Vec<u32> = s.open_masks().iter().map(|&m| image(m)).collect();
                    mapped.sort_unstable();
                    let mut target = t.open_masks().to_vec();
                    target.sort_unstable();
                    mapped == target
                });
                assert_eq!(keys[i] == keys[j], related);
            }
        }
    }
}
