//! Direct enumeration of open-set families, independent of preorders.
//!
//! Every family of subsets containing `∅` and `X` is tried and kept when
//! it is closed under pairwise union and intersection. There are
//! `2^(2^n - 2)` candidates, so this is only usable up to four points.

use crate::error::CapExceeded;
use crate::point_set::full_mask;

pub const FAMILY_ORACLE_CAP: usize = 4;

/// All topologies on `n` points as sorted mask lists, in candidate order.
pub fn closed_families(n: usize) -> Result<Vec<Vec<u32>>, CapExceeded> {
    if n > FAMILY_ORACLE_CAP {
        return Err(CapExceeded { requested: n, cap: FAMILY_ORACLE_CAP });
    }
    let full = full_mask(n);
    let middle: Vec<u32> = (1..full).collect();
    let mut out = Vec::new();
    for choice in 0u64..(1u64 << middle.len()) {
        let mut family = vec![0u32];
        family.extend(middle.iter().enumerate().filter(|(i, _)| choice >> i & 1 == 1).map(|(_, &m)| m));
        if full != 0 {
            family.push(full);
        }
        let closed = family
            .iter()
            .all(|&a| family.iter().all(|&b| family.contains(&(a | b)) && family.contains(&(a & b))));
        if closed {
            family.sort_unstable();
            out.push(family);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_point_families() {
        let fams = closed_families(2).unwrap();
        assert_eq!(fams, vec![vec![0, 3], vec![0, 1, 3], vec![0, 2, 3], vec![0, 1, 2, 3]]);
    }

    #[test]
    fn cap() {
        assert_eq!(closed_families(5), Err(CapExceeded { requested: 5, cap: 4 }));
    }
}
