//! Canonical forms of topologies up to relabeling of points.
//!
//! The key is the lexicographically least normalized open-set encoding over
//! all `n!` point permutations. Brute force is fine at `n ≤ 7`.

use std::sync::OnceLock;

use itertools::Itertools;
use serde::Serialize;

use crate::point_set::normalized_key;
use crate::topology::Topology;

pub const CANONICAL_CAP: usize = 7;

/// Normalized opens encoding minimized over point permutations.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CanonicalKey {
    pub points: usize,
    pub opens: Vec<u32>,
}

/// Lookup tables `table[p][mask]`: the image of `mask` under permutation `p`.
struct PermTables {
    tables: Vec<Vec<u32>>,
}

fn perm_tables(n: usize) -> &'static PermTables {
    static CACHE: [OnceLock<PermTables>; CANONICAL_CAP + 1] = [const { OnceLock::new() }; CANONICAL_CAP + 1];
    CACHE[n].get_or_init(|| {
        let tables = (0..n)
            .permutations(n)
            .map(|perm| {
                (0..1u32 << n)
                    .map(|mask| {
                        perm.iter().enumerate().filter(|&(x, _)| mask >> x & 1 == 1).fold(0, |acc, (_, &y)| acc | 1 << y)
                    })
                    .collect()
            })
            .collect();
        PermTables { tables }
    })
}

fn permuted(table: &[u32], opens: &[u32], buf: &mut Vec<u32>) {
    buf.clear();
    buf.extend(opens.iter().map(|&m| table[m as usize]));
    buf.sort_unstable_by_key(|&m| normalized_key(m));
}

fn check_cap(t: &Topology) {
    assert!(t.points() <= CANONICAL_CAP, "canonical forms are limited to {CANONICAL_CAP} points");
}

pub fn canonical_form(t: &Topology) -> CanonicalKey {
    check_cap(t);
    let opens = t.open_masks();
    let mut best = opens.to_vec();
    let mut buf = Vec::with_capacity(opens.len());
    for table in &perm_tables(t.points()).tables {
        permuted(table, opens, &mut buf);
        if buf < best {
            std::mem::swap(&mut best, &mut buf);
        }
    }
    CanonicalKey { points: t.points(), opens: best }
}

/// True when `t`'s own encoding is its canonical key. Stops at the first
/// permutation that yields a smaller encoding.
pub fn is_canonical(t: &Topology) -> bool {
    check_cap(t);
    let opens = t.open_masks();
    let mut buf = Vec::with_capacity(opens.len());
    perm_tables(t.points()).tables.iter().all(|table| {
        permuted(table, opens, &mut buf);
        buf.as_slice() >= opens
    })
}

/// Number of point permutations that map the open-set family onto itself.
pub fn stabilizer_size(t: &Topology) -> usize {
    check_cap(t);
    let opens = t.open_masks();
    let mut buf = Vec::with_capacity(opens.len());
    perm_tables(t.points())
        .tables
        .iter()
        .filter(|table| {
            permuted(table, opens, &mut buf);
            buf.as_slice() == opens
        })
        .count()
}
