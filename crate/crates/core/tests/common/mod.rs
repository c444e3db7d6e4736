//! Reference implementations that work directly from the definitions,
//! independent of minimal neighbourhoods and preorders.
#![allow(dead_code)]

use std::collections::BTreeSet;

use itertools::Itertools;

/// Every family of subsets of an `n`-set that contains `∅` and `X` and is
/// closed under pairwise union and intersection. Sorted mask lists.
pub fn topology_families(n: usize) -> Vec<Vec<u32>> {
    assert!(n <= 4);
    let full: u32 = (1 << n) - 1;
    let candidates: Vec<u32> = (0..=full).filter(|&m| m != 0 && m != full).collect();
    let mut out = Vec::new();
    for pick in 0u64..1 << candidates.len() {
        let mut fam: BTreeSet<u32> = BTreeSet::from([0, full]);
        for (i, &m) in candidates.iter().enumerate() {
            if pick >> i & 1 == 1 {
                fam.insert(m);
            }
        }
        let ok = fam.iter().cartesian_product(fam.iter()).all(|(a, b)| fam.contains(&(a | b)) && fam.contains(&(a & b)));
        if ok {
            out.push(fam.into_iter().collect());
        }
    }
    out
}

/// Union of all open sets inside `a`.
pub fn interior(family: &[u32], a: u32) -> u32 {
    family.iter().filter(|&&u| u & !a == 0).fold(0, |acc, &u| acc | u)
}

/// Intersection of all closed sets containing `a`.
pub fn closure(family: &[u32], n: usize, a: u32) -> u32 {
    let full: u32 = (1 << n) - 1;
    family.iter().map(|&u| !u & full).filter(|&c| a & !c == 0).fold(full, |acc, c| acc & c)
}

pub fn is_extremally_disconnected(family: &[u32], n: usize) -> bool {
    family.iter().all(|&a| family.contains(&closure(family, n, a)))
}

/// Canonical key by brute force over permutations, on plain sorted masks.
pub fn homeo_key(family: &[u32], n: usize) -> Vec<u32> {
    (0..n)
        .permutations(n)
        .map(|p| {
            let mut img: Vec<u32> = family
                .iter()
                .map(|&m| (0..n).filter(|&x| m >> x & 1 == 1).fold(0u32, |acc, x| acc | 1 << p[x]))
                .collect();
            img.sort_unstable();
            img
        })
        .min()
        .unwrap_or_else(|| family.to_vec())
}

/// Prints one acceptance line and fails the test when `ok` is false.
pub fn criterion(id: u32, name: &str, ok: bool, detail: impl std::fmt::Display) {
    println!("criterion {id} [{}] {name}: {detail}", if ok { "PASS" } else { "FAIL" });
    assert!(ok, "criterion {id} failed: {name}: {detail}");
}
