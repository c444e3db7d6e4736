mod common;

use edtop::characterizations::{check, check_e_printed_reduced, condition_vector};
use edtop::claim::CompiledClaim;
use edtop::enumeration::{enumerate_homeo_classes, enumerate_topologies, stabilizer_size, SizeLimit};
use edtop::harness::{model_check, ModelFilter, SweepOptions};
use edtop::{is_extremally_disconnected, parse_claim, Statement, Topology};

fn all_up_to(n_max: usize) -> impl Iterator<Item = Topology> {
    (0..=n_max).flat_map(|n| enumerate_topologies(n, SizeLimit::Standard).unwrap())
}

#[test]
fn printed_e_reduces_and_is_a_tautology() {
    for t in all_up_to(5) {
        let literal = check(&t, Statement::EPrinted);
        let reduced = check_e_printed_reduced(&t);
        assert_eq!(literal.holds, reduced.holds, "{t}");
        assert!(literal.holds, "disjoint form of (e) failed on {t}");
    }
}

#[test]
fn closure_of_open_set_is_regular_open_in_ed_spaces() {
    for t in all_up_to(5).filter(is_extremally_disconnected) {
        for &a in t.open_masks() {
            let c = t.closure_bits(a);
            assert_eq!(c, t.interior_bits(c), "{t}");
        }
    }
}

#[test]
fn verdict_vectors_are_constant() {
    for t in all_up_to(5) {
        let v = condition_vector(&t);
        assert!(v.iter().all(|&b| b == v[0]), "{t}: {v:?}");
        assert_eq!(v[0], is_extremally_disconnected(&t));
    }
}

#[test]
fn failing_witnesses_reproduce_and_repeat() {
    for s in Statement::ALL {
        let claim = CompiledClaim::new(&parse_claim(s.claim_text()).unwrap());
        for t in all_up_to(4) {
            let v = check(&t, s);
            assert_eq!(v, check(&t, s));
            if let Some(w) = &v.witness {
                assert!(claim.reproduces(&t, w), "{s} on {t}: {w}");
            }
        }
    }
}

#[test]
fn condition_a_as_a_claim_matches_native_everywhere() {
    let claim = parse_claim("forall open A : cl(A) = int(cl(A))").unwrap();
    let compiled = CompiledClaim::new(&claim);
    for t in all_up_to(5) {
        assert_eq!(compiled.eval(&t).holds, is_extremally_disconnected(&t));
    }
}

#[test]
fn ed_filter_only_admits_ed_spaces() {
    // Condition (a) itself never fails on spaces admitted by the ED filter.
    let claim = parse_claim(Statement::A.claim_text()).unwrap();
    let o = SweepOptions { jobs: Some(2), ..SweepOptions::default() };
    let ed = model_check(&claim, 5, ModelFilter::EdOnly, &o).unwrap();
    assert_eq!(ed.total_failures(), 0);
    let checked: Vec<u64> = ed.per_n.iter().map(|s| s.checked).collect();
    assert_eq!(checked, vec![1, 1, 4, 26, 255, 3642]);
    let non_ed = model_check(&claim, 5, ModelFilter::NonEdOnly, &o).unwrap();
    assert_eq!(non_ed.total_failures(), non_ed.per_n.iter().map(|s| s.checked).sum::<u64>());
}

#[test]
fn class_partition_accounts_for_every_labeled_space() {
    let factorial = [1usize, 1, 2, 6, 24, 120];
    for (n, f) in factorial.iter().enumerate() {
        let labeled = enumerate_topologies(n, SizeLimit::Standard).unwrap().count();
        let orbit_sum: usize = enumerate_homeo_classes(n, SizeLimit::Standard)
            .unwrap()
            .map(|t| f / stabilizer_size(&t))
            .sum();
        assert_eq!(orbit_sum, labeled, "n = {n}");
    }
}

#[test]
fn ed_census_agrees_with_family_oracle_per_homeo_class() {
    for n in 0..=4 {
        let classes: Vec<Topology> = enumerate_homeo_classes(n, SizeLimit::Standard).unwrap().collect();
        for t in classes {
            let mut family = t.open_masks().to_vec();
            family.sort_unstable();
            assert_eq!(is_extremally_disconnected(&t), common::is_extremally_disconnected(&family, n), "{t}");
        }
    }
}
