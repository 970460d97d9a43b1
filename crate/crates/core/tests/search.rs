use mixcay::search::{group_has_witness, prune_group};
use mixcay::{enumerate_abelian_groups, mac_bound_improved, search_optimal, SearchSpec};
use num_bigint::BigUint;

const K2_SPECS: [(u32, u32, u32); 3] = [(1, 2, 0), (1, 1, 1), (0, 2, 0)];

#[test]
fn pruned_and_unpruned_agree() {
    for (ra, rw, zw) in K2_SPECS {
        let spec = SearchSpec::new(ra, rw, zw, 2).with_all_witnesses();
        let pruned = search_optimal(&spec).unwrap();
        let full = search_optimal(&spec.clone().unpruned()).unwrap();
        assert_eq!(pruned.best_n, full.best_n, "({ra},{rw},{zw})");
        assert_eq!(pruned.witnesses, full.witnesses, "({ra},{rw},{zw})");
        assert!(pruned.examined_sets <= full.examined_sets);
    }
}

#[test]
fn pruning_never_removes_a_witness() {
    for (ra, rw, zw) in K2_SPECS {
        let spec = SearchSpec::new(ra, rw, zw, 2);
        let top = spec.moore_bound().try_into().unwrap();
        for n in 1..=top {
            for g in enumerate_abelian_groups(n) {
                if prune_group(&g, &spec) < BigUint::from(n) {
                    assert!(!group_has_witness(&g, &spec), "{g} pruned but has a witness for ({ra},{rw},{zw})");
                }
            }
        }
    }
}

#[test]
fn witnesses_recertify() {
    for (ra, rw, zw, k) in [(1, 2, 0, 2), (1, 1, 1, 2), (0, 2, 0, 2), (1, 1, 1, 3), (0, 1, 1, 3)] {
        let r = search_optimal(&SearchSpec::new(ra, rw, zw, k).with_all_witnesses()).unwrap();
        let n = r.best_n.unwrap();
        assert!(!r.witnesses.is_empty());
        for w in &r.witnesses {
            let g = w.graph().unwrap();
            assert_eq!(g.order(), n);
            assert!(g.diameter() <= k);
            assert_eq!(w.gens.involutions().len() as u32, ra);
            assert_eq!(w.gens.pairs().len() as u32, rw);
            assert_eq!(w.gens.directed().len() as u32, zw);
            assert!(BigUint::from(n) <= mac_bound_improved(&g.degree_spec(k)).unwrap());
        }
    }
}

#[test]
fn known_optima() {
    let best = |ra, rw, zw, k| search_optimal(&SearchSpec::new(ra, rw, zw, k)).unwrap().best_n;
    assert_eq!(best(1, 2, 0, 2), Some(16));
    assert_eq!(best(1, 1, 1, 2), Some(10));
    assert_eq!(best(0, 2, 0, 2), Some(13));
    assert_eq!(best(1, 1, 1, 3), Some(20));
    assert_eq!(best(0, 1, 1, 3), Some(13));
}

#[test]
fn removing_a_slot_never_helps() {
    let best = |ra, rw, zw| search_optimal(&SearchSpec::new(ra, rw, zw, 2)).unwrap().best_n.unwrap();
    let grid = [(1, 1, 1), (1, 2, 0), (0, 2, 0), (1, 1, 0)];
    for &(ra, rw, zw) in &grid {
        let n = best(ra, rw, zw);
        for (da, dw, dz) in [(1, 0, 0), (0, 1, 0), (0, 0, 1)] {
            if ra >= da && rw >= dw && zw >= dz && (ra - da) + (rw - dw) + (zw - dz) > 0 {
                let smaller = best(ra - da, rw - dw, zw - dz);
                assert!(smaller <= n, "({ra},{rw},{zw}) -> {n}, smaller spec -> {smaller}");
            }
        }
    }
}

#[test]
fn result_does_not_depend_on_worker_count() {
    let mut spec = SearchSpec::new(1, 1, 1, 3).with_all_witnesses();
    spec.jobs = 1;
    let one = search_optimal(&spec).unwrap();
    spec.jobs = 3;
    assert_eq!(search_optimal(&spec).unwrap(), one);
}
