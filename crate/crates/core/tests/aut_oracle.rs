use std::collections::HashSet;

use num_bigint::BigUint;
use oddaut::aut::{automorphism_group, inner_automorphisms, is_ni, DEFAULT_BUDGET};
use oddaut::catalog::{odd_catalog, test_catalog, GroupSpec};
use oddaut::group::{abelian, cyclic};
use oddaut::structure::center;

mod common;
use common::{brute_force_aut_count, euler_phi, gl_formula, ORDER_AT_MOST_12};

#[test]
fn cyclic_groups_match_euler_phi() {
    for n in 1..=50 {
        let a = automorphism_group(&cyclic(n).unwrap(), DEFAULT_BUDGET).unwrap();
        assert_eq!(*a.order(), BigUint::from(euler_phi(n)), "C{n}");
    }
}

#[test]
fn elementary_abelian_groups_match_gl() {
    for (p, k) in [(2u64, 2u32), (2, 3), (3, 2), (2, 4), (5, 2), (3, 3), (3, 4), (5, 3)] {
        let g = abelian(&vec![p as usize; k as usize]).unwrap();
        let a = automorphism_group(&g, DEFAULT_BUDGET).unwrap();
        assert_eq!(*a.order(), gl_formula(k, p), "C{p}^{k}");
        assert_eq!(*a.order(), oddaut::linalg::gl_order(k, p).unwrap());
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 113] {
        for k in 1u32.. {
            if p.pow(k) > 125 {
                break;
            }
            let g = abelian(&vec![p as usize; k as usize]).unwrap();
            let a = automorphism_group(&g, DEFAULT_BUDGET).unwrap();
            assert_eq!(*a.order(), gl_formula(k, p), "C{p}^{k}");
        }
    }
}

#[test]
fn small_groups_match_brute_force() {
    for s in ORDER_AT_MOST_12 {
        let g = GroupSpec::parse(s).unwrap().build().unwrap();
        let a = automorphism_group(&g, DEFAULT_BUDGET).unwrap();
        assert_eq!(*a.order(), BigUint::from(brute_force_aut_count(&g)), "{s}");
    }
}

#[test]
fn inner_automorphisms_form_a_normal_subgroup() {
    for e in test_catalog() {
        let g = e.build().unwrap();
        let inn = inner_automorphisms(&g);
        assert_eq!(inn.maps.len(), g.order() / center(&g).order(), "{}", e.name);
        let set: HashSet<Vec<u32>> = inn.maps.iter().map(|m| m.images().to_vec()).collect();
        assert_eq!(set.len(), inn.maps.len());
        let aut = automorphism_group(&g, DEFAULT_BUDGET).unwrap();
        for phi in aut.generators() {
            for m in &inn.maps {
                let c = phi.inverse().then(m).then(phi);
                assert!(set.contains(c.images()), "{}", e.name);
                assert!(aut.contains(m));
            }
        }
    }
}

#[test]
fn element_lists_are_deterministic() {
    for s in ["abelian:3,3", "alternating:4", "extraspecial:3:3", "dihedral:6"] {
        let g = GroupSpec::parse(s).unwrap().build().unwrap();
        let once = automorphism_group(&g, DEFAULT_BUDGET).unwrap().elements(100_000).unwrap();
        let twice = automorphism_group(&g, DEFAULT_BUDGET).unwrap().elements(100_000).unwrap();
        assert_eq!(once.len().to_string(), automorphism_group(&g, DEFAULT_BUDGET).unwrap().order().to_string());
        let a: Vec<&[u32]> = once.iter().map(|m| m.images()).collect();
        let b: Vec<&[u32]> = twice.iter().map(|m| m.images()).collect();
        assert_eq!(a, b);
        assert!(a.windows(2).all(|w| w[0] < w[1]));
    }
}

#[test]
fn odd_catalog_has_no_ni_group() {
    for e in odd_catalog(243) {
        let g = e.build().unwrap();
        let aut = automorphism_group(&g, DEFAULT_BUDGET).unwrap();
        let ni = is_ni(&g, &aut).unwrap();
        assert_eq!(ni.aut_order_odd, ni.no_inversion, "{}", e.name);
        assert!(!ni.aut_order_odd, "{}", e.name);
    }
}
