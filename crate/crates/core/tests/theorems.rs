use depthlab_core::depthcalc::{is_depth_n, minimal_depth, s_matrix, strictly_positive_power};
use depthlab_core::groups::{parse_group, parse_subgroup};
use depthlab_core::indres::inclusion_matrix;
use depthlab_core::permgroup::{all_subgroups, is_normal};
use depthlab_core::theorems::{
    d3_char_criterion, frobenius_s_formula_check, tower_core_equivalence, verify_frobenius_pair,
};
use depthlab_core::PermGroup;
use num_bigint::BigUint;

fn pair(g: &str, h: &str) -> (PermGroup, PermGroup) {
    let g = parse_group(g).unwrap();
    let h = parse_subgroup(&g, h).unwrap();
    (g, h)
}

#[test]
fn frobenius_examples() {
    let (g, h) = pair("S3", "(1 2)");
    let r = verify_frobenius_pair(&g, &h).unwrap();
    assert!(r.is_frobenius && r.s_formula_ok);
    assert_eq!(r.double_cosets, 2);
    let k = r.kernel.unwrap();
    assert_eq!(k.order(), &BigUint::from(3u8));
    assert!(k.contains(&depthlab_core::Permutation::parse_cycles("(1 2 3)", 3).unwrap()));

    let (g, h) = pair("S4", "S3");
    let r = verify_frobenius_pair(&g, &h).unwrap();
    assert!(!r.is_frobenius);
    assert!(r.intersection_witness.is_some());
    assert!(frobenius_s_formula_check(&g, &h).is_err());

    let (g, h) = pair("A4", "(1 2 3)");
    let r = verify_frobenius_pair(&g, &h).unwrap();
    assert!(r.is_frobenius && r.s_formula_ok);
    let v4 = parse_subgroup(&g, "V4").unwrap();
    assert_eq!(
        r.kernel.unwrap().elements().unwrap(),
        v4.elements().unwrap()
    );

    let (g, h) = pair("F20", "(2 3 5 4)");
    let r = verify_frobenius_pair(&g, &h).unwrap();
    assert!(r.is_frobenius);
    assert_eq!(r.double_cosets, 2);
    assert!(frobenius_s_formula_check(&g, &h).unwrap());
    let s = s_matrix(&inclusion_matrix(&g, &h).unwrap().into_entries());
    assert_eq!(s.rows(), 4);
    assert!(s
        .entries()
        .all(|(i, j, v)| *v == BigUint::from(if i == j { 2u8 } else { 1 })));

    assert!(verify_frobenius_pair(&g, &g).is_err());
}

#[test]
fn frobenius_pairs_are_depth_three() {
    for (g, h) in [
        ("S3", "(1 2)"),
        ("A4", "(1 2 3)"),
        ("F20", "(2 3 5 4)"),
        ("D5", "(2 5)(3 4)"),
    ] {
        let (g, h) = pair(g, h);
        assert!(verify_frobenius_pair(&g, &h).unwrap().is_frobenius);
        let m = inclusion_matrix(&g, &h).unwrap().into_entries();
        assert_eq!(minimal_depth(&m, 24).unwrap().minimal_depth, Some(3));
        assert_eq!(strictly_positive_power(&s_matrix(&m), 4).unwrap(), Some(1));
    }
}

#[test]
fn tower_examples() {
    let s4 = parse_group("S4").unwrap();
    let v4 = parse_subgroup(&s4, "V4").unwrap();
    let c2 = parse_subgroup(&s4, "(1 2)(3 4)").unwrap();
    let r = tower_core_equivalence(&s4, &v4, &c2).unwrap();
    assert!(r.matrix_d3 && r.core_contains);
    let s3 = parse_subgroup(&s4, "S3").unwrap();
    let t = parse_subgroup(&s4, "(1 2)").unwrap();
    let r = tower_core_equivalence(&s4, &s3, &t).unwrap();
    assert!(!r.matrix_d3 && !r.core_contains);
    let r = tower_core_equivalence(&s4, &s4, &s3).unwrap();
    assert!(r.matrix_d3 && r.core_contains);
    assert!(tower_core_equivalence(&s4, &s3, &v4).is_err());
}

#[test]
fn tower_scan_small_groups() {
    for spec in ["S3", "D4", "Q8"] {
        let g = parse_group(spec).unwrap();
        let subs = all_subgroups(&g).unwrap();
        for n in &subs {
            for h in subs.iter().filter(|h| h.is_subgroup_of(n)) {
                assert!(
                    tower_core_equivalence(&g, n, h).unwrap().agree(),
                    "{spec}: {n:?} {h:?}"
                );
            }
        }
    }
}

#[test]
fn character_criterion() {
    let (g, h) = pair("S3", "S2");
    assert!(d3_char_criterion(&g, &h).unwrap().holds);
    let (g, h) = pair("S5", "S4");
    let r = d3_char_criterion(&g, &h).unwrap();
    assert!(!r.holds);
    assert_eq!(r.failure, Some((0, 2)));
    assert_eq!(r.twice, Some(BigUint::from(1u8)));
    let (g, h) = pair("S4", "V4");
    assert!(d3_char_criterion(&g, &h).unwrap().holds);
    for (g, h) in [("S4", "S3"), ("S4", "D4"), ("A5", "A4"), ("F20", "C5")] {
        let (g, h) = pair(g, h);
        let m = inclusion_matrix(&g, &h).unwrap().into_entries();
        assert_eq!(
            d3_char_criterion(&g, &h).unwrap().holds,
            is_depth_n(&m, 3).unwrap().holds
        );
    }
}

#[test]
fn depth_two_is_normality() {
    let (g, h) = pair("S4", "A4");
    assert!(is_normal(&g, &h).unwrap());
    let m = inclusion_matrix(&g, &h).unwrap().into_entries();
    assert!(is_depth_n(&m, 2).unwrap().holds);
}
