use depthlab_core::frobalg::{
    check_frobenius_system, check_separability, frobenius_hom, verify_d2_quasibases,
    verify_d3_from_d2, FrobeniusExtension, RationalElement,
};
use depthlab_core::groups::{parse_group, parse_subgroup};
use depthlab_core::permgroup::{all_subgroups, is_normal};
use depthlab_core::{PermGroup, Permutation};
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn pair(g: &str, h: &str) -> (PermGroup, PermGroup) {
    let g = parse_group(g).unwrap();
    let h = parse_subgroup(&g, h).unwrap();
    (g, h)
}

#[test]
fn frobenius_systems() {
    for (g, h) in [
        ("S3", "S2"),
        ("S4", "D4"),
        ("S4", "A4"),
        ("A4", "V4"),
        ("F20", "C5"),
    ] {
        let (g, h) = pair(g, h);
        assert!(check_frobenius_system(&g, &h).unwrap().holds);
    }
}

#[test]
fn separability() {
    for (g, h, index) in [
        ("S3", "S2", 3),
        ("S4", "D4", 3),
        ("S4", "A4", 2),
        ("S3", "S3", 1),
    ] {
        let (g, h) = pair(g, h);
        let r = check_separability(&g, &h).unwrap();
        assert!(r.central && r.multiplies_to_one, "{g:?} {h:?}");
        assert_eq!(r.element.terms().len(), index);
        let third = BigRational::new(BigInt::from(1), BigInt::from(index as i64));
        assert!(r.element.terms().values().all(|c| *c == third));
    }
}

#[test]
fn d2_quasibases() {
    let (g, h) = pair("S3", "C3");
    let r = verify_d2_quasibases(&g, &h).unwrap();
    assert!(r.holds());
    assert_eq!(r.pairs_checked, 36);
    let (g, h) = pair("S4", "V4");
    let r = verify_d2_quasibases(&g, &h).unwrap();
    assert!(r.holds());
    assert_eq!(r.pairs_checked, 576);
    let (g, h) = pair("S3", "S2");
    let r = verify_d2_quasibases(&g, &h).unwrap();
    assert!(!r.holds());
    assert!(!r.central && !r.bimodule);
}

#[test]
fn d2_holds_exactly_for_normal_subgroups() {
    for spec in ["S3", "D4", "A4"] {
        let g = parse_group(spec).unwrap();
        for h in all_subgroups(&g).unwrap() {
            assert_eq!(
                verify_d2_quasibases(&g, &h).unwrap().holds(),
                is_normal(&g, &h).unwrap()
            );
        }
    }
}

#[test]
fn d3_from_d2() {
    for (g, h) in [("S3", "C3"), ("A4", "V4"), ("S3", "S3"), ("D4", "C4")] {
        let (g, h) = pair(g, h);
        let r = verify_d3_from_d2(&g, &h).unwrap();
        assert!(r.holds(), "{g:?} {h:?} {r:?}");
    }
}

fn random_element(rng: &mut ChaCha8Rng, pool: &[Permutation], terms: usize) -> RationalElement {
    RationalElement::from_terms((0..terms).map(|_| {
        let g = pool.choose(rng).unwrap().clone();
        let c = BigRational::new(
            BigInt::from(rng.random_range(-5..=5)),
            BigInt::from(rng.random_range(1..=4)),
        );
        (g, c)
    }))
}

#[test]
fn tensors_are_balanced() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for (g, h) in [("S3", "S2"), ("S4", "D4"), ("S4", "S3"), ("A4", "C3")] {
        let (g, h) = pair(g, h);
        let ext = FrobeniusExtension::new(&g, &h).unwrap();
        let ge = g.elements().unwrap();
        let he = h.elements().unwrap();
        for _ in 0..100 {
            let x = random_element(&mut rng, ge, 3);
            let y = random_element(&mut rng, ge, 3);
            let b = random_element(&mut rng, he, 2);
            assert_eq!(
                ext.tensor2(&x.mul(&b), &y).unwrap(),
                ext.tensor2(&x, &b.mul(&y)).unwrap()
            );
            let z = random_element(&mut rng, ge, 2);
            assert_eq!(
                ext.tensor3(&x, &y.mul(&b), &z).unwrap(),
                ext.tensor3(&x, &y, &b.mul(&z)).unwrap()
            );
        }
    }
}

#[test]
fn frobenius_hom_is_a_bimodule_map() {
    for (g, h) in [("S3", "S2"), ("S4", "D4"), ("A4", "C3")] {
        let (g, h) = pair(g, h);
        let he = h.elements().unwrap();
        for a in g.elements().unwrap() {
            let ae = RationalElement::basis(a);
            for b in he {
                for c in he {
                    let (be, ce) = (RationalElement::basis(b), RationalElement::basis(c));
                    assert_eq!(
                        frobenius_hom(&be.mul(&ae).mul(&ce), &h),
                        be.mul(&frobenius_hom(&ae, &h)).mul(&ce)
                    );
                }
            }
        }
    }
}
