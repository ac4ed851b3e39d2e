use depthlab_core::groups::{parse_subgroup, symmetric};
use depthlab_core::indres::{
    class_fusion, inclusion_matrix, induce, inner_product, mackey_check, restrict, SubgroupPair,
};
use depthlab_core::{character_table, ClassFunction, NonNegIntMatrix, PermGroup};
use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::ToPrimitive;

fn pair(g: &str, h: &str) -> (PermGroup, PermGroup) {
    let g = depthlab_core::groups::parse_group(g).unwrap();
    let h = parse_subgroup(&g, h).unwrap();
    (g, h)
}

fn ints(f: &ClassFunction) -> Vec<i64> {
    f.as_integers()
        .unwrap()
        .iter()
        .map(|v| v.to_i64().unwrap())
        .collect()
}

fn counts(v: &[BigUint]) -> Vec<u64> {
    v.iter().map(|x| x.to_u64().unwrap()).collect()
}

fn matrix(rows: &[&[u64]]) -> NonNegIntMatrix {
    NonNegIntMatrix::from_u64_rows(rows).unwrap()
}

#[test]
fn fusion_examples() {
    let s3 = symmetric(3);
    assert_eq!(class_fusion(&s3, &s3).unwrap().map(), &[0, 1, 2]);
    let (g, h) = pair("S3", "S2");
    assert_eq!(class_fusion(&g, &h).unwrap().map(), &[0, 1]);
    let (g, h) = pair("S4", "V4");
    let f = class_fusion(&g, &h).unwrap();
    let gc = g.conjugacy_classes().unwrap();
    for c in 1..4 {
        assert_eq!(gc.representative(f.get(c)).cycle_type(), vec![2, 2]);
    }
    assert!(class_fusion(&symmetric(4), &symmetric(3)).is_err());
}

#[test]
fn restriction_examples() {
    let (g, h) = pair("S3", "S2");
    let t = character_table(&g).unwrap();
    let f = class_fusion(&g, &h).unwrap();
    assert_eq!(ints(&restrict(t.character(0), &f).unwrap()), vec![1, 1]);
    assert_eq!(ints(&restrict(t.character(2), &f).unwrap()), vec![2, 0]);
    let (g, h) = pair("S4", "V4");
    let sign = character_table(&g).unwrap().character(1).clone();
    assert_eq!(
        ints(&restrict(&sign, &class_fusion(&g, &h).unwrap()).unwrap()),
        vec![1, 1, 1, 1]
    );
    assert!(restrict(
        &ClassFunction::from_integers(&[1, 1]),
        &class_fusion(&g, &h).unwrap()
    )
    .is_err());
}

#[test]
fn inner_product_examples() {
    let (g, h) = pair("S3", "S2");
    let p = SubgroupPair::new(&g, &h).unwrap();
    let trivial = p.subgroup_table().character(0).clone();
    let down = p.restrict(&p.induce(&trivial).unwrap()).unwrap();
    assert_eq!(
        inner_product(&h, &down, &trivial).unwrap(),
        BigRational::from_integer(2.into())
    );
    let regular = ClassFunction::from_integers(&[6, 0, 0]);
    let gt = character_table(&g).unwrap();
    assert_eq!(
        inner_product(&g, &regular, gt.character(0)).unwrap(),
        BigRational::from_integer(1.into())
    );
    for i in 0..gt.len() {
        assert_eq!(
            inner_product(&g, gt.character(i), gt.character(i)).unwrap(),
            BigRational::from_integer(1.into())
        );
    }
}

#[test]
fn induction_examples() {
    let (g, h) = pair("S3", "S2");
    let p = SubgroupPair::new(&g, &h).unwrap();
    let up = induce(p.subgroup_table().character(0), &g, &h).unwrap();
    assert_eq!(counts(&p.decompose_on_group(&up).unwrap()), vec![1, 0, 1]);
    let s3 = symmetric(3);
    let t = character_table(&s3).unwrap();
    for chi in t.rows() {
        assert_eq!(&induce(chi, &s3, &s3).unwrap(), chi);
    }
    let (g, h) = pair("S5", "S4");
    let p = SubgroupPair::new(&g, &h).unwrap();
    let up = p.induce(p.subgroup_table().character(0)).unwrap();
    let mut expected = vec![0; 7];
    expected[0] = 1;
    expected[2] = 1;
    assert_eq!(counts(&p.decompose_on_group(&up).unwrap()), expected);
}

#[test]
fn inclusion_matrices() {
    let (g, h) = pair("S3", "S2");
    let m = inclusion_matrix(&g, &h).unwrap();
    assert_eq!(m.entries(), &matrix(&[&[1, 0, 1], &[0, 1, 1]]));
    assert_eq!(m.row_labels(), &["ψ1", "ψ2"]);
    let (g, h) = pair("S4", "S3");
    assert_eq!(
        inclusion_matrix(&g, &h).unwrap().entries(),
        &matrix(&[&[1, 0, 0, 1, 0], &[0, 1, 0, 0, 1], &[0, 0, 1, 1, 1]])
    );
    let s4 = symmetric(4);
    assert_eq!(
        inclusion_matrix(&s4, &s4).unwrap().entries(),
        &NonNegIntMatrix::identity(5)
    );
}

#[test]
fn degrees_and_columns() {
    for (g, h) in [
        ("S4", "S3"),
        ("S5", "S4"),
        ("S4", "D4"),
        ("F20", "C5"),
        ("A5", "A4"),
    ] {
        let (g, h) = pair(g, h);
        let p = SubgroupPair::new(&g, &h).unwrap();
        let m = p.inclusion_matrix().unwrap();
        assert!(!m.has_zero_row_or_column());
        let hd = p.subgroup_table().degrees();
        let gd = p.group_table().degrees();
        for (j, &d) in gd.iter().enumerate() {
            let sum: u64 = (0..hd.len())
                .map(|i| m.entries().get(i, j).to_u64().unwrap() * hd[i])
                .sum();
            assert_eq!(sum, d);
        }
        for (i, psi) in p.subgroup_table().rows().iter().enumerate() {
            let up = p.induce(psi).unwrap();
            assert_eq!(up.degree().unwrap(), (p.index() as u64 * hd[i]).into());
        }
    }
}

#[test]
fn res_ind_rounds() {
    let (g, h) = pair("S3", "S2");
    let p = SubgroupPair::new(&g, &h).unwrap();
    assert_eq!(counts(&p.res_ind_decompose(0, 1).unwrap()), vec![2, 1]);
    assert!(p.res_ind_decompose(0, 0).is_err());
    assert!(p.res_ind_decompose(5, 1).is_err());
    let (g, h) = pair("S5", "S4");
    let p = SubgroupPair::new(&g, &h).unwrap();
    assert_eq!(
        counts(&p.res_ind_decompose(0, 2).unwrap()),
        vec![5, 0, 1, 5, 1]
    );
}

#[test]
fn mackey_examples() {
    let s3 = symmetric(3);
    let c2 = parse_subgroup(&s3, "(1 2)").unwrap();
    let sign = character_table(&c2).unwrap().character(1).clone();
    let r = mackey_check(&s3, &c2, &c2, &sign).unwrap();
    assert!(r.holds);
    assert_eq!(r.double_cosets, 2);
    let r = mackey_check(&s3, &s3, &c2, &sign).unwrap();
    assert!(r.holds);
    assert_eq!(r.double_cosets, 1);
    let s4 = symmetric(4);
    let s3 = parse_subgroup(&s4, "S3").unwrap();
    for psi in character_table(&s3).unwrap().rows() {
        assert!(mackey_check(&s4, &s3, &s3, psi).unwrap().holds);
    }
}
