use depthlab_core::depthcalc::{
    bratteli_dot, is_depth_n, minimal_depth, minimal_multiplier, s_matrix, strictly_positive_power,
    support_dominated, tower_is_d3, DepthEngine,
};
use depthlab_core::groups::{parse_group, parse_subgroup};
use depthlab_core::indres::inclusion_matrix;
use depthlab_core::NonNegIntMatrix;
use num_bigint::BigUint;
use proptest::prelude::*;

fn m(rows: &[&[u64]]) -> NonNegIntMatrix {
    NonNegIntMatrix::from_u64_rows(rows).unwrap()
}

fn inc(g: &str, h: &str) -> NonNegIntMatrix {
    let g = parse_group(g).unwrap();
    let h = parse_subgroup(&g, h).unwrap();
    inclusion_matrix(&g, &h).unwrap().into_entries()
}

fn s2s3() -> NonNegIntMatrix {
    m(&[&[1, 0, 1], &[0, 1, 1]])
}

fn s3s4() -> NonNegIntMatrix {
    m(&[&[1, 0, 0, 1, 0], &[0, 1, 0, 0, 1], &[0, 0, 1, 1, 1]])
}

fn s4s5() -> NonNegIntMatrix {
    m(&[
        &[1, 0, 1, 0, 0, 0, 0],
        &[0, 1, 0, 1, 0, 0, 0],
        &[0, 0, 0, 0, 0, 1, 1],
        &[0, 0, 1, 0, 1, 1, 0],
        &[0, 0, 0, 1, 1, 0, 1],
    ])
}

#[test]
fn s_matrices() {
    assert_eq!(s_matrix(&s2s3()), m(&[&[2, 1], &[1, 2]]));
    assert_eq!(s_matrix(&s3s4()), m(&[&[2, 0, 1], &[0, 2, 1], &[1, 1, 3]]));
    assert_eq!(
        s_matrix(&NonNegIntMatrix::identity(3)),
        NonNegIntMatrix::identity(3)
    );
}

#[test]
fn support_examples() {
    let s = s_matrix(&s2s3());
    assert!(support_dominated(&s.pow(3).unwrap(), &s).unwrap());
    assert_eq!(
        minimal_multiplier(&s.pow(3).unwrap(), &s).unwrap(),
        BigUint::from(13u8)
    );
    let s = s_matrix(&s3s4());
    assert!(!support_dominated(&s.pow(3).unwrap(), &s).unwrap());
}

#[test]
fn depth_tests() {
    assert!(!is_depth_n(&s2s3(), 2).unwrap().holds);
    assert!(is_depth_n(&s2s3(), 3).unwrap().holds);
    let t = s3s4();
    assert!(!is_depth_n(&t, 3).unwrap().holds);
    assert!(!is_depth_n(&t, 4).unwrap().holds);
    assert!(is_depth_n(&t, 5).unwrap().holds);
    assert!(!is_depth_n(&s4s5(), 3).unwrap().holds);
}

#[test]
fn minimal_depths() {
    for (mat, d) in [(s2s3(), 3), (s3s4(), 5), (s4s5(), 7), (inc("S4", "D4"), 4)] {
        let r = minimal_depth(&mat, 24).unwrap();
        assert_eq!(r.minimal_depth, Some(d));
        assert_eq!(r.failures.len() as u32, d - 2);
        assert!(r.verify(&mat).unwrap());
    }
    let r = minimal_depth(&inc("S4", "D4"), 24).unwrap();
    let w = r.witness.unwrap();
    assert_eq!(w.inequality, "S^2 M <= q S M");
    assert_eq!(w.multiplier, Some(BigUint::from(4u8)));
    let r = minimal_depth(&s4s5(), 5).unwrap();
    assert!(r.exceeds_cap());
    assert_eq!(r.to_json()["minimal_depth"], serde_json::Value::Null);
}

#[test]
fn positive_powers() {
    assert_eq!(
        strictly_positive_power(&s_matrix(&s2s3()), 10).unwrap(),
        Some(1)
    );
    assert_eq!(
        strictly_positive_power(&s_matrix(&s3s4()), 10).unwrap(),
        Some(2)
    );
    assert_eq!(
        strictly_positive_power(&s_matrix(&s4s5()), 10).unwrap(),
        Some(3)
    );
    assert_eq!(
        strictly_positive_power(&s_matrix(&inc("S4", "D4")), 10).unwrap(),
        None
    );
    assert!(strictly_positive_power(&s2s3(), 3).is_err());
}

#[test]
fn towers() {
    let s4 = parse_group("S4").unwrap();
    let v4 = parse_subgroup(&s4, "V4").unwrap();
    let c2 = parse_subgroup(&v4, "(1 2)(3 4)").unwrap();
    let s3 = parse_subgroup(&s4, "S3").unwrap();
    let c2b = parse_subgroup(&s3, "(1 2)").unwrap();
    let m_v = inclusion_matrix(&s4, &v4).unwrap().into_entries();
    let n_v = inclusion_matrix(&v4, &c2).unwrap().into_entries();
    assert!(tower_is_d3(&n_v, &m_v).unwrap().holds);
    let m_s = inclusion_matrix(&s4, &s3).unwrap().into_entries();
    let n_s = inclusion_matrix(&s3, &c2b).unwrap().into_entries();
    assert!(!tower_is_d3(&n_s, &m_s).unwrap().holds);
    assert!(tower_is_d3(&m_s, &n_s).is_err());
}

#[test]
fn bratteli() {
    let labels = |p: &str, n: usize| (1..=n).map(|i| format!("{p}{i}")).collect::<Vec<_>>();
    let dot = bratteli_dot(&s2s3(), &labels("ψ", 2), &labels("χ", 3)).unwrap();
    assert_eq!(dot.matches(" -- ").count(), 4);
    assert_eq!(dot.matches("[label=").count(), 5);
    let id = bratteli_dot(
        &NonNegIntMatrix::identity(3),
        &labels("a", 3),
        &labels("b", 3),
    )
    .unwrap();
    for i in 0..3 {
        assert!(id.contains(&format!("r{i} -- c{i};")));
    }
    assert_eq!(id.matches(" -- ").count(), 3);
    assert_eq!(
        dot,
        bratteli_dot(&s2s3(), &labels("ψ", 2), &labels("χ", 3)).unwrap()
    );
}

fn nonneg_matrix() -> impl Strategy<Value = NonNegIntMatrix> {
    (1usize..5, 1usize..5).prop_flat_map(|(r, c)| {
        proptest::collection::vec(prop_oneof![3 => Just(0u64), 2 => 1u64..4], r * c).prop_map(
            move |v| {
                NonNegIntMatrix::new(r, c, v.into_iter().map(BigUint::from).collect()).unwrap()
            },
        )
    })
}

proptest! {
    #[test]
    fn depth_is_monotone(mat in nonneg_matrix()) {
        let mut e = DepthEngine::new(&mat);
        for d in 2..=12 {
            if e.is_depth_n(d).unwrap().holds {
                prop_assert!(e.is_depth_n(d + 1).unwrap().holds, "depth {} but not {}", d, d + 1);
            }
        }
    }

    #[test]
    fn identity_tower_is_depth_two(mat in nonneg_matrix()) {
        let id = NonNegIntMatrix::identity(mat.rows());
        prop_assert_eq!(tower_is_d3(&id, &mat).unwrap().holds, is_depth_n(&mat, 2).unwrap().holds);
    }

    #[test]
    fn positive_power_gives_odd_depth(mat in nonneg_matrix()) {
        if let Some(k) = strictly_positive_power(&s_matrix(&mat), 8).unwrap() {
            prop_assert!(is_depth_n(&mat, 2 * k + 1).unwrap().holds);
        }
    }

    #[test]
    fn reports_verify(mat in nonneg_matrix()) {
        let r = minimal_depth(&mat, 12).unwrap();
        prop_assert!(r.verify(&mat).unwrap());
    }
}
