use picard_ck::linalg::QMat;
use picard_ck::motive::{
    component_dims, kunneth_projectors, omega_h1, poincare_pairing_rank, GradedEndo, ProjectorSet, H1_DIM, TOP,
};
use proptest::prelude::*;

fn h1_matrix() -> impl Strategy<Value = QMat> {
    prop::collection::vec(-2i64..=2, H1_DIM * H1_DIM).prop_map(|v| {
        let rows: Vec<Vec<i64>> = v.chunks(H1_DIM).map(|c| c.to_vec()).collect();
        QMat::from_i64(&rows)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn pullback_is_multiplicative(a in h1_matrix(), b in h1_matrix()) {
        prop_assert_eq!(GradedEndo::pullback(&(&a * &b)), GradedEndo::pullback(&a).compose(&GradedEndo::pullback(&b)));
    }

    #[test]
    fn omega_commutes_with_multiplication(n in -6i64..=6) {
        let w = GradedEndo::pullback(&omega_h1());
        let m = GradedEndo::mult_by(n);
        prop_assert_eq!(w.compose(&m), m.compose(&w));
    }

    #[test]
    fn projectors_do_not_depend_on_n(n in 2i64..=7) {
        let p = kunneth_projectors(n).unwrap();
        prop_assert_eq!(&p, &ProjectorSet::by_degree());
        let total: usize = p.ranks().iter().sum();
        prop_assert_eq!(total, 64);
    }
}

#[test]
fn projectors_for_two_three_five() {
    let p2 = kunneth_projectors(2).unwrap();
    assert_eq!(p2, kunneth_projectors(3).unwrap());
    assert_eq!(p2, kunneth_projectors(5).unwrap());
    for (i, p) in p2.projectors.iter().enumerate() {
        for j in 0..=TOP {
            let want = if i == j { QMat::identity(component_dims()[j]) } else { QMat::zeros(component_dims()[j], component_dims()[j]) };
            assert_eq!(p.blocks[j], want);
        }
    }
}

#[test]
fn pairing_is_perfect() {
    for i in 0..=TOP {
        assert_eq!(poincare_pairing_rank(i).unwrap(), component_dims()[i]);
    }
}
