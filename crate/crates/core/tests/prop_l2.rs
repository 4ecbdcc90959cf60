use picard_ck::l2::{
    l2_subcomplex, sym_local, theta_stable, verify_weight_filtration, weight_filtration, Divisor, L2Error,
};
use picard_ck::linalg::{q, QMat};
use proptest::prelude::*;

/// Strictly lower-triangular integer matrix conjugated by a unipotent upper
/// triangular one.
fn nilpotent() -> impl Strategy<Value = QMat> {
    (2usize..=6).prop_flat_map(|d| {
        (prop::collection::vec(-2i64..=2, d * d), prop::collection::vec(-2i64..=2, d * d)).prop_map(move |(l, u)| {
            let mut n = QMat::zeros(d, d);
            let mut p = QMat::identity(d);
            for i in 0..d {
                for j in 0..d {
                    if i > j {
                        n.set(i, j, q(l[i * d + j]));
                    }
                    if i < j {
                        p.set(i, j, q(u[i * d + j]));
                    }
                }
            }
            let cols: Vec<_> = (0..d).map(|j| p.solve(&picard_ck::linalg::unit_vec(d, j)).unwrap()).collect();
            let pinv = QMat::from_columns(d, &cols);
            &(&p * &n) * &pinv
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn weight_filtration_invariants(n in nilpotent()) {
        let wf = weight_filtration(&n).unwrap();
        prop_assert!(verify_weight_filtration(&n, &wf));
        let total: usize = wf.graded.values().map(Vec::len).sum();
        prop_assert_eq!(total, n.rows());
        for (&k, v) in &wf.graded {
            prop_assert_eq!(v.len(), wf.gr_dim(-k));
        }
    }

    #[test]
    fn bounds_at_least_two_are_stable(n in 1usize..=3, nc in any::<bool>(), bound in 2u32..=5) {
        let div = if nc { Divisor::NormalCrossing } else { Divisor::Smooth };
        let m = sym_local(n, div).unwrap();
        let c = l2_subcomplex(&m, bound).unwrap();
        prop_assert!(c.iter().all(|x| x.is_z_stable()));
        prop_assert!(theta_stable(&m, &c, bound).unwrap());
    }
}

#[test]
fn non_nilpotent_rejected() {
    let mut m = QMat::zeros(3, 3);
    m.set(0, 0, q(1));
    assert_eq!(weight_filtration(&m).unwrap_err(), L2Error::NotNilpotent);
}

#[test]
fn sym_weights_are_sums() {
    // E has N1-weights {1, 0, -1}; the weights on SⁿE are sums over n-multisets.
    for n in 1..=5 {
        let m = sym_local(n, Divisor::Smooth).unwrap();
        let wf = weight_filtration(&m.n[0]).unwrap();
        let mut got: Vec<i64> = wf.graded.iter().flat_map(|(&k, v)| std::iter::repeat(k).take(v.len())).collect();
        got.sort();
        let mut want = Vec::new();
        for a in 0..=n {
            for b in 0..=(n - a) {
                want.push(a as i64 - (n - a - b) as i64);
            }
        }
        want.sort();
        assert_eq!(got, want, "n = {n}");
    }
}
