use picard_ck::curves::elliptic::catalog_points;
use picard_ck::curves::{ec_add, ec_mul, h_p1, psplit_sym, psplit_tensor, psplit_wedge, EllipticPoint, PSplit};
use proptest::prelude::*;

/// Points with exact Q(i) coordinates: small combinations of catalog points.
fn point() -> impl Strategy<Value = EllipticPoint> {
    let n = catalog_points().len();
    (0..n, -4i64..=4, 0..n, -4i64..=4).prop_map(|(i, a, j, b)| {
        let cat = catalog_points();
        ec_add(&ec_mul(a, &cat[i]), &ec_mul(b, &cat[j]))
    })
}

fn binom(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn split() -> impl Strategy<Value = PSplit> {
    prop::collection::vec(-5i64..=5, 1..=4).prop_map(PSplit::new)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn group_law(p in point(), q in point(), r in point()) {
        prop_assert!(p.is_on_curve());
        prop_assert_eq!(ec_add(&p, &q), ec_add(&q, &p));
        prop_assert_eq!(ec_add(&ec_add(&p, &q), &r), ec_add(&p, &ec_add(&q, &r)));
        prop_assert_eq!(ec_add(&p, &p.neg()), EllipticPoint::Infinity);
    }

    #[test]
    fn multiplication_is_additive(p in point(), m in -8i64..=8, n in -8i64..=8) {
        prop_assert_eq!(ec_mul(m + n, &p), ec_add(&ec_mul(m, &p), &ec_mul(n, &p)));
    }

    #[test]
    fn serre_duality_on_p1(n in -60i64..=60) {
        prop_assert_eq!(h_p1(n).h1, h_p1(-2 - n).h0);
    }

    #[test]
    fn sym_and_wedge_ranks(s in split(), k in 0usize..=4) {
        prop_assert_eq!(psplit_sym(&s, k).rank(), binom(s.rank() + k - 1, k));
        prop_assert_eq!(psplit_wedge(&s, k).rank(), if k <= s.rank() { binom(s.rank(), k) } else { 0 });
    }

    #[test]
    fn euler_characteristic_of_tensor(a in split(), b in split()) {
        let t = psplit_tensor(&a, &b);
        let (ra, rb) = (a.rank() as i64, b.rank() as i64);
        prop_assert_eq!(t.cohomology().euler(), a.degree() * rb + b.degree() * ra + ra * rb);
    }
}
