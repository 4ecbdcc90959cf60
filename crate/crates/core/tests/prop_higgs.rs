use std::collections::BTreeMap;

use picard_ck::higgs::monomial::normalize_all;
use picard_ck::higgs::{build_complex, reduce, BundleMonomial, EntryLabel, HComplex, HiggsBundle, HiggsFiber};
use picard_ck::linalg::{q, qfrac};
use proptest::prelude::*;

fn monomial() -> impl Strategy<Value = BundleMonomial> {
    (0u32..=5, -3i64..=3, -6i64..=6).prop_map(|(s, c, l)| BundleMonomial::new(s, c, l))
}

fn sample_complexes() -> Vec<HComplex> {
    let e = HiggsBundle::uniformizing();
    [e.clone(), e.sym_power(2).unwrap(), e.end0()].iter().map(|h| build_complex(h).unwrap()).collect()
}

/// Contracts legal iso entries, choosing among them by `picks`.
fn reduce_by(c: &HComplex, picks: &[usize]) -> (HComplex, [usize; 3]) {
    let mut cur = c.clone();
    let mut touched = [0; 3];
    let mut k = 0;
    loop {
        let mut legal = Vec::new();
        for deg in 0..2 {
            for (&(a, b), &l) in &cur.d[deg] {
                if l == EntryLabel::Iso && cur.contraction_is_legal(deg, a, b) {
                    legal.push((deg, a, b));
                }
            }
        }
        if legal.is_empty() {
            return (cur, touched);
        }
        let (deg, a, b) = legal[picks[k % picks.len()] % legal.len()];
        k += 1;
        touched[deg] += 1;
        touched[deg + 1] += 1;
        cur = cur.contract(deg, a, b).unwrap();
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn fold_commutes_with_tensor(a in monomial(), b in monomial()) {
        let lhs = normalize_all(&a.tensor(&b));
        let rhs = normalize_all(&a.normalize().tensor(&b.normalize()));
        prop_assert_eq!(lhs, rhs);
        let rank: u64 = a.tensor(&b).iter().map(|(m, n)| m.rank() * n).sum();
        prop_assert_eq!(rank, a.rank() * b.rank());
    }

    #[test]
    fn dual_is_involutive(a in monomial()) {
        prop_assert_eq!(a.dual().dual(), a);
        prop_assert!(a.tensor(&a.dual()).contains_key(&BundleMonomial::trivial()));
    }

    #[test]
    fn any_contraction_order_gives_the_same_model(which in 0usize..3, picks in prop::collection::vec(0usize..8, 1..8)) {
        let c = &sample_complexes()[which];
        let (r, touched) = reduce_by(c, &picks);
        prop_assert!(r.is_reduced());
        prop_assert_eq!(r.sorted_multiset(), reduce(c).unwrap().sorted_multiset());
        prop_assert_eq!(r.euler(), c.euler());
        for i in 0..3 {
            prop_assert_eq!(c.summand_counts()[i], r.summand_counts()[i] + touched[i]);
        }
    }

    #[test]
    fn rescaling_theta_keeps_the_model(num in 1i64..=9, den in 1i64..=9, neg in any::<bool>()) {
        let c = if neg { -qfrac(num, den) } else { qfrac(num, den) };
        let e = HiggsBundle::uniformizing();
        let mut f: HiggsFiber = e.fiber.clone();
        f.nx = f.nx.scale(&c);
        f.ny = f.ny.scale(&c);
        let scaled = HiggsBundle { label: e.label.clone(), fiber: f };
        prop_assert_ne!(c, q(0));
        prop_assert_eq!(
            reduce(&build_complex(&scaled).unwrap()).unwrap().monomial_lists(),
            reduce(&build_complex(&e).unwrap()).unwrap().monomial_lists()
        );
    }
}

#[test]
fn built_complexes_square_to_zero() {
    let e = HiggsBundle::uniformizing();
    let mut bundles: Vec<HiggsBundle> = (1..=4).map(|n| e.sym_power(n).unwrap()).collect();
    bundles.push(e.end0());
    bundles.push(e.without_field());
    for h in &bundles {
        assert!(h.fiber.theta_squared_zero(), "{}", h.label);
        assert!(h.fiber.strictly_decreases_hodge(), "{}", h.label);
        assert!(h.fiber.is_equivariant(), "{}", h.label);
        let c = build_complex(h).unwrap();
        assert!(c.label_square_zero(), "{}", h.label);
        let r = reduce(&c).unwrap();
        assert_eq!(r.euler(), c.euler());
    }
}

#[test]
fn sym_power_ranks() {
    let e = HiggsBundle::uniformizing();
    let s2 = e.sym_power(2).unwrap();
    let ranks: BTreeMap<_, _> = s2.hodge_ranks().into_iter().collect();
    assert_eq!(ranks[&(2, 0)], 3);
    assert_eq!(ranks[&(1, 1)], 2);
    assert_eq!(ranks[&(0, 2)], 1);
    assert_eq!(e.end0().rank(), 8);
}
