//! The fixed check lists, one function per suite.

use serde_json::{json, Value};

use crate::curves::axioms::{BOGOMOLOV_SOMMESE, LI_SCHWERMER, MIYAOKA_S2, NEF_BIG_DUAL};
use crate::curves::{ec_mul, twisted_omega1_chase, AxiomRegistry, EllipticPoint};
use crate::higgs::{build_complex, l2_refine, reduce, reduce_all_orders, HComplex, HiggsBundle, HiggsError, Verdict};
use crate::l2::{
    closed_form, l2_subcomplex, module_equal, sym_local, theta_stable, verify_weight_filtration, weight_filtration,
    Divisor, L2Error, LocalModel,
};
use crate::lattice::{
    canonical_plus_boundary, class_by_label, cube_root_class, divide, graph_class, intersect, strict_transform_catalog,
    verify_relation, EisensteinInt, LatticeError,
};
use crate::motive::{
    cm_splitting, component_dims, invariant_dims, kunneth_projectors, poincare_pairing_rank, verify_projector_axioms,
    MotiveError, TOP,
};
use crate::tensor::{decompose_lambda_k, decompose_product, schur_dim, trivial_summand_count, Partition, TensorError};

use super::report::{Check, Status};
use super::scenario::{Scenario, Suite, VerifyError};

/// Everything a suite reads. Immutable, so suites can run concurrently.
#[derive(Clone, Debug)]
pub struct Context {
    pub registry: AxiomRegistry,
    pub truncation_bound: u32,
}

impl Context {
    pub fn from_scenario(s: &Scenario) -> Result<Self, VerifyError> {
        Ok(Context { registry: s.registry()?, truncation_bound: s.truncation_bound })
    }
}

impl Default for Context {
    fn default() -> Self {
        Context { registry: AxiomRegistry::default(), truncation_bound: super::DEFAULT_TRUNCATION }
    }
}

pub fn run_suite(ctx: &Context, suite: Suite) -> Vec<Check> {
    match suite {
        Suite::Lattice => lattice(),
        Suite::Curves => curves(ctx),
        Suite::Tensor => tensor(),
        Suite::Higgs => higgs(ctx),
        Suite::L2 => l2(ctx),
        Suite::Motives => motives(),
    }
}

fn check(suite: Suite, id: &str, status: Status, witness: Value, axioms: Vec<String>, citation: &str) -> Check {
    Check { id: id.to_string(), suite, status, witness, axioms_used: axioms, citation: citation.to_string() }
}

fn pass_if(ok: bool) -> Status {
    if ok {
        Status::Pass
    } else {
        Status::Fail
    }
}

/// Turns an error inside a check into a failed check.
fn guarded<E: std::fmt::Display>(
    suite: Suite,
    id: &str,
    citation: &str,
    body: impl FnOnce() -> Result<(Status, Value, Vec<String>), E>,
) -> Check {
    match body() {
        Ok((status, witness, axioms)) => check(suite, id, status, witness, axioms, citation),
        Err(e) => check(suite, id, Status::Fail, json!({ "error": e.to_string() }), Vec::new(), citation),
    }
}

fn label(l: &str) -> Result<crate::lattice::DivisorClass, LatticeError> {
    class_by_label(l).ok_or(LatticeError::DegenerateGram)
}

fn lattice() -> Vec<Check> {
    let s = Suite::Lattice;
    let mut out = Vec::new();
    out.push(guarded(s, "lattice.graph_relation", "T1 + Tw + Tw2 = 3A + 3B in NS(E x E), E with CM by Z[w]", || {
        let tw2 = graph_class(EisensteinInt::OMEGA_SQ)?;
        let lhs = label("T1")?.plus(&label("Tw")?).plus(&tw2);
        let rhs = label("A")?.scaled(3).plus(&label("B")?.scaled(3));
        let holds = verify_relation(&lhs, &rhs)?;
        let ok = holds && tw2.coeffs == vec![-1, -1, 3, 3];
        Ok::<_, LatticeError>((
            pass_if(ok),
            json!({ "graph_w2": tw2.coeffs, "lhs": lhs.coeffs, "rhs": rhs.coeffs, "relation_holds": holds }),
            vec![],
        ))
    }));
    out.push(guarded(s, "lattice.divisibility", "K + D = 3L with L = s*(0xE) - Z + 2 s*(Ex0), and L = D0 + D5 + D6", || {
        let kd = canonical_plus_boundary();
        let third = divide(&kd, 3)?;
        let l = cube_root_class();
        let cat = strict_transform_catalog();
        let residual = l.minus(&cat["D0"].plus(&cat["D5"]).plus(&cat["D6"]));
        let ok = third.as_ref() == Some(&l) && residual.is_zero();
        Ok::<_, LatticeError>((
            pass_if(ok),
            json!({
                "k_plus_d": kd.coeffs,
                "quotient": third.map(|c| c.coeffs),
                "l": l.coeffs,
                "l_minus_d0_d5_d6": residual.coeffs,
            }),
            vec![],
        ))
    }));
    out.push(guarded(s, "lattice.positivity", "L^2 = 1, L.Zi = 1, L.Di = 0 and Di.Dj = 0 for the boundary curves", || {
        let l = cube_root_class();
        let cat = strict_transform_catalog();
        let l2 = intersect(&l, &l)?;
        let mut lz = Vec::new();
        for z in ["Z1", "Z2", "Z3"] {
            lz.push(intersect(&l, &label(z)?)?);
        }
        let ds = ["D1", "D2", "D3", "D4", "D5", "D6"];
        let mut ld = Vec::new();
        let mut off_diag = Vec::new();
        for (i, a) in ds.iter().enumerate() {
            ld.push(intersect(&l, &cat[a])?);
            for b in &ds[i + 1..] {
                off_diag.push(intersect(&cat[a], &cat[b])?);
            }
        }
        let ok = l2 == 1 && lz.iter().all(|&x| x == 1) && ld.iter().all(|&x| x == 0) && off_diag.iter().all(|&x| x == 0);
        Ok::<_, LatticeError>((
            pass_if(ok),
            json!({ "l_squared": l2, "l_dot_z": lz, "l_dot_d": ld, "d_i_dot_d_j": off_diag }),
            vec![],
        ))
    }));
    out
}

fn curves(ctx: &Context) -> Vec<Check> {
    let s = Suite::Curves;
    let mut out = Vec::new();
    let q1 = ec_mul(3, &EllipticPoint::q1());
    let q2 = ec_mul(3, &EllipticPoint::q2());
    out.push(check(
        s,
        "curves.torsion",
        pass_if(q1 == EllipticPoint::Infinity && q2 == EllipticPoint::Infinity),
        json!({
            "three_times_q1": q1.to_string(),
            "three_times_q2": q2.to_string(),
            "q1_plus_q1": crate::curves::ec_add(&EllipticPoint::q1(), &EllipticPoint::q1()).to_string(),
        }),
        vec![],
        "(0, i) and (0, -i) are 3-torsion points of y^2 = x^3 - 1 over Q(i)",
    ));
    out.push(guarded(s, "curves.chase_e", "Omega1_Z (x) W|Z (x) L^-1 = O(-2) + O(-1) on each exceptional curve", || {
        let c = twisted_omega1_chase(1, -1, "W*L^-1", &ctx.registry)?;
        let ok = c.quotient_split.degrees() == [-2, -1] && c.quotient_h0_per_component == 0 && c.bound == 0;
        Ok::<_, crate::curves::ChaseError>((pass_if(ok), json!(c), c.axioms_used.clone()))
    }));
    out.push(guarded(
        s,
        "curves.chase_s2",
        "S^2 twist on each exceptional curve splits as O(-2) + O(-1) + O, one section per component",
        || {
            let c = twisted_omega1_chase(2, -2, "S2W*L^-2", &ctx.registry)?;
            let ok = c.quotient_split.degrees() == [-2, -1, 0] && c.quotient_h0_per_component == 1 && c.bound == 3;
            let status = if ok { Status::Bounded } else { Status::Fail };
            Ok::<_, crate::curves::ChaseError>((status, json!(c), c.axioms_used.clone()))
        },
    ));
    out
}

fn tensor() -> Vec<Check> {
    let s = Suite::Tensor;
    let mut out = Vec::new();
    out.push(guarded(s, "tensor.plethysm", "S^2 W (x) W = S^3 W + W (x) Lambda^2 W for rank 2", || {
        let e = decompose_product(&Partition::row(2), &Partition::row(1), 2)?;
        let lhs = schur_dim(&Partition::row(2), 2)? * schur_dim(&Partition::row(1), 2)?;
        let ok = e.to_string() == "(3) + (2,1)" && lhs == 6 && e.dim()? == 6;
        Ok::<_, TensorError>((pass_if(ok), json!({ "decomposition": e.to_string(), "dim": e.dim()?, "product_dim": lhs }), vec![]))
    }));
    out.push(guarded(s, "tensor.lambda_k", "Lambda^k(V1 + V2) decomposition and its invariant parts, k = 0..6", || {
        let mut dims = Vec::new();
        let mut triv = Vec::new();
        let mut exprs = Vec::new();
        for k in 0..=6 {
            let e = decompose_lambda_k(k)?;
            dims.push(e.dim());
            exprs.push(e.to_string());
            triv.push(trivial_summand_count(k)?);
        }
        let ok = dims == [1, 6, 15, 20, 15, 6, 1] && dims.iter().sum::<u64>() == 64 && triv == [1, 0, 1, 2, 1, 0, 1];
        Ok::<_, TensorError>((pass_if(ok), json!({ "dims": dims, "trivial_counts": triv, "decompositions": exprs }), vec![]))
    }));
    out
}

fn complex_witness(c: &HComplex) -> Value {
    json!({ "monomials": c.monomial_lists(), "expanded": c.expanded_lists(), "reduced": c.is_reduced() })
}

fn reduce_check(s: Suite, id: &str, citation: &str, h: Result<HiggsBundle, HiggsError>, want: [&[&str]; 3]) -> Check {
    guarded(s, id, citation, || {
        let built = build_complex(&h?)?;
        let r = reduce(&built)?;
        let want: [Vec<String>; 3] = want.map(|l| l.iter().map(|x| x.to_string()).collect());
        let ok = r.is_reduced() && r.monomial_lists() == want && r.euler() == built.euler();
        Ok::<_, HiggsError>((
            pass_if(ok),
            json!({ "built_ranks": built.ranks(), "reduced": complex_witness(&r), "euler": r.euler() }),
            vec![],
        ))
    })
}

fn ids(v: impl IntoIterator<Item = String>) -> Vec<String> {
    v.into_iter().collect()
}

fn higgs(ctx: &Context) -> Vec<Check> {
    let s = Suite::Higgs;
    let e = HiggsBundle::uniformizing();
    let mut out = Vec::new();
    let ranks: Vec<u64> = e.hodge_ranks().into_iter().map(|(_, r)| r).collect();
    let iso = e.theta_is_iso((1, 0), (0, 1));
    let dead = e.theta_block_rank((0, 1), (-1, 2)).2 == 0;
    out.push(check(
        s,
        "higgs.uniformizing",
        pass_if(ranks == [2, 1] && iso && dead && e.fiber.theta_squared_zero()),
        json!({ "hodge_ranks": ranks, "theta_iso_on_e10": iso, "theta_zero_on_e01": dead }),
        vec![],
        "E = (W (x) L^-1) + L^-1 with theta the identity on E^{1,0} and zero on E^{0,1}",
    ));
    out.push(reduce_check(
        s,
        "higgs.reduce_e",
        "Higgs complex of E is quasi-isomorphic to L^-1 -> S^2 W (x) L^-1 -> W (x) Lambda^2 W (x) L^-1 with zero maps",
        Ok(e.clone()),
        [&["L^-1"], &["S2W*L^-1"], &["W*L^2"]],
    ));
    out.push(reduce_check(
        s,
        "higgs.reduce_s2",
        "Higgs complex of S^2 E reduces to L^-2 -> S^3 W (x) L^-2 -> S^2 W (x) L^-2 (x) Lambda^2 W",
        e.sym_power(2),
        [&["L^-2"], &["S3W*L^-2"], &["S2W*L^1"]],
    ));
    out.push(guarded(s, "higgs.confluence", "contraction order does not change the surviving monomials", || {
        let mut per = Vec::new();
        let mut ok = true;
        for h in [e.clone(), e.sym_power(2)?, e.end0()] {
            let outcomes = reduce_all_orders(&build_complex(&h)?)?;
            ok &= outcomes.len() == 1;
            per.push(json!({ "bundle": h.label, "outcomes": outcomes.len() }));
        }
        Ok::<_, HiggsError>((pass_if(ok), Value::Array(per), vec![]))
    }));
    out.push(guarded(s, "higgs.vanishing_e", "H^1 of the L2 Higgs complex of V1 vanishes", || {
        let r = l2_refine(&reduce(&build_complex(&e)?)?, &ctx.registry)?;
        let used_ok = r.axioms_used.contains(NEF_BIG_DUAL) && r.axioms_used.contains(BOGOMOLOV_SOMMESE);
        Ok::<_, HiggsError>((pass_if(r.verdict == Verdict::Vanishes && used_ok), json!(r), ids(r.axioms_used.clone())))
    }));
    out.push(guarded(
        s,
        "higgs.obstruction_s2",
        "h^1 of the L2 complex of S^2 V1 is at most 3; whether the three sections lift is undecided",
        || {
            let r = l2_refine(&reduce(&build_complex(&e.sym_power(2)?)?)?, &ctx.registry)?;
            let split_ok = r.certificates.len() == 1
                && r.certificates[0].quotient_split.degrees() == [-2, -1, 0]
                && r.certificates[0].quotient_h0_per_component == 1;
            let status = if r.verdict == Verdict::BoundedBy(3) && split_ok && r.axioms_used.contains(MIYAOKA_S2) {
                Status::Bounded
            } else {
                Status::Fail
            };
            Ok::<_, HiggsError>((status, json!(r), ids(r.axioms_used.clone())))
        },
    ));
    out.push(guarded(
        s,
        "higgs.end0_propagation",
        "IH^1(End0 V1) = 0 forces h^0_L2(S^3 W(-D) (x) L^-3) = 0 via the degree-1 summand",
        || {
            let r = l2_refine(&reduce(&build_complex(&e.end0())?)?, &ctx.registry)?;
            let located = r.located.iter().any(|l| l.degree == 1 && l.monomial == "S3W*L^-3");
            let ok = r.verdict == Verdict::Vanishes && located && r.axioms_used.contains(LI_SCHWERMER);
            Ok::<_, HiggsError>((pass_if(ok), json!(r), ids(r.axioms_used.clone())))
        },
    ));
    out
}

fn gr_witness(m: &LocalModel) -> Result<(bool, Value), L2Error> {
    let wf = weight_filtration(&m.n[0])?;
    let valid = verify_weight_filtration(&m.n[0], &wf);
    let rows: Vec<Value> =
        wf.display(&m.names).into_iter().map(|(k, b)| json!({ "weight": k, "basis": b })).collect();
    Ok((valid, Value::Array(rows)))
}

fn gr_matches(w: &Value, want: &[(i64, &[&str])]) -> bool {
    let want: Vec<Value> = want.iter().map(|(k, b)| json!({ "weight": k, "basis": b })).collect();
    *w == Value::Array(want)
}

fn require_bound(bound: u32) -> Result<(), L2Error> {
    if bound < 2 {
        Err(L2Error::TruncationTooSmall(bound))
    } else {
        Ok(())
    }
}

fn l2(ctx: &Context) -> Vec<Check> {
    let s = Suite::L2;
    let bound = ctx.truncation_bound;
    let mut out = Vec::new();
    out.push(guarded(s, "l2.weight_e", "Gr W(N1) on E: Gr1 = <v1>, Gr0 = <v2>, Gr-1 = <v>", || {
        let (valid, w) = gr_witness(&sym_local(1, Divisor::Smooth)?)?;
        let ok = valid && gr_matches(&w, &[(1, &["v1"]), (0, &["v2"]), (-1, &["v"])]);
        Ok::<_, L2Error>((pass_if(ok), w, vec![]))
    }));
    out.push(guarded(s, "l2.weight_s2", "Gr W(N1) on S^2 E, N1 of index 3", || {
        let (valid, w) = gr_witness(&sym_local(2, Divisor::Smooth)?)?;
        let ok = valid
            && gr_matches(
                &w,
                &[
                    (2, &["v1⊙v1"]),
                    (1, &["v1⊙v2"]),
                    (0, &["v1⊙v", "v2⊙v2"]),
                    (-1, &["v2⊙v"]),
                    (-2, &["v⊙v"]),
                ],
            );
        Ok::<_, L2Error>((pass_if(ok), w, vec![]))
    }));
    out.push(guarded(s, "l2.closed_forms", "weight rule reproduces the published L2 subcomplexes of E (both divisors) and S^2 E", || {
        require_bound(bound)?;
        let mut rows = Vec::new();
        let mut ok = true;
        for (n, div) in [(1, Divisor::Smooth), (1, Divisor::NormalCrossing), (2, Divisor::Smooth)] {
            let m = sym_local(n, div)?;
            let rule = l2_subcomplex(&m, bound)?;
            for (deg, module) in rule.iter().enumerate() {
                let eq = module_equal(module, &closed_form(&m, deg, bound)?, bound);
                ok &= eq;
                rows.push(json!({
                    "model": m.label(),
                    "degree": deg,
                    "equal": eq,
                    "generators": module.rows(&m.names, div),
                }));
            }
        }
        Ok::<_, L2Error>((pass_if(ok), Value::Array(rows), vec![]))
    }));
    out.push(guarded(s, "l2.theta_stable", "theta maps each L2 module into the next, for E, S^2 E and S^3 E", || {
        let mut rows = Vec::new();
        let mut ok = true;
        for n in 1..=3 {
            for div in [Divisor::Smooth, Divisor::NormalCrossing] {
                let m = sym_local(n, div)?;
                let c = l2_subcomplex(&m, bound)?;
                let stable = theta_stable(&m, &c, bound)?;
                let z_stable = c.iter().all(|x| x.is_z_stable());
                ok &= stable && z_stable;
                let published = crate::l2::ClosedForm::of(&m).is_some();
                rows.push(json!({
                    "model": m.label(),
                    "theta_stable": stable,
                    "z_stable": z_stable,
                    "source": if published { "published" } else { "rule-generated, unpublished" },
                }));
            }
        }
        Ok::<_, L2Error>((pass_if(ok), Value::Array(rows), vec![]))
    }));
    out
}

fn motives() -> Vec<Check> {
    let s = Suite::Motives;
    let mut out = Vec::new();
    out.push(guarded(s, "motives.projectors", "Kunneth projectors are orthogonal idempotents with [n]* Pi_i = n^i Pi_i", || {
        let p2 = kunneth_projectors(2)?;
        let p3 = kunneth_projectors(3)?;
        let axioms = verify_projector_axioms(&p2);
        let same = p2 == p3;
        let ranks = p2.ranks();
        let ok = axioms && same && ranks == component_dims();
        Ok::<_, MotiveError>((pass_if(ok), json!({ "axioms_hold": axioms, "n2_equals_n3": same, "ranks": ranks }), vec![]))
    }));
    out.push(guarded(s, "motives.pairing", "cup product H^i x H^{6-i} -> H^6 is perfect", || {
        let mut ranks = Vec::new();
        for i in 0..=TOP {
            ranks.push(poincare_pairing_rank(i)?);
        }
        let ok = ranks == component_dims();
        Ok::<_, MotiveError>((pass_if(ok), json!({ "ranks": ranks }), vec![]))
    }));
    out.push(guarded(s, "motives.cm_splitting", "w splits H^1 = V1 + V2 (3 + 3) and the induced eigenspaces match Lambda^k", || {
        let cm = cm_splitting()?;
        let ok = cm[1].eigen_dims == [0, 3, 3] && cm.iter().all(|c| c.agrees());
        Ok::<_, MotiveError>((pass_if(ok), json!(cm), vec![]))
    }));
    out.push(guarded(s, "motives.invariants", "monodromy invariants in H^{2j}: one-dimensional for j = 1, 2", || {
        let mut dims = Vec::new();
        for k in 0..=TOP {
            dims.push(invariant_dims(k)?);
        }
        let ok = dims == [1, 0, 1, 2, 1, 0, 1];
        Ok::<_, MotiveError>((pass_if(ok), json!({ "dims": dims }), vec![]))
    }));
    out
}
