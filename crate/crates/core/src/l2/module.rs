//! Local L² modules: per log-form part `(ε₁, ε₂)` and per bidegree `(a, b)`
//! of `z₁^a z₂^b`, the fiber subspace of allowed coefficients.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::linalg::{QVec, Subspace};

use super::model::{sym_local, sym_product, uniformizing_local, vector_name};
use super::{weight_filtration, Divisor, L2Error, LocalModel};

/// Truncation for comparisons; every generator in scope has degree ≤ 2.
pub const DEFAULT_BOUND: u32 = 3;

pub type Bidegree = (u32, u32);
pub type Form = (u8, u8);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalL2Module {
    pub degree: usize,
    pub dim: usize,
    pub bound: u32,
    pub parts: BTreeMap<Form, BTreeMap<Bidegree, Subspace>>,
}

/// One generator row: coefficient subspace new at this bidegree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ModuleRow {
    pub form: String,
    pub monomial: String,
    pub basis: Vec<String>,
}

pub fn forms_of_degree(i: usize) -> Vec<Form> {
    [(0, 0), (1, 0), (0, 1), (1, 1)].into_iter().filter(|(a, b)| (*a + *b) as usize == i).collect()
}

fn bidegrees(bound: u32) -> impl Iterator<Item = Bidegree> {
    (0..=bound).flat_map(move |a| (0..=bound).map(move |b| (a, b)))
}

fn form_name(f: Form, divisor: Divisor) -> String {
    let d2 = if divisor.is_log(1) { "dz2/z2" } else { "dz2" };
    match f {
        (0, 0) => "1".into(),
        (1, 0) => "dz1/z1".into(),
        (0, 1) => d2.into(),
        _ => format!("dz1/z1^{d2}"),
    }
}

fn monomial_name((a, b): Bidegree) -> String {
    let part = |v: &str, e: u32| match e {
        0 => String::new(),
        1 => v.to_string(),
        e => format!("{v}^{e}"),
    };
    let s = format!("{}{}", part("z1", a), part("z2", b));
    if s.is_empty() {
        "1".into()
    } else {
        s
    }
}

impl LocalL2Module {
    /// Module generated by `(form, monomial, subspace)` terms.
    pub fn from_generators(degree: usize, dim: usize, bound: u32, terms: &[(Form, Bidegree, Subspace)]) -> Self {
        let mut parts = BTreeMap::new();
        for f in forms_of_degree(degree) {
            let mut m = BTreeMap::new();
            for (a, b) in bidegrees(bound) {
                let mut s = Subspace::zero(dim);
                for (tf, (ta, tb), sub) in terms {
                    if *tf == f && *ta <= a && *tb <= b {
                        s = s.sum(sub);
                    }
                }
                m.insert((a, b), s);
            }
            parts.insert(f, m);
        }
        LocalL2Module { degree, dim, bound, parts }
    }

    pub fn part(&self, f: Form, bd: Bidegree) -> &Subspace {
        &self.parts[&f][&bd]
    }

    /// Multiplication by `z₁` and `z₂` stays inside the module.
    pub fn is_z_stable(&self) -> bool {
        self.parts.values().all(|m| {
            m.iter().all(|(&(a, b), s)| {
                (a == self.bound || s.is_subspace_of(&m[&(a + 1, b)]))
                    && (b == self.bound || s.is_subspace_of(&m[&(a, b + 1)]))
            })
        })
    }

    /// Rows at bidegrees where the coefficient space grows.
    pub fn rows(&self, names: &[String], divisor: Divisor) -> Vec<ModuleRow> {
        let mut out = Vec::new();
        for (&f, m) in &self.parts {
            for (&(a, b), s) in m {
                let mut below = Subspace::zero(self.dim);
                if a > 0 {
                    below = below.sum(&m[&(a - 1, b)]);
                }
                if b > 0 {
                    below = below.sum(&m[&(a, b - 1)]);
                }
                if s.dim() > below.dim() {
                    out.push(ModuleRow {
                        form: form_name(f, divisor),
                        monomial: monomial_name((a, b)),
                        basis: s.basis().iter().map(|v| vector_name(names, v)).collect(),
                    });
                }
            }
        }
        out
    }
}

/// The three modules of the L² subcomplex by the weight rule: the
/// coefficient of form part `ε` at `z₁^a z₂^b` is the intersection, over log
/// directions `i`, of the full fiber when `aᵢ ≥ 1` and of `W_{−2εᵢ}(Nᵢ)`
/// otherwise.
pub fn l2_subcomplex(model: &LocalModel, bound: u32) -> Result<[LocalL2Module; 3], L2Error> {
    let d = model.dim();
    let mut w = Vec::new();
    for i in 0..2 {
        let wf = weight_filtration(&model.n[i])?;
        w.push([wf.w(0), wf.w(-2)]);
    }
    let build = |degree: usize| {
        let mut parts = BTreeMap::new();
        for f in forms_of_degree(degree) {
            let eps = [f.0 as usize, f.1 as usize];
            let mut m = BTreeMap::new();
            for bd in bidegrees(bound) {
                let exps = [bd.0, bd.1];
                let mut s = Subspace::full(d);
                for i in 0..2 {
                    if model.divisor.is_log(i) && exps[i] == 0 {
                        s = s.intersect(&w[i][eps[i]]);
                    }
                }
                m.insert(bd, s);
            }
            parts.insert(f, m);
        }
        LocalL2Module { degree, dim: d, bound, parts }
    };
    Ok([build(0), build(1), build(2)])
}

/// Per-bidegree equality up to `bound`. Sound once `bound` is at least the
/// largest generator degree, which is 2 for everything in scope.
pub fn module_equal(a: &LocalL2Module, b: &LocalL2Module, bound: u32) -> bool {
    if a.degree != b.degree || a.dim != b.dim {
        return false;
    }
    let top = bound.min(a.bound).min(b.bound);
    forms_of_degree(a.degree).into_iter().all(|f| {
        bidegrees(top).all(|bd| a.part(f, bd) == b.part(f, bd))
    })
}

/// `θ = N₁ dz₁/z₁ + N₂ dz₂(/z₂)` maps each module into the next, bidegree by
/// bidegree.
pub fn theta_stable(model: &LocalModel, modules: &[LocalL2Module; 3], bound: u32) -> Result<bool, L2Error> {
    if bound < 2 {
        return Err(L2Error::TruncationTooSmall(bound));
    }
    if !model.commute() {
        return Err(L2Error::NonCommuting);
    }
    for deg in 0..2 {
        let (src, tgt) = (&modules[deg], &modules[deg + 1]);
        for (&f, m) in &src.parts {
            for bd in bidegrees(bound.min(src.bound).min(tgt.bound)) {
                for k in 0..2 {
                    let raised = if k == 0 { (1, f.1) } else { (f.0, 1) };
                    if (k == 0 && f.0 == 1) || (k == 1 && f.1 == 1) {
                        continue;
                    }
                    let img = m[&bd].image(&model.n[k]);
                    if !img.is_subspace_of(tgt.part(raised, bd)) {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

/// Which closed forms exist.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ClosedForm {
    ESmooth,
    ENormalCrossing,
    S2Smooth,
}

impl ClosedForm {
    pub fn of(model: &LocalModel) -> Option<Self> {
        match (model.power, model.divisor) {
            (1, Divisor::Smooth) => Some(ClosedForm::ESmooth),
            (1, Divisor::NormalCrossing) => Some(ClosedForm::ENormalCrossing),
            (2, Divisor::Smooth) => Some(ClosedForm::S2Smooth),
            _ => None,
        }
    }
}

/// The published generator descriptions, e.g. `Ker N₁ + z₁E`.
pub fn closed_form(model: &LocalModel, degree: usize, bound: u32) -> Result<LocalL2Module, L2Error> {
    let which = ClosedForm::of(model).ok_or_else(|| L2Error::NoClosedForm(model.label()))?;
    let d = model.dim();
    let full = Subspace::full(d);
    let ker = |i: usize| Subspace::span(d, &model.n[i].nullspace());
    let terms: Vec<(Form, Bidegree, Subspace)> = match which {
        ClosedForm::ESmooth => match degree {
            0 => vec![((0, 0), (0, 0), ker(0)), ((0, 0), (1, 0), full)],
            1 => vec![((1, 0), (1, 0), full.clone()), ((0, 1), (0, 0), ker(0)), ((0, 1), (1, 0), full)],
            _ => vec![((1, 1), (1, 0), full)],
        },
        ClosedForm::ENormalCrossing => match degree {
            0 => vec![
                ((0, 0), (0, 0), ker(0).intersect(&ker(1))),
                ((0, 0), (0, 1), ker(0)),
                ((0, 0), (1, 0), ker(1)),
            ],
            1 => vec![
                ((1, 0), (1, 0), ker(1)),
                ((1, 0), (1, 1), ker(0)),
                ((0, 1), (0, 1), ker(0)),
                ((0, 1), (1, 1), ker(1)),
            ],
            _ => vec![((1, 1), (1, 1), full)],
        },
        ClosedForm::S2Smooth => {
            let e = uniformizing_local(model.divisor);
            let e_dim = e.dim();
            let e_basis: Vec<QVec> = (0..e_dim).map(|i| crate::linalg::unit_vec(e_dim, i)).collect();
            let im1 = Subspace::full(e_dim).image(&e.n[0]);
            let ker1 = Subspace::span(e_dim, &e.n[0].nullspace());
            let e = &e;
            let products = |xs: &[QVec], ys: &[QVec]| {
                let mut vs: Vec<QVec> = Vec::new();
                for x in xs {
                    for y in ys {
                        vs.push(sym_product(model, e, x, y));
                    }
                }
                Subspace::span(d, &vs)
            };
            let e_im = products(&e_basis, im1.basis());
            let s2_ker = products(ker1.basis(), ker1.basis());
            let s2_im = products(im1.basis(), im1.basis());
            let zero_level = e_im.sum(&s2_ker);
            match degree {
                0 => vec![((0, 0), (0, 0), zero_level), ((0, 0), (1, 0), full)],
                1 => vec![
                    ((1, 0), (0, 0), s2_im),
                    ((1, 0), (1, 0), full.clone()),
                    ((0, 1), (0, 0), zero_level),
                    ((0, 1), (1, 0), full),
                ],
                _ => vec![((1, 1), (0, 0), s2_im), ((1, 1), (1, 0), full)],
            }
        }
    };
    Ok(LocalL2Module::from_generators(degree, d, bound, &terms))
}

/// Convenience: the `SⁿE` model, its rule-generated subcomplex, and whether a
/// published closed form exists.
pub fn model_and_subcomplex(n: usize, divisor: Divisor, bound: u32) -> Result<(LocalModel, [LocalL2Module; 3]), L2Error> {
    let m = sym_local(n, divisor)?;
    let c = l2_subcomplex(&m, bound)?;
    Ok((m, c))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_all_published(n: usize, divisor: Divisor) {
        let m = sym_local(n, divisor).unwrap();
        let rule = l2_subcomplex(&m, DEFAULT_BOUND).unwrap();
        for deg in 0..3 {
            let cf = closed_form(&m, deg, DEFAULT_BOUND).unwrap();
            assert!(module_equal(&rule[deg], &cf, DEFAULT_BOUND), "{} degree {deg}", m.label());
        }
        assert!(theta_stable(&m, &rule, DEFAULT_BOUND).unwrap());
    }

    #[test]
    fn e_smooth_matches() {
        check_all_published(1, Divisor::Smooth);
    }

    #[test]
    fn e_normal_crossing_matches() {
        check_all_published(1, Divisor::NormalCrossing);
    }

    #[test]
    fn s2_smooth_matches() {
        check_all_published(2, Divisor::Smooth);
    }

    #[test]
    fn nc_omega1_extra_generator_is_redundant() {
        // z1z2·v1 lies in z1·Ker N2
        let m = uniformizing_local(Divisor::NormalCrossing);
        let ker2 = Subspace::span(3, &m.n[1].nullspace());
        assert!(ker2.contains(&crate::linalg::unit_vec(3, 0)));
        let rule = l2_subcomplex(&m, DEFAULT_BOUND).unwrap();
        let cf = closed_form(&m, 1, DEFAULT_BOUND).unwrap();
        assert_eq!(rule[1].part((1, 0), (1, 1)), &Subspace::full(3));
        assert!(module_equal(&rule[1], &cf, DEFAULT_BOUND));
    }

    #[test]
    fn enlarged_omega0_breaks_stability() {
        let m = uniformizing_local(Divisor::Smooth);
        let mut c = l2_subcomplex(&m, DEFAULT_BOUND).unwrap();
        c[0] = LocalL2Module::from_generators(0, 3, DEFAULT_BOUND, &[((0, 0), (0, 0), Subspace::full(3))]);
        assert!(!theta_stable(&m, &c, DEFAULT_BOUND).unwrap());
    }

    #[test]
    fn small_truncation_rejected() {
        let m = uniformizing_local(Divisor::Smooth);
        let c = l2_subcomplex(&m, DEFAULT_BOUND).unwrap();
        assert_eq!(theta_stable(&m, &c, 1).unwrap_err(), L2Error::TruncationTooSmall(1));
    }

    #[test]
    fn higher_powers_are_stable() {
        for div in [Divisor::Smooth, Divisor::NormalCrossing] {
            let m = sym_local(3, div).unwrap();
            let c = l2_subcomplex(&m, DEFAULT_BOUND).unwrap();
            assert!(c.iter().all(LocalL2Module::is_z_stable));
            assert!(theta_stable(&m, &c, DEFAULT_BOUND).unwrap());
        }
    }

    #[test]
    fn case1_rows() {
        let m = uniformizing_local(Divisor::Smooth);
        let c = l2_subcomplex(&m, DEFAULT_BOUND).unwrap();
        let rows = c[0].rows(&m.names, m.divisor);
        assert_eq!(rows[0], ModuleRow { form: "1".into(), monomial: "1".into(), basis: vec!["v2".into(), "v".into()] });
        assert_eq!(rows[1].monomial, "z1");
        assert_eq!(rows.len(), 2);
    }
}
