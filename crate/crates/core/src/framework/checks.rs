//! Checkers for the tower axioms: algebra and embedding validity with
//! coherence (conditions one and two), two-sided freeness over the embedded
//! product (condition three), orthonormality of the projective/simple
//! pairing, and the Mackey style compatibility of induction and restriction
//! (condition five), all reported cell by cell.

use super::algebra::ProductAlgebra;
use super::induce::{induce, restrict};
use super::module::{hom_dim, ModuleRep};
use super::tower::{
    check_degree, decompose_projectives_via_hom, expected_induced_dim, induce_pair, pair_morphism,
    restrict_pair, tensor_family, twisted_morphism, CosetReps, Decomposition, Tower,
};
use crate::error::Result;
use crate::hopf::report::{jint, jobj, jstr, Cell, Report};
use crate::hopf::BasisTag;
use crate::linalg::{RowReducer, SparseVec};
use crate::par::par_map;
use serde_json::Value;

/// Which Grothendieck group a sweep works in: classes of simples or of
/// projective indecomposables.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Group {
    G0,
    K0,
}

impl Group {
    pub fn name(self) -> &'static str {
        match self {
            Group::G0 => "G0",
            Group::K0 => "K0",
        }
    }
}

pub fn jdecomp(d: &Decomposition) -> Value {
    let mut map = serde_json::Map::new();
    for (tuple, mult) in d {
        let parts: Vec<String> = tuple.iter().map(|t| t.to_string()).collect();
        map.insert(parts.join(" (x) "), jint(*mult));
    }
    Value::Object(map)
}

fn decompose(tower: &dyn Tower, group: Group, module: &ModuleRep) -> Result<Decomposition> {
    match group {
        Group::G0 => tower.decompose_simples(module),
        Group::K0 => decompose_projectives_via_hom(tower, module),
    }
}

/// Conditions one and two: validity of every algebra presentation, the base
/// field in degree zero, validity (unital, injective, multiplicative) of
/// every embedding, and associativity of the embedding system.
pub fn check_conditions12(tower: &dyn Tower, max_degree: usize) -> Result<Report> {
    check_degree(tower, max_degree, false)?;
    let mut report = Report::new(jobj(vec![
        ("check", jstr("conditions_1_2")),
        ("tower", jstr(tower.name())),
        ("max_degree", jint(max_degree as i64)),
    ]));

    report.push(Cell::new(
        jobj(vec![("property", jstr("base_field_degree_zero"))]),
        jint(tower.algebra(0)?.dim as i64),
        jint(1),
    ));

    for n in 0..=max_degree {
        let a = tower.algebra(n)?;
        let violations = a.validate();
        report.push(Cell::new(
            jobj(vec![
                ("property", jstr("algebra_presentation")),
                ("n", jint(n as i64)),
            ]),
            if violations.is_empty() {
                jstr("valid")
            } else {
                jstr(format!("invalid: {}", violations.join("; ")))
            },
            jstr("valid"),
        ));
    }

    for m in 0..=max_degree {
        for n in 0..=max_degree - m {
            let e = tower.embedding(m, n)?;
            let violations = e.validate();
            report.push(Cell::new(
                jobj(vec![
                    ("property", jstr("embedding")),
                    ("m", jint(m as i64)),
                    ("n", jint(n as i64)),
                ]),
                if violations.is_empty() {
                    jstr("valid")
                } else {
                    jstr(format!("invalid: {}", violations.join("; ")))
                },
                jstr("valid"),
            ));
        }
    }

    // Associativity of the embedding system on basis triples.
    for l in 0..=max_degree {
        for m in 0..=max_degree - l {
            for n in 0..=max_degree - l - m {
                let left_inner = tower.embedding(l, m)?;
                let left_outer = tower.embedding(l + m, n)?;
                let right_inner = tower.embedding(m, n)?;
                let right_outer = tower.embedding(l, m + n)?;
                let (dl, dm, dn) = (
                    tower.algebra(l)?.dim,
                    tower.algebra(m)?.dim,
                    tower.algebra(n)?.dim,
                );
                let mut mismatches = 0usize;
                let mut witness = String::from("none");
                for i in 0..dl {
                    for j in 0..dm {
                        let lm = left_inner.apply(
                            &left_inner
                                .source
                                .kron(&[&SparseVec::unit(i), &SparseVec::unit(j)]),
                        );
                        for k in 0..dn {
                            let path1 = left_outer
                                .apply(&left_outer.source.kron(&[&lm, &SparseVec::unit(k)]));
                            let mn = right_inner.apply(
                                &right_inner
                                    .source
                                    .kron(&[&SparseVec::unit(j), &SparseVec::unit(k)]),
                            );
                            let path2 = right_outer
                                .apply(&right_outer.source.kron(&[&SparseVec::unit(i), &mn]));
                            if path1 != path2 {
                                if mismatches == 0 {
                                    witness = format!("basis triple ({i},{j},{k})");
                                }
                                mismatches += 1;
                            }
                        }
                    }
                }
                report.push(Cell::with_verdict(
                    jobj(vec![
                        ("property", jstr("embedding_associativity")),
                        ("l", jint(l as i64)),
                        ("m", jint(m as i64)),
                        ("n", jint(n as i64)),
                    ]),
                    jstr(format!("mismatches={mismatches} witness={witness}")),
                    jstr("mismatches=0 witness=none"),
                    mismatches == 0,
                ));
            }
        }
    }
    Ok(report)
}

/// Condition three at desk scale: the listed coset representatives make
/// A_{m+n} free as a left and as a right module over the embedded product.
pub fn check_condition3(tower: &dyn Tower, max_degree: usize) -> Result<Report> {
    check_degree(tower, max_degree, false)?;
    let mut report = Report::new(jobj(vec![
        ("check", jstr("condition_3")),
        ("tower", jstr(tower.name())),
        ("max_degree", jint(max_degree as i64)),
    ]));
    for m in 0..=max_degree {
        for n in 0..=max_degree - m {
            let e = tower.embedding(m, n)?;
            let target = &e.target;
            let CosetReps { right, left } = tower.coset_reps(m, n)?;
            let sdim = e.source.dim();
            let expected = target.dim;

            for (side, reps) in [("right", &right), ("left", &left)] {
                let mut vectors = Vec::with_capacity(reps.len() * sdim);
                for x in reps.iter() {
                    for s in 0..sdim {
                        let img = e.column(s);
                        let v = if side == "right" {
                            target.mul(x, img)
                        } else {
                            target.mul(img, x)
                        };
                        vectors.push(v);
                    }
                }
                let mut red = RowReducer::new();
                for v in &vectors {
                    red.insert(v);
                }
                report.push(Cell::new(
                    jobj(vec![
                        ("property", jstr("free_basis")),
                        ("side", jstr(side)),
                        ("m", jint(m as i64)),
                        ("n", jint(n as i64)),
                    ]),
                    jstr(format!("count={} rank={}", vectors.len(), red.rank())),
                    jstr(format!("count={expected} rank={expected}")),
                ));
            }
        }
    }
    Ok(report)
}

/// Orthonormality of the pairing: dim Hom(P_i, C_j) = delta_{ij} degree by
/// degree.
pub fn check_pairing(tower: &dyn Tower, max_degree: usize) -> Result<Report> {
    check_degree(tower, max_degree, true)?;
    let mut report = Report::new(jobj(vec![
        ("check", jstr("pairing")),
        ("tower", jstr(tower.name())),
        ("max_degree", jint(max_degree as i64)),
    ]));
    for n in 0..=max_degree {
        let tags = tower.tags(n);
        let cells: Vec<Cell> = {
            let pairs: Vec<(BasisTag, BasisTag)> = tags
                .iter()
                .flat_map(|p| tags.iter().map(move |c| (p.clone(), c.clone())))
                .collect();
            par_map(pairs, |(p, c)| {
                let value = (|| -> Result<usize> {
                    let proj = tower.projective(&p)?;
                    let simple = tower.simple(&c)?;
                    hom_dim(&proj, &simple)
                })();
                let lhs = match value {
                    Ok(v) => jint(v as i64),
                    Err(e) => jstr(format!("error: {e}")),
                };
                Cell::new(
                    jobj(vec![
                        ("identity", jstr("hom_orthonormality")),
                        ("P", jstr(&p)),
                        ("C", jstr(&c)),
                        ("n", jint(n as i64)),
                    ]),
                    lhs,
                    jint(i64::from(p == c)),
                )
            })
        };
        for c in cells {
            report.push(c);
        }
    }
    Ok(report)
}

/// One compatibility cell: degrees (m, n), cut k, and a pair of family tags.
struct Cond5Cell {
    m: usize,
    n: usize,
    k: usize,
    mt: BasisTag,
    nt: BasisTag,
}

/// Condition five: for modules M over A_m and N over A_n, restricting the
/// induced module along rho_{k, m+n-k} decomposes the same way as the sum of
/// twisted inductions of the double restrictions of M and N.
pub fn check_condition5(tower: &dyn Tower, group: Group, max_degree: usize) -> Result<Report> {
    check_degree(tower, max_degree, true)?;
    let mut jobs = Vec::new();
    for m in 1..=max_degree.saturating_sub(1) {
        for n in 1..=max_degree - m {
            for k in 1..m + n {
                for mt in tower.tags(m) {
                    for nt in tower.tags(n) {
                        jobs.push(Cond5Cell {
                            m,
                            n,
                            k,
                            mt: mt.clone(),
                            nt,
                        });
                    }
                }
            }
        }
    }
    let cells = par_map(jobs, |job| condition5_cell(tower, group, &job));
    let mut report = Report::new(jobj(vec![
        ("check", jstr("condition_5")),
        ("tower", jstr(tower.name())),
        ("group", jstr(group.name())),
        ("max_degree", jint(max_degree as i64)),
    ]));
    for c in cells {
        report.push(c?);
    }
    Ok(report)
}

fn condition5_cell(tower: &dyn Tower, group: Group, job: &Cond5Cell) -> Result<Cell> {
    let Cond5Cell { m, n, k, mt, nt } = job;
    let (m, n, k) = (*m, *n, *k);
    let l = m + n - k;
    let projective = group == Group::K0;
    let fam_m = tensor_family(tower, std::slice::from_ref(mt), projective)?;
    let fam_n = tensor_family(tower, std::slice::from_ref(nt), projective)?;

    let w = ModuleRep::tensor(&fam_m, &fam_n);
    let ind = induce_pair(tower, m, n, &w)?;
    let res = restrict_pair(tower, k, l, &ind)?;
    let lhs = decompose(tower, group, &res)?;

    let mut rhs = Decomposition::new();
    let t_lo = k.saturating_sub(n);
    let t_hi = k.min(m);
    for t in t_lo..=t_hi {
        let s = k - t;
        let res_m = restrict(&pair_morphism(tower, t, m - t)?, &fam_m)?;
        let res_n = restrict(&pair_morphism(tower, s, n - s)?, &fam_n)?;
        let w4 = ModuleRep::tensor(&res_m, &res_n);
        let phi = twisted_morphism(tower, t, m - t, s, n - s)?;
        let expected = expected_induced_dim(phi.target.dim(), phi.source.dim(), w4.dim)?;
        let ind2 = induce(&phi, &w4, Some(expected))?;
        for (tuple, mult) in decompose(tower, group, &ind2)? {
            *rhs.entry(tuple).or_insert(0) += mult;
        }
    }
    rhs.retain(|_, v| *v != 0);

    Ok(Cell::new(
        jobj(vec![
            ("identity", jstr("mackey_compatibility")),
            ("m", jint(m as i64)),
            ("n", jint(n as i64)),
            ("k", jint(k as i64)),
            ("M", jstr(mt)),
            ("N", jstr(nt)),
        ]),
        jdecomp(&lhs),
        jdecomp(&rhs),
    ))
}

/// Decomposition of the regular module: multiplicity of each projective
/// equals one for towers of Frobenius type per simple dimension; concretely,
/// sum of multiplicity times projective dimension must equal dim A_n.
pub fn check_regular_decomposition(tower: &dyn Tower, n: usize) -> Result<Report> {
    check_degree(tower, n, true)?;
    let mut report = Report::new(jobj(vec![
        ("check", jstr("regular_decomposition")),
        ("tower", jstr(tower.name())),
        ("n", jint(n as i64)),
    ]));
    let algebra = ProductAlgebra::single(tower.algebra(n)?);
    let reg = super::module::regular_module(&algebra)?;
    let decomp = decompose_projectives_via_hom(tower, &reg)?;
    let total: i64 = decomp
        .iter()
        .map(|(tuple, mult)| {
            let p = tower.projective(&tuple[0]).expect("projective exists");
            mult * p.dim as i64
        })
        .sum();
    report.push(Cell::new(
        jobj(vec![
            ("identity", jstr("regular_dimension")),
            ("n", jint(n as i64)),
        ]),
        jint(total),
        jint(algebra.dim() as i64),
    ));
    report.push(Cell::new(
        jobj(vec![
            ("identity", jstr("regular_multiplicities")),
            ("n", jint(n as i64)),
        ]),
        jdecomp(&decomp),
        jdecomp(&expected_regular(tower, n)?),
    ));
    Ok(report)
}

fn expected_regular(tower: &dyn Tower, n: usize) -> Result<Decomposition> {
    let mut out = Decomposition::new();
    for t in tower.tags(n) {
        let simple = tower.simple(&t)?;
        out.insert(vec![t], simple.dim as i64);
    }
    Ok(out)
}
