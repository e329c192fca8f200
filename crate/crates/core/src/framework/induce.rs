//! Induction and restriction of modules along generator-described morphisms.
//!
//! Induction forms the free space (target algebra) (x) W and quotients by the
//! balancing relations a rho(g) (x) w - a (x) g w, generated over the declared
//! generators of the source; since those generate the source as a unital
//! algebra, the span of relations over all source elements is the same.

use super::algebra::same_shape;
use super::module::ModuleRep;
use super::morphism::Morphism;
use crate::error::{Result, TowerError};
use crate::linalg::{Matrix, RowReducer, SparseVec};

/// Induced module target (x)_{source} W. `expected_dim` is the freeness
/// prediction dim(target)/dim(source) * dim W; the computed quotient must hit
/// it exactly when given.
pub fn induce(phi: &Morphism, w: &ModuleRep, expected_dim: Option<usize>) -> Result<ModuleRep> {
    same_shape(&phi.source, &w.algebra)?;
    let t = &phi.target;
    let tdim = t.dim();
    let free = tdim * w.dim;
    let fidx = |a: usize, v: usize| a * w.dim + v;

    let mut relations = RowReducer::new();
    for (f, block) in phi.gen_images.iter().enumerate() {
        for (g, image) in block.iter().enumerate() {
            let act = w.generator_action(f, g);
            for a in 0..tdim {
                let a_rho = t.mul(&SparseVec::unit(a), image);
                for v in 0..w.dim {
                    // a rho(g) (x) v - a (x) g v.
                    let mut entries: Vec<(usize, crate::linalg::Rat)> = a_rho
                        .iter()
                        .map(|(b, c)| (fidx(*b, v), c.clone()))
                        .collect();
                    entries.extend(act.col(v).iter().map(|(vp, c)| (fidx(a, *vp), -c.clone())));
                    relations.insert(&SparseVec::from_entries(entries));
                }
            }
        }
    }

    let pivot = relations.pivot_cols();
    let quotient_dim = free - relations.rank();
    if let Some(e) = expected_dim {
        if quotient_dim != e {
            return Err(TowerError::InductionInconsistent(format!(
                "induced module over {} has dimension {quotient_dim}, expected {e}",
                t.name()
            )));
        }
    }
    // Quotient coordinates: the non-pivot free indices, ascending.
    let mut coord_of = vec![usize::MAX; free];
    let mut coords = Vec::with_capacity(quotient_dim);
    let mut p = 0usize;
    for (i, slot) in coord_of.iter_mut().enumerate() {
        if p < pivot.len() && pivot[p] == i {
            p += 1;
        } else {
            *slot = coords.len();
            coords.push(i);
        }
    }

    let project = |vec: &SparseVec| -> SparseVec {
        let reduced = relations.reduce(vec);
        SparseVec::from_entries(reduced.iter().map(|(i, c)| (coord_of[*i], c.clone())))
    };

    let mut actions = Vec::new();
    for (f, a) in t.factors.iter().enumerate() {
        let mut per_gen = Vec::new();
        for g in 0..a.generators.len() {
            let ge = t.generator_element(f, g);
            let mut cols = Vec::with_capacity(quotient_dim);
            for &idx in &coords {
                let (a_idx, v_idx) = (idx / w.dim, idx % w.dim);
                let prod = t.mul(&ge, &SparseVec::unit(a_idx));
                let lifted =
                    SparseVec::from_entries(prod.iter().map(|(b, c)| (fidx(*b, v_idx), c.clone())));
                cols.push(project(&lifted));
            }
            per_gen.push(Matrix::from_cols(quotient_dim, &cols));
        }
        actions.push(per_gen);
    }
    ModuleRep::new(t.clone(), quotient_dim, actions)
}

/// Restriction along a morphism: source generators act through their images.
pub fn restrict(phi: &Morphism, module: &ModuleRep) -> Result<ModuleRep> {
    same_shape(&phi.target, &module.algebra)?;
    let mut actions = Vec::new();
    for block in &phi.gen_images {
        let mut per_gen = Vec::new();
        for image in block {
            per_gen.push(module.element_action(image)?);
        }
        actions.push(per_gen);
    }
    ModuleRep::new(phi.source.clone(), module.dim, actions)
}
