//! The tower interface and the generic constructions on top of it: iterated
//! and twisted external products, tensor modules, and decomposition of
//! projectives through Hom spaces.

use super::algebra::{AlgebraPresentation, ProductAlgebra};
use super::induce::{induce, restrict};
use super::module::{hom_dim, ModuleRep};
use super::morphism::{EmbeddingMap, Morphism};
use crate::error::{Result, TowerError};
use crate::hopf::BasisTag;
use crate::linalg::SparseVec;
use std::collections::BTreeMap;
use std::sync::Arc;

/// Multiset of simple or projective tensor classes with multiplicities.
pub type Decomposition = BTreeMap<Vec<BasisTag>, i64>;

/// Coset representatives witnessing two-sided freeness of A_{m+n} over the
/// image of A_m (x) A_n: elements x with A = (+) x . rho(A_m (x) A_n) on the
/// right list and A = (+) rho(A_m (x) A_n) . x on the left list.
pub struct CosetReps {
    pub right: Vec<SparseVec>,
    pub left: Vec<SparseVec>,
}

/// A graded tower of algebras with embeddings, distinguished modules, and a
/// decomposition method for its semisimplified category.
pub trait Tower: Send + Sync {
    fn name(&self) -> &'static str;

    /// Largest degree with a full multiplication table.
    fn algebra_cap(&self) -> usize;

    /// Largest degree with explicit module constructions.
    fn module_cap(&self) -> usize;

    fn algebra(&self, n: usize) -> Result<Arc<AlgebraPresentation>>;

    fn embedding(&self, m: usize, n: usize) -> Result<Arc<EmbeddingMap>>;

    /// Index set shared by the simple and the projective indecomposable
    /// modules of A_n, in the canonical basis order of the tower.
    fn tags(&self, n: usize) -> Vec<BasisTag>;

    fn simple(&self, tag: &BasisTag) -> Result<Arc<ModuleRep>>;

    fn projective(&self, tag: &BasisTag) -> Result<Arc<ModuleRep>>;

    /// Composition factor multiplicities of a module over a product context
    /// of this tower, keyed by tag tuples.
    fn decompose_simples(&self, module: &ModuleRep) -> Result<Decomposition>;

    fn coset_reps(&self, m: usize, n: usize) -> Result<CosetReps>;
}

pub fn check_degree(tower: &dyn Tower, n: usize, modules: bool) -> Result<()> {
    let cap = if modules {
        tower.module_cap()
    } else {
        tower.algebra_cap()
    };
    if n > cap {
        return Err(TowerError::DegreeCap {
            degree: n,
            cap,
            what: format!(
                "{} {}",
                tower.name(),
                if modules { "modules" } else { "algebras" }
            ),
        });
    }
    Ok(())
}

/// The product algebra A_{d_1} (x) ... (x) A_{d_r}.
pub fn context_algebra(tower: &dyn Tower, degrees: &[usize]) -> Result<ProductAlgebra> {
    let factors = degrees
        .iter()
        .map(|&d| tower.algebra(d))
        .collect::<Result<Vec<_>>>()?;
    Ok(ProductAlgebra::new(factors))
}

/// rho_{m,n} as a morphism [A_m, A_n] -> [A_{m+n}].
pub fn pair_morphism(tower: &dyn Tower, m: usize, n: usize) -> Result<Morphism> {
    let e = tower.embedding(m, n)?;
    Ok(Morphism::from_embedding(&e))
}

/// Tensor product of per-factor simples (or projectives) for a tag tuple.
pub fn tensor_family(tower: &dyn Tower, tags: &[BasisTag], projective: bool) -> Result<ModuleRep> {
    assert!(!tags.is_empty());
    let mut acc: Option<ModuleRep> = None;
    for t in tags {
        let m = if projective {
            tower.projective(t)?
        } else {
            tower.simple(t)?
        };
        acc = Some(match acc {
            None => (*m).clone(),
            Some(prev) => ModuleRep::tensor(&prev, &m),
        });
    }
    Ok(acc.unwrap())
}

/// All tag tuples for a context, in lexicographic tag order.
pub fn tag_tuples(tower: &dyn Tower, degrees: &[usize]) -> Vec<Vec<BasisTag>> {
    let mut out: Vec<Vec<BasisTag>> = vec![Vec::new()];
    for &d in degrees {
        let tags = tower.tags(d);
        let mut next = Vec::with_capacity(out.len() * tags.len());
        for prefix in &out {
            for t in &tags {
                let mut tuple = prefix.clone();
                tuple.push(t.clone());
                next.push(tuple);
            }
        }
        out = next;
    }
    out
}

/// Projective indecomposable multiplicities of a projective module via
/// dim Hom(M, C_tuple), verified by dimension reconstruction.
pub fn decompose_projectives_via_hom(
    tower: &dyn Tower,
    module: &ModuleRep,
) -> Result<Decomposition> {
    let ctx = module.context();
    let mut out = Decomposition::new();
    let mut reconstructed = 0i64;
    for tuple in tag_tuples(tower, &ctx) {
        let simple = tensor_family(tower, &tuple, false)?;
        let mult = hom_dim(module, &simple)? as i64;
        if mult > 0 {
            let proj = tensor_family(tower, &tuple, true)?;
            reconstructed += mult * proj.dim as i64;
            out.insert(tuple, mult);
        }
    }
    if reconstructed != module.dim as i64 {
        return Err(TowerError::DecompositionFailed(format!(
            "projective multiplicities reconstruct dimension {reconstructed}, \
             module has {}",
            module.dim
        )));
    }
    Ok(out)
}

/// Expected free rank of an induced module, with exact divisibility.
pub fn expected_induced_dim(target_dim: usize, source_dim: usize, w_dim: usize) -> Result<usize> {
    if source_dim == 0 || !target_dim.is_multiple_of(source_dim) {
        return Err(TowerError::InductionInconsistent(format!(
            "target dimension {target_dim} is not a multiple of source dimension {source_dim}"
        )));
    }
    Ok(target_dim / source_dim * w_dim)
}

/// Induction along rho_{m,n} of an [A_m, A_n] module, with the freeness
/// prediction enforced.
pub fn induce_pair(tower: &dyn Tower, m: usize, n: usize, w: &ModuleRep) -> Result<ModuleRep> {
    let phi = pair_morphism(tower, m, n)?;
    let expected = expected_induced_dim(phi.target.dim(), phi.source.dim(), w.dim)?;
    induce(&phi, w, Some(expected))
}

/// Restriction of an A_{m+n} module to [A_m, A_n].
pub fn restrict_pair(
    tower: &dyn Tower,
    m: usize,
    n: usize,
    module: &ModuleRep,
) -> Result<ModuleRep> {
    restrict(&pair_morphism(tower, m, n)?, module)
}

/// The connecting morphism of the Mackey style compatibility: from the four
/// factor context [A_t, A_{m-t}, A_s, A_{n-s}] into [A_{t+s}, A_{m-t+n-s}],
/// sending the outer pair through rho_{t,s} into the first target factor and
/// the inner pair through rho_{m-t,n-s} into the second. The interleaving of
/// factors is exactly the twist: the second source factor lands in the second
/// target factor while the third lands in the first.
pub fn twisted_morphism(
    tower: &dyn Tower,
    t: usize,
    mt: usize,
    s: usize,
    ns: usize,
) -> Result<Morphism> {
    let source = context_algebra(tower, &[t, mt, s, ns])?;
    let target = context_algebra(tower, &[t + s, mt + ns])?;
    let first = tower.embedding(t, s)?;
    let second = tower.embedding(mt, ns)?;
    let unit_first = target.factors[0].unit.clone();
    let unit_second = target.factors[1].unit.clone();
    let into_first = |x: &SparseVec| target.kron(&[x, &unit_second]);
    let into_second = |x: &SparseVec| target.kron(&[&unit_first, x]);
    let mut gen_images: Vec<Vec<SparseVec>> = Vec::new();
    for (f, a) in source.factors.iter().enumerate() {
        let mut block = Vec::new();
        for g in 0..a.generators.len() {
            let gen_idx = a.generators[g].1;
            let image = match f {
                // A_t -> first slot of rho_{t,s}.
                0 => into_first(
                    &first.apply(
                        &first
                            .source
                            .kron(&[&SparseVec::unit(gen_idx), &first.source.factors[1].unit]),
                    ),
                ),
                // A_{m-t} -> first slot of rho_{m-t,n-s}.
                1 => into_second(
                    &second.apply(
                        &second
                            .source
                            .kron(&[&SparseVec::unit(gen_idx), &second.source.factors[1].unit]),
                    ),
                ),
                // A_s -> second slot of rho_{t,s}.
                2 => into_first(
                    &first.apply(
                        &first
                            .source
                            .kron(&[&first.source.factors[0].unit, &SparseVec::unit(gen_idx)]),
                    ),
                ),
                // A_{n-s} -> second slot of rho_{m-t,n-s}.
                3 => into_second(
                    &second.apply(
                        &second
                            .source
                            .kron(&[&second.source.factors[0].unit, &SparseVec::unit(gen_idx)]),
                    ),
                ),
                _ => unreachable!("twisted context has four factors"),
            };
            block.push(image);
        }
        gen_images.push(block);
    }
    Ok(Morphism {
        source,
        target,
        gen_images,
    })
}

/// Iterated embedding [A_l, A_m, A_n] -> A_{l+m+n} through the left pairing;
/// coherence with the right pairing is one of the checked conditions.
pub fn triple_morphism(tower: &dyn Tower, l: usize, m: usize, n: usize) -> Result<Morphism> {
    let source = context_algebra(tower, &[l, m, n])?;
    let inner = tower.embedding(l, m)?;
    let outer = tower.embedding(l + m, n)?;
    let target = ProductAlgebra::single(outer.target.clone());
    let mut gen_images: Vec<Vec<SparseVec>> = Vec::new();
    for (f, a) in source.factors.iter().enumerate() {
        let mut block = Vec::new();
        for g in 0..a.generators.len() {
            let gen_idx = a.generators[g].1;
            let image = match f {
                0 => {
                    let in_lm = inner.apply(
                        &inner
                            .source
                            .kron(&[&SparseVec::unit(gen_idx), &inner.source.factors[1].unit]),
                    );
                    outer.apply(&outer.source.kron(&[&in_lm, &outer.source.factors[1].unit]))
                }
                1 => {
                    let in_lm = inner.apply(
                        &inner
                            .source
                            .kron(&[&inner.source.factors[0].unit, &SparseVec::unit(gen_idx)]),
                    );
                    outer.apply(&outer.source.kron(&[&in_lm, &outer.source.factors[1].unit]))
                }
                2 => outer.apply(
                    &outer
                        .source
                        .kron(&[&outer.source.factors[0].unit, &SparseVec::unit(gen_idx)]),
                ),
                _ => unreachable!("triple context has three factors"),
            };
            block.push(image);
        }
        gen_images.push(block);
    }
    Ok(Morphism {
        source,
        target,
        gen_images,
    })
}
