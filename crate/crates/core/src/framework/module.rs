//! Modules over product algebras: generator action matrices plus a lazily
//! built span closure that extends the action to arbitrary elements.

use super::algebra::{left_regular_actions, same_shape, ProductAlgebra};
use crate::error::{Result, TowerError};
use crate::linalg::{Matrix, SpanSolver, SparseVec};
use num_traits::Zero;
use std::sync::OnceLock;

/// Left module over a [`ProductAlgebra`], presented by the action matrices of
/// the declared generators of each factor.
pub struct ModuleRep {
    pub algebra: ProductAlgebra,
    pub dim: usize,
    actions: Vec<Vec<Matrix>>,
    closure: OnceLock<Result<SpanClosure>>,
}

/// Basis of the unital subalgebra generated by the generators, with the
/// action matrix of each basis element.
struct SpanClosure {
    solver: SpanSolver,
    matrices: Vec<Matrix>,
}

impl Clone for ModuleRep {
    fn clone(&self) -> Self {
        ModuleRep {
            algebra: self.algebra.clone(),
            dim: self.dim,
            actions: self.actions.clone(),
            closure: OnceLock::new(),
        }
    }
}

impl ModuleRep {
    pub fn new(algebra: ProductAlgebra, dim: usize, actions: Vec<Vec<Matrix>>) -> Result<Self> {
        if actions.len() != algebra.factors.len() {
            return Err(TowerError::DimensionMismatch(format!(
                "module action blocks {} vs factors {}",
                actions.len(),
                algebra.factors.len()
            )));
        }
        for (f, a) in algebra.factors.iter().enumerate() {
            if actions[f].len() != a.generators.len() {
                return Err(TowerError::DimensionMismatch(format!(
                    "factor {f} has {} generators but {} action matrices",
                    a.generators.len(),
                    actions[f].len()
                )));
            }
            for m in &actions[f] {
                if m.rows != dim || m.cols != dim {
                    return Err(TowerError::DimensionMismatch(format!(
                        "action matrix is {}x{} on a {dim} dimensional module",
                        m.rows, m.cols
                    )));
                }
            }
        }
        Ok(ModuleRep {
            algebra,
            dim,
            actions,
            closure: OnceLock::new(),
        })
    }

    pub fn context(&self) -> Vec<usize> {
        self.algebra.context()
    }

    pub fn generator_action(&self, factor: usize, g: usize) -> &Matrix {
        &self.actions[factor][g]
    }

    /// External tensor product; the result is a module over the concatenated
    /// context, with row-major index pairing.
    pub fn tensor(a: &ModuleRep, b: &ModuleRep) -> ModuleRep {
        let mut factors = a.algebra.factors.clone();
        factors.extend(b.algebra.factors.iter().cloned());
        let algebra = ProductAlgebra::new(factors);
        let dim = a.dim * b.dim;
        let ia = Matrix::identity(a.dim);
        let ib = Matrix::identity(b.dim);
        let mut actions = Vec::new();
        for block in &a.actions {
            actions.push(block.iter().map(|m| m.kron(&ib)).collect());
        }
        for block in &b.actions {
            actions.push(block.iter().map(|m| ia.kron(m)).collect());
        }
        ModuleRep {
            algebra,
            dim,
            actions,
            closure: OnceLock::new(),
        }
    }

    /// Internal direct sum of modules over the same context.
    pub fn direct_sum(a: &ModuleRep, b: &ModuleRep) -> Result<ModuleRep> {
        same_shape(&a.algebra, &b.algebra)?;
        let dim = a.dim + b.dim;
        let mut actions = Vec::new();
        for (f, block) in a.actions.iter().enumerate() {
            let mut per_gen = Vec::new();
            for (g, ma) in block.iter().enumerate() {
                let mb = &b.actions[f][g];
                let mut m = Matrix::zero(dim, dim);
                for i in 0..a.dim {
                    for j in 0..a.dim {
                        m.set(i, j, ma.get(i, j).clone());
                    }
                }
                for i in 0..b.dim {
                    for j in 0..b.dim {
                        m.set(a.dim + i, a.dim + j, mb.get(i, j).clone());
                    }
                }
                per_gen.push(m);
            }
            actions.push(per_gen);
        }
        ModuleRep::new(a.algebra.clone(), dim, actions)
    }

    fn span_closure(&self) -> Result<&SpanClosure> {
        let built = self.closure.get_or_init(|| self.build_closure());
        match built {
            Ok(c) => Ok(c),
            Err(e) => Err(TowerError::DecompositionFailed(format!(
                "span closure unavailable: {e}"
            ))),
        }
    }

    /// Breadth-first closure of {unit} under left multiplication by the
    /// generators, tracking both the algebra element and its action matrix.
    fn build_closure(&self) -> Result<SpanClosure> {
        let adim = self.algebra.dim();
        let mut solver = SpanSolver::new(adim);
        let mut elements: Vec<SparseVec> = Vec::new();
        let mut matrices: Vec<Matrix> = Vec::new();
        let unit = self.algebra.unit();
        solver.insert(&unit);
        elements.push(unit);
        matrices.push(Matrix::identity(self.dim));
        let gens = self.algebra.generators();
        let gen_elements: Vec<SparseVec> = gens
            .iter()
            .map(|&(f, g)| self.algebra.generator_element(f, g))
            .collect();
        let mut head = 0;
        while head < elements.len() {
            let current = elements[head].clone();
            let current_mat = matrices[head].clone();
            head += 1;
            for (gi, &(f, g)) in gens.iter().enumerate() {
                let prod = self.algebra.mul(&gen_elements[gi], &current);
                if solver.insert(&prod) {
                    elements.push(prod);
                    matrices.push(self.actions[f][g].mul(&current_mat));
                }
            }
        }
        Ok(SpanClosure { solver, matrices })
    }

    /// Action matrix of an arbitrary element of the product algebra. Errors
    /// when the element lies outside the unital span of the generators.
    pub fn element_action(&self, e: &SparseVec) -> Result<Matrix> {
        let closure = self.span_closure()?;
        let combo = closure.solver.express(e).ok_or_else(|| {
            TowerError::DecompositionFailed(
                "element outside the span generated by the declared generators".to_string(),
            )
        })?;
        let mut acc = Matrix::zero(self.dim, self.dim);
        for (i, c) in combo {
            acc = acc.add(&closure.matrices[i].scaled(&c));
        }
        Ok(acc)
    }
}

/// The left regular module of a product algebra.
pub fn regular_module(algebra: &ProductAlgebra) -> Result<ModuleRep> {
    let dim = algebra.dim();
    ModuleRep::new(algebra.clone(), dim, left_regular_actions(algebra))
}

/// dim Hom over the product algebra: intertwiners F with
/// F act_M(g) = act_N(g) F for every declared generator g.
pub fn hom_dim(m: &ModuleRep, n: &ModuleRep) -> Result<usize> {
    Ok(hom_rows(m, n)?.1)
}

/// Basis of the intertwiner space Hom(M, N), as matrices.
pub fn hom_basis(m: &ModuleRep, n: &ModuleRep) -> Result<Vec<Matrix>> {
    let (rows, _) = hom_rows(m, n)?;
    let vars = n.dim * m.dim;
    let basis = crate::linalg::nullspace(&rows, vars);
    Ok(basis
        .into_iter()
        .map(|v| {
            let mut f = Matrix::zero(n.dim, m.dim);
            for (idx, c) in v.iter() {
                f.set(idx / m.dim, idx % m.dim, c.clone());
            }
            f
        })
        .collect())
}

fn hom_rows(m: &ModuleRep, n: &ModuleRep) -> Result<(Vec<SparseVec>, usize)> {
    same_shape(&m.algebra, &n.algebra)?;
    let vars = n.dim * m.dim;
    let var = |i: usize, j: usize| i * m.dim + j;
    let mut rows = Vec::new();
    for (f, a) in m.algebra.factors.iter().enumerate() {
        for g in 0..a.generators.len() {
            let am = m.generator_action(f, g);
            let an = n.generator_action(f, g);
            for i in 0..n.dim {
                for j in 0..m.dim {
                    let mut entries = Vec::new();
                    for k in 0..m.dim {
                        let c = am.get(k, j);
                        if !c.is_zero() {
                            entries.push((var(i, k), c.clone()));
                        }
                    }
                    for k in 0..n.dim {
                        let c = an.get(i, k);
                        if !c.is_zero() {
                            entries.push((var(k, j), -c.clone()));
                        }
                    }
                    let row = SparseVec::from_entries(entries);
                    if !row.is_zero() {
                        rows.push(row);
                    }
                }
            }
        }
    }
    let rank = crate::linalg::rank(&rows);
    Ok((rows, vars - rank))
}

/// Outcome of the exact isomorphism test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IsoVerdict {
    Isomorphic,
    NotIsomorphic,
    /// The invertibility search was cut off before being exhaustive.
    Inconclusive(String),
}

/// Decides isomorphism by searching the intertwiner space for an invertible
/// element on a deterministic grid. Exhausting a grid of side dim+1 proves
/// the determinant vanishes identically, so a full sweep is decisive.
pub fn module_isomorphic(m: &ModuleRep, n: &ModuleRep) -> Result<IsoVerdict> {
    if m.dim != n.dim {
        return Ok(IsoVerdict::NotIsomorphic);
    }
    if m.dim == 0 {
        return Ok(IsoVerdict::Isomorphic);
    }
    let basis = hom_basis(m, n)?;
    if basis.is_empty() {
        return Ok(IsoVerdict::NotIsomorphic);
    }
    let h = basis.len();
    // det of a linear combination has degree at most dim in each coefficient,
    // so vanishing on the whole grid {0..dim}^h forces det identically zero.
    let side = m.dim + 1;
    let budget: usize = 4096;
    let mut counter = vec![0usize; h];
    let mut tried = 0usize;
    loop {
        let mut cand = Matrix::zero(n.dim, m.dim);
        for (i, &c) in counter.iter().enumerate() {
            if c != 0 {
                cand = cand.add(&basis[i].scaled(&crate::linalg::rat(c as i64)));
            }
        }
        if !cand.det().eq(&crate::linalg::rat(0)) {
            return Ok(IsoVerdict::Isomorphic);
        }
        tried += 1;
        if tried >= budget {
            return Ok(IsoVerdict::Inconclusive(format!(
                "no invertible intertwiner within {budget} grid points over a \
                 {h} dimensional Hom space"
            )));
        }
        let mut pos = 0;
        while pos < h {
            counter[pos] += 1;
            if counter[pos] < side {
                break;
            }
            counter[pos] = 0;
            pos += 1;
        }
        if pos == h {
            return Ok(IsoVerdict::NotIsomorphic);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::framework::algebra::AlgebraPresentation;
    use crate::linalg::rat;
    use std::sync::Arc;

    fn idem_algebra(name: &str) -> Arc<AlgebraPresentation> {
        let e0 = SparseVec::unit(0);
        let e1 = SparseVec::unit(1);
        Arc::new(
            AlgebraPresentation::new(
                name.to_string(),
                1,
                vec!["1".into(), "x".into()],
                e0.clone(),
                vec![vec![e0.clone(), e1.clone()], vec![e1.clone(), e1.clone()]],
                vec![("x".into(), 1)],
            )
            .unwrap(),
        )
    }

    fn one_dim_module(alg: &Arc<AlgebraPresentation>, eigen: i64) -> ModuleRep {
        let algebra = ProductAlgebra::single(alg.clone());
        let m = Matrix::from_fn(1, 1, |_, _| rat(eigen));
        ModuleRep::new(algebra, 1, vec![vec![m]]).unwrap()
    }

    #[test]
    fn element_action_through_span_closure() {
        let a = idem_algebra("A");
        let m = one_dim_module(&a, 1);
        // Action of 3*1 - 2*x on the eigenvalue-1 module: 3 - 2 = 1.
        let e = SparseVec::from_entries(vec![(0, rat(3)), (1, rat(-2))]);
        let act = m.element_action(&e).unwrap();
        assert_eq!(*act.get(0, 0), rat(1));
    }

    #[test]
    fn regular_module_of_idempotent_algebra() {
        let a = idem_algebra("A");
        let p = ProductAlgebra::single(a);
        let reg = regular_module(&p).unwrap();
        assert_eq!(reg.dim, 2);
        // x acts with matrix sending 1 -> x, x -> x; trace 1.
        assert_eq!(reg.generator_action(0, 0).trace(), rat(1));
    }

    #[test]
    fn hom_dims_between_eigenmodules() {
        let a = idem_algebra("A");
        let m0 = one_dim_module(&a, 0);
        let m1 = one_dim_module(&a, 1);
        assert_eq!(hom_dim(&m0, &m0).unwrap(), 1);
        assert_eq!(hom_dim(&m0, &m1).unwrap(), 0);
        let sum = ModuleRep::direct_sum(&m0, &m1).unwrap();
        assert_eq!(hom_dim(&m0, &sum).unwrap(), 1);
        assert_eq!(hom_dim(&sum, &sum).unwrap(), 2);
    }

    #[test]
    fn tensor_module_actions_commute_across_factors() {
        let a = idem_algebra("A");
        let b = idem_algebra("B");
        let t = ModuleRep::tensor(&one_dim_module(&a, 1), &one_dim_module(&b, 0));
        assert_eq!(t.context(), vec![1, 1]);
        assert_eq!(*t.generator_action(0, 0).get(0, 0), rat(1));
        assert_eq!(*t.generator_action(1, 0).get(0, 0), rat(0));
    }

    #[test]
    fn isomorphism_verdicts() {
        let a = idem_algebra("A");
        let m0 = one_dim_module(&a, 0);
        let m1 = one_dim_module(&a, 1);
        assert_eq!(
            module_isomorphic(&m0, &m1).unwrap(),
            IsoVerdict::NotIsomorphic
        );
        assert_eq!(
            module_isomorphic(&m1, &m1.clone()).unwrap(),
            IsoVerdict::Isomorphic
        );
        let s01 = ModuleRep::direct_sum(&m0, &m1).unwrap();
        let s10 = ModuleRep::direct_sum(&m1, &m0).unwrap();
        assert_eq!(
            module_isomorphic(&s01, &s10).unwrap(),
            IsoVerdict::Isomorphic
        );
        let s00 = ModuleRep::direct_sum(&m0, &m0.clone()).unwrap();
        assert_eq!(
            module_isomorphic(&s01, &s00).unwrap(),
            IsoVerdict::NotIsomorphic
        );
    }
}
