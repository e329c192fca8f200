//! Finite dimensional algebras by structure constants, and finite tensor
//! products of them with a mixed-radix basis.

use crate::error::{Result, TowerError};
use crate::linalg::{rank, SparseVec};
use num_traits::Zero;
use std::sync::Arc;

/// Cap up to which registration re-checks associativity on all basis
/// triples. Larger algebras skip the cubic pass at construction; the
/// condition (1)(2) sweep re-validates every algebra without the cap.
const CONSTRUCTION_ASSOC_CAP: usize = 32;

/// An algebra of some degree in a tower, given by its multiplication table.
///
/// `generators` must generate the algebra as a unital algebra; this and the
/// unit and associativity laws are verified at construction.
pub struct AlgebraPresentation {
    pub name: String,
    pub degree: usize,
    pub dim: usize,
    pub basis_labels: Vec<String>,
    pub unit: SparseVec,
    table: Vec<Vec<SparseVec>>,
    pub generators: Vec<(String, usize)>,
}

impl AlgebraPresentation {
    pub fn new(
        name: String,
        degree: usize,
        basis_labels: Vec<String>,
        unit: SparseVec,
        table: Vec<Vec<SparseVec>>,
        generators: Vec<(String, usize)>,
    ) -> Result<Self> {
        let a = AlgebraPresentation {
            name,
            degree,
            dim: basis_labels.len(),
            basis_labels,
            unit,
            table,
            generators,
        };
        let violations = a.validate_capped(CONSTRUCTION_ASSOC_CAP);
        if let Some(v) = violations.first() {
            return Err(TowerError::InvalidPresentation(format!("{}: {v}", a.name)));
        }
        Ok(a)
    }

    /// The base field as the degree-zero algebra.
    pub fn one_dimensional(name: &str) -> Arc<Self> {
        Arc::new(
            AlgebraPresentation::new(
                name.to_string(),
                0,
                vec!["1".to_string()],
                SparseVec::unit(0),
                vec![vec![SparseVec::unit(0)]],
                Vec::new(),
            )
            .expect("base field presentation is valid"),
        )
    }

    /// All registration violations, empty when the presentation is valid:
    /// table shape, two-sided unit, associativity on basis triples, and
    /// generation by the declared generators.
    pub fn validate(&self) -> Vec<String> {
        self.validate_capped(usize::MAX)
    }

    fn validate_capped(&self, assoc_cap: usize) -> Vec<String> {
        let mut out = Vec::new();
        let d = self.dim;
        if self.table.len() != d || self.table.iter().any(|row| row.len() != d) {
            out.push(format!("table is not {d} x {d}"));
            return out;
        }
        for (g, i) in &self.generators {
            if *i >= d {
                out.push(format!("generator {g} has index {i} out of range"));
                return out;
            }
        }
        for j in 0..d {
            if self.mul(&self.unit, &SparseVec::unit(j)) != SparseVec::unit(j) {
                out.push(format!("unit fails on the left of basis element {j}"));
            }
            if self.mul(&SparseVec::unit(j), &self.unit) != SparseVec::unit(j) {
                out.push(format!("unit fails on the right of basis element {j}"));
            }
        }
        if !out.is_empty() {
            return out;
        }
        if d <= assoc_cap {
            'outer: for i in 0..d {
                for j in 0..d {
                    let ij = &self.table[i][j];
                    for k in 0..d {
                        let left = self.mul(ij, &SparseVec::unit(k));
                        let right = self.mul_basis_left(i, &self.table[j][k]);
                        if left != right {
                            out.push(format!("associativity fails at ({i},{j},{k})"));
                            break 'outer;
                        }
                    }
                }
            }
        }
        if !out.is_empty() {
            return out;
        }
        if !self.generators_generate() {
            out.push("declared generators do not generate as a unital algebra".to_string());
        }
        out
    }

    fn generators_generate(&self) -> bool {
        let mut red = crate::linalg::RowReducer::new();
        let mut basis_elems: Vec<SparseVec> = Vec::new();
        if red.insert(&self.unit) {
            basis_elems.push(self.unit.clone());
        }
        let mut head = 0;
        while head < basis_elems.len() {
            let current = basis_elems[head].clone();
            head += 1;
            for (_, g) in &self.generators {
                let prod = self.mul_basis_left(*g, &current);
                if red.insert(&prod) {
                    basis_elems.push(prod);
                }
            }
        }
        red.rank() == self.dim
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> &SparseVec {
        &self.table[i][j]
    }

    /// e_i times an arbitrary element.
    pub fn mul_basis_left(&self, i: usize, y: &SparseVec) -> SparseVec {
        let mut acc = SparseVec::new();
        for (j, c) in y.iter() {
            acc = acc.add_scaled(&self.table[i][*j], c);
        }
        acc
    }

    pub fn mul(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        let mut acc = SparseVec::new();
        for (i, c) in x.iter() {
            let term = self.mul_basis_left(*i, y);
            acc = acc.add_scaled(&term, c);
        }
        acc
    }

    pub fn generator_indices(&self) -> Vec<usize> {
        self.generators.iter().map(|(_, i)| *i).collect()
    }
}

/// Tensor product of presentations with a row-major mixed-radix basis; a
/// single factor is the degenerate case used for the algebras themselves.
#[derive(Clone)]
pub struct ProductAlgebra {
    pub factors: Vec<Arc<AlgebraPresentation>>,
}

impl ProductAlgebra {
    pub fn new(factors: Vec<Arc<AlgebraPresentation>>) -> Self {
        assert!(
            !factors.is_empty(),
            "product algebra needs at least one factor"
        );
        ProductAlgebra { factors }
    }

    pub fn single(a: Arc<AlgebraPresentation>) -> Self {
        ProductAlgebra { factors: vec![a] }
    }

    pub fn dim(&self) -> usize {
        self.factors.iter().map(|f| f.dim).product()
    }

    /// Tower degrees of the factors.
    pub fn context(&self) -> Vec<usize> {
        self.factors.iter().map(|f| f.degree).collect()
    }

    pub fn name(&self) -> String {
        let parts: Vec<&str> = self.factors.iter().map(|f| f.name.as_str()).collect();
        parts.join(" (x) ")
    }

    fn strides(&self) -> Vec<usize> {
        let mut strides = vec![1usize; self.factors.len()];
        for f in (0..self.factors.len().saturating_sub(1)).rev() {
            strides[f] = strides[f + 1] * self.factors[f + 1].dim;
        }
        strides
    }

    pub fn mix(&self, parts: &[usize]) -> usize {
        let strides = self.strides();
        parts.iter().zip(&strides).map(|(p, s)| p * s).sum()
    }

    pub fn unmix(&self, mut index: usize) -> Vec<usize> {
        let strides = self.strides();
        strides
            .iter()
            .map(|s| {
                let p = index / s;
                index %= s;
                p
            })
            .collect()
    }

    pub fn basis_label(&self, index: usize) -> String {
        let parts = self.unmix(index);
        let labels: Vec<&str> = parts
            .iter()
            .zip(&self.factors)
            .map(|(p, f)| f.basis_labels[*p].as_str())
            .collect();
        labels.join("|")
    }

    /// Kronecker combination of one sparse vector per factor.
    pub fn kron(&self, parts: &[&SparseVec]) -> SparseVec {
        assert_eq!(parts.len(), self.factors.len());
        let strides = self.strides();
        let mut acc: Vec<(usize, crate::linalg::Rat)> =
            vec![(0, crate::linalg::Rat::from_integer(1.into()))];
        for (f, part) in parts.iter().enumerate() {
            let mut next = Vec::with_capacity(acc.len() * part.len());
            for (idx, c) in &acc {
                for (j, d) in part.iter() {
                    next.push((idx + j * strides[f], c * d));
                }
            }
            acc = next;
        }
        SparseVec::from_entries(acc.into_iter().filter(|(_, c)| !c.is_zero()))
    }

    pub fn unit(&self) -> SparseVec {
        let units: Vec<&SparseVec> = self.factors.iter().map(|f| &f.unit).collect();
        self.kron(&units)
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> SparseVec {
        let (pi, pj) = (self.unmix(i), self.unmix(j));
        let per_factor: Vec<SparseVec> = pi
            .iter()
            .zip(&pj)
            .zip(&self.factors)
            .map(|((a, b), f)| f.mul_basis(*a, *b).clone())
            .collect();
        let refs: Vec<&SparseVec> = per_factor.iter().collect();
        self.kron(&refs)
    }

    pub fn mul(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        let mut acc = SparseVec::new();
        for (i, c) in x.iter() {
            for (j, d) in y.iter() {
                acc = acc.add_scaled(&self.mul_basis(*i, *j), &(c * d));
            }
        }
        acc
    }

    /// (factor, generator position) pairs, in factor order.
    pub fn generators(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (f, a) in self.factors.iter().enumerate() {
            for g in 0..a.generators.len() {
                out.push((f, g));
            }
        }
        out
    }

    /// The generator as an element: units everywhere except one factor.
    pub fn generator_element(&self, factor: usize, g: usize) -> SparseVec {
        let gen_idx = self.factors[factor].generators[g].1;
        let gen_vec = SparseVec::unit(gen_idx);
        let parts: Vec<&SparseVec> = self
            .factors
            .iter()
            .enumerate()
            .map(|(f, a)| if f == factor { &gen_vec } else { &a.unit })
            .collect();
        self.kron(&parts)
    }
}

/// Checks that two product algebras have identical factor shapes.
pub fn same_shape(a: &ProductAlgebra, b: &ProductAlgebra) -> Result<()> {
    let (da, db): (Vec<usize>, Vec<usize>) = (
        a.factors.iter().map(|f| f.dim).collect(),
        b.factors.iter().map(|f| f.dim).collect(),
    );
    if da != db || a.context() != b.context() {
        return Err(TowerError::DimensionMismatch(format!(
            "contexts {:?} (dims {da:?}) vs {:?} (dims {db:?})",
            a.context(),
            b.context()
        )));
    }
    Ok(())
}

/// Left regular representation data of a product algebra: for each generator,
/// the matrix of left multiplication on the basis.
pub fn left_regular_actions(algebra: &ProductAlgebra) -> Vec<Vec<crate::linalg::Matrix>> {
    let dim = algebra.dim();
    let mut out = Vec::new();
    for (f, a) in algebra.factors.iter().enumerate() {
        let mut per_gen = Vec::new();
        for g in 0..a.generators.len() {
            let ge = algebra.generator_element(f, g);
            let cols: Vec<SparseVec> = (0..dim)
                .map(|j| algebra.mul(&ge, &SparseVec::unit(j)))
                .collect();
            per_gen.push(crate::linalg::Matrix::from_cols(dim, &cols));
        }
        out.push(per_gen);
    }
    out
}

/// Verifies the span of the columns is all of the target space.
pub fn full_rank(cols: &[SparseVec], dim: usize) -> bool {
    cols.len() == dim && rank(cols) == dim
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;

    /// K[x]/(x^2 - x): basis {1, x}, generated by x.
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

    #[test]
    fn accepts_idempotent_algebra_and_rejects_broken_tables() {
        let a = idem_algebra("A");
        assert_eq!(a.dim, 2);
        // Non-unital table: x * 1 = 0.
        let e0 = SparseVec::unit(0);
        let e1 = SparseVec::unit(1);
        let bad = AlgebraPresentation::new(
            "bad".into(),
            1,
            vec!["1".into(), "x".into()],
            e0.clone(),
            vec![vec![e0, e1.clone()], vec![SparseVec::new(), e1]],
            vec![("x".into(), 1)],
        );
        assert!(matches!(bad, Err(TowerError::InvalidPresentation(_))));
    }

    #[test]
    fn rejects_non_generating_generators() {
        let e0 = SparseVec::unit(0);
        let e1 = SparseVec::unit(1);
        // Same algebra but declare no generators: the unit spans only 1 dim.
        let bad = AlgebraPresentation::new(
            "nogen".into(),
            1,
            vec!["1".into(), "x".into()],
            e0.clone(),
            vec![vec![e0, e1.clone()], vec![e1.clone(), e1]],
            vec![],
        );
        assert!(matches!(bad, Err(TowerError::InvalidPresentation(_))));
    }

    #[test]
    fn product_algebra_mixing_and_products() {
        let a = idem_algebra("A");
        let b = idem_algebra("B");
        let p = ProductAlgebra::new(vec![a, b]);
        assert_eq!(p.dim(), 4);
        assert_eq!(p.mix(&[1, 0]), 2);
        assert_eq!(p.unmix(3), vec![1, 1]);
        assert_eq!(p.context(), vec![1, 1]);
        // (x (x) 1)(x (x) x) = x (x) x.
        let gx0 = p.generator_element(0, 0);
        let both = p.kron(&[&SparseVec::unit(1), &SparseVec::unit(1)]);
        assert_eq!(p.mul(&gx0, &both), both);
        assert_eq!(p.mul(&p.unit(), &both), both);
        assert_eq!(p.generators().len(), 2);
    }

    #[test]
    fn regular_actions_are_multiplication_matrices() {
        let a = idem_algebra("A");
        let p = ProductAlgebra::single(a);
        let acts = left_regular_actions(&p);
        let x_mat = &acts[0][0];
        // x . 1 = x, x . x = x: column 0 and 1 both equal e1.
        assert_eq!(x_mat.col(0), SparseVec::unit(1));
        assert_eq!(x_mat.col(1), SparseVec::unit(1));
        assert_eq!(*x_mat.get(1, 0), rat(1));
    }
}
