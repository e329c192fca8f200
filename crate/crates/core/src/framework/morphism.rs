//! The external products rho_{m,n}: A_m (x) A_n -> A_{m+n} of a tower, and
//! general algebra maps between product contexts described on generators.

use super::algebra::{AlgebraPresentation, ProductAlgebra};
use crate::error::{Result, TowerError};
use crate::linalg::{rank, SparseVec};
use std::sync::Arc;

/// An injective unital algebra map A_m (x) A_n -> A_{m+n}, stored as one
/// image column per mixed-radix source basis index.
pub struct EmbeddingMap {
    pub m: usize,
    pub n: usize,
    pub source: ProductAlgebra,
    pub target: Arc<AlgebraPresentation>,
    columns: Vec<SparseVec>,
}

impl EmbeddingMap {
    pub fn new(
        m: usize,
        n: usize,
        source: ProductAlgebra,
        target: Arc<AlgebraPresentation>,
        columns: Vec<SparseVec>,
    ) -> Result<Self> {
        let e = EmbeddingMap::new_unchecked(m, n, source, target, columns);
        let violations = e.validate();
        if let Some(v) = violations.first() {
            return Err(TowerError::InvalidEmbedding(format!(
                "rho_({},{}) into {}: {v}",
                e.m, e.n, e.target.name
            )));
        }
        Ok(e)
    }

    /// Skips validation; used to build deliberately broken fixtures for the
    /// negative controls of the check suite.
    pub fn new_unchecked(
        m: usize,
        n: usize,
        source: ProductAlgebra,
        target: Arc<AlgebraPresentation>,
        columns: Vec<SparseVec>,
    ) -> Self {
        EmbeddingMap {
            m,
            n,
            source,
            target,
            columns,
        }
    }

    /// All violations of unitality, injectivity, and multiplicativity.
    pub fn validate(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.columns.len() != self.source.dim() {
            out.push(format!(
                "{} columns for a {} dimensional source",
                self.columns.len(),
                self.source.dim()
            ));
            return out;
        }
        if self.apply(&self.source.unit()) != self.target.unit {
            out.push("not unital".to_string());
        }
        if rank(&self.columns) != self.source.dim() {
            out.push("not injective".to_string());
        }
        let d = self.source.dim();
        for i in 0..d {
            for j in 0..d {
                let lhs = self.apply(&self.source.mul_basis(i, j));
                let rhs = self.target.mul(&self.columns[i], &self.columns[j]);
                if lhs != rhs {
                    out.push(format!(
                        "not multiplicative at basis pair ({}, {})",
                        self.source.basis_label(i),
                        self.source.basis_label(j)
                    ));
                    return out;
                }
            }
        }
        out
    }

    pub fn apply(&self, e: &SparseVec) -> SparseVec {
        let mut acc = SparseVec::new();
        for (i, c) in e.iter() {
            acc = acc.add_scaled(&self.columns[*i], c);
        }
        acc
    }

    pub fn column(&self, i: usize) -> &SparseVec {
        &self.columns[i]
    }
}

/// Unital algebra map between product contexts, described by the images of
/// the source generators. Induction and restriction only ever consume the
/// map through these images.
pub struct Morphism {
    pub source: ProductAlgebra,
    pub target: ProductAlgebra,
    /// `gen_images[f][g]` is an element of the target product algebra.
    pub gen_images: Vec<Vec<SparseVec>>,
}

impl Morphism {
    /// rho_{m,n} as a morphism (A_m (x) A_n) -> A_{m+n}.
    pub fn from_embedding(e: &EmbeddingMap) -> Morphism {
        let target = ProductAlgebra::single(e.target.clone());
        let gen_images = e
            .source
            .factors
            .iter()
            .enumerate()
            .map(|(f, a)| {
                (0..a.generators.len())
                    .map(|g| e.apply(&e.source.generator_element(f, g)))
                    .collect()
            })
            .collect();
        Morphism {
            source: e.source.clone(),
            target,
            gen_images,
        }
    }

    pub fn image_of_generator(&self, factor: usize, g: usize) -> &SparseVec {
        &self.gen_images[factor][g]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::framework::algebra::AlgebraPresentation;

    fn idem_algebra(name: &str, degree: usize) -> Arc<AlgebraPresentation> {
        let e0 = SparseVec::unit(0);
        let e1 = SparseVec::unit(1);
        Arc::new(
            AlgebraPresentation::new(
                name.to_string(),
                degree,
                vec!["1".into(), "x".into()],
                e0.clone(),
                vec![vec![e0.clone(), e1.clone()], vec![e1.clone(), e1.clone()]],
                vec![("x".into(), 1)],
            )
            .unwrap(),
        )
    }

    /// Diagonal embedding of the idempotent line into itself along the first
    /// factor of a trivial pair: rho(a (x) 1) = a with a one dimensional
    /// second factor.
    #[test]
    fn embedding_validation_catches_corruption() {
        let a1 = idem_algebra("A1", 1);
        let a0 = AlgebraPresentation::one_dimensional("A0");
        let source = ProductAlgebra::new(vec![a1.clone(), a0]);
        let cols = vec![SparseVec::unit(0), SparseVec::unit(1)];
        let e = EmbeddingMap::new(1, 0, source.clone(), a1.clone(), cols).unwrap();
        assert_eq!(e.apply(&SparseVec::unit(1)), SparseVec::unit(1));

        // Swap the columns: 1 -> x is not unital.
        let bad_cols = vec![SparseVec::unit(1), SparseVec::unit(0)];
        let bad = EmbeddingMap::new_unchecked(1, 0, source.clone(), a1.clone(), bad_cols);
        let violations = bad.validate();
        assert!(violations
            .iter()
            .any(|v| v.contains("unital") || v.contains("multiplicative")));

        // Collapse both columns: not injective.
        let flat_cols = vec![SparseVec::unit(0), SparseVec::unit(0)];
        let flat = EmbeddingMap::new_unchecked(1, 0, source, a1, flat_cols);
        assert!(flat.validate().iter().any(|v| v.contains("injective")));
    }

    #[test]
    fn morphism_from_embedding_reads_generator_images() {
        let a1 = idem_algebra("A1", 1);
        let a0 = AlgebraPresentation::one_dimensional("A0");
        let source = ProductAlgebra::new(vec![a0, a1.clone()]);
        let cols = vec![SparseVec::unit(0), SparseVec::unit(1)];
        let e = EmbeddingMap::new(0, 1, source, a1, cols).unwrap();
        let phi = Morphism::from_embedding(&e);
        assert_eq!(phi.gen_images[0].len(), 0);
        assert_eq!(phi.gen_images[1].len(), 1);
        assert_eq!(*phi.image_of_generator(1, 0), SparseVec::unit(1));
    }
}
