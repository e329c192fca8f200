//! The zero Hecke tower: H_n(0) on the basis {T_sigma}, concatenation
//! embeddings, one dimensional simples C_I indexed by compositions, and
//! projective indecomposables M_I realized as left ideals with basis indexed
//! by the descent class of I.
//!
//! G_0 carries the shuffle product (descent compositions of shuffled minimal
//! coset words) and the cut coproduct; K_0 is computed from genuine module
//! inductions and restrictions and is the transpose structure under the
//! tautological pairing.

mod element;

pub use element::{box_of, eta, nu, nu_tail, HeckeElement};

use crate::comb::composition::{compositions_of, descent_composition, Composition};
use crate::comb::perm::{all_permutations, min_coset_reps, Permutation};
use crate::comb::word::{shuffle, Word};
use crate::error::{Result, TowerError};
use crate::framework::{
    induce_pair, restrict_pair, AlgebraPresentation, CosetReps, Decomposition, EmbeddingMap,
    ModuleRep, ProductAlgebra, Tower,
};
use crate::hopf::{BasisTag, GVec, HopfData, PairingMatrix, TVec};
use crate::linalg::{nullspace, rat, Matrix, RowReducer, SpanSolver, SparseVec};
use std::collections::{BTreeMap, BTreeSet};
use std::sync::{Arc, Mutex};

const ALGEBRA_CAP: usize = 5;
const MODULE_CAP: usize = 5;

pub struct HeckeTower {
    algebras: Mutex<BTreeMap<usize, Arc<AlgebraPresentation>>>,
    embeddings: Mutex<BTreeMap<(usize, usize), Arc<EmbeddingMap>>>,
    projectives: Mutex<BTreeMap<Composition, Arc<ModuleRep>>>,
}

impl HeckeTower {
    pub fn new() -> Self {
        HeckeTower {
            algebras: Mutex::new(BTreeMap::new()),
            embeddings: Mutex::new(BTreeMap::new()),
            projectives: Mutex::new(BTreeMap::new()),
        }
    }

    fn build_algebra(n: usize) -> Result<Arc<AlgebraPresentation>> {
        let perms = all_permutations(n);
        let dim = perms.len();
        let labels: Vec<String> = perms.iter().map(|s| format!("T[{s}]")).collect();
        let unit = SparseVec::unit(
            perms
                .binary_search(&Permutation::identity(n))
                .expect("identity in basis"),
        );
        let mut table = Vec::with_capacity(dim);
        for i in 0..dim {
            let mut row = Vec::with_capacity(dim);
            for j in 0..dim {
                let prod = HeckeElement::t(&perms[j]).left_mul_t(&perms[i]);
                row.push(prod.to_sparse(&perms));
            }
            table.push(row);
        }
        let generators = (1..n)
            .map(|i| {
                let s = Permutation::transposition(n, i);
                let idx = perms.binary_search(&s).expect("transposition in basis");
                (format!("T[{s}]"), idx)
            })
            .collect();
        Ok(Arc::new(AlgebraPresentation::new(
            format!("H{n}(0)"),
            n,
            labels,
            unit,
            table,
            generators,
        )?))
    }

    /// The left ideal generated by x, materialized on a deterministic basis
    /// (images of basis elements in lexicographic order).
    pub fn left_ideal(&self, x: &HeckeElement) -> Result<ModuleRep> {
        let n = x.n();
        let algebra = ProductAlgebra::single(self.algebra(n)?);
        let perms = all_permutations(n);
        let mut solver = SpanSolver::new(perms.len());
        let mut basis = Vec::new();
        for sigma in &perms {
            let w = x.left_mul_t(sigma);
            if !w.is_zero() && solver.insert(&w.to_sparse(&perms)) {
                basis.push(w);
            }
        }
        let actions = actions_on_basis(n, &perms, &solver, &basis)?;
        ModuleRep::new(algebra, basis.len(), vec![actions])
    }
}

/// Action matrices of the generators T_1..T_{n-1} on a spanning family of
/// independent elements already inserted into the solver.
fn actions_on_basis(
    n: usize,
    perms: &[Permutation],
    solver: &SpanSolver,
    basis: &[HeckeElement],
) -> Result<Vec<Matrix>> {
    let d = basis.len();
    let mut out = Vec::with_capacity(n.saturating_sub(1));
    for i in 1..n {
        let mut m = Matrix::zero(d, d);
        for (j, w) in basis.iter().enumerate() {
            let img = w.left_mul_gen(i);
            if img.is_zero() {
                continue;
            }
            let combo = solver.express(&img.to_sparse(perms)).ok_or_else(|| {
                TowerError::RankDeficient(format!("ideal basis is not closed under T_{i}"))
            })?;
            for (bi, c) in combo {
                m.set(bi, j, c);
            }
        }
        out.push(m);
    }
    Ok(out)
}

fn comp_of_tag(tag: &BasisTag) -> Result<Composition> {
    match tag {
        BasisTag::Composition(c) => Ok(c.clone()),
        _ => Err(TowerError::UnknownName {
            kind: "hecke0 tag",
            value: tag.to_string(),
        }),
    }
}

impl Default for HeckeTower {
    fn default() -> Self {
        HeckeTower::new()
    }
}

impl Tower for HeckeTower {
    fn name(&self) -> &'static str {
        "hecke0"
    }

    fn algebra_cap(&self) -> usize {
        ALGEBRA_CAP
    }

    fn module_cap(&self) -> usize {
        MODULE_CAP
    }

    fn algebra(&self, n: usize) -> Result<Arc<AlgebraPresentation>> {
        if n > ALGEBRA_CAP {
            return Err(TowerError::DegreeCap {
                degree: n,
                cap: ALGEBRA_CAP,
                what: "hecke0 algebras".to_string(),
            });
        }
        let mut cache = self.algebras.lock().unwrap();
        if let Some(a) = cache.get(&n) {
            return Ok(a.clone());
        }
        let a = Self::build_algebra(n)?;
        cache.insert(n, a.clone());
        Ok(a)
    }

    fn embedding(&self, m: usize, n: usize) -> Result<Arc<EmbeddingMap>> {
        if m + n > ALGEBRA_CAP {
            return Err(TowerError::DegreeCap {
                degree: m + n,
                cap: ALGEBRA_CAP,
                what: "hecke0 embeddings".to_string(),
            });
        }
        let mut cache = self.embeddings.lock().unwrap();
        if let Some(e) = cache.get(&(m, n)) {
            return Ok(e.clone());
        }
        let source = ProductAlgebra::new(vec![self.algebra(m)?, self.algebra(n)?]);
        let target = self.algebra(m + n)?;
        let (pm, pn, pt) = (
            all_permutations(m),
            all_permutations(n),
            all_permutations(m + n),
        );
        let mut columns = Vec::with_capacity(source.dim());
        for i in 0..source.dim() {
            let parts = source.unmix(i);
            let w = pm[parts[0]].concat(&pn[parts[1]]);
            columns.push(SparseVec::unit(
                pt.binary_search(&w).expect("concat in basis"),
            ));
        }
        let e = Arc::new(EmbeddingMap::new(m, n, source, target, columns)?);
        cache.insert((m, n), e.clone());
        Ok(e)
    }

    fn tags(&self, n: usize) -> Vec<BasisTag> {
        compositions_of(n)
            .into_iter()
            .map(BasisTag::Composition)
            .collect()
    }

    /// C_I is one dimensional: T_i acts by -1 on descents of I, by 0 off
    /// them.
    fn simple(&self, tag: &BasisTag) -> Result<Arc<ModuleRep>> {
        let i = comp_of_tag(tag)?;
        let n = i.weight();
        let algebra = ProductAlgebra::single(self.algebra(n)?);
        let descents = i.descent_set();
        let actions: Vec<Matrix> = (1..n)
            .map(|g| {
                Matrix::from_fn(1, 1, |_, _| {
                    if descents.contains(&g) {
                        rat(-1)
                    } else {
                        rat(0)
                    }
                })
            })
            .collect();
        Ok(Arc::new(ModuleRep::new(algebra, 1, vec![actions])?))
    }

    /// M_I on its descent-class basis {T_sigma box : sigma in the class};
    /// failure of independence or closure would falsify the basis statement
    /// and is fatal.
    fn projective(&self, tag: &BasisTag) -> Result<Arc<ModuleRep>> {
        let i = comp_of_tag(tag)?;
        {
            let cache = self.projectives.lock().unwrap();
            if let Some(p) = cache.get(&i) {
                return Ok(p.clone());
            }
        }
        let n = i.weight();
        let algebra = ProductAlgebra::single(self.algebra(n)?);
        let perms = all_permutations(n);
        let tail = box_of(&nu_tail(&i));
        let mut solver = SpanSolver::new(perms.len());
        let mut basis = Vec::new();
        for sigma in i.descent_class() {
            let w = tail.left_mul_t(&sigma);
            if !solver.insert(&w.to_sparse(&perms)) {
                return Err(TowerError::RankDeficient(format!(
                    "descent-class basis of the projective for {i} is dependent at {sigma}"
                )));
            }
            basis.push(w);
        }
        let actions = actions_on_basis(n, &perms, &solver, &basis)?;
        let p = Arc::new(ModuleRep::new(algebra, basis.len(), vec![actions])?);
        self.projectives.lock().unwrap().insert(i, p.clone());
        Ok(p)
    }

    /// Composition series by iterated common-eigenvector filtration: every
    /// simple is one dimensional with generator eigenvalues -1 on descents
    /// and 0 elsewhere, so the socle always meets some sign pattern; take
    /// that simultaneous eigenspace, quotient, repeat.
    fn decompose_simples(&self, module: &ModuleRep) -> Result<Decomposition> {
        let ctx = module.context();
        let tuples = crate::framework::tag_tuples(self, &ctx);
        let mut patterns = Vec::with_capacity(tuples.len());
        for tuple in tuples {
            let mut p = Vec::new();
            for (f, t) in tuple.iter().enumerate() {
                let descents = comp_of_tag(t)?.descent_set();
                for g in 1..ctx[f] {
                    p.push(if descents.contains(&g) {
                        rat(-1)
                    } else {
                        rat(0)
                    });
                }
            }
            patterns.push((tuple, p));
        }
        let gens = module.algebra.generators();
        let mut acts: Vec<Matrix> = gens
            .iter()
            .map(|&(f, g)| module.generator_action(f, g).clone())
            .collect();
        let mut dim = module.dim;
        let mut out = Decomposition::new();
        while dim > 0 {
            let mut advanced = false;
            for (tuple, pattern) in &patterns {
                let mut rows = Vec::with_capacity(acts.len() * dim);
                for (a, p) in acts.iter().zip(pattern) {
                    for r in 0..dim {
                        let mut row = a.row_vec(r);
                        if !num_traits::Zero::is_zero(p) {
                            row = row.sub(&SparseVec::single(r, p.clone()));
                        }
                        rows.push(row);
                    }
                }
                let null = nullspace(&rows, dim);
                if null.is_empty() {
                    continue;
                }
                *out.entry(tuple.clone()).or_insert(0) += null.len() as i64;
                let (ndim, nacts) = quotient_actions(&acts, &null, dim);
                dim = ndim;
                acts = nacts;
                advanced = true;
                break;
            }
            if !advanced {
                return Err(TowerError::DecompositionFailed(
                    "no common eigenvector on a nonzero module; the action must violate the \
                     defining relations"
                        .into(),
                ));
            }
        }
        Ok(out)
    }

    /// Minimal coset representatives: length additivity makes every product
    /// T_w rho(T_u (x) T_v) a single basis element, so freeness is immediate.
    fn coset_reps(&self, m: usize, n: usize) -> Result<CosetReps> {
        let perms = all_permutations(m + n);
        let lookup = |w: &Permutation| SparseVec::unit(perms.binary_search(w).expect("in basis"));
        let reps = min_coset_reps(m, n);
        let right: Vec<SparseVec> = reps.iter().map(&lookup).collect();
        let left: Vec<SparseVec> = reps.iter().map(|w| lookup(&w.inverse())).collect();
        Ok(CosetReps { right, left })
    }
}

/// Quotient of each action matrix by the span of an invariant subspace,
/// expressed on the complementary (non pivot) coordinates.
fn quotient_actions(acts: &[Matrix], invariant: &[SparseVec], dim: usize) -> (usize, Vec<Matrix>) {
    let mut red = RowReducer::new();
    for v in invariant {
        red.insert(v);
    }
    let pivots = red.pivot_cols();
    let free: Vec<usize> = (0..dim)
        .filter(|c| pivots.binary_search(c).is_err())
        .collect();
    let out = acts
        .iter()
        .map(|a| {
            let mut m = Matrix::zero(free.len(), free.len());
            for (j, &fj) in free.iter().enumerate() {
                let w = red.reduce(&a.col(fj));
                for (i, &fi) in free.iter().enumerate() {
                    if let Some(c) = w.get(fi) {
                        m.set(i, j, c.clone());
                    }
                }
            }
            m
        })
        .collect();
    (free.len(), out)
}

/// Shuffle-formula product on G_0: shuffle a minimal word with descent set
/// D(I) against one with descent set D(J) on the shifted alphabet and read
/// off descent compositions.
pub fn g0_product_shuffle(i: &Composition, j: &Composition) -> GVec {
    let m = i.weight();
    let u = Word::new(i.alpha().window().to_vec()).expect("window letters distinct");
    let v = Word::new(j.alpha().window().iter().map(|x| x + m).collect())
        .expect("shifted letters distinct");
    let mut out = GVec::zero();
    for w in shuffle(&u, &v).expect("alphabets disjoint") {
        let p = Permutation::from_window(w.letters().to_vec()).expect("shuffle is a window");
        out.add_term(BasisTag::Composition(descent_composition(&p)), 1);
    }
    out
}

/// Cut coproduct on G_0: split [1,n] at every k, restricting the descent
/// set to each side.
pub fn g0_cut_coproduct(i: &Composition) -> TVec {
    let n = i.weight();
    let d = i.descent_set();
    let mut out = TVec::zero();
    for k in 0..=n {
        let d1: BTreeSet<usize> = d.iter().copied().filter(|&x| x < k).collect();
        let d2: BTreeSet<usize> = d
            .iter()
            .copied()
            .filter(|&x| x > k)
            .map(|x| x - k)
            .collect();
        out.add_term(
            BasisTag::Composition(Composition::from_descent_set(k, &d1)),
            BasisTag::Composition(Composition::from_descent_set(n - k, &d2)),
            1,
        );
    }
    out
}

fn composition_basis(max_degree: usize) -> Vec<Vec<BasisTag>> {
    (0..=max_degree)
        .map(|n| {
            compositions_of(n)
                .into_iter()
                .map(BasisTag::Composition)
                .collect()
        })
        .collect()
}

/// Structure constants of G_0: shuffle product, cut coproduct.
pub fn hecke_g0_data(max_degree: usize) -> Result<HopfData> {
    HopfData::from_fns(
        "hecke0 G0",
        composition_basis(max_degree),
        |a, b| {
            let (Ok(i), Ok(j)) = (comp_of_tag(a), comp_of_tag(b)) else {
                unreachable!("hecke0 tags are compositions")
            };
            g0_product_shuffle(&i, &j)
        },
        |t| {
            let Ok(i) = comp_of_tag(t) else {
                unreachable!("hecke0 tags are compositions")
            };
            g0_cut_coproduct(&i)
        },
    )
}

/// Structure constants of K_0 computed from the modules themselves: induce
/// tensor products of projectives and decompose by Hom counts against the
/// simples; restrict projectives for the coproduct.
pub fn hecke_k0_data(tower: &HeckeTower, max_degree: usize) -> Result<HopfData> {
    let mut products: BTreeMap<(BasisTag, BasisTag), GVec> = BTreeMap::new();
    for m in 0..=max_degree {
        for n in 0..=max_degree - m {
            for i in compositions_of(m) {
                for j in compositions_of(n) {
                    let (ti, tj) = (
                        BasisTag::Composition(i.clone()),
                        BasisTag::Composition(j.clone()),
                    );
                    let (pi, pj) = (tower.projective(&ti)?, tower.projective(&tj)?);
                    let w = ModuleRep::tensor(&pi, &pj);
                    let ind = induce_pair(tower, m, n, &w)?;
                    let dec = crate::framework::decompose_projectives_via_hom(tower, &ind)?;
                    let mut g = GVec::zero();
                    for (tuple, mult) in dec {
                        g.add_term(tuple[0].clone(), mult);
                    }
                    products.insert((ti, tj), g);
                }
            }
        }
    }
    let mut coproducts: BTreeMap<BasisTag, TVec> = BTreeMap::new();
    for n in 0..=max_degree {
        for i in compositions_of(n) {
            let tag = BasisTag::Composition(i);
            let p = tower.projective(&tag)?;
            let mut t = TVec::zero();
            for k in 0..=n {
                let res = restrict_pair(tower, k, n - k, &p)?;
                let dec = crate::framework::decompose_projectives_via_hom(tower, &res)?;
                for (tuple, mult) in dec {
                    t.add_term(tuple[0].clone(), tuple[1].clone(), mult);
                }
            }
            coproducts.insert(tag, t);
        }
    }
    HopfData::from_fns(
        "hecke0 K0",
        composition_basis(max_degree),
        move |a, b| products[&(a.clone(), b.clone())].clone(),
        move |t| coproducts[t].clone(),
    )
}

/// The pairing of K_0 with G_0 in the (M_I, C_J) bases is the identity.
pub fn hecke_pairing(max_degree: usize) -> PairingMatrix {
    let sizes: Vec<usize> = (0..=max_degree).map(|n| compositions_of(n).len()).collect();
    PairingMatrix::identity(&sizes)
}
