//! The symmetric group tower: group algebras of S_n on the permutation
//! basis with concatenation embeddings. Simples are materialized in
//! seminormal form at small degree; all Grothendieck structure is driven by
//! exact character tables, which is what makes the degree 5 and 6 sweeps
//! cheap. Semisimplicity makes G_0 = K_0 and the tower self dual: the
//! induced product and coproduct are adjoint under the identity pairing in
//! the irreducible basis.

pub mod chars;
pub mod young;

use crate::comb::partition::{partitions_of, Partition};
use crate::comb::perm::{all_permutations, min_coset_reps, Permutation};
use crate::error::{Result, TowerError};
use crate::framework::checks::{jdecomp, Group};
use crate::framework::{
    AlgebraPresentation, CosetReps, Decomposition, EmbeddingMap, ModuleRep, ProductAlgebra, Tower,
};
use crate::hopf::report::{jint, jobj, jstr, Cell, Report};
use crate::hopf::{BasisTag, GVec, HopfData, PairingMatrix, TVec};
use crate::linalg::{rat, Matrix, Rat, SparseVec};
use crate::par::par_map;
use chars::{
    class_tuples, decompose, induce_two, restrict_two, twisted_induce_four, CharCache, ClassFn,
    CHAR_CAP,
};
use num_traits::Zero;
use std::collections::BTreeMap;
use std::sync::{Arc, Mutex};

const ALGEBRA_CAP: usize = 5;
const MODULE_CAP: usize = 4;

pub struct SymTower {
    algebras: Mutex<BTreeMap<usize, Arc<AlgebraPresentation>>>,
    embeddings: Mutex<BTreeMap<(usize, usize), Arc<EmbeddingMap>>>,
    simples: Mutex<BTreeMap<Partition, Arc<ModuleRep>>>,
    pub chars: CharCache,
}

impl SymTower {
    pub fn new() -> Self {
        SymTower {
            algebras: Mutex::new(BTreeMap::new()),
            embeddings: Mutex::new(BTreeMap::new()),
            simples: Mutex::new(BTreeMap::new()),
            chars: CharCache::new(),
        }
    }

    fn build_algebra(n: usize) -> Result<Arc<AlgebraPresentation>> {
        let perms = all_permutations(n);
        let dim = perms.len();
        let labels: Vec<String> = perms.iter().map(|s| format!("g[{s}]")).collect();
        let unit = SparseVec::unit(
            perms
                .binary_search(&Permutation::identity(n))
                .expect("identity in basis"),
        );
        let mut table = Vec::with_capacity(dim);
        for i in 0..dim {
            let mut row = Vec::with_capacity(dim);
            for j in 0..dim {
                let prod = perms[i].compose(&perms[j]);
                row.push(SparseVec::unit(
                    perms.binary_search(&prod).expect("product in basis"),
                ));
            }
            table.push(row);
        }
        let generators = (1..n)
            .map(|i| {
                let s = Permutation::transposition(n, i);
                let idx = perms.binary_search(&s).expect("transposition in basis");
                (format!("g[{s}]"), idx)
            })
            .collect();
        Ok(Arc::new(AlgebraPresentation::new(
            format!("CS{n}"),
            n,
            labels,
            unit,
            table,
            generators,
        )?))
    }
}

fn part_of_tag(tag: &BasisTag) -> Result<Partition> {
    match tag {
        BasisTag::Partition(p) => Ok(p.clone()),
        _ => Err(TowerError::UnknownName {
            kind: "sym tag",
            value: tag.to_string(),
        }),
    }
}

/// A permutation of cycle type mu, cycling consecutive blocks.
pub fn class_representative(mu: &Partition) -> Permutation {
    let n = mu.weight();
    let mut window = vec![0usize; n];
    let mut offset = 0;
    for &c in mu.parts() {
        for i in 0..c {
            window[offset + i] = offset + 1 + ((i + 1) % c);
        }
        offset += c;
    }
    Permutation::from_window(window).expect("cycle blocks give a window")
}

impl Default for SymTower {
    fn default() -> Self {
        SymTower::new()
    }
}

impl Tower for SymTower {
    fn name(&self) -> &'static str {
        "sym"
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
                what: "symmetric group algebras".to_string(),
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
                what: "symmetric group embeddings".to_string(),
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
        partitions_of(n)
            .into_iter()
            .map(BasisTag::Partition)
            .collect()
    }

    fn simple(&self, tag: &BasisTag) -> Result<Arc<ModuleRep>> {
        let lambda = part_of_tag(tag)?;
        {
            let cache = self.simples.lock().unwrap();
            if let Some(m) = cache.get(&lambda) {
                return Ok(m.clone());
            }
        }
        let n = lambda.weight();
        let algebra = ProductAlgebra::single(self.algebra(n)?);
        let (tabs, mats) = young::seminormal_action(&lambda);
        let m = Arc::new(ModuleRep::new(algebra, tabs.len(), vec![mats])?);
        self.simples.lock().unwrap().insert(lambda, m.clone());
        Ok(m)
    }

    /// Semisimple: projective covers are the simples themselves.
    fn projective(&self, tag: &BasisTag) -> Result<Arc<ModuleRep>> {
        self.simple(tag)
    }

    /// Multiplicities by character inner products: trace the action of one
    /// class representative per class tuple and pair against the table.
    fn decompose_simples(&self, module: &ModuleRep) -> Result<Decomposition> {
        let ctx = module.context();
        let tables = ctx
            .iter()
            .map(|&d| self.chars.table(d))
            .collect::<Result<Vec<_>>>()?;
        let tuples = class_tuples(&ctx);
        let mut traces: Vec<Rat> = Vec::with_capacity(tuples.len());
        for tuple in &tuples {
            let mut act = Matrix::identity(module.dim);
            for (f, mu) in tuple.iter().enumerate() {
                for i in class_representative(mu).reduced_word() {
                    act = act.mul(module.generator_action(f, i - 1));
                }
            }
            traces.push(act.trace());
        }
        let mut out = Decomposition::new();
        let mut total = 0i64;
        for lam_tuple in crate::framework::tag_tuples(self, &ctx) {
            let lams: Vec<Partition> = lam_tuple.iter().map(part_of_tag).collect::<Result<_>>()?;
            let mut acc = rat(0);
            for (tuple, tr) in tuples.iter().zip(&traces) {
                if tr.is_zero() {
                    continue;
                }
                let mut term = tr.clone();
                for ((lam, mu), t) in lams.iter().zip(tuple).zip(&tables) {
                    term *= rat(t.value(lam, mu)) / mu.z();
                }
                acc += term;
            }
            if acc.is_zero() {
                continue;
            }
            if !acc.is_integer() {
                return Err(TowerError::DecompositionFailed(format!(
                    "multiplicity {acc} is not an integer"
                )));
            }
            let mult: i64 = acc
                .to_integer()
                .try_into()
                .map_err(|_| TowerError::DecompositionFailed("multiplicity overflow".into()))?;
            if mult < 0 {
                return Err(TowerError::DecompositionFailed(format!(
                    "negative multiplicity {mult}"
                )));
            }
            let dim: i64 = lams
                .iter()
                .zip(&tables)
                .map(|(l, t)| t.dimension(l))
                .product();
            total += mult * dim;
            out.insert(lam_tuple, mult);
        }
        if total != module.dim as i64 {
            return Err(TowerError::DecompositionFailed(format!(
                "character multiplicities account for dimension {total}, module has {}",
                module.dim
            )));
        }
        Ok(out)
    }

    /// Minimal length coset representatives; every product of a
    /// representative with an embedded basis element is a distinct group
    /// element, so freeness is a bijection count.
    fn coset_reps(&self, m: usize, n: usize) -> Result<CosetReps> {
        let perms = all_permutations(m + n);
        let lookup = |w: &Permutation| SparseVec::unit(perms.binary_search(w).expect("in basis"));
        let reps = min_coset_reps(m, n);
        let right: Vec<SparseVec> = reps.iter().map(&lookup).collect();
        let left: Vec<SparseVec> = reps.iter().map(|w| lookup(&w.inverse())).collect();
        Ok(CosetReps { right, left })
    }
}

fn partition_basis(max_degree: usize) -> Vec<Vec<BasisTag>> {
    (0..=max_degree)
        .map(|n| {
            partitions_of(n)
                .into_iter()
                .map(BasisTag::Partition)
                .collect()
        })
        .collect()
}

/// Structure constants of G_0 = K_0 from character arithmetic: induction
/// product and restriction coproduct in the irreducible basis.
pub fn sym_hopf_data(tower: &SymTower, max_degree: usize) -> Result<HopfData> {
    let cache = &tower.chars;
    let mut products: BTreeMap<(BasisTag, BasisTag), GVec> = BTreeMap::new();
    for m in 0..=max_degree {
        for n in 0..=max_degree - m {
            let (tm, tn) = (cache.table(m)?, cache.table(n)?);
            for lam in &tm.parts {
                for mu in &tn.parts {
                    let phi = ClassFn::outer(
                        &ClassFn::irreducible(&tm, lam),
                        &ClassFn::irreducible(&tn, mu),
                    );
                    let mut g = GVec::zero();
                    for (tuple, mult) in decompose(cache, &induce_two(&phi))? {
                        g.add_term(BasisTag::Partition(tuple[0].clone()), mult);
                    }
                    products.insert(
                        (
                            BasisTag::Partition(lam.clone()),
                            BasisTag::Partition(mu.clone()),
                        ),
                        g,
                    );
                }
            }
        }
    }
    let mut coproducts: BTreeMap<BasisTag, TVec> = BTreeMap::new();
    for n in 0..=max_degree {
        let t = cache.table(n)?;
        for lam in &t.parts {
            let phi = ClassFn::irreducible(&t, lam);
            let mut out = TVec::zero();
            for k in 0..=n {
                for (tuple, mult) in decompose(cache, &restrict_two(&phi, k))? {
                    out.add_term(
                        BasisTag::Partition(tuple[0].clone()),
                        BasisTag::Partition(tuple[1].clone()),
                        mult,
                    );
                }
            }
            coproducts.insert(BasisTag::Partition(lam.clone()), out);
        }
    }
    HopfData::from_fns(
        "sym G0",
        partition_basis(max_degree),
        move |a, b| products[&(a.clone(), b.clone())].clone(),
        move |t| coproducts[t].clone(),
    )
}

/// The pairing of K_0 = G_0 with itself is the identity in the irreducible
/// basis: self duality.
pub fn sym_pairing(max_degree: usize) -> PairingMatrix {
    let sizes: Vec<usize> = (0..=max_degree).map(|n| partitions_of(n).len()).collect();
    PairingMatrix::identity(&sizes)
}

struct CharCell {
    m: usize,
    n: usize,
    k: usize,
    lam: Partition,
    mu: Partition,
}

/// The Mackey compatibility sweep at character level: the same cells as the
/// module sweep, but with induction and restriction computed by class
/// function arithmetic, which reaches degree 5 and 6 cheaply. G_0 and K_0
/// coincide here, so the group only labels the report.
pub fn sym_condition5_characters(
    tower: &SymTower,
    group: Group,
    max_degree: usize,
) -> Result<Report> {
    if max_degree > CHAR_CAP {
        return Err(TowerError::DegreeCap {
            degree: max_degree,
            cap: CHAR_CAP,
            what: "sym character sweep".to_string(),
        });
    }
    let cache = &tower.chars;
    let mut jobs = Vec::new();
    for m in 1..=max_degree.saturating_sub(1) {
        for n in 1..=max_degree - m {
            for k in 1..m + n {
                for lam in partitions_of(m) {
                    for mu in partitions_of(n) {
                        jobs.push(CharCell {
                            m,
                            n,
                            k,
                            lam: lam.clone(),
                            mu,
                        });
                    }
                }
            }
        }
    }
    let cells = par_map(jobs, |job| char_condition5_cell(cache, &job));
    let mut report = Report::new(jobj(vec![
        ("check", jstr("condition_5")),
        ("tower", jstr("sym")),
        ("group", jstr(group.name())),
        ("route", jstr("characters")),
        ("max_degree", jint(max_degree as i64)),
    ]));
    for c in cells {
        report.push(c?);
    }
    Ok(report)
}

fn to_decomposition(map: BTreeMap<Vec<Partition>, i64>) -> Decomposition {
    map.into_iter()
        .map(|(tuple, mult)| {
            (
                tuple
                    .into_iter()
                    .map(BasisTag::Partition)
                    .collect::<Vec<_>>(),
                mult,
            )
        })
        .collect()
}

fn char_condition5_cell(cache: &CharCache, job: &CharCell) -> Result<Cell> {
    let CharCell { m, n, k, lam, mu } = job;
    let (m, n, k) = (*m, *n, *k);
    let (tm, tn) = (cache.table(m)?, cache.table(n)?);
    let chi_m = ClassFn::irreducible(&tm, lam);
    let chi_n = ClassFn::irreducible(&tn, mu);

    let induced = induce_two(&ClassFn::outer(&chi_m, &chi_n));
    let lhs = to_decomposition(decompose(cache, &restrict_two(&induced, k))?);

    let mut rhs = Decomposition::new();
    let t_lo = k.saturating_sub(n);
    let t_hi = k.min(m);
    for t in t_lo..=t_hi {
        let s = k - t;
        let four = ClassFn::outer(&restrict_two(&chi_m, t), &restrict_two(&chi_n, s));
        let two = twisted_induce_four(&four);
        for (tuple, mult) in decompose(cache, &two)? {
            let key: Vec<BasisTag> = tuple.into_iter().map(BasisTag::Partition).collect();
            *rhs.entry(key).or_insert(0) += mult;
        }
    }
    rhs.retain(|_, v| *v != 0);

    Ok(Cell::new(
        jobj(vec![
            ("identity", jstr("mackey_compatibility")),
            ("m", jint(m as i64)),
            ("n", jint(n as i64)),
            ("k", jint(k as i64)),
            ("M", jstr(lam)),
            ("N", jstr(mu)),
        ]),
        jdecomp(&lhs),
        jdecomp(&rhs),
    ))
}
