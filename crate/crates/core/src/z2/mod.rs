//! The idempotent-word tower: A_n has basis {e_w : w a {T,S}-word of length
//! n} with e_u e_v = delta_{uv} e_u, unit sum_w e_w, and concatenation
//! embeddings, which are isomorphisms A_m (x) A_n = A_{m+n}.
//!
//! Every simple is one dimensional and projective, so G_0 and K_0 agree; the
//! induced product on them is concatenation of words, which is noncommutative
//! and makes the coproduct non-multiplicative. This tower is the negative
//! example of the suite: the Mackey compatibility and the bialgebra law both
//! fail with small explicit witnesses, while the generalized compatibility
//! holds.

use crate::comb::word::{ts_words_of, TsWord};
use crate::error::{Result, TowerError};
use crate::framework::{
    AlgebraPresentation, CosetReps, Decomposition, EmbeddingMap, ModuleRep, ProductAlgebra, Tower,
};
use crate::hopf::{BasisTag, GVec, HopfData, PairingMatrix, TVec};
use crate::linalg::{Matrix, SparseVec};
use std::collections::BTreeMap;
use std::sync::{Arc, Mutex};

const ALGEBRA_CAP: usize = 6;
const MODULE_CAP: usize = 6;

pub struct Z2Tower {
    algebras: Mutex<BTreeMap<usize, Arc<AlgebraPresentation>>>,
    embeddings: Mutex<BTreeMap<(usize, usize), Arc<EmbeddingMap>>>,
}

impl Z2Tower {
    pub fn new() -> Self {
        Z2Tower {
            algebras: Mutex::new(BTreeMap::new()),
            embeddings: Mutex::new(BTreeMap::new()),
        }
    }

    fn build_algebra(n: usize) -> Result<Arc<AlgebraPresentation>> {
        let words = ts_words_of(n);
        let dim = words.len();
        let labels: Vec<String> = words.iter().map(|w| format!("e[{w}]")).collect();
        let unit = SparseVec::from_entries((0..dim).map(|i| (i, crate::linalg::rat(1))));
        let mut table = Vec::with_capacity(dim);
        for i in 0..dim {
            let mut row = Vec::with_capacity(dim);
            for j in 0..dim {
                row.push(if i == j {
                    SparseVec::unit(i)
                } else {
                    SparseVec::new()
                });
            }
            table.push(row);
        }
        // The idempotents only generate as a unital algebra if all of them
        // are declared; any proper subset spans a proper subalgebra.
        let generators = labels.iter().cloned().zip(0..dim).collect();
        Ok(Arc::new(AlgebraPresentation::new(
            format!("Z2[{n}]"),
            n,
            labels,
            unit,
            table,
            generators,
        )?))
    }

    fn word_index(words: &[TsWord], w: &TsWord) -> usize {
        words.binary_search(w).expect("word in basis")
    }
}

impl Default for Z2Tower {
    fn default() -> Self {
        Z2Tower::new()
    }
}

impl Tower for Z2Tower {
    fn name(&self) -> &'static str {
        "z2"
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
                what: "z2 algebras".to_string(),
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
                what: "z2 embeddings".to_string(),
            });
        }
        let mut cache = self.embeddings.lock().unwrap();
        if let Some(e) = cache.get(&(m, n)) {
            return Ok(e.clone());
        }
        let source = ProductAlgebra::new(vec![self.algebra(m)?, self.algebra(n)?]);
        let target = self.algebra(m + n)?;
        let (wm, wn, wt) = (ts_words_of(m), ts_words_of(n), ts_words_of(m + n));
        let mut columns = Vec::with_capacity(source.dim());
        for i in 0..source.dim() {
            let parts = source.unmix(i);
            let w = wm[parts[0]].concat(&wn[parts[1]]);
            columns.push(SparseVec::unit(Self::word_index(&wt, &w)));
        }
        let e = Arc::new(EmbeddingMap::new(m, n, source, target, columns)?);
        cache.insert((m, n), e.clone());
        Ok(e)
    }

    fn tags(&self, n: usize) -> Vec<BasisTag> {
        ts_words_of(n).into_iter().map(BasisTag::TsWord).collect()
    }

    fn simple(&self, tag: &BasisTag) -> Result<Arc<ModuleRep>> {
        let BasisTag::TsWord(w) = tag else {
            return Err(TowerError::UnknownName {
                kind: "z2 tag",
                value: tag.to_string(),
            });
        };
        let n = w.len();
        let algebra = ProductAlgebra::single(self.algebra(n)?);
        let words = ts_words_of(n);
        let me = Self::word_index(&words, w);
        let actions: Vec<Matrix> = (0..words.len())
            .map(|g| Matrix::from_fn(1, 1, |_, _| crate::linalg::rat(i64::from(g == me))))
            .collect();
        Ok(Arc::new(ModuleRep::new(algebra, 1, vec![actions])?))
    }

    fn projective(&self, tag: &BasisTag) -> Result<Arc<ModuleRep>> {
        // Semisimple: every simple is its own projective cover.
        self.simple(tag)
    }

    fn decompose_simples(&self, module: &ModuleRep) -> Result<Decomposition> {
        let ctx = module.context();
        let mut out = Decomposition::new();
        let mut total = 0i64;
        for tuple in crate::framework::tag_tuples(self, &ctx) {
            let parts: Vec<SparseVec> = tuple
                .iter()
                .map(|t| {
                    let BasisTag::TsWord(w) = t else {
                        unreachable!("z2 tags are words")
                    };
                    let words = ts_words_of(w.len());
                    SparseVec::unit(Self::word_index(&words, w))
                })
                .collect();
            let refs: Vec<&SparseVec> = parts.iter().collect();
            let idem = module.algebra.kron(&refs);
            let act = module.element_action(&idem)?;
            let trace = act.trace();
            if !trace.is_integer() {
                return Err(TowerError::DecompositionFailed(format!(
                    "idempotent trace {trace} is not an integer"
                )));
            }
            let mult: i64 = trace
                .to_integer()
                .try_into()
                .map_err(|_| TowerError::DecompositionFailed("trace overflow".into()))?;
            if mult < 0 {
                return Err(TowerError::DecompositionFailed(format!(
                    "negative multiplicity {mult}"
                )));
            }
            if mult > 0 {
                total += mult;
                out.insert(tuple, mult);
            }
        }
        if total != module.dim as i64 {
            return Err(TowerError::DecompositionFailed(format!(
                "multiplicities total {total} but module dimension is {}",
                module.dim
            )));
        }
        Ok(out)
    }

    fn coset_reps(&self, m: usize, n: usize) -> Result<CosetReps> {
        // The embedding is onto, so the unit is the only representative.
        let unit = self.algebra(m + n)?.unit.clone();
        Ok(CosetReps {
            right: vec![unit.clone()],
            left: vec![unit],
        })
    }
}

/// Structure constants of G_0 = K_0: concatenation product and
/// deconcatenation coproduct on {T,S}-words.
pub fn z2_hopf_data(max_degree: usize) -> Result<HopfData> {
    let basis: Vec<Vec<BasisTag>> = (0..=max_degree)
        .map(|n| ts_words_of(n).into_iter().map(BasisTag::TsWord).collect())
        .collect();
    HopfData::from_fns(
        "z2 G0",
        basis,
        |a, b| {
            let (BasisTag::TsWord(u), BasisTag::TsWord(v)) = (a, b) else {
                unreachable!("z2 tags are words")
            };
            GVec::from_tag(BasisTag::TsWord(u.concat(v)))
        },
        |t| {
            let BasisTag::TsWord(w) = t else {
                unreachable!("z2 tags are words")
            };
            let mut out = TVec::zero();
            for k in 0..=w.len() {
                out.add_term(
                    BasisTag::TsWord(w.prefix(k)),
                    BasisTag::TsWord(w.suffix_from(k)),
                    1,
                );
            }
            out
        },
    )
}

/// The canonical pairing of K_0 with G_0 is the identity in the word basis.
pub fn z2_pairing(max_degree: usize) -> PairingMatrix {
    let sizes: Vec<usize> = (0..=max_degree).map(|n| 1usize << n).collect();
    PairingMatrix::identity(&sizes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::comb::word::Ts;
    use crate::framework::checks::{
        check_condition3, check_condition5, check_conditions12, check_pairing, Group,
    };
    use crate::framework::{hom_dim, induce_pair, restrict_pair};
    use crate::hopf::checks::{check_as_as, check_bialgebra, check_duality};

    fn tag(text: &str) -> BasisTag {
        BasisTag::TsWord(TsWord::parse(text).unwrap())
    }

    #[test]
    fn algebra_shapes_and_validity() {
        let t = Z2Tower::new();
        for n in 0..=4 {
            let a = t.algebra(n).unwrap();
            assert_eq!(a.dim, 1 << n);
            assert!(a.validate().is_empty());
        }
        assert!(t.algebra(9).is_err());
    }

    #[test]
    fn conditions_1_2_3_pass() {
        let t = Z2Tower::new();
        let r = check_conditions12(&t, 4).unwrap();
        assert!(r.passed(), "first failure: {:?}", r.first_failure());
        let r = check_condition3(&t, 4).unwrap();
        assert!(r.passed(), "first failure: {:?}", r.first_failure());
    }

    #[test]
    fn pairing_is_orthonormal() {
        let t = Z2Tower::new();
        let r = check_pairing(&t, 3).unwrap();
        assert!(r.passed());
    }

    #[test]
    fn induction_concatenates_and_restriction_deconcatenates() {
        let t = Z2Tower::new();
        let m = t.simple(&tag("T")).unwrap();
        let n = t.simple(&tag("S")).unwrap();
        let w = ModuleRep::tensor(&m, &n);
        let ind = induce_pair(&t, 1, 1, &w).unwrap();
        assert_eq!(ind.dim, 1);
        let simple_ts = t.simple(&tag("TS")).unwrap();
        assert_eq!(hom_dim(&ind, &simple_ts).unwrap(), 1);

        let res = restrict_pair(&t, 1, 1, &simple_ts).unwrap();
        let d = t.decompose_simples(&res).unwrap();
        assert_eq!(d, Decomposition::from([(vec![tag("T"), tag("S")], 1)]));
    }

    #[test]
    fn condition5_fails_with_the_documented_witness() {
        let t = Z2Tower::new();
        let r = check_condition5(&t, Group::G0, 2).unwrap();
        assert!(!r.passed());
        let witness = r
            .cells
            .iter()
            .find(|c| {
                c.inputs["m"] == "1"
                    && c.inputs["n"] == "1"
                    && c.inputs["k"] == "1"
                    && c.inputs["M"] == "T"
                    && c.inputs["N"] == "S"
            })
            .expect("witness cell present");
        assert!(!witness.equal);
        assert_eq!(witness.lhs, serde_json::json!({"T (x) S": "1"}));
        assert_eq!(
            witness.rhs,
            serde_json::json!({"S (x) T": "1", "T (x) S": "1"})
        );
        // The K0 sweep fails identically: projectives are the simples.
        let rk = check_condition5(&t, Group::K0, 2).unwrap();
        assert!(!rk.passed());
    }

    #[test]
    fn grothendieck_data_fails_bialgebra_but_satisfies_as_as() {
        let h = z2_hopf_data(4).unwrap();
        let r = check_bialgebra(&h, 4).unwrap();
        assert!(!r.passed());
        let bad = r.first_failure().unwrap();
        assert_eq!(bad.inputs["identity"], "compatibility");
        // Only compatibility cells fail.
        for c in r.failures() {
            assert_eq!(c.inputs["identity"], "compatibility");
        }
        let r = check_as_as(&h, 4).unwrap();
        assert!(r.passed(), "first failure: {:?}", r.first_failure());
    }

    #[test]
    fn g0_and_k0_are_dual_under_the_identity_pairing() {
        let g = z2_hopf_data(4).unwrap();
        let k = z2_hopf_data(4).unwrap();
        let p = z2_pairing(4);
        let r = check_duality(&k, &g, &p, 4).unwrap();
        assert!(r.passed(), "first failure: {:?}", r.first_failure());
    }

    #[test]
    fn word_order_is_lexicographic_with_t_first() {
        let t = Z2Tower::new();
        let tags = t.tags(2);
        let names: Vec<String> = tags.iter().map(|x| x.to_string()).collect();
        assert_eq!(names, vec!["TT", "TS", "ST", "SS"]);
        let a = t.algebra(1).unwrap();
        assert_eq!(a.basis_labels, vec!["e[T]", "e[S]"]);
        assert_eq!(ts_words_of(1)[0].letters(), &[Ts::T]);
    }
}
