//! Graded (co)algebra data on Grothendieck groups, with exact integer
//! structure constants, and the antipode recursion.

pub mod checks;
pub mod report;

use crate::comb::{Composition, Partition, TsWord};
use crate::error::{Result, TowerError};
use std::collections::BTreeMap;
use std::fmt;

/// Basis label for a Grothendieck group component.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BasisTag {
    Partition(Partition),
    Composition(Composition),
    TsWord(TsWord),
}

impl BasisTag {
    pub fn weight(&self) -> usize {
        match self {
            BasisTag::Partition(p) => p.weight(),
            BasisTag::Composition(c) => c.weight(),
            BasisTag::TsWord(w) => w.len(),
        }
    }
}

impl fmt::Display for BasisTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisTag::Partition(p) => write!(f, "{p}"),
            BasisTag::Composition(c) => write!(f, "{c}"),
            BasisTag::TsWord(w) => write!(f, "{w}"),
        }
    }
}

/// Integer vector in a Grothendieck group, sparse over basis tags.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct GVec(pub BTreeMap<BasisTag, i64>);

impl GVec {
    pub fn zero() -> Self {
        GVec(BTreeMap::new())
    }

    pub fn from_tag(tag: BasisTag) -> Self {
        GVec(BTreeMap::from([(tag, 1)]))
    }

    pub fn add_term(&mut self, tag: BasisTag, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let slot = self.0.entry(tag).or_insert(0);
        *slot += coeff;
        if *slot == 0 {
            self.0.retain(|_, v| *v != 0);
        }
    }

    pub fn add_scaled(&mut self, other: &GVec, c: i64) {
        for (tag, coeff) in &other.0 {
            self.add_term(tag.clone(), coeff * c);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&BasisTag, &i64)> {
        self.0.iter()
    }

    pub fn coeff(&self, tag: &BasisTag) -> i64 {
        self.0.get(tag).copied().unwrap_or(0)
    }
}

/// Integer vector in a two-fold tensor square of Grothendieck groups.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct TVec(pub BTreeMap<(BasisTag, BasisTag), i64>);

impl TVec {
    pub fn zero() -> Self {
        TVec(BTreeMap::new())
    }

    pub fn add_term(&mut self, left: BasisTag, right: BasisTag, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let slot = self.0.entry((left, right)).or_insert(0);
        *slot += coeff;
        if *slot == 0 {
            self.0.retain(|_, v| *v != 0);
        }
    }

    pub fn add_scaled(&mut self, other: &TVec, c: i64) {
        for ((a, b), coeff) in &other.0 {
            self.add_term(a.clone(), b.clone(), coeff * c);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Terms whose left factor has the given degree.
    pub fn component(&self, left_degree: usize) -> TVec {
        TVec(
            self.0
                .iter()
                .filter(|((a, _), _)| a.weight() == left_degree)
                .map(|(k, v)| (k.clone(), *v))
                .collect(),
        )
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(BasisTag, BasisTag), &i64)> {
        self.0.iter()
    }
}

/// Graded product and coproduct structure constants on a free Z-module with a
/// distinguished basis per degree, truncated at `max_degree`.
///
/// Degree 0 must be one dimensional; its basis tag is the unit. The stored
/// coproduct of a degree-n tag contains all components, including the two
/// trivial ones with the unit on one side.
pub struct HopfData {
    pub name: String,
    pub max_degree: usize,
    basis: Vec<Vec<BasisTag>>,
    index: Vec<BTreeMap<BasisTag, usize>>,
    product: BTreeMap<(usize, usize), Vec<Vec<GVec>>>,
    coproduct: Vec<Vec<TVec>>,
}

impl HopfData {
    /// Builds the tables by evaluating `prod` and `cop` on basis tags.
    /// Homogeneity of every structure constant is checked here.
    pub fn from_fns(
        name: &str,
        basis: Vec<Vec<BasisTag>>,
        prod: impl Fn(&BasisTag, &BasisTag) -> GVec,
        cop: impl Fn(&BasisTag) -> TVec,
    ) -> Result<Self> {
        let max_degree = basis.len().saturating_sub(1);
        if basis.is_empty() || basis[0].len() != 1 {
            return Err(TowerError::BadStructureConstants(format!(
                "{name}: degree 0 must be one dimensional"
            )));
        }
        for (n, tags) in basis.iter().enumerate() {
            for t in tags {
                if t.weight() != n {
                    return Err(TowerError::BadStructureConstants(format!(
                        "{name}: tag {t} listed in degree {n}"
                    )));
                }
            }
        }
        let index: Vec<BTreeMap<BasisTag, usize>> = basis
            .iter()
            .map(|tags| {
                tags.iter()
                    .enumerate()
                    .map(|(i, t)| (t.clone(), i))
                    .collect()
            })
            .collect();
        let mut product = BTreeMap::new();
        for m in 0..=max_degree {
            for n in 0..=max_degree - m {
                let mut block = Vec::new();
                for a in &basis[m] {
                    let mut row = Vec::new();
                    for b in &basis[n] {
                        let v = prod(a, b);
                        for (t, _) in v.iter() {
                            if t.weight() != m + n || !index[m + n].contains_key(t) {
                                return Err(TowerError::BadStructureConstants(format!(
                                    "{name}: {a} * {b} hit unknown tag {t}"
                                )));
                            }
                        }
                        row.push(v);
                    }
                    block.push(row);
                }
                product.insert((m, n), block);
            }
        }
        let mut coproduct = Vec::new();
        for (n, degree_basis) in basis.iter().enumerate().take(max_degree + 1) {
            let mut per_tag = Vec::new();
            for t in degree_basis {
                let v = cop(t);
                for ((a, b), _) in v.iter() {
                    let (da, db) = (a.weight(), b.weight());
                    if da + db != n || !index[da].contains_key(a) || !index[db].contains_key(b) {
                        return Err(TowerError::BadStructureConstants(format!(
                            "{name}: coproduct of {t} hit unknown pair {a} (x) {b}"
                        )));
                    }
                }
                per_tag.push(v);
            }
            coproduct.push(per_tag);
        }
        Ok(HopfData {
            name: name.to_string(),
            max_degree,
            basis,
            index,
            product,
            coproduct,
        })
    }

    pub fn basis(&self, n: usize) -> &[BasisTag] {
        &self.basis[n]
    }

    pub fn index_of(&self, tag: &BasisTag) -> Option<usize> {
        self.index
            .get(tag.weight())
            .and_then(|m| m.get(tag))
            .copied()
    }

    pub fn unit_tag(&self) -> &BasisTag {
        &self.basis[0][0]
    }

    pub fn unit(&self) -> GVec {
        GVec::from_tag(self.unit_tag().clone())
    }

    pub fn product_tags(&self, a: &BasisTag, b: &BasisTag) -> Result<&GVec> {
        let (m, n) = (a.weight(), b.weight());
        let block = self
            .product
            .get(&(m, n))
            .ok_or_else(|| TowerError::DegreeCap {
                degree: m + n,
                cap: self.max_degree,
                what: format!("{} product", self.name),
            })?;
        let i = self.index[m]
            .get(a)
            .ok_or_else(|| TowerError::UnknownName {
                kind: "basis tag",
                value: a.to_string(),
            })?;
        let j = self.index[n]
            .get(b)
            .ok_or_else(|| TowerError::UnknownName {
                kind: "basis tag",
                value: b.to_string(),
            })?;
        Ok(&block[*i][*j])
    }

    pub fn product(&self, x: &GVec, y: &GVec) -> Result<GVec> {
        let mut out = GVec::zero();
        for (a, ca) in x.iter() {
            for (b, cb) in y.iter() {
                out.add_scaled(self.product_tags(a, b)?, ca * cb);
            }
        }
        Ok(out)
    }

    pub fn coproduct_tag(&self, t: &BasisTag) -> Result<&TVec> {
        let n = t.weight();
        if n > self.max_degree {
            return Err(TowerError::DegreeCap {
                degree: n,
                cap: self.max_degree,
                what: format!("{} coproduct", self.name),
            });
        }
        let i = self.index[n]
            .get(t)
            .ok_or_else(|| TowerError::UnknownName {
                kind: "basis tag",
                value: t.to_string(),
            })?;
        Ok(&self.coproduct[n][*i])
    }

    pub fn coproduct(&self, x: &GVec) -> Result<TVec> {
        let mut out = TVec::zero();
        for (t, c) in x.iter() {
            out.add_scaled(self.coproduct_tag(t)?, *c);
        }
        Ok(out)
    }

    /// Coefficient of the unit tag.
    pub fn counit(&self, x: &GVec) -> i64 {
        x.coeff(self.unit_tag())
    }

    /// Product on the tensor square: (a (x) b)(c (x) d) = ac (x) bd.
    pub fn tensor_product(&self, x: &TVec, y: &TVec) -> Result<TVec> {
        let mut out = TVec::zero();
        for ((a, b), c1) in x.iter() {
            for ((c, d), c2) in y.iter() {
                let left = self.product_tags(a, c)?;
                let right = self.product_tags(b, d)?;
                for (lt, lc) in left.iter() {
                    for (rt, rc) in right.iter() {
                        out.add_term(lt.clone(), rt.clone(), c1 * c2 * lc * rc);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Antipode of a basis tag by the connected-graded recursion
    /// gamma(t) = -t - sum gamma(t_1) t_2 over the reduced coproduct. After
    /// computing, the defining identity sum gamma(t_1) t_2 = 0 is re-checked
    /// for the tag and every tag reached by the recursion.
    pub fn antipode_tag(&self, t: &BasisTag) -> Result<GVec> {
        let mut memo: BTreeMap<BasisTag, GVec> = BTreeMap::new();
        memo.insert(self.unit_tag().clone(), self.unit());
        let out = self.antipode_rec(t, &mut memo)?;
        let reached: Vec<BasisTag> = memo.keys().cloned().collect();
        for tag in &reached {
            self.verify_antipode_identity(tag, &memo)?;
        }
        Ok(out)
    }

    fn antipode_rec(&self, t: &BasisTag, memo: &mut BTreeMap<BasisTag, GVec>) -> Result<GVec> {
        if let Some(v) = memo.get(t) {
            return Ok(v.clone());
        }
        let n = t.weight();
        if n == 0 {
            let v = self.unit();
            memo.insert(t.clone(), v.clone());
            return Ok(v);
        }
        let mut acc = GVec::zero();
        acc.add_term(t.clone(), -1);
        let cop = self.coproduct_tag(t)?.clone();
        for ((a, b), c) in cop.iter() {
            let da = a.weight();
            if da == 0 || da == n {
                continue;
            }
            let ga = self.antipode_rec(a, memo)?;
            let term = self.product(&ga, &GVec::from_tag(b.clone()))?;
            acc.add_scaled(&term, -c);
        }
        memo.insert(t.clone(), acc.clone());
        Ok(acc)
    }

    fn verify_antipode_identity(
        &self,
        t: &BasisTag,
        memo: &BTreeMap<BasisTag, GVec>,
    ) -> Result<()> {
        let mut acc = GVec::zero();
        for ((a, b), c) in self.coproduct_tag(t)?.iter() {
            let ga = &memo[a];
            let term = self.product(ga, &GVec::from_tag(b.clone()))?;
            acc.add_scaled(&term, *c);
        }
        let mut expect = GVec::zero();
        if t.weight() == 0 {
            expect = self.unit();
        }
        if acc != expect {
            return Err(TowerError::AntipodeVerification(format!(
                "{}: sum gamma(x1) x2 != counit(x) 1 at {t}",
                self.name
            )));
        }
        Ok(())
    }

    pub fn antipode(&self, x: &GVec) -> Result<GVec> {
        let mut out = GVec::zero();
        for (t, c) in x.iter() {
            out.add_scaled(&self.antipode_tag(t)?, *c);
        }
        Ok(out)
    }

    /// Right-sided antipode sum, sum x1 gamma(x2), for the check suite.
    pub fn antipode_sum_right(&self, t: &BasisTag) -> Result<GVec> {
        let mut acc = GVec::zero();
        let cop = self.coproduct_tag(t)?.clone();
        for ((a, b), c) in cop.iter() {
            let gb = self.antipode_tag(b)?;
            let term = self.product(&GVec::from_tag(a.clone()), &gb)?;
            acc.add_scaled(&term, *c);
        }
        Ok(acc)
    }
}

/// Graded pairing between two sets of graded bases, stored degree by degree:
/// `degrees[n][i][j]` pairs the i-th tag of one side with the j-th of the
/// other. Different degrees pair to zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairingMatrix {
    pub degrees: Vec<Vec<Vec<i64>>>,
}

impl PairingMatrix {
    pub fn identity(sizes: &[usize]) -> Self {
        let degrees = sizes
            .iter()
            .map(|&s| {
                (0..s)
                    .map(|i| (0..s).map(|j| i64::from(i == j)).collect())
                    .collect()
            })
            .collect();
        PairingMatrix { degrees }
    }

    pub fn zero(sizes: &[usize]) -> Self {
        let degrees = sizes.iter().map(|&s| vec![vec![0; s]; s]).collect();
        PairingMatrix { degrees }
    }

    pub fn get(&self, n: usize, i: usize, j: usize) -> i64 {
        self.degrees[n][i][j]
    }

    pub fn max_degree(&self) -> usize {
        self.degrees.len().saturating_sub(1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::comb::word::ts_words_of;

    /// Toy data: binomial bialgebra on one generator per degree,
    /// x_m x_n = C(m+n, m) x_{m+n}, coproduct by deconcatenation of degree.
    fn binomial_data(max: usize) -> HopfData {
        let basis: Vec<Vec<BasisTag>> = (0..=max)
            .map(|n| vec![BasisTag::TsWord(ts_words_of(n)[0].clone())])
            .collect();
        let tag = |n: usize| BasisTag::TsWord(ts_words_of(n)[0].clone());
        HopfData::from_fns(
            "binomial",
            basis,
            |a, b| {
                let (m, n) = (a.weight(), b.weight());
                let c = (1..=m.min(n)).fold(1i64, |acc, i| {
                    acc * (m + n - m.min(n) + i) as i64 / i as i64
                });
                let mut v = GVec::zero();
                v.add_term(tag(m + n), c);
                v
            },
            |t| {
                let n = t.weight();
                let mut v = TVec::zero();
                for k in 0..=n {
                    v.add_term(tag(k), tag(n - k), 1);
                }
                v
            },
        )
        .unwrap()
    }

    #[test]
    fn product_and_coproduct_lookup() {
        let h = binomial_data(4);
        let x1 = GVec::from_tag(h.basis(1)[0].clone());
        let x2 = h.product(&x1, &x1).unwrap();
        assert_eq!(x2.coeff(&h.basis(2)[0]), 2);
        let cop = h.coproduct_tag(&h.basis(2)[0]).unwrap();
        assert_eq!(cop.0.len(), 3);
        assert_eq!(h.counit(&h.unit()), 1);
    }

    #[test]
    fn degree_overflow_is_an_error() {
        let h = binomial_data(2);
        let x2 = GVec::from_tag(h.basis(2)[0].clone());
        assert!(matches!(
            h.product(&x2, &x2),
            Err(TowerError::DegreeCap { .. })
        ));
    }

    #[test]
    fn antipode_alternates_on_binomial_generator() {
        let h = binomial_data(5);
        // gamma(x_1) = -x_1; the identity is re-verified internally.
        let g1 = h.antipode_tag(&h.basis(1)[0].clone()).unwrap();
        assert_eq!(g1.coeff(&h.basis(1)[0]), -1);
        for n in 1..=5 {
            let right = h.antipode_sum_right(&h.basis(n)[0]).unwrap();
            assert!(right.is_zero(), "right antipode sum at degree {n}");
        }
    }

    #[test]
    fn rejects_inhomogeneous_tables() {
        let basis: Vec<Vec<BasisTag>> = (0..=1)
            .map(|n| vec![BasisTag::TsWord(ts_words_of(n)[0].clone())])
            .collect();
        let bad = HopfData::from_fns(
            "bad",
            basis,
            |_, _| GVec::from_tag(BasisTag::TsWord(ts_words_of(0)[0].clone())),
            |_| TVec::zero(),
        );
        assert!(bad.is_err());
    }
}
