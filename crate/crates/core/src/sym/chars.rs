//! Exact symmetric group character tables by the recursive border-strip
//! (beta number) rule, and the class-function calculus: outer products,
//! induction and restriction at character level, inner products, and the
//! characteristic map to power-sum symmetric functions.

use crate::comb::partition::{partitions_of, Partition};
use crate::error::{Result, TowerError};
use crate::linalg::{rat, Rat};
use num_traits::Zero;
use std::collections::{BTreeMap, BTreeSet};
use std::sync::{Arc, Mutex};

pub const CHAR_CAP: usize = 6;

pub struct CharTable {
    pub n: usize,
    /// Row and column index set: all partitions of n, in the canonical
    /// order of [`partitions_of`].
    pub parts: Vec<Partition>,
    /// values[irreducible][class].
    values: Vec<Vec<i64>>,
}

impl CharTable {
    fn build(n: usize) -> Self {
        let parts = partitions_of(n);
        let values = parts
            .iter()
            .map(|lambda| {
                parts
                    .iter()
                    .map(|mu| mn_value(lambda, mu.parts()))
                    .collect()
            })
            .collect();
        CharTable { n, parts, values }
    }

    pub fn index(&self, lambda: &Partition) -> usize {
        self.parts
            .iter()
            .position(|p| p == lambda)
            .expect("partition of n")
    }

    pub fn value(&self, lambda: &Partition, mu: &Partition) -> i64 {
        self.values[self.index(lambda)][self.index(mu)]
    }

    pub fn dimension(&self, lambda: &Partition) -> i64 {
        let ones = Partition::new(vec![1; self.n]).expect("column shape");
        self.value(lambda, &ones)
    }
}

/// Border-strip recursion on beta numbers: remove a strip of size mu[0]
/// from each admissible beta number, with the sign counting the beta
/// numbers jumped over.
fn mn_value(lambda: &Partition, mu: &[usize]) -> i64 {
    if mu.is_empty() {
        return 1;
    }
    let r = mu[0];
    let beta = lambda.beta_numbers();
    let bset: BTreeSet<usize> = beta.iter().copied().collect();
    let mut acc = 0;
    for &b in &beta {
        if b < r || bset.contains(&(b - r)) {
            continue;
        }
        let jumped = beta.iter().filter(|&&c| c > b - r && c < b).count();
        let sign = if jumped % 2 == 0 { 1 } else { -1 };
        let mut nb: Vec<usize> = beta.iter().copied().filter(|&c| c != b).collect();
        nb.push(b - r);
        nb.sort_unstable_by(|a, c| c.cmp(a));
        acc += sign * mn_value(&partition_from_beta(&nb), &mu[1..]);
    }
    acc
}

fn partition_from_beta(beta_desc: &[usize]) -> Partition {
    let l = beta_desc.len();
    let parts: Vec<usize> = beta_desc
        .iter()
        .enumerate()
        .map(|(i, &b)| b - (l - 1 - i))
        .filter(|&p| p > 0)
        .collect();
    Partition::new(parts).expect("beta numbers give a partition")
}

pub struct CharCache {
    tables: Mutex<BTreeMap<usize, Arc<CharTable>>>,
}

impl CharCache {
    pub fn new() -> Self {
        CharCache {
            tables: Mutex::new(BTreeMap::new()),
        }
    }

    pub fn table(&self, n: usize) -> Result<Arc<CharTable>> {
        if n > CHAR_CAP {
            return Err(TowerError::DegreeCap {
                degree: n,
                cap: CHAR_CAP,
                what: "symmetric group character tables".to_string(),
            });
        }
        let mut cache = self.tables.lock().unwrap();
        Ok(cache
            .entry(n)
            .or_insert_with(|| Arc::new(CharTable::build(n)))
            .clone())
    }
}

impl Default for CharCache {
    fn default() -> Self {
        CharCache::new()
    }
}

/// A class function in several symmetric group variables, stored on class
/// tuples (one partition per variable).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFn {
    pub degrees: Vec<usize>,
    values: BTreeMap<Vec<Partition>, Rat>,
}

/// All class tuples for a tuple of degrees.
pub fn class_tuples(degrees: &[usize]) -> Vec<Vec<Partition>> {
    let mut out: Vec<Vec<Partition>> = vec![Vec::new()];
    for &d in degrees {
        let classes = partitions_of(d);
        let mut next = Vec::with_capacity(out.len() * classes.len());
        for prefix in &out {
            for c in &classes {
                let mut t = prefix.clone();
                t.push(c.clone());
                next.push(t);
            }
        }
        out = next;
    }
    out
}

impl ClassFn {
    pub fn zero(degrees: Vec<usize>) -> Self {
        ClassFn {
            degrees,
            values: BTreeMap::new(),
        }
    }

    pub fn get(&self, key: &[Partition]) -> Rat {
        self.values.get(key).cloned().unwrap_or_else(|| rat(0))
    }

    pub fn add(&mut self, key: Vec<Partition>, c: Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.values.entry(key).or_insert_with(|| rat(0));
        *entry += c;
        if entry.is_zero() {
            self.values.retain(|_, v| !v.is_zero());
        }
    }

    /// The irreducible character of lambda as a one variable class function.
    pub fn irreducible(table: &CharTable, lambda: &Partition) -> Self {
        let mut out = Self::zero(vec![table.n]);
        for mu in &table.parts {
            out.add(vec![mu.clone()], rat(table.value(lambda, mu)));
        }
        out
    }

    /// Outer product: concatenates the variable lists.
    pub fn outer(a: &ClassFn, b: &ClassFn) -> ClassFn {
        let mut degrees = a.degrees.clone();
        degrees.extend(&b.degrees);
        let mut out = ClassFn::zero(degrees);
        for (ka, ca) in &a.values {
            for (kb, cb) in &b.values {
                let mut key = ka.clone();
                key.extend(kb.iter().cloned());
                out.add(key, ca * cb);
            }
        }
        out
    }
}

/// Ordered splits of a class partition into two sub-multisets with the
/// first of given weight, each with the induction weight
/// z_nu / (z_{nu1} z_{nu2}).
pub fn weighted_splits(nu: &Partition, first_weight: usize) -> Vec<(Partition, Partition, Rat)> {
    let mut groups: Vec<(usize, usize)> = Vec::new();
    for &p in nu.parts() {
        match groups.last_mut() {
            Some((v, m)) if *v == p => *m += 1,
            _ => groups.push((p, 1)),
        }
    }
    let mut picks: Vec<Vec<usize>> = vec![Vec::new()];
    for &(_, m) in &groups {
        let mut next = Vec::with_capacity(picks.len() * (m + 1));
        for prefix in &picks {
            for j in 0..=m {
                let mut t = prefix.clone();
                t.push(j);
                next.push(t);
            }
        }
        picks = next;
    }
    let z_nu = nu.z();
    let mut out = Vec::new();
    for pick in picks {
        let mut first = Vec::new();
        let mut second = Vec::new();
        for (&(v, m), &j) in groups.iter().zip(&pick) {
            first.extend(std::iter::repeat_n(v, j));
            second.extend(std::iter::repeat_n(v, m - j));
        }
        if first.iter().sum::<usize>() != first_weight {
            continue;
        }
        let p1 = Partition::from_unsorted(first).expect("parts positive");
        let p2 = Partition::from_unsorted(second).expect("parts positive");
        let ratio = &z_nu / (p1.z() * p2.z());
        out.push((p1, p2, ratio));
    }
    out
}

/// Induction of a two variable class function along the concatenation
/// embedding: (Ind phi)(nu) = sum over splits of nu weighted by z ratios.
pub fn induce_two(phi: &ClassFn) -> ClassFn {
    assert_eq!(phi.degrees.len(), 2);
    let (m, n) = (phi.degrees[0], phi.degrees[1]);
    let mut out = ClassFn::zero(vec![m + n]);
    for nu in partitions_of(m + n) {
        let mut acc = rat(0);
        for (n1, n2, ratio) in weighted_splits(&nu, m) {
            let v = phi.get(&[n1, n2]);
            if !v.is_zero() {
                acc += ratio * v;
            }
        }
        out.add(vec![nu], acc);
    }
    out
}

/// Restriction of a one variable class function to a pair of degrees:
/// evaluate on the merged class.
pub fn restrict_two(phi: &ClassFn, k: usize) -> ClassFn {
    assert_eq!(phi.degrees.len(), 1);
    let n = phi.degrees[0];
    let l = n - k;
    let mut out = ClassFn::zero(vec![k, l]);
    for n1 in partitions_of(k) {
        for n2 in partitions_of(l) {
            out.add(vec![n1.clone(), n2.clone()], phi.get(&[n1.merge(&n2)]));
        }
    }
    out
}

/// Twisted induction at character level: a four variable function on
/// degrees (a, b, c, d) maps to two variables (a+c, b+d), the first slot
/// combining variables 0 and 2, the second combining 1 and 3.
pub fn twisted_induce_four(phi: &ClassFn) -> ClassFn {
    assert_eq!(phi.degrees.len(), 4);
    let d = &phi.degrees;
    let (a, b, c) = (d[0], d[1], d[2]);
    let mut out = ClassFn::zero(vec![a + c, b + d[3]]);
    for nu in partitions_of(a + c) {
        for nutilde in partitions_of(b + d[3]) {
            let mut acc = rat(0);
            for (na, nc, r1) in weighted_splits(&nu, a) {
                for (nb, nd, r2) in weighted_splits(&nutilde, b) {
                    let v = phi.get(&[na.clone(), nb, nc.clone(), nd]);
                    if !v.is_zero() {
                        acc += &r1 * r2 * v;
                    }
                }
            }
            out.add(vec![nu.clone(), nutilde], acc);
        }
    }
    out
}

/// Multiplicity of each irreducible tuple, with integrality and positivity
/// enforced: the joint inner product sum over class tuples of
/// phi * conj(chi) / z.
pub fn decompose(cache: &CharCache, phi: &ClassFn) -> Result<BTreeMap<Vec<Partition>, i64>> {
    let tables: Vec<Arc<CharTable>> = phi
        .degrees
        .iter()
        .map(|&d| cache.table(d))
        .collect::<Result<_>>()?;
    let tuples = class_tuples(&phi.degrees);
    let mut out = BTreeMap::new();
    let mut irreps: Vec<Vec<Partition>> = vec![Vec::new()];
    for t in &tables {
        let mut next = Vec::new();
        for prefix in &irreps {
            for lam in &t.parts {
                let mut tup = prefix.clone();
                tup.push(lam.clone());
                next.push(tup);
            }
        }
        irreps = next;
    }
    for lam_tuple in irreps {
        let mut acc = rat(0);
        for mu_tuple in &tuples {
            let v = phi.get(mu_tuple);
            if v.is_zero() {
                continue;
            }
            let mut term = v;
            for ((lam, mu), t) in lam_tuple.iter().zip(mu_tuple).zip(&tables) {
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
            .map_err(|_| TowerError::DecompositionFailed("multiplicity overflow".to_string()))?;
        if mult < 0 {
            return Err(TowerError::DecompositionFailed(format!(
                "negative multiplicity {mult}"
            )));
        }
        out.insert(lam_tuple, mult);
    }
    Ok(out)
}

/// Inner product of one variable class functions.
pub fn inner_product(a: &ClassFn, b: &ClassFn) -> Rat {
    assert_eq!(a.degrees, b.degrees);
    assert_eq!(a.degrees.len(), 1);
    let mut acc = rat(0);
    for mu in partitions_of(a.degrees[0]) {
        let key = [mu.clone()];
        acc += a.get(&key) * b.get(&key) / mu.z();
    }
    acc
}

/// The characteristic map: a one variable class function becomes a
/// symmetric function in the power sum basis, coefficient phi(mu)/z_mu.
pub fn frobenius_ch(phi: &ClassFn) -> BTreeMap<Partition, Rat> {
    assert_eq!(phi.degrees.len(), 1);
    let mut out = BTreeMap::new();
    for mu in partitions_of(phi.degrees[0]) {
        let c = phi.get(std::slice::from_ref(&mu)) / mu.z();
        if !c.is_zero() {
            out.insert(mu, c);
        }
    }
    out
}

/// Product of power sum expansions: p_mu p_nu = p_{mu union nu}.
pub fn power_product(
    a: &BTreeMap<Partition, Rat>,
    b: &BTreeMap<Partition, Rat>,
) -> BTreeMap<Partition, Rat> {
    let mut out: BTreeMap<Partition, Rat> = BTreeMap::new();
    for (pa, ca) in a {
        for (pb, cb) in b {
            let key = pa.merge(pb);
            let entry = out.entry(key).or_insert_with(|| rat(0));
            *entry += ca * cb;
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}
