//! Compositions, their descent sets, ribbon diagrams, and the extreme
//! permutations alpha(I) and omega(I) of each descent class.

use super::perm::{all_permutations, weak_order_leq, Permutation};
use crate::error::{Result, TowerError};
use std::collections::BTreeSet;
use std::fmt;

/// Composition of n: ordered list of positive parts. The empty composition is
/// the unique composition of 0.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(TowerError::InvalidComposition(format!("{parts:?}")));
        }
        Ok(Composition { parts })
    }

    pub fn empty() -> Self {
        Composition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Descent set D(I) = {i_1, i_1+i_2, ...} without the final weight.
    pub fn descent_set(&self) -> BTreeSet<usize> {
        let mut set = BTreeSet::new();
        let mut acc = 0;
        for &p in &self.parts[..self.parts.len().saturating_sub(1)] {
            acc += p;
            set.insert(acc);
        }
        set
    }

    /// Inverse of `descent_set`: the composition of n with the given descents.
    pub fn from_descent_set(n: usize, descents: &BTreeSet<usize>) -> Self {
        if n == 0 {
            return Composition::empty();
        }
        debug_assert!(descents.iter().all(|&d| d >= 1 && d < n));
        let mut parts = Vec::new();
        let mut prev = 0;
        for &d in descents {
            parts.push(d - prev);
            prev = d;
        }
        parts.push(n - prev);
        Composition { parts }
    }

    /// Mirror image: parts reversed.
    pub fn mirror(&self) -> Composition {
        let mut parts = self.parts.clone();
        parts.reverse();
        Composition { parts }
    }

    /// Conjugate: column lengths of the ribbon diagram read right to left.
    pub fn conjugate(&self) -> Composition {
        let cells = self.ribbon_cells();
        if cells.is_empty() {
            return Composition::empty();
        }
        let max_col = cells.iter().map(|&(_, c)| c).max().unwrap();
        let mut col_lengths = vec![0usize; max_col + 1];
        for &(_, c) in &cells {
            col_lengths[c] += 1;
        }
        col_lengths.reverse();
        Composition { parts: col_lengths }
    }

    /// Cells (row, col) of the ribbon of I, 0-based, rows top to bottom: row r
    /// starts in the column where row r-1 ends.
    pub fn ribbon_cells(&self) -> Vec<(usize, usize)> {
        let mut cells = Vec::new();
        let mut start = 0usize;
        for (r, &p) in self.parts.iter().enumerate() {
            for c in start..start + p {
                cells.push((r, c));
            }
            start += p - 1;
        }
        cells
    }

    /// Minimum of the descent class of I in left weak order: fill the ribbon
    /// columns left to right, bottom to top within a column, then read rows
    /// top to bottom.
    pub fn alpha(&self) -> Permutation {
        let cells = self.ribbon_cells();
        let n = cells.len();
        let mut order: Vec<(usize, usize)> = cells.clone();
        // Column-major with rows descending inside a column.
        order.sort_by(|a, b| a.1.cmp(&b.1).then(b.0.cmp(&a.0)));
        self.read_filling(&cells, &order, n)
    }

    /// Maximum of the descent class of I in left weak order: fill the ribbon
    /// rows bottom to top, left to right within a row, then read rows top to
    /// bottom.
    pub fn omega(&self) -> Permutation {
        let cells = self.ribbon_cells();
        let n = cells.len();
        let mut order: Vec<(usize, usize)> = cells.clone();
        order.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        self.read_filling(&cells, &order, n)
    }

    fn read_filling(
        &self,
        cells: &[(usize, usize)],
        order: &[(usize, usize)],
        n: usize,
    ) -> Permutation {
        let mut value = std::collections::BTreeMap::new();
        for (v, cell) in order.iter().enumerate() {
            value.insert(*cell, v + 1);
        }
        let window: Vec<usize> = cells.iter().map(|cell| value[cell]).collect();
        debug_assert_eq!(window.len(), n);
        Permutation::from_window(window).expect("ribbon filling is a permutation")
    }

    /// All sigma in S_n with descent set D(I).
    pub fn descent_class(&self) -> Vec<Permutation> {
        let n = self.weight();
        let d = self.descent_set();
        all_permutations(n)
            .into_iter()
            .filter(|s| s.descents().iter().copied().collect::<BTreeSet<_>>() == d)
            .collect()
    }

    /// Membership in the weak-order interval [alpha(I), omega(I)].
    pub fn interval_contains(&self, sigma: &Permutation) -> bool {
        weak_order_leq(&self.alpha(), sigma) && weak_order_leq(sigma, &self.omega())
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Descent composition of a permutation.
pub fn descent_composition(sigma: &Permutation) -> Composition {
    let set: BTreeSet<usize> = sigma.descents().into_iter().collect();
    Composition::from_descent_set(sigma.n(), &set)
}

/// All compositions of n, ordered by their descent sets in lexicographic
/// order as sorted subsets of {1..n-1}.
pub fn compositions_of(n: usize) -> Vec<Composition> {
    if n == 0 {
        return vec![Composition::empty()];
    }
    let positions: Vec<usize> = (1..n).collect();
    let mut subsets: Vec<Vec<usize>> = vec![vec![]];
    for &p in &positions {
        let mut next = Vec::new();
        for s in &subsets {
            let mut t = s.clone();
            t.push(p);
            next.push(t);
        }
        subsets.extend(next);
    }
    subsets.sort();
    subsets
        .into_iter()
        .map(|s| Composition::from_descent_set(n, &s.into_iter().collect()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(parts: &[usize]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn rejects_zero_parts() {
        assert!(Composition::new(vec![2, 0, 1]).is_err());
    }

    #[test]
    fn descent_set_round_trip() {
        for n in 0..=6 {
            for i in compositions_of(n) {
                assert_eq!(Composition::from_descent_set(n, &i.descent_set()), i);
            }
        }
    }

    #[test]
    fn conjugate_and_mirror_golden() {
        assert_eq!(c(&[3, 1]).conjugate(), c(&[2, 1, 1]));
        assert_eq!(c(&[3, 1]).mirror(), c(&[1, 3]));
        assert_eq!(c(&[2, 1]).conjugate(), c(&[2, 1]));
        assert_eq!(Composition::empty().conjugate(), Composition::empty());
    }

    #[test]
    fn conjugate_matches_descent_complement() {
        // Independent route: D(conjugate(I)) is the complement in {1..n-1} of
        // the reflected descent set {n - d}.
        for n in 0..=7 {
            for i in compositions_of(n) {
                let reflected: BTreeSet<usize> = i.descent_set().iter().map(|d| n - d).collect();
                let complement: BTreeSet<usize> =
                    (1..n).filter(|k| !reflected.contains(k)).collect();
                let expect = Composition::from_descent_set(n, &complement);
                assert_eq!(i.conjugate(), expect, "I={i}");
            }
        }
    }

    #[test]
    fn conjugate_and_mirror_are_involutions() {
        for n in 0..=7 {
            for i in compositions_of(n) {
                assert_eq!(i.conjugate().conjugate(), i);
                assert_eq!(i.mirror().mirror(), i);
                assert_eq!(i.conjugate().mirror(), i.mirror().conjugate());
            }
        }
    }

    #[test]
    fn alpha_omega_golden() {
        let i = c(&[2, 2, 1, 3]);
        assert_eq!(i.alpha().to_string(), "13265478");
        assert_eq!(i.omega().to_string(), "78564123");
        assert_eq!(descent_composition(&i.alpha()), i);
        assert_eq!(descent_composition(&i.omega()), i);
    }

    #[test]
    fn alpha_omega_have_descents_of_i() {
        for n in 1..=6 {
            for i in compositions_of(n) {
                assert_eq!(descent_composition(&i.alpha()), i, "alpha of {i}");
                assert_eq!(descent_composition(&i.omega()), i, "omega of {i}");
            }
        }
    }

    #[test]
    fn composition_order_for_n4() {
        let order: Vec<String> = compositions_of(4).iter().map(|i| i.to_string()).collect();
        assert_eq!(
            order,
            vec![
                "(4)",
                "(1,3)",
                "(1,1,2)",
                "(1,1,1,1)",
                "(1,2,1)",
                "(2,2)",
                "(2,1,1)",
                "(3,1)"
            ]
        );
    }

    #[test]
    fn descent_classes_are_weak_order_intervals() {
        for n in 1..=5 {
            for i in compositions_of(n) {
                let class: BTreeSet<Permutation> = i.descent_class().into_iter().collect();
                let interval: BTreeSet<Permutation> = all_permutations(n)
                    .into_iter()
                    .filter(|s| i.interval_contains(s))
                    .collect();
                assert_eq!(class, interval, "I={i}");
            }
        }
    }
}
