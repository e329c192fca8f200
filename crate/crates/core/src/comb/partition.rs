//! Integer partitions, conjugates, and centraliser orders z_mu.

use crate::error::{Result, TowerError};
use num::BigRational;
use num_traits::One;
use std::fmt;

/// Partition: weakly decreasing positive parts. The empty partition is the
/// unique partition of 0.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(TowerError::InvalidPartition(format!("{parts:?}")));
        }
        Ok(Partition { parts })
    }

    /// Sorts arbitrary positive parts into a partition.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Result<Self> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts)
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
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

    pub fn conjugate(&self) -> Partition {
        let Some(&first) = self.parts.first() else {
            return Partition::empty();
        };
        let parts = (1..=first)
            .map(|c| self.parts.iter().filter(|&&p| p >= c).count())
            .collect();
        Partition { parts }
    }

    /// Multiset union of two partitions.
    pub fn merge(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// Centraliser order z_mu = prod_i i^{m_i} m_i! over part multiplicities.
    pub fn z(&self) -> BigRational {
        let mut z = BigRational::one();
        let mut i = 0;
        while i < self.parts.len() {
            let part = self.parts[i];
            let mut mult = 0usize;
            while i < self.parts.len() && self.parts[i] == part {
                mult += 1;
                i += 1;
            }
            for _ in 0..mult {
                z *= BigRational::from_integer(part.into());
            }
            for k in 1..=mult {
                z *= BigRational::from_integer(k.into());
            }
        }
        z
    }

    /// First-column hook lengths (beta numbers) for r parts, strictly
    /// decreasing: lambda_i + r - i.
    pub fn beta_numbers(&self) -> Vec<usize> {
        let r = self.parts.len();
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &p)| p + r - 1 - i)
            .collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// All partitions of n in descending lexicographic order, so (n) first and
/// (1,...,1) last.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    fn rec(remaining: usize, max: usize, stack: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: stack.clone(),
            });
            return;
        }
        for p in (1..=remaining.min(max)).rev() {
            stack.push(p);
            rec(remaining - p, p, stack, out);
            stack.pop();
        }
    }
    rec(n, n, &mut stack, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn rejects_non_decreasing() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
    }

    #[test]
    fn counts_match_known_values() {
        let counts: Vec<usize> = (0..=8).map(|n| partitions_of(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
    }

    #[test]
    fn order_is_descending_lex() {
        let names: Vec<String> = partitions_of(4).iter().map(|p| p.to_string()).collect();
        assert_eq!(names, vec!["(4)", "(3,1)", "(2,2)", "(2,1,1)", "(1,1,1,1)"]);
    }

    #[test]
    fn conjugate_involution_and_golden() {
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        for n in 0..=7 {
            for lam in partitions_of(n) {
                assert_eq!(lam.conjugate().conjugate(), lam);
                assert_eq!(lam.conjugate().weight(), n);
            }
        }
    }

    #[test]
    fn z_values() {
        // Sum over classes of n!/z_mu = number of elements = n!.
        assert_eq!(p(&[1, 1, 1]).z(), rat(6));
        assert_eq!(p(&[2, 1]).z(), rat(2));
        assert_eq!(p(&[3]).z(), rat(3));
        for n in 1..=6 {
            let fact: i64 = (1..=n as i64).product();
            let total: BigRational = partitions_of(n).iter().map(|mu| rat(fact) / mu.z()).sum();
            assert_eq!(total, rat(fact));
        }
    }

    #[test]
    fn beta_numbers_strictly_decrease() {
        for lam in partitions_of(6) {
            let b = lam.beta_numbers();
            assert!(b.windows(2).all(|w| w[0] > w[1]));
        }
    }
}
