//! Permutations in one-line (window) notation, weak order, coset minima.

use crate::error::{Result, TowerError};
use std::collections::BTreeSet;
use std::fmt;

/// Permutation of {1..n} stored as its window `[sigma(1), ..., sigma(n)]`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    window: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            window: (1..=n).collect(),
        }
    }

    pub fn from_window(window: Vec<usize>) -> Result<Self> {
        let n = window.len();
        let mut seen = vec![false; n + 1];
        for &v in &window {
            if v == 0 || v > n || seen[v] {
                return Err(TowerError::InvalidPermutation(format!("{window:?}")));
            }
            seen[v] = true;
        }
        Ok(Permutation { window })
    }

    /// Adjacent transposition s_i swapping i and i+1, as an element of S_n.
    pub fn transposition(n: usize, i: usize) -> Self {
        assert!(i >= 1 && i < n);
        let mut w: Vec<usize> = (1..=n).collect();
        w.swap(i - 1, i);
        Permutation { window: w }
    }

    pub fn n(&self) -> usize {
        self.window.len()
    }

    pub fn window(&self) -> &[usize] {
        &self.window
    }

    pub fn apply(&self, i: usize) -> usize {
        self.window[i - 1]
    }

    /// Function composition: (self . other)(i) = self(other(i)).
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.n(), other.n());
        Permutation {
            window: other.window.iter().map(|&i| self.window[i - 1]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut w = vec![0; self.n()];
        for (pos, &v) in self.window.iter().enumerate() {
            w[v - 1] = pos + 1;
        }
        Permutation { window: w }
    }

    /// Coxeter length = number of inversions.
    pub fn length(&self) -> usize {
        let n = self.n();
        let mut count = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.window[i] > self.window[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Position pairs (i, j), i < j, with sigma(i) > sigma(j); 1-based.
    pub fn inversions(&self) -> BTreeSet<(usize, usize)> {
        let n = self.n();
        let mut set = BTreeSet::new();
        for i in 0..n {
            for j in i + 1..n {
                if self.window[i] > self.window[j] {
                    set.insert((i + 1, j + 1));
                }
            }
        }
        set
    }

    /// Descent positions i with sigma(i) > sigma(i+1); 1-based.
    pub fn descents(&self) -> Vec<usize> {
        (1..self.n())
            .filter(|&i| self.window[i - 1] > self.window[i])
            .collect()
    }

    /// Left multiplication by s_i (swaps the values i and i+1).
    pub fn left_mul_transposition(&self, i: usize) -> Permutation {
        let mut w = self.window.clone();
        for v in w.iter_mut() {
            if *v == i {
                *v = i + 1;
            } else if *v == i + 1 {
                *v = i;
            }
        }
        Permutation { window: w }
    }

    /// Right multiplication by s_i (swaps positions i and i+1).
    pub fn right_mul_transposition(&self, i: usize) -> Permutation {
        let mut w = self.window.clone();
        w.swap(i - 1, i);
        Permutation { window: w }
    }

    /// True when left multiplication by s_i increases the length, i.e. the
    /// value i occurs before i+1 in the window.
    pub fn left_mul_lengthens(&self, i: usize) -> bool {
        for &v in &self.window {
            if v == i {
                return true;
            }
            if v == i + 1 {
                return false;
            }
        }
        unreachable!("window must contain i and i+1")
    }

    /// A reduced word i_1 ... i_r with sigma = s_{i_1} ... s_{i_r}, produced
    /// by repeatedly clearing the leftmost descent from the right.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut rev = Vec::new();
        while let Some(&i) = w.descents().first() {
            w = w.right_mul_transposition(i);
            rev.push(i);
        }
        rev.reverse();
        rev
    }

    /// Concatenation sigma x tau in S_{m+n}: tau's window shifted by m.
    pub fn concat(&self, other: &Permutation) -> Permutation {
        let m = self.n();
        let mut w = self.window.clone();
        w.extend(other.window.iter().map(|&v| v + m));
        Permutation { window: w }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.window.is_empty() {
            return write!(f, "()");
        }
        if self.n() < 10 {
            for v in &self.window {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.window.iter().map(|v| v.to_string()).collect();
            write!(f, "{}", parts.join("."))
        }
    }
}

/// Left weak order: sigma <= tau iff l(tau) = l(sigma) + l(tau sigma^{-1}),
/// equivalently Inv(sigma) is contained in Inv(tau) as position sets.
pub fn weak_order_leq(sigma: &Permutation, tau: &Permutation) -> bool {
    assert_eq!(sigma.n(), tau.n());
    tau.length() == sigma.length() + tau.compose(&sigma.inverse()).length()
}

/// All of S_n in lexicographic window order.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut window = Vec::new();
    let mut used = vec![false; n + 1];
    fn rec(n: usize, window: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Permutation>) {
        if window.len() == n {
            out.push(Permutation {
                window: window.clone(),
            });
            return;
        }
        for v in 1..=n {
            if !used[v] {
                used[v] = true;
                window.push(v);
                rec(n, window, used, out);
                window.pop();
                used[v] = false;
            }
        }
    }
    rec(n, &mut window, &mut used, &mut out);
    out
}

/// Minimal length coset representatives for S_{m+n} / (S_m x S_n): the
/// permutations increasing on positions 1..m and m+1..m+n, in lexicographic
/// window order.
pub fn min_coset_reps(m: usize, n: usize) -> Vec<Permutation> {
    let total = m + n;
    let mut out = Vec::new();
    let values: Vec<usize> = (1..=total).collect();
    let mut choose = Vec::new();
    fn rec(
        values: &[usize],
        start: usize,
        m: usize,
        choose: &mut Vec<usize>,
        out: &mut Vec<Permutation>,
    ) {
        if choose.len() == m {
            let rest: Vec<usize> = values
                .iter()
                .copied()
                .filter(|v| !choose.contains(v))
                .collect();
            let mut w = choose.clone();
            w.extend(rest);
            out.push(Permutation { window: w });
            return;
        }
        for i in start..values.len() {
            choose.push(values[i]);
            rec(values, i + 1, m, choose, out);
            choose.pop();
        }
    }
    rec(&values, 0, m, &mut choose, &mut out);
    out.sort();
    out
}
