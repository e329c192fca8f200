//! Standard Young tableaux and the seminormal form: exact rational action
//! matrices of the adjacent transpositions on each irreducible, indexed by
//! standard tableaux of the shape.

use crate::comb::partition::Partition;
use crate::linalg::{rat, Matrix, Rat};

/// Rows of entries; standard means rows and columns strictly increase and
/// the entries are 1..n.
pub type Tableau = Vec<Vec<usize>>;

/// All standard tableaux of a shape, generated by peeling the largest entry
/// off each removable corner; deterministic order (corners top to bottom,
/// recursively).
pub fn standard_tableaux(lambda: &Partition) -> Vec<Tableau> {
    let n = lambda.weight();
    if n == 0 {
        return vec![Vec::new()];
    }
    let shape = lambda.parts();
    let mut out = Vec::new();
    for r in 0..shape.len() {
        let removable = r + 1 == shape.len() || shape[r + 1] < shape[r];
        if !removable {
            continue;
        }
        let smaller: Vec<usize> = shape
            .iter()
            .enumerate()
            .map(|(row, &p)| if row == r { p - 1 } else { p })
            .filter(|&p| p > 0)
            .collect();
        let sub = Partition::new(smaller).expect("corner removal keeps a partition");
        for mut t in standard_tableaux(&sub) {
            while t.len() <= r {
                t.push(Vec::new());
            }
            t[r].push(n);
            out.push(t);
        }
    }
    out
}

fn position(t: &Tableau, entry: usize) -> (usize, usize) {
    for (r, row) in t.iter().enumerate() {
        if let Some(c) = row.iter().position(|&x| x == entry) {
            return (r, c);
        }
    }
    unreachable!("entry {entry} not in tableau")
}

/// Seminormal action matrices of s_1..s_{n-1}. For i, i+1 in the same row
/// the basis vector is fixed; in the same column it is negated; otherwise
/// the pair {t, swap(t)} carries the rank two block determined by the axial
/// distance in the member whose i sits in the earlier row.
pub fn seminormal_action(lambda: &Partition) -> (Vec<Tableau>, Vec<Matrix>) {
    let tabs = standard_tableaux(lambda);
    let n = lambda.weight();
    let d = tabs.len();
    let mut mats = Vec::with_capacity(n.saturating_sub(1));
    for i in 1..n {
        let mut m = Matrix::zero(d, d);
        for (j, t) in tabs.iter().enumerate() {
            let (r1, c1) = position(t, i);
            let (r2, c2) = position(t, i + 1);
            if r1 == r2 {
                m.set(j, j, rat(1));
            } else if c1 == c2 {
                m.set(j, j, rat(-1));
            } else {
                let mut u = t.clone();
                u[r1][c1] = i + 1;
                u[r2][c2] = i;
                let k = tabs
                    .iter()
                    .position(|x| *x == u)
                    .expect("swap stays standard");
                let content = |r: usize, c: usize| rat(c as i64) - rat(r as i64);
                if r1 < r2 {
                    // t is the base member; d = content(i+1) - content(i).
                    let dist: Rat = content(r2, c2) - content(r1, c1);
                    m.set(j, j, rat(1) / dist.clone());
                    m.set(k, j, rat(1) - rat(1) / (dist.clone() * dist));
                } else {
                    // u is the base; its axial distance has the entries at
                    // the swapped positions.
                    let dist: Rat = content(r1, c1) - content(r2, c2);
                    m.set(k, j, rat(1));
                    m.set(j, j, -(rat(1) / dist));
                }
            }
        }
        mats.push(m);
    }
    (tabs, mats)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::comb::partition::partitions_of;

    fn part(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn tableau_counts_for_small_shapes() {
        assert_eq!(standard_tableaux(&part(&[])).len(), 1);
        assert_eq!(standard_tableaux(&part(&[3])).len(), 1);
        assert_eq!(standard_tableaux(&part(&[1, 1, 1])).len(), 1);
        assert_eq!(standard_tableaux(&part(&[2, 1])).len(), 2);
        assert_eq!(standard_tableaux(&part(&[2, 2])).len(), 2);
        assert_eq!(standard_tableaux(&part(&[3, 1])).len(), 3);
        assert_eq!(standard_tableaux(&part(&[3, 2])).len(), 5);
        assert_eq!(standard_tableaux(&part(&[2, 2, 1])).len(), 5);
    }

    #[test]
    fn entries_standard_in_every_generated_tableau() {
        for lambda in partitions_of(5) {
            for t in standard_tableaux(&lambda) {
                for (r, row) in t.iter().enumerate() {
                    assert_eq!(row.len(), lambda.parts()[r]);
                    for w in row.windows(2) {
                        assert!(w[0] < w[1], "row increase in {t:?}");
                    }
                    if r + 1 < t.len() {
                        for (c, &x) in t[r + 1].iter().enumerate() {
                            assert!(row[c] < x, "column increase in {t:?}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn generators_are_involutions() {
        for n in 0..=4usize {
            for lambda in partitions_of(n) {
                let (tabs, mats) = seminormal_action(&lambda);
                let id = Matrix::identity(tabs.len());
                for m in &mats {
                    assert_eq!(m.mul(m), id, "involution fails for {lambda}");
                }
            }
        }
    }

    #[test]
    fn braid_and_commutation_relations() {
        for lambda in partitions_of(4) {
            let (_, mats) = seminormal_action(&lambda);
            let s = |i: usize| &mats[i - 1];
            assert_eq!(
                s(1).mul(s(2)).mul(s(1)),
                s(2).mul(s(1)).mul(s(2)),
                "braid 1,2 for {lambda}"
            );
            assert_eq!(
                s(2).mul(s(3)).mul(s(2)),
                s(3).mul(s(2)).mul(s(3)),
                "braid 2,3 for {lambda}"
            );
            assert_eq!(s(1).mul(s(3)), s(3).mul(s(1)), "commutation for {lambda}");
        }
    }

    #[test]
    fn standard_witness_block_for_the_two_row_hook() {
        // lambda = (2,1), generator s_2 on tableaux [[1,2],[3]], [[1,3],[2]].
        let (tabs, mats) = seminormal_action(&part(&[2, 1]));
        assert_eq!(tabs.len(), 2);
        let m = &mats[1];
        let half = rat(1) / rat(2);
        let base = tabs.iter().position(|t| t[0] == vec![1, 2]).unwrap();
        let other = 1 - base;
        assert_eq!(*m.get(base, base), -half.clone());
        assert_eq!(*m.get(other, base), rat(3) / rat(4));
        assert_eq!(*m.get(base, other), rat(1));
        assert_eq!(*m.get(other, other), half);
    }
}
