//! Exact rational linear algebra.
//!
//! Everything downstream (induction quotients, Hom spaces, composition series)
//! reduces to row reduction over `BigRational`, so exactness here means no
//! tolerance questions anywhere else.

use num::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;

pub type Rat = BigRational;

/// Shorthand for an integer rational.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(n.into())
}

/// Sparse vector with entries sorted by index and no explicit zeros.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SparseVec {
    entries: Vec<(usize, Rat)>,
}

impl SparseVec {
    pub fn new() -> Self {
        SparseVec {
            entries: Vec::new(),
        }
    }

    pub fn unit(index: usize) -> Self {
        SparseVec {
            entries: vec![(index, Rat::one())],
        }
    }

    pub fn single(index: usize, coeff: Rat) -> Self {
        if coeff.is_zero() {
            SparseVec::new()
        } else {
            SparseVec {
                entries: vec![(index, coeff)],
            }
        }
    }

    /// Builds from arbitrary (index, coeff) pairs, merging duplicates.
    pub fn from_entries(pairs: impl IntoIterator<Item = (usize, Rat)>) -> Self {
        let mut map: BTreeMap<usize, Rat> = BTreeMap::new();
        for (i, c) in pairs {
            let slot = map.entry(i).or_insert_with(Rat::zero);
            *slot += c;
        }
        SparseVec {
            entries: map.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &(usize, Rat)> {
        self.entries.iter()
    }

    pub fn leading(&self) -> Option<&(usize, Rat)> {
        self.entries.first()
    }

    pub fn get(&self, index: usize) -> Option<&Rat> {
        self.entries
            .binary_search_by_key(&index, |(i, _)| *i)
            .ok()
            .map(|pos| &self.entries[pos].1)
    }

    pub fn scaled(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return SparseVec::new();
        }
        SparseVec {
            entries: self.entries.iter().map(|(i, a)| (*i, a * c)).collect(),
        }
    }

    /// self + c * other, by sorted merge.
    pub fn add_scaled(&self, other: &SparseVec, c: &Rat) -> Self {
        if c.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut x, mut y) = (
            self.entries.iter().peekable(),
            other.entries.iter().peekable(),
        );
        loop {
            match (x.peek(), y.peek()) {
                (Some((i, a)), Some((j, b))) => {
                    if i < j {
                        out.push((*i, a.clone()));
                        x.next();
                    } else if j < i {
                        out.push((*j, b * c));
                        y.next();
                    } else {
                        let v = a + b * c;
                        if !v.is_zero() {
                            out.push((*i, v));
                        }
                        x.next();
                        y.next();
                    }
                }
                (Some((i, a)), None) => {
                    out.push((*i, a.clone()));
                    x.next();
                }
                (None, Some((j, b))) => {
                    out.push((*j, b * c));
                    y.next();
                }
                (None, None) => break,
            }
        }
        SparseVec { entries: out }
    }

    pub fn add(&self, other: &SparseVec) -> Self {
        self.add_scaled(other, &Rat::one())
    }

    pub fn sub(&self, other: &SparseVec) -> Self {
        self.add_scaled(other, &-Rat::one())
    }

    /// Re-index every entry through `f` (must be injective on the support).
    pub fn map_indices(&self, f: impl Fn(usize) -> usize) -> Self {
        SparseVec::from_entries(self.entries.iter().map(|(i, c)| (f(*i), c.clone())))
    }

    pub fn to_dense(&self, len: usize) -> Vec<Rat> {
        let mut out = vec![Rat::zero(); len];
        for (i, c) in &self.entries {
            out[*i] = c.clone();
        }
        out
    }
}

/// Incrementally maintained reduced row echelon form.
///
/// With a pivot limit, pivots are only chosen among columns `< limit`; columns
/// at or beyond the limit ride along as an augmentation, which is what
/// [`SpanSolver`] uses to read off expression coefficients.
#[derive(Clone, Debug, Default)]
pub struct RowReducer {
    limit: Option<usize>,
    pivots: BTreeMap<usize, SparseVec>,
}

impl RowReducer {
    pub fn new() -> Self {
        RowReducer {
            limit: None,
            pivots: BTreeMap::new(),
        }
    }

    pub fn with_pivot_limit(limit: usize) -> Self {
        RowReducer {
            limit: Some(limit),
            pivots: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivot_cols(&self) -> Vec<usize> {
        self.pivots.keys().copied().collect()
    }

    /// Canonical representative of `v` modulo the current row space.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut acc = v.clone();
        // Pivot rows carry no entries at other pivot columns, so one ordered
        // pass over the pivot columns present in `v` is complete.
        let hits: Vec<usize> = v
            .iter()
            .map(|(i, _)| *i)
            .filter(|i| self.pivots.contains_key(i))
            .collect();
        for col in hits {
            if let Some(c) = acc.get(col) {
                let c = c.clone();
                let row = &self.pivots[&col];
                acc = acc.add_scaled(row, &-c);
            }
        }
        acc
    }

    fn leading_within_limit<'a>(&self, v: &'a SparseVec) -> Option<&'a (usize, Rat)> {
        match self.limit {
            None => v.leading(),
            Some(l) => v.iter().find(|(i, _)| *i < l),
        }
    }

    /// Inserts `v`; returns true when the rank grew.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        let r = self.reduce(v);
        let Some((lead, coeff)) = self.leading_within_limit(&r).cloned() else {
            return false;
        };
        let row = r.scaled(&coeff.recip());
        // Back-substitute so existing rows stay clean at the new pivot column.
        let dirty: Vec<usize> = self
            .pivots
            .iter()
            .filter(|(_, p)| p.get(lead).is_some())
            .map(|(c, _)| *c)
            .collect();
        for col in dirty {
            let c = self.pivots[&col].get(lead).unwrap().clone();
            let updated = self.pivots[&col].add_scaled(&row, &-c);
            self.pivots.insert(col, updated);
        }
        self.pivots.insert(lead, row);
        true
    }

    /// True when `v` lies in the row space (ignoring augmentation columns).
    pub fn contains(&self, v: &SparseVec) -> bool {
        let r = self.reduce(v);
        self.leading_within_limit(&r).is_none()
    }

    pub fn row(&self, pivot_col: usize) -> Option<&SparseVec> {
        self.pivots.get(&pivot_col)
    }
}

/// Rank of a list of sparse rows.
pub fn rank(rows: &[SparseVec]) -> usize {
    let mut red = RowReducer::new();
    for r in rows {
        red.insert(r);
    }
    red.rank()
}

/// Basis of the right nullspace of the system `rows . x = 0` in `nvars`
/// unknowns, one basis vector per free column, in ascending column order.
pub fn nullspace(rows: &[SparseVec], nvars: usize) -> Vec<SparseVec> {
    let mut red = RowReducer::new();
    for r in rows {
        red.insert(r);
    }
    let pivot_cols = red.pivot_cols();
    let mut out = Vec::new();
    for f in 0..nvars {
        if pivot_cols.binary_search(&f).is_ok() {
            continue;
        }
        let mut entries = vec![(f, Rat::one())];
        for p in &pivot_cols {
            if let Some(c) = red.row(*p).unwrap().get(f) {
                entries.push((*p, -c.clone()));
            }
        }
        out.push(SparseVec::from_entries(entries));
    }
    out
}

/// Tracks a spanning set and expresses new vectors over it.
#[derive(Clone, Debug)]
pub struct SpanSolver {
    dim: usize,
    inner: RowReducer,
    count: usize,
}

impl SpanSolver {
    pub fn new(dim: usize) -> Self {
        SpanSolver {
            dim,
            inner: RowReducer::with_pivot_limit(dim),
            count: 0,
        }
    }

    /// Adds `v` to the spanning set; returns true when it was independent.
    /// Dependent vectors are discarded and take no index, so expression
    /// indices count accepted vectors only.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        let aug = v.add(&SparseVec::unit(self.dim + self.count));
        if self.inner.insert(&aug) {
            self.count += 1;
            true
        } else {
            false
        }
    }

    pub fn rank(&self) -> usize {
        self.inner.rank()
    }

    pub fn inserted(&self) -> usize {
        self.count
    }

    /// Coefficients expressing `v` over the accepted vectors, or None when
    /// `v` is outside their span. Indices refer to acceptance order.
    pub fn express(&self, v: &SparseVec) -> Option<Vec<(usize, Rat)>> {
        let r = self.inner.reduce(v);
        if r.iter().any(|(i, _)| *i < self.dim) {
            return None;
        }
        Some(r.iter().map(|(i, c)| (i - self.dim, -c.clone())).collect())
    }
}

/// Dense matrix over the rationals, row major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<Rat>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, Rat::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> Rat) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Columns given as sparse vectors of length `rows`.
    pub fn from_cols(rows: usize, cols: &[SparseVec]) -> Self {
        let mut m = Matrix::zero(rows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            for (i, c) in col.iter() {
                m.set(*i, j, c.clone());
            }
        }
        m
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rat) {
        self.data[i * self.cols + j] = v;
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut out = Matrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.get(i, j) + a * b;
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a + b)
            .collect();
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a - b)
            .collect();
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn scaled(&self, c: &Rat) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn trace(&self) -> Rat {
        assert_eq!(self.rows, self.cols);
        (0..self.rows).fold(Rat::zero(), |acc, i| acc + self.get(i, i))
    }

    pub fn kron(&self, other: &Matrix) -> Matrix {
        Matrix::from_fn(self.rows * other.rows, self.cols * other.cols, |i, j| {
            self.get(i / other.rows, j / other.cols) * other.get(i % other.rows, j % other.cols)
        })
    }

    /// Matrix times sparse column vector.
    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        let mut acc = vec![Rat::zero(); self.rows];
        for (j, c) in v.iter() {
            for (i, slot) in acc.iter_mut().enumerate() {
                let a = self.get(i, *j);
                if !a.is_zero() {
                    *slot = &*slot + &(a * c);
                }
            }
        }
        SparseVec::from_entries(acc.into_iter().enumerate().filter(|(_, c)| !c.is_zero()))
    }

    pub fn col(&self, j: usize) -> SparseVec {
        SparseVec::from_entries((0..self.rows).map(|i| (i, self.get(i, j).clone())))
    }

    pub fn row_vec(&self, i: usize) -> SparseVec {
        SparseVec::from_entries((0..self.cols).map(|j| (j, self.get(i, j).clone())))
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == Matrix::identity(self.rows)
    }

    pub fn is_zero_matrix(&self) -> bool {
        self.data.iter().all(|a| a.is_zero())
    }

    pub fn det(&self) -> Rat {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Rat::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !m.get(r, col).is_zero()) else {
                return Rat::zero();
            };
            if p != col {
                for j in 0..n {
                    let a = m.get(col, j).clone();
                    let b = m.get(p, j).clone();
                    m.set(col, j, b);
                    m.set(p, j, a);
                }
                det = -det;
            }
            let pivot = m.get(col, col).clone();
            det *= &pivot;
            for r in col + 1..n {
                let f = m.get(r, col) / &pivot;
                if f.is_zero() {
                    continue;
                }
                for j in col..n {
                    let v = m.get(r, j) - &(&f * m.get(col, j));
                    m.set(r, j, v);
                }
            }
        }
        det
    }

    /// Largest absolute value of an entry, for diagnostics.
    pub fn max_abs(&self) -> Rat {
        self.data
            .iter()
            .map(Signed::abs)
            .max()
            .unwrap_or_else(Rat::zero)
    }
}
