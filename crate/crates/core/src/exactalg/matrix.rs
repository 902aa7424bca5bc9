//! Sparse matrices over Q(q, t) indexed by partitions.
//!
//! Convention used throughout the engine: for a conversion `A -> B` at degree
//! `n`, the column keyed by `mu` holds the `B`-expansion of `A[mu]`, i.e.
//! `A[mu] = sum_lambda M[(lambda, mu)] * B[lambda]`.

use std::collections::BTreeMap;

use super::coeff::Coeff;
use super::poly::Var;
use crate::combinat::Partition;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoeffMatrix {
    rows: Vec<Partition>,
    cols: Vec<Partition>,
    /// `(row index, col index) -> nonzero entry`
    entries: BTreeMap<(usize, usize), Coeff>,
}

impl CoeffMatrix {
    pub fn zero(rows: Vec<Partition>, cols: Vec<Partition>) -> Self {
        CoeffMatrix {
            rows,
            cols,
            entries: BTreeMap::new(),
        }
    }

    pub fn identity(keys: Vec<Partition>) -> Self {
        let entries = (0..keys.len()).map(|i| ((i, i), Coeff::one())).collect();
        CoeffMatrix {
            rows: keys.clone(),
            cols: keys,
            entries,
        }
    }

    /// Build from dense rows of integers (tests and small fixtures).
    pub fn from_int_rows(keys: Vec<Partition>, rows: &[Vec<i64>]) -> Self {
        let mut m = CoeffMatrix::zero(keys.clone(), keys);
        for (i, row) in rows.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                m.set_idx(i, j, Coeff::from_int(x));
            }
        }
        m
    }

    pub fn rows(&self) -> &[Partition] {
        &self.rows
    }

    pub fn cols(&self) -> &[Partition] {
        &self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    fn row_index(&self, p: &Partition) -> Option<usize> {
        self.rows.iter().position(|r| r == p)
    }

    fn col_index(&self, p: &Partition) -> Option<usize> {
        self.cols.iter().position(|c| c == p)
    }

    pub fn get_idx(&self, i: usize, j: usize) -> Coeff {
        self.entries.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn get(&self, row: &Partition, col: &Partition) -> Coeff {
        match (self.row_index(row), self.col_index(col)) {
            (Some(i), Some(j)) => self.get_idx(i, j),
            _ => Coeff::zero(),
        }
    }

    pub fn set_idx(&mut self, i: usize, j: usize, v: Coeff) {
        assert!(i < self.rows.len() && j < self.cols.len());
        if v.is_zero() {
            self.entries.remove(&(i, j));
        } else {
            self.entries.insert((i, j), v);
        }
    }

    /// Nonzero entries as `(row key, col key, value)`.
    pub fn entries(&self) -> impl Iterator<Item = (&Partition, &Partition, &Coeff)> + '_ {
        self.entries
            .iter()
            .map(|(&(i, j), v)| (&self.rows[i], &self.cols[j], v))
    }

    /// Column `col` as a sparse map row key -> value.
    pub fn column(&self, col: &Partition) -> BTreeMap<Partition, Coeff> {
        let Some(j) = self.col_index(col) else {
            return BTreeMap::new();
        };
        self.entries
            .iter()
            .filter(|((_, c), _)| *c == j)
            .map(|(&(i, _), v)| (self.rows[i].clone(), v.clone()))
            .collect()
    }

    fn dense(&self) -> Vec<Vec<Coeff>> {
        let mut d = vec![vec![Coeff::zero(); self.cols.len()]; self.rows.len()];
        for (&(i, j), v) in &self.entries {
            d[i][j] = v.clone();
        }
        d
    }

    fn from_dense(rows: Vec<Partition>, cols: Vec<Partition>, d: Vec<Vec<Coeff>>) -> Self {
        let mut m = CoeffMatrix::zero(rows, cols);
        for (i, row) in d.into_iter().enumerate() {
            for (j, v) in row.into_iter().enumerate() {
                if !v.is_zero() {
                    m.entries.insert((i, j), v);
                }
            }
        }
        m
    }

    pub fn transpose(&self) -> CoeffMatrix {
        CoeffMatrix {
            rows: self.cols.clone(),
            cols: self.rows.clone(),
            entries: self
                .entries
                .iter()
                .map(|(&(i, j), v)| ((j, i), v.clone()))
                .collect(),
        }
    }

    /// Matrix product `self * other`; `other`'s rows must match `self`'s columns.
    pub fn mul(&self, other: &CoeffMatrix) -> Result<CoeffMatrix> {
        if self.cols != other.rows {
            return Err(Error::SizeMismatch(
                "matrix product with incompatible keys".into(),
            ));
        }
        let mut by_row: Vec<Vec<(usize, &Coeff)>> = vec![Vec::new(); other.rows.len()];
        for (&(k, j), v) in &other.entries {
            by_row[k].push((j, v));
        }
        let mut pairs: BTreeMap<(usize, usize), Vec<(&Coeff, &Coeff)>> = BTreeMap::new();
        for (&(i, k), a) in &self.entries {
            for &(j, b) in &by_row[k] {
                pairs.entry((i, j)).or_default().push((a, b));
            }
        }
        let mut acc: BTreeMap<(usize, usize), Coeff> = pairs
            .into_iter()
            .map(|(key, ps)| (key, Coeff::sum_of_products(ps)))
            .collect();
        acc.retain(|_, v| !v.is_zero());
        Ok(CoeffMatrix {
            rows: self.rows.clone(),
            cols: other.cols.clone(),
            entries: acc,
        })
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && self.entries.len() == self.rows.len()
            && self.entries.iter().all(|(&(i, j), v)| i == j && v.is_one())
    }

    /// Apply the same substitution to every entry.
    pub fn substitute(&self, assignments: &[(Var, Coeff)]) -> Result<CoeffMatrix> {
        let mut m = CoeffMatrix::zero(self.rows.clone(), self.cols.clone());
        for (&(i, j), v) in &self.entries {
            m.set_idx(i, j, v.substitute(assignments)?);
        }
        Ok(m)
    }

    fn is_lower_triangular(&self) -> bool {
        self.entries.keys().all(|&(i, j)| i >= j)
    }

    fn is_upper_triangular(&self) -> bool {
        self.entries.keys().all(|&(i, j)| i <= j)
    }

    /// True if all diagonal entries are one and the matrix is triangular in
    /// its key order.
    pub fn is_unitriangular(&self) -> bool {
        self.is_square()
            && (self.is_lower_triangular() || self.is_upper_triangular())
            && (0..self.rows.len()).all(|i| self.get_idx(i, i).is_one())
    }

    /// Exact inverse. Triangular matrices (the engine's usual case) are
    /// inverted by substitution; anything else falls back to Gauss-Jordan.
    pub fn inverse(&self) -> Result<CoeffMatrix> {
        if !self.is_square() {
            return Err(Error::SizeMismatch("inverse of a non-square matrix".into()));
        }
        if self.is_lower_triangular() {
            return self.invert_lower();
        }
        if self.is_upper_triangular() {
            return Ok(self.transpose().invert_lower()?.transpose());
        }
        self.gauss_jordan_inverse()
    }

    fn invert_lower(&self) -> Result<CoeffMatrix> {
        let n = self.rows.len();
        let mut rows: Vec<Vec<(usize, &Coeff)>> = vec![Vec::new(); n];
        for (&(i, j), v) in &self.entries {
            if i != j {
                rows[i].push((j, v));
            }
        }
        let mut diag_inv = Vec::with_capacity(n);
        for i in 0..n {
            let d = self.get_idx(i, i);
            if d.is_zero() {
                return Err(Error::Singular {
                    context: String::new(),
                });
            }
            diag_inv.push(if d.is_one() { d } else { d.inv()? });
        }
        // X column by column: L x = e_j
        let mut x = vec![vec![Coeff::zero(); n]; n];
        #[allow(clippy::needless_range_loop)]
        for j in 0..n {
            for i in j..n {
                let mut s = if i == j { Coeff::one() } else { Coeff::zero() };
                for &(k, l) in &rows[i] {
                    if k >= j && !x[k][j].is_zero() {
                        s -= &(l * &x[k][j]);
                    }
                }
                x[i][j] = &s * &diag_inv[i];
            }
        }
        Ok(CoeffMatrix::from_dense(
            self.rows.clone(),
            self.cols.clone(),
            x,
        ))
    }

    fn gauss_jordan_inverse(&self) -> Result<CoeffMatrix> {
        let n = self.rows.len();
        let mut a = self.dense();
        let mut inv: Vec<Vec<Coeff>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { Coeff::one() } else { Coeff::zero() })
                    .collect()
            })
            .collect();
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !a[r][col].is_zero())
                .ok_or(Error::Singular {
                    context: String::new(),
                })?;
            a.swap(col, pivot);
            inv.swap(col, pivot);
            let p_inv = a[col][col].inv()?;
            for j in 0..n {
                if !a[col][j].is_zero() {
                    a[col][j] = &a[col][j] * &p_inv;
                }
                if !inv[col][j].is_zero() {
                    inv[col][j] = &inv[col][j] * &p_inv;
                }
            }
            for r in 0..n {
                if r == col || a[r][col].is_zero() {
                    continue;
                }
                let f = a[r][col].clone();
                for j in 0..n {
                    if !a[col][j].is_zero() {
                        let v = &f * &a[col][j];
                        a[r][j] -= &v;
                    }
                    if !inv[col][j].is_zero() {
                        let v = &f * &inv[col][j];
                        inv[r][j] -= &v;
                    }
                }
            }
        }
        Ok(CoeffMatrix::from_dense(
            self.cols.clone(),
            self.rows.clone(),
            inv,
        ))
    }

    /// Matrix-vector product with sparse vectors keyed by column / row keys.
    pub fn apply(&self, v: &BTreeMap<Partition, Coeff>) -> BTreeMap<Partition, Coeff> {
        let mut pairs: BTreeMap<&Partition, Vec<(&Coeff, &Coeff)>> = BTreeMap::new();
        for (row, col, m) in self.entries() {
            if let Some(x) = v.get(col) {
                pairs.entry(row).or_default().push((m, x));
            }
        }
        pairs
            .into_iter()
            .map(|(row, ps)| (row.clone(), Coeff::sum_of_products(ps)))
            .filter(|(_, c)| !c.is_zero())
            .collect()
    }

    /// Solve `self * x = rhs` for `x` (keys of `rhs` are row keys, keys of
    /// `x` are column keys).
    pub fn solve(&self, rhs: &BTreeMap<Partition, Coeff>) -> Result<BTreeMap<Partition, Coeff>> {
        Ok(self.inverse()?.apply(rhs))
    }
}
