//! Sparse row-major matrices over an exact field.
//!
//! Every structure map in the workbench is one of these. Rows are stored as
//! sorted `(column, value)` lists without explicit zeros, so equality of two
//! matrices is plain structural equality.

use std::fmt;

use super::field::{Field, Scalar};
use crate::error::{Error, Result};

pub type SparseRow = Vec<(usize, Scalar)>;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<SparseRow>,
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        Matrix { field, rows, cols, data: vec![Vec::new(); rows] }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let data = (0..n).map(|i| vec![(i, field.one())]).collect();
        Matrix { field, rows: n, cols: n, data }
    }

    /// Dense rows; every row must have `cols` entries.
    pub fn from_rows(field: Field, cols: usize, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len());
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != cols {
                return Err(Error::DimensionMismatch(format!("row {i} has {} entries, expected {cols}", row.len())));
            }
            data.push(sparsify(row));
        }
        Ok(Matrix { field, rows: data.len(), cols, data })
    }

    /// Dense columns, i.e. the images of the standard basis vectors.
    pub fn from_columns(field: Field, rows: usize, columns: &[Vec<Scalar>]) -> Result<Self> {
        let mut data = vec![Vec::new(); rows];
        for (j, col) in columns.iter().enumerate() {
            if col.len() != rows {
                return Err(Error::DimensionMismatch(format!("column {j} has {} entries, expected {rows}", col.len())));
            }
            for (i, v) in col.iter().enumerate() {
                if !v.is_zero() {
                    data[i].push((j, v.clone()));
                }
            }
        }
        Ok(Matrix { field, rows, cols: columns.len(), data })
    }

    /// Builds from already-sparse rows. Entries may be unsorted and may contain
    /// zeros or repeated columns; they are summed and normalized.
    pub fn from_sparse_rows(field: Field, cols: usize, rows: Vec<SparseRow>) -> Self {
        let data = rows
            .into_iter()
            .map(|mut row| {
                row.sort_by_key(|e| e.0);
                let mut out: SparseRow = Vec::with_capacity(row.len());
                for (j, v) in row {
                    debug_assert!(j < cols);
                    match out.last_mut() {
                        Some((k, acc)) if *k == j => *acc = &*acc + &v,
                        _ => out.push((j, v)),
                    }
                }
                out.retain(|e| !e.1.is_zero());
                out
            })
            .collect::<Vec<_>>();
        Matrix { field, rows: data.len(), cols, data }
    }

    pub fn from_fn(field: Field, rows: usize, cols: usize, f: impl Fn(usize, usize) -> Scalar) -> Self {
        let data = (0..rows).map(|i| (0..cols).map(|j| (j, f(i, j))).filter(|e| !e.1.is_zero()).collect()).collect();
        Matrix { field, rows, cols, data }
    }

    /// A single column.
    pub fn column_vector(v: &[Scalar], field: Field) -> Self {
        let data = v.iter().map(|x| if x.is_zero() { vec![] } else { vec![(0, x.clone())] }).collect();
        Matrix { field, rows: v.len(), cols: 1, data }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[(usize, Scalar)] {
        &self.data[i]
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    pub fn get(&self, i: usize, j: usize) -> Scalar {
        match self.data[i].binary_search_by_key(&j, |e| e.0) {
            Ok(pos) => self.data[i][pos].1.clone(),
            Err(_) => self.field.zero(),
        }
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn to_dense(&self) -> Vec<Vec<Scalar>> {
        self.data
            .iter()
            .map(|row| {
                let mut dense = vec![self.field.zero(); self.cols];
                for (j, v) in row {
                    dense[*j] = v.clone();
                }
                dense
            })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Vec::is_empty)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && self.data.iter().enumerate().all(|(i, row)| row.len() == 1 && row[0].0 == i && row[0].1.is_one())
    }

    pub fn mul(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let zero = self.field.zero();
        let mut acc = vec![zero.clone(); rhs.cols];
        let mut touched = vec![false; rhs.cols];
        let mut list = Vec::new();
        let mut data = Vec::with_capacity(self.rows);
        for row in &self.data {
            for (k, a) in row {
                for (j, b) in &rhs.data[*k] {
                    let prod = a * b;
                    if touched[*j] {
                        acc[*j] = &acc[*j] + &prod;
                    } else {
                        touched[*j] = true;
                        list.push(*j);
                        acc[*j] = prod;
                    }
                }
            }
            list.sort_unstable();
            let mut out = Vec::with_capacity(list.len());
            for &j in &list {
                touched[j] = false;
                let v = std::mem::replace(&mut acc[j], zero.clone());
                if !v.is_zero() {
                    out.push((j, v));
                }
            }
            list.clear();
            data.push(out);
        }
        Ok(Matrix { field: self.field, rows: self.rows, cols: rhs.cols, data })
    }

    /// Composite `self ∘ rhs` of linear maps; an alias of `mul` that reads
    /// naturally in diagram code.
    pub fn compose(&self, rhs: &Matrix) -> Result<Matrix> {
        self.mul(rhs)
    }

    pub fn apply(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "cannot apply {}x{} matrix to a vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        Ok(self
            .data
            .iter()
            .map(|row| {
                row.iter()
                    .fold(self.field.zero(), |acc, (j, a)| if v[*j].is_zero() { acc } else { &acc + &(a * &v[*j]) })
            })
            .collect())
    }

    fn combine(&self, rhs: &Matrix, negate: bool) -> Result<Matrix> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::DimensionMismatch(format!(
                "cannot add {}x{} and {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let data = self
            .data
            .iter()
            .zip(&rhs.data)
            .map(|(a, b)| {
                let mut out = Vec::with_capacity(a.len() + b.len());
                let (mut p, mut q) = (0, 0);
                while p < a.len() || q < b.len() {
                    let ja = a.get(p).map_or(usize::MAX, |e| e.0);
                    let jb = b.get(q).map_or(usize::MAX, |e| e.0);
                    let rb = |x: &Scalar| if negate { -x } else { x.clone() };
                    if ja < jb {
                        out.push(a[p].clone());
                        p += 1;
                    } else if jb < ja {
                        out.push((jb, rb(&b[q].1)));
                        q += 1;
                    } else {
                        let v = if negate { &a[p].1 - &b[q].1 } else { &a[p].1 + &b[q].1 };
                        if !v.is_zero() {
                            out.push((ja, v));
                        }
                        p += 1;
                        q += 1;
                    }
                }
                out
            })
            .collect();
        Ok(Matrix { field: self.field, rows: self.rows, cols: self.cols, data })
    }

    pub fn add(&self, rhs: &Matrix) -> Result<Matrix> {
        self.combine(rhs, false)
    }

    pub fn sub(&self, rhs: &Matrix) -> Result<Matrix> {
        self.combine(rhs, true)
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        if c.is_zero() {
            return Matrix::zeros(self.field, self.rows, self.cols);
        }
        let data = self.data.iter().map(|row| row.iter().map(|(j, v)| (*j, c * v)).collect()).collect();
        Matrix { field: self.field, rows: self.rows, cols: self.cols, data }
    }

    /// Kronecker product; row and column indices are lexicographic
    /// `(i, k) ↦ i·rhs.rows + k`.
    pub fn kron(&self, rhs: &Matrix) -> Matrix {
        let mut data = Vec::with_capacity(self.rows * rhs.rows);
        for ra in &self.data {
            for rb in &rhs.data {
                let mut out = Vec::with_capacity(ra.len() * rb.len());
                for (ja, a) in ra {
                    for (jb, b) in rb {
                        out.push((ja * rhs.cols + jb, a * b));
                    }
                }
                data.push(out);
            }
        }
        Matrix { field: self.field, rows: self.rows * rhs.rows, cols: self.cols * rhs.cols, data }
    }

    pub fn transpose(&self) -> Matrix {
        let mut data = vec![Vec::new(); self.cols];
        for (i, row) in self.data.iter().enumerate() {
            for (j, v) in row {
                data[*j].push((i, v.clone()));
            }
        }
        Matrix { field: self.field, rows: self.cols, cols: self.rows, data }
    }

    pub fn hstack(field: Field, rows: usize, blocks: &[&Matrix]) -> Result<Matrix> {
        let mut data = vec![Vec::new(); rows];
        let mut offset = 0;
        for b in blocks {
            if b.rows != rows {
                return Err(Error::DimensionMismatch(format!("hstack: block has {} rows, expected {rows}", b.rows)));
            }
            for (i, row) in b.data.iter().enumerate() {
                data[i].extend(row.iter().map(|(j, v)| (j + offset, v.clone())));
            }
            offset += b.cols;
        }
        Ok(Matrix { field, rows, cols: offset, data })
    }

    pub fn vstack(field: Field, cols: usize, blocks: &[&Matrix]) -> Result<Matrix> {
        let mut data = Vec::new();
        for b in blocks {
            if b.cols != cols {
                return Err(Error::DimensionMismatch(format!("vstack: block has {} columns, expected {cols}", b.cols)));
            }
            data.extend(b.data.iter().cloned());
        }
        Ok(Matrix { field, rows: data.len(), cols, data })
    }

    pub fn select_rows(&self, idx: &[usize]) -> Matrix {
        let data = idx.iter().map(|&i| self.data[i].clone()).collect();
        Matrix { field: self.field, rows: idx.len(), cols: self.cols, data }
    }

    /// First column on which the two matrices differ.
    pub fn first_mismatch_column(&self, other: &Matrix) -> Option<usize> {
        if self.rows != other.rows || self.cols != other.cols {
            return Some(0);
        }
        let mut best: Option<usize> = None;
        for (a, b) in self.data.iter().zip(&other.data) {
            if a == b {
                continue;
            }
            let (mut p, mut q) = (0, 0);
            loop {
                match (a.get(p), b.get(q)) {
                    (Some(x), Some(y)) if x == y => {
                        p += 1;
                        q += 1;
                    }
                    (Some(x), Some(y)) => {
                        let j = x.0.min(y.0);
                        best = Some(best.map_or(j, |c| c.min(j)));
                        break;
                    }
                    (Some(x), None) | (None, Some(x)) => {
                        best = Some(best.map_or(x.0, |c| c.min(x.0)));
                        break;
                    }
                    (None, None) => break,
                }
            }
        }
        best
    }

    /// Permutation of tensor factors. Input factor `k` has dimension
    /// `dims[k]`; output factor `m` is input factor `perm[m]`.
    pub fn tensor_permutation(field: Field, dims: &[usize], perm: &[usize]) -> Result<Matrix> {
        let n = dims.len();
        let mut seen = vec![false; n];
        if perm.len() != n || perm.iter().any(|&p| p >= n || std::mem::replace(&mut seen[p], true)) {
            return Err(Error::DimensionMismatch(format!("{perm:?} is not a permutation of {n} factors")));
        }
        let total: usize = dims.iter().product();
        let out_dims: Vec<usize> = perm.iter().map(|&p| dims[p]).collect();
        let mut data = vec![Vec::new(); total];
        let mut digits = vec![0usize; n];
        for col in 0..total {
            let mut rem = col;
            for k in (0..n).rev() {
                digits[k] = rem % dims[k];
                rem /= dims[k];
            }
            let mut row = 0;
            for m in 0..n {
                row = row * out_dims[m] + digits[perm[m]];
            }
            data[row].push((col, field.one()));
        }
        Ok(Matrix { field, rows: total, cols: total, data })
    }
}

fn sparsify(row: Vec<Scalar>) -> SparseRow {
    row.into_iter().enumerate().filter(|e| !e.1.is_zero()).collect()
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.to_dense() {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// Row-major vectorization, for linear systems whose unknown is a matrix.
impl Matrix {
    pub fn vectorize(&self) -> Vec<Scalar> {
        self.to_dense().into_iter().flatten().collect()
    }

    pub fn from_vectorized(field: Field, rows: usize, cols: usize, v: &[Scalar]) -> Result<Matrix> {
        if v.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!("{} entries for a {rows}x{cols} matrix", v.len())));
        }
        Ok(Matrix::from_fn(field, rows, cols, |i, j| v[i * cols + j].clone()))
    }

    /// The matrix of `X ↦ P X Q` on row-major vectorizations, `P ⊗ Qᵀ`.
    pub fn sandwich(p: &Matrix, q: &Matrix) -> Matrix {
        p.kron(&q.transpose())
    }
}

/// Unit coordinate vector.
pub fn unit_vector(field: Field, n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![field.zero(); n];
    v[i] = field.one();
    v
}
