//! Subspaces in canonical reduced echelon form, kernels, quotients and
//! affine solving.

use super::field::{Field, Scalar};
use super::matrix::{Matrix, SparseRow};
use crate::error::{Error, Result};

/// A subspace of `field^ambient`, stored as the rows of its reduced row
/// echelon basis. Two equal subspaces have identical representations.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    field: Field,
    ambient: usize,
    rows: Vec<SparseRow>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: Field, ambient: usize) -> Self {
        Subspace { field, ambient, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(field: Field, ambient: usize) -> Self {
        let mut s = Subspace::zero(field, ambient);
        s.rows = (0..ambient).map(|i| vec![(i, field.one())]).collect();
        s.pivots = (0..ambient).collect();
        s
    }

    /// Span of dense vectors.
    pub fn span(field: Field, ambient: usize, vectors: &[Vec<Scalar>]) -> Result<Self> {
        let mut s = Subspace::zero(field, ambient);
        for v in vectors {
            if v.len() != ambient {
                return Err(Error::DimensionMismatch(format!("vector of length {} in ambient {ambient}", v.len())));
            }
            let sparse: SparseRow = v.iter().cloned().enumerate().filter(|e| !e.1.is_zero()).collect();
            s.insert(&sparse);
        }
        Ok(s)
    }

    /// Span of the rows of `m`.
    pub fn row_space(m: &Matrix) -> Self {
        let mut s = Subspace::zero(m.field(), m.cols());
        for i in 0..m.rows() {
            s.insert(m.row(i));
        }
        s
    }

    /// Span of the columns of `m`.
    pub fn column_space(m: &Matrix) -> Self {
        Subspace::row_space(&m.transpose())
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Basis vectors as the rows of a `dim × ambient` matrix.
    pub fn basis(&self) -> Matrix {
        Matrix::from_sparse_rows(self.field, self.ambient, self.rows.clone())
    }

    fn reduce(&self, v: &[(usize, Scalar)]) -> SparseRow {
        if self.rows.is_empty() {
            return v.iter().filter(|e| !e.1.is_zero()).cloned().collect();
        }
        let zero = self.field.zero();
        let mut dense = vec![zero.clone(); self.ambient];
        for (j, x) in v {
            dense[*j] = &dense[*j] + x;
        }
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if dense[p].is_zero() {
                continue;
            }
            let c = dense[p].clone();
            for (j, x) in row {
                dense[*j] = &dense[*j] - &(&c * x);
            }
        }
        dense.into_iter().enumerate().filter(|e| !e.1.is_zero()).collect()
    }

    /// Adds a vector to the spanning set; returns whether the dimension grew.
    pub fn insert(&mut self, v: &[(usize, Scalar)]) -> bool {
        let w = self.reduce(v);
        let Some((p, lead)) = w.first().cloned() else {
            return false;
        };
        let inv = lead.inv().expect("nonzero leading entry");
        let w: SparseRow = w.into_iter().map(|(j, x)| (j, &x * &inv)).collect();
        for row in &mut self.rows {
            if let Ok(pos) = row.binary_search_by_key(&p, |e| e.0) {
                let c = row[pos].1.clone();
                *row = axpy(row, &c, &w);
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, w);
        true
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        let sparse: SparseRow = v.iter().cloned().enumerate().filter(|e| !e.1.is_zero()).collect();
        self.reduce(&sparse).is_empty()
    }

    /// Coordinates of `v` in the echelon basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient == other.ambient && self.rows.iter().all(|r| other.reduce(r).is_empty())
    }

    /// Sum of two subspaces.
    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut s = self.clone();
        for r in &other.rows {
            s.insert(r);
        }
        s
    }
}

/// `row - c·w` for sorted sparse rows.
fn axpy(row: &[(usize, Scalar)], c: &Scalar, w: &[(usize, Scalar)]) -> SparseRow {
    let mut out = Vec::with_capacity(row.len() + w.len());
    let (mut p, mut q) = (0, 0);
    while p < row.len() || q < w.len() {
        let ja = row.get(p).map_or(usize::MAX, |e| e.0);
        let jb = w.get(q).map_or(usize::MAX, |e| e.0);
        if ja < jb {
            out.push(row[p].clone());
            p += 1;
        } else if jb < ja {
            out.push((jb, -&(c * &w[q].1)));
            q += 1;
        } else {
            let v = &row[p].1 - &(c * &w[q].1);
            if !v.is_zero() {
                out.push((ja, v));
            }
            p += 1;
            q += 1;
        }
    }
    out
}

pub fn rank(m: &Matrix) -> usize {
    Subspace::row_space(m).dim()
}

/// `{v : m·v = 0}` in canonical echelon form.
pub fn kernel(m: &Matrix) -> Subspace {
    let rref = Subspace::row_space(m);
    let n = m.cols();
    let field = m.field();
    let mut is_pivot = vec![false; n];
    for &p in rref.pivots() {
        is_pivot[p] = true;
    }
    let mut out = Subspace::zero(field, n);
    for f in (0..n).filter(|&f| !is_pivot[f]) {
        let mut v: SparseRow = vec![(f, field.one())];
        for (row, &p) in rref.rows.iter().zip(&rref.pivots) {
            if let Ok(pos) = row.binary_search_by_key(&f, |e| e.0) {
                v.push((p, -&row[pos].1));
            }
        }
        v.sort_by_key(|e| e.0);
        out.insert(&v);
    }
    out
}

/// A quotient `field^ambient / relations` with its canonical basis: the
/// coordinates not occupied by an echelon pivot of the relations.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quotient {
    pub relations: Subspace,
    /// `dim × ambient`; kills exactly the relations.
    pub proj: Matrix,
    /// `ambient × dim`; inclusion of the non-pivot coordinates.
    pub section: Matrix,
}

impl Quotient {
    pub fn new(relations: Subspace) -> Self {
        let field = relations.field();
        let n = relations.ambient_dim();
        let mut index = vec![None; n];
        let mut free = Vec::new();
        let mut pivot_row = vec![None; n];
        for (r, &p) in relations.pivots.iter().enumerate() {
            pivot_row[p] = Some(r);
        }
        for j in 0..n {
            if pivot_row[j].is_none() {
                index[j] = Some(free.len());
                free.push(j);
            }
        }
        let q = free.len();
        let mut proj_rows: Vec<SparseRow> = vec![Vec::new(); q];
        for j in 0..n {
            match pivot_row[j] {
                None => proj_rows[index[j].unwrap()].push((j, field.one())),
                Some(r) => {
                    for (c, x) in &relations.rows[r] {
                        if let Some(k) = index[*c] {
                            proj_rows[k].push((j, -x));
                        }
                    }
                }
            }
        }
        let proj = Matrix::from_sparse_rows(field, n, proj_rows);
        let sec_rows = (0..n).map(|j| index[j].map(|k| vec![(k, field.one())]).unwrap_or_default()).collect();
        let section = Matrix::from_sparse_rows(field, q, sec_rows);
        Quotient { relations, proj, section }
    }

    pub fn dim(&self) -> usize {
        self.proj.rows()
    }

    pub fn ambient_dim(&self) -> usize {
        self.proj.cols()
    }

    /// Whether the linear map `lift` (with domain the ambient space)
    /// vanishes on the relations, i.e. descends to the quotient.
    pub fn descends(&self, lift: &Matrix) -> Result<bool> {
        if self.relations.dim() == 0 {
            return Ok(true);
        }
        Ok(lift.mul(&self.relations.basis().transpose())?.is_zero())
    }
}

/// Convenience wrapper matching the plain `(proj, section)` signature.
pub fn quotient(ambient_dim: usize, relations: &Subspace) -> Result<(Matrix, Matrix)> {
    if relations.ambient_dim() != ambient_dim {
        return Err(Error::DimensionMismatch(format!(
            "relations live in dimension {}, expected {ambient_dim}",
            relations.ambient_dim()
        )));
    }
    let q = Quotient::new(relations.clone());
    Ok((q.proj, q.section))
}

/// Solutions of `a·x = b`: a particular solution together with the kernel of
/// `a`, or `None` when inconsistent.
pub fn solve_affine(a: &Matrix, b: &[Scalar]) -> Result<Option<(Vec<Scalar>, Subspace)>> {
    if b.len() != a.rows() {
        return Err(Error::DimensionMismatch(format!(
            "right-hand side of length {} for {} equations",
            b.len(),
            a.rows()
        )));
    }
    let field = a.field();
    let n = a.cols();
    let mut aug = Subspace::zero(field, n + 1);
    for (i, bi) in b.iter().enumerate() {
        let mut row: SparseRow = a.row(i).to_vec();
        if !bi.is_zero() {
            row.push((n, bi.clone()));
        }
        aug.insert(&row);
    }
    if aug.pivots.last() == Some(&n) {
        return Ok(None);
    }
    let mut x = vec![field.zero(); n];
    for (row, &p) in aug.rows.iter().zip(&aug.pivots) {
        if let Some((j, v)) = row.last() {
            if *j == n {
                x[p] = v.clone();
            }
        }
    }
    Ok(Some((x, kernel(a))))
}

pub fn inverse(m: &Matrix) -> Result<Matrix> {
    let n = m.rows();
    if m.cols() != n {
        return Err(Error::Singular(format!("{}x{} is not square", m.rows(), m.cols())));
    }
    let field = m.field();
    let mut aug = Subspace::zero(field, 2 * n);
    for i in 0..n {
        let mut row: SparseRow = m.row(i).to_vec();
        row.push((n + i, field.one()));
        aug.insert(&row);
    }
    if aug.pivots.iter().copied().take(n).ne(0..n) || aug.dim() != n {
        return Err(Error::Singular(format!("rank deficient {n}x{n} matrix")));
    }
    let rows =
        aug.rows.iter().map(|r| r.iter().filter(|e| e.0 >= n).map(|(j, v)| (j - n, v.clone())).collect()).collect();
    Ok(Matrix::from_sparse_rows(field, n, rows))
}
