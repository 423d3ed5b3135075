//! Finite-dimensional associative unital algebras given by structure
//! constants, and algebra homomorphisms between them.

use serde_json::json;

use crate::exactla::{Field, Matrix, Scalar};
use crate::report::Check;
use crate::{Error, Result};

/// `e_i · e_j = Σ_k table[i][j][k] e_k`. Validity (associativity on all basis
/// triples, two-sided unit) is checked on construction.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FDAlgebra {
    field: Field,
    dim: usize,
    table: Vec<Vec<Vec<Scalar>>>,
    unit: Vec<Scalar>,
}

impl FDAlgebra {
    pub fn new(field: Field, table: Vec<Vec<Vec<Scalar>>>, unit: Vec<Scalar>) -> Result<Self> {
        let dim = unit.len();
        if table.len() != dim || table.iter().any(|r| r.len() != dim || r.iter().any(|c| c.len() != dim)) {
            return Err(Error::DimensionMismatch(format!("structure constants must be {dim}x{dim}x{dim}")));
        }
        let a = FDAlgebra { field, dim, table, unit };
        a.validate()?;
        Ok(a)
    }

    fn validate(&self) -> Result<()> {
        let n = self.dim;
        for i in 0..n {
            for j in 0..n {
                let ij = &self.table[i][j];
                for k in 0..n {
                    let left = self.mul_vec_basis_right(ij, k);
                    let right = self.mul_basis_left_vec(i, &self.table[j][k]);
                    if left != right {
                        return Err(Error::NotAssociative { i, j, k });
                    }
                }
            }
        }
        for i in 0..n {
            let e = crate::exactla::unit_vector(self.field, n, i);
            if self.mul(&self.unit, &e) != e || self.mul(&e, &self.unit) != e {
                return Err(Error::NotUnital(i));
            }
        }
        Ok(())
    }

    fn mul_vec_basis_right(&self, a: &[Scalar], k: usize) -> Vec<Scalar> {
        let mut out = vec![self.field.zero(); self.dim];
        for (i, x) in a.iter().enumerate().filter(|e| !e.1.is_zero()) {
            for (l, c) in self.table[i][k].iter().enumerate() {
                out[l] = &out[l] + &(x * c);
            }
        }
        out
    }

    fn mul_basis_left_vec(&self, i: usize, b: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![self.field.zero(); self.dim];
        for (j, y) in b.iter().enumerate().filter(|e| !e.1.is_zero()) {
            for (l, c) in self.table[i][j].iter().enumerate() {
                out[l] = &out[l] + &(y * c);
            }
        }
        out
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn table(&self) -> &[Vec<Vec<Scalar>>] {
        &self.table
    }

    /// Coordinates of `e_i · e_j`.
    pub fn product(&self, i: usize, j: usize) -> &[Scalar] {
        &self.table[i][j]
    }

    pub fn basis(&self, i: usize) -> Vec<Scalar> {
        crate::exactla::unit_vector(self.field, self.dim, i)
    }

    pub fn mul(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![self.field.zero(); self.dim];
        for (i, x) in a.iter().enumerate().filter(|e| !e.1.is_zero()) {
            for (j, y) in b.iter().enumerate().filter(|e| !e.1.is_zero()) {
                let xy = x * y;
                for (l, c) in self.table[i][j].iter().enumerate() {
                    if !c.is_zero() {
                        out[l] = &out[l] + &(&xy * c);
                    }
                }
            }
        }
        out
    }

    /// Matrix of `x ↦ a·x`.
    pub fn left_mult(&self, a: &[Scalar]) -> Matrix {
        let cols: Vec<Vec<Scalar>> = (0..self.dim).map(|j| self.mul(a, &self.basis(j))).collect();
        Matrix::from_columns(self.field, self.dim, &cols).expect("square")
    }

    /// Matrix of `x ↦ x·a`.
    pub fn right_mult(&self, a: &[Scalar]) -> Matrix {
        let cols: Vec<Vec<Scalar>> = (0..self.dim).map(|j| self.mul(&self.basis(j), a)).collect();
        Matrix::from_columns(self.field, self.dim, &cols).expect("square")
    }

    /// `dim × dim²` matrix of the multiplication `a ⊗ b ↦ ab`.
    pub fn mult_matrix(&self) -> Matrix {
        let mut cols = Vec::with_capacity(self.dim * self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                cols.push(self.table[i][j].clone());
            }
        }
        Matrix::from_columns(self.field, self.dim, &cols).expect("consistent")
    }

    /// Unit as a `dim × 1` matrix, i.e. the map `k → A`.
    pub fn unit_matrix(&self) -> Matrix {
        Matrix::column_vector(&self.unit, self.field)
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| (0..self.dim).all(|j| self.table[i][j] == self.table[j][i]))
    }

    pub fn opposite(&self) -> FDAlgebra {
        let n = self.dim;
        let table = (0..n).map(|i| (0..n).map(|j| self.table[j][i].clone()).collect()).collect();
        FDAlgebra { field: self.field, dim: n, table, unit: self.unit.clone() }
    }

    /// `self ⊗ other` with lexicographic basis `e_i ⊗ f_j ↦ i·dim(other) + j`.
    pub fn tensor(&self, other: &FDAlgebra) -> FDAlgebra {
        assert_eq!(self.field, other.field, "tensor of algebras over different fields");
        let (m, n) = (self.dim, other.dim);
        let d = m * n;
        let mut table = vec![vec![vec![self.field.zero(); d]; d]; d];
        for i in 0..m {
            for j in 0..n {
                for k in 0..m {
                    for l in 0..n {
                        let row = &mut table[i * n + j][k * n + l];
                        for (p, a) in self.table[i][k].iter().enumerate().filter(|e| !e.1.is_zero()) {
                            for (q, b) in other.table[j][l].iter().enumerate().filter(|e| !e.1.is_zero()) {
                                row[p * n + q] = a * b;
                            }
                        }
                    }
                }
            }
        }
        let unit = kron_vec(&self.unit, &other.unit);
        let out = FDAlgebra { field: self.field, dim: d, table, unit };
        debug_assert!(out.validate().is_ok());
        out
    }

    /// The ground field as a one-dimensional algebra.
    pub fn ground(field: Field) -> FDAlgebra {
        FDAlgebra { field, dim: 1, table: vec![vec![vec![field.one()]]], unit: vec![field.one()] }
    }

    /// `k × … × k` (n copies) with basis the orthogonal idempotents.
    pub fn product_of_fields(field: Field, n: usize) -> FDAlgebra {
        let mut table = vec![vec![vec![field.zero(); n]; n]; n];
        for (i, slab) in table.iter_mut().enumerate() {
            slab[i][i] = field.one();
        }
        FDAlgebra { field, dim: n, table, unit: vec![field.one(); n] }
    }

    /// Group algebra of the cyclic group of order n, basis `1, g, …, g^{n−1}`.
    pub fn cyclic_group(field: Field, n: usize) -> FDAlgebra {
        let mut table = vec![vec![vec![field.zero(); n]; n]; n];
        for i in 0..n {
            for j in 0..n {
                table[i][j][(i + j) % n] = field.one();
            }
        }
        let mut unit = vec![field.zero(); n];
        unit[0] = field.one();
        FDAlgebra { field, dim: n, table, unit }
    }

    /// Upper triangular 2×2 matrices with basis `E11, E12, E22`.
    pub fn upper_triangular(field: Field) -> FDAlgebra {
        let mut table = vec![vec![vec![field.zero(); 3]; 3]; 3];
        table[0][0][0] = field.one(); // E11·E11
        table[0][1][1] = field.one(); // E11·E12
        table[1][2][1] = field.one(); // E12·E22
        table[2][2][2] = field.one(); // E22·E22
        FDAlgebra { field, dim: 3, table, unit: vec![field.one(), field.zero(), field.one()] }
    }

    /// The identity map as an `AlgebraMap`.
    pub fn identity_map(&self) -> AlgebraMap {
        AlgebraMap { source: self.clone(), target: self.clone(), matrix: Matrix::identity(self.field, self.dim) }
    }
}

pub fn kron_vec(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().flat_map(|x| b.iter().map(move |y| x * y)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlgebraMap {
    pub source: FDAlgebra,
    pub target: FDAlgebra,
    /// `target.dim × source.dim`.
    pub matrix: Matrix,
}

impl AlgebraMap {
    pub fn new(source: FDAlgebra, target: FDAlgebra, matrix: Matrix) -> Result<Self> {
        if matrix.rows() != target.dim() || matrix.cols() != source.dim() {
            return Err(Error::DimensionMismatch(format!(
                "algebra map matrix is {}x{}, expected {}x{}",
                matrix.rows(),
                matrix.cols(),
                target.dim(),
                source.dim()
            )));
        }
        Ok(AlgebraMap { source, target, matrix })
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.matrix.apply(v).expect("dimensions checked on construction")
    }

    pub fn compose(&self, first: &AlgebraMap) -> Result<AlgebraMap> {
        AlgebraMap::new(first.source.clone(), self.target.clone(), self.matrix.mul(&first.matrix)?)
    }
}

/// `f(1) = 1` and `f(e_i e_j) = f(e_i) f(e_j)` on all basis pairs; the first
/// failing pair is the witness.
pub fn check_algebra_map(f: &AlgebraMap) -> Check {
    let name = "algebra-map";
    if f.apply(f.source.unit()) != f.target.unit() {
        return Check::fail(name, &[], "f(1) != 1").with_witness(json!({"unit": true}));
    }
    let n = f.source.dim();
    let images: Vec<Vec<Scalar>> = (0..n).map(|i| f.apply(&f.source.basis(i))).collect();
    for i in 0..n {
        for j in 0..n {
            let lhs = f.apply(f.source.product(i, j));
            let rhs = f.target.mul(&images[i], &images[j]);
            if lhs != rhs {
                return Check::fail(name, &[], format!("f(e{i}·e{j}) != f(e{i})·f(e{j})"))
                    .with_witness(json!({"pair": [i, j]}));
            }
        }
    }
    Check::pass(name, &[])
}

/// The reindexing `(R⊗S)⊗T → R⊗(S⊗T)`. With lexicographic bases it is the
/// identity matrix; it is returned as a map so callers can verify it.
pub fn tensor_associativity_map(r: &FDAlgebra, s: &FDAlgebra, t: &FDAlgebra) -> AlgebraMap {
    let left = r.tensor(s).tensor(t);
    let right = r.tensor(&s.tensor(t));
    let n = left.dim();
    AlgebraMap { source: left, target: right, matrix: Matrix::identity(r.field(), n) }
}
