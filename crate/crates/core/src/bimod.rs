//! R-R-bimodules as left modules over `E = R ⊗ R^op`, relative tensor
//! products as explicit quotients, and the coherence data of the resulting
//! monoidal category.
//!
//! The basis of `E` is lexicographic, `e_i ⊗ e_j ↦ i·dim R + j`. For an
//! E-module X the left R-action is `r·x = ρ(r⊗1)x` and the right action is
//! `x·r = ρ(1⊗r)x`.

use std::collections::HashMap;
use std::sync::Arc;

use crate::algebra::{kron_vec, FDAlgebra};
use crate::exactla::{Field, Matrix, Quotient, Scalar, SparseRow, Subspace};
use crate::{Error, Result};

/// The base ring R together with `R^op` and `E = R ⊗ R^op`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BaseRing {
    pub r: FDAlgebra,
    pub e: FDAlgebra,
}

impl BaseRing {
    pub fn new(r: FDAlgebra) -> Self {
        let e = r.tensor(&r.opposite());
        BaseRing { r, e }
    }

    pub fn field(&self) -> Field {
        self.r.field()
    }

    pub fn dim_r(&self) -> usize {
        self.r.dim()
    }

    pub fn dim_e(&self) -> usize {
        self.e.dim()
    }

    /// `r ↦ r ⊗ 1`.
    pub fn s_e(&self, r: &[Scalar]) -> Vec<Scalar> {
        kron_vec(r, self.r.unit())
    }

    /// `r ↦ 1 ⊗ r`.
    pub fn t_e(&self, r: &[Scalar]) -> Vec<Scalar> {
        kron_vec(self.r.unit(), r)
    }

    pub fn s_e_basis(&self, i: usize) -> Vec<Scalar> {
        self.s_e(&self.r.basis(i))
    }

    pub fn t_e_basis(&self, i: usize) -> Vec<Scalar> {
        self.t_e(&self.r.basis(i))
    }

    /// R with `(r ⊗ r')·x = r x r'`; the monoidal unit.
    pub fn regular_r(&self) -> Module {
        let n = self.dim_r();
        let action = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .map(|(i, j)| self.r.left_mult(&self.r.basis(i)).mul(&self.r.right_mult(&self.r.basis(j))).expect("square"))
            .collect();
        Module { base: self.e.clone(), dim: n, action }
    }

    /// E acting on itself by left multiplication.
    pub fn regular_e(&self) -> Module {
        Module::regular(&self.e)
    }
}

/// A left module over `base`, given by one action matrix per basis element.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Module {
    base: FDAlgebra,
    dim: usize,
    action: Vec<Matrix>,
}

impl Module {
    pub fn new(base: FDAlgebra, dim: usize, action: Vec<Matrix>) -> Result<Self> {
        if action.len() != base.dim() {
            return Err(Error::NotRepresentation(format!(
                "{} action matrices for an algebra of dimension {}",
                action.len(),
                base.dim()
            )));
        }
        if let Some(m) = action.iter().find(|m| m.rows() != dim || m.cols() != dim) {
            return Err(Error::NotRepresentation(format!(
                "action matrix is {}x{}, expected {dim}x{dim}",
                m.rows(),
                m.cols()
            )));
        }
        let m = Module { base, dim, action };
        m.validate()?;
        Ok(m)
    }

    fn validate(&self) -> Result<()> {
        if !self.act(self.base.unit()).is_identity() {
            return Err(Error::NotRepresentation("the unit does not act as the identity".into()));
        }
        let n = self.base.dim();
        for i in 0..n {
            for j in 0..n {
                let lhs = self.act(self.base.product(i, j));
                let rhs = self.action[i].mul(&self.action[j])?;
                if lhs != rhs {
                    return Err(Error::NotRepresentation(format!("ρ(e{i}·e{j}) != ρ(e{i})ρ(e{j})")));
                }
            }
        }
        Ok(())
    }

    /// The left regular module.
    pub fn regular(a: &FDAlgebra) -> Module {
        let action = (0..a.dim()).map(|i| a.left_mult(&a.basis(i))).collect();
        Module { base: a.clone(), dim: a.dim(), action }
    }

    pub fn zero(base: &FDAlgebra) -> Module {
        let action = (0..base.dim()).map(|_| Matrix::zeros(base.field(), 0, 0)).collect();
        Module { base: base.clone(), dim: 0, action }
    }

    pub fn base(&self) -> &FDAlgebra {
        &self.base
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> Field {
        self.base.field()
    }

    pub fn action(&self) -> &[Matrix] {
        &self.action
    }

    /// `ρ(v)` for an arbitrary element `v` of the base algebra.
    pub fn act(&self, v: &[Scalar]) -> Matrix {
        let field = self.field();
        let mut acc = Matrix::zeros(field, self.dim, self.dim);
        for (i, c) in v.iter().enumerate().filter(|e| !e.1.is_zero()) {
            acc = acc.add(&self.action[i].scale(c)).expect("square");
        }
        acc
    }

    /// Restriction of scalars along an algebra map `f: B → base` given by its
    /// matrix.
    pub fn restrict(&self, b: &FDAlgebra, f: &Matrix) -> Result<Module> {
        let action = (0..b.dim()).map(|i| self.act(&f.apply(&b.basis(i)).expect("dims"))).collect();
        Module::new(b.clone(), self.dim, action)
    }

    /// Whether `m: self → target` intertwines the actions.
    pub fn is_map_to(&self, target: &Module, m: &Matrix) -> bool {
        m.rows() == target.dim
            && m.cols() == self.dim
            && self.action.iter().zip(&target.action).all(|(a, b)| m.mul(a).ok() == b.mul(m).ok())
    }
}

pub type ObjId = usize;

/// `X ⊗_R Y` as a quotient of `X ⊗_k Y`.
#[derive(Clone, Debug)]
pub struct TensorData {
    pub left: ObjId,
    pub right: ObjId,
    pub object: ObjId,
    pub quotient: Quotient,
}

impl TensorData {
    pub fn proj(&self) -> &Matrix {
        &self.quotient.proj
    }

    pub fn section(&self) -> &Matrix {
        &self.quotient.section
    }
}

/// Checks that `proj_target · lift` kills the relations of `source` and
/// returns the induced map on the quotient.
pub fn induce(projected_lift: &Matrix, source: &Quotient, context: &str) -> Result<Matrix> {
    if !source.descends(projected_lift)? {
        return Err(Error::IllDefined { context: context.to_string() });
    }
    projected_lift.mul(&source.section)
}

/// An arena of E-modules for a fixed base ring with memoized tensor
/// products. Structurally equal modules share an id.
#[derive(Debug)]
pub struct BimodCat {
    base: BaseRing,
    objects: Vec<Module>,
    labels: Vec<String>,
    index: HashMap<Module, ObjId>,
    tensors: HashMap<(ObjId, ObjId), Arc<TensorData>>,
    unit: ObjId,
}

impl BimodCat {
    pub fn new(base: BaseRing) -> Self {
        let mut cat = BimodCat {
            objects: Vec::new(),
            labels: Vec::new(),
            index: HashMap::new(),
            tensors: HashMap::new(),
            unit: 0,
            base: base.clone(),
        };
        cat.unit = cat.intern(base.regular_r(), "R");
        cat
    }

    pub fn base(&self) -> &BaseRing {
        &self.base
    }

    pub fn field(&self) -> Field {
        self.base.field()
    }

    pub fn unit(&self) -> ObjId {
        self.unit
    }

    /// Interns a module; the label is kept only if the module is new.
    pub fn intern(&mut self, m: Module, label: &str) -> ObjId {
        if let Some(&id) = self.index.get(&m) {
            return id;
        }
        let id = self.objects.len();
        self.index.insert(m.clone(), id);
        self.objects.push(m);
        self.labels.push(label.to_string());
        id
    }

    pub fn add(&mut self, m: Module, label: &str) -> Result<ObjId> {
        if m.base() != &self.base.e {
            return Err(Error::BaseMismatch(format!("module {label} is not over R⊗R^op")));
        }
        Ok(self.intern(m, label))
    }

    pub fn module(&self, id: ObjId) -> &Module {
        &self.objects[id]
    }

    pub fn dim(&self, id: ObjId) -> usize {
        self.objects[id].dim()
    }

    pub fn label(&self, id: ObjId) -> &str {
        &self.labels[id]
    }

    pub fn identity(&self, id: ObjId) -> Matrix {
        Matrix::identity(self.field(), self.dim(id))
    }

    /// `ρ_X(r ⊗ 1)`.
    pub fn left_r(&self, x: ObjId, i: usize) -> Matrix {
        self.objects[x].act(&self.base.s_e_basis(i))
    }

    /// `ρ_X(1 ⊗ r)`.
    pub fn right_r(&self, x: ObjId, i: usize) -> Matrix {
        self.objects[x].act(&self.base.t_e_basis(i))
    }

    pub fn tensor(&mut self, x: ObjId, y: ObjId) -> Result<ObjId> {
        Ok(self.tensor_data(x, y)?.object)
    }

    pub fn tensor_data(&mut self, x: ObjId, y: ObjId) -> Result<Arc<TensorData>> {
        if let Some(t) = self.tensors.get(&(x, y)) {
            return Ok(t.clone());
        }
        let field = self.field();
        let (dx, dy) = (self.dim(x), self.dim(y));
        let ix = Matrix::identity(field, dx);
        let iy = Matrix::identity(field, dy);
        let mut rel = Subspace::zero(field, dx * dy);
        for i in 0..self.base.dim_r() {
            let gen = self.right_r(x, i).kron(&iy).sub(&ix.kron(&self.left_r(y, i)))?.transpose();
            for row in 0..gen.rows() {
                rel.insert(gen.row(row));
            }
        }
        let quotient = Quotient::new(rel);
        let nr = self.base.dim_r();
        let mut action = Vec::with_capacity(nr * nr);
        for i in 0..nr {
            let lx = self.left_r(x, i);
            for j in 0..nr {
                let ry = self.right_r(y, j);
                action.push(quotient.proj.mul(&lx.kron(&ry))?.mul(&quotient.section)?);
            }
        }
        let module = Module::new(self.base.e.clone(), quotient.dim(), action)?;
        let label = format!("({}⊗{})", self.labels[x], self.labels[y]);
        let object = self.intern(module, &label);
        let data = Arc::new(TensorData { left: x, right: y, object, quotient });
        self.tensors.insert((x, y), data.clone());
        Ok(data)
    }

    /// `f ⊗ g: X ⊗ Y → X' ⊗ Y'`.
    pub fn tensor_map(
        &mut self,
        (x, x2, f): (ObjId, ObjId, &Matrix),
        (y, y2, g): (ObjId, ObjId, &Matrix),
    ) -> Result<Matrix> {
        let src = self.tensor_data(x, y)?;
        let tgt = self.tensor_data(x2, y2)?;
        let lift = tgt.proj().mul(&f.kron(g))?;
        induce(&lift, &src.quotient, "tensor product of maps")
    }

    /// `X ⊗ (Y ⊗ Z) → (X ⊗ Y) ⊗ Z`.
    pub fn assoc(&mut self, x: ObjId, y: ObjId, z: ObjId) -> Result<Matrix> {
        let field = self.field();
        let yz = self.tensor_data(y, z)?;
        let x_yz = self.tensor_data(x, yz.object)?;
        let xy = self.tensor_data(x, y)?;
        let xy_z = self.tensor_data(xy.object, z)?;
        let ix = Matrix::identity(field, self.dim(x));
        let iz = Matrix::identity(field, self.dim(z));
        let lift = xy_z.proj().mul(&xy.proj().kron(&iz))?.mul(&ix.kron(yz.section()))?;
        induce(&lift, &x_yz.quotient, "associator")
    }

    /// `(X ⊗ Y) ⊗ Z → X ⊗ (Y ⊗ Z)`.
    pub fn assoc_inv(&mut self, x: ObjId, y: ObjId, z: ObjId) -> Result<Matrix> {
        let field = self.field();
        let yz = self.tensor_data(y, z)?;
        let x_yz = self.tensor_data(x, yz.object)?;
        let xy = self.tensor_data(x, y)?;
        let xy_z = self.tensor_data(xy.object, z)?;
        let ix = Matrix::identity(field, self.dim(x));
        let iz = Matrix::identity(field, self.dim(z));
        let lift = x_yz.proj().mul(&ix.kron(yz.proj()))?.mul(&xy.section().kron(&iz))?;
        induce(&lift, &xy_z.quotient, "inverse associator")
    }

    /// `R ⊗ X → X`, `[r ⊗ x] ↦ r·x`.
    pub fn left_unitor(&mut self, x: ObjId) -> Result<Matrix> {
        let rx = self.tensor_data(self.unit, x)?;
        let blocks: Vec<Matrix> = (0..self.base.dim_r()).map(|i| self.left_r(x, i)).collect();
        let refs: Vec<&Matrix> = blocks.iter().collect();
        let lift = Matrix::hstack(self.field(), self.dim(x), &refs)?;
        induce(&lift, &rx.quotient, "left unitor")
    }

    /// `X ⊗ R → X`, `[x ⊗ r] ↦ x·r`.
    pub fn right_unitor(&mut self, x: ObjId) -> Result<Matrix> {
        let xr = self.tensor_data(x, self.unit)?;
        let (dx, nr) = (self.dim(x), self.base.dim_r());
        let acts: Vec<Matrix> = (0..nr).map(|i| self.right_r(x, i)).collect();
        let mut rows: Vec<SparseRow> = vec![Vec::new(); dx];
        for (i, a) in acts.iter().enumerate() {
            for (row, out) in rows.iter_mut().enumerate() {
                for (col, v) in a.row(row) {
                    out.push((col * nr + i, v.clone()));
                }
            }
        }
        let lift = Matrix::from_sparse_rows(self.field(), dx * nr, rows);
        induce(&lift, &xr.quotient, "right unitor")
    }

    /// Whether `m: x → y` is a module map.
    pub fn is_map(&self, x: ObjId, y: ObjId, m: &Matrix) -> bool {
        self.objects[x].is_map_to(&self.objects[y], m)
    }
}

/// Left-E-linear maps `A → X`, for A carrying a left E-action `lambda` and a
/// commuting right E-action `varrho`. The E-action on the result is
/// `(e·f)(a) = f(a·e)`.
#[derive(Clone, Debug)]
pub struct HomData {
    pub module: Module,
    /// Echelon basis of the space of linear maps, vectorized row-major as
    /// `dim X × dim A` matrices.
    pub maps: Subspace,
    pub dim_a: usize,
    pub dim_x: usize,
}

impl HomData {
    /// The map with the given coordinates, as a `dim X × dim A` matrix.
    pub fn map_of(&self, coords: &[Scalar]) -> Matrix {
        let field = self.module.field();
        let mut v = vec![field.zero(); self.dim_x * self.dim_a];
        let basis = self.maps.basis();
        for (k, c) in coords.iter().enumerate().filter(|e| !e.1.is_zero()) {
            for (j, x) in basis.row(k) {
                v[*j] = &v[*j] + &(c * x);
            }
        }
        let rows = v.chunks(self.dim_a).map(|r| r.to_vec()).collect();
        Matrix::from_rows(field, self.dim_a, rows).expect("shape")
    }

    /// Coordinates of a `dim X × dim A` matrix that is E-linear.
    pub fn coords_of(&self, f: &Matrix) -> Option<Vec<Scalar>> {
        let v: Vec<Scalar> = f.to_dense().into_iter().flatten().collect();
        self.maps.coordinates(&v)
    }
}

/// `row-major vec(P X Q) = (P ⊗ Qᵀ) vec(X)`.
fn vec_sandwich(p: &Matrix, q: &Matrix) -> Matrix {
    p.kron(&q.transpose())
}

pub fn hom_module(e: &FDAlgebra, lambda: &[Matrix], varrho: &[Matrix], x: &Module) -> Result<HomData> {
    if x.base() != e {
        return Err(Error::BaseMismatch("hom_module: X is not an E-module".into()));
    }
    let field = e.field();
    let (da, dx) = (lambda.first().map_or(0, Matrix::rows), x.dim());
    let ia = Matrix::identity(field, da);
    let ix = Matrix::identity(field, dx);
    let mut blocks = Vec::new();
    for (lam, rho) in lambda.iter().zip(x.action()) {
        // f λ(e_b) − ρ_X(e_b) f
        blocks.push(vec_sandwich(&ix, lam).sub(&vec_sandwich(rho, &ia))?);
    }
    let refs: Vec<&Matrix> = blocks.iter().collect();
    let constraints = Matrix::vstack(field, dx * da, &refs)?;
    let maps = crate::exactla::kernel(&constraints);
    let basis = maps.basis();
    let mut action = Vec::with_capacity(e.dim());
    for rho in varrho.iter().take(e.dim()) {
        let op = vec_sandwich(&ix, rho);
        let mut cols = Vec::with_capacity(maps.dim());
        for k in 0..maps.dim() {
            let mut v = vec![field.zero(); dx * da];
            for (j, c) in basis.row(k) {
                v[*j] = c.clone();
            }
            let image = op.apply(&v)?;
            let coords = maps
                .coordinates(&image)
                .ok_or_else(|| Error::IllDefined { context: "hom action leaves E-linear maps".into() })?;
            cols.push(coords);
        }
        action.push(Matrix::from_columns(field, maps.dim(), &cols)?);
    }
    let module = Module::new(e.clone(), maps.dim(), action)?;
    Ok(HomData { module, maps, dim_a: da, dim_x: dx })
}
