//! Bimonads on R-R-bimodules presented by a kernel A, `T(X) = A ⊗_E X`, and
//! explicit matrices for their structure maps at given objects.

mod diagrams;
mod extract;
mod morphism;

pub use diagrams::{check_bmd, DIAGRAMS};
pub use extract::{check_preconditions, extract_bialgebroid};
pub use morphism::{
    check_ambimonoidal, check_entwining, check_monad_morphism, restriction_uniqueness, FunctorKind, Morphism,
    MorphismCtx,
};

use std::collections::HashMap;
use std::sync::Arc;

use crate::algebra::FDAlgebra;
use crate::bialgebroid::{check_bgd, BialgebroidData};
use crate::bimod::{hom_module, induce, BaseRing, BimodCat, HomData, Module, ObjId, TensorData};
use crate::exactla::{Field, Matrix, Quotient, Scalar, Subspace};
use crate::report::{Check, Report};
use crate::{Error, Result};

/// The kernel A of `T = A ⊗_E −`: an algebra with a left E-action `left`
/// (used for the bimodule structure of `TX`) and a commuting right E-action
/// `right` (used to form `⊗_E`), together with the kernels of γ and π.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BimonadPresentation {
    pub base: BaseRing,
    pub a: FDAlgebra,
    pub left: Vec<Matrix>,
    pub right: Vec<Matrix>,
    /// `A → A ⊗_R A`, canonical quotient coordinates, A an E-module via `left`.
    pub coprod: Matrix,
    /// `A → R`.
    pub counit: Matrix,
}

impl BimonadPresentation {
    pub fn new(
        base: BaseRing,
        a: FDAlgebra,
        left: Vec<Matrix>,
        right: Vec<Matrix>,
        coprod: Matrix,
        counit: Matrix,
    ) -> Result<Self> {
        let p = BimonadPresentation { base, a, left, right, coprod, counit };
        p.validate()?;
        Ok(p)
    }

    pub fn field(&self) -> Field {
        self.a.field()
    }

    /// `ϱ(v)` for an element of E.
    pub fn right_of(&self, v: &[Scalar]) -> Matrix {
        let n = self.a.dim();
        let mut acc = Matrix::zeros(self.field(), n, n);
        for (b, c) in v.iter().enumerate().filter(|e| !e.1.is_zero()) {
            acc = acc.add(&self.right[b].scale(c)).expect("square");
        }
        acc
    }

    pub fn a_module(&self) -> Result<Module> {
        Module::new(self.base.e.clone(), self.a.dim(), self.left.clone())
    }

    fn validate(&self) -> Result<()> {
        let (na, ne, nr) = (self.a.dim(), self.base.dim_e(), self.base.dim_r());
        if self.left.len() != ne || self.right.len() != ne {
            return Err(Error::DimensionMismatch(format!("need {ne} left and right action matrices")));
        }
        if self.counit.rows() != nr || self.counit.cols() != na {
            return Err(Error::DimensionMismatch(format!("counit must be {nr}x{na}")));
        }
        self.a_module()?;
        let e = &self.base.e;
        if !self.right_of(e.unit()).is_identity() {
            return Err(Error::NotRepresentation("right action: unit does not act as identity".into()));
        }
        for i in 0..ne {
            for j in 0..ne {
                if self.right_of(e.product(i, j)) != self.right[j].mul(&self.right[i])? {
                    return Err(Error::NotRepresentation(format!("right action fails on (e{i}, e{j})")));
                }
                if self.left[i].mul(&self.right[j])? != self.right[j].mul(&self.left[i])? {
                    return Err(Error::NotRepresentation(format!("left e{i} and right e{j} do not commute")));
                }
            }
        }
        let one = self.a.unit();
        for b in 0..ne {
            let l1 = self.left[b].apply(one)?;
            let r1 = self.right[b].apply(one)?;
            if l1 != r1 {
                return Err(Error::NotRepresentation(format!("e{b}·1 != 1·e{b}")));
            }
            for i in 0..na {
                let ai = self.a.basis(i);
                for j in 0..na {
                    let aj = self.a.basis(j);
                    let bal_l = self.a.mul(&self.right[b].apply(&ai)?, &aj);
                    let bal_r = self.a.mul(&ai, &self.left[b].apply(&aj)?);
                    let lin_l = self.left[b].apply(self.a.product(i, j))?;
                    let lin_r = self.a.mul(&self.left[b].apply(&ai)?, &aj);
                    let rin_l = self.right[b].apply(self.a.product(i, j))?;
                    let rin_r = self.a.mul(&ai, &self.right[b].apply(&aj)?);
                    if bal_l != bal_r || lin_l != lin_r || rin_l != rin_r {
                        return Err(Error::NotRepresentation(format!(
                            "multiplication is not E-balanced and E-bilinear at (e{i}, e{j}) for e{b}"
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Kernel presentation of the bimonad of a bialgebroid. Refuses data that
/// fails an axiom.
pub fn from_bialgebroid(b: &BialgebroidData) -> Result<BimonadPresentation> {
    let rep = check_bgd(b);
    if !rep.passed() {
        return Err(Error::Precondition {
            equation: "bialgebroid axioms".into(),
            witness: rep.failed_names().join(", "),
        });
    }
    from_bialgebroid_unchecked(b)
}

/// As [`from_bialgebroid`] without running the axiom checks, so that broken
/// data can be pushed through the diagram checker.
pub fn from_bialgebroid_unchecked(b: &BialgebroidData) -> Result<BimonadPresentation> {
    let left = b.a_module()?.action().to_vec();
    BimonadPresentation::new(b.base.clone(), b.a.clone(), left, b.right_action(), b.comul.clone(), b.counit.clone())
}

/// `T(X) = A ⊗_E X`.
#[derive(Clone, Debug)]
pub struct TData {
    pub x: ObjId,
    pub object: ObjId,
    pub quotient: Quotient,
}

impl TData {
    pub fn proj(&self) -> &Matrix {
        &self.quotient.proj
    }

    pub fn section(&self) -> &Matrix {
        &self.quotient.section
    }
}

/// Evaluation context for a presented bimonad: an arena of objects with
/// memoized `T`.
pub struct BimonadCtx {
    pub pres: BimonadPresentation,
    pub cat: BimodCat,
    pub a_obj: ObjId,
    t_cache: HashMap<ObjId, Arc<TData>>,
    coprod_plain: Matrix,
}

impl BimonadCtx {
    pub fn new(pres: BimonadPresentation) -> Result<Self> {
        let mut cat = BimodCat::new(pres.base.clone());
        let a_obj = cat.add(pres.a_module()?, "A")?;
        let aa = cat.tensor_data(a_obj, a_obj)?;
        if pres.coprod.rows() != cat.dim(aa.object) || pres.coprod.cols() != pres.a.dim() {
            return Err(Error::DimensionMismatch(format!("coprod must be {}x{}", cat.dim(aa.object), pres.a.dim())));
        }
        let coprod_plain = aa.section().mul(&pres.coprod)?;
        Ok(BimonadCtx { pres, cat, a_obj, t_cache: HashMap::new(), coprod_plain })
    }

    pub fn field(&self) -> Field {
        self.pres.field()
    }

    /// The comultiplication on plain `A ⊗_k A` coordinates.
    pub fn coprod_plain(&self) -> &Matrix {
        &self.coprod_plain
    }

    pub fn dim_a(&self) -> usize {
        self.pres.a.dim()
    }

    pub fn unit(&self) -> ObjId {
        self.cat.unit()
    }

    pub fn e_obj(&mut self) -> ObjId {
        let e = self.pres.base.regular_e();
        self.cat.intern(e, "E")
    }

    pub fn tensor(&mut self, x: ObjId, y: ObjId) -> Result<ObjId> {
        self.cat.tensor(x, y)
    }

    /// The canonical test family `R, E, A, A⊗A`.
    pub fn standard_family(&mut self) -> Result<Vec<(String, ObjId)>> {
        let r = self.unit();
        let e = self.e_obj();
        let a = self.a_obj;
        let aa = self.cat.tensor(a, a)?;
        Ok(vec![("R".into(), r), ("E".into(), e), ("A".into(), a), ("AA".into(), aa)])
    }

    pub fn t_data(&mut self, x: ObjId) -> Result<Arc<TData>> {
        if let Some(t) = self.t_cache.get(&x) {
            return Ok(t.clone());
        }
        let field = self.field();
        let (na, dx) = (self.dim_a(), self.cat.dim(x));
        let ia = Matrix::identity(field, na);
        let ix = Matrix::identity(field, dx);
        let mut rel = Subspace::zero(field, na * dx);
        for b in 0..self.pres.base.dim_e() {
            let gen = self.pres.right[b].kron(&ix).sub(&ia.kron(&self.cat.module(x).action()[b]))?.transpose();
            for row in 0..gen.rows() {
                rel.insert(gen.row(row));
            }
        }
        let quotient = Quotient::new(rel);
        let action = self
            .pres
            .left
            .iter()
            .map(|l| quotient.proj.mul(&l.kron(&ix))?.mul(&quotient.section))
            .collect::<Result<Vec<_>>>()?;
        let module = Module::new(self.pres.base.e.clone(), quotient.dim(), action)?;
        let label = format!("T{}", self.cat.label(x));
        let object = self.cat.intern(module, &label);
        let data = Arc::new(TData { x, object, quotient });
        self.t_cache.insert(x, data.clone());
        Ok(data)
    }

    pub fn t(&mut self, x: ObjId) -> Result<ObjId> {
        Ok(self.t_data(x)?.object)
    }

    /// `T(f)` for `f: x → y`.
    pub fn t_map(&mut self, x: ObjId, y: ObjId, f: &Matrix) -> Result<Matrix> {
        let tx = self.t_data(x)?;
        let ty = self.t_data(y)?;
        let ia = Matrix::identity(self.field(), self.dim_a());
        let lift = ty.proj().mul(&ia.kron(f))?;
        induce(&lift, &tx.quotient, "T on a map")
    }

    /// The matrix of `f ↦ pre ∘ T(f)` on row-major vectorizations of
    /// `f: x → y`, using `kron(I, f) = Σ_i kron(e_i, I) f kron(e_iᵀ, I)`.
    pub fn t_map_coefficients(&mut self, x: ObjId, y: ObjId, pre: &Matrix) -> Result<Matrix> {
        let field = self.field();
        let tx = self.t_data(x)?;
        let ty = self.t_data(y)?;
        let (na, dx, dy) = (self.dim_a(), self.cat.dim(x), self.cat.dim(y));
        let front = pre.mul(ty.proj())?;
        let (ix, iy) = (Matrix::identity(field, dx), Matrix::identity(field, dy));
        let mut acc = Matrix::zeros(field, pre.rows() * tx.quotient.dim(), dy * dx);
        for i in 0..na {
            let ei = Matrix::column_vector(&crate::exactla::unit_vector(field, na, i), field);
            let p = front.mul(&ei.kron(&iy))?;
            let q = ei.transpose().kron(&ix).mul(tx.section())?;
            acc = acc.add(&Matrix::sandwich(&p, &q))?;
        }
        Ok(acc)
    }

    /// `μ_x: TTx → Tx`, `a ⊗ [b ⊗ x] ↦ [ab ⊗ x]`.
    pub fn mu(&mut self, x: ObjId) -> Result<Matrix> {
        let tx = self.t_data(x)?;
        let ttx = self.t_data(tx.object)?;
        let field = self.field();
        let ia = Matrix::identity(field, self.dim_a());
        let ix = Matrix::identity(field, self.cat.dim(x));
        let lift = tx.proj().mul(&self.pres.a.mult_matrix().kron(&ix))?.mul(&ia.kron(tx.section()))?;
        induce(&lift, &ttx.quotient, "multiplication of T")
    }

    /// `η_x: x → Tx`, `x ↦ [1 ⊗ x]`.
    pub fn eta(&mut self, x: ObjId) -> Result<Matrix> {
        let u = self.pres.a.unit().to_vec();
        self.eta_with(x, &u)
    }

    /// `x ↦ [u ⊗ x]` for a fixed element u of A.
    pub fn eta_with(&mut self, x: ObjId, u: &[Scalar]) -> Result<Matrix> {
        let tx = self.t_data(x)?;
        let ix = Matrix::identity(self.field(), self.cat.dim(x));
        tx.proj().mul(&Matrix::column_vector(u, self.field()).kron(&ix))
    }

    /// `γ_{x,y}: T(x⊗y) → Tx ⊗ Ty`, `a ⊗ [x ⊗ y] ↦ [a₁ ⊗ x] ⊗ [a₂ ⊗ y]`.
    pub fn gamma(&mut self, x: ObjId, y: ObjId) -> Result<Matrix> {
        let field = self.field();
        let xy = self.cat.tensor_data(x, y)?;
        let txy = self.t_data(xy.object)?;
        let tx = self.t_data(x)?;
        let ty = self.t_data(y)?;
        let out = self.cat.tensor_data(tx.object, ty.object)?;
        let (na, dx, dy) = (self.dim_a(), self.cat.dim(x), self.cat.dim(y));
        let ia = Matrix::identity(field, na);
        let ixy = Matrix::identity(field, dx * dy);
        let perm = Matrix::tensor_permutation(field, &[na, na, dx, dy], &[0, 2, 1, 3])?;
        let lift = out
            .proj()
            .mul(&tx.proj().kron(ty.proj()))?
            .mul(&perm)?
            .mul(&self.coprod_plain.kron(&ixy))?
            .mul(&ia.kron(xy.section()))?;
        induce(&lift, &txy.quotient, "comonoidal structure γ")
    }

    /// `π: TR → R`, `a ⊗ r ↦ ε(a·s(r))`.
    pub fn pi(&mut self) -> Result<Matrix> {
        let field = self.field();
        let r = self.unit();
        let tr = self.t_data(r)?;
        let (na, nr) = (self.dim_a(), self.pres.base.dim_r());
        let blocks: Vec<Matrix> = (0..nr)
            .map(|i| self.pres.counit.mul(&self.pres.right_of(&self.pres.base.s_e_basis(i))))
            .collect::<Result<_>>()?;
        let mut cols = vec![Vec::new(); na * nr];
        for (i, blk) in blocks.iter().enumerate() {
            for a in 0..na {
                cols[a * nr + i] = blk.column(a);
            }
        }
        let lift = Matrix::from_columns(field, nr, &cols)?;
        induce(&lift, &tr.quotient, "counit π")
    }

    /// The multiplication `A ⊗_E A → A` induced from the algebra structure.
    pub fn mult_on_balanced(&mut self) -> Result<Matrix> {
        let field = self.field();
        let na = self.dim_a();
        let ia = Matrix::identity(field, na);
        let mut rel = Subspace::zero(field, na * na);
        for b in 0..self.pres.base.dim_e() {
            let gen = self.pres.right[b].kron(&ia).sub(&ia.kron(&self.pres.left[b]))?.transpose();
            for row in 0..gen.rows() {
                rel.insert(gen.row(row));
            }
        }
        let q = Quotient::new(rel);
        induce(&self.pres.a.mult_matrix(), &q, "multiplication on A⊗_E A")
    }

    pub fn tensor_data(&mut self, x: ObjId, y: ObjId) -> Result<Arc<TensorData>> {
        self.cat.tensor_data(x, y)
    }

    /// Adds an E-module given by the caller.
    pub fn add(&mut self, m: Module, label: &str) -> Result<ObjId> {
        self.cat.add(m, label)
    }

    /// `Hom_E(A, x)` with E acting through the right action of A.
    pub fn hom(&self, x: ObjId) -> Result<HomData> {
        hom_module(&self.pres.base.e, &self.pres.left, &self.pres.right, self.cat.module(x))
    }

    /// Counit `T Hom(A, x) → x`, `[a ⊗ f] ↦ f(a)`.
    pub fn adjunction_counit(&mut self, x: ObjId, hom: &HomData) -> Result<(ObjId, Matrix)> {
        let h = self.cat.intern(hom.module.clone(), &format!("Hom(A,{})", self.cat.label(x)));
        let th = self.t_data(h)?;
        let (na, dx, dh) = (self.dim_a(), self.cat.dim(x), hom.module.dim());
        let mut cols = vec![Vec::new(); na * dh];
        for j in 0..dh {
            let f = hom.map_of(&crate::exactla::unit_vector(self.field(), dh, j));
            for a in 0..na {
                cols[a * dh + j] = f.column(a);
            }
        }
        let lift = Matrix::from_columns(self.field(), dx, &cols)?;
        Ok((h, induce(&lift, &th.quotient, "adjunction counit")?))
    }

    /// Unit `y → Hom(A, Ty)`, `y ↦ (a ↦ [a ⊗ y])`.
    pub fn adjunction_unit(&mut self, y: ObjId) -> Result<(HomData, Matrix)> {
        let ty = self.t_data(y)?;
        let hom = self.hom(ty.object)?;
        let (na, dy) = (self.dim_a(), self.cat.dim(y));
        let mut cols = Vec::with_capacity(dy);
        for v in 0..dy {
            let fcols: Vec<Vec<Scalar>> = (0..na).map(|a| ty.proj().column(a * dy + v)).collect();
            let f = Matrix::from_columns(self.field(), self.cat.dim(ty.object), &fcols)?;
            let coords = hom
                .coords_of(&f)
                .ok_or_else(|| Error::IllDefined { context: "adjunction unit is not E-linear".into() })?;
            cols.push(coords);
        }
        let m = Matrix::from_columns(self.field(), hom.module.dim(), &cols)?;
        Ok((hom, m))
    }

    /// Both triangle identities of `T ⊣ Hom(A, −)` at `x`.
    pub fn check_hom_adjunction(&mut self, name: &str, x: ObjId) -> Report {
        let mut rep = Report::new();
        let o = vec![name.to_string()];
        let first = (|| {
            let (hom, unit) = self.adjunction_unit(x)?;
            let tx = self.t(x)?;
            let (h, counit) = self.adjunction_counit(tx, &hom)?;
            let t_unit = self.t_map(x, h, &unit)?;
            Ok((counit.mul(&t_unit)?, self.cat.identity(tx)))
        })();
        rep.push(Check::from_result("adjunction-triangle-left", &o, first));
        let second = (|| {
            let hom = self.hom(x)?;
            let (h, counit) = self.adjunction_counit(x, &hom)?;
            let (hom_th, unit_h) = self.adjunction_unit(h)?;
            // Hom(A, counit): f ↦ counit ∘ f
            let mut cols = Vec::with_capacity(hom_th.module.dim());
            for j in 0..hom_th.module.dim() {
                let f = hom_th.map_of(&crate::exactla::unit_vector(self.field(), hom_th.module.dim(), j));
                let g = counit.mul(&f)?;
                cols.push(hom.coords_of(&g).ok_or_else(|| Error::IllDefined { context: "Hom(A, ε)".into() })?);
            }
            let hom_counit = Matrix::from_columns(self.field(), hom.module.dim(), &cols)?;
            Ok((hom_counit.mul(&unit_h)?, self.cat.identity(h)))
        })();
        rep.push(Check::from_result("adjunction-triangle-right", &o, second));
        rep
    }
}
