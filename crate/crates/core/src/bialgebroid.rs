//! Left bialgebroids: data, axiom checks, the trivial bialgebroid `R ⊗ R^op`
//! and bialgebroid maps.
//!
//! A is an R-R-bimodule through `r·a·r' = s(r) t(r') a`, i.e. an E-module with
//! `ρ(r ⊗ r') = L_{s(r)t(r')}`. The comultiplication is stored in the
//! canonical quotient coordinates of `A ⊗_R A` computed by [`BimodCat`].

use serde_json::json;

use crate::algebra::{check_algebra_map, AlgebraMap, FDAlgebra};
use crate::bimod::{induce, BaseRing, BimodCat, Module, ObjId, TensorData};
use crate::exactla::{kernel, Field, Matrix, Scalar, Subspace};
use crate::report::{Check, Report};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BialgebroidData {
    pub base: BaseRing,
    pub a: FDAlgebra,
    /// `dim A × dim R`.
    pub s: Matrix,
    /// `dim A × dim R`, an algebra map from `R^op`.
    pub t: Matrix,
    /// `dim(A ⊗_R A) × dim A`.
    pub comul: Matrix,
    /// `dim R × dim A`.
    pub counit: Matrix,
}

/// `A` as an E-module and `A ⊗_R A` inside a category for the base.
pub struct BgdObjects {
    pub cat: BimodCat,
    pub a: ObjId,
    pub aa: std::sync::Arc<TensorData>,
}

impl BialgebroidData {
    pub fn field(&self) -> Field {
        self.a.field()
    }

    pub fn r(&self) -> &FDAlgebra {
        &self.base.r
    }

    /// `(s ⊗ t)(e)` for an element of E.
    pub fn st(&self, e: &[Scalar]) -> Vec<Scalar> {
        let nr = self.base.dim_r();
        let mut out = vec![self.field().zero(); self.a.dim()];
        for (idx, c) in e.iter().enumerate().filter(|x| !x.1.is_zero()) {
            let (i, j) = (idx / nr, idx % nr);
            let si = self.s.column(i);
            let tj = self.t.column(j);
            let p = self.a.mul(&si, &tj);
            for (o, x) in out.iter_mut().zip(&p) {
                *o = &*o + &(c * x);
            }
        }
        out
    }

    /// `A` with `ρ(e) = L_{(s⊗t)(e)}`.
    pub fn a_module(&self) -> Result<Module> {
        let action = (0..self.base.dim_e()).map(|b| self.a.left_mult(&self.st(&self.base.e.basis(b)))).collect();
        Module::new(self.base.e.clone(), self.a.dim(), action)
    }

    /// Right multiplications `R_{(s⊗t)(e)}`, one per basis element of E.
    pub fn right_action(&self) -> Vec<Matrix> {
        (0..self.base.dim_e()).map(|b| self.a.right_mult(&self.st(&self.base.e.basis(b)))).collect()
    }

    pub fn objects(&self) -> Result<BgdObjects> {
        let mut cat = BimodCat::new(self.base.clone());
        let a = cat.add(self.a_module()?, "A")?;
        let aa = cat.tensor_data(a, a)?;
        Ok(BgdObjects { cat, a, aa })
    }

    /// Validates shapes, the bimodule structure of A, and the shape of
    /// `comul` against the computed `A ⊗_R A`.
    pub fn new(base: BaseRing, a: FDAlgebra, s: Matrix, t: Matrix, comul: Matrix, counit: Matrix) -> Result<Self> {
        let (na, nr) = (a.dim(), base.dim_r());
        for (name, m) in [("s", &s), ("t", &t)] {
            if m.rows() != na || m.cols() != nr {
                return Err(Error::DimensionMismatch(format!("{name} must be {na}x{nr}")));
            }
        }
        if counit.rows() != nr || counit.cols() != na {
            return Err(Error::DimensionMismatch(format!("counit must be {nr}x{na}")));
        }
        let data = BialgebroidData { base, a, s, t, comul, counit };
        let obj = data.objects()?;
        let daa = obj.cat.dim(obj.aa.object);
        if data.comul.rows() != daa || data.comul.cols() != na {
            return Err(Error::DimensionMismatch(format!(
                "comul must be {daa}x{na} (A⊗_R A has dimension {daa}), found {}x{}",
                data.comul.rows(),
                data.comul.cols()
            )));
        }
        Ok(data)
    }

    /// As `new`, with the comultiplication given by a representative in
    /// `A ⊗_k A` (lexicographic basis), projected to `A ⊗_R A`.
    pub fn from_plain_comul(
        base: BaseRing,
        a: FDAlgebra,
        s: Matrix,
        t: Matrix,
        comul_plain: Matrix,
        counit: Matrix,
    ) -> Result<Self> {
        let probe = BialgebroidData {
            base: base.clone(),
            a: a.clone(),
            s: s.clone(),
            t: t.clone(),
            comul: Matrix::zeros(a.field(), 0, a.dim()),
            counit: counit.clone(),
        };
        let obj = probe.objects()?;
        let comul = obj.aa.proj().mul(&comul_plain)?;
        BialgebroidData::new(base, a, s, t, comul, counit)
    }

    /// Lift of the comultiplication to `A ⊗_k A`.
    pub fn comul_plain(&self, aa: &TensorData) -> Result<Matrix> {
        aa.section().mul(&self.comul)
    }

    pub fn s_map(&self) -> AlgebraMap {
        AlgebraMap { source: self.base.r.clone(), target: self.a.clone(), matrix: self.s.clone() }
    }

    pub fn t_map(&self) -> AlgebraMap {
        AlgebraMap { source: self.base.r.opposite(), target: self.a.clone(), matrix: self.t.clone() }
    }
}

fn obj_names() -> Vec<String> {
    vec!["A".to_string()]
}

/// Kernel of `X ↦ (X·(t(r) ⊗ 1) − X·(1 ⊗ s(r)))_r` on `A ⊗_R A`, in the
/// canonical quotient coordinates.
pub fn takeuchi_subspace(b: &BialgebroidData) -> Result<Subspace> {
    let obj = b.objects()?;
    takeuchi_in(b, &obj)
}

fn takeuchi_in(b: &BialgebroidData, obj: &BgdObjects) -> Result<Subspace> {
    let field = b.field();
    let ia = Matrix::identity(field, b.a.dim());
    let aa = &obj.aa;
    let mut blocks = Vec::new();
    for i in 0..b.base.dim_r() {
        let ri = b.r().basis(i);
        let rt = b.a.right_mult(&b.t.apply(&ri)?);
        let rs = b.a.right_mult(&b.s.apply(&ri)?);
        let lift = aa.proj().mul(&rt.kron(&ia).sub(&ia.kron(&rs))?)?;
        blocks.push(induce(&lift, &aa.quotient, "right multiplication on A⊗_R A")?);
    }
    let refs: Vec<&Matrix> = blocks.iter().collect();
    let stacked = Matrix::vstack(field, obj.cat.dim(aa.object), &refs)?;
    Ok(kernel(&stacked))
}

/// Source/target are algebra maps with commuting images.
fn structure_check(b: &BialgebroidData) -> Check {
    let name = "structure";
    let o = obj_names();
    let cs = check_algebra_map(&b.s_map());
    if !cs.passed() {
        return Check::fail(name, &o, format!("s: {}", cs.detail.unwrap_or_default()))
            .with_witness(cs.witness.unwrap_or_default());
    }
    let ct = check_algebra_map(&b.t_map());
    if !ct.passed() {
        return Check::fail(name, &o, format!("t: {}", ct.detail.unwrap_or_default()))
            .with_witness(ct.witness.unwrap_or_default());
    }
    for i in 0..b.base.dim_r() {
        for j in 0..b.base.dim_r() {
            let si = b.s.column(i);
            let tj = b.t.column(j);
            if b.a.mul(&si, &tj) != b.a.mul(&tj, &si) {
                return Check::fail(name, &o, format!("s(e{i}) and t(e{j}) do not commute"))
                    .with_witness(json!({"pair": [i, j]}));
            }
        }
    }
    Check::pass(name, &o)
}

/// Runs every axiom. Failures are entries of the report, never errors.
pub fn check_bgd(b: &BialgebroidData) -> Report {
    let mut rep = Report::new();
    let structure = structure_check(b);
    let ok = structure.passed();
    rep.push(structure);
    let names = [
        "bimodule-maps",
        "comonoid-coassoc",
        "comonoid-counit",
        "takeuchi-image",
        "comul-multiplicative",
        "comul-unital",
        "counit-unital",
        "counit-compatible",
    ];
    if !ok {
        for n in names {
            rep.push(Check::fail(n, &obj_names(), "skipped: source/target structure invalid"));
        }
        return rep;
    }
    match b.objects() {
        Err(e) => {
            for n in names {
                rep.push(Check::fail(n, &obj_names(), e.to_string()));
            }
        }
        Ok(mut obj) => {
            rep.push(bimodule_maps_check(b, &obj));
            rep.push(coassoc_check(b, &mut obj));
            rep.push(counit_check(b, &mut obj));
            let tak = takeuchi_in(b, &obj);
            rep.push(takeuchi_image_check(b, &tak));
            rep.push(comul_mult_check(b, &obj));
            rep.push(comul_unit_check(b, &obj));
            rep.push(counit_unit_check(b));
            rep.push(counit_compat_check(b));
        }
    }
    rep
}

fn bimodule_maps_check(b: &BialgebroidData, obj: &BgdObjects) -> Check {
    let name = "bimodule-maps";
    let o = obj_names();
    if !obj.cat.is_map(obj.a, obj.aa.object, &b.comul) {
        return Check::fail(name, &o, "comul is not an R-R-bimodule map");
    }
    if !obj.cat.is_map(obj.a, obj.cat.unit(), &b.counit) {
        return Check::fail(name, &o, "counit is not an R-R-bimodule map");
    }
    Check::pass(name, &o)
}

fn coassoc_check(b: &BialgebroidData, obj: &mut BgdObjects) -> Check {
    let a = obj.a;
    let aa = obj.aa.object;
    let id = obj.cat.identity(a);
    let sides = (|| {
        let cat = &mut obj.cat;
        let right_leg = cat.tensor_map((a, a, &id), (a, aa, &b.comul))?;
        let left_leg = cat.tensor_map((a, aa, &b.comul), (a, a, &id))?;
        let lhs = cat.assoc(a, a, a)?.mul(&right_leg)?.mul(&b.comul)?;
        let rhs = left_leg.mul(&b.comul)?;
        Ok((lhs, rhs))
    })();
    Check::from_result("comonoid-coassoc", &obj_names(), sides)
}

fn counit_check(b: &BialgebroidData, obj: &mut BgdObjects) -> Check {
    let name = "comonoid-counit";
    let a = obj.a;
    let unit = obj.cat.unit();
    let id = obj.cat.identity(a);
    let cat = &mut obj.cat;
    let left = (|| {
        let m = cat.tensor_map((a, unit, &b.counit), (a, a, &id))?;
        Ok((cat.left_unitor(a)?.mul(&m)?.mul(&b.comul)?, id.clone()))
    })();
    let c = Check::from_result(name, &obj_names(), left);
    if !c.passed() {
        return c;
    }
    let right = (|| {
        let m = cat.tensor_map((a, a, &id), (a, unit, &b.counit))?;
        Ok((cat.right_unitor(a)?.mul(&m)?.mul(&b.comul)?, id.clone()))
    })();
    Check::from_result(name, &obj_names(), right)
}

fn takeuchi_image_check(b: &BialgebroidData, tak: &Result<Subspace>) -> Check {
    let name = "takeuchi-image";
    let o = obj_names();
    match tak {
        Err(e) => Check::fail(name, &o, e.to_string()),
        Ok(tak) => {
            for j in 0..b.a.dim() {
                if !tak.contains(&b.comul.column(j)) {
                    return Check::fail(name, &o, format!("comul(e{j}) is outside the Takeuchi product"))
                        .with_witness(json!({"basis": j}));
                }
            }
            Check::pass(name, &o)
        }
    }
}

fn comul_mult_check(b: &BialgebroidData, obj: &BgdObjects) -> Check {
    let name = "comul-multiplicative";
    let o = obj_names();
    let aa = &obj.aa;
    let plain = |u: &[Scalar], w: &[Scalar]| square_mul(&b.a, u, w);
    let lifts: Vec<Vec<Scalar>> = match b.comul_plain(aa) {
        Ok(m) => (0..b.a.dim()).map(|j| m.column(j)).collect(),
        Err(e) => return Check::fail(name, &o, e.to_string()),
    };
    let rel = aa.quotient.relations.basis();
    for (j, u) in lifts.iter().enumerate() {
        for k in 0..rel.rows() {
            let w: Vec<Scalar> = (0..rel.cols()).map(|c| rel.get(k, c)).collect();
            let prod = plain(u, &w);
            if !aa.proj().apply(&prod).expect("dims").iter().all(Scalar::is_zero) {
                return Check::fail(name, &o, format!("product with comul(e{j}) is not well defined on A⊗_R A"))
                    .with_witness(json!({"basis": j, "relation": k}));
            }
        }
    }
    for i in 0..b.a.dim() {
        for j in 0..b.a.dim() {
            let lhs = b.comul.apply(b.a.product(i, j)).expect("dims");
            let rhs = aa.proj().apply(&plain(&lifts[i], &lifts[j])).expect("dims");
            if lhs != rhs {
                return Check::fail(name, &o, format!("comul(e{i}·e{j}) != comul(e{i})·comul(e{j})"))
                    .with_witness(json!({"pair": [i, j]}));
            }
        }
    }
    Check::pass(name, &o)
}

/// Product in `A⊗A` with factorwise multiplication, without building the tensor table.
fn square_mul(a: &FDAlgebra, u: &[Scalar], w: &[Scalar]) -> Vec<Scalar> {
    let n = a.dim();
    let mut out = vec![a.field().zero(); n * n];
    for (x, ux) in u.iter().enumerate().filter(|e| !e.1.is_zero()) {
        for (y, wy) in w.iter().enumerate().filter(|e| !e.1.is_zero()) {
            let c = ux * wy;
            let (left, right) = (a.product(x / n, y / n), a.product(x % n, y % n));
            for (p, l) in left.iter().enumerate().filter(|e| !e.1.is_zero()) {
                let cl = &c * l;
                for (q, r) in right.iter().enumerate().filter(|e| !e.1.is_zero()) {
                    out[p * n + q] = &out[p * n + q] + &(&cl * r);
                }
            }
        }
    }
    out
}

fn comul_unit_check(b: &BialgebroidData, obj: &BgdObjects) -> Check {
    let one = b.a.unit();
    let lhs = b.comul.apply(one).expect("dims");
    let rhs = obj.aa.proj().apply(&crate::algebra::kron_vec(one, one)).expect("dims");
    Check::from_bool("comul-unital", &obj_names(), lhs == rhs, "comul(1) != 1⊗1")
}

fn counit_unit_check(b: &BialgebroidData) -> Check {
    let lhs = b.counit.apply(b.a.unit()).expect("dims");
    Check::from_bool("counit-unital", &obj_names(), lhs == b.r().unit(), "counit(1) != 1")
}

/// `ε(a t(ε(b))) = ε(ab) = ε(a s(ε(b)))` on all basis pairs.
fn counit_compat_check(b: &BialgebroidData) -> Check {
    let name = "counit-compatible";
    let o = obj_names();
    let eps = |v: &[Scalar]| b.counit.apply(v).expect("dims");
    for j in 0..b.a.dim() {
        let eb = eps(&b.a.basis(j));
        let teb = b.t.apply(&eb).expect("dims");
        let seb = b.s.apply(&eb).expect("dims");
        for i in 0..b.a.dim() {
            let ai = b.a.basis(i);
            let mid = eps(b.a.product(i, j));
            let left = eps(&b.a.mul(&ai, &teb));
            let right = eps(&b.a.mul(&ai, &seb));
            if left != mid || right != mid {
                return Check::fail(name, &o, format!("counit compatibility fails for (e{i}, e{j})"))
                    .with_witness(json!({"pair": [i, j]}));
            }
        }
    }
    Check::pass(name, &o)
}

/// The bialgebroid `E = R ⊗ R^op` with `s(r) = r⊗1`, `t(r) = 1⊗r`,
/// `Δ(r⊗r') = (r⊗1) ⊗_R (1⊗r')` and `ε(r⊗r') = rr'`.
pub fn trivial_bialgebroid(r: &FDAlgebra) -> Result<BialgebroidData> {
    let base = BaseRing::new(r.clone());
    let field = r.field();
    let (nr, ne) = (base.dim_r(), base.dim_e());
    let e = base.e.clone();
    let s_cols: Vec<Vec<Scalar>> = (0..nr).map(|i| base.s_e_basis(i)).collect();
    let t_cols: Vec<Vec<Scalar>> = (0..nr).map(|i| base.t_e_basis(i)).collect();
    let s = Matrix::from_columns(field, ne, &s_cols)?;
    let t = Matrix::from_columns(field, ne, &t_cols)?;
    let mut comul_cols = Vec::with_capacity(ne);
    let mut counit_cols = Vec::with_capacity(ne);
    for i in 0..nr {
        for j in 0..nr {
            let left = base.s_e_basis(i);
            let right = base.t_e_basis(j);
            comul_cols.push(crate::algebra::kron_vec(&left, &right));
            counit_cols.push(r.product(i, j).to_vec());
        }
    }
    let comul_plain = Matrix::from_columns(field, ne * ne, &comul_cols)?;
    let counit = Matrix::from_columns(field, nr, &counit_cols)?;
    BialgebroidData::from_plain_comul(base, e, s, t, comul_plain, counit)
}

/// The group bialgebra `k[Z_n]` over k: `Δ(g) = g⊗g`, `ε(g) = 1`.
pub fn group_bialgebra(field: Field, n: usize) -> Result<BialgebroidData> {
    let a = FDAlgebra::cyclic_group(field, n);
    let base = BaseRing::new(FDAlgebra::ground(field));
    let unit = Matrix::column_vector(a.unit(), field);
    let cols: Vec<Vec<Scalar>> = (0..n).map(|i| crate::algebra::kron_vec(&a.basis(i), &a.basis(i))).collect();
    let comul_plain = Matrix::from_columns(field, n * n, &cols)?;
    let counit = Matrix::from_rows(field, n, vec![vec![field.one(); n]])?;
    BialgebroidData::from_plain_comul(base, a, unit.clone(), unit, comul_plain, counit)
}

/// Composite of an algebra map given by matrices with the identification of
/// `B ⊗_S B` inside `A ⊗_R A`.
fn tensor_square_map(b: &BialgebroidData, a: &BialgebroidData, phi: &Matrix) -> Result<Matrix> {
    let ob = b.objects()?;
    let oa = a.objects()?;
    let lift = oa.aa.proj().mul(&phi.kron(phi))?;
    induce(&lift, &ob.aa.quotient, "φ⊗φ on B⊗_S B")
}

/// Checks that `(ω, φ)` is a bialgebroid map from `b` (over S) to `a` (over
/// R). Errors only when ω is not an algebra map.
pub fn check_bialgebroid_map(
    b: &BialgebroidData,
    a: &BialgebroidData,
    omega: &AlgebraMap,
    phi: &AlgebraMap,
) -> Result<Report> {
    let oc = check_algebra_map(omega);
    if !oc.passed() {
        return Err(Error::NotAlgebraMap(format!("ω: {}", oc.detail.unwrap_or_default())));
    }
    let o = vec!["B".to_string(), "A".to_string()];
    let mut rep = Report::new();
    let pc = check_algebra_map(phi);
    rep.push(Check { name: "phi-algebra-map".into(), objects: o.clone(), ..pc });
    let sides = |l: Result<Matrix>, r: Result<Matrix>| -> Result<(Matrix, Matrix)> { Ok((l?, r?)) };
    rep.push(Check::from_result("source-compatible", &o, sides(phi.matrix.mul(&b.s), a.s.mul(&omega.matrix))));
    rep.push(Check::from_result("target-compatible", &o, sides(phi.matrix.mul(&b.t), a.t.mul(&omega.matrix))));
    let comul = (|| {
        let pp = tensor_square_map(b, a, &phi.matrix)?;
        Ok((a.comul.mul(&phi.matrix)?, pp.mul(&b.comul)?))
    })();
    rep.push(Check::from_result("comul-compatible", &o, comul));
    rep.push(Check::from_result(
        "counit-compatible",
        &o,
        sides(a.counit.mul(&phi.matrix), omega.matrix.mul(&b.counit)),
    ));
    rep.push(Check::from_result(
        "omega-determined",
        &o,
        sides(Ok(omega.matrix.clone()), a.counit.mul(&phi.matrix).and_then(|m| m.mul(&b.s))),
    ));
    Ok(rep)
}
