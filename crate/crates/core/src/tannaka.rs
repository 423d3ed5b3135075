//! The forgetful/free adjunction between A-modules and R-bimodules for a
//! bialgebroid A, and the comonoidal structure it induces on `T = UF`.
//!
//! U is strictly monoidal: `U(M ⊠ N) = UM ⊗_R UN` and `U(R) = R` on the nose,
//! so τ and ι are identities. `σ_{x,y} = ε_{Fx⊠Fy} ∘ F(η_x ⊗ η_y)` and
//! `υ = ε_R` are computed from the adjunction alone and compared with γ, π.

use crate::bialgebroid::{check_bgd, BialgebroidData};
use crate::bimod::{Module, ObjId};
use crate::bimonad::{from_bialgebroid, BimonadCtx};
use crate::emcat::{module_counit, underlying};
use crate::exactla::{Matrix, Scalar};
use crate::report::{Check, Report};
use crate::{Error, Result};

pub struct MonoidalAdjunction {
    pub ctx: BimonadCtx,
    /// The unit is `x ↦ [u ⊗ x]`; `u = 1` for the genuine adjunction.
    unit_elt: Vec<Scalar>,
}

impl MonoidalAdjunction {
    pub fn new(b: &BialgebroidData) -> Result<Self> {
        let ctx = BimonadCtx::new(from_bialgebroid(b)?)?;
        let unit_elt = ctx.pres.a.unit().to_vec();
        Ok(MonoidalAdjunction { ctx, unit_elt })
    }

    /// Replaces the unit by `x ↦ [u ⊗ x]`, keeping everything else.
    pub fn with_unit(mut self, u: Vec<Scalar>) -> Self {
        self.unit_elt = u;
        self
    }

    fn a_dim(&self) -> usize {
        self.ctx.dim_a()
    }

    /// `F(x)`: the A-module `A ⊗_E x`, A acting on the left.
    pub fn free_module(&mut self, x: ObjId) -> Result<Module> {
        let field = self.ctx.field();
        let tx = self.ctx.t_data(x)?;
        let ix = Matrix::identity(field, self.ctx.cat.dim(x));
        let a = self.ctx.pres.a.clone();
        let action = (0..a.dim())
            .map(|i| tx.proj().mul(&a.left_mult(&a.basis(i)).kron(&ix))?.mul(tx.section()))
            .collect::<Result<Vec<_>>>()?;
        Module::new(a, tx.quotient.dim(), action)
    }

    pub fn forget(&mut self, m: &Module, label: &str) -> Result<ObjId> {
        underlying(&mut self.ctx, m, label)
    }

    /// `M ⊠ N` on `UM ⊗_R UN`, `a·(m⊗n) = a₁m ⊗ a₂n`.
    pub fn box_product(&mut self, m: &Module, n: &Module) -> Result<Module> {
        let field = self.ctx.field();
        let (um, un) = (self.forget(m, "M")?, self.forget(n, "N")?);
        let t = self.ctx.tensor_data(um, un)?;
        let na = self.a_dim();
        let delta = self.ctx.coprod_plain().clone();
        let mut action = Vec::with_capacity(na);
        for a in 0..na {
            let mut acc = Matrix::zeros(field, m.dim() * n.dim(), m.dim() * n.dim());
            for (ij, c) in delta.column(a).iter().enumerate().filter(|e| !e.1.is_zero()) {
                let (i, j) = (ij / na, ij % na);
                acc = acc.add(&m.action()[i].kron(&n.action()[j]).scale(c))?;
            }
            action.push(t.proj().mul(&acc)?.mul(t.section())?);
        }
        Module::new(self.ctx.pres.a.clone(), t.quotient.dim(), action)
    }

    /// R as an A-module, `a·r = ε(a·s(r))`.
    pub fn unit_module(&mut self) -> Result<Module> {
        let field = self.ctx.field();
        let pres = &self.ctx.pres;
        let nr = pres.base.dim_r();
        let blocks =
            (0..nr).map(|i| pres.counit.mul(&pres.right_of(&pres.base.s_e_basis(i)))).collect::<Result<Vec<_>>>()?;
        let action = (0..pres.a.dim())
            .map(|a| {
                let cols: Vec<Vec<Scalar>> = blocks.iter().map(|b| b.column(a)).collect();
                Matrix::from_columns(field, nr, &cols)
            })
            .collect::<Result<Vec<_>>>()?;
        Module::new(pres.a.clone(), nr, action)
    }

    /// `ε_M: FUM → M`.
    pub fn counit(&mut self, m: &Module, label: &str) -> Result<(ObjId, Matrix)> {
        let um = self.forget(m, label)?;
        Ok((um, module_counit(&mut self.ctx, m, um)?))
    }

    /// `η_x: x → UFx`.
    pub fn unit(&mut self, x: ObjId) -> Result<Matrix> {
        let u = self.unit_elt.clone();
        self.ctx.eta_with(x, &u)
    }

    /// Checks that U is strict on this pair: `U(M ⊠ N)` is the bimodule `UM ⊗ UN`.
    fn strict_product(&mut self, m: &Module, n: &Module) -> Result<(Module, ObjId)> {
        let (um, un) = (self.forget(m, "M")?, self.forget(n, "N")?);
        let mn = self.box_product(m, n)?;
        let obj = self.forget(&mn, "M⊠N")?;
        if obj != self.ctx.tensor(um, un)? {
            return Err(Error::IllDefined { context: "U is not strictly monoidal on this pair".into() });
        }
        Ok((mn, obj))
    }

    /// `σ_{x,y}: F(x⊗y) → Fx ⊠ Fy`.
    pub fn sigma(&mut self, x: ObjId, y: ObjId) -> Result<Matrix> {
        let (fx, fy) = (self.free_module(x)?, self.free_module(y)?);
        let (tx, ty) = (self.ctx.t(x)?, self.ctx.t(y)?);
        let (fxfy, obj) = self.strict_product(&fx, &fy)?;
        let xy = self.ctx.tensor(x, y)?;
        let (ex, ey) = (self.unit(x)?, self.unit(y)?);
        let ee = self.ctx.cat.tensor_map((x, tx, &ex), (y, ty, &ey))?;
        let f_ee = self.ctx.t_map(xy, obj, &ee)?;
        module_counit(&mut self.ctx, &fxfy, obj)?.mul(&f_ee)
    }

    /// `υ = ε_R: F(R) → R`.
    pub fn upsilon(&mut self) -> Result<Matrix> {
        let i = self.unit_module()?;
        let (obj, eps) = self.counit(&i, "R")?;
        if obj != self.ctx.unit() {
            return Err(Error::IllDefined { context: "U does not preserve the unit strictly".into() });
        }
        Ok(eps)
    }
}

type Sides = Result<(Matrix, Matrix)>;

fn hexagon(adj: &mut MonoidalAdjunction, x: ObjId, y: ObjId, z: ObjId) -> Sides {
    let c = &mut adj.ctx;
    let (yz, xy) = (c.tensor(y, z)?, c.tensor(x, y)?);
    let (x_yz, xy_z) = (c.tensor(x, yz)?, c.tensor(xy, z)?);
    let (tx, ty, tz) = (c.t(x)?, c.t(y)?, c.t(z)?);
    let (t_yz, t_xy) = (c.t(yz)?, c.t(xy)?);
    let (tytz, txty) = (c.tensor(ty, tz)?, c.tensor(tx, ty)?);
    let (id_tx, id_tz) = (c.cat.identity(tx), c.cat.identity(tz));
    let s_yz = adj.sigma(y, z)?;
    let s_xy = adj.sigma(x, y)?;
    let s_x_yz = adj.sigma(x, yz)?;
    let s_xy_z = adj.sigma(xy, z)?;
    let c = &mut adj.ctx;
    let lhs = c.cat.assoc(tx, ty, tz)?.mul(&c.cat.tensor_map((tx, tx, &id_tx), (t_yz, tytz, &s_yz))?)?.mul(&s_x_yz)?;
    let a = c.cat.assoc(x, y, z)?;
    let rhs = c.cat.tensor_map((t_xy, txty, &s_xy), (tz, tz, &id_tz))?.mul(&s_xy_z)?.mul(&c.t_map(x_yz, xy_z, &a)?)?;
    Ok((lhs, rhs))
}

fn sigma_unit_left(adj: &mut MonoidalAdjunction, x: ObjId) -> Sides {
    let r = adj.ctx.unit();
    let (tr, tx) = (adj.ctx.t(r)?, adj.ctx.t(x)?);
    let rx = adj.ctx.tensor(r, x)?;
    let ups = adj.upsilon()?;
    let s = adj.sigma(r, x)?;
    let c = &mut adj.ctx;
    let id = c.cat.identity(tx);
    let lhs = c.cat.left_unitor(tx)?.mul(&c.cat.tensor_map((tr, r, &ups), (tx, tx, &id))?)?.mul(&s)?;
    let l = c.cat.left_unitor(x)?;
    Ok((lhs, c.t_map(rx, x, &l)?))
}

fn sigma_unit_right(adj: &mut MonoidalAdjunction, x: ObjId) -> Sides {
    let r = adj.ctx.unit();
    let (tr, tx) = (adj.ctx.t(r)?, adj.ctx.t(x)?);
    let xr = adj.ctx.tensor(x, r)?;
    let ups = adj.upsilon()?;
    let s = adj.sigma(x, r)?;
    let c = &mut adj.ctx;
    let id = c.cat.identity(tx);
    let lhs = c.cat.right_unitor(tx)?.mul(&c.cat.tensor_map((tx, tx, &id), (tr, r, &ups))?)?.mul(&s)?;
    let ru = c.cat.right_unitor(x)?;
    Ok((lhs, c.t_map(xr, x, &ru)?))
}

/// Coassociativity of σ (with associators) on all triples and both unit
/// squares on each object.
pub fn check_sigma(adj: &mut MonoidalAdjunction, tests: &[(String, ObjId)]) -> Report {
    let mut rep = Report::new();
    for (nx, x) in tests {
        for (ny, y) in tests {
            for (nz, z) in tests {
                let o = [nx.clone(), ny.clone(), nz.clone()];
                rep.push(Check::from_result("sigma-hexagon", &o, hexagon(adj, *x, *y, *z)));
            }
        }
    }
    for (n, x) in tests {
        rep.push(Check::from_result("sigma-unit-left", std::slice::from_ref(n), sigma_unit_left(adj, *x)));
        rep.push(Check::from_result("sigma-unit-right", std::slice::from_ref(n), sigma_unit_right(adj, *x)));
    }
    rep
}

/// `(ε_M ⊠ ε_N) ∘ σ_{UM,UN} = ε_{M⊠N} ∘ Fτ`.
fn counit_monoidal(adj: &mut MonoidalAdjunction, m: &Module, n: &Module) -> Sides {
    let (um, em) = adj.counit(m, "M")?;
    let (un, en) = adj.counit(n, "N")?;
    let (tm, tn) = (adj.ctx.t(um)?, adj.ctx.t(un)?);
    let s = adj.sigma(um, un)?;
    let lhs = adj.ctx.cat.tensor_map((tm, um, &em), (tn, un, &en))?.mul(&s)?;
    let (mn, obj) = adj.strict_product(m, n)?;
    Ok((lhs, module_counit(&mut adj.ctx, &mn, obj)?))
}

/// `τ ∘ (η_x ⊗ η_y) = Uσ_{x,y} ∘ η_{x⊗y}`.
fn unit_monoidal(adj: &mut MonoidalAdjunction, x: ObjId, y: ObjId) -> Sides {
    let (tx, ty) = (adj.ctx.t(x)?, adj.ctx.t(y)?);
    let (ex, ey) = (adj.unit(x)?, adj.unit(y)?);
    let lhs = adj.ctx.cat.tensor_map((x, tx, &ex), (y, ty, &ey))?;
    let xy = adj.ctx.tensor(x, y)?;
    let rhs = adj.sigma(x, y)?.mul(&adj.unit(xy)?)?;
    Ok((lhs, rhs))
}

/// `τ = U(ε_M ⊠ ε_N) ∘ Uσ_{UM,UN} ∘ η_{UM⊗UN}`, with τ the identity.
fn tau_recovered(adj: &mut MonoidalAdjunction, m: &Module, n: &Module) -> Sides {
    let (um, em) = adj.counit(m, "M")?;
    let (un, en) = adj.counit(n, "N")?;
    let (tm, tn) = (adj.ctx.t(um)?, adj.ctx.t(un)?);
    let mn = adj.ctx.tensor(um, un)?;
    let s = adj.sigma(um, un)?;
    let rhs = adj.ctx.cat.tensor_map((tm, um, &em), (tn, un, &en))?.mul(&s)?.mul(&adj.unit(mn)?)?;
    Ok((adj.ctx.cat.identity(mn), rhs))
}

/// The comonoidality equations of ε and η on all pairs of objects and of
/// modules, the converse formula for τ, and both triangle identities.
pub fn check_monoidal_adjunction(
    adj: &mut MonoidalAdjunction,
    tests: &[(String, ObjId)],
    modules: &[(String, Module)],
) -> Report {
    let mut rep = Report::new();
    for (nm, m) in modules {
        for (nn, n) in modules {
            let o = [nm.clone(), nn.clone()];
            rep.push(Check::from_result("adj-counit-monoidal", &o, counit_monoidal(adj, m, n)));
            rep.push(Check::from_result("tau-recovered", &o, tau_recovered(adj, m, n)));
        }
    }
    let r = ["R".to_string()];
    let unital = (|| {
        let i = adj.unit_module()?;
        let (_, eps) = adj.counit(&i, "R")?;
        Ok((adj.upsilon()?, eps))
    })();
    rep.push(Check::from_result("adj-counit-unital", &r, unital));
    for (nx, x) in tests {
        for (ny, y) in tests {
            rep.push(Check::from_result("adj-unit-monoidal", &[nx.clone(), ny.clone()], unit_monoidal(adj, *x, *y)));
        }
    }
    let unit_unital = (|| {
        let rr = adj.ctx.unit();
        Ok((adj.ctx.cat.identity(rr), adj.upsilon()?.mul(&adj.unit(rr)?)?))
    })();
    rep.push(Check::from_result("adj-unit-unital", &r, unit_unital));
    for (n, x) in tests {
        let tri = (|| {
            let fx = adj.free_module(*x)?;
            let tx = adj.ctx.t(*x)?;
            let (_, eps) = adj.counit(&fx, "F")?;
            let eta = adj.unit(*x)?;
            Ok((eps.mul(&adj.ctx.t_map(*x, tx, &eta)?)?, adj.ctx.cat.identity(tx)))
        })();
        rep.push(Check::from_result("adj-triangle-free", std::slice::from_ref(n), tri));
    }
    for (n, m) in modules {
        let tri = (|| {
            let (um, eps) = adj.counit(m, n)?;
            Ok((eps.mul(&adj.unit(um)?)?, adj.ctx.cat.identity(um)))
        })();
        rep.push(Check::from_result("adj-triangle-forget", std::slice::from_ref(n), tri));
    }
    rep
}

/// γ, π, μ, η rebuilt from the adjunction compared with the kernel formulas,
/// together with the σ and adjunction checks. Modules tested are the regular
/// module, the unit module, and the free modules on the test objects.
pub fn roundtrip(b: &BialgebroidData, tests: Option<&[String]>) -> Result<Report> {
    let pre = check_bgd(b);
    if !pre.passed() {
        return Err(Error::Precondition {
            equation: "bialgebroid axioms".into(),
            witness: pre.failed_names().join(", "),
        });
    }
    let mut adj = MonoidalAdjunction::new(b)?;
    let mut fam = adj.ctx.standard_family()?;
    if let Some(names) = tests {
        fam.retain(|(n, _)| names.contains(n));
    }
    let mut rep = check_sigma(&mut adj, &fam);
    let mut modules = vec![("A".to_string(), Module::regular(&adj.ctx.pres.a)), ("R".to_string(), adj.unit_module()?)];
    for (n, x) in &fam {
        modules.push((format!("F{n}"), adj.free_module(*x)?));
    }
    rep.extend(check_monoidal_adjunction(&mut adj, &fam, &modules));
    for (nx, x) in &fam {
        for (ny, y) in &fam {
            let o = [nx.clone(), ny.clone()];
            let sides = (|| Ok((adj.sigma(*x, *y)?, adj.ctx.gamma(*x, *y)?)))();
            rep.push(Check::from_result("gamma-match", &o, sides));
        }
    }
    let pi = (|| Ok((adj.upsilon()?, adj.ctx.pi()?)))();
    rep.push(Check::from_result("pi-match", &["R".to_string()], pi));
    for (n, x) in &fam {
        let o = [n.clone()];
        let mu = (|| {
            let fx = adj.free_module(*x)?;
            let (_, eps) = adj.counit(&fx, "F")?;
            Ok((eps, adj.ctx.mu(*x)?))
        })();
        rep.push(Check::from_result("mu-match", &o, mu));
        let eta = (|| Ok((adj.unit(*x)?, adj.ctx.eta(*x)?)))();
        rep.push(Check::from_result("eta-match", &o, eta));
    }
    Ok(rep)
}
